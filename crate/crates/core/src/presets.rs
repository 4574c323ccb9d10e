//! ξ-data of standard examples.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{GradedPolynomial, MultiIndex, VariableId};
use crate::chern::{required_indices, ChernError, MapContext, Scalar, XiInput};

/// Surfaces in P^3 or 3-folds in P^4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Surface,
    Threefold,
}

impl Kind {
    /// `(m, n)` of the normalization map.
    pub fn dims(self) -> (u32, u32) {
        match self {
            Kind::Surface => (2, 3),
            Kind::Threefold => (3, 4),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Surface => "surface",
            Kind::Threefold => "threefold",
        }
    }

    pub fn indices(self) -> Vec<MultiIndex> {
        required_indices(self.dims().0)
    }

    /// `d, xi1, ...` in canonical order.
    pub fn xi_keys(self) -> Vec<String> {
        self.indices().iter().map(xi_key).collect()
    }

    pub fn symbolic_context(self) -> MapContext {
        let (m, n) = self.dims();
        MapContext::symbolic(m, n).expect("valid dimensions")
    }

    pub fn context(self, xi: BTreeMap<MultiIndex, Scalar>) -> Result<MapContext, ChernError> {
        let (m, n) = self.dims();
        MapContext::new(m, n, XiInput::Values(xi))
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "surface" => Ok(Kind::Surface),
            "threefold" => Ok(Kind::Threefold),
            other => Err(format!(
                "unknown kind {other:?}; expected surface or threefold"
            )),
        }
    }
}

/// `d` for the empty index, `xi<digits>` otherwise.
pub fn xi_key(index: &MultiIndex) -> String {
    if index.is_empty() {
        "d".into()
    } else {
        format!("xi{}", index.digits())
    }
}

pub fn parse_xi_key(key: &str) -> Option<MultiIndex> {
    if key == "d" {
        return Some(MultiIndex::empty());
    }
    let digits = key.strip_prefix("xi")?;
    let index = MultiIndex::from_digits(digits)?;
    // reject non-canonical spellings such as xi10 or xi0
    (!index.is_empty() && index.digits() == digits).then_some(index)
}

/// ξ-data of `M^m` whose relevant cohomology is spanned by powers of one class
/// `h`: `integral of h^m = top`, `f^*a = lambda * h`, `c_k(TM) = chern[k-1] * h^k`.
///
/// Then `xi(I) = top * lambda^(m - |I|) * prod chern[k-1]^(i_k)`.
pub fn single_generator_xi(
    m: u32,
    top: &Scalar,
    lambda: &Scalar,
    chern: &[Scalar],
) -> BTreeMap<MultiIndex, Scalar> {
    required_indices(m)
        .into_iter()
        .map(|i| {
            let chern_part = i
                .exponents()
                .iter()
                .enumerate()
                .fold(GradedPolynomial::one(), |acc, (k, &e)| {
                    acc * chern[k].pow(e)
                });
            let value = top * lambda.pow(m - i.weight()) * chern_part;
            (i, value)
        })
        .collect()
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * i64::from(n - j) / i64::from(j + 1))
}

/// `P^m` embedded by `O(e)` and projected generically to `P^(m+1)`:
/// `c(TM) = (1+h)^(m+1)`, `f^*a = e*h`, `integral of h^m = 1`.
pub fn veronese_xi(m: u32, e: i64) -> BTreeMap<MultiIndex, Scalar> {
    let chern: Vec<Scalar> = (1..=m)
        .map(|k| GradedPolynomial::integer(binomial(m + 1, k)))
        .collect();
    single_generator_xi(
        m,
        &GradedPolynomial::one(),
        &GradedPolynomial::integer(e),
        &chern,
    )
}

/// A smooth hypersurface of degree `d` in `P^(m+1)`, by adjunction:
/// `c(TM) = (1+h)^(m+2) / (1+d*h)` with `h = f^*a`, `integral of h^m = d`.
/// `d` may be a number or the atom `d`.
pub fn smooth_hypersurface_xi(m: u32, d: &Scalar) -> BTreeMap<MultiIndex, Scalar> {
    single_generator_xi(
        m,
        d,
        &GradedPolynomial::one(),
        &smooth_hypersurface_chern(m, d),
    )
}

/// `gamma_k` with `c_k(TM) = gamma_k * at^k` on a smooth hypersurface of degree `d`.
pub fn smooth_hypersurface_chern(m: u32, d: &Scalar) -> Vec<Scalar> {
    (1..=m)
        .map(|k| {
            (0..=k).fold(GradedPolynomial::zero(), |acc, j| {
                acc + GradedPolynomial::integer(binomial(m + 2, k - j)) * (-d).pow(j)
            })
        })
        .collect()
}

/// Reduces a source class of a smooth hypersurface to a multiple of a power of `at`.
pub fn reduce_on_hypersurface(
    x: &GradedPolynomial,
    m: u32,
    d: &Scalar,
) -> Result<GradedPolynomial, crate::algebra::AlgebraError> {
    let at = GradedPolynomial::var(VariableId::SourceHyperplane);
    let mut assignment: BTreeMap<VariableId, GradedPolynomial> = smooth_hypersurface_chern(m, d)
        .into_iter()
        .zip(1..)
        .map(|(g, k)| (VariableId::SourceChern(k), g * at.pow(k)))
        .collect();
    assignment.insert(VariableId::SourceHyperplane, at);
    x.substitute(&assignment, Some(m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetName {
    VeroneseP3,
    RomanSurface,
    SmoothSurface,
    SmoothThreefold,
}

impl PresetName {
    pub const ALL: [PresetName; 4] = [
        PresetName::VeroneseP3,
        PresetName::RomanSurface,
        PresetName::SmoothSurface,
        PresetName::SmoothThreefold,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresetName::VeroneseP3 => "veronese-p3",
            PresetName::RomanSurface => "roman-surface",
            PresetName::SmoothSurface => "smooth-surface",
            PresetName::SmoothThreefold => "smooth-threefold",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            PresetName::RomanSurface | PresetName::SmoothSurface => Kind::Surface,
            PresetName::VeroneseP3 | PresetName::SmoothThreefold => Kind::Threefold,
        }
    }

    pub fn needs_degree(self) -> bool {
        matches!(
            self,
            PresetName::SmoothSurface | PresetName::SmoothThreefold
        )
    }

    pub fn description(self) -> &'static str {
        match self {
            PresetName::VeroneseP3 => "P^3 by quadrics, projected to P^4",
            PresetName::RomanSurface => "Steiner's Roman surface: P^2 by conics, projected to P^3",
            PresetName::SmoothSurface => "smooth surface of degree D in P^3",
            PresetName::SmoothThreefold => "smooth 3-fold of degree D in P^4",
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PresetName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PresetName::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown preset {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PresetError {
    #[error("preset {0} needs --degree")]
    MissingDegree(PresetName),
    #[error("preset {0} takes no degree")]
    UnexpectedDegree(PresetName),
}

/// ξ-data of a preset. `degree` is required exactly for the smooth presets.
pub fn preset_xi(
    name: PresetName,
    degree: Option<&Scalar>,
) -> Result<BTreeMap<MultiIndex, Scalar>, PresetError> {
    match (name, degree) {
        (PresetName::VeroneseP3, None) => Ok(veronese_xi(3, 2)),
        (PresetName::RomanSurface, None) => Ok(veronese_xi(2, 2)),
        (PresetName::SmoothSurface, Some(d)) => Ok(smooth_hypersurface_xi(2, d)),
        (PresetName::SmoothThreefold, Some(d)) => Ok(smooth_hypersurface_xi(3, d)),
        (p, None) => Err(PresetError::MissingDegree(p)),
        (p, Some(_)) => Err(PresetError::UnexpectedDegree(p)),
    }
}

pub fn preset_context(
    name: PresetName,
    degree: Option<&Scalar>,
) -> Result<MapContext, PresetError> {
    let xi = preset_xi(name, degree)?;
    Ok(name.kind().context(xi).expect("preset ξ-data is complete"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::form;

    fn values(xi: &BTreeMap<MultiIndex, Scalar>) -> Vec<String> {
        xi.values().map(|v| v.to_string()).collect()
    }

    #[test]
    fn veronese_threefold() {
        let xi = preset_xi(PresetName::VeroneseP3, None).unwrap();
        let keys: Vec<String> = xi.keys().map(xi_key).collect();
        assert_eq!(keys, ["d", "xi1", "xi2", "xi01", "xi3", "xi11", "xi001"]);
        assert_eq!(values(&xi), ["8", "16", "32", "12", "64", "24", "4"]);
    }

    #[test]
    fn roman() {
        let xi = preset_xi(PresetName::RomanSurface, None).unwrap();
        assert_eq!(values(&xi), ["4", "6", "9", "3"]);
    }

    #[test]
    fn quintic_surface() {
        let xi = smooth_hypersurface_xi(2, &GradedPolynomial::integer(5));
        assert_eq!(values(&xi), ["5", "-5", "5", "55"]);
    }

    #[test]
    fn symbolic_adjunction() {
        let d = form("d");
        let xi = smooth_hypersurface_xi(3, &d);
        assert_eq!(xi[&MultiIndex::unit(1)], form("d*(5 - d)"));
        assert_eq!(
            xi[&MultiIndex::unit(3)],
            form("d*(10 - 10*d + 5*d^2 - d^3)")
        );
        assert_eq!(xi[&MultiIndex::empty()], d);
    }

    #[test]
    fn degree_rules() {
        let two = GradedPolynomial::integer(2);
        assert_eq!(
            preset_xi(PresetName::SmoothSurface, None).unwrap_err(),
            PresetError::MissingDegree(PresetName::SmoothSurface)
        );
        assert!(preset_xi(PresetName::RomanSurface, Some(&two)).is_err());
        assert_eq!(
            "smooth-threefold".parse::<PresetName>(),
            Ok(PresetName::SmoothThreefold)
        );
        assert!("cubic".parse::<PresetName>().is_err());
    }

    #[test]
    fn xi_keys() {
        assert_eq!(Kind::Surface.xi_keys(), ["d", "xi1", "xi2", "xi01"]);
        assert_eq!(parse_xi_key("xi001"), Some(MultiIndex::unit(3)));
        assert_eq!(parse_xi_key("xi10"), None);
        assert_eq!(parse_xi_key("xi"), None);
        assert_eq!(parse_xi_key("d"), Some(MultiIndex::empty()));
    }
}
