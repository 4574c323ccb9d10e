//! Characteristic-class calculus of a map `f: M^m -> P^n`.
//!
//! The cohomology of `M` is never modelled directly. Everything is reduced to
//! monomials `c_I(TM) * at^j` (`at = f^*a`), and the only numbers the engine
//! knows are the degrees
//!
//! ```text
//! xi(I) = integral over M of c_I(TM) * at^(m - weight(I)),   xi(()) = d,
//! ```
//!
//! which determine `f_*(c_I(TM)) = xi(I) * a^(weight(I) + kappa)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, GradedPolynomial, Monomial, MultiIndex, VariableId};
use crate::tables::{AbstractClass, TableError};

/// Exact value: a rational, or a polynomial in `d`, `xi_I` and named parameters.
pub type Scalar = GradedPolynomial;
/// Polynomial in `c_k(TM)` and `at`, capped at the source dimension.
pub type SourceClass = GradedPolynomial;
/// Polynomial in the target hyperplane class `a`, capped at the target dimension.
pub type TargetClass = GradedPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("need target dimension {n} > source dimension {m} >= 1")]
    BadDimensions { m: u32, n: u32 },
    #[error("missing xi entry for index ({0})")]
    MissingXi(String),
    #[error("xi entry for index ({0}) is not a scalar")]
    NonScalarXi(String),
    #[error("projecting a map with kappa = 0 would make kappa negative")]
    NegativeKappa,
    #[error("class lives at kappa = {class} but the map has kappa = {map}")]
    KappaMismatch { class: u32, map: u32 },
    #[error("{name} is only known through weight {valid}, source dimension is {m}")]
    InsufficientTruncation { name: String, valid: u32, m: u32 },
    #[error("expected a map of dimensions ({expected_m}, {expected_n}), got ({m}, {n})")]
    DimensionMismatch {
        expected_m: u32,
        expected_n: u32,
        m: u32,
        n: u32,
    },
    #[error("{0} is not a class on the source")]
    NotSourceClass(String),
    #[error("{0} is not a class on the target")]
    NotTargetClass(String),
    #[error("Gysin table for a locus of dimension {dim} is missing c_({index})")]
    IncompleteGysinTable { dim: u32, index: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// ξ-data supplied by the caller.
#[derive(Clone, Debug)]
pub enum XiInput {
    /// Every entry is its own atom: `d`, `xi1`, `xi2`, `xi01`, ...
    Symbolic,
    Values(BTreeMap<MultiIndex, Scalar>),
}

/// The indices `I` a source of dimension `m` needs: weight at most `m`.
pub fn required_indices(m: u32) -> Vec<MultiIndex> {
    MultiIndex::up_to_weight(m, m)
}

fn index_label(i: &MultiIndex) -> String {
    if i.is_empty() {
        "d".into()
    } else {
        format!("xi{}", i.digits())
    }
}

/// A map `M^m -> P^n` known through its ξ-table.
#[derive(Clone, Debug)]
pub struct MapContext {
    m: u32,
    n: u32,
    xi: Arc<BTreeMap<MultiIndex, Scalar>>,
    /// `c_1(f) .. c_m(f)`.
    quotient: Vec<SourceClass>,
}

impl MapContext {
    /// Validated context with `n > m >= 1`.
    pub fn new(m: u32, n: u32, xi: XiInput) -> Result<Self, ChernError> {
        if m < 1 || n <= m {
            return Err(ChernError::BadDimensions { m, n });
        }
        Self::build(m, n, xi)
    }

    pub fn symbolic(m: u32, n: u32) -> Result<Self, ChernError> {
        Self::new(m, n, XiInput::Symbolic)
    }

    fn build(m: u32, n: u32, xi: XiInput) -> Result<Self, ChernError> {
        let needed = required_indices(m);
        let table: BTreeMap<MultiIndex, Scalar> = match xi {
            XiInput::Symbolic => needed
                .into_iter()
                .map(|i| (i.clone(), GradedPolynomial::xi(i)))
                .collect(),
            XiInput::Values(values) => {
                let mut table = BTreeMap::new();
                for i in needed {
                    let v = values
                        .get(&i)
                        .ok_or_else(|| ChernError::MissingXi(index_label(&i)))?;
                    if !v.is_scalar() {
                        return Err(ChernError::NonScalarXi(index_label(&i)));
                    }
                    table.insert(i, v.clone().without_cap());
                }
                table
            }
        };
        let mut ctx = MapContext {
            m,
            n,
            xi: Arc::new(table),
            quotient: Vec::new(),
        };
        ctx.quotient = ctx.compute_quotient_chern()?;
        Ok(ctx)
    }

    pub fn source_dim(&self) -> u32 {
        self.m
    }

    pub fn target_dim(&self) -> u32 {
        self.n
    }

    pub fn kappa(&self) -> u32 {
        self.n - self.m
    }

    pub fn xi_table(&self) -> &BTreeMap<MultiIndex, Scalar> {
        &self.xi
    }

    /// `xi(I)`; zero for indices of weight above `m`.
    pub fn xi(&self, index: &MultiIndex) -> Scalar {
        self.xi
            .get(index)
            .cloned()
            .unwrap_or_else(GradedPolynomial::zero)
    }

    pub fn degree(&self) -> Scalar {
        self.xi(&MultiIndex::empty())
    }

    pub fn require_dims(&self, m: u32, n: u32) -> Result<(), ChernError> {
        if (self.m, self.n) != (m, n) {
            return Err(ChernError::DimensionMismatch {
                expected_m: m,
                expected_n: n,
                m: self.m,
                n: self.n,
            });
        }
        Ok(())
    }

    /// `at = f^*a`, as a source class.
    pub fn at(&self) -> SourceClass {
        GradedPolynomial::var(VariableId::SourceHyperplane).with_cap(self.m)
    }

    pub fn at_pow(&self, k: u32) -> SourceClass {
        self.at().pow(k)
    }

    /// `c_k(TM)`.
    pub fn source_chern(&self, k: u32) -> SourceClass {
        GradedPolynomial::var(VariableId::SourceChern(k)).with_cap(self.m)
    }

    /// `1 + c_1(TM) + ... + c_m(TM)`.
    pub fn total_source_chern(&self) -> SourceClass {
        (1..=self.m).fold(GradedPolynomial::one().with_cap(self.m), |acc, k| {
            acc + self.source_chern(k)
        })
    }

    /// A source class with the context's cap applied.
    pub fn source(&self, p: GradedPolynomial) -> SourceClass {
        p.with_cap(self.m)
    }

    fn compute_quotient_chern(&self) -> Result<Vec<SourceClass>, ChernError> {
        let pulled = (GradedPolynomial::one() + self.at()).pow(self.n + 1);
        let inverse = self.total_source_chern().invert_unit_series(self.m)?;
        let total = pulled.try_mul(&inverse)?;
        Ok((1..=self.m).map(|k| total.component(k)).collect())
    }

    /// `c_1(f), ..., c_m(f)` from `c(f) = (1 + at)^(n+1) / c(TM)`.
    pub fn quotient_chern(&self) -> &[SourceClass] {
        &self.quotient
    }

    /// `c_k(f)`; zero above the source dimension.
    pub fn quotient_chern_class(&self, k: u32) -> SourceClass {
        self.quotient
            .get(k as usize - 1)
            .cloned()
            .unwrap_or_else(|| GradedPolynomial::zero().with_cap(self.m))
    }

    /// Gysin map: `c_I(TM) * at^j` goes to `xi(I) * a^(weight(I) + j + kappa)`.
    pub fn pushforward(&self, x: &SourceClass) -> Result<TargetClass, ChernError> {
        let kappa = self.kappa();
        let mut terms = Vec::new();
        for (mono, coeff) in x.terms() {
            let (scalar, rest) = mono.split_scalar();
            let (index, j) = rest
                .as_source_monomial()
                .ok_or_else(|| ChernError::NotSourceClass(x.to_string()))?;
            let exponent = index.weight() + j + kappa;
            if exponent > self.n || index.weight() > self.m {
                continue;
            }
            let image = GradedPolynomial::from_term(scalar, coeff.clone())
                * self.xi(&index)
                * GradedPolynomial::var(VariableId::TargetHyperplane).pow(exponent);
            terms.push(image);
        }
        Ok(terms
            .into_iter()
            .fold(GradedPolynomial::zero(), |acc, t| acc + t)
            .with_cap(self.n))
    }

    /// `a^k` goes to `at^k`, vanishing above the source dimension.
    pub fn pullback(&self, y: &TargetClass) -> Result<SourceClass, ChernError> {
        let mut out = GradedPolynomial::zero().with_cap(self.m);
        for (mono, coeff) in y.terms() {
            let (scalar, rest) = mono.split_scalar();
            let k = rest.exponent(&VariableId::TargetHyperplane);
            if rest != Monomial::power(VariableId::TargetHyperplane, k) {
                return Err(ChernError::NotTargetClass(y.to_string()));
            }
            out = out
                + GradedPolynomial::from_term(
                    scalar.mul(&Monomial::power(VariableId::SourceHyperplane, k)),
                    coeff.clone(),
                );
        }
        Ok(out)
    }

    /// `s_I(f) = f_*(c_1(f)^i1 c_2(f)^i2 ...)`.
    pub fn landweber_novikov(&self, index: &MultiIndex) -> Result<TargetClass, ChernError> {
        let monomial = index
            .exponents()
            .iter()
            .enumerate()
            .fold(GradedPolynomial::one().with_cap(self.m), |acc, (k, &e)| {
                acc * self.quotient_chern_class(k as u32 + 1).pow(e)
            });
        self.pushforward(&monomial)
    }

    /// Evaluates a universal polynomial at `kappa` on this map: `c_k -> c_k(f)`,
    /// `s_I -> f^* s_I(f)`.
    pub fn evaluate_polynomial(
        &self,
        body: &GradedPolynomial,
        kappa: u32,
    ) -> Result<SourceClass, ChernError> {
        if kappa != self.kappa() {
            return Err(ChernError::KappaMismatch {
                class: kappa,
                map: self.kappa(),
            });
        }
        let mut assignment = BTreeMap::new();
        for v in body.variables() {
            let image = match &v {
                VariableId::QuotientChern(k) => self.quotient_chern_class(*k),
                VariableId::LandweberNovikov(i) => self.pullback(&self.landweber_novikov(i)?)?,
                _ => continue,
            };
            assignment.insert(v, image);
        }
        let out = body.substitute(&assignment, Some(self.m))?;
        Ok(out)
    }

    pub fn evaluate(&self, class: &AbstractClass) -> Result<SourceClass, ChernError> {
        self.evaluate_polynomial(&class.body, class.kappa)
    }

    /// Degree of the top-weight part of `x`; lower-weight terms integrate to 0.
    pub fn integrate(&self, x: &SourceClass) -> Result<Scalar, ChernError> {
        let mut total = GradedPolynomial::zero();
        for (mono, coeff) in x.terms() {
            let (scalar, rest) = mono.split_scalar();
            let (index, j) = rest
                .as_source_monomial()
                .ok_or_else(|| ChernError::NotSourceClass(x.to_string()))?;
            if index.weight() + j != self.m {
                continue;
            }
            total = total + GradedPolynomial::from_term(scalar, coeff.clone()) * self.xi(&index);
        }
        Ok(total.without_cap())
    }

    /// Degree `integral of x * at^(m - w)` of a class of weight `w`.
    pub fn degree_of(&self, x: &SourceClass, weight: u32) -> Result<Scalar, ChernError> {
        self.integrate(&(x * self.at_pow(self.m.saturating_sub(weight))))
    }

    /// Composition with a generic linear projection `P^n --> P^(n-1)`: same ξ-table.
    pub fn project(&self) -> Result<MapContext, ChernError> {
        if self.n == self.m {
            return Err(ChernError::NegativeKappa);
        }
        let mut ctx = MapContext {
            m: self.m,
            n: self.n - 1,
            xi: Arc::clone(&self.xi),
            quotient: Vec::new(),
        };
        ctx.quotient = ctx.compute_quotient_chern()?;
        Ok(ctx)
    }

    /// `integral over M of c(TM) * series(f)`: the Euler characteristic measured
    /// by a Segre-SM series.
    pub fn weighted_euler(&self, series: &AbstractClass) -> Result<Scalar, ChernError> {
        if let Some(valid) = series.valid_to_weight {
            if valid < self.m {
                return Err(ChernError::InsufficientTruncation {
                    name: series.name.to_string(),
                    valid,
                    m: self.m,
                });
            }
        }
        let evaluated = self.evaluate(series)?;
        self.integrate(&(self.total_source_chern() * evaluated))
    }
}

/// Gysin images `i_*(c_J(TZ))` of a smooth locus `i: Z -> M`, as source classes
/// of an ambient map `g: M -> P^n`.
///
/// Classes on `Z` are written in the same variables as source classes, with
/// `c_k` read as `c_k(TZ)` and `at` as the restriction of `at`. They push
/// forward by the projection formula `i_*(at^p * y) = at^p * i_*(y)`.
#[derive(Clone, Debug)]
pub struct GysinTable {
    ambient: MapContext,
    locus_dim: u32,
    images: BTreeMap<MultiIndex, SourceClass>,
}

impl GysinTable {
    /// Needs an image for every Chern monomial of `Z` of weight at most `dim Z`.
    pub fn new(
        ambient: MapContext,
        locus_dim: u32,
        images: BTreeMap<MultiIndex, SourceClass>,
    ) -> Result<Self, ChernError> {
        for i in required_indices(locus_dim) {
            if !images.contains_key(&i) {
                return Err(ChernError::IncompleteGysinTable {
                    dim: locus_dim,
                    index: i.digits(),
                });
            }
        }
        let images = images
            .into_iter()
            .map(|(i, x)| (i, ambient.source(x)))
            .collect();
        Ok(GysinTable {
            ambient,
            locus_dim,
            images,
        })
    }

    pub fn ambient(&self) -> &MapContext {
        &self.ambient
    }

    pub fn locus_dim(&self) -> u32 {
        self.locus_dim
    }

    pub fn image(&self, index: &MultiIndex) -> SourceClass {
        self.images
            .get(index)
            .cloned()
            .unwrap_or_else(|| GradedPolynomial::zero().with_cap(self.ambient.source_dim()))
    }

    /// `i_*` of a class on the locus.
    pub fn pushforward(&self, y: &GradedPolynomial) -> Result<SourceClass, ChernError> {
        let mut out = GradedPolynomial::zero().with_cap(self.ambient.source_dim());
        for (mono, coeff) in y.terms() {
            let (scalar, rest) = mono.split_scalar();
            let (index, p) = rest
                .as_source_monomial()
                .ok_or_else(|| ChernError::NotSourceClass(y.to_string()))?;
            if index.weight() + p > self.locus_dim {
                continue;
            }
            out = out
                + GradedPolynomial::from_term(scalar, coeff.clone())
                    * self.ambient.at_pow(p)
                    * self.image(&index);
        }
        Ok(out)
    }

    /// The composite `Z -> M -> P^n` as a map context of its own.
    pub fn induced_context(&self) -> Result<MapContext, ChernError> {
        let mut xi = BTreeMap::new();
        for i in required_indices(self.locus_dim) {
            let top = self.image(&i) * self.ambient.at_pow(self.locus_dim - i.weight());
            xi.insert(i, self.ambient.integrate(&top)?);
        }
        MapContext::build(
            self.locus_dim,
            self.ambient.target_dim(),
            XiInput::Values(xi),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, ParseOptions};
    use crate::tables::{ssm_series, thom_polynomial, ClassName};

    fn src(text: &str) -> GradedPolynomial {
        parse_polynomial(text, &ParseOptions::source()).unwrap()
    }

    fn scalar(text: &str) -> GradedPolynomial {
        parse_polynomial(text, &ParseOptions::default()).unwrap()
    }

    fn numeric(m: u32, n: u32, values: &[(&str, i64)]) -> MapContext {
        let xi = values
            .iter()
            .map(|&(k, v)| {
                let idx = if k == "d" {
                    MultiIndex::empty()
                } else {
                    MultiIndex::from_digits(k).unwrap()
                };
                (idx, GradedPolynomial::integer(v))
            })
            .collect();
        MapContext::new(m, n, XiInput::Values(xi)).unwrap()
    }

    fn roman() -> MapContext {
        numeric(2, 3, &[("d", 4), ("1", 6), ("2", 9), ("01", 3)])
    }

    fn veronese() -> MapContext {
        numeric(
            3,
            4,
            &[
                ("d", 8),
                ("1", 16),
                ("2", 32),
                ("3", 64),
                ("01", 12),
                ("11", 24),
                ("001", 4),
            ],
        )
    }

    #[test]
    fn context_validation() {
        assert_eq!(
            MapContext::symbolic(2, 2).unwrap_err(),
            ChernError::BadDimensions { m: 2, n: 2 }
        );
        let mut partial = BTreeMap::new();
        partial.insert(MultiIndex::empty(), GradedPolynomial::integer(4));
        assert_eq!(
            MapContext::new(2, 3, XiInput::Values(partial)).unwrap_err(),
            ChernError::MissingXi("xi1".into())
        );
        let sym = MapContext::symbolic(2, 3).unwrap();
        let atoms: Vec<String> = sym.xi_table().values().map(|v| v.to_string()).collect();
        assert_eq!(atoms, ["d", "xi1", "xi2", "xi01"]);
        assert_eq!(
            veronese().xi(&MultiIndex::from_digits("001").unwrap()),
            GradedPolynomial::integer(4)
        );
        assert_eq!(roman().kappa(), 1);
    }

    #[test]
    fn quotient_classes() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        let c = sym.quotient_chern();
        assert_eq!(c[0], src("4*at - c1"));
        assert_eq!(c[1], src("6*at^2 - 4*at*c1 + c1^2 - c2"));
        let three = MapContext::symbolic(3, 4).unwrap();
        assert_eq!(three.quotient_chern()[0], src("5*at - c1"));
        assert_eq!(three.quotient_chern().len(), 3);
    }

    #[test]
    fn quotient_of_projective_space_vanishes() {
        // the identity of P^2: c(TM) = (1+at)^3 and the normal bundle is trivial
        let ctx = MapContext::symbolic(2, 3).unwrap().project().unwrap();
        let mut asg = BTreeMap::new();
        asg.insert(VariableId::SourceChern(1), src("3*at"));
        asg.insert(VariableId::SourceChern(2), src("3*at^2"));
        asg.insert(VariableId::SourceHyperplane, src("at"));
        for c in ctx.quotient_chern() {
            assert!(c.substitute(&asg, Some(2)).unwrap().is_zero(), "{c}");
        }
    }

    #[test]
    fn pushforward_examples() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        assert_eq!(
            sym.pushforward(&GradedPolynomial::one()).unwrap(),
            scalar("d*a")
        );
        assert_eq!(sym.pushforward(&src("c1")).unwrap(), scalar("xi1*a^2"));
        let x = src("c1*at + 2*c2");
        assert_eq!(
            sym.pushforward(&(&sym.at() * &x)).unwrap(),
            scalar("a") * sym.pushforward(&x).unwrap()
        );
        assert!(sym.pushforward(&src("c1*at^2")).unwrap().is_zero());
    }

    #[test]
    fn pullback_examples() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        assert_eq!(sym.pullback(&scalar("a")).unwrap(), src("at"));
        assert!(sym.pullback(&scalar("a^3")).unwrap().is_zero());
        assert_eq!(sym.pullback(&scalar("d*a")).unwrap(), scalar("d*at"));
        assert!(sym.pullback(&src("c1")).is_err());
    }

    #[test]
    fn landweber_novikov_classes() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        let s = |d: &str| {
            sym.landweber_novikov(&MultiIndex::from_digits(d).unwrap())
                .unwrap()
        };
        assert_eq!(s(""), scalar("d*a"));
        assert_eq!(s("1"), scalar("(4*d - xi1)*a^2"));
        assert_eq!(s("2"), scalar("(16*d - 8*xi1 + xi2)*a^3"));
        assert_eq!(s("01"), scalar("(6*d - 4*xi1 + xi2 - xi01)*a^3"));
    }

    #[test]
    fn evaluation_of_tables() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        let a1 = thom_polynomial(ClassName::A1, 1).unwrap();
        assert_eq!(
            sym.evaluate(a1).unwrap(),
            src("6*at^2 - 4*at*c1 + c1^2 - c2")
        );
        let a1_0 = thom_polynomial(ClassName::A1, 0).unwrap();
        assert_eq!(
            sym.evaluate(a1_0).unwrap_err(),
            ChernError::KappaMismatch { class: 0, map: 1 }
        );
        let triple = thom_polynomial(ClassName::A0Cubed, 1).unwrap();
        assert_eq!(
            roman()
                .integrate(&roman().evaluate(triple).unwrap())
                .unwrap(),
            GradedPolynomial::integer(3)
        );
    }

    #[test]
    fn double_points_of_a_smooth_hypersurface_vanish() {
        // M a smooth degree-d hypersurface in P^4: xi from c(TM) = (1+at)^5/(1+d*at)
        let d = scalar("d");
        let xi: BTreeMap<_, _> = [
            ("", scalar("d")),
            ("1", scalar("d*(5 - d)")),
            ("2", scalar("d*(5 - d)^2")),
            ("01", scalar("d*(10 - 5*d + d^2)")),
            ("3", scalar("d*(5 - d)^3")),
            ("11", scalar("d*(5 - d)*(10 - 5*d + d^2)")),
            ("001", scalar("d*(10 - 10*d + 5*d^2 - d^3)")),
        ]
        .into_iter()
        .map(|(k, v)| (MultiIndex::from_digits(k).unwrap(), v))
        .collect();
        let ctx = MapContext::new(3, 4, XiInput::Values(xi)).unwrap();
        let dp = ctx
            .evaluate(thom_polynomial(ClassName::A0Squared, 1).unwrap())
            .unwrap();
        // s0 - c1(f) = d*at - (5*at - c1) only vanishes after the adjunction c1 = (5-d)*at
        let mut asg = BTreeMap::new();
        asg.insert(
            VariableId::SourceChern(1),
            (GradedPolynomial::integer(5) - &d) * ctx.at(),
        );
        asg.insert(VariableId::SourceHyperplane, ctx.at());
        assert!(dp.substitute(&asg, Some(3)).unwrap().is_zero());
        for x in [src("1"), src("c1*at"), src("c1^2*at"), src("c3")] {
            let deg = ctx.integrate(&(&dp * &ctx.source(x))).unwrap();
            assert!(deg.is_zero(), "{deg}");
        }
    }

    #[test]
    fn integration_examples() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        assert_eq!(sym.integrate(&sym.at_pow(2)).unwrap(), scalar("d"));
        assert_eq!(sym.integrate(&src("c2")).unwrap(), scalar("xi01"));
        assert!(sym.integrate(&src("c1")).unwrap().is_zero());
        let three = MapContext::symbolic(3, 4).unwrap();
        assert_eq!(three.integrate(&src("c1*at^2")).unwrap(), scalar("xi1"));
        // degree = a^n coefficient of the pushforward
        let x = three.source(src("3*c1*at^2 - c1*c2 + 7*at^3 + c2"));
        let pushed = three.pushforward(&x).unwrap();
        let top = Monomial::power(VariableId::TargetHyperplane, 4);
        let coeff: GradedPolynomial = pushed
            .terms()
            .filter_map(|(m, c)| {
                let (s, rest) = m.split_scalar();
                (rest == top).then(|| GradedPolynomial::from_term(s, c.clone()))
            })
            .fold(GradedPolynomial::zero(), |a, b| a + b);
        assert_eq!(three.integrate(&x).unwrap(), coeff);
    }

    #[test]
    fn projection() {
        let sym = MapContext::symbolic(2, 3).unwrap();
        let g = sym.project().unwrap();
        assert_eq!((g.source_dim(), g.target_dim(), g.kappa()), (2, 2, 0));
        assert_eq!(g.quotient_chern()[0], src("3*at - c1"));
        assert_eq!(g.xi_table(), sym.xi_table());
        assert_eq!(g.project().unwrap_err(), ChernError::NegativeKappa);
        let three = MapContext::symbolic(3, 4).unwrap().project().unwrap();
        assert_eq!(three.quotient_chern()[0], src("4*at - c1"));
    }

    #[test]
    fn weighted_euler_examples() {
        let g = MapContext::symbolic(2, 3).unwrap().project().unwrap();
        let a1bar0 = ssm_series(ClassName::A1Closure, 0).unwrap();
        assert_eq!(
            g.weighted_euler(a1bar0).unwrap(),
            scalar("-9*d + 9*xi1 - 2*xi2")
        );
        let a1bar1 = ssm_series(ClassName::A1Closure, 1).unwrap();
        assert_eq!(
            veronese().weighted_euler(a1bar1).unwrap(),
            GradedPolynomial::integer(-20)
        );
        let dbl = ssm_series(ClassName::DoubleImage, 1).unwrap();
        assert_eq!(
            roman().weighted_euler(dbl).unwrap(),
            GradedPolynomial::integer(4)
        );
        let short = ssm_series(ClassName::A0SquaredClosure, 1).unwrap();
        assert_eq!(
            veronese().weighted_euler(short).unwrap_err(),
            ChernError::InsufficientTruncation {
                name: "A0^2bar".into(),
                valid: 2,
                m: 3
            }
        );
    }

    #[test]
    fn gysin_table_of_a_hyperplane_section() {
        // Z = M cut by a hyperplane: i_*(1) = at, i_*(c_J(TZ)) from c(TZ) = c(TM)/(1+at).
        let ctx = MapContext::symbolic(2, 3).unwrap();
        let mut images = BTreeMap::new();
        images.insert(MultiIndex::empty(), src("at"));
        images.insert(MultiIndex::unit(1), src("at*(c1 - at)"));
        let table = GysinTable::new(ctx.clone(), 1, images).unwrap();
        let induced = table.induced_context().unwrap();
        assert_eq!((induced.source_dim(), induced.target_dim()), (1, 3));
        assert_eq!(induced.degree(), scalar("d"));
        assert_eq!(induced.xi(&MultiIndex::unit(1)), scalar("xi1 - d"));
        assert_eq!(
            table.pushforward(&src("2*at + c1")).unwrap(),
            src("2*at^2 + at*c1 - at^2")
        );
        assert!(matches!(
            GysinTable::new(ctx, 1, BTreeMap::new()),
            Err(ChernError::IncompleteGysinTable { .. })
        ));
    }
}
