//! Variables of the graded rings and their weights.

use std::cmp::Ordering;
use std::fmt;

/// Exponent sequence `(i1, i2, ...)` indexing a Chern monomial `c1^i1 c2^i2 ...`.
///
/// Trailing zeros are trimmed, so the empty index is the constant monomial.
/// Ordering is by weight first, then reverse-lexicographic, which lists
/// `(), (1), (2), (0,1), (3), (1,1), (0,0,1)` in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        MultiIndex(exponents)
    }

    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    /// The index of the single class `c_k`.
    pub fn unit(k: u32) -> Self {
        assert!(k >= 1, "Chern classes are indexed from 1");
        let mut e = vec![0; k as usize];
        e[k as usize - 1] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum_k k * i_k`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &e)| (k as u32 + 1) * e)
            .sum()
    }

    /// Exponent of `c_k`.
    pub fn exponent(&self, k: u32) -> u32 {
        self.0.get(k as usize - 1).copied().unwrap_or(0)
    }

    /// Every index of weight at most `max_weight` using only `c_1 .. c_max_part`.
    pub fn up_to_weight(max_weight: u32, max_part: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = vec![0u32; max_part as usize];
        fn rec(k: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if k == current.len() {
                out.push(MultiIndex::new(current.clone()));
                return;
            }
            let part = k as u32 + 1;
            let mut e = 0;
            while e * part <= remaining {
                current[k] = e;
                rec(k + 1, remaining - e * part, current, out);
                e += 1;
            }
            current[k] = 0;
        }
        rec(0, max_weight, &mut current, &mut out);
        out.sort();
        out
    }

    /// Digit string used in variable names: `01` for `(0,1)`, empty for `()`.
    pub fn digits(&self) -> String {
        self.0.iter().map(|e| e.to_string()).collect()
    }

    /// Inverse of [`MultiIndex::digits`]; every character is one exponent.
    pub fn from_digits(s: &str) -> Option<Self> {
        if s.is_empty() {
            return Some(Self::empty());
        }
        s.chars()
            .map(|c| c.to_digit(10))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex::new)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A generator of one of the graded rings.
///
/// Variant order is the canonical kind rank used when printing monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariableId {
    /// Degree of a pushed-forward Chern monomial of the source; the empty index is `d`.
    Xi(MultiIndex),
    /// A named scalar parameter such as a numerical character (`eps0`, `mu0`, `T`).
    Param(String),
    /// `s_I`, weight `kappa + weight(I)` in the ring of relative codimension `kappa`.
    LandweberNovikov(MultiIndex),
    /// Quotient Chern class `c_k(f)`.
    QuotientChern(u32),
    /// `f^*a` on the source.
    SourceHyperplane,
    /// `c_k(TM)`.
    SourceChern(u32),
    /// Hyperplane class `a` of the target projective space.
    TargetHyperplane,
}

impl VariableId {
    pub fn d() -> Self {
        VariableId::Xi(MultiIndex::empty())
    }

    pub fn xi(digits: &str) -> Self {
        VariableId::Xi(MultiIndex::from_digits(digits).expect("xi index digits"))
    }

    pub fn s(digits: &str) -> Self {
        let digits = if digits == "0" { "" } else { digits };
        VariableId::LandweberNovikov(MultiIndex::from_digits(digits).expect("s index digits"))
    }

    pub fn param(name: &str) -> Self {
        VariableId::Param(name.to_string())
    }

    /// Scalar parameters have weight zero and survive every substitution.
    pub fn is_scalar(&self) -> bool {
        matches!(self, VariableId::Xi(_) | VariableId::Param(_))
    }

    /// Weight in a ring of relative codimension `kappa`.
    ///
    /// Panics when asked for the weight of `s_I` without a `kappa`.
    pub fn weight(&self, kappa: Option<u32>) -> u32 {
        match self {
            VariableId::Xi(_) | VariableId::Param(_) => 0,
            VariableId::LandweberNovikov(i) => {
                kappa.expect("Landweber-Novikov variable outside a ring with fixed kappa")
                    + i.weight()
            }
            VariableId::QuotientChern(k) | VariableId::SourceChern(k) => *k,
            VariableId::SourceHyperplane | VariableId::TargetHyperplane => 1,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::Xi(i) if i.is_empty() => write!(f, "d"),
            VariableId::Xi(i) => write!(f, "xi{}", i.digits()),
            VariableId::Param(name) => write!(f, "{name}"),
            VariableId::LandweberNovikov(i) if i.is_empty() => write!(f, "s0"),
            VariableId::LandweberNovikov(i) => write!(f, "s{}", i.digits()),
            VariableId::QuotientChern(k) | VariableId::SourceChern(k) => write!(f, "c{k}"),
            VariableId::SourceHyperplane => write!(f, "at"),
            VariableId::TargetHyperplane => write!(f, "a"),
        }
    }
}
