//! Sparse graded multivariate polynomials with exact coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::variable::{MultiIndex, VariableId};
use super::AlgebraError;

/// A product of variables with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<VariableId, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: VariableId) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: VariableId, e: u32) -> Self {
        let mut m = BTreeMap::new();
        if e > 0 {
            m.insert(v, e);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableId, u32)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }

    pub fn exponent(&self, v: &VariableId) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn weight(&self, kappa: Option<u32>) -> u32 {
        self.0.iter().map(|(v, e)| v.weight(kappa) * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn has_landweber_novikov(&self) -> bool {
        self.0
            .keys()
            .any(|v| matches!(v, VariableId::LandweberNovikov(_)))
    }

    /// Splits off the scalar (`Xi`/`Param`) factors.
    pub fn split_scalar(&self) -> (Monomial, Monomial) {
        let (s, r): (BTreeMap<_, _>, BTreeMap<_, _>) = self
            .0
            .iter()
            .map(|(v, e)| (v.clone(), *e))
            .partition(|(v, _)| v.is_scalar());
        (Monomial(s), Monomial(r))
    }

    /// The Chern monomial `c_I(TM)` together with the power of `f^*a`, when the
    /// monomial contains nothing else.
    pub fn as_source_monomial(&self) -> Option<(MultiIndex, u32)> {
        let mut exps = Vec::new();
        let mut hyper = 0;
        for (v, &e) in &self.0 {
            match v {
                VariableId::SourceChern(k) => {
                    let k = *k as usize;
                    if exps.len() < k {
                        exps.resize(k, 0);
                    }
                    exps[k - 1] += e;
                }
                VariableId::SourceHyperplane => hyper += e,
                _ => return None,
            }
        }
        Some((MultiIndex::new(exps), hyper))
    }

    /// Variables repeated by multiplicity, in canonical order; the print order of
    /// terms of equal weight is lexicographic on this list.
    fn expanded(&self) -> Vec<&VariableId> {
        self.0
            .iter()
            .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial over the rationals in weighted variables, optionally truncated
/// above a weight cap.
///
/// `kappa` is the relative codimension of the ring the polynomial lives in; it
/// fixes the weight of the Landweber-Novikov variables. A polynomial without
/// such variables may leave it unset, which makes it compatible with any ring.
///
/// Equality compares terms only.
#[derive(Clone, Debug, Default)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, Rational>,
    weight_cap: Option<u32>,
    kappa: Option<u32>,
}

impl PartialEq for GradedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for GradedPolynomial {}

fn min_cap(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn join_kappa(a: Option<u32>, b: Option<u32>) -> Result<Option<u32>, AlgebraError> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(AlgebraError::RingMismatch { left: x, right: y }),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_term(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        assert!(
            !m.has_landweber_novikov(),
            "Landweber-Novikov monomials need a ring; use landweber_novikov()"
        );
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// A single variable; `s_I` must be built with [`GradedPolynomial::landweber_novikov`].
    pub fn var(v: VariableId) -> Self {
        Self::from_term(Monomial::var(v), Rational::one())
    }

    /// `s_I` in the ring of relative codimension `kappa`.
    pub fn landweber_novikov(index: MultiIndex, kappa: u32) -> Self {
        let mut p = Self {
            kappa: Some(kappa),
            ..Self::zero()
        };
        p.add_term(
            Monomial::var(VariableId::LandweberNovikov(index)),
            Rational::one(),
        );
        p
    }

    pub fn xi(index: MultiIndex) -> Self {
        Self::var(VariableId::Xi(index))
    }

    pub fn param(name: &str) -> Self {
        Self::var(VariableId::param(name))
    }

    /// Builds from raw terms, dropping zeros and anything above `weight_cap`.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
        weight_cap: Option<u32>,
        kappa: Option<u32>,
    ) -> Self {
        let mut p = Self {
            terms: BTreeMap::new(),
            weight_cap,
            kappa,
        };
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(cap) = self.weight_cap {
            if m.weight(self.kappa) > cap {
                return;
            }
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn weight_cap(&self) -> Option<u32> {
        self.weight_cap
    }

    pub fn kappa(&self) -> Option<u32> {
        self.kappa
    }

    /// Lowers the cap to `cap` (never raises it) and drops terms above it.
    pub fn with_cap(mut self, cap: u32) -> Self {
        let cap = min_cap(self.weight_cap, Some(cap)).unwrap();
        self.weight_cap = Some(cap);
        let kappa = self.kappa;
        self.terms.retain(|m, _| m.weight(kappa) <= cap);
        self
    }

    pub fn without_cap(mut self) -> Self {
        self.weight_cap = None;
        self
    }

    /// Places the polynomial in the ring of relative codimension `kappa`.
    pub fn with_kappa(mut self, kappa: u32) -> Result<Self, AlgebraError> {
        self.kappa = join_kappa(self.kappa, Some(kappa))?;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// True when only scalar parameters (`d`, `xi_I`, named parameters) occur.
    pub fn is_scalar(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().all(|(v, _)| v.is_scalar()))
    }

    /// The value when the polynomial is a plain rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let mut out = Self {
            terms: self.terms.clone(),
            weight_cap: min_cap(self.weight_cap, rhs.weight_cap),
            kappa: join_kappa(self.kappa, rhs.kappa)?,
        };
        if out.weight_cap != self.weight_cap {
            let cap = out.weight_cap.unwrap();
            let kappa = out.kappa;
            out.terms.retain(|m, _| m.weight(kappa) <= cap);
        }
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&rhs.neg_ref())
    }

    /// Product, truncated eagerly at the smaller of the two caps.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        let mut out = Self {
            terms: BTreeMap::new(),
            weight_cap: min_cap(self.weight_cap, rhs.weight_cap),
            kappa: join_kappa(self.kappa, rhs.kappa)?,
        };
        let kappa = out.kappa;
        let cap = out.weight_cap;
        for (m1, c1) in &self.terms {
            let w1 = m1.weight(kappa);
            if cap.is_some_and(|cap| w1 > cap) {
                continue;
            }
            for (m2, c2) in &rhs.terms {
                if cap.is_some_and(|cap| w1 + m2.weight(kappa) > cap) {
                    continue;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            weight_cap: self.weight_cap,
            kappa: self.kappa,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self {
                terms: BTreeMap::new(),
                ..self.clone()
            };
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
            weight_cap: self.weight_cap,
            kappa: self.kappa,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self {
            weight_cap: self.weight_cap,
            kappa: self.kappa,
            ..Self::one()
        };
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Homogeneous part of total weight `w`.
    pub fn component(&self, w: u32) -> Self {
        let kappa = self.kappa;
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight(kappa) == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            weight_cap: self.weight_cap,
            kappa,
        }
    }

    /// Homogeneous components keyed by weight; zero components are omitted.
    pub fn components(&self) -> BTreeMap<u32, Self> {
        let mut weights: Vec<u32> = self.terms.keys().map(|m| m.weight(self.kappa)).collect();
        weights.sort_unstable();
        weights.dedup();
        weights
            .into_iter()
            .map(|w| (w, self.component(w)))
            .collect()
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight(self.kappa)).min()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight(self.kappa)).max()
    }

    /// The common weight of all terms, if the polynomial is non-zero and homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let lo = self.min_weight()?;
        (Some(lo) == self.max_weight()).then_some(lo)
    }

    /// Formal inverse of a series whose weight-zero part is exactly 1, valid
    /// through weight `cap`.
    pub fn invert_unit_series(&self, cap: u32) -> Result<Self, AlgebraError> {
        let p = self.clone().with_cap(cap);
        if p.component(0) != Self::one() {
            return Err(AlgebraError::NonInvertibleSeries);
        }
        let parts: Vec<Self> = (0..=cap).map(|w| p.component(w)).collect();
        // q_0 = 1, q_w = -sum_{j=1..w} p_j q_{w-j}
        let mut q: Vec<Self> = vec![Self {
            weight_cap: Some(cap),
            kappa: p.kappa,
            ..Self::one()
        }];
        for w in 1..=cap as usize {
            let mut acc = Self {
                weight_cap: Some(cap),
                kappa: p.kappa,
                ..Self::zero()
            };
            for j in 1..=w {
                acc = acc.try_sub(&parts[j].try_mul(&q[w - j])?)?;
            }
            q.push(acc);
        }
        let mut out = Self {
            weight_cap: Some(cap),
            kappa: p.kappa,
            ..Self::zero()
        };
        for part in &q {
            out = out.try_add(part)?;
        }
        Ok(out)
    }

    /// Replaces every non-scalar variable by its image. Scalars without an
    /// assignment are kept. The result is truncated at `target_cap` when given.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<VariableId, GradedPolynomial>,
        target_cap: Option<u32>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Self {
            weight_cap: target_cap,
            ..Self::zero()
        };
        let mut kappa = None;
        for img in assignment.values() {
            kappa = join_kappa(kappa, img.kappa)?;
        }
        out.kappa = kappa;
        for (m, c) in &self.terms {
            let mut term = Self {
                weight_cap: target_cap,
                kappa,
                ..Self::constant(c.clone())
            };
            for (v, e) in m.iter() {
                let factor = match assignment.get(v) {
                    Some(img) => img.pow(e),
                    None if v.is_scalar() => {
                        Self::from_term(Monomial::power(v.clone(), e), Rational::one())
                    }
                    None => return Err(AlgebraError::IncompleteSubstitution(v.clone())),
                };
                term = term.try_mul(&factor)?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.try_add(&term)?;
        }
        out.weight_cap = target_cap;
        Ok(out)
    }

    /// Terms in print order: ascending weight, then lexicographic on the
    /// variable list expanded by multiplicity.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let kappa = self.kappa;
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            a.weight(kappa)
                .cmp(&b.weight(kappa))
                .then_with(|| a.expanded().cmp(&b.expanded()))
        });
        v
    }

    /// Like `Display`, but pulls out a common denominator: `1/6*(44*d - ...)`.
    pub fn render_factored(&self) -> String {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        if lcm.is_one() || self.terms.len() < 2 {
            return self.to_string();
        }
        let scaled = self.scale(&Rational::from_integer(lcm.clone()));
        format!("1/{lcm}*({scaled})")
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&GradedPolynomial> for &GradedPolynomial {
            type Output = GradedPolynomial;
            /// Panics on a ring mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &GradedPolynomial) -> GradedPolynomial {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<GradedPolynomial> for GradedPolynomial {
            type Output = GradedPolynomial;
            fn $method(self, rhs: GradedPolynomial) -> GradedPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GradedPolynomial> for GradedPolynomial {
            type Output = GradedPolynomial;
            fn $method(self, rhs: &GradedPolynomial) -> GradedPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<GradedPolynomial> for &GradedPolynomial {
            type Output = GradedPolynomial;
            fn $method(self, rhs: GradedPolynomial) -> GradedPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.neg_ref()
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.neg_ref()
    }
}

impl From<Rational> for GradedPolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for GradedPolynomial {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}
