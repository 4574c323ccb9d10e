//! Characters of a 3-fold in P^4 with ordinary singularities, computed from the
//! normalization `f: M^3 -> P^4`.

use std::collections::BTreeMap;

use crate::algebra::{ratio, GradedPolynomial, MultiIndex, VariableId};
use crate::chern::{ChernError, GysinTable, MapContext, Scalar, SourceClass};
use crate::tables::{ssm_series, thom_polynomial, ClassName};

fn idx(digits: &str) -> MultiIndex {
    MultiIndex::from_digits(digits).expect("literal index")
}

/// The seven characters that determine the ξ-data (with `d`).
#[derive(Clone, Debug, PartialEq)]
pub struct ThreefoldBasic {
    /// Degree of the double surface.
    pub mu0: Scalar,
    /// Degree of the triple curve.
    pub t: Scalar,
    /// Degree of the crosscap curve.
    pub gamma: Scalar,
    /// Quadruple points.
    pub q: Scalar,
    /// Points where the crosscap curve meets a third sheet.
    pub s_t: Scalar,
    /// Euler characteristic of the crosscap curve.
    pub chi_c: Scalar,
}

impl ThreefoldBasic {
    pub fn named(&self) -> Vec<(&'static str, &Scalar)> {
        vec![
            ("mu0", &self.mu0),
            ("t", &self.t),
            ("gamma", &self.gamma),
            ("q", &self.q),
            ("s_t", &self.s_t),
            ("chi_C", &self.chi_c),
        ]
    }
}

pub fn threefold_basic(ctx: &MapContext) -> Result<ThreefoldBasic, ChernError> {
    ctx.require_dims(3, 4)?;
    let tp = |name| -> Result<SourceClass, ChernError> { ctx.evaluate(thom_polynomial(name, 1)?) };
    Ok(ThreefoldBasic {
        mu0: ctx
            .degree_of(&tp(ClassName::A0Squared)?, 1)?
            .scale(&ratio(1, 2)),
        t: ctx
            .degree_of(&tp(ClassName::A0Cubed)?, 2)?
            .scale(&ratio(1, 3)),
        gamma: ctx.degree_of(&tp(ClassName::A1)?, 2)?,
        q: ctx
            .integrate(&tp(ClassName::A0Fourth)?)?
            .scale(&ratio(1, 4)),
        s_t: ctx.integrate(&tp(ClassName::A0A1)?)?,
        chi_c: ctx.weighted_euler(ssm_series(ClassName::A1Closure, 1)?)?,
    })
}

/// ξ-data `(xi1, xi2, xi01, xi3, xi11, xi001)` from `d` and the basic characters.
pub fn threefold_invert(d: &Scalar, b: &ThreefoldBasic) -> [Scalar; 6] {
    let n = GradedPolynomial::integer;
    let r = |p, q| GradedPolynomial::constant(ratio(p, q));
    let (mu0, t, gamma, q, s_t, chi_c) = (&b.mu0, &b.t, &b.gamma, &b.q, &b.s_t, &b.chi_c);
    let d2 = d.pow(2);
    let d3 = d.pow(3);
    let d4 = d.pow(4);
    let xi1 = n(5) * d - &d2 + n(2) * mu0;
    let xi2 = n(25) * d - n(10) * &d2 + &d3 + (n(20) - n(3) * d) * mu0 + n(3) * t - gamma;
    let xi01 = n(10) * d - n(5) * &d2 + &d3 + (n(10) - n(3) * d) * mu0 + n(3) * t - n(2) * gamma;
    let quartic = |c: [i64; 4], mu_coeffs: [i64; 3]| {
        n(c[0]) * d
            + n(c[1]) * &d2
            + n(c[2]) * &d3
            + n(c[3]) * &d4
            + (n(mu_coeffs[0]) + n(mu_coeffs[1]) * d + n(mu_coeffs[2]) * &d2 - n(2) * mu0) * mu0
            + n(4) * q
    };
    let xi3 = quartic([125, -75, 15, -1], [150, -45, 4]) - r(1, 2) * s_t
        + (n(45) - n(4) * d) * t
        + (n(-10) + r(1, 2) * d) * gamma
        - chi_c;
    let xi11 = quartic([50, -35, 10, -1], [70, -30, 4]) + (n(30) - n(4) * d) * t
        - n(5) * gamma
        - n(2) * chi_c;
    let xi001 = quartic([10, -10, 5, -1], [20, -15, 4])
        + r(3, 2) * s_t
        + (n(15) - n(4) * d) * t
        + (n(10) - r(3, 2) * d) * gamma
        - n(4) * chi_c;
    [xi1, xi2, xi01, xi3, xi11, xi001]
}

/// The critical surface `S1` of a generic projection `g: M -> P^3`, with its
/// Gysin table into `M`.
#[derive(Clone, Debug)]
pub struct CriticalSurfaceRing {
    pub projection: MapContext,
    pub gysin: GysinTable,
    /// `S1 -> P^3`.
    pub surface: MapContext,
}

/// Builds `S1 = closure of A1(g)` from `i_*(1) = c1(g)` and the Gysin images of
/// its Chern monomials.
pub fn critical_surface_calculus(ctx: &MapContext) -> Result<CriticalSurfaceRing, ChernError> {
    ctx.require_dims(3, 4)?;
    let g = ctx.project()?;
    let c1g = g.quotient_chern_class(1);
    let (c1, c2) = (g.source_chern(1), g.source_chern(2));
    let mut images = BTreeMap::new();
    images.insert(idx(""), c1g.clone());
    images.insert(idx("1"), &c1g * &c1 - c1g.pow(2));
    images.insert(idx("01"), c1g.pow(3) - c1g.pow(2) * &c1 + &c1g * &c2);
    images.insert(
        idx("2"),
        c1g.pow(3) - GradedPolynomial::integer(2) * c1g.pow(2) * &c1 + &c1g * c1.pow(2),
    );
    let gysin = GysinTable::new(g.clone(), 2, images)?;
    let surface = gysin.induced_context()?;
    Ok(CriticalSurfaceRing {
        projection: g,
        gysin,
        surface,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryCharacters {
    /// Rank.
    pub m1: Scalar,
    /// First class.
    pub m2: Scalar,
    /// Class.
    pub m3: Scalar,
    /// Swallowtails of the projection to P^3.
    pub d_swallowtail: Scalar,
    /// Cusps of the projection of `S1` to P^2.
    pub b_plus_d: Scalar,
    /// Critical points of the critical curve of `S1` projected to P^1.
    pub total_polar: Scalar,
}

pub fn elementary_characters(ctx: &MapContext) -> Result<ElementaryCharacters, ChernError> {
    let ring = critical_surface_calculus(ctx)?;
    let g = &ring.projection;
    let tp0 = |name| thom_polynomial(name, 0);

    let m1 = g.degree_of(&g.evaluate(tp0(ClassName::A1)?)?, 1)?;

    // S(h) = S2 + closure of A2(g), disjoint.
    let h = ring.surface.project()?;
    let critical_h = h.evaluate(tp0(ClassName::A1)?)?;
    let cusps_g = g.evaluate(tp0(ClassName::A2)?)?;
    let m2 = h.degree_of(&critical_h, 1)? - g.degree_of(&cusps_g, 2)?;

    let b_plus_d = h.integrate(&h.evaluate(tp0(ClassName::A2)?)?)?;
    let d_swallowtail = g.integrate(&g.evaluate(tp0(ClassName::A3)?)?)?;

    let c1h = h.quotient_chern_class(1);
    let mut images = BTreeMap::new();
    images.insert(idx(""), c1h.clone());
    images.insert(idx("1"), &c1h * h.source_chern(1) - c1h.pow(2));
    let curve = GysinTable::new(h.clone(), 1, images)?.induced_context()?;
    let h_prime = curve.project()?;
    let total_polar = h_prime.integrate(&h_prime.evaluate(tp0(ClassName::A1)?)?)?;

    // The remaining terms of total_polar need the Euler characteristic of the
    // cusp curve of g; m3 is taken from its closed form instead.
    let xi = |d: &str| ctx.xi(&idx(d));
    let n = GradedPolynomial::integer;
    let m3 = n(4) * xi("") - xi("001") + n(2) * xi("01") - n(3) * xi("1");

    Ok(ElementaryCharacters {
        m1,
        m2,
        m3,
        d_swallowtail,
        b_plus_d,
        total_polar,
    })
}

/// Gysin data of the resolved double surface `phi: Gamma' -> M`.
#[derive(Clone, Debug)]
pub struct DoubleLocus {
    /// `s_I(phi)` for `I = (), (1), (2), (01)`.
    pub landweber_novikov: BTreeMap<MultiIndex, SourceClass>,
    /// `phi_*(1), phi_*(c1), phi_*(c2), phi_*(c1^2)` of `Gamma'`, keyed by index.
    pub gysin: GysinTable,
    /// `Gamma' -> P^4`; its ξ-table holds the degrees of the four images.
    pub surface: MapContext,
}

impl DoubleLocus {
    pub fn image(&self, digits: &str) -> SourceClass {
        self.gysin.image(&idx(digits))
    }

    /// `phi_*` of a universal polynomial at `kappa = 1` evaluated on `phi`:
    /// `s_I` factors pull out by the projection formula, the Chern monomial
    /// pushes to the matching `s_J(phi)`.
    pub fn push_universal(&self, body: &GradedPolynomial) -> Result<SourceClass, ChernError> {
        let m = self.gysin.ambient();
        let s = |i: &MultiIndex| {
            self.landweber_novikov
                .get(i)
                .cloned()
                .unwrap_or_else(|| m.source(GradedPolynomial::zero()))
        };
        let mut out = m.source(GradedPolynomial::zero());
        for (mono, coeff) in body.terms() {
            let mut term = m.source(GradedPolynomial::constant(coeff.clone()));
            let mut chern = Vec::new();
            for (v, e) in mono.iter() {
                match v {
                    VariableId::LandweberNovikov(i) => term = term * s(i).pow(e),
                    VariableId::QuotientChern(k) => {
                        let k = *k as usize;
                        if chern.len() < k {
                            chern.resize(k, 0);
                        }
                        chern[k - 1] += e;
                    }
                    _ => return Err(ChernError::NotSourceClass(body.to_string())),
                }
            }
            out = out + term * s(&MultiIndex::new(chern));
        }
        Ok(out)
    }
}

/// Solves for `s_I(phi)` from the multiple-point identities, then for the
/// Gysin images of the Chern monomials of `Gamma'`.
pub fn double_locus_calculus(ctx: &MapContext) -> Result<DoubleLocus, ChernError> {
    ctx.require_dims(3, 4)?;
    let tp = |name| -> Result<SourceClass, ChernError> { ctx.evaluate(thom_polynomial(name, 1)?) };
    let n = GradedPolynomial::integer;
    let r = |p, q| GradedPolynomial::constant(ratio(p, q));

    let s0 = tp(ClassName::A0Squared)?;
    let s1 = s0.pow(2) - n(2) * tp(ClassName::A0Cubed)?;
    let s01 = tp(ClassName::A0A1)?;
    let s2 = n(3) * tp(ClassName::A0Fourth)? - r(1, 2) * s0.pow(3) + r(3, 2) * &s0 * &s1 - &s01;

    let (c1, c2) = (ctx.source_chern(1), ctx.source_chern(2));
    let phi_c1 = &c1 * &s0 - &s1;
    let phi_c1_sq = &s2 - c1.pow(2) * &s0 + n(2) * &c1 * &phi_c1;
    let phi_c2 = &c2 * &s0 - &c1 * &phi_c1 + &phi_c1_sq - &s01;

    let mut images = BTreeMap::new();
    images.insert(idx(""), s0.clone());
    images.insert(idx("1"), phi_c1);
    images.insert(idx("2"), phi_c1_sq);
    images.insert(idx("01"), phi_c2);
    let gysin = GysinTable::new(ctx.clone(), 2, images)?;
    let surface = gysin.induced_context()?;

    let landweber_novikov = [("", s0), ("1", s1), ("2", s2), ("01", s01)]
        .into_iter()
        .map(|(k, v)| (idx(k), v))
        .collect();
    Ok(DoubleLocus {
        landweber_novikov,
        gysin,
        surface,
    })
}

/// `K_M . S = integral of -c1(TM) * tp(A1)(f)`.
pub fn canonical_dot_critical(ctx: &MapContext) -> Result<Scalar, ChernError> {
    ctx.require_dims(3, 4)?;
    let s = ctx.evaluate(thom_polynomial(ClassName::A1, 1)?)?;
    Ok(-ctx.integrate(&(ctx.source_chern(1) * s))?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThreefoldCharacters {
    pub d: Scalar,
    pub basic: ThreefoldBasic,
    pub elementary: ElementaryCharacters,
    pub k_dot_s: Scalar,
    /// Euler characteristic of the image `X`.
    pub chi_x: Scalar,
    /// Euler characteristic of the double surface `D`.
    pub chi_d: Scalar,
    /// `deg Gamma, c1.a, c1^2, c2` of the resolved double surface.
    pub gamma_degrees: [Scalar; 4],
}

impl ThreefoldCharacters {
    pub fn named(&self) -> Vec<(&'static str, &Scalar)> {
        let mut out = vec![("d", &self.d)];
        out.extend(self.basic.named());
        let e = &self.elementary;
        out.extend([
            ("m1", &e.m1),
            ("m2", &e.m2),
            ("m3", &e.m3),
            ("D_swallowtail", &e.d_swallowtail),
            ("B_plus_D", &e.b_plus_d),
            ("total_polar", &e.total_polar),
            ("K_dot_S", &self.k_dot_s),
            ("chi_X", &self.chi_x),
            ("chi_D", &self.chi_d),
            ("deg_Gamma", &self.gamma_degrees[0]),
            ("c1_Gamma", &self.gamma_degrees[1]),
            ("c1sq_Gamma", &self.gamma_degrees[2]),
            ("c2_Gamma", &self.gamma_degrees[3]),
        ]);
        out
    }

    pub fn get(&self, name: &str) -> Option<&Scalar> {
        self.named()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }
}

pub fn threefold_characters(ctx: &MapContext) -> Result<ThreefoldCharacters, ChernError> {
    let basic = threefold_basic(ctx)?;
    let elementary = elementary_characters(ctx)?;
    let double = double_locus_calculus(ctx)?;
    let gamma_degrees = ["", "1", "2", "01"].map(|k| double.surface.xi(&idx(k)));
    Ok(ThreefoldCharacters {
        d: ctx.degree(),
        basic,
        elementary,
        k_dot_s: canonical_dot_critical(ctx)?,
        chi_x: ctx.weighted_euler(ssm_series(ClassName::Image, 1)?)?,
        chi_d: ctx.weighted_euler(ssm_series(ClassName::DoubleImage, 1)?)?,
        gamma_degrees,
    })
}
