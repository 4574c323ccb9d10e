//! The nine numerical characters of a surface in P^3 with ordinary
//! singularities, computed from the normalization `f: M^2 -> P^3`.

use crate::algebra::{ratio, GradedPolynomial, MultiIndex};
use crate::chern::{ChernError, MapContext, Scalar};
use crate::report::{Check, Report};
use crate::tables::{ssm_series, thom_polynomial, ClassName};

#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceCharacters {
    pub mu0: Scalar,
    /// Rank: degree of the first polar.
    pub mu1: Scalar,
    /// Class: degree of the second polar.
    pub mu2: Scalar,
    /// Cusps of a generic projection to P^2.
    pub kappa_cusps: Scalar,
    /// Degree of the double curve `D`.
    pub eps0: Scalar,
    /// Rank of `D`.
    pub eps1: Scalar,
    /// Class of immersion of `D`.
    pub rho: Scalar,
    /// Crosscaps.
    pub crosscaps: Scalar,
    /// Triple points.
    pub triple_points: Scalar,
    /// Euler characteristic of the critical curve of the projection.
    pub chi_sg: Scalar,
    /// Euler characteristic of the double curve.
    pub chi_d: Scalar,
}

impl SurfaceCharacters {
    /// Characters under their conventional names, in display order.
    pub fn named(&self) -> Vec<(&'static str, &Scalar)> {
        vec![
            ("mu0", &self.mu0),
            ("mu1", &self.mu1),
            ("mu2", &self.mu2),
            ("kappa_cusps", &self.kappa_cusps),
            ("eps0", &self.eps0),
            ("eps1", &self.eps1),
            ("rho", &self.rho),
            ("C", &self.crosscaps),
            ("T", &self.triple_points),
            ("chi_Sg", &self.chi_sg),
            ("chi_D", &self.chi_d),
        ]
    }

    pub fn get(&self, name: &str) -> Option<&Scalar> {
        self.named()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }
}

/// All characters through the Thom-polynomial pipeline.
pub fn surface_characters(ctx: &MapContext) -> Result<SurfaceCharacters, ChernError> {
    ctx.require_dims(2, 3)?;
    let tp = |name, kappa| thom_polynomial(name, kappa);
    let g = ctx.project()?;

    let crosscaps = ctx.integrate(&ctx.evaluate(tp(ClassName::A1, 1)?)?)?;
    let triple_points = ctx
        .integrate(&ctx.evaluate(tp(ClassName::A0Cubed, 1)?)?)?
        .scale(&ratio(1, 3));
    let gamma = ctx.evaluate(tp(ClassName::A0Squared, 1)?)?;
    let eps0 = ctx.integrate(&(&gamma * ctx.at()))?.scale(&ratio(1, 2));

    let critical = g.evaluate(tp(ClassName::A1, 0)?)?;
    let kappa_cusps = g.integrate(&g.evaluate(tp(ClassName::A2, 0)?)?)?;
    let mu1 = g.integrate(&(&critical * g.at()))?;
    let chi_sg = g.weighted_euler(ssm_series(ClassName::A1Closure, 0)?)?;
    let mu2 = GradedPolynomial::integer(2) * &mu1 - &chi_sg - &kappa_cusps;

    let rho = ctx.integrate(&(&gamma * &critical))? - &crosscaps;
    let chi_d = ctx.weighted_euler(ssm_series(ClassName::DoubleImage, 1)?)?;
    // D' resolves the triple points of D: chi(D') = chi(D) + 2T, and the rank
    // is 2*eps0 - chi(D') by Riemann-Hurwitz.
    let eps1 = GradedPolynomial::integer(2) * &eps0
        - &chi_d
        - GradedPolynomial::integer(2) * &triple_points;

    Ok(SurfaceCharacters {
        mu0: ctx.degree(),
        mu1,
        mu2,
        kappa_cusps,
        eps0,
        eps1,
        rho,
        crosscaps,
        triple_points,
        chi_sg,
        chi_d,
    })
}

/// ξ-data of the normalization from `d, eps0, C, T`.
pub fn surface_invert(
    d: &Scalar,
    eps0: &Scalar,
    c: &Scalar,
    t: &Scalar,
) -> (Scalar, Scalar, Scalar) {
    let n = GradedPolynomial::integer;
    let xi1 = d * (n(4) - d) + n(2) * eps0;
    let xi2 = d * (d - n(4)).pow(2) + (n(16) - n(3) * d) * eps0 + n(3) * t - c;
    let xi01 = d * (d * d - n(4) * d + n(6)) + (n(8) - n(3) * d) * eps0 + n(3) * t - n(2) * c;
    (xi1, xi2, xi01)
}

/// The five Salmon relations, and `omega`, `I` against the degrees `xi2`,
/// `xi01` of the normalization.
pub fn verify_surface_relations(ctx: &MapContext, chars: &SurfaceCharacters) -> Report {
    let n = GradedPolynomial::integer;
    let SurfaceCharacters {
        mu0: d,
        mu1,
        mu2,
        kappa_cusps: k,
        eps0,
        eps1,
        rho,
        crosscaps: c,
        triple_points: t,
        ..
    } = chars;
    let mut report = Report::default();
    report.push(Check::identity(
        "salmon (i): d(d-1) = mu1 + 2 eps0",
        &(d * (d - n(1))),
        &(mu1 + n(2) * eps0),
    ));
    report.push(Check::identity(
        "salmon (ii): mu1(d-2) = kappa + rho",
        &(mu1 * (d - n(2))),
        &(k + rho),
    ));
    report.push(Check::identity(
        "salmon (iii): eps0(d-2) = rho + 3T",
        &(eps0 * (d - n(2))),
        &(rho + n(3) * t),
    ));
    report.push(Check::identity(
        "salmon (iv): 2 rho - 2 eps1 = C",
        &(n(2) * rho - n(2) * eps1),
        c,
    ));
    report.push(Check::identity(
        "salmon (v): mu2 + 2C = mu1 + kappa",
        &(mu2 + n(2) * c),
        &(mu1 + k),
    ));

    let (omega, zs) = invariants(chars);
    let xi2 = ctx.xi(&MultiIndex::new(vec![2]));
    let xi01 = ctx.xi(&MultiIndex::unit(2));
    report.push(Check::identity("omega = xi2 + 1", &omega, &(&xi2 + n(1))));
    report.push(Check::identity("I = xi01 - 4", &zs, &(&xi01 - n(4))));
    report.push(Check::identity(
        "omega + I = xi2 + xi01 - 3",
        &(&omega + &zs),
        &(xi2 + xi01 - n(3)),
    ));
    report
}

/// Castelnuovo-Enriques invariant `omega` and Zeuthen-Segre invariant `I`.
pub fn invariants(chars: &SurfaceCharacters) -> (Scalar, Scalar) {
    let n = GradedPolynomial::integer;
    let (d, mu1, mu2) = (&chars.mu0, &chars.mu1, &chars.mu2);
    let omega = mu2 - n(6) * mu1 + n(9) * d + &chars.crosscaps + n(1);
    let zeuthen_segre = mu2 - n(2) * mu1 + n(3) * d - n(4);
    (omega, zeuthen_segre)
}
