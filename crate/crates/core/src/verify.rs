//! The identity suite: table validation, engine output against the classical
//! closed forms, round trips, and the known misprints.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{is_even_integer, is_integer, GradedPolynomial, MultiIndex, Rational};
use crate::chern::{ChernError, MapContext, Scalar};
use crate::classical::{self, form, lookup, substitute_params, ConsistentKind, KnownMisprint};
use crate::presets::{
    preset_context, reduce_on_hypersurface, smooth_hypersurface_xi, Kind, PresetName,
};
use crate::report::{Check, Report};
use crate::surface::{
    surface_characters, surface_invert, verify_surface_relations, SurfaceCharacters,
};
use crate::tables::{thom_polynomial, validate_tables, ClassName};
use crate::threefold::{
    canonical_dot_critical, double_locus_calculus, elementary_characters, threefold_basic,
    threefold_characters, threefold_invert, ThreefoldBasic,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Tables,
    Surface,
    Threefold,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Tables => "tables",
            Suite::Surface => "surface",
            Suite::Threefold => "threefold",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Suite::All, Suite::Tables, Suite::Surface, Suite::Threefold]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| {
                format!("unknown suite {s:?}; expected all, tables, surface or threefold")
            })
    }
}

pub fn run_suite(suite: Suite) -> Report {
    match suite {
        Suite::All => {
            let mut r = tables_suite();
            r.extend(surface_suite());
            r.extend(threefold_suite());
            r
        }
        Suite::Tables => tables_suite(),
        Suite::Surface => surface_suite(),
        Suite::Threefold => threefold_suite(),
    }
}

pub fn tables_suite() -> Report {
    let mut r = Report::default();
    for c in validate_tables().checks {
        r.push(Check {
            name: format!("tables: {}", c.name),
            ..c
        });
    }
    r
}

fn attempt<T>(report: &mut Report, name: &str, result: Result<T, ChernError>) -> Option<T> {
    match result {
        Ok(v) => Some(v),
        Err(e) => {
            report.push(Check::condition(name, false, e.to_string()));
            None
        }
    }
}

fn params(pairs: Vec<(&str, &Scalar)>) -> BTreeMap<String, Scalar> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// A closed form with its character atoms replaced by engine values.
fn in_terms_of(text: &str, values: &BTreeMap<String, Scalar>) -> Scalar {
    substitute_params(&form(text), values).expect("scalar substitution")
}

fn misprint(
    m: &KnownMisprint,
    engine: &GradedPolynomial,
    values: &BTreeMap<String, Scalar>,
) -> Check {
    let (printed, consistent) = match m.consistent_kind {
        ConsistentKind::TargetClass => {
            let cap = engine.weight_cap().expect("target classes are capped");
            (form(m.printed).with_cap(cap), form(m.consistent))
        }
        _ => (form(m.printed), in_terms_of(m.consistent, values)),
    };
    Check::misprint(
        format!("misprinted xi-line: {}", m.character),
        engine,
        &printed,
        &form(m.residual),
        &consistent,
    )
}

fn known_misprint(character: &str) -> &'static KnownMisprint {
    classical::KNOWN_MISPRINTS
        .iter()
        .find(|m| m.character == character)
        .expect("registered misprint")
}

fn integral(name: String, v: &Scalar) -> Check {
    let ok = v.as_rational().is_some_and(|r| is_integer(&r));
    Check::condition(name, ok, v.to_string())
}

fn equals_int(name: String, v: &Scalar, expected: i64) -> Check {
    Check::identity(name, v, &GradedPolynomial::integer(expected))
}

fn surface_values(chars: &SurfaceCharacters) -> BTreeMap<String, Scalar> {
    params(chars.named())
}

pub fn surface_suite() -> Report {
    let mut r = Report::default();
    let ctx = Kind::Surface.symbolic_context();
    let Some(chars) = attempt(&mut r, "surface: characters", surface_characters(&ctx)) else {
        return r;
    };
    let values = surface_values(&chars);

    for (name, text) in classical::SURFACE_XI_LINES {
        let engine = chars.get(name).expect("named character");
        if *name == "rho" {
            r.push(misprint(known_misprint("rho"), engine, &values));
        } else {
            r.push(Check::identity(
                format!("surface xi-line: {name}"),
                engine,
                &form(text),
            ));
        }
    }
    for (name, text) in classical::SURFACE_CLOSED_FORMS {
        r.push(Check::identity(
            format!("surface closed form: {name}"),
            chars.get(name).expect("named character"),
            &in_terms_of(text, &values),
        ));
    }

    for (k, (name, text)) in classical::SURFACE_LN_LINES.iter().enumerate() {
        let index = ["", "1", "2", "01"][k];
        let Some(engine) = attempt(
            &mut r,
            name,
            ctx.landweber_novikov(&MultiIndex::from_digits(index).expect("index")),
        ) else {
            continue;
        };
        if *name == "s01" {
            r.push(misprint(known_misprint("s01"), &engine, &values));
        } else {
            r.push(Check::identity(
                format!("surface Landweber-Novikov class: {name}"),
                &engine,
                &form(text),
            ));
        }
    }

    let (xi1, xi2, xi01) = surface_invert(
        &chars.mu0,
        &chars.eps0,
        &chars.crosscaps,
        &chars.triple_points,
    );
    let xi = |d: &str| ctx.xi(&MultiIndex::from_digits(d).expect("index"));
    for (name, got, printed) in [("xi1", xi1, "1"), ("xi2", xi2, "2"), ("xi01", xi01, "01")] {
        r.push(Check::identity(
            format!("surface inversion round trip: {name}"),
            &got,
            &xi(printed),
        ));
        let stated = lookup(classical::SURFACE_INVERSE, name).expect("stated inverse");
        r.push(Check::identity(
            format!("surface stated inverse: {name}"),
            &in_terms_of(&stated.to_string(), &values),
            &xi(printed),
        ));
    }

    for c in verify_surface_relations(&ctx, &chars).checks {
        r.push(Check {
            name: format!("surface symbolic: {}", c.name),
            ..c
        });
    }

    r.extend(surface_presets());
    r
}

fn surface_presets() -> Report {
    let mut r = Report::default();
    let roman = preset_context(PresetName::RomanSurface, None).expect("preset");
    let quintic = preset_context(
        PresetName::SmoothSurface,
        Some(&GradedPolynomial::integer(5)),
    )
    .expect("preset");
    let roman_expected: &[(&str, i64)] = &[
        ("eps0", 3),
        ("C", 6),
        ("T", 1),
        ("mu1", 6),
        ("mu2", 3),
        ("kappa_cusps", 9),
        ("rho", 3),
        ("eps1", 0),
        ("chi_D", 4),
    ];
    let quintic_expected: &[(&str, i64)] = &[
        ("eps0", 0),
        ("C", 0),
        ("T", 0),
        ("mu1", 20),
        ("kappa_cusps", 60),
        ("mu2", 80),
    ];
    for (label, ctx, expected) in [
        ("roman-surface", &roman, roman_expected),
        ("smooth quintic surface", &quintic, quintic_expected),
    ] {
        let Some(chars) = attempt(&mut r, label, surface_characters(ctx)) else {
            continue;
        };
        for (name, v) in expected {
            r.push(equals_int(
                format!("{label}: {name}"),
                chars.get(name).expect("named"),
                *v,
            ));
        }
        for name in ["C", "T", "eps0", "mu1", "mu2", "kappa_cusps", "rho", "eps1"] {
            r.push(integral(
                format!("{label}: {name} is an integer"),
                chars.get(name).expect("named"),
            ));
        }
        let n = GradedPolynomial::integer;
        r.push(Check::identity(
            format!("{label}: mu2 + kappa = 2 mu1 - chi(S(g))"),
            &(&chars.mu2 + &chars.kappa_cusps),
            &(n(2) * &chars.mu1 - &chars.chi_sg),
        ));
        for c in verify_surface_relations(ctx, &chars).checks {
            r.push(Check {
                name: format!("{label}: {}", c.name),
                ..c
            });
        }
        let (a, b, c) = surface_invert(
            &chars.mu0,
            &chars.eps0,
            &chars.crosscaps,
            &chars.triple_points,
        );
        let got = [a, b, c];
        for (k, (digits, g)) in ["1", "2", "01"].iter().zip(&got).enumerate() {
            let _ = k;
            r.push(Check::identity(
                format!("{label}: inversion round trip xi{digits}"),
                g,
                &ctx.xi(&MultiIndex::from_digits(digits).expect("index")),
            ));
        }
    }

    let d = form("d");
    let ctx = Kind::Surface
        .context(smooth_hypersurface_xi(2, &d))
        .expect("complete ξ-data");
    if let Some(chars) = attempt(&mut r, "smooth surface", surface_characters(&ctx)) {
        for (name, expected) in [
            ("eps0", "0"),
            ("C", "0"),
            ("T", "0"),
            ("mu1", "d*(d - 1)"),
            ("kappa_cusps", "d*(d - 1)*(d - 2)"),
            ("mu2", "d*(d - 1)^2"),
        ] {
            r.push(Check::identity(
                format!("smooth surface of degree d: {name}"),
                chars.get(name).expect("named"),
                &form(expected),
            ));
        }
    }
    r
}

fn basic_values(d: &Scalar, b: &ThreefoldBasic) -> BTreeMap<String, Scalar> {
    let mut v = params(b.named());
    v.insert("d".into(), d.clone());
    v
}

pub fn threefold_suite() -> Report {
    let mut r = Report::default();
    let ctx = Kind::Threefold.symbolic_context();
    let d = ctx.degree();
    let Some(basic) = attempt(&mut r, "threefold: basic characters", threefold_basic(&ctx)) else {
        return r;
    };
    let values = basic_values(&d, &basic);

    for ((name, got), (_, text)) in basic.named().into_iter().zip(classical::THREEFOLD_XI_LINES) {
        r.push(Check::identity(
            format!("threefold xi-line: {name}"),
            got,
            &form(text),
        ));
    }
    let inverted = threefold_invert(&d, &basic);
    for (got, (name, text)) in inverted.iter().zip(classical::THREEFOLD_INVERSE) {
        let index = crate::presets::parse_xi_key(name).expect("xi key");
        r.push(Check::identity(
            format!("threefold inversion round trip: {name}"),
            got,
            &ctx.xi(&index),
        ));
        r.push(Check::identity(
            format!("threefold stated inverse: {name}"),
            &in_terms_of(text, &values),
            &ctx.xi(&index),
        ));
    }

    if let Some(e) = attempt(
        &mut r,
        "threefold: elementary characters",
        elementary_characters(&ctx),
    ) {
        let engine = [("m1", &e.m1), ("m2", &e.m2), ("m3", &e.m3)];
        for (name, got) in engine {
            if name == "m2" {
                r.push(misprint(known_misprint("m2"), got, &values));
                continue;
            }
            let line = lookup(classical::THREEFOLD_DERIVED_XI_LINES, name).expect("line");
            r.push(Check::identity(
                format!("threefold xi-line: {name}"),
                got,
                &line,
            ));
        }
        for (name, got) in engine {
            let closed = classical::THREEFOLD_CLOSED_FORMS
                .iter()
                .find(|(n, _)| *n == name)
                .expect("closed form")
                .1;
            r.push(Check::identity(
                format!("threefold closed form: {name}"),
                got,
                &in_terms_of(closed, &values),
            ));
        }
    }

    if let Some(ks) = attempt(&mut r, "threefold: K.S", canonical_dot_critical(&ctx)) {
        let line = lookup(classical::THREEFOLD_DERIVED_XI_LINES, "K_dot_S").expect("line");
        r.push(Check::identity("threefold xi-line: K_dot_S", &ks, &line));
        let closed = lookup(classical::THREEFOLD_CLOSED_FORMS, "K_dot_S").expect("closed");
        r.push(Check::identity(
            "threefold closed form: K_dot_S",
            &ks,
            &in_terms_of(&closed.to_string(), &values),
        ));
    }

    r.extend(double_locus_checks(&ctx));
    r.extend(threefold_presets());
    r
}

fn double_locus_checks(ctx: &MapContext) -> Report {
    let mut r = Report::default();
    let Some(dl) = attempt(&mut r, "double locus", double_locus_calculus(ctx)) else {
        return r;
    };
    let tp = |name| {
        ctx.evaluate(thom_polynomial(name, 1).expect("tabulated"))
            .expect("evaluates")
    };
    let body = |name| &thom_polynomial(name, 1).expect("tabulated").body;
    let n = GradedPolynomial::integer;
    for (label, source, target) in [
        (
            "phi_* tp(A0^2)(phi) = 2 tp(A0^3)(f)",
            ClassName::A0Squared,
            n(2) * tp(ClassName::A0Cubed),
        ),
        (
            "phi_* tp(A0^3)(phi) = 3 tp(A0^4)(f)",
            ClassName::A0Cubed,
            n(3) * tp(ClassName::A0Fourth),
        ),
        (
            "phi_* tp(A1)(phi) = tp(A0A1)(f)",
            ClassName::A1,
            tp(ClassName::A0A1),
        ),
    ] {
        if let Some(pushed) = attempt(&mut r, label, dl.push_universal(body(source))) {
            r.push(Check::identity(
                format!("double locus: {label}"),
                &pushed,
                &target,
            ));
        }
    }

    let s = |k: &str| dl.landweber_novikov[&MultiIndex::from_digits(k).expect("index")].clone();
    let (c1, c2) = (ctx.source_chern(1), ctx.source_chern(2));
    let (one, p1, p11, p2) = (dl.image(""), dl.image("1"), dl.image("2"), dl.image("01"));
    let forward = [
        ("s0", one.clone()),
        ("s1", &c1 * &one - &p1),
        ("s2", c1.pow(2) * &one - n(2) * &c1 * &p1 + &p11),
        ("s01", &c2 * &one - &c1 * &p1 + &p11 - &p2),
    ];
    for (name, got) in forward {
        let digits = match name {
            "s0" => "",
            other => &other[1..],
        };
        r.push(Check::identity(
            format!("double locus: {name}(phi) from the Gysin images"),
            &got,
            &s(digits),
        ));
    }
    r.push(Check::identity(
        "double locus: phi_*(1) = (d - 5)*at + c1",
        &one,
        &ctx.source(
            crate::algebra::parse_polynomial(
                "(d - 5)*at + c1",
                &crate::algebra::ParseOptions::source(),
            )
            .expect("parses"),
        ),
    ));
    r
}

fn threefold_presets() -> Report {
    let mut r = Report::default();
    let veronese = preset_context(PresetName::VeroneseP3, None).expect("preset");
    if let Some(chars) = attempt(&mut r, "veronese-p3", threefold_characters(&veronese)) {
        for (name, v) in [
            ("mu0", 20),
            ("t", 20),
            ("gamma", 20),
            ("q", 5),
            ("s_t", 40),
            ("chi_C", -20),
            ("m1", 16),
            ("m2", 12),
            ("m3", 4),
            ("K_dot_S", -40),
            ("deg_Gamma", 40),
        ] {
            r.push(equals_int(
                format!("veronese-p3: {name}"),
                chars.get(name).expect("named"),
                v,
            ));
        }
        for name in ["d", "mu0", "t", "q", "s_t", "gamma", "m1", "m2", "m3"] {
            r.push(integral(
                format!("veronese-p3: {name} is an integer"),
                chars.get(name).expect("named"),
            ));
        }
        r.push(chi_c_parity("veronese-p3", &chars.basic.chi_c));
    }

    for degree in 2..=6 {
        let dv = GradedPolynomial::integer(degree);
        let ctx = preset_context(PresetName::SmoothThreefold, Some(&dv)).expect("preset");
        let label = format!("smooth threefold of degree {degree}");
        if let Some(b) = attempt(&mut r, &label, threefold_basic(&ctx)) {
            r.push(chi_c_parity(&label, &b.chi_c));
        }
    }

    let d = form("d");
    let ctx = Kind::Threefold
        .context(smooth_hypersurface_xi(3, &d))
        .expect("complete ξ-data");
    let label = "smooth threefold of degree d";
    if let Some(b) = attempt(&mut r, label, threefold_basic(&ctx)) {
        for (name, v) in b.named() {
            r.push(Check::identity(
                format!("{label}: {name}"),
                v,
                &GradedPolynomial::zero(),
            ));
        }
    }
    if let Some(e) = attempt(&mut r, label, elementary_characters(&ctx)) {
        for (name, v, expected) in [
            ("m1", &e.m1, "d*(d - 1)"),
            ("m2", &e.m2, "d*(d - 1)^2"),
            ("m3", &e.m3, "d*(d - 1)^3"),
        ] {
            r.push(Check::identity(
                format!("{label}: {name}"),
                v,
                &form(expected),
            ));
        }
    }
    if let Some(ks) = attempt(&mut r, label, canonical_dot_critical(&ctx)) {
        r.push(Check::identity(
            format!("{label}: K_dot_S"),
            &ks,
            &GradedPolynomial::zero(),
        ));
    }
    if let Some(dl) = attempt(&mut r, label, double_locus_calculus(&ctx)) {
        for k in ["", "1", "2", "01"] {
            let reduced = reduce_on_hypersurface(&dl.image(k), 3, &d).expect("substitution");
            r.push(Check::identity(
                format!("{label}: Gysin image c_({k}) of the double surface"),
                &reduced,
                &GradedPolynomial::zero(),
            ));
            r.push(Check::identity(
                format!("{label}: degree of Gysin image c_({k}) of the double surface"),
                &dl.surface.xi(&MultiIndex::from_digits(k).expect("index")),
                &GradedPolynomial::zero(),
            ));
        }
    }
    r
}

fn chi_c_parity(label: &str, chi_c: &Scalar) -> Check {
    let ok = chi_c
        .as_rational()
        .is_some_and(|v: Rational| is_even_integer(&v));
    Check::condition(format!("{label}: chi_C is even"), ok, chi_c.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for suite in [Suite::Tables, Suite::Surface, Suite::Threefold] {
            let report = run_suite(suite);
            let failures: Vec<String> = report.failures().map(|c| c.to_string()).collect();
            assert!(failures.is_empty(), "{suite}: {failures:#?}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn misprints_are_reported_as_expected_mismatches() {
        let report = run_suite(Suite::All);
        let expected: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.kind == crate::report::CheckKind::KnownMisprint)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(
            expected,
            [
                "misprinted xi-line: rho",
                "misprinted xi-line: s01",
                "misprinted xi-line: m2"
            ]
        );
    }

    #[test]
    fn a_wrong_printed_residual_fails() {
        let m = KnownMisprint {
            residual: "3*xi01",
            ..*known_misprint("rho")
        };
        let ctx = Kind::Surface.symbolic_context();
        let chars = surface_characters(&ctx).unwrap();
        let check = misprint(&m, &chars.rho, &surface_values(&chars));
        assert!(!check.passed);
    }

    #[test]
    fn suite_names() {
        assert_eq!("threefold".parse::<Suite>(), Ok(Suite::Threefold));
        assert!("everything".parse::<Suite>().is_err());
    }
}
