//! Random polynomials, ξ-data and documents shared by the property tests and
//! the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;

use charclass::algebra::{
    format_rational, parse_rational, GradedPolynomial, Monomial, Rational, VariableId,
};
use charclass::chern::{required_indices, MapContext, XiInput};
use charclass::cli::{compute_surface, parse_input, ChernDataInput, InputDocument};
use charclass::presets::Kind;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-12i64..=-1, 1i64..=12], 1i64..=5)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Exponents of `at, c1, c2, c3, d, xi1` in one monomial.
fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=2, 6).prop_map(|e| {
        let vars = [
            VariableId::SourceHyperplane,
            VariableId::SourceChern(1),
            VariableId::SourceChern(2),
            VariableId::SourceChern(3),
            VariableId::d(),
            VariableId::xi("1"),
        ];
        vars.into_iter()
            .zip(e)
            .fold(Monomial::one(), |acc, (v, k)| {
                acc.mul(&Monomial::power(v, k))
            })
    })
}

/// Sparse polynomials in source classes with symbolic scalar coefficients.
pub fn polynomial() -> impl Strategy<Value = GradedPolynomial> {
    proptest::collection::vec((monomial(), rational()), 0..5)
        .prop_map(|terms| GradedPolynomial::from_terms(terms, None, None))
}

/// The same, truncated at a random weight.
pub fn capped_polynomial() -> impl Strategy<Value = (GradedPolynomial, u32)> {
    (polynomial(), 1u32..=4).prop_map(|(p, cap)| (p.with_cap(cap), cap))
}

/// `1 + (terms of positive weight)`.
pub fn unit_series() -> impl Strategy<Value = GradedPolynomial> {
    polynomial().prop_map(|p| {
        let positive = GradedPolynomial::from_terms(
            p.terms()
                .filter(|(m, _)| m.weight(None) > 0)
                .map(|(m, c)| (m.clone(), c.clone())),
            None,
            None,
        );
        GradedPolynomial::one() + positive
    })
}

/// Images for `at, c1, c2, c3`: arbitrary polynomials in the same variables.
pub fn assignment() -> impl Strategy<Value = BTreeMap<VariableId, GradedPolynomial>> {
    proptest::collection::vec(polynomial(), 4).prop_map(|images| {
        let vars = [
            VariableId::SourceHyperplane,
            VariableId::SourceChern(1),
            VariableId::SourceChern(2),
            VariableId::SourceChern(3),
        ];
        vars.into_iter().zip(images).collect()
    })
}

/// A context with random rational ξ-data, `1 <= m < n <= 4`.
pub fn context() -> impl Strategy<Value = MapContext> {
    (1u32..=3)
        .prop_flat_map(|m| (Just(m), (m + 1)..=4))
        .prop_flat_map(|(m, n)| {
            let indices = required_indices(m);
            let len = indices.len();
            (
                Just((m, n, indices)),
                proptest::collection::vec(rational(), len),
            )
        })
        .prop_map(|((m, n, indices), values)| {
            let xi = indices
                .into_iter()
                .zip(values)
                .map(|(i, v)| (i, GradedPolynomial::constant(v)))
                .collect();
            MapContext::new(m, n, XiInput::Values(xi)).unwrap()
        })
}

/// A source class of the context: polynomial in `at, c_k` with rational coefficients.
fn source_class(ctx: &MapContext) -> impl Strategy<Value = GradedPolynomial> {
    let m = ctx.source_dim();
    proptest::collection::vec(
        (
            proptest::collection::vec(0u32..=2, 1 + m as usize),
            rational(),
        ),
        0..5,
    )
    .prop_map(move |terms| {
        let terms = terms.into_iter().map(|(e, c)| {
            let mono = e.iter().enumerate().fold(Monomial::one(), |acc, (k, &x)| {
                let v = if k == 0 {
                    VariableId::SourceHyperplane
                } else {
                    VariableId::SourceChern(k as u32)
                };
                acc.mul(&Monomial::power(v, x))
            });
            (mono, c)
        });
        GradedPolynomial::from_terms(terms, Some(m), None)
    })
}

/// A polynomial in `a` with coefficients that may involve `d`.
fn target_class(n: u32) -> impl Strategy<Value = GradedPolynomial> {
    proptest::collection::vec((0u32..=n, 0u32..=1, rational()), 0..4).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(k, e, c)| {
            (
                Monomial::power(VariableId::TargetHyperplane, k)
                    .mul(&Monomial::power(VariableId::d(), e)),
                c,
            )
        });
        GradedPolynomial::from_terms(terms, Some(n), None)
    })
}

pub fn projection_case() -> impl Strategy<Value = (MapContext, GradedPolynomial, GradedPolynomial)>
{
    context().prop_flat_map(|ctx| {
        let n = ctx.target_dim();
        let x = source_class(&ctx);
        (Just(ctx), x, target_class(n))
    })
}

pub fn input_document() -> impl Strategy<Value = InputDocument> {
    prop_oneof![Just(Kind::Surface), Just(Kind::Threefold)]
        .prop_flat_map(|kind| {
            let len = kind.indices().len();
            (
                Just(kind),
                proptest::option::weighted(0.9, proptest::collection::vec(rational(), len)),
            )
        })
        .prop_map(|(kind, values)| InputDocument {
            kind,
            chern_data: match values {
                None => ChernDataInput::Symbolic,
                Some(v) => ChernDataInput::Values(kind.indices().into_iter().zip(v).collect()),
            },
        })
}

pub fn surface_document() -> impl Strategy<Value = InputDocument> {
    proptest::collection::vec(rational(), 4).prop_map(|v| InputDocument {
        kind: Kind::Surface,
        chern_data: ChernDataInput::Values(Kind::Surface.indices().into_iter().zip(v).collect()),
    })
}

fn same(lhs: &GradedPolynomial, rhs: &GradedPolynomial, what: &str) -> Result<(), TestCaseError> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(TestCaseError::fail(format!("{what}: {lhs} != {rhs}")))
    }
}

pub fn check_ring_laws(
    p: &GradedPolynomial,
    q: &GradedPolynomial,
    r: &GradedPolynomial,
) -> Result<(), TestCaseError> {
    same(&(p + q), &(q + p), "p + q = q + p")?;
    same(&(p * q), &(q * p), "p q = q p")?;
    same(&((p + q) + r), &(p + (q + r)), "(p + q) + r = p + (q + r)")?;
    same(&((p * q) * r), &(p * (q * r)), "(p q) r = p (q r)")?;
    same(&(p * (q + r)), &(p * q + p * r), "p (q + r) = p q + p r")?;
    let minus_p = p.scale(&Rational::from_integer(BigInt::from(-1)));
    same(&(p + &minus_p), &GradedPolynomial::zero(), "p + (-1) p = 0")?;
    same(&(p * GradedPolynomial::one()), p, "p 1 = p")
}

pub fn check_series_inversion(p: &GradedPolynomial, cap: u32) -> Result<(), TestCaseError> {
    let inverse = p
        .invert_unit_series(cap)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    same(
        &(&inverse * p).with_cap(cap),
        &GradedPolynomial::one(),
        "p^-1 p = 1",
    )?;
    same(
        &(p * &inverse).with_cap(cap),
        &GradedPolynomial::one(),
        "p p^-1 = 1",
    )
}

pub fn check_substitution(
    p: &GradedPolynomial,
    q: &GradedPolynomial,
    assignment: &BTreeMap<VariableId, GradedPolynomial>,
    cap: u32,
) -> Result<(), TestCaseError> {
    let s = |x: &GradedPolynomial| {
        x.substitute(assignment, Some(cap))
            .map_err(|e| TestCaseError::fail(e.to_string()))
    };
    same(
        &s(&(p * q))?,
        &(s(p)? * s(q)?).with_cap(cap),
        "subst(p q) = subst(p) subst(q)",
    )?;
    same(
        &s(&(p + q))?,
        &(s(p)? + s(q)?),
        "subst(p + q) = subst(p) + subst(q)",
    )
}

pub fn check_projection_formula(
    ctx: &MapContext,
    x: &GradedPolynomial,
    y: &GradedPolynomial,
) -> Result<(), TestCaseError> {
    let fail = |e: charclass::chern::ChernError| TestCaseError::fail(e.to_string());
    let lhs = ctx
        .pushforward(&(ctx.pullback(y).map_err(fail)? * x))
        .map_err(fail)?;
    let rhs = (y * ctx.pushforward(x).map_err(fail)?).with_cap(ctx.target_dim());
    same(&lhs, &rhs, "f_*(f^*y x) = y f_*x")?;
    // integration reads the coefficient of a^n of the pushforward
    let pushed = ctx.pushforward(x).map_err(fail)?;
    let coefficient = pushed
        .terms()
        .filter(|(m, _)| {
            let (_, rest) = m.split_scalar();
            rest == Monomial::power(VariableId::TargetHyperplane, ctx.target_dim())
        })
        .map(|(m, c)| GradedPolynomial::from_term(m.split_scalar().0, c.clone()))
        .fold(GradedPolynomial::zero(), |acc, t| acc + t);
    same(
        &ctx.integrate(x).map_err(fail)?,
        &coefficient,
        "integral = a^n coefficient",
    )
}

pub fn check_document_round_trip(doc: &InputDocument) -> Result<(), TestCaseError> {
    let text = serde_json::to_string(&doc.to_json()).unwrap();
    let back = parse_input(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    if &back != doc {
        return Err(TestCaseError::fail(format!("{text} parsed to {back:?}")));
    }
    Ok(())
}

/// Every character in `--json` output parses back to the computed rational.
pub fn check_result_round_trip(doc: &InputDocument) -> Result<(), TestCaseError> {
    let ctx = doc
        .context()
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    let computation = compute_surface(&ctx).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let json = computation.to_json(doc);
    let text = serde_json::to_string(&json).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    for (name, value) in &computation.characters {
        let printed = parsed["characters"][*name]
            .as_str()
            .ok_or_else(|| TestCaseError::fail(format!("{name} missing")))?;
        let r = parse_rational(printed).map_err(|e| TestCaseError::fail(e.to_string()))?;
        if Some(&r) != value.as_rational().as_ref() || format_rational(&r) != printed {
            return Err(TestCaseError::fail(format!("{name}: {printed} vs {value}")));
        }
    }
    Ok(())
}

/// The universal polynomials transcribed a second time, in factored form.
pub const FACTORED: &[(&str, u32, &str)] = &[
    ("A1", 0, "c1"),
    ("A2", 0, "c1^2 + c2"),
    ("A1^2", 0, "c1*s1 - 4*c1^2 - 2*c2"),
    ("A3", 0, "c1^3 + 3*c1*c2 + 2*c3"),
    ("A1^3", 0, "1/2*(c1*s1^2 - 4*c2*s1 - 4*c1*s2 - 2*c1*s01 - 8*c1^2*s1 + 40*c1^3 + 56*c1*c2 + 24*c3)"),
    ("A1A2", 0, "c1*s2 + c1*s01 - 6*c1^3 - 12*c1*c2 - 6*c3"),
    ("A2A1", 0, "c1^2*s1 + c2*s1 - 6*c1^3 - 12*c1*c2 - 6*c3"),
    ("A0^2", 1, "s0 - c1"),
    ("A1", 1, "c2"),
    ("A0^3", 1, "1/2*(s0^2 - s1 - 2*s0*c1 + 2*c1^2 + 2*c2)"),
    ("A0A1", 1, "s01 - 2*c1*c2 - 2*c3"),
    ("A1A0", 1, "s0*c2 - 2*c1*c2 - 2*c3"),
    ("A0^4", 1, "1/6*(s0^3 - 3*s0*s1 + 2*s2 + 2*s01 - 3*s0^2*c1 + 3*s1*c1 + 6*s0*c1^2 + 6*s0*c2 - 6*c1^3 - 18*c1*c2 - 12*c3)"),
    ("A1bar", 0, "c1 - c1^2 + c1^3 - (c1^4 + c2^2 - c1*c3)"),
    ("A1bar", 1, "c2 - (c1*c2 + c3)"),
    ("A0^2bar", 1, "(s0 - c1) + 1/2*(2*c2 + 2*c1*s0 - s0^2 - s1)"),
    ("alpha_im", 1, "1 + 1/2*(c1 - s0) + 1/6*(s0^2 + 2*s1 - 2*c1*s0 - c1^2 - c2) + 1/24*(2*c1^3 - 10*c1*c2 + 2*c1^2*s0 + 2*c2*s0 + 3*c1*s0^2 - s0^3 + 14*s01 + 5*c1*s1 - 5*s0*s1 - 6*s2)"),
    ("alpha_im(2)", 1, "1/2*(s0 - c1) + 1/6*(-c1^2 + 5*c2 + 4*c1*s0 - 2*s0^2 - s1) + 1/24*(2*c1^3 + 38*c1*c2 + 24*c3 + 2*c1^2*s0 - 22*c2*s0 - 9*c1*s0^2 + 3*s0^3 - 14*s01 - 7*c1*s1 + 7*s0*s1 + 2*s2)"),
];
