//! Closed forms of the projective characters as stated in the classical
//! literature, kept as text and parsed on demand.
//!
//! Atoms: `d`, `xi...` for the ξ-data; `eps0`, `C`, `T` for surface
//! characters; `mu0`, `t`, `gamma`, `q`, `s_t`, `chi_C` for 3-fold characters.
//! These are the comparison targets of the verification suite; the engine never
//! computes a character from them, with the single exception of `m3`.

use std::collections::BTreeMap;

use crate::algebra::{parse_polynomial, AlgebraError, GradedPolynomial, ParseOptions, VariableId};

/// Landweber-Novikov classes of a surface in P^3, as target classes.
pub const SURFACE_LN_LINES: &[(&str, &str)] = &[
    ("s0", "d*a"),
    ("s1", "(4*d - xi1)*a^2"),
    ("s2", "(16*d - 8*xi1 + xi2)*a^3"),
    ("s01", "(6*a - 4*xi1 + xi2 - xi01)*a^3"),
];

/// Surface characters in the ξ-data.
pub const SURFACE_XI_LINES: &[(&str, &str)] = &[
    ("C", "6*d - 4*xi1 + xi2 - xi01"),
    (
        "T",
        "1/6*(44*d - 12*d^2 + d^3 + (3*d - 24)*xi1 + 4*xi2 - 2*xi01)",
    ),
    ("eps0", "1/2*(d^2 - 4*d + xi1)"),
    ("kappa_cusps", "12*d - 9*xi1 + 2*xi2 - xi01"),
    ("mu1", "3*d - xi1"),
    ("chi_Sg", "-9*d + 9*xi1 - 2*xi2"),
    ("mu2", "3*d - 2*xi1 + xi01"),
    ("rho", "-18*d + 3*d^2 + (11 - d)*xi1 - 2*xi01 + xi2"),
    (
        "chi_D",
        "1/3*(7*d + 6*d^2 - d^3 - 5/2*xi01 - 12*xi1 + 7/2*xi2)",
    ),
    ("eps1", "3*d^2 - 21*d + (13 - d)*xi1 + 3/2*xi01 - 5/2*xi2"),
];

/// Surface characters in `d, eps0, C, T`.
pub const SURFACE_CLOSED_FORMS: &[(&str, &str)] = &[
    ("kappa_cusps", "d*(d - 1)*(d - 2) + (6 - 3*d)*eps0 + 3*T"),
    ("mu1", "d*(d - 1) - 2*eps0"),
    ("mu2", "d*(d - 1)^2 + (4 - 3*d)*eps0 + 3*T - 2*C"),
    ("rho", "(d - 2)*eps0 - 3*T"),
    ("chi_D", "(4 - d)*eps0 + T + 1/2*C"),
    ("eps1", "(d - 2)*eps0 - 3*T - 1/2*C"),
];

/// ξ-data of a surface in terms of `d, eps0, C, T`.
pub const SURFACE_INVERSE: &[(&str, &str)] = &[
    ("xi1", "d*(4 - d) + 2*eps0"),
    ("xi2", "d*(d - 4)^2 + (16 - 3*d)*eps0 + 3*T - C"),
    ("xi01", "d*(d^2 - 4*d + 6) + (8 - 3*d)*eps0 + 3*T - 2*C"),
];

/// The seven basic characters of a 3-fold in P^4 in the ξ-data.
pub const THREEFOLD_XI_LINES: &[(&str, &str)] = &[
    ("mu0", "1/2*(-5*d + d^2 + xi1)"),
    (
        "t",
        "1/3*(35*d - 15/2*d^2 + 1/2*d^3 - xi01 - 15*xi1 + 3/2*d*xi1 + 2*xi2)",
    ),
    ("gamma", "10*d - xi01 - 5*xi1 + xi2"),
    (
        "q",
        "1/4*(-295*d + 355/6*d^2 - 5*d^3 + 1/6*d^4 + 2*xi001 + (25 - 4/3*d)*xi01 \
         + (200 - 25*d + d^2)*xi1 + 1/2*xi1^2 - 7*xi11 + (-55 + 8/3*d)*xi2 + 6*xi3)",
    ),
    (
        "s_t",
        "-120*d + 10*d^2 + 2*xi001 + (20 - d)*xi01 + (90 - 5*d)*xi1 - 6*xi11 \
         + (d - 30)*xi2 + 4*xi3",
    ),
    (
        "chi_C",
        "-60*d + xi001 + 10*xi01 + 55*xi1 - 4*xi11 - 20*xi2 + 3*xi3",
    ),
];

/// ξ-data of a 3-fold in terms of `d, mu0, t, q, s_t, gamma, chi_C`.
pub const THREEFOLD_INVERSE: &[(&str, &str)] = &[
    ("xi1", "5*d - d^2 + 2*mu0"),
    ("xi2", "25*d - 10*d^2 + d^3 + (20 - 3*d)*mu0 + 3*t - gamma"),
    (
        "xi01",
        "10*d - 5*d^2 + d^3 + (10 - 3*d)*mu0 + 3*t - 2*gamma",
    ),
    (
        "xi3",
        "125*d - 75*d^2 + 15*d^3 - d^4 + (150 - 45*d + 4*d^2 - 2*mu0)*mu0 + 4*q \
         - 1/2*s_t + (45 - 4*d)*t + (-10 + 1/2*d)*gamma - chi_C",
    ),
    (
        "xi11",
        "50*d - 35*d^2 + 10*d^3 - d^4 + (70 - 30*d + 4*d^2 - 2*mu0)*mu0 + 4*q \
         + (30 - 4*d)*t - 5*gamma - 2*chi_C",
    ),
    (
        "xi001",
        "10*d - 10*d^2 + 5*d^3 - d^4 + (20 - 15*d + 4*d^2 - 2*mu0)*mu0 + 4*q \
         + 3/2*s_t + (15 - 4*d)*t + (10 - 3/2*d)*gamma - 4*chi_C",
    ),
];

/// Elementary characters and `K_M . S` of a 3-fold in the ξ-data.
pub const THREEFOLD_DERIVED_XI_LINES: &[(&str, &str)] = &[
    ("m1", "4*d - xi1"),
    ("m2", "6*d - 3*xi1 - xi01"),
    ("m3", "4*d - xi001 + 2*xi01 - 3*xi1"),
    ("K_dot_S", "-10*xi1 + xi11 + 5*xi2 - xi3"),
];

/// The same in terms of the seven basic characters.
pub const THREEFOLD_CLOSED_FORMS: &[(&str, &str)] = &[
    ("m1", "d*(d - 1) - 2*mu0"),
    ("m2", "d*(d - 1)^2 + (4 - 3*d)*mu0 + 3*t - 2*gamma"),
    (
        "m3",
        "d*(d - 1)^3 + (-6 + 9*d - 4*d^2 + 2*mu0)*mu0 - 4*q - 3/2*s_t + (4*d - 9)*t \
         + (3/2*d - 14)*gamma + 4*chi_C",
    ),
    ("K_dot_S", "1/2*s_t - 1/2*d*gamma - chi_C"),
];

/// A stated ξ-line that disagrees with the engine, and by how much.
#[derive(Clone, Copy, Debug)]
pub struct KnownMisprint {
    pub character: &'static str,
    /// The stated line (from one of the tables above).
    pub printed: &'static str,
    /// `engine - printed`, exactly.
    pub residual: &'static str,
    /// A stated form the engine does agree with, and the atoms it is written in.
    pub consistent: &'static str,
    pub consistent_kind: ConsistentKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsistentKind {
    /// In the surface characters `d, eps0, C, T`.
    SurfaceClosedForm,
    /// In the 3-fold basic characters.
    ThreefoldClosedForm,
    /// A class on P^3, consistent with `C`'s ξ-line times `a^3`.
    TargetClass,
}

pub const KNOWN_MISPRINTS: &[KnownMisprint] = &[
    KnownMisprint {
        character: "rho",
        printed: "-18*d + 3*d^2 + (11 - d)*xi1 - 2*xi01 + xi2",
        residual: "3*xi01 - 3*xi2",
        consistent: "(d - 2)*eps0 - 3*T",
        consistent_kind: ConsistentKind::SurfaceClosedForm,
    },
    KnownMisprint {
        character: "m2",
        printed: "6*d - 3*xi1 - xi01",
        residual: "2*xi01",
        consistent: "d*(d - 1)^2 + (4 - 3*d)*mu0 + 3*t - 2*gamma",
        consistent_kind: ConsistentKind::ThreefoldClosedForm,
    },
    KnownMisprint {
        character: "s01",
        printed: "(6*a - 4*xi1 + xi2 - xi01)*a^3",
        // read in the cohomology of P^3, where the printed 6*a^4 vanishes
        residual: "6*d*a^3",
        consistent: "(6*d - 4*xi1 + xi2 - xi01)*a^3",
        consistent_kind: ConsistentKind::TargetClass,
    },
];

/// Parses a stated form. Every form in this module parses.
pub fn form(text: &str) -> GradedPolynomial {
    parse_polynomial(text, &ParseOptions::default())
        .unwrap_or_else(|e| panic!("stated form {text:?} does not parse: {e}"))
}

pub fn lookup(table: &[(&'static str, &'static str)], name: &str) -> Option<GradedPolynomial> {
    table.iter().find(|(n, _)| *n == name).map(|(_, t)| form(t))
}

/// Replaces named parameters by polynomials.
pub fn substitute_params(
    p: &GradedPolynomial,
    values: &BTreeMap<String, GradedPolynomial>,
) -> Result<GradedPolynomial, AlgebraError> {
    let assignment: BTreeMap<VariableId, GradedPolynomial> = values
        .iter()
        .map(|(k, v)| (VariableId::param(k), v.clone()))
        .collect();
    p.substitute(&assignment, None)
}

/// `name -> stated ξ-line` for a table, ready for [`substitute_params`].
pub fn as_assignment(table: &[(&'static str, &'static str)]) -> BTreeMap<String, GradedPolynomial> {
    table
        .iter()
        .map(|(n, t)| (n.to_string(), form(t)))
        .collect()
}
