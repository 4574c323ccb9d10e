//! Stored universal polynomials: Thom polynomials of stable (multi-)singularities
//! for relative codimension 0 and 1, and truncated Segre-SM series.
//!
//! The entries live in `data/universal_polynomials.tbl`, one per line:
//!
//! ```text
//! name | kappa | codim | polynomial | valid_to_weight
//! ```
//!
//! The polynomial column is the canonical rendering, so every row can be
//! checked to reproduce itself byte for byte.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{parse_polynomial, ratio, AlgebraError, GradedPolynomial, ParseOptions};
use crate::report::{Check, Report};

pub const TABLE_SOURCE: &str = include_str!("../data/universal_polynomials.tbl");

/// Names of the tabulated classes. Thom polynomials are named by their
/// (multi-)singularity type, Segre-SM series by the closure they measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassName {
    A1,
    A2,
    A3,
    A1Squared,
    A1Cubed,
    A1A2,
    A2A1,
    A0Squared,
    A0Cubed,
    A0A1,
    A1A0,
    A0Fourth,
    /// Closure of the `A1` locus.
    A1Closure,
    /// Closure of the double-point locus.
    A0SquaredClosure,
    /// The image hypersurface `f(M)`.
    Image,
    /// The double locus of the image.
    DoubleImage,
}

const NAMES: [(ClassName, &str); 16] = [
    (ClassName::A1, "A1"),
    (ClassName::A2, "A2"),
    (ClassName::A3, "A3"),
    (ClassName::A1Squared, "A1^2"),
    (ClassName::A1Cubed, "A1^3"),
    (ClassName::A1A2, "A1A2"),
    (ClassName::A2A1, "A2A1"),
    (ClassName::A0Squared, "A0^2"),
    (ClassName::A0Cubed, "A0^3"),
    (ClassName::A0A1, "A0A1"),
    (ClassName::A1A0, "A1A0"),
    (ClassName::A0Fourth, "A0^4"),
    (ClassName::A1Closure, "A1bar"),
    (ClassName::A0SquaredClosure, "A0^2bar"),
    (ClassName::Image, "alpha_im"),
    (ClassName::DoubleImage, "alpha_im(2)"),
];

impl ClassName {
    pub fn as_str(self) -> &'static str {
        NAMES.iter().find(|(n, _)| *n == self).unwrap().1
    }

    /// Segre-SM series as opposed to Thom polynomials.
    pub fn is_series(self) -> bool {
        matches!(
            self,
            ClassName::A1Closure
                | ClassName::A0SquaredClosure
                | ClassName::Image
                | ClassName::DoubleImage
        )
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = TableError;
    fn from_str(s: &str) -> Result<Self, TableError> {
        NAMES
            .iter()
            .find(|(_, text)| *text == s)
            .map(|(n, _)| *n)
            .ok_or_else(|| TableError::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("no tabulated {kind} for {name} at kappa = {kappa}")]
    Miss {
        kind: &'static str,
        name: ClassName,
        kappa: u32,
    },
    #[error("unknown class name {0:?}")]
    UnknownName(String),
    #[error("table line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("table line {line}: {source}")]
    Polynomial {
        line: usize,
        #[source]
        source: AlgebraError,
    },
}

/// A universal polynomial in `c_k` and `s_I` at fixed relative codimension.
#[derive(Clone, Debug)]
pub struct AbstractClass {
    pub name: ClassName,
    pub kappa: u32,
    /// Weight of the leading component.
    pub codim: u32,
    pub body: GradedPolynomial,
    /// Highest weight known to be correct; `None` for exact polynomials.
    pub valid_to_weight: Option<u32>,
    /// The polynomial column as written in the table file.
    pub source_text: String,
}

impl AbstractClass {
    pub fn is_series(&self) -> bool {
        self.name.is_series()
    }

    pub fn component(&self, w: u32) -> GradedPolynomial {
        self.body.component(w)
    }

    pub fn leading_component(&self) -> GradedPolynomial {
        self.body
            .min_weight()
            .map_or_else(GradedPolynomial::zero, |w| self.body.component(w))
    }
}

pub fn parse_table(text: &str) -> Result<Vec<AbstractClass>, TableError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = trimmed.split('|').map(str::trim).collect();
        let malformed = |message: &str| TableError::Malformed {
            line,
            message: message.to_string(),
        };
        if cols.len() != 5 {
            return Err(malformed("expected 5 '|'-separated columns"));
        }
        let name: ClassName = cols[0]
            .parse()
            .map_err(|_| malformed("unknown class name"))?;
        let kappa: u32 = cols[1].parse().map_err(|_| malformed("bad kappa"))?;
        let codim: u32 = cols[2].parse().map_err(|_| malformed("bad codim"))?;
        let body = parse_polynomial(cols[3], &ParseOptions::universal(kappa))
            .map_err(|source| TableError::Polynomial { line, source })?;
        let valid_to_weight = match cols[4] {
            "inf" => None,
            w => Some(w.parse().map_err(|_| malformed("bad valid_to_weight"))?),
        };
        if name.is_series() == valid_to_weight.is_none() {
            return Err(malformed(
                "series need a finite validity weight, Thom polynomials 'inf'",
            ));
        }
        out.push(AbstractClass {
            name,
            kappa,
            codim,
            body,
            valid_to_weight,
            source_text: cols[3].to_string(),
        });
    }
    Ok(out)
}

/// All stored entries, parsed once.
pub fn entries() -> &'static [AbstractClass] {
    static TABLE: OnceLock<Vec<AbstractClass>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(TABLE_SOURCE).expect("bundled table parses"))
}

fn lookup(name: ClassName, kappa: u32, series: bool) -> Result<&'static AbstractClass, TableError> {
    entries()
        .iter()
        .find(|e| e.name == name && e.kappa == kappa && e.is_series() == series)
        .ok_or(TableError::Miss {
            kind: if series {
                "Segre-SM series"
            } else {
                "Thom polynomial"
            },
            name,
            kappa,
        })
}

pub fn thom_polynomial(name: ClassName, kappa: u32) -> Result<&'static AbstractClass, TableError> {
    lookup(name, kappa, false)
}

pub fn ssm_series(name: ClassName, kappa: u32) -> Result<&'static AbstractClass, TableError> {
    lookup(name, kappa, true)
}

/// The class whose leading term a series must reproduce, scaled by the
/// inverse of the number of sheets: the image has leading term 1 and the double
/// image half the double-point class.
fn expected_leading(series: &AbstractClass) -> Option<GradedPolynomial> {
    let tp = |n| {
        thom_polynomial(n, series.kappa)
            .ok()
            .map(|t| t.body.clone())
    };
    match series.name {
        ClassName::A1Closure => tp(ClassName::A1),
        ClassName::A0SquaredClosure => tp(ClassName::A0Squared),
        ClassName::Image => Some(GradedPolynomial::one()),
        ClassName::DoubleImage => tp(ClassName::A0Squared).map(|p| p.scale(&ratio(1, 2))),
        _ => None,
    }
}

/// Structural checks on every stored entry.
pub fn validate_tables() -> Report {
    validate_entries(entries())
}

pub fn validate_entries(entries: &[AbstractClass]) -> Report {
    let mut report = Report::default();
    for e in entries {
        let tag = format!("{}@kappa={}", e.name, e.kappa);
        let rendered = e.body.to_string();
        report.push(Check::condition(
            format!("golden rendering {tag}"),
            rendered == e.source_text,
            format!("rendered {rendered:?}"),
        ));
        if e.is_series() {
            let lowest = e.body.min_weight();
            let highest = e.body.max_weight();
            report.push(Check::condition(
                format!("series weights {tag}"),
                lowest == Some(e.codim) && highest <= e.valid_to_weight,
                format!("weights {lowest:?}..{highest:?}"),
            ));
            match expected_leading(e) {
                Some(tp) => report.push(Check::identity(
                    format!("leading component {tag}"),
                    &e.leading_component(),
                    &tp,
                )),
                None => report.push(Check::condition(
                    format!("leading component {tag}"),
                    false,
                    "no matching Thom polynomial",
                )),
            }
        } else {
            let w = e.body.homogeneous_weight();
            report.push(Check::condition(
                format!("homogeneous of codim {} {tag}", e.codim),
                w == Some(e.codim),
                format!(
                    "weights {:?}..{:?}",
                    e.body.min_weight(),
                    e.body.max_weight()
                ),
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, ParseOptions};

    fn poly(text: &str, kappa: u32) -> GradedPolynomial {
        parse_polynomial(text, &ParseOptions::universal(kappa)).unwrap()
    }

    #[test]
    fn lookups() {
        assert_eq!(
            thom_polynomial(ClassName::A1, 0).unwrap().body,
            poly("c1", 0)
        );
        assert_eq!(
            thom_polynomial(ClassName::A0Cubed, 1).unwrap().body,
            poly("1/2*(s0^2 - s1 - 2*s0*c1 + 2*c1^2 + 2*c2)", 1)
        );
        assert_eq!(
            thom_polynomial(ClassName::A3, 0).unwrap().body,
            poly("c1^3 + 3*c1*c2 + 2*c3", 0)
        );
    }

    #[test]
    fn misses() {
        assert_eq!(
            thom_polynomial(ClassName::A0Squared, 0).unwrap_err(),
            TableError::Miss {
                kind: "Thom polynomial",
                name: ClassName::A0Squared,
                kappa: 0
            }
        );
        assert!(ssm_series(ClassName::A1, 1).is_err());
        assert!(thom_polynomial(ClassName::A1Closure, 1).is_err());
    }

    #[test]
    fn series_lookups() {
        let a1 = ssm_series(ClassName::A1Closure, 1).unwrap();
        assert_eq!(a1.body, poly("c2 - (c1*c2 + c3)", 1));
        assert_eq!(a1.valid_to_weight, Some(3));
        assert_eq!(a1.component(2), poly("c2", 1));
        let im = ssm_series(ClassName::Image, 1).unwrap();
        assert_eq!(im.component(0), GradedPolynomial::one());
        let dp = ssm_series(ClassName::A0SquaredClosure, 1).unwrap();
        assert_eq!(dp.component(1), poly("s0 - c1", 1));
        let orders: Vec<_> = [
            (ClassName::A1Closure, 0),
            (ClassName::A1Closure, 1),
            (ClassName::A0SquaredClosure, 1),
            (ClassName::Image, 1),
            (ClassName::DoubleImage, 1),
        ]
        .iter()
        .map(|&(n, k)| ssm_series(n, k).unwrap().valid_to_weight.unwrap())
        .collect();
        assert_eq!(orders, [4, 3, 2, 3, 3]);
    }

    #[test]
    fn bundled_table_validates() {
        let report = validate_tables();
        for c in report.failures() {
            eprintln!("{c}");
        }
        assert!(report.all_passed());
        assert_eq!(entries().len(), 18);
    }

    #[test]
    fn validation_catches_inhomogeneous_rows() {
        let bad = parse_table("A2 | 0 | 2 | c1 + c2 | inf\n").unwrap();
        let report = validate_entries(&bad);
        assert!(!report.all_passed());
        let names: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert_eq!(names, ["homogeneous of codim 2 A2@kappa=0"]);
    }

    #[test]
    fn malformed_rows() {
        assert!(matches!(
            parse_table("A2 | 0 | 2 | c1 + | inf"),
            Err(TableError::Polynomial { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("A9 | 0 | 2 | c1 | inf"),
            Err(TableError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("A1bar | 0 | 1 | c1 | inf"),
            Err(TableError::Malformed { .. })
        ));
    }
}
