//! Command-line front end of the `charclass` binary.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, parse_rational, GradedPolynomial, MultiIndex, Rational};
use crate::chern::{ChernError, MapContext, Scalar};
use crate::presets::{parse_xi_key, preset_xi, xi_key, Kind, PresetName};
use crate::report::{Check, CheckKind, Report};
use crate::surface::{surface_characters, surface_invert, verify_surface_relations};
use crate::threefold::{
    threefold_characters, threefold_invert, ThreefoldBasic, ThreefoldCharacters,
};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "charclass",
    version,
    about = "Numerical characters of surfaces in P^3 and 3-folds in P^4 with ordinary singularities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characters of a surface in P^3 from the ξ-data of its normalization.
    Surface(ComputeArgs),
    /// Characters of a 3-fold in P^4 from the ξ-data of its normalization.
    Threefold(ComputeArgs),
    /// ξ-data from the basic characters.
    Invert {
        #[arg(long)]
        kind: Kind,
        /// JSON file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the identity suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
    /// Symbolic formula of one character and how it is computed.
    Derive {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        character: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the input document of a standard example, or list them.
    Preset {
        name: Option<PresetName>,
        #[arg(long)]
        degree: Option<String>,
    },
}

#[derive(Debug, clap::Args)]
pub struct ComputeArgs {
    /// JSON file; standard input when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// An input problem, located by a JSON path where possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl InputError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        InputError {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Clone, PartialEq)]
pub enum ChernDataInput {
    Symbolic,
    Values(BTreeMap<MultiIndex, Rational>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct InputDocument {
    pub kind: Kind,
    pub chern_data: ChernDataInput,
}

fn parse_json(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| {
        InputError::new(
            format!("line {} column {}", e.line(), e.column()),
            format!("invalid JSON: {e}"),
        )
    })
}

fn rational_at(value: &Value, path: &str) -> Result<Rational, InputError> {
    let text = value.as_str().ok_or_else(|| {
        InputError::new(
            path,
            "expected a rational written as a string such as \"3\" or \"-7/2\"",
        )
    })?;
    parse_rational(text).map_err(|e| InputError::new(path, e.to_string()))
}

pub fn parse_input(text: &str) -> Result<InputDocument, InputError> {
    let value = parse_json(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| InputError::new("$", "expected a JSON object"))?;
    for key in obj.keys() {
        if key != "kind" && key != "chern_data" {
            return Err(InputError::new(format!("$.{key}"), "unexpected key"));
        }
    }
    let kind: Kind = obj
        .get("kind")
        .ok_or_else(|| InputError::new("$", "missing key kind"))?
        .as_str()
        .ok_or_else(|| InputError::new("$.kind", "expected a string"))?
        .parse()
        .map_err(|e: String| InputError::new("$.kind", e))?;
    let data = obj
        .get("chern_data")
        .ok_or_else(|| InputError::new("$", "missing key chern_data"))?;
    let chern_data = match data {
        Value::String(s) if s == "symbolic" => ChernDataInput::Symbolic,
        Value::Object(map) => {
            let expected = kind.xi_keys();
            let mut values = BTreeMap::new();
            for (key, v) in map {
                let path = format!("$.chern_data.{key}");
                let index = parse_xi_key(key)
                    .filter(|_| expected.contains(key))
                    .ok_or_else(|| {
                        InputError::new(
                            &path,
                            format!(
                                "unexpected key for a {kind}; expected {}",
                                expected.join(", ")
                            ),
                        )
                    })?;
                values.insert(index, rational_at(v, &path)?);
            }
            let missing: Vec<&str> = expected
                .iter()
                .filter(|k| !values.contains_key(&parse_xi_key(k).expect("canonical key")))
                .map(String::as_str)
                .collect();
            if !missing.is_empty() {
                return Err(InputError::new(
                    "$.chern_data",
                    format!("missing keys {}", missing.join(", ")),
                ));
            }
            ChernDataInput::Values(values)
        }
        _ => {
            return Err(InputError::new(
                "$.chern_data",
                "expected \"symbolic\" or an object of rational strings",
            ))
        }
    };
    Ok(InputDocument { kind, chern_data })
}

impl InputDocument {
    pub fn to_json(&self) -> Value {
        let data = match &self.chern_data {
            ChernDataInput::Symbolic => Value::String("symbolic".into()),
            ChernDataInput::Values(values) => Value::Object(
                values
                    .iter()
                    .map(|(i, v)| (xi_key(i), Value::String(format_rational(v))))
                    .collect(),
            ),
        };
        json!({ "kind": self.kind.as_str(), "chern_data": data })
    }

    pub fn context(&self) -> Result<MapContext, ChernError> {
        match &self.chern_data {
            ChernDataInput::Symbolic => Ok(self.kind.symbolic_context()),
            ChernDataInput::Values(values) => self.kind.context(
                values
                    .iter()
                    .map(|(i, v)| (i.clone(), GradedPolynomial::constant(v.clone())))
                    .collect(),
            ),
        }
    }

    /// Numeric documents only; symbolic values have no rational form.
    pub fn from_scalars(kind: Kind, xi: &BTreeMap<MultiIndex, Scalar>) -> Option<Self> {
        let values = xi
            .iter()
            .map(|(i, v)| v.as_rational().map(|r| (i.clone(), r)))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(InputDocument {
            kind,
            chern_data: ChernDataInput::Values(values),
        })
    }
}

/// Exact rational text for numbers, canonical rendering for polynomials.
pub fn render_scalar(v: &Scalar) -> String {
    match v.as_rational() {
        Some(r) => format_rational(&r),
        None => v.to_string(),
    }
}

fn check_json(c: &Check) -> Value {
    json!({
        "name": c.name,
        "kind": match c.kind {
            CheckKind::Identity => "identity",
            CheckKind::KnownMisprint => "known_misprint",
        },
        "passed": c.passed,
        "residual": c.residual,
    })
}

pub fn report_json(report: &Report) -> Value {
    Value::Array(report.checks.iter().map(check_json).collect())
}

/// Characters and the per-input diagnostics of a document.
pub struct Computation {
    pub characters: Vec<(&'static str, Scalar)>,
    pub diagnostics: Report,
}

impl Computation {
    pub fn to_json(&self, input: &InputDocument) -> Value {
        let characters: Map<String, Value> = self
            .characters
            .iter()
            .map(|(n, v)| (n.to_string(), Value::String(render_scalar(v))))
            .collect();
        json!({
            "input": input.to_json(),
            "characters": characters,
            "diagnostics": report_json(&self.diagnostics),
        })
    }

    pub fn to_text(&self) -> String {
        let width = self
            .characters
            .iter()
            .map(|(n, _)| n.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (name, v) in &self.characters {
            out.push_str(&format!("{name:<width$}  {}\n", render_scalar(v)));
        }
        if !self.diagnostics.checks.is_empty() {
            out.push('\n');
            for c in &self.diagnostics.checks {
                out.push_str(&format!("{c}\n"));
            }
        }
        out
    }
}

pub fn compute_surface(ctx: &MapContext) -> Result<Computation, ChernError> {
    let chars = surface_characters(ctx)?;
    let mut diagnostics = verify_surface_relations(ctx, &chars);
    let (xi1, xi2, xi01) = surface_invert(
        &chars.mu0,
        &chars.eps0,
        &chars.crosscaps,
        &chars.triple_points,
    );
    for (digits, got) in [("1", xi1), ("2", xi2), ("01", xi01)] {
        let index = MultiIndex::from_digits(digits).expect("index");
        diagnostics.push(Check::identity(
            format!("inversion round trip: {}", xi_key(&index)),
            &got,
            &ctx.xi(&index),
        ));
    }
    let characters = chars
        .named()
        .into_iter()
        .map(|(n, v)| (n, v.clone()))
        .collect();
    Ok(Computation {
        characters,
        diagnostics,
    })
}

pub fn compute_threefold(ctx: &MapContext) -> Result<Computation, ChernError> {
    let chars = threefold_characters(ctx)?;
    let diagnostics = threefold_diagnostics(ctx, &chars);
    let characters = chars
        .named()
        .into_iter()
        .map(|(n, v)| (n, v.clone()))
        .collect();
    Ok(Computation {
        characters,
        diagnostics,
    })
}

fn threefold_diagnostics(ctx: &MapContext, chars: &ThreefoldCharacters) -> Report {
    let mut report = Report::default();
    let inverted = threefold_invert(&chars.d, &chars.basic);
    for (got, index) in inverted.iter().zip(ctx.xi_table().keys().skip(1)) {
        report.push(Check::identity(
            format!("inversion round trip: {}", xi_key(index)),
            got,
            &ctx.xi(index),
        ));
    }
    let ThreefoldBasic {
        gamma, s_t, chi_c, ..
    } = &chars.basic;
    let half = GradedPolynomial::constant(crate::algebra::ratio(1, 2));
    report.push(Check::identity(
        "K_dot_S = s_t/2 - d*gamma/2 - chi_C",
        &chars.k_dot_s,
        &(&half * s_t - &half * &chars.d * gamma - chi_c),
    ));
    report
}

/// How each character is obtained, for `derive`.
pub fn provenance(kind: Kind, character: &str) -> Option<&'static str> {
    let table: &[(&str, &str)] = match kind {
        Kind::Surface => &[
            ("mu0", "the degree d"),
            ("mu1", "integral of tp(A1)(g) * at, g: M -> P^2 the generic projection (kappa = 0)"),
            ("mu2", "2*mu1 - chi_Sg - kappa_cusps (Riemann-Hurwitz on S(g))"),
            ("kappa_cusps", "integral of tp(A2)(g), kappa = 0"),
            ("eps0", "1/2 * integral of tp(A0^2)(f) * at, kappa = 1"),
            ("eps1", "2*eps0 - chi_D - 2*T (Riemann-Hurwitz on the resolved double curve)"),
            ("rho", "integral of tp(A0^2)(f) * tp(A1)(g) - C"),
            ("C", "integral of tp(A1)(f), kappa = 1"),
            ("T", "1/3 * integral of tp(A0^3)(f), kappa = 1"),
            ("chi_Sg", "integral of c(TM) * tpSM(A1bar)(g), kappa = 0"),
            ("chi_D", "integral of c(TM) * tpSM(alpha_im(2))(f), kappa = 1"),
        ],
        Kind::Threefold => &[
            ("d", "the degree d"),
            ("mu0", "1/2 * integral of tp(A0^2)(f) * at^2, kappa = 1"),
            ("t", "1/3 * integral of tp(A0^3)(f) * at, kappa = 1"),
            ("gamma", "integral of tp(A1)(f) * at, kappa = 1"),
            ("q", "1/4 * integral of tp(A0^4)(f), kappa = 1"),
            ("s_t", "integral of tp(A0A1)(f), kappa = 1"),
            ("chi_C", "integral of c(TM) * tpSM(A1bar)(f), kappa = 1"),
            ("m1", "integral of tp(A1)(g) * at^2, g: M -> P^3 the generic projection (kappa = 0)"),
            (
                "m2",
                "integral over S1 of tp(A1)(h) * at minus integral of tp(A2)(g) * at; \
                 S1 = A1(g) via its Gysin table, h: S1 -> P^2",
            ),
            ("m3", "closed form 4d - xi001 + 2*xi01 - 3*xi1"),
            ("D_swallowtail", "integral of tp(A3)(g), kappa = 0"),
            ("B_plus_D", "integral over S1 of tp(A2)(h), kappa = 0"),
            ("total_polar", "integral of tp(A1)(h'), h': S(h) -> P^1, S(h) = A1(h) via its Gysin table"),
            ("K_dot_S", "- integral of c1(TM) * tp(A1)(f), kappa = 1"),
            ("chi_X", "integral of c(TM) * tpSM(alpha_im)(f), kappa = 1"),
            ("chi_D", "integral of c(TM) * tpSM(alpha_im(2))(f), kappa = 1"),
            (
                "deg_Gamma",
                "integral of phi_*(1) * at^2; phi_*(1) = tp(A0^2)(f) on the resolved double surface",
            ),
            ("c1_Gamma", "integral of phi_*(c1) * at, phi_* solved from the multiple-point identities"),
            ("c1sq_Gamma", "integral of phi_*(c1^2), phi_* solved from the multiple-point identities"),
            ("c2_Gamma", "integral of phi_*(c2), phi_* solved from the multiple-point identities"),
        ],
    };
    table.iter().find(|(n, _)| *n == character).map(|(_, p)| *p)
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, InputError> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| InputError::new(p.display().to_string(), format!("cannot read: {e}"))),
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| InputError::new("<stdin>", format!("cannot read: {e}")))?;
            Ok(s)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Values of the basic characters for `invert`: a flat object, or the
/// `characters` object of a result document.
fn parse_characters(text: &str, kind: Kind) -> Result<BTreeMap<String, Rational>, InputError> {
    let value = parse_json(text)?;
    let (obj, prefix) = match value.get("characters") {
        Some(inner) => (inner, "$.characters"),
        None => (&value, "$"),
    };
    let obj = obj
        .as_object()
        .ok_or_else(|| InputError::new(prefix, "expected a JSON object"))?;
    let needed: &[&str] = match kind {
        Kind::Surface => &["d", "eps0", "C", "T"],
        Kind::Threefold => &["d", "mu0", "t", "q", "s_t", "gamma", "chi_C"],
    };
    let mut out = BTreeMap::new();
    let mut missing = Vec::new();
    for name in needed {
        // a surface result document carries the degree as mu0
        let alias = (kind == Kind::Surface && *name == "d").then_some("mu0");
        match obj.get(*name).or_else(|| alias.and_then(|a| obj.get(a))) {
            Some(v) => {
                out.insert(
                    name.to_string(),
                    rational_at(v, &format!("{prefix}.{name}"))?,
                );
            }
            None => missing.push(*name),
        }
    }
    if !missing.is_empty() {
        return Err(InputError::new(
            prefix,
            format!("missing keys {}", missing.join(", ")),
        ));
    }
    Ok(out)
}

fn invert(kind: Kind, chars: &BTreeMap<String, Rational>) -> InputDocument {
    let s = |k: &str| GradedPolynomial::constant(chars[k].clone());
    let d = s("d");
    let xi: Vec<Scalar> = match kind {
        Kind::Surface => {
            let (a, b, c) = surface_invert(&d, &s("eps0"), &s("C"), &s("T"));
            vec![a, b, c]
        }
        Kind::Threefold => {
            let basic = ThreefoldBasic {
                mu0: s("mu0"),
                t: s("t"),
                gamma: s("gamma"),
                q: s("q"),
                s_t: s("s_t"),
                chi_c: s("chi_C"),
            };
            threefold_invert(&d, &basic).to_vec()
        }
    };
    let values = std::iter::once(d)
        .chain(xi)
        .zip(kind.indices())
        .map(|(v, i)| (i, v))
        .collect();
    InputDocument::from_scalars(kind, &values).expect("numeric input gives numeric output")
}

fn parse_degree(text: &str) -> Result<Scalar, InputError> {
    let r = parse_rational(text).map_err(|e| InputError::new("--degree", e.to_string()))?;
    if !r.is_integer() || r <= Rational::from_integer(0.into()) {
        return Err(InputError::new("--degree", "expected a positive integer"));
    }
    Ok(GradedPolynomial::constant(r))
}

enum Failure {
    Input(InputError),
    Engine(ChernError),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<ChernError> for Failure {
    fn from(e: ChernError) -> Self {
        Failure::Engine(e)
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let emit = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes()).expect("writing to output");
    };
    match command {
        Command::Surface(args) => compute(Kind::Surface, args, stdin, out),
        Command::Threefold(args) => compute(Kind::Threefold, args, stdin, out),
        Command::Invert { kind, input } => {
            let text = read_input(&input, stdin)?;
            let chars = parse_characters(&text, kind)?;
            emit(out, &pretty(&invert(kind, &chars).to_json()));
            Ok(EXIT_OK)
        }
        Command::Verify { suite, json } => {
            let report = run_suite(suite);
            if json {
                let doc = json!({
                    "suite": suite.as_str(),
                    "passed": report.all_passed(),
                    "diagnostics": report_json(&report),
                });
                emit(out, &pretty(&doc));
            } else {
                for c in &report.checks {
                    emit(out, &format!("{c}\n"));
                }
                let failed = report.failures().count();
                emit(
                    out,
                    &format!("\n{} checks, {} failed\n", report.checks.len(), failed),
                );
            }
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            })
        }
        Command::Derive {
            kind,
            character,
            json,
        } => {
            let how = provenance(kind, &character).ok_or_else(|| {
                InputError::new(
                    "--character",
                    format!("unknown {kind} character {character:?}"),
                )
            })?;
            let ctx = kind.symbolic_context();
            let computation = match kind {
                Kind::Surface => compute_surface(&ctx)?,
                Kind::Threefold => compute_threefold(&ctx)?,
            };
            let value = computation
                .characters
                .iter()
                .find(|(n, _)| *n == character)
                .map(|(_, v)| v.render_factored())
                .expect("every named character is computed");
            if json {
                let doc = json!({
                    "kind": kind.as_str(),
                    "character": character,
                    "value": value,
                    "provenance": how,
                });
                emit(out, &pretty(&doc));
            } else {
                emit(out, &format!("{character} = {value}\n  from: {how}\n"));
            }
            Ok(EXIT_OK)
        }
        Command::Preset { name: None, .. } => {
            for p in PresetName::ALL {
                let degree = if p.needs_degree() { " --degree D" } else { "" };
                emit(
                    out,
                    &format!("{}{degree}\t{}\n", p.as_str(), p.description()),
                );
            }
            Ok(EXIT_OK)
        }
        Command::Preset {
            name: Some(name),
            degree,
        } => {
            let degree = degree.as_deref().map(parse_degree).transpose()?;
            let xi = preset_xi(name, degree.as_ref())
                .map_err(|e| InputError::new("--degree", e.to_string()))?;
            let doc = InputDocument::from_scalars(name.kind(), &xi).expect("numeric preset");
            emit(out, &pretty(&doc.to_json()));
            Ok(EXIT_OK)
        }
    }
}

fn compute(
    kind: Kind,
    args: ComputeArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let text = read_input(&args.input, stdin)?;
    let doc = parse_input(&text)?;
    if doc.kind != kind {
        return Err(
            InputError::new("$.kind", format!("expected {kind}, found {}", doc.kind)).into(),
        );
    }
    let ctx = doc.context()?;
    let computation = match kind {
        Kind::Surface => compute_surface(&ctx)?,
        Kind::Threefold => compute_threefold(&ctx)?,
    };
    let text = if args.json {
        pretty(&computation.to_json(&doc))
    } else {
        computation.to_text()
    };
    out.write_all(text.as_bytes()).expect("writing to output");
    Ok(if computation.diagnostics.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run_command<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_INPUT;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
