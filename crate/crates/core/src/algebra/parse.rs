//! Parser for the textual polynomial format.
//!
//! Accepts the canonical rendering (`1/2*s0^2 - s0*c1 + c2`) and, more
//! generally, sums and products with parentheses, integer powers and division
//! by non-zero rational constants.

use num_traits::Zero;

use super::polynomial::GradedPolynomial;
use super::rational::Rational;
use super::variable::{MultiIndex, VariableId};
use super::AlgebraError;

/// Which Chern classes the identifiers `c1, c2, ...` denote.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChernKind {
    /// Universal quotient classes `c_k(f)`.
    #[default]
    Quotient,
    /// Source classes `c_k(TM)`.
    Source,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Ring of the `s_I` identifiers; they are rejected when unset.
    pub kappa: Option<u32>,
    pub chern: ChernKind,
}

impl ParseOptions {
    pub fn universal(kappa: u32) -> Self {
        ParseOptions {
            kappa: Some(kappa),
            chern: ChernKind::Quotient,
        }
    }

    pub fn source() -> Self {
        ParseOptions {
            kappa: None,
            chern: ChernKind::Source,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
    opts: &'a ParseOptions,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, AlgebraError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Token::Num(text[start..i].to_string())));
        } else if b.is_ascii_alphabetic() || b == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(text[start..i].to_string())));
        } else if b"+-*/^()".contains(&b) {
            out.push((i, Token::Op(b as char)));
            i += 1;
        } else {
            return Err(AlgebraError::Parse {
                position: i,
                message: format!("unexpected character {:?}", b as char),
            });
        }
    }
    Ok(out)
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, AlgebraError> {
        let position = self.tokens.get(self.pos).map_or(self.len, |(p, _)| *p);
        Err(AlgebraError::Parse {
            position,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GradedPolynomial, AlgebraError> {
        let negate = if self.eat_op('-') {
            true
        } else {
            self.eat_op('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat_op('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat_op('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GradedPolynomial, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat_op('*') {
                acc = acc.try_mul(&self.factor()?)?;
            } else if self.eat_op('/') {
                let divisor = self.factor()?;
                match divisor.as_rational() {
                    Some(r) if !r.is_zero() => {
                        acc = acc.scale(&(Rational::from_integer(1.into()) / r))
                    }
                    _ => return self.err("division only by a non-zero rational constant"),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<GradedPolynomial, AlgebraError> {
        let base = self.atom()?;
        if self.eat_op('^') {
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = match n.parse() {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent out of range"),
                    };
                    Ok(base.pow(e))
                }
                _ => self.err("expected an integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GradedPolynomial, AlgebraError> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let value: num_bigint::BigInt = n.parse().expect("digits");
                Ok(GradedPolynomial::constant(Rational::from_integer(value)))
            }
            Some(Token::Ident(name)) => {
                let p = self.identifier(&name)?;
                self.pos += 1;
                Ok(p)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }

    fn identifier(&self, name: &str) -> Result<GradedPolynomial, AlgebraError> {
        let digits_after = |prefix: &str| {
            name.strip_prefix(prefix)
                .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
        };
        if name == "d" {
            return Ok(GradedPolynomial::xi(MultiIndex::empty()));
        }
        if name == "a" {
            return Ok(GradedPolynomial::var(VariableId::TargetHyperplane));
        }
        if name == "at" {
            return Ok(GradedPolynomial::var(VariableId::SourceHyperplane));
        }
        if let Some(rest) = digits_after("xi") {
            let index = MultiIndex::from_digits(rest).expect("digits");
            if index.is_empty() {
                return self.err("the empty xi index is written d");
            }
            return Ok(GradedPolynomial::xi(index));
        }
        if let Some(rest) = digits_after("s") {
            let index =
                MultiIndex::from_digits(if rest == "0" { "" } else { rest }).expect("digits");
            let Some(kappa) = self.opts.kappa else {
                return self.err(format!("{name} needs a ring with fixed kappa"));
            };
            return Ok(GradedPolynomial::landweber_novikov(index, kappa));
        }
        if let Some(rest) = digits_after("c") {
            let k: u32 = match rest.parse() {
                Ok(k) if k >= 1 => k,
                _ => return self.err("Chern classes are indexed from 1"),
            };
            let v = match self.opts.chern {
                ChernKind::Quotient => VariableId::QuotientChern(k),
                ChernKind::Source => VariableId::SourceChern(k),
            };
            return Ok(GradedPolynomial::var(v));
        }
        Ok(GradedPolynomial::param(name))
    }
}

pub fn parse_polynomial(text: &str, opts: &ParseOptions) -> Result<GradedPolynomial, AlgebraError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        len: text.len(),
        opts,
    };
    let mut p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.err("trailing input");
    }
    if let Some(k) = opts.kappa {
        p = p.with_kappa(k)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> GradedPolynomial {
        parse_polynomial(text, &ParseOptions::universal(1)).unwrap()
    }

    #[test]
    fn canonical_round_trip() {
        for text in [
            "c1^2 + c2",
            "s0 - c1",
            "1/2*s0^2 - s0*c1 - 1/2*s1 + c1^2 + c2",
            "-2*c1*c2 + s01 - 2*c3",
        ] {
            let poly = p(text);
            let again = p(&poly.to_string());
            assert_eq!(poly, again);
        }
        assert_eq!(p("c1^2 + c2").to_string(), "c1^2 + c2");
    }

    #[test]
    fn expressions_expand() {
        let a = p("1/2*(s0^2 - s1 - 2*s0*c1 + 2*c1^2 + 2*c2)");
        assert_eq!(a.to_string(), "1/2*s0^2 - s0*c1 - 1/2*s1 + c1^2 + c2");
        let b = p("(3*d - 24)*xi1/6");
        assert_eq!(b.to_string(), "1/2*d*xi1 - 4*xi1");
    }

    #[test]
    fn identifiers() {
        let x = parse_polynomial("d*xi01 + mu0 + s_t + 2*at*a", &ParseOptions::default()).unwrap();
        assert_eq!(x.to_string(), "d*xi01 + mu0 + s_t + 2*at*a");
        let y = parse_polynomial("c2", &ParseOptions::source()).unwrap();
        assert!(y.variables().contains(&VariableId::SourceChern(2)));
    }

    #[test]
    fn errors_carry_positions() {
        let opts = ParseOptions::default();
        match parse_polynomial("c1 + s1", &opts) {
            Err(AlgebraError::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_polynomial("c1 / c2", &opts),
            Err(AlgebraError::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("(c1", &opts),
            Err(AlgebraError::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_polynomial("c1 $", &opts),
            Err(AlgebraError::Parse { position: 3, .. })
        ));
        assert!(parse_polynomial("c0", &opts).is_err());
    }
}
