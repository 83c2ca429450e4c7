//! Plain-text polynomial systems.
//!
//! ```text
//! vars: u0 u1 v0
//! field: Q
//! # optional note lines
//! u0 + 7/5*u1 - 4/125
//! 25*v0^2 - 4/5
//! ```
//!
//! Polynomials are written in descending grevlex order, one per line.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::PolyError;
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// A list of polynomials in a common ring, with free-form notes.
#[derive(Clone, Debug, PartialEq)]
pub struct System<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub polys: Vec<Polynomial<F>>,
    pub notes: Vec<String>,
}

impl<F: Field> System<F> {
    pub fn new(ring: Arc<PolyRing<F>>, polys: Vec<Polynomial<F>>) -> Self {
        System {
            ring,
            polys,
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    /// Serializes in the text format. Terms are always printed in grevlex.
    pub fn to_text(&self) -> String {
        let grevlex = self.ring.with_order(MonomialOrder::Grevlex);
        let mut out = String::new();
        writeln!(out, "vars: {}", self.ring.vars().join(" ")).unwrap();
        writeln!(out, "field: {}", field_tag(self.ring.field().spec())).unwrap();
        for n in &self.notes {
            writeln!(out, "# {n}").unwrap();
        }
        for p in &self.polys {
            writeln!(out, "{}", p.reorder(&grevlex)).unwrap();
        }
        out
    }
}

fn field_tag(spec: FieldSpec) -> String {
    match spec {
        FieldSpec::Rationals => "Q".into(),
        FieldSpec::Prime(p) => format!("GF({p})"),
    }
}

/// A parsed system whose coefficient field is only known at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySystem {
    Rational(System<Rationals>),
    Modular(System<PrimeField>),
}

impl AnySystem {
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut field: Option<FieldSpec> = None;
        let mut notes = Vec::new();
        let mut body: Vec<(usize, &str)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(n) = line.strip_prefix('#') {
                notes.push(n.strip_prefix(' ').unwrap_or(n).to_string());
            } else if let Some(v) = line.strip_prefix("vars:") {
                if !body.is_empty() || vars.is_some() {
                    return Err(perr(line_no, "`vars:` must appear once, before any polynomial"));
                }
                vars = Some((line_no, v.split_whitespace().map(str::to_string).collect()));
            } else if let Some(f) = line.strip_prefix("field:") {
                if !body.is_empty() || field.is_some() {
                    return Err(perr(line_no, "`field:` must appear once, before any polynomial"));
                }
                field = Some(parse_field(f.trim()).map_err(|m| perr(line_no, &m))?);
            } else {
                body.push((line_no, line));
            }
        }
        let (vline, vars) = vars.ok_or_else(|| perr(1, "missing `vars:` header"))?;
        let field = field.ok_or_else(|| perr(1, "missing `field:` header"))?;
        for v in &vars {
            if v.chars().any(|c| "+-*/^()".contains(c)) || v.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(perr(vline, &format!("invalid variable name `{v}`")));
            }
        }
        match field {
            FieldSpec::Rationals => Ok(AnySystem::Rational(build(Rationals, vars, vline, &body, notes)?)),
            FieldSpec::Prime(p) => Ok(AnySystem::Modular(build(PrimeField::new(p)?, vars, vline, &body, notes)?)),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnySystem::Rational(s) => s.to_text(),
            AnySystem::Modular(s) => s.to_text(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnySystem::Rational(_) => FieldSpec::Rationals,
            AnySystem::Modular(s) => s.ring.field().spec(),
        }
    }

    pub fn vars(&self) -> &[String] {
        match self {
            AnySystem::Rational(s) => s.ring.vars(),
            AnySystem::Modular(s) => s.ring.vars(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnySystem::Rational(s) => s.polys.len(),
            AnySystem::Modular(s) => s.polys.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn notes(&self) -> &[String] {
        match self {
            AnySystem::Rational(s) => &s.notes,
            AnySystem::Modular(s) => &s.notes,
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let inner = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("unknown field `{s}`"))?;
    let p: u64 = inner.trim().parse().map_err(|_| format!("bad characteristic `{inner}`"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

fn build<F: Field>(
    field: F,
    vars: Vec<String>,
    vline: usize,
    body: &[(usize, &str)],
    notes: Vec<String>,
) -> Result<System<F>, PolyError> {
    let ring = PolyRing::new(field, vars, MonomialOrder::Grevlex).map_err(|e| perr(vline, &e.to_string()))?;
    let polys = body
        .iter()
        .map(|(line, src)| parse_line(&ring, src, *line))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(System { ring, polys, notes })
}

fn perr(line: usize, msg: &str) -> PolyError {
    PolyError::Parse {
        line,
        msg: msg.to_string(),
    }
}

/// Parses one infix polynomial in `ring`.
pub fn parse_polynomial<F: Field>(ring: &Arc<PolyRing<F>>, src: &str) -> Result<Polynomial<F>, PolyError> {
    parse_line(ring, src, 1)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Op(char),
}

fn tokenize<F: Field>(ring: &PolyRing<F>, src: &str, line: usize) -> Result<Vec<Tok>, PolyError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if d.is_whitespace() || "+-*/^()".contains(d) {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let word = &src[start..end];
            if word.chars().all(|d| d.is_ascii_digit()) {
                out.push(Tok::Num(word.parse().expect("digits")));
            } else if let Some(i) = ring.var_index(word) {
                out.push(Tok::Var(i));
            } else {
                return Err(perr(line, &format!("unknown identifier `{word}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<PolyRing<F>>,
    toks: Vec<Tok>,
    pos: usize,
    line: usize,
}

fn parse_line<F: Field>(ring: &Arc<PolyRing<F>>, src: &str, line: usize) -> Result<Polynomial<F>, PolyError> {
    let toks = tokenize(ring, src, line)?;
    let mut p = Parser { ring, toks, pos: 0, line };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

impl<F: Field> Parser<'_, F> {
    fn err(&self, msg: &str) -> PolyError {
        perr(self.line, msg)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = match self.peek_op() {
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.factor()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let literal = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.to_string(),
                _ => "divisor".to_string(),
            };
            let rhs = self.factor()?;
            if op == '*' {
                acc = acc.mul(&rhs)?;
            } else {
                if !rhs.is_constant() {
                    return Err(self.err("division by a non-constant"));
                }
                let field = self.ring.field();
                let Some(c) = rhs.leading_coeff() else {
                    return match field.spec() {
                        FieldSpec::Prime(p) => Err(PolyError::NonInvertibleConstant { value: literal, p }),
                        FieldSpec::Rationals => Err(self.err("division by zero")),
                    };
                };
                acc = acc.scale(&field.inv(c));
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, PolyError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let Some(Tok::Num(n)) = self.toks.get(self.pos).cloned() else {
                return Err(self.err("exponent must be a non-negative integer"));
            };
            self.pos += 1;
            let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>, PolyError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = self.ring.field().from_rational(&BigRational::from_integer(n))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => Err(self.err(&format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of line")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "vars: u0 z2 u1 z4\nfield: Q\n# extra link\n5*u0*z2 + 7*u1*z4 - u0 + 1/125\n";

    #[test]
    fn round_trip_is_exact() {
        let sys = AnySystem::parse(SAMPLE).unwrap();
        assert_eq!(sys.to_text(), SAMPLE);
        assert_eq!(sys.notes(), &["extra link".to_string()]);
        assert_eq!(AnySystem::parse(&sys.to_text()).unwrap(), sys);
    }

    #[test]
    fn infix_expressions_are_expanded() {
        let text = "vars: x y\nfield: Q\n(x + y)^2 - 2*(x*y) - -y/2\n";
        let sys = AnySystem::parse(text).unwrap();
        assert_eq!(sys.to_text(), "vars: x y\nfield: Q\nx^2 + y^2 + 1/2*y\n");
    }

    #[test]
    fn modular_coefficients() {
        let sys = AnySystem::parse("vars: x\nfield: GF(7)\nx - 1/5\n").unwrap();
        assert_eq!(sys.to_text(), "vars: x\nfield: GF(7)\nx + 4\n");
        assert!(matches!(
            AnySystem::parse("vars: x\nfield: GF(5)\nx - 1/5\n"),
            Err(PolyError::NonInvertibleConstant { p: 5, .. })
        ));
        assert!(AnySystem::parse("vars: x\nfield: GF(6)\nx\n").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = AnySystem::parse("vars: x\nfield: Q\nx\nx + q\n").unwrap_err();
        assert!(matches!(e, PolyError::Parse { line: 4, .. }), "{e}");
        let e = AnySystem::parse("vars: x\nfield: Q\nx/x\n").unwrap_err();
        assert!(matches!(e, PolyError::Parse { line: 3, .. }), "{e}");
        assert!(AnySystem::parse("field: Q\nx\n").is_err());
    }

    #[test]
    fn bracketed_names_are_identifiers() {
        let sys = AnySystem::parse("vars: x_k[5_3,5_3] y_k[7_1,5_3]\nfield: Q\nx_k[5_3,5_3]*y_k[7_1,5_3]^2 - 1\n").unwrap();
        assert_eq!(sys.len(), 1);
        assert!(sys.to_text().ends_with("x_k[5_3,5_3]*y_k[7_1,5_3]^2 - 1\n"));
    }
}
