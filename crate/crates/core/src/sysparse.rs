//! Text format for constant-coefficient linear systems.
//!
//! ```text
//! # Cauchy–Riemann in two complex variables
//! name cr2;
//! vars 4;
//! unknowns 1;
//! shifts sigma = [1,1]; rho = [0];
//! eq d1 + i*d2;
//! eq d3 + i*d4;
//! ```
//!
//! Statements end with `;`. `dK` is the symbol variable dual to `∂/∂x_K`.
//! Each `eq` statement is one row of the symbol matrix; rows with several
//! unknowns separate their entries with `,`. `shifts` is optional, and either
//! vector may be given alone. Coefficients are integers, rationals `p/q`
//! (no spaces around the slash) and the literal `i`. `#` starts a comment.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::{Degree, GaussPoly, GaussRational, Rational};

const MAX_VARS: usize = 16;
const MAX_DIM: usize = 64;
const MAX_DEGREE: u32 = 24;
const MAX_TERMS: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: row has {got} entries but {expected} unknowns were declared")]
    EntryCount { line: usize, col: usize, expected: usize, got: usize },
    #[error("shift vector {which} has length {got}, expected {expected}")]
    ShiftLength { which: &'static str, expected: usize, got: usize },
    #[error("entry ({row}, {col}) has degree {degree} > sigma - rho = {bound}")]
    ShiftViolation { row: usize, col: usize, degree: u32, bound: i64 },
    #[error("invalid system: {0}")]
    Invalid(String),
}

/// A validated system: `s × r` symbol matrix plus optional shifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SystemSpec {
    pub name: Option<String>,
    pub nvars: usize,
    pub nunknowns: usize,
    /// One row per equation, `nunknowns` entries each.
    pub entries: Vec<Vec<GaussPoly>>,
    pub sigma: Option<Vec<i64>>,
    pub rho: Option<Vec<i64>>,
}

impl SystemSpec {
    /// Checks the shape and shift invariants.
    pub fn new(
        name: Option<String>,
        nvars: usize,
        nunknowns: usize,
        entries: Vec<Vec<GaussPoly>>,
        sigma: Option<Vec<i64>>,
        rho: Option<Vec<i64>>,
    ) -> Result<Self, ParseError> {
        let spec = SystemSpec { name, nvars, nunknowns, entries, sigma, rho };
        spec.validate()?;
        Ok(spec)
    }

    pub fn neqs(&self) -> usize {
        self.entries.len()
    }

    pub fn validate(&self) -> Result<(), ParseError> {
        if let Some(n) = &self.name {
            if !is_ident(n) {
                return Err(ParseError::Invalid(format!("name `{n}` is not an identifier")));
            }
        }
        if self.nvars == 0 || self.nvars > MAX_VARS {
            return Err(ParseError::Invalid(format!("vars must be in 1..={MAX_VARS}")));
        }
        if self.nunknowns == 0 || self.nunknowns > MAX_DIM {
            return Err(ParseError::Invalid(format!("unknowns must be in 1..={MAX_DIM}")));
        }
        if self.entries.is_empty() {
            return Err(ParseError::Invalid("no equations".into()));
        }
        for row in &self.entries {
            if row.len() != self.nunknowns {
                return Err(ParseError::EntryCount { line: 0, col: 0, expected: self.nunknowns, got: row.len() });
            }
            if row.iter().any(|p| p.nvars() != self.nvars) {
                return Err(ParseError::Invalid("entry with wrong variable count".into()));
            }
        }
        if let Some(s) = &self.sigma {
            if s.len() != self.neqs() {
                return Err(ParseError::ShiftLength { which: "sigma", expected: self.neqs(), got: s.len() });
            }
        }
        if let Some(r) = &self.rho {
            if r.len() != self.nunknowns {
                return Err(ParseError::ShiftLength { which: "rho", expected: self.nunknowns, got: r.len() });
            }
        }
        if let Some(sigma) = &self.sigma {
            let zeros = vec![0; self.nunknowns];
            let rho = self.rho.as_ref().unwrap_or(&zeros);
            for (i, row) in self.entries.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    let bound = sigma[i] - rho[j];
                    if let Degree::Finite(d) = p.total_degree() {
                        if i64::from(d) > bound {
                            return Err(ParseError::ShiftViolation { row: i, col: j, degree: d, bound });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Rat(Rational),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        let (tl, tc) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if ch.is_whitespace() {
            k += 1;
            col += 1;
            continue;
        }
        if ch == '#' {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let num: String = chars[start..k].iter().collect();
            let num: BigInt = num.parse().expect("digits");
            if k + 1 < chars.len() && chars[k] == '/' && chars[k + 1].is_ascii_digit() {
                let s2 = k + 1;
                k += 1;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let den: String = chars[s2..k].iter().collect();
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    return Err(syntax(tl, tc, "zero denominator"));
                }
                out.push(Token { tok: Tok::Rat(Rational::new(num, den)), line: tl, col: tc });
            } else {
                out.push(Token { tok: Tok::Int(num), line: tl, col: tc });
            }
            col += k - start;
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..k].iter().collect()), line: tl, col: tc });
            col += k - start;
            continue;
        }
        if ";,+-*^()[]=".contains(ch) {
            out.push(Token { tok: Tok::Sym(ch), line: tl, col: tc });
            k += 1;
            col += 1;
            continue;
        }
        return Err(syntax(tl, tc, &format!("unexpected character {ch:?}")));
    }
    Ok(out)
}

fn syntax(line: usize, col: usize, msg: &str) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.to_string() }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    nvars: Option<usize>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        match self.peek().or_else(|| self.toks.last()) {
            Some(t) => (t.line, t.col),
            None => (1, 1),
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        let (l, c) = self.here();
        Err(syntax(l, c, msg))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn is_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.is_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected `{c}`"))
        }
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.is_sym('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Token { tok: Tok::Int(n), line, col }) => {
                let v = n
                    .to_i64()
                    .filter(|v| v.abs() <= 1_000_000)
                    .ok_or_else(|| syntax(line, col, "integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => {
                self.pos -= 1;
                self.err("expected integer")
            }
        }
    }

    fn int_list(&mut self) -> Result<Vec<i64>, ParseError> {
        self.expect_sym('[')?;
        let mut v = Vec::new();
        if !self.is_sym(']') {
            loop {
                v.push(self.small_int()?);
                if self.is_sym(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect_sym(']')?;
        if v.len() > MAX_DIM {
            return self.err("shift vector too long");
        }
        Ok(v)
    }

    fn nvars(&self) -> Result<usize, ParseError> {
        match self.nvars {
            Some(n) => Ok(n),
            None => self.err("`vars` must be declared before any equation"),
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self, depth: usize) -> Result<GaussPoly, ParseError> {
        if depth > 64 {
            return self.err("expression nested too deeply");
        }
        let mut acc = self.term(depth)?;
        loop {
            if self.is_sym('+') {
                self.pos += 1;
                let t = self.term(depth)?;
                acc = &acc + &t;
            } else if self.is_sym('-') {
                self.pos += 1;
                let t = self.term(depth)?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
            self.guard(&acc)?;
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self, depth: usize) -> Result<GaussPoly, ParseError> {
        let mut acc = self.unary(depth)?;
        while self.is_sym('*') {
            self.pos += 1;
            let f = self.unary(depth)?;
            acc = self.product(&acc, &f)?;
        }
        Ok(acc)
    }

    fn unary(&mut self, depth: usize) -> Result<GaussPoly, ParseError> {
        if self.is_sym('-') {
            self.pos += 1;
            if depth > 64 {
                return self.err("expression nested too deeply");
            }
            let p = self.unary(depth + 1)?;
            return Ok(-&p);
        }
        if self.is_sym('+') {
            self.pos += 1;
            return self.unary(depth + 1);
        }
        self.power(depth)
    }

    fn power(&mut self, depth: usize) -> Result<GaussPoly, ParseError> {
        let base = self.atom(depth)?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.next() {
            Some(Token { tok: Tok::Int(n), line, col }) => {
                n.to_u32().filter(|e| *e <= MAX_DEGREE).ok_or_else(|| syntax(line, col, "exponent out of range"))?
            }
            _ => {
                self.pos -= 1;
                return self.err("expected integer exponent");
            }
        };
        let mut acc = GaussPoly::one(base.nvars());
        for _ in 0..e {
            acc = self.product(&acc, &base)?;
        }
        Ok(acc)
    }

    fn product(&self, a: &GaussPoly, b: &GaussPoly) -> Result<GaussPoly, ParseError> {
        if a.num_terms().saturating_mul(b.num_terms()) > MAX_TERMS * 8 {
            return self.err("expression too large");
        }
        let p = a * b;
        self.guard(&p)?;
        Ok(p)
    }

    fn guard(&self, p: &GaussPoly) -> Result<(), ParseError> {
        if !p.total_degree().at_most(i64::from(MAX_DEGREE)) {
            return self.err(&format!("degree exceeds {MAX_DEGREE}"));
        }
        if p.num_terms() > MAX_TERMS {
            return self.err("expression too large");
        }
        Ok(())
    }

    fn atom(&mut self, depth: usize) -> Result<GaussPoly, ParseError> {
        let n = self.nvars()?;
        let Some(t) = self.next() else {
            return self.err("unexpected end of input");
        };
        match t.tok {
            Tok::Int(v) => Ok(GaussPoly::constant(n, GaussRational::real(Rational::from_integer(v)))),
            Tok::Rat(q) => Ok(GaussPoly::constant(n, GaussRational::real(q))),
            Tok::Sym('(') => {
                let e = self.expr(depth + 1)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(ref s) if s == "i" => Ok(GaussPoly::constant(n, GaussRational::i())),
            Tok::Ident(ref s) if s.starts_with('d') && s.len() > 1 && s[1..].chars().all(|c| c.is_ascii_digit()) => {
                let k: usize = s[1..].parse().unwrap_or(0);
                if k == 0 || k > n {
                    return Err(syntax(t.line, t.col, &format!("variable {s} out of range 1..={n}")));
                }
                Ok(GaussPoly::var(n, k - 1))
            }
            _ => Err(syntax(t.line, t.col, "expected a number, `i`, a variable dK or `(`")),
        }
    }
}

/// Parses and validates a system description.
pub fn parse(text: &str) -> Result<SystemSpec, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, nvars: None };
    let mut name = None;
    let mut unknowns: Option<usize> = None;
    let mut sigma = None;
    let mut rho = None;
    let mut rows = Vec::new();

    while let Some(t) = p.next() {
        let Tok::Ident(kw) = &t.tok else {
            return Err(syntax(t.line, t.col, "expected a statement keyword"));
        };
        match kw.as_str() {
            "name" => match p.next() {
                Some(Token { tok: Tok::Ident(s), .. }) => name = Some(s),
                _ => {
                    p.pos -= 1;
                    return p.err("expected identifier after `name`");
                }
            },
            "vars" | "unknowns" => {
                let v = p.small_int()?;
                let limit = if kw == "vars" { MAX_VARS } else { MAX_DIM };
                if v < 1 || v as usize > limit {
                    return Err(syntax(t.line, t.col, &format!("`{kw}` must be in 1..={limit}")));
                }
                if kw == "vars" {
                    if p.nvars.is_some() {
                        return Err(syntax(t.line, t.col, "`vars` declared twice"));
                    }
                    p.nvars = Some(v as usize);
                } else {
                    if unknowns.is_some() {
                        return Err(syntax(t.line, t.col, "`unknowns` declared twice"));
                    }
                    unknowns = Some(v as usize);
                }
            }
            "shifts" | "sigma" | "rho" => {
                let which = if kw == "shifts" {
                    match p.next() {
                        Some(Token { tok: Tok::Ident(s), .. }) if s == "sigma" || s == "rho" => s,
                        _ => {
                            p.pos -= 1;
                            return p.err("expected `sigma` or `rho`");
                        }
                    }
                } else {
                    kw.clone()
                };
                p.expect_sym('=')?;
                let v = p.int_list()?;
                let slot = if which == "sigma" { &mut sigma } else { &mut rho };
                if slot.is_some() {
                    return Err(syntax(t.line, t.col, &format!("`{which}` given twice")));
                }
                *slot = Some(v);
            }
            "eq" => {
                let r = match unknowns {
                    Some(r) => r,
                    None => return Err(syntax(t.line, t.col, "`unknowns` must be declared before any equation")),
                };
                p.nvars()?;
                let mut row = vec![p.expr(0)?];
                while p.is_sym(',') {
                    p.pos += 1;
                    row.push(p.expr(0)?);
                }
                if row.len() != r {
                    return Err(ParseError::EntryCount { line: t.line, col: t.col, expected: r, got: row.len() });
                }
                if rows.len() >= MAX_DIM {
                    return Err(syntax(t.line, t.col, "too many equations"));
                }
                rows.push(row);
            }
            other => return Err(syntax(t.line, t.col, &format!("unknown statement `{other}`"))),
        }
        p.expect_sym(';')?;
    }

    let nvars = match p.nvars {
        Some(n) => n,
        None => return p.err("missing `vars` declaration"),
    };
    let Some(nunknowns) = unknowns else {
        return p.err("missing `unknowns` declaration");
    };
    if rows.is_empty() {
        return p.err("no `eq` statements");
    }
    SystemSpec::new(name, nvars, nunknowns, rows, sigma, rho)
}

/// Canonical text; `parse(&emit(s)) == s` for every valid spec.
pub fn emit(spec: &SystemSpec) -> String {
    let mut out = String::new();
    if let Some(n) = &spec.name {
        let _ = writeln!(out, "name {n};");
    }
    let _ = writeln!(out, "vars {};", spec.nvars);
    let _ = writeln!(out, "unknowns {};", spec.nunknowns);
    let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    match (&spec.sigma, &spec.rho) {
        (Some(s), Some(r)) => {
            let _ = writeln!(out, "shifts sigma = [{}]; rho = [{}];", list(s), list(r));
        }
        (Some(s), None) => {
            let _ = writeln!(out, "shifts sigma = [{}];", list(s));
        }
        (None, Some(r)) => {
            let _ = writeln!(out, "shifts rho = [{}];", list(r));
        }
        (None, None) => {}
    }
    for row in &spec.entries {
        let cells: Vec<String> = row.iter().map(GaussPoly::to_string).collect();
        let _ = writeln!(out, "eq {};", cells.join(", "));
    }
    out
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Monomial};

    #[test]
    fn cauchy_riemann_in_two_complex_variables() {
        let s = parse("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;").unwrap();
        assert_eq!((s.nvars, s.neqs(), s.nunknowns), (4, 2, 1));
        let p1 = &GaussPoly::var(4, 0) + &GaussPoly::var(4, 1).scale(&GaussRational::i());
        assert_eq!(s.entries[0][0], p1);
    }

    #[test]
    fn laplace_and_example_two() {
        let s = parse("vars 2; unknowns 1; eq d1^2 + d2^2;").unwrap();
        assert_eq!(s.entries[0][0], GaussPoly::sum_of_squares(2));
        let e = parse("vars 3; unknowns 1; eq d2^2 + d3^2; eq d1;").unwrap();
        assert_eq!(e.neqs(), 2);
        assert_eq!(e.entries[1][0], GaussPoly::var(3, 0));
    }

    #[test]
    fn shifts_round_trip() {
        let text = "vars 4; unknowns 1; shifts sigma = [1,1]; rho = [0]; eq d1 + i*d2; eq d3 + i*d4;";
        let s = parse(text).unwrap();
        assert_eq!(s.sigma, Some(vec![1, 1]));
        assert_eq!(s.rho, Some(vec![0]));
        let out = emit(&s);
        assert!(out.contains("shifts sigma = [1,1]; rho = [0];"), "{out}");
        assert_eq!(parse(&out).unwrap(), s);
    }

    #[test]
    fn zero_entry_is_rendered_as_zero() {
        let s = parse("vars 2; unknowns 2; eq d1, 0; eq 0, d2;").unwrap();
        let out = emit(&s);
        assert!(out.contains("eq d1, 0;"), "{out}");
        assert_eq!(parse(&out).unwrap(), s);
    }

    #[test]
    fn rationals_and_complex_coefficients() {
        let s = parse("vars 2; unknowns 1; eq (1/2 + 3/4*i)*d1^2 - 2*d2;").unwrap();
        let p = &s.entries[0][0];
        assert_eq!(p.coeff(&Monomial(vec![2, 0])), GaussRational::new(rat(1, 2), rat(3, 4)));
        assert_eq!(p.coeff(&Monomial(vec![0, 1])), GaussRational::from_int(-2));
        assert_eq!(parse(&emit(&s)).unwrap(), s);
    }

    #[test]
    fn syntax_errors_carry_location() {
        let err = parse("vars 2;\nunknowns 1;\neq d1 + ;").unwrap_err();
        match err {
            ParseError::Syntax { line, col, .. } => assert_eq!((line, col), (3, 9)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("vars 2; unknowns 1; eq d3;"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("vars 2; unknowns 1; eq d1 $ d2;"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn entry_count_must_match_unknowns() {
        let err = parse("vars 2; unknowns 2; eq d1;").unwrap_err();
        assert!(matches!(err, ParseError::EntryCount { expected: 2, got: 1, .. }));
    }

    #[test]
    fn shift_violation_names_the_entry() {
        let err = parse("vars 2; unknowns 2; shifts sigma = [1]; rho = [0,0]; eq d1, d2^2;").unwrap_err();
        assert_eq!(err, ParseError::ShiftViolation { row: 0, col: 1, degree: 2, bound: 1 });
        let err = parse("vars 2; unknowns 1; shifts sigma = [1,1]; eq d1;").unwrap_err();
        assert!(matches!(err, ParseError::ShiftLength { which: "sigma", .. }));
    }

    #[test]
    fn pathological_inputs_error_out() {
        assert!(parse("vars 2; unknowns 1; eq (d1+d2)^99;").is_err());
        assert!(parse("vars 2; unknowns 1; eq 1/0;").is_err());
        assert!(parse("").is_err());
        assert!(parse("eq d1;").is_err());
        let deep = format!("vars 1; unknowns 1; eq {}d1{};", "(".repeat(500), ")".repeat(500));
        assert!(parse(&deep).is_err());
    }
}
