//! Polynomial expressions and class literals.
//!
//! Expressions use `+ - * ^`, parentheses, implicit multiplication by
//! juxtaposition, and `/` by scalars only. Integers are reduced mod `p`.
//! A class literal is a sum of terms `coef*[numerator / v1^k1 ... vd^kd]`.

use crate::cech::{normalize_class, CechClass};
use crate::error::{Error, Result};
use crate::rings::{FreePoly, Ring};
use crate::scalars::{FieldDescriptor, RationalScalar};

/// Where an expression's names resolve.
pub struct Scope<'a> {
    pub field: &'a FieldDescriptor,
    pub vars: &'a [String],
}

impl<'a> Scope<'a> {
    pub fn of_ring(ring: &'a Ring, vars: &'a [String]) -> Self {
        Scope { field: ring.field(), vars }
    }
}

/// A parse failure at a 0-based byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    /// Converts to a crate error, mapping the offset into `source` text that
    /// starts at byte `base`.
    pub fn located(self, source: &str, base: usize) -> Error {
        let (line, column) = line_col(source, base + self.offset);
        Error::Parse { line, column, message: self.message }
    }
}

pub fn line_col(source: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(source.len());
    let before = &source[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(offset, |i| offset - i - 1) + 1;
    (line, column)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(s[start..i].to_string())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            while i < bytes.len() && bytes[i] == b'\'' {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError { offset: i, message: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'s, 'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    scope: &'s Scope<'a>,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser<'_, '_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn nvars(&self) -> usize {
        self.scope.vars.len()
    }

    fn constant(&self, c: RationalScalar) -> FreePoly {
        FreePoly::constant(c, self.nvars())
    }

    fn expr(&mut self) -> PResult<FreePoly> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<FreePoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.power()?;
                    let Some(s) = d.as_scalar() else {
                        return Err(ParseError { offset: at, message: "division by a non-scalar".into() });
                    };
                    let Ok(inv) = s.inv() else {
                        return Err(ParseError { offset: at, message: "division by zero".into() });
                    };
                    acc = acc.scale(&inv);
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> PResult<FreePoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let Ok(k) = n.parse::<u32>() else {
                        return self.err("exponent too large");
                    };
                    self.pos += 1;
                    Ok(base.pow(k))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> PResult<FreePoly> {
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.pos += 1;
                let p = self.scope.field.p() as u64;
                let r = digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(self.constant(self.scope.field.from_int(r as i64)))
            }
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.scope.vars.iter().position(|v| *v == name) {
                    self.pos += 1;
                    let f = self.scope.field;
                    return Ok(FreePoly::var(i, self.nvars(), f.p(), f.num_params()));
                }
                if let Some(i) = self.scope.field.param_index(&name) {
                    self.pos += 1;
                    return Ok(self.constant(self.scope.field.param(i)));
                }
                self.err(format!("unknown identifier '{name}'"))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(t) => self.err(format!("unexpected {}", describe(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) => format!("integer {s}"),
        Tok::Ident(s) => format!("identifier {s}"),
        Tok::Op(c) => format!("'{c}'"),
    }
}

/// Parses a polynomial in the scope's variables with coefficients in its
/// field.
pub fn parse_poly(s: &str, scope: &Scope) -> std::result::Result<FreePoly, ParseError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, end: s.len(), scope };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        let t = p.peek().cloned().unwrap();
        return p.err(format!("unexpected {}", describe(&t)));
    }
    Ok(f)
}

pub fn parse_scalar(s: &str, field: &FieldDescriptor) -> std::result::Result<RationalScalar, ParseError> {
    let f = parse_poly(s, &Scope { field, vars: &[] })?;
    Ok(f.as_scalar().expect("no variables in scope"))
}

/// Parses a sum of class terms `coef*[num / v^k ...]` in the ring.
pub fn parse_class(s: &str, ring: &Ring) -> Result<CechClass> {
    parse_class_at(s, ring).map_err(|e| e.located(s, 0))
}

fn parse_class_at(s: &str, ring: &Ring) -> PResult<CechClass> {
    let names = ring.var_names();
    let scope = Scope::of_ring(ring, &names);
    let trimmed = s.trim();
    if trimmed == "0" {
        return Ok(CechClass::zero(ring));
    }
    let mut total = CechClass::zero(ring);
    for (start, sign, piece) in split_terms(s)? {
        let open = top_level_find(piece, '[')
            .ok_or(ParseError { offset: start, message: "expected a class term '[numerator / denominator]'".into() })?;
        if !piece.trim_end().ends_with(']') {
            return Err(ParseError { offset: start + piece.len(), message: "expected ']'".into() });
        }
        let close = piece.rfind(']').unwrap();
        let prefix = piece[..open].trim_end();
        let coef = if prefix.is_empty() {
            ring.field().one()
        } else {
            let Some(c) = prefix.strip_suffix('*') else {
                return Err(ParseError { offset: start + open, message: "expected '*' before '['".into() });
            };
            let f = parse_poly(c, &scope).map_err(|e| shift(e, start))?;
            f.as_scalar().ok_or(ParseError { offset: start, message: "class coefficient must be a scalar".into() })?
        };
        let body_start = start + open + 1;
        let body = &piece[open + 1..close];
        let slash = last_top_level(body, '/').ok_or(ParseError {
            offset: body_start,
            message: "expected '/' separating numerator and denominator".into(),
        })?;
        let num = parse_poly(&body[..slash], &scope).map_err(|e| shift(e, body_start))?;
        let den = parse_denominator(&body[slash + 1..], ring, &names).map_err(|e| shift(e, body_start + slash + 1))?;
        let class = normalize_class(&ring.element(num), &den)
            .map_err(|e| ParseError { offset: body_start, message: e.to_string() })?;
        let coef = if sign { coef.neg() } else { coef };
        total = total.add(&class.scale(&coef));
    }
    Ok(total)
}

fn shift(e: ParseError, by: usize) -> ParseError {
    ParseError { offset: e.offset + by, message: e.message }
}

/// Denominator `v1^k1 v2^k2 ...` over the unbound variables, each present.
fn parse_denominator(s: &str, ring: &Ring, names: &[String]) -> PResult<Vec<u32>> {
    let toks = tokenize(s)?;
    let mut powers = vec![0u32; ring.unbound().len()];
    let mut i = 0;
    while i < toks.len() {
        let (off, tok) = &toks[i];
        let Tok::Ident(name) = tok else {
            if *tok == Tok::Op('*') {
                i += 1;
                continue;
            }
            return Err(ParseError { offset: *off, message: "expected a variable in the denominator".into() });
        };
        let Some(v) = names.iter().position(|n| n == name) else {
            return Err(ParseError { offset: *off, message: format!("unknown variable '{name}'") });
        };
        let Some(slot) = ring.unbound().iter().position(|&u| u == v) else {
            return Err(ParseError {
                offset: *off,
                message: format!("'{name}' is not a parameter of the Cech complex"),
            });
        };
        i += 1;
        let mut k = 1;
        if let Some((_, Tok::Op('^'))) = toks.get(i) {
            match toks.get(i + 1) {
                Some((_, Tok::Int(n))) => {
                    k = n.parse().map_err(|_| ParseError { offset: *off, message: "exponent too large".into() })?;
                    i += 2;
                }
                _ => return Err(ParseError { offset: *off, message: "expected an exponent".into() }),
            }
        }
        powers[slot] += k;
    }
    if let Some(slot) = powers.iter().position(|&k| k == 0) {
        let name = &names[ring.unbound()[slot]];
        return Err(ParseError {
            offset: s.len(),
            message: format!("denominator must contain '{name}' with a positive exponent"),
        });
    }
    Ok(powers)
}

/// Splits at top-level `+`/`-` (outside brackets and parentheses),
/// returning (offset, negated, text).
fn split_terms(s: &str) -> PResult<Vec<(usize, bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let piece = &s[start..i];
                if !piece.trim().is_empty() {
                    out.push((start, neg, piece));
                } else if i > 0 && !s[..i].trim().is_empty() && out.is_empty() {
                    return Err(ParseError { offset: i, message: "unexpected sign".into() });
                }
                neg = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(ParseError { offset: i, message: "unbalanced brackets".into() });
        }
    }
    if depth != 0 {
        return Err(ParseError { offset: s.len(), message: "unbalanced brackets".into() });
    }
    let piece = &s[start..];
    if piece.trim().is_empty() {
        return Err(ParseError { offset: s.len(), message: "expected a class term".into() });
    }
    out.push((start, neg, piece));
    Ok(out)
}

fn top_level_find(s: &str, c: char) -> Option<usize> {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if ch == c && depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn last_top_level(s: &str, c: char) -> Option<usize> {
    let mut depth = 0;
    let mut found = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if ch == c && depth == 0 => found = Some(i),
            _ => {}
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family_a, family_b};
    use crate::rings::base_change;

    #[test]
    fn polynomials() {
        let a = family_a(2).unwrap();
        let names = a.var_names();
        let scope = Scope::of_ring(&a, &names);
        let f = parse_poly("x0^2 - t1*x1^2 - t2 x2^2", &scope).unwrap();
        assert!(a.element(f).is_zero());
        let g = parse_poly("3x1 + 12345678901234567891", &scope).unwrap();
        assert_eq!(g.display_with(&names, a.field().params()), "x1 + 1");
        let h = parse_poly("(t1 + 1)/t2 * x0", &scope).unwrap();
        assert_eq!(h.display_with(&names, a.field().params()), "((t1 + 1)/t2)*x0");
        let err = parse_poly("x0 + q", &scope).unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(parse_poly("x0 / x1", &scope).is_err());
        assert!(parse_poly("x0 +", &scope).is_err());
    }

    #[test]
    fn class_literals_roundtrip() {
        let (bb, emb) = base_change(&family_b(2).unwrap()).unwrap();
        let c = parse_class("[w^2 / x^2 y z1] - u*[w^2 / x y^2 z1]", &bb).unwrap();
        let again = parse_class(&c.display(), &bb).unwrap();
        assert_eq!(c, again);
        let d = parse_class("[w^2 / x y^2 z1]", &bb).unwrap().scale(&emb.root_of(0));
        assert_eq!(parse_class("[w^2 / x^2 y z1]", &bb).unwrap().sub(&d), c);
        let a = family_a(3).unwrap();
        let k = parse_class("(t1 + 2)/(t2 + 1)*[x0^2 / x1^2 x2 x3^2] + [1 / x1 x2 x3]", &a).unwrap();
        assert_eq!(parse_class(&k.display(), &a).unwrap(), k);
        assert!(parse_class("[1 / x1 x2]", &a).is_err());
        assert!(parse_class("[1 / x0 x1 x2 x3]", &a).is_err());
        assert!(parse_class("0", &a).unwrap().is_zero());
    }
}
