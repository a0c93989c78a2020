//! Text form of multivectors.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor (('*'|'^') factor)*
//! factor   := ['+'|'-'] (rational | blade | '(' expr ')')
//! blade    := 'e' digits ('e' digits)*
//! rational := integer ('/' integer)?
//! ```
//!
//! `*` and `^` bind equally tightly and associate to the left. `^` is always
//! the exterior product; `*` (and juxtaposed generators inside a blade
//! literal such as `e1e2`) is whatever product the caller evaluates with,
//! the geometric product by default.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::{Blade, Signature};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Rational),
    /// Generator indices as written, e.g. `e2e1` is `[2, 1]`.
    Generators(Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Evaluate with `product` standing in for `*`.
    pub fn evaluate<F>(&self, sig: Signature, product: &F) -> Result<Multivector>
    where
        F: Fn(&Multivector, &Multivector) -> Result<Multivector>,
    {
        Ok(match self {
            Expr::Number(r) => Multivector::scalar(sig, r.clone()),
            Expr::Generators(indices) => {
                let mut acc = Multivector::one(sig);
                for &i in indices {
                    acc = product(&acc, &Multivector::basis_vector(sig, i)?)?;
                }
                acc
            }
            Expr::Neg(inner) => -inner.evaluate(sig, product)?,
            Expr::Add(a, b) => a.evaluate(sig, product)? + b.evaluate(sig, product)?,
            Expr::Sub(a, b) => a.evaluate(sig, product)? - b.evaluate(sig, product)?,
            Expr::Product(a, b) => product(&a.evaluate(sig, product)?, &b.evaluate(sig, product)?)?,
            Expr::Wedge(a, b) => a
                .evaluate(sig, product)?
                .wedge(&b.evaluate(sig, product)?)?,
        })
    }

    /// Check every generator index against `sig` without evaluating.
    pub fn check_indices(&self, sig: Signature) -> Result<()> {
        match self {
            Expr::Number(_) => Ok(()),
            Expr::Generators(ix) => ix.iter().try_for_each(|&i| sig.check_index(i)),
            Expr::Neg(a) => a.check_indices(sig),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Product(a, b) | Expr::Wedge(a, b) => {
                a.check_indices(sig)?;
                b.check_indices(sig)
            }
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_expression(text)
    }
}

pub fn parse_expression(text: &str) -> Result<Expr> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(expr)
}

/// Parse and evaluate with the geometric product of `sig`.
pub fn parse_multivector(text: &str, sig: Signature) -> Result<Multivector> {
    let expr = parse_expression(text)?;
    expr.check_indices(sig)?;
    expr.evaluate(sig, &|a: &Multivector, b: &Multivector| a.geometric(b))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == b'+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while let Some(op @ (b'*' | b'^')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = if op == b'*' {
                Expr::Product(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Wedge(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'e') => self.blade(),
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(_) => Err(self.error("expected a number, a blade or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            core::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn blade(&mut self) -> Result<Expr> {
        let mut indices = Vec::new();
        while self.src.get(self.pos) == Some(&b'e') {
            self.pos += 1;
            let parsed = self.digits().map(str::parse::<usize>);
            let index = match parsed {
                Some(Ok(index)) => index,
                Some(Err(_)) => return Err(self.error("basis index too large")),
                None => return Err(self.error("expected a basis index after 'e'")),
            };
            indices.push(index);
        }
        Ok(Expr::Generators(indices))
    }

    fn rational(&mut self) -> Result<Expr> {
        let start = self.pos;
        let numer: BigInt = self.digits().unwrap_or("0").parse().expect("digits");
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let denom: BigInt = match self.digits() {
                Some(d) => d.parse().expect("digits"),
                None => return Err(self.error("expected a denominator after '/'")),
            };
            if denom.is_zero() {
                self.pos = start;
                return Err(self.error("zero denominator"));
            }
            Ok(Expr::Number(Rational::new(numer, denom)))
        } else {
            self.pos = save;
            Ok(Expr::Number(Rational::from_integer(numer)))
        }
    }
}

/// Canonical text: terms by grade then index set, unit coefficients elided,
/// e.g. `1 + 2*e1^e2 - 1/3*e1^e2^e3`.
pub fn format_multivector(mv: &Multivector) -> String {
    let mut out = String::new();
    for (k, (blade, coef)) in mv.terms().enumerate() {
        let negative = coef.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = coef.abs();
        if blade.is_scalar() {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&blade.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_multivector(self))
    }
}

/// Parse `e1,e3,e4` (or `1,3,4`) into a blade; the empty string is the
/// empty set.
pub fn parse_index_list(text: &str) -> Result<Blade> {
    let mut blade = Blade::SCALAR;
    let mut offset = 0;
    for item in text.split(',') {
        let trimmed = item.trim();
        let digits = trimmed.strip_prefix('e').unwrap_or(trimmed);
        if !trimmed.is_empty() {
            let index: usize = digits.parse().map_err(|_| Error::Syntax {
                position: offset,
                message: alloc::format!("invalid basis vector '{trimmed}'"),
            })?;
            blade = blade.union(Blade::vector(index)?);
        }
        offset += item.len() + 1;
    }
    Ok(blade)
}
