//! Small infix parser for polynomial text.
//!
//! `+ - * / ^` and parentheses; juxtaposition multiplies (`2 Z1 Z2`, `Z2(Z1 - g)`).
//! Identifiers resolve to ring variables, then to named polynomials or integers
//! from the [`Env`], and finally `w` to ω when the scalar field has it.
//! Exponents are integer expressions (`Z1^(r+1-l)`); a negative exponent or a
//! division is only accepted for monomial operands.

use std::collections::HashMap;

use crate::poly::{Poly, RingRef};
use crate::scalar::{Rational, Scalar};
use crate::AlgebraError;
use num_bigint::BigInt;

pub struct Env<C: Scalar> {
    polys: HashMap<String, Poly<C>>,
    ints: HashMap<String, i64>,
}

impl<C: Scalar> Default for Env<C> {
    fn default() -> Self {
        Env {
            polys: HashMap::new(),
            ints: HashMap::new(),
        }
    }
}

impl<C: Scalar> Env<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_poly(mut self, name: &str, p: Poly<C>) -> Self {
        self.polys.insert(name.to_string(), p);
        self
    }

    pub fn with_int(mut self, name: &str, v: i64) -> Self {
        self.ints.insert(name.to_string(), v);
        self
    }

    pub fn set_poly(&mut self, name: &str, p: Poly<C>) {
        self.polys.insert(name.to_string(), p);
    }

    pub fn set_int(&mut self, name: &str, v: i64) {
        self.ints.insert(name.to_string(), v);
    }

    pub fn poly(&self, name: &str) -> Option<&Poly<C>> {
        self.polys.get(name)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = chars[st..i].iter().collect();
            out.push((st, Tok::Num(txt.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((st, Tok::Ident(chars[st..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(AlgebraError::Parse {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, C: Scalar> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a RingRef,
    env: &'a Env<C>,
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        let pos = self.toks.get(self.pos).map(|t| t.0).unwrap_or(usize::MAX);
        Err(AlgebraError::Parse { pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<C>, AlgebraError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Poly<C>, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                acc = &acc * &self.monomial_inverse(&d)?;
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn monomial_inverse(&self, d: &Poly<C>) -> Result<Poly<C>, AlgebraError> {
        if d.len() != 1 {
            return self.err("division only by a monomial");
        }
        let (e, c) = d.terms().next().expect("one term");
        let ci = c.inv().ok_or(AlgebraError::DivisionByZero)?;
        Ok(Poly::monomial(self.ring, e.scale(-1), ci))
    }

    fn power(&mut self) -> Result<Poly<C>, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.int_atom()?;
            if k >= 0 {
                Ok(base.pow(k as u32))
            } else {
                let inv = self.monomial_inverse(&base)?;
                Ok(inv.pow((-k) as u32))
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<C>, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.ring, C::from_rational(Rational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.resolve(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            _ => self.err("expected operand"),
        }
    }

    fn resolve(&self, name: &str) -> Result<Poly<C>, AlgebraError> {
        if let Some(i) = self.ring.index_of(name) {
            return Ok(Poly::var(self.ring, i));
        }
        if let Some(p) = self.env.polys.get(name) {
            return p.embed(self.ring);
        }
        if let Some(&v) = self.env.ints.get(name) {
            return Ok(Poly::from_int(self.ring, v));
        }
        if name == "w" {
            if let Some(w) = C::omega() {
                return Ok(Poly::constant(self.ring, w));
            }
        }
        self.err(format!("unknown identifier {name}"))
    }

    // integer expressions, used for exponents
    fn int_atom(&mut self) -> Result<i64, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                i64::try_from(n).or_else(|_| self.err("exponent too large"))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.env.ints.get(&name) {
                    Some(&v) => Ok(v),
                    None => self.err(format!("unknown integer {name}")),
                }
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.int_atom()?)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.int_expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn int_expr(&mut self) -> Result<i64, AlgebraError> {
        let mut acc = self.int_term()?;
        loop {
            if self.eat('+') {
                acc += self.int_term()?;
            } else if self.eat('-') {
                acc -= self.int_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn int_term(&mut self) -> Result<i64, AlgebraError> {
        let mut acc = self.int_atom()?;
        while self.eat('*') {
            acc *= self.int_atom()?;
        }
        Ok(acc)
    }
}

/// Parse `text` into a polynomial of `ring`.
pub fn parse_poly<C: Scalar>(text: &str, ring: &RingRef, env: &Env<C>) -> Result<Poly<C>, AlgebraError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        ring,
        env,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}
