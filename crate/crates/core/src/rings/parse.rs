//! Text forms for rings and elements.
//!
//! Ring descriptors: `Z`, `Q`, `Zmod:9`, `laurent:Q:[a,b,u]:inv=[u]`,
//! `loc:Z:s=2`, `poly:<base>:X`.
//!
//! Element literals are sums of products, e.g. `3*a^2*u^-1 + 1` or `3/4`;
//! `/` multiplies by an inverse and fails on non-units.

use num_bigint::BigInt;

use super::{Elem, Ring, RingKind};
use crate::error::{Error, Result};

pub fn parse_ring(text: &str) -> Result<Ring> {
    let text = text.trim();
    let bad = |why: &str| Error::InvalidRing(format!("`{text}`: {why}"));
    match text {
        "Z" => return Ok(Ring::integers()),
        "Q" => return Ok(Ring::rationals()),
        _ => {}
    }
    if let Some(rest) = text.strip_prefix("Zmod:") {
        let n: u64 = rest.trim().parse().map_err(|_| bad("modulus is not an integer"))?;
        return Ring::modular(n);
    }
    if let Some(rest) = text.strip_prefix("laurent:") {
        let inv_at = rest.rfind(":inv=[").ok_or_else(|| bad("missing `:inv=[...]`"))?;
        let inv_list = rest[inv_at + 6..]
            .strip_suffix(']')
            .ok_or_else(|| bad("unterminated invertible list"))?;
        let head = &rest[..inv_at];
        let vars_at = head.rfind(":[").ok_or_else(|| bad("missing variable list"))?;
        let vars_list = head[vars_at + 2..]
            .strip_suffix(']')
            .ok_or_else(|| bad("unterminated variable list"))?;
        let base = parse_ring(&head[..vars_at])?;
        let vars = split_names(vars_list);
        let inv = split_names(inv_list);
        return Ring::laurent(&base, &vars, &inv);
    }
    if let Some(rest) = text.strip_prefix("loc:") {
        let at = rest.rfind(":s=").ok_or_else(|| bad("missing `:s=`"))?;
        let base = parse_ring(&rest[..at])?;
        let s = base.parse(&rest[at + 3..])?;
        return Ring::localized(&base, &s);
    }
    if let Some(rest) = text.strip_prefix("poly:") {
        let at = rest.rfind(':').ok_or_else(|| bad("missing variable"))?;
        let base = parse_ring(&rest[..at])?;
        return Ring::poly(&base, rest[at + 1..].trim());
    }
    Err(bad("unknown ring"))
}

fn split_names(list: &str) -> Vec<String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, why: &str) -> Error {
        Error::Parse(format!("{why} in `{}` (ring {})", self.text, self.ring))
    }

    fn expr(&mut self) -> Result<Elem> {
        let r = self.ring;
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = r.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = r.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Elem> {
        let r = self.ring;
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let f = self.factor()?;
                acc = r.mul(&acc, &f);
            } else if self.eat('/') {
                let f = self.factor()?;
                acc = r.div(&acc, &f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Elem> {
        if self.eat('-') {
            let f = self.factor()?;
            return Ok(self.ring.neg(&f));
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    i64::try_from(n).map_err(|_| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected an integer exponent")),
            };
            return self.ring.pow_signed(&base, if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Elem> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.from_int(&n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                self.ring
                    .variable(&name)
                    .ok_or_else(|| self.err(&format!("unknown variable `{name}`")))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

pub(super) fn parse_elem(ring: &Ring, text: &str) -> Result<Elem> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        ring,
        tokens,
        pos: 0,
        text,
    };
    if p.tokens.is_empty() {
        return Err(p.err("empty literal"));
    }
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

pub(super) fn format_elem(ring: &Ring, x: &Elem) -> String {
    match (ring.kind(), x) {
        (RingKind::Integers, Elem::Int(v)) => v.to_string(),
        (RingKind::Rationals, Elem::Rat(v)) => v.to_string(),
        (RingKind::Mod { .. }, Elem::Res(v)) => v.to_string(),
        (RingKind::Localized { base, s, .. }, Elem::Frac { num, k }) => {
            if *k == 0 {
                base.format(num)
            } else {
                let den = base.pow(s, *k);
                format!("{}/{}", base.format(num), base.format(&den))
            }
        }
        (RingKind::Laurent { base, vars, .. }, Elem::Laurent(terms)) => {
            let terms: Vec<(Vec<(String, i32)>, &Elem)> = terms
                .iter()
                .rev()
                .map(|(mono, c)| {
                    let powers = vars
                        .iter()
                        .zip(mono)
                        .filter(|(_, &e)| e != 0)
                        .map(|(v, &e)| (v.clone(), e))
                        .collect();
                    (powers, c)
                })
                .collect();
            format_sum(base, &terms)
        }
        (RingKind::Poly { base, var }, Elem::Poly(coeffs)) => {
            let terms: Vec<(Vec<(String, i32)>, &Elem)> = coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !base.is_zero(c))
                .map(|(d, c)| {
                    let powers = if d == 0 { vec![] } else { vec![(var.clone(), d as i32)] };
                    (powers, c)
                })
                .collect();
            format_sum(base, &terms)
        }
        _ => format!("{x:?}"),
    }
}

fn format_sum(base: &Ring, terms: &[(Vec<(String, i32)>, &Elem)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (powers, c)) in terms.iter().enumerate() {
        let (neg, abs) = base.split_sign(c);
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono: Vec<String> = powers
            .iter()
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        let coef = base.format(&abs);
        let compound = coef.contains([' ', '+']) || coef[1..].contains('-');
        let coef = if compound { format!("({coef})") } else { coef };
        if mono.is_empty() {
            out.push_str(&coef);
        } else if base.is_one(&abs) {
            out.push_str(&mono.join("*"));
        } else {
            out.push_str(&coef);
            out.push('*');
            out.push_str(&mono.join("*"));
        }
    }
    out
}
