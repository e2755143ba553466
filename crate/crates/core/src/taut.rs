//! Formal cycle classes: polynomials in `lambda_1..lambda_g` whose coefficients
//! are integer polynomials in the symbol `p`.
//!
//! Arithmetic happens in the free commutative ring; the tautological relations
//! are produced by [`taut_relations`] but never imposed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Integer polynomial in `p`, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PPoly(Vec<i64>);

impl PPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `p^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Self(c)
    }

    /// `p^k - 1`.
    pub fn p_power_minus_one(k: usize) -> Self {
        Self::monomial(k) - Self::one()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<i64> {
        match self.0.len() {
            0 => Some(0),
            1 => Some(self.0[0]),
            _ => None,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, p: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// Parses expanded form such as `p^2-p+1` or `-2p+3`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let poly = cur.ppoly()?;
        cur.finish()?;
        Ok(poly)
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if a != 1 || k == 0 {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "p")?,
                _ => write!(f, "p^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PPoly {
    type Output = PPoly;
    fn add(self, rhs: &PPoly) -> PPoly {
        let n = self.0.len().max(rhs.0.len());
        PPoly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&0) + rhs.0.get(k).unwrap_or(&0))
                .collect(),
        )
    }
}

impl Neg for &PPoly {
    type Output = PPoly;
    fn neg(self) -> PPoly {
        PPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &PPoly {
    type Output = PPoly;
    fn sub(self, rhs: &PPoly) -> PPoly {
        self + &(-rhs)
    }
}

impl Mul for &PPoly {
    type Output = PPoly;
    fn mul(self, rhs: &PPoly) -> PPoly {
        if self.is_zero() || rhs.is_zero() {
            return PPoly::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PPoly::new(out)
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add, PPoly);
by_value!(Sub, sub, PPoly);
by_value!(Mul, mul, PPoly);

/// Exponent vector over `lambda_1..lambda_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(g: usize) -> Self {
        Self(vec![0; g])
    }

    /// `lambda_i`; `i = 0` gives the unit.
    pub fn lambda(g: usize, i: usize) -> Self {
        let mut e = vec![0; g];
        if i > 0 {
            e[i - 1] = 1;
        }
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Graded degree `sum i * e_i`.
    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &e)| (k + 1) * e as usize)
            .sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn render(&self, style: Style) -> String {
        let (sym, sep) = match style {
            Style::Machine => ("l", "*"),
            Style::Human => ("λ", ""),
        };
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    format!("{sym}{}", k + 1)
                } else {
                    format!("{sym}{}^{e}", k + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            format!("{sym}0")
        } else {
            parts.join(sep)
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), &self.0).cmp(&(other.degree(), &other.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// `l1*l3`
    Machine,
    /// `λ1λ3`
    Human,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaPoly {
    g: usize,
    terms: BTreeMap<Monomial, PPoly>,
}

impl LambdaPoly {
    pub fn zero(g: usize) -> Self {
        Self {
            g,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(g: usize, coeff: PPoly, mono: Monomial) -> Self {
        assert_eq!(mono.0.len(), g, "monomial arity");
        let mut out = Self::zero(g);
        out.add_term(mono, coeff);
        out
    }

    pub fn one(g: usize) -> Self {
        Self::term(g, PPoly::one(), Monomial::unit(g))
    }

    /// `lambda_i` with coefficient 1.
    pub fn lambda(g: usize, i: usize) -> Self {
        Self::term(g, PPoly::one(), Monomial::lambda(g, i))
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &PPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> PPoly {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mono: Monomial, coeff: PPoly) {
        let entry = self.terms.entry(mono).or_default();
        *entry = &*entry + &coeff;
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.g != other.g {
            return Err(Error::DimensionMismatch(self.g, other.g));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&PPoly::constant(-1)))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.g);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, by: &PPoly) -> Self {
        let mut out = Self::zero(self.g);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * by);
        }
        out
    }

    /// Substitutes an integer for `p`.
    pub fn eval_p(&self, p: i64) -> Self {
        let mut out = Self::zero(self.g);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), PPoly::constant(c.eval(p)));
        }
        out
    }

    /// Terms of graded degree `d`.
    pub fn component(&self, d: usize) -> Self {
        Self {
            g: self.g,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees that carry at least one term, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Monomial::degree).collect();
        d.dedup();
        d
    }

    /// Expanded rendering, e.g. `(p^2-1)*l2 - 2*l1^2`.
    pub fn render(&self, style: Style) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            // pull a leading minus sign out of the coefficient
            let negative = c.0.last().is_some_and(|&x| x < 0);
            let c = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mono = m.render(style);
            let sep = if style == Style::Machine { "*" } else { "" };
            match c.as_constant() {
                Some(1) => out.push_str(&mono),
                Some(n) => out.push_str(&format!("{n}{sep}{mono}")),
                None => out.push_str(&format!("({c}){sep}{mono}")),
            }
        }
        out
    }

    /// Parses class strings such as `-(p-1)(p^2+1) l1*l2 - 2(p^3-1) l3`,
    /// `(p-1)^2(p^2-p+1) l1*l3` or `l0`. Coefficients are products of an
    /// optional integer and parenthesized polynomials in `p`.
    pub fn parse(g: usize, text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let out = cur.class(g)?;
        cur.finish()?;
        Ok(out)
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Human))
    }
}

/// The class of the locus of p-rank at most `f`:
/// `(p-1)(p^2-1)...(p^{g-f}-1) lambda_{g-f}`, and the unit class when `f = g`.
pub fn prank_class(g: usize, f: usize) -> Result<LambdaPoly> {
    if g == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if f > g {
        return Err(Error::PRankOutOfRange { g, f: f as i64 });
    }
    let k = g - f;
    let coeff = (1..=k).fold(PPoly::one(), |acc, i| &acc * &PPoly::p_power_minus_one(i));
    Ok(LambdaPoly::term(g, coeff, Monomial::lambda(g, k)))
}

/// Factored rendering of [`prank_class`], in the style of the stored tables.
pub fn prank_class_factored(g: usize, f: usize, style: Style) -> Result<String> {
    let class = prank_class(g, f)?;
    let k = g - f;
    let mono = Monomial::lambda(g, k).render(style);
    let factors: String = (1..=k)
        .map(|i| {
            if i == 1 {
                "(p-1)".to_string()
            } else {
                format!("(p^{i}-1)")
            }
        })
        .collect();
    debug_assert!(!class.is_zero());
    Ok(if factors.is_empty() {
        mono
    } else {
        format!("{factors} {mono}")
    })
}

/// Nonzero graded components of
/// `(1 + l1 + ... + lg)(1 - l1 + ... + (-1)^g lg) - 1`, by increasing degree.
pub fn taut_relations(g: usize) -> Result<Vec<LambdaPoly>> {
    if g == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let mut plus = LambdaPoly::one(g);
    let mut minus = LambdaPoly::one(g);
    for i in 1..=g {
        let l = LambdaPoly::lambda(g, i);
        plus = plus.add(&l)?;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        minus = minus.add(&l.scale(&PPoly::constant(sign)))?;
    }
    let product = plus.multiply(&minus)?.sub(&LambdaPoly::one(g))?;
    Ok(product
        .degrees()
        .into_iter()
        .map(|d| product.component(d))
        .collect())
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, t: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    fn sign(&mut self) -> Option<i64> {
        if self.eat(b'+') {
            Some(1)
        } else if self.eat(b'-') {
            Some(-1)
        } else {
            None
        }
    }

    fn ppoly(&mut self) -> Result<PPoly> {
        let mut acc = PPoly::zero();
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let c = self.number();
            let term = if self.eat(b'p') {
                let e = if self.eat(b'^') {
                    match self.number() {
                        Some(e) => e as usize,
                        None => return self.err("expected exponent"),
                    }
                } else {
                    1
                };
                PPoly::monomial(e)
            } else if c.is_some() {
                PPoly::one()
            } else {
                return self.err("expected a term in p");
            };
            let scalar = sign * c.unwrap_or(1) as i64;
            acc = &acc + &(&term * &PPoly::constant(scalar));
            match self.sign() {
                Some(s) => sign = s,
                None => return Ok(acc),
            }
        }
    }

    fn coefficient(&mut self) -> Result<PPoly> {
        let mut acc = PPoly::constant(self.number().unwrap_or(1) as i64);
        while self.eat(b'(') {
            let inner = self.ppoly()?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            let e = if self.eat(b'^') {
                match self.number() {
                    Some(e) => e as u32,
                    None => return self.err("expected exponent"),
                }
            } else {
                1
            };
            acc = &acc * &inner.pow(e);
        }
        self.eat(b'*');
        Ok(acc)
    }

    fn lambda_symbol(&mut self) -> bool {
        self.eat(b'l') || self.eat_str("λ")
    }

    fn monomial(&mut self, g: usize) -> Result<Monomial> {
        let mut mono = Monomial::unit(g);
        if !self.lambda_symbol() {
            return self.err("expected a lambda class");
        }
        loop {
            let Some(i) = self.number() else {
                return self.err("expected lambda index");
            };
            let i = i as usize;
            if i > g {
                return self.err(format!("lambda index {i} exceeds g = {g}"));
            }
            let e = if self.eat(b'^') {
                match self.number() {
                    Some(e) => e as u32,
                    None => return self.err("expected exponent"),
                }
            } else {
                1
            };
            if i > 0 {
                mono.0[i - 1] += e;
            }
            let save = self.pos;
            self.eat(b'*');
            if !self.lambda_symbol() {
                self.pos = save;
                return Ok(mono);
            }
        }
    }

    fn class(&mut self, g: usize) -> Result<LambdaPoly> {
        let mut out = LambdaPoly::zero(g);
        let start = self.pos;
        if self.number() == Some(0) && self.peek().is_none() {
            return Ok(out);
        }
        self.pos = start;
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let coeff = self.coefficient()?;
            let mono = self.monomial(g)?;
            out.add_term(mono, &coeff * &PPoly::constant(sign));
            match self.sign() {
                Some(s) => sign = s,
                None => return Ok(out),
            }
        }
    }
}
