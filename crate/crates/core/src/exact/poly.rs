//! Sparse polynomials in `Q[x, alpha]`.
//!
//! Every matrix entry in the crate lives here: rationals embed as constants,
//! `x` is the argument of the polynomial families and `alpha` their order.
//! Terms are kept in a zero-free map, so derived `PartialEq` is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::PolyError;
use crate::exact::Rational;

/// Exponent pair of a monomial `x^x * alpha^alpha`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: u32,
    pub alpha: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, alpha: 0 };

    pub fn new(x: u32, alpha: u32) -> Self {
        Monomial { x, alpha }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.alpha
    }

    /// Key that sorts monomials in graded-lex order, highest first, `x` before `alpha`.
    fn graded_key(&self) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
        (std::cmp::Reverse(self.degree()), std::cmp::Reverse(self.x))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 1, 0)
    }

    pub fn alpha() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<Rational>, x: u32, alpha: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, alpha), c);
        }
        BiPoly { terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(deg_x, deg_alpha)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in graded-lex order, highest degree first, `x` before `alpha`.
    pub fn graded_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by_key(|(m, _)| m.graded_key());
        v
    }

    pub fn coeff(&self, x: u32, alpha: u32) -> Rational {
        self.terms.get(&Monomial::new(x, alpha)).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational value if the polynomial is constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn contains_x(&self) -> bool {
        self.terms.keys().any(|m| m.x > 0)
    }

    pub fn contains_alpha(&self) -> bool {
        self.terms.keys().any(|m| m.alpha > 0)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn degree_alpha(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.alpha).max()
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the given values for `x` and/or `alpha`; unset variables stay formal.
    pub fn eval(&self, x: Option<&Rational>, alpha: Option<&Rational>) -> BiPoly {
        let x_pows = x.map(|v| powers_of(v, self.degree_x().unwrap_or(0)));
        let a_pows = alpha.map(|v| powers_of(v, self.degree_alpha().unwrap_or(0)));
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut target = *m;
            if let Some(p) = &x_pows {
                c *= &p[m.x as usize];
                target.x = 0;
            }
            if let Some(p) = &a_pows {
                c *= &p[m.alpha as usize];
                target.alpha = 0;
            }
            out.add_term(target, &c);
        }
        out
    }

    /// Simultaneous substitution `x -> x_to`, `alpha -> alpha_to`.
    pub fn compose(&self, x_to: &BiPoly, alpha_to: &BiPoly) -> BiPoly {
        if *x_to == BiPoly::x() && *alpha_to == BiPoly::alpha() {
            return self.clone();
        }
        match (x_to.as_constant(), alpha_to.as_constant()) {
            (Some(xv), Some(av)) => return self.eval(Some(&xv), Some(&av)),
            (Some(xv), None) if *alpha_to == BiPoly::alpha() => return self.eval(Some(&xv), None),
            (None, Some(av)) if *x_to == BiPoly::x() => return self.eval(None, Some(&av)),
            _ => {}
        }
        let x_pows = poly_powers(x_to, self.degree_x().unwrap_or(0));
        let a_pows = poly_powers(alpha_to, self.degree_alpha().unwrap_or(0));
        // Group by alpha degree so each alpha power is multiplied once.
        let mut by_alpha: BTreeMap<u32, BiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let slot = by_alpha.entry(m.alpha).or_default();
            *slot = &*slot + &x_pows[m.x as usize].scale(c);
        }
        let mut out = BiPoly::zero();
        for (a, p) in by_alpha {
            out = &out + &(&p * &a_pows[a as usize]);
        }
        out
    }

    /// `p(x + c)` for a shift `c` free of `x`.
    pub fn shift_x(&self, c: &BiPoly) -> Result<BiPoly, PolyError> {
        if c.contains_x() {
            return Err(PolyError::ShiftContainsX);
        }
        Ok(self.compose(&(&BiPoly::x() + c), &BiPoly::alpha()))
    }

    /// Formal partial derivative in `x`.
    pub fn derivative_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Monomial::new(m.x - 1, m.alpha), c * &Rational::from(m.x as i64))),
        )
    }

    /// Exact division by `x^k`; `None` if some term has x-degree below `k`.
    pub fn div_x_pow(&self, k: u32) -> Option<BiPoly> {
        if self.terms.keys().any(|m| m.x < k) {
            return None;
        }
        Some(BiPoly {
            terms: self.terms.iter().map(|(m, c)| (Monomial::new(m.x - k, m.alpha), c.clone())).collect(),
        })
    }
}

fn powers_of(v: &Rational, max: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(Rational::one());
    for i in 1..=max as usize {
        out.push(&out[i - 1] * v);
    }
    out
}

fn poly_powers(p: &BiPoly, max: u32) -> Vec<BiPoly> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BiPoly::one());
    for i in 1..=max as usize {
        out.push(&out[i - 1] * p);
    }
    out
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(c)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(*m, c);
        }
        big
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
        self
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.alpha + mb.alpha), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.x), ("alpha", m.alpha)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Plain-text rendering, e.g. `x^2 - x*alpha + 1/4*alpha^2 - 1/4*alpha`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.graded_terms().iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_term(raw: &str) -> Result<(Monomial, Rational), PolyError> {
    let bad = || PolyError::MalformedTerm(raw.to_string());
    let mut coeff = Rational::one();
    let mut mono = Monomial::ONE;
    for factor in raw.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        match base {
            "x" => mono.x += exp,
            "alpha" => mono.alpha += exp,
            _ if exp == 1 => coeff *= &base.parse::<Rational>()?,
            _ => return Err(bad()),
        }
    }
    Ok((mono, coeff))
}

/// Parses the [`Display`](fmt::Display) form back into a polynomial.
impl FromStr for BiPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::MalformedTerm(String::new()));
        }
        let mut out = BiPoly::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(p), Some(m)) => Some(p.min(m)),
                (p, m) => p.or(m),
            };
            let (term, next) = match cut {
                Some(i) => (&rest[..i], Some((&rest[i + 1..i + 2] == "-", &rest[i + 3..]))),
                None => (rest, None),
            };
            let (m, c) = parse_term(term.trim())?;
            out.add_term(m, &if negative { -c } else { c });
            match next {
                Some((neg, r)) => {
                    negative = neg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(out)
    }
}
