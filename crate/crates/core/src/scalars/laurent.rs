use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::BiPoly;

/// Exponent pair `v^v * s^s`. Ordered lexicographically on `(v, s)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub v: i32,
    pub s: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { v: 0, s: 0 };

    pub fn new(v: i32, s: i32) -> Self {
        Monomial { v, s }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.v + other.v, self.s + other.s)
    }
}

/// Sparse Laurent polynomial in `v` and `s` with rational coefficients.
///
/// Terms are kept sorted by exponent pair and never store a zero coefficient,
/// so two equal polynomials always have identical term vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * v^dv * s^ds`
    pub fn term(c: BigRational, dv: i32, ds: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: vec![(Monomial::new(dv, ds), c)],
        }
    }

    pub fn monomial(dv: i32, ds: i32) -> Self {
        Self::term(BigRational::one(), dv, ds)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(0, 1)
    }

    /// Build from arbitrary (possibly repeated, unsorted, zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut raw: Vec<_> = terms.into_iter().collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { terms: out }
    }

    /// Univariate Laurent polynomial in `s` from `(exponent, integer coefficient)` pairs.
    pub fn in_s<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(0, e), BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single term `c * v^a * s^b`, if the polynomial has exactly one.
    pub fn as_term(&self) -> Option<(Monomial, &BigRational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }

    /// Constant value if the polynomial has no `v` or `s` dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Coefficient of the lexicographically first term.
    pub fn first_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Componentwise minimal exponents over all terms.
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |acc, (m, _)| Monomial::new(acc.v.min(m.v), acc.s.min(m.s)))
    }

    pub fn max_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |acc, (m, _)| Monomial::new(acc.v.max(m.v), acc.s.max(m.s)))
    }

    /// Does any term carry a nonzero power of `v`?
    pub fn depends_on_v(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.v != 0)
    }

    /// Multiply by `v^dv * s^ds`.
    pub fn shift(&self, dv: i32, ds: i32) -> Self {
        let d = Monomial::new(dv, ds);
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.times(d), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiply by `s - s^{-1}`.
    pub fn mul_z(&self) -> Self {
        &self.shift(0, 1) - &self.shift(0, -1)
    }

    /// Substitute `v -> v^{-1}`, `s -> s^{-1}`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(-m.v, -m.s), c.clone()))
            .collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Dense polynomial view after dividing out the minimal monomial.
    pub(crate) fn to_dense(&self) -> (BiPoly, Monomial) {
        let shift = self.min_exponents();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (m, c) in &self.terms {
            let dv = (m.v - shift.v) as usize;
            let ds = (m.s - shift.s) as usize;
            if rows.len() <= dv {
                rows.resize(dv + 1, Vec::new());
            }
            let row = &mut rows[dv];
            if row.len() <= ds {
                row.resize(ds + 1, BigRational::zero());
            }
            row[ds] = c.clone();
        }
        (BiPoly::from_rows(rows), shift)
    }

    pub(crate) fn from_dense(p: &BiPoly, shift: Monomial) -> Self {
        let mut terms = Vec::new();
        for (dv, row) in p.rows().iter().enumerate() {
            for (ds, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.push((Monomial::new(dv as i32 + shift.v, ds as i32 + shift.s), c.clone()));
                }
            }
        }
        LaurentPoly { terms }
    }

    /// Exact quotient in the Laurent ring, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = d.as_term() {
            return Some(self.shift(-m.v, -m.s).scale(&c.recip()));
        }
        let (a, sa) = self.to_dense();
        let (b, sb) = d.to_dense();
        let q = a.exact_div(&b)?;
        Some(Self::from_dense(&q, Monomial::new(sa.v - sb.v, sa.s - sb.s)))
    }

    /// Greatest common divisor in `Q[v^±, s^±]`, normalized to have minimal
    /// exponents zero and first coefficient one.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        // monomials are units
        if self.as_term().is_some() || other.as_term().is_some() {
            return Self::one();
        }
        let (a, _) = self.to_dense();
        let (b, _) = other.to_dense();
        Self::from_dense(&a.gcd(&b), Monomial::ONE).normalized()
    }

    /// Associate with minimal exponents zero and first coefficient one.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let m = self.min_exponents();
        let c = self.terms[0].1.recip();
        self.shift(-m.v, -m.s).scale(&c)
    }

    pub fn eval_rational(&self, v: &BigRational, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c * pow_signed(v, m.v) * pow_signed(s, m.s);
        }
        acc
    }
}

fn pow_signed(x: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = rhs.as_term() {
            return self.shift(m.v, m.s).scale(c);
        }
        if let Some((m, c)) = self.as_term() {
            return rhs.shift(m.v, m.s).scale(c);
        }
        let mut raw = Vec::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                raw.push((ma.times(*mb), ca * cb));
            }
        }
        LaurentPoly::from_terms(raw)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let (ta, tb) = (&a.terms, &b.terms);
    while i < ta.len() && j < tb.len() {
        match ta[i].0.cmp(&tb[j].0) {
            std::cmp::Ordering::Less => {
                out.push(ta[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { -&tb[j].1 } else { tb[j].1.clone() };
                out.push((tb[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &ta[i].1 - &tb[j].1 } else { &ta[i].1 + &tb[j].1 };
                if !c.is_zero() {
                    out.push((ta[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(ta[i..].iter().cloned());
    for (m, c) in &tb[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    LaurentPoly { terms: out }
}

impl fmt::Display for LaurentPoly {
    /// Terms in `(deg_v, deg_s)` order, e.g. `-3*v^-2*s^4+v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if *m == Monomial::ONE || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (name, e) in [("v", m.v), ("s", m.s)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
