//! Dense polynomials over `Q` used for gcd and exact division.
//!
//! A bivariate polynomial is stored as a polynomial in `v` whose coefficients
//! are dense polynomials in `s`. Bivariate gcds are found by evaluating `s`,
//! taking gcds in `Q[v]` and interpolating.

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc(&self) -> &BigRational {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return UniPoly::default();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn sub(&self, other: &UniPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        UniPoly::new(out)
    }

    pub fn mul(&self, other: &UniPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (UniPoly::default(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        let inv = d.lc().recip();
        let mut q = vec![BigRational::zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dl - 1] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dl - 1);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Monic gcd over `Q`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            if b.degree() == 0 {
                return UniPoly::one();
            }
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in `v` with `Q[s]` coefficients; `rows[k]` is the coefficient of `v^k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct BiPoly {
    rows: Vec<UniPoly>,
}

impl BiPoly {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        Self::new(rows.into_iter().map(UniPoly::new).collect())
    }

    fn new(mut rows: Vec<UniPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn deg_v(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    fn lc(&self) -> &UniPoly {
        self.rows.last().expect("leading coefficient of zero polynomial")
    }

    fn content(&self) -> UniPoly {
        let mut it = self.rows.iter().filter(|r| !r.is_zero());
        let Some(first) = it.next() else {
            return UniPoly::default();
        };
        let mut g = first.monic();
        for r in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(r);
        }
        g
    }

    fn mul_uni(&self, c: &UniPoly) -> Self {
        BiPoly::new(self.rows.iter().map(|r| r.mul(c)).collect())
    }

    fn div_uni(&self, c: &UniPoly) -> Self {
        if c.is_one() {
            return self.clone();
        }
        BiPoly::new(
            self.rows
                .iter()
                .map(|r| r.exact_div(c).expect("content divides every coefficient"))
                .collect(),
        )
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        self.div_uni(&c)
    }

    /// `self - c * v^k * other`
    fn sub_shifted(&self, other: &BiPoly, c: &UniPoly, k: usize) -> Self {
        let n = self.rows.len().max(other.rows.len() + k);
        let mut rows = self.rows.clone();
        rows.resize(n, UniPoly::default());
        for (j, r) in other.rows.iter().enumerate() {
            rows[j + k] = rows[j + k].sub(&r.mul(c));
        }
        BiPoly::new(rows)
    }

    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let mut p = self.div_uni(&ca);
        let mut q = other.div_uni(&cb);
        if p.deg_v() < q.deg_v() {
            std::mem::swap(&mut p, &mut q);
        }
        if q.is_zero() {
            return p.primitive_part().mul_uni(&c);
        }
        if q.deg_v() == 0 {
            return BiPoly::new(vec![c]);
        }
        interpolated_gcd(&p, &q).mul_uni(&c)
    }

    fn deg_s(&self) -> usize {
        self.rows.iter().map(UniPoly::degree).max().unwrap_or(0)
    }

    fn at_s(&self, x: &BigRational) -> UniPoly {
        UniPoly::new(self.rows.iter().map(|r| r.eval(x)).collect())
    }

    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(BiPoly::default());
        }
        if self.deg_v() < d.deg_v() {
            return None;
        }
        let n = d.deg_v();
        let mut q = vec![UniPoly::default(); self.deg_v() - n + 1];
        let mut r = self.clone();
        while !r.is_zero() && r.deg_v() >= n {
            let k = r.deg_v() - n;
            let coef = r.lc().exact_div(d.lc())?;
            r = r.sub_shifted(d, &coef, k);
            q[k] = coef;
        }
        r.is_zero().then(|| BiPoly::new(q))
    }
}

/// Gcd of two polynomials primitive in `v` with positive `v`-degree.
///
/// At an `s = x` where neither leading coefficient vanishes, the gcd in `v`
/// of the specializations is divisible by the specialized gcd; equality holds
/// for all but finitely many `x`, and those have strictly larger degree.
/// Scaling the monic specialized gcds by `γ = gcd(lc p, lc q)` makes them
/// values of one polynomial whose `s`-degree is at most
/// `deg γ + min(deg_s p, deg_s q)`, which is recovered by interpolation and
/// confirmed by trial division.
fn interpolated_gcd(p: &BiPoly, q: &BiPoly) -> BiPoly {
    let gamma = p.lc().gcd(q.lc());
    let needed = gamma.degree() + p.deg_s().min(q.deg_s()) + 1;
    let mut xs: Vec<BigRational> = Vec::new();
    let mut images: Vec<UniPoly> = Vec::new();
    for k in 0i64.. {
        let x = BigRational::from_integer(k.into());
        if p.lc().eval(&x).is_zero() || q.lc().eval(&x).is_zero() {
            continue;
        }
        let g = p.at_s(&x).gcd(&q.at_s(&x));
        if g.degree() == 0 {
            return BiPoly::new(vec![UniPoly::one()]);
        }
        if let Some(first) = images.first() {
            if g.degree() > first.degree() {
                continue;
            }
            if g.degree() < first.degree() {
                xs.clear();
                images.clear();
            }
        }
        images.push(g.scale(&gamma.eval(&x)));
        xs.push(x);
        if xs.len() < needed {
            continue;
        }
        let d = images[0].degree();
        let rows = (0..=d)
            .map(|i| {
                let ys: Vec<BigRational> = images.iter().map(|g| g.coeffs[i].clone()).collect();
                interpolate(&xs, &ys)
            })
            .collect();
        let candidate = BiPoly::new(rows).primitive_part();
        if p.exact_div(&candidate).is_some() && q.exact_div(&candidate).is_some() {
            return candidate;
        }
    }
    unreachable!()
}

/// The polynomial of degree below `xs.len()` through the points `(xs, ys)`.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = UniPoly::default();
    for i in (0..n).rev() {
        let shifted = acc.mul(&UniPoly::new(vec![-xs[i].clone(), BigRational::one()]));
        acc = shifted.sub(&UniPoly::new(vec![-dd[i].clone()]));
    }
    acc
}
