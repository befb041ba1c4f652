//! The Hecke algebra `H_n` on the basis of positive permutation braids `ω_π`.
//!
//! Generators satisfy `σ_i² = (s - s^{-1}) σ_i + 1`. Products are computed
//! with the basis rule `ω_π σ_i = ω_{π s_i}` when the length rises and
//! `ω_{π s_i} + (s - s^{-1}) ω_π` otherwise.

mod idempotent;
pub(crate) mod poly;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rayon::prelude::*;
use thiserror::Error;

use crate::braids::{BraidWord, Permutation};
use crate::scalars::{LaurentPoly, RationalFunction, ScalarError};
pub use idempotent::{
    a_n, alpha_extract, b_n, e_lambda, e_lambda_with_order, idempotent, row_column_permutation, ConjugationOrder,
    CALIBRATED_ORDER,
};
pub(crate) use poly::PolyHecke;

/// Dense products are refused above this width (`7! = 5040` basis elements).
pub const MAX_DENSE_WIDTH: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("width {0} exceeds the dense limit of {MAX_DENSE_WIDTH}")]
    TooLarge(usize),
    #[error("element is not proportional to its square")]
    NotProportional,
    #[error("element is zero")]
    ZeroElement,
    #[error("cannot cap a strand of a width-0 element")]
    ZeroWidth,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub(crate) fn check_width(n: usize) -> Result<(), HeckeError> {
    if n > MAX_DENSE_WIDTH {
        Err(HeckeError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Element of `H_n` as a sparse map from permutations to exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    width: usize,
    coeffs: BTreeMap<Permutation, RationalFunction>,
}

impl HeckeElement {
    pub fn zero(width: usize) -> Self {
        HeckeElement { width, coeffs: BTreeMap::new() }
    }

    pub fn identity(width: usize) -> Self {
        Self::basis(Permutation::identity(width))
    }

    /// The positive permutation braid `ω_π`.
    pub fn basis(p: Permutation) -> Self {
        Self::zero(p.width()).with_term(p, RationalFunction::one())
    }

    /// A scalar multiple of the empty braid.
    pub fn scalar(c: RationalFunction) -> Self {
        Self::zero(0).with_term(Permutation::identity(0), c)
    }

    pub fn sigma(width: usize, i: usize) -> Self {
        assert!(i >= 1 && i < width, "generator σ_{i} out of range for width {width}");
        Self::basis(Permutation::identity(width).mul_transposition(i).0)
    }

    /// `σ_i^{-1} = σ_i - (s - s^{-1})`
    pub fn sigma_inv(width: usize, i: usize) -> Self {
        &Self::sigma(width, i) - &Self::identity(width).scale(&crate::scalars::z())
    }

    pub fn from_terms<I>(width: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, RationalFunction)>,
    {
        let mut out = Self::zero(width);
        for (p, c) in terms {
            assert_eq!(p.width(), width, "permutation width mismatch");
            out.add_term(p, c);
        }
        out
    }

    fn with_term(mut self, p: Permutation, c: RationalFunction) -> Self {
        self.add_term(p, c);
        self
    }

    fn add_term(&mut self, p: Permutation, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&p) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.coeffs.remove(&p);
                }
            }
            None => {
                self.coeffs.insert(p, c);
            }
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Permutation) -> RationalFunction {
        self.coeffs.get(p).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Terms in lexicographic order of permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RationalFunction)> {
        self.coeffs.iter()
    }

    /// Coefficient of the empty braid, for width-0 elements.
    pub fn as_scalar(&self) -> Option<RationalFunction> {
        (self.width == 0).then(|| self.coeff(&Permutation::identity(0)))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.width);
        }
        HeckeElement {
            width: self.width,
            coeffs: self.coeffs.iter().map(|(p, x)| (*p, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.width != other.width {
            return Err(HeckeError::WidthMismatch { left: self.width, right: other.width });
        }
        check_width(self.width)?;
        let (x, dx) = self.to_poly();
        let (y, dy) = other.to_poly();
        Ok(Self::from_poly(&x.mul(&y), &(&dx * &dy)))
    }

    /// Juxtaposition: `self` on the first strands, `other` on the rest.
    pub fn tensor(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        check_width(self.width + other.width)?;
        let (x, dx) = self.to_poly();
        let (y, dy) = other.to_poly();
        Ok(Self::from_poly(&x.tensor(&y), &(&dx * &dy)))
    }

    /// The product of the letters of a braid word.
    pub fn from_braid(word: &BraidWord) -> Result<HeckeElement, HeckeError> {
        check_width(word.width())?;
        let mut x = PolyHecke::identity(word.width());
        for &l in word.letters() {
            x = x.mul_letter(l);
        }
        Ok(Self::from_poly(&x, &LaurentPoly::one()))
    }

    /// The mirror map: `σ_i -> σ_i^{-1}` on braids and `v -> v^{-1}`,
    /// `s -> s^{-1}` on scalars. Multiplicative, and an involution.
    pub fn mirror(&self) -> Result<HeckeElement, HeckeError> {
        check_width(self.width)?;
        let (x, d) = self.to_poly();
        let xb = x.bar();
        let needed = poly::ancestors(xb.terms.keys());
        let mut acc = PolyHecke::zero(self.width);
        poly::walk_with(
            PolyHecke::identity(self.width),
            &needed,
            &mut |tau, cur| {
                if let Some(c) = xb.terms.get(&tau) {
                    acc.add_scaled(cur, c);
                }
            },
            &|cur, i| cur.mul_sigma_inv(i),
        );
        Ok(Self::from_poly(&acc, &d.bar()))
    }

    /// Split into a polynomial element and a common denominator.
    pub(crate) fn to_poly(&self) -> (PolyHecke, LaurentPoly) {
        let dens: HashSet<&LaurentPoly> = self
            .coeffs
            .values()
            .map(|c| c.denominator())
            .filter(|d| !d.is_one())
            .collect();
        let mut dens: Vec<&LaurentPoly> = dens.into_iter().collect();
        dens.sort_by_key(|d| d.to_string());
        let mut l = LaurentPoly::one();
        for d in dens {
            let g = l.gcd(d);
            l = (&l * d).exact_div(&g).expect("gcd divides product").normalized();
        }
        let mut out = PolyHecke::zero(self.width);
        for (p, c) in &self.coeffs {
            let k = if c.denominator().is_one() {
                l.clone()
            } else {
                l.exact_div(c.denominator()).expect("lcm is a multiple")
            };
            out.add_term(*p, &(c.numerator() * &k));
        }
        (out, l)
    }

    pub(crate) fn from_poly(x: &PolyHecke, den: &LaurentPoly) -> HeckeElement {
        let terms: Vec<(Permutation, &LaurentPoly)> = x.terms.iter().map(|(p, c)| (*p, c)).collect();
        let coeffs: BTreeMap<Permutation, RationalFunction> = if den.is_one() {
            terms.into_iter().map(|(p, c)| (p, RationalFunction::from_poly(c.clone()))).collect()
        } else {
            terms
                .into_par_iter()
                .map(|(p, c)| (p, RationalFunction::new(c.clone(), den.clone()).expect("nonzero denominator")))
                .collect()
        };
        HeckeElement { width: x.width, coeffs }
    }

    /// One line per term, `perm : coefficient`, sorted by permutation.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (p, c) in &self.coeffs {
            out.push_str(&format!("{p} : {c}\n"));
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.render().trim_end())
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    /// Panics on width mismatch.
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.width, rhs.width, "width mismatch");
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(*p, c.clone());
        }
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement {
            width: self.width,
            coeffs: self.coeffs.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braids::parse_braid;
    use crate::scalars::z;

    fn braid(text: &str, width: usize) -> HeckeElement {
        HeckeElement::from_braid(&parse_braid(text, Some(width)).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let s1 = HeckeElement::sigma(2, 1);
        let sq = s1.mul(&s1).unwrap();
        let expected = &HeckeElement::identity(2) + &s1.scale(&z());
        assert_eq!(sq, expected);
    }

    #[test]
    fn lengths_add() {
        let s1 = HeckeElement::sigma(3, 1);
        let s2 = HeckeElement::sigma(3, 2);
        let p = Permutation::identity(3).mul_transposition(1).0.mul_transposition(2).0;
        assert_eq!(s1.mul(&s2).unwrap(), HeckeElement::basis(p));
    }

    #[test]
    fn braid_words() {
        assert_eq!(braid("1", 2), HeckeElement::sigma(2, 1));
        let inv = &HeckeElement::sigma(2, 1) - &HeckeElement::identity(2).scale(&z());
        assert_eq!(braid("-1", 2), inv);
        assert_eq!(braid("1 1 -1", 2), HeckeElement::sigma(2, 1));
        assert_eq!(braid("1 -1 2 -2", 3), HeckeElement::identity(3));
        assert_eq!(braid("1 2 1", 3), braid("2 1 2", 3));
    }

    #[test]
    fn width_errors() {
        let a = HeckeElement::identity(2);
        let b = HeckeElement::identity(3);
        assert_eq!(a.mul(&b), Err(HeckeError::WidthMismatch { left: 2, right: 3 }));
        assert_eq!(HeckeElement::identity(8).mul(&HeckeElement::identity(8)), Err(HeckeError::TooLarge(8)));
    }

    #[test]
    fn tensor_examples() {
        let one = HeckeElement::identity(1);
        assert_eq!(one.tensor(&one).unwrap(), HeckeElement::identity(2));
        assert_eq!(
            HeckeElement::sigma(2, 1).tensor(&one).unwrap(),
            HeckeElement::sigma(3, 1)
        );
        let a2 = a_n(2);
        let t = a2.tensor(&a2).unwrap();
        assert_eq!(t.len(), 4);
        for (p, c) in t.terms() {
            assert_eq!(*c, RationalFunction::monomial(0, p.length() as i32));
        }
    }

    #[test]
    fn mirror_of_generator() {
        let m = HeckeElement::sigma(2, 1).mirror().unwrap();
        assert_eq!(m, braid("-1", 2));
        let x = &braid("1 2 -1", 3) + &HeckeElement::identity(3).scale(&"v+2*s".parse().unwrap());
        assert_eq!(x.mirror().unwrap().mirror().unwrap(), x);
    }

    #[test]
    fn rendering() {
        let x = &HeckeElement::identity(2) + &HeckeElement::sigma(2, 1).scale(&RationalFunction::s());
        assert_eq!(x.render(), "12 : 1\n21 : s\n");
    }
}
