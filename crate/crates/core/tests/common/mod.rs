#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use skein_core::{HeckeElement, LaurentPoly, Permutation, RationalFunction};

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, -3i32..=3, -4i64..=4), 0..4).prop_map(|terms| {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (dv, ds, c)| {
            &acc + &LaurentPoly::term(BigRational::from_integer(BigInt::from(c)), dv, ds)
        })
    })
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn rational() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = RationalFunction> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

/// Sparse element of `H_n` with Laurent polynomial coefficients.
pub fn hecke(n: usize, max_terms: usize) -> impl Strategy<Value = HeckeElement> {
    let perms = Permutation::all(n);
    let count = perms.len();
    prop::collection::vec((0..count, nonzero_laurent()), 1..=max_terms).prop_map(move |terms| {
        terms.into_iter().fold(HeckeElement::zero(n), |acc, (k, c)| {
            &acc + &HeckeElement::basis(perms[k]).scale(&RationalFunction::from_poly(c))
        })
    })
}

pub fn r(text: &str) -> RationalFunction {
    text.parse().unwrap()
}

pub fn p(text: &str) -> skein_core::Partition {
    text.parse().unwrap()
}
