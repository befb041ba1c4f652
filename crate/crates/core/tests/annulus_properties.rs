mod common;

use std::collections::BTreeMap;

use common::{hecke, p};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use skein_core::annulus::{expand_closure, expand_closure_by_projectors, gamma, hook_character_oracle, AnnulusElement, ClosureExpander};
use skein_core::hecke::idempotent;
use skein_core::partitions::{c_lambda, d_lambda, lr_coeffs, q_lambda, schur_h};
use skein_core::trace::{homfly, meridian};
use skein_core::{parse_braid, HeckeElement, Partition, RationalFunction};

fn check_compatibility(expander: &ClosureExpander, x: &HeckeElement) -> Result<(), TestCaseError> {
    let a = expander.expand(x).unwrap();
    prop_assert_eq!(expander.reconstruct_homfly(&a), homfly(x).unwrap());
    prop_assert_eq!(expander.predict_meridian_homfly(&a), homfly(&meridian(x).unwrap()).unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn expansion_commutes_with_meridian_h3(x in hecke(3, 5)) {
        check_compatibility(&ClosureExpander::new(3).unwrap(), &x)?;
    }

    #[test]
    fn expansion_is_linear(x in hecke(3, 4), y in hecke(3, 4)) {
        let e = ClosureExpander::new(3).unwrap();
        let sum = e.expand(&(&x + &y)).unwrap();
        let mut expected = e.expand(&x).unwrap();
        for (k, c) in e.expand(&y).unwrap() {
            let slot = expected.entry(k).or_insert_with(RationalFunction::zero);
            *slot = &*slot + &c;
        }
        expected.retain(|_, c| !c.is_zero());
        prop_assert_eq!(sum, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn expansion_commutes_with_meridian_h4(x in hecke(4, 4)) {
        check_compatibility(&ClosureExpander::new(4).unwrap(), &x)?;
    }
}

#[test]
fn idempotents_close_to_single_components() {
    for n in 1..=4 {
        let e = ClosureExpander::new(n).unwrap();
        for l in Partition::all(n) {
            let got = e.expand(&idempotent(&l).unwrap()).unwrap();
            assert_eq!(got, BTreeMap::from([(l.clone(), RationalFunction::one())]), "({l})");
        }
    }
}

#[test]
fn projector_method_agrees() {
    for n in 1..=3 {
        for w in sample_words(n) {
            let x = HeckeElement::from_braid(&parse_braid(&w, Some(n)).unwrap()).unwrap();
            assert_eq!(expand_closure(&x).unwrap(), expand_closure_by_projectors(&x).unwrap(), "{w}");
        }
    }
}

/// A few short braid words of width `n`.
fn sample_words(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for i in 1..n as i32 {
        out.push(format!("{i}"));
        out.push(format!("-{i} -{i}"));
        out.push(format!("{i} {i} {i}"));
    }
    if n == 3 {
        out.push("1 -2 1 2".into());
    }
    out
}

#[test]
fn hook_braids() {
    for i in 1..=4 {
        let word: Vec<String> = (1..i).rev().map(|k| k.to_string()).collect();
        let x = HeckeElement::from_braid(&parse_braid(&word.join(" "), Some(i)).unwrap()).unwrap();
        assert_eq!(expand_closure(&x).unwrap(), hook_character_oracle(i), "i = {i}");
    }
}

#[test]
fn lr_values_are_dimension_compatible() {
    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
    }
    for n in 0..=7 {
        for a in 0..=n {
            for l in Partition::all(a) {
                for m in Partition::all(n - a) {
                    let total: u64 = lr_coeffs(&l, &m).iter().map(|(nu, c)| c * d_lambda(nu)).sum();
                    assert_eq!(total, binom(n as u64, a as u64) * d_lambda(&l) * d_lambda(&m), "({l}) x ({m})");
                }
            }
        }
    }
}

#[test]
fn ringhom_values_are_nonnegative_integers() {
    for n in 2..=4 {
        let e = ClosureExpander::new(n).unwrap();
        for a in 1..n {
            for l in Partition::all(a) {
                for m in Partition::all(n - a) {
                    let x = idempotent(&l).unwrap().tensor(&idempotent(&m).unwrap()).unwrap();
                    for (nu, c) in e.expand(&x).unwrap() {
                        let k = c.as_integer().unwrap_or_else(|| panic!("({l}) x ({m}) at ({nu}): {c}"));
                        assert!(k > BigInt::zero());
                    }
                }
            }
        }
    }
}

#[test]
fn gamma_scales_schur_functions() {
    for n in 0..=6 {
        for l in Partition::all(n) {
            let got = gamma(&AnnulusElement::q(&l), n).unwrap();
            assert_eq!(got.sym(), &schur_h(&l).scale(&q_lambda(&l)));
            assert_eq!(q_lambda(&l), c_lambda(&l));
        }
    }
    let sum = AnnulusElement::new(&schur_h(&p("2")) + &schur_h(&p("1,1")));
    let expected = &schur_h(&p("2")).scale(&c_lambda(&p("2"))) + &schur_h(&p("1,1")).scale(&c_lambda(&p("1,1")));
    assert_eq!(gamma(&sum, 2).unwrap().sym(), &expected);
    assert!(gamma(&AnnulusElement::new(Default::default()), 3).unwrap().sym().is_zero());
}

/// `h_i` and `e_i` of ten rational numbers, by brute force.
fn brute_force_h_e(xs: &[BigRational], k: usize) -> (Vec<BigRational>, Vec<BigRational>) {
    let n = xs.len();
    let mut h = vec![BigRational::one()];
    let mut e = vec![BigRational::one()];
    for d in 1..=k {
        // multisets and subsets of size d as index sequences
        let mut hs = BigRational::zero();
        let mut stack = vec![(0usize, 0usize, BigRational::one())];
        while let Some((start, depth, prod)) = stack.pop() {
            if depth == d {
                hs += prod;
                continue;
            }
            for i in start..n {
                stack.push((i, depth + 1, &prod * &xs[i]));
            }
        }
        let mut es = BigRational::zero();
        let mut stack = vec![(0usize, 0usize, BigRational::one())];
        while let Some((start, depth, prod)) = stack.pop() {
            if depth == d {
                es += prod;
                continue;
            }
            for i in start..n {
                stack.push((i + 1, depth + 1, &prod * &xs[i]));
            }
        }
        h.push(hs);
        e.push(es);
    }
    (h, e)
}

#[test]
fn column_schur_functions_are_elementary() {
    let xs: Vec<BigRational> = (1..=10).map(|i| BigRational::new(BigInt::from(i * i - 7), BigInt::from(i + 2))).collect();
    let (h, e) = brute_force_h_e(&xs, 6);
    for k in 1..=6 {
        let column = Partition::new(vec![1; k]).unwrap();
        let mut value = BigRational::zero();
        for (key, c) in schur_h(&column).terms() {
            let c = c.as_integer().expect("integer coefficient");
            let prod = key.parts().iter().fold(BigRational::one(), |acc, &i| acc * &h[i]);
            value += prod * BigRational::from_integer(c);
        }
        assert_eq!(value, e[k], "k = {k}");
    }
}
