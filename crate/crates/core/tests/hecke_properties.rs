mod common;

use common::hecke;
use proptest::prelude::*;
use skein_core::hecke::{a_n, b_n};
use skein_core::{HeckeElement, Permutation, RationalFunction};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(x in hecke(4, 4), y in hecke(4, 4), w in hecke(4, 4)) {
        let left = x.mul(&y).unwrap().mul(&w).unwrap();
        let right = x.mul(&y.mul(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn symmetrizer_is_central(x in hecke(4, 6)) {
        let a = a_n(4);
        prop_assert_eq!(a.mul(&x).unwrap(), x.mul(&a).unwrap());
    }

    #[test]
    fn mirror_is_a_multiplicative_involution(x in hecke(3, 4), y in hecke(3, 4)) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.mirror().unwrap(), x.mirror().unwrap().mul(&y.mirror().unwrap()).unwrap());
        prop_assert_eq!(x.mirror().unwrap().mirror().unwrap(), x);
    }

    #[test]
    fn multiplication_is_bilinear(x in hecke(3, 4), y in hecke(3, 4), w in hecke(3, 4)) {
        prop_assert_eq!(x.mul(&(&y + &w)).unwrap(), &x.mul(&y).unwrap() + &x.mul(&w).unwrap());
    }
}

#[test]
fn antisymmetrizer_eigenvalue() {
    for n in 1..=5 {
        let b = b_n(n);
        let expected = b.scale(&-RationalFunction::monomial(0, -1));
        for i in 1..n {
            let sigma = HeckeElement::sigma(n, i);
            assert_eq!(b.mul(&sigma).unwrap(), expected, "b_{n} σ_{i}");
            assert_eq!(sigma.mul(&b).unwrap(), expected, "σ_{i} b_{n}");
        }
    }
}

#[test]
fn reduced_words_raise_length_at_every_step() {
    for n in 1..=5 {
        for p in Permutation::all(n) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            let mut acc = Permutation::identity(n);
            for i in word {
                let (next, change) = acc.mul_transposition(i);
                assert_eq!(change, 1);
                acc = next;
            }
            assert_eq!(acc, p);
        }
    }
}

#[test]
fn coset_split_reassembles() {
    for n in 1..=5 {
        let last = n - 1;
        for p in Permutation::all(n) {
            match p.coset_split() {
                None => assert!(p.fixes_last()),
                Some((alpha, beta)) => {
                    assert!(!p.fixes_last());
                    assert_eq!((alpha.width(), beta.width()), (last, last));
                    let sn = Permutation::identity(n).mul_transposition(last).0;
                    assert_eq!(alpha.extend().compose(&sn).compose(&beta.extend()), p);
                    assert_eq!(alpha.length() + 1 + beta.length(), p.length());
                    assert_eq!(p.coset_split(), Some((alpha, beta)));
                }
            }
        }
    }
}

#[test]
fn inversion_count_matches_brute_force() {
    for p in Permutation::all(5) {
        let im = p.images();
        let brute = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| im[i] > im[j]).count();
        assert_eq!(p.length(), brute);
    }
}
