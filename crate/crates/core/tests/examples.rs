mod common;

use std::collections::BTreeMap;

use common::{p, r};
use skein_core::annulus::{expand_closure, verify_identity_decomposition, verify_ringhom};
use skein_core::cprime::{gamma_via_proof, BimoduleForm, CPrimeModel, Core, FreeCPrime};
use skein_core::hecke::{a_n, alpha_extract, b_n, e_lambda, idempotent};
use skein_core::partitions::{c_lambda, d_lambda, lr_coeffs, q_lambda, schur_expand, schur_h};
use skein_core::scalars::z;
use skein_core::trace::{cond_expect, homfly, meridian};
use skein_core::{delta, parse_braid, qint, HeckeElement, Partition, Permutation, RationalFunction, SymFunction};

fn perm(images: &[usize]) -> Permutation {
    Permutation::from_images(images).unwrap()
}

fn braid(text: &str, width: usize) -> HeckeElement {
    HeckeElement::from_braid(&parse_braid(text, Some(width)).unwrap()).unwrap()
}

fn ints(pairs: &[(&str, i64)]) -> BTreeMap<Partition, RationalFunction> {
    pairs.iter().map(|(k, c)| (p(k), RationalFunction::integer(*c))).collect()
}

fn h(i: i64) -> SymFunction {
    SymFunction::h(i)
}

#[test]
fn permutations() {
    assert_eq!(Permutation::identity(4).length(), 0);
    assert_eq!(perm(&[2, 1]).length(), 1);
    assert_eq!(perm(&[3, 2, 1]).length(), 3);
    let id = Permutation::identity(2);
    let s1 = perm(&[2, 1]);
    assert_eq!(id.mul_transposition(1), (s1, 1));
    assert_eq!(s1.mul_transposition(1), (id, -1));
    let s1s2 = Permutation::identity(3).mul_transposition(1).0.mul_transposition(2).0;
    let (s1s2s1, change) = s1s2.mul_transposition(1);
    assert_eq!(change, 1);
    assert_eq!(s1s2s1, Permutation::longest(3));
}

#[test]
fn coset_splits() {
    assert_eq!(Permutation::identity(4).coset_split(), None);
    let s3 = Permutation::identity(4).mul_transposition(3).0;
    assert_eq!(s3.coset_split(), Some((Permutation::identity(3), Permutation::identity(3))));
    let s2s3 = Permutation::identity(4).mul_transposition(2).0.mul_transposition(3).0;
    let s2 = Permutation::identity(3).mul_transposition(2).0;
    assert_eq!(s2s3.coset_split(), Some((s2, Permutation::identity(3))));
}

#[test]
fn braid_words() {
    assert_eq!(parse_braid("1 -2 1", None).unwrap().letters(), &[1, -2, 1]);
    assert_eq!(parse_braid("1 -2 1", None).unwrap().width(), 3);
    assert_eq!(parse_braid("s1 s1", None).unwrap().letters(), &[1, 1]);
    assert_eq!(parse_braid("s1 s2'", None).unwrap().letters(), &[1, -2]);
    assert!(parse_braid("0", None).is_err());
    assert!(parse_braid("x", None).is_err());
    assert!(parse_braid("3", Some(3)).is_err());
}

#[test]
fn hecke_products() {
    let s1 = HeckeElement::sigma(2, 1);
    let expected = &HeckeElement::identity(2) + &s1.scale(&z());
    assert_eq!(s1.mul(&s1).unwrap(), expected);
    let w = HeckeElement::sigma(3, 1).mul(&HeckeElement::sigma(3, 2)).unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!(a_n(2).mul(&s1).unwrap(), a_n(2).scale(&RationalFunction::s()));
    assert!(HeckeElement::sigma(2, 1).mul(&HeckeElement::sigma(3, 1)).is_err());
}

#[test]
fn braids_to_hecke() {
    assert_eq!(braid("1", 2), HeckeElement::sigma(2, 1));
    assert_eq!(braid("-1", 2), &HeckeElement::sigma(2, 1) - &HeckeElement::identity(2).scale(&z()));
    assert_eq!(braid("1 1 -1", 2), HeckeElement::sigma(2, 1));
}

#[test]
fn tensors() {
    let one = HeckeElement::identity(1);
    assert_eq!(one.tensor(&one).unwrap(), HeckeElement::identity(2));
    assert_eq!(HeckeElement::sigma(2, 1).tensor(&one).unwrap(), HeckeElement::sigma(3, 1));
    let aa = a_n(2).tensor(&a_n(2)).unwrap();
    assert_eq!(aa.len(), 4);
    for (q, c) in aa.terms() {
        assert_eq!(c, &RationalFunction::monomial(0, q.length() as i32));
    }
}

#[test]
fn symmetrizers() {
    assert_eq!(a_n(1), HeckeElement::identity(1));
    assert_eq!(a_n(2), &HeckeElement::identity(2) + &HeckeElement::sigma(2, 1).scale(&RationalFunction::s()));
    assert_eq!(alpha_extract(&a_n(2)).unwrap(), r("1 + s^2"));
    assert_eq!(alpha_extract(&a_n(3)).unwrap(), &(&RationalFunction::monomial(0, 3) * &qint(3)) * &qint(2));
    let b2 = &HeckeElement::identity(2) - &HeckeElement::sigma(2, 1).scale(&r("s^-1"));
    assert_eq!(b_n(2), b2);
    assert_eq!(b2.mul(&b2).unwrap(), b2.scale(&r("1 + s^-2")));
    for n in 1..=4usize {
        let beta = (1..=n as i32).fold(RationalFunction::monomial(0, -((n * (n - 1) / 2) as i32)), |acc, i| &acc * &qint(i));
        assert_eq!(alpha_extract(&b_n(n)).unwrap(), beta, "n = {n}");
    }
}

#[test]
fn aiston_morton_elements() {
    assert_eq!(e_lambda(&p("3")).unwrap(), a_n(3));
    assert_eq!(e_lambda(&p("1,1,1")).unwrap(), b_n(3));
    let e = e_lambda(&p("2,1")).unwrap();
    let alpha = alpha_extract(&e).unwrap();
    assert!(!alpha.is_zero());
    assert_eq!(e.mul(&e).unwrap(), e.scale(&alpha));
    assert_eq!(idempotent(&p("1")).unwrap(), HeckeElement::identity(1));
    assert_eq!(idempotent(&p("2")).unwrap(), a_n(2).scale(&r("(1)/(1 + s^2)")));
    let sum = &idempotent(&p("2")).unwrap() + &idempotent(&p("1,1")).unwrap();
    assert_eq!(sum, HeckeElement::identity(2));
    for n in 1..=4 {
        for l in Partition::all(n) {
            assert!(alpha_extract(&idempotent(&l).unwrap()).unwrap().is_one());
        }
    }
}

#[test]
fn mirror_images() {
    let s1 = HeckeElement::sigma(2, 1);
    assert_eq!(s1.mirror().unwrap(), &s1 - &HeckeElement::identity(2).scale(&z()));
    let x = braid("1 -2 1", 3).scale(&r("v + s^2"));
    assert_eq!(x.mirror().unwrap().mirror().unwrap(), x);
}

#[test]
fn capping() {
    assert_eq!(cond_expect(&HeckeElement::identity(2)).unwrap(), HeckeElement::scalar(delta()).tensor(&HeckeElement::identity(1)).unwrap());
    assert_eq!(cond_expect(&braid("1", 2)).unwrap(), HeckeElement::identity(1).scale(&r("v^-1")));
    assert_eq!(cond_expect(&braid("-1", 2)).unwrap(), HeckeElement::identity(1).scale(&RationalFunction::v()));
}

#[test]
fn homfly_values() {
    assert_eq!(homfly(&HeckeElement::identity(1)).unwrap(), delta());
    assert_eq!(homfly(&braid("1", 2)).unwrap(), &r("v^-1") * &delta());
    let d = delta();
    assert_eq!(homfly(&braid("-1 -1", 2)).unwrap(), &d * &(&d - &(&RationalFunction::v() * &z())));
    assert_eq!(homfly(&braid("1 1", 2)).unwrap(), &d * &(&(&z() * &r("v^-1")) + &d));
}

#[test]
fn meridians() {
    let box_ = p("1");
    assert_eq!(meridian(&HeckeElement::identity(1)).unwrap(), HeckeElement::identity(1).scale(&c_lambda(&box_)));
    assert_eq!(c_lambda(&box_), &delta() + &r("v*s^-1 - v*s"));
    let two = p("2");
    let e2 = idempotent(&two).unwrap();
    assert_eq!(c_lambda(&two), &delta() + &r("v*s^-3 - v*s"));
    assert_eq!(meridian(&e2).unwrap(), e2.scale(&c_lambda(&two)));
    let e11 = idempotent(&p("1,1")).unwrap();
    let expected = &e2.scale(&c_lambda(&two)) + &e11.scale(&c_lambda(&p("1,1")));
    assert_eq!(meridian(&HeckeElement::identity(2)).unwrap(), expected);
    let x = HeckeElement::scalar(r("v + s"));
    assert_eq!(meridian(&x).unwrap(), x.scale(&delta()));
}

#[test]
fn partition_operations() {
    assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    assert_eq!(Partition::count(5), 7);
    assert_eq!(Partition::all(5).len(), 7);
    assert!(p("2,1").contains(&p("1,1")));
    assert_eq!(d_lambda(&p("5")), 1);
    assert_eq!(d_lambda(&p("2,1")), 2);
    assert_eq!(Partition::all(4).iter().map(|l| d_lambda(l).pow(2)).sum::<u64>(), 24);
    assert_eq!(p("3,2,1").to_string(), "3,2,1");
    assert!("2,3".parse::<Partition>().is_err());
}

#[test]
fn schur_functions() {
    assert_eq!(schur_h(&p("4")), h(4));
    assert_eq!(schur_h(&p("1,1")), &(&h(1) * &h(1)) - &h(2));
    assert_eq!(schur_h(&p("2,1")), &(&h(2) * &h(1)) - &h(3));
    assert_eq!(schur_h(&Partition::empty()), SymFunction::one());
    assert_eq!(schur_expand(&schur_h(&p("3,1")), 4).unwrap(), ints(&[("3,1", 1)]));
    assert_eq!(schur_expand(&(&h(1) * &h(1)), 2).unwrap(), ints(&[("2", 1), ("1,1", 1)]));
    let cube = &(&h(1) * &h(1)) * &h(1);
    assert_eq!(schur_expand(&cube, 3).unwrap(), ints(&[("3", 1), ("2,1", 2), ("1,1,1", 1)]));
    assert!(schur_expand(&(&h(1) + &h(2)), 2).is_err());
}

#[test]
fn lr_oracle() {
    let to_map = |pairs: &[(&str, u64)]| pairs.iter().map(|(k, c)| (p(k), *c)).collect::<BTreeMap<_, _>>();
    assert_eq!(lr_coeffs(&p("1"), &p("1")), to_map(&[("2", 1), ("1,1", 1)]));
    assert_eq!(lr_coeffs(&p("1,1"), &p("1")), to_map(&[("2,1", 1), ("1,1,1", 1)]));
    assert_eq!(lr_coeffs(&p("2,1"), &p("1")), to_map(&[("3,1", 1), ("2,2", 1), ("2,1,1", 1)]));
    assert!(lr_coeffs(&p("2,1"), &p("2,1")).keys().all(|nu| nu.size() == 6));
}

#[test]
fn eigenvalue_formulas() {
    assert_eq!(c_lambda(&Partition::empty()), delta());
    assert_eq!(c_lambda(&p("1,1")), &delta() + &r("v*s^-1 - v*s^3"));
    assert_eq!(q_lambda(&Partition::empty()), delta());
    assert_eq!(q_lambda(&p("1")), c_lambda(&p("1")));
}

#[test]
fn closure_expansions() {
    for l in [p("1"), p("2"), p("1,1"), p("2,1")] {
        let got = expand_closure(&idempotent(&l).unwrap()).unwrap();
        assert_eq!(got, BTreeMap::from([(l, RationalFunction::one())]));
    }
    assert_eq!(expand_closure(&HeckeElement::identity(2)).unwrap(), ints(&[("2", 1), ("1,1", 1)]));
    assert_eq!(expand_closure(&HeckeElement::identity(3)).unwrap(), ints(&[("3", 1), ("2,1", 2), ("1,1,1", 1)]));
}

#[test]
fn verification_reports() {
    let rep = verify_ringhom(&p("1"), &p("1")).unwrap();
    assert!(rep.pass);
    assert_eq!(rep.expansion.len(), 2);
    assert!(verify_ringhom(&p("1,1"), &p("1")).unwrap().pass);
    assert!(verify_ringhom(&p("2"), &p("1,1")).unwrap().pass);
    let id4 = verify_identity_decomposition(4).unwrap();
    assert!(id4.pass);
    let coeffs: Vec<(String, String)> = id4.expansion.iter().map(|e| (e.partition.to_string(), e.coeff.clone())).collect();
    let expected = [("1,1,1,1", "1"), ("2,1,1", "3"), ("2,2", "2"), ("3,1", "3"), ("4", "1")];
    assert_eq!(coeffs, expected.map(|(a, b)| (a.to_string(), b.to_string())));
    assert!(verify_identity_decomposition(1).unwrap().pass);
}

#[test]
fn cprime_generators() {
    let m = CPrimeModel::default();
    assert_eq!(m.eh(0).unwrap(), FreeCPrime::one());
    assert_eq!(m.t(1).unwrap(), m.a().scale(&r("s^-1 - s")));
    assert!(m.t(0).unwrap().is_zero());
    assert!(m.eh(-1).unwrap().is_zero());
    assert!(m.eh(40).is_err());
    assert_eq!(m.verify_yiaia(0), Ok(true));
    assert_eq!(m.verify_yiaia(1), Ok(true));
    assert_eq!(m.verify_yiyj(-1, 3), Ok(true));
    assert_eq!(m.verify_yiyj(1, 1), Ok(true));
    assert_eq!(m.verify_ehex(&[1, 0, -1]), Ok(true));
    assert_eq!(m.verify_ehex(&[3, 2, 1, 0]), Ok(true));
}

#[test]
fn closures() {
    assert_eq!(BimoduleForm::e().close().unwrap(), SymFunction::constant(delta()));
    let t = BimoduleForm::term(RationalFunction::one(), SymFunction::one(), Core::T(1), h(2));
    assert_eq!(t.close().unwrap(), (&h(1) * &h(2)).scale(&r("v*s^-1 - v*s")));
    assert_eq!(BimoduleForm::hprime_a(2).close().unwrap(), h(2).scale(&r("v*s^-1")));
    let bad = BimoduleForm::term(RationalFunction::one(), h(1), Core::HPrimeA(2), SymFunction::one());
    assert!(bad.close().is_err());
}

#[test]
fn telescope_pipeline() {
    assert_eq!(gamma_via_proof(&Partition::empty()).unwrap(), delta());
    assert_eq!(gamma_via_proof(&p("1")).unwrap(), q_lambda(&p("1")));
    assert_eq!(gamma_via_proof(&p("2,1")).unwrap(), q_lambda(&p("2,1")));
}
