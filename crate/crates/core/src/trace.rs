//! Closing strands: the conditional expectation `H_{n+1} -> H_n`, the Homfly
//! polynomial of a braid closure and the encircling map `Γ_n`.
//!
//! Capping the last strand sends `ω_π` to `δ ω_π` when `π` fixes `n+1`, and
//! `ω_α σ_n ω_β` to `v^{-1} ω_α ω_β` otherwise.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::braids::Permutation;
use crate::hecke::{check_width, HeckeElement, HeckeError, PolyHecke};
use crate::partitions::Partition;
use crate::scalars::{delta, delta_numerator, z_poly, LaurentPoly, RationalFunction};

/// How a permutation not fixing `n+1` is written as `α s_n β`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitStrategy {
    /// `β` is the minimal coset representative (`Permutation::coset_split`).
    #[default]
    Right,
    /// `α` is the minimal coset representative (`Permutation::coset_split_left`).
    Left,
}

/// Conditional expectation with the default split.
pub fn cond_expect(x: &HeckeElement) -> Result<HeckeElement, HeckeError> {
    cond_expect_with(x, SplitStrategy::Right)
}

pub fn cond_expect_with(x: &HeckeElement, strategy: SplitStrategy) -> Result<HeckeElement, HeckeError> {
    if x.width() == 0 {
        return Err(HeckeError::ZeroWidth);
    }
    check_width(x.width())?;
    let (xp, d) = x.to_poly();
    let (out, extra) = cond_step(&xp, strategy);
    Ok(HeckeElement::from_poly(&out, &(&d * &extra)))
}

/// One capping step on a polynomial element: returns `(y, z)` with the
/// conditional expectation equal to `y / z`, `z = s - s^{-1}`.
pub(crate) fn cond_step(x: &PolyHecke, strategy: SplitStrategy) -> (PolyHecke, LaurentPoly) {
    let n = x.width - 1;
    let mut fixed = PolyHecke::zero(n);
    // grouped by the minimal coset representative
    let mut groups: BTreeMap<Permutation, PolyHecke> = BTreeMap::new();
    for (p, c) in &x.terms {
        if p.fixes_last() {
            fixed.add_term(p.restrict(), c);
            continue;
        }
        let (alpha, beta) = match strategy {
            SplitStrategy::Right => p.coset_split(),
            SplitStrategy::Left => p.coset_split_left(),
        }
        .expect("permutation moves the last point");
        let (key, other) = match strategy {
            SplitStrategy::Right => (beta, alpha),
            SplitStrategy::Left => (alpha, beta),
        };
        groups.entry(key).or_insert_with(|| PolyHecke::zero(n)).add_term(other, c);
    }
    let mut crossed = PolyHecke::zero(n);
    for (key, part) in groups {
        let word = key.reduced_word();
        let mut cur = part;
        match strategy {
            SplitStrategy::Right => {
                for &i in &word {
                    cur = cur.mul_sigma(i);
                }
            }
            SplitStrategy::Left => {
                for &i in word.iter().rev() {
                    cur = cur.left_mul_sigma(i);
                }
            }
        }
        crossed.add_assign(&cur);
    }
    // δ A + v^{-1} B = ((v^{-1} - v) A + z v^{-1} B) / z
    let z = z_poly();
    let mut out = fixed.scale(&delta_numerator());
    out.add_scaled(&crossed, &(&z * &LaurentPoly::monomial(-1, 0)));
    (out, z)
}

/// Iterated capping of a polynomial element down to width 0, returning the
/// numerator; the denominator is `z^{width}`.
pub(crate) fn homfly_poly(x: &PolyHecke) -> LaurentPoly {
    let mut cur = x.clone();
    while cur.width > 0 {
        cur = cond_step(&cur, SplitStrategy::Right).0;
    }
    cur.terms
        .get(&Permutation::identity(0))
        .cloned()
        .unwrap_or_else(LaurentPoly::zero)
}

/// Framed Homfly polynomial of the closure of `x` (blackboard framing).
pub fn homfly(x: &HeckeElement) -> Result<RationalFunction, HeckeError> {
    check_width(x.width())?;
    let (xp, d) = x.to_poly();
    let num = homfly_poly(&xp);
    let den = &d * &z_poly().pow(x.width() as u32);
    Ok(RationalFunction::new(num, den)?)
}

/// `σ_n^{-1} ... σ_1^{-1} σ_1^{-1} ... σ_n^{-1}` applied on the right in `H_{n+1}`.
fn wrap(x: &PolyHecke) -> PolyHecke {
    let n = x.width - 1;
    let mut cur = x.clone();
    for i in (1..=n).rev().chain(1..=n) {
        cur = cur.mul_sigma_inv(i);
    }
    cur
}

/// Encircling on polynomial elements: `Γ_n(x) = y / z`.
pub(crate) fn meridian_poly(x: &PolyHecke) -> (PolyHecke, LaurentPoly) {
    if x.width == 0 {
        return (x.scale(&delta_numerator()), z_poly());
    }
    let extended = x.tensor(&PolyHecke::identity(1));
    cond_step(&wrap(&extended), SplitStrategy::Right)
}

/// The encircling map `Γ_n(x) = E((x ⊗ 1) W_n)`.
pub fn meridian(x: &HeckeElement) -> Result<HeckeElement, HeckeError> {
    if x.width() == 0 {
        return Ok(x.scale(&delta()));
    }
    check_width(x.width() + 1)?;
    let (xp, d) = x.to_poly();
    let (y, extra) = meridian_poly(&xp);
    Ok(HeckeElement::from_poly(&y, &(&d * &extra)))
}

/// Cycle type of a permutation as a partition.
pub(crate) fn cycle_type(p: &Permutation) -> Partition {
    let n = p.width();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = p.image(j + 1) - 1;
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    Partition::from_unsorted(lengths)
}

/// Every trace on `H_n` expressed through its values on one minimal-length
/// representative per cycle type.
///
/// A trace is constant on cyclic-shift classes and satisfies
/// `τ(σ_i ω_u σ_i) = τ(ω_u) + z τ(ω_u σ_i)`; classes admitting no such
/// reduction consist of minimal-length elements, on which a trace depends
/// only on the cycle type.
#[derive(Clone, Debug)]
pub(crate) struct ClassReduction {
    /// One per cycle type, in the order of `Partition::all(n)`.
    pub reps: Vec<Permutation>,
    /// `τ(ω_π) = Σ_μ coords[π][μ] τ(ω_{reps[μ]})`
    pub coords: HashMap<Permutation, Vec<LaurentPoly>>,
}

impl ClassReduction {
    pub fn new(n: usize) -> Self {
        let types = Partition::all(n);
        let index: HashMap<Partition, usize> = types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut reps: Vec<Option<Permutation>> = vec![None; types.len()];
        let conjugate = |p: &Permutation, i: usize| p.left_mul_transposition(i).0.mul_transposition(i).0;
        let z = z_poly();
        let mut perms = Permutation::all(n);
        perms.sort_by_key(|p| p.length());
        let mut coords: HashMap<Permutation, Vec<LaurentPoly>> = HashMap::with_capacity(perms.len());
        for p in perms {
            if coords.contains_key(&p) {
                continue;
            }
            let len = p.length();
            let mut class = vec![p];
            let mut seen = HashSet::from([p]);
            let mut reduction = None;
            let mut next = 0;
            while next < class.len() {
                let q = class[next];
                next += 1;
                for i in 1..n {
                    let c = conjugate(&q, i);
                    let l = c.length();
                    if l + 2 == len {
                        reduction.get_or_insert((c, i));
                    } else if l == len && seen.insert(c) {
                        class.push(c);
                    }
                }
            }
            let values: Vec<LaurentPoly> = match reduction {
                Some((u, i)) => {
                    let us = u.mul_transposition(i).0;
                    coords[&u].iter().zip(&coords[&us]).map(|(a, b)| a + &(&z * b)).collect()
                }
                None => {
                    let t = index[&cycle_type(&p)];
                    reps[t].get_or_insert(p);
                    (0..types.len()).map(|j| if j == t { LaurentPoly::one() } else { LaurentPoly::zero() }).collect()
                }
            };
            for q in class {
                coords.insert(q, values.clone());
            }
        }
        let reps = reps.into_iter().map(|r| r.expect("every class has minimal elements")).collect();
        ClassReduction { reps, coords }
    }

    /// `Σ_π x_π coords[π]` for a polynomial element.
    pub fn project(&self, x: &PolyHecke) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(); self.reps.len()];
        for (p, c) in &x.terms {
            for (o, k) in out.iter_mut().zip(&self.coords[p]) {
                if !k.is_zero() {
                    *o = &*o + &(c * k);
                }
            }
        }
        out
    }
}

/// `homfly(Γ^k(1_n) ω_w)` for `k < count` (outer index) and each `w` in `reps`.
pub(crate) fn central_traces(n: usize, reps: &[Permutation], count: usize) -> Vec<Vec<RationalFunction>> {
    let mut chain = Vec::with_capacity(count);
    let mut g = PolyHecke::identity(n);
    for k in 0..count {
        if k > 0 {
            g = meridian_poly(&g).0;
        }
        chain.push(g);
        g = chain[k].clone();
    }
    let z = z_poly();
    chain
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let den = z.pow((n + k) as u32);
            reps.iter()
                .map(|w| {
                    let mut y = g.clone();
                    for i in w.reduced_word() {
                        y = y.mul_sigma(i);
                    }
                    RationalFunction::new(homfly_poly(&y), den.clone()).expect("nonzero denominator")
                })
                .collect()
        })
        .collect()
}
