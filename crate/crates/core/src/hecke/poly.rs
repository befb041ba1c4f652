//! Hecke elements with Laurent polynomial coefficients.
//!
//! Every heavy computation runs here: a rational element is split into a
//! polynomial numerator element and one common denominator, the work is done
//! without any gcd, and the result is reduced once per coefficient.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::braids::Permutation;
use crate::scalars::LaurentPoly;

/// Below this many `(term, node)` pairs multiplication stays sequential.
const PARALLEL_WORK: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PolyHecke {
    pub width: usize,
    pub terms: HashMap<Permutation, LaurentPoly>,
}

impl PolyHecke {
    pub fn zero(width: usize) -> Self {
        PolyHecke { width, terms: HashMap::new() }
    }

    pub fn basis(p: Permutation, c: LaurentPoly) -> Self {
        let mut x = Self::zero(p.width());
        x.add_term(p, &c);
        x
    }

    pub fn identity(width: usize) -> Self {
        Self::basis(Permutation::identity(width), LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Permutation, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(e) => {
                *e = &*e + c;
                if e.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &PolyHecke) {
        for (p, c) in &other.terms {
            self.add_term(*p, c);
        }
    }

    pub fn add_scaled(&mut self, other: &PolyHecke, k: &LaurentPoly) {
        if k.is_zero() {
            return;
        }
        for (p, c) in &other.terms {
            self.add_term(*p, &(c * k));
        }
    }

    pub fn scale(&self, k: &LaurentPoly) -> PolyHecke {
        let mut out = PolyHecke::zero(self.width);
        out.add_scaled(self, k);
        out
    }

    /// `self · σ_i`
    pub fn mul_sigma(&self, i: usize) -> PolyHecke {
        let mut out = PolyHecke { width: self.width, terms: HashMap::with_capacity(self.terms.len() * 2) };
        for (p, c) in &self.terms {
            let (q, d) = p.mul_transposition(i);
            out.add_term(q, c);
            if d < 0 {
                out.add_term(*p, &c.mul_z());
            }
        }
        out
    }

    /// `self · σ_i^{-1} = self · σ_i - (s - s^{-1}) self`
    pub fn mul_sigma_inv(&self, i: usize) -> PolyHecke {
        let mut out = PolyHecke { width: self.width, terms: HashMap::with_capacity(self.terms.len() * 2) };
        for (p, c) in &self.terms {
            let (q, d) = p.mul_transposition(i);
            out.add_term(q, c);
            if d > 0 {
                out.add_term(*p, &-c.mul_z());
            }
        }
        out
    }

    /// `σ_i · self`
    pub fn left_mul_sigma(&self, i: usize) -> PolyHecke {
        let mut out = PolyHecke { width: self.width, terms: HashMap::with_capacity(self.terms.len() * 2) };
        for (p, c) in &self.terms {
            let (q, d) = p.left_mul_transposition(i);
            out.add_term(q, c);
            if d < 0 {
                out.add_term(*p, &c.mul_z());
            }
        }
        out
    }

    /// `self · σ_i^{±1}` for a signed braid letter.
    pub fn mul_letter(&self, letter: i32) -> PolyHecke {
        let i = letter.unsigned_abs() as usize;
        if letter > 0 {
            self.mul_sigma(i)
        } else {
            self.mul_sigma_inv(i)
        }
    }

    pub fn tensor(&self, other: &PolyHecke) -> PolyHecke {
        let mut out = PolyHecke::zero(self.width + other.width);
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_term(p.tensor(q), &(c * d));
            }
        }
        out
    }

    pub fn bar(&self) -> PolyHecke {
        PolyHecke {
            width: self.width,
            terms: self.terms.iter().map(|(p, c)| (*p, c.bar())).collect(),
        }
    }

    /// `self · y`.
    pub fn mul(&self, y: &PolyHecke) -> PolyHecke {
        assert_eq!(self.width, y.width, "width mismatch");
        if self.is_zero() || y.is_zero() {
            return PolyHecke::zero(self.width);
        }
        let needed = ancestors(y.terms.keys());
        let work = self.terms.len() * needed.len();
        if work < PARALLEL_WORK || self.terms.len() < 2 {
            let mut acc = PolyHecke::zero(self.width);
            walk(self.clone(), &needed, &mut |tau, cur| {
                if let Some(c) = y.terms.get(&tau) {
                    acc.add_scaled(cur, c);
                }
            });
            return acc;
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_unstable();
        let chunks = (rayon::current_num_threads() * 2).clamp(2, keys.len());
        let size = keys.len().div_ceil(chunks);
        keys.par_chunks(size)
            .map(|chunk| {
                let mut part = PolyHecke::zero(self.width);
                for p in chunk {
                    part.add_term(*p, &self.terms[p]);
                }
                let mut acc = PolyHecke::zero(self.width);
                walk(part, &needed, &mut |tau, cur| {
                    if let Some(c) = y.terms.get(&tau) {
                        acc.add_scaled(cur, c);
                    }
                });
                acc
            })
            .reduce(
                || PolyHecke::zero(self.width),
                |mut a, b| {
                    a.add_assign(&b);
                    a
                },
            )
    }
}

/// Parent of `τ` in the spanning tree of the right weak order: `τ = parent · s_d`
/// where `d` is the largest descent.
fn parent(tau: &Permutation) -> Option<(Permutation, usize)> {
    tau.max_descent().map(|d| (tau.mul_transposition(d).0, d))
}

/// All tree ancestors of the given permutations, including themselves.
pub(crate) fn ancestors<'a, I: Iterator<Item = &'a Permutation>>(targets: I) -> HashSet<Permutation> {
    let mut set = HashSet::new();
    for t in targets {
        let mut cur = *t;
        while set.insert(cur) {
            match parent(&cur) {
                Some((p, _)) => cur = p,
                None => break,
            }
        }
    }
    set
}

/// Depth-first walk over the needed part of the weak-order tree, calling
/// `visit(τ, start · ω_τ)` at every node.
pub(crate) fn walk<F>(start: PolyHecke, needed: &HashSet<Permutation>, visit: &mut F)
where
    F: FnMut(Permutation, &PolyHecke),
{
    let root = Permutation::identity(start.width);
    walk_from(root, &start, needed, &mut |tau, cur| visit(tau, cur), &|cur, i| cur.mul_sigma(i));
}

/// Same walk with a custom step, e.g. `σ_i^{-1}` for negative permutation braids.
pub(crate) fn walk_with<F, S>(start: PolyHecke, needed: &HashSet<Permutation>, visit: &mut F, step: &S)
where
    F: FnMut(Permutation, &PolyHecke),
    S: Fn(&PolyHecke, usize) -> PolyHecke,
{
    let root = Permutation::identity(start.width);
    walk_from(root, &start, needed, visit, step);
}

fn walk_from<F, S>(tau: Permutation, cur: &PolyHecke, needed: &HashSet<Permutation>, visit: &mut F, step: &S)
where
    F: FnMut(Permutation, &PolyHecke),
    S: Fn(&PolyHecke, usize) -> PolyHecke,
{
    visit(tau, cur);
    for i in 1..tau.width() {
        if tau.has_descent(i) {
            continue;
        }
        let (child, _) = tau.mul_transposition(i);
        if child.max_descent() != Some(i) || !needed.contains(&child) {
            continue;
        }
        let next = step(cur, i);
        walk_from(child, &next, needed, visit, step);
    }
}
