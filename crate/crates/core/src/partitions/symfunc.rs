use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Partition, PartitionError};
use crate::scalars::RationalFunction;

/// A polynomial in the complete symmetric functions `h_1, h_2, ...`.
///
/// Keys are h-monomials `h_{k_1} h_{k_2} ...` stored as partitions of their
/// index lists; the empty key is the constant `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunction {
    coeffs: BTreeMap<Partition, RationalFunction>,
}

impl SymFunction {
    pub fn zero() -> Self {
        SymFunction::default()
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn monomial(key: Partition, c: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    /// `h_i`, with `h_0 = 1` and `h_i = 0` for `i < 0`.
    pub fn h(i: i64) -> Self {
        match i {
            i if i < 0 => Self::zero(),
            0 => Self::one(),
            i => Self::monomial(Partition::new(vec![i as usize]).expect("single part"), RationalFunction::one()),
        }
    }

    /// The product `h_{k_1} h_{k_2} ...` for a partition of indices.
    pub fn h_monomial(key: &Partition) -> Self {
        Self::monomial(key.clone(), RationalFunction::one())
    }

    pub fn add_term(&mut self, key: Partition, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&key) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, c);
            }
        }
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

    pub fn coeff(&self, key: &Partition) -> RationalFunction {
        self.coeffs.get(key).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RationalFunction)> {
        self.coeffs.iter()
    }

    /// Constant value if the function has no h-monomials of positive degree.
    pub fn as_constant(&self) -> Option<RationalFunction> {
        match self.coeffs.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.coeffs.get(&Partition::empty()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymFunction { coeffs: self.coeffs.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// `Some(n)` when every monomial has index sum `n`; zero counts as homogeneous of any degree.
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.coeffs.keys().all(|k| k.size() == n)
    }
}

fn merge_keys(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    Partition::from_unsorted(parts)
}

impl Add for &SymFunction {
    type Output = SymFunction;
    fn add(self, rhs: &SymFunction) -> SymFunction {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunction {
    type Output = SymFunction;
    fn sub(self, rhs: &SymFunction) -> SymFunction {
        self + &(-rhs)
    }
}

impl Neg for &SymFunction {
    type Output = SymFunction;
    fn neg(self) -> SymFunction {
        SymFunction { coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Mul for &SymFunction {
    type Output = SymFunction;
    fn mul(self, rhs: &SymFunction) -> SymFunction {
        let mut out = SymFunction::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(merge_keys(a, b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for SymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for (k, c) in &self.coeffs {
            let mono = render_monomial(k);
            let coeff = c.to_string();
            let simple = !coeff[1..].contains(['+', '-', '/']);
            pieces.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => coeff,
                (false, true) => mono,
                (false, false) if simple => format!("{coeff}*{mono}"),
                (false, false) => format!("({coeff})*{mono}"),
            });
        }
        write!(f, "{}", pieces.join(" + "))
    }
}

fn render_monomial(key: &Partition) -> String {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &p in key.parts() {
        match groups.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => groups.push((p, 1)),
        }
    }
    groups
        .iter()
        .map(|&(p, e)| if e == 1 { format!("h{p}") } else { format!("h{p}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Jacobi–Trudi determinant `det(h_{λ_i + j - i})` in the h-basis.
pub fn schur_h(lambda: &Partition) -> SymFunction {
    let n = lambda.len();
    let entry = |i: usize, j: usize| SymFunction::h(lambda.parts()[i] as i64 + j as i64 - i as i64);
    // expansion row by row over the set of columns already used
    let mut layer: BTreeMap<u32, SymFunction> = BTreeMap::new();
    layer.insert(0, SymFunction::one());
    for i in 0..n {
        let mut next: BTreeMap<u32, SymFunction> = BTreeMap::new();
        for (mask, f) in &layer {
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let e = entry(i, j);
                if e.is_zero() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let mut term = f * &e;
                if above % 2 == 1 {
                    term = -&term;
                }
                let slot = next.entry(mask | (1 << j)).or_default();
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << n) - 1)).unwrap_or_default()
}

/// Coefficients in the basis `schur_h(λ)`, `|λ| = n`.
///
/// `schur_h(λ)` is `h_λ` plus monomials that are larger in dominance order,
/// hence lexicographically larger, so peeling off the smallest monomial
/// terminates.
pub fn schur_expand(f: &SymFunction, n: usize) -> Result<BTreeMap<Partition, RationalFunction>, PartitionError> {
    if !f.is_homogeneous_of(n) {
        return Err(PartitionError::NotHomogeneous(n));
    }
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((key, c)) = rest.coeffs.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
        let s = schur_h(&key);
        rest = &rest - &s.scale(&c);
        out.insert(key, c);
    }
    Ok(out)
}
