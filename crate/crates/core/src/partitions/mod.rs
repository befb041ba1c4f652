//! Young diagrams, standard tableaux and symmetric functions in the h-basis.

mod lr;
mod symfunc;
mod tableau;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalars::{delta, RationalFunction};
pub use lr::{lr_coeff, lr_coeffs};
pub use symfunc::{schur_expand, schur_h, SymFunction};
pub use tableau::{d_lambda, StandardTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("malformed partition {0:?}: expected weakly decreasing positive integers like 3,2,1")]
    Malformed(String),
    #[error("symmetric function is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
}

/// A Young diagram, stored as its weakly decreasing positive row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Zero parts are dropped; the rest must be weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Malformed(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Sorts the parts first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_k` for `k >= 1`, zero beyond the length.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition {
            parts: (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect(),
        }
    }

    /// `μ ⊂ λ` cellwise.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Cells `(row, col)`, 0-based, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }

    /// All partitions of `n`, in decreasing lexicographic order: `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    pub fn count(n: usize) -> usize {
        // p(n) via the recurrence over largest part
        let mut table = vec![0usize; n + 1];
        table[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                table[m] += table[m - k];
            }
        }
        table[n]
    }

    /// Partitions obtained by adding one cell.
    pub fn add_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            if r == 0 || self.part(r) > self.part(r + 1) {
                let mut parts = self.parts.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// `"3,2,1"`; `"0"` or the empty string is the empty diagram.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t = text.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = t.split(',').map(|p| p.trim().parse::<usize>()).collect();
        match parts {
            Ok(parts) if parts.iter().all(|&p| p > 0) => {
                Partition::new(parts).map_err(|_| PartitionError::Malformed(text.to_string()))
            }
            _ => Err(PartitionError::Malformed(text.to_string())),
        }
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Meridian eigenvalue `c_λ = δ + v s^{-1} Σ_k (s^{2(k-λ_k)} - s^{2k})`.
pub fn c_lambda(lambda: &Partition) -> RationalFunction {
    let mut sum = RationalFunction::zero();
    for (k, &p) in (1..).zip(lambda.parts()) {
        sum = &sum + &(&RationalFunction::monomial(0, 2 * (k - p as i32)) - &RationalFunction::monomial(0, 2 * k));
    }
    &delta() + &(&RationalFunction::monomial(1, -1) * &sum)
}

/// `q_λ = δ + β_{11} + ... + β_{nn}` with `β_{ik} = s^{2(k-1)} (s^{1-2(λ_i+k-i)} - s) v`.
pub fn q_lambda(lambda: &Partition) -> RationalFunction {
    let mut q = delta();
    for k in 1..=lambda.len() as i32 {
        q = &q + &beta(lambda, k, k);
    }
    q
}

/// `β_{ik}` for a diagram, 1-based indices.
pub fn beta(lambda: &Partition, i: i32, k: i32) -> RationalFunction {
    let li = lambda.part(i as usize) as i32;
    let inner = &RationalFunction::monomial(0, 1 - 2 * (li + k - i)) - &RationalFunction::s();
    &RationalFunction::monomial(1, 2 * (k - 1)) * &inner
}

/// `ρ_i = s^{2i - 2λ_i - 1} v`
pub fn rho(lambda: &Partition, i: i32) -> RationalFunction {
    RationalFunction::monomial(1, 2 * i - 2 * lambda.part(i as usize) as i32 - 1)
}

/// `γ_k = -s^{2k-1} v`
pub fn gamma_k(k: i32) -> RationalFunction {
    -&RationalFunction::monomial(1, 2 * k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn parsing_and_rendering() {
        assert_eq!(p("3,2,1").parts(), &[3, 2, 1]);
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert!(p("0").is_empty());
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,,1".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
    }

    #[test]
    fn basic_operations() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::count(5), 7);
        assert_eq!(Partition::all(5).len(), 7);
        assert!(p("2,1").contains(&p("1,1")));
        assert!(!p("2").contains(&p("1,1")));
        for n in 0..12 {
            assert_eq!(Partition::all(n).len(), Partition::count(n));
            for l in Partition::all(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.size(), n);
            }
        }
        assert_eq!(Partition::all(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(p("2,1").add_cell(), vec![p("3,1"), p("2,2"), p("2,1,1")]);
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(c_lambda(&Partition::empty()), delta());
        let box_value = &delta() + &(&RationalFunction::v() * &(&RationalFunction::monomial(0, -1) - &RationalFunction::s()));
        assert_eq!(c_lambda(&p("1")), box_value);
        let two_rows = &delta() + &(&RationalFunction::monomial(1, -1) * &"1-s^4".parse().unwrap());
        assert_eq!(c_lambda(&p("1,1")), two_rows);
        assert_eq!(q_lambda(&Partition::empty()), delta());
        assert_eq!(q_lambda(&p("1")), c_lambda(&p("1")));
    }

    #[test]
    fn beta_splits() {
        for n in 0..=6 {
            for l in Partition::all(n) {
                for i in 1..=l.len() as i32 {
                    for k in 1..=l.len() as i32 {
                        assert_eq!(beta(&l, i, k), &rho(&l, i) + &gamma_k(k), "{l} {i} {k}");
                    }
                }
            }
        }
    }
}
