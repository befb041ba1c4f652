use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::RationalFunction;

/// Monomial as sorted `(variable, exponent)` pairs with positive exponents.
pub type Monomial<V> = Vec<(V, u32)>;

/// Polynomial in commuting indeterminates `V` over `Q(v, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<V: Ord + Clone> {
    terms: BTreeMap<Monomial<V>, RationalFunction>,
}

impl<V: Ord + Clone> Default for MPoly<V> {
    fn default() -> Self {
        MPoly { terms: BTreeMap::new() }
    }
}

impl<V: Ord + Clone> MPoly<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_term(Vec::new(), c);
        out
    }

    pub fn var(v: V) -> Self {
        let mut out = Self::zero();
        out.add_term(vec![(v, 1)], RationalFunction::one());
        out
    }

    pub fn add_term(&mut self, mono: Monomial<V>, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

fn merge<V: Ord + Clone>(a: &Monomial<V>, b: &Monomial<V>) -> Monomial<V> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0.clone(), a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl<V: Ord + Clone> Add for &MPoly<V> {
    type Output = MPoly<V>;
    fn add(self, rhs: &MPoly<V>) -> MPoly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<V: Ord + Clone> Sub for &MPoly<V> {
    type Output = MPoly<V>;
    fn sub(self, rhs: &MPoly<V>) -> MPoly<V> {
        self + &(-rhs)
    }
}

impl<V: Ord + Clone> Neg for &MPoly<V> {
    type Output = MPoly<V>;
    fn neg(self) -> MPoly<V> {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl<V: Ord + Clone> Mul for &MPoly<V> {
    type Output = MPoly<V>;
    fn mul(self, rhs: &MPoly<V>) -> MPoly<V> {
        let mut out = MPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(merge(a, b), x * y);
            }
        }
        out
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for MPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for (m, c) in &self.terms {
            let mono: Vec<String> = m
                .iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
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

/// Determinant by expansion over the set of used columns, row by row.
pub fn determinant<V: Ord + Clone>(m: &[Vec<MPoly<V>>]) -> MPoly<V> {
    let n = m.len();
    let mut layer: BTreeMap<u32, MPoly<V>> = BTreeMap::from([(0, MPoly::one())]);
    for row in m {
        let mut next: BTreeMap<u32, MPoly<V>> = BTreeMap::new();
        for (mask, acc) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let mut term = acc * entry;
                if (mask >> (j + 1)).count_ones() % 2 == 1 {
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

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<u8>;

    #[test]
    fn arithmetic() {
        let x = P::var(0);
        let y = P::var(1);
        let sum = &x + &y;
        let sq = &sum * &sum;
        let expected = &(&(&x * &x) + &(&x * &y).scale(&RationalFunction::integer(2))) + &(&y * &y);
        assert_eq!(sq, expected);
        assert!((&sum - &sum).is_zero());
        assert_eq!(sum.pow(3).len(), 4);
        assert_eq!(sq.to_string(), "2*0*1 + 0^2 + 1^2");
    }

    #[test]
    fn small_determinants() {
        let v = |i: u8| P::var(i);
        let m = vec![vec![v(0), v(1)], vec![v(2), v(3)]];
        assert_eq!(determinant(&m), &(&v(0) * &v(3)) - &(&v(1) * &v(2)));
        let id: Vec<Vec<P>> = (0..3).map(|i| (0..3).map(|j| if i == j { P::one() } else { P::zero() }).collect()).collect();
        assert_eq!(determinant(&id), P::one());
    }
}
