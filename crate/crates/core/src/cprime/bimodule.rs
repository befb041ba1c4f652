use std::collections::BTreeMap;
use std::fmt;

use crate::annulus::{gamma, AnnulusElement};
use crate::partitions::SymFunction;
use crate::scalars::RationalFunction;

use super::CPrimeError;

/// The middle piece of a term of `C'` between its above- and below-parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Core {
    /// The identity arc `e`.
    E,
    /// `t_i = h_i e - e h_i`
    T(u32),
    /// `h'_i a`
    HPrimeA(u32),
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Core::E => write!(f, "e"),
            Core::T(i) => write!(f, "t{i}"),
            Core::HPrimeA(i) => write!(f, "h'{i}a"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleTerm {
    pub coeff: RationalFunction,
    pub above: SymFunction,
    pub core: Core,
    pub below: SymFunction,
}

/// A formal sum of `coeff · (above, core, below)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BimoduleForm {
    terms: Vec<BimoduleTerm>,
}

impl BimoduleForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: RationalFunction, above: SymFunction, core: Core, below: SymFunction) -> Self {
        let mut out = Self::zero();
        out.push(BimoduleTerm { coeff, above, core, below });
        out
    }

    /// `e`
    pub fn e() -> Self {
        Self::term(RationalFunction::one(), SymFunction::one(), Core::E, SymFunction::one())
    }

    /// `e h_i`: `h_i` below the arc.
    pub fn eh(i: i64) -> Self {
        Self::term(RationalFunction::one(), SymFunction::one(), Core::E, SymFunction::h(i))
    }

    /// `h_i e`: `h_i` above the arc.
    pub fn he(i: i64) -> Self {
        Self::term(RationalFunction::one(), SymFunction::h(i), Core::E, SymFunction::one())
    }

    /// `t_i`, zero for `i <= 0`.
    pub fn t(i: i64) -> Self {
        if i <= 0 {
            return Self::zero();
        }
        Self::term(RationalFunction::one(), SymFunction::one(), Core::T(i as u32), SymFunction::one())
    }

    /// `h'_i a` as a core.
    pub fn hprime_a(i: u32) -> Self {
        Self::term(RationalFunction::one(), SymFunction::one(), Core::HPrimeA(i), SymFunction::one())
    }

    fn push(&mut self, t: BimoduleTerm) {
        if t.coeff.is_zero() || t.above.is_zero() || t.below.is_zero() {
            return;
        }
        if matches!(t.core, Core::T(0) | Core::HPrimeA(0)) {
            return;
        }
        self.terms.push(t);
    }

    pub fn terms(&self) -> &[BimoduleTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &BimoduleForm) -> BimoduleForm {
        let mut out = self.clone();
        for t in &other.terms {
            out.push(t.clone());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> BimoduleForm {
        let mut out = Self::zero();
        for t in &self.terms {
            out.push(BimoduleTerm { coeff: &t.coeff * c, ..t.clone() });
        }
        out
    }

    /// `(γ₁, E, δ₁)·(γ₂, c, δ₂) = (γ₁γ₂, c, δ₁δ₂)`; two non-identity cores do not multiply.
    pub fn mul(&self, other: &BimoduleForm) -> Result<BimoduleForm, CPrimeError> {
        let mut out = Self::zero();
        for x in &self.terms {
            for y in &other.terms {
                let core = match (x.core, y.core) {
                    (Core::E, c) | (c, Core::E) => c,
                    (a, b) => return Err(CPrimeError::UndefinedProduct(a, b)),
                };
                out.push(BimoduleTerm {
                    coeff: &x.coeff * &y.coeff,
                    above: &x.above * &y.above,
                    core,
                    below: &x.below * &y.below,
                });
            }
        }
        Ok(out)
    }

    /// Close the arc around the annulus.
    pub fn close(&self) -> Result<SymFunction, CPrimeError> {
        let mut out = SymFunction::zero();
        for t in &self.terms {
            let closed = match t.core {
                Core::E => &gamma_graded(&t.above)? * &t.below,
                Core::T(i) => {
                    let c = trivial(&t.above, t.core)?;
                    let k = &(&RationalFunction::monomial(0, 1 - 2 * i as i32) - &RationalFunction::s()) * &RationalFunction::v();
                    (&t.below * &SymFunction::h(i as i64)).scale(&(&c * &k))
                }
                Core::HPrimeA(i) => {
                    let c = trivial(&t.above, t.core)?;
                    let k = RationalFunction::monomial(1, 1 - i as i32);
                    (&t.below * &SymFunction::h(i as i64)).scale(&(&c * &k))
                }
            };
            out = &out + &closed.scale(&t.coeff);
        }
        Ok(out)
    }
}

fn trivial(above: &SymFunction, core: Core) -> Result<RationalFunction, CPrimeError> {
    above.as_constant().ok_or(CPrimeError::UndefinedClosure(core))
}

/// `Γ` applied degree by degree.
fn gamma_graded(f: &SymFunction) -> Result<SymFunction, CPrimeError> {
    let mut parts: BTreeMap<usize, SymFunction> = BTreeMap::new();
    for (k, c) in f.terms() {
        let slot = parts.entry(k.size()).or_default();
        slot.add_term(k.clone(), c.clone());
    }
    let mut out = SymFunction::zero();
    for (n, part) in parts {
        out = &out + gamma(&AnnulusElement::new(part), n)?.sym();
    }
    Ok(out)
}

impl fmt::Display for BimoduleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let pieces: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("({})[{} | {} | {}]", t.coeff, t.above, t.core, t.below))
            .collect();
        write!(f, "{}", pieces.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::delta;

    #[test]
    fn closure_rules() {
        assert_eq!(BimoduleForm::e().close().unwrap(), SymFunction::constant(delta()));
        let t1 = BimoduleForm::term(RationalFunction::one(), SymFunction::one(), Core::T(1), SymFunction::h(2));
        let expected = (&SymFunction::h(1) * &SymFunction::h(2)).scale(&"v*s^-1-v*s".parse().unwrap());
        assert_eq!(t1.close().unwrap(), expected);
        let ha = BimoduleForm::hprime_a(2);
        assert_eq!(ha.close().unwrap(), SymFunction::h(2).scale(&RationalFunction::monomial(1, -1)));
        let bad = BimoduleForm::term(RationalFunction::one(), SymFunction::h(1), Core::T(1), SymFunction::one());
        assert_eq!(bad.close(), Err(CPrimeError::UndefinedClosure(Core::T(1))));
    }

    #[test]
    fn products() {
        let x = BimoduleForm::eh(2).mul(&BimoduleForm::t(1)).unwrap();
        assert_eq!(x.terms().len(), 1);
        assert_eq!(x.terms()[0].core, Core::T(1));
        assert_eq!(x.terms()[0].below, SymFunction::h(2));
        assert!(BimoduleForm::t(1).mul(&BimoduleForm::t(2)).is_err());
        assert!(BimoduleForm::t(0).is_zero());
        assert!(BimoduleForm::eh(-1).is_zero());
    }

    #[test]
    fn closing_above_part_encircles() {
        // (h_1 e)^ = Γ(h_1) = c_□ h_1
        let closed = BimoduleForm::he(1).close().unwrap();
        let c = crate::partitions::c_lambda(&"1".parse().unwrap());
        assert_eq!(closed, SymFunction::h(1).scale(&c));
    }
}
