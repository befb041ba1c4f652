//! The skein `C'` of the annulus with one input and one output point.
//!
//! Identities among `e h_i`, `h_i e`, `t_i` and `h'_i a` are checked in a
//! free commutative model where `h'_i` (`i >= 2`) and `a` are indeterminates.
//! Closing the arc maps the bimodule forms used by the determinant argument
//! back into `C_+`.

mod bimodule;
mod mpoly;

use std::fmt;

use thiserror::Error;

use crate::annulus::AnnulusError;
use crate::braids::Permutation;
use crate::partitions::{beta, gamma_k, rho, schur_h, Partition, SymFunction};
use crate::scalars::{delta, qint, RationalFunction};
pub use bimodule::{BimoduleForm, BimoduleTerm, Core};
pub use mpoly::{determinant, MPoly, Monomial};

/// Default largest index of `h'_i`.
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CPrimeError {
    #[error("index {index} beyond the configured cap {cap}")]
    IndexBeyondCap { index: i64, cap: usize },
    #[error("closure of core {0} with a nontrivial above-part is not defined")]
    UndefinedClosure(Core),
    #[error("cores {0} and {1} cannot be multiplied")]
    UndefinedProduct(Core, Core),
    #[error("determinant identity needs at least two rows, got {0}")]
    TooFewRows(usize),
    #[error("telescope identity fails at column {0}")]
    TelescopeMismatch(usize),
    #[error("closed telescope sum is not a scalar multiple of S_λ")]
    NonDivisible,
    #[error(transparent)]
    Annulus(#[from] AnnulusError),
}

/// Indeterminates of the free model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CVar {
    A,
    HPrime(u32),
    H(u32),
}

impl fmt::Display for CVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CVar::A => write!(f, "a"),
            CVar::HPrime(i) => write!(f, "h'{i}"),
            CVar::H(i) => write!(f, "h{i}"),
        }
    }
}

/// Element of the free commutative model of `C'_+`.
pub type FreeCPrime = MPoly<CVar>;

/// The free model with `h'_0 = h'_1 = 1` and indices capped at `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CPrimeModel {
    cap: usize,
}

impl Default for CPrimeModel {
    fn default() -> Self {
        CPrimeModel { cap: DEFAULT_CAP }
    }
}

impl CPrimeModel {
    pub fn new(cap: usize) -> Self {
        CPrimeModel { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, i: i64) -> Result<(), CPrimeError> {
        if i > self.cap as i64 {
            Err(CPrimeError::IndexBeyondCap { index: i, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn a(&self) -> FreeCPrime {
        FreeCPrime::var(CVar::A)
    }

    /// `h'_i`, zero for negative `i`.
    pub fn hprime(&self, i: i64) -> Result<FreeCPrime, CPrimeError> {
        self.check(i)?;
        Ok(match i {
            i if i < 0 => FreeCPrime::zero(),
            0 | 1 => FreeCPrime::one(),
            i => FreeCPrime::var(CVar::HPrime(i as u32)),
        })
    }

    fn mixed(&self, i: i64, s_power: i32) -> Result<FreeCPrime, CPrimeError> {
        if i < 0 {
            return Ok(FreeCPrime::zero());
        }
        let top = self.hprime(i + 1)?.scale(&qint(i as i32 + 1));
        let coeff = &RationalFunction::monomial(0, s_power) * &qint(i as i32);
        let low = (&self.hprime(i)? * &self.a()).scale(&coeff);
        Ok(&top - &low)
    }

    /// `e h_i = [i+1] h'_{i+1} - s^{-1} [i] h'_i a`
    pub fn eh(&self, i: i64) -> Result<FreeCPrime, CPrimeError> {
        self.mixed(i, -1)
    }

    /// `h_i e = [i+1] h'_{i+1} - s [i] h'_i a`
    pub fn he(&self, i: i64) -> Result<FreeCPrime, CPrimeError> {
        self.mixed(i, 1)
    }

    /// `t_i = h_i e - e h_i`
    pub fn t(&self, i: i64) -> Result<FreeCPrime, CPrimeError> {
        if i <= 0 {
            return Ok(FreeCPrime::zero());
        }
        Ok(&self.he(i)? - &self.eh(i)?)
    }

    /// `t_i = (s^{-i} - s^i) h'_i a`
    pub fn verify_yiaia(&self, i: i64) -> Result<bool, CPrimeError> {
        let k = &RationalFunction::monomial(0, -i as i32) - &RationalFunction::monomial(0, i as i32);
        let rhs = (&self.hprime(i)? * &self.a()).scale(&k);
        Ok(self.t(i)? == rhs)
    }

    /// `det[[t_i, t_{i+1}], [t_j, t_{j+1}]] = (s² - 1) det[[eh_i, t_{i+1}], [eh_j, t_{j+1}]]`
    pub fn verify_yiyj(&self, i: i64, j: i64) -> Result<bool, CPrimeError> {
        let lhs = determinant(&[vec![self.t(i)?, self.t(i + 1)?], vec![self.t(j)?, self.t(j + 1)?]]);
        let rhs = determinant(&[vec![self.eh(i)?, self.t(i + 1)?], vec![self.eh(j)?, self.t(j + 1)?]]);
        let k: RationalFunction = &RationalFunction::monomial(0, 2) - &RationalFunction::one();
        Ok(lhs == rhs.scale(&k))
    }

    /// The `r × r` identity with rows `h_{i_k} e ... h_{i_k+r-2} e, t_{i_k+r-1}`
    /// on the left and `e h` entries on the right, scaled by `s^{2(r-1)}`.
    pub fn verify_ehex(&self, indices: &[i64]) -> Result<bool, CPrimeError> {
        let r = indices.len();
        if r < 2 {
            return Err(CPrimeError::TooFewRows(r));
        }
        let build = |left: bool| -> Result<Vec<Vec<FreeCPrime>>, CPrimeError> {
            indices
                .iter()
                .map(|&i| {
                    let mut row = Vec::with_capacity(r);
                    for j in 0..r as i64 - 1 {
                        row.push(if left { self.he(i + j)? } else { self.eh(i + j)? });
                    }
                    row.push(self.t(i + r as i64 - 1)?);
                    Ok(row)
                })
                .collect()
        };
        let lhs = determinant(&build(true)?);
        let rhs = determinant(&build(false)?).scale(&RationalFunction::monomial(0, 2 * (r as i32 - 1)));
        Ok(lhs == rhs)
    }
}

/// Closing `t_i` written as `(s^{-i} - s^i) h'_i a` agrees with the `t̂_i` rule.
pub fn verify_t_hat_consistency(i: u32) -> Result<bool, CPrimeError> {
    let k = &RationalFunction::monomial(0, -(i as i32)) - &RationalFunction::monomial(0, i as i32);
    let via_ha = BimoduleForm::hprime_a(i).scale(&k).close()?;
    let via_t = BimoduleForm::t(i as i64).close()?;
    Ok(via_ha == via_t)
}

/// Variables for the weighted-determinant identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WVar {
    W(u8, u8),
    Rho(u8),
}

impl fmt::Display for WVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WVar::W(i, j) => write!(f, "w{i}_{j}"),
            WVar::Rho(i) => write!(f, "r{i}"),
        }
    }
}

/// `Σ_k det(W with column k scaled rowwise by ρ) = (ρ_1 + ... + ρ_n) det W`
/// for a fully symbolic `n × n` matrix.
pub fn verify_weighted_determinant(n: usize) -> bool {
    let w = |i: usize, j: usize| MPoly::var(WVar::W(i as u8, j as u8));
    let rho = |i: usize| MPoly::var(WVar::Rho(i as u8));
    let base: Vec<Vec<MPoly<WVar>>> = (0..n).map(|i| (0..n).map(|j| w(i, j)).collect()).collect();
    let mut lhs = MPoly::zero();
    for k in 0..n {
        let mut m = base.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[k] = &rho(i) * &row[k];
        }
        lhs = &lhs + &determinant(&m);
    }
    let total = (0..n).fold(MPoly::zero(), |acc, i| &acc + &rho(i));
    lhs == &total * &determinant(&base)
}

/// `β_{ik} = ρ_i + γ_k` over every cell index pair of every diagram up to `max_cells`.
pub fn verify_beta_split(max_cells: usize) -> bool {
    (0..=max_cells).flat_map(Partition::all).all(|l| {
        let n = l.len() as i32;
        (1..=n).all(|i| (1..=n).all(|k| beta(&l, i, k) == &rho(&l, i) + &gamma_k(k)))
    })
}

/// Row `i`, column `j` index `λ_i + j - i` (1-based).
fn jt_index(lambda: &Partition, i: usize, j: usize) -> i64 {
    lambda.part(i) as i64 + j as i64 - i as i64
}

/// Runs the determinant-telescope argument for `Γ(S_λ)` and returns the
/// eigenvalue it produces.
pub fn gamma_via_proof(lambda: &Partition) -> Result<RationalFunction, CPrimeError> {
    gamma_via_proof_with(&CPrimeModel::default(), lambda)
}

pub fn gamma_via_proof_with(model: &CPrimeModel, lambda: &Partition) -> Result<RationalFunction, CPrimeError> {
    let n = lambda.len();
    let idx = |i: usize, j: usize| jt_index(lambda, i, j);
    let matrix = |f: &dyn Fn(usize, usize) -> Result<FreeCPrime, CPrimeError>| -> Result<Vec<Vec<FreeCPrime>>, CPrimeError> {
        (1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect()
    };

    // telescope: S_λ e - e S_λ as a sum of mixed determinants
    let s_e = determinant(&matrix(&|i, j| model.he(idx(i, j)))?);
    let e_s = determinant(&matrix(&|i, j| model.eh(idx(i, j)))?);
    let mut telescope = FreeCPrime::zero();
    for k in 1..=n {
        let mixed = determinant(&matrix(&|i, j| match j.cmp(&k) {
            std::cmp::Ordering::Less => model.he(idx(i, j)),
            std::cmp::Ordering::Equal => model.t(idx(i, j)),
            std::cmp::Ordering::Greater => model.eh(idx(i, j)),
        })?);
        let all_eh = determinant(&matrix(&|i, j| if j == k { model.t(idx(i, j)) } else { model.eh(idx(i, j)) })?);
        if mixed != all_eh.scale(&RationalFunction::monomial(0, 2 * (k as i32 - 1))) {
            return Err(CPrimeError::TelescopeMismatch(k));
        }
        telescope = &telescope + &mixed;
    }
    if telescope != &s_e - &e_s {
        return Err(CPrimeError::TelescopeMismatch(0));
    }

    // close each all-eh determinant as a bimodule form
    let perms = Permutation::all(n);
    let mut closed_sum = SymFunction::zero();
    for k in 1..=n {
        let mut form = BimoduleForm::zero();
        for p in &perms {
            let mut prod = BimoduleForm::e();
            for j in 1..=n {
                let i = p.image(j);
                let entry = if j == k { BimoduleForm::t(idx(i, j)) } else { BimoduleForm::eh(idx(i, j)) };
                prod = prod.mul(&entry)?;
            }
            let sign = if p.length() % 2 == 0 { RationalFunction::one() } else { -&RationalFunction::one() };
            form = form.add(&prod.scale(&sign));
        }
        let closed = form.close()?;
        closed_sum = &closed_sum + &closed.scale(&RationalFunction::monomial(0, 2 * (k as i32 - 1)));
    }

    let s = schur_h(lambda);
    let ratio = scalar_ratio(&closed_sum, &s).ok_or(CPrimeError::NonDivisible)?;
    Ok(&delta() + &ratio)
}

/// `Some(c)` with `f = c g`, for nonzero `g`.
fn scalar_ratio(f: &SymFunction, g: &SymFunction) -> Option<RationalFunction> {
    let (key, gc) = g.terms().next()?;
    let c = &f.coeff(key) / gc;
    (g.scale(&c) == *f).then_some(c)
}
