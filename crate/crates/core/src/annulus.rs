//! The skein of the annulus, modelled on symmetric functions with
//! `Q_λ = schur_h(λ)`, and the expansion of braid closures in that basis.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::hecke::{idempotent, HeckeElement, HeckeError};
use crate::partitions::{c_lambda, d_lambda, lr_coeffs, q_lambda, schur_expand, schur_h, Partition, PartitionError, SymFunction};
use crate::scalars::{z_poly, RationalFunction};
use crate::trace::{central_traces, homfly, homfly_poly, meridian, meridian_poly, ClassReduction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("reference trace of E_{0} vanishes")]
    ZeroReferenceTrace(Partition),
    #[error("meridian eigenvalues of {0} and {1} coincide")]
    SingularSystem(Partition, Partition),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Coefficients of a closure in the basis `Q_λ`.
pub type Expansion = BTreeMap<Partition, RationalFunction>;

/// An element of `C_+`, stored as a symmetric function in the h-basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnnulusElement(SymFunction);

impl AnnulusElement {
    pub fn new(f: SymFunction) -> Self {
        AnnulusElement(f)
    }

    /// `Q_λ`
    pub fn q(lambda: &Partition) -> Self {
        AnnulusElement(schur_h(lambda))
    }

    pub fn from_expansion(expansion: &Expansion) -> Self {
        let mut f = SymFunction::zero();
        for (l, c) in expansion {
            f = &f + &schur_h(l).scale(c);
        }
        AnnulusElement(f)
    }

    pub fn sym(&self) -> &SymFunction {
        &self.0
    }

    pub fn expand(&self, n: usize) -> Result<Expansion, AnnulusError> {
        Ok(schur_expand(&self.0, n)?)
    }
}

/// `Γ` on a homogeneous element: scale each `Q_λ` component by `q_λ`.
pub fn gamma(x: &AnnulusElement, n: usize) -> Result<AnnulusElement, AnnulusError> {
    let scaled: Expansion = x.expand(n)?.into_iter().map(|(l, c)| {
        let q = q_lambda(&l);
        (l, &c * &q)
    }).collect();
    Ok(AnnulusElement::from_expansion(&scaled))
}

/// Precomputed data for expanding closures of elements of `H_n`.
#[derive(Clone, Debug)]
pub struct ClosureExpander {
    width: usize,
    shapes: Vec<Partition>,
    eigenvalues: Vec<RationalFunction>,
    idempotents: Vec<HeckeElement>,
    reference: Vec<RationalFunction>,
    /// `lagrange[ν][k]`: coefficient of `z^k` in `Π_{μ≠ν} (z - c_μ)/(c_ν - c_μ)`
    lagrange: Vec<Vec<RationalFunction>>,
    /// Built on first use by [`ClosureExpander::moments`].
    tables: OnceLock<ClassTables>,
}

#[derive(Clone, Debug)]
struct ClassTables {
    reduction: ClassReduction,
    /// `moments[k][μ] = homfly(Γ^k(1_n) ω_w)` for the representative `w` of class `μ`
    moments: Vec<Vec<RationalFunction>>,
    /// `coefficients[ν][μ]`: contribution of class `μ` to `a_ν`
    coefficients: Vec<Vec<RationalFunction>>,
}

impl ClosureExpander {
    pub fn new(width: usize) -> Result<Self, AnnulusError> {
        let shapes = Partition::all(width);
        let eigenvalues: Vec<RationalFunction> = shapes.iter().map(c_lambda).collect();
        for i in 0..shapes.len() {
            for j in i + 1..shapes.len() {
                if eigenvalues[i] == eigenvalues[j] {
                    return Err(AnnulusError::SingularSystem(shapes[i].clone(), shapes[j].clone()));
                }
            }
        }
        let pairs: Vec<(HeckeElement, RationalFunction)> = shapes
            .par_iter()
            .map(|l| -> Result<_, AnnulusError> {
                let e = idempotent(l)?;
                let h = homfly(&e)?;
                if h.is_zero() {
                    return Err(AnnulusError::ZeroReferenceTrace(l.clone()));
                }
                Ok((e, h))
            })
            .collect::<Result<_, _>>()?;
        let (idempotents, reference) = pairs.into_iter().unzip();
        let lagrange = (0..shapes.len()).map(|nu| lagrange_row(&eigenvalues, nu)).collect();
        Ok(ClosureExpander { width, shapes, eigenvalues, idempotents, reference, lagrange, tables: OnceLock::new() })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// `c_ν` in the order of `shapes`.
    pub fn eigenvalues(&self) -> &[RationalFunction] {
        &self.eigenvalues
    }

    /// `homfly(E_ν)` in the order of `shapes`.
    pub fn reference_traces(&self) -> &[RationalFunction] {
        &self.reference
    }

    /// `E_ν` for a shape of this width.
    pub fn idempotent(&self, shape: &Partition) -> Option<&HeckeElement> {
        self.shapes.iter().position(|s| s == shape).map(|i| &self.idempotents[i])
    }

    fn check(&self, x: &HeckeElement) -> Result<(), AnnulusError> {
        if x.width() != self.width {
            return Err(HeckeError::WidthMismatch { left: self.width, right: x.width() }.into());
        }
        crate::hecke::check_width(self.width + 1)?;
        Ok(())
    }

    fn tables(&self) -> &ClassTables {
        self.tables.get_or_init(|| {
            let reduction = ClassReduction::new(self.width);
            let moments = central_traces(self.width, &reduction.reps, self.shapes.len());
            let coefficients = (0..self.shapes.len())
                .into_par_iter()
                .map(|nu| {
                    (0..reduction.reps.len())
                        .map(|mu| {
                            let mut u = RationalFunction::zero();
                            for (l, row) in self.lagrange[nu].iter().zip(&moments) {
                                u = &u + &(l * &row[mu]);
                            }
                            &u / &self.reference[nu]
                        })
                        .collect()
                })
                .collect();
            ClassTables { reduction, moments, coefficients }
        })
    }

    /// `x` as a combination of class representatives, as far as traces can tell.
    fn class_coordinates(&self, x: &HeckeElement) -> Result<Vec<RationalFunction>, AnnulusError> {
        self.check(x)?;
        let (xp, d) = x.to_poly();
        self.tables()
            .reduction
            .project(&xp)
            .into_iter()
            .map(|y| RationalFunction::new(y, d.clone()).map_err(|e| AnnulusError::Hecke(e.into())))
            .collect()
    }

    /// `m_k = homfly(Γ^k(x))` for `k = 0 .. π(n) - 1`. Since `Γ` commutes with
    /// multiplication, `m_k` is a trace of `x`; the values on one element per
    /// cycle type are tabulated once per expander.
    pub fn moments(&self, x: &HeckeElement) -> Result<Vec<RationalFunction>, AnnulusError> {
        let y = self.class_coordinates(x)?;
        Ok(self
            .tables()
            .moments
            .iter()
            .map(|row| {
                let mut m = RationalFunction::zero();
                for (a, t) in y.iter().zip(row) {
                    if !a.is_zero() {
                        m = &m + &(a * t);
                    }
                }
                m
            })
            .collect())
    }

    /// The same moments computed by applying the meridian `k` times to `x`.
    pub fn moments_direct(&self, x: &HeckeElement) -> Result<Vec<RationalFunction>, AnnulusError> {
        self.check(x)?;
        let (mut cur, d) = x.to_poly();
        let mut chain = Vec::with_capacity(self.shapes.len());
        for k in 0..self.shapes.len() {
            if k > 0 {
                cur = meridian_poly(&cur).0;
            }
            chain.push(cur.clone());
        }
        let z = z_poly();
        let base = &d * &z.pow(self.width as u32);
        chain
            .par_iter()
            .enumerate()
            .map(|(k, xk)| {
                let den = &base * &z.pow(k as u32);
                Ok(RationalFunction::new(homfly_poly(xk), den)?)
            })
            .collect::<Result<Vec<_>, crate::scalars::ScalarError>>()
            .map_err(|e| AnnulusError::Hecke(e.into()))
    }

    fn solve(&self, m: &[RationalFunction]) -> Expansion {
        let mut out = Expansion::new();
        for (nu, shape) in self.shapes.iter().enumerate() {
            let mut u = RationalFunction::zero();
            for (l, mk) in self.lagrange[nu].iter().zip(m) {
                u = &u + &(l * mk);
            }
            let a = &u / &self.reference[nu];
            if !a.is_zero() {
                out.insert(shape.clone(), a);
            }
        }
        out
    }

    /// The coefficients `a_ν` with `Δ(x) = Σ a_ν Q_ν`; zero coefficients are omitted.
    pub fn expand(&self, x: &HeckeElement) -> Result<Expansion, AnnulusError> {
        let y = self.class_coordinates(x)?;
        let mut out = Expansion::new();
        for (shape, row) in self.shapes.iter().zip(&self.tables().coefficients) {
            let mut a = RationalFunction::zero();
            for (c, t) in y.iter().zip(row) {
                if !c.is_zero() {
                    a = &a + &(c * t);
                }
            }
            if !a.is_zero() {
                out.insert(shape.clone(), a);
            }
        }
        Ok(out)
    }

    /// [`ClosureExpander::expand`] using [`ClosureExpander::moments_direct`].
    pub fn expand_direct(&self, x: &HeckeElement) -> Result<Expansion, AnnulusError> {
        Ok(self.solve(&self.moments_direct(x)?))
    }

    /// `homfly(x)` rebuilt from an expansion.
    pub fn reconstruct_homfly(&self, expansion: &Expansion) -> RationalFunction {
        let mut out = RationalFunction::zero();
        for (shape, h) in self.shapes.iter().zip(&self.reference) {
            if let Some(a) = expansion.get(shape) {
                out = &out + &(a * h);
            }
        }
        out
    }

    /// `homfly(Γ(x))` predicted from an expansion of `x`.
    pub fn predict_meridian_homfly(&self, expansion: &Expansion) -> RationalFunction {
        let mut out = RationalFunction::zero();
        for ((shape, h), c) in self.shapes.iter().zip(&self.reference).zip(&self.eigenvalues) {
            if let Some(a) = expansion.get(shape) {
                out = &out + &(&(a * h) * c);
            }
        }
        out
    }
}

fn lagrange_row(eigenvalues: &[RationalFunction], nu: usize) -> Vec<RationalFunction> {
    let mut poly = vec![RationalFunction::one()];
    for (mu, c) in eigenvalues.iter().enumerate() {
        if mu == nu {
            continue;
        }
        let scale = (&eigenvalues[nu] - c).inv().expect("distinct eigenvalues");
        let neg = -c;
        // poly · (z - c_μ) / (c_ν - c_μ)
        let mut next = vec![RationalFunction::zero(); poly.len() + 1];
        for (k, p) in poly.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(p * &scale);
            next[k] = &next[k] + &(&(p * &neg) * &scale);
        }
        poly = next;
    }
    poly
}

/// Expansion of the closure of `x` in the basis `Q_λ`.
pub fn expand_closure(x: &HeckeElement) -> Result<Expansion, AnnulusError> {
    ClosureExpander::new(x.width())?.expand_direct(x)
}

/// Expansion via the spectral projectors `Π_{μ≠ν} (Γ - c_μ)/(c_ν - c_μ)`.
/// Independent of the moment method; practical for small widths.
pub fn expand_closure_by_projectors(x: &HeckeElement) -> Result<Expansion, AnnulusError> {
    let shapes = Partition::all(x.width());
    let eigen: Vec<RationalFunction> = shapes.iter().map(c_lambda).collect();
    let mut out = Expansion::new();
    for (nu, shape) in shapes.iter().enumerate() {
        let mut cur = x.clone();
        for (mu, c) in eigen.iter().enumerate() {
            if mu == nu {
                continue;
            }
            let gap = (&eigen[nu] - c).inv().map_err(|_| AnnulusError::SingularSystem(shape.clone(), shapes[mu].clone()))?;
            cur = (&meridian(&cur)? - &cur.scale(c)).scale(&gap);
        }
        let reference = homfly(&idempotent(shape)?)?;
        if reference.is_zero() {
            return Err(AnnulusError::ZeroReferenceTrace(shape.clone()));
        }
        let a = &homfly(&cur)? / &reference;
        if !a.is_zero() {
            out.insert(shape.clone(), a);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub partition: Partition,
    pub coeff: String,
}

/// Outcome of a verification run, serialisable as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: String,
    pub expansion: Vec<ReportEntry>,
    pub oracle: Vec<ReportEntry>,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn render_plain(&self) -> String {
        let fmt = |entries: &[ReportEntry]| {
            entries.iter().map(|e| format!("{}:{}", e.partition, e.coeff)).collect::<Vec<_>>().join(" ")
        };
        format!(
            "{} {}\n  expansion {}\n  oracle    {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.input,
            fmt(&self.expansion),
            fmt(&self.oracle)
        )
    }
}

pub fn entries(expansion: &Expansion) -> Vec<ReportEntry> {
    expansion
        .iter()
        .map(|(p, c)| ReportEntry { partition: p.clone(), coeff: c.to_string() })
        .collect()
}

fn integer_expansion(map: BTreeMap<Partition, u64>) -> Expansion {
    map.into_iter().map(|(p, c)| (p, RationalFunction::integer(c as i64))).collect()
}

/// Checks `Δ(E_λ ⊗ E_μ)` against the Littlewood–Richardson oracle.
pub fn verify_ringhom(lambda: &Partition, mu: &Partition) -> Result<Report, AnnulusError> {
    let expander = ClosureExpander::new(lambda.size() + mu.size())?;
    verify_ringhom_with(&expander, lambda, mu)
}

pub fn verify_ringhom_with(expander: &ClosureExpander, lambda: &Partition, mu: &Partition) -> Result<Report, AnnulusError> {
    let factor = |l: &Partition| match expander.idempotent(l) {
        Some(e) => Ok(e.clone()),
        None => idempotent(l),
    };
    let x = factor(lambda)?.tensor(&factor(mu)?)?;
    let got = expander.expand(&x)?;
    let oracle = integer_expansion(lr_coeffs(lambda, mu));
    Ok(Report {
        input: format!("E_({lambda}) x E_({mu})"),
        pass: got == oracle,
        expansion: entries(&got),
        oracle: entries(&oracle),
    })
}

/// Checks `Δ(1_n) = Σ d_λ Q_λ`.
pub fn verify_identity_decomposition(n: usize) -> Result<Report, AnnulusError> {
    let expander = ClosureExpander::new(n)?;
    let got = expander.expand(&HeckeElement::identity(n))?;
    let oracle: Expansion = Partition::all(n)
        .into_iter()
        .map(|l| {
            let d = d_lambda(&l);
            (l, RationalFunction::integer(d as i64))
        })
        .collect();
    Ok(Report {
        input: format!("1_{n}"),
        pass: got == oracle,
        expansion: entries(&got),
        oracle: entries(&oracle),
    })
}

/// Expected expansion of the closure of `σ_{i-1} ... σ_1`: hooks
/// `(i-k, 1^k)` with coefficient `(-1)^k s^{i-1-2k}`.
pub fn hook_character_oracle(i: usize) -> Expansion {
    (0..i)
        .map(|k| {
            let mut parts = vec![i - k];
            parts.extend(std::iter::repeat_n(1, k));
            let c = RationalFunction::monomial(0, i as i32 - 1 - 2 * k as i32);
            (Partition::new(parts).expect("hook"), if k % 2 == 0 { c } else { -&c })
        })
        .collect()
}
