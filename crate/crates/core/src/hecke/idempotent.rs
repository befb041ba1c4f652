//! Symmetrizers and the row/column idempotents `E_λ`.

use crate::braids::{BraidWord, Permutation};
use crate::partitions::Partition;
use crate::scalars::{LaurentPoly, RationalFunction};

use super::{check_width, HeckeElement, HeckeError, PolyHecke};

/// `a_n = Σ_π s^{l(π)} ω_π`
pub fn a_n(n: usize) -> HeckeElement {
    HeckeElement::from_terms(
        n,
        Permutation::all(n)
            .into_iter()
            .map(|p| (p, RationalFunction::monomial(0, p.length() as i32))),
    )
}

/// `b_n = Σ_π (-s^{-1})^{l(π)} ω_π`
pub fn b_n(n: usize) -> HeckeElement {
    HeckeElement::from_terms(
        n,
        Permutation::all(n).into_iter().map(|p| {
            let l = p.length() as i32;
            let c = RationalFunction::monomial(0, -l);
            (p, if l % 2 == 0 { c } else { -&c })
        }),
    )
}

/// Where the conjugating braid sits around the column antisymmetrizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugationOrder {
    /// `R · ω_p · C · ω_p^{-1}`
    PositiveFirst,
    /// `R · ω_p^{-1} · C · ω_p`
    InverseFirst,
}

pub const CALIBRATED_ORDER: ConjugationOrder = ConjugationOrder::PositiveFirst;

/// The permutation sending the column-reading index of each cell to its
/// row-reading index.
pub fn row_column_permutation(lambda: &Partition) -> Permutation {
    let conj = lambda.conjugate();
    let n = lambda.size();
    let mut images = vec![0; n];
    for (r, c) in lambda.cells() {
        let row_index: usize = lambda.parts()[..r].iter().sum::<usize>() + c;
        let col_index: usize = conj.parts()[..c].iter().sum::<usize>() + r;
        images[col_index] = row_index + 1;
    }
    Permutation::from_images(&images).expect("cells are a bijection")
}

fn tensor_all<F: Fn(usize) -> HeckeElement>(blocks: &[usize], f: F) -> Result<HeckeElement, HeckeError> {
    let mut out = HeckeElement::identity(0);
    for &b in blocks {
        out = out.tensor(&f(b))?;
    }
    Ok(out)
}

/// Row symmetrizers times conjugated column antisymmetrizers.
pub fn e_lambda(lambda: &Partition) -> Result<HeckeElement, HeckeError> {
    e_lambda_with_order(lambda, CALIBRATED_ORDER)
}

pub fn e_lambda_with_order(lambda: &Partition, order: ConjugationOrder) -> Result<HeckeElement, HeckeError> {
    let n = lambda.size();
    check_width(n)?;
    let rows = tensor_all(lambda.parts(), a_n)?;
    let cols = tensor_all(lambda.conjugate().parts(), b_n)?;
    if lambda.len() <= 1 {
        return Ok(rows);
    }
    if lambda.part(1) == 1 {
        return Ok(cols);
    }
    let p = row_column_permutation(lambda);
    let positive = HeckeElement::basis(p);
    let inverse = HeckeElement::from_braid(&BraidWord::positive_permutation(&p).inverse())?;
    let (left, right) = match order {
        ConjugationOrder::PositiveFirst => (positive, inverse),
        ConjugationOrder::InverseFirst => (inverse, positive),
    };
    rows.mul(&left)?.mul(&cols)?.mul(&right)
}

/// The scalar `α` with `x² = α x`.
pub fn alpha_extract(x: &HeckeElement) -> Result<RationalFunction, HeckeError> {
    if x.is_zero() {
        return Err(HeckeError::ZeroElement);
    }
    check_width(x.width())?;
    let (xp, d) = x.to_poly();
    let sq = xp.mul(&xp);
    // x² = sq / d², x = xp / d; compare sq · xp_q against sq_q · xp over one pivot
    let (pivot, pc) = xp
        .terms
        .iter()
        .min_by_key(|(p, c)| (c.len(), **p))
        .map(|(p, c)| (*p, c.clone()))
        .expect("nonzero");
    if sq.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let sp = sq.terms.get(&pivot).cloned().unwrap_or_else(LaurentPoly::zero);
    if sp.is_zero() || !proportional_to(&sq, &sp, &xp, &pc) {
        return Err(HeckeError::NotProportional);
    }
    Ok(RationalFunction::new(sp, &pc * &d)?)
}

/// `y = (k / c) · x` termwise, checked as `c · y_q = k · x_q`.
fn proportional_to(y: &PolyHecke, k: &LaurentPoly, x: &PolyHecke, c: &LaurentPoly) -> bool {
    use rayon::prelude::*;
    if y.terms.len() != x.terms.len() {
        return false;
    }
    x.terms.par_iter().all(|(p, xq)| match y.terms.get(p) {
        Some(yq) => &(c * yq) == &(k * xq),
        None => false,
    })
}

/// `E_λ = e_λ / α_λ`
pub fn idempotent(lambda: &Partition) -> Result<HeckeElement, HeckeError> {
    let e = e_lambda(lambda)?;
    let alpha = alpha_extract(&e)?;
    let inv = alpha.inv().map_err(|_| HeckeError::NotProportional)?;
    Ok(e.scale(&inv))
}
