//! Brute-force ground truth.
//!
//! Nothing here uses the rank formulas it is meant to check. σ duals come
//! from solving `⟨a, g⟩_σ = 0` against the generator rows, and intersection
//! dimensions come from counting common codewords.

use crate::algebra::{dot, Matrix};
use crate::code::{LinearCode, SpanIter};
use crate::error::{Error, Result};
use crate::semilinear::SemilinearIsometry;

/// Default cap on the number of enumerated vectors (3^12).
pub const ORACLE_BUDGET: u128 = 531_441;

pub fn default_budget() -> u128 {
    crate::budget_override().unwrap_or(ORACLE_BUDGET)
}

fn span_size(basis: &Matrix) -> u128 {
    (basis.field().order() as u128).pow(basis.rows() as u32)
}

fn check_budget(size: u128, budget: u128) -> Result<()> {
    if size > budget {
        return Err(Error::TooLarge { size, budget });
    }
    Ok(())
}

/// All `q^k` codewords, once each, in lexicographic message order.
pub fn enumerate_codewords(code: &LinearCode, budget: u128) -> Result<SpanIter<'_>> {
    check_budget(code.codeword_count(), budget)?;
    Ok(code.codewords())
}

/// Basis of `C^{⊥σ}` from the linear system `Σ a_i σ(g)_i = 0`, one equation
/// per generator row `g`.
pub fn sigma_dual_by_definition(code: &LinearCode, sigma: &SemilinearIsometry) -> Result<Matrix> {
    let g = code.generator();
    let mut equations = Vec::with_capacity(g.rows());
    for row in g.row_iter() {
        equations.push(sigma.apply(row)?);
    }
    let system = if equations.is_empty() {
        Matrix::zeros(code.field(), 0, code.length())
    } else {
        Matrix::from_rows(code.field(), &equations)?
    };
    Ok(system.kernel_basis())
}

/// Every vector of `F_q^n` that is σ-orthogonal to all of `C`, by testing the
/// whole ambient space.
pub fn sigma_dual_members(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    budget: u128,
) -> Result<Vec<Vec<u32>>> {
    let n = code.length();
    let ambient = Matrix::identity(code.field(), n);
    check_budget(span_size(&ambient), budget)?;
    let codewords: Vec<Vec<u32>> = enumerate_codewords(code, budget)?.collect();
    let mut out = Vec::new();
    for a in SpanIter::new(&ambient) {
        let mut orthogonal = true;
        for b in &codewords {
            if sigma.inner(&a, b)? != 0 {
                orthogonal = false;
                break;
            }
        }
        if orthogonal {
            out.push(a);
        }
    }
    Ok(out)
}

fn exact_log(count: u128, q: u128) -> Result<usize> {
    let mut x = 1u128;
    let mut k = 0;
    while x < count {
        x *= q;
        k += 1;
    }
    if x != count {
        return Err(Error::PreconditionFailed(format!(
            "intersection size {count} is not a power of {q}"
        )));
    }
    Ok(k)
}

/// `dim(span(u) ∩ span(v))` by enumerating the smaller span and counting the
/// vectors that also lie in the other one.
pub fn span_intersection_dim(u: &Matrix, v: &Matrix, budget: u128) -> Result<usize> {
    if u.cols() != v.cols() && u.rows() > 0 && v.rows() > 0 {
        return Err(Error::Incompatible("spans of different lengths".into()));
    }
    let u = u.row_space_basis();
    let v = v.row_space_basis();
    let (small, other) = if u.rows() <= v.rows() { (u, v) } else { (v, u) };
    check_budget(span_size(&small), budget)?;
    let field = small.field().clone();
    let annihilator = other.kernel_basis();
    let count = SpanIter::new(&small)
        .filter(|w| annihilator.row_iter().all(|h| dot(&field, h, w) == 0))
        .count() as u128;
    exact_log(count, field.order() as u128)
}

pub fn span_contains(big: &Matrix, small: &Matrix, budget: u128) -> Result<bool> {
    Ok(span_intersection_dim(big, small, budget)? == small.row_space_basis().rows())
}

/// Equal spans, compared through their annihilators when those are the
/// smaller sets to enumerate.
pub fn same_span(a: &Matrix, b: &Matrix, budget: u128) -> Result<bool> {
    let (ra, rb) = (a.row_space_basis().rows(), b.row_space_basis().rows());
    if ra != rb {
        return Ok(false);
    }
    if 2 * ra > a.cols() {
        let (ka, kb) = (a.kernel_basis(), b.kernel_basis());
        return Ok(span_intersection_dim(&ka, &kb, budget)? == a.cols() - ra);
    }
    Ok(span_intersection_dim(a, b, budget)? == ra)
}

/// `dim Hull_σ(C)` by set intersection.
pub fn oracle_sigma_hull_dim(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    budget: u128,
) -> Result<usize> {
    let dual = sigma_dual_by_definition(code, sigma)?;
    span_intersection_dim(code.generator(), &dual, budget)
}

/// `dim(C1 ∩ C2^{⊥σ})` by set intersection.
pub fn oracle_relative_dim(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
    budget: u128,
) -> Result<usize> {
    let dual = sigma_dual_by_definition(c2, sigma)?;
    span_intersection_dim(c1.generator(), &dual, budget)
}

/// `dim((C1^{⊥σ})^{⊥σ} ∩ C2^{⊥σ})` by set intersection.
pub fn oracle_bidual_relative_dim(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
    budget: u128,
) -> Result<usize> {
    let d1 = LinearCode::from_generator_allow_zero(&sigma_dual_by_definition(c1, sigma)?);
    let dd1 = sigma_dual_by_definition(&d1, sigma)?;
    let d2 = sigma_dual_by_definition(c2, sigma)?;
    span_intersection_dim(&dd1, &d2, budget)
}
