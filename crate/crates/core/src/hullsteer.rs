//! Finding monomially equivalent codes with a prescribed (relative) σ-hull
//! dimension.
//!
//! Candidates `M'` are visited in a fixed order and converted through
//! [`conjugate_monomial`] into `M'' = π_{e-s}(M_τ M' M_τ^{-1})`, which
//! satisfies `π_s(M'') M_τ = M_τ M'`. The candidate code is `C M''`. Every
//! returned witness has been checked by recomputing the target dimension.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Field;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::semilinear::{relative_hull_dim, sigma_hull_dim, MonomialMatrix, SemilinearIsometry};

pub const DEFAULT_BUDGET: usize = 10_000;
/// Exhaustive mode is used automatically up to this many monomial matrices.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteerConfig {
    pub budget: usize,
    pub seed: u64,
    /// `None` picks exhaustive mode when the monomial group is small enough.
    pub exhaustive: Option<bool>,
}

impl Default for SteerConfig {
    fn default() -> Self {
        SteerConfig {
            budget: DEFAULT_BUDGET,
            seed: 0,
            exhaustive: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SteerOutcome {
    pub code: LinearCode,
    pub witness: MonomialMatrix,
    /// Candidates examined, including the successful one.
    pub trials: usize,
}

/// `M'' = π_{e-s}(M M' M^{-1})`, asserted to satisfy `π_s(M'') M = M M'`.
pub fn conjugate_monomial(
    m: &MonomialMatrix,
    m_prime: &MonomialMatrix,
    s: u32,
) -> Result<MonomialMatrix> {
    if m.size() != m_prime.size() {
        return Err(Error::Incompatible(
            "monomial matrices of different sizes".into(),
        ));
    }
    let field = m.field();
    field.check_exponent(s)?;
    let e = field.degree();
    let inner = m.compose(m_prime)?.compose(&m.inverse())?;
    let out = inner.frob(e - s);
    let lhs = out.frob(s).compose(m)?;
    let rhs = m.compose(m_prime)?;
    if lhs != rhs {
        return Err(Error::PreconditionFailed(
            "conjugated monomial matrix fails its defining identity".into(),
        ));
    }
    Ok(out)
}

/// Size of the monomial group, `(q-1)^n n!`.
pub fn monomial_group_order(q: u32, n: usize) -> u128 {
    let mut total = 1u128;
    for i in 1..=n as u128 {
        total = total.saturating_mul(i).saturating_mul(q as u128 - 1);
    }
    total
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| p[j] > p[i])
        .expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Every monomial matrix of size `n`: permutations in lexicographic order,
/// and for each one the diagonals in lexicographic order of element index.
pub struct AllMonomials {
    field: Arc<Field>,
    perm: Vec<usize>,
    diag: Vec<u32>,
    done: bool,
}

impl AllMonomials {
    pub fn new(field: &Arc<Field>, n: usize) -> Self {
        AllMonomials {
            field: Arc::clone(field),
            perm: (0..n).collect(),
            diag: vec![1; n],
            done: false,
        }
    }
}

impl Iterator for AllMonomials {
    type Item = MonomialMatrix;

    fn next(&mut self) -> Option<MonomialMatrix> {
        if self.done {
            return None;
        }
        let out = MonomialMatrix::new(&self.field, self.perm.clone(), self.diag.clone())
            .expect("valid by construction");
        let q = self.field.order();
        let mut j = self.diag.len();
        loop {
            if j == 0 {
                for d in &mut self.diag {
                    *d = 1;
                }
                if !next_permutation(&mut self.perm) {
                    self.done = true;
                }
                break;
            }
            j -= 1;
            if self.diag[j] + 1 < q {
                self.diag[j] += 1;
                break;
            }
            self.diag[j] = 1;
        }
        Some(out)
    }
}

/// The deterministic search order: identity, single-position diagonal
/// perturbations, then seeded random monomial matrices. In exhaustive mode
/// the identity is followed by the whole group.
fn candidates(
    field: &Arc<Field>,
    n: usize,
    cfg: &SteerConfig,
) -> Box<dyn Iterator<Item = MonomialMatrix>> {
    let q = field.order();
    let exhaustive = cfg
        .exhaustive
        .unwrap_or_else(|| monomial_group_order(q, n) <= EXHAUSTIVE_LIMIT);
    let identity = std::iter::once(MonomialMatrix::identity(field, n));
    if exhaustive {
        return Box::new(identity.chain(AllMonomials::new(field, n).skip(1)));
    }
    let f = Arc::clone(field);
    let perturbations = (0..n).flat_map(move |i| {
        let f = Arc::clone(&f);
        (2..q).map(move |a| {
            let mut diag = vec![1; n];
            diag[i] = a;
            MonomialMatrix::diagonal(&f, diag).expect("nonzero diagonal")
        })
    });
    let f = Arc::clone(field);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random = std::iter::repeat_with(move || random_monomial(&f, n, &mut rng));
    Box::new(identity.chain(perturbations).chain(random).take(cfg.budget))
}

pub fn random_monomial<R: Rng + ?Sized>(
    field: &Arc<Field>,
    n: usize,
    rng: &mut R,
) -> MonomialMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let diag = (0..n).map(|_| rng.gen_range(1..field.order())).collect();
    MonomialMatrix::new(field, perm, diag).expect("valid by construction")
}

fn require_large_field(field: &Field) -> Result<()> {
    if field.order() <= 2 {
        return Err(Error::FieldTooSmall { q: field.order() });
    }
    Ok(())
}

fn search<F>(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    cfg: &SteerConfig,
    mut hit: F,
) -> Result<SteerOutcome>
where
    F: FnMut(&LinearCode) -> Result<bool>,
{
    let field = code.field();
    let mut trials = 0;
    for m_prime in candidates(field, code.length(), cfg) {
        trials += 1;
        let witness = conjugate_monomial(sigma.monomial(), &m_prime, sigma.exponent())?;
        let candidate = code.apply_monomial(&witness)?;
        if hit(&candidate)? {
            return Ok(SteerOutcome {
                code: candidate,
                witness,
                trials,
            });
        }
    }
    Err(Error::SearchExhausted { trials })
}

/// Finds `C_{2,h} = C2 M''` with `dim(C1 ∩ C_{2,h}^{⊥σ}) = h`.
pub fn steer_relative_hull(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
    h: usize,
    cfg: &SteerConfig,
) -> Result<SteerOutcome> {
    require_large_field(c1.field())?;
    let top = relative_hull_dim(c1, c2, sigma)?;
    let lo = c1.dimension().saturating_sub(c2.dimension());
    if h < lo || h > top {
        return Err(Error::TargetOutOfRange { h, lo, hi: top });
    }
    search(c2, sigma, cfg, |cand| {
        Ok(relative_hull_dim(c1, cand, sigma)? == h)
    })
}

/// Finds `C_h = C M''` with `dim Hull_σ(C_h) = h`.
pub fn steer_self_hull(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    h: usize,
    cfg: &SteerConfig,
) -> Result<SteerOutcome> {
    require_large_field(code.field())?;
    let top = sigma_hull_dim(code, sigma)?;
    if h > top {
        return Err(Error::TargetOutOfRange { h, lo: 0, hi: top });
    }
    search(code, sigma, cfg, |cand| {
        Ok(sigma_hull_dim(cand, sigma)? == h)
    })
}

/// `{dim(C1 ∩ (C2 M)^{⊥σ}) : M monomial}` over the whole monomial group.
pub fn reachable_relative_dims(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for m in AllMonomials::new(c2.field(), c2.length()) {
        out.insert(relative_hull_dim(c1, &c2.apply_monomial(&m)?, sigma)?);
    }
    Ok(out)
}

/// `{dim Hull_σ(C M) : M monomial}` over the whole monomial group.
pub fn reachable_hull_dims(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for m in AllMonomials::new(code.field(), code.length()) {
        out.insert(sigma_hull_dim(&code.apply_monomial(&m)?, sigma)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;

    #[test]
    fn conjugation_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let id = MonomialMatrix::identity(&f4, 2);
        let m = MonomialMatrix::diagonal(&f4, vec![2, 1]).unwrap();
        assert_eq!(conjugate_monomial(&m, &id, 1).unwrap(), id);

        let mp = MonomialMatrix::diagonal(&f4, vec![1, 2]).unwrap();
        let out = conjugate_monomial(&m, &mp, 1).unwrap();
        let lhs = out
            .frobenius(1)
            .unwrap()
            .to_dense()
            .mul(&m.to_dense())
            .unwrap();
        let rhs = m.to_dense().mul(&mp.to_dense()).unwrap();
        assert_eq!(lhs, rhs);

        let f5 = Field::prime(5).unwrap();
        let a = MonomialMatrix::new(&f5, vec![1, 2, 0], vec![2, 3, 4]).unwrap();
        let b = MonomialMatrix::new(&f5, vec![0, 2, 1], vec![1, 4, 2]).unwrap();
        let plain = a.compose(&b).unwrap().compose(&a.inverse()).unwrap();
        assert_eq!(conjugate_monomial(&a, &b, 1).unwrap(), plain);
    }

    #[test]
    fn all_monomials_counts() {
        let f = Field::prime(3).unwrap();
        let all: Vec<_> = AllMonomials::new(&f, 3).collect();
        assert_eq!(all.len() as u128, monomial_group_order(3, 3));
        assert!(all[0].is_identity());
        let distinct: std::collections::HashSet<_> = all
            .iter()
            .map(|m| (m.perm().to_vec(), m.diag().to_vec()))
            .collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn top_of_range_uses_identity() {
        let f = Field::prime(3).unwrap();
        let rep = LinearCode::repetition(&f, 3);
        let euc = SemilinearIsometry::euclidean(&f, 3);
        let out = steer_relative_hull(&rep, &rep, &euc, 1, &SteerConfig::default()).unwrap();
        assert!(out.witness.is_identity());
        assert_eq!(out.trials, 1);
        let out = steer_self_hull(&rep, &euc, 1, &SteerConfig::default()).unwrap();
        assert!(out.witness.is_identity());
    }

    #[test]
    fn relative_hull_can_be_lowered() {
        let f = Field::prime(3).unwrap();
        let rep = LinearCode::repetition(&f, 3);
        let euc = SemilinearIsometry::euclidean(&f, 3);
        let out = steer_relative_hull(&rep, &rep, &euc, 0, &SteerConfig::default()).unwrap();
        assert_eq!(relative_hull_dim(&rep, &out.code, &euc).unwrap(), 0);
        assert_eq!(out.code.min_distance().unwrap(), 3);
        // first diagonal hit in the fixed order is diag(1,1,2)
        assert_eq!(
            *out.code.generator(),
            Matrix::from_rows(&f, &[[1, 1, 2]]).unwrap()
        );
    }

    #[test]
    fn ternary_repetition_hull_is_rigid() {
        // every equivalent code is spanned by (±1, ±1, ±1), whose square sum is 0 mod 3
        let f = Field::prime(3).unwrap();
        let rep = LinearCode::repetition(&f, 3);
        let euc = SemilinearIsometry::euclidean(&f, 3);
        assert_eq!(
            reachable_hull_dims(&rep, &euc).unwrap(),
            BTreeSet::from([1])
        );
        assert!(matches!(
            steer_self_hull(&rep, &euc, 0, &SteerConfig::default()),
            Err(Error::SearchExhausted { trials: 48 })
        ));
    }

    #[test]
    fn hypotheses_enforced() {
        let f2 = Field::prime(2).unwrap();
        let rep = LinearCode::repetition(&f2, 3);
        let euc = SemilinearIsometry::euclidean(&f2, 3);
        assert_eq!(
            steer_self_hull(&rep, &euc, 0, &SteerConfig::default()).unwrap_err(),
            Error::FieldTooSmall { q: 2 }
        );
        let f5 = Field::prime(5).unwrap();
        let rep5 = LinearCode::repetition(&f5, 3);
        let euc5 = SemilinearIsometry::euclidean(&f5, 3);
        assert!(matches!(
            steer_self_hull(&rep5, &euc5, 2, &SteerConfig::default()),
            Err(Error::TargetOutOfRange { .. })
        ));
    }
}
