//! Linear codes `[n, k, d]_q` given by generator matrices.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{same_field, weight, Field, Matrix};
use crate::error::{Error, Result};
use crate::semilinear::MonomialMatrix;

/// Default cap on `q^k` for minimum-distance enumeration.
pub const DISTANCE_BUDGET: u128 = 1 << 24;

/// A linear code stored by the RREF of its generator matrix.
///
/// The parity-check matrix is derived on first use. Codes of dimension zero
/// can arise as duals of full spaces; [`LinearCode::from_generator`] rejects
/// them as input.
#[derive(Clone)]
pub struct LinearCode {
    generator: Matrix,
    parity: OnceLock<Matrix>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode[{},{}]_{} {:?}",
            self.length(),
            self.dimension(),
            self.field().order(),
            self.generator
        )
    }
}

impl LinearCode {
    /// Row-reduces `g` and keeps its nonzero rows.
    pub fn from_generator(g: &Matrix) -> Result<Self> {
        let code = Self::from_generator_allow_zero(g);
        if code.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        Ok(code)
    }

    pub(crate) fn from_generator_allow_zero(g: &Matrix) -> Self {
        LinearCode {
            generator: g.row_space_basis(),
            parity: OnceLock::new(),
        }
    }

    pub fn full_space(field: &Arc<Field>, n: usize) -> Self {
        Self::from_generator_allow_zero(&Matrix::identity(field, n))
    }

    pub fn zero_space(field: &Arc<Field>, n: usize) -> Self {
        Self::from_generator_allow_zero(&Matrix::zeros(field, 0, n))
    }

    /// The length-`n` repetition code.
    pub fn repetition(field: &Arc<Field>, n: usize) -> Self {
        let ones = Matrix::from_entries(field, 1, n, vec![1; n]).expect("valid entries");
        Self::from_generator_allow_zero(&ones)
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Canonical (RREF) generator matrix, `k x n`.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Parity-check matrix `H`, `(n-k) x n`, with `G H^T = 0`.
    pub fn parity_check(&self) -> &Matrix {
        self.parity.get_or_init(|| {
            if self.dimension() == 0 {
                Matrix::identity(self.field(), self.length())
            } else {
                self.generator.kernel_basis()
            }
        })
    }

    /// The Euclidean dual, generated by `H`.
    pub fn euclidean_dual(&self) -> LinearCode {
        LinearCode::from_generator_allow_zero(self.parity_check())
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let h = self.parity_check();
        v.len() == self.length()
            && h.row_iter()
                .all(|row| crate::algebra::dot(self.field(), row, v) == 0)
    }

    /// Iterates over all `q^k` codewords in lexicographic message order.
    pub fn codewords(&self) -> SpanIter<'_> {
        SpanIter::new(&self.generator)
    }

    pub fn codeword_count(&self) -> u128 {
        (self.field().order() as u128).pow(self.dimension() as u32)
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_budget(crate::budget_override().unwrap_or(DISTANCE_BUDGET))
    }

    /// Minimum nonzero weight by enumerating every codeword.
    pub fn min_distance_with_budget(&self, budget: u128) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        let size = self.codeword_count();
        if size > budget {
            return Err(Error::TooLarge { size, budget });
        }
        let mut best = self.length();
        for cw in self.codewords().skip(1) {
            best = best.min(weight(&cw));
            if best == 1 {
                break;
            }
        }
        Ok(best)
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u128>> {
        let budget = crate::budget_override().unwrap_or(DISTANCE_BUDGET);
        let size = self.codeword_count();
        if size > budget {
            return Err(Error::TooLarge { size, budget });
        }
        let mut dist = vec![0u128; self.length() + 1];
        for cw in self.codewords() {
            dist[weight(&cw)] += 1;
        }
        Ok(dist)
    }

    pub fn is_mds(&self) -> Result<bool> {
        let d = self.min_distance()?;
        Ok(d == self.length() - self.dimension() + 1)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        same_field(self.field(), other.field())
            .map_err(|_| Error::Incompatible("codes over different fields".into()))?;
        if self.length() != other.length() {
            return Err(Error::Incompatible(format!(
                "lengths {} and {} differ",
                self.length(),
                other.length()
            )));
        }
        Ok(())
    }

    /// `dim(C1 ∩ C2)` as `k2 - rank(H1 G2^T)`, cross-checked against
    /// `k1 - rank(G1 H2^T)`.
    pub fn intersect_dim(&self, other: &LinearCode) -> Result<usize> {
        self.check_compatible(other)?;
        let via_h1 =
            other.dimension() - self.parity_check().mul_transpose(other.generator())?.rank();
        let via_h2 =
            self.dimension() - self.generator().mul_transpose(other.parity_check())?.rank();
        if via_h1 != via_h2 {
            return Err(Error::FormulaMismatch {
                context: "intersection dimension",
                left: via_h1,
                right: via_h2,
            });
        }
        Ok(via_h1)
    }

    /// Set equality, decided by `dim(C1 ∩ C2) = k1 = k2`.
    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        if self.length() != other.length() || self.dimension() != other.dimension() {
            return Ok(false);
        }
        Ok(self.intersect_dim(other)? == self.dimension())
    }

    /// `C ⊆ other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        Ok(self.intersect_dim(other)? == self.dimension())
    }

    /// The code `C M = {c M : c in C}`.
    pub fn apply_monomial(&self, m: &MonomialMatrix) -> Result<LinearCode> {
        same_field(self.field(), m.field())
            .map_err(|_| Error::Incompatible("monomial matrix over a different field".into()))?;
        if m.size() != self.length() {
            return Err(Error::Incompatible(format!(
                "monomial matrix of size {} for length {}",
                m.size(),
                self.length()
            )));
        }
        Ok(LinearCode::from_generator_allow_zero(
            &m.right_apply(&self.generator)?,
        ))
    }
}

/// Enumerates the row space of a matrix, last message digit varying fastest.
pub struct SpanIter<'a> {
    basis: &'a Matrix,
    multiples: Vec<Vec<Vec<u32>>>,
    message: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl<'a> SpanIter<'a> {
    pub fn new(basis: &'a Matrix) -> Self {
        let f = basis.field();
        let multiples = basis
            .row_iter()
            .map(|row| {
                f.elements()
                    .map(|a| row.iter().map(|&x| f.mul(a, x)).collect())
                    .collect()
            })
            .collect();
        SpanIter {
            basis,
            multiples,
            message: vec![0; basis.rows()],
            current: vec![0; basis.cols()],
            done: false,
        }
    }

    fn shift(&mut self, j: usize, from: u32, to: u32) {
        let f = self.basis.field();
        let old = &self.multiples[j][from as usize];
        let new = &self.multiples[j][to as usize];
        for ((c, &o), &n) in self.current.iter_mut().zip(old).zip(new) {
            *c = f.add(f.sub(*c, o), n);
        }
    }
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let q = self.basis.field().order();
        let mut j = self.message.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            let m = self.message[j];
            if m + 1 < q {
                self.shift(j, m, m + 1);
                self.message[j] = m + 1;
                break;
            }
            self.shift(j, m, 0);
            self.message[j] = 0;
        }
        Some(out)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.min_distance() {
            Ok(d) => write!(
                f,
                "[{},{},{}]_{}",
                self.length(),
                self.dimension(),
                d,
                self.field().order()
            ),
            Err(_) => write!(
                f,
                "[{},{}]_{}",
                self.length(),
                self.dimension(),
                self.field().order()
            ),
        }
    }
}
