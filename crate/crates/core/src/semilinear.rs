//! Semilinear isometries `σ = (τ, π_s)` acting as `c ↦ π_s(c) M_τ`, the
//! σ inner product, σ duals and the rank formulas for (relative) σ hulls.

use std::sync::Arc;

use crate::algebra::{same_field, Field, Matrix};
use crate::code::LinearCode;
use crate::error::{Error, Result};

/// Monomial matrix `M = D P_τ`, stored structurally.
///
/// `P_τ` has row `τ(i)` equal to row `i` of the identity, so
/// `(t_1, ..., t_n) P_τ = (t_τ(1), ..., t_τ(n))`. Column `j` of `M` holds its
/// single nonzero entry `diag[τ(j)]` in row `τ(j)`. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    field: Arc<Field>,
    perm: Vec<usize>,
    diag: Vec<u32>,
}

impl MonomialMatrix {
    pub fn new(field: &Arc<Field>, perm: Vec<usize>, diag: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        if diag.len() != n {
            return Err(Error::Incompatible(format!(
                "permutation of {n} points with {} diagonal entries",
                diag.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Incompatible(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        if diag.iter().any(|&d| d == 0 || !field.contains(d)) {
            return Err(Error::Incompatible(
                "diagonal entries must be nonzero field elements".into(),
            ));
        }
        Ok(MonomialMatrix {
            field: Arc::clone(field),
            perm,
            diag,
        })
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Self {
        MonomialMatrix {
            field: Arc::clone(field),
            perm: (0..n).collect(),
            diag: vec![1; n],
        }
    }

    pub fn diagonal(field: &Arc<Field>, diag: Vec<u32>) -> Result<Self> {
        Self::new(field, (0..diag.len()).collect(), diag)
    }

    /// Recovers the structure of a dense monomial matrix.
    pub fn from_dense(m: &Matrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut perm = Vec::with_capacity(n);
        let mut diag = vec![0u32; n];
        for j in 0..n {
            let mut nz = (0..n).filter(|&r| m.get(r, j) != 0);
            let (Some(r), None) = (nz.next(), nz.next()) else {
                return Err(Error::NotMonomial);
            };
            perm.push(r);
            diag[r] = m.get(r, j);
        }
        Self::new(m.field(), perm, diag).map_err(|_| Error::NotMonomial)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    /// `τ(j)` for each `j`, 0-based.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Diagonal of `D`, indexed by row.
    pub fn diag(&self) -> &[u32] {
        &self.diag
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.diag.iter().all(|&d| d == 1)
    }

    pub fn to_dense(&self) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(&self.field, n, n);
        for (j, &r) in self.perm.iter().enumerate() {
            m.set(r, j, self.diag[r]);
        }
        m
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.size()];
        for (j, &r) in self.perm.iter().enumerate() {
            inv[r] = j;
        }
        inv
    }

    /// Row vector times `M`: entry `j` is `v[τ(j)] * diag[τ(j)]`.
    pub fn apply_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.size() {
            return Err(Error::Incompatible(format!(
                "vector of length {} against a {}x{} monomial matrix",
                v.len(),
                self.size(),
                self.size()
            )));
        }
        Ok(self
            .perm
            .iter()
            .map(|&r| self.field.mul(v[r], self.diag[r]))
            .collect())
    }

    /// `G M` for a matrix `G` with `n` columns.
    pub fn right_apply(&self, g: &Matrix) -> Result<Matrix> {
        same_field(g.field(), &self.field)?;
        if g.cols() != self.size() {
            return Err(Error::Incompatible(format!(
                "{} columns against a monomial matrix of size {}",
                g.cols(),
                self.size()
            )));
        }
        let mut data = Vec::with_capacity(g.rows() * g.cols());
        for row in g.row_iter() {
            data.extend(self.apply_vec(row)?);
        }
        Matrix::from_entries(&self.field, g.rows(), g.cols(), data)
    }

    /// `self * other`.
    pub fn compose(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        same_field(&self.field, &other.field)?;
        if self.size() != other.size() {
            return Err(Error::Incompatible(
                "monomial matrices of different sizes".into(),
            ));
        }
        let inv = self.inverse_perm();
        let perm = other.perm.iter().map(|&c| self.perm[c]).collect();
        let diag = (0..self.size())
            .map(|r| self.field.mul(self.diag[r], other.diag[inv[r]]))
            .collect();
        Ok(MonomialMatrix {
            field: Arc::clone(&self.field),
            perm,
            diag,
        })
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let f = &self.field;
        MonomialMatrix {
            field: Arc::clone(f),
            perm: self.inverse_perm(),
            diag: self
                .perm
                .iter()
                .map(|&r| f.inv(self.diag[r]).expect("diagonal is nonzero"))
                .collect(),
        }
    }

    pub fn transpose(&self) -> MonomialMatrix {
        MonomialMatrix {
            field: Arc::clone(&self.field),
            perm: self.inverse_perm(),
            diag: self.perm.iter().map(|&r| self.diag[r]).collect(),
        }
    }

    /// Entrywise Frobenius `π_s(M)`.
    pub fn frobenius(&self, s: u32) -> Result<MonomialMatrix> {
        self.field.check_exponent(s)?;
        Ok(self.frob(s))
    }

    pub(crate) fn frob(&self, s: u32) -> MonomialMatrix {
        MonomialMatrix {
            field: Arc::clone(&self.field),
            perm: self.perm.clone(),
            diag: self.diag.iter().map(|&d| self.field.frob(d, s)).collect(),
        }
    }

    /// Structural Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        same_field(&self.field, &other.field)?;
        let n = other.size();
        let total = self.size() * n;
        let mut perm = vec![0; total];
        let mut diag = vec![0; total];
        for c in 0..self.size() {
            for d in 0..n {
                perm[c * n + d] = self.perm[c] * n + other.perm[d];
            }
        }
        for a in 0..self.size() {
            for b in 0..n {
                diag[a * n + b] = self.field.mul(self.diag[a], other.diag[b]);
            }
        }
        Ok(MonomialMatrix {
            field: Arc::clone(&self.field),
            perm,
            diag,
        })
    }
}

/// `σ = (τ, π_s)` acting on row vectors as `σ(c) = π_s(c) M_τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearIsometry {
    mono: MonomialMatrix,
    s: u32,
}

impl SemilinearIsometry {
    pub fn new(mono: MonomialMatrix, s: u32) -> Result<Self> {
        mono.field().check_exponent(s)?;
        Ok(SemilinearIsometry { mono, s })
    }

    /// `(I, π_e)`: the Euclidean inner product.
    pub fn euclidean(field: &Arc<Field>, n: usize) -> Self {
        SemilinearIsometry {
            mono: MonomialMatrix::identity(field, n),
            s: field.degree(),
        }
    }

    /// `(I, π_{e-ℓ})`, giving the ℓ-Galois dual; `0 <= ℓ < e`.
    pub fn galois(field: &Arc<Field>, n: usize, ell: u32) -> Result<Self> {
        if ell >= field.degree() {
            return Err(Error::InvalidExponent {
                s: ell,
                e: field.degree(),
            });
        }
        Self::new(MonomialMatrix::identity(field, n), field.degree() - ell)
    }

    /// `(I, π_{e/2})` for even `e`.
    pub fn hermitian(field: &Arc<Field>, n: usize) -> Result<Self> {
        let e = field.degree();
        if e % 2 != 0 {
            return Err(Error::InvalidExponent { s: e / 2, e });
        }
        Self::new(MonomialMatrix::identity(field, n), e / 2)
    }

    pub fn monomial(&self) -> &MonomialMatrix {
        &self.mono
    }

    pub fn exponent(&self) -> u32 {
        self.s
    }

    pub fn field(&self) -> &Arc<Field> {
        self.mono.field()
    }

    pub fn length(&self) -> usize {
        self.mono.size()
    }

    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>> {
        let f = self.field();
        let pv: Vec<u32> = v.iter().map(|&x| f.frob(x, self.s)).collect();
        self.mono.apply_vec(&pv)
    }

    /// `σ` applied to every row: `π_s(G) M_τ`.
    pub fn apply_rows(&self, g: &Matrix) -> Result<Matrix> {
        self.mono.right_apply(&g.frob(self.s))
    }

    /// `⟨a, b⟩_σ = Σ a_i σ(b)_i`.
    pub fn inner(&self, a: &[u32], b: &[u32]) -> Result<u32> {
        if a.len() != self.length() {
            return Err(Error::Incompatible(format!(
                "vector of length {} for an isometry of length {}",
                a.len(),
                self.length()
            )));
        }
        let sb = self.apply(b)?;
        Ok(crate::algebra::dot(self.field(), a, &sb))
    }

    /// The image code `σ(C)`.
    pub fn image(&self, code: &LinearCode) -> Result<LinearCode> {
        self.check_code(code)?;
        Ok(LinearCode::from_generator_allow_zero(
            &self.apply_rows(code.generator())?,
        ))
    }

    pub(crate) fn check_code(&self, code: &LinearCode) -> Result<()> {
        same_field(code.field(), self.field())
            .map_err(|_| Error::Incompatible("isometry over a different field".into()))?;
        if code.length() != self.length() {
            return Err(Error::Incompatible(format!(
                "isometry of length {} for a code of length {}",
                self.length(),
                code.length()
            )));
        }
        Ok(())
    }
}

/// σ dual, generated by `π_s(H) (M_τ^{-1})^T`.
pub fn sigma_dual(code: &LinearCode, sigma: &SemilinearIsometry) -> Result<LinearCode> {
    sigma.check_code(code)?;
    let h = code.parity_check().frob(sigma.s);
    let g = sigma.mono.inverse().transpose().right_apply(&h)?;
    Ok(LinearCode::from_generator_allow_zero(&g))
}

fn check_pair(c1: &LinearCode, c2: &LinearCode, sigma: &SemilinearIsometry) -> Result<()> {
    sigma.check_code(c1)?;
    sigma.check_code(c2)
}

/// `rank(π_s(G2) M_τ G1^T)`.
fn gram_rank(g2: &Matrix, g1: &Matrix, sigma: &SemilinearIsometry) -> Result<usize> {
    Ok(sigma.apply_rows(g2)?.mul_transpose(g1)?.rank())
}

/// `rank(H1 M_τ^{-1} π_s(H2)^T)`.
fn parity_rank(h1: &Matrix, h2: &Matrix, sigma: &SemilinearIsometry) -> Result<usize> {
    let left = sigma.mono.inverse().right_apply(h1)?;
    Ok(left.mul_transpose(&h2.frob(sigma.s))?.rank())
}

fn agree(context: &'static str, left: usize, right: usize) -> Result<usize> {
    if left != right {
        return Err(Error::FormulaMismatch {
            context,
            left,
            right,
        });
    }
    Ok(left)
}

/// Both rank evaluations of `dim(C1 ∩ C2^{⊥σ})`: the parity-check form
/// `n - k2 - rank(H1 M^{-1} π_s(H2)^T)` and the generator form
/// `k1 - rank(π_s(G2) M G1^T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankFormulas {
    pub via_parity: usize,
    pub via_generator: usize,
}

pub fn relative_hull_formulas(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
) -> Result<RankFormulas> {
    check_pair(c1, c2, sigma)?;
    let n = c1.length();
    Ok(RankFormulas {
        via_parity: n - c2.dimension() - parity_rank(c1.parity_check(), c2.parity_check(), sigma)?,
        via_generator: c1.dimension() - gram_rank(c2.generator(), c1.generator(), sigma)?,
    })
}

/// Both rank evaluations of `dim((C1^{⊥σ})^{⊥σ} ∩ C2^{⊥σ})`.
pub fn bidual_relative_formulas(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
) -> Result<RankFormulas> {
    check_pair(c1, c2, sigma)?;
    let n = c1.length();
    Ok(RankFormulas {
        via_parity: n - c2.dimension() - parity_rank(c2.parity_check(), c1.parity_check(), sigma)?,
        via_generator: c1.dimension() - gram_rank(c1.generator(), c2.generator(), sigma)?,
    })
}

/// `dim(C1 ∩ C2^{⊥σ})`, with the two rank formulas required to agree.
pub fn relative_hull_dim(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
) -> Result<usize> {
    let f = relative_hull_formulas(c1, c2, sigma)?;
    agree("relative hull", f.via_parity, f.via_generator)
}

pub fn bidual_relative_dim(
    c1: &LinearCode,
    c2: &LinearCode,
    sigma: &SemilinearIsometry,
) -> Result<usize> {
    let f = bidual_relative_formulas(c1, c2, sigma)?;
    agree("bidual relative hull", f.via_parity, f.via_generator)
}

/// `Hull_σ(C) = C ∩ C^{⊥σ}` with an explicit basis.
#[derive(Clone, Debug)]
pub struct SigmaHull {
    pub dim: usize,
    pub basis: Matrix,
}

pub fn sigma_hull_dim(code: &LinearCode, sigma: &SemilinearIsometry) -> Result<usize> {
    sigma.check_code(code)?;
    let n = code.length();
    let k = code.dimension();
    let h = code.parity_check();
    let via_parity = n - k - parity_rank(h, h, sigma)?;
    let via_generator = k - gram_rank(code.generator(), code.generator(), sigma)?;
    agree("hull", via_parity, via_generator)
}

pub fn sigma_hull(code: &LinearCode, sigma: &SemilinearIsometry) -> Result<SigmaHull> {
    let dim = sigma_hull_dim(code, sigma)?;
    let dual = sigma_dual(code, sigma)?;
    let basis = code.generator().row_space_intersection(dual.generator())?;
    agree("hull basis", dim, basis.rows())?;
    Ok(SigmaHull { dim, basis })
}

/// ℓ-Galois dual `{a : Σ a_i b_i^{p^{e-ℓ}} = 0 for all b in C}`, solved
/// directly from the inner product.
pub fn galois_dual(code: &LinearCode, ell: u32) -> Result<LinearCode> {
    let e = code.field().degree();
    if ell >= e {
        return Err(Error::InvalidExponent { s: ell, e });
    }
    let conj = code.generator().frob(e - ell);
    Ok(LinearCode::from_generator_allow_zero(&conj.kernel_basis()))
}

/// Hermitian dual as the left null space of the conjugate transpose `G^†`.
pub fn hermitian_dual(code: &LinearCode) -> Result<LinearCode> {
    let e = code.field().degree();
    if e % 2 != 0 {
        return Err(Error::InvalidExponent { s: e / 2, e });
    }
    let dagger = code.generator().frob(e / 2).transpose();
    // a G^† = 0  <=>  (G^†)^T a^T = 0
    Ok(LinearCode::from_generator_allow_zero(
        &dagger.transpose().kernel_basis(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Arc<Field> {
        Field::prime(p).unwrap()
    }

    #[test]
    fn permutation_row_action() {
        let f = gf(7);
        // τ = (1 2 3) in 1-based terms: τ(1)=2, τ(2)=3, τ(3)=1
        let p = MonomialMatrix::new(&f, vec![1, 2, 0], vec![1, 1, 1]).unwrap();
        let t = [4, 5, 6];
        assert_eq!(p.apply_vec(&t).unwrap(), vec![5, 6, 4]);
        let dense = p.to_dense();
        // row τ(i) of P is row i of the identity
        for i in 0..3 {
            let r = p.perm()[i];
            let expected: Vec<u32> = (0..3).map(|c| u32::from(c == i)).collect();
            assert_eq!(dense.row(r), &expected[..]);
        }
        // t P^T = (t_{τ^{-1}(1)}, ...)
        assert_eq!(p.transpose().apply_vec(&t).unwrap(), vec![6, 4, 5]);
    }

    #[test]
    fn sigma_apply_examples() {
        let f = gf(3);
        let id = SemilinearIsometry::euclidean(&f, 2);
        assert_eq!(id.apply(&[1, 2]).unwrap(), vec![1, 2]);
        assert_eq!(id.apply(&[0, 0]).unwrap(), vec![0, 0]);
        // M = diag(1,2) P_(1 2) = [[0,1],[2,0]]; (1,2) M = (4,1) = (1,1)
        let m = MonomialMatrix::new(&f, vec![1, 0], vec![1, 2]).unwrap();
        assert_eq!(
            m.to_dense(),
            Matrix::from_rows(&f, &[[0, 1], [2, 0]]).unwrap()
        );
        let sigma = SemilinearIsometry::new(m, 1).unwrap();
        assert_eq!(sigma.apply(&[1, 2]).unwrap(), vec![1, 1]);
        assert!(sigma.apply(&[1, 2, 0]).is_err());
    }

    #[test]
    fn inner_product_reductions() {
        let f = Field::new(2, 2).unwrap();
        let euc = SemilinearIsometry::euclidean(&f, 2);
        let herm = SemilinearIsometry::hermitian(&f, 2).unwrap();
        let a = [2, 3];
        let b = [3, 2];
        let plain = f.add(f.mul(2, 3), f.mul(3, 2));
        assert_eq!(euc.inner(&a, &b).unwrap(), plain);
        let conj = f.add(f.mul(2, f.mul(3, 3)), f.mul(3, f.mul(2, 2)));
        assert_eq!(herm.inner(&a, &b).unwrap(), conj);
        assert_eq!(herm.inner(&[0, 0], &b).unwrap(), 0);
    }

    #[test]
    fn dual_examples() {
        let f = gf(3);
        let rep = LinearCode::repetition(&f, 3);
        let euc = SemilinearIsometry::euclidean(&f, 3);
        let d = sigma_dual(&rep, &euc).unwrap();
        assert_eq!(d.dimension(), 2);
        assert!(d.same_code(&rep.euclidean_dual()).unwrap());
        let full = LinearCode::full_space(&f, 3);
        assert_eq!(sigma_dual(&full, &euc).unwrap().dimension(), 0);
    }

    #[test]
    fn hull_examples() {
        let f = gf(3);
        let rep = LinearCode::repetition(&f, 3);
        let euc = SemilinearIsometry::euclidean(&f, 3);
        let hull = sigma_hull(&rep, &euc).unwrap();
        assert_eq!(hull.dim, 1);
        assert_eq!(hull.basis, Matrix::from_rows(&f, &[[1, 1, 1]]).unwrap());
        let full = LinearCode::full_space(&f, 3);
        assert_eq!(sigma_hull(&full, &euc).unwrap().dim, 0);
        assert_eq!(relative_hull_dim(&rep, &rep, &euc).unwrap(), 1);
        assert_eq!(relative_hull_dim(&rep, &full, &euc).unwrap(), 0);
        assert_eq!(bidual_relative_dim(&full, &rep, &euc).unwrap(), 2);
        assert_eq!(
            bidual_relative_dim(&rep, &rep, &euc).unwrap(),
            relative_hull_dim(&rep, &rep, &euc).unwrap()
        );
    }

    #[test]
    fn structural_ops_match_dense() {
        let f = Field::new(5, 1).unwrap();
        let a = MonomialMatrix::new(&f, vec![2, 0, 1], vec![2, 3, 4]).unwrap();
        let b = MonomialMatrix::new(&f, vec![1, 2, 0], vec![1, 4, 2]).unwrap();
        assert_eq!(
            a.compose(&b).unwrap().to_dense(),
            a.to_dense().mul(&b.to_dense()).unwrap()
        );
        assert_eq!(
            a.to_dense().mul(&a.inverse().to_dense()).unwrap(),
            Matrix::identity(&f, 3)
        );
        assert_eq!(a.transpose().to_dense(), a.to_dense().transpose());
        assert_eq!(
            a.kronecker(&b).unwrap().to_dense(),
            a.to_dense().kronecker(&b.to_dense()).unwrap()
        );
        assert_eq!(MonomialMatrix::from_dense(&a.to_dense()).unwrap(), a);
        assert_eq!(
            MonomialMatrix::from_dense(&Matrix::from_rows(&f, &[[1, 1], [0, 1]]).unwrap()),
            Err(Error::NotMonomial)
        );
    }

    #[test]
    fn rejects_bad_monomials() {
        let f = gf(3);
        assert!(MonomialMatrix::new(&f, vec![0, 0], vec![1, 1]).is_err());
        assert!(MonomialMatrix::new(&f, vec![0, 1], vec![1, 0]).is_err());
        assert!(MonomialMatrix::new(&f, vec![0, 1], vec![1]).is_err());
    }
}
