//! Matrix-product codes `C(A) = [C_1, ..., C_k] · A` and their σ hulls.
//!
//! A codeword is `[Σ_i a_{i,1} c_i, ..., Σ_i a_{i,t} c_i]`, i.e. `t` blocks of
//! length `n`. The isometry on `F_q^{kn}` is `σ = (M_τ̂ ⊗ M_τ̃, π_s)` and acts
//! blockwise through `σ̃ = (M_τ̃, π_s)` on `F_q^n`.

use std::sync::Arc;

use crate::algebra::{same_field, Field, Matrix};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::semilinear::{relative_hull_dim, sigma_dual, MonomialMatrix, SemilinearIsometry};

#[derive(Clone, Debug)]
pub struct MatrixProductSpec {
    defining: Matrix,
    constituents: Vec<LinearCode>,
}

impl MatrixProductSpec {
    /// `a` is `k x t` with `k <= t` and full row rank; one constituent per row.
    pub fn new(a: Matrix, constituents: Vec<LinearCode>) -> Result<Self> {
        let k = a.rows();
        if k == 0 || constituents.len() != k {
            return Err(Error::Incompatible(format!(
                "{} constituent codes for a defining matrix with {k} rows",
                constituents.len()
            )));
        }
        if k > a.cols() {
            return Err(Error::Incompatible(format!(
                "defining matrix is {k}x{}, need k <= t",
                a.cols()
            )));
        }
        let n = constituents[0].length();
        for c in &constituents {
            same_field(c.field(), a.field())
                .map_err(|_| Error::Incompatible("constituents over different fields".into()))?;
            if c.length() != n {
                return Err(Error::Incompatible(
                    "constituents of different lengths".into(),
                ));
            }
        }
        if a.rank() != k {
            return Err(Error::DegenerateDefiningMatrix);
        }
        Ok(MatrixProductSpec {
            defining: a,
            constituents,
        })
    }

    pub fn defining_matrix(&self) -> &Matrix {
        &self.defining
    }

    pub fn constituents(&self) -> &[LinearCode] {
        &self.constituents
    }

    pub fn field(&self) -> &Arc<Field> {
        self.defining.field()
    }

    /// Number of constituents `k`.
    pub fn blocks(&self) -> usize {
        self.defining.rows()
    }

    /// Constituent length `n`.
    pub fn block_length(&self) -> usize {
        self.constituents[0].length()
    }

    pub fn length(&self) -> usize {
        self.defining.cols() * self.block_length()
    }

    pub fn dimension(&self) -> usize {
        self.constituents.iter().map(LinearCode::dimension).sum()
    }

    pub fn is_square(&self) -> bool {
        self.defining.rows() == self.defining.cols()
    }

    /// Block generator whose `(i, j)` block is `a_{i,j} G_i`; the rows of
    /// block-row `i` are `a_i ⊗ G_i`.
    pub fn generator(&self) -> Matrix {
        let field = self.field();
        let mut g = Matrix::zeros(field, 0, self.length());
        for (i, c) in self.constituents.iter().enumerate() {
            if c.dimension() == 0 {
                continue;
            }
            let row = self.defining.select_rows(&[i]);
            let block = row
                .kronecker(c.generator())
                .expect("fields checked at construction");
            g = g.vstack(&block).expect("widths agree");
        }
        g
    }

    pub fn code(&self) -> LinearCode {
        LinearCode::from_generator_allow_zero(&self.generator())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.defining.rows(),
                cols: self.defining.cols(),
            });
        }
        Ok(())
    }
}

/// `π_s(A) M_τ̂ A^T = D_ϱ P_ϱ`, recorded as `ϱ` and the entries
/// `α_j = π_s(a_{ϱ(j)}) M_τ̂ a_j^T`. All other products `π_s(a_i) M_τ̂ a_j^T`
/// vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoMonomialWitness {
    /// `ϱ(j)` for each `j`, 0-based.
    pub rho: Vec<usize>,
    pub alphas: Vec<u32>,
}

impl RhoMonomialWitness {
    /// `D_ϱ P_ϱ` as a structured monomial matrix.
    pub fn to_monomial(&self, field: &Arc<Field>) -> Result<MonomialMatrix> {
        let mut diag = vec![0; self.rho.len()];
        for (j, &r) in self.rho.iter().enumerate() {
            diag[r] = self.alphas[j];
        }
        MonomialMatrix::new(field, self.rho.clone(), diag)
    }

    pub fn reconstruct(&self, field: &Arc<Field>) -> Result<Matrix> {
        Ok(self.to_monomial(field)?.to_dense())
    }
}

pub fn rho_monomial_check(
    a: &Matrix,
    tau_hat: &MonomialMatrix,
    s: u32,
) -> Result<RhoMonomialWitness> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if tau_hat.size() != a.rows() {
        return Err(Error::Incompatible(format!(
            "monomial matrix of size {} for a {}x{} defining matrix",
            tau_hat.size(),
            a.rows(),
            a.cols()
        )));
    }
    a.field().check_exponent(s)?;
    let b = tau_hat.right_apply(&a.frob(s))?.mul_transpose(a)?;
    let mono = MonomialMatrix::from_dense(&b)?;
    let rho = mono.perm().to_vec();
    let alphas = rho.iter().enumerate().map(|(j, &r)| b.get(r, j)).collect();
    Ok(RhoMonomialWitness { rho, alphas })
}

/// Isometry data for a matrix-product code: `M_τ = M_τ̂ ⊗ M_τ̃` with a shared
/// Frobenius exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpSigma {
    tau_hat: MonomialMatrix,
    tau_tilde: MonomialMatrix,
    s: u32,
}

impl MpSigma {
    pub fn new(tau_hat: MonomialMatrix, tau_tilde: MonomialMatrix, s: u32) -> Result<Self> {
        same_field(tau_hat.field(), tau_tilde.field())?;
        tau_hat.field().check_exponent(s)?;
        Ok(MpSigma {
            tau_hat,
            tau_tilde,
            s,
        })
    }

    pub fn euclidean(field: &Arc<Field>, k: usize, n: usize) -> Self {
        MpSigma {
            tau_hat: MonomialMatrix::identity(field, k),
            tau_tilde: MonomialMatrix::identity(field, n),
            s: field.degree(),
        }
    }

    pub fn tau_hat(&self) -> &MonomialMatrix {
        &self.tau_hat
    }

    pub fn tau_tilde(&self) -> &MonomialMatrix {
        &self.tau_tilde
    }

    pub fn exponent(&self) -> u32 {
        self.s
    }

    /// σ on `F_q^{kn}`.
    pub fn sigma(&self) -> SemilinearIsometry {
        let m = self
            .tau_hat
            .kronecker(&self.tau_tilde)
            .expect("fields checked at construction");
        SemilinearIsometry::new(m, self.s).expect("exponent checked at construction")
    }

    /// σ̃ on `F_q^n`.
    pub fn sigma_tilde(&self) -> SemilinearIsometry {
        SemilinearIsometry::new(self.tau_tilde.clone(), self.s)
            .expect("exponent checked at construction")
    }

    fn check(&self, spec: &MatrixProductSpec) -> Result<()> {
        same_field(self.tau_hat.field(), spec.field())
            .map_err(|_| Error::Incompatible("isometry over a different field".into()))?;
        if self.tau_hat.size() != spec.blocks() || self.tau_tilde.size() != spec.block_length() {
            return Err(Error::Incompatible(format!(
                "isometry sizes {}x{} for {} blocks of length {}",
                self.tau_hat.size(),
                self.tau_tilde.size(),
                spec.blocks(),
                spec.block_length()
            )));
        }
        Ok(())
    }
}

/// Runs the ϱ-monomial test required by the matrix-product hull formulas.
pub fn mp_witness(spec: &MatrixProductSpec, ms: &MpSigma) -> Result<RhoMonomialWitness> {
    spec.require_square()?;
    ms.check(spec)?;
    match rho_monomial_check(spec.defining_matrix(), &ms.tau_hat, ms.s) {
        Err(Error::NotMonomial) => Err(Error::PreconditionFailed(
            "π_s(A) M_τ̂ A^T is not monomial".into(),
        )),
        other => other,
    }
}

/// `dim(C_i ∩ C_{ϱ(i)}^{⊥σ̃})` for each `i`.
pub fn mp_relative_terms(spec: &MatrixProductSpec, ms: &MpSigma) -> Result<Vec<usize>> {
    let w = mp_witness(spec, ms)?;
    let st = ms.sigma_tilde();
    let cs = spec.constituents();
    cs.iter()
        .enumerate()
        .map(|(i, c)| relative_hull_dim(c, &cs[w.rho[i]], &st))
        .collect()
}

/// `dim Hull_σ(C(A)) = Σ_i dim(C_i ∩ C_{ϱ(i)}^{⊥σ̃})`.
pub fn mp_hull_dim(spec: &MatrixProductSpec, ms: &MpSigma) -> Result<usize> {
    Ok(mp_relative_terms(spec, ms)?.iter().sum())
}

/// `C(A)^{⊥σ} ⊆ C(A)` iff `C_{ϱ(i)}^{⊥σ̃} ⊆ C_i` for every `i`.
pub fn is_sigma_dual_containing(spec: &MatrixProductSpec, ms: &MpSigma) -> Result<bool> {
    let w = mp_witness(spec, ms)?;
    let terms = mp_relative_terms(spec, ms)?;
    let n = spec.block_length();
    let cs = spec.constituents();
    Ok(terms
        .iter()
        .enumerate()
        .all(|(i, &t)| t == n - cs[w.rho[i]].dimension()))
}

/// `C(A) ⊆ C(A)^{⊥σ}` iff `C_i ⊆ C_{ϱ(i)}^{⊥σ̃}` for every `i`.
pub fn is_sigma_self_orthogonal(spec: &MatrixProductSpec, ms: &MpSigma) -> Result<bool> {
    let terms = mp_relative_terms(spec, ms)?;
    Ok(terms
        .iter()
        .zip(spec.constituents())
        .all(|(&t, c)| t == c.dimension()))
}

/// `C(A)^{⊥σ} = [C_{ϱ(1)}^{⊥σ̃}, ..., C_{ϱ(k)}^{⊥σ̃}] · A`.
pub fn mp_sigma_dual(spec: &MatrixProductSpec, ms: &MpSigma) -> Result<MatrixProductSpec> {
    let w = mp_witness(spec, ms)?;
    let st = ms.sigma_tilde();
    let cs = spec.constituents();
    let duals = w
        .rho
        .iter()
        .map(|&r| sigma_dual(&cs[r], &st))
        .collect::<Result<Vec<_>>>()?;
    MatrixProductSpec::new(spec.defining_matrix().clone(), duals)
}

/// `D_i(A)`: minimum distance of the code spanned by the first `i` rows.
pub fn row_span_distances(a: &Matrix) -> Result<Vec<usize>> {
    let k = a.rows();
    if k == 0 || a.rank() != k {
        return Err(Error::DegenerateDefiningMatrix);
    }
    (1..=k)
        .map(|i| {
            let idx: Vec<usize> = (0..i).collect();
            LinearCode::from_generator(&a.select_rows(&idx))?.min_distance()
        })
        .collect()
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Every `i x i` submatrix of the first `i` rows is nonsingular, for all `i`.
pub fn is_non_singular_by_columns(a: &Matrix) -> bool {
    (1..=a.rows()).all(|i| {
        let head = a.select_rows(&(0..i).collect::<Vec<_>>());
        combinations(a.cols(), i)
            .iter()
            .all(|cols| head.select_cols(cols).rank() == i)
    })
}

/// `min_i D_i(A) d_i` over constituents of positive dimension; `None` when
/// every constituent is zero.
pub fn distance_bound(spec: &MatrixProductSpec) -> Result<Option<usize>> {
    let dists = row_span_distances(spec.defining_matrix())?;
    let mut best: Option<usize> = None;
    for (c, di) in spec.constituents().iter().zip(dists) {
        if c.dimension() == 0 {
            continue;
        }
        let v = di * c.min_distance()?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Arc<Field> {
        Field::prime(3).unwrap()
    }

    fn a_gf3(f: &Arc<Field>) -> Matrix {
        Matrix::from_rows(f, &[[1, 1], [1, 2]]).unwrap()
    }

    fn rep_and_dual(f: &Arc<Field>) -> (LinearCode, LinearCode) {
        let rep = LinearCode::repetition(f, 3);
        let dual = rep.euclidean_dual();
        (rep, dual)
    }

    #[test]
    fn generator_examples() {
        let f = gf3();
        let (rep, dual) = rep_and_dual(&f);
        let single = MatrixProductSpec::new(Matrix::identity(&f, 1), vec![dual.clone()]).unwrap();
        assert_eq!(single.generator(), *dual.generator());

        let direct =
            MatrixProductSpec::new(Matrix::identity(&f, 2), vec![rep.clone(), dual.clone()])
                .unwrap();
        let g = direct.generator();
        assert_eq!(
            g,
            Matrix::from_rows(
                &f,
                &[[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 0, 2], [0, 0, 0, 0, 1, 2]]
            )
            .unwrap()
        );

        let spec = MatrixProductSpec::new(a_gf3(&f), vec![rep, dual]).unwrap();
        assert_eq!(
            spec.generator(),
            Matrix::from_rows(
                &f,
                &[[1, 1, 1, 1, 1, 1], [1, 0, 2, 2, 0, 1], [0, 1, 2, 0, 2, 1]]
            )
            .unwrap()
        );
        assert_eq!((spec.length(), spec.dimension()), (6, 3));
        assert_eq!(spec.code().dimension(), 3);
    }

    #[test]
    fn degenerate_defining_matrix() {
        let f = gf3();
        let (rep, _) = rep_and_dual(&f);
        let a = Matrix::from_rows(&f, &[[1, 1], [2, 2]]).unwrap();
        assert_eq!(
            MatrixProductSpec::new(a, vec![rep.clone(), rep]).unwrap_err(),
            Error::DegenerateDefiningMatrix
        );
    }

    #[test]
    fn rho_examples() {
        let f = gf3();
        let w = rho_monomial_check(&a_gf3(&f), &MonomialMatrix::identity(&f, 2), 1).unwrap();
        assert_eq!(w.rho, vec![0, 1]);
        assert_eq!(w.alphas, vec![2, 2]);

        let f2 = Field::prime(2).unwrap();
        let a = Matrix::from_rows(&f2, &[[1, 1], [0, 1]]).unwrap();
        assert_eq!(
            rho_monomial_check(&a, &MonomialMatrix::identity(&f2, 2), 1),
            Err(Error::NotMonomial)
        );

        let f5 = Field::prime(5).unwrap();
        let w = rho_monomial_check(
            &Matrix::identity(&f5, 3),
            &MonomialMatrix::identity(&f5, 3),
            1,
        )
        .unwrap();
        assert_eq!(w.rho, vec![0, 1, 2]);
        assert_eq!(w.alphas, vec![1, 1, 1]);

        let rect = Matrix::from_rows(&f5, &[[1, 2, 3]]).unwrap();
        assert!(matches!(
            rho_monomial_check(&rect, &MonomialMatrix::identity(&f5, 1), 1),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn witness_reconstructs_product() {
        let f = Field::prime(5).unwrap();
        // A M A^T with a swap: rows orthogonal to themselves, paired crosswise
        let a = Matrix::from_rows(&f, &[[1, 2, 0], [1, 3, 0], [0, 0, 1]]).unwrap();
        let m = MonomialMatrix::identity(&f, 3);
        let w = rho_monomial_check(&a, &m, 1).unwrap();
        let b = m.right_apply(&a).unwrap().mul_transpose(&a).unwrap();
        assert_eq!(w.reconstruct(&f).unwrap(), b);
        assert_eq!(w.rho, vec![1, 0, 2]);
        for (j, &r) in w.rho.iter().enumerate() {
            assert_eq!(b.get(r, j), w.alphas[j]);
        }
    }

    #[test]
    fn hull_examples() {
        let f = gf3();
        let (rep, dual) = rep_and_dual(&f);
        let ms = MpSigma::euclidean(&f, 2, 3);
        let spec = MatrixProductSpec::new(a_gf3(&f), vec![rep.clone(), dual.clone()]).unwrap();
        assert_eq!(mp_hull_dim(&spec, &ms).unwrap(), 2);

        let full = LinearCode::full_space(&f, 3);
        let spec_full = MatrixProductSpec::new(a_gf3(&f), vec![full.clone(), full]).unwrap();
        assert_eq!(mp_hull_dim(&spec_full, &ms).unwrap(), 0);
        assert!(is_sigma_dual_containing(&spec_full, &ms).unwrap());
        assert!(!is_sigma_self_orthogonal(&spec_full, &ms).unwrap());

        let single = MatrixProductSpec::new(Matrix::identity(&f, 1), vec![rep.clone()]).unwrap();
        let ms1 = MpSigma::euclidean(&f, 1, 3);
        assert_eq!(
            mp_hull_dim(&single, &ms1).unwrap(),
            crate::semilinear::sigma_hull_dim(&rep, &ms1.sigma_tilde()).unwrap()
        );
    }

    #[test]
    fn containment_examples() {
        let f = gf3();
        let (rep, dual) = rep_and_dual(&f);
        let ms = MpSigma::euclidean(&f, 2, 3);
        let reps = MatrixProductSpec::new(a_gf3(&f), vec![rep.clone(), rep.clone()]).unwrap();
        assert!(!is_sigma_dual_containing(&reps, &ms).unwrap());
        assert!(is_sigma_self_orthogonal(&reps, &ms).unwrap());
        let duals = MatrixProductSpec::new(a_gf3(&f), vec![dual.clone(), dual]).unwrap();
        assert!(is_sigma_dual_containing(&duals, &ms).unwrap());

        let single = MatrixProductSpec::new(Matrix::identity(&f, 1), vec![rep.clone()]).unwrap();
        assert!(is_sigma_self_orthogonal(&single, &MpSigma::euclidean(&f, 1, 3)).unwrap());
    }

    #[test]
    fn dual_spec_examples() {
        let f = gf3();
        let (rep, _) = rep_and_dual(&f);
        let ms = MpSigma::euclidean(&f, 2, 3);
        let spec = MatrixProductSpec::new(a_gf3(&f), vec![rep.clone(), rep.clone()]).unwrap();
        let dual = mp_sigma_dual(&spec, &ms).unwrap();
        let direct = sigma_dual(&spec.code(), &ms.sigma()).unwrap();
        assert!(dual.code().same_code(&direct).unwrap());

        let ident = MatrixProductSpec::new(
            Matrix::identity(&f, 2),
            vec![rep.clone(), LinearCode::full_space(&f, 3)],
        )
        .unwrap();
        let d = mp_sigma_dual(&ident, &ms).unwrap();
        assert!(d.constituents()[0]
            .same_code(&rep.euclidean_dual())
            .unwrap());
        assert_eq!(d.constituents()[1].dimension(), 0);
    }

    #[test]
    fn row_span_distance_examples() {
        let f = gf3();
        assert_eq!(
            row_span_distances(&Matrix::identity(&f, 3)).unwrap(),
            vec![1, 1, 1]
        );
        assert_eq!(row_span_distances(&a_gf3(&f)).unwrap(), vec![2, 1]);
        let ones = Matrix::from_rows(&f, &[[1, 1, 1, 1]]).unwrap();
        assert_eq!(row_span_distances(&ones).unwrap(), vec![4]);
        assert!(is_non_singular_by_columns(&a_gf3(&f)));
        assert!(!is_non_singular_by_columns(&Matrix::identity(&f, 2)));
    }

    #[test]
    fn non_square_rejected_for_hulls() {
        let f = gf3();
        let (rep, _) = rep_and_dual(&f);
        let a = Matrix::from_rows(&f, &[[1, 1, 1]]).unwrap();
        let spec = MatrixProductSpec::new(a, vec![rep]).unwrap();
        assert_eq!(spec.length(), 9);
        let ms = MpSigma::euclidean(&f, 1, 3);
        assert!(matches!(
            mp_hull_dim(&spec, &ms),
            Err(Error::NotSquare { .. })
        ));
    }
}
