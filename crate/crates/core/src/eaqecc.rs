//! Entanglement-assisted quantum code parameters `[[n, k, d; c]]_q` derived
//! from pairs of classical codes, from σ hulls, and from matrix-product codes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::hullsteer::{steer_self_hull, SteerConfig};
use crate::mpcode::{
    distance_bound, is_non_singular_by_columns, mp_hull_dim, mp_sigma_dual, MatrixProductSpec,
    MpSigma,
};
use crate::semilinear::{sigma_dual, sigma_hull_dim, MonomialMatrix, SemilinearIsometry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    /// Computed by enumerating codewords.
    Exact(usize),
    /// Lower bound from the matrix-product distance formula.
    AtLeast(usize),
    /// Undefined (zero code) or not enumerable.
    Unknown,
}

impl Distance {
    pub fn value(self) -> Option<usize> {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => Some(d),
            Distance::Unknown => None,
        }
    }

    pub fn flag(self) -> &'static str {
        match self {
            Distance::Exact(_) => "exact",
            Distance::AtLeast(_) => "bound",
            Distance::Unknown => "none",
        }
    }

    fn of(code: &LinearCode) -> Result<Distance> {
        match code.min_distance() {
            Ok(d) => Ok(Distance::Exact(d)),
            Err(Error::TooLarge { .. } | Error::ZeroCode) => Ok(Distance::Unknown),
            Err(e) => Err(e),
        }
    }

    fn or_bound(self, bound: Option<usize>) -> Distance {
        match (self, bound) {
            (Distance::Unknown, Some(b)) => Distance::AtLeast(b),
            (d, _) => d,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Two classical codes, `c = rank(H1 H2^T)`.
    Pair,
    /// A code and its σ hull.
    HullCode,
    /// The σ dual of a code and the same hull.
    HullDual,
    FamilyCode,
    FamilyDual,
    MdsCode,
    MdsDual,
    /// A matrix-product code.
    MpCode,
    /// The σ dual of a matrix-product code.
    MpDual,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Pair => "pair",
            Provenance::HullCode => "hull-code",
            Provenance::HullDual => "hull-dual",
            Provenance::FamilyCode => "family-code",
            Provenance::FamilyDual => "family-dual",
            Provenance::MdsCode => "mds-code",
            Provenance::MdsDual => "mds-dual",
            Provenance::MpCode => "mp-code",
            Provenance::MpDual => "mp-dual",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "certified")]
    Certified,
    #[serde(rename = "unrealized (search)")]
    Unrealized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EaqeccParams {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub c: usize,
    pub h: Option<usize>,
    pub provenance: Provenance,
    pub status: Status,
}

impl EaqeccParams {
    /// Records encoding no logical qudits are kept but flagged here.
    pub fn is_degenerate(&self) -> bool {
        self.k == 0
    }

    pub fn row(&self) -> EaqeccRow {
        EaqeccRow {
            q: self.q,
            n: self.n,
            k: self.k,
            d: self.d.value(),
            d_flag: self.d.flag().to_string(),
            c: self.c,
            h: self.h,
            provenance: self.provenance,
            status: self.status,
        }
    }
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.d {
            Distance::Exact(d) => d.to_string(),
            Distance::AtLeast(d) => format!(">={d}"),
            Distance::Unknown => "-".to_string(),
        };
        write!(f, "[[{},{},{};{}]]_{}", self.n, self.k, d, self.c, self.q)
    }
}

/// Flat table row used for CSV and JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EaqeccRow {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_flag: String,
    pub c: usize,
    pub h: Option<usize>,
    pub provenance: Provenance,
    pub status: Status,
}

fn check_compatible(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if c1.length() != c2.length() || **c1.field() != **c2.field() {
        return Err(Error::Incompatible(
            "codes differ in length or field".into(),
        ));
    }
    Ok(())
}

fn min_distance_of(a: Distance, b: Distance) -> Distance {
    match (a, b) {
        (Distance::Exact(x), Distance::Exact(y)) => Distance::Exact(x.min(y)),
        _ => Distance::Unknown,
    }
}

/// `[[n, k1 + k2 - n + c, min{d1, d2}; c]]_q` with `c = rank(H1 H2^T)`.
pub fn eaqecc_from_pair(c1: &LinearCode, c2: &LinearCode) -> Result<EaqeccParams> {
    check_compatible(c1, c2)?;
    let n = c1.length();
    let c = c1.parity_check().mul_transpose(c2.parity_check())?.rank();
    let k = (c1.dimension() + c2.dimension() + c)
        .checked_sub(n)
        .ok_or_else(|| Error::PreconditionFailed("negative logical dimension".into()))?;
    let d = match (c1.dimension(), c2.dimension()) {
        (0, _) => Distance::of(c2)?,
        (_, 0) => Distance::of(c1)?,
        _ => min_distance_of(Distance::of(c1)?, Distance::of(c2)?),
    };
    Ok(EaqeccParams {
        q: c1.field().order(),
        n,
        k,
        d,
        c,
        h: None,
        provenance: Provenance::Pair,
        status: Status::Certified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullRecords {
    pub h: usize,
    /// `[[n, k - h, d; n - k - h]]_q`
    pub code: EaqeccParams,
    /// `[[n, n - k - h, d'; k - h]]_q`
    pub dual: EaqeccParams,
}

/// Both hull-derived records for `C`, with the ebit count cross-checked
/// against the pair construction on `(C, σ(C))`.
pub fn eaqecc_from_hull(code: &LinearCode, sigma: &SemilinearIsometry) -> Result<HullRecords> {
    sigma.check_code(code)?;
    let n = code.length();
    let k = code.dimension();
    let h = sigma_hull_dim(code, sigma)?;
    let pair = eaqecc_from_pair(code, &sigma.image(code)?)?;
    if pair.c != n - k - h {
        return Err(Error::FormulaMismatch {
            context: "ebits from the pair construction",
            left: pair.c,
            right: n - k - h,
        });
    }
    let q = code.field().order();
    let dual = sigma_dual(code, sigma)?;
    Ok(HullRecords {
        h,
        code: EaqeccParams {
            q,
            n,
            k: k - h,
            d: Distance::of(code)?,
            c: n - k - h,
            h: Some(h),
            provenance: Provenance::HullCode,
            status: Status::Certified,
        },
        dual: EaqeccParams {
            q,
            n,
            k: n - k - h,
            d: Distance::of(&dual)?,
            c: k - h,
            h: Some(h),
            provenance: Provenance::HullDual,
            status: Status::Certified,
        },
    })
}

#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub h: usize,
    pub code: EaqeccParams,
    pub dual: EaqeccParams,
    /// Monomial matrix realising hull dimension `h`, when one was found.
    pub witness: Option<MonomialMatrix>,
}

fn require_large_field(code: &LinearCode) -> Result<()> {
    if code.field().order() <= 2 {
        return Err(Error::FieldTooSmall {
            q: code.field().order(),
        });
    }
    Ok(())
}

/// One row per `h` in `0..=dim Hull_σ(C)`, realised by steering `C` to a
/// monomially equivalent code with hull dimension `h`.
pub fn eaqecc_family(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    cfg: &SteerConfig,
) -> Result<Vec<FamilyRow>> {
    require_large_field(code)?;
    let top = sigma_hull_dim(code, sigma)?;
    let n = code.length();
    let k = code.dimension();
    let q = code.field().order();
    let d = Distance::of(code)?;
    let mut rows = Vec::with_capacity(top + 1);
    for h in 0..=top {
        let row = match steer_self_hull(code, sigma, h, cfg) {
            Ok(found) => {
                let rec = eaqecc_from_hull(&found.code, sigma)?;
                FamilyRow {
                    h,
                    code: EaqeccParams {
                        provenance: Provenance::FamilyCode,
                        ..rec.code
                    },
                    dual: EaqeccParams {
                        provenance: Provenance::FamilyDual,
                        ..rec.dual
                    },
                    witness: Some(found.witness),
                }
            }
            Err(Error::SearchExhausted { .. }) => FamilyRow {
                h,
                code: EaqeccParams {
                    q,
                    n,
                    k: k - h,
                    d,
                    c: n - k - h,
                    h: Some(h),
                    provenance: Provenance::FamilyCode,
                    status: Status::Unrealized,
                },
                dual: EaqeccParams {
                    q,
                    n,
                    k: n - k - h,
                    d: Distance::Unknown,
                    c: k - h,
                    h: Some(h),
                    provenance: Provenance::FamilyDual,
                    status: Status::Unrealized,
                },
                witness: None,
            },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    Ok(rows)
}

/// The family for an MDS code: `[[n, k-h, n-k+1; n-k-h]]_q` and
/// `[[n, n-k-h, k+1; k-h]]_q`, with both distances checked by enumeration.
pub fn eaqecc_family_mds(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    cfg: &SteerConfig,
) -> Result<Vec<FamilyRow>> {
    require_large_field(code)?;
    let n = code.length();
    let k = code.dimension();
    let d = code.min_distance()?;
    if d != n - k + 1 {
        return Err(Error::NotMds {
            d,
            singleton: n - k + 1,
        });
    }
    let mut rows = eaqecc_family(code, sigma, cfg)?;
    for row in &mut rows {
        row.code.provenance = Provenance::MdsCode;
        row.dual.provenance = Provenance::MdsDual;
        match row.dual.d {
            Distance::Exact(dual_d) if dual_d != k + 1 => {
                return Err(Error::FormulaMismatch {
                    context: "MDS dual distance",
                    left: dual_d,
                    right: k + 1,
                });
            }
            _ => {}
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug)]
pub struct MpFamilies {
    /// `Σ_i dim(C_i ∩ C_{ϱ(i)}^{⊥σ̃})`
    pub hull_dim: usize,
    pub q1: Vec<EaqeccParams>,
    pub q2: Vec<EaqeccParams>,
    /// `min_i D_i(A) d_i`
    pub claimed_bound_code: Option<usize>,
    /// `min_i D_i(A) d'_{ϱ(i)}`
    pub claimed_bound_dual: Option<usize>,
    pub exact_code: Option<usize>,
    pub exact_dual: Option<usize>,
    /// Whether `A` is non-singular by columns; the distance bounds are only
    /// backed by that hypothesis.
    pub non_singular_by_columns: bool,
}

impl MpFamilies {
    /// True when an exact distance falls below its claimed bound.
    pub fn bound_violated(&self) -> bool {
        let below = |exact: Option<usize>, bound: Option<usize>| matches!((exact, bound), (Some(e), Some(b)) if e < b);
        below(self.exact_code, self.claimed_bound_code)
            || below(self.exact_dual, self.claimed_bound_dual)
    }
}

fn steered_record(
    code: &LinearCode,
    sigma: &SemilinearIsometry,
    h: usize,
    d: Distance,
    provenance: Provenance,
    cfg: &SteerConfig,
) -> Result<EaqeccParams> {
    let n = code.length();
    let k = code.dimension();
    let status = match steer_self_hull(code, sigma, h, cfg) {
        Ok(found) => {
            let rec = eaqecc_from_hull(&found.code, sigma)?;
            if rec.code.k != k - h || rec.code.c != n - k - h {
                return Err(Error::FormulaMismatch {
                    context: "matrix-product family record",
                    left: rec.code.c,
                    right: n - k - h,
                });
            }
            Status::Certified
        }
        Err(Error::SearchExhausted { .. }) => Status::Unrealized,
        Err(e) => return Err(e),
    };
    Ok(EaqeccParams {
        q: code.field().order(),
        n,
        k: k - h,
        d,
        c: n - k - h,
        h: Some(h),
        provenance,
        status,
    })
}

/// `Q1 = [[kn, Σt_i - h, ≥ min D_i(A) d_i; kn - Σt_i - h]]_q` and
/// `Q2 = [[kn, kn - Σt_i - h, ≥ min D_i(A) d'_{ϱ(i)}; Σt_i - h]]_q` for
/// `h` in `0..=Σ_i dim(C_i ∩ C_{ϱ(i)}^{⊥σ̃})`.
pub fn eaqecc_from_mp(
    spec: &MatrixProductSpec,
    ms: &MpSigma,
    cfg: &SteerConfig,
) -> Result<MpFamilies> {
    if spec.field().order() <= 2 {
        return Err(Error::FieldTooSmall {
            q: spec.field().order(),
        });
    }
    let hull_dim = mp_hull_dim(spec, ms)?;
    let dual_spec = mp_sigma_dual(spec, ms)?;
    let sigma = ms.sigma();
    let code = spec.code();
    let dual = dual_spec.code();
    let dual_hull = sigma_hull_dim(&dual, &sigma)?;
    if dual_hull != hull_dim {
        return Err(Error::FormulaMismatch {
            context: "hull of the matrix-product dual",
            left: dual_hull,
            right: hull_dim,
        });
    }
    let claimed_bound_code = distance_bound(spec)?;
    let claimed_bound_dual = distance_bound(&dual_spec)?;
    let d_code = Distance::of(&code)?;
    let d_dual = Distance::of(&dual)?;
    let mut q1 = Vec::with_capacity(hull_dim + 1);
    let mut q2 = Vec::with_capacity(hull_dim + 1);
    for h in 0..=hull_dim {
        q1.push(steered_record(
            &code,
            &sigma,
            h,
            d_code.or_bound(claimed_bound_code),
            Provenance::MpCode,
            cfg,
        )?);
        q2.push(steered_record(
            &dual,
            &sigma,
            h,
            d_dual.or_bound(claimed_bound_dual),
            Provenance::MpDual,
            cfg,
        )?);
    }
    Ok(MpFamilies {
        hull_dim,
        q1,
        q2,
        claimed_bound_code,
        claimed_bound_dual,
        exact_code: match d_code {
            Distance::Exact(d) => Some(d),
            _ => None,
        },
        exact_dual: match d_dual {
            Distance::Exact(d) => Some(d),
            _ => None,
        },
        non_singular_by_columns: is_non_singular_by_columns(spec.defining_matrix()),
    })
}

/// Sorts by `h`, then provenance label.
pub fn sort_records(records: &mut [EaqeccParams]) {
    records.sort_by(|a, b| {
        a.h.cmp(&b.h)
            .then_with(|| a.provenance.label().cmp(b.provenance.label()))
    });
}

pub fn to_csv(records: &[EaqeccParams]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r.row())
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_csv(text: &str) -> Result<Vec<EaqeccRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

pub fn to_json(records: &[EaqeccParams]) -> Result<String> {
    let rows: Vec<EaqeccRow> = records.iter().map(EaqeccParams::row).collect();
    Ok(serde_json::to_string_pretty(&rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, Matrix};

    fn gf3_rep() -> (LinearCode, SemilinearIsometry) {
        let f = Field::prime(3).unwrap();
        (
            LinearCode::repetition(&f, 3),
            SemilinearIsometry::euclidean(&f, 3),
        )
    }

    #[test]
    fn pair_examples() {
        let (rep, _) = gf3_rep();
        // H = [[1,2,0],[0,1,2]] gives H H^T = [[2,2],[2,2]] of rank 1
        let p = eaqecc_from_pair(&rep, &rep).unwrap();
        assert_eq!((p.n, p.k, p.d, p.c), (3, 0, Distance::Exact(3), 1));

        let dual = rep.euclidean_dual();
        let p = eaqecc_from_pair(&rep, &dual).unwrap();
        assert_eq!((p.k, p.c), (0, 0));
        assert!(p.is_degenerate());

        let f = rep.field().clone();
        let full = LinearCode::full_space(&f, 4);
        let p = eaqecc_from_pair(&full, &full).unwrap();
        assert_eq!((p.n, p.k, p.d, p.c), (4, 4, Distance::Exact(1), 0));
        assert_eq!(p.to_string(), "[[4,4,1;0]]_3");
    }

    #[test]
    fn hull_examples() {
        let (rep, euc) = gf3_rep();
        let r = eaqecc_from_hull(&rep, &euc).unwrap();
        assert_eq!(r.h, 1);
        assert_eq!(r.code.to_string(), "[[3,0,3;1]]_3");
        assert_eq!(r.dual.to_string(), "[[3,1,2;0]]_3");

        let f = rep.field().clone();
        let full = LinearCode::full_space(&f, 3);
        let r = eaqecc_from_hull(&full, &euc).unwrap();
        assert_eq!(r.code.to_string(), "[[3,3,1;0]]_3");
        assert_eq!(r.dual.to_string(), "[[3,0,-;3]]_3");
    }

    #[test]
    fn self_orthogonal_code_record() {
        let f = Field::prime(5).unwrap();
        // (1,2,0,0) and (0,0,1,2) are isotropic and orthogonal over GF(5)
        let g = Matrix::from_rows(&f, &[[1, 2, 0, 0], [0, 0, 1, 2]]).unwrap();
        let c = LinearCode::from_generator(&g).unwrap();
        let r = eaqecc_from_hull(&c, &SemilinearIsometry::euclidean(&f, 4)).unwrap();
        assert_eq!(r.h, 2);
        assert_eq!((r.code.k, r.code.c), (0, 0));
    }

    #[test]
    fn family_examples() {
        let (rep, euc) = gf3_rep();
        let rows = eaqecc_family(&rep, &euc, &SteerConfig::default()).unwrap();
        assert_eq!(rows.len(), 2);
        let top = &rows[1];
        let direct = eaqecc_from_hull(&rep, &euc).unwrap();
        assert_eq!(top.code.to_string(), direct.code.to_string());
        assert_eq!(top.dual.to_string(), direct.dual.to_string());
        // hull 0 is out of reach for the ternary repetition code
        assert_eq!(rows[0].code.status, Status::Unrealized);

        let f2 = Field::prime(2).unwrap();
        let rep2 = LinearCode::repetition(&f2, 3);
        assert_eq!(
            eaqecc_family(
                &rep2,
                &SemilinearIsometry::euclidean(&f2, 3),
                &SteerConfig::default()
            )
            .unwrap_err(),
            Error::FieldTooSmall { q: 2 }
        );
    }

    #[test]
    fn mds_examples() {
        let (rep, euc) = gf3_rep();
        let rows = eaqecc_family_mds(&rep, &euc, &SteerConfig::default()).unwrap();
        assert_eq!(rows[1].dual.to_string(), "[[3,1,2;0]]_3");

        let f = rep.field().clone();
        let full = LinearCode::full_space(&f, 3);
        let rows = eaqecc_family_mds(&full, &euc, &SteerConfig::default()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].code.to_string(), "[[3,3,1;0]]_3");

        let g = Matrix::from_rows(&f, &[[1, 1, 0], [0, 0, 1]]).unwrap();
        let not_mds = LinearCode::from_generator(&g).unwrap();
        assert!(matches!(
            eaqecc_family_mds(&not_mds, &euc, &SteerConfig::default()),
            Err(Error::NotMds { .. })
        ));
    }

    #[test]
    fn csv_round_trip() {
        let (rep, euc) = gf3_rep();
        let r = eaqecc_from_hull(&rep, &euc).unwrap();
        let mut recs = vec![r.dual.clone(), r.code.clone()];
        sort_records(&mut recs);
        assert_eq!(recs[0].provenance, Provenance::HullCode);
        let text = to_csv(&recs).unwrap();
        assert!(text.starts_with("q,n,k,d,d_flag,c,h,provenance,status\n"));
        let back = from_csv(&text).unwrap();
        assert_eq!(back, recs.iter().map(EaqeccParams::row).collect::<Vec<_>>());
    }
}
