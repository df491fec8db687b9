//! JSON file formats for fields, matrices, codes, isometries and
//! matrix-product specifications.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Matrix};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::mpcode::{MatrixProductSpec, MpSigma};
use crate::semilinear::{MonomialMatrix, SemilinearIsometry};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn of(field: &Field) -> Self {
        FieldSpec {
            p: field.characteristic(),
            e: field.degree(),
            modulus: Some(field.modulus().to_vec()),
        }
    }

    pub fn build(&self) -> Result<Arc<Field>> {
        Field::with_modulus(self.p, self.e, self.modulus.clone())
    }
}

/// Row-major element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u32>,
}

impl MatrixSpec {
    pub fn of(m: &Matrix) -> Self {
        MatrixSpec {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().to_vec(),
        }
    }

    pub fn build(&self, field: &Arc<Field>) -> Result<Matrix> {
        Matrix::from_entries(field, self.rows, self.cols, self.entries.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub generator: MatrixSpec,
}

impl CodeFile {
    pub fn of(code: &LinearCode) -> Self {
        CodeFile {
            field: FieldSpec::of(code.field()),
            generator: MatrixSpec::of(code.generator()),
        }
    }

    pub fn build(&self) -> Result<LinearCode> {
        let field = self.field.build()?;
        LinearCode::from_generator(&self.generator.build(&field)?)
    }
}

/// A monomial matrix with 1-based permutation images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialSpec {
    pub perm: Vec<usize>,
    pub diag: Vec<u32>,
}

fn one_based(perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|&x| x + 1).collect()
}

fn zero_based(perm: &[usize]) -> Result<Vec<usize>> {
    perm.iter()
        .map(|&x| {
            x.checked_sub(1)
                .ok_or_else(|| Error::Parse("permutation images are 1-based".into()))
        })
        .collect()
}

impl MonomialSpec {
    pub fn of(m: &MonomialMatrix) -> Self {
        MonomialSpec {
            perm: one_based(m.perm()),
            diag: m.diag().to_vec(),
        }
    }

    pub fn build(&self, field: &Arc<Field>) -> Result<MonomialMatrix> {
        MonomialMatrix::new(field, zero_based(&self.perm)?, self.diag.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaSpec {
    pub s: u32,
    pub perm: Vec<usize>,
    pub diag: Vec<u32>,
}

impl SigmaSpec {
    pub fn of(sigma: &SemilinearIsometry) -> Self {
        let m = MonomialSpec::of(sigma.monomial());
        SigmaSpec {
            s: sigma.exponent(),
            perm: m.perm,
            diag: m.diag,
        }
    }

    /// Witness matrices are written with `s = e`, the identity automorphism.
    pub fn witness(m: &MonomialMatrix) -> Self {
        let spec = MonomialSpec::of(m);
        SigmaSpec {
            s: m.field().degree(),
            perm: spec.perm,
            diag: spec.diag,
        }
    }

    pub fn build(&self, field: &Arc<Field>) -> Result<SemilinearIsometry> {
        let mono = MonomialSpec {
            perm: self.perm.clone(),
            diag: self.diag.clone(),
        }
        .build(field)?;
        SemilinearIsometry::new(mono, self.s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstituentRef {
    Path(PathBuf),
    Inline(CodeFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MpSigmaSpec {
    pub tau_hat: MonomialSpec,
    pub tau_tilde: MonomialSpec,
    pub s: u32,
}

impl MpSigmaSpec {
    pub fn of(ms: &MpSigma) -> Self {
        MpSigmaSpec {
            tau_hat: MonomialSpec::of(ms.tau_hat()),
            tau_tilde: MonomialSpec::of(ms.tau_tilde()),
            s: ms.exponent(),
        }
    }

    pub fn build(&self, field: &Arc<Field>) -> Result<MpSigma> {
        MpSigma::new(
            self.tau_hat.build(field)?,
            self.tau_tilde.build(field)?,
            self.s,
        )
    }
}

/// `field` may be omitted when the first constituent carries it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MpSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(rename = "A")]
    pub a: MatrixSpec,
    pub constituents: Vec<ConstituentRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<MpSigmaSpec>,
}

impl MpSpecFile {
    pub fn of(spec: &MatrixProductSpec, ms: Option<&MpSigma>) -> Self {
        MpSpecFile {
            field: Some(FieldSpec::of(spec.field())),
            a: MatrixSpec::of(spec.defining_matrix()),
            constituents: spec
                .constituents()
                .iter()
                .map(|c| ConstituentRef::Inline(CodeFile::of(c)))
                .collect(),
            sigma: ms.map(MpSigmaSpec::of),
        }
    }

    /// Builds the spec and its isometry; relative constituent paths resolve
    /// against `base`. Without a `sigma` entry the Euclidean one is used.
    pub fn build(&self, base: &Path) -> Result<(MatrixProductSpec, MpSigma)> {
        let mut codes = Vec::with_capacity(self.constituents.len());
        for r in &self.constituents {
            codes.push(match r {
                ConstituentRef::Inline(c) => c.build()?,
                ConstituentRef::Path(p) => load_code(&base.join(p))?,
            });
        }
        let field = match (&self.field, codes.first()) {
            (Some(f), _) => f.build()?,
            (None, Some(c)) => c.field().clone(),
            (None, None) => {
                return Err(Error::Parse(
                    "MP spec has no field and no constituents".into(),
                ))
            }
        };
        if codes.iter().any(|c| **c.field() != *field) {
            return Err(Error::Incompatible(
                "constituents over different fields".into(),
            ));
        }
        let a = self.a.build(&field)?;
        let n = codes.first().map_or(0, LinearCode::length);
        let spec = MatrixProductSpec::new(a, codes)?;
        let ms = match &self.sigma {
            Some(s) => s.build(&field)?,
            None => MpSigma::euclidean(&field, spec.blocks(), n),
        };
        Ok((spec, ms))
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_code(path: &Path) -> Result<LinearCode> {
    serde_json::from_str::<CodeFile>(&read(path)?)?.build()
}

/// Reads a σ file for codes over `field`.
pub fn load_sigma(path: &Path, field: &Arc<Field>) -> Result<SemilinearIsometry> {
    serde_json::from_str::<SigmaSpec>(&read(path)?)?.build(field)
}

pub fn load_mp_spec(path: &Path) -> Result<(MatrixProductSpec, MpSigma)> {
    let file: MpSpecFile = serde_json::from_str(&read(path)?)?;
    file.build(path.parent().unwrap_or(Path::new(".")))
}

pub fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}
