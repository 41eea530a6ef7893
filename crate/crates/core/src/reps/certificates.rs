//! JSON interchange for representation certificates.
//!
//! Complex numbers are `[re, im]` pairs; projector matrices are row-major.
//! Floats round-trip bit-exactly through serde_json, which regression
//! fixtures rely on.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

use super::{OrthoRepresentation, ProjectorRepresentation};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CertificateFile {
    /// "orthogonal" or "projector".
    pub kind: String,
    /// graph6 line of the graph this certificate refers to, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    /// Per-vertex vectors, each entry `[re, im]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<[f64; 2]>>>,
    /// Per-vertex d x d matrices, row-major, each entry `[re, im]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projectors: Option<Vec<Vec<Vec<[f64; 2]>>>>,
}

impl CertificateFile {
    pub fn from_ortho(rep: &OrthoRepresentation, graph: Option<&Graph>) -> Self {
        CertificateFile {
            kind: "orthogonal".into(),
            graph6: graph.map(graph6::serialize_graph6),
            dimension: rep.dimension,
            rank: None,
            normalized: Some(rep.normalized),
            residual: Some(rep.residual),
            vectors: Some(
                rep.vectors
                    .iter()
                    .map(|x| x.iter().map(|z| [z.re, z.im]).collect())
                    .collect(),
            ),
            projectors: None,
        }
    }

    pub fn from_projector(rep: &ProjectorRepresentation, graph: Option<&Graph>) -> Self {
        CertificateFile {
            kind: "projector".into(),
            graph6: graph.map(graph6::serialize_graph6),
            dimension: rep.dimension,
            rank: Some(rep.rank),
            normalized: None,
            residual: None,
            vectors: None,
            projectors: Some(
                rep.projectors
                    .iter()
                    .map(|p| {
                        (0..p.nrows())
                            .map(|i| (0..p.ncols()).map(|j| [p[(i, j)].re, p[(i, j)].im]).collect())
                            .collect()
                    })
                    .collect(),
            ),
        }
    }

    pub fn to_ortho(&self) -> Result<OrthoRepresentation> {
        if self.kind != "orthogonal" {
            return Err(Error::Certificate(format!(
                "expected an orthogonal certificate, found kind {:?}",
                self.kind
            )));
        }
        let vectors = self
            .vectors
            .as_ref()
            .ok_or_else(|| Error::Certificate("orthogonal certificate lacks vectors".into()))?;
        if vectors.iter().any(|x| x.len() != self.dimension) {
            return Err(Error::Certificate("vector length differs from dimension".into()));
        }
        Ok(OrthoRepresentation {
            dimension: self.dimension,
            vectors: vectors
                .iter()
                .map(|x| x.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                .collect(),
            residual: self.residual.unwrap_or(f64::NAN),
            normalized: self.normalized.unwrap_or(false),
        })
    }

    pub fn to_projector(&self) -> Result<ProjectorRepresentation> {
        if self.kind != "projector" {
            return Err(Error::Certificate(format!(
                "expected a projector certificate, found kind {:?}",
                self.kind
            )));
        }
        let rank = self
            .rank
            .ok_or_else(|| Error::Certificate("projector certificate lacks a rank".into()))?;
        let raw = self
            .projectors
            .as_ref()
            .ok_or_else(|| Error::Certificate("projector certificate lacks matrices".into()))?;
        let d = self.dimension;
        let mut projectors = Vec::with_capacity(raw.len());
        for (v, rows) in raw.iter().enumerate() {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(Error::Certificate(format!(
                    "projector {v} is not {d}x{d}"
                )));
            }
            let mut p = DMatrix::<Complex64>::zeros(d, d);
            for (i, row) in rows.iter().enumerate() {
                for (j, &[re, im]) in row.iter().enumerate() {
                    p[(i, j)] = Complex64::new(re, im);
                }
            }
            projectors.push(p);
        }
        Ok(ProjectorRepresentation {
            dimension: d,
            rank,
            projectors,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
