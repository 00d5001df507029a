//! JSON interchange documents.
//!
//! The polytope document `{"dim": d, "vertices": [[...], ...]}` is the
//! single format the CLI consumes and produces; floats are serialized by
//! serde_json's shortest-round-trip encoder, so parsing the output
//! recovers every bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gale::GaleDiagram;
use crate::polytope::InscribedPolytope;
use crate::real::Real;

/// Wire form of an inscribed polytope.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
}

impl PolytopeDoc {
    pub fn from_polytope<F: Real>(p: &InscribedPolytope<F>) -> Self {
        Self {
            dim: p.dim(),
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
                .collect(),
        }
    }

    pub fn to_polytope<F: Real>(&self) -> Result<InscribedPolytope<F>> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|&x| F::of(x)).collect())
            .collect();
        InscribedPolytope::new(self.dim, vertices)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("polytope doc serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::InvalidArgument(format!(
                "malformed polytope JSON at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }
}

/// Wire form of a Gale diagram.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaleDoc {
    pub codim: usize,
    pub points: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
}

impl GaleDoc {
    pub fn from_diagram<F: Real>(g: &GaleDiagram<F>) -> Self {
        Self {
            codim: g.codim,
            points: g
                .points
                .iter()
                .map(|p| p.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
                .collect(),
            labels: g.labels.clone(),
        }
    }

    pub fn to_diagram<F: Real>(&self) -> GaleDiagram<F> {
        GaleDiagram {
            codim: self.codim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|&x| F::of(x)).collect())
                .collect(),
            labels: self.labels.clone(),
        }
    }
}
