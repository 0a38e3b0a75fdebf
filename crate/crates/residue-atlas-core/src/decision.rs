use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::field::{QComplex, QReal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Realizable,
    NotRealizable,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub tag: String,
    pub certificate: Option<Certificate>,
}

impl Decision {
    pub fn realizable(tag: &str) -> Self {
        Decision { verdict: Verdict::Realizable, tag: tag.to_string(), certificate: None }
    }

    pub fn not_realizable(tag: &str) -> Self {
        Decision { verdict: Verdict::NotRealizable, tag: tag.to_string(), certificate: None }
    }

    pub fn undecided(tag: &str, note: &str) -> Self {
        Decision {
            verdict: Verdict::Undecided,
            tag: tag.to_string(),
            certificate: Some(Certificate::Open { note: note.to_string() }),
        }
    }

    pub fn with(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }
}

/// Vertex of a connection graph; `w` is a positive weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Weighted {
    pub w: QReal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UntyingVertex {
    pub order: i64,
    pub marks: Vec<QComplex>,
    /// (edge index, weight carried by this vertex's half of the edge).
    pub half_edges: Vec<(usize, QComplex)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnrichedVertex {
    pub genus: u32,
    pub family: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnrichedEdge {
    /// Vertex receiving the residue `+lambda`.
    pub plus: usize,
    /// Vertex receiving the residue `-lambda`.
    pub minus: usize,
    pub lambda: QComplex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// Weighted bipartite tree; residues are `scale·w` on `pos`, `−scale·w` on `neg`.
    Connection { scale: QComplex, pos: Vec<Weighted>, neg: Vec<Weighted>, edges: Vec<(usize, usize)> },
    /// Residues spanning the plane: the residual polygon is nondegenerate.
    ResidualPolygon { order: Vec<usize> },
    Untying { edges: Vec<(usize, usize)>, vertices: Vec<UntyingVertex> },
    Enriched { vertices: Vec<EnrichedVertex>, edges: Vec<EnrichedEdge> },
    Decomposition(crate::classifier::AdmissibleDecomposition),
    /// A d-th root of the tuple in the stratum of (k/d)-differentials.
    Transport { d: u32, k: u32, scale: QComplex, orders: Vec<i64>, roots: Vec<QComplex>, inner: alloc::boxed::Box<Decision> },
    /// Symmetric tree over square roots of same-ray quadratic residues.
    SignedTree { signs: Vec<i8>, parent: Vec<Option<usize>> },
    Exhausted { searched: String },
    Theorem { statement: String },
    Open { note: String },
}
