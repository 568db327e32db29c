//! Local antimagic labelings of cycle-related join graphs.
//!
//! The crate builds the graph families (`C_m ∨ O_n`, wheels, Möbius ladders,
//! `G(m, n)`, `B(n_1, ..., n_m)` and friends), produces explicit labelings
//! for them, transforms labelings across edge deletion and addition, and
//! computes local antimagic chromatic numbers of small graphs exactly.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod magic;
pub mod solver;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{build, EdgeId, EdgeSelector, Family, FamilySpec, Graph, VertexId, VertexRole};
pub use labeling::{
    color_histogram, induced_coloring, verify, CertificateJson, EdgeLabeling, InducedColoring,
    LabelingCertificate, Provenance,
};
pub use magic::{magic_rectangle, verify_rectangle, MagicRectangle};
