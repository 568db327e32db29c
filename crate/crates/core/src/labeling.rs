//! Edge labelings, induced vertex colors, and labeling certificates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, GraphJson, VertexId};

/// Bijection from the edges of a graph onto `1..=q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    graph: Arc<Graph>,
    labels: Vec<u32>,
}

impl EdgeLabeling {
    /// `labels[e]` is the label of edge `e`.
    pub fn new(graph: Arc<Graph>, labels: Vec<u32>) -> Result<Self> {
        let q = graph.size();
        if labels.len() != q {
            return Err(Error::NotBijective {
                q,
                detail: format!("{} labels for {q} edges", labels.len()),
            });
        }
        let mut seen = vec![false; q + 1];
        for (e, &l) in labels.iter().enumerate() {
            let l = l as usize;
            if l == 0 || l > q {
                return Err(Error::NotBijective {
                    q,
                    detail: format!("edge {} has label {l}", graph.edge_name(e)),
                });
            }
            if seen[l] {
                return Err(Error::NotBijective {
                    q,
                    detail: format!("label {l} used twice"),
                });
            }
            seen[l] = true;
        }
        Ok(EdgeLabeling { graph, labels })
    }

    /// Labels given by a closure over edge ids.
    pub fn from_fn(graph: Arc<Graph>, mut f: impl FnMut(EdgeId) -> u32) -> Result<Self> {
        let labels = (0..graph.size()).map(&mut f).collect();
        EdgeLabeling::new(graph, labels)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> u32 {
        self.labels[e]
    }

    pub fn q(&self) -> usize {
        self.labels.len()
    }

    /// Edge carrying label `l`.
    pub fn edge_with_label(&self, l: u32) -> Option<EdgeId> {
        self.labels.iter().position(|&x| x == l)
    }

    pub fn induced_coloring(&self) -> InducedColoring {
        induced_coloring(self)
    }

    pub fn verify(&self, provenance: Provenance) -> LabelingCertificate {
        verify(self, provenance)
    }
}

/// Vertex sums `f^+` of a labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedColoring {
    pub colors: Vec<u64>,
    pub distinct: Vec<u64>,
}

impl InducedColoring {
    pub fn count(&self) -> usize {
        self.distinct.len()
    }

    pub fn color(&self, v: VertexId) -> u64 {
        self.colors[v]
    }

    pub fn total(&self) -> u64 {
        self.colors.iter().sum()
    }

    pub fn histogram(&self) -> BTreeMap<u64, usize> {
        color_histogram(self)
    }
}

pub fn induced_coloring(f: &EdgeLabeling) -> InducedColoring {
    let g = f.graph();
    let mut colors = vec![0u64; g.order()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        colors[a] += u64::from(f.labels[e]);
        colors[b] += u64::from(f.labels[e]);
    }
    let distinct: BTreeSet<u64> = colors.iter().copied().collect();
    InducedColoring {
        colors,
        distinct: distinct.into_iter().collect(),
    }
}

pub fn color_histogram(c: &InducedColoring) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for &x in &c.colors {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// How a labeling was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Constructed(String),
    Searched,
    Transformed(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Constructed(tag) => write!(f, "constructed:{tag}"),
            Provenance::Searched => f.write_str("searched"),
            Provenance::Transformed(tag) => write!(f, "transformed:{tag}"),
        }
    }
}

impl std::str::FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "searched" {
            return Ok(Provenance::Searched);
        }
        if let Some(tag) = s.strip_prefix("constructed:") {
            return Ok(Provenance::Constructed(tag.to_string()));
        }
        if let Some(tag) = s.strip_prefix("transformed:") {
            return Ok(Provenance::Transformed(tag.to_string()));
        }
        Err(Error::Parse(format!("bad provenance {s:?}")))
    }
}

/// A labeling together with its recomputed verification data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingCertificate {
    pub labeling: EdgeLabeling,
    pub coloring: InducedColoring,
    pub valid: bool,
    /// Adjacent pairs with equal colors.
    pub conflicts: Vec<(VertexId, VertexId)>,
    pub provenance: Provenance,
}

pub fn verify(f: &EdgeLabeling, provenance: Provenance) -> LabelingCertificate {
    let coloring = induced_coloring(f);
    let conflicts: Vec<_> = f
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| coloring.colors[a] == coloring.colors[b])
        .collect();
    LabelingCertificate {
        labeling: f.clone(),
        valid: conflicts.is_empty(),
        coloring,
        conflicts,
        provenance,
    }
}

impl LabelingCertificate {
    pub fn graph(&self) -> &Arc<Graph> {
        self.labeling.graph()
    }

    pub fn color_count(&self) -> usize {
        self.coloring.count()
    }

    /// The invariants every certificate must satisfy regardless of validity:
    /// labels form a bijection onto `1..=q` and the colors sum to `q(q+1)`.
    pub fn check_invariants(&self) -> Result<()> {
        let g = self.graph().clone();
        EdgeLabeling::new(g, self.labeling.labels.clone())?;
        let q = self.labeling.q() as u64;
        if self.coloring.total() != q * (q + 1) {
            return Err(Error::Mismatch(format!(
                "colors sum to {}, expected {}",
                self.coloring.total(),
                q * (q + 1)
            )));
        }
        if self.coloring != induced_coloring(&self.labeling) {
            return Err(Error::Mismatch("stored coloring is stale".into()));
        }
        Ok(())
    }

    /// Fails with [`Error::NotLocalAntimagic`] naming the first conflict.
    pub fn require_valid(self) -> Result<Self> {
        if let Some(&(a, b)) = self.conflicts.first() {
            let g = self.graph();
            return Err(Error::NotLocalAntimagic(format!(
                "{} and {} both have color {}",
                g.role(a),
                g.role(b),
                self.coloring.colors[a]
            )));
        }
        Ok(self)
    }

    pub fn to_json(&self) -> CertificateJson {
        let g = self.graph();
        CertificateJson {
            spec: g.to_json(),
            labels: self
                .labeling
                .labels
                .iter()
                .enumerate()
                .map(|(e, &l)| (e, l))
                .collect(),
            colors: (0..g.order())
                .map(|v| (g.role(v).to_string(), self.coloring.colors[v]))
                .collect(),
            color_count: self.color_count(),
            valid: self.valid,
            provenance: self.provenance.to_string(),
            conflicts: self
                .conflicts
                .iter()
                .map(|&(a, b)| [g.role(a).to_string(), g.role(b).to_string()])
                .collect(),
            manifest: None,
        }
    }

    /// Rebuilds the certificate from its wire form and recomputes every
    /// derived field. Stored colors, count, validity and conflicts must agree
    /// with the recomputation.
    pub fn from_json(json: &CertificateJson) -> Result<LabelingCertificate> {
        let graph = Arc::new(Graph::from_json(&json.spec)?);
        let q = graph.size();
        let mut labels = vec![0u32; q];
        for (&e, &l) in &json.labels {
            if e >= q {
                return Err(Error::NotBijective {
                    q,
                    detail: format!("label given for nonexistent edge {e}"),
                });
            }
            labels[e] = l;
        }
        if json.labels.len() != q {
            return Err(Error::NotBijective {
                q,
                detail: format!("{} labels for {q} edges", json.labels.len()),
            });
        }
        let labeling = EdgeLabeling::new(graph, labels)?;
        let cert = verify(&labeling, json.provenance.parse()?);
        let fresh = cert.to_json();
        for (name, &stored) in &json.colors {
            match fresh.colors.get(name) {
                Some(&c) if c == stored => {}
                Some(&c) => {
                    return Err(Error::Mismatch(format!(
                        "stale color for {name}: stored {stored}, recomputed {c}"
                    )))
                }
                None => return Err(Error::Mismatch(format!("unknown vertex {name}"))),
            }
        }
        if json.colors.len() != fresh.colors.len() {
            return Err(Error::Mismatch("colors missing for some vertices".into()));
        }
        if json.color_count != fresh.color_count {
            return Err(Error::Mismatch(format!(
                "stored color count {}, recomputed {}",
                json.color_count, fresh.color_count
            )));
        }
        if json.valid != fresh.valid || json.conflicts != fresh.conflicts {
            return Err(Error::Mismatch(format!(
                "stored verdict valid={}, recomputed valid={} with conflicts {:?}",
                json.valid, fresh.valid, fresh.conflicts
            )));
        }
        Ok(cert)
    }
}

/// Wire form of a certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateJson {
    pub spec: GraphJson,
    pub labels: BTreeMap<usize, u32>,
    pub colors: IndexMap<String, u64>,
    pub color_count: usize,
    pub valid: bool,
    pub provenance: String,
    #[serde(default)]
    pub conflicts: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<serde_json::Value>,
}
