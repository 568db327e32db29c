//! Complement labelings, label shifts across edge deletion and addition,
//! and the two-color arithmetic test for bipartite graphs.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::labeling::{induced_coloring, EdgeLabeling, InducedColoring};

/// Color classes of a labeling, ordered by increasing color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionProfile {
    pub colors: Vec<u64>,
    pub classes: Vec<Vec<VertexId>>,
    pub class_of: Vec<usize>,
}

impl PartitionProfile {
    pub fn new(coloring: &InducedColoring) -> Self {
        let mut by_color: BTreeMap<u64, Vec<VertexId>> = BTreeMap::new();
        for (v, &c) in coloring.colors.iter().enumerate() {
            by_color.entry(c).or_default().push(v);
        }
        let mut class_of = vec![0; coloring.colors.len()];
        for (k, vs) in by_color.values().enumerate() {
            for &v in vs {
                class_of[v] = k;
            }
        }
        PartitionProfile {
            colors: by_color.keys().copied().collect(),
            classes: by_color.into_values().collect(),
            class_of,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Degree shared by every vertex of class `k` under `degree`, or the
    /// first two vertices that disagree.
    fn uniform_degree(
        &self,
        k: usize,
        degree: impl Fn(VertexId) -> usize,
    ) -> std::result::Result<usize, (VertexId, VertexId)> {
        let first = self.classes[k][0];
        match self.classes[k].iter().find(|&&v| degree(v) != degree(first)) {
            Some(&v) => Err((first, v)),
            None => Ok(degree(first)),
        }
    }
}

fn violated(g: &Graph, condition: &str, x: VertexId, y: VertexId, detail: String) -> Error {
    Error::ConditionViolated {
        condition: condition.to_string(),
        x: g.role(x).to_string(),
        y: g.role(y).to_string(),
        detail,
    }
}

fn require_local_antimagic(f: &EdgeLabeling) -> Result<InducedColoring> {
    let coloring = induced_coloring(f);
    let g = f.graph();
    if let Some(&(a, b)) = g
        .edges()
        .iter()
        .find(|&&(a, b)| coloring.colors[a] == coloring.colors[b])
    {
        return Err(Error::NotLocalAntimagic(format!(
            "{} and {} both have color {}",
            g.role(a),
            g.role(b),
            coloring.colors[a]
        )));
    }
    Ok(coloring)
}

/// `g = q + 1 - f`, with no preconditions. Applying it twice gives `f` back.
pub fn complement(f: &EdgeLabeling) -> EdgeLabeling {
    let q = f.q() as u32;
    let labels = f.labels().iter().map(|&l| q + 1 - l).collect();
    EdgeLabeling::new(f.graph().clone(), labels).expect("complement of a bijection")
}

/// Complement on a regular graph, where `g^+(x) = d(q+1) - f^+(x)`.
pub fn complement_regular(f: &EdgeLabeling) -> Result<EdgeLabeling> {
    f.graph().is_regular().ok_or(Error::NotRegular)?;
    require_local_antimagic(f)?;
    Ok(complement(f))
}

/// Checks that equal colors imply equal degrees (i), and that
/// `(q+1)(deg x - deg y) != f^+(x) - f^+(y)` whenever the colors differ (ii).
pub fn check_complement_conditions(f: &EdgeLabeling) -> Result<()> {
    let g = f.graph();
    let coloring = induced_coloring(f);
    let profile = PartitionProfile::new(&coloring);
    let q1 = f.q() as i64 + 1;
    // (ii) says the complemented sums (q+1)deg - f^+ differ across classes
    let mut complemented: BTreeMap<i64, VertexId> = BTreeMap::new();
    for k in 0..profile.len() {
        let d = profile
            .uniform_degree(k, |v| g.degree(v))
            .map_err(|(x, y)| {
                violated(
                    g,
                    "i",
                    x,
                    y,
                    format!(
                        "equal color {} but degrees {} and {}",
                        profile.colors[k],
                        g.degree(x),
                        g.degree(y)
                    ),
                )
            })?;
        let x = profile.classes[k][0];
        let value = q1 * d as i64 - coloring.colors[x] as i64;
        if let Some(&y) = complemented.get(&value) {
            return Err(violated(
                g,
                "ii",
                x,
                y,
                format!(
                    "(q+1)(deg x - deg y) = {} = f+(x) - f+(y)",
                    q1 * (g.degree(x) as i64 - g.degree(y) as i64)
                ),
            ));
        }
        complemented.insert(value, x);
    }
    Ok(())
}

/// Complement on an arbitrary graph, guarded by
/// [`check_complement_conditions`].
pub fn complement_nonregular(f: &EdgeLabeling) -> Result<EdgeLabeling> {
    require_local_antimagic(f)?;
    check_complement_conditions(f)?;
    Ok(complement(f))
}

/// Deletes edge `e` (which must carry label 1) and lowers every other label
/// by one, so `h^+(x) = f^+(x) - deg_G(x)`.
///
/// Degrees must be uniform on each color class and the shifted values
/// `f^+(x) - d_k` must stay distinct across classes.
pub fn delete_edge_shift(f: &EdgeLabeling, e: EdgeId) -> Result<EdgeLabeling> {
    let g = f.graph();
    if e >= g.size() {
        return Err(Error::NoSuchEdge(format!("index={e}")));
    }
    if f.label(e) != 1 {
        return Err(Error::NotUnitLabel {
            edge: e,
            label: f.label(e),
        });
    }
    let h = Arc::new(g.without_edge(e)?);
    let coloring = require_local_antimagic(f)?;
    let profile = PartitionProfile::new(&coloring);
    let mut shifted: BTreeMap<i64, VertexId> = BTreeMap::new();
    for k in 0..profile.len() {
        let d = profile
            .uniform_degree(k, |v| g.degree(v))
            .map_err(|(x, y)| {
                violated(
                    g,
                    "ii",
                    x,
                    y,
                    format!("same class but degrees {} and {}", g.degree(x), g.degree(y)),
                )
            })?;
        let x = profile.classes[k][0];
        let value = coloring.colors[x] as i64 - d as i64;
        if let Some(&y) = shifted.get(&value) {
            return Err(violated(
                g,
                "ii",
                x,
                y,
                format!("f+(x) - d_a = f+(y) - d_b = {value}"),
            ));
        }
        shifted.insert(value, x);
    }
    let labels = f
        .labels()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != e)
        .map(|(_, &l)| l - 1)
        .collect();
    EdgeLabeling::new(h, labels)
}

/// Which sub-case of the edge-addition condition applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AdditionCase {
    /// Both endpoints form singleton color classes.
    A,
    /// Exactly one endpoint forms a singleton class.
    B,
    /// Neither endpoint is alone in its class.
    C,
}

/// Checks the edge-addition condition for the non-adjacent pair `u, v`.
///
/// The sub-case is read off the class sizes. In every sub-case the
/// requirement amounts to: degrees in `G + uv` are uniform on each class
/// (`d_k`), and the values `f^+(x) + d_k` are distinct across classes.
pub fn addition_case(f: &EdgeLabeling, u: VertexId, v: VertexId) -> Result<AdditionCase> {
    let g = f.graph();
    if u >= g.order() || v >= g.order() || u == v {
        return Err(Error::NotSimple(format!("cannot add edge ({u}, {v})")));
    }
    if g.has_edge(u, v) {
        return Err(Error::EdgeExists(g.role(u).to_string(), g.role(v).to_string()));
    }
    let coloring = require_local_antimagic(f)?;
    let profile = PartitionProfile::new(&coloring);
    let (i, j) = (profile.class_of[u], profile.class_of[v]);
    if i == j {
        return Err(violated(
            g,
            "iii",
            u,
            v,
            format!("both endpoints have color {}", profile.colors[i]),
        ));
    }
    let new_degree = |x: VertexId| g.degree(x) + usize::from(x == u || x == v);
    let mut shifted: BTreeMap<i64, VertexId> = BTreeMap::new();
    for k in 0..profile.len() {
        let d = profile.uniform_degree(k, new_degree).map_err(|(x, y)| {
            violated(
                g,
                "iii",
                x,
                y,
                format!(
                    "same class but degrees {} and {} after adding the edge",
                    new_degree(x),
                    new_degree(y)
                ),
            )
        })?;
        let x = profile.classes[k][0];
        let value = coloring.colors[x] as i64 + d as i64;
        if let Some(&y) = shifted.get(&value) {
            return Err(violated(
                g,
                "iii",
                x,
                y,
                format!("f+(x) + d_a = f+(y) + d_b = {value}"),
            ));
        }
        shifted.insert(value, x);
    }
    let singles = (profile.classes[i].len() == 1, profile.classes[j].len() == 1);
    Ok(match singles {
        (true, true) => AdditionCase::A,
        (true, false) | (false, true) => AdditionCase::B,
        (false, false) => AdditionCase::C,
    })
}

/// Adds edge `uv` with label 1 and raises every other label by one, so
/// `g^+(x) = f^+(x) + deg_{G+uv}(x)`.
pub fn add_edge_shift(f: &EdgeLabeling, u: VertexId, v: VertexId) -> Result<EdgeLabeling> {
    addition_case(f, u, v)?;
    let h = Arc::new(f.graph().with_edge(u, v)?);
    let mut labels: Vec<u32> = f.labels().iter().map(|&l| l + 1).collect();
    labels.push(1);
    EdgeLabeling::new(h, labels)
}

/// Color values and class sizes of a hypothetical 2-coloring, with
/// `x X = y Y = q(q+1)/2`, `x < y`, `X > Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoColorSolution {
    pub x: u64,
    pub y: u64,
    #[serde(rename = "X")]
    pub big: usize,
    #[serde(rename = "Y")]
    pub small: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum TwoColorCheck {
    Feasible { solutions: Vec<TwoColorSolution> },
    Infeasible { reason: String },
}

impl TwoColorCheck {
    pub fn is_feasible(&self) -> bool {
        matches!(self, TwoColorCheck::Feasible { .. })
    }
}

/// Necessary arithmetic for a local antimagic 2-coloring: the graph is
/// bipartite with parts of sizes `X > Y`, and `q(q+1)/2` is divisible by
/// both.
pub fn bipartite_two_color_feasible(g: &Graph) -> TwoColorCheck {
    let Some((a, b)) = g.bipartition() else {
        return TwoColorCheck::Infeasible {
            reason: "graph is not bipartite".into(),
        };
    };
    let q = g.size() as u64;
    let half = q * (q + 1) / 2;
    let (big, small) = (a.len().max(b.len()), a.len().min(b.len()));
    if big == small {
        return TwoColorCheck::Infeasible {
            reason: format!("parts have equal size {big}, so X > Y is impossible"),
        };
    }
    if half % big as u64 != 0 || half % small as u64 != 0 {
        return TwoColorCheck::Infeasible {
            reason: format!("q(q+1)/2 = {half} is not divisible by both {big} and {small}"),
        };
    }
    TwoColorCheck::Feasible {
        solutions: vec![TwoColorSolution {
            x: half / big as u64,
            y: half / small as u64,
            big,
            small,
        }],
    }
}
