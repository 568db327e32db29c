//! Graph representation and the family constructors.
//!
//! Every graph carries the [`FamilySpec`] it was built from. Vertex and edge
//! orderings are canonical: cycle vertices `u_1..u_m` come before apex
//! vertices `v_1..v_n`, cycle edges `e_1..e_m` come before join edges, and
//! join edges are listed row-major in `(i, j)`. Two graphs are equal when
//! their specs, vertex lists and edge lists are equal; no isomorphism test is
//! attempted.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Default ceiling on |V| for exact chromatic number computation.
pub const CHROMATIC_GUARD: usize = 40;

/// Named role of a vertex inside its family.
///
/// Möbius ladders reuse `Cycle(i)` / `Apex(i)` for the two halves `u_i`, `v_i`
/// of the underlying `2n`-cycle, and complete bipartite graphs use them for
/// the two parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    /// `u_i`
    Cycle(usize),
    /// `v_j`
    Apex(usize),
    /// `x_i`
    Spine(usize),
    /// `y_{i,j}`
    Leaf(usize, usize),
    /// `w_i`, used by complete graphs and custom edge lists
    Plain(usize),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Cycle(i) => write!(f, "u{i}"),
            VertexRole::Apex(j) => write!(f, "v{j}"),
            VertexRole::Spine(i) => write!(f, "x{i}"),
            VertexRole::Leaf(i, j) => write!(f, "y{i},{j}"),
            VertexRole::Plain(i) => write!(f, "w{i}"),
        }
    }
}

impl FromStr for VertexRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad vertex name {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match tag {
            'u' => VertexRole::Cycle(num(rest)?),
            'v' => VertexRole::Apex(num(rest)?),
            'x' => VertexRole::Spine(num(rest)?),
            'w' => VertexRole::Plain(num(rest)?),
            'y' => {
                let (i, j) = rest.split_once(',').ok_or_else(bad)?;
                VertexRole::Leaf(num(i)?, num(j)?)
            }
            _ => return Err(bad()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `C_m`, params `[m]`
    Cycle,
    /// `P_m`, params `[m]`
    Path,
    /// `K_n`, params `[n]`
    Complete,
    /// `K_{m,n}`, params `[m, n]`
    CompleteBipartite,
    /// `C_m ∨ O_n`, params `[m, n]`
    #[serde(rename = "cycle-join-empty")]
    JoinWithEmpty,
    /// `C_m ∨ C_n`, params `[m, n]`
    #[serde(rename = "cycle-join-cycle")]
    JoinWithCycle,
    /// `C_m ∨ K_n`, params `[m, n]`
    #[serde(rename = "cycle-join-complete")]
    JoinWithComplete,
    /// `W_m = C_m ∨ O_1`, params `[m]`
    Wheel,
    /// `M_{2n}`, params `[n]`
    #[serde(rename = "mobius")]
    MobiusLadder,
    /// `M_{2n} ∨ O_k`, params `[n, k]`
    MobiusJoinEmpty,
    /// `P_m ∨ O_n`, params `[m, n]`
    PathJoinEmpty,
    /// `G(m, n)`: `C_m ∨ O_n` without the edges `u_m v_j`, params `[m, n]`
    Gmn,
    /// `B(n_1, ..., n_m)`, params `[n_1, ..., n_m]`
    #[serde(rename = "b")]
    Bseq,
    /// Arbitrary edge list on plain vertices.
    Custom,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Cycle,
        Family::Path,
        Family::Complete,
        Family::CompleteBipartite,
        Family::JoinWithEmpty,
        Family::JoinWithCycle,
        Family::JoinWithComplete,
        Family::Wheel,
        Family::MobiusLadder,
        Family::MobiusJoinEmpty,
        Family::PathJoinEmpty,
        Family::Gmn,
        Family::Bseq,
        Family::Custom,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::JoinWithEmpty => "cycle-join-empty",
            Family::JoinWithCycle => "cycle-join-cycle",
            Family::JoinWithComplete => "cycle-join-complete",
            Family::Wheel => "wheel",
            Family::MobiusLadder => "mobius",
            Family::MobiusJoinEmpty => "mobius-join-empty",
            Family::PathJoinEmpty => "path-join-empty",
            Family::Gmn => "gmn",
            Family::Bseq => "b",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Selects one edge of a family graph for deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeSelector {
    /// Cycle edge `e_i = u_i u_{i+1}`.
    Cycle(usize),
    /// Join edge `u_i v_j`.
    Join(usize, usize),
    /// Spoke `u_i v_1` of a wheel.
    Spoke(usize),
    /// Canonical edge index.
    Index(usize),
}

impl fmt::Display for EdgeSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeSelector::Cycle(i) => write!(f, "cycle={i}"),
            EdgeSelector::Join(i, j) => write!(f, "join={i},{j}"),
            EdgeSelector::Spoke(i) => write!(f, "spoke={i}"),
            EdgeSelector::Index(k) => write!(f, "index={k}"),
        }
    }
}

impl FromStr for EdgeSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad edge selector {s:?}"));
        let (kind, arg) = s.split_once('=').ok_or_else(bad)?;
        let nums: Vec<usize> = arg
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (kind, nums.as_slice()) {
            ("cycle", [i]) => Ok(EdgeSelector::Cycle(*i)),
            ("join", [i, j]) => Ok(EdgeSelector::Join(*i, *j)),
            ("spoke", [i]) => Ok(EdgeSelector::Spoke(*i)),
            ("index", [k]) => Ok(EdgeSelector::Index(*k)),
            _ => Err(bad()),
        }
    }
}

/// Parameterized descriptor of a graph family plus an optional single-edge
/// modification.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub deletion: Option<EdgeSelector>,
    pub addition: Option<(VertexRole, VertexRole)>,
}

impl FamilySpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> Self {
        FamilySpec {
            family,
            params: params.into(),
            deletion: None,
            addition: None,
        }
    }

    pub fn with_deletion(mut self, sel: EdgeSelector) -> Self {
        self.deletion = Some(sel);
        self
    }

    pub fn with_addition(mut self, u: VertexRole, v: VertexRole) -> Self {
        self.addition = Some((u, v));
        self
    }

    pub fn cycle(m: usize) -> Self {
        Self::new(Family::Cycle, [m])
    }
    pub fn path(m: usize) -> Self {
        Self::new(Family::Path, [m])
    }
    pub fn complete(n: usize) -> Self {
        Self::new(Family::Complete, [n])
    }
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        Self::new(Family::CompleteBipartite, [m, n])
    }
    pub fn join_empty(m: usize, n: usize) -> Self {
        Self::new(Family::JoinWithEmpty, [m, n])
    }
    pub fn join_cycle(m: usize, n: usize) -> Self {
        Self::new(Family::JoinWithCycle, [m, n])
    }
    pub fn join_complete(m: usize, n: usize) -> Self {
        Self::new(Family::JoinWithComplete, [m, n])
    }
    pub fn wheel(m: usize) -> Self {
        Self::new(Family::Wheel, [m])
    }
    pub fn mobius(n: usize) -> Self {
        Self::new(Family::MobiusLadder, [n])
    }
    pub fn mobius_join_empty(n: usize, k: usize) -> Self {
        Self::new(Family::MobiusJoinEmpty, [n, k])
    }
    pub fn path_join_empty(m: usize, n: usize) -> Self {
        Self::new(Family::PathJoinEmpty, [m, n])
    }
    pub fn gmn(m: usize, n: usize) -> Self {
        Self::new(Family::Gmn, [m, n])
    }
    pub fn bseq(sizes: impl Into<Vec<usize>>) -> Self {
        Self::new(Family::Bseq, sizes)
    }
    /// `B(n^{[m]})`
    pub fn b_uniform(n: usize, m: usize) -> Self {
        Self::new(Family::Bseq, vec![n; m])
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, ":{}", ps.join(","))?;
        }
        if let Some(sel) = &self.deletion {
            write!(f, ":{sel}")?;
        }
        if let Some((u, v)) = &self.addition {
            write!(f, ":add={u},{v}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the compact form `family:p1,p2[:selector][:add=u,v]`,
    /// e.g. `wheel:4:spoke=1` or `gmn:6,3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let family: Family = parts.next().unwrap_or_default().parse()?;
        let mut spec = FamilySpec::new(family, Vec::new());
        for part in parts {
            if let Some(rest) = part.strip_prefix("add=") {
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad addition {part:?}")))?;
                spec.addition = Some((a.parse()?, b.parse()?));
            } else if part.contains('=') {
                spec.deletion = Some(part.parse()?);
            } else if !part.is_empty() {
                spec.params = part
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad parameter list {part:?}")))
                    })
                    .collect::<Result<_>>()?;
            }
        }
        Ok(spec)
    }
}

/// Simple connected graph with named vertex roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    spec: FamilySpec,
    roles: Vec<VertexRole>,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
    neighbors: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Validates and assembles a graph: simple, connected, order at least 3,
    /// vertex roles unique.
    pub fn from_parts(
        spec: FamilySpec,
        roles: Vec<VertexRole>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Graph> {
        let n = roles.len();
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        let mut seen_roles = HashMap::with_capacity(n);
        for (v, r) in roles.iter().enumerate() {
            if let Some(prev) = seen_roles.insert(*r, v) {
                return Err(Error::NotSimple(format!(
                    "vertex name {r} used twice ({prev} and {v})"
                )));
            }
        }
        let mut incidence = vec![Vec::new(); n];
        let mut neighbors = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::NotSimple(format!("edge {e} has an endpoint out of range")));
            }
            if a == b {
                return Err(Error::NotSimple(format!("self-loop at {}", roles[a])));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::NotSimple(format!(
                    "duplicate edge {}{}",
                    roles[a], roles[b]
                )));
            }
            incidence[a].push(e);
            incidence[b].push(e);
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        let g = Graph {
            spec,
            roles,
            edges,
            incidence,
            neighbors,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Graph on plain vertices `w_1..w_n` with the given 0-based edge list.
    pub fn custom(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        Graph::from_parts(
            FamilySpec::new(Family::Custom, Vec::new()),
            (1..=n).map(VertexRole::Plain).collect(),
            edges.to_vec(),
        )
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.roles.len()
    }

    /// Number of edges, `q`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn role(&self, v: VertexId) -> VertexRole {
        self.roles[v]
    }

    pub fn vertex(&self, role: VertexRole) -> Option<VertexId> {
        self.roles.iter().position(|r| *r == role)
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.incidence[u].iter().copied().find(|&e| {
            let (a, b) = self.edges[e];
            (a == u && b == v) || (a == v && b == u)
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Display name of edge `e`, e.g. `u1v2`.
    pub fn edge_name(&self, e: EdgeId) -> String {
        let (a, b) = self.edges[e];
        format!("{}{}", self.roles[a], self.roles[b])
    }

    fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Resolves a selector against this graph's vertex roles.
    pub fn select_edge(&self, sel: EdgeSelector) -> Result<EdgeId> {
        let between = |a: VertexRole, b: VertexRole| {
            let u = self.vertex(a)?;
            let v = self.vertex(b)?;
            self.edge_between(u, v)
        };
        let found = match sel {
            EdgeSelector::Index(k) => (k < self.size()).then_some(k),
            EdgeSelector::Join(i, j) => between(VertexRole::Cycle(i), VertexRole::Apex(j)),
            EdgeSelector::Spoke(i) => between(VertexRole::Cycle(i), VertexRole::Apex(1)),
            EdgeSelector::Cycle(i) => {
                let m = self
                    .roles
                    .iter()
                    .filter(|r| matches!(r, VertexRole::Cycle(_)))
                    .count();
                if i == 0 || i > m {
                    None
                } else {
                    between(VertexRole::Cycle(i), VertexRole::Cycle(i % m + 1))
                }
            }
        };
        found.ok_or_else(|| Error::NoSuchEdge(sel.to_string()))
    }

    /// `G - e`. Edge ids above `e` shift down by one. Fails if `G - e` is
    /// disconnected.
    pub fn without_edge(&self, e: EdgeId) -> Result<Graph> {
        if e >= self.size() {
            return Err(Error::NoSuchEdge(format!("index={e}")));
        }
        if self.spec.deletion.is_some() || self.spec.addition.is_some() {
            return Err(Error::domain(
                self.spec.family.tag(),
                "only one edge modification is supported",
            ));
        }
        let mut spec = self.spec.clone();
        spec.deletion = Some(EdgeSelector::Index(e));
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != e)
            .map(|(_, &uv)| uv)
            .collect();
        Graph::from_parts(spec, self.roles.clone(), edges)
    }

    /// `G + uv`, with the new edge appended last.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if u >= self.order() || v >= self.order() || u == v {
            return Err(Error::NotSimple(format!("cannot add edge ({u}, {v})")));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(
                self.roles[u].to_string(),
                self.roles[v].to_string(),
            ));
        }
        if self.spec.deletion.is_some() || self.spec.addition.is_some() {
            return Err(Error::domain(
                self.spec.family.tag(),
                "only one edge modification is supported",
            ));
        }
        let mut spec = self.spec.clone();
        spec.addition = Some((self.roles[u], self.roles[v]));
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::from_parts(spec, self.roles.clone(), edges)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.order()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// The two sides of the (unique, since connected) bipartition, or `None`
    /// when the graph has an odd cycle. The side containing vertex 0 is first.
    pub fn bipartition(&self) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.neighbors[v] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
        let a = (0..n).filter(|&v| side[v] == 0).collect();
        let b = (0..n).filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    pub fn chromatic_number(&self) -> Result<usize> {
        self.chromatic_number_with_guard(CHROMATIC_GUARD)
    }

    /// Exact chromatic number by saturation-ordered backtracking.
    pub fn chromatic_number_with_guard(&self, max_order: usize) -> Result<usize> {
        if self.order() > max_order {
            return Err(Error::SizeGuard(format!(
                "chromatic number needs |V| <= {max_order}, got {}",
                self.order()
            )));
        }
        if self.bipartition().is_some() {
            return Ok(2);
        }
        let adj = self.adjacency_matrix();
        let mut k = 3;
        loop {
            let mut colors = vec![usize::MAX; self.order()];
            if colorable(&adj, &mut colors, k, 0) {
                return Ok(k);
            }
            k += 1;
        }
    }

    pub(crate) fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }
}

fn colorable(adj: &[Vec<bool>], colors: &mut [usize], k: usize, used: usize) -> bool {
    let n = colors.len();
    // pick the uncolored vertex with the most distinct neighbour colors
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut mask = 0u64;
        let mut deg = 0;
        for w in 0..n {
            if adj[v][w] {
                deg += 1;
                if colors[w] != usize::MAX {
                    mask |= 1 << colors[w];
                }
            }
        }
        let sat = mask.count_ones() as usize;
        if best.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
            best = Some((v, sat, deg));
        }
    }
    let Some((v, _, _)) = best else {
        return true;
    };
    let limit = k.min(used + 1);
    for c in 0..limit {
        if (0..n).any(|w| adj[v][w] && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if colorable(adj, colors, k, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

struct Builder {
    roles: Vec<VertexRole>,
    index: HashMap<VertexRole, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            roles: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, r: VertexRole) {
        self.index.insert(r, self.roles.len());
        self.roles.push(r);
    }

    fn edge(&mut self, a: VertexRole, b: VertexRole) {
        self.edges.push((self.index[&a], self.index[&b]));
    }

    fn cycle_vertices(&mut self, m: usize) {
        (1..=m).for_each(|i| self.vertex(VertexRole::Cycle(i)));
    }

    fn apex_vertices(&mut self, n: usize) {
        (1..=n).for_each(|j| self.vertex(VertexRole::Apex(j)));
    }

    fn cycle_edges(&mut self, m: usize) {
        for i in 1..=m {
            self.edge(VertexRole::Cycle(i), VertexRole::Cycle(i % m + 1));
        }
    }

    fn join_edges(&mut self, rows: impl Iterator<Item = usize>, n: usize) {
        for i in rows {
            for j in 1..=n {
                self.edge(VertexRole::Cycle(i), VertexRole::Apex(j));
            }
        }
    }
}

fn require(ok: bool, family: Family, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::domain(family.tag(), reason))
    }
}

fn params<const N: usize>(spec: &FamilySpec) -> Result<[usize; N]> {
    spec.params.as_slice().try_into().map_err(|_| {
        Error::domain(
            spec.family.tag(),
            format!("expected {N} parameter(s), got {}", spec.params.len()),
        )
    })
}

/// Builds the exact graph described by `spec`, applying its edge
/// modification if any.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    let family = spec.family;
    let mut b = Builder::new();
    match family {
        Family::Cycle => {
            let [m] = params(spec)?;
            require(m >= 3, family, "need m >= 3")?;
            b.cycle_vertices(m);
            b.cycle_edges(m);
        }
        Family::Path => {
            let [m] = params(spec)?;
            require(m >= 3, family, "need m >= 3")?;
            b.cycle_vertices(m);
            for i in 1..m {
                b.edge(VertexRole::Cycle(i), VertexRole::Cycle(i + 1));
            }
        }
        Family::Complete => {
            let [n] = params(spec)?;
            require(n >= 3, family, "need n >= 3")?;
            (1..=n).for_each(|i| b.vertex(VertexRole::Plain(i)));
            for i in 1..=n {
                for j in i + 1..=n {
                    b.edge(VertexRole::Plain(i), VertexRole::Plain(j));
                }
            }
        }
        Family::CompleteBipartite => {
            let [m, n] = params(spec)?;
            require(m >= 1 && n >= 1 && m + n >= 3, family, "need m, n >= 1 and m + n >= 3")?;
            b.cycle_vertices(m);
            b.apex_vertices(n);
            b.join_edges(1..=m, n);
        }
        Family::JoinWithEmpty | Family::JoinWithCycle | Family::JoinWithComplete => {
            let [m, n] = params(spec)?;
            require(m >= 3, family, "need m >= 3")?;
            require(n >= 1, family, "need n >= 1")?;
            if family == Family::JoinWithCycle {
                require(n >= 3, family, "need n >= 3")?;
            }
            b.cycle_vertices(m);
            b.apex_vertices(n);
            b.cycle_edges(m);
            b.join_edges(1..=m, n);
            if family == Family::JoinWithCycle {
                for j in 1..=n {
                    b.edge(VertexRole::Apex(j), VertexRole::Apex(j % n + 1));
                }
            }
            if family == Family::JoinWithComplete {
                for i in 1..=n {
                    for j in i + 1..=n {
                        b.edge(VertexRole::Apex(i), VertexRole::Apex(j));
                    }
                }
            }
        }
        Family::Wheel => {
            let [m] = params(spec)?;
            require(m >= 3, family, "need m >= 3")?;
            b.cycle_vertices(m);
            b.apex_vertices(1);
            b.cycle_edges(m);
            b.join_edges(1..=m, 1);
        }
        Family::MobiusLadder => {
            let [n] = params(spec)?;
            require(n >= 2, family, "need n >= 2")?;
            b.cycle_vertices(n);
            b.apex_vertices(n);
            // C_2n = u_1 ... u_n v_1 ... v_n u_1, then the rungs u_i v_i
            for i in 1..n {
                b.edge(VertexRole::Cycle(i), VertexRole::Cycle(i + 1));
            }
            b.edge(VertexRole::Cycle(n), VertexRole::Apex(1));
            for i in 1..n {
                b.edge(VertexRole::Apex(i), VertexRole::Apex(i + 1));
            }
            b.edge(VertexRole::Apex(n), VertexRole::Cycle(1));
            for i in 1..=n {
                b.edge(VertexRole::Cycle(i), VertexRole::Apex(i));
            }
        }
        Family::MobiusJoinEmpty => {
            let [n, k] = params(spec)?;
            require(n >= 2, family, "need n >= 2")?;
            require(k >= 1, family, "need k >= 1")?;
            b.cycle_vertices(2 * n);
            b.apex_vertices(k);
            b.cycle_edges(2 * n);
            for i in 1..=n {
                b.edge(VertexRole::Cycle(i), VertexRole::Cycle(i + n));
            }
            b.join_edges(1..=2 * n, k);
        }
        Family::PathJoinEmpty => {
            let [m, n] = params(spec)?;
            require(m >= 2, family, "need m >= 2")?;
            require(n >= 1, family, "need n >= 1")?;
            b.cycle_vertices(m);
            b.apex_vertices(n);
            for i in 1..m {
                b.edge(VertexRole::Cycle(i), VertexRole::Cycle(i + 1));
            }
            b.join_edges(1..=m, n);
        }
        Family::Gmn => {
            let [m, n] = params(spec)?;
            require(m >= 3, family, "need m >= 3")?;
            require(n >= 1, family, "need n >= 1")?;
            b.cycle_vertices(m);
            b.apex_vertices(n);
            b.cycle_edges(m);
            b.join_edges(1..m, n);
        }
        Family::Bseq => {
            let sizes = &spec.params;
            let m = sizes.len();
            require(m >= 2, family, "need at least 2 blocks")?;
            require(sizes.iter().all(|&n| n >= 1), family, "block sizes must be >= 1")?;
            (1..=m).for_each(|i| b.vertex(VertexRole::Spine(i)));
            for (i, &n) in sizes.iter().enumerate() {
                for j in 1..=n {
                    b.vertex(VertexRole::Leaf(i + 1, j));
                }
            }
            // x_0 is x_m
            let spine = |i: usize| VertexRole::Spine(if i == 0 { m } else { i });
            for (i, &n) in sizes.iter().enumerate() {
                let i = i + 1;
                for j in 1..=n {
                    b.edge(spine(i - 1), VertexRole::Leaf(i, j));
                    b.edge(spine(i), VertexRole::Leaf(i, j));
                }
            }
        }
        Family::Custom => {
            return Err(Error::domain(
                "custom",
                "custom graphs are built from an explicit edge list",
            ))
        }
    }
    let mut base_spec = spec.clone();
    base_spec.deletion = None;
    base_spec.addition = None;
    let mut g = Graph::from_parts(base_spec, b.roles, b.edges)?;
    if let Some(sel) = spec.deletion {
        let e = g.select_edge(sel)?;
        g = g.without_edge(e)?;
        g.spec.deletion = Some(sel);
    }
    if let Some((ru, rv)) = spec.addition {
        let u = g
            .vertex(ru)
            .ok_or_else(|| Error::Parse(format!("no vertex {ru}")))?;
        let v = g
            .vertex(rv)
            .ok_or_else(|| Error::Parse(format!("no vertex {rv}")))?;
        g = g.with_edge(u, v)?;
    }
    Ok(g)
}

/// Wire form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: String,
    pub params: Vec<usize>,
    pub deleted: Option<EdgeSelector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub added: Option<[String; 2]>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            family: self.spec.family.tag().to_string(),
            params: self.spec.params.clone(),
            deleted: self.spec.deletion,
            added: self
                .spec
                .addition
                .map(|(u, v)| [u.to_string(), v.to_string()]),
            vertices: self.roles.iter().map(|r| r.to_string()).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Rebuilds a graph from its wire form. For named families the explicit
    /// vertex and edge lists must agree with a fresh `build` of the family spec.
    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let family: Family = json.family.parse()?;
        let mut spec = FamilySpec::new(family, json.params.clone());
        spec.deletion = json.deleted;
        if let Some([u, v]) = &json.added {
            spec.addition = Some((u.parse()?, v.parse()?));
        }
        let roles = json
            .vertices
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<VertexRole>>>()?;
        let edges = json.edges.iter().map(|&[a, b]| (a, b)).collect();
        let g = Graph::from_parts(spec.clone(), roles, edges)?;
        if family != Family::Custom {
            let rebuilt = build(&spec)?;
            if rebuilt != g {
                return Err(Error::Mismatch(format!(
                    "vertex/edge lists do not match family {spec}"
                )));
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn gmn_edge_count() {
        let g = build(&FamilySpec::gmn(4, 2)).unwrap();
        assert_eq!(g.size(), 4 + 3 * 2);
        assert_eq!(g.order(), 6);
        let u4 = g.vertex(VertexRole::Cycle(4)).unwrap();
        assert_eq!(g.degree(u4), 2);
    }

    #[test]
    fn mobius_four_is_k4() {
        let g = build(&FamilySpec::mobius(2)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(g.chromatic_number().unwrap(), 4);
    }

    #[test]
    fn mobius_six_edge_order_follows_cycle_then_rungs() {
        let g = build(&FamilySpec::mobius(3)).unwrap();
        let names: Vec<String> = (0..g.size()).map(|e| g.edge_name(e)).collect();
        assert_eq!(
            names,
            ["u1u2", "u2u3", "u3v1", "v1v2", "v2v3", "v3u1", "u1v1", "u2v2", "u3v3"]
        );
    }

    #[test]
    fn wheel_three_minus_spoke_is_k112() {
        let g = build(&FamilySpec::wheel(3).with_deletion(EdgeSelector::Spoke(1))).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!(degrees(&g), vec![2, 2, 3, 3]);
        // the two degree-3 vertices are adjacent, the two degree-2 ones are not
        let big: Vec<_> = (0..4).filter(|&v| g.degree(v) == 3).collect();
        let small: Vec<_> = (0..4).filter(|&v| g.degree(v) == 2).collect();
        assert!(g.has_edge(big[0], big[1]));
        assert!(!g.has_edge(small[0], small[1]));
    }

    #[test]
    fn closed_form_edge_counts() {
        for m in 3..8 {
            for n in 1..6 {
                assert_eq!(build(&FamilySpec::join_empty(m, n)).unwrap().size(), m * n + m);
                assert_eq!(
                    build(&FamilySpec::gmn(m, n)).unwrap().size(),
                    m + (m - 1) * n
                );
            }
        }
        for n in 2..8 {
            assert_eq!(build(&FamilySpec::mobius(n)).unwrap().size(), 3 * n);
        }
        for n in 1..5 {
            for m in 2..6 {
                assert_eq!(build(&FamilySpec::b_uniform(n, m)).unwrap().size(), 2 * m * n);
            }
        }
    }

    #[test]
    fn join_degree_sequence() {
        let (m, n) = (5, 3);
        let g = build(&FamilySpec::join_empty(m, n)).unwrap();
        for v in 0..g.order() {
            match g.role(v) {
                VertexRole::Cycle(_) => assert_eq!(g.degree(v), n + 2),
                VertexRole::Apex(_) => assert_eq!(g.degree(v), m),
                r => panic!("unexpected role {r}"),
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        let chi = |s: FamilySpec| build(&s).unwrap().chromatic_number().unwrap();
        assert_eq!(chi(FamilySpec::join_empty(3, 3)), 4);
        assert_eq!(chi(FamilySpec::join_empty(4, 2)), 3);
        assert_eq!(chi(FamilySpec::join_cycle(3, 3)), 6);
        assert_eq!(chi(FamilySpec::join_complete(5, 3)), 6);
        assert_eq!(chi(FamilySpec::wheel(5)), 4);
        assert_eq!(chi(FamilySpec::gmn(6, 3)), 3);
        assert_eq!(chi(FamilySpec::complete(6)), 6);
    }

    #[test]
    fn chromatic_guard() {
        let g = build(&FamilySpec::join_empty(30, 15)).unwrap();
        assert!(matches!(g.chromatic_number(), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn regularity() {
        assert_eq!(build(&FamilySpec::mobius(3)).unwrap().is_regular(), Some(3));
        assert_eq!(build(&FamilySpec::wheel(4)).unwrap().is_regular(), None);
        assert_eq!(build(&FamilySpec::complete(4)).unwrap().is_regular(), Some(3));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            build(&FamilySpec::mobius(1)),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(build(&FamilySpec::gmn(2, 1)), Err(Error::Domain { .. })));
        assert!(matches!(
            build(&FamilySpec::new(Family::Gmn, [4])),
            Err(Error::Domain { .. })
        ));
        let missing = FamilySpec::wheel(4).with_deletion(EdgeSelector::Join(2, 3));
        assert!(matches!(build(&missing), Err(Error::NoSuchEdge(_))));
    }

    #[test]
    fn deleting_a_bridge_is_rejected() {
        let g = build(&FamilySpec::path(3)).unwrap();
        assert_eq!(g.without_edge(0), Err(Error::Disconnected));
    }

    #[test]
    fn invalid_custom_graphs() {
        assert!(matches!(Graph::custom(3, &[(0, 0), (1, 2)]), Err(Error::NotSimple(_))));
        assert!(matches!(
            Graph::custom(3, &[(0, 1), (1, 0), (1, 2)]),
            Err(Error::NotSimple(_))
        ));
        assert_eq!(Graph::custom(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert_eq!(Graph::custom(2, &[(0, 1)]), Err(Error::TooSmall(2)));
    }

    #[test]
    fn spec_round_trips_through_text() {
        for s in ["wheel:4:spoke=1", "gmn:6,3", "b:3,3,3", "cycle-join-empty:4,2:join=1,2"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let added: FamilySpec = "gmn:4,2:add=u2,u4".parse().unwrap();
        assert_eq!(
            added.addition,
            Some((VertexRole::Cycle(2), VertexRole::Cycle(4)))
        );
    }

    #[test]
    fn json_rejects_lists_that_disagree_with_family() {
        let g = build(&FamilySpec::wheel(4)).unwrap();
        let mut json = g.to_json();
        assert_eq!(Graph::from_json(&json).unwrap(), g);
        json.edges.swap(0, 1);
        assert!(matches!(Graph::from_json(&json), Err(Error::Mismatch(_))));
    }

    #[test]
    fn b_blocks_share_spine_vertices() {
        let g = build(&FamilySpec::b_uniform(2, 3)).unwrap();
        // x_0 = x_3 closes the chain
        let x3 = g.vertex(VertexRole::Spine(3)).unwrap();
        let y11 = g.vertex(VertexRole::Leaf(1, 1)).unwrap();
        assert!(g.has_edge(x3, y11));
        for v in 0..g.order() {
            let expect = if matches!(g.role(v), VertexRole::Spine(_)) { 4 } else { 2 };
            assert_eq!(g.degree(v), expect);
        }
    }
}
