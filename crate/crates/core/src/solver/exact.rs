//! Branch and bound over label assignments for a fixed color target.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::Graph;

/// Outcome of searching one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LevelOutcome {
    Found(Vec<u32>),
    Refuted,
    Exhausted,
}

#[derive(Debug, Clone)]
pub(crate) struct LevelResult {
    pub outcome: LevelOutcome,
    pub nodes: u64,
}

/// Edge order for the search: each step takes the edge that completes a
/// vertex soonest, so ties and color overflow are detected high in the tree.
pub(crate) fn edge_order(g: &Graph) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut placed = vec![false; g.size()];
    let mut order = Vec::with_capacity(g.size());
    for _ in 0..g.size() {
        let e = (0..g.size())
            .filter(|&e| !placed[e])
            .min_by_key(|&e| {
                let (a, b) = g.edge(e);
                let (x, y) = (remaining[a], remaining[b]);
                (x.min(y), x + y, e)
            })
            .unwrap();
        placed[e] = true;
        let (a, b) = g.edge(e);
        remaining[a] -= 1;
        remaining[b] -= 1;
        order.push(e);
    }
    order
}

struct Problem<'a> {
    g: &'a Graph,
    q: u32,
    order: Vec<usize>,
    /// Vertices whose last incident edge sits at each position.
    completes: Vec<Vec<usize>>,
    target: usize,
    budget: u64,
}

struct State {
    labels: Vec<u32>,
    sums: Vec<u64>,
    remaining: Vec<usize>,
    used: u64,
    colors: Vec<(u64, u32)>,
    done: Vec<bool>,
    nodes: u64,
}

enum Step {
    Found,
    Continue,
    Abort,
}

impl<'a> Problem<'a> {
    fn new(g: &'a Graph, target: usize, budget: u64) -> Self {
        let order = edge_order(g);
        let mut completes = vec![Vec::new(); order.len()];
        let mut remaining: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        for (pos, &e) in order.iter().enumerate() {
            let (a, b) = g.edge(e);
            for v in [a, b] {
                remaining[v] -= 1;
                if remaining[v] == 0 {
                    completes[pos].push(v);
                }
            }
        }
        Problem {
            g,
            q: g.size() as u32,
            order,
            completes,
            target,
            budget,
        }
    }

    fn fresh_state(&self) -> State {
        let g = self.g;
        State {
            labels: vec![0; g.size()],
            sums: vec![0; g.order()],
            remaining: (0..g.order()).map(|v| g.degree(v)).collect(),
            used: 0,
            colors: Vec::new(),
            done: vec![false; g.order()],
            nodes: 0,
        }
    }

    /// Smallest and largest sum of `k` unused labels.
    fn range(&self, used: u64, k: usize) -> (u64, u64) {
        let (mut lo, mut hi) = (0u64, 0u64);
        let mut taken = 0;
        for l in 1..=self.q {
            if taken == k {
                break;
            }
            if used & (1 << l) == 0 {
                lo += l as u64;
                taken += 1;
            }
        }
        taken = 0;
        for l in (1..=self.q).rev() {
            if taken == k {
                break;
            }
            if used & (1 << l) == 0 {
                hi += l as u64;
                taken += 1;
            }
        }
        (lo, hi)
    }

    /// Once all `target` colors are in use, every open vertex must still be
    /// able to reach one of them.
    fn reachable(&self, s: &State, v: usize) -> bool {
        if s.colors.len() < self.target {
            return true;
        }
        let (lo, hi) = self.range(s.used, s.remaining[v]);
        let (lo, hi) = (s.sums[v] + lo, s.sums[v] + hi);
        s.colors.iter().any(|&(c, _)| lo <= c && c <= hi)
    }

    fn assign(&self, s: &mut State, pos: usize, l: u32) -> bool {
        let e = self.order[pos];
        let (a, b) = self.g.edge(e);
        s.labels[e] = l;
        s.used |= 1 << l;
        for v in [a, b] {
            s.sums[v] += l as u64;
            s.remaining[v] -= 1;
        }
        let mut ok = true;
        for &v in &self.completes[pos] {
            s.done[v] = true;
            let c = s.sums[v];
            if self.g.neighbors(v).iter().any(|&w| s.done[w] && s.sums[w] == c) {
                ok = false;
            }
            match s.colors.iter_mut().find(|(x, _)| *x == c) {
                Some(slot) => slot.1 += 1,
                None => s.colors.push((c, 1)),
            }
        }
        if !ok || s.colors.len() > self.target {
            return false;
        }
        if s.colors.len() == self.target {
            (0..self.g.order()).all(|v| s.done[v] || self.reachable(s, v))
        } else {
            true
        }
    }

    fn unassign(&self, s: &mut State, pos: usize, l: u32) {
        let e = self.order[pos];
        let (a, b) = self.g.edge(e);
        for &v in self.completes[pos].iter().rev() {
            let c = s.sums[v];
            let i = s.colors.iter().position(|(x, _)| *x == c).unwrap();
            s.colors[i].1 -= 1;
            if s.colors[i].1 == 0 {
                s.colors.remove(i);
            }
            s.done[v] = false;
        }
        for v in [a, b] {
            s.sums[v] -= l as u64;
            s.remaining[v] += 1;
        }
        s.used &= !(1 << l);
        s.labels[e] = 0;
    }

    fn dfs(&self, s: &mut State, pos: usize, stop: &dyn Fn() -> bool) -> Step {
        if pos == self.order.len() {
            return Step::Found;
        }
        for l in 1..=self.q {
            if s.used & (1 << l) != 0 {
                continue;
            }
            s.nodes += 1;
            if s.nodes > self.budget || (s.nodes & 0xfff == 0 && stop()) {
                return Step::Abort;
            }
            if self.assign(s, pos, l) {
                match self.dfs(s, pos + 1, stop) {
                    Step::Continue => {}
                    other => return other,
                }
            }
            self.unassign(s, pos, l);
        }
        Step::Continue
    }
}

/// Decides whether some labeling of `g` uses at most `target` colors.
///
/// The first edge of the search order is fixed per branch and branches run
/// in parallel. Each branch gets an equal share of `budget` nodes, so the
/// outcome does not depend on scheduling. When several branches succeed the
/// one with the smallest first label wins.
pub(crate) fn search_level(g: &Graph, target: usize, budget: u64, regular: bool) -> LevelResult {
    let problem = Problem::new(g, target, budget);
    let q = problem.q;
    let roots: Vec<u32> = if regular {
        (1..=q.div_ceil(2)).collect()
    } else {
        (1..=q).collect()
    };
    let share = (budget / roots.len() as u64).max(1);
    let problem = Problem { budget: share, ..problem };
    let best = AtomicUsize::new(usize::MAX);

    let results: Vec<(LevelOutcome, u64)> = roots
        .par_iter()
        .enumerate()
        .map(|(i, &l)| {
            let stop = || best.load(Ordering::Relaxed) < i;
            let mut s = problem.fresh_state();
            s.nodes = 1;
            if !problem.assign(&mut s, 0, l) {
                return (LevelOutcome::Refuted, s.nodes);
            }
            match problem.dfs(&mut s, 1, &stop) {
                Step::Found => {
                    best.fetch_min(i, Ordering::Relaxed);
                    (LevelOutcome::Found(s.labels), s.nodes)
                }
                Step::Continue => (LevelOutcome::Refuted, s.nodes),
                Step::Abort => (LevelOutcome::Exhausted, s.nodes),
            }
        })
        .collect();

    let mut nodes = 0;
    let mut exhausted = false;
    for (outcome, n) in results {
        nodes += n;
        match outcome {
            LevelOutcome::Found(labels) => {
                return LevelResult {
                    outcome: LevelOutcome::Found(labels),
                    nodes,
                }
            }
            LevelOutcome::Exhausted => exhausted = true,
            LevelOutcome::Refuted => {}
        }
    }
    LevelResult {
        outcome: if exhausted {
            LevelOutcome::Exhausted
        } else {
            LevelOutcome::Refuted
        },
        nodes,
    }
}
