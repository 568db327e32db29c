//! Randomized local search for labelings with few colors.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::labeling::{verify, EdgeLabeling, LabelingCertificate, Provenance};

/// Settings for [`WitnessSearch::run`]. The total step count is
/// `restarts * steps_per_restart`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessSearch {
    pub target: usize,
    pub restarts: usize,
    pub steps_per_restart: u64,
    pub seed: u64,
    /// Annealing temperature for uphill swaps.
    pub temperature: f64,
}

impl WitnessSearch {
    pub fn new(target: usize, seed: u64) -> Self {
        WitnessSearch {
            target,
            restarts: 10,
            steps_per_restart: 100_000,
            seed,
            temperature: 0.6,
        }
    }

    /// Returns a valid labeling with at most `target` colors, or `None` when
    /// the step budget runs out.
    pub fn run(&self, g: &Arc<Graph>) -> Option<LabelingCertificate> {
        let q = g.size();
        for attempt in 0..self.restarts {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ (attempt as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut labels: Vec<u32> = (1..=q as u32).collect();
            labels.shuffle(&mut rng);
            let mut st = LocalState::new(g, labels, self.target);
            if st.cost() == 0 {
                return Some(st.certificate(g));
            }
            for _ in 0..self.steps_per_restart {
                let a = rng.gen_range(0..q);
                let b = rng.gen_range(0..q);
                if a == b {
                    continue;
                }
                let before = st.cost();
                st.swap(a, b);
                let after = st.cost();
                if after == 0 {
                    return Some(st.certificate(g));
                }
                if after > before && !rng.gen_bool((-((after - before) as f64) / self.temperature).exp()) {
                    st.swap(a, b);
                }
            }
        }
        None
    }
}

/// Local search with ten restarts of `10^5` steps each.
pub fn search_witness(g: &Arc<Graph>, target: usize, seed: u64) -> Option<LabelingCertificate> {
    WitnessSearch::new(target, seed).run(g)
}

struct LocalState<'a> {
    g: &'a Graph,
    labels: Vec<u32>,
    sums: Vec<u64>,
    counts: HashMap<u64, usize>,
    ties: usize,
    target: usize,
}

impl<'a> LocalState<'a> {
    fn new(g: &'a Graph, labels: Vec<u32>, target: usize) -> Self {
        let mut sums = vec![0u64; g.order()];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            sums[a] += labels[e] as u64;
            sums[b] += labels[e] as u64;
        }
        let mut counts = HashMap::new();
        for &s in &sums {
            *counts.entry(s).or_insert(0) += 1;
        }
        let ties = g.edges().iter().filter(|&&(a, b)| sums[a] == sums[b]).count();
        LocalState {
            g,
            labels,
            sums,
            counts,
            ties,
            target,
        }
    }

    /// Adjacent ties plus, for every vertex outside the `target` largest
    /// color classes, its distance to the nearest of those classes.
    fn cost(&self) -> u64 {
        let mut classes: Vec<(usize, u64)> = self.counts.iter().map(|(&c, &k)| (k, c)).collect();
        let excess = if classes.len() > self.target {
            classes.sort_unstable_by(|a, b| b.cmp(a));
            let centers = &classes[..self.target];
            classes[self.target..]
                .iter()
                .map(|&(k, c)| {
                    let d = centers.iter().map(|&(_, x)| x.abs_diff(c)).min().unwrap();
                    k as u64 * d
                })
                .sum()
        } else {
            0
        };
        8 * self.ties as u64 + excess
    }

    fn adjust(&mut self, v: usize, delta: i64) {
        let old = self.sums[v];
        let c = self.counts.get_mut(&old).unwrap();
        *c -= 1;
        if *c == 0 {
            self.counts.remove(&old);
        }
        let new = (old as i64 + delta) as u64;
        self.sums[v] = new;
        *self.counts.entry(new).or_insert(0) += 1;
    }

    fn swap(&mut self, e1: usize, e2: usize) {
        let d = self.labels[e2] as i64 - self.labels[e1] as i64;
        let (a1, b1) = self.g.edge(e1);
        let (a2, b2) = self.g.edge(e2);
        let mut touched = vec![(a1, d), (b1, d), (a2, -d), (b2, -d)];
        touched.sort_unstable();
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(4);
        for (v, x) in touched {
            match merged.last_mut() {
                Some((w, y)) if *w == v => *y += x,
                _ => merged.push((v, x)),
            }
        }
        merged.retain(|&(_, x)| x != 0);
        let ties_at = |st: &Self| -> usize {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for &(v, _) in &merged {
                for &w in st.g.neighbors(v) {
                    if st.sums[w] == st.sums[v] {
                        edges.push((v.min(w), v.max(w)));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            edges.len()
        };
        let before = ties_at(self);
        for &(v, x) in &merged {
            self.adjust(v, x);
        }
        let after = ties_at(self);
        self.ties = self.ties + after - before;
        self.labels.swap(e1, e2);
    }

    fn certificate(&self, g: &Arc<Graph>) -> LabelingCertificate {
        let f = EdgeLabeling::new(g.clone(), self.labels.clone()).expect("swaps keep a bijection");
        verify(&f, Provenance::Searched)
    }
}
