//! Exact and heuristic computation of the local antimagic chromatic number.

mod bounds;
mod exact;
mod witness;

use std::sync::Arc;

pub use bounds::{geo_rule_g2m, lower_bound, GeoRegime, GeoVerdict, LowerBound, Rule, RuleApplication};
pub use witness::{search_witness, WitnessSearch};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{verify, EdgeLabeling, LabelingCertificate, Provenance};
use exact::{search_level, LevelOutcome};

/// Largest edge count the exact search accepts.
pub const MAX_EXACT_SIZE: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOptions {
    /// Node budget for each target level, split evenly across root branches.
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Seed for the fallback local search after a budget runs out.
    pub seed: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: 50_000_000,
            jobs: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// The exact value when `exhaustive`, otherwise an upper bound.
    pub chi_la: usize,
    pub witness: LabelingCertificate,
    pub lower_bound: usize,
    pub lower_bound_trace: Vec<RuleApplication>,
    pub exhaustive: bool,
    pub nodes: u64,
}

/// Computes `χ_la(g)` by refuting each color count from the lower bound up
/// until a labeling is found.
///
/// When the budget runs out at some level, a seeded local search supplies
/// the best upper bound it can and the result is marked non-exhaustive.
pub fn solve_exact(g: &Arc<Graph>, options: &SolverOptions) -> Result<SolveResult> {
    if g.size() > MAX_EXACT_SIZE {
        return Err(Error::SizeGuard(format!(
            "exact search supports at most {MAX_EXACT_SIZE} edges, got {}",
            g.size()
        )));
    }
    match options.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::SizeGuard(e.to_string()))?
            .install(|| solve_inner(g, options)),
        None => solve_inner(g, options),
    }
}

fn solve_inner(g: &Arc<Graph>, options: &SolverOptions) -> Result<SolveResult> {
    let lb = lower_bound(g);
    let mut trace = lb.trace.clone();
    let regular = g.is_regular().is_some();
    let mut nodes = 0;
    let mut target = lb.value;
    loop {
        let level = search_level(g, target, options.budget, regular);
        nodes += level.nodes;
        match level.outcome {
            LevelOutcome::Found(labels) => {
                let f = EdgeLabeling::new(g.clone(), labels)?;
                let witness = verify(&f, Provenance::Searched).require_valid()?;
                let chi_la = witness.color_count();
                if target > lb.value {
                    trace.push(RuleApplication {
                        rule: Rule::Exhaustion,
                        bound: target,
                        detail: format!("no labeling with at most {} colors", target - 1),
                    });
                }
                return Ok(SolveResult {
                    chi_la,
                    witness,
                    lower_bound: chi_la,
                    lower_bound_trace: trace,
                    exhaustive: true,
                    nodes,
                });
            }
            LevelOutcome::Refuted => target += 1,
            LevelOutcome::Exhausted => {
                let proven = target;
                if proven > lb.value {
                    trace.push(RuleApplication {
                        rule: Rule::Exhaustion,
                        bound: proven,
                        detail: format!("no labeling with at most {} colors", proven - 1),
                    });
                }
                for t in target..=g.order() {
                    if let Some(witness) = search_witness(g, t, options.seed) {
                        return Ok(SolveResult {
                            chi_la: witness.color_count(),
                            witness,
                            lower_bound: proven,
                            lower_bound_trace: trace,
                            exhaustive: false,
                            nodes,
                        });
                    }
                }
                return Err(Error::BudgetExhausted {
                    nodes,
                    lower_bound: proven,
                });
            }
        }
        if target > g.order() {
            return Err(Error::WitnessUnavailable(
                "graph has no local antimagic labeling".into(),
            ));
        }
    }
}
