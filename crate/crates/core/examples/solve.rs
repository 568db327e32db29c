//! Computes chromatic numbers of small graphs exactly.

use std::sync::Arc;

use lacn::solver::{solve_exact, SolverOptions};
use lacn::{build, EdgeSelector, FamilySpec};

fn main() -> lacn::Result<()> {
    let specs = [
        FamilySpec::wheel(4).with_deletion(EdgeSelector::Spoke(1)),
        FamilySpec::wheel(4).with_deletion(EdgeSelector::Cycle(1)),
        FamilySpec::complete(5),
        FamilySpec::mobius(4),
        FamilySpec::complete_bipartite(2, 3),
    ];
    for spec in specs {
        let g = Arc::new(build(&spec)?);
        let r = solve_exact(&g, &SolverOptions::default())?;
        println!(
            "{:<24} chi_la = {} (exhaustive: {}, {} nodes)",
            spec.to_string(),
            r.chi_la,
            r.exhaustive,
            r.nodes
        );
        for step in &r.lower_bound_trace {
            println!("    {:?} >= {}: {}", step.rule, step.bound, step.detail);
        }
    }
    Ok(())
}
