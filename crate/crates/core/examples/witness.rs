//! Finds 3-color labelings of small G(m, n) by seeded local search.

use std::sync::Arc;

use lacn::solver::WitnessSearch;
use lacn::{build, FamilySpec};

fn main() -> lacn::Result<()> {
    for (m, n) in [(5, 2), (6, 2), (6, 3), (8, 3)] {
        let g = Arc::new(build(&FamilySpec::gmn(m, n))?);
        let search = WitnessSearch::new(3, 7);
        let found = (0..40).find_map(|seed| WitnessSearch { seed, ..search }.run(&g));
        match found {
            Some(c) => println!("G({m},{n}): {:?}", c.coloring.histogram()),
            None => println!("G({m},{n}): nothing within the step budget"),
        }
    }
    Ok(())
}
