//! Lower bounds, including the inequality test for G(2m, 2n-1).

use lacn::solver::{geo_rule_g2m, lower_bound};
use lacn::{build, EdgeSelector, FamilySpec};

fn main() -> lacn::Result<()> {
    for spec in [
        FamilySpec::gmn(12, 5),
        FamilySpec::gmn(8, 3),
        FamilySpec::wheel(9).with_deletion(EdgeSelector::Spoke(1)),
        FamilySpec::mobius(5),
    ] {
        let lb = lower_bound(&build(&spec)?);
        println!("{:<22} >= {}", spec.to_string(), lb.value);
    }

    println!("\nimpossible three-coloring of G(2m, 2n-1), n across, m down");
    print!("    ");
    for n in 2..=8 {
        print!("{n:>3}");
    }
    println!();
    for m in 2..=12 {
        print!("{m:>3} ");
        for n in 2..=8 {
            let v = geo_rule_g2m(m, n)?;
            print!("{:>3}", if v.impossible { "x" } else { "." });
        }
        println!();
    }
    Ok(())
}
