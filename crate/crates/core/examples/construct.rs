//! Builds labelings from the explicit constructions and prints their colors.

use lacn::constructions::{construct, construct_b34_example, TAGS};

fn main() -> lacn::Result<()> {
    for tag in TAGS {
        let cert = construct(tag, Some(3), Some(3))?;
        println!(
            "{:<10} {:<28} {} colors {:?}",
            tag,
            cert.graph().spec().to_string(),
            cert.color_count(),
            cert.coloring.histogram()
        );
    }
    let b = construct_b34_example()?;
    println!("B(3,3,3,3) example: {:?}", b.coloring.histogram());
    Ok(())
}
