//! Complements a labeling and carries labelings across edge deletion and addition.

use lacn::constructions::{construct_c2m_o2n, construct_g4n, construct_mobius_odd};
use lacn::transforms::{add_edge_shift, complement_regular, delete_edge_shift};
use lacn::{verify, Provenance, VertexRole};

fn main() -> lacn::Result<()> {
    let f = construct_mobius_odd(5)?;
    let g = complement_regular(&f.labeling)?;
    let c = verify(&g, Provenance::Transformed("complement".into()));
    println!("M_10: {:?} -> complement {:?}", f.coloring.histogram(), c.coloring.histogram());

    let f = construct_c2m_o2n(3, 2)?;
    let e = f.labeling.edge_with_label(1).unwrap();
    let g = delete_edge_shift(&f.labeling, e)?;
    let c = verify(&g, Provenance::Transformed("delete-edge-shift".into()));
    println!(
        "{} minus {}: valid {}, {} colors",
        f.graph().spec(),
        f.graph().edge_name(e),
        c.valid,
        c.color_count()
    );

    let f = construct_g4n(4)?;
    let graph = f.graph();
    let u2 = graph.vertex(VertexRole::Cycle(2)).unwrap();
    let u4 = graph.vertex(VertexRole::Cycle(4)).unwrap();
    let g = add_edge_shift(&f.labeling, u2, u4)?;
    let c = verify(&g, Provenance::Transformed("add-edge-shift".into()));
    println!(
        "G(4,4) plus u2u4: valid {}, colors {:?}",
        c.valid,
        c.coloring.histogram()
    );
    Ok(())
}
