mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use lacn::constructions::{
    construct_b34_example, construct_bnm, construct_c2m_o2n, construct_cm_on_odd, construct_g4n,
};
use lacn::solver::{geo_rule_g2m, solve_exact, SolverOptions, WitnessSearch};
use lacn::transforms::{add_edge_shift, complement, complement_regular, delete_edge_shift};
use lacn::{
    build, magic_rectangle, verify, EdgeLabeling, EdgeSelector, FamilySpec, LabelingCertificate,
    Provenance, VertexRole,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

/// Criteria that fail when implemented as written; see the notes on the
/// `(m, 2)` rows in criterion 9.
const KNOWN_FAILURES: &[u32] = &[9];

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn colors(c: &LabelingCertificate) -> BTreeSet<u64> {
    c.coloring.distinct.iter().copied().collect()
}

fn timed(limit: Duration, f: impl FnOnce() -> std::result::Result<(), String>) -> Check {
    let start = Instant::now();
    f()?;
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn c1_join_sweeps() -> Check {
    let a = timed(Duration::from_secs(1), || {
        for m in (3..=11).step_by(2) {
            for n in (3..=11).step_by(2) {
                let c = construct_cm_on_odd(m, n).map_err(|e| e.to_string())?;
                ensure(c.valid && c.color_count() == 4, format!("C_{m} v O_{n}"))?;
            }
        }
        Ok(())
    })?;
    let b = timed(Duration::from_secs(1), || {
        for m in 2..=8u64 {
            for n in 1..=8u64 {
                let c = construct_c2m_o2n(m as usize, n as usize).map_err(|e| e.to_string())?;
                let expected: BTreeSet<u64> = [
                    4 * m * n * n - 4 * m * n + 2 * n + 10 * m - 1,
                    4 * m * n * n + 12 * m * n - 6 * m + 3,
                    4 * m * m * n + 4 * m * m + m,
                ]
                .into();
                ensure(c.valid && colors(&c) == expected, format!("C_{} v O_{}", 2 * m, 2 * n))?;
            }
        }
        Ok(())
    })?;
    Ok(format!("odd sweep {a}, even sweep {b}"))
}

fn c2_four_wheel() -> Check {
    let mut got = Vec::new();
    let t = timed(Duration::from_secs(60), || {
        for sel in [EdgeSelector::Spoke(1), EdgeSelector::Cycle(1)] {
            let g = Arc::new(build(&FamilySpec::wheel(4).with_deletion(sel)).unwrap());
            let r = solve_exact(&g, &SolverOptions::default()).map_err(|e| e.to_string())?;
            ensure(r.exhaustive, "not exhaustive")?;
            got.push(r.chi_la);
        }
        Ok(())
    })?;
    ensure(got == [3, 4], format!("spoke/rim gave {got:?}"))?;
    Ok(format!("spoke 3, rim 4 in {t}"))
}

fn c3_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs: Vec<(String, lacn::Graph)> = common::named_small_graphs()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    for k in 0..24 {
        let n = rng.gen_range(3..=6);
        let q = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(8));
        graphs.push((format!("random #{k}"), common::random_connected(&mut rng, n, q)));
    }
    for (name, g) in &graphs {
        let expected = common::naive_chi_la(g).ok_or(format!("{name}: no labeling"))?;
        let r = solve_exact(&Arc::new(g.clone()), &SolverOptions::default())
            .map_err(|e| e.to_string())?;
        ensure(r.exhaustive && r.chi_la == expected, format!("{name}: {} vs {expected}", r.chi_la))?;
    }
    Ok(format!("{} graphs agree with brute force", graphs.len()))
}

fn c4_witness() -> Check {
    for (m, n) in [(5, 2), (6, 2), (6, 3)] {
        let g = Arc::new(build(&FamilySpec::gmn(m, n)).unwrap());
        let search = WitnessSearch::new(3, 7);
        ensure(search.restarts as u64 * search.steps_per_restart <= 1_000_000, "step budget")?;
        let c = search.run(&g).ok_or(format!("G({m},{n}) not found"))?;
        ensure(c.valid && c.color_count() <= 3, format!("G({m},{n}) bad witness"))?;
    }
    Ok("G(5,2), G(6,2), G(6,3) at seed 7".into())
}

fn c5_transforms() -> Check {
    let mut count = 0;
    for spec in [FamilySpec::mobius(3), FamilySpec::complete(4)] {
        let g = Arc::new(build(&spec).unwrap());
        for seed in 0..100 {
            let f = WitnessSearch::new(g.order(), seed).run(&g).ok_or("search failed")?;
            let h = complement_regular(&f.labeling).map_err(|e| e.to_string())?;
            ensure(complement(&h).labels() == f.labeling.labels(), "not an involution")?;
            let c = verify(&h, Provenance::Transformed("complement".into()));
            ensure(c.valid && c.color_count() == f.color_count(), format!("{spec} seed {seed}"))?;
            count += 1;
        }
    }
    for m in 2..=6 {
        for n in 1..=6 {
            let f = construct_c2m_o2n(m, n).map_err(|e| e.to_string())?;
            let e = f.labeling.edge_with_label(1).ok_or("no unit edge")?;
            let h = delete_edge_shift(&f.labeling, e).map_err(|e| format!("({m},{n}): {e}"))?;
            let c = verify(&h, Provenance::Transformed("delete".into()));
            ensure(c.valid && c.color_count() == f.color_count(), format!("delete ({m},{n})"))?;
            count += 1;
        }
    }
    for n in 2..=6 {
        let f = construct_g4n(n).map_err(|e| e.to_string())?;
        let g = f.graph();
        let u2 = g.vertex(VertexRole::Cycle(2)).unwrap();
        let u4 = g.vertex(VertexRole::Cycle(4)).unwrap();
        let h = add_edge_shift(&f.labeling, u2, u4).map_err(|e| format!("G(4,{n}): {e}"))?;
        let c = verify(&h, Provenance::Transformed("add".into()));
        ensure(c.valid && c.color_count() == f.color_count(), format!("add G(4,{n})"))?;
        count += 1;
    }
    Ok(format!("{count} transformed labelings re-verified"))
}

fn c6_magic() -> Check {
    let mut built = 0;
    for m in 2..=15 {
        for n in 2..=15 {
            match (common::magic_admissible(m, n), magic_rectangle(m, n)) {
                (true, Ok(r)) => {
                    ensure(r.verify(), format!("({m},{n}) fails verification"))?;
                    built += 1;
                }
                (true, Err(e)) => return Err(format!("({m},{n}): {e}")),
                (false, Ok(_)) => return Err(format!("({m},{n}) should be rejected")),
                (false, Err(_)) => {}
            }
        }
    }
    Ok(format!("{built} rectangles, (2,2) and mixed parity rejected"))
}

fn c7_b_family() -> Check {
    let b33 = construct_bnm(3, 3).map_err(|e| e.to_string())?;
    ensure(colors(&b33) == [19, 57].into(), format!("B(3,3,3) gave {:?}", colors(&b33)))?;
    let ex = construct_b34_example().map_err(|e| e.to_string())?;
    ensure(colors(&ex) == [25, 75].into(), format!("example gave {:?}", colors(&ex)))?;
    for n in [2u64, 4, 6] {
        for m in [3u64, 4, 5] {
            let c = construct_bnm(n as usize, m as usize).map_err(|e| e.to_string())?;
            let expected: BTreeSet<u64> = [2 * m * n + 1, 2 * m * n * n + n].into();
            ensure(c.valid && colors(&c) == expected, format!("B({n}^[{m}])"))?;
        }
    }
    Ok("B(3,3,3) {19,57}, example {25,75}, even n closed forms".into())
}

fn c8_certificates() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut count = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(3..=9);
        let q = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(20));
        let g = Arc::new(common::random_connected(&mut rng, n, q));
        let mut labels: Vec<u32> = (1..=q as u32).collect();
        labels.shuffle(&mut rng);
        let c = verify(&EdgeLabeling::new(g, labels).unwrap(), Provenance::Searched);
        let q = q as u64;
        ensure(c.coloring.total() == q * (q + 1), "color sum")?;
        let mut sorted = c.labeling.labels().to_vec();
        sorted.sort_unstable();
        ensure(sorted.iter().copied().eq(1..=q as u32), "not bijective")?;
        count += 1;
    }
    for tag in lacn::constructions::TAGS {
        for m in 1..=7 {
            for n in 1..=7 {
                if let Ok(c) = lacn::constructions::construct(tag, Some(m), Some(n)) {
                    let q = c.labeling.q() as u64;
                    ensure(c.coloring.total() == q * (q + 1), format!("{tag} ({m},{n})"))?;
                    c.check_invariants().map_err(|e| e.to_string())?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} certificates"))
}

fn c9_geo_grid() -> Check {
    let mut expect_impossible: Vec<(usize, usize)> = Vec::new();
    for m in 3..=25 {
        for n in 4..=8 {
            expect_impossible.push((m, n));
        }
    }
    expect_impossible.extend((21..=30).map(|m| (m, 3)));
    expect_impossible.extend((4..=30).map(|m| (m, 2)));
    let mut wrong = Vec::new();
    for &(m, n) in &expect_impossible {
        let v = geo_rule_g2m(m, n).map_err(|e| e.to_string())?;
        ensure(
            v.impossible == common::geo_impossible(m as u64, n as u64),
            format!("rule and oracle disagree at ({m},{n})"),
        )?;
        if !v.impossible {
            wrong.push((m, n));
        }
    }
    for (m, n) in [(2, 4), (20, 3), (3, 2)] {
        let v = geo_rule_g2m(m, n).map_err(|e| e.to_string())?;
        ensure(!v.impossible, format!("({m},{n}) should not be impossible"))?;
    }
    if wrong.is_empty() {
        Ok(format!("{} grid points impossible", expect_impossible.len()))
    } else {
        let only_n2 = wrong.iter().all(|&(_, n)| n == 2);
        Err(format!(
            "{} of {} grid points not impossible{}; first {:?}",
            wrong.len(),
            expect_impossible.len(),
            if only_n2 { ", all with n = 2 (case II never holds for n = 2)" } else { "" },
            wrong[0]
        ))
    }
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Check); 9] = [
        (1, "join constructions sweep", c1_join_sweeps),
        (2, "W_4 minus an edge", c2_four_wheel),
        (3, "exact solver matches brute force", c3_oracle),
        (4, "local search witnesses", c4_witness),
        (5, "transform pipelines", c5_transforms),
        (6, "magic rectangles", c6_magic),
        (7, "B family", c7_b_family),
        (8, "certificate invariants", c8_certificates),
        (9, "geo rule grid", c9_geo_grid),
    ];
    let mut failed = Vec::new();
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(detail) => {
                let known = if KNOWN_FAILURES.contains(&id) { " [known]" } else { "" };
                println!("FAIL {id} {name}: {detail}{known}");
                failed.push(id);
            }
        }
    }
    assert_eq!(failed, KNOWN_FAILURES, "unexpected acceptance results");
}
