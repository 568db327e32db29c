use std::collections::BTreeSet;

use lacn::constructions::*;
use lacn::{LabelingCertificate, VertexRole};

fn set(c: &LabelingCertificate) -> BTreeSet<u64> {
    c.coloring.distinct.iter().copied().collect()
}

fn of(xs: &[u64]) -> BTreeSet<u64> {
    xs.iter().copied().collect()
}

fn check(c: &LabelingCertificate) {
    assert!(c.valid);
    c.check_invariants().unwrap();
}

#[test]
fn cm_on_odd_closed_forms() {
    for m in (3..=11).step_by(2) {
        for n in (3..=11).step_by(2) {
            let c = construct_cm_on_odd(m, n).unwrap();
            check(&c);
            let base = (n * (m * n + 1) / 2 + m * n) as u64;
            let v = (m * (m * n + 1) / 2 + m * m) as u64;
            let m64 = m as u64;
            let expected = of(&[v, base + (m64 + 3) / 2, base + m64 + 1, base + m64 + 2]);
            assert_eq!(set(&c), expected, "({m},{n})");
        }
    }
    assert_eq!(set(&construct_cm_on_odd(3, 3).unwrap()), of(&[24, 27, 28, 29]));
}

#[test]
fn c2m_o2n_closed_forms() {
    for m in 2..=8u64 {
        for n in 1..=8u64 {
            let c = construct_c2m_o2n(m as usize, n as usize).unwrap();
            check(&c);
            let g1 = 4 * m * n * n - 4 * m * n + 2 * n + 10 * m - 1;
            let g2 = 4 * m * n * n + 12 * m * n - 6 * m + 3;
            let g3 = 4 * m * m * n + 4 * m * m + m;
            assert_eq!(set(&c), of(&[g1, g2, g3]), "({m},{n})");
        }
    }
}

#[test]
fn cm_cn_odd_closed_forms() {
    for m in (3..=9).step_by(2) {
        for n in (3..=m).step_by(2) {
            let c = construct_cm_cn_odd(m, n).unwrap();
            check(&c);
            let (m, n) = (m as u64, n as u64);
            let a = n * (m * n + 1) / 2 + m * n;
            let b = m * (m * n + 1) / 2 + m * m + 2 * (m + m * n);
            let g = [
                a + (m + 3) / 2,
                a + m + 1,
                a + m + 2,
                b + (n + 3) / 2,
                b + n + 1,
                b + n + 2,
            ];
            assert!(g.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(set(&c), of(&g), "({m},{n})");
        }
    }
    assert_eq!(set(&construct_cm_cn_odd(3, 3).unwrap()), of(&[27, 28, 29, 51, 52, 53]));
    // orientation is normalized
    assert_eq!(set(&construct_cm_cn_odd(3, 5).unwrap()), set(&construct_cm_cn_odd(5, 3).unwrap()));
}

fn split_by_role(c: &LabelingCertificate) -> (BTreeSet<u64>, Vec<u64>) {
    let g = c.graph();
    let mut u = BTreeSet::new();
    let mut v = Vec::new();
    for x in 0..g.order() {
        match g.role(x) {
            VertexRole::Cycle(_) => {
                u.insert(c.coloring.color(x));
            }
            _ => v.push(c.coloring.color(x)),
        }
    }
    (u, v)
}

#[test]
fn cm_kn_odd_structure() {
    for (m, n) in [(3, 3), (5, 3), (3, 5), (7, 5), (5, 7)] {
        let c = construct_cm_kn_odd(m, n).unwrap();
        check(&c);
        assert_eq!(c.color_count(), n + 3, "({m},{n})");
        let (u, v) = split_by_role(&c);
        assert_eq!(v.iter().collect::<BTreeSet<_>>().len(), n);
        assert!(v.iter().all(|x| x > u.last().unwrap()));
    }
    let (u, v) = split_by_role(&construct_cm_kn_odd(3, 3).unwrap());
    assert_eq!(u, of(&[27, 28, 29]));
    assert_eq!(v.into_iter().collect::<BTreeSet<_>>(), of(&[51, 52, 53]));
}

#[test]
fn c2m_k2n_structure() {
    for m in 2..=6u64 {
        let c = construct_c2m_k2n(m as usize, 1).unwrap();
        check(&c);
        let expected = [10 * m + 1, 10 * m + 3, 8 * m * m + 11 * m - 1, 8 * m * m + 3 * m + 3];
        assert_eq!(set(&c), of(&expected), "m = {m}");
    }
    assert_eq!(set(&construct_c2m_k2n(3, 1).unwrap()), of(&[31, 33, 104, 84]));
    for (m, n) in [(2, 2), (3, 2), (2, 3), (4, 3)] {
        let c = construct_c2m_k2n(m, n).unwrap();
        check(&c);
        assert_eq!(c.color_count(), 2 * n + 2, "({m},{n})");
        let (u, v) = split_by_role(&c);
        assert_eq!(v.iter().collect::<BTreeSet<_>>().len(), 2 * n);
        assert!(v.iter().all(|x| x > u.last().unwrap()));
    }
}

#[test]
fn mobius_closed_forms() {
    assert_eq!(set(&construct_mobius_odd(3).unwrap()), of(&[11, 15, 23]));
    for n in (5..=31).step_by(2) {
        let c = construct_mobius_odd(n).unwrap();
        check(&c);
        let n = n as u64;
        assert_eq!(set(&c), of(&[(9 * n + 3) / 2, 4 * n + 3, 5 * n + 3]), "n = {n}");
    }
    let h = construct_mobius_odd(5).unwrap().coloring.histogram();
    assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![(23, 4), (24, 5), (28, 1)]);
}

#[test]
fn m6_o2n_closed_forms() {
    for n in 1..=10u64 {
        let c = construct_m6_o2n(n as usize).unwrap();
        check(&c);
        let expected = [12 * n * n - 4 * n + 37, 12 * n * n + 42 * n - 7, 36 * n + 57];
        assert_eq!(set(&c), of(&expected), "n = {n}");
    }
}

#[test]
fn g4n_printed_tables() {
    assert_eq!(set(&construct_g4n(2).unwrap()), of(&[13, 23, 25]));
    assert_eq!(set(&construct_g4n(3).unwrap()), of(&[19, 34, 36]));
    assert_eq!(set(&construct_g4n(4).unwrap()), of(&[23, 41, 58]));
    assert_eq!(set(&construct_g4n(5).unwrap()), of(&[30, 58, 71]));
    assert_eq!(set(&construct_g4n(7).unwrap()), of(&[37, 114, 120]));
    assert_eq!(set(&construct_g4n(9).unwrap()), of(&[46, 88, 222]));
}

#[test]
fn g4n_general_closed_forms() {
    for n in 6..=60u64 {
        let c = construct_g4n(n as usize).unwrap();
        check(&c);
        if n == 7 || n == 9 {
            continue;
        }
        let k = n / 4;
        // shared color of u_4 and the v_j, and the color of u_1 and u_3
        let (shared, outer) = match n % 4 {
            3 => {
                let k = k + 1;
                (18 * k + 1, 32 * k * k + k - 10)
            }
            1 => (18 * k + 10, 32 * k * k + 41 * k + 12),
            2 => (18 * k + 13, 32 * k * k + 55 * k + 23),
            _ => (18 * k + 5, 32 * k * k + 23 * k + 3),
        };
        // colors sum to q(q+1), which pins down the color of u_2
        let q = 3 * n + 4;
        let middle = q * (q + 1) - 2 * outer - (n + 1) * shared;
        let expected = [shared, outer, middle];
        assert_eq!(set(&c), of(&expected), "n = {n}");
    }
}

#[test]
fn g2m_2n1_closed_forms() {
    for m in 2..=6u64 {
        for n in 2..=6u64 {
            let c = construct_g2m_2n1(m as usize, n as usize).unwrap();
            check(&c);
            let s = 2 * m * n - m - n + 1;
            let g1 = (2 * m - 1) * s;
            let g2 = (2 * n - 1) * s + 2 * (2 * m - 1) * (2 * n - 1) + 2 * m + 2;
            let g4 = 2 * (2 * m - 1) * (2 * n - 1) + m + 2;
            assert_eq!(set(&c), of(&[g1, g2, g2 - 1, g4]), "({m},{n})");
        }
    }
    assert_eq!(set(&construct_g2m_2n1(3, 4).unwrap()), of(&[90, 204, 203, 75]));
    assert_eq!(set(&construct_g2m_2n1(4, 2).unwrap()), of(&[77, 85, 84, 48]));
}

#[test]
fn g2m_2n1_last_cycle_edge() {
    let c = construct_g2m_2n1(3, 4).unwrap();
    let g = c.graph();
    let u6 = g.vertex(VertexRole::Cycle(6)).unwrap();
    let u1 = g.vertex(VertexRole::Cycle(1)).unwrap();
    let e = g.edge_between(u6, u1).unwrap();
    assert_eq!(c.labeling.label(e), 5 * 7 + 1);
}

#[test]
fn bnm_closed_forms() {
    for n in 2..=9u64 {
        for m in 3..=9u64 {
            let c = construct_bnm(n as usize, m as usize).unwrap();
            check(&c);
            let expected = if n % 2 == 0 {
                of(&[2 * m * n + 1, 2 * m * n * n + n])
            } else if m % 2 == 1 {
                of(&[2 * m * n + 1, n * (2 * m * n + 1)])
            } else {
                of(&[2 * m * n + 1, n * (m * n + n + 1), n * (2 * m * n + n + 1)])
            };
            assert_eq!(set(&c), expected, "({n},{m})");
        }
    }
    assert_eq!(set(&construct_bnm(2, 3).unwrap()), of(&[13, 26]));
    assert_eq!(set(&construct_b34_example().unwrap()), of(&[25, 75]));
}

#[test]
fn dispatch_by_tag() {
    for tag in TAGS {
        let c = construct(tag, Some(3), Some(3)).unwrap();
        assert!(c.valid, "{tag}");
        assert_eq!(c.provenance.to_string(), format!("constructed:{tag}"));
    }
}
