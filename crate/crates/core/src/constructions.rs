//! Explicit labelings for the join, ladder and block families.
//!
//! Every constructor returns a certificate that has already passed
//! [`verify`](crate::labeling::verify) and is valid.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graph::{build, Family, FamilySpec, VertexRole};
use crate::labeling::{verify, EdgeLabeling, LabelingCertificate, Provenance};
use crate::magic::{magic_rectangle, MagicRectangle};
use crate::solver::{solve_exact, SolverOptions};

use VertexRole::{Apex, Cycle, Leaf, Plain, Spine};

fn labeled(
    spec: FamilySpec,
    tag: &str,
    mut f: impl FnMut(VertexRole, VertexRole) -> u32,
) -> Result<LabelingCertificate> {
    let g = Arc::new(build(&spec)?);
    let labels = g
        .edges()
        .iter()
        .map(|&(a, b)| f(g.role(a), g.role(b)))
        .collect();
    let f = EdgeLabeling::new(g, labels)?;
    verify(&f, Provenance::Constructed(tag.to_string())).require_valid()
}

fn odd(x: usize) -> bool {
    x % 2 == 1
}

/// Position `h` of the cycle edge `e_h = u_h u_{h+1}` in `C_m`.
fn cycle_index(a: VertexRole, b: VertexRole, m: usize) -> Option<usize> {
    match (a, b) {
        (Cycle(i), Cycle(j)) if j == i % m + 1 => Some(i),
        (Cycle(i), Cycle(j)) if i == j % m + 1 => Some(j),
        _ => None,
    }
}

/// `f(e_{2i-1}) = i`, `f(e_{2i}) = m+1-i` on an odd cycle.
fn zigzag(h: usize, m: usize) -> u32 {
    let v = if odd(h) { h.div_ceil(2) } else { m + 1 - h / 2 };
    v as u32
}

/// Labels of `C_m ∨ O_n` for odd `m, n`, keyed by vertex roles.
fn cm_on_odd_label(m: usize, n: usize, rect: &MagicRectangle, a: VertexRole, b: VertexRole) -> Option<u32> {
    if let Some(h) = cycle_index(a, b, m) {
        return Some(zigzag(h, m));
    }
    match (a, b) {
        (Cycle(i), Apex(j)) if j <= n => Some(rect.a(i, j) + m as u32),
        _ => None,
    }
}

fn require_odd(family: &str, m: usize, n: usize) -> Result<()> {
    if m < 3 || n < 3 || !odd(m) || !odd(n) {
        return Err(Error::domain(family, format!("need odd m, n >= 3, got ({m},{n})")));
    }
    Ok(())
}

/// `C_m ∨ O_n` with 4 colors for odd `m, n >= 3`.
pub fn construct_cm_on_odd(m: usize, n: usize) -> Result<LabelingCertificate> {
    require_odd("cycle-join-empty", m, n)?;
    let rect = magic_rectangle(m, n)?;
    labeled(FamilySpec::join_empty(m, n), "cm-on-odd", |a, b| {
        cm_on_odd_label(m, n, &rect, a, b).expect("edge of C_m ∨ O_n")
    })
}

/// `f(u_h v_k)` of the `C_2m ∨ O_2n` labeling, `1 <= h <= 2m`, `1 <= k <= 2n`.
fn c2m_o2n_join(m: usize, n: usize, h: usize, k: usize) -> u32 {
    let (m, n) = (m as i64, n as i64);
    let (h, k) = (h as i64, k as i64);
    let v = if h % 2 == 1 {
        let i = (h + 1) / 2;
        match k {
            1 if i == 1 => 2 * m + 1,
            1 => 4 * m - 2 * i + 3,
            2 => 6 * m - 2 * i + 1,
            _ if k % 2 == 1 => 2 * m * ((k + 1) / 2 - 1) + 2 * i,
            _ => 2 * m * (2 * n + 1 - k / 2) - 2 * i + 2,
        }
    } else {
        let i = h / 2;
        match k {
            1 => 2 * m * (2 * n + 1) - 2 * i + 2,
            2 => 4 * m * n - 2 * i + 2,
            _ if k % 2 == 1 => 2 * m * (2 * n - (k + 1) / 2 + 3) - 2 * i + 1,
            _ => 2 * m * (k / 2 + 1) + 2 * i - 1,
        }
    };
    v as u32
}

fn c2m_o2n_label(m: usize, n: usize, a: VertexRole, b: VertexRole) -> Option<u32> {
    if let Some(h) = cycle_index(a, b, 2 * m) {
        return Some(h as u32);
    }
    match (a, b) {
        (Cycle(h), Apex(k)) if k <= 2 * n => Some(c2m_o2n_join(m, n, h, k)),
        _ => None,
    }
}

fn require_c2m(family: &str, m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 1 {
        return Err(Error::domain(family, format!("need m >= 2, n >= 1, got ({m},{n})")));
    }
    Ok(())
}

/// `C_2m ∨ O_2n` with 3 colors for `m >= 2`, `n >= 1`.
pub fn construct_c2m_o2n(m: usize, n: usize) -> Result<LabelingCertificate> {
    require_c2m("cycle-join-empty", m, n)?;
    labeled(FamilySpec::join_empty(2 * m, 2 * n), "c2m-o2n", |a, b| {
        c2m_o2n_label(m, n, a, b).expect("edge of C_2m ∨ O_2n")
    })
}

/// `C_m ∨ C_n` with 6 colors for odd `m, n >= 3`. The larger cycle plays
/// `C_m`, so `(3, 5)` builds `C_5 ∨ C_3`.
pub fn construct_cm_cn_odd(m: usize, n: usize) -> Result<LabelingCertificate> {
    require_odd("cycle-join-cycle", m, n)?;
    let (m, n) = (m.max(n), m.min(n));
    let rect = magic_rectangle(m, n)?;
    let shift = (m + m * n) as u32;
    labeled(FamilySpec::join_cycle(m, n), "cm-cn-odd", |a, b| {
        if let (Apex(i), Apex(j)) = (a, b) {
            let h = if j == i % n + 1 { i } else { j };
            return shift + zigzag(h, n);
        }
        cm_on_odd_label(m, n, &rect, a, b).expect("edge of C_m ∨ C_n")
    })
}

fn kn_cache() -> &'static Mutex<HashMap<usize, Vec<u32>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<u32>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Labels of `K_n` (in the order of [`FamilySpec::complete`]) with pairwise
/// distinct vertex sums, taken from the exact solver.
pub fn complete_graph_witness(n: usize) -> Result<Vec<u32>> {
    if let Some(l) = kn_cache().lock().unwrap().get(&n) {
        return Ok(l.clone());
    }
    let g = Arc::new(build(&FamilySpec::complete(n))?);
    let r = solve_exact(&g, &SolverOptions::default())
        .map_err(|e| Error::WitnessUnavailable(format!("K_{n}: {e}")))?;
    if r.chi_la != n {
        return Err(Error::WitnessUnavailable(format!("K_{n}: solver returned {} colors", r.chi_la)));
    }
    let labels = r.witness.labeling.labels().to_vec();
    kn_cache().lock().unwrap().insert(n, labels.clone());
    Ok(labels)
}

/// Maps clique edge `v_i v_j` to its position among the `K_n` edges.
fn clique_labels(n: usize) -> Result<HashMap<(usize, usize), u32>> {
    let h = complete_graph_witness(n)?;
    let g = build(&FamilySpec::complete(n))?;
    Ok(g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            let (Plain(i), Plain(j)) = (g.role(a), g.role(b)) else {
                unreachable!("complete graphs use plain roles")
            };
            ((i.min(j), i.max(j)), h[e])
        })
        .collect())
}

/// `C_m ∨ K_n` with `n+3` colors for odd `m, n >= 3`.
pub fn construct_cm_kn_odd(m: usize, n: usize) -> Result<LabelingCertificate> {
    require_odd("cycle-join-complete", m, n)?;
    let rect = magic_rectangle(m, n)?;
    let clique = clique_labels(n)?;
    let shift = (m * n + m) as u32;
    labeled(FamilySpec::join_complete(m, n), "cm-kn-odd", |a, b| {
        if let (Apex(i), Apex(j)) = (a, b) {
            return shift + clique[&(i.min(j), i.max(j))];
        }
        cm_on_odd_label(m, n, &rect, a, b).expect("edge of C_m ∨ K_n")
    })
}

/// `C_2m ∨ K_2n` with `2n+2` colors for `m >= 2`, `n >= 1`.
pub fn construct_c2m_k2n(m: usize, n: usize) -> Result<LabelingCertificate> {
    require_c2m("cycle-join-complete", m, n)?;
    let spec = FamilySpec::join_complete(2 * m, 2 * n);
    if n == 1 {
        let top = (6 * m + 1) as u32;
        return labeled(spec, "c2m-k2n", |a, b| match (a, b) {
            (Apex(_), Apex(_)) => top,
            (Cycle(1), Apex(1)) => c2m_o2n_join(m, 1, 1, 2),
            (Cycle(1), Apex(2)) => c2m_o2n_join(m, 1, 1, 1),
            _ => c2m_o2n_label(m, 1, a, b).expect("edge of C_2m ∨ K_2"),
        });
    }
    let clique = clique_labels(2 * n)?;
    let shift = (4 * m * n + 2 * m) as u32;
    labeled(spec, "c2m-k2n", |a, b| {
        if let (Apex(i), Apex(j)) = (a, b) {
            return shift + clique[&(i.min(j), i.max(j))];
        }
        c2m_o2n_label(m, n, a, b).expect("edge of C_2m ∨ K_2n")
    })
}

/// Möbius ladder `M_2n` with 3 colors for odd `n >= 3`.
pub fn construct_mobius_odd(n: usize) -> Result<LabelingCertificate> {
    if n < 3 || !odd(n) {
        return Err(Error::domain("mobius", format!("need odd n >= 3, got {n}")));
    }
    let spec = FamilySpec::mobius(n);
    if n == 3 {
        // edges in build order: u1u2, u2u3, u3v1, v1v2, v2v3, v3u1, u1v1, u2v2, u3v3
        let labels = [1, 5, 4, 8, 6, 7, 3, 9, 2];
        let mut next = labels.iter().copied();
        return labeled(spec, "mobius", |_, _| next.next().unwrap());
    }
    labeled(spec, "mobius", |a, b| {
        let v = match (a, b) {
            (Apex(i), Cycle(1)) if i == n => 3 * (n + 1) / 2,
            (Cycle(i), Apex(1)) if i == n => n,
            (Cycle(i), Cycle(_)) if odd(i) => i,
            (Cycle(i), Cycle(_)) => (3 * n + 3 - i) / 2,
            (Apex(1), Apex(2)) => n + 1,
            (Apex(i), Apex(_)) if !odd(i) => i,
            (Apex(i), Apex(_)) => 2 * n - (i - 3) / 2,
            (Cycle(i), Apex(_)) if odd(i) => (5 * n + 2 - i) / 2,
            (Cycle(i), Apex(_)) => 3 * n + 1 - i / 2,
            _ => unreachable!("edge of M_2n"),
        };
        v as u32
    })
}

/// `M_6 ∨ O_2n` with 3 colors for `n >= 1`.
pub fn construct_m6_o2n(n: usize) -> Result<LabelingCertificate> {
    if n < 1 {
        return Err(Error::domain("mobius-join-empty", "need n >= 1"));
    }
    labeled(FamilySpec::mobius_join_empty(3, 2 * n), "m6-o2n", |a, b| match (a, b) {
        (Cycle(i), Cycle(j)) => match (i.min(j), i.max(j)) {
            (1, 2) => 1,
            (2, 3) => 3,
            (3, 4) => 4,
            (4, 5) => 2,
            (5, 6) => 8,
            (1, 6) => 5,
            (1, 4) => 9,
            (2, 5) => 7,
            (3, 6) => 6,
            _ => unreachable!("edge of M_6"),
        },
        (Cycle(h), Apex(k)) => c2m_o2n_join(3, n, h, k) + 3,
        _ => unreachable!("edge of M_6 ∨ O_2n"),
    })
}

/// Labels `(u1u2, u2u3, u3u4, u4u1)` and the columns `(u1, u2, u3)` for each
/// `v_j` of the `G(4, n)` labeling.
fn g4n_matrix(n: usize) -> ([u32; 4], Vec<[u32; 3]>) {
    if n == 3 {
        return ([8, 7, 10, 9], vec![[5, 3, 11], [1, 12, 6], [13, 4, 2]]);
    }
    if n == 5 {
        return (
            [4, 6, 14, 16],
            vec![[10, 1, 19], [9, 3, 18], [8, 17, 5], [11, 12, 7], [13, 15, 2]],
        );
    }
    let mut cols: Vec<[i64; 3]> = Vec::with_capacity(n);
    let cycle: [i64; 4];
    match n % 4 {
        3 => {
            let k = (n as i64 + 1) / 4;
            cycle = [10 * k + 1, 4 * k, 12 * k + 1, 6 * k];
            for t in 1..=k {
                cols.push([8 * k + 1 - t, 2 * t - 1, 10 * k + 1 - t]);
            }
            for t in 1..=k {
                cols.push([9 * k + 1 - t, 2 * k + 2 * t - 1, 7 * k + 1 - t]);
            }
            for t in 1..=k - 2 {
                cols.push([12 * k + 1 - t, 2 * t, 6 * k - t]);
            }
            for t in 1..=k - 2 {
                cols.push([5 * k + 2 - t, 2 * k - 4 + 2 * t, 11 * k + 3 - t]);
            }
            cols.push([4 * k - 6, 10 * k + 4, 4 * k + 3]);
            cols.push([4 * k + 2, 10 * k + 3, 4 * k - 4]);
            cols.push([4 * k + 1, 10 * k + 2, 4 * k - 2]);
        }
        1 => {
            let k = (n as i64 - 1) / 4;
            cycle = [10 * k + 6, 4 * k + 2, 6 * k + 3, 12 * k + 7];
            for t in 1..=k - 2 {
                cols.push([8 * k + 5 - t, 2 * t - 1, 10 * k + 6 - t]);
            }
            for t in 1..=k - 2 {
                cols.push([9 * k + 8 - t, 2 * k - 5 + 2 * t, 7 * k + 7 - t]);
            }
            for t in 1..=4 {
                cols.push([6 * k + 9 - t, 4 * k - 9 + 2 * t, 8 * k + 10 - t]);
            }
            cols.push([4 * k + 1, 6 * k + 4, 8 * k + 5]);
            for t in 1..=k {
                cols.push([12 * k + 7 - t, 2 * t, 6 * k + 3 - t]);
            }
            for t in 1..=k {
                cols.push([5 * k + 3 - t, 2 * k + 2 * t, 11 * k + 7 - t]);
            }
        }
        2 => {
            let k = (n as i64 - 2) / 4;
            cycle = [8 * k + 6, 12 * k + 10, 6 * k + 4, 12 * k + 9];
            for t in 1..=k {
                cols.push([10 * k + 8 - t, 2 * t - 1, 8 * k + 6 - t]);
            }
            for t in 1..=k {
                cols.push([7 * k + 6 - t, 2 * k + 2 * t - 1, 9 * k + 8 - t]);
            }
            cols.push([6 * k + 5, 4 * k + 1, 8 * k + 7]);
            for t in 1..=k {
                cols.push([12 * k + 9 - t, 2 * t, 6 * k + 4 - t]);
            }
            for t in 1..=k {
                cols.push([5 * k + 4 - t, 2 * k + 2 * t, 11 * k + 9 - t]);
            }
            cols.push([4 * k + 3, 10 * k + 8, 4 * k + 2]);
        }
        _ => {
            let k = n as i64 / 4;
            cycle = [10 * k + 3, 6 * k + 2, 6 * k + 1, 12 * k + 4];
            for t in 1..=k - 1 {
                cols.push([10 * k + 3 - t, 2 * t - 1, 8 * k + 3 - t]);
            }
            for t in 1..=k {
                cols.push([7 * k + 4 - t, 2 * k - 3 + 2 * t, 9 * k + 4 - t]);
            }
            cols.push([6 * k + 3, 4 * k - 1, 8 * k + 3]);
            for t in 1..=k - 1 {
                cols.push([12 * k + 4 - t, 2 * t, 6 * k + 1 - t]);
            }
            for t in 1..=k - 1 {
                cols.push([5 * k + 2 - t, 2 * k - 2 + 2 * t, 11 * k + 5 - t]);
            }
            cols.push([4 * k + 2, 4 * k - 2, 10 * k + 5]);
            cols.push([4 * k, 10 * k + 4, 4 * k + 1]);
        }
    }
    let to32 = |x: i64| x as u32;
    (
        cycle.map(to32),
        cols.into_iter().map(|c| c.map(to32)).collect(),
    )
}

/// `G(4, n)` with 3 colors for `n >= 2`.
pub fn construct_g4n(n: usize) -> Result<LabelingCertificate> {
    if n < 2 {
        return Err(Error::domain("gmn", format!("need n >= 2, got {n}")));
    }
    let (cycle, cols) = g4n_matrix(n);
    labeled(FamilySpec::gmn(4, n), "g4n", |a, b| {
        if let Some(h) = cycle_index(a, b, 4) {
            return cycle[h - 1];
        }
        match (a, b) {
            (Cycle(i), Apex(j)) => cols[j - 1][i - 1],
            _ => unreachable!("edge of G(4,n)"),
        }
    })
}

/// `G(2m, 2n-1)` with 4 colors for `m, n >= 2`, using a
/// `(2m-1) x (2n-1)` magic rectangle on the apex edges.
pub fn construct_g2m_2n1(m: usize, n: usize) -> Result<LabelingCertificate> {
    if m < 2 || n < 2 {
        return Err(Error::domain("gmn", format!("need m, n >= 2, got ({m},{n})")));
    }
    let rect = magic_rectangle(2 * m - 1, 2 * n - 1)?;
    let base = ((2 * m - 1) * (2 * n - 1)) as u32;
    let m32 = m as u32;
    labeled(FamilySpec::gmn(2 * m, 2 * n - 1), "g2m-2n1", |a, b| {
        if let Some(h) = cycle_index(a, b, 2 * m) {
            let h = h as u32;
            return if h == 2 * m32 {
                base + 1
            } else if h % 2 == 0 {
                base + h / 2 + 1
            } else {
                base + 2 * m32 + 1 - h.div_ceil(2)
            };
        }
        match (a, b) {
            (Cycle(i), Apex(j)) => rect.a(i, j),
            _ => unreachable!("edge of G(2m,2n-1)"),
        }
    })
}

/// `B(n^[m])`: `m` copies of `K_{2,n}` glued in a ring, for `n >= 2`,
/// `m >= 3`. Uses two colors unless `n` is odd and `m` even, where the
/// labeling has three.
pub fn construct_bnm(n: usize, m: usize) -> Result<LabelingCertificate> {
    check_bnm(n, m)?;
    if odd(n) && odd(m) {
        return construct_bnm_with(&magic_rectangle(m, n)?);
    }
    let (m_, n_) = (m as u32, n as u32);
    labeled(FamilySpec::b_uniform(n, m), "b", |a, b| {
        let (Spine(x), Leaf(i, j)) = (a, b) else {
            unreachable!("edge of B(n^[m])")
        };
        let (i, j) = (i as u32, j as u32);
        let left = x as u32 != i;
        let low = (i - 1) * n_ + j;
        let high = (2 * m_ - i + 1) * n_ - j + 1;
        if odd(n) {
            if left { low } else { high }
        } else if left == (j % 2 == 1) {
            low
        } else {
            high
        }
    })
}

fn check_bnm(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 3 {
        return Err(Error::domain("b", format!("need n >= 2, m >= 3, got ({n},{m})")));
    }
    Ok(())
}

/// `B(n^[m])` for odd `n, m` from a given `m x n` magic rectangle: row `i`
/// labels the edges `x_i y_{i,j}` and `x_{i-1} y_{i,j}` takes `2mn+1` minus
/// that entry.
pub fn construct_bnm_with(rect: &MagicRectangle) -> Result<LabelingCertificate> {
    let (m, n) = (rect.m(), rect.n());
    check_bnm(n, m)?;
    if !rect.verify() {
        return Err(Error::NoMagicRectangle { m, n });
    }
    let top = (2 * m * n + 1) as u32;
    labeled(FamilySpec::b_uniform(n, m), "b", |a, b| {
        let (Spine(x), Leaf(i, j)) = (a, b) else {
            unreachable!("edge of B(n^[m])")
        };
        if x == i {
            rect.a(i, j)
        } else {
            top - rect.a(i, j)
        }
    })
}

/// The 2-coloring of `B(3^[4])` with colors 25 and 75.
pub fn construct_b34_example() -> Result<LabelingCertificate> {
    // rows x_1..x_4; columns y_{i,1..3} of block i, left spine then right spine
    let right: [[u32; 3]; 4] = [[1, 5, 17], [2, 6, 15], [3, 9, 11], [4, 7, 12]];
    let left: [[u32; 3]; 4] = [[24, 20, 8], [23, 19, 10], [22, 16, 14], [21, 18, 13]];
    labeled(FamilySpec::b_uniform(3, 4), "b", |a, b| {
        let (Spine(x), Leaf(i, j)) = (a, b) else {
            unreachable!("edge of B(3^[4])")
        };
        if x == i {
            right[i - 1][j - 1]
        } else {
            left[i - 1][j - 1]
        }
    })
}

/// Construction identifiers accepted by [`construct`].
pub const TAGS: &[&str] = &[
    "cm-on-odd", "c2m-o2n", "cm-cn-odd", "cm-kn-odd", "c2m-k2n", "mobius", "m6-o2n", "g4n",
    "g2m-2n1", "b",
];

/// Dispatches on a construction tag. Single-parameter constructions read
/// `n`; `b` reads `(n, m)` as block size and block count.
pub fn construct(tag: &str, m: Option<usize>, n: Option<usize>) -> Result<LabelingCertificate> {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Error::domain(tag, format!("missing parameter {name}")))
    };
    match tag {
        "cm-on-odd" => construct_cm_on_odd(need(m, "m")?, need(n, "n")?),
        "c2m-o2n" => construct_c2m_o2n(need(m, "m")?, need(n, "n")?),
        "cm-cn-odd" => construct_cm_cn_odd(need(m, "m")?, need(n, "n")?),
        "cm-kn-odd" => construct_cm_kn_odd(need(m, "m")?, need(n, "n")?),
        "c2m-k2n" => construct_c2m_k2n(need(m, "m")?, need(n, "n")?),
        "mobius" => construct_mobius_odd(need(n, "n")?),
        "m6-o2n" => construct_m6_o2n(need(n, "n")?),
        "g4n" => construct_g4n(need(n, "n")?),
        "g2m-2n1" => construct_g2m_2n1(need(m, "m")?, need(n, "n")?),
        "b" => construct_bnm(need(n, "n")?, need(m, "m")?),
        _ => Err(Error::Parse(format!("unknown construction {tag:?}"))),
    }
}

/// The graph family a construction tag labels.
pub fn family_of(tag: &str) -> Option<Family> {
    Some(match tag {
        "cm-on-odd" | "c2m-o2n" => Family::JoinWithEmpty,
        "cm-cn-odd" => Family::JoinWithCycle,
        "cm-kn-odd" | "c2m-k2n" => Family::JoinWithComplete,
        "mobius" => Family::MobiusLadder,
        "m6-o2n" => Family::MobiusJoinEmpty,
        "g4n" | "g2m-2n1" => Family::Gmn,
        "b" => Family::Bseq,
        _ => return None,
    })
}
