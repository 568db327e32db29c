#![allow(dead_code)]

use std::collections::BTreeSet;

use lacn::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Minimum color count over every bijective labeling, by brute force.
pub fn naive_chi_la(g: &Graph) -> Option<usize> {
    let q = g.size();
    let mut labels: Vec<u32> = (1..=q as u32).collect();
    let mut best: Option<usize> = None;
    let mut c = vec![0usize; q];
    let mut consider = |labels: &[u32]| {
        let mut sums = vec![0u64; g.order()];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            sums[a] += labels[e] as u64;
            sums[b] += labels[e] as u64;
        }
        if g.edges().iter().all(|&(a, b)| sums[a] != sums[b]) {
            let k = sums.iter().collect::<BTreeSet<_>>().len();
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    };
    consider(&labels);
    // Heap's algorithm
    let mut i = 0;
    while i < q {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            consider(&labels);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// A connected simple graph on `n >= 3` vertices with exactly `q` edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, q: usize) -> Graph {
    assert!(n >= 3 && q >= n - 1 && q <= n * (n - 1) / 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        let (a, b) = (parent.min(order[k]), parent.max(order[k]));
        edges.insert((a, b));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|e| !edges.contains(e))
        .collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(q - (n - 1)));
    Graph::custom(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

pub fn custom(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::custom(n, edges).unwrap()
}

pub fn named_small_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("C3", custom(3, &[(0, 1), (1, 2), (2, 0)])),
        ("C4", custom(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("K4", custom(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
        ("K1,1,2", custom(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
        ("K2,3", custom(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])),
    ]
}

/// Admissible magic rectangle shapes: equal parity, both sides at least 2,
/// and not `2 x 2`.
pub fn magic_admissible(m: usize, n: usize) -> bool {
    m >= 2 && n >= 2 && m % 2 == n % 2 && (m, n) != (2, 2)
}

/// Whether the three-color split of `G(2m, 2n-1)` is ruled out, evaluated
/// from both inequalities in exact integer arithmetic.
pub fn geo_impossible(m: u64, n: u64) -> bool {
    let one = (2 * m - 1) * (2 * m * n - m - n + 1) > 8 * m * n - 4 * n + 1;
    let two = (2 * n + 1) * (2 * m * n + m - 2 * n) > 16 * m * n - 8 * n + 2;
    one && two
}
