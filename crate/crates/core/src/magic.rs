//! Magic rectangles: `m x n` arrays of `1..=mn` with row sums `n(mn+1)/2`
//! and column sums `m(mn+1)/2`.
//!
//! Construction picks the first scheme that applies: the Siamese method for
//! odd squares, a centrally symmetric complement pattern when both sides are
//! divisible by 4, a direct three-row scheme for `3 x n`, products of smaller
//! rectangles, and finally a seeded local search. Every result is verified
//! before it is returned.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagicRectangle {
    m: usize,
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl MagicRectangle {
    /// Wraps an `m x n` array given row by row. Shape is checked, the magic
    /// property is not; see [`MagicRectangle::verify`].
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("rectangle rows must be non-empty and equally long".into()));
        }
        Ok(MagicRectangle { m, n, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `a_{i,j}` with 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    pub fn row_constant(&self) -> u64 {
        (self.n * (self.m * self.n + 1) / 2) as u64
    }

    pub fn column_constant(&self) -> u64 {
        (self.m * (self.m * self.n + 1) / 2) as u64
    }

    pub fn transpose(&self) -> MagicRectangle {
        let rows = (0..self.n)
            .map(|j| (0..self.m).map(|i| self.rows[i][j]).collect())
            .collect();
        MagicRectangle {
            m: self.n,
            n: self.m,
            rows,
        }
    }

    pub fn verify(&self) -> bool {
        verify_rectangle(self)
    }

    pub fn shift(&self, offset: i64) -> Vec<Vec<i64>> {
        shift(self, offset)
    }
}

/// Whether a magic `(m, n)`-rectangle exists.
pub fn exists(m: usize, n: usize) -> bool {
    m >= 2 && n >= 2 && m % 2 == n % 2 && (m, n) != (2, 2)
}

pub fn verify_rectangle(r: &MagicRectangle) -> bool {
    let (m, n) = (r.m, r.n);
    if r.rows.len() != m || r.rows.iter().any(|row| row.len() != n) {
        return false;
    }
    let mut seen = vec![false; m * n + 1];
    for &x in r.rows.iter().flatten() {
        let x = x as usize;
        if x == 0 || x > m * n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    let rows_ok = r
        .rows
        .iter()
        .all(|row| row.iter().map(|&x| u64::from(x)).sum::<u64>() == r.row_constant());
    let cols_ok = (0..n).all(|j| {
        (0..m).map(|i| u64::from(r.rows[i][j])).sum::<u64>() == r.column_constant()
    });
    rows_ok && cols_ok
}

/// Adds `offset` to every entry.
pub fn shift(r: &MagicRectangle, offset: i64) -> Vec<Vec<i64>> {
    r.rows
        .iter()
        .map(|row| row.iter().map(|&x| i64::from(x) + offset).collect())
        .collect()
}

type Cache = Mutex<HashMap<(usize, usize), Arc<MagicRectangle>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A verified magic `(m, n)`-rectangle. Deterministic in `(m, n)`.
pub fn magic_rectangle(m: usize, n: usize) -> Result<MagicRectangle> {
    if !exists(m, n) {
        return Err(Error::NoMagicRectangle { m, n });
    }
    if let Some(r) = cache().lock().unwrap().get(&(m, n)) {
        return Ok((**r).clone());
    }
    let r = construct(m, n)?;
    debug_assert!(r.verify());
    cache()
        .lock()
        .unwrap()
        .insert((m, n), Arc::new(r.clone()));
    Ok(r)
}

fn construct(m: usize, n: usize) -> Result<MagicRectangle> {
    let direct = if m == n && m % 2 == 1 {
        Some(siamese(m))
    } else if m % 4 == 0 && n % 4 == 0 {
        Some(doubly_even(m, n))
    } else if m == 3 && n >= 5 {
        three_rows(n)
    } else if n == 3 && m >= 5 {
        three_rows(m).map(|r| r.transpose())
    } else {
        None
    };
    if let Some(r) = direct.filter(verify_rectangle) {
        return Ok(r);
    }
    if let Some(r) = product(m, n).filter(verify_rectangle) {
        return Ok(r);
    }
    for attempt in 0..SEARCH_ATTEMPTS {
        if let Some(r) = anneal(m, n, attempt).filter(verify_rectangle) {
            return Ok(r);
        }
    }
    Err(Error::WitnessUnavailable(format!(
        "no magic ({m},{n})-rectangle found within the search budget"
    )))
}

fn siamese(n: usize) -> MagicRectangle {
    let mut rows = vec![vec![0u32; n]; n];
    let (mut i, mut j) = (0, n / 2);
    for x in 1..=(n * n) as u32 {
        rows[i][j] = x;
        let (ni, nj) = ((i + n - 1) % n, (j + 1) % n);
        if rows[ni][nj] != 0 {
            i = (i + 1) % n;
        } else {
            (i, j) = (ni, nj);
        }
    }
    MagicRectangle { m: n, n, rows }
}

/// Natural fill with entries complemented (`x -> mn+1-x`) on the cells where
/// `i ≡ j` or `i + j ≡ 3 (mod 4)`. Each row and column complements exactly
/// half of its cells in balanced positions, and the pattern is centrally
/// symmetric so the result is still a permutation.
fn doubly_even(m: usize, n: usize) -> MagicRectangle {
    let total = (m * n + 1) as u32;
    let rows = (0..m)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = (i * n + j + 1) as u32;
                    if i % 4 == j % 4 || (i + j) % 4 == 3 {
                        total - x
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    MagicRectangle { m, n, rows }
}

/// `3 x n` for odd `n >= 5`, built in centered form (entries minus the mean).
///
/// Column `x` carries `d(x) = (2x mod n) - x` in the first row, and the pair
/// `X = k+1+x`, `-P = -(k+1+(2x mod n))` split between rows two and three, so
/// every column sums to zero. Row two sums to zero when the set of columns
/// holding `+X` in row two has `sum(X + P) = n^2`, found by subset-sum.
fn three_rows(n: usize) -> Option<MagicRectangle> {
    let k = n / 2;
    let dbl = |x: usize| (2 * x) % n;
    let weights: Vec<usize> = (0..n).map(|x| 2 * (k + 1) + x + dbl(x)).collect();
    let chosen = subset_with_sum(&weights, n * n)?;
    let mean = (3 * n as i64 + 1) / 2;
    let mut rows = vec![vec![0u32; n]; 3];
    for x in 0..n {
        let big = (k + 1 + x) as i64;
        let small = -((k + 1 + dbl(x)) as i64);
        let (r1, r2) = if chosen[x] { (big, small) } else { (small, big) };
        for (row, dev) in [(0, dbl(x) as i64 - x as i64), (1, r1), (2, r2)] {
            rows[row][x] = (dev + mean) as u32;
        }
    }
    Some(MagicRectangle { m: 3, n, rows })
}

fn subset_with_sum(weights: &[usize], target: usize) -> Option<Vec<bool>> {
    // reach[i][s]: some subset of the first i weights sums to s
    let mut reach = vec![vec![false; target + 1]; weights.len() + 1];
    reach[0][0] = true;
    for (i, &w) in weights.iter().enumerate() {
        for s in 0..=target {
            reach[i + 1][s] = reach[i][s] || (s >= w && reach[i][s - w]);
        }
    }
    if !reach[weights.len()][target] {
        return None;
    }
    let mut chosen = vec![false; weights.len()];
    let mut s = target;
    for i in (0..weights.len()).rev() {
        if !reach[i][s] {
            chosen[i] = true;
            s -= weights[i];
        }
    }
    Some(chosen)
}

/// `C[(i1,i2),(j1,j2)] = (A[i1][j1] - 1) * m2 n2 + B[i2][j2]` for any
/// factorization into two smaller rectangles that exist.
fn product(m: usize, n: usize) -> Option<MagicRectangle> {
    for m1 in 2..=m / 2 {
        if m % m1 != 0 {
            continue;
        }
        for n1 in 2..=n / 2 {
            if n % n1 != 0 {
                continue;
            }
            let (m2, n2) = (m / m1, n / n1);
            if !exists(m1, n1) || !exists(m2, n2) {
                continue;
            }
            let (Ok(a), Ok(b)) = (magic_rectangle(m1, n1), magic_rectangle(m2, n2)) else {
                continue;
            };
            let block = (m2 * n2) as u32;
            let mut rows = vec![vec![0u32; n]; m];
            for i1 in 0..m1 {
                for i2 in 0..m2 {
                    for j1 in 0..n1 {
                        for j2 in 0..n2 {
                            rows[i1 * m2 + i2][j1 * n2 + j2] =
                                (a.rows[i1][j1] - 1) * block + b.rows[i2][j2];
                        }
                    }
                }
            }
            return Some(MagicRectangle { m, n, rows });
        }
    }
    None
}

const SEARCH_ATTEMPTS: u64 = 4;
const SEARCH_STEPS: u64 = 20_000_000;

/// Simulated annealing over cell swaps at unit temperature, minimizing the
/// squared deviation of row and column sums. Half of the moves are targeted:
/// they pick the cell holding exactly the value that would repair the row or
/// column deficit of a random cell.
fn anneal(m: usize, n: usize, attempt: u64) -> Option<MagicRectangle> {
    let seed = ((m as u64) << 40) ^ ((n as u64) << 20) ^ attempt;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells = m * n;
    let row_target = (n * (cells + 1) / 2) as i64;
    let col_target = (m * (cells + 1) / 2) as i64;
    let mut g: Vec<i64> = (1..=cells as i64).collect();
    for i in (1..cells).rev() {
        g.swap(i, rng.gen_range(0..=i));
    }
    let mut pos = vec![0usize; cells + 1];
    for (c, &v) in g.iter().enumerate() {
        pos[v as usize] = c;
    }
    let mut rs = vec![0i64; m];
    let mut cs = vec![0i64; n];
    for (c, &v) in g.iter().enumerate() {
        rs[c / n] += v;
        cs[c % n] += v;
    }
    let sq = |x: i64| x * x;
    let mut energy: i64 = rs.iter().map(|&r| sq(r - row_target)).sum::<i64>()
        + cs.iter().map(|&c| sq(c - col_target)).sum::<i64>();
    let mut steps = 0;
    while energy > 0 {
        steps += 1;
        if steps > SEARCH_STEPS {
            return None;
        }
        let a = rng.gen_range(0..cells);
        let b = if rng.gen_bool(0.5) {
            rng.gen_range(0..cells)
        } else {
            let need = if rng.gen_bool(0.5) {
                row_target - rs[a / n]
            } else {
                col_target - cs[a % n]
            };
            let v = g[a] + need;
            if need == 0 || v < 1 || v > cells as i64 {
                continue;
            }
            pos[v as usize]
        };
        if a == b {
            continue;
        }
        let (i1, j1, i2, j2) = (a / n, a % n, b / n, b % n);
        let d = g[b] - g[a];
        let mut delta = 0;
        if i1 != i2 {
            delta += sq(rs[i1] + d - row_target) - sq(rs[i1] - row_target)
                + sq(rs[i2] - d - row_target)
                - sq(rs[i2] - row_target);
        }
        if j1 != j2 {
            delta += sq(cs[j1] + d - col_target) - sq(cs[j1] - col_target)
                + sq(cs[j2] - d - col_target)
                - sq(cs[j2] - col_target);
        }
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64)).exp() {
            g.swap(a, b);
            pos[g[a] as usize] = a;
            pos[g[b] as usize] = b;
            if i1 != i2 {
                rs[i1] += d;
                rs[i2] -= d;
            }
            if j1 != j2 {
                cs[j1] += d;
                cs[j2] -= d;
            }
            energy += delta;
        }
    }
    let rows = g
        .chunks(n)
        .map(|r| r.iter().map(|&x| x as u32).collect())
        .collect();
    Some(MagicRectangle { m, n, rows })
}
