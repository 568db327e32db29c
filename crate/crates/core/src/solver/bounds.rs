//! Lower bounds on the local antimagic chromatic number.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::transforms::{bipartite_two_color_feasible, TwoColorCheck};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `χ_la(G) >= χ(G)`
    Chromatic,
    /// No 2-coloring satisfies `xX = yY = q(q+1)/2` with `X > Y`.
    BipartiteArithmetic,
    /// Both 3-coloring patterns of `G(2m, 2n-1)` are contradicted.
    GeoInequalities,
    /// `W_{2k+1}` minus a spoke needs `k(2k+1) <= 8k+1` for 3 colors.
    SpokeWheel,
    /// Exhaustive search refuted every smaller color count.
    Exhaustion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule: Rule,
    pub bound: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub trace: Vec<RuleApplication>,
}

impl LowerBound {
    fn push(&mut self, rule: Rule, bound: usize, detail: String) {
        self.value = self.value.max(bound);
        self.trace.push(RuleApplication {
            rule,
            bound,
            detail,
        });
    }
}

/// Maximum over every rule that applies to `g`, with the applied rules in
/// order.
pub fn lower_bound(g: &Graph) -> LowerBound {
    let mut lb = LowerBound {
        value: 2,
        trace: Vec::new(),
    };
    match g.chromatic_number() {
        Ok(chi) => lb.push(Rule::Chromatic, chi, format!("chromatic number {chi}")),
        Err(_) => {
            let basic = if g.bipartition().is_some() { 2 } else { 3 };
            lb.push(
                Rule::Chromatic,
                basic,
                format!("order {} exceeds the exact coloring guard; odd cycles give {basic}", g.order()),
            );
        }
    }
    if g.bipartition().is_some() {
        if let TwoColorCheck::Infeasible { reason } = bipartite_two_color_feasible(g) {
            lb.push(Rule::BipartiteArithmetic, 3, reason);
        }
    }
    if let Some(k) = spoke_deleted_wheel(g) {
        let m = 2 * k + 1;
        if k * (2 * k + 1) > 8 * k + 1 {
            lb.push(
                Rule::SpokeWheel,
                4,
                format!("W_{m} minus a spoke: k(2k+1) = {} > 8k+1 = {}", k * (2 * k + 1), 8 * k + 1),
            );
        }
    }
    let spec = g.spec();
    if spec.family == Family::Gmn && spec.deletion.is_none() && spec.addition.is_none() {
        let (cycle, apex) = (spec.params[0], spec.params[1]);
        if cycle % 2 == 0 && apex % 2 == 1 && cycle >= 4 && apex >= 3 {
            let (m, n) = (cycle / 2, apex.div_ceil(2));
            if let Ok(v) = geo_rule_g2m(m, n) {
                if v.impossible {
                    lb.push(
                        Rule::GeoInequalities,
                        4,
                        format!("G({cycle},{apex}): both 3-coloring patterns contradicted"),
                    );
                }
            }
        }
    }
    lb
}

/// `Some(k)` when `g` is `W_{2k+1}` minus one spoke: a hub adjacent to all
/// but one vertex of an odd cycle on the remaining vertices.
fn spoke_deleted_wheel(g: &Graph) -> Option<usize> {
    let n = g.order();
    let m = n - 1;
    if m % 2 == 0 || g.size() != 2 * m - 1 {
        return None;
    }
    let hub = (0..n).find(|&v| g.degree(v) == m - 1)?;
    let rest_is_cycle = (0..n).filter(|&v| v != hub).all(|v| {
        g.neighbors(v).iter().filter(|&&w| w != hub).count() == 2
    });
    (rest_is_cycle && rim_connected(g, hub)).then_some(m / 2)
}

fn rim_connected(g: &Graph, hub: usize) -> bool {
    let n = g.order();
    let start = (0..n).find(|&v| v != hub).unwrap();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if w != hub && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeoRegime {
    /// Only pattern (I) survives.
    I,
    /// Only pattern (II) survives.
    II,
    /// Neither pattern is ruled out.
    Both,
    /// Both patterns are contradicted, so 3 colors are impossible.
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GeoVerdict {
    pub m: usize,
    pub n: usize,
    /// `(2m-1)(2mn-m-n+1) > 8mn-4n+1`
    pub case_one_contradicted: bool,
    /// `(2n+1)(2mn+m-2n) > 16mn-8n+2`
    pub case_two_contradicted: bool,
    pub impossible: bool,
    pub regime: GeoRegime,
}

/// Evaluates the two counting inequalities for a 3-coloring of
/// `G(2m, 2n-1)`.
///
/// Pattern (I) puts `u_{2m}` with the apex vertices, pattern (II) puts it
/// with the other even cycle vertices. Three colors are impossible exactly
/// when both patterns are contradicted.
pub fn geo_rule_g2m(m: usize, n: usize) -> Result<GeoVerdict> {
    if m < 2 || n < 2 {
        return Err(Error::domain("gmn", "geo rule needs m >= 2 and n >= 2"));
    }
    let (m, n) = (m as i128, n as i128);
    let case_one = (2 * m - 1) * (2 * m * n - m - n + 1) > 8 * m * n - 4 * n + 1;
    let case_two = (2 * n + 1) * (2 * m * n + m - 2 * n) > 16 * m * n - 8 * n + 2;
    let regime = match (case_one, case_two) {
        (true, true) => GeoRegime::Neither,
        (true, false) => GeoRegime::II,
        (false, true) => GeoRegime::I,
        (false, false) => GeoRegime::Both,
    };
    Ok(GeoVerdict {
        m: m as usize,
        n: n as usize,
        case_one_contradicted: case_one,
        case_two_contradicted: case_two,
        impossible: case_one && case_two,
        regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, EdgeSelector, FamilySpec};

    fn lb(spec: FamilySpec) -> LowerBound {
        lower_bound(&build(&spec).unwrap())
    }

    #[test]
    fn mobius_ten_needs_three() {
        let b = lb(FamilySpec::mobius(5));
        assert_eq!(b.value, 3);
        assert!(b.trace.iter().any(|r| r.rule == Rule::BipartiteArithmetic));
    }

    #[test]
    fn odd_wheel_minus_spoke() {
        for m in [3, 5, 7] {
            let b = lb(FamilySpec::wheel(m).with_deletion(EdgeSelector::Spoke(1)));
            assert_eq!(b.value, 3, "m = {m}");
        }
        for m in [9, 11, 13] {
            let b = lb(FamilySpec::wheel(m).with_deletion(EdgeSelector::Spoke(m)));
            assert_eq!(b.value, 4, "m = {m}");
            assert!(b.trace.iter().any(|r| r.rule == Rule::SpokeWheel));
        }
        // G(m, 1) is the same graph
        assert_eq!(lb(FamilySpec::gmn(9, 1)).value, 4);
        // a rim deletion is not covered
        assert_eq!(
            lb(FamilySpec::wheel(9).with_deletion(EdgeSelector::Cycle(1))).value,
            3
        );
    }

    #[test]
    fn chromatic_bound() {
        let b = lb(FamilySpec::join_empty(3, 3));
        assert_eq!(b.value, 4);
        assert_eq!(b.trace[0].rule, Rule::Chromatic);
    }

    #[test]
    fn geo_examples() {
        assert!(geo_rule_g2m(3, 4).unwrap().impossible);
        assert!(!geo_rule_g2m(20, 3).unwrap().impossible);
        assert!(geo_rule_g2m(21, 3).unwrap().impossible);
        assert!(!geo_rule_g2m(3, 2).unwrap().impossible);
        assert!(!geo_rule_g2m(2, 4).unwrap().impossible);
        assert!(geo_rule_g2m(1, 4).is_err());
    }

    #[test]
    fn geo_rule_feeds_lower_bound() {
        assert_eq!(lb(FamilySpec::gmn(6, 7)).value, 4);
        assert_eq!(lb(FamilySpec::gmn(6, 3)).value, 3);
    }
}
