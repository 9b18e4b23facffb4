//! p×p partitions and the weight change under removing a node.
//!
//! A partition is p×p when every part and every part multiplicity is
//! divisible by `p`. [`check_theorem`] tests, for one partition, that this
//! holds exactly when every removable node drops the p-weight by at least two,
//! and that the drop is then exactly two.

use serde::{Deserialize, Serialize};

use crate::abacus::{p_core_and_weight, p_quotient, p_weight, AbacusDisplay, BeadCount};
use crate::error::{Error, Result};
use crate::partition::{Node, Partition};
use crate::prime::Prime;
use crate::rim_hook::p_core_oracle;

/// Every part and every multiplicity divisible by `p`. Vacuously true for ∅.
pub fn is_p_by_p(lam: &Partition, p: Prime) -> bool {
    let p = p.get();
    lam.multiplicities()
        .into_iter()
        .all(|(value, mult)| value % p == 0 && mult % p == 0)
}

/// Empty p-core and all p-quotient components equal.
pub fn is_p_by_p_abacus(lam: &Partition, p: Prime) -> bool {
    let (core, _) = p_core_and_weight(lam, p);
    core.is_empty() && p_quotient(lam, p).constant_component().is_some()
}

/// Every row of the display is either full or empty.
pub fn rows_full_or_empty(disp: &AbacusDisplay) -> bool {
    let p = disp.p().get();
    (0..disp.rows()).all(|row| {
        let filled = (0..p).filter(|&i| disp.is_occupied(row * p + i)).count();
        filled == 0 || filled == p
    })
}

/// The full-or-empty-rows test on the canonical display of `lam`.
pub fn is_p_by_p_rows(lam: &Partition, p: Prime) -> bool {
    let disp = AbacusDisplay::new(lam, p, BeadCount::Auto).expect("auto bead count");
    rows_full_or_empty(&disp)
}

/// p×p, with the common quotient component again recursively p×p.
///
/// Each level divides the size by `p²` and a nonempty partition has a
/// nonempty quotient, so only ∅ satisfies this at every level. See
/// [`p_by_p_depth`] for the number of levels a partition does satisfy.
pub fn is_p_by_p_recursive(lam: &Partition, p: Prime) -> bool {
    if lam.is_empty() {
        return true;
    }
    if !is_p_by_p(lam, p) {
        return false;
    }
    match p_quotient(lam, p).constant_component() {
        Some(tau) => is_p_by_p_recursive(tau, p),
        None => false,
    }
}

/// How many nested levels of the p×p condition hold: 0 when `lam` is not
/// p×p, 1 when it is p×p but its common quotient component is not, and so
/// on. `None` for ∅, which satisfies every level.
pub fn p_by_p_depth(lam: &Partition, p: Prime) -> Option<usize> {
    if lam.is_empty() {
        return None;
    }
    let mut depth = 0;
    let mut current = lam.clone();
    while !current.is_empty() && is_p_by_p(&current, p) {
        depth += 1;
        current = p_quotient(&current, p)
            .constant_component()
            .cloned()
            .expect("p x p partitions have a constant quotient");
    }
    Some(depth)
}

/// `w(λ_A) - w(λ)` predicted from runner counts alone, where `A` is the node
/// of the removable bead at `position`. With `i = position mod p`:
///
/// * `i > 0`: `λ^[i] - λ^[i-1] - 1`
/// * `i = 0`: `λ^[0] - λ^[p-1] - 2`
pub fn predicted_weight_delta(disp: &AbacusDisplay, position: usize) -> Result<isize> {
    if position == 0 || !disp.is_occupied(position) || disp.is_occupied(position - 1) {
        return Err(Error::NotRemovableBead { position });
    }
    let p = disp.p().get();
    let counts = disp.runner_counts();
    let runner = position % p;
    let delta = if runner > 0 {
        counts[runner] as isize - counts[runner - 1] as isize - 1
    } else {
        counts[0] as isize - counts[p - 1] as isize - 2
    };
    Ok(delta)
}

/// One removable node and its weight change, computed two ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDelta {
    pub node: Node,
    pub position: usize,
    pub residue: usize,
    pub predicted_delta: isize,
    pub actual_delta: isize,
}

/// An internal consistency failure found while checking one partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    /// The three p×p predicates disagree.
    PredicateDisagreement {
        definition: bool,
        core_quotient: bool,
        rows: bool,
    },
    /// Runner-count formula and recomputed weight differ.
    DeltaMismatch {
        node: Node,
        predicted: isize,
        actual: isize,
    },
    /// Abacus and rim-hook stripping disagree on core or weight.
    OracleMismatch {
        partition: Partition,
        abacus_core: Partition,
        abacus_weight: usize,
        oracle_core: Partition,
        oracle_weight: usize,
    },
    /// Removable beads do not match removable nodes.
    NodeBeadMismatch { nodes: Vec<Node>, beads: Vec<Node> },
    /// A bead's runner differs from its node's residue.
    ResidueMismatch {
        node: Node,
        runner: usize,
        residue: usize,
    },
    /// All deltas are at most -2 but runner counts increase somewhere.
    RunnerCountsIncrease { counts: Vec<usize> },
}

/// Per-partition record of the weight-drop characterisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub partition: Partition,
    pub p: Prime,
    pub weight: usize,
    pub is_pxp: bool,
    pub nodes: Vec<NodeDelta>,
    /// p×p iff every actual delta is ≤ -2, and all deltas are -2 when p×p.
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<Issue>,
}

impl TheoremReport {
    pub fn is_counterexample(&self) -> bool {
        !self.verdict || !self.issues.is_empty()
    }

    pub fn min_delta(&self) -> Option<isize> {
        self.nodes.iter().map(|n| n.actual_delta).min()
    }

    pub fn max_delta(&self) -> Option<isize> {
        self.nodes.iter().map(|n| n.actual_delta).max()
    }
}

fn oracle_check(
    lam: &Partition,
    p: Prime,
    core: &Partition,
    weight: usize,
    issues: &mut Vec<Issue>,
) {
    let (oracle_core, oracle_weight) = p_core_oracle(lam, p);
    if &oracle_core != core || oracle_weight != weight {
        issues.push(Issue::OracleMismatch {
            partition: lam.clone(),
            abacus_core: core.clone(),
            abacus_weight: weight,
            oracle_core,
            oracle_weight,
        });
    }
}

/// Checks the p×p weight-drop equivalence for `lam`.
///
/// The p×p side uses the part/multiplicity definition; the weight side
/// recomputes `w(λ_A)` for every removable node by pushing up a fresh
/// display. Those weights are also compared with rim-hook stripping and with
/// the runner-count formula; any disagreement is recorded in `issues`.
pub fn check_theorem(lam: &Partition, p: Prime) -> TheoremReport {
    let mut issues = Vec::new();
    let disp = AbacusDisplay::new(lam, p, BeadCount::Auto).expect("auto bead count");
    let (core_disp, weight) = disp.push_up();
    oracle_check(lam, p, &core_disp.partition(), weight, &mut issues);

    let is_pxp = is_p_by_p(lam, p);
    let core_quotient = is_p_by_p_abacus(lam, p);
    let rows = rows_full_or_empty(&disp);
    if is_pxp != core_quotient || is_pxp != rows {
        issues.push(Issue::PredicateDisagreement {
            definition: is_pxp,
            core_quotient,
            rows,
        });
    }

    let beads = disp.removable_beads();
    let nodes = lam.removable_nodes();
    let bead_nodes: Vec<Node> = beads.iter().map(|b| b.node).collect();
    if bead_nodes != nodes {
        issues.push(Issue::NodeBeadMismatch {
            nodes: nodes.clone(),
            beads: bead_nodes,
        });
    }

    let mut records = Vec::with_capacity(beads.len());
    for bead in &beads {
        let residue = bead.node.residue(p);
        if residue != bead.residue {
            issues.push(Issue::ResidueMismatch {
                node: bead.node,
                runner: bead.residue,
                residue,
            });
        }
        let predicted = predicted_weight_delta(&disp, bead.position).expect("bead is removable");
        let actual = match lam.remove_node(bead.node) {
            Ok(smaller) => {
                let (smaller_core, w) = p_core_and_weight(&smaller, p);
                oracle_check(&smaller, p, &smaller_core, w, &mut issues);
                w as isize - weight as isize
            }
            // NodeBeadMismatch already recorded; fall back to the bead slide
            Err(_) => {
                disp.slide_left(bead.position)
                    .expect("removable")
                    .push_up()
                    .1 as isize
                    - weight as isize
            }
        };
        if predicted != actual {
            issues.push(Issue::DeltaMismatch {
                node: bead.node,
                predicted,
                actual,
            });
        }
        records.push(NodeDelta {
            node: bead.node,
            position: bead.position,
            residue: bead.residue,
            predicted_delta: predicted,
            actual_delta: actual,
        });
    }

    let deltas: Vec<isize> = records.iter().map(|r| r.actual_delta).collect();
    let verdict = verdict_for(is_pxp, &deltas);
    let all_drop_two = deltas.iter().all(|&d| d <= -2);

    if all_drop_two {
        let counts = disp.runner_counts();
        if counts.windows(2).any(|w| w[0] < w[1]) {
            issues.push(Issue::RunnerCountsIncrease { counts });
        }
    }

    TheoremReport {
        partition: lam.clone(),
        p,
        weight,
        is_pxp,
        nodes: records,
        verdict,
        issues,
    }
}

/// Whether `is_pxp` and the weight changes of all removable nodes are
/// consistent: p×p exactly when every change is at most -2, and every change
/// exactly -2 in that case.
pub fn verdict_for(is_pxp: bool, deltas: &[isize]) -> bool {
    let all_drop_two = deltas.iter().all(|&d| d <= -2);
    let exact = deltas.iter().all(|&d| d == -2);
    is_pxp == all_drop_two && (!is_pxp || exact)
}

/// Weight of `lam` after removing `node`, minus the weight of `lam`.
pub fn weight_delta(lam: &Partition, node: Node, p: Prime) -> Result<isize> {
    let smaller = lam.remove_node(node)?;
    Ok(p_weight(&smaller, p) as isize - p_weight(lam, p) as isize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::abacus_display;
    use crate::partition::{partitions_of, Partition};

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn prime(p: usize) -> Prime {
        Prime::new(p).unwrap()
    }

    fn fig1() -> Partition {
        "20^10,10^5,5^5".parse().unwrap()
    }

    #[test]
    fn predicate_examples() {
        assert!(is_p_by_p(&fig1(), prime(5)));
        assert!(is_p_by_p(&part(&[3, 3, 3]), prime(3)));
        assert!(!is_p_by_p(&part(&[3, 1]), prime(2)));
        assert!(is_p_by_p(&Partition::empty(), prime(7)));

        assert!(is_p_by_p_abacus(&fig1(), prime(5)));
        assert!(is_p_by_p_abacus(&part(&[4, 4]), prime(2)));
        assert!(!is_p_by_p_abacus(&part(&[3, 3, 2]), prime(3)));
        assert!(is_p_by_p_rows(&fig1(), prime(5)));
    }

    #[test]
    fn four_four_quotient() {
        assert_eq!(
            p_quotient(&part(&[4, 4]), prime(2)).components(),
            &[part(&[2]), part(&[2])]
        );
    }

    #[test]
    fn recursive_examples() {
        assert!(is_p_by_p_recursive(&Partition::empty(), prime(3)));
        assert!(!is_p_by_p_recursive(&part(&[3, 3, 3]), prime(3)));
        assert!(!is_p_by_p_recursive(&part(&[4, 4]), prime(2)));
        // (4^4) at p = 2 has common quotient component (2,2), itself 2x2,
        // whose component (1) is not
        assert!(!is_p_by_p_recursive(&part(&[4, 4, 4, 4]), prime(2)));
        assert!(!is_p_by_p_recursive(&part(&[3, 1]), prime(2)));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(p_by_p_depth(&Partition::empty(), prime(2)), None);
        assert_eq!(p_by_p_depth(&part(&[3, 1]), prime(2)), Some(0));
        assert_eq!(p_by_p_depth(&part(&[4, 4]), prime(2)), Some(1));
        assert_eq!(p_by_p_depth(&part(&[4, 4, 4, 4]), prime(2)), Some(2));
        assert_eq!(p_by_p_depth(&part(&[8; 8]), prime(2)), Some(3));
    }

    #[test]
    fn recursive_holds_only_for_empty() {
        for d in 0..=32 {
            for lam in partitions_of(d) {
                for p in [2, 3] {
                    assert_eq!(is_p_by_p_recursive(&lam, prime(p)), lam.is_empty());
                }
            }
        }
    }

    #[test]
    fn predicted_delta_examples() {
        let d = abacus_display(&part(&[3, 3, 2]), prime(3), BeadCount::Exact(3)).unwrap();
        assert_eq!(predicted_weight_delta(&d, 2), Ok(0));
        assert_eq!(predicted_weight_delta(&d, 4), Ok(0));
        assert_eq!(
            predicted_weight_delta(&d, 5),
            Err(Error::NotRemovableBead { position: 5 })
        );
        assert_eq!(
            predicted_weight_delta(&d, 3),
            Err(Error::NotRemovableBead { position: 3 })
        );
        let d = abacus_display(&part(&[3, 3, 3]), prime(3), BeadCount::Exact(3)).unwrap();
        assert_eq!(predicted_weight_delta(&d, 3), Ok(-2));
    }

    #[test]
    fn direct_weight_deltas() {
        let p3 = prime(3);
        assert_eq!(weight_delta(&part(&[3, 3, 2]), Node::new(3, 2), p3), Ok(0));
        assert_eq!(weight_delta(&part(&[3, 3, 2]), Node::new(2, 3), p3), Ok(0));
        assert_eq!(weight_delta(&part(&[3, 3, 3]), Node::new(3, 3), p3), Ok(-2));
    }

    #[test]
    fn check_examples() {
        let r = check_theorem(&part(&[3, 3, 3]), prime(3));
        assert!(r.is_pxp && r.verdict && r.issues.is_empty());
        assert_eq!(r.weight, 3);
        assert_eq!(r.nodes.len(), 1);
        assert_eq!(r.nodes[0].actual_delta, -2);

        let r = check_theorem(&part(&[3, 1]), prime(2));
        assert!(!r.is_pxp && r.verdict && r.issues.is_empty());
        let deltas: Vec<(Node, isize)> = r.nodes.iter().map(|n| (n.node, n.actual_delta)).collect();
        assert_eq!(deltas, vec![(Node::new(1, 3), -2), (Node::new(2, 1), -1)]);

        let r = check_theorem(&Partition::empty(), prime(5));
        assert!(r.is_pxp && r.verdict && r.nodes.is_empty() && !r.is_counterexample());
    }

    #[test]
    fn verdict_rejects_inconsistent_inputs() {
        assert!(verdict_for(true, &[-2, -2]));
        assert!(verdict_for(true, &[]));
        assert!(!verdict_for(true, &[-3]));
        assert!(!verdict_for(true, &[-2, -1]));
        assert!(!verdict_for(false, &[-2, -3]));
        assert!(verdict_for(false, &[-2, -1]));
        assert!(verdict_for(false, &[0]));
    }

    #[test]
    fn report_json_omits_empty_issues() {
        let r = check_theorem(&part(&[2, 2]), prime(2));
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["partition"], serde_json::json!([2, 2]));
        assert_eq!(v["is_pxp"], serde_json::json!(true));
        assert!(v.get("issues").is_none());
    }

    #[test]
    fn predicates_agree() {
        for d in 0..=30 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5] {
                    let p = prime(p);
                    let a = is_p_by_p(&lam, p);
                    assert_eq!(a, is_p_by_p_abacus(&lam, p), "{lam} p={p}");
                    assert_eq!(a, is_p_by_p_rows(&lam, p), "{lam} p={p}");
                    assert_eq!(a, is_p_by_p(&lam.transpose(), p));
                    if a {
                        assert_eq!(d % (p.get() * p.get()), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn formula_matches_recomputed_weight() {
        for d in 0..=25 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5, 7] {
                    let p = prime(p);
                    let disp = AbacusDisplay::new(&lam, p, BeadCount::Auto).unwrap();
                    for bead in disp.removable_beads() {
                        assert_eq!(
                            predicted_weight_delta(&disp, bead.position).unwrap(),
                            weight_delta(&lam, bead.node, p).unwrap(),
                            "{lam} p={p} bead {}",
                            bead.position
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn no_counterexamples_small() {
        for d in 0..=20 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5] {
                    let r = check_theorem(&lam, prime(p));
                    assert!(!r.is_counterexample(), "{r:?}");
                }
            }
        }
    }
}
