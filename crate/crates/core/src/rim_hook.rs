//! Rim p-hook stripping computed directly on the Young diagram.
//!
//! This never touches beta-numbers or the abacus, so it serves as an
//! independent oracle for `p_core` and `p_weight`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Node, Partition};
use crate::prime::Prime;

/// A rim hook, identified by its two end cells on the rim.
///
/// `hand` is the last cell of the topmost row the hook meets, `foot` the first
/// cell of its bottom row. The hook consists of the border cells between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RimHook {
    pub hand: Node,
    pub foot: Node,
}

impl RimHook {
    /// Number of cells in the strip.
    pub fn len(&self, lam: &Partition) -> usize {
        // hook length of the corner cell (hand.row, foot.col)
        lam.part(self.hand.row) - self.foot.col + self.foot.row - self.hand.row + 1
    }
}

/// The rim hook of length `len` whose hand is in row `row`, if any.
fn hook_from_row(lam: &Partition, row: usize, len: usize) -> Option<RimHook> {
    let arm_end = lam.part(row) as isize;
    for bottom in row..=lam.len() {
        // corner column with hook length `len` when the leg reaches `bottom`
        let col = arm_end - row as isize + bottom as isize + 1 - len as isize;
        let lo = lam.part(bottom + 1) as isize;
        let hi = lam.part(bottom) as isize;
        if col >= 1 && lo < col && col <= hi {
            return Some(RimHook {
                hand: Node::new(row, lam.part(row)),
                foot: Node::new(bottom, col as usize),
            });
        }
    }
    None
}

/// All removable rim hooks with exactly `p` cells, by decreasing hand row.
pub fn rim_hooks(lam: &Partition, p: Prime) -> Vec<RimHook> {
    (1..=lam.len())
        .rev()
        .filter_map(|row| hook_from_row(lam, row, p.get()))
        .collect()
}

pub fn remove_rim_hook(lam: &Partition, hook: RimHook) -> Result<Partition> {
    let RimHook { hand, foot } = hook;
    let valid = hand.row >= 1
        && hand.row <= foot.row
        && foot.row <= lam.len()
        && hand.col == lam.part(hand.row)
        && foot.col >= 1
        && foot.col <= lam.part(foot.row)
        && foot.col > lam.part(foot.row + 1);
    if !valid {
        return Err(Error::NotRemovable {
            node: hand,
            partition: lam.clone(),
        });
    }
    let mut parts = lam.parts().to_vec();
    for row in hand.row..foot.row {
        parts[row - 1] = lam.part(row + 1) - 1;
    }
    parts[foot.row - 1] = foot.col - 1;
    Ok(Partition::from_sorted(parts))
}

/// Strips rim `p`-hooks until none remain, letting `choose` pick which of the
/// currently removable hooks to take. Returns the core and the hook count.
pub fn p_core_oracle_by<F>(lam: &Partition, p: Prime, mut choose: F) -> (Partition, usize)
where
    F: FnMut(&[RimHook]) -> usize,
{
    let mut current = lam.clone();
    let mut removed = 0;
    loop {
        let hooks = rim_hooks(&current, p);
        if hooks.is_empty() {
            return (current, removed);
        }
        let pick = choose(&hooks);
        current = remove_rim_hook(&current, hooks[pick]).expect("listed hook is removable");
        removed += 1;
    }
}

/// The p-core and p-weight by rim-hook stripping, always removing the hook
/// whose hand sits lowest.
pub fn p_core_oracle(lam: &Partition, p: Prime) -> (Partition, usize) {
    let mut current = lam.clone();
    let mut removed = 0;
    'strip: loop {
        for row in (1..=current.len()).rev() {
            if let Some(hook) = hook_from_row(&current, row, p.get()) {
                current = remove_rim_hook(&current, hook).expect("found hook is removable");
                removed += 1;
                continue 'strip;
            }
        }
        return (current, removed);
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::partition::partitions_of;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn prime(p: usize) -> Prime {
        Prime::new(p).unwrap()
    }

    fn cells(lam: &Partition) -> BTreeSet<(usize, usize)> {
        (1..=lam.len())
            .flat_map(|r| (1..=lam.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// Brute-force hook lengths from the diagram: arm + leg + 1.
    fn brute_hook_count(lam: &Partition, len: usize) -> usize {
        let cs = cells(lam);
        cs.iter()
            .filter(|&&(r, c)| {
                let arm = cs.iter().filter(|&&(r2, c2)| r2 == r && c2 > c).count();
                let leg = cs.iter().filter(|&&(r2, c2)| c2 == c && r2 > r).count();
                arm + leg + 1 == len
            })
            .count()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            p_core_oracle(&part(&[3, 3, 3]), prime(3)),
            (Partition::empty(), 3)
        );
        assert_eq!(p_core_oracle(&part(&[2, 1]), prime(2)), (part(&[2, 1]), 0));
        assert_eq!(
            p_core_oracle(&part(&[3, 3, 2]), prime(3)),
            (part(&[3, 1, 1]), 1)
        );
        assert_eq!(
            p_core_oracle(&part(&[3, 1]), prime(2)),
            (Partition::empty(), 2)
        );
        assert_eq!(
            p_core_oracle(&Partition::empty(), prime(5)),
            (Partition::empty(), 0)
        );
    }

    #[test]
    fn hooks_are_connected_border_strips() {
        for d in 1..=14 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5] {
                    let hooks = rim_hooks(&lam, prime(p));
                    assert_eq!(hooks.len(), brute_hook_count(&lam, p), "{lam} p={p}");
                    for hook in hooks {
                        assert_eq!(hook.len(&lam), p);
                        let rest = remove_rim_hook(&lam, hook).unwrap();
                        let strip: Vec<(usize, usize)> =
                            cells(&lam).difference(&cells(&rest)).copied().collect();
                        assert_eq!(strip.len(), p);
                        let set: BTreeSet<_> = strip.iter().copied().collect();
                        // no 2x2 square
                        for &(r, c) in &strip {
                            assert!(
                                !(set.contains(&(r + 1, c))
                                    && set.contains(&(r, c + 1))
                                    && set.contains(&(r + 1, c + 1)))
                            );
                        }
                        // connected via edge adjacency
                        let mut seen = BTreeSet::from([strip[0]]);
                        let mut stack = vec![strip[0]];
                        while let Some((r, c)) = stack.pop() {
                            for nb in [
                                (r + 1, c),
                                (r.wrapping_sub(1), c),
                                (r, c + 1),
                                (r, c.wrapping_sub(1)),
                            ] {
                                if set.contains(&nb) && seen.insert(nb) {
                                    stack.push(nb);
                                }
                            }
                        }
                        assert_eq!(seen.len(), p);
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_leaves_no_hook() {
        for d in 0..=18 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5, 7] {
                    let (core, w) = p_core_oracle(&lam, prime(p));
                    assert!(rim_hooks(&core, prime(p)).is_empty());
                    assert_eq!(core.size() + p * w, d);
                }
            }
        }
    }

    #[test]
    fn removal_order_does_not_matter() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for d in 0..=18 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5] {
                    let expected = p_core_oracle(&lam, prime(p));
                    for _ in 0..20 {
                        let got = p_core_oracle_by(&lam, prime(p), |hs| rng.gen_range(0..hs.len()));
                        assert_eq!(got, expected, "{lam} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_hook_rejected() {
        let lam = part(&[3, 3, 2]);
        let bogus = RimHook {
            hand: Node::new(1, 2),
            foot: Node::new(1, 1),
        };
        assert!(remove_rim_hook(&lam, bogus).is_err());
    }
}
