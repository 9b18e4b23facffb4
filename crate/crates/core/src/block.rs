//! Blocks of the symmetric group, classified by p-core and p-weight.

use serde::{Deserialize, Serialize};

use crate::abacus::p_core_and_weight;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;
use crate::pxp::is_p_by_p;

/// A p-block of `Σ_d` given by its p-core and weight, `d = |core| + p·weight`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockDescriptor {
    pub p: Prime,
    pub core: Partition,
    pub weight: usize,
}

impl BlockDescriptor {
    /// The degree `d` of the symmetric group the block belongs to.
    pub fn degree(&self) -> usize {
        self.core.size() + self.p.get() * self.weight
    }
}

pub fn block_descriptor(lam: &Partition, p: Prime) -> BlockDescriptor {
    let (core, weight) = p_core_and_weight(lam, p);
    BlockDescriptor { p, core, weight }
}

/// Whether two Specht modules of the same `Σ_d` share a p-block, i.e. whether
/// the partitions have equal p-cores.
pub fn same_block(lam: &Partition, mu: &Partition, p: Prime) -> Result<bool> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lam.size(),
            right: mu.size(),
        });
    }
    Ok(block_descriptor(lam, p) == block_descriptor(mu, p))
}

/// The p-rank of a defect group of the block, which is its weight. No module
/// in the block has complexity above this.
pub fn defect_p_rank(block: &BlockDescriptor) -> usize {
    block.weight
}

/// The partitions labelling the Specht factors of the restriction to
/// `Σ_{d-1}`, one per removable node in row order. Each occurs once.
pub fn restriction_factors(lam: &Partition) -> Result<Vec<Partition>> {
    if lam.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(lam
        .removable_nodes()
        .into_iter()
        .map(|node| lam.remove_node(node).expect("node is removable"))
        .collect())
}

/// Proven upper bound on the complexity of the Specht module: `w - 1` for
/// p×p partitions, `w` otherwise. The empty partition gets 0.
pub fn complexity_upper_bound(lam: &Partition, p: Prime) -> usize {
    let w = block_descriptor(lam, p).weight;
    if is_p_by_p(lam, p) {
        w.saturating_sub(1)
    } else {
        w
    }
}

/// The complexity predicted by the open conjecture that non-p×p Specht
/// modules reach the block maximum. `None` for p×p partitions, where only the
/// strict bound `< w` is claimed. Conjectural: not a proven value.
pub fn conjectured_complexity(lam: &Partition, p: Prime) -> Option<usize> {
    (!is_p_by_p(lam, p)).then(|| block_descriptor(lam, p).weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::p_weight;
    use crate::partition::partitions_of;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn prime(p: usize) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn descriptor_examples() {
        let b = block_descriptor(&part(&[3, 3, 3]), prime(3));
        assert_eq!((b.core.clone(), b.weight), (Partition::empty(), 3));
        assert_eq!(b.degree(), 9);
        assert_eq!(defect_p_rank(&b), 3);

        let b = block_descriptor(&part(&[2, 1]), prime(2));
        assert_eq!((b.core.clone(), b.weight), (part(&[2, 1]), 0));
        assert_eq!(defect_p_rank(&b), 0);

        let b = block_descriptor(&Partition::empty(), prime(5));
        assert_eq!((b.core.clone(), b.weight), (Partition::empty(), 0));

        let fig1: Partition = "20^10,10^5,5^5".parse().unwrap();
        assert_eq!(defect_p_rank(&block_descriptor(&fig1, prime(5))), 55);
    }

    #[test]
    fn descriptor_json() {
        let b = block_descriptor(&part(&[3, 3, 2]), prime(3));
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"p":3,"core":[3,1,1],"weight":1}"#
        );
    }

    #[test]
    fn same_block_examples() {
        let p3 = prime(3);
        assert!(same_block(&part(&[3, 3, 2]), &part(&[6, 1, 1]), p3).unwrap());
        assert!(!same_block(&part(&[3, 3, 2]), &part(&[2, 2, 2, 2]), p3).unwrap());
        assert!(same_block(&part(&[4, 1]), &part(&[4, 1]), p3).unwrap());
        assert_eq!(
            same_block(&part(&[3]), &part(&[3, 1]), p3),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(
            restriction_factors(&part(&[3, 3, 3])).unwrap(),
            vec![part(&[3, 3, 2])]
        );
        assert_eq!(
            restriction_factors(&part(&[3, 3, 2])).unwrap(),
            vec![part(&[3, 2, 2]), part(&[3, 3, 1])]
        );
        assert_eq!(
            restriction_factors(&part(&[1])).unwrap(),
            vec![Partition::empty()]
        );
        assert_eq!(
            restriction_factors(&Partition::empty()),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn bound_examples() {
        assert_eq!(complexity_upper_bound(&part(&[3, 3, 3]), prime(3)), 2);
        assert_eq!(complexity_upper_bound(&part(&[3, 1]), prime(2)), 2);
        assert_eq!(complexity_upper_bound(&part(&[4, 4]), prime(2)), 3);
        assert_eq!(complexity_upper_bound(&Partition::empty(), prime(2)), 0);
        assert_eq!(conjectured_complexity(&part(&[3, 1]), prime(2)), Some(2));
        assert_eq!(conjectured_complexity(&part(&[4, 4]), prime(2)), None);
    }

    #[test]
    fn same_block_is_an_equivalence() {
        for p in [2, 3] {
            let p = prime(p);
            for d in 0..=15 {
                let all: Vec<Partition> = partitions_of(d).collect();
                let cores: Vec<BlockDescriptor> =
                    all.iter().map(|l| block_descriptor(l, p)).collect();
                for (i, a) in all.iter().enumerate() {
                    assert!(same_block(a, a, p).unwrap());
                    for (j, b) in all.iter().enumerate() {
                        let ab = same_block(a, b, p).unwrap();
                        assert_eq!(ab, same_block(b, a, p).unwrap());
                        assert_eq!(ab, cores[i].core == cores[j].core);
                    }
                }
                // weight-zero blocks are singletons
                for (i, a) in all.iter().enumerate() {
                    if cores[i].weight == 0 {
                        assert_eq!(&cores[i].core, a);
                        let members = cores.iter().filter(|c| c.core == cores[i].core).count();
                        assert_eq!(members, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_factor_properties() {
        for d in 1..=18 {
            for lam in partitions_of(d) {
                let factors = restriction_factors(&lam).unwrap();
                assert!(factors.iter().all(|f| f.size() == d - 1));
                for (i, a) in factors.iter().enumerate() {
                    assert!(factors[i + 1..].iter().all(|b| b != a));
                }
                for p in [2, 3] {
                    let p = prime(p);
                    if is_p_by_p(&lam, p) {
                        let w = p_weight(&lam, p);
                        assert!(factors.iter().all(|f| p_weight(f, p) == w - 2));
                    }
                }
            }
        }
    }

    #[test]
    fn bound_is_strict_exactly_for_pxp() {
        for d in 1..=20 {
            for lam in partitions_of(d) {
                for p in [2, 3, 5] {
                    let p = prime(p);
                    let rank = defect_p_rank(&block_descriptor(&lam, p));
                    let bound = complexity_upper_bound(&lam, p);
                    assert!(bound <= rank);
                    assert_eq!(bound < rank, is_p_by_p(&lam, p));
                }
            }
        }
    }
}
