//! The abacus calculus for integer partitions.
//!
//! Beta-numbers and p-runner abacus displays give p-cores, p-weights and
//! p-quotients; these classify the p-blocks of the symmetric group. On top of
//! that sits the study of p×p partitions (every part and every multiplicity
//! divisible by `p`), which are exactly the partitions whose p-weight drops by
//! at least two, and then exactly two, whenever any removable node is removed.
//!
//! ```
//! use abacus_core::{p_quotient, p_weight, is_p_by_p, Partition, Prime};
//!
//! let lam: Partition = "20^10,10^5,5^5".parse().unwrap();
//! let p = Prime::new(5).unwrap();
//! assert_eq!(p_weight(&lam, p), 55);
//! assert!(is_p_by_p(&lam, p));
//! let tau: Partition = "4^2,2,1".parse().unwrap();
//! assert_eq!(p_quotient(&lam, p).constant_component(), Some(&tau));
//! ```

pub mod abacus;
pub mod block;
pub mod campaign;
pub mod error;
pub mod partition;
pub mod prime;
pub mod pxp;
pub mod rim_hook;

pub use abacus::{
    abacus_display, beta_numbers, canonical_bead_count, first_column_hook_lengths, p_core,
    p_core_and_weight, p_quotient, p_weight, partition_from_beta, push_up, quotient_of_display,
    reconstruct, removable_beads, render_ascii, runner_counts, AbacusDisplay, BeadCount,
    BetaSequence, PQuotient, RemovableBead, RenderStyle,
};
pub use block::{
    block_descriptor, complexity_upper_bound, conjectured_complexity, defect_p_rank,
    restriction_factors, same_block, BlockDescriptor,
};
pub use campaign::{verify_degrees, verify_range, CampaignOptions, CampaignSummary, ReportRow};
pub use error::{Error, Result};
pub use partition::{node_residue, parse_partition, partitions_of, Node, Partition, Partitions};
pub use prime::Prime;
pub use pxp::{
    check_theorem, is_p_by_p, is_p_by_p_abacus, is_p_by_p_recursive, is_p_by_p_rows, p_by_p_depth,
    predicted_weight_delta, rows_full_or_empty, verdict_for, Issue, NodeDelta, TheoremReport,
};
pub use rim_hook::{p_core_oracle, p_core_oracle_by, remove_rim_hook, rim_hooks, RimHook};
