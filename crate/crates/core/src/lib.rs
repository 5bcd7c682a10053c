//! Flat maximal antichains in the Boolean lattice: exact constructions for
//! every achievable size on two consecutive levels, an independent verifier,
//! closed-form size predicates, and an exhaustive oracle at small scale.

pub mod antichain;
pub mod cascade;
pub mod characterize;
pub mod counting;
pub mod document;
pub mod error;
pub mod family;
pub mod lift;
pub mod mask;
pub mod oracle;
pub mod planner;
pub mod stars;
pub mod tgraph;

pub use antichain::{assemble_from_upper, check_maximal_flat, verify_maximal, FlatAntichain, VerifyReport};
pub use cascade::{cascade_representation, kk_shadow_size, squashed_is_maximal, squashed_size, CascadeRep};
pub use counting::{binomial, catalan_prefix_sum, overlap_slack};
pub use error::{Error, Result};
pub use family::{colex_prefix, level_masks, Family};
pub use mask::SubsetMask;
