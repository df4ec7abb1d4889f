//! Domination-type parameters β_{p,q} of uniform intersecting families.
//!
//! Families are stored as sorted bitmask words over a ground set `[n]` with
//! `n ≤ 64`. The crate evaluates β_{p,q} and β′_{p,q} (with witnesses),
//! enumerates minimal covers, builds the standard extremal constructions and
//! runs the exhaustive searches used to check the exact results at small
//! sizes.

pub mod bits;
pub mod checks;
pub mod constructions;
pub mod covers;
pub mod domdodom;
pub mod error;
pub mod family;
pub mod io;
pub mod sample;
pub mod search;

pub use covers::{close_to_maximal, covering_number, minimal_covers, up_closure, CoverReport};
pub use domdodom::{beta, beta_fast, beta_prime, BetaEvaluator, BetaQuery, EvaluatorRegistry, Variant, WitnessedValue};
pub use error::{Error, Result};
pub use family::{make_family, Family, SetWord};
