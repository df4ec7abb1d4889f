//! Exhaustive, isomorph-rejecting searches.
//!
//! * [`enumerate_maximal`] lists every maximal intersecting family on `[n]`
//!   (maximal cliques of the intersection graph) and backs [`exact_beta`].
//! * [`enumerate_tau_full`] lists, up to isomorphism, the (q+1)-uniform
//!   intersecting families with covering number q+1 on a bounded number of
//!   vertices, by orderly generation.
//! * [`verify`] builds the constant β(q) and the classification reports on top.
//!
//! All outputs are sorted, so results do not depend on thread scheduling.

pub mod canonical;
pub mod checkpoint;
pub mod cliques;
pub mod orderly;
pub mod verify;

use std::path::PathBuf;

use serde::Serialize;

use crate::family::Family;

pub use canonical::{canonical_form, canonical_form_with, is_isomorphic, isomorphism_classes, CanonicalForm};
pub use cliques::{enumerate_maximal, enumerate_maximal_with, exact_beta, exact_beta_over, exact_beta_with, ExactBeta};
pub use orderly::{enumerate_intersecting, enumerate_tau_full, enumerate_tau_full_resumable, enumerate_tau_full_with};
pub use verify::{
    beta_constant, beta_constant_with, verify_lemma_charact, verify_lemma_charact_with, verify_thm02_part1,
    verify_thm02_uniqueness, BetaConstant, LemmaReport, Thm02Report, Thm02Status,
};

/// Knobs shared by the searches.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Lift the desk-scale guards.
    pub force: bool,
    /// Abort with `BudgetExceeded` after this many search nodes.
    pub max_nodes: Option<u64>,
    /// Progress file for resumable orderly runs.
    pub checkpoint: Option<PathBuf>,
    /// Depth at which the orderly search splits into independent branches.
    pub split_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { force: false, max_nodes: None, checkpoint: None, split_depth: 3 }
    }
}

/// The filters an enumeration applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraints {
    pub n: Option<usize>,
    pub k: usize,
    pub intersecting: bool,
    pub tau: Option<usize>,
    pub max_vertices: Option<usize>,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub classes: usize,
    pub elapsed_ms: u64,
}

/// Families found by a search, the constraints they satisfy, and counters.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationResult {
    #[serde(rename = "constraints_echo")]
    pub constraints: Constraints,
    pub families: Vec<Family>,
    pub stats: Stats,
}
