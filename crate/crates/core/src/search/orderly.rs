//! Isomorph-free generation of r-uniform intersecting families on `[v]`.
//!
//! Families are bitmasks over the r-subsets of `[v]`, indexed in ascending
//! word order, so index order and integer order agree. A family is canonical
//! when no relabeling produces a lexicographically smaller sorted word list.
//! Removing the largest member of a canonical family leaves a canonical
//! family, so every class is reached exactly once by growing canonical
//! families with members larger than their current maximum and keeping only
//! canonical children (orderly generation).
//!
//! The least relabeling of a family supported on fewer than `v` vertices
//! lives on the first vertices, so the canonical representative on `[v]` is
//! also the compacted canonical form of [`super::canonical`].
//!
//! Each node keeps the images of its family under every relabeling, so the
//! canonicity test for a child costs one word operation per relabeling.

use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::bits::{low_mask, Subsets};
use crate::covers::tau_of_words;
use crate::error::{Error, Result};
use crate::family::{permute_word, Family};

use super::canonical::for_each_permutation;
use super::checkpoint::{BranchResult, Checkpoint};
use super::{Constraints, EnumerationResult, SearchOptions, Stats};

/// Default vertex budget for the τ-constrained search.
pub const MAX_VERTICES: usize = 8;

/// Which canonical families to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    /// Every intersecting family, including the empty one.
    All,
    /// Only families with the given covering number.
    Tau(usize),
}

impl Filter {
    fn keep(self, words: &[u64]) -> bool {
        match self {
            Filter::All => true,
            Filter::Tau(t) => !words.is_empty() && tau_of_words(words) == t,
        }
    }
}

/// Shared node allowance across parallel branches.
struct Budget {
    limit: Option<u64>,
    spent: AtomicU64,
}

impl Budget {
    fn spend(&self) -> Result<()> {
        let spent = self.spent.fetch_add(1, Ordering::Relaxed) + 1;
        match self.limit {
            Some(limit) if spent > limit => {
                Err(Error::BudgetExceeded(format!("more than {limit} search nodes")))
            }
            _ => Ok(()),
        }
    }
}

/// Precomputed relabeling tables for r-subsets of `[v]`.
pub struct Orderly {
    v: usize,
    r: usize,
    words: Vec<u64>,
    /// Sets (as index masks) that intersect set `i`.
    meets: Vec<u128>,
    /// `perms[p * m + i]` is the index of the image of set `i` under relabeling `p`.
    perms: Vec<u8>,
    perm_count: usize,
}

/// A canonical family together with its images under every relabeling.
#[derive(Clone)]
struct Node {
    mask: u128,
    /// Indices above this may be added.
    next: usize,
    /// Intersection of `meets` over the members.
    compatible: u128,
    images: Vec<u128>,
}

impl Orderly {
    pub fn new(v: usize, r: usize) -> Result<Self> {
        if r == 0 || r > v || v > 9 {
            return Err(Error::BadParams {
                name: "orderly".into(),
                reason: format!("need 1 <= r <= v <= 9, got r = {r}, v = {v}"),
            });
        }
        let words: Vec<u64> = Subsets::new(low_mask(v), r).collect();
        let m = words.len();
        if m > 128 {
            return Err(Error::BudgetExceeded(format!("C({v},{r}) = {m} sets exceeds 128")));
        }
        let meets = words
            .iter()
            .map(|&a| {
                words.iter().enumerate().filter(|(_, &b)| a & b != 0).fold(0u128, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let mut perms = Vec::new();
        let mut perm_count = 0;
        for_each_permutation(v, |p| {
            perm_count += 1;
            for &w in &words {
                let img = permute_word(w, p);
                let j = words.binary_search(&img).expect("relabeling preserves uniformity");
                perms.push(j as u8);
            }
        });
        Ok(Orderly { v, r, words, meets, perms, perm_count })
    }

    pub fn set_count(&self) -> usize {
        self.words.len()
    }

    fn root(&self) -> Node {
        Node {
            mask: 0,
            next: 0,
            compatible: if self.words.len() == 128 { u128::MAX } else { (1u128 << self.words.len()) - 1 },
            images: vec![0; self.perm_count],
        }
    }

    /// The child of `node` adding set `t`, when that child is canonical.
    fn child(&self, node: &Node, t: usize) -> Option<Node> {
        let m = self.words.len();
        let mask = node.mask | 1 << t;
        let mut images = Vec::with_capacity(self.perm_count);
        for (p, &img) in node.images.iter().enumerate() {
            let img = img | 1 << self.perms[p * m + t];
            let d = img ^ mask;
            if d != 0 && img & (d & d.wrapping_neg()) != 0 {
                return None;
            }
            images.push(img);
        }
        Some(Node { mask, next: t + 1, compatible: node.compatible & self.meets[t], images })
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        let m = self.words.len();
        (node.next..m)
            .filter(|&t| node.compatible >> t & 1 == 1)
            .filter_map(|t| self.child(node, t))
            .collect()
    }

    fn words_of(&self, mask: u128) -> Vec<u64> {
        (0..self.words.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.words[i]).collect()
    }

    fn walk(&self, node: &Node, filter: Filter, nodes: &mut u64, found: &mut Vec<Vec<u64>>, budget: &Budget) -> Result<()> {
        *nodes += 1;
        budget.spend()?;
        let words = self.words_of(node.mask);
        if filter.keep(&words) {
            found.push(words);
        }
        for c in self.children(node) {
            self.walk(&c, filter, nodes, found, budget)?;
        }
        Ok(())
    }

    /// Canonical nodes at exactly `depth`, plus the counts and hits of shallower nodes.
    fn frontier(&self, depth: usize, filter: Filter) -> (Vec<Node>, u64, Vec<Vec<u64>>) {
        let mut level = vec![self.root()];
        let mut nodes = 0;
        let mut found = Vec::new();
        for _ in 0..depth {
            let mut next = Vec::new();
            for n in &level {
                nodes += 1;
                let words = self.words_of(n.mask);
                if filter.keep(&words) {
                    found.push(words);
                }
                next.extend(self.children(n));
            }
            level = next;
        }
        (level, nodes, found)
    }

    /// Runs the full generation, splitting at `split_depth` into independent
    /// branches that may run in parallel and are recorded in `checkpoint`.
    pub fn run(&self, filter: Filter, opts: &SearchOptions) -> Result<(Vec<Vec<u64>>, u64)> {
        let (branches, mut nodes, mut found) = self.frontier(opts.split_depth, filter);
        let ckpt = match &opts.checkpoint {
            Some(path) if path.exists() => {
                let c = Checkpoint::load(path)?;
                c.check_matches(self.v, self.r, opts.split_depth, branches.len())?;
                c
            }
            _ => Checkpoint::new(self.v, self.r, opts.split_depth, branches.len()),
        };
        let pending: Vec<usize> = (0..branches.len()).filter(|i| !ckpt.is_done(*i)).collect();
        let done_nodes: u64 = ckpt.branches.iter().map(|b| b.nodes).sum();
        let budget = Budget { limit: opts.max_nodes, spent: AtomicU64::new(nodes + done_nodes) };
        let shared = Mutex::new(ckpt);
        pending.par_iter().try_for_each(|&i| {
            let mut n = 0;
            let mut f = Vec::new();
            self.walk(&branches[i], filter, &mut n, &mut f, &budget)?;
            let mut guard = shared.lock().expect("checkpoint lock");
            guard.record(BranchResult { index: i, nodes: n, found: f });
            if let Some(path) = &opts.checkpoint {
                guard.save(path)?;
            }
            Ok::<(), Error>(())
        })?;
        let ckpt = shared.into_inner().expect("checkpoint lock");
        for b in &ckpt.branches {
            nodes += b.nodes;
            found.extend(b.found.iter().cloned());
        }
        found.sort();
        Ok((found, nodes))
    }
}

/// All (q+1)-uniform intersecting families with τ = q+1 on at most
/// `max_vertices` vertices, one canonical representative per class.
pub fn enumerate_tau_full(q: usize, max_vertices: usize) -> Result<EnumerationResult> {
    enumerate_tau_full_with(q, max_vertices, &SearchOptions::default())
}

pub fn enumerate_tau_full_with(q: usize, max_vertices: usize, opts: &SearchOptions) -> Result<EnumerationResult> {
    let r = q + 1;
    if max_vertices < r {
        return Err(Error::BadParams {
            name: "enumerate_tau_full".into(),
            reason: format!("need max_vertices >= q + 1 = {r}"),
        });
    }
    if max_vertices > MAX_VERTICES && !opts.force {
        return Err(Error::BudgetExceeded(format!(
            "vertex budget {max_vertices} exceeds {MAX_VERTICES} (use --force)"
        )));
    }
    enumerate_orderly(max_vertices, r, Filter::Tau(r), opts)
}

/// All intersecting r-uniform families on at most `v` vertices up to isomorphism.
pub fn enumerate_intersecting(v: usize, r: usize, opts: &SearchOptions) -> Result<EnumerationResult> {
    enumerate_orderly(v, r, Filter::All, opts)
}

fn enumerate_orderly(v: usize, r: usize, filter: Filter, opts: &SearchOptions) -> Result<EnumerationResult> {
    let start = Instant::now();
    let gen = Orderly::new(v, r)?;
    let (found, nodes) = gen.run(filter, opts)?;
    let families: Vec<Family> = found
        .into_iter()
        .map(|words| {
            let support = words.iter().fold(0u64, |a, w| a | w).count_ones() as usize;
            Family::from_words(support.max(r), r, words).expect("canonical forms are compact")
        })
        .collect();
    let classes = families.len();
    Ok(EnumerationResult {
        constraints: Constraints {
            n: None,
            k: r,
            intersecting: true,
            tau: match filter {
                Filter::Tau(t) => Some(t),
                Filter::All => None,
            },
            max_vertices: Some(v),
            maximal: false,
        },
        families,
        stats: Stats { nodes, classes, elapsed_ms: start.elapsed().as_millis() as u64 },
    })
}

/// Resumes (or starts) a run persisting progress at `path`.
pub fn enumerate_tau_full_resumable(q: usize, max_vertices: usize, path: &Path) -> Result<EnumerationResult> {
    let opts = SearchOptions { checkpoint: Some(path.to_path_buf()), ..SearchOptions::default() };
    enumerate_tau_full_with(q, max_vertices, &opts)
}
