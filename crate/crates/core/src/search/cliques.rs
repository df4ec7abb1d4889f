//! Maximal intersecting families as maximal cliques of the graph on
//! `C([n], k)` whose edges join intersecting sets.

use std::time::Instant;

use rayon::prelude::*;

use crate::bits::{binom, low_mask, Subsets};
use crate::domdodom::{BetaEvaluator, BetaQuery, Fast};
use crate::error::{Error, Result};
use crate::family::Family;

use super::canonical::isomorphism_classes;
use super::{Constraints, EnumerationResult, SearchOptions, Stats};

/// Instances with more than this many k-sets are refused unless forced.
pub const MAX_INSTANCE: u64 = 150;

/// Fixed-width bitset over clique-graph vertices.
#[derive(Clone, PartialEq, Eq)]
struct VSet(Vec<u64>);

impl VSet {
    fn empty(m: usize) -> Self {
        VSet(vec![0; m.div_ceil(64)])
    }

    fn full(m: usize) -> Self {
        let mut s = Self::empty(m);
        for i in 0..m {
            s.insert(i);
        }
        s
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    fn and(&self, other: &VSet) -> VSet {
        VSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    #[inline]
    fn and_not(&self, other: &VSet) -> VSet {
        VSet(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    #[inline]
    fn and_count(&self, other: &VSet) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(block, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let i = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(block * 64 + i)
                }
            })
        })
    }
}

struct Graph {
    words: Vec<u64>,
    adj: Vec<VSet>,
}

impl Graph {
    fn intersection_graph(n: usize, k: usize) -> Graph {
        let words: Vec<u64> = Subsets::new(low_mask(n), k).collect();
        let m = words.len();
        let adj = (0..m)
            .map(|i| {
                let mut s = VSet::empty(m);
                for j in 0..m {
                    if i != j && words[i] & words[j] != 0 {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        Graph { words, adj }
    }
}

/// Tomita-style pivoting: branch only on candidates outside the pivot's
/// neighbourhood, the pivot maximizing `|P ∩ N(u)|` over `P ∪ X`.
fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: VSet, mut x: VSet, nodes: &mut u64, out: &mut Vec<Vec<usize>>) {
    *nodes += 1;
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.and_count(&g.adj[u]), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let branch = p.and_not(&g.adj[pivot]);
    let mut p = p;
    for v in branch.iter() {
        r.push(v);
        bron_kerbosch(g, r, p.and(&g.adj[v]), x.and(&g.adj[v]), nodes, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

pub(crate) fn check_instance(n: usize, k: usize, force: bool) -> Result<()> {
    if k > n || n > 64 {
        return Err(Error::BadParams { name: "enumerate_maximal".into(), reason: format!("need k <= n <= 64, got n = {n}, k = {k}") });
    }
    let size = binom(n as i64, k as i64);
    if size > MAX_INSTANCE && !force {
        return Err(Error::InstanceTooLarge { n, k, size, limit: MAX_INSTANCE });
    }
    Ok(())
}

/// Every maximal intersecting k-uniform family on `[n]`, sorted, not reduced by isomorphism.
pub fn enumerate_maximal(n: usize, k: usize) -> Result<EnumerationResult> {
    enumerate_maximal_with(n, k, &SearchOptions::default())
}

pub fn enumerate_maximal_with(n: usize, k: usize, opts: &SearchOptions) -> Result<EnumerationResult> {
    check_instance(n, k, opts.force)?;
    let start = Instant::now();
    let g = Graph::intersection_graph(n, k);
    let m = g.words.len();
    let mut cliques = Vec::new();
    let mut nodes = 0;
    if k == 0 {
        // {∅} is not intersecting; the empty family is the only (maximal) one.
        cliques.push(Vec::new());
    } else {
        bron_kerbosch(&g, &mut Vec::new(), VSet::full(m), VSet::empty(m), &mut nodes, &mut cliques);
    }
    if let Some(max) = opts.max_nodes {
        if nodes > max {
            return Err(Error::BudgetExceeded(format!("{nodes} clique nodes > budget {max}")));
        }
    }
    let mut families: Vec<Family> = cliques
        .into_iter()
        .map(|c| Family::from_words(n, k, c.into_iter().map(|i| g.words[i])).expect("k-sets of [n]"))
        .collect();
    families.sort();
    let classes = isomorphism_classes(&families).len();
    Ok(EnumerationResult {
        constraints: Constraints {
            n: Some(n),
            k,
            intersecting: true,
            tau: None,
            max_vertices: None,
            maximal: true,
        },
        families,
        stats: Stats { nodes, classes, elapsed_ms: start.elapsed().as_millis() as u64 },
    })
}

/// β_{p,q}(n, k) and every maximal family attaining it.
#[derive(Clone, Debug)]
pub struct ExactBeta {
    pub value: u64,
    pub extremal: Vec<Family>,
    pub examined: usize,
}

/// Exact β_{p,q}(n, k), maximizing over the maximal families (β is monotone under inclusion).
pub fn exact_beta(n: usize, k: usize, p: usize, q: usize) -> Result<ExactBeta> {
    exact_beta_with(n, k, p, q, &SearchOptions::default())
}

pub fn exact_beta_with(n: usize, k: usize, p: usize, q: usize, opts: &SearchOptions) -> Result<ExactBeta> {
    let query = BetaQuery::containment(p, q);
    query.validate(n)?;
    let all = enumerate_maximal_with(n, k, opts)?;
    exact_beta_over(&all.families, &query)
}

/// Maximum of β over already enumerated families.
pub fn exact_beta_over(families: &[Family], query: &BetaQuery) -> Result<ExactBeta> {
    let values = families
        .par_iter()
        .map(|f| Fast.evaluate(f, query).map(|w| w.value))
        .collect::<Result<Vec<u64>>>()?;
    let value = values.iter().copied().max().unwrap_or(0);
    let extremal = families
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v == value)
        .map(|(f, _)| f.clone())
        .collect();
    Ok(ExactBeta { value, extremal, examined: families.len() })
}
