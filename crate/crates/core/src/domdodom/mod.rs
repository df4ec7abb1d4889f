//! The (p,q)-dömdödöm: the smallest number of members that contain a
//! `p`-set `A` and avoid a disjoint `q`-set `B`, minimized over all such pairs.
//!
//! Two variants exist. *Containment* counts members with `A ⊆ F`; the
//! *intersection* variant (β′) counts members with `A ∩ F ≠ ∅` and is only
//! defined for `p ≥ 1`. Special cases of the containment variant:
//! `β₀₀ = |F|`, `β₁₀` is the minimum degree, `β₀₁` the diversity and `β₁₁`
//! the sturdiness.
//!
//! Evaluation strategies implement [`BetaEvaluator`] and are looked up by name
//! in an [`EvaluatorRegistry`]. All strategies return the same value and the
//! same witness: the least `(value, A, B)` with `A` and `B` compared as integers.

mod fast;
mod naive;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, SetWord};

pub use fast::{Fast, ParallelFast};
pub use naive::Naive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Containment,
    Intersection,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "containment" => Ok(Variant::Containment),
            "intersection" => Ok(Variant::Intersection),
            other => Err(Error::UnknownName {
                kind: "variant",
                name: other.to_string(),
                available: "containment, intersection".into(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BetaQuery {
    pub p: usize,
    pub q: usize,
    pub variant: Variant,
}

impl BetaQuery {
    pub fn containment(p: usize, q: usize) -> Self {
        BetaQuery { p, q, variant: Variant::Containment }
    }

    pub fn intersection(p: usize, q: usize) -> Self {
        BetaQuery { p, q, variant: Variant::Intersection }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.p + self.q > n {
            return Err(Error::QueryTooLarge { sum: self.p + self.q, n });
        }
        if self.variant == Variant::Intersection && self.p == 0 {
            return Err(Error::ZeroP);
        }
        Ok(())
    }
}

/// A β value with its lexicographically least minimizing pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WitnessedValue {
    pub value: u64,
    pub witness_a: SetWord,
    pub witness_b: SetWord,
}

impl WitnessedValue {
    /// Ordering key used for every tie-break and parallel reduction.
    #[inline]
    pub fn key(&self) -> (u64, u64, u64) {
        (self.value, self.witness_a.bits(), self.witness_b.bits())
    }
}

impl fmt::Debug for WitnessedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ A={:?} B={:?}", self.value, self.witness_a, self.witness_b)
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessedJson {
    value: u64,
    #[serde(rename = "witness_A")]
    witness_a: Vec<usize>,
    #[serde(rename = "witness_B")]
    witness_b: Vec<usize>,
}

impl Serialize for WitnessedValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessedJson {
            value: self.value,
            witness_a: self.witness_a.elements(),
            witness_b: self.witness_b.elements(),
        }
        .serialize(s)
    }
}

/// Number of members hit by `(a, b)` under `variant`, stopping once the count exceeds `cap`.
#[inline]
pub(crate) fn count_capped(words: &[u64], a: u64, b: u64, variant: Variant, cap: u64) -> u64 {
    let mut c = 0;
    match variant {
        Variant::Containment => {
            for &w in words {
                if w & a == a && w & b == 0 {
                    c += 1;
                    if c > cap {
                        break;
                    }
                }
            }
        }
        Variant::Intersection => {
            for &w in words {
                if w & a != 0 && w & b == 0 {
                    c += 1;
                    if c > cap {
                        break;
                    }
                }
            }
        }
    }
    c
}

/// A strategy for evaluating β and β′.
pub trait BetaEvaluator: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn evaluate(&self, family: &Family, query: &BetaQuery) -> Result<WitnessedValue>;
}

/// Name-keyed set of evaluators.
#[derive(Clone)]
pub struct EvaluatorRegistry {
    entries: BTreeMap<&'static str, Arc<dyn BetaEvaluator>>,
}

impl EvaluatorRegistry {
    pub fn empty() -> Self {
        EvaluatorRegistry { entries: BTreeMap::new() }
    }

    /// `naive`, `fast` and `parallel`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(Naive));
        r.register(Arc::new(Fast));
        r.register(Arc::new(ParallelFast));
        r
    }

    pub fn register(&mut self, evaluator: Arc<dyn BetaEvaluator>) {
        self.entries.insert(evaluator.name(), evaluator);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn BetaEvaluator>> {
        self.entries.get(name).cloned().ok_or_else(|| Error::UnknownName {
            kind: "evaluator",
            name: name.to_string(),
            available: self.names().join(", "),
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn BetaEvaluator>> {
        self.entries.values()
    }
}

impl Default for EvaluatorRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// β_{p,q}(F) by direct iteration over every disjoint pair.
pub fn beta(family: &Family, p: usize, q: usize) -> Result<WitnessedValue> {
    Naive.evaluate(family, &BetaQuery::containment(p, q))
}

/// β′_{p,q}(F) by direct iteration; requires `p ≥ 1`.
pub fn beta_prime(family: &Family, p: usize, q: usize) -> Result<WitnessedValue> {
    Naive.evaluate(family, &BetaQuery::intersection(p, q))
}

/// Either variant, iterating only over the support plus `p + q` spare elements.
pub fn beta_fast(family: &Family, query: &BetaQuery) -> Result<WitnessedValue> {
    Fast.evaluate(family, query)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::{binom, low_mask, Subsets};
    use crate::family::make_family;

    fn fano() -> Family {
        let lines = [[1, 2, 3], [3, 4, 5], [5, 6, 1], [2, 4, 6], [1, 4, 7], [3, 6, 7], [2, 5, 7]];
        make_family(7, 3, &lines.iter().map(|l| l.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn words_where(n: usize, k: usize, keep: impl Fn(u64) -> bool) -> Family {
        Family::from_words(n, k, Subsets::new(low_mask(n), k).filter(|&w| keep(w))).unwrap()
    }

    #[test]
    fn fano_beta_zero_two() {
        let r = beta(&fano(), 0, 2).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.witness_a.is_empty());
        assert_eq!(r.witness_b.elements(), vec![1, 2]);
    }

    #[test]
    fn beta_zero_zero_is_size() {
        assert_eq!(beta(&fano(), 0, 0).unwrap().value, 7);
    }

    #[test]
    fn f23_ten_four_sturdiness() {
        let f = words_where(10, 4, |w| (w & 0b111).count_ones() >= 2);
        let v = beta(&f, 1, 1).unwrap().value;
        assert_eq!(v, binom(6, 1));
        assert_eq!(v, 6);
    }

    #[test]
    fn fano_lift_twelve_five() {
        let fano = fano();
        let f = words_where(12, 5, |w| fano.words().iter().any(|&l| l & !w == 0));
        assert_eq!(beta(&f, 0, 2).unwrap().value, 41);
    }

    #[test]
    fn beta_prime_matches_beta_for_p_one() {
        let f = fano();
        for q in 0..=3 {
            assert_eq!(beta_prime(&f, 1, q).unwrap(), beta(&f, 1, q).unwrap());
        }
    }

    #[test]
    fn beta_prime_all_triples_of_four() {
        let f = Family::complete(4, 3).unwrap();
        assert_eq!(beta_prime(&f, 2, 1).unwrap().value, 1);
    }

    #[test]
    fn beta_prime_fano_two_two_dominates() {
        let f = fano();
        let lower = beta(&f, 1, 2).unwrap().value;
        let r = beta_prime(&f, 2, 2).unwrap();
        assert!(r.value >= lower);
        // P = {1,2} meets 123, 156, 246, 147, 257; Q = {4,5} leaves only 123.
        assert_eq!(r.value, 1);
        assert_eq!(r.witness_a.elements(), vec![1, 2]);
        assert_eq!(r.witness_b.elements(), vec![4, 5]);
    }

    #[test]
    fn errors() {
        let f = fano();
        assert_eq!(beta(&f, 4, 4), Err(Error::QueryTooLarge { sum: 8, n: 7 }));
        assert_eq!(beta_prime(&f, 0, 1), Err(Error::ZeroP));
    }

    #[test]
    fn fast_star_removal() {
        let star = words_where(20, 4, |w| w & 1 == 1);
        let r = beta_fast(&star, &BetaQuery::containment(0, 1)).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness_b.elements(), vec![1]);
    }

    #[test]
    fn registry_lookup() {
        let reg = EvaluatorRegistry::builtin();
        assert_eq!(reg.names(), vec!["fast", "naive", "parallel"]);
        assert!(matches!(reg.get("bogus"), Err(Error::UnknownName { .. })));
        let f = fano();
        let q = BetaQuery::containment(0, 2);
        let expect = beta(&f, 0, 2).unwrap();
        for e in reg.iter() {
            assert_eq!(e.evaluate(&f, &q).unwrap(), expect, "{}", e.name());
        }
    }

    #[test]
    fn witness_json_shape() {
        let r = beta(&fano(), 0, 2).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"value":2,"witness_A":[],"witness_B":[1,2]}"#
        );
    }
}
