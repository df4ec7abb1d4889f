//! Covers (transversals), the covering number τ, up-closures and the
//! reconstruction of a maximal intersecting family from its minimal covers.
//!
//! Minimal covers are enumerated by branching on the first member not yet
//! hit: every minimal cover `T` is reached by always choosing the element of
//! `T` that hits that member. A partial cover is abandoned as soon as one of
//! its elements has no private member (a member hit by that element alone),
//! since adding elements can only take private members away.
//!
//! The `k^k` bound on minimal covers of size at most `k` is stated for
//! arbitrary k-uniform families, not only intersecting ones; the tests check
//! it on both kinds.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::bits::{self, binom, low_mask, Subsets};
use crate::error::{Error, Result};
use crate::family::{Family, SetWord};

/// τ, the minimal covers found, and their union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub tau: usize,
    /// Ascending by word.
    pub minimal_covers: Vec<SetWord>,
    pub support: SetWord,
}

impl CoverReport {
    pub fn cover_words(&self) -> Vec<u64> {
        self.minimal_covers.iter().map(|c| c.bits()).collect()
    }
}

impl Serialize for CoverReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            tau: usize,
            minimal_covers: Vec<Vec<usize>>,
            support: Vec<usize>,
        }
        Json {
            tau: self.tau,
            minimal_covers: self.minimal_covers.iter().map(|c| c.elements()).collect(),
            support: self.support.elements(),
        }
        .serialize(s)
    }
}

#[inline]
fn first_unhit(words: &[u64], x: u64) -> Option<u64> {
    words.iter().copied().find(|&w| w & x == 0)
}

/// Every element of `x` hits some member that no other element of `x` hits.
#[inline]
fn all_private(words: &[u64], x: u64) -> bool {
    let mut need = x;
    for &w in words {
        let hit = w & x;
        if hit != 0 && hit & (hit - 1) == 0 {
            need &= !hit;
            if need == 0 {
                return true;
            }
        }
    }
    need == 0
}

fn has_cover_within(words: &[u64], x: u64, budget: usize) -> bool {
    match first_unhit(words, x) {
        None => true,
        Some(_) if budget == 0 => false,
        Some(w) => bits::elements(w).any(|e| has_cover_within(words, x | 1 << (e - 1), budget - 1)),
    }
}

fn collect_minimal(words: &[u64], x: u64, budget: usize, out: &mut BTreeSet<u64>) {
    if !all_private(words, x) {
        return;
    }
    match first_unhit(words, x) {
        None => {
            out.insert(x);
        }
        Some(_) if budget == 0 => {}
        Some(w) => {
            for e in bits::elements(w) {
                collect_minimal(words, x | 1 << (e - 1), budget - 1, out);
            }
        }
    }
}

/// Least size of a set meeting every member; 0 for the empty family.
/// A family containing the empty set has no cover and reports `n + 1`.
pub fn covering_number(family: &Family) -> usize {
    if family.words().first() == Some(&0) {
        return family.n() + 1;
    }
    tau_of_words(family.words())
}

/// τ of a list of nonempty words.
pub(crate) fn tau_of_words(words: &[u64]) -> usize {
    (0..=64).find(|&s| has_cover_within(words, 0, s)).unwrap_or(usize::MAX)
}

/// All inclusion-minimal covers with at most `max_size` elements.
pub fn minimal_covers(family: &Family, max_size: usize) -> CoverReport {
    let n = family.n();
    if family.is_empty() {
        return CoverReport { tau: 0, minimal_covers: Vec::new(), support: SetWord::empty(n) };
    }
    let mut found = BTreeSet::new();
    collect_minimal(family.words(), 0, max_size.min(n), &mut found);
    let support = found.iter().fold(0, |a, c| a | c);
    CoverReport {
        tau: covering_number(family),
        minimal_covers: found
            .into_iter()
            .map(|c| SetWord::new(c, n).expect("covers live in [n]"))
            .collect(),
        support: SetWord::new(support, n).expect("covers live in [n]"),
    }
}

fn check_cover(t: u64, n: usize, k: usize) -> Result<()> {
    if t & !low_mask(n) != 0 {
        let element = 64 - t.leading_zeros() as usize;
        return Err(Error::ElementOutOfRange { element, n });
    }
    let size = t.count_ones() as usize;
    if size > k {
        return Err(Error::CoverTooLarge { size, k });
    }
    Ok(())
}

/// All k-subsets of `[n]` containing `t`.
pub fn up_closure(t: SetWord, n: usize, k: usize) -> Result<Family> {
    let words = up_closure_words(t.bits(), n, k)?;
    Family::from_words(n, k, words)
}

fn up_closure_words(t: u64, n: usize, k: usize) -> Result<Vec<u64>> {
    if k > n {
        return Err(Error::UniformityTooLarge { k, n });
    }
    check_cover(t, n, k)?;
    let rest = k - t.count_ones() as usize;
    Ok(Subsets::new(low_mask(n) & !t, rest).map(|g| g | t).collect())
}

/// Size of the up-closure of a `t`-set: C(n − t, k − t).
pub fn up_closure_size(t: usize, n: usize, k: usize) -> u64 {
    binom(n as i64 - t as i64, k as i64 - t as i64)
}

/// Union of the up-closures of `covers`.
pub fn close_to_maximal(covers: &[SetWord], n: usize, k: usize) -> Result<Family> {
    let mut words = Vec::new();
    for c in covers {
        words.extend(up_closure_words(c.bits(), n, k)?);
    }
    Family::from_words(n, k, words)
}

/// True iff no k-set outside the family meets every member.
pub fn is_maximal_intersecting(family: &Family) -> Result<bool> {
    if !family.is_intersecting() {
        return Err(Error::NotIntersecting);
    }
    let words = family.words();
    Ok(Subsets::new(low_mask(family.n()), family.k())
        .filter(|&c| !family.contains_word(c))
        .all(|c| c == 0 || words.iter().any(|&w| w & c == 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::make_family;

    fn fam(n: usize, k: usize, sets: &[&[usize]]) -> Family {
        make_family(n, k, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn fano() -> Family {
        fam(7, 3, &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 1], &[2, 4, 6], &[1, 4, 7], &[3, 6, 7], &[2, 5, 7]])
    }

    fn triangle() -> Family {
        fam(3, 2, &[&[1, 2], &[2, 3], &[1, 3]])
    }

    fn set(n: usize, e: &[usize]) -> SetWord {
        SetWord::from_elements(e, n).unwrap()
    }

    /// Every subset of the ground set, filtered by definition.
    fn brute_minimal_covers(f: &Family, max_size: usize) -> Vec<u64> {
        let is_cover = |x: u64| f.words().iter().all(|&w| w & x != 0);
        (0..1u64 << f.n())
            .filter(|&x| x.count_ones() as usize <= max_size && is_cover(x))
            .filter(|&x| bits::elements(x).all(|e| !is_cover(x & !(1 << (e - 1)))))
            .collect()
    }

    #[test]
    fn covering_numbers() {
        assert_eq!(covering_number(&fano()), 3);
        assert_eq!(covering_number(&up_closure(set(6, &[1]), 6, 3).unwrap()), 1);
        assert_eq!(covering_number(&triangle()), 2);
        assert_eq!(covering_number(&Family::empty(5, 3).unwrap()), 0);
    }

    #[test]
    fn fano_minimal_covers_are_its_lines() {
        let f = fano();
        let r = minimal_covers(&f, 3);
        assert_eq!(r.tau, 3);
        assert_eq!(r.cover_words(), f.words());
        assert_eq!(r.support.elements(), (1..=7).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_minimal_covers() {
        let r = minimal_covers(&triangle(), 2);
        assert_eq!(r.cover_words(), triangle().words());
        assert_eq!(r.tau, 2);
    }

    #[test]
    fn empty_family_report() {
        let r = minimal_covers(&Family::empty(5, 3).unwrap(), 3);
        assert_eq!(r.tau, 0);
        assert!(r.minimal_covers.is_empty());
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"tau":0,"minimal_covers":[],"support":[]}"#
        );
    }

    #[test]
    fn matches_brute_force_on_small_families() {
        let families = [
            fano(),
            triangle(),
            fam(6, 3, &[&[1, 2, 3], &[4, 5, 6], &[1, 4, 5]]),
            fam(5, 2, &[&[1, 2], &[3, 4], &[4, 5], &[1, 5]]),
            Family::complete(5, 3).unwrap(),
        ];
        for f in &families {
            for s in 0..=f.n() {
                assert_eq!(minimal_covers(f, s).cover_words(), brute_minimal_covers(f, s), "{f:?} s={s}");
            }
        }
    }

    #[test]
    fn up_closures() {
        assert_eq!(
            up_closure(set(5, &[1, 2]), 5, 3).unwrap().to_lists(),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5]]
        );
        assert_eq!(up_closure(set(7, &[1, 2, 3]), 7, 3).unwrap().to_lists(), vec![vec![1, 2, 3]]);
        assert_eq!(up_closure(SetWord::empty(5), 5, 3).unwrap().len(), 10);
        assert_eq!(
            up_closure(set(5, &[1, 2, 3, 4]), 5, 3),
            Err(Error::CoverTooLarge { size: 4, k: 3 })
        );
        assert_eq!(up_closure_size(2, 5, 3), 3);
    }

    #[test]
    fn close_single_star() {
        let f = close_to_maximal(&[set(6, &[1])], 6, 3).unwrap();
        assert_eq!(f.len(), 10);
        assert!(f.words().iter().all(|w| w & 1 == 1));
    }

    #[test]
    fn close_triangle_is_two_of_three() {
        let tri: Vec<SetWord> = triangle().words().iter().map(|&w| SetWord::new(w, 8).unwrap()).collect();
        let f = close_to_maximal(&tri, 8, 3).unwrap();
        let expect: Vec<u64> =
            Subsets::new(low_mask(8), 3).filter(|w| (w & 0b111).count_ones() >= 2).collect();
        assert_eq!(f.words(), expect.as_slice());
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_intersecting(&Family::complete(4, 3).unwrap()).unwrap());
        let star = up_closure(set(8, &[1]), 8, 3).unwrap();
        assert!(is_maximal_intersecting(&star).unwrap());
        let fewer = Family::from_words(8, 3, star.words()[1..].iter().copied()).unwrap();
        assert!(!is_maximal_intersecting(&fewer).unwrap());
        assert!(is_maximal_intersecting(&fano()).unwrap());
        let disjoint = fam(4, 2, &[&[1, 2], &[3, 4]]);
        assert_eq!(is_maximal_intersecting(&disjoint), Err(Error::NotIntersecting));
    }

    #[test]
    fn fano_lift_nine_four_is_maximal() {
        let f = fano();
        let lines: Vec<SetWord> = f.words().iter().map(|&w| SetWord::new(w, 9).unwrap()).collect();
        let lift = close_to_maximal(&lines, 9, 4).unwrap();
        assert!(lift.is_intersecting());
        assert!(is_maximal_intersecting(&lift).unwrap());
    }
}
