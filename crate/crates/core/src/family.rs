//! Ground-set words and k-uniform families.
//!
//! Elements are 1-indexed at the API boundary and stored as bit `i - 1`.
//! A [`Family`] keeps its members sorted strictly ascending as integers, so
//! equality of two families is equality of their word vectors.
//!
//! The empty family is legal for every `k`. With `k = 0` the only possible
//! member is the empty set, and `{∅}` is *not* intersecting because
//! `∅ ∩ ∅ = ∅`.

use std::fmt;

use crate::bits::{self, low_mask, Subsets};
use crate::error::{Error, Result};

/// Largest supported ground set: one set per machine word.
pub const MAX_GROUND: usize = 64;

/// A subset of the ground set `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetWord {
    bits: u64,
    n: u8,
}

impl SetWord {
    pub fn new(bits: u64, n: usize) -> Result<Self> {
        check_ground(n)?;
        if bits & !low_mask(n) != 0 {
            let element = 64 - bits.leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(SetWord { bits, n: n as u8 })
    }

    pub fn empty(n: usize) -> Self {
        SetWord { bits: 0, n: n.min(MAX_GROUND) as u8 }
    }

    /// Builds a set from 1-indexed elements; duplicates collapse.
    pub fn from_elements(elements: &[usize], n: usize) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SetWord { bits, n: n as u8 })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn ground(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: usize) -> bool {
        (1..=64).contains(&element) && self.bits >> (element - 1) & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: SetWord) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: SetWord) -> bool {
        self.bits & other.bits == 0
    }

    pub fn union(self, other: SetWord) -> SetWord {
        SetWord { bits: self.bits | other.bits, n: self.n.max(other.n) }
    }

    pub fn elements(self) -> Vec<usize> {
        bits::elements(self.bits).collect()
    }
}

impl fmt::Debug for SetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in bits::elements(self.bits).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

/// A k-uniform family on `[n]`, stored in canonical ascending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    n: usize,
    k: usize,
    words: Vec<u64>,
}

impl Family {
    /// Builds a family from 1-indexed element lists.
    pub fn from_lists(n: usize, k: usize, sets: &[Vec<usize>]) -> Result<Self> {
        check_params(n, k)?;
        let mut words = Vec::with_capacity(sets.len());
        for set in sets {
            let word = SetWord::from_elements(set, n)?;
            if word.len() != k || set.len() != k {
                return Err(Error::NonUniformSet { set: set.clone(), size: word.len(), k });
            }
            words.push(word.bits);
        }
        Ok(Self::from_words_unchecked(n, k, words))
    }

    /// Builds a family from raw words, validating range and uniformity.
    pub fn from_words(n: usize, k: usize, words: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_params(n, k)?;
        let mask = low_mask(n);
        let mut out = Vec::new();
        for w in words {
            if w & !mask != 0 {
                let element = 64 - w.leading_zeros() as usize;
                return Err(Error::ElementOutOfRange { element, n });
            }
            if w.count_ones() as usize != k {
                let set = bits::elements(w).collect();
                return Err(Error::NonUniformSet { set, size: w.count_ones() as usize, k });
            }
            out.push(w);
        }
        Ok(Self::from_words_unchecked(n, k, out))
    }

    /// Caller guarantees every word is a k-subset of `[n]`; order and duplicates are fixed up.
    pub(crate) fn from_words_unchecked(n: usize, k: usize, mut words: Vec<u64>) -> Self {
        debug_assert!(words.iter().all(|w| w.count_ones() as usize == k && w & !low_mask(n) == 0));
        words.sort_unstable();
        words.dedup();
        Family { n, k, words }
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        Ok(Family { n, k, words: Vec::new() })
    }

    /// Every k-subset of `[n]`.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        Ok(Family { n, k, words: Subsets::new(low_mask(n), k).collect() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Member words, ascending.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn sets(&self) -> impl Iterator<Item = SetWord> + '_ {
        let n = self.n as u8;
        self.words.iter().map(move |&bits| SetWord { bits, n })
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.words.iter().map(|&w| bits::elements(w).collect()).collect()
    }

    pub fn contains(&self, set: SetWord) -> bool {
        self.contains_word(set.bits)
    }

    #[inline]
    pub fn contains_word(&self, word: u64) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    /// Union of all members.
    pub fn support(&self) -> u64 {
        self.words.iter().fold(0, |acc, w| acc | w)
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.words.iter().all(|&w| other.contains_word(w))
    }

    /// Members containing all of `a` and avoiding all of `b`.
    pub fn restrict(&self, a: SetWord, b: SetWord) -> Result<Family> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingAB);
        }
        let outside = !low_mask(self.n);
        if (a.bits | b.bits) & outside != 0 {
            let element = 64 - ((a.bits | b.bits) & outside).leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n: self.n });
        }
        let words = self
            .words
            .iter()
            .copied()
            .filter(|&w| w & a.bits == a.bits && w & b.bits == 0)
            .collect();
        Ok(Family { n: self.n, k: self.k, words })
    }

    /// True iff every two members (not necessarily distinct) share an element.
    pub fn is_intersecting(&self) -> bool {
        self.words.iter().enumerate().all(|(i, &a)| {
            a != 0 && self.words[i + 1..].iter().all(|&b| a & b != 0)
        })
    }

    /// Number of members containing each element, indexed by element - 1.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &w in &self.words {
            for e in bits::elements(w) {
                deg[e - 1] += 1;
            }
        }
        deg
    }

    /// `(min degree, max degree, diversity)` over all elements of `[n]`.
    pub fn degree_stats(&self) -> DegreeStats {
        let deg = self.degrees();
        let min = deg.iter().copied().min().unwrap_or(0);
        let max = deg.iter().copied().max().unwrap_or(0);
        DegreeStats { min_degree: min, max_degree: max, diversity: self.len() - max }
    }

    /// Same members viewed inside a larger ground set.
    pub fn embed(&self, n: usize) -> Result<Family> {
        check_params(n, self.k)?;
        if self.support() & !low_mask(n) != 0 {
            return Err(Error::GroundSetMismatch(self.n, n));
        }
        Ok(Family { n, k: self.k, words: self.words.clone() })
    }

    /// Image under a relabeling: `perm[i]` is the new 0-based position of element `i + 1`.
    pub fn relabel(&self, perm: &[usize]) -> Family {
        assert_eq!(perm.len(), self.n, "permutation must cover the ground set");
        let words = self.words.iter().map(|&w| permute_word(w, perm)).collect();
        Family::from_words_unchecked(self.n, self.k, words)
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::GroundSetMismatch(self.n, other.n));
        }
        let mut words = self.words.clone();
        words.extend_from_slice(&other.words);
        Ok(Family::from_words_unchecked(self.n, self.k, words))
    }
}

/// Applies a 0-based position permutation to one word.
#[inline]
pub fn permute_word(mut w: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    while w != 0 {
        let i = w.trailing_zeros() as usize;
        out |= 1 << perm[i];
        w &= w - 1;
    }
    out
}

fn check_params(n: usize, k: usize) -> Result<()> {
    check_ground(n)?;
    if k > n {
        return Err(Error::UniformityTooLarge { k, n });
    }
    Ok(())
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, k={}, ", self.n, self.k)?;
        f.debug_list().entries(self.sets()).finish()?;
        write!(f, ")")
    }
}

/// Output of [`Family::degree_stats`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub diversity: usize,
}

/// Validated constructor matching the external `(n, k, lists)` contract.
pub fn make_family(n: usize, k: usize, sets: &[Vec<usize>]) -> Result<Family> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Family::from_lists(n, k, sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Family {
        let lines = [[1, 2, 3], [3, 4, 5], [5, 6, 1], [2, 4, 6], [1, 4, 7], [3, 6, 7], [2, 5, 7]];
        make_family(7, 3, &lines.iter().map(|l| l.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn set(n: usize, e: &[usize]) -> SetWord {
        SetWord::from_elements(e, n).unwrap()
    }

    #[test]
    fn make_family_fano_and_empty() {
        assert_eq!(fano().len(), 7);
        assert!(make_family(5, 3, &[]).unwrap().is_empty());
    }

    #[test]
    fn make_family_dedups_and_sorts() {
        let f = make_family(
            4,
            3,
            &[vec![2, 3, 4], vec![1, 2, 3], vec![1, 3, 4], vec![1, 2, 4], vec![3, 2, 1]],
        )
        .unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.words().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn make_family_errors() {
        assert_eq!(
            make_family(5, 3, &[vec![1, 2, 6]]),
            Err(Error::ElementOutOfRange { element: 6, n: 5 })
        );
        assert!(matches!(make_family(5, 3, &[vec![1, 2]]), Err(Error::NonUniformSet { .. })));
        assert!(matches!(make_family(5, 3, &[vec![1, 2, 2]]), Err(Error::NonUniformSet { .. })));
        assert_eq!(make_family(65, 3, &[]), Err(Error::GroundSetTooLarge(65)));
        assert_eq!(make_family(0, 0, &[]), Err(Error::EmptyGroundSet));
    }

    #[test]
    fn restrict_fano_avoiding_one_two() {
        let r = fano().restrict(SetWord::empty(7), set(7, &[1, 2])).unwrap();
        assert_eq!(r.to_lists(), vec![vec![3, 4, 5], vec![3, 6, 7]]);
    }

    #[test]
    fn restrict_identity_and_overlap() {
        let f = fano();
        assert_eq!(f.restrict(SetWord::empty(7), SetWord::empty(7)).unwrap(), f);
        assert_eq!(f.restrict(set(7, &[1]), set(7, &[1, 2])), Err(Error::OverlappingAB));
    }

    #[test]
    fn restrict_f23_six_three() {
        // Triples of [6] meeting [3] at least twice.
        let f23 = Family::from_words_unchecked(
            6,
            3,
            Subsets::new(0b111111, 3).filter(|w| (w & 0b111).count_ones() >= 2).collect(),
        );
        let r = f23.restrict(set(6, &[1]), set(6, &[4])).unwrap();
        // Integer order: 123 < 125 < 135 < 126 < 136.
        assert_eq!(
            r.to_lists(),
            vec![vec![1, 2, 3], vec![1, 2, 5], vec![1, 3, 5], vec![1, 2, 6], vec![1, 3, 6]]
        );
    }

    #[test]
    fn intersecting_cases() {
        assert!(fano().is_intersecting());
        assert!(!make_family(4, 2, &[vec![1, 2], vec![3, 4]]).unwrap().is_intersecting());
        assert!(make_family(4, 2, &[]).unwrap().is_intersecting());
        assert!(make_family(4, 2, &[vec![1, 2]]).unwrap().is_intersecting());
        assert!(!make_family(3, 0, &[vec![]]).unwrap().is_intersecting());
    }

    #[test]
    fn degree_stats_cases() {
        let s = fano().degree_stats();
        assert_eq!((s.min_degree, s.max_degree, s.diversity), (3, 3, 4));
        let star = Family::from_words_unchecked(
            5,
            3,
            Subsets::new(0b11111, 3).filter(|w| w & 1 == 1).collect(),
        );
        let s = star.degree_stats();
        assert_eq!((s.min_degree, s.max_degree, s.diversity), (3, 6, 0));
        let s = make_family(5, 3, &[]).unwrap().degree_stats();
        assert_eq!((s.min_degree, s.max_degree, s.diversity), (0, 0, 0));
    }

    #[test]
    fn setword_range_checked() {
        assert!(SetWord::new(0b1000, 3).is_err());
        assert_eq!(set(5, &[2, 4]).elements(), vec![2, 4]);
        assert_eq!(format!("{:?}", set(5, &[2, 4])), "{2,4}");
    }
}
