//! Explicit intersecting families and their closed-form predictions.
//!
//! Every generator is also exposed through a [`Construction`] trait object so
//! the CLI can select one by name (`construct fano`, `construct lift ...`).

mod registry;

use std::sync::OnceLock;

use crate::bits::{binom, low_mask, Subsets};
use crate::covers::close_to_maximal;
use crate::error::{Error, Result};
use crate::family::{Family, SetWord};

pub use registry::{Construction, ConstructionParams, ConstructionRegistry, NamedConstruction};

/// The seven lines of the Fano plane on `[7]`.
pub const FANO_LINES: [[usize; 3]; 7] =
    [[1, 2, 3], [3, 4, 5], [5, 6, 1], [2, 4, 6], [1, 4, 7], [3, 6, 7], [2, 5, 7]];

/// One triple from each complementary pair of `[6]`, every point-pair in exactly two.
pub const DESIGN10_TRIPLES: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
];

fn word(set: &[usize]) -> u64 {
    set.iter().fold(0, |w, &e| w | 1 << (e - 1))
}

/// Sets of `[n]` of size `k` meeting `[3]` in at least two elements.
pub fn f23(n: usize, k: usize) -> Result<Family> {
    if n < 3 || k < 2 || k > n {
        return Err(Error::BadParams {
            name: "f23".into(),
            reason: format!("need n >= 3 and 2 <= k <= n, got n = {n}, k = {k}"),
        });
    }
    Family::from_words(
        n,
        k,
        Subsets::new(low_mask(n), k).filter(|w| (w & 0b111).count_ones() >= 2),
    )
}

/// |f23(n, k)|: exactly two of `[3]` plus all three of `[3]`.
pub fn f23_size(n: usize, k: usize) -> u64 {
    let (n, k) = (n as i64, k as i64);
    3 * binom(n - 3, k - 2) + binom(n - 3, k - 3)
}

/// The lower-bound value C(n − 3 − p, k − 2 − p) of β_{p,1} attained by f23.
pub fn f23_beta_p1(n: usize, k: usize, p: usize) -> u64 {
    binom(n as i64 - 3 - p as i64, k as i64 - 2 - p as i64)
}

pub fn fano() -> Family {
    let lists: Vec<Vec<usize>> = FANO_LINES.iter().map(|l| l.to_vec()).collect();
    Family::from_lists(7, 3, &lists).expect("Fano lines are valid triples")
}

/// Up-closure of the Fano lines in `C([n], k)`; requires `n ≥ 7`, `k ≥ 3`.
pub fn fano_lift(n: usize, k: usize) -> Result<Family> {
    if n < 7 || k < 3 || k > n {
        return Err(Error::BadParams {
            name: "fano_lift".into(),
            reason: format!("need n >= 7 and 3 <= k <= n, got n = {n}, k = {k}"),
        });
    }
    lift(&as_setwords(&fano(), n), n, k)
}

/// The predicted β_{p,2} of the Fano lift: 2·C(n−5−p, k−3−p) − C(n−7−p, k−5−p).
pub fn fano_lift_beta_p2(n: usize, k: usize, p: usize) -> u64 {
    let (n, k, p) = (n as i64, k as i64, p as i64);
    2 * binom(n - 5 - p, k - 3 - p) - binom(n - 7 - p, k - 5 - p)
}

/// True iff `f` picks one triple from each complementary pair of `[6]` and
/// every pair of points lies in exactly two of its triples.
pub fn is_design10(f: &Family) -> bool {
    if f.k() != 3 || f.support() & !low_mask(6) != 0 || f.len() != 10 {
        return false;
    }
    let six = low_mask(6);
    let one_per_pair = Subsets::new(six, 3)
        .filter(|&t| t & 1 == 1)
        .all(|t| f.contains_word(t) != f.contains_word(six & !t));
    let two_regular = Subsets::new(six, 2)
        .all(|pair| f.words().iter().filter(|&&w| w & pair == pair).count() == 2);
    one_per_pair && two_regular
}

/// The shipped one-per-complement-pair family on `[6]`.
///
/// The instance is checked on first use; a failing instance panics rather
/// than being handed out.
pub fn design10() -> Family {
    static CHECKED: OnceLock<Family> = OnceLock::new();
    CHECKED
        .get_or_init(|| {
            let f = Family::from_words(6, 3, DESIGN10_TRIPLES.iter().map(|t| word(t)))
                .expect("design10 triples are valid");
            assert!(is_design10(&f), "shipped design10 instance fails its design check");
            f
        })
        .clone()
}

pub fn design10_lift(n: usize, k: usize) -> Result<Family> {
    if n < 6 || k < 3 || k > n {
        return Err(Error::BadParams {
            name: "design10_lift".into(),
            reason: format!("need n >= 6 and 3 <= k <= n, got n = {n}, k = {k}"),
        });
    }
    lift(&as_setwords(&design10(), n), n, k)
}

/// The three pairs of `[3]`.
pub fn triangle() -> Vec<SetWord> {
    [0b011u64, 0b110, 0b101]
        .into_iter()
        .map(|w| SetWord::new(w, 3).expect("pairs of [3]"))
        .collect()
}

pub fn triangle_family() -> Family {
    Family::from_words(3, 2, triangle().iter().map(|s| s.bits())).expect("pairs of [3]")
}

/// All k-subsets of `[n]` containing `t`.
pub fn star(t: SetWord, n: usize, k: usize) -> Result<Family> {
    lift(&[t], n, k)
}

/// Union of the up-closures of `generators` in `C([n], k)`; generators may have any size up to `k`.
pub fn lift(generators: &[SetWord], n: usize, k: usize) -> Result<Family> {
    close_to_maximal(generators, n, k)
}

/// Members of a family as set words of a (possibly larger) ground set.
pub fn as_setwords(f: &Family, n: usize) -> Vec<SetWord> {
    f.words().iter().map(|&w| SetWord::new(w, n).expect("member within ground set")).collect()
}
