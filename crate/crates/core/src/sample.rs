//! Seeded random families for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::lift;
use crate::covers::covering_number;
use crate::error::Result;
use crate::family::{Family, SetWord};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_set(rng: &mut SampleRng, n: usize, k: usize) -> u64 {
    let mut points: Vec<usize> = (0..n).collect();
    points.partial_shuffle(rng, k);
    points[..k].iter().fold(0, |w, &e| w | 1 << e)
}

/// Up to `m` distinct random k-subsets of `[n]`.
pub fn random_family(rng: &mut SampleRng, n: usize, k: usize, m: usize) -> Result<Family> {
    let words: Vec<u64> = (0..m).map(|_| random_set(rng, n, k)).collect();
    Family::from_words(n, k, words)
}

/// Greedy intersecting family: `attempts` random k-sets, each kept if it meets every kept one.
pub fn random_intersecting(rng: &mut SampleRng, n: usize, k: usize, attempts: usize) -> Result<Family> {
    let mut kept: Vec<u64> = Vec::new();
    for _ in 0..attempts {
        let w = random_set(rng, n, k);
        if kept.iter().all(|&u| u & w != 0) {
            kept.push(w);
        }
    }
    Family::from_words(n, k, kept)
}

/// A random intersecting family with τ ≤ q on `[n]`: either a star of a random
/// set of size at most `min(q, k)`, or the lift of pairwise intersecting pairs
/// (pairs through one point, or a triangle when q ≥ 2).
pub fn random_low_tau(rng: &mut SampleRng, q: usize, n: usize, k: usize) -> Result<Family> {
    assert!(q >= 1 && k >= 2 && n >= k.max(3));
    loop {
        let generators: Vec<u64> = if rng.gen_bool(0.5) {
            let t = rng.gen_range(1..=q.min(k));
            vec![random_set(rng, n, t)]
        } else {
            let mut points: Vec<usize> = (0..n).collect();
            points.shuffle(rng);
            if q >= 2 && rng.gen_bool(0.5) {
                let [a, b, c] = [points[0], points[1], points[2]];
                vec![1 << a | 1 << b, 1 << b | 1 << c, 1 << a | 1 << c]
            } else {
                let centre = points[0];
                let leaves = rng.gen_range(1..n);
                points[1..=leaves].iter().map(|&x| 1 << centre | 1 << x).collect()
            }
        };
        let sets: Vec<SetWord> = generators.iter().map(|&w| SetWord::new(w, n)).collect::<Result<_>>()?;
        let f = lift(&sets, n, k)?;
        if covering_number(&f) <= q {
            return Ok(f);
        }
    }
}
