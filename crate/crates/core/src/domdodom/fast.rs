use rayon::prelude::*;

use crate::bits::{low_mask, Subsets};
use crate::error::Result;
use crate::family::{Family, SetWord};

use super::{count_capped, BetaEvaluator, BetaQuery, Variant, WitnessedValue};

/// Elements outside the support are interchangeable, so only the smallest
/// `p + q` of them can appear in the least minimizer.
fn universe(family: &Family, query: &BetaQuery) -> u64 {
    let ground = low_mask(family.n());
    let support = family.support();
    let mut spare = ground & !support;
    let mut u = support;
    for _ in 0..query.p + query.q {
        if spare == 0 {
            break;
        }
        let low = spare & spare.wrapping_neg();
        u |= low;
        spare &= spare - 1;
    }
    u
}

/// Least `(count, b)` over `b ⊆ universe \ a`, counting no further than `cap`.
fn best_for_a(words: &[u64], universe: u64, a: u64, q: usize, variant: Variant, mut cap: u64) -> Option<(u64, u64)> {
    let mut best = None;
    if variant == Variant::Containment && words.iter().all(|&w| w & a != a) {
        // no member contains A; the least B wins outright
        return Subsets::new(universe & !a, q).next().map(|b| (0, b));
    }
    for b in Subsets::new(universe & !a, q) {
        let c = count_capped(words, a, b, variant, cap);
        if best.is_none() || c < cap {
            best = Some((c, b));
            cap = c;
            if c == 0 {
                break;
            }
        }
    }
    best
}

fn witness(family: &Family, (value, a, b): (u64, u64, u64)) -> Result<WitnessedValue> {
    Ok(WitnessedValue {
        value,
        witness_a: SetWord::new(a, family.n())?,
        witness_b: SetWord::new(b, family.n())?,
    })
}

/// Sequential scan over the support plus spare representatives, with early
/// cut-off once a partial count can no longer beat the current best.
#[derive(Clone, Copy, Debug, Default)]
pub struct Fast;

impl BetaEvaluator for Fast {
    fn name(&self) -> &'static str {
        "fast"
    }

    fn description(&self) -> &'static str {
        "support-restricted scan with capped counting"
    }

    fn evaluate(&self, family: &Family, query: &BetaQuery) -> Result<WitnessedValue> {
        query.validate(family.n())?;
        let u = universe(family, query);
        let mut best: Option<(u64, u64, u64)> = None;
        for a in Subsets::new(u, query.p) {
            let cap = best.map_or(u64::MAX, |(v, _, _)| v);
            if let Some((c, b)) = best_for_a(family.words(), u, a, query.q, query.variant, cap) {
                if best.is_none_or(|(v, _, _)| c < v) {
                    best = Some((c, a, b));
                    if c == 0 {
                        break;
                    }
                }
            }
        }
        witness(family, best.expect("p + q <= n leaves at least one pair"))
    }
}

/// Same scan as [`Fast`] with the `A` loop split across the rayon pool.
/// The reduction takes the least `(value, A, B)`, so the result does not
/// depend on the number of threads.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParallelFast;

impl BetaEvaluator for ParallelFast {
    fn name(&self) -> &'static str {
        "parallel"
    }

    fn description(&self) -> &'static str {
        "support-restricted scan, A loop split across threads"
    }

    fn evaluate(&self, family: &Family, query: &BetaQuery) -> Result<WitnessedValue> {
        query.validate(family.n())?;
        let u = universe(family, query);
        let firsts: Vec<u64> = Subsets::new(u, query.p).collect();
        let best = firsts
            .par_iter()
            .filter_map(|&a| {
                best_for_a(family.words(), u, a, query.q, query.variant, u64::MAX)
                    .map(|(c, b)| (c, a, b))
            })
            .min()
            .expect("p + q <= n leaves at least one pair");
        witness(family, best)
    }
}
