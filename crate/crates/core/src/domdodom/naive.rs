use crate::bits::{low_mask, Subsets};
use crate::error::Result;
use crate::family::{Family, SetWord};

use super::{count_capped, BetaEvaluator, BetaQuery, WitnessedValue};

/// Scans `A` ascending over all `p`-subsets of `[n]`, then `B` ascending over
/// the `q`-subsets of the rest, counting every member for every pair.
#[derive(Clone, Copy, Debug, Default)]
pub struct Naive;

impl BetaEvaluator for Naive {
    fn name(&self) -> &'static str {
        "naive"
    }

    fn description(&self) -> &'static str {
        "exhaustive scan over all disjoint (A, B) pairs of [n]"
    }

    fn evaluate(&self, family: &Family, query: &BetaQuery) -> Result<WitnessedValue> {
        query.validate(family.n())?;
        let n = family.n();
        let ground = low_mask(n);
        let mut best: Option<(u64, u64, u64)> = None;
        for a in Subsets::new(ground, query.p) {
            for b in Subsets::new(ground & !a, query.q) {
                let c = count_capped(family.words(), a, b, query.variant, u64::MAX);
                if best.is_none_or(|(v, _, _)| c < v) {
                    best = Some((c, a, b));
                }
            }
        }
        let (value, a, b) = best.expect("p + q <= n leaves at least one pair");
        Ok(WitnessedValue {
            value,
            witness_a: SetWord::new(a, n)?,
            witness_b: SetWord::new(b, n)?,
        })
    }
}
