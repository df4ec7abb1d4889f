use std::collections::BTreeSet;

use domdodom::bits::{low_mask, Subsets};
use domdodom::constructions::{design10, fano};
use domdodom::search::{canonical_form, enumerate_intersecting, enumerate_tau_full, is_isomorphic, SearchOptions};
use domdodom::{covering_number, Family};

/// Every intersecting family of triples on [6], reduced by brute-force canonical form.
fn brute_six() -> (BTreeSet<Vec<u64>>, BTreeSet<Vec<u64>>) {
    let words: Vec<u64> = Subsets::new(low_mask(6), 3).collect();
    let (mut all, mut tau3) = (BTreeSet::new(), BTreeSet::new());
    for mask in 0u32..1 << words.len() {
        let chosen: Vec<u64> = (0..words.len()).filter(|i| mask >> i & 1 == 1).map(|i| words[i]).collect();
        if !chosen.iter().all(|a| chosen.iter().all(|b| a & b != 0)) {
            continue;
        }
        let f = Family::from_words(6, 3, chosen).unwrap();
        let code = canonical_form(&f).unwrap().family.words().to_vec();
        if !f.is_empty() && covering_number(&f) == 3 {
            tau3.insert(code.clone());
        }
        all.insert(code);
    }
    (all, tau3)
}

fn codes(fs: &[Family]) -> BTreeSet<Vec<u64>> {
    fs.iter().map(|f| f.words().to_vec()).collect()
}

#[test]
fn orderly_matches_brute_force_on_six_points() {
    let (all, tau3) = brute_six();
    for split_depth in [0, 2, 4] {
        let opts = SearchOptions { split_depth, ..SearchOptions::default() };
        let got = enumerate_intersecting(6, 3, &opts).unwrap();
        assert_eq!(got.families.len(), all.len());
        assert_eq!(codes(&got.families), all);
    }
    assert_eq!(codes(&enumerate_tau_full(2, 6).unwrap().families), tau3);
}

#[test]
fn seven_point_search_contains_both_extremal_types() {
    let res = enumerate_tau_full(2, 7).unwrap();
    assert!(res.families.iter().any(|f| is_isomorphic(f, &fano())));
    assert!(res.families.iter().any(|f| is_isomorphic(f, &design10())));
    assert_eq!(res.stats.classes, res.families.len());
}
