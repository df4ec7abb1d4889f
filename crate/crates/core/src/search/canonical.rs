//! Canonical forms and isomorphism of families.
//!
//! The canonical form relabels the support onto `1..=v` and takes the
//! lexicographically least sorted word sequence over all `v!` relabelings.
//! For two sorted sequences of equal length, `X < Y` exactly when the least
//! element of `X Δ Y` lies in `X`; the orderly generator relies on the same
//! comparison.

use std::collections::BTreeMap;

use crate::bits;
use crate::error::{Error, Result};
use crate::family::{permute_word, Family};

/// Brute-force canonical forms refuse supports larger than this unless forced.
pub const MAX_CANONICAL_SUPPORT: usize = 12;

/// Representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Number of vertices used; the form lives on `[support]`.
    pub support: usize,
    /// The least relabeling, on ground set `max(support, k)`.
    pub family: Family,
}

impl CanonicalForm {
    pub fn codes(&self) -> &[u64] {
        self.family.words()
    }
}

/// Relabels the support of `f` onto `1..=v` preserving order.
pub fn compact(f: &Family) -> Family {
    let support = f.support();
    let v = support.count_ones() as usize;
    let mut perm = vec![0usize; f.n()];
    let mut next = v;
    let mut used = 0;
    for (i, slot) in perm.iter_mut().enumerate() {
        if support >> i & 1 == 1 {
            *slot = used;
            used += 1;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let words = f.words().iter().map(|&w| permute_word(w, &perm));
    Family::from_words(v.max(f.k()), f.k(), words).expect("compaction stays inside [v]")
}

/// Heap's algorithm over `0..v`, visiting every permutation once.
pub fn for_each_permutation(v: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..v).collect();
    let mut c = vec![0usize; v];
    visit(&perm);
    let mut i = 0;
    while i < v {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Canonical form by scanning all relabelings of the compacted support.
pub fn canonical_form(f: &Family) -> Result<CanonicalForm> {
    canonical_form_with(f, false)
}

/// As [`canonical_form`]; `force` lifts the support guard.
pub fn canonical_form_with(f: &Family, force: bool) -> Result<CanonicalForm> {
    let c = compact(f);
    let v = f.support().count_ones() as usize;
    if v > MAX_CANONICAL_SUPPORT && !force {
        return Err(Error::SupportTooLarge { support: v, limit: MAX_CANONICAL_SUPPORT });
    }
    let words = c.words();
    let mut best: Vec<u64> = words.to_vec();
    let mut image = Vec::with_capacity(words.len());
    for_each_permutation(v, |perm| {
        image.clear();
        image.extend(words.iter().map(|&w| permute_word(w, perm)));
        image.sort_unstable();
        if image < best {
            best.clone_from(&image);
        }
    });
    Ok(CanonicalForm {
        support: v,
        family: Family::from_words(c.n(), c.k(), best).expect("relabeling preserves shape"),
    })
}

/// Size, uniformity, support size and sorted degrees.
pub type Invariant = (usize, usize, usize, Vec<usize>);

/// Cheap isomorphism invariant.
pub fn invariant(f: &Family) -> Invariant {
    let support = f.support();
    let mut deg: Vec<usize> = f
        .degrees()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| support >> i & 1 == 1)
        .map(|(_, d)| d)
        .collect();
    deg.sort_unstable();
    (f.len(), f.k(), support.count_ones() as usize, deg)
}

/// Exact isomorphism test by degree-respecting backtracking over vertex maps.
///
/// Ground-set sizes may differ; only the supports are matched.
pub fn is_isomorphic(f: &Family, g: &Family) -> bool {
    if invariant(f) != invariant(g) {
        return false;
    }
    let f_deg = f.degrees();
    let g_deg = g.degrees();
    // Map high-degree vertices first.
    let mut order: Vec<usize> = bits::elements(f.support()).map(|e| e - 1).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(f_deg[x]), x));
    let targets: Vec<usize> = bits::elements(g.support()).map(|e| e - 1).collect();

    let mut position = vec![usize::MAX; 64];
    for (d, &x) in order.iter().enumerate() {
        position[x] = d;
    }
    // Members grouped by the depth at which their last vertex is mapped.
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); order.len()];
    for &w in f.words() {
        let last = bits::elements(w).map(|e| position[e - 1]).max();
        if let Some(d) = last {
            closing[d].push(w);
        }
    }

    struct Ctx<'a> {
        order: &'a [usize],
        targets: &'a [usize],
        f_deg: &'a [usize],
        g_deg: &'a [usize],
        closing: &'a [Vec<u64>],
        g: &'a Family,
        map: Vec<usize>,
        used: u64,
    }

    fn extend(ctx: &mut Ctx<'_>, depth: usize) -> bool {
        if depth == ctx.order.len() {
            return true;
        }
        let x = ctx.order[depth];
        for ti in 0..ctx.targets.len() {
            let y = ctx.targets[ti];
            if ctx.used >> y & 1 == 1 || ctx.g_deg[y] != ctx.f_deg[x] {
                continue;
            }
            ctx.map[x] = y;
            let ok = ctx.closing[depth].iter().all(|&w| ctx.g.contains_word(permute_word(w, &ctx.map)));
            if ok {
                ctx.used |= 1 << y;
                if extend(ctx, depth + 1) {
                    return true;
                }
                ctx.used &= !(1 << y);
            }
        }
        false
    }

    let mut ctx = Ctx {
        order: &order,
        targets: &targets,
        f_deg: &f_deg,
        g_deg: &g_deg,
        closing: &closing,
        g,
        map: vec![0; 64],
        used: 0,
    };
    extend(&mut ctx, 0)
}

/// Groups `families` into isomorphism classes; each class lists indices ascending,
/// and classes are ordered by their first index.
pub fn isomorphism_classes(families: &[Family]) -> Vec<Vec<usize>> {
    let mut buckets: BTreeMap<Invariant, Vec<Vec<usize>>> = BTreeMap::new();
    for (i, f) in families.iter().enumerate() {
        let classes = buckets.entry(invariant(f)).or_default();
        match classes.iter_mut().find(|c| is_isomorphic(&families[c[0]], f)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let mut out: Vec<Vec<usize>> = buckets.into_values().flatten().collect();
    out.sort();
    out
}
