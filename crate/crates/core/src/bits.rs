//! Bitmask helpers: binomials, ordered subset iteration, bit deposit.

/// Binomial coefficient with the convention C(m, r) = 0 when r < 0, m < 0 or r > m.
pub fn binom(m: i64, r: i64) -> u64 {
    if r < 0 || m < 0 || r > m {
        return 0;
    }
    let r = r.min(m - r) as u64;
    let m = m as u64;
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Scatter the low bits of `compact` onto the set positions of `mask`, lowest first.
#[inline]
pub fn deposit(mut compact: u64, mut mask: u64) -> u64 {
    let mut out = 0;
    while compact != 0 && mask != 0 {
        let low = mask & mask.wrapping_neg();
        if compact & 1 == 1 {
            out |= low;
        }
        compact >>= 1;
        mask &= mask - 1;
    }
    out
}

/// Iterates the `r`-subsets of `mask` in ascending integer order.
///
/// Gosper's hack runs on the compressed index space and each word is deposited
/// back onto `mask`; deposit is order preserving, so the output is ascending.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    width: u32,
    current: Option<u64>,
}

impl Subsets {
    pub fn new(mask: u64, r: usize) -> Self {
        let width = mask.count_ones();
        let current = if r as u32 > width {
            None
        } else if r == 0 {
            Some(0)
        } else {
            Some(low_mask(r))
        };
        Subsets { mask, width, current }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.current?;
        self.current = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                if self.width < 64 && next >> self.width != 0 {
                    None
                } else {
                    Some(next)
                }
            }
        };
        Some(deposit(cur, self.mask))
    }
}

/// Iterates the 1-indexed elements of a bitmask in ascending order.
pub fn elements(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        }
    })
}
