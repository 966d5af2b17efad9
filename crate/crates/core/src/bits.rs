//! Small bit-twiddling helpers for subsets of a ground set stored as `u32` masks.

use crate::Mask;

/// Iterator over the indices of set bits, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Ones(Mask);

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Ones {}

#[inline]
pub fn ones(mask: Mask) -> Ones {
    Ones(mask)
}

#[inline]
pub fn bit(i: usize) -> Mask {
    1 << i
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Packs the bits of `mask` selected by `keep` into the low bits, preserving order.
pub fn compress(mask: Mask, keep: Mask) -> Mask {
    let mut out = 0;
    for (j, i) in ones(keep).enumerate() {
        if mask & bit(i) != 0 {
            out |= bit(j);
        }
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `packed` onto the positions of `keep`.
pub fn expand(packed: Mask, keep: Mask) -> Mask {
    let mut out = 0;
    for (j, i) in ones(keep).enumerate() {
        if packed & bit(j) != 0 {
            out |= bit(i);
        }
    }
    out
}

/// Iterates every submask of `set`, starting with the empty mask and ending with `set`.
pub fn submasks(set: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == set {
            None
        } else {
            Some(cur.wrapping_sub(set) & set)
        };
        Some(cur)
    })
}

/// Membership index over a sorted family of masks.
///
/// Small ground sets get a dense bitmap, larger ones fall back to binary search.
pub(crate) enum FamilyIndex<'a> {
    Dense(Vec<u64>),
    Sorted(&'a [Mask]),
}

const DENSE_LIMIT: usize = 20;

impl<'a> FamilyIndex<'a> {
    pub(crate) fn new(n: usize, sorted: &'a [Mask]) -> Self {
        if n <= DENSE_LIMIT {
            let mut words = vec![0u64; (1usize << n).div_ceil(64)];
            for &m in sorted {
                words[(m >> 6) as usize] |= 1 << (m & 63);
            }
            FamilyIndex::Dense(words)
        } else {
            FamilyIndex::Sorted(sorted)
        }
    }

    #[inline]
    pub(crate) fn contains(&self, m: Mask) -> bool {
        match self {
            FamilyIndex::Dense(words) => words
                .get((m >> 6) as usize)
                .is_some_and(|w| w & (1 << (m & 63)) != 0),
            FamilyIndex::Sorted(s) => s.binary_search(&m).is_ok(),
        }
    }
}
