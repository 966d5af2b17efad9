//! Slow, direct implementations used as oracles by the integration tests.
//! Families are plain vectors of masks or, for n <= 6, bitmaps over all 2^n subsets.

#![allow(dead_code)]

use std::collections::HashSet;

pub fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Symmetric exchange, checked literally.
pub fn sea(family: &[u32]) -> bool {
    let set: HashSet<u32> = family.iter().copied().collect();
    for &f1 in family {
        for &f2 in family {
            let d = f1 ^ f2;
            for x in 0..32 {
                if d >> x & 1 == 0 {
                    continue;
                }
                let ok =
                    (0..32).any(|y| d >> y & 1 == 1 && set.contains(&(f1 ^ ((1 << x) | (1 << y)))));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Same test on a bitmap family over at most 6 elements.
pub fn sea_bitmap(n: usize, fam: u64) -> bool {
    let has = |m: u32| fam >> m & 1 == 1;
    for f1 in 0..1u32 << n {
        if !has(f1) {
            continue;
        }
        for f2 in 0..1u32 << n {
            if !has(f2) {
                continue;
            }
            let d = f1 ^ f2;
            for x in 0..n {
                if d >> x & 1 == 0 {
                    continue;
                }
                if !(0..n).any(|y| d >> y & 1 == 1 && has(f1 ^ ((1 << x) | (1 << y)))) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn bitmap_to_family(fam: u64) -> Vec<u32> {
    (0..64).filter(|&m| fam >> m & 1 == 1).collect()
}

pub fn family_to_bitmap(fam: &[u32]) -> u64 {
    fam.iter().fold(0, |acc, &m| acc | 1 << m)
}

pub fn even_subsets(n: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|m| m.count_ones() % 2 == 0).collect()
}

pub fn twist(family: &[u32], a: u32) -> Vec<u32> {
    sorted(family.iter().map(|&x| x ^ a).collect())
}

/// `(smallest, largest)` feasible size.
pub fn profile(family: &[u32]) -> (u32, u32) {
    let sizes = family.iter().map(|m| m.count_ones());
    (sizes.clone().min().unwrap(), sizes.max().unwrap())
}

pub fn width(family: &[u32]) -> u32 {
    let (lo, hi) = profile(family);
    hi - lo
}

/// Exponent -> count over all twists, computed on materialised twisted families.
pub fn width_polynomial(n: usize, family: &[u32]) -> Vec<(u32, u64)> {
    let mut counts = vec![0u64; n + 1];
    for a in 0..1u32 << n {
        counts[width(&twist(family, a)) as usize] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(e, c)| (e as u32, c))
        .collect()
}

/// Removes bit `e` and shifts the higher bits down.
pub fn drop_bit(m: u32, e: usize) -> u32 {
    let low = m & ((1 << e) - 1);
    let high = (m >> (e + 1)) << e;
    low | high
}

/// `D \ e` or `D / e`; a coloop is contracted and a loop deleted regardless of the request.
pub fn elementary_minor(family: &[u32], e: usize, delete: bool) -> Vec<u32> {
    let with_e = family.iter().filter(|&&m| m >> e & 1 == 1).count();
    let is_loop = with_e == 0;
    let is_coloop = with_e == family.len();
    let delete = if is_coloop {
        false
    } else if is_loop {
        true
    } else {
        delete
    };
    let kept = family
        .iter()
        .filter(|&&m| (m >> e & 1 == 1) != delete)
        .map(|&m| drop_bit(m & !(1 << e), e));
    sorted(kept.collect())
}

/// Determinant over GF(2) of the principal submatrix of `a` on `idx`.
pub fn gf2_invertible(a: &[Vec<bool>], idx: &[usize]) -> bool {
    let k = idx.len();
    let mut m: Vec<Vec<bool>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| a[i][j]).collect())
        .collect();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| m[r][col]) else {
            return false;
        };
        m.swap(col, p);
        for r in 0..k {
            if r != col && m[r][col] {
                let pivot = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot) {
                    *x ^= p;
                }
            }
        }
    }
    true
}

pub fn matrix_family(a: &[Vec<bool>]) -> Vec<u32> {
    let n = a.len();
    (0..1u32 << n)
        .filter(|&w| {
            let idx: Vec<usize> = (0..n).filter(|&i| w >> i & 1 == 1).collect();
            gf2_invertible(a, &idx)
        })
        .collect()
}

/// Every symmetric GF(2) matrix of size `n`.
pub fn all_symmetric(n: usize) -> impl Iterator<Item = Vec<Vec<bool>>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0..1u64 << slots.len()).map(move |bits| {
        let mut a = vec![vec![false; n]; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            let v = bits >> k & 1 == 1;
            a[i][j] = v;
            a[j][i] = v;
        }
        a
    })
}

/// Bitmaps of every binary delta-matroid `D(A) * X` on `n <= 6` elements.
pub fn binary_bitmaps(n: usize) -> HashSet<u64> {
    let mut out = HashSet::new();
    for a in all_symmetric(n) {
        let fam = matrix_family(&a);
        for x in 0..1u32 << n {
            out.insert(family_to_bitmap(&twist(&fam, x)));
        }
    }
    out
}

/// Every even normal delta-matroid on `n <= 6` elements, as bitmaps.
pub fn even_normal_bitmaps(n: usize) -> Vec<u64> {
    let cands: Vec<u32> = even_subsets(n).into_iter().filter(|&m| m != 0).collect();
    (0..1u64 << cands.len())
        .map(|choice| {
            cands
                .iter()
                .enumerate()
                .filter(|&(k, _)| choice >> k & 1 == 1)
                .fold(1u64, |acc, (_, &m)| acc | 1 << m)
        })
        .filter(|&fam| sea_bitmap(n, fam))
        .collect()
}

/// Largest feasible sets.
pub fn upper_bases(family: &[u32]) -> Vec<u32> {
    let (_, hi) = profile(family);
    family
        .iter()
        .copied()
        .filter(|m| m.count_ones() == hi)
        .collect()
}

pub fn lower_bases(family: &[u32]) -> Vec<u32> {
    let (lo, _) = profile(family);
    family
        .iter()
        .copied()
        .filter(|m| m.count_ones() == lo)
        .collect()
}
