//! Seeded generators of delta-matroids for property checks.

use std::sync::OnceLock;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::bits::full;
use crate::gf2::{matroid_from_matrix, Gf2SymMatrix};
use crate::search;
use crate::system::{DeltaMatroid, Mask};

/// Uniformly random symmetric matrix over GF(2), diagonal included.
pub fn random_matrix(n: usize, rng: &mut impl Rng) -> Gf2SymMatrix {
    let mut a = Gf2SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            a.set(i, j, rng.random_bool(0.5));
        }
    }
    a
}

pub fn random_subset(n: usize, rng: &mut impl Rng) -> Mask {
    rng.random::<Mask>() & full(n)
}

/// `D(A) * X` for random `A` and `X`; always binary.
pub fn random_binary(n: usize, rng: &mut impl Rng) -> DeltaMatroid {
    let a = random_matrix(n, rng);
    matroid_from_matrix(&a).twist(random_subset(n, rng))
}

fn small_catalog() -> &'static [DeltaMatroid] {
    static CATALOG: OnceLock<Vec<DeltaMatroid>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        (1..=search::ALL_SYSTEMS_MAX)
            .flat_map(|n| search::all_delta_matroids(n).expect("small n"))
            .collect()
    })
}

fn even_five_catalog() -> &'static [DeltaMatroid] {
    static CATALOG: OnceLock<Vec<DeltaMatroid>> = OnceLock::new();
    CATALOG.get_or_init(|| search::enumerate_even_normal(5, false).expect("n = 5"))
}

/// Random relabelling of the ground set.
pub fn shuffle(d: &DeltaMatroid, rng: &mut impl Rng) -> DeltaMatroid {
    let mut perm: Vec<usize> = (0..d.len()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    d.permute(&perm)
}

/// A mix of every delta-matroid on at most four elements, twisted even
/// normal ones on five, and binary ones on up to seven elements.
pub fn random_delta_matroid(rng: &mut impl Rng) -> DeltaMatroid {
    match rng.random_range(0..3) {
        0 => small_catalog().choose(rng).expect("non-empty").clone(),
        1 => {
            let d = even_five_catalog().choose(rng).expect("non-empty");
            shuffle(&d.twist(random_subset(5, rng)), rng)
        }
        _ => {
            let n = rng.random_range(1..=7);
            random_binary(n, rng)
        }
    }
}

/// A random element and a random subset of the ground set of `d`.
pub fn random_element(d: &DeltaMatroid, rng: &mut impl Rng) -> usize {
    rng.random_range(0..d.len())
}

pub fn random_subset_of(d: &DeltaMatroid, rng: &mut impl Rng) -> Mask {
    random_subset(d.len(), rng)
}
