//! The twist polynomial `sum over A of z^w(D * A)`.
//!
//! Widths of twists are read directly off the original family:
//! `w(D * A) = max |A Δ X| - min |A Δ X|` over feasible `X`, so no twisted
//! family is ever built.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::system::{DeltaMatroid, Mask};

/// Which exponent each twist contributes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `z^w(D * A)`.
    #[default]
    Width,
    /// `z^(w(D * A) / 2)`; only defined for even delta-matroids.
    HalfWidth,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistPolynomial {
    convention: Convention,
    terms: BTreeMap<u32, u64>,
}

impl TwistPolynomial {
    pub fn from_terms(convention: Convention, terms: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if c > 0 {
                *map.entry(e).or_insert(0) += c;
            }
        }
        Self {
            convention,
            terms: map,
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Nonzero `(exponent, coefficient)` pairs, ascending by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponent: u32) -> u64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// `exponent:coefficient` pairs joined by commas, ascending.
    pub fn machine_form(&self) -> String {
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `8*z^1 + 2*z^3`; a constant term prints as the bare coefficient.
impl fmt::Display for TwistPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                if e == 0 {
                    c.to_string()
                } else {
                    format!("{c}*z^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Width of `D * a` computed from the untwisted family.
#[inline]
pub fn twisted_width(family: &[Mask], a: Mask) -> u32 {
    let mut lo = u32::MAX;
    let mut hi = 0;
    for &x in family {
        let c = (a ^ x).count_ones();
        lo = lo.min(c);
        hi = hi.max(c);
    }
    hi - lo
}

fn histogram(family: &[Mask], range: std::ops::Range<u64>, n: usize) -> Vec<u64> {
    let mut h = vec![0u64; n + 1];
    for a in range {
        h[twisted_width(family, a as Mask) as usize] += 1;
    }
    h
}

pub fn twist_polynomial(d: &DeltaMatroid, convention: Convention) -> Result<TwistPolynomial> {
    twist_polynomial_with(d, convention, 1)
}

/// Same as [`twist_polynomial`], splitting the `2^n` twists into contiguous
/// chunks evaluated by up to `workers` threads. The result does not depend on
/// `workers`.
pub fn twist_polynomial_with(
    d: &DeltaMatroid,
    convention: Convention,
    workers: usize,
) -> Result<TwistPolynomial> {
    if convention == Convention::HalfWidth && !d.is_even() {
        return Err(Error::NotEven);
    }
    let n = d.len();
    let family = d.feasible();
    let total = 1u64 << n;
    let workers = workers.max(1);
    let hist = if workers == 1 || n < 12 {
        histogram(family, 0..total, n)
    } else {
        let chunks = (workers as u64 * 4).min(total);
        let step = total.div_ceil(chunks);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| histogram(family, c * step..((c + 1) * step).min(total), n))
                .reduce(
                    || vec![0u64; n + 1],
                    |mut acc, h| {
                        acc.iter_mut().zip(h).for_each(|(a, b)| *a += b);
                        acc
                    },
                )
        })
    };
    let terms = hist
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(w, c)| {
            let e = match convention {
                Convention::Width => w as u32,
                Convention::HalfWidth => {
                    debug_assert!(w % 2 == 0);
                    (w / 2) as u32
                }
            };
            (e, c)
        });
    Ok(TwistPolynomial::from_terms(convention, terms))
}

pub fn is_single_term(p: &TwistPolynomial) -> bool {
    p.is_single_term()
}
