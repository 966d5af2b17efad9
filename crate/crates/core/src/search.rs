//! Named families, exhaustive enumeration of even normal delta-matroids, and
//! the machine check that no even normal non-binary delta-matroid has a
//! single-term twist polynomial.
//!
//! Small families are handled as `u64` bitmaps indexed by subset mask, which
//! covers every subset of a ground set of at most six elements.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{bit, full, ones};
use crate::error::{Error, Result};
use crate::gf2;
use crate::iso::{self, CanonicalForm};
use crate::poly::{self, Convention, TwistPolynomial};
use crate::system::{find_sea_violation, DeltaMatroid, Mask, SetSystem};

/// Largest ground set for exhaustive enumeration. Six is accepted but slow.
pub const EXHAUSTIVE_MAX: usize = 6;
/// Largest ground set for sampled search.
pub const SAMPLE_MAX: usize = 10;
/// Largest ground set for [`all_delta_matroids`].
pub const ALL_SYSTEMS_MAX: usize = 4;

/// The delta-matroid of all even-cardinality subsets of an `n`-element set.
pub fn build_dn(n: usize) -> Result<DeltaMatroid> {
    if n > crate::MAX_ELEMENTS {
        return Err(Error::TooManyElements(n));
    }
    let family = (0..=full(n)).filter(|m| m.count_ones() % 2 == 0);
    let sys = SetSystem::from_masks(n, family)?;
    Ok(DeltaMatroid::trusted(sys))
}

fn bitmap_family(bits: u64) -> Vec<Mask> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    let mut b = bits;
    while b != 0 {
        out.push(b.trailing_zeros());
        b &= b - 1;
    }
    out
}

/// Every set system on `n <= 4` elements that satisfies SEA, in order of
/// their family bitmaps.
pub fn all_delta_matroids(n: usize) -> Result<Vec<DeltaMatroid>> {
    if n > ALL_SYSTEMS_MAX {
        return Err(Error::ExhaustiveTooLarge {
            n,
            max: ALL_SYSTEMS_MAX,
        });
    }
    let subsets = 1u32 << n;
    let families: u64 = 1 << subsets;
    Ok((1..families)
        .filter_map(|bits| {
            let fam = bitmap_family(bits);
            find_sea_violation(n, &fam).is_none().then(|| {
                DeltaMatroid::trusted(SetSystem::from_masks(n, fam).expect("valid family"))
            })
        })
        .collect())
}

struct Dfs<'a> {
    n: usize,
    candidates: &'a [Mask],
    out: Vec<u64>,
}

impl Dfs<'_> {
    fn possible(&self, fam: u64, k: usize) -> u64 {
        let undecided = self.candidates[k..].iter().fold(0u64, |a, &c| a | 1 << c);
        fam | undecided
    }

    /// Is there `x` in `f1 Δ f2` with no `y` left that could repair it?
    fn dead_pair(&self, f1: Mask, f2: Mask, possible: u64) -> bool {
        let diff = f1 ^ f2;
        ones(diff).any(|x| {
            !ones(diff).any(|y| {
                let t = f1 ^ (bit(x) | bit(y));
                possible & (1 << t) != 0
            })
        })
    }

    fn after_include(&self, fam: u64, c: Mask, possible: u64) -> bool {
        bitmap_family(fam)
            .into_iter()
            .all(|f| !self.dead_pair(c, f, possible) && !self.dead_pair(f, c, possible))
    }

    fn after_exclude(&self, fam: u64, c: Mask, possible: u64) -> bool {
        let members = bitmap_family(fam);
        members
            .iter()
            .filter(|&&f1| (f1 ^ c).count_ones() == 2)
            .all(|&f1| members.iter().all(|&f2| !self.dead_pair(f1, f2, possible)))
    }

    /// Applies decision `include` for candidate `k`, returning the new family
    /// if no violation became unrepairable.
    fn step(&mut self, fam: u64, k: usize, include: bool) -> Option<u64> {
        let c = self.candidates[k];
        if include {
            let fam = fam | 1 << c;
            let possible = self.possible(fam, k + 1);
            self.after_include(fam, c, possible).then_some(fam)
        } else {
            let possible = self.possible(fam, k + 1);
            self.after_exclude(fam, c, possible).then_some(fam)
        }
    }

    fn run(&mut self, fam: u64, k: usize) {
        if k == self.candidates.len() {
            debug_assert!(find_sea_violation(self.n, &bitmap_family(fam)).is_none());
            self.out.push(fam);
            return;
        }
        for include in [false, true] {
            if let Some(next) = self.step(fam, k, include) {
                self.run(next, k + 1);
            }
        }
    }
}

fn even_candidates(n: usize) -> Vec<Mask> {
    (1..=full(n)).filter(|m| m.count_ones() % 2 == 0).collect()
}

/// Families of all even normal delta-matroids on `n` elements as bitmaps,
/// in a fixed order independent of `workers`.
fn enumerate_bitmaps(n: usize, workers: usize) -> Result<Vec<u64>> {
    if n > EXHAUSTIVE_MAX {
        return Err(Error::ExhaustiveTooLarge {
            n,
            max: EXHAUSTIVE_MAX,
        });
    }
    let candidates = even_candidates(n);
    let prefix = candidates.len().min(6);
    let run_partition = |p: u64| {
        let mut dfs = Dfs {
            n,
            candidates: &candidates,
            out: Vec::new(),
        };
        let mut fam = 1u64; // the empty set
        for k in 0..prefix {
            match dfs.step(fam, k, p & (1 << k) != 0) {
                Some(next) => fam = next,
                None => return dfs.out,
            }
        }
        dfs.run(fam, prefix);
        dfs.out
    };
    let parts: Vec<Vec<u64>> = if workers <= 1 {
        (0..1u64 << prefix).map(run_partition).collect()
    } else {
        pool(workers).install(|| {
            (0..1u64 << prefix)
                .into_par_iter()
                .map(run_partition)
                .collect()
        })
    };
    let mut all: Vec<u64> = parts.into_iter().flatten().collect();
    all.sort_unstable();
    Ok(all)
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

fn from_bitmap(n: usize, bits: u64) -> DeltaMatroid {
    DeltaMatroid::trusted(SetSystem::from_masks(n, bitmap_family(bits)).expect("valid family"))
}

/// All even normal delta-matroids on `n <= 6` elements, optionally one per
/// isomorphism class (the first in enumeration order).
pub fn enumerate_even_normal(n: usize, up_to_iso: bool) -> Result<Vec<DeltaMatroid>> {
    enumerate_even_normal_with(n, up_to_iso, 1)
}

pub fn enumerate_even_normal_with(
    n: usize,
    up_to_iso: bool,
    workers: usize,
) -> Result<Vec<DeltaMatroid>> {
    let all = enumerate_bitmaps(n, workers)?;
    let dms = all.into_iter().map(|b| from_bitmap(n, b));
    if !up_to_iso {
        return Ok(dms.collect());
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for d in dms {
        if seen.insert(iso::canonical_form(&d)?) {
            out.push(d);
        }
    }
    Ok(out)
}

/// An even normal non-binary delta-matroid whose width polynomial has one term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub delta_matroid: DeltaMatroid,
    pub polynomial: TwistPolynomial,
    /// The same delta-matroid with elements in no feasible set removed.
    pub trimmed: DeltaMatroid,
    pub trimmed_non_binary: bool,
    pub trimmed_single_term: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub mode: SearchMode,
    /// Candidate families covered: the whole space when exhaustive, trials when sampled.
    pub scanned: u64,
    pub sea_valid: u64,
    pub even_normal: u64,
    /// Distinct isomorphism classes among the valid families (exhaustive mode).
    pub iso_classes: Option<u64>,
    pub non_binary: u64,
    pub non_binary_classes: Option<u64>,
    /// Valid families whose width polynomial has a single term, binary or not.
    pub single_term: u64,
    /// Families where the matrix and excluded-minor tests gave different answers.
    pub method_disagreements: u64,
    pub violations: Vec<Violation>,
    pub duration: Duration,
}

impl SearchReport {
    fn empty(n: usize, mode: SearchMode) -> Self {
        Self {
            n,
            mode,
            scanned: 0,
            sea_valid: 0,
            even_normal: 0,
            iso_classes: None,
            non_binary: 0,
            non_binary_classes: None,
            single_term: 0,
            method_disagreements: 0,
            violations: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.method_disagreements == 0
    }

    fn pairs(&self) -> Vec<(&'static str, String)> {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_owned(), |x| x.to_string());
        let mut kv = vec![("n", self.n.to_string())];
        match self.mode {
            SearchMode::Exhaustive => kv.push(("mode", "exhaustive".into())),
            SearchMode::Sampled { trials, seed } => {
                kv.push(("mode", "sampled".into()));
                kv.push(("trials", trials.to_string()));
                kv.push(("seed", seed.to_string()));
            }
        }
        kv.extend([
            ("scanned", self.scanned.to_string()),
            ("sea_valid", self.sea_valid.to_string()),
            ("even_normal", self.even_normal.to_string()),
            ("iso_classes", opt(self.iso_classes)),
            ("non_binary", self.non_binary.to_string()),
            ("non_binary_classes", opt(self.non_binary_classes)),
            ("single_term", self.single_term.to_string()),
            (
                "method_disagreements",
                self.method_disagreements.to_string(),
            ),
            ("violations", self.violations.len().to_string()),
        ]);
        kv
    }

    /// `key=value` lines, one per field, then one `violation=` line per violation.
    /// Wall-clock time is left out so reports compare byte-for-byte.
    pub fn key_values(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.pairs() {
            out.push_str(&format!("{k}={v}\n"));
        }
        for v in &self.violations {
            out.push_str(&format!(
                "violation={} poly={} trimmed_non_binary={} trimmed_single_term={}\n",
                v.delta_matroid,
                v.polynomial.machine_form(),
                v.trimmed_non_binary,
                v.trimmed_single_term
            ));
        }
        out
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "search report")?;
        for (k, v) in self.pairs() {
            writeln!(f, "  {k:<22}{v}")?;
        }
        for v in &self.violations {
            writeln!(
                f,
                "  violation: {} with twist polynomial {}",
                v.delta_matroid, v.polynomial
            )?;
        }
        let verdict = if self.holds() {
            "no violations"
        } else {
            "VIOLATIONS FOUND"
        };
        write!(f, "  verdict: {verdict}")
    }
}

#[derive(Clone, Debug, Default)]
struct Classified {
    non_binary: bool,
    single_term: bool,
    disagreement: bool,
    violation: Option<Violation>,
}

fn classify(d: &DeltaMatroid) -> Result<Classified> {
    let by_minor = iso::contains_excluded_minor(d).is_some();
    let by_matrix = gf2::binary_representation(d).is_none();
    let poly = poly::twist_polynomial(d, Convention::Width)?;
    let single_term = poly.is_single_term();
    let violation = if by_minor && single_term {
        let trimmed = d.trim_unused();
        let trimmed_poly = poly::twist_polynomial(&trimmed, Convention::Width)?;
        Some(Violation {
            delta_matroid: d.clone(),
            polynomial: poly,
            trimmed_non_binary: iso::contains_excluded_minor(&trimmed).is_some(),
            trimmed_single_term: trimmed_poly.is_single_term(),
            trimmed,
        })
    } else {
        None
    };
    Ok(Classified {
        non_binary: by_minor,
        single_term,
        disagreement: by_minor != by_matrix,
        violation,
    })
}

/// Exhaustively checks every even normal delta-matroid on `n` elements.
///
/// Each isomorphism class is classified once through a representative; counts
/// are weighted by class size so they refer to labelled families.
pub fn verify_main_theorem(n: usize, workers: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let bitmaps = enumerate_bitmaps(n, workers)?;
    let mut classes: BTreeMap<CanonicalForm, (u64, u64)> = BTreeMap::new();
    for &b in &bitmaps {
        let d = from_bitmap(n, b);
        classes.entry(iso::canonical_form(&d)?).or_insert((b, 0)).1 += 1;
    }
    let reps: Vec<(u64, u64)> = classes.values().copied().collect();
    let classify_rep = |&(b, count): &(u64, u64)| -> Result<(Classified, u64)> {
        Ok((classify(&from_bitmap(n, b))?, count))
    };
    let results: Vec<(Classified, u64)> = if workers <= 1 {
        reps.iter().map(classify_rep).collect::<Result<_>>()?
    } else {
        pool(workers).install(|| reps.par_iter().map(classify_rep).collect::<Result<_>>())?
    };

    let mut report = SearchReport::empty(n, SearchMode::Exhaustive);
    report.scanned = 1u64 << even_candidates(n).len();
    report.sea_valid = bitmaps.len() as u64;
    report.even_normal = bitmaps.len() as u64;
    report.iso_classes = Some(reps.len() as u64);
    let mut nb_classes = 0;
    for (c, count) in results {
        if c.non_binary {
            report.non_binary += count;
            nb_classes += 1;
        }
        if c.single_term {
            report.single_term += count;
        }
        if c.disagreement {
            report.method_disagreements += count;
        }
        report.violations.extend(c.violation);
    }
    report.non_binary_classes = Some(nb_classes);
    report
        .violations
        .sort_by(|a, b| a.delta_matroid.feasible().cmp(b.delta_matroid.feasible()));
    report.duration = start.elapsed();
    Ok(report)
}

/// Random normal family on `n` elements: the empty set plus each non-empty
/// even subset independently with probability one half.
fn random_even_family(n: usize, rng: &mut impl Rng) -> Vec<Mask> {
    std::iter::once(0)
        .chain((1..=full(n)).filter(|m| m.count_ones() % 2 == 0 && rng.random_bool(0.5)))
        .collect()
}

/// Seeded rejection sampling of even normal families; trial `t` draws from
/// its own ChaCha stream, so results do not depend on `workers`.
pub fn sample_search(n: usize, trials: u64, seed: u64, workers: usize) -> Result<SearchReport> {
    if n > SAMPLE_MAX {
        return Err(Error::ExhaustiveTooLarge { n, max: SAMPLE_MAX });
    }
    let start = Instant::now();
    let trial = |t: u64| -> Result<Option<Classified>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t);
        let fam = random_even_family(n, &mut rng);
        if find_sea_violation(n, &fam).is_some() {
            return Ok(None);
        }
        let d = DeltaMatroid::trusted(SetSystem::from_masks(n, fam)?);
        Ok(Some(classify(&d)?))
    };
    let outcomes: Vec<Option<Classified>> = if workers <= 1 {
        (0..trials).map(trial).collect::<Result<_>>()?
    } else {
        pool(workers).install(|| {
            (0..trials)
                .into_par_iter()
                .map(trial)
                .collect::<Result<_>>()
        })?
    };
    let mut report = SearchReport::empty(n, SearchMode::Sampled { trials, seed });
    report.scanned = trials;
    for c in outcomes.into_iter().flatten() {
        report.sea_valid += 1;
        report.even_normal += 1;
        report.non_binary += c.non_binary as u64;
        report.single_term += c.single_term as u64;
        report.method_disagreements += c.disagreement as u64;
        if let Some(v) = c.violation {
            if !report.violations.contains(&v) {
                report.violations.push(v);
            }
        }
    }
    report
        .violations
        .sort_by(|a, b| a.delta_matroid.feasible().cmp(b.delta_matroid.feasible()));
    report.duration = start.elapsed();
    Ok(report)
}

/// Structural reasons, valid for a normal delta-matroid, why some twist must
/// change the width.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionHit {
    /// An element lies in every maximum feasible set (even case).
    ElementInEveryMaximum { element: usize },
    /// A feasible pair avoids some maximum feasible set.
    PairAvoidsMaximum { pair: Mask, maximum: Mask },
    /// The whole ground set is feasible but some subset is not.
    FullSetWithoutPowerSet { missing: Mask },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiredCondition {
    pub hit: ConditionHit,
    /// The twisting set whose width differs from the original.
    pub twist: Mask,
    /// `w(D * twist) - w(D)`.
    pub width_delta: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub fired: Vec<FiredCondition>,
}

impl ConditionReport {
    pub fn any(&self) -> bool {
        !self.fired.is_empty()
    }
}

/// Evaluates the three width-changing conditions on a normal delta-matroid.
/// Each condition reports its first witness in mask order.
pub fn check_necessary_conditions(d: &DeltaMatroid) -> Result<ConditionReport> {
    if !d.is_normal() {
        return Err(Error::NotNormal);
    }
    let base = d.width_profile().width as i64;
    let delta = |a: Mask| poly::twisted_width(d.feasible(), a) as i64 - base;
    let upper = d.extremal_matroid(crate::system::Extremal::Upper);
    let mut fired = Vec::new();

    if d.is_even() {
        let common = upper.iter().fold(d.ground(), |acc, &m| acc & m);
        if let Some(x) = ones(common).next() {
            fired.push(FiredCondition {
                hit: ConditionHit::ElementInEveryMaximum { element: x },
                twist: bit(x),
                width_delta: delta(bit(x)),
            });
        }
    }

    let pair_hit = d
        .feasible()
        .iter()
        .filter(|m| m.count_ones() == 2)
        .find_map(|&pair| {
            upper
                .iter()
                .find(|&&f| f & pair == 0)
                .map(|&maximum| (pair, maximum))
        });
    if let Some((pair, maximum)) = pair_hit {
        fired.push(FiredCondition {
            hit: ConditionHit::PairAvoidsMaximum { pair, maximum },
            twist: pair,
            width_delta: delta(pair),
        });
    }

    if d.contains(d.ground()) && d.feasible().len() as u64 != 1u64 << d.len() {
        let missing = (0..=d.ground())
            .find(|&m| !d.contains(m))
            .expect("family is not the power set");
        fired.push(FiredCondition {
            hit: ConditionHit::FullSetWithoutPowerSet { missing },
            twist: missing,
            width_delta: delta(missing),
        });
    }
    Ok(ConditionReport { fired })
}

/// First normal twist `D * A` (`A` feasible, in mask order) on which some
/// condition fires.
pub fn conditions_fire_on_some_twist(d: &DeltaMatroid) -> Option<(Mask, ConditionReport)> {
    d.feasible().iter().find_map(|&a| {
        let report = check_necessary_conditions(&d.twist(a)).ok()?;
        report.any().then_some((a, report))
    })
}
