//! The reproducibility suite behind `deltamat verify-paper`: every claim the
//! library is built to confirm, run end to end with fixed seeds.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::{bit, compress, ones, submasks};
use crate::error::Result;
use crate::gf2::{self, BinaryMethod};
use crate::iso;
use crate::poly::{self, Convention};
use crate::random;
use crate::search;
use crate::system::{validate_sea, DeltaMatroid, Extremal, Mask, MinorKind};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest ground set searched exhaustively.
    pub max_n: usize,
    /// Ground-set size for the sampled search beyond `max_n`; zero skips it.
    pub sample_n: usize,
    pub sample_trials: u64,
    pub seed: u64,
    /// Random cases per property suite.
    pub property_cases: usize,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 5,
            sample_n: 6,
            sample_trials: 100_000,
            seed: 42,
            property_cases: 1000,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub key: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Check = (
    &'static str,
    &'static str,
    fn(&VerifyOptions) -> Result<(bool, String)>,
);

const CHECKS: [Check; 10] = [
    (
        "even-subsets-sea",
        "all even subsets of an n-set form a delta-matroid, n = 1..10",
        even_subsets_sea,
    ),
    (
        "even-subsets-twist-profiles",
        "twists of D^n by even |A| have ranks (0, n-1), by odd |A| have (1, n), n = 3, 5, 7",
        even_subsets_twist_profiles,
    ),
    (
        "even-subsets-polynomial",
        "D^n has half-width polynomial 2^n z^((n-1)/2) and width polynomial 2^n z^(n-1)",
        even_subsets_polynomial,
    ),
    (
        "excluded-minor-widths",
        "w(S4)=2, w(S4*{1,2})=4, w(S5)=4, w(S5*{1,3})=0, w(S2*{1})=3",
        excluded_minor_widths,
    ),
    (
        "width-changing-twists",
        "every S_i has a twist whose width differs from w(S_i)",
        width_changing_twists,
    ),
    (
        "binary-methods-agree",
        "matrix and excluded-minor binary tests agree on every delta-matroid with n <= 4",
        binary_methods_agree,
    ),
    (
        "no-single-term-non-binary",
        "no even normal non-binary delta-matroid has a single-term width polynomial",
        no_single_term_non_binary,
    ),
    (
        "property-suites",
        "twist group law, parity, twist/minor commutation, upper/lower duality, exchange, D(A) binary",
        property_suites,
    ),
    (
        "width-conditions-consistency",
        "every even normal non-binary delta-matroid with n <= 4 fires a width condition on some normal twist",
        width_conditions_consistency,
    ),
    (
        "search-determinism",
        "exhaustive search reports are identical for 1 and 4 workers",
        search_determinism,
    ),
];

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(key, claim, check)| {
            let start = Instant::now();
            let (passed, detail) = match check(opts) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckOutcome {
                key,
                claim,
                passed,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

/// One line per check: verdict, key, elapsed seconds, detail.
pub fn render_table(outcomes: &[CheckOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let _ = writeln!(
            out,
            "{:<4}  {:<30} {:>8.2}s  {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.key,
            o.elapsed.as_secs_f64(),
            o.detail
        );
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", outcomes.len());
    out
}

fn even_subsets_sea(_: &VerifyOptions) -> Result<(bool, String)> {
    for n in 1..=10 {
        let d = search::build_dn(n)?;
        if let Err(e) = validate_sea(d.into_set_system()) {
            return Ok((false, format!("n={n}: {e}")));
        }
    }
    Ok((true, "valid for n = 1..10".into()))
}

fn even_subsets_twist_profiles(_: &VerifyOptions) -> Result<(bool, String)> {
    for n in [3, 5, 7] {
        let d = search::build_dn(n)?;
        for a in submasks(d.ground()) {
            let p = d.twist(a).width_profile();
            let want = if a.count_ones() % 2 == 0 {
                (0, n - 1)
            } else {
                (1, n)
            };
            if (p.r_min, p.r_max) != want {
                return Ok((false, format!("n={n} A={a:#b}: got {p}")));
            }
        }
    }
    Ok((true, "all 2^n twists match for n = 3, 5, 7".into()))
}

fn even_subsets_polynomial(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut shown = Vec::new();
    for n in [3usize, 5, 7] {
        let d = search::build_dn(n)?;
        let half = poly::twist_polynomial(&d, Convention::HalfWidth)?;
        let width = poly::twist_polynomial(&d, Convention::Width)?;
        let ok_half = half.terms().eq([((n as u32 - 1) / 2, 1u64 << n)]);
        let ok_width = width.terms().eq([(n as u32 - 1, 1u64 << n)]);
        if !(ok_half && ok_width) {
            return Ok((false, format!("n={n}: half-width {half}, width {width}")));
        }
        shown.push(format!("n={n}: {half}"));
    }
    Ok((true, shown.join("; ")))
}

fn excluded_minor_widths(_: &VerifyOptions) -> Result<(bool, String)> {
    let s = iso::excluded_minor;
    let cases: [(usize, Mask, usize, &str); 5] = [
        (4, 0, 2, "w(S4)"),
        (4, 0b0011, 4, "w(S4*{1,2})"),
        (5, 0, 4, "w(S5)"),
        (5, 0b0101, 0, "w(S5*{1,3})"),
        (2, 0b001, 3, "w(S2*{1})"),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for (i, a, want, name) in cases {
        let got = s(i).twist(a).width_profile().width;
        ok &= got == want;
        parts.push(format!("{name}={got}"));
    }
    Ok((ok, parts.join(" ")))
}

fn width_changing_twists(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    for i in 1..=5 {
        let si = iso::excluded_minor(i);
        let w = si.width_profile().width as u32;
        match submasks(si.ground()).find(|&a| poly::twisted_width(si.feasible(), a) != w) {
            Some(a) => parts.push(format!("S{i}*{}", si.format_set(a))),
            None => return Ok((false, format!("S{i} has constant width"))),
        }
    }
    Ok((true, parts.join(" ")))
}

fn binary_methods_agree(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut total = 0;
    let mut non_binary = 0;
    for n in 0..=search::ALL_SYSTEMS_MAX {
        let all = if n == 0 {
            vec![search::build_dn(0)?]
        } else {
            search::all_delta_matroids(n)?
        };
        for d in &all {
            total += 1;
            match gf2::is_binary(d, BinaryMethod::Both) {
                Ok(v) => non_binary += !v.binary as usize,
                Err(e) => return Ok((false, format!("{d}: {e}"))),
            }
        }
    }
    Ok((
        true,
        format!("{total} delta-matroids, {non_binary} non-binary, no disagreement"),
    ))
}

fn no_single_term_non_binary(opts: &VerifyOptions) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 1..=opts.max_n {
        let r = search::verify_main_theorem(n, opts.workers)?;
        ok &= r.holds();
        parts.push(format!(
            "n={n}: {} even normal, {} non-binary, {} violations",
            r.even_normal,
            r.non_binary,
            r.violations.len()
        ));
    }
    if opts.sample_n > 0 && opts.sample_trials > 0 {
        let r = search::sample_search(opts.sample_n, opts.sample_trials, opts.seed, opts.workers)?;
        ok &= r.holds();
        parts.push(format!(
            "n={} sampled: {} trials, {} valid, {} non-binary, {} violations",
            opts.sample_n,
            r.scanned,
            r.sea_valid,
            r.non_binary,
            r.violations.len()
        ));
    }
    Ok((ok, parts.join("; ")))
}

/// `F` re-indexed on the ground set with element `e` removed.
fn drop_element(f: Mask, e: usize, ground: Mask) -> Mask {
    compress(f & !bit(e), ground & !bit(e))
}

/// The four twist/minor commutation identities at `(f, e)`.
pub fn twist_minor_commutes(d: &DeltaMatroid, f: Mask, e: usize) -> bool {
    let g = d.ground();
    let tw = d.twist(f);
    let contract_tw = tw.elementary_minor(e, MinorKind::Contract);
    let delete_tw = tw.elementary_minor(e, MinorKind::Delete);
    let contract = d.elementary_minor(e, MinorKind::Contract);
    let delete = d.elementary_minor(e, MinorKind::Delete);
    let rest = drop_element(f, e, g);
    if f & bit(e) == 0 {
        contract_tw == contract.twist(rest) && delete_tw == delete.twist(rest)
    } else {
        contract_tw == delete.twist(rest) && delete_tw == contract.twist(rest)
    }
}

/// For bases `F`, `F Δ {x,y}`, `F Δ {x',y'}` of the upper matroid, either
/// `F Δ {x,y,x',y'}` is a basis or both `F Δ {x,y'}` and `F Δ {x',y}` are.
pub fn upper_exchange_disjunction(d: &DeltaMatroid) -> bool {
    let upper = d.extremal_matroid(Extremal::Upper);
    let is_basis = |m: Mask| upper.binary_search(&m).is_ok();
    let g = d.ground();
    upper.iter().all(|&f| {
        let inside: Vec<usize> = ones(f).collect();
        let outside: Vec<usize> = ones(g & !f).collect();
        inside.iter().all(|&x| {
            inside.iter().filter(|&&x2| x2 != x).all(|&x2| {
                outside.iter().all(|&y| {
                    outside.iter().filter(|&&y2| y2 != y).all(|&y2| {
                        let (bx, bx2, by, by2) = (bit(x), bit(x2), bit(y), bit(y2));
                        if !(is_basis(f ^ bx ^ by) && is_basis(f ^ bx2 ^ by2)) {
                            return true;
                        }
                        is_basis(f ^ bx ^ by ^ bx2 ^ by2)
                            || (is_basis(f ^ bx ^ by2) && is_basis(f ^ bx2 ^ by))
                    })
                })
            })
        })
    })
}

fn property_suites(opts: &VerifyOptions) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cases = opts.property_cases;
    let mut failures: Vec<String> = Vec::new();
    let mut fail = |name: &str, d: &DeltaMatroid| {
        if failures.len() < 5 {
            failures.push(format!("{name} on {d}"));
        }
    };
    for _ in 0..cases {
        let d = random::random_delta_matroid(&mut rng);
        let a = random::random_subset_of(&d, &mut rng);
        let b = random::random_subset_of(&d, &mut rng);
        if d.twist(a).twist(b) != d.twist(a ^ b)
            || d.twist(0) != d
            || d.dual() != d.twist(d.ground())
        {
            fail("twist group law", &d);
        }
        if d.twist(a).parity() != d.parity() {
            fail("parity under twist", &d);
        }
        if !d.is_empty() {
            let e = random::random_element(&d, &mut rng);
            if d.is_even()
                && [MinorKind::Delete, MinorKind::Contract]
                    .iter()
                    .any(|&k| !d.elementary_minor(e, k).is_even())
            {
                fail("even minors", &d);
            }
            if !twist_minor_commutes(&d, a, e) {
                fail("twist/minor commutation", &d);
            }
        }
        let mut upper_c: Vec<Mask> = d
            .extremal_matroid(Extremal::Upper)
            .iter()
            .map(|&m| m ^ d.ground())
            .collect();
        upper_c.sort_unstable();
        if upper_c != d.dual().extremal_matroid(Extremal::Lower) {
            fail("upper/lower duality", &d);
        }
        if !upper_exchange_disjunction(&d) {
            fail("exchange disjunction", &d);
        }
        let n = rand::Rng::random_range(&mut rng, 0..=8);
        let m = gf2::matroid_from_matrix(&random::random_matrix(n, &mut rng));
        if gf2::binary_representation(&m).is_none() {
            fail("D(A) binary", &m);
        }
    }
    if failures.is_empty() {
        Ok((true, format!("{cases} seeded cases per suite, 0 failures")))
    } else {
        Ok((false, failures.join("; ")))
    }
}

fn width_conditions_consistency(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut checked = 0;
    for n in 1..=4 {
        for d in search::enumerate_even_normal(n, false)? {
            if iso::contains_excluded_minor(&d).is_none() {
                continue;
            }
            checked += 1;
            if search::conditions_fire_on_some_twist(&d).is_none() {
                return Ok((false, format!("no condition fires for {d}")));
            }
        }
    }
    Ok((
        true,
        format!("{checked} even normal non-binary delta-matroids, all fire"),
    ))
}

fn search_determinism(opts: &VerifyOptions) -> Result<(bool, String)> {
    let n = opts.max_n.min(5);
    let one = search::verify_main_theorem(n, 1)?.key_values();
    let four = search::verify_main_theorem(n, 4)?.key_values();
    Ok((
        one == four,
        format!("n={n}: {} bytes, identical={}", one.len(), one == four),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drop_element_reindexes() {
        assert_eq!(drop_element(0b1011, 1, 0b1111), 0b101);
        assert_eq!(drop_element(0b1011, 2, 0b1111), 0b111);
    }

    #[test]
    fn quick_checks_pass() {
        let opts = VerifyOptions::default();
        for f in [
            even_subsets_sea,
            even_subsets_twist_profiles,
            even_subsets_polynomial,
            excluded_minor_widths,
            width_changing_twists,
        ] {
            let (ok, detail) = f(&opts).unwrap();
            assert!(ok, "{detail}");
        }
    }

    #[test]
    fn table_rendering() {
        let outcomes = vec![CheckOutcome {
            key: "k",
            claim: "c",
            passed: false,
            detail: "d".into(),
            elapsed: Duration::from_millis(1500),
        }];
        let t = render_table(&outcomes);
        assert!(t.starts_with("FAIL  k "));
        assert!(t.contains("1.50s  d"));
        assert!(t.ends_with("0/1 checks passed\n"));
    }

    #[test]
    fn exchange_conjunction_can_fail() {
        // Bases {x,x'}, {y,y'}, {x',y}, {x,y'} with x=1, x'=2, y=3, y'=4.
        let d = validate_sea(
            crate::SetSystem::from_masks(4, [0b0011, 0b1100, 0b0110, 0b1001]).unwrap(),
        )
        .unwrap();
        assert!(upper_exchange_disjunction(&d));
        let f = 0b0011;
        assert!(d.contains(f ^ 0b1111));
        assert!(!d.contains(f ^ 0b1001));
    }
}
