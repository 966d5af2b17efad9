//! End-to-end acceptance checks. Every library answer is compared with a
//! direct computation from `common`, and time limits are enforced where stated.

mod common;

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use delta_matroid::gf2::{self, BinaryMethod, Gf2SymMatrix};
use delta_matroid::poly::{self, Convention};
use delta_matroid::random;
use delta_matroid::search::{self, ConditionHit, FiredCondition};
use delta_matroid::{
    checks, file, iso, validate_sea, DeltaMatroid, Extremal, MinorKind, Parity, SetSystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 1000;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn load(i: usize) -> DeltaMatroid {
    let text = std::fs::read_to_string(data(&format!("s{i}.json"))).unwrap();
    validate_sea(file::parse(&text).unwrap()).unwrap()
}

fn deltamat(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_deltamat"))
        .args(args)
        .env_remove(delta_matroid::cli::WORKERS_ENV)
        .output()
        .unwrap()
}

fn within(limit: Duration, start: Instant, what: &str) {
    let took = start.elapsed();
    assert!(took < limit, "{what} took {took:?}, limit {limit:?}");
}

#[test]
fn a01_even_subsets_are_delta_matroids() {
    let start = Instant::now();
    for n in 1..=10 {
        let d = search::build_dn(n).unwrap();
        assert_eq!(d.feasible(), common::even_subsets(n).as_slice(), "n={n}");
        assert!(validate_sea(d.into_set_system()).is_ok(), "n={n}");
    }
    within(Duration::from_secs(1), start, "validating n = 1..10");
    for n in 1..=10 {
        assert!(common::sea(&common::even_subsets(n)), "oracle n={n}");
    }
    let dn = deltamat(&["dn", "7"]);
    let text = String::from_utf8(dn.stdout).unwrap();
    let parsed = file::parse(&text).unwrap();
    assert_eq!(parsed.feasible(), common::even_subsets(7).as_slice());
    println!("PASS 1: even subsets of an n-set satisfy symmetric exchange for n = 1..10");
}

#[test]
fn a02_twist_profiles_of_even_subsets() {
    let start = Instant::now();
    for n in [3, 5, 7] {
        let d = search::build_dn(n).unwrap();
        for a in 0..1u32 << n {
            let p = d.twist(a).width_profile();
            let want = if a.count_ones() % 2 == 0 {
                (0, n - 1)
            } else {
                (1, n)
            };
            assert_eq!((p.r_min, p.r_max), want, "n={n} A={a:#b}");
        }
    }
    within(Duration::from_secs(5), start, "all twists for n = 3, 5, 7");
    for n in [3usize, 5, 7] {
        let fam = common::even_subsets(n);
        for a in 0..1u32 << n {
            let (lo, hi) = common::profile(&common::twist(&fam, a));
            let want = if a.count_ones() % 2 == 0 {
                (0, n - 1)
            } else {
                (1, n)
            };
            assert_eq!((lo as usize, hi as usize), want);
        }
    }
    println!("PASS 2: twists of the even-subset delta-matroid have profiles (0, n-1) and (1, n)");
}

#[test]
fn a03_even_subsets_polynomial() {
    for n in [3usize, 5, 7] {
        let d = search::build_dn(n).unwrap();
        let half = poly::twist_polynomial(&d, Convention::HalfWidth).unwrap();
        let width = poly::twist_polynomial(&d, Convention::Width).unwrap();
        let k = n as u32 - 1;
        assert_eq!(half.terms().collect::<Vec<_>>(), vec![(k / 2, 1u64 << n)]);
        assert_eq!(width.terms().collect::<Vec<_>>(), vec![(k, 1u64 << n)]);
        assert_eq!(
            common::width_polynomial(n, &common::even_subsets(n)),
            width.terms().collect::<Vec<_>>()
        );
    }
    let d3 = deltamat(&["dn", "3"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_deltamat"))
        .args(["poly", "--half-width"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(&d3.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "8*z^1\n");
    println!("PASS 3: half-width polynomial is 2^n z^((n-1)/2) and width polynomial 2^n z^(n-1)");
}

#[test]
fn a04_fixed_widths() {
    let cases: [(usize, &[&str], usize); 5] = [
        (4, &[], 2),
        (4, &["1", "2"], 4),
        (5, &[], 4),
        (5, &["1", "3"], 0),
        (2, &["1"], 3),
    ];
    for (i, set, want) in cases {
        let s = load(i);
        assert_eq!(s.feasible(), iso::excluded_minor(i).feasible(), "S{i} file");
        let t = s.twist_labels(set.iter().copied()).unwrap();
        assert_eq!(t.width_profile().width, want, "S{i} * {set:?}");
        assert_eq!(common::width(t.feasible()) as usize, want);
    }
    let s5 = load(5).twist_labels(["1", "3"]).unwrap();
    let pairs: Vec<u32> = (0..16u32).filter(|m| m.count_ones() == 2).collect();
    assert_eq!(s5.feasible(), pairs.as_slice());
    let out = deltamat(&["width", data("s5.json").to_str().unwrap()]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "r_min=0 r_max=4 width=4\n"
    );
    println!("PASS 4: w(S4)=2, w(S4*{{1,2}})=4, w(S5)=4, w(S5*{{1,3}})=0, w(S2*{{1}})=3");
}

#[test]
fn a05_every_excluded_minor_has_a_width_changing_twist() {
    let start = Instant::now();
    let mut found = Vec::new();
    for i in 1..=5 {
        let s = iso::excluded_minor(i);
        let w = s.width_profile().width as u32;
        let a = (0..1u32 << s.len())
            .find(|&a| poly::twisted_width(s.feasible(), a) != w)
            .unwrap_or_else(|| panic!("S{i} has no width-changing twist"));
        found.push((i, a));
        assert!(!poly::twist_polynomial(&s, Convention::Width)
            .unwrap()
            .is_single_term());
    }
    within(Duration::from_secs(1), start, "width-changing twists");
    for (i, a) in found {
        let s = load(i);
        assert_ne!(
            common::width(&common::twist(s.feasible(), a)),
            common::width(s.feasible())
        );
    }
    println!("PASS 5: each of S1..S5 has a twist of different width");
}

#[test]
fn a06_binary_methods_agree_on_small_delta_matroids() {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=search::ALL_SYSTEMS_MAX {
        let all = search::all_delta_matroids(n).unwrap();
        let lib: HashSet<u64> = all
            .iter()
            .map(|d| common::family_to_bitmap(d.feasible()))
            .collect();
        let oracle: HashSet<u64> = (1..1u64 << (1 << n))
            .filter(|&fam| common::sea_bitmap(n, fam))
            .collect();
        assert_eq!(lib, oracle, "n={n}: delta-matroid enumeration");
        let binary = common::binary_bitmaps(n);
        for d in &all {
            let v = gf2::is_binary(d, BinaryMethod::Both).unwrap_or_else(|e| panic!("{d}: {e}"));
            let want = binary.contains(&common::family_to_bitmap(d.feasible()));
            assert_eq!(v.binary, want, "{d}");
            checked += 1;
        }
    }
    within(Duration::from_secs(60), start, "binary agreement");
    println!(
        "PASS 6: matrix and excluded-minor tests agree on all {checked} delta-matroids with n <= 4"
    );
}

#[test]
fn a07_no_single_term_non_binary_up_to_five() {
    let start = Instant::now();
    for n in 1..=5 {
        let r = search::verify_main_theorem(n, 1).unwrap();
        assert!(r.holds(), "n={n}: {r}");

        let even_normal = common::even_normal_bitmaps(n);
        let binary = common::binary_bitmaps(n);
        let non_binary: Vec<u64> = even_normal
            .iter()
            .copied()
            .filter(|b| !binary.contains(b))
            .collect();
        assert_eq!(r.even_normal, even_normal.len() as u64, "n={n}");
        assert_eq!(r.non_binary, non_binary.len() as u64, "n={n}");
        for &b in &non_binary {
            let fam = common::bitmap_to_family(b);
            assert!(
                common::width_polynomial(n, &fam).len() > 1,
                "n={n}: {fam:?}"
            );
        }
    }
    let sampled = search::sample_search(6, 100_000, 42, 1).unwrap();
    assert!(sampled.holds(), "{sampled}");
    assert_eq!(sampled.scanned, 100_000);

    let out = deltamat(&["verify-paper", "--max-n", "5"]);
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{table}");
    assert!(
        table
            .lines()
            .any(|l| l.starts_with("PASS") && l.contains("no-single-term-non-binary")),
        "{table}"
    );
    within(Duration::from_secs(300), start, "main search");
    println!(
        "PASS 7: no even normal non-binary delta-matroid with n <= 5 has a single-term polynomial"
    );
}

fn matrix_rows(a: &Gf2SymMatrix) -> Vec<Vec<bool>> {
    (0..a.dim())
        .map(|i| (0..a.dim()).map(|j| a.get(i, j)).collect())
        .collect()
}

/// Disjunctive basis exchange, checked on every quadruple.
fn exchange_disjunction(bases: &[u32], ground: u32) -> bool {
    let b: HashSet<u32> = bases.iter().copied().collect();
    for &f in bases {
        for x in 0..32 {
            for x2 in 0..32 {
                for y in 0..32 {
                    for y2 in 0..32 {
                        let (bx, bx2, by, by2) = (1u32 << x, 1u32 << x2, 1u32 << y, 1u32 << y2);
                        let inside = f & bx != 0 && f & bx2 != 0 && x != x2;
                        let outside = ground & !f & by != 0 && ground & !f & by2 != 0 && y != y2;
                        if !(inside && outside) {
                            continue;
                        }
                        if b.contains(&(f ^ bx ^ by)) && b.contains(&(f ^ bx2 ^ by2)) {
                            let joint = b.contains(&(f ^ bx ^ by ^ bx2 ^ by2));
                            let swapped =
                                b.contains(&(f ^ bx ^ by2)) && b.contains(&(f ^ bx2 ^ by));
                            if !(joint || swapped) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

#[test]
fn a08_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..CASES {
        let d = random::random_delta_matroid(&mut rng);
        let fam = d.feasible();
        let (a, b) = (
            random::random_subset_of(&d, &mut rng),
            random::random_subset_of(&d, &mut rng),
        );

        // Twist group law.
        assert_eq!(d.twist(a).twist(b), d.twist(a ^ b));
        assert_eq!(d.twist(0), d);
        assert_eq!(d.twist(a).feasible(), common::twist(fam, a).as_slice());

        // Parity under twists and minors.
        assert_eq!(d.twist(a).parity(), d.parity());
        let e = random::random_element(&d, &mut rng);
        for kind in [MinorKind::Delete, MinorKind::Contract] {
            let m = d.elementary_minor(e, kind);
            assert_eq!(
                m.feasible(),
                common::elementary_minor(fam, e, kind == MinorKind::Delete).as_slice()
            );
            if d.parity() == Parity::Even {
                assert_eq!(m.parity(), Parity::Even, "{d} minus {e}");
            }
        }

        // Twists commute with minors: (D*F)/e and (D*F)\e.
        let f = a;
        let rest = common::drop_bit(f & !(1 << e), e);
        let tw = common::twist(fam, f);
        let contract_tw = common::elementary_minor(&tw, e, false);
        let delete_tw = common::elementary_minor(&tw, e, true);
        let contract = common::twist(&common::elementary_minor(fam, e, false), rest);
        let delete = common::twist(&common::elementary_minor(fam, e, true), rest);
        if f >> e & 1 == 0 {
            assert_eq!(contract_tw, contract, "{d} F={f:#b} e={e}");
            assert_eq!(delete_tw, delete, "{d} F={f:#b} e={e}");
        } else {
            assert_eq!(contract_tw, delete, "{d} F={f:#b} e={e}");
            assert_eq!(delete_tw, contract, "{d} F={f:#b} e={e}");
        }
        assert!(checks::twist_minor_commutes(&d, f, e));

        // Upper matroid of the dual is the complement of the lower matroid.
        let ground = d.ground();
        let dual_upper = d.dual().extremal_matroid(Extremal::Upper);
        let complements = common::sorted(
            common::lower_bases(fam)
                .iter()
                .map(|&m| ground ^ m)
                .collect(),
        );
        assert_eq!(dual_upper, complements);
        assert_eq!(
            d.extremal_matroid(Extremal::Upper),
            common::upper_bases(fam)
        );

        // Exchange disjunction on the upper matroid.
        let upper = common::upper_bases(fam);
        assert!(exchange_disjunction(&upper, ground), "{d}");
        assert!(checks::upper_exchange_disjunction(&d));

        // Matrices give binary delta-matroids.
        let m = random::random_matrix(rng.random_range(1..=8), &mut rng);
        let dm = gf2::matroid_from_matrix(&m);
        assert_eq!(
            dm.feasible(),
            common::matrix_family(&matrix_rows(&m)).as_slice()
        );
        assert!(
            gf2::is_binary(&dm, BinaryMethod::Both).unwrap().binary,
            "{m:?}"
        );
    }
    println!("PASS 8: {CASES} seeded cases of each algebraic property, no failures");
}

/// Re-derives a fired condition and its width change on the twisted family.
fn confirm_hit(fam: &[u32], fired: &FiredCondition) -> bool {
    let w = common::width(fam) as i64;
    let delta = common::width(&common::twist(fam, fired.twist)) as i64 - w;
    let upper = common::upper_bases(fam);
    let shape = match fired.hit {
        ConditionHit::ElementInEveryMaximum { element } => {
            fired.twist == 1 << element && upper.iter().all(|m| m >> element & 1 == 1)
        }
        ConditionHit::PairAvoidsMaximum { pair, maximum } => {
            fired.twist == pair
                && pair.count_ones() == 2
                && fam.contains(&pair)
                && upper.contains(&maximum)
                && pair & maximum == 0
        }
        ConditionHit::FullSetWithoutPowerSet { missing } => {
            fired.twist == missing && !fam.contains(&missing)
        }
    };
    shape && delta != 0 && delta == fired.width_delta
}

#[test]
fn a09_conditions_fire_on_non_binary() {
    let mut count = 0;
    for n in 1..=4 {
        let binary = common::binary_bitmaps(n);
        for b in common::even_normal_bitmaps(n) {
            if binary.contains(&b) {
                continue;
            }
            count += 1;
            let fam = common::bitmap_to_family(b);
            let d = validate_sea(SetSystem::from_masks(n, fam.clone()).unwrap()).unwrap();
            let (a, report) = search::conditions_fire_on_some_twist(&d)
                .unwrap_or_else(|| panic!("nothing fires on any twist of {d}"));
            assert!(fam.contains(&a), "twist by a non-feasible set");
            let tw = common::twist(&fam, a);
            assert!(tw.contains(&0));
            assert!(report.any());
            for fired in &report.fired {
                assert!(confirm_hit(&tw, fired), "{d} twisted by {a:#b}: {fired:?}");
            }
        }
    }
    assert_eq!(count, 10);
    println!("PASS 9: a necessary condition fires on some twist of all {count} even normal non-binary cases");
}

#[test]
fn a10_search_output_is_identical_across_workers() {
    let one = deltamat(&["search", "--n", "5", "--parallel", "1"]);
    let four = deltamat(&["search", "--n", "5", "--parallel", "4"]);
    assert!(one.status.success() && four.status.success());
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, four.stdout);
    let kv1 = deltamat(&["search", "--n", "5", "--parallel", "1", "--format", "kv"]);
    let kv4 = deltamat(&["search", "--n", "5", "--parallel", "4", "--format", "kv"]);
    assert_eq!(kv1.stdout, kv4.stdout);
    let s1 = deltamat(&[
        "search",
        "--n",
        "6",
        "--sample",
        "2000",
        "--seed",
        "7",
        "--parallel",
        "1",
    ]);
    let s4 = deltamat(&[
        "search",
        "--n",
        "6",
        "--sample",
        "2000",
        "--seed",
        "7",
        "--parallel",
        "4",
    ]);
    assert_eq!(s1.stdout, s4.stdout);
    println!("PASS 10: search reports are byte-identical for 1 and 4 workers");
}
