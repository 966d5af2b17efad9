// The twist polynomial in both exponent conventions.

use delta_matroid::poly::{self, Convention};
use delta_matroid::{iso, search};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [3, 5, 7, 9] {
        let d = search::build_dn(n)?;
        let half = poly::twist_polynomial(&d, Convention::HalfWidth)?;
        let width = poly::twist_polynomial(&d, Convention::Width)?;
        println!("n={n}: {half}   (width exponents: {width})");
    }
    for i in 1..=5 {
        let p = poly::twist_polynomial(&iso::excluded_minor(i), Convention::Width)?;
        println!("S{i}: {p}   [{}]", p.machine_form());
    }
    let big = search::build_dn(15)?;
    let p = poly::twist_polynomial_with(&big, Convention::Width, 4)?;
    println!("n=15 on 4 workers: {p}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
