// Looking for even normal non-binary delta-matroids with a one-term polynomial.

use delta_matroid::search;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        let r = search::verify_main_theorem(n, 2)?;
        println!(
            "n={n}: {} even normal, {} classes, {} non-binary, {} violations",
            r.even_normal,
            r.iso_classes.unwrap_or(0),
            r.non_binary,
            r.violations.len()
        );
    }
    let r = search::sample_search(6, 5_000, 42, 2)?;
    println!("{r}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
