// Checking the symmetric exchange axiom on a few set systems.

use delta_matroid::{search, validate_sea, SetSystem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s1 = SetSystem::from_label_sets(
        &["1", "2", "3"],
        &[&[], &["1", "2"], &["1", "3"], &["2", "3"], &["1", "2", "3"]],
    )?;
    let d = validate_sea(s1)?;
    println!("valid: {d}");

    let bad = SetSystem::from_label_sets(&["1", "2", "3"], &[&[], &["1", "2", "3"]])?;
    match validate_sea(bad) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    for n in 1..=6 {
        let dn = search::build_dn(n)?;
        println!(
            "even subsets of {n} elements: {} feasible sets",
            dn.feasible().len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
