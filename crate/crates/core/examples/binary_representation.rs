// Deciding representability by a symmetric GF(2) matrix, two ways.

use delta_matroid::gf2::{self, BinaryMethod, BinaryWitness, Gf2SymMatrix};
use delta_matroid::{iso, search};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Gf2SymMatrix::from_entries(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])?;
    let d = gf2::matroid_from_matrix(&a);
    println!("D(A) for A = {a}: {d}");

    let d5 = search::build_dn(5)?;
    match gf2::is_binary(&d5, BinaryMethod::Both)?.witness {
        Some(BinaryWitness::Representation { twist, matrix }) => {
            println!(
                "even subsets of 5: D(A) * {} with A = {matrix}",
                d5.format_set(twist)
            )
        }
        other => println!("unexpected: {other:?}"),
    }

    for i in 1..=5 {
        let s = iso::excluded_minor(i);
        let v = gf2::is_binary(&s, BinaryMethod::Both)?;
        println!("S{i} binary: {}", v.binary);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
