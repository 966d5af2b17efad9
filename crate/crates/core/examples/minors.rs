// Deletion and contraction, including loops and coloops.

use delta_matroid::{iso, validate_sea, MinorKind, SetSystem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s4 = iso::excluded_minor(4);
    let del = s4.elementary_minor(3, MinorKind::Delete);
    let con = s4.elementary_minor(3, MinorKind::Contract);
    println!("S4 \\ 4 = {del}");
    println!("S4 / 4 = {con}");

    let m = s4.minor(0b0001, 0b0010);
    println!("S4 \\ 1 / 2 = {m}");

    // element 2 is a coloop: deleting it contracts instead
    let d = validate_sea(SetSystem::from_masks(2, [0b10, 0b11])?)?;
    let (loops, coloops) = d.loops_and_coloops();
    println!(
        "{d}: loops {} coloops {}",
        d.format_set(loops),
        d.format_set(coloops)
    );
    assert_eq!(
        d.elementary_minor(1, MinorKind::Delete),
        d.elementary_minor(1, MinorKind::Contract)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
