// Twists, duals and width profiles.

use delta_matroid::iso;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s5 = iso::excluded_minor(5);
    println!("S5            {s5}");
    println!("  profile     {}", s5.width_profile());

    let t = s5.twist_labels(["1", "3"])?;
    println!("S5 * {{1,3}}    {t}");
    println!("  profile     {}", t.width_profile());

    let dual = s5.dual();
    println!("dual of S5    {dual}");
    assert_eq!(dual.dual(), s5);

    // twisting by A then by B is twisting by A Δ B
    let (a, b) = (0b0011, 0b0110);
    assert_eq!(s5.twist(a).twist(b), s5.twist(a ^ b));
    println!("parity of S5: {:?}", s5.parity());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
