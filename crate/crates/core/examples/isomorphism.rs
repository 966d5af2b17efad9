// Canonical forms and the excluded-minor search.

use delta_matroid::iso;
use delta_matroid::search;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s4 = iso::excluded_minor(4);
    let shuffled = s4.permute(&[2, 0, 3, 1]);
    println!("{s4}\n{shuffled}");
    println!("isomorphic: {}", iso::is_isomorphic(&s4, &shuffled)?);
    println!(
        "canonical bytes: {:?}",
        iso::canonical_form(&s4)?.as_bytes()
    );

    let classes = search::enumerate_even_normal(4, true)?;
    println!(
        "{} even normal delta-matroids on 4 elements up to relabelling",
        classes.len()
    );
    for d in classes {
        if let Some(w) = iso::contains_excluded_minor(&d) {
            println!("  {d} has a twist of S{} as a minor", w.index);
        }
    }
    let t = iso::excluded_minor(5).twist(0b0101);
    if let Some(p) = iso::find_s4_pattern(&t) {
        let sets: Vec<String> = p.sets().iter().map(|&m| t.format_set(m)).collect();
        println!("pattern in S5 * {{1,3}}: {}", sets.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
