// Structural conditions that force some twist to change the width.

use delta_matroid::search::{self, ConditionHit};
use delta_matroid::{iso, validate_sea, SetSystem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pair = validate_sea(SetSystem::from_masks(2, [0, 0b11])?)?;
    for f in search::check_necessary_conditions(&pair)?.fired {
        println!(
            "{pair}: {:?}, twisting by {} changes width by {}",
            f.hit,
            pair.format_set(f.twist),
            f.width_delta
        );
    }

    let s4 = iso::excluded_minor(4);
    let report = search::check_necessary_conditions(&s4)?;
    for f in &report.fired {
        if let ConditionHit::PairAvoidsMaximum { pair, maximum } = f.hit {
            println!(
                "S4: pair {} misses maximum {}",
                s4.format_set(pair),
                s4.format_set(maximum)
            );
        }
    }

    let mut fired = 0;
    let all = search::enumerate_even_normal(5, false)?;
    let non_binary: Vec<_> = all
        .iter()
        .filter(|d| iso::contains_excluded_minor(d).is_some())
        .collect();
    for d in &non_binary {
        fired += search::conditions_fire_on_some_twist(d).is_some() as usize;
    }
    println!(
        "n=5: conditions fire for {fired} of {} non-binary cases",
        non_binary.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
