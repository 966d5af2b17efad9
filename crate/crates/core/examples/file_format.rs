// Reading and writing the JSON set-system format.

use delta_matroid::{file, search, validate_sea};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = r#"{
        "elements": ["a", "b", "c"],
        "feasible": [[], ["a", "b"], ["b", "c"], ["a", "c"]]
    }"#;
    let s = file::parse(text)?;
    let d = validate_sea(s)?;
    let t = d.twist_labels(["a"])?;
    print!("{}", file::to_string(&t));

    let d3 = search::build_dn(3)?;
    let written = file::to_string(&d3);
    assert_eq!(file::to_string(&file::parse(&written)?), written);

    let err = file::parse(r#"{"elements": ["a"], "feasible": [["z"]]}"#).unwrap_err();
    println!("error: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
