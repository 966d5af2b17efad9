//! JSON set-system files.
//!
//! ```text
//! {
//!   "elements": ["1", "2", "3"],
//!   "feasible": [
//!     [],
//!     ["1", "2"]
//!   ]
//! }
//! ```
//!
//! Serialization lists feasible sets in mask order with labels in element
//! order, so a serialized file parses and re-serializes to the same bytes.

use std::collections::HashSet;

use serde::Deserialize;

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::system::SetSystem;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    elements: Vec<String>,
    feasible: Vec<Vec<String>>,
}

pub fn parse(text: &str) -> Result<SetSystem> {
    let raw: RawFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid set-system file: {e}")))?;
    if raw.elements.len() > crate::MAX_ELEMENTS {
        return Err(Error::TooManyElements(raw.elements.len()));
    }
    let probe = SetSystem::new(raw.elements.iter().cloned(), [0])?;
    let mut masks = Vec::with_capacity(raw.feasible.len());
    for set in &raw.feasible {
        let mut seen = HashSet::new();
        for label in set {
            if !seen.insert(label.as_str()) {
                return Err(Error::Parse(format!(
                    "label `{label}` repeated within one feasible set"
                )));
            }
        }
        masks.push(probe.mask_of(set.iter().map(String::as_str))?);
    }
    SetSystem::new(raw.elements, masks)
}

fn quote(label: &str) -> String {
    serde_json::to_string(label).expect("strings always serialize")
}

pub fn to_string(s: &SetSystem) -> String {
    let labels = |m| {
        ones(m)
            .map(|i| quote(&s.elements()[i]))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::from("{\n  \"elements\": [");
    out.push_str(&labels(s.ground()));
    out.push_str("],\n  \"feasible\": [\n");
    let rows: Vec<String> = s
        .feasible()
        .iter()
        .map(|&m| format!("    [{}]", labels(m)))
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}
