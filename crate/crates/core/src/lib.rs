//! Delta-matroids over bitmask set systems.
//!
//! The crate covers the symmetric exchange axiom, twists and duals,
//! elementary minors, binary representability over GF(2), isomorphism and
//! excluded-minor detection, the twist polynomial, and an exhaustive search
//! harness over small even normal delta-matroids.
//!
//! ```
//! use delta_matroid::{poly, search};
//!
//! let d5 = search::build_dn(5).unwrap();
//! let p = poly::twist_polynomial(&d5, poly::Convention::HalfWidth).unwrap();
//! assert_eq!(p.to_string(), "32*z^2");
//! ```

pub mod bits;
pub mod checks;
pub mod cli;
pub mod error;
pub mod file;
pub mod gf2;
pub mod iso;
pub mod poly;
pub mod random;
pub mod search;
pub mod system;

pub use error::{Error, Result};
pub use system::{
    validate_sea, DeltaMatroid, Extremal, Mask, MinorKind, Parity, SeaViolation, SetSystem,
    WidthProfile, MAX_ELEMENTS,
};
