use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("feasible family is empty")]
    EmptyFamily,
    #[error("ground set has {0} elements; at most {max} are supported", max = crate::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate feasible set {0}")]
    DuplicateFeasible(String),
    #[error("mask {mask:#b} uses bits outside a ground set of {n} elements")]
    MaskOutOfRange { mask: u32, n: usize },
    #[error("the empty set is not feasible")]
    NotNormal,
    #[error("delta-matroid is not even")]
    NotEven,
    #[error("isomorphism testing is capped at {cap} elements, got {n}")]
    IsoCapExceeded { n: usize, cap: usize },
    #[error("exhaustive enumeration supports n <= {max}, got {n}; use sampled search instead")]
    ExhaustiveTooLarge { n: usize, max: usize },
    #[error(
        "binary tests disagree: matrix method says {matrix}, excluded-minor method says {minor}"
    )]
    MethodDisagreement { matrix: bool, minor: bool },
    #[error("{0}")]
    Parse(String),
}
