use alloc::string::String;

/// A value that is not even structurally a partition object.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("zero part at position {0}")]
    ZeroPart(usize),
    #[error("parts not weakly decreasing at position {0}")]
    NotDecreasing(usize),
    #[error("values not strictly decreasing at position {0}")]
    NotStrictlyDecreasing(usize),
    #[error("entries out of canonical order at position {0}")]
    NotCanonical(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid part `{0}`")]
    InvalidPart(String),
    #[error("expected `POS | NEG`")]
    MissingBar,
    #[error("expected `(ALPHA, BETA)`")]
    MalformedPair,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Unknown family, bijection or identity tag.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {kind} `{tag}`")]
pub struct UnknownTag {
    pub kind: &'static str,
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("weight {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    /// The input is not a member of the map's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The map produced something outside its codomain, or got stuck.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// More than one preimage was found for a single image.
    #[error("bijectivity violation: {0}")]
    BijectivityViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("degree {degree} is not below the truncation order {order}")]
    OutOfRange { degree: usize, order: usize },
    /// Division by a factor whose constant term in q is not 1.
    #[error("factor has no inverse as a power series in q")]
    NotInvertible,
    /// An infinite product whose factors never reach the truncation order.
    #[error("infinite product does not converge in q")]
    Divergent,
}
