use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: i64, degree: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid degree {0}")]
    InvalidDegree(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("boundary braids do not commute")]
    NotCommuting,

    #[error("unsupported target group: {0}")]
    UnsupportedTarget(String),

    #[error("search space of {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("closure of the braid has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("illegal movie step {step}: {reason}")]
    IllegalMove { step: usize, reason: String },

    #[error("movie generation failed: {0}")]
    MovieGeneration(String),

    #[error("coloring is not fixed by the boundary monodromies")]
    ColoringNotFixed,

    #[error("quandle axiom violated: {0}")]
    QuandleAxiom(String),
}
