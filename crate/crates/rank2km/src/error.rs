use thiserror::Error;

use crate::roots::RealRoot;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("H({a},{b}) is not an infinite type: need a, b >= 1 and ab >= 4")]
    InvalidCartan { a: i64, b: i64 },
    #[error("operation not defined for H({a},{b}): {reason}")]
    Unsupported { a: i64, b: i64, reason: &'static str },
    #[error("root {0} is negative; a positive root is required")]
    NegativeRoot(RealRoot),
    #[error("root string through itself is undefined ({0} and {1} are proportional)")]
    ProportionalRoots(RealRoot, RealRoot),
    #[error("sum {0} + {1} is not a real root")]
    SumNotReal(RealRoot, RealRoot),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
