use thiserror::Error;

use crate::normality::NotNormal;
use crate::table::{AxiomReport, Elem};

#[derive(Debug, Clone, Error)]
pub enum GyroError {
    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("table fails the gyrogroup axioms ({} violation(s))", .0.violations.len())]
    Axioms(Box<AxiomReport>),

    #[error("element {elem} out of range for order {order}")]
    OutOfRange { elem: Elem, order: usize },

    #[error("{what} cap exceeded: limit {cap}, reached {reached}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        reached: usize,
    },

    #[error("subset {members:?} is not a subgyrogroup")]
    NotSubgyrogroup { members: Vec<Elem> },

    #[error("left cosets do not partition the carrier: {first:?} and {second:?} overlap")]
    NotPartition { first: Vec<Elem>, second: Vec<Elem> },

    #[error("not normal: {0}")]
    NotNormal(NotNormal),

    #[error("map is not a homomorphism: f({a} + {b}) != f({a}) + f({b})")]
    NotHom { a: Elem, b: Elem },

    #[error("codomain is not gyrocommutative")]
    NotGyrocommutative,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("time budget exhausted")]
    Timeout,
}

pub type Result<T, E = GyroError> = std::result::Result<T, E>;
