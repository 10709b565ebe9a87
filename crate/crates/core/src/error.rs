use thiserror::Error;

use crate::catalog::Stratum;
use crate::weights::{Character, OneParamSubgroup};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A strict multiset difference tried to remove a character that is not there.
    #[error("containment violation{}: character {missing} is not available for removal", context_suffix(.component))]
    ContainmentViolation {
        missing: Character,
        component: Option<String>,
    },

    #[error("bad ideal generator {generator}: expected a monomial of degree {expected_degree}")]
    BadGenerator {
        generator: Character,
        expected_degree: i64,
    },

    #[error(
        "arity mismatch for stratum {stratum}: expected {expected:?} u/v entries, got {found:?}"
    )]
    ArityMismatch {
        stratum: Stratum,
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("catalog integrity failure in {row}: {detail}")]
    CatalogIntegrity { row: String, detail: String },

    #[error("dimension violation at {component}: tangent space has {found} weights, expected {expected}")]
    DimensionViolation {
        component: String,
        expected: usize,
        found: usize,
    },

    #[error("zero-weight mismatch at {component}: trivial character has multiplicity {found}, component dimension is {expected}")]
    Chi0Mismatch {
        component: String,
        expected: usize,
        found: usize,
    },

    #[error("range violation at {component}: weight {weight} has a coordinate outside [-6, 6]")]
    RangeViolation {
        component: String,
        weight: Character,
    },

    #[error("component {component} lies in stratum {stratum}, which has no normal space")]
    WrongStratum { component: String, stratum: Stratum },

    #[error("one-parameter subgroup {lambda} is not generic at {component}: nonzero weight {weight} pairs to zero")]
    NonGenericLambda {
        component: String,
        lambda: OneParamSubgroup,
        weight: Character,
    },

    #[error("unknown component id {0:?}")]
    UnknownComponent(String),

    #[error("unknown table {0}; tables are numbered 1 to 4")]
    UnknownTable(u8),

    #[error("parse error: {0}")]
    Parse(String),
}

fn context_suffix(component: &Option<String>) -> String {
    match component {
        Some(id) => format!(" at {id}"),
        None => String::new(),
    }
}
