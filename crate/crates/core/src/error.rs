use thiserror::Error;

use crate::graph::CategoryId;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree {0} is outside [0, 1]")]
    InvalidDegree(f64),

    #[error("fuzziness {0} is outside [0, 1]")]
    InvalidFuzziness(f64),

    #[error("cardinality {0} must be finite and non-negative")]
    InvalidCardinality(f64),

    #[error("signature declares no {0}")]
    EmptySignature(&'static str),

    #[error("invalid name {0:?}: names must be nonempty and must not contain '⊕'")]
    InvalidName(String),

    #[error("duplicate role {0:?}")]
    DuplicateRole(String),

    #[error("duplicate type {0:?}")]
    DuplicateType(String),

    #[error("unknown role {0:?}")]
    UnknownRole(String),

    #[error("unknown type {0:?}")]
    UnknownType(String),

    #[error("role {0:?} appears in more than one inverse pair or is both symmetric and paired")]
    AmbiguousInverse(String),

    #[error("assertion references undeclared element {0:?}")]
    UnknownElement(String),

    #[error("assertion {subject} {role} {object} has degree {degree} but its mirror has {mirror}")]
    MirrorConflict {
        subject: String,
        object: String,
        role: String,
        degree: f64,
        mirror: f64,
    },

    #[error("scene has no beliefs to restrict")]
    EmptyScene,

    #[error("scene total cardinality is zero")]
    ZeroTotal,

    #[error("category {0} already exists")]
    DuplicateCategory(CategoryId),

    #[error("category {0} does not exist")]
    UnknownCategory(CategoryId),

    #[error("the root category cannot be added, removed or rescored")]
    RootCategory,

    #[error("category {0} has no restriction with k > 0")]
    VacuousCategory(CategoryId),

    #[error("invalid score {0} (must be finite and non-negative)")]
    InvalidScore(f64),

    #[error("invalid parameter {name}: {value}")]
    InvalidParam { name: &'static str, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
