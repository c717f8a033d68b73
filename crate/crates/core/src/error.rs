use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {reason}")]
    NotAGroup {
        reason: String,
        /// First offending triple `(a, b, c)` when the failure is local.
        triple: Option<(usize, usize, usize)>,
    },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("bad permutation: {0}")]
    BadPermutation(String),

    #[error("{what} is limited to {cap}, needed {size}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        size: usize,
    },

    #[error("homomorphism search needs {candidates} candidates, cap is {cap}")]
    SearchCapExceeded { candidates: u128, cap: u128 },

    #[error("subset is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("maps do not share a domain and codomain")]
    MixedDomains,

    #[error("a family of maps must not be empty")]
    EmptyFamily,

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("maximum agreement is undefined for a trivial codomain")]
    TrivialCodomain,

    #[error("unknown group spec {0:?}")]
    UnknownSpec(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn not_a_group(reason: impl Into<String>) -> Self {
        Error::NotAGroup {
            reason: reason.into(),
            triple: None,
        }
    }
}
