use std::fmt;

use serde::Serialize;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("trivial algebra: at least one atom is required")]
    TrivialAlgebra,
    #[error("atom names must be nonempty")]
    EmptyAtomName,
    #[error("duplicate atom name {0:?}")]
    DuplicateAtom(String),
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("cannot parse element {0:?}")]
    BadElement(String),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("{what} is limited to {max} atoms, got {n_atoms}")]
    OverCap {
        what: &'static str,
        n_atoms: usize,
        max: usize,
    },
    #[error("{0}: empty input")]
    EmptyInput(&'static str),
    #[error("{0} is not a grill")]
    NotAGrill(String),
    #[error("{0} is not an atom (extension by atoms only accepts atoms, non-atoms break (K4))")]
    NotAnAtom(String),
    #[error("inputs are not a chain: {0}")]
    NotAChain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("invalid document: {0}")]
    InvalidDocument(String),
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Error::Violation(v) => Some(v),
            _ => None,
        }
    }
}

/// Named axioms a checker can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    K0,
    K1,
    K2,
    K3,
    K4,
    SS0,
    SS1,
    SS2,
    SS3,
    SS4,
    C0,
    C1,
    C2,
    C3,
    C4,
    H1,
    H2,
    H3,
    H4,
    H5,
    SC1,
    SC2,
    /// Opens must contain the empty set and the whole space, and be closed
    /// under binary union and intersection.
    Topology,
    /// The regular closed sets failed to form a Boolean algebra.
    Boolean,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rendered witness value; atom names are resolved at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessValue {
    Element(Vec<String>),
    Family(Vec<Vec<String>>),
    Face(Vec<String>),
    Points(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: String,
    pub value: WitnessValue,
}

/// A failed axiom together with the concrete objects that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub message: String,
    pub witnesses: Vec<Witness>,
}

impl Violation {
    pub fn new(axiom: Axiom, message: impl Into<String>) -> Self {
        Self {
            axiom,
            message: message.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn with(mut self, role: &str, value: WitnessValue) -> Self {
        self.witnesses.push(Witness {
            role: role.to_string(),
            value,
        });
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) violated: {}", self.axiom, self.message)
    }
}

impl std::error::Error for Violation {}
