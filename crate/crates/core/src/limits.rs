//! Size caps for the exhaustive machinery.
//!
//! Element masks are `u32`, so algebras stop at 20 atoms. Anything that
//! materializes sets of families needs the carrier to fit in 16 elements,
//! and anything that lists stacks needs the stack lattice to be enumerable
//! (7581 stacks at 5 atoms, almost eight million at 6).

use crate::error::{Error, Result};

pub const MAX_ATOMS: usize = 20;

/// Explicit family systems are bitsets over all `2^(2^n)` families.
pub const EXPLICIT_MAX_ATOMS: usize = 4;

/// Witness stacks of an ultracontact are listed explicitly.
pub const WITNESS_MAX_ATOMS: usize = 5;

pub const STACK_ENUM_DEFAULT: usize = 4;
pub const STACK_ENUM_CEILING: usize = 5;

pub const UC_ENUM_CEILING: usize = 5;

pub const GRILL_LIST_MAX_ATOMS: usize = 4;

/// The formula-based meet oracle walks the intersection closure of the
/// excluded stacks.
pub const ORACLE_MAX_ATOMS: usize = 4;

/// Contact relations are stored as dense matrices.
pub const CONTACT_MAX_ATOMS: usize = 6;

pub const TOPOLOGY_ENUM_MAX_POINTS: usize = 4;

pub const SPACE_MAX_POINTS: usize = 6;

pub const ENV_MAX_ATOMS: &str = "UCLAB_MAX_ATOMS";

pub(crate) fn ensure(what: &'static str, n_atoms: usize, max: usize) -> Result<()> {
    if n_atoms > max {
        Err(Error::OverCap { what, n_atoms, max })
    } else {
        Ok(())
    }
}

/// Enumeration caps, optionally overridden through `UCLAB_MAX_ATOMS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub stacks: usize,
    pub grills: usize,
    pub ucs: usize,
    pub complexes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            stacks: STACK_ENUM_DEFAULT,
            grills: GRILL_LIST_MAX_ATOMS,
            ucs: UC_ENUM_CEILING,
            complexes: UC_ENUM_CEILING,
        }
    }
}

impl Limits {
    /// Every cap set to `max_atoms`, clamped to the hard ceilings.
    pub fn uniform(max_atoms: usize) -> Self {
        Self {
            stacks: max_atoms.min(STACK_ENUM_CEILING),
            grills: max_atoms.min(STACK_ENUM_CEILING),
            ucs: max_atoms.min(UC_ENUM_CEILING),
            complexes: max_atoms.min(UC_ENUM_CEILING),
        }
    }

    pub fn from_env() -> Result<Self> {
        match std::env::var(ENV_MAX_ATOMS) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(Self::uniform)
                .map_err(|_| Error::Precondition(format!("{ENV_MAX_ATOMS}={raw:?} is not a count"))),
            Err(_) => Ok(Self::default()),
        }
    }
}
