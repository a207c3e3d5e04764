//! Ultracontacts over finite Boolean algebras.
//!
//! Elements are atom masks, families are bitsets over the carrier, and an
//! ultracontact is stored through its atom-level faces, which determine it
//! completely in the finite case.

pub mod boolalg;
pub mod contact;
pub mod elemset;
pub mod error;
pub mod families;
pub mod io;
pub mod limits;
pub mod simplicial;
pub mod stacksys;
pub mod topology;
pub mod uca;

pub use boolalg::{make_algebra, Element, FiniteBooleanAlgebra};
pub use elemset::ElemSet;
pub use error::{Axiom, Error, Result, Violation, Witness, WitnessValue};
pub use families::{Classification, ClassRep, Family, Stack};
pub use limits::Limits;
pub use contact::{ContactRelation, Hypercontact, Relation};
pub use io::Doc;
pub use simplicial::SimplicialComplex;
pub use stacksys::StackSystem;
pub use topology::{FiniteTopSpace, RegularClosedAlgebra};
pub use uca::{ExplicitUC, FamilySystem, Ultracontact};
