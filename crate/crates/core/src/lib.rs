//! Numerical sets, their Young diagrams and the complement operation.
//!
//! A numerical set is a cofinite subset of the naturals containing 0. Its
//! gaps trace a lattice path that bounds a Young diagram; rotating the rest
//! of the diagram's bounding rectangle by 180° gives another diagram, and
//! hence another numerical set, the complement `S̃`.
//!
//! ```
//! use numset::NumericalSet;
//!
//! let s: NumericalSet = "0,2,4,7,8,10,12->".parse().unwrap();
//! assert_eq!(s.diagram().rows(), &[6, 5, 3, 3, 2, 1]);
//! assert_eq!(s.complement().unwrap().to_string(), "0,2,3,6,8,10->");
//! assert_eq!(s.associated_semigroup().to_string(), "0,8,10,12->");
//! ```

mod bits;
pub mod checks;
mod complement;
pub mod enumerate;
mod error;
pub mod render;
mod semigroup;
mod set;
pub mod verify;
pub mod young;

pub use checks::{AtomProfile, AtomShape};
pub use complement::{ComplementReport, ComplementSequence};
pub use enumerate::{Budget, DensityTable, SweepOptions, SweepResult};
pub use error::{Error, Result};
pub use set::{NumericalSet, SetScalars};
pub use verify::{Statement, VerificationReport};
pub use young::{HookField, YoungDiagram};
