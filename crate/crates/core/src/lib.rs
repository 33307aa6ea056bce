//! Exact computations on finite complete multiplicative lattices: prime
//! spectra with the Zariski topology, radical, semiprime and solvability
//! closures, compatible adjunctions, and lattices of ideals and normal
//! subgroups built from finite algebras.
//!
//! Every operation is a pure function of immutable inputs, so lattices and
//! reports can be shared freely across threads.

pub mod battery;
pub mod enumerate;
pub mod error;
pub mod instances;
pub mod json;
pub mod lattice;
pub mod morphisms;
pub mod order;
pub mod report;
pub mod solvability;
pub mod spectra;
pub mod topology;

pub use error::{BatteryError, InstanceError, LatticeError, MorphismError, SolvabilityError, SpectraError};
pub use lattice::{Condition, ConditionProfile, MulLattice};
pub use order::{Elem, LatticeOrder};
pub use report::TheoremReport;
