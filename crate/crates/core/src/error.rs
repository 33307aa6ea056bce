use thiserror::Error;

use crate::order::{Elem, OrderAxiom};

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("relation is not a partial order: {axiom} fails at {witness:?}")]
    NotAPartialOrder { axiom: OrderAxiom, witness: Vec<Elem> },
    #[error("not a lattice: elements {x} and {y} have no unique {missing}")]
    NotALattice { x: Elem, y: Elem, missing: &'static str },
    #[error("multiplication violates xy <= x meet y at ({x}, {y})")]
    AxiomViolation { x: Elem, y: Elem },
    #[error("requested size {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("radical elements do not form a frame: distributivity fails at {witness:?}")]
    NotAFrame { witness: Vec<Elem> },
    #[error("complement of V does not identify radicals with open sets at {witness:?}")]
    NotIsomorphic { witness: Vec<Elem> },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error)]
pub enum SolvabilityError {
    #[error("derived series of {base} does not stabilise within {horizon} steps")]
    NonStabilizing { base: Elem, horizon: usize },
}

#[derive(Debug, Error)]
pub enum MorphismError {
    #[error("map has length {got}, source lattice has {expected} elements")]
    WrongArity { expected: usize, got: usize },
    #[error("map sends {value} outside the target lattice")]
    OutOfRange { value: Elem },
    #[error("map does not preserve joins at {witness:?}")]
    NotJoinPreserving { witness: Vec<Elem> },
    #[error("adjunction law fails at (x = {x}, y = {y})")]
    NotAdjoint { x: Elem, y: Elem },
    #[error("adjunction is not compatible")]
    NotCompatible,
    #[error("lattices do not compose: target of the first differs from source of the second")]
    NotComposable,
    #[error("right adjoint sends prime {prime} to a non-prime")]
    PrimeNotPreserved { prime: Elem },
    #[error("preimage of V({x}) differs from V(f({x}))")]
    PreimageMismatch { x: Elem },
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("algebra axiom fails: {0}")]
    AxiomFailure(String),
    #[error("operation is not commutative at ({0}, {1})")]
    NotCommutative(usize, usize),
    #[error("expected a {expected} table, got a {got} table")]
    WrongKind { expected: &'static str, got: &'static str },
    #[error("carrier of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("lattice is not distributive at {0:?}")]
    NotDistributive([Elem; 3]),
    #[error("built instance fails a structural check: {0}")]
    Postcondition(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BatteryError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown hypothesis mode {0:?}; expected strict or forced")]
    UnknownMode(String),
}
