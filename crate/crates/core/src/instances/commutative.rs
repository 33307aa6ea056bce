//! Ideals of commutative semirings and commutative semigroups.
//!
//! An ideal is a subalgebra of the additive structure that absorbs
//! multiplication by arbitrary elements. The ideal generated by `S` is the
//! subalgebra generated by `S ∪ A·S`; without a unit `S` need not lie in
//! `A·S`, so `S` is kept explicitly. Products are `xy = ⟨x·y⟩`.

use super::{bit, build_instance, close_under_join, members_of, products, saturate, Bits, Instance};
use crate::error::InstanceError;
use crate::instances::algebra::{AlgebraKind, AlgebraTable};

fn all_of(n: usize) -> Bits {
    (0..n).fold(0, |acc, a| acc | bit(a))
}

/// Distributivity and monotonicity hold for every ideal lattice of this
/// kind; a failure means the builder is wrong.
fn check_postconditions(inst: Instance) -> Result<Instance, InstanceError> {
    let p = inst.lattice.condition_profile();
    if !p.distributive {
        return Err(InstanceError::Postcondition("ideal lattice is not distributive".into()));
    }
    if !p.monotone {
        return Err(InstanceError::Postcondition("ideal lattice is not monotone".into()));
    }
    Ok(inst)
}

/// Ideals of a commutative semiring whose zero is absorbing, with bottom `{0}`.
pub fn semiring_ideal_lattice(s: &AlgebraTable) -> Result<Instance, InstanceError> {
    if s.kind != AlgebraKind::Semiring {
        return Err(InstanceError::WrongKind { expected: "semiring", got: s.kind.name() });
    }
    let zero = s.validate()?.expect("semirings have a zero");
    let (add, mul) = (s.add_table(), &s.mul);
    let all = all_of(s.n);
    // Additive submonoid generated by a set.
    let submonoid = |x: Bits| saturate(x | bit(zero), |cur| products(add, cur, cur));
    let ideal = |x: Bits| submonoid(x | products(mul, all, x));
    let principal: Vec<Bits> = members_of(all).map(|a| ideal(bit(a))).collect();
    let sets = close_under_join(bit(zero), principal, |x, y| ideal(x | y));
    check_postconditions(build_instance(sets, |x, y| submonoid(products(mul, x, y)))?)
}

/// Ideals of a commutative semigroup. The empty set is an ideal and is the
/// bottom element.
pub fn semigroup_ideal_lattice(s: &AlgebraTable) -> Result<Instance, InstanceError> {
    if s.kind != AlgebraKind::Semigroup {
        return Err(InstanceError::WrongKind { expected: "semigroup", got: s.kind.name() });
    }
    s.validate()?;
    let mul = &s.mul;
    let all = all_of(s.n);
    let ideal = |x: Bits| x | products(mul, all, x);
    let principal: Vec<Bits> = members_of(all).map(|a| ideal(bit(a))).collect();
    let sets = close_under_join(0, principal, |x, y| x | y);
    check_postconditions(build_instance(sets, |x, y| products(mul, x, y))?)
}
