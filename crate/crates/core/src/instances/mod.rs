//! Multiplicative lattices built from finite algebras: ideals of rings,
//! semirings and commutative semigroups, and normal subgroups of groups.
//!
//! Every substructure lattice is enumerated the same way: the principal
//! (or singly generated) members first, then closure under pairwise join.
//! Every member is the join of the principal members it contains, so the
//! closure is complete.

mod algebra;
mod catalogue;
mod commutative;
mod group;
mod ring;

pub use algebra::{AlgebraKind, AlgebraTable, CARRIER_CAP};
pub use catalogue::{
    alternating_group, boolean_semiring, cyclic_group, frame_from_distributive_lattice,
    idempotent_semigroup, symmetric_group, three_element_monoid, upper_triangular_f2, zn_ring,
    zn_semiring,
};
pub use commutative::{semigroup_ideal_lattice, semiring_ideal_lattice};
pub use group::{commutator_subgroup, group_normal_lattice, is_perfect};
pub use ring::{ring_ideal_lattice, ring_ideal_lattice_one_sided};

use crate::error::InstanceError;
use crate::lattice::MulLattice;
use crate::order::{Elem, LatticeOrder};
use crate::spectra::spec;

/// A subset of a carrier of at most [`CARRIER_CAP`] points.
pub(crate) type Bits = u128;

pub(crate) fn bit(a: usize) -> Bits {
    1 << a
}

pub(crate) fn members_of(mut s: Bits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let a = s.trailing_zeros() as usize;
            s &= s - 1;
            a
        })
    })
}

/// A lattice of substructures together with the carrier of each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub lattice: MulLattice,
    /// `members[x]` lists the points of the substructure `x`, sorted.
    pub members: Vec<Vec<usize>>,
}

impl Instance {
    /// The lattice element whose carrier is exactly `points`.
    pub fn index_of(&self, points: &[usize]) -> Option<Elem> {
        let mut want = points.to_vec();
        want.sort_unstable();
        want.dedup();
        self.members.iter().position(|m| *m == want)
    }

    /// Carriers of the prime elements.
    pub fn prime_members(&self) -> Vec<Vec<usize>> {
        spec(&self.lattice).points().iter().map(|&p| self.members[p].clone()).collect()
    }
}

/// Closes `seeds` (plus `bottom`) under `join`, sorted by size then contents.
pub(crate) fn close_under_join(
    bottom: Bits,
    seeds: impl IntoIterator<Item = Bits>,
    join: impl Fn(Bits, Bits) -> Bits,
) -> Vec<Bits> {
    let mut sets: Vec<Bits> = vec![bottom];
    for s in seeds {
        if !sets.contains(&s) {
            sets.push(s);
        }
    }
    let mut i = 0;
    while i < sets.len() {
        for j in 0..i {
            let u = join(sets[i], sets[j]);
            if !sets.contains(&u) {
                sets.push(u);
            }
        }
        i += 1;
    }
    sets.sort_by_key(|&s| (s.count_ones(), s));
    sets
}

/// Orders `sets` by inclusion and multiplies with `product`, which must
/// return a member of `sets`.
pub(crate) fn build_instance(
    sets: Vec<Bits>,
    mut product: impl FnMut(Bits, Bits) -> Bits,
) -> Result<Instance, InstanceError> {
    let k = sets.len();
    let order = LatticeOrder::from_fn(k, |i, j| sets[i] & !sets[j] == 0)?;
    let mut mult = Vec::with_capacity(k * k);
    for &x in &sets {
        for &y in &sets {
            let p = product(x, y);
            let idx = sets.iter().position(|&s| s == p).ok_or_else(|| {
                InstanceError::Postcondition(format!(
                    "product {:?} is not a substructure",
                    members_of(p).collect::<Vec<_>>()
                ))
            })?;
            mult.push(idx);
        }
    }
    let lattice = MulLattice::from_flat(order, mult)?;
    let members = sets.iter().map(|&s| members_of(s).collect()).collect();
    Ok(Instance { lattice, members })
}

/// Least superset of `seed` closed under `step`, which maps the current set
/// to points that must be added.
pub(crate) fn saturate(seed: Bits, step: impl Fn(Bits) -> Bits) -> Bits {
    let mut s = seed;
    loop {
        let next = s | step(s);
        if next == s {
            return s;
        }
        s = next;
    }
}

/// `{t[a][b] : a ∈ x, b ∈ y}`.
pub(crate) fn products(t: &[Vec<usize>], x: Bits, y: Bits) -> Bits {
    let mut out = 0;
    for a in members_of(x) {
        for b in members_of(y) {
            out |= bit(t[a][b]);
        }
    }
    out
}
