//! Two-sided ideals of a finite, not necessarily unital or commutative ring.

use super::{bit, build_instance, close_under_join, members_of, products, saturate, Bits, Instance};
use crate::error::InstanceError;
use crate::instances::algebra::{AlgebraKind, AlgebraTable};

struct Ring<'a> {
    add: &'a [Vec<usize>],
    mul: &'a [Vec<usize>],
    zero: usize,
    all: Bits,
}

impl<'a> Ring<'a> {
    fn new(r: &'a AlgebraTable) -> Result<Self, InstanceError> {
        if r.kind != AlgebraKind::Ring {
            return Err(InstanceError::WrongKind { expected: "ring", got: r.kind.name() });
        }
        let zero = r.validate()?.expect("rings have a zero");
        let all = (0..r.n).fold(0, |acc, a| acc | bit(a));
        Ok(Ring { add: r.add_table(), mul: &r.mul, zero, all })
    }

    /// Smallest ideal containing `s`. In a finite ring, closure under
    /// addition already gives an additive subgroup.
    fn ideal(&self, s: Bits) -> Bits {
        saturate(s | bit(self.zero), |cur| {
            products(self.add, cur, cur)
                | products(self.mul, self.all, cur)
                | products(self.mul, cur, self.all)
        })
    }

    fn ideals(&self) -> Vec<Bits> {
        let principal: Vec<Bits> = members_of(self.all).map(|a| self.ideal(bit(a))).collect();
        close_under_join(bit(self.zero), principal, |x, y| self.ideal(x | y))
    }
}

/// Ideals ordered by inclusion, multiplied by `IJ + JI`.
///
/// For commutative rings this is the ordinary ideal product; that equality is
/// checked as a postcondition.
pub fn ring_ideal_lattice(r: &AlgebraTable) -> Result<Instance, InstanceError> {
    let ring = Ring::new(r)?;
    let inst = build_instance(ring.ideals(), |x, y| {
        ring.ideal(products(ring.mul, x, y) | products(ring.mul, y, x))
    })?;
    if r.is_commutative() {
        let plain = ring_ideal_lattice_one_sided(r)?;
        if plain.lattice != inst.lattice {
            return Err(InstanceError::Postcondition(
                "symmetric product differs from the ideal product of a commutative ring".into(),
            ));
        }
    }
    Ok(inst)
}

/// Ideals ordered by inclusion, multiplied by the one-sided product `IJ`.
pub fn ring_ideal_lattice_one_sided(r: &AlgebraTable) -> Result<Instance, InstanceError> {
    let ring = Ring::new(r)?;
    build_instance(ring.ideals(), |x, y| ring.ideal(products(ring.mul, x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{upper_triangular_f2, zn_ring};
    use crate::spectra::primes;

    #[test]
    fn z4_ideals_form_a_chain() {
        let inst = ring_ideal_lattice(&zn_ring(4)).unwrap();
        assert_eq!(inst.members, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        let two = inst.index_of(&[0, 2]).unwrap();
        assert_eq!(inst.lattice.square(two), inst.index_of(&[0]).unwrap());
        assert_eq!(inst.prime_members(), vec![vec![0, 2]]);
    }

    #[test]
    fn field_gives_two_chain() {
        let inst = ring_ideal_lattice(&zn_ring(2)).unwrap();
        assert_eq!(inst.lattice.len(), 2);
        assert_eq!(inst.lattice.square(1), 1);
        assert_eq!(inst.prime_members(), vec![vec![0]]);
    }

    #[test]
    fn upper_triangular_ideals() {
        let r = upper_triangular_f2();
        let sym = ring_ideal_lattice(&r).unwrap();
        let one = ring_ideal_lattice_one_sided(&r).unwrap();
        assert_eq!(sym.members, one.members);
        assert!(!one.lattice.condition_profile().commutative);
        assert!(sym.lattice.condition_profile().commutative);
        assert_eq!(primes(&sym.lattice), primes(&one.lattice));
    }

    #[test]
    fn wrong_kind_rejected() {
        let g = crate::instances::cyclic_group(3);
        assert!(matches!(ring_ideal_lattice(&g), Err(InstanceError::WrongKind { .. })));
    }
}
