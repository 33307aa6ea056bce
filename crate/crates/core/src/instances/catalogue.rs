//! Ready-made algebras and small lattices used by the examples and tests.

use crate::error::InstanceError;
use crate::instances::algebra::AlgebraTable;
use crate::lattice::MulLattice;
use crate::order::LatticeOrder;

fn table(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect()
}

/// `ℤ/nℤ` as a ring.
pub fn zn_ring(n: usize) -> AlgebraTable {
    let mut t = AlgebraTable::ring(table(n, |a, b| (a + b) % n), table(n, |a, b| (a * b) % n));
    t.zero = Some(0);
    t.one = Some(1 % n);
    t
}

/// `ℤ/nℤ` viewed as a commutative semiring.
pub fn zn_semiring(n: usize) -> AlgebraTable {
    let r = zn_ring(n);
    let mut t = AlgebraTable::semiring(r.add.expect("rings have addition"), r.mul);
    t.zero = Some(0);
    t
}

/// `{0, 1}` with `1 + 1 = 1`.
pub fn boolean_semiring() -> AlgebraTable {
    AlgebraTable::semiring(table(2, |a, b| a | b), table(2, |a, b| a & b))
}

/// The one-element semigroup `{a}`, `aa = a`.
pub fn idempotent_semigroup() -> AlgebraTable {
    AlgebraTable::semigroup(vec![vec![0]])
}

/// Upper triangular 2×2 matrices over the two-element field.
///
/// The matrix `[[a, b], [0, c]]` is encoded as `a + 2b + 4c`.
pub fn upper_triangular_f2() -> AlgebraTable {
    let decode = |m: usize| (m & 1, (m >> 1) & 1, (m >> 2) & 1);
    let encode = |a: usize, b: usize, c: usize| (a & 1) | ((b & 1) << 1) | ((c & 1) << 2);
    let add = table(8, |x, y| x ^ y);
    let mul = table(8, |x, y| {
        let ((a, b, c), (d, e, f)) = (decode(x), decode(y));
        encode(a * d, a * e + b * f, c * f)
    });
    let mut t = AlgebraTable::ring(add, mul);
    t.zero = Some(0);
    t.one = Some(encode(1, 0, 1));
    t
}

/// The cyclic group of order `n`.
pub fn cyclic_group(n: usize) -> AlgebraTable {
    let mut t = AlgebraTable::group(table(n, |a, b| (a + b) % n));
    t.one = Some(0);
    t
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    // Lexicographic order, so the identity comes first.
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).expect("a larger entry exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)));
    inversions.filter(|&(i, j)| p[i] > p[j]).count() % 2 == 0
}

fn permutation_group(perms: Vec<Vec<usize>>) -> AlgebraTable {
    let n = perms.len();
    let index = |q: &Vec<usize>| perms.iter().position(|p| p == q).expect("closed");
    // (στ)(i) = σ(τ(i)).
    let mut t = AlgebraTable::group(table(n, |a, b| {
        index(&perms[b].iter().map(|&i| perms[a][i]).collect())
    }));
    t.one = Some(0);
    t
}

/// The symmetric group on `k` letters; element `0` is the identity.
pub fn symmetric_group(k: usize) -> AlgebraTable {
    permutation_group(permutations(k))
}

/// The alternating group on `k` letters; element `0` is the identity.
pub fn alternating_group(k: usize) -> AlgebraTable {
    permutation_group(permutations(k).into_iter().filter(|p| is_even(p)).collect())
}

/// The monoid `{1, x, x²}` with `x³ = x²`, ordered `x² < x < 1` and labelled
/// `0 = x²`, `1 = x`, `2 = 1`.
pub fn three_element_monoid() -> MulLattice {
    let order = LatticeOrder::chain(3).expect("chains are lattices");
    // Exponents add and saturate at 2; element i is x^(2 - i).
    let mult = table(3, |a, b| 2 - ((2 - a) + (2 - b)).min(2));
    MulLattice::new(order, &mult).expect("monoid products lie below meets")
}

/// A distributive lattice with the meet as multiplication.
pub fn frame_from_distributive_lattice(order: LatticeOrder) -> Result<MulLattice, InstanceError> {
    match order.distributivity_witness() {
        Some(w) => Err(InstanceError::NotDistributive(w)),
        None => Ok(MulLattice::with_meet(order)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::primes;

    #[test]
    fn group_orders() {
        assert_eq!(symmetric_group(3).n, 6);
        assert_eq!(symmetric_group(4).n, 24);
        assert_eq!(alternating_group(4).n, 12);
        for g in [symmetric_group(3), alternating_group(4), cyclic_group(5)] {
            assert_eq!(g.validate().unwrap(), Some(0));
        }
    }

    #[test]
    fn matrix_ring_is_a_noncommutative_unital_ring() {
        let r = upper_triangular_f2();
        assert_eq!(r.validate().unwrap(), Some(0));
        assert!(!r.is_commutative());
    }

    #[test]
    fn monoid_table() {
        let l = three_element_monoid();
        assert_eq!(l.mult_table(), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn frames() {
        let b2 = frame_from_distributive_lattice(LatticeOrder::chain(2).unwrap()).unwrap();
        assert!(b2.condition_profile().is_frame);
        let m3 = LatticeOrder::from_fn(5, |x, y| x == y || x == 0 || y == 4).unwrap();
        assert!(matches!(
            frame_from_distributive_lattice(m3),
            Err(InstanceError::NotDistributive(_))
        ));
    }

    #[test]
    fn free_distributive_lattice_on_two_generators() {
        // 0 < a∧b < a, b < a∨b < 1, labelled 0..=5.
        let up: [&[usize]; 6] = [&[0, 1, 2, 3, 4, 5], &[1, 2, 3, 4, 5], &[2, 4, 5], &[3, 4, 5], &[4, 5], &[5]];
        let order = LatticeOrder::from_fn(6, |x, y| up[x].contains(&y)).unwrap();
        let l = frame_from_distributive_lattice(order.clone()).unwrap();
        // Oracle: in a frame the primes are the meet-irreducible elements
        // other than the top.
        let meet_irreducible: Vec<usize> = order
            .elements()
            .filter(|&m| m != order.top())
            .filter(|&m| {
                order.elements().all(|a| {
                    order.elements().all(|b| order.meet(a, b) != m || a == m || b == m)
                })
            })
            .collect();
        assert_eq!(primes(&l), meet_irreducible);
        assert_eq!(meet_irreducible, vec![0, 2, 3, 4]);
    }
}
