//! Complete multiplicative lattices: a finite lattice order together with a
//! binary multiplication bounded above by the meet.

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::order::{Elem, LatticeOrder};

/// A finite lattice with a multiplication satisfying `xy ≤ x ∧ y`.
///
/// The multiplication need not be associative, commutative or unital.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulLattice {
    order: LatticeOrder,
    mult: Vec<Elem>,
}

impl MulLattice {
    /// Checks the table shape and the axiom `mult[x][y] ≤ meet[x][y]`.
    pub fn new(order: LatticeOrder, mult: &[Vec<Elem>]) -> Result<Self, LatticeError> {
        let n = order.len();
        if mult.len() != n || mult.iter().any(|r| r.len() != n) {
            return Err(LatticeError::Shape(format!("multiplication table must be {n}x{n}")));
        }
        Self::from_flat(order, mult.iter().flatten().copied().collect())
    }

    /// Same as [`MulLattice::new`] with a row-major table.
    pub fn from_flat(order: LatticeOrder, mult: Vec<Elem>) -> Result<Self, LatticeError> {
        let n = order.len();
        if mult.len() != n * n {
            return Err(LatticeError::Shape(format!("multiplication table must be {n}x{n}")));
        }
        if let Some(&v) = mult.iter().find(|&&v| v >= n) {
            return Err(LatticeError::Shape(format!("product {v} is not an element")));
        }
        for x in 0..n {
            for y in 0..n {
                if !order.leq(mult[x * n + y], order.meet(x, y)) {
                    return Err(LatticeError::AxiomViolation { x, y });
                }
            }
        }
        Ok(MulLattice { order, mult })
    }

    /// Uses the meet as multiplication.
    pub fn with_meet(order: LatticeOrder) -> Self {
        let n = order.len();
        let mult = (0..n * n).map(|i| order.meet(i / n, i % n)).collect();
        MulLattice { order, mult }
    }

    /// Multiplication identically equal to bottom.
    pub fn with_zero_product(order: LatticeOrder) -> Self {
        let mult = vec![order.bottom(); order.len() * order.len()];
        MulLattice { order, mult }
    }

    pub fn order(&self) -> &LatticeOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        self.order.elements()
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mult[x * self.order.len() + y]
    }

    #[inline]
    pub fn square(&self, x: Elem) -> Elem {
        self.mul(x, x)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.order.meet(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.order.join(x, y)
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        self.order.join_all(xs)
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        self.order.meet_all(xs)
    }

    pub fn top(&self) -> Elem {
        self.order.top()
    }

    pub fn bottom(&self) -> Elem {
        self.order.bottom()
    }

    pub fn mult_table(&self) -> Vec<Vec<Elem>> {
        self.mult.chunks(self.len()).map(<[Elem]>::to_vec).collect()
    }

    /// The same order with multiplication `x * y = xy ∨ yx`.
    pub fn commutativized(&self) -> MulLattice {
        let n = self.len();
        let mult = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.join(self.mul(x, y), self.mul(y, x))
            })
            .collect();
        MulLattice { order: self.order.clone(), mult }
    }

    pub fn condition_profile(&self) -> ConditionProfile {
        ConditionProfile::of(self)
    }
}

/// The side conditions that hypotheses of the structure theorems refer to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConditionProfile {
    pub commutative: bool,
    /// `x ≤ y` and `x' ≤ y'` imply `xx' ≤ yy'`.
    pub monotone: bool,
    /// `x ≤ y` implies `x² ≤ y²`.
    pub weakly_monotone: bool,
    /// Multiplication distributes over binary joins on both sides.
    pub distributive: bool,
    /// `1² = 1`.
    pub unit_idempotent: bool,
    /// `1x = x = x1`.
    pub unit_neutral: bool,
    /// Multiplication is the meet.
    pub is_frame: bool,
    /// Products of compact elements are compact.
    pub kaplansky: bool,
    /// Squares of compact elements are compact.
    pub weak_kaplansky: bool,
    pub compact_lattice: bool,
    pub algebraic_lattice: bool,
}

/// One flag of a [`ConditionProfile`], used for filters and theorem hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Commutative,
    Monotone,
    WeaklyMonotone,
    Distributive,
    UnitIdempotent,
    UnitNeutral,
    Frame,
    Kaplansky,
    WeakKaplansky,
    CompactLattice,
    AlgebraicLattice,
}

impl Condition {
    pub const ALL: [Condition; 11] = [
        Condition::Commutative,
        Condition::Monotone,
        Condition::WeaklyMonotone,
        Condition::Distributive,
        Condition::UnitIdempotent,
        Condition::UnitNeutral,
        Condition::Frame,
        Condition::Kaplansky,
        Condition::WeakKaplansky,
        Condition::CompactLattice,
        Condition::AlgebraicLattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Commutative => "commutative",
            Condition::Monotone => "monotone",
            Condition::WeaklyMonotone => "weakly_monotone",
            Condition::Distributive => "distributive",
            Condition::UnitIdempotent => "unit_idempotent",
            Condition::UnitNeutral => "unit_neutral",
            Condition::Frame => "is_frame",
            Condition::Kaplansky => "kaplansky",
            Condition::WeakKaplansky => "weak_kaplansky",
            Condition::CompactLattice => "compact_lattice",
            Condition::AlgebraicLattice => "algebraic_lattice",
        }
    }

    pub fn from_name(name: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl ConditionProfile {
    /// Computes every flag by exhaustive quantification over elements.
    pub fn of(l: &MulLattice) -> Self {
        let order = l.order();
        let elems = || l.elements();
        let top = l.top();
        let compact = order.compact_elements();
        let is_compact = |x: Elem| compact.contains(&x);

        let commutative = elems().all(|x| elems().all(|y| l.mul(x, y) == l.mul(y, x)));
        let monotone = elems().all(|x| {
            elems().filter(|&y| l.leq(x, y)).all(|y| {
                elems().all(|x2| {
                    elems().filter(|&y2| l.leq(x2, y2)).all(|y2| l.leq(l.mul(x, x2), l.mul(y, y2)))
                })
            })
        });
        let weakly_monotone = elems()
            .all(|x| elems().filter(|&y| l.leq(x, y)).all(|y| l.leq(l.square(x), l.square(y))));
        let distributive = elems().all(|x| {
            elems().all(|y| {
                elems().all(|z| {
                    l.mul(x, l.join(y, z)) == l.join(l.mul(x, y), l.mul(x, z))
                        && l.mul(l.join(x, y), z) == l.join(l.mul(x, z), l.mul(y, z))
                })
            })
        });
        let unit_idempotent = l.square(top) == top;
        let unit_neutral = elems().all(|x| l.mul(top, x) == x && l.mul(x, top) == x);
        let is_frame = elems().all(|x| elems().all(|y| l.mul(x, y) == l.meet(x, y)));
        let kaplansky = compact.iter().all(|&x| compact.iter().all(|&y| is_compact(l.mul(x, y))));
        let weak_kaplansky = compact.iter().all(|&x| is_compact(l.square(x)));
        let compact_lattice = is_compact(top);
        let algebraic_lattice = elems()
            .all(|x| l.join_all(compact.iter().copied().filter(|&c| l.leq(c, x))) == x);

        ConditionProfile {
            commutative,
            monotone,
            weakly_monotone,
            distributive,
            unit_idempotent,
            unit_neutral,
            is_frame,
            kaplansky,
            weak_kaplansky,
            compact_lattice,
            algebraic_lattice,
        }
    }

    pub fn get(&self, c: Condition) -> bool {
        match c {
            Condition::Commutative => self.commutative,
            Condition::Monotone => self.monotone,
            Condition::WeaklyMonotone => self.weakly_monotone,
            Condition::Distributive => self.distributive,
            Condition::UnitIdempotent => self.unit_idempotent,
            Condition::UnitNeutral => self.unit_neutral,
            Condition::Frame => self.is_frame,
            Condition::Kaplansky => self.kaplansky,
            Condition::WeakKaplansky => self.weak_kaplansky,
            Condition::CompactLattice => self.compact_lattice,
            Condition::AlgebraicLattice => self.algebraic_lattice,
        }
    }

    /// Whether every listed condition holds.
    pub fn satisfies(&self, required: &[Condition]) -> bool {
        required.iter().all(|&c| self.get(c))
    }

    /// The first listed condition that fails, if any.
    pub fn first_missing(&self, required: &[Condition]) -> Option<Condition> {
        required.iter().copied().find(|&c| !self.get(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::three_element_monoid;

    fn two_chain(one_one: Elem) -> Result<MulLattice, LatticeError> {
        MulLattice::new(LatticeOrder::chain(2)?, &[vec![0, 0], vec![0, one_one]])
    }

    #[test]
    fn axiom_checked() {
        assert!(two_chain(1).is_ok());
        let bad = MulLattice::new(LatticeOrder::chain(2).unwrap(), &[vec![0, 0], vec![1, 1]]);
        assert!(matches!(bad, Err(LatticeError::AxiomViolation { x: 1, y: 0 })));
        let shape = MulLattice::new(LatticeOrder::chain(2).unwrap(), &[vec![0, 0]]);
        assert!(matches!(shape, Err(LatticeError::Shape(_))));
    }

    #[test]
    fn profile_of_three_element_monoid() {
        let p = three_element_monoid().condition_profile();
        assert!(p.commutative && p.monotone && p.weakly_monotone && p.distributive);
        assert!(p.unit_idempotent && p.unit_neutral);
        assert!(!p.is_frame);
        assert!(p.compact_lattice && p.algebraic_lattice && p.kaplansky && p.weak_kaplansky);
    }

    #[test]
    fn two_chain_with_unit_square_is_a_frame() {
        let b2 = two_chain(1).unwrap();
        assert_eq!(b2, MulLattice::with_meet(LatticeOrder::chain(2).unwrap()));
        let p = b2.condition_profile();
        assert!(p.is_frame && p.unit_neutral && p.unit_idempotent);
    }

    #[test]
    fn zero_product_breaks_unit_idempotence() {
        for k in 2..=5 {
            let l = MulLattice::with_zero_product(LatticeOrder::chain(k).unwrap());
            let p = l.condition_profile();
            assert!(!p.unit_idempotent);
            assert!(p.monotone && p.distributive && p.commutative);
        }
        let trivial = MulLattice::with_zero_product(LatticeOrder::chain(1).unwrap());
        assert!(trivial.condition_profile().unit_idempotent);
    }

    #[test]
    fn commutativized_joins_both_orders() {
        // 2x2 boolean lattice 0 < a, b < 1 with a one-sided product.
        let order = LatticeOrder::from_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap();
        let mut mult = vec![vec![0; 4]; 4];
        mult[3][3] = 3;
        mult[3][1] = 1;
        mult[1][3] = 0;
        let l = MulLattice::new(order, &mult).unwrap();
        assert!(!l.condition_profile().commutative);
        let com = l.commutativized();
        assert_eq!(com.mul(1, 3), 1);
        assert_eq!(com.mul(3, 1), 1);
        assert!(com.condition_profile().commutative);
    }

    #[test]
    fn condition_names_round_trip() {
        for c in Condition::ALL {
            assert_eq!(Condition::from_name(c.name()), Some(c));
        }
    }
}
