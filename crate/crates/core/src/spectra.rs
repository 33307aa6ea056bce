//! Prime elements, the Zariski spectrum, radicals and semiprime closure.
//!
//! The radical of `x` is the meet of all primes above `x`. When there are no
//! such primes the meet is empty and the radical is the top element, so the
//! top counts as a radical element. Without that convention the radical
//! would not be a closure operator and the radical elements would have no top.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::SpectraError;
use crate::lattice::MulLattice;
use crate::order::{escape_dot, Elem, LatticeOrder};
use crate::report::TheoremReport;
use crate::topology::{FiniteSpace, PointSet, TopologyReport};

/// Lattices with at most this many elements have the join identity for `V`
/// checked over every subset; larger ones over all pairs and the empty family.
pub const SUBSET_CHECK_LIMIT: usize = 16;

/// `p ≠ 1` and `xy ≤ p ⇒ x ≤ p or y ≤ p` for all `x`, `y`.
pub fn is_prime(l: &MulLattice, p: Elem) -> bool {
    p != l.top()
        && l.elements().all(|x| {
            l.leq(x, p) || l.elements().all(|y| l.leq(y, p) || !l.leq(l.mul(x, y), p))
        })
}

/// The primality implication restricted to compact `a`, `b`.
pub fn is_locally_prime(l: &MulLattice, p: Elem) -> bool {
    let compact = l.order().compact_elements();
    p != l.top()
        && compact.iter().all(|&a| {
            l.leq(a, p) || compact.iter().all(|&b| l.leq(b, p) || !l.leq(l.mul(a, b), p))
        })
}

/// All prime elements, in increasing index order.
pub fn primes(l: &MulLattice) -> Vec<Elem> {
    l.elements().filter(|&p| is_prime(l, p)).collect()
}

/// The prime spectrum with its Zariski closed sets `V(x) = {p : x ≤ p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecSpace {
    points: Vec<Elem>,
    closed_family: BTreeSet<PointSet>,
    v_map: Vec<PointSet>,
}

impl SpecSpace {
    /// Prime elements of the lattice, sorted.
    pub fn points(&self) -> &[Elem] {
        &self.points
    }

    pub fn closed_family(&self) -> &BTreeSet<PointSet> {
        &self.closed_family
    }

    /// `V(x)`.
    pub fn v(&self, x: Elem) -> &PointSet {
        &self.v_map[x]
    }

    pub fn space(&self) -> FiniteSpace {
        FiniteSpace::new(self.points.iter().copied(), self.closed_family.iter().cloned())
            .expect("Zariski closed sets are closed under unions and intersections")
    }

    pub fn topology_report(&self) -> TopologyReport {
        self.space().report()
    }

    /// Graphviz rendering of the specialisation order: an edge `p -> q`
    /// for each covering pair `p < q` among primes.
    pub fn to_dot(&self, l: &MulLattice) -> String {
        let mut out = String::from("digraph spec {\n  rankdir=BT;\n");
        for &p in &self.points {
            let _ = writeln!(out, "  {p} [label=\"{}\"];", escape_dot(&p.to_string()));
        }
        for &p in &self.points {
            for &q in &self.points {
                let covering = l.order().lt(p, q)
                    && !self.points.iter().any(|&r| l.order().lt(p, r) && l.order().lt(r, q));
                if covering {
                    let _ = writeln!(out, "  {p} -> {q};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn spec(l: &MulLattice) -> SpecSpace {
    let points = primes(l);
    let v_map: Vec<PointSet> = l
        .elements()
        .map(|x| points.iter().copied().filter(|&p| l.leq(x, p)).collect())
        .collect();
    let closed_family = v_map.iter().cloned().collect();
    SpecSpace { points, closed_family, v_map }
}

pub fn topology_report(space: &FiniteSpace) -> TopologyReport {
    space.report()
}

fn radical_from(l: &MulLattice, primes: &[Elem], x: Elem) -> Elem {
    l.meet_all(primes.iter().copied().filter(|&p| l.leq(x, p)))
}

/// `√x`: the meet of all primes above `x`, or top when there are none.
pub fn radical(l: &MulLattice, x: Elem) -> Elem {
    radical_from(l, &primes(l), x)
}

/// `√x` for every element, indexed by `x`.
pub fn radical_table(l: &MulLattice) -> Vec<Elem> {
    let ps = primes(l);
    l.elements().map(|x| radical_from(l, &ps, x)).collect()
}

pub fn has_enough_primes(l: &MulLattice) -> bool {
    let ps = primes(l);
    l.elements().filter(|&x| x != l.top()).all(|x| ps.iter().any(|&p| l.leq(x, p)))
}

/// `x² ≤ s ⇒ x ≤ s` for all `x`.
pub fn is_semiprime(l: &MulLattice, s: Elem) -> bool {
    l.elements().all(|x| l.leq(x, s) || !l.leq(l.square(x), s))
}

pub fn semiprimes(l: &MulLattice) -> Vec<Elem> {
    l.elements().filter(|&s| is_semiprime(l, s)).collect()
}

/// Smallest semiprime above `x`, as the meet of all semiprimes above it.
pub fn sp(l: &MulLattice, x: Elem) -> Elem {
    l.meet_all(semiprimes(l).into_iter().filter(|&s| l.leq(x, s)))
}

pub fn sp_table(l: &MulLattice) -> Vec<Elem> {
    let sps = semiprimes(l);
    l.elements().map(|x| l.meet_all(sps.iter().copied().filter(|&s| l.leq(x, s)))).collect()
}

/// The radical elements of a lattice, repackaged as a lattice whose
/// multiplication is the meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalFrame {
    carrier: Vec<Elem>,
    as_mul_lattice: MulLattice,
}

impl RadicalFrame {
    /// Radical elements of the ambient lattice, sorted.
    pub fn carrier(&self) -> &[Elem] {
        &self.carrier
    }

    /// The frame itself, indexed by position in [`RadicalFrame::carrier`].
    pub fn as_mul_lattice(&self) -> &MulLattice {
        &self.as_mul_lattice
    }

    pub fn index_of(&self, x: Elem) -> Option<usize> {
        self.carrier.binary_search(&x).ok()
    }

    pub fn element(&self, i: usize) -> Elem {
        self.carrier[i]
    }
}

/// Builds the frame of radical elements and checks both that it is a frame
/// and that `r ↦ Spec \ V(r)` is an order isomorphism onto the open sets.
pub fn radical_frame(l: &MulLattice) -> Result<RadicalFrame, SpectraError> {
    let rad = radical_table(l);
    let carrier: Vec<Elem> = l.elements().filter(|&x| rad[x] == x).collect();
    let order: LatticeOrder = l.order().restrict(&carrier)?;
    let k = carrier.len();

    for i in 0..k {
        for j in 0..k {
            // Meets agree with the ambient lattice; joins are radicals of joins.
            let (x, y) = (carrier[i], carrier[j]);
            if carrier[order.meet(i, j)] != l.meet(x, y) || carrier[order.join(i, j)] != rad[l.join(x, y)]
            {
                return Err(SpectraError::NotAFrame { witness: vec![x, y] });
            }
        }
    }
    if let Some([a, b, c]) = order.distributivity_witness() {
        return Err(SpectraError::NotAFrame { witness: vec![carrier[a], carrier[b], carrier[c]] });
    }

    let s = spec(l);
    let all: PointSet = s.points().iter().copied().collect();
    let open_of = |x: Elem| -> PointSet { &all - s.v(x) };
    let opens: BTreeSet<PointSet> = s.space().open_sets();
    let images: BTreeSet<PointSet> = carrier.iter().map(|&r| open_of(r)).collect();
    if images.len() != k || images != opens {
        return Err(SpectraError::NotIsomorphic { witness: carrier.clone() });
    }
    for &r in &carrier {
        for &t in &carrier {
            if l.leq(r, t) != open_of(r).is_subset(&open_of(t)) {
                return Err(SpectraError::NotIsomorphic { witness: vec![r, t] });
            }
        }
    }

    let as_mul_lattice = MulLattice::with_meet(order);
    Ok(RadicalFrame { carrier, as_mul_lattice })
}

/// For every prime `p` and all `x`, `y`, the four statements
/// `xy ≤ p ≤ x∧y`; `(x ≤ p or y ≤ p) ∧ p ≤ x ∧ p ≤ y`;
/// `x = p ≤ y or y = p ≤ x`; `p = x∧y` are equivalent.
/// A failure reports `[p, x, y]`.
pub fn primes_between_check(l: &MulLattice) -> TheoremReport {
    let witness = primes(l).into_iter().find_map(|p| {
        l.elements().flat_map(|x| l.elements().map(move |y| (x, y))).find_map(|(x, y)| {
            let meet = l.meet(x, y);
            let a = l.leq(l.mul(x, y), p) && l.leq(p, meet);
            let b = (l.leq(x, p) || l.leq(y, p)) && l.leq(p, x) && l.leq(p, y);
            let c = (x == p && l.leq(p, y)) || (y == p && l.leq(p, x));
            let d = p == meet;
            (!(a == b && b == c && c == d)).then(|| vec![p, x, y])
        })
    });
    TheoremReport::from_witness("primes_between", witness)
}

/// `V(1) = ∅`, `V(xy) = V(x) ∪ V(y)` and `V(⋁S) = ⋂ V(s)`.
pub fn v_identities_report(l: &MulLattice) -> TheoremReport {
    const NAME: &str = "v_identities";
    let s = spec(l);
    let all: PointSet = s.points().iter().copied().collect();
    if !s.v(l.top()).is_empty() {
        return TheoremReport::fail(NAME, vec![l.top()]);
    }
    for x in l.elements() {
        for y in l.elements() {
            if *s.v(l.mul(x, y)) != s.v(x) | s.v(y) {
                return TheoremReport::fail(NAME, vec![x, y]);
            }
        }
    }
    let n = l.len();
    let check_family = |members: &[Elem]| -> bool {
        let j = l.join_all(members.iter().copied());
        let inter = members.iter().fold(all.clone(), |acc, &m| &acc & s.v(m));
        *s.v(j) == inter
    };
    if n <= SUBSET_CHECK_LIMIT {
        for mask in 0u32..(1u32 << n) {
            let members: Vec<Elem> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if !check_family(&members) {
                return TheoremReport::fail(NAME, members);
            }
        }
    } else {
        if !check_family(&[]) {
            return TheoremReport::fail(NAME, vec![]);
        }
        for x in l.elements() {
            for y in l.elements() {
                if !check_family(&[x, y]) {
                    return TheoremReport::fail(NAME, vec![x, y]);
                }
            }
        }
    }
    TheoremReport::pass(NAME)
}

/// `√x ∧ √y = √(xy)`.
pub fn radical_meet_report(l: &MulLattice) -> TheoremReport {
    let rad = radical_table(l);
    let witness = l
        .elements()
        .flat_map(|x| l.elements().map(move |y| (x, y)))
        .find(|&(x, y)| l.meet(rad[x], rad[y]) != rad[l.mul(x, y)])
        .map(|(x, y)| vec![x, y]);
    TheoremReport::from_witness("radical_meet", witness)
}

/// Closure-operator laws of `√`, `V(√x) = V(x)`, `√x ≤ √y ⇔ V(y) ⊆ V(x)`,
/// and `V(p)` is the closure of `{p}` for each prime `p`.
pub fn radical_closure_report(l: &MulLattice) -> TheoremReport {
    const NAME: &str = "radical_closure";
    let rad = radical_table(l);
    let s = spec(l);
    let space = s.space();
    for x in l.elements() {
        if !l.leq(x, rad[x]) || rad[rad[x]] != rad[x] || s.v(rad[x]) != s.v(x) {
            return TheoremReport::fail(NAME, vec![x]);
        }
        for y in l.elements() {
            if l.leq(x, y) && !l.leq(rad[x], rad[y]) {
                return TheoremReport::fail(NAME, vec![x, y]);
            }
            if l.leq(rad[x], rad[y]) != s.v(y).is_subset(s.v(x)) {
                return TheoremReport::fail(NAME, vec![x, y]);
            }
        }
    }
    for &p in s.points() {
        if *s.v(p) != space.closure_of_point(p) {
            return TheoremReport::fail(NAME, vec![p]);
        }
    }
    TheoremReport::pass(NAME)
}

/// The spectrum is sober; a failure lists the offending irreducible closed set.
pub fn sober_report(l: &MulLattice) -> TheoremReport {
    let r = spec(l).topology_report();
    let witness = (!r.sober).then(|| {
        r.irreducible_closed
            .iter()
            .zip(&r.generic_points)
            .find(|(_, g)| g.is_none())
            .map(|(c, _)| c.iter().copied().collect())
            .unwrap_or_default()
    });
    TheoremReport::from_witness("sober", witness)
}

/// Spectrum summary for reports and the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumSummary {
    pub points: Vec<Elem>,
    pub closed_sets: Vec<PointSet>,
    pub radicals: Vec<Elem>,
    pub radical_elements: Vec<Elem>,
    pub has_enough_primes: bool,
    pub topology: TopologyReport,
}

pub fn spectrum_summary(l: &MulLattice) -> SpectrumSummary {
    let s = spec(l);
    let radicals = radical_table(l);
    SpectrumSummary {
        points: s.points().to_vec(),
        closed_sets: s.closed_family().iter().cloned().collect(),
        radical_elements: l.elements().filter(|&x| radicals[x] == x).collect(),
        radicals,
        has_enough_primes: has_enough_primes(l),
        topology: s.topology_report(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::three_element_monoid;

    // Labels in the three-element monoid.
    const X2: Elem = 0;
    const X: Elem = 1;
    const ONE: Elem = 2;

    fn set(xs: &[Elem]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn monoid_primes_and_radicals() {
        let l = three_element_monoid();
        assert!(is_prime(&l, X));
        assert!(!is_prime(&l, X2));
        assert!(!is_prime(&l, ONE));
        let s = spec(&l);
        assert_eq!(s.points(), &[X]);
        assert_eq!(s.closed_family(), &[set(&[]), set(&[X])].into_iter().collect());
        assert_eq!(radical(&l, X2), X);
        assert_eq!(radical(&l, ONE), ONE);
        assert!(has_enough_primes(&l));
        let r = s.topology_report();
        assert!(r.t0 && r.sober && r.spectral);
    }

    #[test]
    fn monoid_radical_frame() {
        let l = three_element_monoid();
        let f = radical_frame(&l).unwrap();
        assert_eq!(f.carrier(), &[X, ONE]);
        assert!(f.index_of(X2).is_none());
        assert!(f.as_mul_lattice().condition_profile().is_frame);
    }

    #[test]
    fn monoid_semiprimes() {
        let l = three_element_monoid();
        assert!(!is_semiprime(&l, X2));
        assert!(is_semiprime(&l, ONE));
        assert!(is_semiprime(&l, X));
        assert_eq!(sp(&l, X2), X);
    }

    #[test]
    fn zero_product_has_empty_spectrum() {
        for k in 2..=4 {
            let l = MulLattice::with_zero_product(LatticeOrder::chain(k).unwrap());
            let s = spec(&l);
            assert!(s.points().is_empty());
            assert!(!has_enough_primes(&l));
            assert!(s.topology_report().spectral);
            let f = radical_frame(&l).unwrap();
            assert_eq!(f.carrier(), &[l.top()]);
        }
    }

    #[test]
    fn boolean_square_frame_radicals() {
        // 0 < a, b < 1 with meet multiplication: primes are the coatoms a, b.
        let order = LatticeOrder::from_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap();
        let l = MulLattice::with_meet(order);
        assert_eq!(primes(&l), vec![1, 2]);
        let f = radical_frame(&l).unwrap();
        assert_eq!(f.carrier(), &[0, 1, 2, 3]);
    }

    #[test]
    fn identity_reports_pass_on_monoid() {
        let l = three_element_monoid();
        for r in [
            v_identities_report(&l),
            radical_meet_report(&l),
            radical_closure_report(&l),
            sober_report(&l),
            primes_between_check(&l),
        ] {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn primes_are_semiprime_and_locally_prime() {
        let l = three_element_monoid();
        for p in primes(&l) {
            assert!(is_semiprime(&l, p));
            assert!(is_locally_prime(&l, p));
        }
        assert!(is_semiprime(&l, l.top()));
    }

    #[test]
    fn dot_has_one_node_per_prime() {
        let l = three_element_monoid();
        let dot = spec(&l).to_dot(&l);
        assert!(dot.contains("1 [label=\"1\"]"));
        assert!(!dot.contains("->"));
    }
}
