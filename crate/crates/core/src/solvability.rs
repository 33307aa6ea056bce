//! Solvability closures: the derived series `solv`, local solvability
//! `loc.solv`, and the square-root tower `Solv`.
//!
//! Local solvability quantifies over infinite sequences of compact elements
//! `c₀ ≤ x`, `cₙ₊₁ ≤ cₙ²`. On a finite carrier such a sequence avoiding `y`
//! exists iff `x` lies above some element of the largest set `B` of compact
//! elements not below `y` in which every member `c` has a successor
//! `c' ∈ B` with `c' ≤ c²`: any infinite avoiding sequence revisits an
//! element, and conversely `B` lets every member be extended forever. `B` is
//! a greatest fixpoint, computed by repeatedly deleting members without a
//! successor.

use serde::Serialize;

use crate::error::SolvabilityError;
use crate::lattice::{Condition, ConditionProfile, MulLattice};
use crate::order::Elem;
use crate::report::TheoremReport;
use crate::spectra::{radical_table, sp_table};

/// `x⁽⁰⁾ = x`, `x⁽ⁿ⁺¹⁾ = (x⁽ⁿ⁾)²`, up to the first repeated term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedSeries {
    pub base: Elem,
    /// Terms up to and including the first one whose square equals itself.
    pub terms: Vec<Elem>,
}

impl DerivedSeries {
    /// The term `x⁽ⁿ⁾`; indices past stabilisation return the stable term.
    pub fn term(&self, n: usize) -> Elem {
        self.terms[n.min(self.terms.len() - 1)]
    }

    pub fn stable(&self) -> Elem {
        *self.terms.last().expect("series has at least its base")
    }
}

/// Computes the derived series with a horizon of `2n` squarings.
///
/// Since `x² ≤ x` the series is decreasing and stabilises within `n` steps;
/// a term that cycles back to an earlier one is reported rather than
/// truncated.
pub fn derived_series(l: &MulLattice, x: Elem) -> Result<DerivedSeries, SolvabilityError> {
    let horizon = 2 * l.len();
    let mut terms = vec![x];
    for _ in 0..horizon {
        let last = *terms.last().expect("nonempty");
        let next = l.square(last);
        if next == last {
            return Ok(DerivedSeries { base: x, terms });
        }
        if terms.contains(&next) {
            break;
        }
        terms.push(next);
    }
    Err(SolvabilityError::NonStabilizing { base: x, horizon })
}

/// `x⁽ⁿ⁾ ≤ y` for some `n`.
pub fn is_solvable(l: &MulLattice, x: Elem, y: Elem) -> Result<bool, SolvabilityError> {
    Ok(derived_series(l, x)?.terms.iter().any(|&t| l.leq(t, y)))
}

/// Join of all `y`-solvable elements.
pub fn solv(l: &MulLattice, y: Elem) -> Result<Elem, SolvabilityError> {
    let mut solvable = Vec::new();
    for x in l.elements() {
        if is_solvable(l, x, y)? {
            solvable.push(x);
        }
    }
    Ok(l.join_all(solvable))
}

/// Membership mask of the greatest set of compact elements `c ≰ y` in
/// which every member has a successor `c' ≤ c²`.
pub fn non_solvable_core(l: &MulLattice, y: Elem) -> Vec<bool> {
    let mut alive = vec![false; l.len()];
    for c in l.order().compact_elements() {
        alive[c] = !l.leq(c, y);
    }
    loop {
        let doomed: Vec<Elem> = l
            .elements()
            .filter(|&c| alive[c])
            .filter(|&c| !l.elements().any(|d| alive[d] && l.leq(d, l.square(c))))
            .collect();
        if doomed.is_empty() {
            return alive;
        }
        for c in doomed {
            alive[c] = false;
        }
    }
}

fn locally_solvable_in(l: &MulLattice, core: &[bool], x: Elem) -> bool {
    !l.elements().any(|c| core[c] && l.leq(c, x))
}

/// Every compact chain `c₀ ≤ x`, `cₙ₊₁ ≤ cₙ²` eventually drops below `y`.
pub fn is_locally_solvable(l: &MulLattice, x: Elem, y: Elem) -> bool {
    locally_solvable_in(l, &non_solvable_core(l, y), x)
}

/// Join of all locally `y`-solvable elements.
pub fn loc_solv(l: &MulLattice, y: Elem) -> Elem {
    let core = non_solvable_core(l, y);
    l.join_all(l.elements().filter(|&x| locally_solvable_in(l, &core, x)))
}

/// One stage of the square-root tower: `⋁{y : y² ≤ x}`.
pub fn stage_step(l: &MulLattice, x: Elem) -> Elem {
    l.join_all(l.elements().filter(|&y| l.leq(l.square(y), x)))
}

/// `x₍₀₎ = x`, `x₍ₖ₊₁₎ = ⋁{y : y² ≤ x₍ₖ₎}`, up to its fixpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvTower {
    pub base: Elem,
    /// Stages up to and including the first repeated one.
    pub stages: Vec<Elem>,
    pub limit: Elem,
}

impl SolvTower {
    /// The stage `x₍ₖ₎`; indices past the fixpoint return the limit.
    pub fn stage(&self, k: usize) -> Elem {
        self.stages[k.min(self.stages.len() - 1)]
    }
}

/// The stages are increasing (`x₍ₖ₎` squares below itself), so the tower
/// reaches its fixpoint within `n` steps; no limit stages are needed.
pub fn solv_closure(l: &MulLattice, x: Elem) -> SolvTower {
    let mut stages = vec![x];
    loop {
        let last = *stages.last().expect("nonempty");
        let next = stage_step(l, last);
        stages.push(next);
        if next == last {
            return SolvTower { base: x, stages, limit: next };
        }
    }
}

/// Every closure operator of this module, plus `√` and `sp`, tabulated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureTables {
    pub radical: Vec<Elem>,
    pub sp: Vec<Elem>,
    pub solv: Vec<Elem>,
    pub loc_solv: Vec<Elem>,
    pub big_solv: Vec<Elem>,
}

impl ClosureTables {
    pub fn compute(l: &MulLattice) -> Result<Self, SolvabilityError> {
        let mut solv_t = Vec::with_capacity(l.len());
        for y in l.elements() {
            solv_t.push(solv(l, y)?);
        }
        Ok(ClosureTables {
            radical: radical_table(l),
            sp: sp_table(l),
            solv: solv_t,
            loc_solv: l.elements().map(|y| loc_solv(l, y)).collect(),
            big_solv: l.elements().map(|y| solv_closure(l, y).limit).collect(),
        })
    }
}

/// Compares the five closures at every element.
///
/// Always checked: `solv ≤ Solv`, `Solv ≤ √`, `Solv ≤ sp`, `sp ≤ √` and
/// `loc.solv ≤ √`. Under algebraicity, weak monotonicity and the weak
/// Kaplansky condition, `loc.solv = solv`; under distributivity and
/// algebraicity, `√ = loc.solv` and `sp = √`; adding the weak Kaplansky
/// condition, `Solv = solv = loc.solv = √`. A failure reports `[y]` and names
/// the relation in the theorem string.
pub fn closure_comparison(l: &MulLattice) -> TheoremReport {
    const NAME: &str = "closure_comparison";
    let profile = ConditionProfile::of(l);
    let t = match ClosureTables::compute(l) {
        Ok(t) => t,
        Err(e) => return TheoremReport::fail(format!("{NAME}: {e}"), vec![]),
    };
    let le = |a: Elem, b: Elem| l.leq(a, b);

    type Rel<'a> = (&'static str, Box<dyn Fn(Elem) -> bool + 'a>);
    let mut relations: Vec<Rel> = vec![
        ("solv <= Solv", Box::new(|y| le(t.solv[y], t.big_solv[y]))),
        ("Solv <= radical", Box::new(|y| le(t.big_solv[y], t.radical[y]))),
        ("Solv <= sp", Box::new(|y| le(t.big_solv[y], t.sp[y]))),
        ("sp <= radical", Box::new(|y| le(t.sp[y], t.radical[y]))),
        ("loc.solv <= radical", Box::new(|y| le(t.loc_solv[y], t.radical[y]))),
    ];
    use Condition::*;
    if profile.satisfies(&[AlgebraicLattice, WeaklyMonotone, WeakKaplansky]) {
        relations.push(("loc.solv = solv", Box::new(|y| t.loc_solv[y] == t.solv[y])));
    }
    if profile.satisfies(&[Distributive, AlgebraicLattice]) {
        relations.push(("radical = loc.solv", Box::new(|y| t.radical[y] == t.loc_solv[y])));
        relations.push(("sp = radical", Box::new(|y| t.sp[y] == t.radical[y])));
    }
    if profile.satisfies(&[Distributive, AlgebraicLattice, WeakKaplansky]) {
        relations.push((
            "Solv = solv = loc.solv = radical",
            Box::new(|y| {
                t.big_solv[y] == t.solv[y]
                    && t.solv[y] == t.loc_solv[y]
                    && t.loc_solv[y] == t.radical[y]
            }),
        ));
    }
    for (label, holds) in &relations {
        if let Some(y) = l.elements().find(|&y| !holds(y)) {
            return TheoremReport::fail(format!("{NAME}: {label}"), vec![y]);
        }
    }
    TheoremReport::pass(NAME)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::three_element_monoid;
    use crate::order::LatticeOrder;

    const X2: Elem = 0;
    const X: Elem = 1;
    const ONE: Elem = 2;

    #[test]
    fn derived_series_in_monoid() {
        let l = three_element_monoid();
        let s = derived_series(&l, X).unwrap();
        assert_eq!(s.terms, vec![X, X2]);
        assert_eq!(s.term(5), X2);
        assert!(is_solvable(&l, X, X2).unwrap());
        assert!(!is_solvable(&l, ONE, X2).unwrap());
        assert_eq!(derived_series(&l, ONE).unwrap().terms, vec![ONE]);
        assert_eq!(solv(&l, X2).unwrap(), X);
    }

    #[test]
    fn every_element_is_solvable_over_itself() {
        let l = three_element_monoid();
        for y in l.elements() {
            assert!(is_solvable(&l, y, y).unwrap());
            assert!(is_locally_solvable(&l, y, y));
        }
    }

    #[test]
    fn local_solvability_in_monoid() {
        let l = three_element_monoid();
        let core = non_solvable_core(&l, X2);
        assert_eq!(core, vec![false, false, true]);
        assert!(is_locally_solvable(&l, X, X2));
        assert!(!is_locally_solvable(&l, ONE, X2));
        assert_eq!(loc_solv(&l, X2), X);
    }

    #[test]
    fn solv_tower_in_monoid() {
        let l = three_element_monoid();
        let t = solv_closure(&l, X2);
        assert_eq!(t.stages, vec![X2, X, X]);
        assert_eq!(t.limit, X);
        assert_eq!(solv_closure(&l, ONE).limit, ONE);
    }

    #[test]
    fn zero_product_everything_solvable() {
        let l = MulLattice::with_zero_product(LatticeOrder::chain(3).unwrap());
        for y in l.elements() {
            assert_eq!(solv(&l, y).unwrap(), l.top());
            assert_eq!(loc_solv(&l, y), l.top());
            assert_eq!(solv_closure(&l, y).limit, l.top());
        }
    }

    #[test]
    fn closure_comparison_on_monoid() {
        let l = three_element_monoid();
        let r = closure_comparison(&l);
        assert!(r.pass, "{r:?}");
        let t = ClosureTables::compute(&l).unwrap();
        for y in l.elements() {
            let v = t.radical[y];
            assert_eq!((t.sp[y], t.solv[y], t.loc_solv[y], t.big_solv[y]), (v, v, v, v));
        }
    }
}
