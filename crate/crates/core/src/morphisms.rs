//! Adjunctions between multiplicative lattices, the induced maps of spectra,
//! commutativization, and the adjunction between a lattice and its frame of
//! radical elements.
//!
//! An adjunction is stored by its left adjoint `f` alone; the right adjoint
//! `u(y) = ⋁{x : f(x) ≤ y}` is always derived from it.

use std::sync::Arc;

use serde::Serialize;

use crate::error::MorphismError;
use crate::lattice::MulLattice;
use crate::order::Elem;
use crate::report::TheoremReport;
use crate::spectra::{is_prime, primes, radical_frame, radical_table};

/// How the left adjoint interacts with multiplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AdjunctionFlags {
    /// `f(1) = 1` and `f(x)f(x') ≤ f(xx')`.
    pub compatible: bool,
    /// `f(1) = 1` and `f(x)f(x') = f(xx')`.
    pub strictly_compatible: bool,
    /// `f(xx') ≤ f(x)f(x')`.
    pub op_compatible: bool,
}

/// An adjunction `f ⊣ u` from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    source: Arc<MulLattice>,
    target: Arc<MulLattice>,
    f: Vec<Elem>,
    u: Vec<Elem>,
    flags: AdjunctionFlags,
}

fn flags_of(x: &MulLattice, y: &MulLattice, f: &[Elem]) -> AdjunctionFlags {
    let unit = f[x.top()] == y.top();
    let pairs = || x.elements().flat_map(|a| x.elements().map(move |b| (a, b)));
    let lax = pairs().all(|(a, b)| y.leq(y.mul(f[a], f[b]), f[x.mul(a, b)]));
    let strict = pairs().all(|(a, b)| y.mul(f[a], f[b]) == f[x.mul(a, b)]);
    let op = pairs().all(|(a, b)| y.leq(f[x.mul(a, b)], y.mul(f[a], f[b])));
    AdjunctionFlags {
        compatible: unit && lax,
        strictly_compatible: unit && strict,
        op_compatible: op,
    }
}

/// Checks that `f` preserves all joins, derives `u`, checks the adjunction
/// law and classifies `f`.
///
/// On a finite lattice, preserving the empty join and binary joins is the
/// same as preserving all joins. A failure reports `[]` for the empty join
/// and `[x, y]` for a binary one.
pub fn mk_adjunction(
    source: Arc<MulLattice>,
    target: Arc<MulLattice>,
    f: Vec<Elem>,
) -> Result<Adjunction, MorphismError> {
    let (x, y) = (&*source, &*target);
    if f.len() != x.len() {
        return Err(MorphismError::WrongArity { expected: x.len(), got: f.len() });
    }
    if let Some(&value) = f.iter().find(|&&v| v >= y.len()) {
        return Err(MorphismError::OutOfRange { value });
    }
    if f[x.bottom()] != y.bottom() {
        return Err(MorphismError::NotJoinPreserving { witness: vec![] });
    }
    for a in x.elements() {
        for b in x.elements() {
            if f[x.join(a, b)] != y.join(f[a], f[b]) {
                return Err(MorphismError::NotJoinPreserving { witness: vec![a, b] });
            }
        }
    }
    let u: Vec<Elem> =
        y.elements().map(|t| x.join_all(x.elements().filter(|&s| y.leq(f[s], t)))).collect();
    for a in x.elements() {
        for b in y.elements() {
            if y.leq(f[a], b) != x.leq(a, u[b]) {
                return Err(MorphismError::NotAdjoint { x: a, y: b });
            }
        }
    }
    let flags = flags_of(x, y, &f);
    Ok(Adjunction { source, target, f, u, flags })
}

impl Adjunction {
    pub fn identity(l: Arc<MulLattice>) -> Adjunction {
        let f: Vec<Elem> = l.elements().collect();
        mk_adjunction(l.clone(), l, f).expect("the identity is join-preserving")
    }

    pub fn source(&self) -> &Arc<MulLattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<MulLattice> {
        &self.target
    }

    pub fn f(&self, x: Elem) -> Elem {
        self.f[x]
    }

    pub fn u(&self, y: Elem) -> Elem {
        self.u[y]
    }

    pub fn f_map(&self) -> &[Elem] {
        &self.f
    }

    pub fn u_map(&self) -> &[Elem] {
        &self.u
    }

    pub fn flags(&self) -> AdjunctionFlags {
        self.flags
    }

    /// `next ∘ self`; flags are recomputed rather than inferred.
    pub fn then(&self, next: &Adjunction) -> Result<Adjunction, MorphismError> {
        if !Arc::ptr_eq(&self.target, &next.source) && *self.target != *next.source {
            return Err(MorphismError::NotComposable);
        }
        let f = self.f.iter().map(|&v| next.f[v]).collect();
        mk_adjunction(self.source.clone(), next.target.clone(), f)
    }
}

/// The map of spectra `Spec(target) → Spec(source)`, `p ↦ u(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecMap {
    /// `(p, u(p))` for every prime `p` of the target, in increasing `p`.
    pub points: Vec<(Elem, Elem)>,
    /// Every `u(p)` is prime.
    pub primes_preserved: bool,
    /// The preimage of `V(x)` is `V(f(x))` for every `x`.
    pub preimage_identity: bool,
}

impl SpecMap {
    pub fn apply(&self, p: Elem) -> Option<Elem> {
        self.points.iter().find(|&&(q, _)| q == p).map(|&(_, v)| v)
    }
}

/// Builds the spectral map of a compatible adjunction, certifying that it
/// sends primes to primes and pulls `V(x)` back to `V(f(x))`.
pub fn spec_map(adj: &Adjunction) -> Result<SpecMap, MorphismError> {
    if !adj.flags.compatible {
        return Err(MorphismError::NotCompatible);
    }
    let (x, y) = (&*adj.source, &*adj.target);
    let target_primes = primes(y);
    let mut points = Vec::with_capacity(target_primes.len());
    for &p in &target_primes {
        let q = adj.u[p];
        if q == x.top() || !is_prime(x, q) {
            return Err(MorphismError::PrimeNotPreserved { prime: p });
        }
        points.push((p, q));
    }
    for a in x.elements() {
        // p lies in the preimage of V(a) iff a ≤ u(p); it lies in V(f(a)) iff f(a) ≤ p.
        if points.iter().any(|&(p, q)| x.leq(a, q) != y.leq(adj.f[a], p)) {
            return Err(MorphismError::PreimageMismatch { x: a });
        }
    }
    Ok(SpecMap { points, primes_preserved: true, preimage_identity: true })
}

/// Both spectral-map certificates as a report. A failure reports the
/// offending prime of the target or element of the source.
pub fn spec_map_report(adj: &Adjunction) -> TheoremReport {
    const NAME: &str = "spec_map";
    match spec_map(adj) {
        Ok(_) => TheoremReport::pass(NAME),
        Err(MorphismError::PrimeNotPreserved { prime }) => TheoremReport::fail(NAME, vec![prime]),
        Err(MorphismError::PreimageMismatch { x }) => TheoremReport::fail(NAME, vec![x]),
        Err(e) => TheoremReport::skipped(NAME, e.to_string()),
    }
}

/// The commutativization `Com(L)` with its two canonical adjunctions.
#[derive(Clone, Debug)]
pub struct Commutativization {
    pub com: Arc<MulLattice>,
    /// The identity of underlying lattices as a compatible map `Com(L) → L`.
    pub to_original: Adjunction,
    /// The identity of underlying lattices as an op-compatible map `L → Com(L)`.
    pub from_original: Adjunction,
    /// Whether `L` and `Com(L)` have the same primes; only decided when `L`
    /// is monotone.
    pub same_primes: Option<bool>,
}

pub fn commutativize(l: Arc<MulLattice>) -> Commutativization {
    let com = Arc::new(l.commutativized());
    let id: Vec<Elem> = l.elements().collect();
    let to_original = mk_adjunction(com.clone(), l.clone(), id.clone())
        .expect("identity of the underlying lattice preserves joins");
    let from_original =
        mk_adjunction(l.clone(), com.clone(), id).expect("identity preserves joins");
    let same_primes = l.condition_profile().monotone.then(|| primes(&l) == primes(&com));
    Commutativization { com, to_original, from_original, same_primes }
}

/// The adjunction `ρ ⊣ ι` between `L` and its frame of radical elements,
/// with `ρ(x) = √x` and `ι` the inclusion.
pub fn radical_adjunction(l: Arc<MulLattice>) -> Result<Adjunction, MorphismError> {
    let frame = radical_frame(&l)?;
    let rad = radical_table(&l);
    let f = l
        .elements()
        .map(|x| frame.index_of(rad[x]).expect("radicals lie in the frame"))
        .collect();
    let frame_lattice = Arc::new(frame.as_mul_lattice().clone());
    let adj = mk_adjunction(l, frame_lattice, f)?;
    debug_assert!(adj.u.iter().enumerate().all(|(i, &v)| v == frame.element(i)));
    Ok(adj)
}

/// Under monotonicity of both lattices, `f` is op-compatible iff
/// `u(y)u(y') ≤ u(yy')` for all `y`, `y'`. Skipped when either side is not
/// monotone; a failure reports `[]`.
pub fn op_compatibility_report(adj: &Adjunction) -> TheoremReport {
    const NAME: &str = "op_compatibility";
    let (x, y) = (&*adj.source, &*adj.target);
    if !x.condition_profile().monotone || !y.condition_profile().monotone {
        return TheoremReport::skipped(NAME, "monotone");
    }
    let via_u = y.elements().all(|a| {
        y.elements().all(|b| x.leq(x.mul(adj.u[a], adj.u[b]), adj.u[y.mul(a, b)]))
    });
    TheoremReport::from_witness(NAME, (via_u != adj.flags.op_compatible).then(Vec::new))
}

/// For commutative monotone `X`, monotone `Y` and compatible `f`, the same
/// `f` is compatible as a map into `Com(Y)`. Skipped when a hypothesis
/// fails; a failure reports `[x, x']`.
pub fn com_factorization_report(adj: &Adjunction) -> TheoremReport {
    const NAME: &str = "com_factorization";
    let (x, y) = (&*adj.source, &*adj.target);
    let px = x.condition_profile();
    if !(px.commutative && px.monotone && y.condition_profile().monotone) {
        return TheoremReport::skipped(NAME, "commutative, monotone");
    }
    if !adj.flags.compatible {
        return TheoremReport::skipped(NAME, "compatible");
    }
    let com = y.commutativized();
    let witness = x
        .elements()
        .flat_map(|a| x.elements().map(move |b| (a, b)))
        .find(|&(a, b)| !com.leq(com.mul(adj.f[a], adj.f[b]), adj.f[x.mul(a, b)]))
        .map(|(a, b)| vec![a, b]);
    TheoremReport::from_witness(NAME, witness)
}

/// When the target is a frame, a compatible `f` identifies elements with
/// the same radical. Skipped when a hypothesis fails; a failure reports
/// `[x, x']`.
pub fn frame_factorization_report(adj: &Adjunction) -> TheoremReport {
    const NAME: &str = "frame_factorization";
    let (x, y) = (&*adj.source, &*adj.target);
    if !y.condition_profile().is_frame {
        return TheoremReport::skipped(NAME, "is_frame");
    }
    if !adj.flags.compatible {
        return TheoremReport::skipped(NAME, "compatible");
    }
    let rad = radical_table(x);
    let witness = x
        .elements()
        .flat_map(|a| x.elements().map(move |b| (a, b)))
        .find(|&(a, b)| rad[a] == rad[b] && adj.f[a] != adj.f[b])
        .map(|(a, b)| vec![a, b]);
    TheoremReport::from_witness(NAME, witness)
}

/// Every join-preserving map from `x` to `y`, in lexicographic order.
///
/// Values are assigned in an order where each element comes after everything
/// below it, so a partial assignment is pruned as soon as a join of assigned
/// elements is mapped inconsistently.
pub fn join_preserving_maps(x: &MulLattice, y: &MulLattice) -> Vec<Vec<Elem>> {
    let mut by_height: Vec<Elem> = x.elements().collect();
    by_height.sort_by_key(|&a| (x.order().down_set(a).len(), a));
    let mut out = Vec::new();
    let mut f: Vec<Option<Elem>> = vec![None; x.len()];

    fn consistent(x: &MulLattice, y: &MulLattice, f: &[Option<Elem>], a: Elem) -> bool {
        x.elements().all(|b| {
            let (Some(fa), Some(fb)) = (f[a], f[b]) else {
                return true;
            };
            match f[x.join(a, b)] {
                Some(fj) => fj == y.join(fa, fb),
                None => true,
            }
        }) && x.elements().all(|b| match (f[b], f[a]) {
            (Some(fb), Some(fa)) => !x.leq(b, a) || y.leq(fb, fa),
            _ => true,
        })
    }

    fn go(
        x: &MulLattice,
        y: &MulLattice,
        order: &[Elem],
        depth: usize,
        f: &mut Vec<Option<Elem>>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if depth == order.len() {
            let full: Vec<Elem> = f.iter().map(|v| v.expect("assigned")).collect();
            if full[x.bottom()] == y.bottom()
                && x.elements().all(|a| {
                    x.elements().all(|b| full[x.join(a, b)] == y.join(full[a], full[b]))
                })
            {
                out.push(full);
            }
            return;
        }
        let a = order[depth];
        let candidates: Vec<Elem> =
            if a == x.bottom() { vec![y.bottom()] } else { y.elements().collect() };
        for v in candidates {
            f[a] = Some(v);
            let ok = consistent(x, y, f, a)
                && x.elements().filter(|&b| f[b].is_some()).all(|b| consistent(x, y, f, b));
            if ok {
                go(x, y, order, depth + 1, f, out);
            }
            f[a] = None;
        }
    }

    go(x, y, &by_height, 0, &mut f, &mut out);
    out.sort();
    out
}

/// Every compatible adjunction from `x` to `y`.
pub fn compatible_adjunctions(x: &Arc<MulLattice>, y: &Arc<MulLattice>) -> Vec<Adjunction> {
    join_preserving_maps(x, y)
        .into_iter()
        .map(|f| mk_adjunction(x.clone(), y.clone(), f).expect("join-preserving"))
        .filter(|a| a.flags.compatible)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::three_element_monoid;
    use crate::order::LatticeOrder;

    fn monoid() -> Arc<MulLattice> {
        Arc::new(three_element_monoid())
    }

    #[test]
    fn identity_has_every_flag() {
        let id = Adjunction::identity(monoid());
        let fl = id.flags();
        assert!(fl.compatible && fl.strictly_compatible && fl.op_compatible);
        assert_eq!(id.u_map(), id.f_map());
        let s = spec_map(&id).unwrap();
        assert_eq!(s.points, vec![(1, 1)]);
    }

    #[test]
    fn radical_adjunction_is_strictly_compatible() {
        let adj = radical_adjunction(monoid()).unwrap();
        // √x² = √x = x, which is position 0 in the frame {x, 1}.
        assert_eq!(adj.f_map(), &[0, 0, 1]);
        assert_eq!(adj.u_map(), &[1, 2]);
        assert!(adj.flags().strictly_compatible);
        let s = spec_map(&adj).unwrap();
        // The single prime x of the frame maps back to x.
        assert_eq!(s.points, vec![(0, 1)]);
    }

    #[test]
    fn constant_top_is_not_join_preserving() {
        let c2 = Arc::new(MulLattice::with_meet(LatticeOrder::chain(2).unwrap()));
        let err = mk_adjunction(c2.clone(), c2, vec![1, 1]).unwrap_err();
        assert!(matches!(err, MorphismError::NotJoinPreserving { witness } if witness.is_empty()));
    }

    #[test]
    fn composition_and_arity() {
        let l = monoid();
        let id = Adjunction::identity(l.clone());
        let rho = radical_adjunction(l.clone()).unwrap();
        let c = id.then(&rho).unwrap();
        assert_eq!(c.f_map(), rho.f_map());
        assert!(matches!(rho.then(&id), Err(MorphismError::NotComposable)));
        assert!(matches!(
            mk_adjunction(l.clone(), l, vec![0]),
            Err(MorphismError::WrongArity { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn commutative_lattice_is_its_own_commutativization() {
        let c = commutativize(monoid());
        assert_eq!(*c.com, three_element_monoid());
        assert_eq!(c.same_primes, Some(true));
        assert!(c.to_original.flags().compatible);
        assert!(c.from_original.flags().op_compatible);
    }

    #[test]
    fn join_preserving_maps_between_chains() {
        // Join-preserving maps from the 2-chain to the 3-chain send 0 to 0
        // and 1 anywhere.
        let c2 = MulLattice::with_meet(LatticeOrder::chain(2).unwrap());
        let c3 = MulLattice::with_meet(LatticeOrder::chain(3).unwrap());
        assert_eq!(join_preserving_maps(&c2, &c3), vec![vec![0, 0], vec![0, 1], vec![0, 2]]);
        // From the 3-chain to the 2-chain: monotone maps fixing 0.
        assert_eq!(
            join_preserving_maps(&c3, &c2),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]
        );
    }
}
