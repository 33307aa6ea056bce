use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mulspec::enumerate::{random_lattice_order, random_mul_lattice};
use mulspec::morphisms::{
    compatible_adjunctions, frame_factorization_report, op_compatibility_report, spec_map, Adjunction,
};
use mulspec::solvability::{loc_solv, solv_closure, stage_step, ClosureTables};
use mulspec::spectra::{
    is_locally_prime, is_prime, primes, radical, radical_frame, radical_table, sp_table, spec,
};
use mulspec::MulLattice;

fn lattice(size: usize, seed: u64) -> MulLattice {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = random_lattice_order(size, &mut rng).unwrap();
    random_mul_lattice(order, &mut rng)
}

fn arb_lattice(max: usize) -> impl Strategy<Value = MulLattice> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| lattice(n, seed))
}

/// A compatible adjunction between two small random lattices, if any exists.
fn adjunction(x: &Arc<MulLattice>, y: &Arc<MulLattice>, pick: usize) -> Option<Adjunction> {
    let all = compatible_adjunctions(x, y);
    (!all.is_empty()).then(|| all[pick % all.len()].clone())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn product_below_meet(l in arb_lattice(7)) {
        for x in l.elements() {
            for y in l.elements() {
                prop_assert!(l.leq(l.mul(x, y), l.meet(x, y)));
            }
        }
    }

    #[test]
    fn profile_implications(l in arb_lattice(7)) {
        let p = l.condition_profile();
        prop_assert!(!p.is_frame || p.unit_neutral);
        prop_assert!(!p.unit_neutral || p.unit_idempotent);
        prop_assert!(!p.monotone || p.weakly_monotone);
        prop_assert!(!p.distributive || p.weakly_monotone);
        prop_assert!(p.compact_lattice && p.algebraic_lattice);
        prop_assert_eq!(l.order().compact_elements(), l.elements().collect::<Vec<_>>());
    }

    #[test]
    fn closures_are_closure_operators(l in arb_lattice(7)) {
        let t = ClosureTables::compute(&l).unwrap();
        let distributive = l.condition_profile().distributive;
        for (name, table) in [("rad", &t.radical), ("sp", &t.sp), ("Solv", &t.big_solv), ("loc", &t.loc_solv)] {
            for x in l.elements() {
                prop_assert!(l.leq(x, table[x]), "{} not extensive", name);
                // Local solvability is only idempotent where it equals the radical.
                if name != "loc" || distributive {
                    prop_assert_eq!(table[table[x]], table[x], "{} not idempotent", name);
                }
                for y in l.elements() {
                    prop_assert!(!l.leq(x, y) || l.leq(table[x], table[y]));
                }
            }
        }
        for x in l.elements() {
            prop_assert_eq!(t.big_solv[x], t.sp[x]);
            prop_assert_eq!(loc_solv(&l, x), t.loc_solv[x]);
        }
    }

    #[test]
    fn tower_limit_is_fixed(l in arb_lattice(7)) {
        for x in l.elements() {
            let tower = solv_closure(&l, x);
            prop_assert_eq!(stage_step(&l, tower.limit), tower.limit);
            prop_assert!(tower.stages.windows(2).all(|w| l.leq(w[0], w[1])));
        }
    }

    #[test]
    fn radical_and_v(l in arb_lattice(7)) {
        let s = spec(&l);
        let rad = radical_table(&l);
        for x in l.elements() {
            prop_assert_eq!(s.v(rad[x]), s.v(x));
            for y in l.elements() {
                prop_assert_eq!(l.leq(rad[x], rad[y]), s.v(y).is_subset(s.v(x)));
            }
        }
        for &p in s.points() {
            let closure = s
                .closed_family()
                .iter()
                .filter(|c| c.contains(&p))
                .fold(s.points().iter().copied().collect::<BTreeSet<_>>(), |a, c| {
                    a.intersection(c).copied().collect()
                });
            prop_assert_eq!(&closure, s.v(p));
        }
    }

    #[test]
    fn radical_frame_has_same_spectrum(l in arb_lattice(7)) {
        let frame = radical_frame(&l).unwrap();
        let fl = frame.as_mul_lattice();
        let lifted: Vec<_> = primes(fl).into_iter().map(|i| frame.element(i)).collect();
        prop_assert_eq!(&lifted, &primes(&l));
        let lift = |c: &BTreeSet<usize>| c.iter().map(|&i| frame.element(i)).collect::<BTreeSet<_>>();
        let closed: BTreeSet<_> = spec(fl).closed_family().iter().map(lift).collect();
        let ls = spec(&l);
        prop_assert_eq!(&closed, ls.closed_family());
    }

    #[test]
    fn local_primes_agree_under_monotonicity(l in arb_lattice(7)) {
        if l.condition_profile().monotone {
            for p in l.elements() {
                prop_assert_eq!(is_prime(&l, p), is_locally_prime(&l, p));
            }
        }
    }

    #[test]
    fn semiprime_closure_is_radical_when_distributive(l in arb_lattice(7)) {
        if l.condition_profile().distributive {
            prop_assert_eq!(sp_table(&l), radical_table(&l));
        }
    }

    #[test]
    fn spectral_maps_of_adjunctions(
        a in arb_lattice(4),
        b in arb_lattice(4),
        pick in any::<usize>(),
    ) {
        let (x, y) = (Arc::new(a), Arc::new(b));
        let Some(adj) = adjunction(&x, &y, pick) else { return Ok(()) };
        let m = spec_map(&adj).unwrap();
        for &(p, q) in &m.points {
            prop_assert!(is_prime(&y, p));
            prop_assert!(is_prime(&x, q));
            prop_assert_ne!(q, x.top());
            for e in x.elements() {
                prop_assert_eq!(x.leq(e, q), y.leq(adj.f(e), p));
            }
        }
        prop_assert!(!op_compatibility_report(&adj).is_failure());
        prop_assert!(!frame_factorization_report(&adj).is_failure());
    }

    #[test]
    fn spectral_maps_are_functorial(
        a in arb_lattice(3),
        b in arb_lattice(3),
        c in arb_lattice(3),
        picks in any::<(usize, usize)>(),
    ) {
        let (x, y, z) = (Arc::new(a), Arc::new(b), Arc::new(c));
        let Some(f) = adjunction(&x, &y, picks.0) else { return Ok(()) };
        let Some(g) = adjunction(&y, &z, picks.1) else { return Ok(()) };
        let (mf, mg) = (spec_map(&f).unwrap(), spec_map(&g).unwrap());
        let mgf = spec_map(&f.then(&g).unwrap()).unwrap();
        for &(p, q) in &mgf.points {
            prop_assert_eq!(mg.apply(p).and_then(|r| mf.apply(r)), Some(q));
        }
        let id = spec_map(&Adjunction::identity(x.clone())).unwrap();
        prop_assert!(id.points.iter().all(|&(p, q)| p == q));
    }
}

#[test]
fn radical_of_top_is_top() {
    let l = lattice(5, 7);
    assert_eq!(radical(&l, l.top()), l.top());
}
