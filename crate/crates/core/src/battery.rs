//! Named structural checks, each a list of clauses with their own
//! hypotheses, run against a single lattice.
//!
//! In strict mode a clause whose hypotheses fail is skipped. In forced mode
//! it runs anyway and a failure is reported as informational: a witness that
//! the hypothesis is needed, not a bug.

use std::cell::OnceCell;
use std::str::FromStr;

use crate::error::BatteryError;
use crate::lattice::{Condition, ConditionProfile, MulLattice};
use crate::order::Elem;
use crate::report::TheoremReport;
use crate::solvability::{
    derived_series, is_locally_solvable, non_solvable_core, solv_closure, stage_step,
    ClosureTables, DerivedSeries,
};
use crate::spectra::{
    has_enough_primes, is_locally_prime, is_prime, is_semiprime, primes, primes_between_check,
    radical_closure_report, radical_frame, radical_meet_report, sober_report, spec,
    v_identities_report,
};

/// Every check name, in the order the full battery runs them.
pub const CHECK_NAMES: [&str; 18] = [
    "sober_2_6",
    "v_identities",
    "radical_closure",
    "radical_meet",
    "radical_frame_3_5",
    "thm_3_6_consistency",
    "thm_5_7",
    "lemma_6_16",
    "thm_6_13",
    "thm_6_17",
    "thm_7_3",
    "thm_7_4",
    "thm_7_5",
    "cor_7_9_spectral",
    "sp_12_4",
    "between_12_5",
    "ring_prime_12_7",
    "closure_comparison",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HypothesisMode {
    /// Skip clauses whose hypotheses fail.
    #[default]
    Strict,
    /// Run every clause; failures under failed hypotheses are informational.
    Forced,
}

impl FromStr for HypothesisMode {
    type Err = BatteryError;

    fn from_str(s: &str) -> Result<Self, BatteryError> {
        match s {
            "strict" => Ok(HypothesisMode::Strict),
            "forced" => Ok(HypothesisMode::Forced),
            other => Err(BatteryError::UnknownMode(other.to_string())),
        }
    }
}

/// Which checks to run and how to treat hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatterySpec {
    checks: Vec<&'static str>,
    mode: HypothesisMode,
}

impl BatterySpec {
    pub fn all(mode: HypothesisMode) -> Self {
        BatterySpec { checks: CHECK_NAMES.to_vec(), mode }
    }

    /// Parses `all` or a comma-separated list of check names. Unknown names
    /// are rejected before anything runs.
    pub fn parse(list: &str, mode: HypothesisMode) -> Result<Self, BatteryError> {
        if list.trim() == "all" {
            return Ok(Self::all(mode));
        }
        let mut checks = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let known = CHECK_NAMES
                .iter()
                .find(|&&c| c == name)
                .ok_or_else(|| BatteryError::UnknownCheck(name.to_string()))?;
            checks.push(*known);
        }
        Ok(BatterySpec { checks, mode })
    }

    pub fn checks(&self) -> &[&'static str] {
        &self.checks
    }

    pub fn mode(&self) -> HypothesisMode {
        self.mode
    }
}

/// Runs every check in `spec`, in order.
pub fn run_battery(l: &MulLattice, spec: &BatterySpec) -> Vec<TheoremReport> {
    let ctx = Ctx::new(l);
    spec.checks.iter().map(|&name| run_in(&ctx, name, spec.mode)).collect()
}

/// Runs one check by name.
pub fn run_check(
    l: &MulLattice,
    name: &str,
    mode: HypothesisMode,
) -> Result<TheoremReport, BatteryError> {
    let known = CHECK_NAMES
        .iter()
        .find(|&&c| c == name)
        .ok_or_else(|| BatteryError::UnknownCheck(name.to_string()))?;
    Ok(run_in(&Ctx::new(l), known, mode))
}

/// A lattice with lazily computed data shared between checks.
struct Ctx<'a> {
    l: &'a MulLattice,
    profile: ConditionProfile,
    compact: Vec<bool>,
    tables: OnceCell<Result<ClosureTables, Vec<Elem>>>,
    series: OnceCell<Result<Vec<DerivedSeries>, Vec<Elem>>>,
}

type Witness = Option<Vec<Elem>>;

impl<'a> Ctx<'a> {
    fn new(l: &'a MulLattice) -> Self {
        let mut compact = vec![false; l.len()];
        for c in l.order().compact_elements() {
            compact[c] = true;
        }
        Ctx {
            l,
            profile: ConditionProfile::of(l),
            compact,
            tables: OnceCell::new(),
            series: OnceCell::new(),
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.l.elements().flat_map(move |x| self.l.elements().map(move |y| (x, y)))
    }

    /// Closure tables, or the element whose derived series failed to settle.
    fn tables(&self) -> Result<&ClosureTables, Vec<Elem>> {
        self.tables
            .get_or_init(|| {
                ClosureTables::compute(self.l).map_err(|e| match e {
                    crate::error::SolvabilityError::NonStabilizing { base, .. } => vec![base],
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn series(&self) -> Result<&[DerivedSeries], Vec<Elem>> {
        self.series
            .get_or_init(|| {
                self.l
                    .elements()
                    .map(|x| derived_series(self.l, x).map_err(|_| vec![x]))
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    fn solvable(&self, x: Elem, y: Elem) -> Result<bool, Vec<Elem>> {
        Ok(self.series()?[x].terms.iter().any(|&t| self.l.leq(t, y)))
    }
}

/// Runs `body`, turning an unsettled derived series into a witness.
fn guarded(body: impl FnOnce() -> Result<Witness, Vec<Elem>>) -> Witness {
    body().unwrap_or_else(Some)
}

struct Clause<'c> {
    label: &'static str,
    hyps: &'static [Condition],
    run: Box<dyn Fn(&Ctx) -> Witness + 'c>,
}

fn clause<'c>(
    label: &'static str,
    hyps: &'static [Condition],
    run: impl Fn(&Ctx) -> Witness + 'c,
) -> Clause<'c> {
    Clause { label, hyps, run: Box::new(run) }
}

fn from_report(r: TheoremReport) -> Witness {
    (!r.pass).then(|| r.witness.unwrap_or_default())
}

use Condition::{
    AlgebraicLattice as Alg, CompactLattice as Cpt, Distributive as Dist, Kaplansky as Kap,
    Monotone as Mono, WeakKaplansky as WK, WeaklyMonotone as WM,
};

fn clauses(name: &str) -> Vec<Clause<'static>> {
    match name {
        "sober_2_6" => vec![clause("", &[], |c| from_report(sober_report(c.l)))],
        "v_identities" => vec![clause("", &[], |c| from_report(v_identities_report(c.l)))],
        "radical_closure" => vec![clause("", &[], |c| from_report(radical_closure_report(c.l)))],
        "radical_meet" => vec![clause("", &[], |c| from_report(radical_meet_report(c.l)))],
        "radical_frame_3_5" => vec![clause("", &[], radical_frame_clause)],
        "thm_3_6_consistency" => vec![clause("", &[], spectral_consistency_clause)],
        "thm_5_7" => vec![
            clause("enough_primes_force_unit_square", &[], |c| {
                (has_enough_primes(c.l) && !c.profile.unit_idempotent).then(Vec::new)
            }),
            clause("enough_primes_iff_maximal_prime", &[Cpt], |c| {
                let maximal_prime =
                    c.l.order().maximal_elements().into_iter().all(|m| is_prime(c.l, m));
                (has_enough_primes(c.l) != maximal_prime).then(Vec::new)
            }),
            clause("enough_primes_iff_unit_square", &[Cpt, Dist], |c| {
                (has_enough_primes(c.l) != c.profile.unit_idempotent).then(Vec::new)
            }),
        ],
        "lemma_6_16" => vec![clause("", &[Mono, Alg], |c| {
            c.l.elements()
                .find(|&p| is_prime(c.l, p) != is_locally_prime(c.l, p))
                .map(|p| vec![p])
        })],
        "thm_6_13" => solvability_clauses(),
        "thm_6_17" => vec![
            clause("compact_below_radical_is_locally_solvable", &[Dist], |c| {
                let t = c.tables().ok()?;
                c.pairs()
                    .find(|&(x, y)| {
                        c.compact[x] && c.l.leq(x, t.radical[y]) && !is_locally_solvable(c.l, x, y)
                    })
                    .map(|(x, y)| vec![x, y])
            }),
            clause("radical_equals_local_solvability", &[Dist, Alg], |c| {
                guarded(|| {
                    let t = c.tables()?;
                    Ok(c.l.elements().find(|&y| t.radical[y] != t.loc_solv[y]).map(|y| vec![y]))
                })
            }),
        ],
        "thm_7_3" => tower_clauses(),
        "thm_7_4" => vec![
            clause("derived_below_implies_below_stage", &[], |c| {
                guarded(|| {
                    let series = c.series()?;
                    let towers: Vec<_> = c.l.elements().map(|y| solv_closure(c.l, y)).collect();
                    let horizon = 2 * c.l.len();
                    for (x, y) in c.pairs() {
                        for n in 0..=horizon {
                            if c.l.leq(series[x].term(n), y) && !c.l.leq(x, towers[y].stage(n)) {
                                return Ok(Some(vec![x, y, n]));
                            }
                        }
                    }
                    Ok(None)
                })
            }),
            clause("solv_below_big_solv", &[], |c| {
                guarded(|| {
                    let t = c.tables()?;
                    Ok(c.l
                        .elements()
                        .find(|&y| !c.l.leq(t.solv[y], t.big_solv[y]))
                        .map(|y| vec![y]))
                })
            }),
            clause("all_closures_agree", &[Alg, Dist, WK], |c| {
                guarded(|| {
                    let t = c.tables()?;
                    Ok(c.l
                        .elements()
                        .find(|&y| {
                            let r = t.radical[y];
                            t.big_solv[y] != r || t.solv[y] != r || t.loc_solv[y] != r
                        })
                        .map(|y| vec![y]))
                })
            }),
        ],
        "thm_7_5" => vec![clause("preserves_directed_joins", &[Alg, WM, WK], directed_join_clause)],
        "cor_7_9_spectral" => vec![clause("", &[Cpt, Alg, Dist, Kap], |c| {
            (!spec(c.l).topology_report().spectral).then(Vec::new)
        })],
        "sp_12_4" => semiprime_clauses(),
        "between_12_5" => vec![clause("", &[], |c| from_report(primes_between_check(c.l)))],
        "ring_prime_12_7" => vec![clause("", &[Mono], |c| {
            let com = c.l.commutativized();
            c.l.elements().find(|&p| is_prime(c.l, p) != is_prime(&com, p)).map(|p| vec![p])
        })],
        "closure_comparison" => vec![clause("", &[], |c| {
            from_report(crate::solvability::closure_comparison(c.l))
        })],
        _ => unreachable!("check names are validated before dispatch"),
    }
}

fn radical_frame_clause(c: &Ctx) -> Witness {
    let frame = match radical_frame(c.l) {
        Ok(f) => f,
        Err(_) => return Some(vec![]),
    };
    let fl = frame.as_mul_lattice();
    // Same primes, and the same closed sets once frame indices are mapped back.
    let mapped: Vec<Elem> = primes(fl).into_iter().map(|i| frame.element(i)).collect();
    let ours = primes(c.l);
    if mapped != ours {
        return Some(ours.into_iter().filter(|p| !mapped.contains(p)).collect());
    }
    let (s, fs) = (spec(c.l), spec(fl));
    for i in fl.elements() {
        let v: Vec<Elem> = fs.v(i).iter().map(|&q| frame.element(q)).collect();
        if v != s.v(frame.element(i)).iter().copied().collect::<Vec<_>>() {
            return Some(vec![frame.element(i)]);
        }
    }
    None
}

/// The space is spectral iff the frame of radicals is compact, algebraic
/// and has compact elements closed under binary meets.
fn spectral_consistency_clause(c: &Ctx) -> Witness {
    let frame = match radical_frame(c.l) {
        Ok(f) => f,
        Err(_) => return Some(vec![]),
    };
    let order = frame.as_mul_lattice().order();
    let compact = order.compact_elements();
    let meets_closed =
        compact.iter().all(|&a| compact.iter().all(|&b| compact.contains(&order.meet(a, b))));
    let frame_side = order.is_compact() && order.is_algebraic() && meets_closed;
    (spec(c.l).topology_report().spectral != frame_side).then(Vec::new)
}

fn solvability_clauses() -> Vec<Clause<'static>> {
    vec![
        clause("solvable_below_radical", &[], |c| {
            guarded(|| {
                let t = c.tables()?;
                for (x, y) in c.pairs() {
                    if c.solvable(x, y)? && !c.l.leq(x, t.radical[y]) {
                        return Ok(Some(vec![x, y]));
                    }
                }
                Ok(None)
            })
        }),
        clause("solvable_downward_closed", &[WM], |c| {
            guarded(|| {
                for (x, y) in c.pairs().filter(|&(x, y)| c.l.leq(x, y)) {
                    for z in c.l.elements() {
                        if c.solvable(y, z)? && !c.solvable(x, z)? {
                            return Ok(Some(vec![x, y, z]));
                        }
                    }
                }
                Ok(None)
            })
        }),
        clause("solvable_transitive", &[WM], |c| {
            guarded(|| {
                for (x, y) in c.pairs() {
                    for z in c.l.elements() {
                        if c.solvable(x, y)? && c.solvable(y, z)? && !c.solvable(x, z)? {
                            return Ok(Some(vec![x, y, z]));
                        }
                    }
                }
                Ok(None)
            })
        }),
        clause("join_series_bound", &[Dist], |c| {
            guarded(|| {
                let s = c.series()?;
                let horizon = c.l.len();
                for (x, y) in c.pairs() {
                    let xy = c.l.join(x, y);
                    for n in 0..=horizon {
                        let bound = c.l.join(s[x].term(n), s[y].term(n));
                        if !c.l.leq(s[xy].term(2 * n), bound) {
                            return Ok(Some(vec![x, y, n]));
                        }
                    }
                }
                Ok(None)
            })
        }),
        clause("solv_is_solvable", &[Dist], |c| {
            guarded(|| {
                let t = c.tables()?;
                for y in c.l.elements() {
                    if !c.solvable(t.solv[y], y)? {
                        return Ok(Some(vec![y]));
                    }
                }
                Ok(None)
            })
        }),
        clause("locally_solvable_downward_closed", &[], |c| {
            c.l.elements().find_map(|y| {
                let core = non_solvable_core(c.l, y);
                let local = |x: Elem| !c.l.elements().any(|d| core[d] && c.l.leq(d, x));
                c.pairs()
                    .find(|&(x, x2)| c.l.leq(x2, x) && local(x) && !local(x2))
                    .map(|(x, x2)| vec![x, x2, y])
            })
        }),
        clause("loc_solv_below_radical", &[Alg], |c| {
            guarded(|| {
                let t = c.tables()?;
                Ok(c.l
                    .elements()
                    .find(|&y| !c.l.leq(t.loc_solv[y], t.radical[y]))
                    .map(|y| vec![y]))
            })
        }),
        clause("solvable_implies_locally_solvable", &[WM], |c| {
            guarded(|| {
                for (x, y) in c.pairs() {
                    if c.solvable(x, y)? && !is_locally_solvable(c.l, x, y) {
                        return Ok(Some(vec![x, y]));
                    }
                }
                Ok(None)
            })
        }),
        clause("compact_locally_solvable_is_solvable", &[WK], |c| {
            guarded(|| {
                for (x, y) in c.pairs().filter(|&(x, _)| c.compact[x]) {
                    if is_locally_solvable(c.l, x, y) && !c.solvable(x, y)? {
                        return Ok(Some(vec![x, y]));
                    }
                }
                Ok(None)
            })
        }),
        clause("loc_solv_equals_solv", &[Alg, WM, WK], |c| {
            guarded(|| {
                let t = c.tables()?;
                Ok(c.l.elements().find(|&y| t.loc_solv[y] != t.solv[y]).map(|y| vec![y]))
            })
        }),
    ]
}

fn tower_clauses() -> Vec<Clause<'static>> {
    vec![
        clause("closure_operator_below_radical", &[], |c| {
            guarded(|| {
                let t = c.tables()?;
                let big = &t.big_solv;
                for x in c.l.elements() {
                    if !c.l.leq(x, big[x]) || big[big[x]] != big[x] || !c.l.leq(big[x], t.radical[x])
                    {
                        return Ok(Some(vec![x]));
                    }
                    for y in c.l.elements().filter(|&y| c.l.leq(x, y)) {
                        if !c.l.leq(big[x], big[y]) {
                            return Ok(Some(vec![x, y]));
                        }
                    }
                }
                Ok(None)
            })
        }),
        clause("stage_is_join_over_compacts", &[Alg, WM], |c| {
            c.l.elements()
                .find(|&x| {
                    let over_compacts = c.l.join_all(
                        c.l.elements().filter(|&k| c.compact[k] && c.l.leq(c.l.square(k), x)),
                    );
                    stage_step(c.l, x) != over_compacts
                })
                .map(|x| vec![x])
        }),
        clause("tower_settles_at_finite_stage", &[Alg, WM, WK], |c| {
            c.l.elements()
                .find(|&x| {
                    let t = solv_closure(c.l, x);
                    stage_step(c.l, t.limit) != t.limit
                        || c.l.join_all(t.stages.iter().copied()) != t.limit
                })
                .map(|x| vec![x])
        }),
    ]
}

/// The stage map and the tower limit both send the join of a directed set
/// to the join of the images. Above the directed-subset search limit, pairs
/// `x ≤ y` are used as directed sets.
fn directed_join_clause(c: &Ctx) -> Witness {
    let families: Vec<Vec<Elem>> = c.l.order().directed_subsets().unwrap_or_else(|| {
        c.pairs().filter(|&(x, y)| c.l.leq(x, y)).map(|(x, y)| vec![x, y]).collect()
    });
    let limit: Vec<Elem> = c.l.elements().map(|x| solv_closure(c.l, x).limit).collect();
    for s in families {
        let j = c.l.join_all(s.iter().copied());
        let stage_ok = stage_step(c.l, j) == c.l.join_all(s.iter().map(|&x| stage_step(c.l, x)));
        let limit_ok = limit[j] == c.l.join_all(s.iter().map(|&x| limit[x]));
        if !stage_ok || !limit_ok {
            return Some(s);
        }
    }
    None
}

fn semiprime_clauses() -> Vec<Clause<'static>> {
    vec![
        clause("closure_operator", &[], |c| {
            guarded(|| {
                let sp = &c.tables()?.sp;
                for x in c.l.elements() {
                    if !c.l.leq(x, sp[x]) || sp[sp[x]] != sp[x] || !is_semiprime(c.l, sp[x]) {
                        return Ok(Some(vec![x]));
                    }
                    for y in c.l.elements().filter(|&y| c.l.leq(x, y)) {
                        if !c.l.leq(sp[x], sp[y]) {
                            return Ok(Some(vec![x, y]));
                        }
                    }
                }
                Ok(None)
            })
        }),
        clause("primes_are_semiprime", &[], |c| {
            primes(c.l).into_iter().find(|&p| !is_semiprime(c.l, p)).map(|p| vec![p])
        }),
        clause("big_solv_below_sp_below_radical", &[], |c| {
            guarded(|| {
                let t = c.tables()?;
                Ok(c.l
                    .elements()
                    .find(|&y| !c.l.leq(t.big_solv[y], t.sp[y]) || !c.l.leq(t.sp[y], t.radical[y]))
                    .map(|y| vec![y]))
            })
        }),
        clause("meet_of_semiprimes_equals_iterated_closure", &[], |c| {
            guarded(|| {
                let t = c.tables()?;
                Ok(c.l.elements().find(|&y| t.sp[y] != t.big_solv[y]).map(|y| vec![y]))
            })
        }),
        clause("sp_equals_radical", &[Dist], |c| {
            guarded(|| {
                let t = c.tables()?;
                Ok(c.l.elements().find(|&y| t.sp[y] != t.radical[y]).map(|y| vec![y]))
            })
        }),
    ]
}

fn hypothesis_names(missing: &[Condition]) -> String {
    missing.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
}

fn run_in(ctx: &Ctx, name: &'static str, mode: HypothesisMode) -> TheoremReport {
    let title = |label: &str| {
        if label.is_empty() {
            name.to_string()
        } else {
            format!("{name}/{label}")
        }
    };
    let mut informational: Option<TheoremReport> = None;
    let mut unmet: Vec<Condition> = Vec::new();
    let mut applicable = 0;
    for cl in clauses(name) {
        let missing: Vec<Condition> =
            cl.hyps.iter().copied().filter(|&h| !ctx.profile.get(h)).collect();
        if missing.is_empty() {
            applicable += 1;
        } else {
            for m in &missing {
                if !unmet.contains(m) {
                    unmet.push(*m);
                }
            }
            if mode == HypothesisMode::Strict {
                continue;
            }
        }
        if let Some(w) = (cl.run)(ctx) {
            let report = TheoremReport::fail(title(cl.label), w);
            if missing.is_empty() {
                return report;
            }
            informational.get_or_insert_with(|| {
                report.into_informational(format!("without {}", hypothesis_names(&missing)))
            });
        }
    }
    if let Some(r) = informational {
        return r;
    }
    if applicable == 0 {
        let reason = format!("hypothesis fails: {}", hypothesis_names(&unmet));
        return match mode {
            HypothesisMode::Strict => TheoremReport::skipped(name, reason),
            HypothesisMode::Forced => TheoremReport::pass(name).into_informational(reason),
        };
    }
    TheoremReport::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::three_element_monoid;
    use crate::order::LatticeOrder;

    #[test]
    fn monoid_passes_everything() {
        let l = three_element_monoid();
        for r in run_battery(&l, &BatterySpec::all(HypothesisMode::Strict)) {
            assert!(r.pass && !r.is_skipped(), "{r:?}");
        }
    }

    #[test]
    fn zero_product_chain() {
        let l = MulLattice::with_zero_product(LatticeOrder::chain(3).unwrap());
        let spec = BatterySpec::parse("sober_2_6,thm_5_7", HypothesisMode::Strict).unwrap();
        let reports = run_battery(&l, &spec);
        assert!(reports.iter().all(|r| r.pass && !r.is_skipped()), "{reports:?}");
    }

    #[test]
    fn unknown_names_rejected() {
        assert_eq!(
            BatterySpec::parse("sober_2_6,nope", HypothesisMode::Strict),
            Err(BatteryError::UnknownCheck("nope".into()))
        );
        assert!("lenient".parse::<HypothesisMode>().is_err());
        assert!(run_check(&three_element_monoid(), "nope", HypothesisMode::Strict).is_err());
    }

    #[test]
    fn strict_skips_and_forced_runs() {
        // 2x2 boolean lattice, one-sided product: not monotone in general.
        let order = LatticeOrder::from_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap();
        let mut mult = vec![vec![0; 4]; 4];
        mult[3][1] = 1;
        let l = MulLattice::new(order, &mult).unwrap();
        assert!(!l.condition_profile().unit_idempotent);
        let strict = run_check(&l, "cor_7_9_spectral", HypothesisMode::Strict).unwrap();
        assert!(strict.is_skipped());
        let forced = run_check(&l, "cor_7_9_spectral", HypothesisMode::Forced).unwrap();
        assert!(!forced.is_skipped() && !forced.is_failure());
    }

    #[test]
    fn reports_are_deterministic() {
        let l = three_element_monoid();
        let spec = BatterySpec::all(HypothesisMode::Forced);
        assert_eq!(run_battery(&l, &spec), run_battery(&l, &spec));
    }
}
