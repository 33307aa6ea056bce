//! Normal subgroups of a finite group, multiplied by the commutator.

use super::{bit, build_instance, close_under_join, members_of, saturate, Bits, Instance};
use crate::error::InstanceError;
use crate::instances::algebra::{AlgebraKind, AlgebraTable};

struct Group<'a> {
    mul: &'a [Vec<usize>],
    inv: Vec<usize>,
    e: usize,
    all: Bits,
}

impl<'a> Group<'a> {
    fn new(g: &'a AlgebraTable) -> Result<Self, InstanceError> {
        if g.kind != AlgebraKind::Group {
            return Err(InstanceError::WrongKind { expected: "group", got: g.kind.name() });
        }
        let e = g.validate()?.expect("groups have an identity");
        let n = g.n;
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| g.mul[a][b] == e).expect("inverses checked"))
            .collect();
        let all = (0..n).fold(0, |acc, a| acc | bit(a));
        Ok(Group { mul: &g.mul, inv, e, all })
    }

    /// Subgroup generated by `s`: the closure of `{e}` under right
    /// multiplication by generators, which suffices in a finite group.
    fn generated(&self, s: Bits) -> Bits {
        saturate(bit(self.e), |cur| {
            let mut out = 0;
            for a in members_of(cur) {
                for g in members_of(s) {
                    out |= bit(self.mul[a][g]);
                }
            }
            out
        })
    }

    fn conjugates(&self, s: Bits) -> Bits {
        let mut out = 0;
        for a in members_of(s) {
            for g in members_of(self.all) {
                out |= bit(self.mul[self.mul[self.inv[g]][a]][g]);
            }
        }
        out
    }

    fn normal_closure(&self, s: Bits) -> Bits {
        self.generated(self.conjugates(s))
    }

    fn is_normal(&self, h: Bits) -> bool {
        self.conjugates(h) == h
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    fn commutator(&self, a: usize, b: usize) -> usize {
        let m = self.mul;
        m[m[m[self.inv[a]][self.inv[b]]][a]][b]
    }

    /// Subgroup generated by all `[a, b]` with `a ∈ x`, `b ∈ y`.
    fn commutator_of(&self, x: Bits, y: Bits) -> Bits {
        let mut gens = 0;
        for a in members_of(x) {
            for b in members_of(y) {
                gens |= bit(self.commutator(a, b));
            }
        }
        self.generated(gens)
    }
}

/// Normal subgroups ordered by inclusion, multiplied by `[X, Y]`.
///
/// Normal subgroups are enumerated as joins of normal closures of single
/// elements. Normality of every commutator is checked, not assumed.
pub fn group_normal_lattice(g: &AlgebraTable) -> Result<Instance, InstanceError> {
    let grp = Group::new(g)?;
    let closures: Vec<Bits> = members_of(grp.all).map(|a| grp.normal_closure(bit(a))).collect();
    let sets = close_under_join(bit(grp.e), closures, |x, y| grp.generated(x | y));
    if let Some(&h) = sets.iter().find(|&&h| !grp.is_normal(h)) {
        return Err(InstanceError::Postcondition(format!(
            "join {:?} is not normal",
            members_of(h).collect::<Vec<_>>()
        )));
    }
    let mut bad = None;
    let inst = build_instance(sets, |x, y| {
        let c = grp.commutator_of(x, y);
        if !grp.is_normal(c) {
            bad.get_or_insert(c);
        }
        c
    })?;
    if let Some(c) = bad {
        return Err(InstanceError::Postcondition(format!(
            "commutator {:?} is not normal",
            members_of(c).collect::<Vec<_>>()
        )));
    }
    Ok(inst)
}

/// The derived subgroup `[G, G]`, sorted.
pub fn commutator_subgroup(g: &AlgebraTable) -> Result<Vec<usize>, InstanceError> {
    let grp = Group::new(g)?;
    Ok(members_of(grp.commutator_of(grp.all, grp.all)).collect())
}

/// `[G, G] = G`.
pub fn is_perfect(g: &AlgebraTable) -> Result<bool, InstanceError> {
    Ok(commutator_subgroup(g)?.len() == g.n)
}
