//! Finite algebras given by operation tables.

use serde::{Deserialize, Serialize};

use crate::error::InstanceError;

/// Carriers larger than this are rejected by every builder.
pub const CARRIER_CAP: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Group,
    Ring,
    Semiring,
    Semigroup,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Group => "group",
            AlgebraKind::Ring => "ring",
            AlgebraKind::Semiring => "semiring",
            AlgebraKind::Semigroup => "semigroup",
        }
    }
}

/// A finite algebra on `0..n`.
///
/// Groups use `mul` with an optional `one`; rings and semirings use `add`
/// and `mul` with `zero` (detected when omitted); semigroups use `mul` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTable {
    pub kind: AlgebraKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<usize>>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    /// Declared commutativity of `mul`; checked when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutative: Option<bool>,
}

fn fail(msg: impl Into<String>) -> InstanceError {
    InstanceError::AxiomFailure(msg.into())
}

fn check_table(name: &str, t: &[Vec<usize>], n: usize) -> Result<(), InstanceError> {
    if t.len() != n || t.iter().any(|r| r.len() != n) {
        return Err(fail(format!("{name} table must be {n}x{n}")));
    }
    if t.iter().flatten().any(|&v| v >= n) {
        return Err(fail(format!("{name} table has entries outside 0..{n}")));
    }
    Ok(())
}

fn check_associative(name: &str, t: &[Vec<usize>]) -> Result<(), InstanceError> {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return Err(fail(format!("{name} is not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(())
}

fn commutativity_witness(t: &[Vec<usize>]) -> Option<(usize, usize)> {
    let n = t.len();
    (0..n).flat_map(|a| (0..a).map(move |b| (a, b))).find(|&(a, b)| t[a][b] != t[b][a])
}

fn find_identity(t: &[Vec<usize>]) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&e| (0..n).all(|a| t[e][a] == a && t[a][e] == a))
}

fn check_identity(name: &str, t: &[Vec<usize>], e: usize) -> Result<(), InstanceError> {
    let n = t.len();
    if e >= n || (0..n).any(|a| t[e][a] != a || t[a][e] != a) {
        return Err(fail(format!("{e} is not an identity for {name}")));
    }
    Ok(())
}

fn resolve_identity(
    name: &str,
    t: &[Vec<usize>],
    declared: Option<usize>,
) -> Result<usize, InstanceError> {
    match declared {
        Some(e) => check_identity(name, t, e).map(|_| e),
        None => find_identity(t).ok_or_else(|| fail(format!("{name} has no identity"))),
    }
}

fn check_inverses(name: &str, t: &[Vec<usize>], e: usize) -> Result<(), InstanceError> {
    let n = t.len();
    match (0..n).find(|&a| !(0..n).any(|b| t[a][b] == e)) {
        Some(a) => Err(fail(format!("{a} has no inverse under {name}"))),
        None => Ok(()),
    }
}

impl AlgebraTable {
    pub fn group(mul: Vec<Vec<usize>>) -> Self {
        AlgebraTable {
            kind: AlgebraKind::Group,
            n: mul.len(),
            add: None,
            mul,
            zero: None,
            one: None,
            commutative: None,
        }
    }

    pub fn ring(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Self {
        AlgebraTable { kind: AlgebraKind::Ring, add: Some(add), ..Self::group(mul) }
    }

    pub fn semiring(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Self {
        AlgebraTable { kind: AlgebraKind::Semiring, add: Some(add), ..Self::group(mul) }
    }

    pub fn semigroup(mul: Vec<Vec<usize>>) -> Self {
        AlgebraTable { kind: AlgebraKind::Semigroup, ..Self::group(mul) }
    }

    pub fn from_json(s: &str) -> Result<Self, InstanceError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables always serialise")
    }

    pub fn is_commutative(&self) -> bool {
        commutativity_witness(&self.mul).is_none()
    }

    /// The additive table; empty for groups and semigroups.
    pub fn add_table(&self) -> &[Vec<usize>] {
        self.add.as_deref().unwrap_or(&[])
    }

    /// Checks every axiom of the declared kind and returns the distinguished
    /// element: the identity for groups, zero for rings and semirings, and
    /// `None` for semigroups.
    pub fn validate(&self) -> Result<Option<usize>, InstanceError> {
        let n = self.n;
        if n == 0 {
            return Err(fail("carrier is empty"));
        }
        if n > CARRIER_CAP {
            return Err(InstanceError::CapExceeded { size: n, cap: CARRIER_CAP });
        }
        check_table("mul", &self.mul, n)?;
        check_associative("mul", &self.mul)?;
        if self.commutative == Some(true) {
            if let Some((a, b)) = commutativity_witness(&self.mul) {
                return Err(InstanceError::NotCommutative(a, b));
            }
        }
        let needs_add = matches!(self.kind, AlgebraKind::Ring | AlgebraKind::Semiring);
        if needs_add != self.add.is_some() {
            return Err(fail(format!(
                "a {} table {} an add table",
                self.kind.name(),
                if needs_add { "needs" } else { "must not have" }
            )));
        }
        match self.kind {
            AlgebraKind::Semigroup => {
                if let Some((a, b)) = commutativity_witness(&self.mul) {
                    return Err(InstanceError::NotCommutative(a, b));
                }
                Ok(None)
            }
            AlgebraKind::Group => {
                let e = resolve_identity("mul", &self.mul, self.one)?;
                check_inverses("mul", &self.mul, e)?;
                Ok(Some(e))
            }
            AlgebraKind::Ring | AlgebraKind::Semiring => {
                let add = self.add_table();
                check_table("add", add, n)?;
                check_associative("add", add)?;
                if let Some((a, b)) = commutativity_witness(add) {
                    return Err(fail(format!("add is not commutative at ({a}, {b})")));
                }
                let zero = resolve_identity("add", add, self.zero)?;
                if let Some(one) = self.one {
                    check_identity("mul", &self.mul, one)?;
                }
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            let m = &self.mul;
                            if m[a][add[b][c]] != add[m[a][b]][m[a][c]]
                                || m[add[a][b]][c] != add[m[a][c]][m[b][c]]
                            {
                                return Err(fail(format!(
                                    "mul does not distribute over add at ({a}, {b}, {c})"
                                )));
                            }
                        }
                    }
                }
                if self.kind == AlgebraKind::Ring {
                    check_inverses("add", add, zero)?;
                } else {
                    if let Some((a, b)) = commutativity_witness(&self.mul) {
                        return Err(InstanceError::NotCommutative(a, b));
                    }
                    if let Some(a) = (0..n).find(|&a| self.mul[a][zero] != zero) {
                        return Err(fail(format!("{a} times zero is not zero")));
                    }
                }
                Ok(Some(zero))
            }
        }
    }
}
