//! JSON formats for lattices and morphisms.
//!
//! A lattice is `{"n": int, "leq": [[0|1; n]; n], "mult": [[int; n]; n]}`.
//! A morphism is `{"source": L, "target": L, "f": [int; n]}` where each `L`
//! is either an inline lattice or a string naming a lattice file.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, MorphismError};
use crate::lattice::MulLattice;
use crate::morphisms::{mk_adjunction, Adjunction};
use crate::order::{Elem, LatticeOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub n: usize,
    pub leq: Vec<Vec<u8>>,
    pub mult: Vec<Vec<Elem>>,
}

impl LatticeJson {
    pub fn from_lattice(l: &MulLattice) -> Self {
        LatticeJson {
            n: l.len(),
            leq: l
                .order()
                .leq_matrix()
                .into_iter()
                .map(|r| r.into_iter().map(u8::from).collect())
                .collect(),
            mult: l.mult_table(),
        }
    }

    /// Validates the order and then the multiplication.
    pub fn into_lattice(self) -> Result<MulLattice, LatticeError> {
        if self.leq.len() != self.n {
            return Err(LatticeError::Shape(format!(
                "n is {} but leq has {} rows",
                self.n,
                self.leq.len()
            )));
        }
        let mut rel = Vec::with_capacity(self.n);
        for row in &self.leq {
            let mut r = Vec::with_capacity(row.len());
            for &v in row {
                match v {
                    0 => r.push(false),
                    1 => r.push(true),
                    other => {
                        return Err(LatticeError::Shape(format!("leq entry {other} is not 0 or 1")))
                    }
                }
            }
            rel.push(r);
        }
        let order = LatticeOrder::validate(&rel)?;
        MulLattice::new(order, &self.mult)
    }
}

pub fn lattice_to_json(l: &MulLattice) -> String {
    serde_json::to_string(&LatticeJson::from_lattice(l)).expect("lattices always serialise")
}

pub fn lattice_from_json(s: &str) -> Result<MulLattice, LatticeError> {
    serde_json::from_str::<LatticeJson>(s)?.into_lattice()
}

/// An inline lattice or a reference to one stored elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Inline(LatticeJson),
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub source: LatticeRef,
    pub target: LatticeRef,
    pub f: Vec<Elem>,
}

impl MorphismJson {
    pub fn from_adjunction(adj: &Adjunction) -> Self {
        MorphismJson {
            source: LatticeRef::Inline(LatticeJson::from_lattice(adj.source())),
            target: LatticeRef::Inline(LatticeJson::from_lattice(adj.target())),
            f: adj.f_map().to_vec(),
        }
    }

    /// Builds the adjunction, resolving references with `load`.
    pub fn into_adjunction(
        self,
        load: impl Fn(&str) -> Result<MulLattice, LatticeError>,
    ) -> Result<Adjunction, MorphismError> {
        let resolve = |r: LatticeRef| match r {
            LatticeRef::Inline(j) => j.into_lattice(),
            LatticeRef::Ref(name) => load(&name),
        };
        let source = Arc::new(resolve(self.source)?);
        let target = Arc::new(resolve(self.target)?);
        mk_adjunction(source, target, self.f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::three_element_monoid;
    use crate::morphisms::radical_adjunction;

    #[test]
    fn lattice_round_trip() {
        let l = three_element_monoid();
        let s = lattice_to_json(&l);
        assert_eq!(
            s,
            r#"{"n":3,"leq":[[1,1,1],[0,1,1],[0,0,1]],"mult":[[0,0,0],[0,0,1],[0,1,2]]}"#
        );
        assert_eq!(lattice_from_json(&s).unwrap(), l);
    }

    #[test]
    fn malformed_lattices_rejected() {
        let bad_entry = r#"{"n":1,"leq":[[2]],"mult":[[0]]}"#;
        assert!(matches!(lattice_from_json(bad_entry), Err(LatticeError::Shape(_))));
        let bad_n = r#"{"n":2,"leq":[[1]],"mult":[[0]]}"#;
        assert!(matches!(lattice_from_json(bad_n), Err(LatticeError::Shape(_))));
        assert!(matches!(lattice_from_json("{"), Err(LatticeError::Json(_))));
        let axiom = r#"{"n":2,"leq":[[1,1],[0,1]],"mult":[[0,0],[1,1]]}"#;
        assert!(matches!(lattice_from_json(axiom), Err(LatticeError::AxiomViolation { .. })));
    }

    #[test]
    fn morphism_round_trip_and_refs() {
        let adj = radical_adjunction(Arc::new(three_element_monoid())).unwrap();
        let s = serde_json::to_string(&MorphismJson::from_adjunction(&adj)).unwrap();
        let back: MorphismJson = serde_json::from_str(&s).unwrap();
        let rebuilt = back.into_adjunction(|_| unreachable!()).unwrap();
        assert_eq!(rebuilt.f_map(), adj.f_map());

        let by_ref = MorphismJson {
            source: LatticeRef::Ref("l3".into()),
            target: LatticeRef::Ref("l3".into()),
            f: vec![0, 1, 2],
        };
        let id = by_ref.into_adjunction(|_| Ok(three_element_monoid())).unwrap();
        assert!(id.flags().strictly_compatible);
    }
}
