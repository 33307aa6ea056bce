//! Finite topological spaces presented by their closed sets, and exact
//! decision procedures for the separation and coherence properties used on
//! prime spectra.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::order::Elem;

/// A set of points, labelled by lattice elements.
pub type PointSet = BTreeSet<Elem>;

/// Open families with at most this many members are searched exhaustively
/// for directed covers when deciding compactness of an open set.
pub const COVER_SEARCH_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("closed set {0:?} contains points outside the space")]
    StrayPoint(Vec<Elem>),
    #[error("the empty set is not closed")]
    MissingEmpty,
    #[error("the whole space is not closed")]
    MissingWhole,
    #[error("union of closed sets {0:?} and {1:?} is not closed")]
    NotClosedUnderUnion(Vec<Elem>, Vec<Elem>),
    #[error("intersection of closed sets {0:?} and {1:?} is not closed")]
    NotClosedUnderIntersection(Vec<Elem>, Vec<Elem>),
}

/// A finite topological space given by its family of closed sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    points: PointSet,
    closed: BTreeSet<PointSet>,
}

impl FiniteSpace {
    /// Checks the closed-set axioms. On a finite space, closure under
    /// binary unions and intersections covers every finite and arbitrary case.
    pub fn new(
        points: impl IntoIterator<Item = Elem>,
        closed: impl IntoIterator<Item = PointSet>,
    ) -> Result<Self, TopologyError> {
        let points: PointSet = points.into_iter().collect();
        let closed: BTreeSet<PointSet> = closed.into_iter().collect();
        if let Some(c) = closed.iter().find(|c| !c.is_subset(&points)) {
            return Err(TopologyError::StrayPoint(c.iter().copied().collect()));
        }
        if !closed.contains(&PointSet::new()) {
            return Err(TopologyError::MissingEmpty);
        }
        if !closed.contains(&points) {
            return Err(TopologyError::MissingWhole);
        }
        for a in &closed {
            for b in &closed {
                let v = |s: &PointSet| s.iter().copied().collect::<Vec<_>>();
                if !closed.contains(&(a | b)) {
                    return Err(TopologyError::NotClosedUnderUnion(v(a), v(b)));
                }
                if !closed.contains(&(a & b)) {
                    return Err(TopologyError::NotClosedUnderIntersection(v(a), v(b)));
                }
            }
        }
        Ok(FiniteSpace { points, closed })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn closed_sets(&self) -> &BTreeSet<PointSet> {
        &self.closed
    }

    pub fn open_sets(&self) -> BTreeSet<PointSet> {
        self.closed.iter().map(|c| &self.points - c).collect()
    }

    /// Smallest closed set containing `p`.
    pub fn closure_of_point(&self, p: Elem) -> PointSet {
        self.closed
            .iter()
            .filter(|c| c.contains(&p))
            .fold(self.points.clone(), |acc, c| &acc & c)
    }

    /// Nonempty closed sets that are not the union of two closed proper subsets.
    pub fn irreducible_closed_sets(&self) -> Vec<PointSet> {
        self.closed
            .iter()
            .filter(|c| !c.is_empty())
            .filter(|c| {
                self.closed.iter().all(|a| {
                    self.closed.iter().all(|b| {
                        let covered = c.is_subset(&(a | b));
                        !covered || c.is_subset(a) || c.is_subset(b)
                    })
                })
            })
            .cloned()
            .collect()
    }

    /// Compact open sets: `U` such that every directed family of opens whose
    /// union contains `U` has a member containing `U`.
    ///
    /// Families of opens are searched exhaustively up to
    /// [`COVER_SEARCH_LIMIT`] open sets. Beyond that every open is reported,
    /// matching what the search finds on any finite space.
    pub fn compact_open_sets(&self) -> Vec<PointSet> {
        let opens: Vec<PointSet> = self.open_sets().into_iter().collect();
        let k = opens.len();
        let mut compact = vec![true; k];
        if k <= COVER_SEARCH_LIMIT {
            for mask in 1u32..(1u32 << k) {
                let family: Vec<&PointSet> =
                    (0..k).filter(|i| mask & (1 << i) != 0).map(|i| &opens[i]).collect();
                let directed = family.iter().all(|a| {
                    family
                        .iter()
                        .all(|b| family.iter().any(|c| a.is_subset(c) && b.is_subset(c)))
                });
                if !directed {
                    continue;
                }
                let union: PointSet = family.iter().flat_map(|s| s.iter().copied()).collect();
                for (i, u) in opens.iter().enumerate() {
                    if compact[i] && u.is_subset(&union) && !family.iter().any(|s| u.is_subset(s))
                    {
                        compact[i] = false;
                    }
                }
            }
        }
        opens.into_iter().zip(compact).filter(|(_, c)| *c).map(|(u, _)| u).collect()
    }

    /// Decides every reported property exactly.
    pub fn report(&self) -> TopologyReport {
        let pts: Vec<Elem> = self.points.iter().copied().collect();
        let closures: Vec<PointSet> = pts.iter().map(|&p| self.closure_of_point(p)).collect();
        let t0 = (0..pts.len()).all(|i| (0..i).all(|j| closures[i] != closures[j]));

        let irreducible_closed = self.irreducible_closed_sets();
        let generic_points: Vec<Option<Elem>> = irreducible_closed
            .iter()
            .map(|c| {
                let gens: Vec<Elem> =
                    pts.iter().zip(&closures).filter(|(_, cl)| *cl == c).map(|(&p, _)| p).collect();
                (gens.len() == 1).then(|| gens[0])
            })
            .collect();
        let sober = t0 && generic_points.iter().all(Option::is_some);

        let opens = self.open_sets();
        let compact_opens = self.compact_open_sets();
        let compact = compact_opens.contains(&self.points);
        let compact_basis = opens.iter().all(|u| {
            let inside: PointSet = compact_opens
                .iter()
                .filter(|k| k.is_subset(u))
                .flat_map(|k| k.iter().copied())
                .collect();
            &inside == u
        });
        let compact_opens_closed_under_intersection = compact_opens
            .iter()
            .all(|a| compact_opens.iter().all(|b| compact_opens.contains(&(a & b))));
        let spectral = sober && compact && compact_basis && compact_opens_closed_under_intersection;

        TopologyReport {
            t0,
            sober,
            compact,
            spectral,
            compact_basis,
            compact_opens_closed_under_intersection,
            irreducible_closed,
            generic_points,
            compact_opens,
        }
    }
}

/// Separation and coherence properties of a finite space.
///
/// `generic_points[i]` is the unique point whose closure is
/// `irreducible_closed[i]`, when there is exactly one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub t0: bool,
    pub sober: bool,
    pub compact: bool,
    pub spectral: bool,
    pub compact_basis: bool,
    pub compact_opens_closed_under_intersection: bool,
    pub irreducible_closed: Vec<PointSet>,
    pub generic_points: Vec<Option<Elem>>,
    pub compact_opens: Vec<PointSet>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Elem]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn indiscrete_two_points_is_not_t0() {
        let s = FiniteSpace::new([0, 1], [set(&[]), set(&[0, 1])]).unwrap();
        let r = s.report();
        assert!(!r.t0);
        assert!(!r.sober);
        assert_eq!(r.irreducible_closed, vec![set(&[0, 1])]);
        assert_eq!(r.generic_points, vec![None]);
    }

    #[test]
    fn discrete_and_sierpinski_spaces_are_spectral() {
        let discrete =
            FiniteSpace::new([3, 7], [set(&[]), set(&[3]), set(&[7]), set(&[3, 7])]).unwrap();
        let r = discrete.report();
        assert!(r.t0 && r.sober && r.compact && r.spectral);
        let sierpinski = FiniteSpace::new([0, 1], [set(&[]), set(&[1]), set(&[0, 1])]).unwrap();
        let r = sierpinski.report();
        assert!(r.sober && r.spectral);
        assert_eq!(sierpinski.closure_of_point(0), set(&[0, 1]));
        assert_eq!(sierpinski.closure_of_point(1), set(&[1]));
    }

    #[test]
    fn empty_space() {
        let r = FiniteSpace::new([], [set(&[])]).unwrap().report();
        assert!(r.t0 && r.sober && r.compact && r.spectral);
        assert!(r.irreducible_closed.is_empty());
    }

    #[test]
    fn rejects_non_topologies() {
        assert_eq!(FiniteSpace::new([0], [set(&[0])]), Err(TopologyError::MissingEmpty));
        assert_eq!(FiniteSpace::new([0], [set(&[])]), Err(TopologyError::MissingWhole));
        assert!(matches!(
            FiniteSpace::new([0, 1, 2], [set(&[]), set(&[0]), set(&[1]), set(&[0, 1, 2])]),
            Err(TopologyError::NotClosedUnderUnion(..))
        ));
        assert!(matches!(
            FiniteSpace::new([0, 1], [set(&[]), set(&[5]), set(&[0, 1])]),
            Err(TopologyError::StrayPoint(_))
        ));
    }

    #[test]
    fn three_point_non_sober_space() {
        // Points 0 and 1 have the same closure.
        let s = FiniteSpace::new([0, 1, 2], [set(&[]), set(&[0, 1]), set(&[0, 1, 2])]).unwrap();
        let r = s.report();
        assert!(!r.t0 && !r.sober);
    }
}
