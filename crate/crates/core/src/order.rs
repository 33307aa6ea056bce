//! Finite lattice orders given by an explicit order relation.
//!
//! Elements are the indices `0..n`. Bottom and top are detected from the
//! relation rather than fixed positionally, so instance builders are free to
//! label elements however they like.

use std::fmt::Write as _;

use crate::error::LatticeError;

/// An element of a finite lattice, identified by its index.
pub type Elem = usize;

/// Subsets of at most this many elements are searched exhaustively when
/// deciding compactness and join-inaccessibility from directed subsets.
pub const DIRECTED_SEARCH_LIMIT: usize = 12;

/// Which partial-order axiom a relation fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl std::fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        };
        f.write_str(name)
    }
}

/// A finite complete lattice, fully tabulated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeOrder {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl LatticeOrder {
    /// Validates `leq` as a lattice order and tabulates meets and joins by
    /// exhaustive bound search.
    pub fn validate(leq: &[Vec<bool>]) -> Result<Self, LatticeError> {
        let n = leq.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if let Some(row) = leq.iter().position(|r| r.len() != n) {
            return Err(LatticeError::Shape(format!(
                "leq row {row} has length {}, expected {n}",
                leq[row].len()
            )));
        }
        Self::from_fn(n, |x, y| leq[x][y])
    }

    /// Same as [`LatticeOrder::validate`] with the relation given as a predicate.
    pub fn from_fn(n: usize, le: impl Fn(Elem, Elem) -> bool) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut rel = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                rel[x * n + y] = le(x, y);
            }
        }
        let r = |x: Elem, y: Elem| rel[x * n + y];
        for x in 0..n {
            if !r(x, x) {
                return Err(LatticeError::NotAPartialOrder {
                    axiom: OrderAxiom::Reflexivity,
                    witness: vec![x],
                });
            }
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if r(x, y) && r(y, x) {
                    return Err(LatticeError::NotAPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        witness: vec![x, y],
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !r(x, y) {
                    continue;
                }
                for z in 0..n {
                    if r(y, z) && !r(x, z) {
                        return Err(LatticeError::NotAPartialOrder {
                            axiom: OrderAxiom::Transitivity,
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let glb = (0..n)
                    .filter(|&z| r(z, x) && r(z, y))
                    .find(|&g| (0..n).all(|z| !(r(z, x) && r(z, y)) || r(z, g)))
                    .ok_or(LatticeError::NotALattice { x, y, missing: "meet" })?;
                let lub = (0..n)
                    .filter(|&z| r(x, z) && r(y, z))
                    .find(|&l| (0..n).all(|z| !(r(x, z) && r(y, z)) || r(l, z)))
                    .ok_or(LatticeError::NotALattice { x, y, missing: "join" })?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| r(b, x)));
        let top = (0..n).find(|&t| (0..n).all(|x| r(x, t)));
        // Binary meets and joins in a nonempty finite poset already force
        // both bounds to exist.
        let (bottom, top) = match (bottom, top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(LatticeError::NotALattice { x: 0, y: 0, missing: "bound" }),
        };
        Ok(LatticeOrder { n, leq: rel, meet, join, bottom, top })
    }

    /// The `k`-element chain `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Result<Self, LatticeError> {
        Self::from_fn(k, |x, y| x <= y)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n + y]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// Join of an arbitrary family; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of an arbitrary family; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn down_set(&self, x: Elem) -> Vec<Elem> {
        self.elements().filter(|&y| self.leq(y, x)).collect()
    }

    pub fn up_set(&self, x: Elem) -> Vec<Elem> {
        self.elements().filter(|&y| self.leq(x, y)).collect()
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.lt(x, y) && !self.elements().any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The relation as a row-major 0/1 matrix.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.leq(x, y)).collect()).collect()
    }

    /// Lattice-theoretic distributivity `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`;
    /// returns a failing triple if there is one.
    pub fn distributivity_witness(&self) -> Option<[Elem; 3]> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Sub-poset on `carrier`, re-indexed by position in `carrier`.
    pub fn restrict(&self, carrier: &[Elem]) -> Result<LatticeOrder, LatticeError> {
        LatticeOrder::from_fn(carrier.len(), |i, j| self.leq(carrier[i], carrier[j]))
    }

    /// Calls `visit(members, join)` on every directed subset when the lattice is
    /// small enough to search, returning `false` without visiting otherwise.
    ///
    /// A subset is directed when it is nonempty and every pair of its members
    /// has an upper bound inside it.
    fn for_each_directed_subset(&self, mut visit: impl FnMut(&[Elem], Elem)) -> bool {
        if self.n > DIRECTED_SEARCH_LIMIT {
            return false;
        }
        let mut members = Vec::with_capacity(self.n);
        for mask in 1u32..(1u32 << self.n) {
            members.clear();
            members.extend((0..self.n).filter(|&i| mask & (1 << i) != 0));
            let directed = members.iter().all(|&a| {
                members
                    .iter()
                    .all(|&b| members.iter().any(|&c| self.leq(a, c) && self.leq(b, c)))
            });
            if directed {
                let j = self.join_all(members.iter().copied());
                visit(&members, j);
            }
        }
        true
    }

    /// Every directed subset, or `None` above [`DIRECTED_SEARCH_LIMIT`].
    pub fn directed_subsets(&self) -> Option<Vec<Vec<Elem>>> {
        let mut out = Vec::new();
        self.for_each_directed_subset(|members, _| out.push(members.to_vec())).then_some(out)
    }

    /// Compact elements: `x` such that `x ≤ ⋁S` for a directed `S` forces
    /// `x ≤ s` for some `s ∈ S`.
    ///
    /// Decided by searching directed subsets up to [`DIRECTED_SEARCH_LIMIT`]
    /// elements. Above that, every element is returned, which is what the
    /// search returns on every finite lattice anyway: a finite directed set
    /// contains its own join.
    pub fn compact_elements(&self) -> Vec<Elem> {
        let mut compact = vec![true; self.n];
        let searched = self.for_each_directed_subset(|members, j| {
            for (x, c) in compact.iter_mut().enumerate() {
                if *c && self.leq(x, j) && !members.iter().any(|&s| self.leq(x, s)) {
                    *c = false;
                }
            }
        });
        debug_assert!(searched || self.n > DIRECTED_SEARCH_LIMIT);
        self.elements().filter(|&x| compact[x]).collect()
    }

    /// Elements `m ≠ 1` with `m < x ⇒ x = 1`.
    pub fn maximal_elements(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&m| m != self.top)
            .filter(|&m| self.elements().all(|x| !self.lt(m, x) || x == self.top))
            .collect()
    }

    /// Elements `m ≠ 1` that belong to every directed subset they are the join of.
    pub fn join_inaccessible_elements(&self) -> Vec<Elem> {
        let mut ok = vec![true; self.n];
        ok[self.top] = false;
        self.for_each_directed_subset(|members, j| {
            if !members.contains(&j) {
                ok[j] = false;
            }
        });
        self.elements().filter(|&x| ok[x]).collect()
    }

    /// Whether the top element is compact.
    pub fn is_compact(&self) -> bool {
        self.compact_elements().contains(&self.top)
    }

    /// Whether every element is the join of the compact elements below it.
    pub fn is_algebraic(&self) -> bool {
        let compact = self.compact_elements();
        self.elements()
            .all(|x| self.join_all(compact.iter().copied().filter(|&c| self.leq(c, x))) == x)
    }

    /// Graphviz rendering of the Hasse diagram, bottom at the bottom.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
        for x in self.elements() {
            let label = labels.and_then(|l| l.get(x)).cloned().unwrap_or_else(|| x.to_string());
            let _ = writeln!(out, "  {x} [label=\"{}\"];", escape_dot(&label));
        }
        for (x, y) in self.covers() {
            let _ = writeln!(out, "  {x} -> {y};");
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
