//! Ordered hypergraphs and the ABA-freeness test.
//!
//! Vertices are `0..n` and the vertex order is the integer order. A family is
//! ABA-free when there are no edges `A`, `B` and vertices `x < y < z` with
//! `x, z` in `A` but not `B` and `y` in `B` but not `A`.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// A hyperedge: a strictly increasing list of vertex indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    /// Builds an edge from an arbitrary list: sorts and removes duplicates.
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Hyperedge(members)
    }

    pub fn empty() -> Self {
        Hyperedge(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Members of `self` within `0..n` that are missing from the edge.
    pub fn complement(&self, n: usize) -> Hyperedge {
        Hyperedge((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn intersects(&self, other: &Hyperedge) -> bool {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        while let (Some(&x), Some(&y)) = (a.peek(), b.peek()) {
            match x.cmp(y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn is_subset_of(&self, other: &Hyperedge) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Symmetric difference with a vertex set.
    pub fn sym_diff(&self, other: &Hyperedge) -> Hyperedge {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(&x), Some(&y)) if x < y => {
                    out.push(x);
                    i += 1;
                }
                (Some(_), Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Hyperedge(out)
    }

    /// Bitmask representation, only valid for n <= 64.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.0.last().is_none_or(|&v| v < 64));
        self.0.iter().fold(0u64, |m, &v| m | (1 << v))
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for Hyperedge {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Hyperedge::new(iter.into_iter().collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("edge {edge} mentions vertex {vertex} but the vertex set is 0..{n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
}

/// A hypergraph on the ordered vertex set `0..n` in canonical form: every
/// edge strictly increasing, edges sorted lexicographically, no duplicates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedHypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl OrderedHypergraph {
    /// Canonicalizes raw input: sorts members, drops duplicate vertices and
    /// duplicate edges, sorts edges lexicographically, range-checks vertices.
    pub fn new(n: usize, raw_edges: Vec<Vec<usize>>) -> Result<Self, ValidationError> {
        for (i, e) in raw_edges.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(ValidationError::VertexOutOfRange {
                    edge: i,
                    vertex: v,
                    n,
                });
            }
        }
        let mut edges: Vec<Hyperedge> = raw_edges.into_iter().map(Hyperedge::new).collect();
        edges.sort();
        edges.dedup();
        Ok(OrderedHypergraph { n, edges })
    }

    /// Builds from edges that are already canonical hyperedges.
    pub fn from_hyperedges(n: usize, mut edges: Vec<Hyperedge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.max().is_none_or(|v| v < n)));
        edges.sort();
        edges.dedup();
        OrderedHypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Hyperedge {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The family of complements of all edges, canonicalized.
    pub fn complement_family(&self) -> OrderedHypergraph {
        OrderedHypergraph::from_hyperedges(
            self.n,
            self.edges.iter().map(|e| e.complement(self.n)).collect(),
        )
    }

    /// Restriction to `keep` with vertices renumbered by order. Returns the
    /// induced hypergraph and the old-index-to-new-index map.
    pub fn induced(&self, keep: &[usize]) -> (OrderedHypergraph, Vec<Option<usize>>) {
        let keep = Hyperedge::new(keep.to_vec());
        let mut remap = vec![None; self.n];
        for (new, old) in keep.iter().enumerate() {
            remap[old] = Some(new);
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().filter_map(|v| remap[v]).collect())
            .collect();
        (OrderedHypergraph::from_hyperedges(keep.len(), edges), remap)
    }

    /// First pair of disjoint edges (by index), if any.
    pub fn disjoint_edge_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if !self.edges[i].intersects(&self.edges[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn pairwise_intersecting(&self) -> bool {
        self.disjoint_edge_pair().is_none()
    }

    /// First edge triple (by index) with empty common intersection, if any.
    pub fn empty_triple_intersection(&self) -> Option<(usize, usize, usize)> {
        let m = self.edges.len();
        for i in 0..m {
            for j in i + 1..m {
                let common: Vec<usize> = self.edges[i]
                    .iter()
                    .filter(|&v| self.edges[j].contains(v))
                    .collect();
                if common.is_empty() {
                    // Any k completes a witness; pick the smallest other index.
                    if let Some(k) = (0..m).find(|&k| k != i && k != j) {
                        let mut t = [i, j, k];
                        t.sort_unstable();
                        return Some((t[0], t[1], t[2]));
                    }
                    continue;
                }
                for k in j + 1..m {
                    if !common.iter().any(|&v| self.edges[k].contains(v)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn triplewise_intersecting(&self) -> bool {
        self.empty_triple_intersection().is_none()
    }

    /// First vertex pair contained in no edge, if any.
    pub fn uncovered_pair(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.edges.iter().any(|e| e.contains(u) && e.contains(v)) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn pairs_covered(&self) -> bool {
        self.uncovered_pair().is_none()
    }

    /// First vertex triple contained in no edge, if any.
    pub fn uncovered_triple(&self) -> Option<(usize, usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                for w in v + 1..self.n {
                    if !self
                        .edges
                        .iter()
                        .any(|e| e.contains(u) && e.contains(v) && e.contains(w))
                    {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn triples_covered(&self) -> bool {
        self.uncovered_triple().is_none()
    }

    /// First edge index whose edge is empty, if any.
    pub fn empty_edge(&self) -> Option<usize> {
        self.edges.iter().position(|e| e.is_empty())
    }
}

impl fmt::Debug for OrderedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, {:?})", self.n, self.edges)
    }
}

/// A forbidden A-B-A pattern: `x < y < z`, `x,z` in edge `a` only, `y` in
/// edge `b` only. Edge fields are indices into the canonical edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbaWitness {
    pub edge_a: usize,
    pub edge_b: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl AbaWitness {
    /// Replays the witness against a hypergraph.
    pub fn holds_in(&self, h: &OrderedHypergraph) -> bool {
        let (a, b) = match (h.edges.get(self.edge_a), h.edges.get(self.edge_b)) {
            (Some(a), Some(b)) => (a, b),
            _ => return false,
        };
        let (x, y, z) = (self.x, self.y, self.z);
        x < y
            && y < z
            && a.contains(x)
            && !b.contains(x)
            && a.contains(z)
            && !b.contains(z)
            && b.contains(y)
            && !a.contains(y)
    }
}

/// Returns the lexicographically least ABA pattern, ordered by
/// `(edge_a, edge_b, x, y, z)`, or `None` when the family is ABA-free.
pub fn aba_witness(h: &OrderedHypergraph) -> Option<AbaWitness> {
    let m = h.edges.len();
    for ia in 0..m {
        for ib in 0..m {
            if ia == ib {
                continue;
            }
            if let Some(w) = pair_witness(h, ia, ib) {
                return Some(w);
            }
        }
    }
    None
}

/// Least `(x, y, z)` pattern for the ordered edge pair, if any. If any
/// pattern exists then one with the smallest `x` exists for `x` being the
/// first member of `A - B`, so the scan is linear in the edge sizes.
fn pair_witness(h: &OrderedHypergraph, ia: usize, ib: usize) -> Option<AbaWitness> {
    let (a, b) = (&h.edges[ia], &h.edges[ib]);
    let x = a.iter().find(|&v| !b.contains(v))?;
    for y in b.iter().filter(|&y| y > x && !a.contains(y)) {
        if let Some(z) = a.iter().find(|&z| z > y && !b.contains(z)) {
            return Some(AbaWitness {
                edge_a: ia,
                edge_b: ib,
                x,
                y,
                z,
            });
        }
    }
    None
}

pub fn is_aba_free(h: &OrderedHypergraph) -> bool {
    aba_witness(h).is_none()
}

/// An ordered hypergraph checked to be ABA-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbaFree(OrderedHypergraph);

impl AbaFree {
    pub fn new(h: OrderedHypergraph) -> Result<Self, AbaWitness> {
        match aba_witness(&h) {
            None => Ok(AbaFree(h)),
            Some(w) => Err(w),
        }
    }

    pub fn hypergraph(&self) -> &OrderedHypergraph {
        &self.0
    }

    pub fn into_inner(self) -> OrderedHypergraph {
        self.0
    }
}

impl Deref for AbaFree {
    type Target = OrderedHypergraph;

    fn deref(&self) -> &OrderedHypergraph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn h(n: usize, edges: &[&[usize]]) -> OrderedHypergraph {
        OrderedHypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    /// Independent ABA check: try every edge pair and every vertex triple.
    fn aba_free_naive(h: &OrderedHypergraph) -> bool {
        let m = h.edges().len();
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                let (ea, eb) = (h.edge(a), h.edge(b));
                for x in 0..h.n() {
                    for y in x + 1..h.n() {
                        for z in y + 1..h.n() {
                            if ea.contains(x)
                                && !eb.contains(x)
                                && ea.contains(z)
                                && !eb.contains(z)
                                && eb.contains(y)
                                && !ea.contains(y)
                            {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn canonicalize_sorts_and_dedups() {
        let g = h(3, &[&[2, 0], &[1], &[0, 2]]);
        assert_eq!(
            g.edges(),
            &[Hyperedge::new(vec![0, 2]), Hyperedge::new(vec![1])]
        );
        let g = h(1, &[&[], &[]]);
        assert_eq!(g.edges(), &[Hyperedge::empty()]);
    }

    #[test]
    fn canonicalize_rejects_out_of_range() {
        let err = OrderedHypergraph::new(2, vec![vec![0], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            ValidationError::VertexOutOfRange {
                edge: 1,
                vertex: 2,
                n: 2
            }
        );
    }

    #[test]
    fn aba_intervals_are_free() {
        assert!(is_aba_free(&h(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]])));
    }

    #[test]
    fn aba_triangle_is_free() {
        assert!(is_aba_free(&h(3, &[&[0, 1], &[1, 2], &[0, 2]])));
    }

    #[test]
    fn aba_pattern_found_with_least_witness() {
        // Canonical order: [[0,2],[1]]; the pattern is 0,1,2.
        let g = h(3, &[&[0, 2], &[1]]);
        let w = aba_witness(&g).unwrap();
        assert_eq!(
            w,
            AbaWitness {
                edge_a: 0,
                edge_b: 1,
                x: 0,
                y: 1,
                z: 2
            }
        );
        assert!(w.holds_in(&g));
    }

    #[test]
    fn aba_agrees_with_naive_on_small_families() {
        // Exhaustive: all families of exactly two edges over n=4.
        for ma in 0u32..16 {
            for mb in 0u32..16 {
                let edge = |m: u32| (0..4).filter(|v| m & (1 << v) != 0).collect::<Vec<_>>();
                let g = OrderedHypergraph::new(4, vec![edge(ma), edge(mb)]).unwrap();
                assert_eq!(is_aba_free(&g), aba_free_naive(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn aba_witness_replays() {
        let g = h(6, &[&[0, 3, 5], &[1, 2, 4], &[2, 3]]);
        if let Some(w) = aba_witness(&g) {
            assert!(w.holds_in(&g));
        } else {
            panic!("expected ABA pattern");
        }
    }

    #[test]
    fn complement_family_canonical() {
        let g = h(3, &[&[0, 2], &[1]]);
        let c = g.complement_family();
        assert_eq!(c, h(3, &[&[1], &[0, 2]]));
        // Involution up to canonical form.
        assert_eq!(c.complement_family(), g);
    }

    #[test]
    fn complement_of_aba_free_is_aba_free() {
        let g = h(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[0, 1], &[]]);
        assert!(is_aba_free(&g));
        assert!(is_aba_free(&g.complement_family()));
    }

    #[test]
    fn induced_remaps_and_keeps_empty_edges() {
        let g = h(3, &[&[0, 1, 2]]);
        let (sub, remap) = g.induced(&[0, 2]);
        assert_eq!(sub, h(2, &[&[0, 1]]));
        assert_eq!(remap, vec![Some(0), None, Some(1)]);

        let g = h(3, &[&[0, 2], &[1]]);
        let (sub, _) = g.induced(&[1]);
        assert_eq!(sub, h(1, &[&[], &[0]]));
    }

    #[test]
    fn intersection_and_coverage_predicates() {
        let g = h(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(g.disjoint_edge_pair(), Some((0, 2)));
        assert!(!g.pairwise_intersecting());

        let g = h(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(g.pairwise_intersecting());
        assert_eq!(g.empty_triple_intersection(), Some((0, 1, 2)));

        let g = h(3, &[&[0, 1, 2]]);
        assert!(g.pairs_covered() && g.triples_covered());
        let g = h(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(g.uncovered_pair(), Some((0, 2)));
        assert_eq!(g.uncovered_triple(), Some((0, 1, 2)));
    }

    #[test]
    fn sym_diff_and_masks() {
        let a = Hyperedge::new(vec![0, 1, 3]);
        let b = Hyperedge::new(vec![1, 2]);
        assert_eq!(a.sym_diff(&b), Hyperedge::new(vec![0, 2, 3]));
        assert_eq!(a.mask(), 0b1011);
        assert_eq!(a.complement(5), Hyperedge::new(vec![2, 4]));
    }
}
