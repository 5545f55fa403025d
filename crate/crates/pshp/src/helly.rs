//! Discrete Helly algorithms: bounded hitting sets and covers for ABA-free,
//! pseudohalfplane, dual-pseudohalfplane and pseudohemisphere families.
//!
//! Every function validates its certificate before returning it; a
//! certificate that fails validation or exceeds its size bound is reported as
//! [`HellyError::Contradiction`], which always signals an implementation bug
//! (or an injected fault), never bad input.

use crate::delta::DeltaHypergraph;
use crate::extremal::{unskippable_vertices, PshpHypergraph};
use crate::hypergraph::{AbaFree, Hyperedge};
use itertools::Itertools;
use thiserror::Error;

/// Input hypothesis failures; these map to CLI exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edges {i} and {j} are disjoint")]
    DisjointEdges { i: usize, j: usize },
    #[error("edges {i}, {j} and {k} have empty intersection")]
    EmptyTripleIntersection { i: usize, j: usize, k: usize },
    #[error("no edge contains both vertex {u} and vertex {v}")]
    UncoveredPair { u: usize, v: usize },
    #[error("no edge contains vertices {u}, {v} and {w} together")]
    UncoveredTriple { u: usize, v: usize, w: usize },
    #[error("instance has {n} vertices, need at least {need}")]
    TooFewVertices { n: usize, need: usize },
    #[error("operation requires every derived edge to use the straight flag")]
    MixedFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HellyError {
    #[error("precondition violated: {0}")]
    Precondition(#[from] Precondition),
    #[error("theorem contradiction in {op}: {detail}")]
    Contradiction { op: &'static str, detail: String },
}

fn contradiction(op: &'static str, detail: impl Into<String>) -> HellyError {
    HellyError::Contradiction {
        op,
        detail: detail.into(),
    }
}

/// Vertices meeting every nonempty edge, with the theorem's size bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingCert {
    pub vertices: Vec<usize>,
    pub bound: usize,
}

impl HittingCert {
    /// Independent re-check: within bound and hits every nonempty edge.
    pub fn verify(&self, edges: &[Hyperedge]) -> bool {
        self.vertices.len() <= self.bound
            && edges
                .iter()
                .filter(|e| !e.is_empty())
                .all(|e| self.vertices.iter().any(|&v| e.contains(v)))
    }
}

/// Edge indices whose union is the whole vertex set, with the size bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCert {
    pub edge_indices: Vec<usize>,
    pub bound: usize,
}

impl CoverCert {
    /// Independent re-check: within bound, indices valid, union is V.
    pub fn verify(&self, n: usize, edges: &[Hyperedge]) -> bool {
        if self.edge_indices.len() > self.bound
            || self.edge_indices.iter().any(|&i| i >= edges.len())
        {
            return false;
        }
        let mut covered = vec![false; n];
        for &i in &self.edge_indices {
            for v in edges[i].iter() {
                covered[v] = true;
            }
        }
        covered.into_iter().all(|b| b)
    }
}

/// Deliberate algorithm mutations used to prove the downstream checkers can
/// catch a wrong implementation. Never enabled in normal operation.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FaultInjection {
    /// In the 3-wise cover, pick the base edge meeting the *fewest* extremal
    /// vertices instead of the most, breaking the choice the correctness
    /// argument rests on.
    pub cover3_pick_min_overlap: bool,
}

fn finish_hit(
    op: &'static str,
    edges: &[Hyperedge],
    vertices: Vec<usize>,
    bound: usize,
) -> Result<HittingCert, HellyError> {
    let cert = HittingCert { vertices, bound };
    if cert.verify(edges) {
        Ok(cert)
    } else {
        Err(contradiction(
            op,
            format!("certificate {:?} fails validation", cert.vertices),
        ))
    }
}

fn finish_cover(
    op: &'static str,
    n: usize,
    edges: &[Hyperedge],
    edge_indices: Vec<usize>,
    bound: usize,
) -> Result<CoverCert, HellyError> {
    let cert = CoverCert {
        edge_indices,
        bound,
    };
    if cert.verify(n, edges) {
        Ok(cert)
    } else {
        Err(contradiction(
            op,
            format!("certificate {:?} fails validation", cert.edge_indices),
        ))
    }
}

fn require_no_empty_edge(edges: &[Hyperedge]) -> Result<(), Precondition> {
    match edges.iter().position(|e| e.is_empty()) {
        Some(edge) => Err(Precondition::EmptyEdge { edge }),
        None => Ok(()),
    }
}

fn require_pairwise_intersecting(edges: &[Hyperedge]) -> Result<(), Precondition> {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if !edges[i].intersects(&edges[j]) {
                return Err(Precondition::DisjointEdges { i, j });
            }
        }
    }
    Ok(())
}

fn require_triplewise_intersecting(edges: &[Hyperedge]) -> Result<(), Precondition> {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            for k in j + 1..edges.len() {
                let shared = edges[i]
                    .iter()
                    .any(|v| edges[j].contains(v) && edges[k].contains(v));
                if !shared {
                    return Err(Precondition::EmptyTripleIntersection { i, j, k });
                }
            }
        }
    }
    Ok(())
}

fn require_pairs_covered(n: usize, edges: &[Hyperedge]) -> Result<(), Precondition> {
    for u in 0..n {
        for v in u + 1..n {
            if !edges.iter().any(|e| e.contains(u) && e.contains(v)) {
                return Err(Precondition::UncoveredPair { u, v });
            }
        }
    }
    Ok(())
}

fn require_triples_covered(n: usize, edges: &[Hyperedge]) -> Result<(), Precondition> {
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if !edges
                    .iter()
                    .any(|e| e.contains(u) && e.contains(v) && e.contains(w))
                {
                    return Err(Precondition::UncoveredTriple { u, v, w });
                }
            }
        }
    }
    Ok(())
}

fn require_min_n(n: usize, need: usize) -> Result<(), Precondition> {
    if n < need {
        Err(Precondition::TooFewVertices { n, need })
    } else {
        Ok(())
    }
}

/// Repeatedly drops the largest redundant vertex; the result is a
/// containment-minimal hitting set whenever the input hits everything.
fn minimalize_hitting(edges: &[Hyperedge], mut r: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        for idx in (0..r.len()).rev() {
            let rest_hits_all = edges.iter().all(|e| {
                r.iter()
                    .enumerate()
                    .any(|(j, &w)| j != idx && e.contains(w))
            });
            if rest_hits_all {
                r.remove(idx);
                continue 'outer;
            }
        }
        return r;
    }
}

/// First (by size, then lexicographically) vertex set of size ≤ `max_size`
/// hitting every edge.
fn first_hitting_subset(n: usize, edges: &[Hyperedge], max_size: usize) -> Option<Vec<usize>> {
    for k in 0..=max_size.min(n) {
        for subset in (0..n).combinations(k) {
            if edges.iter().all(|e| subset.iter().any(|&v| e.contains(v))) {
                return Some(subset);
            }
        }
    }
    None
}

/// First (by size, then lexicographically) set of ≤ `max_size` edge indices
/// whose union is V.
fn first_covering_subset(n: usize, edges: &[Hyperedge], max_size: usize) -> Option<Vec<usize>> {
    for k in 0..=max_size.min(edges.len()) {
        for subset in (0..edges.len()).combinations(k) {
            let mut covered = vec![false; n];
            for &i in &subset {
                for v in edges[i].iter() {
                    covered[v] = true;
                }
            }
            if covered.into_iter().all(|b| b) {
                return Some(subset);
            }
        }
    }
    None
}

/// Pairwise-intersecting ABA-free family: some 2 vertices hit every edge.
///
/// Constructive: the unskippable vertices hit everything; minimalization
/// cannot stop above size 2.
pub fn hit_aba_2(f: &AbaFree) -> Result<HittingCert, HellyError> {
    const OP: &str = "hit_aba_2";
    let edges = f.edges();
    require_no_empty_edge(edges)?;
    require_pairwise_intersecting(edges)?;
    let r = minimalize_hitting(edges, unskippable_vertices(f.hypergraph()));
    if r.len() > 2 {
        return Err(contradiction(
            OP,
            format!("minimal hitting set {r:?} exceeds size 2"),
        ));
    }
    finish_hit(OP, edges, r, 2)
}

/// Pairwise-intersecting pseudohalfplane family: some 3 vertices hit every
/// edge. Constructive via minimalization over the extremal vertices.
pub fn hit_pshp_pairwise(p: &PshpHypergraph) -> Result<HittingCert, HellyError> {
    const OP: &str = "hit_pshp_pairwise";
    let edges = p.edges();
    require_no_empty_edge(edges)?;
    require_pairwise_intersecting(edges)?;
    let r = minimalize_hitting(edges, p.extremal_profile().extremal);
    if r.len() > 3 {
        return Err(contradiction(
            OP,
            format!("minimal hitting set {r:?} exceeds size 3"),
        ));
    }
    finish_hit(OP, edges, r, 3)
}

/// Triplewise-intersecting pseudohalfplane family: some 2 vertices hit every
/// edge. Existence proof is indirect, so the implementation enumerates; the
/// search is over all of V because nothing confines a small hitting set to
/// the extremal vertices.
pub fn hit_pshp_triplewise(p: &PshpHypergraph) -> Result<HittingCert, HellyError> {
    const OP: &str = "hit_pshp_triplewise";
    let edges = p.edges();
    require_no_empty_edge(edges)?;
    require_triplewise_intersecting(edges)?;
    match first_hitting_subset(p.n(), edges, 2) {
        Some(vertices) => finish_hit(OP, edges, vertices, 2),
        None => Err(contradiction(OP, "no hitting set of size at most 2 exists")),
    }
}

/// ABA-free family covering every vertex pair: some 2 edges cover V.
pub fn cover_aba_2(f: &AbaFree) -> Result<CoverCert, HellyError> {
    const OP: &str = "cover_aba_2";
    require_min_n(f.n(), 2)?;
    require_pairs_covered(f.n(), f.edges())?;
    match first_covering_subset(f.n(), f.edges(), 2) {
        Some(indices) => finish_cover(OP, f.n(), f.edges(), indices, 2),
        None => Err(contradiction(OP, "no cover of size at most 2 exists")),
    }
}

/// Pseudohalfplane family covering every vertex triple: some 2 edges cover V.
pub fn cover_pshp_3wise(p: &PshpHypergraph) -> Result<CoverCert, HellyError> {
    cover_pshp_3wise_with(p, FaultInjection::default())
}

/// [`cover_pshp_3wise`] with an optional injected fault; test plumbing only.
///
/// The genuine algorithm is constructive: take the edge H₁ meeting the most
/// extremal vertices, read off the endpoints p,q of its circular slot arc and
/// the first extremal vertex r past the arc, then a single search for an edge
/// H₂ ⊇ {p,q,r} must complete the cover.
#[doc(hidden)]
pub fn cover_pshp_3wise_with(
    p: &PshpHypergraph,
    fault: FaultInjection,
) -> Result<CoverCert, HellyError> {
    const OP: &str = "cover_pshp_3wise";
    let n = p.n();
    let edges = p.edges();
    require_min_n(n, 3)?;
    require_triples_covered(n, edges)?;
    let profile = p.extremal_profile();
    let overlap = |e: &Hyperedge| profile.extremal_overlap(e);

    // n ≥ 3 and covered triples guarantee at least one edge, so the selectors
    // cannot see an empty list. Ties go to the lowest edge index.
    let h1_idx = if fault.cover3_pick_min_overlap {
        (0..edges.len())
            .min_by_key(|&i| (overlap(&edges[i]), i))
            .unwrap()
    } else {
        (0..edges.len())
            .max_by_key(|&i| (overlap(&edges[i]), std::cmp::Reverse(i)))
            .unwrap()
    };
    let h1 = &edges[h1_idx];

    // If H₁ contains every extremal vertex it must be all of V; certificate
    // validation enforces that consequence.
    if profile.extremal.iter().all(|&v| h1.contains(v)) {
        return finish_cover(OP, n, edges, vec![h1_idx], 2);
    }

    let arc = profile.circular_interval(h1);
    if !arc.is_interval {
        return Err(contradiction(
            OP,
            format!("edge {h1_idx} does not meet the extremal slots in one circular run"),
        ));
    }
    let Some((start, len)) = arc.arc else {
        return Err(contradiction(
            OP,
            format!("selected base edge {h1_idx} misses every extremal vertex"),
        ));
    };
    let s = profile.slots.len();
    let p_v = profile.slots[start].vertex;
    let q_v = profile.slots[(start + len - 1) % s].vertex;
    // The slot after the arc is unmarked, and slots are marked per vertex, so
    // its vertex is extremal but outside H₁.
    let r_v = profile.slots[(start + len) % s].vertex;
    debug_assert!(!h1.contains(r_v));

    let mut target = vec![p_v, q_v, r_v];
    target.sort_unstable();
    target.dedup();
    if target.len() < 3 {
        // Single-slot arc (p = q): any third vertex works, take the smallest.
        let third = (0..n).find(|v| !target.contains(v)).expect("n >= 3");
        target.push(third);
        target.sort_unstable();
    }

    let Some(h2_idx) = (0..edges.len()).find(|&i| target.iter().all(|&v| edges[i].contains(v)))
    else {
        return Err(Precondition::UncoveredTriple {
            u: target[0],
            v: target[1],
            w: target[2],
        }
        .into());
    };
    // One H₂ search suffices precisely because H₁'s overlap is maximal; a
    // larger H₂ would have been picked as H₁.
    if overlap(&edges[h2_idx]) > overlap(h1) {
        return Err(contradiction(
            OP,
            format!(
                "edge {h2_idx} meets more extremal vertices than the selected base edge {h1_idx}"
            ),
        ));
    }

    let mut covered = vec![false; n];
    for v in h1.iter().chain(edges[h2_idx].iter()) {
        covered[v] = true;
    }
    if let Some(missing) = covered.iter().position(|&b| !b) {
        return Err(contradiction(
            OP,
            format!("edges {h1_idx} and {h2_idx} leave vertex {missing} uncovered"),
        ));
    }
    let mut indices = vec![h1_idx, h2_idx];
    indices.sort_unstable();
    finish_cover(OP, n, edges, indices, 2)
}

/// Pseudohalfplane family covering every vertex pair: some 3 edges cover V.
pub fn cover_pshp_pairwise(p: &PshpHypergraph) -> Result<CoverCert, HellyError> {
    const OP: &str = "cover_pshp_pairwise";
    require_min_n(p.n(), 2)?;
    require_pairs_covered(p.n(), p.edges())?;
    match first_covering_subset(p.n(), p.edges(), 3) {
        Some(indices) => finish_cover(OP, p.n(), p.edges(), indices, 3),
        None => Err(contradiction(OP, "no cover of size at most 3 exists")),
    }
}

/// Pairwise-intersecting pseudohemisphere family: some 4 vertices hit every
/// derived edge.
pub fn hit_hemi_pairwise(d: &DeltaHypergraph) -> Result<HittingCert, HellyError> {
    const OP: &str = "hit_hemi_pairwise";
    let edges = d.derived();
    require_min_n(d.n(), 2)?;
    require_no_empty_edge(edges)?;
    require_pairwise_intersecting(edges)?;
    match first_hitting_subset(d.n(), edges, 4) {
        Some(vertices) => finish_hit(OP, edges, vertices, 4),
        None => Err(contradiction(OP, "no hitting set of size at most 4 exists")),
    }
}

/// Pseudohemisphere family covering every vertex pair: some 4 derived edges
/// cover V.
pub fn cover_hemi_pairwise(d: &DeltaHypergraph) -> Result<CoverCert, HellyError> {
    const OP: &str = "cover_hemi_pairwise";
    let edges = d.derived();
    require_min_n(d.n(), 2)?;
    require_pairs_covered(d.n(), edges)?;
    match first_covering_subset(d.n(), edges, 4) {
        Some(indices) => finish_cover(OP, d.n(), edges, indices, 4),
        None => Err(contradiction(OP, "no cover of size at most 4 exists")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::Flag;
    use crate::extremal::Side;
    use crate::hypergraph::OrderedHypergraph;

    fn aba(n: usize, edges: &[&[usize]]) -> AbaFree {
        let h = OrderedHypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap();
        AbaFree::new(h).unwrap()
    }

    fn tops(n: usize, edges: &[&[usize]]) -> PshpHypergraph {
        PshpHypergraph::from_labeled(n, edges.iter().map(|e| (e.to_vec(), Side::Top)).collect())
            .unwrap()
    }

    #[test]
    fn hit_aba_2_on_intervals() {
        let f = aba(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(hit_aba_2(&f).unwrap().vertices, vec![2]);
    }

    #[test]
    fn hit_aba_2_on_triangle_needs_both_unskippables() {
        let f = aba(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let cert = hit_aba_2(&f).unwrap();
        assert_eq!(cert.vertices, vec![0, 2]);
        assert!(cert.verify(f.edges()));
    }

    #[test]
    fn hit_aba_2_single_edge_keeps_smallest_vertex() {
        let f = aba(3, &[&[0, 1, 2]]);
        assert_eq!(hit_aba_2(&f).unwrap().vertices, vec![0]);
    }

    #[test]
    fn hit_aba_2_rejects_disjoint_edges() {
        let f = aba(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(
            hit_aba_2(&f),
            Err(HellyError::Precondition(Precondition::DisjointEdges {
                i: 0,
                j: 1
            }))
        );
    }

    #[test]
    fn hit_aba_2_rejects_empty_edge() {
        let f = aba(2, &[&[]]);
        assert_eq!(
            hit_aba_2(&f),
            Err(HellyError::Precondition(Precondition::EmptyEdge {
                edge: 0
            }))
        );
    }

    #[test]
    fn hit_pshp_pairwise_example() {
        let p = tops(4, &[&[0, 1], &[1, 3], &[0, 1, 3]]);
        assert_eq!(hit_pshp_pairwise(&p).unwrap().vertices, vec![1]);
    }

    #[test]
    fn hit_pshp_pairwise_single_full_edge() {
        let p = tops(3, &[&[0, 1, 2]]);
        let cert = hit_pshp_pairwise(&p).unwrap();
        assert_eq!(cert.vertices.len(), 1);
    }

    #[test]
    fn hit_pshp_triplewise_rejects_empty_triple() {
        let p = tops(3, &[&[0, 1], &[1, 2], &[0, 2], &[0, 1, 2]]);
        // Canonical edge order {0,1},{0,1,2},{0,2},{1,2}: first bad triple.
        assert_eq!(
            hit_pshp_triplewise(&p),
            Err(HellyError::Precondition(
                Precondition::EmptyTripleIntersection { i: 0, j: 2, k: 3 }
            ))
        );
    }

    #[test]
    fn hit_pshp_triplewise_common_vertex() {
        let p = tops(3, &[&[0, 1], &[0, 2], &[0, 1, 2]]);
        assert_eq!(hit_pshp_triplewise(&p).unwrap().vertices, vec![0]);
    }

    #[test]
    fn cover_aba_2_single_full_edge() {
        let f = aba(3, &[&[0, 1, 2]]);
        assert_eq!(cover_aba_2(&f).unwrap().edge_indices, vec![0]);
    }

    #[test]
    fn cover_aba_2_rejects_uncovered_pair() {
        let f = aba(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            cover_aba_2(&f),
            Err(HellyError::Precondition(Precondition::UncoveredPair {
                u: 0,
                v: 2
            }))
        );
    }

    #[test]
    fn cover_aba_2_triangle() {
        let f = aba(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        // Edges sort to {0,1},{0,2},{1,2}; the first covering pair is (0,1).
        let cert = cover_aba_2(&f).unwrap();
        assert_eq!(cert.edge_indices, vec![0, 1]);
        assert!(cert.verify(3, f.edges()));
    }

    #[test]
    fn cover_pshp_3wise_full_edge_short_circuit() {
        let p = tops(3, &[&[0, 1, 2]]);
        assert_eq!(cover_pshp_3wise(&p).unwrap().edge_indices, vec![0]);
    }

    #[test]
    fn cover_pshp_3wise_all_triples_instance() {
        // All 3-subsets of a 4-set: pairwise set differences are singletons,
        // so the family is a valid all-tops instance, and every triple is
        // covered while no single edge is.
        let p = tops(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let cert = cover_pshp_3wise(&p).unwrap();
        assert_eq!(cert.edge_indices, vec![0, 2]);
        assert!(cert.verify(4, p.edges()));
    }

    #[test]
    fn cover_pshp_3wise_rejects_uncovered_triple() {
        let p = tops(4, &[&[0, 1, 2], &[1, 2, 3]]);
        assert_eq!(
            cover_pshp_3wise(&p),
            Err(HellyError::Precondition(Precondition::UncoveredTriple {
                u: 0,
                v: 1,
                w: 3
            }))
        );
    }

    #[test]
    fn cover_pshp_3wise_fault_injection_is_caught() {
        // Adding the singleton {0} keeps the family valid but gives the
        // faulty min-overlap selector a uselessly small base edge.
        let p = tops(4, &[&[0], &[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(cover_pshp_3wise(&p).unwrap().edge_indices, vec![1, 3]);
        let fault = FaultInjection {
            cover3_pick_min_overlap: true,
        };
        match cover_pshp_3wise_with(&p, fault) {
            Err(HellyError::Contradiction { op, .. }) => assert_eq!(op, "cover_pshp_3wise"),
            other => panic!("fault not caught: {other:?}"),
        }
    }

    #[test]
    fn cover_pshp_pairwise_triangle() {
        let p = tops(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(cover_pshp_pairwise(&p).unwrap().edge_indices, vec![0, 1]);
    }

    #[test]
    fn cover_pshp_pairwise_rejects_disjoint_blocks() {
        let p = tops(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        assert_eq!(
            cover_pshp_pairwise(&p),
            Err(HellyError::Precondition(Precondition::UncoveredPair {
                u: 0,
                v: 2
            }))
        );
    }

    #[test]
    fn hemi_cover_single_derived_edge() {
        let d = DeltaHypergraph::all_straight(aba(3, &[&[0, 1]]), vec![2]).unwrap();
        assert_eq!(cover_hemi_pairwise(&d).unwrap().edge_indices, vec![0]);
    }

    #[test]
    fn hemi_cover_rejects_vertex_outside_every_derived_edge() {
        let d = DeltaHypergraph::new(
            aba(3, &[&[0, 1], &[2]]),
            vec![],
            vec![Flag::Straight, Flag::Complemented],
        )
        .unwrap();
        assert_eq!(
            cover_hemi_pairwise(&d),
            Err(HellyError::Precondition(Precondition::UncoveredPair {
                u: 0,
                v: 2
            }))
        );
    }

    #[test]
    fn hemi_hit_all_four_subsets() {
        // Derived edges are the five 4-subsets of a 5-set; any two distinct
        // vertices hit each of them.
        let f = aba(
            5,
            &[
                &[0, 1, 2, 3],
                &[0, 1, 2, 4],
                &[0, 1, 3, 4],
                &[0, 2, 3, 4],
                &[1, 2, 3, 4],
            ],
        );
        let d = DeltaHypergraph::all_straight(f, vec![]).unwrap();
        let cert = hit_hemi_pairwise(&d).unwrap();
        assert_eq!(cert.vertices, vec![0, 1]);
    }

    #[test]
    fn hemi_hit_rejects_empty_derived_edge() {
        let d = DeltaHypergraph::all_straight(aba(2, &[&[0, 1]]), vec![0, 1]).unwrap();
        assert_eq!(
            hit_hemi_pairwise(&d),
            Err(HellyError::Precondition(Precondition::EmptyEdge {
                edge: 0
            }))
        );
    }

    #[test]
    fn cert_verification_is_strict() {
        let edges = vec![Hyperedge::new(vec![0, 1]), Hyperedge::new(vec![2])];
        let good = HittingCert {
            vertices: vec![0, 2],
            bound: 2,
        };
        assert!(good.verify(&edges));
        let misses = HittingCert {
            vertices: vec![0],
            bound: 2,
        };
        assert!(!misses.verify(&edges));
        let oversize = HittingCert {
            vertices: vec![0, 1, 2],
            bound: 2,
        };
        assert!(!oversize.verify(&edges));

        let cover_good = CoverCert {
            edge_indices: vec![0, 1],
            bound: 2,
        };
        assert!(cover_good.verify(3, &edges));
        let cover_short = CoverCert {
            edge_indices: vec![0],
            bound: 2,
        };
        assert!(!cover_short.verify(3, &edges));
        let cover_bad_index = CoverCert {
            edge_indices: vec![5],
            bound: 2,
        };
        assert!(!cover_bad_index.verify(3, &edges));
    }

    #[test]
    fn empty_family_certificates_are_empty() {
        let f = aba(0, &[]);
        assert_eq!(hit_aba_2(&f).unwrap().vertices, Vec::<usize>::new());
    }
}
