//! Instance generators: halfplane hypergraphs from exact point sets, the
//! tight hitting/cover examples, random in-class families, and pseudoline
//! wiring instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extremal::{PshpHypergraph, Side};
use crate::geometry::PointSet;
use crate::hypergraph::{is_aba_free, AbaFree, Hyperedge, OrderedHypergraph};
use crate::wiring::WiringDiagram;

/// The pseudohalfplane hypergraph of all halfplane cuts of `p`: every subset
/// cut off by an upward-closed halfplane becomes a topset and every
/// downward-closed cut a bottomset (both include ∅ and the full set).
pub fn gen_halfplane(p: &PointSet) -> PshpHypergraph {
    let top = p
        .upward_cuts()
        .into_iter()
        .map(|e| e.members().to_vec())
        .collect();
    let bottom = p
        .downward_cuts()
        .into_iter()
        .map(|e| e.members().to_vec())
        .collect();
    PshpHypergraph::from_top_bottom(p.len(), top, bottom)
        .expect("halfplane cut families always have an ABA-free witness")
}

/// 3k vertices in three consecutive blocks of size k; each edge is one block
/// plus a single vertex of the next block (cyclically). All 3k edges have
/// size k+1, the family is pairwise intersecting, yet no 2 vertices hit it.
pub fn gen_h0(k: usize) -> OrderedHypergraph {
    assert!(
        k >= 2,
        "blocks of size {k} < 2 do not yield a tight instance"
    );
    let n = 3 * k;
    let mut edges = Vec::with_capacity(n);
    for i in 0..3 {
        for j in 0..k {
            let mut e: Vec<usize> = (i * k..(i + 1) * k).collect();
            e.push(((i + 1) * k + j) % n);
            edges.push(e);
        }
    }
    OrderedHypergraph::new(n, edges).expect("vertices are in range by construction")
}

/// All (l−1)-subsets of `0..l`. ABA-free because every pairwise difference
/// is a singleton; pairwise (indeed (l−1)-wise) intersecting with no single
/// hitting vertex.
pub fn gen_all_subsets_minus_one(l: usize) -> AbaFree {
    assert!(l >= 2, "need at least 2 vertices");
    let edges = (0..l)
        .map(|skip| (0..l).filter(|&v| v != skip).collect())
        .collect();
    let h = OrderedHypergraph::new(l, edges).expect("vertices are in range by construction");
    AbaFree::new(h).expect("singleton pairwise differences leave no room for a violation")
}

/// Consecutive disjoint interval edges of the given sizes.
pub fn gen_disjoint_blocks(counts: &[usize]) -> AbaFree {
    assert!(counts.iter().all(|&c| c >= 1), "blocks must be nonempty");
    let n: usize = counts.iter().sum();
    let mut edges = Vec::with_capacity(counts.len());
    let mut start = 0;
    for &c in counts {
        edges.push((start..start + c).collect());
        start += c;
    }
    let h = OrderedHypergraph::new(n, edges).expect("vertices are in range by construction");
    AbaFree::new(h).expect("disjoint intervals never interleave")
}

/// Rejection sampler: draws uniform subsets of `0..n` and keeps one only if
/// the family stays ABA-free and duplicate-free, until `m` edges or 50·m
/// draws. The flag is false when the draw cap ran out first.
pub fn gen_random_abafree(n: usize, m: usize, seed: u64) -> (AbaFree, bool) {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = sample_abafree_edges(n, m, &mut rng);
    let complete = edges.len() == m;
    let h = OrderedHypergraph::from_hyperedges(n, edges);
    (
        AbaFree::new(h).expect("sampler only keeps edges preserving ABA-freeness"),
        complete,
    )
}

/// Random pseudohalfplane family: samples an ABA-free witness family, then
/// flips a coin per witness edge — heads emits it as a topset, tails emits
/// its complement as a bottomset. The flag is as in [`gen_random_abafree`].
pub fn gen_random_pshp(n: usize, m: usize, seed: u64) -> (PshpHypergraph, bool) {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let witness_edges = sample_abafree_edges(n, m, &mut rng);
    let complete = witness_edges.len() == m;
    let labeled = witness_edges
        .into_iter()
        .map(|w| {
            if rng.gen::<bool>() {
                (w.members().to_vec(), Side::Top)
            } else {
                (w.complement(n).members().to_vec(), Side::Bottom)
            }
        })
        .collect();
    let p = PshpHypergraph::from_labeled(n, labeled)
        .expect("the sampled family is the witness and is ABA-free by construction");
    (p, complete)
}

fn sample_abafree_edges(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<Hyperedge> {
    let mut edges: Vec<Hyperedge> = Vec::with_capacity(m);
    let mut draws = 0;
    while edges.len() < m && draws < 50 * m {
        draws += 1;
        let cand: Hyperedge = (0..n).filter(|_| rng.gen::<bool>()).collect();
        if edges.contains(&cand) {
            continue;
        }
        edges.push(cand);
        let trial = OrderedHypergraph::from_hyperedges(n, edges.clone());
        if !is_aba_free(&trial) {
            edges.pop();
        }
    }
    edges
}

/// The face hypergraph of a wiring diagram: one vertex per face in discovery
/// order, one edge per pseudoline on its chosen side.
pub fn gen_from_wiring(w: &WiringDiagram) -> PshpHypergraph {
    w.face_hypergraph()
        .expect("face side-sets of a wiring always have an ABA-free witness")
}

/// Six labeled pair edges on four points forming a triangle plus an interior
/// point: every pair is halfplane-separable, so all C(4,2) pairs appear. The
/// smallest pseudohalfplane hypergraph needing four colors.
pub fn gen_k4() -> PshpHypergraph {
    let points = PointSet::from_ints(&[(0, 0), (1, 3), (2, 1), (4, 0)])
        .expect("coordinates are distinct in x");
    let full = gen_halfplane(&points);
    let labeled: Vec<(Vec<usize>, Side)> = full
        .edges()
        .iter()
        .zip(full.sides())
        .filter(|(e, _)| e.len() == 2)
        .map(|(e, &s)| (e.members().to_vec(), s))
        .collect();
    assert_eq!(
        labeled.len(),
        6,
        "triangle plus interior point separates all 6 pairs"
    );
    PshpHypergraph::from_labeled(4, labeled).expect("sub-family of a valid instance")
}
