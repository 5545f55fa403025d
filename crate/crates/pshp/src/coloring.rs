//! Proper colorings: 3 colors for ABA-free families, 4 for pseudohalfplane
//! families, 3 for dual-pseudohalfplane families via an outerplanar-style
//! auxiliary graph.

use crate::delta::DeltaHypergraph;
use crate::extremal::{nearest_unskippable, unskippable_vertices, PshpHypergraph};
use crate::helly::{HellyError, Precondition};
use crate::hypergraph::{AbaFree, Hyperedge, OrderedHypergraph};
use crate::oracle::{degeneracy, SimpleGraph};

/// Per-vertex colors, 1-based; every color is at most `palette_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn in_palette(&self) -> bool {
        self.color.iter().all(|&c| 1 <= c && c <= self.palette_size)
    }
}

/// True iff no edge with at least two vertices is monochromatic.
pub fn is_proper(h: &OrderedHypergraph, c: &Coloring) -> bool {
    proper_on_edges(h.edges(), c)
}

fn proper_on_edges(edges: &[Hyperedge], c: &Coloring) -> bool {
    edges.iter().filter(|e| e.len() >= 2).all(|e| {
        let first = c.color[e.members()[0]];
        e.iter().any(|v| c.color[v] != first)
    })
}

/// ABA-free families are 3-colorable: alternate two colors along the
/// unskippable vertices, give every skippable vertex the third color. Edges
/// meet unskippables in an order-interval, so edges of size ≥ 2 cannot be
/// monochromatic.
pub fn color_aba_3(f: &AbaFree) -> Coloring {
    let mut color = vec![3usize; f.n()];
    for (i, v) in unskippable_vertices(f).into_iter().enumerate() {
        color[v] = 1 + (i % 2);
    }
    Coloring {
        color,
        palette_size: 3,
    }
}

/// Pseudohalfplane families are 4-colorable: scan vertices in order, each
/// topvertex avoiding the previous topvertex's color, each bottomvertex the
/// previous bottomvertex's (both for vertices on both hulls, taking the least
/// legal color); non-extremal vertices share the fourth color.
pub fn color_pshp_4(p: &PshpHypergraph) -> Coloring {
    let profile = p.extremal_profile();
    let mut color = vec![0usize; p.n()];
    let mut prev_top = None;
    let mut prev_bottom = None;
    for (v, slot) in color.iter_mut().enumerate() {
        let is_top = profile.topvertices.binary_search(&v).is_ok();
        let is_bottom = profile.bottomvertices.binary_search(&v).is_ok();
        if !is_top && !is_bottom {
            *slot = 4;
            continue;
        }
        let mut c = 1;
        while (is_top && prev_top == Some(c)) || (is_bottom && prev_bottom == Some(c)) {
            c += 1;
        }
        *slot = c;
        if is_top {
            prev_top = Some(c);
        }
        if is_bottom {
            prev_bottom = Some(c);
        }
    }
    Coloring {
        color,
        palette_size: 4,
    }
}

/// The auxiliary graph of the dual 3-coloring: vertex set `u` is the union of
/// the unskippable vertices of the two restricted families; edges connect
/// cross-part derived pairs plus consecutive unskippables within each part.
#[derive(Debug, Clone)]
pub struct AuxGraph {
    pub u: Vec<usize>,
    pub graph: SimpleGraph,
}

struct DualParts {
    sx: Vec<usize>,
    x: Vec<usize>,
    f1: OrderedHypergraph,
    f2: OrderedHypergraph,
    u1: Vec<usize>,
    u2: Vec<usize>,
}

/// F₁ is the base family on S∖X. On X the derived edges read `X∖F`, so the
/// relevant second family F₂ is the within-X complement family of the base
/// restriction — its edges are exactly the X-parts of the derived edges.
fn split_parts(d: &DeltaHypergraph) -> DualParts {
    let n = d.n();
    let x: Vec<usize> = d.x().members().to_vec();
    let sx: Vec<usize> = (0..n).filter(|&v| !d.x().contains(v)).collect();
    let (f1, _) = d.base().induced(&sx);
    let (fx, _) = d.base().induced(&x);
    let f2 = fx.complement_family();
    let u1 = unskippable_vertices(&f1)
        .into_iter()
        .map(|i| sx[i])
        .collect();
    let u2 = unskippable_vertices(&f2)
        .into_iter()
        .map(|i| x[i])
        .collect();
    DualParts {
        sx,
        x,
        f1,
        f2,
        u1,
        u2,
    }
}

fn aux_from_parts(d: &DeltaHypergraph, parts: &DualParts) -> Result<AuxGraph, HellyError> {
    const OP: &str = "aux_graph";
    let mut u: Vec<usize> = parts.u1.iter().chain(parts.u2.iter()).copied().collect();
    u.sort_unstable();
    let mut graph = SimpleGraph::new(d.n());

    // Class (a): two-element derived edges with one endpoint in each part.
    // Both endpoints are forced unskippable: each is a singleton edge of its
    // restricted family, and nonempty edges contain an unskippable vertex.
    let mut cross: Vec<(usize, usize)> = Vec::new();
    for e in d.derived() {
        if e.len() == 2 {
            let (a, b) = (e.members()[0], e.members()[1]);
            let (in_x_a, in_x_b) = (d.x().contains(a), d.x().contains(b));
            if in_x_a != in_x_b {
                let (v, w) = if in_x_a { (b, a) } else { (a, b) };
                debug_assert!(parts.u1.contains(&v) && parts.u2.contains(&w));
                cross.push((v, w));
                graph.add_edge(v, w);
            }
        }
    }
    // The correctness argument needs the cross edges mutually non-crossing.
    for (i, &(v1, w1)) in cross.iter().enumerate() {
        for &(v2, w2) in &cross[i + 1..] {
            if (v1 < v2 && w1 < w2) || (v2 < v1 && w2 < w1) {
                return Err(HellyError::Contradiction {
                    op: OP,
                    detail: format!(
                        "cross edges ({v1},{w1}) and ({v2},{w2}) violate the reversed-path order"
                    ),
                });
            }
        }
    }

    // Classes (b), (c): consecutive unskippables within each part.
    for pair in parts.u1.windows(2).chain(parts.u2.windows(2)) {
        graph.add_edge(pair[0], pair[1]);
    }
    Ok(AuxGraph { u, graph })
}

/// Auxiliary graph of the dual 3-coloring; exposed so its 2-degeneracy can be
/// checked independently.
pub fn aux_graph(d: &DeltaHypergraph) -> Result<AuxGraph, HellyError> {
    if !d.is_all_straight() {
        return Err(Precondition::MixedFlags.into());
    }
    aux_from_parts(d, &split_parts(d))
}

/// Dual pseudohalfplane families are 3-colorable: greedily color the
/// auxiliary graph along a 2-degeneracy elimination order, then push every
/// skippable vertex away from its two nearest unskippables (one of which
/// appears in every edge through it). The result is re-verified against the
/// derived edges before returning.
pub fn color_dual_pshp_3(d: &DeltaHypergraph) -> Result<Coloring, HellyError> {
    const OP: &str = "color_dual_pshp_3";
    if !d.is_all_straight() {
        return Err(Precondition::MixedFlags.into());
    }
    let parts = split_parts(d);
    let aux = aux_from_parts(d, &parts)?;
    let (degen, order) = degeneracy(&aux.graph);
    if degen > 2 {
        return Err(HellyError::Contradiction {
            op: OP,
            detail: format!("auxiliary graph has degeneracy {degen}"),
        });
    }

    let n = d.n();
    let mut in_u = vec![false; n];
    for &v in &aux.u {
        in_u[v] = true;
    }
    // Reverse elimination order leaves each vertex at most `degen` colored
    // neighbors, so three colors always suffice here.
    let mut color = vec![0usize; n];
    for &v in order.iter().rev() {
        if !in_u[v] {
            continue;
        }
        let mut c = 1;
        while aux.graph.neighbors(v).any(|w| color[w] == c) {
            c += 1;
        }
        color[v] = c;
    }

    // Skippable vertices: avoid both nearest unskippables of the own family.
    // Interior position guarantees both neighbors exist.
    let mut assign_skippables = |part: &[usize], family: &OrderedHypergraph| {
        for (local, &orig) in part.iter().enumerate() {
            if in_u[orig] {
                continue;
            }
            let (prev, next) = nearest_unskippable(family, local);
            let forbidden: Vec<usize> = [prev, next]
                .into_iter()
                .flatten()
                .map(|local| color[part[local]])
                .collect();
            let mut c = 1;
            while forbidden.contains(&c) {
                c += 1;
            }
            color[orig] = c;
        }
    };
    assign_skippables(&parts.sx, &parts.f1);
    assign_skippables(&parts.x, &parts.f2);

    let coloring = Coloring {
        color,
        palette_size: 3,
    };
    if !coloring.in_palette() || !proper_on_edges(d.derived(), &coloring) {
        return Err(HellyError::Contradiction {
            op: OP,
            detail: format!(
                "coloring {:?} is not proper for the derived edges",
                coloring.color
            ),
        });
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::Side;

    fn hg(n: usize, edges: &[&[usize]]) -> OrderedHypergraph {
        OrderedHypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn aba(n: usize, edges: &[&[usize]]) -> AbaFree {
        AbaFree::new(hg(n, edges)).unwrap()
    }

    fn dual(n: usize, edges: &[&[usize]], x: &[usize]) -> DeltaHypergraph {
        DeltaHypergraph::all_straight(AbaFree::new(hg(n, edges)).unwrap(), x.to_vec()).unwrap()
    }

    #[test]
    fn aba_coloring_alternates_on_unskippables() {
        let f = aba(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(color_aba_3(&f).color, vec![1, 2, 1, 2]);
    }

    #[test]
    fn aba_coloring_gives_skippables_the_third_color() {
        let f = aba(3, &[&[0, 2]]);
        let c = color_aba_3(&f);
        assert_eq!(c.color, vec![1, 3, 2]);
        assert!(is_proper(&f, &c));
    }

    #[test]
    fn aba_coloring_single_vertex() {
        assert_eq!(color_aba_3(&aba(1, &[])).color, vec![1]);
    }

    #[test]
    fn pshp_coloring_separating_pairs_on_four_points() {
        // Halfplane-separable pairs for points (0,0),(1,3),(2,1),(4,0):
        // topvertices {0,1,3}, bottomvertices {0,3}, vertex 2 interior.
        let p = PshpHypergraph::from_labeled(
            4,
            vec![
                (vec![0, 1], Side::Bottom),
                (vec![0, 2], Side::Bottom),
                (vec![0, 3], Side::Bottom),
                (vec![1, 2], Side::Top),
                (vec![1, 3], Side::Top),
                (vec![2, 3], Side::Both),
            ],
        )
        .unwrap();
        let profile = p.extremal_profile();
        assert_eq!(profile.topvertices, vec![0, 1, 3]);
        assert_eq!(profile.bottomvertices, vec![0, 3]);
        let c = color_pshp_4(&p);
        assert_eq!(c.color, vec![1, 2, 4, 3]);
        assert!(is_proper(p.base(), &c));
    }

    #[test]
    fn pshp_coloring_full_topset_reuses_colors() {
        let p = PshpHypergraph::from_labeled(3, vec![(vec![0, 1, 2], Side::Top)]).unwrap();
        let c = color_pshp_4(&p);
        assert_eq!(c.color, vec![1, 2, 1]);
        assert!(is_proper(p.base(), &c));
    }

    #[test]
    fn pshp_coloring_two_vertices() {
        let p = PshpHypergraph::from_labeled(2, vec![(vec![0, 1], Side::Top)]).unwrap();
        assert_eq!(color_pshp_4(&p).color, vec![1, 2]);
    }

    #[test]
    fn dual_coloring_triangle_uses_three_distinct_colors() {
        let d = dual(3, &[&[0, 1], &[1, 2], &[0, 2]], &[]);
        let aux = aux_graph(&d).unwrap();
        assert_eq!(aux.u, vec![0, 2]);
        assert!(aux.graph.has_edge(0, 2));
        let c = color_dual_pshp_3(&d).unwrap();
        assert_eq!(c.color, vec![2, 3, 1]);
        let mut sorted = c.color.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
    }

    #[test]
    fn dual_coloring_no_large_edges_is_trivially_proper() {
        let d = dual(2, &[&[0, 1], &[1]], &[1]);
        assert_eq!(color_dual_pshp_3(&d).unwrap().color, vec![1, 1]);
    }

    #[test]
    fn dual_coloring_handles_edges_complemented_inside_x() {
        // Derived edges {1,2} and {0,1,2,3,4}: the within-X part of the
        // family is the complement of the base restriction, so both X-interior
        // vertices are unskippable there and {1,2} gets two colors.
        let d = dual(5, &[&[0, 3], &[4]], &[0, 1, 2, 3]);
        let c = color_dual_pshp_3(&d).unwrap();
        assert_eq!(c.color, vec![2, 1, 2, 1, 1]);
    }

    #[test]
    fn dual_coloring_with_empty_sign_set_matches_aba_setting() {
        let d = dual(6, &[&[0, 1, 2], &[2, 3], &[3, 4, 5], &[1, 2, 3, 4]], &[]);
        let c = color_dual_pshp_3(&d).unwrap();
        assert!(is_proper(&d.derived_hypergraph(), &c));
        assert!(c.in_palette());
    }

    #[test]
    fn dual_coloring_rejects_mixed_flags() {
        use crate::delta::Flag;
        let base = AbaFree::new(hg(2, &[&[0, 1]])).unwrap();
        let d = DeltaHypergraph::new(base, vec![], vec![Flag::Complemented]).unwrap();
        assert_eq!(
            color_dual_pshp_3(&d),
            Err(HellyError::Precondition(Precondition::MixedFlags))
        );
    }

    #[test]
    fn aux_graph_degeneracy_stays_low() {
        let d = dual(5, &[&[0, 1, 2, 3, 4], &[1, 2], &[2, 3]], &[1, 3]);
        let aux = aux_graph(&d).unwrap();
        let (degen, _) = degeneracy(&aux.graph);
        assert!(degen <= 2);
    }

    #[test]
    fn proper_check_examples() {
        let k3 = hg(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert!(is_proper(
            &k3,
            &Coloring {
                color: vec![1, 2, 3],
                palette_size: 3
            }
        ));
        let single = hg(2, &[&[0, 1]]);
        assert!(!is_proper(
            &single,
            &Coloring {
                color: vec![1, 1],
                palette_size: 3
            }
        ));
        let h0 = hg(
            6,
            &[
                &[0, 1, 2],
                &[0, 1, 3],
                &[2, 3, 4],
                &[2, 3, 5],
                &[0, 4, 5],
                &[1, 4, 5],
            ],
        );
        assert!(is_proper(
            &h0,
            &Coloring {
                color: vec![1, 2, 1, 2, 1, 2],
                palette_size: 2
            }
        ));
    }
}
