//! Build a small pseudohalfplane family, hit it, cover it, color it.

use pshp::coloring::color_pshp_4;
use pshp::extremal::PshpHypergraph;
use pshp::helly::{cover_pshp_pairwise, hit_pshp_pairwise};
use pshp::oracle::{min_hitting_set, OracleBudget};

fn main() {
    // Tops contain their topmost region, bottoms their bottommost; an edge
    // listed on both sides would be a band. This family is pairwise
    // intersecting, so the 3-vertex hitting bound and 3-edge cover apply.
    let p =
        PshpHypergraph::from_top_bottom(4, vec![vec![0, 1], vec![1, 2, 3]], vec![vec![0, 2, 3]])
            .expect("the side labels admit an ABA-free witness family");

    let hit = hit_pshp_pairwise(&p).expect("edges intersect pairwise");
    assert!(hit.vertices.len() <= hit.bound && hit.verify(p.edges()));
    println!("hitting set: {:?} (bound {})", hit.vertices, hit.bound);

    let cover = cover_pshp_pairwise(&p).expect("edges intersect pairwise");
    assert!(cover.verify(p.n(), p.edges()));
    println!(
        "cover edges: {:?} (bound {})",
        cover.edge_indices, cover.bound
    );

    let exact = min_hitting_set(p.base(), &OracleBudget::default())
        .expect("instance is far below the oracle budget");
    println!("exact minimum hitting set: {exact:?}");

    let coloring = color_pshp_4(&p);
    println!("colors: {:?}", coloring.color);
}
