//! Any accepted wiring must yield a consistent face count and a face
//! hypergraph whose witness family passes validation.

#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;
use pshp::wiring::{WireSide, WiringDiagram};

#[derive(Arbitrary, Debug)]
struct Input {
    m: u8,
    crossings: Vec<u8>,
    sides: Vec<bool>,
}

fuzz_target!(|input: Input| {
    let m = (input.m % 8) as usize;
    if input.crossings.len() > 64 {
        return;
    }
    let crossings: Vec<usize> = input.crossings.iter().map(|&c| c as usize).collect();
    let sides: Vec<WireSide> = input
        .sides
        .iter()
        .take(m)
        .map(|&b| if b { WireSide::Above } else { WireSide::Below })
        .collect();
    let Ok(w) = WiringDiagram::new(m, crossings, sides) else {
        return;
    };
    let faces = w.faces();
    assert!(
        faces.len() <= 1 + w.m() + w.crossings().len(),
        "face count bound"
    );
    let p = w
        .face_hypergraph()
        .expect("faces in discovery order admit a witness");
    assert!(
        p.edges().len() <= w.m(),
        "one edge per wire, duplicates merged"
    );
    assert_eq!(p.n(), faces.len());
});
