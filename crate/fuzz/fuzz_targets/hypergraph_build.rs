//! Construction from raw edge lists either rejects with a validation error
//! or yields a canonical hypergraph on which the involutions hold.

#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;
use pshp::hypergraph::{is_aba_free, AbaFree, OrderedHypergraph};

#[derive(Arbitrary, Debug)]
struct Input {
    n: u8,
    edges: Vec<Vec<u8>>,
}

fuzz_target!(|input: Input| {
    let n = (input.n % 17) as usize;
    if input.edges.len() > 16 {
        return;
    }
    let edges: Vec<Vec<usize>> = input
        .edges
        .iter()
        .map(|e| e.iter().map(|&v| v as usize).collect())
        .collect();
    let Ok(h) = OrderedHypergraph::new(n, edges) else {
        return;
    };
    let twice = h.complement_family().complement_family();
    assert_eq!(
        twice, h,
        "complement is an involution on canonical families"
    );
    assert_eq!(
        is_aba_free(&h),
        AbaFree::new(h.clone()).is_ok(),
        "the predicate and the witness constructor agree"
    );
});
