//! Sign-set families: an ABA-free base family `F` together with a sign set
//! `X` and a per-edge choice of `F Δ X` or `(V∖F) Δ X` as the derived edge.
//!
//! With every flag [`Flag::Straight`] the derived family is a dual
//! pseudohalfplane hypergraph; with mixed flags it is a pseudohemisphere
//! hypergraph.

use crate::hypergraph::{AbaFree, Hyperedge, OrderedHypergraph};
use thiserror::Error;

/// How a base edge turns into a derived edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Flag {
    /// Derived edge is `F Δ X`.
    Straight,
    /// Derived edge is `(V∖F) Δ X`.
    Complemented,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("flag count {got} does not match base edge count {expected}")]
    FlagCount { expected: usize, got: usize },
    #[error("sign-set vertex {vertex} out of range for n = {n}")]
    SignVertexOutOfRange { vertex: usize, n: usize },
}

/// ABA-free base family plus sign set; derived edges stay parallel to the
/// base edge list (duplicates are kept, not merged).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaHypergraph {
    base: AbaFree,
    x: Hyperedge,
    flags: Vec<Flag>,
    derived: Vec<Hyperedge>,
}

impl DeltaHypergraph {
    pub fn new(base: AbaFree, x: Vec<usize>, flags: Vec<Flag>) -> Result<Self, DeltaError> {
        let n = base.n();
        let x = Hyperedge::new(x);
        if let Some(&vertex) = x.members().iter().find(|&&v| v >= n) {
            return Err(DeltaError::SignVertexOutOfRange { vertex, n });
        }
        if flags.len() != base.edge_count() {
            return Err(DeltaError::FlagCount {
                expected: base.edge_count(),
                got: flags.len(),
            });
        }
        let derived = base
            .edges()
            .iter()
            .zip(&flags)
            .map(|(e, flag)| match flag {
                Flag::Straight => e.sym_diff(&x),
                Flag::Complemented => e.complement(n).sym_diff(&x),
            })
            .collect();
        Ok(DeltaHypergraph {
            base,
            x,
            flags,
            derived,
        })
    }

    /// Every flag `Straight`: the dual-pseudohalfplane special case.
    pub fn all_straight(base: AbaFree, x: Vec<usize>) -> Result<Self, DeltaError> {
        let flags = vec![Flag::Straight; base.edge_count()];
        Self::new(base, x, flags)
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn base(&self) -> &AbaFree {
        &self.base
    }

    pub fn x(&self) -> &Hyperedge {
        &self.x
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    /// Derived edges, index-parallel to `base().edges()`.
    pub fn derived(&self) -> &[Hyperedge] {
        &self.derived
    }

    pub fn is_all_straight(&self) -> bool {
        self.flags.iter().all(|f| *f == Flag::Straight)
    }

    /// Derived family as a canonical hypergraph (duplicates merged); only
    /// suitable where edge identity does not matter, e.g. chromatic oracles.
    pub fn derived_hypergraph(&self) -> OrderedHypergraph {
        OrderedHypergraph::from_hyperedges(self.n(), self.derived.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aba(n: usize, edges: &[&[usize]]) -> AbaFree {
        let h = OrderedHypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap();
        AbaFree::new(h).unwrap()
    }

    #[test]
    fn straight_edge_is_sym_diff() {
        let d = DeltaHypergraph::all_straight(aba(3, &[&[0, 1]]), vec![2]).unwrap();
        assert_eq!(d.derived(), &[Hyperedge::new(vec![0, 1, 2])]);
    }

    #[test]
    fn complemented_edge_flips_before_sym_diff() {
        // Base edges in canonical order: {0,1} then {2}.
        let d = DeltaHypergraph::new(
            aba(3, &[&[0, 1], &[2]]),
            vec![],
            vec![Flag::Straight, Flag::Complemented],
        )
        .unwrap();
        // (V∖{2}) Δ ∅ = {0,1}: derived list keeps the duplicate.
        assert_eq!(
            d.derived(),
            &[Hyperedge::new(vec![0, 1]), Hyperedge::new(vec![0, 1])]
        );
        assert_eq!(d.derived_hypergraph().edge_count(), 1);
    }

    #[test]
    fn empty_sign_set_with_straight_flags_is_identity() {
        let base = aba(4, &[&[1, 2], &[0, 1], &[3]]);
        let d = DeltaHypergraph::all_straight(base.clone(), vec![]).unwrap();
        assert_eq!(d.derived(), base.edges());
        assert!(d.is_all_straight());
    }

    #[test]
    fn sign_set_applies_to_every_edge() {
        // F Δ X removes X-members present in F and adds the missing ones.
        let d = DeltaHypergraph::all_straight(aba(4, &[&[0, 1], &[1, 2]]), vec![1, 3]).unwrap();
        assert_eq!(
            d.derived(),
            &[Hyperedge::new(vec![0, 3]), Hyperedge::new(vec![2, 3])]
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            DeltaHypergraph::all_straight(aba(2, &[&[0]]), vec![5]),
            Err(DeltaError::SignVertexOutOfRange { vertex: 5, n: 2 })
        );
        assert_eq!(
            DeltaHypergraph::new(aba(2, &[&[0]]), vec![], vec![]),
            Err(DeltaError::FlagCount {
                expected: 1,
                got: 0
            })
        );
    }

    #[test]
    fn double_sym_diff_restores_base() {
        let base = aba(5, &[&[0, 1], &[1, 2, 3], &[2]]);
        let d = DeltaHypergraph::all_straight(base.clone(), vec![0, 2, 4]).unwrap();
        let x = d.x().clone();
        let restored: Vec<Hyperedge> = d.derived().iter().map(|e| e.sym_diff(&x)).collect();
        assert_eq!(restored.as_slice(), base.edges());
    }
}
