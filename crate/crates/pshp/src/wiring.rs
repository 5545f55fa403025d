//! Wiring diagrams: x-monotone pseudoline arrangements encoded as a sequence
//! of adjacent track swaps, plus the face hypergraphs they induce.

use std::collections::BTreeMap;

use crate::extremal::{PshpError, PshpHypergraph, Side};
use crate::hypergraph::Hyperedge;
use thiserror::Error;

/// Which side of a pseudoline contributes its face set as an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WireSide {
    Above,
    Below,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WiringError {
    #[error("crossing {index} uses track {track}, but only tracks 0..{limit} can swap")]
    TrackOutOfRange {
        index: usize,
        track: usize,
        limit: usize,
    },
    #[error("pseudolines {i} and {j} cross more than once (at crossing {index})")]
    PairCrossesTwice { i: usize, j: usize, index: usize },
    #[error("got {got} side choices for {m} pseudolines")]
    SideCount { m: usize, got: usize },
}

/// `m` pseudolines on tracks `0..m` (track 0 at the bottom); `crossings[k]`
/// swaps the wires currently on tracks `crossings[k]` and `crossings[k]+1`.
/// Every unordered pair of wires may swap at most once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringDiagram {
    m: usize,
    crossings: Vec<usize>,
    sides: Vec<WireSide>,
}

impl WiringDiagram {
    pub fn new(m: usize, crossings: Vec<usize>, sides: Vec<WireSide>) -> Result<Self, WiringError> {
        if sides.len() != m {
            return Err(WiringError::SideCount {
                m,
                got: sides.len(),
            });
        }
        let w = WiringDiagram {
            m,
            crossings,
            sides,
        };
        w.check_crossings()?;
        Ok(w)
    }

    fn check_crossings(&self) -> Result<(), WiringError> {
        let mut tracks: Vec<usize> = (0..self.m).collect();
        let mut crossed = vec![false; self.m * self.m];
        for (index, &c) in self.crossings.iter().enumerate() {
            if self.m < 2 || c >= self.m - 1 {
                return Err(WiringError::TrackOutOfRange {
                    index,
                    track: c,
                    limit: self.m.saturating_sub(1),
                });
            }
            let (i, j) = (tracks[c].min(tracks[c + 1]), tracks[c].max(tracks[c + 1]));
            if crossed[i * self.m + j] {
                return Err(WiringError::PairCrossesTwice { i, j, index });
            }
            crossed[i * self.m + j] = true;
            tracks.swap(c, c + 1);
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    pub fn sides(&self) -> &[WireSide] {
        &self.sides
    }

    /// True when every pair of pseudolines crosses exactly once.
    pub fn is_simple(&self) -> bool {
        self.crossings.len() == self.m * self.m.saturating_sub(1) / 2
    }

    /// One face per sign vector realized by some cell; a face's sign vector
    /// is the set of wires it lies above. Faces are numbered by first
    /// appearance, scanning strips left to right and cells bottom to top.
    pub fn faces(&self) -> Vec<Hyperedge> {
        let mut tracks: Vec<usize> = (0..self.m).collect();
        let mut order: Vec<Hyperedge> = Vec::new();
        let mut seen: BTreeMap<Hyperedge, usize> = BTreeMap::new();
        let mut discover = |tracks: &[usize]| {
            // Cell at height h is above exactly the wires on tracks 0..h.
            for h in 0..=tracks.len() {
                let below: Hyperedge = tracks[..h].iter().copied().collect();
                if !seen.contains_key(&below) {
                    seen.insert(below.clone(), order.len());
                    order.push(below);
                }
            }
        };
        discover(&tracks);
        for &c in &self.crossings {
            tracks.swap(c, c + 1);
            discover(&tracks);
        }
        order
    }

    /// The face hypergraph: one vertex per face in discovery order, and for
    /// every pseudoline the faces on its chosen side, labeled Top for Above
    /// and Bottom for Below. The labeling is valid for every loose wiring;
    /// a failure here means the face bookkeeping itself is broken.
    pub fn face_hypergraph(&self) -> Result<PshpHypergraph, PshpError> {
        let faces = self.faces();
        let labeled = self
            .sides
            .iter()
            .enumerate()
            .map(|(wire, &side)| {
                let members: Vec<usize> = faces
                    .iter()
                    .enumerate()
                    .filter(|(_, below)| below.contains(wire) == (side == WireSide::Above))
                    .map(|(v, _)| v)
                    .collect();
                let label = match side {
                    WireSide::Above => Side::Top,
                    WireSide::Below => Side::Bottom,
                };
                (members, label)
            })
            .collect();
        PshpHypergraph::from_labeled(faces.len(), labeled)
    }
}

/// A 9-pseudoline simple arrangement that no arrangement of straight lines
/// realizes. Construction: exact perturbed coordinates for the hexagon-
/// theorem configuration (two carrier lines with three marked points each,
/// six cross-connecting lines, and the line near the three forced collinear
/// intersection points), then one tiny triangle reversed — straight lines
/// would force that triangle's orientation the other way.
pub fn non_pappus_wiring() -> WiringDiagram {
    let crossings = vec![
        0, 4, 7, 3, 4, 1, 2, 1, 5, 6, 5, 4, 3, 4, 2, 5, 1, 0, 1, 3, 4, 3, 7, 6, 7, 2, 5, 4, 3, 4,
        1, 2, 1, 5, 6, 5,
    ];
    WiringDiagram::new(9, crossings, vec![WireSide::Above; 9])
        .expect("frozen crossing sequence is a valid simple wiring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_wires_one_crossing() {
        let w = WiringDiagram::new(2, vec![0], vec![WireSide::Above; 2]).unwrap();
        let faces = w.faces();
        assert_eq!(faces.len(), 4);
        let p = w.face_hypergraph().unwrap();
        // Both wires cut off a 2-face topset; only the bottom face is in
        // neither edge.
        assert_eq!(p.n(), 4);
        let uncovered: Vec<usize> = (0..4)
            .filter(|&v| p.edges().iter().all(|e| !e.contains(v)))
            .collect();
        assert_eq!(uncovered, vec![0]);
        for e in p.edges() {
            assert_eq!(e.len(), 2);
        }
    }

    #[test]
    fn single_wire_has_two_faces() {
        let w = WiringDiagram::new(1, vec![], vec![WireSide::Above]).unwrap();
        let p = w.face_hypergraph().unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.edges(), &[Hyperedge::new(vec![1])]);
    }

    #[test]
    fn below_side_emits_bottomsets() {
        let w = WiringDiagram::new(2, vec![0], vec![WireSide::Above, WireSide::Below]).unwrap();
        let p = w.face_hypergraph().unwrap();
        assert!(p.sides().contains(&Side::Bottom));
    }

    #[test]
    fn rejects_double_crossing() {
        let err = WiringDiagram::new(2, vec![0, 0], vec![WireSide::Above; 2]).unwrap_err();
        assert_eq!(
            err,
            WiringError::PairCrossesTwice {
                i: 0,
                j: 1,
                index: 1
            }
        );
    }

    #[test]
    fn rejects_bad_track() {
        let err = WiringDiagram::new(2, vec![1], vec![WireSide::Above; 2]).unwrap_err();
        assert!(matches!(err, WiringError::TrackOutOfRange { track: 1, .. }));
    }

    #[test]
    fn rejects_side_count_mismatch() {
        let err = WiringDiagram::new(3, vec![], vec![WireSide::Above]).unwrap_err();
        assert_eq!(err, WiringError::SideCount { m: 3, got: 1 });
    }

    #[test]
    fn face_count_of_simple_arrangement() {
        // A simple arrangement of m pseudolines has 1 + m + m(m-1)/2 faces.
        let w = WiringDiagram::new(3, vec![0, 1, 0], vec![WireSide::Above; 3]).unwrap();
        assert!(w.is_simple());
        assert_eq!(w.faces().len(), 7);
        assert!(w.face_hypergraph().is_ok());
    }

    #[test]
    fn non_pappus_preset_is_a_valid_simple_wiring() {
        let w = non_pappus_wiring();
        assert_eq!(w.m(), 9);
        assert!(w.is_simple());
        assert_eq!(w.crossings().len(), 36);
        assert_eq!(w.faces().len(), 46);
        assert!(w.face_hypergraph().is_ok());
    }
}
