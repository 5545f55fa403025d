//! Pseudohalfplane hypergraphs and their extremal-vertex structure.
//!
//! A pseudohalfplane hypergraph is a family of edges each labeled as a topset
//! or bottomset (or both) such that the witness family, topsets together with
//! complements of bottomsets, is ABA-free. Topvertices are the unskippable
//! vertices of the witness family, bottomvertices those of its complement
//! family; together they are the extremal vertices, arranged in a circular
//! slot order that every edge meets in a contiguous arc.

use std::fmt;

use thiserror::Error;

use crate::hypergraph::{aba_witness, AbaFree, Hyperedge, OrderedHypergraph, ValidationError};

/// Which halfplane family an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Bottom,
    Both,
}

impl Side {
    pub fn is_top(self) -> bool {
        matches!(self, Side::Top | Side::Both)
    }

    pub fn is_bottom(self) -> bool {
        matches!(self, Side::Bottom | Side::Both)
    }

    fn merge(self, other: Side) -> Side {
        if self == other {
            self
        } else {
            Side::Both
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PshpError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(
        "witness family is not ABA-free: edges {a:?} and {b:?} repeat around \
         vertex {y} (pattern {x} < {y} < {z})"
    )]
    WitnessNotAbaFree {
        a: Hyperedge,
        b: Hyperedge,
        x: usize,
        y: usize,
        z: usize,
    },
}

/// An edge family with top/bottom labels whose witness family is ABA-free.
#[derive(Clone, PartialEq, Eq)]
pub struct PshpHypergraph {
    base: OrderedHypergraph,
    sides: Vec<Side>,
    witness: AbaFree,
}

impl PshpHypergraph {
    /// Builds from labeled raw edges. Duplicate edge sets are merged and a
    /// set labeled both ways becomes `Side::Both`.
    pub fn from_labeled(n: usize, labeled: Vec<(Vec<usize>, Side)>) -> Result<Self, PshpError> {
        for (i, (e, _)) in labeled.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(ValidationError::VertexOutOfRange {
                    edge: i,
                    vertex: v,
                    n,
                }
                .into());
            }
        }
        let mut merged: Vec<(Hyperedge, Side)> = Vec::new();
        for (raw, side) in labeled {
            let e = Hyperedge::new(raw);
            match merged.iter_mut().find(|(f, _)| *f == e) {
                Some((_, s)) => *s = s.merge(side),
                None => merged.push((e, side)),
            }
        }
        merged.sort_by(|(a, _), (b, _)| a.cmp(b));
        let base =
            OrderedHypergraph::from_hyperedges(n, merged.iter().map(|(e, _)| e.clone()).collect());
        let sides: Vec<Side> = merged.into_iter().map(|(_, s)| s).collect();
        debug_assert_eq!(base.edge_count(), sides.len());

        let witness_edges: Vec<Hyperedge> = base
            .edges()
            .iter()
            .zip(&sides)
            .flat_map(|(e, s)| {
                let mut out = Vec::new();
                if s.is_top() {
                    out.push(e.clone());
                }
                if s.is_bottom() {
                    out.push(e.complement(n));
                }
                out
            })
            .collect();
        let witness_family = OrderedHypergraph::from_hyperedges(n, witness_edges);
        let witness = AbaFree::new(witness_family).map_err(|w| {
            let fam = {
                // Rebuild to show the offending edges in the error.
                let edges: Vec<Hyperedge> = base
                    .edges()
                    .iter()
                    .zip(&sides)
                    .flat_map(|(e, s)| {
                        let mut out = Vec::new();
                        if s.is_top() {
                            out.push(e.clone());
                        }
                        if s.is_bottom() {
                            out.push(e.complement(n));
                        }
                        out
                    })
                    .collect();
                OrderedHypergraph::from_hyperedges(n, edges)
            };
            PshpError::WitnessNotAbaFree {
                a: fam.edge(w.edge_a).clone(),
                b: fam.edge(w.edge_b).clone(),
                x: w.x,
                y: w.y,
                z: w.z,
            }
        })?;
        Ok(PshpHypergraph {
            base,
            sides,
            witness,
        })
    }

    pub fn from_top_bottom(
        n: usize,
        top: Vec<Vec<usize>>,
        bottom: Vec<Vec<usize>>,
    ) -> Result<Self, PshpError> {
        let labeled = top
            .into_iter()
            .map(|e| (e, Side::Top))
            .chain(bottom.into_iter().map(|e| (e, Side::Bottom)))
            .collect();
        Self::from_labeled(n, labeled)
    }

    /// An ABA-free family seen as a pseudohalfplane family of topsets.
    pub fn from_aba_free(f: &AbaFree) -> Self {
        PshpHypergraph {
            base: f.hypergraph().clone(),
            sides: vec![Side::Top; f.edge_count()],
            witness: f.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn base(&self) -> &OrderedHypergraph {
        &self.base
    }

    pub fn edges(&self) -> &[Hyperedge] {
        self.base.edges()
    }

    pub fn side(&self, i: usize) -> Side {
        self.sides[i]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Topsets together with complements of bottomsets; ABA-free.
    pub fn witness_family(&self) -> &AbaFree {
        &self.witness
    }

    pub fn extremal_profile(&self) -> ExtremalProfile {
        ExtremalProfile::of_witness(self.n(), &self.witness)
    }
}

impl fmt::Debug for PshpHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pshp(n={}, ", self.n())?;
        for (i, (e, s)) in self.base.edges().iter().zip(&self.sides).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}:{s:?}")?;
        }
        write!(f, ")")
    }
}

/// Vertices no edge skips: `v` is skipped by edge `A` when
/// `min(A) < v < max(A)` and `v` is not in `A`. The first and last vertex are
/// always unskippable. The structural guarantees hold for ABA-free input.
pub fn unskippable_vertices(h: &OrderedHypergraph) -> Vec<usize> {
    let n = h.n();
    let mut skipped = vec![false; n];
    for e in h.edges() {
        let (lo, hi) = match (e.min(), e.max()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => continue,
        };
        for (v, s) in skipped.iter_mut().enumerate().take(hi).skip(lo + 1) {
            if !e.contains(v) {
                *s = true;
            }
        }
    }
    (0..n).filter(|&v| !skipped[v]).collect()
}

/// Nearest unskippable vertices strictly before and strictly after `v`.
pub fn nearest_unskippable(h: &OrderedHypergraph, v: usize) -> (Option<usize>, Option<usize>) {
    let u = unskippable_vertices(h);
    let before = u.iter().copied().filter(|&w| w < v).max();
    let after = u.iter().copied().find(|&w| w > v);
    (before, after)
}

/// One position of the circular order of extremal vertices. A vertex interior
/// to both the topvertex and bottomvertex lists occupies two slots; the first
/// and last vertex each occupy one slot labeled `Both`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub vertex: usize,
    pub side: Side,
}

/// Topvertices, bottomvertices and their circular arrangement
/// `(v1, t2, .., t_{k-1}, vn, b_{l-1}, .., b2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalProfile {
    pub n: usize,
    pub topvertices: Vec<usize>,
    pub bottomvertices: Vec<usize>,
    /// Sorted union of top- and bottomvertices.
    pub extremal: Vec<usize>,
    pub slots: Vec<Slot>,
}

impl ExtremalProfile {
    pub fn of_witness(n: usize, witness: &AbaFree) -> ExtremalProfile {
        let top = unskippable_vertices(witness.hypergraph());
        let bottom = unskippable_vertices(&witness.complement_family());
        Self::assemble(n, top, bottom)
    }

    fn assemble(n: usize, topvertices: Vec<usize>, bottomvertices: Vec<usize>) -> ExtremalProfile {
        let mut extremal: Vec<usize> = topvertices
            .iter()
            .chain(bottomvertices.iter())
            .copied()
            .collect();
        extremal.sort_unstable();
        extremal.dedup();

        let mut slots = Vec::new();
        if n == 1 {
            slots.push(Slot {
                vertex: 0,
                side: Side::Both,
            });
        } else if n >= 2 {
            slots.push(Slot {
                vertex: 0,
                side: Side::Both,
            });
            slots.extend(
                topvertices
                    .iter()
                    .copied()
                    .filter(|&v| v != 0 && v != n - 1)
                    .map(|vertex| Slot {
                        vertex,
                        side: Side::Top,
                    }),
            );
            slots.push(Slot {
                vertex: n - 1,
                side: Side::Both,
            });
            slots.extend(
                bottomvertices
                    .iter()
                    .copied()
                    .filter(|&v| v != 0 && v != n - 1)
                    .rev()
                    .map(|vertex| Slot {
                        vertex,
                        side: Side::Bottom,
                    }),
            );
        }
        ExtremalProfile {
            n,
            topvertices,
            bottomvertices,
            extremal,
            slots,
        }
    }

    pub fn is_extremal(&self, v: usize) -> bool {
        self.extremal.binary_search(&v).is_ok()
    }

    /// Number of extremal vertices of `edge` (vertex count, not slot count).
    pub fn extremal_overlap(&self, edge: &Hyperedge) -> usize {
        self.extremal.iter().filter(|&&v| edge.contains(v)).count()
    }

    /// Checks that the slots whose vertex lies in `edge` form one contiguous
    /// circular run and locates it.
    pub fn circular_interval(&self, edge: &Hyperedge) -> ArcResult {
        let s = self.slots.len();
        let marked: Vec<bool> = self
            .slots
            .iter()
            .map(|sl| edge.contains(sl.vertex))
            .collect();
        let count = marked.iter().filter(|&&b| b).count();
        if count == 0 {
            return ArcResult {
                is_interval: true,
                arc: None,
            };
        }
        if count == s {
            return ArcResult {
                is_interval: true,
                arc: Some((0, s)),
            };
        }
        let starts: Vec<usize> = (0..s)
            .filter(|&i| marked[i] && !marked[(i + s - 1) % s])
            .collect();
        if starts.len() == 1 {
            ArcResult {
                is_interval: true,
                arc: Some((starts[0], count)),
            }
        } else {
            ArcResult {
                is_interval: false,
                arc: None,
            }
        }
    }
}

/// Outcome of the circular-interval test: `arc` is `(start slot, length)`;
/// it is `None` when no slot is marked or the marks are not contiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcResult {
    pub is_interval: bool,
    pub arc: Option<(usize, usize)>,
}

/// Independent extremality test: `v` is a topvertex iff adding the singleton
/// `{v}` to the witness family keeps it ABA-free, and a bottomvertex iff
/// adding the complement of `{v}` does.
pub fn is_extremal_by_singleton(p: &PshpHypergraph, v: usize, side: Side) -> bool {
    let n = p.n();
    debug_assert!(v < n);
    let probe = |extra: Hyperedge| -> bool {
        let mut edges: Vec<Hyperedge> = p.witness_family().edges().to_vec();
        edges.push(extra);
        aba_witness(&OrderedHypergraph::from_hyperedges(n, edges)).is_none()
    };
    let top_ok = || probe(Hyperedge::new(vec![v]));
    let bottom_ok = || probe(Hyperedge::new(vec![v]).complement(n));
    match side {
        Side::Top => top_ok(),
        Side::Bottom => bottom_ok(),
        Side::Both => top_ok() && bottom_ok(),
    }
}
