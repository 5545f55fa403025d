//! Exhaustive baselines used to cross-check the constructive algorithms.
//!
//! Everything here is deliberately naive: enumeration in a fixed order under
//! an explicit budget, with no code shared with the algorithms under test
//! beyond the core types.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use thiserror::Error;

use crate::extremal::Side;
use crate::hypergraph::{aba_witness, Hyperedge, OrderedHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_m: usize,
    pub max_subset_size: usize,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 12,
            max_m: 14,
            max_subset_size: 4,
            time_cap: Duration::from_secs(10),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("edge {edge} is empty, so no hitting set exists")]
    EmptyEdge { edge: usize },
    #[error("vertex {vertex} lies in no edge, so no cover exists")]
    UncoveredVertex { vertex: usize },
    #[error("oracle budget exceeded: {reason}")]
    Budget { reason: String },
}

fn budget_err(reason: impl Into<String>) -> OracleError {
    OracleError::Budget {
        reason: reason.into(),
    }
}

fn check_size(h: &OrderedHypergraph, budget: &OracleBudget) -> Result<(), OracleError> {
    if h.n() > budget.max_n || h.n() > 64 {
        return Err(budget_err(format!(
            "n={} exceeds max_n={}",
            h.n(),
            budget.max_n.min(64)
        )));
    }
    if h.edge_count() > budget.max_m {
        return Err(budget_err(format!(
            "m={} exceeds max_m={}",
            h.edge_count(),
            budget.max_m
        )));
    }
    Ok(())
}

struct Deadline {
    start: Instant,
    cap: Duration,
    ticks: u32,
}

impl Deadline {
    fn new(cap: Duration) -> Self {
        Deadline {
            start: Instant::now(),
            cap,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) && self.start.elapsed() > self.cap {
            return Err(budget_err("time cap exceeded"));
        }
        Ok(())
    }
}

/// Smallest hitting set by subset enumeration, sizes ascending and subsets in
/// lexicographic order, so the answer is deterministic.
pub fn min_hitting_set(
    h: &OrderedHypergraph,
    budget: &OracleBudget,
) -> Result<Vec<usize>, OracleError> {
    if let Some(edge) = h.empty_edge() {
        return Err(OracleError::EmptyEdge { edge });
    }
    check_size(h, budget)?;
    let masks: Vec<u64> = h.edges().iter().map(Hyperedge::mask).collect();
    let mut deadline = Deadline::new(budget.time_cap);
    for size in 0..=budget.max_subset_size.min(h.n()) {
        for combo in (0..h.n()).combinations(size) {
            deadline.tick()?;
            let mask = combo.iter().fold(0u64, |m, &v| m | (1 << v));
            if masks.iter().all(|&e| e & mask != 0) {
                return Ok(combo);
            }
        }
    }
    Err(budget_err(format!(
        "no hitting set of size <= {} found",
        budget.max_subset_size
    )))
}

/// Branch-and-bound hitting set used only to cross-check the enumerator.
/// Returns the minimum size.
pub fn min_hitting_set_bnb(
    h: &OrderedHypergraph,
    budget: &OracleBudget,
) -> Result<usize, OracleError> {
    if let Some(edge) = h.empty_edge() {
        return Err(OracleError::EmptyEdge { edge });
    }
    check_size(h, budget)?;
    let masks: Vec<u64> = h.edges().iter().map(Hyperedge::mask).collect();
    let mut best = h.n().min(masks.len());
    let mut deadline = Deadline::new(budget.time_cap);
    fn go(
        masks: &[u64],
        chosen: u64,
        used: usize,
        best: &mut usize,
        deadline: &mut Deadline,
    ) -> Result<(), OracleError> {
        deadline.tick()?;
        if used >= *best {
            return Ok(());
        }
        match masks.iter().find(|&&e| e & chosen == 0) {
            None => {
                *best = used;
                Ok(())
            }
            Some(&e) => {
                let mut rest = e;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    go(masks, chosen | (1 << v), used + 1, best, deadline)?;
                }
                Ok(())
            }
        }
    }
    go(&masks, 0, 0, &mut best, &mut deadline)?;
    Ok(best)
}

/// Smallest set of edges covering every vertex, by subset enumeration over
/// edge indices, sizes ascending, lexicographic within a size.
pub fn min_cover(h: &OrderedHypergraph, budget: &OracleBudget) -> Result<Vec<usize>, OracleError> {
    check_size(h, budget)?;
    let full: u64 = if h.n() == 64 {
        u64::MAX
    } else {
        (1u64 << h.n()) - 1
    };
    let masks: Vec<u64> = h.edges().iter().map(Hyperedge::mask).collect();
    let union: u64 = masks.iter().fold(0, |a, &b| a | b);
    if union != full {
        let vertex = (!union & full).trailing_zeros() as usize;
        return Err(OracleError::UncoveredVertex { vertex });
    }
    let mut deadline = Deadline::new(budget.time_cap);
    for size in 0..=budget.max_subset_size.min(masks.len()) {
        for combo in (0..masks.len()).combinations(size) {
            deadline.tick()?;
            if combo.iter().fold(0u64, |a, &i| a | masks[i]) == full {
                return Ok(combo);
            }
        }
    }
    Err(budget_err(format!(
        "no cover of size <= {} found",
        budget.max_subset_size
    )))
}

/// Cover cross-check: covering vertices by edges is hitting the transpose
/// (for vertex v, the set of edge indices containing v), solved by the
/// branch-and-bound hitter. Returns the minimum size.
pub fn min_cover_bnb(h: &OrderedHypergraph, budget: &OracleBudget) -> Result<usize, OracleError> {
    check_size(h, budget)?;
    if h.edge_count() > 64 {
        return Err(budget_err("transpose needs at most 64 edges"));
    }
    let mut incidence = vec![0u64; h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            incidence[v] |= 1 << i;
        }
    }
    if let Some(vertex) = incidence.iter().position(|&m| m == 0) {
        return Err(OracleError::UncoveredVertex { vertex });
    }
    let transpose = OrderedHypergraph::from_hyperedges(
        h.edge_count(),
        incidence
            .iter()
            .map(|&m| (0..h.edge_count()).filter(|&i| m & (1 << i) != 0).collect())
            .collect(),
    );
    min_hitting_set_bnb(&transpose, budget)
}

/// Least number of colors with no monochromatic edge of size >= 2, found by
/// exhaustive assignment with the usual new-color symmetry pruning.
/// `Err(Budget)` when more than `cap` colors would be needed.
pub fn chromatic_number(
    h: &OrderedHypergraph,
    cap: usize,
    budget: &OracleBudget,
) -> Result<usize, OracleError> {
    check_size(h, budget)?;
    let relevant: Vec<&Hyperedge> = h.edges().iter().filter(|e| e.len() >= 2).collect();
    if relevant.is_empty() {
        return Ok(if h.n() == 0 { 0 } else { 1 });
    }
    // Edges checked once fully colored: index them by their maximum vertex.
    let mut by_max: Vec<Vec<&Hyperedge>> = vec![Vec::new(); h.n()];
    for &e in &relevant {
        by_max[*e.members().last().expect("relevant edges are nonempty")].push(e);
    }
    let mut deadline = Deadline::new(budget.time_cap);
    fn go(
        colors: &mut Vec<usize>,
        v: usize,
        n: usize,
        limit: usize,
        by_max: &[Vec<&Hyperedge>],
        deadline: &mut Deadline,
    ) -> Result<bool, OracleError> {
        if v == n {
            return Ok(true);
        }
        deadline.tick()?;
        let used = colors[..v].iter().copied().max().unwrap_or(0);
        for c in 1..=limit.min(used + 1) {
            colors[v] = c;
            let ok = by_max[v].iter().all(|e| {
                let first = colors[e.members()[0]];
                !e.iter().all(|w| colors[w] == first)
            });
            if ok && go(colors, v + 1, n, limit, by_max, deadline)? {
                return Ok(true);
            }
        }
        colors[v] = 0;
        Ok(false)
    }
    for limit in 1..=cap {
        let mut colors = vec![0usize; h.n()];
        if go(&mut colors, 0, h.n(), limit, &by_max, &mut deadline)? {
            return Ok(limit);
        }
    }
    Err(budget_err(format!("chromatic number exceeds cap {cap}")))
}

/// A vertex order plus per-edge side labels realizing a hypergraph as a
/// pseudohalfplane family: relabeled topsets and complements of relabeled
/// bottomsets form an ABA-free family. `order[i]` is the original vertex
/// placed at position `i`; `sides` follows the canonical input edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PshpWitness {
    pub order: Vec<usize>,
    pub sides: Vec<Side>,
}

/// Searches side labelings (all-top first, then binary counting with bit i
/// flipping edge i to bottom) and, when `search_orders` is set, all vertex
/// permutations in lexicographic order. Returns the first find.
pub fn find_pshp_witness(
    h: &OrderedHypergraph,
    search_orders: bool,
    budget: &OracleBudget,
) -> Result<Option<PshpWitness>, OracleError> {
    check_size(h, budget)?;
    let n = h.n();
    let m = h.edge_count();
    if m >= 21 {
        return Err(budget_err(format!("2^m labelings with m={m} is too large")));
    }
    let mut deadline = Deadline::new(budget.time_cap);
    let orders: Box<dyn Iterator<Item = Vec<usize>>> = if search_orders {
        Box::new((0..n).permutations(n))
    } else {
        Box::new(std::iter::once((0..n).collect()))
    };
    for order in orders {
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let relabeled: Vec<Hyperedge> = h
            .edges()
            .iter()
            .map(|e| e.iter().map(|v| pos[v]).collect())
            .collect();
        for labeling in 0u32..(1 << m) {
            deadline.tick()?;
            let family: Vec<Hyperedge> = relabeled
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    if labeling & (1 << i) != 0 {
                        e.complement(n)
                    } else {
                        e.clone()
                    }
                })
                .collect();
            if aba_witness(&OrderedHypergraph::from_hyperedges(n, family)).is_none() {
                let sides = (0..m)
                    .map(|i| {
                        if labeling & (1 << i) != 0 {
                            Side::Bottom
                        } else {
                            Side::Top
                        }
                    })
                    .collect();
                return Ok(Some(PshpWitness { order, sides }));
            }
        }
    }
    Ok(None)
}

/// A vertex order plus a sign set realizing a hypergraph as the family
/// `F Δ X` of an ABA-free `F`. Since the derived family must equal the input
/// edges, `F` is forced to be exactly `{e Δ X}`, so the search space is
/// orders times subsets `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPshpWitness {
    pub order: Vec<usize>,
    pub x: Vec<usize>,
}

pub fn find_dual_pshp_witness(
    h: &OrderedHypergraph,
    search_orders: bool,
    budget: &OracleBudget,
) -> Result<Option<DualPshpWitness>, OracleError> {
    check_size(h, budget)?;
    let n = h.n();
    let mut deadline = Deadline::new(budget.time_cap);
    let orders: Box<dyn Iterator<Item = Vec<usize>>> = if search_orders {
        Box::new((0..n).permutations(n))
    } else {
        Box::new(std::iter::once((0..n).collect()))
    };
    for order in orders {
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let relabeled: Vec<Hyperedge> = h
            .edges()
            .iter()
            .map(|e| e.iter().map(|v| pos[v]).collect())
            .collect();
        for xmask in 0u64..(1u64 << n) {
            deadline.tick()?;
            let x: Hyperedge = (0..n).filter(|&v| xmask & (1 << v) != 0).collect();
            let family: Vec<Hyperedge> = relabeled.iter().map(|e| e.sym_diff(&x)).collect();
            if aba_witness(&OrderedHypergraph::from_hyperedges(n, family)).is_none() {
                return Ok(Some(DualPshpWitness {
                    order,
                    x: x.members().to_vec(),
                }));
            }
        }
    }
    Ok(None)
}

/// Undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }
}

/// Degeneracy by repeated removal of a minimum-degree vertex (ties to the
/// lowest index). Returns the degeneracy and the elimination order.
pub fn degeneracy(g: &SimpleGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a live vertex remains");
        degeneracy = degeneracy.max(deg[v]);
        alive[v] = false;
        order.push(v);
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    (degeneracy, order)
}
