//! Differential property suite: runs every algorithm against independently
//! mirrored preconditions, re-validated certificates, exhaustive oracles and
//! the structural lemmas, over a fixed corpus plus seeded random, geometric
//! and wiring-derived instances. Every failed check becomes a violation
//! carrying the canonical instance text, so it can be replayed.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{aux_graph, color_aba_3, color_dual_pshp_3, color_pshp_4, is_proper};
use crate::delta::{DeltaHypergraph, Flag};
use crate::extremal::{
    is_extremal_by_singleton, nearest_unskippable, unskippable_vertices, PshpHypergraph, Side,
};
use crate::generators::{
    gen_all_subsets_minus_one, gen_disjoint_blocks, gen_from_wiring, gen_h0, gen_halfplane, gen_k4,
    gen_random_abafree, gen_random_pshp,
};
use crate::geometry::{Point, PointSet};
use crate::helly::{
    cover_aba_2, cover_hemi_pairwise, cover_pshp_3wise_with, cover_pshp_pairwise, hit_aba_2,
    hit_hemi_pairwise, hit_pshp_pairwise, hit_pshp_triplewise, CoverCert, FaultInjection,
    HellyError, HittingCert,
};
use crate::hypergraph::{AbaFree, Hyperedge, OrderedHypergraph};
use crate::instance::{emit_string, Instance, InstanceData};
use crate::oracle::{
    chromatic_number, degeneracy, min_cover, min_cover_bnb, min_hitting_set, min_hitting_set_bnb,
    OracleBudget, OracleError,
};
use crate::wiring::{non_pappus_wiring, WireSide, WiringDiagram};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Seeds `seed_start..seed_end`; each seed yields one random ABA-free,
    /// one pshp, one dual and one hemisphere instance.
    pub seed_start: u64,
    pub seed_end: u64,
    pub max_n: usize,
    pub max_m: usize,
    /// Number of random rational point sets (plus a few fixed ones).
    pub point_sets: usize,
    pub max_point_n: usize,
    /// Number of random loose wirings (plus the fixed presets).
    pub wirings: usize,
    pub max_wires: usize,
    pub budget: OracleBudget,
    pub fault: FaultInjection,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed_start: 0,
            seed_end: 25,
            max_n: 10,
            max_m: 12,
            point_sets: 8,
            max_point_n: 8,
            wirings: 6,
            max_wires: 6,
            budget: OracleBudget::default(),
            fault: FaultInjection::default(),
        }
    }
}

/// One failed check: which operation, what went wrong, and the canonical
/// instance text to replay it on.
#[derive(Debug, Clone)]
pub struct Violation {
    pub op: String,
    pub detail: String,
    pub instance: String,
}

#[derive(Debug)]
pub struct SuiteReport {
    pub instances: usize,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut s = Suite {
        cfg,
        instances: 0,
        checks: 0,
        violations: Vec::new(),
    };
    s.fixed_corpus();
    for seed in cfg.seed_start..cfg.seed_end {
        s.random_instances(seed);
    }
    s.point_set_instances();
    s.wiring_instances();
    SuiteReport {
        instances: s.instances,
        checks: s.checks,
        violations: s.violations,
    }
}

struct Suite<'a> {
    cfg: &'a SuiteConfig,
    instances: usize,
    checks: u64,
    violations: Vec<Violation>,
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Suite<'_> {
    fn check(&mut self, ok: bool, text: &str, op: &str, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                op: op.to_string(),
                detail: detail(),
                instance: text.to_string(),
            });
        }
    }

    // ----- instance sources -------------------------------------------------

    fn fixed_corpus(&mut self) {
        for l in [3usize, 4, 5] {
            self.aba_checks(&gen_all_subsets_minus_one(l), None);
        }
        for blocks in [vec![2usize, 2, 2], vec![1, 1], vec![3], vec![1, 2, 1]] {
            self.aba_checks(&gen_disjoint_blocks(&blocks), None);
        }
        for k in [2usize, 3] {
            self.plain_checks(&gen_h0(k));
        }
        self.pshp_checks(&gen_k4(), None);

        // Regression fixture sensitive to the H1 tie-break of the 3-wise
        // cover: with the genuine argmax rule the cover is found; picking a
        // minimum-overlap edge instead walks into a contradiction.
        let tie_break_probe = PshpHypergraph::from_top_bottom(
            4,
            vec![
                vec![0],
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
            ],
            Vec::new(),
        )
        .expect("fixture family is its own ABA-free witness");
        self.pshp_checks(&tie_break_probe, None);

        let two_wires = WiringDiagram::new(2, vec![0], vec![WireSide::Above; 2])
            .expect("one crossing on two wires is a valid wiring");
        self.pshp_checks(&gen_from_wiring(&two_wires), None);
        self.pshp_checks(&gen_from_wiring(&non_pappus_wiring()), None);
    }

    fn random_instances(&mut self, seed: u64) {
        let mut shape = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5EED_CAFE));
        let n = shape.gen_range(1..=self.cfg.max_n);
        let m = shape.gen_range(0..=self.cfg.max_m);

        let (f, _) = gen_random_abafree(n, m, seed);
        self.aba_checks(&f, Some(seed));

        let (p, _) = gen_random_pshp(n, m, seed);
        self.pshp_checks(&p, Some(seed));

        let (base, _) = gen_random_abafree(n, m, seed ^ 0x00D1_AB10);
        let x: Vec<usize> = (0..n).filter(|_| shape.gen::<bool>()).collect();
        let straight = DeltaHypergraph::all_straight(base.clone(), x.clone())
            .expect("sign vertices come from 0..n");
        self.dual_checks(&straight, Some(seed));

        let flags: Vec<Flag> = (0..base.edge_count())
            .map(|_| {
                if shape.gen::<bool>() {
                    Flag::Straight
                } else {
                    Flag::Complemented
                }
            })
            .collect();
        let hemi = DeltaHypergraph::new(base, x, flags).expect("sign vertices come from 0..n");
        self.hemi_checks(&hemi, Some(seed));
    }

    fn point_set_instances(&mut self) {
        let fixed: Vec<Vec<(i64, i64)>> = vec![
            vec![(0, 0), (1, 3), (2, 1), (4, 0)],
            vec![(0, 0), (1, 1), (2, 2)],
            vec![(0, 0), (1, 1)],
            vec![(0, 5)],
        ];
        for coords in fixed {
            let ps = PointSet::from_ints(&coords).expect("fixed coordinates have distinct x");
            self.halfplane_checks(&ps);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x0901_0517);
        for _ in 0..self.cfg.point_sets {
            let n = rng.gen_range(1..=self.cfg.max_point_n);
            let points: Vec<Point> = (0..n)
                .map(|i| {
                    // x = i + jitter in (-1/2, 1/2) keeps x-coordinates
                    // distinct while exercising non-integer rationals.
                    let x = BigRational::new(
                        BigInt::from(4 * i as i64 + rng.gen_range(-1i64..=1)),
                        BigInt::from(4),
                    );
                    let y = BigRational::new(
                        BigInt::from(rng.gen_range(-8i64..=8)),
                        BigInt::from(rng.gen_range(1i64..=3)),
                    );
                    Point::new(x, y)
                })
                .collect();
            let ps = PointSet::new(points).expect("jittered grid x-coordinates are distinct");
            self.halfplane_checks(&ps);
        }
    }

    fn wiring_instances(&mut self) {
        let mut rng = ChaCha8Rng::seed_from_u64(0x3713_0CA7);
        for _ in 0..self.cfg.wirings {
            let m = rng.gen_range(1..=self.cfg.max_wires);
            let max_crossings = m * (m - 1) / 2;
            let target = rng.gen_range(0..=max_crossings);
            let mut tracks: Vec<usize> = (0..m).collect();
            let mut crossed = vec![false; m * m];
            let mut crossings = Vec::new();
            while crossings.len() < target {
                let open: Vec<usize> = (0..m.saturating_sub(1))
                    .filter(|&c| {
                        let (i, j) = (tracks[c].min(tracks[c + 1]), tracks[c].max(tracks[c + 1]));
                        !crossed[i * m + j]
                    })
                    .collect();
                let Some(&c) = open.get(rng.gen_range(0..open.len().max(1))) else {
                    break;
                };
                let (i, j) = (tracks[c].min(tracks[c + 1]), tracks[c].max(tracks[c + 1]));
                crossed[i * m + j] = true;
                tracks.swap(c, c + 1);
                crossings.push(c);
            }
            let sides: Vec<WireSide> = (0..m)
                .map(|_| {
                    if rng.gen::<bool>() {
                        WireSide::Above
                    } else {
                        WireSide::Below
                    }
                })
                .collect();
            let w = WiringDiagram::new(m, crossings, sides)
                .expect("greedy unswapped-pair walk builds a loose wiring");
            self.pshp_checks(&gen_from_wiring(&w), None);
        }
    }

    // ----- per-class checkers ----------------------------------------------

    fn plain_checks(&mut self, h: &OrderedHypergraph) {
        self.instances += 1;
        let text = emit_string(&Instance::new(InstanceData::Plain(h.clone())));
        self.oracle_agreement(&text, h);
    }

    fn aba_checks(&mut self, f: &AbaFree, seed: Option<u64>) {
        self.instances += 1;
        let mut inst = Instance::new(InstanceData::Aba(f.clone()));
        if let Some(seed) = seed {
            inst = inst.with_seed(seed);
        }
        let text = emit_string(&inst);
        let h = f.hypergraph();

        let pre_hit = h.empty_edge().is_none() && h.pairwise_intersecting();
        self.report_hit(&text, "hit_aba_2", pre_hit, hit_aba_2(f), h, 2);
        let pre_cover = h.n() >= 2 && h.pairs_covered();
        self.report_cover(&text, "cover_aba_2", pre_cover, cover_aba_2(f), h, 2);

        let c = color_aba_3(f);
        self.check(
            is_proper(h, &c) && c.palette_size <= 3,
            &text,
            "color_aba_3",
            || format!("coloring {:?} is not a proper 3-coloring", c.color),
        );
        self.chromatic_bound(&text, h, 3);
        self.oracle_agreement(&text, h);

        // An ABA-free family is also a pseudohalfplane family of topsets.
        self.pshp_checks(&PshpHypergraph::from_aba_free(f), seed);
    }

    fn pshp_checks(&mut self, p: &PshpHypergraph, seed: Option<u64>) {
        self.instances += 1;
        let mut inst = Instance::new(InstanceData::Pshp(p.clone()));
        if let Some(seed) = seed {
            inst = inst.with_seed(seed);
        }
        let text = emit_string(&inst);
        let base = p.base();

        let pre_hit2 = base.empty_edge().is_none() && base.pairwise_intersecting();
        self.report_hit(
            &text,
            "hit_pshp_pairwise",
            pre_hit2,
            hit_pshp_pairwise(p),
            base,
            3,
        );
        let pre_hit3 = base.empty_edge().is_none() && base.triplewise_intersecting();
        self.report_hit(
            &text,
            "hit_pshp_triplewise",
            pre_hit3,
            hit_pshp_triplewise(p),
            base,
            2,
        );
        let pre_cover3 = base.n() >= 3 && base.triples_covered();
        self.report_cover(
            &text,
            "cover_pshp_3wise",
            pre_cover3,
            cover_pshp_3wise_with(p, self.cfg.fault),
            base,
            2,
        );
        let pre_cover2 = base.n() >= 2 && base.pairs_covered();
        self.report_cover(
            &text,
            "cover_pshp_pairwise",
            pre_cover2,
            cover_pshp_pairwise(p),
            base,
            3,
        );

        let c = color_pshp_4(p);
        self.check(
            is_proper(base, &c) && c.palette_size <= 4,
            &text,
            "color_pshp_4",
            || format!("coloring {:?} is not a proper 4-coloring", c.color),
        );
        self.chromatic_bound(&text, base, 4);
        self.oracle_agreement(&text, base);
        self.structure_checks(&text, p);
    }

    fn dual_checks(&mut self, d: &DeltaHypergraph, seed: Option<u64>) {
        self.instances += 1;
        let mut inst = Instance::new(InstanceData::DualPshp(d.clone()));
        if let Some(seed) = seed {
            inst = inst.with_seed(seed);
        }
        let text = emit_string(&inst);

        match aux_graph(d) {
            Ok(aux) => {
                let (k, _) = degeneracy(&aux.graph);
                self.check(k <= 2, &text, "aux_graph", || {
                    format!("auxiliary graph degeneracy {k} exceeds 2")
                });
            }
            Err(e) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: "aux_graph".into(),
                    detail: e.to_string(),
                    instance: text.clone(),
                });
            }
        }
        match color_dual_pshp_3(d) {
            Ok(c) => {
                let derived = d.derived_hypergraph();
                self.check(
                    is_proper(&derived, &c) && c.palette_size <= 3,
                    &text,
                    "color_dual_pshp_3",
                    || format!("coloring {:?} is not a proper 3-coloring", c.color),
                );
            }
            Err(e) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: "color_dual_pshp_3".into(),
                    detail: e.to_string(),
                    instance: text.clone(),
                });
            }
        }
        self.chromatic_bound(&text, &d.derived_hypergraph(), 3);
        self.hemi_ops(&text, d);
    }

    fn hemi_checks(&mut self, d: &DeltaHypergraph, seed: Option<u64>) {
        self.instances += 1;
        let mut inst = Instance::new(InstanceData::Hemi(d.clone()));
        if let Some(seed) = seed {
            inst = inst.with_seed(seed);
        }
        let text = emit_string(&inst);
        self.hemi_ops(&text, d);
    }

    fn hemi_ops(&mut self, text: &str, d: &DeltaHypergraph) {
        let derived = d.derived_hypergraph();
        let n = d.n();
        let no_empty = d.derived().iter().all(|e| !e.is_empty());
        let pre_hit = n >= 2 && no_empty && derived.pairwise_intersecting();
        self.report_hit(
            text,
            "hit_hemi_pairwise",
            pre_hit,
            hit_hemi_pairwise(d),
            &derived,
            4,
        );
        let pre_cover = n >= 2 && derived.pairs_covered();
        // The cover certificate indexes the raw derived list, so verify
        // against that; the oracle minimum is blind to duplicates anyway.
        let pre = pre_cover;
        match (pre, cover_hemi_pairwise(d)) {
            (true, Ok(cert)) => {
                self.check(
                    cert.verify(n, d.derived()),
                    text,
                    "cover_hemi_pairwise",
                    || format!("certificate {:?} fails re-validation", cert.edge_indices),
                );
                self.cover_oracle(
                    text,
                    "cover_hemi_pairwise",
                    &derived,
                    4,
                    cert.edge_indices.len(),
                );
            }
            (true, Err(e)) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: "cover_hemi_pairwise".into(),
                    detail: format!("rejected although the precondition holds: {e}"),
                    instance: text.to_string(),
                });
            }
            (false, Err(HellyError::Precondition(_))) => self.checks += 1,
            (false, other) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: "cover_hemi_pairwise".into(),
                    detail: format!("expected a precondition rejection, got {other:?}"),
                    instance: text.to_string(),
                });
            }
        }
    }

    fn halfplane_checks(&mut self, ps: &PointSet) {
        let p = gen_halfplane(ps);
        let profile = p.extremal_profile();
        let inst = Instance::new(InstanceData::Pshp(p.clone())).with_points(ps.clone());
        let text = emit_string(&inst);
        self.check(
            profile.topvertices == ps.upper_hull_vertices(),
            &text,
            "hull_profile",
            || {
                format!(
                    "topvertices {:?} differ from the upper hull {:?}",
                    profile.topvertices,
                    ps.upper_hull_vertices()
                )
            },
        );
        self.check(
            profile.bottomvertices == ps.lower_hull_vertices(),
            &text,
            "hull_profile",
            || {
                format!(
                    "bottomvertices {:?} differ from the lower hull {:?}",
                    profile.bottomvertices,
                    ps.lower_hull_vertices()
                )
            },
        );
        self.pshp_checks(&p, None);

        // The same instance without the trivial cuts exercises the hitting
        // theorems, which reject empty edges.
        let labeled: Vec<(Vec<usize>, Side)> = p
            .edges()
            .iter()
            .zip(p.sides())
            .filter(|(e, _)| !e.is_empty() && e.len() < p.n())
            .map(|(e, &s)| (e.members().to_vec(), s))
            .collect();
        if !labeled.is_empty() {
            let proper = PshpHypergraph::from_labeled(p.n(), labeled)
                .expect("sub-family of a valid instance");
            self.pshp_checks(&proper, None);
        }
    }

    // ----- differential harness ---------------------------------------------

    fn report_hit(
        &mut self,
        text: &str,
        op: &str,
        pre: bool,
        result: Result<HittingCert, HellyError>,
        oracle_h: &OrderedHypergraph,
        bound: usize,
    ) {
        match (pre, result) {
            (true, Ok(cert)) => {
                self.check(cert.verify(oracle_h.edges()), text, op, || {
                    format!("certificate {:?} fails re-validation", cert.vertices)
                });
                self.check(cert.vertices.len() <= bound, text, op, || {
                    format!("certificate {:?} exceeds the bound {bound}", cert.vertices)
                });
                match min_hitting_set(oracle_h, &self.cfg.budget) {
                    Ok(min) => {
                        self.check(min.len() <= bound, text, op, || {
                            format!(
                                "oracle minimum {} exceeds the theorem bound {bound}",
                                min.len()
                            )
                        });
                        self.check(min.len() <= cert.vertices.len(), text, op, || {
                            format!(
                                "oracle minimum {} exceeds certificate size {}",
                                min.len(),
                                cert.vertices.len()
                            )
                        });
                    }
                    Err(OracleError::Budget { .. }) => {}
                    Err(e) => self.check(false, text, op, || format!("oracle failed: {e}")),
                }
            }
            (true, Err(e)) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: op.to_string(),
                    detail: format!("rejected although the precondition holds: {e}"),
                    instance: text.to_string(),
                });
            }
            (false, Err(HellyError::Precondition(_))) => self.checks += 1,
            (false, other) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: op.to_string(),
                    detail: format!("expected a precondition rejection, got {other:?}"),
                    instance: text.to_string(),
                });
            }
        }
    }

    fn report_cover(
        &mut self,
        text: &str,
        op: &str,
        pre: bool,
        result: Result<CoverCert, HellyError>,
        h: &OrderedHypergraph,
        bound: usize,
    ) {
        match (pre, result) {
            (true, Ok(cert)) => {
                self.check(cert.verify(h.n(), h.edges()), text, op, || {
                    format!("certificate {:?} fails re-validation", cert.edge_indices)
                });
                self.cover_oracle(text, op, h, bound, cert.edge_indices.len());
            }
            (true, Err(e)) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: op.to_string(),
                    detail: format!("rejected although the precondition holds: {e}"),
                    instance: text.to_string(),
                });
            }
            (false, Err(HellyError::Precondition(_))) => self.checks += 1,
            (false, other) => {
                self.checks += 1;
                self.violations.push(Violation {
                    op: op.to_string(),
                    detail: format!("expected a precondition rejection, got {other:?}"),
                    instance: text.to_string(),
                });
            }
        }
    }

    fn cover_oracle(
        &mut self,
        text: &str,
        op: &str,
        h: &OrderedHypergraph,
        bound: usize,
        cert_size: usize,
    ) {
        self.check(cert_size <= bound, text, op, || {
            format!("certificate size {cert_size} exceeds the bound {bound}")
        });
        match min_cover(h, &self.cfg.budget) {
            Ok(min) => {
                self.check(min.len() <= bound, text, op, || {
                    format!(
                        "oracle minimum {} exceeds the theorem bound {bound}",
                        min.len()
                    )
                });
                self.check(min.len() <= cert_size, text, op, || {
                    format!(
                        "oracle minimum {} exceeds certificate size {cert_size}",
                        min.len()
                    )
                });
            }
            Err(OracleError::Budget { .. }) => {}
            Err(e) => self.check(false, text, op, || format!("oracle failed: {e}")),
        }
    }

    fn chromatic_bound(&mut self, text: &str, h: &OrderedHypergraph, bound: usize) {
        match chromatic_number(h, h.n().max(1), &self.cfg.budget) {
            Ok(chi) => self.check(chi <= bound, text, "chromatic_number", || {
                format!("chromatic number {chi} exceeds the class bound {bound}")
            }),
            Err(OracleError::Budget { .. }) => {}
            Err(e) => self.check(false, text, "chromatic_number", || {
                format!("oracle failed: {e}")
            }),
        }
    }

    /// Enumeration oracle vs. branch-and-bound oracle on the same input.
    fn oracle_agreement(&mut self, text: &str, h: &OrderedHypergraph) {
        if h.empty_edge().is_none() {
            match (
                min_hitting_set(h, &self.cfg.budget),
                min_hitting_set_bnb(h, &self.cfg.budget),
            ) {
                (Ok(a), Ok(b)) => self.check(a.len() == b, text, "oracle_hitting", || {
                    format!(
                        "enumeration found {} but branch-and-bound found {b}",
                        a.len()
                    )
                }),
                (Err(OracleError::Budget { .. }), _) | (_, Err(OracleError::Budget { .. })) => {}
                (a, b) => self.check(false, text, "oracle_hitting", || {
                    format!("oracle disagreement: {a:?} vs {b:?}")
                }),
            }
        }
        let covered = (0..h.n()).all(|v| h.edges().iter().any(|e| e.contains(v)));
        if covered {
            match (
                min_cover(h, &self.cfg.budget),
                min_cover_bnb(h, &self.cfg.budget),
            ) {
                (Ok(a), Ok(b)) => self.check(a.len() == b, text, "oracle_cover", || {
                    format!(
                        "enumeration found {} but branch-and-bound found {b}",
                        a.len()
                    )
                }),
                (Err(OracleError::Budget { .. }), _) | (_, Err(OracleError::Budget { .. })) => {}
                (a, b) => self.check(false, text, "oracle_cover", || {
                    format!("oracle disagreement: {a:?} vs {b:?}")
                }),
            }
        }
    }

    // ----- structural lemmas -------------------------------------------------

    fn structure_checks(&mut self, text: &str, p: &PshpHypergraph) {
        let n = p.n();
        let profile = p.extremal_profile();
        let witness = p.witness_family().hypergraph().clone();
        let cofamily = witness.complement_family();

        if n >= 1 {
            let ends_ok = profile.topvertices.first() == Some(&0)
                && profile.topvertices.last() == Some(&(n - 1))
                && profile.bottomvertices.first() == Some(&0)
                && profile.bottomvertices.last() == Some(&(n - 1));
            self.check(ends_ok, text, "extremal_profile", || {
                format!(
                    "extreme vertices missing from T={:?} or B={:?}",
                    profile.topvertices, profile.bottomvertices
                )
            });
        }
        if n >= 3 {
            self.check(
                profile.extremal.len() >= 3,
                text,
                "extremal_profile",
                || {
                    format!(
                        "only {} extremal vertices on {n} vertices",
                        profile.extremal.len()
                    )
                },
            );
        }

        for v in 0..n {
            let in_top = profile.topvertices.binary_search(&v).is_ok();
            self.check(
                is_extremal_by_singleton(p, v, Side::Top) == in_top,
                text,
                "extremal_by_singleton",
                || format!("topvertex disagreement at vertex {v}"),
            );
            let in_bottom = profile.bottomvertices.binary_search(&v).is_ok();
            self.check(
                is_extremal_by_singleton(p, v, Side::Bottom) == in_bottom,
                text,
                "extremal_by_singleton",
                || format!("bottomvertex disagreement at vertex {v}"),
            );
        }

        for (e, &side) in p.edges().iter().zip(p.sides()) {
            if !e.is_empty() {
                self.check(
                    profile.extremal_overlap(e) > 0,
                    text,
                    "edge_contains_extremal",
                    || format!("nonempty edge {e:?} avoids every extremal vertex"),
                );
            }
            self.check(
                profile.circular_interval(e).is_interval,
                text,
                "edge_circular_interval",
                || format!("edge {e:?} does not meet the slots in a circular interval"),
            );
            if profile.extremal.iter().all(|&v| e.contains(v)) {
                self.check(e.len() == n, text, "all_extremal_means_all", || {
                    format!("edge {e:?} holds every extremal vertex yet misses a vertex")
                });
            }
            if side.is_top() {
                self.one_sided_lemmas(
                    text,
                    e,
                    &witness,
                    &profile.topvertices,
                    &profile.bottomvertices,
                );
            }
            if side.is_bottom() {
                self.one_sided_lemmas(
                    text,
                    e,
                    &cofamily,
                    &profile.bottomvertices,
                    &profile.topvertices,
                );
            }
        }

        self.cover_and_disjointness(text, p, &profile);
        if n <= 8 {
            self.vertex_deletion(text, &witness);
            self.vertex_deletion(text, &cofamily);
        }
    }

    /// Lemmas about one edge seen inside its own ABA-free family: `family`
    /// is the witness for top edges and the complement family for bottom
    /// edges, `own` its unskippables, `other` the other side's.
    fn one_sided_lemmas(
        &mut self,
        text: &str,
        e: &Hyperedge,
        family: &OrderedHypergraph,
        own: &[usize],
        other: &[usize],
    ) {
        for v in e.iter() {
            if own.binary_search(&v).is_err() {
                let (before, after) = nearest_unskippable(family, v);
                let hit =
                    before.is_some_and(|b| e.contains(b)) || after.is_some_and(|a| e.contains(a));
                self.check(hit, text, "nearest_unskippable_lemma", || {
                    format!(
                        "edge {e:?} holds skippable {v} but neither nearest unskippable \
                         ({before:?}, {after:?})"
                    )
                });
            }
        }

        let own_in: Vec<usize> = own.iter().copied().filter(|&v| e.contains(v)).collect();
        for (i, &x) in own_in.iter().enumerate() {
            for &y in &own_in[i + 1..] {
                let between_ok = own
                    .iter()
                    .copied()
                    .filter(|&t| x < t && t < y)
                    .all(|t| e.contains(t));
                self.check(between_ok, text, "between_own_side_lemma", || {
                    format!("edge {e:?} holds {x} and {y} but skips an unskippable between")
                });
            }
        }

        for &x in other.iter().filter(|&&v| e.contains(v)) {
            let all_before = (0..x).all(|v| e.contains(v));
            let all_after = (x + 1..family.n()).all(|v| e.contains(v));
            self.check(
                all_before || all_after,
                text,
                "other_side_ray_lemma",
                || format!("edge {e:?} holds the other side's extremal {x} but no full ray"),
            );
        }

        for w in other.windows(2) {
            let (p, q) = (w[0], w[1]);
            if e.contains(p) && e.contains(q) {
                let filled = (p + 1..q).all(|r| e.contains(r));
                self.check(filled, text, "consecutive_other_side_lemma", || {
                    format!("edge {e:?} holds consecutive {p},{q} but misses a vertex between")
                });
            }
        }
    }

    fn cover_and_disjointness(
        &mut self,
        text: &str,
        p: &PshpHypergraph,
        profile: &crate::extremal::ExtremalProfile,
    ) {
        let n = p.n();
        let s = profile.slots.len();
        if n == 0 || n > 64 || !(2..=128).contains(&s) {
            return;
        }
        let full = full_mask(n);
        let edge_masks: Vec<u64> = p.edges().iter().map(Hyperedge::mask).collect();

        // arc[i][j]: vertex mask of the closed slot arc walking i -> j.
        let mut arc = vec![vec![0u64; s]; s];
        for (i, row) in arc.iter_mut().enumerate() {
            let mut m = 0u64;
            for step in 0..s {
                let j = (i + step) % s;
                m |= 1u64 << profile.slots[j].vertex;
                row[j] = m;
            }
        }
        // Slot-index masks of edges, and of open arcs (endpoints excluded).
        let edge_slot_masks: Vec<u128> = p
            .edges()
            .iter()
            .map(|e| {
                profile
                    .slots
                    .iter()
                    .enumerate()
                    .filter(|(_, sl)| e.contains(sl.vertex))
                    .fold(0u128, |m, (k, _)| m | (1u128 << k))
            })
            .collect();

        // Cross-indexing arc[i][j] / arc[j][i] keeps the arc symmetry visible.
        #[allow(clippy::needless_range_loop)]
        for i in 0..s {
            for j in i + 1..s {
                if profile.slots[i].vertex == profile.slots[j].vertex {
                    continue;
                }
                // Two-edge cover: one edge holding the closed arc i..j and
                // another holding the closed arc j..i must cover everything.
                let (a1, a2) = (arc[i][j], arc[j][i]);
                let holds1: Vec<usize> = (0..edge_masks.len())
                    .filter(|&k| edge_masks[k] & a1 == a1)
                    .collect();
                let holds2: Vec<usize> = (0..edge_masks.len())
                    .filter(|&k| edge_masks[k] & a2 == a2)
                    .collect();
                for &ea in &holds1 {
                    for &eb in &holds2 {
                        self.check(
                            edge_masks[ea] | edge_masks[eb] == full,
                            text,
                            "two_arc_cover_lemma",
                            || {
                                format!(
                                    "edges {:?} and {:?} hold the two closed arcs at slots \
                                     ({i},{j}) yet miss a vertex",
                                    p.edges()[ea],
                                    p.edges()[eb]
                                )
                            },
                        );
                    }
                }

                // Disjointness: for cyclically non-adjacent slots, edges whose
                // extremal slots sit strictly inside the two open arcs are
                // vertex-disjoint.
                if j - i < 2 || s - (j - i) < 2 {
                    continue;
                }
                let mut open1 = 0u128;
                let mut k = (i + 1) % s;
                while k != j {
                    open1 |= 1u128 << k;
                    k = (k + 1) % s;
                }
                let mut open2 = 0u128;
                k = (j + 1) % s;
                while k != i {
                    open2 |= 1u128 << k;
                    k = (k + 1) % s;
                }
                let inside1: Vec<usize> = (0..edge_masks.len())
                    .filter(|&k| edge_slot_masks[k] & !open1 == 0)
                    .collect();
                let inside2: Vec<usize> = (0..edge_masks.len())
                    .filter(|&k| edge_slot_masks[k] & !open2 == 0)
                    .collect();
                for &ea in &inside1 {
                    for &eb in &inside2 {
                        self.check(
                            edge_masks[ea] & edge_masks[eb] == 0,
                            text,
                            "arc_disjointness_lemma",
                            || {
                                format!(
                                    "edges {:?} and {:?} sit in opposite open arcs at slots \
                                     ({i},{j}) yet intersect",
                                    p.edges()[ea],
                                    p.edges()[eb]
                                )
                            },
                        );
                    }
                }
            }
        }
    }

    /// Deleting one vertex can only promote it or its witness: a vertex
    /// unskippable after deleting `w` was already unskippable, or `w` was.
    fn vertex_deletion(&mut self, text: &str, family: &OrderedHypergraph) {
        let n = family.n();
        let u = unskippable_vertices(family);
        let unsk = |v: usize| u.binary_search(&v).is_ok();
        for w in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&v| v != w).collect();
            let (induced, _) = family.induced(&keep);
            for newv in unskippable_vertices(&induced) {
                let oldv = keep[newv];
                self.check(unsk(oldv) || unsk(w), text, "vertex_deletion_lemma", || {
                    format!("vertex {oldv} became unskippable only after deleting {w}")
                });
            }
        }
    }
}
