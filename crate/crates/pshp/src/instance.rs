//! The on-disk instance format: a single-line JSON object with a `kind` tag,
//! canonicalized on emit (edges sorted, keys in fixed order, newline
//! terminated) so that emit ∘ parse is the identity on canonical files.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delta::{DeltaError, DeltaHypergraph, Flag};
use crate::extremal::{PshpError, PshpHypergraph};
use crate::geometry::{GeometryError, Point, PointSet};
use crate::hypergraph::{AbaFree, OrderedHypergraph, ValidationError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Plain,
    Aba,
    Pshp,
    DualPshp,
    Hemi,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Kind::Plain => "plain",
            Kind::Aba => "aba",
            Kind::Pshp => "pshp",
            Kind::DualPshp => "dual_pshp",
            Kind::Hemi => "hemi",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagName {
    Straight,
    Complemented,
}

impl From<FlagName> for Flag {
    fn from(f: FlagName) -> Flag {
        match f {
            FlagName::Straight => Flag::Straight,
            FlagName::Complemented => Flag::Complemented,
        }
    }
}

impl From<Flag> for FlagName {
    fn from(f: Flag) -> FlagName {
        match f {
            Flag::Straight => FlagName::Straight,
            Flag::Complemented => FlagName::Complemented,
        }
    }
}

/// The raw serialized shape. Field order here is the canonical key order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: Kind,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bottom: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<Vec<FlagName>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<BTreeMap<String, String>>,
}

/// A parsed, class-validated instance plus its optional provenance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub data: InstanceData,
    pub points: Option<PointSet>,
    pub seed: Option<u64>,
    pub meta: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone)]
pub enum InstanceData {
    Plain(OrderedHypergraph),
    Aba(AbaFree),
    Pshp(PshpHypergraph),
    DualPshp(DeltaHypergraph),
    Hemi(DeltaHypergraph),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("kind {kind} requires field `{field}`")]
    MissingField { kind: Kind, field: &'static str },
    #[error("kind {kind} does not take field `{field}`")]
    UnexpectedField { kind: Kind, field: &'static str },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("family is not ABA-free: edges {a:?} and {b:?} interleave at {x} < {y} < {z}")]
    NotAbaFree {
        a: Vec<usize>,
        b: Vec<usize>,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error(transparent)]
    Pshp(#[from] PshpError),
    #[error(transparent)]
    Delta(#[from] DeltaError),
    #[error("kind dual_pshp requires all flags straight, flag {index} is complemented")]
    ComplementedInDual { index: usize },
    #[error("edge {edge:?} listed twice with different flags")]
    ConflictingFlags { edge: Vec<usize> },
    #[error("point {index} coordinate {text:?} is not a rational number")]
    BadRational { index: usize, text: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl Instance {
    pub fn new(data: InstanceData) -> Self {
        Instance {
            data,
            points: None,
            seed: None,
            meta: None,
        }
    }

    pub fn with_points(mut self, points: PointSet) -> Self {
        self.points = Some(points);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn kind(&self) -> Kind {
        match &self.data {
            InstanceData::Plain(_) => Kind::Plain,
            InstanceData::Aba(_) => Kind::Aba,
            InstanceData::Pshp(_) => Kind::Pshp,
            InstanceData::DualPshp(_) => Kind::DualPshp,
            InstanceData::Hemi(_) => Kind::Hemi,
        }
    }

    pub fn n(&self) -> usize {
        match &self.data {
            InstanceData::Plain(h) => h.n(),
            InstanceData::Aba(f) => f.n(),
            InstanceData::Pshp(p) => p.n(),
            InstanceData::DualPshp(d) | InstanceData::Hemi(d) => d.n(),
        }
    }
}

fn require<T>(field: Option<T>, kind: Kind, name: &'static str) -> Result<T, ParseError> {
    field.ok_or(ParseError::MissingField { kind, field: name })
}

fn forbid<T>(field: &Option<T>, kind: Kind, name: &'static str) -> Result<(), ParseError> {
    if field.is_some() {
        Err(ParseError::UnexpectedField { kind, field: name })
    } else {
        Ok(())
    }
}

fn validated_aba(n: usize, edges: Vec<Vec<usize>>) -> Result<AbaFree, ParseError> {
    let h = OrderedHypergraph::new(n, edges)?;
    AbaFree::new(h.clone()).map_err(|w| ParseError::NotAbaFree {
        a: h.edge(w.edge_a).members().to_vec(),
        b: h.edge(w.edge_b).members().to_vec(),
        x: w.x,
        y: w.y,
        z: w.z,
    })
}

/// Canonicalizes (edge, flag) pairs together so flags stay aligned with the
/// sorted edge list; an edge listed twice with different flags is an error.
fn delta_from_parts(
    n: usize,
    f: Vec<Vec<usize>>,
    x: Vec<usize>,
    flags: Vec<FlagName>,
) -> Result<DeltaHypergraph, ParseError> {
    if flags.len() != f.len() {
        return Err(DeltaError::FlagCount {
            expected: f.len(),
            got: flags.len(),
        }
        .into());
    }
    let mut pairs: Vec<(Vec<usize>, Flag)> = f
        .into_iter()
        .zip(flags.into_iter().map(Flag::from))
        .map(|(mut e, fl)| {
            e.sort_unstable();
            e.dedup();
            (e, fl)
        })
        .collect();
    pairs.sort();
    pairs.dedup();
    for w in pairs.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(ParseError::ConflictingFlags {
                edge: w[0].0.clone(),
            });
        }
    }
    let (edges, flags): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let base = validated_aba(n, edges)?;
    Ok(DeltaHypergraph::new(base, x, flags)?)
}

fn parse_points(raw: Vec<(String, String)>) -> Result<PointSet, ParseError> {
    let mut points = Vec::with_capacity(raw.len());
    for (index, (xs, ys)) in raw.into_iter().enumerate() {
        let x = BigRational::from_str(&xs).map_err(|_| ParseError::BadRational {
            index,
            text: xs.clone(),
        })?;
        let y = BigRational::from_str(&ys).map_err(|_| ParseError::BadRational {
            index,
            text: ys.clone(),
        })?;
        points.push(Point::new(x, y));
    }
    Ok(PointSet::new(points)?)
}

pub fn parse_str(text: &str) -> Result<Instance, ParseError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    parse_file(file)
}

pub fn parse_file(file: InstanceFile) -> Result<Instance, ParseError> {
    let InstanceFile {
        kind,
        n,
        edges,
        top,
        bottom,
        f,
        x,
        flags,
        points,
        seed,
        meta,
    } = file;
    let data = match kind {
        Kind::Plain | Kind::Aba => {
            forbid(&top, kind, "top")?;
            forbid(&bottom, kind, "bottom")?;
            forbid(&f, kind, "f")?;
            forbid(&x, kind, "x")?;
            forbid(&flags, kind, "flags")?;
            let edges = require(edges, kind, "edges")?;
            if kind == Kind::Plain {
                InstanceData::Plain(OrderedHypergraph::new(n, edges)?)
            } else {
                InstanceData::Aba(validated_aba(n, edges)?)
            }
        }
        Kind::Pshp => {
            forbid(&edges, kind, "edges")?;
            forbid(&f, kind, "f")?;
            forbid(&x, kind, "x")?;
            forbid(&flags, kind, "flags")?;
            let top = require(top, kind, "top")?;
            let bottom = require(bottom, kind, "bottom")?;
            InstanceData::Pshp(PshpHypergraph::from_top_bottom(n, top, bottom)?)
        }
        Kind::DualPshp | Kind::Hemi => {
            forbid(&edges, kind, "edges")?;
            forbid(&top, kind, "top")?;
            forbid(&bottom, kind, "bottom")?;
            let fam = require(f, kind, "f")?;
            let x = require(x, kind, "x")?;
            if kind == Kind::DualPshp {
                if let Some(flags) = &flags {
                    if let Some(index) = flags.iter().position(|&fl| fl == FlagName::Complemented) {
                        return Err(ParseError::ComplementedInDual { index });
                    }
                }
                let flags = vec![FlagName::Straight; fam.len()];
                InstanceData::DualPshp(delta_from_parts(n, fam, x, flags)?)
            } else {
                let flags = require(flags, kind, "flags")?;
                InstanceData::Hemi(delta_from_parts(n, fam, x, flags)?)
            }
        }
    };
    Ok(Instance {
        data,
        points: points.map(parse_points).transpose()?,
        seed,
        meta,
    })
}

fn edge_lists(h: &OrderedHypergraph) -> Vec<Vec<usize>> {
    h.edges().iter().map(|e| e.members().to_vec()).collect()
}

pub fn to_file(inst: &Instance) -> InstanceFile {
    let mut file = InstanceFile {
        kind: inst.kind(),
        n: inst.n(),
        edges: None,
        top: None,
        bottom: None,
        f: None,
        x: None,
        flags: None,
        points: inst.points.as_ref().map(|ps| {
            ps.points()
                .iter()
                .map(|p| (p.x.to_string(), p.y.to_string()))
                .collect()
        }),
        seed: inst.seed,
        meta: inst.meta.clone(),
    };
    match &inst.data {
        InstanceData::Plain(h) => file.edges = Some(edge_lists(h)),
        InstanceData::Aba(f) => file.edges = Some(edge_lists(f.hypergraph())),
        InstanceData::Pshp(p) => {
            let mut top = Vec::new();
            let mut bottom = Vec::new();
            for (e, &s) in p.edges().iter().zip(p.sides()) {
                if s.is_top() {
                    top.push(e.members().to_vec());
                }
                if s.is_bottom() {
                    bottom.push(e.members().to_vec());
                }
            }
            file.top = Some(top);
            file.bottom = Some(bottom);
        }
        InstanceData::DualPshp(d) => {
            file.f = Some(edge_lists(d.base().hypergraph()));
            file.x = Some(d.x().members().to_vec());
        }
        InstanceData::Hemi(d) => {
            file.f = Some(edge_lists(d.base().hypergraph()));
            file.x = Some(d.x().members().to_vec());
            file.flags = Some(d.flags().iter().map(|&fl| fl.into()).collect());
        }
    }
    file
}

/// Canonical single-line JSON, newline terminated.
pub fn emit_string(inst: &Instance) -> String {
    let mut s = serde_json::to_string(&to_file(inst)).expect("instance files always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn roundtrip(text: &str) -> String {
        emit_string(&parse_str(text).unwrap())
    }

    #[test]
    fn canonical_files_roundtrip_byte_identical() {
        let cases = [
            r#"{"kind":"plain","n":6,"edges":[[0,1,2],[0,1,3],[0,4,5],[1,4,5],[2,3,4],[2,3,5]]}"#,
            r#"{"kind":"aba","n":3,"edges":[[0,1],[0,2],[1,2]]}"#,
            r#"{"kind":"pshp","n":2,"top":[[0,1]],"bottom":[]}"#,
            r#"{"kind":"dual_pshp","n":3,"f":[[0,1]],"x":[1]}"#,
            r#"{"kind":"hemi","n":3,"f":[[0,1],[2]],"x":[0],"flags":["straight","complemented"]}"#,
            r#"{"kind":"pshp","n":2,"top":[[0,1]],"bottom":[[0]],"points":[["0","0"],["1","3/2"]],"seed":7,"meta":{"origin":"test"}}"#,
        ];
        for case in cases {
            let canonical = format!("{case}\n");
            assert_eq!(roundtrip(case), canonical, "case {case}");
        }
    }

    #[test]
    fn parse_canonicalizes_scrambled_edges() {
        let out = roundtrip(r#"{"kind":"plain","n":3,"edges":[[2,1],[0],[1,2]]}"#);
        assert_eq!(out, "{\"kind\":\"plain\",\"n\":3,\"edges\":[[0],[1,2]]}\n");
    }

    #[test]
    fn rejects_aba_violation_with_witness() {
        let err = parse_str(r#"{"kind":"aba","n":3,"edges":[[0,2],[1]]}"#).unwrap_err();
        match err {
            ParseError::NotAbaFree { a, b, x, y, z } => {
                assert_eq!((a, b), (vec![0, 2], vec![1]));
                assert_eq!((x, y, z), (0, 1, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_fields_foreign_to_the_kind() {
        let err = parse_str(r#"{"kind":"plain","n":2,"edges":[[0]],"x":[1]}"#).unwrap_err();
        assert!(matches!(
            err,
            ParseError::UnexpectedField { field: "x", .. }
        ));
        let err = parse_str(r#"{"kind":"pshp","n":2,"top":[[0]]}"#).unwrap_err();
        assert!(matches!(
            err,
            ParseError::MissingField {
                field: "bottom",
                ..
            }
        ));
        let err = parse_str(r#"{"kind":"hemi","n":2,"f":[[0]],"x":[]}"#).unwrap_err();
        assert!(matches!(
            err,
            ParseError::MissingField { field: "flags", .. }
        ));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_json() {
        assert!(matches!(
            parse_str(r#"{"kind":"plain","n":1,"edges":[],"bogus":3}"#),
            Err(ParseError::Json(_))
        ));
        assert!(matches!(parse_str("{"), Err(ParseError::Json(_))));
    }

    #[test]
    fn rejects_out_of_range_vertices() {
        let err = parse_str(r#"{"kind":"plain","n":2,"edges":[[0,5]]}"#).unwrap_err();
        assert!(matches!(err, ParseError::Validation(_)));
    }

    #[test]
    fn dual_pshp_accepts_straight_flags_and_rejects_complemented() {
        let ok = parse_str(r#"{"kind":"dual_pshp","n":2,"f":[[0]],"x":[],"flags":["straight"]}"#)
            .unwrap();
        // Canonical form drops the redundant all-straight flags key.
        assert_eq!(
            emit_string(&ok),
            "{\"kind\":\"dual_pshp\",\"n\":2,\"f\":[[0]],\"x\":[]}\n"
        );
        let err =
            parse_str(r#"{"kind":"dual_pshp","n":2,"f":[[0]],"x":[],"flags":["complemented"]}"#)
                .unwrap_err();
        assert!(matches!(err, ParseError::ComplementedInDual { index: 0 }));
    }

    #[test]
    fn conflicting_duplicate_flags_are_rejected() {
        let err = parse_str(
            r#"{"kind":"hemi","n":2,"f":[[0],[0]],"x":[],"flags":["straight","complemented"]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, ParseError::ConflictingFlags { .. }));
        // Identical duplicates merge silently.
        let ok = parse_str(
            r#"{"kind":"hemi","n":2,"f":[[0],[0]],"x":[],"flags":["straight","straight"]}"#,
        )
        .unwrap();
        assert_eq!(
            emit_string(&ok),
            "{\"kind\":\"hemi\",\"n\":2,\"f\":[[0]],\"x\":[],\"flags\":[\"straight\"]}\n"
        );
    }

    #[test]
    fn bad_rationals_and_duplicate_x_are_rejected() {
        let err = parse_str(r#"{"kind":"plain","n":1,"edges":[[0]],"points":[["zero","0"]]}"#)
            .unwrap_err();
        assert!(matches!(err, ParseError::BadRational { index: 0, .. }));
        let err =
            parse_str(r#"{"kind":"plain","n":2,"edges":[[0]],"points":[["1","0"],["1","2"]]}"#)
                .unwrap_err();
        assert!(matches!(err, ParseError::Geometry(_)));
    }

    #[test]
    fn rational_coordinates_reduce_on_emit() {
        let out = roundtrip(r#"{"kind":"plain","n":1,"edges":[],"points":[["2/4","-6/3"]]}"#);
        assert_eq!(
            out,
            "{\"kind\":\"plain\",\"n\":1,\"edges\":[],\"points\":[[\"1/2\",\"-2\"]]}\n"
        );
    }

    #[test]
    fn pshp_both_side_edges_appear_in_both_lists() {
        let text = r#"{"kind":"pshp","n":2,"top":[[0]],"bottom":[[0]]}"#;
        assert_eq!(roundtrip(text), format!("{text}\n"));
    }

    proptest! {
        #[test]
        fn emit_after_parse_is_idempotent(n in 1usize..6, m in 0usize..8, seed: u64) {
            let (fam, _) = crate::generators::gen_random_abafree(n, m, seed);
            let inst = Instance::new(InstanceData::Aba(fam)).with_seed(seed);
            let once = emit_string(&inst);
            let twice = emit_string(&parse_str(&once).unwrap());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn random_pshp_roundtrips(n in 1usize..6, m in 0usize..8, seed: u64) {
            let (p, _) = crate::generators::gen_random_pshp(n, m, seed);
            let inst = Instance::new(InstanceData::Pshp(p));
            let once = emit_string(&inst);
            let twice = emit_string(&parse_str(&once).unwrap());
            prop_assert_eq!(once, twice);
        }
    }
}
