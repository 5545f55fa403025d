//! Command-line front end. Exit codes: 0 success, 1 operation precondition
//! unsatisfied, 2 internal contradiction (a bug alarm, never expected on a
//! healthy build), 3 parse/validation/usage error, 4 oracle budget exceeded.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use pshp::delta::DeltaHypergraph;
use pshp::extremal::{PshpHypergraph, Side};
use pshp::generators;
use pshp::geometry::{Point, PointSet};
use pshp::helly::{self, FaultInjection, HellyError};
use pshp::hypergraph::{AbaFree, OrderedHypergraph};
use pshp::instance::{emit_string, parse_str, Instance, InstanceData};
use pshp::oracle::{self, OracleBudget, OracleError};
use pshp::suite::{run_suite, SuiteConfig};
use pshp::wiring::{non_pappus_wiring, WireSide, WiringDiagram};

#[derive(Parser)]
#[command(
    name = "pshp",
    version,
    about = "Helly-type bounds on pseudohalfplane hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and class-validate an instance file.
    Verify { file: PathBuf },
    /// Print unskippable vertices, extremal vertices and the slot order.
    Extremal { file: PathBuf },
    /// Compute a small hitting set with its theorem certificate.
    Hit {
        #[arg(long, value_enum)]
        mode: HitMode,
        file: PathBuf,
    },
    /// Compute a small cover by edges with its theorem certificate.
    Cover {
        #[arg(long, value_enum)]
        mode: CoverMode,
        /// Corrupt the base-edge tie-break of the 3-wise cover (testing aid).
        #[arg(long, hide = true)]
        fault_cover3: bool,
        file: PathBuf,
    },
    /// Compute a proper coloring with the class's palette bound.
    Color {
        #[arg(long, value_enum)]
        mode: ColorMode,
        file: PathBuf,
    },
    /// Generate an instance and write it in canonical form.
    Gen(GenArgs),
    /// Exhaustive baselines: exact minima and realizability searches.
    Oracle(OracleArgs),
    /// Differential self-check over generated instance streams.
    Suite(SuiteArgs),
}

#[derive(Copy, Clone, ValueEnum)]
enum HitMode {
    /// ABA-free, pairwise intersecting: 2 vertices.
    Aba2,
    /// Pseudohalfplane, pairwise intersecting: 3 vertices.
    PshpPairwise,
    /// Pseudohalfplane, 3-wise intersecting: 2 vertices.
    PshpTriple,
    /// Pseudohemisphere, pairwise intersecting: 4 vertices.
    Hemi,
}

#[derive(Copy, Clone, ValueEnum)]
enum CoverMode {
    /// ABA-free, every vertex pair co-resident: 2 edges.
    Aba2,
    /// Pseudohalfplane, every vertex pair co-resident: 3 edges.
    PshpPairwise,
    /// Pseudohalfplane, every vertex triple co-resident: 2 edges.
    PshpTriple,
    /// Pseudohemisphere, every vertex pair co-resident: 4 edges.
    Hemi,
}

#[derive(Copy, Clone, ValueEnum)]
enum ColorMode {
    /// ABA-free families: 3 colors.
    Aba3,
    /// Pseudohalfplane families: 4 colors.
    Pshp4,
    /// Dual pseudohalfplane families: 3 colors.
    Dual3,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    /// Rational points "x,y;x,y;..." (halfplane).
    #[arg(long)]
    points: Option<String>,
    /// Block count (h0) — yields 3k vertices and 2k edges.
    #[arg(long)]
    k: Option<usize>,
    /// Ground-set size (minus-one) — all (l-1)-subsets of l vertices.
    #[arg(long)]
    l: Option<usize>,
    /// Comma-separated block sizes (blocks).
    #[arg(long)]
    sizes: Option<String>,
    /// Vertex count (random kinds).
    #[arg(long)]
    n: Option<usize>,
    /// Number of edges to draw (random kinds).
    #[arg(long)]
    m: Option<usize>,
    /// RNG seed (random kinds), recorded in the instance file.
    #[arg(long)]
    seed: Option<u64>,
    /// Wire count (wiring).
    #[arg(long)]
    wires: Option<usize>,
    /// Comma-separated crossing track indices, bottom track is 0 (wiring).
    #[arg(long)]
    crossings: Option<String>,
    /// One 'a' (above) or 'b' (below) per wire (wiring), default all 'a'.
    #[arg(long)]
    wire_sides: Option<String>,
    /// Built-in wiring by name (currently "non-pappus").
    #[arg(long)]
    preset: Option<String>,
    /// Output path, stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum GenKind {
    Halfplane,
    H0,
    MinusOne,
    Blocks,
    RandomAba,
    RandomPshp,
    Wiring,
    K4,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    what: OracleWhat,
    /// Color-count cap for the chromatic search, default n.
    #[arg(long)]
    cap: Option<usize>,
    /// Try every vertex order, not just the given one (witness searches).
    #[arg(long)]
    search_orders: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    file: PathBuf,
}

#[derive(Copy, Clone, ValueEnum)]
enum OracleWhat {
    MinHit,
    MinCover,
    Chromatic,
    /// Search for a vertex order and side labeling realizing the family.
    Witness,
    /// Search for a vertex order and sign set realizing it as a dual family.
    DualWitness,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Oracle size cap on vertices.
    #[arg(long = "budget-n")]
    budget_n: Option<usize>,
    /// Oracle size cap on edges.
    #[arg(long = "budget-m")]
    budget_m: Option<usize>,
    /// Oracle cap on enumerated subset size.
    #[arg(long = "budget-subsets")]
    budget_subsets: Option<usize>,
    /// Oracle wall-clock cap in milliseconds.
    #[arg(long = "budget-ms")]
    budget_ms: Option<u64>,
}

impl BudgetArgs {
    fn to_budget(self) -> OracleBudget {
        let d = OracleBudget::default();
        OracleBudget {
            max_n: self.budget_n.unwrap_or(d.max_n),
            max_m: self.budget_m.unwrap_or(d.max_m),
            max_subset_size: self.budget_subsets.unwrap_or(d.max_subset_size),
            time_cap: self
                .budget_ms
                .map(std::time::Duration::from_millis)
                .unwrap_or(d.time_cap),
        }
    }
}

#[derive(Args)]
struct SuiteArgs {
    /// Seed range "A..B" (B exclusive).
    #[arg(long, default_value = "0..25")]
    seeds: String,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 12)]
    max_m: usize,
    #[arg(long, default_value_t = 8)]
    point_sets: usize,
    #[arg(long, default_value_t = 8)]
    max_point_n: usize,
    #[arg(long, default_value_t = 6)]
    wirings: usize,
    #[arg(long, default_value_t = 6)]
    max_wires: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Corrupt the base-edge tie-break of the 3-wise cover (testing aid).
    #[arg(long, hide = true)]
    fault_cover3: bool,
}

type Failure = (u8, String);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage problems are input errors; keep exit code 2 reserved
            // for contradictions.
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Verify { file } => verify(&file),
        Cmd::Extremal { file } => extremal(&file),
        Cmd::Hit { mode, file } => hit(mode, &file),
        Cmd::Cover {
            mode,
            fault_cover3,
            file,
        } => cover(mode, fault_cover3, &file),
        Cmd::Color { mode, file } => color(mode, &file),
        Cmd::Gen(args) => gen(args),
        Cmd::Oracle(args) => run_oracle(args),
        Cmd::Suite(args) => suite(args),
    }
}

// ----- instance loading and kind coercion ------------------------------------

fn load(path: &PathBuf) -> Result<Instance, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| (3, format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| (3, format!("cannot read {}: {e}", path.display())))?
    };
    parse_str(&text).map_err(|e| (3, format!("parse error: {e}")))
}

fn wrong_kind(inst: &Instance, wanted: &str) -> Failure {
    (
        3,
        format!("expected {wanted} instance, got kind {}", inst.kind()),
    )
}

fn as_aba(inst: &Instance) -> Result<AbaFree, Failure> {
    match &inst.data {
        InstanceData::Aba(f) => Ok(f.clone()),
        _ => Err(wrong_kind(inst, "an aba")),
    }
}

fn as_pshp(inst: &Instance) -> Result<PshpHypergraph, Failure> {
    match &inst.data {
        InstanceData::Pshp(p) => Ok(p.clone()),
        InstanceData::Aba(f) => Ok(PshpHypergraph::from_aba_free(f)),
        _ => Err(wrong_kind(inst, "a pshp or aba")),
    }
}

fn as_delta(inst: &Instance) -> Result<DeltaHypergraph, Failure> {
    match &inst.data {
        InstanceData::DualPshp(d) | InstanceData::Hemi(d) => Ok(d.clone()),
        _ => Err(wrong_kind(inst, "a dual_pshp or hemi")),
    }
}

fn as_dual(inst: &Instance) -> Result<DeltaHypergraph, Failure> {
    match &inst.data {
        InstanceData::DualPshp(d) => Ok(d.clone()),
        _ => Err(wrong_kind(inst, "a dual_pshp")),
    }
}

/// The plain hypergraph the oracles see: base edges for primal kinds,
/// derived edges for dual kinds.
fn as_base(inst: &Instance) -> OrderedHypergraph {
    match &inst.data {
        InstanceData::Plain(h) => h.clone(),
        InstanceData::Aba(f) => f.hypergraph().clone(),
        InstanceData::Pshp(p) => p.base().clone(),
        InstanceData::DualPshp(d) | InstanceData::Hemi(d) => d.derived_hypergraph(),
    }
}

fn helly_failure(e: HellyError) -> Failure {
    let code = match e {
        HellyError::Precondition(_) => 1,
        HellyError::Contradiction { .. } => 2,
    };
    (code, e.to_string())
}

fn oracle_failure(e: OracleError) -> Failure {
    let code = match e {
        OracleError::Budget { .. } => 4,
        OracleError::EmptyEdge { .. } | OracleError::UncoveredVertex { .. } => 1,
    };
    (code, e.to_string())
}

// ----- subcommands ------------------------------------------------------------

fn verify(file: &PathBuf) -> Result<(), Failure> {
    let inst = load(file)?;
    let m = match &inst.data {
        InstanceData::Plain(h) => h.edge_count(),
        InstanceData::Aba(f) => f.edge_count(),
        InstanceData::Pshp(p) => p.edges().len(),
        InstanceData::DualPshp(d) | InstanceData::Hemi(d) => d.base().edge_count(),
    };
    println!("ok: kind={} n={} edges={}", inst.kind(), inst.n(), m);
    Ok(())
}

fn extremal(file: &PathBuf) -> Result<(), Failure> {
    let inst = load(file)?;
    let p = as_pshp(&inst)?;
    let profile = p.extremal_profile();
    println!("topvertices: {:?}", profile.topvertices);
    println!("bottomvertices: {:?}", profile.bottomvertices);
    println!("extremal: {:?}", profile.extremal);
    let mut slots = String::new();
    for (i, slot) in profile.slots.iter().enumerate() {
        if i > 0 {
            slots.push(' ');
        }
        let side = if slot.side == Side::Top { 't' } else { 'b' };
        let _ = write!(slots, "{}{}", slot.vertex, side);
    }
    println!("slots: {slots}");
    Ok(())
}

fn hit(mode: HitMode, file: &PathBuf) -> Result<(), Failure> {
    let inst = load(file)?;
    let cert = match mode {
        HitMode::Aba2 => helly::hit_aba_2(&as_aba(&inst)?),
        HitMode::PshpPairwise => helly::hit_pshp_pairwise(&as_pshp(&inst)?),
        HitMode::PshpTriple => helly::hit_pshp_triplewise(&as_pshp(&inst)?),
        HitMode::Hemi => helly::hit_hemi_pairwise(&as_delta(&inst)?),
    }
    .map_err(helly_failure)?;
    println!("hitting set: {:?}", cert.vertices);
    println!("bound: {}", cert.bound);
    Ok(())
}

fn cover(mode: CoverMode, fault_cover3: bool, file: &PathBuf) -> Result<(), Failure> {
    let inst = load(file)?;
    let fault = FaultInjection {
        cover3_pick_min_overlap: fault_cover3,
    };
    let (cert, edges) = match mode {
        CoverMode::Aba2 => {
            let f = as_aba(&inst)?;
            (
                helly::cover_aba_2(&f).map_err(helly_failure)?,
                f.hypergraph().edges().to_vec(),
            )
        }
        CoverMode::PshpPairwise => {
            let p = as_pshp(&inst)?;
            (
                helly::cover_pshp_pairwise(&p).map_err(helly_failure)?,
                p.edges().to_vec(),
            )
        }
        CoverMode::PshpTriple => {
            let p = as_pshp(&inst)?;
            (
                helly::cover_pshp_3wise_with(&p, fault).map_err(helly_failure)?,
                p.edges().to_vec(),
            )
        }
        CoverMode::Hemi => {
            let d = as_delta(&inst)?;
            (
                helly::cover_hemi_pairwise(&d).map_err(helly_failure)?,
                d.derived().to_vec(),
            )
        }
    };
    println!("cover: {:?}", cert.edge_indices);
    let sets: Vec<&[usize]> = cert
        .edge_indices
        .iter()
        .map(|&i| edges[i].members())
        .collect();
    println!("cover edges: {sets:?}");
    println!("bound: {}", cert.bound);
    Ok(())
}

fn color(mode: ColorMode, file: &PathBuf) -> Result<(), Failure> {
    let inst = load(file)?;
    let coloring = match mode {
        ColorMode::Aba3 => pshp::coloring::color_aba_3(&as_aba(&inst)?),
        ColorMode::Pshp4 => pshp::coloring::color_pshp_4(&as_pshp(&inst)?),
        ColorMode::Dual3 => {
            pshp::coloring::color_dual_pshp_3(&as_dual(&inst)?).map_err(helly_failure)?
        }
    };
    println!("colors: {:?}", coloring.color);
    println!("palette: {}", coloring.palette_size);
    Ok(())
}

fn gen(args: GenArgs) -> Result<(), Failure> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| (3u8, format!("--{name} is required for this kind")))
    };
    let inst = match args.kind {
        GenKind::Halfplane => {
            let text = args
                .points
                .as_deref()
                .ok_or_else(|| (3, "--points is required for halfplane".to_string()))?;
            let ps = parse_point_list(text)?;
            Instance::new(InstanceData::Pshp(generators::gen_halfplane(&ps))).with_points(ps)
        }
        GenKind::H0 => {
            let k = need(args.k, "k")?;
            if k < 2 {
                return Err((3, "--k must be at least 2".to_string()));
            }
            Instance::new(InstanceData::Plain(generators::gen_h0(k)))
        }
        GenKind::MinusOne => {
            let l = need(args.l, "l")?;
            if l < 2 {
                return Err((3, "--l must be at least 2".to_string()));
            }
            Instance::new(InstanceData::Aba(generators::gen_all_subsets_minus_one(l)))
        }
        GenKind::Blocks => {
            let text = args
                .sizes
                .as_deref()
                .ok_or_else(|| (3, "--sizes is required for blocks".to_string()))?;
            let sizes = parse_usize_list(text)?;
            if sizes.is_empty() || sizes.contains(&0) {
                return Err((3, "--sizes needs positive block sizes".to_string()));
            }
            Instance::new(InstanceData::Aba(generators::gen_disjoint_blocks(&sizes)))
        }
        GenKind::RandomAba => {
            let (n, m) = (need(args.n, "n")?, need(args.m, "m")?);
            if n == 0 {
                return Err((3, "--n must be positive".to_string()));
            }
            let seed = args.seed.unwrap_or(0);
            let (f, complete) = generators::gen_random_abafree(n, m, seed);
            if !complete {
                eprintln!("note: only {} of {m} edges found", f.edge_count());
            }
            Instance::new(InstanceData::Aba(f)).with_seed(seed)
        }
        GenKind::RandomPshp => {
            let (n, m) = (need(args.n, "n")?, need(args.m, "m")?);
            if n == 0 {
                return Err((3, "--n must be positive".to_string()));
            }
            let seed = args.seed.unwrap_or(0);
            let (p, complete) = generators::gen_random_pshp(n, m, seed);
            if !complete {
                eprintln!("note: fewer than {m} edges found");
            }
            Instance::new(InstanceData::Pshp(p)).with_seed(seed)
        }
        GenKind::Wiring => {
            let w = wiring_from_args(&args)?;
            Instance::new(InstanceData::Pshp(generators::gen_from_wiring(&w)))
        }
        GenKind::K4 => {
            let ps = PointSet::from_ints(&[(0, 0), (1, 3), (2, 1), (4, 0)])
                .expect("distinct x-coordinates");
            Instance::new(InstanceData::Pshp(generators::gen_k4())).with_points(ps)
        }
    };
    let text = emit_string(&inst);
    match args.output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| (3, format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn wiring_from_args(args: &GenArgs) -> Result<WiringDiagram, Failure> {
    if let Some(name) = args.preset.as_deref() {
        return match name {
            "non-pappus" => Ok(non_pappus_wiring()),
            other => Err((3, format!("unknown wiring preset {other:?}"))),
        };
    }
    let m = args
        .wires
        .ok_or_else(|| (3, "--wires is required for wiring".to_string()))?;
    let crossings = match args.crossings.as_deref() {
        Some(text) => parse_usize_list(text)?,
        None => Vec::new(),
    };
    let sides = match args.wire_sides.as_deref() {
        Some(text) => text
            .chars()
            .map(|c| match c {
                'a' => Ok(WireSide::Above),
                'b' => Ok(WireSide::Below),
                other => Err((3, format!("wire side must be 'a' or 'b', got {other:?}"))),
            })
            .collect::<Result<Vec<_>, Failure>>()?,
        None => vec![WireSide::Above; m],
    };
    WiringDiagram::new(m, crossings, sides).map_err(|e| (3, format!("invalid wiring: {e}")))
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| (3, format!("invalid number {:?}: {e}", part.trim())))
        })
        .collect()
}

fn parse_point_list(text: &str) -> Result<PointSet, Failure> {
    let mut points = Vec::new();
    for part in text.split(';') {
        let (x, y) = part
            .split_once(',')
            .ok_or_else(|| (3, format!("point {part:?} is not \"x,y\"")))?;
        let x = BigRational::from_str(x.trim())
            .map_err(|e| (3, format!("invalid rational {:?}: {e}", x.trim())))?;
        let y = BigRational::from_str(y.trim())
            .map_err(|e| (3, format!("invalid rational {:?}: {e}", y.trim())))?;
        points.push(Point::new(x, y));
    }
    PointSet::new(points).map_err(|e| (3, format!("invalid point set: {e}")))
}

fn run_oracle(args: OracleArgs) -> Result<(), Failure> {
    let inst = load(&args.file)?;
    let h = as_base(&inst);
    let budget = args.budget.to_budget();
    match args.what {
        OracleWhat::MinHit => {
            let set = oracle::min_hitting_set(&h, &budget).map_err(oracle_failure)?;
            println!("minimum hitting set: {:?}", set);
            println!("size: {}", set.len());
        }
        OracleWhat::MinCover => {
            let edges = oracle::min_cover(&h, &budget).map_err(oracle_failure)?;
            println!("minimum cover: {:?}", edges);
            println!("size: {}", edges.len());
        }
        OracleWhat::Chromatic => {
            let cap = args.cap.unwrap_or_else(|| h.n().max(1));
            let chi = oracle::chromatic_number(&h, cap, &budget).map_err(oracle_failure)?;
            println!("chromatic number: {chi}");
        }
        OracleWhat::Witness => {
            match oracle::find_pshp_witness(&h, args.search_orders, &budget)
                .map_err(oracle_failure)?
            {
                Some(w) => {
                    println!("witness order: {:?}", w.order);
                    let sides: String = w
                        .sides
                        .iter()
                        .map(|s| if s.is_top() { 't' } else { 'b' })
                        .collect();
                    println!("witness sides: {sides}");
                }
                None => println!("no witness: search exhausted"),
            }
        }
        OracleWhat::DualWitness => {
            match oracle::find_dual_pshp_witness(&h, args.search_orders, &budget)
                .map_err(oracle_failure)?
            {
                Some(w) => {
                    println!("witness order: {:?}", w.order);
                    println!("witness sign set: {:?}", w.x);
                }
                None => println!("no witness: search exhausted"),
            }
        }
    }
    Ok(())
}

fn parse_seed_range(text: &str) -> Result<(u64, u64), Failure> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| (3, format!("seed range {text:?} is not \"A..B\"")))?;
    let a = a
        .trim()
        .parse::<u64>()
        .map_err(|e| (3, format!("invalid seed {a:?}: {e}")))?;
    let b = b
        .trim()
        .parse::<u64>()
        .map_err(|e| (3, format!("invalid seed {b:?}: {e}")))?;
    if a > b {
        return Err((3, format!("seed range {text:?} is reversed")));
    }
    Ok((a, b))
}

fn suite(args: SuiteArgs) -> Result<(), Failure> {
    let (seed_start, seed_end) = parse_seed_range(&args.seeds)?;
    let cfg = SuiteConfig {
        seed_start,
        seed_end,
        max_n: args.max_n,
        max_m: args.max_m,
        point_sets: args.point_sets,
        max_point_n: args.max_point_n,
        wirings: args.wirings,
        max_wires: args.max_wires,
        budget: args.budget.to_budget(),
        fault: FaultInjection {
            cover3_pick_min_overlap: args.fault_cover3,
        },
    };
    let report = run_suite(&cfg);
    println!("instances: {}", report.instances);
    println!("checks: {}", report.checks);
    if report.passed() {
        println!("suite passed");
        return Ok(());
    }
    for v in report.violations.iter().take(10) {
        println!("violation op: {}", v.op);
        println!("violation detail: {}", v.detail);
        println!("violation instance: {}", v.instance.trim_end());
    }
    Err((
        2,
        format!("suite failed: {} violations", report.violations.len()),
    ))
}
