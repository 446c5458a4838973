//! Command-line front end: subcommands, report document, and the exit-code contract.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | invalid parameters or unreadable input |
//! | 3 | geometric validation failed (construction, embedding file, or asset) |
//! | 4 | inconsistent triangle table |
//! | 5 | weak table matching no case of the classification |
//! | 6 | exhaustive guard exceeded without `--sample` |

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::classify::{classify_table, classify_theta, ClassifyError};
use crate::construct::{
    build_pq, build_star_cone, curve_link_map, data_dir, load_curated_from, table_from_embeddings, theta_embedding_layout,
    theta_link_maps, theta_status, validate_asset, verify_embedding_pair, AssetOutcome, ConstructError, GraphEmbedding,
    PqParams,
};
use crate::geom::GeomError;
use crate::graphs::GraphError;
use crate::linktable::{
    linkage_status, sample_status, validate_consistency, LinkageStatus, SampleOutcome, TableError, TriangleLinkTable,
    Witness, EXHAUSTIVE_LIMIT,
};
use crate::stars::Star;

pub const EXIT_PARAMS: i32 = 2;
pub const EXIT_GEOMETRY: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;
pub const EXIT_DICHOTOMY: i32 = 5;
pub const EXIT_GUARD: i32 = 6;

#[derive(Parser, Debug)]
#[command(name = "linkweave", version, about = "Exact linking of complete-graph embeddings and their weak-linking patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an embedding and write it to files.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Compute the triangle table of two complete-graph embeddings.
    Table {
        g: PathBuf,
        h: PathBuf,
        /// Table file to write.
        #[arg(long)]
        out: PathBuf,
    },
    /// Classify a triangle table.
    Classify {
        table: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Status, witness and classification of an embedding pair.
    Verify {
        g: PathBuf,
        h: PathBuf,
        /// Sample this many random cycle pairs instead of enumerating.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Re-validate every curated asset against its manifest.
    AssetsValidate {
        /// Asset directory; defaults to $LINKWEAVE_DATA or the shipped data.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum BuildCommand {
    /// The pq-embedding of two complete graphs.
    Pq {
        #[arg(long)]
        ell: usize,
        /// Comma-separated X cluster sizes (default: all 1).
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<usize>>,
        /// Comma-separated Y cluster sizes (default: all 1).
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<usize>>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "pq")]
        prefix: String,
    },
    /// A curve linking K_n in a star, with the embedding of K_n.
    StarCone {
        #[arg(long)]
        n: usize,
        /// Star literal `p|o1 o2|i1 i2`.
        #[arg(long)]
        star: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "star-cone")]
        prefix: String,
    },
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Write the machine-readable report (JSON) here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Include wall-clock timing in the report (makes it non-reproducible).
    #[arg(long)]
    timing: bool,
}

/// A failed command: exit code and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn table_code(e: &TableError) -> i32 {
    match e {
        TableError::Inconsistent { .. } | TableError::InconsistentTable | TableError::Conflict(..) => EXIT_INCONSISTENT,
        TableError::OrderTooLarge { .. } | TableError::Graph(GraphError::OrderTooLarge { .. }) => EXIT_GUARD,
        _ => EXIT_PARAMS,
    }
}

fn classify_code(e: &ClassifyError) -> i32 {
    match e {
        ClassifyError::Table(t) => table_code(t),
        _ => EXIT_DICHOTOMY,
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        let code = match &e {
            ConstructError::Params(_) | ConstructError::Parse(_) | ConstructError::Io(_) | ConstructError::Unsupported(_) => {
                EXIT_PARAMS
            }
            ConstructError::Invalid(_)
            | ConstructError::MissingEdge(..)
            | ConstructError::AssetValidationFailed { .. }
            | ConstructError::Geom(_) => EXIT_GEOMETRY,
            ConstructError::Table(t) => table_code(t),
            ConstructError::Graph(GraphError::OrderTooLarge { .. }) => EXIT_GUARD,
            ConstructError::Graph(_) | ConstructError::Star(_) => EXIT_PARAMS,
            ConstructError::Classify(c) => classify_code(c),
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TableError> for Failure {
    fn from(e: TableError) -> Self {
        Failure::new(table_code(&e), e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        Failure::new(classify_code(&e), e.to_string())
    }
}

/// What a report says about one input file.
#[derive(Clone, Debug, Serialize)]
pub struct InputDescriptor {
    pub path: String,
    pub kind: &'static str,
    pub bytes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
}

/// Machine-readable result of one command. Deterministic unless timing is requested.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub inputs: Vec<InputDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shear: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<Sampling>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assets: Vec<AssetOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl RunReport {
    fn new(command: &'static str) -> Self {
        RunReport {
            tool: "linkweave",
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: Vec::new(),
            status: None,
            witness: None,
            label: None,
            description: None,
            classification: None,
            shear: None,
            sampling: None,
            assets: Vec::new(),
            timing_ms: None,
        }
    }

    fn set_status(&mut self, s: &LinkageStatus) {
        self.status = Some(s.label().to_string());
        self.witness = s.witness().cloned();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARAMS, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_PARAMS, format!("{}: {e}", path.display())))
}

fn load_embedding(path: &Path) -> Result<(GraphEmbedding, InputDescriptor), Failure> {
    let text = read(path)?;
    let e = GraphEmbedding::from_text(&text).map_err(|e| Failure::new(EXIT_PARAMS, format!("{}: {e}", path.display())))?;
    let d = InputDescriptor {
        path: path.display().to_string(),
        kind: "embedding",
        bytes: text.len(),
        order: Some(e.order()),
        edges: Some(e.edges.len()),
    };
    Ok((e, d))
}

fn is_theta(e: &GraphEmbedding) -> bool {
    e.order() == 5 && e.edges.keys().copied().eq(theta_embedding_layout())
}

fn with_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("classification serializes")
}

fn finish(report: &mut RunReport, args: &ReportArgs, start: Instant) -> Result<(), Failure> {
    if args.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    if let Some(path) = &args.report {
        write(path, &report.to_json())?;
        println!("report: {}", path.display());
    }
    Ok(())
}

fn cmd_build(b: BuildCommand) -> Result<(), Failure> {
    match b {
        BuildCommand::Pq { ell, x, y, out, prefix } => {
            if ell < 2 {
                return Err(Failure::new(EXIT_PARAMS, format!("--ell must be at least 2, got {ell}")));
            }
            let x = x.unwrap_or_else(|| vec![1; ell]);
            let y = y.unwrap_or_else(|| vec![1; ell]);
            if x.len() != ell || y.len() != ell {
                return Err(Failure::new(EXIT_PARAMS, format!("--x and --y need {ell} sizes each")));
            }
            let params = PqParams::new(x, y)?;
            let (g, h) = build_pq(&params)?;
            let gp = out.join(format!("{prefix}.g.emb"));
            let hp = out.join(format!("{prefix}.h.emb"));
            write(&gp, &g.to_text())?;
            write(&hp, &h.to_text())?;
            let (m, n) = params.orders();
            println!("pq-embedding ell={ell}: G = K_{m}, H = K_{n}");
            println!("G: {} vertices, {} edges -> {}", g.order(), g.edges.len(), gp.display());
            println!("H: {} vertices, {} edges -> {}", h.order(), h.edges.len(), hp.display());
        }
        BuildCommand::StarCone { n, star, out, prefix } => {
            let s: Star = star.parse().map_err(|e| Failure::new(EXIT_PARAMS, format!("--star: {e}")))?;
            if s.n != n {
                return Err(Failure::new(EXIT_PARAMS, format!("star {star} is over K_{}, not K_{n}", s.n)));
            }
            let (curve, kn) = build_star_cone(n, &s)?;
            let cp = out.join(format!("{prefix}.curve"));
            let kp = out.join(format!("{prefix}.kn.emb"));
            write(&cp, &curve.to_text())?;
            write(&kp, &kn.to_text())?;
            let linked = curve_link_map(&curve, &kn)?.support().len();
            println!("star cone {}: curve with {} vertices -> {}", s.literal(), curve.len(), cp.display());
            println!("K_{n}: {} edges -> {}; {linked} linked triangles", kn.edges.len(), kp.display());
        }
    }
    Ok(())
}

fn cmd_table(g: &Path, h: &Path, out: &Path) -> Result<(), Failure> {
    let (ge, _) = load_embedding(g)?;
    let (he, _) = load_embedding(h)?;
    let t = table_from_embeddings(&ge, &he)?;
    write(out, &t.to_text())?;
    println!("table {}x{}: {} nonzero entries -> {}", t.orders().0, t.orders().1, t.nonzero().len(), out.display());
    Ok(())
}

fn cmd_classify(path: &Path, args: &ReportArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let text = read(path)?;
    let t = TriangleLinkTable::from_text(&text).map_err(|e| Failure::new(EXIT_PARAMS, format!("{}: {e}", path.display())))?;
    let (m, n) = t.orders();
    let mut report = RunReport::new("classify");
    report.inputs.push(InputDescriptor { path: path.display().to_string(), kind: "table", bytes: text.len(), order: None, edges: None });
    validate_consistency(&t)?;
    let status = linkage_status(&t)?;
    report.set_status(&status);
    println!("table {m}x{n}: {}", status.label());
    if let Some(w) = status.witness() {
        println!("witness: G cycle {} / H cycle {} lk={}", w.g_cycle, w.h_cycle, w.linking);
    }
    if status.is_weak() {
        let c = classify_table(&t)?;
        println!("{}", c.describe());
        report.label = Some(c.label().into());
        report.description = Some(c.describe());
        report.classification = Some(with_json(&c));
    }
    finish(&mut report, args, start)
}

fn cmd_verify(g: &Path, h: &Path, sample: Option<usize>, seed: u64, args: &ReportArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let (ge, gd) = load_embedding(g)?;
    let (he, hd) = load_embedding(h)?;
    let mut report = RunReport::new("verify");
    report.inputs = vec![gd, hd];
    if is_theta(&ge) {
        let maps = theta_link_maps(&ge, &he)?;
        let status = theta_status(&maps)?;
        report.set_status(&status);
        println!("theta vs K_{}: {}", he.order(), status.label());
        if status.is_weak() {
            let c = classify_theta(&maps)?;
            println!("{}", c.describe(he.order()));
            report.label = Some(c.label().into());
            report.description = Some(c.describe(he.order()));
            report.classification = Some(with_json(&c));
        }
        return finish(&mut report, args, start);
    }
    let (m, n) = (ge.order(), he.order());
    match sample {
        None => {
            if m > EXHAUSTIVE_LIMIT || n > EXHAUSTIVE_LIMIT {
                return Err(Failure::new(
                    EXIT_GUARD,
                    format!("orders {m}x{n} exceed the exhaustive limit {EXHAUSTIVE_LIMIT}; use --sample N --seed S"),
                ));
            }
            let v = verify_embedding_pair(&ge, &he)?;
            report.set_status(&v.status);
            report.shear = Some(crate::geom::format_rational(&v.shear));
            println!("K_{m} vs K_{n}: {}", v.status.label());
            if let Some(w) = v.status.witness() {
                println!("witness: G cycle {} / H cycle {} lk={}", w.g_cycle, w.h_cycle, w.linking);
            }
            if let Some(c) = &v.classification {
                println!("{}", c.describe());
                report.label = Some(c.label().into());
                report.description = Some(c.describe());
                report.classification = Some(with_json(c));
            }
        }
        Some(samples) => {
            let t = table_from_embeddings(&ge, &he)?;
            validate_consistency(&t)?;
            report.sampling = Some(Sampling { samples, seed });
            match sample_status(&t, samples, seed)? {
                SampleOutcome::StrongFound { witness, .. } => {
                    println!("K_{m} vs K_{n}: StrongFound (seed {seed}, {samples} samples)");
                    println!("witness: G cycle {} / H cycle {} lk={}", witness.g_cycle, witness.h_cycle, witness.linking);
                    report.status = Some("StrongFound".into());
                    report.witness = Some(witness);
                }
                SampleOutcome::Inconclusive { .. } => {
                    println!("K_{m} vs K_{n}: Inconclusive (seed {seed}, {samples} samples)");
                    report.status = Some("Inconclusive".into());
                }
            }
        }
    }
    finish(&mut report, args, start)
}

fn cmd_assets_validate(dir: Option<PathBuf>, args: &ReportArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let dir = dir.unwrap_or_else(data_dir);
    let manifest = read(&dir.join("manifest.json"))?;
    let names: Vec<String> = serde_json::from_str::<Vec<serde_json::Value>>(&manifest)
        .map_err(|e| Failure::new(EXIT_PARAMS, format!("manifest: {e}")))?
        .iter()
        .filter_map(|v| v.get("name").and_then(|n| n.as_str()).map(String::from))
        .collect();
    let mut report = RunReport::new("assets-validate");
    let mut first_failure = None;
    for name in &names {
        let outcome = load_curated_from(&dir, name).and_then(|a| validate_asset(&a));
        match outcome {
            Ok(o) => {
                println!("{name}: ok, {} {}", o.status.label(), o.description);
                report.assets.push(o);
            }
            Err(e) => {
                println!("{name}: FAILED {e}");
                first_failure.get_or_insert(Failure::from(e));
            }
        }
    }
    finish(&mut report, args, start)?;
    match first_failure {
        Some(f) => Err(Failure::new(EXIT_GEOMETRY, f.message)),
        None => Ok(()),
    }
}

/// Runs one command; the result's code is the process exit status.
pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build(b) => cmd_build(b),
        Command::Table { g, h, out } => cmd_table(&g, &h, &out),
        Command::Classify { table, report } => cmd_classify(&table, &report),
        Command::Verify { g, h, sample, seed, report } => cmd_verify(&g, &h, sample, seed, &report),
        Command::AssetsValidate { dir, report } => cmd_assets_validate(dir, &report),
    }
}

/// Parses arguments, runs, prints errors to stderr, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARAMS } else { 0 };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::new(EXIT_GEOMETRY, e.to_string())
    }
}
