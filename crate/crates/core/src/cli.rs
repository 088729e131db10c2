//! Command-line front end.
//!
//! Every report is a JSON document carrying the schema version and the
//! effective configuration; `verify` writes one such line per diagnosis.
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 a theorem
//! check was refuted.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::corpus;
use crate::group::{
    build_cyclic, build_dihedral, build_extraspecial, build_frobenius, from_permutation_generators,
    parse_generators, Group, GroupDoc,
};
use crate::rationality::{central_characters, is_rational, CharacterReport};
use crate::sring::{
    enumerate_central_srings, EnumerationLimits, EnumerationReport, GroupRef, SRing, SRingDoc,
};
use crate::verifiers::{self, generalized_b_group_diagnostic, run_suite, Diagnosis, Suite, SuiteConfig};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "schurring", version, about = "Central Schur rings over finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest group order accepted from constructions and files.
    #[arg(long = "limits.size-cap", default_value_t = crate::group::DEFAULT_SIZE_CAP, global = true)]
    pub size_cap: usize,
    /// Largest number of conjugacy classes for enumeration.
    #[arg(long = "limits.class-cap", default_value_t = 14, global = true)]
    pub class_cap: usize,
    #[arg(long = "limits.max-results", default_value_t = 1_000_000, global = true)]
    pub max_results: usize,
    /// Distance to the nearest integer below which a character value counts as rational.
    #[arg(long, default_value_t = crate::rationality::DEFAULT_TOLERANCE, global = true)]
    pub tol: f64,
    /// Seed for the random combinations used by the character computation.
    #[arg(long, default_value_t = crate::rationality::DEFAULT_CHARACTER_SEED, global = true)]
    pub seed: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long, default_value_t = 1, global = true)]
    pub workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record elapsed milliseconds in diagnoses (output is then not reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

/// The part of the configuration that can change results, echoed into reports.
#[derive(Debug, Clone, Serialize)]
struct ConfigEcho {
    size_cap: usize,
    class_cap: usize,
    max_results: usize,
    tol: f64,
    seed: u64,
    format: Format,
}

impl RunConfig {
    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            size_cap: self.size_cap,
            class_cap: self.class_cap,
            max_results: self.max_results,
            tol: self.tol,
            seed: self.seed,
            format: self.format,
        }
    }

    fn limits(&self) -> EnumerationLimits {
        EnumerationLimits {
            max_classes: self.class_cap,
            max_results: self.max_results,
            workers: self.workers.max(1),
        }
    }

    fn suite_config(&self) -> SuiteConfig {
        SuiteConfig {
            limits: self.limits(),
            tol: self.tol,
            seed: self.seed,
            timings: self.timings,
            ..SuiteConfig::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build or load a group and print its classes, center, normal
    /// subgroups, normal Sylow subgroups and Camina pairs.
    Group {
        #[command(flatten)]
        spec: GroupSpec,
    },
    /// Validate an S-ring given by a partition file, the class algebra or the trivial ring.
    Sring {
        #[command(flatten)]
        spec: GroupSpec,
        /// The class algebra (the default).
        #[arg(long, conflicts_with_all = ["trivial", "partition"])]
        class_algebra: bool,
        #[arg(long, conflicts_with = "partition")]
        trivial: bool,
        /// JSON document `{ "basic_sets": [[...], ...], "group"? }`.
        #[arg(long, value_name = "PATH")]
        partition: Option<PathBuf>,
        /// Include the structure constants `c[X][Y][Z]`.
        #[arg(long)]
        constants: bool,
        /// Include the character table (commutative S-rings only).
        #[arg(long)]
        characters: bool,
    },
    /// Enumerate all central S-rings.
    Enumerate {
        #[command(flatten)]
        spec: GroupSpec,
        /// Include every S-ring in the report.
        #[arg(long)]
        dump: bool,
    },
    /// Run a verification suite on one group or a corpus; one JSON line per diagnosis.
    Verify {
        /// multiplier, wielandt, camina, separating, rationality or all.
        suite: Suite,
        #[command(flatten)]
        spec: GroupSpec,
        /// Run over a named corpus instead of a single group ("builtin").
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Decide whether a group is a generalized B-group.
    Diagnose {
        #[command(flatten)]
        spec: GroupSpec,
    },
}

/// Exactly one way of naming a group.
#[derive(Debug, Clone, Default, Args)]
#[group(multiple = false)]
pub struct GroupSpec {
    /// A name such as Z12, D18, Q8, S4, A5, F21, Extraspecial27, PSL(2,7), Z3xZ3.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long, value_name = "N")]
    pub cyclic: Option<usize>,
    /// Dihedral group of the given order.
    #[arg(long, value_name = "ORDER")]
    pub dihedral: Option<usize>,
    /// Extraspecial group of order p^3 and exponent p, for an odd prime p.
    #[arg(long, value_name = "P")]
    pub extraspecial: Option<u64>,
    /// Frobenius group Z_p x| Z_q.
    #[arg(long, value_name = "P,Q")]
    pub frobenius: Option<String>,
    /// Permutation generators, e.g. "(1 2 3 4 5),(1 2 3)".
    #[arg(long, value_name = "GENERATORS")]
    pub perm: Option<String>,
    /// Direct product of two named groups.
    #[arg(long, value_name = "A,B")]
    pub product: Option<String>,
    /// Group document `{ "order", "table", "names"?, "family"? }`.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Validation(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) => m,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

type CliResult<T> = Result<T, CliError>;

impl GroupSpec {
    fn is_empty(&self) -> bool {
        self.group.is_none()
            && self.cyclic.is_none()
            && self.dihedral.is_none()
            && self.extraspecial.is_none()
            && self.frobenius.is_none()
            && self.perm.is_none()
            && self.product.is_none()
            && self.file.is_none()
    }

    fn resolve(&self, cfg: &RunConfig) -> CliResult<Group> {
        let cap = cfg.size_cap;
        let g = if let Some(name) = &self.group {
            corpus::group_by_name(name, cap).map_err(invalid)?
        } else if let Some(n) = self.cyclic {
            build_cyclic(n).map_err(invalid)?
        } else if let Some(n) = self.dihedral {
            build_dihedral(n).map_err(invalid)?
        } else if let Some(p) = self.extraspecial {
            build_extraspecial(p).map_err(invalid)?
        } else if let Some(pq) = &self.frobenius {
            let (p, q) = pair(pq)?;
            let p = p.parse().map_err(|_| CliError::Usage(format!("bad prime {p:?}")))?;
            let q = q.parse().map_err(|_| CliError::Usage(format!("bad divisor {q:?}")))?;
            build_frobenius(p, q).map_err(invalid)?
        } else if let Some(text) = &self.perm {
            let gens = parse_generators(text).map_err(invalid)?;
            from_permutation_generators(&gens, cap).map_err(invalid)?
        } else if let Some(ab) = &self.product {
            let (a, b) = pair(ab)?;
            corpus::group_by_name(&format!("{a}x{b}"), cap).map_err(invalid)?
        } else if let Some(path) = &self.file {
            let text = read(path)?;
            let doc: GroupDoc = serde_json::from_str(&text).map_err(invalid)?;
            doc.into_group_capped(cap).map_err(invalid)?
        } else {
            return Err(CliError::Usage("no group given; use --group, --cyclic, --dihedral, ...".into()));
        };
        if g.order() > cap {
            return Err(invalid(format!("group order {} exceeds the size cap {cap}", g.order())));
        }
        Ok(g)
    }
}

fn pair(text: &str) -> CliResult<(&str, &str)> {
    text.split_once(',')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| CliError::Usage(format!("expected two comma-separated values, got {text:?}")))
}

fn read(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    config: &'a ConfigEcho,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct ClassRow {
    index: usize,
    size: usize,
    element_order: usize,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct SylowRow {
    p: u64,
    order: usize,
    cyclic: bool,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct GroupReport {
    group: String,
    order: usize,
    abelian: bool,
    simple: bool,
    exponent: usize,
    classes: Vec<ClassRow>,
    center: Vec<usize>,
    normal_subgroups: Vec<Vec<usize>>,
    normal_sylow: Vec<SylowRow>,
    camina_pairs: Vec<Vec<usize>>,
}

fn group_report(g: &Group) -> GroupReport {
    let classes = g
        .conjugacy_classes()
        .classes
        .iter()
        .enumerate()
        .map(|(index, c)| ClassRow {
            index,
            size: c.len(),
            element_order: g.element_order(c.min_element().unwrap()),
            members: c.as_slice().to_vec(),
        })
        .collect();
    let normal_sylow = crate::arith::prime_divisors(g.order() as u64)
        .into_iter()
        .filter_map(|p| {
            let s = g.normal_sylow_subgroup(p).ok().flatten()?;
            Some(SylowRow { p, order: s.order(), cyclic: g.is_cyclic(&s), members: s.members.into_vec() })
        })
        .collect();
    GroupReport {
        group: verifiers::subject(g),
        order: g.order(),
        abelian: g.is_abelian(),
        simple: g.is_simple(),
        exponent: g.exponent(),
        classes,
        center: g.center().members.into_vec(),
        normal_subgroups: g.normal_subgroups().into_iter().map(|h| h.members.into_vec()).collect(),
        normal_sylow,
        camina_pairs: verifiers::camina_pairs(g).into_iter().map(|c| c.subgroup).collect(),
    }
}

#[derive(Serialize)]
struct SRingReport {
    group: String,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sring: Option<SRingDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    commutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rational: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    a_subgroups: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    constants: Option<Vec<Vec<Vec<u64>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    characters: Option<CharacterReport>,
}

/// Output sink: standard output or the `--out` file.
struct Sink<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Sink<'_> {
    fn emit<T: Serialize>(&mut self, command: &str, config: &ConfigEcho, body: T) -> CliResult<()> {
        let env = Envelope { schema_version: SCHEMA_VERSION, command, config, body };
        let text = match self.format {
            Format::Json => serde_json::to_string(&env).map_err(invalid)?,
            Format::Text => render_text(&serde_json::to_value(&env).map_err(invalid)?),
        };
        writeln!(self.out, "{text}").map_err(invalid)
    }
}

/// Indented `key: value` rendering of a JSON value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out.trim_end().to_string()
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(map) if map.len() == 2 && map.contains_key("re") && map.contains_key("im") => {
            let re = map["re"].as_f64().unwrap_or(f64::NAN);
            let im = map["im"].as_f64().unwrap_or(f64::NAN);
            Some(if im.abs() < 5e-13 { format!("{re:.6}") } else { format!("{re:.6}{im:+.6}i") })
        }
        Value::Array(items) if items.iter().all(scalar_leaf) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(items) if items.iter().all(|i| i.as_array().is_some_and(|a| a.iter().all(|x| x.is_number()))) => {
            Some(items.iter().filter_map(scalar).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

fn scalar_leaf(v: &Value) -> bool {
    match v {
        Value::Array(_) => false,
        Value::Object(_) => scalar(v).is_some(),
        _ => true,
    }
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(val, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(item, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing reports to standard output unless `--out` is given.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    run_with_output(args, &mut lock)
}

pub fn run_with_output<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    eprint!("{}", e.render().ansi());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.config.out {
        Some(path) => match fs::File::create(path) {
            Ok(file) => {
                let mut w = io::BufWriter::new(file);
                let r = execute(&cli, &mut w);
                w.flush().map_err(invalid).and(r)
            }
            Err(e) => Err(invalid(format!("{}: {e}", path.display()))),
        },
        None => execute(&cli, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let cfg = &cli.config;
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let echo = cfg.echo();
    let mut sink = Sink { out, format: cfg.format };
    match &cli.command {
        Command::Group { spec } => {
            let g = spec.resolve(cfg)?;
            sink.emit("group", &echo, group_report(&g))?;
            Ok(EXIT_OK)
        }
        Command::Sring { spec, class_algebra: _, trivial, partition, constants, characters } => {
            let doc = partition.as_ref().map(read).transpose()?.map(|text| {
                serde_json::from_str::<SRingDoc>(&text).map_err(invalid)
            });
            let doc = doc.transpose()?;
            let g = match (&doc, spec.is_empty()) {
                (Some(SRingDoc { group: Some(GroupRef::Doc(gd)), .. }), true) => {
                    gd.clone().into_group_capped(cfg.size_cap).map_err(invalid)?
                }
                (Some(SRingDoc { group: Some(GroupRef::Name(name)), .. }), true) => {
                    corpus::group_by_name(name, cfg.size_cap).map_err(invalid)?
                }
                _ => spec.resolve(cfg)?,
            };
            let g = Arc::new(g);
            let built = match (&doc, trivial) {
                (Some(d), _) => d.to_sring(&g),
                (None, true) => Ok(SRing::trivial(&g)),
                (None, false) => Ok(SRing::class_algebra(&g)),
            };
            let (report, code) = match built {
                Ok(a) => (sring_report(&a, *constants, *characters, cfg)?, EXIT_OK),
                Err(e) => (
                    SRingReport {
                        group: verifiers::subject(&g),
                        valid: false,
                        error: Some(e.to_string()),
                        sring: None,
                        commutative: None,
                        primitive: None,
                        rational: None,
                        a_subgroups: Vec::new(),
                        constants: None,
                        characters: None,
                    },
                    EXIT_VALIDATION,
                ),
            };
            sink.emit("sring", &echo, report)?;
            Ok(code)
        }
        Command::Enumerate { spec, dump } => {
            let g = Arc::new(spec.resolve(cfg)?);
            let rings = enumerate_central_srings(&g, &cfg.limits()).map_err(invalid)?;
            let report = EnumerationReport::new(GroupRef::Name(verifiers::subject(&g)), &rings, *dump);
            sink.emit("enumerate", &echo, report)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, spec, corpus: corpus_name } => {
            let groups: Vec<Group> = match corpus_name.as_deref() {
                Some("builtin") if spec.is_empty() => corpus::builtin().into_iter().map(|(_, g)| g).collect(),
                Some("builtin") => return Err(CliError::Usage("give either a group or --corpus".into())),
                Some(other) => return Err(CliError::Usage(format!("unknown corpus {other:?}; expected \"builtin\""))),
                None => vec![spec.resolve(cfg)?],
            };
            let diagnoses = verify_groups(*suite, groups, cfg)?;
            let mut code = EXIT_OK;
            for d in &diagnoses {
                if d.is_fatal() {
                    code = EXIT_REFUTED;
                }
                sink.emit("verify", &echo, d)?;
            }
            Ok(code)
        }
        Command::Diagnose { spec } => {
            let g = Arc::new(spec.resolve(cfg)?);
            let start = Instant::now();
            let mut d = generalized_b_group_diagnostic(&g, &cfg.limits()).map_err(invalid)?;
            if cfg.timings {
                d.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            sink.emit("diagnose", &echo, &d)?;
            Ok(if d.is_fatal() { EXIT_REFUTED } else { EXIT_OK })
        }
    }
}

fn sring_report(a: &SRing, constants: bool, characters: bool, cfg: &RunConfig) -> CliResult<SRingReport> {
    let g = a.group();
    let r = a.rank();
    let table = if characters {
        if !a.is_commutative() {
            return Err(invalid("characters requested for a noncommutative S-ring"));
        }
        Some(central_characters(a, cfg.seed).map_err(invalid)?.report(cfg.tol))
    } else {
        None
    };
    Ok(SRingReport {
        group: verifiers::subject(g),
        valid: true,
        error: None,
        sring: Some(SRingDoc::from_sring(a, None)),
        commutative: Some(a.is_commutative()),
        primitive: Some(a.is_primitive()),
        rational: if a.is_central() { Some(is_rational(a).map_err(invalid)?) } else { None },
        a_subgroups: a.a_subgroups().members.into_iter().map(|h| h.members.into_vec()).collect(),
        constants: constants.then(|| {
            (0..r)
                .map(|x| (0..r).map(|y| (0..r).map(|z| a.constants().get(x, y, z)).collect()).collect())
                .collect()
        }),
        characters: table,
    })
}

/// Runs a suite over several groups, in parallel over groups, keeping input order.
fn verify_groups(suite: Suite, groups: Vec<Group>, cfg: &RunConfig) -> CliResult<Vec<Diagnosis>> {
    let scfg = cfg.suite_config();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(invalid)?;
    let results: Vec<Result<Vec<Diagnosis>, String>> = pool.install(|| {
        groups
            .into_par_iter()
            .map(|g| run_suite(suite, &Arc::new(g), &scfg).map_err(|e| e.to_string()))
            .collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r.map_err(invalid)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut full = vec!["schurring"];
        full.extend_from_slice(args);
        let code = run_with_output(full, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    fn json(text: &str) -> Value {
        serde_json::from_str(text.lines().next().unwrap()).unwrap()
    }

    #[test]
    fn group_command() {
        let (code, out) = run_capture(&["group", "--dihedral", "18"]);
        assert_eq!(code, 0);
        let v = json(&out);
        assert_eq!(v["classes"].as_array().unwrap().len(), 6);
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["config"]["class_cap"], 14);
        let (_, out) = run_capture(&["group", "--cyclic", "1"]);
        assert_eq!(json(&out)["order"], 1);
        let (_, out) = run_capture(&["group", "--perm", "(1 2 3 4 5),(1 2 3)"]);
        assert_eq!(json(&out)["order"], 60);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["group"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["group", "--cyclic", "3", "--dihedral", "6"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "bogus", "--group", "S3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
        assert_eq!(run_capture(&["group", "--group", "Nope"]).0, EXIT_VALIDATION);
    }

    #[test]
    fn sring_and_enumerate() {
        let (code, out) = run_capture(&["sring", "--group", "S3", "--class-algebra", "--characters"]);
        assert_eq!(code, 0);
        let v = json(&out);
        assert_eq!(v["sring"]["rank"], 3);
        assert_eq!(v["sring"]["central"], true);
        assert_eq!(v["characters"]["rational"], true);
        let (_, out) = run_capture(&["sring", "--group", "S3", "--trivial", "--constants"]);
        assert_eq!(json(&out)["sring"]["rank"], 2);
        let (_, out) = run_capture(&["enumerate", "--cyclic", "4"]);
        assert_eq!(json(&out)["count"], 3);
    }

    #[test]
    fn bad_partition_file() {
        let dir = std::env::temp_dir().join(format!("schurring-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.json");
        fs::write(&path, r#"{"basic_sets":[[0],[1],[2],[3,4,5]]}"#).unwrap();
        let (code, out) = run_capture(&["sring", "--group", "S3", "--partition", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(json(&out)["error"].as_str().unwrap().contains("S3 fails"));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn verify_and_diagnose() {
        let (code, out) = run_capture(&["verify", "wielandt", "--group", "D18"]);
        assert_eq!(code, 0);
        assert_eq!(json(&out)["verdict"], "confirmed");
        let (code, out) = run_capture(&["diagnose", "--group", "A5"]);
        assert_eq!(code, 0);
        assert_eq!(json(&out)["verdict"], "refuted");
        let (_, text) = run_capture(&["--format", "text", "diagnose", "--group", "D8"]);
        assert!(text.contains("verdict: confirmed"));
    }
}
