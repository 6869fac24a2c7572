use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use piwtilt_core::coxeter::{
    contains_coxeter_subword, is_c_ending, is_c_starting, satisfies_diamond, CoxeterContext, Quiver, Word,
};
use piwtilt_core::error::Error as CoreError;
use piwtilt_core::linalg::{Field, PrimeField, Rationals};
use piwtilt_core::modules::Module;
use piwtilt_core::preprojective::Piw;
use piwtilt_core::qw::{build_qw, underline_qw};
use piwtilt_core::tilting::{
    certify_tilting, end_summary, serre_pairing, verify_end_resolution, verify_hom_ideal_iso, verify_projfac,
    EndResolution, WordModules,
};

#[derive(Parser)]
#[command(name = "piwtilt", version, about = "Graded preprojective quotients Π(w), the quiver Q(w) and tilting certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reducedness, support, first and last occurrences and the word conditions.
    Analyze(Common),
    /// Graded dimension tables of Π(w), its columns and every M^i.
    Pi {
        #[command(flatten)]
        common: Common,
        /// Also print the radical layers of each M^i.
        #[arg(long)]
        radical: bool,
    },
    /// Arrows of Q(w).
    Qw {
        #[command(flatten)]
        common: Common,
        /// Drop the last occurrences.
        #[arg(long)]
        underline: bool,
        /// Write the quiver as Graphviz DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Silting and tilting verdict for M(w).
    Check {
        #[command(flatten)]
        common: Common,
        /// Add the stable endomorphism algebra and its quiver.
        #[arg(long)]
        stable: bool,
    },
    /// Consistency checks between independent computations.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Second word for the expression-independence check.
        #[arg(long, value_name = "WORD")]
        against: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Quiver file: {"vertices": [...], "arrows": [{"from", "to", "label"}]}.
    quiver: PathBuf,
    /// Comma-separated vertex ids or a JSON array.
    #[arg(long)]
    word: String,
    /// `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, env = "PIWTILT_MAX_DEGREE", default_value_t = 64)]
    max_degree: usize,
    /// Largest j for Ext^j in the silting check.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    ext_window: u32,
    /// Largest k for Ω^k in the tilting check.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    omega_window: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Why a run stopped, mapped to the exit code.
#[derive(Debug)]
enum Failure {
    Violation(String),
    Input(anyhow::Error),
    Cap(anyhow::Error),
    Other(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Other(_) => 1,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<CoreError>() {
            Some(CoreError::DegreeCap { .. } | CoreError::SizeCap { .. }) => Failure::Cap(e),
            Some(CoreError::Inconsistent(_) | CoreError::AlgebraMismatch | CoreError::AmbientMismatch(..)) => {
                Failure::Other(e)
            }
            Some(_) => Failure::Input(e),
            None => Failure::Other(e),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

struct Output {
    json: Value,
    text: String,
    violations: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Violation(msg) => eprintln!("piwtilt: violation: {msg}"),
                Failure::Input(e) | Failure::Cap(e) | Failure::Other(e) => eprintln!("piwtilt: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = match &cli.command {
        Command::Analyze(c) => c,
        Command::Pi { common, .. }
        | Command::Qw { common, .. }
        | Command::Check { common, .. }
        | Command::Verify { common, .. } => common,
    };
    let text = std::fs::read_to_string(&common.quiver)
        .with_context(|| format!("reading {}", common.quiver.display()))
        .map_err(Failure::Input)?;
    let quiver = Quiver::from_json(&text)?;
    let word = Word::parse(&quiver, &common.word)?;
    let out = match parse_field(&common.field).map_err(Failure::Input)? {
        FieldChoice::Rationals => dispatch(Rationals, &cli.command, &quiver, &word)?,
        FieldChoice::Prime(p) => dispatch(PrimeField::new(p)?, &cli.command, &quiver, &word)?,
    };
    let rendered = match common.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("report serializes") + "\n",
        Format::Text => out.text,
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(rendered.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(Failure::Other(e.into()));
        }
    }
    if out.violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violation(out.violations.join("; ")))
    }
}

enum FieldChoice {
    Rationals,
    Prime(u64),
}

fn parse_field(s: &str) -> Result<FieldChoice> {
    match s {
        "q" | "Q" => Ok(FieldChoice::Rationals),
        _ => {
            let p = s
                .strip_prefix("fp:")
                .ok_or_else(|| anyhow!("field must be `q` or `fp:<prime>`, got `{s}`"))?;
            let p: u64 = p.parse().with_context(|| format!("bad prime `{p}`"))?;
            PrimeField::new(p)?;
            Ok(FieldChoice::Prime(p))
        }
    }
}

fn dispatch<F: Field>(field: F, command: &Command, q: &Quiver, w: &Word) -> Result<Output, Failure> {
    match command {
        Command::Analyze(_) => analyze(q, w),
        Command::Pi { common, radical } => pi(field, common, q, w, *radical),
        Command::Qw { underline, dot, .. } => qw(q, w, *underline, dot.as_deref()),
        Command::Check { common, stable } => check(field, common, q, w, *stable),
        Command::Verify { common, against } => verify(field, common, q, w, against.as_deref()),
    }
}

fn build<F: Field>(field: F, common: &Common, q: &Quiver, w: &Word) -> Result<Piw<F>, Failure> {
    Ok(Piw::build(field, q, w, common.max_degree)?)
}

fn word_modules<F: Field>(field: F, common: &Common, q: &Quiver, w: &Word) -> Result<WordModules<F>, Failure> {
    let piw = build(field, common, q, w)?;
    let depth = common.ext_window.max(common.omega_window) as usize;
    Ok(WordModules::new(piw, depth)?)
}

fn names(q: &Quiver, w: &Word) -> Vec<String> {
    w.letters().iter().map(|&u| q.name(u).to_string()).collect()
}

fn by_vertex(q: &Quiver, positions: &[Option<usize>], support: &BTreeSet<usize>) -> Value {
    let mut m = serde_json::Map::new();
    for &u in support {
        m.insert(q.name(u).to_string(), json!(positions[u]));
    }
    Value::Object(m)
}

fn analyze(q: &Quiver, w: &Word) -> Result<Output, Failure> {
    let ctx = CoxeterContext::new(q.clone());
    let reduced = ctx.is_reduced(w)?;
    let name = w.display(q);
    if !reduced {
        return Ok(Output {
            json: json!({ "word": names(q, w), "reduced": false }),
            text: format!("word: {name}\nreduced: false\n"),
            violations: Vec::new(),
        });
    }
    let stats = w.stats(q);
    let all: BTreeSet<usize> = (0..q.num_vertices()).collect();
    let support: Vec<String> = stats.support.iter().map(|&u| q.name(u).to_string()).collect();
    let c_ending = is_c_ending(q, w, &all);
    let c_starting = is_c_starting(q, w, &all);
    let diamond = satisfies_diamond(q, w);
    let subword = contains_coxeter_subword(q, w);
    let json = json!({
        "word": names(q, w),
        "reduced": true,
        "length": w.len(),
        "support": support,
        "first": by_vertex(q, &stats.first, &stats.support),
        "last": by_vertex(q, &stats.last, &stats.support),
        "c_ending_q0": c_ending,
        "c_starting_q0": c_starting,
        "diamond": diamond,
        "coxeter_subword": subword,
    });
    let mut text = String::new();
    writeln!(text, "word: {name}").unwrap();
    writeln!(text, "reduced: true").unwrap();
    writeln!(text, "length: {}", w.len()).unwrap();
    writeln!(text, "support: {}", support.join(",")).unwrap();
    for &u in &stats.support {
        writeln!(text, "  {}: first {} last {}", q.name(u), stats.first[u].unwrap(), stats.last[u].unwrap()).unwrap();
    }
    writeln!(text, "c-ending on Q_0: {c_ending}").unwrap();
    writeln!(text, "c-starting on Q_0: {c_starting}").unwrap();
    writeln!(text, "diamond: {diamond}").unwrap();
    writeln!(text, "coxeter subword: {subword}").unwrap();
    Ok(Output { json, text, violations: Vec::new() })
}

#[derive(Serialize)]
struct Entry {
    vertex: String,
    degree: i32,
    dim: usize,
}

fn table<F: Field>(q: &Quiver, m: &Module<F>) -> Vec<Entry> {
    m.dim_table()
        .into_iter()
        .filter(|&(_, d)| d > 0)
        .map(|((v, degree), dim)| Entry { vertex: q.name(v).to_string(), degree, dim })
        .collect()
}

fn render_table(out: &mut String, entries: &[Entry]) {
    for e in entries {
        writeln!(out, "    {} @ {}: {}", e.vertex, e.degree, e.dim).unwrap();
    }
}

fn pi<F: Field>(field: F, common: &Common, q: &Quiver, w: &Word, radical: bool) -> Result<Output, Failure> {
    if w.is_empty() {
        eprintln!("piwtilt: warning: empty word, Π(w) = 0");
    }
    let piw = build(field, common, q, w)?;
    let sub = piw.quiver();
    let mut text = String::new();
    writeln!(text, "word: {}", w.display(q)).unwrap();
    writeln!(text, "dim Π(w): {}", piw.dim()).unwrap();
    writeln!(text, "by degree: {:?}", piw.degree_dims()).unwrap();
    let mut columns = Vec::new();
    for v in 0..sub.num_vertices() {
        let m = piw.piw_column(v);
        let entries = table(sub, m);
        writeln!(text, "Π(w)e_{}: {}", sub.name(v), m.total_dim()).unwrap();
        render_table(&mut text, &entries);
        columns.push(json!({ "vertex": sub.name(v), "dim": m.total_dim(), "table": entries }));
    }
    let mut modules = Vec::new();
    for i in 1..=piw.len() {
        let m = piw.module_m(i)?;
        let entries = table(sub, &m);
        let u = q.name(w.letter(i));
        writeln!(text, "M^{i} ({u}): {}", m.total_dim()).unwrap();
        render_table(&mut text, &entries);
        let mut entry = json!({ "position": i, "vertex": u, "dim": m.total_dim(), "table": entries });
        if radical {
            let layers: Vec<Vec<Entry>> = m
                .radical_layers()
                .into_iter()
                .map(|l| l.into_iter().map(|(s, dim)| Entry { vertex: sub.name(s.vertex).to_string(), degree: s.degree, dim }).collect())
                .collect();
            for (n, l) in layers.iter().enumerate() {
                let row: Vec<String> = l.iter().map(|e| format!("{}^{}({})", e.vertex, e.dim, e.degree)).collect();
                writeln!(text, "    rad^{n}: {}", row.join(" ")).unwrap();
            }
            entry["radical_layers"] = json!(layers);
        }
        modules.push(entry);
    }
    let json = json!({
        "word": names(q, w),
        "field": piw.field().describe(),
        "dim": piw.dim(),
        "degree_dims": piw.degree_dims(),
        "columns": columns,
        "modules": modules,
    });
    Ok(Output { json, text, violations: Vec::new() })
}

fn qw(q: &Quiver, w: &Word, underline: bool, dot: Option<&Path>) -> Result<Output, Failure> {
    let quiver = if underline { underline_qw(q, w)? } else { build_qw(q, w)? };
    if let Some(path) = dot {
        let name = if underline { "underline Q(w)" } else { "Q(w)" };
        std::fs::write(path, quiver.to_dot(name))
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Other)?;
    }
    let mut text = String::new();
    for a in &quiver.arrows {
        writeln!(text, "{} -> {}  {} deg {}", a.from, a.to, a.label, a.deg).unwrap();
    }
    let deg_acyclic = quiver.is_deg_acyclic();
    let mut json = quiver.to_json();
    json["deg_acyclic"] = json!(deg_acyclic);
    Ok(Output { json, text, violations: Vec::new() })
}

fn check<F: Field>(field: F, common: &Common, q: &Quiver, w: &Word, stable: bool) -> Result<Output, Failure> {
    let ctx = word_modules(field, common, q, w)?;
    let report = certify_tilting(&ctx, common.ext_window as usize, common.omega_window as usize)?;
    let violations = report.violations.clone();
    let mut json = serde_json::to_value(&report).expect("report serializes");
    let mut text = String::new();
    writeln!(text, "word: {}", w.display(q)).unwrap();
    writeln!(text, "silting: {}", report.silting.silting).unwrap();
    writeln!(text, "verdict: {}", serde_json::to_string(&report.verdict).expect("verdict serializes")).unwrap();
    if stable {
        let end = end_summary(&ctx)?;
        writeln!(text, "dim A̲: {}", end.stable_dim).unwrap();
        match end.gldim {
            Some(g) => writeln!(text, "gl.dim A̲: {g}").unwrap(),
            None => writeln!(text, "gl.dim A̲: beyond cap").unwrap(),
        }
        for a in &end.quiver {
            writeln!(text, "  {} -> {} x{}", a.from, a.to, a.count).unwrap();
        }
        json["end"] = serde_json::to_value(&end).expect("summary serializes");
    }
    for v in &violations {
        writeln!(text, "violation: {v}").unwrap();
    }
    Ok(Output { json, text, violations })
}

fn verify<F: Field>(field: F, common: &Common, q: &Quiver, w: &Word, against: Option<&str>) -> Result<Output, Failure> {
    let ctx = word_modules(field.clone(), common, q, w)?;
    let mut violations = Vec::new();
    let mut text = String::new();
    writeln!(text, "word: {}", w.display(q)).unwrap();

    let projfac = verify_projfac(&ctx)?;
    if !projfac.equal {
        violations.push(format!("projective maps {} vs ideal {}", projfac.projective_dim, projfac.ideal_dim));
    }
    writeln!(text, "projective maps through F: {} = {}: {}", projfac.ideal_dim, projfac.projective_dim, projfac.equal).unwrap();

    let mut isos = Vec::new();
    for m in 1..=ctx.len() {
        for k in 1..=m {
            let r = verify_hom_ideal_iso(ctx.piw(), k, m)?;
            if !r.equal {
                violations.push(format!("ideal quotient ({k},{m}): {} vs {}", r.lhs, r.rhs));
            }
            isos.push(r);
        }
    }
    writeln!(text, "ideal quotients as Hom spaces: {}/{} equal", isos.iter().filter(|r| r.equal).count(), isos.len()).unwrap();

    let resolution = verify_end_resolution(&ctx)?;
    match &resolution {
        EndResolution::NotApplicable => writeln!(text, "resolution over A(w): not applicable").unwrap(),
        EndResolution::Checked { holds, .. } => {
            if !holds {
                violations.push("resolution over A(w) has the wrong shape".into());
            }
            writeln!(text, "resolution over A(w): {holds}").unwrap();
        }
    }

    let serre = serre_pairing(&ctx, true)?;
    for s in &serre {
        violations.push(format!("Serre pairing {:?} {:?} shift {}: {} vs {}", s.x, s.y, s.shift, s.lhs, s.rhs));
    }
    writeln!(text, "Serre pairing mismatches: {}", serre.len()).unwrap();

    let mut json = json!({
        "word": names(q, w),
        "field": ctx.field().describe(),
        "projfac": projfac,
        "hom_ideal_iso": isos,
        "end_resolution": resolution,
        "serre_mismatches": serre,
    });

    if let Some(other) = against {
        let v = Word::parse(q, other)?;
        let same = CoxeterContext::new(q.clone()).same_element(w, &v)?;
        let a = ctx.piw().dim_table();
        let b = build(field, common, q, &v)?.dim_table();
        let identical = a == b;
        if same && !identical {
            violations.push(format!("{} and {} give different Π(w)", w.display(q), v.display(q)));
        }
        writeln!(text, "against {}: same element {same}, identical tables {identical}", v.display(q)).unwrap();
        json["against"] = json!({ "word": names(q, &v), "same_element": same, "identical_tables": identical });
    }
    for v in &violations {
        writeln!(text, "violation: {v}").unwrap();
    }
    Ok(Output { json, text, violations })
}
