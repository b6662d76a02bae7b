//! Command definitions and execution.

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use seqcm::cech::{cohomology_profile_with, CohomologyProfile, Mode, ProfileOptions, QuotientModule};
use seqcm::filtration::{
    classify, cm_invariant_report, dimension_filtration, question_search, SearchConfig, Verdicts,
};
use seqcm::{Error, FieldSpec, RingSpec, SquarefreeIdeal, Torsion};

use crate::builtins;
use crate::document::{parse_ideal, render_monomial, IdealDocument, ParseError};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "seqcm", version, about = "Local cohomology and Cohen-Macaulay tests for bigraded monomial quotients")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Built-in name (see `examples`) or path to an ideal file.
    pub ideal: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Which H^i_T(S/I) are nonzero, with witnesses.
    Profile {
        #[command(flatten)]
        input: IdealArg,
        /// Torsion set; repeat for several.
        #[arg(long, value_parser = parse_torsion, default_value = "m")]
        wrt: Vec<Torsion>,
        /// Field characteristic (0 or a prime); repeat for several. Defaults to
        /// the file's `char` line, else 0.
        #[arg(long = "char")]
        chars: Vec<u32>,
        /// Include every strand with nonzero cohomology.
        #[arg(long)]
        strands: bool,
    },
    /// The dimension filtration of S/I with respect to T.
    Filtration {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, value_parser = parse_torsion, default_value = "Q")]
        wrt: Vec<Torsion>,
    },
    /// Cohen-Macaulay, sequentially and approximately Cohen-Macaulay verdicts.
    Classify {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, value_parser = parse_torsion, default_value = "Q")]
        wrt: Vec<Torsion>,
        #[arg(long = "char")]
        chars: Vec<u32>,
    },
    /// Identities for Cohen-Macaulay quotients that are sequentially
    /// Cohen-Macaulay with respect to Q.
    Invariants {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long = "char")]
        chars: Vec<u32>,
    },
    /// Look for Cohen-Macaulay S/I with a gap-free Q-profile but a gap in the
    /// P-profile.
    Search {
        /// Largest number of x-variables.
        #[arg(long, default_value_t = 2)]
        max_x: usize,
        /// Largest number of y-variables.
        #[arg(long, default_value_t = 2)]
        max_y: usize,
        /// Maximum number of ideals to scan.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Field characteristic (0 or a prime).
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u32,
        /// Seed for sampling when the space exceeds the budget.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra ideals scanned first (built-in names or files).
        #[arg(long)]
        include: Vec<String>,
    },
    /// List the built-in ideals.
    Examples,
}

fn parse_torsion(s: &str) -> Result<Torsion, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Everything that can stop a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}: {error}")]
    Parse { source_name: String, error: ParseError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("'{0}' is neither a built-in ideal nor a readable file (try `seqcm examples`)")]
    UnknownInput(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] Error),
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const DECLINED: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const INTERNAL: u8 = 3;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(Error::Internal(_)) => exit::INTERNAL,
            CliError::Engine(e) if is_declined(e) => exit::DECLINED,
            _ => exit::INPUT,
        }
    }
}

/// Valid input that a command cannot handle: zero or unit ideals where a
/// decomposition is needed, non-squarefree ideals for filtrations, unmet
/// theorem hypotheses, oversized searches.
fn is_declined(e: &Error) -> bool {
    matches!(e, Error::Declined(_) | Error::NoProperDecomposition(_) | Error::NotSquarefree)
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub report: Option<ReportDocument>,
    pub error: Option<CliError>,
    /// Input document for bug reports on internal errors.
    pub dump: Option<String>,
    pub exit_code: u8,
}

struct Loaded {
    source: String,
    doc: IdealDocument,
}

fn load(spec: &str) -> Result<Loaded, CliError> {
    let path = Path::new(spec);
    let (source, text) = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: spec.into(), message: e.to_string() })?;
        (spec.to_string(), text)
    } else if let Some(text) = builtins::text(spec) {
        (format!("builtin:{spec}"), text.to_string())
    } else {
        return Err(CliError::UnknownInput(spec.into()));
    };
    let doc = parse_ideal(&text).map_err(|error| CliError::Parse { source_name: source.clone(), error })?;
    Ok(Loaded { source, doc })
}

fn echo(loaded: &Loaded) -> InputEcho {
    let ring = loaded.doc.ring();
    InputEcho {
        source: loaded.source.clone(),
        name: loaded.doc.name.clone(),
        ring: ring_echo(ring),
        squarefree: loaded.doc.is_squarefree(),
        generators: loaded.doc.generators().iter().map(|g| render_monomial(ring, g, "*")).collect(),
        document: loaded.doc.to_text(),
    }
}

fn ring_echo(ring: RingSpec) -> RingEcho {
    RingEcho { m: ring.m, n: ring.n }
}

fn fields(chars: &[u32], doc: &IdealDocument) -> Result<Vec<FieldSpec>, CliError> {
    if chars.is_empty() {
        if doc.characteristics.is_empty() {
            return Ok(vec![FieldSpec::RATIONALS]);
        }
        return Ok(doc.characteristics.clone());
    }
    let mut out: Vec<FieldSpec> = Vec::new();
    for &c in chars {
        let f = FieldSpec::new(c)?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

fn dedup_torsions(wrt: &[Torsion]) -> Vec<Torsion> {
    let mut out: Vec<Torsion> = Vec::new();
    for &t in wrt {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

fn squarefree(doc: &IdealDocument) -> Result<&SquarefreeIdeal, CliError> {
    doc.ideal.as_squarefree().ok_or(CliError::Engine(Error::Declined(
        "dimension filtrations and classifications need a squarefree ideal; use `profile` for this input".into(),
    )))
}

fn fmt_ideal_gens(ideal: &SquarefreeIdeal) -> Vec<String> {
    let ring = ideal.ring();
    ideal.generators().iter().map(|g| ring.fmt_monomial(*g)).collect()
}

fn profile_entry(ring: RingSpec, label: &str, p: &CohomologyProfile) -> ProfileEntry {
    ProfileEntry {
        torsion: label.to_string(),
        field: p.field.characteristic(),
        zero_module: p.zero_module,
        nonvanishing: p.nonvanishing.clone(),
        grade: p.grade(),
        cd: p.cd(),
        gap_free: p.is_gap_free(),
        witnesses: p.witnesses.iter().map(|w| w.as_ref().map(|d| d.render(&ring))).collect(),
        strands: p.strands.as_ref().map(|s| {
            s.iter().map(|r| StrandEntry { degree: r.degree.render(&ring), dims: r.dims.clone() }).collect()
        }),
    }
}

fn verdict_entry(ring: RingSpec, v: &Verdicts) -> VerdictEntry {
    let label = if v.torsion == ring.all() {
        "m"
    } else if v.torsion == ring.p() {
        "P"
    } else {
        "Q"
    };
    VerdictEntry {
        torsion: label.into(),
        cm: v.cm,
        seq_cm: v.seq_cm,
        approx_cm: v.approx_cm,
        relatively_unmixed: v.relatively_unmixed,
        grade: v.invariants.grade,
        cd: v.invariants.cd,
        cd_values: v.cd_values.clone(),
        grade_certificates: v.grade_certificates.clone(),
        failing_index: v.failing_index,
        unmixed_quotient: [v.unmixed_quotient.grade, v.unmixed_quotient.cd],
    }
}

fn decline(report: &mut ReportDocument, field: Option<FieldSpec>, torsion: Option<Torsion>, e: Error) -> Result<(), CliError> {
    if !is_declined(&e) {
        return Err(e.into());
    }
    let reason = match e {
        Error::Declined(msg) => msg,
        other => other.to_string(),
    };
    report.status = Status::Declined;
    report.declined.push(Declined {
        field: field.map(FieldSpec::characteristic),
        torsion: torsion.map(|t| t.label().to_string()),
        reason,
    });
    Ok(())
}

fn run_profile(report: &mut ReportDocument, loaded: &Loaded, wrt: &[Torsion], chars: &[u32], strands: bool) -> Result<(), CliError> {
    let ring = loaded.doc.ring();
    let module = QuotientModule::cyclic(loaded.doc.ideal.clone());
    let opts = if strands {
        ProfileOptions { mode: Mode::Full, parallel: true, ..Default::default() }
    } else {
        ProfileOptions::fast()
    };
    for field in fields(chars, &loaded.doc)? {
        for t in dedup_torsions(wrt) {
            let p = cohomology_profile_with(&module, t.vars(&ring), field, opts)?;
            report.profiles.push(profile_entry(ring, t.label(), &p));
        }
    }
    Ok(())
}

fn run_filtration(report: &mut ReportDocument, loaded: &Loaded, wrt: &[Torsion]) -> Result<(), CliError> {
    let ideal = squarefree(&loaded.doc)?;
    let ring = ideal.ring();
    for t in dedup_torsions(wrt) {
        let f = match dimension_filtration(ideal, t.vars(&ring)) {
            Ok(f) => f,
            Err(e) => {
                decline(report, None, Some(t), e)?;
                continue;
            }
        };
        f.verify(FieldSpec::RATIONALS)?;
        let rows = (1..=f.len())
            .map(|i| FiltrationRow {
                index: i,
                q: f.cd_values[i - 1],
                primes: f.groups[i - 1].iter().map(|p| format!("({})", ring.fmt_vars(p.vars()))).collect(),
                j_generators: fmt_ideal_gens(&f.j(i)),
            })
            .collect();
        report.filtrations.push(FiltrationTable {
            torsion: t.label().into(),
            length: f.len(),
            rows,
            unmixed_component: fmt_ideal_gens(&f.unmixed_ideal()),
            verified_over: 0,
        });
    }
    Ok(())
}

fn run_classify(report: &mut ReportDocument, loaded: &Loaded, wrt: &[Torsion], chars: &[u32]) -> Result<(), CliError> {
    let ideal = squarefree(&loaded.doc)?;
    let ring = ideal.ring();
    for field in fields(chars, &loaded.doc)? {
        for t in dedup_torsions(wrt) {
            match classify(ideal, t.vars(&ring), field) {
                Ok(r) => report.classifications.push(ClassificationEntry {
                    field: field.characteristic(),
                    relative: verdict_entry(ring, &r.relative),
                    classical: verdict_entry(ring, &r.classical),
                }),
                Err(e) => decline(report, Some(field), Some(t), e)?,
            }
        }
    }
    Ok(())
}

fn run_invariants(report: &mut ReportDocument, loaded: &Loaded, chars: &[u32]) -> Result<(), CliError> {
    for field in fields(chars, &loaded.doc)? {
        match cm_invariant_report(loaded.doc.ideal.clone(), field) {
            Ok(r) => report.invariants.push(InvariantsEntry {
                field: field.characteristic(),
                r: r.r,
                dim: r.dim,
                cd_p: r.cd_p,
                cd_q: r.cd_q,
                grade_q: r.grade_q,
                lines: r.lines.into_iter().map(|l| InvariantLineEntry { name: l.name, holds: l.holds, detail: l.detail }).collect(),
            }),
            Err(e) => decline(report, Some(field), None, e)?,
        }
    }
    Ok(())
}

fn run_search(
    report: &mut ReportDocument,
    max_x: usize,
    max_y: usize,
    budget: usize,
    characteristic: u32,
    seed: u64,
    include: &[String],
) -> Result<(), CliError> {
    let field = FieldSpec::new(characteristic)?;
    let mut extra = Vec::new();
    for spec in include {
        let loaded = load(spec)?;
        let ideal = squarefree(&loaded.doc)?.clone();
        if ideal.ring().m > max_x || ideal.ring().n > max_y {
            return Err(CliError::Usage(format!("{spec} lives in a ring larger than ({max_x}, {max_y})")));
        }
        extra.push(ideal);
    }
    let config = SearchConfig { max_x, max_y, field, budget, seed };
    let out = match question_search(&config, &extra) {
        Ok(out) => out,
        Err(e) => return decline(report, Some(field), None, e),
    };
    report.search = Some(SearchEntry {
        max_x,
        max_y,
        field: characteristic,
        budget,
        exhaustive: out.exhaustive,
        scanned: out.scanned,
        cohen_macaulay: out.cohen_macaulay,
        qualifying: out.qualifying,
        width_histogram: out.width_histogram.clone(),
        summary: out.summary(),
        findings: out
            .findings
            .iter()
            .map(|f| FindingEntry {
                ring: ring_echo(f.ideal.ring()),
                generators: fmt_ideal_gens(&f.ideal),
                q_nonvanishing: f.q_nonvanishing.clone(),
                p_nonvanishing: f.p_nonvanishing.clone(),
                counterexample: f.counterexample,
            })
            .collect(),
    });
    Ok(())
}

fn run_examples(report: &mut ReportDocument) {
    for &name in builtins::NAMES {
        let text = builtins::text(name).expect("listed built-in");
        let doc = parse_ideal(text).expect("built-ins parse");
        let summary = text.lines().map_while(|l| l.strip_prefix("# ")).collect::<Vec<_>>().join(" ");
        report.examples.push(ExampleEntry {
            name: name.into(),
            ring: ring_echo(doc.ring()),
            generators: doc.generators().len(),
            squarefree: doc.is_squarefree(),
            summary,
        });
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Profile { .. } => "profile",
        Command::Filtration { .. } => "filtration",
        Command::Classify { .. } => "classify",
        Command::Invariants { .. } => "invariants",
        Command::Search { .. } => "search",
        Command::Examples => "examples",
    }
}

fn input_of(c: &Command) -> Option<&str> {
    match c {
        Command::Profile { input, .. }
        | Command::Filtration { input, .. }
        | Command::Classify { input, .. }
        | Command::Invariants { input, .. } => Some(&input.ideal),
        Command::Search { .. } | Command::Examples => None,
    }
}

/// Runs one command to completion.
pub fn run(cli: &Cli) -> Outcome {
    let seed = match &cli.command {
        Command::Search { seed, .. } => *seed,
        _ => 0,
    };
    let mut report = ReportDocument::new(command_name(&cli.command), seed);
    let mut dump = None;
    let result = (|| -> Result<(), CliError> {
        let loaded = input_of(&cli.command).map(load).transpose()?;
        if let Some(l) = &loaded {
            report.input = Some(echo(l));
            dump = Some(l.doc.to_text());
        }
        let loaded = loaded.as_ref();
        match &cli.command {
            Command::Profile { wrt, chars, strands, .. } => run_profile(&mut report, loaded.expect("input"), wrt, chars, *strands),
            Command::Filtration { wrt, .. } => run_filtration(&mut report, loaded.expect("input"), wrt),
            Command::Classify { wrt, chars, .. } => run_classify(&mut report, loaded.expect("input"), wrt, chars),
            Command::Invariants { chars, .. } => run_invariants(&mut report, loaded.expect("input"), chars),
            Command::Search { max_x, max_y, budget, characteristic, seed, include } => {
                run_search(&mut report, *max_x, *max_y, *budget, *characteristic, *seed, include)
            }
            Command::Examples => {
                run_examples(&mut report);
                Ok(())
            }
        }
    })();
    match result {
        Ok(()) => {
            let exit_code = if report.status == Status::Declined { exit::DECLINED } else { exit::OK };
            Outcome { report: Some(report), error: None, dump: None, exit_code }
        }
        Err(e) if e.exit_code() == exit::DECLINED => {
            // declined before anything was computed
            let reason = match &e {
                CliError::Engine(Error::Declined(msg)) => msg.clone(),
                other => other.to_string(),
            };
            report.status = Status::Declined;
            report.declined.push(Declined { field: None, torsion: None, reason });
            Outcome { report: Some(report), error: None, dump: None, exit_code: exit::DECLINED }
        }
        Err(e) => {
            let exit_code = e.exit_code();
            let dump = if exit_code == exit::INTERNAL { dump } else { None };
            Outcome { report: None, error: Some(e), dump, exit_code }
        }
    }
}
