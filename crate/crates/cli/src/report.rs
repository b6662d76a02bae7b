//! The structured report every command produces, and its text rendering.
//!
//! Field order in the JSON output follows declaration order here; optional
//! sections are omitted when empty so reports diff cleanly.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: String,
    pub command: String,
    pub seed: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub declined: Vec<Declined>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub profiles: Vec<ProfileEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub filtrations: Vec<FiltrationTable>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classifications: Vec<ClassificationEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub invariants: Vec<InvariantsEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<ExampleEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Declined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: RingEcho,
    pub squarefree: bool,
    pub generators: Vec<String>,
    /// Canonical ideal file; feeding it back reproduces every number here.
    pub document: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingEcho {
    pub m: usize,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Declined {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub torsion: String,
    pub field: u32,
    pub zero_module: bool,
    /// `nonvanishing[i]` for `H^i`, `i = 0..=|T|`.
    pub nonvanishing: Vec<bool>,
    pub grade: Option<usize>,
    pub cd: Option<usize>,
    pub gap_free: bool,
    /// Least degree (in enumeration order) carrying each nonvanishing index.
    pub witnesses: Vec<Option<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<Vec<StrandEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandEntry {
    pub degree: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationTable {
    pub torsion: String,
    pub length: usize,
    pub rows: Vec<FiltrationRow>,
    /// Generators of `J_{r-1}`; the unmixed component is `J_{r-1}/I`.
    pub unmixed_component: Vec<String>,
    /// Characteristic in which `cd(T, D_i) = q_i` was re-derived.
    pub verified_over: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationRow {
    pub index: usize,
    pub q: usize,
    /// Minimal primes with `cd(T, S/p) = q`.
    pub primes: Vec<String>,
    /// Generators of `J_i`, so that `D_i = J_i / I`.
    pub j_generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub field: u32,
    pub relative: VerdictEntry,
    pub classical: VerdictEntry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub torsion: String,
    pub cm: bool,
    pub seq_cm: bool,
    pub approx_cm: bool,
    pub relatively_unmixed: bool,
    pub grade: usize,
    pub cd: usize,
    /// `q_1 < ... < q_r`.
    pub cd_values: Vec<usize>,
    /// `grade(T, S/J_{i-1})`, compared entrywise with `cd_values`.
    pub grade_certificates: Vec<usize>,
    pub failing_index: Option<usize>,
    /// `grade` and `cd` of `S/J_{r-1}`.
    pub unmixed_quotient: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsEntry {
    pub field: u32,
    pub r: usize,
    pub dim: usize,
    pub cd_p: usize,
    pub cd_q: usize,
    pub grade_q: usize,
    pub lines: Vec<InvariantLineEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantLineEntry {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchEntry {
    pub max_x: usize,
    pub max_y: usize,
    pub field: u32,
    pub budget: usize,
    pub exhaustive: bool,
    pub scanned: usize,
    pub cohen_macaulay: usize,
    pub qualifying: usize,
    pub width_histogram: Vec<usize>,
    pub summary: String,
    pub findings: Vec<FindingEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingEntry {
    pub ring: RingEcho,
    pub generators: Vec<String>,
    pub q_nonvanishing: Vec<bool>,
    pub p_nonvanishing: Vec<bool>,
    pub counterexample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleEntry {
    pub name: String,
    pub ring: RingEcho,
    pub generators: usize,
    pub squarefree: bool,
    pub summary: String,
}

impl ReportDocument {
    pub fn new(command: &str, seed: u64) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool: format!("seqcm {}", env!("CARGO_PKG_VERSION")),
            command: command.to_string(),
            seed,
            status: Status::Ok,
            input: None,
            declined: Vec::new(),
            profiles: Vec::new(),
            filtrations: Vec::new(),
            classifications: Vec::new(),
            invariants: Vec::new(),
            search: None,
            examples: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable rendering, derived from the structured fields only.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(input) = &self.input {
            let label = input.name.as_deref().unwrap_or(&input.source);
            let _ = writeln!(
                out,
                "{label}: ideal in K[x1..x{}, y1..y{}] with {} generator(s){}",
                input.ring.m,
                input.ring.n,
                input.generators.len(),
                if input.squarefree { "" } else { ", not squarefree" }
            );
            let _ = writeln!(out, "  I = ({})", input.generators.join(", "));
        }
        for p in &self.profiles {
            render_profile(&mut out, p);
        }
        for f in &self.filtrations {
            render_filtration(&mut out, f);
        }
        for c in &self.classifications {
            let _ = writeln!(out, "classification over {}:", field_name(c.field));
            render_verdicts(&mut out, &c.relative);
            if c.classical.torsion != c.relative.torsion {
                render_verdicts(&mut out, &c.classical);
            }
        }
        for inv in &self.invariants {
            let _ = writeln!(
                out,
                "invariants over {} (r = {}, dim = {}, cd(P) = {}, cd(Q) = {}, grade(Q) = {}):",
                field_name(inv.field),
                inv.r,
                inv.dim,
                inv.cd_p,
                inv.cd_q,
                inv.grade_q
            );
            for line in &inv.lines {
                let _ = writeln!(out, "  [{}] {}  ({})", if line.holds { "ok" } else { "FAILED" }, line.name, line.detail);
            }
        }
        if let Some(s) = &self.search {
            render_search(&mut out, s);
        }
        if !self.examples.is_empty() {
            let _ = writeln!(out, "built-in ideals:");
            for e in &self.examples {
                let _ = writeln!(
                    out,
                    "  {:<9} ring ({}, {}), {} generators{}  {}",
                    e.name,
                    e.ring.m,
                    e.ring.n,
                    e.generators,
                    if e.squarefree { "" } else { ", not squarefree" },
                    e.summary
                );
            }
        }
        for d in &self.declined {
            let mut scope = Vec::new();
            if let Some(t) = &d.torsion {
                scope.push(format!("wrt {t}"));
            }
            if let Some(f) = d.field {
                scope.push(format!("over {}", field_name(f)));
            }
            let scope = if scope.is_empty() { String::new() } else { format!(" ({})", scope.join(", ")) };
            let _ = writeln!(out, "declined{scope}: {}", d.reason);
        }
        out
    }
}

pub fn field_name(characteristic: u32) -> String {
    if characteristic == 0 {
        "Q (char 0)".into()
    } else {
        format!("F_{characteristic}")
    }
}

fn indices(flags: &[bool]) -> String {
    let on: Vec<String> = flags.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i.to_string()).collect();
    if on.is_empty() {
        "none".into()
    } else {
        on.join(", ")
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "undefined".into(), |x| x.to_string())
}

fn render_profile(out: &mut String, p: &ProfileEntry) {
    let field = field_name(p.field);
    if p.zero_module {
        let _ = writeln!(out, "H^i_{}: zero module over {field}, grade and cd undefined", p.torsion);
        return;
    }
    if p.torsion == "m" {
        let cm = if p.grade == p.cd { "Cohen-Macaulay" } else { "not Cohen-Macaulay" };
        let _ = writeln!(out, "over {field}: depth {}, dim {} ({cm})", opt(p.grade), opt(p.cd));
    } else {
        let t = &p.torsion;
        let _ = writeln!(out, "over {field}: grade({t}) = {}, cd({t}) = {}", opt(p.grade), opt(p.cd));
    }
    let _ = writeln!(
        out,
        "  H^i_{} != 0 for i in {{{}}}{}",
        p.torsion,
        indices(&p.nonvanishing),
        if p.gap_free { "" } else { "  (gap inside [grade, cd])" }
    );
    for (i, w) in p.witnesses.iter().enumerate() {
        if let Some(w) = w {
            let _ = writeln!(out, "    witness for H^{i}: degree {w}");
        }
    }
    if let Some(strands) = &p.strands {
        let _ = writeln!(out, "  {} strand(s) with nonzero cohomology", strands.len());
        for s in strands {
            let _ = writeln!(out, "    {}: {:?}", s.degree, s.dims);
        }
    }
}

fn render_filtration(out: &mut String, f: &FiltrationTable) {
    let _ = writeln!(out, "dimension filtration wrt {} (r = {}):", f.torsion, f.length);
    for row in &f.rows {
        let _ = writeln!(out, "  i = {}: q = {}, primes {}", row.index, row.q, row.primes.join(" "));
        let _ = writeln!(out, "         J_{} = ({})", row.index, row.j_generators.join(", "));
    }
    let _ = writeln!(out, "  unmixed component: ({}) / I", f.unmixed_component.join(", "));
    let _ = writeln!(out, "  cd(T, D_i) = q_i re-derived over {}", field_name(f.verified_over));
}

fn render_verdicts(out: &mut String, v: &VerdictEntry) {
    let t = &v.torsion;
    let _ = writeln!(out, "  wrt {t}: grade {}, cd {}", v.grade, v.cd);
    let _ = writeln!(out, "    cm_wrt_{t}: {}", v.cm);
    let certs: Vec<String> = v.grade_certificates.iter().map(|g| g.to_string()).collect();
    let qs: Vec<String> = v.cd_values.iter().map(|q| q.to_string()).collect();
    let _ = writeln!(out, "    seq_cm_wrt_{t}: {}  certificates ({}) vs q ({})", v.seq_cm, certs.join(","), qs.join(","));
    if let Some(i) = v.failing_index {
        let _ = writeln!(out, "      first failure at i = {i}");
    }
    let _ = writeln!(
        out,
        "    approx_cm_wrt_{t}: {}  (S/J_(r-1): grade {}, cd {})",
        v.approx_cm, v.unmixed_quotient[0], v.unmixed_quotient[1]
    );
    let _ = writeln!(out, "    relatively_unmixed_wrt_{t}: {}", v.relatively_unmixed);
}

fn render_search(out: &mut String, s: &SearchEntry) {
    let _ = writeln!(
        out,
        "search up to ({}, {}) over {}, {} ({} scanned of budget {}):",
        s.max_x,
        s.max_y,
        field_name(s.field),
        if s.exhaustive { "exhaustive" } else { "sampled" },
        s.scanned,
        s.budget
    );
    let _ = writeln!(out, "  Cohen-Macaulay: {}, qualifying: {}", s.cohen_macaulay, s.qualifying);
    for (width, count) in s.width_histogram.iter().enumerate().filter(|(_, &c)| c > 0) {
        let _ = writeln!(out, "    {count} with {width} nonvanishing H^i_Q");
    }
    for f in &s.findings {
        let _ = writeln!(
            out,
            "  {} in ring ({}, {}): Q {{{}}}, P {{{}}}",
            if f.counterexample { "COUNTEREXAMPLE" } else { "instance" },
            f.ring.m,
            f.ring.n,
            indices(&f.q_nonvanishing),
            indices(&f.p_nonvanishing)
        );
        let _ = writeln!(out, "    I = ({})", f.generators.join(", "));
    }
    let _ = writeln!(out, "  {}", s.summary);
}
