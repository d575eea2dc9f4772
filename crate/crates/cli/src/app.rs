//! Command definitions and their implementations. Every command writes to a
//! string buffer so that tests can run it in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use uniflag_core::{
    admissible_order, filtration_plan, is_admissible, m_closed_form, m_value, splitting_from_tag,
    tag_from_splitting, AnalysisReport, Analyzer, CartanType, Chain, DynkinDiagram, Event, Family,
    Hypotheses, Hypothesis, NodeSet, RootSystem, SplittingType, Stage, Tag, Verdict,
};

use crate::render::render;
use crate::request::{AnalysisRequest, FieldError};

pub const SCHEMA_VERSION: &str = "uniflag-analysis-report/1";

/// Exit code for a command that ran to completion.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed self-check.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for invalid input.
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "uniflag",
    version,
    about = "Root-system criteria for uniform flag bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the positive roots of a diagram.
    Roots {
        /// Diagram such as `E8` or `A2+B3`.
        diagram: String,
        #[arg(long)]
        json: bool,
        /// Print only the number of positive roots.
        #[arg(long)]
        count: bool,
    },
    /// Recompute the m_j table by brute force and compare with closed forms.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Decide what the criteria say about a tagged diagram.
    Analyze(AnalyzeArgs),
    /// Convert a splitting type `a_0 <= .. <= a_r` to a tag on A_r.
    #[command(name = "split2tag")]
    SplitToTag {
        #[arg(allow_hyphen_values = true)]
        splitting: String,
        #[arg(long)]
        json: bool,
    },
    /// Convert a tag on A_r to the normalized splitting type.
    #[command(name = "tag2split")]
    TagToSplit {
        diagram: String,
        tag: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the admissible ordering of the positive roots for a chain.
    Order {
        diagram: String,
        /// Chain members separated by `;`, each a comma list of node
        /// indices, e.g. `1;1,2`. The empty set and the full diagram are added.
        #[arg(long, default_value = "")]
        chain: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a reduced word for the longest Weyl group element.
    W0 {
        diagram: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, conflicts_with = "request", required_unless_present = "request")]
    pub diagram: Option<String>,
    #[arg(long, requires = "diagram")]
    pub tag: Option<String>,
    #[arg(long)]
    pub cdim: Option<i64>,
    /// Hypotheses to assert in addition to the standing ones.
    #[arg(long, value_delimiter = ',')]
    pub assume: Vec<String>,
    /// Standing hypotheses to withdraw.
    #[arg(long, value_delimiter = ',')]
    pub deny: Vec<String>,
    /// Read the request from a JSON file (`-` for stdin).
    #[arg(long)]
    pub request: Option<PathBuf>,
    /// Print only the JSON report.
    #[arg(long)]
    pub json: bool,
}

/// What a command produced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        Output {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Output::ok(text)
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(command: Command) -> Output {
    let result = match command {
        Command::Roots {
            diagram,
            json,
            count,
        } => cmd_roots(&diagram, json, count),
        Command::Table1 { json } => return cmd_table1(json),
        Command::Analyze(args) => cmd_analyze(&args),
        Command::SplitToTag { splitting, json } => cmd_split2tag(&splitting, json),
        Command::TagToSplit { diagram, tag, json } => cmd_tag2split(&diagram, &tag, json),
        Command::Order {
            diagram,
            chain,
            json,
        } => cmd_order(&diagram, &chain, json),
        Command::W0 { diagram, json } => cmd_w0(&diagram, json),
    };
    match result {
        Ok(stdout) => Output::ok(stdout),
        Err(message) => Output::invalid(message),
    }
}

fn pretty(value: &Value) -> String {
    // `Value` keeps object keys sorted, which makes the output stable.
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

fn parse_diagram(spec: &str) -> Result<DynkinDiagram, String> {
    spec.parse::<DynkinDiagram>().map_err(|e| e.to_string())
}

fn cmd_roots(spec: &str, json: bool, count: bool) -> Result<String, String> {
    let g = parse_diagram(spec)?;
    let rs = RootSystem::new(&g);
    if count {
        return Ok(if json {
            pretty(&json!({ "diagram": g.to_string(), "count": rs.len() }))
        } else {
            format!("{}\n", rs.len())
        });
    }
    if json {
        let roots: Vec<Value> = rs
            .roots()
            .iter()
            .map(|r| json!({ "coeffs": r.coeffs(), "height": r.height(), "support": r.support() }))
            .collect();
        return Ok(pretty(
            &json!({ "diagram": g.to_string(), "count": rs.len(), "roots": roots }),
        ));
    }
    let mut out = String::new();
    for r in rs.roots() {
        writeln!(out, "{r} ht={} supp={}", r.height(), r.support()).unwrap();
    }
    Ok(out)
}

/// One row of the m_j table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub cartan_type: CartanType,
    pub brute: Vec<usize>,
    pub closed: Vec<usize>,
}

impl TableRow {
    pub fn agrees(&self) -> bool {
        self.brute == self.closed
    }
}

fn table_row(t: CartanType) -> TableRow {
    let g = DynkinDiagram::connected(t);
    let (brute, closed) = (0..t.rank)
        .map(|j| {
            let mut tag = vec![0; t.rank];
            tag[j] = 1;
            let brute = m_value(&g, &Tag::new(tag), j).expect("node j carries a 1");
            let closed = m_closed_form(t.family, t.rank, j).expect("j is in range");
            (brute, closed)
        })
        .unzip();
    TableRow {
        cartan_type: t,
        brute,
        closed,
    }
}

/// Every connected type of rank at most 8, one thread per family.
pub fn table_rows() -> Vec<TableRow> {
    let types = CartanType::all_up_to(8);
    std::thread::scope(|s| {
        let handles: Vec<_> = Family::ALL
            .iter()
            .map(|&f| {
                let mine: Vec<CartanType> =
                    types.iter().copied().filter(|t| t.family == f).collect();
                s.spawn(move || mine.into_iter().map(table_row).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("table worker panicked"))
            .collect()
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_table1(json: bool) -> Output {
    let rows = table_rows();
    let bad = rows.iter().filter(|r| !r.agrees()).count();
    let stdout = if json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "type": r.cartan_type.to_string(),
                    "m": r.brute,
                    "closed_form": r.closed,
                    "agrees": r.agrees(),
                })
            })
            .collect();
        pretty(&json!({ "rows": rows, "mismatches": bad }))
    } else {
        let mut out = String::new();
        for r in &rows {
            let status = if r.agrees() { "ok" } else { "MISMATCH" };
            write!(out, "{:<4} ({})", r.cartan_type.to_string(), join(&r.brute)).unwrap();
            if !r.agrees() {
                write!(out, " closed form ({})", join(&r.closed)).unwrap();
            }
            writeln!(out, "  {status}").unwrap();
        }
        if bad == 0 {
            writeln!(out, "all {} rows agree", rows.len()).unwrap();
        } else {
            writeln!(out, "{bad} of {} rows disagree", rows.len()).unwrap();
        }
        out
    };
    Output {
        code: if bad == 0 { EXIT_OK } else { EXIT_MISMATCH },
        stdout,
        stderr: String::new(),
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<i64>()
                .map_err(|_| format!("{what}: `{s}` is not an integer"))
        })
        .collect()
}

fn request_from_args(args: &AnalyzeArgs) -> Result<AnalysisRequest, FieldError> {
    let field = |field: &str, message: String| FieldError {
        field: field.into(),
        message,
    };
    if let Some(path) = &args.request {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(path)
        }
        .map_err(|e| field("request", format!("{}: {e}", path.display())))?;
        return AnalysisRequest::from_json(&text);
    }
    let diagram = args.diagram.clone().unwrap_or_default();
    let tag = match &args.tag {
        Some(t) => parse_list(t, "tag").map_err(|e| field("tag", e))?,
        None => {
            let rank = diagram
                .parse::<DynkinDiagram>()
                .map(|g| g.rank())
                .unwrap_or(0);
            vec![0; rank]
        }
    };
    let mut flags: Vec<Hypothesis> = Hypothesis::STANDING.to_vec();
    for name in &args.assume {
        flags.push(name.parse().map_err(|e| field("assume", e))?);
    }
    for name in &args.deny {
        let h: Hypothesis = name.parse().map_err(|e| field("deny", e))?;
        flags.retain(|&f| f != h);
    }
    let hypotheses = Hypothesis::ALL
        .iter()
        .filter(|h| flags.contains(h))
        .map(|h| h.name().to_string())
        .collect();
    Ok(AnalysisRequest {
        diagram,
        tag,
        cdim: args.cdim,
        hypotheses: Some(hypotheses),
    })
}

/// The JSON document written by `analyze --json`.
pub fn report_document(
    request: &AnalysisRequest,
    g: &DynkinDiagram,
    tag: &Tag,
    report: &AnalysisReport,
) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "request": request,
        "rendered_diagram": render(g, tag).as_str(),
        "report": report,
    })
}

fn stage_label(s: &Stage) -> String {
    format!("{} on {} tag ({})", s.diagram, s.nodes, s.tag)
}

fn sets(xs: &[NodeSet]) -> String {
    xs.iter()
        .map(NodeSet::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn certified(flag: bool) -> &'static str {
    if flag {
        "certified"
    } else {
        "not certified"
    }
}

/// One line of the human-readable trace.
pub fn describe(event: &Event) -> String {
    match event {
        Event::ComponentSplit { components } => {
            let parts: Vec<String> = components.iter().map(stage_label).collect();
            format!("split into components: {}", parts.join("; "))
        }
        Event::ZeroTagTriviality {
            rcc_asserted,
            outcome,
        } => format!("zero tag (rcc asserted: {rcc_asserted}): {outcome}"),
        Event::InsufficientHypotheses { missing } => {
            format!("criteria skipped, not asserted: {}", missing.join(", "))
        }
        Event::AtMostOneSet {
            set,
            defect,
            cdim,
            certified: c,
        } => format!("at-most-one set {set}: defect {defect} vs cdim {cdim}, {}", certified(*c)),
        Event::NodeCount {
            node,
            zero_component,
            m,
            set,
            defect,
            cdim,
            certified: c,
        } => format!(
            "node {node} (zero component {zero_component}): m = {m}, set {set} defect {defect} vs cdim {cdim}, {}",
            certified(*c)
        ),
        Event::ExhaustiveSearch {
            candidates,
            certified,
            minimal_certified,
        } => format!(
            "exhaustive search: {certified} of {candidates} candidates certified, minimal: {}",
            if minimal_certified.is_empty() {
                "none".to_string()
            } else {
                sets(minimal_certified)
            }
        ),
        Event::IntersectionClosure { operands, result } => {
            format!("intersection of {} is {result}", sets(operands))
        }
        Event::NoCertifiedSet => "no reducible set certified".to_string(),
        Event::DiagonalizableAtZeroSet { set } => {
            format!("reducible to the zero set {set}: diagonalizable")
        }
        Event::SubtagReduction { set, components } => {
            let parts: Vec<String> = components.iter().map(stage_label).collect();
            format!("reduce to {set}: {}", parts.join("; "))
        }
        Event::LineBundleSplitting {
            splitting_type,
            direct_sum_of_line_bundles,
        } => format!(
            "splitting type ({}): direct sum of line bundles: {direct_sum_of_line_bundles}",
            join(splitting_type)
        ),
    }
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::ReducedTo(rest) => {
            let parts: Vec<String> = rest.iter().map(stage_label).collect();
            format!("verdict: reduced-to {}", parts.join("; "))
        }
        other => format!("verdict: {}", other.name()),
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<String, String> {
    let request = request_from_args(args).map_err(|e| e.to_string())?;
    let resolved = request.resolve().map_err(|e| e.to_string())?;
    let report = Analyzer::new(&resolved.diagram)
        .analyze(&resolved.tag, &resolved.hypotheses)
        .map_err(|e| e.to_string())?;
    let echo = AnalysisRequest::normalized(&resolved);
    if args.json {
        return Ok(pretty(&report_document(
            &echo,
            &resolved.diagram,
            &resolved.tag,
            &report,
        )));
    }
    let mut out = String::new();
    out.push_str(render(&resolved.diagram, &resolved.tag).as_str());
    writeln!(out).unwrap();
    writeln!(
        out,
        "assuming: {}",
        join(echo.hypotheses.as_deref().unwrap_or_default())
    )
    .unwrap();
    match resolved.hypotheses.cdim {
        Some(c) => writeln!(out, "cdim: {c}").unwrap(),
        None => writeln!(out, "cdim: not given").unwrap(),
    }
    for step in &report.trace {
        writeln!(
            out,
            "{:>3}. [{}] {}",
            step.step,
            stage_label(&step.stage),
            describe(&step.event)
        )
        .unwrap();
    }
    for w in &report.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    writeln!(out, "{}", verdict_line(&report.verdict)).unwrap();
    Ok(out)
}

fn cmd_split2tag(text: &str, json: bool) -> Result<String, String> {
    let entries = parse_list(text, "splitting type")?;
    let st = SplittingType::new(entries.clone()).map_err(|e| e.to_string())?;
    let (g, tag) = tag_from_splitting(&st);
    let normalized: Vec<i64> = entries.iter().map(|a| a - entries[0]).collect();
    if json {
        return Ok(pretty(&json!({
            "splitting_type": entries,
            "normalized": normalized,
            "diagram": g.to_string(),
            "tag": tag,
            "rendered_diagram": render(&g, &tag).as_str(),
        })));
    }
    let mut out = String::new();
    writeln!(out, "splitting type: ({})", join(&entries)).unwrap();
    writeln!(out, "normalized (a_0 = 0): ({})", join(&normalized)).unwrap();
    writeln!(out, "diagram: {g}").unwrap();
    writeln!(out, "tag: {tag}").unwrap();
    out.push_str(render(&g, &tag).as_str());
    Ok(out)
}

fn cmd_tag2split(spec: &str, text: &str, json: bool) -> Result<String, String> {
    let g = parse_diagram(spec)?;
    let tag: Tag = text
        .parse()
        .map_err(|e: uniflag_core::Error| e.to_string())?;
    let st = splitting_from_tag(&g, &tag).map_err(|e| e.to_string())?;
    if json {
        return Ok(pretty(&json!({
            "diagram": g.to_string(),
            "tag": tag,
            "splitting_type": st.entries(),
            "rendered_diagram": render(&g, &tag).as_str(),
        })));
    }
    let mut out = String::new();
    writeln!(out, "diagram: {g}").unwrap();
    writeln!(out, "tag: {tag}").unwrap();
    writeln!(out, "splitting type (a_0 = 0): {}", join(st.entries())).unwrap();
    out.push_str(render(&g, &tag).as_str());
    Ok(out)
}

fn parse_chain(text: &str, rank: usize) -> Result<Chain, String> {
    let mut members = Vec::new();
    for part in text.split(';') {
        let part = part
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if part.is_empty() {
            continue;
        }
        let mut set = NodeSet::empty();
        for label in part.split(',') {
            let label = label.trim();
            let k: usize = label
                .parse()
                .ok()
                .filter(|&k| (1..=rank).contains(&k))
                .ok_or_else(|| format!("chain: `{label}` is not a node index in 1..={rank}"))?;
            set.insert(k - 1);
        }
        members.push(set);
    }
    Chain::new(&members, rank).map_err(|e| e.to_string())
}

fn cmd_order(spec: &str, chain: &str, json: bool) -> Result<String, String> {
    let g = parse_diagram(spec)?;
    let chain = parse_chain(chain, g.rank())?;
    let rs = RootSystem::new(&g);
    let plan = filtration_plan(&rs, &chain);
    let check = is_admissible(&rs, &plan.ordering.sequence, &chain).map_err(|e| e.to_string())?;
    if json {
        return Ok(pretty(&json!({
            "diagram": g.to_string(),
            "chain": chain.members(),
            "sequence": plan.ordering.sequence.iter().map(|r| r.coeffs()).collect::<Vec<_>>(),
            "breakpoints": plan.breakpoints,
            "admissibility": check,
        })));
    }
    let ordering = admissible_order(&rs, &chain);
    let mut out = String::new();
    let members: Vec<String> = chain.members().iter().map(NodeSet::to_string).collect();
    writeln!(out, "chain: {}", members.join(" < ")).unwrap();
    for (k, r) in ordering.sequence.iter().enumerate() {
        writeln!(
            out,
            "{:>4}  {r} ht={} supp={}",
            k + 1,
            r.height(),
            r.support()
        )
        .unwrap();
    }
    for b in &plan.breakpoints {
        writeln!(out, "breakpoint {}: index {}", b.member, b.index).unwrap();
    }
    let status = if check.is_pass() {
        "pass".to_string()
    } else {
        format!("{check:?}")
    };
    writeln!(out, "admissible: {status}").unwrap();
    Ok(out)
}

fn cmd_w0(spec: &str, json: bool) -> Result<String, String> {
    let g = parse_diagram(spec)?;
    let rs = RootSystem::new(&g);
    let word: Vec<usize> = rs.longest_word().iter().map(|i| i + 1).collect();
    if json {
        return Ok(pretty(
            &json!({ "diagram": g.to_string(), "length": word.len(), "word": word }),
        ));
    }
    let letters: Vec<String> = word.iter().map(|i| format!("r{i}")).collect();
    Ok(format!(
        "length {}\nw0 = {}\n",
        word.len(),
        letters.join(" ")
    ))
}

/// Shorthand used by tests and the binary: analysis with explicit
/// hypotheses, returning the JSON document.
pub fn analyze_document(g: &DynkinDiagram, tag: &Tag, hyp: &Hypotheses) -> Result<Value, String> {
    let report = Analyzer::new(g)
        .analyze(tag, hyp)
        .map_err(|e| e.to_string())?;
    let echo = AnalysisRequest::normalized(&crate::request::Resolved {
        diagram: g.clone(),
        tag: tag.clone(),
        hypotheses: hyp.clone(),
    });
    Ok(report_document(&echo, g, tag, &report))
}
