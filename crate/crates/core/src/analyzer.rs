//! Reducibility criteria for uniform flag bundles and the decision pipeline
//! built on them.
//!
//! The combinatorial core is the *reducibility defect* of a node set
//! `I ⊇ I_0`: the number of roots `L ∈ Φ⁺ \ Φ⁺(I)` with `L · Γ̄ = -1` on a
//! minimal section. If the defect is smaller than the contractibility
//! dimension of the evaluation morphism, the bundle is reducible with respect
//! to the family and `I`. Every root outside `Φ⁺(I)` already has degree at
//! most `-1`, so only roots of degree exactly `-1` are counted.
//!
//! Verdicts are conditional on geometric hypotheses the caller asserts; the
//! report echoes them back.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::RootSystem;
use crate::tagging::{self, SplittingType, Tag};

/// Identifies the criteria implemented here in archived reports.
pub const CRITERIA_VERSION: &str = "uniflag-criteria/1; defect counts degree exactly -1";

/// Above this many free nodes the search uses only the node-count and
/// at-most-one families instead of every subset.
pub const EXHAUSTIVE_LIMIT: usize = 12;

const CONVENTIONS: [&str; 3] = [
    "reducibility defect of I counts roots L outside Phi+(I) with degree exactly -1 on a minimal section",
    "nilradical weights are listed as positive roots; the bundle summands are their negatives",
    "minimal sets are minimal among criterion-certified sets, not necessarily geometrically minimal",
];

/// A geometric assumption the tool cannot check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    /// `X` is a Fano manifold of Picard number one.
    Fano,
    /// The family of rational curves is unsplit and dominating.
    Unsplit,
    /// The family is a full component of the space of rational curves.
    Complete,
    /// The evaluation morphism has connected fibers.
    ConnectedFibers,
    /// `X` is rationally chain connected with respect to the family.
    Rcc,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 5] = [
        Hypothesis::Fano,
        Hypothesis::Unsplit,
        Hypothesis::Complete,
        Hypothesis::ConnectedFibers,
        Hypothesis::Rcc,
    ];

    /// Assumed unless denied; the reducibility criteria need all of them.
    pub const STANDING: [Hypothesis; 4] = [
        Hypothesis::Fano,
        Hypothesis::Unsplit,
        Hypothesis::Complete,
        Hypothesis::ConnectedFibers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Fano => "fano",
            Hypothesis::Unsplit => "unsplit",
            Hypothesis::Complete => "complete",
            Hypothesis::ConnectedFibers => "connected-fibers",
            Hypothesis::Rcc => "rcc",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hypothesis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Hypothesis::ALL.iter().map(|h| h.name()).collect();
                format!(
                    "unknown hypothesis `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub fano_picard_one: bool,
    pub family_unsplit_dominating: bool,
    pub family_complete: bool,
    pub evaluation_connected_fibers: bool,
    pub rationally_chain_connected: bool,
    /// Contractibility dimension of the evaluation morphism.
    pub cdim: Option<u32>,
}

impl Default for Hypotheses {
    /// The standing assumptions, no rational chain connectedness, no cdim.
    fn default() -> Self {
        Hypotheses::from_flags(Hypothesis::STANDING, None)
    }
}

impl Hypotheses {
    pub fn none() -> Self {
        Hypotheses::from_flags([], None)
    }

    pub fn from_flags(flags: impl IntoIterator<Item = Hypothesis>, cdim: Option<u32>) -> Self {
        let mut h = Hypotheses {
            fano_picard_one: false,
            family_unsplit_dominating: false,
            family_complete: false,
            evaluation_connected_fibers: false,
            rationally_chain_connected: false,
            cdim,
        };
        for f in flags {
            h.set(f, true);
        }
        h
    }

    pub fn with_cdim(mut self, cdim: u32) -> Self {
        self.cdim = Some(cdim);
        self
    }

    pub fn with(mut self, flag: Hypothesis) -> Self {
        self.set(flag, true);
        self
    }

    pub fn without(mut self, flag: Hypothesis) -> Self {
        self.set(flag, false);
        self
    }

    pub fn set(&mut self, flag: Hypothesis, value: bool) {
        match flag {
            Hypothesis::Fano => self.fano_picard_one = value,
            Hypothesis::Unsplit => self.family_unsplit_dominating = value,
            Hypothesis::Complete => self.family_complete = value,
            Hypothesis::ConnectedFibers => self.evaluation_connected_fibers = value,
            Hypothesis::Rcc => self.rationally_chain_connected = value,
        }
    }

    pub fn holds(&self, flag: Hypothesis) -> bool {
        match flag {
            Hypothesis::Fano => self.fano_picard_one,
            Hypothesis::Unsplit => self.family_unsplit_dominating,
            Hypothesis::Complete => self.family_complete,
            Hypothesis::ConnectedFibers => self.evaluation_connected_fibers,
            Hypothesis::Rcc => self.rationally_chain_connected,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cdim == Some(0) {
            return Err(Error::InsufficientHypotheses(
                "cdim must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// What the reducibility criteria need but is not asserted.
    fn missing_for_criteria(&self) -> Vec<String> {
        let mut missing: Vec<String> = Hypothesis::STANDING
            .iter()
            .filter(|h| !self.holds(**h))
            .map(|h| h.name().to_string())
            .collect();
        if self.cdim.is_none() {
            missing.push("cdim".into());
        }
        missing
    }

    fn criteria_cdim(&self) -> Result<u32> {
        self.validate()?;
        let missing = self.missing_for_criteria();
        if missing.is_empty() {
            Ok(self.cdim.expect("checked above"))
        } else {
            Err(Error::InsufficientHypotheses(format!(
                "not asserted: {}",
                missing.join(", ")
            )))
        }
    }
}

/// A diagram, or a piece of one, with its tag; nodes use the numbering of
/// the diagram that was analyzed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub diagram: String,
    pub nodes: NodeSet,
    pub tag: Tag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "residuals", rename_all = "kebab-case")]
pub enum Verdict {
    Trivial,
    Diagonalizable,
    /// Some progress was made; these components remain undecided.
    ReducedTo(Vec<Stage>),
    Inconclusive,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Trivial => "trivial",
            Verdict::Diagonalizable => "diagonalizable",
            Verdict::ReducedTo(_) => "reduced-to",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// How a reducible set was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Search {
    Exhaustive,
    TheoremFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "criterion", rename_all = "kebab-case")]
pub enum Event {
    /// A disconnected diagram is diagonalizable iff every component is.
    ComponentSplit { components: Vec<Stage> },
    /// Zero tag on a rationally chain connected base: the bundle is trivial.
    ZeroTagTriviality { rcc_asserted: bool, outcome: String },
    /// Some hypothesis-dependent step could not fire.
    InsufficientHypotheses { missing: Vec<String> },
    /// `I_1` proper: every root outside `Φ⁺(I_1)` has degree at most -2.
    AtMostOneSet {
        set: NodeSet,
        defect: usize,
        cdim: u32,
        certified: bool,
    },
    /// `D \ {j}` for a node with `d_j = 1`: the defect equals `m_j`.
    NodeCount {
        node: usize,
        zero_component: NodeSet,
        m: usize,
        set: NodeSet,
        defect: usize,
        cdim: u32,
        certified: bool,
    },
    /// Every `I` with `I_0 ⊆ I ⊊ D` tested against the defect bound.
    ExhaustiveSearch {
        candidates: usize,
        certified: usize,
        minimal_certified: Vec<NodeSet>,
    },
    /// Intersections of reducible sets are reducible.
    IntersectionClosure {
        operands: Vec<NodeSet>,
        result: NodeSet,
    },
    /// No set was certified.
    NoCertifiedSet,
    /// Reducible with respect to `I_0`: the bundle is diagonalizable.
    DiagonalizableAtZeroSet { set: NodeSet },
    /// Reducible with respect to `I`: pass to the flag bundle on the
    /// subdiagram on `I`, carrying the restricted tag.
    SubtagReduction {
        set: NodeSet,
        components: Vec<Stage>,
    },
    /// Associated vector bundle with strictly increasing splitting type.
    LineBundleSplitting {
        splitting_type: Vec<i64>,
        direct_sum_of_line_bundles: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub stage: Stage,
    #[serde(flatten)]
    pub event: Event,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
    pub conditional_on: Hypotheses,
    pub warnings: Vec<String>,
    pub conventions: Vec<String>,
    pub criteria_version: String,
}

/// The minimal certified set and how it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSet {
    pub set: NodeSet,
    /// Inclusion-minimal certified sets; `set` is their intersection.
    pub operands: Vec<NodeSet>,
    pub search: Search,
    pub candidates: usize,
    pub certified: usize,
}

/// One connected piece under analysis.
struct Piece {
    diagram: DynkinDiagram,
    rs: RootSystem,
    tag: Tag,
    /// Local node -> node of the analyzed diagram.
    nodes: Vec<usize>,
}

impl Piece {
    fn stage(&self) -> Stage {
        Stage {
            diagram: self.diagram.to_string(),
            nodes: self.nodes.iter().copied().collect(),
            tag: self.tag.clone(),
        }
    }

    fn global(&self, set: NodeSet) -> NodeSet {
        set.iter().map(|i| self.nodes[i]).collect()
    }
}

/// Precomputed root data for one diagram.
pub struct Analyzer {
    diagram: DynkinDiagram,
    rs: RootSystem,
}

impl Analyzer {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        Analyzer {
            diagram: diagram.clone(),
            rs: RootSystem::new(diagram),
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn check_set(&self, tag: &Tag, set: NodeSet) -> Result<()> {
        tag.check_rank(&self.diagram)?;
        self.diagram.check_subset(set)?;
        let zeros = tag.zero_set();
        if !zeros.is_subset(set) {
            return Err(Error::MissingZeroSet { set, zeros });
        }
        Ok(())
    }

    /// `#{L ∈ Φ⁺ \ Φ⁺(I) : Σ a_i d_i = 1}`. Requires `I ⊇ I_0`.
    pub fn reducibility_defect(&self, tag: &Tag, set: NodeSet) -> Result<usize> {
        self.check_set(tag, set)?;
        Ok(defect(&degree_one_supports(&self.rs, tag), set))
    }

    /// Whether the defect bound certifies reducibility with respect to `I`.
    /// Missing hypotheses are an error, not `false`.
    pub fn criterion_reducible(&self, tag: &Tag, set: NodeSet, hyp: &Hypotheses) -> Result<bool> {
        let cdim = hyp.criteria_cdim()?;
        self.check_set(tag, set)?;
        if set == self.diagram.nodes() {
            return Err(Error::NotProper(set));
        }
        Ok(self.reducibility_defect(tag, set)? < cdim as usize)
    }

    /// The intersection of every certified set, or `None` if nothing is
    /// certified.
    pub fn minimal_reducible_set(&self, tag: &Tag, hyp: &Hypotheses) -> Result<Option<MinimalSet>> {
        tag.check_rank(&self.diagram)?;
        let cdim = hyp.criteria_cdim()?;
        let piece = Piece {
            diagram: self.diagram.clone(),
            rs: self.rs.clone(),
            tag: tag.clone(),
            nodes: (0..self.diagram.rank()).collect(),
        };
        Ok(search(&piece, cdim, &mut Vec::new()))
    }

    pub fn analyze(&self, tag: &Tag, hyp: &Hypotheses) -> Result<AnalysisReport> {
        tag.check_rank(&self.diagram)?;
        hyp.validate()?;
        let mut run = Run {
            hyp,
            trace: Vec::new(),
            warnings: Vec::new(),
        };

        let full = Piece {
            diagram: self.diagram.clone(),
            rs: self.rs.clone(),
            tag: tag.clone(),
            nodes: (0..self.diagram.rank()).collect(),
        };
        let pieces = split_piece(&full, self.diagram.nodes());
        if pieces.len() > 1 {
            let components = pieces.iter().map(Piece::stage).collect();
            run.push(&full, Event::ComponentSplit { components });
        }

        let mut outcomes = Vec::with_capacity(pieces.len());
        for piece in &pieces {
            outcomes.push(run.analyze_piece(piece));
        }

        let verdict = if outcomes.iter().all(|o| o.status == Status::Trivial) {
            Verdict::Trivial
        } else if outcomes.iter().all(|o| o.status != Status::Open) {
            Verdict::Diagonalizable
        } else {
            let progressed = outcomes
                .iter()
                .any(|o| o.status != Status::Open || o.reduced);
            if progressed {
                Verdict::ReducedTo(outcomes.into_iter().flat_map(|o| o.residuals).collect())
            } else {
                Verdict::Inconclusive
            }
        };

        let mut warnings = run.warnings;
        warnings.dedup();
        Ok(AnalysisReport {
            verdict,
            trace: run.trace,
            conditional_on: hyp.clone(),
            warnings,
            conventions: CONVENTIONS.iter().map(|s| s.to_string()).collect(),
            criteria_version: CRITERIA_VERSION.to_string(),
        })
    }
}

/// Supports of the roots with `Σ a_i d_i = 1`.
fn degree_one_supports(rs: &RootSystem, tag: &Tag) -> Vec<NodeSet> {
    rs.roots()
        .iter()
        .filter(|r| tagging::degree_on_minimal_section(r, tag) == -1)
        .map(|r| r.support())
        .collect()
}

fn defect(degree_one: &[NodeSet], set: NodeSet) -> usize {
    degree_one.iter().filter(|s| !s.is_subset(set)).count()
}

/// Connected components of `set` inside `piece`, as new pieces.
fn split_piece(piece: &Piece, set: NodeSet) -> Vec<Piece> {
    let sub = piece
        .diagram
        .subdiagram(set)
        .expect("set lies in the piece");
    sub.diagram
        .split_components()
        .into_iter()
        .map(|(local, diagram)| {
            let in_piece: NodeSet = local.iter().map(|i| sub.nodes[i]).collect();
            let order: Vec<usize> = in_piece.iter().collect();
            Piece {
                diagram,
                rs: piece.rs.restrict(in_piece),
                tag: piece.tag.restrict(&order),
                nodes: order.iter().map(|&i| piece.nodes[i]).collect(),
            }
        })
        .collect()
}

/// Certified-set search on one piece. Trace events are appended to `events`
/// with local node sets; the caller maps them.
fn search(piece: &Piece, cdim: u32, events: &mut Vec<Event>) -> Option<MinimalSet> {
    let tag = &piece.tag;
    let full = piece.diagram.nodes();
    let zeros = tag.zero_set();
    let ones = tag.at_most_one_set();
    let degree_one = degree_one_supports(&piece.rs, tag);
    let bound = cdim as usize;
    if zeros == full {
        return None;
    }

    let mut family: Vec<NodeSet> = Vec::new();
    if ones != full {
        let d = defect(&degree_one, ones);
        let certified = d < bound;
        events.push(Event::AtMostOneSet {
            set: ones,
            defect: d,
            cdim,
            certified,
        });
        if certified {
            family.push(ones);
        }
    }
    for j in ones.difference(zeros).iter() {
        let zero_component = tagging::component_of_one(&piece.diagram, tag, j).expect("d_j = 1");
        let m = tagging::m_value(&piece.diagram, tag, j).expect("d_j = 1");
        let mut set = full;
        set.remove(j);
        let d = defect(&degree_one, set);
        debug_assert_eq!(d, m);
        let certified = m < bound;
        events.push(Event::NodeCount {
            node: j,
            zero_component,
            m,
            set,
            defect: d,
            cdim,
            certified,
        });
        if certified {
            family.push(set);
        }
    }

    let free = full.difference(zeros);
    let (certified_sets, searched, candidates) = if free.len() <= EXHAUSTIVE_LIMIT {
        let mut certified = Vec::new();
        let mut candidates = 0;
        for sub in free.subsets().filter(|&s| s != free) {
            candidates += 1;
            let set = zeros.union(sub);
            if defect(&degree_one, set) < bound {
                certified.push(set);
            }
        }
        (certified, Search::Exhaustive, candidates)
    } else {
        let n = family.len();
        (family, Search::TheoremFamily, n)
    };

    let minimal = inclusion_minimal(&certified_sets);
    if searched == Search::Exhaustive {
        events.push(Event::ExhaustiveSearch {
            candidates,
            certified: certified_sets.len(),
            minimal_certified: minimal.clone(),
        });
    }
    if minimal.is_empty() {
        events.push(Event::NoCertifiedSet);
        return None;
    }
    let set = minimal.iter().fold(full, |acc, &s| acc.intersection(s));
    events.push(Event::IntersectionClosure {
        operands: minimal.clone(),
        result: set,
    });
    Some(MinimalSet {
        set,
        operands: minimal,
        search: searched,
        candidates,
        certified: certified_sets.len(),
    })
}

fn inclusion_minimal(sets: &[NodeSet]) -> Vec<NodeSet> {
    let mut out: Vec<NodeSet> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t.is_subset(s)))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Trivial,
    Diagonalizable,
    Open,
}

struct Outcome {
    status: Status,
    residuals: Vec<Stage>,
    /// A reduction step fired somewhere below.
    reduced: bool,
}

struct Run<'a> {
    hyp: &'a Hypotheses,
    trace: Vec<TraceStep>,
    warnings: Vec<String>,
}

impl Run<'_> {
    fn push(&mut self, piece: &Piece, event: Event) {
        self.trace.push(TraceStep {
            step: self.trace.len() + 1,
            stage: piece.stage(),
            event,
        });
    }

    fn analyze_piece(&mut self, piece: &Piece) -> Outcome {
        let open = |reduced| Outcome {
            status: Status::Open,
            residuals: vec![piece.stage()],
            reduced,
        };

        if piece.tag.is_zero() {
            let rcc = self.hyp.rationally_chain_connected || piece.diagram.rank() == 0;
            let outcome = if rcc {
                "trivial"
            } else {
                "diagonalizable-candidate"
            };
            self.push(
                piece,
                Event::ZeroTagTriviality {
                    rcc_asserted: self.hyp.rationally_chain_connected,
                    outcome: outcome.into(),
                },
            );
            if rcc {
                return Outcome {
                    status: Status::Trivial,
                    residuals: Vec::new(),
                    reduced: false,
                };
            }
            self.warnings.push(format!(
                "zero tag on {}: triviality needs rational chain connectedness (rcc), \
                 which was not asserted; reported as a diagonalizable candidate",
                piece.stage().diagram
            ));
            return Outcome {
                status: Status::Diagonalizable,
                residuals: Vec::new(),
                reduced: false,
            };
        }

        let cdim = match self.hyp.criteria_cdim() {
            Ok(c) => c,
            Err(_) => {
                let missing = self.hyp.missing_for_criteria();
                self.warnings.push(format!(
                    "reducibility criteria not applied, not asserted: {}",
                    missing.join(", ")
                ));
                self.push(piece, Event::InsufficientHypotheses { missing });
                return open(false);
            }
        };

        let mut events = Vec::new();
        let found = search(piece, cdim, &mut events);
        for e in events {
            let e = globalize(piece, e);
            self.push(piece, e);
        }
        let Some(found) = found else {
            return open(false);
        };

        let zeros = piece.tag.zero_set();
        if found.set == zeros {
            self.push(
                piece,
                Event::DiagonalizableAtZeroSet {
                    set: piece.global(zeros),
                },
            );
            return Outcome {
                status: Status::Diagonalizable,
                residuals: Vec::new(),
                reduced: true,
            };
        }

        let children = split_piece(piece, found.set);
        self.push(
            piece,
            Event::SubtagReduction {
                set: piece.global(found.set),
                components: children.iter().map(Piece::stage).collect(),
            },
        );
        let mut residuals = Vec::new();
        let mut all_closed = true;
        for child in &children {
            let o = self.analyze_piece(child);
            all_closed &= o.status != Status::Open;
            residuals.extend(o.residuals);
        }
        Outcome {
            status: if all_closed {
                Status::Diagonalizable
            } else {
                Status::Open
            },
            residuals,
            reduced: true,
        }
    }
}

fn globalize(piece: &Piece, event: Event) -> Event {
    let g = |s: NodeSet| piece.global(s);
    match event {
        Event::AtMostOneSet {
            set,
            defect,
            cdim,
            certified,
        } => Event::AtMostOneSet {
            set: g(set),
            defect,
            cdim,
            certified,
        },
        Event::NodeCount {
            node,
            zero_component,
            m,
            set,
            defect,
            cdim,
            certified,
        } => Event::NodeCount {
            node: piece.nodes[node] + 1,
            zero_component: g(zero_component),
            m,
            set: g(set),
            defect,
            cdim,
            certified,
        },
        Event::ExhaustiveSearch {
            candidates,
            certified,
            minimal_certified,
        } => Event::ExhaustiveSearch {
            candidates,
            certified,
            minimal_certified: minimal_certified.into_iter().map(g).collect(),
        },
        Event::IntersectionClosure { operands, result } => Event::IntersectionClosure {
            operands: operands.into_iter().map(g).collect(),
            result: g(result),
        },
        other => other,
    }
}

pub fn reducibility_defect(diagram: &DynkinDiagram, tag: &Tag, set: NodeSet) -> Result<usize> {
    Analyzer::new(diagram).reducibility_defect(tag, set)
}

pub fn criterion_reducible(
    diagram: &DynkinDiagram,
    tag: &Tag,
    set: NodeSet,
    hyp: &Hypotheses,
) -> Result<bool> {
    Analyzer::new(diagram).criterion_reducible(tag, set, hyp)
}

pub fn minimal_reducible_set(
    diagram: &DynkinDiagram,
    tag: &Tag,
    hyp: &Hypotheses,
) -> Result<Option<MinimalSet>> {
    Analyzer::new(diagram).minimal_reducible_set(tag, hyp)
}

/// A reduced piece: connected diagram, restricted tag, and the nodes of the
/// input diagram it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub diagram: DynkinDiagram,
    pub tag: Tag,
    pub nodes: Vec<usize>,
}

/// Restricts to the subdiagram on `set` and splits it into components, each
/// carrying the tag entries of its nodes.
pub fn reduce_step(diagram: &DynkinDiagram, tag: &Tag, set: NodeSet) -> Result<Vec<Reduced>> {
    tag.check_rank(diagram)?;
    diagram.check_subset(set)?;
    if set == diagram.nodes() {
        return Err(Error::NotProper(set));
    }
    let sub = diagram.subdiagram(set)?;
    Ok(sub
        .diagram
        .split_components()
        .into_iter()
        .map(|(local, component)| {
            let nodes: Vec<usize> = local.iter().map(|i| sub.nodes[i]).collect();
            Reduced {
                diagram: component,
                tag: tag.restrict(&nodes),
                nodes,
            }
        })
        .collect())
}

pub fn analyze(diagram: &DynkinDiagram, tag: &Tag, hyp: &Hypotheses) -> Result<AnalysisReport> {
    Analyzer::new(diagram).analyze(tag, hyp)
}

/// A vector bundle with strictly increasing splitting type `a_0 < .. < a_r`
/// and `cdim >= 2` splits as a sum of line bundles: its tag on `A_r` has no
/// zeros.
pub fn check_splitting_corollary(splitting: &[i64], hyp: &Hypotheses) -> Result<AnalysisReport> {
    if splitting.len() < 2 {
        return Err(Error::SplittingTooShort(splitting.len()));
    }
    if splitting.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(splitting.to_vec()));
    }
    match hyp.cdim {
        Some(c) if c >= 2 => {}
        _ => {
            return Err(Error::InsufficientHypotheses(
                "splitting of strictly increasing types needs cdim >= 2".into(),
            ))
        }
    }
    let st = SplittingType::new(splitting.to_vec())?;
    let (diagram, tag) = tagging::tag_from_splitting(&st);
    let mut report = analyze(&diagram, &tag, hyp)?;
    let split = report.verdict == Verdict::Diagonalizable;
    report.trace.push(TraceStep {
        step: report.trace.len() + 1,
        stage: Stage {
            diagram: diagram.to_string(),
            nodes: diagram.nodes(),
            tag,
        },
        event: Event::LineBundleSplitting {
            splitting_type: splitting.to_vec(),
            direct_sum_of_line_bundles: split,
        },
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DynkinDiagram {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tag {
        s.parse().unwrap()
    }

    fn labels(l: &[usize]) -> NodeSet {
        NodeSet::from_labels(l)
    }

    fn cdim(c: u32) -> Hypotheses {
        Hypotheses::default().with_cdim(c)
    }

    #[test]
    fn defect_small_cases() {
        assert_eq!(
            reducibility_defect(&d("A1"), &t("1"), NodeSet::empty()).unwrap(),
            1
        );
        // B3 (0,1,0): defect of D \ {2} is m_2 = 6.
        assert_eq!(
            reducibility_defect(&d("B3"), &t("0,1,0"), labels(&[1, 3])).unwrap(),
            6
        );
        // I_1 proper: nothing of degree -1 is left outside.
        assert_eq!(
            reducibility_defect(&d("A3"), &t("0,1,2"), labels(&[1, 2])).unwrap(),
            0
        );
    }

    #[test]
    fn defect_requires_the_zero_set() {
        let err = reducibility_defect(&d("A3"), &t("0,1,2"), labels(&[2])).unwrap_err();
        assert_eq!(
            err,
            Error::MissingZeroSet {
                set: labels(&[2]),
                zeros: labels(&[1])
            }
        );
    }

    #[test]
    fn criterion_examples() {
        assert!(criterion_reducible(&d("A3"), &t("0,1,2"), labels(&[1, 2]), &cdim(1)).unwrap());
        assert!(!criterion_reducible(&d("A1"), &t("1"), NodeSet::empty(), &cdim(1)).unwrap());
        assert!(criterion_reducible(&d("A1"), &t("1"), NodeSet::empty(), &cdim(2)).unwrap());
    }

    #[test]
    fn criterion_without_cdim_is_not_false() {
        let err = criterion_reducible(&d("A1"), &t("1"), NodeSet::empty(), &Hypotheses::default())
            .unwrap_err();
        assert!(matches!(err, Error::InsufficientHypotheses(_)));
        let denied = cdim(5).without(Hypothesis::ConnectedFibers);
        assert!(matches!(
            criterion_reducible(&d("A1"), &t("1"), NodeSet::empty(), &denied),
            Err(Error::InsufficientHypotheses(_))
        ));
        assert!(matches!(
            criterion_reducible(&d("A2"), &t("1,1"), NodeSet::full(2), &cdim(5)),
            Err(Error::NotProper(_))
        ));
    }

    #[test]
    fn minimal_sets() {
        let m = minimal_reducible_set(&d("A2"), &t("1,2"), &cdim(2))
            .unwrap()
            .unwrap();
        assert_eq!(m.set, NodeSet::empty());
        assert_eq!(m.search, Search::Exhaustive);
        assert!(minimal_reducible_set(&d("A1"), &t("1"), &cdim(1))
            .unwrap()
            .is_none());
        let m = minimal_reducible_set(&d("B3"), &t("0,1,0"), &cdim(7))
            .unwrap()
            .unwrap();
        assert_eq!(m.set, labels(&[1, 3]));
        let m = minimal_reducible_set(&d("B3"), &t("0,1,0"), &cdim(6)).unwrap();
        assert!(m.is_none());
    }

    #[test]
    fn large_diagrams_use_the_theorem_family() {
        // A14 with all ones: 14 free nodes, above the exhaustive limit.
        let tag = Tag::new(vec![1; 14]);
        let m = minimal_reducible_set(&d("A14"), &tag, &cdim(2))
            .unwrap()
            .unwrap();
        assert_eq!(m.search, Search::TheoremFamily);
        assert_eq!(m.set, NodeSet::empty());
        assert_eq!(m.operands.len(), 14);
    }

    #[test]
    fn reduce_steps() {
        let r = reduce_step(&d("A3"), &t("1,2,1"), labels(&[1, 3])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].diagram.to_string(), "A1");
        assert_eq!(r[0].tag, t("1"));
        assert_eq!(r[1].nodes, vec![2]);
        assert_eq!(r[1].tag, t("1"));

        let r = reduce_step(&d("D5"), &t("0,1,0,2,0"), labels(&[1, 3, 5])).unwrap();
        assert!(r.iter().all(|c| c.tag.is_zero()));

        let r = reduce_step(&d("E6"), &t("4,0,5,6,1,1"), labels(&[1, 3, 4])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].diagram.to_string(), "A3");
        assert_eq!(r[0].tag, t("4,5,6"));
    }

    #[test]
    fn analyze_examples() {
        let rcc = Hypotheses::default().with(Hypothesis::Rcc);
        assert_eq!(
            analyze(&d("E7"), &Tag::zeros(7), &rcc).unwrap().verdict,
            Verdict::Trivial
        );
        assert_eq!(
            analyze(&d("A2"), &t("1,2"), &cdim(2)).unwrap().verdict,
            Verdict::Diagonalizable
        );
        assert_eq!(
            analyze(&d("A1"), &t("1"), &cdim(1)).unwrap().verdict,
            Verdict::Inconclusive
        );
        assert_eq!(
            analyze(&d("B3"), &t("0,1,0"), &cdim(7)).unwrap().verdict,
            Verdict::Diagonalizable
        );
    }

    #[test]
    fn zero_tag_without_rcc_is_a_candidate() {
        let r = analyze(&d("A2"), &t("0,0"), &Hypotheses::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Diagonalizable);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn missing_cdim_keeps_the_pipeline_from_firing() {
        let r = analyze(&d("A2"), &t("1,2"), &Hypotheses::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(matches!(
            r.trace[0].event,
            Event::InsufficientHypotheses { .. }
        ));
        assert!(analyze(&d("A2"), &t("1,2"), &cdim(0)).is_err());
        assert!(analyze(&d("A2"), &t("1,2,3"), &cdim(2)).is_err());
    }

    #[test]
    fn partial_progress_reports_residuals() {
        // A1+A1 with tags (1),(0): the second component is trivial.
        let hyp = cdim(1).with(Hypothesis::Rcc);
        let r = analyze(&d("A1+A1"), &t("1,0"), &hyp).unwrap();
        match r.verdict {
            Verdict::ReducedTo(res) => {
                assert_eq!(res.len(), 1);
                assert_eq!(res[0].nodes, labels(&[1]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(r.trace[0].event, Event::ComponentSplit { .. }));
    }

    #[test]
    fn reduction_recurses_into_components() {
        // A3 tag (1,2,1) with cdim 1: I_1 = {1,3} certified, each A1 piece
        // then has tag (1) and cdim 1, which is undecided.
        let r = analyze(&d("A3"), &t("1,2,1"), &cdim(1)).unwrap();
        match &r.verdict {
            Verdict::ReducedTo(res) => {
                let nodes: Vec<_> = res.iter().map(|s| s.nodes).collect();
                assert_eq!(nodes, vec![labels(&[1]), labels(&[3])]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(r
            .trace
            .iter()
            .any(|s| matches!(s.event, Event::SubtagReduction { .. })));
    }

    #[test]
    fn splitting_corollary() {
        let r = check_splitting_corollary(&[0, 1, 3], &cdim(2)).unwrap();
        assert_eq!(r.verdict, Verdict::Diagonalizable);
        assert!(matches!(
            r.trace.last().unwrap().event,
            Event::LineBundleSplitting {
                direct_sum_of_line_bundles: true,
                ..
            }
        ));
        let r = check_splitting_corollary(&[0, 1, 2, 3, 5], &cdim(3)).unwrap();
        assert_eq!(r.verdict, Verdict::Diagonalizable);
        assert!(matches!(
            check_splitting_corollary(&[0, 0, 1], &cdim(2)),
            Err(Error::NotStrictlyIncreasing(_))
        ));
        assert!(matches!(
            check_splitting_corollary(&[0, 1], &cdim(1)),
            Err(Error::InsufficientHypotheses(_))
        ));
    }

    #[test]
    fn hypothesis_names_parse() {
        for h in Hypothesis::ALL {
            assert_eq!(h.name().parse::<Hypothesis>().unwrap(), h);
        }
        assert!("RCC".parse::<Hypothesis>().is_ok());
        assert!("bogus".parse::<Hypothesis>().is_err());
    }
}
