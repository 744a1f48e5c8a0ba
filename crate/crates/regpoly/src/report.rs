//! Analysis pipelines, their reports, and exit codes.

use std::fmt::Write as _;

use serde::Serialize;

use regpoly_core::analysis::{analyze, AnalysisReport};
use regpoly_core::chiral::{analyze_rotation, ChiralReport, RotationGroupError};
use regpoly_core::constructions::{Certificate, ConstructionError};
use regpoly_core::presentation::ParseError;
use regpoly_core::stringc::StringGroupError;
use regpoly_core::{EnumerationError, Kind, Presentation, RotationGroup, StringGroup, DEFAULT_MAX_COSETS};

use crate::corpus::Expected;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_LIMIT: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_cosets: usize,
    pub json: bool,
    pub oracle_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_cosets: DEFAULT_MAX_COSETS,
            json: false,
            oracle_limit: 2000,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Limit(EnumerationError),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Usage(String),
}

impl AppError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Io { .. } | AppError::Parse(_) | AppError::Usage(_) => EXIT_INPUT,
            AppError::Limit(_) => EXIT_LIMIT,
            AppError::Failed(_) => EXIT_FAILED,
        }
    }
}

impl From<EnumerationError> for AppError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::LimitExceeded { .. } => AppError::Limit(e),
            other => AppError::Failed(other.to_string()),
        }
    }
}

impl From<StringGroupError> for AppError {
    fn from(e: StringGroupError) -> Self {
        match e {
            StringGroupError::Enumeration(e) => e.into(),
            other => AppError::Failed(format!("not a string group generated by involutions: {other}")),
        }
    }
}

impl From<RotationGroupError> for AppError {
    fn from(e: RotationGroupError) -> Self {
        match e {
            RotationGroupError::Enumeration(e) => e.into(),
            other => AppError::Failed(format!("not a rotation group of a polytope: {other}")),
        }
    }
}

impl From<ConstructionError> for AppError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Enumeration(e) => e.into(),
            ConstructionError::StringGroup(e) => e.into(),
            ConstructionError::RotationGroup(e) => e.into(),
            e @ (ConstructionError::CertificateMismatch { .. } | ConstructionError::Collapse { .. }) => {
                AppError::Failed(e.to_string())
            }
            e => AppError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularReport {
    #[serde(flatten)]
    pub analysis: AnalysisReport,
    /// The declared symbol, when the computed one differs from it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub declared_schlafli: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Regular(RegularReport),
    Rotation(ChiralReport),
}

impl Report {
    /// Clean reports exit with 0: a string C-group (or rotation group) with
    /// no audit violations.
    pub fn is_clean(&self) -> bool {
        match self {
            Report::Regular(r) => r.analysis.c_group && r.analysis.audit_violations.is_empty(),
            Report::Rotation(r) => r.audit_violations.is_empty(),
        }
    }

    pub fn flags(&self) -> usize {
        match self {
            Report::Regular(r) => r.analysis.flag_count,
            Report::Rotation(r) => r.flags,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Report::Regular(r) => r.analysis.order,
            Report::Rotation(r) => r.order,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Report::Regular(r) => render_regular(r),
            Report::Rotation(r) => render_rotation(r),
        }
    }
}

pub fn analyze_regular(g: &StringGroup) -> Result<Report, AppError> {
    let analysis = analyze(g)?;
    let declared_schlafli = g
        .schlafli_mismatch()
        .map(|(declared, _)| declared.iter().map(|e| e.to_string()).collect());
    Ok(Report::Regular(RegularReport {
        analysis,
        declared_schlafli,
    }))
}

pub fn analyze_presentation(pres: Presentation, cfg: &Config) -> Result<Report, AppError> {
    match pres.kind() {
        Kind::Reflection => analyze_regular(&StringGroup::build(pres, cfg.max_cosets)?),
        Kind::Rotation => {
            let g = RotationGroup::build(pres, cfg.max_cosets)?;
            Ok(Report::Rotation(analyze_rotation(&g)?))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn symbol(ps: &[u32]) -> String {
    let parts: Vec<String> = ps.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn pairs(ps: &[(usize, usize)]) -> String {
    if ps.is_empty() {
        return "none".into();
    }
    let parts: Vec<String> = ps.iter().map(|(k, m)| format!("({k},{m})")).collect();
    parts.join(" ")
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    parts.join(", ")
}

fn render_regular(r: &RegularReport) -> String {
    let a = &r.analysis;
    let mut s = String::new();
    let _ = writeln!(s, "regular polytope of rank {}", a.rank);
    let _ = writeln!(s, "  group order       {} ({} flags)", a.order, a.flag_count);
    let _ = writeln!(s, "  schlafli symbol   {}", symbol(&a.schlafli));
    if let Some(declared) = &r.declared_schlafli {
        let _ = writeln!(s, "  declared symbol   {{{}}} (collapsed)", declared.join(","));
    }
    let _ = writeln!(s, "  f-vector          ({})", list(&a.f_vector));
    let _ = writeln!(s, "  string C-group    {}", yes_no(a.c_group));
    if let Some(w) = &a.witness {
        let _ = writeln!(
            s,
            "  violation         <{:?}> meets <{:?}> in {} elements, expected {}",
            w.i, w.j, w.intersection_order, w.expected_order
        );
    }
    let _ = writeln!(s, "  flat pairs        {}", pairs(&a.flat_pairs));
    let _ = writeln!(
        s,
        "  flat {}, tight {}, degenerate {}",
        yes_no(a.is_flat),
        yes_no(a.is_tight),
        yes_no(a.is_degenerate)
    );
    render_audit(&mut s, &a.audit_violations);
    s
}

fn render_rotation(r: &ChiralReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} polytope of rank {} (rotation group)",
        if r.is_chiral { "chiral" } else { "directly regular" },
        r.rank
    );
    let _ = writeln!(s, "  group order       {} ({} flags)", r.order, r.flags);
    let _ = writeln!(s, "  schlafli symbol   {}", symbol(&r.schlafli));
    let _ = writeln!(s, "  f-vector          ({})", list(&r.f_vector));
    let _ = writeln!(s, "  flat pairs        {}", pairs(&r.flat_pairs));
    let _ = writeln!(s, "  mixed cover       {} flags", r.mixed_cover_flags);
    let _ = writeln!(
        s,
        "  intersection      {}",
        if r.advisory_intersection { "holds" } else { "fails" }
    );
    if let Some(b) = &r.bound_check {
        let _ = writeln!(
            s,
            "  flag bound        {:?} for {:?} facets, {:?} vertex-figures: {}",
            b.bound,
            b.query.facet,
            b.query.vertex_figure,
            if b.satisfied { "met" } else { "VIOLATED" }
        );
    }
    render_audit(&mut s, &r.audit_violations);
    s
}

fn render_audit(s: &mut String, violations: &[regpoly_core::analysis::AuditViolation]) {
    if violations.is_empty() {
        let _ = writeln!(s, "  audit             clean");
    } else {
        let _ = writeln!(s, "  audit             {} violation(s)", violations.len());
        for v in violations {
            let _ = writeln!(s, "    {}: {}", v.rule, v.detail);
        }
    }
}

pub fn render_certificates(certs: &[Certificate]) -> String {
    let mut s = String::new();
    for c in certs {
        let _ = writeln!(
            s,
            "certificate {:<20} expected {:<8} computed {:<8} {}",
            c.what,
            c.expected,
            c.computed,
            if c.holds() { "pass" } else { "FAIL" }
        );
    }
    s
}

/// Differences between a report and the expected values.
pub fn compare(report: &Report, expected: &Expected) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |what: &str, want: Option<String>, got: String| {
        if let Some(want) = want {
            if want != got {
                out.push(format!("{what}: expected {want}, computed {got}"));
            }
        }
    };
    let s = |v: &dyn std::fmt::Debug| format!("{v:?}");
    match report {
        Report::Regular(r) => {
            let a = &r.analysis;
            check("order", expected.order.map(|v| s(&v)), s(&a.order));
            check("flags", expected.flags.map(|v| s(&v)), s(&a.flag_count));
            check("schlafli", expected.schlafli.as_ref().map(|v| s(v)), s(&a.schlafli));
            check("f-vector", expected.f_vector.as_ref().map(|v| s(v)), s(&a.f_vector));
            check("vertices", expected.vertices.map(|v| s(&v)), s(&a.vertices()));
            check("facets", expected.facets.map(|v| s(&v)), s(&a.facets()));
            check("C-group", expected.c_group.map(|v| s(&v)), s(&a.c_group));
            check(
                "witness",
                expected.witness.as_ref().map(|w| s(&(w.i.clone(), w.j.clone()))),
                s(&a.witness
                    .as_ref()
                    .map(|w| (w.i.clone(), w.j.clone()))
                    .unwrap_or_default()),
            );
            check("flat", expected.is_flat.map(|v| s(&v)), s(&a.is_flat));
            check(
                "flat pairs",
                expected.flat_pairs.as_ref().map(|v| s(v)),
                s(&a.flat_pairs),
            );
            check("tight", expected.is_tight.map(|v| s(&v)), s(&a.is_tight));
            check("chiral", expected.is_chiral.map(|v| s(&v)), s(&false));
        }
        Report::Rotation(r) => {
            check("order", expected.order.map(|v| s(&v)), s(&r.order));
            check("flags", expected.flags.map(|v| s(&v)), s(&r.flags));
            check("schlafli", expected.schlafli.as_ref().map(|v| s(v)), s(&r.schlafli));
            check("f-vector", expected.f_vector.as_ref().map(|v| s(v)), s(&r.f_vector));
            check("vertices", expected.vertices.map(|v| s(&v)), s(&r.vertices));
            check("facets", expected.facets.map(|v| s(&v)), s(&r.facets));
            check("chiral", expected.is_chiral.map(|v| s(&v)), s(&r.is_chiral));
            check(
                "flat pairs",
                expected.flat_pairs.as_ref().map(|v| s(v)),
                s(&r.flat_pairs),
            );
            let kinds = r.bound_check.as_ref().map(|b| (b.query.facet, b.query.vertex_figure));
            check(
                "facet kind",
                expected.facet_kind.map(|v| s(&Some(v))),
                s(&kinds.map(|k| k.0)),
            );
            check(
                "vertex-figure kind",
                expected.vertex_figure_kind.map(|v| s(&Some(v))),
                s(&kinds.map(|k| k.1)),
            );
        }
    }
    out
}
