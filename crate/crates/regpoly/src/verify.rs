//! Reproduction suites: the smallest non-flat regular polytopes, the smallest
//! chiral polytopes, and the structural propositions over the corpus.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use regpoly_core::analysis::{is_flat_km, is_tight_by_flatness, min_nonflat_flags, section_flat_pairs, FlagCount};
use regpoly_core::chiral::{bound_cc, bound_cr, bound_rr, chiral_lower_bound, BoundQuery, ChiralBound};
use regpoly_core::constructions::Family;
use regpoly_core::{Built, FamilySpec, Kind, RotationGroup, SectionKind, StringGroup};

use crate::corpus::{self, Entry};
use crate::family::coxeter_spec;
use crate::report::{analyze_regular, compare, AppError, Config, Report};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.label,
                c.detail
            );
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(s, "{}: {ok}/{} checks passed", self.suite, self.checks.len());
        s
    }
}

/// Parses `a..b`, `a..=b` or a single rank.
pub fn parse_rank_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected a rank range like 3..5, found {s:?}");
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

/// Published cells of the smallest non-flat regular polytopes, ranks 3 to 5.
const TABLE2: [[u64; 4]; 3] = [[24, 48, 60, 64], [120, 240, 384, 480], [720, 1440, 2880, 3840]];

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Reference value of a cell computed independently of the library.
fn table2_reference(n: usize, which: usize) -> FlagCount {
    if n <= 5 {
        return FlagCount::Exact(TABLE2[n - 3][which - 1]);
    }
    let s = factorial(n as u128 + 1);
    let v = |k: u128| (s * k) as u64;
    match which {
        1 => FlagCount::Exact(v(1)),
        2 => FlagCount::Exact(v(2)),
        3 => FlagCount::Exact(v(4)),
        _ => FlagCount::AtLeast((s * 16 / 3) as u64),
    }
}

fn lambda_spec(n: usize, sixes: usize) -> FamilySpec {
    let mut symbol = vec![6; sixes];
    symbol.resize(n - 1, 3);
    Family::Lambda { symbol }.into()
}

/// A construction realising a cell, where one is known in closed form.
fn table2_construction(n: usize, which: usize) -> Option<FamilySpec> {
    Some(match (n, which) {
        (_, 1) => coxeter_spec(&vec![3; n - 1]),
        (3, 2) => coxeter_spec(&[3, 4]),
        (3, 3) => Family::Hemi { symbol: [3, 5], k: 5 }.into(),
        (3, 4) => Family::Torus44 { b: 2, c: 2 }.into(),
        (4, 4) => lambda_spec(4, 2),
        (_, 2) => lambda_spec(n, 1),
        (_, 3) if n >= 5 => lambda_spec(n, 2),
        _ => return None,
    })
}

fn describe(spec: &FamilySpec) -> String {
    serde_json::to_string(spec).unwrap_or_default()
}

fn check_witness(g: &StringGroup, want: u64) -> Result<String, String> {
    let n = g.rank();
    let flags = g.order() as u64;
    let flat = is_flat_km(g, 0, n - 1).map_err(|e| e.to_string())?;
    let c = g.is_string_c_group().map_err(|e| e.to_string())?.is_c_group;
    let summary = format!("{flags} flags, {}, C-group {c}", if flat { "flat" } else { "non-flat" });
    if flags == want && !flat && c {
        Ok(summary)
    } else {
        Err(summary)
    }
}

pub fn table2(ranks: RangeInclusive<usize>, cfg: &Config) -> SuiteReport {
    let mut out = SuiteReport::new("table2");
    let corpus = corpus::entries();
    for n in ranks.clone().filter(|&n| n >= 3) {
        for which in 1..=4 {
            let cell = format!("rank {n} cell {which}");
            let reference = table2_reference(n, which);
            match min_nonflat_flags(n, which) {
                Ok(v) if v == reference => out.push(&cell, true, format!("{v:?}")),
                Ok(v) => out.push(&cell, false, format!("computed {v:?}, reference {reference:?}")),
                Err(e) => out.push(&cell, false, e.to_string()),
            }
            let FlagCount::Exact(want) = reference else {
                out.push(format!("{cell} witness"), true, "value-only");
                continue;
            };
            let tagged = corpus
                .iter()
                .find(|e| e.expected.table2.is_some_and(|t| t.rank == n && t.position == which));
            if let Some(spec) = table2_construction(n, which) {
                let label = format!("{cell} witness {}", describe(&spec));
                match spec.build(cfg.max_cosets) {
                    Ok(Built::Regular(c)) => match check_witness(&c.group, want) {
                        Ok(d) => out.push(label, true, d),
                        Err(d) => out.push(label, false, d),
                    },
                    Ok(Built::Rotation(_)) => out.push(label, false, "built a rotation group"),
                    Err(e) => out.push(label, false, e.to_string()),
                }
            } else if let Some(entry) = tagged {
                let label = format!("{cell} witness corpus:{}", entry.name);
                let built = entry
                    .presentation()
                    .map_err(|e| e.to_string())
                    .and_then(|p| StringGroup::build(p, cfg.max_cosets).map_err(|e| e.to_string()));
                match built.and_then(|g| check_witness(&g, want)) {
                    Ok(d) => out.push(label, true, d),
                    Err(d) => out.push(label, false, d),
                }
            } else {
                out.push(format!("{cell} witness"), true, "value-only");
            }
        }
    }
    out
}

/// Published cells of the smallest chiral polytopes, ranks 3 to 7, in the
/// column order regular/regular, chiral/regular, chiral/chiral.
const TABLE3: [[ChiralBound; 3]; 5] = {
    use ChiralBound::*;
    [
        [Exact(40), NoneExist, NoneExist],
        [Exact(384), Exact(240), Exact(240)],
        [
            AtLeast(4004),
            Between {
                lower: 4004,
                upper: 4608,
            },
            Exact(1440),
        ],
        [AtLeast(23040), AtLeast(18432), Exact(18432)],
        [AtLeast(188160), AtLeast(69120), AtLeast(55296)],
    ]
};

const COLUMNS: [(SectionKind, SectionKind, &str); 3] = [
    (SectionKind::Regular, SectionKind::Regular, "rr"),
    (SectionKind::Chiral, SectionKind::Regular, "cr"),
    (SectionKind::Chiral, SectionKind::Chiral, "cc"),
];

fn table3_reference(n: usize, column: usize) -> ChiralBound {
    if n <= 7 {
        return TABLE3[n - 3][column];
    }
    let n = n as u128;
    ChiralBound::AtLeast(match column {
        0 => 16 * n * factorial(n) / 3,
        1 => 16 * (n - 1) * factorial(n - 1),
        _ => 48 * (n - 2) * factorial(n - 2),
    } as u64)
}

fn bound(n: usize, column: usize) -> Option<ChiralBound> {
    let (facet, vertex_figure, _) = COLUMNS[column];
    chiral_lower_bound(BoundQuery {
        rank: n,
        facet,
        vertex_figure,
    })
    .ok()
}

pub fn table3(ranks: RangeInclusive<usize>, cfg: &Config) -> SuiteReport {
    let mut out = SuiteReport::new("table3");
    for n in ranks.clone().filter(|&n| n >= 3) {
        for (column, &(_, _, name)) in COLUMNS.iter().enumerate() {
            let label = format!("rank {n} {name}");
            let reference = table3_reference(n, column);
            match bound(n, column) {
                Some(b) if b == reference => out.push(label, true, bound_text(b)),
                Some(b) => out.push(label, false, format!("computed {b:?}, reference {reference:?}")),
                None => out.push(label, false, "no bound"),
            }
        }
        if n == 3 {
            continue;
        }
        // Each column is at least three times the column to its left one rank
        // down, with equality once the closed forms apply.
        for column in 1..3 {
            let (Some(here), Some(below)) = (bound(n, column), bound(n - 1, column - 1)) else {
                continue;
            };
            let (Some(a), Some(b)) = (here.lower(), below.lower()) else {
                continue;
            };
            let label = format!(
                "rank {n} {} >= 3 x rank {} {}",
                COLUMNS[column].2,
                n - 1,
                COLUMNS[column - 1].2
            );
            let ok = if n >= 8 { a == 3 * b } else { a >= 3 * b };
            out.push(label, ok, format!("{a} vs {}", 3 * b));
        }
    }
    let chain: Vec<usize> = (8..=16).filter(|n| ranks.contains(n)).collect();
    if !chain.is_empty() {
        let bad: Vec<usize> = chain
            .iter()
            .copied()
            .filter(
                |&n| !matches!((bound_cc(n), bound_cr(n), bound_rr(n)), (Some(a), Some(b), Some(c)) if a < b && b < c),
            )
            .collect();
        out.push(
            format!("cc < cr < rr for ranks {}..{}", chain[0], chain[chain.len() - 1]),
            bad.is_empty(),
            if bad.is_empty() {
                "holds".to_string()
            } else {
                format!("fails at {bad:?}")
            },
        );
    }
    for entry in corpus::entries() {
        let Some(cell) = entry.expected.table3 else { continue };
        if !ranks.contains(&cell.rank) {
            continue;
        }
        let label = format!("witness corpus:{}", entry.name);
        match table3_witness(&entry, cfg) {
            Ok(d) => out.push(label, true, d),
            Err(d) => out.push(label, false, d),
        }
    }
    out
}

fn bound_text(b: ChiralBound) -> String {
    match b {
        ChiralBound::Exact(v) => format!("exactly {v}"),
        ChiralBound::AtLeast(v) => format!("at least {v}"),
        ChiralBound::Between { lower, upper } => format!("between {lower} and {upper}"),
        ChiralBound::NoneExist => "none exist".into(),
    }
}

fn table3_witness(entry: &Entry, cfg: &Config) -> Result<String, String> {
    let cell = entry.expected.table3.expect("tagged");
    let pres = entry.presentation().map_err(|e| e.to_string())?;
    let g = RotationGroup::build(pres, cfg.max_cosets).map_err(|e| e.to_string())?;
    if !g.is_chiral() {
        return Err("not chiral".into());
    }
    let kind = |chiral: bool| {
        if chiral {
            SectionKind::Chiral
        } else {
            SectionKind::Regular
        }
    };
    let facet = kind(g.facet_facts().chiral);
    let vertex_figure = kind(g.vertex_figure_facts().chiral);
    if (facet, vertex_figure) != (cell.facet, cell.vertex_figure) {
        return Err(format!("sections are {facet:?}/{vertex_figure:?}"));
    }
    let bound = chiral_lower_bound(BoundQuery {
        rank: cell.rank,
        facet,
        vertex_figure,
    })
    .map_err(|e| e.to_string())?;
    let flags = g.flags() as u64;
    let ok = match bound {
        ChiralBound::Exact(v) => flags == v,
        b => b.admits(flags),
    };
    let detail = format!("{flags} flags, bound {}", bound_text(bound));
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Violations of the flatness propositions: monotonicity, and transfer to
/// facets and vertex-figures.
pub fn flatness_violations(
    n: usize,
    pairs: &[(usize, usize)],
    facet: &[(usize, usize)],
    vertex_figure: &[(usize, usize)],
    degenerate: bool,
) -> Vec<String> {
    let mut out = Vec::new();
    let has = |ps: &[(usize, usize)], k, m| ps.contains(&(k, m));
    if degenerate && n >= 2 && !has(pairs, 0, n - 1) {
        out.push("degenerate but not flat".into());
    }
    for &(k, m) in pairs {
        for i in 0..=k {
            for j in m..n {
                if !has(pairs, i, j) {
                    out.push(format!("({k},{m})-flat but not ({i},{j})-flat"));
                }
            }
        }
    }
    for k in 0..n {
        for m in k + 1..n {
            if m + 2 <= n && has(pairs, k, m) != has(facet, k, m) {
                out.push(format!("({k},{m}) flatness differs from the facets"));
            }
            if k >= 1 && has(pairs, k, m) != has(vertex_figure, k - 1, m - 1) {
                out.push(format!("({k},{m}) flatness differs from the vertex-figures"));
            }
        }
    }
    out
}

fn regular_checks(entry: &Entry, g: &StringGroup, cfg: &Config, out: &mut Vec<Check>) -> Result<(), AppError> {
    let report = analyze_regular(g)?;
    let Report::Regular(r) = &report else { unreachable!() };
    let a = &r.analysis;
    let name = entry.name;
    let mut push = |what: &str, violations: Vec<String>| {
        out.push(Check {
            label: format!("{name} {what}"),
            passed: violations.is_empty(),
            detail: if violations.is_empty() {
                "ok".into()
            } else {
                violations.join("; ")
            },
        });
    };
    push("expected values", compare(&report, &entry.expected));
    push(
        "audit",
        a.audit_violations
            .iter()
            .map(|v| format!("{}: {}", v.rule, v.detail))
            .collect(),
    );
    if g.order() <= cfg.oracle_limit {
        let exhaustive = g.find_intersection_witness()?.is_none();
        push(
            "C-group oracle",
            if exhaustive == a.c_group {
                vec![]
            } else {
                vec![format!("recursive {}, exhaustive {exhaustive}", a.c_group)]
            },
        );
    }
    if a.c_group {
        let n = a.rank;
        let (facet, vf) = if n >= 2 {
            (section_flat_pairs(g, 0, n - 2), section_flat_pairs(g, 1, n - 1))
        } else {
            (vec![], vec![])
        };
        push(
            "flatness",
            flatness_violations(n, &a.flat_pairs, &facet, &vf, a.is_degenerate),
        );
        let by_flatness = is_tight_by_flatness(n, &a.flat_pairs);
        push(
            "tightness",
            if by_flatness == a.is_tight {
                vec![]
            } else {
                vec![format!("tight {}, (i,i+2)-flat throughout {by_flatness}", a.is_tight)]
            },
        );
    }
    Ok(())
}

fn rotation_checks(entry: &Entry, g: &RotationGroup, out: &mut Vec<Check>) -> Result<(), AppError> {
    let report = regpoly_core::chiral::analyze_rotation(g)?;
    let name = entry.name;
    let mut push = |what: &str, violations: Vec<String>| {
        out.push(Check {
            label: format!("{name} {what}"),
            passed: violations.is_empty(),
            detail: if violations.is_empty() {
                "ok".into()
            } else {
                violations.join("; ")
            },
        });
    };
    let r = &report;
    push(
        "expected values",
        compare(&Report::Rotation(report.clone()), &entry.expected),
    );
    push(
        "audit",
        r.audit_violations
            .iter()
            .map(|v| format!("{}: {}", v.rule, v.detail))
            .collect(),
    );
    let by_graph = g.is_chiral_by_graph();
    push(
        "chirality routes",
        if by_graph == r.is_chiral {
            vec![]
        } else {
            vec![format!(
                "substitution says {}, graph subgroup says {by_graph}",
                r.is_chiral
            )]
        },
    );
    if r.is_chiral {
        let mut v = Vec::new();
        if r.flags % 4 != 0 {
            v.push(format!("{} flags is not divisible by 4", r.flags));
        }
        if let Some(b) = &r.bound_check {
            if !b.satisfied {
                v.push(format!("{} flags below {}", r.flags, bound_text(b.bound)));
            }
        }
        push("flag bound", v);
    }
    if r.rank >= 3 {
        let facet = g.facet_facts().flat_pairs;
        let vf = g.vertex_figure_facts().flat_pairs;
        push(
            "flatness",
            flatness_violations(r.rank, &r.flat_pairs, &facet, &vf, r.schlafli.contains(&2)),
        );
    }
    Ok(())
}

/// All checks for one corpus entry.
pub fn entry_checks(entry: &Entry, cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    let result = (|| -> Result<(), AppError> {
        let pres = entry.presentation()?;
        match pres.kind() {
            Kind::Reflection => {
                let g = StringGroup::build(pres, cfg.max_cosets)?;
                regular_checks(entry, &g, cfg, &mut out)
            }
            Kind::Rotation => {
                let g = RotationGroup::build(pres, cfg.max_cosets)?;
                rotation_checks(entry, &g, &mut out)
            }
        }
    })();
    if let Err(e) = result {
        out.push(Check {
            label: format!("{} analysis", entry.name),
            passed: false,
            detail: e.to_string(),
        });
    }
    out
}

/// Corpus-wide propositions. Entries are checked in parallel, and reported in
/// corpus order.
pub fn props(ranks: Option<RangeInclusive<usize>>, cfg: &Config) -> SuiteReport {
    let entries: Vec<Entry> = corpus::entries()
        .into_iter()
        .filter(|e| match (&ranks, e.presentation()) {
            (Some(r), Ok(p)) => r.contains(&p.rank()),
            _ => true,
        })
        .collect();
    let results: Vec<Vec<Check>> = std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(move || entry_checks(e, cfg))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("corpus check panicked"))
            .collect()
    });
    let mut out = SuiteReport::new("props");
    out.checks = results.into_iter().flatten().collect();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_ranges() {
        assert_eq!(parse_rank_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_rank_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_rank_range("8").unwrap(), 8..=8);
        assert!(parse_rank_range("5..3").is_err());
        assert!(parse_rank_range("x").is_err());
    }

    #[test]
    fn flatness_propositions() {
        assert!(flatness_violations(3, &[(0, 2)], &[], &[], false).is_empty());
        assert!(!flatness_violations(3, &[(0, 1)], &[], &[], false).is_empty());
        assert!(!flatness_violations(4, &[(1, 2)], &[], &[], false).is_empty());
    }
}
