//! Flag counts, face counts, flatness and tightness of regular polytopes.
//!
//! Faces are never materialised: the `i`-faces are the cosets of
//! `Γᵢ = ⟨ρⱼ : j ≠ i⟩`, and a `k`-face is incident with an `m`-face exactly when
//! the two cosets meet.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::coset::EnumerationError;
use crate::group::generator_words;
use crate::perm::{product_size_regular, Permutation};
use crate::presentation::Presentation;
use crate::stringc::{IntersectionWitness, StringGroup};

/// A flag count that is either known exactly or only bounded below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagCount {
    Exact(u64),
    AtLeast(u64),
}

impl FlagCount {
    pub fn value(self) -> u64 {
        match self {
            FlagCount::Exact(v) | FlagCount::AtLeast(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, FlagCount::Exact(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("rank {0} is below 3")]
    RankTooSmall(usize),
    #[error("position {0} is not one of 1, 2, 3, 4")]
    InvalidPosition(usize),
    #[error("rank {0} is too large for 64-bit flag counts")]
    Overflow(usize),
}

/// A counting statement that failed on a concrete polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditViolation {
    pub rule: String,
    pub detail: String,
}

impl AuditViolation {
    pub fn new(rule: &str, detail: String) -> Self {
        AuditViolation {
            rule: rule.into(),
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub rank: usize,
    pub order: usize,
    pub flag_count: usize,
    pub schlafli: Vec<u32>,
    pub f_vector: Vec<usize>,
    pub c_group: bool,
    pub flat_pairs: Vec<(usize, usize)>,
    pub is_flat: bool,
    pub is_tight: bool,
    pub is_degenerate: bool,
    pub audit_violations: Vec<AuditViolation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<IntersectionWitness>,
}

impl AnalysisReport {
    pub fn vertices(&self) -> usize {
        self.f_vector[0]
    }

    pub fn facets(&self) -> usize {
        self.f_vector[self.rank - 1]
    }

    pub fn is_flat_pair(&self, k: usize, m: usize) -> bool {
        self.flat_pairs.contains(&(k, m))
    }
}

/// Runs the full analysis of a string group.
pub fn analyze(g: &StringGroup) -> Result<AnalysisReport, EnumerationError> {
    let verdict = g.is_string_c_group()?;
    let f_vector = f_vector(g)?;
    let flat_pairs = flatness_spectrum(g)?;
    let n = g.rank();
    let mut report = AnalysisReport {
        rank: n,
        order: g.order(),
        flag_count: g.order(),
        schlafli: g.schlafli().to_vec(),
        f_vector,
        c_group: verdict.is_c_group,
        is_flat: n >= 2 && flat_pairs.contains(&(0, n - 1)),
        flat_pairs,
        is_tight: is_tight(g),
        is_degenerate: is_degenerate(g),
        audit_violations: Vec::new(),
        witness: verdict.witness,
    };
    report.audit_violations = audit_counting_propositions(&report);
    Ok(report)
}

fn face_subgroup(n: usize, i: usize) -> Vec<usize> {
    (0..n).filter(|&j| j != i).collect()
}

/// Number of `i`-faces for every `i`: the index of `Γᵢ`, by coset enumeration.
pub fn f_vector(g: &StringGroup) -> Result<Vec<usize>, EnumerationError> {
    let n = g.rank();
    (0..n)
        .map(|i| g.group().subgroup_index(&generator_words(face_subgroup(n, i))))
        .collect()
}

/// Whether every `k`-face meets every `m`-face: the orbit of the base
/// `k`-face under the stabilizer of the base `m`-face is everything.
pub fn is_flat_km(g: &StringGroup, k: usize, m: usize) -> Result<bool, EnumerationError> {
    let n = g.rank();
    assert!(k < m && m < n, "need 0 <= k < m < rank");
    let table = g.parabolic_cosets(&face_subgroup(n, k))?;
    let gens = face_subgroup(n, m);
    let mut seen = vec![false; table.num_cosets()];
    seen[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let c = queue[i];
        i += 1;
        for &gen in &gens {
            let d = table.image(c, gen, false);
            if !seen[d] {
                seen[d] = true;
                queue.push(d);
            }
        }
    }
    Ok(queue.len() == table.num_cosets())
}

/// All flat pairs `(k, m)`, in lexicographic order.
pub fn flatness_spectrum(g: &StringGroup) -> Result<Vec<(usize, usize)>, EnumerationError> {
    let n = g.rank();
    let mut out = Vec::new();
    for k in 0..n {
        for m in k + 1..n {
            if is_flat_km(g, k, m)? {
                out.push((k, m));
            }
        }
    }
    Ok(out)
}

/// Flat pairs of the section `⟨ρ_lo, …, ρ_hi⟩`, indexed relative to `lo`, by
/// comparing `|Γ_m Γ_k|` with the section order inside the regular
/// representation of the whole group.
pub fn section_flat_pairs(g: &StringGroup, lo: usize, hi: usize) -> Vec<(usize, usize)> {
    assert!(lo <= hi && hi < g.rank());
    let gens = g.group().generators();
    let degree = g.order();
    let section: Vec<usize> = (lo..=hi).collect();
    let total = g.parabolic_order(&section);
    let stabilizer = |i: usize| -> Vec<Permutation> {
        section
            .iter()
            .filter(|&&j| j != lo + i)
            .map(|&j| gens[j].clone())
            .collect()
    };
    let r = hi - lo + 1;
    let mut out = Vec::new();
    for k in 0..r {
        for m in k + 1..r {
            if product_size_regular(&stabilizer(m), &stabilizer(k), degree) == total {
                out.push((k, m));
            }
        }
    }
    out
}

/// Flat pairs of the whole polytope through product sets; agrees with
/// [`flatness_spectrum`].
pub fn flat_pairs_via_products(g: &StringGroup) -> Vec<(usize, usize)> {
    section_flat_pairs(g, 0, g.rank() - 1)
}

/// Exactly `2·p₁⋯pₙ₋₁` flags.
pub fn is_tight(g: &StringGroup) -> bool {
    let bound = g.schlafli().iter().fold(2u128, |acc, &p| acc.saturating_mul(p as u128));
    g.order() as u128 == bound
}

/// Tightness read off the flatness spectrum: `(i, i+2)`-flat for every
/// `0 ≤ i ≤ n-3`.
pub fn is_tight_by_flatness(rank: usize, flat_pairs: &[(usize, usize)]) -> bool {
    (0..rank.saturating_sub(2)).all(|i| flat_pairs.contains(&(i, i + 2)))
}

/// Some entry of the Schläfli symbol is 2.
pub fn is_degenerate(g: &StringGroup) -> bool {
    g.schlafli().contains(&2)
}

/// Whether `ρᵢ ↦ ρᵢ` from the group presented by `q` onto `p` is well defined,
/// i.e. every relator of `q` holds in `p`.
pub fn canonical_covering_exists(q: &Presentation, p: &StringGroup) -> bool {
    q.kind() == p.presentation().kind()
        && q.num_generators() == p.rank()
        && q.relators().iter().all(|r| p.group().is_identity(r))
}

pub(crate) fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Checks the vertex, facet and flag lower bounds for non-flat polytopes and
/// the flatness forced by having few vertices. Returns nothing for groups
/// that are not string C-groups.
pub fn audit_counting_propositions(report: &AnalysisReport) -> Vec<AuditViolation> {
    let mut out = Vec::new();
    let n = report.rank;
    if !report.c_group || n < 2 {
        return out;
    }
    let p1 = report.schlafli[0] as usize;
    let pn = report.schlafli[n - 2] as usize;
    let vertices = report.vertices();
    let facets = report.facets();
    if !report.is_flat {
        if n >= 3 {
            if vertices < p1 + n - 2 {
                out.push(AuditViolation::new(
                    "nonflat-vertex-count",
                    format!("{vertices} vertices < p1 + n - 2 = {}", p1 + n - 2),
                ));
            }
            if facets < pn + n - 2 {
                out.push(AuditViolation::new(
                    "nonflat-facet-count",
                    format!("{facets} facets < p_(n-1) + n - 2 = {}", pn + n - 2),
                ));
            }
        }
        if vertices < n + 1 || facets < n + 1 {
            out.push(AuditViolation::new(
                "nonflat-face-minimum",
                format!(
                    "{vertices} vertices and {facets} facets, need at least {} of each",
                    n + 1
                ),
            ));
        }
        if let Some(simplex) = factorial(n + 1) {
            if (report.flag_count as u64) < simplex {
                out.push(AuditViolation::new(
                    "nonflat-flag-minimum",
                    format!("{} flags < (n+1)! = {simplex}", report.flag_count),
                ));
            }
        }
    }
    if n >= 3 && vertices + 3 <= p1 + n && vertices + 2 > p1 {
        let m = vertices + 2 - p1;
        if m < n && !report.is_flat_pair(0, m) {
            out.push(AuditViolation::new(
                "few-vertices-flatness",
                format!("{vertices} vertices <= p1 + n - 3 but not (0,{m})-flat"),
            ));
        }
    }
    if vertices <= n && vertices >= 2 {
        let m = vertices - 1;
        if !report.is_flat_pair(0, m) {
            out.push(AuditViolation::new(
                "at-most-rank-vertices-flatness",
                format!("{vertices} vertices <= n but not (0,{m})-flat"),
            ));
        }
    }
    out
}

/// Flags of the `which`-th smallest non-flat regular polytope of rank `n`
/// (`which` in 1..=4). The fourth smallest is only bounded below from rank 6.
pub fn min_nonflat_flags(n: usize, which: usize) -> Result<FlagCount, BoundError> {
    if n < 3 {
        return Err(BoundError::RankTooSmall(n));
    }
    let simplex = factorial(n + 1).ok_or(BoundError::Overflow(n))?;
    let scaled = |k: u64| simplex.checked_mul(k).ok_or(BoundError::Overflow(n));
    Ok(match (which, n) {
        (1, _) => FlagCount::Exact(simplex),
        (2, _) => FlagCount::Exact(scaled(2)?),
        (3, 3) => FlagCount::Exact(60),
        (3, 4) => FlagCount::Exact(384),
        (3, _) => FlagCount::Exact(scaled(4)?),
        (4, 3) => FlagCount::Exact(64),
        (4, 4) => FlagCount::Exact(480),
        (4, 5) => FlagCount::Exact(3840),
        (4, _) => FlagCount::AtLeast(scaled(16)? / 3),
        (w, _) => return Err(BoundError::InvalidPosition(w)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{finite_symbol, GeneratorWord};

    fn coxeter(ps: &[u32]) -> StringGroup {
        StringGroup::build(Presentation::coxeter(&finite_symbol(ps)), 100_000).unwrap()
    }

    #[test]
    fn simplex_report() {
        let r = analyze(&coxeter(&[3, 3, 3])).unwrap();
        assert_eq!(r.f_vector, vec![5, 10, 10, 5]);
        assert!(r.flat_pairs.is_empty());
        assert!(r.c_group && !r.is_flat && !r.is_tight && !r.is_degenerate);
        assert!(r.audit_violations.is_empty());
    }

    #[test]
    fn digon_is_flat_and_degenerate() {
        let g = coxeter(&[2]);
        let r = analyze(&g).unwrap();
        assert!(r.is_degenerate && r.is_flat);
        assert_eq!(r.flat_pairs, vec![(0, 1)]);
    }

    #[test]
    fn product_route_matches_coset_route() {
        for ps in [&[3, 3][..], &[4, 3], &[2, 5], &[3, 3, 3], &[2, 3, 2]] {
            let g = coxeter(ps);
            assert_eq!(flat_pairs_via_products(&g), flatness_spectrum(&g).unwrap(), "{ps:?}");
        }
    }

    #[test]
    fn tightness() {
        let g = coxeter(&[3, 3]);
        assert!(!is_tight(&g));
        // {4,4}_(2,0): 32 = 2·4·4 flags
        let mut p = Presentation::coxeter(&finite_symbol(&[4, 4]));
        p.add_relator(GeneratorWord::from_gens(&[0, 1, 2, 1]).pow(2));
        let g = StringGroup::build(p, 10_000).unwrap();
        assert_eq!(g.order(), 32);
        assert!(is_tight(&g));
        let r = analyze(&g).unwrap();
        assert!(is_tight_by_flatness(3, &r.flat_pairs));
    }

    #[test]
    fn covering() {
        let simplex = coxeter(&[3, 3]);
        assert!(canonical_covering_exists(simplex.presentation(), &simplex));
        let octahedron = coxeter(&[3, 4]);
        assert!(!canonical_covering_exists(simplex.presentation(), &octahedron));
    }

    #[test]
    fn smallest_nonflat_table() {
        let rows: [(usize, [u64; 4]); 3] = [
            (3, [24, 48, 60, 64]),
            (4, [120, 240, 384, 480]),
            (5, [720, 1440, 2880, 3840]),
        ];
        for (n, values) in rows {
            for (w, v) in values.iter().enumerate() {
                assert_eq!(min_nonflat_flags(n, w + 1).unwrap(), FlagCount::Exact(*v));
            }
        }
        assert_eq!(min_nonflat_flags(6, 4).unwrap(), FlagCount::AtLeast(26880));
        assert_eq!(min_nonflat_flags(6, 3).unwrap(), FlagCount::Exact(20160));
        assert_eq!(min_nonflat_flags(2, 1), Err(BoundError::RankTooSmall(2)));
        assert_eq!(min_nonflat_flags(4, 5), Err(BoundError::InvalidPosition(5)));
    }
}
