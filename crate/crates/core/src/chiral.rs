//! Rotation groups of chiral and directly regular polytopes.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::analysis::{factorial, section_flat_pairs, AuditViolation, BoundError};
use crate::coset::EnumerationError;
use crate::group::FiniteGroup;
use crate::perm::{product_size_regular, Permutation, StabilizerChain};
use crate::presentation::{finite_symbol, GeneratorWord, Kind, Letter, Presentation, SchlafliEntry};
use crate::stringc::StringGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RotationGroupError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("expected a rotation presentation")]
    NotRotation,
    #[error("rank must be at least 2")]
    RankTooSmall,
    #[error("(s{first} ... s{last})^2 does not hold")]
    RelatorShape { first: usize, last: usize },
    #[error("s{index} has order {computed} but the declared symbol says {declared}")]
    SchlafliMismatch {
        index: usize,
        declared: SchlafliEntry,
        computed: u32,
    },
    #[error("rotation groups of different rank")]
    RankMismatch,
}

/// `⟨σ₁, …, σₙ₋₁⟩` given by a rotation presentation and realised by its
/// regular representation. Generator `i` (0-based) is `σᵢ₊₁`.
#[derive(Debug, Clone)]
pub struct RotationGroup {
    group: FiniteGroup,
    rank: usize,
    schlafli: Vec<u32>,
}

impl RotationGroup {
    pub fn build(pres: Presentation, max_cosets: usize) -> Result<Self, RotationGroupError> {
        if pres.kind() != Kind::Rotation {
            return Err(RotationGroupError::NotRotation);
        }
        let rank = pres.rank();
        if rank < 2 {
            return Err(RotationGroupError::RankTooSmall);
        }
        let group = FiniteGroup::build(pres, max_cosets)?;
        let m = rank - 1;
        for i in 0..m {
            for j in i + 1..m {
                let run: Vec<usize> = (i..=j).collect();
                if !group.is_identity(&GeneratorWord::from_gens(&run).pow(2)) {
                    return Err(RotationGroupError::RelatorShape {
                        first: i + 1,
                        last: j + 1,
                    });
                }
            }
        }
        let schlafli: Vec<u32> = (0..m)
            .map(|i| group.element_order(&GeneratorWord::generator(i)) as u32)
            .collect();
        if let Some(declared) = group.presentation().declared_schlafli() {
            for (i, (&d, &c)) in declared.iter().zip(&schlafli).enumerate() {
                if d.finite() != Some(c) {
                    return Err(RotationGroupError::SchlafliMismatch {
                        index: i + 1,
                        declared: d,
                        computed: c,
                    });
                }
            }
        }
        Ok(RotationGroup { group, rank, schlafli })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Flags of the polytope: twice the order, since the rotation group has
    /// at most two flag orbits.
    pub fn flags(&self) -> usize {
        2 * self.order()
    }

    pub fn schlafli(&self) -> &[u32] {
        &self.schlafli
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn presentation(&self) -> &Presentation {
        self.group.presentation()
    }

    /// Whether the mirror substitution `σ₁ ↦ σ₁⁻¹, σ₂ ↦ σ₁²σ₂` extends to an
    /// automorphism. If it does not, the polytope is chiral.
    pub fn is_chiral(&self) -> bool {
        let images = mirror_images(self.rank - 1);
        let well_defined = self
            .presentation()
            .relators()
            .iter()
            .all(|r| self.group.is_identity(&r.substitute(&images)));
        !(well_defined && self.generated_by(&images))
    }

    /// Chirality by a second route: the pairs `(σᵢ, mirror(σᵢ))` generate the
    /// graph of an automorphism exactly when the polytope is regular.
    pub fn is_chiral_by_graph(&self) -> bool {
        let gens: Vec<usize> = (0..self.rank - 1).collect();
        !section_is_regular(&self.group, &gens)
    }

    fn generated_by(&self, words: &[GeneratorWord]) -> bool {
        let perms: Vec<Permutation> = words.iter().map(|w| self.group.word_to_perm(w)).collect();
        product_size_regular(&perms, &[], self.order()) == self.order()
    }

    /// The mirror image: every relator rewritten by the mirror substitution.
    pub fn enantiomorph(&self) -> RotationGroup {
        let images = mirror_images(self.rank - 1);
        let symbol = self.presentation().declared_schlafli().map(|s| s.to_vec());
        let pres = self.presentation().map_relators(symbol, |r| r.substitute(&images));
        RotationGroup::build(pres, self.group.max_cosets()).expect("mirror image of a valid group")
    }

    /// Vertices and facets: indices of `⟨σ₂, …, σₙ₋₁⟩` and `⟨σ₁, …, σₙ₋₂⟩`.
    pub fn chiral_counts(&self) -> Result<(usize, usize), EnumerationError> {
        let n = self.rank;
        let v = self.group.subgroup_index(&face_stabilizer(n, 0))?;
        let f = self.group.subgroup_index(&face_stabilizer(n, n - 1))?;
        Ok((v, f))
    }

    /// Number of faces of each rank.
    pub fn f_vector(&self) -> Result<Vec<usize>, EnumerationError> {
        (0..self.rank)
            .map(|j| self.group.subgroup_index(&face_stabilizer(self.rank, j)))
            .collect()
    }

    /// Flat pairs `(k, m)` of the polytope.
    pub fn flat_pairs(&self) -> Vec<(usize, usize)> {
        let gens: Vec<usize> = (0..self.rank - 1).collect();
        rotation_section_flat_pairs(&self.group, &gens)
    }

    /// Facts about the section whose rotation group is generated by
    /// `σ_{first+1}, …, σ_{last+1}` (0-based generator indices).
    pub fn section_facts(&self, first: usize, last: usize) -> SectionFacts {
        assert!(first <= last && last + 1 < self.rank);
        let gens: Vec<usize> = (first..=last).collect();
        let perms: Vec<Permutation> = gens.iter().map(|&g| self.group.generators()[g].clone()).collect();
        let order = product_size_regular(&perms, &[], self.order());
        let schlafli: Vec<u32> = gens.iter().map(|&g| self.schlafli[g]).collect();
        let flags = 2 * order;
        SectionFacts {
            rank: gens.len() + 1,
            flags,
            tight: is_tight_count(flags, &schlafli),
            schlafli,
            chiral: !section_is_regular(&self.group, &gens),
            flat_pairs: rotation_section_flat_pairs(&self.group, &gens),
        }
    }

    pub fn facet_facts(&self) -> SectionFacts {
        self.section_facts(0, self.rank - 3)
    }

    pub fn vertex_figure_facts(&self) -> SectionFacts {
        self.section_facts(1, self.rank - 2)
    }

    /// The section between a vertex and a facet, for rank at least 4.
    pub fn medial_facts(&self) -> Option<SectionFacts> {
        (self.rank >= 4).then(|| self.section_facts(1, self.rank - 3))
    }

    /// Advisory polytopality check: `⟨σ₁..σₙ₋₂⟩ ∩ ⟨σ₂..σₙ₋₁⟩ = ⟨σ₂..σₙ₋₂⟩`.
    pub fn advisory_intersection(&self) -> Result<bool, EnumerationError> {
        let n = self.rank;
        if n < 3 {
            return Ok(true);
        }
        let facet = face_stabilizer(n, n - 1);
        let vertex = face_stabilizer(n, 0);
        let meet = self.group.intersection_order(&facet, &vertex)?;
        let middle: Vec<usize> = (1..n - 2).collect();
        Ok(meet == self.group.generator_subgroup_order(&middle))
    }

    /// Flags of the mixed regular cover: twice the order of the mix with the
    /// enantiomorph.
    pub fn mixed_regular_cover_flags(&self) -> usize {
        2 * mix_order(self, &self.enantiomorph()).expect("same rank")
    }
}

/// Images of the mirror substitution on `m` rotation generators.
pub fn mirror_images(m: usize) -> Vec<GeneratorWord> {
    (0..m)
        .map(|i| match i {
            0 => GeneratorWord::generator(0).inverse(),
            1 => GeneratorWord::from_gens(&[0, 0, 1]),
            _ => GeneratorWord::generator(i),
        })
        .collect()
}

/// Generators of the stabilizer of the base `j`-face in `Γ⁺` of an
/// `n`-polytope: `σ₁, …, σⱼ₋₁, σⱼσⱼ₊₁, σⱼ₊₂, …, σₙ₋₁`, with the product term
/// absent for vertices and facets.
pub fn face_stabilizer(n: usize, j: usize) -> Vec<GeneratorWord> {
    assert!(j < n);
    let m = n - 1;
    let mut out = Vec::new();
    if j == 0 {
        out.extend((1..m).map(GeneratorWord::generator));
        return out;
    }
    out.extend((0..j - 1).map(GeneratorWord::generator));
    if j < m {
        out.push(GeneratorWord::from_gens(&[j - 1, j]));
    }
    out.extend((j + 1..m).map(GeneratorWord::generator));
    out
}

fn shift_words(words: Vec<GeneratorWord>, by: usize) -> Vec<GeneratorWord> {
    words.into_iter().map(|w| w.relabel(|g| g + by)).collect()
}

fn rotation_section_flat_pairs(group: &FiniteGroup, gens: &[usize]) -> Vec<(usize, usize)> {
    let first = gens[0];
    let r = gens.len() + 1;
    let perms_of = |words: Vec<GeneratorWord>| -> Vec<Permutation> {
        shift_words(words, first)
            .iter()
            .map(|w| group.word_to_perm(w))
            .collect()
    };
    let all: Vec<Permutation> = gens.iter().map(|&g| group.generators()[g].clone()).collect();
    let total = product_size_regular(&all, &[], group.order());
    let stabilizers: Vec<Vec<Permutation>> = (0..r).map(|j| perms_of(face_stabilizer(r, j))).collect();
    let mut out = Vec::new();
    for k in 0..r {
        for m in k + 1..r {
            if product_size_regular(&stabilizers[m], &stabilizers[k], group.order()) == total {
                out.push((k, m));
            }
        }
    }
    out
}

/// Whether the mirror substitution on the section generated by `gens`
/// (consecutive rotation generators) is an automorphism of that section,
/// decided by the graph subgroup in the product of two regular copies.
fn section_is_regular(group: &FiniteGroup, gens: &[usize]) -> bool {
    let first = gens[0];
    let degree = group.order();
    let originals: Vec<Permutation> = gens.iter().map(|&g| group.generators()[g].clone()).collect();
    let mirrors: Vec<Permutation> = shift_words(mirror_images(gens.len()), first)
        .iter()
        .map(|w| group.word_to_perm(w))
        .collect();
    let section_order = product_size_regular(&originals, &[], degree);
    if product_size_regular(&mirrors, &[], degree) != section_order {
        return false;
    }
    let paired: Vec<Permutation> = originals.iter().zip(&mirrors).map(|(a, b)| juxtapose(a, b)).collect();
    let chain = StabilizerChain::with_known_base(&paired, 2 * degree, &[0, degree as u32]).expect("degrees agree");
    chain.order() as usize == section_order
}

fn juxtapose(a: &Permutation, b: &Permutation) -> Permutation {
    let shift = a.degree() as u32;
    let images = a
        .images()
        .iter()
        .copied()
        .chain(b.images().iter().map(|&x| x + shift))
        .collect();
    Permutation::from_images_unchecked(images)
}

/// Order of the mix `⟨(σᵢ(G), σᵢ(H))⟩ ≤ G × H`.
pub fn mix_order(g: &RotationGroup, h: &RotationGroup) -> Result<usize, RotationGroupError> {
    if g.rank() != h.rank() {
        return Err(RotationGroupError::RankMismatch);
    }
    let gens: Vec<Permutation> = g
        .group
        .generators()
        .iter()
        .zip(h.group.generators())
        .map(|(a, b)| juxtapose(a, b))
        .collect();
    let degree = g.order() + h.order();
    let chain = StabilizerChain::with_known_base(&gens, degree, &[0, g.order() as u32]).expect("degrees agree");
    Ok(chain.order() as usize)
}

fn is_tight_count(flags: usize, schlafli: &[u32]) -> bool {
    let bound = schlafli.iter().fold(2u128, |acc, &p| acc.saturating_mul(p as u128));
    flags as u128 == bound
}

/// What the structure audit needs to know about a facet, vertex-figure or
/// medial section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionFacts {
    pub rank: usize,
    pub flags: usize,
    pub schlafli: Vec<u32>,
    pub chiral: bool,
    pub flat_pairs: Vec<(usize, usize)>,
    pub tight: bool,
}

impl SectionFacts {
    /// Facts for the section `⟨ρ_lo, …, ρ_hi⟩` of a regular polytope.
    pub fn of_regular_section(g: &StringGroup, lo: usize, hi: usize) -> Self {
        let gens: Vec<usize> = (lo..=hi).collect();
        let flags = g.parabolic_order(&gens);
        let schlafli = g.schlafli()[lo..hi].to_vec();
        SectionFacts {
            rank: gens.len(),
            flags,
            tight: is_tight_count(flags, &schlafli),
            schlafli,
            chiral: false,
            flat_pairs: section_flat_pairs(g, lo, hi),
        }
    }

    pub fn is_flat(&self) -> bool {
        self.rank >= 2 && self.flat_pairs.contains(&(0, self.rank - 1))
    }

    fn flat(&self, k: usize, m: usize) -> bool {
        self.flat_pairs.contains(&(k, m))
    }
}

/// Facts describing a polytope claimed to be chiral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFacts {
    pub rank: usize,
    pub facet: SectionFacts,
    pub vertex_figure: SectionFacts,
    pub medial: Option<SectionFacts>,
    pub flat_pairs: Vec<(usize, usize)>,
    pub tight: bool,
}

impl StructureFacts {
    pub fn of(g: &RotationGroup) -> Self {
        let flags = g.flags();
        StructureFacts {
            rank: g.rank(),
            facet: g.facet_facts(),
            vertex_figure: g.vertex_figure_facts(),
            medial: if g.rank() == 5 { g.medial_facts() } else { None },
            flat_pairs: g.flat_pairs(),
            tight: is_tight_count(flags, g.schlafli()),
        }
    }
}

/// Checks the structural restrictions every chiral polytope obeys: no flat
/// regular facets with regular vertex-figures, no regular `(1, n-1)`-flat
/// facets (nor dually `(0, n-2)`-flat vertex-figures), no `(1, n-3)`- or
/// `(2, n-2)`-flatness, and the limits on tight chiral polytopes.
pub fn structure_constraint_audit(facts: &StructureFacts) -> Vec<AuditViolation> {
    let mut out = Vec::new();
    let n = facts.rank;
    let facet = &facts.facet;
    let vf = &facts.vertex_figure;
    if !facet.chiral && !vf.chiral && (facet.is_flat() || vf.is_flat()) {
        out.push(AuditViolation::new(
            "flat-regular-sections",
            format!(
                "regular facets and vertex-figures with a flat {}",
                if facet.is_flat() { "facet" } else { "vertex-figure" }
            ),
        ));
    }
    if !facet.chiral && facet.rank >= 3 && facet.flat(1, facet.rank - 1) {
        out.push(AuditViolation::new(
            "forbidden-facet",
            format!("regular facet is (1,{})-flat", facet.rank - 1),
        ));
    }
    if !vf.chiral && vf.rank >= 3 && vf.flat(0, vf.rank - 2) {
        out.push(AuditViolation::new(
            "forbidden-vertex-figure",
            format!("regular vertex-figure is (0,{})-flat", vf.rank - 2),
        ));
    }
    if n >= 5 {
        for (k, m) in [(1, n - 3), (2, n - 2)] {
            if facts.flat_pairs.contains(&(k, m)) {
                out.push(AuditViolation::new(
                    "chiral-flatness",
                    format!("polytope is ({k},{m})-flat"),
                ));
            }
        }
    }
    if facts.tight {
        if n >= 6 {
            out.push(AuditViolation::new(
                "tight-high-rank",
                format!("tight chiral polytope of rank {n}"),
            ));
        }
        if n == 4 && !facet.chiral && !vf.chiral {
            out.push(AuditViolation::new(
                "tight-rank-4",
                "tight with regular facets and vertex-figures".into(),
            ));
        }
        let medial_regular = facts.medial.as_ref().is_some_and(|m| !m.chiral);
        if n == 5 && (!facet.chiral || !vf.chiral || medial_regular) {
            out.push(AuditViolation::new(
                "tight-rank-5",
                "tight with a regular facet, vertex-figure or medial section".into(),
            ));
        }
    }
    out
}

/// Regular or chiral, for facets and vertex-figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectionKind {
    Regular,
    Chiral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundQuery {
    pub rank: usize,
    pub facet: SectionKind,
    pub vertex_figure: SectionKind,
}

/// Known information on the fewest flags of a chiral polytope of a given
/// rank and section kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiralBound {
    Exact(u64),
    AtLeast(u64),
    Between { lower: u64, upper: u64 },
    NoneExist,
}

impl ChiralBound {
    /// The lower bound on flags, if such polytopes exist.
    pub fn lower(self) -> Option<u64> {
        match self {
            ChiralBound::Exact(v) | ChiralBound::AtLeast(v) => Some(v),
            ChiralBound::Between { lower, .. } => Some(lower),
            ChiralBound::NoneExist => None,
        }
    }

    pub fn admits(self, flags: u64) -> bool {
        self.lower().is_some_and(|l| flags >= l)
    }
}

pub fn bound_rr(n: usize) -> Option<u64> {
    factorial(n)?.checked_mul(16 * n as u64).map(|v| v / 3)
}

pub fn bound_cr(n: usize) -> Option<u64> {
    factorial(n - 1)?.checked_mul(16 * (n as u64 - 1))
}

pub fn bound_cc(n: usize) -> Option<u64> {
    factorial(n - 2)?.checked_mul(48 * (n as u64 - 2))
}

/// Fewest flags of a chiral polytope with the given rank and section kinds.
/// Regular facets with chiral vertex-figures are the dual case of chiral
/// facets with regular vertex-figures.
pub fn chiral_lower_bound(q: BoundQuery) -> Result<ChiralBound, BoundError> {
    use ChiralBound::*;
    use SectionKind::*;
    let n = q.rank;
    if n < 3 {
        return Err(BoundError::RankTooSmall(n));
    }
    let formula = |v: Option<u64>| v.map(AtLeast).ok_or(BoundError::Overflow(n));
    match (q.facet, q.vertex_figure) {
        (Regular, Regular) => match n {
            3 => Ok(Exact(40)),
            4 => Ok(Exact(384)),
            5 => Ok(AtLeast(4004)),
            _ => formula(bound_rr(n)),
        },
        (Chiral, Regular) | (Regular, Chiral) => match n {
            3 => Ok(NoneExist),
            4 => Ok(Exact(240)),
            5 => Ok(Between {
                lower: 4004,
                upper: 4608,
            }),
            6 => Ok(AtLeast(18432)),
            _ => formula(bound_cr(n)),
        },
        (Chiral, Chiral) => match n {
            3 => Ok(NoneExist),
            4 => Ok(Exact(240)),
            5 => Ok(Exact(1440)),
            6 => Ok(Exact(18432)),
            7 => Ok(AtLeast(55296)),
            _ => formula(bound_cc(n)),
        },
    }
}

/// Chirality checks and counts for a rotation group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralReport {
    pub rank: usize,
    pub order: usize,
    pub flags: usize,
    pub schlafli: Vec<u32>,
    pub is_chiral: bool,
    pub vertices: usize,
    pub facets: usize,
    pub f_vector: Vec<usize>,
    pub flat_pairs: Vec<(usize, usize)>,
    pub mixed_cover_flags: usize,
    pub advisory_intersection: bool,
    pub bound_check: Option<BoundCheck>,
    pub audit_violations: Vec<AuditViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub query: BoundQuery,
    pub bound: ChiralBound,
    pub satisfied: bool,
}

pub fn analyze_rotation(g: &RotationGroup) -> Result<ChiralReport, EnumerationError> {
    let n = g.rank();
    let is_chiral = g.is_chiral();
    let f_vector = g.f_vector()?;
    let (vertices, facets) = (f_vector[0], f_vector[n - 1]);
    let mut audit = Vec::new();
    let mut bound_check = None;
    if is_chiral && n >= 3 {
        let facts = StructureFacts::of(g);
        audit.extend(structure_constraint_audit(&facts));
        if vertices < 3 || facets < 3 {
            audit.push(AuditViolation::new(
                "chiral-face-minimum",
                format!("{vertices} vertices and {facets} facets, need at least 3 of each"),
            ));
        }
        let kind = |s: &SectionFacts| {
            if s.chiral {
                SectionKind::Chiral
            } else {
                SectionKind::Regular
            }
        };
        let query = BoundQuery {
            rank: n,
            facet: kind(&facts.facet),
            vertex_figure: kind(&facts.vertex_figure),
        };
        if let Ok(bound) = chiral_lower_bound(query) {
            let satisfied = bound.admits(g.flags() as u64);
            if !satisfied {
                audit.push(AuditViolation::new(
                    "chiral-flag-bound",
                    format!("{} flags below the bound {:?}", g.flags(), bound),
                ));
            }
            bound_check = Some(BoundCheck {
                query,
                bound,
                satisfied,
            });
        }
    }
    Ok(ChiralReport {
        rank: n,
        order: g.order(),
        flags: g.flags(),
        schlafli: g.schlafli().to_vec(),
        is_chiral,
        vertices,
        facets,
        flat_pairs: g.flat_pairs(),
        f_vector,
        mixed_cover_flags: g.mixed_regular_cover_flags(),
        advisory_intersection: g.advisory_intersection()?,
        bound_check,
        audit_violations: audit,
    })
}

fn letters(spec: &[(usize, bool)]) -> GeneratorWord {
    GeneratorWord::from_letters(
        spec.iter()
            .map(|&(g, inv)| if inv { Letter::neg(g) } else { Letter::pos(g) })
            .collect(),
    )
}

fn translation_relator(x: GeneratorWord, y: GeneratorWord, b: u32, c: u32) -> GeneratorWord {
    x.pow(b as i64).mul(&y.pow(c as i64))
}

/// Rotation group of the torus map `{4,4}_(b,c)`: translations `σ₁⁻¹σ₂` and
/// `σ₁σ₂⁻¹`.
pub fn torus44_rotation(b: u32, c: u32) -> Presentation {
    let mut p = Presentation::rotation(&finite_symbol(&[4, 4]));
    let x = letters(&[(0, true), (1, false)]);
    let y = letters(&[(0, false), (1, true)]);
    p.add_relator(translation_relator(x, y, b, c));
    p
}

/// Rotation group of the torus map `{3,6}_(b,c)`: translations `σ₁⁻¹σ₂²` and
/// `σ₁σ₂⁻²`.
pub fn torus36_rotation(b: u32, c: u32) -> Presentation {
    let mut p = Presentation::rotation(&finite_symbol(&[3, 6]));
    let x = letters(&[(0, true), (1, false), (1, false)]);
    let y = letters(&[(0, false), (1, true), (1, true)]);
    p.add_relator(translation_relator(x, y, b, c));
    p
}

/// Rotation group of the torus map `{6,3}_(b,c)`, the dual of `{3,6}_(b,c)`.
pub fn torus63_rotation(b: u32, c: u32) -> Presentation {
    let dual = [letters(&[(1, true)]), letters(&[(0, true)])];
    torus36_rotation(b, c).map_relators(Some(finite_symbol(&[6, 3])), |r| r.substitute(&dual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rot(p: Presentation) -> RotationGroup {
        RotationGroup::build(p, 100_000).unwrap()
    }

    #[test]
    fn face_stabilizers() {
        assert_eq!(
            face_stabilizer(4, 0),
            vec![GeneratorWord::generator(1), GeneratorWord::generator(2)]
        );
        assert_eq!(
            face_stabilizer(4, 3),
            vec![GeneratorWord::generator(0), GeneratorWord::generator(1)]
        );
        assert_eq!(
            face_stabilizer(4, 1),
            vec![GeneratorWord::from_gens(&[0, 1]), GeneratorWord::generator(2)]
        );
        assert_eq!(
            face_stabilizer(4, 2),
            vec![GeneratorWord::generator(0), GeneratorWord::from_gens(&[1, 2])]
        );
    }

    #[test]
    fn mirror_substitution_is_an_involution_on_words() {
        let images = mirror_images(3);
        for g in 0..3 {
            let w = GeneratorWord::generator(g);
            assert_eq!(w.substitute(&images).substitute(&images), w);
        }
    }

    #[test]
    fn tetrahedron_rotations_are_regular() {
        let g = rot(Presentation::rotation(&finite_symbol(&[3, 3])));
        assert_eq!(g.order(), 12);
        assert!(!g.is_chiral());
        assert!(!g.is_chiral_by_graph());
        assert_eq!(g.chiral_counts().unwrap(), (4, 4));
        assert_eq!(g.mixed_regular_cover_flags(), 24);
    }

    #[test]
    fn chiral_torus() {
        let g = rot(torus44_rotation(1, 2));
        assert_eq!(g.order(), 20);
        assert!(g.is_chiral());
        assert!(g.is_chiral_by_graph());
        assert_eq!(g.chiral_counts().unwrap(), (5, 5));
        let e = g.enantiomorph();
        assert_eq!(e.order(), 20);
        assert!(e.is_chiral());
        assert_eq!(mix_order(&g, &e).unwrap(), 100);
        assert_eq!(mix_order(&g, &g).unwrap(), 20);
    }

    #[test]
    fn bounds() {
        use SectionKind::*;
        let q = |rank, facet, vertex_figure| {
            chiral_lower_bound(BoundQuery {
                rank,
                facet,
                vertex_figure,
            })
            .unwrap()
        };
        assert_eq!(q(8, Chiral, Chiral), ChiralBound::AtLeast(207360));
        assert_eq!(q(5, Regular, Regular), ChiralBound::AtLeast(4004));
        assert_eq!(q(7, Regular, Regular), ChiralBound::AtLeast(188160));
        assert_eq!(q(3, Chiral, Regular), ChiralBound::NoneExist);
        assert!(chiral_lower_bound(BoundQuery {
            rank: 2,
            facet: Regular,
            vertex_figure: Regular
        })
        .is_err());
    }

    #[test]
    fn audit_flags_tight_high_rank() {
        let section = |rank: usize| SectionFacts {
            rank,
            flags: 0,
            schlafli: vec![],
            chiral: true,
            flat_pairs: vec![],
            tight: false,
        };
        let facts = StructureFacts {
            rank: 6,
            facet: section(5),
            vertex_figure: section(5),
            medial: None,
            flat_pairs: vec![],
            tight: true,
        };
        let v = structure_constraint_audit(&facts);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "tight-high-rank");
    }
}
