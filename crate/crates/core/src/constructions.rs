//! Standard families of regular and chiral polytopes, each built with an
//! order certificate.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::analysis::factorial;
use crate::chiral::{torus36_rotation, torus44_rotation, torus63_rotation, RotationGroup, RotationGroupError};
use crate::coset::EnumerationError;
use crate::presentation::{finite_symbol, parse_presentation, GeneratorWord, Kind, Presentation, SchlafliEntry};
use crate::stringc::{StringGroup, StringGroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    StringGroup(#[from] StringGroupError),
    #[error(transparent)]
    RotationGroup(#[from] RotationGroupError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("certificate mismatch for {what}: expected {expected}, computed {computed}")]
    CertificateMismatch {
        what: String,
        expected: String,
        computed: String,
    },
    #[error("amalgam collapsed: {part} has order {computed}, expected {expected}")]
    Collapse {
        part: String,
        expected: usize,
        computed: usize,
    },
    #[error("facets {facet:?} and vertex-figures {vertex_figure:?} do not share a middle section")]
    Incompatible { facet: Vec<u32>, vertex_figure: Vec<u32> },
    #[error("unknown named polytope {0:?}")]
    UnknownName(String),
}

/// An expected value and the value actually computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub what: String,
    pub expected: String,
    pub computed: String,
}

impl Certificate {
    fn new(what: &str, expected: impl ToString, computed: impl ToString) -> Self {
        Certificate {
            what: what.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }

    pub fn holds(&self) -> bool {
        self.expected == self.computed
    }

    fn check(self) -> Result<Self, ConstructionError> {
        if self.holds() {
            Ok(self)
        } else {
            Err(ConstructionError::CertificateMismatch {
                what: self.what,
                expected: self.expected,
                computed: self.computed,
            })
        }
    }
}

/// A regular polytope's group with the certificates it passed.
#[derive(Debug, Clone)]
pub struct Construction {
    pub group: StringGroup,
    pub certificates: Vec<Certificate>,
}

/// A chiral (or directly regular) polytope's rotation group with its
/// certificates.
#[derive(Debug, Clone)]
pub struct RotationConstruction {
    pub group: RotationGroup,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone)]
pub enum Built {
    Regular(Construction),
    Rotation(RotationConstruction),
}

impl Built {
    pub fn certificates(&self) -> &[Certificate] {
        match self {
            Built::Regular(c) => &c.certificates,
            Built::Rotation(c) => &c.certificates,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        match self {
            Built::Regular(c) => c.group.presentation(),
            Built::Rotation(c) => c.group.presentation(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusKind {
    Squares,
    Triangles,
    Hexagons,
}

impl TorusKind {
    pub fn symbol(self) -> [u32; 2] {
        match self {
            TorusKind::Squares => [4, 4],
            TorusKind::Triangles => [3, 6],
            TorusKind::Hexagons => [6, 3],
        }
    }

    /// Order of the full automorphism group of the regular map `(b, c)`.
    pub fn regular_order(self, b: u32, c: u32) -> u64 {
        let (b, c) = (b as u64, c as u64);
        match self {
            TorusKind::Squares => 8 * (b * b + c * c),
            TorusKind::Triangles | TorusKind::Hexagons => 12 * (b * b + b * c + c * c),
        }
    }
}

/// A polytope family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// The universal polytope of a Schläfli symbol.
    Coxeter {
        symbol: Vec<SchlafliEntry>,
    },
    /// The central extension of a Coxeter group with entries 3 and 6 only.
    Lambda {
        symbol: Vec<u32>,
    },
    Torus44 {
        b: u32,
        c: u32,
    },
    Torus36 {
        b: u32,
        c: u32,
    },
    Torus63 {
        b: u32,
        c: u32,
    },
    /// `[p, q]` with `(ρ₀ρ₁ρ₂)^k` added.
    Hemi {
        symbol: [u32; 2],
        k: u32,
    },
    /// The universal polytope with the given facets and vertex-figures.
    Amalgam {
        facet: Box<FamilySpec>,
        vertex_figure: Box<FamilySpec>,
    },
    Named {
        name: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_relators: Vec<GeneratorWord>,
}

impl Family {
    fn torus(&self) -> Option<(TorusKind, u32, u32)> {
        match *self {
            Family::Torus44 { b, c } => Some((TorusKind::Squares, b, c)),
            Family::Torus36 { b, c } => Some((TorusKind::Triangles, b, c)),
            Family::Torus63 { b, c } => Some((TorusKind::Hexagons, b, c)),
            _ => None,
        }
    }
}

impl From<Family> for FamilySpec {
    fn from(family: Family) -> Self {
        FamilySpec {
            family,
            extra_relators: Vec::new(),
        }
    }
}

impl FamilySpec {
    /// Builds the family member and checks its certificates. Extra relators
    /// give a quotient, for which only the C-group property is certified.
    pub fn build(&self, max_cosets: usize) -> Result<Built, ConstructionError> {
        if !self.extra_relators.is_empty() {
            let base = self.base_presentation(max_cosets)?;
            let mut pres = base;
            for r in &self.extra_relators {
                pres.add_relator(r.clone());
            }
            return match pres.kind() {
                Kind::Reflection => regular_with_c_group_check(pres, max_cosets).map(Built::Regular),
                Kind::Rotation => Ok(Built::Rotation(RotationConstruction {
                    group: RotationGroup::build(pres, max_cosets)?,
                    certificates: Vec::new(),
                })),
            };
        }
        match &self.family {
            Family::Coxeter { symbol } => coxeter(symbol, max_cosets).map(Built::Regular),
            Family::Lambda { symbol } => lambda(symbol, max_cosets).map(Built::Regular),
            Family::Torus44 { .. } | Family::Torus36 { .. } | Family::Torus63 { .. } => {
                let (kind, b, c) = self.family.torus().expect("torus family");
                if is_regular_torus(b, c) {
                    torus_map(kind, b, c, max_cosets).map(Built::Regular)
                } else {
                    torus_rotation(kind, b, c, max_cosets).map(Built::Rotation)
                }
            }
            Family::Hemi { symbol, k } => petrie_quotient(*symbol, *k, None, max_cosets).map(Built::Regular),
            Family::Amalgam { facet, vertex_figure } => {
                let k = expect_regular(facet.build(max_cosets)?)?;
                let l = expect_regular(vertex_figure.build(max_cosets)?)?;
                universal_amalgam(&k.group, &l.group, max_cosets).map(Built::Regular)
            }
            Family::Named { name } => named(name, max_cosets),
        }
    }

    fn base_presentation(&self, max_cosets: usize) -> Result<Presentation, ConstructionError> {
        let plain = FamilySpec::from(self.family.clone());
        match &self.family {
            Family::Coxeter { symbol } => Ok(Presentation::coxeter(symbol)),
            Family::Lambda { symbol } => {
                check_lambda_symbol(symbol)?;
                Ok(lambda_presentation(symbol))
            }
            Family::Hemi { symbol, k } => Ok(petrie_presentation(*symbol, *k)),
            Family::Torus44 { .. } | Family::Torus36 { .. } | Family::Torus63 { .. } => {
                let (kind, b, c) = self.family.torus().expect("torus family");
                check_torus(b, c)?;
                if is_regular_torus(b, c) {
                    Ok(torus_presentation(kind, b, c))
                } else {
                    Ok(torus_rotation_presentation(kind, b, c))
                }
            }
            Family::Named { name } => named_presentation(name)
                .map(|(p, _)| p)
                .ok_or_else(|| ConstructionError::UnknownName(name.clone())),
            Family::Amalgam { .. } => Ok(plain.build(max_cosets)?.presentation().clone()),
        }
    }
}

fn expect_regular(b: Built) -> Result<Construction, ConstructionError> {
    match b {
        Built::Regular(c) => Ok(c),
        Built::Rotation(_) => Err(ConstructionError::InvalidParameters(
            "amalgam parts must be regular".into(),
        )),
    }
}

fn regular_with_c_group_check(pres: Presentation, max_cosets: usize) -> Result<Construction, ConstructionError> {
    let group = StringGroup::build(pres, max_cosets)?;
    let verdict = group.is_string_c_group()?;
    let cert = Certificate::new("string C-group", true, verdict.is_c_group).check()?;
    Ok(Construction {
        group,
        certificates: vec![cert],
    })
}

/// The universal regular polytope `{p₁, …, pₙ₋₁}`; the certificate is that
/// the relators do not collapse the symbol.
pub fn coxeter(symbol: &[SchlafliEntry], max_cosets: usize) -> Result<Construction, ConstructionError> {
    let group = StringGroup::build(Presentation::coxeter(symbol), max_cosets)?;
    let declared: Vec<String> = symbol.iter().map(|e| e.to_string()).collect();
    let computed: Vec<String> = group.schlafli().iter().map(|p| p.to_string()).collect();
    let cert = Certificate::new("schlafli symbol", declared.join(","), computed.join(",")).check()?;
    Ok(Construction {
        group,
        certificates: vec![cert],
    })
}

fn check_lambda_symbol(symbol: &[u32]) -> Result<(), ConstructionError> {
    if symbol.is_empty() || symbol.iter().any(|&p| p != 3 && p != 6) {
        return Err(ConstructionError::InvalidParameters(format!(
            "entries must be 3 or 6 and at least one is needed, got {symbol:?}"
        )));
    }
    Ok(())
}

fn lambda_presentation(symbol: &[u32]) -> Presentation {
    let mut pres = Presentation::coxeter(&finite_symbol(symbol));
    for (i, &p) in symbol.iter().enumerate() {
        if p == 6 {
            pres.add_central(&GeneratorWord::from_gens(&[i, i + 1]).pow(3));
        }
    }
    pres.declare_schlafli(finite_symbol(symbol));
    pres
}

/// Expected order of the central extension for a symbol of 3s and 6s.
pub fn lambda_order(symbol: &[u32]) -> Option<u64> {
    let n = symbol.len() + 1;
    let sixes = symbol.iter().filter(|&&p| p == 6).count() as u32;
    factorial(n + 1)?.checked_mul(2u64.checked_pow(sixes)?)
}

/// The polytope whose group is the Coxeter group of `symbol` (entries 3 and
/// 6) with every `(ρᵢ₋₁ρᵢ)³` made central. Certificates: order
/// `(∏pᵢ / 3ⁿ⁻¹)(n+1)!`, the symbol, the C-group property and
/// `(n+1)p₁/3` vertices.
pub fn lambda(symbol: &[u32], max_cosets: usize) -> Result<Construction, ConstructionError> {
    check_lambda_symbol(symbol)?;
    let n = symbol.len() + 1;
    let group = StringGroup::build(lambda_presentation(symbol), max_cosets)?;
    let expected =
        lambda_order(symbol).ok_or_else(|| ConstructionError::InvalidParameters("order overflows".into()))?;
    let mut certs = vec![Certificate::new("order", expected, group.order()).check()?];
    certs.push(
        Certificate::new(
            "schlafli symbol",
            format!("{symbol:?}"),
            format!("{:?}", group.schlafli()),
        )
        .check()?,
    );
    let verdict = group.is_string_c_group()?;
    certs.push(Certificate::new("string C-group", true, verdict.is_c_group).check()?);
    let vertices = group.group().subgroup_index(&crate::group::generator_words(1..n))?;
    certs.push(Certificate::new("vertices", (n as u32 + 1) * symbol[0] / 3, vertices).check()?);
    Ok(Construction {
        group,
        certificates: certs,
    })
}

fn is_regular_torus(b: u32, c: u32) -> bool {
    b == 0 || c == 0 || b == c
}

fn torus_presentation(kind: TorusKind, b: u32, c: u32) -> Presentation {
    let (s, diagonal) = match (b, c) {
        (b, 0) | (0, b) => (b, false),
        (b, _) => (b, true),
    };
    let s = s as i64;
    let triangles = |diagonal: bool| {
        if diagonal {
            GeneratorWord::from_gens(&[0, 1, 2, 1, 2]).pow(2 * s)
        } else {
            GeneratorWord::from_gens(&[0, 1, 2]).pow(2 * s)
        }
    };
    let relator = match kind {
        TorusKind::Squares if diagonal => GeneratorWord::from_gens(&[0, 1, 2]).pow(2 * s),
        TorusKind::Squares => GeneratorWord::from_gens(&[0, 1, 2, 1]).pow(s),
        TorusKind::Triangles => triangles(diagonal),
        TorusKind::Hexagons => triangles(diagonal).relabel(|g| 2 - g),
    };
    Presentation::coxeter(&finite_symbol(&kind.symbol())).with_relator(relator)
}

fn check_torus(b: u32, c: u32) -> Result<(), ConstructionError> {
    if b == 0 && c == 0 {
        return Err(ConstructionError::InvalidParameters(
            "torus parameters must not both be zero".into(),
        ));
    }
    Ok(())
}

/// The regular torus map `{4,4}_(b,c)`, `{3,6}_(b,c)` or `{6,3}_(b,c)`
/// (`c = 0` or `b = c`), certified by its order `8(b²+c²)` or
/// `12(b²+bc+c²)`.
pub fn torus_map(kind: TorusKind, b: u32, c: u32, max_cosets: usize) -> Result<Construction, ConstructionError> {
    if !is_regular_torus(b, c) {
        return Err(ConstructionError::InvalidParameters(format!(
            "({b},{c}) gives a chiral map; build its rotation group instead"
        )));
    }
    check_torus(b, c)?;
    let group = StringGroup::build(torus_presentation(kind, b, c), max_cosets)?;
    let cert = Certificate::new("order", kind.regular_order(b, c), group.order()).check()?;
    Ok(Construction {
        group,
        certificates: vec![cert],
    })
}

fn torus_rotation_presentation(kind: TorusKind, b: u32, c: u32) -> Presentation {
    match kind {
        TorusKind::Squares => torus44_rotation(b, c),
        TorusKind::Triangles => torus36_rotation(b, c),
        TorusKind::Hexagons => torus63_rotation(b, c),
    }
}

/// Rotation group of any torus map, certified by its order (half the
/// regular count) and by chirality exactly when `bc(b-c) ≠ 0`.
pub fn torus_rotation(
    kind: TorusKind,
    b: u32,
    c: u32,
    max_cosets: usize,
) -> Result<RotationConstruction, ConstructionError> {
    check_torus(b, c)?;
    let group = RotationGroup::build(torus_rotation_presentation(kind, b, c), max_cosets)?;
    let certs = vec![
        Certificate::new("order", kind.regular_order(b, c) / 2, group.order()).check()?,
        Certificate::new("chiral", !is_regular_torus(b, c), group.is_chiral()).check()?,
    ];
    Ok(RotationConstruction {
        group,
        certificates: certs,
    })
}

fn petrie_presentation(symbol: [u32; 2], k: u32) -> Presentation {
    Presentation::coxeter(&finite_symbol(&symbol)).with_relator(GeneratorWord::from_gens(&[0, 1, 2]).pow(k as i64))
}

/// `[p, q]` with the Petrie relator `(ρ₀ρ₁ρ₂)^k`, optionally certified by
/// its order.
pub fn petrie_quotient(
    symbol: [u32; 2],
    k: u32,
    expected_order: Option<usize>,
    max_cosets: usize,
) -> Result<Construction, ConstructionError> {
    let mut c = regular_with_c_group_check(petrie_presentation(symbol, k), max_cosets)?;
    if let Some(order) = expected_order {
        c.certificates
            .push(Certificate::new("order", order, c.group.order()).check()?);
    }
    Ok(c)
}

/// The universal polytope `{K, L}`: relators of `K` on `ρ₀ … ρₙ₋₂`, those of
/// `L` shifted onto `ρ₁ … ρₙ₋₁`, and `ρ₀` commuting with `ρₙ₋₁`.
/// Fails when the facet or vertex-figure subgroup collapses.
pub fn universal_amalgam(
    k: &StringGroup,
    l: &StringGroup,
    max_cosets: usize,
) -> Result<Construction, ConstructionError> {
    let m = k.rank();
    if l.rank() != m || m < 2 {
        return Err(ConstructionError::InvalidParameters(
            "facets and vertex-figures need the same rank, at least 2".into(),
        ));
    }
    if k.schlafli()[1..] != l.schlafli()[..m - 2] {
        return Err(ConstructionError::Incompatible {
            facet: k.schlafli().to_vec(),
            vertex_figure: l.schlafli().to_vec(),
        });
    }
    let n = m + 1;
    let mut pres = Presentation::new(Kind::Reflection, n);
    for r in k.presentation().relators() {
        pres.add_relator(r.clone());
    }
    for r in l.presentation().relators() {
        pres.add_relator(r.relabel(|g| g + 1));
    }
    pres.add_relator(GeneratorWord::from_gens(&[0, n - 1]).pow(2));
    let mut symbol = k.schlafli().to_vec();
    symbol.push(*l.schlafli().last().expect("rank at least 2"));
    pres.declare_schlafli(finite_symbol(&symbol));
    let group = StringGroup::build(pres, max_cosets)?;
    let facet_order = group.parabolic_order(&(0..m).collect::<Vec<_>>());
    let vf_order = group.parabolic_order(&(1..n).collect::<Vec<_>>());
    for (part, expected, computed) in [
        ("facet", k.order(), facet_order),
        ("vertex-figure", l.order(), vf_order),
    ] {
        if expected != computed {
            return Err(ConstructionError::Collapse {
                part: part.into(),
                expected,
                computed,
            });
        }
    }
    let verdict = group.is_string_c_group()?;
    let certs = vec![
        Certificate::new("facet order", k.order(), facet_order),
        Certificate::new("vertex-figure order", l.order(), vf_order),
        Certificate::new("string C-group", true, verdict.is_c_group).check()?,
    ];
    Ok(Construction {
        group,
        certificates: certs,
    })
}

/// Checks that the central-extension polytope of `symbol` is the universal
/// amalgam of its own facets and vertex-figures.
pub fn simplex_amalgam_check(symbol: &[u32], max_cosets: usize) -> Result<bool, ConstructionError> {
    if symbol.len() < 3 {
        return Err(ConstructionError::InvalidParameters("need rank at least 4".into()));
    }
    let whole = lambda(symbol, max_cosets)?;
    let facet = lambda(&symbol[..symbol.len() - 1], max_cosets)?;
    let vertex_figure = lambda(&symbol[1..], max_cosets)?;
    let amalgam = universal_amalgam(&facet.group, &vertex_figure.group, max_cosets)?;
    Ok(amalgam.group.order() == whole.group.order())
}

const NAMED: &[(&str, &str, &str)] = &[
    (
        "hemi-icosahedron",
        "The icosahedron with antipodal points identified: 60 flags.",
        "rank 3\nschlafli 3 5\nrel (r0 r1 r2)^5\n",
    ),
    (
        "hemi-dodecahedron",
        "The dodecahedron with antipodal points identified: 60 flags.",
        "rank 3\nschlafli 5 3\nrel (r0 r1 r2)^5\n",
    ),
    (
        "hemi-cube",
        "The cube with antipodal points identified: 24 flags.",
        "rank 3\nschlafli 4 3\nrel (r0 r1 r2)^3\n",
    ),
    (
        "chiral-torus-1-2",
        "The chiral map {4,4}_(1,2): 40 flags.",
        "rank 3\nkind rotation\nschlafli 4 4\nrel s1- s2 (s1 s2-)^2\n",
    ),
    (
        "chiral-338",
        "A chiral polytope of type {3,3,8} with regular facets.",
        "rank 4\nkind rotation\nschlafli 3 3 8\nrel s3- s1 s3 s2- s1 s3- s3- s2\n",
    ),
    (
        "identified-mirrors",
        "An sggi of type {2,2} with the outer generators equal; not a C-group.",
        "rank 3\nschlafli 2 2\nrel r0 r2\n",
    ),
];

/// Names and one-line descriptions of the built-in polytopes.
pub fn named_list() -> impl Iterator<Item = (&'static str, &'static str)> {
    NAMED.iter().map(|&(name, about, _)| (name, about))
}

/// The presentation of a built-in polytope, and its description.
pub fn named_presentation(name: &str) -> Option<(Presentation, &'static str)> {
    NAMED
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|&(_, about, text)| (parse_presentation(text).expect("built-in presentations parse"), about))
}

fn named(name: &str, max_cosets: usize) -> Result<Built, ConstructionError> {
    let (pres, _) = named_presentation(name).ok_or_else(|| ConstructionError::UnknownName(name.into()))?;
    match pres.kind() {
        Kind::Reflection => {
            let group = StringGroup::build(pres, max_cosets)?;
            Ok(Built::Regular(Construction {
                group,
                certificates: Vec::new(),
            }))
        }
        Kind::Rotation => Ok(Built::Rotation(RotationConstruction {
            group: RotationGroup::build(pres, max_cosets)?,
            certificates: Vec::new(),
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MAX: usize = 200_000;

    #[test]
    fn lambda_orders() {
        assert_eq!(lambda_order(&[3, 3]), Some(24));
        assert_eq!(lambda_order(&[6, 3]), Some(48));
        assert_eq!(lambda_order(&[6, 6]), Some(96));
        let c = lambda(&[6, 3], MAX).unwrap();
        assert_eq!(c.group.order(), 48);
        assert!(c.certificates.iter().all(Certificate::holds));
        assert!(lambda(&[4, 3], MAX).is_err());
    }

    #[test]
    fn regular_tori() {
        for (kind, b, c) in [
            (TorusKind::Squares, 2, 0),
            (TorusKind::Squares, 3, 0),
            (TorusKind::Squares, 1, 1),
            (TorusKind::Squares, 2, 2),
            (TorusKind::Triangles, 1, 0),
            (TorusKind::Triangles, 2, 0),
            (TorusKind::Triangles, 1, 1),
            (TorusKind::Triangles, 2, 2),
            (TorusKind::Hexagons, 2, 0),
            (TorusKind::Hexagons, 1, 1),
            (TorusKind::Hexagons, 0, 2),
        ] {
            let m = torus_map(kind, b, c, MAX).unwrap();
            assert_eq!(m.group.order() as u64, kind.regular_order(b, c), "{kind:?} {b} {c}");
            assert_eq!(m.group.schlafli(), &kind.symbol());
        }
        assert!(torus_map(TorusKind::Squares, 1, 2, MAX).is_err());
    }

    #[test]
    fn chiral_tori() {
        for kind in [TorusKind::Squares, TorusKind::Triangles, TorusKind::Hexagons] {
            let r = torus_rotation(kind, 1, 2, MAX).unwrap();
            assert!(r.group.is_chiral());
            let r = torus_rotation(kind, 2, 0, MAX).unwrap();
            assert!(!r.group.is_chiral());
        }
    }

    #[test]
    fn amalgams() {
        let cube = coxeter(&finite_symbol(&[4, 3]), MAX).unwrap();
        let tet = coxeter(&finite_symbol(&[3, 3]), MAX).unwrap();
        let a = universal_amalgam(&cube.group, &tet.group, MAX).unwrap();
        assert_eq!(a.group.order(), 384);
        let hemi = petrie_quotient([4, 3], 3, Some(24), MAX).unwrap();
        let err = universal_amalgam(&cube.group, &hemi.group, MAX).unwrap_err();
        assert!(matches!(err, ConstructionError::Incompatible { .. }));
        assert!(simplex_amalgam_check(&[3, 3, 3], MAX).unwrap());
    }

    #[test]
    fn named_entries_parse_and_build() {
        for (name, _) in named_list() {
            assert!(named_presentation(name).is_some());
        }
        let b = named("hemi-icosahedron", MAX).unwrap();
        let Built::Regular(c) = b else { panic!() };
        assert_eq!(c.group.order(), 60);
        let Built::Rotation(r) = named("chiral-torus-1-2", MAX).unwrap() else {
            panic!()
        };
        assert_eq!(r.group.flags(), 40);
    }

    #[test]
    fn spec_round_trip() {
        let spec = FamilySpec {
            family: Family::Torus44 { b: 2, c: 0 },
            extra_relators: vec![],
        };
        let Built::Regular(c) = spec.build(MAX).unwrap() else {
            panic!()
        };
        assert_eq!(c.group.order(), 32);
        let quotient = FamilySpec {
            family: Family::Coxeter {
                symbol: finite_symbol(&[3, 5]),
            },
            extra_relators: vec![GeneratorWord::from_gens(&[0, 1, 2]).pow(5)],
        };
        let Built::Regular(c) = quotient.build(MAX).unwrap() else {
            panic!()
        };
        assert_eq!(c.group.order(), 60);
    }
}
