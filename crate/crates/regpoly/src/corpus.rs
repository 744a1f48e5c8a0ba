//! The built-in corpus: presentation files with expected-value sidecars.

use serde::{Deserialize, Serialize};

use regpoly_core::presentation::{parse_presentation, ParseError};
use regpoly_core::{Presentation, SectionKind};

macro_rules! corpus_files {
    ($($name:literal),* $(,)?) => {
        &[$(
            (
                $name,
                include_str!(concat!("../corpus/", $name, ".pres")),
                include_str!(concat!("../corpus/", $name, ".json")),
            ),
        )*]
    };
}

static FILES: &[(&str, &str, &str)] = corpus_files![
    "tetrahedron",
    "octahedron",
    "cube",
    "icosahedron",
    "hemi-icosahedron",
    "hemi-cube",
    "torus-4-4-2-0",
    "torus-4-4-2-2",
    "torus-3-6-1-1",
    "torus-3-6-2-0",
    "torus-6-3-2-0",
    "lambda-6-3",
    "lambda-6-3-3",
    "lambda-3-6-3",
    "lambda-6-6-3",
    "simplex-4",
    "tesseract",
    "24-cell",
    "amalgam-4-3-6",
    "simplex-5",
    "lambda-6-3-3-3",
    "lambda-6-6-3-3",
    "penteract",
    "lambda-6-6-6-6",
    "hexagon",
    "hosohedron",
    "identified-mirrors",
    "chiral-torus-4-4-1-2",
    "chiral-torus-3-6-1-2",
    "chiral-3-3-8",
    "chiral-4-4-3",
    "chiral-4-4-4",
    "chiral-3-4-4-3",
    "rotation-tetrahedron",
    "rotation-torus-4-4-2-0",
];

/// Position of a witness in the table of smallest non-flat regular
/// polytopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table2Cell {
    pub rank: usize,
    pub position: usize,
}

/// Column of a witness in the table of smallest chiral polytopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table3Cell {
    pub rank: usize,
    pub facet: SectionKind,
    pub vertex_figure: SectionKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedWitness {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
}

/// Known values for a corpus entry. Absent fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub description: String,
    pub order: Option<usize>,
    pub flags: Option<usize>,
    pub schlafli: Option<Vec<u32>>,
    pub f_vector: Option<Vec<usize>>,
    pub vertices: Option<usize>,
    pub facets: Option<usize>,
    pub c_group: Option<bool>,
    pub witness: Option<ExpectedWitness>,
    pub is_flat: Option<bool>,
    pub flat_pairs: Option<Vec<(usize, usize)>>,
    pub is_tight: Option<bool>,
    pub is_chiral: Option<bool>,
    pub facet_kind: Option<SectionKind>,
    pub vertex_figure_kind: Option<SectionKind>,
    pub table2: Option<Table2Cell>,
    pub table3: Option<Table3Cell>,
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: &'static str,
    pub text: &'static str,
    pub expected: Expected,
}

impl Entry {
    pub fn presentation(&self) -> Result<Presentation, ParseError> {
        parse_presentation(self.text)
    }
}

/// All corpus entries, in a fixed order.
pub fn entries() -> Vec<Entry> {
    FILES
        .iter()
        .map(|&(name, text, json)| Entry {
            name,
            text,
            expected: serde_json::from_str(json)
                .unwrap_or_else(|e| panic!("corpus sidecar {name}.json is malformed: {e}")),
        })
        .collect()
}

pub fn find(name: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.name == name)
}

/// Names of the files the corpus was built from, for completeness checks.
pub fn file_names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|&(name, _, _)| name)
}
