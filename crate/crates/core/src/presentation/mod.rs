//! Words, group presentations and the line-oriented presentation text format.
//!
//! ```text
//! # comment
//! rank 4
//! kind reflection
//! schlafli 6 3 3
//! central (r0 r1)^3
//! rel [r0 r1, r2]
//! ```
//!
//! Reflection presentations name their generators `r0 … r{n-1}`; rotation
//! presentations name them `s1 … s{n-1}`. A postfix `-` inverts, `(w)^k`
//! raises to a power and `[a,b]` is the commutator `a⁻¹b⁻¹ab`.

mod parse;
mod word;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

pub use parse::{parse_presentation, parse_word, ParseError, ParseErrorKind};
pub use word::{GeneratorWord, Letter, WordDisplay};

/// Whether the generators are the reflections ρ₀…ρₙ₋₁ or the rotations σ₁…σₙ₋₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Reflection,
    Rotation,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Reflection => "reflection",
            Kind::Rotation => "rotation",
        }
    }

    /// Letter used for generator names in the text format.
    pub fn prefix(self) -> char {
        match self {
            Kind::Reflection => 'r',
            Kind::Rotation => 's',
        }
    }

    /// Offset between internal 0-based indices and printed generator numbers.
    pub fn offset(self) -> usize {
        match self {
            Kind::Reflection => 0,
            Kind::Rotation => 1,
        }
    }
}

/// One entry of a Schläfli symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchlafliEntry {
    Finite(u32),
    Infinite,
}

impl SchlafliEntry {
    pub fn finite(self) -> Option<u32> {
        match self {
            SchlafliEntry::Finite(p) => Some(p),
            SchlafliEntry::Infinite => None,
        }
    }
}

impl fmt::Display for SchlafliEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchlafliEntry::Finite(p) => write!(f, "{p}"),
            SchlafliEntry::Infinite => f.write_str("inf"),
        }
    }
}

pub fn finite_symbol(ps: &[u32]) -> Vec<SchlafliEntry> {
    ps.iter().map(|&p| SchlafliEntry::Finite(p)).collect()
}

/// A finite presentation of a reflection group Γ(P) or rotation group Γ⁺(P).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    rank: usize,
    kind: Kind,
    relators: Vec<GeneratorWord>,
    declared_schlafli: Option<Vec<SchlafliEntry>>,
}

impl Presentation {
    /// An empty presentation of the given polytope rank.
    ///
    /// Reflection presentations have `rank` generators and rotation
    /// presentations have `rank - 1`.
    pub fn new(kind: Kind, rank: usize) -> Self {
        Presentation {
            rank,
            kind,
            relators: Vec::new(),
            declared_schlafli: None,
        }
    }

    /// The string Coxeter group `[p₁, …, pₙ₋₁]`.
    pub fn coxeter(symbol: &[SchlafliEntry]) -> Self {
        let mut p = Presentation::new(Kind::Reflection, symbol.len() + 1);
        p.declare_schlafli(symbol.to_vec());
        p
    }

    /// The standard rotation-group presentation of type `{p₁, …, pₙ₋₁}`.
    pub fn rotation(symbol: &[SchlafliEntry]) -> Self {
        let mut p = Presentation::new(Kind::Rotation, symbol.len() + 1);
        p.declare_schlafli(symbol.to_vec());
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn num_generators(&self) -> usize {
        match self.kind {
            Kind::Reflection => self.rank,
            Kind::Rotation => self.rank.saturating_sub(1),
        }
    }

    pub fn relators(&self) -> &[GeneratorWord] {
        &self.relators
    }

    pub fn declared_schlafli(&self) -> Option<&[SchlafliEntry]> {
        self.declared_schlafli.as_deref()
    }

    /// Adds a relator after free reduction. Relators that reduce to the empty
    /// word are dropped.
    ///
    /// # Panics
    /// If the word uses a generator outside the presentation.
    pub fn add_relator(&mut self, w: GeneratorWord) {
        if let Some(g) = w.max_generator() {
            assert!(
                g < self.num_generators(),
                "generator {g} out of range for {} generators",
                self.num_generators()
            );
        }
        let w = w.free_reduce();
        if !w.is_empty() {
            self.relators.push(w);
        }
    }

    pub fn with_relator(mut self, w: GeneratorWord) -> Self {
        self.add_relator(w);
        self
    }

    /// Records the Schläfli symbol and appends the relator families it implies.
    pub fn declare_schlafli(&mut self, symbol: Vec<SchlafliEntry>) {
        assert_eq!(symbol.len() + 1, self.rank, "Schläfli symbol length must be rank - 1");
        for r in schlafli_relators(self.kind, &symbol) {
            self.add_relator(r);
        }
        self.declared_schlafli = Some(symbol);
    }

    /// Makes `w` central by adding `[w, g]` for every generator `g`.
    pub fn add_central(&mut self, w: &GeneratorWord) {
        for g in 0..self.num_generators() {
            self.add_relator(GeneratorWord::commutator(w, &GeneratorWord::generator(g)));
        }
    }

    /// Applies `f` to every relator and generator index. Used for duality and
    /// for the mirror substitution; the declared symbol is replaced by `symbol`.
    pub fn map_relators(
        &self,
        symbol: Option<Vec<SchlafliEntry>>,
        f: impl Fn(&GeneratorWord) -> GeneratorWord,
    ) -> Presentation {
        let mut out = Presentation::new(self.kind, self.rank);
        for r in &self.relators {
            out.add_relator(f(r));
        }
        out.declared_schlafli = symbol;
        out
    }

    /// Formats a word with this presentation's generator names.
    pub fn format_word(&self, w: &GeneratorWord) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}", w.display_with(self.kind.prefix(), self.kind.offset()));
        s
    }

    /// Text serialization; `parse_presentation` of the output reproduces the
    /// generator count, kind and relator multiset.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rank {}", self.rank);
        let _ = writeln!(out, "kind {}", self.kind.as_str());
        let mut remaining = self.relators.clone();
        if let Some(symbol) = &self.declared_schlafli {
            let implied = schlafli_relators(self.kind, symbol);
            let mut rest = remaining.clone();
            let all_present = implied.iter().all(|r| match rest.iter().position(|x| x == r) {
                Some(i) => {
                    rest.remove(i);
                    true
                }
                None => false,
            });
            if all_present {
                out.push_str("schlafli");
                for e in symbol {
                    let _ = write!(out, " {e}");
                }
                out.push('\n');
                remaining = rest;
            }
        }
        for r in &remaining {
            let _ = writeln!(out, "rel {}", self.format_word(r));
        }
        out
    }
}

/// Relators implied by a Schläfli symbol.
///
/// Reflection kind: `ρᵢ²`, `(ρᵢ₋₁ρᵢ)^pᵢ` for finite `pᵢ`, and `(ρᵢρⱼ)²` for
/// `|i - j| ≥ 2`. Rotation kind: `σᵢ^pᵢ` and `(σᵢσᵢ₊₁⋯σⱼ)²` for `i < j`.
pub fn schlafli_relators(kind: Kind, symbol: &[SchlafliEntry]) -> Vec<GeneratorWord> {
    let mut out = Vec::new();
    match kind {
        Kind::Reflection => {
            let n = symbol.len() + 1;
            for i in 0..n {
                out.push(GeneratorWord::from_gens(&[i, i]));
            }
            for (i, e) in symbol.iter().enumerate() {
                if let Some(p) = e.finite() {
                    out.push(GeneratorWord::from_gens(&[i, i + 1]).pow(p as i64));
                }
            }
            for i in 0..n {
                for j in i + 2..n {
                    out.push(GeneratorWord::from_gens(&[i, j]).pow(2));
                }
            }
        }
        Kind::Rotation => {
            let m = symbol.len();
            for (i, e) in symbol.iter().enumerate() {
                if let Some(p) = e.finite() {
                    out.push(GeneratorWord::generator(i).pow(p as i64));
                }
            }
            for i in 0..m {
                for j in i + 1..m {
                    let run: Vec<usize> = (i..=j).collect();
                    out.push(GeneratorWord::from_gens(&run).pow(2));
                }
            }
        }
    }
    out
}
