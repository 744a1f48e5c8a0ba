use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    /// 0-based generator index.
    pub gen: u16,
    /// `true` for the inverse of the generator.
    pub inverse: bool,
}

impl Letter {
    pub const fn new(gen: usize, inverse: bool) -> Self {
        Letter {
            gen: gen as u16,
            inverse,
        }
    }

    pub const fn pos(gen: usize) -> Self {
        Letter::new(gen, false)
    }

    pub const fn neg(gen: usize) -> Self {
        Letter::new(gen, true)
    }

    pub fn index(self) -> usize {
        self.gen as usize
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A word in the generators of a presentation and their inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorWord {
    letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn empty() -> Self {
        GeneratorWord::default()
    }

    /// Builds a word without reducing it.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GeneratorWord { letters }
    }

    /// The product of the given generators, each with exponent +1.
    pub fn from_gens(gens: &[usize]) -> Self {
        GeneratorWord {
            letters: gens.iter().map(|&g| Letter::pos(g)).collect(),
        }
    }

    pub fn generator(gen: usize) -> Self {
        GeneratorWord {
            letters: alloc::vec![Letter::pos(gen)],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.index()).max()
    }

    pub fn inverse(&self) -> Self {
        GeneratorWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &GeneratorWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GeneratorWord { letters }.free_reduce()
    }

    /// `self^k`, freely reduced. Negative exponents invert.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let n = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&base.letters);
        }
        GeneratorWord { letters }.free_reduce()
    }

    /// The commutator `[a, b] = a⁻¹ b⁻¹ a b`, freely reduced.
    pub fn commutator(a: &GeneratorWord, b: &GeneratorWord) -> Self {
        let mut letters = a.inverse().letters;
        letters.extend(b.inverse().letters);
        letters.extend_from_slice(&a.letters);
        letters.extend_from_slice(&b.letters);
        GeneratorWord { letters }.free_reduce()
    }

    /// The unique freely reduced word equal to `self` in the free group.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        GeneratorWord { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Freely and cyclically reduced form (a conjugate of `self`).
    pub fn cyclic_reduce(&self) -> Self {
        let reduced = self.free_reduce();
        let l = &reduced.letters;
        let mut lo = 0;
        let mut hi = l.len();
        while hi - lo >= 2 && l[lo].cancels(l[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        GeneratorWord {
            letters: l[lo..hi].to_vec(),
        }
    }

    /// Replaces every generator index `g` by `f(g)`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        GeneratorWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(f(l.index()), l.inverse))
                .collect(),
        }
    }

    /// Substitutes a word for every generator (inverse letters get the inverse
    /// image) and freely reduces the result.
    pub fn substitute(&self, images: &[GeneratorWord]) -> Self {
        let mut letters = Vec::new();
        for l in &self.letters {
            let img = &images[l.index()];
            if l.inverse {
                letters.extend(img.inverse().letters);
            } else {
                letters.extend_from_slice(&img.letters);
            }
        }
        GeneratorWord { letters }.free_reduce()
    }

    /// Renders the word in the text format, naming generator `g` as
    /// `{prefix}{g + offset}`.
    pub fn display_with(&self, prefix: char, offset: usize) -> WordDisplay<'_> {
        WordDisplay {
            word: self,
            prefix,
            offset,
        }
    }
}

impl From<Vec<Letter>> for GeneratorWord {
    fn from(letters: Vec<Letter>) -> Self {
        GeneratorWord { letters }
    }
}

pub struct WordDisplay<'a> {
    word: &'a GeneratorWord,
    prefix: char,
    offset: usize,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("()");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", self.prefix, l.index() + self.offset)?;
            if l.inverse {
                f.write_str("-")?;
            }
        }
        Ok(())
    }
}
