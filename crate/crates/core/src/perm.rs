//! Permutations, orbits and Schreier-Sims stabilizer chains.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coset::{enumerate_cosets, CosetTable, EnumerationError};
use crate::presentation::{GeneratorWord, Presentation};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} outside degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// A permutation of `{0, …, d-1}`, acting on the right: `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(PermError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    ///
    /// # Panics
    /// If the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        result
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn check_degrees(gens: &[Permutation], degree: usize) -> Result<(), PermError> {
    for g in gens {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    Ok(())
}

/// The orbit of `x` under the group generated by `gens`, in breadth-first
/// order starting with `x`.
pub fn orbit(gens: &[Permutation], x: u32) -> Result<Vec<u32>, PermError> {
    let degree = gens.first().map_or(x as usize + 1, |g| g.degree());
    check_degrees(gens, degree)?;
    if x as usize >= degree {
        return Err(PermError::PointOutOfRange {
            point: x as usize,
            degree,
        });
    }
    Ok(close_points(gens, degree, vec![x]))
}

fn close_points(gens: &[Permutation], degree: usize, start: Vec<u32>) -> Vec<u32> {
    let mut seen = vec![false; degree];
    let mut out = Vec::with_capacity(start.len());
    for x in start {
        if !seen[x as usize] {
            seen[x as usize] = true;
            out.push(x);
        }
    }
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Size of the product set `A·B` when the generators act regularly with point
/// 0 as the identity element: the orbit of 0 under `A`, closed under `B`.
pub fn product_size_regular(a_gens: &[Permutation], b_gens: &[Permutation], degree: usize) -> usize {
    let a = close_points(a_gens, degree, vec![0]);
    close_points(b_gens, degree, a).len()
}

// factor of a lazily evaluated product: arena index and inverse flag
type Factor = (u32, bool);

#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<u32>,
    orbit: Vec<u32>,
    // for each point in the orbit, the generator that first reached it
    via: Vec<u32>,
    // per orbit position, how many of `gens` have been processed
    checked: Vec<u32>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut via = vec![NONE; degree];
        via[base as usize] = NONE - 1;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            via,
            checked: vec![0],
        }
    }

    fn contains(&self, x: u32) -> bool {
        self.via[x as usize] != NONE
    }
}

/// A base and strong generating set built by the Schreier-Sims algorithm.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    // strong generators and their inverses, indexed by arena position
    arena: Vec<Permutation>,
    arena_inv: Vec<Permutation>,
    levels: Vec<Level>,
    known_base: bool,
}

impl StabilizerChain {
    /// Builds a chain from scratch. Base points are the first points moved by
    /// the residues encountered, so the result is deterministic.
    pub fn from_generators(gens: &[Permutation]) -> Result<Self, PermError> {
        let degree = gens.first().map_or(0, |g| g.degree());
        check_degrees(gens, degree)?;
        let mut chain = StabilizerChain::empty(degree);
        for g in gens {
            chain.extend(g)?;
        }
        Ok(chain)
    }

    /// Builds a chain when the pointwise stabilizer of `base` is known to be
    /// trivial, e.g. `[0]` for a regular action. Residues are then tested for
    /// triviality on the base points only.
    pub fn with_known_base(gens: &[Permutation], degree: usize, base: &[u32]) -> Result<Self, PermError> {
        check_degrees(gens, degree)?;
        let mut chain = StabilizerChain::empty(degree);
        for &b in base {
            if b as usize >= degree {
                return Err(PermError::PointOutOfRange {
                    point: b as usize,
                    degree,
                });
            }
            chain.levels.push(Level::new(b, degree));
        }
        chain.known_base = true;
        for g in gens {
            chain.extend(g)?;
        }
        Ok(chain)
    }

    /// The trivial group of the given degree.
    pub fn empty(degree: usize) -> Self {
        StabilizerChain {
            degree,
            arena: Vec::new(),
            arena_inv: Vec::new(),
            levels: Vec::new(),
            known_base: false,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Product of the fundamental orbit lengths (saturating).
    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc.saturating_mul(l.orbit.len() as u64))
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.arena
    }

    /// The first fundamental orbit, which is the orbit of the first base point.
    pub fn base_orbit(&self) -> &[u32] {
        self.levels.first().map_or(&[], |l| &l.orbit)
    }

    /// Orbit sizes per level.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Membership by sifting, with a full identity check of the residue.
    pub fn contains(&self, g: &Permutation) -> Result<bool, PermError> {
        check_degrees(core::slice::from_ref(g), self.degree)?;
        let mut h = g.clone();
        for level in &self.levels {
            let beta = h.apply(level.base);
            if !level.contains(beta) {
                return Ok(false);
            }
            for (idx, inv) in self.path_to_base(level, beta) {
                h = h.compose(self.factor(idx, inv));
            }
        }
        Ok(h.is_identity())
    }

    /// Adds `g` to the generators, unless it already lies in the group.
    pub fn extend(&mut self, g: &Permutation) -> Result<(), PermError> {
        check_degrees(core::slice::from_ref(g), self.degree)?;
        if g.is_identity() {
            return Ok(());
        }
        // g keeps its arena slot only if it turns out to be new
        let idx = self.arena.len() as u32;
        self.arena.push(g.clone());
        self.arena_inv.push(g.inverse());
        match self.sift(alloc::vec![(idx, false)], 0) {
            Sift::Trivial => {
                self.arena.pop();
                self.arena_inv.pop();
            }
            Sift::Dropped(level, residue) => {
                let j = self.add_residue(residue, 0, level);
                self.schreier_sims(j);
            }
        }
        Ok(())
    }

    fn factor(&self, idx: u32, inv: bool) -> &Permutation {
        if inv {
            &self.arena_inv[idx as usize]
        } else {
            &self.arena[idx as usize]
        }
    }

    fn eval(&self, factors: &[Factor], x: u32) -> u32 {
        factors.iter().fold(x, |p, &(idx, inv)| self.factor(idx, inv).apply(p))
    }

    /// Factors mapping `beta` back to the level's base point.
    fn path_to_base(&self, level: &Level, beta: u32) -> Vec<Factor> {
        let mut out = Vec::new();
        let mut x = beta;
        while x != level.base {
            let s = level.via[x as usize];
            out.push((s, true));
            x = self.arena_inv[s as usize].apply(x);
        }
        out
    }

    /// Factors of a transversal element mapping the base point to `beta`.
    fn path_from_base(&self, level: &Level, beta: u32) -> Vec<Factor> {
        let mut out = self.path_to_base(level, beta);
        out.reverse();
        for f in &mut out {
            f.1 = !f.1;
        }
        out
    }

    fn sift(&self, mut factors: Vec<Factor>, start: usize) -> Sift {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = self.eval(&factors, level.base);
            if !level.contains(beta) {
                return Sift::Dropped(l, factors);
            }
            factors.extend(self.path_to_base(level, beta));
        }
        if self.known_base {
            return Sift::Trivial;
        }
        let moved = (0..self.degree as u32).find(|&x| self.eval(&factors, x) != x);
        match moved {
            None => Sift::Trivial,
            Some(_) => Sift::Dropped(self.levels.len(), factors),
        }
    }

    fn materialize(&self, factors: &[Factor]) -> Permutation {
        let images = (0..self.degree as u32).map(|x| self.eval(factors, x)).collect();
        Permutation::from_images_unchecked(images)
    }

    /// Stores a non-trivial residue as a strong generator for levels
    /// `from..=to`, opening a new level if it fixes every base point.
    fn add_residue(&mut self, residue: Vec<Factor>, from: usize, to: usize) -> usize {
        let perm = self.materialize(&residue);
        if to == self.levels.len() {
            let b = perm.first_moved_point().expect("residue is not the identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let idx = self.arena.len() as u32;
        self.arena_inv.push(perm.inverse());
        self.arena.push(perm);
        for l in from..=to {
            self.levels[l].gens.push(idx);
            self.grow_orbit(l);
        }
        to
    }

    fn grow_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut i = 0;
        while i < level.orbit.len() {
            let x = level.orbit[i];
            for &s in &level.gens {
                let y = self.arena[s as usize].apply(x);
                if level.via[y as usize] == NONE {
                    level.via[y as usize] = s;
                    level.orbit.push(y);
                    level.checked.push(0);
                }
            }
            i += 1;
        }
    }

    /// Processes unchecked Schreier generators from level `i` upwards to level
    /// 0, descending again whenever a new strong generator appears.
    fn schreier_sims(&mut self, start: usize) {
        let mut i = start as isize;
        'levels: while i >= 0 {
            let l = i as usize;
            let mut pos = 0;
            while pos < self.levels[l].orbit.len() {
                while (self.levels[l].checked[pos] as usize) < self.levels[l].gens.len() {
                    let level = &self.levels[l];
                    let gi = level.checked[pos] as usize;
                    let s = level.gens[gi];
                    let beta = level.orbit[pos];
                    let image = self.arena[s as usize].apply(beta);
                    self.levels[l].checked[pos] += 1;
                    let level = &self.levels[l];
                    if level.via[image as usize] == s && image != level.base {
                        // defining edge of the Schreier tree: trivial generator
                        continue;
                    }
                    let mut factors = self.path_from_base(level, beta);
                    factors.push((s, false));
                    factors.extend(self.path_to_base(level, image));
                    if let Sift::Dropped(j, residue) = self.sift(factors, l + 1) {
                        let j = self.add_residue(residue, l + 1, j);
                        i = j as isize;
                        continue 'levels;
                    }
                }
                pos += 1;
            }
            i -= 1;
        }
    }
}

enum Sift {
    Trivial,
    Dropped(usize, Vec<Factor>),
}

/// Chain for `H ∩ K` inside the group presented by `pres`, computed as the
/// stabilizer of the trivial coset in the action of `K` on the cosets of `H`.
/// The chain lives on the regular representation with base `[0]`.
pub fn intersect_subgroups(
    pres: &Presentation,
    h_words: &[GeneratorWord],
    k_words: &[GeneratorWord],
    max_cosets: usize,
) -> Result<StabilizerChain, EnumerationError> {
    let regular = enumerate_cosets(pres, &[], max_cosets)?;
    let cosets = enumerate_cosets(pres, h_words, max_cosets)?;
    Ok(intersect_in_tables(&regular, &cosets, k_words))
}

pub(crate) fn word_permutation(regular: &CosetTable, w: &GeneratorWord) -> Permutation {
    let images = (0..regular.num_cosets())
        .map(|c| regular.trace_word(c, w).expect("word fits the table") as u32)
        .collect();
    Permutation::from_images_unchecked(images)
}

/// Same as [`intersect_subgroups`] with both tables already enumerated:
/// `regular` over the trivial subgroup and `cosets` over `H`.
pub(crate) fn intersect_in_tables(
    regular: &CosetTable,
    cosets: &CosetTable,
    k_words: &[GeneratorWord],
) -> StabilizerChain {
    let degree = regular.num_cosets();
    let n = cosets.num_cosets();
    // transversal word to each coset in the K-orbit of coset 0
    let mut transversal: Vec<Option<GeneratorWord>> = vec![None; n];
    transversal[0] = Some(GeneratorWord::empty());
    let mut queue = vec![0usize];
    let mut chain = StabilizerChain::with_known_base(&[], degree, &[0]).expect("degree is positive");
    let mut i = 0;
    while i < queue.len() {
        let c = queue[i];
        i += 1;
        for k in k_words {
            let d = cosets.trace_word(c, k).expect("word fits the table");
            let tc = transversal[c].clone().expect("orbit point has a transversal");
            let tck = tc.mul(k);
            match &transversal[d] {
                None => {
                    transversal[d] = Some(tck);
                    queue.push(d);
                }
                Some(td) => {
                    let schreier = tck.mul(&td.inverse());
                    let p = regular.trace_word(0, &schreier).expect("word fits the table");
                    if !chain.levels[0].contains(p as u32) {
                        chain
                            .extend(&word_permutation(regular, &schreier))
                            .expect("degrees agree");
                    }
                }
            }
        }
    }
    chain
}
