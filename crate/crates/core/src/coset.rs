//! Todd-Coxeter coset enumeration (HLT strategy with lookahead).

use alloc::vec;
use alloc::vec::Vec;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::perm::Permutation;
use crate::presentation::{GeneratorWord, Presentation};

pub const DEFAULT_MAX_COSETS: usize = 2_000_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error(
        "coset limit of {max_cosets} exceeded (high-water mark {high_water} live cosets); \
         the group may be infinite or the limit too small"
    )]
    LimitExceeded { max_cosets: usize, high_water: usize },
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("coset limit must be positive")]
    ZeroLimit,
    #[error("subgroup word uses generator {0}, outside the presentation")]
    GeneratorOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("coset {coset} out of range (table has {num_cosets} cosets)")]
    CosetOutOfRange { coset: usize, num_cosets: usize },
    #[error("generator {0} out of range")]
    GeneratorOutOfRange(usize),
}

/// A complete coset table: the action of every generator and its inverse on
/// the cosets of a subgroup, numbered from the subgroup itself (coset 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetTable {
    num_generators: usize,
    num_cosets: usize,
    // row-major, columns g0, g0⁻¹, g1, g1⁻¹, …
    action: Vec<u32>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    /// Image of `coset` under generator `gen` (or its inverse).
    pub fn image(&self, coset: usize, gen: usize, inverse: bool) -> usize {
        self.action[coset * 2 * self.num_generators + 2 * gen + inverse as usize] as usize
    }

    pub fn trace_word(&self, coset: usize, w: &GeneratorWord) -> Result<usize, TraceError> {
        if coset >= self.num_cosets {
            return Err(TraceError::CosetOutOfRange {
                coset,
                num_cosets: self.num_cosets,
            });
        }
        let mut c = coset;
        for l in w.letters() {
            if l.index() >= self.num_generators {
                return Err(TraceError::GeneratorOutOfRange(l.index()));
            }
            c = self.image(c, l.index(), l.inverse);
        }
        Ok(c)
    }

    /// The permutation of the cosets induced by each generator.
    pub fn coset_action(&self) -> Vec<Permutation> {
        (0..self.num_generators)
            .map(|g| {
                let images = (0..self.num_cosets)
                    .map(|c| self.action[c * 2 * self.num_generators + 2 * g])
                    .collect();
                Permutation::from_images_unchecked(images)
            })
            .collect()
    }

    /// Rows of the action table, one entry per (generator, sign) column.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.action.chunks(2 * self.num_generators)
    }
}

impl Serialize for CosetTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[u32]> = self.rows().collect();
        let mut s = serializer.serialize_struct("CosetTable", 3)?;
        s.serialize_field("num_cosets", &self.num_cosets)?;
        s.serialize_field("num_generators", &self.num_generators)?;
        s.serialize_field("action", &rows)?;
        s.end()
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `pres`, keeping at most `max_cosets` cosets alive at once.
pub fn enumerate_cosets(
    pres: &Presentation,
    subgroup: &[GeneratorWord],
    max_cosets: usize,
) -> Result<CosetTable, EnumerationError> {
    let ng = pres.num_generators();
    if ng == 0 {
        return Err(EnumerationError::NoGenerators);
    }
    if max_cosets == 0 {
        return Err(EnumerationError::ZeroLimit);
    }
    for w in subgroup {
        if let Some(g) = w.max_generator().filter(|&g| g >= ng) {
            return Err(EnumerationError::GeneratorOutOfRange(g));
        }
    }
    let (e, relators, subgroup) = Enumerator::new(pres, subgroup, max_cosets);
    e.run(&relators, &subgroup)
}

/// Order of the presented group: the index of the trivial subgroup.
pub fn group_order(pres: &Presentation, max_cosets: usize) -> Result<usize, EnumerationError> {
    enumerate_cosets(pres, &[], max_cosets).map(|t| t.num_cosets())
}

struct Full;

struct Enumerator {
    num_generators: usize,
    ncols: usize,
    // column of generator g and of its inverse
    fwd_col: Vec<usize>,
    inv_of: Vec<usize>,
    table: Vec<u32>,
    parent: Vec<u32>,
    rows: usize,
    live: usize,
    cap: usize,
    high_water: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(pres: &Presentation, subgroup: &[GeneratorWord], cap: usize) -> (Self, Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let ng = pres.num_generators();
        let reduced: Vec<GeneratorWord> = pres
            .relators()
            .iter()
            .map(|r| r.cyclic_reduce())
            .filter(|r| !r.is_empty())
            .collect();
        let is_involution = |g: usize| {
            reduced.iter().any(|r| {
                r.len() == 2
                    && r.letters().iter().all(|l| l.index() == g)
                    && r.letters()[0].inverse == r.letters()[1].inverse
            })
        };
        let mut fwd_col = Vec::with_capacity(ng);
        let mut inv_col = Vec::with_capacity(ng);
        let mut inv_of = Vec::new();
        let mut involution = Vec::with_capacity(ng);
        for g in 0..ng {
            let c = inv_of.len();
            fwd_col.push(c);
            if is_involution(g) {
                inv_col.push(c);
                inv_of.push(c);
                involution.push(true);
            } else {
                inv_col.push(c + 1);
                inv_of.push(c + 1);
                inv_of.push(c);
                involution.push(false);
            }
        }
        let to_cols = |w: &GeneratorWord| -> Vec<usize> {
            w.letters()
                .iter()
                .map(|l| {
                    if l.inverse {
                        inv_col[l.index()]
                    } else {
                        fwd_col[l.index()]
                    }
                })
                .collect()
        };
        let relators: Vec<Vec<usize>> = reduced
            .iter()
            .filter(|r| !(r.len() == 2 && r.letters()[0] == r.letters()[1] && involution[r.letters()[0].index()]))
            .map(to_cols)
            .collect();
        let subgroup: Vec<Vec<usize>> = subgroup
            .iter()
            .map(|w| to_cols(&w.free_reduce()))
            .filter(|w| !w.is_empty())
            .collect();
        let ncols = inv_of.len();
        let initial = cap.min(1024);
        let mut table = Vec::with_capacity(initial * ncols);
        table.resize(ncols, NONE);
        let mut parent = Vec::with_capacity(initial);
        parent.push(0);
        // remember which table column serves as g⁻¹ for the public table
        let mut fwd_inv = fwd_col.clone();
        fwd_inv.extend(inv_col);
        let e = Enumerator {
            num_generators: ng,
            ncols,
            fwd_col: fwd_inv,
            inv_of,
            table,
            parent,
            rows: 1,
            live: 1,
            cap,
            high_water: 1,
            queue: Vec::new(),
        };
        (e, relators, subgroup)
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.ncols + x] = v;
    }

    #[inline]
    fn alive(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, Full> {
        if self.rows >= self.cap {
            return Err(Full);
        }
        let new = self.rows;
        self.rows += 1;
        self.live += 1;
        self.high_water = self.high_water.max(self.live);
        self.table.resize(self.rows * self.ncols, NONE);
        self.parent.push(new as u32);
        self.set(c, x, new as u32);
        let ix = self.inv_of[x];
        self.set(new, ix, c as u32);
        Ok(new)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a as u32, b as u32);
        let mut q = 0;
        while q < self.queue.len() {
            let dead = self.queue[q] as usize;
            q += 1;
            for x in 0..self.ncols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                let ix = self.inv_of[x];
                self.set(d as usize, ix, NONE);
                let mu = self.rep(dead as u32) as usize;
                let nu = self.rep(d) as usize;
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu as u32, mx);
                } else {
                    let nix = self.get(nu, ix);
                    if nix != NONE {
                        self.merge(mu as u32, nix);
                    } else {
                        self.set(mu, x, nu as u32);
                        self.set(nu, ix, mu as u32);
                    }
                }
            }
        }
    }

    /// Traces `word` from `start` in both directions, defining new cosets to
    /// close the gap when `fill` is set.
    fn scan(&mut self, start: usize, word: &[usize], fill: bool) -> Result<(), Full> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = start;
        let mut b = start;
        let mut i = 0usize;
        let mut j = word.len() - 1;
        loop {
            while i <= j {
                let next = self.get(f, word[i]);
                if next == NONE {
                    break;
                }
                f = next as usize;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, self.inv_of[word[j]]);
                if next == NONE {
                    break;
                }
                b = next as usize;
                if j == 0 {
                    // the whole word traced backwards; i == 0 here
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i];
                self.set(f, x, b as u32);
                let ix = self.inv_of[x];
                self.set(b, ix, f as u32);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    /// Scans every live coset against every relator without defining new
    /// cosets, collecting deductions and coincidences.
    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        for beta in 0..self.rows {
            for r in relators {
                if !self.alive(beta) {
                    break;
                }
                let _ = self.scan(beta, r, false);
            }
        }
    }

    /// Renumbers live cosets contiguously in order. Returns the new index of
    /// the first live coset at or after `alpha`.
    fn compact(&mut self, alpha: usize) -> usize {
        let mut new_index = vec![NONE; self.rows];
        let mut next = 0u32;
        let mut alpha_new = None;
        for (c, slot) in new_index.iter_mut().enumerate() {
            if !self.alive(c) {
                continue;
            }
            if c >= alpha && alpha_new.is_none() {
                alpha_new = Some(next as usize);
            }
            *slot = next;
            next += 1;
        }
        let live = next as usize;
        let mut table = Vec::with_capacity(live.max(1) * self.ncols);
        for c in 0..self.rows {
            if !self.alive(c) {
                continue;
            }
            for x in 0..self.ncols {
                let v = self.get(c, x);
                table.push(if v == NONE { NONE } else { new_index[v as usize] });
            }
        }
        self.table = table;
        self.parent = (0..live as u32).collect();
        self.rows = live;
        self.live = live;
        alpha_new.unwrap_or(live)
    }

    fn make_room(&mut self, alpha: usize, relators: &[Vec<usize>]) -> Result<usize, EnumerationError> {
        let alpha = if self.live < self.rows {
            self.compact(alpha)
        } else {
            self.lookahead(relators);
            self.compact(alpha)
        };
        // give up when lookahead frees almost nothing: the next definitions
        // would only trigger another full pass
        let slack = (self.cap / 100).max(1);
        if self.cap - self.rows < slack {
            return Err(EnumerationError::LimitExceeded {
                max_cosets: self.cap,
                high_water: self.high_water,
            });
        }
        Ok(alpha)
    }

    fn run(mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> Result<CosetTable, EnumerationError> {
        'sub: loop {
            for w in subgroup {
                if self.scan(0, w, true).is_err() {
                    self.make_room(0, relators)?;
                    continue 'sub;
                }
            }
            break;
        }

        let mut alpha = 0;
        'outer: while alpha < self.rows {
            if !self.alive(alpha) {
                alpha += 1;
                continue;
            }
            for r in relators {
                if self.scan(alpha, r, true).is_err() {
                    alpha = self.make_room(alpha, relators)?;
                    continue 'outer;
                }
                if !self.alive(alpha) {
                    alpha += 1;
                    continue 'outer;
                }
            }
            for x in 0..self.ncols {
                if self.get(alpha, x) == NONE && self.define(alpha, x).is_err() {
                    alpha = self.make_room(alpha, relators)?;
                    continue 'outer;
                }
            }
            alpha += 1;
        }
        self.compact(0);
        Ok(self.into_table())
    }

    fn into_table(self) -> CosetTable {
        let ng = self.num_generators;
        let mut action = Vec::with_capacity(self.rows * 2 * ng);
        for c in 0..self.rows {
            for g in 0..ng {
                action.push(self.get(c, self.fwd_col[g]));
                action.push(self.get(c, self.fwd_col[ng + g]));
            }
        }
        debug_assert!(action.iter().all(|&v| v != NONE));
        CosetTable {
            num_generators: ng,
            num_cosets: self.rows,
            action,
        }
    }
}
