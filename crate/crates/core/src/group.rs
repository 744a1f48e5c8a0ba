//! A finitely presented group realised by its regular representation.

use alloc::vec::Vec;

use crate::coset::{enumerate_cosets, CosetTable, EnumerationError};
use crate::perm::{self, Permutation, StabilizerChain};
use crate::presentation::{GeneratorWord, Presentation};

/// A presented group together with its action on the cosets of the trivial
/// subgroup. Point `c` of the action stands for the group element reached by
/// tracing a word from coset 0, so the action is free and transitive.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pres: Presentation,
    table: CosetTable,
    gens: Vec<Permutation>,
    max_cosets: usize,
}

impl FiniteGroup {
    pub fn build(pres: Presentation, max_cosets: usize) -> Result<Self, EnumerationError> {
        let table = enumerate_cosets(&pres, &[], max_cosets)?;
        let gens = table.coset_action();
        Ok(FiniteGroup {
            pres,
            table,
            gens,
            max_cosets,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.num_cosets()
    }

    pub fn max_cosets(&self) -> usize {
        self.max_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Generator images in the regular representation.
    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// The point standing for the element `w`.
    pub fn element(&self, w: &GeneratorWord) -> usize {
        self.table.trace_word(0, w).expect("word within generator range")
    }

    pub fn is_identity(&self, w: &GeneratorWord) -> bool {
        self.element(w) == 0
    }

    /// Image of `w` in the regular representation.
    pub fn word_to_perm(&self, w: &GeneratorWord) -> Permutation {
        perm::word_permutation(&self.table, w)
    }

    /// Order of the element `w`.
    pub fn element_order(&self, w: &GeneratorWord) -> usize {
        if w.is_empty() {
            return 1;
        }
        let mut c = self.element(w);
        let mut k = 1;
        while c != 0 {
            c = self.table.trace_word(c, w).expect("word within generator range");
            k += 1;
        }
        k
    }

    /// Index of the subgroup generated by `words`, by coset enumeration.
    pub fn subgroup_index(&self, words: &[GeneratorWord]) -> Result<usize, EnumerationError> {
        enumerate_cosets(&self.pres, words, self.max_cosets).map(|t| t.num_cosets())
    }

    /// Order of the subgroup generated by the given generators.
    pub fn generator_subgroup_order(&self, gens: &[usize]) -> usize {
        let images: Vec<Permutation> = gens.iter().map(|&g| self.gens[g].clone()).collect();
        perm::product_size_regular(&images, &[], self.order())
    }

    /// Stabilizer chain of the subgroup generated by `words`, on the regular
    /// representation with base `[0]`.
    pub fn subgroup_chain(&self, words: &[GeneratorWord]) -> StabilizerChain {
        let images: Vec<Permutation> = words.iter().map(|w| self.word_to_perm(w)).collect();
        StabilizerChain::with_known_base(&images, self.order(), &[0]).expect("degrees agree")
    }

    /// Order of `⟨h_words⟩ ∩ ⟨k_words⟩`.
    pub fn intersection_order(
        &self,
        h_words: &[GeneratorWord],
        k_words: &[GeneratorWord],
    ) -> Result<usize, EnumerationError> {
        let cosets = enumerate_cosets(&self.pres, h_words, self.max_cosets)?;
        Ok(perm::intersect_in_tables(&self.table, &cosets, k_words).order() as usize)
    }

    /// Like [`FiniteGroup::intersection_order`] with the cosets of `H` already
    /// enumerated.
    pub fn intersection_order_in(&self, h_cosets: &CosetTable, k_words: &[GeneratorWord]) -> usize {
        perm::intersect_in_tables(&self.table, h_cosets, k_words).order() as usize
    }
}

/// Generator words for a list of generator indices.
pub fn generator_words(gens: impl IntoIterator<Item = usize>) -> Vec<GeneratorWord> {
    gens.into_iter().map(GeneratorWord::generator).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::finite_symbol;

    #[test]
    fn regular_representation_of_the_tetrahedral_group() {
        let g = FiniteGroup::build(Presentation::coxeter(&finite_symbol(&[3, 3])), 1000).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.element_order(&GeneratorWord::from_gens(&[0, 1])), 3);
        assert_eq!(g.element_order(&GeneratorWord::from_gens(&[0, 2])), 2);
        assert_eq!(g.element_order(&GeneratorWord::from_gens(&[0, 1, 2])), 4);
        assert!(g.is_identity(&GeneratorWord::from_gens(&[0, 2, 0, 2])));
        assert_eq!(g.generator_subgroup_order(&[1, 2]), 6);
        assert_eq!(g.subgroup_index(&generator_words([1, 2])).unwrap(), 4);
        assert_eq!(g.subgroup_chain(&generator_words([0, 1])).order(), 6);
    }

    #[test]
    fn intersections_are_symmetric() {
        let g = FiniteGroup::build(Presentation::coxeter(&finite_symbol(&[4, 3])), 1000).unwrap();
        let h = generator_words([0, 1]);
        let k = generator_words([1, 2]);
        assert_eq!(g.intersection_order(&h, &k).unwrap(), 2);
        assert_eq!(g.intersection_order(&k, &h).unwrap(), 2);
        assert_eq!(g.intersection_order(&h, &h).unwrap(), 8);
    }
}
