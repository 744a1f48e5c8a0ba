//! String groups generated by involutions and the intersection condition.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::coset::{enumerate_cosets, CosetTable, EnumerationError};
use crate::group::{generator_words, FiniteGroup};
use crate::perm::StabilizerChain;
use crate::presentation::{GeneratorWord, Kind, Presentation, SchlafliEntry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StringGroupError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("expected a reflection presentation")]
    NotReflection,
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("generator r{0} is trivial")]
    GeneratorTrivial(usize),
    #[error("generator r{gen} has order {order}, not 2")]
    NotInvolution { gen: usize, order: usize },
    #[error("generators r{0} and r{1} do not commute")]
    NonCommuting(usize, usize),
}

/// Subsets `I`, `J` of generators with `⟨ρ_I⟩ ∩ ⟨ρ_J⟩ ≠ ⟨ρ_{I∩J}⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionWitness {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub intersection_order: usize,
    pub expected_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CGroupVerdict {
    pub is_c_group: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<IntersectionWitness>,
}

/// An sggi `⟨ρ₀, …, ρₙ₋₁⟩` given by a reflection presentation, realised by its
/// regular representation.
#[derive(Debug, Clone)]
pub struct StringGroup {
    group: FiniteGroup,
    rank: usize,
    schlafli: Vec<u32>,
    // order of ⟨ρ_i : i ∈ mask⟩ for every generator subset
    parabolic_orders: Vec<usize>,
}

fn mask_of(gens: impl IntoIterator<Item = usize>) -> usize {
    gens.into_iter().fold(0, |m, g| m | 1 << g)
}

fn members(mask: usize, rank: usize) -> Vec<usize> {
    (0..rank).filter(|&i| mask >> i & 1 == 1).collect()
}

impl StringGroup {
    pub fn build(pres: Presentation, max_cosets: usize) -> Result<Self, StringGroupError> {
        if pres.kind() != Kind::Reflection {
            return Err(StringGroupError::NotReflection);
        }
        let rank = pres.rank();
        if rank == 0 {
            return Err(StringGroupError::ZeroRank);
        }
        let group = FiniteGroup::build(pres, max_cosets)?;
        for i in 0..rank {
            match group.element_order(&GeneratorWord::generator(i)) {
                1 => return Err(StringGroupError::GeneratorTrivial(i)),
                2 => {}
                order => return Err(StringGroupError::NotInvolution { gen: i, order }),
            }
        }
        for i in 0..rank {
            for j in i + 2..rank {
                if !group.is_identity(&GeneratorWord::from_gens(&[i, j]).pow(2)) {
                    return Err(StringGroupError::NonCommuting(i, j));
                }
            }
        }
        let schlafli = (1..rank)
            .map(|i| group.element_order(&GeneratorWord::from_gens(&[i - 1, i])) as u32)
            .collect();
        let parabolic_orders = (0..1usize << rank)
            .map(|mask| group.generator_subgroup_order(&members(mask, rank)))
            .collect();
        Ok(StringGroup {
            group,
            rank,
            schlafli,
            parabolic_orders,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn presentation(&self) -> &Presentation {
        self.group.presentation()
    }

    pub fn max_cosets(&self) -> usize {
        self.group.max_cosets()
    }

    /// The computed Schläfli symbol: orders of `ρᵢ₋₁ρᵢ`.
    pub fn schlafli(&self) -> &[u32] {
        &self.schlafli
    }

    /// The declared and computed symbols when they disagree, which happens
    /// when the extra relators collapse some `ρᵢ₋₁ρᵢ` to a proper divisor.
    pub fn schlafli_mismatch(&self) -> Option<(Vec<SchlafliEntry>, Vec<u32>)> {
        let declared = self.presentation().declared_schlafli()?;
        let agrees = declared.iter().zip(&self.schlafli).all(|(d, &c)| d.finite() == Some(c));
        if agrees {
            None
        } else {
            Some((declared.to_vec(), self.schlafli.clone()))
        }
    }

    /// Order of `⟨ρᵢ : i ∈ gens⟩`.
    pub fn parabolic_order(&self, gens: &[usize]) -> usize {
        self.parabolic_orders[mask_of(gens.iter().copied())]
    }

    pub fn parabolic_order_by_mask(&self, mask: usize) -> usize {
        self.parabolic_orders[mask]
    }

    /// Stabilizer chain of a parabolic subgroup on the regular representation.
    pub fn parabolic_chain(&self, gens: &[usize]) -> StabilizerChain {
        self.group.subgroup_chain(&generator_words(gens.iter().copied()))
    }

    /// The dual sggi, with generators in reverse order.
    pub fn dual(&self) -> StringGroup {
        let n = self.rank;
        let symbol = self
            .presentation()
            .declared_schlafli()
            .map(|s| s.iter().rev().copied().collect());
        let pres = self.presentation().map_relators(symbol, |r| r.relabel(|g| n - 1 - g));
        StringGroup::build(pres, self.max_cosets()).expect("dual of a valid sggi is valid")
    }

    /// Cosets of `⟨ρᵢ : i ∈ gens⟩`.
    pub fn parabolic_cosets(&self, gens: &[usize]) -> Result<CosetTable, EnumerationError> {
        enumerate_cosets(
            self.presentation(),
            &generator_words(gens.iter().copied()),
            self.max_cosets(),
        )
    }

    /// Decides the intersection condition recursively: an interval of
    /// generators is a C-group when both of its maximal subintervals are and
    /// their subgroups meet exactly in the subgroup of the common part.
    pub fn is_string_c_group(&self) -> Result<CGroupVerdict, EnumerationError> {
        let n = self.rank;
        let mut memo = vec![None; n * n];
        let ok = self.interval_check(0, n - 1, &mut memo)?;
        let witness = if ok { None } else { self.find_intersection_witness()? };
        Ok(CGroupVerdict {
            is_c_group: ok,
            witness,
        })
    }

    fn interval_check(&self, lo: usize, hi: usize, memo: &mut [Option<bool>]) -> Result<bool, EnumerationError> {
        if let Some(v) = memo[lo * self.rank + hi] {
            return Ok(v);
        }
        let v = match hi - lo {
            0 => true,
            1 => self.group.element(&GeneratorWord::generator(lo)) != self.group.element(&GeneratorWord::generator(hi)),
            _ => {
                self.interval_check(lo, hi - 1, memo)? && self.interval_check(lo + 1, hi, memo)? && {
                    let facet = generator_words(lo..hi);
                    let vertex_figure = generator_words(lo + 1..=hi);
                    let meet = self.group.intersection_order(&facet, &vertex_figure)?;
                    meet == self.parabolic_order_by_mask(mask_of(lo + 1..hi))
                }
            }
        };
        memo[lo * self.rank + hi] = Some(v);
        Ok(v)
    }

    /// Exhaustive search over all subset pairs for a violation of the
    /// intersection condition. Pairs are tried by increasing `|I| + |J|`, and
    /// nested pairs, which satisfy it trivially, are skipped.
    pub fn find_intersection_witness(&self) -> Result<Option<IntersectionWitness>, EnumerationError> {
        let n = self.rank;
        let full = 1usize << n;
        let mut pairs = Vec::new();
        for a in 1..full {
            for b in a + 1..full {
                if a & b == a || a & b == b {
                    continue;
                }
                pairs.push((a.count_ones() + b.count_ones(), a, b));
            }
        }
        pairs.sort_unstable();
        let mut tables: Vec<Option<CosetTable>> = vec![None; full];
        for (_, a, b) in pairs {
            if tables[a].is_none() {
                tables[a] = Some(self.parabolic_cosets(&members(a, n))?);
            }
            let k = generator_words(members(b, n));
            let meet = self
                .group
                .intersection_order_in(tables[a].as_ref().expect("just filled"), &k);
            let expected = self.parabolic_orders[a & b];
            if meet != expected {
                return Ok(Some(IntersectionWitness {
                    i: members(a, n),
                    j: members(b, n),
                    intersection_order: meet,
                    expected_order: expected,
                }));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::finite_symbol;

    fn coxeter(ps: &[u32]) -> StringGroup {
        StringGroup::build(Presentation::coxeter(&finite_symbol(ps)), 100_000).unwrap()
    }

    #[test]
    fn coxeter_groups_are_c_groups() {
        for ps in [&[3, 3][..], &[4, 3], &[3, 5], &[3, 3, 3], &[2, 3]] {
            let g = coxeter(ps);
            let v = g.is_string_c_group().unwrap();
            assert!(v.is_c_group, "{ps:?}");
            assert_eq!(g.schlafli(), ps);
            assert!(g.find_intersection_witness().unwrap().is_none());
        }
    }

    #[test]
    fn identified_generators_fail() {
        let pres = Presentation::coxeter(&finite_symbol(&[2, 2])).with_relator(GeneratorWord::from_gens(&[0, 2]));
        let g = StringGroup::build(pres, 1000).unwrap();
        assert_eq!(g.order(), 4);
        let v = g.is_string_c_group().unwrap();
        assert!(!v.is_c_group);
        let w = v.witness.unwrap();
        assert_eq!((w.i, w.j), (vec![0], vec![2]));
        assert_eq!((w.intersection_order, w.expected_order), (2, 1));
    }

    #[test]
    fn sggi_violations() {
        let trivial = Presentation::coxeter(&finite_symbol(&[3, 3])).with_relator(GeneratorWord::generator(0));
        assert!(matches!(
            StringGroup::build(trivial, 1000),
            Err(StringGroupError::GeneratorTrivial(_))
        ));
        let mut no_commute = Presentation::new(Kind::Reflection, 3);
        for i in 0..3 {
            no_commute.add_relator(GeneratorWord::from_gens(&[i, i]));
        }
        no_commute.add_relator(GeneratorWord::from_gens(&[0, 1]).pow(2));
        no_commute.add_relator(GeneratorWord::from_gens(&[1, 2]).pow(2));
        no_commute.add_relator(GeneratorWord::from_gens(&[0, 2]).pow(3));
        assert_eq!(
            StringGroup::build(no_commute, 1000).unwrap_err(),
            StringGroupError::NonCommuting(0, 2)
        );
    }

    #[test]
    fn dual_reverses_symbol() {
        let g = coxeter(&[3, 5]);
        let d = g.dual();
        assert_eq!(d.schlafli(), &[5, 3]);
        assert_eq!(d.order(), 120);
        assert_eq!(d.dual().presentation().relators(), g.presentation().relators());
    }

    #[test]
    fn collapsed_symbol_is_reported() {
        let pres =
            Presentation::coxeter(&finite_symbol(&[4, 4])).with_relator(GeneratorWord::from_gens(&[0, 1]).pow(2));
        let g = StringGroup::build(pres, 1000).unwrap();
        assert_eq!(g.schlafli()[0], 2);
        assert!(g.schlafli_mismatch().is_some());
        assert!(coxeter(&[4, 3]).schlafli_mismatch().is_none());
    }
}
