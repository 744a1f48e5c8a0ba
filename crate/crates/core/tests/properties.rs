use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;
use regpoly_core::analysis::{analyze, is_tight, is_tight_by_flatness};
use regpoly_core::chiral::mirror_images;
use regpoly_core::group::generator_words;
use regpoly_core::perm::orbit;
use regpoly_core::presentation::{finite_symbol, parse_presentation};
use regpoly_core::{enumerate_cosets, GeneratorWord, Letter, Permutation, Presentation, StabilizerChain, StringGroup};

const MAX: usize = 200_000;

/// Spherical string Coxeter symbols of ranks 2 to 4.
fn finite_symbols() -> impl Strategy<Value = Vec<u32>> {
    prop_oneof![
        (2u32..=10).prop_map(|p| vec![p]),
        Just(vec![3, 3]),
        Just(vec![3, 4]),
        Just(vec![4, 3]),
        Just(vec![3, 5]),
        Just(vec![5, 3]),
        (2u32..=6).prop_map(|q| vec![2, q]),
        Just(vec![3, 3, 3]),
        Just(vec![4, 3, 3]),
        Just(vec![3, 4, 3]),
        (2u32..=5).prop_map(|p| vec![p, 2, 3]),
    ]
}

fn words(gens: usize, max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec((0..gens, any::<bool>()), 0..max_len).prop_map(|ls| {
        GeneratorWord::from_letters(
            ls.into_iter()
                .map(|(g, inv)| if inv { Letter::neg(g) } else { Letter::pos(g) })
                .collect(),
        )
    })
}

fn permutations(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| Permutation::new(p).unwrap())
}

fn brute_force_order(gens: &[Permutation]) -> usize {
    let degree = gens[0].degree();
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.images().to_vec()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.compose(g);
            if seen.insert(q.images().to_vec()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relators_close_on_every_coset(symbol in finite_symbols(), mask in 0u32..16) {
        let pres = Presentation::coxeter(&finite_symbol(&symbol));
        let n = pres.rank();
        let sub = generator_words((0..n).filter(|i| mask >> i & 1 == 1));
        let table = enumerate_cosets(&pres, &sub, MAX).unwrap();
        for c in 0..table.num_cosets() {
            for r in pres.relators() {
                prop_assert_eq!(table.trace_word(c, r).unwrap(), c);
            }
        }
        for w in &sub {
            prop_assert_eq!(table.trace_word(0, w).unwrap(), 0);
        }
    }

    #[test]
    fn subgroup_indices_divide_the_order(symbol in finite_symbols(), mask in 0u32..16) {
        let g = StringGroup::build(Presentation::coxeter(&finite_symbol(&symbol)), MAX).unwrap();
        let gens: Vec<usize> = (0..g.rank()).filter(|i| mask >> i & 1 == 1).collect();
        let index = g.group().subgroup_index(&generator_words(gens.iter().copied())).unwrap();
        prop_assert_eq!(index * g.parabolic_order(&gens), g.order());
    }

    #[test]
    fn enumeration_is_deterministic(symbol in finite_symbols(), mask in 0u32..16) {
        let pres = Presentation::coxeter(&finite_symbol(&symbol));
        let sub = generator_words((0..pres.rank()).filter(|i| mask >> i & 1 == 1));
        let a = enumerate_cosets(&pres, &sub, MAX).unwrap();
        let b = enumerate_cosets(&pres, &sub, MAX).unwrap();
        prop_assert_eq!(a.rows().collect::<Vec<_>>(), b.rows().collect::<Vec<_>>());
    }

    #[test]
    fn chains_match_brute_force(gens in prop::collection::vec(permutations(6), 1..4)) {
        let chain = StabilizerChain::from_generators(&gens).unwrap();
        prop_assert_eq!(chain.order() as usize, brute_force_order(&gens));
        for g in &gens {
            prop_assert!(chain.contains(g).unwrap());
        }
    }

    #[test]
    fn orbit_stabilizer(gens in prop::collection::vec(permutations(7), 1..4)) {
        let chain = StabilizerChain::from_generators(&gens).unwrap();
        let product: u64 = chain.orbit_lengths().iter().map(|&l| l as u64).product();
        prop_assert_eq!(product, chain.order());
        if let Some(&b) = chain.base().first() {
            prop_assert_eq!(orbit(&gens, b).unwrap().len(), chain.orbit_lengths()[0]);
        }
    }

    #[test]
    fn membership_agrees_with_closure(
        gens in prop::collection::vec(permutations(5), 1..3),
        probe in permutations(5),
    ) {
        let chain = StabilizerChain::from_generators(&gens).unwrap();
        let mut all = gens.clone();
        all.push(probe.clone());
        let inside = brute_force_order(&all) == brute_force_order(&gens);
        prop_assert_eq!(chain.contains(&probe).unwrap(), inside);
    }

    #[test]
    fn word_algebra(w in words(3, 12), v in words(3, 12)) {
        prop_assert!(w.mul(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.free_reduce().free_reduce(), w.free_reduce());
        prop_assert_eq!(w.mul(&v).inverse(), v.inverse().mul(&w.inverse()));
        let c = w.cyclic_reduce();
        prop_assert_eq!(c.cyclic_reduce(), c);
        let mirror = mirror_images(3);
        prop_assert_eq!(w.substitute(&mirror).substitute(&mirror), w.free_reduce());
    }

    #[test]
    fn presentations_round_trip(rels in prop::collection::vec(words(3, 10), 0..4)) {
        let mut pres = Presentation::coxeter(&finite_symbol(&[3, 4]));
        for r in rels {
            if !r.free_reduce().is_empty() {
                pres.add_relator(r);
            }
        }
        let back = parse_presentation(&pres.serialize()).unwrap();
        prop_assert_eq!(back.relators(), pres.relators());
        prop_assert_eq!(back.declared_schlafli(), pres.declared_schlafli());
    }

    #[test]
    fn element_orders_divide_the_group_order(symbol in finite_symbols(), w in words(4, 10)) {
        let g = StringGroup::build(Presentation::coxeter(&finite_symbol(&symbol)), MAX).unwrap();
        let w = w.relabel(|x| x % g.rank());
        let order = g.group().element_order(&w);
        prop_assert_eq!(g.order() % order, 0);
        prop_assert!(g.group().is_identity(&w.pow(order as i64)));
    }

    #[test]
    fn tightness_characterizations_agree(symbol in finite_symbols()) {
        let g = StringGroup::build(Presentation::coxeter(&finite_symbol(&symbol)), MAX).unwrap();
        let report = analyze(&g).unwrap();
        prop_assert_eq!(is_tight(&g), is_tight_by_flatness(g.rank(), &report.flat_pairs));
        prop_assert!(report.audit_violations.is_empty());
    }
}
