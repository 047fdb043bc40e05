use builtmat::complex::SimplicialComplex;
use builtmat::corpus::{corpus_matroids, random_building_set, standard_corpus, Instance};
use builtmat::deletion::chow_by_deletion;
use builtmat::diagnostics::{kruskal_katona_check, real_root_count};
use builtmat::fy::{chow_by_enumeration, chow_polynomial};
use builtmat::nested::{is_nested, is_nested_bruteforce};
use builtmat::poly::GammaVector;
use builtmat::{gamma_expansion, BuiltMatroid, Flat, GroundSet, Matroid, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn corpus() -> &'static [Instance] {
    static C: OnceLock<Vec<Instance>> = OnceLock::new();
    C.get_or_init(standard_corpus)
}

fn matroids() -> &'static [(String, Matroid)] {
    static M: OnceLock<Vec<(String, Matroid)>> = OnceLock::new();
    M.get_or_init(corpus_matroids)
}

fn random_instance(idx: usize, seed: u64, p: f64) -> BuiltMatroid {
    let (_, m) = &matroids()[idx % matroids().len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bs = random_building_set(m.lattice(), p, &mut rng);
    BuiltMatroid::new(m.clone(), bs.elements(), GroundSet::natural(m.n())).expect("closure is a building set")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fy_and_deletion_agree(idx in 0usize..200, seed in any::<u64>(), p in 0.0f64..0.6) {
        let bm = random_instance(idx, seed, p);
        let h = chow_polynomial(&bm);
        prop_assert_eq!(&h, &chow_by_deletion(&bm).unwrap());
        prop_assert_eq!(&h, &chow_by_enumeration(&bm));
        prop_assert!(h.is_palindromic());
        prop_assert_eq!(h.degree(), bm.rank() - bm.max_elements().len());
        prop_assert_eq!(h.coeff(0), 1);
    }

    #[test]
    fn chow_is_independent_of_order(idx in 0usize..500, perm_seed in any::<u64>()) {
        let inst = &corpus()[idx % corpus().len()];
        let n = inst.bm.n();
        let mut order: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        rand::seq::SliceRandom::shuffle(&mut order[..], &mut rng);
        let other = inst.bm.with_order(GroundSet::from_sequence(order).unwrap()).unwrap();
        prop_assert_eq!(chow_polynomial(&inst.bm), chow_by_deletion(&other).unwrap());
    }

    #[test]
    fn nested_test_matches_definition(idx in 0usize..500, mask in any::<u64>()) {
        let bm = &corpus()[idx % corpus().len()].bm;
        let el = bm.bset().elements();
        let s: Vec<Flat> = el.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, &f)| f).take(6).collect();
        prop_assert_eq!(is_nested(bm, &s), is_nested_bruteforce(bm, &s));
    }

    #[test]
    fn gamma_round_trip(gammas in prop::collection::vec(-20i64..20, 1..5), extra in 0usize..3) {
        let degree = 2 * (gammas.len() - 1) + extra;
        let gv = GammaVector { gammas: gammas.clone(), degree };
        let p = gv.reconstruct();
        if !p.is_zero() {
            let back = gamma_expansion(&p).unwrap();
            prop_assert_eq!(back.reconstruct(), p);
        }
    }

    #[test]
    fn products_of_real_linear_factors_are_real_rooted(roots in prop::collection::vec(1i64..6, 1..6)) {
        let p: Polynomial = roots.iter().map(|&a| Polynomial::new(vec![a, 1])).product();
        let (distinct, all_real) = real_root_count(&p);
        let mut r = roots.clone();
        r.sort();
        r.dedup();
        prop_assert!(all_real);
        prop_assert_eq!(distinct, r.len());
    }

    #[test]
    fn f_vectors_satisfy_kruskal_katona(gens in prop::collection::vec(prop::collection::btree_set(0usize..7, 1..5), 1..6)) {
        let gens: Vec<Vec<usize>> = gens.into_iter().map(|s| s.into_iter().collect()).collect();
        let vertices: Vec<Flat> = (0..7).map(Flat::singleton).collect();
        let c = SimplicialComplex::generated(vertices, &gens);
        let f: Vec<i64> = c.f_vector().iter().map(|&x| x as i64).collect();
        prop_assert!(kruskal_katona_check(&f));
    }
}

#[test]
fn every_corpus_instance_is_palindromic_with_positive_leading_terms() {
    for inst in corpus() {
        let h = chow_polynomial(&inst.bm);
        assert!(h.is_palindromic() && h.is_nonnegative(), "{}", inst.name);
        assert_eq!(h.coeff(0), 1, "{}", inst.name);
    }
}
