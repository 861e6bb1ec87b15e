mod common;

use artin_core::format::{parse_complex, write_complex};
use artin_core::homology::reduced_betti;
use artin_core::{clique_complex, Field, Simplex, SimplicialComplex};
use common::{betti_at, complex, graph};
use proptest::prelude::*;

/// A complex together with the raw generators it was built from, so that
/// membership can be decided without the library.
fn generated(max_n: usize) -> impl Strategy<Value = (usize, Vec<Simplex>, SimplicialComplex)> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..1u64 << n, 0..=5).prop_map(move |bits| {
            let gens: Vec<Simplex> = bits.into_iter().map(Simplex::from_bits).collect();
            let k = SimplicialComplex::new(n, &gens).unwrap();
            (n, gens, k)
        })
    })
}

fn member(gens: &[Simplex], s: Simplex) -> bool {
    s.is_empty() || gens.iter().any(|g| s.is_subset_of(*g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn faces_are_exactly_subsets_of_generators((n, gens, k) in generated(7)) {
        for bits in 0..1u64 << n {
            let s = Simplex::from_bits(bits);
            prop_assert_eq!(k.contains(s), member(&gens, s), "{}", s);
        }
        let listed: usize = k.f_vector().iter().sum();
        prop_assert_eq!(listed, k.faces().count());
    }

    #[test]
    fn alexander_dual_counts_and_involution(k in complex(7)) {
        prop_assume!(!k.is_full_simplex());
        let dual = k.alexander_dual().unwrap();
        prop_assert_eq!(k.num_faces() + dual.num_faces(), 1usize << k.n());
        prop_assert_eq!(dual.alexander_dual().unwrap(), k);
    }

    #[test]
    fn combinatorial_alexander_duality(k in complex(6)) {
        // H̃_i(K^★) ≅ H̃^{n-i-3}(K) for K ≠ Δ^{n-1}
        prop_assume!(!k.is_full_simplex());
        let n = k.n() as i64;
        let dual = k.alexander_dual().unwrap();
        let bk = reduced_betti(&k, Field::Rational);
        let bd = reduced_betti(&dual, Field::Rational);
        for i in -1..=n {
            prop_assert_eq!(betti_at(&bd, i), betti_at(&bk, n - i - 3), "i = {}", i);
        }
    }

    #[test]
    fn links_match_definition((n, gens, k) in generated(6), pick in any::<prop::sample::Index>()) {
        let faces: Vec<Simplex> = k.faces().collect();
        let sigma = faces[pick.index(faces.len())];
        let link = k.link(sigma).unwrap();
        let rest = Simplex::full(n).minus(sigma);
        for t in rest.subsets() {
            let expected = member(&gens, t.union(sigma));
            prop_assert_eq!(link.complex.contains(t.compress(rest)), expected);
        }
        for (i, v) in rest.vertices().enumerate() {
            prop_assert_eq!(link.original_vertex(i + 1), v);
        }
    }

    #[test]
    fn induced_subcomplexes_match_definition((n, gens, k) in generated(6), bits in any::<u64>()) {
        let u = Simplex::from_bits(bits & ((1u64 << n) - 1));
        let sub = k.induced_subcomplex(u).unwrap();
        prop_assert_eq!(sub.complex.n(), u.len());
        for t in u.subsets() {
            prop_assert_eq!(sub.complex.contains(t.compress(u)), member(&gens, t));
        }
    }

    #[test]
    fn clique_complexes_are_flag(g in graph(7)) {
        let k = clique_complex(&g);
        prop_assert!(k.is_flag());
        prop_assert_eq!(k.one_skeleton(), g.clone());
        for bits in 0..1u64 << g.n() {
            let s = Simplex::from_bits(bits);
            let clique = s.vertices().all(|u| s.vertices().all(|v| u == v || g.has_edge(u, v)));
            prop_assert_eq!(k.contains(s), clique);
        }
    }

    #[test]
    fn flag_iff_equal_to_clique_complex_of_skeleton(k in complex(6)) {
        prop_assert_eq!(k.is_flag(), clique_complex(&k.one_skeleton()) == k);
    }

    #[test]
    fn file_format_round_trips(k in complex(8)) {
        let text = write_complex(&k).unwrap();
        prop_assert_eq!(parse_complex(&text).unwrap(), k);
    }

    #[test]
    fn cones_are_acyclic(k in complex(6)) {
        // join with a new vertex n + 1
        let n = k.n();
        let apex = Simplex::singleton(n + 1);
        let facets: Vec<Simplex> = k.facets().into_iter().map(|f| f.union(apex)).collect();
        let cone = SimplicialComplex::new(n + 1, &facets).unwrap();
        for field in common::FIELDS {
            prop_assert!(reduced_betti(&cone, field).iter().all(|&b| b == 0));
        }
    }
}

#[test]
fn void_and_irrelevant_complexes_differ() {
    let void = SimplicialComplex::void(3).unwrap();
    let irrelevant = SimplicialComplex::irrelevant(3).unwrap();
    assert_ne!(void, irrelevant);
    assert_eq!(reduced_betti(&void, Field::Rational), Vec::<usize>::new());
    assert_eq!(reduced_betti(&irrelevant, Field::Rational), vec![1]);
    // the dual of {∅} is the boundary of the simplex, a 1-sphere for n = 3
    let dual = irrelevant.alexander_dual().unwrap();
    assert_eq!(reduced_betti(&dual, Field::Rational), vec![0, 0, 1]);
    assert!(SimplicialComplex::full_simplex(3).unwrap().alexander_dual().is_err());
}
