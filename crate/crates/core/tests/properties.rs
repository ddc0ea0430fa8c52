use morita_gis::category::{build_equivalence_functor_with, karoubi, p_equivalent_to_l};
use morita_gis::gamma::{
    build_gamma, canonical_family, canonical_morphism, check_morita_to_graph, lemma_products_check_with, RepresentativePolicy,
};
use morita_gis::graph::{build_gis, graph_isomorphism, DirectedGraph, VertexId};
use morita_gis::semigroup::{generate_from_partial_bijections, semigroup_isomorphic, validate, GenerationOptions, ValidatedSemigroup};
use morita_gis::semilattice::perrot_report;
use morita_gis::Exec;
use proptest::prelude::*;

/// A partial injection on `0..m`, as images.
fn partial_injection(m: usize) -> impl Strategy<Value = Vec<Option<usize>>> {
    (Just((0..m).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), m))
        .prop_map(|(perm, keep)| perm.into_iter().zip(keep).map(|(p, k)| k.then_some(p)).collect())
}

fn generated_semigroup() -> impl Strategy<Value = ValidatedSemigroup> {
    (1usize..=3)
        .prop_flat_map(|m| (Just(m), proptest::collection::vec(partial_injection(m), 1..=2), any::<bool>()))
        .prop_map(|(m, gens, include_zero)| {
            let options = GenerationOptions { include_zero, ..GenerationOptions::default() };
            let g = generate_from_partial_bijections(m, &gens, options).expect("partial injections generate");
            validate(g.table).expect("closed sets of partial bijections are inverse semigroups")
        })
}

/// Acyclic graphs: edges go from lower to higher vertex after a random relabelling.
fn acyclic_graph() -> impl Strategy<Value = DirectedGraph> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let pairs = proptest::collection::vec((0..n, 0..n), 0..=4);
            (Just(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle(), pairs)
        })
        .prop_map(|(n, perm, pairs)| {
            let mut g = DirectedGraph::new();
            for v in 0..n {
                g.add_vertex(format!("v{v}")).unwrap();
            }
            for (i, (a, b)) in pairs.into_iter().filter(|(a, b)| a != b).enumerate() {
                let (lo, hi) = (a.min(b), a.max(b));
                g.add_edge(format!("e{i}"), VertexId(perm[lo]), VertexId(perm[hi])).unwrap();
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn natural_order_is_a_partial_order(s in generated_semigroup()) {
        for a in s.elements() {
            prop_assert!(s.natural_leq(a, a));
            for b in s.elements() {
                if a != b && s.natural_leq(a, b) {
                    prop_assert!(!s.natural_leq(b, a));
                }
                for c in s.elements() {
                    if s.natural_leq(a, b) && s.natural_leq(b, c) {
                        prop_assert!(s.natural_leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn d_relation_matches_linking_elements(s in generated_semigroup()) {
        let d = &s.green_data().d;
        for &e in s.idempotents() {
            for &f in s.idempotents() {
                let x = s.d_witness(e, f).unwrap();
                prop_assert_eq!(x.is_some(), d[e] == d[f]);
                if let Some(x) = x {
                    prop_assert_eq!((s.dom(x), s.ran(x)), (e, f));
                }
            }
        }
    }

    #[test]
    fn karoubi_isomorphism_matches_d(s in generated_semigroup()) {
        let c = karoubi(&s, true);
        prop_assert!(c.category.check_laws().is_ok());
        let classes = c.category.iso_classes();
        let d = &s.green_data().d;
        for (i, &e) in c.objects.iter().enumerate() {
            for (j, &f) in c.objects.iter().enumerate() {
                prop_assert_eq!(classes[i] == classes[j], d[e] == d[f]);
            }
        }
    }

    #[test]
    fn yes_verdicts_come_with_an_equivalence(s in generated_semigroup()) {
        if check_morita_to_graph(&s).is_yes() {
            let eq = build_equivalence_functor_with(&s, RepresentativePolicy::MinIndex, Exec::default()).unwrap();
            prop_assert!(eq.check().is_equivalence());
            let t = &eq.gis.semigroup;
            // Morita invariant: every local submonoid of S appears in T
            for &e in s.idempotents() {
                let ese = s.local_submonoid(e).unwrap().monoid;
                let found = t.idempotents().iter().any(|&f| {
                    semigroup_isomorphic(&ese, &t.local_submonoid(f).unwrap().monoid).unwrap().is_some()
                });
                prop_assert!(found, "no fTf isomorphic to eSe for e = {}", e);
            }
        }
    }

    #[test]
    fn p_equivalent_to_l_whenever_it_applies(s in generated_semigroup()) {
        if let Ok(r) = perrot_report(&s) {
            if r.p3 && r.p4 {
                prop_assert!(p_equivalent_to_l(&s).unwrap().holds());
            }
        }
    }

    #[test]
    fn random_dags_round_trip(g in acyclic_graph()) {
        let gis = build_gis(&g).unwrap();
        let s = &gis.semigroup;
        prop_assert!(s.is_combinatorial());
        prop_assert!(perrot_report(s).unwrap().proper);
        let min = build_gamma(s, RepresentativePolicy::MinIndex).unwrap();
        let max = build_gamma(s, RepresentativePolicy::MaxIndex).unwrap();
        prop_assert!(graph_isomorphism(&min.graph, &g).unwrap().is_some());
        prop_assert!(graph_isomorphism(&max.graph, &g).unwrap().is_some());
        let fam = canonical_family(s, &min).unwrap();
        let seq = lemma_products_check_with(s, &min, &fam, Exec::Sequential);
        prop_assert!(seq.passed());
        prop_assert_eq!(&seq, &lemma_products_check_with(s, &min, &fam, Exec::Parallel));
        let phi = canonical_morphism(s, &min, &fam).unwrap();
        prop_assert!(phi.homomorphism && phi.injective && phi.surjective);
    }
}

#[test]
fn parallel_and_sequential_functor_checks_agree() {
    let s = build_gis(&morita_gis::fixtures::g4()).unwrap().semigroup;
    let seq = build_equivalence_functor_with(&s, RepresentativePolicy::MaxIndex, Exec::Sequential).unwrap();
    let par = build_equivalence_functor_with(&s, RepresentativePolicy::MaxIndex, Exec::Parallel).unwrap();
    assert_eq!(seq.functor, par.functor);
    assert_eq!(seq.check_with(Exec::Sequential), par.check_with(Exec::Parallel));
}
