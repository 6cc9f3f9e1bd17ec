//! Structural invariants checked across module boundaries: exhaustively
//! over every small isomorphism class plus the catalog, and under
//! random relabelings and random instantiations via proptest.

use proptest::prelude::*;

use starbrace_core::catalog;
use starbrace_core::document::AlgebraDocument;
use starbrace_core::search::{enumerate_models, Model, SearchQuery};
use starbrace_core::semibrace::{classify_semibrace, induce_addition, AdditionKind};
use starbrace_core::star::{GreenRelation, StarSemigroup};
use starbrace_core::table::{canonical_encoding, TableRef};
use starbrace_core::ybe::{check_solution, derive_maps};

/// Every isomorphism class of order at most 3 plus all catalog bases.
fn pool() -> Vec<StarSemigroup> {
    let query = SearchQuery::star_semigroups(1..=3);
    let mut out: Vec<StarSemigroup> = enumerate_models(&query)
        .expect("the order range is within the cap")
        .into_iter()
        .map(|m| match m {
            Model::Star(s) => s,
            _ => unreachable!("the star signature yields star models"),
        })
        .collect();
    for entry in catalog::entries() {
        out.push(entry.base().clone());
    }
    out
}

#[test]
fn projection_and_idempotent_structure_holds_everywhere() {
    for s in pool() {
        let (projections, idempotents) = s
            .projection_sets()
            .expect("both derivations of P and E agree");
        for a in 0..s.order() {
            assert_eq!(
                idempotents.contains(&a),
                idempotents.contains(&s.star(a)),
                "a is idempotent iff a* is"
            );
            assert_eq!(projections.contains(&a), s.is_projection(a));
            assert_eq!(idempotents.contains(&a), s.is_idempotent(a));
        }
        // A product of projections is a projection exactly when they
        // commute.
        for &e in &projections {
            for &f in &projections {
                let ef = s.mul(e, f);
                assert_eq!(projections.contains(&ef), ef == s.mul(f, e));
            }
        }
    }
}

#[test]
fn green_relations_agree_with_their_star_characterisation() {
    for s in pool() {
        for rel in [GreenRelation::L, GreenRelation::R, GreenRelation::H] {
            s.green(rel)
                .expect("divisibility and projection routes agree");
        }
    }
}

#[test]
fn braid_and_component_routes_agree_on_every_induced_algebra() {
    for s in pool() {
        for kind in AdditionKind::ALL {
            check_solution(&induce_addition(&s, kind))
                .expect("the braid relation and the component equations agree");
        }
    }
}

#[test]
fn equational_characterisations_agree_on_every_pool_model() {
    for s in pool() {
        assert!(s.equational_crosscheck().all_consistent());
        for item in &s.identity_suite().items {
            assert!(
                !item.applicable || item.flag.holds,
                "conditional identity {} failed although applicable",
                item.id
            );
        }
    }
}

#[test]
fn conjugation_additions_are_associative_on_the_rectangular_band() {
    let base = catalog::get_entry("rect22").unwrap().base().clone();
    assert!(!base.classify().commutative.holds);
    for kind in [
        AdditionKind::ConjStar,
        AdditionKind::ConjStarRev,
        AdditionKind::Conj,
        AdditionKind::ConjRev,
    ] {
        let sb = classify_semibrace(&induce_addition(&base, kind));
        assert!(
            sb.add_associative.holds,
            "kind {} fails associativity here",
            kind.token()
        );
    }
}

fn model_and_permutation() -> impl Strategy<Value = (StarSemigroup, Vec<usize>)> {
    let pool = pool();
    let len = pool.len();
    (0..len).prop_flat_map(move |i| {
        let s = pool[i].clone();
        let identity: Vec<usize> = (0..s.order()).collect();
        (Just(s), Just(identity).prop_shuffle())
    })
}

fn relabeled(s: &StarSemigroup, p: &[usize]) -> StarSemigroup {
    StarSemigroup::new(s.mul_table().relabel(p), s.star_table().relabel(p))
        .expect("relabeling preserves the axioms")
}

proptest! {
    #[test]
    fn classification_is_relabeling_invariant((s, p) in model_and_permutation()) {
        let a = s.classify();
        let b = relabeled(&s, &p).classify();
        prop_assert_eq!(a.commutative.holds, b.commutative.holds);
        prop_assert_eq!(a.star_identity.holds, b.star_identity.holds);
        prop_assert_eq!(a.inverse.holds, b.inverse.holds);
        prop_assert_eq!(a.orthodox.holds, b.orthodox.holds);
        prop_assert_eq!(a.completely_regular.holds, b.completely_regular.holds);
        prop_assert_eq!(a.locally_inverse.holds, b.locally_inverse.holds);
        prop_assert_eq!(a.clifford.holds, b.clifford.holds);
        prop_assert_eq!(a.identity.is_some(), b.identity.is_some());
        prop_assert_eq!(a.idempotents.len(), b.idempotents.len());
        prop_assert_eq!(a.projections.len(), b.projections.len());
    }

    #[test]
    fn canonical_keys_are_relabeling_invariant((s, p) in model_and_permutation()) {
        let r = relabeled(&s, &p);
        let key = |m: &StarSemigroup| {
            canonical_encoding(
                &[TableRef::Bin(m.mul_table()), TableRef::Un(m.star_table())],
                m.order(),
            )
        };
        // Catalog bases can exceed the canonicalisation cap; skip those.
        if let Ok(original) = key(&s) {
            prop_assert_eq!(original, key(&r).expect("same order, same cap"));
        }
    }

    #[test]
    fn documents_survive_a_round_trip((s, _) in model_and_permutation()) {
        let doc = AlgebraDocument::from_star_semigroup("round-trip", &s);
        let json = doc.emit_json();
        let back = AlgebraDocument::parse(&json).expect("emitted documents parse");
        prop_assert_eq!(&doc, &back);
        prop_assert_eq!(json, back.emit_json());
    }

    #[test]
    fn derived_maps_match_their_defining_words(
        (s, _) in model_and_permutation(),
        kind_index in 0usize..AdditionKind::ALL.len(),
    ) {
        let kind = AdditionKind::ALL[kind_index];
        let alg = induce_addition(&s, kind);
        let maps = derive_maps(&alg);
        for a in 0..alg.order() {
            for b in 0..alg.order() {
                let lambda = alg.mul(a, alg.add(alg.star(a), b));
                let rho = alg.mul(alg.star(alg.add(alg.star(a), b)), b);
                prop_assert_eq!(maps.lambda(a, b), lambda);
                prop_assert_eq!(maps.rho(b, a), rho);
            }
        }
    }
}
