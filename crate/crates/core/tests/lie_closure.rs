use infhecke::arith::rational::int;
use infhecke::arith::{Cyclo, Rational};
use infhecke::classify::{classify, LType};
use infhecke::groups::{Group, GroupParams};
use infhecke::lie::checks::{
    ad_identity, antisymmetric_for, compact_split_check, hmodule_duality, invariant_form,
    operator_identity, supported_on,
};
use infhecke::lie::{
    bracket_closure, bracket_closure_with, closure_mod_p, derived_generators, reflection_images,
    rep_hecke_dims, GroupAlgebra, Strategy as Bracketing,
};
use infhecke::linalg::Matrix;
use infhecke::reps::{irreducibles, Character, IrrRep};
use proptest::prelude::*;

fn group(d: u32, e: u32, r: usize) -> Group {
    Group::construct(GroupParams::new(d, e, r).unwrap()).unwrap()
}

fn irr_by_label(w: &Group, label: &str) -> IrrRep {
    irreducibles(w)
        .unwrap()
        .into_iter()
        .find(|x| x.label() == label)
        .unwrap()
}

#[test]
fn s3_reflection_rep_closes_to_sl2() {
    let w = group(1, 1, 3);
    let x = irr_by_label(&w, "[2,1]");
    assert_eq!(rep_hecke_dims(&x.rep, &w).unwrap(), (3, 3));
}

#[test]
fn g333_two_dim_components_close_to_sl2() {
    let w = group(1, 3, 3);
    for x in irreducibles(&w).unwrap().iter().filter(|x| x.dim() == 2) {
        assert_eq!(rep_hecke_dims(&x.rep, &w).unwrap().1, 3, "{}", x.label());
    }
}

#[test]
fn degree_one_reps_have_trivial_derived_image() {
    let w = group(2, 1, 3);
    for x in irreducibles(&w).unwrap().iter().filter(|x| x.dim() == 1) {
        assert_eq!(rep_hecke_dims(&x.rep, &w).unwrap().1, 0);
    }
}

#[test]
fn strategies_agree() {
    let w = group(1, 4, 3);
    for x in irreducibles(&w).unwrap().iter().filter(|x| x.dim() > 1) {
        let gens = derived_generators(&x.rep, &w).unwrap();
        let a = bracket_closure_with(&gens, Bracketing::Generators).dim();
        let b = bracket_closure_with(&gens, Bracketing::AllPairs).dim();
        assert_eq!(a, b, "{}", x.label());
    }
}

#[test]
fn group_algebra_strategies_agree() {
    let w = group(1, 1, 4);
    let alg = GroupAlgebra::new(&w);
    assert_eq!(alg.reflection_closure(&w, Bracketing::Generators).dim(), 12);
    assert_eq!(alg.reflection_closure(&w, Bracketing::AllPairs).dim(), 12);
}

#[test]
fn mod_p_matches_exact_on_curated_cases() {
    let s4 = group(1, 1, 4);
    let refl = irr_by_label(&s4, "[3,1]");
    let gens = reflection_images(&refl.rep, &s4);
    assert_eq!(
        closure_mod_p(&gens, 11).unwrap(),
        bracket_closure(&gens).dim()
    );

    let g333 = group(1, 3, 3);
    for x in irreducibles(&g333).unwrap().iter().filter(|x| x.dim() == 2) {
        let gens = reflection_images(&x.rep, &g333);
        assert_eq!(
            closure_mod_p(&gens, 7).unwrap(),
            bracket_closure(&gens).dim()
        );
    }
}

#[test]
fn ad_identity_on_closures() {
    for (d, e, r) in [(1, 1, 4), (1, 3, 3), (2, 1, 3)] {
        let w = group(d, e, r);
        for x in irreducibles(&w).unwrap().iter().filter(|x| x.dim() > 1) {
            let gens = reflection_images(&x.rep, &w);
            let closure = bracket_closure(&gens);
            assert!(ad_identity(&gens, &closure), "{}", x.label());
        }
    }
}

#[test]
fn exterior_power_operator_identity() {
    // S₅: Λᵏ[4,1] = [4−k+1, 1^k]; twisted by ε as well
    let w = group(1, 1, 5);
    let r = irr_by_label(&w, "[4,1]");
    let imgs = reflection_images(&r.rep, &w);
    for k in 0..=4 {
        for eta in [1, -1] {
            assert!(imgs.iter().all(|s| operator_identity(s, eta, k)), "k = {k}");
        }
    }
    // the derived image of Λ²R is 𝔰𝔩 of the 4-dimensional R
    let l2 = r.rep.exterior_power(2);
    assert_eq!(rep_hecke_dims(&l2, &w).unwrap().1, 15);
}

#[test]
fn hmodule_duality_holds_exactly_for_self_dual_reps() {
    // s ↦ −ᵗρ(s) is (ρ*⊗ε)_𝓗, so it matches (ρ⊗ε)_𝓗 iff ρ ≅ ρ*
    let mut complex = 0;
    for (d, e, r) in [(1, 1, 4), (1, 3, 3), (2, 1, 3), (1, 4, 2), (1, 5, 2)] {
        let w = group(d, e, r);
        for x in irreducibles(&w).unwrap() {
            let self_dual = x.character == x.character.dual(&w);
            complex += usize::from(!self_dual);
            assert_eq!(
                hmodule_duality(&reflection_images(&x.rep, &w)),
                self_dual,
                "{}",
                x.label()
            );
        }
    }
    assert!(complex > 0);
}

#[test]
fn osp_images_preserve_the_form() {
    for (d, e, r) in [(1, 4, 3), (1, 2, 4)] {
        let w = group(d, e, r);
        let rep = classify(&w).unwrap();
        let irr = irreducibles(&w).unwrap();
        let eps = Character::sign(&w).unwrap();
        let mut seen = 0;
        for rec in rep.records.iter().filter(|r| r.l_type != LType::Linear) {
            let p = rec.partner.as_ref().unwrap();
            let eta = &rep.linear_characters[p.eta].character;
            let x = &irr[rec.index];
            // ᵗρ(g) B ρ(g) = (εη)(g) B on the group generators
            let scalars: Vec<Cyclo> = w
                .generators()
                .iter()
                .map(|g| {
                    let k = w.index_of(&g.elem).unwrap();
                    eps.value(&w, k)
                        .clone()
                        .checked_mul(eta.value(&w, k))
                        .unwrap()
                })
                .collect();
            let gens: Vec<Matrix<Cyclo>> =
                x.rep.generators.iter().map(|(_, m)| m.clone()).collect();
            let form = invariant_form(&gens, &scalars).expect("nondegenerate form");
            let symmetric = form.transpose() == form;
            assert_eq!(symmetric, rec.l_type == LType::Orthogonal);
            assert!(antisymmetric_for(
                &form,
                &derived_generators(&x.rep, &w).unwrap()
            ));
            assert_eq!(
                rep_hecke_dims(&x.rep, &w).unwrap().1,
                rec.predicted_hprime_dim
            );
            seen += 1;
        }
        assert!(seen > 0);
    }
}

#[test]
fn compact_split_parities() {
    let w = group(1, 1, 4);
    let alg = GroupAlgebra::new(&w);
    let closure = alg.reflection_closure(&w, Bracketing::Generators);
    let split = compact_split_check(&w, &closure).unwrap();
    assert!(split.passes());
    let refl: Vec<Vec<Rational>> = w
        .reflections()
        .elements
        .iter()
        .map(|&k| alg.basis_element(k))
        .collect();
    for s in &refl {
        assert!(supported_on(&w, s, -1));
        for t in &refl {
            let st = alg.bracket(s, t);
            assert!(supported_on(&w, &st, 1));
            for u in refl.iter().take(3) {
                assert!(supported_on(&w, &alg.bracket(u, &st), -1));
            }
        }
    }
}

fn small_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(-3i64..=3, 9)
        .prop_map(|v| Matrix::from_fn(3, 3, |i, j| int(v[i * 3 + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_dimension_ignores_generator_order(perm in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let w = group(1, 3, 3);
        let x = irreducibles(&w).unwrap().into_iter().find(|x| x.dim() == 3).unwrap();
        let gens = reflection_images(&x.rep, &w);
        let shuffled: Vec<Matrix<Cyclo>> = perm.iter().map(|&i| gens[i].clone()).collect();
        prop_assert_eq!(bracket_closure(&shuffled).dim(), bracket_closure(&gens).dim());
    }

    #[test]
    fn mod_p_never_exceeds_exact(a in small_matrix(), b in small_matrix()) {
        let exact = bracket_closure(&[a.clone(), b.clone()]).dim();
        let lift = |m: &Matrix<Rational>| m.map(|x| Cyclo::from_rational(1, x.clone()));
        let modp = closure_mod_p(&[lift(&a), lift(&b)], 11).unwrap();
        prop_assert!(modp <= exact);
    }
}
