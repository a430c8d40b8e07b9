use infhecke::groups::{Group, GroupParams};
use infhecke::reps::{
    bilinear_type, clifford_split, inner, irreducibles, multiplicity, BilinearType, Character,
    CharacterIndex, Multipartition, Representation, SeminormalModel,
};
use num_traits::One;

fn group(d: u32, e: u32, r: usize) -> Group {
    Group::construct(GroupParams::new(d, e, r).unwrap()).unwrap()
}

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

#[test]
fn irreducibles_are_complete_and_distinct() {
    for (d, e, r) in [
        (1, 1, 3),
        (1, 1, 4),
        (2, 1, 2),
        (2, 1, 3),
        (1, 2, 3),
        (1, 3, 3),
        (1, 4, 2),
        (2, 2, 2),
        (2, 3, 2),
        (1, 2, 4),
    ] {
        let w = group(d, e, r);
        let irr = irreducibles(&w).unwrap();
        let total: usize = irr.iter().map(|i| i.dim() * i.dim()).sum();
        assert_eq!(total, w.order(), "G({},{},{})", d * e, e, r);
        assert_eq!(
            irr.len(),
            w.classes().len(),
            "class count for G({},{},{})",
            d * e,
            e,
            r
        );
        for (a, x) in irr.iter().enumerate() {
            for (b, y) in irr.iter().enumerate() {
                let ip = inner(&w, &x.character, &y.character).unwrap();
                assert_eq!(ip.is_one(), a == b, "{} vs {}", x.label(), y.label());
            }
        }
    }
}

#[test]
fn four_binary_components_of_dimension_six() {
    let p = GroupParams::new(1, 4, 4).unwrap();
    let comps = clifford_split(&SeminormalModel::new(&mp("([1];[1];[1];[1])")), &p);
    assert_eq!(comps.len(), 4);
    assert!(comps.iter().all(|c| c.dim() == 6));
}

#[test]
fn d4_splits_22() {
    let w = group(1, 2, 4);
    let comps = clifford_split(
        &SeminormalModel::new(&mp("([2];[2])")),
        &w.params().unwrap(),
    );
    assert_eq!(
        comps.iter().map(Representation::dim).collect::<Vec<_>>(),
        vec![3, 3]
    );
    for c in &comps {
        let chi = c.character(&w);
        assert!(inner(&w, &chi, &chi).unwrap().is_one());
    }
}

#[test]
fn exterior_powers_of_the_reflection_rep_of_s5() {
    let w = group(1, 1, 5);
    let irr = irreducibles(&w).unwrap();
    let idx = CharacterIndex::new(&irr);
    let refl = irr.iter().find(|i| i.label() == "[4,1]").unwrap();
    for k in 0..=4 {
        let chi = refl.character.exterior_power(&w, k);
        let expected = irr
            .iter()
            .position(|i| i.shape == mp(&format!("{}", infhecke::reps::Partition::hook(5 - k, k))))
            .unwrap();
        assert_eq!(idx.find(&chi), Some(expected), "k = {k}");
        // the matrix model agrees with the character computation
        assert_eq!(refl.rep.exterior_power(k).character(&w), chi);
    }
}

#[test]
fn dual_of_dual_and_matrix_dual() {
    let w = group(1, 3, 3);
    for x in irreducibles(&w).unwrap() {
        let d = x.character.dual(&w);
        assert_eq!(d.dual(&w), x.character);
        assert_eq!(x.rep.dual().character(&w), d);
    }
}

#[test]
fn bilinear_types() {
    let w = group(1, 1, 4);
    let irr = irreducibles(&w).unwrap();
    let triv = Character::trivial(&w);
    let eps = Character::sign(&w).unwrap();
    // trivial rep, η = ε: ε⊗ε = 𝟙 ⊂ S²
    assert_eq!(
        bilinear_type(&w, &triv, &eps).unwrap(),
        BilinearType::Symmetric
    );
    // [3,1] is self-dual and orthogonal; with η = ε it meets ε only if ρ ≅ ρ⊗ε
    let refl = &irr.iter().find(|i| i.label() == "[3,1]").unwrap().character;
    assert_eq!(
        bilinear_type(&w, refl, &eps).unwrap(),
        BilinearType::Symmetric
    );
    assert_eq!(bilinear_type(&w, refl, &triv).unwrap(), BilinearType::None);
}

#[test]
fn binary_components_over_g444_pair_under_twisted_duality() {
    let w = group(1, 4, 4);
    let comps = clifford_split(
        &SeminormalModel::new(&mp("([1];[1];[1];[1])")),
        &w.params().unwrap(),
    );
    let eps = Character::sign(&w).unwrap();
    let triv = Character::trivial(&w);
    let chis: Vec<Character> = comps.iter().map(|c| c.character(&w)).collect();
    for (j, chi) in chis.iter().enumerate() {
        assert_eq!(chi.degree_usize(), Some(6));
        // ρ* ⊗ ε lands on the component two steps away, never on ρ itself
        let twisted = chi.dual(&w).tensor(&eps);
        assert_eq!(chis.iter().position(|x| *x == twisted), Some((j + 2) % 4));
        assert_eq!(bilinear_type(&w, chi, &triv).unwrap(), BilinearType::None);
        // each component is real: the plain invariant form is symmetric
        assert_eq!(*chi, chi.dual(&w));
        assert_eq!(multiplicity(&w, &chi.sym2(&w), &triv), Some(1));
    }
}

#[test]
fn restriction_follows_young_rule() {
    // G(3,1,3) → G(3,1,2): χ_𝛌 restricts to Σ_{𝛍 ↗ 𝛌} χ_𝛍
    let big = group(3, 1, 3);
    let small = group(3, 1, 2);
    let emb = infhecke::reps::padded_embedding(&big, &small);
    let small_irr = irreducibles(&small).unwrap();
    let small_chars: Vec<Character> = small_irr.iter().map(|i| i.character.clone()).collect();
    for x in irreducibles(&big).unwrap() {
        let mults =
            infhecke::reps::restriction_mults(&big, &x.character, &small, |h| emb[h], &small_chars)
                .unwrap();
        let mut expected = vec![0; small_irr.len()];
        for mu in x.shape.removals() {
            let i = small_irr.iter().position(|s| s.shape == mu).unwrap();
            expected[i] += 1;
        }
        assert_eq!(mults, expected, "{}", x.label());
        assert_eq!(mults.iter().filter(|&&m| m > 0).count(), x.shape.descents());
        let _ = multiplicity(&small, &small_chars[0], &small_chars[0]);
    }
}
