use std::sync::Arc;

use proptest::prelude::*;
use psl_sqs::design::{design_from_str, design_to_string, Block};
use psl_sqs::{Family, Field, ProjectiveGroup, Semilinear};

fn small_field() -> impl Strategy<Value = (u32, u32)> {
    prop_oneof![Just((2, 3)), Just((3, 2)), Just((3, 3)), Just((5, 2)), Just((7, 1)), Just((13, 1))]
}

proptest! {
    #[test]
    fn field_axioms((p, d) in small_field(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = Field::new(p, d).unwrap();
        let q = f.q();
        let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), psl_sqs::FieldElement::ZERO);
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), psl_sqs::FieldElement::ONE);
            prop_assert_eq!(f.frobenius(a, d), a);
        }
    }

    #[test]
    fn composition_matches_permutation_product(
        q in prop_oneof![Just(8u64), Just(9), Just(25), Just(27)],
        word in proptest::collection::vec(0usize..8, 1..12),
        word2 in proptest::collection::vec(0usize..8, 1..12),
    ) {
        let g = ProjectiveGroup::standard(Family::PGammaL, 2, q).unwrap();
        let act = g.action().clone();
        let gens = g.generators();
        let build = |w: &[usize]| w.iter().fold(act.identity(), |acc, &i| act.compose(&acc, &gens[i % gens.len()]));
        let x = build(&word);
        let y = build(&word2);
        let xy = act.compose(&x, &y);
        let px = act.permutation(&x);
        let py = act.permutation(&y);
        let pxy = act.permutation(&xy);
        for pt in 0..act.degree() {
            prop_assert_eq!(pxy[pt as usize], px[py[pt as usize] as usize]);
        }
        let id = act.compose(&x, &act.inverse(&x));
        prop_assert!(act.is_identity(&id));
        // Canonical forms: equal permutations imply equal elements.
        let again = act.compose(&act.compose(&xy, &act.inverse(&y)), &act.identity());
        prop_assert_eq!(again, x);
    }

    #[test]
    fn subset_orbits_partition(q in prop_oneof![Just(7u64), Just(8), Just(9), Just(11)], k in 3usize..5) {
        let g = ProjectiveGroup::standard(Family::PSL, 2, q).unwrap();
        let orbits = g.orbits_on_k_subsets(k).unwrap();
        let total: u64 = orbits.sizes().iter().sum();
        prop_assert_eq!(total, psl_sqs::subsets::binomial(q + 1, k as u64));
        let order = g.order().unwrap();
        for (id, rep) in orbits.representatives().iter().enumerate() {
            prop_assert_eq!(orbits.orbit_id(rep), id);
            prop_assert_eq!(order % orbits.sizes()[id], 0);
        }
    }

    #[test]
    fn design_text_round_trip(seed in proptest::collection::btree_set(proptest::collection::btree_set(0u32..12, 4), 1..20)) {
        let blocks: Vec<Block> = seed.into_iter().map(|s| Block::new(s.into_iter().collect()).unwrap()).collect();
        let design = psl_sqs::Design::new(12, 4, 3, 1, blocks).unwrap();
        let text = design_to_string(&design);
        prop_assert_eq!(design_from_str(&text).unwrap(), design);
    }
}

#[test]
fn frobenius_fixes_the_prime_subline() {
    let f = Arc::new(Field::new(3, 2).unwrap());
    let s = Semilinear::new(f, 2).unwrap();
    let frob = s.frobenius_element();
    let fixed = (0..s.degree()).filter(|&x| s.apply(&frob, x) == x).count();
    assert_eq!(fixed, 4);
}
