mod common;

use common::strategy::{graded, nonzero, poly, weyl};
use proptest::prelude::*;

use weyl_core::poisson::poisson_bracket;
use weyl_core::poly::rat;
use weyl_core::transforms::{
    apply_aut, apply_poisson_aut, apply_to_pair, jacobian_det, phi_equivariant, AutWord, Generator,
};
use weyl_core::weyl::WeylElement;

fn aut_word() -> impl Strategy<Value = AutWord> {
    any::<u64>().prop_map(|seed| common::aut_word(&mut common::rng(seed), 3))
}

fn u_word() -> impl Strategy<Value = AutWord> {
    any::<u64>().prop_map(|seed| common::u_word(&mut common::rng(seed), 5))
}

proptest! {
    #![proptest_config(common::config(120))]

    #[test]
    fn commutators_are_preserved(word in aut_word(), z in weyl(3, 2), w in weyl(3, 2)) {
        let img = |x: &WeylElement| apply_aut(&word, x).unwrap();
        prop_assert_eq!(img(&z).commutator(&img(&w)), img(&z.commutator(&w)));
    }

    #[test]
    fn poisson_brackets_are_preserved(word in aut_word(), f in poly(3, 2), g in poly(3, 2)) {
        let img = |x| apply_poisson_aut(&word, x).unwrap();
        prop_assert_eq!(poisson_bracket(&img(&f), &img(&g)), img(&poisson_bracket(&f, &g)));
    }

    #[test]
    fn jacobian_is_one(word in aut_word()) {
        prop_assert_eq!(jacobian_det(&word).unwrap(), rat(1));
    }

    #[test]
    fn inverse_words_undo(word in aut_word(), z in weyl(3, 2)) {
        let back = apply_aut(&word.inverse(), &apply_aut(&word, &z).unwrap()).unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn pair_words_undo(word in u_word()) {
        let pair = (WeylElement::p(), WeylElement::q());
        let there = apply_to_pair(&word, &pair).unwrap();
        prop_assert_eq!(apply_to_pair(&word.inverse(), &there).unwrap(), pair);
    }

    #[test]
    fn scaling_keeps_support(c in nonzero(), z in weyl(5, 4)) {
        let img = apply_aut(&AutWord(vec![Generator::Scale(c.clone())]), &z).unwrap();
        let support = |x: &WeylElement| x.terms().map(|(e, _)| *e).collect::<Vec<_>>();
        prop_assert_eq!(support(&img), support(&z));
        prop_assert!(phi_equivariant(&AutWord(vec![Generator::Scale(c)]), &z).unwrap());
    }

    #[test]
    fn rotation_reverses_grades((k, z) in (-3i64..=3).prop_flat_map(|k| (Just(k), graded(k, 3)))) {
        let img = apply_aut(&AutWord(vec![Generator::Rot90]), &z).unwrap();
        let lo = img.graded_decomp().unwrap();
        prop_assert!(lo.parts.iter().all(|(j, _)| *j == -k), "{:?}", lo.parts);
    }
}
