mod common;

use common::strategy::{graded, nonzero, positive_direction, rational, weyl};
use proptest::prelude::*;

use weyl_core::poly::{rat, Rational};
use weyl_core::univariate::UniPoly;
use weyl_core::weyl::{
    centralizer_falsifier, dixmier_leading_check, shift_identity_check, WeylElement,
};

fn pq() -> WeylElement {
    WeylElement::monomial(rat(1), 1, 1)
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn phi_round_trips(z in weyl(6, 5)) {
        prop_assert_eq!(WeylElement::phi_inv(&z.phi()), z);
    }

    #[test]
    fn product_is_associative(a in weyl(3, 3), b in weyl(3, 3), c in weyl(3, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_distributes(a in weyl(3, 3), b in weyl(3, 3), c in weyl(3, 3)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn euler_operator_reads_the_grade((k, z) in (-3i64..=3).prop_flat_map(|k| (Just(k), graded(k, 3)))) {
        prop_assert_eq!(pq().commutator(&z), z.scale(&Rational::from_integer(k.into())));
    }

    #[test]
    fn nonnegative_part_brackets_upward(a in weyl(5, 3), b in weyl(5, 3)) {
        let keep = |z: &WeylElement| WeylElement::from_terms(
            z.terms().filter(|(&(i, j), _)| j >= i).map(|(&e, c)| (e, c.clone())),
        );
        let (a, b) = (keep(&a), keep(&b));
        let br = a.commutator(&b);
        prop_assert!(br.is_zero() || br.in_d_geq(1), "{}", br);
    }

    #[test]
    fn leading_form_theorem(z in weyl(4, 3), w in weyl(4, 3), d in positive_direction()) {
        let check = dixmier_leading_check(&z, &w, d).unwrap();
        prop_assert!(check.product_ok);
        prop_assert!(check.bracket_ok, "{:?}", check);
    }

    #[test]
    fn graded_components_multiply(z in weyl(4, 3), w in weyl(4, 3)) {
        let (dz, dw) = (z.graded_decomp().unwrap(), w.graded_decomp().unwrap());
        let dzw = (&z * &w).graded_decomp().unwrap();
        prop_assert_eq!(dzw.leading(), &(dz.leading() * dw.leading()));
        prop_assert_eq!(dzw.sum(), &z * &w);
    }

    #[test]
    fn shift_identity_holds(coeffs in prop::collection::vec(rational(), 1..=4), k in 0u32..=4) {
        prop_assert!(shift_identity_check(&UniPoly::new(coeffs), k));
    }

    #[test]
    fn scalar_multiples_of_q_have_cyclic_centralizers(c in nonzero(), n in 1u32..=2) {
        let z = WeylElement::q().pow(n).scale(&c);
        let found = centralizer_falsifier(&z, 5).unwrap();
        if n == 1 {
            prop_assert!(found.is_none());
        } else {
            prop_assert!(found.is_some());
        }
    }
}

#[test]
fn centralizer_of_pq_is_polynomial_in_pq() {
    assert_eq!(centralizer_falsifier(&pq(), 5).unwrap(), None);
}

#[test]
fn centralizer_of_p_squared_contains_p() {
    let z = WeylElement::p().pow(2);
    let w = centralizer_falsifier(&z, 4)
        .unwrap()
        .expect("p commutes with p^2");
    assert!(z.commutator(&w).is_zero());
}
