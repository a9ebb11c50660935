#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_core::poly::{ratio, BiPoly, Direction, Rational};
use weyl_core::transforms::{AutWord, Generator};
use weyl_core::univariate::UniPoly;
use weyl_core::weyl::WeylElement;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

pub fn nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rational(rng);
        if r != ratio(0, 1) {
            return r;
        }
    }
}

pub fn terms(rng: &mut impl Rng, max_terms: usize, max_exp: u32) -> Vec<((u32, u32), Rational)> {
    let n = rng.gen_range(1..=max_terms);
    (0..n)
        .map(|_| {
            let e = (rng.gen_range(0..=max_exp), rng.gen_range(0..=max_exp));
            (e, nonzero(rng))
        })
        .collect()
}

/// A nonzero element with at most `max_terms` terms.
pub fn weyl(rng: &mut impl Rng, max_terms: usize, max_exp: u32) -> WeylElement {
    loop {
        let z = WeylElement::from_terms(terms(rng, max_terms, max_exp));
        if !z.is_zero() {
            return z;
        }
    }
}

pub fn nonconstant_weyl(rng: &mut impl Rng, max_terms: usize, max_exp: u32) -> WeylElement {
    loop {
        let z = weyl(rng, max_terms, max_exp);
        if !z.is_constant() {
            return z;
        }
    }
}

pub fn poly(rng: &mut impl Rng, max_terms: usize, max_exp: u32) -> BiPoly {
    loop {
        let f = BiPoly::from_terms(terms(rng, max_terms, max_exp));
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn unipoly(rng: &mut impl Rng, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    UniPoly::new((0..=deg).map(|_| rational(rng)).collect())
}

/// A direction with `rho + sigma > 0`.
pub fn positive_direction(rng: &mut impl Rng) -> Direction {
    loop {
        let (r, s) = (rng.gen_range(-4..=5), rng.gen_range(-4..=5));
        if r + s > 0 {
            return Direction::new(r, s).unwrap();
        }
    }
}

pub fn any_direction(rng: &mut impl Rng) -> Direction {
    loop {
        let (r, s) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        if (r, s) != (0, 0) {
            return Direction::new(r, s).unwrap();
        }
    }
}

/// Words in the group generated by the scalings and the rotation.
pub fn g1_word(rng: &mut impl Rng, max_len: usize) -> AutWord {
    let n = rng.gen_range(0..=max_len);
    AutWord(
        (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Generator::Rot90
                } else {
                    Generator::Scale(nonzero(rng))
                }
            })
            .collect(),
    )
}

/// As [`g1_word`] with the pair swap added.
pub fn u_word(rng: &mut impl Rng, max_len: usize) -> AutWord {
    let n = rng.gen_range(0..=max_len);
    AutWord(
        (0..n)
            .map(|_| match rng.gen_range(0..3) {
                0 => Generator::Rot90,
                1 => Generator::Swap,
                _ => Generator::Scale(nonzero(rng)),
            })
            .collect(),
    )
}

fn small_unipoly(rng: &mut impl Rng) -> UniPoly {
    let deg = rng.gen_range(0..=2);
    UniPoly::new((0..=deg).map(|_| ratio(rng.gen_range(-2..=2), 1)).collect())
}

/// Words over all element automorphisms, kept small so images stay cheap.
pub fn aut_word(rng: &mut impl Rng, max_len: usize) -> AutWord {
    let n = rng.gen_range(0..=max_len);
    let gens = [0, 1, 2, 3, 4];
    AutWord(
        (0..n)
            .map(|_| match gens.choose(rng).unwrap() {
                0 => Generator::Rot90,
                1 => Generator::Scale(nonzero(rng)),
                2 => Generator::TriUpper(small_unipoly(rng)),
                3 => Generator::TriLower(small_unipoly(rng)),
                _ => {
                    let (a, b, c) = (
                        nonzero(rng),
                        ratio(rng.gen_range(-2..=2), 1),
                        ratio(rng.gen_range(-2..=2), 1),
                    );
                    // d = (1 + bc) / a keeps the determinant at 1
                    let d = (Rational::from_integer(1.into()) + &b * &c) / &a;
                    Generator::linear(a, b, c, d).unwrap()
                }
            })
            .collect(),
    )
}

pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        ..Default::default()
    }
}

pub mod strategy {
    use proptest::prelude::*;

    use weyl_core::poly::{ratio, BiPoly, Direction, Rational};
    use weyl_core::weyl::WeylElement;

    pub fn rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
    }

    pub fn nonzero() -> impl Strategy<Value = Rational> {
        rational().prop_filter("nonzero", |r| *r != ratio(0, 1))
    }

    fn terms(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Vec<((u32, u32), Rational)>> {
        prop::collection::vec(((0..=max_exp, 0..=max_exp), nonzero()), 1..=max_terms)
    }

    pub fn weyl(max_terms: usize, max_exp: u32) -> impl Strategy<Value = WeylElement> {
        terms(max_terms, max_exp)
            .prop_map(WeylElement::from_terms)
            .prop_filter("nonzero", |z| !z.is_zero())
    }

    pub fn poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = BiPoly> {
        terms(max_terms, max_exp)
            .prop_map(BiPoly::from_terms)
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    pub fn direction() -> impl Strategy<Value = Direction> {
        (-4i64..=4, -4i64..=4)
            .prop_filter("nonzero", |&(r, s)| (r, s) != (0, 0))
            .prop_map(|(r, s)| Direction::new(r, s).unwrap())
    }

    pub fn positive_direction() -> impl Strategy<Value = Direction> {
        (-4i64..=5, -4i64..=5)
            .prop_filter("rho + sigma > 0", |&(r, s)| r + s > 0)
            .prop_map(|(r, s)| Direction::new(r, s).unwrap())
    }

    /// A homogeneous element of `D_k` with exponents at most `max_exp`.
    pub fn graded(k: i64, max_exp: u32) -> impl Strategy<Value = WeylElement> {
        prop::collection::vec((0..=max_exp, nonzero()), 1..=3)
            .prop_map(move |v| {
                WeylElement::from_terms(v.into_iter().filter_map(|(i, c)| {
                    let j = i as i64 + k;
                    (j >= 0).then_some(((i, j as u32), c))
                }))
            })
            .prop_filter("nonzero", |z| !z.is_zero())
    }
}
