//! The first Weyl algebra `A_1 = Q<p,q>/(pq - qp - 1)` in the normal-ordered
//! basis `p^i q^j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve};
use crate::poisson::poisson_bracket;
use crate::poly::{rat, BiPoly, Degree, Direction, Exponent, Rational};
use crate::univariate::UniPoly;

/// An element `sum c_ij p^i q^j` of `A_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeylElement {
    poly: BiPoly,
}

impl WeylElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c p^i q^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        WeylElement {
            poly: BiPoly::monomial(c, i, j),
        }
    }

    pub fn p() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(iter: I) -> Self {
        WeylElement {
            poly: BiPoly::from_terms(iter),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.poly.terms()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.poly.coeff(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.poly.is_constant()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.poly.constant_term()
    }

    pub fn max_exponent(&self) -> u32 {
        self.poly.max_exponent()
    }

    /// Phi: `p^i q^j -> X^i Y^j`, a linear bijection (not multiplicative).
    pub fn phi(&self) -> BiPoly {
        self.poly.clone()
    }

    pub fn phi_inv(f: &BiPoly) -> Self {
        WeylElement { poly: f.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WeylElement {
            poly: self.poly.scale(c),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = WeylElement::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        &(self * other) - &(other * self)
    }

    pub fn v_deg(&self, d: Direction) -> Degree {
        self.poly.v_deg(d)
    }

    /// The polynomial `(rho,sigma)`-associated with `z`.
    pub fn leading_form(&self, d: Direction) -> Result<BiPoly> {
        self.poly.leading_form(d)
    }

    /// Decomposition into `ad(pq)`-eigenspaces `D_k`, highest `k` first.
    pub fn graded_decomp(&self) -> Result<GradedDecomp> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut buckets: BTreeMap<i64, BiPoly> = BTreeMap::new();
        for (&e, c) in self.terms() {
            buckets.entry(grade(e)).or_default().add_term(e, c.clone());
        }
        Ok(GradedDecomp {
            parts: buckets
                .into_iter()
                .rev()
                .map(|(k, poly)| (k, WeylElement { poly }))
                .collect(),
        })
    }

    /// `Some(k)` when `z` lies in a single `D_k` (zero reports 0).
    pub fn homogeneous_grade(&self) -> Option<i64> {
        let mut grades = self.terms().map(|(&e, _)| grade(e));
        match grades.next() {
            None => Some(0),
            Some(k) => grades.all(|x| x == k).then_some(k),
        }
    }

    pub fn min_grade(&self) -> Option<i64> {
        self.terms().map(|(&e, _)| grade(e)).min()
    }

    pub fn max_grade(&self) -> Option<i64> {
        self.terms().map(|(&e, _)| grade(e)).max()
    }

    /// Membership in `D_{>=k}`; zero belongs to every such subspace.
    pub fn in_d_geq(&self, k: i64) -> bool {
        self.terms().all(|(&e, _)| grade(e) >= k)
    }

    pub fn in_d_leq(&self, k: i64) -> bool {
        self.terms().all(|(&e, _)| grade(e) <= k)
    }

    /// Evaluates `f(self)` by Horner's rule.
    pub fn eval_poly(f: &UniPoly, z: &WeylElement) -> WeylElement {
        f.eval_in(
            z,
            WeylElement::zero(),
            |a, b| a * b,
            |a, c| a + &WeylElement::constant(c.clone()),
        )
    }
}

/// `j - i`, the `ad(pq)` eigenvalue of `p^i q^j`.
pub fn grade(e: Exponent) -> i64 {
    e.1 as i64 - e.0 as i64
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt_with(f, "p", "q")
    }
}

/// `p^{s1} q^{i1} * p^{s2} q^{i2}
///   = sum_j (-1)^j j! C(i1,j) C(s2,j) p^{s1+s2-j} q^{i1+i2-j}`.
pub fn monomial_product(a: Exponent, b: Exponent) -> Vec<(Exponent, BigInt)> {
    let (s1, i1) = a;
    let (s2, i2) = b;
    let mut out = Vec::new();
    let mut c = BigInt::one();
    for j in 0..=i1.min(s2) {
        if j > 0 {
            // c_j = -c_{j-1} (i1-j+1)(s2-j+1) / j, always exact
            c = -(c * BigInt::from(i1 - j + 1) * BigInt::from(s2 - j + 1)) / BigInt::from(j);
        }
        out.push(((s1 + s2 - j, i1 + i2 - j), c.clone()));
    }
    out
}

impl Mul<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        let mut out = BiPoly::zero();
        for (&a, ca) in self.terms() {
            for (&b, cb) in rhs.terms() {
                let ab = ca * cb;
                for (e, k) in monomial_product(a, b) {
                    out.add_term(e, &ab * Rational::from_integer(k));
                }
            }
        }
        WeylElement { poly: out }
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: WeylElement) -> WeylElement {
        &self * &rhs
    }
}

impl Add<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        WeylElement {
            poly: &self.poly + &rhs.poly,
        }
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: WeylElement) -> WeylElement {
        WeylElement {
            poly: self.poly + rhs.poly,
        }
    }
}

impl Sub<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        WeylElement {
            poly: &self.poly - &rhs.poly,
        }
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: WeylElement) -> WeylElement {
        &self - &rhs
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement { poly: -&self.poly }
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

/// Graded decomposition `z = z_0 + ... + z_m`, `z_i` in `D_{k_i}`,
/// `k_0 > k_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomp {
    pub parts: Vec<(i64, WeylElement)>,
}

impl GradedDecomp {
    pub fn leading(&self) -> &WeylElement {
        &self.parts[0].1
    }

    pub fn lowest(&self) -> (i64, &WeylElement) {
        let (k, z) = self.parts.last().expect("nonempty");
        (*k, z)
    }

    pub fn sum(&self) -> WeylElement {
        self.parts
            .iter()
            .fold(WeylElement::zero(), |acc, (_, z)| &acc + z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketCase {
    /// `{f,g} != 0`: the bracket's leading form is `{f,g}` and the degree
    /// is exactly `v(z) + v(w) - (rho + sigma)`.
    Eq,
    /// `{f,g} = 0`: the degree drops strictly below that bound.
    StrictDrop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DixmierCheck {
    pub product_ok: bool,
    pub bracket_case: BracketCase,
    pub bracket_ok: bool,
}

/// Evaluates both sides of the leading-form theorem for `z, w` at `d`.
pub fn dixmier_leading_check(
    z: &WeylElement,
    w: &WeylElement,
    d: Direction,
) -> Result<DixmierCheck> {
    if z.is_zero() || w.is_zero() {
        return Err(Error::ZeroInput);
    }
    if d.weight_sum() <= 0 {
        return Err(Error::Precondition("rho + sigma must be positive".into()));
    }
    let f = z.leading_form(d)?;
    let g = w.leading_form(d)?;
    let product_ok = (z * w).leading_form(d)? == &f * &g;
    let fg = poisson_bracket(&f, &g);
    let bracket = z.commutator(w);
    let bound = z.v_deg(d).finite().unwrap() + w.v_deg(d).finite().unwrap() - d.weight_sum();
    let (bracket_case, bracket_ok) = if fg.is_zero() {
        (
            BracketCase::StrictDrop,
            bracket.v_deg(d) < Degree::Finite(bound),
        )
    } else {
        let ok = bracket.v_deg(d) == Degree::Finite(bound) && bracket.leading_form(d)? == fg;
        (BracketCase::Eq, ok)
    };
    Ok(DixmierCheck {
        product_ok,
        bracket_case,
        bracket_ok,
    })
}

/// Checks `q^k f(pq) = f(pq - k) q^k` inside `A_1`.
pub fn shift_identity_check(f: &UniPoly, k: u32) -> bool {
    let pq = WeylElement::monomial(Rational::one(), 1, 1);
    let qk = WeylElement::q().pow(k);
    let lhs = &qk * &WeylElement::eval_poly(f, &pq);
    let shifted = f.compose(&UniPoly::linear(Rational::one(), rat(-(k as i64))));
    let rhs = &WeylElement::eval_poly(&shifted, &pq) * &qk;
    lhs == rhs
}

/// The powers of `z` (grade `k`) lying in `D_j` with exponents at most `bound`.
fn powers_in_grade(z: &WeylElement, k: i64, j: i64, bound: u32) -> Vec<WeylElement> {
    if k != 0 {
        return if j % k == 0 && j / k >= 0 {
            let zp = z.pow((j / k) as u32);
            if zp.max_exponent() <= bound {
                vec![zp]
            } else {
                Vec::new()
            }
        } else {
            Vec::new()
        };
    }
    if j != 0 {
        return Vec::new();
    }
    let mut out = vec![WeylElement::one()];
    loop {
        let next = &out[out.len() - 1] * z;
        if next.max_exponent() > bound {
            return out;
        }
        out.push(next);
    }
}

fn in_span(w: &WeylElement, span: &[WeylElement], basis: &[Exponent]) -> bool {
    if span.is_empty() {
        return w.is_zero();
    }
    let matrix: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&(i, s)| span.iter().map(|v| v.coeff(i, s)).collect())
        .collect();
    let rhs: Vec<Rational> = basis.iter().map(|&(i, s)| w.coeff(i, s)).collect();
    solve(&matrix, &rhs, span.len()).is_some()
}

/// Searches `C(z)` for an element outside `Q[z]`, for homogeneous `z`.
///
/// For every grade `j`, solves `[z, w] = 0` over all `w` in `D_j` whose
/// exponents are at most `bound` and compares the solution space with
/// `Q[z] ∩ D_j`. Returns a centralizing element not in `Q[z]` if one exists
/// within the bound.
pub fn centralizer_falsifier(z: &WeylElement, bound: u32) -> Result<Option<WeylElement>> {
    let k = z.homogeneous_grade().ok_or(Error::Precondition(
        "centralizer falsifier needs a homogeneous element".into(),
    ))?;
    if z.is_constant() {
        return Err(Error::ConstantInput);
    }
    let n = bound as i64;
    for j in -n..=n {
        let basis: Vec<Exponent> = (0..=n)
            .filter(|&i| i + j >= 0 && i + j <= n)
            .map(|i| (i as u32, (i + j) as u32))
            .collect();
        if basis.is_empty() {
            continue;
        }
        let images: Vec<WeylElement> = basis
            .iter()
            .map(|&(i, s)| z.commutator(&WeylElement::monomial(Rational::one(), i, s)))
            .collect();
        let mut rows_index: BTreeMap<Exponent, usize> = BTreeMap::new();
        for img in &images {
            for (&e, _) in img.terms() {
                let next = rows_index.len();
                rows_index.entry(e).or_insert(next);
            }
        }
        let mut matrix = vec![vec![Rational::zero(); basis.len()]; rows_index.len()];
        for (col, img) in images.iter().enumerate() {
            for (e, c) in img.terms() {
                matrix[rows_index[e]][col] = c.clone();
            }
        }
        let kernel = nullspace(&matrix, basis.len());
        let powers = powers_in_grade(z, k, j, bound);
        for v in kernel {
            let w = WeylElement::from_terms(basis.iter().copied().zip(v));
            if !in_span(&w, &powers, &basis) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn pq(c: i64, i: u32, j: u32) -> WeylElement {
        WeylElement::monomial(rat(c), i, j)
    }

    fn dir(r: i64, s: i64) -> Direction {
        Direction::new(r, s).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(pq(1, 1, 2).phi(), BiPoly::monomial(rat(1), 1, 2));
        assert!(WeylElement::zero().phi().is_zero());
        let z = pq(3, 2, 1) - WeylElement::constant(ratio(1, 2));
        let f = BiPoly::monomial(rat(3), 2, 1) - BiPoly::constant(ratio(1, 2));
        assert_eq!(z.phi(), f);
        assert_eq!(WeylElement::phi_inv(&f), z);
    }

    #[test]
    fn product_examples() {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        assert_eq!(&q * &p, pq(1, 1, 1) - WeylElement::one());
        assert_eq!(&p * &q, pq(1, 1, 1));
        let q2p2 = &q.pow(2) * &p.pow(2);
        assert_eq!(q2p2, pq(1, 2, 2) - pq(4, 1, 1) + pq(2, 0, 0));
    }

    #[test]
    fn commutator_examples() {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        assert_eq!(p.commutator(&q), WeylElement::one());
        assert_eq!(pq(1, 1, 1).commutator(&pq(1, 2, 3)), pq(1, 2, 3));
        let z = &p + &q.pow(2);
        assert!(z.commutator(&z).is_zero());
    }

    #[test]
    fn graded_decomp_examples() {
        let z = pq(1, 1, 1) + pq(1, 2, 1) + pq(1, 0, 1);
        let gd = z.graded_decomp().unwrap();
        assert_eq!(
            gd.parts,
            vec![(1, pq(1, 0, 1)), (0, pq(1, 1, 1)), (-1, pq(1, 2, 1))]
        );
        assert_eq!(gd.sum(), z);
        assert_eq!(
            pq(1, 5, 0).graded_decomp().unwrap().parts,
            vec![(-5, pq(1, 5, 0))]
        );
        assert_eq!(
            WeylElement::one().graded_decomp().unwrap().parts,
            vec![(0, WeylElement::one())]
        );
        assert_eq!(WeylElement::zero().graded_decomp(), Err(Error::ZeroInput));
    }

    #[test]
    fn membership_examples() {
        assert!((pq(1, 0, 1) + pq(1, 1, 2)).in_d_geq(0));
        let s = pq(1, 1, 0) + pq(1, 0, 1);
        assert!(!s.in_d_geq(0));
        assert!(s.in_d_geq(-1));
        assert!(WeylElement::zero().in_d_geq(7) && WeylElement::zero().in_d_leq(-7));
    }

    #[test]
    fn leading_form_examples() {
        let z = WeylElement::p() + pq(1, 0, 2);
        assert_eq!(
            z.leading_form(dir(1, 1)).unwrap(),
            BiPoly::monomial(rat(1), 0, 2)
        );
        assert_eq!(
            WeylElement::p().leading_form(dir(3, -1)).unwrap(),
            BiPoly::x()
        );
        let fig = pq(1, 1, 0) + pq(1, 2, 3) + pq(1, 3, 1) + pq(1, 4, 2) + pq(1, 5, 0);
        assert_eq!(
            fig.leading_form(dir(1, 1)).unwrap(),
            BiPoly::monomial(rat(1), 4, 2)
        );
    }

    #[test]
    fn dixmier_examples() {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        let c = dixmier_leading_check(&p, &q, dir(1, 1)).unwrap();
        assert_eq!(c.bracket_case, BracketCase::Eq);
        assert!(c.product_ok && c.bracket_ok);

        let z = &p + &q.pow(2);
        let c = dixmier_leading_check(&z, &z, dir(1, 1)).unwrap();
        assert_eq!(c.bracket_case, BracketCase::StrictDrop);
        assert!(c.product_ok && c.bracket_ok);

        let c = dixmier_leading_check(&pq(1, 1, 1), &p, dir(1, 1)).unwrap();
        assert_eq!(c.bracket_case, BracketCase::Eq);
        assert!(c.bracket_ok);
        assert_eq!(pq(1, 1, 1).commutator(&p), -p.clone());

        assert!(dixmier_leading_check(&p, &q, dir(1, -1)).is_err());
    }

    #[test]
    fn shift_identity_examples() {
        assert!(shift_identity_check(&UniPoly::x(), 1));
        assert!(shift_identity_check(&UniPoly::constant(rat(1)), 3));
        assert!(shift_identity_check(&UniPoly::monomial(rat(1), 2), 2));
    }

    #[test]
    fn centralizer_of_q_is_polynomials_in_q() {
        for lambda in [rat(1), ratio(-3, 2)] {
            let z = WeylElement::q().scale(&lambda);
            assert_eq!(centralizer_falsifier(&z, 6).unwrap(), None);
        }
        // pq^2 in D_1 also has cyclic centralizer
        assert_eq!(centralizer_falsifier(&pq(1, 1, 2), 5).unwrap(), None);
    }

    #[test]
    fn falsifier_finds_square_roots() {
        // C(q^2) = Q[q] is larger than Q[q^2]
        let w = centralizer_falsifier(&pq(1, 0, 2), 4).unwrap().unwrap();
        assert!(pq(1, 0, 2).commutator(&w).is_zero());
    }
}
