//! Sparse bivariate polynomials over Q.
//!
//! Terms are kept in a `BTreeMap` keyed by the exponent pair `(i, j)` of
//! `X^i Y^j`; zero coefficients are never stored. Everything here is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Exponent pair `(i, j)` standing for `X^i Y^j` (or `p^i q^j`).
pub type Exponent = (u32, u32);

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"num/den"`, the wire format for rationals.
pub fn rat_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// A weight direction `(rho, sigma)`, stored primitive (coprime components).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    rho: i64,
    sigma: i64,
}

impl Direction {
    pub fn new(rho: i64, sigma: i64) -> Result<Self> {
        if rho == 0 && sigma == 0 {
            return Err(Error::ZeroDirection);
        }
        let g = rho.gcd(&sigma);
        Ok(Direction {
            rho: rho / g,
            sigma: sigma / g,
        })
    }

    pub fn rho(&self) -> i64 {
        self.rho
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    /// `rho + sigma`, the weight of `XY`.
    pub fn weight_sum(&self) -> i64 {
        self.rho + self.sigma
    }

    pub fn weight(&self, e: Exponent) -> i64 {
        self.rho * e.0 as i64 + self.sigma * e.1 as i64
    }

    /// The direction `(sigma, rho)`.
    pub fn swapped(&self) -> Self {
        Direction {
            rho: self.sigma,
            sigma: self.rho,
        }
    }

    pub fn negated(&self) -> Self {
        Direction {
            rho: -self.rho,
            sigma: -self.sigma,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho, self.sigma)
    }
}

/// A weighted degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(v) => Some(v),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Graded-lex key with X > Y: total degree first, then the X exponent.
pub fn grlex_key(e: Exponent) -> (u32, u32) {
    (e.0 + e.1, e.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exponent, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds a polynomial from possibly repeated terms; duplicates are summed.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(iter: I) -> Self {
        let mut p = BiPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// E(f): exponent pairs carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().copied().collect()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i.max(j)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Leading monomial in graded-lex order (X > Y).
    pub fn leading_monomial(&self) -> Option<Exponent> {
        self.terms.keys().copied().max_by_key(|&e| grlex_key(e))
    }

    pub fn trailing_monomial(&self) -> Option<Exponent> {
        self.terms.keys().copied().min_by_key(|&e| grlex_key(e))
    }

    pub fn leading_coeff(&self) -> Option<Rational> {
        self.leading_monomial().map(|(i, j)| self.coeff(i, j))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = BiPoly::one();
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

    pub fn partial_x(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * rat(i as i64))),
        )
    }

    pub fn partial_y(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * rat(j as i64))),
        )
    }

    /// Substitutes `X -> x_img`, `Y -> y_img`.
    pub fn substitute(&self, x_img: &BiPoly, y_img: &BiPoly) -> BiPoly {
        let mut x_pows = vec![BiPoly::one()];
        let mut y_pows = vec![BiPoly::one()];
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            while x_pows.len() <= i as usize {
                let next = x_pows.last().unwrap() * x_img;
                x_pows.push(next);
            }
            while y_pows.len() <= j as usize {
                let next = y_pows.last().unwrap() * y_img;
                y_pows.push(next);
            }
            let t = (&x_pows[i as usize] * &y_pows[j as usize]).scale(c);
            out = out + t;
        }
        out
    }

    /// `v_{rho,sigma}(f)`: maximal weight over the support.
    pub fn v_deg(&self, d: Direction) -> Degree {
        self.terms
            .keys()
            .map(|&e| d.weight(e))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Sum of the terms attaining `v_deg(f, d)`.
    pub fn leading_form(&self, d: Direction) -> Result<BiPoly> {
        let top = self.v_deg(d).finite().ok_or(Error::ZeroInput)?;
        Ok(self.filter(|e| d.weight(e) == top))
    }

    pub(crate) fn filter(&self, keep: impl Fn(Exponent) -> bool) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| keep(e))
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn homog_decomp(&self, d: Direction) -> Result<HomogDecomp> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut buckets: BTreeMap<i64, BiPoly> = BTreeMap::new();
        for (&e, c) in &self.terms {
            buckets
                .entry(d.weight(e))
                .or_default()
                .add_term(e, c.clone());
        }
        Ok(HomogDecomp {
            parts: buckets.into_iter().rev().collect(),
        })
    }

    /// The degree `tau` when every support point has weight `tau`.
    /// Zero reports degree 0.
    pub fn homogeneous_degree(&self, d: Direction) -> Option<i64> {
        let mut weights = self.terms.keys().map(|&e| d.weight(e));
        match weights.next() {
            None => Some(0),
            Some(w) => weights.all(|x| x == w).then_some(w),
        }
    }

    /// Checks the Euler-operator characterisation
    /// `rho X df/dX + sigma Y df/dY = tau f` directly.
    pub fn euler_eigenvalue_check(&self, d: Direction, tau: i64) -> bool {
        let lhs = (&(&BiPoly::x() * &self.partial_x()).scale(&rat(d.rho())))
            + &(&BiPoly::y() * &self.partial_y()).scale(&rat(d.sigma()));
        lhs == self.scale(&rat(tau))
    }

    /// The directions (up to sign) for which `f` is homogeneous.
    pub fn homogeneity_directions(&self) -> HomogeneityDirections {
        let pts: Vec<Exponent> = self.terms.keys().copied().collect();
        if pts.len() <= 1 {
            return HomogeneityDirections::All;
        }
        let (i0, j0) = (pts[0].0 as i64, pts[0].1 as i64);
        let (i1, j1) = (pts[1].0 as i64, pts[1].1 as i64);
        // normal to the line through the first two points
        let d = normalize_sign(Direction::new(j1 - j0, i0 - i1).expect("distinct points"));
        let w = d.weight(pts[0]);
        if pts.iter().all(|&e| d.weight(e) == w) {
            HomogeneityDirections::One(d)
        } else {
            HomogeneityDirections::Empty
        }
    }

    /// `f = lambda * h^m` with `h` monic (graded-lex), or `None`.
    pub fn mth_root(&self, m: u32) -> Option<(Rational, BiPoly)> {
        mth_root(self, m)
    }

    pub fn power_decomposition(&self) -> Result<PowerDecomposition> {
        power_decomposition(self)
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, a: &str, b: &str) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (*e, c)), a, b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogeneityDirections {
    /// Monomials (and zero) are homogeneous for every direction.
    All,
    /// Support on a single line: one direction up to sign.
    One(Direction),
    Empty,
}

/// Picks the sign of a direction so that `rho + sigma > 0`, or `rho > 0` on
/// the anti-diagonal.
pub fn normalize_sign(d: Direction) -> Direction {
    if d.weight_sum() < 0 || (d.weight_sum() == 0 && d.rho() < 0) {
        d.negated()
    } else {
        d
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Exponent, &'a Rational)>,
    a: &str,
    b: &str,
) -> fmt::Result {
    let mut sorted: Vec<(Exponent, &Rational)> = terms.collect();
    if sorted.is_empty() {
        return write!(f, "0");
    }
    sorted.sort_by_key(|&(e, _)| std::cmp::Reverse(grlex_key(e)));
    for (k, ((i, j), c)) in sorted.into_iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let abs = c.abs();
        let mut parts: Vec<String> = Vec::new();
        if !abs.is_one() || (i == 0 && j == 0) {
            parts.push(abs.to_string());
        }
        for (sym, n) in [(a, i), (b, j)] {
            match n {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{n}")),
            }
        }
        write!(f, "{}", parts.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "X", "Y")
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

/// `(rho,sigma)`-homogeneous decomposition, highest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogDecomp {
    pub parts: Vec<(i64, BiPoly)>,
}

impl HomogDecomp {
    pub fn leading(&self) -> &BiPoly {
        &self.parts[0].1
    }

    pub fn sum(&self) -> BiPoly {
        self.parts
            .iter()
            .fold(BiPoly::zero(), |acc, (_, p)| &acc + p)
    }
}

/// Root extraction by descending graded-lex induction.
///
/// The leading monomial of `f` fixes the leading term of `h`; each further
/// term of `h` is read off the leading term of the residual `f/lambda - h^m`,
/// whose position is `(m-1)*lead(h) + beta` with coefficient `m * c_beta`.
pub fn mth_root(f: &BiPoly, m: u32) -> Option<(Rational, BiPoly)> {
    if f.is_zero() || m == 0 {
        return None;
    }
    if m == 1 {
        let lc = f.leading_coeff()?;
        let h = f.scale(&lc.recip());
        return Some((lc, h));
    }
    let lead = f.leading_monomial()?;
    if lead.0 % m != 0 || lead.1 % m != 0 {
        return None;
    }
    let lambda = f.leading_coeff()?;
    let target = f.scale(&lambda.recip());
    let alpha = (lead.0 / m, lead.1 / m);
    let mut h = BiPoly::monomial(Rational::one(), alpha.0, alpha.1);
    let mut last = alpha;
    let m_rat = rat(m as i64);
    loop {
        let residual = &target - &h.pow(m);
        let Some(r_lead) = residual.leading_monomial() else {
            return Some((lambda, h));
        };
        let shift = ((m - 1) * alpha.0, (m - 1) * alpha.1);
        if r_lead.0 < shift.0 || r_lead.1 < shift.1 {
            return None;
        }
        let beta = (r_lead.0 - shift.0, r_lead.1 - shift.1);
        if grlex_key(beta) >= grlex_key(last) {
            return None;
        }
        let c = residual.coeff(r_lead.0, r_lead.1) / &m_rat;
        h.add_term(beta, c);
        last = beta;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDecomposition {
    pub lambda: Rational,
    pub base: BiPoly,
    pub exponent: u32,
}

/// `f = lambda * h^m` with `h` monic and not a proper power.
pub fn power_decomposition(f: &BiPoly) -> Result<PowerDecomposition> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let lead = f.leading_monomial().expect("nonzero");
    let trail = f.trailing_monomial().expect("nonzero");
    let bound = [lead.0, lead.1, trail.0, trail.1]
        .into_iter()
        .fold(0u32, |acc, x| acc.gcd(&x));
    let mut candidates: Vec<u32> = (1..=bound.max(1)).filter(|m| bound % m == 0).collect();
    candidates.reverse();
    for m in candidates {
        if let Some((lambda, base)) = mth_root(f, m) {
            return Ok(PowerDecomposition {
                lambda,
                base,
                exponent: m,
            });
        }
    }
    unreachable!("m = 1 always succeeds")
}

/// Rational `gcd`-free check that `num/den` is a constant: returns `c` with
/// `num == c * den` when it exists.
pub fn constant_ratio(num: &BiPoly, den: &BiPoly) -> Option<Rational> {
    let (e, dc) = den.terms().next()?;
    let c = num.coeff(e.0, e.1) / dc;
    (den.scale(&c) == *num).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(c: i64, i: u32, j: u32) -> BiPoly {
        BiPoly::monomial(rat(c), i, j)
    }

    fn pentagon() -> BiPoly {
        xy(1, 1, 0) + xy(1, 2, 3) + xy(1, 3, 1) + xy(1, 4, 2) + xy(1, 5, 0)
    }

    fn dir(r: i64, s: i64) -> Direction {
        Direction::new(r, s).unwrap()
    }

    #[test]
    fn support_examples() {
        assert!(BiPoly::zero().support().is_empty());
        let f = xy(1, 1, 0) + xy(2, 0, 3);
        assert_eq!(f.support(), BTreeSet::from([(1, 0), (0, 3)]));
        assert_eq!(
            pentagon().support(),
            BTreeSet::from([(1, 0), (2, 3), (3, 1), (4, 2), (5, 0)])
        );
    }

    #[test]
    fn v_deg_examples() {
        assert_eq!(xy(1, 2, 3).v_deg(dir(0, 1)), Degree::Finite(3));
        assert_eq!(
            (xy(1, 1, 0) + xy(1, 0, 5)).v_deg(dir(1, 1)),
            Degree::Finite(5)
        );
        assert_eq!(BiPoly::zero().v_deg(dir(1, 1)), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(i64::MIN));
    }

    #[test]
    fn leading_form_examples() {
        let f = BiPoly::x() + BiPoly::y();
        assert_eq!(f.leading_form(dir(1, 1)).unwrap(), f);
        let g = BiPoly::x() + xy(1, 0, 3);
        assert_eq!(g.leading_form(dir(2, 1)).unwrap(), xy(1, 0, 3));
        assert_eq!(g.leading_form(dir(3, 1)).unwrap(), g);
        assert_eq!(
            BiPoly::zero().leading_form(dir(1, 1)),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn direction_is_normalized() {
        let d = dir(4, -6);
        assert_eq!((d.rho(), d.sigma()), (2, -3));
        assert_eq!(Direction::new(0, 0), Err(Error::ZeroDirection));
    }

    #[test]
    fn homog_decomp_examples() {
        let f = BiPoly::x() + BiPoly::y();
        let hd = f.homog_decomp(dir(1, 0)).unwrap();
        assert_eq!(hd.parts, vec![(1, BiPoly::x()), (0, BiPoly::y())]);
        let hd = f.homog_decomp(dir(1, 1)).unwrap();
        assert_eq!(hd.parts, vec![(1, f.clone())]);
        let g = xy(1, 2, 1) + BiPoly::x() + BiPoly::y();
        let hd = g.homog_decomp(dir(1, 1)).unwrap();
        assert_eq!(hd.parts, vec![(3, xy(1, 2, 1)), (1, f)]);
        assert_eq!(hd.sum(), g);
        assert!(BiPoly::zero().homog_decomp(dir(1, 1)).is_err());
    }

    #[test]
    fn homogeneity_examples() {
        assert_eq!(xy(1, 2, 2).homogeneous_degree(dir(1, 1)), Some(4));
        assert_eq!(
            (BiPoly::x() + BiPoly::y()).homogeneous_degree(dir(1, -1)),
            None
        );
        assert_eq!(
            BiPoly::constant(rat(5)).homogeneous_degree(dir(3, 7)),
            Some(0)
        );
        assert!(xy(1, 2, 2).euler_eigenvalue_check(dir(1, 1), 4));
        assert!(!xy(1, 2, 2).euler_eigenvalue_check(dir(1, 1), 3));
    }

    #[test]
    fn mth_root_examples() {
        assert_eq!(xy(4, 2, 2).mth_root(2), Some((rat(4), xy(1, 1, 1))));
        let sq = xy(1, 2, 0) + xy(2, 1, 1) + xy(1, 0, 2);
        assert_eq!(sq.mth_root(2), Some((rat(1), BiPoly::x() + BiPoly::y())));
        assert_eq!((BiPoly::x() + xy(1, 0, 3)).mth_root(2), None);
        // X^2 + Y^2 has an even leading monomial but is not a square
        assert_eq!((xy(1, 2, 0) + xy(1, 0, 2)).mth_root(2), None);
    }

    #[test]
    fn power_decomposition_examples() {
        let pd = xy(1, 2, 2).power_decomposition().unwrap();
        assert_eq!((pd.lambda, pd.base, pd.exponent), (rat(1), xy(1, 1, 1), 2));
        let f = BiPoly::x() + xy(1, 0, 3);
        let pd = f.power_decomposition().unwrap();
        assert_eq!((pd.base, pd.exponent), (f, 1));
        let cube = (BiPoly::x() + BiPoly::y()).pow(3).scale(&rat(8));
        let pd = cube.power_decomposition().unwrap();
        assert_eq!(
            (pd.lambda, pd.base, pd.exponent),
            (rat(8), BiPoly::x() + BiPoly::y(), 3)
        );
        assert_eq!(
            BiPoly::constant(rat(3)).power_decomposition(),
            Err(Error::ConstantInput)
        );
    }

    #[test]
    fn rational_wire_format() {
        assert_eq!(rat_to_string(&ratio(-2, 4)), "-1/2");
        assert_eq!(rat_to_string(&rat(3)), "3/1");
        assert_eq!(parse_rational("-1/2"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let f = xy(3, 2, 1) - BiPoly::constant(ratio(1, 2));
        assert_eq!(f.to_string(), "3 X^2 Y - 1/2");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!((-BiPoly::x() + BiPoly::y()).to_string(), "-X + Y");
    }
}
