//! Dense univariate polynomials over Q, used for the one-variable data that
//! appears in generators and normal forms (`g(p)`, `h(z)`, `f(Y)`, ...).

use std::fmt;

use num_traits::{One, Zero};

use crate::poly::{rat, BiPoly, Rational};

/// Coefficients in ascending order; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `a*X + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            acc.mul(inner).add(&UniPoly::constant(c.clone()))
        })
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in any ring given by `one`, `mul` and `add_scalar`.
    pub fn eval_in<T: Clone>(
        &self,
        x: &T,
        zero: T,
        mul: impl Fn(&T, &T) -> T,
        add_const: impl Fn(&T, &Rational) -> T,
    ) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(zero, |acc, c| add_const(&mul(&acc, x), c))
    }

    /// The same coefficients placed on powers of `X`.
    pub fn in_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((k as u32, 0), c.clone())),
        )
    }

    /// The same coefficients placed on powers of `Y`.
    pub fn in_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        )
    }

    /// Reads a polynomial supported on the X axis; `None` otherwise.
    pub fn from_x_axis(f: &BiPoly) -> Option<UniPoly> {
        let mut v = Vec::new();
        for (&(i, j), c) in f.terms() {
            if j != 0 {
                return None;
            }
            if v.len() <= i as usize {
                v.resize(i as usize + 1, Rational::zero());
            }
            v[i as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }

    /// Reads a polynomial supported on the Y axis; `None` otherwise.
    pub fn from_y_axis(f: &BiPoly) -> Option<UniPoly> {
        let mut v = Vec::new();
        for (&(i, j), c) in f.terms() {
            if i != 0 {
                return None;
            }
            if v.len() <= j as usize {
                v.resize(j as usize + 1, Rational::zero());
            }
            v[j as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }

    pub fn x() -> UniPoly {
        UniPoly::monomial(Rational::one(), 1)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.in_x())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn trims_and_composes() {
        let f = UniPoly::new(vec![rat(1), rat(0), rat(1), rat(0)]);
        assert_eq!(f.degree(), Some(2));
        // (X - 2)^2 + 1
        let g = f.compose(&UniPoly::linear(rat(1), rat(-2)));
        assert_eq!(g.coeffs(), &[rat(5), rat(-4), rat(1)]);
        assert_eq!(g.eval(&rat(2)), rat(1));
        assert_eq!(g.derivative().coeffs(), &[rat(-4), rat(2)]);
    }

    #[test]
    fn axis_round_trip() {
        let f = UniPoly::new(vec![ratio(1, 2), rat(0), rat(3)]);
        assert_eq!(UniPoly::from_x_axis(&f.in_x()), Some(f.clone()));
        assert_eq!(UniPoly::from_y_axis(&f.in_y()), Some(f.clone()));
        assert_eq!(UniPoly::from_y_axis(&f.in_x()), None);
    }
}
