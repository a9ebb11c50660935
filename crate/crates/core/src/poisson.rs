//! The symplectic Poisson algebra on `Q[X,Y]`: the bracket, the
//! commuting-pair classification for homogeneous elements, centralizer
//! generators and cone containment.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{violation, Error, Result};
use crate::geometry::{cone_of, Point};
use crate::poly::{constant_ratio, rat, BiPoly, Direction, Rational};

/// `{f,g} = f_X g_Y - f_Y g_X`, via the monomial rule
/// `{X^i Y^j, X^k Y^l} = (il - jk) X^{i+k-1} Y^{j+l-1}`.
pub fn poisson_bracket(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (&(i, j), a) in f.terms() {
        for (&(k, l), b) in g.terms() {
            let det = i as i64 * l as i64 - j as i64 * k as i64;
            if det == 0 {
                continue;
            }
            // det != 0 forces i+k >= 1 and j+l >= 1
            assert!(i + k >= 1 && j + l >= 1, "negative exponent in bracket");
            out.add_term((i + k - 1, j + l - 1), a * b * rat(det));
        }
    }
    out
}

/// Both sides of "`{f,g} = 0` iff `f^u = lambda g^v`", computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuGvCheck {
    pub bracket_zero: bool,
    pub power_relation: bool,
    pub lambda: Option<Rational>,
    pub degree_f: i64,
    pub degree_g: i64,
}

impl FuGvCheck {
    pub fn consistent(&self) -> bool {
        self.bracket_zero == self.power_relation
    }
}

fn homogeneous_nonconstant_degree(f: &BiPoly, d: Direction) -> Result<i64> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    f.homogeneous_degree(d).ok_or(Error::NotHomogeneous {
        rho: d.rho(),
        sigma: d.sigma(),
    })
}

pub fn lemma_fu_gv_check(f: &BiPoly, g: &BiPoly, d: Direction) -> Result<FuGvCheck> {
    let v = homogeneous_nonconstant_degree(f, d)?;
    let u = homogeneous_nonconstant_degree(g, d)?;
    let bracket_zero = poisson_bracket(f, g).is_zero();
    // f^u = lambda g^v, with negative exponents moved across
    let pos = |x: i64| x.max(0) as u32;
    let neg = |x: i64| (-x).max(0) as u32;
    let lhs = &f.pow(pos(u)) * &g.pow(neg(v));
    let rhs = &g.pow(pos(v)) * &f.pow(neg(u));
    let lambda = constant_ratio(&lhs, &rhs).filter(|l| !l.is_zero());
    Ok(FuGvCheck {
        bracket_zero,
        power_relation: lambda.is_some(),
        lambda,
        degree_f: v,
        degree_g: u,
    })
}

/// Outcome of classifying a commuting homogeneous pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutingPairClass {
    /// Two monomials on one ray; the irrational-direction case. Rational
    /// directions always land in one of the other two variants.
    Monomials,
    /// Both of degree 0: supports on the ray through the origin orthogonal
    /// to the direction.
    DegreeZero { ray: Point },
    /// `f = gamma h^{v0}`, `g = beta h^{u0}` with `h` monic.
    CommonPower {
        lambda: Rational,
        base: BiPoly,
        v0: u32,
        u0: u32,
        gamma: Rational,
        beta: Rational,
    },
}

pub fn classify_commuting_pair(f: &BiPoly, g: &BiPoly, d: Direction) -> Result<CommutingPairClass> {
    let mut v = homogeneous_nonconstant_degree(f, d)?;
    let mut u = homogeneous_nonconstant_degree(g, d)?;
    if !poisson_bracket(f, g).is_zero() {
        return Err(Error::Precondition("{f,g} != 0".into()));
    }
    if v < 0 && u < 0 {
        v = -v;
        u = -u;
    }
    if v == 0 && u == 0 {
        let (&(i, j), _) = f.terms().find(|(&e, _)| e != (0, 0)).expect("nonconstant");
        let g_ = (i as i64).gcd(&(j as i64));
        return Ok(CommutingPairClass::DegreeZero {
            ray: (i as i64 / g_, j as i64 / g_),
        });
    }
    if v <= 0 || u <= 0 {
        return Err(violation(format!(
            "commuting homogeneous pair with degrees {v}, {u}"
        )));
    }
    let dg = v.gcd(&u);
    let (v0, u0) = ((v / dg) as u32, (u / dg) as u32);
    let (gamma, base) = f
        .mth_root(v0)
        .ok_or_else(|| violation("f is not gamma*h^v0"))?;
    let hu = base.pow(u0);
    let beta = constant_ratio(g, &hu).ok_or_else(|| violation("g is not beta*h^u0"))?;
    // f^u0 = gamma^u0 h^{u0 v0}, g^v0 = beta^v0 h^{u0 v0}
    let lambda =
        num_traits::pow(gamma.clone(), u0 as usize) / num_traits::pow(beta.clone(), v0 as usize);
    Ok(CommutingPairClass::CommonPower {
        lambda,
        base,
        v0,
        u0,
        gamma,
        beta,
    })
}

impl CommutingPairClass {
    /// Re-expands the witnesses against the inputs.
    pub fn replays(&self, f: &BiPoly, g: &BiPoly) -> bool {
        match self {
            CommutingPairClass::Monomials => f.is_monomial() && g.is_monomial(),
            CommutingPairClass::DegreeZero { ray } => [f, g].iter().all(|p| {
                p.terms()
                    .all(|(&(i, j), _)| ray.0 * j as i64 - ray.1 * i as i64 == 0)
            }),
            CommutingPairClass::CommonPower {
                lambda,
                base,
                v0,
                u0,
                gamma,
                beta,
            } => {
                *f == base.pow(*v0).scale(gamma)
                    && *g == base.pow(*u0).scale(beta)
                    && f.pow(*u0) == g.pow(*v0).scale(lambda)
                    && v0.gcd(u0) == 1
            }
        }
    }
}

/// `(h, m)` from the power decomposition `f = mu h^m`; the centralizer of
/// `f` is `Q[h]` and equals `Q[f]` exactly when `m = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerGenerator {
    pub generator: BiPoly,
    pub exponent: u32,
}

pub fn centralizer_generator(f: &BiPoly, d: Direction) -> Result<CentralizerGenerator> {
    let v = homogeneous_nonconstant_degree(f, d)?;
    if v == 0 {
        return Err(Error::Precondition("degree 0 leading form".into()));
    }
    let pd = f.power_decomposition()?;
    Ok(CentralizerGenerator {
        generator: pd.base,
        exponent: pd.exponent,
    })
}

/// `E(g)` inside `Cone(Convex(E(f)))`.
pub fn cone_containment_check(f: &BiPoly, g: &BiPoly, d: Direction) -> Result<bool> {
    let v = homogeneous_nonconstant_degree(f, d)?;
    if v == 0 {
        return Err(Error::Precondition("f has degree 0".into()));
    }
    if !poisson_bracket(f, g).is_zero() {
        return Err(Error::Precondition("{f,g} != 0".into()));
    }
    let pts: Vec<Point> = f.terms().map(|(&(i, j), _)| (i as i64, j as i64)).collect();
    let cone = cone_of(&pts)?;
    Ok(g.terms()
        .all(|(&(i, j), _)| cone.contains((i as i64, j as i64))))
}

/// Convenience: `{f,g} == 1`.
pub fn is_symplectic_pair(f: &BiPoly, g: &BiPoly) -> bool {
    poisson_bracket(f, g) == BiPoly::constant(Rational::one())
}
