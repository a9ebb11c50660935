//! Automorphisms of `A_1` and of the Poisson algebra `K[X,Y]`, given as
//! words in elementary generators and applied left to right.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{violation, Error, Result};
use crate::poisson::poisson_bracket;
use crate::poly::{parse_rational, rat_to_string, BiPoly, Rational};
use crate::univariate::UniPoly;
use crate::weyl::WeylElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `p -> a p + b q`, `q -> c p + d q` with `ad - bc = 1`.
    Linear {
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
    },
    /// `p -> p + f(q)`.
    TriUpper(UniPoly),
    /// `q -> q + g(p)`.
    TriLower(UniPoly),
    /// `p -> l p`, `q -> q / l`.
    Scale(Rational),
    /// `p -> q`, `q -> -p`.
    Rot90,
    /// `(z, w) -> (w, -z)`; acts on pairs only.
    Swap,
}

impl Generator {
    pub fn linear(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        let g = Generator::Linear { a, b, c, d };
        g.validate()?;
        Ok(g)
    }

    pub fn scale(lambda: Rational) -> Result<Self> {
        let g = Generator::Scale(lambda);
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Generator::Linear { a, b, c, d } if a * d - b * c != Rational::one() => Err(
                Error::InvalidParameter("linear generator needs ad - bc = 1".into()),
            ),
            Generator::Scale(l) if l.is_zero() => Err(Error::InvalidParameter(
                "scale factor must be nonzero".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn inverse(&self) -> Vec<Generator> {
        match self {
            Generator::Linear { a, b, c, d } => vec![Generator::Linear {
                a: d.clone(),
                b: -b.clone(),
                c: -c.clone(),
                d: a.clone(),
            }],
            Generator::TriUpper(f) => vec![Generator::TriUpper(f.scale(&-Rational::one()))],
            Generator::TriLower(g) => vec![Generator::TriLower(g.scale(&-Rational::one()))],
            Generator::Scale(l) => vec![Generator::Scale(l.recip())],
            Generator::Rot90 => vec![Generator::Rot90; 3],
            Generator::Swap => vec![Generator::Swap; 3],
        }
    }

    /// Images of the two generators, built from `x`, `y` in any ring.
    fn images<T>(
        &self,
        x: &T,
        y: &T,
        add: impl Fn(&T, &T) -> T,
        scale: impl Fn(&T, &Rational) -> T,
        eval: impl Fn(&UniPoly, &T) -> T,
    ) -> Result<(T, T)>
    where
        T: Clone,
    {
        self.validate()?;
        Ok(match self {
            Generator::Linear { a, b, c, d } => (
                add(&scale(x, a), &scale(y, b)),
                add(&scale(x, c), &scale(y, d)),
            ),
            Generator::TriUpper(f) => (add(x, &eval(f, y)), y.clone()),
            Generator::TriLower(g) => (x.clone(), add(y, &eval(g, x))),
            Generator::Scale(l) => (scale(x, l), scale(y, &l.recip())),
            Generator::Rot90 => (y.clone(), scale(x, &-Rational::one())),
            Generator::Swap => {
                return Err(Error::Precondition(
                    "swap acts on pairs, not on single elements".into(),
                ))
            }
        })
    }

    pub fn apply(&self, z: &WeylElement) -> Result<WeylElement> {
        let (p, q) = self.images(
            &WeylElement::p(),
            &WeylElement::q(),
            |a, b| a + b,
            |a, c| a.scale(c),
            WeylElement::eval_poly,
        )?;
        Ok(substitute_weyl(z, &p, &q))
    }

    pub fn apply_poisson(&self, f: &BiPoly) -> Result<BiPoly> {
        let (x, y) = self.images(
            &BiPoly::x(),
            &BiPoly::y(),
            |a, b| a + b,
            |a, c| a.scale(c),
            |u, t| {
                u.eval_in(
                    t,
                    BiPoly::zero(),
                    |a, b| a * b,
                    |a, c| a + &BiPoly::constant(c.clone()),
                )
            },
        )?;
        Ok(f.substitute(&x, &y))
    }
}

/// `sum c p^i q^j -> sum c P^i Q^j`, an algebra map when `[P, Q] = 1`.
pub fn substitute_weyl(z: &WeylElement, p_img: &WeylElement, q_img: &WeylElement) -> WeylElement {
    let max = z.max_exponent() as usize;
    let mut pp = vec![WeylElement::one()];
    let mut qp = vec![WeylElement::one()];
    for k in 1..=max {
        pp.push(&pp[k - 1] * p_img);
        qp.push(&qp[k - 1] * q_img);
    }
    z.terms().fold(WeylElement::zero(), |acc, (&(i, j), c)| {
        &acc + &(&pp[i as usize] * &qp[j as usize]).scale(c)
    })
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |u: &UniPoly| {
            u.coeffs()
                .iter()
                .map(rat_to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Generator::Linear { a, b, c, d } => write!(
                f,
                "lin:{},{},{},{}",
                rat_to_string(a),
                rat_to_string(b),
                rat_to_string(c),
                rat_to_string(d)
            ),
            Generator::TriUpper(u) => write!(f, "triu:[{}]", list(u)),
            Generator::TriLower(u) => write!(f, "tril:[{}]", list(u)),
            Generator::Scale(l) => write!(f, "scale:{}", rat_to_string(l)),
            Generator::Rot90 => write!(f, "rot"),
            Generator::Swap => write!(f, "swap"),
        }
    }
}

/// A word `g_1 g_2 ... g_n`, applied as `g_1` first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AutWord(pub Vec<Generator>);

impl AutWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &AutWord) -> AutWord {
        AutWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn inverse(&self) -> AutWord {
        AutWord(self.0.iter().rev().flat_map(Generator::inverse).collect())
    }

    pub fn has_swap(&self) -> bool {
        self.0.contains(&Generator::Swap)
    }

    /// Only scalings and the rotation.
    pub fn in_g1(&self) -> bool {
        self.0
            .iter()
            .all(|g| matches!(g, Generator::Scale(_) | Generator::Rot90))
    }
}

impl From<Vec<Generator>> for AutWord {
    fn from(v: Vec<Generator>) -> Self {
        AutWord(v)
    }
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn split_top_level(s: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for (pos, ch) in s.chars().enumerate() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Syntax {
                pos,
                msg: "unbalanced ']'".into(),
            });
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Syntax {
            pos: s.len(),
            msg: "unclosed '['".into(),
        });
    }
    parts.push(cur);
    Ok(parts.into_iter().map(|p| p.trim().to_string()).collect())
}

fn word_error(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(format!("bad word: {}", msg.into()))
}

fn rational_arg(s: &str) -> Result<Rational> {
    parse_rational(s.trim()).ok_or_else(|| word_error(format!("'{s}' is not a rational")))
}

fn coeff_list(s: &str) -> Result<UniPoly> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| word_error(format!("expected [c0,c1,...], got '{s}'")))?;
    if inner.trim().is_empty() {
        return Ok(UniPoly::zero());
    }
    Ok(UniPoly::new(
        inner.split(',').map(rational_arg).collect::<Result<_>>()?,
    ))
}

/// Parses `scale:2/3,rot,lin:a,b,c,d,triu:[c0,c1],tril:[...],swap`.
impl FromStr for AutWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(AutWord::empty());
        }
        let parts = split_top_level(s)?;
        let mut out = Vec::new();
        let mut k = 0;
        while k < parts.len() {
            let (name, arg) = match parts[k].split_once(':') {
                Some((n, a)) => (n.trim(), Some(a)),
                None => (parts[k].as_str(), None),
            };
            let g = match (name, arg) {
                ("rot", None) => Generator::Rot90,
                ("swap", None) => Generator::Swap,
                ("scale", Some(a)) => Generator::scale(rational_arg(a)?)?,
                ("triu", Some(a)) => Generator::TriUpper(coeff_list(a)?),
                ("tril", Some(a)) => Generator::TriLower(coeff_list(a)?),
                ("lin", Some(a)) => {
                    if k + 3 >= parts.len() {
                        return Err(word_error("lin needs four entries"));
                    }
                    let g = Generator::linear(
                        rational_arg(a)?,
                        rational_arg(&parts[k + 1])?,
                        rational_arg(&parts[k + 2])?,
                        rational_arg(&parts[k + 3])?,
                    )?;
                    k += 3;
                    g
                }
                _ => return Err(word_error(format!("unknown generator '{}'", parts[k]))),
            };
            out.push(g);
            k += 1;
        }
        Ok(AutWord(out))
    }
}

pub fn apply_aut(word: &AutWord, z: &WeylElement) -> Result<WeylElement> {
    word.0.iter().try_fold(z.clone(), |acc, g| g.apply(&acc))
}

pub fn apply_poisson_aut(word: &AutWord, f: &BiPoly) -> Result<BiPoly> {
    word.0
        .iter()
        .try_fold(f.clone(), |acc, g| g.apply_poisson(&acc))
}

pub fn is_weyl_pair(z: &WeylElement, w: &WeylElement) -> bool {
    z.commutator(w) == WeylElement::one()
}

pub fn apply_to_pair(
    word: &AutWord,
    pair: &(WeylElement, WeylElement),
) -> Result<(WeylElement, WeylElement)> {
    if !is_weyl_pair(&pair.0, &pair.1) {
        return Err(Error::NotAWeylPair);
    }
    let out = word.0.iter().try_fold(pair.clone(), |(z, w), g| match g {
        Generator::Swap => Ok((w, -z)),
        _ => Ok::<_, Error>((g.apply(&z)?, g.apply(&w)?)),
    })?;
    if !is_weyl_pair(&out.0, &out.1) {
        return Err(violation("automorphism broke [z, w] = 1"));
    }
    Ok(out)
}

/// The Poisson-side action on pairs; swap sends `(f, g)` to `(g, -f)`.
pub fn apply_to_poly_pair(word: &AutWord, pair: &(BiPoly, BiPoly)) -> Result<(BiPoly, BiPoly)> {
    word.0
        .iter()
        .try_fold(pair.clone(), |(f, g), gen| match gen {
            Generator::Swap => Ok((g, -f)),
            _ => Ok((gen.apply_poisson(&f)?, gen.apply_poisson(&g)?)),
        })
}

/// `{phi(X), phi(Y)}` for the induced polynomial map.
pub fn jacobian_det(word: &AutWord) -> Result<Rational> {
    if word.has_swap() {
        return Err(Error::Precondition("swap has no Jacobian".into()));
    }
    let x = apply_poisson_aut(word, &BiPoly::x())?;
    let y = apply_poisson_aut(word, &BiPoly::y())?;
    let j = poisson_bracket(&x, &y);
    if !j.is_constant() {
        return Err(violation("Jacobian of an automorphism is not constant"));
    }
    Ok(j.constant_term())
}

/// Whether `word` commutes with the identification `p^i q^j <-> X^i Y^j`
/// on `z`.
pub fn phi_equivariant(word: &AutWord, z: &WeylElement) -> Result<bool> {
    Ok(apply_poisson_aut(word, &z.phi())? == apply_aut(word, z)?.phi())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn w(s: &str) -> AutWord {
        s.parse().unwrap()
    }

    #[test]
    fn apply_aut_examples() {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        let z = apply_aut(&w("scale:2"), &(&p + &q)).unwrap();
        assert_eq!(z, &p.scale(&rat(2)) + &q.scale(&ratio(1, 2)));
        assert_eq!(apply_aut(&w("rot"), &p).unwrap(), q);
        assert_eq!(apply_aut(&w("rot,rot"), &q).unwrap(), -q.clone());
        assert!(apply_aut(&w("swap"), &p).is_err());
    }

    #[test]
    fn poisson_examples() {
        assert_eq!(
            apply_poisson_aut(&w("rot"), &BiPoly::x()).unwrap(),
            BiPoly::y()
        );
        assert_eq!(
            apply_poisson_aut(&w("rot"), &BiPoly::y()).unwrap(),
            -BiPoly::x()
        );
        let xy = BiPoly::monomial(rat(1), 1, 1);
        assert_eq!(apply_poisson_aut(&w("scale:3"), &xy).unwrap(), xy);
        assert_eq!(
            apply_poisson_aut(&w("triu:[0,0,1]"), &BiPoly::x()).unwrap(),
            BiPoly::x() + BiPoly::monomial(rat(1), 0, 2)
        );
    }

    #[test]
    fn pair_examples() {
        let pair = (WeylElement::p(), WeylElement::q());
        let swapped = (WeylElement::q(), -WeylElement::p());
        assert_eq!(apply_to_pair(&w("swap"), &pair).unwrap(), swapped);
        assert_eq!(apply_to_pair(&w("rot"), &pair).unwrap(), swapped);
        assert_eq!(
            apply_to_pair(&w("scale:5,swap"), &pair).unwrap(),
            apply_to_pair(&w("swap,scale:5"), &pair).unwrap()
        );
        let bad = (WeylElement::q(), WeylElement::p());
        assert_eq!(apply_to_pair(&w("rot"), &bad), Err(Error::NotAWeylPair));
    }

    #[test]
    fn jacobian_examples() {
        for s in [
            "lin:1,1,0,1",
            "triu:[3,0,-2,1]",
            "rot",
            "scale:7/2,tril:[0,1,1]",
        ] {
            assert_eq!(jacobian_det(&w(s)).unwrap(), rat(1), "{s}");
        }
        assert!(jacobian_det(&w("swap")).is_err());
    }

    #[test]
    fn word_syntax_round_trips() {
        let s = "scale:2/3,rot,lin:1,2,0,1,triu:[0,1/2,1],tril:[],swap";
        let word = w(s);
        assert_eq!(word.generators().len(), 6);
        assert_eq!(word.to_string().parse::<AutWord>().unwrap(), word);
        assert!("lin:1,1,1,1".parse::<AutWord>().is_err());
        assert!("scale:0".parse::<AutWord>().is_err());
        assert!("spin".parse::<AutWord>().is_err());
    }

    #[test]
    fn inverse_words_cancel() {
        let word = w("scale:2/3,rot,lin:1,2,0,1,triu:[0,1/2,1],tril:[1,0,3]");
        let z = WeylElement::p() + WeylElement::monomial(rat(2), 1, 2);
        let there = apply_aut(&word, &z).unwrap();
        assert_eq!(apply_aut(&word.inverse(), &there).unwrap(), z);
    }

    #[test]
    fn rotation_breaks_exact_phi_equivariance() {
        let pq = WeylElement::monomial(rat(1), 1, 1);
        assert!(phi_equivariant(&w("scale:3"), &pq).unwrap());
        assert!(!phi_equivariant(&w("rot"), &pq).unwrap());
    }
}
