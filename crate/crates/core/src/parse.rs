//! Expression syntax for Weyl elements (`p`, `q`) and commutative
//! polynomials (`X`, `Y`).
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | symbol | '(' expr ')'
//! ```
//!
//! Products are evaluated left to right; in Weyl mode this is the
//! noncommutative product, so `q p` reads as `p q - 1`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Rational};
use crate::weyl::WeylElement;

pub const DEFAULT_MAX_DEGREE: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Weyl,
    Poly,
}

impl Mode {
    fn symbols(self) -> [char; 2] {
        match self {
            Mode::Weyl => ['p', 'q'],
            Mode::Poly => ['X', 'Y'],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    /// `0` for `p` / `X`, `1` for `q` / `Y`.
    Sym(u8),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        self.pos += len;
        (len > 0).then(|| &self.src[start..start + len])
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some('-') => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn starts_factor(&self, c: char) -> bool {
        c.is_ascii_digit() || c == '(' || c.is_alphabetic()
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(c) if self.starts_factor(c) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let Some(d) = self.digits() else {
                return self.err("expected a natural number after '^'");
            };
            let Ok(n) = d.parse::<u32>() else {
                return self.err("exponent too large");
            };
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                let mut value = Rational::from_integer(num.parse::<BigInt>().unwrap());
                if self.src[self.pos..].starts_with('/') {
                    self.bump();
                    let Some(den) = self.digits() else {
                        return self.err("expected a denominator after '/'");
                    };
                    let den: BigInt = den.parse().unwrap();
                    if den == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Expr::Num(value))
            }
            Some(c) if c.is_alphabetic() => {
                let [a, b] = self.mode.symbols();
                let sym = if c == a {
                    0
                } else if c == b {
                    1
                } else if self.mode == Mode::Weyl && matches!(c, 'X' | 'Y') {
                    return self.err(format!("symbol '{c}' belongs to polynomial mode"));
                } else if self.mode == Mode::Poly && matches!(c, 'p' | 'q') {
                    return self.err(format!("symbol '{c}' belongs to Weyl mode"));
                } else {
                    return self.err(format!("unknown symbol '{c}'"));
                };
                self.bump();
                Ok(Expr::Sym(sym))
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str, mode: Mode) -> Result<Expr> {
    let mut p = Parser {
        src: text,
        pos: 0,
        mode,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Reads `WEYL_MAX_DEGREE`, falling back to the default.
pub fn max_degree_from_env() -> u32 {
    std::env::var("WEYL_MAX_DEGREE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

trait Ring: Sized + Clone {
    fn constant(c: Rational) -> Self;
    fn generator(i: u8) -> Self;
    fn max_exp(&self) -> u32;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

macro_rules! ring {
    ($t:ty, $x:expr, $y:expr) => {
        impl Ring for $t {
            fn constant(c: Rational) -> Self {
                <$t>::constant(c)
            }
            fn generator(i: u8) -> Self {
                if i == 0 {
                    $x
                } else {
                    $y
                }
            }
            fn max_exp(&self) -> u32 {
                self.max_exponent()
            }
            fn add(&self, o: &Self) -> Self {
                self + o
            }
            fn sub(&self, o: &Self) -> Self {
                self - o
            }
            fn mul(&self, o: &Self) -> Self {
                self * o
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

ring!(WeylElement, WeylElement::p(), WeylElement::q());
ring!(BiPoly, BiPoly::x(), BiPoly::y());

fn eval<R: Ring>(e: &Expr, cap: u32) -> Result<R> {
    let guard = |r: R| {
        if r.max_exp() > cap {
            Err(Error::Resource(format!(
                "exponent {} exceeds WEYL_MAX_DEGREE={cap}",
                r.max_exp()
            )))
        } else {
            Ok(r)
        }
    };
    match e {
        Expr::Num(c) => Ok(R::constant(c.clone())),
        Expr::Sym(i) => Ok(R::generator(*i)),
        Expr::Neg(a) => Ok(eval::<R>(a, cap)?.neg()),
        Expr::Add(a, b) => Ok(eval::<R>(a, cap)?.add(&eval(b, cap)?)),
        Expr::Sub(a, b) => Ok(eval::<R>(a, cap)?.sub(&eval(b, cap)?)),
        Expr::Mul(a, b) => guard(eval::<R>(a, cap)?.mul(&eval(b, cap)?)),
        Expr::Pow(a, n) => {
            let base: R = eval(a, cap)?;
            if base.max_exp().saturating_mul(*n) > cap {
                return Err(Error::Resource(format!(
                    "power ^{n} exceeds WEYL_MAX_DEGREE={cap}"
                )));
            }
            let mut acc = R::constant(Rational::from_integer(1.into()));
            for _ in 0..*n {
                acc = acc.mul(&base);
            }
            Ok(acc)
        }
    }
}

pub fn eval_weyl(e: &Expr, max_degree: u32) -> Result<WeylElement> {
    eval(e, max_degree)
}

pub fn eval_poly(e: &Expr, max_degree: u32) -> Result<BiPoly> {
    eval(e, max_degree)
}

/// Parses and evaluates a Weyl element under the default degree cap.
pub fn weyl(text: &str) -> Result<WeylElement> {
    eval_weyl(&parse(text, Mode::Weyl)?, max_degree_from_env())
}

/// Parses and evaluates a polynomial in `X`, `Y` under the default cap.
pub fn poly(text: &str) -> Result<BiPoly> {
    eval_poly(&parse(text, Mode::Poly)?, max_degree_from_env())
}
