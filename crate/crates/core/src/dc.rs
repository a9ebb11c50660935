//! Generation criteria for Weyl pairs `[z, w] = 1`, each producing a
//! replayable certificate, and the classification of Poisson pairs with
//! `{f, g} = 1` that are homogeneous for a common direction.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{violation, Error, Result};
use crate::geometry::{common_fan_directions, diagonal_vertex, fan_directions, Point};
use crate::poisson::poisson_bracket;
use crate::poly::{
    constant_ratio, normalize_sign, BiPoly, Degree, Direction, Exponent, HomogeneityDirections,
    Rational,
};
use crate::transforms::{apply_to_pair, apply_to_poly_pair, is_weyl_pair, AutWord, Generator};
use crate::univariate::UniPoly;
use crate::weyl::{centralizer_falsifier, WeylElement};

pub type Pair = (WeylElement, WeylElement);

fn dir(r: i64, s: i64) -> Direction {
    Direction::new(r, s).expect("nonzero direction")
}

fn one() -> Rational {
    Rational::one()
}

// ---------------------------------------------------------------------------
// Poisson pairs

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaCase {
    /// `(X, Y)`.
    XY,
    /// `(aX + bY, cX + dY)` with `ad - bc = 1`, `abcd != 0`.
    Linear {
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
    },
    /// `(X + l Y^n, Y)`.
    XPlusYn { lambda: Rational, n: u32 },
    /// `(X + l, Y)`.
    XShift { lambda: Rational },
}

impl OmegaCase {
    pub fn tag(&self) -> &'static str {
        match self {
            OmegaCase::XY => "case1",
            OmegaCase::Linear { .. } => "case2",
            OmegaCase::XPlusYn { .. } => "case3",
            OmegaCase::XShift { .. } => "case4",
        }
    }

    pub fn pair(&self) -> (BiPoly, BiPoly) {
        let (x, y) = (BiPoly::x(), BiPoly::y());
        match self {
            OmegaCase::XY => (x, y),
            OmegaCase::Linear {
                alpha,
                beta,
                gamma,
                delta,
            } => (
                x.scale(alpha) + y.scale(beta),
                x.scale(gamma) + y.scale(delta),
            ),
            OmegaCase::XPlusYn { lambda, n } => (x + BiPoly::monomial(lambda.clone(), 0, *n), y),
            OmegaCase::XShift { lambda } => (x + BiPoly::constant(lambda.clone()), y),
        }
    }
}

/// A canonical case together with a word over scalings, the rotation and
/// the pair swap that carries the input onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaClass {
    pub case: OmegaCase,
    pub word: AutWord,
}

impl OmegaClass {
    pub fn replays(&self, f: &BiPoly, g: &BiPoly) -> bool {
        apply_to_poly_pair(&self.word, &(f.clone(), g.clone())).ok() == Some(self.case.pair())
    }
}

struct PolyRun {
    pair: (BiPoly, BiPoly),
    word: AutWord,
}

impl PolyRun {
    fn act(&mut self, g: Generator) -> Result<()> {
        if matches!(&g, Generator::Scale(l) if l.is_one()) {
            return Ok(());
        }
        let w = AutWord(vec![g.clone()]);
        self.pair = apply_to_poly_pair(&w, &self.pair)?;
        self.word.push(g);
        Ok(())
    }
}

fn support_is(f: &BiPoly, pts: &[(u32, u32)]) -> bool {
    let mut s: Vec<(u32, u32)> = f.terms().map(|(&e, _)| e).collect();
    let mut t = pts.to_vec();
    s.sort_unstable();
    t.sort_unstable();
    s == t
}

/// Brings a pair with `{f, g} = 1`, both homogeneous for one direction,
/// to one of the four canonical cases.
pub fn omega_classify(f: &BiPoly, g: &BiPoly) -> Result<OmegaClass> {
    if poisson_bracket(f, g) != BiPoly::one() {
        return Err(Error::Precondition("{f, g} != 1".into()));
    }
    let common = match (f.homogeneity_directions(), g.homogeneity_directions()) {
        (HomogeneityDirections::Empty, _) | (_, HomogeneityDirections::Empty) => false,
        (HomogeneityDirections::One(a), HomogeneityDirections::One(b)) => a == b,
        _ => true,
    };
    if !common {
        return Err(Error::Precondition(
            "f and g share no homogeneity direction".into(),
        ));
    }
    let mut run = PolyRun {
        pair: (f.clone(), g.clone()),
        word: AutWord::empty(),
    };
    let case = classify_run(&mut run)?;
    let class = OmegaClass {
        case,
        word: run.word,
    };
    if !class.replays(f, g) {
        return Err(violation("omega witness word does not replay"));
    }
    Ok(class)
}

fn classify_run(run: &mut PolyRun) -> Result<OmegaCase> {
    let (f, g) = run.pair.clone();
    if f.is_monomial() && g.is_monomial() {
        let (&ef, cf) = f.terms().next().unwrap();
        let (&eg, cg) = g.terms().next().unwrap();
        match (ef, eg) {
            ((1, 0), (0, 1)) => run.act(Generator::Scale(cf.recip()))?,
            ((0, 1), (1, 0)) => {
                run.act(Generator::Swap)?;
                run.act(Generator::Scale(cg.recip()))?;
            }
            _ => return Err(violation("monomial pair with bracket 1 must be linear")),
        }
        return Ok(OmegaCase::XY);
    }
    if f.is_monomial() {
        run.act(Generator::Swap)?;
    }
    let HomogeneityDirections::One(d) = run.pair.0.homogeneity_directions() else {
        return Err(violation("non-monomial f has a unique direction"));
    };
    let d = normalize_sign(d);
    let (r, s) = (d.rho(), d.sigma());
    if r > 0 && s > 0 {
        classify_positive(run)
    } else if (r, s) == (0, 1) || (r, s) == (1, 0) {
        if (r, s) == (1, 0) {
            run.act(Generator::Rot90)?;
        }
        let (f, g) = run.pair.clone();
        if !support_is(&f, &[(1, 0), (0, 0)]) || !support_is(&g, &[(0, 1)]) {
            return Err(violation(
                "(0,1)-homogeneous pair not of the form (aX + r, Y / a)",
            ));
        }
        let c = g.coeff(0, 1);
        run.act(Generator::Scale(c))?;
        Ok(OmegaCase::XShift {
            lambda: run.pair.0.constant_term(),
        })
    } else {
        Err(violation(format!(
            "direction {d} with a non-monomial entry cannot carry bracket 1"
        )))
    }
}

fn classify_positive(run: &mut PolyRun) -> Result<OmegaCase> {
    let f = &run.pair.0;
    let n_of = |f: &BiPoly, axis_x: bool| -> Option<u32> {
        if f.len() != 2 {
            return None;
        }
        let (lin, pow): (Exponent, fn(u32) -> Exponent) = if axis_x {
            ((1, 0), |n| (0, n))
        } else {
            ((0, 1), |n| (n, 0))
        };
        if f.coeff(lin.0, lin.1).is_zero() {
            return None;
        }
        f.terms()
            .map(|(&e, _)| e)
            .find(|&e| e != lin)
            .and_then(|e| (e == pow(e.0.max(e.1)) && e.0.max(e.1) >= 1).then_some(e.0.max(e.1)))
    };
    if n_of(f, true).is_none() {
        if n_of(f, false).is_none() {
            return Err(violation(
                "positive-direction f is not lX + mY^n up to rotation",
            ));
        }
        run.act(Generator::Rot90)?;
    }
    let (f, g) = run.pair.clone();
    let n = n_of(&f, true).unwrap();
    let lambda = f.coeff(1, 0);
    let mu = f.coeff(0, n);
    if n > 1 {
        if !support_is(&g, &[(0, 1)]) {
            return Err(violation("partner of lX + mY^n must be cY"));
        }
        run.act(Generator::Scale(lambda.recip()))?;
        return Ok(OmegaCase::XPlusYn {
            lambda: run.pair.0.coeff(0, n),
            n,
        });
    }
    let (gamma, delta) = (g.coeff(1, 0), g.coeff(0, 1));
    if g != BiPoly::x().scale(&gamma) + BiPoly::y().scale(&delta) {
        return Err(violation("partner of a linear form must be linear"));
    }
    if !gamma.is_zero() && !delta.is_zero() {
        return Ok(OmegaCase::Linear {
            alpha: lambda,
            beta: mu,
            gamma,
            delta,
        });
    }
    if gamma.is_zero() {
        run.act(Generator::Scale(lambda.recip()))?;
    } else {
        run.act(Generator::Rot90)?;
        run.act(Generator::Scale(-mu.recip()))?;
    }
    Ok(OmegaCase::XPlusYn {
        lambda: run.pair.0.coeff(0, 1),
        n: 1,
    })
}

// ---------------------------------------------------------------------------
// Certificates

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    Homogeneous,
    V01,
    Grading,
    DGeMinus1,
    TwoHomogeneous,
    Support,
    LeadingBracket,
    CfKf,
}

impl Criterion {
    pub const ORDER: [Criterion; 8] = [
        Criterion::Homogeneous,
        Criterion::V01,
        Criterion::Grading,
        Criterion::DGeMinus1,
        Criterion::TwoHomogeneous,
        Criterion::Support,
        Criterion::LeadingBracket,
        Criterion::CfKf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Homogeneous => "homogeneous",
            Criterion::V01 => "v01",
            Criterion::Grading => "grading",
            Criterion::DGeMinus1 => "d_ge_minus1",
            Criterion::TwoHomogeneous => "two_homogeneous",
            Criterion::Support => "support",
            Criterion::LeadingBracket => "leading_bracket",
            Criterion::CfKf => "cf_kf",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// `(z, w) -> (w, -z)`.
    Swap,
    Automorphism(AutWord),
    /// `w -> w - coeff * z^exponent`, removing the part of `w` of degree
    /// `degree` in `direction`.
    Subtract {
        criterion: Criterion,
        direction: Direction,
        degree: i64,
        coeff: Rational,
        exponent: u32,
    },
}

/// The shapes of pairs whose generators can be written down directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    /// `(a q + g(p), c - p/a)`; `h` collects the powers of `z` removed
    /// from the original `w`.
    ExplicitQ {
        alpha: Rational,
        g: UniPoly,
        gamma: Rational,
        h: UniPoly,
    },
    /// `(a p + b, q/a + g(p))`.
    ExplicitP {
        alpha: Rational,
        beta: Rational,
        g: UniPoly,
    },
    /// `(l q, m p + f(q))`, `lm = -1`.
    HomogQ {
        lambda: Rational,
        mu: Rational,
        l: UniPoly,
    },
    /// `(l p, m q + f(p))`, `lm = 1`.
    HomogP {
        lambda: Rational,
        mu: Rational,
        l: UniPoly,
    },
    /// `(l p + c, q/l + f(p))`.
    GradingRemark {
        lambda: Rational,
        gamma: Rational,
        f: UniPoly,
    },
    /// `(a p + b q + l, c p + d q + m)`.
    Linear {
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
        lambda: Rational,
        mu: Rational,
    },
    /// `(p + l q^n + h(q), q + m)`, `deg h < n`.
    TriangularQ {
        lambda: Rational,
        n: u32,
        h: UniPoly,
        mu: Rational,
    },
    /// `(p + a, q + h(p))`.
    ShiftP { alpha: Rational, h: UniPoly },
}

fn ev(f: &UniPoly, z: &WeylElement) -> WeylElement {
    WeylElement::eval_poly(f, z)
}

fn lin(a: &Rational, b: &Rational) -> UniPoly {
    UniPoly::linear(a.clone(), b.clone())
}

fn neg(f: &UniPoly) -> UniPoly {
    f.scale(&-one())
}

/// `p = u_p(z) + v_p(w)` and `q = u_q(z) + v_q(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWitness {
    pub p: (UniPoly, UniPoly),
    pub q: (UniPoly, UniPoly),
}

impl NormalForm {
    pub fn name(&self) -> &'static str {
        match self {
            NormalForm::ExplicitQ { .. } => "explicit_q",
            NormalForm::ExplicitP { .. } => "explicit_p",
            NormalForm::HomogQ { .. } => "homogeneous_q",
            NormalForm::HomogP { .. } => "homogeneous_p",
            NormalForm::GradingRemark { .. } => "grading_remark",
            NormalForm::Linear { .. } => "linear",
            NormalForm::TriangularQ { .. } => "triangular_q",
            NormalForm::ShiftP { .. } => "shift_p",
        }
    }

    pub fn pair(&self) -> Pair {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        let c = |r: &Rational| WeylElement::constant(r.clone());
        match self {
            NormalForm::ExplicitQ {
                alpha, g, gamma, ..
            } => (
                &q.scale(alpha) + &ev(g, &p),
                &c(gamma) - &p.scale(&alpha.recip()),
            ),
            NormalForm::ExplicitP { alpha, beta, g }
            | NormalForm::GradingRemark {
                lambda: alpha,
                gamma: beta,
                f: g,
            } => (
                &p.scale(alpha) + &c(beta),
                &q.scale(&alpha.recip()) + &ev(g, &p),
            ),
            NormalForm::HomogQ { lambda, mu, l } => (q.scale(lambda), &p.scale(mu) + &ev(l, &q)),
            NormalForm::HomogP { lambda, mu, l } => (p.scale(lambda), &q.scale(mu) + &ev(l, &p)),
            NormalForm::Linear {
                alpha,
                beta,
                gamma,
                delta,
                lambda,
                mu,
            } => (
                &(&p.scale(alpha) + &q.scale(beta)) + &c(lambda),
                &(&p.scale(gamma) + &q.scale(delta)) + &c(mu),
            ),
            NormalForm::TriangularQ { lambda, n, h, mu } => {
                (&(&p + &q.pow(*n).scale(lambda)) + &ev(h, &q), &q + &c(mu))
            }
            NormalForm::ShiftP { alpha, h } => (&p + &c(alpha), &q + &ev(h, &p)),
        }
    }

    pub fn generators(&self) -> GeneratorWitness {
        let zero = UniPoly::zero;
        let x = || UniPoly::x();
        match self {
            NormalForm::ExplicitQ {
                alpha, g, gamma, ..
            } => {
                let p_of_w = lin(&-alpha.clone(), &(alpha * gamma));
                let ia = alpha.recip();
                GeneratorWitness {
                    q: (
                        lin(&ia, &Rational::zero()),
                        g.compose(&p_of_w).scale(&-ia.clone()),
                    ),
                    p: (zero(), p_of_w),
                }
            }
            NormalForm::ExplicitP { alpha, beta, g }
            | NormalForm::GradingRemark {
                lambda: alpha,
                gamma: beta,
                f: g,
            } => {
                let p_of_z = lin(&alpha.recip(), &-(beta / alpha));
                GeneratorWitness {
                    q: (
                        g.compose(&p_of_z).scale(&-alpha.clone()),
                        lin(alpha, &Rational::zero()),
                    ),
                    p: (p_of_z, zero()),
                }
            }
            NormalForm::HomogQ { lambda, mu, l } => {
                let q_of_z = lin(&lambda.recip(), &Rational::zero());
                GeneratorWitness {
                    p: (
                        l.compose(&q_of_z).scale(&-mu.recip()),
                        lin(&mu.recip(), &Rational::zero()),
                    ),
                    q: (q_of_z, zero()),
                }
            }
            NormalForm::HomogP { lambda, mu, l } => {
                let p_of_z = lin(&lambda.recip(), &Rational::zero());
                GeneratorWitness {
                    q: (
                        l.compose(&p_of_z).scale(&-mu.recip()),
                        lin(&mu.recip(), &Rational::zero()),
                    ),
                    p: (p_of_z, zero()),
                }
            }
            NormalForm::Linear {
                alpha,
                beta,
                gamma,
                delta,
                lambda,
                mu,
            } => GeneratorWitness {
                p: (
                    lin(delta, &-(delta * lambda)),
                    lin(&-beta.clone(), &(beta * mu)),
                ),
                q: (
                    lin(&-gamma.clone(), &(gamma * lambda)),
                    lin(alpha, &-(alpha * mu)),
                ),
            },
            NormalForm::TriangularQ { lambda, n, h, mu } => {
                let q_of_w = lin(&one(), &-mu.clone());
                let top = UniPoly::monomial(lambda.clone(), *n as usize).add(h);
                GeneratorWitness {
                    p: (x(), neg(&top.compose(&q_of_w))),
                    q: (zero(), q_of_w),
                }
            }
            NormalForm::ShiftP { alpha, h } => {
                let p_of_z = lin(&one(), &-alpha.clone());
                GeneratorWitness {
                    q: (neg(&h.compose(&p_of_z)), x()),
                    p: (p_of_z, zero()),
                }
            }
        }
    }
}

/// Evidence that `(z, w)` generates `A_1`: a replayable trace to a pair in
/// normal form together with `p` and `q` written in that pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub criterion: Criterion,
    pub input: Pair,
    pub trace: Vec<TraceStep>,
    pub final_pair: Pair,
    pub normal_form: NormalForm,
    pub generators: GeneratorWitness,
}

pub fn replay_trace(input: &Pair, trace: &[TraceStep]) -> Result<Pair> {
    let mut pair = input.clone();
    for step in trace {
        pair = match step {
            TraceStep::Swap => (pair.1, -pair.0),
            TraceStep::Automorphism(word) => apply_to_pair(word, &pair)?,
            TraceStep::Subtract {
                coeff, exponent, ..
            } => {
                let w = &pair.1 - &pair.0.pow(*exponent).scale(coeff);
                (pair.0, w)
            }
        };
    }
    Ok(pair)
}

impl Certificate {
    /// Replays the trace, checks the normal form and re-derives `p` and
    /// `q` from the final pair, all exactly.
    pub fn verify(&self) -> bool {
        let Ok(end) = replay_trace(&self.input, &self.trace) else {
            return false;
        };
        if end != self.final_pair || self.normal_form.pair() != self.final_pair {
            return false;
        }
        let (z, w) = &self.final_pair;
        let g = &self.generators;
        is_weyl_pair(z, w)
            && &ev(&g.p.0, z) + &ev(&g.p.1, w) == WeylElement::p()
            && &ev(&g.q.0, z) + &ev(&g.q.1, w) == WeylElement::q()
    }

    /// `sum coeff X^exponent` over the subtraction steps.
    pub fn subtracted_polynomial(&self) -> UniPoly {
        self.trace.iter().fold(UniPoly::zero(), |acc, s| match s {
            TraceStep::Subtract {
                coeff, exponent, ..
            } => acc.add(&UniPoly::monomial(coeff.clone(), *exponent as usize)),
            _ => acc,
        })
    }
}

// ---------------------------------------------------------------------------
// Criteria

/// Outcome of a single criterion: a certificate or the reason it declined.
pub type Verdict = std::result::Result<Certificate, String>;

#[derive(Clone, Debug)]
struct Run {
    criterion: Criterion,
    input: Pair,
    pair: Pair,
    trace: Vec<TraceStep>,
}

impl Run {
    fn new(criterion: Criterion, z: &WeylElement, w: &WeylElement) -> Self {
        Run {
            criterion,
            input: (z.clone(), w.clone()),
            pair: (z.clone(), w.clone()),
            trace: Vec::new(),
        }
    }

    fn z(&self) -> &WeylElement {
        &self.pair.0
    }

    fn w(&self) -> &WeylElement {
        &self.pair.1
    }

    fn swap(&mut self) {
        let (z, w) = std::mem::take(&mut self.pair);
        self.pair = (w, -z);
        self.trace.push(TraceStep::Swap);
    }

    fn swapped(&self) -> Run {
        let mut r = self.clone();
        r.swap();
        r
    }

    fn auto(&mut self, word: AutWord) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        self.pair = apply_to_pair(&word, &self.pair)?;
        self.trace.push(TraceStep::Automorphism(word));
        Ok(())
    }

    fn subtract(&mut self, direction: Direction, degree: i64, coeff: Rational, exponent: u32) {
        let w = self.w() - &self.z().pow(exponent).scale(&coeff);
        self.pair.1 = w;
        self.trace.push(TraceStep::Subtract {
            criterion: self.criterion,
            direction,
            degree,
            coeff,
            exponent,
        });
    }

    fn finish(self, nf: NormalForm) -> Result<Certificate> {
        if nf.pair() != self.pair {
            return Err(violation(format!(
                "normal form {} does not reproduce ({}, {})",
                nf.name(),
                self.pair.0,
                self.pair.1
            )));
        }
        let cert = Certificate {
            criterion: self.criterion,
            input: self.input,
            trace: self.trace,
            final_pair: self.pair,
            generators: nf.generators(),
            normal_form: nf,
        };
        if !cert.verify() {
            return Err(violation("certificate failed verification"));
        }
        Ok(cert)
    }
}

fn q_degree(z: &WeylElement) -> i64 {
    z.terms().map(|(&(_, j), _)| j as i64).max().unwrap_or(-1)
}

fn x_part(z: &WeylElement) -> UniPoly {
    UniPoly::from_x_axis(&BiPoly::from_terms(
        z.terms()
            .filter(|(e, _)| e.1 == 0)
            .map(|(&e, c)| (e, c.clone())),
    ))
    .unwrap()
}

fn y_part(z: &WeylElement) -> UniPoly {
    UniPoly::from_y_axis(&BiPoly::from_terms(
        z.terms()
            .filter(|(e, _)| e.0 == 0)
            .map(|(&e, c)| (e, c.clone())),
    ))
    .unwrap()
}

fn v01_run(mut run: Run) -> Result<Verdict> {
    if q_degree(run.z()) > 1 {
        if q_degree(run.w()) > 1 {
            return Ok(Err("both z and w have q-degree above 1".into()));
        }
        run.swap();
    }
    let d01 = dir(0, 1);
    if q_degree(run.z()) == 0 {
        let z = run.z().clone();
        let alpha = z.coeff(1, 0);
        let beta = z.constant_term();
        if alpha.is_zero() || z.len() != 1 + usize::from(!beta.is_zero()) {
            return Err(violation("z in K[p] with a partner must be a p + b"));
        }
        let g = x_part(run.w());
        let nf = NormalForm::ExplicitP { alpha, beta, g };
        return run.finish(nf).map(Ok);
    }
    let fz = run.z().leading_form(d01)?;
    let mut h = UniPoly::zero();
    while q_degree(run.w()) > 0 {
        let j = q_degree(run.w());
        let fw = run.w().leading_form(d01)?;
        let mu = constant_ratio(&fw, &fz.pow(j as u32)).ok_or_else(|| {
            violation("leading (0,1)-form of w is not a multiple of a power of z's")
        })?;
        h = h.add(&UniPoly::monomial(mu.clone(), j as usize));
        run.subtract(d01, j, mu, j as u32);
        if q_degree(run.w()) >= j {
            return Err(violation("q-degree did not drop"));
        }
    }
    let alpha = run.z().coeff(0, 1);
    let g = x_part(run.z());
    let gamma = run.w().constant_term();
    run.finish(NormalForm::ExplicitQ { alpha, g, gamma, h })
        .map(Ok)
}

fn homogeneous_run(mut run: Run, allow_swap: bool) -> Result<Verdict> {
    let grade = |z: &WeylElement| (!z.is_constant()).then(|| z.homogeneous_grade()).flatten();
    let k = match (grade(run.z()), grade(run.w())) {
        (Some(k), _) => k,
        (None, Some(k)) if allow_swap => {
            run.swap();
            k
        }
        _ => return Ok(Err("neither z nor w lies in a single D_k".into())),
    };
    let z = run.z().clone();
    let w = run.w().clone();
    let nf = match k {
        1 => {
            let lambda = z.coeff(0, 1);
            let mu = w.coeff(1, 0);
            if z.len() != 1 || lambda.is_zero() || &lambda * &mu != -one() {
                return Err(violation(
                    "homogeneous z in D_1 must be l q with partner m p + f(q)",
                ));
            }
            NormalForm::HomogQ {
                lambda,
                mu,
                l: y_part(&w),
            }
        }
        -1 => {
            let lambda = z.coeff(1, 0);
            let mu = w.coeff(0, 1);
            if z.len() != 1 || lambda.is_zero() || &lambda * &mu != one() {
                return Err(violation(
                    "homogeneous z in D_-1 must be l p with partner m q + f(p)",
                ));
            }
            NormalForm::HomogP {
                lambda,
                mu,
                l: x_part(&w),
            }
        }
        _ => return Err(violation(format!("homogeneous z in D_{k} has a partner"))),
    };
    run.finish(nf).map(Ok)
}

fn grading_run(mut run: Run) -> Result<Verdict> {
    let rot = || AutWord(vec![Generator::Rot90]);
    if run.z().in_d_leq(0) {
    } else if run.z().in_d_geq(0) {
        run.auto(rot())?;
    } else if run.w().in_d_leq(0) {
        run.swap();
    } else if run.w().in_d_geq(0) {
        run.swap();
        run.auto(rot())?;
    } else {
        return Ok(Err("neither z nor w lies in D>=0 or D<=0".into()));
    }
    let z = run.z().clone();
    let lambda = z.coeff(1, 0);
    let gamma = z.constant_term();
    if lambda.is_zero() || z.len() != 1 + usize::from(!gamma.is_zero()) {
        return Err(violation("z in D<=0 with a partner must be l p + c"));
    }
    let f = x_part(run.w());
    run.finish(NormalForm::GradingRemark { lambda, gamma, f })
        .map(Ok)
}

/// Tries the base criteria that cover a pair whose leading data has
/// degenerated: `v_{0,1} <= 1`, the same after a rotation, then grading.
fn base_cases(run: &Run) -> Result<Option<Certificate>> {
    if let Ok(c) = v01_run(run.clone())? {
        return Ok(Some(c));
    }
    let mut rotated = run.clone();
    rotated.auto(AutWord(vec![Generator::Rot90]))?;
    if let Ok(c) = v01_run(rotated)? {
        return Ok(Some(c));
    }
    Ok(grading_run(run.clone())?.ok())
}

fn d_ge_minus1_run(mut run: Run, assume_cyclic: bool) -> Result<Verdict> {
    let z = run.z().clone();
    let s = -z.min_grade().unwrap_or(0);
    if s > 1 {
        if !assume_cyclic {
            return Ok(Err(format!(
                "lowest component of z lies in D_-{s}; needs the cyclic-centralizer assumption"
            )));
        }
        let low = z.graded_decomp()?.lowest().1.clone();
        if let Some(c) = centralizer_falsifier(&low, 6)? {
            return Ok(Err(format!("C(z_-{s}) contains {c}, outside Q[z_-{s}]")));
        }
    }
    if s > 0 {
        let low = z.graded_decomp()?.lowest().1.clone();
        let d1m = dir(1, -1);
        while let Some(kw) = run.w().min_grade().filter(|&k| k < 0) {
            let k = -kw;
            if k % s != 0 {
                return lemma_failure(
                    s,
                    format!("lowest grade -{k} of w is not a multiple of -{s}"),
                );
            }
            let e = (k / s) as u32;
            let wl = run.w().graded_decomp()?.lowest().1.clone();
            let Some(alpha) = constant_ratio(&wl.phi(), &low.pow(e).phi()) else {
                return lemma_failure(
                    s,
                    "lowest component of w is not a multiple of a power of z's".into(),
                );
            };
            run.subtract(d1m, k, alpha, e);
            if run.w().min_grade().is_some_and(|m| m <= kw) {
                return Err(violation("lowest grade of w did not rise"));
            }
        }
    }
    match grading_run(run)? {
        Ok(c) => Ok(Ok(c)),
        Err(reason) => Err(violation(format!(
            "grading failed after reduction: {reason}"
        ))),
    }
}

fn lemma_failure(s: i64, msg: String) -> Result<Verdict> {
    if s == 1 {
        Err(violation(msg))
    } else {
        Ok(Err(msg))
    }
}

fn lf(z: &WeylElement, d: Direction) -> Result<BiPoly> {
    z.leading_form(d)
}

fn rotate_direction(d: Direction, word: &AutWord) -> Direction {
    word.generators()
        .iter()
        .filter(|g| **g == Generator::Rot90)
        .fold(d, |acc, _| acc.swapped())
}

/// Finishes a pair whose leading forms at `d` have bracket 1.
fn resolve_leading(mut run: Run, d: Direction) -> Result<Certificate> {
    let f = lf(run.z(), d)?;
    let g = lf(run.w(), d)?;
    let class = omega_classify(&f, &g)?;
    run.auto(class.word.clone())?;
    let d = rotate_direction(d, &class.word);
    let (cf, cg) = class.case.pair();
    if lf(run.z(), d)? != cf || lf(run.w(), d)? != cg {
        return Err(violation("leading forms do not follow the automorphism"));
    }
    let z = run.z().clone();
    let w = run.w().clone();
    let nf = match class.case {
        OmegaCase::XY => {
            return base_cases(&run)?
                .map(|c| Certificate {
                    criterion: run.criterion,
                    ..c
                })
                .ok_or_else(|| violation("(X, Y) leading forms but no base case applies"));
        }
        OmegaCase::Linear {
            alpha,
            beta,
            gamma,
            delta,
        } => NormalForm::Linear {
            alpha,
            beta,
            gamma,
            delta,
            lambda: z.constant_term(),
            mu: w.constant_term(),
        },
        OmegaCase::XPlusYn { lambda, n } => {
            let mut h = y_part(&z);
            h = h.add(&UniPoly::monomial(-lambda.clone(), n as usize));
            NormalForm::TriangularQ {
                lambda,
                n,
                h,
                mu: w.constant_term(),
            }
        }
        OmegaCase::XShift { lambda } => NormalForm::ShiftP {
            alpha: lambda,
            h: x_part(&w),
        },
    };
    run.finish(nf)
}

fn leading_bracket_run(run: Run) -> Result<Verdict> {
    for d in common_fan_directions(&[run.z(), run.w()])? {
        let f = lf(run.z(), d)?;
        let g = lf(run.w(), d)?;
        if poisson_bracket(&f, &g) == BiPoly::one() {
            return resolve_leading(run, d).map(Ok);
        }
    }
    Ok(Err("no direction with {f, g} = 1".into()))
}

/// The reduction loop for a direction `d` where `f = f_d(z)` is not a
/// proper power.
fn cf_kf_at(mut run: Run, d: Direction) -> Result<Certificate> {
    let f = lf(run.z(), d)?;
    let a = run.z().v_deg(d).finite().expect("nonzero z");
    if a <= 0 {
        return base_cases(&run)?.ok_or_else(|| violation("v(z) <= 0 but no base case applies"));
    }
    loop {
        let b = match run.w().v_deg(d) {
            Degree::Finite(b) => b,
            Degree::NegInfinity => return Err(violation("w vanished")),
        };
        if b <= 0 {
            return base_cases(&run.swapped())?
                .map(|mut c| {
                    c.criterion = run.criterion;
                    c
                })
                .ok_or_else(|| violation("v(w) <= 0 but no base case applies"));
        }
        let g = lf(run.w(), d)?;
        let br = poisson_bracket(&f, &g);
        if br == BiPoly::one() {
            return resolve_leading(run, d);
        }
        if !br.is_zero() {
            return Err(violation("leading bracket neither 0 nor 1"));
        }
        if b % a != 0 {
            return Err(violation(
                "a does not divide b although f is not a proper power",
            ));
        }
        let e = (b / a) as u32;
        let beta = constant_ratio(&g, &f.pow(e))
            .ok_or_else(|| violation("g is not a multiple of f^(b/a)"))?;
        run.subtract(d, b, beta, e);
        if run.w().v_deg(d) >= Degree::Finite(b) {
            return Err(violation("v-degree of w did not drop"));
        }
    }
}

fn is_power_free(f: &BiPoly) -> bool {
    !f.is_constant()
        && f.power_decomposition()
            .map(|pd| pd.exponent == 1)
            .unwrap_or(false)
}

fn cf_kf_run(run: Run) -> Result<Verdict> {
    let mut dirs = fan_directions(run.z())?;
    // edge directions first: their leading forms carry the most information
    dirs.sort_by_key(|&d| lf(run.z(), d).map(|f| f.is_monomial()).unwrap_or(true));
    for d in dirs {
        if is_power_free(&lf(run.z(), d)?) {
            return cf_kf_at(run, d).map(Ok);
        }
    }
    Ok(Err("every leading form of z is a proper power".into()))
}

fn support_run(run: Run) -> Result<Verdict> {
    for d in fan_directions(run.z())? {
        let f = lf(run.z(), d)?;
        let fires = match f.len() {
            2 => true,
            1 => {
                let (&(i, j), _) = f.terms().next().unwrap();
                i >= 1 && j >= 1 && i.gcd(&j) == 1
            }
            _ => false,
        };
        if fires {
            if !is_power_free(&f) {
                return Err(violation(
                    "two-term or coprime leading form is a proper power",
                ));
            }
            return cf_kf_at(run, d).map(Ok);
        }
    }
    Ok(Err(
        "no leading form with two terms or a coprime mixed monomial".into(),
    ))
}

fn top_point(z: &WeylElement) -> Point {
    z.terms()
        .map(|(&(i, j), _)| (i as i64, j as i64))
        .max_by_key(|&(i, j)| i + j)
        .unwrap()
}

fn two_homogeneous_run(run: Run) -> Result<Verdict> {
    let parts = run.z().graded_decomp()?.parts;
    match parts.len() {
        1 => homogeneous_run(run, false),
        2 => {
            let (t1, t2) = (top_point(&parts[0].1), top_point(&parts[1].1));
            let d = normalize_sign(Direction::new(t1.1 - t2.1, t2.0 - t1.0)?);
            let f = lf(run.z(), d)?;
            if f.len() != 2 || d.weight_sum() <= 0 {
                return Err(violation(format!(
                    "direction {d} does not join the two graded parts"
                )));
            }
            cf_kf_at(run, d).map(Ok)
        }
        n => Ok(Err(format!("z has {n} graded components"))),
    }
}

/// Runs on `(z, w)` and then on `(w, -z)`.
fn both_ways(run: Run, f: impl Fn(Run) -> Result<Verdict>) -> Result<Verdict> {
    let swapped = run.swapped();
    match f(run)? {
        Ok(c) => Ok(Ok(c)),
        Err(first) => Ok(f(swapped)?.map_err(|second| format!("{first}; after swap: {second}"))),
    }
}

/// Runs one criterion on a pair already known to satisfy `[z, w] = 1`.
pub fn run_criterion(
    criterion: Criterion,
    z: &WeylElement,
    w: &WeylElement,
    assume_cyclic: bool,
) -> Result<Verdict> {
    let run = Run::new(criterion, z, w);
    match criterion {
        Criterion::Homogeneous => homogeneous_run(run, true),
        Criterion::V01 => v01_run(run),
        Criterion::Grading => grading_run(run),
        Criterion::DGeMinus1 => both_ways(run, |r| d_ge_minus1_run(r, assume_cyclic)),
        Criterion::TwoHomogeneous => both_ways(run, two_homogeneous_run),
        Criterion::Support => both_ways(run, support_run),
        Criterion::LeadingBracket => leading_bracket_run(run),
        Criterion::CfKf => both_ways(run, cf_kf_run),
    }
}

fn checked(
    criterion: Criterion,
    z: &WeylElement,
    w: &WeylElement,
    assume_cyclic: bool,
) -> Result<Option<Certificate>> {
    if !is_weyl_pair(z, w) {
        return Err(Error::NotAWeylPair);
    }
    Ok(run_criterion(criterion, z, w, assume_cyclic)?.ok())
}

pub fn criterion_v01(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::V01, z, w, false)
}

pub fn criterion_homogeneous(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::Homogeneous, z, w, false)
}

pub fn criterion_grading(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::Grading, z, w, false)
}

pub fn criterion_d_ge_minus1(
    z: &WeylElement,
    w: &WeylElement,
    assume_cyclic: bool,
) -> Result<Option<Certificate>> {
    checked(Criterion::DGeMinus1, z, w, assume_cyclic)
}

pub fn criterion_leading_bracket(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::LeadingBracket, z, w, false)
}

pub fn criterion_cf_kf(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::CfKf, z, w, false)
}

pub fn criterion_support(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::Support, z, w, false)
}

pub fn criterion_two_homogeneous(z: &WeylElement, w: &WeylElement) -> Result<Option<Certificate>> {
    checked(Criterion::TwoHomogeneous, z, w, false)
}

// ---------------------------------------------------------------------------
// The battery

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoPartner {
    /// `"z"` or `"w"`.
    pub element: &'static str,
    pub vertex: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attempt {
    pub criterion: Criterion,
    pub result: AttemptResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AttemptResult {
    Declined(String),
    /// The criterion's own consistency checks failed.
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Generates(Box<Certificate>),
    NoPartnerPossible(NoPartner),
    NotAWeylPair,
    Inconclusive,
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Generates(_) => "generates",
            Outcome::NoPartnerPossible(_) => "no_partner_possible",
            Outcome::NotAWeylPair => "not_a_weyl_pair",
            Outcome::Inconclusive => "inconclusive",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Generates(_) => 0,
            Outcome::Inconclusive => 2,
            Outcome::NotAWeylPair => 3,
            Outcome::NoPartnerPossible(_) => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCReport {
    pub outcome: Outcome,
    /// Criteria that declined or failed before the verdict, in order.
    pub attempts: Vec<Attempt>,
}

#[derive(Clone, Debug, Default)]
pub struct DCOptions {
    /// Applied to the pair before any analysis and recorded in the trace.
    pub pre_word: Option<AutWord>,
    pub assume_centralizer_cyclic: bool,
}

/// The diagonal-vertex obstruction: `z` in `D>=0` or `D<=0` with a roof
/// vertex `(i, i)`, `i >= 1`, has no partner at all.
pub fn no_partner_witness(z: &WeylElement) -> Option<Point> {
    if z.is_zero() || !(z.in_d_geq(0) || z.in_d_leq(0)) {
        return None;
    }
    diagonal_vertex(z).ok().flatten()
}

pub fn dc_check(z: &WeylElement, w: &WeylElement) -> DCReport {
    dc_check_with(z, w, &DCOptions::default())
}

pub fn dc_check_with(z: &WeylElement, w: &WeylElement, opts: &DCOptions) -> DCReport {
    let report = |outcome| DCReport {
        outcome,
        attempts: Vec::new(),
    };
    for (name, x) in [("z", z), ("w", w)] {
        if let Some(vertex) = no_partner_witness(x) {
            return report(Outcome::NoPartnerPossible(NoPartner {
                element: name,
                vertex,
            }));
        }
    }
    if !is_weyl_pair(z, w) {
        return report(Outcome::NotAWeylPair);
    }
    let mut prefix = Vec::new();
    let (mut z1, mut w1) = (z.clone(), w.clone());
    if let Some(word) = opts.pre_word.as_ref().filter(|w| !w.is_empty()) {
        match apply_to_pair(word, &(z1.clone(), w1.clone())) {
            Ok((a, b)) => {
                (z1, w1) = (a, b);
                prefix.push(TraceStep::Automorphism(word.clone()));
            }
            Err(_) => return report(Outcome::NotAWeylPair),
        }
    }
    let mut attempts = Vec::new();
    for criterion in Criterion::ORDER {
        match run_criterion(criterion, &z1, &w1, opts.assume_centralizer_cyclic) {
            Ok(Ok(mut cert)) => {
                if !prefix.is_empty() {
                    cert.input = (z.clone(), w.clone());
                    cert.trace = prefix.iter().cloned().chain(cert.trace).collect();
                }
                if cert.verify() {
                    return DCReport {
                        outcome: Outcome::Generates(Box::new(cert)),
                        attempts,
                    };
                }
                attempts.push(Attempt {
                    criterion,
                    result: AttemptResult::Error("certificate failed verification".into()),
                });
            }
            Ok(Err(reason)) => attempts.push(Attempt {
                criterion,
                result: AttemptResult::Declined(reason),
            }),
            Err(e) => attempts.push(Attempt {
                criterion,
                result: AttemptResult::Error(e.to_string()),
            }),
        }
    }
    DCReport {
        outcome: Outcome::Inconclusive,
        attempts,
    }
}
