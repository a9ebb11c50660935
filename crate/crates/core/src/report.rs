//! Stable JSON documents for reports and classifications. Rationals are
//! always `"num/den"` strings and every list has a fixed order.

use serde::Serialize;

use crate::dc::{
    Attempt, AttemptResult, Certificate, DCReport, NormalForm, OmegaCase, OmegaClass, Outcome,
    TraceStep,
};
use crate::geometry::{LatticePolygon, Point, RoofChain};
use crate::poly::{rat_to_string, BiPoly, Direction, Rational};
use crate::univariate::UniPoly;
use crate::weyl::WeylElement;

fn r(x: &Rational) -> String {
    rat_to_string(x)
}

/// Coefficients of a univariate polynomial, constant term first.
fn coeffs(u: &UniPoly) -> Vec<String> {
    u.coeffs().iter().map(r).collect()
}

fn dir(d: &Direction) -> [i64; 2] {
    [d.rho(), d.sigma()]
}

#[derive(Serialize)]
pub struct TermJson {
    pub i: u32,
    pub j: u32,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct ElementJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

fn term_list<'a>(it: impl Iterator<Item = (&'a (u32, u32), &'a Rational)>) -> Vec<TermJson> {
    let mut v: Vec<TermJson> = it
        .map(|(&(i, j), c)| TermJson { i, j, coeff: r(c) })
        .collect();
    v.sort_by_key(|t| std::cmp::Reverse(crate::poly::grlex_key((t.i, t.j))));
    v
}

impl From<&WeylElement> for ElementJson {
    fn from(z: &WeylElement) -> Self {
        ElementJson {
            text: z.to_string(),
            terms: term_list(z.terms()),
        }
    }
}

impl From<&BiPoly> for ElementJson {
    fn from(f: &BiPoly) -> Self {
        ElementJson {
            text: f.to_string(),
            terms: term_list(f.terms()),
        }
    }
}

#[derive(Serialize)]
pub struct PairJson {
    pub z: String,
    pub w: String,
}

fn pair(p: &(WeylElement, WeylElement)) -> PairJson {
    PairJson {
        z: p.0.to_string(),
        w: p.1.to_string(),
    }
}

#[derive(Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum StepJson {
    Swap,
    Automorphism {
        word: String,
    },
    Subtract {
        criterion: String,
        direction: [i64; 2],
        degree: i64,
        coeff: String,
        exponent: u32,
    },
}

impl From<&TraceStep> for StepJson {
    fn from(s: &TraceStep) -> Self {
        match s {
            TraceStep::Swap => StepJson::Swap,
            TraceStep::Automorphism(w) => StepJson::Automorphism {
                word: w.to_string(),
            },
            TraceStep::Subtract {
                criterion,
                direction,
                degree,
                coeff,
                exponent,
            } => StepJson::Subtract {
                criterion: criterion.name().into(),
                direction: dir(direction),
                degree: *degree,
                coeff: r(coeff),
                exponent: *exponent,
            },
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormalFormJson {
    ExplicitQ {
        alpha: String,
        g: Vec<String>,
        gamma: String,
        h: Vec<String>,
    },
    ExplicitP {
        alpha: String,
        beta: String,
        g: Vec<String>,
    },
    HomogeneousQ {
        lambda: String,
        mu: String,
        l: Vec<String>,
    },
    HomogeneousP {
        lambda: String,
        mu: String,
        l: Vec<String>,
    },
    GradingRemark {
        lambda: String,
        gamma: String,
        f: Vec<String>,
    },
    Linear {
        alpha: String,
        beta: String,
        gamma: String,
        delta: String,
        lambda: String,
        mu: String,
    },
    TriangularQ {
        lambda: String,
        n: u32,
        h: Vec<String>,
        mu: String,
    },
    ShiftP {
        alpha: String,
        h: Vec<String>,
    },
}

impl From<&NormalForm> for NormalFormJson {
    fn from(nf: &NormalForm) -> Self {
        match nf {
            NormalForm::ExplicitQ { alpha, g, gamma, h } => NormalFormJson::ExplicitQ {
                alpha: r(alpha),
                g: coeffs(g),
                gamma: r(gamma),
                h: coeffs(h),
            },
            NormalForm::ExplicitP { alpha, beta, g } => NormalFormJson::ExplicitP {
                alpha: r(alpha),
                beta: r(beta),
                g: coeffs(g),
            },
            NormalForm::HomogQ { lambda, mu, l } => NormalFormJson::HomogeneousQ {
                lambda: r(lambda),
                mu: r(mu),
                l: coeffs(l),
            },
            NormalForm::HomogP { lambda, mu, l } => NormalFormJson::HomogeneousP {
                lambda: r(lambda),
                mu: r(mu),
                l: coeffs(l),
            },
            NormalForm::GradingRemark { lambda, gamma, f } => NormalFormJson::GradingRemark {
                lambda: r(lambda),
                gamma: r(gamma),
                f: coeffs(f),
            },
            NormalForm::Linear {
                alpha,
                beta,
                gamma,
                delta,
                lambda,
                mu,
            } => NormalFormJson::Linear {
                alpha: r(alpha),
                beta: r(beta),
                gamma: r(gamma),
                delta: r(delta),
                lambda: r(lambda),
                mu: r(mu),
            },
            NormalForm::TriangularQ { lambda, n, h, mu } => NormalFormJson::TriangularQ {
                lambda: r(lambda),
                n: *n,
                h: coeffs(h),
                mu: r(mu),
            },
            NormalForm::ShiftP { alpha, h } => NormalFormJson::ShiftP {
                alpha: r(alpha),
                h: coeffs(h),
            },
        }
    }
}

/// `u(z) + v(w)` as two coefficient lists.
#[derive(Serialize)]
pub struct SplitJson {
    pub z: Vec<String>,
    pub w: Vec<String>,
}

#[derive(Serialize)]
pub struct GeneratorsJson {
    pub p: SplitJson,
    pub q: SplitJson,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub criterion: String,
    pub normal_form: NormalFormJson,
    pub trace: Vec<StepJson>,
    pub final_pair: PairJson,
    pub generators: GeneratorsJson,
    pub verified: bool,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        let split = |(u, v): &(UniPoly, UniPoly)| SplitJson {
            z: coeffs(u),
            w: coeffs(v),
        };
        CertificateJson {
            criterion: c.criterion.name().into(),
            normal_form: (&c.normal_form).into(),
            trace: c.trace.iter().map(StepJson::from).collect(),
            final_pair: pair(&c.final_pair),
            generators: GeneratorsJson {
                p: split(&c.generators.p),
                q: split(&c.generators.q),
            },
            verified: c.verify(),
        }
    }
}

#[derive(Serialize)]
pub struct NoPartnerJson {
    pub element: String,
    pub vertex: [i64; 2],
}

#[derive(Serialize)]
pub struct AttemptJson {
    pub criterion: String,
    pub status: String,
    pub reason: String,
}

impl From<&Attempt> for AttemptJson {
    fn from(a: &Attempt) -> Self {
        let (status, reason) = match &a.result {
            AttemptResult::Declined(m) => ("declined", m),
            AttemptResult::Error(m) => ("error", m),
        };
        AttemptJson {
            criterion: a.criterion.name().into(),
            status: status.into(),
            reason: reason.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ReportJson {
    pub outcome: String,
    pub input: PairJson,
    pub criterion: Option<String>,
    pub certificate: Option<CertificateJson>,
    pub no_partner: Option<NoPartnerJson>,
    pub attempts: Vec<AttemptJson>,
}

pub fn report_json(z: &WeylElement, w: &WeylElement, rep: &DCReport) -> ReportJson {
    let (criterion, certificate, no_partner) = match &rep.outcome {
        Outcome::Generates(c) => (
            Some(c.criterion.name().to_string()),
            Some(c.as_ref().into()),
            None,
        ),
        Outcome::NoPartnerPossible(np) => (
            None,
            None,
            Some(NoPartnerJson {
                element: np.element.into(),
                vertex: [np.vertex.0, np.vertex.1],
            }),
        ),
        _ => (None, None, None),
    };
    ReportJson {
        outcome: rep.outcome.tag().into(),
        input: pair(&(z.clone(), w.clone())),
        criterion,
        certificate,
        no_partner,
        attempts: rep.attempts.iter().map(AttemptJson::from).collect(),
    }
}

#[derive(Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum OmegaCaseJson {
    Case1,
    Case2 {
        alpha: String,
        beta: String,
        gamma: String,
        delta: String,
    },
    Case3 {
        lambda: String,
        n: u32,
    },
    Case4 {
        lambda: String,
    },
}

#[derive(Serialize)]
pub struct OmegaJson {
    #[serde(flatten)]
    pub case: OmegaCaseJson,
    pub word: String,
    pub canonical: [String; 2],
}

impl From<&OmegaClass> for OmegaJson {
    fn from(c: &OmegaClass) -> Self {
        let case = match &c.case {
            OmegaCase::XY => OmegaCaseJson::Case1,
            OmegaCase::Linear {
                alpha,
                beta,
                gamma,
                delta,
            } => OmegaCaseJson::Case2 {
                alpha: r(alpha),
                beta: r(beta),
                gamma: r(gamma),
                delta: r(delta),
            },
            OmegaCase::XPlusYn { lambda, n } => OmegaCaseJson::Case3 {
                lambda: r(lambda),
                n: *n,
            },
            OmegaCase::XShift { lambda } => OmegaCaseJson::Case4 { lambda: r(lambda) },
        };
        let (f, g) = c.case.pair();
        OmegaJson {
            case,
            word: c.word.to_string(),
            canonical: [f.to_string(), g.to_string()],
        }
    }
}

#[derive(Serialize)]
pub struct NtpJson {
    pub ntp: Vec<Point>,
    pub roof: Vec<Point>,
}

pub fn ntp_json(poly: &LatticePolygon, roof: &RoofChain) -> NtpJson {
    NtpJson {
        ntp: poly.vertices().to_vec(),
        roof: roof.points.clone(),
    }
}

#[derive(Serialize)]
pub struct GradedPartJson {
    pub k: i64,
    pub component: String,
}

#[derive(Serialize)]
pub struct LeadingJson {
    pub direction: [i64; 2],
    pub degree: Option<i64>,
    pub leading_form: String,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dc::{dc_check, omega_classify};

    #[test]
    fn report_is_stable_and_tagged() {
        let (p, q) = (WeylElement::p(), WeylElement::q());
        let rep = dc_check(&p, &q);
        let a = to_json(&report_json(&p, &q, &rep));
        let b = to_json(&report_json(&p, &q, &dc_check(&p, &q)));
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["outcome"], "generates");
        assert_eq!(v["criterion"], "homogeneous");
        assert_eq!(v["certificate"]["normal_form"]["kind"], "homogeneous_p");
        assert_eq!(v["certificate"]["normal_form"]["lambda"], "1/1");
        assert_eq!(v["certificate"]["verified"], true);
    }

    #[test]
    fn omega_json_shape() {
        let f = &BiPoly::x() + &BiPoly::monomial(Rational::from_integer(2.into()), 0, 3);
        let c = omega_classify(&f, &BiPoly::y()).unwrap();
        let v: serde_json::Value = serde_json::to_value(OmegaJson::from(&c)).unwrap();
        assert_eq!(v["case"], "case3");
        assert_eq!(v["lambda"], "2/1");
        assert_eq!(v["n"], 3);
    }
}
