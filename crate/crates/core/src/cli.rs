//! The `weyl` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dc::{dc_check_with, omega_classify, DCOptions};
use crate::error::{Error, Result};
use crate::geometry::{ntp, roof, support_points};
use crate::parse::{self, max_degree_from_env, Mode};
use crate::poisson::poisson_bracket;
use crate::poly::{BiPoly, Degree, Direction};
use crate::report::{self, to_json, ElementJson, GradedPartJson, LeadingJson, OmegaJson};
use crate::transforms::{apply_aut, apply_poisson_aut, AutWord};
use crate::weyl::WeylElement;

#[derive(Parser, Debug)]
#[command(
    name = "weyl",
    version,
    about = "Exact computations in the Weyl algebra A_1"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Weyl,
    Poly,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Weyl => Mode::Weyl,
            ModeArg::Poly => Mode::Poly,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the canonical (normal-ordered) form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short, long, value_enum, default_value = "weyl")]
        mode: ModeArg,
    },
    /// Commutator `[a, b]` in Weyl mode, Poisson bracket in poly mode.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(short, long, value_enum, default_value = "weyl")]
        mode: ModeArg,
    },
    /// Decomposition into graded components `D_k`.
    Grade {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Degree and leading form for the weight `(rho, sigma)`.
    Leading {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'r', long, allow_negative_numbers = true)]
        rho: i64,
        #[arg(short = 's', long, allow_negative_numbers = true)]
        sigma: i64,
        #[arg(short, long, value_enum, default_value = "weyl")]
        mode: ModeArg,
    },
    /// Newton polygon and roof.
    Ntp {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Canonical case of a pair of polynomials with `{f, g} = 1`.
    ClassifyOmega {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Run the generation criteria on a Weyl pair.
    DcCheck {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_name = "WORD")]
        pre_word: Option<String>,
        #[arg(long)]
        assume_centralizer_cyclic: bool,
    },
    /// Automorphisms.
    Aut {
        #[command(subcommand)]
        action: AutAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum AutAction {
    /// Apply a word such as `rot,scale:2,triu:[0,0,1]` to an element.
    Apply {
        word: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short, long, value_enum, default_value = "weyl")]
        mode: ModeArg,
    },
}

enum Value {
    Weyl(WeylElement),
    Poly(BiPoly),
}

impl Value {
    fn text(&self) -> String {
        match self {
            Value::Weyl(z) => z.to_string(),
            Value::Poly(f) => f.to_string(),
        }
    }

    fn json(&self) -> ElementJson {
        match self {
            Value::Weyl(z) => z.into(),
            Value::Poly(f) => f.into(),
        }
    }
}

fn read(text: &str, mode: Mode) -> Result<Value> {
    let e = parse::parse(text, mode)?;
    let cap = max_degree_from_env();
    Ok(match mode {
        Mode::Weyl => Value::Weyl(parse::eval_weyl(&e, cap)?),
        Mode::Poly => Value::Poly(parse::eval_poly(&e, cap)?),
    })
}

fn weyl(text: &str) -> Result<WeylElement> {
    parse::eval_weyl(&parse::parse(text, Mode::Weyl)?, max_degree_from_env())
}

fn poly(text: &str) -> Result<BiPoly> {
    parse::eval_poly(&parse::parse(text, Mode::Poly)?, max_degree_from_env())
}

fn fmt_points(pts: &[(i64, i64)]) -> String {
    pts.iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit_value(out: &mut dyn Write, v: &Value, json: bool) -> Result<()> {
    if json {
        writeln!(out, "{}", to_json(&v.json()))
    } else {
        writeln!(out, "{}", v.text())
    }
    .map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Resource(format!("write failed: {e}"))
}

/// Executes a parsed command and returns the process exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Eval { expr, mode } => {
            emit_value(out, &read(expr, (*mode).into())?, json)?;
        }
        Command::Bracket { a, b, mode } => {
            let v = match (read(a, (*mode).into())?, read(b, (*mode).into())?) {
                (Value::Weyl(x), Value::Weyl(y)) => Value::Weyl(x.commutator(&y)),
                (Value::Poly(x), Value::Poly(y)) => Value::Poly(poisson_bracket(&x, &y)),
                _ => unreachable!("both operands share a mode"),
            };
            emit_value(out, &v, json)?;
        }
        Command::Grade { expr } => {
            let z = weyl(expr)?;
            let parts: Vec<GradedPartJson> = if z.is_zero() {
                Vec::new()
            } else {
                z.graded_decomp()?
                    .parts
                    .iter()
                    .map(|(k, c)| GradedPartJson {
                        k: *k,
                        component: c.to_string(),
                    })
                    .collect()
            };
            if json {
                writeln!(out, "{}", to_json(&parts)).map_err(io_err)?;
            } else {
                for p in &parts {
                    writeln!(out, "{:>4}  {}", p.k, p.component).map_err(io_err)?;
                }
            }
        }
        Command::Leading {
            expr,
            rho,
            sigma,
            mode,
        } => {
            let d = Direction::new(*rho, *sigma)?;
            let (deg, lf) = match read(expr, (*mode).into())? {
                Value::Weyl(z) => (z.v_deg(d), z.leading_form(d)?),
                Value::Poly(f) => (f.v_deg(d), f.leading_form(d)?),
            };
            let degree = match deg {
                Degree::Finite(k) => Some(k),
                Degree::NegInfinity => None,
            };
            let lf = lf.to_string();
            if json {
                let j = LeadingJson {
                    direction: [*rho, *sigma],
                    degree,
                    leading_form: lf,
                };
                writeln!(out, "{}", to_json(&j)).map_err(io_err)?;
            } else {
                let deg = degree.map_or("-inf".to_string(), |k| k.to_string());
                writeln!(out, "degree: {deg}\nleading form: {lf}").map_err(io_err)?;
            }
        }
        Command::Ntp { expr, svg } => {
            let z = weyl(expr)?;
            let poly = ntp(&z);
            let rf = roof(&z)?;
            if let Some(path) = svg {
                let doc = crate::svg::render(&support_points(&z), &poly, &rf);
                std::fs::write(path, doc)
                    .map_err(|e| Error::Resource(format!("{}: {e}", path.display())))?;
            }
            if json {
                writeln!(out, "{}", to_json(&report::ntp_json(&poly, &rf))).map_err(io_err)?;
            } else {
                writeln!(out, "ntp: {}", fmt_points(poly.vertices())).map_err(io_err)?;
                writeln!(out, "roof: {}", fmt_points(&rf.points)).map_err(io_err)?;
            }
        }
        Command::ClassifyOmega { f, g } => {
            let class = omega_classify(&poly(f)?, &poly(g)?)?;
            writeln!(out, "{}", to_json(&OmegaJson::from(&class))).map_err(io_err)?;
        }
        Command::DcCheck {
            z,
            w,
            pre_word,
            assume_centralizer_cyclic,
        } => {
            let (z, w) = (weyl(z)?, weyl(w)?);
            let opts = DCOptions {
                pre_word: pre_word.as_deref().map(str::parse::<AutWord>).transpose()?,
                assume_centralizer_cyclic: *assume_centralizer_cyclic,
            };
            let rep = dc_check_with(&z, &w, &opts);
            writeln!(out, "{}", to_json(&report::report_json(&z, &w, &rep))).map_err(io_err)?;
            return Ok(rep.outcome.exit_code());
        }
        Command::Aut {
            action: AutAction::Apply { word, expr, mode },
        } => {
            let word: AutWord = word.parse()?;
            let v = match read(expr, (*mode).into())? {
                Value::Weyl(z) => Value::Weyl(apply_aut(&word, &z)?),
                Value::Poly(f) => Value::Poly(apply_poisson_aut(&word, &f)?),
            };
            emit_value(out, &v, json)?;
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name), runs, and reports errors
/// on standard error. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("weyl").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = execute(&cli, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn bracket_of_generators() {
        assert_eq!(run_capture(&["bracket", "p", "q", "-m", "weyl"]).1, "1\n");
        assert_eq!(run_capture(&["bracket", "X", "Y", "-m", "poly"]).1, "1\n");
    }

    #[test]
    fn eval_normal_orders() {
        assert_eq!(run_capture(&["eval", "q*p"]).1, "p q - 1\n");
    }

    #[test]
    fn leading_with_negative_weight() {
        let (_, s) = run_capture(&["leading", "p^2 q + q^3", "-r", "-1", "-s", "2"]);
        assert_eq!(s, "degree: 6\nleading form: Y^3\n");
    }

    #[test]
    fn dc_check_exit_codes() {
        assert_eq!(run_capture(&["dc-check", "p", "q"]).0, 0);
        assert_eq!(run_capture(&["dc-check", "q", "p"]).0, 3);
        assert_eq!(run_capture(&["dc-check", "p q", "q"]).0, 4);
    }

    #[test]
    fn pentagon_text() {
        let (_, s) = run_capture(&["ntp", "p + p^2 q^3 + p^3 q + p^4 q^2 + p^5"]);
        assert_eq!(
            s,
            "ntp: (0,0) (5,0) (4,2) (2,3) (0,1)\nroof: (5,0) (4,2) (2,3)\n"
        );
    }
}
