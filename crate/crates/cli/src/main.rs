mod render;
mod verify;

use std::process::ExitCode;

use braid_zeta::algebra::{LaurentPoly, RationalFn, RationalQ};
use braid_zeta::braid::BraidWord;
use braid_zeta::numeric::{UnitCirclePoint, ROOT_OF_UNITY_MAX_ORDER};
use braid_zeta::torus::{
    multi_torus_closed, multi_torus_flat, multi_torus_nested, multi_torus_residue, multi_torus_residue_formula,
    tensor_power_closed, tensor_power_flat, tensor_power_nested, tensor_power_residue,
    tensor_power_residue_formula, tensor_zq, torus_alexander, torus_zeta_closed, TensorFamily, TorusSpec,
    DEFAULT_DIMENSION_CAP,
};
use braid_zeta::zeta::{alexander_poly, equal_up_to_unit, residue_at_one, zeta_braid};
use braid_zeta::Error;
use clap::{Parser, Subcommand, ValueEnum};
use render::{Format, Output, Payload};
use verify::{Params, Suite};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "braidzeta", version, about = "Zeta functions of braids through the Burau representation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Strand count; inferred from the word when omitted.
    #[arg(long, global = true)]
    strands: Option<usize>,
    /// Tolerance for numeric checks.
    #[arg(long, global = true, default_value_t = braid_zeta::numeric::MODULUS_TOL)]
    tol: f64,
    /// Largest tensor dimension computed by a direct determinant.
    #[arg(long, global = true, default_value_t = DEFAULT_DIMENSION_CAP)]
    cap: usize,
    /// Evaluate formulas even when their coprimality hypotheses fail.
    #[arg(long, global = true)]
    force: bool,
    /// Compare the closed form with the direct computation.
    #[arg(long, global = true)]
    check: bool,
    /// Series order for the trace check.
    #[arg(long, global = true, default_value_t = 12)]
    order: usize,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random samples.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Maximum random word length.
    #[arg(long, global = true, default_value_t = 12)]
    max_len: usize,
    /// Fixed evaluation angle for q = e^{i theta}.
    #[arg(long, global = true, allow_negative_numbers = true)]
    theta: Option<f64>,
    /// Tensor power, or the largest r for the subset and power suites.
    #[arg(long, global = true)]
    r: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta function of a braid word, e.g. "1 1 1".
    Zeta {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Normalized Alexander polynomial of a knot closure.
    Alexander {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Residue of the zeta function at s = 1.
    Residue {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Closed forms for the torus-type braid (s_1 ... s_{n-1})^m.
    #[command(allow_negative_numbers = true)]
    Torus { n: usize, m: i64, what: TorusWhat },
    /// Tensor products of torus-type braids, given as "n,m n,m ...".
    Tensor {
        #[arg(allow_hyphen_values = true)]
        specs: String,
        what: TensorWhat,
    },
    /// Run a verification suite.
    Verify { suite: Suite },
}

#[derive(Clone, Copy, ValueEnum)]
enum TorusWhat {
    Zeta,
    Alexander,
    Residue,
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorWhat {
    Zq,
    Closed,
    Residue,
}

type CmdResult = Result<(Output, bool), Error>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::StrandMismatch { .. } | Error::EmptyAmbiguous => 2,
        Error::NotAKnot { .. } => 4,
        Error::NotCoprime { .. } | Error::FamilyInvariantViolated(_) => 5,
        _ => 3,
    }
}

fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    BraidWord::parse(text, strands)
}

fn require_knot(w: &BraidWord) -> Result<(), Error> {
    if w.is_knot() {
        Ok(())
    } else {
        Err(Error::NotAKnot { cycles: w.permutation().cycle_type() })
    }
}

fn word_meta(out: Output, w: &BraidWord) -> Output {
    out.meta("strands", w.strands()).meta("word", w.letters().to_vec())
}

fn verdict(out: Output, holds: bool) -> (Output, bool) {
    let line = if holds { "IDENTITY HOLDS" } else { "IDENTITY FAILS" };
    (out.meta("check", holds).note(line), holds)
}

fn torus_residue_closed(t: TorusSpec) -> Result<RationalQ, Error> {
    let qn = LaurentPoly::q_integer(t.n() as i64)?;
    let delta = torus_alexander(t);
    match delta.to_laurent() {
        Some(d) => RationalQ::new(-LaurentPoly::one(), &qn * &d),
        None => Ok(-(&RationalQ::from_laurent(qn) * &delta).inv()?),
    }
}

fn cmd_torus(cli: &Cli, n: usize, m: i64, what: TorusWhat) -> CmdResult {
    let word = BraidWord::torus(n, m);
    let spec = match TorusSpec::new(n, m) {
        Ok(s) => Some(s),
        Err(Error::NotCoprime { .. }) if cli.force => None,
        Err(e) => return Err(e),
    };
    let out = |kind, p| word_meta(Output::new(kind, p), &word).meta("n", n).meta("m", m);
    let Some(spec) = spec else {
        // hypotheses fail: only the direct computation is meaningful
        let z = zeta_braid(&word).value;
        let o = match what {
            TorusWhat::Zeta => out("zeta", Payload::Zeta(z)),
            TorusWhat::Residue => out("residue", Payload::Scalar(residue_at_one(&z)?)),
            TorusWhat::Alexander => out("alexander", Payload::Poly(alexander_poly(&word)?.poly)),
        };
        return Ok((o.meta("route", "determinant"), true));
    };
    let o = match what {
        TorusWhat::Zeta => {
            let closed = torus_zeta_closed(spec);
            let holds = cli.check.then(|| zeta_braid(&word).value == closed);
            (out("zeta", Payload::Zeta(closed)), holds)
        }
        TorusWhat::Residue => {
            let closed = torus_residue_closed(spec)?;
            let holds = match cli.check {
                true => Some(residue_at_one(&zeta_braid(&word).value)? == closed),
                false => None,
            };
            (out("residue", Payload::Scalar(closed)), holds)
        }
        TorusWhat::Alexander => {
            let closed = torus_alexander(spec);
            let holds = match cli.check {
                true => {
                    let direct = alexander_poly(&word)?;
                    Some(closed.to_laurent().is_some_and(|d| equal_up_to_unit(&d, &direct.raw)))
                }
                false => None,
            };
            let payload = closed.to_laurent().map_or(Payload::Scalar(closed), Payload::Poly);
            (out("alexander", payload), holds)
        }
    };
    match o {
        (o, Some(h)) => Ok(verdict(o.meta("route", "closed"), h)),
        (o, None) => Ok((o.meta("route", "closed"), true)),
    }
}

fn parse_specs(text: &str) -> Result<Vec<(usize, i64)>, Error> {
    let bad = || Error::Parse(format!("expected \"n,m n,m ...\", got {text:?}"));
    let specs = text
        .split_whitespace()
        .map(|pair| {
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    if specs.is_empty() {
        return Err(bad());
    }
    Ok(specs)
}

struct TensorRoutes {
    words: Vec<BraidWord>,
    closed: RationalFn,
    /// Second closed-form route, used when the determinant is over the cap.
    flat: RationalFn,
    residue: RationalQ,
}

fn tensor_routes(cli: &Cli, specs: &[(usize, i64)]) -> Result<TensorRoutes, Error> {
    if let (Some(r), [(n, m)]) = (cli.r, specs) {
        let (n, m) = (*n, *m);
        let words = vec![BraidWord::torus(n, m); r as usize];
        let checked = TorusSpec::new(n, m).and_then(|t| {
            Ok((tensor_power_closed(t, r)?, tensor_power_residue(t, r)?))
        });
        let (closed, residue) = match checked {
            Ok(v) => v,
            Err(Error::NotCoprime { .. }) if cli.force => {
                (tensor_power_nested(n, m, r)?, tensor_power_residue_formula(n, m, r)?)
            }
            Err(e) => return Err(e),
        };
        return Ok(TensorRoutes { words, flat: tensor_power_flat(n, m, r)?, closed, residue });
    }
    let family = match TensorFamily::new(specs.to_vec()) {
        Ok(f) => f,
        Err(Error::FamilyInvariantViolated(_) | Error::NotCoprime { .. }) if cli.force => {
            TensorFamily::new_unchecked(specs.to_vec())?
        }
        Err(e) => return Err(e),
    };
    let (closed, residue) = match family.check_invariants() {
        Ok(()) => (multi_torus_closed(&family)?, multi_torus_residue(&family)?),
        Err(_) => (multi_torus_nested(&family), multi_torus_residue_formula(&family)?),
    };
    Ok(TensorRoutes { words: family.words(), flat: multi_torus_flat(&family), closed, residue })
}

fn cmd_tensor(cli: &Cli, specs: &str, what: TensorWhat) -> CmdResult {
    let specs = parse_specs(specs)?;
    let routes = tensor_routes(cli, &specs)?;
    let dim: usize = routes.words.iter().map(|w| w.strands()).product();
    let spec_meta: Vec<_> = specs.iter().map(|&(n, m)| vec![n as i64, m]).collect();
    let meta = |o: Output| o.meta("specs", spec_meta.clone()).meta("dimension", dim).meta("r", cli.r);
    let direct = || tensor_zq(&routes.words, cli.cap, None);
    let out = match what {
        TensorWhat::Zq => meta(Output::new("tensor_zq", Payload::Zeta(direct()?))).meta("route", "determinant"),
        TensorWhat::Closed => meta(Output::new("tensor_closed", Payload::Zeta(routes.closed.clone()))),
        TensorWhat::Residue => meta(Output::new("tensor_residue", Payload::Scalar(routes.residue.clone()))),
    };
    if !cli.check {
        return Ok((out, true));
    }
    let (other, route) = if dim <= cli.cap {
        (direct()?, "determinant")
    } else {
        (routes.flat.clone(), "flat product")
    };
    let holds = match what {
        TensorWhat::Residue => residue_at_one(&other)? == routes.residue,
        _ => other == routes.closed,
    };
    Ok(verdict(out.meta("checked_against", route), holds))
}

fn cmd_verify(cli: &Cli, suite: Suite) -> CmdResult {
    if let Some(theta) = cli.theta {
        if let Some(k) = UnitCirclePoint::new(theta).near_root_of_unity(ROOT_OF_UNITY_MAX_ORDER) {
            eprintln!("warning: q = e^(i*{theta}) is close to a root of unity of order {k}");
        }
    }
    let params = Params {
        strands: cli.strands,
        samples: cli.samples,
        max_len: cli.max_len,
        seed: cli.seed,
        order: cli.order,
        tol: cli.tol,
        theta: cli.theta,
        r: cli.r,
        cap: cli.cap,
    };
    let tally = verify::run(suite, &params)?;
    let suite_name = suite.to_possible_value().map(|v| v.get_name().to_string());
    let mut out = Output::new("verify", Payload::Report)
        .meta("suite", suite_name)
        .meta("passed", tally.passed)
        .meta("total", tally.total)
        .meta("seed", cli.seed)
        .meta("counterexample", tally.counterexample.clone())
        .note(format!("{}/{} pass", tally.passed, tally.total));
    if let Some(c) = &tally.counterexample {
        out = out.note(format!("first counterexample: {c}"));
    }
    Ok((out, tally.all_pass()))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Zeta { word } => {
            let w = parse_word(word, cli.strands)?;
            let z = zeta_braid(&w);
            Ok((word_meta(Output::new("zeta", Payload::Zeta(z.value)), &w), true))
        }
        Command::Alexander { word } => {
            let w = parse_word(word, cli.strands)?;
            require_knot(&w)?;
            let a = alexander_poly(&w)?;
            let unit = a.unit();
            let out = Output::new("alexander", Payload::Poly(a.poly))
                .meta("unit", unit.to_string())
                .meta("sign", a.sign)
                .meta("shift", a.shift)
                .meta("raw", a.raw.to_string())
                .note(format!("unit: {unit}"));
            Ok((word_meta(out, &w), true))
        }
        Command::Residue { word } => {
            let w = parse_word(word, cli.strands)?;
            require_knot(&w)?;
            let r = zeta_braid(&w).residue()?;
            Ok((word_meta(Output::new("residue", Payload::Scalar(r)), &w), true))
        }
        Command::Torus { n, m, what } => cmd_torus(cli, *n, *m, *what),
        Command::Tensor { specs, what } => cmd_tensor(cli, specs, *what),
        Command::Verify { suite } => cmd_verify(cli, *suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.tol.is_nan() || cli.tol <= 0.0 || cli.cap == 0 {
        eprintln!("error: --tol must be positive and --cap at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok((out, ok)) => {
            println!("{}", out.render(cli.format));
            if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            match &e {
                Error::NotAKnot { cycles } => eprintln!("error: {e} ({} components)", cycles.len()),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
