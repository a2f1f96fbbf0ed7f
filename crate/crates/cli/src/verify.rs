use std::f64::consts::PI;

use braid_zeta::braid::BraidWord;
use braid_zeta::burau::squier_check;
use braid_zeta::numeric::{rh_check, UnitCirclePoint};
use braid_zeta::torus::{
    multi_torus_closed, multi_torus_residue, subset_sum_check, tensor_power_closed, tensor_power_flat,
    tensor_power_residue, tensor_zq, torus_alexander, torus_zeta_closed, TensorFamily, TorusSpec,
};
use braid_zeta::zeta::{
    alexander_poly, equal_up_to_unit, functional_equation_check, q_one_specialization_check,
    residue_at_one, trace_series_check, zeta_braid,
};
use braid_zeta::{Error, Result};
use num_integer::Integer as _;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Funceq,
    Qone,
    Series,
    Squier,
    Rh,
    Thm31,
    Thm32,
    Thm33,
    Lemma31,
}

pub struct Params {
    pub strands: Option<usize>,
    pub samples: usize,
    pub max_len: usize,
    pub seed: u64,
    pub order: usize,
    pub tol: f64,
    pub theta: Option<f64>,
    pub r: Option<u32>,
    pub cap: usize,
}

#[derive(Debug, Default)]
pub struct Tally {
    pub passed: usize,
    pub total: usize,
    pub counterexample: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.counterexample.is_none() {
            self.counterexample = Some(case());
        }
    }

    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }
}

fn corpus(p: &Params, rng: &mut ChaCha8Rng) -> Vec<BraidWord> {
    (0..p.samples)
        .map(|_| {
            let n = p.strands.unwrap_or_else(|| rng.random_range(2..=5));
            let len = rng.random_range(0..=p.max_len);
            BraidWord::random(rng, n, len)
        })
        .collect()
}

fn describe(w: &BraidWord) -> String {
    format!("B_{} word [{}]", w.strands(), w)
}

pub fn run(suite: Suite, p: &Params) -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut t = Tally::default();
    match suite {
        Suite::Funceq => {
            for w in corpus(p, &mut rng) {
                t.record(functional_equation_check(&w), || describe(&w));
            }
        }
        Suite::Qone => {
            for w in corpus(p, &mut rng) {
                t.record(q_one_specialization_check(&w), || describe(&w));
            }
        }
        Suite::Series => {
            for w in corpus(p, &mut rng) {
                t.record(trace_series_check(&w, p.order), || describe(&w));
            }
        }
        Suite::Squier => {
            for w in corpus(p, &mut rng) {
                t.record(squier_check(&w), || describe(&w));
            }
        }
        Suite::Rh => {
            for w in corpus(p, &mut rng) {
                let edge = 2.0 * PI / w.strands() as f64;
                let theta = p.theta.unwrap_or_else(|| rng.random_range(-edge..edge));
                let report = rh_check(&w, UnitCirclePoint::new(theta), p.tol)?;
                t.record(report.rh_satisfied, || {
                    format!("{} at theta = {theta}: deviation {:e}", describe(&w), report.max_deviation)
                });
            }
        }
        Suite::Thm31 => {
            let max_n = p.strands.unwrap_or(6);
            for n in 2..=max_n {
                for m in -7i64..=7 {
                    if (n as i64).gcd(&m) != 1 {
                        continue;
                    }
                    let spec = TorusSpec::new(n, m)?;
                    let direct = zeta_braid(&spec.word()).value;
                    let delta = alexander_poly(&spec.word())?;
                    let closed_delta = torus_alexander(spec).to_laurent();
                    let ok = direct == torus_zeta_closed(spec)
                        && closed_delta.is_some_and(|d| equal_up_to_unit(&d, &delta.raw));
                    t.record(ok, || format!("T({n},{m})"));
                }
            }
        }
        Suite::Thm32 => {
            let max_r = p.r.unwrap_or(2);
            for n in [3usize, 5, 7] {
                for m in [-2i64, -1, 1, 2] {
                    for r in 2..=max_r {
                        let Ok(spec) = TorusSpec::new(n, m) else { continue };
                        let closed = match tensor_power_closed(spec, r) {
                            Ok(c) => c,
                            Err(Error::NotCoprime { .. }) => continue,
                            Err(e) => return Err(e),
                        };
                        let mut ok = closed == tensor_power_flat(n, m, r)?
                            && tensor_power_residue(spec, r)? == residue_at_one(&closed)?;
                        if n.pow(r) <= p.cap {
                            ok &= tensor_zq(&vec![spec.word(); r as usize], p.cap, None)? == closed;
                        }
                        t.record(ok, || format!("(n, m, r) = ({n}, {m}, {r})"));
                    }
                }
            }
        }
        Suite::Thm33 => {
            let ns = [2usize, 3, 5, 7];
            'outer: for (i, &n1) in ns.iter().enumerate() {
                for &n2 in &ns[i + 1..] {
                    if n1 * n2 > p.cap {
                        continue;
                    }
                    for m1 in -3i64..=3 {
                        for m2 in -3i64..=3 {
                            if t.total >= p.samples {
                                break 'outer;
                            }
                            let Ok(f) = TensorFamily::new(vec![(n1, m1), (n2, m2)]) else { continue };
                            let closed = multi_torus_closed(&f)?;
                            let direct = tensor_zq(&f.words(), p.cap, None)?;
                            let ok = closed == direct && multi_torus_residue(&f)? == residue_at_one(&direct)?;
                            t.record(ok, || format!("family {:?}", f.specs()));
                        }
                    }
                }
            }
        }
        Suite::Lemma31 => {
            for r in 1..=p.r.unwrap_or(8) {
                t.record(subset_sum_check(r)?, || format!("r = {r}"));
            }
        }
    }
    Ok(t)
}
