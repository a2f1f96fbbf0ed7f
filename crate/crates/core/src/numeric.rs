//! Floating-point checks at `q = e^{iθ}`: eigenvalue moduli of the reduced Burau
//! image and the spectrum of Squier's form.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentMatrix, LaurentPoly};
use crate::braid::BraidWord;
use crate::burau::{reduced_burau_matrix, squier_form};
use crate::error::{Error, Result};

/// Default tolerance for eigenvalue moduli.
pub const MODULUS_TOL: f64 = 1e-8;
/// Default tolerance for matrix identities.
pub const MATRIX_TOL: f64 = 1e-9;

const SCHUR_EPS: f64 = 1e-14;
const SCHUR_MAX_ITER: usize = 10_000;

/// Roots of unity up to this order are flagged in reports.
pub const ROOT_OF_UNITY_MAX_ORDER: u32 = 12;
const ROOT_OF_UNITY_TOL: f64 = 1e-6;

/// `q = e^{iθ}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitCirclePoint {
    pub theta: f64,
}

impl UnitCirclePoint {
    pub fn new(theta: f64) -> Self {
        UnitCirclePoint { theta }
    }

    pub fn q(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// `t = q^{1/2} = e^{iθ/2}`.
    pub fn t(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta / 2.0)
    }

    /// Smallest order `k <= max_order` with `q^k` within `ROOT_OF_UNITY_TOL` of 1.
    pub fn near_root_of_unity(&self, max_order: u32) -> Option<u32> {
        (1..=max_order).find(|&k| (self.q().powu(k) - 1.0).norm() < ROOT_OF_UNITY_TOL)
    }
}

pub fn eval_laurent(p: &LaurentPoly, z: Complex64) -> Complex64 {
    p.terms()
        .iter()
        .map(|(e, c)| z.powi(*e as i32) * c.to_f64())
        .sum()
}

/// Evaluates every entry at `z`.
pub fn eval_at(m: &LaurentMatrix, z: Complex64) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| eval_laurent(&m[(i, j)], z))
}

/// Evaluates a matrix over `Z[q, q^-1]` at `q = e^{iθ}`.
pub fn eval_matrix(m: &LaurentMatrix, p: UnitCirclePoint) -> DMatrix<Complex64> {
    eval_at(m, p.q())
}

/// Evaluates a matrix in the variable `t = q^{1/2}` at `t = e^{iθ/2}`.
pub fn eval_matrix_half(m: &LaurentMatrix, p: UnitCirclePoint) -> DMatrix<Complex64> {
    eval_at(m, p.t())
}

pub fn eigenvalues(m: DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    if m.is_empty() {
        return Ok(Vec::new());
    }
    let schur = m
        .try_schur(SCHUR_EPS, SCHUR_MAX_ITER)
        .ok_or(Error::EigenSolverFailure)?;
    let ev = schur.eigenvalues().ok_or(Error::EigenSolverFailure)?;
    Ok(ev.iter().copied().collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub theta: f64,
    pub strands: usize,
    pub word: Vec<i64>,
    /// `[re, im]` pairs.
    pub eigenvalues: Vec<[f64; 2]>,
    pub max_deviation: f64,
    pub rh_satisfied: bool,
    /// `|θ| < 2π/n`, where the modulus property is guaranteed.
    pub in_window: bool,
    /// Set when `q` is within tolerance of a root of unity of small order.
    pub near_root_of_unity: Option<u32>,
}

/// Eigenvalues of `β^r_{n,q}(w)` at `q = e^{iθ}` and their distance from the unit circle.
pub fn rh_check(w: &BraidWord, p: UnitCirclePoint, tol: f64) -> Result<SpectrumReport> {
    let n = w.strands();
    let m = eval_matrix(&reduced_burau_matrix(w).matrix, p);
    let ev = eigenvalues(m)?;
    let max_deviation = ev.iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max);
    Ok(SpectrumReport {
        theta: p.theta,
        strands: n,
        word: w.letters().to_vec(),
        eigenvalues: ev.iter().map(|z| [z.re, z.im]).collect(),
        max_deviation,
        rh_satisfied: max_deviation <= tol,
        in_window: p.theta.abs() < 2.0 * PI / n as f64,
        near_root_of_unity: p.near_root_of_unity(ROOT_OF_UNITY_MAX_ORDER),
    })
}

/// The spectrum of `Ω^r_n` at `q = e^{iθ}`, in closed form and from the matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaSpectrum {
    /// `2 cos(θ/2) - 2 cos(πj/n)` for `j = 1, …, n-1`, ascending.
    pub closed: Vec<f64>,
    /// Eigenvalues of the evaluated Hermitian matrix, ascending.
    pub computed: Vec<f64>,
}

impl OmegaSpectrum {
    pub fn max_discrepancy(&self) -> f64 {
        self.closed
            .iter()
            .zip(&self.computed)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn omega_closed(n: usize, theta: f64) -> Vec<f64> {
    (1..n)
        .map(|j| 2.0 * (theta / 2.0).cos() - 2.0 * (PI * j as f64 / n as f64).cos())
        .collect()
}

pub fn omega_spectrum(n: usize, theta: f64) -> Result<OmegaSpectrum> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Squier's form needs n >= 2, got {n}")));
    }
    let m = eval_matrix_half(&squier_form(n), UnitCirclePoint::new(theta));
    let mut computed: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    computed.sort_by(f64::total_cmp);
    Ok(OmegaSpectrum { closed: omega_closed(n, theta), computed })
}

/// Whether `Ω^r_n` is positive definite at `q = e^{iθ}`.
pub fn definiteness_window(n: usize, theta: f64) -> bool {
    omega_closed(n, theta).into_iter().fold(f64::INFINITY, f64::min) > 0.0
}

/// Frobenius norm of `β^r(w)^* Ω β^r(w) - Ω` at `q = e^{iθ}`.
pub fn squier_residual(w: &BraidWord, p: UnitCirclePoint) -> f64 {
    let b = reduced_burau_matrix(w).matrix.map(|x| x.substitute_power(2));
    let b = eval_matrix_half(&b, p);
    let omega = eval_matrix_half(&squier_form(w.strands()), p);
    (b.adjoint() * &omega * b - omega).norm()
}
