//! Polynomials in `s` whose coefficients are Laurent polynomials in `q`
//! (elements of `Λ[s]`). Coefficients are stored densely by `s`-degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{ExactDivision, Ring};
use super::{Integer, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyS {
    coeffs: Vec<LaurentPoly>,
}

impl PolyS {
    pub fn zero() -> Self {
        PolyS { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * s^deg`.
    pub fn monomial(c: LaurentPoly, deg: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn s() -> Self {
        Self::monomial(LaurentPoly::one(), 1)
    }

    /// `1 - s`.
    pub fn one_minus_s() -> Self {
        Self::one_minus(LaurentPoly::one(), 1)
    }

    /// `1 - c * s^deg`.
    pub fn one_minus(c: LaurentPoly, deg: usize) -> Self {
        &Self::one() - &Self::monomial(c, deg)
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyS { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn constant_term(&self) -> LaurentPoly {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> Option<&LaurentPoly> {
        self.coeffs.last()
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Multiplies by `s^k`.
    pub fn mul_s_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyS { coeffs }
    }

    /// Evaluates at `s = x` (Horner).
    pub fn eval(&self, x: &LaurentPoly) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Value at `s = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Substitutes `s -> c * s`.
    pub fn substitute_scale(&self, c: &LaurentPoly) -> Self {
        let mut power = LaurentPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x * &power);
            power = &power * c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `s^len * p(1/s)`; requires `len >= degree`.
    pub fn reversed(&self, len: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= len));
        Self::from_coeffs((0..=len).map(|k| self.coeff(len - k)).collect())
    }

    /// Sets `q = 1` in every coefficient.
    pub fn specialize_q_one(&self) -> Self {
        self.map_coeffs(|c| LaurentPoly::constant(c.eval_at_one()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in `Λ[s]`, or `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let lead = &rhs.coeffs[db];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![LaurentPoly::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            if rem[k + db].is_zero() {
                continue;
            }
            let c = rem[k + db].div_exact(lead)?;
            for (j, bj) in rhs.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    rem[k + j] -= &(&c * bj);
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Like [`PolyS::div_exact`], reporting a remainder as an error.
    pub fn divide(&self, rhs: &Self) -> Result<Self> {
        self.div_exact(rhs)
            .ok_or_else(|| Error::NonExactDivision(format!("({self}) / ({rhs})")))
    }

    /// Largest `k` with `(1 - s)^k` dividing `self`, and the cofactor. Zero has no
    /// finite multiplicity and is returned unchanged with `k = 0`.
    pub fn split_one_minus_s(&self) -> (usize, Self) {
        let factor = Self::one_minus_s();
        let mut k = 0;
        let mut rest = self.clone();
        while !rest.is_zero() && rest.eval_at_one().is_zero() {
            rest = rest
                .div_exact(&factor)
                .expect("vanishing at s = 1 implies divisibility by 1 - s");
            k += 1;
        }
        (k, rest)
    }

    fn render(&self, latex: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff_str = if latex { c.to_latex() } else { c.to_compact_string() };
            let s_part = match (k, latex) {
                (0, _) => String::new(),
                (1, _) => "s".to_string(),
                (k, true) => format!("s^{{{k}}}"),
                (k, false) => format!("s^{k}"),
            };
            let term = if k == 0 {
                coeff_str
            } else if c.is_one() {
                s_part
            } else if (-c).is_one() {
                format!("-{s_part}")
            } else if c.len() == 1 {
                if latex {
                    format!("{coeff_str} {s_part}")
                } else {
                    format!("{coeff_str}*{s_part}")
                }
            } else if latex {
                format!("\\left({coeff_str}\\right) {s_part}")
            } else {
                format!("({coeff_str})*{s_part}")
            };
            match (out.is_empty(), term.strip_prefix('-')) {
                (true, _) => out.push_str(&term),
                (false, Some(rest)) if latex => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (false, Some(_)) => out.push_str(&term),
                (false, None) => {
                    out.push_str(if latex { " + " } else { "+" });
                    out.push_str(&term);
                }
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    /// True when the polynomial renders as a single product-free term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
            && self.coeffs.iter().all(|c| c.len() <= 1)
    }
}

impl fmt::Display for PolyS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

fn add_coeffs(a: &PolyS, b: &PolyS, negate: bool) -> PolyS {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.coeffs.get(k);
        let y = b.coeffs.get(k);
        out.push(match (x, y) {
            (Some(x), Some(y)) if negate => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if negate => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    PolyS::from_coeffs(out)
}

fn mul_coeffs(a: &PolyS, b: &PolyS) -> PolyS {
    if a.is_zero() || b.is_zero() {
        return PolyS::zero();
    }
    let mut out = vec![LaurentPoly::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    PolyS::from_coeffs(out)
}

impl Ring for PolyS {
    fn zero() -> Self {
        PolyS::zero()
    }
    fn one() -> Self {
        PolyS::one()
    }
    fn is_zero(&self) -> bool {
        PolyS::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        add_coeffs(self, rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        add_coeffs(self, rhs, true)
    }
    fn mul(&self, rhs: &Self) -> Self {
        mul_coeffs(self, rhs)
    }
    fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }
}

impl ExactDivision for PolyS {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        PolyS::div_exact(self, rhs)
    }
}

macro_rules! polys_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&PolyS> for &PolyS {
            type Output = PolyS;
            fn $method(self, rhs: &PolyS) -> PolyS {
                $body(self, rhs)
            }
        }
        impl $trait<PolyS> for PolyS {
            type Output = PolyS;
            fn $method(self, rhs: PolyS) -> PolyS {
                $body(&self, &rhs)
            }
        }
        impl $trait<&PolyS> for PolyS {
            type Output = PolyS;
            fn $method(self, rhs: &PolyS) -> PolyS {
                $body(&self, rhs)
            }
        }
    };
}

polys_binop!(Add, add, |a, b| add_coeffs(a, b, false));
polys_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
polys_binop!(Mul, mul, mul_coeffs);

impl Neg for &PolyS {
    type Output = PolyS;
    fn neg(self) -> PolyS {
        Ring::neg(self)
    }
}

impl Neg for PolyS {
    type Output = PolyS;
    fn neg(self) -> PolyS {
        Ring::neg(&self)
    }
}

impl From<LaurentPoly> for PolyS {
    fn from(c: LaurentPoly) -> Self {
        PolyS::constant(c)
    }
}

impl From<i64> for PolyS {
    fn from(c: i64) -> Self {
        PolyS::constant(LaurentPoly::constant(Integer::from(c)))
    }
}

/// Serialized as a list of Laurent coefficient lists indexed by `s`-degree.
impl Serialize for PolyS {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.coeffs)
    }
}

impl<'de> Deserialize<'de> for PolyS {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<LaurentPoly>::deserialize(deserializer).map(PolyS::from_coeffs)
    }
}
