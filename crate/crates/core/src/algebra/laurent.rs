//! Laurent polynomials in one variable `q` over the integers, i.e. elements of
//! `Z[q, q^-1]`.
//!
//! Terms are stored sparsely as `(exponent, coefficient)` pairs sorted by exponent
//! with no zero coefficients, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{ExactDivision, Ring};
use super::Integer;
use crate::error::{Error, Result};

/// Dense scratch buffers are used for products whose exponent span stays below this.
const DENSE_SPAN_LIMIT: i64 = 1 << 16;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, Integer)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<Integer>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(exp, c)] }
        }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `1 - q^exp`.
    pub fn one_minus_q_pow(exp: i64) -> Self {
        Self::one() - Self::q_pow(exp)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<C: Into<Integer>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut map: BTreeMap<i64, Integer> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += &c.into();
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Coefficients listed from `q^low` upwards.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, c)))
    }

    /// `[n]_q = 1 + q + ... + q^(n-1)`.
    pub fn q_integer(n: i64) -> Result<Self> {
        if n <= 0 {
            return Err(Error::InvalidArgument(format!(
                "q-integer requires n >= 1, got {n}"
            )));
        }
        Ok(LaurentPoly {
            terms: (0..n).map(|e| (e, Integer::ONE)).collect(),
        })
    }

    pub fn terms(&self) -> &[(i64, Integer)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, exp: i64) -> Integer {
        self.terms
            .binary_search_by_key(&exp, |(e, _)| *e)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Returns `(sign, k)` when `self == sign * q^k` with `sign = ±1`.
    pub fn as_unit(&self) -> Option<(i32, i64)> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs().is_one() => Some((c.signum(), *e)),
            _ => None,
        }
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_unit()
            .map(|(sign, k)| Self::monomial(sign as i64, -k))
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        if k > 0 {
            LaurentPoly {
                terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            }
        } else {
            Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Integer {
        let mut acc = Integer::ZERO;
        for (_, c) in &self.terms {
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        let fix = |c: &Integer| if negate_rhs { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, fix(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_rhs {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, fix(c))));
        LaurentPoly { terms: out }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (single, other) = if self.terms.len() == 1 {
                (&self.terms[0], rhs)
            } else {
                (&rhs.terms[0], self)
            };
            return LaurentPoly {
                terms: other
                    .terms
                    .iter()
                    .map(|(e, c)| (e + single.0, c * &single.1))
                    .collect(),
            };
        }
        let low = self.terms[0].0 + rhs.terms[0].0;
        let high = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let span = high - low + 1;
        if span <= DENSE_SPAN_LIMIT {
            if let Some(p) = self.mul_dense_small(rhs, low, span as usize) {
                return p;
            }
            let mut acc = vec![Integer::ZERO; span as usize];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    acc[(ea + eb - low) as usize] += &(ca * cb);
                }
            }
            return Self::from_dense(low, acc);
        }
        Self::from_terms(self.terms.iter().flat_map(|(ea, ca)| {
            rhs.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb))
        }))
    }

    /// Machine-word product; `None` if any coefficient is large or a sum overflows.
    fn mul_dense_small(&self, rhs: &Self, low: i64, span: usize) -> Option<Self> {
        let small = |p: &Self| -> Option<Vec<(i64, i64)>> {
            p.terms.iter().map(|(e, c)| c.as_i64().map(|v| (*e, v))).collect()
        };
        let a = small(self)?;
        let b = small(rhs)?;
        let mut acc = vec![0i128; span];
        for &(ea, ca) in &a {
            for &(eb, cb) in &b {
                let slot = &mut acc[(ea + eb - low) as usize];
                *slot = slot.checked_add(ca as i128 * cb as i128)?;
            }
        }
        Some(LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (low + i as i64, Integer::from(c)))
                .collect(),
        })
    }

    fn from_dense(low: i64, coeffs: Vec<Integer>) -> Self {
        LaurentPoly {
            terms: coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (low + i as i64, c))
                .collect(),
        }
    }

    /// Exact quotient in `Z[q, q^-1]`, or `None` when `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let [(e, c)] = rhs.terms.as_slice() {
            let terms: Option<Vec<_>> = self
                .terms
                .iter()
                .map(|(ea, ca)| ca.div_exact(c).map(|x| (ea - e, x)))
                .collect();
            return terms.map(|terms| LaurentPoly { terms });
        }
        // Shift both operands into Z[q] with nonzero constant terms, then long-divide.
        let (amin, amax) = (self.min_exp()?, self.max_exp()?);
        let (bmin, bmax) = (rhs.min_exp()?, rhs.max_exp()?);
        let la = (amax - amin + 1) as usize;
        let lb = (bmax - bmin + 1) as usize;
        if la < lb {
            return None;
        }
        let mut a = vec![Integer::ZERO; la];
        for (e, c) in &self.terms {
            a[(e - amin) as usize] = c.clone();
        }
        let mut b = vec![Integer::ZERO; lb];
        for (e, c) in &rhs.terms {
            b[(e - bmin) as usize] = c.clone();
        }
        let lead = &b[lb - 1];
        let mut quot = vec![Integer::ZERO; la - lb + 1];
        for i in (0..=la - lb).rev() {
            let top = &a[i + lb - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead)?;
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    a[i + j] -= &(&c * bj);
                }
            }
            quot[i] = c;
        }
        if a.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(amin - bmin, quot))
    }

    fn render(&self, f: &mut impl fmt::Write, style: Style) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.signum() < 0;
            let abs = c.abs();
            match (idx == 0, negative, style.spaced) {
                (true, true, _) => f.write_str("-")?,
                (true, false, _) => {}
                (false, true, true) => f.write_str(" - ")?,
                (false, true, false) => f.write_str("-")?,
                (false, false, true) => f.write_str(" + ")?,
                (false, false, false) => f.write_str("+")?,
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}{}", style.times)?;
            }
            match (*e, style.latex) {
                (1, _) => f.write_str("q")?,
                (e, true) => write!(f, "q^{{{e}}}")?,
                (e, false) => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }

    /// Rendering without spaces, e.g. `1-q+q^2`, for use inside larger expressions.
    pub fn to_compact_string(&self) -> String {
        let mut s = String::new();
        self.render(&mut s, Style::COMPACT).unwrap();
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.render(&mut s, Style::LATEX).unwrap();
        s
    }
}

#[derive(Clone, Copy)]
struct Style {
    spaced: bool,
    latex: bool,
    times: &'static str,
}

impl Style {
    const SPACED: Style = Style { spaced: true, latex: false, times: "*" };
    const COMPACT: Style = Style { spaced: false, latex: false, times: "*" };
    const LATEX: Style = Style { spaced: true, latex: true, times: "" };
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, Style::SPACED)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl ExactDivision for LaurentPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, rhs)
    }
}

macro_rules! laurent_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

laurent_binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| a.add_impl(b, false));
laurent_binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| a.add_impl(b, true));
laurent_binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a.mul_impl(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_impl(rhs, true);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Ring::neg(&self)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Ring::neg(self)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Integer> for LaurentPoly {
    fn from(c: Integer) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Serialized as `[[exponent, "coefficient"], ...]` sorted by exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(e, c)| (*e, c.to_string())))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let c: Integer = c.parse().map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&lp(0, &[1, -1]) * &lp(0, &[1, 1]), lp(0, &[1, 0, -1]));
    }

    #[test]
    fn add_disjoint_exponents() {
        let sum = LaurentPoly::q_pow(-1) + LaurentPoly::q();
        assert_eq!(sum.terms().len(), 2);
        assert_eq!(sum, LaurentPoly::from_terms([(-1, 1), (1, 1)]));
    }

    #[test]
    fn multiply_by_q() {
        assert_eq!(&lp(0, &[1, -1, 1]) * &LaurentPoly::q(), lp(1, &[1, -1, 1]));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = lp(0, &[1, 2, 3]);
        assert!((&a - &a).is_zero());
        assert!((&a - &a).terms().is_empty());
    }

    #[test]
    fn bar_involution_examples() {
        assert_eq!(LaurentPoly::q().bar(), LaurentPoly::q_pow(-1));
        assert_eq!(lp(0, &[1, -1, 1]).bar(), lp(-2, &[1, -1, 1]));
        assert_eq!(LaurentPoly::constant(5).bar(), LaurentPoly::constant(5));
    }

    #[test]
    fn q_integers() {
        assert_eq!(LaurentPoly::q_integer(1).unwrap(), LaurentPoly::one());
        assert_eq!(LaurentPoly::q_integer(3).unwrap(), lp(0, &[1, 1, 1]));
        assert_eq!(LaurentPoly::q_integer(5).unwrap(), lp(0, &[1, 1, 1, 1, 1]));
        assert!(LaurentPoly::q_integer(0).is_err());
        assert!(LaurentPoly::q_integer(-2).is_err());
    }

    #[test]
    fn exact_division() {
        let a = lp(-3, &[2, 0, -1, 5, 7]);
        let b = lp(1, &[1, -2, 3]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(lp(0, &[1, 0, 1]).div_exact(&lp(0, &[1, 1])), None);
        assert_eq!(lp(0, &[3, 3]).div_exact(&LaurentPoly::constant(2)), None);
        assert_eq!(lp(0, &[1, 1]).div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn units() {
        assert_eq!(LaurentPoly::monomial(-1, 3).as_unit(), Some((-1, 3)));
        assert_eq!(LaurentPoly::monomial(2, 3).as_unit(), None);
        assert_eq!(
            LaurentPoly::monomial(-1, 3).unit_inverse(),
            Some(LaurentPoly::monomial(-1, -3))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(lp(0, &[1, -1, 1]).to_string(), "1 - q + q^2");
        assert_eq!(lp(0, &[1, -1, 1]).to_compact_string(), "1-q+q^2");
        assert_eq!(lp(-1, &[-2, 0, 1]).to_string(), "-2*q^-1 + q");
        assert_eq!(lp(0, &[0, 0, 0, 1]).to_latex(), "q^{3}");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn large_coefficients_survive_products() {
        let big = LaurentPoly::from_terms([(0, i64::MAX), (1, i64::MAX)]);
        let sq = &big * &big;
        assert_eq!(sq.coeff(1).to_string(), "170141183460469231694793815568465002498");
        assert_eq!(sq.div_exact(&big), Some(big));
    }

    #[test]
    fn json_shape() {
        let p = lp(-1, &[3, 0, -2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[-1,"3"],[1,"-2"]]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
