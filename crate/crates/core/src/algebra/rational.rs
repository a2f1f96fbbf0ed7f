//! Quotients of polynomials, compared by cross-multiplication.
//!
//! No GCD normalization is ever performed: `a/b == c/d` iff `a*d == c*b`.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use super::{LaurentPoly, PolyS};
use crate::error::{Error, Result};

/// A rational function in `s` with coefficients in `Z[q, q^-1]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalFn {
    num: PolyS,
    den: PolyS,
}

impl RationalFn {
    pub fn new(num: PolyS, den: PolyS) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: PolyS) -> Self {
        RationalFn { num: p, den: PolyS::one() }
    }

    /// `1 / den`.
    pub fn reciprocal_of(den: PolyS) -> Result<Self> {
        Self::new(PolyS::one(), den)
    }

    pub fn one() -> Self {
        Self::from_poly(PolyS::one())
    }

    pub fn num(&self) -> &PolyS {
        &self.num
    }

    pub fn den(&self) -> &PolyS {
        &self.den
    }

    pub fn into_parts(self) -> (PolyS, PolyS) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents swap numerator and denominator.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs() as u32;
        Ok(RationalFn {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Replaces `s` by `c * s` in numerator and denominator.
    pub fn substitute_s(&self, c: &LaurentPoly) -> Self {
        RationalFn {
            num: self.num.substitute_scale(c),
            den: self.den.substitute_scale(c),
        }
    }

    /// `s -> (-s)^(-n) * f(1/s)`, cleared of negative powers of `s`.
    pub fn reciprocal_transform(&self, n: usize) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let mut num = self.num.reversed(dn);
        let mut den = self.den.reversed(dd);
        if n % 2 == 1 {
            num = -num;
        }
        // (-s)^-n * s^(dd - dn) * rev(num) / rev(den)
        let shift = dd as i64 - dn as i64 - n as i64;
        if shift >= 0 {
            num = num.mul_s_pow(shift as usize);
        } else {
            den = den.mul_s_pow((-shift) as usize);
        }
        RationalFn { num, den }
    }

    /// Value at `s = c`, as a quotient of Laurent polynomials.
    pub fn eval_at(&self, c: &LaurentPoly) -> Result<RationalQ> {
        RationalQ::new(self.num.eval(c), self.den.eval(c))
    }

    pub fn specialize_q_one(&self) -> Result<Self> {
        Self::new(self.num.specialize_q_one(), self.den.specialize_q_one())
    }

    /// First `order + 1` coefficients of the power series at `s = 0`.
    ///
    /// The constant term of the denominator must be a unit `±q^k` of `Z[q, q^-1]`
    /// for the expansion to stay integral.
    pub fn series_expand(&self, order: usize) -> Result<Vec<LaurentPoly>> {
        let d0 = self.den.constant_term();
        let d0_inv = d0.unit_inverse().ok_or(Error::NonUnitConstantTerm)?;
        let den = self.den.coeffs();
        let mut out: Vec<LaurentPoly> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = self.num.coeff(m);
            for j in 1..=m.min(den.len().saturating_sub(1)) {
                if !den[j].is_zero() {
                    acc -= &(&den[j] * &out[m - j]);
                }
            }
            out.push(&acc * &d0_inv);
        }
        Ok(out)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: RationalFn) -> RationalFn {
        &self * &rhs
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// A quotient of Laurent polynomials, i.e. an element of `Q(q)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalQ {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalQ { num, den })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalQ { num: p, den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs() as u32;
        Ok(RationalQ {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// The quotient as a Laurent polynomial, when the division is exact.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }
}

impl PartialEq for RationalQ {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalQ {}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        RationalQ {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: RationalQ) -> RationalQ {
        &self * &rhs
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &LaurentPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    fn lin(c: LaurentPoly) -> PolyS {
        // 1 - c s
        PolyS::one_minus(c, 1)
    }

    #[test]
    fn geometric_series() {
        let f = RationalFn::reciprocal_of(PolyS::one_minus_s()).unwrap();
        assert_eq!(f.series_expand(3).unwrap(), vec![LaurentPoly::one(); 4]);
        let g = RationalFn::reciprocal_of(lin(q(1))).unwrap();
        assert_eq!(g.series_expand(2).unwrap(), vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn trefoil_series_first_coefficient() {
        // 1/((1-s)(1+q^3 s)) = 1 + (1-q^3)s + ...
        let den = &PolyS::one_minus_s() * &lin(-q(3));
        let f = RationalFn::reciprocal_of(den).unwrap();
        assert_eq!(
            f.series_expand(1).unwrap(),
            vec![LaurentPoly::one(), LaurentPoly::one_minus_q_pow(3)]
        );
    }

    #[test]
    fn series_needs_unit_constant_term() {
        let den = PolyS::from(2) + PolyS::s();
        let f = RationalFn::reciprocal_of(den).unwrap();
        assert!(matches!(f.series_expand(2), Err(Error::NonUnitConstantTerm)));
        let den = PolyS::constant(LaurentPoly::from_coeffs(0, &[1, 1]));
        let f = RationalFn::reciprocal_of(den).unwrap();
        assert!(matches!(f.series_expand(2), Err(Error::NonUnitConstantTerm)));
        // -q^2 is a unit
        let den = PolyS::constant(-q(2)) + PolyS::s();
        assert!(RationalFn::reciprocal_of(den).unwrap().series_expand(3).is_ok());
    }

    #[test]
    fn substitution() {
        let f = RationalFn::reciprocal_of(PolyS::one_minus_s()).unwrap();
        assert_eq!(f.substitute_s(&q(1)), RationalFn::reciprocal_of(lin(q(1))).unwrap());
        assert_eq!(f.substitute_s(&LaurentPoly::one()), f);

        // (1-q^3 s)/((1-s)(1-q^6 s^2)) with s -> q^2 s
        let g = RationalFn::new(
            lin(q(3)),
            &PolyS::one_minus_s() * &PolyS::one_minus(q(6), 2),
        )
        .unwrap();
        let expected = RationalFn::new(
            lin(q(5)),
            &lin(q(2)) * &PolyS::one_minus(q(10), 2),
        )
        .unwrap();
        assert_eq!(g.substitute_s(&q(2)), expected);
    }

    #[test]
    fn reciprocal_transform_examples() {
        let f = RationalFn::reciprocal_of(PolyS::one_minus_s()).unwrap();
        assert_eq!(f.reciprocal_transform(1), f);

        let one = RationalFn::one();
        let t = one.reciprocal_transform(2);
        assert!(t.num().is_one());
        assert_eq!(t.den(), &PolyS::monomial(LaurentPoly::one(), 2));

        // sigma_1 in B_2: 1/((1-s)(1+qs)); with sgn_q(sigma^-1) = -q^-1 and the
        // inverse zeta 1/((1-s)(1+q^-1 s)) the functional equation closes up.
        let inv = RationalFn::reciprocal_of(&PolyS::one_minus_s() * &lin(-q(-1))).unwrap();
        let rhs = inv.reciprocal_transform(2).scale(&-q(-1));
        let lhs = RationalFn::reciprocal_of(&PolyS::one_minus_s() * &lin(-q(1))).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cross_multiplication_equality() {
        // (1 - q s)/((1-s)(1-q^2 s^2)) == 1/((1-s)(1+q s))
        let a = RationalFn::new(lin(q(1)), &PolyS::one_minus_s() * &PolyS::one_minus(q(2), 2)).unwrap();
        let b = RationalFn::reciprocal_of(&PolyS::one_minus_s() * &lin(-q(1))).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, RationalFn::reciprocal_of(PolyS::one_minus_s()).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(RationalFn::new(PolyS::one(), PolyS::zero()), Err(Error::ZeroDenominator)));
        assert!(RationalQ::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn rational_q_display() {
        let r = RationalQ::new(-LaurentPoly::one(), LaurentPoly::from_coeffs(0, &[1, 0, 0, 1])).unwrap();
        assert_eq!(r.to_string(), "-1 / (1 + q^3)");
        let torus = RationalQ::new(
            &LaurentPoly::one_minus_q_pow(1) * &LaurentPoly::one_minus_q_pow(6),
            &LaurentPoly::one_minus_q_pow(2) * &LaurentPoly::one_minus_q_pow(3),
        )
        .unwrap();
        assert_eq!(torus.to_laurent(), Some(LaurentPoly::from_coeffs(0, &[1, -1, 1])));
    }
}
