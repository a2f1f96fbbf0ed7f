//! Torus-type braids `σ_{n,m} = (σ_1 ⋯ σ_{n-1})^m`: closed forms for their zeta
//! functions and Alexander polynomials, and the tensor-product function `Z_q`.
//!
//! Each closed form here is an independent construction; the tests compare it
//! against determinants of Burau images.

use std::sync::atomic::AtomicBool;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentMatrix, LaurentPoly, PolyS, RationalFn, RationalQ};
use crate::braid::BraidWord;
use crate::burau::burau_matrix;
use crate::error::{Error, Result};

/// Default bound on the dimension of Kronecker products handed to [`tensor_zq`].
pub const DEFAULT_DIMENSION_CAP: usize = 64;

/// Largest family size accepted by [`TensorFamily`].
pub const MAX_FAMILY_SIZE: usize = 6;

/// A coprime pair `(n, m)` with `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusSpec {
    n: usize,
    m: i64,
}

impl TorusSpec {
    pub fn new(n: usize, m: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("torus braids need n >= 2, got {n}")));
        }
        let g = (n as i64).gcd(&m);
        if g != 1 {
            return Err(Error::NotCoprime { a: n as i64, b: m, gcd: g });
        }
        Ok(TorusSpec { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn word(&self) -> BraidWord {
        BraidWord::torus(self.n, self.m)
    }
}

fn one_minus(c_exp: i64, deg: usize) -> PolyS {
    PolyS::one_minus(LaurentPoly::q_pow(c_exp), deg)
}

/// Multiplies `acc` by `f^e`, moving factors with negative exponents to the denominator.
fn mul_pow(acc: &RationalFn, f: &RationalFn, e: i64) -> RationalFn {
    acc * &f.powi(e).expect("factors are nonzero")
}

/// Multiplies `acc` by `(1 - q^c s^d)^e`.
fn mul_factor_pow(acc: &RationalFn, c_exp: i64, deg: usize, e: i64) -> RationalFn {
    let f = RationalFn::from_poly(one_minus(c_exp, deg));
    mul_pow(acc, &f, e)
}

fn mul_q_pow(acc: &RationalQ, f: &LaurentPoly, e: i64) -> RationalQ {
    acc * &RationalQ::from_laurent(f.clone()).powi(e).expect("factors are nonzero")
}

/// `(1 - q^m s) / ((1 - s)(1 - q^{nm} s^n))` without checking coprimality.
pub fn torus_zeta_formula(n: usize, m: i64) -> RationalFn {
    RationalFn::new(
        one_minus(m, 1),
        &PolyS::one_minus_s() * &one_minus(n as i64 * m, n),
    )
    .expect("denominator is nonzero")
}

/// The closed form of `ζ(s, σ_{n,m}; β_{n,q})`.
pub fn torus_zeta_closed(t: TorusSpec) -> RationalFn {
    torus_zeta_formula(t.n, t.m)
}

/// `(1 - q)(1 - q^{nm}) / ((1 - q^n)(1 - q^m))` without checking coprimality.
pub fn torus_alexander_formula(n: usize, m: i64) -> Result<RationalQ> {
    let n = n as i64;
    RationalQ::new(
        &LaurentPoly::one_minus_q_pow(1) * &LaurentPoly::one_minus_q_pow(n * m),
        &LaurentPoly::one_minus_q_pow(n) * &LaurentPoly::one_minus_q_pow(m),
    )
}

/// The closed form of `Δ_{T(n,m)}(q)`.
pub fn torus_alexander(t: TorusSpec) -> RationalQ {
    torus_alexander_formula(t.n, t.m).expect("m != 0 for coprime pairs with n >= 2")
}

/// Outcome of [`shift_identity_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftCheck {
    /// `(1 - s) ζ(s, σ_{n,m+m'}) = (1 - q^{m'} s) ζ(q^{m'} s, σ_{n,m})`.
    pub zeta_shift: bool,
    /// `Δ_{T(n,m+m')} = ζ(q^{m'}, σ_{n,m})^{-1} / ([n]_q (1 - q^{m'}))`; `None` when `m' = 0`.
    pub alexander_shift: Option<bool>,
}

impl ShiftCheck {
    pub fn holds(&self) -> bool {
        self.zeta_shift && self.alexander_shift.unwrap_or(true)
    }
}

/// Checks the shift identities relating `σ_{n,m}` and `σ_{n,m+m'}`, with both
/// zeta functions computed from Burau determinants.
pub fn shift_identity_check(t: TorusSpec, mshift: i64) -> Result<ShiftCheck> {
    let shifted = TorusSpec::new(t.n, t.m + mshift)?;
    let z = crate::zeta::zeta_braid(&t.word()).value;
    let z_shifted = crate::zeta::zeta_braid(&shifted.word()).value;
    let qm = LaurentPoly::q_pow(mshift);

    let lhs = &RationalFn::from_poly(PolyS::one_minus_s()) * &z_shifted;
    let rhs = &RationalFn::from_poly(PolyS::one_minus(qm.clone(), 1)) * &z.substitute_s(&qm);
    let zeta_shift = lhs == rhs;

    let alexander_shift = if mshift == 0 {
        None
    } else {
        let at = z.eval_at(&qm)?;
        let scale = &LaurentPoly::q_integer(t.n as i64)? * &LaurentPoly::one_minus_q_pow(mshift);
        let rhs = &at.inv()? * &RationalQ::from_laurent(scale).inv()?;
        Some(rhs == torus_alexander(shifted))
    };
    Ok(ShiftCheck { zeta_shift, alexander_shift })
}

/// `tr β_{n,q}(σ_{n,m}) = 1 - q^m`.
pub fn torus_trace_check(t: TorusSpec) -> bool {
    burau_matrix(&t.word()).trace() == LaurentPoly::one_minus_q_pow(t.m)
}

/// Kronecker product of the Burau images of `words`.
pub fn tensor_matrix(words: &[BraidWord]) -> Result<LaurentMatrix> {
    let (first, rest) = words
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("tensor product of no braids".into()))?;
    Ok(rest
        .iter()
        .fold(burau_matrix(first).matrix, |acc, w| acc.kron(&burau_matrix(w).matrix)))
}

/// `Z_q(s; τ_1, …, τ_r) = det(I - β(τ_1) ⊗ ⋯ ⊗ β(τ_r) s)^{-1}`.
pub fn tensor_zq(words: &[BraidWord], cap: usize, cancel: Option<&AtomicBool>) -> Result<RationalFn> {
    let dim: usize = words.iter().map(BraidWord::strands).product();
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    let m = tensor_matrix(words)?;
    RationalFn::reciprocal_of(m.char_poly_s(cancel)?)
}

fn binomial(r: u32, l: u32) -> i128 {
    num_integer::binomial(r as i128, l as i128)
}

/// `a_{r,l} = C(r,l) (-1)^l`.
pub fn coeff_a(r: u32, l: u32) -> i64 {
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    (sign * binomial(r, l)) as i64
}

/// `b_{r,l,n} = C(r,l) ((n-1)^l - (-1)^l) / n`, which is always an integer.
pub fn coeff_b(r: u32, l: u32, n: usize) -> Result<i64> {
    let n = n as i128;
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    let top = binomial(r, l)
        .checked_mul((n - 1).pow(l) - sign)
        .ok_or_else(|| Error::InvalidArgument("coefficient overflow".into()))?;
    if top % n != 0 {
        return Err(Error::NonExactDivision(format!("{top} / {n}")));
    }
    i64::try_from(top / n).map_err(|_| Error::InvalidArgument("coefficient overflow".into()))
}

/// Requires `gcd(n, r! m) = 1`.
fn check_tensor_power(t: TorusSpec, r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("tensor power r must be positive".into()));
    }
    let mut g = (t.n as i64).gcd(&t.m);
    for l in 2..=r as i64 {
        g = g.max((t.n as i64).gcd(&l));
    }
    if g != 1 {
        let fact: Option<i64> = (1..=r as i64).try_fold(1i64, |a, b| a.checked_mul(b));
        let b = fact.and_then(|f| f.checked_mul(t.m)).unwrap_or(i64::MAX);
        return Err(Error::NotCoprime { a: t.n as i64, b, gcd: (t.n as i64).gcd(&b) });
    }
    Ok(())
}

/// `K_{n,m,r}(s,q) Π_{l=1..r} ζ(s, σ_{n,lm})^{b_{r,l,n}}`, without checking hypotheses.
pub fn tensor_power_nested(n: usize, m: i64, r: u32) -> Result<RationalFn> {
    let mut acc = RationalFn::one();
    for l in 1..=r {
        let lm = l as i64 * m;
        let (a, b) = (coeff_a(r, l), coeff_b(r, l, n)?);
        let k = RationalFn::new(PolyS::one_minus_s(), one_minus(lm, 1))?;
        acc = mul_pow(&acc, &k, a + b);
        acc = mul_pow(&acc, &torus_zeta_formula(n, lm), b);
    }
    Ok(acc)
}

/// `Π_{l=0..r} (1 - q^{lm} s)^{-a_{r,l}} (1 - q^{lmn} s^n)^{-b_{r,l,n}}`, without checking hypotheses.
pub fn tensor_power_flat(n: usize, m: i64, r: u32) -> Result<RationalFn> {
    let mut acc = RationalFn::one();
    for l in 0..=r {
        let lm = l as i64 * m;
        acc = mul_factor_pow(&acc, lm, 1, -coeff_a(r, l));
        acc = mul_factor_pow(&acc, lm * n as i64, n, -coeff_b(r, l, n)?);
    }
    Ok(acc)
}

/// The closed form of `ζ(s, σ_{n,m}; β_{n,q}^{⊗r})`; requires `gcd(n, r! m) = 1`.
pub fn tensor_power_closed(t: TorusSpec, r: u32) -> Result<RationalFn> {
    check_tensor_power(t, r)?;
    tensor_power_nested(t.n, t.m, r)
}

/// `-[n]_q^{-n^{r-1}} Π_l (1 - q^{lm})^{-(a+b)} Δ_{T(n,lm)}^{-b}`, without checking hypotheses.
pub fn tensor_power_residue_formula(n: usize, m: i64, r: u32) -> Result<RationalQ> {
    let qn = LaurentPoly::q_integer(n as i64)?;
    let power = (n as i64)
        .checked_pow(r - 1)
        .ok_or_else(|| Error::InvalidArgument("exponent overflow".into()))?;
    let mut acc = RationalQ::from_laurent(LaurentPoly::constant(-1));
    acc = mul_q_pow(&acc, &qn, -power);
    for l in 1..=r {
        let lm = l as i64 * m;
        let (a, b) = (coeff_a(r, l), coeff_b(r, l, n)?);
        acc = mul_q_pow(&acc, &LaurentPoly::one_minus_q_pow(lm), -(a + b));
        let delta = torus_alexander_formula(n, lm)?;
        acc = &acc * &delta.powi(-b)?;
    }
    Ok(acc)
}

/// Closed form of the residue at `s = 1` of `ζ(s, σ_{n,m}; β_{n,q}^{⊗r})`.
pub fn tensor_power_residue(t: TorusSpec, r: u32) -> Result<RationalQ> {
    check_tensor_power(t, r)?;
    tensor_power_residue_formula(t.n, t.m, r)
}

/// Verifies, by enumerating subsets of `{1, …, r}`,
/// `Σ_{I⊆J} (-1)^{#J} = (-1)^{#I} δ_{I,Ω}` for every `I` and
/// `Σ_{∅≠I⊆J} (-1)^{#J-#I} = 1`.
pub fn subset_sum_check(r: u32) -> Result<bool> {
    if r > 12 {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds 12")));
    }
    let full: u32 = (1 << r) - 1;
    let parity = |x: u32| if x.count_ones().is_multiple_of(2) { 1i64 } else { -1 };
    let mut first = true;
    let mut total = 0i64;
    for i in 0..=full {
        let mut sum = 0i64;
        for j in supersets(i, full) {
            sum += parity(j);
            if i != 0 {
                total += parity(j ^ i);
            }
        }
        let expected = if i == full { parity(i) } else { 0 };
        first &= sum == expected;
    }
    Ok(first && total == 1)
}

/// All `J` with `i ⊆ J ⊆ full`.
fn supersets(i: u32, full: u32) -> impl Iterator<Item = u32> {
    let free = full & !i;
    let mut sub = free;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = i | sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & free;
        }
        Some(out)
    })
}

/// Nonempty family `(n_1, m_1), …, (n_r, m_r)` indexed by `Ω = {1, …, r}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFamily {
    specs: Vec<(usize, i64)>,
}

/// Which product [`subset_aux`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AuxKind {
    /// `Π_{i∈I} (1 - z^{m_i} + n_i z^{m_i})`
    T1,
    /// `Π_{i∈I} (1 - z^{m_i})`
    T2,
}

impl TensorFamily {
    /// Requires pairwise coprime `n_i >= 2` and `gcd([n(I)], |m(I)|) = 1` for every nonempty `I`.
    pub fn new(specs: Vec<(usize, i64)>) -> Result<Self> {
        let f = Self::new_unchecked(specs)?;
        f.check_invariants()?;
        Ok(f)
    }

    /// Only checks the shape (`1 <= r <= 6`, `n_i >= 2`).
    pub fn new_unchecked(specs: Vec<(usize, i64)>) -> Result<Self> {
        if specs.is_empty() || specs.len() > MAX_FAMILY_SIZE {
            return Err(Error::FamilyInvariantViolated(format!(
                "family size {} outside 1..={MAX_FAMILY_SIZE}",
                specs.len()
            )));
        }
        if let Some(&(n, _)) = specs.iter().find(|(n, _)| *n < 2) {
            return Err(Error::FamilyInvariantViolated(format!("strand count {n} < 2")));
        }
        Ok(TensorFamily { specs })
    }

    pub fn check_invariants(&self) -> Result<()> {
        for (i, &(a, _)) in self.specs.iter().enumerate() {
            for &(b, _) in &self.specs[i + 1..] {
                if a.gcd(&b) != 1 {
                    return Err(Error::FamilyInvariantViolated(format!(
                        "strand counts {a} and {b} are not coprime"
                    )));
                }
            }
        }
        for set in 1..=self.full() {
            let (n, m) = (self.n_prod(set), self.m_sum(set));
            let g = (n as i64).gcd(&m);
            if g != 1 {
                return Err(Error::FamilyInvariantViolated(format!(
                    "subset {:?}: gcd({n}, {m}) = {g}",
                    self.members(set)
                )));
            }
        }
        Ok(())
    }

    pub fn specs(&self) -> &[(usize, i64)] {
        &self.specs
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }

    /// Bitmask of `Ω`.
    pub fn full(&self) -> u32 {
        (1 << self.specs.len()) - 1
    }

    /// One-based members of a subset given as a bitmask.
    pub fn members(&self, set: u32) -> Vec<usize> {
        (0..self.specs.len()).filter(|i| set >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// `[n(I)]`, the product of the strand counts in `I`.
    pub fn n_prod(&self, set: u32) -> usize {
        self.iter_set(set).map(|(n, _)| n).product()
    }

    /// `|m(I)|`, the sum of the exponents in `I`.
    pub fn m_sum(&self, set: u32) -> i64 {
        self.iter_set(set).map(|(_, m)| m).sum()
    }

    fn iter_set(&self, set: u32) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.specs
            .iter()
            .enumerate()
            .filter(move |(i, _)| set >> i & 1 == 1)
            .map(|(_, &s)| s)
    }

    pub fn words(&self) -> Vec<BraidWord> {
        self.specs.iter().map(|&(n, m)| BraidWord::torus(n, m)).collect()
    }

    /// Pairs `(I, J)` with `I ⊆ J ⊆ Ω`, including `I = ∅`.
    fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let full = self.full();
        (0..=full).flat_map(move |i| supersets(i, full).map(move |j| (i, j)))
    }
}

fn sign_of(i: u32, j: u32) -> i64 {
    if (j.count_ones() - i.count_ones()).is_multiple_of(2) { 1 } else { -1 }
}

/// `Π_{∅≠I⊆J⊆Ω} ζ(s, σ_{[n(I)], |m(J)|}; β_{[n(I)],q})^{(-1)^{#J-#I}}` with each
/// factor in closed form, without checking the family invariants.
pub fn multi_torus_nested(f: &TensorFamily) -> RationalFn {
    f.pairs()
        .filter(|&(i, _)| i != 0)
        .fold(RationalFn::one(), |acc, (i, j)| {
            mul_pow(&acc, &torus_zeta_formula(f.n_prod(i), f.m_sum(j)), sign_of(i, j))
        })
}

/// `Π_{I⊆J⊆Ω} (1 - q^{|m(J)| [n(I)]} s^{[n(I)]})^{-(-1)^{#J-#I}}`.
pub fn multi_torus_flat(f: &TensorFamily) -> RationalFn {
    f.pairs().fold(RationalFn::one(), |acc, (i, j)| {
        let n = f.n_prod(i);
        mul_factor_pow(&acc, f.m_sum(j) * n as i64, n, -sign_of(i, j))
    })
}

/// The closed form of `Z_q(s; σ_{n_1,m_1}, …, σ_{n_r,m_r})`.
pub fn multi_torus_closed(f: &TensorFamily) -> Result<RationalFn> {
    f.check_invariants()?;
    Ok(multi_torus_nested(f))
}

/// `-[n_1 ⋯ n_r]_q^{-1} Π_{∅≠I⊆J} Δ_{T([n(I)], |m(J)|)}^{(-1)^{#J-#I+1}}`, unchecked.
pub fn multi_torus_residue_formula(f: &TensorFamily) -> Result<RationalQ> {
    let qn = LaurentPoly::q_integer(f.n_prod(f.full()) as i64)?;
    let mut acc = RationalQ::new(LaurentPoly::constant(-1), qn)?;
    for (i, j) in f.pairs().filter(|&(i, _)| i != 0) {
        let delta = torus_alexander_formula(f.n_prod(i), f.m_sum(j))?;
        acc = &acc * &delta.powi(-sign_of(i, j))?;
    }
    Ok(acc)
}

/// Closed form of the residue at `s = 1` of `Z_q` for a torus family.
pub fn multi_torus_residue(f: &TensorFamily) -> Result<RationalQ> {
    f.check_invariants()?;
    multi_torus_residue_formula(f)
}

/// `T^{(1)}_I(q^j)` or `T^{(2)}_I(q^j)` for the subset `set ⊆ Ω` (a bitmask).
pub fn subset_aux(f: &TensorFamily, set: u32, kind: AuxKind, j: i64) -> LaurentPoly {
    f.iter_set(set).fold(LaurentPoly::one(), |acc, (n, m)| {
        let factor = match kind {
            AuxKind::T1 => {
                &LaurentPoly::one() + &LaurentPoly::monomial(n as i64 - 1, m * j)
            }
            AuxKind::T2 => LaurentPoly::one_minus_q_pow(m * j),
        };
        &acc * &factor
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{alexander_poly, residue_at_one, zeta_braid};

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    fn spec(n: usize, m: i64) -> TorusSpec {
        TorusSpec::new(n, m).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(TorusSpec::new(4, 2), Err(Error::NotCoprime { gcd: 2, .. })));
        assert!(matches!(TorusSpec::new(3, 0), Err(Error::NotCoprime { gcd: 3, .. })));
        assert!(TorusSpec::new(1, 1).is_err());
        assert!(TorusSpec::new(3, -4).is_ok());
    }

    #[test]
    fn closed_zeta_examples() {
        let z = torus_zeta_closed(spec(2, 3));
        assert_eq!(z.num(), &one_minus(3, 1));
        assert_eq!(z.den(), &(&PolyS::one_minus_s() * &one_minus(6, 2)));
        let trefoil_unknot = RationalFn::reciprocal_of(
            &PolyS::one_minus_s() * &PolyS::from_coeffs(vec![lp(0, &[1]), lp(1, &[1])]),
        )
        .unwrap();
        assert_eq!(torus_zeta_closed(spec(2, 1)), trefoil_unknot);
        assert_eq!(torus_zeta_closed(spec(3, 5)), zeta_braid(&spec(3, 5).word()).value);
    }

    #[test]
    fn closed_alexander_examples() {
        assert_eq!(torus_alexander(spec(2, 3)).to_laurent(), Some(lp(0, &[1, -1, 1])));
        for n in 2..=6 {
            assert_eq!(torus_alexander(spec(n, 1)).to_laurent(), Some(LaurentPoly::one()));
        }
        let t35 = torus_alexander(spec(3, 5)).to_laurent().unwrap();
        assert_eq!(t35, alexander_poly(&spec(3, 5).word()).unwrap().poly);
    }

    #[test]
    fn shift_examples() {
        assert!(shift_identity_check(spec(2, 1), 2).unwrap().holds());
        assert!(shift_identity_check(spec(3, 1), 1).unwrap().holds());
        let c = shift_identity_check(spec(2, 3), 0).unwrap();
        assert_eq!(c, ShiftCheck { zeta_shift: true, alexander_shift: None });
        assert!(matches!(shift_identity_check(spec(2, 1), 1), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn trace_examples() {
        assert!(torus_trace_check(spec(2, 3)));
        assert!(torus_trace_check(spec(3, 1)));
        assert!(torus_trace_check(spec(5, 2)));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!((coeff_a(1, 1), coeff_b(1, 1, 7).unwrap()), (-1, 1));
        assert_eq!(coeff_b(2, 1, 5).unwrap(), 2);
        assert_eq!(coeff_b(2, 2, 5).unwrap(), 3);
        assert_eq!(coeff_b(3, 0, 4).unwrap(), 0);
    }

    #[test]
    fn tensor_examples() {
        let w = BraidWord::new(2, vec![1]).unwrap();
        let single = tensor_zq(std::slice::from_ref(&w), DEFAULT_DIMENSION_CAP, None).unwrap();
        assert_eq!(single, zeta_braid(&w).value);
        let pair = tensor_zq(&[w.clone(), w.clone()], DEFAULT_DIMENSION_CAP, None).unwrap();
        assert_eq!(pair.den().degree(), Some(4));
        let id = BraidWord::identity(2);
        let ids = tensor_zq(&[id.clone(), id], DEFAULT_DIMENSION_CAP, None).unwrap();
        assert_eq!(ids, RationalFn::reciprocal_of(PolyS::one_minus_s().pow(4)).unwrap());
        assert_eq!(
            tensor_zq(&[w.clone(), w.clone(), w], 7, None),
            Err(Error::DimensionCap { dim: 8, cap: 7 })
        );
    }

    #[test]
    fn tensor_power_r1_collapses() {
        for (n, m) in [(2, 3), (3, 5), (5, 2), (4, -3)] {
            let t = spec(n, m);
            assert_eq!(tensor_power_closed(t, 1).unwrap(), torus_zeta_closed(t));
            assert_eq!(tensor_power_flat(n, m, 1).unwrap(), torus_zeta_closed(t));
            let res = residue_at_one(&torus_zeta_closed(t)).unwrap();
            assert_eq!(tensor_power_residue(t, 1).unwrap(), res);
        }
    }

    #[test]
    fn tensor_power_hypothesis() {
        assert!(matches!(tensor_power_closed(spec(3, 1), 3), Err(Error::NotCoprime { .. })));
        assert!(tensor_power_closed(spec(5, 1), 2).is_ok());
        assert!(matches!(tensor_power_residue(spec(3, 2), 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn tensor_power_matches_determinant_n3() {
        let t = spec(3, 1);
        let w = t.word();
        let direct = tensor_zq(&[w.clone(), w], DEFAULT_DIMENSION_CAP, None).unwrap();
        let closed = tensor_power_closed(t, 2).unwrap();
        assert_eq!(direct, closed);
        assert_eq!(closed, tensor_power_flat(3, 1, 2).unwrap());
        assert_eq!(residue_at_one(&direct).unwrap(), tensor_power_residue(t, 2).unwrap());
    }

    #[test]
    fn lemma_enumeration() {
        for r in 1..=8 {
            assert!(subset_sum_check(r).unwrap());
        }
        assert!(subset_sum_check(13).is_err());
    }

    #[test]
    fn superset_enumeration() {
        let mut v: Vec<u32> = supersets(0b001, 0b111).collect();
        v.sort();
        assert_eq!(v, vec![0b001, 0b011, 0b101, 0b111]);
        assert_eq!(supersets(0b111, 0b111).collect::<Vec<_>>(), vec![0b111]);
    }

    #[test]
    fn family_validation() {
        assert!(TensorFamily::new(vec![(2, 1), (3, 4)]).is_ok());
        assert!(matches!(
            TensorFamily::new(vec![(2, 1), (3, 1), (5, 1)]),
            Err(Error::FamilyInvariantViolated(_))
        ));
        assert!(TensorFamily::new(vec![(2, 1), (4, 1)]).is_err());
        assert!(TensorFamily::new(vec![]).is_err());
        assert!(TensorFamily::new_unchecked(vec![(2, 1), (3, 1), (5, 1)]).is_ok());
    }

    #[test]
    fn family_r1_collapses() {
        let f = TensorFamily::new(vec![(3, 5)]).unwrap();
        assert_eq!(multi_torus_closed(&f).unwrap(), torus_zeta_closed(spec(3, 5)));
        assert_eq!(multi_torus_flat(&f), torus_zeta_closed(spec(3, 5)));
        let res = residue_at_one(&torus_zeta_closed(spec(3, 5))).unwrap();
        assert_eq!(multi_torus_residue(&f).unwrap(), res);
    }

    #[test]
    fn two_family_display() {
        let f = TensorFamily::new(vec![(2, 1), (3, 4)]).unwrap();
        let z = |n, m| torus_zeta_formula(n, m);
        let expected = &(&(&z(2, 1) * &z(3, 4)) * &z(6, 5)) * &(&z(2, 5) * &z(3, 5)).inv().unwrap();
        let closed = multi_torus_closed(&f).unwrap();
        assert_eq!(closed, expected);
        assert_eq!(closed, multi_torus_flat(&f));
        let direct = tensor_zq(&f.words(), DEFAULT_DIMENSION_CAP, None).unwrap();
        assert_eq!(direct, closed);
    }

    #[test]
    fn aux_examples() {
        let f = TensorFamily::new_unchecked(vec![(2, 1), (3, 4)]).unwrap();
        assert_eq!(subset_aux(&f, 0, AuxKind::T1, 3), LaurentPoly::one());
        assert_eq!(subset_aux(&f, 0b01, AuxKind::T2, 2), lp(0, &[1, 0, -1]));
        assert_eq!(subset_aux(&f, 0b01, AuxKind::T1, 1), lp(0, &[1, 1]));
    }

    #[test]
    fn aux_expansions() {
        let f = TensorFamily::new_unchecked(vec![(2, 1), (3, 4), (5, -2), (7, 3)]).unwrap();
        for set in 0..=f.full() {
            for j in -2..=4 {
                let mut t1 = LaurentPoly::zero();
                let mut t2 = LaurentPoly::zero();
                // all sub ⊆ set
                let mut sub = set;
                loop {
                    let q = LaurentPoly::q_pow(f.m_sum(sub) * j);
                    let rest = subset_aux(&f, set & !sub, AuxKind::T2, j);
                    t1 += &(&(&q * &rest) * &LaurentPoly::constant(f.n_prod(sub) as i64));
                    let sign = if sub.count_ones() % 2 == 0 { 1 } else { -1 };
                    t2 += &(&q * &LaurentPoly::constant(sign));
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & set;
                }
                assert_eq!(subset_aux(&f, set, AuxKind::T1, j), t1);
                assert_eq!(subset_aux(&f, set, AuxKind::T2, j), t2);
            }
        }
    }

    #[test]
    fn expansion_needs_complement_index() {
        // indexing the inner T2 by the subset itself breaks the expansion
        let f = TensorFamily::new_unchecked(vec![(2, 1), (3, 4)]).unwrap();
        let set = f.full();
        let literal = (0..=set).fold(LaurentPoly::zero(), |acc, sub| {
            let q = LaurentPoly::q_pow(f.m_sum(sub));
            let inner = subset_aux(&f, sub, AuxKind::T2, 1);
            &acc + &(&(&q * &inner) * &LaurentPoly::constant(f.n_prod(sub) as i64))
        });
        assert_ne!(subset_aux(&f, set, AuxKind::T1, 1), literal);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn coprime_pair() -> impl Strategy<Value = TorusSpec> {
            (2usize..=6, -7i64..=7)
                .prop_filter("coprime", |&(n, m)| (n as i64).gcd(&m) == 1)
                .prop_map(|(n, m)| spec(n, m))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn closed_matches_determinant(t in coprime_pair()) {
                prop_assert_eq!(torus_zeta_closed(t), zeta_braid(&t.word()).value);
                prop_assert!(torus_trace_check(t));
            }

            #[test]
            fn alexander_matches_up_to_unit(t in coprime_pair()) {
                let closed = torus_alexander(t).to_laurent().unwrap();
                let direct = alexander_poly(&t.word()).unwrap();
                prop_assert!(crate::zeta::equal_up_to_unit(&closed, &direct.raw));
            }

            #[test]
            fn shift_identities(t in coprime_pair(), k in -4i64..=4) {
                prop_assume!((t.n() as i64).gcd(&(t.m() + k)) == 1);
                prop_assert!(shift_identity_check(t, k).unwrap().holds());
            }

            #[test]
            fn b_integrality(r in 1u32..=8, n in 2usize..=12) {
                let mut total = 0i64;
                for l in 1..=r {
                    total += coeff_b(r, l, n).unwrap();
                }
                prop_assert_eq!(total, (n as i64).pow(r - 1));
            }
        }

        #[test]
        fn trace_of_powers() {
            for n in 2..=5usize {
                for m in -4i64..=4 {
                    if (n as i64).gcd(&m) != 1 {
                        continue;
                    }
                    let beta = burau_matrix(&BraidWord::torus(n, m)).matrix;
                    let mut power = LaurentMatrix::identity(n);
                    for j in 1..=2 * n as i64 {
                        power = &power * &beta;
                        let expected = if j % n as i64 != 0 {
                            LaurentPoly::one_minus_q_pow(m * j)
                        } else {
                            &LaurentPoly::one() + &LaurentPoly::monomial(n as i64 - 1, m * j)
                        };
                        assert_eq!(power.trace(), expected, "n={n} m={m} j={j}");
                    }
                }
            }
        }
    }
}
