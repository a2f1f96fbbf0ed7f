//! Zeta functions of braids and permutations, residues at `s = 1`, and
//! Alexander polynomials.

use std::sync::atomic::AtomicBool;

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, Matrix, PolyS, RationalFn, RationalQ};
use crate::braid::{BraidWord, Permutation};
use crate::burau::{burau_matrix, reduced_burau_matrix, sgn_q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZetaSource {
    Braid(BraidWord),
    Permutation(Permutation),
}

/// `ζ(s, σ; β_{n,q}) = det(I_n - β_{n,q}(σ) s)^{-1}`, or the Euler product of a permutation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZetaFunction {
    pub value: RationalFn,
    pub strands: usize,
    pub source: ZetaSource,
}

impl ZetaFunction {
    pub fn residue(&self) -> Result<RationalQ> {
        residue_at_one(&self.value)
    }
}

pub fn zeta_braid(w: &BraidWord) -> ZetaFunction {
    zeta_braid_cancellable(w, None).expect("uncancelled determinant cannot fail")
}

/// [`zeta_braid`] with a cancellation flag polled between elimination steps.
pub fn zeta_braid_cancellable(w: &BraidWord, cancel: Option<&AtomicBool>) -> Result<ZetaFunction> {
    let den = burau_matrix(w).matrix.char_poly_s(cancel)?;
    Ok(ZetaFunction {
        value: RationalFn::reciprocal_of(den)?,
        strands: w.strands(),
        source: ZetaSource::Braid(w.clone()),
    })
}

/// `Π_P 1 / (1 - s^{l(P)})` over the cycles of `p`.
pub fn zeta_perm(p: &Permutation) -> ZetaFunction {
    let den = p
        .cycle_type()
        .into_iter()
        .fold(PolyS::one(), |acc, l| &acc * &PolyS::one_minus(LaurentPoly::one(), l));
    ZetaFunction {
        value: RationalFn::reciprocal_of(den).expect("product of nonzero factors"),
        strands: p.len(),
        source: ZetaSource::Permutation(p.clone()),
    }
}

/// Residue at a simple pole `s = 1`.
///
/// Writing `f = N / D` with the `(1 - s)` factors split off as
/// `N = (1-s)^a Ñ`, `D = (1-s)^b D̃`, a simple pole means `b - a = 1` and the
/// residue is `-Ñ(1) / D̃(1)`.
pub fn residue_at_one(f: &RationalFn) -> Result<RationalQ> {
    let (a, num) = f.num().split_one_minus_s();
    let (b, den) = f.den().split_one_minus_s();
    match b as i64 - a as i64 {
        1 => RationalQ::new(-num.eval_at_one(), den.eval_at_one()),
        k if k < 1 => Err(Error::NoPoleAtOne),
        _ => Err(Error::PoleNotSimple),
    }
}

/// The Alexander polynomial of the closure of a knot braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderPoly {
    /// Normalized: lowest exponent 0 and value `+1` at `q = 1`.
    pub poly: LaurentPoly,
    /// `det(I - β^r(σ)) / [n]_q` before normalization.
    pub raw: LaurentPoly,
    /// `poly = sign * q^shift * raw`.
    pub sign: i32,
    pub shift: i64,
}

impl AlexanderPoly {
    /// The unit `sign * q^shift`.
    pub fn unit(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.sign, self.shift)
    }
}

pub fn alexander_poly(w: &BraidWord) -> Result<AlexanderPoly> {
    let p = w.permutation();
    if !p.is_full_cycle() {
        return Err(Error::NotAKnot { cycles: p.cycle_type() });
    }
    let n = w.strands();
    if n == 1 {
        let one = LaurentPoly::one();
        return Ok(AlexanderPoly { poly: one.clone(), raw: one, sign: 1, shift: 0 });
    }
    let reduced = reduced_burau_matrix(w).matrix;
    let det = Matrix::identity(n - 1).sub(&reduced).det()?;
    let qn = LaurentPoly::q_integer(n as i64)?;
    let raw = det
        .div_exact(&qn)
        .ok_or_else(|| Error::NonExactDivision(format!("({det}) / ({qn})")))?;
    Ok(normalize(raw))
}

/// Whether `a = u b` for a unit `u = ±q^k`.
pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.div_exact(b).is_some_and(|u| u.as_unit().is_some())
}

fn normalize(raw: LaurentPoly) -> AlexanderPoly {
    let shift = -raw.min_exp().unwrap_or(0);
    let shifted = raw.shift(shift);
    let sign = match shifted.eval_at_one().signum() {
        0 => shifted.terms().first().map_or(1, |(_, c)| c.signum()),
        s => s,
    };
    let poly = if sign < 0 { -shifted } else { shifted };
    AlexanderPoly { poly, raw, sign, shift }
}

/// `ζ(s, σ) = sgn_q(σ^{-1}) (-s)^{-n} ζ(1/s, σ^{-1})`, compared by cross-multiplication.
pub fn functional_equation_check(w: &BraidWord) -> bool {
    let inv = w.inverse();
    let lhs = zeta_braid(w).value;
    let rhs = zeta_braid(&inv)
        .value
        .reciprocal_transform(w.strands())
        .scale(&sgn_q(&inv));
    lhs == rhs
}

/// Checks `ζ = exp(Σ_m tr β(σ^m) s^m / m)` through order `order`.
///
/// With `ζ = Σ c_k s^k` the identity is equivalent to
/// `m c_m = Σ_{k=1..m} tr β(σ^k) c_{m-k}`, which stays inside `Λ`.
pub fn trace_series_check(w: &BraidWord, order: usize) -> bool {
    let Ok(c) = zeta_braid(w).value.series_expand(order) else {
        return false;
    };
    let beta = burau_matrix(w).matrix;
    let mut power = Matrix::identity(beta.rows());
    let mut traces = Vec::with_capacity(order + 1);
    traces.push(LaurentPoly::constant(beta.rows() as i64));
    for _ in 1..=order {
        power = &power * &beta;
        traces.push(power.trace());
    }
    (1..=order).all(|m| {
        let mut rhs = LaurentPoly::zero();
        for k in 1..=m {
            rhs += &(&traces[k] * &c[m - k]);
        }
        c[m].scale(&(m as i64).into()) == rhs
    })
}

/// Setting `q = 1` in `ζ(s, σ; β_{n,q})` yields the zeta function of `π_n(σ)`.
pub fn q_one_specialization_check(w: &BraidWord) -> bool {
    let lhs = zeta_braid(w).value.specialize_q_one();
    let rhs = zeta_perm(&w.permutation()).value;
    lhs.is_ok_and(|l| l == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    fn word(n: usize, l: &[i64]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn trefoil() -> BraidWord {
        word(2, &[1, 1, 1])
    }

    fn figure_eight() -> BraidWord {
        word(3, &[1, -2, 1, -2])
    }

    #[test]
    fn trefoil_zeta_and_residue() {
        let z = zeta_braid(&trefoil());
        let expected = RationalFn::reciprocal_of(
            &PolyS::one_minus_s() * &PolyS::from_coeffs(vec![lp(0, &[1]), lp(3, &[1])]),
        )
        .unwrap();
        assert_eq!(z.value, expected);
        assert_eq!(z.residue().unwrap(), RationalQ::new(lp(0, &[-1]), lp(0, &[1, 0, 0, 1])).unwrap());
    }

    #[test]
    fn figure_eight_zeta_and_residue() {
        let z = zeta_braid(&figure_eight());
        let quad = PolyS::from_coeffs(vec![lp(2, &[1]), -lp(0, &[1, -2, 1, -2, 1]), lp(2, &[1])]);
        let expected = RationalFn::new(
            PolyS::constant(lp(2, &[1])),
            &PolyS::one_minus_s() * &quad,
        )
        .unwrap();
        assert_eq!(z.value, expected);
        let residue = RationalQ::new(lp(2, &[-1]), &lp(0, &[1, 1, 1]) * &lp(0, &[-1, 3, -1])).unwrap();
        assert_eq!(z.residue().unwrap(), residue);
    }

    #[test]
    fn identity_zeta() {
        let z = zeta_braid(&BraidWord::identity(3));
        assert_eq!(z.value, RationalFn::reciprocal_of(PolyS::one_minus_s().pow(3)).unwrap());
    }

    #[test]
    fn permutation_zetas() {
        let id = zeta_perm(&Permutation::identity(2));
        assert_eq!(id.value, RationalFn::reciprocal_of(PolyS::one_minus_s().pow(2)).unwrap());
        let t = zeta_perm(&Permutation::transposition(2, 1, 2));
        let one_minus_s2 = PolyS::one_minus(LaurentPoly::one(), 2);
        assert_eq!(t.value, RationalFn::reciprocal_of(one_minus_s2).unwrap());
        let c = zeta_perm(&Permutation::cycle(3, &[1, 2, 3]).unwrap());
        let one_minus_s3 = PolyS::one_minus(LaurentPoly::one(), 3);
        assert_eq!(c.value, RationalFn::reciprocal_of(one_minus_s3).unwrap());
        let half = RationalQ::new(lp(0, &[-1]), lp(0, &[2])).unwrap();
        assert_eq!(t.residue().unwrap(), half);
    }

    #[test]
    fn residue_errors() {
        let no_pole = RationalFn::reciprocal_of(PolyS::one_minus(LaurentPoly::q(), 1)).unwrap();
        assert_eq!(residue_at_one(&no_pole), Err(Error::NoPoleAtOne));
        let double = RationalFn::reciprocal_of(PolyS::one_minus_s().pow(2)).unwrap();
        assert_eq!(residue_at_one(&double), Err(Error::PoleNotSimple));
        // a cancelling (1 - s) in the numerator removes the pole
        let removable = RationalFn::new(PolyS::one_minus_s(), PolyS::one_minus_s()).unwrap();
        assert_eq!(residue_at_one(&removable), Err(Error::NoPoleAtOne));
    }

    #[test]
    fn alexander_examples() {
        let a = alexander_poly(&trefoil()).unwrap();
        assert_eq!(a.poly, lp(0, &[1, -1, 1]));
        let a = alexander_poly(&figure_eight()).unwrap();
        assert_eq!(a.poly, lp(0, &[-1, 3, -1]));
        assert_eq!(a.poly.eval_at_one().as_i64(), Some(1));
        assert_eq!(&a.unit() * &a.raw, a.poly);
        assert!(matches!(
            alexander_poly(&word(3, &[1])),
            Err(Error::NotAKnot { ref cycles }) if cycles == &[2, 1]
        ));
    }

    #[test]
    fn functional_equation_examples() {
        assert!(functional_equation_check(&word(2, &[1])));
        assert!(functional_equation_check(&BraidWord::identity(3)));
        assert!(functional_equation_check(&figure_eight()));
    }

    #[test]
    fn trace_series_examples() {
        let s = zeta_braid(&trefoil()).value.series_expand(1).unwrap();
        assert_eq!(s[1], lp(0, &[1, 0, 0, -1]));
        assert!(trace_series_check(&trefoil(), 1));
        assert!(trace_series_check(&BraidWord::identity(2), 4));
        assert!(trace_series_check(&word(3, &[1, 2]), 6));
    }

    #[test]
    fn trace_series_detects_wrong_zeta() {
        // the Euler product of the permutation is a different series
        let w = word(3, &[1, 2]);
        let c = zeta_perm(&w.permutation()).value.series_expand(2).unwrap();
        let tr1 = burau_matrix(&w).trace();
        assert_ne!(c[1], tr1);
    }

    #[test]
    fn q_one_examples() {
        assert!(q_one_specialization_check(&trefoil()));
        assert!(q_one_specialization_check(&BraidWord::identity(4)));
    }

    #[test]
    fn cancellation() {
        let flag = AtomicBool::new(true);
        assert_eq!(
            zeta_braid_cancellable(&figure_eight(), Some(&flag)).unwrap_err(),
            Error::Cancelled
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word_in(n: usize, max: usize) -> impl Strategy<Value = BraidWord> {
            let letter = (1..n as i64, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g });
            prop::collection::vec(letter, 0..max).prop_map(move |l| BraidWord::new(n, l).unwrap())
        }

        fn any_word() -> impl Strategy<Value = BraidWord> {
            (2usize..=5).prop_flat_map(|n| word_in(n, 12))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn den_shape(w in any_word()) {
                let z = zeta_braid(&w);
                prop_assert_eq!(z.value.den().degree(), Some(w.strands()));
                prop_assert!(z.value.den().constant_term().is_one());
                prop_assert!(z.value.num().is_one());
            }

            #[test]
            fn conjugation_invariance(w in any_word(), seed in any::<u64>()) {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let u = BraidWord::random(&mut rng, w.strands(), 4);
                let conj = u.concat(&w).unwrap().concat(&u.inverse()).unwrap();
                prop_assert_eq!(zeta_braid(&conj).value, zeta_braid(&w).value);
            }

            #[test]
            fn functional_equation(w in any_word()) {
                prop_assert!(functional_equation_check(&w));
            }

            #[test]
            fn q_one(w in any_word()) {
                prop_assert!(q_one_specialization_check(&w));
            }

            #[test]
            fn trace_series(w in any_word()) {
                prop_assert!(trace_series_check(&w, 6));
            }

            #[test]
            fn knot_residue_identity(w in any_word()) {
                prop_assume!(w.is_knot());
                let a = alexander_poly(&w).unwrap();
                prop_assert_eq!(a.poly.eval_at_one().as_i64(), Some(1));
                prop_assert_eq!(a.poly.min_exp(), Some(0));
                let res = zeta_braid(&w).residue().unwrap();
                let qn = LaurentPoly::q_integer(w.strands() as i64).unwrap();
                let prod = &res * &RationalQ::from_laurent(&qn * &a.raw);
                prop_assert_eq!(prod, RationalQ::from_laurent(LaurentPoly::constant(-1)));
            }
        }

        #[test]
        fn euler_product_is_permutation_determinant() {
            use crate::burau::permutation_rep_matrix;
            for n in 1..=5usize {
                let mut images: Vec<usize> = (1..=n).collect();
                // walk all permutations of small size via Heap's algorithm
                let mut c = vec![0usize; n];
                let check = |imgs: &[usize]| {
                    let p = Permutation::new(imgs.to_vec()).unwrap();
                    let det = permutation_rep_matrix(&p).char_poly_s(None).unwrap();
                    assert_eq!(zeta_perm(&p).value, RationalFn::reciprocal_of(det).unwrap());
                };
                check(&images);
                let mut i = 0;
                while i < n {
                    if c[i] < i {
                        if i % 2 == 0 { images.swap(0, i) } else { images.swap(c[i], i) }
                        check(&images);
                        c[i] += 1;
                        i = 0;
                    } else {
                        c[i] = 0;
                        i += 1;
                    }
                }
            }
        }
    }
}
