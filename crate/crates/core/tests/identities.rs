use braid_zeta::algebra::{LaurentPoly, RationalQ};
use braid_zeta::braid::BraidWord;
use braid_zeta::burau::{burau_matrix, decomposition_check, reduced_burau_matrix, squier_check};
use braid_zeta::numeric::{rh_check, squier_residual, UnitCirclePoint, MODULUS_TOL};
use braid_zeta::torus::{tensor_matrix, tensor_zq, DEFAULT_DIMENSION_CAP};
use braid_zeta::zeta::{alexander_poly, residue_at_one, zeta_braid};
use proptest::prelude::*;

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i64).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn knot_residue_is_minus_inverse_of_q_integer_times_alexander(w in word(5, 10)) {
        prop_assume!(w.is_knot());
        let res = zeta_braid(&w).residue().unwrap();
        let raw = alexander_poly(&w).unwrap().raw;
        let qn = LaurentPoly::q_integer(w.strands() as i64).unwrap();
        prop_assert_eq!(res, RationalQ::new(-LaurentPoly::one(), &qn * &raw).unwrap());
    }

    #[test]
    fn tensor_trace_is_product_of_traces(a in word(3, 6), b in word(3, 6)) {
        let t = tensor_matrix(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(t.trace(), &burau_matrix(&a).trace() * &burau_matrix(&b).trace());
    }

    #[test]
    fn single_factor_tensor_is_plain_zeta(w in word(4, 8)) {
        let z = tensor_zq(std::slice::from_ref(&w), DEFAULT_DIMENSION_CAP, None).unwrap();
        prop_assert_eq!(z, zeta_braid(&w).value);
    }

    #[test]
    fn exact_and_numeric_unitarity_agree(w in word(5, 10), theta in -1.2f64..1.2) {
        prop_assert!(squier_check(&w));
        prop_assert!(squier_residual(&w, UnitCirclePoint::new(theta)) < 1e-8);
        let report = rh_check(&w, UnitCirclePoint::new(theta), MODULUS_TOL).unwrap();
        prop_assert!(report.rh_satisfied);
    }

    #[test]
    fn reduced_image_splits_off_trivial_summand(w in word(6, 10)) {
        prop_assert!(decomposition_check(&w));
        let full = burau_matrix(&w).trace();
        let reduced = reduced_burau_matrix(&w).trace();
        prop_assert_eq!(full, &reduced + &LaurentPoly::one());
    }
}

#[test]
fn tensor_of_coprime_torus_knots_has_a_simple_pole() {
    let z = tensor_zq(&[BraidWord::torus(2, 3), BraidWord::torus(3, 2)], DEFAULT_DIMENSION_CAP, None).unwrap();
    assert!(residue_at_one(&z).is_ok());
}
