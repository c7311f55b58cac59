mod common;

use cellchar::combinatorics::enumerate_dpartitions;
use cellchar::conjecture::{
    check_conjecture, params_from_r, r_from_params, ConjectureInput, VerdictMode, INCONCLUSIVE,
};
use cellchar::gd12::{cm_cells_n2, verify_gaudin_eigensystem, GaudinRegime, GaudinReport};
use cellchar::jm::{is_generic, jm_cellular_characters, CMParams};
use cellchar::qlaurent::{rational, Rational};
use cellchar::{ChargeVector, Error};
use proptest::prelude::*;

use common::cv;

fn arb_charges(max_d: usize) -> impl Strategy<Value = ChargeVector> {
    prop::collection::vec(-3i64..=3, 1..=max_d).prop_map(|mut r| {
        r.sort_unstable_by(|a, b| b.cmp(a));
        ChargeVector::new(r).unwrap()
    })
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verdict_invariant_under_scaling_and_shift(
        r in arb_charges(3),
        c0 in arb_nonzero_rational(),
        t in arb_nonzero_rational(),
        shift in -4i64..=4,
        n in 1u32..=3,
    ) {
        let base = check_conjecture(&ConjectureInput::Charges { r: r.clone(), c0: c0.clone() }, n).unwrap();
        let p = params_from_r(&r, &c0).unwrap();
        let scaled = check_conjecture(&ConjectureInput::Params(p.scaled(&t)), n).unwrap();
        let shifted = check_conjecture(&ConjectureInput::Charges { r: r.shifted(shift), c0: c0.clone() }, n).unwrap();
        for other in [&scaled, &shifted] {
            prop_assert_eq!(other.equal, base.equal);
            prop_assert_eq!(&other.cm_set, &base.cm_set);
            prop_assert_eq!(&other.lm_set, &base.lm_set);
            prop_assert_eq!(other.mode, base.mode);
        }
    }

    #[test]
    fn dictionary_round_trip(r in arb_charges(4), c0 in arb_nonzero_rational(), shift in -3i64..=3) {
        let p = params_from_r(&r, &c0).unwrap();
        prop_assert_eq!(r_from_params(&p, shift).unwrap(), r.shifted(shift));
        prop_assert_eq!(params_from_r(&r_from_params(&p, 0).unwrap(), &c0).unwrap(), p);
    }

    #[test]
    fn n2_verdict_always_equal(r in arb_charges(4), c0 in arb_nonzero_rational()) {
        let v = check_conjecture(&ConjectureInput::Charges { r, c0 }, 2).unwrap();
        prop_assert!(v.equal);
        prop_assert!(v.only_cm.is_empty() && v.only_lm.is_empty());
    }
}

#[test]
fn generic_jm_cells_are_single_tableaux() {
    for (c0, ks, n) in [(1, vec![-14, -7, 0], 3), (1, vec![-5, 0], 4), (3, vec![1, 100], 3)] {
        let p = CMParams::from_ksharp_ints(c0, &ks);
        assert!(is_generic(&p, n).generic);
        let cells = jm_cellular_characters(&p, n);
        assert!(cells.generic);
        let tableaux: u64 = enumerate_dpartitions(p.d(), n).iter().map(|l| l.num_standard_tableaux()).sum();
        assert_eq!(cells.cells.len() as u64, tableaux);
        assert!(cells.characters().all(|c| c.is_irreducible()));
    }
}

#[test]
fn non_generic_large_n_is_flagged() {
    let v = check_conjecture(&ConjectureInput::Charges { r: cv("1,0"), c0: rational(1) }, 3).unwrap();
    assert_eq!(v.mode, VerdictMode::JmUpperBound);
    assert!(v.caveat.is_some());
    if !v.equal {
        assert_eq!(v.caveat.as_deref(), Some(INCONCLUSIVE));
    }
}

#[test]
fn params_input_needs_integral_differences() {
    let p = CMParams::from_ksharp(rational(2), vec![rational(-1), rational(0)]).unwrap();
    assert!(matches!(
        check_conjecture(&ConjectureInput::Params(p), 2),
        Err(Error::NonIntegralRatio(_))
    ));
    let p = CMParams::from_ksharp_ints(1, &[0, -1]);
    assert!(matches!(
        check_conjecture(&ConjectureInput::Params(p), 2),
        Err(Error::UnsortedParameters(_))
    ));
}

#[test]
fn gaudin_remaining_regimes() {
    for d in 2..=5usize {
        for i in 1..=d {
            for j in i + 1..=d {
                let ks: Vec<i64> = (0..d as i64).map(|t| 5 * t).collect();
                let rep = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(0, &ks), i, j).unwrap();
                assert_eq!(rep.regime, GaudinRegime::Diagonal);
                assert!(rep.passed);
                let rep = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(2, &ks), i, j).unwrap();
                assert_eq!(rep.regime, GaudinRegime::Irreducible);
                assert!(rep.passed && !rep.discriminant_is_square);
                if d % 2 == 1 {
                    let rep = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(1, &vec![0; d]), i, j).unwrap();
                    assert_eq!(rep.regime, GaudinRegime::Irreducible);
                }
                let json = serde_json::to_string(&rep).unwrap();
                let back: GaudinReport = serde_json::from_str(&json).unwrap();
                assert_eq!(back, rep);
            }
        }
    }
}

#[test]
fn cm_cells_json_round_trip() {
    let cells = cm_cells_n2(&CMParams::from_ksharp_ints(1, &[0, 0, -1, -1]));
    let json = serde_json::to_string(&cells).unwrap();
    assert_eq!(serde_json::from_str::<cellchar::gd12::CmCellsN2>(&json).unwrap(), cells);
    let jm = jm_cellular_characters(&CMParams::from_ksharp_ints(1, &[-1, 0]), 3);
    let json = serde_json::to_string(&jm).unwrap();
    assert_eq!(serde_json::from_str::<cellchar::CellDecomposition>(&json).unwrap(), jm);
}
