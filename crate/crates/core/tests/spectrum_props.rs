mod common;

use proptest::prelude::*;
use shuffle_spectra::combinat::count_syt;
use shuffle_spectra::exactlin::char_poly;
use shuffle_spectra::filtration::build_filtration;
use shuffle_spectra::reps::{natural_rep, regular_rep};
use shuffle_spectra::spectrum::{
    annihilator_filtration, generalized_annihilator_filtration, ocs_action, predict_spectrum, spectrum_report,
    weight_sweep,
};
use shuffle_spectra::{Partition, Rational, SpechtModule};

fn instance() -> impl Strategy<Value = (Partition, Vec<i64>)> {
    (1usize..=5).prop_flat_map(|n| (proptest::sample::select(Partition::all(n)), proptest::collection::vec(-9i64..=9, n)))
}

fn rationals(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn charpoly_identity((lambda, weights) in instance()) {
        let module = SpechtModule::new(&lambda).unwrap();
        let report = spectrum_report(&module, &rationals(&weights), true).unwrap();
        prop_assert!(report.passed());
        prop_assert_eq!(report.equal, Some(true));
        // an independent characteristic polynomial of the same matrix
        let action = ocs_action(&module, &rationals(&weights)).unwrap();
        prop_assert_eq!(common::leverrier(&action), char_poly(&action).unwrap());
    }

    #[test]
    fn multiplicities_and_integrality((lambda, weights) in instance()) {
        let n = lambda.size();
        let pred = predict_spectrum(&lambda, &rationals(&weights)).unwrap();
        prop_assert_eq!(pred.total_multiplicity() as u128, count_syt(&lambda));
        prop_assert_eq!(pred.charpoly().degree(), Some(count_syt(&lambda) as usize));
        for e in &pred.entries {
            prop_assert!(e.omega.is_integer());
            prop_assert_eq!(&e.m_vector, &common::m_vector(n, e.set.elements()));
            let direct: i64 = weights.iter().zip(&e.m_vector).map(|(w, &m)| w * m as i64).sum();
            prop_assert_eq!(e.omega.to_i64(), Some(direct));
        }
        let grouped: u64 = pred.grouped.iter().map(|g| g.total).sum();
        prop_assert_eq!(grouped, pred.total_multiplicity());
    }
}

#[test]
fn collisions_are_recorded() {
    // all weights zero: every contributing I has eigenvalue 0
    let lambda: Partition = "2,1".parse().unwrap();
    let module = SpechtModule::new(&lambda).unwrap();
    let r = spectrum_report(&module, &rationals(&[0, 0, 0]), true).unwrap();
    let d = r.diagonalizable.unwrap();
    assert!(!d.distinct && d.diagonalizable);
    assert_eq!(r.grouped.len(), 1);
    assert_eq!(r.grouped[0].total, 2);
}

#[test]
fn sweep_n5() {
    for lambda in Partition::all(5) {
        let module = SpechtModule::new(&lambda).unwrap();
        for weights in weight_sweep(5, 5, 2024) {
            let r = spectrum_report(&module, &weights, true).unwrap();
            assert!(r.passed(), "{lambda} {weights:?}");
        }
    }
}

#[test]
fn weight_sweep_shape() {
    let w = weight_sweep(4, 5, 9);
    assert_eq!(w.len(), 1 + 4 + 5);
    assert_eq!(w, weight_sweep(4, 5, 9));
    assert!(w[5..].iter().flatten().all(|x| x.to_i64().is_some_and(|v| (-9..=9).contains(&v))));
}

#[test]
fn annihilator_filtrations_n5() {
    let f = build_filtration(5).unwrap();
    for lambda in Partition::all(5) {
        let a = annihilator_filtration(&lambda, &f, 10, 5).unwrap();
        assert!(a.passed(), "{lambda}");
        let drops: u64 = a.stages.iter().map(|s| s.c).sum();
        assert_eq!(drops as u128, count_syt(&lambda));
    }
}

#[test]
fn trivial_module_jumps_once() {
    for n in 1..=5 {
        let f = build_filtration(n).unwrap();
        let a = annihilator_filtration(&Partition::row(n), &f, 3, 0).unwrap();
        let jumps: Vec<usize> = a.stages.iter().filter(|s| s.drop > 0).map(|s| s.index).collect();
        assert_eq!(jumps, vec![1]);
    }
}

#[test]
fn generalized_on_natural_and_regular() {
    let f = build_filtration(3).unwrap();
    // N_3 ≅ S^(3) ⊕ S^(2,1): drops are c_Q^(3) + c_Q^(2,1) = 1, 1, 1
    let nat = generalized_annihilator_filtration(&natural_rep(3).unwrap(), &f).unwrap();
    assert_eq!(nat.stages.iter().map(|s| s.drop).collect::<Vec<_>>(), vec![1, 1, 1]);
    assert!(nat.passed());
    let f4 = build_filtration(4).unwrap();
    let reg = generalized_annihilator_filtration(&regular_rep(4).unwrap(), &f4).unwrap();
    assert!(reg.passed());
    assert_eq!(reg.stages.iter().map(|s| s.drop).collect::<Vec<_>>(), vec![1, 3, 8, 6, 6]);
}
