mod common;

use proptest::prelude::*;
use shuffle_spectra::combinat::factorial;
use shuffle_spectra::groupalg::GroupAlgebraElement;
use shuffle_spectra::reps::{
    character, hom_dimension, induction_product, natural_rep, reflection_quotient, specht_rep, trivial_rep,
    verify_reflection_iso,
};
use shuffle_spectra::{Partition, Permutation, Representation, SpechtModule};

fn small_rep(kind: u8, p: usize) -> Representation {
    match (kind % 3, p) {
        (0, _) | (_, 0) => trivial_rep(p),
        (1, _) | (_, 1) => natural_rep(p).unwrap(),
        _ => reflection_quotient(p).unwrap(),
    }
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn induction_is_associative_on_characters(
        (a, b, c) in (0usize..=2, 0usize..=2, 0usize..=2).prop_filter("total ≤ 6", |(a, b, c)| a + b + c >= 1 && a + b + c <= 6),
        kinds in (any::<u8>(), any::<u8>(), any::<u8>()),
    ) {
        let (u, v, w) = (small_rep(kinds.0, a), small_rep(kinds.1, b), small_rep(kinds.2, c));
        let left = induction_product(&[induction_product(&[u.clone(), v.clone()]).unwrap(), w.clone()]).unwrap();
        let right = induction_product(&[u.clone(), induction_product(&[v.clone(), w.clone()]).unwrap()]).unwrap();
        prop_assert!(left.satisfies_coxeter_relations());
        let expected_dim = factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c))
            * (u.dim() * v.dim() * w.dim()) as u128;
        prop_assert_eq!(left.dim() as u128, expected_dim);
        for ct in Partition::all(a + b + c) {
            prop_assert_eq!(character(&left, &ct).unwrap(), character(&right, &ct).unwrap());
        }
    }

    #[test]
    fn specht_action_is_multiplicative((lambda, pi, sigma) in (1usize..=5).prop_flat_map(|n| (proptest::sample::select(Partition::all(n)), perm(n), perm(n)))) {
        let module = SpechtModule::new(&lambda).unwrap();
        let a = module.perm_matrix(&pi).unwrap();
        let b = module.perm_matrix(&sigma).unwrap();
        let ab = module.perm_matrix(&pi.compose(&sigma)).unwrap();
        prop_assert_eq!(&a * &b, ab);
        prop_assert!(a.is_integral());
        let via_algebra = module.action_matrix(&GroupAlgebraElement::from_perm(pi.clone())).unwrap();
        prop_assert_eq!(via_algebra, a);
    }
}

#[test]
fn specht_homs_are_kronecker() {
    for n in 1..=4 {
        let reps: Vec<Representation> =
            Partition::all(n).iter().map(|l| specht_rep(&SpechtModule::new(l).unwrap()).unwrap()).collect();
        for (i, r1) in reps.iter().enumerate() {
            assert!(r1.satisfies_coxeter_relations());
            for (j, r2) in reps.iter().enumerate() {
                assert_eq!(hom_dimension(r1, r2).unwrap(), usize::from(i == j));
            }
        }
    }
}

#[test]
fn hook_module_dimension() {
    for n in 2..=6 {
        let hook = Partition::new(vec![n - 1, 1]).unwrap();
        assert_eq!(SpechtModule::new(&hook).unwrap().dim(), n - 1);
        assert_eq!(reflection_quotient(n).unwrap().dim(), n - 1);
    }
}

#[test]
fn reflection_iso_up_to_6() {
    for p in 2..=6 {
        let r = verify_reflection_iso(p).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
