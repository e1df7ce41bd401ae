use a2l2_core::affroots::{coroot_pairing, RootKind};
use a2l2_core::scalar::{int, rat};
use a2l2_core::{
    affinize, all_mu_weights, check_admissible, dominant_integral_filter, eval_polys, expected_polynomials,
    expected_polynomials_plus_half, kw_positivity, mu_weight, positive_real_families, rho, zero_set_oracle,
    AffineWeight, FiniteWeight, ProjectionContext,
};
use num_traits::Zero;
use std::collections::BTreeSet;

#[test]
fn zero_set_of_computed_polynomials_is_the_mu_list() {
    for l in 1..=3 {
        let polys = ProjectionContext::new(l).unwrap().lowered_polynomials().unwrap();
        let zeros = zero_set_oracle(&polys).unwrap();
        let listed = all_mu_weights(l).unwrap();
        assert_eq!(zeros.len(), 1 << l);
        assert_eq!(zeros, listed, "l = {l}");
        for mu in &listed {
            assert!(eval_polys(&polys, mu).unwrap().iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn plus_half_variant_has_a_different_zero_set() {
    for l in 1..=3 {
        let zeros = zero_set_oracle(&expected_polynomials_plus_half(l).unwrap()).unwrap();
        assert_ne!(zeros, all_mu_weights(l).unwrap());
    }
}

#[test]
fn only_zero_and_last_fundamental_are_dominant_integral() {
    for l in 1..=3 {
        let zeros = zero_set_oracle(&expected_polynomials(l).unwrap()).unwrap();
        let expected: BTreeSet<_> = [FiniteWeight::zero(l), FiniteWeight::fundamental(l, l)].into();
        assert_eq!(dominant_integral_filter(&zeros), expected);
    }
}

#[test]
fn every_classified_weight_is_admissible() {
    for l in 1..=3 {
        for mu in all_mu_weights(l).unwrap() {
            let lam = affinize(&mu);
            let report = check_admissible(&lam).unwrap();
            assert!(report.condition1, "l = {l}, mu = {mu}: {:?}", report.violations);
            assert!(report.condition2, "l = {l}, mu = {mu}: rank {}", report.integral_rank);
            assert!(kw_positivity(&lam));
            assert_eq!(lam.level(), rat(-(2 * l as i64 + 1), 2));
        }
    }
}

#[test]
fn rank_one_pairings_with_delta_minus_alpha() {
    let root = AffineWeight::delta(1).sub(&AffineWeight::eps_unit(1, 1));
    let plain = affinize(&mu_weight(1, &[], false).unwrap());
    let primed = affinize(&mu_weight(1, &[], true).unwrap());
    assert_eq!(coroot_pairing(&plain, &root).unwrap(), int(-3));
    assert_eq!(coroot_pairing(&primed, &root).unwrap(), int(-4));
}

#[test]
fn rank_one_long_roots_are_never_integral() {
    for mu in all_mu_weights(1).unwrap() {
        let lam = affinize(&mu);
        let shifted = lam.add(&rho(1));
        let mu_a = &mu.eps_coords()[0];
        for fam in positive_real_families(1).iter().filter(|f| f.kind == RootKind::Long) {
            let sign = fam.classical[0].clone();
            for m in 0..12 {
                let value = coroot_pairing(&shifted, &fam.root(m)).unwrap();
                // ¾(2m+1) ± ½ ± (μ, α₁)
                let pattern = rat(3 * (2 * m + 1), 4) + &sign * rat(1, 2) + &sign * mu_a;
                assert_eq!(value, pattern);
                assert!(!value.is_integer(), "mu = {mu}, m = {m}");
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_simple_coroots() {
    use a2l2_core::affroots::simple_roots;
    for l in 1..=4 {
        for a in simple_roots(l) {
            assert_eq!(coroot_pairing(&rho(l), &a).unwrap(), int(1));
        }
    }
}
