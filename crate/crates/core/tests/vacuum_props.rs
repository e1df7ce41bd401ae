mod common;

use a2l2_core::liealg::nu;
use a2l2_core::vacuum::{ModeOp, VacuumModule, VermaState};
use a2l2_core::{LieElt, Scalar};
use common::{coeff, rank, sl_elt};
use num_traits::Zero;
use proptest::prelude::*;

type Factors = Vec<(usize, u32)>;

fn low_depth_state(l: usize) -> impl Strategy<Value = Vec<(Factors, Scalar)>> {
    let n = 2 * l + 1;
    let dim = n * n - 1;
    prop::collection::vec((prop::collection::vec((0..dim, 1u32..=2), 0..=2), coeff()), 1..=2)
}

fn build(vac: &VacuumModule, summands: &[(Factors, Scalar)]) -> VermaState {
    let mut s = VermaState::zero();
    for (f, c) in summands {
        s.add_scaled(c, &vac.state_from_factors(f).unwrap());
    }
    s
}

type JacobiCase = (usize, LieElt, LieElt, i64, i64, Vec<(Factors, Scalar)>);

fn jacobi_case() -> impl Strategy<Value = JacobiCase> {
    rank().prop_flat_map(|l| (Just(l), sl_elt(l), sl_elt(l), -2i64..=2, -2i64..=2, low_depth_state(l)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn affine_jacobi((l, x, y, m, n, summands) in jacobi_case()) {
        let vac = VacuumModule::at_problem_level(l).unwrap();
        let s = build(&vac, &summands);
        let act = |e: &LieElt, k: i64, t: &VermaState| vac.mode_action(&ModeOp::new(e.clone(), k), t).unwrap();
        let lhs = act(&x, m, &act(&y, n, &s)).sub(&act(&y, n, &act(&x, m, &s)));
        let mut rhs = act(&x.bracket(&y).unwrap(), m + n, &s);
        if m + n == 0 {
            let c = Scalar::from_integer(m.into()) * x.invariant_form(&y).unwrap() * vac.level();
            rhs.add_scaled(&c, &s);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nu_is_equivariant((l, x, _, m, _, summands) in jacobi_case()) {
        let vac = VacuumModule::at_problem_level(l).unwrap();
        let s = build(&vac, &summands);
        let lhs = vac.nu_state(&vac.mode_action(&ModeOp::new(x.clone(), m), &s).unwrap()).unwrap();
        let rhs = vac.mode_action(&ModeOp::new(nu(&x).unwrap(), m), &vac.nu_state(&s).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(vac.nu_state(&vac.nu_state(&s).unwrap()).unwrap(), s);
    }
}

#[test]
fn orbit_is_adjoint_sized() {
    for l in 1..=3 {
        let vac = VacuumModule::at_problem_level(l).unwrap();
        let v = vac.perse_vector().unwrap();
        let orbit = vac.zero_mode_orbit(&v).unwrap();
        assert_eq!(orbit.len(), l * (2 * l + 3), "l = {l}");
        assert_eq!(vac.h0_weight_zero_dim(&orbit), l);
        // ν maps the span to itself.
        let mut ech = a2l2_core::linalg::Echelon::new();
        for s in &orbit {
            ech.insert(s.terms());
        }
        for s in &orbit {
            assert!(ech.contains(vac.nu_state(s).unwrap().terms()));
        }
    }
}

#[test]
fn singular_vector_has_weight_theta_and_depth_two() {
    for l in 1..=3 {
        let vac = VacuumModule::at_problem_level(l).unwrap();
        let v = vac.perse_vector().unwrap();
        let mut theta = vec![0; 2 * l];
        theta[0] += 1;
        theta[2 * l - 1] += 1;
        assert_eq!(vac.g_weight(&v), Some(theta));
        assert!(v.terms().keys().all(|m| m.depth() == 2));
        assert!(!v.terms().values().any(Zero::is_zero));
    }
}
