mod common;

use a2l2_core::envelope::{Envelope, SwapSchedule, UEAElt};
use a2l2_core::scalar::int;
use a2l2_core::{FiniteWeight, Scalar};
use common::{coeff, rank};
use num_traits::Zero;
use proptest::prelude::*;

fn word(l: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<u16>)> {
    let d = l * (2 * l + 1);
    prop::collection::vec(0..d as u16, 0..=max_len).prop_map(move |w| (l, w))
}

fn envelope(l: usize) -> Envelope {
    Envelope::for_rank(l).unwrap()
}

fn elt(env: &Envelope, words: &[(Vec<u16>, Scalar)]) -> UEAElt {
    env.normalize_sum(words.iter().cloned())
}

fn small_elt(l: usize) -> impl Strategy<Value = Vec<(Vec<u16>, Scalar)>> {
    let d = l * (2 * l + 1);
    prop::collection::vec((prop::collection::vec(0..d as u16, 0..=2), coeff()), 1..=3)
}

/// Index of the basis vector whose weight is the negative of `k`'s.
fn opposite(env: &Envelope, k: usize) -> usize {
    let w = &env.basis().weights[k];
    let neg: Vec<Scalar> = w.iter().map(|x| -x.clone()).collect();
    let b = env.basis();
    if w.iter().all(Zero::is_zero) {
        return k;
    }
    (0..b.dim()).find(|&j| b.weights[j] == neg).expect("opposite root")
}

/// Weight-zero word built from a random multiset and the opposites of its
/// elements, in shuffled order.
fn weight_zero_word(l: usize) -> impl Strategy<Value = (usize, Vec<u16>)> {
    let d = l * (2 * l + 1);
    prop::collection::vec(0..d, 1..=2)
        .prop_flat_map(move |half| {
            let env = envelope(l);
            let mut w: Vec<u16> = half.iter().map(|&k| k as u16).collect();
            w.extend(half.iter().map(|&k| opposite(&env, k) as u16));
            Just(w).prop_shuffle()
        })
        .prop_map(move |w| (l, w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn straightening_is_schedule_independent((l, w) in rank().prop_flat_map(|l| word(l, 5))) {
        let env = envelope(l);
        let a = env.normal_form_with(&w, &int(1), SwapSchedule::Leftmost);
        let b = env.normal_form_with(&w, &int(1), SwapSchedule::Rightmost);
        prop_assert_eq!(&a, &b);
        // Any bracketing of the product of generators gives the same result.
        let mut left = UEAElt::one();
        for &k in &w {
            left = env.mul(&left, &env.generator(k as usize));
        }
        let mut right = UEAElt::one();
        for &k in w.iter().rev() {
            right = env.mul(&env.generator(k as usize), &right);
        }
        prop_assert_eq!(&left, &a);
        prop_assert_eq!(&right, &a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn ad_is_a_derivation(
        (l, k, u, v) in rank().prop_flat_map(|l| (Just(l), 0..l * (2 * l + 1), small_elt(l), small_elt(l)))
    ) {
        let env = envelope(l);
        let (u, v) = (elt(&env, &u), elt(&env, &v));
        let lhs = env.ad_basis(k, &env.mul(&u, &v));
        let rhs = env.mul(&env.ad_basis(k, &u), &v).add(&env.mul(&u, &env.ad_basis(k, &v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ad_is_a_lie_action(
        (l, x, y, u) in rank().prop_flat_map(|l| {
            let d = l * (2 * l + 1);
            (Just(l), 0..d, 0..d, small_elt(l))
        })
    ) {
        let env = envelope(l);
        let u = elt(&env, &u);
        let b = env.basis();
        let mut lhs = UEAElt::zero();
        for (k, c) in &b.bracket[x][y] {
            lhs.add_scaled(c, &env.ad_basis(*k, &u));
        }
        let rhs = env.ad_basis(x, &env.ad_basis(y, &u)).sub(&env.ad_basis(y, &env.ad_basis(x, &u)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_is_associative(
        (l, a, b, c) in rank().prop_flat_map(|l| (Just(l), small_elt(l), small_elt(l), small_elt(l)))
    ) {
        let env = envelope(l);
        let (a, b, c) = (elt(&env, &a), elt(&env, &b), elt(&env, &c));
        prop_assert_eq!(env.mul(&env.mul(&a, &b), &c), env.mul(&a, &env.mul(&b, &c)));
    }

    #[test]
    fn cartan_polynomial_matches_realizations((l, w) in rank().prop_flat_map(weight_zero_word)) {
        let env = envelope(l);
        let u = env.normal_form(&w, &int(1));
        prop_assert!(env.is_weight_zero(&u));
        let p = env.cartan_polynomial(&u).unwrap();
        let (_, rest) = env.cartan_split(&u).unwrap();
        let ends_positive = rest.terms().keys().all(|m| {
            let last = *m.factors().last().unwrap() as usize;
            env.basis().kinds[last] == a2l2_core::liealg::BasisKind::Positive
        });
        prop_assert!(ends_positive);

        // Trivial module.
        let trivial = u.terms().get(&a2l2_core::PbwMonomial::unit()).cloned().unwrap_or_else(Scalar::zero);
        prop_assert_eq!(p.eval(&FiniteWeight::zero(l).coroot_vals).unwrap(), trivial);

        // Natural module on C^{2l+1}, highest weight vector e_1 of weight ε_1.
        let mut eps1 = vec![Scalar::zero(); l];
        eps1[0] = int(1);
        let lam = FiniteWeight::from_eps(&eps1);
        prop_assert_eq!(p.eval(&lam.coroot_vals).unwrap(), natural_top_coefficient(&env, &u));

        // Adjoint module of g⁰, highest weight the highest root.
        let top = highest_root_index(&env);
        let lam = FiniteWeight::from_eps(&env.basis().weights[top]);
        prop_assert_eq!(p.eval(&lam.coroot_vals).unwrap(), adjoint_top_coefficient(&env, &u, top));
    }
}

fn natural_top_coefficient(env: &Envelope, u: &UEAElt) -> Scalar {
    let b = env.basis();
    let n = b.n();
    let mut total = Scalar::zero();
    for (m, c) in u.terms() {
        let mut v = vec![Scalar::zero(); n];
        v[0] = int(1);
        for &k in m.factors().iter().rev() {
            let mut nv = vec![Scalar::zero(); n];
            for (&(i, j), x) in b.elems[k as usize].terms() {
                nv[i - 1] += x * &v[j - 1];
            }
            v = nv;
        }
        total += c * &v[0];
    }
    total
}

fn highest_root_index(env: &Envelope) -> usize {
    let b = env.basis();
    let l = b.l;
    let mut target = vec![Scalar::zero(); l];
    target[0] = int(1);
    if l > 1 {
        target[1] = int(1);
    }
    (0..b.dim())
        .find(|&k| b.weights[k] == target)
        .expect("highest root vector")
}

fn adjoint_top_coefficient(env: &Envelope, u: &UEAElt, top: usize) -> Scalar {
    let b = env.basis();
    let d = b.dim();
    let mut total = Scalar::zero();
    for (m, c) in u.terms() {
        let mut v = vec![Scalar::zero(); d];
        v[top] = int(1);
        for &k in m.factors().iter().rev() {
            let mut nv = vec![Scalar::zero(); d];
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                for (i, x) in &b.bracket[k as usize][j] {
                    nv[*i] += x * vj;
                }
            }
            v = nv;
        }
        total += c * &v[top];
    }
    total
}
