#![allow(dead_code)]

use a2l2_core::scalar::rat;
use a2l2_core::{LieElt, Scalar};
use proptest::prelude::*;

pub fn coeff() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Sparse `gl(2l+1)` element with up to six terms.
pub fn gl_elt(l: usize) -> impl Strategy<Value = LieElt> {
    let n = 2 * l + 1;
    prop::collection::vec((1..=n, 1..=n, coeff()), 1..=6).prop_map(move |terms| {
        let mut x = LieElt::zero(n);
        for (i, j, c) in terms {
            x.add_term(i, j, c);
        }
        x
    })
}

/// Sparse traceless element: off-diagonal terms plus a combination of `H_i`.
pub fn sl_elt(l: usize) -> impl Strategy<Value = LieElt> {
    let n = 2 * l + 1;
    (
        prop::collection::vec((1..=n, 1..=n, coeff()), 0..=4),
        prop::collection::vec((1..n, coeff()), 0..=2),
    )
        .prop_map(move |(off, diag)| {
            let mut x = LieElt::zero(n);
            for (i, j, c) in off {
                if i != j {
                    x.add_term(i, j, c);
                }
            }
            for (i, c) in diag {
                x = x + LieElt::h(n, i).scale(&c);
            }
            x
        })
}

pub fn rank() -> impl Strategy<Value = usize> {
    1usize..=3
}
