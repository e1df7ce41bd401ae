//! The check registry.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use serde_json::{json, Value};

use a2l2_core::liealg::b_type_cartan_reference;
use a2l2_core::twzhu::same_span;
use a2l2_core::vacuum::ModeOp;
use a2l2_core::{
    affinize, b_type_generators, check_admissible, coroot_pairing, dominant_integral_filter, expected_polynomials,
    expected_polynomials_plus_half, g1_zero_weight_dim, kw_positivity, zero_set_oracle, AffineWeight, CartanPoly,
    FiniteWeight, LieElt, ProjectionContext, Scalar, VermaState,
};

use crate::dump::factored;
use crate::scalar_json;

/// A failed check with its witness.
pub struct Failure(pub Value);

impl From<a2l2_core::Error> for Failure {
    fn from(e: a2l2_core::Error) -> Self {
        Failure(json!({ "error": e.to_string() }))
    }
}

type Outcome = Result<Value, Failure>;

pub struct Check {
    pub id: &'static str,
    pub deps: &'static [&'static str],
    pub run: fn(&Context) -> Outcome,
}

/// Registered checks, in dependency order.
pub static REGISTRY: &[Check] = &[
    Check {
        id: "cartan-matrix",
        deps: &[],
        run: cartan_matrix,
    },
    Check {
        id: "g1-dim",
        deps: &[],
        run: g1_dim,
    },
    Check {
        id: "singular",
        deps: &[],
        run: singular,
    },
    Check {
        id: "nu-fixed",
        deps: &["singular"],
        run: nu_fixed,
    },
    Check {
        id: "zhu-image",
        deps: &["singular"],
        run: zhu_image,
    },
    Check {
        id: "v1-closed-form",
        deps: &["zhu-image"],
        run: v1_closed_form,
    },
    Check {
        id: "polynomials",
        deps: &["v1-closed-form"],
        run: polynomials,
    },
    Check {
        id: "r0-dim",
        deps: &["zhu-image", "polynomials"],
        run: r0_dim,
    },
    Check {
        id: "classification",
        deps: &["polynomials"],
        run: classification,
    },
    Check {
        id: "dominant",
        deps: &["classification"],
        run: dominant,
    },
    Check {
        id: "admissible",
        deps: &["classification"],
        run: admissible,
    },
    Check {
        id: "kw-positivity",
        deps: &["classification"],
        run: kw,
    },
];

/// Objects shared between checks, built on first use.
pub struct Context {
    l: usize,
    projection: OnceCell<Result<ProjectionContext, a2l2_core::Error>>,
    singular: OnceCell<Result<VermaState, a2l2_core::Error>>,
    polys: OnceCell<Result<Vec<CartanPoly>, a2l2_core::Error>>,
}

impl Context {
    pub fn new(l: usize) -> Self {
        Self {
            l,
            projection: OnceCell::new(),
            singular: OnceCell::new(),
            polys: OnceCell::new(),
        }
    }

    fn projection(&self) -> Result<&ProjectionContext, a2l2_core::Error> {
        self.projection
            .get_or_init(|| ProjectionContext::new(self.l))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn singular(&self) -> Result<&VermaState, a2l2_core::Error> {
        self.singular
            .get_or_init(|| self.projection()?.vacuum().perse_vector())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn polys(&self) -> Result<&[CartanPoly], a2l2_core::Error> {
        self.polys
            .get_or_init(|| self.projection()?.lowered_polynomials())
            .as_deref()
            .map_err(Clone::clone)
    }

    fn zero_set(&self) -> Result<BTreeSet<FiniteWeight>, a2l2_core::Error> {
        zero_set_oracle(self.polys()?)
    }
}

fn fail(v: Value) -> Outcome {
    Err(Failure(v))
}

fn scalar_matrix(m: &[Vec<Scalar>]) -> Value {
    Value::Array(
        m.iter()
            .map(|r| Value::Array(r.iter().map(scalar_json).collect()))
            .collect(),
    )
}

fn weight_strings<'a>(ws: impl IntoIterator<Item = &'a FiniteWeight>) -> Vec<String> {
    ws.into_iter().map(ToString::to_string).collect()
}

fn cartan_matrix(ctx: &Context) -> Outcome {
    let m = b_type_generators(ctx.l)?.cartan_matrix()?;
    let want = b_type_cartan_reference(ctx.l);
    if m == want {
        Ok(json!({ "matrix": scalar_matrix(&m) }))
    } else {
        fail(json!({ "computed": scalar_matrix(&m), "expected": scalar_matrix(&want) }))
    }
}

fn g1_dim(ctx: &Context) -> Outcome {
    let d = g1_zero_weight_dim(ctx.l)?;
    let body = json!({ "dim": d, "expected": ctx.l });
    if d == ctx.l {
        Ok(body)
    } else {
        fail(body)
    }
}

fn singular(ctx: &Context) -> Outcome {
    let vac = ctx.projection()?.vacuum();
    let v = ctx.singular()?;
    if !vac.check_singular(v)? {
        return fail(json!({ "witness": "a generator of the positive part does not kill v" }));
    }
    let modes = [1, 2, 3];
    if !vac.check_killed_by_modes(v, &modes)? {
        return fail(json!({ "witness": "some x(n), n in 1..=3, does not kill v" }));
    }
    let n = vac.n();
    for i in 1..n {
        for j in i + 1..=n {
            if !vac.mode_action(&ModeOp::new(LieElt::e(n, i, j), 0), v)?.is_zero() {
                return fail(json!({ "witness": format!("E[{i},{j}](0) v != 0") }));
            }
        }
    }
    Ok(json!({
        "terms": v.terms().len(),
        "depth": v.depth(),
        "sweep_modes": modes,
        "weight": vac.g_weight(v),
    }))
}

fn nu_fixed(ctx: &Context) -> Outcome {
    let vac = ctx.projection()?.vacuum();
    let v = ctx.singular()?;
    let nv = vac.nu_state(v)?;
    if &nv == v {
        Ok(json!({ "fixed": true }))
    } else {
        fail(json!({ "difference": vac.render(&nv.sub(v)) }))
    }
}

fn zhu_image(ctx: &Context) -> Outcome {
    let p = ctx.projection()?;
    let got = p.project(ctx.singular()?)?;
    let want = p.zhu_image_closed_form()?;
    let env = p.envelope();
    if got == want {
        Ok(json!({ "image": env.render(&got), "terms": got.terms().len() }))
    } else {
        fail(json!({ "computed": env.render(&got), "expected": env.render(&want) }))
    }
}

fn v1_closed_form(ctx: &Context) -> Outcome {
    let p = ctx.projection()?;
    let got = p.compute_v1()?;
    let want = p.v1_closed_form()?;
    let env = p.envelope();
    if got == want {
        Ok(json!({ "v1": env.render(&got), "terms": got.terms().len() }))
    } else {
        fail(json!({ "computed": env.render(&got), "expected": env.render(&want) }))
    }
}

fn polynomials(ctx: &Context) -> Outcome {
    let got = ctx.polys()?;
    let want = expected_polynomials(ctx.l)?;
    let plus = expected_polynomials_plus_half(ctx.l)?;
    let plus_half_matches = got.iter().zip(&plus).filter(|(a, b)| a == b).count();
    let strings: Vec<String> = got.iter().map(ToString::to_string).collect();
    let body = json!({
        "polynomials": strings,
        "factored": got.iter().map(factored).collect::<Vec<_>>(),
        "plus_half_matches": plus_half_matches,
    });
    if got == want.as_slice() && plus_half_matches == 0 {
        Ok(body)
    } else {
        fail(json!({
            "computed": strings,
            "expected": want.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "plus_half_matches": plus_half_matches,
        }))
    }
}

fn r0_dim(ctx: &Context) -> Outcome {
    let p = ctx.projection()?;
    let r0 = p.r0_basis()?;
    let from_r0 = r0
        .iter()
        .map(|u| p.envelope().cartan_polynomial(u))
        .collect::<a2l2_core::Result<Vec<_>>>()?;
    let span_matches = same_span(&from_r0, ctx.polys()?);
    let body = json!({ "dim": r0.len(), "expected": ctx.l, "span_matches": span_matches });
    if r0.len() == ctx.l && span_matches {
        Ok(body)
    } else {
        fail(body)
    }
}

fn classification(ctx: &Context) -> Outcome {
    let zeros = ctx.zero_set()?;
    let listed = a2l2_core::all_mu_weights(ctx.l)?;
    if zeros == listed && zeros.len() == 1 << ctx.l {
        Ok(json!({ "count": zeros.len(), "weights": weight_strings(&zeros) }))
    } else {
        fail(json!({
            "zero_set": weight_strings(&zeros),
            "listed": weight_strings(&listed),
        }))
    }
}

fn dominant(ctx: &Context) -> Outcome {
    let dom = dominant_integral_filter(&ctx.zero_set()?);
    let want: BTreeSet<_> = [FiniteWeight::zero(ctx.l), FiniteWeight::fundamental(ctx.l, ctx.l)].into();
    let body = json!({ "weights": weight_strings(&dom) });
    if dom == want {
        Ok(body)
    } else {
        fail(body)
    }
}

fn admissible(ctx: &Context) -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for mu in ctx.zero_set()? {
        let r = check_admissible(&affinize(&mu))?;
        ok &= r.admissible();
        let mut row = json!({
            "weight": mu.to_string(),
            "admissible": r.admissible(),
            "integral_rank": r.integral_rank,
        });
        if !r.violations.is_empty() {
            row["violations"] = r
                .violations
                .iter()
                .map(|w| json!({ "family": w.family, "m": w.m, "value": scalar_json(&w.value) }))
                .collect();
        }
        if ctx.l == 1 {
            let root = AffineWeight::delta(1).sub(&AffineWeight::eps_unit(1, 1));
            row["pairing_delta_minus_alpha1"] = scalar_json(&coroot_pairing(&affinize(&mu), &root)?);
        }
        rows.push(row);
    }
    let body = json!({ "weights": rows });
    if ok {
        Ok(body)
    } else {
        fail(body)
    }
}

fn kw(ctx: &Context) -> Outcome {
    let zeros = ctx.zero_set()?;
    let bad: Vec<String> = zeros
        .iter()
        .filter(|mu| !kw_positivity(&affinize(mu)))
        .map(ToString::to_string)
        .collect();
    let value = zeros
        .iter()
        .next()
        .map(|mu| a2l2_core::affroots::kw_value(&affinize(mu)));
    let body = json!({ "level_plus_dual_coxeter": value.as_ref().map(scalar_json), "failing": bad });
    if bad.is_empty() {
        Ok(body)
    } else {
        fail(body)
    }
}
