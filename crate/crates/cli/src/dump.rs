//! Plain-text dumps of the computed objects and the classification report.
//!
//! Grammar:
//! - states are sums of `c*X[..](-d)…|0>` with `X[..]` an `sl` basis label;
//! - enveloping algebra elements are sums of `c*b1*b2^k…` with `b` a `g⁰`
//!   basis label (`E+[i,j]`, `h1`, …, `hb{l}`);
//! - polynomials are in `h1, …, hl`, where `hl` is the unnormalized last
//!   Cartan element, one per line, each factored as `hj*(affine form)`;
//! - weights are sums of `c*wi` over fundamental weights, `0` for zero.

use std::str::FromStr;

use serde_json::json;

use a2l2_core::vacuum::problem_level;
use a2l2_core::{affinize, check_admissible, zero_set_oracle, CartanPoly, ProjectionContext};

use crate::{check_rank, scalar_json, CliError, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpObject {
    Singular,
    ZhuImage,
    V1,
    Polys,
    Weights,
}

impl FromStr for DumpObject {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "singular" => Ok(DumpObject::Singular),
            "zhu-image" => Ok(DumpObject::ZhuImage),
            "v1" => Ok(DumpObject::V1),
            "polys" => Ok(DumpObject::Polys),
            "weights" => Ok(DumpObject::Weights),
            other => Err(CliError::UnknownObject(other.to_string())),
        }
    }
}

fn h_name(i: usize) -> String {
    format!("h{}", i + 1)
}

/// `hj*(…)` in the unnormalized Cartan variables, or the expanded form if the
/// polynomial does not factor that way.
pub(crate) fn factored(p: &CartanPoly) -> String {
    let q = p.to_unnormalized();
    match q.as_variable_times_affine() {
        Some(f) => {
            let n = q.nvars();
            let mut aff = CartanPoly::constant(n, f.constant.clone());
            for (i, c) in f.coeffs.iter().enumerate() {
                aff = aff.add(&CartanPoly::var(n, i).scale(c));
            }
            format!("{}*({})", h_name(f.var), aff.render(h_name))
        }
        None => q.render(h_name),
    }
}

pub fn dump_object(l: usize, which: DumpObject) -> Result<String, CliError> {
    check_rank(l)?;
    let ctx = ProjectionContext::new(l)?;
    let env = ctx.envelope();
    let mut out = match which {
        DumpObject::Singular => ctx.vacuum().render(&ctx.vacuum().perse_vector()?),
        DumpObject::ZhuImage => env.render(&ctx.zhu_singular_image()?),
        DumpObject::V1 => env.render(&ctx.compute_v1()?),
        DumpObject::Polys => ctx
            .lowered_polynomials()?
            .iter()
            .map(factored)
            .collect::<Vec<_>>()
            .join("\n"),
        DumpObject::Weights => zero_set_oracle(&ctx.lowered_polynomials()?)?
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    out.push('\n');
    Ok(out)
}

/// The classified highest weights with their dominance and admissibility.
pub fn classify(l: usize, format: Format) -> Result<String, CliError> {
    check_rank(l)?;
    let ctx = ProjectionContext::new(l)?;
    let weights = zero_set_oracle(&ctx.lowered_polynomials()?)?;
    let mut rows = Vec::new();
    for mu in &weights {
        let report = check_admissible(&affinize(mu))?;
        rows.push((mu, mu.is_dominant_integral(), report.admissible()));
    }
    Ok(match format {
        Format::Json => {
            let ws: Vec<_> = rows
                .iter()
                .map(|(mu, dom, adm)| {
                    json!({
                        "weight": mu.to_string(),
                        "coroot_values": mu.coroot_vals.iter().map(scalar_json).collect::<Vec<_>>(),
                        "dominant_integral": dom,
                        "admissible": adm,
                    })
                })
                .collect();
            let body = json!({
                "l": l,
                "level": a2l2_core::scalar::fmt_scalar(&problem_level(l)),
                "count": weights.len(),
                "weights": ws,
            });
            let mut s = serde_json::to_string_pretty(&body).expect("serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (mu, dom, adm) in rows {
                let mut tags = Vec::new();
                if dom {
                    tags.push("dominant-integral");
                }
                if adm {
                    tags.push("admissible");
                }
                s.push_str(&format!("{mu}\t{}\n", tags.join(",")));
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_polys_factor() {
        assert_eq!(dump_object(1, DumpObject::Polys).unwrap(), "h1*(h1 - 1/2)\n");
    }

    #[test]
    fn rank_one_weights() {
        assert_eq!(dump_object(1, DumpObject::Weights).unwrap(), "0\nw1\n");
    }

    #[test]
    fn rank_two_zhu_image_in_normal_form() {
        // The three summands reduce to two PBW monomials.
        assert_eq!(
            dump_object(2, DumpObject::ZhuImage).unwrap(),
            "2*E+[1,2]*E+[1,4] - E+[1,3]^2\n"
        );
    }

    #[test]
    fn unknown_selector() {
        assert!(matches!("nope".parse::<DumpObject>(), Err(CliError::UnknownObject(_))));
    }
}
