//! Highest weights `μ_S`, `μ′_S`, the zero set of the lowered polynomials and
//! the passage to affine weights.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::affroots::AffineWeight;
use crate::envelope::CartanPoly;
use crate::error::{Error, Result};
use crate::linalg::{solve, SolveOutcome};
use crate::scalar::{fmt_scalar, half, int, sign_pow, Scalar};
use crate::vacuum::problem_level;

/// Weight of `h⁰` given by its values on `(h_1, …, h_{l-1}, h̄_l)`, which are
/// also its coefficients in the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWeight {
    pub coroot_vals: Vec<Scalar>,
}

impl FiniteWeight {
    pub fn new(coroot_vals: Vec<Scalar>) -> Self {
        Self { coroot_vals }
    }

    pub fn zero(l: usize) -> Self {
        Self::new(vec![Scalar::zero(); l])
    }

    /// `ω_k`, 1-based.
    pub fn fundamental(l: usize, k: usize) -> Self {
        let mut w = Self::zero(l);
        w.coroot_vals[k - 1] = Scalar::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coroot_vals.len()
    }

    /// `λ_l = x_l/2`, `λ_k = x_k + λ_{k+1}`.
    pub fn eps_coords(&self) -> Vec<Scalar> {
        let l = self.rank();
        let mut eps = vec![Scalar::zero(); l];
        eps[l - 1] = &self.coroot_vals[l - 1] * half();
        for k in (0..l - 1).rev() {
            eps[k] = &self.coroot_vals[k] + &eps[k + 1];
        }
        eps
    }

    /// `x_k = λ_k - λ_{k+1}`, `x_l = 2λ_l`.
    pub fn from_eps(eps: &[Scalar]) -> Self {
        let l = eps.len();
        let mut x: Vec<Scalar> = (0..l - 1).map(|k| &eps[k] - &eps[k + 1]).collect();
        x.push(&eps[l - 1] * int(2));
        Self::new(x)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.coroot_vals
                .iter()
                .zip(&o.coroot_vals)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.coroot_vals.iter().all(|x| x.is_integer() && !x.is_negative())
    }
}

impl fmt::Display for FiniteWeight {
    /// `-1/2*w1 + w2`-style sum over fundamental weights.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coroot_vals.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&fmt_scalar(&mag));
                out.push('*');
            }
            out.push_str(&format!("w{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// `μ_S` (or `μ′_S`): the coefficient of `ω_{i_j}` is
/// `i_j + 2Σ_{s>j}(-1)^{s-j} i_s + (-1)^{k-j+1}(l ∓ ½)`, and `μ′_S` adds `ω_l`.
pub fn mu_weight(l: usize, s: &[usize], primed: bool) -> Result<FiniteWeight> {
    if let Some(&bad) = s.iter().find(|&&i| i == 0 || i >= l) {
        return Err(Error::SubsetOutOfRange(bad, l.saturating_sub(1)));
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let k = s.len();
    let shift = if primed {
        int(l as i64) + half()
    } else {
        int(l as i64) - half()
    };
    let mut w = FiniteWeight::zero(l);
    for j in 1..=k {
        let mut c = int(s[j - 1] as i64);
        for t in j + 1..=k {
            c += int(2) * sign_pow((t - j) as i64) * int(s[t - 1] as i64);
        }
        c += sign_pow((k - j + 1) as i64) * &shift;
        w.coroot_vals[s[j - 1] - 1] = c;
    }
    if primed {
        w = w.add(&FiniteWeight::fundamental(l, l));
    }
    Ok(w)
}

/// All `μ_S`, `μ′_S` for `S ⊆ {1, …, l-1}`.
pub fn all_mu_weights(l: usize) -> Result<BTreeSet<FiniteWeight>> {
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (l - 1)) {
        let s: Vec<usize> = (1..l).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        for primed in [false, true] {
            out.insert(mu_weight(l, &s, primed)?);
        }
    }
    Ok(out)
}

pub fn eval_polys(polys: &[CartanPoly], mu: &FiniteWeight) -> Result<Vec<Scalar>> {
    polys.iter().map(|p| p.eval(&mu.coroot_vals)).collect()
}

/// Common zeros of polynomials of the form `x_v · (affine form)`, found by
/// solving each of the `2^l` branch systems exactly.
pub fn zero_set_oracle(polys: &[CartanPoly]) -> Result<BTreeSet<FiniteWeight>> {
    let l = polys.first().map_or(0, CartanPoly::nvars);
    if polys.len() != l {
        return Err(Error::ArityMismatch {
            got: polys.len(),
            expected: l,
        });
    }
    let factored = polys
        .iter()
        .map(|p| {
            p.as_variable_times_affine()
                .ok_or_else(|| Error::NotFactored(p.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << l) {
        let mut rows = Vec::with_capacity(l);
        let mut rhs = Vec::with_capacity(l);
        for (j, f) in factored.iter().enumerate() {
            if mask & (1 << j) == 0 {
                let mut row = vec![Scalar::zero(); l];
                row[f.var] = Scalar::one();
                rows.push(row);
                rhs.push(Scalar::zero());
            } else {
                rows.push(f.coeffs.clone());
                rhs.push(-f.constant.clone());
            }
        }
        match solve(&rows, &rhs) {
            SolveOutcome::Unique(x) => {
                out.insert(FiniteWeight::new(x));
            }
            other => return Err(Error::DegenerateBranch(format!("branch {mask:#b}: {other:?}"))),
        }
    }
    Ok(out)
}

pub fn dominant_integral_filter(ws: &BTreeSet<FiniteWeight>) -> BTreeSet<FiniteWeight> {
    ws.iter().filter(|w| w.is_dominant_integral()).cloned().collect()
}

/// `(-l-½)Λ₀ᶜ + μ`.
pub fn affinize(mu: &FiniteWeight) -> AffineWeight {
    AffineWeight {
        eps: mu.eps_coords(),
        d_delta: Scalar::zero(),
        k0: problem_level(mu.rank()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affroots::{ip, AffineWeight};
    use crate::scalar::rat;
    use crate::twzhu::{expected_polynomials, expected_polynomials_plus_half};

    #[test]
    fn mu_examples() {
        for l in 1..=4 {
            assert_eq!(mu_weight(l, &[], false).unwrap(), FiniteWeight::zero(l));
            assert_eq!(mu_weight(l, &[], true).unwrap(), FiniteWeight::fundamental(l, l));
        }
        assert_eq!(mu_weight(2, &[1], false).unwrap().to_string(), "-1/2*w1");
        assert_eq!(mu_weight(2, &[1], true).unwrap().to_string(), "-3/2*w1 + w2");
        assert!(mu_weight(2, &[2], false).is_err());
        assert!(mu_weight(3, &[0], false).is_err());
    }

    #[test]
    fn coordinate_round_trip() {
        let w = FiniteWeight::new(vec![rat(-1, 2), int(3), int(1)]);
        assert_eq!(FiniteWeight::from_eps(&w.eps_coords()), w);
        assert_eq!(
            FiniteWeight::fundamental(3, 3).eps_coords(),
            vec![half(), half(), half()]
        );
    }

    #[test]
    fn evaluation_witnesses() {
        let p = expected_polynomials(2).unwrap();
        let mu = mu_weight(2, &[1], false).unwrap();
        assert_eq!(eval_polys(&p, &mu).unwrap(), vec![int(0), int(0)]);
        let wrong = expected_polynomials_plus_half(2).unwrap();
        assert_ne!(eval_polys(&wrong, &mu).unwrap(), vec![int(0), int(0)]);
        let p1 = expected_polynomials(1).unwrap();
        assert_eq!(eval_polys(&p1, &FiniteWeight::fundamental(1, 1)).unwrap(), vec![int(0)]);
        assert!(eval_polys(&p1, &FiniteWeight::zero(2)).is_err());
    }

    #[test]
    fn oracle_matches_weight_list() {
        for l in 1..=4 {
            let zs = zero_set_oracle(&expected_polynomials(l).unwrap()).unwrap();
            assert_eq!(zs.len(), 1 << l);
            assert_eq!(zs, all_mu_weights(l).unwrap());
            let dom = dominant_integral_filter(&zs);
            let expect: BTreeSet<_> = [FiniteWeight::zero(l), FiniteWeight::fundamental(l, l)].into();
            assert_eq!(dom, expect);
        }
    }

    #[test]
    fn plus_half_variant_disagrees() {
        let zs = zero_set_oracle(&expected_polynomials_plus_half(2).unwrap()).unwrap();
        assert_ne!(zs, all_mu_weights(2).unwrap());
    }

    #[test]
    fn oracle_rejects_unfactored() {
        let x = CartanPoly::var(1, 0);
        let p = x.mul(&x).add(&CartanPoly::constant(1, int(1)));
        assert!(matches!(zero_set_oracle(&[p]), Err(Error::NotFactored(_))));
    }

    #[test]
    fn oracle_rejects_degenerate_branch() {
        // x1*x2 and x1*(x2): the branch x2 = 0, x2 = 0 leaves x1 free.
        let x1 = CartanPoly::var(2, 0);
        let x2 = CartanPoly::var(2, 1);
        let p = x1.mul(&x2);
        assert!(matches!(
            zero_set_oracle(&[p.clone(), p]),
            Err(Error::DegenerateBranch(_))
        ));
    }

    #[test]
    fn affinize_examples() {
        let lam = affinize(&FiniteWeight::zero(1));
        assert_eq!(lam.to_string(), "-3/2*L0c");
        let lam = affinize(&FiniteWeight::fundamental(1, 1));
        assert_eq!(lam.to_string(), "-3/2*L0c + 1/2*e1");
        for l in 1..=3 {
            let lam = affinize(&FiniteWeight::zero(l));
            assert_eq!(ip(&lam, &AffineWeight::delta(l)).unwrap(), problem_level(l));
        }
    }
}
