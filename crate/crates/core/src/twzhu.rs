//! The `ν`-twisted Zhu projection `V(g, k) → U(g⁰)` for `T = 2`, the image
//! of the singular vector, the element `v₁`, the lowered weight-zero
//! elements and the space `R₀`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::envelope::{CartanPoly, Envelope, PbwMonomial, UEAElt};
use crate::error::{Error, Result};
use crate::liealg::{b_type_generators, e_plus, split_pm, LieElt};
use crate::linalg::{add_entry, Echelon, SparseVec};
use crate::scalar::{binom, half, int, rat, sign_pow, Scalar};
use crate::vacuum::{problem_level, ModeMonomial, VacuumModule, VermaState};

/// Order of the twisting automorphism.
pub const TWIST_ORDER: u32 = 2;

/// Shared data for projecting states of `V(g, -l-½)` into `U(g⁰)`.
#[derive(Clone, Debug)]
pub struct ProjectionContext {
    vacuum: VacuumModule,
    envelope: Envelope,
    /// `g⁰` coordinates of `b⁺` for each `sl` basis element `b`.
    plus: Vec<Vec<(usize, Scalar)>>,
    /// `sl` coordinates of `b⁻`.
    minus: Vec<Vec<(usize, Scalar)>>,
}

impl ProjectionContext {
    pub fn new(l: usize) -> Result<Self> {
        Self::with_level(l, problem_level(l))
    }

    pub fn with_level(l: usize, level: Scalar) -> Result<Self> {
        let vacuum = VacuumModule::new(l, level)?;
        let envelope = Envelope::for_rank(l)?;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for b in &vacuum.basis().elems {
            let pm = split_pm(b)?;
            plus.push(envelope.basis().coords(&pm.plus)?);
            minus.push(vacuum.basis().coords(&pm.minus)?);
        }
        Ok(Self {
            vacuum,
            envelope,
            plus,
            minus,
        })
    }

    pub fn l(&self) -> usize {
        self.vacuum.l()
    }

    pub fn n(&self) -> usize {
        self.vacuum.n()
    }

    pub fn level(&self) -> &Scalar {
        self.vacuum.level()
    }

    pub fn vacuum(&self) -> &VacuumModule {
        &self.vacuum
    }

    pub fn envelope(&self) -> &Envelope {
        &self.envelope
    }

    /// `⟦s⟧`, discarding the `ν`-odd part of `s` first.
    pub fn project(&self, s: &VermaState) -> Result<UEAElt> {
        let even = s.add(&self.vacuum.nu_state(s)?).scale(&half());
        self.project_by_recursion(&even)
    }

    /// `⟦s⟧` computed by the reduction rules alone, without discarding the
    /// odd part up front.
    pub fn project_by_recursion(&self, s: &VermaState) -> Result<UEAElt> {
        let mut memo = HashMap::new();
        self.project_terms(s.terms(), &mut memo)
    }

    fn project_terms(
        &self,
        terms: &SparseVec<ModeMonomial>,
        memo: &mut HashMap<ModeMonomial, UEAElt>,
    ) -> Result<UEAElt> {
        let mut out = UEAElt::zero();
        for (m, c) in terms {
            let p = self.project_monomial(m, memo)?;
            out.add_scaled(c, &p);
        }
        Ok(out)
    }

    fn project_monomial(&self, m: &ModeMonomial, memo: &mut HashMap<ModeMonomial, UEAElt>) -> Result<UEAElt> {
        if let Some(u) = memo.get(m) {
            return Ok(u.clone());
        }
        let Some((&(b, d), rest)) = m.factors().split_first() else {
            return Ok(UEAElt::one());
        };
        let b = b as usize;
        let w = VermaState::from_terms([(ModeMonomial::from_sorted_factors(rest.to_vec()), Scalar::one())].into());
        let mut out = UEAElt::zero();

        // ⟦b⁺(-d) w⟧ = (-1)^{d-1} ⟦w⟧ b⁺
        if !self.plus[b].is_empty() {
            let pw = self.project_terms(w.terms(), memo)?;
            let mut bp = UEAElt::zero();
            for (g, c) in &self.plus[b] {
                bp.add_scaled(c, &self.envelope.generator(*g));
            }
            out.add_scaled(&sign_pow(d as i64 - 1), &self.envelope.mul(&pw, &bp));
        }

        // ⟦b⁻(-d) w⟧ = -Σ_{k≥1} binom(½, k) ⟦b⁻(-d+k) w⟧
        if !self.minus[b].is_empty() {
            let top = d + w.depth();
            for k in 1..=top {
                let coeff = -binom(&half(), k);
                let mode = k as i64 - d as i64;
                for (y, c) in &self.minus[b] {
                    let s = self.vacuum.basis_mode_action(*y, mode, &w)?;
                    if !s.is_zero() {
                        let p = self.project_terms(s.terms(), memo)?;
                        out.add_scaled(&(&coeff * c), &p);
                    }
                }
            }
        }
        memo.insert(m.clone(), out.clone());
        Ok(out)
    }

    /// `⟦x(0) w⟧ = [x, ⟦w⟧]` for `x ∈ g⁰`.
    pub fn project_zero_mode(&self, x: &LieElt, w: &VermaState) -> Result<UEAElt> {
        self.envelope.ad_l(x, &self.project(w)?)
    }

    /// `-½ [a,b]⁺ + (k/8)⟨a,b⟩` for `a ∈ g¹`: the image of `a(-1)b(-1)𝟙`.
    pub fn projab_closed_form(&self, a: &LieElt, b: &LieElt) -> Result<UEAElt> {
        let ab = a.bracket(b)?;
        let mut out = self.envelope.embed(&split_pm(&ab)?.plus)?.scale(&rat(-1, 2));
        let central = self.level() * a.invariant_form(b)? * rat(1, 8);
        out.add_scaled(&central, &UEAElt::one());
        Ok(out)
    }

    /// `a(-1)b(-1)𝟙` for arbitrary `a, b ∈ sl(2l+1)`.
    pub fn pair_state(&self, a: &LieElt, b: &LieElt) -> Result<VermaState> {
        let vac = &self.vacuum;
        let inner = vac.mode_action(&crate::vacuum::ModeOp::new(b.clone(), -1), &VermaState::vacuum())?;
        vac.mode_action(&crate::vacuum::ModeOp::new(a.clone(), -1), &inner)
    }

    /// `⟦v⟧` for the singular vector.
    pub fn zhu_singular_image(&self) -> Result<UEAElt> {
        self.project(&self.vacuum.perse_vector()?)
    }

    /// `Σ_{i=1}^{2l-1} E⁺_{i+1,2l+1} E⁺_{1,i+1}`.
    pub fn zhu_image_closed_form(&self) -> Result<UEAElt> {
        let n = self.n();
        let mut out = UEAElt::zero();
        for i in 1..n - 1 {
            let t = self.envelope.product(&[e_plus(n, i + 1, n), e_plus(n, 1, i + 1)])?;
            out.add_scaled(&Scalar::one(), &t);
        }
        Ok(out)
    }

    /// `E_{l+1,1} - (-1)^l E_{2l+1,l+1}`.
    pub fn v1_lowering(&self) -> LieElt {
        let (l, n) = (self.l(), self.n());
        LieElt::e(n, l + 1, 1) - sign_pow(l as i64) * LieElt::e(n, n, l + 1)
    }

    /// `v₁ = 2 (E_{l+1,1} - (-1)^l E_{2l+1,l+1})_L ⟦v⟧`.
    pub fn compute_v1(&self) -> Result<UEAElt> {
        self.v1_from(&self.zhu_singular_image()?)
    }

    pub fn v1_from(&self, image: &UEAElt) -> Result<UEAElt> {
        Ok(self.envelope.ad_l(&self.v1_lowering(), image)?.scale(&int(2)))
    }

    /// The four-part closed form of `v₁`.
    pub fn v1_closed_form(&self) -> Result<UEAElt> {
        let (l, n) = (self.l(), self.n());
        let e = |i, j| LieElt::e(n, i, j);
        let s = |p: usize| sign_pow(p as i64);
        let a = |i: usize| e(1, i + 1) - s(i) * e(2 * l + 1 - i, n);
        let b = |i: usize| e(i + 1, l + 1) - sign_pow(l as i64 - i as i64) * e(l + 1, 2 * l + 1 - i);
        let mid = e(1, l + 1) - s(l) * e(l + 1, n);
        let sl = s(l);
        let env = &self.envelope;

        let mut out = UEAElt::zero();
        for i in 1..l {
            out.add_scaled(&sl, &env.product(&[a(i), b(i)])?);
        }
        out.add_scaled(&sl, &env.product(&[e(1, 1) - e(n, n), mid.clone()])?);
        out.add_scaled(&(-&sl * half()), &env.embed(&mid)?);
        for i in l + 1..2 * l {
            out.add_scaled(&sl, &env.product(&[b(i), a(i)])?);
        }
        Ok(out)
    }

    /// Operators `f_j, …, f_1, f_{j+1}, …, f_l` (leftmost first), unnormalized
    /// `f_l`.
    pub fn lowering_word(&self, j: usize) -> Result<Vec<LieElt>> {
        let g = b_type_generators(self.l())?;
        let mut word: Vec<LieElt> = (1..=j).rev().map(|i| g.f[i - 1].clone()).collect();
        word.extend((j + 1..=self.l()).map(|i| g.f[i - 1].clone()));
        Ok(word)
    }

    /// `u_j = -(-1)^j (f_j⋯f_1 f_{j+1}⋯f_l)_L v₁`.
    pub fn lowered_element(&self, v1: &UEAElt, j: usize) -> Result<UEAElt> {
        let mut acc = v1.clone();
        for f in self.lowering_word(j)?.iter().rev() {
            acc = self.envelope.ad_l(f, &acc)?;
        }
        Ok(acc.scale(&-sign_pow(j as i64)))
    }

    /// The Cartan images `p_1, …, p_l` of the lowered elements.
    pub fn lowered_polynomials(&self) -> Result<Vec<CartanPoly>> {
        let v1 = self.compute_v1()?;
        self.lowered_polynomials_from(&v1)
    }

    pub fn lowered_polynomials_from(&self, v1: &UEAElt) -> Result<Vec<CartanPoly>> {
        (1..=self.l())
            .map(|j| {
                let u = self.lowered_element(v1, j)?;
                self.envelope.cartan_polynomial(&u)
            })
            .collect()
    }

    /// Basis of `R = ⟦U(g⁰)v⟧`, the `ad_L`-closure of `⟦v⟧`.
    pub fn r_basis(&self) -> Result<Vec<UEAElt>> {
        self.ad_closure(&self.zhu_singular_image()?)
    }

    pub fn ad_closure(&self, seed: &UEAElt) -> Result<Vec<UEAElt>> {
        let env = &self.envelope;
        let mut ech: Echelon<PbwMonomial> = Echelon::new();
        let mut queue = vec![seed.clone()];
        let mut found = Vec::new();
        while let Some(u) = queue.pop() {
            if !ech.insert(u.terms()) {
                continue;
            }
            for k in 0..env.basis().dim() {
                queue.push(env.ad_basis(k, &u));
            }
            found.push(u);
        }
        Ok(found)
    }

    /// Basis of the `h⁰`-weight-zero subspace `R₀`.
    pub fn r0_basis(&self) -> Result<Vec<UEAElt>> {
        self.weight_zero_part(&self.r_basis()?)
    }

    /// Weight-zero components of an `h⁰`-stable family, reduced to a basis.
    pub fn weight_zero_part(&self, family: &[UEAElt]) -> Result<Vec<UEAElt>> {
        let env = &self.envelope;
        let zero = vec![Scalar::zero(); self.l()];
        let mut ech: Echelon<PbwMonomial> = Echelon::new();
        for u in family {
            let mut part = SparseVec::new();
            for (m, c) in u.terms() {
                if env.monomial_weight(m) == zero {
                    add_entry(&mut part, m.clone(), c.clone());
                }
            }
            ech.insert(&part);
        }
        Ok(ech
            .rows()
            .iter()
            .map(|r| {
                let mut u = UEAElt::zero();
                for (m, c) in r {
                    u.add_scaled(c, &self.envelope.normal_form(m.factors(), &Scalar::one()));
                }
                u
            })
            .collect())
    }
}

/// `h_j (h_j + 2Σ_{j<i≤l} h_i + (l-j) + offset)` in the variables
/// `(h_1, …, h_{l-1}, h̄_l)` with `h_l = ½ h̄_l`.
pub fn expected_polynomial(l: usize, j: usize, offset: &Scalar) -> Result<CartanPoly> {
    if j == 0 || j > l {
        return Err(Error::SubsetOutOfRange(j, l));
    }
    let h = |i: usize| {
        let x = CartanPoly::var(l, i - 1);
        if i == l {
            x.scale(&half())
        } else {
            x
        }
    };
    let mut lin = h(j).add(&CartanPoly::constant(l, int((l - j) as i64) + offset));
    for i in j + 1..=l {
        lin = lin.add(&h(i).scale(&int(2)));
    }
    Ok(h(j).mul(&lin))
}

/// The polynomials with constant `(l-j) - ½`.
pub fn expected_polynomials(l: usize) -> Result<Vec<CartanPoly>> {
    (1..=l).map(|j| expected_polynomial(l, j, &-half())).collect()
}

/// The variant with constant `(l-j) + ½`.
pub fn expected_polynomials_plus_half(l: usize) -> Result<Vec<CartanPoly>> {
    (1..=l).map(|j| expected_polynomial(l, j, &half())).collect()
}

/// Equality of the linear spans of two polynomial families.
pub fn same_span(a: &[CartanPoly], b: &[CartanPoly]) -> bool {
    let mut ea = Echelon::new();
    for p in a {
        ea.insert(p.terms());
    }
    let mut eb = Echelon::new();
    for p in b {
        eb.insert(p.terms());
    }
    ea.rank() == eb.rank() && b.iter().all(|p| ea.contains(p.terms())) && a.iter().all(|p| eb.contains(p.terms()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{e_minus, LieElt};

    fn ctx(l: usize) -> ProjectionContext {
        ProjectionContext::new(l).unwrap()
    }

    #[test]
    fn even_mode_rules() {
        let c = ctx(1);
        let env = c.envelope();
        let vac = c.vacuum();
        let a = e_plus(3, 1, 2);
        let s = vac
            .mode_action(&crate::vacuum::ModeOp::new(a.clone(), -2), &VermaState::vacuum())
            .unwrap();
        assert_eq!(c.project(&s).unwrap(), env.embed(&a).unwrap().scale(&int(-1)));

        let b = LieElt::h(3, 1) + LieElt::h(3, 2);
        let s = c.pair_state(&a, &b).unwrap();
        let expected = env.mul(&env.embed(&b).unwrap(), &env.embed(&a).unwrap());
        assert_eq!(c.project(&s).unwrap(), expected);
    }

    #[test]
    fn odd_generator_projects_to_zero() {
        let c = ctx(2);
        let th = LieElt::e(5, 1, 5);
        let s = c
            .vacuum()
            .mode_action(&crate::vacuum::ModeOp::new(th, -1), &VermaState::vacuum())
            .unwrap();
        assert!(c.project_by_recursion(&s).unwrap().is_zero());
    }

    #[test]
    fn projab_sign_of_central_term() {
        let c = ctx(1);
        let a = e_minus(3, 1, 2);
        let b = LieElt::e(3, 2, 1);
        let s = c.pair_state(&a, &b).unwrap();
        assert_eq!(
            c.project_by_recursion(&s).unwrap(),
            c.projab_closed_form(&a, &b).unwrap()
        );
        // The constant term is +k/8 ⟨a,b⟩ = (-3/2)(1/8)(1/2).
        let k = c.projab_closed_form(&a, &b).unwrap();
        assert_eq!(k.terms()[&PbwMonomial::unit()], rat(-3, 32));
    }

    #[test]
    fn rank_one_image_and_v1() {
        let c = ctx(1);
        let img = c.zhu_singular_image().unwrap();
        assert_eq!(img, c.zhu_image_closed_form().unwrap());
        let x = e_plus(3, 1, 2).scale(&int(2));
        let expected = c.envelope().product(&[x.clone(), x]).unwrap().scale(&rat(1, 4));
        assert_eq!(img, expected);
        assert_eq!(c.compute_v1().unwrap(), c.v1_closed_form().unwrap());
    }

    #[test]
    fn rank_one_polynomial() {
        let c = ctx(1);
        let p = c.lowered_polynomials().unwrap();
        let x = CartanPoly::var(1, 0);
        let quarter = x.mul(&x.sub(&CartanPoly::constant(1, int(1)))).scale(&rat(1, 4));
        assert_eq!(p, vec![quarter.clone()]);
        assert_eq!(expected_polynomials(1).unwrap(), vec![quarter]);
        assert_ne!(expected_polynomials_plus_half(1).unwrap(), p);
    }

    #[test]
    fn rank_two_polynomials_and_r0() {
        let c = ctx(2);
        let p = c.lowered_polynomials().unwrap();
        assert_eq!(p, expected_polynomials(2).unwrap());
        let r = c.r_basis().unwrap();
        assert_eq!(r.len(), 2 * 7);
        let r0 = c.r0_basis().unwrap();
        assert_eq!(r0.len(), 2);
        let polys: Vec<CartanPoly> = r0.iter().map(|u| c.envelope().cartan_polynomial(u).unwrap()).collect();
        assert!(same_span(&polys, &p));
    }

    #[test]
    fn expected_polynomial_bounds() {
        assert!(expected_polynomial(2, 0, &half()).is_err());
        assert!(expected_polynomial(2, 3, &half()).is_err());
    }
}
