//! The level-`k` vacuum module `V(g, k)` of the affinization of `sl(2l+1)`:
//! normal-ordered states, mode actions, the lift of `ν`, and the singular
//! vector at `k = -l-½`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::{eps_of_index, g0_basis, LieElt, SlBasis};
use crate::linalg::{add_entry, add_scaled, Echelon, SparseVec};
use crate::scalar::{fmt_scalar, int, rat, Scalar};

/// States deeper than this are rejected.
pub const DEPTH_CAP: u32 = 8;

/// `a₁(-n₁)⋯a_m(-n_m)𝟙` as `(sl basis index, depth)` pairs, sorted by depth
/// descending, then basis index ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ModeMonomial(Vec<(u16, u32)>);

impl ModeMonomial {
    pub fn vacuum() -> Self {
        Self(Vec::new())
    }

    /// Wraps factors that are already in canonical order.
    pub fn from_sorted_factors(factors: Vec<(u16, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| key(w[0].0, w[0].1) <= key(w[1].0, w[1].1)));
        Self(factors)
    }

    pub fn factors(&self) -> &[(u16, u32)] {
        &self.0
    }

    /// Conformal depth `Σ n_i`.
    pub fn depth(&self) -> u32 {
        self.0.iter().map(|(_, d)| d).sum()
    }
}

fn key(x: u16, depth: u32) -> (std::cmp::Reverse<u32>, u16) {
    (std::cmp::Reverse(depth), x)
}

/// Finite linear combination of normal-ordered mode monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VermaState {
    terms: SparseVec<ModeMonomial>,
}

impl VermaState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        let mut s = Self::zero();
        s.terms.insert(ModeMonomial::vacuum(), Scalar::one());
        s
    }

    pub fn from_terms(terms: SparseVec<ModeMonomial>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &SparseVec<ModeMonomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn depth(&self) -> u32 {
        self.terms.keys().map(ModeMonomial::depth).max().unwrap_or(0)
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &VermaState) {
        add_scaled(&mut self.terms, c, &other.terms);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), o);
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), o);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }
}

/// `x(n)` for a Lie element `x` of `sl(2l+1)` and an integer mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeOp {
    pub elt: LieElt,
    pub mode: i64,
}

impl ModeOp {
    pub fn new(elt: LieElt, mode: i64) -> Self {
        Self { elt, mode }
    }
}

/// `V(g, k)` for `g = sl(2l+1)`.
#[derive(Clone, Debug)]
pub struct VacuumModule {
    basis: SlBasis,
    level: Scalar,
}

impl VacuumModule {
    pub fn new(l: usize, level: Scalar) -> Result<Self> {
        Ok(Self {
            basis: crate::liealg::sl_basis(l)?,
            level,
        })
    }

    /// The module at level `-l-½`.
    pub fn at_problem_level(l: usize) -> Result<Self> {
        Self::new(l, problem_level(l))
    }

    pub fn l(&self) -> usize {
        self.basis.l
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn level(&self) -> &Scalar {
        &self.level
    }

    pub fn basis(&self) -> &SlBasis {
        &self.basis
    }

    /// Single-term state `x(-depth)𝟙` for a basis index.
    pub fn basis_state(&self, x: usize, depth: u32) -> VermaState {
        let mut s = VermaState::zero();
        s.terms.insert(ModeMonomial(vec![(x as u16, depth)]), Scalar::one());
        s
    }

    fn create(&self, x: u16, p: u32, m: &[(u16, u32)], c: &Scalar, out: &mut SparseVec<ModeMonomial>) {
        if c.is_zero() {
            return;
        }
        match m.first() {
            Some(&(a, d)) if key(x, p) > key(a, d) => {
                let rest = &m[1..];
                let mut inner = SparseVec::new();
                self.create(x, p, rest, c, &mut inner);
                for (w, cw) in inner {
                    self.create(a, d, &w.0, &cw, out);
                }
                for (y, b) in &self.basis.bracket[x as usize][a as usize] {
                    self.create(*y as u16, p + d, rest, &(c * b), out);
                }
            }
            _ => {
                let mut w = Vec::with_capacity(m.len() + 1);
                w.push((x, p));
                w.extend_from_slice(m);
                add_entry(out, ModeMonomial(w), c.clone());
            }
        }
    }

    fn annihilate(&self, x: u16, n: u32, m: &[(u16, u32)], c: &Scalar, out: &mut SparseVec<ModeMonomial>) {
        let Some(&(a, d)) = m.first() else { return };
        if c.is_zero() {
            return;
        }
        let rest = &m[1..];
        let mut inner = SparseVec::new();
        self.annihilate(x, n, rest, c, &mut inner);
        for (w, cw) in inner {
            self.create(a, d, &w.0, &cw, out);
        }
        for (y, b) in &self.basis.bracket[x as usize][a as usize] {
            let cb = c * b;
            if n >= d {
                self.annihilate(*y as u16, n - d, rest, &cb, out);
            } else {
                self.create(*y as u16, d - n, rest, &cb, out);
            }
        }
        if n == d {
            let central = c * int(n as i64) * &self.basis.form[x as usize][a as usize] * &self.level;
            add_entry(out, ModeMonomial(rest.to_vec()), central);
        }
    }

    /// `x(n)` on a state for a basis index `x`.
    pub fn basis_mode_action(&self, x: usize, n: i64, s: &VermaState) -> Result<VermaState> {
        check_depth(s.depth())?;
        let mut out = SparseVec::new();
        for (m, c) in &s.terms {
            if n < 0 {
                self.create(x as u16, (-n) as u32, &m.0, c, &mut out);
            } else {
                self.annihilate(x as u16, n as u32, &m.0, c, &mut out);
            }
        }
        let out = VermaState { terms: out };
        check_depth(out.depth())?;
        Ok(out)
    }

    pub fn mode_action(&self, op: &ModeOp, s: &VermaState) -> Result<VermaState> {
        let mut out = VermaState::zero();
        for (k, c) in self.basis.coords(&op.elt)? {
            out.add_scaled(&c, &self.basis_mode_action(k, op.mode, s)?);
        }
        Ok(out)
    }

    /// Applies `x_1(n_1) ⋯ x_r(n_r)` with the rightmost operator first.
    pub fn apply_word(&self, ops: &[ModeOp], s: &VermaState) -> Result<VermaState> {
        let mut acc = s.clone();
        for op in ops.iter().rev() {
            acc = self.mode_action(op, &acc)?;
        }
        Ok(acc)
    }

    /// Builds `a₁(-n₁)⋯a_m(-n_m)𝟙` from arbitrary (unsorted) factors.
    pub fn state_from_factors(&self, factors: &[(usize, u32)]) -> Result<VermaState> {
        let mut acc = VermaState::vacuum();
        for &(x, d) in factors.iter().rev() {
            acc = self.basis_mode_action(x, -(d as i64), &acc)?;
        }
        Ok(acc)
    }

    /// The lift of `ν`: `ν(a₁(-n₁)⋯𝟙) = ν(a₁)(-n₁)⋯𝟙`.
    pub fn nu_state(&self, s: &VermaState) -> Result<VermaState> {
        let mut out = VermaState::zero();
        for (m, c) in &s.terms {
            let mut acc = VermaState::vacuum().scale(c);
            for &(x, d) in m.0.iter().rev() {
                let (y, sign) = &self.basis.nu_image[x as usize];
                acc = self.basis_mode_action(*y, -(d as i64), &acc)?.scale(sign);
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        Ok(out)
    }

    /// `gl`-weight of a monomial.
    pub fn monomial_gl_weight(&self, m: &ModeMonomial) -> Vec<i64> {
        let mut w = vec![0; self.n()];
        for &(x, _) in &m.0 {
            for (a, b) in w.iter_mut().zip(&self.basis.gl_weights[x as usize]) {
                *a += b;
            }
        }
        w
    }

    /// Common `g`-weight as values on `H_1, …, H_{2l}`, or `None` if the state
    /// is not a weight vector.
    pub fn g_weight(&self, s: &VermaState) -> Option<Vec<i64>> {
        let mut ws = s.terms.keys().map(|m| SlBasis::h_values(&self.monomial_gl_weight(m)));
        let first = ws.next().unwrap_or_else(|| vec![0; self.n() - 1]);
        ws.all(|w| w == first).then_some(first)
    }

    /// `h⁰`-weight of a monomial in ε-coordinates.
    pub fn monomial_h0_weight(&self, m: &ModeMonomial) -> Vec<Scalar> {
        let l = self.l();
        let mut out = vec![Scalar::zero(); l];
        for (i, wi) in self.monomial_gl_weight(m).iter().enumerate() {
            if *wi != 0 {
                for (o, e) in out.iter_mut().zip(eps_of_index(l, i + 1)) {
                    *o += e * int(*wi);
                }
            }
        }
        out
    }

    /// The `2l+1` operators `E_{i,i+1}(0)` and `E_{2l+1,1}(1)`.
    pub fn singular_generators(&self) -> Vec<ModeOp> {
        let n = self.n();
        let mut ops: Vec<ModeOp> = (1..n).map(|i| ModeOp::new(LieElt::e(n, i, i + 1), 0)).collect();
        ops.push(ModeOp::new(LieElt::e(n, n, 1), 1));
        ops
    }

    pub fn check_singular(&self, s: &VermaState) -> Result<bool> {
        for op in self.singular_generators() {
            if !self.mode_action(&op, s)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every `x(n)` with `x` in the basis of `g` and `n ∈ modes` kills `s`.
    pub fn check_killed_by_modes(&self, s: &VermaState, modes: &[i64]) -> Result<bool> {
        for &n in modes {
            for x in 0..self.basis.dim() {
                if !self.basis_mode_action(x, n, s)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Spanning set of `U(g⁰)·v` under the zero modes of `g⁰`, as an echelon
    /// basis.
    pub fn zero_mode_orbit(&self, v: &VermaState) -> Result<Vec<VermaState>> {
        let g0 = g0_basis(self.l())?;
        let mut ech: Echelon<ModeMonomial> = Echelon::new();
        let mut queue = vec![v.clone()];
        let mut found = Vec::new();
        while let Some(s) = queue.pop() {
            if !ech.insert(&s.terms) {
                continue;
            }
            found.push(s.clone());
            for x in &g0.elems {
                queue.push(self.mode_action(&ModeOp::new(x.clone(), 0), &s)?);
            }
        }
        Ok(found)
    }

    /// Dimension of the `h⁰`-weight-zero part of the span of an `h⁰`-stable
    /// family of states.
    pub fn h0_weight_zero_dim(&self, states: &[VermaState]) -> usize {
        let zero = vec![Scalar::zero(); self.l()];
        let mut ech = Echelon::new();
        for s in states {
            let part: SparseVec<ModeMonomial> = s
                .terms
                .iter()
                .filter(|(m, _)| self.monomial_h0_weight(m) == zero)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            ech.insert(&part);
        }
        ech.rank()
    }

    pub fn render_monomial(&self, m: &ModeMonomial) -> String {
        let mut out = String::new();
        for &(x, d) in &m.0 {
            out.push_str(&format!("{}(-{})", self.basis.labels[x as usize], d));
        }
        out.push_str("|0>");
        out
    }

    pub fn render(&self, s: &VermaState) -> String {
        if s.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in s.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (idx == 0, neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&fmt_scalar(&mag));
                out.push('*');
            }
            out.push_str(&self.render_monomial(m));
        }
        out
    }

    /// Peršе's vector at level `-l-½`:
    /// `Σ_i (2l-2i+1)/(2l+1) E_θ(-1)H_i(-1)𝟙 + Σ_i E_{1,i+1}(-1)E_{i+1,2l+1}(-1)𝟙 - ½(2l-1)E_θ(-2)𝟙`.
    pub fn perse_vector(&self) -> Result<VermaState> {
        let l = self.l() as i64;
        let n = self.n();
        let b = &self.basis;
        let theta = b.index_of_pair(1, n).expect("E_θ in basis");
        let mut v = VermaState::zero();
        for i in 1..n {
            let c = rat(2 * l - 2 * i as i64 + 1, 2 * l + 1);
            v.add_scaled(&c, &self.state_from_factors(&[(theta, 1), (b.index_of_h(i), 1)])?);
        }
        for i in 1..n - 1 {
            let a = b.index_of_pair(1, i + 1).expect("basis");
            let c = b.index_of_pair(i + 1, n).expect("basis");
            v.add_scaled(&Scalar::one(), &self.state_from_factors(&[(a, 1), (c, 1)])?);
        }
        v.add_scaled(&rat(-(2 * l - 1), 2), &self.basis_state(theta, 2));
        Ok(v)
    }
}

impl fmt::Display for ModeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, d) in &self.0 {
            write!(f, "b{x}(-{d})")?;
        }
        write!(f, "|0>")
    }
}

fn check_depth(depth: u32) -> Result<()> {
    if depth > DEPTH_CAP {
        return Err(Error::DepthCap { depth, cap: DEPTH_CAP });
    }
    Ok(())
}

/// `k = -l-½`.
pub fn problem_level(l: usize) -> Scalar {
    rat(-(2 * l as i64 + 1), 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(l: usize) -> VacuumModule {
        VacuumModule::at_problem_level(l).unwrap()
    }

    #[test]
    fn zero_modes_kill_vacuum() {
        let v = module(1);
        for x in 0..v.basis().dim() {
            assert!(v.basis_mode_action(x, 0, &VermaState::vacuum()).unwrap().is_zero());
            assert!(v.basis_mode_action(x, 3, &VermaState::vacuum()).unwrap().is_zero());
        }
    }

    #[test]
    fn creation_on_vacuum_is_one_term() {
        let v = module(1);
        let s = v
            .mode_action(&ModeOp::new(LieElt::e(3, 1, 2), -1), &VermaState::vacuum())
            .unwrap();
        assert_eq!(v.render(&s), "E[1,2](-1)|0>");
    }

    #[test]
    fn single_commutator_with_central_term() {
        let v = module(1);
        let s = v
            .mode_action(&ModeOp::new(LieElt::e(3, 1, 3), -1), &VermaState::vacuum())
            .unwrap();
        let t = v.mode_action(&ModeOp::new(LieElt::e(3, 3, 1), 1), &s).unwrap();
        assert_eq!(t, VermaState::vacuum().scale(&rat(-3, 2)));
    }

    #[test]
    fn creation_reorders_through_bracket() {
        let v = module(1);
        let b = v.basis();
        let (e12, e23) = (b.index_of_pair(1, 2).unwrap(), b.index_of_pair(2, 3).unwrap());
        // E23(-1)E12(-1)|0> = E12(-1)E23(-1)|0> - E13(-2)|0>
        let lhs = v.state_from_factors(&[(e23, 1), (e12, 1)]).unwrap();
        let rhs = v
            .state_from_factors(&[(e12, 1), (e23, 1)])
            .unwrap()
            .sub(&v.basis_state(b.index_of_pair(1, 3).unwrap(), 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nu_on_simple_states() {
        let v = module(1);
        assert_eq!(v.nu_state(&VermaState::vacuum()).unwrap(), VermaState::vacuum());
        let th = v.basis_state(v.basis().index_of_pair(1, 3).unwrap(), 1);
        assert_eq!(v.nu_state(&th).unwrap(), th.scale(&int(-1)));
    }

    #[test]
    fn perse_vector_at_rank_one() {
        let v = module(1);
        let p = v.perse_vector().unwrap();
        assert_eq!(
            v.render(&p),
            "1/3*H[1](-1)E[1,3](-1)|0> - 1/3*H[2](-1)E[1,3](-1)|0> + E[1,2](-1)E[2,3](-1)|0> - 1/2*E[1,3](-2)|0>"
        );
        assert_eq!(v.g_weight(&p), Some(vec![1, 1]));
        assert!(p.terms().keys().all(|m| m.depth() == 2));
    }

    #[test]
    fn singularity_low_rank() {
        for l in 1..=2 {
            let v = module(l);
            let p = v.perse_vector().unwrap();
            assert!(v.check_singular(&p).unwrap());
            assert!(v.check_killed_by_modes(&p, &[1, 2]).unwrap());
            assert_eq!(v.nu_state(&p).unwrap(), p);
        }
    }

    #[test]
    fn non_singular_example() {
        let v = module(1);
        let s = v.basis_state(v.basis().index_of_pair(1, 2).unwrap(), 1);
        assert!(!v.check_singular(&s).unwrap());
    }

    #[test]
    fn wrong_level_breaks_singularity() {
        let v = VacuumModule::new(1, rat(-1, 2)).unwrap();
        let p = v.perse_vector().unwrap();
        assert!(!v.check_singular(&p).unwrap());
    }

    #[test]
    fn depth_cap_enforced() {
        let v = module(1);
        let s = v.basis_state(0, 8);
        assert!(matches!(
            v.basis_mode_action(0, -1, &s),
            Err(Error::DepthCap { depth: 9, .. })
        ));
    }

    #[test]
    fn orbit_dimensions() {
        let v = module(1);
        let orbit = v.zero_mode_orbit(&v.perse_vector().unwrap()).unwrap();
        assert_eq!(orbit.len(), 5);
        assert_eq!(v.h0_weight_zero_dim(&orbit), 1);
    }
}
