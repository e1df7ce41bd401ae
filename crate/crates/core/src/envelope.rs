//! PBW calculus in `U(g⁰)`: straightening to normal form, products, the
//! adjoint `_L` action and extraction of the Cartan polynomial of a
//! weight-zero element.
//!
//! Monomials are nondecreasing words over the ordered basis of
//! [`G0Basis`], whose order puts the negative part first and the positive part
//! last. A normal-ordered weight-zero monomial that is not purely Cartan
//! therefore always ends in a positive factor, i.e. lies in `U(g⁰)n₊⁰`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::{BasisKind, G0Basis, LieElt};
use crate::linalg::{add_entry, SparseVec};
use crate::scalar::{fmt_scalar, int, Scalar};

/// Nondecreasing word of basis indices; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial(Vec<u16>);

impl PbwMonomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    /// Sorts the factors. Only meaningful for commuting factors.
    pub fn from_sorted(mut factors: Vec<u16>) -> Self {
        factors.sort_unstable();
        Self(factors)
    }

    pub fn factors(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// Element of `U(g⁰)` in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UEAElt {
    terms: SparseVec<PbwMonomial>,
}

impl UEAElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut u = Self::zero();
        add_entry(&mut u.terms, PbwMonomial::unit(), c);
        u
    }

    pub fn terms(&self) -> &SparseVec<PbwMonomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &UEAElt) {
        crate::linalg::add_scaled(&mut self.terms, c, &other.terms);
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn add(&self, other: &UEAElt) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &UEAElt) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }
}

/// Order in which descents are resolved while straightening. Every schedule
/// yields the same normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SwapSchedule {
    #[default]
    Leftmost,
    Rightmost,
}

/// Polynomial in the commuting Cartan variables `x_1, …, x_l` standing for
/// `(h_1, …, h_{l-1}, h̄_l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPoly {
    nvars: usize,
    terms: SparseVec<Vec<u32>>,
}

/// `x_v · (Σ coeffs_i x_i + constant)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableTimesAffine {
    pub var: usize,
    pub coeffs: Vec<Scalar>,
    pub constant: Scalar,
}

impl CartanPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: SparseVec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        add_entry(&mut p.terms, vec![0; nvars], c);
        p
    }

    /// The variable `x_k`, 0-based.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &SparseVec<Vec<u32>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        crate::linalg::add_scaled(&mut out.terms, &Scalar::one(), &o.terms);
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        crate::linalg::add_scaled(&mut out.terms, &-Scalar::one(), &o.terms);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.nvars);
        crate::linalg::add_scaled(&mut out.terms, c, &self.terms);
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                add_entry(&mut out.terms, e, x * y);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                got: self.nvars,
                expected: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e) {
                for _ in 0..*k {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_l = 2·y_l`, i.e. rewrites in the unnormalized variables
    /// `(h_1, …, h_l)` where `h_l = ½ h̄_l`.
    pub fn to_unnormalized(&self) -> Self {
        let last = self.nvars - 1;
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let f = (0..e[last]).fold(c.clone(), |acc, _| acc * int(2));
            add_entry(&mut out.terms, e.clone(), f);
        }
        out
    }

    /// Recognizes `x_v · (affine form)`, choosing the smallest such `v`.
    pub fn as_variable_times_affine(&self) -> Option<VariableTimesAffine> {
        if self.is_zero() {
            return None;
        }
        'vars: for v in 0..self.nvars {
            let mut coeffs = vec![Scalar::zero(); self.nvars];
            let mut constant = Scalar::zero();
            for (e, c) in &self.terms {
                if e[v] == 0 {
                    continue 'vars;
                }
                let mut rest = e.clone();
                rest[v] -= 1;
                match rest.iter().sum::<u32>() {
                    0 => constant = c.clone(),
                    1 => coeffs[rest.iter().position(|&k| k == 1).expect("degree one")] = c.clone(),
                    _ => continue 'vars,
                }
            }
            return Some(VariableTimesAffine {
                var: v,
                coeffs,
                constant,
            });
        }
        None
    }

    /// Renders with variable names supplied by `name`.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        // Highest total degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            push_sign(&mut out, idx == 0, neg);
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(v, k)| if *k == 1 { name(v) } else { format!("{}^{}", name(v), k) })
                .collect();
            if vars.is_empty() {
                out.push_str(&fmt_scalar(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&fmt_scalar(&mag));
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

fn push_sign(out: &mut String, first: bool, neg: bool) {
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

impl fmt::Display for CartanPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.nvars;
        write!(
            f,
            "{}",
            self.render(|v| if v + 1 == l {
                format!("hb{l}")
            } else {
                format!("h{}", v + 1)
            })
        )
    }
}

/// `U(g⁰)` with its PBW basis.
#[derive(Clone, Debug)]
pub struct Envelope {
    basis: G0Basis,
}

impl Envelope {
    pub fn new(basis: G0Basis) -> Self {
        Self { basis }
    }

    pub fn for_rank(l: usize) -> Result<Self> {
        Ok(Self::new(crate::liealg::g0_basis(l)?))
    }

    pub fn basis(&self) -> &G0Basis {
        &self.basis
    }

    pub fn l(&self) -> usize {
        self.basis.l
    }

    /// Degree-one element for a `g⁰` Lie element.
    pub fn embed(&self, x: &LieElt) -> Result<UEAElt> {
        let mut u = UEAElt::zero();
        for (k, c) in self.basis.coords(x)? {
            add_entry(&mut u.terms, PbwMonomial(vec![k as u16]), c);
        }
        Ok(u)
    }

    pub fn generator(&self, k: usize) -> UEAElt {
        let mut u = UEAElt::zero();
        u.terms.insert(PbwMonomial(vec![k as u16]), Scalar::one());
        u
    }

    pub fn normal_form(&self, word: &[u16], coeff: &Scalar) -> UEAElt {
        self.normal_form_with(word, coeff, SwapSchedule::default())
    }

    /// Straightens an arbitrary word with `xy = yx + [x, y]`. Pending words
    /// are processed by decreasing (length, inversions), so each word is
    /// rewritten once and all cancellations happen before it is expanded.
    pub fn normal_form_with(&self, word: &[u16], coeff: &Scalar, schedule: SwapSchedule) -> UEAElt {
        let mut pending: BTreeMap<(usize, usize, Vec<u16>), Scalar> = BTreeMap::new();
        let key = |w: Vec<u16>| (w.len(), inversions(&w), w);
        if !coeff.is_zero() {
            pending.insert(key(word.to_vec()), coeff.clone());
        }
        let mut out = UEAElt::zero();
        while let Some(((_, _, w), c)) = pending.pop_last() {
            let descent = match schedule {
                SwapSchedule::Leftmost => (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]),
                SwapSchedule::Rightmost => (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] > w[i + 1]),
            };
            let Some(i) = descent else {
                add_entry(&mut out.terms, PbwMonomial(w), c);
                continue;
            };
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            add_entry(&mut pending, key(swapped), c.clone());
            for (k, b) in &self.basis.bracket[w[i] as usize][w[i + 1] as usize] {
                let mut shorter = Vec::with_capacity(w.len() - 1);
                shorter.extend_from_slice(&w[..i]);
                shorter.push(*k as u16);
                shorter.extend_from_slice(&w[i + 2..]);
                add_entry(&mut pending, key(shorter), &c * b);
            }
        }
        out
    }

    /// Normal form of a linear combination of arbitrary words.
    pub fn normalize_sum(&self, words: impl IntoIterator<Item = (Vec<u16>, Scalar)>) -> UEAElt {
        let mut out = UEAElt::zero();
        for (w, c) in words {
            out.add_scaled(&Scalar::one(), &self.normal_form(&w, &c));
        }
        out
    }

    pub fn mul(&self, u: &UEAElt, v: &UEAElt) -> UEAElt {
        let mut out = UEAElt::zero();
        for (a, x) in &u.terms {
            for (b, y) in &v.terms {
                let mut w = a.0.clone();
                w.extend_from_slice(&b.0);
                out.add_scaled(&Scalar::one(), &self.normal_form(&w, &(x * y)));
            }
        }
        out
    }

    /// Product of a sequence of `g⁰` elements, left to right.
    pub fn product(&self, factors: &[LieElt]) -> Result<UEAElt> {
        let mut acc = UEAElt::one();
        for x in factors {
            acc = self.mul(&acc, &self.embed(x)?);
        }
        Ok(acc)
    }

    fn ad_basis_words(&self, k: usize, u: &UEAElt, out: &mut Vec<(Vec<u16>, Scalar)>) {
        for (m, c) in &u.terms {
            let w = &m.0;
            for p in 0..w.len() {
                for (j, b) in &self.basis.bracket[k][w[p] as usize] {
                    let mut nw = w.clone();
                    nw[p] = *j as u16;
                    out.push((nw, c * b));
                }
            }
        }
    }

    /// `x_L u = [x, u]` for a basis element `x`.
    pub fn ad_basis(&self, k: usize, u: &UEAElt) -> UEAElt {
        let mut words = Vec::new();
        self.ad_basis_words(k, u, &mut words);
        self.normalize_sum(words)
    }

    /// `x_L u = [x, u]` for `x ∈ g⁰`.
    pub fn ad_l(&self, x: &LieElt, u: &UEAElt) -> Result<UEAElt> {
        let mut words = Vec::new();
        for (k, c) in self.basis.coords(x)? {
            let start = words.len();
            self.ad_basis_words(k, u, &mut words);
            for (_, w) in &mut words[start..] {
                *w *= &c;
            }
        }
        Ok(self.normalize_sum(words))
    }

    /// `h⁰`-weight of a monomial, in ε-coordinates.
    pub fn monomial_weight(&self, m: &PbwMonomial) -> Vec<Scalar> {
        let mut w = vec![Scalar::zero(); self.l()];
        for &k in &m.0 {
            for (a, b) in w.iter_mut().zip(&self.basis.weights[k as usize]) {
                *a += b;
            }
        }
        w
    }

    /// Common weight of all monomials, or `None` for inhomogeneous input.
    pub fn weight(&self, u: &UEAElt) -> Option<Vec<Scalar>> {
        let mut ws = u.terms.keys().map(|m| self.monomial_weight(m));
        let first = ws.next().unwrap_or_else(|| vec![Scalar::zero(); self.l()]);
        ws.all(|w| w == first).then_some(first)
    }

    pub fn is_weight_zero(&self, u: &UEAElt) -> bool {
        let cs = self.basis.cartan_start();
        (cs..cs + self.l()).all(|k| self.ad_basis(k, u).is_zero())
    }

    /// Splits a weight-zero `u` into its pure Cartan part and a remainder in
    /// `U(g⁰)n₊⁰`.
    pub fn cartan_split(&self, u: &UEAElt) -> Result<(UEAElt, UEAElt)> {
        if !self.is_weight_zero(u) {
            return Err(Error::NotWeightZero);
        }
        let mut cartan = UEAElt::zero();
        let mut rest = UEAElt::zero();
        for (m, c) in &u.terms {
            let kinds: Vec<BasisKind> = m.0.iter().map(|&k| self.basis.kinds[k as usize]).collect();
            if kinds.iter().all(|k| *k == BasisKind::Cartan) {
                cartan.terms.insert(m.clone(), c.clone());
            } else if kinds.last() == Some(&BasisKind::Positive) {
                rest.terms.insert(m.clone(), c.clone());
            } else {
                return Err(Error::Inconsistent(format!(
                    "weight-zero monomial {} has no trailing positive factor",
                    self.render_monomial(m)
                )));
            }
        }
        Ok((cartan, rest))
    }

    /// Image of a weight-zero element in `S(h⁰)`: the polynomial `p` with
    /// `u v_λ = p(λ) v_λ` on any highest-weight vector.
    pub fn cartan_polynomial(&self, u: &UEAElt) -> Result<CartanPoly> {
        let (cartan, _) = self.cartan_split(u)?;
        let l = self.l();
        let cs = self.basis.cartan_start();
        let mut p = CartanPoly::zero(l);
        for (m, c) in &cartan.terms {
            let mut e = vec![0u32; l];
            for &k in &m.0 {
                e[k as usize - cs] += 1;
            }
            add_entry(&mut p.terms, e, c.clone());
        }
        Ok(p)
    }

    /// Element of `U(h⁰)` for a Cartan polynomial.
    pub fn from_cartan_polynomial(&self, p: &CartanPoly) -> UEAElt {
        let cs = self.basis.cartan_start() as u16;
        let mut u = UEAElt::zero();
        for (e, c) in &p.terms {
            let mut w = Vec::new();
            for (v, k) in e.iter().enumerate() {
                w.extend(std::iter::repeat_n(cs + v as u16, *k as usize));
            }
            add_entry(&mut u.terms, PbwMonomial(w), c.clone());
        }
        u
    }

    pub fn render_monomial(&self, m: &PbwMonomial) -> String {
        if m.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < m.0.len() {
            let k = m.0[i];
            let run = m.0[i..].iter().take_while(|&&x| x == k).count();
            let label = &self.basis.labels[k as usize];
            parts.push(if run == 1 {
                label.clone()
            } else {
                format!("{label}^{run}")
            });
            i += run;
        }
        parts.join("*")
    }

    /// Plain-text rendering: `c*X*Y + …` in PBW order.
    pub fn render(&self, u: &UEAElt) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in u.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            push_sign(&mut out, idx == 0, neg);
            if m.0.is_empty() {
                out.push_str(&fmt_scalar(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&fmt_scalar(&mag));
                    out.push('*');
                }
                out.push_str(&self.render_monomial(m));
            }
        }
        out
    }
}

fn inversions(w: &[u16]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}
