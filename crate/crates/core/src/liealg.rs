//! gl/sl(2l+1) in the elementary-matrix basis, the diagram involution `ν`,
//! its eigenspace split, and the type `B_l` fixed-point subalgebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{fmt_scalar, half, int, QuadScalar, Scalar};

/// Coefficient ring for Lie algebra elements.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// Sparse `n × n` matrix, `n = 2l + 1`, in the elementary basis `E_{i,j}`.
/// Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElt<C = Scalar> {
    n: usize,
    terms: BTreeMap<(usize, usize), C>,
}

impl<C: Coeff> LieElt<C> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(n: usize, i: usize, j: usize, c: C) -> Self {
        assert!(
            (1..=n).contains(&i) && (1..=n).contains(&j),
            "index ({i},{j}) out of range for n = {n}"
        );
        let mut x = Self::zero(n);
        x.add_term(i, j, c);
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), C> {
        &self.terms
    }

    pub fn coeff(&self, i: usize, j: usize) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (&(i, j), x) in &self.terms {
            out.add_term(i, j, x.clone() * c.clone());
        }
        out
    }

    pub fn trace(&self) -> C {
        self.terms
            .iter()
            .filter(|((i, j), _)| i == j)
            .fold(C::zero(), |acc, (_, x)| acc + x.clone())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Matrix commutator `ab - ba`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (&(i, j), a) in &self.terms {
            for (&(k, m), b) in &other.terms {
                if j == k {
                    out.add_term(i, m, a.clone() * b.clone());
                }
                if m == i {
                    out.add_term(k, j, -(a.clone() * b.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Trace form `tr(ab)`.
    pub fn invariant_form(&self, other: &Self) -> Result<C> {
        self.check_same(other)?;
        let mut acc = C::zero();
        for (&(i, j), a) in &self.terms {
            if let Some(b) = other.terms.get(&(j, i)) {
                acc = acc + a.clone() * b.clone();
            }
        }
        Ok(acc)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LieElt<D> {
        let mut out = LieElt::zero(self.n);
        for (&(i, j), x) in &self.terms {
            out.add_term(i, j, f(x));
        }
        out
    }
}

impl LieElt {
    /// Elementary matrix `E_{i,j}`.
    pub fn e(n: usize, i: usize, j: usize) -> Self {
        Self::single(n, i, j, Scalar::one())
    }

    /// `H_i = E_{i,i} - E_{i+1,i+1}`.
    pub fn h(n: usize, i: usize) -> Self {
        Self::e(n, i, i) - Self::e(n, i + 1, i + 1)
    }
}

impl<C: Coeff> Add for LieElt<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        assert_eq!(self.n, o.n, "size mismatch in addition");
        for ((i, j), x) in o.terms {
            self.add_term(i, j, x);
        }
        self
    }
}

impl<C: Coeff> Sub for LieElt<C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<C: Coeff> Neg for LieElt<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-C::one())
    }
}

impl Mul<LieElt> for Scalar {
    type Output = LieElt;
    fn mul(self, x: LieElt) -> LieElt {
        x.scale(&self)
    }
}

impl fmt::Display for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}*", fmt_scalar(&mag))?;
            }
            write!(f, "E[{i},{j}]")?;
        }
        Ok(())
    }
}

/// Matrix size `2l + 1` for a rank `l ≥ 1`.
pub fn matrix_size(l: usize) -> Result<usize> {
    if l == 0 {
        return Err(Error::InvalidRank(l));
    }
    Ok(2 * l + 1)
}

fn rank_of_size(n: usize) -> Result<usize> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidRank(n.saturating_sub(1) / 2));
    }
    Ok((n - 1) / 2)
}

/// Image of the index pair `(i, j)` under `ν`, with its sign:
/// `ν(E_{i,j}) = -(-1)^{i-j} E_{n+1-j, n+1-i}`.
pub fn nu_pair(n: usize, i: usize, j: usize) -> (i64, usize, usize) {
    let s = if (i + j).is_multiple_of(2) { -1 } else { 1 };
    (s, n + 1 - j, n + 1 - i)
}

/// The involution `ν`. Requires odd `n ≥ 3`.
pub fn nu<C: Coeff>(a: &LieElt<C>) -> Result<LieElt<C>> {
    rank_of_size(a.n)?;
    let mut out = LieElt::zero(a.n);
    for (&(i, j), x) in &a.terms {
        let (s, p, q) = nu_pair(a.n, i, j);
        let x = if s < 0 { -x.clone() } else { x.clone() };
        out.add_term(p, q, x);
    }
    Ok(out)
}

/// Components of an element in the `±1` eigenspaces of `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPair {
    pub plus: LieElt,
    pub minus: LieElt,
}

pub fn split_pm(a: &LieElt) -> Result<GradedPair> {
    let na = nu(a)?;
    Ok(GradedPair {
        plus: (a.clone() + na.clone()).scale(&half()),
        minus: (a.clone() - na).scale(&half()),
    })
}

/// `E^+_{i,j} = ½(E_{i,j} + ν E_{i,j})`.
pub fn e_plus(n: usize, i: usize, j: usize) -> LieElt {
    let a = LieElt::e(n, i, j);
    (a.clone() + nu(&a).expect("odd size")).scale(&half())
}

/// `E^-_{i,j} = ½(E_{i,j} - ν E_{i,j})`.
pub fn e_minus(n: usize, i: usize, j: usize) -> LieElt {
    let a = LieElt::e(n, i, j);
    (a.clone() - nu(&a).expect("odd size")).scale(&half())
}

pub fn is_nu_fixed(a: &LieElt) -> Result<bool> {
    Ok(nu(a)? == *a)
}

/// Chevalley data of the fixed-point algebra `g⁰ ≅ so(2l+1)`.
///
/// Index `i` runs over `1..=l`; entry `i - 1` of each vector holds the `i`-th
/// generator. The last node is available both unnormalized (`e_l = E_l + E_{l+1}`)
/// and normalized (`ē_l = √2 e_l`, `h̄_l = 2 h_l`).
#[derive(Clone, Debug)]
pub struct BTypeGenerators {
    pub l: usize,
    /// `e_1, …, e_l` with `e_l` unnormalized.
    pub e: Vec<LieElt>,
    pub f: Vec<LieElt>,
    pub h: Vec<LieElt>,
    pub e_bar: LieElt<QuadScalar>,
    pub f_bar: LieElt<QuadScalar>,
    pub h_bar: LieElt,
}

impl BTypeGenerators {
    /// Normalized Chevalley triple at node `i` (1-based), over Q(√2).
    pub fn normalized(&self, i: usize) -> (LieElt<QuadScalar>, LieElt<QuadScalar>, LieElt<QuadScalar>) {
        let lift = |x: &LieElt| x.map_coeffs(|c| QuadScalar::from(c.clone()));
        if i == self.l {
            (self.e_bar.clone(), self.f_bar.clone(), lift(&self.h_bar))
        } else {
            (lift(&self.e[i - 1]), lift(&self.f[i - 1]), lift(&self.h[i - 1]))
        }
    }

    /// Cartan basis `(h_1, …, h_{l-1}, h̄_l)` of `h⁰`.
    pub fn cartan_basis(&self) -> Vec<LieElt> {
        let mut v: Vec<LieElt> = self.h[..self.l - 1].to_vec();
        v.push(self.h_bar.clone());
        v
    }

    /// The matrix `(α_j(h_i))` read off from `[h_i, e_j] = α_j(h_i) e_j` with
    /// the normalized generators.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<Scalar>>> {
        let l = self.l;
        let mut out = vec![vec![Scalar::zero(); l]; l];
        for i in 1..=l {
            let (_, _, hi) = self.normalized(i);
            for j in 1..=l {
                let (ej, _, _) = self.normalized(j);
                let br = hi.bracket(&ej)?;
                let ((p, q), lead) = ej.terms().iter().next().expect("nonzero generator");
                let ratio = br.coeff(*p, *q) * lead.inverse().expect("nonzero");
                if br != ej.scale(&ratio) {
                    return Err(Error::Inconsistent(format!("e_{j} is not an ad(h_{i}) eigenvector")));
                }
                out[i - 1][j - 1] = ratio
                    .to_rational()
                    .ok_or_else(|| Error::Inconsistent("irrational Cartan entry".into()))?;
            }
        }
        Ok(out)
    }
}

pub fn b_type_generators(l: usize) -> Result<BTypeGenerators> {
    let n = matrix_size(l)?;
    let big_e = |i: usize| LieElt::e(n, i, i + 1);
    let big_f = |i: usize| LieElt::e(n, i + 1, i);
    let big_h = |i: usize| LieElt::h(n, i);
    let mut e = Vec::with_capacity(l);
    let mut f = Vec::with_capacity(l);
    let mut h = Vec::with_capacity(l);
    for i in 1..l {
        e.push(big_e(i) + big_e(n - i));
        f.push(big_f(i) + big_f(n - i));
        h.push(big_h(i) + big_h(n - i));
    }
    e.push(big_e(l) + big_e(l + 1));
    f.push(big_f(l) + big_f(l + 1));
    h.push(big_h(l) + big_h(l + 1));
    let sqrt2 = QuadScalar::sqrt2();
    let lift = |x: &LieElt| x.map_coeffs(|c| QuadScalar::from(c.clone()) * sqrt2.clone());
    Ok(BTypeGenerators {
        l,
        e_bar: lift(&e[l - 1]),
        f_bar: lift(&f[l - 1]),
        h_bar: h[l - 1].scale(&int(2)),
        e,
        f,
        h,
    })
}

/// Sparse coordinates of a basis bracket, `[b_a, b_b] = Σ c_k b_k`.
pub type Structure = Vec<Vec<Vec<(usize, Scalar)>>>;

fn structure_table(
    elems: &[LieElt],
    coords: impl Fn(&LieElt) -> Result<Vec<(usize, Scalar)>>,
) -> Result<(Structure, Vec<Vec<Scalar>>)> {
    let d = elems.len();
    let mut br = vec![vec![Vec::new(); d]; d];
    let mut form = vec![vec![Scalar::zero(); d]; d];
    for a in 0..d {
        for b in 0..d {
            br[a][b] = coords(&elems[a].bracket(&elems[b])?)?;
            form[a][b] = elems[a].invariant_form(&elems[b])?;
        }
    }
    Ok((br, form))
}

/// Block of a `g⁰` basis element in the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    Negative,
    Cartan,
    Positive,
}

/// Ordered basis of `g⁰`: negative part, Cartan `(h_1, …, h_{l-1}, h̄_l)`,
/// positive part. Root vectors are `E^+_{i,j}` for the lexicographically
/// smaller pair of each `ν`-orbit.
#[derive(Clone, Debug)]
pub struct G0Basis {
    pub l: usize,
    pub elems: Vec<LieElt>,
    pub labels: Vec<String>,
    pub kinds: Vec<BasisKind>,
    /// Representative index pair of each root vector, `None` on the Cartan block.
    pub pairs: Vec<Option<(usize, usize)>>,
    /// `h⁰`-weight of each element in ε-coordinates.
    pub weights: Vec<Vec<Scalar>>,
    pub bracket: Structure,
    pub form: Vec<Vec<Scalar>>,
    pair_index: BTreeMap<(usize, usize), usize>,
}

/// ε-coordinates of the `h⁰`-weight carried by row/column `i`: `ε_i` for
/// `i ≤ l`, zero for the middle index, `-ε_{2l+2-i}` beyond.
pub fn eps_of_index(l: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); l];
    let n = 2 * l + 1;
    if i <= l {
        v[i - 1] = int(1);
    } else if i > l + 1 {
        v[n - i] = int(-1);
    }
    v
}

fn eps_diff(l: usize, i: usize, j: usize) -> Vec<Scalar> {
    eps_of_index(l, i)
        .into_iter()
        .zip(eps_of_index(l, j))
        .map(|(a, b)| a - b)
        .collect()
}

fn orbit_representatives(n: usize, upper: bool) -> Vec<(usize, usize)> {
    let mut reps = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j || (i < j) != upper || i + j == n + 1 {
                continue;
            }
            let (_, p, q) = nu_pair(n, i, j);
            if (i, j) <= (p, q) {
                reps.push((i, j));
            }
        }
    }
    reps
}

pub fn g0_basis(l: usize) -> Result<G0Basis> {
    let n = matrix_size(l)?;
    let gens = b_type_generators(l)?;
    let mut elems = Vec::new();
    let mut labels = Vec::new();
    let mut kinds = Vec::new();
    let mut pairs = Vec::new();
    let mut weights = Vec::new();
    for (i, j) in orbit_representatives(n, false) {
        elems.push(e_plus(n, i, j));
        labels.push(format!("E+[{i},{j}]"));
        kinds.push(BasisKind::Negative);
        pairs.push(Some((i, j)));
        weights.push(eps_diff(l, i, j));
    }
    for (k, h) in gens.cartan_basis().into_iter().enumerate() {
        elems.push(h);
        labels.push(if k + 1 == l {
            format!("hb{l}")
        } else {
            format!("h{}", k + 1)
        });
        kinds.push(BasisKind::Cartan);
        pairs.push(None);
        weights.push(vec![Scalar::zero(); l]);
    }
    for (i, j) in orbit_representatives(n, true) {
        elems.push(e_plus(n, i, j));
        labels.push(format!("E+[{i},{j}]"));
        kinds.push(BasisKind::Positive);
        pairs.push(Some((i, j)));
        weights.push(eps_diff(l, i, j));
    }
    let pair_index = pairs
        .iter()
        .enumerate()
        .filter_map(|(k, p)| p.map(|p| (p, k)))
        .collect();
    let mut basis = G0Basis {
        l,
        elems,
        labels,
        kinds,
        pairs,
        weights,
        bracket: Vec::new(),
        form: Vec::new(),
        pair_index,
    };
    let (bracket, form) = structure_table(&basis.elems, |x| basis.coords(x))?;
    basis.bracket = bracket;
    basis.form = form;
    Ok(basis)
}

impl G0Basis {
    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn n(&self) -> usize {
        2 * self.l + 1
    }

    /// Index of the first Cartan element; the Cartan block has length `l`.
    pub fn cartan_start(&self) -> usize {
        self.kinds
            .iter()
            .position(|k| *k == BasisKind::Cartan)
            .expect("Cartan block is nonempty")
    }

    pub fn index_of_pair(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_index.get(&(i, j)).copied()
    }

    /// Sparse coordinates of a `ν`-fixed element.
    pub fn coords(&self, x: &LieElt) -> Result<Vec<(usize, Scalar)>> {
        if x.n() != self.n() {
            return Err(Error::RankMismatch(x.n(), self.n()));
        }
        if !is_nu_fixed(x)? {
            return Err(Error::NotInFixedSubalgebra(x.to_string()));
        }
        let l = self.l;
        let mut out = Vec::new();
        let cs = self.cartan_start();
        // Root vectors: E^+_{i,j} carries E_{i,j} with coefficient ½.
        for (k, p) in self.pairs.iter().enumerate() {
            if let Some((i, j)) = p {
                let c = x.coeff(*i, *j) * int(2);
                if !c.is_zero() {
                    out.push((k, c));
                }
            }
        }
        // Cartan: write the diagonal as Σ t_k H_k with t_k partial sums.
        let mut t = Scalar::zero();
        for k in 1..=l {
            t += x.coeff(k, k);
            let c = if k == l { &t * half() } else { t.clone() };
            if !c.is_zero() {
                out.push((cs + k - 1, c));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    pub fn from_coords(&self, coords: &[(usize, Scalar)]) -> LieElt {
        coords
            .iter()
            .fold(LieElt::zero(self.n()), |acc, (k, c)| acc + self.elems[*k].scale(c))
    }
}

/// Standard basis of `sl(2l+1)`: `H_1, …, H_{2l}` followed by `E_{i,j}`,
/// `i ≠ j`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct SlBasis {
    pub l: usize,
    pub elems: Vec<LieElt>,
    pub labels: Vec<String>,
    pub bracket: Structure,
    pub form: Vec<Vec<Scalar>>,
    /// Basis index of the `ν`-image and its sign.
    pub nu_image: Vec<(usize, Scalar)>,
    /// Weight for the diagonal Cartan of `gl`: `e_i - e_j` for `E_{i,j}`.
    pub gl_weights: Vec<Vec<i64>>,
    pair_index: BTreeMap<(usize, usize), usize>,
}

pub fn sl_basis(l: usize) -> Result<SlBasis> {
    let n = matrix_size(l)?;
    let mut elems = Vec::new();
    let mut labels = Vec::new();
    let mut gl_weights = Vec::new();
    for i in 1..n {
        elems.push(LieElt::h(n, i));
        labels.push(format!("H[{i}]"));
        gl_weights.push(vec![0; n]);
    }
    let mut pair_index = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                pair_index.insert((i, j), elems.len());
                elems.push(LieElt::e(n, i, j));
                labels.push(format!("E[{i},{j}]"));
                let mut w = vec![0; n];
                w[i - 1] += 1;
                w[j - 1] -= 1;
                gl_weights.push(w);
            }
        }
    }
    let mut basis = SlBasis {
        l,
        elems,
        labels,
        bracket: Vec::new(),
        form: Vec::new(),
        nu_image: Vec::new(),
        gl_weights,
        pair_index,
    };
    let (bracket, form) = structure_table(&basis.elems, |x| basis.coords(x))?;
    basis.bracket = bracket;
    basis.form = form;
    let mut nu_image = Vec::with_capacity(basis.elems.len());
    for x in &basis.elems {
        let c = basis.coords(&nu(x)?)?;
        match c.as_slice() {
            [(k, s)] => nu_image.push((*k, s.clone())),
            _ => return Err(Error::Inconsistent("ν does not permute the basis".into())),
        }
    }
    basis.nu_image = nu_image;
    Ok(basis)
}

impl SlBasis {
    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn n(&self) -> usize {
        2 * self.l + 1
    }

    pub fn index_of_pair(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_index.get(&(i, j)).copied()
    }

    pub fn index_of_h(&self, i: usize) -> usize {
        i - 1
    }

    pub fn coords(&self, x: &LieElt) -> Result<Vec<(usize, Scalar)>> {
        if x.n() != self.n() {
            return Err(Error::RankMismatch(x.n(), self.n()));
        }
        if !x.trace().is_zero() {
            return Err(Error::NotTraceless);
        }
        let mut out = Vec::new();
        let mut t = Scalar::zero();
        for k in 1..self.n() {
            t += x.coeff(k, k);
            if !t.is_zero() {
                out.push((k - 1, t.clone()));
            }
        }
        for (&(i, j), c) in x.terms() {
            if i != j {
                out.push((self.pair_index[&(i, j)], c.clone()));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    /// Values of a `gl`-weight on `H_1, …, H_{2l}`.
    pub fn h_values(weight: &[i64]) -> Vec<i64> {
        weight.windows(2).map(|w| w[0] - w[1]).collect()
    }
}

/// Basis of the `-1` eigenspace `g¹`, obtained from the eigen-split of the
/// standard basis.
pub fn g1_basis(l: usize) -> Result<Vec<LieElt>> {
    let sl = sl_basis(l)?;
    let mut ech: Echelon<(usize, usize)> = Echelon::new();
    let mut out = Vec::new();
    for x in &sl.elems {
        let m = split_pm(x)?.minus;
        let v: SparseVec<(usize, usize)> = m.terms().clone();
        if ech.insert(&v) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Dimension of the zero weight space of `g¹` for the Cartan `h⁰`: the
/// simultaneous kernel of `ad(h)` over the Cartan basis.
pub fn g1_zero_weight_dim(l: usize) -> Result<usize> {
    let basis = g1_basis(l)?;
    let cartan = b_type_generators(l)?.cartan_basis();
    let mut ech: Echelon<(usize, (usize, usize))> = Echelon::new();
    for x in &basis {
        let mut image = SparseVec::new();
        for (k, h) in cartan.iter().enumerate() {
            for (&p, c) in h.bracket(x)?.terms() {
                image.insert((k, p), c.clone());
            }
        }
        ech.insert(&image);
    }
    Ok(basis.len() - ech.rank())
}

/// Independent reference for the type `B_l` Cartan matrix,
/// `a_{ij} = 2(α_i, α_j)/(α_i, α_i)` with `α_k = ε_k - ε_{k+1}`, `α_l = ε_l`.
pub fn b_type_cartan_reference(l: usize) -> Vec<Vec<Scalar>> {
    let root = |k: usize| {
        let mut v = vec![int(0); l];
        v[k - 1] = int(1);
        if k < l {
            v[k] = int(-1);
        }
        v
    };
    let dot = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).fold(int(0), |s, (x, y)| s + x * y);
    (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let (ai, aj) = (root(i), root(j));
                    int(2) * dot(&ai, &aj) / dot(&ai, &ai)
                })
                .collect()
        })
        .collect()
}
