//! The `A_{2l}^{(2)}` root datum in its anti-homogeneous realization: weights
//! in `(ε, δ, Λ₀ᶜ)` coordinates, the bilinear form, positive real roots in
//! closed-form families, and the Kac–Wakimoto admissibility test.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::liealg::LieElt;
use crate::linalg::{rank_of, SparseVec};
use crate::scalar::{fmt_scalar, half, int, Scalar};

/// `Σ eps_i ε_i + d_delta δ + k0 Λ₀ᶜ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub eps: Vec<Scalar>,
    pub d_delta: Scalar,
    pub k0: Scalar,
}

impl AffineWeight {
    pub fn zero(l: usize) -> Self {
        Self::finite(vec![Scalar::zero(); l])
    }

    pub fn finite(eps: Vec<Scalar>) -> Self {
        Self {
            eps,
            d_delta: Scalar::zero(),
            k0: Scalar::zero(),
        }
    }

    pub fn delta(l: usize) -> Self {
        Self {
            d_delta: Scalar::one(),
            ..Self::zero(l)
        }
    }

    pub fn lambda0(l: usize) -> Self {
        Self {
            k0: Scalar::one(),
            ..Self::zero(l)
        }
    }

    /// `ε_i`, 1-based.
    pub fn eps_unit(l: usize, i: usize) -> Self {
        let mut w = Self::zero(l);
        w.eps[i - 1] = Scalar::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            eps: self.eps.iter().zip(&o.eps).map(|(a, b)| a + b).collect(),
            d_delta: &self.d_delta + &o.d_delta,
            k0: &self.k0 + &o.k0,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            eps: self.eps.iter().map(|a| a * c).collect(),
            d_delta: &self.d_delta * c,
            k0: &self.k0 * c,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Scalar::one()))
    }

    /// Level `(λ, δ)`.
    pub fn level(&self) -> Scalar {
        self.k0.clone()
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.k0.is_zero() {
            parts.push(format!("{}*L0c", fmt_scalar(&self.k0)));
        }
        for (i, c) in self.eps.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*e{}", fmt_scalar(c), i + 1));
            }
        }
        if !self.d_delta.is_zero() {
            parts.push(format!("{}*d", fmt_scalar(&self.d_delta)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `(ε_i, ε_j) = δ_ij`, `(δ, Λ₀ᶜ) = 1`, all other pairings zero.
pub fn ip(x: &AffineWeight, y: &AffineWeight) -> Result<Scalar> {
    if x.rank() != y.rank() {
        return Err(Error::DimensionMismatch(x.rank(), y.rank()));
    }
    let fin: Scalar = x.eps.iter().zip(&y.eps).map(|(a, b)| a * b).sum();
    Ok(fin + &x.d_delta * &y.k0 + &x.k0 * &y.d_delta)
}

/// `(λ, α∨) = 2(λ, α)/(α, α)`.
pub fn coroot_pairing(lam: &AffineWeight, root: &AffineWeight) -> Result<Scalar> {
    let norm = ip(root, root)?;
    if norm.is_zero() {
        return Err(Error::IsotropicRoot);
    }
    Ok(int(2) * ip(lam, root)? / norm)
}

/// Simple roots `α_0 = δ - 2ε_1`, `α_k = ε_k - ε_{k+1}`, `α_l = ε_l`.
pub fn simple_roots(l: usize) -> Vec<AffineWeight> {
    let mut out = vec![AffineWeight::delta(l).sub(&AffineWeight::eps_unit(l, 1).scale(&int(2)))];
    for k in 1..l {
        out.push(AffineWeight::eps_unit(l, k).sub(&AffineWeight::eps_unit(l, k + 1)));
    }
    out.push(AffineWeight::eps_unit(l, l));
    out
}

/// `ω_k = ε_1 + ⋯ + ε_k` for `k < l` and `ω_l = ½(ε_1 + ⋯ + ε_l)`.
pub fn fundamental_weights(l: usize) -> Vec<Vec<Scalar>> {
    (1..=l)
        .map(|k| {
            let c = if k == l { half() } else { Scalar::one() };
            (1..=l)
                .map(|i| if i <= k { c.clone() } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

/// `ρ = (2l+1)Λ₀ᶜ + Σ_i (l - i + ½) ε_i`.
pub fn rho(l: usize) -> AffineWeight {
    AffineWeight {
        eps: (1..=l).map(|i| int((l - i) as i64) + half()).collect(),
        d_delta: Scalar::zero(),
        k0: int(2 * l as i64 + 1),
    }
}

pub fn dual_coxeter(l: usize) -> i64 {
    2 * l as i64 + 1
}

/// `h₀ = -H_θ + ½c`: a finite part in `sl(2l+1)` plus a multiple of `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExtended {
    pub finite: LieElt,
    pub central: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub l: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub h_dual: i64,
    pub h0: CentralExtended,
}

impl AlgebraData {
    /// `Ãa = 0`.
    pub fn marks_null(&self) -> bool {
        self.cartan_matrix
            .iter()
            .all(|row| row.iter().zip(&self.marks).map(|(x, a)| x * a).sum::<i64>() == 0)
    }

    /// `a∨Ã = 0`.
    pub fn comarks_null(&self) -> bool {
        let n = self.marks.len();
        (0..n).all(|j| (0..n).map(|i| self.comarks[i] * self.cartan_matrix[i][j]).sum::<i64>() == 0)
    }

    /// Finite part and central coefficient of `Σ a∨_i h_i`, with
    /// `h_i = H_i + H_{2l+1-i}` for `0 < i < l` and `h_l = h̄_l`.
    pub fn c_expansion(&self) -> Result<CentralExtended> {
        let g = crate::liealg::b_type_generators(self.l)?;
        let mut finite = self.h0.finite.scale(&int(self.comarks[0]));
        let central = &self.h0.central * int(self.comarks[0]);
        for (i, h) in g.cartan_basis().iter().enumerate() {
            finite = finite + h.scale(&int(self.comarks[i + 1]));
        }
        Ok(CentralExtended { finite, central })
    }
}

/// The affine Cartan matrix as printed, its marks and comarks.
pub fn algebra_data(l: usize) -> Result<AlgebraData> {
    let n = crate::liealg::matrix_size(l)?;
    let size = l + 1;
    let mut a = vec![vec![0i64; size]; size];
    if l == 1 {
        a = vec![vec![2, -1], vec![-4, 2]];
    } else {
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
            if i + 1 < size {
                row[i + 1] = -1;
            }
            if i > 0 {
                row[i - 1] = -1;
            }
        }
        a[1][0] = -2;
        a[l][l - 1] = -2;
    }
    let marks: Vec<i64> = (0..size).map(|i| if i == 0 { 1 } else { 2 }).collect();
    let comarks: Vec<i64> = (0..size).map(|i| if i == l { 1 } else { 2 }).collect();
    let data = AlgebraData {
        l,
        h_dual: comarks.iter().sum(),
        cartan_matrix: a,
        marks,
        comarks,
        h0: CentralExtended {
            finite: (LieElt::e(n, 1, 1) - LieElt::e(n, n, n)).scale(&-Scalar::one()),
            central: half(),
        },
    };
    if !data.marks_null() || !data.comarks_null() {
        return Err(Error::Inconsistent("marks or comarks are not null vectors".into()));
    }
    Ok(data)
}

/// `a_ij = 2(α_i, α_j)/(α_i, α_i)` recomputed from the simple roots.
pub fn cartan_from_roots(l: usize) -> Result<Vec<Vec<Scalar>>> {
    let roots = simple_roots(l);
    roots
        .iter()
        .map(|ai| roots.iter().map(|aj| coroot_pairing(aj, ai)).collect())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    Long,
    Intermediate,
    Short,
}

impl RootKind {
    pub fn norm(self) -> Scalar {
        match self {
            RootKind::Long => int(4),
            RootKind::Intermediate => int(2),
            RootKind::Short => int(1),
        }
    }
}

/// `δ`-coefficient pattern of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaPattern {
    /// `m δ`
    Multiple,
    /// `(2m+1) δ`
    Odd,
}

/// `{ c·α + pattern(m) δ : m ≥ min_m }` with `c = 2` for long roots, else 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRootFamily {
    pub kind: RootKind,
    /// Finite root `α` in ε-coordinates (a short root for the long family).
    pub classical: Vec<Scalar>,
    pub pattern: DeltaPattern,
    pub min_m: i64,
}

impl RealRootFamily {
    pub fn root(&self, m: i64) -> AffineWeight {
        let c = if self.kind == RootKind::Long { int(2) } else { int(1) };
        let d = match self.pattern {
            DeltaPattern::Multiple => int(m),
            DeltaPattern::Odd => int(2 * m + 1),
        };
        AffineWeight {
            eps: self.classical.iter().map(|x| x * &c).collect(),
            d_delta: d,
            k0: Scalar::zero(),
        }
    }

    /// Coroot of the `m`-th member as `(finite part, c-coefficient)`.
    pub fn coroot_vector(&self, m: i64) -> Vec<Scalar> {
        let r = self.root(m);
        let s = int(2) / self.kind.norm();
        let mut v: Vec<Scalar> = r.eps.iter().map(|x| x * &s).collect();
        v.push(&r.d_delta * &s);
        v
    }

    /// `(A, B)` with `(λ, γ_m∨) = A + B m`.
    pub fn pairing_coefficients(&self, lam: &AffineWeight) -> Result<(Scalar, Scalar)> {
        let a = coroot_pairing(lam, &self.root(0))?;
        let b = coroot_pairing(lam, &self.root(1))? - &a;
        Ok((a, b))
    }

    pub fn describe(&self) -> String {
        let fin = render_finite(&self.classical);
        match (self.kind, self.pattern) {
            (RootKind::Long, _) => format!("2({fin}) + (2m+1)d, m>={}", self.min_m),
            (_, _) => format!("{fin} + m*d, m>={}", self.min_m),
        }
    }
}

fn render_finite(v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.abs();
        out.push_str(sign);
        if !mag.is_one() {
            out.push_str(&fmt_scalar(&mag));
            out.push('*');
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `±ε_i`.
pub fn short_roots(l: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for i in 0..l {
        for s in [1, -1] {
            let mut v = vec![Scalar::zero(); l];
            v[i] = int(s);
            out.push(v);
        }
    }
    out
}

/// `±ε_i ± ε_j`, `i < j`.
pub fn long_roots(l: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![Scalar::zero(); l];
                v[i] = int(s);
                v[j] = int(t);
                out.push(v);
            }
        }
    }
    out
}

fn is_positive_finite(v: &[Scalar]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

/// Positive real roots in families. Long roots need no sign condition since
/// `2m+1 > 0` forces `m ≥ 0`; the other two need `m > 0`, or `m = 0` with
/// `α > 0`, which is encoded by splitting off the `m = 0` member.
pub fn positive_real_families(l: usize) -> Vec<RealRootFamily> {
    let mut out = Vec::new();
    for a in short_roots(l) {
        out.push(RealRootFamily {
            kind: RootKind::Long,
            classical: a,
            pattern: DeltaPattern::Odd,
            min_m: 0,
        });
    }
    let mut linear = |kind: RootKind, roots: Vec<Vec<Scalar>>| {
        for a in roots {
            let min_m = if is_positive_finite(&a) { 0 } else { 1 };
            out.push(RealRootFamily {
                kind,
                classical: a,
                pattern: DeltaPattern::Multiple,
                min_m,
            });
        }
    };
    linear(RootKind::Intermediate, long_roots(l));
    linear(RootKind::Short, short_roots(l));
    out
}

/// Integral members of `A + B m`, `m ≥ min_m`: the smallest such `m` and the
/// period, or `None` if no member is an integer.
fn integral_progression(a: &Scalar, b: &Scalar, min_m: i64) -> Option<(i64, i64)> {
    let period: i64 = if b.is_zero() {
        1
    } else {
        i64::try_from(b.denom().clone()).expect("small denominator")
    };
    (min_m..min_m + period)
        .find(|m| (a + b * int(*m)).is_integer())
        .map(|m| (m, period))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingWitness {
    pub family: String,
    pub m: i64,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub condition1: bool,
    pub condition2: bool,
    /// Rank of the `λ`-integral coroots, against the target `l + 1`.
    pub integral_rank: usize,
    /// Pairings `(λ+ρ, γ∨)` in `{0, -1, -2, …}`.
    pub violations: Vec<PairingWitness>,
    /// Smallest integral `(λ+ρ, γ∨)` per family that has one.
    pub first_integral: Vec<PairingWitness>,
    /// `λ`-integral coroots used for the rank count, with `(λ, γ∨)`.
    pub integral_coroots: Vec<PairingWitness>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.condition1 && self.condition2
    }
}

/// Kac–Wakimoto admissibility of `λ`, decided family by family.
pub fn check_admissible(lam: &AffineWeight) -> Result<AdmissibilityReport> {
    let l = lam.rank();
    let shifted = lam.add(&rho(l));
    let mut violations = Vec::new();
    let mut first_integral = Vec::new();
    let mut integral_coroots = Vec::new();
    let mut vectors: Vec<SparseVec<usize>> = Vec::new();

    for fam in positive_real_families(l) {
        let (a, b) = fam.pairing_coefficients(&shifted)?;
        if let Some((m0, _)) = integral_progression(&a, &b, fam.min_m) {
            let value = &a + &b * int(m0);
            let w = PairingWitness {
                family: fam.describe(),
                m: m0,
                value: value.clone(),
            };
            // Values increase along the progression when b > 0, so the first
            // one is the minimum; otherwise they reach every small integer.
            let bad = b.is_negative() || !value.is_positive();
            if bad {
                violations.push(w.clone());
            }
            first_integral.push(w);
        }

        let (a, b) = fam.pairing_coefficients(lam)?;
        if let Some((m0, period)) = integral_progression(&a, &b, fam.min_m) {
            for m in [m0, m0 + period] {
                let v = fam.coroot_vector(m);
                vectors.push(v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
                integral_coroots.push(PairingWitness {
                    family: fam.describe(),
                    m,
                    value: &a + &b * int(m),
                });
            }
        }
    }
    let integral_rank = rank_of(&vectors);
    Ok(AdmissibilityReport {
        condition1: violations.is_empty(),
        condition2: integral_rank == l + 1,
        integral_rank,
        violations,
        first_integral,
        integral_coroots,
    })
}

/// `(λ + ρ, δ) = level + h∨`.
pub fn kw_value(lam: &AffineWeight) -> Scalar {
    lam.level() + int(dual_coxeter(lam.rank()))
}

pub fn kw_positivity(lam: &AffineWeight) -> bool {
    kw_value(lam).is_positive()
}
