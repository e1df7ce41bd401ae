//! Exact verification of the classification of `ν`-twisted highest-weight
//! modules for the simple affine vertex algebra of `sl(2l+1)` at level
//! `-l-½`.
//!
//! The modules build on each other in order: [`liealg`] (the finite Lie
//! algebra, `ν` and the `B_l` subalgebra `g⁰`), [`envelope`] (PBW calculus in
//! `U(g⁰)`), [`vacuum`] (the vacuum module and its singular vector),
//! [`twzhu`] (projection to the twisted Zhu algebra), [`affroots`] (the
//! `A_{2l}^{(2)}` root datum and admissibility) and [`classify`].

pub mod affroots;
pub mod classify;
pub mod envelope;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod scalar;
pub mod twzhu;
pub mod vacuum;

pub use affroots::{
    algebra_data, check_admissible, coroot_pairing, ip, kw_positivity, positive_real_families, rho,
    AdmissibilityReport, AffineWeight, AlgebraData, RealRootFamily, RootKind,
};
pub use classify::{
    affinize, all_mu_weights, dominant_integral_filter, eval_polys, mu_weight, zero_set_oracle, FiniteWeight,
};
pub use envelope::{CartanPoly, Envelope, PbwMonomial, SwapSchedule, UEAElt};
pub use error::{Error, Result};
pub use liealg::{
    b_type_generators, g0_basis, g1_zero_weight_dim, nu, sl_basis, split_pm, BTypeGenerators, G0Basis, GradedPair,
    LieElt, SlBasis,
};
pub use scalar::{QuadScalar, Scalar};
pub use twzhu::{expected_polynomials, expected_polynomials_plus_half, ProjectionContext};
pub use vacuum::{problem_level, ModeMonomial, ModeOp, VacuumModule, VermaState};
