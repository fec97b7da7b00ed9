//! Exact computation of degree semigroups for subalgebras of K[t].
//!
//! Given polynomials f₁,…,fₛ ∈ ℚ[t], the crate computes the monoid of
//! degrees of the algebra A = K[f₁,…,fₛ], bases and degree ideals of
//! finitely generated A-modules, and — for plane polynomial curves — the
//! module of differentials, its non-exact degrees, Milnor and Tjurina
//! numbers, quasi-homogeneity detection and the μ−ν ∈ {0,1,2}
//! classification.
//!
//! Module map:
//! - [`poly`], [`series`]: exact sparse polynomial and truncated Laurent
//!   series arithmetic over ℚ.
//! - [`numsgp`]: numerical semigroups and submonoids of ℕ.
//! - [`ideals`]: relative ideals, pair relators, kernel generators.
//! - [`algebra`]: bases of K[f₁,…,fₛ] and the degree monoid d(A).
//! - [`modbasis`]: bases and degree ideals of A-modules.
//! - [`kahler`]: differentials of plane polynomial curves.
//! - [`normalize`]: parametrization normal forms via the weighted Wronskian.
//! - [`classify`]: δ-sequences, Newton–Puiseux exponents, ne ∈ {0,1,2}
//!   classification.

pub mod algebra;
pub mod classify;
pub mod ideals;
pub mod kahler;
pub mod modbasis;
pub mod normalize;
pub mod numsgp;
pub mod poly;
pub mod rat;
pub mod series;

pub use algebra::AlgebraBasis;
pub use classify::{Classification, DeltaSequence};
pub use ideals::RelativeIdeal;
pub use kahler::{CurveParametrization, DifferentialReport};
pub use modbasis::ModuleBasis;
pub use normalize::NormalFormOutcome;
pub use numsgp::{DegreeMonoid, NumericalSemigroup};
pub use poly::{parse_poly, Poly};
pub use rat::Rat;
pub use series::LaurentSeries;
