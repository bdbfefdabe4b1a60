//! Exact graded Artinian algebras and certification of weak and strong Lefschetz properties.
//!
//! Algebras are towers of monic extensions `A[x]/(f)` and quotients by homogeneous forms over
//! ℚ or GF(p). All ranks are computed exactly.

pub mod algebra;
pub mod error;
pub mod field;
pub mod lefschetz;
pub mod linalg;
pub mod theorem;

pub use algebra::{check_symmetric_unimodal, GradedAlgebra, HomogeneousElement, MonicExtensionPoly};
pub use error::{Error, Result};
pub use field::{binomial, FieldSpec, Scalar};
pub use lefschetz::{
    is_lefschetz, is_strong_lefschetz, maximal_rank_property, rank_profile, search_strong, search_weak,
    LefschetzReport, Mode, RankProfile, Verdict,
};
pub use linalg::{anti_triangularize, cauchy_determinant, AntiTriangularization, DenseMatrix};
