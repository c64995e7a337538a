//! Exact evaluation of the SL₃ Littlewood–Richardson function
//! `C(λ₁, λ₂, μ₁, μ₂, ν₁, ν₂) = c^{(ν₁,ν₂,ν₃)}_{(λ₁,λ₂),(μ₁,μ₂)}` through its
//! chamber complex, and computation of its full group of linear symmetries.
//!
//! - [`exactmath`]: rational linear algebra (solving, inverses, projections).
//! - [`lr_oracle`]: brute-force LR tableau counting, the ground truth.
//! - [`chamber`]: the embedded chamber complex and piecewise evaluation.
//! - [`ray_symmetry`]: permutation groups and the coloured ray graph.
//! - [`lift`]: lifting ray permutations to `GL₆(Z)` and certifying them.
//! - [`classical`]: the twelve classical symmetries on partition triples.
//! - [`gl3`]: GL₃ triples, their reduction, and the extra GL₃ symmetry.

pub mod chamber;
pub mod classical;
pub mod error;
pub mod exactmath;
pub mod gl3;
pub mod lift;
pub mod lr_oracle;
pub mod ray_symmetry;

pub use chamber::{
    load_complex, nu3, AffineForm, Chamber, ChamberComplex, ChamberId, LrPoint, Ray,
};
pub use error::{Error, Result};
pub use exactmath::{Rational, RationalMatrix};
pub use gl3::{check_gl3_generator, gl3_extra_generator, reduce_to_sl3, Gl3Triple};
pub use lift::{
    certify_symmetry, full_symmetry_group, induced_chamber_map, known_symmetries, lift,
    ChamberPermutation, KnownSymmetries, LinearSymmetry, SymmetryCertificate, SymmetryGroup,
};
pub use lr_oracle::{enumerate_lr_tableaux, lr_coefficient, LrTableau, Partition};
pub use ray_symmetry::{ColoredGraph, GroupElement, PermGroup, Permutation, RayPermutation};
