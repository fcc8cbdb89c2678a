//! Exact-arithmetic tools for the representation theory of free products
//! `A = A_1 * ... * A_m` of finite-dimensional semisimple algebras.
//!
//! Each factor `A_i` is given by the sizes of its matrix blocks (its
//! *weights*). From this data we build the generalized subspace quiver of
//! `A`, decide which dimension vectors carry simple `A`-modules via
//! theta-stability, decompose general modules into simples, count moduli
//! parameters, and cross-check every symbolic answer against brute-force
//! finite-field oracles on explicit representations.
//!
//! All symbolic arithmetic is exact (integers and rationals); the oracles
//! work over prime fields.

pub mod algebra;
pub mod cones;
pub mod decomp;
pub mod dimvec;
pub mod error;
pub mod linrep;
pub mod stability;

pub use algebra::{build_quiver, AlgebraSpec, QuiverGamma};
pub use cones::{
    all_ray_tuples, extremal_ray, minimal_conical_decomposition, minimal_integral_on_ray,
    ConicalDecomposition, RayTuple,
};
pub use decomp::{theta_stable_decomposition, StableDecomposition};
pub use dimvec::{
    classify_root, euler_form, euler_form_int, euler_with_ray, is_balanced, is_divisible,
    theta_value, DimensionVector, RationalVector, RootClass, ThetaParameter,
};
pub use error::{Error, Result};
pub use stability::{
    build_qd, d_n_min, enumerate_balanced, enumerate_stable, is_path_connected,
    is_special_isotropic, num_parameters, representation_type, theta_stable, MultiQuiver,
    RepresentationType, StabilityVerdict, StableCase, UnstableReason,
};
