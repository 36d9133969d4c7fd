//! Root-system combinatorics and the classification of regular semistable
//! principal bundles over an elliptic curve.
//!
//! The layers build on each other: [`rootsys`] holds the finite data of a
//! simple root system, [`elltorus`] puts torus points on the curve and
//! canonicalizes Weyl orbits, [`bundles`] translates orbit points into
//! bundle decompositions and computes their cohomology, and [`moduli`] and
//! [`spectral`] describe the weighted projective moduli space, its special
//! strata and the spectral covers. [`verify`] runs the cross-checks that tie
//! the layers together.

pub mod bundles;
pub mod elltorus;
pub mod error;
pub mod moduli;
pub mod rootsys;
pub mod spectral;
pub mod verify;

pub use bundles::{
    h0_h1, regular_adjoint_blocks, sl_class_from_mu, sl_classify, so_validate, sp_class_from_mu,
    sp_validate, split_adjoint, AdjointShape, AtiyahSummand, BundleDecomp, BundleExpr, GroupTag,
    SlClass,
};
pub use elltorus::{ELambdaPoint, EPoint, OrbitCanonicalForm};
pub use error::{Error, Result, ValidationCode, ValidationError};
pub use moduli::{
    family_table, n_p, parabolic_data, stratum_dim, wp_space, FamilyRow, ParabolicData, WPSpace,
};
pub use rootsys::{Kind, RootSystem, SubsystemComponent, SubsystemReport, WeylElement};
pub use spectral::{
    cover_index, sl_spectral_fiber, sp_spectral_fiber, FiberPoint, SpectralFiber,
    DEFAULT_ORBIT_BOUND,
};
pub use verify::{run_all, CriterionReport};
