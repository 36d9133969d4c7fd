//! Fibers of the spectral cover over a moduli point, and cover degrees as
//! Weyl-orbit sizes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bundles::{sl_classify, sp_validate, BundleDecomp};
use crate::elltorus::EPoint;
use crate::error::Result;
use crate::rootsys::RootSystem;

/// Orbit enumeration refuses to grow past this many vectors unless a caller
/// raises the bound explicitly.
pub const DEFAULT_ORBIT_BOUND: usize = 1_000_000;

/// One point of a spectral fiber, with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPoint {
    pub e: EPoint,
    pub mult: u64,
}

/// The fiber of the spectral cover over one moduli point: a degree-`n`
/// divisor on the curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralFiber {
    pub degree: u64,
    pub points: Vec<FiberPoint>,
    /// Symplectic fibers carry the negation involution; these are its fixed
    /// points, always two-torsion. Absent for SL fibers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution_fixed: Option<Vec<EPoint>>,
}

fn merged_points(v: &BundleDecomp) -> Vec<FiberPoint> {
    let mut mult: BTreeMap<EPoint, u64> = BTreeMap::new();
    for s in &v.summands {
        *mult.entry(s.lambda.clone()).or_insert(0) += s.d;
    }
    mult.into_iter().map(|(e, mult)| FiberPoint { e, mult }).collect()
}

/// Fiber of the degree-`n` cover attached to an `SL(n)` decomposition: the
/// divisor `sum d_i (lambda_i)`, which sums to zero in the curve.
pub fn sl_spectral_fiber(v: &BundleDecomp) -> Result<SpectralFiber> {
    sl_classify(v)?;
    Ok(SpectralFiber {
        degree: v.n as u64,
        points: merged_points(v),
        involution_fixed: None,
    })
}

/// Fiber of the degree-`2n` cover attached to an `Sp(2n)` decomposition,
/// together with the fixed points of the negation involution.
pub fn sp_spectral_fiber(v: &BundleDecomp) -> Result<SpectralFiber> {
    let n = sp_validate(v)?;
    let points = merged_points(v);
    let fixed = points
        .iter()
        .filter(|p| p.e.is_two_torsion())
        .map(|p| p.e.clone())
        .collect();
    Ok(SpectralFiber {
        degree: 2 * n as u64,
        points,
        involution_fixed: Some(fixed),
    })
}

/// Index `[W : W_0]` of the stabilizer of a marked weight vector: the degree
/// of the cover `(E tensor coweights)/W_0 -> (E tensor coweights)/W`. The
/// vector is given in fundamental-weight coordinates and its orbit is
/// enumerated breadth-first, stopping with an error at `bound` vectors.
pub fn cover_index(sys: &RootSystem, weight: &[i64], bound: usize) -> Result<u64> {
    let orbit = sys.weight_orbit(weight, bound)?;
    Ok(orbit.len() as u64)
}
