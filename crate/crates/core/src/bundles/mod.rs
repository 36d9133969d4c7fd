//! Semistable bundle decompositions over the curve and their invariants.
//!
//! Every degree-zero semistable bundle on `E` splits into indecomposables
//! `I_d(lambda)`: the rank-`d` iterated self-extension of the trivial line
//! bundle, twisted by a degree-zero line bundle `lambda` (a point of the
//! curve). A decomposition plus a group tag is all the data any of the
//! classification statements here consume:
//!
//! * [`sl_classify`] decides regularity and the automorphism dimension for
//!   `SL(n)` decompositions from the `min(d_i, d_j)` Hom rule.
//! * [`sp_validate`] / [`so_validate`] accept exactly the regular shapes of
//!   the symplectic and orthogonal classifications, with one error code per
//!   violated clause.
//! * [`sl_class_from_mu`] / [`sp_class_from_mu`] produce the regular
//!   representative of a torus point.
//! * [`split_adjoint`] / [`regular_adjoint_blocks`] give both adjoint-bundle
//!   shapes attached to a semistable class.
//! * [`BundleExpr`] is a small symbolic calculus for rank, degree, and
//!   cohomology of expressions in stable bundles and line bundles.

mod adjoint;
mod calculus;
mod classify;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::elltorus::EPoint;

pub use adjoint::{regular_adjoint_blocks, split_adjoint, AdjointShape};
pub use calculus::{h0_h1, BundleExpr};
pub use classify::{sl_class_from_mu, sl_classify, so_validate, sp_class_from_mu, sp_validate, SlClass};

/// The indecomposable `I_d(lambda)`: rank `d`, degree 0, determinant the
/// point `d * lambda`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AtiyahSummand {
    #[serde(deserialize_with = "positive_rank")]
    pub d: u64,
    pub lambda: EPoint,
}

fn positive_rank<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<u64, D::Error> {
    let d = u64::deserialize(de)?;
    if d == 0 {
        return Err(D::Error::custom("summand rank d must be positive"));
    }
    Ok(d)
}

impl AtiyahSummand {
    pub fn new(d: u64, lambda: EPoint) -> AtiyahSummand {
        AtiyahSummand { d, lambda }
    }
}

/// Which classical group a decomposition is claimed for. The vector-bundle
/// rank is `n` (SL), `2n` (Sp, SO even), or `2n + 1` (SO odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    SL,
    Sp,
    SOeven,
    SOodd,
}

impl GroupTag {
    /// Expected total rank of the underlying vector bundle.
    pub fn vector_rank(self, n: usize) -> u64 {
        match self {
            GroupTag::SL => n as u64,
            GroupTag::Sp | GroupTag::SOeven => 2 * n as u64,
            GroupTag::SOodd => 2 * n as u64 + 1,
        }
    }
}

impl std::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GroupTag::SL => "SL",
            GroupTag::Sp => "Sp",
            GroupTag::SOeven => "SOeven",
            GroupTag::SOodd => "SOodd",
        })
    }
}

/// A multiset of summands claimed to decompose a `G`-bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDecomp {
    pub group: GroupTag,
    pub n: usize,
    pub summands: Vec<AtiyahSummand>,
}

impl BundleDecomp {
    pub fn new(group: GroupTag, n: usize, mut summands: Vec<AtiyahSummand>) -> BundleDecomp {
        summands.sort();
        BundleDecomp { group, n, summands }
    }

    /// Total rank of the underlying vector bundle.
    pub fn rank_sum(&self) -> u64 {
        self.summands.iter().map(|s| s.d).sum()
    }

    /// Determinant as a point of the curve: `sum d_i * lambda_i`.
    pub fn determinant(&self) -> EPoint {
        let mut det = EPoint::zero();
        for s in &self.summands {
            det = det.add(&s.lambda.scalar_mul(s.d as i64));
        }
        det
    }
}

pub(crate) fn check_positive_ranks(v: &BundleDecomp) -> crate::error::Result<()> {
    if v.summands.iter().any(|s| s.d == 0) {
        return Err(crate::error::Error::ZeroRankSummand);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomp_json_roundtrip() {
        let v = BundleDecomp::new(
            GroupTag::Sp,
            3,
            vec![
                AtiyahSummand::new(2, EPoint::parse("1/2,0").unwrap()),
                AtiyahSummand::new(1, EPoint::parse("1/5,0").unwrap()),
                AtiyahSummand::new(1, EPoint::parse("4/5,0").unwrap()),
            ],
        );
        let s = serde_json::to_string(&v).unwrap();
        let back: BundleDecomp = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(s.contains(r#""group":"Sp""#));
        assert!(s.contains(r#""lambda":["1/2","0"]"#));
    }

    #[test]
    fn zero_rank_summands_rejected_at_parse() {
        let s = r#"{"group":"SL","n":1,"summands":[{"d":0,"lambda":["0","0"]}]}"#;
        assert!(serde_json::from_str::<BundleDecomp>(s).is_err());
    }

    #[test]
    fn rank_and_determinant() {
        let v = BundleDecomp::new(
            GroupTag::SL,
            3,
            vec![
                AtiyahSummand::new(2, EPoint::parse("1/3,0").unwrap()),
                AtiyahSummand::new(1, EPoint::parse("1/3,0").unwrap()),
            ],
        );
        assert_eq!(v.rank_sum(), 3);
        assert_eq!(v.determinant(), EPoint::zero());
    }
}
