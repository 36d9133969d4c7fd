//! Regular-shape classification of decompositions for the classical groups,
//! and the torus-point-to-decomposition dictionaries.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::elltorus::{ELambdaPoint, EPoint};
use crate::error::{Error, Result, ValidationCode, ValidationError};
use crate::rootsys::Kind;

use super::{check_positive_ranks, AtiyahSummand, BundleDecomp, GroupTag};

/// Outcome of [`sl_classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlClass {
    pub is_regular: bool,
    /// `h^0(End V) - 1`: the traceless automorphism dimension.
    pub aut_dim: u64,
}

fn fail(code: ValidationCode, message: impl Into<String>) -> Error {
    Error::Validation(ValidationError::new(code, message))
}

fn expect_tag(v: &BundleDecomp, want: &[GroupTag]) -> Result<()> {
    if !want.contains(&v.group) {
        return Err(fail(
            ValidationCode::GroupTagMismatch,
            format!("decomposition is tagged {}, expected {:?}", v.group, want),
        ));
    }
    Ok(())
}

/// Regularity and automorphism dimension of an `SL(n)` decomposition.
///
/// `aut_dim = sum over pairs with equal twist of min(d_i, d_j), minus one`
/// for the trace line; the bundle is regular exactly when the twists are
/// pairwise distinct, which is also exactly when `aut_dim = n - 1`.
pub fn sl_classify(v: &BundleDecomp) -> Result<SlClass> {
    expect_tag(v, &[GroupTag::SL])?;
    check_positive_ranks(v)?;
    if v.rank_sum() != v.n as u64 {
        return Err(fail(
            ValidationCode::RankMismatch,
            format!("summand ranks sum to {}, SL({}) needs {}", v.rank_sum(), v.n, v.n),
        ));
    }
    let det = v.determinant();
    if !det.is_zero() {
        return Err(fail(
            ValidationCode::DeterminantNotTrivial,
            format!("determinant point is {det}, not the identity"),
        ));
    }
    let mut aut = 0u64;
    for s in &v.summands {
        for t in &v.summands {
            if s.lambda == t.lambda {
                aut += s.d.min(t.d);
            }
        }
    }
    let aut_dim = aut - 1;
    let distinct = {
        let mut seen = std::collections::HashSet::new();
        v.summands.iter().all(|s| seen.insert(&s.lambda))
    };
    debug_assert_eq!(distinct, aut_dim == v.n as u64 - 1);
    Ok(SlClass {
        is_regular: distinct,
        aut_dim,
    })
}

/// Blocks grouped by their twist, twists ordered.
fn by_twist(v: &BundleDecomp) -> BTreeMap<EPoint, Vec<u64>> {
    let mut map: BTreeMap<EPoint, Vec<u64>> = BTreeMap::new();
    for s in &v.summands {
        map.entry(s.lambda.clone()).or_default().push(s.d);
    }
    map
}

/// Checks the paired part shared by the symplectic and orthogonal shapes:
/// every non-two-torsion twist must occur in exactly one block, matched by
/// one block of the same rank at the negated twist.
fn check_pairing(twists: &BTreeMap<EPoint, Vec<u64>>) -> Result<()> {
    for (lambda, blocks) in twists {
        if lambda.is_two_torsion() {
            continue;
        }
        if blocks.len() > 1 {
            return Err(fail(
                ValidationCode::RepeatedTwist,
                format!("twist {lambda} appears in {} blocks", blocks.len()),
            ));
        }
        let partner = twists.get(&lambda.neg());
        match partner {
            Some(p) if p.len() == 1 && p[0] == blocks[0] => {}
            Some(p) if p.len() > 1 => {
                return Err(fail(
                    ValidationCode::RepeatedTwist,
                    format!("twist {} appears in {} blocks", lambda.neg(), p.len()),
                ));
            }
            _ => {
                return Err(fail(
                    ValidationCode::UnpairedSummand,
                    format!(
                        "block of rank {} at {lambda} has no partner of equal rank at {}",
                        blocks[0],
                        lambda.neg()
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// Accepts exactly the regular symplectic shape
/// `sum_i (I_d(lambda_i) + I_d(-lambda_i)) + sum_j I_{2a_j}(eta_j)` over
/// two-torsion points `eta_j`, and returns `n`.
pub fn sp_validate(v: &BundleDecomp) -> Result<usize> {
    expect_tag(v, &[GroupTag::Sp])?;
    check_positive_ranks(v)?;
    let twists = by_twist(v);
    for (lambda, blocks) in &twists {
        if !lambda.is_two_torsion() {
            continue;
        }
        if blocks.len() > 1 {
            return Err(fail(
                ValidationCode::RepeatedTwist,
                format!("two-torsion twist {lambda} appears in {} blocks", blocks.len()),
            ));
        }
        if blocks[0] % 2 != 0 {
            return Err(fail(
                ValidationCode::OddRankAtTwoTorsion,
                format!("block of odd rank {} at two-torsion twist {lambda}", blocks[0]),
            ));
        }
    }
    check_pairing(&twists)?;
    let expected = v.group.vector_rank(v.n);
    if v.rank_sum() != expected {
        return Err(fail(
            ValidationCode::RankMismatch,
            format!("summand ranks sum to {}, Sp(2*{}) needs {expected}", v.rank_sum(), v.n),
        ));
    }
    Ok(v.n)
}

/// Accepts exactly the liftable regular orthogonal shapes and returns `n`.
///
/// Even case: paired non-two-torsion blocks, plus per two-torsion point
/// either nothing or an odd block with its companion line, `I_{2a+1}(eta) +
/// eta`. The pattern with a bare odd block at all four two-torsion points is
/// orthogonal but has no simply connected lift and is rejected with its own
/// code. Odd case: the same, except the untwisted point must carry exactly
/// one bare odd block (the companion is absorbed into the odd rank).
pub fn so_validate(v: &BundleDecomp) -> Result<usize> {
    expect_tag(v, &[GroupTag::SOeven, GroupTag::SOodd])?;
    check_positive_ranks(v)?;
    let odd_case = v.group == GroupTag::SOodd;
    let twists = by_twist(v);

    for (lambda, blocks) in &twists {
        if !lambda.is_two_torsion() {
            continue;
        }
        if let Some(&d) = blocks.iter().find(|&&d| d % 2 == 0) {
            return Err(fail(
                ValidationCode::EvenRankAtTwoTorsion,
                format!("block of even rank {d} at two-torsion twist {lambda}"),
            ));
        }
    }

    // Per two-torsion point: () absent, (2a+1, 1) block plus companion, or
    // (2a+1) bare. Bare blocks are only ever legal as the mandatory
    // untwisted block of the odd case, or as the all-four non-liftable
    // pattern of the even case.
    let mut bare: Vec<EPoint> = Vec::new();
    let mut two_torsion_points = vec![EPoint::zero()];
    two_torsion_points.extend(EPoint::two_torsion_nonzero());
    for eta in &two_torsion_points {
        let Some(blocks) = twists.get(eta) else {
            if odd_case && eta.is_zero() {
                return Err(fail(
                    ValidationCode::MissingMandatoryOddBlock,
                    "odd orthogonal decompositions must contain the untwisted odd-rank block",
                ));
            }
            continue;
        };
        let mut sorted = blocks.clone();
        sorted.sort_unstable();
        match sorted.as_slice() {
            [_] => bare.push(eta.clone()),
            [1, _] if !(odd_case && eta.is_zero()) => {}
            _ => {
                return Err(fail(
                    ValidationCode::OutsideShape,
                    format!("blocks {sorted:?} at two-torsion twist {eta} match no regular shape"),
                ));
            }
        }
    }
    if odd_case {
        match bare.as_slice() {
            [only] if only.is_zero() => {}
            _ => {
                let culprit = bare.iter().find(|p| !p.is_zero());
                match culprit {
                    Some(eta) => {
                        return Err(fail(
                            ValidationCode::OutsideShape,
                            format!("bare odd block at {eta} without its companion line"),
                        ))
                    }
                    None => {
                        return Err(fail(
                            ValidationCode::MissingMandatoryOddBlock,
                            "odd orthogonal decompositions must contain the untwisted odd-rank block",
                        ))
                    }
                }
            }
        }
    } else if !bare.is_empty() && bare.len() != 4 {
        return Err(fail(
            ValidationCode::OutsideShape,
            format!(
                "bare odd blocks at {} of the four two-torsion points; only none or all four close up",
                bare.len()
            ),
        ));
    } else if bare.len() == 4 {
        return Err(fail(
            ValidationCode::NonLiftable,
            "a bare odd block at every two-torsion point admits no simply connected lift",
        ));
    }

    check_pairing(&twists)?;
    let expected = v.group.vector_rank(v.n);
    if v.rank_sum() != expected {
        return Err(fail(
            ValidationCode::RankMismatch,
            format!("summand ranks sum to {}, expected {expected}", v.rank_sum()),
        ));
    }
    Ok(v.n)
}

/// Lift of a type-A torus point to curve values `(e_1, ..., e_n)` summing to
/// zero: the diagonal of the underlying flat `SL(n)` bundle.
fn sl_lift(mu: &ELambdaPoint) -> Vec<EPoint> {
    let x = mu.coords();
    let r = x.len();
    let mut e = Vec::with_capacity(r + 1);
    e.push(x[0].clone());
    for i in 1..r {
        e.push(x[i].sub(&x[i - 1]));
    }
    e.push(x[r - 1].neg());
    e
}

/// Regular `SL(n)` representative of a type-A torus point: equal curve
/// values merge into one block each.
pub fn sl_class_from_mu(mu: &ELambdaPoint) -> Result<BundleDecomp> {
    let sys = mu.system();
    if sys.kind() != Kind::A {
        return Err(Error::WrongKind {
            expected: Kind::A,
            kind: sys.kind(),
            rank: sys.rank(),
        });
    }
    let n = sys.rank() + 1;
    let mut mult: BTreeMap<EPoint, u64> = BTreeMap::new();
    for e in sl_lift(mu) {
        *mult.entry(e).or_insert(0) += 1;
    }
    let summands = mult
        .into_iter()
        .map(|(lambda, d)| AtiyahSummand::new(d, lambda))
        .collect();
    let v = BundleDecomp::new(GroupTag::SL, n, summands);
    debug_assert!(sl_classify(&v).map_or(false, |c| c.is_regular));
    Ok(v)
}

/// Regular `Sp(2n)` representative of a type-C torus point.
///
/// The lift to `(e_1, ..., e_n)` gives the eigenvalue half-multiset; a
/// non-two-torsion value of total multiplicity `m` across both signs yields
/// `I_m(lambda) + I_m(-lambda)`, a two-torsion value of multiplicity `a`
/// yields `I_{2a}(eta)`.
pub fn sp_class_from_mu(mu: &ELambdaPoint) -> Result<BundleDecomp> {
    let sys = mu.system();
    if sys.kind() != Kind::C {
        return Err(Error::WrongKind {
            expected: Kind::C,
            kind: sys.kind(),
            rank: sys.rank(),
        });
    }
    let n = sys.rank();
    let x = mu.coords();
    let mut lift = Vec::with_capacity(n);
    for i in 0..n {
        if i == 0 {
            lift.push(x[0].clone());
        } else {
            lift.push(x[i].sub(&x[i - 1]));
        }
    }
    let mut mult: BTreeMap<EPoint, u64> = BTreeMap::new();
    for e in lift {
        let class = e.clone().min(e.neg());
        *mult.entry(class).or_insert(0) += 1;
    }
    let mut summands = Vec::new();
    for (lambda, m) in mult {
        if lambda.is_two_torsion() {
            summands.push(AtiyahSummand::new(2 * m, lambda));
        } else {
            summands.push(AtiyahSummand::new(m, lambda.neg()));
            summands.push(AtiyahSummand::new(m, lambda));
        }
    }
    let v = BundleDecomp::new(GroupTag::Sp, n, summands);
    debug_assert!(sp_validate(&v).is_ok());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn ep(s: &str) -> EPoint {
        EPoint::parse(s).unwrap()
    }

    fn decomp(group: GroupTag, n: usize, parts: &[(u64, &str)]) -> BundleDecomp {
        BundleDecomp::new(
            group,
            n,
            parts
                .iter()
                .map(|&(d, l)| AtiyahSummand::new(d, ep(l)))
                .collect(),
        )
    }

    fn code_of(err: Error) -> ValidationCode {
        match err {
            Error::Validation(v) => v.code,
            other => panic!("expected validation error, got {other}"),
        }
    }

    #[test]
    fn sl_single_block_is_regular() {
        for n in 1..=6 {
            let v = decomp(GroupTag::SL, n, &[(n as u64, "0,0")]);
            let c = sl_classify(&v).unwrap();
            assert!(c.is_regular);
            assert_eq!(c.aut_dim, n as u64 - 1);
        }
    }

    #[test]
    fn sl_repeated_twist_is_not_regular() {
        let v = decomp(GroupTag::SL, 2, &[(1, "0,0"), (1, "0,0")]);
        let c = sl_classify(&v).unwrap();
        assert!(!c.is_regular);
        assert_eq!(c.aut_dim, 3);
    }

    #[test]
    fn sl_distinct_pair_aut_dim_one() {
        let v = decomp(GroupTag::SL, 2, &[(1, "1/3,0"), (1, "2/3,0")]);
        let c = sl_classify(&v).unwrap();
        assert!(c.is_regular);
        assert_eq!(c.aut_dim, 1);
    }

    #[test]
    fn sl_error_codes() {
        let v = decomp(GroupTag::SL, 3, &[(2, "0,0")]);
        assert_eq!(code_of(sl_classify(&v).unwrap_err()), ValidationCode::RankMismatch);
        let v = decomp(GroupTag::SL, 2, &[(1, "1/3,0"), (1, "1/3,0")]);
        assert_eq!(
            code_of(sl_classify(&v).unwrap_err()),
            ValidationCode::DeterminantNotTrivial
        );
        let v = decomp(GroupTag::Sp, 1, &[(2, "0,0")]);
        assert_eq!(
            code_of(sl_classify(&v).unwrap_err()),
            ValidationCode::GroupTagMismatch
        );
    }

    #[test]
    fn sp_accepts_quoted_shapes() {
        assert_eq!(sp_validate(&decomp(GroupTag::Sp, 1, &[(2, "0,0")])).unwrap(), 1);
        assert_eq!(
            sp_validate(&decomp(GroupTag::Sp, 1, &[(1, "1/5,0"), (1, "4/5,0")])).unwrap(),
            1
        );
        assert_eq!(
            sp_validate(&decomp(
                GroupTag::Sp,
                3,
                &[(2, "1/2,0"), (2, "0,0"), (1, "1/7,0"), (1, "6/7,0")]
            ))
            .unwrap(),
            3
        );
    }

    #[test]
    fn sp_error_codes() {
        let v = decomp(GroupTag::Sp, 2, &[(3, "1/2,0"), (1, "1/3,0")]);
        assert_eq!(
            code_of(sp_validate(&v).unwrap_err()),
            ValidationCode::OddRankAtTwoTorsion
        );
        let v = decomp(GroupTag::Sp, 1, &[(1, "1/5,0"), (1, "2/5,0")]);
        assert_eq!(
            code_of(sp_validate(&v).unwrap_err()),
            ValidationCode::UnpairedSummand
        );
        let v = decomp(
            GroupTag::Sp,
            2,
            &[(1, "1/5,0"), (1, "1/5,0"), (1, "4/5,0"), (1, "4/5,0")],
        );
        assert_eq!(
            code_of(sp_validate(&v).unwrap_err()),
            ValidationCode::RepeatedTwist
        );
        let v = decomp(GroupTag::Sp, 3, &[(2, "0,0")]);
        assert_eq!(
            code_of(sp_validate(&v).unwrap_err()),
            ValidationCode::RankMismatch
        );
    }

    #[test]
    fn so_even_accepts_companioned_blocks() {
        // O + O + eta1 + eta1, the doubled-line shape.
        let v = decomp(GroupTag::SOeven, 2, &[(1, "0,0"), (1, "0,0"), (1, "1/2,0"), (1, "1/2,0")]);
        assert_eq!(so_validate(&v).unwrap(), 2);
        // I3(0) + O companion + paired generic part.
        let v = decomp(
            GroupTag::SOeven,
            3,
            &[(3, "0,0"), (1, "0,0"), (1, "1/7,0"), (1, "6/7,0")],
        );
        assert_eq!(so_validate(&v).unwrap(), 3);
    }

    #[test]
    fn so_even_rejects_the_nonliftable_pattern() {
        let v = decomp(
            GroupTag::SOeven,
            3,
            &[(3, "0,0"), (1, "1/2,0"), (1, "0,1/2"), (1, "1/2,1/2")],
        );
        assert_eq!(code_of(so_validate(&v).unwrap_err()), ValidationCode::NonLiftable);
    }

    #[test]
    fn so_error_codes() {
        let v = decomp(GroupTag::SOeven, 1, &[(2, "1/2,0")]);
        assert_eq!(
            code_of(so_validate(&v).unwrap_err()),
            ValidationCode::EvenRankAtTwoTorsion
        );
        // One bare odd block, not four.
        let v = decomp(GroupTag::SOeven, 2, &[(3, "0,0"), (1, "1/2,0")]);
        assert_eq!(code_of(so_validate(&v).unwrap_err()), ValidationCode::OutsideShape);
        // Odd case without the mandatory untwisted block.
        let v = decomp(GroupTag::SOodd, 1, &[(3, "1/2,0")]);
        assert_eq!(
            code_of(so_validate(&v).unwrap_err()),
            ValidationCode::MissingMandatoryOddBlock
        );
        // Odd case with a companion next to the mandatory block.
        let v = decomp(GroupTag::SOodd, 2, &[(3, "0,0"), (1, "0,0"), (1, "1/3,0")]);
        assert_eq!(code_of(so_validate(&v).unwrap_err()), ValidationCode::OutsideShape);
    }

    #[test]
    fn so_odd_accepts_mandatory_block() {
        let v = decomp(GroupTag::SOodd, 1, &[(3, "0,0")]);
        assert_eq!(so_validate(&v).unwrap(), 1);
        let v = decomp(GroupTag::SOodd, 2, &[(1, "0,0"), (1, "1/9,0"), (1, "8/9,0"), (3, "1/2,0"), (1, "1/2,0")]);
        // 1 + 1 + 1 + 3 + 1 = 7 = 2*3 + 1, so n = 3, not 2.
        assert_eq!(
            code_of(so_validate(&v).unwrap_err()),
            ValidationCode::RankMismatch
        );
        let v = decomp(GroupTag::SOodd, 3, &[(1, "0,0"), (1, "1/9,0"), (1, "8/9,0"), (3, "1/2,0"), (1, "1/2,0")]);
        assert_eq!(so_validate(&v).unwrap(), 3);
    }

    #[test]
    fn from_mu_round_trips() {
        let a3 = RootSystem::get(Kind::A, 3).unwrap();
        let mu = ELambdaPoint::parse(a3, "1/5,0;2/5,0;3/5,0").unwrap();
        let v = sl_class_from_mu(&mu).unwrap();
        let c = sl_classify(&v).unwrap();
        assert!(c.is_regular);
        assert_eq!(c.aut_dim, 3);

        let zero = ELambdaPoint::zero(RootSystem::get(Kind::A, 3).unwrap());
        let v = sl_class_from_mu(&zero).unwrap();
        assert_eq!(v.summands, vec![AtiyahSummand::new(4, EPoint::zero())]);

        let c2 = RootSystem::get(Kind::C, 2).unwrap();
        let mu = ELambdaPoint::parse(c2.clone(), "1/2,0;1/2,0").unwrap();
        // e = (1/2, 0): one two-torsion value and one zero value.
        let v = sp_class_from_mu(&mu).unwrap();
        assert_eq!(
            v.summands,
            vec![
                AtiyahSummand::new(2, EPoint::zero()),
                AtiyahSummand::new(2, ep("1/2,0")),
            ]
        );
        assert_eq!(sp_validate(&v).unwrap(), 2);

        let mu = ELambdaPoint::parse(c2, "1/5,0;0,0").unwrap();
        // e = (1/5, -1/5): one plus-minus pair of multiplicity 2.
        let v = sp_class_from_mu(&mu).unwrap();
        assert_eq!(
            v.summands,
            vec![
                AtiyahSummand::new(2, ep("1/5,0")),
                AtiyahSummand::new(2, ep("4/5,0")),
            ]
        );

        let wrong = ELambdaPoint::zero(RootSystem::get(Kind::B, 2).unwrap());
        assert!(matches!(sl_class_from_mu(&wrong), Err(Error::WrongKind { .. })));
        assert!(matches!(sp_class_from_mu(&wrong), Err(Error::WrongKind { .. })));
    }
}
