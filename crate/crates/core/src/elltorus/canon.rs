//! Minimal-image search for the least point of a Weyl orbit.
//!
//! The Weyl group is filtered by the chain of parabolic subgroups
//! `W = P_{-1} > P_0 > ... > P_{r-1} = 1`, `P_k` generated by the simple
//! reflections of index greater than `k`. Every `w` factors uniquely as
//! `w = p * u_{r-1} * ... * u_0` along the chain, and coordinate `k` of
//! `w mu` is already decided by the prefix through level `k`:
//!
//! ```text
//! <pi_k, w mu> = <u^{-1} pi_k, nu>    (nu the image of mu so far)
//! ```
//!
//! since every deeper factor fixes the fundamental weight `pi_k`. The
//! search therefore walks levels in order, keeps the prefixes achieving the
//! least value so far (merging prefixes with equal images and adding their
//! multiplicities), and after the last level holds exactly one point: the
//! orbit minimum, whose multiplicity is the stabilizer order.
//!
//! Arithmetic runs on numerators over one common denominator, so each
//! candidate value is an exact integer pair.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, Integer, One, Zero};

use super::{ELambdaPoint, EPoint};

/// Result of [`ELambdaPoint::canonicalize`]: the least orbit point and the
/// order of the stabilizer of the orbit's points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCanonicalForm {
    pub representative: ELambdaPoint,
    pub stabilizer_order: BigUint,
}

impl OrbitCanonicalForm {
    /// `|W| / |stabilizer|`.
    pub fn orbit_size(&self) -> BigUint {
        let w = self.representative.system().weyl_order();
        debug_assert!((w % &self.stabilizer_order).is_zero());
        w / &self.stabilizer_order
    }
}

type Scaled = Vec<(BigInt, BigInt)>;

pub(crate) fn canonicalize(point: &ELambdaPoint) -> OrbitCanonicalForm {
    let system = point.system().clone();

    let mut denom = BigInt::one();
    for c in point.coords() {
        let (a, b) = c.coords();
        denom = denom.lcm(a.denom());
        denom = denom.lcm(b.denom());
    }
    let scale = |x: &BigRational| -> BigInt {
        let v = x * BigRational::from(denom.clone());
        debug_assert!(v.is_integer());
        v.to_integer().mod_floor(&denom)
    };
    let start: Scaled = point
        .coords()
        .iter()
        .map(|c| (scale(c.coords().0), scale(c.coords().1)))
        .collect();

    let mut states: HashMap<Scaled, BigUint> = HashMap::new();
    states.insert(start, BigUint::one());

    for level in &system.canon_tables().levels {
        let current: Vec<(Scaled, BigUint)> = states.drain().collect();
        // Value each (prefix, coset) pair would give this coordinate.
        let mut values: Vec<Vec<(BigInt, BigInt)>> = Vec::with_capacity(current.len());
        let mut best: Option<(BigInt, BigInt)> = None;
        for (coords, _) in &current {
            let row: Vec<(BigInt, BigInt)> = level
                .iter()
                .map(|entry| dot(&entry.psi, coords, &denom))
                .collect();
            for v in &row {
                if best.as_ref().map_or(true, |b| v < b) {
                    best = Some(v.clone());
                }
            }
            values.push(row);
        }
        let best = best.expect("levels are nonempty");
        for ((coords, count), row) in current.iter().zip(&values) {
            for (entry, value) in level.iter().zip(row) {
                if *value != best {
                    continue;
                }
                let next: Scaled = entry
                    .action
                    .iter()
                    .map(|mrow| {
                        let mut a = BigInt::zero();
                        let mut b = BigInt::zero();
                        for (&m, (ca, cb)) in mrow.iter().zip(coords) {
                            if m != 0 {
                                a += BigInt::from(m) * ca;
                                b += BigInt::from(m) * cb;
                            }
                        }
                        (a.mod_floor(&denom), b.mod_floor(&denom))
                    })
                    .collect();
                *states.entry(next).or_insert_with(BigUint::zero) += count;
            }
        }
    }

    debug_assert_eq!(states.len(), 1, "coordinates determine the point");
    let (coords, stabilizer_order) = states
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("at least one state survives");
    let coords: Vec<EPoint> = coords
        .into_iter()
        .map(|(a, b)| {
            EPoint::new(
                BigRational::new(a, denom.clone()),
                BigRational::new(b, denom.clone()),
            )
        })
        .collect();
    let representative =
        ELambdaPoint::new(system, coords).expect("engine preserves coordinate count");
    OrbitCanonicalForm {
        representative,
        stabilizer_order,
    }
}

fn dot(psi: &[i64], coords: &Scaled, denom: &BigInt) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    for (&p, (ca, cb)) in psi.iter().zip(coords) {
        if p != 0 {
            a += BigInt::from(p) * ca;
            b += BigInt::from(p) * cb;
        }
    }
    (a.mod_floor(denom), b.mod_floor(denom))
}
