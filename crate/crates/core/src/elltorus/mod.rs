//! Points of `E (x) Lambda`, the coroot lattice tensored with an elliptic
//! curve, and their Weyl-orbit canonical forms.
//!
//! A point of `E = C / (Z + tau Z)` is written `a + b tau` with rational
//! `a, b` in `[0, 1)`; all arithmetic is exact. A point of the torus
//! `E (x) Lambda` is a vector of curve points in the simple-coroot basis,
//! `mu = sum_i x_i (x) alpha_i^vee`. The Weyl group acts through the integer
//! matrices of [`crate::rootsys::WeylElement`], and two points describe the
//! same semistable class exactly when they lie in one orbit.
//!
//! Orbit questions are answered through [`ELambdaPoint::canonicalize`],
//! which returns the lexicographically least point of the orbit together
//! with the order of the stabilizer; see [`canon`] for the search itself.

mod canon;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, Integer, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeylElement};

pub use canon::OrbitCanonicalForm;

/// A torsion-or-rational point `a + b tau` of the curve, with `a, b` reduced
/// rationals in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EPoint {
    a: BigRational,
    b: BigRational,
}

fn mod_one(r: BigRational) -> BigRational {
    let f = r.floor();
    r - f
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |reason: &str| Error::PointFormat {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty coordinate"));
    }
    let (num_s, den_s) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad("not an integer or a/b"))?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad("not an integer or a/b"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl EPoint {
    pub fn new(a: BigRational, b: BigRational) -> EPoint {
        EPoint {
            a: mod_one(a),
            b: mod_one(b),
        }
    }

    pub fn zero() -> EPoint {
        EPoint {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    /// Parses `"a"` or `"a,b"` where each coordinate is an integer or a
    /// fraction `p/q`; values are reduced into `[0, 1)`.
    pub fn parse(s: &str) -> Result<EPoint> {
        let t = s.trim();
        let (a_s, b_s) = match t.split_once(',') {
            Some((a, b)) => (a, Some(b)),
            None => (t, None),
        };
        let a = parse_rational(a_s)?;
        let b = match b_s {
            Some(b) => parse_rational(b)?,
            None => BigRational::zero(),
        };
        Ok(EPoint::new(a, b))
    }

    pub fn coords(&self) -> (&BigRational, &BigRational) {
        (&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_two_torsion(&self) -> bool {
        self.double().is_zero()
    }

    /// The three nonzero points of order two.
    pub fn two_torsion_nonzero() -> [EPoint; 3] {
        let h = BigRational::new(BigInt::one(), BigInt::from(2));
        [
            EPoint::new(h.clone(), BigRational::zero()),
            EPoint::new(BigRational::zero(), h.clone()),
            EPoint::new(h.clone(), h),
        ]
    }

    /// Order as a group element, `lcm(den(a), den(b))`; the identity has
    /// order 1. Every representable point is torsion.
    pub fn order(&self) -> BigUint {
        let da = self.a.denom().magnitude();
        let db = self.b.denom().magnitude();
        da.lcm(db)
    }

    pub fn double(&self) -> EPoint {
        self.scalar_mul(2)
    }

    pub fn neg(&self) -> EPoint {
        EPoint::new(-self.a.clone(), -self.b.clone())
    }

    pub fn add(&self, other: &EPoint) -> EPoint {
        EPoint::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn sub(&self, other: &EPoint) -> EPoint {
        EPoint::new(&self.a - &other.a, &self.b - &other.b)
    }

    pub fn scalar_mul(&self, k: i64) -> EPoint {
        let k = BigRational::from(BigInt::from(k));
        EPoint::new(&self.a * &k, &self.b * &k)
    }
}

impl PartialOrd for EPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.a, f)?;
        write!(f, ",")?;
        fmt_rational(&self.b, f)
    }
}

impl Serialize for EPoint {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let show = |r: &BigRational| {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        };
        [show(&self.a), show(&self.b)].serialize(ser)
    }
}

impl<'de> Deserialize<'de> for EPoint {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<EPoint, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(de)?;
        let a = parse_rational(&a).map_err(D::Error::custom)?;
        let b = parse_rational(&b).map_err(D::Error::custom)?;
        Ok(EPoint::new(a, b))
    }
}

/// A point `mu` of `E (x) Lambda` in simple-coroot coordinates, tied to its
/// root system.
#[derive(Debug, Clone)]
pub struct ELambdaPoint {
    system: Arc<RootSystem>,
    coords: Vec<EPoint>,
}

impl PartialEq for ELambdaPoint {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.coords == other.coords
    }
}
impl Eq for ELambdaPoint {}

impl fmt::Display for ELambdaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl ELambdaPoint {
    pub fn new(system: Arc<RootSystem>, coords: Vec<EPoint>) -> Result<ELambdaPoint> {
        if coords.len() != system.rank() {
            return Err(Error::CoordinateLength {
                got: coords.len(),
                expected: system.rank(),
            });
        }
        Ok(ELambdaPoint { system, coords })
    }

    pub fn zero(system: Arc<RootSystem>) -> ELambdaPoint {
        let coords = vec![EPoint::zero(); system.rank()];
        ELambdaPoint { system, coords }
    }

    /// Parses semicolon-separated curve points, e.g. `"1/2,0;1/3,0;0"`.
    pub fn parse(system: Arc<RootSystem>, s: &str) -> Result<ELambdaPoint> {
        let coords = s
            .trim()
            .split(';')
            .map(EPoint::parse)
            .collect::<Result<Vec<_>>>()?;
        ELambdaPoint::new(system, coords)
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn coords(&self) -> &[EPoint] {
        &self.coords
    }

    /// Value of the root at `index` on this point, `alpha(mu)`, a point of
    /// the curve.
    pub fn root_value(&self, index: usize) -> Result<EPoint> {
        let root = self.system.root(index)?;
        let mut acc = EPoint::zero();
        for (i, x) in self.coords.iter().enumerate() {
            let p = self.system.pairing_with_simple_coroot(root, i);
            if p != 0 {
                acc = acc.add(&x.scalar_mul(p));
            }
        }
        Ok(acc)
    }

    /// Indices of the roots vanishing on this point. Always closed under
    /// negation and root addition.
    pub fn vanishing_roots(&self) -> Vec<usize> {
        (0..self.system.num_roots())
            .filter(|&i| self.root_value(i).expect("index in range").is_zero())
            .collect()
    }

    /// No root vanishes: the centralizer is the maximal torus alone.
    pub fn is_torus_regular(&self) -> bool {
        self.vanishing_roots().is_empty()
    }

    /// `h^0` of the adjoint bundle of the split bundle for this point:
    /// the rank plus one per vanishing root.
    pub fn split_aut_dim(&self) -> usize {
        self.system.rank() + self.vanishing_roots().len()
    }

    /// Simple reflection `s_i` in coroot coordinates.
    pub fn reflect(&self, i: usize) -> Result<ELambdaPoint> {
        if i >= self.system.rank() {
            return Err(Error::ReflectionIndex {
                index: i,
                rank: self.system.rank(),
            });
        }
        let cartan = self.system.cartan();
        let mut pairing = EPoint::zero();
        for (j, x) in self.coords.iter().enumerate() {
            let c = cartan[j][i];
            if c != 0 {
                pairing = pairing.add(&x.scalar_mul(c));
            }
        }
        let mut coords = self.coords.clone();
        coords[i] = coords[i].sub(&pairing);
        Ok(ELambdaPoint {
            system: self.system.clone(),
            coords,
        })
    }

    pub fn weyl_apply(&self, w: &WeylElement) -> Result<ELambdaPoint> {
        if w.rank() != self.system.rank() {
            return Err(Error::CoordinateLength {
                got: w.rank(),
                expected: self.system.rank(),
            });
        }
        let m = w.matrix();
        let coords = (0..self.system.rank())
            .map(|i| {
                let mut acc = EPoint::zero();
                for (j, x) in self.coords.iter().enumerate() {
                    if m[i][j] != 0 {
                        acc = acc.add(&x.scalar_mul(m[i][j]));
                    }
                }
                acc
            })
            .collect();
        Ok(ELambdaPoint {
            system: self.system.clone(),
            coords,
        })
    }

    /// The least point of the Weyl orbit (coordinates compared in order,
    /// each as the pair `(a, b)`), with the stabilizer order.
    pub fn canonicalize(&self) -> OrbitCanonicalForm {
        canon::canonicalize(self)
    }

    /// Whether two points lie in one Weyl orbit.
    pub fn orbit_equal(&self, other: &ELambdaPoint) -> Result<bool> {
        if self.system != other.system {
            return Err(Error::SystemMismatch);
        }
        if self.fingerprint() != other.fingerprint() {
            return Ok(false);
        }
        Ok(self.canonicalize().representative == other.canonicalize().representative)
    }

    /// Size of the Weyl orbit, `|W| / |stabilizer|`.
    pub fn orbit_size(&self) -> BigUint {
        let stab = self.canonicalize().stabilizer_order;
        let w = self.system.weyl_order();
        debug_assert!((w % &stab).is_zero());
        w / stab
    }

    /// Enumerates the whole orbit, erroring above `bound` points.
    pub fn enumerate_orbit(&self, bound: usize) -> Result<Vec<ELambdaPoint>> {
        let mut seen: std::collections::HashSet<Vec<EPoint>> = std::collections::HashSet::new();
        let mut queue: std::collections::VecDeque<Vec<EPoint>> = std::collections::VecDeque::new();
        seen.insert(self.coords.clone());
        queue.push_back(self.coords.clone());
        let mut out = Vec::new();
        while let Some(coords) = queue.pop_front() {
            let point = ELambdaPoint {
                system: self.system.clone(),
                coords,
            };
            for i in 0..self.system.rank() {
                let next = point.reflect(i).expect("index in range");
                if !seen.contains(&next.coords) {
                    if seen.len() >= bound {
                        return Err(Error::OrbitBound { bound });
                    }
                    seen.insert(next.coords.clone());
                    queue.push_back(next.coords);
                }
            }
            out.push(point);
        }
        Ok(out)
    }

    /// Orbit-invariant 64-bit digest: FNV-1a over the sorted multiset of
    /// root values. Collisions are possible; equal fingerprints are a
    /// prefilter, not a proof.
    pub fn fingerprint(&self) -> u64 {
        let mut values: Vec<String> = (0..self.system.num_roots())
            .map(|i| self.root_value(i).expect("index in range").to_string())
            .collect();
        values.sort_unstable();
        let mut h = Fnv1a::new();
        format!("{}", self.system).hash(&mut h);
        values.hash(&mut h);
        h.finish()
    }
}

/// FNV-1a, fixed keys: stable across runs and platforms, unlike the
/// standard library's default hasher.
struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Fnv1a {
        Fnv1a(0xcbf29ce484222325)
    }
}

impl Hasher for Fnv1a {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }
}
