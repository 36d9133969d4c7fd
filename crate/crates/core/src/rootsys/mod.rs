//! Simple root systems: construction, invariants, Weyl elements, subsystems.
//!
//! Roots are stored as integer coefficient vectors over the simple roots;
//! coroots as integer vectors over the simple coroots. All pairings go through
//! the Cartan matrix, so every computation in this module is exact integer
//! arithmetic.
//!
//! Node numbering follows the usual plates:
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n          (n short)
//! C_n   1 - 2 - ... - (n-1) <= n          (n long)
//! D_n   1 - 2 - ... - (n-2) - (n-1)
//!                       \ n
//! E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                    (1, 2 long)
//! G_2   1 ≡ 2                             (2 long)
//! ```
//!
//! The Cartan matrix convention is `cartan[i][j] = <alpha_j, alpha_i^vee>`,
//! and short roots are normalized to squared length 2.

mod exponents;
mod orbits;
mod subsystem;
mod weyl;

pub use subsystem::{SubsystemComponent, SubsystemReport};
pub use weyl::WeylElement;

pub(crate) use orbits::{weight_orbit, CanonTables};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The seven families of simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Kind {
    pub const ALL: [Kind; 7] = [Kind::A, Kind::B, Kind::C, Kind::D, Kind::E, Kind::F, Kind::G];

    /// Valid rank range of the family.
    pub fn rank_ok(self, rank: usize) -> bool {
        match self {
            Kind::A => rank >= 1,
            Kind::B | Kind::C => rank >= 2,
            Kind::D => rank >= 3,
            Kind::E => (6..=8).contains(&rank),
            Kind::F => rank == 4,
            Kind::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Kind::A | Kind::D | Kind::E)
    }

    /// Number of roots of the simple system of this kind and rank.
    pub fn num_roots(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Kind::A => n * (n + 1),
            Kind::B | Kind::C => 2 * n * n,
            Kind::D => 2 * n * (n - 1),
            Kind::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Kind::F => 48,
            Kind::G => 12,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::E => "E",
            Kind::F => "F",
            Kind::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "C" | "c" => Ok(Kind::C),
            "D" | "d" => Ok(Kind::D),
            "E" | "e" => Ok(Kind::E),
            "F" | "f" => Ok(Kind::F),
            "G" | "g" => Ok(Kind::G),
            other => Err(Error::PointFormat {
                input: other.to_string(),
                reason: "expected one of A B C D E F G".into(),
            }),
        }
    }
}

/// A simple root system with all derived invariants computed at build time.
///
/// Instances are immutable; share them through [`RootSystem::get`], which
/// caches one `Arc` per `(kind, rank)`.
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_lengths: Vec<i64>,
    roots: Vec<Vec<i64>>,
    root_lookup: HashMap<Vec<i64>, usize>,
    root_lengths: Vec<i64>,
    coroots: Vec<Vec<i64>>,
    highest: usize,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    exponents: Vec<i64>,
    weyl_order: BigUint,
    cartan_det: i64,
    canon_tables: OnceLock<CanonTables>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}{})", self.kind, self.rank)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}
impl Eq for RootSystem {}

impl RootSystem {
    /// Builds the system from scratch. Prefer [`RootSystem::get`] for shared use.
    pub fn build(kind: Kind, rank: usize) -> Result<RootSystem> {
        if !kind.rank_ok(rank) {
            return Err(Error::InvalidType { kind, rank });
        }
        let (cartan, simple_lengths) = cartan_and_lengths(kind, rank);

        // Close the simple roots under all simple reflections.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            seen.insert(v.clone(), usize::MAX);
            queue.push(v);
        }
        while let Some(v) = queue.pop() {
            for i in 0..rank {
                let w = reflect_root_raw(&cartan, i, &v);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), usize::MAX);
                    queue.push(w);
                }
            }
            roots.push(v);
        }
        roots.sort_by_key(|v| (height(v), v.clone()));
        let mut root_lookup = HashMap::with_capacity(roots.len());
        for (i, v) in roots.iter().enumerate() {
            root_lookup.insert(v.clone(), i);
        }

        // Squared lengths via the symmetrized Cartan matrix
        // B[i][j] = (alpha_i, alpha_j) = cartan[i][j] * len_i / 2.
        let gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| cartan[i][j] * simple_lengths[i] / 2)
                    .collect()
            })
            .collect();
        debug_assert!((0..rank).all(|i| (0..rank).all(|j| gram[i][j] == gram[j][i])));
        let root_lengths: Vec<i64> = roots
            .iter()
            .map(|c| {
                let mut s = 0i64;
                for i in 0..rank {
                    for j in 0..rank {
                        s += c[i] * gram[i][j] * c[j];
                    }
                }
                s
            })
            .collect();

        // Coroot of alpha = sum c_j alpha_j is sum (c_j len_j / len_alpha) alpha_j^vee.
        let coroots: Vec<Vec<i64>> = roots
            .iter()
            .zip(&root_lengths)
            .map(|(c, &len)| {
                c.iter()
                    .zip(&simple_lengths)
                    .map(|(&cj, &lj)| {
                        let num = cj * lj;
                        debug_assert_eq!(num % len, 0);
                        num / len
                    })
                    .collect()
            })
            .collect();

        // Highest root: maximal height; dominates every root coefficientwise.
        let highest = roots.len() - 1;
        let marks = roots[highest].clone();
        for v in &roots {
            if v.iter().zip(&marks).any(|(a, b)| a > b) {
                return Err(Error::SubsetNotClosed {
                    reason: "no dominant highest root".into(),
                });
            }
        }
        let comarks = coroots[highest].clone();

        let exponents = exponents::from_coxeter_element(&cartan, roots.len())?;
        let mut weyl_order = BigUint::from(1u32);
        for &m in &exponents {
            weyl_order *= BigUint::from((m + 1) as u64);
        }
        let cartan_det = det(&cartan);

        Ok(RootSystem {
            kind,
            rank,
            cartan,
            simple_lengths,
            roots,
            root_lookup,
            root_lengths,
            coroots,
            highest,
            marks,
            comarks,
            exponents,
            weyl_order,
            cartan_det,
            canon_tables: OnceLock::new(),
        })
    }

    /// Cached, shared construction.
    pub fn get(kind: Kind, rank: usize) -> Result<Arc<RootSystem>> {
        static CACHE: OnceLock<Mutex<HashMap<(Kind, usize), Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(sys) = cache.lock().unwrap().get(&(kind, rank)) {
            return Ok(sys.clone());
        }
        let built = Arc::new(RootSystem::build(kind, rank)?);
        let mut guard = cache.lock().unwrap();
        Ok(guard.entry((kind, rank)).or_insert(built).clone())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots as coefficient vectors over the simple roots, sorted by
    /// (height, coefficients); the highest root is last.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, index: usize) -> Result<&[i64]> {
        self.roots
            .get(index)
            .map(|v| v.as_slice())
            .ok_or(Error::RootIndex {
                index,
                count: self.roots.len(),
            })
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.root_lookup.get(coeffs).copied()
    }

    /// Coroot of the root at `index`, over the simple coroots.
    pub fn coroot(&self, index: usize) -> &[i64] {
        &self.coroots[index]
    }

    /// Squared length of the root at `index` (short roots have length 2).
    pub fn root_length(&self, index: usize) -> i64 {
        self.root_lengths[index]
    }

    pub fn simple_lengths(&self) -> &[i64] {
        &self.simple_lengths
    }

    /// Indices of the positive roots.
    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(move |&i| height(&self.roots[i]) > 0)
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    /// Coefficients of the highest root over the simple roots.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Coefficients of the coroot dual to the highest root over the simple
    /// coroots.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// Exponents, ascending.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Degrees of the basic invariants: exponents + 1, ascending.
    pub fn casimir_weights(&self) -> Vec<i64> {
        self.exponents.iter().map(|m| m + 1).collect()
    }

    /// Order of the Weyl group, as the product of the Casimir weights.
    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    pub fn cartan_det(&self) -> i64 {
        self.cartan_det
    }

    /// Coxeter number.
    pub fn coxeter_number(&self) -> i64 {
        *self.exponents.last().expect("rank >= 1") + 1
    }

    /// Dual Coxeter number: 1 + sum of comarks.
    pub fn dual_coxeter_number(&self) -> i64 {
        1 + self.comarks.iter().sum::<i64>()
    }

    /// Dimension of the corresponding simple Lie algebra.
    pub fn dim_g(&self) -> usize {
        self.rank + self.roots.len()
    }

    /// Orbit of a vector in fundamental-weight coordinates under the full
    /// Weyl group, sorted. Errors once the orbit would exceed `bound`.
    pub fn weight_orbit(&self, weight: &[i64], bound: usize) -> Result<Vec<Vec<i64>>> {
        if weight.len() != self.rank {
            return Err(Error::CoordinateLength {
                got: weight.len(),
                expected: self.rank,
            });
        }
        let gens: Vec<usize> = (0..self.rank).collect();
        weight_orbit(&self.cartan, &gens, weight, bound)
    }

    /// Weights of the weighted projective space of semistable classes:
    /// `(1, g_1, ..., g_r)` with `g_i` the comarks.
    pub fn wp_weights(&self) -> Vec<i64> {
        let mut w = Vec::with_capacity(self.rank + 1);
        w.push(1);
        w.extend_from_slice(&self.comarks);
        w
    }

    /// Checks `|W| = r! * (g_1 ... g_r) * det(cartan)` for simply laced
    /// systems, computing both sides independently.
    pub fn verify_weyl_identity(&self) -> Result<bool> {
        if !self.kind.is_simply_laced() {
            return Err(Error::NotSimplyLaced {
                kind: self.kind,
                rank: self.rank,
            });
        }
        let mut rhs = BigUint::from(1u32);
        for k in 1..=self.rank {
            rhs *= BigUint::from(k as u64);
        }
        for &g in &self.comarks {
            rhs *= BigUint::from(g as u64);
        }
        rhs *= BigUint::from(self.cartan_det as u64);
        Ok(rhs == self.weyl_order)
    }

    /// `<alpha, alpha_i^vee>` for a root given by its coefficient vector.
    pub fn pairing_with_simple_coroot(&self, coeffs: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * coeffs[j]).sum()
    }

    /// `<alpha_a, alpha_b^vee>` between the roots at two indices.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        let ca = &self.roots[a];
        self.coroots[b]
            .iter()
            .enumerate()
            .map(|(k, &dk)| dk * self.pairing_with_simple_coroot(ca, k))
            .sum()
    }

    /// Simple reflection on a root coefficient vector.
    pub fn reflect_root(&self, i: usize, coeffs: &[i64]) -> Result<Vec<i64>> {
        self.check_reflection(i, coeffs.len())?;
        Ok(reflect_root_raw(&self.cartan, i, coeffs))
    }

    /// Simple reflection on coroot coordinates (the representation Weyl
    /// element matrices act in).
    pub fn reflect_coroot(&self, i: usize, coords: &[i64]) -> Result<Vec<i64>> {
        self.check_reflection(i, coords.len())?;
        Ok(reflect_coroot_raw(&self.cartan, i, coords))
    }

    fn check_reflection(&self, i: usize, len: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::ReflectionIndex {
                index: i,
                rank: self.rank,
            });
        }
        if len != self.rank {
            return Err(Error::CoordinateLength {
                got: len,
                expected: self.rank,
            });
        }
        Ok(())
    }

    pub(crate) fn canon_tables(&self) -> &CanonTables {
        self.canon_tables
            .get_or_init(|| CanonTables::build(&self.cartan))
    }
}

/// Height of a root: sum of its coefficients over the simple roots.
pub fn height(coeffs: &[i64]) -> i64 {
    coeffs.iter().sum()
}

pub(crate) fn reflect_root_raw(cartan: &[Vec<i64>], i: usize, c: &[i64]) -> Vec<i64> {
    let pairing: i64 = (0..c.len()).map(|j| cartan[i][j] * c[j]).sum();
    let mut out = c.to_vec();
    out[i] -= pairing;
    out
}

pub(crate) fn reflect_coroot_raw(cartan: &[Vec<i64>], i: usize, x: &[i64]) -> Vec<i64> {
    let pairing: i64 = (0..x.len()).map(|j| cartan[j][i] * x[j]).sum();
    let mut out = x.to_vec();
    out[i] -= pairing;
    out
}

/// Reflection on integer vectors in fundamental-weight coordinates.
pub(crate) fn reflect_weight_raw(cartan: &[Vec<i64>], i: usize, c: &[i64]) -> Vec<i64> {
    let ci = c[i];
    let mut out = c.to_vec();
    for (j, o) in out.iter_mut().enumerate() {
        *o -= ci * cartan[j][i];
    }
    out
}

fn cartan_and_lengths(kind: Kind, rank: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let single = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    let lengths;
    match kind {
        Kind::A => {
            for i in 0..n - 1 {
                single(&mut c, i, i + 1);
            }
            lengths = vec![2; n];
        }
        Kind::B => {
            for i in 0..n.saturating_sub(2) {
                single(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
            let mut l = vec![4; n];
            l[n - 1] = 2;
            lengths = l;
        }
        Kind::C => {
            for i in 0..n.saturating_sub(2) {
                single(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
            let mut l = vec![2; n];
            l[n - 1] = 4;
            lengths = l;
        }
        Kind::D => {
            for i in 0..n - 2 {
                single(&mut c, i, i + 1);
            }
            single(&mut c, n - 3, n - 1);
            lengths = vec![2; n];
        }
        Kind::E => {
            single(&mut c, 0, 2);
            single(&mut c, 1, 3);
            for i in 2..n - 1 {
                single(&mut c, i, i + 1);
            }
            lengths = vec![2; n];
        }
        Kind::F => {
            single(&mut c, 0, 1);
            c[1][2] = -1;
            c[2][1] = -2;
            single(&mut c, 2, 3);
            lengths = vec![4, 4, 2, 2];
        }
        Kind::G => {
            c[0][1] = -3;
            c[1][0] = -1;
            lengths = vec![2, 6];
        }
    }
    (c, lengths)
}

/// Integer determinant (Bareiss).
fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&p| a[p][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
