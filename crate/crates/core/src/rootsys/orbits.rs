//! Orbits of integer weight vectors, and the coset tables the canonical-form
//! search runs on.
//!
//! Vectors here live in fundamental-weight coordinates (integer pairings with
//! the simple coroots); the reflection action is `c_j -= c_i * cartan[j][i]`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

use super::reflect_weight_raw;

/// Orbit of `start` under the subgroup generated by the listed simple
/// reflections, aborting once it exceeds `bound` elements.
pub(crate) fn weight_orbit(
    cartan: &[Vec<i64>],
    gens: &[usize],
    start: &[i64],
    bound: usize,
) -> Result<Vec<Vec<i64>>> {
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    seen.insert(start.to_vec(), ());
    queue.push_back(start.to_vec());
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        out.push(v.clone());
        for &i in gens {
            let w = reflect_weight_raw(cartan, i, &v);
            if !seen.contains_key(&w) {
                if seen.len() >= bound {
                    return Err(Error::OrbitBound { bound });
                }
                seen.insert(w.clone(), ());
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// One candidate at a level of the canonical-form search: the transformed
/// fundamental weight (whose pairing with a point gives the coordinate value
/// the candidate would produce) and the coroot-coordinate matrix that carries
/// the point into the corresponding coset.
pub(crate) struct CosetEntry {
    pub psi: Vec<i64>,
    pub action: Vec<Vec<i64>>,
}

/// Coset tables for the parabolic chain W ⊇ P_1 ⊇ ... ⊇ P_r = 1, where P_k is
/// generated by the simple reflections with index ≥ k. Level k lists the
/// orbit of the k-th fundamental weight under P_k's predecessor, together
/// with coset-representative actions. The product of the level sizes is |W|.
pub(crate) struct CanonTables {
    pub levels: Vec<Vec<CosetEntry>>,
}

impl CanonTables {
    pub(crate) fn build(cartan: &[Vec<i64>]) -> CanonTables {
        let r = cartan.len();
        let mut levels = Vec::with_capacity(r);
        for k in 0..r {
            let gens: Vec<usize> = (k..r).collect();
            let mut start = vec![0i64; r];
            start[k] = 1;
            let identity: Vec<Vec<i64>> = (0..r)
                .map(|i| {
                    let mut row = vec![0i64; r];
                    row[i] = 1;
                    row
                })
                .collect();
            let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
            let mut entries: Vec<CosetEntry> = Vec::new();
            seen.insert(start.clone(), 0);
            entries.push(CosetEntry {
                psi: start,
                action: identity,
            });
            let mut head = 0;
            while head < entries.len() {
                let psi = entries[head].psi.clone();
                let action = entries[head].action.clone();
                head += 1;
                for &i in &gens {
                    let psi2 = reflect_weight_raw(cartan, i, &psi);
                    if seen.contains_key(&psi2) {
                        continue;
                    }
                    // Entries keep the invariant psi = r^{-1} ϖ_k with
                    // `action` the coroot matrix of the representative r, so
                    // psi' = s_i psi has representative r' = r s_i. Right
                    // multiplication by a coroot reflection transforms each
                    // row by the dual (weight-side) reflection formula.
                    let action2: Vec<Vec<i64>> = action
                        .iter()
                        .map(|row| reflect_weight_raw(cartan, i, row))
                        .collect();
                    seen.insert(psi2.clone(), entries.len());
                    entries.push(CosetEntry {
                        psi: psi2,
                        action: action2,
                    });
                }
            }
            levels.push(entries);
        }
        CanonTables { levels }
    }
}
