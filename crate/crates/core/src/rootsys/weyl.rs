//! Weyl group elements as words in the simple reflections.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{reflect_coroot_raw, reflect_root_raw, RootSystem};

/// A Weyl group element: a word in the simple reflections together with its
/// matrix on coroot coordinates.
///
/// The word `[i_1, ..., i_k]` denotes the composition `s_{i_1} ∘ ... ∘ s_{i_k}`
/// (rightmost letter acts first); indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn weyl_element(&self, word: &[usize]) -> Result<WeylElement> {
        let r = self.rank();
        for &i in word {
            if i >= r {
                return Err(Error::ReflectionIndex { index: i, rank: r });
            }
        }
        // Columns of the matrix are the images of the basis coroots.
        let mut matrix = vec![vec![0i64; r]; r];
        for j in 0..r {
            let mut e = vec![0i64; r];
            e[j] = 1;
            for &l in word.iter().rev() {
                e = reflect_coroot_raw(self.cartan(), l, &e);
            }
            for (k, row) in matrix.iter_mut().enumerate() {
                row[j] = e[k];
            }
        }
        Ok(WeylElement { word: word.to_vec(), matrix })
    }

    /// Image of a root (by coefficient vector) under the element.
    pub fn apply_to_root(&self, w: &WeylElement, coeffs: &[i64]) -> Result<Vec<i64>> {
        if coeffs.len() != self.rank() {
            return Err(Error::CoordinateLength {
                got: coeffs.len(),
                expected: self.rank(),
            });
        }
        let mut v = coeffs.to_vec();
        for &l in w.word.iter().rev() {
            v = reflect_root_raw(self.cartan(), l, &v);
        }
        Ok(v)
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let matrix = (0..rank)
            .map(|i| {
                let mut row = vec![0i64; rank];
                row[i] = 1;
                row
            })
            .collect();
        WeylElement { word: Vec::new(), matrix }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Matrix on coroot coordinates.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Apply to an integer vector of coroot coordinates.
    pub fn apply_coroot(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(&m, &xi)| m * xi).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| v == i64::from(i == j))
        })
    }
}
