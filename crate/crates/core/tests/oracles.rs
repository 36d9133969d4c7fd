//! Independent re-derivations of the structural invariants. Each test
//! recomputes a quantity by a route the library does not use and compares.

use ellimod_core::verify::all_systems;
use num::{BigInt, BigUint, One, Zero};

/// The heights of the positive roots, counted per height, form the conjugate
/// partition of the exponents. The library finds exponents through the
/// eigenvalues of the Coxeter rotation, so this is a genuinely different
/// route.
#[test]
fn exponents_by_height_duality() {
    for sys in all_systems() {
        let mut counts: Vec<usize> = Vec::new();
        for idx in sys.positive_roots() {
            let height: i64 = sys.root(idx).unwrap().iter().sum();
            let h = height as usize;
            if counts.len() < h {
                counts.resize(h, 0);
            }
            counts[h - 1] += 1;
        }
        let max_count = counts[0];
        let mut dual: Vec<i64> = (1..=max_count)
            .map(|i| counts.iter().filter(|&&c| c >= i).count() as i64)
            .collect();
        dual.sort_unstable();
        assert_eq!(sys.exponents(), dual.as_slice(), "{sys}");
    }
}

/// For small groups the Weyl order is checked by brute force: a strictly
/// dominant weight has trivial stabilizer, so its orbit is the whole group.
#[test]
fn weyl_order_by_orbit_enumeration() {
    let limit = BigUint::from(100_000u32);
    let mut checked = 0;
    for sys in all_systems() {
        if *sys.weyl_order() > limit {
            continue;
        }
        let rho = vec![1i64; sys.rank()];
        let orbit = sys.weight_orbit(&rho, 120_000).unwrap();
        assert_eq!(BigUint::from(orbit.len()), *sys.weyl_order(), "{sys}");
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} systems were small enough");
}

/// The Coxeter number is one more than the height of the highest root, and
/// the root count is rank times the Coxeter number.
#[test]
fn coxeter_number_from_the_highest_root() {
    for sys in all_systems() {
        let theta = sys.root(sys.highest_root()).unwrap();
        let height: i64 = theta.iter().sum();
        assert_eq!(sys.coxeter_number(), height + 1, "{sys}");
        assert_eq!(sys.num_roots() as i64, sys.rank() as i64 * sys.coxeter_number(), "{sys}");
    }
}

/// Fraction-free Gaussian elimination of the Cartan matrix, independent of
/// whatever expansion the library uses.
#[test]
fn cartan_determinant_by_elimination() {
    for sys in all_systems() {
        let n = sys.rank();
        let mut m: Vec<Vec<BigInt>> = sys
            .cartan()
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !m[i][k].is_zero()).unwrap();
                m.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let det = sign * &m[n - 1][n - 1];
        assert_eq!(det, BigInt::from(sys.cartan_det()), "{sys}");
    }
}

/// Comarks through simple-root lengths: comark times squared length equals
/// mark times the squared length of the highest root's slot, i.e. the two
/// label systems are proportional coordinate by coordinate.
#[test]
fn marks_and_comarks_are_length_rescalings() {
    for sys in all_systems() {
        let theta = sys.root(sys.highest_root()).unwrap().to_vec();
        assert_eq!(sys.marks(), theta.as_slice(), "{sys} marks are the top coefficients");
        let lengths = sys.simple_lengths();
        let theta_len = sys.root_length(sys.highest_root());
        for i in 0..sys.rank() {
            assert_eq!(
                sys.comarks()[i] * theta_len,
                sys.marks()[i] * lengths[i],
                "{sys} node {i}"
            );
        }
    }
}
