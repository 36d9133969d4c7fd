//! Exponents from the eigenvalues of a Coxeter element.
//!
//! The product of all simple reflections has eigenvalues exp(2*pi*i*m_j/h)
//! with h the Coxeter number. Its characteristic polynomial therefore splits
//! into cyclotomic factors Phi_d with d | h, and each factor Phi_d contributes
//! the exponents { t*h/d : gcd(t, d) = 1 }. Everything below is exact integer
//! arithmetic; no eigenvalue is ever approximated.

use std::collections::HashMap;

use num::{BigInt, Integer, Zero};

use crate::error::{Error, Result};

use super::reflect_coroot_raw;

/// Exponents of the system with the given Cartan matrix, ascending.
pub(crate) fn from_coxeter_element(cartan: &[Vec<i64>], num_roots: usize) -> Result<Vec<i64>> {
    let r = cartan.len();
    if num_roots % r != 0 {
        return Err(Error::SubsetNotClosed {
            reason: format!("{num_roots} roots do not fill Coxeter orbits of rank {r}"),
        });
    }
    let h = (num_roots / r) as i64;

    // Matrix of s_1 s_2 ... s_r on coroot coordinates.
    let mut m: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0i64; r];
            e[i] = 1;
            e
        })
        .collect();
    for i in 0..r {
        // Right-multiplying by S_i maps column space; equivalently reflect
        // each basis image. Apply s_i to each column vector of m^T: compose
        // as m := m * S_i by reflecting the rows of the transpose. Simpler:
        // compose linear maps on column vectors directly.
        m = compose_with_reflection(cartan, &m, i);
    }

    let charpoly = char_poly(&m);
    let mut work = charpoly;
    let mut exps: Vec<i64> = Vec::with_capacity(r);
    let mut cyclo_cache: HashMap<i64, Vec<BigInt>> = HashMap::new();
    for d in 2..=h {
        if h % d != 0 {
            continue;
        }
        let phi = cyclotomic(d, &mut cyclo_cache);
        loop {
            match divide_exact(&work, &phi) {
                Some(q) => {
                    work = q;
                    for t in 1..=d {
                        if t.gcd(&d) == 1 {
                            exps.push(t * h / d);
                        }
                    }
                }
                None => break,
            }
        }
    }
    if work.len() != 1 || work[0] != BigInt::from(1) {
        return Err(Error::SubsetNotClosed {
            reason: "Coxeter element has an eigenvalue that is not a primitive h-th root".into(),
        });
    }
    if exps.len() != r {
        return Err(Error::SubsetNotClosed {
            reason: format!("expected {r} exponents, found {}", exps.len()),
        });
    }
    exps.sort_unstable();
    Ok(exps)
}

/// m := m * S_i, where S_i is the coroot-coordinate matrix of s_i.
fn compose_with_reflection(cartan: &[Vec<i64>], m: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    // S_i differs from the identity only in row i, so (m * S_i) differs from
    // m only in column i: new_col_i = m * (S_i e_i column) ... easier to act
    // on basis vectors: column j of the product is m applied to S_i e_j.
    let r = m.len();
    let mut out = vec![vec![0i64; r]; r];
    for j in 0..r {
        let mut e = vec![0i64; r];
        e[j] = 1;
        let se = reflect_coroot_raw(cartan, i, &e);
        for (k, row) in out.iter_mut().enumerate() {
            let mut s = 0i64;
            for (l, &v) in se.iter().enumerate() {
                s += m[k][l] * v;
            }
            row[j] = s;
        }
    }
    out
}

/// Characteristic polynomial det(xI - M), coefficients ascending in x,
/// via Faddeev-LeVerrier (all divisions exact).
fn char_poly(m: &[Vec<i64>]) -> Vec<BigInt> {
    let r = m.len();
    let a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); r + 1];
    coeffs[r] = BigInt::from(1);
    let mut mk = a.clone();
    for k in 1..=r {
        let tr: BigInt = (0..r).map(|i| mk[i][i].clone()).sum();
        let c = -tr / BigInt::from(k as i64);
        coeffs[r - k] = c.clone();
        if k == r {
            break;
        }
        // mk := a * (mk + c I)
        let mut shifted = mk;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &c;
        }
        let mut next = vec![vec![BigInt::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let mut s = BigInt::zero();
                for (l, sh_row) in shifted.iter().enumerate() {
                    s += &a[i][l] * &sh_row[j];
                }
                next[i][j] = s;
            }
        }
        mk = next;
    }
    coeffs
}

/// d-th cyclotomic polynomial, coefficients ascending.
fn cyclotomic(d: i64, cache: &mut HashMap<i64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    // x^d - 1 divided by the cyclotomic polynomials of the proper divisors.
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::from(-1);
    p[d as usize] = BigInt::from(1);
    for e in 1..d {
        if d % e == 0 {
            let phi_e = cyclotomic(e, cache);
            p = divide_exact(&p, &phi_e).expect("cyclotomic division is exact");
        }
    }
    cache.insert(d, p.clone());
    p
}

/// Exact polynomial division; `None` if the remainder is nonzero or the
/// quotient would not be integral (divisor is monic here, so integrality
/// always holds when it divides).
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], BigInt::from(1));
    let qn = rem.len() - den.len();
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            let t = dj * &c;
            rem[k + j] -= t;
        }
    }
    if rem.iter().all(BigInt::is_zero) {
        Some(quot)
    } else {
        None
    }
}
