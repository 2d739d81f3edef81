//! Exact linear algebra over the rationals.
//!
//! Square systems are solved with fraction-free (Bareiss) elimination on
//! integer rows. Linear dependencies among a growing list of vectors are found
//! by incremental row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::BigRat;

fn integer_row(row: &[BigRat]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in row {
        den = den.lcm(c.denom());
    }
    row.iter().map(|c| c.numer() * (&den / c.denom())).collect()
}

/// Solve `A x = b` for square nonsingular `A`. Returns `None` if singular.
pub fn solve(a: &[Vec<BigRat>], b: &[BigRat]) -> Option<Vec<BigRat>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            integer_row(&r)
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let piv = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, piv);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![BigRat::zero(); n];
    for i in (0..n).rev() {
        let mut s = BigRat::from_integer(m[i][n].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                s -= BigRat::from_integer(m[i][j].clone()) * &x[j];
            }
        }
        x[i] = s / BigRat::from_integer(m[i][i].clone());
    }
    Some(x)
}

/// Determinant by Bareiss elimination on an integer matrix.
pub fn det_int(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut prev = BigInt::one();
    let mut neg = false;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(k, piv);
            neg = !neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Incremental detector for the first linear dependency in a sequence of
/// vectors `v_0, v_1, ...` of a fixed dimension.
pub struct DependencyFinder {
    dim: usize,
    /// Reduced rows: (vector, pivot column, combination of inputs).
    rows: Vec<(Vec<BigRat>, usize, Vec<BigRat>)>,
    count: usize,
}

impl DependencyFinder {
    pub fn new(dim: usize) -> Self {
        DependencyFinder { dim, rows: Vec::new(), count: 0 }
    }

    /// Add the next vector. If it depends on the earlier ones, returns
    /// coefficients `c` with `sum c_i v_i = 0` and `c_last = 1`.
    pub fn push(&mut self, v: Vec<BigRat>) -> Option<Vec<BigRat>> {
        assert_eq!(v.len(), self.dim);
        let idx = self.count;
        self.count += 1;
        let mut v = v;
        let mut comb = vec![BigRat::zero(); idx + 1];
        comb[idx] = BigRat::one();
        for (row, piv, rc) in &self.rows {
            if v[*piv].is_zero() {
                continue;
            }
            let f = v[*piv].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            for (a, b) in comb.iter_mut().zip(rc) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => Some(comb),
            Some(piv) => {
                let inv = v[piv].recip();
                for a in v.iter_mut() {
                    *a *= &inv;
                }
                for a in comb.iter_mut() {
                    *a *= &inv;
                }
                // Keep earlier rows reduced at the new pivot.
                for (row, _, rc) in self.rows.iter_mut() {
                    if row[piv].is_zero() {
                        continue;
                    }
                    let f = row[piv].clone();
                    for (a, b) in row.iter_mut().zip(&v) {
                        if !b.is_zero() {
                            *a -= &f * b;
                        }
                    }
                    rc.resize(comb.len(), BigRat::zero());
                    for (a, b) in rc.iter_mut().zip(&comb) {
                        if !b.is_zero() {
                            *a -= &f * b;
                        }
                    }
                }
                self.rows.push((v, piv, comb));
                None
            }
        }
    }
}

/// Rank of an integer matrix modulo a prime `p < 2^32`.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = crate::factor::modp::inv_mod(m[rank][c], p);
        for j in c..cols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    m[i][j] = (m[i][j] + p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
