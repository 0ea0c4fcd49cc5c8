//! Exact integer and rational linear algebra: nullity by Gaussian
//! elimination over the rationals, and Smith normal form with unimodular
//! transforms over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dimension of the solution space of `M x = 0`, computed by exact
/// Gaussian elimination over the rationals. `entries` is row-major,
/// `rows * cols` long.
pub fn rational_nullity(rows: usize, cols: usize, entries: &[i64]) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from_integer(BigInt::from(entries[i * cols + j])))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for j in col..cols {
            m[rank][j] = &m[rank][j] / &pivot;
        }
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in col..cols {
                    let sub = &factor * &m[rank][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    cols - rank
}

/// Result of a Smith normal form computation: `u * m * v = d` with `u`, `v`
/// unimodular and `d` diagonal, `d1 | d2 | ...`. `invariant_factors` lists
/// the nonzero diagonal entries.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub rows: usize,
    pub cols: usize,
    pub invariant_factors: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub d: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Smith normal form over the integers. Handles the empty matrix.
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SmithNormalForm {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut d: Vec<Vec<BigInt>> = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        // pick the minimal-magnitude nonzero entry of the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| d[i][j].abs() < d[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !d[i][t].is_zero() {
                    let q = div_nearest(&d[i][t], &d[t][t]);
                    row_sub(&mut d, &mut u, i, t, &q);
                    if !d[i][t].is_zero() {
                        // remainder is strictly smaller; promote it
                        swap_rows(&mut d, &mut u, t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !d[t][j].is_zero() {
                    let q = div_nearest(&d[t][j], &d[t][t]);
                    col_sub(&mut d, &mut v, j, t, &q);
                    if !d[t][j].is_zero() {
                        swap_cols(&mut d, &mut v, t, j);
                        clean = false;
                    }
                }
            }
            if clean
                && (t + 1..rows).all(|i| d[i][t].is_zero())
                && (t + 1..cols).all(|j| d[t][j].is_zero())
            {
                break;
            }
        }

        // enforce the divisibility chain: fold any non-multiple into row t
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    row_add(&mut d, &mut u, t, i);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue; // re-clear with the new row t
        }

        if d[t][t].is_negative() {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }

    let invariant_factors = (0..t).map(|i| d[i][i].clone()).collect();
    SmithNormalForm {
        rows,
        cols,
        invariant_factors,
        u,
        v,
        d,
    }
}

// quotient rounded to nearest, so the remainder has magnitude <= |b|/2
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn swap_rows(d: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        d.swap(a, b);
        u.swap(a, b);
    }
}

fn swap_cols(d: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in d.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    }
}

// row_i -= q * row_t
fn row_sub(d: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    for j in 0..d[0].len() {
        let s = q * &d[t][j];
        d[i][j] -= s;
    }
    for j in 0..u[0].len() {
        let s = q * &u[t][j];
        u[i][j] -= s;
    }
}

// col_j -= q * col_t
fn col_sub(d: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in d.iter_mut() {
        let s = q * &row[t];
        row[j] -= s;
    }
    for row in v.iter_mut() {
        let s = q * &row[t];
        row[j] -= s;
    }
}

// row_t += row_i
fn row_add(d: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], t: usize, i: usize) {
    for j in 0..d[0].len() {
        let s = d[i][j].clone();
        d[t][j] += s;
    }
    for j in 0..u[0].len() {
        let s = u[i][j].clone();
        u[t][j] += s;
    }
}

fn negate_row(d: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], t: usize) {
    for x in d[t].iter_mut() {
        *x = -x.clone();
    }
    for x in u[t].iter_mut() {
        *x = -x.clone();
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}
