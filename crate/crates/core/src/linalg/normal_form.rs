//! Hermite and Smith normal forms over the integers.
//!
//! Conventions: row-style Hermite form with positive pivots and entries
//! above each pivot reduced into `[0, pivot)`; zero rows sink to the bottom.
//! The Smith form is diagonal with nonnegative entries `d_1 | d_2 | ...`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Matrix;
use crate::error::Result;

type IntRows = Vec<Vec<BigInt>>;

fn identity_rows(n: usize) -> IntRows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(rows: &mut IntRows, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let s = rows[src].clone();
    for (t, x) in rows[target].iter_mut().zip(&s) {
        if !x.is_zero() {
            *t -= q * x;
        }
    }
}

fn col_axpy(rows: &mut IntRows, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for r in rows.iter_mut() {
        if !r[src].is_zero() {
            let d = q * &r[src];
            r[target] -= d;
        }
    }
}

fn negate_row(rows: &mut IntRows, i: usize) {
    for x in rows[i].iter_mut() {
        *x = -x.clone();
    }
}

fn swap_cols(rows: &mut IntRows, a: usize, b: usize) {
    for r in rows.iter_mut() {
        r.swap(a, b);
    }
}

/// Row Hermite normal form of integer rows, returning `(H, U, rank)` with
/// `H = U * A` and `U` unimodular.
pub(crate) fn hnf_rows(mut a: IntRows, cols: usize) -> (IntRows, IntRows, usize) {
    let m = a.len();
    let mut u = identity_rows(m);
    let mut row = 0;
    for c in 0..cols {
        if row == m {
            break;
        }
        loop {
            let pick = (row..m)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pick else { break };
            a.swap(row, p);
            u.swap(row, p);
            let mut clean = true;
            for i in row + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[row][c]);
                row_axpy(&mut a, i, row, &q);
                row_axpy(&mut u, i, row, &q);
                if !a[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[row][c].is_zero() {
            continue;
        }
        if a[row][c].is_negative() {
            negate_row(&mut a, row);
            negate_row(&mut u, row);
        }
        for i in 0..row {
            let q = a[i][c].div_floor(&a[row][c]);
            row_axpy(&mut a, i, row, &q);
            row_axpy(&mut u, i, row, &q);
        }
        row += 1;
    }
    (a, u, row)
}

/// Row Hermite normal form `H = U * M`.
pub fn hnf(m: &Matrix) -> Result<(Matrix, Matrix)> {
    let rows = m.to_integer_rows()?;
    let (h, u, _) = hnf_rows(rows, m.cols());
    Ok((Matrix::from_int_rows(&h, m.cols()), Matrix::from_int_rows(&u, m.rows())))
}

/// Smith normal form `S = U * M * V` of integer rows.
pub(crate) fn snf_rows(mut a: IntRows, cols: usize) -> (IntRows, IntRows, IntRows) {
    let m = a.len();
    let n = cols;
    let mut u = identity_rows(m);
    let mut v = identity_rows(n);
    let mut t = 0;
    while t < m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // bring the smallest remaining entry of row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                    u.swap(t, best.0);
                } else if best.1 != t {
                    swap_cols(&mut a, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            if let Some(i) = bad {
                let minus_one = -BigInt::one();
                row_axpy(&mut a, t, i, &minus_one);
                row_axpy(&mut u, t, i, &minus_one);
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    (a, u, v)
}

/// Smith normal form `S = U * M * V` with `U`, `V` unimodular.
pub fn snf(m: &Matrix) -> Result<(Matrix, Matrix, Matrix)> {
    let rows = m.to_integer_rows()?;
    let (s, u, v) = snf_rows(rows, m.cols());
    Ok((
        Matrix::from_int_rows(&s, m.cols()),
        Matrix::from_int_rows(&u, m.rows()),
        Matrix::from_int_rows(&v, m.cols()),
    ))
}

/// Nonzero diagonal entries of the Smith form.
pub fn elementary_divisors(m: &Matrix) -> Result<Vec<BigInt>> {
    let (s, _, _) = snf(m)?;
    Ok((0..s.rows().min(s.cols()))
        .map(|i| s.get(i, i).to_integer())
        .filter(|d| !d.is_zero())
        .collect())
}
