//! Exact linear algebra: fraction-free (Bareiss) rank over the integers and
//! reduced row echelon form over the rationals. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = &num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of a rational matrix: rows are scaled to integers first.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = rows.iter().map(|row| clear_denominators(row)).collect();
    integer_rank(&cleared)
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        lcm = num_integer::lcm(lcm, v.denom().abs());
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// True iff `v` lies in the row span of `rows` (over the rationals).
pub fn in_integer_span(rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let base = integer_rank(rows);
    let mut extended = rows.to_vec();
    extended.push(v.to_vec());
    integer_rank(&extended) == base
}

/// Brings `m` to reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for v in m[row][col..].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                // two rows are touched at once, so stay with indices
                #[allow(clippy::needless_range_loop)]
                for c in col..ncols {
                    m[r][c] = &m[r][c] - &factor * &m[row][c];
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    pivots
}

/// A canonical basis of the right kernel `{x : M x = 0}`, one row per free
/// column of the reduced echelon form.
pub fn kernel_basis(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![BigRational::zero(); ncols];
        x[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = -m[r][free].clone();
        }
        basis.push(x);
    }
    basis
}
