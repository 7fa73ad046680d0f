//! Exact linear algebra over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix (given as rows) over the rationals.
///
/// Fraction-free elimination: each elimination step cross-multiplies and the
/// updated row is divided by the gcd of its entries, so entries stay bounded
/// without ever leaving the integers.
pub fn exact_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(ncols, BigInt::zero());
    }

    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..nrows {
            if m[i][col].is_zero() {
                continue;
            }
            let a = m[rank][col].clone();
            let b = m[i][col].clone();
            for j in col..ncols {
                let updated = &a * &m[i][j] - &b * &m[rank][j];
                m[i][j] = updated;
            }
            reduce_content(&mut m[i]);
        }
        rank += 1;
    }
    rank
}

fn reduce_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(exact_rank(&mat(&[&[1, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(exact_rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(exact_rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(exact_rank(&mat(&[])), 0);
        assert_eq!(exact_rank(&mat(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
    }
}
