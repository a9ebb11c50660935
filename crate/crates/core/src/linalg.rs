//! Exact Gaussian elimination over Q, enough for the small linear systems
//! behind centralizer and partner searches.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let factor = rows[k][c].clone();
                for col in 0..rows[k].len() {
                    let delta = &factor * &rows[r][col];
                    rows[k][col] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of `{x : A x = 0}` for `A` given by rows of length `ncols`.
pub fn nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][fc].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rational = a[0].iter().zip(&v).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[rat(3), rat(1)], 2), Some(vec![rat(2), rat(1)]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&b, &[rat(1), rat(3)], 2), None);
    }
}
