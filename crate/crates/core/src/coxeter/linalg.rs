//! Tiny exact linear algebra for fixed spaces of reflection-representation
//! matrices (at most 7 columns).

use num_traits::{One, Zero};

use crate::rational::Q;

/// Basis of the null space of `rows` (each of length `ncols`).
pub(crate) fn null_space(mut rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                for j in 0..ncols {
                    let sub = f * rows[r][j];
                    rows[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn null_space_of_rank_one() {
        let rows = vec![vec![int(1), int(1), int(1)]];
        let basis = null_space(rows.clone(), 3);
        assert_eq!(basis.len(), 2);
        for b in basis {
            let dot: Q = rows[0].iter().zip(&b).map(|(a, x)| a * x).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_trivial_null_space() {
        let rows = vec![vec![int(1), int(2)], vec![int(3), int(4)]];
        assert!(null_space(rows, 2).is_empty());
    }
}
