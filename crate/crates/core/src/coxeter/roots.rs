//! Root data for the crystallographic families, in ambient integer
//! coordinates.
//!
//! Conventions: `A_n` uses `e_i - e_{i+1}` in `R^{n+1}` (the group acts on
//! the sum-zero hyperplane); `B_n` adds `e_n`; `D_n` adds `e_{n-1} + e_n`;
//! `G2` uses `e_1 - e_2` and `-2e_1 + e_2 + e_3` in the sum-zero plane of
//! `R^3`. Every simple reflection is realized by a signed permutation of the
//! ambient coordinates that agrees with the reflection on the span of the
//! roots.

use std::collections::HashMap;

use super::{Family, GroupDescriptor};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub vector: Vec<i64>,
    /// Coordinates in the basis of simple roots.
    pub coefficients: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub ambient_dim: usize,
    /// The reflection representation is the sum-zero hyperplane of the
    /// ambient space rather than the whole space.
    pub sum_zero: bool,
    pub simple: Vec<Vec<i64>>,
    pub positive: Vec<Root>,
    /// Simple reflections as signed permutations in one-line notation.
    pub(crate) generators: Vec<Vec<i8>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Looks up a root vector; `Some((i, true))` for the `i`-th positive root,
    /// `Some((i, false))` for its negative.
    pub fn locate(&self, v: &[i64]) -> Option<(usize, bool)> {
        if let Some(&i) = self.index.get(v) {
            return Some((i, true));
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&i| (i, false))
    }

    pub fn simple_index(&self, v: &[i64]) -> Option<usize> {
        self.simple.iter().position(|s| s.as_slice() == v)
    }

    /// Largest coefficient of any positive root in the simple basis.
    pub fn max_coefficient(&self) -> i64 {
        self.positive.iter().flat_map(|r| r.coefficients.iter().copied()).max().unwrap_or(0)
    }
}

fn transposition(n: usize, i: usize) -> Vec<i8> {
    let mut g: Vec<i8> = (1..=n as i8).collect();
    g.swap(i, i + 1);
    g
}

pub(crate) fn act(perm: &[i8], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &img) in perm.iter().enumerate() {
        out[img.unsigned_abs() as usize - 1] = img.signum() as i64 * v[i];
    }
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Root data for `desc`. Fails for `I2(p)`, whose roots need irrational
/// coordinates.
pub fn root_system(desc: GroupDescriptor) -> Result<RootSystem> {
    let n = desc.rank_or_p;
    let unit = |dim: usize, i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v
    };
    let diff = |dim: usize, i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v[i + 1] = -1;
        v
    };
    let (dim, sum_zero, simple, generators): (usize, bool, Vec<Vec<i64>>, Vec<Vec<i8>>) = match desc.family {
        Family::A => {
            let dim = n + 1;
            ((dim), true, (0..n).map(|i| diff(dim, i)).collect(), (0..n).map(|i| transposition(dim, i)).collect())
        }
        Family::B => {
            let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i)).collect();
            simple.push(unit(n, n - 1));
            let mut gens: Vec<Vec<i8>> = (0..n - 1).map(|i| transposition(n, i)).collect();
            let mut flip: Vec<i8> = (1..=n as i8).collect();
            flip[n - 1] = -(n as i8);
            gens.push(flip);
            (n, false, simple, gens)
        }
        Family::D => {
            let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i)).collect();
            let mut last = vec![0i64; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            simple.push(last);
            let mut gens: Vec<Vec<i8>> = (0..n - 1).map(|i| transposition(n, i)).collect();
            let mut g: Vec<i8> = (1..=n as i8).collect();
            g[n - 2] = -(n as i8);
            g[n - 1] = -(n as i8 - 1);
            gens.push(g);
            (n, false, simple, gens)
        }
        Family::G2 => (
            3,
            true,
            vec![vec![1, -1, 0], vec![-2, 1, 1]],
            // s_A swaps the first two coordinates; s_B acts on the plane as -(2 3).
            vec![vec![2, 1, 3], vec![-1, -3, -2]],
        ),
        Family::I2 => return Err(Error::UnsupportedFamily(format!("{desc} has no rational root coordinates"))),
    };
    let rank = simple.len();
    let mut all: Vec<Root> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for (i, s) in simple.iter().enumerate() {
        seen.insert(s.clone(), all.len());
        all.push(Root { vector: s.clone(), coefficients: unit(rank, i) });
    }
    let mut next = 0;
    while next < all.len() {
        let root = all[next].clone();
        next += 1;
        for (i, g) in generators.iter().enumerate() {
            let alpha = &simple[i];
            let num = 2 * dot(&root.vector, alpha);
            let den = dot(alpha, alpha);
            if num % den != 0 {
                return Err(Error::InternalInconsistency(format!("{desc}: non-integral Cartan pairing")));
            }
            let k = num / den;
            let image = act(g, &root.vector);
            let expected: Vec<i64> = root.vector.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
            if image != expected {
                return Err(Error::InternalInconsistency(format!(
                    "{desc}: generator {i} does not act as the simple reflection"
                )));
            }
            if !seen.contains_key(&image) {
                let mut coefficients = root.coefficients.clone();
                coefficients[i] -= k;
                seen.insert(image.clone(), all.len());
                all.push(Root { vector: image, coefficients });
            }
        }
    }
    let mut positive = Vec::new();
    for r in all {
        let pos = r.coefficients.iter().all(|&c| c >= 0);
        let neg = r.coefficients.iter().all(|&c| c <= 0);
        match (pos, neg) {
            (true, false) => positive.push(r),
            (false, true) => {}
            _ => return Err(Error::InternalInconsistency(format!("{desc}: root with mixed-sign coefficients"))),
        }
    }
    let index = positive.iter().enumerate().map(|(i, r)| (r.vector.clone(), i)).collect();
    Ok(RootSystem { ambient_dim: dim, sum_zero, simple, positive, generators, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        // |Φ+| = Σ m_i
        for (desc, count) in [
            (GroupDescriptor::a(3), 6),
            (GroupDescriptor::b(3), 9),
            (GroupDescriptor::d(4), 12),
            (GroupDescriptor::g2(), 6),
        ] {
            assert_eq!(root_system(desc).unwrap().positive.len(), count, "{desc}");
        }
    }

    #[test]
    fn g2_highest_root() {
        let rs = root_system(GroupDescriptor::g2()).unwrap();
        let highest = rs.positive.iter().max_by_key(|r| r.coefficients.iter().sum::<i64>()).unwrap();
        assert_eq!(highest.coefficients, vec![3, 2]);
    }

    #[test]
    fn dihedral_has_no_rational_roots() {
        assert!(matches!(root_system(GroupDescriptor::i2(5)), Err(Error::UnsupportedFamily(_))));
    }
}
