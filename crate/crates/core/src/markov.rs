//! The random walk driven by a measure and an exact check of its spectrum.
//!
//! The walk moves from `u` to `w·u` with probability `m(w)`, so
//! `T[u][v] = m(v u^{-1})`. `T` is the matrix of left multiplication by `m`
//! on `Q[W]` and is never stored densely unless asked: it is determined by
//! the measure and the multiplication table.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::caps::Caps;
use crate::coxeter::{element_types, fixed_space_dimension, subset_equivalence_classes, CoxeterGroup};
use crate::descent_algebra::{DescentAlgebra, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::measures::{identity_value, measure, Measure};
use crate::rational::{int, pow, Q};
use crate::report::VerificationReport;

/// Groups up to this order also get a check by dense matrix products.
const DENSE_CHECK_ORDER: usize = 120;

#[derive(Debug, Clone)]
pub struct TransitionMatrix<'g> {
    kernel: Measure<'g>,
}

impl<'g> TransitionMatrix<'g> {
    pub fn group(&self) -> &'g CoxeterGroup {
        self.kernel.group()
    }

    pub fn order(&self) -> usize {
        self.group().order()
    }

    pub fn kernel(&self) -> &Measure<'g> {
        &self.kernel
    }

    /// `T[u][v] = m(v u^{-1})`.
    pub fn entry(&self, u: usize, v: usize) -> Q {
        let g = self.group();
        self.kernel.coefficient(g.mul(v, g.inverse(u)))
    }

    pub fn row(&self, u: usize) -> Vec<Q> {
        (0..self.order()).map(|v| self.entry(u, v)).collect()
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        (0..self.order()).map(|u| self.row(u)).collect()
    }

    pub fn trace(&self) -> Q {
        (0..self.order()).map(|u| self.entry(u, u)).sum()
    }

    /// Row vector times `T`.
    pub fn apply_left(&self, v: &[Q]) -> Vec<Q> {
        let g = self.group();
        let mut out = vec![Q::zero(); self.order()];
        for (u, vu) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let u_inv = g.inverse(u);
            for (w, o) in out.iter_mut().enumerate() {
                *o += vu * self.kernel.coefficient(g.mul(w, u_inv));
            }
        }
        out
    }
}

pub fn transition_matrix<'g>(g: &'g CoxeterGroup, m: &Measure<'g>) -> Result<TransitionMatrix<'g>> {
    transition_matrix_with_caps(g, m, &Caps::default())
}

/// Refuses groups above `caps.max_matrix_order`.
pub fn transition_matrix_with_caps<'g>(g: &'g CoxeterGroup, m: &Measure<'g>, caps: &Caps) -> Result<TransitionMatrix<'g>> {
    if !std::ptr::eq(g, m.group()) {
        return Err(Error::GroupMismatch);
    }
    if g.order() > caps.max_matrix_order {
        return Err(Error::budget("transition matrix rows", g.order() as u128, caps.max_matrix_order as u128));
    }
    Ok(TransitionMatrix { kernel: m.clone() })
}

/// `mult[i] = |{w : dim Fix(w) = n - i}|`, the multiplicity of the
/// eigenvalue `x^{-i}`.
pub fn spectrum_multiplicities(g: &CoxeterGroup) -> Vec<usize> {
    let n = g.rank();
    let mut mult = vec![0; n + 1];
    for w in 0..g.order() {
        mult[n - fixed_space_dimension(g, w)] += 1;
    }
    mult
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    /// Eigenvalue `x^{-i}` has multiplicity `multiplicities[i]`.
    pub multiplicities: Vec<usize>,
    #[serde(serialize_with = "crate::rational::serialize_q")]
    pub trace: Q,
    pub checks: VerificationReport,
}

/// Coefficients, constant term first, of `Π (x + m_i)`.
fn exponent_polynomial(exponents: &[u32]) -> Vec<i128> {
    exponents.iter().fold(vec![1], |acc, &m| {
        let mut next = vec![0; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i] += c * m as i128;
            next[i + 1] += c;
        }
        next
    })
}

fn dense_annihilates(t: &TransitionMatrix<'_>, eigenvalues: &[Q]) -> bool {
    let n = t.order();
    let base = t.to_dense();
    let mut acc: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for &lambda in eigenvalues {
        let mut factor = base.clone();
        for (i, row) in factor.iter_mut().enumerate() {
            row[i] -= lambda;
        }
        acc = acc
            .iter()
            .map(|row| {
                (0..n)
                    .map(|j| row.iter().zip(&factor).filter(|(a, _)| !a.is_zero()).map(|(a, f)| a * f[j]).sum())
                    .collect()
            })
            .collect();
    }
    acc.iter().all(|row| row.iter().all(Zero::is_zero))
}

/// All spectral identities for `M_{W,x}`, without failing on the first
/// violated one.
pub fn spectrum_checks(g: &CoxeterGroup, x: Q) -> Result<SpectrumReport> {
    spectrum_checks_with_caps(g, x, &Caps::default())
}

pub fn spectrum_checks_with_caps(g: &CoxeterGroup, x: Q, caps: &Caps) -> Result<SpectrumReport> {
    let m = measure(g, x)?;
    let t = transition_matrix_with_caps(g, &m, caps)?;
    let n = g.rank();
    let order = g.order();
    let mult = spectrum_multiplicities(g);
    let eigenvalues: Vec<Q> = (0..=n).map(|i| pow(x, -(i as i32))).collect();
    let mut report = VerificationReport::new();

    report.record("multiplicities sum to |W|", mult.iter().sum::<usize>() == order);
    report.record("eigenvalue 1 is simple", mult[0] == 1);

    let one = GroupAlgebraElement::one(g);
    let annihilator = eigenvalues
        .iter()
        .try_fold(one.clone(), |acc, &c| acc.checked_mul(&m.element().checked_sub(&one.scale(c))?))?;
    report.record("prod (M - x^-i) = 0 in Q[W]", annihilator.is_zero());

    let mut column = vec![Q::zero(); order];
    column[g.identity()] = Q::one();
    for &c in &eigenvalues {
        let moved = t.apply_left(&column);
        column = moved.iter().zip(&column).map(|(a, b)| a - c * b).collect();
    }
    report.record("prod (T - x^-i I) kills e_id", column.iter().all(Zero::is_zero));

    if order <= DENSE_CHECK_ORDER {
        report.record("prod (T - x^-i I) = 0 densely", dense_annihilates(&t, &eigenvalues));
    }

    let trace = t.trace();
    let predicted: Q = mult.iter().zip(&eigenvalues).map(|(&k, &e)| int(k as i128) * e).sum();
    report.record("trace T = sum mult_i x^-i", trace == predicted);
    report.record("trace T = |W| M(id)", trace == int(order as i128) * identity_value(g, x));

    let poly: Vec<i128> = mult.iter().rev().map(|&k| k as i128).collect();
    report.record("sum mult_i x^(n-i) = prod (x + m_i)", poly == exponent_polynomial(g.exponents()));

    let types = element_types(g)?;
    let classes = subset_equivalence_classes(g);
    report.record(
        "||type(w)|| = n - dim Fix(w)",
        (0..order).all(|w| classes[types[w]].rank() == n - fixed_space_dimension(g, w)),
    );
    let algebra = DescentAlgebra::new(g)?;
    for (i, class) in classes.iter().enumerate() {
        let e = algebra.e_lambda(class);
        let count = types.iter().filter(|&&t| t == i).count();
        report.record(
            format!("trace e[{i}] = #type {i}"),
            int(order as i128) * e.coefficient(g.identity()) == int(count as i128),
        );
    }
    Ok(SpectrumReport { multiplicities: mult, trace, checks: report })
}

/// [`spectrum_checks`], failing with the first violated identity.
pub fn verify_spectrum(g: &CoxeterGroup, x: Q) -> Result<SpectrumReport> {
    let report = spectrum_checks(g, x)?;
    if let Some(c) = report.checks.first_failure() {
        return Err(Error::VerificationFailure(c.name.clone()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, GroupDescriptor};
    use crate::rational::q;

    #[test]
    fn s2_matrix() {
        let s2 = build_group(GroupDescriptor::symmetric(2)).unwrap();
        let m = measure(&s2, int(2)).unwrap();
        let t = transition_matrix(&s2, &m).unwrap();
        let (id, s) = (s2.identity(), s2.longest_element());
        assert_eq!([t.entry(id, id), t.entry(id, s), t.entry(s, id), t.entry(s, s)], [q(3, 4), q(1, 4), q(1, 4), q(3, 4)]);
    }

    #[test]
    fn rows_and_columns_sum_to_one() {
        let b2 = build_group(GroupDescriptor::b(2)).unwrap();
        let t = transition_matrix(&b2, &measure(&b2, int(3)).unwrap()).unwrap();
        let dense = t.to_dense();
        for i in 0..b2.order() {
            assert_eq!(dense[i].iter().sum::<Q>(), Q::one());
            assert_eq!(dense.iter().map(|r| r[i]).sum::<Q>(), Q::one());
        }
    }

    #[test]
    fn multiplicities() {
        let s3 = build_group(GroupDescriptor::symmetric(3)).unwrap();
        assert_eq!(spectrum_multiplicities(&s3), vec![1, 3, 2]);
        let g2 = build_group(GroupDescriptor::g2()).unwrap();
        assert_eq!(spectrum_multiplicities(&g2), vec![1, 6, 5]);
    }

    #[test]
    fn spectra_verify() {
        let s3 = build_group(GroupDescriptor::symmetric(3)).unwrap();
        assert_eq!(verify_spectrum(&s3, int(2)).unwrap().trace, int(3));
        let g2 = build_group(GroupDescriptor::g2()).unwrap();
        assert_eq!(verify_spectrum(&g2, int(7)).unwrap().trace, q(96, 49));
        let b2 = build_group(GroupDescriptor::b(2)).unwrap();
        let report = verify_spectrum(&b2, int(3)).unwrap();
        assert!(report.checks.checks.iter().any(|c| c.name.contains("densely")));
    }

    #[test]
    fn order_cap_refuses() {
        let b2 = build_group(GroupDescriptor::b(2)).unwrap();
        let m = measure(&b2, int(3)).unwrap();
        let caps = Caps { max_matrix_order: 4, ..Caps::default() };
        assert!(matches!(transition_matrix_with_caps(&b2, &m, &caps), Err(Error::Budget { .. })));
    }
}
