//! Solomon's descent algebra inside `Q[W]`: the basis `x_J`, the `μ`/`β`
//! coefficient matrices and the orthogonal idempotents `e_J`, `e_λ`.
//!
//! Everything is exact. Matrices are indexed by subsets of the simple roots
//! in size-then-lex order, which makes `μ` upper triangular.

use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::coxeter::{maps_into_simples, subset_equivalence_classes, CoxeterGroup, SimpleSet, SubsetClass};
use crate::error::{Error, Result};
use crate::rational::{common_denominator, int, Q};
use crate::report::VerificationReport;

/// An element of `Q[W]`, stored densely by element index.
#[derive(Debug, Clone)]
pub struct GroupAlgebraElement<'g> {
    group: &'g CoxeterGroup,
    coeffs: Vec<Q>,
}

impl PartialEq for GroupAlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.coeffs == other.coeffs
    }
}

impl<'g> GroupAlgebraElement<'g> {
    pub fn from_coefficients(group: &'g CoxeterGroup, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidParameter(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(GroupAlgebraElement { group, coeffs })
    }

    pub fn zero(group: &'g CoxeterGroup) -> Self {
        GroupAlgebraElement { group, coeffs: vec![Q::zero(); group.order()] }
    }

    /// The unit of `Q[W]`, i.e. the identity element with coefficient 1.
    pub fn one(group: &'g CoxeterGroup) -> Self {
        Self::basis(group, group.identity())
    }

    pub fn basis(group: &'g CoxeterGroup, w: usize) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[w] = Q::one();
        e
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coefficient(&self, w: usize) -> Q {
        self.coeffs[w]
    }

    pub fn coefficient_sum(&self) -> Q {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Q) -> Self {
        GroupAlgebraElement { group: self.group, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.group, other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(GroupAlgebraElement { group: self.group, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(GroupAlgebraElement { group: self.group, coeffs })
    }

    /// `(a·b)(w) = Σ_{uv=w} a(u) b(v)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(GroupAlgebraElement { group: self.group, coeffs: convolve(self.group, &self.coeffs, &other.coeffs) })
    }
}

impl<'g> Add for &GroupAlgebraElement<'g> {
    type Output = GroupAlgebraElement<'g>;

    fn add(self, rhs: Self) -> Self::Output {
        self.checked_add(rhs).expect("operands from the same group")
    }
}

impl<'g> Sub for &GroupAlgebraElement<'g> {
    type Output = GroupAlgebraElement<'g>;

    fn sub(self, rhs: Self) -> Self::Output {
        self.checked_sub(rhs).expect("operands from the same group")
    }
}

impl<'g> Mul for &GroupAlgebraElement<'g> {
    type Output = GroupAlgebraElement<'g>;

    fn mul(self, rhs: Self) -> Self::Output {
        self.checked_mul(rhs).expect("operands from the same group")
    }
}

/// Group-algebra product over a common denominator. Falls back to big
/// integers when the `i128` accumulator could overflow.
pub(crate) fn convolve(g: &CoxeterGroup, a: &[Q], b: &[Q]) -> Vec<Q> {
    let (an, ad) = common_denominator(a);
    let (bn, bd) = common_denominator(b);
    let support: Vec<usize> = (0..an.len()).filter(|&u| an[u] != 0).collect();
    let amax = an.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    let bmax = bn.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    let fits = amax
        .checked_mul(bmax)
        .and_then(|p| p.checked_mul(support.len().max(1) as u128))
        .is_some_and(|bound| bound < i128::MAX as u128)
        && ad.checked_mul(bd).is_some();
    if fits {
        let mut acc = vec![0i128; an.len()];
        for &u in &support {
            let au = an[u];
            for (v, &w) in g.mult_row(u).iter().enumerate() {
                acc[w as usize] += au * bn[v];
            }
        }
        let den = ad * bd;
        acc.into_iter().map(|x| Q::new(x, den)).collect()
    } else {
        let bn_big: Vec<BigInt> = bn.iter().map(|&x| BigInt::from(x)).collect();
        let mut acc = vec![BigInt::zero(); an.len()];
        for &u in &support {
            let au = BigInt::from(an[u]);
            for (v, &w) in g.mult_row(u).iter().enumerate() {
                acc[w as usize] += &au * &bn_big[v];
            }
        }
        let den = BigInt::from(ad) * BigInt::from(bd);
        acc.into_iter()
            .map(|x| {
                let r = BigRational::new(x, den.clone());
                let (n, d) = (r.numer().to_i128(), r.denom().to_i128());
                Q::new(n.expect("product numerator fits in i128"), d.expect("product denominator fits in i128"))
            })
            .collect()
    }
}

/// Square matrix indexed by subsets of the simple roots in size-then-lex
/// order; entry `(K, J)` holds `μ_K^J` or `β_K^J`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    index: Vec<SimpleSet>,
    position: HashMap<SimpleSet, usize>,
    entries: Vec<Q>,
}

impl RationalMatrix {
    fn zeros(rank: usize) -> Self {
        let index = SimpleSet::all_ordered(rank);
        let position = index.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let n = index.len();
        RationalMatrix { index, position, entries: vec![Q::zero(); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn subsets(&self) -> &[SimpleSet] {
        &self.index
    }

    pub fn get(&self, k: SimpleSet, j: SimpleSet) -> Q {
        self.entries[self.position[&k] * self.dim() + self.position[&j]]
    }

    pub fn at(&self, row: usize, col: usize) -> Q {
        self.entries[row * self.dim() + col]
    }

    fn set_at(&mut self, row: usize, col: usize, v: Q) {
        let n = self.dim();
        self.entries[row * n + col] = v;
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|r| (0..r).all(|c| self.at(r, c).is_zero()))
    }

    pub fn product(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.dim();
        let mut out = RationalMatrix { entries: vec![Q::zero(); n * n], ..self.clone() };
        for r in 0..n {
            for k in 0..n {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    out.entries[r * n + c] += a * other.at(k, c);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim();
        (0..n).all(|r| (0..n).all(|c| self.at(r, c) == if r == c { Q::one() } else { Q::zero() }))
    }
}

/// `x_J`, the sum of the elements with no descent in `J`.
pub fn basis_x(g: &CoxeterGroup, j: SimpleSet) -> GroupAlgebraElement<'_> {
    let coeffs = g
        .elements()
        .iter()
        .map(|e| if e.descents.intersects(j) { Q::zero() } else { Q::one() })
        .collect();
    GroupAlgebraElement { group: g, coeffs }
}

/// `μ_K^J = |{w ∈ X_J : w(K) ⊆ Π}| / |λ_K|` for `K ⊆ J`, zero otherwise.
pub fn mu_matrix(g: &CoxeterGroup) -> RationalMatrix {
    let rank = g.rank();
    let full = SimpleSet::full(rank);
    let mut counts = vec![0i128; 1 << (2 * rank)];
    for (w, e) in g.elements().iter().enumerate() {
        let allowed = SimpleSet(full.0 & !e.descents.0);
        for j in allowed.subsets() {
            for k in j.subsets() {
                if maps_into_simples(g, w, k) {
                    counts[((k.0 as usize) << rank) | j.0 as usize] += 1;
                }
            }
        }
    }
    let classes = subset_equivalence_classes(g);
    let mut m = RationalMatrix::zeros(rank);
    for r in 0..m.dim() {
        let k = m.index[r];
        let class_size = classes[g.subset_class_of(k)].size() as i128;
        for c in 0..m.dim() {
            let j = m.index[c];
            let count = counts[((k.0 as usize) << rank) | j.0 as usize];
            if count != 0 {
                m.set_at(r, c, Q::new(count, class_size));
            }
        }
    }
    m
}

/// Inverse of an upper-triangular matrix by back substitution.
fn invert_upper(m: &RationalMatrix) -> Result<RationalMatrix> {
    if !m.is_upper_triangular() {
        return Err(Error::InternalInconsistency("μ matrix is not upper triangular".into()));
    }
    let n = m.dim();
    let mut inv = RationalMatrix { entries: vec![Q::zero(); n * n], ..m.clone() };
    for c in 0..n {
        for r in (0..=c).rev() {
            let diag = m.at(r, r);
            if diag.is_zero() {
                return Err(Error::InternalInconsistency("μ matrix has a zero diagonal entry".into()));
            }
            let mut acc = if r == c { Q::one() } else { Q::zero() };
            for k in r + 1..=c {
                acc -= m.at(r, k) * inv.at(k, c);
            }
            inv.set_at(r, c, acc / diag);
        }
    }
    Ok(inv)
}

/// `β = μ⁻¹`.
pub fn beta_matrix(g: &CoxeterGroup) -> Result<RationalMatrix> {
    invert_upper(&mu_matrix(g))
}

/// Cached `β` together with the idempotents built from it.
#[derive(Debug, Clone)]
pub struct DescentAlgebra<'g> {
    group: &'g CoxeterGroup,
    beta: RationalMatrix,
}

impl<'g> DescentAlgebra<'g> {
    pub fn new(group: &'g CoxeterGroup) -> Result<Self> {
        Ok(DescentAlgebra { group, beta: beta_matrix(group)? })
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    pub fn beta(&self) -> &RationalMatrix {
        &self.beta
    }

    /// `e_J = Σ_{K⊆J} β_K^J x_K`, evaluated per element as the sum of
    /// `β_K^J` over the `K ⊆ J` avoiding `D(w)`.
    pub fn e(&self, j: SimpleSet) -> GroupAlgebraElement<'g> {
        let col = self.beta.position[&j];
        let coeffs = self
            .group
            .elements()
            .iter()
            .map(|e| {
                SimpleSet(j.0 & !e.descents.0)
                    .subsets()
                    .map(|k| self.beta.at(self.beta.position[&k], col))
                    .sum()
            })
            .collect();
        GroupAlgebraElement { group: self.group, coeffs }
    }

    /// `e_λ = Σ_{J∈λ} e_J / |λ|`.
    pub fn e_lambda(&self, class: &SubsetClass) -> GroupAlgebraElement<'g> {
        let mut acc = vec![Q::zero(); self.group.order()];
        for &j in class.members() {
            for (a, c) in acc.iter_mut().zip(self.e(j).coeffs) {
                *a += c;
            }
        }
        let size = int(class.size() as i128);
        GroupAlgebraElement { group: self.group, coeffs: acc.into_iter().map(|c| c / size).collect() }
    }

    /// `e_λ` for every class of [`subset_equivalence_classes`], in order.
    pub fn all_e_lambda(&self) -> Vec<GroupAlgebraElement<'g>> {
        subset_equivalence_classes(self.group).iter().map(|c| self.e_lambda(c)).collect()
    }
}

pub fn idempotent_e(g: &CoxeterGroup, j: SimpleSet) -> Result<GroupAlgebraElement<'_>> {
    Ok(DescentAlgebra::new(g)?.e(j))
}

pub fn idempotent_e_lambda<'g>(g: &'g CoxeterGroup, class: &SubsetClass) -> Result<GroupAlgebraElement<'g>> {
    Ok(DescentAlgebra::new(g)?.e_lambda(class))
}

/// Checks `e_λ² = e_λ`, `e_λ e_κ = 0` for `λ ≠ κ`, and `Σ_λ e_λ = 1`,
/// failing with the first violated identity.
pub fn verify_idempotent_system(g: &CoxeterGroup) -> Result<VerificationReport> {
    idempotent_checks(g)?.into_result()
}

/// [`verify_idempotent_system`] without failing on a violated identity.
pub fn idempotent_checks(g: &CoxeterGroup) -> Result<VerificationReport> {
    let algebra = DescentAlgebra::new(g)?;
    let es = algebra.all_e_lambda();
    let mut report = VerificationReport::new();
    report.record("mu*beta = identity", mu_matrix(g).product(algebra.beta()).is_identity());
    for (a, ea) in es.iter().enumerate() {
        for (b, eb) in es.iter().enumerate() {
            let prod = ea * eb;
            if a == b {
                report.record(format!("e[{a}]^2 = e[{a}]"), prod == *ea);
            } else {
                report.record(format!("e[{a}]*e[{b}] = 0"), prod.is_zero());
            }
        }
    }
    let sum = es.iter().fold(GroupAlgebraElement::zero(g), |acc, e| &acc + e);
    report.record("sum of e = 1", sum == GroupAlgebraElement::one(g));
    Ok(report)
}
