use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use super::{check_field, is_prime, Factorization, IrreducibleSieve, PolyFq};
use crate::caps::Caps;
use crate::coxeter::{build_group, root_system, ClassLabel, GroupDescriptor, Partition};
use crate::error::{Error, Result};
use crate::measures::{identity_value, ClassDistribution};
use crate::rational::{int, Q};

/// How many enumerated polynomials landed in each conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    pub total: u128,
    pub counts: BTreeMap<ClassLabel, u128>,
}

impl OrbitCensus {
    fn new(labels: impl IntoIterator<Item = ClassLabel>) -> Self {
        OrbitCensus { total: 0, counts: labels.into_iter().map(|l| (l, 0)).collect() }
    }

    fn add(&mut self, label: ClassLabel) {
        self.total += 1;
        *self.counts.entry(label).or_insert(0) += 1;
    }

    pub fn count(&self, label: &ClassLabel) -> u128 {
        self.counts.get(label).copied().unwrap_or(0)
    }

    /// Counts divided by the total.
    pub fn distribution(&self) -> ClassDistribution {
        let total = int(self.total as i128);
        ClassDistribution::from_entries(self.counts.iter().map(|(k, &v)| (k.clone(), int(v as i128) / total)).collect())
    }
}

impl Serialize for OrbitCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.counts.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

fn check_degree(degree: usize, caps: &Caps) -> Result<()> {
    if degree > caps.max_degree {
        return Err(Error::DegreeCap { degree, cap: caps.max_degree });
    }
    Ok(())
}

/// Census of the `q^{n-1}` monic degree-`n` polynomials over `F_q` with
/// vanishing `x^{n-1}` coefficient, each labelled by the partition of its
/// irreducible factor degrees (with multiplicity).
pub fn type_a_orbit_census(n: usize, q: u32, caps: &Caps) -> Result<OrbitCensus> {
    check_field(q, caps)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    check_degree(n, caps)?;
    if n % q as usize == 0 {
        return Err(Error::NonRegularPrime { q, reason: format!("{q} divides n = {n}") });
    }
    let count = (q as u128).pow(n as u32 - 1);
    caps.check_budget("type A polynomials", count)?;
    let sieve = IrreducibleSieve::new(q, n / 2, caps)?;
    let mut census = OrbitCensus::new(Partition::all(n as u32).into_iter().map(ClassLabel::Partition));
    for i in 0..count as u64 {
        // Lower n-1 coefficients from the index, then x^{n-1} = 0, x^n = 1.
        let low = PolyFq::monic_from_index(q, n - 1, i);
        let mut coeffs = low.coefficients().to_vec();
        coeffs.resize(n - 1, 0);
        coeffs.extend([0, 1]);
        let f = PolyFq::raw(q, coeffs);
        let fact = sieve.factor(&f)?;
        census.add(ClassLabel::Partition(Partition(fact.degree_partition())));
    }
    Ok(census)
}

pub fn type_a_orbit_distribution(n: usize, q: u32) -> Result<ClassDistribution> {
    Ok(type_a_orbit_census(n, q, &Caps::default())?.distribution())
}

/// Signed cycle type attached to an even polynomial.
///
/// * `z^{2k}` gives `k` parts of size 1 in `λ`;
/// * an even irreducible `φ` of degree `2m` with exponent `2r + s` gives `r`
///   parts `2m` in `λ` and, if `s = 1`, one part `m` in `μ`;
/// * a pair `φ ≠ (-1)^{deg φ} φ(-z)` with exponent `e` gives `e` parts
///   `deg φ` in `λ`.
pub(crate) fn type_b_label(fact: &Factorization) -> ClassLabel {
    let (mut lambda, mut mu) = (Vec::new(), Vec::new());
    for (phi, e) in &fact.factors {
        let d = phi.degree() as u32;
        let e = *e as usize;
        if phi.is_even() {
            lambda.extend(std::iter::repeat_n(d, e / 2));
            mu.extend(std::iter::repeat_n(d / 2, e % 2));
        } else {
            let mirror = phi.mirror();
            if *phi == mirror {
                lambda.extend(std::iter::repeat_n(1, e / 2));
            } else if *phi < mirror {
                lambda.extend(std::iter::repeat_n(d, e));
            }
        }
    }
    ClassLabel::Signed { positive: Partition::new(lambda), negative: Partition::new(mu) }
}

fn bipartitions(n: u32) -> Vec<ClassLabel> {
    (0..=n)
        .flat_map(|k| {
            Partition::all(k).into_iter().flat_map(move |positive| {
                Partition::all(n - k)
                    .into_iter()
                    .map(move |negative| ClassLabel::Signed { positive: positive.clone(), negative })
            })
        })
        .collect()
}

/// Census of the `q^n` monic degree-`2n` polynomials `f` over `F_q` with
/// `f(z) = f(-z)`, labelled by [`type_b_label`].
pub fn type_b_orbit_census(n: usize, q: u32, caps: &Caps) -> Result<OrbitCensus> {
    if q == 2 {
        return Err(Error::EvenCharacteristic);
    }
    check_field(q, caps)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    check_degree(2 * n, caps)?;
    let count = (q as u128).pow(n as u32);
    caps.check_budget("type B polynomials", count)?;
    let sieve = IrreducibleSieve::new(q, n, caps)?;
    let mut census = OrbitCensus::new(bipartitions(n as u32));
    for i in 0..count as u64 {
        let f = PolyFq::monic_from_index(q, n, i).substitute_square();
        let label = type_b_label(&sieve.factor(&f)?);
        if let ClassLabel::Signed { positive, negative } = &label {
            if (positive.size() + negative.size()) as usize != n {
                return Err(Error::InternalInconsistency(format!("label {label} of {f} does not have size {n}")));
            }
        }
        census.add(label);
    }
    Ok(census)
}

pub fn type_b_orbit_distribution(n: usize, q: u32) -> Result<ClassDistribution> {
    Ok(type_b_orbit_census(n, q, &Caps::default())?.distribution())
}

/// Monic cubics over `F_5` that split into linear factors with `f(0) = 1`,
/// against `25 · M_{S_3,5}(id)`.
pub fn sl3_remark_counts() -> Result<(u64, u64)> {
    let caps = Caps::default();
    let sieve = IrreducibleSieve::new(5, 1, &caps)?;
    let mut enumerated = 0;
    for i in 0..125 {
        let f = PolyFq::monic_from_index(5, 3, i);
        if f.eval(0) == 1 && sieve.factor(&f)?.factors.iter().all(|(p, _)| p.degree() == 1) {
            enumerated += 1;
        }
    }
    let s3 = build_group(GroupDescriptor::symmetric(3))?;
    let predicted: Q = int(25) * identity_value(&s3, int(5));
    if !predicted.is_integer() {
        return Err(Error::InternalInconsistency(format!("predicted count {predicted} is not an integer")));
    }
    Ok((enumerated, *predicted.numer() as u64))
}

/// `p` divides no nonzero coefficient of a positive root written in the
/// simple roots.
pub fn good_prime_check(desc: GroupDescriptor, p: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let roots = root_system(desc)?;
    Ok(roots.positive.iter().flat_map(|r| &r.coefficients).all(|&c| c == 0 || c % p as i64 != 0))
}
