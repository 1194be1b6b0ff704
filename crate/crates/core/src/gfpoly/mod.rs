//! Polynomials over prime fields `F_q`, factorization by trial division
//! against a sieve of irreducibles, and the orbit statistics built on them.

mod orbits;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};

pub use orbits::{
    good_prime_check, sl3_remark_counts, type_a_orbit_census, type_a_orbit_distribution, type_b_orbit_census,
    type_b_orbit_distribution, OrbitCensus,
};

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn check_field(q: u32, caps: &Caps) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!("q = {q} is not prime")));
    }
    if q > caps.max_q {
        return Err(Error::InvalidParameter(format!("q = {q} exceeds the cap {}", caps.max_q)));
    }
    Ok(())
}

/// Polynomial over `F_q`, coefficients little-endian with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFq {
    q: u32,
    coeffs: Vec<u32>,
}

impl PartialOrd for PolyFq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for PolyFq {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q, self.coeffs.len())
            .cmp(&(other.q, other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PolyFq {
    /// Reduces the coefficients mod `q`. `q` must be prime.
    pub fn new(q: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::InvalidParameter(format!("q = {q} is not prime")));
        }
        Ok(Self::raw(q, coeffs.into_iter().map(|c| c % q).collect()))
    }

    /// From signed integer coefficients, e.g. `[-1, 0, 1]` for `x^2 - 1`.
    pub fn from_signed(q: u32, coeffs: &[i64]) -> Result<Self> {
        Self::new(q, coeffs.iter().map(|&c| c.rem_euclid(q as i64) as u32).collect())
    }

    fn raw(q: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFq { q, coeffs }
    }

    /// The `index`-th monic polynomial of the given degree, reading the
    /// lower coefficients as base-`q` digits of `index`.
    pub(crate) fn monic_from_index(q: u32, degree: usize, mut index: u64) -> Self {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push((index % q as u64) as u32);
            index /= q as u64;
        }
        coeffs.push(1);
        PolyFq { q, coeffs }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let q = self.q as u64;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % q) as u32
    }

    pub fn mul(&self, other: &PolyFq) -> PolyFq {
        if self.is_zero() || other.is_zero() {
            return PolyFq { q: self.q, coeffs: Vec::new() };
        }
        let q = self.q;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % q;
            }
        }
        Self::raw(q, out)
    }

    pub fn pow(&self, e: u32) -> PolyFq {
        (0..e).fold(PolyFq { q: self.q, coeffs: vec![1] }, |acc, _| acc.mul(self))
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &PolyFq) -> (PolyFq, PolyFq) {
        debug_assert!(divisor.is_monic());
        let q = self.q;
        let dd = divisor.degree();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (PolyFq { q, coeffs: Vec::new() }, self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = (rem[k + i] + q - (c * d) % q) % q;
            }
        }
        rem.truncate(dd);
        (Self::raw(q, quot), Self::raw(q, rem))
    }

    /// `f(-z)`.
    pub fn negate_argument(&self) -> PolyFq {
        let q = self.q;
        let coeffs = self.coeffs.iter().enumerate().map(|(i, &c)| if i % 2 == 1 { (q - c) % q } else { c }).collect();
        PolyFq { q, coeffs }
    }

    /// `(-1)^{deg f} f(-z)`, monic whenever `f` is.
    pub fn mirror(&self) -> PolyFq {
        let g = self.negate_argument();
        if self.degree() % 2 == 1 {
            let q = self.q;
            PolyFq { q, coeffs: g.coeffs.iter().map(|&c| (q - c) % q).collect() }
        } else {
            g
        }
    }

    /// `f(z) = f(-z)`.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    /// `g(z^2)`.
    pub fn substitute_square(&self) -> PolyFq {
        let mut coeffs = vec![0u32; 2 * self.coeffs.len().saturating_sub(1) + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c;
        }
        Self::raw(self.q, coeffs)
    }
}

/// `c0,c1,...,1`.
impl fmt::Display for PolyFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for PolyFq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PolyFq", 2)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("coefficients", &self.to_string())?;
        s.end()
    }
}

/// Monic irreducible factors with exponents, factors sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub factors: Vec<(PolyFq, u32)>,
}

impl Factorization {
    pub fn product(&self, q: u32) -> PolyFq {
        self.factors.iter().fold(PolyFq { q, coeffs: vec![1] }, |acc, (f, e)| acc.mul(&f.pow(*e)))
    }

    /// Degrees of the factors, each repeated by its exponent, largest first.
    pub fn degree_partition(&self) -> Vec<u32> {
        let mut parts: Vec<u32> =
            self.factors.iter().flat_map(|(f, e)| std::iter::repeat_n(f.degree() as u32, *e as usize)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// Monic irreducibles over `F_q` of every degree up to a bound, each degree
/// sieved by trial division against the lower ones.
#[derive(Debug, Clone)]
pub struct IrreducibleSieve {
    q: u32,
    by_degree: Vec<Vec<PolyFq>>,
}

impl IrreducibleSieve {
    pub fn new(q: u32, max_degree: usize, caps: &Caps) -> Result<Self> {
        check_field(q, caps)?;
        let candidates: u128 = (1..=max_degree as u32).map(|d| (q as u128).pow(d)).sum();
        caps.check_budget("sieve candidates", candidates)?;
        let mut sieve = IrreducibleSieve { q, by_degree: vec![Vec::new()] };
        for d in 1..=max_degree {
            let found: Vec<PolyFq> = (0..(q as u64).pow(d as u32))
                .map(|i| PolyFq::monic_from_index(q, d, i))
                .filter(|f| !sieve.has_small_factor(f))
                .collect();
            sieve.by_degree.push(found);
        }
        Ok(sieve)
    }

    fn has_small_factor(&self, f: &PolyFq) -> bool {
        (1..=f.degree() / 2)
            .flat_map(|d| &self.by_degree[d])
            .any(|p| f.div_rem_monic(p).1.is_zero())
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn of_degree(&self, d: usize) -> &[PolyFq] {
        &self.by_degree[d]
    }

    /// Factors a monic `f` with `deg f <= 2 * max_degree() + 1`.
    pub fn factor(&self, f: &PolyFq) -> Result<Factorization> {
        if f.q != self.q {
            return Err(Error::InvalidParameter(format!("polynomial over F_{} given to a sieve over F_{}", f.q, self.q)));
        }
        if !f.is_monic() {
            return Err(Error::NonMonic);
        }
        if f.degree() > 2 * self.max_degree() + 1 {
            return Err(Error::DegreeCap { degree: f.degree(), cap: 2 * self.max_degree() + 1 });
        }
        let mut rest = f.clone();
        let mut factors = Vec::new();
        'degrees: for d in 1..=self.max_degree() {
            for p in &self.by_degree[d] {
                if 2 * d > rest.degree() {
                    break 'degrees;
                }
                let mut e = 0;
                loop {
                    let (quot, rem) = rest.div_rem_monic(p);
                    if !rem.is_zero() {
                        break;
                    }
                    rest = quot;
                    e += 1;
                }
                if e > 0 {
                    factors.push((p.clone(), e));
                }
            }
        }
        if rest.degree() > 0 {
            match factors.iter_mut().find(|(p, _)| *p == rest) {
                Some((_, e)) => *e += 1,
                None => factors.push((rest, 1)),
            }
        }
        factors.sort();
        Ok(Factorization { factors })
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles.
pub fn factor(f: &PolyFq) -> Result<Factorization> {
    factor_with_caps(f, &Caps::default())
}

pub fn factor_with_caps(f: &PolyFq, caps: &Caps) -> Result<Factorization> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if f.degree() == 0 {
        return Err(Error::InvalidParameter("cannot factor a constant".into()));
    }
    if f.degree() > caps.max_degree {
        return Err(Error::DegreeCap { degree: f.degree(), cap: caps.max_degree });
    }
    IrreducibleSieve::new(f.q, f.degree() / 2, caps)?.factor(f)
}

/// The sieve's list of monic irreducibles of degree `m`.
pub fn irreducibles(q: u32, m: usize) -> Result<Vec<PolyFq>> {
    irreducibles_with_caps(q, m, &Caps::default())
}

pub fn irreducibles_with_caps(q: u32, m: usize, caps: &Caps) -> Result<Vec<PolyFq>> {
    if m > caps.max_degree {
        return Err(Error::DegreeCap { degree: m, cap: caps.max_degree });
    }
    Ok(IrreducibleSieve::new(q, m, caps)?.by_degree.swap_remove(m))
}

pub(crate) fn mobius(n: u64) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1i64, 2u64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

fn divisors(m: u64) -> impl Iterator<Item = u64> {
    (1..=m).filter(move |d| m % d == 0)
}

/// `(1/m) Σ_{d|m} μ(d) q^{m/d}`.
pub fn count_irreducible(q: u64, m: u32) -> u128 {
    if m == 0 {
        return 0;
    }
    let sum: i128 = divisors(m as u64).map(|d| mobius(d) as i128 * (q as i128).pow(m / d as u32)).sum();
    (sum / m as i128) as u128
}

/// Monic irreducibles `f` of the given degree with `f(z) = f(-z)`:
/// `(1/2m) Σ_{d|m, d odd} μ(d) (q^{m/d} - 1)` in degree `2m`, none in odd
/// degree.
pub fn count_self_negative_irreducible(q: u64, degree: u32) -> u128 {
    if degree == 0 || degree % 2 == 1 {
        return 0;
    }
    let m = degree / 2;
    let sum: i128 = divisors(m as u64)
        .filter(|d| d % 2 == 1)
        .map(|d| mobius(d) as i128 * ((q as i128).pow(m / d as u32) - 1))
        .sum();
    (sum / degree as i128) as u128
}

/// Brute-force count of the even monic irreducibles of degree `2m`, by
/// factoring every `g(z^2)` with `deg g = m`.
pub fn self_negative_irreducibles(q: u32, degree: usize) -> Result<Vec<PolyFq>> {
    self_negative_irreducibles_with_caps(q, degree, &Caps::default())
}

pub fn self_negative_irreducibles_with_caps(q: u32, degree: usize, caps: &Caps) -> Result<Vec<PolyFq>> {
    check_field(q, caps)?;
    if degree > caps.max_degree {
        return Err(Error::DegreeCap { degree, cap: caps.max_degree });
    }
    if degree == 0 || degree % 2 == 1 {
        return Ok(Vec::new());
    }
    let m = degree / 2;
    caps.check_budget("even polynomials", (q as u128).pow(m as u32))?;
    let sieve = IrreducibleSieve::new(q, m, caps)?;
    let mut out = Vec::new();
    for i in 0..(q as u64).pow(m as u32) {
        let f = PolyFq::monic_from_index(q, m, i).substitute_square();
        let fact = sieve.factor(&f)?;
        if fact.factors.len() == 1 && fact.factors[0].1 == 1 {
            out.push(f);
        }
    }
    Ok(out)
}
