//! Exact rational scalars and the `num/den` text form used in every output.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = Ratio<i128>;

pub fn q(num: i128, den: i128) -> Q {
    Q::new(num, den)
}

pub fn int(n: i128) -> Q {
    Q::from_integer(n)
}

/// `x^k` for any integer `k`; `x` must be nonzero when `k < 0`.
pub fn pow(x: Q, k: i32) -> Q {
    if k >= 0 {
        num_traits::pow(x, k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

/// Always `num/den`, including integers (`3/1`) and zero (`0/1`).
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Serializes as the `num/den` string, for `#[serde(serialize_with)]`.
pub fn serialize_q<S: serde::Serializer>(x: &Q, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&format_q(x))
}

/// Accepts `a/b`, a bare integer, or a terminating decimal such as `0.5`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(q(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().map_err(|_| bad())? };
        let den = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let mag = w.abs() * den + f;
        return Ok(q(if negative { -mag } else { mag }, den));
    }
    s.parse::<i128>().map(int).map_err(|_| bad())
}

/// Rewrites `values` over their least common denominator.
pub fn common_denominator(values: &[Q]) -> (Vec<i128>, i128) {
    let den = values.iter().fold(1i128, |acc, v| acc.lcm(v.denom()));
    let nums = values.iter().map(|v| v.numer() * (den / v.denom())).collect();
    (nums, den)
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

/// Generalized binomial coefficient `C(top, k)` for rational `top`.
pub fn binomial(top: Q, k: u32) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc *= top - int(i as i128);
        acc /= int(i as i128 + 1);
    }
    acc
}

pub fn factorial(n: u32) -> i128 {
    (1..=n as i128).product()
}

pub fn abs(x: &Q) -> Q {
    if x.is_negative() {
        -*x
    } else {
        *x
    }
}

pub fn zero() -> Q {
    Q::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_q("1/2").unwrap(), q(1, 2));
        assert_eq!(parse_q("-2").unwrap(), int(-2));
        assert_eq!(parse_q("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_q("-1.5").unwrap(), q(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn formats_as_num_den() {
        assert_eq!(format_q(&q(8, 49)), "8/49");
        assert_eq!(format_q(&int(3)), "3/1");
        assert_eq!(format_q(&zero()), "0/1");
        assert_eq!(format_q(&q(2, -4)), "-1/2");
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(int(5), 2), int(10));
        assert_eq!(binomial(int(3), 3), int(1));
        assert_eq!(binomial(int(2), 3), int(0));
        // C(1/2, 2) = (1/2)(-1/2)/2
        assert_eq!(binomial(q(1, 2), 2), q(-1, 8));
    }

    #[test]
    fn common_denominator_rescales() {
        let (nums, den) = common_denominator(&[q(1, 2), q(1, 3), int(2)]);
        assert_eq!(den, 6);
        assert_eq!(nums, vec![3, 2, 12]);
    }
}
