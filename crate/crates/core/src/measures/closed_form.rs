use num_traits::{One, Zero};

use crate::coxeter::{CoxeterGroup, Family};
use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, int, pow, Q};

/// Value of `M_{W,x}` at `w` from the formula for its family, a function of
/// `d(w)` alone.
///
/// * `S_N`: `C(x+N-1-d, N) / x^N`
/// * `B_n`: `Π_{k=1..n} (x+2k-1-2d) / (x^n 2^n n!)`
/// * `I2(p)`: `(x+1)(x+p-1)`, `(x+1)(x-1)`, `(x-1)(x-p+1)` for `d = 0, 1, 2`,
///   over `2p x^2`; `G2` is the case `p = 6`.
///
/// `D_n` has no closed form here and gives [`Error::UnsupportedFamily`].
pub fn closed_form(g: &CoxeterGroup, x: Q, w: usize) -> Result<Q> {
    if x.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let desc = g.descriptor();
    let d = int(g.element(w).descents.len() as i128);
    match desc.family {
        Family::A => {
            let n = desc.rank_or_p as u32 + 1;
            Ok(binomial(x + int(n as i128 - 1) - d, n) / pow(x, n as i32))
        }
        Family::B => {
            let n = desc.rank_or_p as u32;
            let num: Q = (1..=n as i128).map(|k| x + int(2 * k - 1) - int(2) * d).product();
            Ok(num / (pow(x, n as i32) * int(1 << n) * int(factorial(n))))
        }
        Family::I2 | Family::G2 => {
            let p = int(if desc.family == Family::G2 { 6 } else { desc.rank_or_p as i128 });
            let one = Q::one();
            let num = match g.element(w).descents.len() {
                0 => (x + one) * (x + p - one),
                1 => (x + one) * (x - one),
                _ => (x - one) * (x - p + one),
            };
            Ok(num / (int(2) * p * x * x))
        }
        Family::D => Err(Error::UnsupportedFamily(desc.to_string())),
    }
}

fn exponent_product(g: &CoxeterGroup, x: Q, sign: i128) -> Q {
    let num: Q = g.exponents().iter().map(|&m| x + int(sign * m as i128)).product();
    num / (pow(x, g.rank() as i32) * int(g.order() as i128))
}

/// `Π (x + m_i) / (x^n |W|)`.
pub fn identity_value(g: &CoxeterGroup, x: Q) -> Q {
    exponent_product(g, x, 1)
}

/// `Π (x - m_i) / (x^n |W|)`.
pub fn longest_value(g: &CoxeterGroup, x: Q) -> Q {
    exponent_product(g, x, -1)
}
