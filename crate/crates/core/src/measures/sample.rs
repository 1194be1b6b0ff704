use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Measure;
use crate::caps::Caps;
use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::rational::common_denominator;

/// Draws `count` elements of `W` with law `m` by inverse transform over the
/// exact coefficient table. Signed measures are refused.
pub fn sample(g: &CoxeterGroup, m: &Measure<'_>, seed: u64, count: usize) -> Result<Vec<usize>> {
    if !std::ptr::eq(g, m.group()) {
        return Err(Error::GroupMismatch);
    }
    if !m.is_nonnegative() {
        return Err(Error::NegativeCoefficients);
    }
    let (nums, den) = common_denominator(m.coefficients());
    let cumulative: Vec<u128> = nums
        .iter()
        .scan(0u128, |acc, &n| {
            *acc += n as u128;
            Some(*acc)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let u = rng.random_range(0..den as u128);
            cumulative.partition_point(|&c| c <= u)
        })
        .collect())
}

/// Inverse Gilbert–Shannon–Reeds `a`-shuffles of `n` cards: every card gets
/// an independent uniform digit in `0..a` and the deck is sorted stably by
/// digit. Each result lists the original positions (1-based) in their new
/// order, so its law is `M_{S_n,a}`.
pub fn gsr_shuffle(n: usize, a: u32, seed: u64, count: usize) -> Result<Vec<Vec<u32>>> {
    gsr_shuffle_with_caps(n, a, seed, count, &Caps::default())
}

pub fn gsr_shuffle_with_caps(n: usize, a: u32, seed: u64, count: usize, caps: &Caps) -> Result<Vec<Vec<u32>>> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!("shuffle parameter a = {a} must be at least 2")));
    }
    if n == 0 || n > caps.max_rank_a + 1 {
        return Err(Error::InvalidParameter(format!("deck size {n} must be in 1..={}", caps.max_rank_a + 1)));
    }
    caps.check_budget("shuffled cards", n as u128 * count as u128)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deck: Vec<(u32, u32)> = Vec::with_capacity(n);
    Ok((0..count)
        .map(|_| {
            deck.clear();
            deck.extend((1..=n as u32).map(|card| (rng.random_range(0..a), card)));
            deck.sort_by_key(|&(digit, _)| digit);
            deck.iter().map(|&(_, card)| card).collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, GroupDescriptor};
    use crate::measures::measure;
    use crate::rational::{int, q};

    #[test]
    fn single_card_is_fixed() {
        assert!(gsr_shuffle(1, 3, 7, 50).unwrap().iter().all(|p| p == &[1]));
    }

    #[test]
    fn shuffles_are_permutations_and_deterministic() {
        let a = gsr_shuffle(5, 2, 11, 200).unwrap();
        assert_eq!(a, gsr_shuffle(5, 2, 11, 200).unwrap());
        for p in &a {
            let mut s = p.clone();
            s.sort_unstable();
            assert_eq!(s, vec![1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn signed_measure_refused() {
        let s3 = build_group(GroupDescriptor::symmetric(3)).unwrap();
        let m = measure(&s3, q(1, 2)).unwrap();
        assert!(matches!(sample(&s3, &m, 1, 10), Err(Error::NegativeCoefficients)));
    }

    #[test]
    fn sample_frequencies_track_coefficients() {
        let s3 = build_group(GroupDescriptor::symmetric(3)).unwrap();
        let m = measure(&s3, int(2)).unwrap();
        let draws = sample(&s3, &m, 3, 40_000).unwrap();
        let mut counts = vec![0usize; s3.order()];
        for w in draws {
            counts[w] += 1;
        }
        for (w, &c) in counts.iter().enumerate() {
            let expected = m.coefficient(w);
            let p = *expected.numer() as f64 / *expected.denom() as f64;
            assert!((c as f64 / 40_000.0 - p).abs() < 0.01, "w={w}");
        }
    }
}
