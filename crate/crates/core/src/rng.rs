//! Seeded sampling of small-height Gaussian rationals, used by the
//! evaluation-rank oracle and the randomized identity suites. Everything is
//! reproducible from a 64-bit seed.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

/// The deterministic generator used throughout the crate.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `[-height, height]` and denominator in
/// `[1, height]`.
pub fn rational(rng: &mut impl Rng, height: u32) -> BigRational {
    let h = height.max(1) as i64;
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A Gaussian rational with small-height real and imaginary parts.
pub fn scalar(rng: &mut impl Rng, height: u32) -> Scalar {
    Scalar::new(rational(rng, height), rational(rng, height))
}

/// A small-height real rational as a [`Scalar`].
pub fn real_scalar(rng: &mut impl Rng, height: u32) -> Scalar {
    Scalar::new(rational(rng, height), BigRational::from_integer(0.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_seed() {
        let mut a = seeded(42);
        let mut b = seeded(42);
        for _ in 0..16 {
            assert_eq!(scalar(&mut a, 10), scalar(&mut b, 10));
        }
    }
}
