//! Scalar abstraction for the ratio-valued parameters (δ, η, γ, θ).
//!
//! Degrees and edge counts are always exact integers. The parameters that
//! the bounds and the extremal machinery are phrased in are ratios, and those
//! are generic over [`Scalar`] so the same code runs on exact rationals
//! (the default, see [`crate::Rational`]) or on `f32`/`f64` for quick sweeps.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Float, Num};

pub trait Scalar: Num + PartialOrd + Copy + Debug + Display + 'static {
    /// The ratio `numer / denom`. `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_usize(v: usize) -> Self {
        Self::from_ratio(v as i64, 1)
    }

    /// Smallest integer `k` with `k >= self`.
    fn ceil_int(self) -> i64;

    /// Largest integer `k` with `k <= self`.
    fn floor_int(self) -> i64;

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    fn in_unit_interval(self) -> bool {
        self >= Self::zero() && self <= Self::one()
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_ratio(numer: i64, denom: i64) -> Self {
                numer as $t / denom as $t
            }

            fn ceil_int(self) -> i64 {
                Float::ceil(self) as i64
            }

            fn floor_int(self) -> i64 {
                Float::floor(self) as i64
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for Ratio<i64> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn ceil_int(self) -> i64 {
        self.ceil().to_integer()
    }

    fn floor_int(self) -> i64 {
        self.floor().to_integer()
    }
}

/// Compares a count against a scalar threshold: `count >= bound`.
pub fn at_least<T: Scalar>(count: usize, bound: T) -> bool {
    T::from_usize(count) >= bound
}

/// Compares a count against a scalar threshold: `count <= bound`.
pub fn at_most<T: Scalar>(count: usize, bound: T) -> bool {
    T::from_usize(count) <= bound
}

/// `16·√eta < gamma`, evaluated without square roots as `256·eta < gamma²`
/// (both sides nonnegative).
pub fn sqrt_scaled_below<T: Scalar>(factor: i64, eta: T, gamma: T) -> bool {
    gamma > T::zero() && T::from_ratio(factor * factor, 1) * eta < gamma * gamma
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_rounding() {
        let r = Ratio::new(7i64, 2);
        assert_eq!(r.ceil_int(), 4);
        assert_eq!(r.floor_int(), 3);
        let whole = Ratio::from_usize(5);
        assert_eq!(whole.ceil_int(), 5);
        assert_eq!(whole.floor_int(), 5);
    }

    #[test]
    fn float_rounding_matches_rational() {
        for (p, q) in [(1, 3), (7, 2), (10, 5), (0, 1), (13, 4)] {
            let r = Ratio::<i64>::from_ratio(p, q);
            let f = f64::from_ratio(p, q);
            assert_eq!(r.ceil_int(), f.ceil_int());
            assert_eq!(r.floor_int(), f.floor_int());
        }
    }

    #[test]
    fn sqrt_comparison() {
        // 16·√(1/4096) = 1/4, not strictly below 1/4.
        let eta = Ratio::new(1i64, 4096);
        assert!(!sqrt_scaled_below(16, eta, Ratio::new(1, 4)));
        assert!(sqrt_scaled_below(16, Ratio::new(1, 5000), Ratio::new(1, 4)));
        assert!(sqrt_scaled_below(
            16,
            Ratio::from_usize(0),
            Ratio::new(1, 4)
        ));
        assert!(!sqrt_scaled_below(
            16,
            Ratio::from_usize(0),
            Ratio::from_usize(0)
        ));
    }
}
