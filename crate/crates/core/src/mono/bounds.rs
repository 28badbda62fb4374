//! The three-piece degree bounds.

use super::MonoError;
use crate::scalar::Scalar;

fn check<T: Scalar>(delta: T) -> Result<(), MonoError> {
    if delta.in_unit_interval() {
        Ok(())
    } else {
        Err(MonoError::DeltaOutOfRange(delta.to_string()))
    }
}

/// Guaranteed size of a monochromatic connected matching when `δ(G) = δn`:
/// `δn/2` up to `δ = 2/3`, `(2δ−1)n` up to `3/4`, then `n/2`.
pub fn matching_bound<T: Scalar>(delta: T, n: usize) -> Result<T, MonoError> {
    check(delta)?;
    let n = T::from_usize(n);
    let two = T::from_ratio(2, 1);
    Ok(if delta <= T::from_ratio(2, 3) {
        delta * n / two
    } else if delta <= T::from_ratio(3, 4) {
        (two * delta - T::one()) * n
    } else {
        n / two
    })
}

/// Guaranteed `min(|H ∩ X|, |H ∩ Y|)` of the best monochromatic component;
/// the same three pieces as [`matching_bound`].
pub fn component_bound<T: Scalar>(delta: T, n: usize) -> Result<T, MonoError> {
    matching_bound(delta, n)
}

/// `f(δ)`: `δ` up to `2/3`, `4δ − 2` up to `3/4`, then `1`.
pub fn cycle_bound<T: Scalar>(delta: T) -> Result<T, MonoError> {
    check(delta)?;
    Ok(if delta <= T::from_ratio(2, 3) {
        delta
    } else if delta <= T::from_ratio(3, 4) {
        T::from_ratio(4, 1) * delta - T::from_ratio(2, 1)
    } else {
        T::one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn r(a: i64, b: i64) -> Ratio<i64> {
        Ratio::new(a, b)
    }

    #[test]
    fn breakpoints_agree() {
        assert_eq!(matching_bound(r(2, 3), 12), Ok(r(4, 1)));
        assert_eq!(r(2, 3) * r(12, 1) / r(2, 1), (r(4, 3) - r(1, 1)) * r(12, 1));
        assert_eq!(matching_bound(r(3, 4), 8), Ok(r(4, 1)));
        assert_eq!(matching_bound(r(1, 1), 10), Ok(r(5, 1)));
        assert_eq!(cycle_bound(r(2, 3)), Ok(r(2, 3)));
        assert_eq!(cycle_bound(r(3, 4)), Ok(r(1, 1)));
        assert_eq!(cycle_bound(r(0, 1)), Ok(r(0, 1)));
    }

    #[test]
    fn floats_follow_the_same_pieces() {
        assert!((matching_bound(0.7f64, 10).unwrap() - 4.0).abs() < 1e-12);
        assert!((cycle_bound(0.7f32).unwrap() - 0.8).abs() < 1e-6);
    }

    #[test]
    fn out_of_range() {
        assert!(matching_bound(r(5, 4), 4).is_err());
        assert!(cycle_bound(-0.1f64).is_err());
    }
}
