//! Numeric abstraction shared by every solver.
//!
//! Schedules only ever add, subtract, multiply and halve, so any ordered
//! field works. Binary floats keep all derived times dyadic; the rational
//! implementations make the same code exact.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};

/// An ordered field usable for processing times, weights and objectives.
pub trait Scalar: Num + Clone + PartialOrd + Debug + ToPrimitive + Send + Sync + 'static {
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half(&self) -> Self {
        self.clone() / Self::two()
    }

    /// `false` for NaN and infinities. Exact types are always finite.
    fn is_finite_value(&self) -> bool {
        true
    }

    /// Equality up to the type's comparison tolerance (relative for floats,
    /// exact for rationals).
    fn approx_eq(&self, other: &Self) -> bool;

    /// Lossy conversion used for reporting.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn half(&self) -> Self {
                *self * 0.5
            }

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }

            fn approx_eq(&self, other: &Self) -> bool {
                if self == other {
                    return true;
                }
                let scale = self.abs().max(other.abs());
                (self - other).abs() <= $tol * scale
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-5);

macro_rules! exact_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn approx_eq(&self, other: &Self) -> bool {
                self == other
            }
        }
    };
}

exact_scalar!(Ratio<i64>);
exact_scalar!(Ratio<i128>);
exact_scalar!(Ratio<BigInt>);

/// Relative comparison with an explicit tolerance, for reporting code that
/// works on `f64` summaries.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}
