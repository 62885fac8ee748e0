//! Step-function envelopes.
//!
//! An envelope over breakpoints `0 = q0 < q1 < ... < ql` and heights
//! `u1, ..., ul` takes the value `ui` on `(q(i-1), qi]` (and `u1` at zero),
//! and is zero past the last breakpoint.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope<T> {
    breakpoints: Vec<T>,
    heights: Vec<T>,
}

impl<T: Scalar> Envelope<T> {
    pub fn new(breakpoints: Vec<T>, heights: Vec<T>) -> Result<Self> {
        if breakpoints.is_empty() {
            return Err(Error::InvalidEnvelope("no steps"));
        }
        if breakpoints.len() != heights.len() {
            return Err(Error::InvalidEnvelope(
                "breakpoint and height counts differ",
            ));
        }
        let mut prev = T::zero();
        for q in &breakpoints {
            if !(*q > prev) {
                return Err(Error::InvalidEnvelope(
                    "breakpoints must be positive and strictly increasing",
                ));
            }
            prev = q.clone();
        }
        if heights.iter().any(|u| !(*u >= T::zero())) {
            return Err(Error::InvalidEnvelope("heights must be nonnegative"));
        }
        Ok(Self {
            breakpoints,
            heights,
        })
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn heights(&self) -> &[T] {
        &self.heights
    }

    pub fn steps(&self) -> usize {
        self.breakpoints.len()
    }

    /// `sum ui * (qi - q(i-1))` with `q0 = 0`.
    pub fn area(&self) -> T {
        let mut prev = T::zero();
        let mut area = T::zero();
        for (q, u) in self.breakpoints.iter().zip(&self.heights) {
            area = area + u.clone() * (q.clone() - prev);
            prev = q.clone();
        }
        area
    }

    /// Value of the step function at `x >= 0`.
    pub fn value_at(&self, x: &T) -> T {
        // first breakpoint with q >= x
        let idx = self.breakpoints.partition_point(|q| q < x);
        self.heights.get(idx).cloned().unwrap_or_else(T::zero)
    }

    /// `true` if the heights never increase from left to right.
    pub fn is_non_increasing(&self) -> bool {
        self.heights.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Free-function form of [`Envelope::area`].
pub fn envelope_area<T: Scalar>(envelope: &Envelope<T>) -> T {
    envelope.area()
}
