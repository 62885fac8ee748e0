//! Exact solver for antithetical instances.
//!
//! An instance is antithetical when `p_i <= p_j` implies `w_i >= w_j` for
//! every pair of jobs: shorter jobs are never lighter. On such instances the
//! schedule that runs every job on the shared processor in processing-time
//! order is optimal.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::schedule::{Builder, Instance, SyncSchedule};

/// Checks the two-sided definition on the sorted job list in one pass.
///
/// Weights must never increase, and jobs of equal length must have equal
/// weight (the implication applies in both directions for a tie).
pub fn is_antithetical<T: Scalar>(instance: &Instance<T>) -> bool {
    instance.jobs().windows(2).all(|pair| {
        let (a, b) = (&pair[0], &pair[1]);
        if a.p == b.p {
            a.w == b.w
        } else {
            a.w >= b.w
        }
    })
}

/// Runs every job in processing-time order.
///
/// In exact arithmetic each start stays strictly below the next job's
/// processing time. With floats, a long run of equal-length jobs can push
/// the start onto `p` once the remaining overlap falls under one ulp; such a
/// job is left on its private processor, which changes the objective by less
/// than the rounding error already present.
pub fn solve_antithetical<T: Scalar>(instance: &Instance<T>) -> Result<SyncSchedule<T>> {
    if !is_antithetical(instance) {
        return Err(Error::NotAntithetical);
    }
    Ok(spt_schedule(instance))
}

/// The processing-time ordered schedule over all jobs, with no instance
/// class check.
pub fn spt_schedule<T: Scalar>(instance: &Instance<T>) -> SyncSchedule<T> {
    let mut builder = Builder::with_capacity(instance, instance.len());
    for pos in 0..instance.len() {
        builder.try_push(pos);
    }
    builder.finish()
}
