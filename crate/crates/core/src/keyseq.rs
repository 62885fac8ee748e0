//! Key-sequence 1/2-approximation with its envelope certificate.
//!
//! For a sorted instance the key sequence is the unique subsequence
//! `i1 < ... < il` of positions such that
//!
//! 1. `il` is the last job,
//! 2. the weights `w(i1) > ... > w(il)` strictly decrease,
//! 3. every job in the block `i(j-1)+1 ..= ij` weighs at most `w(ij)`.
//!
//! The upper envelope steps through `(p(ij), w(ij))`; its area `u*` bounds
//! the optimum from above, and twice the objective of the key schedule from
//! below, so `u*/2 <= key <= opt <= u*`.

use crate::envelope::Envelope;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::schedule::{build_schedule, Instance, SyncSchedule};

#[derive(Debug, Clone, PartialEq)]
pub struct KeySequence<T> {
    /// Instance positions, strictly increasing, ending at the last job.
    pub positions: Vec<usize>,
    pub upper_envelope: Envelope<T>,
    /// Area of the upper envelope.
    pub ustar: T,
}

/// Greedy right-to-left scan: the last job is always a key job, and an
/// earlier job joins iff its weight strictly exceeds every weight to its
/// right.
pub fn key_sequence<T: Scalar>(instance: &Instance<T>) -> Result<KeySequence<T>> {
    let jobs = instance.jobs();
    let last = jobs.len().checked_sub(1).ok_or(Error::EmptyInstance)?;

    let mut positions = vec![last];
    let mut running_max = &jobs[last].w;
    for pos in (0..last).rev() {
        if jobs[pos].w > *running_max {
            running_max = &jobs[pos].w;
            positions.push(pos);
        }
    }
    positions.reverse();

    let breakpoints = positions.iter().map(|&i| jobs[i].p.clone()).collect();
    let heights = positions.iter().map(|&i| jobs[i].w.clone()).collect();
    let upper_envelope = Envelope::new(breakpoints, heights)?;
    let ustar = upper_envelope.area();
    Ok(KeySequence {
        positions,
        upper_envelope,
        ustar,
    })
}

/// Checks conditions 1-3 literally for a candidate subsequence.
pub fn verify_key_conditions<T: Scalar>(instance: &Instance<T>, positions: &[usize]) -> bool {
    let n = instance.len();
    let Some(&last) = positions.last() else {
        return false;
    };
    if last + 1 != n || positions.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    let jobs = instance.jobs();
    if positions.windows(2).any(|w| !(jobs[w[0]].w > jobs[w[1]].w)) {
        return false;
    }
    let mut block_start = 0;
    for &key in positions {
        if jobs[block_start..=key].iter().any(|j| j.w > jobs[key].w) {
            return false;
        }
        block_start = key + 1;
    }
    true
}

/// The key schedule with its certificate `u*`.
#[derive(Debug, Clone, PartialEq)]
pub struct KeySolution<T> {
    pub schedule: SyncSchedule<T>,
    pub key_sequence: KeySequence<T>,
}

impl<T: Scalar> KeySolution<T> {
    /// `u*`: at least the optimum and at most twice the returned objective.
    pub fn certificate(&self) -> &T {
        &self.key_sequence.ustar
    }

    /// Objective over certificate, always within `[1/2, 1]`.
    pub fn certified_ratio(&self) -> f64 {
        let ustar = self.certificate().to_f64_lossy();
        if ustar == 0.0 {
            1.0
        } else {
            self.schedule.objective.to_f64_lossy() / ustar
        }
    }
}

/// Schedules the key jobs in key order. Each key job starts no later than
/// the previous key job's processing time, which is strictly below its own,
/// so the order is always feasible.
pub fn solve_keyseq<T: Scalar>(instance: &Instance<T>) -> Result<KeySolution<T>> {
    let key_sequence = key_sequence(instance)?;
    let schedule = build_schedule(instance, &key_sequence.positions)?;
    Ok(KeySolution {
        schedule,
        key_sequence,
    })
}
