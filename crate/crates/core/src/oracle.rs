//! Exhaustive ground truth for small instances.
//!
//! Some optimal schedule is synchronized, and a synchronized schedule is an
//! ordered subset of the jobs, so enumerating every feasible ordered subset
//! finds the optimum. Starts only grow along a prefix: once a job cannot be
//! appended it cannot be appended to any extension either, and the search
//! skips that branch.

use std::thread;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::schedule::{build_schedule, schedule_envelope, Instance, SyncSchedule};

/// Largest instance [`brute_force_opt`] accepts unless told otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult<T> {
    pub best_schedule: SyncSchedule<T>,
    /// Objective of `best_schedule`.
    pub optimum: T,
    /// Feasible ordered subsets evaluated, the empty one included.
    pub explored: u64,
}

struct Search<'a, T> {
    instance: &'a Instance<T>,
    used: Vec<bool>,
    path: Vec<usize>,
    best_value: T,
    best_path: Vec<usize>,
    explored: u64,
}

impl<'a, T: Scalar> Search<'a, T> {
    fn new(instance: &'a Instance<T>) -> Self {
        Self {
            instance,
            used: vec![false; instance.len()],
            path: Vec::with_capacity(instance.len()),
            best_value: T::zero(),
            best_path: Vec::new(),
            explored: 0,
        }
    }

    /// Visits every feasible extension of the current path in lexicographic
    /// order. A later candidate replaces the incumbent only if strictly
    /// better.
    fn extend(&mut self, time: &T, value: &T) {
        for pos in 0..self.instance.len() {
            if !self.used[pos] {
                self.visit(pos, time, value);
            }
        }
    }

    fn visit(&mut self, pos: usize, time: &T, value: &T) {
        let job = self.instance.job(pos);
        if !(*time < job.p) {
            return;
        }
        let completion = (time.clone() + job.p.clone()).half();
        let value = value.clone() + job.w.clone() * (completion.clone() - time.clone());
        self.used[pos] = true;
        self.path.push(pos);
        self.explored += 1;
        if value > self.best_value {
            self.best_value = value.clone();
            self.best_path.clone_from(&self.path);
        }
        self.extend(&completion, &value);
        self.path.pop();
        self.used[pos] = false;
    }
}

fn check_size<T: Scalar>(instance: &Instance<T>, limit: usize) -> Result<()> {
    if instance.len() > limit {
        return Err(Error::InstanceTooLarge {
            n: instance.len(),
            limit,
        });
    }
    Ok(())
}

fn finish<T: Scalar>(
    instance: &Instance<T>,
    best_path: &[usize],
    explored: u64,
) -> Result<OracleResult<T>> {
    let best_schedule = build_schedule(instance, best_path)?;
    let optimum = best_schedule.objective.clone();
    Ok(OracleResult {
        best_schedule,
        optimum,
        explored,
    })
}

/// Depth-first enumeration of every feasible ordered subset. Ties at the
/// optimum go to the lexicographically first order.
pub fn brute_force_opt<T: Scalar>(instance: &Instance<T>, limit: usize) -> Result<OracleResult<T>> {
    check_size(instance, limit)?;
    let mut search = Search::new(instance);
    search.explored = 1;
    search.extend(&T::zero(), &T::zero());
    finish(instance, &search.best_path, search.explored)
}

/// [`brute_force_opt`] with one thread per first job. Produces the same
/// result, including the tie-break.
pub fn brute_force_opt_parallel<T: Scalar>(
    instance: &Instance<T>,
    limit: usize,
) -> Result<OracleResult<T>> {
    check_size(instance, limit)?;
    let branches: Vec<(T, Vec<usize>, u64)> = thread::scope(|scope| {
        let handles: Vec<_> = (0..instance.len())
            .map(|first| {
                scope.spawn(move || {
                    let mut search = Search::new(instance);
                    search.visit(first, &T::zero(), &T::zero());
                    (search.best_value, search.best_path, search.explored)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle branch panicked"))
            .collect()
    });

    let mut best_value = T::zero();
    let mut best_path = Vec::new();
    let mut explored = 1;
    for (value, path, count) in branches {
        explored += count;
        if value > best_value {
            best_value = value;
            best_path = path;
        }
    }
    finish(instance, &best_path, explored)
}

/// Area of the envelope over the optimal schedule's completion times and
/// weights. Equals the optimum.
pub fn optimal_envelope_area<T: Scalar>(
    instance: &Instance<T>,
    result: &OracleResult<T>,
) -> Result<T> {
    Ok(schedule_envelope(instance, &result.best_schedule)?.area())
}
