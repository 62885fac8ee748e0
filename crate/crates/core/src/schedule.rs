//! Problem data model and synchronized schedules.
//!
//! A synchronized schedule is fully determined by the ordered list of jobs
//! that use the shared processor: each job starts on the shared processor
//! when its predecessor completes and completes at `(start + p) / 2`, the
//! same moment it finishes on its private processor.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{BuildHasher, RandomState};

use crate::envelope::Envelope;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One agent's divisible job.
#[derive(Debug, Clone, PartialEq)]
pub struct Job<T> {
    pub id: String,
    /// Processing time.
    pub p: T,
    /// Payoff per unit of overlap.
    pub w: T,
}

impl<T> Job<T> {
    pub fn new(id: impl Into<String>, p: T, w: T) -> Self {
        Self {
            id: id.into(),
            p,
            w,
        }
    }
}

/// A validated job set, sorted by processing time and then by weight, both
/// ascending. Zero-length jobs have been dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<T> {
    jobs: Vec<Job<T>>,
}

impl<T: Scalar> Instance<T> {
    pub fn jobs(&self) -> &[Job<T>] {
        &self.jobs
    }

    pub fn job(&self, position: usize) -> &Job<T> {
        &self.jobs[position]
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    pub fn position_of(&self, id: &str) -> Option<usize> {
        self.jobs.iter().position(|j| j.id == id)
    }

    /// Map from job id to sorted position.
    pub fn index_by_id(&self) -> HashMap<&str, usize> {
        self.jobs
            .iter()
            .enumerate()
            .map(|(i, j)| (j.id.as_str(), i))
            .collect()
    }

    /// Applies `f` to every weight and renormalizes.
    pub fn map_weights(&self, f: impl Fn(&T) -> T) -> Result<Self> {
        normalize_instance(
            self.jobs
                .iter()
                .map(|j| Job::new(j.id.clone(), j.p.clone(), f(&j.w)))
                .collect(),
        )
    }

    /// Applies `f` to every processing time and renormalizes.
    pub fn map_processing_times(&self, f: impl Fn(&T) -> T) -> Result<Self> {
        normalize_instance(
            self.jobs
                .iter()
                .map(|j| Job::new(j.id.clone(), f(&j.p), j.w.clone()))
                .collect(),
        )
    }
}

/// Validates raw jobs and brings them into canonical order.
///
/// Zero-length jobs are removed. The remaining jobs are stably sorted by
/// `p` ascending with ties broken by `w` ascending, so the heaviest job of a
/// tie comes last.
pub fn normalize_instance<T: Scalar>(raw_jobs: Vec<Job<T>>) -> Result<Instance<T>> {
    for job in &raw_jobs {
        for (field, value) in [("p", &job.p), ("w", &job.w)] {
            if !value.is_finite_value() {
                return Err(Error::NonFiniteParameter {
                    id: job.id.clone(),
                    field,
                });
            }
            if !(*value >= T::zero()) {
                return Err(Error::NegativeParameter {
                    id: job.id.clone(),
                    field,
                });
            }
        }
    }
    if let Some(id) = first_duplicate_id(&raw_jobs) {
        return Err(Error::DuplicateId(id.to_string()));
    }

    let mut jobs: Vec<Job<T>> = raw_jobs.into_iter().filter(|j| j.p > T::zero()).collect();
    jobs.sort_by(|a, b| {
        a.p.partial_cmp(&b.p)
            .expect("finite")
            .then_with(|| a.w.partial_cmp(&b.w).expect("finite"))
    });
    Ok(Instance { jobs })
}

/// First id (in input order) that occurs more than once.
///
/// Sorting 64-bit id hashes stays cache friendly at millions of jobs, where
/// a hash set of strings does not. Only ids whose hashes collide are
/// compared as strings.
fn first_duplicate_id<T>(jobs: &[Job<T>]) -> Option<&str> {
    let hasher = RandomState::new();
    let mut hashes: Vec<(u64, usize)> = jobs
        .iter()
        .enumerate()
        .map(|(i, j)| (hasher.hash_one(&j.id), i))
        .collect();
    hashes.sort_unstable();

    let mut suspects: Vec<usize> = Vec::new();
    for run in hashes
        .chunk_by(|a, b| a.0 == b.0)
        .filter(|run| run.len() > 1)
    {
        suspects.extend(run.iter().map(|&(_, i)| i));
    }
    if suspects.is_empty() {
        return None;
    }
    suspects.sort_unstable();
    let mut seen = HashSet::with_capacity(suspects.len());
    suspects
        .into_iter()
        .map(|i| jobs[i].id.as_str())
        .find(|id| !seen.insert(*id))
}

/// One job's slot on the shared processor.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduledJob<T> {
    /// Position of the job in its [`Instance`].
    pub job: usize,
    pub start: T,
    /// Completion on both the shared and the private processor.
    pub completion: T,
}

impl<T: Scalar> ScheduledJob<T> {
    /// Time the job spends on both processors at once.
    pub fn overlap(&self) -> T {
        self.completion.clone() - self.start.clone()
    }
}

/// A synchronized schedule together with its derived times and objective.
///
/// Values built by [`build_schedule`] satisfy every invariant; the fields
/// are public so that deserialized or hand-made schedules can be checked
/// with [`validate_schedule`].
#[derive(Debug, Clone, PartialEq)]
pub struct SyncSchedule<T> {
    pub entries: Vec<ScheduledJob<T>>,
    pub objective: T,
}

impl<T: Scalar> SyncSchedule<T> {
    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
            objective: T::zero(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Instance positions in shared-processor order.
    pub fn order(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.job).collect()
    }

    pub fn order_ids<'a>(&self, instance: &'a Instance<T>) -> Vec<&'a str> {
        self.entries
            .iter()
            .map(|e| instance.job(e.job).id.as_str())
            .collect()
    }

    /// Completion time of the last job, or zero.
    pub fn makespan(&self) -> T {
        self.entries
            .last()
            .map(|e| e.completion.clone())
            .unwrap_or_else(T::zero)
    }

    /// Private completion time of every instance job: its synchronized
    /// completion if it uses the shared processor, otherwise `p`.
    pub fn private_completions(&self, instance: &Instance<T>) -> Vec<T> {
        let mut out: Vec<T> = instance.jobs().iter().map(|j| j.p.clone()).collect();
        for e in &self.entries {
            if let Some(slot) = out.get_mut(e.job) {
                *slot = e.completion.clone();
            }
        }
        out
    }
}

/// Incremental form of the recurrence, shared by the solvers.
pub(crate) struct Builder<'a, T> {
    instance: &'a Instance<T>,
    schedule: SyncSchedule<T>,
    time: T,
}

impl<'a, T: Scalar> Builder<'a, T> {
    pub(crate) fn with_capacity(instance: &'a Instance<T>, capacity: usize) -> Self {
        let mut schedule = SyncSchedule::empty();
        schedule.entries.reserve(capacity);
        Self {
            instance,
            schedule,
            time: T::zero(),
        }
    }

    /// Appends the job at `position`, or returns `false` without changing
    /// anything if its start would not lie below its processing time.
    pub(crate) fn try_push(&mut self, position: usize) -> bool {
        let job = self.instance.job(position);
        if !(self.time < job.p) {
            return false;
        }
        let start = self.time.clone();
        let completion = (start.clone() + job.p.clone()).half();
        self.schedule.objective =
            self.schedule.objective.clone() + job.w.clone() * (completion.clone() - start.clone());
        self.time = completion.clone();
        self.schedule.entries.push(ScheduledJob {
            job: position,
            start,
            completion,
        });
        true
    }

    pub(crate) fn finish(self) -> SyncSchedule<T> {
        self.schedule
    }
}

/// Builds the synchronized schedule that runs the jobs at `order` (instance
/// positions) on the shared processor, in that order.
pub fn build_schedule<T: Scalar>(
    instance: &Instance<T>,
    order: &[usize],
) -> Result<SyncSchedule<T>> {
    let mut used = vec![false; instance.len()];
    let mut builder = Builder::with_capacity(instance, order.len());
    for &pos in order {
        if pos >= instance.len() {
            return Err(Error::UnknownJob(format!("#{pos}")));
        }
        let id = &instance.job(pos).id;
        if std::mem::replace(&mut used[pos], true) {
            return Err(Error::RepeatedJob(id.clone()));
        }
        if !builder.try_push(pos) {
            return Err(Error::InfeasiblePermutation(id.clone()));
        }
    }
    Ok(builder.finish())
}

/// Same as [`build_schedule`] with the order given as job ids.
pub fn build_schedule_by_ids<T: Scalar, S: AsRef<str>>(
    instance: &Instance<T>,
    order: &[S],
) -> Result<SyncSchedule<T>> {
    let index = instance.index_by_id();
    let positions = order
        .iter()
        .map(|id| {
            index
                .get(id.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownJob(id.as_ref().to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    build_schedule(instance, &positions)
}

/// `sum w * (completion - start)` over the scheduled jobs, recomputed from
/// the entries.
pub fn total_weighted_overlap<T: Scalar>(instance: &Instance<T>, schedule: &SyncSchedule<T>) -> T {
    schedule
        .entries
        .iter()
        .filter(|e| e.job < instance.len())
        .fold(T::zero(), |acc, e| {
            acc + instance.job(e.job).w.clone() * e.overlap()
        })
}

/// The envelope whose breakpoints are the completion times and whose
/// heights are the weights of the scheduled jobs. Its area telescopes to
/// the schedule's objective.
pub fn schedule_envelope<T: Scalar>(
    instance: &Instance<T>,
    schedule: &SyncSchedule<T>,
) -> Result<Envelope<T>> {
    if schedule.is_empty() {
        return Err(Error::EmptySchedule);
    }
    let mut breakpoints = Vec::with_capacity(schedule.len());
    let mut heights = Vec::with_capacity(schedule.len());
    for e in &schedule.entries {
        if e.job >= instance.len() {
            return Err(Error::UnknownJob(format!("#{}", e.job)));
        }
        breakpoints.push(e.completion.clone());
        heights.push(instance.job(e.job).w.clone());
    }
    Envelope::new(breakpoints, heights)
}

/// A broken schedule invariant.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Entry refers to a job the instance does not have.
    UnknownJob {
        job: String,
    },
    /// The same job appears twice on the shared processor.
    DuplicateJob {
        id: String,
    },
    /// Idle time on the shared processor before this job.
    GapViolation {
        id: String,
    },
    /// This job starts before its predecessor completes.
    OverlapViolation {
        id: String,
    },
    NegativeStart {
        id: String,
    },
    /// Completion differs from `(start + p) / 2`.
    SyncViolation {
        id: String,
    },
    /// Start not below `p`: the shared interval is empty.
    EmptyInterval {
        id: String,
    },
    ObjectiveMismatch {
        stored: f64,
        derived: f64,
    },
    /// Private processor completion inconsistent with the shared slot.
    PrivateCompletionMismatch {
        id: String,
    },
    /// Stated certificate differs from the upper-envelope area.
    CertificateMismatch {
        stored: f64,
        derived: f64,
    },
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::UnknownJob { .. } => "UnknownJob",
            Violation::DuplicateJob { .. } => "DuplicateJob",
            Violation::GapViolation { .. } => "GapViolation",
            Violation::OverlapViolation { .. } => "OverlapViolation",
            Violation::NegativeStart { .. } => "NegativeStart",
            Violation::SyncViolation { .. } => "SyncViolation",
            Violation::EmptyInterval { .. } => "EmptyInterval",
            Violation::ObjectiveMismatch { .. } => "ObjectiveMismatch",
            Violation::PrivateCompletionMismatch { .. } => "PrivateCompletionMismatch",
            Violation::CertificateMismatch { .. } => "CertificateMismatch",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownJob { job } => write!(f, "{}: `{job}`", self.name()),
            Violation::DuplicateJob { id }
            | Violation::GapViolation { id }
            | Violation::OverlapViolation { id }
            | Violation::NegativeStart { id }
            | Violation::SyncViolation { id }
            | Violation::EmptyInterval { id }
            | Violation::PrivateCompletionMismatch { id } => {
                write!(f, "{}: job `{id}`", self.name())
            }
            Violation::ObjectiveMismatch { stored, derived }
            | Violation::CertificateMismatch { stored, derived } => {
                write!(f, "{}: stored {stored}, derived {derived}", self.name())
            }
        }
    }
}

/// Re-derives every synchronized-schedule invariant against `instance` and
/// reports each one that fails. An empty result means the schedule is valid.
pub fn validate_schedule<T: Scalar>(
    instance: &Instance<T>,
    schedule: &SyncSchedule<T>,
) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut seen = vec![false; instance.len()];
    let mut prev_completion = T::zero();
    let mut derived = T::zero();

    for e in &schedule.entries {
        let Some(job) = instance.jobs().get(e.job) else {
            violations.push(Violation::UnknownJob {
                job: format!("#{}", e.job),
            });
            continue;
        };
        let id = || job.id.clone();
        if std::mem::replace(&mut seen[e.job], true) {
            violations.push(Violation::DuplicateJob { id: id() });
        }
        if e.start < T::zero() {
            violations.push(Violation::NegativeStart { id: id() });
        } else if !e.start.approx_eq(&prev_completion) {
            if e.start > prev_completion {
                violations.push(Violation::GapViolation { id: id() });
            } else {
                violations.push(Violation::OverlapViolation { id: id() });
            }
        }
        let synced = (e.start.clone() + job.p.clone()).half();
        if !e.completion.approx_eq(&synced) {
            violations.push(Violation::SyncViolation { id: id() });
        }
        if !(e.start < job.p) || !(e.completion > e.start) {
            violations.push(Violation::EmptyInterval { id: id() });
        }
        derived = derived + job.w.clone() * e.overlap();
        prev_completion = e.completion.clone();
    }

    if !schedule.objective.approx_eq(&derived) {
        violations.push(Violation::ObjectiveMismatch {
            stored: schedule.objective.to_f64_lossy(),
            derived: derived.to_f64_lossy(),
        });
    }
    violations
}
