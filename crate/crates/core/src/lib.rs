//! Weighted single shared processor scheduling.
//!
//! Every job can run on its own private processor, and may hand part of its
//! work to one processor shared by all jobs. Time spent on both at once
//! (the overlap) earns the job's weight per unit; the goal is to maximize
//! the total weighted overlap.
//!
//! The crate provides:
//!
//! * [`schedule`]: the data model, synchronized schedules and validation,
//! * [`antithetical`]: the exact processing-time-order solver for instances
//!   where shorter jobs are never lighter,
//! * [`keyseq`]: the key-sequence 1/2-approximation with its certificate,
//! * [`oracle`]: exhaustive search for small instances,
//! * [`io`], [`generate`], [`experiment`]: file formats, instance
//!   generators and ratio/timing experiments.
//!
//! All algorithms are generic over [`Scalar`]. `f64` is the working type;
//! the rational aliases give exact results for tests and small studies.

// Negated comparisons are meant to reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod antithetical;
pub mod envelope;
pub mod error;
pub mod experiment;
pub mod generate;
pub mod io;
pub mod keyseq;
pub mod oracle;
pub mod scalar;
pub mod schedule;

pub use antithetical::{is_antithetical, solve_antithetical, spt_schedule};
pub use envelope::{envelope_area, Envelope};
pub use error::{Error, Result};
pub use keyseq::{key_sequence, solve_keyseq, verify_key_conditions, KeySequence, KeySolution};
pub use oracle::{
    brute_force_opt, brute_force_opt_parallel, optimal_envelope_area, OracleResult,
    DEFAULT_ORACLE_LIMIT,
};
pub use scalar::Scalar;
pub use schedule::{
    build_schedule, build_schedule_by_ids, normalize_instance, schedule_envelope,
    total_weighted_overlap, validate_schedule, Instance, Job, ScheduledJob, SyncSchedule,
    Violation,
};

/// Arbitrary-precision rational.
pub type Exact = num_rational::BigRational;

pub type Job64 = Job<f64>;
pub type Instance64 = Instance<f64>;
pub type Schedule64 = SyncSchedule<f64>;
pub type Envelope64 = Envelope<f64>;
pub type KeySolution64 = KeySolution<f64>;
pub type OracleResult64 = OracleResult<f64>;

pub type Instance32 = Instance<f32>;
pub type Schedule32 = SyncSchedule<f32>;

pub type ExactJob = Job<Exact>;
pub type ExactInstance = Instance<Exact>;
pub type ExactSchedule = SyncSchedule<Exact>;
pub type ExactKeySolution = KeySolution<Exact>;
pub type ExactOracleResult = OracleResult<Exact>;
