use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("job `{id}`: {field} must be nonnegative")]
    NegativeParameter { id: String, field: &'static str },
    #[error("job `{id}`: {field} must be finite")]
    NonFiniteParameter { id: String, field: &'static str },
    #[error("duplicate job id `{0}`")]
    DuplicateId(String),
    #[error("unknown job `{0}`")]
    UnknownJob(String),
    #[error("job `{0}` listed more than once in the order")]
    RepeatedJob(String),
    #[error("job `{0}` cannot appear on the shared processor: its start is not below its processing time")]
    InfeasiblePermutation(String),
    #[error("schedule is empty")]
    EmptySchedule,
    #[error("instance is empty")]
    EmptyInstance,
    #[error("instance is not antithetical")]
    NotAntithetical,
    #[error("instance has {n} jobs, brute force is limited to {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("invalid envelope: {0}")]
    InvalidEnvelope(&'static str),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("approximation bound violated: ratio {ratio} below 1/2")]
    BoundViolated { ratio: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
