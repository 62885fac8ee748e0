//! JSON instance and schedule documents.
//!
//! Instance:
//! ```json
//! {"jobs": [{"id": "a", "p": 4, "w": 3}, {"id": "b", "p": 10, "w": 1}]}
//! ```
//! Schedule:
//! ```json
//! {"algorithm": "keyseq", "objective": 10.0, "certificate": 13.0,
//!  "shared": [{"id": "a", "start": 0.0, "end": 2.0}],
//!  "private_completions": [{"id": "a", "end": 2.0}]}
//! ```
//! Numbers are written with shortest round-trip precision.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::keyseq::key_sequence;
use crate::scalar::Scalar;
use crate::schedule::{
    normalize_instance, validate_schedule, Instance, Job, ScheduledJob, SyncSchedule, Violation,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobRecord {
    pub id: String,
    pub p: f64,
    pub w: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub jobs: Vec<JobRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SharedInterval {
    pub id: String,
    pub start: f64,
    pub end: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrivateCompletion {
    pub id: String,
    pub end: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleFile {
    pub algorithm: String,
    pub objective: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<f64>,
    pub shared: Vec<SharedInterval>,
    pub private_completions: Vec<PrivateCompletion>,
}

fn from_json<'de, D: Deserialize<'de>>(text: &'de str) -> Result<D> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse(format!(
            "line {} column {} at `{}`: {}",
            inner.line(),
            inner.column(),
            path,
            inner
        ))
    })
}

impl InstanceFile {
    pub fn from_instance<T: Scalar>(instance: &Instance<T>) -> Self {
        Self {
            jobs: instance
                .jobs()
                .iter()
                .map(|j| JobRecord {
                    id: j.id.clone(),
                    p: j.p.to_f64_lossy(),
                    w: j.w.to_f64_lossy(),
                })
                .collect(),
        }
    }

    pub fn into_jobs(self) -> Vec<Job<f64>> {
        self.jobs
            .into_iter()
            .map(|r| Job::new(r.id, r.p, r.w))
            .collect()
    }
}

/// Parses an instance document and normalizes it.
pub fn parse_instance(text: &str) -> Result<Instance<f64>> {
    let file: InstanceFile = from_json(text)?;
    normalize_instance(file.into_jobs())
}

pub fn emit_instance<T: Scalar>(instance: &Instance<T>) -> String {
    emit_jobs(&InstanceFile::from_instance(instance))
}

pub fn emit_jobs(file: &InstanceFile) -> String {
    serde_json::to_string_pretty(file).expect("instance serializes")
}

impl ScheduleFile {
    pub fn from_schedule<T: Scalar>(
        instance: &Instance<T>,
        schedule: &SyncSchedule<T>,
        algorithm: &str,
        certificate: Option<&T>,
    ) -> Self {
        let shared = schedule
            .entries
            .iter()
            .map(|e| SharedInterval {
                id: instance.job(e.job).id.clone(),
                start: e.start.to_f64_lossy(),
                end: e.completion.to_f64_lossy(),
            })
            .collect();
        let private_completions = schedule
            .private_completions(instance)
            .iter()
            .zip(instance.jobs())
            .map(|(end, job)| PrivateCompletion {
                id: job.id.clone(),
                end: end.to_f64_lossy(),
            })
            .collect();
        Self {
            algorithm: algorithm.to_string(),
            objective: schedule.objective.to_f64_lossy(),
            certificate: certificate.map(Scalar::to_f64_lossy),
            shared,
            private_completions,
        }
    }

    /// The shared-processor part as a [`SyncSchedule`] over `instance`.
    /// Ids the instance does not know are reported as violations.
    pub fn to_schedule(&self, instance: &Instance<f64>) -> (SyncSchedule<f64>, Vec<Violation>) {
        let index = instance.index_by_id();
        let mut unknown = Vec::new();
        let entries = self
            .shared
            .iter()
            .filter_map(|iv| match index.get(iv.id.as_str()) {
                Some(&job) => Some(ScheduledJob {
                    job,
                    start: iv.start,
                    completion: iv.end,
                }),
                None => {
                    unknown.push(Violation::UnknownJob { job: iv.id.clone() });
                    None
                }
            })
            .collect();
        (
            SyncSchedule {
                entries,
                objective: self.objective,
            },
            unknown,
        )
    }
}

pub fn emit_schedule<T: Scalar>(
    instance: &Instance<T>,
    schedule: &SyncSchedule<T>,
    algorithm: &str,
    certificate: Option<&T>,
) -> String {
    let file = ScheduleFile::from_schedule(instance, schedule, algorithm, certificate);
    serde_json::to_string_pretty(&file).expect("schedule serializes")
}

pub fn parse_schedule(text: &str) -> Result<ScheduleFile> {
    from_json(text)
}

/// Full check of a schedule document: the synchronized-schedule invariants
/// plus private completions and, when present, the certificate.
pub fn validate_schedule_file(instance: &Instance<f64>, file: &ScheduleFile) -> Vec<Violation> {
    let (schedule, mut violations) = file.to_schedule(instance);
    violations.extend(validate_schedule(instance, &schedule));

    let expected = schedule.private_completions(instance);
    let index = instance.index_by_id();
    let mut listed = vec![false; instance.len()];
    for pc in &file.private_completions {
        match index.get(pc.id.as_str()) {
            Some(&pos) => {
                listed[pos] = true;
                if !pc.end.approx_eq(&expected[pos]) {
                    violations.push(Violation::PrivateCompletionMismatch { id: pc.id.clone() });
                }
            }
            None => violations.push(Violation::UnknownJob { job: pc.id.clone() }),
        }
    }
    for (pos, seen) in listed.iter().enumerate() {
        if !seen {
            violations.push(Violation::PrivateCompletionMismatch {
                id: instance.job(pos).id.clone(),
            });
        }
    }

    if let Some(stored) = file.certificate {
        let derived = key_sequence(instance).map(|k| k.ustar).unwrap_or(0.0);
        if !stored.approx_eq(&derived) {
            violations.push(Violation::CertificateMismatch { stored, derived });
        }
    }
    violations
}
