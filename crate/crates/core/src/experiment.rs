//! Empirical checks of the approximation ratio and solver timing.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::antithetical::{solve_antithetical, spt_schedule};
use crate::error::{Error, Result};
use crate::generate::{generate, generate_jobs, GenKind, GenParams};
use crate::keyseq::solve_keyseq;
use crate::oracle::{brute_force_opt_parallel, DEFAULT_ORACLE_LIMIT};
use crate::schedule::normalize_instance;

/// Slack allowed on the 1/2 bound and on `opt <= u*`.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioStats {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

impl RatioStats {
    fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        Some(Self { min, mean, max })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub instances: usize,
    pub n: usize,
    /// key objective / optimum
    pub key_over_opt: Option<RatioStats>,
    /// key objective / u*
    pub key_over_certificate: Option<RatioStats>,
    /// optimum / u*
    pub opt_over_certificate: Option<RatioStats>,
}

/// Solves `count` random uniform instances of `n` jobs with the key
/// schedule and the oracle, and fails if any ratio breaks the bounds.
pub fn run_ratio_experiment(count: usize, n: usize, seed: u64) -> Result<RatioReport> {
    if n > DEFAULT_ORACLE_LIMIT {
        return Err(Error::InstanceTooLarge {
            n,
            limit: DEFAULT_ORACLE_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut key_opt = Vec::with_capacity(count);
    let mut key_cert = Vec::with_capacity(count);
    let mut opt_cert = Vec::with_capacity(count);

    for _ in 0..count {
        let instance = generate(&GenParams::new(GenKind::Uniform, n, rng.gen()))?;
        let key = solve_keyseq(&instance)?;
        let opt = brute_force_opt_parallel(&instance, DEFAULT_ORACLE_LIMIT)?;
        let ustar = *key.certificate();
        let value = key.schedule.objective;
        key_opt.push(if opt.optimum > 0.0 {
            value / opt.optimum
        } else {
            1.0
        });
        key_cert.push(if ustar > 0.0 { value / ustar } else { 1.0 });
        opt_cert.push(if ustar > 0.0 {
            opt.optimum / ustar
        } else {
            1.0
        });
    }

    let report = RatioReport {
        instances: count,
        n,
        key_over_opt: RatioStats::of(&key_opt),
        key_over_certificate: RatioStats::of(&key_cert),
        opt_over_certificate: RatioStats::of(&opt_cert),
    };
    for stats in [report.key_over_opt, report.key_over_certificate]
        .into_iter()
        .flatten()
    {
        if stats.min < 0.5 - BOUND_TOLERANCE {
            return Err(Error::BoundViolated { ratio: stats.min });
        }
    }
    if let Some(stats) = report.opt_over_certificate {
        if stats.max > 1.0 + BOUND_TOLERANCE {
            return Err(Error::BoundViolated {
                ratio: 1.0 / stats.max,
            });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightRow {
    pub n: usize,
    pub key_objective: f64,
    pub all_jobs_objective: f64,
    pub ratio: f64,
    /// `(1/2) / (1 - 2^-n)`
    pub closed_form: f64,
}

/// Key schedule against the all-jobs schedule on `n` unit jobs, for each
/// `n` in `ns`.
pub fn tight_family(ns: impl IntoIterator<Item = usize>) -> Result<Vec<TightRow>> {
    ns.into_iter()
        .map(|n| {
            let instance = generate(&GenParams::new(GenKind::Tight, n, 0))?;
            let key_objective = solve_keyseq(&instance)?.schedule.objective;
            let all_jobs_objective = solve_antithetical(&instance)?.objective;
            Ok(TightRow {
                n,
                key_objective,
                all_jobs_objective,
                ratio: key_objective / all_jobs_objective,
                closed_form: 0.5 / (1.0 - 0.5f64.powi(n as i32)),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// normalize + processing-time order on a shuffled antithetical instance
    pub spt: Duration,
    /// normalize + key schedule on a uniform instance
    pub keyseq: Duration,
}

/// Best-of-`repeats` wall clock for normalize + solve at each size.
pub fn bench(ns: &[usize], repeats: usize, seed: u64) -> Result<Vec<BenchRow>> {
    let repeats = repeats.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ns.iter()
        .map(|&n| {
            let mut anti = generate_jobs(&GenParams::new(GenKind::Antithetical, n, rng.gen()))?;
            anti.shuffle(&mut rng);
            let uniform = generate_jobs(&GenParams::new(GenKind::Uniform, n, rng.gen()))?;

            let mut spt = Duration::MAX;
            let mut keyseq = Duration::MAX;
            for _ in 0..repeats {
                let jobs = anti.clone();
                let t = Instant::now();
                let instance = normalize_instance(jobs)?;
                std::hint::black_box(spt_schedule(&instance));
                spt = spt.min(t.elapsed());

                let jobs = uniform.clone();
                let t = Instant::now();
                let instance = normalize_instance(jobs)?;
                std::hint::black_box(solve_keyseq(&instance)?);
                keyseq = keyseq.min(t.elapsed());
            }
            Ok(BenchRow { n, spt, keyseq })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_experiment_respects_bounds() {
        let report = run_ratio_experiment(100, 5, 7).unwrap();
        assert_eq!(report.instances, 100);
        let k = report.key_over_opt.unwrap();
        assert!(k.min >= 0.5 - BOUND_TOLERANCE && k.max <= 1.0 + BOUND_TOLERANCE);
        let c = report.key_over_certificate.unwrap();
        assert!(c.min >= 0.5 - BOUND_TOLERANCE && c.max <= 1.0 + BOUND_TOLERANCE);
        assert!(report.opt_over_certificate.unwrap().max <= 1.0 + BOUND_TOLERANCE);
    }

    #[test]
    fn empty_experiment() {
        let report = run_ratio_experiment(0, 5, 7).unwrap();
        assert_eq!(report.instances, 0);
        assert!(report.key_over_opt.is_none());
    }

    #[test]
    fn experiment_size_limit() {
        assert!(matches!(
            run_ratio_experiment(1, 11, 0),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn tight_rows_match_closed_form() {
        for row in tight_family(2..=10).unwrap() {
            assert_eq!(row.key_objective, 0.5);
            assert_eq!(row.all_jobs_objective, 1.0 - 0.5f64.powi(row.n as i32));
            assert!((row.ratio - row.closed_form).abs() < 1e-15);
        }
    }

    #[test]
    fn bench_runs() {
        let rows = bench(&[100, 1000], 2, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].n, 1000);
    }
}
