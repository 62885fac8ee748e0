//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::schedule::{normalize_instance, Instance, Job};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Independent uniform `p` and `w`.
    Uniform,
    /// Weights non-increasing in processing time.
    Antithetical,
    /// `n` unit jobs (`p = w = 1`), the family on which the key schedule
    /// approaches half the optimum.
    Tight,
    /// `n` copies of one random job.
    Equal,
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(GenKind::Uniform),
            "antithetical" => Ok(GenKind::Antithetical),
            "tight" => Ok(GenKind::Tight),
            "equal" => Ok(GenKind::Equal),
            other => Err(Error::BadParameters(format!(
                "unknown instance kind `{other}`"
            ))),
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::Uniform => "uniform",
            GenKind::Antithetical => "antithetical",
            GenKind::Tight => "tight",
            GenKind::Equal => "equal",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    /// Inclusive processing time range.
    pub p_range: (f64, f64),
    /// Inclusive weight range.
    pub w_range: (f64, f64),
}

impl GenParams {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        Self {
            kind,
            n,
            seed,
            p_range: (1.0, 10.0),
            w_range: (1.0, 10.0),
        }
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::BadParameters("n must be at least 1".into()));
        }
        for (name, (lo, hi)) in [("p", self.p_range), ("w", self.w_range)] {
            if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo <= hi) {
                return Err(Error::BadParameters(format!(
                    "{name} range must satisfy 0 < lo <= hi, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }
}

fn draw(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..=hi)
    }
}

/// Raw jobs in generation order, ids `j1..jn`. Antithetical jobs come out
/// already sorted.
pub fn generate_jobs(params: &GenParams) -> Result<Vec<Job<f64>>> {
    params.check()?;
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let id = |i: usize| format!("j{}", i + 1);

    let jobs = match params.kind {
        GenKind::Uniform => (0..n)
            .map(|i| {
                let p = draw(&mut rng, params.p_range);
                let w = draw(&mut rng, params.w_range);
                Job::new(id(i), p, w)
            })
            .collect(),
        GenKind::Antithetical => {
            let mut ps: Vec<f64> = (0..n).map(|_| draw(&mut rng, params.p_range)).collect();
            let mut ws: Vec<f64> = (0..n).map(|_| draw(&mut rng, params.w_range)).collect();
            ps.sort_by(f64::total_cmp);
            ws.sort_by(|a, b| b.total_cmp(a));
            for i in 1..n {
                if ps[i] == ps[i - 1] {
                    ws[i] = ws[i - 1];
                }
            }
            ps.into_iter()
                .zip(ws)
                .enumerate()
                .map(|(i, (p, w))| Job::new(id(i), p, w))
                .collect()
        }
        GenKind::Tight => (0..n).map(|i| Job::new(id(i), 1.0, 1.0)).collect(),
        GenKind::Equal => {
            let p = draw(&mut rng, params.p_range);
            let w = draw(&mut rng, params.w_range);
            (0..n).map(|i| Job::new(id(i), p, w)).collect()
        }
    };
    Ok(jobs)
}

pub fn generate(params: &GenParams) -> Result<Instance<f64>> {
    normalize_instance(generate_jobs(params)?)
}
