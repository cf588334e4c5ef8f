//! Experiment runners: one function per subcommand, plus the trial pool.
//!
//! Trials are independent by construction (trial i derives RNG stream i), so
//! the pool hands indices to workers and merges results back in trial order
//! regardless of completion order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use utlab_core::linalg::power::PowerOpts;
use utlab_core::linalg::{haar_unitary_rng, stream_rng, UnitaryFamily};
use utlab_core::lps::RepresentationTower;
use utlab_core::tensor::{
    lower_bound_constant, min_tensor_norm_conjugate, random_psd_unit, szarek_moment,
};
use utlab_core::words::{
    count_identity_patterns_upto, moment_absorption_check, tree_return_counts_upto,
};

use crate::report::{Summary, TrialRecord};

/// A record plus the contract violation it triggered, if any.
pub struct TrialOutcome {
    pub record: TrialRecord,
    pub violation: Option<String>,
}

/// Runs `total` independent trials on `jobs` workers; results come back in
/// trial order.
pub fn run_pool<F>(total: usize, jobs: usize, f: F) -> Vec<TrialOutcome>
where
    F: Fn(usize) -> TrialOutcome + Sync,
{
    let jobs = jobs.max(1).min(total.max(1));
    if jobs <= 1 {
        return (0..total).map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, TrialOutcome)>> = Mutex::new(Vec::with_capacity(total));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= total {
                    break;
                }
                let outcome = f(idx);
                results.lock().unwrap().push((idx, outcome));
            });
        }
    });
    let mut collected = results.into_inner().unwrap();
    collected.sort_by_key(|(idx, _)| *idx);
    collected.into_iter().map(|(_, o)| o).collect()
}

fn wall_ms(enabled: bool, started: Instant) -> Option<f64> {
    enabled.then(|| started.elapsed().as_secs_f64() * 1e3)
}

fn big_to_f64(b: &BigUint) -> f64 {
    b.to_f64().unwrap_or(f64::INFINITY)
}

pub struct RunResult {
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
    pub violations: Vec<String>,
}

fn collect(outcomes: Vec<TrialOutcome>, bound: Option<f64>) -> RunResult {
    let mut records = Vec::with_capacity(outcomes.len());
    let mut violations = Vec::new();
    for o in outcomes {
        if let Some(v) = o.violation {
            violations.push(v);
        }
        records.push(o.record);
    }
    let summary = Summary::from_records(&records, bound, violations.len());
    RunResult {
        records,
        summary,
        violations,
    }
}

/// `norm`: Haar families (n, dim), minimal tensor norm of Σ uᵢ ⊗ ūᵢ per
/// trial, gap against 2√(n−1), triangle bound n as the ceiling.
pub fn run_norm(
    n: usize,
    dim: usize,
    trials: usize,
    seed: u64,
    tol: f64,
    jobs: usize,
    timings: bool,
) -> RunResult {
    let lower = lower_bound_constant(n);
    let outcomes = run_pool(trials, jobs, |t| {
        let started = Instant::now();
        let trial = t as u64;
        let record_err = |msg: String| TrialOutcome {
            record: TrialRecord {
                trial,
                n: Some(n as u64),
                dim: Some(dim as u64),
                seed_index: Some(trial),
                ..Default::default()
            },
            violation: Some(format!("trial {trial}: {msg}")),
        };
        let fam = match UnitaryFamily::haar(n, dim, seed, trial) {
            Ok(f) => f,
            Err(e) => return record_err(e.to_string()),
        };
        let rep = match min_tensor_norm_conjugate(
            &fam,
            &PowerOpts {
                seed,
                ..PowerOpts::default()
            },
        ) {
            Ok(r) => r,
            Err(e) => return record_err(e.to_string()),
        };
        let gap = rep.value - lower;
        let mut violation = None;
        if rep.converged && gap < -tol {
            violation = Some(format!(
                "trial {trial}: converged gap {gap:.3e} below -{tol:.1e}"
            ));
        }
        if rep.value > n as f64 + 1e-6 {
            violation = Some(format!(
                "trial {trial}: value {} exceeds the triangle bound {n}",
                rep.value
            ));
        }
        TrialOutcome {
            record: TrialRecord {
                trial,
                n: Some(n as u64),
                dim: Some(dim as u64),
                value: Some(rep.value),
                gap: Some(gap),
                converged: Some(rep.converged),
                iterations: Some(rep.iterations as u64),
                seed_index: Some(trial),
                wall_ms: wall_ms(timings, started),
                ..Default::default()
            },
            violation,
        }
    });
    collect(outcomes, Some(lower))
}

/// `randcheck`: per-sample |tr U|² of Haar unitaries plus unitarity defects;
/// the sample mean must stay inside [0.85, 1.15] once samples ≥ 2000.
pub fn run_randcheck(
    dim: usize,
    samples: usize,
    seed: u64,
    jobs: usize,
    timings: bool,
) -> RunResult {
    let outcomes = run_pool(samples, jobs, |t| {
        let started = Instant::now();
        let trial = t as u64;
        let mut rng = stream_rng(seed, trial);
        let u = haar_unitary_rng(dim, &mut rng).expect("dim validated");
        let defect = u.unitarity_defect();
        let moment = u.trace().norm_sqr();
        let violation = (defect > 1e-10 * (dim as f64).sqrt())
            .then(|| format!("sample {trial}: unitarity defect {defect:.3e} beyond 1e-10·√N"));
        TrialOutcome {
            record: TrialRecord {
                trial,
                dim: Some(dim as u64),
                value: Some(moment),
                seed_index: Some(trial),
                wall_ms: wall_ms(timings, started),
                ..Default::default()
            },
            violation,
        }
    });
    let mut result = collect(outcomes, None);
    if samples >= 2000 {
        if let Some(mean) = result.summary.mean_value {
            if !(0.85..=1.15).contains(&mean) {
                result
                    .violations
                    .push(format!("mean |tr U|² = {mean} outside [0.85, 1.15]"));
                result.summary.violations = result.violations.len() as u64;
            }
        }
    }
    result
}

/// `szarek`: moment domination ⟨(T*T)^m t,t⟩ ≥ card(I′) on random PSD t.
pub fn run_szarek(
    n: usize,
    dim: usize,
    m: usize,
    trials: usize,
    seed: u64,
    jobs: usize,
    timings: bool,
) -> RunResult {
    let outcomes = run_pool(trials, jobs, |t| {
        let started = Instant::now();
        let trial = t as u64;
        let base = TrialRecord {
            trial,
            n: Some(n as u64),
            dim: Some(dim as u64),
            m: Some(m as u64),
            seed_index: Some(trial),
            ..Default::default()
        };
        let run = || -> utlab_core::Result<(f64, BigUint)> {
            let fam = UnitaryFamily::haar(n, dim, seed, 2 * trial)?;
            let t_psd = random_psd_unit(dim, seed, 2 * trial + 1)?;
            let r = szarek_moment(&fam, &t_psd, m)?;
            Ok((r.lhs, r.count))
        };
        match run() {
            Ok((lhs, count)) => {
                let count_f = big_to_f64(&count);
                TrialOutcome {
                    record: TrialRecord {
                        value: Some(lhs),
                        gap: Some(lhs - count_f),
                        count: Some(count.to_string()),
                        wall_ms: wall_ms(timings, started),
                        ..base
                    },
                    violation: None,
                }
            }
            Err(e) => TrialOutcome {
                record: base,
                violation: Some(format!("trial {trial}: {e}")),
            },
        }
    });
    collect(outcomes, None)
}

/// `walks`: one row per half-length m with the exact count and the running
/// √ratio estimate. Tree mode when a degree is given, identity-pattern mode
/// otherwise.
pub fn run_walks(
    gens: u64,
    steps: usize,
    tree_degree: Option<u64>,
    timings: bool,
) -> utlab_core::Result<RunResult> {
    let started = Instant::now();
    let (branch_label, counts) = match tree_degree {
        Some(d) => (d, tree_return_counts_upto(d, steps)?),
        None => (gens, count_identity_patterns_upto(gens, steps)?),
    };
    let mut records = Vec::with_capacity(counts.len());
    for (m, c) in counts.iter().enumerate() {
        // running √ratio; the big-ratio path stays exact far beyond f64 range
        let value = if m >= 1 {
            utlab_core::words::growth_estimate(&counts[m - 1..=m])
                .ok()
                .map(f64::sqrt)
        } else {
            None
        };
        records.push(TrialRecord {
            trial: m as u64,
            n: Some(branch_label),
            m: Some(m as u64),
            value,
            count: Some(c.to_string()),
            wall_ms: wall_ms(timings, started),
            ..Default::default()
        });
    }
    let summary = Summary::from_records(&records, None, 0);
    Ok(RunResult {
        records,
        summary,
        violations: Vec::new(),
    })
}

/// `absorb`: mixed trace moments against exact counts on Haar families.
pub fn run_absorb(
    n: usize,
    dim: usize,
    m: usize,
    trials: usize,
    seed: u64,
    jobs: usize,
    timings: bool,
) -> RunResult {
    let outcomes = run_pool(trials, jobs, |t| {
        let started = Instant::now();
        let trial = t as u64;
        let base = TrialRecord {
            trial,
            n: Some(n as u64),
            dim: Some(dim as u64),
            m: Some(m as u64),
            seed_index: Some(trial),
            ..Default::default()
        };
        let run = || -> utlab_core::Result<(f64, BigUint)> {
            let fam = UnitaryFamily::haar(n, dim, seed, trial)?;
            let r = moment_absorption_check(&fam, m)?;
            Ok((r.moment, r.count))
        };
        match run() {
            Ok((moment, count)) => TrialOutcome {
                record: TrialRecord {
                    value: Some(moment),
                    gap: Some(moment - big_to_f64(&count)),
                    count: Some(count.to_string()),
                    wall_ms: wall_ms(timings, started),
                    ..base
                },
                violation: None,
            },
            Err(e) => TrialOutcome {
                record: base,
                violation: Some(format!("trial {trial}: {e}")),
            },
        }
    });
    collect(outcomes, None)
}

/// `lps`: per-block norms of the norm-p tower against the 2√p ceiling.
/// Returns the tower too so the caller can export it.
pub fn run_lps(
    prime: u64,
    degree_cutoff: usize,
    jobs: usize,
    timings: bool,
) -> utlab_core::Result<(RunResult, RepresentationTower)> {
    let tower = RepresentationTower::lps(prime, degree_cutoff)?;
    let bound = 2.0 * (prime as f64).sqrt();
    let n = tower.n() as u64;
    let outcomes = run_pool(degree_cutoff, jobs, |i| {
        let started = Instant::now();
        let m = i + 1;
        match tower.rho_block_norm(m, true) {
            Ok(value) => {
                let violation = (value > bound + 1e-6)
                    .then(|| format!("block m={m}: norm {value} exceeds 2√{prime} + 1e-6"));
                TrialOutcome {
                    record: TrialRecord {
                        trial: m as u64,
                        n: Some(n),
                        dim: Some((m + 1) as u64),
                        m: Some(m as u64),
                        value: Some(value),
                        gap: Some(bound - value),
                        wall_ms: wall_ms(timings, started),
                        ..Default::default()
                    },
                    violation,
                }
            }
            Err(e) => TrialOutcome {
                record: TrialRecord {
                    trial: m as u64,
                    m: Some(m as u64),
                    ..Default::default()
                },
                violation: Some(format!("block m={m}: {e}")),
            },
        }
    });
    Ok((collect(outcomes, Some(bound)), tower))
}

/// `cn`: cross-term norms over every degree pair of the tower. Cross pairs
/// must stay at or below 2√(n−1) (+tol); diagonal pairs at or above (−tol).
pub fn run_cn(
    prime: u64,
    max_m: usize,
    seed: u64,
    tol: f64,
    jobs: usize,
    timings: bool,
) -> utlab_core::Result<RunResult> {
    let tower = RepresentationTower::lps(prime, max_m)?;
    let n = tower.n();
    let bound = lower_bound_constant(n);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for m in 0..=max_m {
        for mp in m..=max_m {
            pairs.push((m, mp));
        }
    }
    let opts = PowerOpts {
        seed,
        ..PowerOpts::default()
    };
    let outcomes = run_pool(pairs.len(), jobs, |i| {
        let started = Instant::now();
        let (m, mp) = pairs[i];
        let trial = i as u64;
        match tower.cross_tensor_norm(m, mp, &opts) {
            Ok(rep) => {
                let gap = rep.value - bound;
                let violation = if m == mp {
                    (rep.converged && gap < -tol).then(|| {
                        format!(
                            "diagonal ({m},{m}): value {} below 2√(n−1) − {tol:.1e}",
                            rep.value
                        )
                    })
                } else {
                    (gap > tol).then(|| {
                        format!(
                            "cross ({m},{mp}): value {} above 2√(n−1) + {tol:.1e}",
                            rep.value
                        )
                    })
                };
                TrialOutcome {
                    record: TrialRecord {
                        trial,
                        n: Some(n as u64),
                        dim: Some(mp as u64),
                        m: Some(m as u64),
                        value: Some(rep.value),
                        gap: Some(gap),
                        converged: Some(rep.converged),
                        iterations: Some(rep.iterations as u64),
                        wall_ms: wall_ms(timings, started),
                        ..Default::default()
                    },
                    violation,
                }
            }
            Err(e) => TrialOutcome {
                record: TrialRecord {
                    trial,
                    m: Some(m as u64),
                    dim: Some(mp as u64),
                    ..Default::default()
                },
                violation: Some(format!("pair ({m},{mp}): {e}")),
            },
        }
    });
    Ok(collect(outcomes, Some(bound)))
}
