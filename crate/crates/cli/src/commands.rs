use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use polyzero_core::experiments::acceptance::{run_criterion, CRITERIA};
use polyzero_core::experiments::{measure_zeros, real_trial, run_experiment, run_trials, ExperimentConfig, ExperimentKind};
use polyzero_core::rootsolve::solve_roots;
use polyzero_core::{CoeffDistribution, Error, Polynomial, ZeroMeasure};

use crate::input::{parse_list, parse_pairs, read_source};
use crate::{CheckArgs, RealrootsArgs, RootsArgs, SimulateArgs, StatsArgs};

/// Why a command failed, and its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad input, arguments or configuration.
    Input(String),
    /// A check failed or an experiment aborted.
    Check(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Check(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Check(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Aborted(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn input(msg: String) -> Failure {
    Failure::Input(msg)
}

fn at_line(line: usize) -> impl Fn(Error) -> Failure {
    move |e| Failure::Input(format!("line {line}: {e}"))
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

pub fn roots(a: &RootsArgs) -> Outcome {
    let rows = parse_pairs(&read_source(&a.input).map_err(input)?).map_err(input)?;
    let mut out = stdout();
    writeln!(out, "poly,re,im,residual")?;
    let mut stalled = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let p = Polynomial::new(&row.values).map_err(at_line(row.line))?;
        let rs = solve_roots(&p, a.tol, a.max_iter).map_err(at_line(row.line))?;
        if !rs.converged {
            stalled.push(i);
        }
        for (z, r) in rs.complex_roots().iter().zip(&rs.residuals) {
            // + 0.0 folds -0.0 into 0.0
            writeln!(out, "{i},{:?},{:?},{r:?}", z.re + 0.0, z.im + 0.0)?;
        }
    }
    out.flush()?;
    if stalled.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("no convergence within {} iterations for poly {stalled:?}", a.max_iter)))
    }
}

fn parse_sectors(s: &str) -> Result<Vec<(f64, f64)>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (lo, hi) = t.split_once(':').ok_or_else(|| format!("sector {t:?} is not alpha:beta"))?;
            let lo = lo.trim().parse().map_err(|_| format!("bad sector bound {lo:?}"))?;
            let hi = hi.trim().parse().map_err(|_| format!("bad sector bound {hi:?}"))?;
            Ok((lo, hi))
        })
        .collect()
}

fn stats_config(a: &StatsArgs) -> Result<ExperimentConfig, Failure> {
    // the law is never sampled; only the statistic lists matter
    let mut cfg = ExperimentConfig::new(CoeffDistribution::new("rademacher", &[])?);
    cfg.deltas = parse_list(&a.deltas).map_err(input)?;
    cfg.sectors = parse_sectors(&a.sectors).map_err(input)?;
    cfg.weyl_ls = parse_list(&a.weyl).map_err(input)?;
    cfg.ring_edges = parse_list(&a.rings).map_err(input)?;
    cfg.grid_sectors = a.grid_sectors;
    cfg.inner_radius = a.inner_radius;
    cfg.tol = a.tol;
    cfg.max_iter = a.max_iter;
    cfg.validate()?;
    Ok(cfg)
}

pub fn stats(a: &StatsArgs) -> Outcome {
    let cfg = stats_config(a)?;
    let rows = parse_pairs(&read_source(&a.input).map_err(input)?).map_err(input)?;
    let mut out = stdout();
    for (i, row) in rows.iter().enumerate() {
        let err = at_line(row.line);
        let rec = if a.coeffs {
            let p = Polynomial::new(&row.values).map_err(&err)?;
            let rs = solve_roots(&p, cfg.tol, cfg.max_iter).map_err(&err)?;
            let mut rec = measure_zeros(&cfg, &ZeroMeasure::from_roots(&rs), p.degree(), i as u64).map_err(&err)?;
            rec.solver = Some(polyzero_core::experiments::SolverDiagnostics {
                iterations: rs.iterations,
                max_residual: rs.max_residual(),
                converged: rs.converged,
                extended: rs.extended,
            });
            rec
        } else {
            let m = ZeroMeasure::from_complex(&row.values);
            measure_zeros(&cfg, &m, m.n(), i as u64).map_err(&err)?
        };
        let json = serde_json::to_string(&rec).map_err(|e| input(e.to_string()))?;
        writeln!(out, "{json}")?;
    }
    out.flush()?;
    Ok(())
}

fn law(name: &str, params: Option<&str>) -> Result<CoeffDistribution, Failure> {
    let params: Vec<f64> = match params {
        Some(p) => parse_list(p).map_err(input)?,
        None => vec![],
    };
    Ok(CoeffDistribution::new(name, &params)?)
}

fn parse_ray(s: &str) -> Result<(u64, u64), String> {
    let (q, den) = s.split_once('/').ok_or_else(|| format!("ray {s:?} is not q/den"))?;
    let q = q.trim().parse().map_err(|_| format!("bad ray numerator {q:?}"))?;
    let den = den.trim().parse().map_err(|_| format!("bad ray denominator {den:?}"))?;
    Ok((q, den))
}

pub fn realroots(a: &RealrootsArgs, workers: usize) -> Outcome {
    let mut cfg = ExperimentConfig::new(law(&a.dist, a.params.as_deref())?);
    match &a.interleave {
        Some(name) => cfg.interleave = Some(law(name, a.interleave_params.as_deref())?),
        None if a.interleave_params.is_some() => {
            return Err(input("--interleave-params given without --interleave".into()))
        }
        None => {}
    }
    cfg.degrees = vec![a.n];
    cfg.trials = a.trials;
    cfg.master_seed = a.seed;
    cfg.ray = a.ray.as_deref().map(parse_ray).transpose().map_err(input)?;
    cfg.validate()?;
    if cfg.ray.is_none() && !cfg.laws().iter().all(|d| d.is_real()) {
        return Err(input("complex coefficient law needs --ray".into()));
    }
    let records = run_trials(&cfg, workers, real_trial)?;
    let mut out = stdout();
    writeln!(out, "n,trial,real_roots")?;
    let mut fallbacks = 0;
    for r in &records {
        writeln!(out, "{},{},{}", r.n, r.trial, r.real_roots.unwrap_or(0))?;
        fallbacks += r.real_count.as_ref().is_some_and(|c| c.exact_fallback) as usize;
    }
    out.flush()?;
    if fallbacks > 0 {
        eprintln!("{fallbacks} of {} counts used the exact fallback", records.len());
    }
    Ok(())
}

pub fn simulate(a: &SimulateArgs, workers: usize) -> Outcome {
    let kind: ExperimentKind = a.experiment.parse()?;
    let cfg = ExperimentConfig::load(Path::new(&a.config))?;
    let started = Instant::now();
    let rep = run_experiment(kind, &cfg, workers)?;
    eprintln!("{kind}: {} trials in {:.1}s", rep.records.len(), started.elapsed().as_secs_f64());

    let dir = Path::new(&a.out_dir);
    std::fs::create_dir_all(dir).map_err(|e| input(format!("{}: {e}", dir.display())))?;
    let write = |name: String, body: String| {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(|e| input(format!("{}: {e}", path.display())))
    };
    write(format!("{kind}.jsonl"), rep.records_jsonl())?;
    write(format!("{kind}_summary.csv"), rep.summary.to_csv())?;

    let mut out = stdout();
    for c in &rep.checks {
        writeln!(out, "check {}: {} {}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail)?;
    }
    if let Some(s) = rep.slope {
        writeln!(out, "slope of mean real_roots against ln n: {s:?}")?;
    }
    out.flush()?;
    if rep.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{kind}: check failed")))
    }
}

pub fn check(a: &CheckArgs, workers: usize) -> Outcome {
    let ids: Vec<u8> = match &a.only {
        Some(s) => parse_list(s).map_err(input)?,
        None => CRITERIA.iter().map(|c| c.id).collect(),
    };
    if let Some(bad) = ids.iter().find(|id| !CRITERIA.iter().any(|c| c.id == **id)) {
        return Err(input(format!("unknown criterion {bad}")));
    }
    let mut failed = Vec::new();
    for id in ids {
        let budget = CRITERIA.iter().find(|c| c.id == id).map(|c| c.budget).unwrap_or_default();
        let started = Instant::now();
        let outcome = run_criterion(id, workers)?;
        let took = started.elapsed();
        println!("{}", outcome.line());
        let over = if took > budget { " OVER BUDGET" } else { "" };
        eprintln!("criterion {id}: {:.1}s of {}s{over}", took.as_secs_f64(), budget.as_secs());
        if !outcome.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed criteria {failed:?}")))
    }
}
