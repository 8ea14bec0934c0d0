//! Benchmark harness: deterministic instance streams per suite, one CSV
//! row per run, and a trailing summary row.
//!
//! Columns: `instance,n,algorithm,colors,valid,micros`. Everything except
//! `micros` is deterministic for a fixed (suite, n list, count, seed).
//! Instances may be executed on several threads (the CLI wires this to the
//! THREADS environment variable); rows are emitted in instance order
//! regardless of completion order.

use crate::coloring::color_2col_10;
use crate::coloring::color_3col_sqrt;
use crate::generators::{light_sampler, planted_k_colorable};
use crate::light::color_light_8;
use crate::seeded;
use crate::tournament::Tournament;
use std::fmt::Write as _;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenchError {
    #[error("unknown suite {0:?} (expected two-col, light, or three-col)")]
    UnknownSuite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    TwoCol,
    Light,
    ThreeCol,
}

impl Suite {
    pub fn from_name(name: &str) -> Result<Suite, BenchError> {
        match name {
            "two-col" => Ok(Suite::TwoCol),
            "light" => Ok(Suite::Light),
            "three-col" => Ok(Suite::ThreeCol),
            other => Err(BenchError::UnknownSuite(other.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::TwoCol => "two-col",
            Suite::Light => "light",
            Suite::ThreeCol => "three-col",
        }
    }

    fn algorithm(self) -> &'static str {
        match self {
            Suite::TwoCol => "two10",
            Suite::Light => "light8",
            Suite::ThreeCol => "sqrt3",
        }
    }

    fn generate(self, n: usize, seed: u64) -> Tournament {
        match self {
            Suite::TwoCol => planted_k_colorable(n, 2, seed).expect("n >= 2").0,
            Suite::Light => light_sampler(n, seed, 200).expect("sampler has light candidates"),
            Suite::ThreeCol => planted_k_colorable(n, 3, seed).expect("n >= 3").0,
        }
    }

    /// Runs the suite's algorithm; (colors, valid).
    fn run(self, t: &Tournament) -> (usize, bool) {
        match self {
            Suite::TwoCol => match color_2col_10(t) {
                Ok(c) => (c.palette_size(), t.verify_coloring(&c).is_ok()),
                Err(_) => (0, false),
            },
            Suite::Light => match color_light_8(t) {
                Ok(c) => (c.palette_size(), t.verify_coloring(&c).is_ok()),
                Err(_) => (0, false),
            },
            Suite::ThreeCol => match color_3col_sqrt(t) {
                Ok(c) => (c.palette_size(), t.verify_coloring(&c).is_ok()),
                Err(_) => (0, false),
            },
        }
    }
}

struct Row {
    instance: String,
    n: usize,
    algorithm: &'static str,
    colors: usize,
    valid: bool,
    micros: u128,
}

/// Runs `count` instances per entry of `ns` and renders the CSV.
pub fn bench_suite(
    suite: Suite,
    ns: &[usize],
    count: usize,
    seed: u64,
    threads: usize,
) -> String {
    let jobs: Vec<(usize, usize, u64)> = ns
        .iter()
        .enumerate()
        .flat_map(|(ni, &n)| {
            (0..count).map(move |i| (n, i, seeded::derive(seed, (ni * 100_000 + i) as u64)))
        })
        .collect();

    let mut rows: Vec<Option<Row>> = Vec::with_capacity(jobs.len());
    rows.resize_with(jobs.len(), || None);

    let run_job = |&(n, i, job_seed): &(usize, usize, u64)| -> Row {
        let t = suite.generate(n, job_seed);
        let start = Instant::now();
        let (colors, valid) = suite.run(&t);
        let micros = start.elapsed().as_micros();
        Row {
            instance: format!("{}-n{}-i{}", suite.name(), n, i),
            n,
            algorithm: suite.algorithm(),
            colors,
            valid,
            micros,
        }
    };

    let threads = threads.max(1).min(jobs.len().max(1));
    if threads <= 1 {
        for (slot, job) in rows.iter_mut().zip(&jobs) {
            *slot = Some(run_job(job));
        }
    } else {
        let chunk = jobs.len().div_ceil(threads);
        let results: Vec<(usize, Row)> = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (c, chunk_jobs) in jobs.chunks(chunk).enumerate() {
                let base = c * chunk;
                handles.push(scope.spawn(move || {
                    chunk_jobs
                        .iter()
                        .enumerate()
                        .map(|(off, job)| (base + off, run_job(job)))
                        .collect::<Vec<_>>()
                }));
            }
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("bench worker"))
                .collect()
        });
        for (idx, row) in results {
            rows[idx] = Some(row);
        }
    }

    let mut out = String::from("instance,n,algorithm,colors,valid,micros\n");
    let mut max_colors = 0usize;
    let mut failures = 0usize;
    let mut total_micros = 0u128;
    let mut runs = 0usize;
    for row in rows.into_iter().map(|r| r.expect("all jobs ran")) {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.instance, row.n, row.algorithm, row.colors, row.valid, row.micros
        )
        .unwrap();
        max_colors = max_colors.max(row.colors);
        failures += usize::from(!row.valid);
        total_micros += row.micros;
        runs += 1;
    }
    writeln!(
        out,
        "summary,{runs},{},{max_colors},{failures},{total_micros}",
        suite.name()
    )
    .unwrap();
    out
}

/// Blanks the micros column; what determinism guarantees cover.
pub fn strip_timings(csv: &str) -> String {
    csv.lines()
        .map(|line| {
            match line.rsplit_once(',') {
                Some((head, _)) => format!("{head},_"),
                None => line.to_string(),
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}
