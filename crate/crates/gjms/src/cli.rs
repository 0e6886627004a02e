//! Command-line driver: one subcommand per identity family, a table or
//! JSON-lines record stream, and a benchmark for the composition sum.

use crate::rng::SplitMix64;
use crate::report::{sort_records, CheckRecord, CheckStatus};
use crate::verifier::Verifier;
use crate::{composition, randomized};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(
    name = "gjms",
    version,
    about = "Exact verification of composition identities for GJMS operator polynomials on S^q x S^p"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for check records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write records to this path instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Cap the number of worker threads (default: all cores).
    #[arg(long, global = true)]
    pub parallel: Option<usize>,

    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-oriented aligned table (not a stability contract).
    Table,
    /// One self-contained JSON object per line.
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the factorial closed form of the weighted composition sum,
    /// plus the factored form of each operator polynomial.
    VerifyOp {
        /// Largest order parameter N.
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
    /// Check the divided composition sum against its binomial closed form.
    VerifyQ {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
    /// Tabulate both sides of the Q-curvature sum on the signature (q, p),
    /// together with the volume-coefficient relation.
    Qtable {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
    /// Check the basis product formula, the partial-sum closed form, the
    /// classical summations, the finite-difference identities and the
    /// series reduction, mostly on seeded random parameters.
    VerifyLemmas {
        /// Largest N for the partial-sum closed form.
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
        /// Largest basis degrees A, B for the exhaustive product checks.
        #[arg(long, default_value_t = 12)]
        ab_max: u32,
        /// Trials per randomized family.
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        /// Seed for all randomized draws.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Time the composition sum with and without product memoization and
    /// compare multiplication counts and results.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=30))]
        n: u32,
        /// Skip the unmemoized baseline (it is exponential in n).
        #[arg(long, default_value_t = false)]
        skip_naive: bool,
    },
}

/// Parses arguments, runs the selected suite, prints records and a summary.
/// Exit status: 0 when nothing failed, 1 on any failure, 2 on usage errors
/// (raised by the argument parser itself).
pub fn main() -> i32 {
    let config = RunConfig::parse();
    run(config)
}

pub fn run(config: RunConfig) -> i32 {
    if let Some(workers) = config.parallel {
        // A process-wide pool; ignore failure if a pool is already set.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    match &config.command {
        Command::Bench { n, skip_naive } => run_bench(*n, *skip_naive),
        _ => {
            let mut records = collect_records(&config.command);
            sort_records(&mut records);
            if config.no_timings {
                for rec in &mut records {
                    rec.elapsed_ms = 0;
                }
            }
            if let Err(err) = emit(&config, &records) {
                eprintln!("gjms: cannot write output: {}", err);
                return 1;
            }
            let fails = records.iter().filter(|r| r.is_fail()).count();
            let skips = records
                .iter()
                .filter(|r| matches!(r.status, CheckStatus::Skipped(_)))
                .count();
            let passes = records.len() - fails - skips;
            println!(
                "checks: {} total, {} pass, {} fail, {} skipped",
                records.len(),
                passes,
                fails,
                skips
            );
            if fails > 0 {
                1
            } else {
                0
            }
        }
    }
}

fn collect_records(command: &Command) -> Vec<CheckRecord> {
    let verifier = Verifier::new();
    match command {
        Command::VerifyOp { n_max } => {
            let mut records: Vec<CheckRecord> = (1..=*n_max)
                .into_par_iter()
                .map(|n| verifier.check_composition_sum(n))
                .collect();
            records.extend(
                (1..=(*n_max).min(12))
                    .into_par_iter()
                    .map(Verifier::check_factored_form)
                    .collect::<Vec<_>>(),
            );
            // Scalar re-verification on a few actual eigenvalue points.
            for n in 1..=(*n_max).min(6) {
                for (q, p, k, l) in [(2, 2, 0, 0), (3, 4, 1, 2), (5, 2, 2, 0)] {
                    records.push(verifier.check_spectral(n, q, p, k, l));
                }
            }
            records
        }
        Command::VerifyQ { n_max } => (1..=*n_max)
            .into_par_iter()
            .map(|n| verifier.check_q_sum(n))
            .collect(),
        Command::Qtable { q, p, n_max } => {
            let mut records: Vec<CheckRecord> = (1..=*n_max)
                .into_par_iter()
                .map(|n| verifier.check_q_curvature(n, *q, *p))
                .collect();
            records.extend(
                (1..=*n_max)
                    .into_par_iter()
                    .map(|n| Verifier::check_w_relation(n, *q, *p))
                    .collect::<Vec<_>>(),
            );
            records
        }
        Command::VerifyLemmas {
            n_max,
            ab_max,
            trials,
            seed,
        } => lemma_records(&verifier, *n_max, *ab_max, *trials, *seed),
        Command::Bench { .. } => unreachable!("bench handled separately"),
    }
}

fn lemma_records(
    verifier: &Verifier,
    n_max: u32,
    ab_max: u32,
    trials: u32,
    seed: u64,
) -> Vec<CheckRecord> {
    let mut records = Vec::new();

    let grid: Vec<(u32, u32)> = (0..=ab_max)
        .flat_map(|a| (0..=ab_max).map(move |b| (a, b)))
        .collect();
    records.par_extend(
        grid.par_iter()
            .map(|&(a, b)| Verifier::check_basis_product(a, b)),
    );

    let pairs: Vec<(u32, u32)> = (2..=n_max)
        .flat_map(|n| (1..n).map(move |a| (n, a)))
        .collect();
    records.par_extend(
        pairs
            .par_iter()
            .map(|&(n, a)| verifier.check_partial_sum(n, a)),
    );

    // The randomized families each consume their own generator stream so
    // that record contents depend only on (seed, family, trial).
    type Family = Box<dyn Fn(&mut SplitMix64, u32) -> CheckRecord + Sync + Send>;
    let families: Vec<Family> = vec![
        Box::new(randomized::check_basis_product_random),
        Box::new(randomized::check_chu_vandermonde_random),
        Box::new(randomized::check_pfaff_saalschuetz_random),
        Box::new(randomized::check_pfaff_transform_random),
        Box::new(randomized::check_finite_difference_random),
        Box::new(randomized::check_partial_fractions_random),
    ];
    let family_records: Vec<Vec<CheckRecord>> = families
        .par_iter()
        .enumerate()
        .map(|(i, family)| {
            let mut rng = SplitMix64::new(seed.wrapping_add(i as u64));
            (0..trials).map(|t| family(&mut rng, t)).collect()
        })
        .collect();
    for batch in family_records {
        records.extend(batch);
    }

    let mut rng = SplitMix64::new(seed.wrapping_add(families.len() as u64));
    for trial in 0..trials {
        records.extend(randomized::check_series_reduction_random(
            &mut rng, trial, 10,
        ));
    }
    records
}

fn emit(config: &RunConfig, records: &[CheckRecord]) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match config.format {
        Format::Records => {
            for rec in records {
                writeln!(sink, "{}", rec.json_line())?;
            }
        }
        Format::Table => {
            for rec in records {
                let note = match &rec.note {
                    Some(n) => format!(" {}", clip(n)),
                    None => String::new(),
                };
                writeln!(
                    sink,
                    "{:<28} {:<28} {:<8} lhs={} rhs={}{} [{} ms]",
                    rec.check,
                    rec.params_string(),
                    rec.status_string(),
                    clip(&rec.lhs),
                    clip(&rec.rhs),
                    note,
                    rec.elapsed_ms
                )?;
            }
        }
    }
    sink.flush()
}

// Human tables truncate long polynomials; machine output never does.
fn clip(s: &str) -> String {
    const LIMIT: usize = 72;
    if s.len() <= LIMIT {
        s.to_string()
    } else {
        format!("{}... ({} chars)", &s[..LIMIT], s.len())
    }
}

fn run_bench(n: u32, skip_naive: bool) -> i32 {
    let terms = composition::count(n);
    println!("composition sum at N = {}: {} compositions", n, terms);

    let verifier = Verifier::new();
    let start = Instant::now();
    let memoized = verifier.composition_sum(n);
    let memo_time = start.elapsed();
    let memo_mults = verifier.cache().multiplications();
    println!(
        "memoized : {:>10.3?}  {} polynomial multiplications, peak coefficient {} bits",
        memo_time,
        memo_mults,
        verifier.cache().peak_coeff_bits()
    );

    if skip_naive {
        println!("naive    : skipped");
        return 0;
    }
    let mut naive_mults = 0u64;
    let start = Instant::now();
    let naive = verifier.composition_sum_naive(n, &mut naive_mults);
    let naive_time = start.elapsed();
    println!(
        "naive    : {:>10.3?}  {} polynomial multiplications",
        naive_time, naive_mults
    );

    let agree = naive == memoized;
    let fewer = memo_mults < naive_mults;
    println!(
        "results {}; memoized strategy used {} multiplications ({})",
        if agree { "agree" } else { "DISAGREE" },
        memo_mults,
        if fewer {
            "strictly fewer"
        } else {
            "NOT fewer"
        }
    );
    if agree && fewer {
        0
    } else {
        1
    }
}
