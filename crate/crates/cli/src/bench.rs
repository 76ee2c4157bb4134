use std::time::{Duration, Instant};

use anyhow::{ensure, Result};
use clap::ValueEnum;
use klcolour::ferrers::build_ferrers_fast;
use klcolour::generate::{nested_stars, random_cotree};
use klcolour::kappa::{sequence_fast, sequence_naive, Invariant};
use klcolour::{build_ferrers_naive, Cotree, Label};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// random cotrees
    Random,
    /// one leaf and one subtree per internal node
    NestedStars,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Kappa,
    Ferrers,
}

pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub family: Family,
    pub algorithm: Algorithm,
    pub max_children: usize,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn median_ms(mut times: Vec<Duration>) -> f64 {
    times.sort();
    times[times.len() / 2].as_secs_f64() * 1e3
}

fn tree(cfg: &BenchConfig, n: usize, trial: usize) -> Cotree {
    match cfg.family {
        Family::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(trial as u64));
            random_cotree(&mut rng, n, cfg.max_children)
        }
        Family::NestedStars => nested_stars(n, if trial.is_multiple_of(2) { Label::Union } else { Label::Join }),
    }
}

/// CSV with one row per size: median naive and fast times in milliseconds.
pub fn run(cfg: &BenchConfig) -> Result<String> {
    ensure!(cfg.trials >= 1, "need at least one trial");
    ensure!(cfg.max_children >= 2, "max-children must be at least 2");
    ensure!(cfg.sizes.iter().all(|&n| n >= 1), "sizes must be positive");
    let mut out = String::from("n,naive_ms,fast_ms\n");
    for &n in &cfg.sizes {
        let mut naive = Vec::with_capacity(cfg.trials);
        let mut fast = Vec::with_capacity(cfg.trials);
        for trial in 0..cfg.trials {
            let t = tree(cfg, n, trial);
            let same = match cfg.algorithm {
                Algorithm::Kappa => {
                    let (a, ta) = timed(|| sequence_naive(&t, Invariant::Kappa));
                    let (b, tb) = timed(|| sequence_fast(&t, Invariant::Kappa));
                    naive.push(ta);
                    fast.push(tb);
                    a == b
                }
                Algorithm::Ferrers => {
                    let (a, ta) = timed(|| build_ferrers_naive(&t));
                    let (b, tb) = timed(|| build_ferrers_fast(&t));
                    naive.push(ta);
                    fast.push(tb);
                    a == b
                }
            };
            ensure!(same, "naive and fast results differ for n = {n}, trial {trial}");
        }
        out.push_str(&format!("{n},{:.3},{:.3}\n", median_ms(naive), median_ms(fast)));
    }
    Ok(out)
}
