//! Text families and the work-scaling measurement run over them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;
use crate::lyndon::lyndon_tree;
use crate::noncrossing::{LceStats, NcLce, Options};
use crate::oracle::random_text;
use crate::runs::compute_runs_with;
use crate::text::{Order, Text};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Uniform random binary text.
    Random,
    Fibonacci,
    ThueMorse,
    Unary,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Unary,
        Family::Fibonacci,
        Family::ThueMorse,
        Family::Random,
    ];

    pub fn generate(self, n: usize, seed: u64) -> Text {
        match self {
            Family::Random => random_text(n, 2, seed),
            Family::Fibonacci => fibonacci_word(n),
            Family::ThueMorse => thue_morse_word(n),
            Family::Unary => Text::from_symbols(vec![0; n]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Random => "random",
            Family::Fibonacci => "fibonacci",
            Family::ThueMorse => "thue-morse",
            Family::Unary => "unary",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(Family::Random),
            "fibonacci" => Ok(Family::Fibonacci),
            "thue-morse" => Ok(Family::ThueMorse),
            "unary" => Ok(Family::Unary),
            other => Err(format!(
                "unknown family {other:?} (expected random, fibonacci, thue-morse or unary)"
            )),
        }
    }
}

/// Prefix of length `n` of the fixed point of `0 -> 01, 1 -> 0`.
pub fn fibonacci_word(n: usize) -> Text {
    let (mut prev, mut cur) = (vec![1u64], vec![0u64]);
    while cur.len() < n {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    cur.truncate(n);
    Text::from_symbols(cur)
}

/// Prefix of length `n` of the Thue-Morse sequence.
pub fn thue_morse_word(n: usize) -> Text {
    Text::from_symbols(
        (0..n)
            .map(|i| u64::from(i.count_ones() % 2))
            .collect::<Vec<_>>(),
    )
}

/// What a scaling measurement exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Workload {
    /// Both Lyndon trees and both extension passes.
    Runs,
    /// Both Lyndon tree constructions only.
    Lyndon,
}

impl FromStr for Workload {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "runs" => Ok(Workload::Runs),
            "lyndon" => Ok(Workload::Lyndon),
            other => Err(format!(
                "unknown workload {other:?} (expected runs or lyndon)"
            )),
        }
    }
}

/// One row of a work-scaling table.
#[derive(Clone, Debug, Serialize)]
pub struct ScalingRow {
    pub family: Family,
    pub n: usize,
    pub queries: u64,
    pub comparisons: u64,
    pub n_log2_n: f64,
    /// `comparisons / (n log2 n)`.
    pub ratio: f64,
    /// Number of runs; `None` for the Lyndon workload.
    pub runs: Option<usize>,
    /// Every backend's counters, summed.
    #[serde(skip)]
    pub stats: LceStats,
}

/// Runs `workload` on the length-`n` member of `family` with strict backends.
pub fn measure(family: Family, n: usize, seed: u64, workload: Workload) -> Result<ScalingRow> {
    let text = family.generate(n, seed);
    let mut stats = LceStats::default();
    let runs = match workload {
        Workload::Runs => {
            let outcome = compute_runs_with(&text, Options::strict())?;
            for g in &outcome.groups {
                stats.accumulate(&g.stats);
            }
            Some(outcome.runs.len())
        }
        Workload::Lyndon => {
            for order in Order::BOTH {
                let mut backend = NcLce::with_options(text.clone(), Options::strict());
                lyndon_tree(&text, order, &mut backend)?;
                stats.accumulate(&backend.stats());
            }
            None
        }
    };
    let n_log2_n = n as f64 * (n.max(2) as f64).log2();
    Ok(ScalingRow {
        family,
        n,
        queries: stats.top_level_queries,
        comparisons: stats.comparisons,
        n_log2_n,
        ratio: stats.comparisons as f64 / n_log2_n,
        runs,
        stats,
    })
}

/// `max / min` of the ratios; 1 for fewer than two rows.
pub fn ratio_band(rows: &[ScalingRow]) -> f64 {
    let (lo, hi) = rows.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), r| {
        (lo.min(r.ratio), hi.max(r.ratio))
    });
    if rows.len() < 2 {
        1.0
    } else {
        hi / lo
    }
}
