//! All runs from the two Lyndon trees.
//!
//! Every run with shortest period `p` contains a node `[a, b]` of one of the
//! two Lyndon trees with `b - a + 1 = p`. For each node the periodicity is
//! extended to the right with `LCE(a, b + 1)` and to the left with an LCE on
//! the reversed text; the result is a run candidate when it spans at least
//! two periods.
//!
//! The queries split into six groups, each non-crossing on its own: tree
//! construction, right extension and left extension, per order. Each group
//! gets its own backend.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::lyndon::lyndon_tree;
use crate::noncrossing::{LceStats, NcLce, Options};
use crate::text::{Interval, Order, Text};

/// Maximal repetition `w[start, end]` with shortest period `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Run {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn exponent(&self) -> f64 {
        self.len() as f64 / self.period as f64
    }

    /// Square occurrences `w[i, i+2m-1]` whose half `m` is a multiple of the period.
    pub fn square_occurrences(&self) -> u64 {
        let len = self.len();
        (1..)
            .map(|k| 2 * k * self.period)
            .take_while(|&square| square <= len)
            .map(|square| (len - square + 1) as u64)
            .sum()
    }
}

/// A Lyndon-tree node with its periodicity extensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunCandidate {
    pub node: Interval,
    pub left: usize,
    pub right: usize,
}

impl RunCandidate {
    pub fn period(&self) -> usize {
        self.node.len()
    }

    pub fn span(&self) -> Interval {
        Interval::new(self.node.lo - self.left, self.node.hi + self.right)
    }

    pub fn is_run(&self) -> bool {
        self.left + self.right >= self.period()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QueryGroup {
    Construction,
    RightExtension,
    LeftExtension,
}

/// Stats of one backend instance.
#[derive(Clone, Debug, Serialize)]
pub struct GroupStats {
    pub order: Order,
    pub group: QueryGroup,
    pub stats: LceStats,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunsOutcome {
    pub runs: Vec<Run>,
    pub groups: Vec<GroupStats>,
}

impl RunsOutcome {
    pub fn total_comparisons(&self) -> u64 {
        self.groups.iter().map(|g| g.stats.comparisons).sum()
    }

    pub fn total_queries(&self) -> u64 {
        self.groups.iter().map(|g| g.stats.top_level_queries).sum()
    }
}

/// All runs of `text`, sorted by `(start, end)`.
pub fn compute_runs(text: &Text) -> Vec<Run> {
    compute_runs_with(text, Options::default())
        .expect("non-strict backends reject nothing")
        .runs
}

/// All runs, with every backend built from `options`.
pub fn compute_runs_with(text: &Text, options: Options) -> Result<RunsOutcome> {
    let n = text.len();
    if n < 2 {
        return Ok(RunsOutcome::default());
    }
    let reversed = text.reverse();
    let mut groups = Vec::with_capacity(6);
    // (start, end) -> smallest period seen
    let mut found: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    for order in Order::BOTH {
        let mut construction = NcLce::with_options(text.clone(), options);
        let tree = lyndon_tree(text, order, &mut construction)?;
        let mut right = NcLce::with_options(text.clone(), options);
        let mut left = NcLce::with_options(reversed.clone(), options);

        for node in tree.preorder() {
            let Interval { lo: a, hi: b } = node.interval;
            if a == 0 {
                continue;
            }
            let right_ext = if b < n { right.lce(a, b + 1)? } else { 0 };
            // positions b and a - 1 of w are n + 1 - b and n + 2 - a of the reverse
            let left_ext = if a > 1 {
                left.lce(n + 1 - b, n + 2 - a)?
            } else {
                0
            };
            let candidate = RunCandidate {
                node: node.interval,
                left: left_ext,
                right: right_ext,
            };
            if candidate.is_run() {
                let span = candidate.span();
                let period = found.entry((span.lo, span.hi)).or_insert(usize::MAX);
                *period = (*period).min(candidate.period());
            }
        }

        for (group, backend) in [
            (QueryGroup::Construction, &construction),
            (QueryGroup::RightExtension, &right),
            (QueryGroup::LeftExtension, &left),
        ] {
            groups.push(GroupStats {
                order,
                group,
                stats: backend.stats(),
            });
        }
    }

    let runs = found
        .into_iter()
        .map(|((start, end), period)| Run { start, end, period })
        .collect();
    Ok(RunsOutcome { runs, groups })
}

/// Total number of square occurrences, summed run by run.
pub fn squares_in_runs(runs: &[Run]) -> u64 {
    runs.iter().map(Run::square_occurrences).sum()
}

pub fn count_square_occurrences(text: &Text) -> u64 {
    squares_in_runs(&compute_runs(text))
}
