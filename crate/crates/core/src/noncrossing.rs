//! On-line LCE queries for non-crossing query sequences.
//!
//! Queries are resolved level by level. At level `i` a query `(a, b)` is
//! first tested with a scan capped at `3 * 2^i`. A shorter answer is final;
//! otherwise the query is *relevant* and is handed to the block-pair that
//! owns `(ceil(a / 2^i), ceil(b / 2^i))`. A block-pair moves through four
//! states and forwards at most four queries to level `i + 1` over its whole
//! lifetime:
//!
//! * `Initial`: forward the query, remember it as `Visited(a0, b0, L)`.
//! * `Visited`: a shifted query `(a0 + d, b0 + d)` answers `L - d`. Any other
//!   query reveals a common period `p <= 2^(i+1)` of both neighbourhoods; two
//!   forwarded probes find where the periodicity ends (`end_a`, `end_b`).
//! * `Full`: unequal distances to the period breaks give the answer as the
//!   smaller one; equal distances need `LCE(end_a, end_b)`, fetched once.
//! * `FullPlus`: everything is known, no more forwarding.
//!
//! With non-crossing top-level queries the block-pairs touched at every level
//! form a non-crossing set, so level `i >= 1` sees at most `24n / 2^i` calls.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::crossing::CrossingDetector;
use crate::error::{Error, Result};
use crate::limited::{limited_lce_unchecked, ComparisonCounter};
use crate::oracle::{self, PairSet};
use crate::text::Text;

/// Most level `i+1` calls a single block-pair may make.
pub const MAX_FORWARDS_PER_PAIR: u8 = 4;

/// Index of the level-`level` block containing `pos`, i.e. `ceil(pos / 2^level)`.
#[inline]
pub fn block_of(level: usize, pos: usize) -> usize {
    debug_assert!(pos >= 1);
    ((pos - 1) >> level) + 1
}

#[inline]
fn pack(block_a: usize, block_b: usize) -> u64 {
    ((block_a as u64) << 32) | block_b as u64
}

#[inline]
fn unpack(key: u64) -> (usize, usize) {
    ((key >> 32) as usize, (key & 0xffff_ffff) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum BlockState {
    Initial,
    Visited {
        a0: usize,
        b0: usize,
        lce: usize,
    },
    Full {
        end_a: usize,
        end_b: usize,
    },
    FullPlus {
        end_a: usize,
        end_b: usize,
        tail: usize,
    },
}

impl BlockState {
    pub fn rank(&self) -> u8 {
        match self {
            BlockState::Initial => 0,
            BlockState::Visited { .. } => 1,
            BlockState::Full { .. } => 2,
            BlockState::FullPlus { .. } => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BlockState::Initial => "initial",
            BlockState::Visited { .. } => "visited",
            BlockState::Full { .. } => "full",
            BlockState::FullPlus { .. } => "full+",
        }
    }
}

/// Resolves a relevant query against a block-pair in a full state.
///
/// `to_break_a = end_a - a` and `to_break_b = end_b - b`. Returns the answer
/// when it follows from the distances alone, `None` when they coincide and
/// `LCE(end_a, end_b)` must be added.
#[inline]
pub fn resolve_full(to_break_a: usize, to_break_b: usize) -> Option<usize> {
    (to_break_a != to_break_b).then(|| to_break_a.min(to_break_b))
}

#[derive(Clone, Copy, Debug)]
struct BlockPair {
    state: BlockState,
    forwarded: u8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LevelCounters {
    /// Calls at this level, with multiplicity.
    pub queries: u64,
    /// Calls whose answer reached the `3 * 2^i` cap.
    pub relevant: u64,
    /// Block-pairs that left the initial state.
    pub block_pairs: u64,
    /// Calls this level made to the next one.
    pub forwarded: u64,
    pub to_visited: u64,
    pub to_full: u64,
    pub to_full_plus: u64,
}

#[derive(Debug, Default)]
struct Level {
    pairs: HashMap<u64, BlockPair>,
    counters: LevelCounters,
    // audit only: distinct (ceil(a/2^i), ceil(b/2^i)) over every call
    blocks_seen: Option<HashSet<(usize, usize)>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Reject any query crossing an earlier one.
    pub strict: bool,
    /// Record per-level block sets and re-verify stored witnesses by scanning.
    pub audit: bool,
    /// Keep the working sequence of the most recent query.
    pub trace: bool,
}

impl Options {
    pub fn strict() -> Self {
        Options {
            strict: true,
            ..Options::default()
        }
    }

    pub fn with_audit(mut self) -> Self {
        self.audit = true;
        self
    }

    pub fn with_trace(mut self) -> Self {
        self.trace = true;
        self
    }
}

/// Snapshot of the instrumentation counters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LceStats {
    pub n: usize,
    pub top_level_queries: u64,
    pub comparisons: u64,
    pub levels: Vec<LevelCounters>,
    pub max_forwarded_per_pair: u8,
    /// Forwarded calls that were neither the current query nor a pair
    /// `(x, y)` with `x < y <= x + 2^(i+1)`, plus block-pairs exceeding
    /// [`MAX_FORWARDS_PER_PAIR`].
    pub forwarding_violations: u64,
    /// Stored witnesses that failed re-verification (audit mode).
    pub audit_failures: u64,
    /// Distinct top-level pairs asked (strict mode).
    pub distinct_top_pairs: Option<usize>,
}

impl LceStats {
    /// Upper bound on calls at `level >= 1`, `24n / 2^level`.
    pub fn query_bound(&self, level: usize) -> f64 {
        24.0 * self.n as f64 / (1u64 << level.min(63)) as f64
    }

    /// Levels `i >= 1` whose call count exceeds `24n / 2^i`, with the count.
    pub fn query_bound_violations(&self) -> Vec<(usize, u64)> {
        self.levels
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(i, c)| c.queries as f64 > self.query_bound(*i))
            .map(|(i, c)| (i, c.queries))
            .collect()
    }

    /// Human-readable descriptions of every violated structural bound.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut failures: Vec<String> = self
            .query_bound_violations()
            .into_iter()
            .map(|(i, q)| {
                format!(
                    "level {i}: {q} calls exceed 24n/2^i = {}",
                    self.query_bound(i)
                )
            })
            .collect();
        if self.max_forwarded_per_pair > MAX_FORWARDS_PER_PAIR {
            failures.push(format!(
                "a block-pair forwarded {} calls (at most {MAX_FORWARDS_PER_PAIR} allowed)",
                self.max_forwarded_per_pair
            ));
        }
        if self.forwarding_violations > 0 {
            failures.push(format!(
                "{} ill-shaped forwarded calls",
                self.forwarding_violations
            ));
        }
        if self.audit_failures > 0 {
            failures.push(format!(
                "{} stored witnesses failed re-verification",
                self.audit_failures
            ));
        }
        if let Some(d) = self.distinct_top_pairs {
            if self.n > 0 && d >= 3 * self.n {
                failures.push(format!(
                    "{d} distinct query pairs, expected fewer than 3n = {}",
                    3 * self.n
                ));
            }
        }
        failures
    }

    pub fn total_forwarded(&self) -> u64 {
        self.levels.iter().map(|c| c.forwarded).sum()
    }

    /// Adds `other` into `self` level by level; `n` keeps the maximum.
    pub fn accumulate(&mut self, other: &LceStats) {
        self.n = self.n.max(other.n);
        self.top_level_queries += other.top_level_queries;
        self.comparisons += other.comparisons;
        if self.levels.len() < other.levels.len() {
            self.levels
                .resize(other.levels.len(), LevelCounters::default());
        }
        for (mine, theirs) in self.levels.iter_mut().zip(&other.levels) {
            mine.queries += theirs.queries;
            mine.relevant += theirs.relevant;
            mine.block_pairs += theirs.block_pairs;
            mine.forwarded += theirs.forwarded;
            mine.to_visited += theirs.to_visited;
            mine.to_full += theirs.to_full;
            mine.to_full_plus += theirs.to_full_plus;
        }
        self.max_forwarded_per_pair = self
            .max_forwarded_per_pair
            .max(other.max_forwarded_per_pair);
        self.forwarding_violations += other.forwarding_violations;
        self.audit_failures += other.audit_failures;
    }
}

/// Parses a batch query file: one `a b` pair of 1-based positions per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_queries(input: &str) -> Result<Vec<(usize, usize)>> {
    let mut queries = Vec::new();
    for (index, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::QueryParse {
            line: index + 1,
            reason,
        };
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(err(format!(
                "expected two positions, found {} fields",
                fields.len()
            )));
        };
        let parse = |f: &str| {
            f.parse::<usize>()
                .map_err(|_| err(format!("{f:?} is not a position")))
        };
        queries.push((parse(a)?, parse(b)?));
    }
    Ok(queries)
}

/// One step of the working sequence of a query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub level: usize,
    pub a: usize,
    pub b: usize,
    /// Responsible block-pair and its state on arrival; `None` for a short call.
    pub block: Option<(usize, usize)>,
    pub state: Option<BlockState>,
}

/// Per-level results of the audit checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelAudit {
    pub level: usize,
    /// Universe of block indices, `ceil(n / 2^level)`.
    pub universe: usize,
    pub distinct_block_pairs: usize,
    pub crossing: Option<((usize, usize), (usize, usize))>,
}

impl LevelAudit {
    pub fn within_pair_bound(&self) -> bool {
        self.distinct_block_pairs < 3 * self.universe
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub levels: Vec<LevelAudit>,
    pub witness_failures: u64,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.witness_failures == 0
            && self
                .levels
                .iter()
                .all(|l| l.crossing.is_none() && l.within_pair_bound())
    }
}

/// The leveled non-crossing LCE structure over one text.
#[derive(Debug)]
pub struct NcLce {
    text: Text,
    options: Options,
    levels: Vec<Level>,
    counter: ComparisonCounter,
    top_level_queries: u64,
    max_forwarded: u8,
    forwarding_violations: u64,
    detector: Option<CrossingDetector>,
    top_pairs: Option<HashSet<(usize, usize)>>,
    witness_periods: HashMap<(usize, u64), usize>,
    audit_failures: u64,
    trace: Vec<TraceStep>,
}

impl NcLce {
    pub fn new(text: Text, strict: bool) -> Self {
        let options = Options {
            strict,
            ..Options::default()
        };
        Self::with_options(text, options)
    }

    pub fn with_options(text: Text, options: Options) -> Self {
        let n = text.len();
        NcLce {
            detector: options.strict.then(|| CrossingDetector::new(n)),
            top_pairs: options.strict.then(HashSet::new),
            text,
            options,
            levels: Vec::new(),
            counter: ComparisonCounter::new(),
            top_level_queries: 0,
            max_forwarded: 0,
            forwarding_violations: 0,
            witness_periods: HashMap::new(),
            audit_failures: 0,
            trace: Vec::new(),
        }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn options(&self) -> Options {
        self.options
    }

    pub fn queries_answered(&self) -> u64 {
        self.top_level_queries
    }

    pub fn comparisons(&self) -> u64 {
        self.counter.total()
    }

    /// `LCE(a, b)` for `1 <= a, b <= n`. Arguments are unordered.
    pub fn lce(&mut self, a: usize, b: usize) -> Result<usize> {
        let n = self.text.len();
        for pos in [a, b] {
            if pos == 0 || pos > n {
                return Err(Error::OutOfRange { pos, max: n });
            }
        }
        let (a, b) = (a.min(b), a.max(b));
        if let Some(detector) = self.detector.as_mut() {
            if let Some(earlier) = detector.find_crossing(a, b) {
                return Err(Error::Crossing {
                    earlier,
                    current: (a, b),
                });
            }
            detector.insert(a, b);
            if let Some(pairs) = self.top_pairs.as_mut() {
                pairs.insert((a, b));
            }
        }
        self.trace.clear();
        self.top_level_queries += 1;
        if a == b {
            let level = self.level_mut(0);
            level.counters.queries += 1;
            if let Some(seen) = level.blocks_seen.as_mut() {
                seen.insert((a, a));
            }
            return Ok(n - a + 1);
        }
        Ok(self.level_lce(0, a, b))
    }

    /// State of the level-`level` block-pair responsible for `(a, b)`.
    pub fn block_state(&self, level: usize, a: usize, b: usize) -> BlockState {
        let (a, b) = (a.min(b), a.max(b));
        let key = pack(block_of(level, a), block_of(level, b));
        self.levels
            .get(level)
            .and_then(|l| l.pairs.get(&key))
            .map_or(BlockState::Initial, |bp| bp.state)
    }

    /// Working sequence of the most recent query (empty unless tracing).
    pub fn last_trace(&self) -> &[TraceStep] {
        &self.trace
    }

    pub fn stats(&self) -> LceStats {
        LceStats {
            n: self.text.len(),
            top_level_queries: self.top_level_queries,
            comparisons: self.counter.total(),
            levels: self.levels.iter().map(|l| l.counters.clone()).collect(),
            max_forwarded_per_pair: self.max_forwarded,
            forwarding_violations: self.forwarding_violations,
            audit_failures: self.audit_failures,
            distinct_top_pairs: self.top_pairs.as_ref().map(HashSet::len),
        }
    }

    /// Crossing and cardinality checks over the recorded per-level block sets.
    /// `None` unless built with [`Options::audit`].
    pub fn audit_report(&self) -> Option<AuditReport> {
        if !self.options.audit {
            return None;
        }
        let n = self.text.len();
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, level)| {
                let universe = n.div_ceil(1 << i).max(1);
                let mut set = PairSet::new(universe);
                for &(x, y) in level.blocks_seen.iter().flatten() {
                    set.insert(x, y);
                }
                LevelAudit {
                    level: i,
                    universe,
                    distinct_block_pairs: set.len(),
                    crossing: set.first_crossing(),
                }
            })
            .collect();
        Some(AuditReport {
            levels,
            witness_failures: self.audit_failures,
        })
    }

    fn level_mut(&mut self, level: usize) -> &mut Level {
        if self.levels.len() <= level {
            let audit = self.options.audit;
            self.levels.resize_with(level + 1, || Level {
                blocks_seen: audit.then(HashSet::new),
                ..Level::default()
            });
        }
        &mut self.levels[level]
    }

    fn level_lce(&mut self, level: usize, a: usize, b: usize) -> usize {
        debug_assert!(a < b && b <= self.text.len());
        let (block_a, block_b) = (block_of(level, a), block_of(level, b));
        let lv = self.level_mut(level);
        lv.counters.queries += 1;
        if let Some(seen) = lv.blocks_seen.as_mut() {
            seen.insert((block_a, block_b));
        }

        let cap = 3usize << level;
        let scanned = limited_lce_unchecked(&self.text, a, b, cap, &mut self.counter);
        if scanned < cap {
            if self.options.trace {
                self.trace.push(TraceStep {
                    level,
                    a,
                    b,
                    block: None,
                    state: None,
                });
            }
            return scanned;
        }

        let key = pack(block_a, block_b);
        let lv = &mut self.levels[level];
        lv.counters.relevant += 1;
        let state = lv
            .pairs
            .entry(key)
            .or_insert(BlockPair {
                state: BlockState::Initial,
                forwarded: 0,
            })
            .state;
        if self.options.trace {
            self.trace.push(TraceStep {
                level,
                a,
                b,
                block: Some((block_a, block_b)),
                state: Some(state),
            });
        }

        match state {
            BlockState::Initial => self.on_initial(level, key, a, b),
            BlockState::Visited { a0, b0, lce } => self.on_visited(level, key, a, b, (a0, b0, lce)),
            BlockState::Full { .. } | BlockState::FullPlus { .. } => {
                self.on_full(level, key, a, b, state)
            }
        }
    }

    fn on_initial(&mut self, level: usize, key: u64, a: usize, b: usize) -> usize {
        let lce = self.forward(level, key, (a, b), a, b);
        self.set_state(level, key, BlockState::Visited { a0: a, b0: b, lce });
        if self.options.audit && oracle::scan_lce(&self.text, a, b) != lce {
            self.audit_failures += 1;
        }
        lce
    }

    fn on_visited(
        &mut self,
        level: usize,
        key: u64,
        a: usize,
        b: usize,
        (a0, b0, lce): (usize, usize, usize),
    ) -> usize {
        let shift_a = a as isize - a0 as isize;
        let shift_b = b as isize - b0 as isize;
        if shift_a == shift_b {
            // both suffixes still end at the same mismatch
            return (lce as isize - shift_a) as usize;
        }

        let period = (shift_a - shift_b).unsigned_abs();
        let (block_a, block_b) = unpack(key);
        let last_a = block_a << level;
        let last_b = block_b << level;
        let end_a = last_a + period + self.forward_probe(level, key, (a, b), last_a, period);
        let end_b = last_b + period + self.forward_probe(level, key, (a, b), last_b, period);
        let state = BlockState::Full { end_a, end_b };
        self.set_state(level, key, state);
        if self.options.audit {
            self.witness_periods.insert((level, key), period);
            let ok = self.periodic_witness_holds(level, last_a, end_a, period)
                && self.periodic_witness_holds(level, last_b, end_b, period);
            if !ok {
                self.audit_failures += 1;
            }
        }
        self.on_full(level, key, a, b, state)
    }

    fn on_full(&mut self, level: usize, key: u64, a: usize, b: usize, state: BlockState) -> usize {
        let (end_a, end_b, tail) = match state {
            BlockState::Full { end_a, end_b } => (end_a, end_b, None),
            BlockState::FullPlus { end_a, end_b, tail } => (end_a, end_b, Some(tail)),
            _ => unreachable!("on_full called in state {}", state.name()),
        };
        let (to_a, to_b) = (end_a - a, end_b - b);
        if let Some(answer) = resolve_full(to_a, to_b) {
            return answer;
        }
        let tail = match tail {
            Some(tail) => tail,
            None => {
                let total = self.forward(level, key, (a, b), a, b);
                debug_assert!(total >= to_a);
                let tail = total - to_a;
                self.set_state(level, key, BlockState::FullPlus { end_a, end_b, tail });
                if self.options.audit && oracle::scan_lce(&self.text, end_a, end_b) != tail {
                    self.audit_failures += 1;
                }
                tail
            }
        };
        to_a + tail
    }

    /// `LCE(x, x + period)` asked at the next level; probes past the text are 0.
    fn forward_probe(
        &mut self,
        level: usize,
        key: u64,
        current: (usize, usize),
        x: usize,
        period: usize,
    ) -> usize {
        let n = self.text.len();
        debug_assert!(
            x + period <= n,
            "probe ({x}, {}) beyond n = {n}",
            x + period
        );
        if x + period > n {
            return 0;
        }
        self.forward(level, key, current, x, x + period)
    }

    fn forward(
        &mut self,
        level: usize,
        key: u64,
        current: (usize, usize),
        x: usize,
        y: usize,
    ) -> usize {
        let lv = &mut self.levels[level];
        lv.counters.forwarded += 1;
        let pair = lv
            .pairs
            .get_mut(&key)
            .expect("forwarding from a missing block-pair");
        pair.forwarded += 1;
        let count = pair.forwarded;
        self.max_forwarded = self.max_forwarded.max(count);
        let shaped = (x, y) == current || (x < y && y <= x + (2usize << level));
        if !shaped || count > MAX_FORWARDS_PER_PAIR {
            self.forwarding_violations += 1;
        }
        self.level_lce(level + 1, x, y)
    }

    fn set_state(&mut self, level: usize, key: u64, state: BlockState) {
        let lv = &mut self.levels[level];
        let pair = lv
            .pairs
            .get_mut(&key)
            .expect("state change on a missing block-pair");
        assert!(
            state.rank() == pair.state.rank() + 1,
            "block-pair state must advance one step: {} -> {}",
            pair.state.name(),
            state.name()
        );
        pair.state = state;
        let c = &mut lv.counters;
        match state {
            BlockState::Visited { .. } => {
                c.block_pairs += 1;
                c.to_visited += 1;
            }
            BlockState::Full { .. } => c.to_full += 1,
            BlockState::FullPlus { .. } => c.to_full_plus += 1,
            BlockState::Initial => {}
        }
    }

    /// `w[start, end-1]` has period `period`, length at least `period + 2^level`,
    /// and `w[start, end]` (if it exists) does not.
    fn periodic_witness_holds(
        &self,
        level: usize,
        start: usize,
        end: usize,
        period: usize,
    ) -> bool {
        let n = self.text.len();
        if end < start + period + (1 << level) || end > n + 1 {
            return false;
        }
        let periodic = (start..end - period).all(|x| self.text.at(x) == self.text.at(x + period));
        let breaks = end == n + 1 || self.text.at(end) != self.text.at(end - period);
        periodic && breaks
    }

    /// Witness period stored for a full block-pair (audit mode only).
    pub fn witness_period(&self, level: usize, a: usize, b: usize) -> Option<usize> {
        let (a, b) = (a.min(b), a.max(b));
        let key = pack(block_of(level, a), block_of(level, b));
        self.witness_periods.get(&(level, key)).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(t: &Text, i: usize, j: usize) -> usize {
        oracle::naive_lce(t, i, j).unwrap()
    }

    #[test]
    fn query_files() {
        let q = parse_queries("1 3\n\n# comment\n  2 2  \n").unwrap();
        assert_eq!(q, vec![(1, 3), (2, 2)]);
        assert!(matches!(
            parse_queries("1 3\n4\n"),
            Err(Error::QueryParse { line: 2, .. })
        ));
        assert!(matches!(
            parse_queries("1 x"),
            Err(Error::QueryParse { line: 1, .. })
        ));
        assert!(parse_queries("").unwrap().is_empty());
    }

    #[test]
    fn invariant_summary() {
        let mut st = LceStats {
            n: 10,
            ..LceStats::default()
        };
        assert!(st.invariant_failures().is_empty());
        st.levels = vec![
            LevelCounters::default(),
            LevelCounters {
                queries: 121,
                ..Default::default()
            },
        ];
        st.max_forwarded_per_pair = 5;
        st.distinct_top_pairs = Some(30);
        assert_eq!(st.invariant_failures().len(), 3);
    }

    #[test]
    fn block_indices() {
        assert_eq!(block_of(2, 5), 2);
        assert_eq!(block_of(0, 7), 7);
        assert_eq!(block_of(3, 8), 1);
        assert_eq!(block_of(3, 9), 2);
        assert_eq!(unpack(pack(7, 123_456)), (7, 123_456));
    }

    #[test]
    fn empty_text_rejects_everything() {
        let mut s = NcLce::new(Text::from(""), false);
        assert!(matches!(
            s.lce(1, 1),
            Err(Error::OutOfRange { pos: 1, max: 0 })
        ));
    }

    #[test]
    fn single_letter() {
        let mut s = NcLce::new(Text::from("a"), false);
        assert_eq!(s.lce(1, 1).unwrap(), 1);
        assert!(s.lce(1, 2).is_err());
    }

    #[test]
    fn fresh_stats_are_zero() {
        let s = NcLce::new(Text::from("abc"), true);
        let st = s.stats();
        assert_eq!(st.top_level_queries, 0);
        assert_eq!(st.comparisons, 0);
        assert!(st.levels.is_empty());
        assert_eq!(st.distinct_top_pairs, Some(0));
    }

    #[test]
    fn sample_string() {
        let t = Text::from("ababaabaabbbaa");
        let mut s = NcLce::new(t.clone(), true);
        assert_eq!(s.lce(1, 3).unwrap(), 3);
        assert_eq!(s.lce(3, 1).unwrap(), 3);
        assert_eq!(s.lce(4, 4).unwrap(), 11);
        // relevant at level 0 (cap 3), short at level 1
        assert_eq!(
            s.block_state(0, 1, 3),
            BlockState::Visited {
                a0: 1,
                b0: 3,
                lce: 3
            }
        );
        assert_eq!(s.stats().levels[0].queries, 3);
    }

    #[test]
    fn unary_climbs_levels() {
        let t = Text::from_symbols(vec![0; 100]);
        let mut s = NcLce::with_options(t, Options::default().with_trace());
        assert_eq!(s.lce(1, 2).unwrap(), 99);
        let trace = s.last_trace();
        // 3 * 2^i <= 99 for i = 0..=5, short at level 6
        assert_eq!(trace.len(), 7);
        for (i, step) in trace.iter().enumerate().take(6) {
            assert_eq!(step.level, i);
            assert_eq!(step.state, Some(BlockState::Initial));
        }
        assert_eq!(trace[6].block, None);
        let st = s.stats();
        assert_eq!(st.levels.len(), 7);
        assert!(st
            .levels
            .iter()
            .take(6)
            .all(|l| l.to_visited == 1 && l.forwarded == 1));
    }

    #[test]
    fn initial_forwards_once() {
        let t = Text::from_symbols(vec![0; 30]);
        let mut s = NcLce::new(t, false);
        assert_eq!(s.lce(1, 2).unwrap(), 29);
        assert_eq!(
            s.block_state(0, 1, 2),
            BlockState::Visited {
                a0: 1,
                b0: 2,
                lce: 29
            }
        );
        assert_eq!(s.stats().levels[0].forwarded, 1);
        assert_eq!(s.stats().max_forwarded_per_pair, 1);
    }

    #[test]
    fn aligned_shift_in_visited_state() {
        // one level-2 block-pair, queries (1, 9) then (2, 10) are shifted by one
        let t = Text::from_symbols(vec![7; 40]);
        let mut s = NcLce::new(t, false);
        assert_eq!(s.lce(1, 9).unwrap(), 32);
        let before = s.stats().levels[2].forwarded;
        assert_eq!(s.lce(2, 10).unwrap(), 31);
        assert_eq!(s.stats().levels[2].forwarded, before);
        assert_eq!(
            s.block_state(2, 2, 10),
            BlockState::Visited {
                a0: 1,
                b0: 9,
                lce: 32
            }
        );
    }

    #[test]
    fn periodic_text_reaches_full() {
        // (abcd)^16 x: queries (1, 13) and (3, 11) share the level-3 block-pair (1, 2)
        let mut w = b"abcd".repeat(16);
        w.push(b'x');
        let t = Text::from_bytes(&w);
        let mut s = NcLce::with_options(t.clone(), Options::strict().with_audit());
        assert_eq!(s.lce(1, 13).unwrap(), 52);
        assert_eq!(
            s.block_state(3, 1, 13),
            BlockState::Visited {
                a0: 1,
                b0: 13,
                lce: 52
            }
        );
        let forwarded_before = s.stats().levels[3].forwarded;
        assert_eq!(s.lce(3, 11).unwrap(), 54);
        assert_eq!(
            s.block_state(3, 3, 11),
            BlockState::Full {
                end_a: 65,
                end_b: 65
            }
        );
        assert_eq!(s.witness_period(3, 3, 11), Some(4));
        assert_eq!(s.stats().levels[3].forwarded - forwarded_before, 2);
        assert_eq!(s.stats().forwarding_violations, 0);
        assert_eq!(s.stats().audit_failures, 0);
        assert_eq!(naive(&t, 3, 11), 54);
    }

    #[test]
    fn full_plus_after_aligned_break() {
        // (ab)^12 c (ab)^12 c: the level-2 block-pair (1, 7) sees period 2
        let mut w = b"ab".repeat(12);
        w.push(b'c');
        w.extend_from_slice(&b"ab".repeat(12));
        w.push(b'c');
        let t = Text::from_bytes(&w);
        let mut s = NcLce::with_options(t.clone(), Options::strict().with_audit());
        assert_eq!(s.lce(1, 28).unwrap(), 22);
        assert_eq!(
            s.block_state(2, 1, 28),
            BlockState::Visited {
                a0: 1,
                b0: 28,
                lce: 22
            }
        );
        assert_eq!(s.lce(3, 26).unwrap(), 22);
        assert_eq!(
            s.block_state(2, 3, 26),
            BlockState::Full {
                end_a: 25,
                end_b: 50
            }
        );
        assert_eq!(s.lce(2, 27).unwrap(), 24);
        assert_eq!(
            s.block_state(2, 2, 27),
            BlockState::FullPlus {
                end_a: 25,
                end_b: 50,
                tail: 1
            }
        );
        let st = s.stats();
        assert_eq!(st.forwarding_violations, 0);
        assert_eq!(st.audit_failures, 0);
        assert_eq!(st.max_forwarded_per_pair, MAX_FORWARDS_PER_PAIR);

        // full+ answers without forwarding
        let mut s = NcLce::new(t.clone(), false);
        for (a, b) in [(1, 28), (3, 26), (2, 27)] {
            s.lce(a, b).unwrap();
        }
        let before = s.stats().levels[2].forwarded;
        for (a, b) in [(1, 26), (3, 28), (2, 25)] {
            assert_eq!(s.lce(a, b).unwrap(), naive(&t, a, b), "query ({a}, {b})");
        }
        assert_eq!(s.stats().levels[2].forwarded, before);
    }

    #[test]
    fn break_distances() {
        assert_eq!(resolve_full(14, 18), Some(14));
        assert_eq!(resolve_full(18, 14), Some(14));
        assert_eq!(resolve_full(8, 8), None);
        // realised on a string: period 4, breaks after 14 and 18 symbols
        let mut w = b"abcd".repeat(4)[..14].to_vec();
        w.push(b'X');
        let b = w.len() + 1;
        w.extend_from_slice(&b"abcd".repeat(5)[..18]);
        w.push(b'Y');
        let t = Text::from_bytes(&w);
        assert_eq!(naive(&t, 1, b), 14);
        let mut s = NcLce::new(t, false);
        assert_eq!(s.lce(1, b).unwrap(), 14);
    }

    #[test]
    fn strict_mode_reports_both_pairs() {
        let mut s = NcLce::new(Text::from("abababab"), true);
        s.lce(1, 3).unwrap();
        match s.lce(2, 4) {
            Err(Error::Crossing { earlier, current }) => {
                assert_eq!(earlier, (1, 3));
                assert_eq!(current, (2, 4));
            }
            other => panic!("expected crossing, got {other:?}"),
        }
        // the rejected pair is not logged
        assert_eq!(s.lce(3, 5).unwrap(), 4);
        assert_eq!(s.stats().distinct_top_pairs, Some(2));
    }

    #[test]
    fn non_strict_answers_crossing_queries() {
        let t = Text::from("abababab");
        let mut s = NcLce::new(t.clone(), false);
        for (a, b) in [(1, 3), (2, 4), (1, 5), (3, 7), (2, 6)] {
            assert_eq!(s.lce(a, b).unwrap(), naive(&t, a, b));
        }
    }

    #[test]
    fn level_zero_counts_every_query() {
        let t = Text::from_symbols(vec![1; 64]);
        let mut s = NcLce::new(t, false);
        let qs = [(1, 1), (1, 2), (2, 3), (5, 5), (1, 64)];
        for (a, b) in qs {
            s.lce(a, b).unwrap();
        }
        assert_eq!(s.stats().levels[0].queries, qs.len() as u64);
    }

    #[test]
    fn state_names_and_ranks() {
        let states = [
            BlockState::Initial,
            BlockState::Visited {
                a0: 1,
                b0: 2,
                lce: 3,
            },
            BlockState::Full { end_a: 1, end_b: 2 },
            BlockState::FullPlus {
                end_a: 1,
                end_b: 2,
                tail: 0,
            },
        ];
        for (r, s) in states.iter().enumerate() {
            assert_eq!(s.rank() as usize, r);
        }
        assert_eq!(states[3].name(), "full+");
    }
}
