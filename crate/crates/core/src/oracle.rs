//! Brute-force references and workload generators.
//!
//! Everything here is a direct transcription of a definition and never calls
//! into the fast modules, so it can be used to check them.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lyndon::LyndonTree;
use crate::runs::Run;
use crate::text::{Interval, Order, Text};

/// `LCE(i, j)` by scanning, for `1 <= i, j <= n + 1`.
pub fn naive_lce(text: &Text, i: usize, j: usize) -> Result<usize> {
    let n = text.len();
    for pos in [i, j] {
        if pos == 0 || pos > n + 1 {
            return Err(Error::OutOfRange { pos, max: n + 1 });
        }
    }
    Ok(scan_lce(text, i, j))
}

pub(crate) fn scan_lce(text: &Text, i: usize, j: usize) -> usize {
    let s = text.symbols();
    let mut k = 0;
    while i + k <= s.len() && j + k <= s.len() && s[i + k - 1] == s[j + k - 1] {
        k += 1;
    }
    k
}

/// Lexicographic comparison of `w[x..=xe]` and `w[y..=ye]`; a proper prefix is smaller.
fn compare_factors(
    text: &Text,
    order: Order,
    (x, xe): (usize, usize),
    (y, ye): (usize, usize),
) -> Ordering {
    let s = text.symbols();
    let (lx, ly) = (xe + 1 - x, ye + 1 - y);
    for k in 0..lx.min(ly) {
        match order.cmp_symbols(s[x + k - 1], s[y + k - 1]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    lx.cmp(&ly)
}

/// Whether `w[interval]` is smaller than each of its non-empty proper suffixes.
pub fn is_lyndon(text: &Text, interval: Interval, order: Order) -> bool {
    let Interval { lo, hi } = interval;
    assert!(
        lo >= 1 && hi <= text.len(),
        "interval {interval:?} outside the text"
    );
    (lo + 1..=hi).all(|j| compare_factors(text, order, (lo, hi), (j, hi)) == Ordering::Less)
}

/// Lyndon tree of `$w` by recursive standard factorization.
pub fn naive_lyndon_tree(text: &Text, order: Order) -> LyndonTree {
    let n = text.len();
    let mut tree = LyndonTree::builder(order, n);
    let root = factor(text, order, &mut tree, Interval::new(0, n));
    tree.finish(root)
}

fn factor(text: &Text, order: Order, tree: &mut crate::lyndon::TreeBuilder, iv: Interval) -> usize {
    if iv.lo == iv.hi {
        return tree.leaf(iv.lo);
    }
    // v = longest proper suffix that is Lyndon; position 0 ($) never starts one
    let split = (iv.lo + 1..=iv.hi)
        .find(|&m| is_lyndon(text, Interval::new(m, iv.hi), order))
        .expect("the last symbol alone is always Lyndon");
    let left = factor(text, order, tree, Interval::new(iv.lo, split - 1));
    let right = factor(text, order, tree, Interval::new(split, iv.hi));
    tree.join(left, right)
}

/// Every run, sorted by `(start, end)`.
///
/// For each start the prefix function of the suffix gives the shortest period
/// of every interval beginning there; intervals with `2p <= len` that cannot
/// be extended by one symbol on either side with period `p` are runs.
pub fn naive_runs(text: &Text) -> Vec<Run> {
    let s = text.symbols();
    let n = s.len();
    let mut runs = Vec::new();
    let mut border = vec![0usize; n];
    for start in 0..n {
        let w = &s[start..];
        border[0] = 0;
        for len in 2..=w.len() {
            let q = len - 1;
            let mut k = border[q - 1];
            while k > 0 && w[q] != w[k] {
                k = border[k - 1];
            }
            if w[q] == w[k] {
                k += 1;
            }
            border[q] = k;
            let period = len - k;
            if 2 * period > len {
                continue;
            }
            let end = start + len - 1; // 0-based inclusive
            let left_max = start == 0 || s[start - 1] != s[start - 1 + period];
            let right_max = end + 1 == n || s[end + 1] != s[end + 1 - period];
            if left_max && right_max {
                runs.push(Run {
                    start: start + 1,
                    end: end + 1,
                    period,
                });
            }
        }
    }
    runs.sort();
    runs
}

/// Shortest period of `w[lo..=hi]` by trying every candidate.
pub fn shortest_period(text: &Text, lo: usize, hi: usize) -> usize {
    let s = &text.symbols()[lo - 1..hi];
    (1..=s.len())
        .find(|&p| (p..s.len()).all(|i| s[i] == s[i - p]))
        .unwrap_or(s.len())
}

/// Number of `(i, m)` with `w[i, i+m-1] = w[i+m, i+2m-1]`.
pub fn naive_square_count(text: &Text) -> u64 {
    let s = text.symbols();
    let n = s.len();
    let mut count = 0;
    for i in 0..n {
        for m in 1..=(n - i) / 2 {
            if s[i..i + m] == s[i + m..i + 2 * m] {
                count += 1;
            }
        }
    }
    count
}

/// Set of pairs `(a, b)` with `1 <= a <= b <= n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

pub type Crossing = ((usize, usize), (usize, usize));

impl PairSet {
    pub fn new(n: usize) -> Self {
        PairSet {
            n,
            pairs: BTreeSet::new(),
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut set = PairSet::new(n);
        for (a, b) in pairs {
            set.insert(a, b);
        }
        set
    }

    /// Inserts `(min, max)`.
    pub fn insert(&mut self, a: usize, b: usize) {
        let (a, b) = (a.min(b), a.max(b));
        assert!(
            a >= 1 && b <= self.n,
            "pair ({a}, {b}) outside 1..={}",
            self.n
        );
        self.pairs.insert((a, b));
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// Some pair of crossing pairs, if there is one.
    ///
    /// Sweeps pairs by start (longer first), keeping the chain of pairs that
    /// still enclose the sweep point; a new pair crosses exactly when it
    /// leaves the innermost enclosing pair early.
    pub fn first_crossing(&self) -> Option<Crossing> {
        let mut sorted: Vec<(usize, usize)> = self.iter().filter(|(a, b)| a < b).collect();
        sorted.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut open: Vec<(usize, usize)> = Vec::new();
        for (a, b) in sorted {
            while open.last().is_some_and(|&(_, e)| e <= a) {
                open.pop();
            }
            if let Some(&(sa, sb)) = open.last() {
                if sa < a && sb < b {
                    return Some(((sa, sb), (a, b)));
                }
            }
            open.push((a, b));
        }
        None
    }

    pub fn is_noncrossing(&self) -> bool {
        self.first_crossing().is_none()
    }

    /// `{(ceil(a/t), ceil(b/t))}`.
    pub fn shrink(&self, t: usize) -> PairSet {
        assert!(t >= 1);
        PairSet::from_pairs(
            self.n.div_ceil(t),
            self.iter().map(|(a, b)| (a.div_ceil(t), b.div_ceil(t))),
        )
    }
}

/// Whether `(a, b)` and `(c, d)` cross, both given with the smaller end first.
pub fn pairs_cross(p: (usize, usize), q: (usize, usize)) -> bool {
    (p.0 < q.0 && q.0 < p.1 && p.1 < q.1) || (q.0 < p.0 && p.0 < q.1 && q.1 < p.1)
}

pub fn is_noncrossing(set: &PairSet) -> bool {
    set.is_noncrossing()
}

pub fn shrink_pairs(set: &PairSet, t: usize) -> PairSet {
    set.shrink(t)
}

/// `q` queries over `1..=n` forming a non-crossing set, deterministic in `seed`.
///
/// A random stack process opens and closes intervals (a laminar family),
/// diagonal and adjacent pairs are added, and the pool is shuffled. Longer
/// workloads repeat pool pairs, since a non-crossing set has fewer than `3n`
/// distinct elements.
pub fn gen_noncrossing_queries(n: usize, q: usize, seed: u64) -> Vec<(usize, usize)> {
    if q == 0 || n == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = BTreeSet::new();
    let mut open: Vec<usize> = Vec::new();
    for pos in 1..=n {
        let closes = rng.random_range(0..=open.len().min(3));
        for _ in 0..closes {
            let start = open.pop().expect("closing an open interval");
            pool.insert((start, pos));
        }
        for _ in 0..rng.random_range(0..=2) {
            open.push(pos);
        }
    }
    while let Some(start) = open.pop() {
        pool.insert((start, n));
    }
    for a in 1..=n {
        if rng.random_bool(0.3) {
            pool.insert((a, a));
        }
        if a < n && rng.random_bool(0.3) {
            pool.insert((a, a + 1));
        }
    }
    let mut pool: Vec<(usize, usize)> = pool.into_iter().collect();
    pool.shuffle(&mut rng);
    let mut queries: Vec<(usize, usize)> = pool.iter().copied().take(q).collect();
    while queries.len() < q {
        queries.push(pool[rng.random_range(0..pool.len())]);
    }
    queries
}

/// Uniformly random text over `{0, .., sigma-1}`.
pub fn random_text(n: usize, sigma: u64, seed: u64) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Text::from_symbols(
        (0..n)
            .map(|_| rng.random_range(0..sigma))
            .collect::<Vec<_>>(),
    )
}

/// Random text dense in long periodic stretches: repeated random roots with
/// occasional point mutations.
pub fn repetitive_text(n: usize, sigma: u64, seed: u64) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let root_len = rng.random_range(1..=8usize);
        let root: Vec<u64> = (0..root_len).map(|_| rng.random_range(0..sigma)).collect();
        let reps = rng.random_range(2..=(4 * n / root_len).clamp(2, 64));
        for k in 0..reps * root_len {
            if out.len() == n {
                break;
            }
            let c = if rng.random_bool(0.02) {
                rng.random_range(0..sigma)
            } else {
                root[k % root_len]
            };
            out.push(c);
        }
    }
    Text::from_symbols(out)
}

/// Every string over `{0, .., sigma-1}` of length `n`, in lexicographic order.
pub fn all_strings(n: usize, sigma: u64) -> impl Iterator<Item = Text> {
    let total = (sigma as u128).pow(n as u32) as u64;
    (0..total).map(move |mut code| {
        let mut v = vec![0u64; n];
        for slot in v.iter_mut().rev() {
            *slot = code % sigma;
            code /= sigma;
        }
        Text::from_symbols(v)
    })
}
