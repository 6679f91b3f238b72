//! On-line crossing detection for pairs over `1..=n`.
//!
//! Pairs `(a, b)` and `(a', b')` cross when `a < a' < b < b'` (or mirrored).
//! A new pair `(a, b)` crosses a logged one iff some logged pair starts
//! strictly inside `(a, b)` and ends after `b`, or ends strictly inside and
//! starts before `a`. Two range-extremum trees answer both in `O(log n)`.

/// Iterative segment tree over `1..=n`; each slot holds `(value, position)`.
#[derive(Clone, Debug)]
struct ExtremumTree {
    size: usize,
    data: Vec<(usize, usize)>,
    neutral: (usize, usize),
    pick_max: bool,
}

impl ExtremumTree {
    fn new(n: usize, pick_max: bool) -> Self {
        let size = (n + 1).next_power_of_two();
        let neutral = if pick_max { (0, 0) } else { (usize::MAX, 0) };
        ExtremumTree {
            size,
            data: vec![neutral; 2 * size],
            neutral,
            pick_max,
        }
    }

    #[inline]
    fn better(&self, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        if self.pick_max {
            x.max(y)
        } else {
            x.min(y)
        }
    }

    fn improve(&mut self, pos: usize, value: usize) {
        let mut k = pos + self.size;
        self.data[k] = self.better(self.data[k], (value, pos));
        while k > 1 {
            k /= 2;
            self.data[k] = self.better(self.data[2 * k], self.data[2 * k + 1]);
        }
    }

    /// Position in `lo..=hi` holding the extremum, with its value.
    fn query(&self, lo: usize, hi: usize) -> Option<(usize, usize)> {
        if lo > hi {
            return None;
        }
        let (mut l, mut r) = (lo + self.size, hi + self.size + 1);
        let mut best = self.neutral;
        while l < r {
            if l & 1 == 1 {
                best = self.better(best, self.data[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = self.better(best, self.data[r]);
            }
            l /= 2;
            r /= 2;
        }
        (best.0 != self.neutral.0).then_some((best.1, best.0))
    }
}

/// Log of previously accepted pairs.
#[derive(Clone, Debug)]
pub struct CrossingDetector {
    n: usize,
    // for every start, the furthest end logged
    max_end: ExtremumTree,
    // for every end, the smallest start logged
    min_start: ExtremumTree,
}

impl CrossingDetector {
    pub fn new(n: usize) -> Self {
        CrossingDetector {
            n,
            max_end: ExtremumTree::new(n, true),
            min_start: ExtremumTree::new(n, false),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    /// A logged pair crossing `(a, b)`, if any. Requires `a <= b <= n`.
    pub fn find_crossing(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        debug_assert!(a <= b && b <= self.n);
        if b < a + 2 {
            return None;
        }
        if let Some((start, end)) = self.max_end.query(a + 1, b - 1) {
            if end > b {
                return Some((start, end));
            }
        }
        if let Some((end, start)) = self.min_start.query(a + 1, b - 1) {
            if start < a {
                return Some((start, end));
            }
        }
        None
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        debug_assert!(a <= b && b <= self.n);
        if a == b {
            return;
        }
        self.max_end.improve(a, b);
        self.min_start.improve(b, a);
    }
}
