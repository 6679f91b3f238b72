//! Capped LCE by direct scanning.

use crate::error::Result;
use crate::text::Text;

/// Running count of symbol comparisons.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComparisonCounter {
    total: u64,
}

impl ComparisonCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

/// `min(LCE(i, j), cap)`, counting every symbol comparison in `counter`.
pub fn limited_lce(
    text: &Text,
    i: usize,
    j: usize,
    cap: usize,
    counter: &mut ComparisonCounter,
) -> Result<usize> {
    text.check_position(i)?;
    text.check_position(j)?;
    Ok(limited_lce_unchecked(text, i, j, cap, counter))
}

#[inline]
pub(crate) fn limited_lce_unchecked(
    text: &Text,
    i: usize,
    j: usize,
    cap: usize,
    counter: &mut ComparisonCounter,
) -> usize {
    let n = text.len();
    if i > n || j > n {
        return 0;
    }
    let reach = cap.min(n + 1 - i.max(j));
    if i == j {
        return reach;
    }
    let symbols = text.symbols();
    let (x, y) = (
        &symbols[i - 1..i - 1 + reach],
        &symbols[j - 1..j - 1 + reach],
    );
    match x.iter().zip(y).position(|(p, q)| p != q) {
        Some(k) => {
            counter.total += k as u64 + 1;
            k
        }
        None => {
            counter.total += reach as u64;
            reach
        }
    }
}
