//! Immutable texts over a general ordered alphabet.
//!
//! Positions are 1-based. Position `n + 1` stands for the empty suffix: it is
//! unequal to every real symbol and sorts before all of them under both
//! orders, the usual "a proper prefix is smaller" rule of lexicographic order.

use std::cmp::Ordering;
use std::io::Read;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How raw input is turned into symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputMode {
    /// Every byte is one symbol.
    Bytes,
    /// ASCII whitespace separated unsigned decimal integers.
    Tokens,
}

impl FromStr for InputMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bytes" => Ok(InputMode::Bytes),
            "tokens" => Ok(InputMode::Tokens),
            other => Err(format!(
                "unknown input mode {other:?} (expected bytes or tokens)"
            )),
        }
    }
}

/// One of the two orders on the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    /// The natural order of symbol codes.
    Natural,
    /// The exact reverse of [`Order::Natural`].
    Inverted,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::Natural, Order::Inverted];

    pub fn from_index(index: u8) -> Option<Order> {
        match index {
            0 => Some(Order::Natural),
            1 => Some(Order::Inverted),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Order::Natural => 0,
            Order::Inverted => 1,
        }
    }

    /// Compares two real symbols under this order.
    #[inline]
    pub fn cmp_symbols(self, x: u64, y: u64) -> Ordering {
        match self {
            Order::Natural => x.cmp(&y),
            Order::Inverted => y.cmp(&x),
        }
    }
}

/// Closed interval `[lo, hi]` of positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

/// An immutable symbol sequence. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Arc<[u64]>,
}

impl std::fmt::Debug for Text {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.symbols.iter().all(|&c| (0x20..0x7f).contains(&c)) {
            let s: String = self.symbols.iter().map(|&c| c as u8 as char).collect();
            write!(f, "Text({s:?})")
        } else {
            f.debug_tuple("Text").field(&&self.symbols[..]).finish()
        }
    }
}

impl Text {
    pub fn from_symbols(symbols: impl Into<Arc<[u64]>>) -> Self {
        let symbols = symbols.into();
        assert!(
            symbols.len() < u32::MAX as usize,
            "texts are limited to 2^32 - 2 symbols"
        );
        Text { symbols }
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        Text::from_symbols(bytes.iter().map(|&b| u64::from(b)).collect::<Vec<_>>())
    }

    /// Parses whitespace separated decimal tokens.
    pub fn parse_tokens(input: &str) -> Result<Self> {
        let symbols = input
            .split_ascii_whitespace()
            .enumerate()
            .map(|(index, token)| {
                token.parse::<u64>().map_err(|_| Error::Parse {
                    index,
                    token: token.to_owned(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Text::from_symbols(symbols))
    }

    /// Reads a whole stream and decodes it according to `mode`.
    pub fn load<R: Read>(mut reader: R, mode: InputMode) -> Result<Self> {
        let mut buf = Vec::new();
        reader.read_to_end(&mut buf)?;
        match mode {
            InputMode::Bytes => Ok(Text::from_bytes(&buf)),
            InputMode::Tokens => {
                let s = String::from_utf8_lossy(&buf);
                Text::parse_tokens(&s)
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u64] {
        &self.symbols
    }

    /// Symbol at 1-based position `pos`, `None` outside `1..=n`.
    #[inline]
    pub fn get(&self, pos: usize) -> Option<u64> {
        pos.checked_sub(1)
            .and_then(|i| self.symbols.get(i).copied())
    }

    /// Symbol at 1-based position `pos` without the `Option`; panics outside `1..=n`.
    #[inline]
    pub(crate) fn at(&self, pos: usize) -> u64 {
        self.symbols[pos - 1]
    }

    pub(crate) fn check_position(&self, pos: usize) -> Result<()> {
        if pos == 0 || pos > self.len() + 1 {
            return Err(Error::OutOfRange {
                pos,
                max: self.len() + 1,
            });
        }
        Ok(())
    }

    /// Compares the symbols at `i` and `j` under `order`.
    ///
    /// Position `n + 1` is the end boundary and sorts before every real symbol.
    pub fn compare_at(&self, i: usize, j: usize, order: Order) -> Result<Ordering> {
        self.check_position(i)?;
        self.check_position(j)?;
        Ok(self.compare_at_unchecked(i, j, order))
    }

    #[inline]
    pub(crate) fn compare_at_unchecked(&self, i: usize, j: usize, order: Order) -> Ordering {
        if i == j {
            return Ordering::Equal;
        }
        match (self.get(i), self.get(j)) {
            (Some(x), Some(y)) => order.cmp_symbols(x, y),
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        }
    }

    pub fn reverse(&self) -> Text {
        Text::from_symbols(self.symbols.iter().rev().copied().collect::<Vec<_>>())
    }

    /// Whether both texts share the same storage or the same contents.
    pub fn same_as(&self, other: &Text) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::from_bytes(s.as_bytes())
    }
}
