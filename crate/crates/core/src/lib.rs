//! Longest common extension queries for non-crossing query sequences over a
//! general ordered alphabet, and what they are good for: Lyndon trees, runs
//! and square counting.
//!
//! Symbols are only ever compared, never hashed or used as indices.
//!
//! ```
//! use nclce::{compute_runs, NcLce, Run, Text};
//!
//! let text = Text::from("ababaabaabbbaa");
//! let mut lce = NcLce::new(text.clone(), true);
//! assert_eq!(lce.lce(1, 3).unwrap(), 3);
//!
//! let runs = compute_runs(&text);
//! assert!(runs.contains(&Run { start: 3, end: 10, period: 3 }));
//! ```

pub mod crossing;
pub mod error;
pub mod families;
pub mod limited;
pub mod lyndon;
pub mod noncrossing;
pub mod oracle;
pub mod runs;
pub mod text;

pub use error::{Error, Result};
pub use limited::{limited_lce, ComparisonCounter};
pub use lyndon::{lyndon_tree, LyndonTree, TreeNode};
pub use noncrossing::{
    block_of, parse_queries, BlockState, LceStats, LevelCounters, NcLce, Options,
};
pub use runs::{compute_runs, compute_runs_with, count_square_occurrences, Run, RunsOutcome};
pub use text::{InputMode, Interval, Order, Text};
