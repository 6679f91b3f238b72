//! Lyndon trees built right to left with LCE-driven suffix comparisons.
//!
//! The tree of an arbitrary text `w` is the tree of `$w`, where `$` sorts
//! below every symbol under the chosen order. `$` occupies position 0 and is
//! never materialized: after the main pass the remaining stack roots are
//! attached under it from left to right.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::noncrossing::{NcLce, Options};
use crate::text::{Interval, Order, Text};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub interval: Interval,
    /// Indices of the left and right child; `None` for leaves.
    pub children: Option<(usize, usize)>,
}

/// Full binary tree of intervals over positions `0..=n`.
#[derive(Clone, Debug)]
pub struct LyndonTree {
    order: Order,
    nodes: Vec<TreeNode>,
    root: usize,
}

impl PartialEq for LyndonTree {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.tree_nodes() == other.tree_nodes()
    }
}

impl Eq for LyndonTree {}

impl LyndonTree {
    /// Builds the tree with a fresh non-strict backend.
    pub fn build(text: &Text, order: Order) -> Self {
        let mut backend = NcLce::new(text.clone(), false);
        lyndon_tree(text, order, &mut backend).expect("fresh backend over the same text")
    }

    pub(crate) fn builder(order: Order, n: usize) -> TreeBuilder {
        TreeBuilder {
            order,
            nodes: Vec::with_capacity(2 * n + 1),
        }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[self.root]
    }

    pub fn node(&self, index: usize) -> &TreeNode {
        &self.nodes[index]
    }

    /// Number of nodes, `2(n + 1) - 1`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes in pre-order (parents before children, left before right).
    pub fn preorder(&self) -> Preorder<'_> {
        Preorder {
            tree: self,
            stack: vec![self.root],
        }
    }

    /// Every node interval exactly once, in pre-order.
    pub fn tree_nodes(&self) -> Vec<Interval> {
        self.preorder().map(|node| node.interval).collect()
    }

    /// `(left, right)` child intervals of every internal node, in pre-order.
    pub fn splits(&self) -> Vec<(Interval, Interval, Interval)> {
        self.preorder()
            .filter_map(|node| {
                node.children.map(|(l, r)| {
                    (
                        node.interval,
                        self.nodes[l].interval,
                        self.nodes[r].interval,
                    )
                })
            })
            .collect()
    }
}

pub struct Preorder<'a> {
    tree: &'a LyndonTree,
    stack: Vec<usize>,
}

impl<'a> Iterator for Preorder<'a> {
    type Item = &'a TreeNode;

    fn next(&mut self) -> Option<Self::Item> {
        let index = self.stack.pop()?;
        let node = &self.tree.nodes[index];
        if let Some((left, right)) = node.children {
            self.stack.push(right);
            self.stack.push(left);
        }
        Some(node)
    }
}

pub(crate) struct TreeBuilder {
    order: Order,
    nodes: Vec<TreeNode>,
}

impl TreeBuilder {
    pub(crate) fn leaf(&mut self, pos: usize) -> usize {
        self.nodes.push(TreeNode {
            interval: Interval::new(pos, pos),
            children: None,
        });
        self.nodes.len() - 1
    }

    pub(crate) fn join(&mut self, left: usize, right: usize) -> usize {
        let (l, r) = (self.nodes[left].interval, self.nodes[right].interval);
        debug_assert_eq!(l.hi + 1, r.lo, "children must be adjacent");
        self.nodes.push(TreeNode {
            interval: Interval::new(l.lo, r.hi),
            children: Some((left, right)),
        });
        self.nodes.len() - 1
    }

    pub(crate) fn finish(self, root: usize) -> LyndonTree {
        LyndonTree {
            order: self.order,
            nodes: self.nodes,
            root,
        }
    }
}

/// Builds the `order`-Lyndon tree of `$text` using `backend` for every
/// comparison. The backend must be fresh and built over `text`; the LCE
/// queries issued are non-crossing, so a strict backend never rejects one.
pub fn lyndon_tree(text: &Text, order: Order, backend: &mut NcLce) -> Result<LyndonTree> {
    if !backend.text().same_as(text) {
        return Err(Error::TextMismatch);
    }
    if backend.queries_answered() != 0 {
        return Err(Error::BackendNotFresh(backend.queries_answered()));
    }
    let n = text.len();
    let mut tree = LyndonTree::builder(order, n);
    // roots covering [k+1, n], leftmost last
    let mut stack: Vec<usize> = Vec::new();
    for k in (1..=n).rev() {
        let mut top = tree.leaf(k);
        while let Some(&next) = stack.last() {
            let a = tree.nodes[next].interval.lo;
            debug_assert_eq!(tree.nodes[top].interval.hi + 1, a);
            if !suffix_precedes(text, order, backend, k, a)? {
                break;
            }
            stack.pop();
            top = tree.join(top, next);
        }
        stack.push(top);
    }
    // the sentinel precedes every suffix, so everything merges under it
    let mut root = tree.leaf(0);
    while let Some(next) = stack.pop() {
        root = tree.join(root, next);
    }
    Ok(tree.finish(root))
}

/// Builds the tree on a strict backend, returning its stats as well.
pub fn lyndon_tree_checked(
    text: &Text,
    order: Order,
    options: Options,
) -> Result<(LyndonTree, crate::noncrossing::LceStats)> {
    let mut backend = NcLce::with_options(text.clone(), options);
    let tree = lyndon_tree(text, order, &mut backend)?;
    Ok((tree, backend.stats()))
}

/// Whether the suffix at `k` is smaller than the suffix at `a` under `order`.
fn suffix_precedes(
    text: &Text,
    order: Order,
    backend: &mut NcLce,
    k: usize,
    a: usize,
) -> Result<bool> {
    let common = backend.lce(k, a)?;
    Ok(text
        .compare_at_unchecked(k + common, a + common, order)
        .is_lt())
}
