//! Match sets and the merging algorithm that assembles them into labeled
//! plane trees.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::objects::PlaneTree;
use crate::statistics::{tree_stats, TreeStats};

/// A vertex label: `1..=n+1` unmarked, `n+2..=2n` marked (written `k*`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Unmarked(u32),
    Marked(u32),
}

impl Label {
    pub fn value(self) -> u32 {
        match self {
            Label::Unmarked(v) | Label::Marked(v) => v,
        }
    }

    pub fn is_marked(self) -> bool {
        matches!(self, Label::Marked(_))
    }

    /// The label of number `k` in the universe of size `n`.
    pub fn of(k: u32, n: u32) -> Label {
        if k <= n + 1 {
            Label::Unmarked(k)
        } else {
            Label::Marked(k)
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value()
            .cmp(&other.value())
            .then(self.is_marked().cmp(&other.is_marked()))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Unmarked(v) => write!(f, "{v}"),
            Label::Marked(v) => write!(f, "{v}*"),
        }
    }
}

/// A rooted tree with two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Match {
    pub root: Label,
    pub leaf: Label,
}

impl fmt::Display for Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {})", self.root, self.leaf)
    }
}

/// `n` matches using each label of `{1..n+1, (n+2)*..(2n)*}` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchSet {
    n: u32,
    matches: Vec<Match>,
}

impl MatchSet {
    pub fn new(n: u32, matches: Vec<Match>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("match sets need n >= 1".into()));
        }
        if matches.len() != n as usize {
            return Err(Error::Structural(format!(
                "expected {n} matches, got {}",
                matches.len()
            )));
        }
        let mut seen = vec![false; 2 * n as usize + 1];
        for m in &matches {
            if m.root == m.leaf {
                return Err(Error::Structural(format!("match {m} is a loop")));
            }
            for l in [m.root, m.leaf] {
                let v = l.value();
                if v == 0 || v > 2 * n || l != Label::of(v, n) || l.is_marked() != (v > n + 1) {
                    return Err(Error::Structural(format!(
                        "label {l} not in the universe for n = {n}"
                    )));
                }
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::Structural(format!("label {l} used twice")));
                }
            }
        }
        Ok(Self { n, matches })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn matches(&self) -> &[Match] {
        &self.matches
    }

    /// `(i, j)`: matches with no marked vertex, and matches with a marked
    /// root and an unmarked leaf.
    pub fn profile(&self) -> (usize, usize) {
        let plain = self
            .matches
            .iter()
            .filter(|m| !m.root.is_marked() && !m.leaf.is_marked())
            .count();
        let marked_root = self
            .matches
            .iter()
            .filter(|m| m.root.is_marked() && !m.leaf.is_marked())
            .count();
        (plain, marked_root)
    }
}

impl fmt::Display for MatchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.matches.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Node {
    label: Label,
    children: Vec<Node>,
}

impl Node {
    fn contains_marked(&self) -> bool {
        self.label.is_marked() || self.children.iter().any(Node::contains_marked)
    }

    fn min_marked(&self) -> Option<Label> {
        let own = self.label.is_marked().then_some(self.label);
        self.children.iter().filter_map(Node::min_marked).chain(own).min()
    }

    /// Replaces the leaf labelled `target` by `with`; returns whether found.
    fn substitute_leaf(&mut self, target: Label, with: &mut Option<Node>) -> bool {
        for child in &mut self.children {
            if child.label == target && child.children.is_empty() {
                *child = with.take().expect("substituted once");
                return true;
            }
            if child.substitute_leaf(target, with) {
                return true;
            }
        }
        false
    }

    fn shape(&self) -> PlaneTree {
        PlaneTree::from_children(self.children.iter().map(Node::shape).collect())
    }

    fn labels(&self, out: &mut Vec<u32>) {
        out.push(self.label.value());
        for c in &self.children {
            c.labels(out);
        }
    }
}

/// A plane tree whose `n + 1` vertices carry the distinct labels `1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPlaneTree {
    tree: PlaneTree,
    labels: Vec<u32>,
}

impl LabeledPlaneTree {
    /// `labels` lists the vertex labels in left-to-right preorder.
    pub fn new(tree: PlaneTree, labels: Vec<u32>) -> Result<Self> {
        let size = tree.node_count();
        if labels.len() != size {
            return Err(Error::Structural(format!(
                "{} labels for {size} vertices",
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if sorted.iter().zip(1..).any(|(&a, b)| a != b) {
            return Err(Error::Structural("labels are not 1..=n+1".into()));
        }
        Ok(Self { tree, labels })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn stats(&self) -> TreeStats {
        tree_stats(&self.tree)
    }
}

impl fmt::Display for LabeledPlaneTree {
    /// `1(2,3(4))`: a label followed by its children's renderings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(
            t: &PlaneTree,
            labels: &mut std::slice::Iter<'_, u32>,
            f: &mut fmt::Formatter<'_>,
        ) -> fmt::Result {
            write!(f, "{}", labels.next().expect("one label per vertex"))?;
            if !t.is_leaf() {
                f.write_str("(")?;
                for (k, c) in t.children().iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    go(c, labels, f)?;
                }
                f.write_str(")")?;
            }
            Ok(())
        }
        go(&self.tree, &mut self.labels.iter(), f)
    }
}

/// Merges a match set into a single labeled plane tree.
pub fn merge(set: &MatchSet) -> Result<LabeledPlaneTree> {
    let mut forest: Vec<Node> = set
        .matches
        .iter()
        .map(|m| Node {
            label: m.root,
            children: vec![Node {
                label: m.leaf,
                children: Vec::new(),
            }],
        })
        .collect();

    while forest.len() > 1 {
        let t_idx = forest
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.contains_marked())
            .min_by_key(|(_, t)| t.label)
            .map(|(k, _)| k)
            .ok_or_else(|| Error::Structural("no tree without marked vertices".into()))?;
        let (star_idx, j_star) = forest
            .iter()
            .enumerate()
            .filter_map(|(k, t)| t.min_marked().map(|m| (k, m)))
            .min_by_key(|&(_, m)| m)
            .ok_or_else(|| Error::Structural("no marked vertex left".into()))?;

        let t = forest.remove(t_idx);
        let star_idx = if star_idx > t_idx { star_idx - 1 } else { star_idx };
        let star = &mut forest[star_idx];
        if star.label == j_star {
            let mut merged = t;
            merged.children.append(&mut star.children);
            *star = merged;
        } else {
            let mut slot = Some(t);
            if !star.substitute_leaf(j_star, &mut slot) {
                return Err(Error::Structural(format!(
                    "marked vertex {j_star} is neither root nor leaf"
                )));
            }
        }
    }

    let root = forest.pop().expect("one tree remains");
    let mut labels = Vec::new();
    root.labels(&mut labels);
    LabeledPlaneTree::new(root.shape(), labels)
}

/// Largest `n` accepted by [`enumerate_match_sets`].
pub const MAX_MATCH_N: u32 = 5;

/// Every valid match set on `2n` labels, each exactly once.
pub fn enumerate_match_sets(n: u32) -> Result<Vec<MatchSet>> {
    if !(1..=MAX_MATCH_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "match sets are enumerated for 1 <= n <= {MAX_MATCH_N}, got {n}"
        )));
    }
    fn go(n: u32, used: &mut Vec<bool>, current: &mut Vec<Match>, out: &mut Vec<MatchSet>) {
        let Some(first) = (1..=2 * n).find(|&k| !used[k as usize]) else {
            out.push(MatchSet {
                n,
                matches: current.clone(),
            });
            return;
        };
        used[first as usize] = true;
        for other in first + 1..=2 * n {
            if used[other as usize] {
                continue;
            }
            used[other as usize] = true;
            let (a, b) = (Label::of(first, n), Label::of(other, n));
            for m in [Match { root: a, leaf: b }, Match { root: b, leaf: a }] {
                current.push(m);
                go(n, used, current, out);
                current.pop();
            }
            used[other as usize] = false;
        }
        used[first as usize] = false;
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; 2 * n as usize + 1], &mut Vec::new(), &mut out);
    Ok(out)
}
