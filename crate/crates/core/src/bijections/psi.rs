//! The recursive tree-to-2-Motzkin bijection along the rightmost branch, and
//! its equivalent vertex-labelling description.

use crate::error::{Error, Result};
use crate::objects::{LatticePath, PathKind, PlaneTree, Step};
use crate::statistics::tree_stats;

/// Walks the rightmost branch `e_1, …, e_k` from the root. Each branch vertex
/// `u_{i-1}` keeps its other children as a tree `T_i`; edge `e_i` encodes as
/// `B` (bare `T_i`) or `U psi(T_i) D` when `i < k`, and as nothing or
/// `R psi(T_k)` for the last edge.
pub fn psi(t: &PlaneTree) -> Result<LatticePath> {
    if t.is_leaf() {
        return Err(Error::EmptyTree);
    }
    let mut out = Vec::with_capacity(t.edges() - 1);
    encode(t.children(), &mut out);
    Ok(LatticePath::new_unchecked(PathKind::Colored2, out))
}

/// Encodes the tree whose root has the given (nonempty) children.
fn encode(children: &[PlaneTree], out: &mut Vec<Step>) {
    let mut current = children;
    loop {
        let (last, others) = current.split_last().expect("branch vertex has a child");
        if last.is_leaf() {
            if !others.is_empty() {
                out.push(Step::R);
                encode(others, out);
            }
            return;
        }
        if others.is_empty() {
            out.push(Step::B);
        } else {
            out.push(Step::U);
            encode(others, out);
            out.push(Step::D);
        }
        current = last.children();
    }
}

pub fn psi_inv(q: &LatticePath) -> Result<PlaneTree> {
    q.expect_kind(PathKind::Colored2)?;
    Ok(PlaneTree::from_children(decode(q.steps())))
}

/// Children of the root of the tree encoded by `steps`.
fn decode(steps: &[Step]) -> Vec<PlaneTree> {
    let mut branch: Vec<Vec<PlaneTree>> = Vec::new();
    let mut last_others = Vec::new();
    let mut pos = 0;
    while pos < steps.len() {
        match steps[pos] {
            Step::B => {
                branch.push(Vec::new());
                pos += 1;
            }
            Step::U => {
                let close = matching_down(steps, pos);
                branch.push(decode(&steps[pos + 1..close]));
                pos = close + 1;
            }
            Step::R => {
                last_others = decode(&steps[pos + 1..]);
                break;
            }
            other => unreachable!("unexpected {other:?} at height 0"),
        }
    }
    let mut node = PlaneTree::leaf();
    last_others.push(node);
    node = PlaneTree::from_children(last_others);
    for mut others in branch.into_iter().rev() {
        others.push(node);
        node = PlaneTree::from_children(others);
    }
    node.into_children()
}

fn matching_down(steps: &[Step], up: usize) -> usize {
    let mut height = 0i64;
    for (i, s) in steps.iter().enumerate().skip(up) {
        height += s.delta();
        if height == 0 {
            return i;
        }
    }
    unreachable!("unmatched up step")
}

/// Labels every vertex in preorder (internal non-leftmost child `U`, internal
/// leftmost child `B`, young leaf `R`, old leaf `D`; the root and the last
/// old leaf get nothing) and reads the labels by listing, at each vertex, its
/// children right to left before descending into them left to right.
pub fn psi_by_labels(t: &PlaneTree) -> Result<LatticePath> {
    if t.is_leaf() {
        return Err(Error::EmptyTree);
    }
    let critical = tree_stats(t)
        .critical_leaf_preorder_index
        .expect("nonempty tree has an old leaf");

    struct Labeled {
        label: Option<Step>,
        children: Vec<Labeled>,
    }

    fn assign(t: &PlaneTree, leftmost: bool, is_root: bool, next: &mut usize, critical: usize) -> Labeled {
        let idx = *next;
        *next += 1;
        let label = if is_root || idx == critical {
            None
        } else {
            Some(match (t.is_leaf(), leftmost) {
                (false, false) => Step::U,
                (false, true) => Step::B,
                (true, false) => Step::R,
                (true, true) => Step::D,
            })
        };
        let children = t
            .children()
            .iter()
            .enumerate()
            .map(|(k, c)| assign(c, k == 0, false, next, critical))
            .collect();
        Labeled { label, children }
    }

    fn read(v: &Labeled, out: &mut Vec<Step>) {
        out.extend(v.children.iter().rev().filter_map(|c| c.label));
        for c in &v.children {
            read(c, out);
        }
    }

    let labeled = assign(t, false, true, &mut 0, critical);
    let mut out = Vec::with_capacity(t.edges() - 1);
    read(&labeled, &mut out);
    LatticePath::new(PathKind::Colored2, out)
}
