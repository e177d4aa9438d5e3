//! Two classical tree-to-Dyck-path encodings.

use crate::error::{Error, Result};
use crate::objects::{LatticePath, PathKind, PlaneTree, Step};

fn nonempty_tree(t: &PlaneTree) -> Result<()> {
    if t.is_leaf() {
        Err(Error::EmptyTree)
    } else {
        Ok(())
    }
}

fn nonempty_dyck(p: &LatticePath) -> Result<()> {
    p.expect_kind(PathKind::Dyck)?;
    if p.is_empty() {
        Err(Error::EmptyPath)
    } else {
        Ok(())
    }
}

/// Walks the edges in preorder visiting children right to left: `U` going
/// down an edge, `D` coming back up.
pub fn pre(t: &PlaneTree) -> Result<LatticePath> {
    nonempty_tree(t)?;
    let steps = t
        .mirror()
        .updown_word()
        .into_iter()
        .map(|down| if down { Step::U } else { Step::D })
        .collect();
    Ok(LatticePath::new_unchecked(PathKind::Dyck, steps))
}

pub fn pre_inv(p: &LatticePath) -> Result<PlaneTree> {
    nonempty_dyck(p)?;
    let word: Vec<bool> = p.steps().iter().map(|&s| s == Step::U).collect();
    Ok(PlaneTree::from_updown_word(&word).mirror())
}

/// Left-to-right preorder over vertices: a vertex with `r` children writes
/// `U^r D`, except the last vertex (always a leaf), which writes nothing.
pub fn dgr(t: &PlaneTree) -> Result<LatticePath> {
    nonempty_tree(t)?;
    let mut steps = Vec::with_capacity(2 * t.edges());
    let mut stack = vec![t];
    while let Some(node) = stack.pop() {
        if stack.is_empty() && node.is_leaf() {
            // Last vertex in preorder: nothing left on the stack, no children.
            break;
        }
        steps.extend(std::iter::repeat_n(Step::U, node.children().len()));
        steps.push(Step::D);
        stack.extend(node.children().iter().rev());
    }
    Ok(LatticePath::new_unchecked(PathKind::Dyck, steps))
}

pub fn dgr_inv(p: &LatticePath) -> Result<PlaneTree> {
    nonempty_dyck(p)?;
    let mut degrees = Vec::with_capacity(p.len() / 2 + 1);
    let mut run = 0;
    for &s in p.steps() {
        if s == Step::U {
            run += 1;
        } else {
            degrees.push(run);
            run = 0;
        }
    }
    degrees.push(0);

    fn build(degrees: &[usize], next: &mut usize) -> PlaneTree {
        let r = degrees[*next];
        *next += 1;
        PlaneTree::from_children((0..r).map(|_| build(degrees, next)).collect())
    }
    let mut next = 0;
    let t = build(&degrees, &mut next);
    debug_assert_eq!(next, degrees.len());
    Ok(t)
}
