//! Leaf statistics on trees and the path and permutation statistics they are
//! carried to.

use serde::Serialize;

use crate::error::Result;
use crate::objects::{LatticePath, PathKind, Permutation, PlaneTree, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub edges: usize,
    pub leaves: usize,
    /// Leaves that are the leftmost child of their parent.
    pub old_leaves: usize,
    pub young_leaves: usize,
    /// Left-to-right preorder index (root = 0) of the last old leaf.
    pub critical_leaf_preorder_index: Option<usize>,
}

/// Role of one vertex, listed in left-to-right preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct VertexInfo {
    /// Preorder index of the parent, `None` for the root.
    pub parent: Option<usize>,
    pub is_leaf: bool,
    pub is_leftmost_child: bool,
}

impl VertexInfo {
    pub fn is_old_leaf(&self) -> bool {
        self.is_leaf && self.parent.is_some() && self.is_leftmost_child
    }

    pub fn is_young_leaf(&self) -> bool {
        self.is_leaf && self.parent.is_some() && !self.is_leftmost_child
    }
}

pub(crate) fn preorder_vertices(t: &PlaneTree) -> Vec<VertexInfo> {
    let mut out = Vec::with_capacity(t.node_count());
    let mut stack: Vec<(&PlaneTree, Option<usize>, bool)> = vec![(t, None, false)];
    while let Some((node, parent, leftmost)) = stack.pop() {
        let idx = out.len();
        out.push(VertexInfo {
            parent,
            is_leaf: node.is_leaf(),
            is_leftmost_child: leftmost,
        });
        for (k, c) in node.children().iter().enumerate().rev() {
            stack.push((c, Some(idx), k == 0));
        }
    }
    out
}

pub fn tree_stats(t: &PlaneTree) -> TreeStats {
    let vertices = preorder_vertices(t);
    let mut stats = TreeStats {
        edges: vertices.len() - 1,
        leaves: 0,
        old_leaves: 0,
        young_leaves: 0,
        critical_leaf_preorder_index: None,
    };
    for (idx, v) in vertices.iter().enumerate() {
        if v.is_old_leaf() {
            stats.old_leaves += 1;
            stats.critical_leaf_preorder_index = Some(idx);
        } else if v.is_young_leaf() {
            stats.young_leaves += 1;
        }
    }
    stats.leaves = stats.old_leaves + stats.young_leaves;
    stats
}

/// Overlapping occurrences of `word` as a contiguous factor of `p`.
pub fn factor_count(p: &LatticePath, word: &str) -> usize {
    let pattern: Vec<Option<Step>> = word.chars().map(Step::from_letter).collect();
    if pattern.is_empty() || pattern.iter().any(Option::is_none) {
        return 0;
    }
    let pattern: Vec<Step> = pattern.into_iter().flatten().collect();
    count_factor(p.steps(), &pattern)
}

fn count_factor(steps: &[Step], pattern: &[Step]) -> usize {
    steps.windows(pattern.len()).filter(|w| *w == pattern).count()
}

/// Peaks `UD` whose apex sits at an even height.
pub fn peaks_at_even_height(p: &LatticePath) -> Result<usize> {
    p.expect_kind(PathKind::Dyck)?;
    let heights = p.heights();
    Ok(p.steps()
        .windows(2)
        .enumerate()
        .filter(|(i, w)| *w == [Step::U, Step::D] && heights[*i] % 2 == 0)
        .count())
}

fn with_final_down(p: &LatticePath) -> Vec<Step> {
    let mut steps = p.steps().to_vec();
    steps.push(Step::D);
    steps
}

/// Maximal runs of at least two `D`s in `p` followed by one extra `D`.
pub fn drops(p: &LatticePath) -> Result<usize> {
    p.expect_kind(PathKind::Dyck)?;
    let steps = with_final_down(p);
    let mut count = 0;
    let mut run = 0;
    for s in steps.iter().chain(std::iter::once(&Step::U)) {
        if *s == Step::D {
            run += 1;
        } else {
            if run >= 2 {
                count += 1;
            }
            run = 0;
        }
    }
    Ok(count)
}

/// Occurrences of `DDD` in `p` followed by one extra `D`.
pub fn triple_falls(p: &LatticePath) -> Result<usize> {
    p.expect_kind(PathKind::Dyck)?;
    Ok(count_factor(&with_final_down(p), &[Step::D, Step::D, Step::D]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PermStats {
    /// Positions with `π(i) >= i`.
    pub weak_excedances: usize,
    /// Positions `i < n` where both `i` and `i + 1` are weak excedances.
    pub consec_weak_exc_pairs: usize,
    /// Weak excedances at `n`, or whose successor is a deficiency.
    pub weak_exc_not_followed: usize,
    /// Positions `i < n` where both `i` and `i + 1` are deficiencies.
    pub consec_deficiency_pairs: usize,
    /// `π(n) < n`.
    pub last_is_deficiency: bool,
    /// Double descents of the word `(n+1) π`.
    pub double_descents_prepended: usize,
    /// Double ascents of the word `π (n+1)`.
    pub double_ascents_appended: usize,
    /// Ascending runs (length >= 2) of the word `π (n+1)`.
    pub ascending_runs_appended: usize,
    pub left_to_right_minima: usize,
}

pub fn perm_stats(p: &Permutation) -> PermStats {
    let n = p.len();
    let w = p.word();
    let weak: Vec<bool> = (1..=n).map(|i| w[i - 1] >= i).collect();

    let weak_excedances = weak.iter().filter(|&&b| b).count();
    let consec_weak_exc_pairs = weak.windows(2).filter(|x| x[0] && x[1]).count();
    let weak_exc_not_followed = (0..n)
        .filter(|&i| weak[i] && (i + 1 == n || !weak[i + 1]))
        .count();
    let consec_deficiency_pairs = weak.windows(2).filter(|x| !x[0] && !x[1]).count();
    let last_is_deficiency = n > 0 && w[n - 1] < n;

    let prepended: Vec<usize> = std::iter::once(n + 1).chain(w.iter().copied()).collect();
    let appended: Vec<usize> = w.iter().copied().chain(std::iter::once(n + 1)).collect();
    let double_descents_prepended = prepended
        .windows(3)
        .filter(|x| x[0] > x[1] && x[1] > x[2])
        .count();
    let double_ascents_appended = appended.windows(3).filter(|x| x[0] < x[1] && x[1] < x[2]).count();
    // A run starts at every ascent not preceded by an ascent.
    let ascents: Vec<bool> = appended.windows(2).map(|x| x[0] < x[1]).collect();
    let ascending_runs_appended = (0..ascents.len())
        .filter(|&i| ascents[i] && (i == 0 || !ascents[i - 1]))
        .count();

    let mut left_to_right_minima = 0;
    let mut min = usize::MAX;
    for &v in w {
        if v < min {
            left_to_right_minima += 1;
            min = v;
        }
    }

    PermStats {
        weak_excedances,
        consec_weak_exc_pairs,
        weak_exc_not_followed,
        consec_deficiency_pairs,
        last_is_deficiency,
        double_descents_prepended,
        double_ascents_appended,
        ascending_runs_appended,
        left_to_right_minima,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::trees;

    fn tree(s: &str) -> PlaneTree {
        PlaneTree::parse(s).unwrap()
    }

    fn dyck(s: &str) -> LatticePath {
        LatticePath::parse(s, PathKind::Dyck).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    /// Independent recursive count: (old, young) by direct definition.
    fn leaves_by_definition(t: &PlaneTree) -> (usize, usize) {
        let mut old = 0;
        let mut young = 0;
        for (k, c) in t.children().iter().enumerate() {
            if c.is_leaf() {
                if k == 0 {
                    old += 1;
                } else {
                    young += 1;
                }
            }
            let (o, y) = leaves_by_definition(c);
            old += o;
            young += y;
        }
        (old, young)
    }

    #[test]
    fn small_tree_stats() {
        let s = tree_stats(&tree("()"));
        assert_eq!((s.leaves, s.old_leaves, s.young_leaves), (0, 0, 0));
        assert_eq!(s.critical_leaf_preorder_index, None);

        let s = tree_stats(&tree("(()())"));
        assert_eq!((s.old_leaves, s.young_leaves), (1, 1));
        assert_eq!(s.critical_leaf_preorder_index, Some(1));

        let s = tree_stats(&tree("((())())"));
        assert_eq!((s.old_leaves, s.young_leaves), (1, 1));
        assert_eq!(s.critical_leaf_preorder_index, Some(2));

        let s = tree_stats(&tree("((()())(()))"));
        assert_eq!((s.old_leaves, s.young_leaves), (2, 1));
        assert_eq!(s.critical_leaf_preorder_index, Some(5));
    }

    #[test]
    fn tree_stats_match_definition_exhaustively() {
        for n in 0..=9 {
            for t in trees(n) {
                let s = tree_stats(&t);
                assert_eq!((s.old_leaves, s.young_leaves), leaves_by_definition(&t));
                assert_eq!(s.edges, n);
                if n >= 1 {
                    assert!(s.old_leaves >= 1);
                    assert!(s.critical_leaf_preorder_index.is_some());
                }
            }
        }
    }

    #[test]
    fn factor_counts_overlap() {
        assert_eq!(factor_count(&dyck("UDUD"), "UDU"), 1);
        assert_eq!(factor_count(&dyck("UUDD"), "DDD"), 0);
        assert_eq!(factor_count(&dyck("UUUUDDDD"), "DDD"), 2);
        assert_eq!(factor_count(&dyck("UUUDUDDDUDUUUUDDDDUUDUDUDD"), "UDU"), 4);
    }

    #[test]
    fn peaks_at_even_height_examples() {
        assert_eq!(peaks_at_even_height(&dyck("UD")).unwrap(), 0);
        assert_eq!(peaks_at_even_height(&dyck("UUDD")).unwrap(), 1);
        assert_eq!(peaks_at_even_height(&dyck("UUDUDD")).unwrap(), 2);
        assert!(peaks_at_even_height(&LatticePath::empty(PathKind::Motzkin)).is_err());
    }

    #[test]
    fn drops_and_triple_falls() {
        let p = dyck("UUUUDUUUDDDDUDUDUDDDUDUUDD");
        assert_eq!(drops(&p).unwrap(), 3);
        assert_eq!(triple_falls(&p).unwrap(), 4);
        assert_eq!(drops(&dyck("UD")).unwrap(), 1);
        assert_eq!(triple_falls(&dyck("UD")).unwrap(), 0);
        assert_eq!(drops(&dyck("UUDD")).unwrap(), 1);
        assert_eq!(triple_falls(&dyck("UUDD")).unwrap(), 1);
    }

    #[test]
    fn perm_stats_examples() {
        let s = perm_stats(&perm("(3,4,1,2,5,9,6,7,8,11,12,13,10)"));
        assert_eq!(s.consec_weak_exc_pairs, 4);
        assert_eq!(s.weak_exc_not_followed, 3);

        let s = perm_stats(&perm("(11,10,12,13,9,5,6,7,8,3,2,1,4)"));
        assert_eq!(s.double_descents_prepended, 4);
        assert_eq!(s.ascending_runs_appended, 3);
        assert_eq!(s.left_to_right_minima, 7);

        let s = perm_stats(&perm("(2,1)"));
        assert_eq!(s.consec_deficiency_pairs, 0);
        assert!(s.last_is_deficiency);
        assert_eq!(s.weak_exc_not_followed, 1);
        assert_eq!(s.weak_excedances, 1);
    }

    #[test]
    fn lone_elements_are_not_runs() {
        // (3,2,1,4): appended word 3 2 1 4 5 has the single run 1 4 5.
        assert_eq!(perm_stats(&perm("(3,2,1)")).ascending_runs_appended, 1);
        assert_eq!(perm_stats(&perm("(3,2,1,4)")).ascending_runs_appended, 1);
        assert_eq!(perm_stats(&perm("(2,3,1)")).ascending_runs_appended, 2);
    }

    #[test]
    fn weak_excedance_partition() {
        for n in 1..=7 {
            for p in crate::objects::avoiders(n, crate::objects::Pattern::P321) {
                let s = perm_stats(&p);
                // Each weak excedance is followed by another one or not.
                let followed = (1..n).filter(|&i| p.at(i) >= i && p.at(i + 1) > i).count();
                assert_eq!(followed, s.consec_weak_exc_pairs);
                assert_eq!(
                    s.weak_excedances,
                    s.consec_weak_exc_pairs + s.weak_exc_not_followed
                );
                let deficiencies = (1..=n).filter(|&i| p.at(i) < i).count();
                assert_eq!(s.weak_excedances + deficiencies, n);
            }
        }
    }
}
