use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rooted tree whose children are totally ordered left to right.
///
/// The text form nests parentheses: a node is `(` followed by the encodings
/// of its children, left to right, followed by `)`. The single-node tree is
/// `()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    /// The tree made of a single node.
    pub fn leaf() -> Self {
        Self::default()
    }

    pub fn from_children(children: Vec<PlaneTree>) -> Self {
        Self { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<PlaneTree> {
        self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::node_count).sum::<usize>()
    }

    pub fn edges(&self) -> usize {
        self.node_count() - 1
    }

    /// The tree with every child list reversed.
    pub fn mirror(&self) -> PlaneTree {
        PlaneTree {
            children: self.children.iter().rev().map(PlaneTree::mirror).collect(),
        }
    }

    /// Standard left-to-right depth-first encoding as an up/down word:
    /// `true` for descending an edge, `false` for climbing back.
    pub(crate) fn updown_word(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(2 * self.edges());
        fn walk(t: &PlaneTree, out: &mut Vec<bool>) {
            for c in &t.children {
                out.push(true);
                walk(c, out);
                out.push(false);
            }
        }
        walk(self, &mut out);
        out
    }

    /// Inverse of [`PlaneTree::updown_word`]. The word must be balanced and
    /// never dip below zero; callers validate that beforehand.
    pub(crate) fn from_updown_word(word: &[bool]) -> PlaneTree {
        let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
        for &down in word {
            if down {
                stack.push(Vec::new());
            } else {
                let children = stack.pop().expect("balanced word");
                stack
                    .last_mut()
                    .expect("balanced word")
                    .push(PlaneTree { children });
            }
        }
        debug_assert_eq!(stack.len(), 1);
        PlaneTree {
            children: stack.pop().unwrap_or_default(),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::with_capacity(2 * self.node_count());
        s.push('(');
        for down in self.updown_word() {
            s.push(if down { '(' } else { ')' });
        }
        s.push(')');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse {
                position: 1,
                reason: "empty input".into(),
            });
        }
        let mut stack: Vec<Vec<PlaneTree>> = Vec::new();
        let mut root = None;
        for (idx, &b) in bytes.iter().enumerate() {
            let position = idx + 1;
            if root.is_some() {
                return Err(Error::Parse {
                    position,
                    reason: "trailing input after the root closed".into(),
                });
            }
            match b {
                b'(' => stack.push(Vec::new()),
                b')' => {
                    let children = stack.pop().ok_or_else(|| Error::Parse {
                        position,
                        reason: "unmatched ')'".into(),
                    })?;
                    let node = PlaneTree { children };
                    match stack.last_mut() {
                        Some(parent) => parent.push(node),
                        None => root = Some(node),
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        position,
                        reason: format!("unexpected character {:?}", char::from(b)),
                    })
                }
            }
        }
        root.ok_or_else(|| Error::Parse {
            position: bytes.len() + 1,
            reason: format!("{} unclosed '('", stack.len()),
        })
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
