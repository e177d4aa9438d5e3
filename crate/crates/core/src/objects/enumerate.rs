//! Exhaustive, ordered enumeration of every object family.
//!
//! Trees and paths come out in lexicographic order of their text encoding.
//! Permutations come out in lexicographic order of their one-line word
//! compared as integer sequences.

use std::fmt;
use std::str::FromStr;

use super::path::{LatticePath, PathKind, Step};
use super::perm::{Pattern, Permutation};
use super::tree::PlaneTree;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    /// Plane trees with `n` edges.
    Tree,
    /// Dyck paths of semilength `n`.
    Dyck,
    /// Motzkin paths of length `n`.
    Motzkin,
    /// 2-Motzkin paths of length `n`.
    Colored2,
    /// 3-Motzkin paths of length `n`.
    Colored3,
    Av321,
    Av132,
}

impl ObjectKind {
    pub const ALL: [ObjectKind; 7] = [
        ObjectKind::Tree,
        ObjectKind::Dyck,
        ObjectKind::Motzkin,
        ObjectKind::Colored2,
        ObjectKind::Colored3,
        ObjectKind::Av321,
        ObjectKind::Av132,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Tree => "tree",
            ObjectKind::Dyck => "dyck",
            ObjectKind::Motzkin => "motzkin",
            ObjectKind::Colored2 => "2motzkin",
            ObjectKind::Colored3 => "3motzkin",
            ObjectKind::Av321 => "av321",
            ObjectKind::Av132 => "av132",
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "tree" => ObjectKind::Tree,
            "dyck" => ObjectKind::Dyck,
            "motzkin" => ObjectKind::Motzkin,
            "2motzkin" | "colored2" => ObjectKind::Colored2,
            "3motzkin" | "colored3" => ObjectKind::Colored3,
            "av321" => ObjectKind::Av321,
            "av132" => ObjectKind::Av132,
            other => return Err(Error::OutOfRange(format!("unknown object kind {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    Tree(PlaneTree),
    Path(LatticePath),
    Perm(Permutation),
}

impl Object {
    pub fn render(&self) -> String {
        match self {
            Object::Tree(t) => t.render(),
            Object::Path(p) => p.render(),
            Object::Perm(p) => p.render(),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Every object of the given kind and size, in the documented order.
pub fn enumerate(kind: ObjectKind, n: usize) -> impl Iterator<Item = Object> {
    let items: Vec<Object> = match kind {
        ObjectKind::Tree => trees(n).into_iter().map(Object::Tree).collect(),
        ObjectKind::Dyck => dyck_paths(n).into_iter().map(Object::Path).collect(),
        ObjectKind::Motzkin => paths(PathKind::Motzkin, n)
            .into_iter()
            .map(Object::Path)
            .collect(),
        ObjectKind::Colored2 => paths(PathKind::Colored2, n)
            .into_iter()
            .map(Object::Path)
            .collect(),
        ObjectKind::Colored3 => paths(PathKind::Colored3, n)
            .into_iter()
            .map(Object::Path)
            .collect(),
        ObjectKind::Av321 => avoiders(n, Pattern::P321).into_iter().map(Object::Perm).collect(),
        ObjectKind::Av132 => avoiders(n, Pattern::P132).into_iter().map(Object::Perm).collect(),
    };
    items.into_iter()
}

/// Calls `f` on every plane tree with `n` edges, in encoding order.
pub fn for_each_tree(n: usize, mut f: impl FnMut(PlaneTree)) {
    // '(' sorts before ')', so descending first gives lexicographic order.
    fn go(word: &mut Vec<bool>, downs: usize, ups: usize, n: usize, f: &mut impl FnMut(PlaneTree)) {
        if word.len() == 2 * n {
            f(PlaneTree::from_updown_word(word));
            return;
        }
        if downs < n {
            word.push(true);
            go(word, downs + 1, ups, n, f);
            word.pop();
        }
        if ups < downs {
            word.push(false);
            go(word, downs, ups + 1, n, f);
            word.pop();
        }
    }
    go(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut f);
}

pub fn trees(n: usize) -> Vec<PlaneTree> {
    let mut out = Vec::new();
    for_each_tree(n, |t| out.push(t));
    out
}

/// Calls `f` on every path of `kind` with `len` steps, in lexicographic order.
pub fn for_each_path(kind: PathKind, len: usize, mut f: impl FnMut(&[Step])) {
    fn go(alphabet: &[Step], word: &mut Vec<Step>, height: i64, len: usize, f: &mut impl FnMut(&[Step])) {
        let remaining = (len - word.len()) as i64;
        if remaining == 0 {
            f(word);
            return;
        }
        for &s in alphabet {
            let h = height + s.delta();
            if h < 0 || h > remaining - 1 {
                continue;
            }
            word.push(s);
            go(alphabet, word, h, len, f);
            word.pop();
        }
    }
    go(kind.alphabet(), &mut Vec::with_capacity(len), 0, len, &mut f);
}

pub fn paths(kind: PathKind, len: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    for_each_path(kind, len, |w| {
        out.push(LatticePath::new_unchecked(kind, w.to_vec()))
    });
    out
}

pub fn dyck_paths(semilength: usize) -> Vec<LatticePath> {
    paths(PathKind::Dyck, 2 * semilength)
}

/// Does appending `v` to `prefix` create an occurrence ending at `v`?
fn completes_pattern(prefix: &[usize], v: usize, pattern: Pattern) -> bool {
    match pattern {
        Pattern::P321 => {
            let mut max_so_far = 0;
            prefix.iter().any(|&b| {
                let hit = max_so_far > b && b > v;
                max_so_far = max_so_far.max(b);
                hit
            })
        }
        Pattern::P132 => {
            let mut min_so_far = usize::MAX;
            prefix.iter().any(|&b| {
                let hit = min_so_far < v && v < b;
                min_so_far = min_so_far.min(b);
                hit
            })
        }
    }
}

/// Permutations of `1..=n` avoiding `pattern`, built by prefix extension with
/// pruning.
pub fn avoiders(n: usize, pattern: Pattern) -> Vec<Permutation> {
    fn go(word: &mut Vec<usize>, used: &mut [bool], n: usize, pattern: Pattern, out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation::new_unchecked(word.clone()));
            return;
        }
        for v in 1..=n {
            if used[v] || completes_pattern(word, v, pattern) {
                continue;
            }
            used[v] = true;
            word.push(v);
            go(word, used, n, pattern, out);
            word.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        n,
        pattern,
        &mut out,
    );
    out
}
