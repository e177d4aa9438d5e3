//! Plane trees, lattice paths and permutations with their text encodings.

mod enumerate;
mod path;
mod perm;
mod tree;

pub use enumerate::{
    avoiders, dyck_paths, enumerate, for_each_path, for_each_tree, paths, trees, Object, ObjectKind,
};
pub use path::{LatticePath, PathKind, Step};
pub use perm::{contains_pattern, Pattern, Permutation};
pub use tree::PlaneTree;
