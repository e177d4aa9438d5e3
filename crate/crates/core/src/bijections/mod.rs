//! Maps between plane trees, Dyck paths, 2-Motzkin paths and
//! pattern-avoiding permutations, each with its inverse.
//!
//! Every map is defined for trees with at least one edge; the single-node
//! tree and the empty path are rejected.

mod callan;
mod dyck;
mod krattenthaler;
mod psi;

use std::fmt;
use std::str::FromStr;

pub use callan::{callan_expand, callan_reduce, contract_udu, expand_udu};
pub use dyck::{dgr, dgr_inv, pre, pre_inv};
pub use krattenthaler::{krat, krat_inv, krat_uc, krat_uc_inv};
pub use psi::{psi, psi_by_labels, psi_inv};

use crate::error::{Error, Result};
use crate::objects::{LatticePath, PathKind, Permutation, PlaneTree, Step};

/// `pre`, then contraction of `UDU`, then Callan's reduction.
pub fn phi(t: &PlaneTree) -> Result<LatticePath> {
    callan_reduce(&contract_udu(&pre(t)?)?)
}

pub fn phi_inv(q: &LatticePath) -> Result<PlaneTree> {
    pre_inv(&expand_udu(&callan_expand(q)?)?)
}

/// `U·(U→UU, D→DD, R→UD, B→DU)·D`, a 2-Motzkin path of length `m` to a Dyck
/// path of semilength `m + 1`.
pub fn inflate(q: &LatticePath) -> Result<LatticePath> {
    q.expect_kind(PathKind::Colored2)?;
    let mut out = Vec::with_capacity(2 * q.len() + 2);
    out.push(Step::U);
    for &s in q.steps() {
        out.extend(match s {
            Step::U => [Step::U, Step::U],
            Step::D => [Step::D, Step::D],
            Step::R => [Step::U, Step::D],
            Step::B => [Step::D, Step::U],
            _ => unreachable!(),
        });
    }
    out.push(Step::D);
    Ok(LatticePath::new_unchecked(PathKind::Dyck, out))
}

pub fn deflate(p: &LatticePath) -> Result<LatticePath> {
    p.expect_kind(PathKind::Dyck)?;
    if p.is_empty() {
        return Err(Error::EmptyPath);
    }
    let inner = &p.steps()[1..p.len() - 1];
    let out = inner
        .chunks(2)
        .map(|pair| match pair {
            [Step::U, Step::U] => Step::U,
            [Step::D, Step::D] => Step::D,
            [Step::U, Step::D] => Step::R,
            [Step::D, Step::U] => Step::B,
            _ => unreachable!(),
        })
        .collect();
    Ok(LatticePath::new_unchecked(PathKind::Colored2, out))
}

/// Into 321-avoiders through `pre`.
pub fn alpha(t: &PlaneTree) -> Result<Permutation> {
    krat_uc_inv(&pre(t)?)
}

pub fn alpha_inv(p: &Permutation) -> Result<PlaneTree> {
    pre_inv(&krat_uc(p)?)
}

/// Into 132-avoiders through `pre`.
pub fn beta(t: &PlaneTree) -> Result<Permutation> {
    krat_inv(&pre(t)?)
}

pub fn beta_inv(p: &Permutation) -> Result<PlaneTree> {
    pre_inv(&krat(p)?)
}

/// Into 321-avoiders through `dgr`.
pub fn gamma(t: &PlaneTree) -> Result<Permutation> {
    krat_uc_inv(&dgr(t)?)
}

pub fn gamma_inv(p: &Permutation) -> Result<PlaneTree> {
    dgr_inv(&krat_uc(p)?)
}

/// Into 132-avoiders through `dgr`.
pub fn delta(t: &PlaneTree) -> Result<Permutation> {
    krat_inv(&dgr(t)?)
}

pub fn delta_inv(p: &Permutation) -> Result<PlaneTree> {
    dgr_inv(&krat(p)?)
}

/// The text format on either side of a named map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Tree,
    Path(PathKind),
    Perm,
}

impl Domain {
    fn parse(self, line: &str) -> Result<Value> {
        Ok(match self {
            Domain::Tree => Value::Tree(PlaneTree::parse(line)?),
            Domain::Path(kind) => Value::Path(LatticePath::parse(line, kind)?),
            Domain::Perm => Value::Perm(Permutation::parse(line)?),
        })
    }
}

enum Value {
    Tree(PlaneTree),
    Path(LatticePath),
    Perm(Permutation),
}

impl Value {
    fn tree(&self) -> &PlaneTree {
        match self {
            Value::Tree(t) => t,
            _ => unreachable!(),
        }
    }

    fn path(&self) -> &LatticePath {
        match self {
            Value::Path(p) => p,
            _ => unreachable!(),
        }
    }

    fn perm(&self) -> &Permutation {
        match self {
            Value::Perm(p) => p,
            _ => unreachable!(),
        }
    }
}

/// Every map reachable by name from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Pre,
    Dgr,
    Contract,
    Callan,
    Phi,
    Psi,
    Inflate,
    KratUc,
    Krat,
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Bijection {
    pub const ALL: [Bijection; 13] = [
        Bijection::Pre,
        Bijection::Dgr,
        Bijection::Contract,
        Bijection::Callan,
        Bijection::Phi,
        Bijection::Psi,
        Bijection::Inflate,
        Bijection::KratUc,
        Bijection::Krat,
        Bijection::Alpha,
        Bijection::Beta,
        Bijection::Gamma,
        Bijection::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Pre => "pre",
            Bijection::Dgr => "dgr",
            Bijection::Contract => "contract",
            Bijection::Callan => "callan",
            Bijection::Phi => "phi",
            Bijection::Psi => "psi",
            Bijection::Inflate => "inflate",
            Bijection::KratUc => "krat-uc",
            Bijection::Krat => "krat",
            Bijection::Alpha => "alpha",
            Bijection::Beta => "beta",
            Bijection::Gamma => "gamma",
            Bijection::Delta => "delta",
        }
    }

    /// (domain, codomain) of the forward map.
    pub fn signature(self) -> (Domain, Domain) {
        use Domain::*;
        use PathKind::*;
        match self {
            Bijection::Pre | Bijection::Dgr => (Tree, Path(Dyck)),
            Bijection::Contract => (Path(Dyck), Path(Contracted)),
            Bijection::Callan => (Path(Contracted), Path(Colored2)),
            Bijection::Phi | Bijection::Psi => (Tree, Path(Colored2)),
            Bijection::Inflate => (Path(Colored2), Path(Dyck)),
            Bijection::KratUc | Bijection::Krat => (Perm, Path(Dyck)),
            Bijection::Alpha | Bijection::Beta | Bijection::Gamma | Bijection::Delta => (Tree, Perm),
        }
    }

    /// Parses `line` in the map's domain (codomain when `inverse`) and
    /// renders the image.
    pub fn apply_text(self, line: &str, inverse: bool) -> Result<String> {
        let (from, to) = self.signature();
        let input = if inverse {
            to.parse(line)?
        } else {
            from.parse(line)?
        };
        let out = match (self, inverse) {
            (Bijection::Pre, false) => pre(input.tree())?.render(),
            (Bijection::Pre, true) => pre_inv(input.path())?.render(),
            (Bijection::Dgr, false) => dgr(input.tree())?.render(),
            (Bijection::Dgr, true) => dgr_inv(input.path())?.render(),
            (Bijection::Contract, false) => contract_udu(input.path())?.render(),
            (Bijection::Contract, true) => expand_udu(input.path())?.render(),
            (Bijection::Callan, false) => callan_reduce(input.path())?.render(),
            (Bijection::Callan, true) => callan_expand(input.path())?.render(),
            (Bijection::Phi, false) => phi(input.tree())?.render(),
            (Bijection::Phi, true) => phi_inv(input.path())?.render(),
            (Bijection::Psi, false) => psi(input.tree())?.render(),
            (Bijection::Psi, true) => psi_inv(input.path())?.render(),
            (Bijection::Inflate, false) => inflate(input.path())?.render(),
            (Bijection::Inflate, true) => deflate(input.path())?.render(),
            (Bijection::KratUc, false) => krat_uc(input.perm())?.render(),
            (Bijection::KratUc, true) => krat_uc_inv(input.path())?.render(),
            (Bijection::Krat, false) => krat(input.perm())?.render(),
            (Bijection::Krat, true) => krat_inv(input.path())?.render(),
            (Bijection::Alpha, false) => alpha(input.tree())?.render(),
            (Bijection::Alpha, true) => alpha_inv(input.perm())?.render(),
            (Bijection::Beta, false) => beta(input.tree())?.render(),
            (Bijection::Beta, true) => beta_inv(input.perm())?.render(),
            (Bijection::Gamma, false) => gamma(input.tree())?.render(),
            (Bijection::Gamma, true) => gamma_inv(input.perm())?.render(),
            (Bijection::Delta, false) => delta(input.tree())?.render(),
            (Bijection::Delta, true) => delta_inv(input.perm())?.render(),
        };
        Ok(out)
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown bijection {s:?}")))
    }
}
