//! Coker's two Narayana/Catalan identities and their refinements by old and
//! young leaves, evaluated as exact polynomials on both sides and checked
//! against weighted enumeration of trees and colored Motzkin paths.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::counting::{binomial, catalan, count_old_young, narayana, Monomial, MultiPoly, RationalPoly, Var};
use crate::error::{Error, Result};
use crate::objects::{for_each_path, for_each_tree, PathKind, PlaneTree, Step};
use crate::statistics::preorder_vertices;

type Poly = MultiPoly<BigInt>;

fn int(v: impl Into<BigInt>) -> Poly {
    Poly::constant(v.into())
}

fn x() -> Poly {
    Poly::var(Var::X)
}

fn y() -> Poly {
    Poly::var(Var::Y)
}

fn z() -> Poly {
    Poly::var(Var::Z)
}

fn mono(x: u32, y: u32, z: u32) -> Monomial {
    [0, 0, x, y, z]
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::OutOfRange("identities are stated for n >= 1".into()))
    } else {
        Ok(())
    }
}

/// Both sides of
/// `sum_k N(n,k) 4^(n-k) = sum_k C_k C(n-1,2k) 4^k 5^(n-2k-1)`.
pub fn coker1_sides(n: u64) -> Result<(BigInt, BigInt)> {
    check_n(n)?;
    let four = BigInt::from(4);
    let five = BigInt::from(5);
    let mut lhs = BigInt::zero();
    for k in 1..=n {
        lhs += narayana(n, k)? * four.pow((n - k) as u32);
    }
    let mut rhs = BigInt::zero();
    for k in 0..=(n - 1) / 2 {
        rhs += catalan(k)
            * binomial(n as i64 - 1, 2 * k as i64)
            * four.pow(k as u32)
            * five.pow((n - 2 * k - 1) as u32);
    }
    Ok((lhs, rhs))
}

/// Both sides of
/// `sum_k N(n,k) x^(2k) (1+x)^(2n-2k) = x^2 sum_k C_(k+1) C(n-1,k) x^k (1+x)^k`.
pub fn coker2_sides(n: u64) -> Result<(Poly, Poly)> {
    check_n(n)?;
    let one_plus_x = &int(1) + &x();
    let mut lhs = Poly::zero();
    for k in 1..=n {
        let term = &x().pow(2 * k as u32) * &one_plus_x.pow((2 * n - 2 * k) as u32);
        lhs = lhs + term.scale(&narayana(n, k)?);
    }
    let mut sum = Poly::zero();
    for k in 0..n {
        let c = catalan(k + 1) * binomial(n as i64 - 1, k as i64);
        let term = &x().pow(k as u32) * &one_plus_x.pow(k as u32);
        sum = sum + term.scale(&c);
    }
    Ok((lhs, &x().pow(2) * &sum))
}

/// Which middle binomial the refined left-hand sides use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `C(n-i, j)`: every summand is a tree count.
    Corrected,
    /// `C(n-1, j)`, as typeset in the original statement; not integral in
    /// general.
    Printed,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Corrected => "corrected",
            Variant::Printed => "printed",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(Variant::Corrected),
            "printed" => Ok(Variant::Printed),
            other => Err(Error::OutOfRange(format!("unknown variant {other:?}"))),
        }
    }
}

/// Coefficient `(1/n) C(n,i) B C(n-i-j,i-1)` of the refined left-hand sides,
/// where `B` is the middle binomial picked by `variant`.
fn refined_coefficient(n: u64, i: u64, j: u64, variant: Variant) -> BigRational {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let middle = match variant {
        Variant::Corrected => binomial(n - i, j),
        Variant::Printed => binomial(n - 1, j),
    };
    let num = binomial(n, i) * middle * binomial(n - i - j, i - 1);
    BigRational::new(num, BigInt::from(n))
}

/// `(i, j)` pairs in the summation range of the refined identities.
fn refined_range(n: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=n).flat_map(move |i| {
        let top = (n + 1).checked_sub(2 * i);
        (0..=top.unwrap_or(0))
            .filter(move |_| top.is_some())
            .map(move |j| (i, j))
    })
}

/// Both sides of the refinement weighting old leaves by `x` and young leaves
/// by `y`:
/// `sum_(i,j) coeff(n,i,j) x^(i-1) y^j = sum_k C_k C(n-1,2k) x^k (1+y)^(n-2k-1)`.
pub fn cok1ref_sides(n: u64, variant: Variant) -> Result<(RationalPoly, RationalPoly)> {
    check_n(n)?;
    let mut lhs = RationalPoly::zero();
    for (i, j) in refined_range(n) {
        lhs.add_term(
            mono((i - 1) as u32, j as u32, 0),
            refined_coefficient(n, i, j, variant),
        );
    }
    let one_plus_y = &int(1) + &y();
    let mut rhs = Poly::zero();
    for k in 0..=(n - 1) / 2 {
        let c = catalan(k) * binomial(n as i64 - 1, 2 * k as i64);
        let term = &x().pow(k as u32) * &one_plus_y.pow((n - 2 * k - 1) as u32);
        rhs = rhs + term.scale(&c);
    }
    Ok((lhs, rhs.to_rational()))
}

/// Integer form of [`cok1ref_sides`] for the corrected variant.
pub fn cok1ref_corrected(n: u64) -> Result<(Poly, Poly)> {
    let (lhs, rhs) = cok1ref_sides(n, Variant::Corrected)?;
    Ok((integral(&lhs), integral(&rhs)))
}

/// Summands of the left-hand side that are not integers under `variant`.
pub fn non_integral_terms(n: u64, variant: Variant) -> Vec<(u64, u64, BigRational)> {
    refined_range(n)
        .map(|(i, j)| (i, j, refined_coefficient(n, i, j, variant)))
        .filter(|(_, _, c)| !c.is_integer())
        .collect()
}

fn integral(p: &RationalPoly) -> Poly {
    p.map_coefficients(|c| {
        assert!(c.is_integer(), "coefficient {c} is not an integer");
        c.to_integer()
    })
}

/// Both sides of the refinement with vertex weights `x, y, z`:
/// `sum_(i,j) N(n,i,j) x^(2(i-1)) y^j z^(n-2i-j+1)
///  = sum_k C_(k+1) C(n-1,k) x^k (y+z-2x)^(n-1-k)`.
pub fn cok2ref_sides(n: u64) -> Result<(Poly, Poly)> {
    check_n(n)?;
    let mut lhs = Poly::zero();
    for (i, j) in refined_range(n) {
        let z_exp = (n + 1 - 2 * i - j) as u32;
        lhs.add_term(
            mono(2 * (i - 1) as u32, j as u32, z_exp),
            count_old_young(n, i, j)?,
        );
    }
    let green = &(&y() + &z()) - &x().scale(&BigInt::from(2));
    let mut rhs = Poly::zero();
    for k in 0..n {
        let c = catalan(k + 1) * binomial(n as i64 - 1, k as i64);
        let term = &x().pow(k as u32) * &green.pow((n - 1 - k) as u32);
        rhs = rhs + term.scale(&c);
    }
    Ok((lhs, rhs))
}

/// Substitutes `x -> x(1+x)`, `y -> x^2`, `z -> (1+x)^2` simultaneously.
pub fn cok2_specialize(p: &Poly) -> Poly {
    let one_plus_x = &int(1) + &x();
    p.substitute(Var::X, &(&x() * &one_plus_x))
        .substitute(Var::Y, &x().pow(2))
        .substitute(Var::Z, &one_plus_x.pow(2))
}

/// Evaluates at `x = y = 4`.
pub fn cok1_specialize(p: &Poly) -> BigInt {
    let four = int(4);
    let v = p.substitute(Var::X, &four).substitute(Var::Y, &four);
    v.coefficient(&[0; 5])
}

/// Vertex weightings whose tree sums are the refined left-hand sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightScheme {
    /// Non-critical old leaf `x`, young leaf `y`, everything else 1.
    A,
    /// Non-critical old leaves and their parents `x`, young leaves `y`, the
    /// critical leaf and its parent 1, everything else `z`.
    B,
}

/// Enumeration limits for the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub tree_edges: usize,
    pub path_len: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            tree_edges: 12,
            path_len: 12,
        }
    }
}

/// Exponents of `(x, y, z)` in the weight of `t` under `scheme`.
pub fn tree_weight(t: &PlaneTree, scheme: WeightScheme) -> (u32, u32, u32) {
    let vertices = preorder_vertices(t);
    let critical = vertices.iter().rposition(|v| v.is_old_leaf());
    let (mut ex, mut ey, mut ez) = (0u32, 0u32, 0u32);
    match scheme {
        WeightScheme::A => {
            for (idx, v) in vertices.iter().enumerate() {
                if v.is_young_leaf() {
                    ey += 1;
                } else if v.is_old_leaf() && Some(idx) != critical {
                    ex += 1;
                }
            }
        }
        WeightScheme::B => {
            #[derive(Clone, Copy, PartialEq)]
            enum Role {
                Unset,
                X,
                Y,
                One,
            }
            let mut role = vec![Role::Unset; vertices.len()];
            let mut assign = |idx: usize, r: Role| {
                assert!(role[idx] == Role::Unset, "vertex {idx} of {t} weighted twice");
                role[idx] = r;
            };
            for (idx, v) in vertices.iter().enumerate() {
                if v.is_young_leaf() {
                    assign(idx, Role::Y);
                } else if v.is_old_leaf() {
                    let parent = v.parent.expect("leaf has a parent");
                    let r = if Some(idx) == critical { Role::One } else { Role::X };
                    assign(idx, r);
                    assign(parent, r);
                }
            }
            for r in role {
                match r {
                    Role::X => ex += 1,
                    Role::Y => ey += 1,
                    Role::One => {}
                    Role::Unset => ez += 1,
                }
            }
        }
    }
    (ex, ey, ez)
}

fn tally_to_poly(tally: HashMap<(u32, u32, u32), u64>) -> Poly {
    let mut out = Poly::zero();
    for ((ex, ey, ez), c) in tally {
        out.add_term(mono(ex, ey, ez), BigInt::from(c));
    }
    out
}

/// Sum of the `scheme` weights of all trees with `n` edges, by enumeration.
pub fn weighted_tree_sum(n: usize, scheme: WeightScheme, caps: Caps) -> Result<Poly> {
    if n == 0 {
        return Err(Error::OutOfRange("weighted sums need n >= 1".into()));
    }
    if n > caps.tree_edges {
        return Err(Error::CapExceeded {
            what: "tree edges",
            value: n,
            cap: caps.tree_edges,
        });
    }
    let mut tally = HashMap::new();
    for_each_tree(n, |t| {
        *tally.entry(tree_weight(&t, scheme)).or_insert(0u64) += 1;
    });
    Ok(tally_to_poly(tally))
}

/// Sum over every 2- or 3-colored Motzkin path of length `len` of the product
/// of its step weights. Missing letters weigh 1.
pub fn weighted_path_sum(len: usize, colors: u8, weights: &HashMap<Step, Poly>, caps: Caps) -> Result<Poly> {
    let kind = match colors {
        2 => PathKind::Colored2,
        3 => PathKind::Colored3,
        c => return Err(Error::OutOfRange(format!("{c} colors not supported"))),
    };
    if len > caps.path_len {
        return Err(Error::CapExceeded {
            what: "path length",
            value: len,
            cap: caps.path_len,
        });
    }
    let alphabet = kind.alphabet();
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_path(kind, len, |steps| {
        let mut counts = vec![0u32; alphabet.len()];
        for s in steps {
            let k = alphabet
                .iter()
                .position(|a| a == s)
                .expect("letter of the alphabet");
            counts[k] += 1;
        }
        *tally.entry(counts).or_insert(0) += 1;
    });
    let mut total = Poly::zero();
    for (counts, c) in tally {
        let mut term = int(c);
        for (letter, e) in alphabet.iter().zip(counts) {
            if let Some(w) = weights.get(letter) {
                term = &term * &w.pow(e);
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// Step weights on 2-Motzkin paths matching scheme A through `phi`.
pub fn scheme_a_step_weights() -> HashMap<Step, Poly> {
    HashMap::from([
        (Step::U, x()),
        (Step::D, int(1)),
        (Step::R, y()),
        (Step::B, int(1)),
    ])
}

/// Step weights on 2-Motzkin paths matching scheme B through `phi`.
pub fn scheme_b_step_weights() -> HashMap<Step, Poly> {
    HashMap::from([(Step::U, x()), (Step::D, x()), (Step::R, y()), (Step::B, z())])
}

/// 3-Motzkin step weights whose level-step total equals scheme B's.
pub fn three_color_step_weights() -> HashMap<Step, Poly> {
    let green = &(&y() + &z()) - &x().scale(&BigInt::from(2));
    HashMap::from([
        (Step::U, x()),
        (Step::D, x()),
        (Step::R, x()),
        (Step::B, x()),
        (Step::G, green),
    ])
}
