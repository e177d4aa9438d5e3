//! Sparse multivariate polynomials over exact coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Var {
    T,
    S,
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::T, Var::S, Var::X, Var::Y, Var::Z];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['t', 's', 'x', 'y', 'z'][self.index()]
    }
}

/// Exponents of `t, s, x, y, z`, in that order.
pub type Monomial = [u32; 5];

pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Display
{
}

impl<C> Coefficient for C where
    C: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = C>
        + Add<Output = C>
        + Sub<Output = C>
        + Mul<Output = C>
        + fmt::Display
{
}

/// Canonical form: no stored zero coefficients, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C = BigInt> {
    terms: BTreeMap<Monomial, C>,
}

pub type RationalPoly = MultiPoly<BigRational>;

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, [0; 5])
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; 5];
        m[v.index()] = 1;
        Self::monomial(C::one(), m)
    }

    pub fn monomial(c: C, exponents: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &Monomial) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exponents: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Occupied(mut slot) => {
                let sum = std::mem::replace(slot.get_mut(), C::zero()) + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m[v.index()]).max().unwrap_or(0)
    }

    /// Replaces `v` everywhere by `replacement`.
    pub fn substitute(&self, v: Var, replacement: &MultiPoly<C>) -> Self {
        let mut powers = vec![Self::one()];
        for _ in 0..self.degree_in(v) {
            let next = powers.last().expect("nonempty") * replacement;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = std::mem::take(&mut rest[v.index()]) as usize;
            let term = &Self::monomial(c.clone(), rest) * &powers[e];
            out = out + term;
        }
        out
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl MultiPoly<BigInt> {
    pub fn to_rational(&self) -> RationalPoly {
        self.map_coefficients(|c| BigRational::from_integer(c.clone()))
    }

    /// Floating-point evaluation at `(t, s, x, y, z)`.
    pub fn eval_f64(&self, point: [f64; 5]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = m.iter().zip(point).map(|(&e, v)| v.powi(e as i32)).product();
                c.to_f64().unwrap_or(f64::NAN) * mono
            })
            .sum()
    }
}

impl<C: Coefficient> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn add(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn add(mut self, rhs: Self) -> MultiPoly<C> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn sub(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn sub(self, rhs: Self) -> MultiPoly<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = *ma;
                for (e, f) in m.iter_mut().zip(mb) {
                    *e += f;
                }
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn mul(self, rhs: Self) -> MultiPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    /// Terms in increasing exponent order over `(t, s, x, y, z)`, e.g.
    /// `t + 2*t*s + t^2`. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            for v in Var::ALL {
                match m[v.index()] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{e}", v.name())),
                }
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let unit = magnitude == "1";
            if factors.is_empty() {
                f.write_str(&magnitude)?;
            } else if unit {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
