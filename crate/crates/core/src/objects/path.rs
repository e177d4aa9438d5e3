use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    /// Up, +1.
    U,
    /// Down, -1.
    D,
    /// Uncolored level step of a Motzkin path.
    H,
    /// Red level step.
    R,
    /// Blue level step.
    B,
    /// Green level step.
    G,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            _ => 0,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
            Step::R => 'R',
            Step::B => 'B',
            Step::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        Some(match c {
            'U' => Step::U,
            'D' => Step::D,
            'H' => Step::H,
            'R' => Step::R,
            'B' => Step::B,
            'G' => Step::G,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathKind {
    Dyck,
    Motzkin,
    /// U/D/R paths produced by replacing every peak followed by an up step
    /// with a red step.
    Contracted,
    /// Motzkin paths with level steps colored R or B.
    Colored2,
    /// Motzkin paths with level steps colored R, B or G.
    Colored3,
}

impl PathKind {
    /// The alphabet in ASCII order, which is the enumeration order.
    pub fn alphabet(self) -> &'static [Step] {
        match self {
            PathKind::Dyck => &[Step::D, Step::U],
            PathKind::Motzkin => &[Step::D, Step::H, Step::U],
            PathKind::Contracted => &[Step::D, Step::R, Step::U],
            PathKind::Colored2 => &[Step::B, Step::D, Step::R, Step::U],
            PathKind::Colored3 => &[Step::B, Step::D, Step::G, Step::R, Step::U],
        }
    }

    pub fn allows(self, step: Step) -> bool {
        self.alphabet().contains(&step)
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Dyck => "Dyck",
            PathKind::Motzkin => "Motzkin",
            PathKind::Contracted => "contracted",
            PathKind::Colored2 => "2-Motzkin",
            PathKind::Colored3 => "3-Motzkin",
        })
    }
}

/// A lattice path from height 0 back to height 0 that never goes below 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    kind: PathKind,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(kind: PathKind, steps: Vec<Step>) -> Result<Self> {
        validate(kind, &steps)?;
        Ok(Self { kind, steps })
    }

    /// Skips validation. Used by the enumerators and maps, whose outputs are
    /// valid by construction; debug builds still check.
    pub(crate) fn new_unchecked(kind: PathKind, steps: Vec<Step>) -> Self {
        debug_assert!(
            validate(kind, &steps).is_ok(),
            "invalid {kind} path {}",
            steps.iter().map(|s| s.letter()).collect::<String>()
        );
        Self { kind, steps }
    }

    pub fn empty(kind: PathKind) -> Self {
        Self {
            kind,
            steps: Vec::new(),
        }
    }

    pub fn parse(text: &str, kind: PathKind) -> Result<Self> {
        let mut steps = Vec::with_capacity(text.len());
        for (idx, c) in text.chars().enumerate() {
            let step = Step::from_letter(c).filter(|s| kind.allows(*s));
            match step {
                Some(s) => steps.push(s),
                None => {
                    return Err(Error::BadLetter {
                        position: idx + 1,
                        letter: c,
                        kind,
                    })
                }
            }
        }
        Self::new(kind, steps)
    }

    pub fn render(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Heights after each step; `heights()[i]` is the height once step `i`
    /// has been taken.
    pub fn heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect()
    }

    pub(crate) fn expect_kind(&self, expected: PathKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::WrongKind {
                expected,
                actual: self.kind,
            })
        }
    }
}

fn validate(kind: PathKind, steps: &[Step]) -> Result<()> {
    let mut height = 0i64;
    for (idx, &s) in steps.iter().enumerate() {
        if !kind.allows(s) {
            return Err(Error::BadLetter {
                position: idx + 1,
                letter: s.letter(),
                kind,
            });
        }
        height += s.delta();
        if height < 0 {
            return Err(Error::NegativeHeight { position: idx + 1 });
        }
    }
    if height != 0 {
        return Err(Error::NonZeroEnd { height });
    }
    if kind == PathKind::Contracted {
        validate_contracted_factors(steps)?;
    }
    Ok(())
}

/// Images of the contraction have every peak followed by a down step (or
/// ending the path), and every red step followed by an up or red step.
fn validate_contracted_factors(steps: &[Step]) -> Result<()> {
    use Step::*;
    for (idx, w) in steps.windows(3).enumerate() {
        match w {
            [U, D, U] => {
                return Err(Error::ForbiddenFactor {
                    factor: "UDU",
                    position: idx + 1,
                })
            }
            [U, D, R] => {
                return Err(Error::ForbiddenFactor {
                    factor: "UDR",
                    position: idx + 1,
                })
            }
            _ => {}
        }
    }
    for (idx, w) in steps.windows(2).enumerate() {
        if w == [R, D] {
            return Err(Error::ForbiddenFactor {
                factor: "RD",
                position: idx + 1,
            });
        }
    }
    if steps.last() == Some(&R) {
        return Err(Error::TrailingRed);
    }
    Ok(())
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
