//! From Dyck paths to 2-Motzkin paths in two stages: contract every peak
//! followed by an up step into a red step, then apply Callan's marking to the
//! remaining `UDU`-free skeleton with red steps carried along untouched.

use crate::error::{Error, Result};
use crate::objects::{LatticePath, PathKind, Step};

/// Replaces every `UDU`, scanning left to right, by `RU`; the trailing `U` of
/// one occurrence may start the next.
pub fn contract_udu(p: &LatticePath) -> Result<LatticePath> {
    p.expect_kind(PathKind::Dyck)?;
    let s = p.steps();
    let mut out = Vec::with_capacity(s.len());
    let mut i = 0;
    while i < s.len() {
        if s[i] == Step::U && s.get(i + 1) == Some(&Step::D) && s.get(i + 2) == Some(&Step::U) {
            out.push(Step::R);
            i += 2;
        } else {
            out.push(s[i]);
            i += 1;
        }
    }
    Ok(LatticePath::new_unchecked(PathKind::Contracted, out))
}

/// Rewrites every `R` as `UD`.
pub fn expand_udu(p: &LatticePath) -> Result<LatticePath> {
    p.expect_kind(PathKind::Contracted)?;
    let mut out = Vec::with_capacity(2 * p.len());
    for &s in p.steps() {
        match s {
            Step::R => out.extend([Step::U, Step::D]),
            other => out.push(other),
        }
    }
    Ok(LatticePath::new_unchecked(PathKind::Dyck, out))
}

/// Marks every `U` followed by `D`, every `D` followed by `D`, and the final
/// `D`; turns each unmarked `U` whose matching `D` is marked into `B`; then
/// deletes the marked steps. Red steps pass through.
pub fn callan_reduce(p: &LatticePath) -> Result<LatticePath> {
    p.expect_kind(PathKind::Contracted)?;
    let s = p.steps();
    if s.is_empty() {
        return Err(Error::EmptyPath);
    }
    let len = s.len();
    let marked: Vec<bool> = (0..len)
        .map(|i| match s[i] {
            Step::U => s.get(i + 1) == Some(&Step::D),
            Step::D => i + 1 == len || s[i + 1] == Step::D,
            _ => false,
        })
        .collect();

    // Matching D of each U, with R steps transparent.
    let mut matching = vec![usize::MAX; len];
    let mut open = Vec::new();
    for (i, &step) in s.iter().enumerate() {
        match step {
            Step::U => open.push(i),
            Step::D => {
                let u = open.pop().expect("valid Dyck skeleton");
                matching[u] = i;
            }
            _ => {}
        }
    }

    let out = (0..len)
        .filter(|&i| !marked[i])
        .map(|i| match s[i] {
            Step::U if marked[matching[i]] => Step::B,
            other => other,
        })
        .collect();
    Ok(LatticePath::new_unchecked(PathKind::Colored2, out))
}

/// Inverse of [`callan_reduce`].
///
/// The `D` steps of the 2-Motzkin path are exactly the surviving valley
/// steps, so they cut it into one segment per ascending run of the skeleton:
/// a segment with `a - 1` up/blue letters comes from a run `U^a D^b`. The
/// lengths `b` follow from the heights of the valleys, which are read off
/// the up step each surviving `D` is matched with. A red step sits in the
/// skeleton just before the up step that follows it in its segment.
pub fn callan_expand(q: &LatticePath) -> Result<LatticePath> {
    q.expect_kind(PathKind::Colored2)?;

    struct Segment {
        /// Letters of the segment: `true` for an up/blue letter, `false` for red.
        letters: Vec<bool>,
        ups: usize,
    }
    let mut segments = vec![Segment {
        letters: Vec::new(),
        ups: 0,
    }];
    // For segment i >= 1 (closed by the i-th D): (segment, offset) of its match.
    let mut closing_match: Vec<(usize, usize)> = Vec::new();
    let mut open: Vec<(usize, usize)> = Vec::new();
    for &step in q.steps() {
        let seg_idx = segments.len() - 1;
        let seg = segments.last_mut().expect("nonempty");
        match step {
            Step::U | Step::B => {
                if step == Step::U {
                    open.push((seg_idx, seg.ups));
                }
                seg.letters.push(true);
                seg.ups += 1;
            }
            Step::R => seg.letters.push(false),
            Step::D => {
                closing_match.push(open.pop().expect("valid 2-Motzkin path"));
                segments.push(Segment {
                    letters: Vec::new(),
                    ups: 0,
                });
            }
            _ => unreachable!("not a 2-Motzkin letter"),
        }
    }

    // valley[i] = height after the descent of run i; valley[0] = start.
    let runs = segments.len();
    let mut valley = vec![0i64; runs + 1];
    for (i, &(m, r)) in closing_match.iter().enumerate() {
        valley[i + 1] = valley[m] + r as i64;
    }

    let mut out = Vec::new();
    for (i, seg) in segments.iter().enumerate() {
        for &up in &seg.letters {
            out.push(if up { Step::U } else { Step::R });
        }
        out.push(Step::U);
        let ascent = seg.ups as i64 + 1;
        let bottom = if i + 1 == runs { 0 } else { valley[i + 1] };
        let descent = valley[i] + ascent - bottom;
        debug_assert!(descent >= 1 && (i + 1 == runs || descent >= 2));
        out.extend(std::iter::repeat_n(Step::D, descent as usize));
    }
    Ok(LatticePath::new_unchecked(PathKind::Contracted, out))
}
