//! Dyck-path encodings of 321- and 132-avoiding permutations by run lengths.

use crate::error::{Error, Result};
use crate::objects::{contains_pattern, LatticePath, PathKind, Pattern, Permutation, Step};

fn check_avoider(p: &Permutation, pattern: Pattern) -> Result<()> {
    if p.is_empty() {
        return Err(Error::OutOfRange("empty permutation has no path image".into()));
    }
    if p.contains_pattern(pattern) {
        return Err(Error::ContainsPattern(pattern.name()));
    }
    Ok(())
}

/// Builds `U^a_1 D^b_1 U^a_2 … D^b_k` from the two run-length lists.
fn from_runs(ups: &[usize], downs: &[usize]) -> LatticePath {
    let mut steps = Vec::new();
    for (&a, &b) in ups.iter().zip(downs) {
        steps.extend(std::iter::repeat_n(Step::U, a));
        steps.extend(std::iter::repeat_n(Step::D, b));
    }
    LatticePath::new_unchecked(PathKind::Dyck, steps)
}

/// Splits a nonempty Dyck path into maximal `U^a D^b` blocks.
fn runs(p: &LatticePath) -> Result<(Vec<usize>, Vec<usize>)> {
    p.expect_kind(PathKind::Dyck)?;
    if p.is_empty() {
        return Err(Error::EmptyPath);
    }
    let mut ups = Vec::new();
    let mut downs = Vec::new();
    for (i, &s) in p.steps().iter().enumerate() {
        let starts_run = i == 0 || p.steps()[i - 1] != s;
        match (s, starts_run) {
            (Step::U, true) => ups.push(1),
            (Step::U, false) => *ups.last_mut().expect("run open") += 1,
            (Step::D, true) => downs.push(1),
            (Step::D, false) => *downs.last_mut().expect("run open") += 1,
            _ => unreachable!(),
        }
    }
    Ok((ups, downs))
}

/// With weak excedances `π(i_1), …, π(i_k)`: `π(i_1)` up steps, then for each
/// later one `i_j - i_{j-1}` down steps and `π(i_j) - π(i_{j-1})` up steps,
/// closing with `n + 1 - i_k` down steps.
pub fn krat_uc(p: &Permutation) -> Result<LatticePath> {
    check_avoider(p, Pattern::P321)?;
    let n = p.len();
    let marks: Vec<(usize, usize)> = (1..=n).filter(|&i| p.at(i) >= i).map(|i| (i, p.at(i))).collect();
    let mut ups = vec![marks[0].1];
    let mut downs = Vec::new();
    for w in marks.windows(2) {
        downs.push(w[1].0 - w[0].0);
        ups.push(w[1].1 - w[0].1);
    }
    downs.push(n + 1 - marks.last().expect("position 1 is a weak excedance").0);
    Ok(from_runs(&ups, &downs))
}

/// Rebuilds the weak excedances from the runs and fills the other positions
/// with the unused values in increasing order.
pub fn krat_uc_inv(path: &LatticePath) -> Result<Permutation> {
    let (ups, downs) = runs(path)?;
    let n = path.len() / 2;
    let mut word = vec![0usize; n];
    let mut used = vec![false; n + 1];
    let (mut pos, mut val) = (1usize, 0usize);
    for (j, &a) in ups.iter().enumerate() {
        if j > 0 {
            pos += downs[j - 1];
        }
        val += a;
        word[pos - 1] = val;
        used[val] = true;
    }
    let mut free = (1..=n).filter(|&v| !used[v]);
    for slot in word.iter_mut().filter(|v| **v == 0) {
        *slot = free.next().expect("value count matches position count");
    }
    assert!(
        !contains_pattern(&word, Pattern::P321),
        "filled word {word:?} contains 321"
    );
    Ok(Permutation::new_unchecked(word))
}

/// With left-to-right minima `π(i_1), …, π(i_k)`: `n + 1 - π(i_1)` up steps,
/// then `i_j - i_{j-1}` down steps and `π(i_{j-1}) - π(i_j)` up steps for each
/// later minimum, closing with `n + 1 - i_k` down steps.
pub fn krat(p: &Permutation) -> Result<LatticePath> {
    check_avoider(p, Pattern::P132)?;
    let n = p.len();
    let mut minima: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        if minima.last().is_none_or(|&(_, m)| p.at(i) < m) {
            minima.push((i, p.at(i)));
        }
    }
    let mut ups = vec![n + 1 - minima[0].1];
    let mut downs = Vec::new();
    for w in minima.windows(2) {
        downs.push(w[1].0 - w[0].0);
        ups.push(w[0].1 - w[1].1);
    }
    downs.push(n + 1 - minima.last().expect("nonempty").0);
    Ok(from_runs(&ups, &downs))
}

/// Rebuilds the left-to-right minima from the runs; every other position
/// takes the smallest unused value above the current minimum, the only
/// choice that avoids 132.
pub fn krat_inv(path: &LatticePath) -> Result<Permutation> {
    let (ups, downs) = runs(path)?;
    let n = path.len() / 2;
    let mut minimum_at = vec![None; n + 1];
    let (mut pos, mut val) = (1usize, n + 1);
    for (j, &a) in ups.iter().enumerate() {
        if j > 0 {
            pos += downs[j - 1];
        }
        val -= a;
        minimum_at[pos] = Some(val);
    }
    let mut used = vec![false; n + 2];
    for v in minimum_at.iter().flatten() {
        used[*v] = true;
    }
    let mut word = Vec::with_capacity(n);
    let mut current_min = n + 1;
    for slot in minimum_at.iter().skip(1) {
        let v = match *slot {
            Some(m) => {
                current_min = m;
                m
            }
            None => {
                let v = (current_min + 1..=n)
                    .find(|&v| !used[v])
                    .expect("a larger value is still free");
                used[v] = true;
                v
            }
        };
        word.push(v);
    }
    assert!(
        !contains_pattern(&word, Pattern::P132),
        "filled word {word:?} contains 132"
    );
    Ok(Permutation::new_unchecked(word))
}
