//! Verification suites run by `plane-trees verify`, each producing one line
//! per case.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::bijections::{
    alpha, alpha_inv, beta, beta_inv, delta, delta_inv, dgr, dgr_inv, gamma, gamma_inv, inflate, phi,
    phi_inv, pre, pre_inv, psi, psi_by_labels, psi_inv,
};
use crate::counting::{
    catalan, count_old_young, count_young, gf_closed_eval, gf_series, gf_series_eval, old_young_table,
    MultiPoly, Var,
};
use crate::error::{Error, Result};
use crate::identities::{
    cok1_specialize, cok1ref_corrected, cok1ref_sides, cok2_specialize, cok2ref_sides, coker1_sides,
    coker2_sides, non_integral_terms, scheme_a_step_weights, scheme_b_step_weights, three_color_step_weights,
    weighted_path_sum, weighted_tree_sum, Caps, Variant, WeightScheme,
};
use crate::matches::{enumerate_match_sets, merge};
use crate::objects::{dyck_paths, for_each_tree, Pattern, Permutation, PlaneTree, Step};
use crate::statistics::{factor_count, peaks_at_even_height, perm_stats, tree_stats, TreeStats};

type Poly = MultiPoly<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseLine {
    pub suite: &'static str,
    pub n: u64,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CaseLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={} {}", self.status, self.suite, self.n, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub suite: Suite,
    pub lines: Vec<CaseLine>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// Case lines and the summary line; the wall time is kept out so the
    /// text is reproducible.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "summary suite={} pass={} fail={} info={}\n",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Info)
        ));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Roundtrip,
    Stats,
    Equidist,
    Gf,
    Cok1,
    Cok2,
    Cok1ref,
    Cok2ref,
    Matches,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 9] = [
        Suite::Roundtrip,
        Suite::Stats,
        Suite::Equidist,
        Suite::Gf,
        Suite::Cok1,
        Suite::Cok2,
        Suite::Cok1ref,
        Suite::Cok2ref,
        Suite::Matches,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Stats => "stats",
            Suite::Equidist => "equidist",
            Suite::Gf => "gf",
            Suite::Cok1 => "cok1",
            Suite::Cok2 => "cok2",
            Suite::Cok1ref => "cok1ref",
            Suite::Cok2ref => "cok2ref",
            Suite::Matches => "matches",
            Suite::All => "all",
        }
    }

    /// Largest `--n-max` the suite accepts.
    pub fn cap(self) -> u64 {
        match self {
            Suite::Roundtrip | Suite::Stats | Suite::Equidist => 12,
            Suite::Gf => 40,
            Suite::Cok1 | Suite::Cok2 | Suite::Cok1ref | Suite::Cok2ref => 40,
            Suite::Matches => 5,
            Suite::All => 40,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s:?}")))
    }
}

/// Sizes above which the enumeration oracles are skipped inside a suite.
const WEIGHTED_ORACLE_MAX: u64 = 10;
const COK1_SPECIALIZE_MAX: u64 = 15;
const COK2_SPECIALIZE_MAX: u64 = 12;
const ENUMERATION_MAX: u64 = 12;
const PSI_LABELS_MAX: u64 = 10;
const STATS_PERM_MAX: u64 = 9;
/// Evaluation points for the closed form of the generating function.
pub const GF_POINTS: [(f64, f64); 4] = [(1.0, 1.0), (2.0, 1.0), (1.0, 2.0), (2.0, 3.0)];
pub const GF_RADII: [f64; 3] = [0.02, 0.05, 0.1];
pub const GF_TOLERANCE: f64 = 1e-9;

/// Runs `suite` for `n = 1..=n_max`. `All` clamps `n_max` to each suite's
/// cap; a single suite rejects an `n_max` above its cap.
pub fn run_suite(suite: Suite, n_max: u64, variant: Variant) -> Result<RunReport> {
    let start = Instant::now();
    let mut lines = Vec::new();
    if suite == Suite::All {
        for s in Suite::INDIVIDUAL {
            run_into(s, n_max.min(s.cap()), variant, &mut lines);
        }
    } else {
        if n_max > suite.cap() {
            return Err(Error::CapExceeded {
                what: "--n-max",
                value: n_max as usize,
                cap: suite.cap() as usize,
            });
        }
        run_into(suite, n_max, variant, &mut lines);
    }
    Ok(RunReport {
        suite,
        lines,
        elapsed: start.elapsed(),
    })
}

fn run_into(suite: Suite, n_max: u64, variant: Variant, lines: &mut Vec<CaseLine>) {
    let name = suite.name();
    let mut push = |n: u64, outcome: Outcome| {
        let (status, detail) = match outcome {
            Ok(detail) => (Status::Pass, detail),
            Err(Finding::Fail(detail)) => (Status::Fail, detail),
            Err(Finding::Info(detail)) => (Status::Info, detail),
        };
        lines.push(CaseLine {
            suite: name,
            n,
            status,
            detail,
        });
    };
    match suite {
        Suite::Gf => {
            let series = gf_series(n_max as usize);
            push(n_max, gf_coefficients(&series));
            for (t, s) in GF_POINTS {
                for z in GF_RADII {
                    push(n_max, gf_point(&series, t, s, z));
                }
            }
        }
        _ => {
            for n in 1..=n_max {
                let outcome = match suite {
                    Suite::Roundtrip => roundtrip(n),
                    Suite::Stats => stats(n),
                    Suite::Equidist => equidist(n),
                    Suite::Cok1 => cok1(n),
                    Suite::Cok2 => cok2(n),
                    Suite::Cok1ref => cok1ref(n, variant),
                    Suite::Cok2ref => cok2ref(n),
                    Suite::Matches => matches_suite(n),
                    Suite::Gf | Suite::All => unreachable!("handled above"),
                };
                push(n, outcome);
            }
        }
    }
}

enum Finding {
    Fail(String),
    Info(String),
}

type Outcome = std::result::Result<String, Finding>;

fn fail(detail: impl Into<String>) -> Finding {
    Finding::Fail(detail.into())
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), Finding> {
    if cond {
        Ok(())
    } else {
        Err(fail(detail()))
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, Finding> {
    r.map_err(|e| fail(e.to_string()))
}

fn each_tree(
    n: u64,
    mut f: impl FnMut(&PlaneTree) -> std::result::Result<(), Finding>,
) -> std::result::Result<u64, Finding> {
    let mut count = 0u64;
    let mut first_error = None;
    for_each_tree(n as usize, |t| {
        if first_error.is_some() {
            return;
        }
        count += 1;
        if let Err(e) = f(&t) {
            first_error = Some(e);
        }
    });
    match first_error {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

fn roundtrip(n: u64) -> Outcome {
    let mut phi_images = HashSet::new();
    let mut psi_images = HashSet::new();
    let trees = each_tree(n, |t| {
        let p = lib(phi(t))?;
        ensure(&lib(phi_inv(&p))? == t, || format!("phi round trip fails on {t}"))?;
        let q = lib(psi(t))?;
        ensure(&lib(psi_inv(&q))? == t, || format!("psi round trip fails on {t}"))?;
        if n <= PSI_LABELS_MAX {
            ensure(lib(psi_by_labels(t))? == q, || {
                format!("psi descriptions differ on {t}")
            })?;
        }
        ensure(&lib(pre_inv(&lib(pre(t))?))? == t, || {
            format!("pre round trip fails on {t}")
        })?;
        ensure(&lib(dgr_inv(&lib(dgr(t))?))? == t, || {
            format!("dgr round trip fails on {t}")
        })?;
        for (name, f, g) in COMPOSITES {
            ensure(&lib(g(&lib(f(t))?))? == t, || {
                format!("{name} round trip fails on {t}")
            })?;
        }
        phi_images.insert(p);
        psi_images.insert(q);
        Ok(())
    })?;
    let want = catalan(n);
    ensure(BigInt::from(trees) == want, || {
        format!("{trees} trees, expected {want}")
    })?;
    ensure(BigInt::from(phi_images.len()) == want, || {
        format!("phi has {} distinct images", phi_images.len())
    })?;
    ensure(BigInt::from(psi_images.len()) == want, || {
        format!("psi has {} distinct images", psi_images.len())
    })?;
    Ok(format!(
        "{trees} trees; phi, psi, pre, dgr, alpha, beta, gamma, delta invert"
    ))
}

type Composite = (
    &'static str,
    fn(&PlaneTree) -> Result<Permutation>,
    fn(&Permutation) -> Result<PlaneTree>,
);

const COMPOSITES: [Composite; 4] = [
    ("alpha", alpha, alpha_inv),
    ("beta", beta, beta_inv),
    ("gamma", gamma, gamma_inv),
    ("delta", delta, delta_inv),
];

/// Checks old and young leaves against the images of `t` under phi, psi and
/// pre.
pub fn leaf_transfer_violation(t: &PlaneTree, s: &TreeStats) -> Result<Option<String>> {
    for (name, image) in [("phi", phi(t)?), ("psi", psi(t)?)] {
        let ups = image.count(Step::U);
        let reds = image.count(Step::R);
        if s.old_leaves != 1 + ups || s.young_leaves != reds {
            return Ok(Some(format!(
                "{name}({t}) = {}: {ups} U, {reds} R",
                image.render()
            )));
        }
    }
    let udu = factor_count(&pre(t)?, "UDU");
    if udu != s.young_leaves {
        return Ok(Some(format!("pre({t}) has {udu} UDU factors")));
    }
    Ok(None)
}

/// Checks that the four permutation maps land in their avoider classes and
/// carry old and young leaves to the matching permutation statistics.
pub fn permutation_contract_violation(t: &PlaneTree, s: &TreeStats) -> Result<Option<String>> {
    let (old, young) = (s.old_leaves, s.young_leaves);
    let a = alpha(t)?;
    let b = beta(t)?;
    let g = gamma(t)?;
    let d = delta(t)?;
    for (name, p, pattern) in [
        ("alpha", &a, Pattern::P321),
        ("beta", &b, Pattern::P132),
        ("gamma", &g, Pattern::P321),
        ("delta", &d, Pattern::P132),
    ] {
        if p.contains_pattern(pattern) {
            return Ok(Some(format!(
                "{name}({t}) = {} contains {}",
                p.render(),
                pattern.name()
            )));
        }
    }
    let (sa, sb, sg, sd) = (perm_stats(&a), perm_stats(&b), perm_stats(&g), perm_stats(&d));
    let checks = [
        ("alpha young", young, sa.consec_weak_exc_pairs),
        ("alpha old", old, sa.weak_exc_not_followed),
        ("beta young", young, sb.double_descents_prepended),
        ("beta old", old, sb.ascending_runs_appended),
        (
            "gamma young",
            young,
            sg.consec_deficiency_pairs + usize::from(sg.last_is_deficiency),
        ),
        ("gamma old", old, sg.weak_exc_not_followed),
        ("delta young", young, sd.double_ascents_appended),
        ("delta old", old, sd.ascending_runs_appended),
    ];
    for (what, want, got) in checks {
        if want != got {
            return Ok(Some(format!("{what} on {t}: leaves {want}, statistic {got}")));
        }
    }
    Ok(None)
}

fn stats(n: u64) -> Outcome {
    let trees = each_tree(n, |t| {
        let s = tree_stats(t);
        ensure(
            s.old_leaves >= 1 && s.critical_leaf_preorder_index.is_some(),
            || format!("{t} has no critical leaf"),
        )?;
        if let Some(v) = lib(leaf_transfer_violation(t, &s))? {
            return Err(fail(v));
        }
        if n <= STATS_PERM_MAX {
            if let Some(v) = lib(permutation_contract_violation(t, &s))? {
                return Err(fail(v));
            }
        }
        Ok(())
    })?;
    let scope = if n <= STATS_PERM_MAX {
        "paths and permutations"
    } else {
        "paths"
    };
    Ok(format!("{trees} trees; leaf statistics transfer to {scope}"))
}

fn equidist(n: u64) -> Outcome {
    let mut young = BTreeMap::<usize, u64>::new();
    each_tree(n, |t| {
        let y = tree_stats(t).young_leaves;
        *young.entry(y).or_default() += 1;
        let d = lib(inflate(&lib(phi(t))?))?;
        let peaks = lib(peaks_at_even_height(&d))?;
        ensure(peaks == y, || {
            format!("inflate(phi({t})) = {} has {peaks} even peaks", d.render())
        })
    })?;
    let mut peaks = BTreeMap::<usize, u64>::new();
    let mut duds = BTreeMap::<usize, u64>::new();
    for d in dyck_paths(n as usize) {
        *peaks.entry(lib(peaks_at_even_height(&d))?).or_default() += 1;
        *duds.entry(factor_count(&d, "DUD")).or_default() += 1;
    }
    ensure(peaks == young, || {
        format!("even peaks {peaks:?} vs young leaves {young:?}")
    })?;
    ensure(duds == young, || {
        format!("DUD factors {duds:?} vs young leaves {young:?}")
    })?;
    for (&k, &c) in &young {
        ensure(lib(count_young(n, k as u64))? == BigInt::from(c), || {
            format!("count_young({n}, {k}) != {c}")
        })?;
    }
    Ok(format!(
        "young leaves, even peaks and DUD factors share {young:?}"
    ))
}

fn gf_coefficients(series: &[Poly]) -> Outcome {
    let n_max = series.len() as u64 - 1;
    for n in 1..=n_max {
        let coeff = &series[n as usize];
        let table = lib(old_young_table(n))?;
        let from_series: Vec<((u64, u64), BigInt)> = coeff
            .terms()
            .map(|(m, c)| ((m[0] as u64, m[1] as u64), c.clone()))
            .collect();
        ensure(
            from_series.len() == coeff.len() && from_series.iter().all(|((i, _), _)| *i >= 1),
            || format!("unexpected monomials in [z^{n}]"),
        )?;
        let mut sorted = from_series;
        sorted.sort();
        ensure(sorted == table, || {
            format!("[z^{n}] = {coeff} disagrees with the closed form")
        })?;
        if n <= ENUMERATION_MAX {
            let mut hist = BTreeMap::<(u64, u64), u64>::new();
            each_tree(n, |t| {
                let s = tree_stats(t);
                *hist
                    .entry((s.old_leaves as u64, s.young_leaves as u64))
                    .or_default() += 1;
                Ok(())
            })?;
            let enumerated: Vec<((u64, u64), BigInt)> =
                hist.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
            ensure(enumerated == table, || {
                format!("[z^{n}] disagrees with enumeration")
            })?;
        }
    }
    Ok(format!(
        "coefficients through z^{n_max} match the closed form (and enumeration through z^{})",
        n_max.min(ENUMERATION_MAX)
    ))
}

/// `|closed form - truncated series|` at one point.
pub fn gf_discrepancy(series: &[Poly], t: f64, s: f64, z: f64) -> Result<f64> {
    Ok((gf_closed_eval(t, s, z)? - gf_series_eval(series, t, s, z)).abs())
}

fn gf_point(series: &[Poly], t: f64, s: f64, z: f64) -> Outcome {
    let degree = series.len() - 1;
    let diff = lib(gf_discrepancy(series, t, s, z))?;
    let detail = format!("(t,s,z)=({t},{s},{z}) |closed - degree {degree}| = {diff:.3e}");
    if diff <= GF_TOLERANCE {
        Ok(detail)
    } else {
        Err(fail(format!("{detail} > {GF_TOLERANCE:e}")))
    }
}

fn cok1(n: u64) -> Outcome {
    let (l, r) = lib(coker1_sides(n))?;
    ensure(l == r, || format!("{l} != {r}"))?;
    Ok(format!("both sides {l}"))
}

fn cok2(n: u64) -> Outcome {
    let (l, r) = lib(coker2_sides(n))?;
    ensure(l == r, || format!("sides differ by {}", &l - &r))?;
    Ok(format!("both sides agree ({} terms)", l.len()))
}

fn cok1ref(n: u64, variant: Variant) -> Outcome {
    let (l, r) = lib(cok1ref_sides(n, variant))?;
    if variant == Variant::Printed {
        if l == r {
            return Ok("printed form agrees".into());
        }
        let bad = non_integral_terms(n, variant);
        let listed: Vec<String> = bad.iter().map(|(i, j, c)| format!("(i={i},j={j}):{c}")).collect();
        return Err(Finding::Info(format!(
            "printed form mismatch; non-integral terms [{}]",
            listed.join(", ")
        )));
    }
    ensure(l == r, || format!("sides differ by {}", &l - &r))?;
    let mut checks = vec!["closed forms agree"];
    if n <= WEIGHTED_ORACLE_MAX {
        let oracle = lib(weighted_tree_sum(n as usize, WeightScheme::A, Caps::default()))?.to_rational();
        ensure(oracle == l, || format!("scheme A tree sum {oracle} != {l}"))?;
        let paths = lib(weighted_path_sum(
            n as usize - 1,
            2,
            &scheme_a_step_weights(),
            Caps::default(),
        ))?
        .to_rational();
        ensure(paths == l, || format!("2-Motzkin path sum {paths} != {l}"))?;
        checks.push("weighted trees and paths agree");
    }
    if n <= COK1_SPECIALIZE_MAX {
        let (c1, _) = lib(coker1_sides(n))?;
        let lz = lib(cok1ref_corrected(n))?;
        ensure(
            cok1_specialize(&lz.0) == c1 && cok1_specialize(&lz.1) == c1,
            || format!("x = y = 4 does not give {c1}"),
        )?;
        checks.push("x = y = 4 gives cok1");
    }
    Ok(checks.join("; "))
}

fn cok2ref(n: u64) -> Outcome {
    let (l, r) = lib(cok2ref_sides(n))?;
    ensure(l == r, || format!("sides differ by {}", &l - &r))?;
    let mut checks = vec!["closed forms agree"];
    if n <= WEIGHTED_ORACLE_MAX {
        let oracle = lib(weighted_tree_sum(n as usize, WeightScheme::B, Caps::default()))?;
        ensure(oracle == l, || format!("scheme B tree sum {oracle} != {l}"))?;
        let two = lib(weighted_path_sum(
            n as usize - 1,
            2,
            &scheme_b_step_weights(),
            Caps::default(),
        ))?;
        ensure(two == l, || format!("2-Motzkin path sum {two} != {l}"))?;
        let three = lib(weighted_path_sum(
            n as usize - 1,
            3,
            &three_color_step_weights(),
            Caps::default(),
        ))?;
        ensure(three == l, || format!("3-Motzkin path sum {three} != {l}"))?;
        checks.push("weighted trees and 2-, 3-colored paths agree");
    }
    if n <= COK2_SPECIALIZE_MAX {
        let (c2l, c2r) = lib(coker2_sides(n))?;
        let x2 = Poly::var(Var::X).pow(2);
        ensure(
            &x2 * &cok2_specialize(&l) == c2l && &x2 * &cok2_specialize(&r) == c2r,
            || "specialization does not give cok2".to_string(),
        )?;
        checks.push("specialization gives cok2");
    }
    Ok(checks.join("; "))
}

fn matches_suite(n: u64) -> Outcome {
    let sets = lib(enumerate_match_sets(n as u32))?;
    let mut images = HashSet::new();
    let mut by_profile = BTreeMap::<(usize, usize), u64>::new();
    for set in &sets {
        let t = lib(merge(set))?;
        let s = t.stats();
        ensure((s.old_leaves, s.young_leaves) == set.profile(), || {
            format!(
                "{set} merges to {t} with profile ({}, {})",
                s.old_leaves, s.young_leaves
            )
        })?;
        *by_profile.entry(set.profile()).or_default() += 1;
        ensure(images.insert(t), || {
            format!("{set} merges to a tree already produced")
        })?;
    }
    let factorial: BigInt = (1..=n + 1).map(BigInt::from).product();
    ensure(BigInt::from(images.len()) == &factorial * catalan(n), || {
        format!("{} distinct labeled trees", images.len())
    })?;
    for ((i, j), c) in &by_profile {
        let want = &factorial * lib(count_old_young(n, *i as u64, *j as u64))?;
        ensure(want == BigInt::from(*c), || {
            format!("profile ({i}, {j}): {c} labeled trees, expected {want}")
        })?;
    }
    Ok(format!(
        "{} match sets merge bijectively with leaf profiles preserved",
        sets.len()
    ))
}
