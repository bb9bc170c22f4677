//! Exhaustive comparison of finite sets: go through every maximal pairing
//! and read the verdict off the remainders.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Per-side size cap applied unless the caller overrides it; the number of
/// pairings grows factorially.
pub const DEFAULT_MAX_SIZE: usize = 8;

const LEFT_REMAINDER: &str = "left-remainder:";
const RIGHT_REMAINDER: &str = "right-remainder:";

/// An ordered set of distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSet {
    labels: Vec<String>,
}

impl FiniteSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.contains(['\t', '\n', '\r']) || l.trim() != l {
                return Err(Error::InvalidArgument(format!(
                    "label {l:?} must be non-empty without tabs, line breaks or surrounding spaces"
                )));
            }
            if l == LEFT_REMAINDER || l == RIGHT_REMAINDER {
                return Err(Error::InvalidArgument(format!("label {l:?} is reserved")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate label {l:?}")));
            }
        }
        Ok(FiniteSet { labels })
    }

    /// Parses a comma-separated list; the empty string is the empty set.
    pub fn from_csv(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return FiniteSet::new(Vec::<String>::new());
        }
        FiniteSet::new(s.split(',').map(str::trim))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }
}

/// A pairing between two finite sets together with the unpaired leftovers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairingWitness {
    pub pairs: Vec<(String, String)>,
    pub remainder_left: Vec<String>,
    pub remainder_right: Vec<String>,
}

impl PairingWitness {
    pub fn is_remainder_free(&self) -> bool {
        self.remainder_left.is_empty() && self.remainder_right.is_empty()
    }

    pub fn remainder_len(&self) -> usize {
        self.remainder_left.len() + self.remainder_right.len()
    }

    /// Parses the line format produced by `Display`: `left<TAB>right` pair
    /// lines, then a `left-remainder:` section and a `right-remainder:`
    /// section with one label per line. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            Pairs,
            Left,
            Right,
        }
        let mut section = Section::Pairs;
        let mut w = PairingWitness::default();
        for line in text.lines() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            match line.trim() {
                LEFT_REMAINDER if section == Section::Pairs => {
                    section = Section::Left;
                    continue;
                }
                RIGHT_REMAINDER if section != Section::Right => {
                    section = Section::Right;
                    continue;
                }
                _ => {}
            }
            match section {
                Section::Pairs => {
                    let (l, r) = line
                        .split_once('\t')
                        .ok_or_else(|| Error::parse(line, "a witness pair line left<TAB>right"))?;
                    if r.contains('\t') {
                        return Err(Error::parse(line, "a witness pair line left<TAB>right"));
                    }
                    w.pairs.push((l.to_owned(), r.to_owned()));
                }
                Section::Left => w.remainder_left.push(line.trim().to_owned()),
                Section::Right => w.remainder_right.push(line.trim().to_owned()),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for PairingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, r) in &self.pairs {
            writeln!(f, "{l}\t{r}")?;
        }
        writeln!(f, "{LEFT_REMAINDER}")?;
        for l in &self.remainder_left {
            writeln!(f, "{l}")?;
        }
        writeln!(f, "{RIGHT_REMAINDER}")?;
        for r in &self.remainder_right {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    EqualCardinality,
    LeftLarger,
    RightLarger,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::EqualCardinality => "equal",
            Verdict::LeftLarger => "left-larger",
            Verdict::RightLarger => "right-larger",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    pub witness: PairingWitness,
}

fn check_size(a: &FiniteSet, b: &FiniteSet, max_size: Option<usize>) -> Result<()> {
    if let Some(cap) = max_size {
        let largest = a.len().max(b.len());
        if largest > cap {
            return Err(Error::InvalidArgument(format!(
                "set of size {largest} exceeds the exhaustive-search cap of {cap}; raise the cap explicitly"
            )));
        }
    }
    Ok(())
}

/// `n (n-1) ... (n-k+1)`, the number of injections of a `k`-set into an
/// `n`-set.
pub fn falling_factorial(n: usize, k: usize) -> u128 {
    (0..k).map(|i| (n - i) as u128).product()
}

/// Calls `visit` with every injection `0..k -> 0..n` in lexicographic order.
fn for_each_injection(k: usize, n: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(
        slot: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut impl FnMut(&[usize]),
    ) {
        if slot == chosen.capacity() {
            visit(chosen);
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                chosen.push(j);
                go(slot + 1, n, chosen, used, visit);
                chosen.pop();
                used[j] = false;
            }
        }
    }
    let mut chosen = Vec::with_capacity(k);
    let mut used = vec![false; n];
    go(0, n, &mut chosen, &mut used, visit);
}

/// Every maximal pairing between `a` and `b`, capped at
/// [`DEFAULT_MAX_SIZE`] labels per side.
pub fn all_maximal_pairings(a: &FiniteSet, b: &FiniteSet) -> Result<Vec<PairingWitness>> {
    all_maximal_pairings_capped(a, b, Some(DEFAULT_MAX_SIZE))
}

/// Every maximal pairing between `a` and `b`; `max_size = None` lifts the
/// cap.
///
/// The smaller side is injected into the larger one. Pairings come out in
/// lexicographic order of that assignment, and pairs are listed in the
/// order of `a`.
pub fn all_maximal_pairings_capped(
    a: &FiniteSet,
    b: &FiniteSet,
    max_size: Option<usize>,
) -> Result<Vec<PairingWitness>> {
    check_size(a, b, max_size)?;
    let left_smaller = a.len() <= b.len();
    let (small, large) = if left_smaller { (a, b) } else { (b, a) };
    let mut out = Vec::with_capacity(falling_factorial(large.len(), small.len()) as usize);
    for_each_injection(small.len(), large.len(), &mut |assign| {
        let mut hit = vec![false; large.len()];
        for &j in assign {
            hit[j] = true;
        }
        let rest: Vec<String> = large
            .labels
            .iter()
            .zip(&hit)
            .filter(|(_, &h)| !h)
            .map(|(l, _)| l.clone())
            .collect();
        let mut w = PairingWitness::default();
        if left_smaller {
            w.pairs = small
                .labels
                .iter()
                .zip(assign)
                .map(|(l, &j)| (l.clone(), large.labels[j].clone()))
                .collect();
            w.remainder_right = rest;
        } else {
            let mut pairs: Vec<(usize, String)> = small
                .labels
                .iter()
                .zip(assign)
                .map(|(r, &i)| (i, r.clone()))
                .collect();
            pairs.sort_by_key(|(i, _)| *i);
            w.pairs = pairs
                .into_iter()
                .map(|(i, r)| (large.labels[i].clone(), r))
                .collect();
            w.remainder_left = rest;
        }
        out.push(w);
    });
    Ok(out)
}

/// Classifies `a` against `b` by examining every maximal pairing.
pub fn compare(a: &FiniteSet, b: &FiniteSet) -> Result<Comparison> {
    compare_capped(a, b, Some(DEFAULT_MAX_SIZE))
}

pub fn compare_capped(a: &FiniteSet, b: &FiniteSet, max_size: Option<usize>) -> Result<Comparison> {
    let pairings = all_maximal_pairings_capped(a, b, max_size)?;
    if let Some(w) = pairings.iter().find(|w| w.is_remainder_free()) {
        return Ok(Comparison {
            verdict: Verdict::EqualCardinality,
            witness: w.clone(),
        });
    }
    let left_always = pairings.iter().all(|w| !w.remainder_left.is_empty());
    let right_always = pairings.iter().all(|w| !w.remainder_right.is_empty());
    let verdict = match (left_always, right_always) {
        (true, false) => Verdict::LeftLarger,
        (false, true) => Verdict::RightLarger,
        _ => unreachable!("maximal pairings leave a remainder on one side only"),
    };
    Ok(Comparison {
        verdict,
        witness: pairings
            .into_iter()
            .next()
            .expect("at least one pairing exists"),
    })
}

/// Why a supplied witness does not describe a maximal pairing of two sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessDefect {
    UnknownLabel { side: &'static str, label: String },
    Repeated { side: &'static str, label: String },
    Missing { side: &'static str, label: String },
    NotMaximal,
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessDefect::UnknownLabel { side, label } => {
                write!(f, "{side} label {label:?} is not in the {side} set")
            }
            WitnessDefect::Repeated { side, label } => {
                write!(f, "{side} label {label:?} is used more than once")
            }
            WitnessDefect::Missing { side, label } => {
                write!(f, "{side} label {label:?} is neither paired nor left over")
            }
            WitnessDefect::NotMaximal => {
                f.write_str("both sides have leftovers, so the pairing is not maximal")
            }
        }
    }
}

impl std::error::Error for WitnessDefect {}

fn check_side<'a>(
    side: &'static str,
    set: &FiniteSet,
    used: impl Iterator<Item = &'a String>,
) -> Result<(), WitnessDefect> {
    let mut seen = HashSet::new();
    for label in used {
        if !set.contains(label) {
            return Err(WitnessDefect::UnknownLabel {
                side,
                label: label.clone(),
            });
        }
        if !seen.insert(label.as_str()) {
            return Err(WitnessDefect::Repeated {
                side,
                label: label.clone(),
            });
        }
    }
    if let Some(label) = set.labels.iter().find(|l| !seen.contains(l.as_str())) {
        return Err(WitnessDefect::Missing {
            side,
            label: label.clone(),
        });
    }
    Ok(())
}

/// Checks that `w` partitions both sets into pairs and leftovers, uses each
/// label once, and leaves leftovers on at most one side.
pub fn check_witness(
    a: &FiniteSet,
    b: &FiniteSet,
    w: &PairingWitness,
) -> Result<(), WitnessDefect> {
    check_side(
        "left",
        a,
        w.pairs.iter().map(|(l, _)| l).chain(&w.remainder_left),
    )?;
    check_side(
        "right",
        b,
        w.pairs.iter().map(|(_, r)| r).chain(&w.remainder_right),
    )?;
    if !w.remainder_left.is_empty() && !w.remainder_right.is_empty() {
        return Err(WitnessDefect::NotMaximal);
    }
    Ok(())
}
