//! Permutations, the alternating classes, peak statistics and weighted
//! class polynomials.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::scalar::Scalar;

/// Default stream cap for [`enumerate_class`].
pub const DEFAULT_ENUM_CAP: usize = 12;
/// Hard ceiling for any configured cap.
pub const MAX_ENUM_CAP: usize = 13;

/// A permutation of `{1..n}` in one-line notation. `n` may be zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::NotAPermutation { len: n, reason: format!("value {v} out of range") });
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::NotAPermutation { len: n, reason: format!("value {v} repeated") });
            }
        }
        Ok(Perm(values))
    }

    pub fn empty() -> Self {
        Perm(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// 1-based position of the maximum, `None` for the empty permutation.
    pub fn max_position(&self) -> Option<usize> {
        self.0.iter().position(|&v| v as usize == self.len()).map(|i| i + 1)
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Perm::new(values.clone()).is_ok());
        Perm(values)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Comparison pattern of an alternating word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `w1 < w2 > w3 < ...`
    UpDown,
    /// `w1 > w2 < w3 > ...`
    DownUp,
}

impl Pattern {
    /// Whether the comparison between positions `i` and `i + 1` (0-based `i`)
    /// must be an ascent.
    fn ascent_at(self, i: usize) -> bool {
        match self {
            Pattern::UpDown => i.is_multiple_of(2),
            Pattern::DownUp => i % 2 == 1,
        }
    }

    pub fn matches(self, word: &[u32]) -> bool {
        word.windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] < w[1]) == self.ascent_at(i))
    }
}

/// True when `word` is up-down or down-up (sizes 0 and 1 are both).
pub fn is_alternating(word: &[u32]) -> bool {
    Pattern::UpDown.matches(word) || Pattern::DownUp.matches(word)
}

/// The permutation classes under study.
///
/// `CEven` holds the even-size up-down permutations (`1 2` is its size-2
/// member) and `DEven` the even-size down-up ones. `Ascending` is the union
/// of all up-down permutations of any size; [`classify`] never returns it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassTag {
    SOdd,
    CEven,
    DEven,
    DownUpOdd,
    Ascending,
    Other,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::SOdd,
        ClassTag::CEven,
        ClassTag::DEven,
        ClassTag::DownUpOdd,
        ClassTag::Ascending,
        ClassTag::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::SOdd => "S_odd",
            ClassTag::CEven => "C_even",
            ClassTag::DEven => "D_even",
            ClassTag::DownUpOdd => "DownUp_odd",
            ClassTag::Ascending => "Ascending_any",
            ClassTag::Other => "Other",
        }
    }

    fn pattern(self) -> Option<Pattern> {
        match self {
            ClassTag::SOdd | ClassTag::CEven | ClassTag::Ascending => Some(Pattern::UpDown),
            ClassTag::DEven | ClassTag::DownUpOdd => Some(Pattern::DownUp),
            ClassTag::Other => None,
        }
    }

    /// Whether the class has members of size `n`.
    pub fn admits_size(self, n: usize) -> bool {
        match self {
            ClassTag::SOdd | ClassTag::DownUpOdd => n % 2 == 1,
            ClassTag::CEven | ClassTag::DEven => n.is_multiple_of(2),
            ClassTag::Ascending => true,
            ClassTag::Other => n >= 3,
        }
    }

    /// Membership test.
    pub fn contains(self, p: &Perm) -> bool {
        if !self.admits_size(p.len()) {
            return false;
        }
        match self.pattern() {
            Some(pat) => pat.matches(p.values()),
            None => !is_alternating(p.values()),
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Assign the most specific tag. The empty permutation is `CEven` and a
/// single point is `SOdd`.
pub fn classify(p: &Perm) -> ClassTag {
    let w = p.values();
    let odd = w.len() % 2 == 1;
    if Pattern::UpDown.matches(w) {
        if odd {
            ClassTag::SOdd
        } else {
            ClassTag::CEven
        }
    } else if Pattern::DownUp.matches(w) {
        if odd {
            ClassTag::DownUpOdd
        } else {
            ClassTag::DEven
        }
    } else {
        ClassTag::Other
    }
}

/// Peak-type statistics. The boundary convention is a parameter because
/// different conventions give different weighted counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StatVariant {
    InteriorPeaks,
    InteriorValleys,
    PeaksWithFinal,
    ValleysWithInitial,
}

impl StatVariant {
    pub const ALL: [StatVariant; 4] = [
        StatVariant::InteriorPeaks,
        StatVariant::InteriorValleys,
        StatVariant::PeaksWithFinal,
        StatVariant::ValleysWithInitial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatVariant::InteriorPeaks => "interior_peaks",
            StatVariant::InteriorValleys => "interior_valleys",
            StatVariant::PeaksWithFinal => "peaks_with_final",
            StatVariant::ValleysWithInitial => "valleys_with_initial",
        }
    }
}

impl fmt::Display for StatVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StatVariant::ALL
            .into_iter()
            .find(|v| v.name() == s || v.name().replace('_', "-") == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown statistic {s:?}")))
    }
}

/// Evaluate a statistic on any word of distinct values.
pub fn word_stat(w: &[u32], v: StatVariant) -> usize {
    let n = w.len();
    let interior = |peak: bool| {
        w.windows(3)
            .filter(|t| if peak { t[0] < t[1] && t[1] > t[2] } else { t[0] > t[1] && t[1] < t[2] })
            .count()
    };
    match v {
        StatVariant::InteriorPeaks => interior(true),
        StatVariant::InteriorValleys => interior(false),
        StatVariant::PeaksWithFinal => interior(true) + usize::from(n >= 2 && w[n - 2] < w[n - 1]),
        StatVariant::ValleysWithInitial => interior(false) + usize::from(n >= 2 && w[0] < w[1]),
    }
}

pub fn stat(p: &Perm, v: StatVariant) -> usize {
    word_stat(p.values(), v)
}

/// Relabel a word of distinct values to the order-isomorphic permutation.
pub fn standardize(word: &[u32]) -> Result<Perm> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    let mut out = vec![0u32; word.len()];
    for (rank, pair) in order.iter().enumerate() {
        if rank > 0 && word[order[rank - 1]] == word[*pair] {
            return Err(Error::DuplicateEntry(word[*pair]));
        }
        out[*pair] = rank as u32 + 1;
    }
    Ok(Perm(out))
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub cap: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { cap: DEFAULT_ENUM_CAP }
    }
}

impl EnumConfig {
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap > MAX_ENUM_CAP {
            return Err(Error::CapExceeded { requested: cap, cap: MAX_ENUM_CAP });
        }
        Ok(EnumConfig { cap })
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded { requested: n, cap: self.cap });
        }
        Ok(())
    }
}

/// Lexicographic backtracking over the members of one class of one size.
pub struct ClassIter {
    tag: ClassTag,
    n: usize,
    pattern: Option<Pattern>,
    prefix: Vec<u32>,
    used: Vec<bool>,
    next: Vec<u32>,
    done: bool,
}

impl ClassIter {
    fn new(tag: ClassTag, n: usize) -> Self {
        ClassIter {
            tag,
            n,
            pattern: tag.pattern(),
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            next: vec![1; n.max(1)],
            done: !tag.admits_size(n),
        }
    }

    fn fits(&self, v: u32) -> bool {
        let d = self.prefix.len();
        match (self.pattern, self.prefix.last()) {
            (Some(p), Some(&last)) => (last < v) == p.ascent_at(d - 1),
            _ => true,
        }
    }

    fn advance(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            let d = self.prefix.len();
            if d == self.n {
                let out = self.prefix.clone();
                let last = self.prefix.pop().expect("full prefix");
                self.used[last as usize] = false;
                return Some(out);
            }
            let n = self.n as u32;
            let cand = (self.next[d]..=n).find(|&v| !self.used[v as usize] && self.fits(v));
            match cand {
                Some(v) => {
                    self.next[d] = v + 1;
                    self.prefix.push(v);
                    self.used[v as usize] = true;
                    if d + 1 < self.n {
                        self.next[d + 1] = 1;
                    }
                }
                None => match self.prefix.pop() {
                    Some(last) => self.used[last as usize] = false,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

impl Iterator for ClassIter {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        loop {
            let w = self.advance()?;
            if self.tag == ClassTag::Other && is_alternating(&w) {
                continue;
            }
            if self.tag == ClassTag::SOdd && w.len() > 1 {
                debug_assert!(w.iter().position(|&v| v as usize == w.len()).unwrap() % 2 == 1);
            }
            return Some(Perm(w));
        }
    }
}

/// Stream the members of `tag` of size `n` in lexicographic order, using the
/// default cap.
pub fn enumerate_class(tag: ClassTag, n: usize) -> Result<ClassIter> {
    enumerate_class_with(tag, n, EnumConfig::default())
}

pub fn enumerate_class_with(tag: ClassTag, n: usize, cfg: EnumConfig) -> Result<ClassIter> {
    cfg.check(n)?;
    Ok(ClassIter::new(tag, n))
}

/// Histogram of the statistic over a class: entry `i` counts members with
/// statistic value `i`.
pub fn class_weight_counts(tag: ClassTag, n: usize, v: StatVariant) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n / 2 + 2];
    for p in enumerate_class(tag, n)? {
        counts[stat(&p, v)] += 1;
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// `sum_{p in class, |p| = n} w^{stat(p, v)}`.
pub fn class_weight_poly<T: Scalar>(tag: ClassTag, n: usize, v: StatVariant) -> Result<Poly<T>> {
    let counts = class_weight_counts(tag, n, v)?;
    Ok(Poly::new(counts.into_iter().map(|c| T::from_u64(c).expect("count fits")).collect()))
}
