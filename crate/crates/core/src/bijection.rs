//! Split-at-maximum decomposition of odd up-down permutations, its inverse,
//! and the zigzag ("snake") view with marked peaks.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{classify, enumerate_class, is_alternating, standardize, word_stat, ClassTag, Perm, StatVariant};
use crate::verify::{self, ClaimVerdict};

/// The pieces of `sigma = L M R`.
///
/// `left_values` keeps the value set of `L`; without it the split cannot be
/// inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitResult {
    pub left_values: BTreeSet<u32>,
    pub left: Perm,
    pub right: Perm,
    /// 1-based position of the maximum; always even.
    pub max_position: usize,
}

impl SplitResult {
    pub fn total_size(&self) -> usize {
        self.left.len() + self.right.len() + 1
    }
}

/// Remove the maximum and standardize the two sides.
pub fn split_at_max(sigma: &Perm) -> Result<SplitResult> {
    if sigma.len() < 3 || !ClassTag::SOdd.contains(sigma) {
        return Err(Error::NotSplittable(sigma.to_string()));
    }
    let max_position = sigma.max_position().expect("non-empty");
    let w = sigma.values();
    let (l, r) = (&w[..max_position - 1], &w[max_position..]);
    Ok(SplitResult {
        left_values: l.iter().copied().collect(),
        left: standardize(l)?,
        right: standardize(r)?,
        max_position,
    })
}

/// Inverse of [`split_at_max`]: relabel `left` into `left_values`, put the
/// maximum after it, relabel `right` into the complement.
pub fn merge(s: &SplitResult, total_size: usize) -> Result<Perm> {
    if total_size != s.total_size() {
        return Err(Error::InconsistentSplit(format!(
            "blocks of sizes {} and {} cannot form size {total_size}",
            s.left.len(),
            s.right.len()
        )));
    }
    if s.left_values.len() != s.left.len() {
        return Err(Error::InconsistentSplit(format!(
            "{} left values for a left block of size {}",
            s.left_values.len(),
            s.left.len()
        )));
    }
    let max = total_size as u32;
    if s.left_values.iter().any(|&v| v == 0 || v >= max) {
        return Err(Error::InconsistentSplit(format!("left values must lie in 1..{}", max - 1)));
    }
    if s.max_position != s.left.len() + 1 {
        return Err(Error::InconsistentSplit(format!(
            "maximum position {} does not follow a left block of size {}",
            s.max_position,
            s.left.len()
        )));
    }
    let left_labels: Vec<u32> = s.left_values.iter().copied().collect();
    let right_labels: Vec<u32> = (1..max).filter(|v| !s.left_values.contains(v)).collect();
    let mut out = Vec::with_capacity(total_size);
    out.extend(s.left.values().iter().map(|&v| left_labels[v as usize - 1]));
    out.push(max);
    out.extend(s.right.values().iter().map(|&v| right_labels[v as usize - 1]));
    Ok(Perm::from_values_unchecked(out))
}

/// An alternating permutation read as a zigzag path, peaks flagged as
/// elliptic nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Snake {
    pub levels: Vec<u32>,
    pub elliptic_flags: Vec<bool>,
}

impl Snake {
    /// Number of elliptic nodes, i.e. the exponent of the weight `k`.
    pub fn elliptic_nodes(&self) -> usize {
        self.elliptic_flags.iter().filter(|&&f| f).count()
    }
}

pub fn snake_encode(p: &Perm) -> Result<Snake> {
    let w = p.values();
    if !is_alternating(w) {
        return Err(Error::NotAlternating(p.to_string()));
    }
    let elliptic_flags = (0..w.len())
        .map(|i| i > 0 && i + 1 < w.len() && w[i - 1] < w[i] && w[i] > w[i + 1])
        .collect();
    Ok(Snake { levels: w.to_vec(), elliptic_flags })
}

/// Raw (unstandardized) blocks left and right of the maximum.
pub fn raw_blocks(sigma: &Perm) -> Option<(&[u32], &[u32])> {
    let pos = sigma.max_position()?;
    let w = sigma.values();
    Some((&w[..pos - 1], &w[pos..]))
}

/// `nu(sigma) - nu(L) - nu(R)` for the interior-peak statistic; 1 whenever
/// the split is weight multiplicative with one factor for the maximum.
pub fn peak_excess(sigma: &Perm) -> Option<isize> {
    let (l, r) = raw_blocks(sigma)?;
    let v = StatVariant::InteriorPeaks;
    Some(word_stat(sigma.values(), v) as isize - word_stat(l, v) as isize - word_stat(r, v) as isize)
}

/// Largest size [`verify_split_properties`] will enumerate.
pub const MAX_SPLIT_SIZE: usize = 11;

const COUNTEREXAMPLES: usize = 8;

/// Exhaustive checks of the split over odd up-down permutations of size
/// `3..=max_size`: round trip and injectivity, peak additivity, the block
/// classes, and elliptic node additivity on snakes.
pub fn verify_split_properties(max_size: usize) -> Result<Vec<ClaimVerdict>> {
    if max_size > MAX_SPLIT_SIZE {
        return Err(Error::CapExceeded { requested: max_size, cap: MAX_SPLIT_SIZE });
    }
    let sizes: Vec<usize> = (3..=max_size).step_by(2).collect();
    let range = format!("3..={max_size} odd");
    let mut rt = verify::builder("BIJ-RT").param("sizes", &range).evidence_limit(COUNTEREXAMPLES);
    let mut peak = verify::builder("BIJ-PEAK")
        .param("sizes", &range)
        .param("statistic", StatVariant::InteriorPeaks)
        .evidence_limit(COUNTEREXAMPLES);
    let mut parity = verify::builder("BIJ-PARITY").param("sizes", &range).evidence_limit(COUNTEREXAMPLES);
    let mut snake = verify::builder("SNK-WEIGHT").param("sizes", &range).evidence_limit(COUNTEREXAMPLES);

    for &size in &sizes {
        let n = (size - 1) / 2;
        let mut seen = HashSet::new();
        let mut count = 0u64;
        let mut block_shapes: BTreeMap<(usize, ClassTag, usize, ClassTag), u64> = BTreeMap::new();
        for sigma in enumerate_class(ClassTag::SOdd, size)? {
            count += 1;
            let s = split_at_max(&sigma)?;

            rt.checked(1);
            match merge(&s, size) {
                Ok(back) if back == sigma => {}
                Ok(back) => rt.discrepancy(format!("round trip {sigma}"), &sigma, back),
                Err(e) => rt.discrepancy(format!("round trip {sigma}"), &sigma, e),
            }
            if !seen.insert(s.clone()) {
                rt.discrepancy(format!("injectivity {sigma}"), "distinct split", "split already produced");
            }

            peak.checked(1);
            let excess = peak_excess(&sigma).expect("non-empty");
            if excess != 1 {
                peak.discrepancy_with_difference(format!("{sigma}"), 1, excess, excess - 1);
            }

            let j = s.max_position / 2;
            let l = &sigma.values()[..s.max_position - 1];
            let alpha = standardize(&l[..l.len() - 1])?;
            let beta = s.right.clone();
            *block_shapes
                .entry((s.left.len(), classify(&s.left), beta.len(), classify(&beta)))
                .or_default() += 1;
            parity.checked(1);
            let alpha_ok = alpha.len() == 2 * j - 2 && ClassTag::CEven.contains(&alpha);
            let beta_ok = beta.len() == 2 * (n - j) && ClassTag::DEven.contains(&beta);
            if !(alpha_ok && beta_ok) {
                parity.discrepancy(
                    format!("{sigma} (j={j})"),
                    format!("alpha in C_{}, beta in D_{}", 2 * j - 2, 2 * (n - j)),
                    format!("alpha = {alpha} ({}), beta = {beta} ({})", classify(&alpha), classify(&beta)),
                );
            }

            snake.checked(1);
            let whole = snake_encode(&sigma)?.elliptic_nodes();
            let parts = snake_encode(&s.left)?.elliptic_nodes() + snake_encode(&s.right)?.elliptic_nodes();
            if whole != parts + 1 {
                snake.discrepancy(format!("{sigma}"), format!("{} nodes", parts + 1), format!("{whole} nodes"));
            }
        }
        rt.measurement(format!("size {size}"), "", format!("{count} permutations, {} distinct splits", seen.len()));
        for ((ll, lc, rl, rc), c) in block_shapes {
            parity.measurement(
                format!("size {size}"),
                "",
                format!("L: size {ll} {lc}, R: size {rl} {rc}: {c} permutations"),
            );
        }
    }
    Ok(vec![rt.finish(), peak.finish(), parity.finish(), snake.finish()])
}

/// The two descriptions of `C_{2n}`: "last comparison is a descent" against
/// the up-down pattern, on every even up-down permutation up to `max_size`.
pub fn class_definition_verdict(max_size: usize) -> Result<ClaimVerdict> {
    let mut b = verify::builder("CLS-CD").param("sizes", format!("2..={max_size} even")).evidence_limit(COUNTEREXAMPLES);
    for size in (2..=max_size).step_by(2) {
        let mut total = 0u64;
        for p in enumerate_class(ClassTag::CEven, size)? {
            total += 1;
            b.checked(1);
            let w = p.values();
            if w[size - 2] < w[size - 1] {
                b.discrepancy(format!("{p}"), "last comparison a descent", "last comparison an ascent");
            }
        }
        b.measurement(format!("size {size}"), "", format!("{total} up-down permutations"));
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Perm {
        Perm::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let sigma = perm(&[2, 5, 1, 7, 3, 6, 4]);
        let s = split_at_max(&sigma).unwrap();
        assert_eq!(s.left_values, BTreeSet::from([1, 2, 5]));
        assert_eq!(s.left, perm(&[2, 3, 1]));
        assert_eq!(s.right, perm(&[1, 3, 2]));
        assert_eq!(s.max_position, 4);
        assert_eq!(merge(&s, 7).unwrap(), sigma);
        assert_eq!(peak_excess(&sigma), Some(1));
    }

    #[test]
    fn size_three() {
        let a = split_at_max(&perm(&[1, 3, 2])).unwrap();
        assert_eq!(a.left_values, BTreeSet::from([1]));
        assert_eq!((a.left.clone(), a.right.clone(), a.max_position), (perm(&[1]), perm(&[1]), 2));
        let b = split_at_max(&perm(&[2, 3, 1])).unwrap();
        assert_eq!(b.left_values, BTreeSet::from([2]));
        assert_eq!(merge(&a, 3).unwrap(), perm(&[1, 3, 2]));
        assert_eq!(merge(&b, 3).unwrap(), perm(&[2, 3, 1]));
    }

    #[test]
    fn split_rejects_non_members() {
        assert!(split_at_max(&perm(&[1])).is_err());
        assert!(split_at_max(&perm(&[3, 1, 2])).is_err());
        assert!(split_at_max(&perm(&[1, 2, 3])).is_err());
        assert!(split_at_max(&perm(&[1, 3, 2, 4])).is_err());
    }

    #[test]
    fn merge_rejects_inconsistent_data() {
        let s = split_at_max(&perm(&[1, 3, 2])).unwrap();
        assert!(merge(&s, 4).is_err());
        let mut bad = s.clone();
        bad.left_values = BTreeSet::from([1, 2]);
        assert!(merge(&bad, 3).is_err());
        let mut bad = s.clone();
        bad.left_values = BTreeSet::from([3]);
        assert!(merge(&bad, 3).is_err());
        let mut bad = s;
        bad.max_position = 3;
        assert!(merge(&bad, 3).is_err());
    }

    #[test]
    fn snakes() {
        assert_eq!(snake_encode(&perm(&[1, 3, 2])).unwrap().elliptic_flags, [false, true, false]);
        assert_eq!(snake_encode(&perm(&[1])).unwrap().elliptic_flags, [false]);
        assert_eq!(snake_encode(&perm(&[2, 5, 1, 7, 3, 6, 4])).unwrap().elliptic_nodes(), 3);
        assert_eq!(snake_encode(&perm(&[2, 1, 3])).unwrap().elliptic_nodes(), 0);
        assert!(matches!(snake_encode(&perm(&[1, 2, 3])), Err(Error::NotAlternating(_))));
    }
}
