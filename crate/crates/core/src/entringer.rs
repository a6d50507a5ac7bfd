//! The Entringer triangle and the competing combinatorial readings of it.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::andre;
use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::perm::{enumerate_class, stat, ClassTag, Perm, StatVariant};
use crate::scalar::Scalar;
use crate::verify::{self, ClaimVerdict};

/// Rows 0..=5 as printed in the reference table.
pub const REFERENCE_ROWS: [&[u64]; 6] = [
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 2, 2],
    &[0, 2, 4, 5, 5],
    &[0, 5, 10, 14, 16, 16],
];

/// Largest `n` accepted by the enumeration-backed operations.
pub const MAX_CANDIDATE_ROWS: usize = 9;

/// `rows[n][k] = E(n, k)` for `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigUint>>,
}

/// `E(n,k) = E(n,k-1) + E(n-1,n-k)`, `E(0,0) = 1`, `E(n,0) = 0` for `n > 0`.
pub fn build_triangle(n_rows: usize) -> Triangle {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for n in 1..=n_rows {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigUint::zero());
        for k in 1..=n {
            let v = &row[k - 1] + &prev[n - k];
            row.push(v);
        }
        rows.push(row);
    }
    Triangle { rows }
}

impl Triangle {
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Index of the last built row.
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Result<&[BigUint]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::OutOfRange { index: n, max: self.max_row() })
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&BigUint> {
        let row = self.row(n)?;
        row.get(k).ok_or(Error::OutOfRange { index: k, max: n })
    }

    /// `E(n, n)`.
    pub fn diagonal(&self, n: usize) -> Result<BigUint> {
        self.get(n, n).cloned()
    }

    pub fn row_sum(&self, n: usize) -> Result<BigUint> {
        Ok(self.row(n)?.iter().sum())
    }
}

/// Candidate combinatorial definitions of `E(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Candidate {
    /// Up-down permutations of size `n` with first value `k + 1`.
    UpDownFirstIsKPlusOne,
    /// Up-down permutations of size `n` with first value `k`.
    UpDownFirstIsK,
    /// Down-up permutations of size `n` with first value `k`.
    DownUpFirstIsK,
    /// Down-up permutations of size `n` with last value `k`.
    DownUpLastIsK,
    /// Down-up permutations of size `n + 1` with first value `k + 1`.
    DownUpShiftedFirstIsKPlusOne,
}

impl Candidate {
    pub const ALL: [Candidate; 5] = [
        Candidate::UpDownFirstIsKPlusOne,
        Candidate::UpDownFirstIsK,
        Candidate::DownUpFirstIsK,
        Candidate::DownUpLastIsK,
        Candidate::DownUpShiftedFirstIsKPlusOne,
    ];

    /// Claim id of the verdict testing this candidate.
    pub fn claim_id(self) -> &'static str {
        match self {
            Candidate::UpDownFirstIsKPlusOne => "ENT-DEF",
            Candidate::UpDownFirstIsK => "ENT-DEF-B",
            Candidate::DownUpFirstIsK => "ENT-DEF-C",
            Candidate::DownUpLastIsK => "ENT-DEF-D",
            Candidate::DownUpShiftedFirstIsKPlusOne => "ENT-DEF-E",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Candidate::UpDownFirstIsKPlusOne => "up-down, size n, first value k+1",
            Candidate::UpDownFirstIsK => "up-down, size n, first value k",
            Candidate::DownUpFirstIsK => "down-up, size n, first value k",
            Candidate::DownUpLastIsK => "down-up, size n, last value k",
            Candidate::DownUpShiftedFirstIsKPlusOne => "down-up, size n+1, first value k+1",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Candidate::UpDownFirstIsKPlusOne),
            "b" => Ok(Candidate::UpDownFirstIsK),
            "c" => Ok(Candidate::DownUpFirstIsK),
            "d" => Ok(Candidate::DownUpLastIsK),
            "e" => Ok(Candidate::DownUpShiftedFirstIsKPlusOne),
            other => Err(Error::InvalidArgument(format!("unknown Entringer candidate {other:?} (expected a-e)"))),
        }
    }

    /// Permutations inspected for row `n`, all of one size and alternation
    /// direction (the size-0 "alternating" class is just the empty word).
    fn members(self, n: usize) -> Result<Vec<Perm>> {
        let (size, updown) = match self {
            Candidate::UpDownFirstIsKPlusOne | Candidate::UpDownFirstIsK => (n, true),
            Candidate::DownUpFirstIsK | Candidate::DownUpLastIsK => (n, false),
            Candidate::DownUpShiftedFirstIsKPlusOne => (n + 1, false),
        };
        let tag = match (updown, size % 2 == 1) {
            (true, _) => ClassTag::Ascending,
            (false, true) => ClassTag::DownUpOdd,
            (false, false) => ClassTag::DEven,
        };
        Ok(enumerate_class(tag, size)?.collect())
    }

    /// Index `k` a member is counted under, if any.
    fn index_of(self, p: &Perm) -> Option<usize> {
        let w = p.values();
        let (v, offset) = match self {
            Candidate::UpDownFirstIsKPlusOne | Candidate::DownUpShiftedFirstIsKPlusOne => (*w.first()?, 1),
            Candidate::UpDownFirstIsK | Candidate::DownUpFirstIsK => (*w.first()?, 0),
            Candidate::DownUpLastIsK => (*w.last()?, 0),
        };
        (v as usize).checked_sub(offset)
    }

    /// Row `n` of the triangle this candidate would produce.
    pub fn row(self, n: usize) -> Result<Vec<u64>> {
        check_rows(n)?;
        let mut row = vec![0u64; n + 1];
        for p in self.members(n)? {
            if let Some(k) = self.index_of(&p).filter(|&k| k <= n) {
                row[k] += 1;
            }
        }
        Ok(row)
    }
}

fn check_rows(n: usize) -> Result<()> {
    if n > MAX_CANDIDATE_ROWS {
        return Err(Error::CapExceeded { requested: n, cap: MAX_CANDIDATE_ROWS });
    }
    Ok(())
}

/// `sum w^{stat(p, v)}` over the permutations a candidate counts at `(n, j)`.
pub fn weighted_entringer<T: Scalar>(n: usize, j: usize, v: StatVariant, candidate: Candidate) -> Result<Poly<T>> {
    check_rows(n)?;
    let mut counts: Vec<u64> = Vec::new();
    for p in candidate.members(n)? {
        if candidate.index_of(&p) == Some(j) {
            let s = stat(&p, v);
            if counts.len() <= s {
                counts.resize(s + 1, 0);
            }
            counts[s] += 1;
        }
    }
    Ok(Poly::new(counts.into_iter().map(|c| T::from_u64(c).expect("count fits")).collect()))
}

/// Compare every candidate definition with the recurrence triangle on rows
/// `0..=n_rows`; one verdict per candidate.
pub fn definition_candidates_check(n_rows: usize) -> Result<Vec<ClaimVerdict>> {
    check_rows(n_rows)?;
    let tri = build_triangle(n_rows);
    Candidate::ALL
        .into_iter()
        .map(|cand| {
            let mut b = verify::builder(cand.claim_id())
                .param("candidate", cand.describe())
                .param("rows", format!("0..={n_rows}"));
            let mut matching_rows = Vec::new();
            for n in 0..=n_rows {
                let row = cand.row(n)?;
                let before = b.discrepancy_count();
                for (k, &count) in row.iter().enumerate() {
                    b.compare(format!("E({n},{k})"), &tri.get(n, k)?.to_string(), &count.to_string());
                }
                if b.discrepancy_count() == before {
                    matching_rows.push(n.to_string());
                }
            }
            b.measurement(
                "matching rows",
                format!("0..={n_rows}"),
                if matching_rows.is_empty() { "none".to_string() } else { matching_rows.join(",") },
            );
            Ok(b.finish())
        })
        .collect()
}

/// Recurrence rows `0..=5` against the printed reference table.
pub fn table_verdict() -> ClaimVerdict {
    let tri = build_triangle(5);
    let mut b = verify::builder("ENT-TABLE").param("rows", "0..=5");
    for (n, printed) in REFERENCE_ROWS.iter().enumerate() {
        for (k, &v) in printed.iter().enumerate() {
            let got = tri.get(n, k).expect("built").to_string();
            b.compare(format!("E({n},{k})"), &v.to_string(), &got);
        }
    }
    b.finish()
}

/// `sum_{k=0}^{2n} E(2n+1, k)` against the number of odd up-down permutations.
pub fn rowsum_verdict(max_size: usize) -> Result<ClaimVerdict> {
    let tri = build_triangle(max_size + 1);
    let mut b = verify::builder("ENT-ROWSUM").param("max_size", max_size);
    for size in (1..=max_size).step_by(2) {
        let printed_range: BigUint = tri.row(size)?[..size].iter().sum();
        let enumerated = enumerate_class(ClassTag::SOdd, size)?.count();
        b.compare(format!("size {size}"), &enumerated.to_string(), &printed_range.to_string());
        b.measurement(
            format!("size {size}"),
            "full row sum",
            format!("{} (= E({},{}))", tri.row_sum(size)?, size + 1, size + 1),
        );
    }
    Ok(b.finish())
}

/// `E(n, n) = A_n` against the secant-tangent recurrence.
pub fn diagonal_verdict(max_n: usize) -> Result<ClaimVerdict> {
    let tri = build_triangle(max_n);
    let a = andre::a_recurrence(max_n.max(1))?;
    let mut b = verify::builder("ENT-DIAG").param("max_n", max_n);
    for (n, an) in a.iter().enumerate().take(max_n + 1) {
        b.compare(format!("n={n}"), &an.to_string(), &tri.diagonal(n)?.to_string());
    }
    Ok(b.finish())
}
