//! Partitions, dominant weights of SU(n), and dimension formulas.
//!
//! Partitions are kept in GL(n) form (absolute row lengths). The SU(n)
//! normalization that subtracts the last row only happens when converting
//! to fundamental-weight coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count (dimensions, multiplicities).
pub type BigCount = BigUint;

/// Weakly decreasing sequence of nonnegative integers with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `rows` rows of length `cols`; this is the weight `cols·ϖ_rows`.
    pub fn rectangle(cols: u32, rows: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|c| self.0.iter().take_while(|&&r| r as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Parts padded with zeros to exactly `n` entries. Panics if `n < len`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.len());
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::BadPartitionString(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::BadPartitionString(s.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

/// Coefficients `(k_1, …, k_{n-1})` of the dominant weight `Σ k_i ϖ_i` of SU(n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FundamentalCoeffs {
    rank: usize,
    coeffs: Vec<u32>,
}

impl FundamentalCoeffs {
    pub fn new(rank: usize, coeffs: Vec<u32>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::BadRank(rank));
        }
        if coeffs.len() != rank - 1 {
            return Err(Error::CoeffLength {
                rank,
                expected: rank - 1,
                got: coeffs.len(),
            });
        }
        Ok(FundamentalCoeffs { rank, coeffs })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `ϖ_i`, 1-based; zero outside `1..rank`.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.coeffs.get(i - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for FundamentalCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `F(Σ k_i ϖ_i) = V(Σ_{i≥1} k_i, Σ_{i≥2} k_i, …, k_{n-1}, 0)`.
pub fn fund_to_partition(c: &FundamentalCoeffs) -> Partition {
    let mut parts: Vec<u32> = c
        .coeffs
        .iter()
        .rev()
        .scan(0u32, |acc, &k| {
            *acc += k;
            Some(*acc)
        })
        .collect();
    parts.reverse();
    Partition::from_sorted(parts)
}

/// Inverse of [`fund_to_partition`] after subtracting `λ_n` from every row.
pub fn partition_to_fund(lambda: &Partition, n: usize) -> Result<FundamentalCoeffs> {
    if n == 0 {
        return Err(Error::BadRank(n));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            partition: lambda.to_string(),
            len: lambda.len(),
            rank: n,
        });
    }
    let rows = lambda.padded(n);
    let coeffs = rows.windows(2).map(|w| w[0] - w[1]).collect();
    FundamentalCoeffs::new(n, coeffs)
}

/// Normalizes `λ` for SU(n) by subtracting `λ_n` from each row.
pub fn su_normalize(lambda: &Partition, n: usize) -> Result<Partition> {
    Ok(fund_to_partition(&partition_to_fund(lambda, n)?))
}

/// Dimension of the GL(n) irreducible `V(λ)` by the hook-content formula.
///
/// Returns zero when `λ` has more than `n` rows.
pub fn dim_gl(lambda: &Partition, n: usize) -> BigCount {
    if lambda.len() > n {
        return BigCount::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigCount::one();
    let mut den = BigCount::one();
    for (r, &row) in lambda.parts().iter().enumerate() {
        for c in 0..row as usize {
            num *= (n + c - r) as u64;
            let hook = (row as usize - c) + (conj.part(c) as usize - r) - 1;
            den *= hook as u64;
        }
    }
    exact_div(num, den)
}

/// `𝐝_a(b ϖ_c) = ∏_{i≤c} ∏_{j≤b} (a − i + j) / (1 + (c − i) + (b − j))`.
pub fn dim_rect(a: usize, b: usize, c: usize) -> Result<BigCount> {
    if c == 0 || a < c {
        return Err(Error::InvalidParameter(format!(
            "dim_rect needs a ≥ c ≥ 1 (a={a}, c={c})"
        )));
    }
    let mut num = BigCount::one();
    let mut den = BigCount::one();
    for i in 1..=c {
        for j in 1..=b {
            num *= (a - i + j) as u64;
            den *= (1 + (c - i) + (b - j)) as u64;
        }
    }
    Ok(exact_div(num, den))
}

/// All partitions of `size` with at most `max_rows` rows, decreasing lex order.
pub fn partitions_of(size: u32, max_rows: usize) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for v in (1..=cap.min(rem)).rev() {
            cur.push(v);
            rec(rem - v, v, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, max_rows, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size` with at most `max_rows` rows.
pub fn partitions_up_to(max_size: u32, max_rows: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_of(s, max_rows))
        .collect()
}

fn exact_div(num: BigCount, den: BigCount) -> BigCount {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "dimension product is not an integer");
    q
}
