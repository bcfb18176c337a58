//! The square of the `q × k` rectangle under SU(p+q).
//!
//! Every component of `F(kϖ_q) ⊗ F(kϖ_q)` is indexed by `i = (i_1, …, i_q)`
//! with `Σ i_α ≤ k`, and has highest weight
//!
//! ```text
//! (2k − i_q, 2k − (i_q + i_{q−1}), …, 2k − Σ i_α,  Σ i_α, …, i_{q−1} + i_q, i_q)
//! ```
//!
//! The reversed parameters `j_α = i_{q−α}` (α = 0, …, q−1) are carried alongside.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::littlewood::{lr_tableaux, LrTableau};
use crate::partition::{fund_to_partition, partition_to_fund, FundamentalCoeffs, Partition};

/// Checks `p ≥ q ≥ 1`.
pub fn check_pq(p: usize, q: usize) -> Result<()> {
    if q == 0 || q > p {
        return Err(Error::BadPq { p, q });
    }
    Ok(())
}

/// One irreducible summand of the rectangle square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectSquareComponent {
    pub p: usize,
    pub q: usize,
    pub k: u32,
    /// `(i_1, …, i_q)`
    pub i: Vec<u32>,
    /// `(j_0, …, j_{q−1})` with `j_α = i_{q−α}`
    pub j: Vec<u32>,
    pub partition: Partition,
    pub fund: FundamentalCoeffs,
}

impl RectSquareComponent {
    pub fn from_i(p: usize, q: usize, k: u32, i: Vec<u32>) -> Result<Self> {
        check_pq(p, q)?;
        if i.len() != q {
            return Err(Error::InvalidParameter(format!(
                "expected {q} i-parameters, got {}",
                i.len()
            )));
        }
        let total: u32 = i.iter().sum();
        if total > k {
            return Err(Error::InvalidParameter(format!(
                "Σ i = {total} exceeds k = {k}"
            )));
        }
        // suffix[a] = i_{a+1} + … + i_q  (1-based i)
        let mut suffix = vec![0u32; q + 1];
        for a in (0..q).rev() {
            suffix[a] = suffix[a + 1] + i[a];
        }
        let mut parts = Vec::with_capacity(2 * q);
        for r in 1..=q {
            parts.push(2 * k - suffix[q - r]);
        }
        parts.extend_from_slice(&suffix[..q]);
        let partition = Partition::new(parts)?;
        let fund = partition_to_fund(&partition, p + q)?;
        let j = (0..q).map(|a| i[q - 1 - a]).collect();
        Ok(RectSquareComponent {
            p,
            q,
            k,
            i,
            j,
            partition,
            fund,
        })
    }

    pub fn from_j(p: usize, q: usize, k: u32, j: &[u32]) -> Result<Self> {
        let i = (1..=q)
            .map(|a| j.get(q - a).copied().unwrap_or(0))
            .collect();
        Self::from_i(p, q, k, i)
    }

    /// The fundamental-weight label written in terms of `j`:
    /// `Σ_{i<q} j_i ϖ_i + (2k − 2Σ j) ϖ_q + Σ_{i≤q} j_{q−i} ϖ_{q+i}`,
    /// with weights past `ϖ_{p+q−1}` dropped.
    pub fn label_from_j(&self) -> FundamentalCoeffs {
        let n = self.p + self.q;
        let q = self.q;
        let total: u32 = self.j.iter().sum();
        let mut c = vec![0u32; 2 * q];
        c[..q - 1].copy_from_slice(&self.j[1..q]);
        c[q - 1] = 2 * self.k - 2 * total;
        for i in 1..=q {
            c[q + i - 1] = self.j[q - i];
        }
        c.resize(n - 1, 0);
        FundamentalCoeffs::new(n, c).expect("length fixed above")
    }
}

/// All `(i_1, …, i_q)` with nonnegative entries summing to at most `k`, in lexicographic order.
pub fn i_vectors(q: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(q: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(q, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(q, k, &mut Vec::new(), &mut out);
    out
}

/// Components of `F(kϖ_q)^{⊗2}` for SU(p+q), each with multiplicity one,
/// sorted by decreasing partition.
pub fn rect_square_closed_form(p: usize, q: usize, k: u32) -> Result<Vec<RectSquareComponent>> {
    check_pq(p, q)?;
    let mut comps = i_vectors(q, k)
        .into_iter()
        .map(|i| RectSquareComponent::from_i(p, q, k, i))
        .collect::<Result<Vec<_>>>()?;
    comps.sort_by(|a, b| b.partition.cmp(&a.partition));
    Ok(comps)
}

/// Outcome of checking the parameter collapse on every LR filling of the rectangle square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub p: usize,
    pub q: usize,
    pub k: u32,
    pub fillings: usize,
    /// Distinct `i` vectors read off the fillings, lexicographic.
    pub parameters: Vec<Vec<u32>>,
    /// Human-readable descriptions of fillings that break the collapse.
    pub violations: Vec<String>,
}

impl WitnessReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates every LR tableau for the rectangle square and checks that its
/// counts `x^i_j` (letter `i` in row `j`) are determined by `i_r = x^q_{q+r}`:
///
/// - `x^λ_{q+μ} = x^q_{q+r}` whenever `r = q + μ − λ ∈ [1, q]`;
/// - `x^i_i = k − Σ_{r=q+1−i}^{q} x^q_{q+r}`;
/// - every other `x^i_j` vanishes;
/// - the outer shape is the closed-form partition for that `i`.
pub fn verify_lr_rules_witness(p: usize, q: usize, k: u32) -> Result<WitnessReport> {
    check_pq(p, q)?;
    let rect = Partition::rectangle(k, q);
    let tableaux = lr_tableaux(&rect, &rect, p + q);
    let mut parameters = Vec::new();
    let mut violations = Vec::new();
    for t in &tableaux {
        let i: Vec<u32> = (1..=q).map(|r| t.count(q, q + r)).collect();
        let mut bad = collapse_violations(t, q, k, &i);
        match RectSquareComponent::from_i(p, q, k, i.clone()) {
            Ok(c) if c.partition == t.outer => {}
            Ok(c) => bad.push(format!(
                "shape {} but closed form gives {}",
                t.outer, c.partition
            )),
            Err(e) => bad.push(format!("parameters {i:?} invalid: {e}")),
        }
        if !bad.is_empty() {
            violations.push(format!("filling of [{}]: {}", t.outer, bad.join("; ")));
        }
        parameters.push(i);
    }
    parameters.sort();
    parameters.dedup();
    Ok(WitnessReport {
        p,
        q,
        k,
        fillings: tableaux.len(),
        parameters,
        violations,
    })
}

fn collapse_violations(t: &LrTableau, q: usize, k: u32, i: &[u32]) -> Vec<String> {
    let mut bad = Vec::new();
    let max_row = t.counts.iter().map(|r| r.len()).max().unwrap_or(0);
    for letter in 1..=q {
        for row in 1..=max_row.max(2 * q) {
            let x = t.count(letter, row);
            let expected = if row == letter {
                let tail: u32 = i[q - letter..].iter().sum();
                k - tail
            } else if row > q && row <= q + letter {
                let mu = row - q;
                i[q + mu - letter - 1]
            } else {
                0
            };
            if x != expected {
                bad.push(format!("x^{letter}_{row} = {x}, expected {expected}"));
            }
        }
    }
    bad
}

/// The conventional skew-component label `(2k−2)ϖ_q + ϖ_{q+1}` for SU(p+q),
/// dropping `ϖ_{q+1}` when it is out of range.
pub fn skew_label(p: usize, q: usize, k: u32) -> FundamentalCoeffs {
    let n = p + q;
    let mut c = vec![0u32; n - 1];
    c[q - 1] = 2 * k.saturating_sub(1);
    if q < n - 1 {
        c[q] = 1;
    }
    FundamentalCoeffs::new(n, c).expect("rank p+q")
}

/// The partition `fund_to_partition(2kϖ_q)`, i.e. the `q × 2k` rectangle.
pub fn doubled_rectangle(q: usize, k: u32) -> Partition {
    Partition::rectangle(2 * k, q)
}

/// Check used by the `p = q` specialization: the SU(2q) reduction of the GL
/// partition equals the partition of the label with `ϖ_{2q}` removed.
pub fn label_partition(c: &RectSquareComponent) -> Partition {
    fund_to_partition(&c.label_from_j())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_two_one() {
        let comps = rect_square_closed_form(2, 2, 1).unwrap();
        let got: Vec<_> = comps
            .iter()
            .map(|c| (c.partition.clone(), c.i.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (p(&[2, 2]), vec![0, 0]),
                (p(&[2, 1, 1]), vec![1, 0]),
                (p(&[1, 1, 1, 1]), vec![0, 1]),
            ]
        );
        assert_eq!(comps[1].j, vec![0, 1]);
        assert_eq!(comps[2].j, vec![1, 0]);
    }

    #[test]
    fn single_row() {
        for pp in 1..5 {
            for k in 0..5u32 {
                let comps = rect_square_closed_form(pp, 1, k).unwrap();
                let parts: Vec<_> = comps.iter().map(|c| c.partition.clone()).collect();
                let expect: Vec<_> = (0..=k).map(|i| p(&[2 * k - i, i])).collect();
                assert_eq!(parts, expect);
            }
        }
    }

    #[test]
    fn trivial_when_k_zero() {
        let comps = rect_square_closed_form(3, 2, 0).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].partition.is_empty());
    }

    #[test]
    fn rejects_q_greater_than_p() {
        assert!(matches!(
            rect_square_closed_form(2, 3, 1),
            Err(Error::BadPq { .. })
        ));
        assert!(rect_square_closed_form(2, 0, 1).is_err());
    }

    #[test]
    fn count_is_binomial() {
        for q in 1..=4usize {
            for k in 0..=4u32 {
                let n = rect_square_closed_form(4, q, k).unwrap().len();
                assert_eq!(n as u64, binomial(k as u64 + q as u64, q as u64));
            }
        }
    }

    #[test]
    fn label_matches_computed_fund_when_p_exceeds_q() {
        for (pp, q) in [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 3)] {
            for k in 0..=3 {
                for c in rect_square_closed_form(pp, q, k).unwrap() {
                    assert_eq!(c.label_from_j(), c.fund, "p={pp} q={q} {:?}", c.i);
                }
            }
        }
    }

    #[test]
    fn witness_small_cases() {
        let r = verify_lr_rules_witness(2, 2, 1).unwrap();
        assert_eq!(r.fillings, 3);
        assert!(r.ok(), "{:?}", r.violations);
        let r = verify_lr_rules_witness(3, 2, 2).unwrap();
        assert_eq!(r.parameters.len(), 6);
        assert!(r.ok(), "{:?}", r.violations);
        let r = verify_lr_rules_witness(4, 1, 1).unwrap();
        assert_eq!(r.fillings, 2);
        assert_eq!(r.parameters, vec![vec![0], vec![1]]);
    }

    #[test]
    fn witness_sweep() {
        for q in 1..=4usize {
            for k in 0..=3u32 {
                let r = verify_lr_rules_witness(q, q, k).unwrap();
                assert!(r.ok(), "q={q} k={k}: {:?}", r.violations);
                assert_eq!(r.fillings as u64, binomial(k as u64 + q as u64, q as u64));
            }
        }
    }

    #[test]
    fn skew_label_shape() {
        assert_eq!(skew_label(2, 2, 1).coeffs(), &[0, 0, 1]);
        assert_eq!(skew_label(3, 2, 2).coeffs(), &[0, 2, 1, 0]);
    }
}
