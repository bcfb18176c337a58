//! Arithmetic in the Schur basis of the representation ring of GL(n).

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::littlewood::{lr_coefficient, lr_product};
use crate::partition::{dim_gl, Partition};

/// Finite integer combination `Σ c_λ s_λ`. Zero coefficients are never stored;
/// iteration runs over partitions in decreasing lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    /// The single Schur function `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurExpansion { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut e = Self::zero();
        for (p, c) in iter {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order of partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Partitions with nonzero coefficient, decreasing lex order.
    pub fn support(&self) -> Vec<Partition> {
        self.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }

    /// Drops terms with more than `max_rows` rows.
    pub fn truncate(&self, max_rows: usize) -> Self {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= max_rows)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Σ c_λ dim V(λ)` for GL(n).
    pub fn dimension(&self, n: usize) -> BigInt {
        self.terms
            .iter()
            .map(|(p, c)| c * BigInt::from(dim_gl(p, n)))
            .sum()
    }

    /// Divides every coefficient by two, failing on odd or negative results.
    fn halve(self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (p, c) in self.terms {
            let (q, r) = c.div_rem(&BigInt::from(2));
            if !r.is_zero() || q.is_negative() {
                return Err(Error::Halving {
                    partition: p.to_string(),
                    coeff: c.to_string(),
                });
            }
            if !q.is_zero() {
                terms.insert(p, q);
            }
        }
        Ok(SchurExpansion { terms })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("expansion serializes")
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (p, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if c.sign() == Sign::Minus {
                write!(f, "\u{2212}{}·[{p}]", c.magnitude())?;
            } else {
                write!(f, "{c}·[{p}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    partition: Partition,
    coeff: String,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<TermRecord> = self
            .iter()
            .map(|(p, c)| TermRecord {
                partition: p.clone(),
                coeff: c.to_string(),
            })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(d)?;
        let mut e = SchurExpansion::zero();
        for r in recs {
            let c: BigInt = r.coeff.parse().map_err(serde::de::Error::custom)?;
            e.add_term(r.partition, c);
        }
        Ok(e)
    }
}

/// Bilinear product in the Schur basis, discarding partitions with more than `max_rows` rows.
pub fn multiply(a: &SchurExpansion, b: &SchurExpansion, max_rows: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (la, ca) in &a.terms {
        for (lb, cb) in &b.terms {
            let coeff = ca * cb;
            for (nu, m) in lr_product(la, lb, max_rows) {
                out.add_term(nu, &coeff * BigInt::from(m));
            }
        }
    }
    out
}

/// `s_λ · s_λ` restricted to `max_rows` rows.
pub fn square(lambda: &Partition, max_rows: usize) -> SchurExpansion {
    let s = SchurExpansion::schur(lambda.clone());
    multiply(&s, &s, max_rows)
}

/// Schur expansion of `s_λ(x_1², …, x_n²)` with `n = max_rows`.
///
/// Uses the 2-quotient rule: the coefficient of `s_μ` vanishes unless `μ` has
/// empty 2-core, in which case it is `ε(μ) · c^λ_{μ⁰ μ¹}` where `(μ⁰, μ¹)` is the
/// 2-quotient of `μ` and `ε(μ) = ±1` its domino sign.
pub fn adams2(lambda: &Partition, max_rows: usize) -> SchurExpansion {
    let subs = subpartitions(lambda);
    let total = lambda.size();
    let mut out = SchurExpansion::zero();
    for a in &subs {
        for b in subs.iter().filter(|b| a.size() + b.size() == total) {
            let c = lr_coefficient(a, b, lambda);
            if c.is_zero() {
                continue;
            }
            let (mu, sign) = from_two_quotient(a, b);
            if mu.len() > max_rows {
                continue;
            }
            out.add_term(mu, BigInt::from(sign) * BigInt::from(c));
        }
    }
    out
}

/// `S²V(λ) = (s_λ² + ψ²s_λ) / 2`.
pub fn sym_square(lambda: &Partition, max_rows: usize) -> Result<SchurExpansion> {
    square(lambda, max_rows)
        .add(&adams2(lambda, max_rows))
        .halve()
}

/// `Λ²V(λ) = (s_λ² − ψ²s_λ) / 2`.
pub fn alt_square(lambda: &Partition, max_rows: usize) -> Result<SchurExpansion> {
    square(lambda, max_rows)
        .sub(&adams2(lambda, max_rows))
        .halve()
}

/// Partitions whose diagram fits inside `lambda`.
fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &[u32], row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for v in 0..=cap.min(lambda[row]) {
            cur.push(v);
            rec(lambda, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Rebuilds the partition with empty 2-core and 2-quotient `(q0, q1)` from its
/// beta-set on a two-runner abacus, together with its domino sign.
fn from_two_quotient(q0: &Partition, q1: &Partition) -> (Partition, i32) {
    let m = q0.len().max(q1.len());
    let mut beta: Vec<(u64, u8)> = Vec::with_capacity(2 * m);
    for (runner, q) in [(0u8, q0), (1u8, q1)] {
        for i in 0..m {
            let pos = (q.part(i) as u64) + (m - 1 - i) as u64;
            beta.push((2 * pos + runner as u64, runner));
        }
    }
    beta.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
    let len = 2 * m;
    let parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &(b, _))| (b - (len - 1 - i) as u64) as u32)
        .collect();
    // inversions relative to "runner 0 beads first", normalized by the empty partition
    let mut inversions = 0usize;
    let mut ones_seen = 0usize;
    for &(_, r) in &beta {
        if r == 1 {
            ones_seen += 1;
        } else {
            inversions += ones_seen;
        }
    }
    let core_inversions = m * (m + 1) / 2;
    let sign = if (inversions + core_inversions).is_multiple_of(2) {
        1
    } else {
        -1
    };
    (Partition::from_sorted(parts), sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn e(terms: &[(&[u32], i64)]) -> SchurExpansion {
        SchurExpansion::from_terms(terms.iter().map(|(v, c)| (p(v), BigInt::from(*c))))
    }

    #[test]
    fn product_examples() {
        assert_eq!(
            square(&p(&[1, 1]), 4),
            e(&[(&[2, 2], 1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], 1)])
        );
        for k in 0..5u32 {
            let expect =
                SchurExpansion::from_terms((0..=k).map(|i| (p(&[2 * k - i, i]), BigInt::one())));
            assert_eq!(square(&p(&[k]), 2), expect);
        }
        let lam = p(&[3, 1]);
        assert_eq!(
            multiply(
                &SchurExpansion::one(),
                &SchurExpansion::schur(lam.clone()),
                3
            ),
            SchurExpansion::schur(lam)
        );
    }

    #[test]
    fn adams_examples() {
        assert_eq!(adams2(&p(&[1]), 3), e(&[(&[2], 1), (&[1, 1], -1)]));
        assert_eq!(
            adams2(&p(&[1, 1]), 4),
            e(&[(&[2, 2], 1), (&[2, 1, 1], -1), (&[1, 1, 1, 1], 1)])
        );
        assert_eq!(adams2(&Partition::empty(), 3), SchurExpansion::one());
    }

    #[test]
    fn sym_alt_examples() {
        assert_eq!(
            sym_square(&p(&[1, 1]), 4).unwrap(),
            e(&[(&[2, 2], 1), (&[1, 1, 1, 1], 1)])
        );
        assert_eq!(alt_square(&p(&[1, 1]), 4).unwrap(), e(&[(&[2, 1, 1], 1)]));
        assert_eq!(alt_square(&p(&[1]), 3).unwrap(), e(&[(&[1, 1], 1)]));
        assert_eq!(
            sym_square(&Partition::empty(), 3).unwrap(),
            SchurExpansion::one()
        );
        assert!(alt_square(&Partition::empty(), 3).unwrap().is_zero());
        for k in 0..=4u32 {
            let expect = SchurExpansion::from_terms(
                (0..=k)
                    .step_by(2)
                    .map(|i| (p(&[2 * k - i, i]), BigInt::one())),
            );
            assert_eq!(sym_square(&p(&[k]), 2).unwrap(), expect, "k={k}");
        }
    }

    #[test]
    fn halving_rejects_odd() {
        let bad = e(&[(&[1], 3)]);
        assert!(matches!(bad.halve(), Err(Error::Halving { .. })));
        let neg = e(&[(&[1], -2)]);
        assert!(neg.halve().is_err());
    }

    #[test]
    fn text_and_json() {
        let x = e(&[(&[2, 2], 1), (&[2, 1, 1], -1), (&[1, 1, 1, 1], 1)]);
        assert_eq!(x.to_string(), "1·[2,2] \u{2212}1·[2,1,1] 1·[1,1,1,1]");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(
            j,
            r#"[{"partition":[2,2],"coeff":"1"},{"partition":[2,1,1],"coeff":"-1"},{"partition":[1,1,1,1],"coeff":"1"}]"#
        );
        let back: SchurExpansion = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
        assert_eq!(SchurExpansion::zero().to_string(), "0");
    }

    #[test]
    fn dimension_identities() {
        for n in 1..=6usize {
            for lam in crate::partition::partitions_up_to(8, n) {
                let d = BigInt::from(dim_gl(&lam, n));
                let sym = sym_square(&lam, n).unwrap();
                let alt = alt_square(&lam, n).unwrap();
                assert_eq!(sym.dimension(n), &d * (&d + 1) / 2, "{lam} n={n}");
                assert_eq!(alt.dimension(n), &d * (&d - 1) / 2, "{lam} n={n}");
                assert_eq!(sym.add(&alt), square(&lam, n));
            }
        }
    }
}
