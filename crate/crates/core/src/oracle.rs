//! Brute-force reference computations.
//!
//! Nothing here goes through Littlewood–Richardson tableaux or closed forms:
//! Schur polynomials are expanded into monomials by enumerating semistandard
//! tableaux, multiplied term by term, and brought back to the Schur basis by
//! peeling off leading monomials.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::moduli::CenterWeight;
use crate::partition::Partition;
use crate::schur::SchurExpansion;

/// Default cap on the number of monomials any oracle polynomial may hold.
pub const DEFAULT_MAX_TERMS: usize = 5_000_000;

/// Cap from `GRASSMODULI_MAX_CELLS`, falling back to [`DEFAULT_MAX_TERMS`].
pub fn max_terms() -> usize {
    std::env::var("GRASSMODULI_MAX_CELLS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_TERMS)
}

/// Polynomial in `nvars` variables with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], BigInt::one());
        p
    }

    /// `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    /// Divides every coefficient by `d`, failing if any division is inexact.
    pub fn div_exact(&self, d: i64) -> Result<Self> {
        let d = BigInt::from(d);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !(c % &d).is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "coefficient {c} of {e:?} not divisible by {d}"
                )));
            }
            terms.insert(e.clone(), c / &d);
        }
        Ok(MonomialPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.nvars, other.nvars);
        let cap = max_terms();
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        let mut key = vec![0u32; self.nvars];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for i in 0..self.nvars {
                    key[i] = ea[i] + eb[i];
                }
                match acc.get_mut(&key) {
                    Some(v) => *v += ca * cb,
                    None => {
                        acc.insert(key.clone(), ca * cb);
                        if acc.len() > cap {
                            return Err(Error::ExpansionTooLarge { cap });
                        }
                    }
                }
            }
        }
        Ok(MonomialPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether the polynomial is invariant under the transposition of variables `a`, `b`.
    pub fn invariant_under_swap(&self, a: usize, b: usize) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.swap(a, b);
            self.terms.get(&s) == Some(c)
        })
    }
}

/// `s_λ(x_1, …, x_n)` as the content generating function of semistandard tableaux.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> Result<MonomialPoly> {
    let mut out = MonomialPoly::zero(nvars);
    if lambda.len() > nvars {
        return Ok(out);
    }
    let cap = max_terms();
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut content = vec![0u32; nvars];
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();

    #[allow(clippy::too_many_arguments)]
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        nvars: u32,
        counts: &mut HashMap<Vec<u32>, u64>,
        cap: usize,
    ) -> bool {
        if idx == cells.len() {
            *counts.entry(content.clone()).or_insert(0) += 1;
            return counts.len() <= cap;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above);
        for v in lo..=nvars {
            grid[r][c] = v;
            content[v as usize - 1] += 1;
            let ok = fill(idx + 1, cells, grid, content, nvars, counts, cap);
            content[v as usize - 1] -= 1;
            if !ok {
                return false;
            }
        }
        true
    }

    if !fill(
        0,
        &cells,
        &mut grid,
        &mut content,
        nvars as u32,
        &mut counts,
        cap,
    ) {
        return Err(Error::ExpansionTooLarge { cap });
    }
    out.terms = counts
        .into_iter()
        .map(|(e, c)| (e, BigInt::from(c)))
        .collect();
    Ok(out)
}

/// Substitutes `x_i ↦ x_i²`.
pub fn square_vars(f: &MonomialPoly) -> MonomialPoly {
    MonomialPoly {
        nvars: f.nvars,
        terms: f
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|x| 2 * x).collect(), c.clone()))
            .collect(),
    }
}

/// Re-expands a symmetric polynomial in the Schur basis by repeatedly
/// subtracting `c · s_ν` for the lexicographically largest monomial `x^ν`.
pub fn to_schur_basis(f: &MonomialPoly) -> Result<SchurExpansion> {
    let n = f.nvars;
    let mut rest = f.clone();
    let mut out = SchurExpansion::zero();
    while let Some((lead, c)) = rest
        .terms
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(format!(
                "leading exponent {lead:?} is not a partition"
            )));
        }
        let nu = Partition::new(lead)?;
        let s = schur_poly(&nu, n)?;
        for (e, sc) in &s.terms {
            rest.add_term(e.clone(), -(&c * sc));
        }
        out.add_term(nu, c);
    }
    Ok(out)
}

/// Evaluates a Schur expansion as a polynomial in `nvars` variables.
pub fn expansion_poly(e: &SchurExpansion, nvars: usize) -> Result<MonomialPoly> {
    let mut out = MonomialPoly::zero(nvars);
    for (lambda, c) in e.iter() {
        let s = schur_poly(lambda, nvars)?;
        for (exp, sc) in &s.terms {
            out.add_term(exp.clone(), c * sc);
        }
    }
    Ok(out)
}

/// Symmetric and exterior squares of `V(λ)` from the monomial expansion:
/// `(s_λ(x)² ± s_λ(x²)) / 2`.
pub fn sym_alt_squares(
    lambda: &Partition,
    nvars: usize,
) -> Result<(SchurExpansion, SchurExpansion)> {
    let s = schur_poly(lambda, nvars)?;
    let sq = s.mul(&s)?;
    let psi = square_vars(&s);
    let sym = to_schur_basis(&sq.add(&psi).div_exact(2)?)?;
    let alt = to_schur_basis(&sq.sub(&psi).div_exact(2)?)?;
    Ok((sym, alt))
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=n`.
pub fn ssyt_count(lambda: &Partition, nvars: usize) -> Result<BigInt> {
    Ok(schur_poly(lambda, nvars)?.eval_ones())
}

/// Pairs the lowest weight of `V(λ)` (the reversed, zero-padded partition) with
/// `Y = diag(1/p, …, 1/p, −1/q, …, −1/q)`.
pub fn lowest_weight_pairing(lambda: &Partition, p: usize, q: usize) -> Result<CenterWeight> {
    let n = p + q;
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            partition: lambda.to_string(),
            len: lambda.len(),
            rank: n,
        });
    }
    let mut rev = lambda.padded(n);
    rev.reverse();
    let head: i64 = rev[..p].iter().map(|&x| x as i64).sum();
    let tail: i64 = rev[p..].iter().map(|&x| x as i64).sum();
    let w = Ratio::new(head, p as i64) - Ratio::new(tail, q as i64);
    Ok(CenterWeight::new(*w.numer(), *w.denom()))
}

/// Whether every coefficient is nonnegative.
pub fn is_nonnegative(e: &SchurExpansion) -> bool {
    e.iter().all(|(_, c)| !c.is_negative())
}
