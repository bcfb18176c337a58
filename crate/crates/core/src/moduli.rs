//! Center weights, the GS filter, and the dimension of `V_k`.
//!
//! The U(1) center of `S(U(p) × U(q))` is generated by
//! `Y = diag(y^{1/p}, …, y^{1/p}, y^{−1/q}, …, y^{−1/q})`. Each component of the
//! rectangle square is tagged with the exponent by which `Y` scales its
//! lowest-weight vector, and compared with the weight `−2k + 1/p + 1/q` of
//! `GS(𝔪V₀, V₀)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{dim_gl, dim_rect, su_normalize, BigCount, FundamentalCoeffs, Partition};
use crate::rect::{
    check_pq, doubled_rectangle, rect_square_closed_form, skew_label, RectSquareComponent,
};
use crate::schur::{alt_square, sym_square};

/// Exact rational exponent of `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CenterWeight(Ratio<i64>);

impl CenterWeight {
    pub fn new(num: i64, den: i64) -> Self {
        CenterWeight(Ratio::new(num, den))
    }

    pub fn integer(n: i64) -> Self {
        CenterWeight(Ratio::from_integer(n))
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    /// Reduced numerator.
    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Reduced (positive) denominator.
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Numerator over the fixed denominator `p·q`.
    pub fn over_pq(&self, p: usize, q: usize) -> (i64, i64) {
        let pq = (p * q) as i64;
        debug_assert_eq!(pq % self.denom(), 0);
        (self.numer() * (pq / self.denom()), pq)
    }
}

impl std::ops::Add for CenterWeight {
    type Output = CenterWeight;
    fn add(self, rhs: Self) -> Self {
        CenterWeight(self.0 + rhs.0)
    }
}

impl std::ops::Sub for CenterWeight {
    type Output = CenterWeight;
    fn sub(self, rhs: Self) -> Self {
        CenterWeight(self.0 - rhs.0)
    }
}

impl fmt::Display for CenterWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRecord {
    num: i64,
    den: i64,
}

impl Serialize for CenterWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightRecord {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CenterWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WeightRecord::deserialize(d)?;
        if r.den <= 0 {
            return Err(serde::de::Error::custom("denominator must be positive"));
        }
        Ok(CenterWeight::new(r.num, r.den))
    }
}

fn frac(num: i64, den: usize) -> Ratio<i64> {
    Ratio::new(num, den as i64)
}

/// `−(1/q) Σ_{i=1}^{q} i·k_i − (1/p) Σ_{j=1}^{p−1} (p−j)·k_{q+j}`.
pub fn center_weight_of_component(
    fund: &FundamentalCoeffs,
    p: usize,
    q: usize,
) -> Result<CenterWeight> {
    check_fund(fund, p, q)?;
    let mut w = Ratio::zero();
    for i in 1..=q {
        w -= frac(i as i64 * fund.get(i) as i64, q);
    }
    for j in 1..p {
        w -= frac((p - j) as i64 * fund.get(q + j) as i64, p);
    }
    Ok(CenterWeight(w))
}

/// The same sum with the `(p−j)` weights replaced by one:
/// `−(1/q) Σ i·k_i − (1/p) Σ_{j=1}^{p−1} k_{q+j}`. Kept only to show that it
/// disagrees with the direct lowest-weight pairing.
pub fn center_weight_unweighted_tail(
    fund: &FundamentalCoeffs,
    p: usize,
    q: usize,
) -> Result<CenterWeight> {
    check_fund(fund, p, q)?;
    let mut w = Ratio::zero();
    for i in 1..=q {
        w -= frac(i as i64 * fund.get(i) as i64, q);
    }
    for j in 1..p {
        w -= frac(fund.get(q + j) as i64, p);
    }
    Ok(CenterWeight(w))
}

fn check_fund(fund: &FundamentalCoeffs, p: usize, q: usize) -> Result<()> {
    check_pq(p, q)?;
    if fund.rank() != p + q {
        return Err(Error::InvalidParameter(format!(
            "weight has rank {}, expected p+q = {}",
            fund.rank(),
            p + q
        )));
    }
    Ok(())
}

/// `−2k + ((p+q)/(pq)) Σ_{i=1}^{q−1} (q−i) j_i + (1 + q/p) j_0`.
pub fn lowest_weight_closed_form(j: &[u32], p: usize, q: usize, k: u32) -> Result<CenterWeight> {
    check_pq(p, q)?;
    if j.len() != q {
        return Err(Error::InvalidParameter(format!(
            "expected {q} j-parameters, got {}",
            j.len()
        )));
    }
    if j.iter().sum::<u32>() > k {
        return Err(Error::InvalidParameter("Σ j exceeds k".into()));
    }
    let weighted: i64 = (1..q).map(|i| (q - i) as i64 * j[i] as i64).sum();
    let w = Ratio::from_integer(-2 * k as i64)
        + frac((p + q) as i64 * weighted, p * q)
        + frac((p + q) as i64 * j[0] as i64, p);
    Ok(CenterWeight(w))
}

/// `−2k + 1/p + 1/q`, the weight of `GS(𝔪V₀, V₀)`.
pub fn gs_threshold(p: usize, q: usize, k: u32) -> Result<CenterWeight> {
    check_pq(p, q)?;
    Ok(CenterWeight(
        Ratio::from_integer(-2 * k as i64) + frac(1, p) + frac(1, q),
    ))
}

/// The integer form of the filter: `Σ_{i=0}^{q−1} (q−i) j_i ≤ 1`.
///
/// For `q ≥ 2` this is `j_0 = 0` together with
/// `(q−1)j_1 + (q−2)j_2 + … + j_{q−1} ≤ 1`; for `q = 1` it reads `j_0 ≤ 1`.
pub fn gs_inequality(j: &[u32]) -> bool {
    let q = j.len();
    let s: u64 = j
        .iter()
        .enumerate()
        .map(|(i, &v)| (q - i) as u64 * v as u64)
        .sum();
    s <= 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Symmetric => "sym",
            Parity::Antisymmetric => "alt",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub component: RectSquareComponent,
    pub parity: Parity,
    #[serde(with = "crate::bigstr")]
    pub dimension: BigCount,
    pub center_weight: CenterWeight,
    pub passes_gs_filter: bool,
}

/// Decomposes the square, attaching parity, dimension, center weight and GS flag.
/// Sorted by decreasing partition.
pub fn classify_components(p: usize, q: usize, k: u32) -> Result<Vec<ComponentReport>> {
    check_pq(p, q)?;
    let n = p + q;
    let rect = Partition::rectangle(k, q);
    let sym = sym_square(&rect, n)?;
    let alt = alt_square(&rect, n)?;
    let threshold = gs_threshold(p, q, k)?;
    let comps = rect_square_closed_form(p, q, k)?;
    let mut out = Vec::with_capacity(comps.len());
    for c in comps {
        let in_sym = sym.coeff(&c.partition);
        let in_alt = alt.coeff(&c.partition);
        let parity = match (
            in_sym.is_one(),
            in_alt.is_one(),
            in_sym.is_zero(),
            in_alt.is_zero(),
        ) {
            (true, _, _, true) => Parity::Symmetric,
            (_, true, true, _) => Parity::Antisymmetric,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "component [{}] has sym/alt multiplicities {in_sym}/{in_alt}",
                    c.partition
                )))
            }
        };
        let center_weight = center_weight_of_component(&c.fund, p, q)?;
        out.push(ComponentReport {
            dimension: dim_gl(&c.partition, n),
            passes_gs_filter: center_weight <= threshold,
            center_weight,
            parity,
            component: c,
        });
    }
    Ok(out)
}

/// Components that pass the GS filter and lie in the symmetric square.
pub fn gs_intersection_sym(p: usize, q: usize, k: u32) -> Result<Vec<Partition>> {
    Ok(classify_components(p, q, k)?
        .into_iter()
        .filter(|r| r.passes_gs_filter && r.parity == Parity::Symmetric)
        .map(|r| r.component.partition)
        .collect())
}

/// Symmetric components with center weight at most `−2k`, the weight of `GS(V₀, V₀)`.
pub fn gs_v0v0_intersection_sym(p: usize, q: usize, k: u32) -> Result<Vec<Partition>> {
    let bound = CenterWeight::integer(-2 * k as i64);
    Ok(classify_components(p, q, k)?
        .into_iter()
        .filter(|r| r.center_weight <= bound && r.parity == Parity::Symmetric)
        .map(|r| r.component.partition)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliFlags {
    pub routes_agree: bool,
    pub gs_singleton: bool,
    #[serde(rename = "skew_label_matches_paper")]
    pub skew_label_matches: bool,
}

/// Dimension bookkeeping for degree-`k` embeddings of `Gr_p(C^{p+q})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliReport {
    pub p: usize,
    pub q: usize,
    pub k: u32,
    /// `dim F(kϖ_q) = dim H⁰(O(k))`.
    pub dim_h0: BigCount,
    pub dim_sym_square: BigCount,
    pub dim_f2k: BigCount,
    /// `dim V_k` from the hook formula.
    pub dim_vk: BigInt,
    /// `dim V_k` summed over symmetric components outside the GS intersection.
    pub dim_vk_components: BigInt,
    /// `N = dim V_k − 2`.
    pub n_target: BigInt,
    /// `dim V_k − 1`, valid for a generic S¹-orbit.
    pub dim_image_moduli: BigInt,
    pub gs_sym_components: Vec<Partition>,
    pub gs_v0v0_components: Vec<Partition>,
    /// Computed coefficients of the antisymmetric component with `j_{q−1} = 1`.
    pub skew_component: Option<FundamentalCoeffs>,
    /// The label `(2k−2)ϖ_q + ϖ_{q+1}` it is conventionally given.
    pub skew_label: FundamentalCoeffs,
    pub flags: ModuliFlags,
    pub notes: Vec<String>,
}

/// Builds the report, computing `dim V_k` two ways.
pub fn moduli_report(p: usize, q: usize, k: u32) -> Result<ModuliReport> {
    check_pq(p, q)?;
    let n = p + q;
    let d = dim_rect(n, k as usize, q)?;
    let dim_f2k = dim_rect(n, 2 * k as usize, q)?;
    let dim_sym_square = &d * (&d + 1u32) / 2u32;
    let dim_vk = BigInt::from(dim_sym_square.clone()) - BigInt::from(dim_f2k.clone());

    let reports = classify_components(p, q, k)?;
    let gs: Vec<Partition> = reports
        .iter()
        .filter(|r| r.passes_gs_filter && r.parity == Parity::Symmetric)
        .map(|r| r.component.partition.clone())
        .collect();
    let sym_total: BigInt = reports
        .iter()
        .filter(|r| r.parity == Parity::Symmetric)
        .map(|r| BigInt::from(r.dimension.clone()))
        .sum();
    let gs_total: BigInt = gs.iter().map(|p| BigInt::from(dim_gl(p, n))).sum();
    let dim_vk_components = sym_total - gs_total;

    let v0v0_bound = CenterWeight::integer(-2 * k as i64);
    let gs_v0v0_components = reports
        .iter()
        .filter(|r| r.parity == Parity::Symmetric && r.center_weight <= v0v0_bound)
        .map(|r| r.component.partition.clone())
        .collect();

    let skew_component = if k >= 1 {
        let mut j = vec![0u32; q];
        j[q - 1] = 1;
        Some(RectSquareComponent::from_j(p, q, k, &j)?.fund)
    } else {
        None
    };
    let label = skew_label(p, q, k);
    let skew_label_matches = skew_component.as_ref().is_none_or(|c| c == &label);

    let flags = ModuliFlags {
        routes_agree: dim_vk == dim_vk_components,
        gs_singleton: gs == vec![doubled_rectangle(q, k)],
        skew_label_matches,
    };

    let n_target = &dim_vk - 2;
    let dim_image_moduli = &dim_vk - 1;
    let mut notes = Vec::new();
    if n_target < BigInt::one() {
        notes.push(format!(
            "N = dim V_k − 2 = {n_target}: no target quadric of positive dimension at this size"
        ));
    }
    notes.push("dim_image_moduli = dim V_k − 1 assumes a generic S¹-orbit".to_string());
    if !flags.skew_label_matches {
        if let Some(c) = &skew_component {
            notes.push(format!(
                "antisymmetric j_{{q−1}}=1 component has coefficients {c}, label (2k−2)ϖ_q+ϖ_{{q+1}} gives {label}"
            ));
        }
    }
    if !flags.routes_agree {
        notes.push(format!(
            "hook formula gives {dim_vk} but component sum gives {dim_vk_components}"
        ));
    }
    if !flags.gs_singleton {
        notes.push(format!(
            "GS intersection is not the single rectangle: {gs:?}"
        ));
    }

    Ok(ModuliReport {
        p,
        q,
        k,
        dim_h0: d,
        dim_sym_square,
        dim_f2k,
        dim_vk,
        dim_vk_components,
        n_target,
        dim_image_moduli,
        gs_sym_components: gs,
        gs_v0v0_components,
        skew_component,
        skew_label: label,
        flags,
        notes,
    })
}

/// Wire format of [`ModuliReport`]: the headline numbers and flags, big integers as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliJson {
    pub p: usize,
    pub q: usize,
    pub k: u32,
    #[serde(rename = "dim_H0", with = "crate::bigstr")]
    pub dim_h0: BigCount,
    #[serde(with = "crate::bigstr")]
    pub dim_sym_square: BigCount,
    #[serde(rename = "dim_F2k", with = "crate::bigstr")]
    pub dim_f2k: BigCount,
    #[serde(rename = "dim_Vk", with = "crate::bigstr")]
    pub dim_vk: BigInt,
    #[serde(rename = "N", with = "crate::bigstr")]
    pub n_target: BigInt,
    #[serde(with = "crate::bigstr")]
    pub dim_image_moduli: BigInt,
    pub gs_sym_components: Vec<Partition>,
    pub flags: ModuliFlags,
}

impl ModuliJson {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::InvalidParameter(format!("bad report JSON: {e}")))
    }
}

impl ModuliReport {
    pub fn json_view(&self) -> ModuliJson {
        ModuliJson {
            p: self.p,
            q: self.q,
            k: self.k,
            dim_h0: self.dim_h0.clone(),
            dim_sym_square: self.dim_sym_square.clone(),
            dim_f2k: self.dim_f2k.clone(),
            dim_vk: self.dim_vk.clone(),
            n_target: self.n_target.clone(),
            dim_image_moduli: self.dim_image_moduli.clone(),
            gs_sym_components: self.gs_sym_components.clone(),
            flags: self.flags,
        }
    }

    pub fn to_json(&self) -> String {
        self.json_view().to_json()
    }
}

/// Per-component checks of the `p = q` specialization, for components with `j_0 > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualPqCheck {
    pub j: Vec<u32>,
    pub partition: Partition,
    /// SU(2q) form of the partition; its `2q`-th row is always zero.
    pub normalized: Partition,
    /// The `ϖ_{2q}` term `j_0` disappears under SU(2q) normalization.
    pub top_coeff_vanishes: bool,
    /// Computed coefficients equal the `j`-label with the `ϖ_{2q}` entry removed.
    pub label_matches: bool,
    /// Center weight minus the same weight with `j_0` set to zero.
    pub j0_contribution: CenterWeight,
    pub contribution_is_2j0: bool,
}

impl EqualPqCheck {
    pub fn ok(&self) -> bool {
        self.top_coeff_vanishes && self.label_matches && self.contribution_is_2j0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualPqReport {
    pub report: ModuliReport,
    pub checks: Vec<EqualPqCheck>,
    pub notes: Vec<String>,
}

/// `moduli_report(q, q, k)` plus the checks specific to `p = q`.
pub fn equal_pq_report(q: usize, k: u32) -> Result<EqualPqReport> {
    let report = moduli_report(q, q, k)?;
    let n = 2 * q;
    let mut checks = Vec::new();
    for c in rect_square_closed_form(q, q, k)? {
        if c.j[0] == 0 {
            continue;
        }
        let normalized = su_normalize(&c.partition, n)?;
        let top_coeff_vanishes = normalized.len() < n && c.partition.len() == n;
        let label_matches = c.label_from_j() == c.fund;
        let weight = center_weight_of_component(&c.fund, q, q)?;
        let mut j_without = c.j.clone();
        j_without[0] = 0;
        let base = lowest_weight_closed_form(&j_without, q, q, k)?;
        let j0_contribution = weight - base;
        let contribution_is_2j0 = j0_contribution == CenterWeight::integer(2 * c.j[0] as i64);
        checks.push(EqualPqCheck {
            j: c.j.clone(),
            partition: c.partition.clone(),
            normalized,
            top_coeff_vanishes,
            label_matches,
            j0_contribution,
            contribution_is_2j0,
        });
    }
    let mut notes = Vec::new();
    if q.is_multiple_of(2) && k == 1 {
        notes.push(format!(
            "q = {q} even, k = 1: Λ^q C^{n} carries an invariant real structure; \
             one-parameter family from the Kodaira embedding to the real standard map (dim V_k = {}, expected ≥ 1)",
            report.dim_vk
        ));
    }
    if report.dim_vk.is_positive() && report.dim_vk == BigInt::one() {
        notes.push("dim V_k = 1: one-parameter family".to_string());
    }
    Ok(EqualPqReport {
        report,
        checks,
        notes,
    })
}
