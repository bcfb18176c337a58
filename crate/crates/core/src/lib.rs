//! Exact representation-theoretic bookkeeping for holomorphic isometric
//! embeddings of complex Grassmannians `Gr_p(C^{p+q})` into quadrics.
//!
//! The crate decomposes `F(kϖ_q) ⊗ F(kϖ_q)` for SU(p+q), splits it into
//! symmetric and exterior parts, filters components by the U(1) center
//! weight of their lowest-weight vectors, and derives the dimension of the
//! space `V_k` carrying the moduli. An independent brute-force layer in
//! [`oracle`] re-derives each result from explicit Schur polynomials.

mod bigstr;
pub mod error;
pub mod littlewood;
pub mod moduli;
pub mod oracle;
pub mod partition;
pub mod rect;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use moduli::{
    classify_components, moduli_report, CenterWeight, ComponentReport, ModuliJson, ModuliReport,
    Parity,
};
pub use partition::{BigCount, FundamentalCoeffs, Partition};
pub use rect::{rect_square_closed_form, RectSquareComponent};
pub use schur::SchurExpansion;
pub use verify::{VerifyConfig, VerifyReport};
