//! Centralizer and fixed-point dimensions for finite-order elements of
//! classical groups.
//!
//! Three sources of numbers live here and are kept independent:
//! [`bound`] evaluates the closed-form inequalities, [`signature`] computes
//! centralizer dimensions from eigenvalue multiplicities, and [`matrix`]
//! computes them as kernel dimensions of `X ↦ AXA⁻¹ − X` on an explicit exact
//! basis of the Lie algebra.

pub mod matrix;
pub mod signature;

pub use matrix::{g22_case, matrix_fixed_dims, G22Report, MatrixElement, MatrixModel};
pub use signature::{
    all_classes, class_dims, lone_angle_classes, oracle_max, signature_dim, signature_dims, Block, FixedDims,
    Signature, Tag,
};

use serde::Serialize;
use std::fmt;

/// A classical matrix group. `So`, `Su`, `Sp` are the compact groups
/// SO(n), SU(n), Sp(n); `SoStar(n)` is SO*(2n); `SlH(n)` is SL(n,H).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    So(i64),
    Su(i64),
    Sp(i64),
    SoPq(i64, i64),
    SuPq(i64, i64),
    SpPq(i64, i64),
    SoStar(i64),
    SlR(i64),
    SlH(i64),
}

impl Group {
    pub fn is_compact(&self) -> bool {
        matches!(self, Group::So(_) | Group::Su(_) | Group::Sp(_))
    }

    /// Parses the CLI family names (`so`, `su`, `sp`, `so_pq`, `su_pq`,
    /// `sp_pq`, `so_star`, `sl_r`, `sl_h`).
    pub fn from_name(name: &str, n: Option<i64>, p: Option<i64>, q: Option<i64>) -> Option<Group> {
        let need_n = |f: fn(i64) -> Group| n.map(f);
        let need_pq = |f: fn(i64, i64) -> Group| p.zip(q).map(|(p, q)| f(p, q));
        match name {
            "so" => need_n(Group::So),
            "su" => need_n(Group::Su),
            "sp" => need_n(Group::Sp),
            "so_pq" => need_pq(Group::SoPq),
            "su_pq" => need_pq(Group::SuPq),
            "sp_pq" => need_pq(Group::SpPq),
            "so_star" => need_n(Group::SoStar),
            "sl_r" => need_n(Group::SlR),
            "sl_h" => need_n(Group::SlH),
            _ => None,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::So(n) => write!(f, "SO({n})"),
            Group::Su(n) => write!(f, "SU({n})"),
            Group::Sp(n) => write!(f, "Sp({n})"),
            Group::SoPq(p, q) => write!(f, "SO({p},{q})"),
            Group::SuPq(p, q) => write!(f, "SU({p},{q})"),
            Group::SpPq(p, q) => write!(f, "Sp({p},{q})"),
            Group::SoStar(n) => write!(f, "SO*({})", 2 * n),
            Group::SlR(n) => write!(f, "SL({n},R)"),
            Group::SlH(n) => write!(f, "SL({n},H)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CentralizerError {
    #[error("{group}: parameters outside the domain of this bound or oracle")]
    OutOfDomain { group: Group },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("no matrix model for {0}")]
    UnsupportedFamily(String),
    #[error("invalid matrix element: {0}")]
    InvalidElement(String),
}

/// Upper bound on the centralizer dimension (compact groups) or on dim S^A
/// (noncompact groups) for non-central finite-order A.
///
/// `SoPq` (p(q−1) = dim S − rk) and compact `Sp` are not among the classical
/// inequalities but are derived the same way and checked by the same oracle.
pub fn bound(group: Group) -> Result<i64, CentralizerError> {
    let out = Err(CentralizerError::OutOfDomain { group });
    let indefinite_ok = |p: i64, q: i64| 1 <= p && p <= q && p + q >= 3;
    match group {
        Group::So(n) if n >= 3 => Ok((n - 1) * (n - 2) / 2),
        Group::Su(n) if n >= 2 => Ok((n - 1) * (n - 1)),
        Group::Sp(n) if n >= 2 => Ok((n - 1) * (2 * n - 1) + 3),
        Group::SuPq(p, q) if indefinite_ok(p, q) => Ok(2 * p * (q - 1)),
        Group::SpPq(p, q) if indefinite_ok(p, q) => Ok(4 * p * (q - 1)),
        Group::SoPq(p, q) if indefinite_ok(p, q) => Ok(p * (q - 1)),
        Group::SoStar(n) if n >= 2 => Ok(n * n - n - 2 * (n - 1)),
        _ => out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        assert_eq!(bound(Group::So(7)), Ok(15));
        assert_eq!(bound(Group::SuPq(2, 3)), Ok(8));
        assert_eq!(bound(Group::SoStar(8)), Ok(42));
        assert!(bound(Group::So(2)).is_err());
        assert!(bound(Group::SuPq(3, 2)).is_err());
    }
}
