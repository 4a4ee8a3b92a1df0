//! Subgroup data for the exceptional algebras.
//!
//! Each complex exceptional algebra comes with a classical subgroup H of
//! maximal rank in its compact form K, and each real exceptional form of real
//! rank at least 2 comes with a subgroup Ḡ of G such that G/Ḡ is an
//! irreducible symmetric space and Ḡ ∩ K has full rank. The published numbers
//! are stored next to each row as `published`; every other value is computed
//! from the catalog, so a test comparing the two is a real check.

use crate::catalog::{parse_reductive, Exceptional, ExceptionalType, Family, ReductiveAlgebra, SimpleAlgebra};
use crate::centralizer::{bound, CentralizerError, Group};
use serde::Serialize;

/// Published cells of a compact-subgroup row: dim K, dim H, rk H = rk K, rk_R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InnerCells {
    pub dim_k: i64,
    pub dim_h: i64,
    pub rk: i64,
    pub rk_r: i64,
}

/// Published cells of a real-form row: dim S, dim S̄, rk K̄ = rk K, rk_R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubgroupCells {
    pub dim_s: i64,
    pub dim_s_bar: i64,
    pub rk: i64,
    pub rk_r: i64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct InnerRow {
    pub algebra: Exceptional,
    pub k: &'static str,
    /// H as a compact reductive algebra.
    pub h: &'static str,
    /// Classical group whose bound is applied to H as a whole.
    pub bound_group: Option<Group>,
    pub published: InnerCells,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SubgroupRow {
    pub algebra: Exceptional,
    pub k: &'static str,
    /// Ḡ as a real reductive algebra.
    pub g_bar: &'static str,
    pub k_bar: &'static str,
    /// Classical group whose bound is applied to Ḡ as a whole, when Ḡ is
    /// a product that the bound treats as one group.
    pub bound_group: Option<Group>,
    pub published: SubgroupCells,
}

const fn inner(algebra: Exceptional, k: &'static str, h: &'static str, c: [i64; 4]) -> InnerRow {
    InnerRow {
        algebra,
        k,
        h,
        bound_group: None,
        published: InnerCells {
            dim_k: c[0],
            dim_h: c[1],
            rk: c[2],
            rk_r: c[3],
        },
    }
}

const fn sub(
    algebra: Exceptional,
    k: &'static str,
    g_bar: &'static str,
    k_bar: &'static str,
    c: [i64; 4],
) -> SubgroupRow {
    SubgroupRow {
        algebra,
        k,
        g_bar,
        k_bar,
        bound_group: None,
        published: SubgroupCells {
            dim_s: c[0],
            dim_s_bar: c[1],
            rk: c[2],
            rk_r: c[3],
        },
    }
}

use Exceptional as E;
use ExceptionalType as T;

pub const INNER_ROWS: [InnerRow; 5] = [
    InnerRow {
        bound_group: Some(Group::So(4)),
        ..inner(E::Complex(T::G2), "G2", "so(4)", [14, 6, 2, 2])
    },
    inner(E::Complex(T::F4), "F4", "so(9)", [52, 36, 4, 4]),
    inner(E::Complex(T::E6), "E6", "u(1)+so(10)", [78, 46, 6, 6]),
    inner(E::Complex(T::E7), "E7", "su(8)", [133, 63, 7, 7]),
    inner(E::Complex(T::E8), "E8", "so(16)", [248, 120, 8, 8]),
];

pub const SUBGROUP_ROWS: [SubgroupRow; 11] = [
    sub(E::E6_6, "Sp(4)", "sp(2,2)", "Sp(2)xSp(2)", [42, 16, 4, 6]),
    sub(E::E6_2, "SU(6)xSU(2)", "so*(10)+so(2)", "U(5)xSO(2)", [40, 20, 6, 4]),
    sub(E::E6m14, "SO(10)xSO(2)", "so*(10)+so(2)", "U(5)xSO(2)", [32, 20, 6, 2]),
    sub(E::E6m26, "F4", "sp(1,3)", "Sp(1)xSp(3)", [26, 12, 4, 2]),
    sub(E::E7_7, "SU(8)", "e6(2)+so(2)", "SU(6)xSU(2)xSO(2)", [70, 40, 7, 7]),
    sub(E::E7m5, "SO(12)xSU(2)", "su(4,4)", "S(U(4)xU(4))", [64, 32, 7, 4]),
    sub(E::E7m25, "E6xSO(2)", "su(2,6)", "S(U(2)xU(6))", [54, 24, 7, 3]),
    sub(E::E8_8, "SO(16)", "so*(16)", "U(8)", [128, 56, 8, 8]),
    sub(E::E8m24, "E7xSU(2)", "so*(16)", "U(8)", [112, 56, 8, 4]),
    SubgroupRow {
        bound_group: Some(Group::SoPq(2, 2)),
        ..sub(E::G2_2, "SO(4)", "sl(2,R)+sl(2,R)", "SO(2)xSO(2)", [8, 4, 2, 2])
    },
    sub(E::F4_4, "Sp(3)xSp(1)", "so(4,5)", "S(O(4)xO(5))", [28, 20, 4, 4]),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("no subgroup row for {0}")]
    MissingTableRow(String),
    #[error("{0} has no classical bound on fixed dimensions")]
    NoBound(String),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
}

pub fn inner_row(a: &SimpleAlgebra) -> Result<&'static InnerRow, TableError> {
    INNER_ROWS
        .iter()
        .find(|r| SimpleAlgebra::exceptional(r.algebra) == *a)
        .ok_or_else(|| TableError::MissingTableRow(a.render()))
}

pub fn subgroup_row(a: &SimpleAlgebra) -> Result<&'static SubgroupRow, TableError> {
    SUBGROUP_ROWS
        .iter()
        .find(|r| SimpleAlgebra::exceptional(r.algebra) == *a)
        .ok_or_else(|| TableError::MissingTableRow(a.render()))
}

fn table_algebra(s: &str) -> ReductiveAlgebra {
    parse_reductive(s).expect("table algebra names parse")
}

impl InnerRow {
    pub fn h_algebra(&self) -> ReductiveAlgebra {
        table_algebra(self.h)
    }

    /// The row recomputed from the catalog.
    pub fn derived(&self) -> InnerCells {
        let g = SimpleAlgebra::exceptional(self.algebra).dims();
        let h = self.h_algebra().dims();
        InnerCells {
            dim_k: g.dim_k,
            dim_h: h.dim_g,
            rk: h.rk_cpt,
            rk_r: g.rk_r,
        }
    }

    /// Largest dim C_H(A) over non-central finite-order A in H.
    pub fn h_bound(&self) -> Result<i64, TableError> {
        match self.bound_group {
            Some(g) => Ok(bound(g)?),
            None => compact_centralizer_bound(&self.h_algebra()),
        }
    }
}

impl SubgroupRow {
    pub fn g_bar_algebra(&self) -> ReductiveAlgebra {
        table_algebra(self.g_bar)
    }

    pub fn derived(&self) -> SubgroupCells {
        let g = SimpleAlgebra::exceptional(self.algebra).dims();
        let b = self.g_bar_algebra().dims();
        SubgroupCells {
            dim_s: g.dim_s,
            dim_s_bar: b.dim_s,
            rk: b.rk_cpt,
            rk_r: g.rk_r,
        }
    }

    /// Largest dim S̄^A over non-central finite-order A in K̄.
    pub fn s_bar_bound(&self) -> Result<i64, TableError> {
        match self.bound_group {
            Some(g) => Ok(bound(g)?),
            None => noncompact_fixed_bound(&self.g_bar_algebra()),
        }
    }

    /// Lower bound on dim S − dim S^A for non-central finite-order A, as
    /// the subgroup argument delivers it: either S^A = S̄ (A central in Ḡ)
    /// or the codimension of S̄^A in S̄ carries over.
    pub fn codimension_gap(&self) -> Result<i64, TableError> {
        let c = self.derived();
        Ok((c.dim_s - c.dim_s_bar).min(c.dim_s_bar - self.s_bar_bound()?))
    }
}

fn compact_group(a: &SimpleAlgebra) -> Option<Group> {
    match a.family() {
        Family::SoCompact(n) => Some(Group::So(n)),
        Family::SuCompact(n) => Some(Group::Su(n)),
        Family::SpCompact(n) => Some(Group::Sp(n)),
        _ => None,
    }
}

/// The real group whose fixed-dimension bound applies to a noncompact
/// classical simple algebra.
pub fn noncompact_group(a: &SimpleAlgebra) -> Option<Group> {
    match a.family() {
        Family::So(p, q) => Some(Group::SoPq(p, q)),
        Family::Su(p, q) => Some(Group::SuPq(p, q)),
        Family::Sp(p, q) => Some(Group::SpPq(p, q)),
        Family::SoStar(n) => Some(Group::SoStar(n)),
        _ => None,
    }
}

/// Max over factors of (factor bound + every other factor at full size).
fn product_bound(parts: impl Iterator<Item = (i64, Result<i64, TableError>)>, abelian: i64) -> Result<i64, TableError> {
    let parts: Vec<(i64, i64)> = parts.map(|(full, b)| b.map(|b| (full, b))).collect::<Result<_, _>>()?;
    let total: i64 = parts.iter().map(|p| p.0).sum::<i64>() + abelian;
    parts
        .iter()
        .map(|&(full, b)| total - full + b)
        .max()
        .ok_or(TableError::NoBound("an abelian algebra".into()))
}

/// dim C_H(A) bound for a compact reductive H. Abelian summands are central
/// and count at full dimension.
pub fn compact_centralizer_bound(h: &ReductiveAlgebra) -> Result<i64, TableError> {
    let parts = h.simple_factors().iter().map(|f| {
        let b = compact_group(f)
            .ok_or_else(|| TableError::NoBound(f.render()))
            .and_then(|g| Ok(bound(g)?));
        (f.dims().dim_g, b)
    });
    product_bound(parts, h.abelian_compact_dim)
}

/// dim S̄^A bound for a reductive Ḡ. Compact factors contribute nothing;
/// an exceptional factor contributes through its own subgroup row.
pub fn noncompact_fixed_bound(g: &ReductiveAlgebra) -> Result<i64, TableError> {
    let parts = g.simple_factors().iter().filter(|f| !f.is_compact()).map(|f| {
        let b = match f.family() {
            Family::Exceptional(_) => subgroup_row(f).and_then(|r| Ok(f.dims().dim_s - r.codimension_gap()?)),
            _ => noncompact_group(f)
                .ok_or_else(|| TableError::NoBound(f.render()))
                .and_then(|grp| Ok(bound(grp)?)),
        };
        (f.dims().dim_s, b)
    });
    product_bound(parts, g.abelian_split_dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(INNER_ROWS[0].h_bound(), Ok(3));
        assert_eq!(INNER_ROWS[2].h_bound(), Ok(37));
        // Read as su(2)+su(2), so(4) has a non-central element with a
        // four-dimensional centralizer.
        assert_eq!(compact_centralizer_bound(&INNER_ROWS[0].h_algebra()), Ok(4));
        assert_eq!(SUBGROUP_ROWS[0].s_bar_bound(), Ok(8));
        assert_eq!(SUBGROUP_ROWS[1].s_bar_bound(), Ok(12));
        // e6(2) inside e7(7): 40 − (20 − 12).
        assert_eq!(SUBGROUP_ROWS[4].s_bar_bound(), Ok(32));
        assert_eq!(SUBGROUP_ROWS[9].s_bar_bound(), Ok(2));
    }
}
