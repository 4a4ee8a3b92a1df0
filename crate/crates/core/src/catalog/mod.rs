//! Simple and reductive real Lie algebras with their dimension and rank data.
//!
//! Every [`SimpleAlgebra`] is held in canonical form: low-dimensional
//! coincidences such as so(2,3) ≅ sp(4,R) collapse to one representative, and
//! non-simple inputs such as so(4,C) are rejected. Loose builders on
//! [`ReductiveAlgebra`] accept the degenerate parameters that show up inside
//! isotropy algebras (so(1,1), so(2), sp(0,1), ...) and split them into
//! abelian and simple pieces.

mod exceptional;
mod out;
mod parse;
mod reductive;

pub use exceptional::{Exceptional, ExceptionalType};
pub use out::{OutGroup, OutIso};
pub use parse::{parse_reductive, parse_simple, ParseError};
pub use reductive::ReductiveAlgebra;

use serde::{Serialize, Serializer};
use std::fmt;

/// Largest integer parameter accepted by the constructors. Every closed-form
/// dimension stays far inside `i64` below this bound.
pub const PARAM_LIMIT: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("{algebra} is outside the parameter domain: {reason}")]
    OutOfDomain { algebra: String, reason: String },
}

fn out_of_domain(algebra: impl Into<String>, reason: impl Into<String>) -> CatalogError {
    CatalogError::OutOfDomain {
        algebra: algebra.into(),
        reason: reason.into(),
    }
}

/// Family and integer parameters. `SpC(n)`, `SpR(n)` mean sp(2n,C), sp(2n,R);
/// `SoStar(n)` means so*(2n); `SlH(n)` is sl(n,H) with n quaternionic rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    SlC(i64),
    SoC(i64),
    SpC(i64),
    SlR(i64),
    SlH(i64),
    So(i64, i64),
    Su(i64, i64),
    Sp(i64, i64),
    SpR(i64),
    SoStar(i64),
    SuCompact(i64),
    SoCompact(i64),
    SpCompact(i64),
    Exceptional(Exceptional),
}

impl Family {
    /// Stable family identifier used in JSON output.
    pub fn name(&self) -> &'static str {
        match self {
            Family::SlC(_) => "sl_C",
            Family::SoC(_) => "so_C",
            Family::SpC(_) => "sp_C",
            Family::SlR(_) => "sl_R",
            Family::SlH(_) => "sl_H",
            Family::So(..) => "so_pq",
            Family::Su(..) => "su_pq",
            Family::Sp(..) => "sp_pq",
            Family::SpR(_) => "sp_R",
            Family::SoStar(_) => "so_star",
            Family::SuCompact(_) => "su_c",
            Family::SoCompact(_) => "so_c",
            Family::SpCompact(_) => "sp_c",
            Family::Exceptional(_) => "exceptional",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, i64)> {
        match *self {
            Family::SlC(n)
            | Family::SoC(n)
            | Family::SpC(n)
            | Family::SlR(n)
            | Family::SlH(n)
            | Family::SpR(n)
            | Family::SoStar(n)
            | Family::SuCompact(n)
            | Family::SoCompact(n)
            | Family::SpCompact(n) => vec![("n", n)],
            Family::So(p, q) | Family::Su(p, q) | Family::Sp(p, q) => vec![("p", p), ("q", q)],
            Family::Exceptional(e) => match e.index() {
                Some(i) => vec![("index", i)],
                None => vec![],
            },
        }
    }

    /// Name of the family at these parameters, before canonicalization.
    pub fn render(&self) -> String {
        match *self {
            Family::SlC(n) => format!("sl({n},C)"),
            Family::SoC(n) => format!("so({n},C)"),
            Family::SpC(n) => format!("sp({},C)", 2 * n),
            Family::SlR(n) => format!("sl({n},R)"),
            Family::SlH(n) => format!("sl({n},H)"),
            Family::So(p, q) => format!("so({p},{q})"),
            Family::Su(p, q) => format!("su({p},{q})"),
            Family::Sp(p, q) => format!("sp({p},{q})"),
            Family::SpR(n) => format!("sp({},R)", 2 * n),
            Family::SoStar(n) => format!("so*({})", 2 * n),
            Family::SuCompact(n) => format!("su({n})"),
            Family::SoCompact(n) => format!("so({n})"),
            Family::SpCompact(n) => format!("sp({n})"),
            Family::Exceptional(e) => e.render(),
        }
    }
}

/// A simple Lie algebra in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleAlgebra(Family);

/// Dimension and rank data of a (simple or reductive) algebra and its symmetric space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceDims {
    pub dim_g: i64,
    pub dim_k: i64,
    pub dim_s: i64,
    pub rk_r: i64,
    pub rk_cpt: i64,
}

impl SimpleAlgebra {
    /// Validates the domain and returns the canonical representative.
    pub fn new(family: Family) -> Result<SimpleAlgebra, CatalogError> {
        use Family::*;
        let raw = family.render();
        for (_, v) in family.params() {
            if v.abs() > PARAM_LIMIT {
                return Err(out_of_domain(raw, format!("parameter exceeds {PARAM_LIMIT}")));
            }
        }
        let bad = |reason: &str| Err(out_of_domain(raw.clone(), reason));
        let canon = match family {
            SlC(n) | SlR(n) | SlH(n) if n < 2 => return bad("requires n >= 2"),
            SoC(n) if n < 3 => return bad("requires n >= 3"),
            SoC(4) => return bad("so(4,C) = sl(2,C)+sl(2,C) is not simple"),
            SoC(3) => SlC(2),
            SoC(5) => SpC(2),
            SoC(6) => SlC(4),
            SpC(n) | SpR(n) | SpCompact(n) if n < 1 => return bad("requires n >= 1"),
            SpC(1) => SlC(2),
            SpR(1) => SlR(2),
            SpCompact(1) => SuCompact(2),
            So(p, q) | Su(p, q) | Sp(p, q) if p > q => {
                let swapped = match family {
                    So(..) => So(q, p),
                    Su(..) => Su(q, p),
                    _ => Sp(q, p),
                };
                return SimpleAlgebra::new(swapped);
            }
            So(p, q) | Su(p, q) | Sp(p, q) if p < 1 || p + q < 3 => return bad("requires 1 <= p <= q and p+q >= 3"),
            So(2, 2) => return bad("so(2,2) = sl(2,R)+sl(2,R) is not simple"),
            So(1, 2) => SlR(2),
            So(1, 3) => SlC(2),
            So(2, 3) => SpR(2),
            So(2, 4) => Su(2, 2),
            So(1, 5) => SlH(2),
            So(3, 3) => SlR(4),
            SoStar(n) if n < 2 => return bad("requires n >= 2"),
            SoStar(2) => return bad("so*(4) = su(2)+sl(2,R) is not simple"),
            SoStar(3) => Su(1, 3),
            SoStar(4) => So(2, 6),
            SuCompact(n) if n < 2 => return bad("requires n >= 2"),
            SoCompact(n) if n < 3 => return bad("requires n >= 3"),
            SoCompact(4) => return bad("so(4) = su(2)+su(2) is not simple"),
            SoCompact(3) => SuCompact(2),
            SoCompact(5) => SpCompact(2),
            SoCompact(6) => SuCompact(4),
            f => f,
        };
        Ok(SimpleAlgebra(canon))
    }

    pub fn exceptional(e: Exceptional) -> SimpleAlgebra {
        SimpleAlgebra(Family::Exceptional(e))
    }

    pub fn family(&self) -> Family {
        self.0
    }

    pub fn render(&self) -> String {
        self.0.render()
    }

    pub fn is_complex(&self) -> bool {
        match self.0 {
            Family::SlC(_) | Family::SoC(_) | Family::SpC(_) => true,
            Family::Exceptional(e) => e.is_complex(),
            _ => false,
        }
    }

    pub fn is_compact(&self) -> bool {
        match self.0 {
            Family::SuCompact(_) | Family::SoCompact(_) | Family::SpCompact(_) => true,
            Family::Exceptional(e) => e.is_compact(),
            _ => false,
        }
    }

    pub fn dims(&self) -> SpaceDims {
        let dim_g = self.dim_g();
        let dim_k = self.dim_k();
        SpaceDims {
            dim_g,
            dim_k,
            dim_s: dim_g - dim_k,
            rk_r: self.rk_r(),
            rk_cpt: self.rk_cpt(),
        }
    }

    fn dim_g(&self) -> i64 {
        use Family::*;
        match self.0 {
            SlR(n) | SuCompact(n) => n * n - 1,
            SlC(n) => 2 * (n * n - 1),
            SlH(n) => 4 * n * n - 1,
            SoC(n) => n * (n - 1),
            So(p, q) => (p + q) * (p + q - 1) / 2,
            SoCompact(n) => n * (n - 1) / 2,
            Su(p, q) => (p + q) * (p + q) - 1,
            SpC(n) => 2 * n * (2 * n + 1),
            SpR(n) | SpCompact(n) => n * (2 * n + 1),
            Sp(p, q) => (p + q) * (2 * (p + q) + 1),
            SoStar(n) => n * (2 * n - 1),
            Exceptional(e) => e.dim_g(),
        }
    }

    fn dim_k(&self) -> i64 {
        use Family::*;
        match self.0 {
            SlR(n) => n * (n - 1) / 2,
            SlC(n) => n * n - 1,
            SlH(n) => n * (2 * n + 1),
            SoC(n) => n * (n - 1) / 2,
            So(p, q) => p * (p - 1) / 2 + q * (q - 1) / 2,
            Su(p, q) => p * p + q * q - 1,
            SpC(n) => n * (2 * n + 1),
            SpR(n) => n * n,
            Sp(p, q) => p * (2 * p + 1) + q * (2 * q + 1),
            SoStar(n) => n * n,
            SuCompact(_) | SoCompact(_) | SpCompact(_) => self.dim_g(),
            Exceptional(e) => e.dim_k(),
        }
    }

    /// Real rank. Classical values are the standard ones (rank of a maximal
    /// split Cartan subspace); tests bound them against the absolute rank.
    fn rk_r(&self) -> i64 {
        use Family::*;
        match self.0 {
            SlR(n) | SlC(n) | SlH(n) => n - 1,
            SoC(n) => n / 2,
            So(p, _) | Su(p, _) | Sp(p, _) => p,
            SpC(n) | SpR(n) => n,
            SoStar(n) => n / 2,
            SuCompact(_) | SoCompact(_) | SpCompact(_) => 0,
            Exceptional(e) => e.rk_r(),
        }
    }

    /// Rank of the maximal compact subalgebra.
    fn rk_cpt(&self) -> i64 {
        use Family::*;
        match self.0 {
            SlR(n) | SoC(n) | SoCompact(n) => n / 2,
            SlC(n) | SuCompact(n) => n - 1,
            SlH(n) | SpC(n) | SpR(n) | SoStar(n) | SpCompact(n) => n,
            So(p, q) => p / 2 + q / 2,
            Su(p, q) => p + q - 1,
            Sp(p, q) => p + q,
            Exceptional(e) => e.rk_cpt(),
        }
    }

    /// Rank of the complexification (as a complex algebra; for a complex
    /// algebra this is its own rank).
    pub fn complex_rank(&self) -> i64 {
        use Family::*;
        match self.0 {
            SlR(n) | SlC(n) | SuCompact(n) => n - 1,
            SlH(n) => 2 * n - 1,
            SoC(n) | SoCompact(n) => n / 2,
            So(p, q) => (p + q) / 2,
            Su(p, q) => p + q - 1,
            SpC(n) | SpR(n) | SpCompact(n) | SoStar(n) => n,
            Sp(p, q) => p + q,
            Exceptional(e) => e.cartan_type().rank(),
        }
    }

    /// Maximal compact subalgebra, up to isogeny.
    pub fn max_compact(&self) -> ReductiveAlgebra {
        use Family::*;
        type R = ReductiveAlgebra;
        match self.0 {
            SlR(n) | SoC(n) => R::so(0, n),
            SlC(n) => R::su(0, n),
            SlH(n) | SpC(n) => R::sp(0, n),
            So(p, q) => R::so(0, p).plus(&R::so(0, q)),
            Su(p, q) => R::su(0, p).plus(&R::su(0, q)).plus(&R::compact_abelian(1)),
            SpR(n) | SoStar(n) => R::u(0, n),
            Sp(p, q) => R::sp(0, p).plus(&R::sp(0, q)),
            SuCompact(_) | SoCompact(_) | SpCompact(_) => R::simple(*self),
            Exceptional(e) => exceptional_max_compact(e),
        }
    }

    pub fn out_group(&self) -> OutGroup {
        out::out_group(self)
    }

    /// Complexification as a complex reductive algebra (a complex algebra
    /// complexifies to two copies of itself).
    pub fn complexification(&self) -> ReductiveAlgebra {
        use Family::*;
        type R = ReductiveAlgebra;
        match self.0 {
            SlR(n) | SuCompact(n) => R::sl_c(n),
            SlH(n) => R::sl_c(2 * n),
            Su(p, q) => R::sl_c(p + q),
            So(p, q) => R::so_c(p + q),
            SoCompact(n) => R::so_c(n),
            SoStar(n) => R::so_c(2 * n),
            SpR(n) | SpCompact(n) => R::sp_c(n),
            Sp(p, q) => R::sp_c(p + q),
            SlC(_) | SoC(_) | SpC(_) => R::simple(*self).plus(&R::simple(*self)),
            Exceptional(e) => {
                let c = R::simple(SimpleAlgebra::exceptional(self::Exceptional::Complex(e.cartan_type())));
                if e.is_complex() {
                    c.plus(&c)
                } else {
                    c
                }
            }
        }
    }
}

fn exceptional_max_compact(e: Exceptional) -> ReductiveAlgebra {
    use Exceptional::*;
    use ExceptionalType as T;
    type R = ReductiveAlgebra;
    let cpt = |t| R::simple(SimpleAlgebra::exceptional(Compact(t)));
    match e {
        Compact(_) => R::simple(SimpleAlgebra::exceptional(e)),
        Complex(t) => cpt(t),
        G2_2 => R::su(0, 2).plus(&R::su(0, 2)),
        F4_4 => R::sp(0, 3).plus(&R::su(0, 2)),
        F4m20 => R::so(0, 9),
        E6_6 => R::sp(0, 4),
        E6_2 => R::su(0, 6).plus(&R::su(0, 2)),
        E6m14 => R::so(0, 10).plus(&R::compact_abelian(1)),
        E6m26 => cpt(T::F4),
        E7_7 => R::su(0, 8),
        E7m5 => R::so(0, 12).plus(&R::su(0, 2)),
        E7m25 => cpt(T::E6).plus(&R::compact_abelian(1)),
        E8_8 => R::so(0, 16),
        E8m24 => cpt(T::E7).plus(&R::su(0, 2)),
    }
}

impl fmt::Display for SimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for SimpleAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

/// Which part of the catalog a sweep covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScope {
    Complex,
    Real,
    Compact,
}

/// Every canonical simple algebra of the scope whose integer parameters
/// (n, or p+q) are at most `max_param`, sorted by canonical key. The
/// exceptional forms of the scope are always included.
pub fn sweep(scope: SweepScope, max_param: i64) -> Vec<SimpleAlgebra> {
    use Family::*;
    let mut raw: Vec<Family> = Vec::new();
    let m = max_param.min(PARAM_LIMIT);
    for n in 1..=m {
        match scope {
            SweepScope::Complex => raw.extend([SlC(n), SoC(n), SpC(n)]),
            SweepScope::Real => raw.extend([SlR(n), SlH(n), SpR(n), SoStar(n)]),
            SweepScope::Compact => raw.extend([SuCompact(n), SoCompact(n), SpCompact(n)]),
        }
        if scope == SweepScope::Real {
            for p in 1..=n / 2 {
                let q = n - p;
                raw.extend([So(p, q), Su(p, q), Sp(p, q)]);
            }
        }
    }
    let exc = self::Exceptional::all().into_iter().filter(|e| match scope {
        SweepScope::Complex => e.is_complex(),
        SweepScope::Compact => e.is_compact(),
        SweepScope::Real => !e.is_complex() && !e.is_compact(),
    });
    raw.extend(exc.map(Family::Exceptional));
    let mut out: Vec<SimpleAlgebra> = raw
        .into_iter()
        .filter_map(|f| SimpleAlgebra::new(f).ok())
        .filter(|a| match scope {
            SweepScope::Complex => a.is_complex(),
            SweepScope::Compact => a.is_compact(),
            SweepScope::Real => !a.is_complex() && !a.is_compact(),
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
