use super::{Family, SimpleAlgebra, SpaceDims};
use serde::{Serialize, Serializer};
use std::fmt;

/// A reductive algebra: a multiset of simple factors plus an abelian part
/// split into compact (u(1)-type) and split (R-type) dimensions. A complex
/// abelian summand C counts as one of each.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReductiveAlgebra {
    factors: Vec<SimpleAlgebra>,
    pub abelian_compact_dim: i64,
    pub abelian_split_dim: i64,
}

impl ReductiveAlgebra {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn new(mut factors: Vec<SimpleAlgebra>, abelian_compact_dim: i64, abelian_split_dim: i64) -> Self {
        factors.sort();
        Self {
            factors,
            abelian_compact_dim,
            abelian_split_dim,
        }
    }

    pub fn simple(a: SimpleAlgebra) -> Self {
        Self::new(vec![a], 0, 0)
    }

    pub fn compact_abelian(d: i64) -> Self {
        Self::new(vec![], d, 0)
    }

    pub fn split_abelian(d: i64) -> Self {
        Self::new(vec![], 0, d)
    }

    pub fn complex_abelian(d: i64) -> Self {
        Self::new(vec![], d, d)
    }

    /// Simple factors in canonical order.
    pub fn simple_factors(&self) -> &[SimpleAlgebra] {
        &self.factors
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        Self::new(
            f,
            self.abelian_compact_dim + other.abelian_compact_dim,
            self.abelian_split_dim + other.abelian_split_dim,
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.abelian_compact_dim == 0 && self.abelian_split_dim == 0
    }

    pub fn dims(&self) -> SpaceDims {
        let mut d = SpaceDims {
            dim_g: self.abelian_compact_dim + self.abelian_split_dim,
            dim_k: self.abelian_compact_dim,
            dim_s: self.abelian_split_dim,
            rk_r: self.abelian_split_dim,
            rk_cpt: self.abelian_compact_dim,
        };
        for f in &self.factors {
            let s = f.dims();
            d.dim_g += s.dim_g;
            d.dim_k += s.dim_k;
            d.dim_s += s.dim_s;
            d.rk_r += s.rk_r;
            d.rk_cpt += s.rk_cpt;
        }
        d
    }

    /// Complexification, with each real abelian dimension becoming one
    /// complex abelian dimension.
    pub fn complexification(&self) -> Self {
        let ab = self.abelian_compact_dim + self.abelian_split_dim;
        self.factors
            .iter()
            .fold(Self::complex_abelian(ab), |acc, f| acc.plus(&f.complexification()))
    }

    pub fn render(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.render()).collect();
        parts.extend((0..self.abelian_compact_dim).map(|_| "u(1)".to_string()));
        parts.extend((0..self.abelian_split_dim).map(|_| "R".to_string()));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    fn canon(f: Family) -> Self {
        Self::simple(SimpleAlgebra::new(f).expect("loose builder produced an invalid family"))
    }

    /// sl(n,R), trivial for n <= 1.
    pub fn sl_r(n: i64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            Self::canon(Family::SlR(n))
        }
    }

    pub fn sl_c(n: i64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            Self::canon(Family::SlC(n))
        }
    }

    /// sl(n,H); sl(1,H) is su(2).
    pub fn sl_h(n: i64) -> Self {
        match n {
            0 => Self::trivial(),
            1 => Self::su(0, 2),
            _ => Self::canon(Family::SlH(n)),
        }
    }

    /// so(p,q) for any p, q >= 0, including the compact, abelian and
    /// non-simple small cases.
    pub fn so(p: i64, q: i64) -> Self {
        let (p, q) = (p.min(q), p.max(q));
        match (p, q) {
            (0, 0) | (0, 1) => Self::trivial(),
            (0, 2) => Self::compact_abelian(1),
            (0, 4) => Self::su(0, 2).plus(&Self::su(0, 2)),
            (0, n) => Self::canon(Family::SoCompact(n)),
            (1, 1) => Self::split_abelian(1),
            (2, 2) => Self::sl_r(2).plus(&Self::sl_r(2)),
            _ => Self::canon(Family::So(p, q)),
        }
    }

    /// so(n,C), with so(2,C) = C and so(4,C) = sl(2,C)+sl(2,C).
    pub fn so_c(n: i64) -> Self {
        match n {
            0 | 1 => Self::trivial(),
            2 => Self::complex_abelian(1),
            4 => Self::sl_c(2).plus(&Self::sl_c(2)),
            _ => Self::canon(Family::SoC(n)),
        }
    }

    /// su(p,q); su(1,1) is sl(2,R).
    pub fn su(p: i64, q: i64) -> Self {
        let (p, q) = (p.min(q), p.max(q));
        match (p, q) {
            (0, 0) | (0, 1) => Self::trivial(),
            (0, n) => Self::canon(Family::SuCompact(n)),
            (1, 1) => Self::sl_r(2),
            _ => Self::canon(Family::Su(p, q)),
        }
    }

    /// u(p,q) = su(p,q) + u(1).
    pub fn u(p: i64, q: i64) -> Self {
        if p + q == 0 {
            Self::trivial()
        } else {
            Self::su(p, q).plus(&Self::compact_abelian(1))
        }
    }

    /// sp(p,q) in quaternionic signature; sp(1,1) is so(1,4).
    pub fn sp(p: i64, q: i64) -> Self {
        let (p, q) = (p.min(q), p.max(q));
        match (p, q) {
            (0, 0) => Self::trivial(),
            (0, n) => Self::canon(Family::SpCompact(n)),
            (1, 1) => Self::so(1, 4),
            _ => Self::canon(Family::Sp(p, q)),
        }
    }

    /// sp(2n,R).
    pub fn sp_r(n: i64) -> Self {
        if n == 0 {
            Self::trivial()
        } else {
            Self::canon(Family::SpR(n))
        }
    }

    /// sp(2n,C).
    pub fn sp_c(n: i64) -> Self {
        if n == 0 {
            Self::trivial()
        } else {
            Self::canon(Family::SpC(n))
        }
    }

    /// so*(2n); so*(2) = u(1), so*(4) = su(2)+sl(2,R).
    pub fn so_star(n: i64) -> Self {
        match n {
            0 => Self::trivial(),
            1 => Self::compact_abelian(1),
            2 => Self::su(0, 2).plus(&Self::sl_r(2)),
            _ => Self::canon(Family::SoStar(n)),
        }
    }
}

impl From<SimpleAlgebra> for ReductiveAlgebra {
    fn from(a: SimpleAlgebra) -> Self {
        Self::simple(a)
    }
}

impl fmt::Display for ReductiveAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for ReductiveAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}
