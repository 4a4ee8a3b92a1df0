//! The 22 exceptional forms: five compact, five complex, twelve noncompact real.

use serde::Serialize;

/// Cartan type of an exceptional algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ExceptionalType {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 5] = [Self::G2, Self::F4, Self::E6, Self::E7, Self::E8];

    /// Complex dimension (equivalently, dimension of the compact form).
    pub fn dim(self) -> i64 {
        match self {
            Self::G2 => 14,
            Self::F4 => 52,
            Self::E6 => 78,
            Self::E7 => 133,
            Self::E8 => 248,
        }
    }

    pub fn rank(self) -> i64 {
        match self {
            Self::G2 => 2,
            Self::F4 => 4,
            Self::E6 => 6,
            Self::E7 => 7,
            Self::E8 => 8,
        }
    }

    fn token(self) -> &'static str {
        match self {
            Self::G2 => "g2",
            Self::F4 => "f4",
            Self::E6 => "e6",
            Self::E7 => "e7",
            Self::E8 => "e8",
        }
    }
}

/// An exceptional simple Lie algebra. Real forms carry their signature
/// invariant (dim p − dim k) in the name, e.g. `E6m14` is e6(−14).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exceptional {
    Compact(ExceptionalType),
    Complex(ExceptionalType),
    G2_2,
    F4_4,
    F4m20,
    E6_6,
    E6_2,
    E6m14,
    E6m26,
    E7_7,
    E7m5,
    E7m25,
    E8_8,
    E8m24,
}

impl Exceptional {
    pub const REAL_FORMS: [Exceptional; 12] = [
        Self::G2_2,
        Self::F4_4,
        Self::F4m20,
        Self::E6_6,
        Self::E6_2,
        Self::E6m14,
        Self::E6m26,
        Self::E7_7,
        Self::E7m5,
        Self::E7m25,
        Self::E8_8,
        Self::E8m24,
    ];

    pub fn all() -> Vec<Exceptional> {
        let mut v: Vec<_> = ExceptionalType::ALL.iter().map(|&t| Self::Compact(t)).collect();
        v.extend(ExceptionalType::ALL.iter().map(|&t| Self::Complex(t)));
        v.extend(Self::REAL_FORMS);
        v
    }

    pub fn cartan_type(self) -> ExceptionalType {
        use ExceptionalType::*;
        match self {
            Self::Compact(t) | Self::Complex(t) => t,
            Self::G2_2 => G2,
            Self::F4_4 | Self::F4m20 => F4,
            Self::E6_6 | Self::E6_2 | Self::E6m14 | Self::E6m26 => E6,
            Self::E7_7 | Self::E7m5 | Self::E7m25 => E7,
            Self::E8_8 | Self::E8m24 => E8,
        }
    }

    /// Signature invariant of a noncompact real form.
    pub fn index(self) -> Option<i64> {
        Some(match self {
            Self::Compact(_) | Self::Complex(_) => return None,
            Self::G2_2 => 2,
            Self::F4_4 => 4,
            Self::F4m20 => -20,
            Self::E6_6 => 6,
            Self::E6_2 => 2,
            Self::E6m14 => -14,
            Self::E6m26 => -26,
            Self::E7_7 => 7,
            Self::E7m5 => -5,
            Self::E7m25 => -25,
            Self::E8_8 => 8,
            Self::E8m24 => -24,
        })
    }

    pub fn from_index(t: ExceptionalType, index: i64) -> Option<Exceptional> {
        Self::REAL_FORMS
            .into_iter()
            .find(|e| e.cartan_type() == t && e.index() == Some(index))
    }

    pub fn is_complex(self) -> bool {
        matches!(self, Self::Complex(_))
    }

    pub fn is_compact(self) -> bool {
        matches!(self, Self::Compact(_))
    }

    pub fn render(self) -> String {
        let t = self.cartan_type().token();
        match self {
            Self::Compact(_) => t.to_string(),
            Self::Complex(_) => format!("{t}(C)"),
            _ => format!("{t}({})", self.index().unwrap()),
        }
    }

    /// Real dimension.
    pub fn dim_g(self) -> i64 {
        let d = self.cartan_type().dim();
        if self.is_complex() {
            2 * d
        } else {
            d
        }
    }

    /// Dimension of a maximal compact subalgebra. For real forms this is
    /// (dim g − index)/2.
    pub fn dim_k(self) -> i64 {
        match self.index() {
            None => self.cartan_type().dim(),
            Some(i) => (self.cartan_type().dim() - i) / 2,
        }
    }

    pub fn rk_r(self) -> i64 {
        match self {
            Self::Compact(_) => 0,
            Self::Complex(t) => t.rank(),
            Self::G2_2 => 2,
            Self::F4_4 => 4,
            Self::F4m20 => 1,
            Self::E6_6 => 6,
            Self::E6_2 => 4,
            Self::E6m14 => 2,
            Self::E6m26 => 2,
            Self::E7_7 => 7,
            Self::E7m5 => 4,
            Self::E7m25 => 3,
            Self::E8_8 => 8,
            Self::E8m24 => 4,
        }
    }

    /// Rank of the maximal compact subalgebra, stored as tabulated.
    pub fn rk_cpt(self) -> i64 {
        match self {
            Self::Compact(t) | Self::Complex(t) => t.rank(),
            Self::G2_2 => 2,
            Self::F4_4 | Self::F4m20 => 4,
            Self::E6_6 | Self::E6m26 => 4,
            Self::E6_2 | Self::E6m14 => 6,
            Self::E7_7 | Self::E7m5 | Self::E7m25 => 7,
            Self::E8_8 | Self::E8m24 => 8,
        }
    }
}

impl Serialize for Exceptional {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}
