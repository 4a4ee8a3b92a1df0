use super::{Exceptional as Exc, ExceptionalType, Family, SimpleAlgebra};
use serde::Serialize;

/// Isomorphism type of an outer automorphism group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OutIso {
    #[serde(rename = "trivial")]
    Trivial,
    Z2,
    Z2xZ2,
    S3xZ2,
    D4,
    S4,
}

impl OutIso {
    pub fn as_str(self) -> &'static str {
        match self {
            OutIso::Trivial => "trivial",
            OutIso::Z2 => "Z2",
            OutIso::Z2xZ2 => "Z2xZ2",
            OutIso::S3xZ2 => "S3xZ2",
            OutIso::D4 => "D4",
            OutIso::S4 => "S4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OutGroup {
    pub iso_type: OutIso,
    /// Least common multiple of element orders.
    pub exponent: i64,
    pub all_order_le_2: bool,
}

impl From<OutIso> for OutGroup {
    fn from(iso_type: OutIso) -> Self {
        let exponent = match iso_type {
            OutIso::Trivial => 1,
            OutIso::Z2 | OutIso::Z2xZ2 => 2,
            OutIso::D4 => 4,
            OutIso::S3xZ2 => 6,
            OutIso::S4 => 12,
        };
        OutGroup {
            iso_type,
            exponent,
            all_order_le_2: exponent <= 2,
        }
    }
}

pub(super) fn out_group(a: &SimpleAlgebra) -> OutGroup {
    use Family::*;
    use OutIso::*;
    let iso = match a.family() {
        SlC(n) if n >= 3 => Z2xZ2,
        SoC(8) => S3xZ2,
        SoC(n) if n % 2 == 0 && n >= 10 => Z2xZ2,
        SlC(_) | SoC(_) | SpC(_) => Z2,
        SlR(2) => Z2,
        SlR(n) if n % 2 == 1 => Z2,
        SlR(_) => Z2xZ2,
        Su(p, q) if p == q => Z2xZ2,
        Su(..) => Z2,
        SlH(_) => Z2,
        So(p, q) if (p + q) % 2 == 1 => Z2,
        So(4, 4) => S4,
        So(p, q) if p == q && p % 2 == 1 => Z2xZ2,
        So(p, q) if p == q => D4,
        So(p, _) if p % 2 == 1 => Z2,
        So(..) => Z2xZ2,
        SpR(_) => Z2,
        Sp(p, q) if p == q => Z2,
        SoStar(_) => Z2,
        Family::Exceptional(e) => match e {
            Exc::Complex(ExceptionalType::E6) => Z2xZ2,
            Exc::Complex(_) => Z2,
            Exc::E6_6 | Exc::E6_2 | Exc::E6m14 | Exc::E6m26 => Z2,
            Exc::E7_7 | Exc::E7m25 => Z2,
            _ => Trivial,
        },
        _ => Trivial,
    };
    iso.into()
}
