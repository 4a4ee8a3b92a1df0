//! Berger's isotropy algebras, one entry per table cell.
//!
//! Templates use the catalog's ASCII names: symplectic and so* algebras carry
//! their matrix size, so `sp(n,C)` inside sl(n,C) is sp_c(n/2). The
//! s(gl ⊕ gl) and gl algebras are written out as their simple parts plus
//! the abelian remainder (C, R or u(1)).

use super::{Ambient, Build, EntryKind, IsotropyEntry};
use crate::catalog::{Exceptional as E, ExceptionalType as T, ReductiveAlgebra as R};

use Ambient as A;
use EntryKind::{ComplexIsotropy as Hol, Real, RealForm};

const fn e(
    ambient: Ambient,
    isotropy: &'static str,
    vars: &'static str,
    conds: &'static str,
    source: &'static str,
    kind: EntryKind,
    build: fn(&super::Env) -> R,
) -> IsotropyEntry {
    IsotropyEntry {
        ambient,
        isotropy,
        vars,
        conds,
        source,
        kind,
        note: None,
        build: Build::Closure(build),
    }
}

/// Exceptional entry, built by parsing the isotropy string.
const fn x(ambient: E, isotropy: &'static str, source: &'static str, kind: EntryKind) -> IsotropyEntry {
    IsotropyEntry {
        ambient: A::Exceptional(ambient),
        isotropy,
        vars: "",
        conds: "",
        source,
        kind,
        note: None,
        build: Build::Parse,
    }
}

/// Entry for one named ambient algebra, built by parsing the isotropy string.
const fn t(ambient: &'static str, isotropy: &'static str, source: &'static str, kind: EntryKind) -> IsotropyEntry {
    IsotropyEntry {
        ambient: A::Only(ambient),
        isotropy,
        vars: "",
        conds: "",
        source,
        kind,
        note: None,
        build: Build::Parse,
    }
}

const fn noted(mut entry: IsotropyEntry, note: &'static str) -> IsotropyEntry {
    entry.note = Some(note);
    entry
}

const G2C: E = E::Complex(T::G2);
const F4C: E = E::Complex(T::F4);
const E6C: E = E::Complex(T::E6);
const E7C: E = E::Complex(T::E7);
const E8C: E = E::Complex(T::E8);

const SPLIT_N: &str = "k in 1..=n/2; l = n-k";
const SPLIT_M: &str = "a in 1..=m/2; b = m-a";
const SPLIT_PQ: &str = "kp in 0..=p; kq in 0..=q; lp = p-kp; lq = q-kq";
const BOTH_NONZERO: &str = "kp+kq >= 1; lp+lq >= 1";

fn c1() -> R {
    R::complex_abelian(1)
}
fn r1() -> R {
    R::split_abelian(1)
}
fn u1() -> R {
    R::compact_abelian(1)
}

pub(super) static ENTRIES: &[IsotropyEntry] = &[
    // sl(n,C) and its real forms.
    e(A::SlC, "so(n,C)", "", "", "berger-sl", Hol, |v| R::so_c(v.v("n"))),
    e(A::SlC, "sl(k,C)+sl(l,C)+C", SPLIT_N, "", "berger-sl", Hol, |v| {
        R::sl_c(v.v("k")).plus(&R::sl_c(v.v("l"))).plus(&c1())
    }),
    e(A::SlC, "sp(n,C)", "", "n even", "berger-sl", Hol, |v| {
        R::sp_c(v.v("n") / 2)
    }),
    e(A::SlC, "sl(n,R)", "", "", "berger-sl", RealForm, |v| R::sl_r(v.v("n"))),
    e(A::SlC, "su(p,n-p)", "p in 1..=n/2", "", "berger-sl", RealForm, |v| {
        R::su(v.v("p"), v.v("n") - v.v("p"))
    }),
    e(A::SlC, "sl(n/2,H)", "", "n even", "berger-sl", RealForm, |v| {
        R::sl_h(v.v("n") / 2)
    }),
    e(A::SlR, "so(k,l)", SPLIT_N, "", "berger-sl", Real, |v| {
        R::so(v.v("k"), v.v("l"))
    }),
    e(A::SlR, "sl(k,R)+sl(l,R)+R", SPLIT_N, "", "berger-sl", Real, |v| {
        R::sl_r(v.v("k")).plus(&R::sl_r(v.v("l"))).plus(&r1())
    }),
    e(A::SlR, "sl(n/2,C)+u(1)", "", "n even", "berger-sl", Real, |v| {
        R::sl_c(v.v("n") / 2).plus(&u1())
    }),
    e(A::SlR, "sp(n,R)", "", "n even", "berger-sl", Real, |v| {
        R::sp_r(v.v("n") / 2)
    }),
    e(A::Su, "so(p,q)", "", "", "berger-sl", Real, |v| {
        R::so(v.v("p"), v.v("q"))
    }),
    e(A::Su, "so*(2p)", "", "p == q", "berger-sl", Real, |v| {
        R::so_star(v.v("p"))
    }),
    noted(
        e(
            A::Su,
            "su(kp,kq)+su(lp,lq)+u(1)",
            SPLIT_PQ,
            BOTH_NONZERO,
            "berger-sl",
            Real,
            |v| {
                R::su(v.v("kp"), v.v("kq"))
                    .plus(&R::su(v.v("lp"), v.v("lq")))
                    .plus(&u1())
            },
        ),
        "split kp+lp = p, kq+lq = q assumed by analogy with so(p,q)",
    ),
    e(A::Su, "sl(p,C)+R", "", "p == q", "berger-sl", Real, |v| {
        R::sl_c(v.v("p")).plus(&r1())
    }),
    e(A::Su, "sp(p/2,q/2)", "", "p even; q even", "berger-sl", Real, |v| {
        R::sp(v.v("p") / 2, v.v("q") / 2)
    }),
    e(A::Su, "sp(2p,R)", "", "p == q", "berger-sl", Real, |v| {
        R::sp_r(v.v("p"))
    }),
    e(A::SlH, "so*(2m)", "", "", "berger-sl", Real, |v| R::so_star(v.v("m"))),
    e(A::SlH, "sl(a,H)+sl(b,H)+R", SPLIT_M, "", "berger-sl", Real, |v| {
        R::sl_h(v.v("a")).plus(&R::sl_h(v.v("b"))).plus(&r1())
    }),
    e(A::SlH, "sl(m,C)+u(1)", "", "", "berger-sl", Real, |v| {
        R::sl_c(v.v("m")).plus(&u1())
    }),
    e(A::SlH, "sp(a,b)", SPLIT_M, "", "berger-sl", Real, |v| {
        R::sp(v.v("a"), v.v("b"))
    }),
    // so(n,C) and its real forms.
    e(A::SoC, "so(k,C)+so(l,C)", SPLIT_N, "", "berger-so", Hol, |v| {
        R::so_c(v.v("k")).plus(&R::so_c(v.v("l")))
    }),
    e(A::SoC, "sl(n/2,C)+C", "", "n even", "berger-so", Hol, |v| {
        R::sl_c(v.v("n") / 2).plus(&c1())
    }),
    e(A::SoC, "so(p,n-p)", "p in 1..=n/2", "", "berger-so", RealForm, |v| {
        R::so(v.v("p"), v.v("n") - v.v("p"))
    }),
    e(A::SoC, "so*(n)", "", "n even", "berger-so", RealForm, |v| {
        R::so_star(v.v("n") / 2)
    }),
    e(
        A::So,
        "so(kp,kq)+so(lp,lq)",
        SPLIT_PQ,
        BOTH_NONZERO,
        "berger-so",
        Real,
        |v| R::so(v.v("kp"), v.v("kq")).plus(&R::so(v.v("lp"), v.v("lq"))),
    ),
    e(A::So, "so(p,C)", "", "p == q", "berger-so", Real, |v| R::so_c(v.v("p"))),
    e(A::So, "u(p/2,q/2)", "", "p even; q even", "berger-so", Real, |v| {
        R::u(v.v("p") / 2, v.v("q") / 2)
    }),
    e(A::So, "sl(p,R)+R", "", "p == q", "berger-so", Real, |v| {
        R::sl_r(v.v("p")).plus(&r1())
    }),
    e(A::SoStar, "so*(2a)+so*(2b)", SPLIT_M, "", "berger-so", Real, |v| {
        R::so_star(v.v("a")).plus(&R::so_star(v.v("b")))
    }),
    e(A::SoStar, "so(m,C)", "", "", "berger-so", Real, |v| R::so_c(v.v("m"))),
    e(A::SoStar, "u(a,b)", SPLIT_M, "", "berger-so", Real, |v| {
        R::u(v.v("a"), v.v("b"))
    }),
    e(A::SoStar, "sl(m/2,H)+R", "", "m even", "berger-so", Real, |v| {
        R::sl_h(v.v("m") / 2).plus(&r1())
    }),
    // sp(2n,C) and its real forms.
    e(A::SpC, "sp(2k,C)+sp(2l,C)", SPLIT_N, "", "berger-sp", Hol, |v| {
        R::sp_c(v.v("k")).plus(&R::sp_c(v.v("l")))
    }),
    e(A::SpC, "sl(n,C)+C", "", "", "berger-sp", Hol, |v| {
        R::sl_c(v.v("n")).plus(&c1())
    }),
    e(A::SpC, "sp(p,n-p)", "p in 1..=n/2", "", "berger-sp", RealForm, |v| {
        R::sp(v.v("p"), v.v("n") - v.v("p"))
    }),
    e(A::SpC, "sp(2n,R)", "", "", "berger-sp", RealForm, |v| R::sp_r(v.v("n"))),
    e(
        A::Sp,
        "sp(kp,kq)+sp(lp,lq)",
        SPLIT_PQ,
        BOTH_NONZERO,
        "berger-sp",
        Real,
        |v| R::sp(v.v("kp"), v.v("kq")).plus(&R::sp(v.v("lp"), v.v("lq"))),
    ),
    e(A::Sp, "sp(2p,C)", "", "p == q", "berger-sp", Real, |v| {
        R::sp_c(v.v("p"))
    }),
    e(A::Sp, "u(p,q)", "", "", "berger-sp", Real, |v| R::u(v.v("p"), v.v("q"))),
    e(A::Sp, "sl(p,H)+R", "", "p == q", "berger-sp", Real, |v| {
        R::sl_h(v.v("p")).plus(&r1())
    }),
    e(A::SpR, "sp(2k,R)+sp(2l,R)", SPLIT_N, "", "berger-sp", Real, |v| {
        R::sp_r(v.v("k")).plus(&R::sp_r(v.v("l")))
    }),
    e(A::SpR, "sp(n,C)", "", "n even", "berger-sp", Real, |v| {
        R::sp_c(v.v("n") / 2)
    }),
    e(A::SpR, "u(k,l)", SPLIT_N, "", "berger-sp", Real, |v| {
        R::u(v.v("k"), v.v("l"))
    }),
    e(A::SpR, "sl(n,R)+R", "", "", "berger-sp", Real, |v| {
        R::sl_r(v.v("n")).plus(&r1())
    }),
    // g2.
    x(G2C, "sl(2,C)+sl(2,C)", "berger-g2", Hol),
    x(G2C, "g2(2)", "berger-g2", RealForm),
    x(E::G2_2, "sl(2,R)+sl(2,R)", "berger-g2", Real),
    // f4.
    x(F4C, "sp(6,C)+sp(2,C)", "berger-f4", Hol),
    x(F4C, "so(9,C)", "berger-f4", Hol),
    x(F4C, "f4(4)", "berger-f4", RealForm),
    x(F4C, "f4(-20)", "berger-f4", RealForm),
    x(E::F4_4, "sp(6,R)+sp(2,R)", "berger-f4", Real),
    x(E::F4_4, "sp(1,2)+sp(1)", "berger-f4", Real),
    x(E::F4_4, "so(4,5)", "berger-f4", Real),
    x(E::F4m20, "sp(1,2)+sp(1)", "berger-f4", Real),
    x(E::F4m20, "so(1,8)", "berger-f4", Real),
    // e6.
    x(E6C, "sp(8,C)", "berger-e6", Hol),
    x(E6C, "sl(6,C)+sl(2,C)", "berger-e6", Hol),
    x(E6C, "so(10,C)+so(2,C)", "berger-e6", Hol),
    x(E6C, "f4(C)", "berger-e6", Hol),
    x(E6C, "e6(6)", "berger-e6", RealForm),
    x(E6C, "e6(2)", "berger-e6", RealForm),
    x(E6C, "e6(-14)", "berger-e6", RealForm),
    x(E6C, "e6(-26)", "berger-e6", RealForm),
    x(E::E6_6, "sp(2,2)", "berger-e6", Real),
    x(E::E6_6, "sp(8,R)", "berger-e6", Real),
    x(E::E6_6, "sl(6,R)+sl(2,R)", "berger-e6", Real),
    x(E::E6_6, "sl(3,H)+su(2)", "berger-e6", Real),
    x(E::E6_6, "so(5,5)+so(1,1)", "berger-e6", Real),
    noted(
        x(E::E6_6, "f4(4)", "berger-e6", Real),
        "f4(4) is listed for both e6(6) and e6(2); stored once per ambient",
    ),
    x(E::E6_2, "sp(1,3)", "berger-e6", Real),
    x(E::E6_2, "sp(8,R)", "berger-e6", Real),
    x(E::E6_2, "su(2,4)+su(2)", "berger-e6", Real),
    x(E::E6_2, "su(3,3)+sl(2,R)", "berger-e6", Real),
    x(E::E6_2, "so(4,6)+so(2)", "berger-e6", Real),
    x(E::E6_2, "so*(10)+so(2)", "berger-e6", Real),
    noted(
        x(E::E6_2, "f4(4)", "berger-e6", Real),
        "f4(4) is listed for both e6(6) and e6(2); stored once per ambient",
    ),
    x(E::E6m14, "sp(2,2)", "berger-e6", Real),
    x(E::E6m14, "su(2,4)+su(2)", "berger-e6", Real),
    x(E::E6m14, "su(1,5)+sl(2,R)", "berger-e6", Real),
    x(E::E6m14, "so(2,8)+so(2)", "berger-e6", Real),
    x(E::E6m14, "so*(10)+so(2)", "berger-e6", Real),
    x(E::E6m14, "f4(-20)", "berger-e6", Real),
    x(E::E6m26, "sp(1,3)", "berger-e6", Real),
    x(E::E6m26, "sl(3,H)+sp(1)", "berger-e6", Real),
    x(E::E6m26, "so(1,9)+so(1,1)", "berger-e6", Real),
    x(E::E6m26, "f4(-20)", "berger-e6", Real),
    // e7.
    x(E7C, "sl(8,C)", "berger-e7", Hol),
    x(E7C, "so(12,C)+sl(2,C)", "berger-e7", Hol),
    x(E7C, "e6(C)+so(2,C)", "berger-e7", Hol),
    x(E7C, "e7(7)", "berger-e7", RealForm),
    x(E7C, "e7(-5)", "berger-e7", RealForm),
    x(E7C, "e7(-25)", "berger-e7", RealForm),
    x(E::E7_7, "su(4,4)", "berger-e7", Real),
    x(E::E7_7, "sl(8,R)", "berger-e7", Real),
    x(E::E7_7, "sl(4,H)", "berger-e7", Real),
    x(E::E7_7, "so(6,6)+sl(2,R)", "berger-e7", Real),
    x(E::E7_7, "so*(12)+sp(1)", "berger-e7", Real),
    x(E::E7_7, "e6(6)+so(1,1)", "berger-e7", Real),
    x(E::E7_7, "e6(2)+so(2)", "berger-e7", Real),
    x(E::E7m5, "su(4,4)", "berger-e7", Real),
    x(E::E7m5, "su(2,6)", "berger-e7", Real),
    x(E::E7m5, "so(4,8)+su(2)", "berger-e7", Real),
    x(E::E7m5, "so*(12)+sl(2,R)", "berger-e7", Real),
    noted(
        x(E::E7m5, "e6(2)+so(2)", "berger-e7", Real),
        "printed with a product sign; read as a direct sum",
    ),
    x(E::E7m5, "e6(-14)+so(2)", "berger-e7", Real),
    x(E::E7m25, "sl(4,H)", "berger-e7", Real),
    x(E::E7m25, "su(2,6)", "berger-e7", Real),
    x(E::E7m25, "so(2,10)+sl(2,R)", "berger-e7", Real),
    x(E::E7m25, "so*(12)+sp(1)", "berger-e7", Real),
    x(E::E7m25, "e6(-14)+so(2)", "berger-e7", Real),
    x(E::E7m25, "e6(-26)+so(1,1)", "berger-e7", Real),
    // e8.
    x(E8C, "e7(C)+sl(2,C)", "berger-e8", Hol),
    x(E8C, "so(16,C)", "berger-e8", Hol),
    x(E8C, "e8(8)", "berger-e8", RealForm),
    x(E8C, "e8(-24)", "berger-e8", RealForm),
    x(E::E8_8, "e7(7)+sl(2,R)", "berger-e8", Real),
    x(E::E8_8, "e7(-5)+su(2)", "berger-e8", Real),
    x(E::E8_8, "so(8,8)", "berger-e8", Real),
    x(E::E8_8, "so*(16)", "berger-e8", Real),
    x(E::E8m24, "e7(-25)+sl(2,R)", "berger-e8", Real),
    x(E::E8m24, "e7(-5)+su(2)", "berger-e8", Real),
    x(E::E8m24, "so(4,12)", "berger-e8", Real),
    x(E::E8m24, "so*(16)", "berger-e8", Real),
];

/// The Cartan involution, whose fixed algebra is the maximal compact one.
pub(super) static COMPACT: IsotropyEntry = IsotropyEntry {
    ambient: A::AnyNoncompact,
    isotropy: "k",
    vars: "",
    conds: "",
    source: "cartan-compact",
    kind: EntryKind::Compact,
    note: None,
    build: Build::MaxCompact,
};

/// Order-3 outer automorphisms of so(8,C).
pub(super) static TRIALITY_SO8C: &[IsotropyEntry] = &[
    t("so(8,C)", "g2(C)", "triality-so8", Hol),
    t("so(8,C)", "sl(3,C)", "triality-so8", Hol),
];

/// Order-3 outer automorphisms of so(4,4): real forms of the complex fixed algebras.
pub(super) static TRIALITY_SO44: &[IsotropyEntry] = &[
    t("so(4,4)", "g2(2)", "triality-so44", Real),
    t("so(4,4)", "sl(3,R)", "triality-so44", Real),
    t("so(4,4)", "su(2,1)", "triality-so44", Real),
    noted(
        e(
            A::Only("so(4,4)"),
            "u(dp,dq)+so(sp,sq)",
            "dp in 0..=2; dq in 0..=2; sp = 4-2*dp; sq = 4-2*dq",
            "dp+dq >= 1",
            "triality-so44",
            Real,
            |v| R::u(v.v("dp"), v.v("dq")).plus(&R::so(v.v("sp"), v.v("sq"))),
        ),
        "dp+dq >= 1 so that the unitary block is present",
    ),
];
