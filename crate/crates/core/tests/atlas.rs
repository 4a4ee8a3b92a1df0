use liedim::atlas::{self, EntryKind};
use liedim::catalog::{parse_reductive, parse_simple, sweep, ReductiveAlgebra, SimpleAlgebra, SweepScope};
use std::collections::BTreeSet;

fn alg(s: &str) -> SimpleAlgebra {
    parse_simple(s).unwrap()
}

fn fixed_set(s: &str) -> BTreeSet<String> {
    atlas::instances(&alg(s))
        .unwrap()
        .into_iter()
        .filter(|i| i.entry.kind != EntryKind::Compact)
        .map(|i| i.algebra.render())
        .collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| parse_reductive(s).unwrap().render()).collect()
}

#[test]
fn every_entry_is_well_formed() {
    for e in atlas::all_entries() {
        e.validate()
            .unwrap_or_else(|m| panic!("{} / {}: {m}", e.ambient.template(), e.isotropy));
    }
}

#[test]
fn maximal_fixed_sets() {
    let (v, w) = atlas::max_fixed_dim(&alg("sl(5,C)")).unwrap();
    assert_eq!(v, 16);
    assert_eq!(w.algebra, parse_reductive("sl(4,C)+C").unwrap());

    let (v, w) = atlas::max_fixed_dim(&alg("sp(8,R)")).unwrap();
    assert_eq!(v, 14);
    assert_eq!(w.algebra, parse_reductive("sp(6,R)+sl(2,R)").unwrap());

    let (v, w) = atlas::max_fixed_dim(&alg("sl(4,C)")).unwrap();
    assert_eq!(v, 10);
    assert_eq!(w.algebra, parse_reductive("sp(4,C)").unwrap());

    let (v, _) = atlas::max_fixed_dim(&alg("sl(6,C)")).unwrap();
    assert_eq!(v, 25);
}

#[test]
fn exceptional_rows() {
    assert_eq!(
        fixed_set("e8(8)"),
        set(&["e7(7)+sl(2,R)", "e7(-5)+su(2)", "so(8,8)", "so*(16)"])
    );
    assert_eq!(fixed_set("g2(C)"), set(&["sl(2,C)+sl(2,C)", "g2(2)"]));
    assert!(fixed_set("e7(-5)").contains("e6(2)+u(1)"));
    let exc = atlas::isotropy_entries(&alg("e8(8)")).unwrap();
    assert!(exc.iter().any(|e| e.kind == EntryKind::Compact));
}

#[test]
fn sl_n_c_row() {
    let got = fixed_set("sl(6,C)");
    let want = set(&[
        "so(6,C)",
        "sl(5,C)+C",
        "sl(2,C)+sl(4,C)+C",
        "sl(3,C)+sl(3,C)+C",
        "sp(6,C)",
        "sl(6,R)",
        "su(1,5)",
        "su(2,4)",
        "su(3,3)",
        "sl(3,H)",
    ]);
    assert_eq!(got, want);
}

#[test]
fn isomorphic_presentations_share_entries() {
    // sl(4,R) = so(3,3): so(3,2) = sp(4,R) appears through the orthogonal picture.
    let got = fixed_set("sl(4,R)");
    assert!(got.contains("sp(4,R)"));
    assert!(got.contains("sl(3,R)+R"));
}

#[test]
fn triality() {
    let so8 = atlas::triality_classes(&alg("so(8,C)")).unwrap();
    let dims: Vec<(String, i64)> = so8.iter().map(|c| (c.fixed_algebra.render(), c.dim_s)).collect();
    assert_eq!(dims, vec![("g2(C)".to_string(), 14), ("sl(3,C)".to_string(), 8)]);
    let so44 = atlas::triality_classes(&alg("so(4,4)")).unwrap();
    let has = |s: &str, d: i64| {
        let h = parse_reductive(s).unwrap();
        so44.iter()
            .any(|c| c.fixed_algebra == h && c.dim_s == d && c.order == 3)
    };
    assert!(has("g2(2)", 8));
    assert!(has("sl(3,R)", 5));
    assert!(has("su(2,1)", 4));
    assert!(has("u(1,1)+so(2,2)", 6));
    assert!(atlas::triality_classes(&alg("sl(5,C)")).is_err());
}

#[test]
fn compact_ambient_is_rejected() {
    assert!(atlas::instances(&alg("su(5)")).is_err());
    assert!(atlas::isotropy_entries(&alg("e8")).is_err());
}

fn sweep_all(max: i64) -> Vec<SimpleAlgebra> {
    let mut v = sweep(SweepScope::Complex, max);
    v.extend(sweep(SweepScope::Real, max));
    v
}

#[test]
fn fixed_sets_are_proper() {
    for a in sweep_all(14) {
        let d = a.dims();
        for i in atlas::instances(&a).unwrap() {
            assert!(i.dim_s < d.dim_s, "{a}: {}", i.describe());
            assert!(i.algebra.dims().dim_g < d.dim_g, "{a}: {}", i.describe());
        }
    }
}

#[test]
fn real_forms_have_half_dimension() {
    for a in sweep(SweepScope::Complex, 14) {
        for i in atlas::instances(&a).unwrap() {
            if matches!(i.entry.kind, EntryKind::RealForm | EntryKind::Compact) {
                assert_eq!(2 * i.algebra.dims().dim_g, a.dims().dim_g, "{a}: {}", i.describe());
            }
        }
    }
}

/// The complexification of a real fixed algebra is a complex fixed algebra
/// of the complexified ambient.
#[test]
fn real_entries_complexify_into_the_complex_row() {
    for a in sweep(SweepScope::Real, 14) {
        let ac = a.complexification();
        let [c] = ac.simple_factors() else {
            panic!("{a} complexifies to {ac}")
        };
        let complex: BTreeSet<ReductiveAlgebra> = atlas::instances(c)
            .unwrap()
            .into_iter()
            .filter(|i| i.entry.kind == EntryKind::ComplexIsotropy)
            .map(|i| i.algebra)
            .collect();
        for i in atlas::instances(&a).unwrap() {
            let hc = i.algebra.complexification();
            assert!(complex.contains(&hc), "{a}: {} complexifies to {hc}", i.describe());
        }
    }
}
