use liedim::atlas;
use liedim::catalog::{parse_reductive, parse_simple, sweep, Exceptional, Family, SimpleAlgebra, SweepScope};
use liedim::verifier::{check_semisimple, target, vcd, verify_algebra, Route};
use proptest::prelude::*;
use proptest::sample::select;
use std::sync::OnceLock;

fn catalog() -> &'static [SimpleAlgebra] {
    static ALL: OnceLock<Vec<SimpleAlgebra>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v: Vec<_> = [SweepScope::Compact, SweepScope::Complex, SweepScope::Real]
            .into_iter()
            .flat_map(|s| sweep(s, 14))
            .collect();
        v.sort();
        v.dedup();
        v
    })
}

fn noncompact() -> Vec<SimpleAlgebra> {
    catalog().iter().copied().filter(|a| !a.is_compact()).collect()
}

/// Raw families, including non-canonical and out-of-domain parameters.
fn family() -> impl Strategy<Value = Family> {
    let n = 0i64..12;
    prop_oneof![
        n.clone().prop_map(Family::SlC),
        n.clone().prop_map(Family::SoC),
        n.clone().prop_map(Family::SpC),
        n.clone().prop_map(Family::SlR),
        n.clone().prop_map(Family::SlH),
        n.clone().prop_map(Family::SpR),
        n.clone().prop_map(Family::SoStar),
        n.clone().prop_map(Family::SuCompact),
        n.clone().prop_map(Family::SoCompact),
        n.clone().prop_map(Family::SpCompact),
        (0i64..8, 0i64..8).prop_map(|(p, q)| Family::So(p, q)),
        (0i64..8, 0i64..8).prop_map(|(p, q)| Family::Su(p, q)),
        (0i64..8, 0i64..8).prop_map(|(p, q)| Family::Sp(p, q)),
        select(Exceptional::all()).prop_map(Family::Exceptional),
    ]
}

/// Pairs of noncompact algebras with the same complexification.
fn isotypic_pair() -> impl Strategy<Value = (SimpleAlgebra, SimpleAlgebra)> {
    select(noncompact()).prop_flat_map(|a| {
        let cx = a.complexification();
        let partners: Vec<_> = noncompact()
            .into_iter()
            .filter(|b| b.complexification() == cx)
            .collect();
        (Just(a), select(partners))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn render_parse_round_trip(a in select(catalog())) {
        prop_assert_eq!(parse_simple(&a.render()).unwrap(), a);
    }

    #[test]
    fn canonicalization_is_idempotent(f in family()) {
        if let Ok(a) = SimpleAlgebra::new(f) {
            prop_assert_eq!(SimpleAlgebra::new(a.family()).unwrap(), a);
            prop_assert_eq!(parse_simple(&f.render()).unwrap(), a);
            prop_assert_eq!(a.dims().dim_g, {
                let r = parse_reductive(&f.render()).unwrap();
                r.dims().dim_g
            });
        }
    }

    #[test]
    fn reductive_round_trip(a in select(catalog()), b in select(catalog()), c in 0i64..3, s in 0i64..3) {
        let text = format!("{a}+{b}{}{}", "+u(1)".repeat(c as usize), "+R".repeat(s as usize));
        let r = parse_reductive(&text).unwrap();
        prop_assert_eq!(parse_reductive(&r.render()).unwrap(), r.clone());
        prop_assert_eq!(r.dims().dim_g, a.dims().dim_g + b.dims().dim_g + c + s);
    }

    #[test]
    fn dimension_invariants(a in select(catalog())) {
        let d = a.dims();
        let k = a.max_compact().dims();
        prop_assert_eq!(d.dim_k, k.dim_g);
        prop_assert_eq!(d.dim_s, d.dim_g - k.dim_g);
        // rk_R can exceed rk K (split forms); the complex rank bounds both.
        prop_assert!(0 <= d.rk_r && d.rk_r <= a.complex_rank());
        prop_assert!(d.rk_cpt <= a.complex_rank());
        if a.is_complex() {
            prop_assert_eq!(d.rk_r, a.complex_rank());
        }
        prop_assert!(d.rk_r <= d.dim_s);
        if a.is_compact() {
            prop_assert_eq!((d.dim_s, d.rk_r), (0, 0));
        }
        if a.is_complex() {
            prop_assert_eq!(d.dim_s, d.dim_k);
        }
        if !a.is_complex() {
            prop_assert_eq!(a.complexification().dims().dim_g, 2 * d.dim_g);
        }
    }

    #[test]
    fn vcd_has_slope_minus_one(a in select(noncompact()), k in 0i64..8) {
        let d = a.dims();
        let rk = k.min(d.rk_r);
        let v = vcd(&[a], rk, true).unwrap();
        prop_assert_eq!(v.vcd, d.dim_s - rk);
        if rk < d.rk_r {
            prop_assert_eq!(vcd(&[a], rk + 1, true).unwrap().vcd, v.vcd - 1);
        } else {
            prop_assert!(vcd(&[a], rk + 1, true).is_err());
        }
        prop_assert_eq!(v.cocompact, rk == 0);
    }

    #[test]
    fn case_margins_are_consistent(a in select(noncompact())) {
        let cases = verify_algebra(&a).unwrap();
        prop_assert!(!cases.is_empty());
        let tgt = target(&a);
        for c in &cases {
            prop_assert_eq!(c.algebra, a);
            prop_assert!(c.pass);
            prop_assert_eq!(c.margin == 0, c.route == Route::EqualityCaseLemma23);
            if matches!(c.route, Route::BergerInvolution | Route::Triality) {
                let h = c.fixed_algebra.as_ref().unwrap();
                prop_assert_eq!(c.margin, tgt - h.dims().dim_s);
            }
        }
        // The involution fixed sets reported are exactly the atlas instances.
        if a.dims().rk_r >= 2 {
            let (m, _) = atlas::max_fixed_dim(&a).unwrap();
            let worst = cases
                .iter()
                .filter(|c| matches!(c.route, Route::BergerInvolution | Route::EqualityCaseLemma23))
                .filter_map(|c| c.fixed_algebra.as_ref())
                .map(|h| h.dims().dim_s)
                .max();
            prop_assert_eq!(worst, Some(m));
        }
    }

    #[test]
    fn isotypic_products_pass((a, b) in isotypic_pair()) {
        let r = check_semisimple(&[a, b]).unwrap();
        prop_assert!(r.pass());
        prop_assert_eq!(r.dim_s, a.dims().dim_s + b.dims().dim_s);
        prop_assert!(r.chain_value <= r.naive_target);
    }
}
