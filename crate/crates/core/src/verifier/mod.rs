//! Case checks for the fixed-point inequality dim S^α < dim S − rk_R G.
//!
//! Every noncompact simple algebra is sent down one or more routes. Real
//! rank one needs nothing beyond S^α being a proper submanifold. Otherwise
//! an inner route bounds fixed sets of finite-order elements of the adjoint
//! group (a classical closed-form bound, or a classical subgroup for the
//! exceptional algebras), and the involution route walks the isotropy atlas.
//! The order-3 outer automorphisms of so(8,C) and so(4,4) get their own route.
//!
//! The margin of a case is dim S − rk_R G minus the (bound on the) fixed
//! dimension. A case passes when the margin is positive, with one exception:
//! for sl(n,R) and so(p,q) the margin is exactly 0 at the class of Q_{n−1,1},
//! and those cases pass with a flag.

mod lattice;
mod sweep;

pub use lattice::{check_semisimple, vcd, CycleBound, SemisimpleReport, VcdResult};
pub use sweep::{verify_scope, Scope, SweepReport};

use crate::atlas::{self, AtlasError, Instance};
use crate::catalog::{parse_reductive, Exceptional, Family, OutIso, ReductiveAlgebra, SimpleAlgebra};
use crate::centralizer::{bound, g22_case, CentralizerError, Group};
use crate::tables::{self, TableError};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Rank1,
    /// Closed-form centralizer bound for a classical adjoint group.
    ClassicalInner,
    Lemma32Inner,
    Lemma41Inner,
    BergerInvolution,
    Triality,
    EqualityCaseLemma23,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Rank1 => "rank1",
            Route::ClassicalInner => "classical_inner",
            Route::Lemma32Inner => "lemma32_inner",
            Route::Lemma41Inner => "lemma41_inner",
            Route::BergerInvolution => "berger_involution",
            Route::Triality => "triality",
            Route::EqualityCaseLemma23 => "equality_case_lemma23",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub algebra: SimpleAlgebra,
    pub route: Route,
    /// dim S − rk_R G − dim S^witness.
    pub margin: i64,
    pub witness: String,
    /// Fixed algebra of the witness, when the witness is an automorphism
    /// with a known fixed algebra.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_algebra: Option<ReductiveAlgebra>,
    pub pass: bool,
    /// Set on equality cases and on cases whose first bound was not strict.
    pub flagged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CaseResult {
    fn strict(algebra: SimpleAlgebra, route: Route, margin: i64, witness: String) -> Self {
        CaseResult {
            algebra,
            route,
            margin,
            witness,
            fixed_algebra: None,
            pass: margin > 0,
            flagged: false,
            detail: None,
        }
    }

    fn equality(algebra: SimpleAlgebra, witness: String) -> Self {
        CaseResult {
            algebra,
            route: Route::EqualityCaseLemma23,
            margin: 0,
            witness,
            fixed_algebra: None,
            pass: true,
            flagged: true,
            detail: Some(
                "equality at the Q_{n-1,1} class; the intersection and bordification conditions of the \
                 equality-case criterion are not checked here"
                    .into(),
            ),
        }
    }

    fn fixing(mut self, h: ReductiveAlgebra) -> Self {
        self.fixed_algebra = Some(h);
        self
    }

    fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Atlas(#[from] AtlasError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error("{0} has outer automorphisms of order greater than 2; use the triality route")]
    NeedsTrialityRoute(String),
    #[error("{algebra}: {reason}")]
    NotApplicable { algebra: String, reason: String },
    #[error("rk_Q = {rk_q} exceeds {limit}, the {what}")]
    RankBoundViolated { rk_q: i64, limit: i64, what: &'static str },
    #[error("an irreducible lattice needs isotypic factors: {0} and {1} have different complexifications")]
    IsotypyViolated(String, String),
    #[error("at least two noncompact factors are required, got {0}")]
    TooFewFactors(usize),
    #[error("rk_Q must be non-negative, got {0}")]
    NegativeRank(i64),
}

fn not_applicable<T>(a: &SimpleAlgebra, reason: &str) -> Result<T, VerifyError> {
    Err(VerifyError::NotApplicable {
        algebra: a.render(),
        reason: reason.into(),
    })
}

/// dim S − rk_R G.
pub fn target(a: &SimpleAlgebra) -> i64 {
    let d = a.dims();
    d.dim_s - d.rk_r
}

/// Real rank one: S^α is a proper submanifold, so dim S^α ≤ dim S − 1.
/// Returns `None` for higher rank.
pub fn rank1_shortcut(a: &SimpleAlgebra) -> Option<CaseResult> {
    let d = a.dims();
    if d.rk_r != 1 {
        return None;
    }
    let mut r = CaseResult::strict(
        *a,
        Route::Rank1,
        d.dim_s - (d.dim_s - 1),
        format!("proper submanifold: dim S^α ≤ {} = dim S − 1", d.dim_s - 1),
    );
    if let Ok((v, w)) = atlas::max_fixed_dim(a) {
        r = r.with_detail(format!("largest involution fixed set {v}: {}", w.describe()));
    }
    Some(r)
}

/// The two inequalities of the compact-subgroup argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InnerTerms {
    pub dim_k: i64,
    pub dim_h: i64,
    pub rk_h: i64,
    pub rk_k: i64,
    pub rk_r: i64,
    pub h_bound: i64,
}

impl InnerTerms {
    /// dim K − rk_R − dim H.
    pub fn cover_margin(&self) -> i64 {
        self.dim_k - self.rk_r - self.dim_h
    }

    /// dim H − rk_R − bound(H).
    pub fn centralizer_margin(&self) -> i64 {
        self.dim_h - self.rk_r - self.h_bound
    }
}

pub fn lemma32_terms(a: &SimpleAlgebra) -> Result<InnerTerms, VerifyError> {
    let row = tables::inner_row(a)?;
    let c = row.derived();
    Ok(InnerTerms {
        dim_k: c.dim_k,
        dim_h: c.dim_h,
        rk_h: c.rk,
        rk_k: a.dims().rk_cpt,
        rk_r: c.rk_r,
        h_bound: row.h_bound()?,
    })
}

/// Complex exceptional algebras, through the compact subgroup H of full rank.
pub fn check_lemma32(a: &SimpleAlgebra) -> Result<CaseResult, VerifyError> {
    let t = lemma32_terms(a)?;
    let row = tables::inner_row(a)?;
    let witness = format!(
        "H = {}: dim H + rk_R = {} + {} = {} < {} = dim K; bound(H) + rk_R = {} + {} = {} < {} = dim H",
        row.h,
        t.dim_h,
        t.rk_r,
        t.dim_h + t.rk_r,
        t.dim_k,
        t.h_bound,
        t.rk_r,
        t.h_bound + t.rk_r,
        t.dim_h
    );
    let mut r = CaseResult::strict(
        *a,
        Route::Lemma32Inner,
        t.cover_margin().min(t.centralizer_margin()),
        witness,
    );
    if t.rk_h != t.rk_k {
        r.pass = false;
        r = r.with_detail(format!("rank mismatch: rk H = {}, rk K = {}", t.rk_h, t.rk_k));
    }
    Ok(r)
}

/// The two inequalities of the noncompact-subgroup argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubgroupTerms {
    pub dim_s: i64,
    pub dim_s_bar: i64,
    pub rk_k_bar: i64,
    pub rk_k: i64,
    pub rk_r: i64,
    /// Bound on dim S̄^A for non-central A in K̄.
    pub s_bar_bound: i64,
}

impl SubgroupTerms {
    /// dim S − rk_R − dim S̄.
    pub fn cover_margin(&self) -> i64 {
        self.dim_s - self.rk_r - self.dim_s_bar
    }

    /// dim S̄ − rk_R − bound(S̄^A).
    pub fn fixed_margin(&self) -> i64 {
        self.dim_s_bar - self.rk_r - self.s_bar_bound
    }
}

pub fn lemma41_terms(a: &SimpleAlgebra) -> Result<SubgroupTerms, VerifyError> {
    let row = tables::subgroup_row(a)?;
    let c = row.derived();
    Ok(SubgroupTerms {
        dim_s: c.dim_s,
        dim_s_bar: c.dim_s_bar,
        rk_k_bar: c.rk,
        rk_k: a.dims().rk_cpt,
        rk_r: c.rk_r,
        s_bar_bound: row.s_bar_bound()?,
    })
}

/// Real exceptional algebras of real rank ≥ 2, through the subgroup Ḡ.
/// When the bound on S̄^A is only an equality (g2(2) and f4(4)), the
/// equality elements are resolved directly and the result is flagged.
pub fn check_lemma41(a: &SimpleAlgebra) -> Result<CaseResult, VerifyError> {
    let t = lemma41_terms(a)?;
    let row = tables::subgroup_row(a)?;
    let witness = format!(
        "Ḡ = {}: dim S̄ = {} < {} − {} = dim S − rk_R; dim S̄^A ≤ {} < {} − {} = dim S̄ − rk_R",
        row.g_bar, t.dim_s_bar, t.dim_s, t.rk_r, t.s_bar_bound, t.dim_s_bar, t.rk_r
    );
    let mut r = CaseResult::strict(*a, Route::Lemma41Inner, t.cover_margin().min(t.fixed_margin()), witness);
    if t.rk_k_bar != t.rk_k {
        r.pass = false;
        return Ok(r.with_detail(format!("rank mismatch: rk K̄ = {}, rk K = {}", t.rk_k_bar, t.rk_k)));
    }
    if t.cover_margin() > 0 && t.fixed_margin() == 0 {
        let resolved = match row.algebra {
            Exceptional::G2_2 => g22_resolution(t)?,
            Exceptional::F4_4 => f44_equality_case(),
            _ => return Ok(r),
        };
        let margin = t.cover_margin().min(resolved.margin);
        r = CaseResult {
            margin,
            pass: margin > 0 && resolved.pass,
            flagged: true,
            detail: Some(format!(
                "subgroup-level margin 0 at the equality elements; resolved: {}",
                resolved.witness
            )),
            ..r
        };
    }
    Ok(r)
}

/// g2(2): the equality elements of K̄ are (±I₂, R_θ). At θ = π/2 the
/// centralizer in SO(3,4) of the corresponding Ã bounds dim C_G(A); at θ = π
/// the element is an involution and the isotropy atlas applies.
fn g22_resolution(t: SubgroupTerms) -> Result<CaseResult, VerifyError> {
    let a = SimpleAlgebra::exceptional(Exceptional::G2_2);
    let quarter = g22_case(1)?;
    let half = g22_case(2)?;
    let (inv, w) = atlas::max_fixed_dim(&a)?;
    let tgt = t.dim_s - t.rk_r;
    let margin = (tgt - quarter.chain_value).min(tgt - inv);
    Ok(CaseResult::strict(
        a,
        Route::Lemma41Inner,
        margin,
        format!(
            "θ = π/2: dim S^A ≤ dim C(Ã) − dim C_K(A) = {} − {} = {} < {}; θ = π: involution, dim S^ρ ≤ {} < {} ({}); \
             the centralizer chain alone gives {} at θ = π",
            quarter.dim_centralizer_g,
            quarter.compact_factor_centralizer,
            quarter.chain_value,
            tgt,
            inv,
            tgt,
            w.algebra,
            half.chain_value
        ),
    ))
}

/// f4(4): the equality element diag(−I₈, 1) of S(O(4)×O(5)) is an
/// involution, so its fixed algebra is one of the noncompact isotropy
/// algebras of f4(4) or compact.
pub fn f44_equality_case() -> CaseResult {
    let a = SimpleAlgebra::exceptional(Exceptional::F4_4);
    let tgt = target(&a);
    let candidates: Vec<(ReductiveAlgebra, i64)> = ["sp(6,R)+sp(2,R)", "sp(1,2)+sp(1)", "so(4,5)", "0"]
        .iter()
        .map(|s| {
            let h = parse_reductive(s).expect("candidate names parse");
            let d = h.dims().dim_s;
            (h, d)
        })
        .collect();
    let worst = candidates.iter().map(|c| c.1).max().unwrap_or(0);
    let list: Vec<String> = candidates.iter().map(|(h, d)| format!("{h}: {d} < {tgt}")).collect();
    CaseResult::strict(
        a,
        Route::Lemma41Inner,
        tgt - worst,
        format!("diag(−I₈, 1) is an involution; candidates {}", list.join(", ")),
    )
}

/// True when `h` is the fixed algebra of the Q_{n−1,1} class in some
/// presentation of `a` as sl(n,R) or so(p,q).
pub fn is_q_class_witness(a: &SimpleAlgebra, h: &ReductiveAlgebra) -> bool {
    atlas::pictures(a).into_iter().any(|f| match f {
        Family::SlR(n) => *h == ReductiveAlgebra::sl_r(n - 1).plus(&ReductiveAlgebra::split_abelian(1)),
        Family::So(p, q) => *h == ReductiveAlgebra::so(p, q - 1) || *h == ReductiveAlgebra::so(p - 1, q),
        _ => false,
    })
}

fn classical_group(a: &SimpleAlgebra) -> Option<Group> {
    match a.family() {
        Family::SlC(n) => Some(Group::Su(n)),
        Family::SoC(n) => Some(Group::So(n)),
        Family::SpC(n) => Some(Group::Sp(n)),
        _ => tables::noncompact_group(a),
    }
}

/// Closed-form bound on fixed dimensions of non-central finite-order
/// elements of a classical adjoint group. For a complex algebra dim S^A =
/// dim C_K(A), so the compact bound applies. sl(n,R), sl(n,H) and sp(2n,R)
/// have no closed form here and return `None`.
pub fn classical_inner(a: &SimpleAlgebra) -> Result<Option<CaseResult>, VerifyError> {
    let Some(g) = classical_group(a) else {
        return Ok(None);
    };
    let b = bound(g)?;
    let tgt = target(a);
    let margin = tgt - b;
    if let (Family::So(p, q), 0) = (a.family(), margin) {
        return Ok(Some(
            CaseResult::equality(
                *a,
                format!("Q_{{n-1,1}} class, fixed algebra {}", ReductiveAlgebra::so(p, q - 1)),
            )
            .fixing(ReductiveAlgebra::so(p, q - 1))
            .with_detail(format!(
                "{g} bound {b} = {tgt} = dim S − rk_R; equality only at the Q_{{n-1,1}} class"
            )),
        ));
    }
    Ok(Some(CaseResult::strict(
        *a,
        Route::ClassicalInner,
        margin,
        format!("{g}: dim S^A ≤ {b} < {tgt} = dim S − rk_R"),
    )))
}

fn involution_case(a: &SimpleAlgebra, i: &Instance) -> CaseResult {
    let margin = target(a) - i.dim_s;
    let r = if margin == 0 && is_q_class_witness(a, &i.algebra) {
        CaseResult::equality(*a, i.describe())
    } else {
        CaseResult::strict(*a, Route::BergerInvolution, margin, i.describe())
    };
    r.fixing(i.algebra.clone())
}

fn is_named(a: &SimpleAlgebra, name: &str) -> bool {
    crate::catalog::parse_simple(name).ok() == Some(*a)
}

/// One case per distinct fixed algebra of an involution of `a`.
///
/// so(p,p) with outer group D4 (p ≥ 6 even) is accepted: an automorphism
/// whose outer part has order 4 has a square with outer part of order 2 and
/// a larger fixed set, so involutions dominate. so(8,C) and so(4,4) carry
/// order-3 outer automorphisms and return `NeedsTrialityRoute`.
pub fn check_involutions(a: &SimpleAlgebra) -> Result<Vec<CaseResult>, VerifyError> {
    let out = a.out_group();
    if !out.all_order_le_2 && out.iso_type != OutIso::D4 {
        return Err(VerifyError::NeedsTrialityRoute(a.render()));
    }
    involution_cases(a)
}

fn involution_cases(a: &SimpleAlgebra) -> Result<Vec<CaseResult>, VerifyError> {
    if a.is_compact() {
        return not_applicable(a, "compact algebras have a point as symmetric space");
    }
    Ok(atlas::instances(a)?.iter().map(|i| involution_case(a, i)).collect())
}

/// Order-3 outer classes of so(8,C) and so(4,4).
pub fn check_triality(a: &SimpleAlgebra) -> Result<Vec<CaseResult>, VerifyError> {
    let tgt = target(a);
    Ok(atlas::triality_classes(a)?
        .into_iter()
        .map(|c| {
            CaseResult::strict(
                *a,
                Route::Triality,
                tgt - c.dim_s,
                format!(
                    "order {} class fixing {}: {} < {} ({})",
                    c.order, c.fixed_algebra, c.dim_s, tgt, c.source
                ),
            )
            .fixing(c.fixed_algebra)
        })
        .collect())
}

/// Every case for one noncompact simple algebra.
pub fn verify_algebra(a: &SimpleAlgebra) -> Result<Vec<CaseResult>, VerifyError> {
    if a.is_compact() {
        return not_applicable(a, "compact algebras have a point as symmetric space");
    }
    if let Some(r) = rank1_shortcut(a) {
        return Ok(vec![r]);
    }
    let mut out = Vec::new();
    match a.family() {
        Family::Exceptional(e) if e.is_complex() => out.push(check_lemma32(a)?),
        Family::Exceptional(_) => out.push(check_lemma41(a)?),
        _ => out.extend(classical_inner(a)?),
    }
    match check_involutions(a) {
        Ok(v) => out.extend(v),
        Err(VerifyError::NeedsTrialityRoute(_)) if is_named(a, "so(8,C)") || is_named(a, "so(4,4)") => {
            out.extend(involution_cases(a)?);
            out.extend(check_triality(a)?);
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_simple;

    fn alg(s: &str) -> SimpleAlgebra {
        parse_simple(s).unwrap()
    }

    #[test]
    fn rank_one() {
        assert_eq!(rank1_shortcut(&alg("so(1,5)")).unwrap().route, Route::Rank1);
        assert!(rank1_shortcut(&alg("f4(-20)")).unwrap().pass);
        assert!(rank1_shortcut(&alg("sl(3,R)")).is_none());
    }

    #[test]
    fn involution_examples() {
        let max = |s: &str| {
            check_involutions(&alg(s))
                .unwrap()
                .into_iter()
                .min_by_key(|c| c.margin)
                .unwrap()
        };
        assert_eq!(max("sl(6,C)").margin, 5);
        let r = max("sl(7,R)");
        assert_eq!((r.margin, r.route), (0, Route::EqualityCaseLemma23));
        assert!(r.witness.starts_with("sl(6,R)+R"));
        assert_eq!(max("sp(6,R)").margin, 1);
        assert!(matches!(
            check_involutions(&alg("so(8,C)")),
            Err(VerifyError::NeedsTrialityRoute(_))
        ));
    }

    #[test]
    fn triality_margins() {
        let v = check_triality(&alg("so(8,C)")).unwrap();
        assert_eq!(v.iter().map(|c| c.margin).collect::<Vec<_>>(), vec![24 - 14, 24 - 8]);
    }

    #[test]
    fn subgroup_cases() {
        let r = check_lemma41(&alg("e7(7)")).unwrap();
        assert_eq!(r.margin, 1);
        let g = check_lemma41(&alg("g2(2)")).unwrap();
        assert!(g.pass && g.flagged && g.margin == 1, "{g:?}");
        let f = check_lemma41(&alg("f4(4)")).unwrap();
        assert!(f.pass && f.flagged && f.margin == 4, "{f:?}");
    }
}
