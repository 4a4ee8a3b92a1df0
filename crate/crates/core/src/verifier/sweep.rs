//! Exhaustive runs of the case checks over the catalog.

use super::lattice::check_semisimple_with;
use super::{verify_algebra, CaseResult, Route, SemisimpleReport, VerifyError};
use crate::atlas;
use crate::catalog::{sweep, SimpleAlgebra, SweepScope};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Complex,
    Real,
    /// Isotypic pairs of noncompact simple algebras.
    Semisimple,
    All,
}

impl Scope {
    pub fn from_name(s: &str) -> Option<Scope> {
        match s {
            "complex" => Some(Scope::Complex),
            "real" => Some(Scope::Real),
            "semisimple" => Some(Scope::Semisimple),
            "all" => Some(Scope::All),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub scope: Scope,
    pub max_param: i64,
    pub algebras: usize,
    pub cases: Vec<CaseResult>,
    pub products: Vec<SemisimpleReport>,
    /// Algebras whose checks could not run, with the reason.
    pub errors: Vec<(String, String)>,
    pub elapsed_ms: u128,
}

impl SweepReport {
    pub fn failures(&self) -> Vec<&CaseResult> {
        self.cases.iter().filter(|c| !c.pass).collect()
    }

    pub fn failed_products(&self) -> Vec<&SemisimpleReport> {
        self.products.iter().filter(|p| !p.pass()).collect()
    }

    pub fn pass(&self) -> bool {
        self.errors.is_empty() && self.failures().is_empty() && self.failed_products().is_empty()
    }

    /// (algebra, witness) of every flagged equality case.
    pub fn equality_set(&self) -> BTreeSet<(SimpleAlgebra, String)> {
        self.cases
            .iter()
            .filter(|c| c.route == Route::EqualityCaseLemma23)
            .map(|c| (c.algebra, c.witness.clone()))
            .collect()
    }

    /// Smallest margin over the cases that are not equality cases.
    pub fn worst_strict(&self) -> Option<&CaseResult> {
        self.cases
            .iter()
            .filter(|c| c.route != Route::EqualityCaseLemma23)
            .min_by_key(|c| c.margin)
    }
}

fn noncompact(max_param: i64, complex: bool, real: bool) -> Vec<SimpleAlgebra> {
    let mut v = Vec::new();
    if complex {
        v.extend(sweep(SweepScope::Complex, max_param));
    }
    if real {
        v.extend(sweep(SweepScope::Real, max_param));
    }
    v.sort();
    v
}

/// Isotypic pairs {a, b} (including a = b) drawn from the noncompact
/// algebras of the range.
fn isotypic_pairs(algebras: &[SimpleAlgebra]) -> Vec<[SimpleAlgebra; 2]> {
    let cx: Vec<_> = algebras.iter().map(|a| a.complexification()).collect();
    let mut out = Vec::new();
    for i in 0..algebras.len() {
        for j in i..algebras.len() {
            if cx[i] == cx[j] {
                out.push([algebras[i], algebras[j]]);
            }
        }
    }
    out
}

/// Runs every case check for the scope, with parameters (n or p+q) up to
/// `max_param`. Results are sorted by algebra, route and witness.
pub fn verify_scope(scope: Scope, max_param: i64) -> SweepReport {
    let start = Instant::now();
    let (complex, real) = match scope {
        Scope::Complex => (true, false),
        Scope::Real => (false, true),
        Scope::Semisimple => (false, false),
        Scope::All => (true, true),
    };
    let list = noncompact(max_param, complex, real);
    let mut cases = Vec::new();
    let mut errors = Vec::new();
    for a in &list {
        match verify_algebra(a) {
            Ok(v) => cases.extend(v),
            Err(e) => errors.push((a.render(), e.to_string())),
        }
    }
    cases.sort_by(|x, y| (x.algebra, x.route, &x.witness).cmp(&(y.algebra, y.route, &y.witness)));

    let mut products = Vec::new();
    let mut algebras = list.len();
    if matches!(scope, Scope::Semisimple | Scope::All) {
        let pool = noncompact(max_param, true, true);
        let pairs = isotypic_pairs(&pool);
        algebras = algebras.max(pool.len());
        let mut cache: BTreeMap<SimpleAlgebra, (i64, String)> = BTreeMap::new();
        let mut max_fixed = |f: &SimpleAlgebra| -> Result<(i64, String), VerifyError> {
            if let Some(v) = cache.get(f) {
                return Ok(v.clone());
            }
            let (m, w) = atlas::max_fixed_dim(f)?;
            let v = (m, w.algebra.render());
            cache.insert(*f, v.clone());
            Ok(v)
        };
        for p in pairs {
            match check_semisimple_with(&p, &mut max_fixed) {
                Ok(r) => products.push(r),
                Err(e) => errors.push((format!("{}+{}", p[0], p[1]), e.to_string())),
            }
        }
    }
    SweepReport {
        scope,
        max_param,
        algebras,
        cases,
        products,
        errors,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
