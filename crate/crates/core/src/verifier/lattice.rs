//! Lattice-level arithmetic: vcd from the rational rank, and the fixed-set
//! chain for semisimple products.

use super::VerifyError;
use crate::atlas;
use crate::catalog::SimpleAlgebra;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VcdResult {
    pub dim_s: i64,
    pub rk_q: i64,
    pub vcd: i64,
    /// Reported equal to vcd; not recomputed.
    pub gd: i64,
    pub irreducible: bool,
    pub cocompact: bool,
}

fn noncompact(factors: &[SimpleAlgebra]) -> Result<(), VerifyError> {
    match factors.iter().find(|f| f.is_compact()) {
        Some(f) => Err(VerifyError::NotApplicable {
            algebra: f.render(),
            reason: "compact factors do not contribute to the symmetric space; drop them".into(),
        }),
        None => Ok(()),
    }
}

/// vcd = dim S − rk_Q for a lattice in the product of `factors`.
///
/// An irreducible lattice needs isotypic factors, and then rk_Q is at most
/// the smallest real rank of a factor; otherwise rk_Q is at most the total
/// real rank.
pub fn vcd(factors: &[SimpleAlgebra], rk_q: i64, irreducible: bool) -> Result<VcdResult, VerifyError> {
    if factors.is_empty() {
        return Err(VerifyError::TooFewFactors(0));
    }
    noncompact(factors)?;
    if rk_q < 0 {
        return Err(VerifyError::NegativeRank(rk_q));
    }
    if irreducible {
        let c0 = factors[0].complexification();
        if let Some(f) = factors.iter().find(|f| f.complexification() != c0) {
            return Err(VerifyError::IsotypyViolated(factors[0].render(), f.render()));
        }
    }
    let ranks = factors.iter().map(|f| f.dims().rk_r);
    let (limit, what) = if irreducible {
        (ranks.min().unwrap_or(0), "smallest real rank of a factor")
    } else {
        (ranks.sum(), "total real rank")
    };
    if rk_q > limit {
        return Err(VerifyError::RankBoundViolated { rk_q, limit, what });
    }
    let dim_s: i64 = factors.iter().map(|f| f.dims().dim_s).sum();
    let v = dim_s - rk_q;
    Ok(VcdResult {
        dim_s,
        rk_q,
        vcd: v,
        gd: v,
        irreducible,
        cocompact: rk_q == 0,
    })
}

/// Fixed set of an automorphism that cycles `len` copies of `factor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBound {
    pub factor: SimpleAlgebra,
    pub len: i64,
    /// dim S − (len − 1)·dim S_factor.
    pub fixed_bound: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimpleReport {
    pub factors: Vec<SimpleAlgebra>,
    pub dim_s: i64,
    pub sum_rk_r: i64,
    pub min_rk_r: i64,
    /// Σ (dim S_i − rk_R G_i): the fixed dimension when every component
    /// acts non-trivially.
    pub chain_value: i64,
    /// dim S − min rk_R G_i, a lower bound for vcd of an irreducible lattice.
    pub improved_target: i64,
    pub chain_holds: bool,
    /// dim S − rk_R G, the bound that fails for products.
    pub naive_target: i64,
    /// Largest fixed dimension when one component acts trivially.
    pub naive_witness: i64,
    pub naive_witness_description: String,
    pub naive_fails: bool,
    /// Cycles over each class of isomorphic factors.
    pub cycles: Vec<CycleBound>,
}

impl SemisimpleReport {
    pub fn pass(&self) -> bool {
        self.chain_holds && self.cycles.iter().all(|c| c.holds) && self.improved_target < self.dim_s
    }
}

/// The fixed-set chain for a product of at least two noncompact simple
/// factors, together with the naive bound it replaces.
pub fn check_semisimple(factors: &[SimpleAlgebra]) -> Result<SemisimpleReport, VerifyError> {
    check_semisimple_with(factors, &mut |f| {
        let (m, w) = atlas::max_fixed_dim(f)?;
        Ok((m, w.algebra.render()))
    })
}

/// Largest involution fixed set of a factor: dimension and fixed algebra.
pub(super) type MaxFixed<'a> = dyn FnMut(&SimpleAlgebra) -> Result<(i64, String), VerifyError> + 'a;

/// [`check_semisimple`] with a caller-supplied largest involution fixed set
/// (dimension and fixed algebra) per factor.
pub(super) fn check_semisimple_with(
    factors: &[SimpleAlgebra],
    max_fixed: &mut MaxFixed<'_>,
) -> Result<SemisimpleReport, VerifyError> {
    if factors.len() < 2 {
        return Err(VerifyError::TooFewFactors(factors.len()));
    }
    noncompact(factors)?;
    let mut sorted = factors.to_vec();
    sorted.sort();
    let d: Vec<_> = sorted.iter().map(|f| f.dims()).collect();
    let dim_s: i64 = d.iter().map(|x| x.dim_s).sum();
    let sum_rk_r: i64 = d.iter().map(|x| x.rk_r).sum();
    let min_rk_r = d.iter().map(|x| x.rk_r).min().unwrap_or(0);
    let chain_value: i64 = d.iter().map(|x| x.dim_s - x.rk_r).sum();
    let improved_target = dim_s - min_rk_r;

    let mut naive = (i64::MIN, String::new());
    for (i, f) in sorted.iter().enumerate() {
        let (m, w) = max_fixed(f)?;
        let v = dim_s - d[i].dim_s + m;
        if v > naive.0 {
            naive = (v, format!("identity on the other factors, {w} on {f}"));
        }
    }

    let mut cycles = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let len = sorted[i..].iter().take_while(|f| **f == sorted[i]).count();
        if len >= 2 {
            let fixed_bound = dim_s - (len as i64 - 1) * d[i].dim_s;
            cycles.push(CycleBound {
                factor: sorted[i],
                len: len as i64,
                fixed_bound,
                holds: fixed_bound < improved_target,
            });
        }
        i += len;
    }

    Ok(SemisimpleReport {
        factors: sorted,
        dim_s,
        sum_rk_r,
        min_rk_r,
        chain_value,
        improved_target,
        chain_holds: chain_value < improved_target,
        naive_target: dim_s - sum_rk_r,
        naive_witness: naive.0,
        naive_witness_description: naive.1,
        naive_fails: naive.0 > dim_s - sum_rk_r,
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_simple;

    fn alg(s: &str) -> SimpleAlgebra {
        parse_simple(s).unwrap()
    }

    #[test]
    fn vcd_examples() {
        let v = vcd(&[alg("sl(3,R)")], 2, false).unwrap();
        assert_eq!((v.vcd, v.gd, v.cocompact), (3, 3, false));
        assert!(vcd(&[alg("sl(3,R)")], 0, false).unwrap().cocompact);
        assert!(matches!(
            vcd(&[alg("sl(3,R)"), alg("sl(3,R)")], 3, true),
            Err(VerifyError::RankBoundViolated { limit: 2, .. })
        ));
        assert!(matches!(
            vcd(&[alg("sl(3,R)"), alg("so(1,4)")], 1, true),
            Err(VerifyError::IsotypyViolated(..))
        ));
    }

    #[test]
    fn products() {
        let r = check_semisimple(&[alg("sl(3,R)"), alg("sl(3,R)")]).unwrap();
        assert_eq!((r.naive_witness, r.naive_target), (8, 6));
        assert_eq!((r.chain_value, r.improved_target, r.dim_s), (6, 8, 10));
        assert!(r.pass());
        let s = check_semisimple(&[alg("sl(2,R)"), alg("sl(2,R)")]).unwrap();
        assert_eq!(s.cycles[0].fixed_bound, 2);
        assert_eq!(s.improved_target, 3);
        assert!(matches!(
            check_semisimple(&[alg("sl(2,R)")]),
            Err(VerifyError::TooFewFactors(1))
        ));
    }
}
