//! Exact sparse linear algebra over the integers.
//!
//! Elimination is fraction-free: a row is reduced against a pivot row by
//! cross-multiplying leading coefficients and then dividing out the content,
//! so entries stay integral and small. All arithmetic is checked; callers that
//! start with a machine integer type get [`Overflow`] instead of a wrong answer
//! and can retry with [`num_bigint::BigInt`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Integer scalar usable by the elimination kernel.
pub trait ExactInt: Clone + Debug + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Option<Self>;
}

impl ExactInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow during exact elimination")]
pub struct Overflow;

pub(crate) fn mul<T: ExactInt>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

pub(crate) fn add<T: ExactInt>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_add(b).ok_or(Overflow)
}

fn sub<T: ExactInt>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_sub(b).ok_or(Overflow)
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec<T> {
    entries: Vec<(usize, T)>,
}

impl<T: ExactInt> SparseVec<T> {
    /// Builds a vector from unordered pairs, summing repeated indices.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, T)>) -> Result<Self, Overflow> {
        let mut acc: BTreeMap<usize, T> = BTreeMap::new();
        for (i, v) in pairs {
            match acc.get_mut(&i) {
                Some(x) => *x = add(x, &v)?,
                None => {
                    acc.insert(i, v);
                }
            }
        }
        Ok(Self {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        })
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<&(usize, T)> {
        self.entries.first()
    }

    pub fn get(&self, idx: usize) -> Option<&T> {
        self.entries
            .binary_search_by_key(&idx, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// `a·x − b·y`.
    fn combine(a: &T, x: &Self, b: &T, y: &Self) -> Result<Self, Overflow> {
        let mut out = Vec::with_capacity(x.entries.len() + y.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < x.entries.len() || j < y.entries.len() {
            let xi = x.entries.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let yj = y.entries.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            let (idx, v) = if xi < yj {
                i += 1;
                (xi, mul(a, &x.entries[i - 1].1)?)
            } else if yj < xi {
                j += 1;
                (yj, mul(b, &y.entries[j - 1].1)?.neg())
            } else {
                i += 1;
                j += 1;
                (xi, sub(&mul(a, &x.entries[i - 1].1)?, &mul(b, &y.entries[j - 1].1)?)?)
            };
            if !v.is_zero() {
                out.push((idx, v));
            }
        }
        Ok(Self { entries: out })
    }

    /// Divides by the content and makes the leading entry positive.
    fn primitive(mut self) -> Self {
        let Some((_, first)) = self.entries.first() else {
            return self;
        };
        let mut g = first.abs();
        for (_, v) in &self.entries[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        if first.is_negative() {
            g = g.neg();
        }
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v = v.div_floor(&g);
            }
        }
        self
    }
}

/// Row-echelon basis of a span, grown one vector at a time.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    rows: Vec<SparseVec<T>>,
    pivots: BTreeMap<usize, usize>,
}

impl<T: ExactInt> Default for Echelon<T> {
    fn default() -> Self {
        Self {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<T: ExactInt> Echelon<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseVec<T>) -> Result<SparseVec<T>, Overflow> {
        while let Some((lead, a)) = v.lead().cloned() {
            let Some(&r) = self.pivots.get(&lead) else { break };
            let row = &self.rows[r];
            let p = row.entries[0].1.clone();
            let g = p.gcd(&a);
            v = SparseVec::combine(&p.div_floor(&g), &v, &a.div_floor(&g), row)?.primitive();
        }
        Ok(v)
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec<T>) -> Result<bool, Overflow> {
        let v = self.reduce(v.primitive())?;
        match v.lead() {
            None => Ok(false),
            Some(&(lead, _)) => {
                self.pivots.insert(lead, self.rows.len());
                self.rows.push(v);
                Ok(true)
            }
        }
    }

    /// Integer basis of the null space {x : r·x = 0 for every row r} in
    /// dimension `ncols`.
    pub fn nullspace(&self, ncols: usize) -> Result<Vec<SparseVec<T>>, Overflow> {
        // Reduce to RREF-like form: each row is zero in every other pivot column.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].entries[0].0));
        let mut reduced: Vec<Option<SparseVec<T>>> = vec![None; self.rows.len()];
        for &r in &order {
            let mut v = self.rows[r].clone();
            loop {
                let hit = v.entries[1..]
                    .iter()
                    .find_map(|(c, a)| self.pivots.get(c).map(|&s| (s, a.clone())));
                let Some((s, a)) = hit else { break };
                let srow = reduced[s].as_ref().expect("pivot rows reduced in order");
                let p = srow.entries[0].1.clone();
                let g = p.gcd(&a);
                v = SparseVec::combine(&p.div_floor(&g), &v, &a.div_floor(&g), srow)?.primitive();
            }
            reduced[r] = Some(v);
        }
        let reduced: Vec<SparseVec<T>> = reduced.into_iter().map(|v| v.unwrap()).collect();

        let mut by_free: BTreeMap<usize, Vec<(usize, T)>> = BTreeMap::new();
        for (r, row) in reduced.iter().enumerate() {
            for (c, a) in &row.entries[1..] {
                by_free.entry(*c).or_default().push((r, a.clone()));
            }
        }
        let mut basis = Vec::new();
        for f in (0..ncols).filter(|c| !self.pivots.contains_key(c)) {
            let hits = by_free.get(&f).map(Vec::as_slice).unwrap_or(&[]);
            let mut m = T::one();
            for (r, a) in hits {
                let p = &reduced[*r].entries[0].1;
                let need = p.div_floor(&p.gcd(a));
                m = mul(&m.div_floor(&m.gcd(&need)), &need)?;
            }
            let mut pairs = vec![(f, m.clone())];
            for (r, a) in hits {
                let (lead, p) = &reduced[*r].entries[0];
                pairs.push((*lead, mul(a, &m)?.div_floor(p).neg()));
            }
            basis.push(SparseVec::from_pairs(pairs)?.primitive());
        }
        Ok(basis)
    }
}

/// Rank of a family of vectors.
pub fn rank<T: ExactInt>(vectors: impl IntoIterator<Item = SparseVec<T>>) -> Result<usize, Overflow> {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v)?;
    }
    Ok(e.rank())
}

/// Null space of the linear system given by `rows` over `ncols` unknowns.
pub fn nullspace<T: ExactInt>(
    rows: impl IntoIterator<Item = SparseVec<T>>,
    ncols: usize,
) -> Result<Vec<SparseVec<T>>, Overflow> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r)?;
    }
    e.nullspace(ncols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseVec<i64>> {
        rows.iter()
            .map(|r| SparseVec::from_pairs(r.iter().copied().enumerate()).unwrap())
            .collect()
    }

    fn dot(a: &SparseVec<i64>, b: &[i64]) -> i64 {
        a.entries().iter().map(|(i, v)| v * b[*i]).sum()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(rows).unwrap(), 2);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let rows = dense(&[&[2, 4, 0, 6], &[0, 3, 3, 0]]);
        let ns = nullspace(rows.clone(), 4).unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mut x = vec![0; 4];
            for (i, a) in v.entries() {
                x[*i] = *a;
            }
            for r in &rows {
                assert_eq!(dot(r, &x), 0);
            }
        }
        assert_eq!(rank(ns).unwrap(), 2);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2 + 7;
        let rows = vec![
            SparseVec::from_pairs([(0, big), (1, 3i64)]).unwrap(),
            SparseVec::from_pairs([(0, big - 1), (1, big)]).unwrap(),
        ];
        assert_eq!(rank(rows), Err(Overflow));
        let rows_big: Vec<SparseVec<BigInt>> = vec![
            SparseVec::from_pairs([(0, BigInt::from(big)), (1, BigInt::from(3))]).unwrap(),
            SparseVec::from_pairs([(0, BigInt::from(big - 1)), (1, BigInt::from(big))]).unwrap(),
        ];
        assert_eq!(rank(rows_big).unwrap(), 2);
    }
}
