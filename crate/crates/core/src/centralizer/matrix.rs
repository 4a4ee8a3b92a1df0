//! Matrix oracle: centralizer dimensions as exact kernel dimensions.
//!
//! Each group is realized as a real matrix group (complex families are
//! realified, `X = A + iB ↦ [[A, −B], [B, A]]`). The Lie algebra `g` is the
//! common null space of the linear conditions defining it, computed exactly
//! over the integers. In every model the Cartan involution is `X ↦ −Xᵗ`, so
//! `k` and `p` are the antisymmetric and symmetric parts of `g`. For an element
//! `A = N/d` of finite order with `A⁻¹ = N'/d'` the centralizer in a subspace
//! `V` has dimension `dim V − rank{N v N' − dd' v : v ∈ basis(V)}`.
//!
//! Only eigenvalues in {±1, ±i} have rational realifications, so signatures
//! with more than one angle class (more than four eigenvalues for SU) are
//! rejected here; the signature oracle covers those.

use super::signature::{FixedDims, Signature, Tag};
use super::{CentralizerError, Group};
use crate::catalog::{Exceptional, SimpleAlgebra};
use crate::linalg::{self, ExactInt, Overflow, SparseVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Largest real matrix size accepted by [`MatrixModel::new`].
pub const MAX_REAL_SIZE: usize = 64;
/// Largest element order searched when inverting an element.
pub const MAX_ORDER: u32 = 24;

/// Sparse square matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SMat<T> {
    n: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: ExactInt> SMat<T> {
    fn zero(n: usize) -> Self {
        SMat {
            n,
            rows: vec![Vec::new(); n],
        }
    }

    fn identity(n: usize) -> Self {
        Self::from_triplets(n, (0..n).map(|i| (i, i, T::one()))).expect("no overflow in identity")
    }

    fn from_triplets(n: usize, t: impl IntoIterator<Item = (usize, usize, T)>) -> Result<Self, Overflow> {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); n];
        for (r, c, v) in t {
            let e = acc[r].entry(c).or_insert_with(T::zero);
            *e = linalg::add(e, &v)?;
        }
        Ok(SMat {
            n,
            rows: acc
                .into_iter()
                .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        })
    }

    fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    fn mul(&self, o: &Self) -> Result<Self, Overflow> {
        let mut out = Vec::with_capacity(self.n);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &o.rows[*k] {
                    let e = acc.entry(*c).or_insert_with(T::zero);
                    *e = linalg::add(e, &linalg::mul(a, b)?)?;
                }
            }
            out.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SMat { n: self.n, rows: out })
    }

    fn transpose(&self) -> Self {
        let t = self.triplets().map(|(r, c, v)| (c, r, v.clone()));
        Self::from_triplets(self.n, t).expect("transpose does not add entries")
    }

    fn scale(&self, s: &T) -> Result<Self, Overflow> {
        let mut rows = Vec::with_capacity(self.n);
        for row in &self.rows {
            let mut r = Vec::with_capacity(row.len());
            for (c, v) in row {
                r.push((*c, linalg::mul(v, s)?));
            }
            rows.push(r);
        }
        Ok(SMat { n: self.n, rows })
    }

    /// `self − o`, as a flat vector indexed by `r·n + c`.
    fn flat_diff(&self, o: &Self) -> Result<SparseVec<T>, Overflow> {
        let n = self.n;
        let pairs = self
            .triplets()
            .map(|(r, c, v)| (r * n + c, v.clone()))
            .chain(o.triplets().map(|(r, c, v)| (r * n + c, v.clone().neg())));
        SparseVec::from_pairs(pairs)
    }

    fn convert<U: ExactInt>(&self) -> Result<SMat<U>, Overflow>
    where
        T: Into<BigInt>,
    {
        let mut rows = Vec::with_capacity(self.n);
        for row in &self.rows {
            let mut r = Vec::with_capacity(row.len());
            for (c, v) in row {
                r.push((*c, U::from_bigint(&v.clone().into()).ok_or(Overflow)?));
            }
            rows.push(r);
        }
        Ok(SMat { n: self.n, rows })
    }
}

fn unit(n: usize, r: usize, c: usize) -> SMat<i64> {
    SMat::from_triplets(n, [(r, c, 1)]).unwrap()
}

/// Realification of a complex m×m matrix given by (row, col, re, im).
fn realify(m: usize, entries: impl IntoIterator<Item = (usize, usize, i64, i64)>) -> SMat<i64> {
    let mut t = Vec::new();
    for (r, c, re, im) in entries {
        t.push((r, c, re));
        t.push((m + r, m + c, re));
        t.push((r, m + c, -im));
        t.push((m + r, c, im));
    }
    SMat::from_triplets(2 * m, t).unwrap()
}

/// diag(−I_p, I_q) as (index, sign) pairs.
fn q_signs(p: usize, q: usize) -> impl Iterator<Item = (usize, i64)> {
    (0..p + q).map(move |i| (i, if i < p { -1 } else { 1 }))
}

fn real_q(p: usize, q: usize) -> SMat<i64> {
    SMat::from_triplets(p + q, q_signs(p, q).map(|(i, s)| (i, i, s))).unwrap()
}

fn complex_q(p: usize, q: usize) -> SMat<i64> {
    realify(p + q, q_signs(p, q).map(|(i, s)| (i, i, s, 0)))
}

/// Complex matrix [[0, I], [−I, 0]] of size 2k, realified.
fn complex_j(k: usize) -> SMat<i64> {
    realify(2 * k, (0..k).flat_map(|i| [(i, k + i, 1, 0), (k + i, i, -1, 0)]))
}

#[derive(Debug, Clone)]
enum Constraint {
    /// Xᵗ M + M X = 0.
    Orth(SMat<i64>),
    /// X̄ᵗ-free version for complex bilinear forms: C Xᵗ C M + M X = 0.
    OrthT(SMat<i64>),
    /// X M = M X.
    Commute(SMat<i64>),
    /// X M = M C X C.
    Twist(SMat<i64>),
    Trace,
    TraceRe,
    TraceIm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Real,
    /// Complex matrices of the given size, realified.
    Complex(usize),
}

/// Exact model of a classical Lie algebra with its Cartan decomposition.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    group: Group,
    n: usize,
    layout: Layout,
    constraints: Vec<Constraint>,
    conj: SMat<i64>,
    g: Vec<SMat<i64>>,
    k: Vec<SMat<i64>>,
    p: Vec<SMat<i64>>,
}

fn usize_param(v: i64, group: Group) -> Result<usize, CentralizerError> {
    usize::try_from(v).map_err(|_| CentralizerError::OutOfDomain { group })
}

fn kernel_basis(rows: &[SparseVec<i64>], ncols: usize) -> Vec<Vec<(usize, i64)>> {
    match linalg::nullspace(rows.iter().cloned(), ncols) {
        Ok(ns) => ns.into_iter().map(|v| v.entries().to_vec()).collect(),
        Err(Overflow) => {
            let big = rows
                .iter()
                .map(|r| SparseVec::from_pairs(r.entries().iter().map(|(i, v)| (*i, BigInt::from(*v)))).unwrap());
            linalg::nullspace(big, ncols)
                .expect("BigInt elimination cannot overflow")
                .into_iter()
                .map(|v| {
                    v.entries()
                        .iter()
                        .map(|(i, x)| (*i, i64::from_bigint(x).expect("structure constants are small")))
                        .collect()
                })
                .collect()
        }
    }
}

impl MatrixModel {
    pub fn new(group: Group) -> Result<MatrixModel, CentralizerError> {
        let u = |v| usize_param(v, group);
        let (layout, n, constraints) = match group {
            Group::So(n) => (Layout::Real, u(n)?, vec![Constraint::Orth(real_q(u(n)?, 0))]),
            Group::SoPq(p, q) => (
                Layout::Real,
                u(p)? + u(q)?,
                vec![Constraint::Orth(real_q(u(p)?, u(q)?))],
            ),
            Group::SlR(n) => (Layout::Real, u(n)?, vec![Constraint::Trace]),
            Group::Su(_) | Group::SuPq(..) => {
                let (p, q) = if let Group::SuPq(p, q) = group {
                    (u(p)?, u(q)?)
                } else {
                    (u(group_n(group))?, 0)
                };
                let m = p + q;
                (
                    Layout::Complex(m),
                    2 * m,
                    vec![
                        Constraint::Orth(complex_q(p, q)),
                        Constraint::TraceRe,
                        Constraint::TraceIm,
                    ],
                )
            }
            Group::Sp(_) | Group::SpPq(..) => {
                let (p, q) = if let Group::SpPq(p, q) = group {
                    (u(p)?, u(q)?)
                } else {
                    (u(group_n(group))?, 0)
                };
                let k = p + q;
                let herm = realify(
                    2 * k,
                    q_signs(p, q).flat_map(|(i, s)| [(i, i, s, 0), (k + i, k + i, s, 0)]),
                );
                (
                    Layout::Complex(2 * k),
                    4 * k,
                    vec![Constraint::Orth(herm), Constraint::OrthT(complex_j(k))],
                )
            }
            Group::SoStar(n) => {
                let k = u(n)?;
                let sym = realify(2 * k, (0..k).flat_map(|i| [(i, k + i, -1, 0), (k + i, i, -1, 0)]));
                (
                    Layout::Complex(2 * k),
                    4 * k,
                    vec![
                        Constraint::Orth(complex_q(k, k)),
                        Constraint::OrthT(sym),
                        Constraint::TraceRe,
                        Constraint::TraceIm,
                    ],
                )
            }
            Group::SlH(n) => {
                let k = u(n)?;
                (
                    Layout::Complex(2 * k),
                    4 * k,
                    vec![
                        Constraint::Twist(complex_j(k)),
                        Constraint::TraceRe,
                        Constraint::TraceIm,
                    ],
                )
            }
        };
        if n == 0 || n > MAX_REAL_SIZE {
            return Err(CentralizerError::UnsupportedFamily(format!("{group}: real size {n}")));
        }
        let mut constraints = constraints;
        let conj = match layout {
            Layout::Real => SMat::identity(n),
            Layout::Complex(m) => {
                constraints.push(Constraint::Commute(realify(m, (0..m).map(|i| (i, i, 0, 1)))));
                SMat::from_triplets(n, (0..n).map(|i| (i, i, if i < m { 1 } else { -1 }))).unwrap()
            }
        };
        let mut model = MatrixModel {
            group,
            n,
            layout,
            constraints,
            conj,
            g: Vec::new(),
            k: Vec::new(),
            p: Vec::new(),
        };
        let rows = model.equations();
        let sym = |sign: i64| -> Vec<SparseVec<i64>> {
            let mut out = Vec::new();
            for i in 0..n {
                for j in i..n {
                    let pairs = if i == j {
                        vec![(i * n + i, 1 + sign)]
                    } else {
                        vec![(i * n + j, 1), (j * n + i, sign)]
                    };
                    let v = SparseVec::from_pairs(pairs).unwrap();
                    if !v.is_empty() {
                        out.push(v);
                    }
                }
            }
            out
        };
        let to_mats = |basis: Vec<Vec<(usize, i64)>>| -> Vec<SMat<i64>> {
            basis
                .into_iter()
                .map(|v| SMat::from_triplets(n, v.into_iter().map(|(i, x)| (i / n, i % n, x))).unwrap())
                .collect()
        };
        let with = |extra: Vec<SparseVec<i64>>| {
            let mut all = rows.clone();
            all.extend(extra);
            all
        };
        model.g = to_mats(kernel_basis(&rows, n * n));
        model.k = to_mats(kernel_basis(&with(sym(1)), n * n));
        model.p = to_mats(kernel_basis(&with(sym(-1)), n * n));
        Ok(model)
    }

    /// Linear equations on vec(X) cutting out the Lie algebra.
    fn equations(&self) -> Vec<SparseVec<i64>> {
        let n = self.n;
        let nn = n * n;
        let mut eqs: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        let m = match self.layout {
            Layout::Real => n,
            Layout::Complex(m) => m,
        };
        for (ci, c) in self.constraints.iter().enumerate() {
            let base = ci * nn;
            match c {
                Constraint::Trace => {
                    eqs.insert(base, (0..n).map(|i| (i * n + i, 1)).collect());
                }
                Constraint::TraceRe => {
                    eqs.insert(base, (0..m).map(|i| (i * n + i, 1)).collect());
                }
                Constraint::TraceIm => {
                    eqs.insert(base, (0..m).map(|i| ((m + i) * n + i, 1)).collect());
                }
                _ => {
                    for i in 0..n {
                        for j in 0..n {
                            let x = unit(n, i, j);
                            let img = self.apply(c, &x).expect("small integer constraint");
                            for (r, col, v) in img.triplets() {
                                eqs.entry(base + r * n + col).or_default().push((i * n + j, *v));
                            }
                        }
                    }
                }
            }
        }
        let mut keys: Vec<usize> = eqs.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter()
            .map(|k| SparseVec::from_pairs(eqs.remove(&k).unwrap()).unwrap())
            .filter(|v| !v.is_empty())
            .collect()
    }

    fn apply(&self, c: &Constraint, x: &SMat<i64>) -> Result<SMat<i64>, Overflow> {
        let zero = SMat::zero(self.n);
        let sum = |a: SMat<i64>, b: SMat<i64>, sign: i64| -> Result<SMat<i64>, Overflow> {
            let t = a
                .triplets()
                .map(|(r, c, v)| (r, c, *v))
                .chain(b.triplets().map(|(r, c, v)| (r, c, sign * v)))
                .collect::<Vec<_>>();
            SMat::from_triplets(a.n, t)
        };
        match c {
            Constraint::Orth(m) => sum(x.transpose().mul(m)?, m.mul(x)?, 1),
            Constraint::OrthT(m) => {
                let ct = self.conj.mul(&x.transpose())?.mul(&self.conj)?;
                sum(ct.mul(m)?, m.mul(x)?, 1)
            }
            Constraint::Commute(m) => sum(x.mul(m)?, m.mul(x)?, -1),
            Constraint::Twist(m) => {
                let cxc = self.conj.mul(x)?.mul(&self.conj)?;
                sum(x.mul(m)?, m.mul(&cxc)?, -1)
            }
            _ => Ok(zero),
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn real_size(&self) -> usize {
        self.n
    }

    pub fn dim_g(&self) -> usize {
        self.g.len()
    }

    pub fn dim_k(&self) -> usize {
        self.k.len()
    }

    pub fn dim_p(&self) -> usize {
        self.p.len()
    }

    /// Size of the natural coordinate space (complex size for complex families).
    fn natural_size(&self) -> usize {
        match self.layout {
            Layout::Real => self.n,
            Layout::Complex(m) => m,
        }
    }

    fn natural_diag(&self, diag: &[(i64, i64)]) -> MatrixElement {
        let mat = match self.layout {
            Layout::Real => SMat::from_triplets(self.n, diag.iter().enumerate().map(|(i, d)| (i, i, d.0))).unwrap(),
            Layout::Complex(m) => realify(m, diag.iter().enumerate().map(|(i, d)| (i, i, d.0, d.1))),
        };
        MatrixElement::from_integer(mat)
    }

    /// Named elements: `identity`, `q_split` (diag(−1, …, −1, 1) on the natural
    /// coordinates) and `complex_structure` (multiplication by i, or the
    /// standard [[0, −I], [I, 0]] for real families of even size).
    pub fn named_element(&self, name: &str) -> Result<MatrixElement, CentralizerError> {
        let s = self.natural_size();
        match name {
            "identity" => Ok(MatrixElement::from_integer(SMat::identity(self.n))),
            "q_split" => {
                let mut d = vec![(-1, 0); s];
                d[s - 1] = (1, 0);
                Ok(self.natural_diag(&d))
            }
            "complex_structure" => match self.layout {
                Layout::Complex(_) => Ok(self.natural_diag(&vec![(0, 1); s])),
                Layout::Real if s.is_multiple_of(2) => {
                    let h = s / 2;
                    let t = (0..h).flat_map(|i| [(i, h + i, -1), (h + i, i, 1)]);
                    Ok(MatrixElement::from_integer(SMat::from_triplets(s, t).unwrap()))
                }
                Layout::Real => Err(CentralizerError::InvalidElement(format!(
                    "complex_structure needs even size, {} has {s}",
                    self.group
                ))),
            },
            _ => Err(CentralizerError::InvalidElement(format!("unknown element {name:?}"))),
        }
    }

    /// A diagonal element with the eigenvalue data of `sig`.
    pub fn element_from_signature(&self, sig: &Signature) -> Result<MatrixElement, CentralizerError> {
        sig.validate_shape()?;
        if sig.group != self.group {
            return Err(CentralizerError::InvalidSignature(format!(
                "signature for {} used with model of {}",
                sig.group, self.group
            )));
        }
        let too_many =
            || CentralizerError::InvalidElement("too many distinct eigenvalues for an exact rational model".into());
        let angles = sig.blocks.iter().filter(|b| matches!(b.tag, Tag::Angle(_))).count();
        let (p, q) = match self.group {
            Group::So(n) | Group::Su(n) | Group::Sp(n) | Group::SoStar(n) => (n as usize, 0),
            Group::SoPq(p, q) | Group::SuPq(p, q) | Group::SpPq(p, q) => (p as usize, q as usize),
            Group::SlR(_) | Group::SlH(_) => unreachable!("validated above"),
        };
        // Cursors into the negative (first p) and positive parts.
        let (mut cp, mut cq) = (0usize, p);
        match self.group {
            Group::So(_) | Group::SoPq(..) => {
                if angles > 1 {
                    return Err(too_many());
                }
                let mut t = Vec::new();
                for b in &sig.blocks {
                    for (count, cur) in [(b.mult_plus as usize, &mut cp), (b.mult_minus as usize, &mut cq)] {
                        for _ in 0..count {
                            match b.tag {
                                Tag::Plus => t.push((*cur, *cur, 1)),
                                Tag::Minus => t.push((*cur, *cur, -1)),
                                Tag::Angle(_) => {
                                    t.extend([(*cur, *cur + 1, -1), (*cur + 1, *cur, 1)]);
                                    *cur += 1;
                                }
                            }
                            *cur += 1;
                        }
                    }
                }
                Ok(MatrixElement::from_integer(SMat::from_triplets(self.n, t).unwrap()))
            }
            Group::Su(_) | Group::SuPq(..) => {
                if sig.blocks.len() > 4 {
                    return Err(too_many());
                }
                let mut pool = vec![(1, 0), (-1, 0), (0, 1), (0, -1)];
                let mut vals = Vec::new();
                for b in &sig.blocks {
                    let want = match b.tag {
                        Tag::Plus => Some((1, 0)),
                        Tag::Minus => Some((-1, 0)),
                        Tag::Angle(_) => None,
                    };
                    vals.push(want);
                    if let Some(w) = want {
                        pool.retain(|x| *x != w);
                    }
                }
                let mut d = vec![(0, 0); p + q];
                for (b, want) in sig.blocks.iter().zip(vals) {
                    let lam = want.unwrap_or_else(|| pool.remove(0));
                    for _ in 0..b.mult_plus {
                        d[cp] = lam;
                        cp += 1;
                    }
                    for _ in 0..b.mult_minus {
                        d[cq] = lam;
                        cq += 1;
                    }
                }
                Ok(self.natural_diag(&d))
            }
            Group::Sp(_) | Group::SpPq(..) => {
                if angles > 1 {
                    return Err(too_many());
                }
                let k = p + q;
                let mut d = vec![(0, 0); 2 * k];
                for b in &sig.blocks {
                    let lam = match b.tag {
                        Tag::Plus => (1, 0),
                        Tag::Minus => (-1, 0),
                        Tag::Angle(_) => (0, 1),
                    };
                    for (count, cur) in [(b.mult_plus, &mut cp), (b.mult_minus, &mut cq)] {
                        for _ in 0..count {
                            d[*cur] = lam;
                            d[k + *cur] = (lam.0, -lam.1);
                            *cur += 1;
                        }
                    }
                }
                Ok(self.natural_diag(&d))
            }
            Group::SoStar(_) => {
                if angles > 1 {
                    return Err(too_many());
                }
                let k = p;
                let mut d = vec![(0, 0); 2 * k];
                let mut put = |lam: (i64, i64), d: &mut Vec<(i64, i64)>| {
                    d[cp] = lam;
                    d[k + cp] = (lam.0, -lam.1);
                    cp += 1;
                };
                for b in &sig.blocks {
                    match b.tag {
                        Tag::Plus | Tag::Minus => {
                            let s = if b.tag == Tag::Plus { 1 } else { -1 };
                            for _ in 0..b.mult_plus {
                                put((s, 0), &mut d);
                            }
                        }
                        Tag::Angle(_) => {
                            for _ in 0..b.mult_plus {
                                put((0, 1), &mut d);
                            }
                            for _ in 0..b.mult_minus {
                                put((0, -1), &mut d);
                            }
                        }
                    }
                }
                Ok(self.natural_diag(&d))
            }
            Group::SlR(_) | Group::SlH(_) => unreachable!("validated above"),
        }
    }

    /// Whether `a` preserves every defining form (the model's full isometry
    /// group; no determinant condition).
    fn preserves_forms(&self, a: &MatrixElement) -> Result<bool, Overflow> {
        let nm = &a.num;
        let d2 = linalg::mul(&a.den, &a.den)?;
        let conj: SMat<BigInt> = self.conj.convert()?;
        for c in &self.constraints {
            let ok = match c {
                Constraint::Orth(m) => {
                    let m: SMat<BigInt> = m.convert()?;
                    nm.transpose().mul(&m)?.mul(nm)? == m.scale(&d2)?
                }
                Constraint::OrthT(m) => {
                    let m: SMat<BigInt> = m.convert()?;
                    conj.mul(&nm.transpose())?.mul(&conj)?.mul(&m)?.mul(nm)? == m.scale(&d2)?
                }
                Constraint::Commute(m) => {
                    let m: SMat<BigInt> = m.convert()?;
                    nm.mul(&m)? == m.mul(nm)?
                }
                Constraint::Twist(m) => {
                    let m: SMat<BigInt> = m.convert()?;
                    nm.mul(&m)? == m.mul(&conj)?.mul(nm)?.mul(&conj)?
                }
                _ => true,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_element(&self, a: &MatrixElement) -> Result<(), CentralizerError> {
        if a.num.n != self.n {
            return Err(CentralizerError::InvalidElement(format!(
                "element has size {}, model of {} has {}",
                a.num.n, self.group, self.n
            )));
        }
        if !self.preserves_forms(a).expect("BigInt arithmetic") {
            return Err(CentralizerError::InvalidElement(format!(
                "not an element of {}",
                self.group
            )));
        }
        Ok(())
    }

    /// dim C_g(A) for any finite-order element of the isometry group.
    pub fn centralizer_dim_g(&self, a: &MatrixElement) -> Result<usize, CentralizerError> {
        self.check_element(a)?;
        let inv = a.inverse()?;
        Ok(self.g.len() - image_rank(&self.g, a, &inv))
    }
}

fn group_n(group: Group) -> i64 {
    match group {
        Group::So(n) | Group::Su(n) | Group::Sp(n) | Group::SoStar(n) | Group::SlR(n) | Group::SlH(n) => n,
        Group::SoPq(p, q) | Group::SuPq(p, q) | Group::SpPq(p, q) => p + q,
    }
}

/// Exact rational matrix `num / den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixElement {
    num: SMat<BigInt>,
    den: BigInt,
}

impl MatrixElement {
    fn from_integer(m: SMat<i64>) -> Self {
        MatrixElement {
            num: m.convert().unwrap(),
            den: BigInt::one(),
        }
    }

    /// Builds `num / den` from (row, col, value) triplets.
    pub fn new(n: usize, entries: &[(usize, usize, i64)], den: i64) -> Result<Self, CentralizerError> {
        if den == 0 || entries.iter().any(|e| e.0 >= n || e.1 >= n) {
            return Err(CentralizerError::InvalidElement(
                "bad entries or zero denominator".into(),
            ));
        }
        let num = SMat::from_triplets(n, entries.iter().map(|&(r, c, v)| (r, c, BigInt::from(v)))).unwrap();
        Ok(MatrixElement {
            num,
            den: BigInt::from(den),
        }
        .normalized())
    }

    pub fn size(&self) -> usize {
        self.num.n
    }

    fn normalized(mut self) -> Self {
        let mut g = self.den.clone();
        for (_, _, v) in self.num.triplets() {
            g = g.gcd(v);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            self.den = self.den.div_floor(&g);
            for row in &mut self.num.rows {
                for (_, v) in row {
                    *v = v.div_floor(&g);
                }
            }
        }
        self
    }

    pub fn mul(&self, o: &Self) -> Self {
        MatrixElement {
            num: self.num.mul(&o.num).expect("BigInt arithmetic"),
            den: &self.den * &o.den,
        }
        .normalized()
    }

    fn is_identity(&self) -> bool {
        self.num == SMat::identity(self.num.n).scale(&self.den).unwrap()
    }

    /// Multiplicative order, if at most [`MAX_ORDER`].
    pub fn order(&self) -> Option<u32> {
        let mut pw = self.clone();
        for k in 1..=MAX_ORDER {
            if pw.is_identity() {
                return Some(k);
            }
            pw = pw.mul(self);
        }
        None
    }

    fn inverse(&self) -> Result<MatrixElement, CentralizerError> {
        let m = self
            .order()
            .ok_or_else(|| CentralizerError::InvalidElement(format!("order exceeds {MAX_ORDER}")))?;
        let mut inv = MatrixElement {
            num: SMat::identity(self.num.n),
            den: BigInt::one(),
        };
        for _ in 1..m {
            inv = inv.mul(self);
        }
        Ok(inv)
    }

    /// P·A·P⁻¹, with `p_inv` checked against `p`.
    pub fn conjugated_by(&self, p: &MatrixElement, p_inv: &MatrixElement) -> Result<MatrixElement, CentralizerError> {
        if !p.mul(p_inv).is_identity() {
            return Err(CentralizerError::InvalidElement("p_inv is not the inverse of p".into()));
        }
        Ok(p.mul(self).mul(p_inv))
    }

    fn is_orthogonal(&self) -> bool {
        self.num.transpose().mul(&self.num).unwrap()
            == SMat::identity(self.num.n).scale(&(&self.den * &self.den)).unwrap()
    }
}

fn image_rank_in<T: ExactInt>(basis: &[SMat<i64>], a: &MatrixElement, inv: &MatrixElement) -> Result<usize, Overflow> {
    let nm: SMat<T> = a.num.convert()?;
    let ni: SMat<T> = inv.num.convert()?;
    let dd = T::from_bigint(&(&a.den * &inv.den)).ok_or(Overflow)?;
    let mut e = linalg::Echelon::new();
    for b in basis {
        let b: SMat<T> = b.convert()?;
        let img = nm.mul(&b)?.mul(&ni)?;
        e.insert(img.flat_diff(&b.scale(&dd)?)?)?;
    }
    Ok(e.rank())
}

fn image_rank(basis: &[SMat<i64>], a: &MatrixElement, inv: &MatrixElement) -> usize {
    image_rank_in::<i64>(basis, a, inv)
        .or_else(|_| image_rank_in::<BigInt>(basis, a, inv))
        .expect("BigInt arithmetic")
}

/// Centralizer dimensions of an element of the maximal compact subgroup.
pub fn matrix_fixed_dims(model: &MatrixModel, a: &MatrixElement) -> Result<FixedDims, CentralizerError> {
    model.check_element(a)?;
    if !a.is_orthogonal() {
        return Err(CentralizerError::InvalidElement(
            "element is not in the maximal compact subgroup (not orthogonal)".into(),
        ));
    }
    let inv = a.inverse()?;
    let g = model.g.len() - image_rank(&model.g, a, &inv);
    let k = model.k.len() - image_rank(&model.k, a, &inv);
    let p = model.p.len() - image_rank(&model.p, a, &inv);
    Ok(FixedDims {
        dim_centralizer_g: g as i64,
        dim_centralizer_k: k as i64,
        dim_s_fixed: p as i64,
    })
}

/// The order-4 and order-2 elements of SO(3,4) that sit over the fixed set
/// appearing in the split G2 case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct G22Report {
    /// Rotation angle in quarter turns.
    pub quarter_turns: u32,
    pub dim_centralizer_g: i64,
    pub dim_centralizer_k: i64,
    pub dim_s_fixed: i64,
    /// dim C_K(A) of the compact factor, from the SO(4) matrix model.
    pub compact_factor_centralizer: i64,
    /// dim C_g(A) − compact_factor_centralizer.
    pub chain_value: i64,
    /// dim S − rk_R of g2(2).
    pub target: i64,
    pub chain_holds: bool,
}

fn rotation_block(t: &mut Vec<(usize, usize, i64)>, at: usize, quarter_turns: u32) {
    match quarter_turns % 4 {
        0 => t.extend([(at, at, 1), (at + 1, at + 1, 1)]),
        1 => t.extend([(at, at + 1, -1), (at + 1, at, 1)]),
        2 => t.extend([(at, at, -1), (at + 1, at + 1, -1)]),
        _ => t.extend([(at, at + 1, 1), (at + 1, at, -1)]),
    }
}

/// Ã = blockdiag(1, R_θ, I₂, R_θ) in SO(3,4) (first three coordinates
/// negative), θ = quarter_turns·π/2.
pub fn g22_case(quarter_turns: u32) -> Result<G22Report, CentralizerError> {
    if quarter_turns.is_multiple_of(4) {
        return Err(CentralizerError::InvalidElement(
            "θ = 0 gives the identity, which is central".into(),
        ));
    }
    let mut t = vec![(0, 0, 1), (3, 3, 1), (4, 4, 1)];
    rotation_block(&mut t, 1, quarter_turns);
    rotation_block(&mut t, 5, quarter_turns);
    let model = MatrixModel::new(Group::SoPq(3, 4))?;
    let a = MatrixElement::new(7, &t, 1)?;
    let d = matrix_fixed_dims(&model, &a)?;

    let mut h = vec![(0, 0, 1), (1, 1, 1)];
    rotation_block(&mut h, 2, quarter_turns);
    let so4 = MatrixModel::new(Group::So(4))?;
    let hd = matrix_fixed_dims(&so4, &MatrixElement::new(4, &h, 1)?)?;

    let g22 = SimpleAlgebra::exceptional(Exceptional::G2_2).dims();
    let target = g22.dim_s - g22.rk_r;
    let chain_value = d.dim_centralizer_g - hd.dim_centralizer_k;
    Ok(G22Report {
        quarter_turns: quarter_turns % 4,
        dim_centralizer_g: d.dim_centralizer_g,
        dim_centralizer_k: d.dim_centralizer_k,
        dim_s_fixed: d.dim_s_fixed,
        compact_factor_centralizer: hd.dim_centralizer_k,
        chain_value,
        target,
        chain_holds: chain_value < target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::signature::{signature_dims, Block};

    fn dims(group: Group) -> (usize, usize, usize) {
        let m = MatrixModel::new(group).unwrap();
        (m.dim_g(), m.dim_k(), m.dim_p())
    }

    #[test]
    fn model_dimensions() {
        assert_eq!(dims(Group::SoPq(2, 3)), (10, 4, 6));
        assert_eq!(dims(Group::So(5)), (10, 10, 0));
        assert_eq!(dims(Group::SlR(3)), (8, 3, 5));
        assert_eq!(dims(Group::SuPq(1, 2)), (8, 4, 4));
        assert_eq!(dims(Group::Su(3)), (8, 8, 0));
        assert_eq!(dims(Group::SpPq(1, 1)), (10, 6, 4));
        assert_eq!(dims(Group::Sp(2)), (10, 10, 0));
        assert_eq!(dims(Group::SoStar(3)), (15, 9, 6));
        assert_eq!(dims(Group::SlH(2)), (15, 10, 5));
    }

    #[test]
    fn q_split_examples() {
        let m = MatrixModel::new(Group::SlR(5)).unwrap();
        let a = m.named_element("q_split").unwrap();
        assert_eq!(matrix_fixed_dims(&m, &a).unwrap().dim_s_fixed, 10);
        let m = MatrixModel::new(Group::SoPq(2, 3)).unwrap();
        let a = m.named_element("q_split").unwrap();
        assert_eq!(matrix_fixed_dims(&m, &a).unwrap().dim_s_fixed, 4);
    }

    #[test]
    fn agrees_with_signature_witnesses() {
        let cases = [
            (
                Group::SoPq(2, 3),
                vec![Block::new(Tag::Plus, 2, 2), Block::new(Tag::Minus, 0, 1)],
            ),
            (
                Group::SuPq(2, 3),
                vec![Block::new(Tag::Angle(0), 2, 2), Block::new(Tag::Angle(1), 0, 1)],
            ),
            (
                Group::SpPq(1, 2),
                vec![Block::new(Tag::Plus, 1, 1), Block::new(Tag::Angle(0), 0, 1)],
            ),
            (
                Group::SoStar(4),
                vec![Block::new(Tag::Plus, 1, 0), Block::new(Tag::Angle(0), 1, 2)],
            ),
            (
                Group::So(6),
                vec![Block::new(Tag::Angle(0), 2, 0), Block::new(Tag::Minus, 2, 0)],
            ),
        ];
        for (g, blocks) in cases {
            let s = Signature::new(g, blocks).unwrap();
            let m = MatrixModel::new(g).unwrap();
            let a = m.element_from_signature(&s).unwrap();
            assert_eq!(matrix_fixed_dims(&m, &a).unwrap(), signature_dims(&s).unwrap(), "{s}");
        }
    }

    #[test]
    fn conjugation_preserves_centralizer() {
        let m = MatrixModel::new(Group::SoPq(1, 2)).unwrap();
        let a = MatrixElement::new(3, &[(0, 0, 1), (1, 1, -1), (2, 2, 1)], 1).unwrap();
        let p = MatrixElement::new(3, &[(0, 0, 5), (0, 1, 4), (1, 0, 4), (1, 1, 5), (2, 2, 3)], 3).unwrap();
        let pi = MatrixElement::new(3, &[(0, 0, 5), (0, 1, -4), (1, 0, -4), (1, 1, 5), (2, 2, 3)], 3).unwrap();
        let b = a.conjugated_by(&p, &pi).unwrap();
        assert_ne!(a, b);
        assert_eq!(m.centralizer_dim_g(&a).unwrap(), m.centralizer_dim_g(&b).unwrap());
        assert!(matrix_fixed_dims(&m, &b).is_err());
    }

    #[test]
    fn g22_values() {
        let r = g22_case(1).unwrap();
        assert_eq!((r.dim_centralizer_g, r.dim_centralizer_k, r.dim_s_fixed), (7, 3, 4));
        assert_eq!((r.compact_factor_centralizer, r.chain_value, r.target), (2, 5, 6));
        assert!(r.chain_holds);
        let r = g22_case(2).unwrap();
        assert_eq!((r.dim_centralizer_g, r.chain_value), (9, 7));
        assert!(!r.chain_holds);
        assert!(g22_case(0).is_err());
    }

    #[test]
    fn oracles_agree_on_all_rational_classes() {
        use crate::centralizer::signature::{all_classes, class_dims, lone_angle_classes};
        let groups = [
            Group::So(4),
            Group::So(5),
            Group::Su(3),
            Group::Sp(2),
            Group::SoPq(1, 3),
            Group::SoPq(2, 2),
            Group::SuPq(1, 2),
            Group::SpPq(1, 1),
            Group::SoStar(2),
            Group::SoStar(3),
        ];
        for g in groups {
            let m = MatrixModel::new(g).unwrap();
            let mut checked = 0;
            for s in all_classes(g).into_iter().chain(lone_angle_classes(g)) {
                let Ok(a) = m.element_from_signature(&s) else { continue };
                assert_eq!(matrix_fixed_dims(&m, &a).unwrap(), class_dims(&s).unwrap(), "{s}");
                checked += 1;
            }
            assert!(checked > 0, "{g}");
        }
    }
}
