//! Centralizer dimensions from eigenvalue data.
//!
//! A finite-order element is conjugate into the maximal compact subgroup, where
//! it is determined up to conjugacy by its eigenvalues and their
//! multiplicities on the positive and negative parts of the defining form.
//! For the orthogonal, symplectic and SO* groups an angle tag stands for a
//! conjugate pair {μ, μ̄} of non-real eigenvalues; for the unitary groups every
//! tag is a single eigenvalue.
//!
//! Multiplicity conventions per group:
//! - SO(p,q): a ±1 block (a, b) has a eigenvalues on the p-part and b on the
//!   q-part; an angle block (m, m') has m pairs on the p-part and m' on the
//!   q-part, so it occupies 2m + 2m' coordinates.
//! - SU(p,q), Sp(p,q): one coordinate (complex or quaternionic) per unit of
//!   multiplicity.
//! - SO*(2n), realized inside U(n): a ±1 block (m, 0) has multiplicity m; an
//!   angle block (a, b) has μ with multiplicity a and μ̄ with multiplicity b.
//!
//! Compact groups use `mult_plus` only.

use super::{bound, CentralizerError, Group};
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Plus,
    Minus,
    Angle(u32),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Plus => f.write_str("+1"),
            Tag::Minus => f.write_str("-1"),
            Tag::Angle(i) => write!(f, "angle{i}"),
        }
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Block {
    pub tag: Tag,
    pub mult_plus: i64,
    pub mult_minus: i64,
}

impl Block {
    pub fn new(tag: Tag, mult_plus: i64, mult_minus: i64) -> Block {
        Block {
            tag,
            mult_plus,
            mult_minus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub group: Group,
    pub blocks: Vec<Block>,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.group)?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if self.group.is_compact() {
                write!(f, "{}:{}", b.tag, b.mult_plus)?;
            } else {
                write!(f, "{}:({},{})", b.tag, b.mult_plus, b.mult_minus)?;
            }
        }
        f.write_str("]")
    }
}

/// Centralizer dimensions of one element class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FixedDims {
    pub dim_centralizer_g: i64,
    pub dim_centralizer_k: i64,
    pub dim_s_fixed: i64,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, CentralizerError> {
    Err(CentralizerError::InvalidSignature(msg.into()))
}

impl Signature {
    pub fn new(group: Group, blocks: Vec<Block>) -> Result<Signature, CentralizerError> {
        let s = Signature { group, blocks };
        s.validate()?;
        Ok(s)
    }

    /// Checks ranks, tags and multiplicity sums, and that the class is
    /// non-central: at least two distinct tags.
    pub fn validate(&self) -> Result<(), CentralizerError> {
        self.validate_shape()?;
        if self.blocks.len() < 2 {
            return invalid("central class: fewer than two eigenvalue tags");
        }
        Ok(())
    }

    /// [`Signature::validate`] without the two-tag condition.
    pub fn validate_shape(&self) -> Result<(), CentralizerError> {
        let (p, q) = match self.group {
            Group::So(n) | Group::Su(n) | Group::Sp(n) | Group::SoStar(n) => (n, 0),
            Group::SoPq(p, q) | Group::SuPq(p, q) | Group::SpPq(p, q) => (p, q),
            Group::SlR(_) | Group::SlH(_) => return invalid("no signature model for SL groups"),
        };
        if p < 0 || q < 0 || p + q == 0 {
            return invalid("group parameters must be positive");
        }
        let mut tags: Vec<Tag> = self.blocks.iter().map(|b| b.tag).collect();
        tags.sort();
        tags.dedup();
        if tags.len() != self.blocks.len() {
            return invalid("eigenvalue tags must be pairwise distinct");
        }
        let definite = self.group.is_compact() || matches!(self.group, Group::SoStar(_));
        let (mut sp, mut sq) = (0, 0);
        for b in &self.blocks {
            if b.mult_plus < 0 || b.mult_minus < 0 || b.mult_plus + b.mult_minus == 0 {
                return invalid("every block needs a positive multiplicity");
            }
            let is_angle = matches!(b.tag, Tag::Angle(_));
            if b.mult_minus != 0 && definite && !(is_angle && matches!(self.group, Group::SoStar(_))) {
                return invalid("mult_minus must be 0 here");
            }
            let w = if is_angle && matches!(self.group, Group::So(_) | Group::SoPq(..)) {
                2
            } else {
                1
            };
            if matches!(self.group, Group::SoStar(_)) {
                sp += b.mult_plus + b.mult_minus;
            } else {
                sp += w * b.mult_plus;
                sq += w * b.mult_minus;
            }
        }
        if (sp, sq) != (p, q) {
            return invalid(format!("multiplicities sum to ({sp},{sq}), expected ({p},{q})"));
        }
        if self.blocks.is_empty() {
            return invalid("no blocks");
        }
        Ok(())
    }
}

fn so_dim(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn sp_dim(n: i64) -> i64 {
    n * (2 * n + 1)
}

/// Dimensions of C_G(A), C_K(A) and of the fixed set S^A.
pub fn signature_dims(s: &Signature) -> Result<FixedDims, CentralizerError> {
    s.validate()?;
    class_dims(s)
}

/// [`signature_dims`] for any well-formed class, including a lone angle
/// class (eigenvalues μ, μ̄ only), which is non-scalar but carries one tag.
pub fn class_dims(s: &Signature) -> Result<FixedDims, CentralizerError> {
    s.validate_shape()?;
    let (mut g, mut k) = (0, 0);
    for b in &s.blocks {
        let (a, c) = (b.mult_plus, b.mult_minus);
        let angle = matches!(b.tag, Tag::Angle(_));
        let (dg, dk) = match (s.group, angle) {
            (Group::So(_) | Group::SoPq(..), false) => (so_dim(a + c), so_dim(a) + so_dim(c)),
            (Group::Sp(_) | Group::SpPq(..), false) => (sp_dim(a + c), sp_dim(a) + sp_dim(c)),
            (Group::SoStar(_), false) => (a * (2 * a - 1), a * a),
            (Group::SlR(_) | Group::SlH(_), _) => unreachable!("validate rejects SL groups"),
            (Group::Su(_) | Group::SuPq(..), _) | (_, true) => ((a + c) * (a + c), a * a + c * c),
        };
        g += dg;
        k += dk;
    }
    if matches!(s.group, Group::Su(_) | Group::SuPq(..)) {
        g -= 1;
        k -= 1;
    }
    Ok(FixedDims {
        dim_centralizer_g: g,
        dim_centralizer_k: k,
        dim_s_fixed: g - k,
    })
}

/// dim C_K(A) for compact groups, dim S^A otherwise.
pub fn signature_dim(s: &Signature) -> Result<i64, CentralizerError> {
    let d = signature_dims(s)?;
    Ok(if s.group.is_compact() {
        d.dim_centralizer_k
    } else {
        d.dim_s_fixed
    })
}

/// Multisets of nonzero vectors summing to (p, q), parts in non-increasing
/// lexicographic order.
pub fn vector_partitions(p: i64, q: i64) -> Vec<Vec<(i64, i64)>> {
    fn go(p: i64, q: i64, max: (i64, i64), cur: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
        if p == 0 && q == 0 {
            out.push(cur.clone());
            return;
        }
        for a in (0..=p.min(max.0)).rev() {
            let top = if a == max.0 { q.min(max.1) } else { q };
            for b in (0..=top).rev() {
                if a + b == 0 {
                    continue;
                }
                cur.push((a, b));
                go(p - a, q - b, (a, b), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, q, (p, q), &mut Vec::new(), &mut out);
    out
}

/// Every non-central class of the group, as block lists (tags assigned
/// canonically: ±1 first, then angle classes in order).
pub fn all_classes(group: Group) -> Vec<Signature> {
    all_shapes(group).into_iter().filter(|s| s.blocks.len() >= 2).collect()
}

/// Classes with a single angle tag: rotations by one angle pair on every
/// coordinate. They are not central but fall outside [`all_classes`].
pub fn lone_angle_classes(group: Group) -> Vec<Signature> {
    all_shapes(group)
        .into_iter()
        .filter(|s| matches!(s.blocks.as_slice(), [b] if matches!(b.tag, Tag::Angle(_))))
        .filter(|s| s.validate_shape().is_ok() && !matches!(s.group, Group::Su(_) | Group::SuPq(..)))
        .collect()
}

fn all_shapes(group: Group) -> Vec<Signature> {
    let (p, q) = match group {
        Group::So(n) | Group::Su(n) | Group::Sp(n) | Group::SoStar(n) => (n, 0),
        Group::SoPq(p, q) | Group::SuPq(p, q) | Group::SpPq(p, q) => (p, q),
        Group::SlR(_) | Group::SlH(_) => return Vec::new(),
    };
    let mut out = Vec::new();
    let mut push = |blocks: Vec<Block>| {
        let s = Signature { group, blocks };
        if s.validate_shape().is_ok() {
            out.push(s);
        }
    };
    let angles = |parts: &[(i64, i64)], start: u32| -> Vec<Block> {
        parts
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Block::new(Tag::Angle(start + i as u32), a, b))
            .collect()
    };
    match group {
        Group::Su(_) | Group::SuPq(..) => {
            for parts in vector_partitions(p, q) {
                push(angles(&parts, 0));
            }
        }
        _ => {
            let pairs = matches!(group, Group::So(_) | Group::SoPq(..));
            let star = matches!(group, Group::SoStar(_));
            for ap in 0..=p {
                for aq in 0..=q {
                    for bp in 0..=p - ap {
                        for bq in 0..=q - aq {
                            let (rp, rq) = (p - ap - bp, q - aq - bq);
                            let mut rests = Vec::new();
                            if pairs {
                                if rp % 2 == 0 && rq % 2 == 0 {
                                    rests.extend(vector_partitions(rp / 2, rq / 2));
                                }
                            } else if star {
                                for a in 0..=rp {
                                    rests.extend(vector_partitions(a, rp - a));
                                }
                            } else {
                                rests.extend(vector_partitions(rp, rq));
                            }
                            for rest in rests {
                                let mut blocks = Vec::new();
                                if ap + aq > 0 {
                                    blocks.push(Block::new(Tag::Plus, ap, aq));
                                }
                                if bp + bq > 0 {
                                    blocks.push(Block::new(Tag::Minus, bp, bq));
                                }
                                blocks.extend(angles(&rest, 0));
                                push(blocks);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The witness class at which each bound is attained.
pub fn documented_witness(group: Group) -> Option<Signature> {
    let pm = |a: (i64, i64), b: (i64, i64)| vec![Block::new(Tag::Plus, a.0, a.1), Block::new(Tag::Minus, b.0, b.1)];
    let blocks = match group {
        Group::So(n) | Group::Sp(n) | Group::SoStar(n) => pm((n - 1, 0), (1, 0)),
        Group::Su(n) => vec![Block::new(Tag::Angle(0), n - 1, 0), Block::new(Tag::Angle(1), 1, 0)],
        Group::SuPq(p, q) => vec![Block::new(Tag::Angle(0), p, q - 1), Block::new(Tag::Angle(1), 0, 1)],
        Group::SoPq(p, q) | Group::SpPq(p, q) => pm((p, q - 1), (0, 1)),
        Group::SlR(_) | Group::SlH(_) => return None,
    };
    Signature::new(group, blocks).ok()
}

/// Exhaustive maximum of [`signature_dim`] over all non-central classes.
/// The documented witness is returned whenever it attains the maximum.
pub fn oracle_max(group: Group) -> Result<(i64, Signature), CentralizerError> {
    bound(group)?;
    let mut best: Option<(i64, Signature)> = None;
    for s in all_classes(group) {
        let v = signature_dim(&s)?;
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, s));
        }
    }
    let (v, s) = best.ok_or(CentralizerError::OutOfDomain { group })?;
    if let Some(w) = documented_witness(group) {
        if signature_dim(&w)? == v {
            return Ok((v, w));
        }
    }
    Ok((v, s))
}
