//! Isotropy algebras of involutions (Berger's classification) and the
//! fixed algebras of triality.
//!
//! Each [`IsotropyEntry`] is a template over the ambient family's parameters
//! with declared variables and conditions (see [`constraint`]). An ambient
//! algebra is matched through every family that presents it, so sl(4,R)
//! also picks up the so(3,3) entries and su(2,2) the so(2,4) ones.

pub mod constraint;
mod entries;

pub use constraint::Env;

use crate::catalog::{parse_reductive, parse_simple, Exceptional, Family, ReductiveAlgebra, SimpleAlgebra};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AtlasError {
    #[error("{0} is not covered by the isotropy tables")]
    UnsupportedAlgebra(String),
}

/// Which ambient algebras an entry applies to, and which parameter names it binds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    SlC,
    SoC,
    SpC,
    SlR,
    SlH,
    So,
    Su,
    Sp,
    SpR,
    SoStar,
    Exceptional(Exceptional),
    /// A single algebra given by name.
    Only(&'static str),
    /// Every noncompact algebra.
    AnyNoncompact,
}

impl Ambient {
    pub fn template(&self) -> String {
        match self {
            Ambient::SlC => "sl(n,C)".into(),
            Ambient::SoC => "so(n,C)".into(),
            Ambient::SpC => "sp(2n,C)".into(),
            Ambient::SlR => "sl(n,R)".into(),
            Ambient::SlH => "sl(m,H)".into(),
            Ambient::So => "so(p,q)".into(),
            Ambient::Su => "su(p,q)".into(),
            Ambient::Sp => "sp(p,q)".into(),
            Ambient::SpR => "sp(2n,R)".into(),
            Ambient::SoStar => "so*(2m)".into(),
            Ambient::Exceptional(e) => e.render(),
            Ambient::Only(s) => s.to_string(),
            Ambient::AnyNoncompact => "any noncompact".into(),
        }
    }

    /// Parameter names bound by the ambient family.
    pub fn params(&self) -> &'static [&'static str] {
        match self {
            Ambient::SlC | Ambient::SoC | Ambient::SpC | Ambient::SlR | Ambient::SpR => &["n"],
            Ambient::SlH | Ambient::SoStar => &["m"],
            Ambient::So | Ambient::Su | Ambient::Sp => &["p", "q"],
            _ => &[],
        }
    }

    /// Bindings when `picture` presents `a` in this ambient family.
    fn bind(&self, picture: Family, a: &SimpleAlgebra) -> Option<Vec<(String, i64)>> {
        let one = |name: &str, v: i64| Some(vec![(name.to_string(), v)]);
        let two = |p: i64, q: i64| Some(vec![("p".to_string(), p), ("q".to_string(), q)]);
        let canonical = picture == a.family();
        match (self, picture) {
            (Ambient::SlC, Family::SlC(n))
            | (Ambient::SoC, Family::SoC(n))
            | (Ambient::SpC, Family::SpC(n))
            | (Ambient::SlR, Family::SlR(n))
            | (Ambient::SpR, Family::SpR(n)) => one("n", n),
            (Ambient::SlH, Family::SlH(m)) | (Ambient::SoStar, Family::SoStar(m)) => one("m", m),
            (Ambient::So, Family::So(p, q)) | (Ambient::Su, Family::Su(p, q)) | (Ambient::Sp, Family::Sp(p, q)) => {
                two(p, q)
            }
            (Ambient::Exceptional(e), Family::Exceptional(f)) if *e == f => Some(vec![]),
            (Ambient::Only(s), _) if canonical && parse_simple(s).ok() == Some(*a) => Some(vec![]),
            (Ambient::AnyNoncompact, _) if canonical && !a.is_compact() => Some(vec![]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    /// Fixed algebra of a complex-linear involution of a complex algebra.
    ComplexIsotropy,
    /// Real form of a complex algebra (fixed algebra of a conjugation).
    RealForm,
    /// Fixed algebra of an involution of a real algebra.
    Real,
    /// Fixed algebra of the Cartan involution.
    Compact,
}

#[derive(Debug, Clone, Copy)]
enum Build {
    Closure(fn(&Env) -> ReductiveAlgebra),
    Parse,
    MaxCompact,
}

/// One cell of an isotropy table.
#[derive(Debug, Clone, Copy)]
pub struct IsotropyEntry {
    pub ambient: Ambient,
    pub isotropy: &'static str,
    /// Declarations, e.g. `k in 1..=n/2; l = n-k`.
    pub vars: &'static str,
    /// Conditions, e.g. `n even`.
    pub conds: &'static str,
    pub source: &'static str,
    pub kind: EntryKind,
    /// Reading of the printed table, where it needed one.
    pub note: Option<&'static str>,
    build: Build,
}

struct Compiled {
    decls: Vec<constraint::Decl>,
    conds: Vec<constraint::Cond>,
}

fn all_static_entries() -> impl Iterator<Item = &'static IsotropyEntry> {
    entries::ENTRIES
        .iter()
        .chain(std::iter::once(&entries::COMPACT))
        .chain(entries::TRIALITY_SO8C)
        .chain(entries::TRIALITY_SO44)
}

fn compiled(entry: &'static IsotropyEntry) -> &'static Compiled {
    static CACHE: OnceLock<HashMap<usize, Compiled>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        all_static_entries()
            .map(|e| {
                let decls = constraint::parse_decls(e.vars).expect("entry declarations parse");
                let conds = constraint::parse_conds(e.conds).expect("entry conditions parse");
                (e as *const IsotropyEntry as usize, Compiled { decls, conds })
            })
            .collect()
    });
    &cache[&(entry as *const IsotropyEntry as usize)]
}

impl IsotropyEntry {
    /// Declarations and conditions as separate strings.
    pub fn constraints(&self) -> Vec<String> {
        self.vars
            .split(';')
            .chain(self.conds.split(';'))
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect()
    }

    /// Checks the grammar and that every name is declared before use.
    pub fn validate(&self) -> Result<(), String> {
        let decls = constraint::parse_decls(self.vars).map_err(|e| e.to_string())?;
        let conds = constraint::parse_conds(self.conds).map_err(|e| e.to_string())?;
        constraint::check_scope(&decls, &conds, self.ambient.params())
    }

    fn instantiate(&'static self, a: &SimpleAlgebra, picture: Family, out: &mut Vec<Instance>) {
        let Some(bindings) = self.ambient.bind(picture, a) else {
            return;
        };
        let c = compiled(self);
        let mut env = Env::new(bindings);
        let picture = picture.render();
        constraint::enumerate(&c.decls, &c.conds, &mut env, &mut |env| {
            let algebra = match self.build {
                Build::Closure(f) => f(env),
                Build::Parse => parse_reductive(self.isotropy).expect("table entries parse"),
                Build::MaxCompact => a.max_compact(),
            };
            // At small parameters some templates (sp(2,C) in sl(2,C)) give the whole algebra.
            if algebra == ReductiveAlgebra::simple(*a) {
                return;
            }
            out.push(Instance {
                entry: self,
                picture: picture.clone(),
                bindings: env.bindings().iter().cloned().collect(),
                dim_s: algebra.dims().dim_s,
                algebra,
            });
        });
    }
}

impl Serialize for IsotropyEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IsotropyEntry", 6)?;
        st.serialize_field("ambient", &self.ambient.template())?;
        st.serialize_field("isotropy_template", self.isotropy)?;
        st.serialize_field("constraints", &self.constraints())?;
        st.serialize_field("source_table", self.source)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("note", &self.note)?;
        st.end()
    }
}

/// An entry instantiated at concrete parameters.
#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub entry: &'static IsotropyEntry,
    /// The family presentation of the ambient algebra the entry was read in.
    pub picture: String,
    pub bindings: BTreeMap<String, i64>,
    pub algebra: ReductiveAlgebra,
    pub dim_s: i64,
}

impl Instance {
    pub fn describe(&self) -> String {
        let mut s = format!("{} ({} in {}", self.algebra, self.entry.isotropy, self.picture);
        // Ambient parameters are already visible in the picture.
        let own: Vec<String> = self
            .bindings
            .iter()
            .filter(|(k, _)| !self.entry.ambient.params().contains(&k.as_str()))
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        if !own.is_empty() {
            s += &format!(", {}", own.join(", "));
        }
        s += &format!(", {})", self.entry.source);
        s
    }
}

/// Every stored table entry, the Cartan entry and the triality entries.
pub fn all_entries() -> Vec<&'static IsotropyEntry> {
    all_static_entries().collect()
}

/// Families whose canonical form is `a`, starting with `a`'s own.
pub fn pictures(a: &SimpleAlgebra) -> Vec<Family> {
    static COINCIDENCES: OnceLock<BTreeMap<SimpleAlgebra, Vec<Family>>> = OnceLock::new();
    let map = COINCIDENCES.get_or_init(|| {
        use Family::*;
        let mut raw = Vec::new();
        for n in 1..=8 {
            raw.extend([SlC(n), SoC(n), SpC(n), SlR(n), SlH(n), SpR(n), SoStar(n)]);
            for p in 1..=n / 2 {
                raw.extend([So(p, n - p), Su(p, n - p), Sp(p, n - p)]);
            }
        }
        let mut map: BTreeMap<SimpleAlgebra, Vec<Family>> = BTreeMap::new();
        for f in raw {
            if let Ok(c) = SimpleAlgebra::new(f) {
                if c.family() != f {
                    map.entry(c).or_default().push(f);
                }
            }
        }
        map
    });
    let mut out = vec![a.family()];
    out.extend(map.get(a).into_iter().flatten().copied());
    out
}

fn noncompact(a: &SimpleAlgebra) -> Result<(), AtlasError> {
    if a.is_compact() {
        Err(AtlasError::UnsupportedAlgebra(a.render()))
    } else {
        Ok(())
    }
}

/// Entries that apply to `a` through some presentation, plus the Cartan entry.
pub fn isotropy_entries(a: &SimpleAlgebra) -> Result<Vec<&'static IsotropyEntry>, AtlasError> {
    noncompact(a)?;
    let pics = pictures(a);
    Ok(entries::ENTRIES
        .iter()
        .chain(std::iter::once(&entries::COMPACT))
        .filter(|e| pics.iter().any(|&f| e.ambient.bind(f, a).is_some()))
        .collect())
}

fn dedup(mut all: Vec<Instance>) -> Vec<Instance> {
    let mut seen = std::collections::BTreeSet::new();
    all.retain(|i| seen.insert(i.algebra.clone()));
    all
}

/// Every distinct fixed algebra of an involution of `a`, with the first entry producing it.
pub fn instances(a: &SimpleAlgebra) -> Result<Vec<Instance>, AtlasError> {
    noncompact(a)?;
    let mut out = Vec::new();
    for f in pictures(a) {
        for e in entries::ENTRIES {
            e.instantiate(a, f, &mut out);
        }
    }
    entries::COMPACT.instantiate(a, a.family(), &mut out);
    Ok(dedup(out))
}

/// Largest dim S^ρ over the involutions of `a`, with the maximizing instance.
pub fn max_fixed_dim(a: &SimpleAlgebra) -> Result<(i64, Instance), AtlasError> {
    let best = instances(a)?
        .into_iter()
        .max_by_key(|i| i.dim_s)
        .expect("the Cartan entry always applies");
    Ok((best.dim_s, best))
}

/// Fixed algebra of an order-3 outer automorphism.
#[derive(Debug, Clone, Serialize)]
pub struct TrialityClass {
    pub ambient: SimpleAlgebra,
    pub fixed_algebra: ReductiveAlgebra,
    pub dim_s: i64,
    pub order: u32,
    pub source: &'static str,
}

/// Order-3 outer classes of so(8,C) and so(4,4). The compact fixed
/// algebras are left out: they have dim_s = 0.
pub fn triality_classes(a: &SimpleAlgebra) -> Result<Vec<TrialityClass>, AtlasError> {
    let table = if Some(*a) == parse_simple("so(8,C)").ok() {
        entries::TRIALITY_SO8C
    } else if Some(*a) == parse_simple("so(4,4)").ok() {
        entries::TRIALITY_SO44
    } else {
        return Err(AtlasError::UnsupportedAlgebra(a.render()));
    };
    let mut out = Vec::new();
    for e in table {
        e.instantiate(a, a.family(), &mut out);
    }
    Ok(dedup(out)
        .into_iter()
        .map(|i| TrialityClass {
            ambient: *a,
            dim_s: i.dim_s,
            fixed_algebra: i.algebra,
            order: 3,
            source: i.entry.source,
        })
        .collect())
}
