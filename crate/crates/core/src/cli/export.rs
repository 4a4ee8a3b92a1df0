//! The atlas JSON document written by `export`.
//!
//! Every record is a struct, so keys come out in declaration order and two
//! exports of the same range are byte-identical.

use crate::atlas::{self, IsotropyEntry};
use crate::catalog::{sweep, SimpleAlgebra, SweepScope};
use crate::tables::{self, InnerCells, SubgroupCells, TableError};
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraRecord {
    pub name: String,
    pub family: &'static str,
    pub params: BTreeMap<&'static str, i64>,
    pub dim_g: i64,
    pub dim_k: i64,
    pub dim_s: i64,
    pub rk_r: i64,
    pub out_group: &'static str,
    pub max_compact: String,
}

impl AlgebraRecord {
    pub fn new(a: &SimpleAlgebra) -> Self {
        let d = a.dims();
        AlgebraRecord {
            name: a.render(),
            family: a.family().name(),
            params: a.family().params().into_iter().collect(),
            dim_g: d.dim_g,
            dim_k: d.dim_k,
            dim_s: d.dim_s,
            rk_r: d.rk_r,
            out_group: a.out_group().iso_type.as_str(),
            max_compact: a.max_compact().render(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InnerRecord {
    pub algebra: String,
    pub k: &'static str,
    pub h: &'static str,
    pub h_bound: i64,
    pub published: InnerCells,
    pub derived: InnerCells,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupRecord {
    pub algebra: String,
    pub k: &'static str,
    pub g_bar: &'static str,
    pub k_bar: &'static str,
    pub s_bar_bound: i64,
    pub published: SubgroupCells,
    pub derived: SubgroupCells,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasDocument {
    pub schema_version: u32,
    pub max_param: i64,
    pub algebras: Vec<AlgebraRecord>,
    pub isotropy_entries: Vec<&'static IsotropyEntry>,
    pub inner_subgroups: Vec<InnerRecord>,
    pub real_subgroups: Vec<SubgroupRecord>,
}

/// Compact, complex and real algebras with parameters up to `max_param`,
/// every isotropy entry, and both subgroup tables with published and
/// recomputed cells side by side.
pub fn atlas_document(max_param: i64) -> Result<AtlasDocument, TableError> {
    let mut list: Vec<SimpleAlgebra> = [SweepScope::Compact, SweepScope::Complex, SweepScope::Real]
        .into_iter()
        .flat_map(|s| sweep(s, max_param))
        .collect();
    list.sort();
    list.dedup();

    let inner_subgroups = tables::INNER_ROWS
        .iter()
        .map(|r| {
            Ok(InnerRecord {
                algebra: r.algebra.render(),
                k: r.k,
                h: r.h,
                h_bound: r.h_bound()?,
                published: r.published,
                derived: r.derived(),
            })
        })
        .collect::<Result<_, TableError>>()?;
    let real_subgroups = tables::SUBGROUP_ROWS
        .iter()
        .map(|r| {
            Ok(SubgroupRecord {
                algebra: r.algebra.render(),
                k: r.k,
                g_bar: r.g_bar,
                k_bar: r.k_bar,
                s_bar_bound: r.s_bar_bound()?,
                published: r.published,
                derived: r.derived(),
            })
        })
        .collect::<Result<_, TableError>>()?;

    Ok(AtlasDocument {
        schema_version: SCHEMA_VERSION,
        max_param,
        algebras: list.iter().map(AlgebraRecord::new).collect(),
        isotropy_entries: atlas::all_entries(),
        inner_subgroups,
        real_subgroups,
    })
}
