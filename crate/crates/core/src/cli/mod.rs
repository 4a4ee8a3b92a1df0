//! Command-line front end.
//!
//! [`run_args`] parses an argument list and [`run`] executes a parsed
//! command; both return the rendered output and the exit code instead of
//! printing, so the binary and the tests share one code path. Exit codes:
//! 0 when everything checked holds, 1 on a violated inequality or oracle
//! disagreement, 2 on bad input.

pub mod export;

use crate::atlas;
use crate::catalog::{parse_reductive, parse_simple, SimpleAlgebra};
use crate::centralizer::signature::documented_witness;
use crate::centralizer::{bound, matrix_fixed_dims, oracle_max, Group, MatrixModel};
use crate::verifier::{self, target, verify_scope, Scope};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "liedim",
    version,
    about = "Symmetric-space dimension data and fixed-point inequality checks"
)]
pub struct Command {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Dimensions, ranks, outer automorphism group and maximal compact subalgebra.
    Info { algebra: String },
    /// Instantiated involution fixed algebras with their margins.
    Involutions { algebra: String },
    /// Closed-form centralizer bound against the exhaustive oracle, or the
    /// matrix oracle on one element.
    Oracle {
        /// so, su, sp, so_pq, su_pq, sp_pq, so_star, sl_r or sl_h.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        /// Use the matrix model instead of the signature oracle.
        #[arg(long)]
        matrix: bool,
        /// identity, q_split or complex_structure.
        #[arg(long, default_value = "q_split")]
        element: String,
    },
    /// Runs every case check over a range of the catalog.
    Verify {
        /// complex, real, semisimple or all.
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, default_value_t = 32)]
        max_param: i64,
    },
    /// vcd = dim S − rk_Q for a lattice in a product of simple factors.
    Vcd {
        /// Factors joined by '+', e.g. sl(3,R)+sl(3,R).
        algebras: String,
        #[arg(long)]
        rkq: i64,
        #[arg(long)]
        irreducible: bool,
    },
    /// Writes the atlas JSON document.
    Export {
        #[arg(long)]
        out: std::path::PathBuf,
        #[arg(long, default_value_t = 12)]
        max_param: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_PASS,
            stdout,
            stderr: String::new(),
        }
    }

    fn bad_input(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_BAD_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn with_code(mut self, pass: bool) -> Self {
        if !pass {
            self.code = EXIT_VIOLATION;
        }
        self
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Command::try_parse_from(args) {
        Ok(c) => run(&c),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            if code == EXIT_PASS {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(c: &Command) -> Outcome {
    match &c.verb {
        Verb::Info { algebra } => info(algebra, c.json),
        Verb::Involutions { algebra } => involutions(algebra, c.json),
        Verb::Oracle {
            family,
            n,
            p,
            q,
            matrix,
            element,
        } => oracle(family, *n, *p, *q, matrix.then_some(element.as_str()), c.json),
        Verb::Verify { scope, max_param } => verify(scope, *max_param, c.json),
        Verb::Vcd {
            algebras,
            rkq,
            irreducible,
        } => vcd(algebras, *rkq, *irreducible, c.json),
        Verb::Export { out, max_param } => export_to(out, *max_param),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct InfoReport {
    #[serde(flatten)]
    record: export::AlgebraRecord,
    rk_cpt: i64,
    out_exponent: i64,
    complexification: String,
    pictures: Vec<String>,
}

fn info(s: &str, as_json: bool) -> Outcome {
    let a = match parse_simple(s) {
        Ok(a) => a,
        Err(e) => return Outcome::bad_input(e),
    };
    let d = a.dims();
    let out = a.out_group();
    let report = InfoReport {
        record: export::AlgebraRecord::new(&a),
        rk_cpt: d.rk_cpt,
        out_exponent: out.exponent,
        complexification: a.complexification().render(),
        pictures: atlas::pictures(&a).iter().map(|f| f.render()).collect(),
    };
    if as_json {
        return Outcome::ok(json(&report));
    }
    let r = &report.record;
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut t = String::new();
    let _ = writeln!(t, "{}", r.name);
    let _ = writeln!(t, "  family            {} ({})", r.family, params.join(", "));
    let _ = writeln!(t, "  dim g             {}", r.dim_g);
    let _ = writeln!(t, "  dim k             {}", r.dim_k);
    let _ = writeln!(t, "  dim S             {}", r.dim_s);
    let _ = writeln!(t, "  rk_R              {}", r.rk_r);
    let _ = writeln!(t, "  rank of k         {}", report.rk_cpt);
    let _ = writeln!(
        t,
        "  Out               {} (exponent {})",
        r.out_group, report.out_exponent
    );
    let _ = writeln!(t, "  max compact       {}", r.max_compact);
    let _ = writeln!(t, "  complexification  {}", report.complexification);
    let _ = writeln!(t, "  also written      {}", report.pictures.join(", "));
    Outcome::ok(t)
}

#[derive(Serialize)]
struct InvolutionLine {
    fixed_algebra: String,
    order: u32,
    picture: String,
    source: &'static str,
    dim_s: i64,
    margin: i64,
}

#[derive(Serialize)]
struct InvolutionReport {
    algebra: String,
    dim_s: i64,
    rk_r: i64,
    entries: Vec<InvolutionLine>,
}

fn involutions(s: &str, as_json: bool) -> Outcome {
    let a = match parse_simple(s) {
        Ok(a) => a,
        Err(e) => return Outcome::bad_input(e),
    };
    let instances = match atlas::instances(&a) {
        Ok(v) => v,
        Err(e) => return Outcome::bad_input(e),
    };
    let tgt = target(&a);
    let mut entries: Vec<InvolutionLine> = instances
        .iter()
        .map(|i| InvolutionLine {
            fixed_algebra: i.algebra.render(),
            order: 2,
            picture: i.picture.clone(),
            source: i.entry.source,
            dim_s: i.dim_s,
            margin: tgt - i.dim_s,
        })
        .collect();
    if let Ok(tri) = atlas::triality_classes(&a) {
        entries.extend(tri.into_iter().map(|c| InvolutionLine {
            fixed_algebra: c.fixed_algebra.render(),
            order: c.order,
            picture: a.render(),
            source: c.source,
            dim_s: c.dim_s,
            margin: tgt - c.dim_s,
        }));
    }
    let d = a.dims();
    let report = InvolutionReport {
        algebra: a.render(),
        dim_s: d.dim_s,
        rk_r: d.rk_r,
        entries,
    };
    if as_json {
        return Outcome::ok(json(&report));
    }
    let mut t = String::new();
    let _ = writeln!(
        t,
        "{}: dim S - rk_R = {} - {} = {}",
        report.algebra, d.dim_s, d.rk_r, tgt
    );
    let w = report.entries.iter().map(|e| e.fixed_algebra.len()).max().unwrap_or(0);
    for e in &report.entries {
        let _ = writeln!(
            t,
            "  {:<w$}  order {}  dim_s {:>4}  margin {:>4}  ({} in {})",
            e.fixed_algebra, e.order, e.dim_s, e.margin, e.source, e.picture
        );
    }
    Outcome::ok(t)
}

#[derive(Serialize)]
struct OracleReport {
    group: String,
    bound: i64,
    oracle_max: i64,
    witness: String,
    documented_witness: Option<String>,
    agree: bool,
}

#[derive(Serialize)]
struct MatrixReport {
    group: String,
    element: String,
    dim_centralizer_g: i64,
    dim_centralizer_k: i64,
    dim_s_fixed: i64,
}

fn oracle(
    family: &str,
    n: Option<i64>,
    p: Option<i64>,
    q: Option<i64>,
    element: Option<&str>,
    as_json: bool,
) -> Outcome {
    let Some(g) = Group::from_name(family, n, p, q) else {
        return Outcome::bad_input(format!(
            "unknown family {family:?} or missing parameters (compact families and so_star, sl_r, sl_h take --n; \
             indefinite families take --p and --q)"
        ));
    };
    if let Some(name) = element {
        let fixed = MatrixModel::new(g).and_then(|m| {
            let e = m.named_element(name)?;
            matrix_fixed_dims(&m, &e)
        });
        let d = match fixed {
            Ok(d) => d,
            Err(e) => return Outcome::bad_input(e),
        };
        let r = MatrixReport {
            group: g.to_string(),
            element: name.to_string(),
            dim_centralizer_g: d.dim_centralizer_g,
            dim_centralizer_k: d.dim_centralizer_k,
            dim_s_fixed: d.dim_s_fixed,
        };
        if as_json {
            return Outcome::ok(json(&r));
        }
        return Outcome::ok(format!(
            "{} at {}: dim C_G(A) = {}, dim C_K(A) = {}, dim S^A = {}\n",
            r.group, r.element, r.dim_centralizer_g, r.dim_centralizer_k, r.dim_s_fixed
        ));
    }
    let (b, (m, w)) = match bound(g).and_then(|b| Ok((b, oracle_max(g)?))) {
        Ok(v) => v,
        Err(e) => return Outcome::bad_input(e),
    };
    let r = OracleReport {
        group: g.to_string(),
        bound: b,
        oracle_max: m,
        witness: w.to_string(),
        documented_witness: documented_witness(g).map(|s| s.to_string()),
        agree: b == m,
    };
    let out = if as_json {
        Outcome::ok(json(&r))
    } else {
        let mut t = format!(
            "{}: bound {}, oracle max {}, witness {}\n",
            r.group, r.bound, r.oracle_max, r.witness
        );
        if let Some(d) = &r.documented_witness {
            let _ = writeln!(t, "  documented witness {d}");
        }
        if !r.agree {
            let _ = writeln!(t, "  DISAGREE");
        }
        Outcome::ok(t)
    };
    out.with_code(r.agree)
}

fn verify(scope: &str, max_param: i64, as_json: bool) -> Outcome {
    let Some(sc) = Scope::from_name(scope) else {
        return Outcome::bad_input(format!(
            "unknown scope {scope:?}; expected complex, real, semisimple or all"
        ));
    };
    if max_param < 1 {
        return Outcome::bad_input(format!("--max-param must be at least 1, got {max_param}"));
    }
    let r = verify_scope(sc, max_param);
    let pass = r.pass();
    if as_json {
        return Outcome::ok(json(&r.cases)).with_code(pass);
    }
    let mut t = String::new();
    let fails = r.failures();
    let flagged = r.cases.iter().filter(|c| c.pass && c.flagged).count();
    let _ = writeln!(
        t,
        "scope {scope}, max-param {max_param}: {} algebras, {} cases, {} products",
        r.algebras,
        r.cases.len(),
        r.products.len()
    );
    let _ = writeln!(
        t,
        "cases: {} pass ({} flagged), {} fail",
        r.cases.len() - fails.len(),
        flagged,
        fails.len()
    );
    let mut routes = std::collections::BTreeMap::new();
    for c in &r.cases {
        *routes.entry(c.route.as_str()).or_insert(0usize) += 1;
    }
    for (k, v) in &routes {
        let _ = writeln!(t, "  {k:<22} {v}");
    }
    if let Some(w) = r.worst_strict() {
        let _ = writeln!(
            t,
            "worst strict margin: {} ({}, {}: {})",
            w.margin,
            w.algebra,
            w.route.as_str(),
            w.witness
        );
    }
    let _ = writeln!(t, "equality cases: {}", r.equality_set().len());
    if !r.products.is_empty() {
        let pf = r.failed_products();
        let _ = writeln!(t, "products: {} pass, {} fail", r.products.len() - pf.len(), pf.len());
        if let Some(p) = r.products.iter().min_by_key(|p| p.improved_target - p.chain_value) {
            let _ = writeln!(
                t,
                "worst product margin: {} ({}: chain {} < {})",
                p.improved_target - p.chain_value,
                render_factors(&p.factors),
                p.chain_value,
                p.improved_target
            );
        }
        for p in pf {
            let _ = writeln!(t, "FAIL {}", render_factors(&p.factors));
        }
    }
    for c in &fails {
        let _ = writeln!(
            t,
            "FAIL {} {} margin {}: {}",
            c.algebra,
            c.route.as_str(),
            c.margin,
            c.witness
        );
    }
    for (a, e) in &r.errors {
        let _ = writeln!(t, "ERROR {a}: {e}");
    }
    let _ = writeln!(t, "{}", if pass { "PASS" } else { "FAIL" });
    Outcome::ok(t).with_code(pass)
}

fn render_factors(f: &[SimpleAlgebra]) -> String {
    f.iter().map(|a| a.render()).collect::<Vec<_>>().join("+")
}

/// Splits a '+'-joined list of simple factors. Abelian summands are rejected.
fn parse_factors(s: &str) -> Result<Vec<SimpleAlgebra>, String> {
    let r = parse_reductive(s).map_err(|e| e.to_string())?;
    if r.abelian_compact_dim != 0 || r.abelian_split_dim != 0 {
        return Err(format!(
            "{s}: lattices live in semisimple groups; drop the abelian summands"
        ));
    }
    Ok(r.simple_factors().to_vec())
}

fn vcd(s: &str, rk_q: i64, irreducible: bool, as_json: bool) -> Outcome {
    let factors = match parse_factors(s) {
        Ok(f) => f,
        Err(e) => return Outcome::bad_input(e),
    };
    let r = match verifier::vcd(&factors, rk_q, irreducible) {
        Ok(r) => r,
        Err(e) => return Outcome::bad_input(e),
    };
    if as_json {
        return Outcome::ok(json(&r));
    }
    Outcome::ok(format!(
        "vcd = {}, gd = {}\ndim S = {}, rk_Q = {}, irreducible = {}, cocompact = {}\n",
        r.vcd, r.gd, r.dim_s, r.rk_q, r.irreducible, r.cocompact
    ))
}

fn export_to(path: &std::path::Path, max_param: i64) -> Outcome {
    if max_param < 1 {
        return Outcome::bad_input(format!("--max-param must be at least 1, got {max_param}"));
    }
    let doc = match export::atlas_document(max_param) {
        Ok(d) => d,
        Err(e) => {
            return Outcome {
                code: EXIT_VIOLATION,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    if let Err(e) = std::fs::write(path, json(&doc)) {
        return Outcome::bad_input(format!("{}: {e}", path.display()));
    }
    Outcome::ok(format!(
        "wrote {} ({} algebras, {} isotropy entries, {} + {} subgroup rows)\n",
        path.display(),
        doc.algebras.len(),
        doc.isotropy_entries.len(),
        doc.inner_subgroups.len(),
        doc.real_subgroups.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> Outcome {
        run_args(std::iter::once("liedim").chain(args.split_whitespace()))
    }

    #[test]
    fn vcd_examples() {
        let o = cli("vcd sl(3,R) --rkq 2");
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("vcd = 3, gd = 3"));
        let o = cli("vcd sl(3,R)+so(1,4) --irreducible --rkq 1");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("isotypic"), "{}", o.stderr);
        assert_eq!(cli("vcd sl(5,R)+R --rkq 1").code, 2);
    }

    #[test]
    fn bad_input() {
        assert_eq!(cli("info so(4,C)").code, 2);
        assert_eq!(cli("info nonsense").code, 2);
        assert_eq!(cli("verify --scope nowhere").code, 2);
        assert_eq!(cli("oracle --family so").code, 2);
        assert_eq!(cli("frobnicate").code, 2);
    }

    #[test]
    fn info_and_oracle() {
        let o = cli("info so(4,4)");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("S4"));
        let o = cli("oracle --family so --n 8");
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("SO(8): bound 21, oracle max 21"), "{}", o.stdout);
        let o = cli("oracle --matrix --family so_pq --p 2 --q 3 --element q_split --json");
        assert_eq!(o.code, 0);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert!(v["dim_s_fixed"].is_i64());
    }
}
