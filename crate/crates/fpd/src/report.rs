//! The fpd pipeline: brick enumeration, adjacency matrices, spectral radii,
//! aggregation into a report, and the report's JSON and text renderings.

use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::bricks::{
    compatibility_graph, enumerate_bricks_thin, maximal_brick_sets, Brick, Completeness,
};
use crate::error::{Error, Result};
use crate::families::{generate_family, FamilyKind, FamilySpec};
use crate::linalg::Rational;
use crate::oracle::enumerate_bricks_oracle;
use crate::pool::pool;
use crate::quiver::BoundAlgebraSpec;
use crate::rep::{cover_and_syzygy, ext1_from_cover, hom_dim};
use crate::spectral::{max_radius, spectral_radius, AlgebraicValue, SpectralRadius};

/// Brick enumeration strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Thin,
    Oracle {
        max_total_dim: usize,
        field_order: u64,
    },
}

/// Default spectral tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Tolerance for closed-form comparisons (absorbs iteration error).
pub const CLOSED_FORM_TOL: f64 = 1e-9;

/// Hard cap on bricks for set enumeration (u128 clique masks).
const BRICK_CAP: usize = 128;
/// Caps for the fpd^(k) subset enumeration.
const SUBSET_CLIQUE_CAP: u32 = 20;
const SUBSET_TOTAL_CAP: usize = 1 << 21;

#[derive(Debug, Clone)]
pub struct BrickSetReport {
    pub indices: Vec<usize>,
    pub adjacency: Vec<Vec<i64>>,
    pub rho: SpectralRadius,
}

/// fpd restricted to brick sets of one size; tagged, never a float sentinel.
#[derive(Debug, Clone)]
pub enum FpdN {
    NegInfinity,
    Value(SpectralRadius),
}

#[derive(Debug, Clone)]
pub struct ClosedForm {
    pub expression: String,
    pub value: f64,
    pub matches: bool,
    pub abs_delta: f64,
}

#[derive(Debug, Clone)]
pub struct FpdReport {
    pub spec: BoundAlgebraSpec,
    pub bricks: Vec<Brick>,
    pub hom: Vec<Vec<i64>>,
    pub ext: Vec<Vec<i64>>,
    pub sets: Vec<BrickSetReport>,
    pub fpd: SpectralRadius,
    /// Entry k-1 is fpd over brick sets of size k, for k = 1..=bricks.len().
    pub fpd_n: Vec<FpdN>,
    pub closed_form: Option<ClosedForm>,
    pub completeness: Completeness,
}

/// The Ext^1 adjacency matrix of a brick set, in the given order. The brick
/// set condition (dim Hom(X_i, X_j) = delta_ij) is re-verified first.
pub fn adjacency_matrix(spec: &BoundAlgebraSpec, set: &[&Brick]) -> Result<Vec<Vec<i64>>> {
    for (i, a) in set.iter().enumerate() {
        for (j, b) in set.iter().enumerate() {
            let d = hom_dim(spec, &a.rep, &b.rep);
            let expected = usize::from(i == j);
            if d != expected {
                return Err(Error::NotABrickSet(format!(
                    "dim Hom({}, {}) = {d}, expected {expected}",
                    a.name, b.name
                )));
            }
        }
    }
    let mut rows = Vec::with_capacity(set.len());
    for a in set {
        let (p0, omega) = cover_and_syzygy(spec, &a.rep)?;
        rows.push(
            set.iter()
                .map(|b| ext1_from_cover(spec, &p0, &omega, &a.rep, &b.rep) as i64)
                .collect(),
        );
    }
    Ok(rows)
}

/// Computes the Frobenius-Perron dimension report for a bound quiver algebra.
pub fn fpd(spec: &BoundAlgebraSpec, mode: Mode, tol: f64) -> Result<FpdReport> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::BadSpectralInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    let enumeration = match mode {
        Mode::Thin => enumerate_bricks_thin(spec)?,
        Mode::Oracle {
            max_total_dim,
            field_order,
        } => enumerate_bricks_oracle(spec, max_total_dim, field_order)?,
    };
    let completeness = enumeration.completeness;
    let n = enumeration.bricks.len();
    if n > BRICK_CAP {
        return Err(Error::OracleTooLarge(format!(
            "{n} bricks exceed the {BRICK_CAP}-brick cap for brick-set enumeration"
        )));
    }
    let graph = compatibility_graph(spec, enumeration.bricks);

    // Full Ext matrix, one syzygy per row.
    let ext: Vec<Vec<i64>> = pool().install(|| {
        graph
            .bricks
            .par_iter()
            .map(|a| {
                let (p0, omega) = cover_and_syzygy(spec, &a.rep)?;
                Ok(graph
                    .bricks
                    .iter()
                    .map(|b| ext1_from_cover(spec, &p0, &omega, &a.rep, &b.rep) as i64)
                    .collect())
            })
            .collect::<Result<_>>()
    })?;

    let set_indices = maximal_brick_sets(&graph);
    let sets: Vec<BrickSetReport> = pool().install(|| {
        set_indices
            .par_iter()
            .map(|indices| {
                // Subsets of the compatibility data are re-checked against the
                // stored Hom matrix rather than recomputed.
                for (a, &i) in indices.iter().enumerate() {
                    for (b, &j) in indices.iter().enumerate() {
                        let expected = i64::from(a == b);
                        if graph.hom[i][j] != expected {
                            return Err(Error::NotABrickSet(format!(
                                "dim Hom({}, {}) = {}, expected {expected}",
                                graph.bricks[i].name, graph.bricks[j].name, graph.hom[i][j]
                            )));
                        }
                    }
                }
                let adjacency = submatrix(&ext, indices);
                let rho = spectral_radius(&adjacency, tol)?;
                assert_perron_bounds(&adjacency, &rho);
                Ok(BrickSetReport {
                    indices: indices.clone(),
                    adjacency,
                    rho,
                })
            })
            .collect::<Result<_>>()
    })?;

    let fpd = max_radius(&sets.iter().map(|s| s.rho.clone()).collect::<Vec<_>>());
    let fpd_n = fpd_per_size(&ext, &set_indices, n, tol)?;

    Ok(FpdReport {
        spec: spec.clone(),
        bricks: graph.bricks,
        hom: graph.hom,
        ext,
        sets,
        fpd,
        fpd_n,
        closed_form: None,
        completeness,
    })
}

/// fpd of a generated family instance, with the closed-form comparison
/// attached.
pub fn fpd_family(f: &FamilySpec, mode: Mode, tol: f64) -> Result<FpdReport> {
    let spec = generate_family(f)?;
    let mut report = fpd(&spec, mode, tol)?;
    let expected = closed_form_fpd(f)?;
    let delta = (report.fpd.value - expected.to_f64()).abs();
    let matches = match &report.fpd.exact {
        Some(e) => e.cmp_exact(&expected) == std::cmp::Ordering::Equal,
        None => delta <= CLOSED_FORM_TOL + report.fpd.bound,
    };
    report.closed_form = Some(ClosedForm {
        expression: expected.expression(),
        value: expected.to_f64(),
        matches,
        abs_delta: delta,
    });
    Ok(report)
}

/// The closed-form fpd of a family: max loop count for the one-direction
/// families and the reversed three-vertex chain, and
/// (m + n + sqrt((m-n)^2 + 4)) / 2 for the two-vertex cycle family.
pub fn closed_form_fpd(f: &FamilySpec) -> Result<AlgebraicValue> {
    f.validate()?;
    match f.kind {
        FamilyKind::A | FamilyKind::D | FamilyKind::E | FamilyKind::A3Reversed => {
            let max = *f.loops.iter().max().expect("nonempty loops") as i64;
            Ok(AlgebraicValue::from_integer(max))
        }
        FamilyKind::Qnm => {
            let (n, m) = (f.loops[0] as i64, f.loops[1] as i64);
            let diff = (m - n).unsigned_abs();
            Ok(AlgebraicValue::new(
                Rational::new((m + n).into(), 2.into()),
                Rational::new(1.into(), 2.into()),
                diff * diff + 4,
            ))
        }
    }
}

pub(crate) fn submatrix(m: &[Vec<i64>], indices: &[usize]) -> Vec<Vec<i64>> {
    indices
        .iter()
        .map(|&i| indices.iter().map(|&j| m[i][j]).collect())
        .collect()
}

fn assert_perron_bounds(adjacency: &[Vec<i64>], rho: &SpectralRadius) {
    let max_diag = (0..adjacency.len())
        .map(|i| adjacency[i][i])
        .max()
        .unwrap_or(0) as f64;
    let max_row_sum = adjacency
        .iter()
        .map(|row| row.iter().sum::<i64>())
        .max()
        .unwrap_or(0) as f64;
    assert!(
        rho.value >= max_diag - rho.bound - 1e-9,
        "rho {} below max diagonal {max_diag}",
        rho.value
    );
    assert!(
        rho.value <= max_row_sum + rho.bound + 1e-9,
        "rho {} above max row sum {max_row_sum}",
        rho.value
    );
}

/// fpd restricted to each brick-set size: every brick set is a subset of a
/// maximal clique, so sizes are scanned through deduplicated clique subsets.
fn fpd_per_size(
    ext: &[Vec<i64>],
    set_indices: &[Vec<usize>],
    brick_count: usize,
    tol: f64,
) -> Result<Vec<FpdN>> {
    let mut subsets: HashSet<u128> = HashSet::new();
    for indices in set_indices {
        if indices.len() as u32 > SUBSET_CLIQUE_CAP {
            return Err(Error::OracleTooLarge(format!(
                "a brick set of size {} exceeds the fpd^(k) subset enumeration cap of {SUBSET_CLIQUE_CAP}",
                indices.len()
            )));
        }
        let mask = indices.iter().fold(0u128, |m, &i| m | (1 << i));
        let mut sub = mask;
        loop {
            if sub != 0 {
                subsets.insert(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        if subsets.len() > SUBSET_TOTAL_CAP {
            return Err(Error::OracleTooLarge(format!(
                "more than {SUBSET_TOTAL_CAP} brick sets in the fpd^(k) enumeration"
            )));
        }
    }
    let mut per_size: Vec<Vec<u128>> = vec![Vec::new(); brick_count + 1];
    for &mask in &subsets {
        per_size[mask.count_ones() as usize].push(mask);
    }
    (1..=brick_count)
        .map(|k| {
            if per_size[k].is_empty() {
                return Ok(FpdN::NegInfinity);
            }
            per_size[k].sort_unstable();
            let rhos: Vec<SpectralRadius> = per_size[k]
                .iter()
                .map(|&mask| {
                    let indices: Vec<usize> =
                        (0..brick_count).filter(|&i| mask & (1 << i) != 0).collect();
                    spectral_radius(&submatrix(ext, &indices), tol)
                })
                .collect::<Result<_>>()?;
            Ok(FpdN::Value(max_radius(&rhos)))
        })
        .collect()
}

/// ρ and fpd values as decimal strings: 12 fractional digits, trailing zeros
/// trimmed, so text and JSON carry identical numeric content.
pub(crate) fn format_rho(x: f64) -> String {
    let mut s = format!("{x:.12}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn completeness_str(c: Completeness) -> &'static str {
    match c {
        Completeness::Complete => "complete",
        Completeness::LowerBound => "lower_bound",
    }
}

impl FpdReport {
    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("spec".into(), self.spec_json());
        root.insert(
            "bricks".into(),
            Value::Array(
                self.bricks
                    .iter()
                    .map(|b| {
                        let mut o = Map::new();
                        o.insert("name".into(), b.name.clone().into());
                        o.insert(
                            "dim_vector".into(),
                            Value::Array(b.dim_vector.iter().map(|&d| (d as u64).into()).collect()),
                        );
                        Value::Object(o)
                    })
                    .collect(),
            ),
        );
        root.insert("hom_matrix".into(), int_matrix_json(&self.hom));
        root.insert("ext_matrix".into(), int_matrix_json(&self.ext));
        root.insert(
            "maximal_brick_sets".into(),
            Value::Array(
                self.sets
                    .iter()
                    .map(|s| {
                        let mut o = Map::new();
                        o.insert(
                            "indices".into(),
                            Value::Array(s.indices.iter().map(|&i| (i as u64).into()).collect()),
                        );
                        o.insert("adjacency".into(), int_matrix_json(&s.adjacency));
                        o.insert("rho".into(), format_rho(s.rho.value).into());
                        o.insert("rho_bound".into(), s.rho.bound.into());
                        if let Some(e) = &s.rho.exact {
                            o.insert("rho_exact".into(), e.expression().into());
                        }
                        Value::Object(o)
                    })
                    .collect(),
            ),
        );
        let mut fpd_obj = Map::new();
        fpd_obj.insert("value".into(), format_rho(self.fpd.value).into());
        fpd_obj.insert("bound".into(), self.fpd.bound.into());
        if let Some(e) = &self.fpd.exact {
            fpd_obj.insert("exact".into(), e.expression().into());
        }
        root.insert("fpd".into(), Value::Object(fpd_obj));
        let mut fpd_n = Map::new();
        for (i, entry) in self.fpd_n.iter().enumerate() {
            let value = match entry {
                FpdN::NegInfinity => "-inf".to_string(),
                FpdN::Value(r) => format_rho(r.value),
            };
            fpd_n.insert((i + 1).to_string(), value.into());
        }
        root.insert("fpd_n".into(), Value::Object(fpd_n));
        if let Some(cf) = &self.closed_form {
            let mut o = Map::new();
            o.insert("expression".into(), cf.expression.clone().into());
            o.insert("value".into(), format_rho(cf.value).into());
            o.insert("match".into(), cf.matches.into());
            o.insert("abs_delta".into(), cf.abs_delta.into());
            root.insert("closed_form".into(), Value::Object(o));
        }
        root.insert(
            "completeness".into(),
            completeness_str(self.completeness).into(),
        );
        Value::Object(root)
    }

    fn spec_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("vertices".into(), (self.spec.vertex_count() as u64).into());
        o.insert(
            "arrows".into(),
            Value::Array(
                self.spec
                    .quiver
                    .arrows
                    .iter()
                    .map(|a| {
                        let mut arrow = Map::new();
                        arrow.insert("id".into(), a.id.clone().into());
                        arrow.insert("source".into(), (a.source as u64).into());
                        arrow.insert("target".into(), (a.target as u64).into());
                        Value::Object(arrow)
                    })
                    .collect(),
            ),
        );
        o.insert(
            "loop_counts".into(),
            Value::Array(
                self.spec
                    .loop_counts
                    .iter()
                    .map(|&c| (c as u64).into())
                    .collect(),
            ),
        );
        o.insert("relations".into(), "rad2".into());
        Value::Object(o)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let spec = &self.spec;
        out.push_str(&format!(
            "quiver: {} vertices, {} arrows ({} loops), relations rad^2 = 0\n",
            spec.vertex_count(),
            spec.arrow_count(),
            spec.total_loops(),
        ));
        out.push_str(&format!(
            "completeness: {}\n\n",
            completeness_str(self.completeness)
        ));
        out.push_str(&format!("bricks ({}):\n", self.bricks.len()));
        for (i, b) in self.bricks.iter().enumerate() {
            let dims: Vec<String> = b.dim_vector.iter().map(ToString::to_string).collect();
            out.push_str(&format!("  [{i}] {}  dim ({})\n", b.name, dims.join(",")));
        }
        let labels: Vec<&str> = self.bricks.iter().map(|b| b.name.as_str()).collect();
        out.push('\n');
        out.push_str(&labeled_matrix("hom matrix", &labels, &self.hom));
        out.push('\n');
        out.push_str(&labeled_matrix("ext matrix", &labels, &self.ext));
        out.push_str("\nmaximal brick sets:\n");
        for s in &self.sets {
            let names: Vec<&str> = s.indices.iter().map(|&i| labels[i]).collect();
            let rho = match &s.rho.exact {
                Some(e) => format!("{} (exact: {})", format_rho(s.rho.value), e.expression()),
                None => format!("{} (bound {:e})", format_rho(s.rho.value), s.rho.bound),
            };
            out.push_str(&format!("  {{{}}}: rho = {rho}\n", names.join(", ")));
        }
        let fpd = match &self.fpd.exact {
            Some(e) => format!("{} (exact: {})", format_rho(self.fpd.value), e.expression()),
            None => format!(
                "{} (bound {:e})",
                format_rho(self.fpd.value),
                self.fpd.bound
            ),
        };
        out.push_str(&format!("\nfpd = {fpd}\n"));
        let per_size: Vec<String> = self
            .fpd_n
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let s = match v {
                    FpdN::NegInfinity => "-inf".to_string(),
                    FpdN::Value(r) => format_rho(r.value),
                };
                format!("fpd^{} = {s}", i + 1)
            })
            .collect();
        out.push_str(&per_size.join(", "));
        out.push('\n');
        if let Some(cf) = &self.closed_form {
            out.push_str(&format!(
                "closed form: {} = {} | match: {} (|delta| = {:e})\n",
                cf.expression,
                format_rho(cf.value),
                cf.matches,
                cf.abs_delta
            ));
        }
        out
    }
}

fn int_matrix_json(m: &[Vec<i64>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(|&e| e.into()).collect()))
            .collect(),
    )
}

fn labeled_matrix(title: &str, labels: &[&str], m: &[Vec<i64>]) -> String {
    let mut out = format!("{title} (rows: source, cols: target):\n");
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(3);
    out.push_str(&format!("  {:width$}", ""));
    for l in labels {
        out.push_str(&format!(" {l:>width$}"));
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(m) {
        out.push_str(&format!("  {l:width$}"));
        for e in row {
            out.push_str(&format!(" {e:>width$}"));
        }
        out.push('\n');
    }
    out
}
