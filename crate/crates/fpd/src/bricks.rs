//! Brick enumeration and brick-set combinatorics.
//!
//! Bricks of the bound algebra correspond to bricks of its loop-stripped base
//! with every loop acting as zero, so enumeration happens over the base and
//! the results are lifted. Thin mode walks the positive roots of the base's
//! Dynkin diagram; the two-vertex cyclic base carries its own explicit
//! four-module list. Brick sets are cliques of the compatibility graph.

use std::collections::HashSet;

use crate::error::Result;
use crate::linalg::{rat, RationalMatrix};
use crate::quiver::{strip_loops, BoundAlgebraSpec};
use crate::rep::{annihilated_by_relations, hom_dim, is_brick, Representation};
use crate::roots::{canonical_edges, classify_dynkin, is_two_cycle, positive_roots, DynkinDiagram};

#[derive(Debug, Clone)]
pub struct Brick {
    pub rep: Representation,
    pub dim_vector: Vec<usize>,
    pub name: String,
}

impl Brick {
    pub(crate) fn from_rep(rep: Representation) -> Self {
        Brick {
            dim_vector: rep.dims.clone(),
            name: rep.name.clone(),
            rep,
        }
    }

    /// Full invariant check: consistent dimension vector, a module over the
    /// bound algebra, zero loop maps, one-dimensional endomorphism ring.
    pub fn verify(&self, spec: &BoundAlgebraSpec) -> bool {
        self.dim_vector == self.rep.dims
            && annihilated_by_relations(spec, &self.rep)
            && spec
                .quiver
                .arrows
                .iter()
                .zip(&self.rep.maps)
                .all(|(a, m)| !a.is_loop() || m.is_zero_matrix())
            && is_brick(spec, &self.rep)
    }
}

/// Whether an enumeration provably contains every brick of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    LowerBound,
}

#[derive(Debug, Clone)]
pub struct BrickEnumeration {
    pub bricks: Vec<Brick>,
    pub completeness: Completeness,
}

/// Lifts a module over the loop-stripped base to the full algebra by letting
/// every loop act as zero. Non-loop arrows keep their order under stripping.
pub(crate) fn lift_to_spec(spec: &BoundAlgebraSpec, base_rep: &Representation) -> Representation {
    let mut base_maps = base_rep.maps.iter();
    let maps = spec
        .quiver
        .arrows
        .iter()
        .map(|a| {
            if a.is_loop() {
                let d = base_rep.dims[a.s0()];
                RationalMatrix::zeros(d, d)
            } else {
                base_maps.next().expect("stripped arrow count").clone()
            }
        })
        .collect();
    Representation {
        dims: base_rep.dims.clone(),
        maps,
        name: base_rep.name.clone(),
    }
}

/// Names a representation by its two radical layers: vertices generating the
/// top before the slash, socle vertices fed by an arrow after it, e.g.
/// "(2)", "(2/3)", "(4/2 5)", "(1 3/2)".
pub(crate) fn support_name(spec: &BoundAlgebraSpec, rep: &Representation) -> String {
    let mut fed = vec![false; spec.vertex_count()];
    for (k, a) in spec.quiver.arrows.iter().enumerate() {
        if !rep.maps[k].is_zero_matrix() {
            fed[a.t0()] = true;
        }
    }
    let layer = |want_fed: bool| -> Vec<String> {
        rep.support()
            .into_iter()
            .filter(|&v| fed[v] == want_fed)
            .map(|v| (v + 1).to_string())
            .collect()
    };
    let top = layer(false).join(" ");
    let socle = layer(true).join(" ");
    if socle.is_empty() {
        format!("({top})")
    } else {
        format!("({top}/{socle})")
    }
}

/// The thin representation of the base supported on `support` (0-based),
/// with identity maps on all arrows inside the support.
fn thin_rep(base: &BoundAlgebraSpec, support: &[bool]) -> Representation {
    let dims: Vec<usize> = support.iter().map(|&s| usize::from(s)).collect();
    let maps = base
        .quiver
        .arrows
        .iter()
        .map(|a| {
            let mut m = RationalMatrix::zeros(dims[a.t0()], dims[a.s0()]);
            if !a.is_loop() && support[a.s0()] && support[a.t0()] {
                *m.at_mut(0, 0) = rat(1);
            }
            m
        })
        .collect();
    let mut rep = Representation {
        dims,
        maps,
        name: String::new(),
    };
    rep.name = support_name(base, &rep);
    rep
}

/// The four bricks of the two-vertex cyclic base: both simples and the two
/// thin modules with exactly one of the cycle arrows acting as identity.
fn two_cycle_bricks(base: &BoundAlgebraSpec) -> Vec<Representation> {
    let mut out = vec![
        crate::rep::simple_rep(base, 1).expect("vertex 1"),
        crate::rep::simple_rep(base, 2).expect("vertex 2"),
    ];
    for live in 0..2 {
        let maps = base
            .quiver
            .arrows
            .iter()
            .map(|a| {
                let mut m = RationalMatrix::zeros(1, 1);
                if a.s0() == live {
                    *m.at_mut(0, 0) = rat(1);
                }
                m
            })
            .collect();
        let mut rep = Representation {
            dims: vec![1, 1],
            maps,
            name: String::new(),
        };
        rep.name = support_name(base, &rep);
        out.push(rep);
    }
    out
}

/// Whether the loop-stripped base is an orientation whose full brick list is
/// known: the canonical A/D/E orientation or its opposite (up to diagram
/// automorphism), any orientation of A(n) with n <= 3, or the two-vertex
/// cycle.
pub(crate) fn orientation_proven(base: &BoundAlgebraSpec) -> bool {
    if is_two_cycle(base) {
        return true;
    }
    let Ok(mappings) = classify_dynkin(base) else {
        return false;
    };
    if let DynkinDiagram::A(n) = mappings[0].diagram {
        if n <= 3 {
            return true;
        }
    }
    let ends = base.quiver.endpoints0();
    mappings.iter().any(|m| {
        let oriented: HashSet<(usize, usize)> = canonical_edges(m.diagram)
            .into_iter()
            .map(|(u, v)| (m.vertices[u], m.vertices[v]))
            .collect();
        ends.iter().all(|e| oriented.contains(e))
            || ends.iter().all(|&(s, t)| oriented.contains(&(t, s)))
    })
}

pub(crate) fn sort_bricks(bricks: &mut [Brick]) {
    bricks.sort_by(|a, b| {
        (a.rep.total_dim(), a.rep.support(), &a.dim_vector, &a.name).cmp(&(
            b.rep.total_dim(),
            b.rep.support(),
            &b.dim_vector,
            &b.name,
        ))
    });
}

/// Enumerates bricks through the thin positive-root candidates of the base
/// diagram (or the explicit list for the two-vertex cycle), lifted to `spec`
/// with zero loop maps. Requires the loop-stripped base to be Dynkin or the
/// two-vertex cycle.
pub fn enumerate_bricks_thin(spec: &BoundAlgebraSpec) -> Result<BrickEnumeration> {
    let (base, _) = strip_loops(spec);
    let base_bricks = if is_two_cycle(&base) {
        two_cycle_bricks(&base)
    } else {
        let mappings = classify_dynkin(&base)?;
        let mapping = &mappings[0];
        let mut out = Vec::new();
        for root in positive_roots(mapping.diagram)? {
            if root.iter().any(|&c| c > 1) {
                continue;
            }
            let mut support = vec![false; base.vertex_count()];
            for (canon, &c) in root.iter().enumerate() {
                if c == 1 {
                    support[mapping.vertices[canon]] = true;
                }
            }
            let rep = thin_rep(&base, &support);
            if annihilated_by_relations(&base, &rep) && is_brick(&base, &rep) {
                out.push(rep);
            }
        }
        // Roots are distinct, so the surviving thin bricks are too. The
        // two-cycle list instead contains two bricks sharing one dimension
        // vector, which is why this check stays inside this branch.
        debug_assert!(
            out.iter().map(|r| &r.dims).collect::<HashSet<_>>().len() == out.len(),
            "thin bricks are distinct by dimension vector"
        );
        out
    };
    let mut bricks: Vec<Brick> = base_bricks
        .iter()
        .map(|r| Brick::from_rep(lift_to_spec(spec, r)))
        .collect();
    sort_bricks(&mut bricks);
    let completeness = if orientation_proven(&base) {
        Completeness::Complete
    } else {
        Completeness::LowerBound
    };
    Ok(BrickEnumeration {
        bricks,
        completeness,
    })
}

#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    pub bricks: Vec<Brick>,
    /// hom[i][j] = dim Hom(brick_i, brick_j).
    pub hom: Vec<Vec<i64>>,
    /// Symmetric; true iff i != j and hom vanishes both ways.
    pub compatible: Vec<Vec<bool>>,
}

pub fn compatibility_graph(spec: &BoundAlgebraSpec, bricks: Vec<Brick>) -> CompatibilityGraph {
    let n = bricks.len();
    let hom: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| hom_dim(spec, &bricks[i].rep, &bricks[j].rep) as i64)
                .collect()
        })
        .collect();
    let compatible = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && hom[i][j] == 0 && hom[j][i] == 0)
                .collect()
        })
        .collect();
    CompatibilityGraph {
        bricks,
        hom,
        compatible,
    }
}

/// All maximal cliques (Bron-Kerbosch with pivoting), each as a sorted index
/// list, lexicographically ordered. Every brick set extends to one of these.
pub fn maximal_brick_sets(g: &CompatibilityGraph) -> Vec<Vec<usize>> {
    let n = g.bricks.len();
    assert!(n <= 128, "brick-set enumeration is capped at 128 bricks");
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<u128> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| g.compatible[i][j])
                .fold(0u128, |m, j| m | (1 << j))
        })
        .collect();
    let full = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut cliques = Vec::new();
    bron_kerbosch(0, full, 0, &adj, &mut cliques);
    let mut out: Vec<Vec<usize>> = cliques
        .into_iter()
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    out.sort();
    out
}

fn bron_kerbosch(r: u128, mut p: u128, mut x: u128, adj: &[u128], out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the vertex of p|x covering the most of p.
    let mut pivot_cover = 0u128;
    let mut best = u32::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let uncovered = (p & !adj[u]).count_ones();
        if best == u32::MAX || uncovered < best {
            best = uncovered;
            pivot_cover = adj[u];
        }
    }
    let mut candidates = p & !pivot_cover;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u128 << v;
        candidates &= candidates - 1;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= !bit;
        x |= bit;
    }
}
