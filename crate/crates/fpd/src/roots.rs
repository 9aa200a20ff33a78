//! Simply-laced Dynkin diagrams, their positive roots, and recognition of
//! quiver bases as Dynkin orientations.
//!
//! Canonical vertex numbering (1-based, matching the family generators):
//! A(n) is the path 1-2-...-n; D(n) is the path 1-...-(n-2) with n-1 and n
//! both attached to n-2; E(n) is the path 1-3-4-...-n with 2 attached to 4.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::BoundAlgebraSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinDiagram {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinDiagram {
    pub fn rank(self) -> usize {
        match self {
            DynkinDiagram::A(n) | DynkinDiagram::D(n) | DynkinDiagram::E(n) => n,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            DynkinDiagram::A(n) => n >= 1,
            DynkinDiagram::D(n) => n >= 4,
            DynkinDiagram::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(format!(
                "{self} is not a finite Dynkin diagram"
            )))
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinDiagram::A(n) => write!(f, "A({n})"),
            DynkinDiagram::D(n) => write!(f, "D({n})"),
            DynkinDiagram::E(n) => write!(f, "E({n})"),
        }
    }
}

/// Edges of the canonical diagram as 0-based (parent, child) pairs; the
/// family generators orient every arrow parent -> child.
pub fn canonical_edges(d: DynkinDiagram) -> Vec<(usize, usize)> {
    let n = d.rank();
    match d {
        DynkinDiagram::A(_) => (1..n).map(|i| (i - 1, i)).collect(),
        DynkinDiagram::D(_) => {
            let mut edges: Vec<(usize, usize)> = (1..n - 2).map(|i| (i - 1, i)).collect();
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
            edges
        }
        DynkinDiagram::E(_) => {
            let mut edges = vec![(0, 2)];
            edges.extend((3..n).map(|i| (i - 1, i)));
            edges.push((3, 1));
            edges
        }
    }
}

/// Highest-root coefficients in the canonical numbering; entrywise upper
/// bound for every positive root.
fn coefficient_caps(d: DynkinDiagram) -> Vec<usize> {
    let n = d.rank();
    match d {
        DynkinDiagram::A(_) => vec![1; n],
        DynkinDiagram::D(_) => {
            let mut caps = vec![2; n];
            caps[0] = 1;
            caps[n - 2] = 1;
            caps[n - 1] = 1;
            caps
        }
        DynkinDiagram::E(6) => vec![1, 2, 2, 3, 2, 1],
        DynkinDiagram::E(7) => vec![2, 2, 3, 4, 3, 2, 1],
        DynkinDiagram::E(8) => vec![2, 3, 4, 6, 5, 4, 3, 2],
        DynkinDiagram::E(_) => unreachable!("validated rank"),
    }
}

/// The Tits form q(x) = sum x_i^2 - sum over edges x_u x_v; roots are the
/// nonzero lattice points with q = 1.
fn tits_form(edges: &[(usize, usize)], x: &[usize]) -> i64 {
    let squares: i64 = x.iter().map(|&v| (v * v) as i64).sum();
    let cross: i64 = edges.iter().map(|&(u, v)| (x[u] * x[v]) as i64).sum();
    squares - cross
}

/// All positive roots of the diagram, as coefficient vectors over the
/// canonical vertices. A and D come from their closed-form lists; E types are
/// enumerated from the Tits form under the highest-root coefficient caps.
pub fn positive_roots(d: DynkinDiagram) -> Result<Vec<Vec<usize>>> {
    d.validate()?;
    let n = d.rank();
    let roots = match d {
        DynkinDiagram::A(_) => {
            let mut roots = Vec::new();
            for a in 0..n {
                for b in a..n {
                    let mut r = vec![0; n];
                    r[a..=b].fill(1);
                    roots.push(r);
                }
            }
            roots
        }
        DynkinDiagram::D(_) => {
            let mut roots = Vec::new();
            // Intervals inside the path 1..n-1.
            for a in 0..n - 1 {
                for b in a..n - 1 {
                    let mut r = vec![0; n];
                    r[a..=b].fill(1);
                    roots.push(r);
                }
            }
            // Chain tail through the branch vertex n: sum_{l=i}^{n-2} E_l + E_n,
            // degenerating to the simple root E_n itself at i = n-1.
            for i in 0..n - 1 {
                let mut r = vec![0; n];
                if i <= n - 3 {
                    r[i..=n - 3].fill(1);
                }
                r[n - 1] = 1;
                roots.push(r);
            }
            // Full tails through both branch vertices: sum_{l=i}^{n} E_l.
            for i in 0..n - 2 {
                let mut r = vec![0; n];
                r[i..].fill(1);
                roots.push(r);
            }
            // Doubled middles: sum_{l=i}^{n-2} E_l + sum_{k=j}^{n} E_k, i < j.
            for i in 0..n - 2 {
                for j in i + 1..n - 2 {
                    let mut r = vec![0; n];
                    for e in &mut r[i..=n - 3] {
                        *e += 1;
                    }
                    for e in &mut r[j..n] {
                        *e += 1;
                    }
                    roots.push(r);
                }
            }
            roots
        }
        DynkinDiagram::E(_) => {
            let edges = canonical_edges(d);
            let caps = coefficient_caps(d);
            let mut roots = Vec::new();
            let mut x = vec![0usize; n];
            loop {
                // Odometer over 0..=caps[i] per coordinate.
                let mut i = 0;
                while i < n {
                    if x[i] < caps[i] {
                        x[i] += 1;
                        break;
                    }
                    x[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                if tits_form(&edges, &x) == 1 {
                    roots.push(x.clone());
                }
            }
            roots
        }
    };
    let expected = match d {
        DynkinDiagram::A(_) => n * (n + 1) / 2,
        DynkinDiagram::D(_) => n * (n - 1),
        DynkinDiagram::E(6) => 36,
        DynkinDiagram::E(7) => 63,
        DynkinDiagram::E(8) => 120,
        DynkinDiagram::E(_) => unreachable!(),
    };
    debug_assert_eq!(roots.len(), expected, "{d} root count");
    Ok(roots)
}

/// An isomorphism from the canonical diagram onto the underlying graph of a
/// concrete quiver base: `vertices[canonical] = concrete` (both 0-based).
#[derive(Debug, Clone)]
pub struct DynkinMapping {
    pub diagram: DynkinDiagram,
    pub vertices: Vec<usize>,
}

/// Whether the base is the two-vertex cyclic quiver (one arrow each way).
pub(crate) fn is_two_cycle(base: &BoundAlgebraSpec) -> bool {
    if base.vertex_count() != 2 || base.arrow_count() != 2 {
        return false;
    }
    let ends: HashSet<(usize, usize)> = base.quiver.endpoints0().into_iter().collect();
    ends == HashSet::from([(0, 1), (1, 0)])
}

/// Recognizes the underlying graph of a loop-free base as a Dynkin diagram
/// and returns every graph isomorphism from the canonical diagram onto it
/// (several when the diagram has automorphisms). Fails with `NonDynkinBase`
/// on anything else: loops, parallel or opposite arrow pairs, cycles,
/// disconnected graphs, or branch patterns outside A/D/E.
pub fn classify_dynkin(base: &BoundAlgebraSpec) -> Result<Vec<DynkinMapping>> {
    let n = base.vertex_count();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = HashSet::new();
    for a in &base.quiver.arrows {
        if a.is_loop() {
            return Err(Error::NonDynkinBase);
        }
        let key = (a.s0().min(a.t0()), a.s0().max(a.t0()));
        if !seen.insert(key) {
            // Parallel arrows or a 2-cycle: underlying graph not simple.
            return Err(Error::NonDynkinBase);
        }
        neighbors[a.s0()].push(a.t0());
        neighbors[a.t0()].push(a.s0());
    }

    // Connected tree check.
    let mut visited = vec![false; n];
    let mut stack = vec![0];
    visited[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &neighbors[v] {
            if !visited[w] {
                visited[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    if reached != n || base.arrow_count() != n - 1 {
        return Err(Error::NonDynkinBase);
    }

    let degree = |v: usize| neighbors[v].len();
    let branch_vertices: Vec<usize> = (0..n).filter(|&v| degree(v) >= 3).collect();

    // Walks outward from `from` starting into `first`, listing the leg's
    // vertices in order; legs are simple paths since the graph is a tree with
    // at most one branch vertex.
    let walk_leg = |from: usize, first: usize| -> Vec<usize> {
        let mut leg = vec![first];
        let (mut prev, mut cur) = (from, first);
        while degree(cur) == 2 {
            let next = *neighbors[cur]
                .iter()
                .find(|&&w| w != prev)
                .expect("tree walk");
            leg.push(next);
            prev = cur;
            cur = next;
        }
        leg
    };

    match branch_vertices.as_slice() {
        [] => {
            // A path: map it from each end.
            let d = DynkinDiagram::A(n);
            if n == 1 {
                return Ok(vec![DynkinMapping {
                    diagram: d,
                    vertices: vec![0],
                }]);
            }
            let ends: Vec<usize> = (0..n).filter(|&v| degree(v) == 1).collect();
            let mappings = ends
                .iter()
                .map(|&e| {
                    let mut path = vec![e];
                    path.extend(walk_leg(e, neighbors[e][0]));
                    DynkinMapping {
                        diagram: d,
                        vertices: path,
                    }
                })
                .collect();
            Ok(mappings)
        }
        [center] => {
            let c = *center;
            if degree(c) != 3 {
                return Err(Error::NonDynkinBase);
            }
            let mut legs: Vec<Vec<usize>> = neighbors[c].iter().map(|&w| walk_leg(c, w)).collect();
            legs.sort_by_key(Vec::len);
            let (l1, l2, l3) = (legs[0].len(), legs[1].len(), legs[2].len());
            match (l1, l2, l3) {
                (1, 1, _) => {
                    let d = DynkinDiagram::D(l3 + 3);
                    // Which leg plays the long chain: forced for n >= 5, any
                    // of the three for D(4); the remaining two tips commute.
                    let long_choices: Vec<usize> = if l3 == 1 { vec![0, 1, 2] } else { vec![2] };
                    let mut mappings = Vec::new();
                    for long in long_choices {
                        let tips: Vec<usize> = (0..3).filter(|&i| i != long).collect();
                        for (t1, t2) in [(tips[0], tips[1]), (tips[1], tips[0])] {
                            let rank = d.rank();
                            let mut vertices = vec![0; rank];
                            vertices[rank - 3] = c;
                            for (step, &v) in legs[long].iter().enumerate() {
                                vertices[rank - 4 - step] = v;
                            }
                            vertices[rank - 2] = legs[t1][0];
                            vertices[rank - 1] = legs[t2][0];
                            mappings.push(DynkinMapping {
                                diagram: d,
                                vertices,
                            });
                        }
                    }
                    Ok(mappings)
                }
                (1, 2, 2) | (1, 2, 3) | (1, 2, 4) => {
                    let d = DynkinDiagram::E(l3 + 4);
                    // Canonical legs from vertex 4 (0-based 3): [2], [3,1],
                    // and the tail [5..n].
                    let tail: Vec<usize> = (4..d.rank()).collect();
                    let leg_swaps: Vec<(usize, usize)> = if l2 == l3 {
                        vec![(1, 2), (2, 1)]
                    } else {
                        vec![(1, 2)]
                    };
                    let mut mappings = Vec::new();
                    for (mid, long) in leg_swaps {
                        let mut vertices = vec![0; d.rank()];
                        vertices[3] = c;
                        vertices[1] = legs[0][0];
                        vertices[2] = legs[mid][0];
                        vertices[0] = legs[mid][1];
                        for (step, &v) in legs[long].iter().enumerate() {
                            vertices[tail[step]] = v;
                        }
                        mappings.push(DynkinMapping {
                            diagram: d,
                            vertices,
                        });
                    }
                    Ok(mappings)
                }
                _ => Err(Error::NonDynkinBase),
            }
        }
        _ => Err(Error::NonDynkinBase),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, FamilySpec};
    use crate::quiver::{strip_loops, Arrow, Quiver};

    fn custom_base(vertex_count: usize, ends: &[(usize, usize)]) -> BoundAlgebraSpec {
        let arrows = ends
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| Arrow::new(format!("e{k}"), s, t))
            .collect();
        BoundAlgebraSpec::new(Quiver::new(vertex_count, arrows).unwrap())
    }

    /// Independent route to the positive roots: close the simple roots under
    /// the Weyl reflections s_i(x) = x - (Cx)_i e_i, keeping nonnegative
    /// vectors, until a fixpoint.
    fn reflection_closure(d: DynkinDiagram) -> HashSet<Vec<i64>> {
        let n = d.rank();
        let edges = canonical_edges(d);
        let mut adj = vec![vec![0i64; n]; n];
        for &(u, v) in &edges {
            adj[u][v] = 1;
            adj[v][u] = 1;
        }
        let mut roots: HashSet<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                e
            })
            .collect();
        loop {
            let mut next = roots.clone();
            for r in &roots {
                for i in 0..n {
                    // Cartan pairing <r, alpha_i> = 2 r_i - sum_adjacent r_j.
                    let pairing = 2 * r[i] - (0..n).map(|j| adj[i][j] * r[j]).sum::<i64>();
                    let mut s = r.clone();
                    s[i] -= pairing;
                    if s.iter().all(|&v| v >= 0) {
                        next.insert(s);
                    }
                }
            }
            if next.len() == roots.len() {
                return roots;
            }
            roots = next;
        }
    }

    fn all_diagrams() -> Vec<DynkinDiagram> {
        vec![
            DynkinDiagram::A(1),
            DynkinDiagram::A(2),
            DynkinDiagram::A(3),
            DynkinDiagram::A(4),
            DynkinDiagram::A(5),
            DynkinDiagram::A(6),
            DynkinDiagram::D(4),
            DynkinDiagram::D(5),
            DynkinDiagram::D(6),
            DynkinDiagram::D(7),
            DynkinDiagram::E(6),
            DynkinDiagram::E(7),
            DynkinDiagram::E(8),
        ]
    }

    #[test]
    fn root_counts() {
        for d in all_diagrams() {
            let expected = match d {
                DynkinDiagram::A(n) => n * (n + 1) / 2,
                DynkinDiagram::D(n) => n * (n - 1),
                DynkinDiagram::E(6) => 36,
                DynkinDiagram::E(7) => 63,
                DynkinDiagram::E(8) => 120,
                _ => unreachable!(),
            };
            assert_eq!(positive_roots(d).unwrap().len(), expected, "{d}");
        }
    }

    #[test]
    fn a2_roots_exactly() {
        let mut roots = positive_roots(DynkinDiagram::A(2)).unwrap();
        roots.sort();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn d4_has_branch_singleton_and_doubled_root() {
        let roots = positive_roots(DynkinDiagram::D(4)).unwrap();
        assert_eq!(roots.len(), 12);
        assert!(roots.contains(&vec![0, 0, 0, 1]));
        assert!(roots.contains(&vec![1, 2, 1, 1]));
        let unique: HashSet<_> = roots.iter().cloned().collect();
        assert_eq!(unique.len(), roots.len());
    }

    #[test]
    fn roots_match_reflection_closure() {
        for d in all_diagrams() {
            let listed: HashSet<Vec<i64>> = positive_roots(d)
                .unwrap()
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as i64).collect())
                .collect();
            assert_eq!(listed, reflection_closure(d), "{d}");
        }
    }

    #[test]
    fn roots_satisfy_tits_form_and_caps() {
        for d in all_diagrams() {
            let edges = canonical_edges(d);
            let caps = coefficient_caps(d);
            for r in positive_roots(d).unwrap() {
                assert_eq!(tits_form(&edges, &r), 1, "{d} {r:?}");
                assert!(r.iter().zip(&caps).all(|(v, c)| v <= c), "{d} {r:?}");
            }
        }
    }

    #[test]
    fn rejects_invalid_diagram_parameters() {
        for d in [
            DynkinDiagram::A(0),
            DynkinDiagram::D(3),
            DynkinDiagram::E(5),
            DynkinDiagram::E(9),
        ] {
            assert!(positive_roots(d).is_err(), "{d}");
        }
    }

    #[test]
    fn classifies_generated_families_with_identity_mapping() {
        let cases = vec![
            (FamilySpec::a(4, vec![0; 4]), DynkinDiagram::A(4)),
            (FamilySpec::d(5, vec![0; 5]), DynkinDiagram::D(5)),
            (FamilySpec::e(6, vec![0; 6]), DynkinDiagram::E(6)),
            (FamilySpec::e(7, vec![0; 7]), DynkinDiagram::E(7)),
            (FamilySpec::e(8, vec![0; 8]), DynkinDiagram::E(8)),
        ];
        for (f, expected) in cases {
            let spec = generate_family(&f).unwrap();
            let (base, _) = strip_loops(&spec);
            let mappings = classify_dynkin(&base).unwrap();
            assert!(mappings.iter().all(|m| m.diagram == expected));
            let identity: Vec<usize> = (0..expected.rank()).collect();
            assert!(
                mappings.iter().any(|m| m.vertices == identity),
                "{expected} should admit the identity mapping"
            );
        }
    }

    #[test]
    fn every_mapping_is_a_graph_isomorphism() {
        let bases = vec![
            custom_base(4, &[(1, 2), (2, 3), (2, 4)]),
            custom_base(5, &[(3, 1), (1, 4), (4, 2), (2, 5)]),
            custom_base(6, &[(2, 1), (3, 2), (4, 3), (4, 5), (6, 4)]),
        ];
        for base in bases {
            let concrete: HashSet<(usize, usize)> = base
                .quiver
                .endpoints0()
                .into_iter()
                .map(|(s, t)| (s.min(t), s.max(t)))
                .collect();
            for m in classify_dynkin(&base).unwrap() {
                let mapped: HashSet<(usize, usize)> = canonical_edges(m.diagram)
                    .into_iter()
                    .map(|(u, v)| {
                        let (a, b) = (m.vertices[u], m.vertices[v]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                assert_eq!(mapped, concrete);
            }
        }
    }

    #[test]
    fn mapping_count_reflects_diagram_automorphisms() {
        let d4 = custom_base(4, &[(1, 2), (2, 3), (2, 4)]);
        assert_eq!(classify_dynkin(&d4).unwrap().len(), 6);
        let d5 = custom_base(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]);
        assert_eq!(classify_dynkin(&d5).unwrap().len(), 2);
        let a3 = custom_base(3, &[(1, 2), (3, 2)]);
        assert_eq!(classify_dynkin(&a3).unwrap().len(), 2);
        let a1 = custom_base(1, &[]);
        assert_eq!(classify_dynkin(&a1).unwrap().len(), 1);
        let e6 = generate_family(&FamilySpec::e(6, vec![0; 6])).unwrap();
        assert_eq!(classify_dynkin(&e6).unwrap().len(), 2);
        let e7 = generate_family(&FamilySpec::e(7, vec![0; 7])).unwrap();
        assert_eq!(classify_dynkin(&e7).unwrap().len(), 1);
    }

    #[test]
    fn root_transport_is_mapping_independent() {
        let base = custom_base(4, &[(1, 2), (2, 3), (2, 4)]);
        let mappings = classify_dynkin(&base).unwrap();
        let mut transported: Vec<HashSet<Vec<usize>>> = Vec::new();
        for m in &mappings {
            let roots = positive_roots(m.diagram).unwrap();
            let set: HashSet<Vec<usize>> = roots
                .iter()
                .map(|r| {
                    let mut concrete = vec![0; 4];
                    for (canon, &v) in m.vertices.iter().enumerate() {
                        concrete[v] = r[canon];
                    }
                    concrete
                })
                .collect();
            transported.push(set);
        }
        assert!(transported.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn rejects_non_dynkin_bases() {
        let three_cycle = custom_base(3, &[(1, 2), (2, 3), (3, 1)]);
        assert!(matches!(
            classify_dynkin(&three_cycle),
            Err(Error::NonDynkinBase)
        ));
        let two_cycle = custom_base(2, &[(1, 2), (2, 1)]);
        assert!(classify_dynkin(&two_cycle).is_err());
        assert!(is_two_cycle(&two_cycle));
        let parallel = custom_base(2, &[(1, 2), (1, 2)]);
        assert!(classify_dynkin(&parallel).is_err());
        assert!(!is_two_cycle(&parallel));
        let star4 = custom_base(5, &[(5, 1), (5, 2), (5, 3), (5, 4)]);
        assert!(classify_dynkin(&star4).is_err());
        let affine_e6 = custom_base(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)]);
        assert!(classify_dynkin(&affine_e6).is_err());
        let d8 = custom_base(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8)]);
        // Legs (1, 1, 5) from the branch at vertex 6: still Dynkin, D(8).
        assert!(classify_dynkin(&d8).is_ok());
        let e9_shape = custom_base(
            9,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (4, 9),
            ],
        );
        // Legs (1, 3, 4): outside A/D/E.
        assert!(classify_dynkin(&e9_shape).is_err());
        let disconnected = custom_base(4, &[(1, 2), (3, 4)]);
        assert!(classify_dynkin(&disconnected).is_err());
    }

    #[test]
    fn thin_root_supports_are_connected() {
        for d in all_diagrams() {
            let edges = canonical_edges(d);
            for r in positive_roots(d).unwrap() {
                let support: Vec<usize> = (0..r.len()).filter(|&v| r[v] > 0).collect();
                let mut reached: HashSet<usize> = HashSet::from([support[0]]);
                let mut frontier = vec![support[0]];
                while let Some(v) = frontier.pop() {
                    for &(a, b) in &edges {
                        for (x, y) in [(a, b), (b, a)] {
                            if x == v && r[y] > 0 && reached.insert(y) {
                                frontier.push(y);
                            }
                        }
                    }
                }
                assert_eq!(reached.len(), support.len(), "{d} {r:?}");
            }
        }
    }
}
