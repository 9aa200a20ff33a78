//! Quivers and radical-square-zero bound algebra specs.
//!
//! A [`BoundAlgebraSpec`] is a finite quiver together with the relation ideal
//! generated by all paths of length two, i.e. the algebra kQ / (rad kQ)^2.
//! Vertices are 1-indexed to match the usual labeling of the families; all
//! internal code converts to 0-based indices through [`Arrow::s0`] /
//! [`Arrow::t0`].

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    /// Source vertex, 1-based.
    pub source: usize,
    /// Target vertex, 1-based.
    pub target: usize,
}

impl Arrow {
    pub fn new(id: impl Into<String>, source: usize, target: usize) -> Self {
        Arrow {
            id: id.into(),
            source,
            target,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    /// Source vertex as a 0-based index.
    pub fn s0(&self) -> usize {
        self.source - 1
    }

    /// Target vertex as a 0-based index.
    pub fn t0(&self) -> usize {
        self.target - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let q = Quiver {
            vertex_count,
            arrows,
        };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if self.vertex_count == 0 {
            return Err(Error::InvalidQuiver("vertex count must be positive".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for a in &self.arrows {
            if a.id.is_empty() || a.id.chars().any(char::is_whitespace) {
                return Err(Error::InvalidQuiver(format!(
                    "arrow id {:?} must be nonempty and free of whitespace",
                    a.id
                )));
            }
            if !seen.insert(a.id.clone()) {
                return Err(Error::InvalidQuiver(format!(
                    "duplicate arrow id {:?}",
                    a.id
                )));
            }
            for v in [a.source, a.target] {
                if v == 0 || v > self.vertex_count {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow {:?} endpoint {} out of range 1..={}",
                        a.id, v, self.vertex_count
                    )));
                }
            }
        }
        Ok(())
    }

    /// Number of loops at each vertex, 0-indexed by vertex.
    pub fn loop_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.vertex_count];
        for a in &self.arrows {
            if a.is_loop() {
                counts[a.s0()] += 1;
            }
        }
        counts
    }

    /// 0-based (source, target) pairs in arrow order.
    pub fn endpoints0(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().map(|a| (a.s0(), a.t0())).collect()
    }
}

/// The only relation ideal this crate works with: all paths of length two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    RadicalSquareZero,
}

/// A quiver bound by the square of the arrow ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundAlgebraSpec {
    pub quiver: Quiver,
    pub relation_kind: RelationKind,
    /// Loops per vertex (redundant with the quiver, kept for quick access).
    pub loop_counts: Vec<usize>,
}

impl BoundAlgebraSpec {
    pub fn new(quiver: Quiver) -> Self {
        let loop_counts = quiver.loop_counts();
        BoundAlgebraSpec {
            quiver,
            relation_kind: RelationKind::RadicalSquareZero,
            loop_counts,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn total_loops(&self) -> usize {
        self.loop_counts.iter().sum()
    }
}

/// Removes every loop, returning the loop-free base together with the
/// per-vertex loop counts. Non-loop arrows keep their ids and relative order.
pub fn strip_loops(spec: &BoundAlgebraSpec) -> (BoundAlgebraSpec, Vec<usize>) {
    let arrows = spec
        .quiver
        .arrows
        .iter()
        .filter(|a| !a.is_loop())
        .cloned()
        .collect();
    let base = BoundAlgebraSpec::new(Quiver {
        vertex_count: spec.quiver.vertex_count,
        arrows,
    });
    (base, spec.loop_counts.clone())
}

/// The opposite algebra: every arrow reversed, ids and order preserved.
pub fn opposite(spec: &BoundAlgebraSpec) -> BoundAlgebraSpec {
    let arrows = spec
        .quiver
        .arrows
        .iter()
        .map(|a| Arrow::new(a.id.clone(), a.target, a.source))
        .collect();
    BoundAlgebraSpec::new(Quiver {
        vertex_count: spec.quiver.vertex_count,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, FamilySpec};
    use proptest::prelude::*;

    #[test]
    fn rejects_empty_quiver() {
        assert!(Quiver::new(0, vec![]).is_err());
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = Quiver::new(2, vec![Arrow::new("x", 1, 3)]).unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn rejects_duplicate_ids() {
        assert!(Quiver::new(2, vec![Arrow::new("x", 1, 2), Arrow::new("x", 2, 1)]).is_err());
    }

    #[test]
    fn strip_loops_on_chain_with_loops() {
        let spec = generate_family(&FamilySpec::a(2, vec![1, 2])).unwrap();
        let (base, counts) = strip_loops(&spec);
        assert_eq!(counts, vec![1, 2]);
        assert_eq!(base.arrow_count(), 1);
        assert_eq!(base.quiver.arrows[0].id, "x_2");
        assert_eq!(base.total_loops(), 0);
    }

    #[test]
    fn strip_loops_is_identity_on_loop_free() {
        let spec = generate_family(&FamilySpec::a(3, vec![0, 0, 0])).unwrap();
        let (base, counts) = strip_loops(&spec);
        assert_eq!(base, spec);
        assert_eq!(counts, vec![0, 0, 0]);
    }

    #[test]
    fn strip_loops_on_two_vertex_cycle() {
        let spec = generate_family(&FamilySpec::qnm(3, 4)).unwrap();
        let (base, counts) = strip_loops(&spec);
        assert_eq!(counts, vec![3, 4]);
        assert_eq!(base.arrow_count(), 2);
        assert!(base.quiver.arrows.iter().all(|a| !a.is_loop()));
    }

    #[test]
    fn opposite_reverses_chain() {
        let spec = generate_family(&FamilySpec::a(3, vec![0, 1, 0])).unwrap();
        let op = opposite(&spec);
        let x2 = op.quiver.arrows.iter().find(|a| a.id == "x_2").unwrap();
        assert_eq!((x2.source, x2.target), (2, 1));
        assert_eq!(op.loop_counts, vec![0, 1, 0]);
    }

    #[test]
    fn opposite_of_reversed_a3() {
        let spec = generate_family(&FamilySpec::a3_reversed([0, 0, 0])).unwrap();
        let op = opposite(&spec);
        let dirs: Vec<(usize, usize)> = op.quiver.endpoints0();
        assert_eq!(dirs, vec![(1, 0), (1, 2)]);
    }

    fn family_strategy() -> impl Strategy<Value = FamilySpec> {
        prop_oneof![
            (1usize..6).prop_flat_map(|n| {
                proptest::collection::vec(0usize..3, n)
                    .prop_map(move |loops| FamilySpec::a(n, loops))
            }),
            (4usize..6).prop_flat_map(|n| {
                proptest::collection::vec(0usize..3, n)
                    .prop_map(move |loops| FamilySpec::d(n, loops))
            }),
            (0usize..3, 0usize..3).prop_map(|(n, m)| FamilySpec::qnm(n, m)),
            proptest::collection::vec(0usize..3, 3)
                .prop_map(|l| FamilySpec::a3_reversed([l[0], l[1], l[2]])),
            (6usize..9).prop_flat_map(|n| {
                proptest::collection::vec(0usize..3, n)
                    .prop_map(move |loops| FamilySpec::e(n, loops))
            }),
        ]
    }

    proptest! {
        #[test]
        fn opposite_is_an_involution(f in family_strategy()) {
            let spec = generate_family(&f).unwrap();
            prop_assert_eq!(opposite(&opposite(&spec)), spec);
        }

        #[test]
        fn strip_loops_removes_all_loops(f in family_strategy()) {
            let spec = generate_family(&f).unwrap();
            let (base, counts) = strip_loops(&spec);
            prop_assert_eq!(base.total_loops(), 0);
            prop_assert_eq!(counts.iter().sum::<usize>(),
                            spec.total_loops());
            prop_assert_eq!(base.arrow_count() + spec.total_loops(), spec.arrow_count());
        }
    }
}
