//! Generators for the standard quiver families with prescribed loop counts.
//!
//! The five kinds:
//!
//! * `A`: linear chain `1 -> 2 -> ... -> n` (arrows `x_2 .. x_n`), plus
//!   `loops[i]` loops `a_{i+1}^l` at each vertex.
//! * `D` (n >= 4): chain `1 -> ... -> n-2` plus `x_{n-1}: n-2 -> n-1` and
//!   `x_n: n-2 -> n`, loops `b_i^l`.
//! * `E` (n in 6..=8): chain `1 -> 3 -> 4 -> ... -> n` (arrows `x_3 .. x_n`)
//!   plus the branch `x_2: 4 -> 2`, loops `c_i^l`.
//! * `Qnm`: two vertices with `x: 1 -> 2`, `y: 2 -> 1`, `n` loops `a_*` at 1
//!   and `m` loops `b_*` at 2.
//! * `A3Reversed`: `1 -> 2 <- 3` (arrows `x: 1 -> 2`, `y: 3 -> 2`) with loop
//!   counts `(N, M, L)`.
//!
//! Arrow order is canonical everywhere: chain arrows ascending, then branch
//! arrows, then loops grouped by vertex. Tests rely on this order.

use crate::error::{Error, Result};
use crate::quiver::{Arrow, BoundAlgebraSpec, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    A,
    D,
    E,
    Qnm,
    A3Reversed,
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyKind::A => "A",
            FamilyKind::D => "D",
            FamilyKind::E => "E",
            FamilyKind::Qnm => "Qnm",
            FamilyKind::A3Reversed => "A3Reversed",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// Number of vertices. Fixed at 2 for `Qnm` and 3 for `A3Reversed`.
    pub n: usize,
    /// Loop count per vertex; length must equal the vertex count.
    pub loops: Vec<usize>,
}

impl FamilySpec {
    pub fn a(n: usize, loops: Vec<usize>) -> Self {
        FamilySpec {
            kind: FamilyKind::A,
            n,
            loops,
        }
    }

    pub fn d(n: usize, loops: Vec<usize>) -> Self {
        FamilySpec {
            kind: FamilyKind::D,
            n,
            loops,
        }
    }

    pub fn e(n: usize, loops: Vec<usize>) -> Self {
        FamilySpec {
            kind: FamilyKind::E,
            n,
            loops,
        }
    }

    /// The two-vertex cycle with `n` loops at vertex 1 and `m` at vertex 2.
    pub fn qnm(n: usize, m: usize) -> Self {
        FamilySpec {
            kind: FamilyKind::Qnm,
            n: 2,
            loops: vec![n, m],
        }
    }

    pub fn a3_reversed(nml: [usize; 3]) -> Self {
        FamilySpec {
            kind: FamilyKind::A3Reversed,
            n: 3,
            loops: nml.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self.kind {
            FamilyKind::A => {
                if self.n == 0 {
                    return bad("A requires n >= 1".into());
                }
            }
            FamilyKind::D => {
                if self.n < 4 {
                    return bad(format!("D requires n >= 4, got {}", self.n));
                }
            }
            FamilyKind::E => {
                if !(6..=8).contains(&self.n) {
                    return bad(format!("E requires n in 6..=8, got {}", self.n));
                }
            }
            FamilyKind::Qnm => {
                if self.n != 2 {
                    return bad(format!("Qnm has exactly 2 vertices, got n = {}", self.n));
                }
            }
            FamilyKind::A3Reversed => {
                if self.n != 3 {
                    return bad(format!(
                        "A3Reversed has exactly 3 vertices, got n = {}",
                        self.n
                    ));
                }
            }
        }
        if self.loops.len() != self.n {
            return bad(format!(
                "loop vector has length {}, expected {}",
                self.loops.len(),
                self.n
            ));
        }
        Ok(())
    }
}

fn push_loops(arrows: &mut Vec<Arrow>, label: char, loops: &[usize]) {
    for (v0, &count) in loops.iter().enumerate() {
        let v = v0 + 1;
        for l in 1..=count {
            arrows.push(Arrow::new(format!("{label}_{v}^{l}"), v, v));
        }
    }
}

/// Builds the bound quiver algebra spec of a family instance.
pub fn generate_family(f: &FamilySpec) -> Result<BoundAlgebraSpec> {
    f.validate()?;
    let n = f.n;
    let mut arrows = Vec::new();
    match f.kind {
        FamilyKind::A => {
            for i in 2..=n {
                arrows.push(Arrow::new(format!("x_{i}"), i - 1, i));
            }
            push_loops(&mut arrows, 'a', &f.loops);
        }
        FamilyKind::D => {
            for i in 2..=n - 2 {
                arrows.push(Arrow::new(format!("x_{i}"), i - 1, i));
            }
            arrows.push(Arrow::new(format!("x_{}", n - 1), n - 2, n - 1));
            arrows.push(Arrow::new(format!("x_{n}"), n - 2, n));
            push_loops(&mut arrows, 'b', &f.loops);
        }
        FamilyKind::E => {
            arrows.push(Arrow::new("x_3", 1, 3));
            for i in 4..=n {
                arrows.push(Arrow::new(format!("x_{i}"), i - 1, i));
            }
            arrows.push(Arrow::new("x_2", 4, 2));
            push_loops(&mut arrows, 'c', &f.loops);
        }
        FamilyKind::Qnm => {
            arrows.push(Arrow::new("x", 1, 2));
            arrows.push(Arrow::new("y", 2, 1));
            for l in 1..=f.loops[0] {
                arrows.push(Arrow::new(format!("a_{l}"), 1, 1));
            }
            for l in 1..=f.loops[1] {
                arrows.push(Arrow::new(format!("b_{l}"), 2, 2));
            }
        }
        FamilyKind::A3Reversed => {
            arrows.push(Arrow::new("x", 1, 2));
            arrows.push(Arrow::new("y", 3, 2));
            for l in 1..=f.loops[0] {
                arrows.push(Arrow::new(format!("a_{l}"), 1, 1));
            }
            for l in 1..=f.loops[1] {
                arrows.push(Arrow::new(format!("b_{l}"), 2, 2));
            }
            for l in 1..=f.loops[2] {
                arrows.push(Arrow::new(format!("c_{l}"), 3, 3));
            }
        }
    }
    Ok(BoundAlgebraSpec::new(Quiver::new(n, arrows)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_without_loops() {
        let spec = generate_family(&FamilySpec::a(3, vec![0, 0, 0])).unwrap();
        assert_eq!(spec.vertex_count(), 3);
        assert_eq!(spec.arrow_count(), 2);
        assert_eq!(spec.quiver.endpoints0(), vec![(0, 1), (1, 2)]);
        assert_eq!(spec.loop_counts, vec![0, 0, 0]);
    }

    #[test]
    fn a1_is_a_point_with_loops() {
        let spec = generate_family(&FamilySpec::a(1, vec![2])).unwrap();
        assert_eq!(spec.vertex_count(), 1);
        assert_eq!(spec.arrow_count(), 2);
        assert!(spec.quiver.arrows.iter().all(Arrow::is_loop));
    }

    #[test]
    fn qnm_one_one_has_four_arrows() {
        let spec = generate_family(&FamilySpec::qnm(1, 1)).unwrap();
        assert_eq!(spec.arrow_count(), 4);
        let ids: Vec<&str> = spec.quiver.arrows.iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, vec!["x", "y", "a_1", "b_1"]);
        assert_eq!(
            spec.quiver.endpoints0(),
            vec![(0, 1), (1, 0), (0, 0), (1, 1)]
        );
    }

    #[test]
    fn d4_branch_layout() {
        let spec = generate_family(&FamilySpec::d(4, vec![0, 0, 0, 0])).unwrap();
        assert_eq!(spec.quiver.endpoints0(), vec![(0, 1), (1, 2), (1, 3)]);
        let ids: Vec<&str> = spec.quiver.arrows.iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, vec!["x_2", "x_3", "x_4"]);
    }

    #[test]
    fn e6_branch_layout() {
        let spec = generate_family(&FamilySpec::e(6, vec![0; 6])).unwrap();
        // 1 -> 3 -> 4 -> 5 -> 6 with 4 -> 2.
        assert_eq!(
            spec.quiver.endpoints0(),
            vec![(0, 2), (2, 3), (3, 4), (4, 5), (3, 1)]
        );
    }

    #[test]
    fn rejects_invalid_shapes() {
        assert!(generate_family(&FamilySpec::e(5, vec![0; 5])).is_err());
        assert!(generate_family(&FamilySpec::d(3, vec![0; 3])).is_err());
        assert!(generate_family(&FamilySpec::a(0, vec![])).is_err());
        assert!(generate_family(&FamilySpec::a(3, vec![0, 0])).is_err());
        assert!(generate_family(&FamilySpec {
            kind: FamilyKind::Qnm,
            n: 3,
            loops: vec![0, 0, 0]
        })
        .is_err());
    }

    #[test]
    fn loop_ids_follow_vertex_and_index() {
        let spec = generate_family(&FamilySpec::a(2, vec![1, 2])).unwrap();
        let ids: Vec<&str> = spec.quiver.arrows.iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, vec!["x_2", "a_1^1", "a_2^1", "a_2^2"]);
    }
}
