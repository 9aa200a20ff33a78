//! Plain-text quiver files.
//!
//! ```text
//! # anything after '#' is a comment
//! vertices: 3
//! arrow x_2: 1 -> 2
//! arrow x_3: 2 -> 3
//! loops 1: 2          # sugar: two loops loop_1_1, loop_1_2 at vertex 1
//! relations: rad2
//! ```
//!
//! `vertices:` must come before any arrow, each file declares it once, and
//! `relations: rad2` is mandatory (it is the only supported relation kind).
//! Arrows keep file order; `loops v: c` expands in place to `c` loops with ids
//! `loop_<v>_<j>`.

use crate::error::{Error, Result};
use crate::quiver::{Arrow, BoundAlgebraSpec, Quiver};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| err(line, format!("expected {what}, found {tok:?}")))
}

/// Parses the quiver file format into a bound algebra spec.
pub fn parse_quiver(text: &str) -> Result<BoundAlgebraSpec> {
    let mut vertex_count: Option<usize> = None;
    let mut relations_seen = false;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }

        if let Some(rest) = line.strip_prefix("vertices:") {
            if vertex_count.is_some() {
                return Err(err(lineno, "duplicate 'vertices:' directive"));
            }
            let k = parse_usize(rest.trim(), lineno, "a vertex count")?;
            if k == 0 {
                return Err(err(lineno, "vertex count must be positive"));
            }
            vertex_count = Some(k);
        } else if let Some(rest) = line.strip_prefix("relations:") {
            if relations_seen {
                return Err(err(lineno, "duplicate 'relations:' directive"));
            }
            let kind = rest.trim();
            if kind != "rad2" {
                return Err(err(
                    lineno,
                    format!("unsupported relation kind {kind:?} (expected \"rad2\")"),
                ));
            }
            relations_seen = true;
        } else if let Some(rest) = line.strip_prefix("arrow ") {
            let k = vertex_count
                .ok_or_else(|| err(lineno, "'vertices:' must appear before any arrow"))?;
            let (id, endpoints) = rest
                .split_once(':')
                .ok_or_else(|| err(lineno, "expected 'arrow <id>: <s> -> <t>'"))?;
            let id = id.trim();
            let (s, t) = endpoints
                .split_once("->")
                .ok_or_else(|| err(lineno, "expected '<s> -> <t>' after the arrow id"))?;
            let s = parse_usize(s.trim(), lineno, "a source vertex")?;
            let t = parse_usize(t.trim(), lineno, "a target vertex")?;
            for v in [s, t] {
                if v == 0 || v > k {
                    return Err(err(lineno, format!("vertex {v} out of range 1..={k}")));
                }
            }
            if id.is_empty() || id.chars().any(char::is_whitespace) {
                return Err(err(lineno, format!("bad arrow id {id:?}")));
            }
            if arrows.iter().any(|a| a.id == id) {
                return Err(err(lineno, format!("duplicate arrow id {id:?}")));
            }
            arrows.push(Arrow::new(id, s, t));
        } else if let Some(rest) = line.strip_prefix("loops ") {
            let k = vertex_count
                .ok_or_else(|| err(lineno, "'vertices:' must appear before any loops"))?;
            let (v, count) = rest
                .split_once(':')
                .ok_or_else(|| err(lineno, "expected 'loops <v>: <count>'"))?;
            let v = parse_usize(v.trim(), lineno, "a vertex")?;
            if v == 0 || v > k {
                return Err(err(lineno, format!("vertex {v} out of range 1..={k}")));
            }
            let count = parse_usize(count.trim(), lineno, "a loop count")?;
            for j in 1..=count {
                let id = format!("loop_{v}_{j}");
                if arrows.iter().any(|a| a.id == id) {
                    return Err(err(lineno, format!("duplicate arrow id {id:?}")));
                }
                arrows.push(Arrow::new(id, v, v));
            }
        } else {
            return Err(err(lineno, format!("unrecognized directive: {line:?}")));
        }
    }

    let vertex_count =
        vertex_count.ok_or_else(|| err(last_line + 1, "missing 'vertices:' directive"))?;
    if !relations_seen {
        return Err(err(last_line + 1, "missing 'relations: rad2' directive"));
    }
    let quiver = Quiver::new(vertex_count, arrows).map_err(|e| match e {
        Error::InvalidQuiver(msg) => err(last_line, msg),
        other => other,
    })?;
    Ok(BoundAlgebraSpec::new(quiver))
}

/// Renders a spec in the file format; `parse_quiver(render_quiver(s)) == s`.
pub fn render_quiver(spec: &BoundAlgebraSpec) -> String {
    let mut out = String::new();
    out.push_str(&format!("vertices: {}\n", spec.vertex_count()));
    for a in &spec.quiver.arrows {
        out.push_str(&format!("arrow {}: {} -> {}\n", a.id, a.source, a.target));
    }
    out.push_str("relations: rad2\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, FamilySpec};
    use proptest::prelude::*;

    #[test]
    fn minimal_file() {
        let spec = parse_quiver("vertices: 1\nrelations: rad2\n").unwrap();
        assert_eq!(spec.vertex_count(), 1);
        assert_eq!(spec.arrow_count(), 0);
        assert_eq!(spec.loop_counts, vec![0]);
    }

    #[test]
    fn file_matches_generated_family() {
        let text = "\
# A(2) with one loop at vertex 1 and two at vertex 2
vertices: 2
arrow x_2: 1 -> 2
arrow a_1^1: 1 -> 1
arrow a_2^1: 2 -> 2
arrow a_2^2: 2 -> 2
relations: rad2
";
        let parsed = parse_quiver(text).unwrap();
        let generated = generate_family(&FamilySpec::a(2, vec![1, 2])).unwrap();
        assert_eq!(parsed, generated);
    }

    #[test]
    fn loops_sugar_expands_in_order() {
        let spec =
            parse_quiver("vertices: 2\narrow x: 1 -> 2\nloops 2: 2\nrelations: rad2\n").unwrap();
        let ids: Vec<&str> = spec.quiver.arrows.iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, vec!["x", "loop_2_1", "loop_2_2"]);
        assert_eq!(spec.loop_counts, vec![0, 2]);
    }

    #[test]
    fn endpoint_out_of_range_reports_line() {
        let e = parse_quiver("vertices: 2\narrow x: 1 -> 3\nrelations: rad2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
    }

    #[test]
    fn duplicate_id_rejected() {
        let e = parse_quiver("vertices: 2\narrow x: 1 -> 2\narrow x: 2 -> 1\nrelations: rad2\n")
            .unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
    }

    #[test]
    fn unsupported_relations_rejected() {
        let e = parse_quiver("vertices: 1\nrelations: rad3\n").unwrap_err();
        assert!(e.to_string().contains("unsupported relation kind"));
    }

    #[test]
    fn missing_relations_rejected() {
        let e = parse_quiver("vertices: 1\n").unwrap_err();
        assert!(e.to_string().contains("missing 'relations"));
    }

    #[test]
    fn arrow_before_vertices_rejected() {
        let e = parse_quiver("arrow x: 1 -> 1\nvertices: 1\nrelations: rad2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
    }

    #[test]
    fn unknown_directive_rejected() {
        let e = parse_quiver("vertices: 1\nvortex: 7\nrelations: rad2\n").unwrap_err();
        assert!(e.to_string().contains("unrecognized directive"));
    }

    fn family_strategy() -> impl Strategy<Value = FamilySpec> {
        prop_oneof![
            (1usize..5).prop_flat_map(|n| {
                proptest::collection::vec(0usize..3, n)
                    .prop_map(move |loops| FamilySpec::a(n, loops))
            }),
            (4usize..6).prop_flat_map(|n| {
                proptest::collection::vec(0usize..3, n)
                    .prop_map(move |loops| FamilySpec::d(n, loops))
            }),
            (0usize..4, 0usize..4).prop_map(|(n, m)| FamilySpec::qnm(n, m)),
            proptest::collection::vec(0usize..3, 3)
                .prop_map(|l| FamilySpec::a3_reversed([l[0], l[1], l[2]])),
        ]
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(f in family_strategy()) {
            let spec = generate_family(&f).unwrap();
            let round = parse_quiver(&render_quiver(&spec)).unwrap();
            prop_assert_eq!(round, spec);
        }
    }
}
