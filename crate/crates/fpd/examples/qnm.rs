//! The two-vertex cycle family Q(n, m) and its quadratic fpd.
//!
//! Q(n, m) is the quiver with two vertices, one arrow in each direction,
//! n loops at the first vertex and m at the second. Its module category has
//! exactly four bricks, and the Frobenius-Perron dimension is the largest
//! root of x^2 - (m + n)x + (mn - 1):
//!
//!     fpd = (m + n + sqrt((m - n)^2 + 4)) / 2
//!
//! The radical-square-zero relations couple the two loop families through
//! the cycle, so the value is genuinely irrational whenever m != n.
//!
//! Run with `cargo run --example qnm`.

use fpd::{fpd_family, FamilySpec, Mode, DEFAULT_TOL};

fn main() -> Result<(), fpd::Error> {
    println!("fpd over the (n, m) grid, certified exact in every cell:\n");
    println!(
        "  n\\m {}",
        (0..4).map(|m| format!("{m:22}")).collect::<String>()
    );
    for n in 0..4usize {
        let mut row = format!("  {n}  ");
        for m in 0..4usize {
            let report = fpd_family(&FamilySpec::qnm(n, m), Mode::Thin, DEFAULT_TOL)?;
            let exact = report.fpd.exact.expect("quadratic certificate");
            row.push_str(&format!(" {:21}", exact.expression()));
        }
        println!("{row}");
    }

    println!();
    println!("On the diagonal the radicand is a perfect square and fpd = n + 1.");
    println!("One step off the diagonal the golden ratio appears:");
    for n in 0..3usize {
        let report = fpd_family(&FamilySpec::qnm(n, n + 1), Mode::Thin, DEFAULT_TOL)?;
        let exact = report.fpd.exact.expect("quadratic certificate");
        println!(
            "  fpd Q({n}, {}) = {} = {n} + (1 + sqrt 5)/2 ~ {:.12}",
            n + 1,
            exact.expression(),
            exact.to_f64(),
        );
    }

    println!();
    let report = fpd_family(&FamilySpec::qnm(1, 2), Mode::Thin, DEFAULT_TOL)?;
    println!("The four bricks of Q(1, 2) and their maximal brick sets:");
    for (i, b) in report.bricks.iter().enumerate() {
        println!(
            "  [{i}] {} with dimension vector {:?}",
            b.name, b.dim_vector
        );
    }
    for set in &report.sets {
        let names: Vec<&str> = set
            .indices
            .iter()
            .map(|&i| report.bricks[i].name.as_str())
            .collect();
        let rho = set
            .rho
            .exact
            .as_ref()
            .map(|v| v.expression())
            .unwrap_or_else(|| format!("~{:.6}", set.rho.value));
        println!("  set {names:?} has spectral radius {rho}");
    }
    println!();
    println!("The two one-dimensional-per-vertex bricks share a dimension");
    println!("vector but are not isomorphic: one kills the cycle arrow x,");
    println!("the other kills y, and only the pair of simples forms a");
    println!("brick set of size two.");
    Ok(())
}
