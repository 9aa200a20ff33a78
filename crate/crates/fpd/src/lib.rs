//! Frobenius-Perron dimensions of module categories of radical-square-zero
//! bound quiver algebras.
//!
//! Given a finite quiver Q, the algebra kQ / (rad kQ)^2 has a module category
//! whose Frobenius-Perron dimension is the supremum, over all brick sets, of
//! the spectral radius of the Ext^1 adjacency matrix of the set. This crate
//! enumerates the bricks, builds the Hom and Ext^1 matrices exactly over the
//! rationals, lists the maximal brick sets, and certifies the resulting
//! spectral radii, exactly where possible.
//!
//! ## Examples directory
//!
//! The examples are the primary interface; each one is a small, runnable
//! program covering one capability:
//!
//! ```text
//! examples/
//! ├── families.rs     # closed forms for the modified A, D, E chains
//! ├── qnm.rs          # the two-vertex cycle family and its quadratic fpd
//! ├── quiver_file.rs  # parsing quiver files and reading reports
//! ├── hom_ext.rs      # Hom and Ext^1 computations between representations
//! ├── orientation.rs  # how orientation changes completeness, not fpd
//! └── oracle.rs       # finite-field enumeration beyond the thin families
//! ```
//!
//! ```bash
//! cargo run --example families
//! cargo run --example qnm
//! ```
//!
//! ## Library entry points
//!
//! [`fpd_family`] computes the full report for a named family instance:
//!
//! ```
//! use fpd::{fpd_family, FamilySpec, Mode, DEFAULT_TOL};
//!
//! // Two-vertex cycle with one loop at each vertex: fpd = 2, exactly.
//! let report = fpd_family(&FamilySpec::qnm(1, 1), Mode::Thin, DEFAULT_TOL)?;
//! assert_eq!(report.fpd.exact.unwrap().expression(), "2");
//! assert!(report.closed_form.unwrap().matches);
//! # Ok::<(), fpd::Error>(())
//! ```
//!
//! [`fpd`](crate::fpd()) accepts any [`BoundAlgebraSpec`], built by hand or
//! parsed from a file with [`parse::parse_quiver`]:
//!
//! ```
//! use fpd::{fpd, parse::parse_quiver, Mode, DEFAULT_TOL};
//!
//! let spec = parse_quiver(
//!     "vertices: 2\narrow x: 1 -> 2\nloops 1: 1\nrelations: rad2\n",
//! )?;
//! let report = fpd(&spec, Mode::Thin, DEFAULT_TOL)?;
//! assert_eq!(report.fpd.exact.unwrap().expression(), "1");
//! # Ok::<(), fpd::Error>(())
//! ```
//!
//! The `fpd` binary wraps the same pipeline: `fpd compute <file>`,
//! `fpd family --type Qnm --loops 1,2`, and `fpd verify` for the built-in
//! verification ladder. Set `FPD_THREADS` to bound the worker pool.

pub mod bricks;
pub mod cli;
pub mod error;
pub mod families;
pub mod linalg;
pub mod oracle;
pub mod parse;
mod pool;
pub mod quiver;
pub mod rep;
pub mod report;
pub mod roots;
pub mod spectral;
pub mod verify;

pub use bricks::{enumerate_bricks_thin, Brick, BrickEnumeration, Completeness};
pub use error::{Error, Result};
pub use families::{generate_family, FamilyKind, FamilySpec};
pub use oracle::enumerate_bricks_oracle;
pub use quiver::{opposite, strip_loops, Arrow, BoundAlgebraSpec, Quiver};
pub use report::{
    closed_form_fpd, fpd, fpd_family, FpdN, FpdReport, Mode, CLOSED_FORM_TOL, DEFAULT_TOL,
};
pub use spectral::{max_radius, spectral_radius, AlgebraicValue, SpectralRadius};
