//! Skew spectra of oriented graphs.
//!
//! A graph orientation assigns each edge a direction, encoded here as a
//! `+`/`-` sign per canonical edge; its skew adjacency matrix S is the
//! skew-symmetric {0, 1, -1} matrix with S[u][v] = 1 exactly when the arc
//! runs u -> v. This crate computes exact skew characteristic polynomials
//! and matching polynomials, expands characteristic coefficients through
//! vertex-disjoint covers of edges and even cycles, enumerates orientations
//! up to switching equivalence, maximizes spectral radii over switching
//! classes, and classifies whole graph6 corpora.

pub mod census;
pub mod covers;
pub mod error;
pub mod exactpoly;
pub mod format;
pub mod graph;
pub mod orientation;
pub mod spectra;

pub use error::{Error, Result};
pub use exactpoly::IntPoly;
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use graph::{Cycle, Family, Graph};
pub use orientation::{Orientation, Sign, SkewMatrix, Switching};

/// Formats a float with the given number of significant digits in plain
/// decimal notation (the fixed output format for radii).
pub fn format_sig(v: f64, sig: usize) -> String {
    assert!(sig > 0);
    if v == 0.0 || !v.is_finite() {
        return format!("{:.*}", sig - 1, v.abs());
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}
