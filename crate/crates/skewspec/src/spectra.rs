//! Floating-point spectral radii: rho(S) for skew matrices via a cyclic
//! Jacobi eigensolver on -S^2, rho(A) for adjacency matrices via shifted
//! power iteration, maximization over switching classes, and the extremal
//! bound checks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::orientation::{switching_class_representatives, Orientation, SkewMatrix};

/// Off-diagonal Frobenius-norm threshold for the Jacobi sweeps.
pub const TOL_SOLVER: f64 = 1e-12;
/// Grouping tolerance for distinctness in a radius profile.
pub const TOL_GROUP: f64 = 1e-8;
/// Strictness margin for monotonicity comparisons.
pub const TOL_STRICT: f64 = 1e-9;

const MAX_JACOBI_SWEEPS: usize = 100;
const MAX_POWER_ITERS: usize = 1_000_000;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, run until
/// the off-diagonal Frobenius norm drops to `tol`. Returned ascending.
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    if n <= 1 {
        return Ok(a.iter().enumerate().map(|(i, row)| row[i]).collect());
    }
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += 2.0 * a[i][j] * a[i][j];
            }
        }
        if off.sqrt() <= tol {
            let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
            return Ok(eig);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp - s * (akq + tau * akp);
                    a[p][k] = a[k][p];
                    a[k][q] = akq + s * (akp - tau * akq);
                    a[q][k] = a[k][q];
                }
            }
        }
    }
    Err(Error::NoConvergence(format!(
        "Jacobi did not reach tol {tol} in {MAX_JACOBI_SWEEPS} sweeps"
    )))
}

/// Spectral radius of a skew-symmetric matrix: sqrt of the largest
/// eigenvalue of the positive semidefinite matrix -S^2.
pub fn spectral_radius_skew(s: &SkewMatrix, tol: f64) -> Result<f64> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = s.n();
    if n == 0 {
        return Ok(0.0);
    }
    let b: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = 0i32;
                    for k in 0..n {
                        acc -= i32::from(s.get(i, k)) * i32::from(s.get(k, j));
                    }
                    f64::from(acc)
                })
                .collect()
        })
        .collect();
    let eig = jacobi_eigenvalues(b, tol)?;
    let top = *eig.last().expect("n >= 1");
    assert!(top >= -1e-9, "-S^2 must be positive semidefinite, got {top}");
    Ok(top.max(0.0).sqrt())
}

/// Largest adjacency eigenvalue of a connected graph by power iteration on
/// `A + max_degree * I` (the shift makes the matrix primitive, defeating
/// bipartite periodicity). Converges when successive Rayleigh quotients
/// differ by at most `tol`.
pub fn spectral_radius_adjacency(g: &Graph, tol: f64) -> Result<f64> {
    assert!(tol > 0.0, "tolerance must be positive");
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if g.edge_count() == 0 {
        return Ok(0.0);
    }
    let shift = g.max_degree() as f64;
    let mut b = vec![vec![0.0f64; n]; n];
    for &(u, v) in g.edges() {
        b[u][v] = 1.0;
        b[v][u] = 1.0;
    }
    for (i, row) in b.iter_mut().enumerate() {
        row[i] += shift;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut prev = f64::INFINITY;
    for _ in 0..MAX_POWER_ITERS {
        let y: Vec<f64> = b
            .iter()
            .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();
        let rayleigh: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (rayleigh - prev).abs() <= tol {
            return Ok(rayleigh - shift);
        }
        prev = rayleigh;
    }
    Err(Error::NoConvergence(format!(
        "power iteration did not reach tol {tol} in {MAX_POWER_ITERS} iterations"
    )))
}

/// Largest adjacency eigenvalue taken as the maximum over connected
/// components (for batch callers that meet disconnected inputs).
pub fn spectral_radius_adjacency_components(g: &Graph, tol: f64) -> Result<f64> {
    let mut best: f64 = 0.0;
    for comp in g.components() {
        let sub = g.induced(&comp)?;
        best = best.max(spectral_radius_adjacency(&sub, tol)?);
    }
    Ok(best)
}

/// Maximum skew spectral radius over connected components.
pub fn max_skew_radius_components(g: &Graph) -> Result<f64> {
    let mut best: f64 = 0.0;
    for comp in g.components() {
        let sub = g.induced(&comp)?;
        best = best.max(max_skew_spectral_radius(&sub)?.rho_max_skew);
    }
    Ok(best)
}

/// Spectral radii of one graph: the adjacency radius, the maximum skew
/// radius over switching classes, the orientation attaining it, and the
/// profile of distinct radii at the grouping tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub rho_adjacency: f64,
    pub rho_max_skew: f64,
    pub argmax_orientation: Orientation,
    pub rho_profile: Vec<f64>,
    pub tol_group: f64,
    pub tol_solver: f64,
}

/// Evaluates rho over all switching-class representatives of a connected
/// graph (switching preserves the spectrum, so classes suffice) with the
/// default tolerances. Guarded at `m - n + 1 <= 20`.
pub fn max_skew_spectral_radius(g: &Graph) -> Result<SpectralReport> {
    max_skew_spectral_radius_with(g, TOL_GROUP, TOL_SOLVER)
}

pub fn max_skew_spectral_radius_with(
    g: &Graph,
    tol_group: f64,
    tol_solver: f64,
) -> Result<SpectralReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cycle_rank = g.edge_count() + 1 - g.n().max(1);
    if cycle_rank > 20 {
        return Err(Error::TooLarge(format!(
            "cycle rank {cycle_rank} exceeds the limit of 20"
        )));
    }
    let mut values = Vec::new();
    let mut best: Option<(f64, Orientation)> = None;
    for o in switching_class_representatives(g)? {
        let rho = spectral_radius_skew(&o.skew_matrix(), tol_solver)?;
        if best.as_ref().is_none_or(|(r, _)| rho > *r) {
            best = Some((rho, o.clone()));
        }
        values.push(rho);
    }
    let (rho_max_skew, argmax_orientation) = best.expect("at least one representative");
    values.sort_by(|x, y| x.partial_cmp(y).expect("finite radii"));
    let mut rho_profile: Vec<f64> = Vec::new();
    for v in values {
        match rho_profile.last_mut() {
            Some(last) if v - *last <= tol_group => *last = v,
            _ => rho_profile.push(v),
        }
    }
    let rho_adjacency = spectral_radius_adjacency(g, tol_solver)?;
    Ok(SpectralReport {
        rho_adjacency,
        rho_max_skew,
        argmax_orientation,
        rho_profile,
        tol_group,
        tol_solver,
    })
}

/// True iff the maximum skew radius of a connected bipartite graph agrees
/// with its adjacency radius within `tol`.
pub fn check_bipartite_radius_equality(g: &Graph, tol: f64) -> Result<bool> {
    if g.is_bipartite().is_none() {
        return Err(Error::NotBipartite);
    }
    let report = max_skew_spectral_radius(g)?;
    Ok((report.rho_max_skew - report.rho_adjacency).abs() <= tol)
}

/// True iff every switching class of a connected graph has the same skew
/// radius at the grouping tolerance.
pub fn check_radius_constant(g: &Graph, tol_group: f64) -> Result<bool> {
    let report = max_skew_spectral_radius_with(g, tol_group, TOL_SOLVER)?;
    Ok(report.rho_profile.len() == 1)
}

/// Extremal bound report. `upper_*` fields apply only to bipartite graphs
/// (where `rho_s <= sqrt(floor(n/2) * ceil(n/2))`, tight exactly for the
/// balanced complete bipartite graph) and are `None` otherwise. The lower
/// bound `rho_s >= rho(P_n)` applies to every connected graph and is tight
/// exactly for the path.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub bipartite: bool,
    pub rho_s: f64,
    pub upper_bound: Option<f64>,
    pub upper_ok: Option<bool>,
    pub upper_tight: Option<bool>,
    pub lower_bound: f64,
    pub lower_ok: bool,
    pub lower_tight: bool,
}

pub fn check_extremal_bounds(g: &Graph, tol: f64) -> Result<BoundsReport> {
    let n = g.n();
    let report = max_skew_spectral_radius(g)?;
    let rho_s = report.rho_max_skew;
    let bipartite = g.is_bipartite().is_some();
    let (upper_bound, upper_ok, upper_tight) = if bipartite {
        let bound = (((n / 2) * n.div_ceil(2)) as f64).sqrt();
        (
            Some(bound),
            Some(rho_s <= bound + tol),
            Some((rho_s - bound).abs() <= tol),
        )
    } else {
        (None, None, None)
    };
    let path = Family::Path(n).generate()?;
    let lower_bound = spectral_radius_adjacency(&path, TOL_SOLVER)?;
    Ok(BoundsReport {
        n,
        bipartite,
        rho_s,
        upper_bound,
        upper_ok,
        upper_tight,
        lower_bound,
        lower_ok: rho_s >= lower_bound - tol,
        lower_tight: (rho_s - lower_bound).abs() <= tol,
    })
}

/// True iff deleting `e` strictly decreases the maximum skew radius (by
/// more than the strictness margin). Both `g` and `g - e` must be
/// connected.
pub fn check_edge_monotonicity(g: &Graph, e: (usize, usize)) -> Result<bool> {
    let smaller = g.delete_edge(e.0, e.1)?;
    if !smaller.is_connected() {
        return Err(Error::Disconnected);
    }
    let with_edge = max_skew_spectral_radius(g)?.rho_max_skew;
    let without = max_skew_spectral_radius(&smaller)?.rho_max_skew;
    Ok(with_edge > without + TOL_STRICT)
}
