//! Batch classification over graph6 corpora: cospectrality classes, the
//! problem1 identity scan, the problem2 radius-constancy scan, and bound
//! verification, with a resumable JSON Lines sink.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{cospectrality_classes, holds_problem1_identity};
use crate::format::{parse_graph6, to_graph6};
use crate::graph::Graph;
use crate::orientation::switching_class_representatives;
use crate::spectra::{
    check_extremal_bounds, max_skew_radius_components, max_skew_spectral_radius,
    spectral_radius_adjacency_components, TOL_SOLVER, TOL_STRICT,
};

/// Which checks a census run performs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckSet {
    pub cospectral: bool,
    pub problem1: bool,
    pub problem2: bool,
    pub bounds: bool,
}

impl CheckSet {
    pub fn all() -> CheckSet {
        CheckSet {
            cospectral: true,
            problem1: true,
            problem2: true,
            bounds: true,
        }
    }

    /// Parses a comma-separated list of check names.
    pub fn parse(s: &str) -> Result<CheckSet> {
        let mut set = CheckSet::default();
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match name {
                "cospectral" => set.cospectral = true,
                "problem1" => set.problem1 = true,
                "problem2" => set.problem2 = true,
                "bounds" => set.bounds = true,
                "all" => set = CheckSet::all(),
                other => {
                    return Err(Error::Domain(format!("unknown check '{other}'")));
                }
            }
        }
        Ok(set)
    }
}

/// Per-graph classification result. Fields belonging to checks that were
/// not requested (or could not run) stay `null`; guard violations and
/// failed bound checks are named in `violations`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub odd_cycle: bool,
    pub cospectral_class_count: Option<u64>,
    pub problem1_witness: Option<String>,
    pub radius_constant: Option<bool>,
    pub rho_adjacency: Option<f64>,
    pub rho_max: Option<f64>,
    pub violations: Vec<String>,
}

/// Rounds to 12 significant digits so sinks are reproducible byte-for-byte.
pub fn sig12(v: f64) -> f64 {
    crate::format_sig(v, 12).parse().expect("formatted float")
}

/// Classifies one graph. Deterministic for a given graph and check set;
/// guard violations are recorded rather than returned as errors.
pub fn classify(g: &Graph, checks: &CheckSet) -> CensusRecord {
    let mut violations = Vec::new();
    let graph6 = match to_graph6(g) {
        Ok(s) => s,
        Err(e) => {
            violations.push(format!("graph6: {e}"));
            String::new()
        }
    };
    let connected = g.is_connected();
    let bipartite = g.is_bipartite().is_some();
    let odd_cycle = g.is_odd_cycle_graph();

    let mut record = CensusRecord {
        graph6,
        n: g.n(),
        m: g.edge_count(),
        connected,
        bipartite,
        odd_cycle,
        cospectral_class_count: None,
        problem1_witness: None,
        radius_constant: None,
        rho_adjacency: None,
        rho_max: None,
        violations: Vec::new(),
    };

    if checks.cospectral {
        match cospectrality_classes(g) {
            Ok(classes) => {
                let count = classes.len() as u64;
                assert!(
                    !odd_cycle || count == 1,
                    "odd-cycle graph {} produced {count} cospectrality classes",
                    record.graph6
                );
                record.cospectral_class_count = Some(count);
            }
            Err(e) => violations.push(format!("cospectral: {e}")),
        }
    }

    if checks.problem1 && !odd_cycle {
        match switching_class_representatives(g) {
            Ok(reps) => {
                record.problem1_witness = reps
                    .into_iter()
                    .find(holds_problem1_identity)
                    .map(|o| o.text());
            }
            Err(e) => violations.push(format!("problem1: {e}")),
        }
    }

    if checks.problem2 {
        match max_skew_spectral_radius(g) {
            Ok(rep) => {
                record.radius_constant = Some(rep.rho_profile.len() == 1);
                record.rho_adjacency = Some(sig12(rep.rho_adjacency));
                record.rho_max = Some(sig12(rep.rho_max_skew));
            }
            Err(e) => {
                violations.push(format!("problem2: {e}"));
                // still report radii, taken over components
                if let (Ok(ra), Ok(rm)) = (
                    spectral_radius_adjacency_components(g, TOL_SOLVER),
                    max_skew_radius_components(g),
                ) {
                    record.rho_adjacency = Some(sig12(ra));
                    record.rho_max = Some(sig12(rm));
                }
            }
        }
    }

    if checks.bounds {
        match check_extremal_bounds(g, TOL_STRICT) {
            Ok(rep) => {
                if rep.upper_ok == Some(false) {
                    violations.push("bounds: upper bound violated".into());
                }
                if !rep.lower_ok {
                    violations.push("bounds: lower bound violated".into());
                }
                if record.rho_max.is_none() {
                    record.rho_max = Some(sig12(rep.rho_s));
                }
            }
            Err(e) => violations.push(format!("bounds: {e}")),
        }
    }

    record.violations = violations;
    record
}

/// Counts over the records of one census run.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct CensusSummary {
    pub total: u64,
    pub parse_errors: u64,
    pub connected: u64,
    pub bipartite: u64,
    pub odd_cycle: u64,
    pub cospectral_one_class: u64,
    pub problem1_witnesses: u64,
    pub radius_constant: u64,
    pub problem2_candidates: u64,
    pub violations: u64,
}

impl CensusSummary {
    fn add(&mut self, r: &CensusRecord) {
        self.total += 1;
        if r.violations.iter().any(|v| v.starts_with("parse:")) {
            self.parse_errors += 1;
        }
        self.connected += u64::from(r.connected);
        self.bipartite += u64::from(r.bipartite);
        self.odd_cycle += u64::from(r.odd_cycle);
        self.cospectral_one_class += u64::from(r.cospectral_class_count == Some(1));
        self.problem1_witnesses += u64::from(r.problem1_witness.is_some());
        self.radius_constant += u64::from(r.radius_constant == Some(true));
        self.problem2_candidates += u64::from(r.radius_constant == Some(true) && !r.odd_cycle);
        self.violations += u64::from(!r.violations.is_empty());
    }
}

/// Reads a JSON Lines sink back into records (for resumption).
pub fn read_sink<R: BufRead>(reader: R) -> Result<Vec<CensusRecord>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line)?);
    }
    Ok(out)
}

/// Runs the census over a graph6 stream, one graph per line. Lines whose
/// graph6 key already appears in `existing` are skipped; new records are
/// written to `sink` in input order, one JSON object per line. The summary
/// covers every input line, resumed or fresh, so a rerun over a complete
/// sink reproduces the original summary. `threads` caps the worker pool
/// (`None` uses the default).
pub fn run_census<R: BufRead, W: Write>(
    input: R,
    checks: &CheckSet,
    existing: &[CensusRecord],
    sink: &mut W,
    threads: Option<usize>,
) -> Result<CensusSummary> {
    let seen: HashMap<&str, &CensusRecord> = existing
        .iter()
        .map(|r| (r.graph6.as_str(), r))
        .collect();

    let mut lines = Vec::new();
    for line in input.lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() {
            lines.push(line.to_string());
        }
    }

    enum Slot<'a> {
        Existing(&'a CensusRecord),
        Fresh(usize),
    }
    let mut slots = Vec::with_capacity(lines.len());
    let mut pending: Vec<&str> = Vec::new();
    for line in &lines {
        match seen.get(line.as_str()) {
            Some(r) => slots.push(Slot::Existing(r)),
            None => {
                slots.push(Slot::Fresh(pending.len()));
                pending.push(line);
            }
        }
    }

    let classify_line = |line: &str| -> CensusRecord {
        match parse_graph6(line) {
            Ok(g) => classify(&g, checks),
            Err(e) => CensusRecord {
                graph6: line.to_string(),
                n: 0,
                m: 0,
                connected: false,
                bipartite: false,
                odd_cycle: false,
                cospectral_class_count: None,
                problem1_witness: None,
                radius_constant: None,
                rho_adjacency: None,
                rho_max: None,
                violations: vec![format!("parse: {e}")],
            },
        }
    };

    let fresh: Vec<CensusRecord> = match threads {
        Some(1) => pending.iter().map(|l| classify_line(l)).collect(),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            pool.install(|| pending.par_iter().map(|l| classify_line(l)).collect())
        }
        None => pending.par_iter().map(|l| classify_line(l)).collect(),
    };

    for r in &fresh {
        serde_json::to_writer(&mut *sink, r)?;
        sink.write_all(b"\n")?;
    }
    sink.flush()?;

    let mut summary = CensusSummary::default();
    for slot in &slots {
        match slot {
            Slot::Existing(r) => summary.add(r),
            Slot::Fresh(i) => summary.add(&fresh[*i]),
        }
    }
    Ok(summary)
}
