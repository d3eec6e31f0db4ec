//! Shared test support: isomorphism-free graph catalogs (with frozen
//! cardinalities), brute-force oracles independent of the library's
//! production paths, and a switching-equivalence decider.

#![allow(dead_code)]

use std::sync::OnceLock;

use num::BigInt;
use skewspec::graph::Graph;
use skewspec::orientation::{Orientation, Switching};
use skewspec::IntPoly;

/// Known catalog cardinalities, index = vertex count.
pub const ALL_GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 1, 2, 6, 21, 112, 853];
pub const CONNECTED_BIPARTITE_COUNTS: [usize; 8] = [1, 1, 1, 1, 3, 5, 17, 44];

fn edge_rank(u: usize, v: usize, n: usize) -> usize {
    debug_assert!(u < v && v < n);
    // canonical lex order (0,1), (0,2), ..., (0,n-1), (1,2), ...
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(items, k - 1, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(&mut items, n, &mut out);
    out
}

/// For each permutation of `n` vertices, the induced permutation of edge
/// slots.
fn edge_tables(n: usize) -> Vec<Vec<u16>> {
    let pairs = edge_pairs(n);
    permutations(n)
        .into_iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    edge_rank(a, b, n) as u16
                })
                .collect()
        })
        .collect()
}

fn canonical_mask(mask: u32, tables: &[Vec<u16>]) -> u32 {
    let mut best = u32::MAX;
    for t in tables {
        let mut m = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            m |= 1 << t[e];
            rest &= rest - 1;
        }
        best = best.min(m);
    }
    best
}

fn masks_for(n: usize) -> Vec<u32> {
    if n == 0 {
        return vec![0];
    }
    if n == 1 {
        return vec![0];
    }
    let smaller = masks_for(n - 1);
    let old_pairs = edge_pairs(n - 1);
    let embed: Vec<u16> = old_pairs
        .iter()
        .map(|&(u, v)| edge_rank(u, v, n) as u16)
        .collect();
    let tables = edge_tables(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &base in &smaller {
        let mut embedded = 0u32;
        let mut rest = base;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            embedded |= 1 << embed[e];
            rest &= rest - 1;
        }
        for nb in 0u32..(1 << (n - 1)) {
            let mut mask = embedded;
            for i in 0..n - 1 {
                if (nb >> i) & 1 == 1 {
                    mask |= 1 << edge_rank(i, n - 1, n);
                }
            }
            let canon = canonical_mask(mask, &tables);
            if seen.insert(canon) {
                out.push(canon);
            }
        }
    }
    out.sort_unstable();
    out
}

fn graph_from_mask(mask: u32, n: usize) -> Graph {
    let pairs = edge_pairs(n);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(e, _)| (mask >> e) & 1 == 1)
        .map(|(_, &p)| p);
    Graph::new(n, edges).expect("mask edges are valid")
}

static CATALOGS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();

/// All graphs on exactly `n` vertices up to isomorphism (n <= 7).
pub fn all_graphs(n: usize) -> &'static [Graph] {
    assert!(n <= 7, "catalogs are built for n <= 7");
    let catalogs = CATALOGS.get_or_init(|| {
        (0..=7)
            .map(|k| {
                let graphs: Vec<Graph> =
                    masks_for(k).into_iter().map(|m| graph_from_mask(m, k)).collect();
                assert_eq!(
                    graphs.len(),
                    ALL_GRAPH_COUNTS[k],
                    "catalog cardinality mismatch at n = {k}"
                );
                graphs
            })
            .collect()
    });
    &catalogs[n]
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<&'static Graph> {
    let out: Vec<&Graph> = all_graphs(n).iter().filter(|g| g.is_connected()).collect();
    assert_eq!(out.len(), CONNECTED_COUNTS[n]);
    out
}

/// Connected bipartite graphs on exactly `n` vertices up to isomorphism.
pub fn connected_bipartite_graphs(n: usize) -> Vec<&'static Graph> {
    let out: Vec<&Graph> = all_graphs(n)
        .iter()
        .filter(|g| g.is_connected() && g.is_bipartite().is_some())
        .collect();
    assert_eq!(out.len(), CONNECTED_BIPARTITE_COUNTS[n]);
    out
}

/// Matching counts by direct backtracking over independent edge subsets.
/// Deliberately unrelated to the library's deletion recursion.
pub fn brute_force_matching_counts(g: &Graph) -> Vec<BigInt> {
    fn rec(edges: &[(usize, usize)], start: usize, used: u64, size: usize, acc: &mut [u64]) {
        acc[size] += 1;
        for i in start..edges.len() {
            let (u, v) = edges[i];
            let mask = (1u64 << u) | (1u64 << v);
            if used & mask == 0 {
                rec(edges, i + 1, used | mask, size + 1, acc);
            }
        }
    }
    let mut acc = vec![0u64; g.n() / 2 + 1];
    rec(g.edges(), 0, 0, 0, &mut acc);
    let mut counts = vec![BigInt::from(0); g.n() + 1];
    for (size, c) in acc.iter().enumerate() {
        counts[2 * size] = BigInt::from(*c);
    }
    counts
}

/// det(xI - S) by Leibniz expansion over all permutations. Usable up to
/// n = 7 or so; independent of the Faddeev-LeVerrier production path.
pub fn charpoly_bruteforce(s: &skewspec::SkewMatrix) -> IntPoly {
    let n = s.n();
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for p in permutations(n) {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut fixed = 0;
        let mut prod: i64 = if inversions % 2 == 0 { 1 } else { -1 };
        for (i, &pi) in p.iter().enumerate() {
            if pi == i {
                fixed += 1; // contributes a factor of x
            } else {
                prod *= -i64::from(s.get(i, pi));
                if prod == 0 {
                    break;
                }
            }
        }
        if prod != 0 {
            coeffs[fixed] += prod;
        }
    }
    if n == 0 {
        coeffs[0] = BigInt::from(1);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Largest eigenvalue-square of a skew matrix from its exact characteristic
/// polynomial: the largest real root of q(y) = prod (y - mu_i^2), found by
/// Newton iteration from above (all roots are real and nonnegative, so the
/// iteration decreases monotonically to the largest root). Returns the
/// radius sqrt(root).
pub fn radius_from_charpoly(p: &IntPoly) -> f64 {
    let n = match p.degree() {
        None | Some(0) => return 0.0,
        Some(d) => d,
    };
    let r = n / 2;
    // q_j = (-1)^(r-j) * s_{2(r-j)} where s_k is the coefficient of x^(n-k)
    let q: Vec<f64> = (0..=r)
        .map(|j| {
            let k = 2 * (r - j);
            let s: f64 = big_to_f64(&p.coeff(n - k));
            if (r - j) % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    if r == 0 {
        return 0.0;
    }
    let eval = |y: f64| -> (f64, f64) {
        let mut val = 0.0;
        let mut der = 0.0;
        for j in (0..=r).rev() {
            der = der * y + val;
            val = val * y + q[j];
        }
        (val, der)
    };
    let mut y = 1.0 + q.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    for _ in 0..10_000 {
        let (val, der) = eval(y);
        if der == 0.0 {
            break;
        }
        let step = val / der;
        y -= step;
        if step.abs() <= 1e-13 * y.abs().max(1.0) {
            break;
        }
    }
    y.max(0.0).sqrt()
}

fn big_to_f64(b: &BigInt) -> f64 {
    b.to_string().parse().expect("small integer")
}

/// Exhaustive switching-equivalence decision (2^n switchings).
pub fn switching_equivalent(a: &Orientation, b: &Orientation) -> bool {
    let n = a.graph().n();
    assert!(n <= 16);
    (0u64..(1 << n)).any(|bits| {
        let d = Switching::new((0..n).filter(|&v| (bits >> v) & 1 == 1));
        &a.apply_switching(&d) == b
    })
}

/// Horner evaluation of the polynomial coefficients as rounded evaluation
/// check helper.
pub fn poly_coeff_i64(p: &IntPoly, k: usize) -> i64 {
    p.coeff(k).to_string().parse().expect("coefficient fits i64")
}
