//! Covers: vertex-disjoint collections of edges and even cycles covering a
//! prescribed number of vertices, their routing signs, and the resulting
//! expansion of skew characteristic coefficients. The expansion is the
//! independent oracle against the determinant-based characteristic
//! polynomial: `s_k = m_k + sum over cycle-containing covers of
//! (-1)^(c+) 2^c`, where `c+` counts positively routed cycles.

use num::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};
use crate::orientation::{theorem1_orientation, Orientation, Sign};

/// A cover: vertex-disjoint edges and even cycles covering `covered`
/// vertices in the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    edges: Vec<(usize, usize)>,
    cycles: Vec<Cycle>,
    covered: usize,
}

impl Cover {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn covered(&self) -> usize {
        self.covered
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

/// All covers of exactly `k` vertices, each once, in deterministic order:
/// backtracking over a candidate list holding the edges in canonical order
/// followed by the even cycles in canonical order.
pub fn enumerate_covers(g: &Graph, k: usize) -> Result<Vec<Cover>> {
    if k % 2 == 1 {
        return Err(Error::Domain(format!("covers need even k, got {k}")));
    }
    if k > g.n() {
        return Err(Error::Domain(format!(
            "k = {k} exceeds the vertex count {}",
            g.n()
        )));
    }
    if g.n() > 128 {
        return Err(Error::TooLarge("cover enumeration handles n <= 128".into()));
    }

    enum Piece {
        Edge((usize, usize)),
        Cyc(Cycle),
    }
    let mask_of = |vs: &[usize]| -> u128 { vs.iter().fold(0u128, |m, &v| m | (1 << v)) };
    let mut pieces: Vec<(u128, usize, Piece)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (mask_of(&[u, v]), 2, Piece::Edge((u, v))))
        .collect();
    for c in g.enumerate_cycles() {
        if c.is_even() {
            pieces.push((mask_of(c.vertices()), c.len(), Piece::Cyc(c)));
        }
    }

    fn backtrack(
        pieces: &[(u128, usize, Piece)],
        start: usize,
        used: u128,
        covered: usize,
        k: usize,
        edges: &mut Vec<(usize, usize)>,
        cycles: &mut Vec<Cycle>,
        out: &mut Vec<Cover>,
    ) {
        if covered == k {
            out.push(Cover {
                edges: edges.clone(),
                cycles: cycles.clone(),
                covered,
            });
            return;
        }
        for i in start..pieces.len() {
            let (mask, size, piece) = &pieces[i];
            if covered + size > k {
                // edges precede cycles and cycles are sorted by length,
                // so nothing later fits either unless it is shorter --
                // which only happens at the edge/cycle boundary
                if matches!(piece, Piece::Cyc(_)) {
                    break;
                }
                continue;
            }
            if mask & used != 0 {
                continue;
            }
            match piece {
                Piece::Edge(e) => edges.push(*e),
                Piece::Cyc(c) => cycles.push(c.clone()),
            }
            backtrack(pieces, i + 1, used | mask, covered + size, k, edges, cycles, out);
            match piece {
                Piece::Edge(_) => {
                    edges.pop();
                }
                Piece::Cyc(_) => {
                    cycles.pop();
                }
            }
        }
    }

    let mut out = Vec::new();
    backtrack(
        &pieces,
        0,
        0,
        0,
        k,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

/// Product of sigma over the arcs of the dicycle obtained by traversing `c`
/// from its canonical start in canonical direction. Defined for even cycles
/// only; there the product does not depend on the traversal direction,
/// which is asserted.
pub fn cover_routing_sign(o: &Orientation, c: &Cycle) -> Result<Sign> {
    if !c.is_even() {
        return Err(Error::Domain(
            "routing sign is not well-defined for odd cycles".into(),
        ));
    }
    let sign = routed_sign(o, c.vertices());
    let mut reversed: Vec<usize> = c.vertices().to_vec();
    reversed[1..].reverse();
    assert_eq!(
        sign,
        routed_sign(o, &reversed),
        "even-cycle routing sign must be reversal-invariant"
    );
    Ok(sign)
}

fn routed_sign(o: &Orientation, vs: &[usize]) -> Sign {
    let l = vs.len();
    (0..l).fold(Sign::Plus, |acc, i| {
        acc * o
            .arc_sign(vs[i], vs[(i + 1) % l])
            .expect("cycle edge present in host graph")
    })
}

/// `(-1)^(c+) * 2^c` for a cover: 1 when the cover has no cycles.
pub fn cover_term(o: &Orientation, u: &Cover) -> i64 {
    let c_plus = u
        .cycles()
        .iter()
        .filter(|c| cover_routing_sign(o, c).expect("covers hold even cycles") == Sign::Plus)
        .count();
    let term = 1i64 << u.cycle_count();
    if c_plus % 2 == 0 {
        term
    } else {
        -term
    }
}

/// Coefficient of `x^(n-k)` in the skew characteristic polynomial,
/// computed purely from covers: zero for odd k, otherwise the number of
/// cycle-free covers (the matching count m_k) plus the signed cycle terms.
pub fn coefficient_via_covers(o: &Orientation, k: usize) -> BigInt {
    let g = o.graph();
    if k % 2 == 1 || k > g.n() {
        return BigInt::from(0);
    }
    let covers = enumerate_covers(g, k).expect("k validated even and in range");
    let mut total: i128 = 0;
    for u in &covers {
        total += if u.cycle_count() == 0 {
            1
        } else {
            i128::from(cover_term(o, u))
        };
    }
    BigInt::from(total)
}

/// Census of the cancellation behind the `theorem1` family: for even k,
/// the cycle-containing covers split into those using the first cycle and
/// those using the second, the two sets are equinumerous, and their signed
/// terms sum to zero under the family's defining orientation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CancellationReport {
    pub m: usize,
    pub k: usize,
    pub count1: u64,
    pub count2: u64,
    pub sum: i64,
}

/// Builds `theorem1_orientation(m)` and reports the cover counts and the
/// signed cycle sum for one even k with `2m <= k <= 4m - 2`.
pub fn verify_theorem1_cancellation(m: usize, k: usize) -> Result<CancellationReport> {
    if m < 2 {
        return Err(Error::InvalidFamily("theorem1 needs m >= 2".into()));
    }
    if k % 2 == 1 || k < 2 * m || k > 4 * m - 2 {
        return Err(Error::Domain(format!(
            "k must be even with {} <= k <= {}, got {k}",
            2 * m,
            4 * m - 2
        )));
    }
    let o = theorem1_orientation(m)?;
    let g = o.graph();
    let c1: Vec<usize> = (0..2 * m).collect();
    let mut c2: Vec<usize> = vec![0];
    c2.extend(2 * m..4 * m - 1);
    let c1 = Cycle::new(g, &c1)?;
    let c2 = Cycle::new(g, &c2)?;

    let mut count1 = 0u64;
    let mut count2 = 0u64;
    let mut sum = 0i64;
    for u in enumerate_covers(g, k)? {
        if u.cycle_count() == 0 {
            continue;
        }
        if u.cycles().contains(&c1) {
            count1 += 1;
        }
        if u.cycles().contains(&c2) {
            count2 += 1;
        }
        sum += cover_term(&o, &u);
    }
    Ok(CancellationReport {
        m,
        k,
        count1,
        count2,
        sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn c4() -> Graph {
        Family::Cycle(4).generate().unwrap()
    }

    #[test]
    fn covers_of_c4() {
        let covers = enumerate_covers(&c4(), 4).unwrap();
        assert_eq!(covers.len(), 3);
        assert_eq!(covers[0].edges(), &[(0, 1), (2, 3)]);
        assert_eq!(covers[1].edges(), &[(0, 3), (1, 2)]);
        assert_eq!(covers[2].cycle_count(), 1);
        assert_eq!(enumerate_covers(&c4(), 0).unwrap().len(), 1);
        assert!(enumerate_covers(&c4(), 3).is_err());
        assert!(enumerate_covers(&c4(), 6).is_err());
    }

    #[test]
    fn covers_of_trees_are_matchings() {
        let p5 = Family::Path(5).generate().unwrap();
        for k in [0usize, 2, 4] {
            let covers = enumerate_covers(&p5, k).unwrap();
            assert!(covers.iter().all(|u| u.cycle_count() == 0));
            assert!(covers.iter().all(|u| u.edges().len() == k / 2));
        }
    }

    #[test]
    fn two_vertex_covers_are_single_edges() {
        let t = Family::Theorem1(2).generate().unwrap();
        let covers = enumerate_covers(&t, 2).unwrap();
        assert_eq!(covers.len(), 8);
    }

    #[test]
    fn routing_signs_of_theorem1_cycles() {
        let o = theorem1_orientation(2).unwrap();
        let g = o.graph();
        let c1 = Cycle::new(g, &[0, 1, 2, 3]).unwrap();
        let c2 = Cycle::new(g, &[0, 4, 5, 6]).unwrap();
        assert_eq!(cover_routing_sign(&o, &c1).unwrap(), Sign::Plus);
        assert_eq!(cover_routing_sign(&o, &c2).unwrap(), Sign::Minus);
    }

    #[test]
    fn flipping_one_edge_flips_the_routing_sign() {
        let g = c4();
        let cyc = Cycle::new(&g, &[0, 1, 2, 3]).unwrap();
        let o = Orientation::parse(&g, "++++").unwrap();
        let base = cover_routing_sign(&o, &cyc).unwrap();
        for i in 0..4 {
            let mut text: Vec<char> = "++++".chars().collect();
            text[i] = '-';
            let flipped = Orientation::parse(&g, &text.iter().collect::<String>()).unwrap();
            assert_eq!(cover_routing_sign(&flipped, &cyc).unwrap(), base.flip());
        }
    }

    #[test]
    fn routing_sign_rejects_odd_cycles() {
        let c3 = Family::Cycle(3).generate().unwrap();
        let cyc = Cycle::new(&c3, &[0, 1, 2]).unwrap();
        let o = Orientation::all_plus(&c3);
        assert!(cover_routing_sign(&o, &cyc).is_err());
    }

    #[test]
    fn cover_terms() {
        let g = c4();
        let o = Orientation::parse(&g, "+++-").unwrap(); // positive routing
        let covers = enumerate_covers(&g, 4).unwrap();
        assert_eq!(cover_term(&o, &covers[0]), 1); // cycle-free
        assert_eq!(cover_term(&o, &covers[2]), -2); // single positive cycle

        // two disjoint negatively routed 4-cycles: (-1)^0 * 2^2 = 4
        let twin = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
            ],
        )
        .unwrap();
        let o = Orientation::all_plus(&twin);
        let both = enumerate_covers(&twin, 8)
            .unwrap()
            .into_iter()
            .find(|u| u.cycle_count() == 2)
            .unwrap();
        assert_eq!(cover_term(&o, &both), 4);
    }

    #[test]
    fn coefficient_via_covers_examples() {
        let g = c4();
        let plus = Orientation::parse(&g, "+++-").unwrap();
        assert_eq!(coefficient_via_covers(&plus, 4), BigInt::from(0));
        let minus = Orientation::parse(&g, "++++").unwrap();
        assert_eq!(coefficient_via_covers(&minus, 4), BigInt::from(4));

        let o = theorem1_orientation(2).unwrap();
        assert_eq!(coefficient_via_covers(&o, 4), BigInt::from(16));
        assert_eq!(coefficient_via_covers(&o, 3), BigInt::from(0));
        assert_eq!(coefficient_via_covers(&o, 5), BigInt::from(0));
    }

    #[test]
    fn cancellation_reports() {
        let r = verify_theorem1_cancellation(2, 4).unwrap();
        assert_eq!((r.count1, r.count2, r.sum), (1, 1, 0));
        let r = verify_theorem1_cancellation(2, 6).unwrap();
        assert_eq!((r.count1, r.count2, r.sum), (2, 2, 0));
        let r = verify_theorem1_cancellation(3, 8).unwrap();
        assert_eq!(r.count1, r.count2);
        assert_eq!(r.sum, 0);

        assert!(verify_theorem1_cancellation(1, 4).is_err());
        assert!(verify_theorem1_cancellation(2, 5).is_err());
        assert!(verify_theorem1_cancellation(2, 2).is_err());
        assert!(verify_theorem1_cancellation(2, 8).is_err());
    }

    #[test]
    fn odd_cycle_graphs_have_no_cycle_covers() {
        let bow = Family::BowtieOdd(3).generate().unwrap();
        for k in [0usize, 2, 4] {
            let covers = enumerate_covers(&bow, k).unwrap();
            assert!(covers.iter().all(|u| u.cycle_count() == 0));
        }
    }
}
