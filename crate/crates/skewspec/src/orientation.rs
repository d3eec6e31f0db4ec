//! Orientations of a graph, skew adjacency matrices, switching, and
//! enumeration of orientations exhaustively and up to switching
//! equivalence.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

/// Edge sign. `Plus` on canonical edge `(u, v)` with `u < v` means the arc
/// runs `u -> v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

/// Skew adjacency matrix: entries in `{-1, 0, 1}`, skew-symmetric, with
/// support exactly the edge set of the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SkewMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }
}

/// An orientation: one sign per canonical edge of the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    host: Arc<Graph>,
    signs: Vec<Sign>,
}

impl Orientation {
    pub fn new(host: Arc<Graph>, signs: Vec<Sign>) -> Result<Orientation> {
        if signs.len() != host.edge_count() {
            return Err(Error::InvalidOrientation(format!(
                "{} signs for {} edges",
                signs.len(),
                host.edge_count()
            )));
        }
        Ok(Orientation { host, signs })
    }

    /// All edges oriented from the lower endpoint to the higher one.
    pub fn all_plus(g: &Graph) -> Orientation {
        Orientation {
            signs: vec![Sign::Plus; g.edge_count()],
            host: Arc::new(g.clone()),
        }
    }

    /// Parses the `+`/`-` text form (one character per canonical edge).
    pub fn parse(g: &Graph, text: &str) -> Result<Orientation> {
        let signs: Vec<Sign> = text
            .chars()
            .map(|c| {
                Sign::from_char(c)
                    .ok_or_else(|| Error::InvalidOrientation(format!("bad character '{c}'")))
            })
            .collect::<Result<_>>()?;
        Orientation::new(Arc::new(g.clone()), signs)
    }

    /// The `+`/`-` text form.
    pub fn text(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    pub fn graph(&self) -> &Graph {
        &self.host
    }

    pub fn host(&self) -> &Arc<Graph> {
        &self.host
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// sigma(from, to): the sign of the arc as traversed, or `None` if the
    /// pair is not an edge.
    pub fn arc_sign(&self, from: usize, to: usize) -> Option<Sign> {
        let idx = self.host.edge_index(from, to)?;
        let stored = self.signs[idx];
        Some(if from < to { stored } else { stored.flip() })
    }

    pub fn skew_matrix(&self) -> SkewMatrix {
        let n = self.host.n();
        let mut entries = vec![0i8; n * n];
        for (idx, &(u, v)) in self.host.edges().iter().enumerate() {
            let s = self.signs[idx].value() as i8;
            entries[u * n + v] = s;
            entries[v * n + u] = -s;
        }
        SkewMatrix { n, entries }
    }

    /// Conjugation by the +/-1 diagonal matrix of `d`, realized edge-wise:
    /// the sign of an edge flips iff exactly one endpoint is in `d`.
    pub fn apply_switching(&self, d: &Switching) -> Orientation {
        debug_assert!(d.vertices().all(|v| v < self.host.n()));
        let signs = self
            .host
            .edges()
            .iter()
            .zip(&self.signs)
            .map(|(&(u, v), &s)| {
                if d.contains(u) != d.contains(v) {
                    s.flip()
                } else {
                    s
                }
            })
            .collect();
        Orientation {
            host: Arc::clone(&self.host),
            signs,
        }
    }

    /// Negates every sign (maps S to -S).
    pub fn reverse(&self) -> Orientation {
        Orientation {
            host: Arc::clone(&self.host),
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.text())
    }
}

/// Vertex subset defining a switching (the -1 entries of the diagonal).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Switching {
    flipped: BTreeSet<usize>,
}

impl Switching {
    pub fn new(flipped: impl IntoIterator<Item = usize>) -> Switching {
        Switching {
            flipped: flipped.into_iter().collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.flipped.contains(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.flipped.iter().copied()
    }
}

/// All `2^m` orientations of `g` in binary-counter order over the canonical
/// edges (`+` is bit 0, edge index = bit index), ascending. The first item
/// is the all-plus orientation. Guarded at `m <= 30`.
pub fn enumerate_orientations(g: &Graph) -> Result<Orientations> {
    let m = g.edge_count();
    if m > 30 {
        return Err(Error::TooLarge(format!(
            "refusing to enumerate 2^{m} orientations (limit m <= 30)"
        )));
    }
    Ok(Orientations {
        host: Arc::new(g.clone()),
        next: 0,
        total: 1u64 << m,
    })
}

pub struct Orientations {
    host: Arc<Graph>,
    next: u64,
    total: u64,
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next == self.total {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        let signs = (0..self.host.edge_count())
            .map(|j| {
                if (bits >> j) & 1 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        Some(Orientation {
            host: Arc::clone(&self.host),
            signs,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Orientations {}

/// One orientation per switching class of a connected graph: the edges of a
/// breadth-first spanning tree rooted at vertex 0 (neighbors visited in
/// ascending order) are fixed to `+`, and the `m - n + 1` co-tree edges run
/// through all sign patterns in binary-counter order. The `2^(m-n+1)`
/// results are pairwise switching-inequivalent and cover every class.
pub fn switching_class_representatives(g: &Graph) -> Result<ClassRepresentatives> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = g.adjacency_lists();
    let mut in_tree = vec![false; g.edge_count()];
    if g.n() > 0 {
        let mut seen = vec![false; g.n()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[g.edge_index(v, w).expect("adjacency edge")] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let cotree: Vec<usize> = (0..g.edge_count()).filter(|&i| !in_tree[i]).collect();
    if cotree.len() > 62 {
        return Err(Error::TooLarge(format!(
            "2^{} switching classes will not fit a u64 counter",
            cotree.len()
        )));
    }
    Ok(ClassRepresentatives {
        host: Arc::new(g.clone()),
        cotree,
        next: 0,
    })
}

pub struct ClassRepresentatives {
    host: Arc<Graph>,
    cotree: Vec<usize>,
    next: u64,
}

impl Iterator for ClassRepresentatives {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next == 1u64 << self.cotree.len() {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        let mut signs = vec![Sign::Plus; self.host.edge_count()];
        for (j, &e) in self.cotree.iter().enumerate() {
            if (bits >> j) & 1 == 1 {
                signs[e] = Sign::Minus;
            }
        }
        Some(Orientation {
            host: Arc::clone(&self.host),
            signs,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = ((1u64 << self.cotree.len()) - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ClassRepresentatives {}

/// Orients every edge from `side_a` to `side_b`. After permuting vertices
/// so that `side_a` precedes `side_b`, the skew matrix has the block form
/// `[[0, B], [-B^T, 0]]` with `B` the bipartite adjacency block.
pub fn canonical_bipartite_orientation(
    g: &Graph,
    side_a: &[usize],
    side_b: &[usize],
) -> Result<Orientation> {
    let mut side = vec![None; g.n()];
    for &v in side_a {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v, g.n()));
        }
        side[v] = Some(true);
    }
    for &v in side_b {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v, g.n()));
        }
        if side[v].is_some() {
            return Err(Error::InvalidPartition(format!("vertex {v} on both sides")));
        }
        side[v] = Some(false);
    }
    if side.iter().any(Option::is_none) {
        return Err(Error::InvalidPartition("partition does not cover V".into()));
    }
    let signs = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if side[u] == side[v] {
                Err(Error::InvalidPartition(format!(
                    "edge ({u}, {v}) does not cross the partition"
                )))
            } else if side[u] == Some(true) {
                Ok(Sign::Plus)
            } else {
                Ok(Sign::Minus)
            }
        })
        .collect::<Result<_>>()?;
    Ok(Orientation {
        host: Arc::new(g.clone()),
        signs,
    })
}

/// The `theorem1,m` family together with its defining orientation: the
/// first cycle is routed positively and the second negatively. All first
/// cycle arcs run forward along `0 -> 1 -> ... -> 2m-1 -> 0`; the second
/// cycle uses the same forward pattern with the single edge
/// `(4m-3, 4m-2)` reversed.
pub fn theorem1_orientation(m: usize) -> Result<Orientation> {
    let g = Family::Theorem1(m).generate()?;
    let mut signs = vec![Sign::Plus; g.edge_count()];
    let mut set = |u: usize, v: usize, s: Sign| {
        signs[g.edge_index(u, v).expect("family edge")] = s;
    };
    set(0, 2 * m - 1, Sign::Minus); // closing arc (2m-1) -> 0
    set(4 * m - 3, 4 * m - 2, Sign::Minus); // reversed arc on the second cycle
    set(0, 4 * m - 2, Sign::Minus); // closing arc (4m-2) -> 0
    Ok(Orientation {
        host: Arc::new(g),
        signs,
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
    fn skew_matrix_follows_sign_convention() {
        // arcs 0->1->2->3 plus 0->3 stored as minus on (0,3)
        let o = Orientation::parse(&c4(), "+-++").unwrap();
        let s = o.skew_matrix();
        assert_eq!(s.get(0, 1), 1);
        assert_eq!(s.get(1, 0), -1);
        assert_eq!(s.get(3, 0), 1);
        assert_eq!(s.get(0, 3), -1);
        assert_eq!(s.get(0, 2), 0);
    }

    #[test]
    fn edgeless_gives_zero_matrix() {
        let g = Graph::edgeless(3);
        let s = Orientation::all_plus(&g).skew_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.get(i, j), 0);
            }
        }
    }

    #[test]
    fn skew_symmetry_with_support_exactly_e() {
        let g = Family::Theorem1(2).generate().unwrap();
        for o in enumerate_orientations(&g).unwrap().take(40) {
            let s = o.skew_matrix();
            for i in 0..g.n() {
                for j in 0..g.n() {
                    assert_eq!(s.get(i, j), -s.get(j, i));
                    assert_eq!(s.get(i, j) != 0, g.has_edge(i, j));
                }
            }
        }
    }

    #[test]
    fn switching_identity_cases() {
        let g = c4();
        let o = Orientation::parse(&g, "+-+-").unwrap();
        assert_eq!(o.apply_switching(&Switching::new([])), o);
        assert_eq!(o.apply_switching(&Switching::new(0..4)), o);
        let s = o.apply_switching(&Switching::new([0]));
        // edges (0,1) and (0,3) flip, (1,2) and (2,3) fixed
        assert_eq!(s.text(), "-++-");
    }

    #[test]
    fn reverse_is_involution_and_negates() {
        let g = Family::Path(4).generate().unwrap();
        let o = Orientation::parse(&g, "+-+").unwrap();
        assert_eq!(o.reverse().reverse(), o);
        let s = o.skew_matrix();
        let r = o.reverse().skew_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r.get(i, j), -s.get(i, j));
            }
        }
    }

    #[test]
    fn orientation_counter_order() {
        let one = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(enumerate_orientations(&one).unwrap().count(), 2);
        let all: Vec<String> = enumerate_orientations(&c4())
            .unwrap()
            .map(|o| o.text())
            .collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], "++++");
        assert_eq!(all[1], "-+++"); // bit 0 = first canonical edge
        assert_eq!(all[15], "----");
    }

    #[test]
    fn representative_counts() {
        let tree = Family::Path(5).generate().unwrap();
        let reps: Vec<_> = switching_class_representatives(&tree).unwrap().collect();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].text(), "++++");
        assert_eq!(switching_class_representatives(&c4()).unwrap().count(), 2);
        let t = Family::Theorem1(2).generate().unwrap();
        assert_eq!(switching_class_representatives(&t).unwrap().count(), 4);
        assert!(switching_class_representatives(&Graph::edgeless(2)).is_err());
    }

    #[test]
    fn bipartite_orientation_block_form() {
        // star K_{1,3}: all arcs out of the center
        let star = Family::CompleteBipartite(1, 3).generate().unwrap();
        let o = canonical_bipartite_orientation(&star, &[0], &[1, 2, 3]).unwrap();
        assert_eq!(o.text(), "+++");

        let o = canonical_bipartite_orientation(&c4(), &[0, 2], &[1, 3]).unwrap();
        // arcs 0->1, 0->3, 2->1, 2->3
        assert_eq!(o.arc_sign(0, 1), Some(Sign::Plus));
        assert_eq!(o.arc_sign(0, 3), Some(Sign::Plus));
        assert_eq!(o.arc_sign(2, 1), Some(Sign::Plus));
        assert_eq!(o.arc_sign(2, 3), Some(Sign::Plus));
        // block form after listing side_a first: rows {0,2} x cols {1,3} all +1
        let s = o.skew_matrix();
        for &i in &[0, 2] {
            for &j in &[1, 3] {
                assert_eq!(s.get(i, j), 1);
                assert_eq!(s.get(j, i), -1);
            }
        }

        assert!(canonical_bipartite_orientation(&c4(), &[0, 1], &[2, 3]).is_err());
        assert!(canonical_bipartite_orientation(&c4(), &[0], &[1, 3]).is_err());
        assert!(canonical_bipartite_orientation(&c4(), &[0, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn theorem1_orientation_matches_reference_figure() {
        let o = theorem1_orientation(2).unwrap();
        // canonical edges: (0,1) (0,3) (0,4) (0,6) (1,2) (2,3) (4,5) (5,6)
        assert_eq!(o.text(), "+-+-+++-");
        assert!(theorem1_orientation(1).is_err());
    }

    #[test]
    fn parse_and_text_round_trip() {
        let g = c4();
        let o = Orientation::parse(&g, "+-+-").unwrap();
        assert_eq!(o.text(), "+-+-");
        assert!(Orientation::parse(&g, "+-+").is_err());
        assert!(Orientation::parse(&g, "+-+x").is_err());
    }
}
