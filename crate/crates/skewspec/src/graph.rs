//! Undirected simple graphs with a canonical edge order, the built-in graph
//! families, cycle enumeration, and structural predicates.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Simple undirected graph. Vertices are `0..n`; edges are stored as pairs
/// `(u, v)` with `u < v`, sorted lexicographically. The edge order is the
/// canonical order used everywhere else in the crate (orientations index
/// their signs by it).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order and edge order in
    /// the input are irrelevant; the result is always canonical. Loops,
    /// duplicate edges, and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        for &(u, v) in &es {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph { n, edges: es })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of edge `(u, v)` in the canonical order, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Removes one edge, keeping vertex labels.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let idx = self.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges })
    }

    /// Removes a vertex set and relabels the remaining vertices to
    /// `0..n'` preserving their relative order.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Graph> {
        let mut drop = vec![false; self.n];
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v, self.n));
            }
            drop[v] = true;
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !drop[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| !drop[u] && !drop[v])
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect();
        Ok(Graph { n: next, edges })
    }

    /// Subgraph induced by `keep`, relabelled order-preservingly.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut drop: Vec<usize> = (0..self.n).collect();
        drop.retain(|v| !keep.contains(v));
        self.delete_vertices(&drop)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.n.max(1)
    }

    /// 2-coloring if the graph is bipartite. Components are processed in
    /// ascending order of their smallest vertex; within each component the
    /// side containing that smallest vertex goes into the first set. Both
    /// sides are returned sorted.
    pub fn is_bipartite(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency_lists();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut first = Vec::new();
        let mut second = Vec::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(true);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        for v in 0..self.n {
            if color[v] == Some(true) {
                first.push(v);
            } else {
                second.push(v);
            }
        }
        Some((first, second))
    }

    /// True iff the graph has no cycle of even length. Decided from the
    /// block decomposition: every block must be a single edge or an odd
    /// cycle (a 2-connected block that is not a cycle always contains a
    /// theta subgraph, and a theta subgraph always contains an even cycle).
    pub fn is_odd_cycle_graph(&self) -> bool {
        for block in self.blocks() {
            if block.len() <= 1 {
                continue;
            }
            let mut vs: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            if block.len() != vs.len() || vs.len() % 2 == 0 {
                return false;
            }
        }
        true
    }

    /// Biconnected components as edge lists.
    fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        struct State {
            adj: Vec<Vec<usize>>,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            out: Vec<Vec<(usize, usize)>>,
        }
        fn dfs(s: &mut State, v: usize, parent: Option<usize>) {
            s.time += 1;
            s.disc[v] = s.time;
            s.low[v] = s.time;
            let mut parent_skipped = false;
            for i in 0..s.adj[v].len() {
                let w = s.adj[v][i];
                if Some(w) == parent && !parent_skipped {
                    parent_skipped = true;
                    continue;
                }
                if s.disc[w] == 0 {
                    s.stack.push((v, w));
                    dfs(s, w, Some(v));
                    s.low[v] = s.low[v].min(s.low[w]);
                    if s.low[w] >= s.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = s.stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        s.out.push(block);
                    }
                } else if s.disc[w] < s.disc[v] {
                    s.stack.push((v, w));
                    s.low[v] = s.low[v].min(s.disc[w]);
                }
            }
        }
        let mut s = State {
            adj: self.adjacency_lists(),
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..self.n {
            if s.disc[v] == 0 {
                dfs(&mut s, v, None);
            }
        }
        s.out
    }

    /// All distinct simple cycles, each once in canonical form, sorted by
    /// (length, vertex sequence). Backtracking rooted at the smallest cycle
    /// vertex; the traversal direction is fixed by requiring the second
    /// vertex to be smaller than the last.
    pub fn enumerate_cycles(&self) -> Vec<Cycle> {
        fn dfs(
            adj: &[Vec<usize>],
            root: usize,
            path: &mut Vec<usize>,
            on_path: &mut [bool],
            out: &mut Vec<Cycle>,
        ) {
            let current = *path.last().unwrap();
            for &w in &adj[current] {
                if w == root {
                    if path.len() >= 3 && path[1] < current {
                        out.push(Cycle { vertices: path.clone() });
                    }
                } else if w > root && !on_path[w] {
                    on_path[w] = true;
                    path.push(w);
                    dfs(adj, root, path, on_path, out);
                    path.pop();
                    on_path[w] = false;
                }
            }
        }
        let adj = self.adjacency_lists();
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n];
        for root in 0..self.n {
            let mut path = vec![root];
            on_path[root] = true;
            dfs(&adj, root, &mut path, &mut on_path, &mut out);
            on_path[root] = false;
        }
        out.sort_by(|a, b| {
            (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices))
        });
        out
    }
}

/// Simple cycle in canonical form: the smallest vertex first, followed by
/// its smaller cycle-neighbor. Unique per undirected cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates a vertex sequence against a host graph and canonicalizes
    /// it. Consecutive vertices (and last-first) must be adjacent and all
    /// vertices distinct.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Cycle> {
        let l = vertices.len();
        if l < 3 {
            return Err(Error::InvalidGraph(format!("cycle length {l} < 3")));
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("repeated vertex in cycle".into()));
        }
        for i in 0..l {
            let (u, v) = (vertices[i], vertices[(i + 1) % l]);
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        Ok(Cycle {
            vertices: canonicalize(vertices),
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_even(&self) -> bool {
        self.vertices.len() % 2 == 0
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

fn canonicalize(vertices: &[usize]) -> Vec<usize> {
    let l = vertices.len();
    let start = (0..l).min_by_key(|&i| vertices[i]).unwrap();
    let mut vs: Vec<usize> = (0..l).map(|i| vertices[(start + i) % l]).collect();
    if vs[l - 1] < vs[1] {
        vs[1..].reverse();
    }
    vs
}

/// Built-in graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path on n vertices (n >= 1).
    Path(usize),
    /// Cycle on n vertices (n >= 3).
    Cycle(usize),
    /// Complete bipartite graph with side sizes r, s >= 1.
    CompleteBipartite(usize, usize),
    /// Two 2m-vertex cycles sharing exactly one vertex (m >= 2); the
    /// shared vertex is 0, the first cycle continues 1..2m-1 and the
    /// second 2m..4m-2.
    Theorem1(usize),
    /// Two odd cycles of length l sharing one vertex (l odd, >= 3).
    BowtieOdd(usize),
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => {
                if n < 1 {
                    return Err(Error::InvalidFamily("path needs n >= 1".into()));
                }
                Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidFamily("cycle needs n >= 3".into()));
                }
                let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, n - 1));
                Graph::new(n, edges)
            }
            Family::CompleteBipartite(r, s) => {
                if r < 1 || s < 1 {
                    return Err(Error::InvalidFamily(
                        "complete_bipartite needs r, s >= 1".into(),
                    ));
                }
                let mut edges = Vec::with_capacity(r * s);
                for u in 0..r {
                    for v in r..r + s {
                        edges.push((u, v));
                    }
                }
                Graph::new(r + s, edges)
            }
            Family::Theorem1(m) => {
                if m < 2 {
                    return Err(Error::InvalidFamily("theorem1 needs m >= 2".into()));
                }
                let mut edges = Vec::with_capacity(4 * m);
                // first cycle: 0, 1, ..., 2m-1
                for i in 0..2 * m - 1 {
                    edges.push((i, i + 1));
                }
                edges.push((0, 2 * m - 1));
                // second cycle: 0, 2m, ..., 4m-2
                edges.push((0, 2 * m));
                for i in 2 * m..4 * m - 2 {
                    edges.push((i, i + 1));
                }
                edges.push((0, 4 * m - 2));
                Graph::new(4 * m - 1, edges)
            }
            Family::BowtieOdd(l) => {
                if l < 3 || l % 2 == 0 {
                    return Err(Error::InvalidFamily(
                        "bowtie_odd needs an odd cycle length >= 3".into(),
                    ));
                }
                let mut edges = Vec::with_capacity(2 * l);
                for i in 0..l - 1 {
                    edges.push((i, i + 1));
                }
                edges.push((0, l - 1));
                edges.push((0, l));
                for i in l..2 * l - 2 {
                    edges.push((i, i + 1));
                }
                edges.push((0, 2 * l - 2));
                Graph::new(2 * l - 1, edges)
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name,p1[,p2]`, e.g. `path,7` or `complete_bipartite,3,4`.
    fn from_str(s: &str) -> Result<Family> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = |m: &str| Error::InvalidFamily(m.to_string());
        let arg = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| bad("missing parameter"))?
                .parse()
                .map_err(|_| bad(&format!("bad integer parameter in '{s}'")))
        };
        let family = match parts[0] {
            "path" => Family::Path(arg(1)?),
            "cycle" => Family::Cycle(arg(1)?),
            "complete_bipartite" => Family::CompleteBipartite(arg(1)?, arg(2)?),
            "theorem1" => Family::Theorem1(arg(1)?),
            "bowtie_odd" => Family::BowtieOdd(arg(1)?),
            other => return Err(bad(&format!("unknown family '{other}'"))),
        };
        let expected = match family {
            Family::CompleteBipartite(..) => 3,
            _ => 2,
        };
        if parts.len() != expected {
            return Err(bad(&format!("wrong parameter count in '{s}'")));
        }
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path,{n}"),
            Family::Cycle(n) => write!(f, "cycle,{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "complete_bipartite,{r},{s}"),
            Family::Theorem1(m) => write!(f, "theorem1,{m}"),
            Family::BowtieOdd(l) => write!(f, "bowtie_odd,{l}"),
        }
    }
}
