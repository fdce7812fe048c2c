// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Small undirected simple graphs, orientations, and their text formats.
//!
//! Edges are always stored as `(i, j)` with `i < j`, sorted
//! lexicographically. That order fixes the sign of every monomial of the
//! graph polynomial `∏ (x_i − x_j)`, so every other module relies on it.
//!
//! Cartesian products use layer-major numbering: vertex `(u, v)` of
//! `G □ H` gets index `v·|V(G)| + u`, so each block of `|V(G)|`
//! consecutive indices is one copy of `G`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycoeff::ExponentVector;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(g: GraphJson) -> Result<Self> {
        Graph::new(g.n, g.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl Graph {
    /// Builds a simple graph, normalizing each edge to `(min, max)` and
    /// sorting. Loops, duplicates and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (idx, (u, v)) in edges.into_iter().enumerate() {
            let line = idx + 1;
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { line, vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { line, u: e.0, v: e.1 });
            }
            out.push(e);
        }
        out.sort_unstable();
        Ok(Self { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: vec![] }
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// `C_n` on vertices `0..n` with edges `(i, i+1)` and `(0, n−1)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle length must be at least 3, got {n}"
            )));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("complete graph is simple")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("complete bipartite graph is simple")
    }

    /// `G □ H` with vertex `(u, v)` numbered `v·|V(G)| + u`.
    pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
        let ng = g.n;
        let mut edges = Vec::with_capacity(g.edges.len() * h.n + h.edges.len() * g.n);
        for v in 0..h.n {
            edges.extend(g.edges.iter().map(|&(a, b)| (v * ng + a, v * ng + b)));
        }
        for &(v1, v2) in &h.edges {
            edges.extend((0..ng).map(|u| (v1 * ng + u, v2 * ng + u)));
        }
        Graph::new(ng * h.n, edges).expect("product of simple graphs is simple")
    }

    pub fn torus(spec: TorusSpec) -> Graph {
        let layer = Graph::cycle(spec.m).expect("TorusSpec is validated");
        let outer = Graph::cycle(spec.k).expect("TorusSpec is validated");
        Graph::cartesian_product(&layer, &outer)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            Some(&r) if deg.iter().all(|&d| d == r) => Some(r),
            Some(_) => None,
            None => Some(0),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True iff `values` differ across every edge.
    pub fn is_proper<T: PartialEq>(&self, values: &[T]) -> bool {
        self.edges.iter().all(|&(i, j)| values[i] != values[j])
    }

    /// Parses the edge-list format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let (n, pairs) = parse_pairs(text)?;
        Graph::new(n, pairs.iter().map(|&(_, u, v)| (u, v))).map_err(|e| relabel_line(e, &pairs))
    }

    /// Canonical edge-list text (sorted edges, trailing newline).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(i, j) in &self.edges {
            writeln!(s, "{i} {j}").unwrap();
        }
        s
    }
}

impl Graph {
    /// Built-in families by name: `C5` (cycle), `P4` (path), `K4`
    /// (complete), `K2,3` (complete bipartite), `T3x4` (toroidal grid
    /// `C_3 □ C_4`).
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown graph name {name:?}"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let (family, rest) = name.split_at(name.chars().next().ok_or_else(bad)?.len_utf8());
        match family {
            "C" => Graph::cycle(num(rest)?),
            "P" => Ok(Graph::path(num(rest)?)),
            "K" => match rest.split_once(',') {
                Some((a, b)) => Ok(Graph::complete_bipartite(num(a)?, num(b)?)),
                None => Ok(Graph::complete(num(rest)?)),
            },
            "T" => {
                let (m, k) = rest.split_once('x').ok_or_else(bad)?;
                Ok(Graph::torus(TorusSpec::new(num(m)?, num(k)?)?))
            }
            _ => Err(bad()),
        }
    }

    /// `Some((m, k))` when this graph is exactly `C_m □ C_k` in layer-major numbering.
    pub fn as_torus(&self) -> Option<TorusSpec> {
        (3..=self.n / 3)
            .filter(|m| self.n % m == 0)
            .filter_map(|m| TorusSpec::new(m, self.n / m).ok())
            .find(|&spec| Graph::torus(spec) == *self)
    }
}

// Graph::new reports positions within the pair list; map them back to file lines.
fn relabel_line(err: Error, pairs: &[(usize, usize, usize)]) -> Error {
    let fix = |line: usize| pairs[line - 1].0;
    match err {
        Error::VertexOutOfRange { line, vertex, n } => Error::VertexOutOfRange {
            line: fix(line),
            vertex,
            n,
        },
        Error::Loop { line, vertex } => Error::Loop {
            line: fix(line),
            vertex,
        },
        Error::DuplicateEdge { line, u, v } => Error::DuplicateEdge {
            line: fix(line),
            u,
            v,
        },
        other => other,
    }
}

/// Header `n m` plus `m` integer pairs, each tagged with its 1-based line.
fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize, usize)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Malformed {
        line: 1,
        reason: "missing header `n m`".into(),
    })?;
    let (n, m) = parse_two(hline, header)?;
    let pairs = lines
        .map(|(line, l)| parse_two(line, l).map(|(u, v)| (line, u, v)))
        .collect::<Result<Vec<_>>>()?;
    if pairs.len() != m {
        return Err(Error::Malformed {
            line: hline,
            reason: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    Ok((n, pairs))
}

fn parse_two(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |reason: String| Error::Malformed { line, reason };
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(bad(format!("expected two integers, got {text:?}")));
    }
    let p = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| bad(format!("not a nonnegative integer: {t:?}")))
    };
    Ok((p(toks[0])?, p(toks[1])?))
}

/// Dimensions of the toroidal grid `C_m □ C_k`: `m` is the layer cycle,
/// `k` the outer cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusSpec {
    pub m: usize,
    pub k: usize,
}

impl TorusSpec {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m < 3 || k < 3 {
            return Err(Error::InvalidParameter(format!(
                "toroidal grid needs m, k >= 3, got ({m}, {k})"
            )));
        }
        Ok(Self { m, k })
    }
}

/// A choice of head for every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Graph,
    heads: Vec<usize>,
}

impl Orientation {
    pub fn new(graph: Graph, heads: Vec<usize>) -> Result<Self> {
        if heads.len() != graph.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "{} heads for {} edges",
                heads.len(),
                graph.edge_count()
            )));
        }
        for (&(i, j), &h) in graph.edges().iter().zip(&heads) {
            if h != i && h != j {
                return Err(Error::InvalidParameter(format!(
                    "head {h} is not an endpoint of ({i}, {j})"
                )));
            }
        }
        Ok(Self { graph, heads })
    }

    /// Bit `e` of `mask` set means edge `e` points to its larger endpoint.
    pub fn from_mask(graph: &Graph, mask: u64) -> Self {
        let heads = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(i, j))| if mask >> e & 1 == 1 { j } else { i })
            .collect();
        Self {
            graph: graph.clone(),
            heads,
        }
    }

    /// Every orientation of `graph`, in mask order.
    pub fn all(graph: &Graph) -> impl Iterator<Item = Orientation> + '_ {
        assert!(graph.edge_count() < 64, "too many edges to enumerate orientations");
        (0..1u64 << graph.edge_count()).map(move |mask| Orientation::from_mask(graph, mask))
    }

    /// Builds an orientation from `(tail, head)` arcs.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let graph = Graph::new(n, arcs.iter().copied())?;
        let heads = graph
            .edges()
            .iter()
            .map(|&(i, j)| {
                if arcs.contains(&(i, j)) {
                    j
                } else {
                    i
                }
            })
            .collect();
        Ok(Self { graph, heads })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    /// `(tail, head)` per edge, in canonical edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .zip(&self.heads)
            .map(|(&(i, j), &h)| if h == j { (i, j) } else { (j, i) })
            .collect()
    }

    pub fn indegrees(&self) -> ExponentVector {
        let mut deg = vec![0u32; self.graph.n()];
        for &h in &self.heads {
            deg[h] += 1;
        }
        ExponentVector::new(deg)
    }

    pub fn max_indegree(&self) -> u32 {
        self.indegrees().iter().copied().max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Self {
        let heads = self
            .graph
            .edges()
            .iter()
            .zip(&self.heads)
            .map(|(&(i, j), &h)| if h == i { j } else { i })
            .collect();
        Self {
            graph: self.graph.clone(),
            heads,
        }
    }

    /// Header `n m` then `m` lines `tail head`.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, pairs) = parse_pairs(text)?;
        let arcs: Vec<_> = pairs.iter().map(|&(_, t, h)| (t, h)).collect();
        Self::from_arcs(n, &arcs).map_err(|e| relabel_line(e, &pairs))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.graph.n(), self.heads.len());
        for (t, h) in self.arcs() {
            writeln!(s, "{t} {h}").unwrap();
        }
        s
    }
}
