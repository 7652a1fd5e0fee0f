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

//! Pentagonal cylinder and Möbius chain graphs, Laplacians and BFS distances.
//!
//! A chain of length `n` has `5n` vertices: an upper rail `1..=2n`, a lower
//! rail `1'..=2n'` and `n` middle vertices. Flat ids are laid out as the
//! upper rail, then the lower rail, then the middle vertices. Odd rail
//! positions carry the vertical rungs and even positions the spokes to a
//! middle vertex.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Rails closed straight: upper to upper, lower to lower.
    Cylinder,
    /// Rails closed with a half twist: upper to lower.
    Moebius,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Cylinder, Variant::Moebius];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Cylinder => "cylinder",
            Variant::Moebius => "moebius",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A member of one of the two chain families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphFamily {
    variant: Variant,
    n: usize,
}

impl GraphFamily {
    pub fn new(variant: Variant, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ChainTooShort(n));
        }
        Ok(GraphFamily { variant, n })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        5 * self.n
    }

    pub fn build(&self) -> Graph {
        build_chain(*self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Upper,
    Lower,
    Middle,
}

/// Structured vertex name; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub kind: VertexKind,
    pub index: usize,
}

impl VertexLabel {
    pub fn upper(index: usize) -> Self {
        VertexLabel {
            kind: VertexKind::Upper,
            index,
        }
    }

    pub fn lower(index: usize) -> Self {
        VertexLabel {
            kind: VertexKind::Lower,
            index,
        }
    }

    pub fn middle(index: usize) -> Self {
        VertexLabel {
            kind: VertexKind::Middle,
            index,
        }
    }

    /// Flat vertex id in a chain of length `n`.
    pub fn id(self, n: usize) -> Result<usize> {
        let limit = match self.kind {
            VertexKind::Upper | VertexKind::Lower => 2 * n,
            VertexKind::Middle => n,
        };
        if self.index == 0 || self.index > limit {
            return Err(Error::InvalidGraph(format!(
                "{self} is not a vertex of a chain with n = {n}"
            )));
        }
        Ok(match self.kind {
            VertexKind::Upper => self.index - 1,
            VertexKind::Lower => 2 * n + self.index - 1,
            VertexKind::Middle => 4 * n + self.index - 1,
        })
    }

    pub fn from_id(id: usize, n: usize) -> Result<Self> {
        match id {
            _ if id < 2 * n => Ok(Self::upper(id + 1)),
            _ if id < 4 * n => Ok(Self::lower(id - 2 * n + 1)),
            _ if id < 5 * n => Ok(Self::middle(id - 4 * n + 1)),
            _ => Err(Error::InvalidGraph(format!(
                "vertex id {id} out of range for n = {n}"
            ))),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VertexKind::Upper => write!(f, "{}", self.index),
            VertexKind::Lower => write!(f, "{}'", self.index),
            VertexKind::Middle => write!(f, "~{}", self.index),
        }
    }
}

/// Simple undirected graph given by sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    family: Option<GraphFamily>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            family: None,
            adjacency,
        })
    }

    pub fn family(&self) -> Option<GraphFamily> {
        self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Unweighted distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Returns true if `perm` (a map on vertex ids) sends edges to edges.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.vertex_count()
            && self
                .edges()
                .into_iter()
                .all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

pub fn build_pentagonal_cylinder(n: usize) -> Result<Graph> {
    Ok(GraphFamily::new(Variant::Cylinder, n)?.build())
}

pub fn build_pentagonal_moebius(n: usize) -> Result<Graph> {
    Ok(GraphFamily::new(Variant::Moebius, n)?.build())
}

fn build_chain(family: GraphFamily) -> Graph {
    let n = family.n;
    let up = |j: usize| j - 1;
    let low = |j: usize| 2 * n + j - 1;
    let mid = |k: usize| 4 * n + k - 1;

    let mut edges = Vec::with_capacity(7 * n);
    for j in 1..2 * n {
        edges.push((up(j), up(j + 1)));
        edges.push((low(j), low(j + 1)));
    }
    match family.variant {
        Variant::Cylinder => {
            edges.push((up(2 * n), up(1)));
            edges.push((low(2 * n), low(1)));
        }
        Variant::Moebius => {
            edges.push((up(2 * n), low(1)));
            edges.push((low(2 * n), up(1)));
        }
    }
    for k in 1..=n {
        edges.push((up(2 * k - 1), low(2 * k - 1)));
        edges.push((mid(k), up(2 * k)));
        edges.push((mid(k), low(2 * k)));
    }

    let mut graph = Graph::from_edges(5 * n, &edges).expect("chain construction is simple");
    graph.family = Some(family);
    graph
}

/// The rail swap `j <-> j'` fixing the middle vertices.
pub fn rail_swap(n: usize) -> Vec<usize> {
    (0..5 * n)
        .map(|v| match v {
            _ if v < 2 * n => v + 2 * n,
            _ if v < 4 * n => v - 2 * n,
            _ => v,
        })
        .collect()
}

/// Integer Laplacian `D - A`.
pub fn laplacian(g: &Graph) -> DenseMatrix<i64> {
    DenseMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else if g.has_edge(i, j) {
            -1
        } else {
            0
        }
    })
}

/// Matrix of BFS distances; fails on a disconnected graph.
pub fn all_pairs_distances(g: &Graph) -> Result<DenseMatrix<i64>> {
    let order = g.vertex_count();
    let mut entries = Vec::with_capacity(order * order);
    for source in 0..order {
        for d in g.bfs(source) {
            entries.push(d.ok_or(Error::Disconnected)? as i64);
        }
    }
    DenseMatrix::from_vec(order, entries)
}

/// Sum of shortest-path lengths over unordered vertex pairs.
pub fn wiener_index_bfs(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for source in 0..g.vertex_count() {
        for d in g.bfs(source) {
            total += d.ok_or(Error::Disconnected)? as u64;
        }
    }
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(label: VertexLabel, n: usize) -> usize {
        label.id(n).unwrap()
    }

    fn degree_counts(g: &Graph) -> (usize, usize) {
        let threes = (0..g.vertex_count()).filter(|&v| g.degree(v) == 3).count();
        let twos = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).count();
        (threes, twos)
    }

    #[test]
    fn rejects_short_chains() {
        assert_eq!(build_pentagonal_cylinder(1), Err(Error::ChainTooShort(1)));
        assert_eq!(build_pentagonal_moebius(0), Err(Error::ChainTooShort(0)));
    }

    #[test]
    fn smallest_cylinder() {
        let g = build_pentagonal_cylinder(2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 14);
        assert_eq!(degree_counts(&g), (8, 2));
        let m1 = id(VertexLabel::middle(1), 2);
        let mut nbrs: Vec<_> = g
            .neighbors(m1)
            .iter()
            .map(|&v| VertexLabel::from_id(v, 2).unwrap())
            .collect();
        nbrs.sort_by_key(|l| l.id(2).unwrap());
        assert_eq!(nbrs, vec![VertexLabel::upper(2), VertexLabel::lower(2)]);
    }

    #[test]
    fn smallest_moebius_twist() {
        let g = build_pentagonal_moebius(2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 14));
        assert_eq!(degree_counts(&g), (8, 2));
        let u4 = id(VertexLabel::upper(4), 2);
        assert!(g.has_edge(u4, id(VertexLabel::lower(1), 2)));
        assert!(!g.has_edge(u4, id(VertexLabel::upper(1), 2)));
    }

    #[test]
    fn vertical_rung_distance() {
        let g = build_pentagonal_cylinder(3).unwrap();
        let d = g.bfs(id(VertexLabel::upper(1), 3));
        assert_eq!(d[id(VertexLabel::lower(1), 3)], Some(1));
    }

    #[test]
    fn label_round_trip_and_range() {
        for n in 2..6 {
            for v in 0..5 * n {
                assert_eq!(VertexLabel::from_id(v, n).unwrap().id(n).unwrap(), v);
            }
        }
        assert!(VertexLabel::middle(3).id(2).is_err());
        assert!(VertexLabel::upper(0).id(2).is_err());
        assert_eq!(VertexLabel::lower(1).id(4).unwrap(), 8);
        assert_eq!(VertexLabel::middle(1).to_string(), "~1");
    }

    #[test]
    fn single_edge_laplacian() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(laplacian(&g).entries(), &[1, -1, -1, 1]);
    }

    #[test]
    fn laplacian_trace_and_rows() {
        let g = build_pentagonal_cylinder(2).unwrap();
        let l = laplacian(&g);
        assert_eq!(l.trace(), 28);
        assert!(l.is_symmetric());
        for i in 0..l.order() {
            assert_eq!(l.row(i).iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn wiener_table_values() {
        assert_eq!(wiener_index_bfs(&build_pentagonal_cylinder(2).unwrap()), Ok(86));
        assert_eq!(wiener_index_bfs(&build_pentagonal_moebius(2).unwrap()), Ok(82));
        assert_eq!(wiener_index_bfs(&build_pentagonal_cylinder(3).unwrap()), Ok(249));
    }

    #[test]
    fn distance_matrix() {
        let g = build_pentagonal_cylinder(2).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        assert_eq!(d[(id(VertexLabel::upper(1), 2), id(VertexLabel::lower(1), 2))], 1);
        let mut upper_sum = 0;
        for i in 0..10 {
            assert_eq!(d[(i, i)], 0);
            for j in 0..10 {
                assert_eq!(d[(i, j)], d[(j, i)]);
                if i < j {
                    upper_sum += d[(i, j)];
                }
            }
        }
        assert_eq!(upper_sum, 86);
    }

    #[test]
    fn disconnected_graph_errors() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(wiener_index_bfs(&g), Err(Error::Disconnected));
        assert_eq!(all_pairs_distances(&g), Err(Error::Disconnected));
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn rail_swap_is_automorphism_for_both_variants() {
        for n in 2..10 {
            for variant in Variant::ALL {
                let g = GraphFamily::new(variant, n).unwrap().build();
                assert!(g.is_automorphism(&rail_swap(n)), "{variant} n={n}");
            }
        }
    }
}
