//! Simple undirected graphs on `[n] = {1, ..., n}`, paths, and box products.

use alloc::collections::BTreeSet;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    NoVertices,
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, n_vertices: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NoVertices => f.write_str("graph must have at least one vertex"),
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, n_vertices } => {
                write!(f, "vertex {vertex} is outside [1, {n_vertices}]")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Vertices are `1..=n_vertices`; each edge is stored once as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, collapsing repeated edges. Rejects loops and endpoints outside `[n]`.
    pub fn new<I>(n_vertices: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex == 0 || vertex > n_vertices {
                    return Err(GraphError::VertexOutOfRange { vertex, n_vertices });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n_vertices,
            edges: set,
        })
    }

    /// `P_n` with edges `{i, i+1}` for `i in [n-1]`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// `self □ other`, with vertex `(i, j)` labeled `(i-1)·m + j` where `m = |V(other)|`.
    pub fn box_product(&self, other: &Graph) -> Graph {
        let n = self.n_vertices;
        let m = other.n_vertices;
        let label = |i: usize, j: usize| (i - 1) * m + j;
        let mut edges = BTreeSet::new();
        for i in 1..=n {
            for (j, j2) in other.edges() {
                edges.insert((label(i, j), label(i, j2)));
            }
        }
        for j in 1..=m {
            for (i, i2) in self.edges() {
                edges.insert((label(i, j), label(i2, j)));
            }
        }
        Graph {
            n_vertices: n * m,
            edges,
        }
    }

    /// 0/1 adjacency matrix; vertex `v` maps to row and column `v - 1`.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n_vertices);
        for (u, v) in self.edges() {
            a[(u - 1, v - 1)] = BigInt::one();
            a[(v - 1, u - 1)] = BigInt::one();
        }
        a
    }
}
