//! Edge-colored multigraphs and the connectivity primitives everything else
//! is built on: monochromatic components, color-connectivity, contraction,
//! bridges and blocks.
//!
//! Vertices are dense indices `0..n`, colors are indices into the palette,
//! and an edge is identified by its position in the edge list, so parallel
//! edges stay distinguishable.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::dsu::DisjointSet;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type ColorId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("the palette is empty")]
    EmptyPalette,
    #[error("color label `{0}` appears twice in the palette")]
    DuplicateColor(String),
    #[error("edge {edge} is a self-loop on vertex {vertex}")]
    SelfLoop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    BadVertexId { edge: EdgeId, vertex: VertexId, n: usize },
    #[error("edge {edge} uses unknown color `{color}`")]
    UnknownColor { edge: EdgeId, color: String },
    #[error("the underlying multigraph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("color index {0} is outside the palette")]
    BadColorIndex(ColorId),
    #[error("edge id {0} does not exist")]
    BadEdgeId(EdgeId),
    #[error("vertex id {0} does not exist")]
    BadVertex(VertexId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: ColorId,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId, color: ColorId) -> Self {
        Edge { u, v, color }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Endpoints as an ordered pair, for comparing edges irrespective of direction.
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A connected edge-colored multigraph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    palette: Vec<String>,
    edges: Vec<Edge>,
}

/// A set of edge ids, meant to be colored wild.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WildSet(BTreeSet<EdgeId>);

impl WildSet {
    pub fn empty() -> Self {
        WildSet(BTreeSet::new())
    }

    /// Validating constructor: every id must exist in `g`.
    pub fn new<I: IntoIterator<Item = EdgeId>>(
        g: &EdgeColoredGraph,
        ids: I,
    ) -> Result<Self, GraphError> {
        let set: BTreeSet<EdgeId> = ids.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&e| e >= g.m()) {
            return Err(GraphError::BadEdgeId(bad));
        }
        Ok(WildSet(set))
    }

    pub(crate) fn from_ids<I: IntoIterator<Item = EdgeId>>(ids: I) -> Self {
        WildSet(ids.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn ids(&self) -> Vec<EdgeId> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<EdgeId> for WildSet {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        WildSet(iter.into_iter().collect())
    }
}

impl Extend<EdgeId> for WildSet {
    fn extend<T: IntoIterator<Item = EdgeId>>(&mut self, iter: T) {
        for e in iter {
            self.0.insert(e);
        }
    }
}

impl fmt::Display for WildSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// The graph `G/W`: every wild path collapsed to one vertex.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    pub graph: EdgeColoredGraph,
    /// Original vertex -> quotient vertex.
    pub class_of: Vec<VertexId>,
    /// Quotient edge id -> original edge id.
    pub origin: Vec<EdgeId>,
    /// Original edges that became loops (including the wild edges themselves).
    pub dropped: Vec<EdgeId>,
}

/// A biconnected component of the underlying multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl EdgeColoredGraph {
    /// Validates and builds a graph. Vertices are `0..n`, colors index `palette`.
    pub fn build(n: usize, palette: Vec<String>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if palette.is_empty() {
            return Err(GraphError::EmptyPalette);
        }
        for (k, label) in palette.iter().enumerate() {
            if palette[..k].contains(label) {
                return Err(GraphError::DuplicateColor(label.clone()));
            }
        }
        for (id, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(GraphError::BadVertexId { edge: id, vertex: x, n });
                }
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop { edge: id, vertex: e.u });
            }
            if e.color >= palette.len() {
                return Err(GraphError::UnknownColor { edge: id, color: e.color.to_string() });
            }
        }
        let g = EdgeColoredGraph { n, palette, edges };
        let components = g.underlying_components();
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }
        Ok(g)
    }

    /// Builds from `(u, v, color label)` triples.
    pub fn from_labeled<S: AsRef<str>>(
        n: usize,
        palette: &[S],
        edges: &[(VertexId, VertexId, &str)],
    ) -> Result<Self, GraphError> {
        let palette: Vec<String> = palette.iter().map(|s| s.as_ref().to_string()).collect();
        let mut out = Vec::with_capacity(edges.len());
        for (id, &(u, v, label)) in edges.iter().enumerate() {
            let color = palette
                .iter()
                .position(|p| p == label)
                .ok_or_else(|| GraphError::UnknownColor { edge: id, color: label.to_string() })?;
            out.push(Edge::new(u, v, color));
        }
        Self::build(n, palette, out)
    }

    /// Skips validation; callers guarantee the invariants (used for quotients and blocks).
    pub(crate) fn from_parts(n: usize, palette: Vec<String>, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.u != e.v && e.u < n && e.v < n));
        EdgeColoredGraph { n, palette, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of palette colors (ℓ).
    pub fn colors(&self) -> usize {
        self.palette.len()
    }

    pub fn palette(&self) -> &[String] {
        &self.palette
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge, GraphError> {
        self.edges.get(e).ok_or(GraphError::BadEdgeId(e))
    }

    pub fn color_index(&self, label: &str) -> Option<ColorId> {
        self.palette.iter().position(|p| p == label)
    }

    /// First edge (in id order) joining `u` and `v`, in any color.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|e| e.key() == key)
    }

    /// Number of edges of each color.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.colors()];
        for e in &self.edges {
            counts[e.color] += 1;
        }
        counts
    }

    /// True when every palette color is used by at least one edge.
    pub fn is_surjective(&self) -> bool {
        self.color_counts().iter().all(|&c| c > 0)
    }

    /// True when no two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut keys: Vec<_> = self.edges.iter().map(Edge::key).collect();
        keys.sort_unstable();
        keys.windows(2).all(|w| w[0] != w[1])
    }

    /// Same graph over a different palette. Every used color label must occur in `palette`.
    pub fn with_palette(&self, palette: Vec<String>) -> Result<Self, GraphError> {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| {
                let label = &self.palette[e.color];
                palette
                    .iter()
                    .position(|p| p == label)
                    .map(|color| Edge::new(e.u, e.v, color))
                    .ok_or_else(|| GraphError::UnknownColor { edge: id, color: label.clone() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::build(self.n, palette, edges)
    }

    fn underlying_components(&self) -> usize {
        let mut d = DisjointSet::new(self.n);
        for e in &self.edges {
            d.union(e.u, e.v);
        }
        d.count()
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
        adj
    }

    /// Union-find over `E_i ∪ W` for one color.
    pub(crate) fn color_dsu<I>(&self, color: ColorId, wild: I) -> DisjointSet
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut d = DisjointSet::new(self.n);
        for e in self.edges.iter().filter(|e| e.color == color) {
            d.union(e.u, e.v);
        }
        for id in wild {
            let e = &self.edges[id];
            d.union(e.u, e.v);
        }
        d
    }

    /// One union-find per color, each over `E_i ∪ W`.
    pub(crate) fn color_dsus(&self, wild: &[EdgeId]) -> Vec<DisjointSet> {
        let mut ds = vec![DisjointSet::new(self.n); self.colors()];
        for e in &self.edges {
            ds[e.color].union(e.u, e.v);
        }
        for d in ds.iter_mut() {
            for &id in wild {
                let e = &self.edges[id];
                d.union(e.u, e.v);
            }
        }
        ds
    }

    /// Components of `G_i^W` (pass an empty set for `G_i`).
    pub fn mono_components(
        &self,
        color: ColorId,
        wild: &WildSet,
    ) -> Result<Vec<Vec<VertexId>>, GraphError> {
        if color >= self.colors() {
            return Err(GraphError::BadColorIndex(color));
        }
        Ok(self.color_dsu(color, wild.iter()).parts())
    }

    /// κ(G_i) for every color.
    pub fn kappas(&self) -> Vec<usize> {
        self.color_dsus(&[]).iter().map(DisjointSet::count).collect()
    }

    /// κ(G_i^W) for every color.
    pub fn kappas_with(&self, wild: &WildSet) -> Vec<usize> {
        self.color_dsus(&wild.ids()).iter().map(DisjointSet::count).collect()
    }

    /// Σ_i κ(G_i).
    pub fn kappa_sum(&self) -> usize {
        self.kappas().iter().sum()
    }

    /// True iff `G_i^W` is connected for every palette color.
    pub fn is_color_connected(&self, wild: &WildSet) -> bool {
        self.kappas_with(wild).iter().all(|&k| k == 1)
    }

    /// Whether coloring `e` wild merges two components of `G_i`.
    pub fn helps(&self, e: EdgeId, color: ColorId) -> Result<bool, GraphError> {
        let edge = *self.edge(e)?;
        if color >= self.colors() {
            return Err(GraphError::BadColorIndex(color));
        }
        let mut d = self.color_dsu(color, std::iter::empty());
        Ok(!d.same(edge.u, edge.v))
    }

    /// Contracts every edge of `wild`. Loops created by the contraction are
    /// removed from the edge list and recorded in `dropped`; parallel edges stay.
    pub fn contract(&self, wild: &WildSet) -> QuotientGraph {
        let mut d = DisjointSet::new(self.n);
        for id in wild.iter() {
            let e = &self.edges[id];
            d.union(e.u, e.v);
        }
        let mut class_of = vec![usize::MAX; self.n];
        let mut root_class = vec![usize::MAX; self.n];
        let mut classes = 0;
        for (v, slot) in class_of.iter_mut().enumerate() {
            let r = d.find(v);
            if root_class[r] == usize::MAX {
                root_class[r] = classes;
                classes += 1;
            }
            *slot = root_class[r];
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        let mut dropped = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            let (a, b) = (class_of[e.u], class_of[e.v]);
            if a == b {
                dropped.push(id);
            } else {
                edges.push(Edge::new(a, b, e.color));
                origin.push(id);
            }
        }
        QuotientGraph {
            graph: EdgeColoredGraph::from_parts(classes, self.palette.clone(), edges),
            class_of,
            origin,
            dropped,
        }
    }

    /// Edges whose removal disconnects the underlying multigraph.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        self.dfs_structure().0
    }

    /// Biconnected components of the underlying multigraph, each edge in exactly one block.
    pub fn blocks(&self) -> Vec<Block> {
        self.dfs_structure().1
    }

    /// Single iterative lowpoint DFS yielding bridges and blocks. Parallel edges
    /// are told apart by id, so a doubled edge is never a bridge.
    fn dfs_structure(&self) -> (BTreeSet<EdgeId>, Vec<Block>) {
        const UNSEEN: usize = usize::MAX;
        struct Frame {
            v: VertexId,
            via: Option<EdgeId>,
            next: usize,
        }

        let adj = self.adjacency();
        let mut disc = vec![UNSEEN; self.n];
        let mut low = vec![0; self.n];
        let mut clock = 0;
        let mut bridges = BTreeSet::new();
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<EdgeId> = Vec::new();

        for root in 0..self.n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut stack = vec![Frame { v: root, via: None, next: 0 }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < adj[v].len() {
                    let (w, id) = adj[v][frame.next];
                    frame.next += 1;
                    if frame.via == Some(id) {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        edge_stack.push(id);
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push(Frame { v: w, via: Some(id), next: 0 });
                    } else if disc[w] < disc[v] {
                        low[v] = low[v].min(disc[w]);
                        edge_stack.push(id);
                    }
                    continue;
                }
                let via = frame.via;
                stack.pop();
                let (Some(parent), Some(tree_edge)) = (stack.last(), via) else {
                    continue;
                };
                let p = parent.v;
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    bridges.insert(tree_edge);
                }
                if low[v] >= disc[p] {
                    let mut block_edges = Vec::new();
                    while let Some(id) = edge_stack.pop() {
                        block_edges.push(id);
                        if id == tree_edge {
                            break;
                        }
                    }
                    block_edges.sort_unstable();
                    let vertices: BTreeSet<VertexId> = block_edges
                        .iter()
                        .flat_map(|&id| [self.edges[id].u, self.edges[id].v])
                        .collect();
                    blocks.push(Block { edges: block_edges, vertices: vertices.into_iter().collect() });
                }
            }
        }
        blocks.sort_by(|a, b| a.edges.cmp(&b.edges));
        (bridges, blocks)
    }

    /// The subgraph spanned by `edge_ids` (which must be connected), relabeled
    /// onto `0..k` in increasing vertex order, over the full palette.
    /// Returns the graph and the original ids of its vertices.
    pub(crate) fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> (EdgeColoredGraph, Vec<VertexId>) {
        let vertices: BTreeSet<VertexId> = edge_ids
            .iter()
            .flat_map(|&id| [self.edges[id].u, self.edges[id].v])
            .collect();
        let vertices: Vec<VertexId> = vertices.into_iter().collect();
        let local = |x: VertexId| vertices.binary_search(&x).expect("endpoint collected");
        let edges = edge_ids
            .iter()
            .map(|&id| {
                let e = &self.edges[id];
                Edge::new(local(e.u), local(e.v), e.color)
            })
            .collect();
        let n = vertices.len().max(1);
        (EdgeColoredGraph::from_parts(n, self.palette.clone(), edges), vertices)
    }

    /// Edge ids of one spanning tree of the underlying multigraph (smallest ids first).
    pub fn spanning_tree(&self) -> Vec<EdgeId> {
        let mut d = DisjointSet::new(self.n);
        (0..self.m()).filter(|&id| d.union(self.edges[id].u, self.edges[id].v)).collect()
    }
}
