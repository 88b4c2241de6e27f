//! Immutable simple-graph substrate: distances, eccentricities, separators,
//! domination, products and isometry checks.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges are normalized to `u < v` and kept sorted, so two equal graphs
/// serialize identically. The all-pairs distance matrix is computed once at
/// construction and shared read-only afterwards.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    distances: DistanceMatrix,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Graph {}

/// All-pairs hop distances. Disconnected pairs are `None`, never a sentinel
/// integer that could alias a real distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Option<u32>>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.rows[u][v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.rows[u]
    }

    /// Distance that must exist; panics on a disconnected pair so that code
    /// assuming connectivity fails loudly.
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.rows[u][v]
            .unwrap_or_else(|| panic!("vertices {u} and {v} are in different components"))
    }

    pub fn is_connected(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|d| d.is_some()))
    }
}

/// Per-vertex eccentricities plus the derived radius, diameter, layers and
/// center of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
}

impl EccentricityProfile {
    /// All vertices of eccentricity exactly `i`.
    pub fn layer(&self, i: u32) -> Vec<usize> {
        (0..self.eccentricity.len())
            .filter(|&v| self.eccentricity[v] == i)
            .collect()
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> Vec<usize> {
        self.layer(self.radius)
    }

    pub fn peripheral(&self) -> Vec<usize> {
        self.layer(self.diameter)
    }

    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }
}

/// Outcome of a separating-set test: whether `G - S` is disconnected, plus
/// its component partition.
#[derive(Debug, Clone)]
pub struct Separation {
    pub separates: bool,
    pub components: Vec<Vec<usize>>,
}

/// Outcome of an isometry check, with a witness pair on failure.
#[derive(Debug, Clone)]
pub struct IsometryCheck {
    pub isometric: bool,
    /// `(u, v, d_sub, d_host)` for the first violating pair, in subgraph indices.
    pub violation: Option<(usize, usize, u32, u32)>,
}

impl Graph {
    /// Build a graph from an edge list. Endpoints must be in range, loops are
    /// rejected, and duplicates (after `u < v` normalization) are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels(n, edge_list, None)
    }

    pub fn with_labels(
        n: usize,
        edge_list: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall(0, 1));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::NotASubgraphMap(format!(
                    "{} labels for {} vertices",
                    l.len(),
                    n
                )));
            }
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(Error::OutOfRange(a, n));
            }
            if b >= n {
                return Err(Error::OutOfRange(b, n));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let distances = all_pairs(n, &adj);
        Ok(Graph { n, edges, adj, labels, distances })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Index of the vertex carrying `label`, if any.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|s| s == label))
    }

    /// Single-source hop distances; unreachable vertices are `None`.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        if source >= self.n {
            return Err(Error::OutOfRange(source, self.n));
        }
        Ok(bfs(self.n, &self.adj, source))
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn is_connected(&self) -> bool {
        self.distances.is_connected()
    }

    /// Radius, diameter, layers and center. Errors on disconnected input.
    pub fn eccentricity_profile(&self) -> Result<EccentricityProfile> {
        let mut ecc = Vec::with_capacity(self.n);
        for u in 0..self.n {
            let mut e = 0u32;
            for v in 0..self.n {
                match self.distances.get(u, v) {
                    Some(d) => e = e.max(d),
                    None => return Err(Error::Disconnected),
                }
            }
            ecc.push(e);
        }
        let radius = *ecc.iter().min().expect("n >= 1");
        let diameter = *ecc.iter().max().expect("n >= 1");
        Ok(EccentricityProfile { eccentricity: ecc, radius, diameter })
    }

    /// Minimum pairwise distance between two non-empty vertex sets.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Result<Option<u32>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut best: Option<u32> = None;
        for &u in a {
            for &v in b {
                if let Some(d) = self.distances.get(u, v) {
                    best = Some(best.map_or(d, |x| x.min(d)));
                }
            }
        }
        Ok(best)
    }

    /// Distance from a single vertex to a set.
    pub fn vertex_set_distance(&self, v: usize, s: &[usize]) -> Result<Option<u32>> {
        self.set_distance(&[v], s)
    }

    /// Does removing `s` disconnect the graph? Also returns the components
    /// of `G - S`.
    pub fn is_separating_set(&self, s: &[usize]) -> Result<Separation> {
        let mut removed = vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(Error::OutOfRange(v, self.n));
            }
            removed[v] = true;
        }
        let rest: Vec<usize> = (0..self.n).filter(|&v| !removed[v]).collect();
        if rest.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for &start in &rest {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !removed[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        Ok(Separation { separates: components.len() > 1, components })
    }

    /// `t` dominates `s` when every vertex of `s` lies in the closed
    /// neighborhood of `t`.
    pub fn dominates(&self, t: &[usize], s: &[usize]) -> Result<bool> {
        for &v in t.iter().chain(s) {
            if v >= self.n {
                return Err(Error::OutOfRange(v, self.n));
            }
        }
        Ok(s.iter().all(|&v| {
            t.iter().any(|&w| w == v || self.has_edge(v, w))
        }))
    }

    /// Induced subgraph on `s`, plus the map from new indices back to `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut keep: Vec<usize> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::OutOfRange(v, self.n));
            }
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Ok((Graph::with_labels(keep.len(), &edges, labels)?, keep))
    }
}

/// Cartesian product: `(u,v)` adjacent to `(u',v')` when one coordinate is
/// equal and the other pair is an edge.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let n = g.order() * h.order();
    let idx = |u: usize, v: usize| u * h.order() + v;
    let mut edges = Vec::new();
    for u in 0..g.order() {
        for &(v, w) in h.edges() {
            edges.push((idx(u, v), idx(u, w)));
        }
    }
    for v in 0..h.order() {
        for &(u, w) in g.edges() {
            edges.push((idx(u, v), idx(w, v)));
        }
    }
    Graph::new(n, &edges).expect("product of valid graphs is valid")
}

/// Check that `embedding` realizes `sub` as an isometric subgraph of `host`:
/// the map must be an injective edge-preserving map, and then all pairwise
/// distances must agree. Returns a witness pair when they do not.
pub fn is_isometric_subgraph(sub: &Graph, host: &Graph, embedding: &[usize]) -> Result<IsometryCheck> {
    if embedding.len() != sub.order() {
        return Err(Error::NotASubgraphMap(format!(
            "map covers {} of {} vertices",
            embedding.len(),
            sub.order()
        )));
    }
    let mut seen = vec![false; host.order()];
    for &img in embedding {
        if img >= host.order() {
            return Err(Error::OutOfRange(img, host.order()));
        }
        if seen[img] {
            return Err(Error::NotASubgraphMap(format!("image vertex {img} repeated")));
        }
        seen[img] = true;
    }
    for &(u, v) in sub.edges() {
        if !host.has_edge(embedding[u], embedding[v]) {
            return Err(Error::NotASubgraphMap(format!(
                "edge {u}-{v} has no image edge {}-{}",
                embedding[u], embedding[v]
            )));
        }
    }
    for u in 0..sub.order() {
        for v in (u + 1)..sub.order() {
            let ds = sub.distances().get(u, v);
            let dh = host.distances().get(embedding[u], embedding[v]);
            if ds != dh {
                let (a, b) = (
                    ds.expect("subgraph pair connected via host check below"),
                    dh.expect("host image connected whenever subgraph is"),
                );
                return Ok(IsometryCheck { isometric: false, violation: Some((u, v, a, b)) });
            }
        }
    }
    Ok(IsometryCheck { isometric: true, violation: None })
}

fn bfs(n: usize, adj: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; n];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn all_pairs(n: usize, adj: &[Vec<usize>]) -> DistanceMatrix {
    let rows = (0..n).map(|s| bfs(n, adj, s)).collect();
    DistanceMatrix { rows }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph is valid")
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).expect("path is valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle is valid")
}

/// The 6-vertex octahedron: antipodal pairs (0,3), (1,4), (2,5), every
/// non-antipodal pair adjacent.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in (u + 1)..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(6, &edges).expect("octahedron is valid")
}

/// The 12-vertex icosahedron.
pub fn icosahedron() -> Graph {
    let mut edges = vec![];
    for i in 1..=5 {
        edges.push((0, i));
        edges.push((11, i + 5));
    }
    for i in 0..5 {
        edges.push((1 + i, 1 + (i + 1) % 5));
        edges.push((6 + i, 6 + (i + 1) % 5));
    }
    // each upper-ring vertex attaches to two consecutive lower-ring vertices
    for i in 0..5 {
        edges.push((1 + i, 6 + i));
        edges.push((1 + i, 6 + (i + 4) % 5));
    }
    Graph::new(12, &edges).expect("icosahedron is valid")
}
