//! Isomorph-free exhaustive generation of maximal planar graphs of small
//! order via diagonal flips, plus the census harness over the generated
//! classes.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::criteria::{cycle_condition, qef_criterion};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plane::PlaneGraph;
use crate::qcc::{classify_case, face_configuration};

/// Canonical form of a maximal planar graph: the lexicographically least
/// breadth-first boundary-walk encoding over every root dart and both
/// orientations of the triangulation. Equal codes mean isomorphic graphs
/// (embeddings of a 3-connected planar graph are unique up to reflection).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl CanonicalCode {
    pub fn from_hex(s: &str) -> Option<CanonicalCode> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        let bytes: Option<Vec<u8>> = (0..s.len() / 2)
            .map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok())
            .collect();
        bytes.map(CanonicalCode)
    }
}

/// Encode the embedding rooted at the dart `(u0, v0)`: vertices are labeled
/// in discovery order and each vertex emits its degree followed by its
/// neighbor labels in rotation order starting at its discovery dart.
fn rooted_code(pg: &PlaneGraph, u0: usize, v0: usize, reflected: bool) -> Vec<u8> {
    let g = pg.graph();
    let n = g.order();
    let mut label = vec![u8::MAX; n];
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(n);
    label[u0] = 0;
    order.push((u0, v0));
    let mut next_label = 1u8;
    let mut code = Vec::with_capacity(2 * g.size() + n);
    let mut head = 0usize;
    while head < order.len() {
        let (v, entry) = order[head];
        head += 1;
        let rot = &pg.rotation()[v];
        let start = rot
            .iter()
            .position(|&w| w == entry)
            .expect("entry dart is a neighbor");
        code.push(rot.len() as u8);
        for i in 0..rot.len() {
            let w = if reflected {
                rot[(start + rot.len() - i % rot.len()) % rot.len()]
            } else {
                rot[(start + i) % rot.len()]
            };
            if label[w] == u8::MAX {
                label[w] = next_label;
                next_label += 1;
                order.push((w, v));
            }
            code.push(label[w]);
        }
    }
    code
}

/// Canonical code over all root darts and both orientations.
pub fn canonical_code(pg: &PlaneGraph) -> CanonicalCode {
    let g = pg.graph();
    let mut best: Option<Vec<u8>> = None;
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            for reflected in [false, true] {
                let code = rooted_code(pg, a, b, reflected);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    CanonicalCode(best.expect("graph has at least one edge"))
}

/// The stacked triangulation: start from the tetrahedron and repeatedly
/// insert a degree-3 vertex into the first face.
pub fn stacked_triangulation(n: usize) -> Result<PlaneGraph> {
    if n < 4 {
        return Err(Error::TooSmall(n, 4));
    }
    let mut g = crate::graph::complete_graph(4);
    for v in 4..n {
        let pg = PlaneGraph::mpg(g)?;
        let tri = pg.face(0).triangle()?;
        let mut edges = pg.graph().edges().to_vec();
        for c in tri {
            edges.push((c, v));
        }
        g = Graph::new(v + 1, &edges)?;
    }
    PlaneGraph::mpg(g)
}

/// Replace the edge `{u, v}` by the opposite diagonal of its two incident
/// triangles. Returns `None` when the diagonal is already present.
pub fn diagonal_flip(pg: &PlaneGraph, u: usize, v: usize) -> Result<Option<PlaneGraph>> {
    let g = pg.graph();
    if !g.has_edge(u, v) {
        return Err(Error::NoSuchEdge(u, v));
    }
    let faces = pg.faces_of_edge(u, v);
    if faces.len() != 2 {
        return Err(Error::NotMaximalPlanar(format!(
            "edge {u}-{v} lies on {} faces",
            faces.len()
        )));
    }
    let third = |f: usize| -> usize {
        pg.face_walk(f)
            .iter()
            .copied()
            .find(|&x| x != u && x != v)
            .expect("triangular face")
    };
    let (w, x) = (third(faces[0]), third(faces[1]));
    if g.has_edge(w, x) {
        return Ok(None);
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
        .collect();
    edges.push((w.min(x), w.max(x)));
    Ok(Some(PlaneGraph::mpg(Graph::new(g.order(), &edges)?)?))
}

fn enum_budget() -> usize {
    std::env::var("MPG_ENUM_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

/// One representative per isomorphism class of maximal planar graphs of
/// order `n`, found by breadth-first search over the diagonal-flip graph
/// from the stacked triangulation, deduplicating by canonical code.
/// Results are sorted by code for determinism.
pub fn enumerate_mpgs(n: usize) -> Result<Vec<PlaneGraph>> {
    if n < 4 {
        return Err(Error::TooSmall(n, 4));
    }
    if n > 10 {
        return Err(Error::TooLarge(format!("order {n} beyond the enumeration budget")));
    }
    let budget = enum_budget();
    let seed = stacked_triangulation(n)?;
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut classes: BTreeMap<CanonicalCode, PlaneGraph> = BTreeMap::new();
    let seed_code = canonical_code(&seed);
    seen.insert(seed_code.clone());
    let mut frontier = vec![(seed_code.clone(), seed.clone())];
    classes.insert(seed_code, seed);

    while !frontier.is_empty() {
        if seen.len() > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        // expand the whole frontier in parallel, then merge sequentially
        let expansions: Vec<(CanonicalCode, PlaneGraph)> = frontier
            .par_iter()
            .flat_map_iter(|(_, pg)| {
                let edges: Vec<(usize, usize)> = pg.graph().edges().to_vec();
                let pg = pg.clone();
                edges.into_iter().filter_map(move |(u, v)| {
                    diagonal_flip(&pg, u, v)
                        .ok()
                        .flatten()
                        .map(|flipped| (canonical_code(&flipped), flipped))
                })
            })
            .collect();
        let mut next = Vec::new();
        for (code, pg) in expansions {
            if seen.insert(code.clone()) {
                classes.insert(code.clone(), pg.clone());
                next.push((code, pg));
            }
        }
        frontier = next;
    }
    Ok(classes.into_values().collect())
}

/// Census entry for one isomorphism class.
#[derive(Debug, Clone)]
pub struct CensusRow {
    pub code: CanonicalCode,
    pub order: usize,
    pub diameter: u32,
    pub radius: u32,
    pub center_size: usize,
    pub alpha: u32,
    pub qef_pass: bool,
    pub failing_vertex: Option<usize>,
    pub cycle_pass: bool,
    /// Face count per dispatch case name.
    pub case_histogram: BTreeMap<&'static str, usize>,
}

impl CensusRow {
    pub fn csv_header() -> &'static str {
        "code,order,diam,radius,center_size,qef_pass,case_histogram"
    }

    pub fn csv_line(&self) -> String {
        let hist: Vec<String> = self
            .case_histogram
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        format!(
            "{},{},{},{},{},{},{}",
            self.code,
            self.order,
            self.diameter,
            self.radius,
            self.center_size,
            self.qef_pass,
            hist.join(";")
        )
    }
}

/// Which `alpha` the census checks the face criterion at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaPolicy {
    Diameter,
    DiameterPlus(u32),
}

impl AlphaPolicy {
    fn value(self, diameter: u32) -> u32 {
        match self {
            AlphaPolicy::Diameter => diameter,
            AlphaPolicy::DiameterPlus(k) => diameter + k,
        }
    }
}

/// Run the criterion census over every class of order `n`.
pub fn census(n: usize, policy: AlphaPolicy) -> Result<Vec<CensusRow>> {
    let classes = enumerate_mpgs(n)?;
    classes
        .par_iter()
        .map(|pg| census_row(pg, policy))
        .collect()
}

/// Compute one class's census row.
pub fn census_row(pg: &PlaneGraph, policy: AlphaPolicy) -> Result<CensusRow> {
    let profile = pg.graph().eccentricity_profile()?;
    let alpha = policy.value(profile.diameter);
    let verdict = qef_criterion(pg, alpha)?;
    let cyc = cycle_condition(pg, None, None)?;
    let mut case_histogram: BTreeMap<&'static str, usize> = BTreeMap::new();
    for face in pg.faces() {
        let cfg = face_configuration(pg, &face)?;
        let label = classify_case(&cfg)?;
        *case_histogram.entry(label.kind.name()).or_insert(0) += 1;
    }
    Ok(CensusRow {
        code: canonical_code(pg),
        order: pg.graph().order(),
        diameter: profile.diameter,
        radius: profile.radius,
        center_size: profile.center().len(),
        alpha,
        qef_pass: verdict.pass,
        failing_vertex: verdict.failing_vertex(),
        cycle_pass: cyc.pass,
        case_histogram,
    })
}

/// 3-connectivity check (used as a structural assertion on enumerated
/// classes): for order >= 4, no vertex pair disconnects the rest. A cut
/// vertex is caught too, since extending it by a second vertex still leaves
/// a disconnected remainder at this order.
pub fn is_three_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    for a in 0..n {
        for b in (a + 1)..n {
            let sep = g
                .is_separating_set(&[a, b])
                .map(|s| s.separates)
                .unwrap_or(false);
            if sep {
                return false;
            }
        }
    }
    true
}
