//! Combinatorial embeddings: rotation systems, face tracing, recognition of
//! maximal planar graphs, and Jordan-side classification of cycles.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A plane graph: a graph together with a rotation system and the face walks
/// it induces. Faces are always derived by tracing, never taken on trust.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    face_of_dart: HashMap<(usize, usize), usize>,
}

/// A face identified by id together with its boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRef {
    pub id: usize,
    pub boundary: Vec<usize>,
}

impl FaceRef {
    /// Boundary vertices of a triangular face, sorted ascending.
    pub fn triangle(&self) -> Result<[usize; 3]> {
        if self.boundary.len() != 3 {
            return Err(Error::NotTriangle(self.id));
        }
        let mut t = [self.boundary[0], self.boundary[1], self.boundary[2]];
        t.sort_unstable();
        Ok(t)
    }
}

/// Partition of the vertices relative to a simple cycle: the cycle itself and
/// the two Jordan sides. Side A is the side holding the lowest-indexed
/// off-cycle vertex (the interior/exterior naming is presentation only).
#[derive(Debug, Clone)]
pub struct CycleSides {
    pub on_cycle: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl PlaneGraph {
    /// Build a plane graph from an explicit rotation system. Each vertex must
    /// list its full neighbor set exactly once; the face walks are traced and
    /// the embedding must satisfy Euler's formula for the sphere.
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.order();
        if rotation.len() != n {
            return Err(Error::BadRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                n
            )));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        for v in 0..n {
            let mut listed = rotation[v].clone();
            listed.sort_unstable();
            if listed != graph.neighbors(v) {
                return Err(Error::BadRotation(format!(
                    "rotation at vertex {v} does not list its neighbor set"
                )));
            }
        }
        let (faces, face_of_dart) = trace_faces(&graph, &rotation);
        let euler = n as i64 - graph.size() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NonPlanarGenus(euler));
        }
        Ok(PlaneGraph { graph, rotation, faces, face_of_dart })
    }

    /// Recognize a maximal planar graph and derive its (unique) face set.
    ///
    /// For order >= 4 the faces are exactly the non-separating triangles; a
    /// consistent rotation is then rebuilt from the oriented face set. An
    /// order-3 triangle is accepted as the degenerate two-face plane graph.
    pub fn mpg(graph: Graph) -> Result<Self> {
        let n = graph.order();
        if n < 3 {
            return Err(Error::NotMaximalPlanar(format!("order {n} < 3")));
        }
        if !graph.is_connected() {
            return Err(Error::NotMaximalPlanar("disconnected".into()));
        }
        if n == 3 {
            if graph.size() != 3 {
                return Err(Error::NotMaximalPlanar("order 3 but not a triangle".into()));
            }
            let rotation = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
            return Self::from_rotation(graph, rotation);
        }
        if graph.size() != 3 * n - 6 {
            return Err(Error::NotMaximalPlanar(format!(
                "{} edges, expected {}",
                graph.size(),
                3 * n - 6
            )));
        }

        // candidate faces: triangles whose removal leaves the rest connected
        let mut faces: Vec<[usize; 3]> = Vec::new();
        for &(u, v) in graph.edges() {
            for &w in graph.neighbors(u) {
                if w > v && graph.has_edge(v, w) {
                    let tri = [u, v, w];
                    if !graph.is_separating_set(&tri)?.separates {
                        faces.push(tri);
                    }
                }
            }
        }
        if faces.len() != 2 * n - 4 {
            return Err(Error::NotMaximalPlanar(format!(
                "{} non-separating triangles, expected {}",
                faces.len(),
                2 * n - 4
            )));
        }

        // each edge must lie on exactly two faces
        let mut faces_of_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, tri) in faces.iter().enumerate() {
            for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                faces_of_edge.entry((a, b)).or_default().push(i);
            }
        }
        for &(u, v) in graph.edges() {
            if faces_of_edge.get(&(u, v)).map_or(0, |f| f.len()) != 2 {
                return Err(Error::NotMaximalPlanar(format!(
                    "edge {u}-{v} not on exactly two candidate faces"
                )));
            }
        }

        // orient the faces consistently by breadth-first search over the dual
        let mut oriented: Vec<Option<[usize; 3]>> = vec![None; faces.len()];
        oriented[0] = Some(faces[0]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            let tri = oriented[f].expect("queued faces are oriented");
            for i in 0..3 {
                let (a, b) = (tri[i], tri[(i + 1) % 3]);
                let key = (a.min(b), a.max(b));
                let pair = &faces_of_edge[&key];
                let other = if pair[0] == f { pair[1] } else { pair[0] };
                let third = faces[other]
                    .iter()
                    .copied()
                    .find(|&x| x != a && x != b)
                    .expect("triangles share exactly one edge");
                // the neighbor must traverse the shared edge in reverse
                let want = [b, a, third];
                match &oriented[other] {
                    None => {
                        oriented[other] = Some(want);
                        queue.push_back(other);
                    }
                    Some(t) => {
                        if !same_directed_triangle(t, &want) {
                            return Err(Error::NotMaximalPlanar(
                                "candidate faces admit no consistent orientation".into(),
                            ));
                        }
                    }
                }
            }
        }
        if oriented.iter().any(|o| o.is_none()) {
            return Err(Error::NotMaximalPlanar("dual of candidate faces is disconnected".into()));
        }

        // recover the rotation: an oriented face (.., u, v, w, ..) dictates
        // that w follows u in the cyclic order around v
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for tri in oriented.iter().map(|t| t.expect("all oriented")) {
            for i in 0..3 {
                let (u, v, w) = (tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]);
                if succ[v].insert(u, w).is_some() {
                    return Err(Error::NotMaximalPlanar(format!(
                        "conflicting rotation at vertex {v}"
                    )));
                }
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let nbrs = graph.neighbors(v);
            if succ[v].len() != nbrs.len() {
                return Err(Error::NotMaximalPlanar(format!(
                    "link of vertex {v} is not covered by the faces"
                )));
            }
            let mut cycle = Vec::with_capacity(nbrs.len());
            let mut cur = nbrs[0];
            for _ in 0..nbrs.len() {
                cycle.push(cur);
                cur = *succ[v]
                    .get(&cur)
                    .ok_or_else(|| Error::NotMaximalPlanar(format!("broken link at {v}")))?;
            }
            if cur != nbrs[0] || cycle.len() != nbrs.len() {
                return Err(Error::NotMaximalPlanar(format!(
                    "link of vertex {v} is not a single cycle"
                )));
            }
            rotation.push(cycle);
        }

        let pg = Self::from_rotation(graph, rotation)?;
        if pg.faces.iter().any(|f| f.len() != 3) || pg.faces.len() != 2 * n - 4 {
            return Err(Error::NotMaximalPlanar("retraced faces are not all triangles".into()));
        }
        Ok(pg)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_walk(&self, id: usize) -> &[usize] {
        &self.faces[id]
    }

    pub fn face(&self, id: usize) -> FaceRef {
        FaceRef { id, boundary: self.faces[id].clone() }
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceRef> + '_ {
        (0..self.faces.len()).map(|id| self.face(id))
    }

    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.face_of_dart.get(&(u, v)).copied()
    }

    /// Is every face a triangle (with the face count of a maximal plane graph)?
    pub fn is_maximal_plane(&self) -> bool {
        let n = self.graph.order();
        (n == 3 && self.faces.len() == 2)
            || (self.faces.iter().all(|f| f.len() == 3) && self.faces.len() == 2 * n - 4)
    }

    /// The ids of the (one or two) faces containing the edge `{u, v}`.
    pub fn faces_of_edge(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(f) = self.face_of_dart(u, v) {
            out.push(f);
        }
        if let Some(f) = self.face_of_dart(v, u) {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }

    /// Classify vertices as on `cycle` or on one of its two Jordan sides.
    /// Faces are two-colored by dual connectivity forbidding crossings of the
    /// cycle's edges; off-cycle vertices inherit the side of their faces.
    pub fn cycle_sides(&self, cycle: &[usize]) -> Result<CycleSides> {
        let n = self.graph.order();
        let k = cycle.len();
        if k < 3 {
            return Err(Error::NotACycle("shorter than a triangle".into()));
        }
        let mut on = vec![false; n];
        for (i, &v) in cycle.iter().enumerate() {
            if v >= n {
                return Err(Error::OutOfRange(v, n));
            }
            if on[v] {
                return Err(Error::NotACycle(format!("vertex {v} repeated")));
            }
            on[v] = true;
            let w = cycle[(i + 1) % k];
            if !self.graph.has_edge(v, w) {
                return Err(Error::NotACycle(format!("missing edge {v}-{w}")));
            }
        }
        let mut crossing = std::collections::HashSet::new();
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            crossing.insert((a.min(b), a.max(b)));
        }

        // two-color the dual, never stepping across a cycle edge
        let mut color: Vec<Option<u8>> = vec![None; self.faces.len()];
        let mut components = 0u8;
        for start in 0..self.faces.len() {
            if color[start].is_some() {
                continue;
            }
            if components >= 2 {
                return Err(Error::NotACycle(
                    "cycle does not split the sphere into two regions".into(),
                ));
            }
            let c = components;
            components += 1;
            color[start] = Some(c);
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let walk = &self.faces[f];
                for i in 0..walk.len() {
                    let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                    if crossing.contains(&(a.min(b), a.max(b))) {
                        continue;
                    }
                    if let Some(g) = self.face_of_dart(b, a) {
                        if color[g].is_none() {
                            color[g] = Some(c);
                            queue.push_back(g);
                        }
                    }
                }
            }
        }
        if components != 2 {
            return Err(Error::NotACycle(
                "cycle does not split the sphere into two regions".into(),
            ));
        }

        let mut side_of = vec![None; n];
        for (f, walk) in self.faces.iter().enumerate() {
            for &v in walk {
                if on[v] {
                    continue;
                }
                let c = color[f].expect("all faces colored");
                match side_of[v] {
                    None => side_of[v] = Some(c),
                    Some(prev) => {
                        if prev != c {
                            return Err(Error::InternalInvariantViolation(format!(
                                "vertex {v} touches both sides of a cycle"
                            )));
                        }
                    }
                }
            }
        }

        // canonical naming: side A holds the lowest-indexed off-cycle vertex
        let first = (0..n).find(|&v| !on[v] && side_of[v].is_some());
        let a_color = first.map(|v| side_of[v].expect("chosen off-cycle vertex has a side"));
        let mut sides = CycleSides { on_cycle: Vec::new(), side_a: Vec::new(), side_b: Vec::new() };
        for v in 0..n {
            if on[v] {
                sides.on_cycle.push(v);
            } else if let Some(c) = side_of[v] {
                if Some(c) == a_color {
                    sides.side_a.push(v);
                } else {
                    sides.side_b.push(v);
                }
            }
        }
        Ok(sides)
    }

    /// A cycle is Jordan separating when both of its sides hold a vertex.
    pub fn is_jordan_separating(&self, cycle: &[usize]) -> Result<bool> {
        let sides = self.cycle_sides(cycle)?;
        Ok(!sides.side_a.is_empty() && !sides.side_b.is_empty())
    }
}

fn same_directed_triangle(a: &[usize; 3], b: &[usize; 3]) -> bool {
    (0..3).any(|r| a[r] == b[0] && a[(r + 1) % 3] == b[1] && a[(r + 2) % 3] == b[2])
}

type FaceTable = (Vec<Vec<usize>>, HashMap<(usize, usize), usize>);

/// Trace all face walks of a rotation system. The dart following `(u, v)` is
/// `(v, w)` where `w` succeeds `u` in the cyclic order around `v`.
fn trace_faces(graph: &Graph, rotation: &[Vec<usize>]) -> FaceTable {
    let mut next_at: Vec<HashMap<usize, usize>> = Vec::with_capacity(graph.order());
    for rot in rotation {
        let mut m = HashMap::with_capacity(rot.len());
        for i in 0..rot.len() {
            m.insert(rot[i], rot[(i + 1) % rot.len()]);
        }
        next_at.push(m);
    }
    let mut face_of_dart: HashMap<(usize, usize), usize> = HashMap::new();
    let mut faces = Vec::new();
    for u in 0..graph.order() {
        for &v in graph.neighbors(u) {
            if face_of_dart.contains_key(&(u, v)) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                walk.push(a);
                face_of_dart.insert((a, b), id);
                let c = next_at[b][&a];
                a = b;
                b = c;
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(canonical_walk(walk));
        }
    }
    faces.sort();
    // re-key the dart map to the sorted face order
    let mut face_of_dart2 = HashMap::with_capacity(face_of_dart.len());
    for (f, walk) in faces.iter().enumerate() {
        for i in 0..walk.len() {
            face_of_dart2.insert((walk[i], walk[(i + 1) % walk.len()]), f);
        }
    }
    (faces, face_of_dart2)
}

/// Rotate a closed walk so its smallest vertex comes first (ties broken by
/// the following vertex), keeping direction.
fn canonical_walk(walk: Vec<usize>) -> Vec<usize> {
    let len = walk.len();
    let mut best = 0usize;
    for s in 1..len {
        for i in 0..len {
            let a = walk[(s + i) % len];
            let b = walk[(best + i) % len];
            if a != b {
                if a < b {
                    best = s;
                }
                break;
            }
        }
    }
    (0..len).map(|i| walk[(best + i) % len]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, octahedron, Graph};

    #[test]
    fn k4_from_rotation_has_four_faces() {
        let k4 = complete_graph(4);
        let rotation = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        let pg = PlaneGraph::from_rotation(k4, rotation).unwrap();
        assert_eq!(pg.face_count(), 4);
        assert!(pg.is_maximal_plane());
    }

    #[test]
    fn c4_from_rotation_has_two_quad_faces() {
        let c4 = cycle_graph(4);
        let rotation = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
        let pg = PlaneGraph::from_rotation(c4, rotation).unwrap();
        assert_eq!(pg.face_count(), 2);
        assert!(pg.faces().all(|f| f.boundary.len() == 4));
    }

    #[test]
    fn k5_rotation_is_rejected() {
        let k5 = complete_graph(5);
        let rotation: Vec<Vec<usize>> = (0..5)
            .map(|v| (0..5).filter(|&w| w != v).collect())
            .collect();
        match PlaneGraph::from_rotation(k5, rotation) {
            Err(Error::NonPlanarGenus(_)) => (),
            other => panic!("expected NonPlanarGenus, got {other:?}"),
        }
    }

    #[test]
    fn bad_rotation_is_rejected() {
        let c4 = cycle_graph(4);
        let rotation = vec![vec![1, 2], vec![0, 2], vec![1, 3], vec![0, 2]];
        assert!(matches!(
            PlaneGraph::from_rotation(c4, rotation),
            Err(Error::BadRotation(_))
        ));
    }

    #[test]
    fn mpg_recognizes_k4_and_octahedron() {
        let pg = PlaneGraph::mpg(complete_graph(4)).unwrap();
        assert_eq!(pg.face_count(), 4);
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        assert_eq!(pg.face_count(), 8);
        assert!(pg.is_maximal_plane());
    }

    #[test]
    fn mpg_rejects_nonplanar_with_matching_edge_count() {
        // K_{3,3} plus three edges inside one part: 12 = 3*6-6 edges, non-planar
        let mut edges = vec![];
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        edges.extend([(0, 1), (1, 2), (3, 4)]);
        let g = Graph::new(6, &edges).unwrap();
        assert_eq!(g.size(), 12);
        assert!(matches!(PlaneGraph::mpg(g), Err(Error::NotMaximalPlanar(_))));
    }

    #[test]
    fn mpg_rejects_wrong_edge_count() {
        assert!(matches!(
            PlaneGraph::mpg(cycle_graph(5)),
            Err(Error::NotMaximalPlanar(_))
        ));
    }

    #[test]
    fn mpg_accepts_bare_triangle() {
        let pg = PlaneGraph::mpg(complete_graph(3)).unwrap();
        assert_eq!(pg.face_count(), 2);
    }

    #[test]
    fn rotation_round_trips_through_faces() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        let re = PlaneGraph::from_rotation(pg.graph().clone(), pg.rotation().to_vec()).unwrap();
        let f1: Vec<_> = pg.faces().map(|f| f.boundary).collect();
        let f2: Vec<_> = re.faces().map(|f| f.boundary).collect();
        assert_eq!(f1, f2);
    }

    #[test]
    fn octahedron_cycle_sides() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        // a face triangle: one side has no vertices
        let face = pg.faces().find(|f| f.boundary.len() == 3).unwrap();
        let sides = pg.cycle_sides(&face.boundary).unwrap();
        assert!(sides.side_a.is_empty() || sides.side_b.is_empty());
        assert!(!pg.is_jordan_separating(&face.boundary).unwrap());

        // the equator separates the two remaining antipodal vertices
        let sides = pg.cycle_sides(&[0, 1, 3, 4]).unwrap();
        assert_eq!(sides.side_a, vec![2]);
        assert_eq!(sides.side_b, vec![5]);
        assert!(pg.is_jordan_separating(&[0, 1, 3, 4]).unwrap());
    }

    #[test]
    fn not_a_cycle_is_rejected() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        assert!(matches!(pg.cycle_sides(&[0, 3, 1]), Err(Error::NotACycle(_))));
        assert!(matches!(pg.cycle_sides(&[0, 1]), Err(Error::NotACycle(_))));
    }
}
