//! The depth-`d` tower gadget family glued into faces to pull eccentricities
//! up to a target, with decorated variants and a construction-time BFS audit
//! of their distance guarantees.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plane::{FaceRef, PlaneGraph};
use crate::qcc::{Corner, CornerPair, CornerSet};

/// Identifies one gadget variant: the tower depth, which corners receive a
/// far-single vertex (distance `depth + 1` from that corner's terminal,
/// `depth` from the other two), and which cyclic corner pairs receive a
/// far-pair vertex (distance `depth + 1` from both, `depth` from the third).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetSpec {
    pub depth: u32,
    pub far_singles: CornerSet,
    pub far_pairs: [bool; 3],
}

impl GadgetSpec {
    pub fn plain(depth: u32) -> Self {
        GadgetSpec { depth, far_singles: CornerSet::EMPTY, far_pairs: [false; 3] }
    }

    pub fn with_pairs(depth: u32, singles: CornerSet, pairs: &[CornerPair]) -> Self {
        let mut far_pairs = [false; 3];
        for p in pairs {
            far_pairs[*p as usize] = true;
        }
        GadgetSpec { depth, far_singles: singles, far_pairs }
    }

    pub fn pairs(&self) -> impl Iterator<Item = CornerPair> + '_ {
        CornerPair::ALL.into_iter().filter(|p| self.far_pairs[*p as usize])
    }

    /// A depth-0 gadget is the bare triangle; decorations require depth >= 1,
    /// and a far pair needs its lead corner's far single as an anchor.
    pub fn validate(&self) -> Result<()> {
        if self.depth == 0 && (!self.far_singles.is_empty() || self.far_pairs.iter().any(|&b| b)) {
            return Err(Error::InvalidSpec("depth 0 admits no decorations".into()));
        }
        for p in self.pairs() {
            if !self.far_singles.contains(p.lead()) {
                return Err(Error::InvalidSpec(format!(
                    "far pair {} needs the far single at {}",
                    p.name(),
                    p.lead().letter()
                )));
            }
        }
        Ok(())
    }

    /// All valid decoration shapes at a fixed positive depth.
    pub fn all_shapes(depth: u32) -> Vec<GadgetSpec> {
        let mut out = Vec::new();
        for singles_bits in 0u8..8 {
            let singles = CornerSet::from_iter(
                Corner::ALL.into_iter().filter(|c| singles_bits & (1 << c.index()) != 0),
            );
            for pair_bits in 0u8..8 {
                let pairs: Vec<CornerPair> = CornerPair::ALL
                    .into_iter()
                    .filter(|p| pair_bits & (1 << *p as usize) != 0)
                    .collect();
                let spec = GadgetSpec::with_pairs(depth, singles, &pairs);
                if spec.validate().is_ok() {
                    out.push(spec);
                }
            }
        }
        out
    }
}

impl fmt::Display for GadgetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "depth={}", self.depth)?;
        if !self.far_singles.is_empty() {
            write!(f, " singles={}", self.far_singles)?;
        }
        let pairs: Vec<&str> = self.pairs().map(|p| p.name()).collect();
        if !pairs.is_empty() {
            write!(f, " pairs={}", pairs.join(","))?;
        }
        Ok(())
    }
}

/// A built gadget: a maximal plane graph with its three terminals (the
/// corners of the outermost triangle, to be identified with a face boundary)
/// and the named special vertices.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub spec: GadgetSpec,
    pub plane: PlaneGraph,
    /// Terminal vertex for each corner; always `[0, 1, 2]`.
    pub terminals: [usize; 3],
    /// The apex inside the innermost ring (absent at depth 0).
    pub apex: Option<usize>,
    pub far_single: [Option<usize>; 3],
    pub far_pair: [Option<usize>; 3],
}

impl Gadget {
    /// Build the gadget for `spec`.
    ///
    /// The frame is the prism tower `P_depth x C_3` with ring `i` holding the
    /// corner vertices at indices `3i..3i+3`; the apex sits inside the
    /// innermost ring, every quadrilateral between consecutive rings is
    /// stellated, and the decorations subdivide the faces around the apex.
    pub fn build(spec: GadgetSpec) -> Result<Gadget> {
        spec.validate()?;
        let d = spec.depth as usize;
        if d == 0 {
            let plane = PlaneGraph::mpg(Graph::new(3, &[(0, 1), (1, 2), (0, 2)])?)?;
            return Ok(Gadget {
                spec,
                plane,
                terminals: [0, 1, 2],
                apex: None,
                far_single: [None; 3],
                far_pair: [None; 3],
            });
        }

        let ring = |i: usize, c: usize| 3 * i + c;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..d {
            for c in 0..3 {
                edges.push((ring(i, c), ring(i, (c + 1) % 3)));
                if i + 1 < d {
                    edges.push((ring(i, c), ring(i + 1, c)));
                }
            }
        }
        let apex = 3 * d;
        for c in 0..3 {
            edges.push((ring(d - 1, c), apex));
        }
        let mut next = apex + 1;
        // one stellation vertex inside each quadrilateral between rings
        for i in 0..d.saturating_sub(1) {
            for c in 0..3 {
                let s = next;
                next += 1;
                edges.push((s, ring(i, c)));
                edges.push((s, ring(i, (c + 1) % 3)));
                edges.push((s, ring(i + 1, c)));
                edges.push((s, ring(i + 1, (c + 1) % 3)));
            }
        }
        let mut far_single = [None; 3];
        for c in spec.far_singles.iter() {
            let v = next;
            next += 1;
            far_single[c.index()] = Some(v);
            // inside the apex face opposite this corner
            edges.push((v, apex));
            for other in Corner::ALL {
                if other != c {
                    edges.push((v, ring(d - 1, other.index())));
                }
            }
        }
        let mut far_pair = [None; 3];
        for p in spec.pairs() {
            let v = next;
            next += 1;
            far_pair[p as usize] = Some(v);
            let anchor = far_single[p.lead().index()]
                .expect("validated: far pair lead has a far single");
            edges.push((v, apex));
            edges.push((v, ring(d - 1, p.other().index())));
            edges.push((v, anchor));
        }

        let graph = Graph::new(next, &edges)?;
        let plane = PlaneGraph::mpg(graph).map_err(|e| {
            Error::InternalInvariantViolation(format!("gadget {spec} is not maximal plane: {e}"))
        })?;
        Ok(Gadget {
            spec,
            plane,
            terminals: [0, 1, 2],
            apex: Some(apex),
            far_single,
            far_pair,
        })
    }

    pub fn order(&self) -> usize {
        self.plane.graph().order()
    }

    /// Ring vertex for a corner at ring index `i`.
    pub fn ring_vertex(&self, i: usize, c: Corner) -> usize {
        3 * i + c.index()
    }
}

/// One distance-guarantee violation found by the audit.
#[derive(Debug, Clone)]
pub struct AuditViolation {
    pub description: String,
}

/// BFS-verify the gadget's distance guarantees:
/// - each terminal is exactly `depth` from the apex and at most `depth`
///   from every vertex except its own far single and its far pairs;
/// - a far single sits at `depth + 1` from its corner, `depth` from the rest;
/// - a far pair sits at `depth + 1` from both its corners, `depth` from the
///   third;
/// - a terminal is `depth - 1` from its innermost ring vertex.
pub fn distance_audit(g: &Gadget) -> (bool, Vec<AuditViolation>) {
    let mut violations = Vec::new();
    let mut check = |cond: bool, msg: String| {
        if !cond {
            violations.push(AuditViolation { description: msg });
        }
    };
    let spec = g.spec;
    let d = spec.depth;
    if d == 0 {
        return (true, violations);
    }
    let dm = g.plane.graph().distances();
    let apex = g.apex.expect("depth >= 1");
    let inner = spec.depth as usize - 1;
    for c in Corner::ALL {
        let t = g.terminals[c.index()];
        check(
            dm.dist(t, apex) == d,
            format!("terminal {} to apex: {} != {}", c.letter(), dm.dist(t, apex), d),
        );
        check(
            dm.dist(t, g.ring_vertex(inner, c)) == d.saturating_sub(1),
            format!("terminal {} to its inner ring vertex is not depth-1", c.letter()),
        );
        let exempt_single = g.far_single[c.index()];
        for v in 0..g.order() {
            let dist = dm.dist(t, v);
            let far_pair_here = CornerPair::ALL.iter().any(|&p| {
                g.far_pair[p as usize] == Some(v) && p.as_set().contains(c)
            });
            if Some(v) == exempt_single || far_pair_here {
                check(
                    dist == d + 1,
                    format!("terminal {} to far vertex {v}: {dist} != {}", c.letter(), d + 1),
                );
            } else {
                check(
                    dist <= d,
                    format!("terminal {} to vertex {v}: {dist} > {}", c.letter(), d),
                );
            }
        }
    }
    for p in spec.pairs() {
        let v = g.far_pair[p as usize].expect("spec has this pair");
        let other = g.terminals[p.other().index()];
        check(
            dm.dist(other, v) == d,
            format!("far pair {} to the remaining terminal: not depth", p.name()),
        );
    }
    (violations.is_empty(), violations)
}

/// Result of gluing a gadget into a face: the combined maximal plane graph,
/// plus the map from gadget vertices into it (host vertices keep their ids).
#[derive(Debug, Clone)]
pub struct GlueResult {
    pub plane: PlaneGraph,
    pub gadget_map: Vec<usize>,
}

/// Glue a gadget into a triangular face of `h`, identifying the gadget's
/// terminals with the face boundary in the given corner order
/// (`orientation[c]` is the face vertex receiving terminal `c`).
pub fn glue(h: &PlaneGraph, face: &FaceRef, gadget: &Gadget, orientation: [usize; 3]) -> Result<GlueResult> {
    let tri = face.triangle()?;
    {
        let mut o = orientation;
        o.sort_unstable();
        if o != tri {
            return Err(Error::FaceMismatch(format!(
                "orientation {orientation:?} does not cover face {tri:?}"
            )));
        }
    }
    let hg = h.graph();
    if !h.is_maximal_plane() {
        return Err(Error::FaceMismatch("host is not maximal plane".into()));
    }

    let gn = gadget.order();
    let mut gadget_map = vec![usize::MAX; gn];
    for c in Corner::ALL {
        gadget_map[gadget.terminals[c.index()]] = orientation[c.index()];
    }
    let mut next = hg.order();
    for v in 0..gn {
        if gadget_map[v] == usize::MAX {
            gadget_map[v] = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = hg.edges().to_vec();
    for &(u, v) in gadget.plane.graph().edges() {
        let (a, b) = (gadget_map[u], gadget_map[v]);
        let e = (a.min(b), a.max(b));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let combined = Graph::new(next, &edges)?;
    let plane = PlaneGraph::mpg(combined).map_err(|e| {
        Error::InternalInvariantViolation(format!("glued graph is not maximal plane: {e}"))
    })?;
    Ok(GlueResult { plane, gadget_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn depth_zero_is_the_bare_triangle() {
        let g = Gadget::build(GadgetSpec::plain(0)).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.apex.is_none());
    }

    #[test]
    fn depth_one_is_k4() {
        let g = Gadget::build(GadgetSpec::plain(1)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.plane.graph().size(), 6);
    }

    #[test]
    fn depth_three_has_sixteen_vertices() {
        // 9 frame + 1 apex + 6 stellation
        let g = Gadget::build(GadgetSpec::plain(3)).unwrap();
        assert_eq!(g.order(), 16);
        assert!(g.plane.is_maximal_plane());
    }

    #[test]
    fn undecorated_order_formula() {
        for d in 1..=6u32 {
            let g = Gadget::build(GadgetSpec::plain(d)).unwrap();
            assert_eq!(g.order() as u32, 6 * d - 2);
        }
    }

    #[test]
    fn decorations_add_one_vertex_each() {
        let base = Gadget::build(GadgetSpec::plain(2)).unwrap().order();
        let singles = CornerSet::from_iter([Corner::X]);
        let g = Gadget::build(GadgetSpec::with_pairs(2, singles, &[])).unwrap();
        assert_eq!(g.order(), base + 1);
        let g = Gadget::build(GadgetSpec::with_pairs(2, CornerSet::FULL, &CornerPair::ALL)).unwrap();
        assert_eq!(g.order(), base + 6);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let spec = GadgetSpec::with_pairs(2, CornerSet::EMPTY, &[CornerPair::XY]);
        assert!(matches!(Gadget::build(spec), Err(Error::InvalidSpec(_))));
        let spec = GadgetSpec::with_pairs(0, CornerSet::from_iter([Corner::X]), &[]);
        assert!(matches!(Gadget::build(spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn shape_family_is_complete() {
        let shapes = GadgetSpec::all_shapes(2);
        // each far pair requires its lead corner far single, so each single
        // sum over single sets of 2^(valid pairs)
        assert_eq!(shapes.len(), 27);
    }

    #[test]
    fn audits_hold_for_small_depths() {
        for d in 1..=3 {
            for spec in GadgetSpec::all_shapes(d) {
                let g = Gadget::build(spec).unwrap();
                let (ok, violations) = distance_audit(&g);
                assert!(ok, "{spec}: {violations:?}");
            }
        }
    }

    #[test]
    fn far_single_distances_at_depth_two() {
        let spec = GadgetSpec::with_pairs(2, CornerSet::from_iter([Corner::X]), &[]);
        let g = Gadget::build(spec).unwrap();
        let dm = g.plane.graph().distances();
        let fx = g.far_single[0].unwrap();
        assert_eq!(dm.dist(g.terminals[0], fx), 3);
        assert_eq!(dm.dist(g.terminals[1], fx), 2);
        assert_eq!(dm.dist(g.terminals[2], fx), 2);
    }

    #[test]
    fn far_pairs_at_depth_two() {
        let g = Gadget::build(GadgetSpec::with_pairs(2, CornerSet::FULL, &CornerPair::ALL)).unwrap();
        let dm = g.plane.graph().distances();
        for p in CornerPair::ALL {
            let v = g.far_pair[p as usize].unwrap();
            let (a, b) = p.corners();
            assert_eq!(dm.dist(g.terminals[a.index()], v), 3);
            assert_eq!(dm.dist(g.terminals[b.index()], v), 3);
            assert_eq!(dm.dist(g.terminals[p.other().index()], v), 2);
        }
    }

    #[test]
    fn glue_identity_and_counts() {
        let k4 = PlaneGraph::mpg(complete_graph(4)).unwrap();
        let face = k4.face(0);
        let tri = face.triangle().unwrap();

        let g0 = Gadget::build(GadgetSpec::plain(0)).unwrap();
        let r = glue(&k4, &face, &g0, tri).unwrap();
        assert_eq!(r.plane.graph(), k4.graph());

        let g1 = Gadget::build(GadgetSpec::plain(1)).unwrap();
        let r = glue(&k4, &face, &g1, tri).unwrap();
        assert_eq!(r.plane.graph().order(), 5);

        let oct = PlaneGraph::mpg(crate::graph::octahedron()).unwrap();
        let face = oct.face(0);
        let tri = face.triangle().unwrap();
        let g2 = Gadget::build(GadgetSpec::plain(2)).unwrap();
        let r = glue(&oct, &face, &g2, tri).unwrap();
        assert_eq!(r.plane.graph().order(), 6 + 10 - 3);
        assert!(r.plane.is_maximal_plane());
    }

    #[test]
    fn glue_rejects_wrong_orientation() {
        let k4 = PlaneGraph::mpg(complete_graph(4)).unwrap();
        let face = k4.face(0);
        let g1 = Gadget::build(GadgetSpec::plain(1)).unwrap();
        let mut bad = face.triangle().unwrap();
        bad[0] = 99;
        assert!(matches!(
            glue(&k4, &face, &g1, bad),
            Err(Error::FaceMismatch(_)) | Err(Error::OutOfRange(_, _))
        ));
    }

    #[test]
    fn host_is_isometric_in_glued_result() {
        use crate::graph::is_isometric_subgraph;
        let oct = PlaneGraph::mpg(crate::graph::octahedron()).unwrap();
        let face = oct.face(0);
        let tri = face.triangle().unwrap();
        for spec in [GadgetSpec::plain(1), GadgetSpec::plain(3)] {
            let g = Gadget::build(spec).unwrap();
            let r = glue(&oct, &face, &g, tri).unwrap();
            let id: Vec<usize> = (0..6).collect();
            assert!(is_isometric_subgraph(oct.graph(), r.plane.graph(), &id)
                .unwrap()
                .isometric);
        }
    }
}
