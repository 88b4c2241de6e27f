//! Built-in example graphs with machine-checkable expected facts. Each
//! fixture is re-verified on load, so the stated facts double as a
//! regression gate for every subsystem they touch.

use std::collections::BTreeMap;

use crate::criteria::{cycle_condition, has_dominating_face, qef_criterion};
use crate::error::{Error, Result};
use crate::graph::{Graph, is_isometric_subgraph};
use crate::plane::PlaneGraph;
use crate::qcc::{classify_case, face_configuration, qcc_set, CaseKind, Corner};

/// One checkable statement about a fixture.
#[derive(Debug, Clone)]
pub enum Fact {
    IsMaximalPlanar,
    Diameter(u32),
    Radius(u32),
    SelfCentered,
    EccentricityOf { vertex: usize, value: u32 },
    CenterIs(Vec<usize>),
    /// The center induces this many pairwise disconnected triangles.
    CenterInducesDisjointTriangles(usize),
    QccOf { target: Vec<usize>, qcc: Vec<usize>, ecc: Vec<usize>, e: u32, q: u32 },
    FaceQuasiEccentricity { face: [usize; 3], q: u32 },
    /// `vertex` sits in the class at `level` whose near corners are exactly
    /// the given face vertices.
    VertexClass { face: [usize; 3], vertex: usize, level: u32, near: Vec<usize> },
    FaceCase { face: [usize; 3], case: CaseKind },
    /// The face criterion fails at `alpha` (default: the diameter) and the
    /// failing vertices are exactly these.
    QefFails { alpha: Option<u32>, failing: Vec<usize> },
    QefPasses { alpha: Option<u32> },
    CycleConditionPasses,
    SeparatingTriangleCount(usize),
    JordanSeparating { cycle: Vec<usize>, expect: bool },
    SeparatingSet { set: Vec<usize>, expect: bool },
    /// All listed vertices lie off the cycle and on a common side.
    SameSide { cycle: Vec<usize>, vertices: Vec<usize> },
    UniversalVertexCount(usize),
    /// Another fixture embeds into this one under the given vertex map.
    Contains { fixture: &'static str, embedding: Vec<usize> },
    HasDominatingFace(bool),
}

/// A named example graph with its annotations and expected facts.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    pub plane: Option<PlaneGraph>,
    pub named: BTreeMap<&'static str, usize>,
    pub facts: Vec<Fact>,
}

impl Fixture {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.named.get(name).copied()
    }
}

pub const FIXTURE_NAMES: [&str; 9] = [
    "p5-qcc",
    "g-star",
    "disc-center",
    "cycle-not-qef",
    "g9",
    "k3-k2bar",
    "k3-k2bar-host",
    "h1",
    "h2",
];

/// Additional fixtures carrying explicit rotation systems (non-maximal
/// plane graphs used by the cycle-side examples).
pub const ROTATION_FIXTURE_NAMES: [&str; 1] = ["sep-cycles"];

pub fn all_fixture_names() -> Vec<&'static str> {
    FIXTURE_NAMES.iter().chain(ROTATION_FIXTURE_NAMES.iter()).copied().collect()
}

/// Load a fixture by name and re-verify its facts; a fact failure is an
/// error, so a loaded fixture is always a certified one.
pub fn load_fixture(name: &str) -> Result<Fixture> {
    let fx = build_fixture(name)?;
    let failures: Vec<String> = verify_facts(&fx)?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(desc, _)| desc)
        .collect();
    if !failures.is_empty() {
        return Err(Error::InternalInvariantViolation(format!(
            "fixture {name} facts failed: {}",
            failures.join("; ")
        )));
    }
    Ok(fx)
}

/// Build a fixture without running its facts (the verify-all driver reports
/// outcomes itself).
pub fn build_unverified(name: &str) -> Result<Fixture> {
    build_fixture(name)
}

fn build_fixture(name: &str) -> Result<Fixture> {
    match name {
        "p5-qcc" => p5_qcc(),
        "g-star" => g_star(),
        "disc-center" => disc_center(),
        "cycle-not-qef" => cycle_not_qef(),
        "g9" => g9(),
        "k3-k2bar" => k3_k2bar(),
        "k3-k2bar-host" => k3_k2bar_host(),
        "h1" => h_order8(1),
        "h2" => h_order8(2),
        "sep-cycles" => sep_cycles(),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Run every fact of the fixture, returning a description and outcome per
/// fact.
pub fn verify_facts(fx: &Fixture) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let g = &fx.graph;
    let profile = g.eccentricity_profile()?;
    for fact in &fx.facts {
        let (desc, ok) = match fact {
            Fact::IsMaximalPlanar => (
                "graph is maximal planar".to_string(),
                fx.plane.as_ref().is_some_and(|p| p.is_maximal_plane()),
            ),
            Fact::Diameter(d) => (format!("diameter = {d}"), profile.diameter == *d),
            Fact::Radius(r) => (format!("radius = {r}"), profile.radius == *r),
            Fact::SelfCentered => ("self-centered".to_string(), profile.is_self_centered()),
            Fact::EccentricityOf { vertex, value } => (
                format!("eccentricity of {vertex} = {value}"),
                profile.eccentricity[*vertex] == *value,
            ),
            Fact::CenterIs(c) => (format!("center = {c:?}"), profile.center() == *c),
            Fact::CenterInducesDisjointTriangles(k) => {
                let center = profile.center();
                let (ind, _) = g.induced_subgraph(&center)?;
                let comps = ind.is_separating_set(&[])
                    .map(|s| s.components)
                    .unwrap_or_default();
                let ok = comps.len() == *k
                    && comps.iter().all(|c| c.len() == 3)
                    && ind.size() == 3 * k;
                (format!("center induces {k} disjoint triangles"), ok)
            }
            Fact::QccOf { target, qcc, ecc, e, q } => {
                let r = qcc_set(g, target)?;
                (
                    format!("qcc of {target:?}"),
                    r.qcc == *qcc && r.ecc == *ecc && r.eccentricity == *e && r.quasi_eccentricity == *q,
                )
            }
            Fact::FaceQuasiEccentricity { face, q } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let fref = find_face(pg, face)?;
                let cfg = face_configuration(pg, &fref)?;
                (format!("face {face:?} quasi-eccentricity = {q}"), cfg.base == *q)
            }
            Fact::VertexClass { face, vertex, level, near } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let fref = find_face(pg, face)?;
                let cfg = face_configuration(pg, &fref)?;
                let mut found = false;
                for (key, members) in &cfg.classes {
                    if members.contains(vertex) {
                        let near_vertices: Vec<usize> = key
                            .near
                            .iter()
                            .map(|c: Corner| cfg.corners[c.index()])
                            .collect();
                        let mut expect = near.clone();
                        expect.sort_unstable();
                        found = key.level == *level && near_vertices == expect;
                    }
                }
                (format!("vertex {vertex} in class ({level})_{near:?} of face {face:?}"), found)
            }
            Fact::FaceCase { face, case } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let fref = find_face(pg, face)?;
                let cfg = face_configuration(pg, &fref)?;
                let label = classify_case(&cfg)?;
                (format!("face {face:?} dispatches as {}", case.name()), label.kind == *case)
            }
            Fact::QefFails { alpha, failing } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let a = alpha.unwrap_or(profile.diameter);
                let v = qef_criterion(pg, a)?;
                (
                    format!("face criterion fails at alpha={a} exactly on {failing:?}"),
                    !v.pass && v.failing == *failing,
                )
            }
            Fact::QefPasses { alpha } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let a = alpha.unwrap_or(profile.diameter);
                let v = qef_criterion(pg, a)?;
                (format!("face criterion passes at alpha={a}"), v.pass)
            }
            Fact::CycleConditionPasses => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let v = cycle_condition(pg, None, None)?;
                ("cycle condition passes".to_string(), v.pass && v.exact)
            }
            Fact::SeparatingTriangleCount(k) => {
                let mut count = 0;
                for &(u, v) in g.edges() {
                    for w in 0..g.order() {
                        if w > v
                            && g.has_edge(u, w)
                            && g.has_edge(v, w)
                            && g.is_separating_set(&[u, v, w])?.separates
                        {
                            count += 1;
                        }
                    }
                }
                (format!("{k} separating triangles"), count == *k)
            }
            Fact::JordanSeparating { cycle, expect } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                (
                    format!("cycle {cycle:?} Jordan separating = {expect}"),
                    pg.is_jordan_separating(cycle)? == *expect,
                )
            }
            Fact::SeparatingSet { set, expect } => (
                format!("set {set:?} separating = {expect}"),
                g.is_separating_set(set)?.separates == *expect,
            ),
            Fact::SameSide { cycle, vertices } => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                let sides = pg.cycle_sides(cycle)?;
                let ok = vertices.iter().all(|v| sides.side_a.contains(v))
                    || vertices.iter().all(|v| sides.side_b.contains(v));
                (format!("vertices {vertices:?} share a side of {cycle:?}"), ok)
            }
            Fact::UniversalVertexCount(k) => {
                let count = (0..g.order())
                    .filter(|&v| g.degree(v) == g.order() - 1)
                    .count();
                (format!("{k} universal vertices"), count == *k)
            }
            Fact::Contains { fixture, embedding } => {
                let inner = build_fixture(fixture)?;
                let ok = is_isometric_subgraph(&inner.graph, g, embedding).map(|c| c.isometric).unwrap_or(false);
                (format!("contains fixture {fixture}"), ok)
            }
            Fact::HasDominatingFace(expect) => {
                let pg = fx.plane.as_ref().ok_or_else(no_plane)?;
                (
                    format!("has dominating face = {expect}"),
                    has_dominating_face(pg)?.is_some() == *expect,
                )
            }
        };
        out.push((desc, ok));
    }
    Ok(out)
}

fn no_plane() -> Error {
    Error::InternalInvariantViolation("fact needs an embedded fixture".into())
}

fn find_face(pg: &PlaneGraph, tri: &[usize; 3]) -> Result<crate::plane::FaceRef> {
    let mut want = *tri;
    want.sort_unstable();
    pg.faces()
        .find(|f| f.triangle().map(|t| t == want).unwrap_or(false))
        .ok_or_else(|| Error::FaceMismatch(format!("{want:?} is not a face")))
}

fn named(pairs: &[(&'static str, usize)]) -> BTreeMap<&'static str, usize> {
    pairs.iter().copied().collect()
}

fn p5_qcc() -> Result<Fixture> {
    let graph = Graph::with_labels(
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 4)],
        Some(["v1", "v2", "v3", "v4", "v5"].map(String::from).to_vec()),
    )?;
    Ok(Fixture {
        name: "p5-qcc",
        description: "path on five vertices; the middle pair has a strictly \
                      larger quasi-eccentric set than eccentric set",
        graph,
        plane: None,
        named: named(&[("v1", 0), ("v2", 1), ("v3", 2), ("v4", 3), ("v5", 4)]),
        facts: vec![
            Fact::QccOf {
                target: vec![1, 2],
                qcc: vec![0, 4],
                ecc: vec![4],
                e: 2,
                q: 1,
            },
            Fact::Diameter(4),
            Fact::Radius(2),
            Fact::CenterIs(vec![2]),
        ],
    })
}

fn g_star() -> Result<Fixture> {
    // a=0 b=1 c=2 d=3 x=4 y=5 z=6 e=7 f=8 g=9
    let edges = [
        (4, 5), (5, 6), (6, 4),            // shaded face x,y,z
        (0, 2), (2, 3), (3, 0),            // a-c, c-d, d-a
        (4, 0), (0, 5),                    // x-a-y
        (4, 2), (2, 7), (7, 4),            // x-c, c-e, e-x
        (5, 3), (3, 9), (9, 5),            // y-d, d-g, g-y
        (2, 1), (1, 3),                    // c-b-d
        (6, 7), (7, 1), (1, 9), (9, 6),    // z-e-b-g-z
        (6, 8), (8, 1),                    // z-f-b
        (7, 8), (8, 9),                    // e-f, f-g
    ];
    let labels = ["a", "b", "c", "d", "x", "y", "z", "e", "f", "g"];
    let graph = Graph::with_labels(10, &edges, Some(labels.map(String::from).to_vec()))?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    let face = [4, 5, 6];
    Ok(Fixture {
        name: "g-star",
        description: "ten-vertex triangulation whose shaded face has every \
                      other vertex quasi-eccentric to it",
        graph,
        plane: Some(plane),
        named: named(&[
            ("a", 0), ("b", 1), ("c", 2), ("d", 3), ("x", 4), ("y", 5), ("z", 6),
            ("e", 7), ("f", 8), ("g", 9),
        ]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::FaceQuasiEccentricity { face, q: 1 },
            Fact::QccOf {
                target: vec![4, 5, 6],
                qcc: vec![0, 1, 2, 3, 7, 8, 9],
                ecc: vec![1],
                e: 2,
                q: 1,
            },
            Fact::VertexClass { face, vertex: 0, level: 1, near: vec![4, 5] },
            Fact::VertexClass { face, vertex: 1, level: 2, near: vec![4, 5, 6] },
            Fact::VertexClass { face, vertex: 2, level: 1, near: vec![4] },
            Fact::VertexClass { face, vertex: 3, level: 1, near: vec![5] },
            Fact::FaceCase { face, case: CaseKind::Case6 },
            Fact::EccentricityOf { vertex: 4, value: 2 },
            Fact::EccentricityOf { vertex: 5, value: 2 },
            Fact::EccentricityOf { vertex: 6, value: 2 },
        ],
    })
}

fn disc_center() -> Result<Fixture> {
    // a1..a5 = 0..4, c1=5 d1=6 c2=7 c3=8 d2=9 d3=10 u=11
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 4),
        (1, 5), (5, 3), (3, 6), (6, 1),
        (5, 2), (2, 6),
        (5, 7), (7, 8), (8, 5),
        (6, 9), (9, 10), (10, 6),
        (1, 9), (9, 0), (0, 7), (7, 1),
        (3, 10), (10, 4), (4, 8), (8, 3),
        (11, 0), (7, 11), (11, 9), (11, 8), (11, 10), (11, 4),
    ];
    let graph = Graph::new(12, &edges)?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    Ok(Fixture {
        name: "disc-center",
        description: "twelve-vertex triangulation whose center induces two \
                      disjoint triangles",
        graph,
        plane: Some(plane),
        named: named(&[("u", 11)]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::CenterIs(vec![5, 6, 7, 8, 9, 10]),
            Fact::CenterInducesDisjointTriangles(2),
            Fact::CycleConditionPasses,
        ],
    })
}

fn cycle_not_qef() -> Result<Fixture> {
    // nested square rings around vertex 0, an apex 13 off the outer ring,
    // and two mirrored clusters of four vertices attached at vertex 8
    let edges = [
        (1, 2), (2, 3), (3, 4), (4, 1),          // inner ring
        (5, 6), (6, 7), (7, 8), (8, 5),          // middle ring (the bold cycle)
        (9, 10), (10, 11), (11, 12), (12, 9),    // outer ring
        (11, 7), (7, 3), (3, 0), (0, 1), (1, 5), (5, 9),   // one diagonal
        (12, 8), (8, 4), (4, 0), (0, 2), (2, 6), (6, 10),  // the other diagonal
        (9, 13), (13, 10), (12, 13), (11, 13),   // apex beyond the outer ring
        (5, 4), (4, 7), (7, 2), (2, 5),          // inner-middle bracing
        (5, 12), (12, 7), (7, 10), (10, 5),      // middle-outer bracing
        (8, 14), (14, 4), (8, 16), (16, 4), (14, 16), (16, 7),  // inner cluster
        (8, 15), (15, 4), (8, 17), (17, 4), (15, 17), (17, 5),
        (8, 18), (18, 12), (8, 20), (20, 12), (18, 20), (20, 7), // outer cluster
        (8, 19), (19, 12), (8, 21), (21, 12), (19, 21), (21, 5),
    ];
    let graph = Graph::new(22, &edges)?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    Ok(Fixture {
        name: "cycle-not-qef",
        description: "twenty-two vertex triangulation separating the two \
                      necessary conditions: every short cycle is harmless \
                      yet one vertex is quasi-eccentric to no face",
        graph,
        plane: Some(plane),
        named: named(&[("black", 8), ("center", 0), ("apex", 13)]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::Diameter(4),
            Fact::EccentricityOf { vertex: 8, value: 2 },
            Fact::CycleConditionPasses,
            // the black vertex 8 fails, together with its two mirror-pair
            // neighbors along the second diagonal
            Fact::QefFails { alpha: Some(4), failing: vec![4, 8, 12] },
            Fact::SeparatingTriangleCount(8),
        ],
    })
}

fn g9() -> Result<Fixture> {
    // wheel on eight rim vertices with hub 8 plus a zigzag of rim chords
    let mut edges = vec![];
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
        edges.push((i, 8));
    }
    edges.extend([(0, 6), (1, 6), (1, 5), (2, 5), (2, 4)]);
    let graph = Graph::new(9, &edges)?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    Ok(Fixture {
        name: "g9",
        description: "nine-vertex triangulation whose hub is quasi-eccentric \
                      to no face; the smallest order failing the criterion",
        graph,
        plane: Some(plane),
        named: named(&[("u", 8), ("x", 1), ("y", 5), ("w", 3), ("v", 7)]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::Diameter(2),
            Fact::EccentricityOf { vertex: 8, value: 1 },
            Fact::QefFails { alpha: Some(2), failing: vec![8] },
            Fact::UniversalVertexCount(1),
        ],
    })
}

fn k3_k2bar() -> Result<Fixture> {
    // triangle 1,2,3 joined to the two non-adjacent apexes 0 and 4
    let edges = [
        (1, 2), (2, 3), (3, 1),
        (0, 1), (0, 2), (0, 3),
        (4, 1), (4, 2), (4, 3),
    ];
    let graph = Graph::new(5, &edges)?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    Ok(Fixture {
        name: "k3-k2bar",
        description: "the unique five-vertex triangulation: a triangle joined \
                      to two independent apexes",
        graph,
        plane: Some(plane),
        named: named(&[]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::Radius(1),
            Fact::Diameter(2),
            Fact::UniversalVertexCount(3),
        ],
    })
}

fn k3_k2bar_host() -> Result<Fixture> {
    let mut edges = vec![
        (1, 2), (2, 3), (3, 1),
        (0, 1), (0, 2), (0, 3),
        (4, 1), (4, 2), (4, 3),
    ];
    // one new vertex in each face around apex 0
    edges.extend([(5, 0), (5, 1), (5, 2)]);
    edges.extend([(6, 0), (6, 2), (6, 3)]);
    edges.extend([(7, 0), (7, 1), (7, 3)]);
    let graph = Graph::new(8, &edges)?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    Ok(Fixture {
        name: "k3-k2bar-host",
        description: "self-centered eight-vertex triangulation hosting the \
                      five-vertex triangulation as a subgraph",
        graph,
        plane: Some(plane),
        named: named(&[]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::SelfCentered,
            Fact::Radius(2),
            Fact::Contains { fixture: "k3-k2bar", embedding: vec![0, 1, 2, 3, 4] },
        ],
    })
}

fn h_order8(which: usize) -> Result<Fixture> {
    // u=0; inner triangle 1,2,3; outer triangle 4,5,6; v=7; a perfect
    // matching between the triangles plus one of the two chord patterns
    let mut edges = vec![
        (0, 1), (0, 2), (0, 3),
        (7, 4), (7, 5), (7, 6),
        (1, 2), (2, 3), (3, 1),
        (4, 5), (5, 6), (6, 4),
        (1, 4), (2, 5), (3, 6),
    ];
    let (name, description) = if which == 1 {
        edges.extend([(1, 5), (2, 6), (3, 4)]);
        (
            "h1",
            "first of the two radius-2 diameter-3 triangulations on eight \
             vertices (rotationally symmetric chords)",
        )
    } else {
        edges.extend([(1, 5), (3, 5), (3, 4)]);
        (
            "h2",
            "second of the two radius-2 diameter-3 triangulations on eight \
             vertices",
        )
    };
    let graph = Graph::new(8, &edges)?;
    let plane = PlaneGraph::mpg(graph.clone())?;
    Ok(Fixture {
        name,
        description,
        graph,
        plane: Some(plane),
        named: named(&[("u", 0), ("v", 7)]),
        facts: vec![
            Fact::IsMaximalPlanar,
            Fact::Radius(2),
            Fact::Diameter(3),
            Fact::QefPasses { alpha: Some(3) },
        ],
    })
}

fn sep_cycles() -> Result<Fixture> {
    // two degree-5 hubs (4 above, 5 below) joined to four collinear
    // vertices and to each other; drawn from explicit rotations
    let edges = [
        (4, 2), (2, 5), (5, 1), (1, 4),
        (4, 3), (3, 5), (5, 0), (0, 4), (4, 5),
    ];
    let graph = Graph::new(6, &edges)?;
    let rotation = vec![
        vec![4, 5],
        vec![4, 5],
        vec![4, 5],
        vec![4, 5],
        vec![0, 1, 5, 2, 3],
        vec![3, 2, 4, 1, 0],
    ];
    let plane = PlaneGraph::from_rotation(graph.clone(), rotation)?;
    Ok(Fixture {
        name: "sep-cycles",
        description: "plane graph whose bold quadrilateral separates without \
                      Jordan-separating, while a triangle through the far \
                      vertex does both",
        graph,
        plane: Some(plane),
        named: named(&[]),
        facts: vec![
            Fact::SeparatingSet { set: vec![4, 2, 5, 1], expect: true },
            Fact::JordanSeparating { cycle: vec![4, 2, 5, 1], expect: false },
            Fact::SameSide { cycle: vec![4, 2, 5, 1], vertices: vec![0, 3] },
            Fact::JordanSeparating { cycle: vec![4, 0, 5], expect: true },
        ],
    })
}
