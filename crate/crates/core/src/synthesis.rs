//! The constructive side: per-face case dispatch, assembly of the host as a
//! union of per-face extensions, radius certification, the exact-center
//! planar host, and the four-vertex universal center construction.

use std::collections::BTreeMap;

use crate::criteria::{has_dominating_face, qef_criterion};
use crate::error::{Error, Result};
use crate::gadget::{distance_audit, glue, Gadget, GadgetSpec};
use crate::graph::{is_isometric_subgraph, Graph};
use crate::plane::{FaceRef, PlaneGraph};
use crate::qcc::{classify_case, face_configuration, CaseKind, CaseLabel, Corner, CornerPair,
                 CornerSet, FaceConfiguration};

/// The decision taken for one face: its configuration, the matched case, and
/// the gadget glued in (none when every quasi-eccentric vertex of the face
/// already sits at eccentricity `alpha`, in which case the face contributes
/// nothing).
#[derive(Debug, Clone)]
pub struct FaceDecision {
    pub face: FaceRef,
    pub base: u32,
    pub case: CaseLabel,
    pub class_names: Vec<String>,
    pub gadget: Option<GadgetSpec>,
    /// Order of the standalone per-face host.
    pub extension_order: usize,
}

/// A synthesis certificate: the per-face decisions, the assembled host, and
/// BFS-verified eccentricity evidence recomputed from scratch on the host.
#[derive(Debug, Clone)]
pub struct SynthesisReport {
    pub alpha: u32,
    pub decisions: Vec<FaceDecision>,
    pub host: Graph,
    /// Present when the host is maximal plane (it is for the union host,
    /// absent for the trimmed exact-center host).
    pub host_plane: Option<PlaneGraph>,
    /// Image of the input's vertices in the host (always the identity).
    pub embedding: Vec<usize>,
    pub eccentricities: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub is_equi_eccentric: bool,
    pub is_center_subset: bool,
    pub is_exact_center: bool,
    pub input_isometric: bool,
    pub gluing_identity_holds: bool,
    /// Host vertices deleted to form the exact-center host (empty otherwise).
    pub removed: Vec<usize>,
    /// At `alpha >= diam + 3`: every input vertex has an eccentric witness
    /// outside every face containing it.
    pub far_witness_ok: Option<bool>,
}

impl SynthesisReport {
    pub fn image(&self) -> &[usize] {
        &self.embedding
    }
}

fn gadget_for_case(kind: CaseKind, alpha: u32, base: u32) -> Result<GadgetSpec> {
    let full = CornerSet::FULL;
    let singles = |cs: &[Corner]| CornerSet::from_iter(cs.iter().copied());
    let spec = match kind {
        CaseKind::Case1 => GadgetSpec::plain(alpha - base),
        CaseKind::Case3 => GadgetSpec::with_pairs(alpha - base - 1, singles(&[Corner::Z]), &[]),
        CaseKind::Case4_1 => {
            GadgetSpec::with_pairs(alpha - base - 1, singles(&[Corner::Y, Corner::Z]), &[])
        }
        CaseKind::Case4_2 => GadgetSpec::with_pairs(
            alpha - base - 1,
            singles(&[Corner::Y, Corner::Z]),
            &[CornerPair::YZ],
        ),
        CaseKind::Case5_1 => GadgetSpec::with_pairs(alpha - base - 1, full, &[]),
        CaseKind::Case5_2 => {
            GadgetSpec::with_pairs(alpha - base - 1, full, &[CornerPair::YZ])
        }
        CaseKind::Case5_3 => GadgetSpec::with_pairs(
            alpha - base - 1,
            full,
            &[CornerPair::YZ, CornerPair::ZX],
        ),
        CaseKind::Case6 => GadgetSpec::with_pairs(alpha - base - 1, full, &CornerPair::ALL),
    };
    if spec.depth == 0 {
        return Err(Error::InternalInvariantViolation(
            "a non-exempt face must receive a positive-depth gadget".into(),
        ));
    }
    Ok(spec)
}

/// Decide how one face is handled at the given `alpha`.
pub fn decide_face(h: &PlaneGraph, face: &FaceRef, alpha: u32) -> Result<FaceDecision> {
    let cfg = face_configuration(h, face)?;
    let label = classify_case(&cfg)?;
    let profile = h.graph().eccentricity_profile()?;
    // exempt when the face's quasi-eccentric vertices already peak at alpha;
    // this covers exactly the depth-0 branches of the dispatch table
    let exempt = cfg
        .qcc
        .qcc
        .iter()
        .all(|&u| profile.eccentricity[u] == alpha);
    let gadget = if exempt {
        None
    } else {
        Some(gadget_for_case(label.kind, alpha, cfg.base)?)
    };
    let class_names = cfg.classes.keys().map(|k| k.to_string()).collect();
    Ok(FaceDecision {
        face: face.clone(),
        base: cfg.base,
        case: label,
        class_names,
        gadget,
        extension_order: 0,
    })
}

/// Orientation array sending gadget terminal `c` to the face vertex playing
/// role `c` under the label's normalizing permutation.
fn orientation_for(cfg: &FaceConfiguration, label: &CaseLabel) -> [usize; 3] {
    [
        label.vertex(cfg, Corner::X),
        label.vertex(cfg, Corner::Y),
        label.vertex(cfg, Corner::Z),
    ]
}

/// Build the standalone per-face host: the input plus this face's gadget,
/// verified by BFS so that every quasi-eccentric vertex of the face has
/// eccentricity exactly `alpha` and no input vertex exceeds `alpha`.
pub fn build_face_extension(
    h: &PlaneGraph,
    face: &FaceRef,
    alpha: u32,
) -> Result<(PlaneGraph, FaceDecision)> {
    let profile = h.graph().eccentricity_profile()?;
    if alpha < profile.diameter {
        return Err(Error::AlphaTooSmall { alpha, min: profile.diameter });
    }
    let mut decision = decide_face(h, face, alpha)?;
    let cfg = face_configuration(h, face)?;
    let extension = match decision.gadget {
        None => h.clone(),
        Some(spec) => {
            let gadget = Gadget::build(spec)?;
            let (ok, violations) = distance_audit(&gadget);
            if !ok {
                return Err(Error::InternalInvariantViolation(format!(
                    "gadget audit failed: {:?}",
                    violations
                )));
            }
            let orientation = orientation_for(&cfg, &decision.case);
            glue(h, face, &gadget, orientation)?.plane
        }
    };
    decision.extension_order = extension.graph().order();

    // fresh BFS postcondition check
    let ext_profile = extension.graph().eccentricity_profile()?;
    for &u in &cfg.qcc.qcc {
        if ext_profile.eccentricity[u] != alpha {
            return Err(Error::CaseDispatchFailure(format!(
                "face {:?} case {}: quasi-eccentric vertex {u} has eccentricity {} != {alpha}",
                cfg.corners,
                decision.case.kind.name(),
                ext_profile.eccentricity[u]
            )));
        }
    }
    for u in 0..h.graph().order() {
        if ext_profile.eccentricity[u] > alpha {
            return Err(Error::CaseDispatchFailure(format!(
                "face {:?}: vertex {u} exceeds alpha in the extension",
                cfg.corners
            )));
        }
    }
    Ok((extension, decision))
}

/// Check of the union-of-parts theorem on an explicit family: all parts
/// share the same connected, isometric core, and then each part is isometric
/// in the union while core eccentricities are the per-part maxima.
#[derive(Debug, Clone)]
pub struct GluingCheck {
    pub union: Graph,
    pub parts_isometric_in_union: bool,
    pub eccentricity_identity: bool,
}

impl GluingCheck {
    pub fn holds(&self) -> bool {
        self.parts_isometric_in_union && self.eccentricity_identity
    }
}

/// Verify the union-of-parts theorem for `parts`, where `parts[m].1[j]` is
/// the image of shared vertex `j` in part `m`. The shared core is the
/// intersection graph (common edges) over the shared vertices. Hypothesis
/// violations (empty or disconnected core, core not isometric in a part)
/// are reported as errors; the conclusions are then checked on the union.
pub fn verify_gluing_theorem(parts: &[(Graph, Vec<usize>)]) -> Result<GluingCheck> {
    if parts.is_empty() {
        return Err(Error::HypothesisViolated("no parts".into()));
    }
    let s_len = parts[0].1.len();
    if s_len == 0 {
        return Err(Error::HypothesisViolated("empty shared set".into()));
    }
    for (g, map) in parts {
        if map.len() != s_len {
            return Err(Error::HypothesisViolated("shared maps disagree in size".into()));
        }
        let mut seen = vec![false; g.order()];
        for &v in map {
            if v >= g.order() || seen[v] {
                return Err(Error::HypothesisViolated("shared map not injective".into()));
            }
            seen[v] = true;
        }
    }

    // the core keeps the edges present in every part
    let mut core_edges = Vec::new();
    for i in 0..s_len {
        for j in (i + 1)..s_len {
            if parts.iter().all(|(g, map)| g.has_edge(map[i], map[j])) {
                core_edges.push((i, j));
            }
        }
    }
    let core = Graph::new(s_len, &core_edges)?;
    if !core.is_connected() {
        return Err(Error::HypothesisViolated("shared core is disconnected".into()));
    }
    for (idx, (g, map)) in parts.iter().enumerate() {
        let chk = is_isometric_subgraph(&core, g, map)
            .map_err(|e| Error::HypothesisViolated(format!("core does not embed in part {idx}: {e}")))?;
        if !chk.isometric {
            return Err(Error::HypothesisViolated(format!(
                "shared core is not isometric in part {idx}: {:?}",
                chk.violation
            )));
        }
    }

    // build the union: core first, then each part's private vertices
    let mut union_edges: Vec<(usize, usize)> = Vec::new();
    let mut part_maps: Vec<Vec<usize>> = Vec::new();
    let mut next = s_len;
    for (g, map) in parts {
        let mut to_union = vec![usize::MAX; g.order()];
        for (j, &v) in map.iter().enumerate() {
            to_union[v] = j;
        }
        for v in 0..g.order() {
            if to_union[v] == usize::MAX {
                to_union[v] = next;
                next += 1;
            }
        }
        for &(u, v) in g.edges() {
            let e = (to_union[u].min(to_union[v]), to_union[u].max(to_union[v]));
            if !union_edges.contains(&e) {
                union_edges.push(e);
            }
        }
        part_maps.push(to_union);
    }
    let union = Graph::new(next, &union_edges)?;

    let mut parts_isometric = true;
    for ((g, _), to_union) in parts.iter().zip(&part_maps) {
        let chk = is_isometric_subgraph(g, &union, to_union)?;
        if !chk.isometric {
            parts_isometric = false;
        }
    }

    let union_profile = union.eccentricity_profile()?;
    let part_profiles: Vec<_> = parts
        .iter()
        .map(|(g, _)| g.eccentricity_profile())
        .collect::<Result<_>>()?;
    let mut identity = true;
    for j in 0..s_len {
        let per_part_max = parts
            .iter()
            .zip(&part_profiles)
            .map(|((_, map), p)| p.eccentricity[map[j]])
            .max()
            .expect("at least one part");
        if union_profile.eccentricity[j] != per_part_max {
            identity = false;
        }
    }
    Ok(GluingCheck {
        union,
        parts_isometric_in_union: parts_isometric,
        eccentricity_identity: identity,
    })
}

/// Build a maximal plane host in which every vertex of `h` has eccentricity
/// exactly `alpha` and the radius is `alpha`, by gluing the case-dispatched
/// gadget into every face. Requires the face criterion to hold at `alpha`.
pub fn build_supergraph(h: &PlaneGraph, alpha: u32) -> Result<SynthesisReport> {
    let n = h.graph().order();
    if !h.is_maximal_plane() || n < 4 {
        return Err(Error::NotMaximalPlanar(
            "host synthesis needs a maximal plane input of order >= 4".into(),
        ));
    }
    let profile = h.graph().eccentricity_profile()?;
    if alpha < profile.diameter {
        return Err(Error::AlphaTooSmall { alpha, min: profile.diameter });
    }
    let verdict = qef_criterion(h, alpha)?;
    if let Some(v) = verdict.failing_vertex() {
        return Err(Error::CriterionFails { vertex: v });
    }

    let mut decisions = Vec::new();
    let mut parts: Vec<(Graph, Vec<usize>)> = Vec::new();
    let mut arena_edges: Vec<(usize, usize)> = h.graph().edges().to_vec();
    let mut next = n;
    // host vertices contributed by each face's gadget
    let mut interior_of_face: BTreeMap<usize, Vec<usize>> = BTreeMap::new();

    for face in h.faces() {
        let (extension, decision) = build_face_extension(h, &face, alpha)?;
        if decision.gadget.is_some() {
            // the extension keeps input indices 0..n-1; append its private
            // vertices to the arena under fresh indices
            let ext = extension.graph();
            let mut to_arena: Vec<usize> = (0..ext.order()).collect();
            let mut interior = Vec::new();
            for v in n..ext.order() {
                to_arena[v] = next;
                interior.push(next);
                next += 1;
            }
            for &(u, v) in ext.edges() {
                if u >= n || v >= n {
                    arena_edges.push((to_arena[u], to_arena[v]));
                }
            }
            interior_of_face.insert(face.id, interior);
            parts.push((ext.clone(), (0..n).collect()));
        }
        decisions.push(decision);
    }
    if parts.is_empty() {
        parts.push((h.graph().clone(), (0..n).collect()));
    }

    let host_graph = Graph::new(next, &arena_edges)?;
    let host_plane = PlaneGraph::mpg(host_graph.clone()).map_err(|e| {
        Error::InternalInvariantViolation(format!("assembled host is not maximal plane: {e}"))
    })?;

    let host_profile = host_graph.eccentricity_profile()?;
    let embedding: Vec<usize> = (0..n).collect();
    let image_eccs: Vec<u32> = embedding.iter().map(|&v| host_profile.eccentricity[v]).collect();
    let is_equi = image_eccs.iter().all(|&e| e == image_eccs[0]);
    let center = host_profile.center();
    let is_center_subset = embedding.iter().all(|v| center.contains(v));
    let is_exact_center = is_center_subset && center.len() == n;

    let iso = is_isometric_subgraph(h.graph(), &host_graph, &embedding)?;
    let gluing = verify_gluing_theorem(&parts)?;

    let far_witness_ok = if alpha >= profile.diameter + 3 {
        Some(far_witnesses_exist(h, &host_graph, &interior_of_face, alpha))
    } else {
        None
    };

    Ok(SynthesisReport {
        alpha,
        decisions,
        host: host_graph,
        host_plane: Some(host_plane),
        embedding,
        eccentricities: host_profile.eccentricity,
        radius: host_profile.radius,
        diameter: host_profile.diameter,
        is_equi_eccentric: is_equi,
        is_center_subset,
        is_exact_center,
        input_isometric: iso.isometric,
        gluing_identity_holds: gluing.holds(),
        removed: Vec::new(),
        far_witness_ok,
    })
}

/// Does every input vertex have an eccentric witness lying outside every
/// face that contains it?
fn far_witnesses_exist(
    h: &PlaneGraph,
    host: &Graph,
    interior_of_face: &BTreeMap<usize, Vec<usize>>,
    alpha: u32,
) -> bool {
    let host_n = host.order();
    let n = h.graph().order();
    // which face's gadget each host vertex belongs to
    let mut home: Vec<Option<usize>> = vec![None; host_n];
    for (&f, verts) in interior_of_face {
        for &v in verts {
            home[v] = Some(f);
        }
    }
    let dm = host.distances();
    for u in 0..n {
        let faces_with_u: Vec<usize> = h
            .faces()
            .filter(|f| f.boundary.contains(&u))
            .map(|f| f.id)
            .collect();
        let found = (n..host_n).any(|v| {
            let in_forbidden = home[v].is_some_and(|f| faces_with_u.contains(&f));
            !in_forbidden && dm.dist(u, v) == alpha
        });
        if !found {
            return false;
        }
    }
    true
}

/// Build the exact-center planar host: the union host with every gadget
/// vertex adjacent to exactly two input vertices removed. Requires
/// `alpha >= diam + 3`, which forces every gadget deep enough that the
/// removed vertices are precisely the outermost stellation vertices.
pub fn build_center_host(h: &PlaneGraph, alpha: u32) -> Result<SynthesisReport> {
    let profile = h.graph().eccentricity_profile()?;
    if alpha < profile.diameter + 3 {
        return Err(Error::AlphaTooSmall { alpha, min: profile.diameter + 3 });
    }
    let n = h.graph().order();
    let mut report = build_supergraph(h, alpha)?;
    let g = &report.host;

    let mut removable = Vec::new();
    for v in n..g.order() {
        let input_neighbors = g.neighbors(v).iter().filter(|&&w| w < n).count();
        if input_neighbors == 2 {
            removable.push(v);
        }
    }
    for &v in &removable {
        if g.degree(v) != 4 {
            return Err(Error::InternalInvariantViolation(format!(
                "removable vertex {v} has degree {} != 4",
                g.degree(v)
            )));
        }
        for &w in g.neighbors(v) {
            if removable.contains(&w) {
                return Err(Error::InternalInvariantViolation(
                    "two removable vertices are adjacent".into(),
                ));
            }
        }
    }
    let keep: Vec<usize> = (0..g.order()).filter(|v| !removable.contains(v)).collect();
    let (trimmed, back) = g.induced_subgraph(&keep)?;
    // input vertices keep their indices: removals all lie above n
    debug_assert!(back.iter().take(n).enumerate().all(|(i, &v)| i == v));

    let iso = is_isometric_subgraph(&trimmed, g, &back)?;
    if !iso.isometric {
        return Err(Error::InternalInvariantViolation(
            "trimmed host is not isometric in the union host".into(),
        ));
    }

    let trimmed_profile = trimmed.eccentricity_profile()?;
    let embedding: Vec<usize> = (0..n).collect();
    let image_eccs: Vec<u32> = embedding.iter().map(|&v| trimmed_profile.eccentricity[v]).collect();
    let is_equi = image_eccs.iter().all(|&e| e == image_eccs[0]);
    let center = trimmed_profile.center();
    let is_center_subset = embedding.iter().all(|v| center.contains(v));
    let is_exact_center = is_center_subset && center.len() == n;
    let input_iso = is_isometric_subgraph(h.graph(), &trimmed, &embedding)?.isometric;

    report.removed = removable;
    report.host = trimmed;
    report.host_plane = None;
    report.embedding = embedding;
    report.eccentricities = trimmed_profile.eccentricity;
    report.radius = trimmed_profile.radius;
    report.diameter = trimmed_profile.diameter;
    report.is_equi_eccentric = is_equi;
    report.is_center_subset = is_center_subset;
    report.is_exact_center = is_exact_center;
    report.input_isometric = input_iso;
    Ok(report)
}

/// The classical four-vertex augmentation whose center is exactly the input:
/// two universal vertices, each with a private pendant. The result is
/// non-planar whenever the input has a vertex of degree three or more.
pub fn hedetniemi(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    let a = n;
    let b = n + 1;
    let c = n + 2;
    let d = n + 3;
    let mut edges = g.edges().to_vec();
    for v in 0..n {
        edges.push((v, a));
        edges.push((v, b));
    }
    edges.push((a, c));
    edges.push((b, d));
    let aug = Graph::new(n + 4, &edges)?;
    let profile = aug.eccentricity_profile()?;
    let center = profile.center();
    let image: Vec<usize> = (0..n).collect();
    if center != image {
        return Err(Error::InternalInvariantViolation(format!(
            "augmented center is {center:?}, expected the input image"
        )));
    }
    Ok((aug, image))
}

/// Check that an equi-eccentric embedded copy of `h` (which must have no
/// dominating face) lands inside the center of the host.
pub fn verify_equi_in_center(h: &PlaneGraph, host: &Graph, embedding: &[usize]) -> Result<bool> {
    if !h.is_maximal_plane() {
        return Err(Error::PreconditionFailed("input is not maximal plane".into()));
    }
    if let Some(f) = has_dominating_face(h)? {
        return Err(Error::PreconditionFailed(format!(
            "input has a dominating face {:?}",
            f.boundary
        )));
    }
    is_isometric_subgraph(h.graph(), host, embedding)?;
    let profile = host.eccentricity_profile()?;
    let first = profile.eccentricity[embedding[0]];
    if embedding.iter().any(|&v| profile.eccentricity[v] != first) {
        return Err(Error::PreconditionFailed(
            "embedded copy is not equi-eccentric in the host".into(),
        ));
    }
    let center = profile.center();
    Ok(embedding.iter().all(|v| center.contains(v)))
}
