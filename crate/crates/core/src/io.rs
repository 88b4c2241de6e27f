//! JSON wire formats for graphs and analysis reports, plus DOT export.
//!
//! A graph serializes as `{"n": .., "edges": [[u,v],..], "labels": [..]?}`
//! with sorted edges; a plane graph adds `"rotations"`. Faces are always
//! re-derived from the rotation on load, never trusted from input.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::criteria::{CriterionVerdict, CycleConditionVerdict};
use crate::enumerate::CensusRow;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plane::PlaneGraph;
use crate::qcc::FaceConfiguration;
use crate::synthesis::SynthesisReport;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotations: Option<Vec<Vec<usize>>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels().map(|l| l.to_vec()),
            rotations: None,
        }
    }

    pub fn from_plane(pg: &PlaneGraph) -> Self {
        let mut j = Self::from_graph(pg.graph());
        j.rotations = Some(pg.rotation().to_vec());
        j
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::with_labels(self.n, &edges, self.labels.clone())
    }

    /// Interpret as a plane graph: use the explicit rotation when present,
    /// otherwise derive the unique embedding of a maximal planar graph.
    pub fn to_plane(&self) -> Result<PlaneGraph> {
        let g = self.to_graph()?;
        match &self.rotations {
            Some(rot) => PlaneGraph::from_rotation(g, rot.clone()),
            None => PlaneGraph::mpg(g),
        }
    }
}

pub fn parse_graph_json(text: &str) -> Result<GraphJson> {
    serde_json::from_str(text)
        .map_err(|e| Error::NotASubgraphMap(format!("bad graph JSON: {e}")))
}

/// DOT rendering with an optional highlighted vertex set.
pub fn to_dot(g: &Graph, highlight: &[usize]) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let label = g
            .label_of(v)
            .map(|l| format!(" label=\"{l}\""))
            .unwrap_or_default();
        let style = if highlight.contains(&v) {
            " style=filled fillcolor=black fontcolor=white"
        } else {
            ""
        };
        out.push_str(&format!("  {v} [{}{}];\n", label.trim_start(), style));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn configuration_json(cfg: &FaceConfiguration, case: Option<&str>) -> Value {
    let classes: serde_json::Map<String, Value> = cfg
        .classes
        .iter()
        .map(|(key, members)| (key.to_string(), json!(members)))
        .collect();
    json!({
        "face": cfg.corners,
        "k": cfg.base,
        "qcc": cfg.qcc.qcc,
        "vectors": cfg.vectors.iter().map(|v| v.0).collect::<Vec<_>>(),
        "classes": classes,
        "case": case,
    })
}

pub fn qef_verdict_json(v: &CriterionVerdict) -> Value {
    json!({
        "criterion": "quasi-eccentric-face",
        "alpha": v.alpha,
        "pass": v.pass,
        "witnesses": v.witnesses.iter().map(|(u, f)| json!({"vertex": u, "face": f})).collect::<Vec<_>>(),
        "failing": v.failing,
        "failing_vertex": v.failing_vertex(),
    })
}

pub fn cycle_verdict_json(v: &CycleConditionVerdict) -> Value {
    json!({
        "criterion": "jordan-separating-cycle",
        "pass": v.pass,
        "exact": v.exact,
        "searched_up_to": v.searched_up_to,
        "counterexample": v.counterexample.as_ref().map(|c| json!({
            "cycle": c.cycle,
            "cycle_diameter": c.cycle_diameter,
            "inside": c.inside,
            "outside": c.outside,
            "d_inside": c.d_inside,
            "d_outside": c.d_outside,
        })),
    })
}

pub fn synthesis_json(r: &SynthesisReport) -> Value {
    let decisions: Vec<Value> = r
        .decisions
        .iter()
        .map(|d| {
            json!({
                "face": d.face.boundary,
                "k": d.base,
                "case": d.case.kind.name(),
                "classes": d.class_names,
                "gadget": d.gadget.map(|g| g.to_string()),
                "extension_order": d.extension_order,
            })
        })
        .collect();
    json!({
        "alpha": r.alpha,
        "decisions": decisions,
        "host": GraphJson::from_graph(&r.host),
        "rotations": r.host_plane.as_ref().map(|p| p.rotation().to_vec()),
        "embedding": r.embedding,
        "eccentricities": r.eccentricities,
        "radius": r.radius,
        "diameter": r.diameter,
        "is_equi_eccentric": r.is_equi_eccentric,
        "is_center_subset": r.is_center_subset,
        "is_exact_center": r.is_exact_center,
        "input_isometric": r.input_isometric,
        "gluing_identity_holds": r.gluing_identity_holds,
        "removed": r.removed,
        "far_witness_ok": r.far_witness_ok,
    })
}

/// Gadget as plane-graph JSON plus a map naming the apex, terminals and
/// far vertices.
pub fn gadget_json(g: &crate::gadget::Gadget) -> Value {
    use crate::qcc::{Corner, CornerPair};
    let mut specials = serde_json::Map::new();
    for c in Corner::ALL {
        specials.insert(
            format!("terminal_{}", c.letter()),
            json!(g.terminals[c.index()]),
        );
        if let Some(v) = g.far_single[c.index()] {
            specials.insert(format!("far_{}", c.letter()), json!(v));
        }
    }
    if let Some(apex) = g.apex {
        specials.insert("apex".into(), json!(apex));
    }
    for p in CornerPair::ALL {
        if let Some(v) = g.far_pair[p as usize] {
            specials.insert(format!("far_{}", p.name()), json!(v));
        }
    }
    json!({
        "spec": g.spec.to_string(),
        "graph": GraphJson::from_plane(&g.plane),
        "specials": specials,
    })
}

pub fn census_row_json(row: &CensusRow) -> Value {
    json!({
        "code": row.code.to_string(),
        "order": row.order,
        "diameter": row.diameter,
        "radius": row.radius,
        "center_size": row.center_size,
        "alpha": row.alpha,
        "qef_pass": row.qef_pass,
        "failing_vertex": row.failing_vertex,
        "cycle_pass": row.cycle_pass,
        "case_histogram": row.case_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::canonical_code;
    use crate::graph::octahedron;

    #[test]
    fn graph_round_trip() {
        let g = octahedron();
        let j = GraphJson::from_graph(&g);
        let text = serde_json::to_string(&j).unwrap();
        let back = parse_graph_json(&text).unwrap().to_graph().unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn plane_round_trip_preserves_canonical_code() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        let j = GraphJson::from_plane(&pg);
        let text = serde_json::to_string(&j).unwrap();
        let back = parse_graph_json(&text).unwrap().to_plane().unwrap();
        assert_eq!(canonical_code(&pg), canonical_code(&back));
    }

    #[test]
    fn dot_output_contains_edges() {
        let g = crate::graph::path_graph(3);
        let dot = to_dot(&g, &[1]);
        assert!(dot.contains("0 -- 1"));
        assert!(dot.contains("fillcolor=black"));
    }

    #[test]
    fn gadget_json_names_the_specials() {
        use crate::gadget::{Gadget, GadgetSpec};
        use crate::qcc::{Corner, CornerPair, CornerSet};
        let spec = GadgetSpec::with_pairs(
            2,
            CornerSet::from_iter([Corner::X, Corner::Y]),
            &[CornerPair::XY],
        );
        let g = Gadget::build(spec).unwrap();
        let j = gadget_json(&g);
        assert_eq!(j["specials"]["terminal_x"], 0);
        assert!(j["specials"]["apex"].is_number());
        assert!(j["specials"]["far_x"].is_number());
        assert!(j["specials"]["far_xy"].is_number());
        assert!(j["specials"]["far_z"].is_null());
        assert_eq!(j["graph"]["n"], 13);
    }
}
