//! The decision procedures: the quasi-eccentric face criterion, the
//! Jordan-separating-cycle condition, their implication, and the
//! dominating-face test.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::plane::{FaceRef, PlaneGraph};
use crate::qcc::qcc_set;

/// Verdict of the quasi-eccentric face criterion at a given `alpha`.
///
/// On a pass, `witnesses` maps every vertex `u` with `e_H(u) < alpha` to one
/// face whose boundary has `u` among its quasi-eccentric vertices. On a
/// fail, `failing` lists every constrained vertex quasi-eccentric to no face
/// (the first is the reported witness of failure).
#[derive(Debug, Clone)]
pub struct CriterionVerdict {
    pub alpha: u32,
    pub pass: bool,
    pub witnesses: BTreeMap<usize, usize>,
    pub failing: Vec<usize>,
}

impl CriterionVerdict {
    pub fn failing_vertex(&self) -> Option<usize> {
        self.failing.first().copied()
    }
}

/// For every vertex with eccentricity below `alpha`, search the faces for
/// one whose boundary has the vertex among its quasi-eccentric vertices.
/// Vertices already at eccentricity `alpha` are exempt. Witness faces not
/// containing the vertex are preferred when one exists; the host
/// construction wants such far faces.
pub fn qef_criterion(h: &PlaneGraph, alpha: u32) -> Result<CriterionVerdict> {
    let g = h.graph();
    let profile = g.eccentricity_profile()?;
    if alpha < profile.diameter {
        return Err(Error::AlphaTooSmall { alpha, min: profile.diameter });
    }
    let mut qcc_of_face: Vec<Option<Vec<bool>>> = vec![None; h.face_count()];
    let mut witnesses = BTreeMap::new();
    let mut failing = Vec::new();
    for u in 0..g.order() {
        if profile.eccentricity[u] >= alpha {
            continue;
        }
        let mut chosen: Option<usize> = None;
        let mut fallback: Option<usize> = None;
        for face in h.faces() {
            let members = match &qcc_of_face[face.id] {
                Some(m) => m,
                None => {
                    let q = qcc_set(g, &face.boundary)?;
                    let mut mask = vec![false; g.order()];
                    for &v in &q.qcc {
                        mask[v] = true;
                    }
                    qcc_of_face[face.id] = Some(mask);
                    qcc_of_face[face.id].as_ref().expect("just stored")
                }
            };
            if members[u] {
                if face.boundary.contains(&u) {
                    fallback.get_or_insert(face.id);
                } else {
                    chosen = Some(face.id);
                    break;
                }
            }
        }
        match chosen.or(fallback) {
            Some(f) => {
                witnesses.insert(u, f);
            }
            None => failing.push(u),
        }
    }
    Ok(CriterionVerdict { alpha, pass: failing.is_empty(), witnesses, failing })
}

/// A counterexample to the cycle condition: a cycle Jordan-separating two
/// vertices that are both farther from it than its own diameter.
#[derive(Debug, Clone)]
pub struct CycleCounterexample {
    pub cycle: Vec<usize>,
    pub cycle_diameter: u32,
    pub inside: usize,
    pub outside: usize,
    pub d_inside: u32,
    pub d_outside: u32,
}

/// Verdict of the Jordan-separating-cycle condition.
#[derive(Debug, Clone)]
pub struct CycleConditionVerdict {
    pub pass: bool,
    pub counterexample: Option<CycleCounterexample>,
    /// Length bound actually searched.
    pub searched_up_to: usize,
    /// True when the verdict is exact: either every cycle was examined or
    /// the skipped lengths provably cannot violate the condition.
    pub exact: bool,
}

/// Check that no cycle Jordan-separates two vertices both farther from the
/// cycle than the cycle's diameter.
///
/// A violating cycle `C` forces `d(a,b) >= 2*diam(C) + 2` across it, and
/// `d(a,b) <= diam(H)`, so only cycles of length below `diam(H)` can ever
/// violate; the search space is capped there without loss of exactness.
/// A caller-supplied `max_len` below that cap makes the verdict inexact
/// ("pass up to the searched length"). The cycle's diameter is measured
/// along the cycle itself.
pub fn cycle_condition(
    h: &PlaneGraph,
    max_len: Option<usize>,
    budget: Option<usize>,
) -> Result<CycleConditionVerdict> {
    let g = h.graph();
    let profile = g.eccentricity_profile()?;
    let sound_cap = (profile.diameter as usize).saturating_sub(1);
    let cap = max_len.map_or(sound_cap, |m| m.min(sound_cap));
    let exact = cap >= sound_cap;
    let budget = budget.unwrap_or(1_000_000);

    let mut verdict = CycleConditionVerdict {
        pass: true,
        counterexample: None,
        searched_up_to: cap,
        exact,
    };
    if cap < 3 {
        return Ok(verdict);
    }

    let cycles = simple_cycles_up_to(g, cap, budget)?;
    for cycle in cycles {
        let sides = h.cycle_sides(&cycle)?;
        if sides.side_a.is_empty() || sides.side_b.is_empty() {
            continue;
        }
        let cyc_diam = (cycle.len() / 2) as u32;
        let dist = |v: usize| -> u32 {
            cycle
                .iter()
                .map(|&c| g.distances().dist(v, c))
                .min()
                .expect("cycle non-empty")
        };
        let far_a = sides.side_a.iter().copied().find(|&v| dist(v) > cyc_diam);
        let far_b = sides.side_b.iter().copied().find(|&v| dist(v) > cyc_diam);
        if let (Some(a), Some(b)) = (far_a, far_b) {
            verdict.pass = false;
            verdict.counterexample = Some(CycleCounterexample {
                cycle: cycle.clone(),
                cycle_diameter: cyc_diam,
                inside: a,
                outside: b,
                d_inside: dist(a),
                d_outside: dist(b),
            });
            return Ok(verdict);
        }
    }
    Ok(verdict)
}

/// All simple cycles of length `3..=cap`, each reported once (smallest
/// vertex first, orientation fixed by its second-smallest endpoint).
pub fn simple_cycles_up_to(
    g: &crate::graph::Graph,
    cap: usize,
    budget: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut visited = 0usize;
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        g: &crate::graph::Graph,
        root: usize,
        cap: usize,
        budget: usize,
        visited: &mut usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let last = *path.last().expect("path non-empty");
        for &next in g.neighbors(last) {
            if next == root && path.len() >= 3 {
                // close the cycle; keep one orientation per cycle
                if path[1] < *path.last().expect("len >= 3") {
                    out.push(path.clone());
                }
                continue;
            }
            if next <= root || on_path[next] || path.len() >= cap {
                continue;
            }
            *visited += 1;
            if *visited > budget {
                return Err(Error::TooLarge(format!(
                    "cycle search exceeded {budget} steps (length cap {cap})"
                )));
            }
            path.push(next);
            on_path[next] = true;
            dfs(g, root, cap, budget, visited, path, on_path, out)?;
            on_path[next] = false;
            path.pop();
        }
        Ok(())
    }

    for root in 0..n {
        path.clear();
        path.push(root);
        on_path[root] = true;
        dfs(g, root, cap, budget, &mut visited, &mut path, &mut on_path, &mut out)?;
        on_path[root] = false;
    }
    Ok(out)
}

/// Property harness: whenever the face criterion passes at `alpha`, the
/// cycle condition must pass as well. Returns true when the implication
/// holds on this instance.
pub fn check_qef_implies_cycle(h: &PlaneGraph, alpha: u32) -> Result<bool> {
    let qef = qef_criterion(h, alpha)?;
    if !qef.pass {
        return Ok(true);
    }
    let cyc = cycle_condition(h, None, None)?;
    Ok(cyc.pass)
}

/// First face whose boundary dominates the whole vertex set, if any.
pub fn has_dominating_face(h: &PlaneGraph) -> Result<Option<FaceRef>> {
    let g = h.graph();
    let all: Vec<usize> = (0..g.order()).collect();
    for face in h.faces() {
        if g.dominates(&face.boundary, &all)? {
            return Ok(Some(face));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, octahedron};
    use crate::plane::PlaneGraph;

    #[test]
    fn self_centered_inputs_pass_vacuously() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        let v = qef_criterion(&pg, 2).unwrap();
        assert!(v.pass);
        assert!(v.witnesses.is_empty());
    }

    #[test]
    fn alpha_below_diameter_is_rejected() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        assert!(matches!(
            qef_criterion(&pg, 1),
            Err(Error::AlphaTooSmall { alpha: 1, min: 2 })
        ));
    }

    #[test]
    fn k4_passes_above_diameter_with_witnesses() {
        let pg = PlaneGraph::mpg(complete_graph(4)).unwrap();
        let v = qef_criterion(&pg, 2).unwrap();
        assert!(v.pass);
        assert_eq!(v.witnesses.len(), 4);
        // preferred witnesses avoid faces containing the vertex
        for (&u, &f) in &v.witnesses {
            assert!(!pg.face_walk(f).contains(&u));
        }
    }

    #[test]
    fn diameter_two_mpg_passes_cycle_condition_by_counting() {
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        let v = cycle_condition(&pg, None, None).unwrap();
        assert!(v.pass);
        assert!(v.exact);
        // nothing worth searching below length 3
        assert!(v.searched_up_to < 3);
    }

    #[test]
    fn implication_holds_on_small_inputs() {
        for g in [complete_graph(4), octahedron()] {
            let pg = PlaneGraph::mpg(g).unwrap();
            let d = pg.graph().eccentricity_profile().unwrap().diameter;
            assert!(check_qef_implies_cycle(&pg, d).unwrap());
        }
    }

    #[test]
    fn k4_has_a_dominating_face_octahedron_too() {
        let pg = PlaneGraph::mpg(complete_graph(4)).unwrap();
        assert!(has_dominating_face(&pg).unwrap().is_some());
        // every octahedron vertex misses only its antipode, which is
        // adjacent to the other two corners of any face
        let pg = PlaneGraph::mpg(octahedron()).unwrap();
        assert!(has_dominating_face(&pg).unwrap().is_some());
    }

    #[test]
    fn cycle_enumeration_counts() {
        let k4 = complete_graph(4);
        let cycles = simple_cycles_up_to(&k4, 4, 10_000).unwrap();
        // K4 has 4 triangles and 3 quadrilaterals
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn exhausted_budget_reports_too_large() {
        let fx = crate::fixtures::load_fixture("cycle-not-qef").unwrap();
        let pg = fx.plane.as_ref().unwrap();
        assert!(matches!(
            cycle_condition(pg, None, Some(1)),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn user_cap_below_the_sound_cap_is_inexact() {
        let fx = crate::fixtures::load_fixture("cycle-not-qef").unwrap();
        let pg = fx.plane.as_ref().unwrap();
        let v = cycle_condition(pg, Some(0), None).unwrap();
        assert!(v.pass && !v.exact);
    }
}
