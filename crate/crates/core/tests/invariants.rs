//! Structural invariants checked over the enumerated corpus: definitional
//! oracles, witness soundness, and the relations between the two criteria.

use planar_center::criteria::{cycle_condition, has_dominating_face, qef_criterion,
                               simple_cycles_up_to};
use planar_center::enumerate::{canonical_code, diagonal_flip, enumerate_mpgs};
use planar_center::fixtures::load_fixture;
use planar_center::gadget::{glue, Gadget, GadgetSpec};
use planar_center::graph::{complete_graph, Graph};
use planar_center::oracle::{brute_force_isomorphic, exhaustive_labeled_mpgs, qcc_by_definition};
use planar_center::plane::PlaneGraph;
use planar_center::qcc::qcc_set;

#[test]
fn qcc_matches_the_definition_on_every_face() {
    for n in 4..=8 {
        for pg in enumerate_mpgs(n).unwrap() {
            let g = pg.graph();
            for face in pg.faces() {
                let fast = qcc_set(g, &face.boundary).unwrap();
                let slow = qcc_by_definition(g, &face.boundary);
                assert_eq!(fast.qcc, slow, "order {n}, face {:?}", face.boundary);
                // eccentric vertices are always quasi-eccentric
                for e in &fast.ecc {
                    assert!(fast.qcc.contains(e));
                }
            }
        }
    }
}

#[test]
fn dominating_sets_make_outsiders_quasi_eccentric() {
    for n in 4..=7 {
        for pg in enumerate_mpgs(n).unwrap() {
            let g = pg.graph();
            let all: Vec<usize> = (0..g.order()).collect();
            for face in pg.faces() {
                if !g.dominates(&face.boundary, &all).unwrap() {
                    continue;
                }
                let q = qcc_set(g, &face.boundary).unwrap();
                for u in 0..g.order() {
                    if !face.boundary.contains(&u) {
                        assert!(q.qcc.contains(&u), "order {n}: dominated outsider {u} missing");
                    }
                }
            }
        }
    }
}

#[test]
fn jordan_separation_implies_separation_never_conversely() {
    for n in 4..=7 {
        for pg in enumerate_mpgs(n).unwrap() {
            let g = pg.graph();
            for cycle in simple_cycles_up_to(g, g.order(), 1_000_000).unwrap() {
                if pg.is_jordan_separating(&cycle).unwrap() {
                    assert!(
                        g.is_separating_set(&cycle).unwrap().separates,
                        "order {n}: Jordan-separating cycle {cycle:?} does not separate"
                    );
                }
            }
        }
    }
    // the converse fails: a separating cycle that is not Jordan separating
    let fx = load_fixture("sep-cycles").unwrap();
    let pg = fx.plane.as_ref().unwrap();
    let quad = vec![4, 2, 5, 1];
    assert!(fx.graph.is_separating_set(&quad).unwrap().separates);
    assert!(!pg.is_jordan_separating(&quad).unwrap());
}

#[test]
fn qef_witnesses_are_sound_and_alpha_free() {
    for n in 4..=8 {
        for pg in enumerate_mpgs(n).unwrap() {
            let diam = pg.graph().eccentricity_profile().unwrap().diameter;
            let v0 = qef_criterion(&pg, diam).unwrap();
            for (&u, &f) in &v0.witnesses {
                let q = qcc_set(pg.graph(), pg.face_walk(f)).unwrap();
                assert!(q.qcc.contains(&u), "order {n}: witness face {f} does not cover {u}");
            }
            // the criterion's truth value does not depend on alpha
            for extra in [1, 2] {
                let v = qef_criterion(&pg, diam + extra).unwrap();
                assert_eq!(v0.pass, v.pass, "order {n}: verdict changed at alpha+{extra}");
            }
        }
    }
}

#[test]
fn cycle_counterexamples_re_verify() {
    // two towers glued base to base across one triangle: the shared triangle
    // separates the two apexes, both at distance three from it
    let tri = PlaneGraph::mpg(complete_graph(3)).unwrap();
    let tower = Gadget::build(GadgetSpec::plain(3)).unwrap();
    let face = tri.face(0);
    let once = glue(&tri, &face, &tower, face.triangle().unwrap()).unwrap().plane;
    let back = once
        .faces()
        .find(|f| f.triangle().map(|t| t == [0, 1, 2]).unwrap_or(false))
        .expect("original triangle still bounds a face");
    let both = glue(&once, &back, &tower, back.triangle().unwrap()).unwrap().plane;

    let verdict = cycle_condition(&both, None, None).unwrap();
    assert!(!verdict.pass);
    let ce = verdict.counterexample.expect("failing verdict carries a witness");
    let g = both.graph();
    let dist = |v: usize| {
        ce.cycle
            .iter()
            .map(|&c| g.distances().dist(v, c))
            .min()
            .unwrap()
    };
    assert!(dist(ce.inside) > ce.cycle_diameter);
    assert!(dist(ce.outside) > ce.cycle_diameter);
    assert_eq!(ce.cycle_diameter as usize, ce.cycle.len() / 2);
    let sides = both.cycle_sides(&ce.cycle).unwrap();
    let across = (sides.side_a.contains(&ce.inside) && sides.side_b.contains(&ce.outside))
        || (sides.side_b.contains(&ce.inside) && sides.side_a.contains(&ce.outside));
    assert!(across, "counterexample pair must straddle the cycle");
}

#[test]
fn canonical_codes_partition_like_brute_force() {
    for n in 4..=7 {
        let labeled = exhaustive_labeled_mpgs(n).unwrap();
        let mut groups: Vec<(planar_center::enumerate::CanonicalCode, Vec<Graph>)> = Vec::new();
        for g in labeled {
            let code = canonical_code(&PlaneGraph::mpg(g.clone()).unwrap());
            match groups.iter_mut().find(|(c, _)| *c == code) {
                Some((_, members)) => members.push(g),
                None => groups.push((code, vec![g])),
            }
        }
        // equal codes => isomorphic
        for (_, members) in &groups {
            for m in &members[1..] {
                assert!(brute_force_isomorphic(&members[0], m), "order {n}: code collision");
            }
        }
        // distinct codes => non-isomorphic
        for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                assert!(
                    !brute_force_isomorphic(&groups[i].1[0], &groups[j].1[0]),
                    "order {n}: isomorphic graphs received distinct codes"
                );
            }
        }
    }
}

#[test]
fn flip_reaches_the_other_order_six_class() {
    let stacked = planar_center::enumerate::stacked_triangulation(6).unwrap();
    let octa_code = canonical_code(&PlaneGraph::mpg(planar_center::graph::octahedron()).unwrap());
    let mut reached = false;
    for &(u, v) in stacked.graph().edges() {
        if let Some(f) = diagonal_flip(&stacked, u, v).unwrap() {
            if canonical_code(&f) == octa_code {
                reached = true;
            }
        }
    }
    assert!(reached, "one flip from the stacked class must reach the other class");
}

#[test]
fn every_face_is_a_non_separating_triangle() {
    for n in 4..=7 {
        for pg in enumerate_mpgs(n).unwrap() {
            assert_eq!(pg.face_count(), 2 * n - 4);
            for face in pg.faces() {
                let tri = face.triangle().unwrap();
                assert!(!pg.graph().is_separating_set(&tri).unwrap().separates);
            }
            // every edge lies on exactly two faces
            for &(u, v) in pg.graph().edges() {
                assert_eq!(pg.faces_of_edge(u, v).len(), 2);
            }
        }
    }
}

#[test]
fn implication_harness_over_the_corpus() {
    use planar_center::criteria::check_qef_implies_cycle;
    for n in 4..=7 {
        for pg in enumerate_mpgs(n).unwrap() {
            let d = pg.graph().eccentricity_profile().unwrap().diameter;
            assert!(check_qef_implies_cycle(&pg, d).unwrap(), "order {n}");
        }
    }
    // vacuous direction: the separating fixture fails the face criterion
    let fx = load_fixture("cycle-not-qef").unwrap();
    assert!(check_qef_implies_cycle(fx.plane.as_ref().unwrap(), 4).unwrap());
}

#[test]
fn fixtures_round_trip_through_json() {
    use planar_center::io::{parse_graph_json, GraphJson};
    for name in planar_center::fixtures::all_fixture_names() {
        let fx = load_fixture(name).unwrap();
        let Some(pg) = fx.plane.as_ref() else { continue };
        if !pg.is_maximal_plane() {
            continue;
        }
        let text = serde_json::to_string(&GraphJson::from_plane(pg)).unwrap();
        let back = parse_graph_json(&text).unwrap().to_plane().unwrap();
        assert_eq!(canonical_code(pg), canonical_code(&back), "{name}");
    }
}

#[test]
fn order_eight_fixture_is_the_exact_center_of_its_trimmed_host() {
    use planar_center::synthesis::build_center_host;
    let fx = load_fixture("h1").unwrap();
    let report = build_center_host(fx.plane.as_ref().unwrap(), 6).unwrap();
    assert!(report.is_exact_center);
    assert_eq!(report.radius, 6);
    assert_eq!(report.far_witness_ok, Some(true));
}

#[test]
fn every_dispatch_case_synthesizes_end_to_end() {
    use planar_center::qcc::{classify_case, face_configuration, CaseKind, Corner, CornerPair,
                              CornerSet};
    use planar_center::synthesis::{build_face_extension, build_supergraph};

    // orders 4..=8 exercise cases 3, 4.1, 5.1, 5.2, 5.3 and 6 through the
    // acceptance suite; the two leftovers get pinned instances here.

    // a ten-vertex class whose face {1,2,6} pairs a lone high corner with an
    // occupied low pair, demanding the far-pair decoration
    let edges = [
        (0, 1), (0, 3), (0, 5), (0, 7), (0, 8), (0, 9), (1, 2), (1, 3), (1, 5), (1, 6),
        (1, 8), (1, 9), (2, 3), (2, 4), (2, 6), (3, 4), (3, 5), (3, 8), (4, 6), (4, 8),
        (5, 7), (5, 9), (6, 8), (7, 9),
    ];
    let pg = PlaneGraph::mpg(Graph::new(10, &edges).unwrap()).unwrap();
    let face = pg
        .faces()
        .find(|f| f.triangle().unwrap() == [1, 2, 6])
        .unwrap();
    let cfg = face_configuration(&pg, &face).unwrap();
    let label = classify_case(&cfg).unwrap();
    assert_eq!(label.kind, CaseKind::Case4_2);
    let diam = pg.graph().eccentricity_profile().unwrap().diameter;
    let (_, decision) = build_face_extension(&pg, &face, diam + 1).unwrap();
    let spec = decision.gadget.expect("no exemption above the diameter");
    assert_eq!(spec.far_singles, CornerSet::from_iter([Corner::Y, Corner::Z]));
    assert!(spec.far_pairs[CornerPair::YZ as usize]);
    let report = build_supergraph(&pg, diam + 1).unwrap();
    assert_eq!(report.radius, diam + 1);
    assert!(report.is_center_subset);

    // an order-nine class with an all-low-level face (no high members at all)
    let mut found_case1 = false;
    'outer: for pg in enumerate_mpgs(9).unwrap() {
        for face in pg.faces() {
            let cfg = face_configuration(&pg, &face).unwrap();
            let label = classify_case(&cfg).unwrap();
            if label.kind != CaseKind::Case1 {
                continue;
            }
            let diam = pg.graph().eccentricity_profile().unwrap().diameter;
            if planar_center::criteria::qef_criterion(&pg, diam + 1).unwrap().pass {
                let (_, decision) = build_face_extension(&pg, &face, diam + 1).unwrap();
                let spec = decision.gadget.expect("not exempt above the diameter");
                assert!(spec.far_singles.is_empty());
                assert_eq!(spec.depth, diam + 1 - cfg.base);
                let report = build_supergraph(&pg, diam + 1).unwrap();
                assert_eq!(report.radius, diam + 1);
                found_case1 = true;
                break 'outer;
            }
        }
    }
    assert!(found_case1, "no all-low-level face found among passing order-9 classes");
}

#[test]
fn dominating_face_matches_brute_force() {
    for name in ["g-star", "disc-center", "k3-k2bar", "k3-k2bar-host", "h1", "h2"] {
        let fx = load_fixture(name).unwrap();
        let pg = fx.plane.as_ref().unwrap();
        let g = pg.graph();
        let all: Vec<usize> = (0..g.order()).collect();
        let brute = pg
            .faces()
            .find(|f| g.dominates(&f.boundary, &all).unwrap());
        let fast = has_dominating_face(pg).unwrap();
        assert_eq!(brute.map(|f| f.id), fast.map(|f| f.id), "{name}");
    }
}
