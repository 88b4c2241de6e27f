//! Randomized invariants over arbitrary connected graphs.

use proptest::prelude::*;

use planar_center::graph::{cartesian_product, Graph};
use planar_center::qcc::qcc_set;

/// Connected graph on 2..=9 vertices: a random attachment tree plus a few
/// random extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9)
        .prop_flat_map(|n| {
            let parents = proptest::collection::vec(0usize..usize::MAX, n - 1);
            let extras = proptest::collection::vec((0usize..n, 0usize..n), 0..=n);
            (Just(n), parents, extras)
        })
        .prop_map(|(n, parents, extras)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p % (i + 1), i + 1))
                .collect();
            for (u, v) in extras {
                if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::new(n, &edges).expect("attachment construction is simple")
        })
}

proptest! {
    #[test]
    fn eccentricity_agrees_with_matrix_rows(g in connected_graph()) {
        let profile = g.eccentricity_profile().unwrap();
        for v in 0..g.order() {
            let row_max = (0..g.order())
                .map(|u| g.distances().dist(v, u))
                .max()
                .unwrap();
            prop_assert_eq!(profile.eccentricity[v], row_max);
        }
        prop_assert_eq!(profile.radius, *profile.eccentricity.iter().min().unwrap());
        prop_assert_eq!(profile.diameter, *profile.eccentricity.iter().max().unwrap());
    }

    #[test]
    fn separator_bound_holds(g in connected_graph(), mask in any::<u64>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if s.is_empty() || s.len() >= n {
            return Ok(());
        }
        let sep = g.is_separating_set(&s).unwrap();
        if !sep.separates {
            return Ok(());
        }
        let dm = g.distances();
        let d_to_s = |v: usize| s.iter().map(|&t| dm.dist(v, t)).min().unwrap();
        for (i, ca) in sep.components.iter().enumerate() {
            for cb in sep.components.iter().skip(i + 1) {
                for &u in ca {
                    for &v in cb {
                        prop_assert!(dm.dist(u, v) >= d_to_s(u) + d_to_s(v));
                    }
                }
            }
        }
    }

    #[test]
    fn connected_subgraph_bound_holds(g in connected_graph(), seed in any::<u64>()) {
        let n = g.order();
        // grow a connected set from a seeded root
        let root = (seed as usize) % n;
        let want = 1 + (seed >> 8) as usize % n;
        let mut set = vec![root];
        let mut i = 0;
        while set.len() < want && i < set.len() {
            for &w in g.neighbors(set[i]) {
                if !set.contains(&w) && set.len() < want {
                    set.push(w);
                }
            }
            i += 1;
        }
        if set.len() == n {
            return Ok(());
        }
        let (sub, _) = g.induced_subgraph(&set).unwrap();
        // the grown set is connected, but its induced diameter bounds walks
        let sub_profile = sub.eccentricity_profile().unwrap();
        let dm = g.distances();
        let d_to_set = |v: usize| set.iter().map(|&t| dm.dist(v, t)).min().unwrap();
        for &u in &set {
            for v in 0..n {
                if !set.contains(&v) {
                    prop_assert!(dm.dist(u, v) <= sub_profile.diameter + d_to_set(v));
                }
            }
        }
    }

    #[test]
    fn eccentric_vertices_are_quasi_eccentric(g in connected_graph(), mask in any::<u64>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if s.is_empty() {
            return Ok(());
        }
        let r = qcc_set(&g, &s).unwrap();
        for e in &r.ecc {
            prop_assert!(r.qcc.contains(e));
        }
        prop_assert!(r.quasi_eccentricity <= r.eccentricity);
        // taking the whole vertex set makes everyone quasi-eccentric
        let all: Vec<usize> = (0..n).collect();
        let r_all = qcc_set(&g, &all).unwrap();
        prop_assert_eq!(r_all.qcc, all);
    }

    #[test]
    fn dominating_sets_cover_quasi_eccentricity(g in connected_graph(), mask in any::<u64>()) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if s.is_empty() {
            return Ok(());
        }
        let all: Vec<usize> = (0..n).collect();
        if !g.dominates(&s, &all).unwrap() {
            return Ok(());
        }
        let r = qcc_set(&g, &s).unwrap();
        for u in 0..n {
            if !s.contains(&u) {
                prop_assert!(r.qcc.contains(&u));
            }
        }
    }

    #[test]
    fn product_counts(g in connected_graph(), h in connected_graph()) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.size(), g.order() * h.size() + h.order() * g.size());
    }
}
