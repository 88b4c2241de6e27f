//! Independent reference implementations used to cross-check the main code
//! paths: exhaustive small-order generation, brute-force isomorphism, and a
//! plain-loop quasi-eccentricity evaluator. Everything here favors
//! obviousness over speed and stays off the paths it is checking.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::Graph;
use crate::plane::PlaneGraph;

/// Backtracking graph isomorphism for small graphs, with degree pruning.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        a: &Graph,
        b: &Graph,
        da: &[usize],
        db: &[usize],
        assign: &mut [usize],
        used: &mut [bool],
        v: usize,
    ) -> bool {
        let n = a.order();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || da[v] != db[w] {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(assign[u], w));
            if consistent {
                assign[v] = w;
                used[w] = true;
                if extend(a, b, da, db, assign, used, v + 1) {
                    return true;
                }
                used[w] = false;
                assign[v] = usize::MAX;
            }
        }
        false
    }

    extend(a, b, &da, &db, &mut assign, &mut used, 0)
}

fn combinations(pool: usize, take: usize) -> impl Iterator<Item = Vec<usize>> {
    // plain lexicographic k-combinations of 0..pool
    let mut state: Option<Vec<usize>> = if take <= pool {
        Some((0..take).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let current = state.clone()?;
        let next = {
            let mut c = current.clone();
            let mut i = take;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] != i + pool - take {
                    c[i] += 1;
                    for j in (i + 1)..take {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        state = next;
        Some(current)
    })
}

/// Exhaustive generation of maximal planar graphs of order `n <= 7`: run
/// through every edge set of the right size, keep those recognized as
/// maximal planar, and bucket them by brute-force isomorphism.
///
/// Returns one representative per class plus the total count of labeled
/// graphs examined per class.
pub fn exhaustive_mpg_classes(n: usize) -> Result<Vec<(Graph, usize)>> {
    assert!((4..=7).contains(&n), "exhaustive oracle is budgeted for n in 4..=7");
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = 3 * n - 6;
    let mut classes: Vec<(Graph, usize)> = Vec::new();
    for combo in combinations(all_pairs.len(), m) {
        let edges: Vec<(usize, usize)> = combo.iter().map(|&i| all_pairs[i]).collect();
        // cheap degree screen before building anything
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d < 3) {
            continue;
        }
        let g = Graph::new(n, &edges)?;
        if PlaneGraph::mpg(g.clone()).is_err() {
            continue;
        }
        match classes.iter_mut().find(|(rep, _)| brute_force_isomorphic(rep, &g)) {
            Some((_, count)) => *count += 1,
            None => classes.push((g, 1)),
        }
    }
    Ok(classes)
}

/// Every labeled maximal planar graph of order `n <= 7`.
pub fn exhaustive_labeled_mpgs(n: usize) -> Result<Vec<Graph>> {
    assert!((4..=7).contains(&n));
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = 3 * n - 6;
    let mut out = Vec::new();
    for combo in combinations(all_pairs.len(), m) {
        let edges: Vec<(usize, usize)> = combo.iter().map(|&i| all_pairs[i]).collect();
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d < 3) {
            continue;
        }
        let g = Graph::new(n, &edges)?;
        if PlaneGraph::mpg(g.clone()).is_ok() {
            out.push(g);
        }
    }
    Ok(out)
}

/// All connected graphs on `n <= 6` vertices, one per isomorphism class.
/// Dedup is by the minimum edge bitmask over all vertex permutations.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "bitmask oracle is budgeted for n in 1..=6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let bits = pairs.len();
    let pair_index = |u: usize, v: usize| -> usize {
        pairs
            .iter()
            .position(|&(a, b)| (a, b) == (u.min(v), u.max(v)))
            .expect("pair exists")
    };
    // edge-index relabeling for every vertex permutation
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(pairs.iter().map(|&(u, v)| pair_index(p[u], p[v])).collect());
        if !next_permutation(&mut p) {
            break;
        }
    }

    let connected = |mask: u32| -> bool {
        let mut reach = 1u32;
        loop {
            let mut grew = false;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let (bu, bv) = (1u32 << u, 1u32 << v);
                    if reach & bu != 0 && reach & bv == 0 {
                        reach |= bv;
                        grew = true;
                    } else if reach & bv != 0 && reach & bu == 0 {
                        reach |= bu;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        reach.count_ones() as usize == n
    };

    let mut seen: HashSet<u32> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << bits) {
        if !connected(mask) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|lut| {
                let mut m = 0u32;
                for i in 0..bits {
                    if mask & (1 << i) != 0 {
                        m |= 1 << lut[i];
                    }
                }
                m
            })
            .min()
            .expect("at least the identity permutation");
        if seen.insert(canon) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| canon & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::new(n, &edges).expect("mask describes a simple graph"));
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Quasi-eccentric set straight from the defining quantifiers, written as
/// plain loops over BFS rows.
pub fn qcc_by_definition(g: &Graph, s: &[usize]) -> Vec<usize> {
    let n = g.order();
    let rows: Vec<Vec<Option<u32>>> = (0..n)
        .map(|v| g.bfs_distances(v).expect("in range"))
        .collect();
    let mut result = Vec::new();
    for u in 0..n {
        let mut qualifies = true;
        for v in 0..n {
            let mut some_target_works = false;
            for &t in s {
                let du = rows[u][t].expect("connected");
                let dv = rows[v][t].expect("connected");
                if du >= dv {
                    some_target_works = true;
                    break;
                }
            }
            if !some_target_works {
                qualifies = false;
                break;
            }
        }
        if qualifies {
            result.push(u);
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, octahedron, path_graph};

    #[test]
    fn isomorphism_on_small_pairs() {
        assert!(brute_force_isomorphic(&cycle_graph(5), &cycle_graph(5)));
        assert!(!brute_force_isomorphic(&cycle_graph(6), &path_graph(6)));
        let relabeled = Graph::new(4, &[(3, 2), (2, 1), (1, 0), (0, 3), (3, 1), (0, 2)]).unwrap();
        assert!(brute_force_isomorphic(&complete_graph(4), &relabeled));
    }

    #[test]
    fn exhaustive_counts_match_known_values() {
        assert_eq!(exhaustive_mpg_classes(4).unwrap().len(), 1);
        assert_eq!(exhaustive_mpg_classes(5).unwrap().len(), 1);
        assert_eq!(exhaustive_mpg_classes(6).unwrap().len(), 2);
    }

    #[test]
    fn labeled_count_at_order_five() {
        // every 9-edge graph on 5 vertices is K5 minus one edge
        assert_eq!(exhaustive_labeled_mpgs(5).unwrap().len(), 10);
    }

    #[test]
    fn connected_class_counts() {
        assert_eq!(connected_graphs_up_to_iso(1).len(), 1);
        assert_eq!(connected_graphs_up_to_iso(2).len(), 1);
        assert_eq!(connected_graphs_up_to_iso(3).len(), 2);
        assert_eq!(connected_graphs_up_to_iso(4).len(), 6);
        assert_eq!(connected_graphs_up_to_iso(5).len(), 21);
    }

    #[test]
    fn definitional_qcc_matches_main_path() {
        use crate::qcc::qcc_set;
        let g = octahedron();
        for s in [vec![0usize], vec![0, 1], vec![0, 1, 2], vec![3, 4]] {
            let fast = qcc_set(&g, &s).unwrap().qcc;
            let slow = qcc_by_definition(&g, &s);
            assert_eq!(fast, slow);
        }
    }
}
