//! Graph streams for tests, scans and examples: non-isomorphic trees,
//! unicyclic graphs and general graphs, plus random necklaces and books.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{bits, parse_graph6, Graph};

/// Non-isomorphic graphs on `n <= 7` vertices from the bundled graph6 lists.
pub fn atlas(n: usize) -> Vec<Graph> {
    let text = match n {
        1 => include_str!("../data/graphs_n1.g6"),
        2 => include_str!("../data/graphs_n2.g6"),
        3 => include_str!("../data/graphs_n3.g6"),
        4 => include_str!("../data/graphs_n4.g6"),
        5 => include_str!("../data/graphs_n5.g6"),
        6 => include_str!("../data/graphs_n6.g6"),
        7 => include_str!("../data/graphs_n7.g6"),
        _ => return Vec::new(),
    };
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).expect("bundled graph6 is valid"))
        .collect()
}

/// AHU code of the tree hanging at `root`, not entering `blocked`.
fn rooted_code(g: &Graph, root: usize, parent: usize, blocked: u64) -> String {
    let mut kids: Vec<String> = g
        .neighbors(root)
        .filter(|&c| c != parent && blocked >> c & 1 == 0)
        .map(|c| rooted_code(g, c, root, blocked))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_code(g: &Graph) -> String {
    let n = g.order();
    // strip leaves layer by layer down to the center(s)
    let mut alive = g.vertex_mask();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    while alive.count_ones() > 2 {
        let leaves: Vec<usize> = bits(alive).filter(|&v| deg[v] <= 1).collect();
        for &v in &leaves {
            alive &= !(1u64 << v);
            for u in g.neighbors(v) {
                deg[u] = deg[u].saturating_sub(1);
            }
        }
    }
    bits(alive)
        .map(|c| rooted_code(g, c, usize::MAX, 0))
        .min()
        .unwrap_or_default()
}

fn add_leaf(g: &Graph, at: usize) -> Graph {
    let n = g.order();
    let mut edges = g.edges();
    edges.push((at, n));
    Graph::from_edges(n + 1, &edges)
}

/// All non-isomorphic trees on `n` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(String::new(), Graph::empty(1));
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for v in 0..g.order() {
                let h = add_leaf(g, v);
                next.entry(tree_code(&h)).or_insert(h);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn unicyclic_code(g: &Graph) -> String {
    let cycle = crate::families::necklace_cycles(g)
        .and_then(|c| c.into_iter().next())
        .expect("unicyclic graph has one cycle");
    let mask = cycle.iter().fold(0u64, |m, &v| m | 1u64 << v);
    let codes: Vec<String> = cycle
        .iter()
        .map(|&v| rooted_code(g, v, usize::MAX, mask))
        .collect();
    let k = codes.len();
    let mut best: Option<String> = None;
    for start in 0..k {
        for dir in [1, k - 1] {
            let s: String = (0..k)
                .map(|i| codes[(start + i * dir) % k].as_str())
                .collect::<Vec<_>>()
                .join(",");
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
    }
    best.unwrap_or_default()
}

/// All non-isomorphic connected unicyclic graphs on `n` vertices.
pub fn unicyclic(n: usize) -> Vec<Graph> {
    if n < 3 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let c3 = Graph::cycle(3);
    level.insert(unicyclic_code(&c3), c3);
    for m in 4..=n {
        let mut next = BTreeMap::new();
        let c = Graph::cycle(m);
        next.insert(unicyclic_code(&c), c);
        for g in level.values() {
            for v in 0..g.order() {
                let h = add_leaf(g, v);
                next.entry(unicyclic_code(&h)).or_insert(h);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Per-vertex invariant used to bucket and to prune isomorphism search.
fn vertex_invariants(g: &Graph) -> Invariants {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let nm = g.neighbor_mask(v);
            let tri = bits(nm)
                .map(|u| (g.neighbor_mask(u) & nm).count_ones() as usize)
                .sum::<usize>()
                / 2;
            (g.degree(v), nd, tri)
        })
        .collect()
}

fn isomorphic(
    a: &Graph,
    b: &Graph,
    ia: &[(usize, Vec<usize>, usize)],
    ib: &[(usize, Vec<usize>, usize)],
) -> bool {
    fn extend(
        a: &Graph,
        b: &Graph,
        ia: &[(usize, Vec<usize>, usize)],
        ib: &[(usize, Vec<usize>, usize)],
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        let i = map.len();
        if i == a.order() {
            return true;
        }
        for v in 0..b.order() {
            if used >> v & 1 == 1 || ia[i] != ib[v] {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .all(|(j, &w)| a.has_edge(i, j) == b.has_edge(v, w))
            {
                map.push(v);
                if extend(a, b, ia, ib, map, used | 1u64 << v) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    a.order() == b.order() && a.size() == b.size() && extend(a, b, ia, ib, &mut Vec::new(), 0)
}

type Invariants = Vec<(usize, Vec<usize>, usize)>;

/// All non-isomorphic graphs on `n` vertices by vertex augmentation with
/// invariant bucketing and a backtracking isomorphism test. Practical for `n <= 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut buckets: HashMap<Invariants, Vec<(Graph, Invariants)>> = HashMap::new();
        let mut out = Vec::new();
        for g in &level {
            for nb in 0u64..1 << m {
                let mut edges = g.edges();
                edges.extend(bits(nb).map(|u| (u, m)));
                let h = Graph::from_edges(m + 1, &edges);
                let inv = vertex_invariants(&h);
                let mut key = inv.clone();
                key.sort();
                let bucket = buckets.entry(key).or_default();
                if !bucket.iter().any(|(k, ik)| isomorphic(&h, k, &inv, ik)) {
                    bucket.push((h.clone(), inv));
                    out.push(h);
                }
            }
        }
        level = out;
    }
    level
}

/// Random connected necklace with at most `max_n` vertices: cycles of length
/// 3 to 6 and pendant vertices, each attached at a vertex that is on no cycle yet
/// or through a new bridge.
pub fn random_necklace<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let max_n = max_n.max(3);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut on_cycle: Vec<bool> = vec![false];
    let target = rng.gen_range(3..=max_n);
    while on_cycle.len() < target {
        let n = on_cycle.len();
        let room = target - n;
        let at = rng.gen_range(0..n);
        if room >= 2 && rng.gen_bool(0.55) {
            let len = rng.gen_range(3..=6usize).min(room + 1);
            if len < 3 {
                continue;
            }
            // share `at` when it is free, otherwise hang the cycle from a bridge
            let (first, fresh) = if !on_cycle[at] {
                (at, len - 1)
            } else if room > len {
                edges.push((at, n));
                on_cycle.push(false);
                (n, len - 1)
            } else {
                continue;
            };
            let base = on_cycle.len();
            let mut prev = first;
            for i in 0..fresh {
                edges.push((prev, base + i));
                prev = base + i;
                on_cycle.push(true);
            }
            edges.push((prev, first));
            on_cycle[first] = true;
        } else {
            edges.push((at, n));
            on_cycle.push(false);
        }
    }
    Graph::from_edges(on_cycle.len(), &edges)
}

/// Random book with at most `max_n` vertices: binding edge `0-1`, two to four
/// pages of length 3 to 6, then random pendant trees.
pub fn random_book<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let max_n = max_n.max(4);
    loop {
        let m = rng.gen_range(2..=4usize);
        let mut lens: Vec<usize> = (0..m).map(|_| rng.gen_range(3..=6usize)).collect();
        lens.shuffle(rng);
        let core: usize = 2 + lens.iter().map(|l| l - 2).sum::<usize>();
        if core > max_n {
            continue;
        }
        let mut edges = vec![(0, 1)];
        let mut n = 2;
        for &t in &lens {
            let mut prev = 0;
            for _ in 0..t - 2 {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, 1));
        }
        let extra = rng.gen_range(0..=max_n - core);
        for _ in 0..extra {
            let at = rng.gen_range(0..n);
            edges.push((at, n));
            n += 1;
        }
        // scramble labels so the binding edge is not always 0-1
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        return Graph::from_edges(n, &edges).relabel(&perm);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{classify_kind, Kind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn unicyclic_counts() {
        let counts: Vec<usize> = (3..=9).map(|n| unicyclic(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240]);
    }

    #[test]
    fn generated_graphs_match_atlas_counts() {
        for n in 1..=6 {
            assert_eq!(all_graphs(n).len(), atlas(n).len(), "n = {n}");
        }
    }

    #[test]
    fn random_families_classify() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = random_necklace(&mut rng, 14);
            assert!(g.order() <= 14);
            assert!(
                classify_kind(&g).0.is_necklace_like() || classify_kind(&g).0 == Kind::Complete,
                "{g}"
            );
            let b = random_book(&mut rng, 14);
            assert!(b.order() <= 14);
            assert_eq!(classify_kind(&b).0, Kind::Book, "{b}");
        }
    }
}
