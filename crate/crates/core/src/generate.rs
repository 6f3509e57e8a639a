//! Small-graph generators for exhaustive and randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Coloring, ColoredGraph, Graph};

/// Bit index of the pair `u < v` in an upper-triangular edge mask.
fn pair_bit(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Number of vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph whose edges are the set bits of `mask`, with pairs
/// ordered `(0,1), (0,2), .., (1,2), ..`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask >> pair_bit(n, u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("mask edges are simple")
}

pub fn graph_mask(g: &Graph) -> u64 {
    let n = g.n();
    g.edges().iter().fold(0, |m, &(u, v)| m | 1 << pair_bit(n, u, v))
}

/// Every labeled graph on `n` vertices. Practical up to `n = 6`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "too many labeled graphs");
    (0..1u64 << pair_count(n)).map(move |m| graph_from_mask(n, m))
}

/// Every coloring of `n` vertices with colors `1..=k`, in lexicographic
/// order.
pub fn all_colorings(n: usize, k: usize) -> impl Iterator<Item = Coloring> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut colors = vec![0; n];
        for slot in colors.iter_mut().rev() {
            *slot = (code % k as u64) as usize + 1;
            code /= k as u64;
        }
        Coloring::new(colors, k).expect("colors in range")
    })
}

fn permutations(items: &[usize], out: &mut Vec<Vec<usize>>) {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    go(&mut items.to_vec(), &mut Vec::new(), out);
}

/// Canonical mask of `g`: the least edge mask over all relabelings that put
/// vertices in nondecreasing degree order.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| g.degree(v));
    let mut cells: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut i = 0;
    while i < n {
        let d = g.degree(order[i]);
        let j = (i..n).find(|&j| g.degree(order[j]) != d).unwrap_or(n);
        let mut perms = Vec::new();
        permutations(&order[i..j], &mut perms);
        cells.push(perms);
        i = j;
    }
    let edges = g.edges();
    let mut best = u64::MAX;
    let mut pos = vec![0; n];
    let mut choice = vec![0; cells.len()];
    loop {
        let mut at = 0;
        for (cell, &c) in cells.iter().zip(&choice) {
            for &v in &cell[c] {
                pos[v] = at;
                at += 1;
            }
        }
        let mask = edges.iter().fold(0u64, |m, &(u, v)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            m | 1 << pair_bit(n, a, b)
        });
        best = best.min(mask);
        let mut idx = 0;
        loop {
            if idx == cells.len() {
                return best;
            }
            choice[idx] += 1;
            if choice[idx] < cells[idx].len() {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, built by vertex addition. Practical up to `n = 7`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = std::collections::BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for subset in 0..1u32 << (m - 1) {
                let mut edges = g.edges();
                edges.extend((0..m - 1).filter(|&u| subset >> u & 1 == 1).map(|u| (u, m - 1)));
                let h = Graph::from_edges(m, &edges).expect("simple");
                if seen.insert(canonical_mask(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

pub fn random_coloring<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Coloring {
    Coloring::new((0..n).map(|_| rng.gen_range(1..=k)).collect(), k).expect("colors in range")
}

pub fn random_colored_graph<R: Rng + ?Sized>(n: usize, k: usize, p: f64, rng: &mut R) -> ColoredGraph {
    ColoredGraph::new(random_graph(n, p, rng), random_coloring(n, k, rng)).expect("lengths agree")
}

/// Random labeled tree: each vertex after the first attaches to a uniform
/// earlier vertex, then labels are shuffled.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (label[rng.gen_range(0..v)], label[v])).collect();
    Graph::from_edges(n, &edges).expect("tree edges are simple")
}

/// Whether some bijection maps `a` onto `b` preserving edges and colors.
pub fn colored_isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    let n = a.n();
    if n != b.n() || a.graph().edge_count() != b.graph().edge_count() {
        return false;
    }
    let key = |cg: &ColoredGraph, v: usize| {
        let mut nc: Vec<usize> = cg.graph().neighbors(v).iter().map(|&u| cg.color(u)).collect();
        nc.sort_unstable();
        (cg.color(v), nc)
    };
    let ka: Vec<_> = (0..n).map(|v| key(a, v)).collect();
    let kb: Vec<_> = (0..n).map(|v| key(b, v)).collect();
    let mut sa = ka.clone();
    let mut sb = kb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        v: usize,
        a: &Graph,
        b: &Graph,
        ka: &[(usize, Vec<usize>)],
        kb: &[(usize, Vec<usize>)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == map.len() {
            return true;
        }
        for t in 0..map.len() {
            if used[t] || ka[v] != kb[t] {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], t)) {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if extend(v + 1, a, b, ka, kb, map, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    extend(0, a.graph(), b.graph(), &ka, &kb, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use rand::SeedableRng;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn mask_round_trip() {
        let g = cycle(5).unwrap();
        assert_eq!(graph_from_mask(5, graph_mask(&g)), g);
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_colorings(3, 2).count(), 8);
    }

    #[test]
    fn isomorphism_check() {
        let c = |g: Graph, cols: &[usize]| ColoredGraph::new(g, Coloring::new(cols.to_vec(), 2).unwrap()).unwrap();
        let p = c(path(3).unwrap(), &[1, 2, 1]);
        let q = c(Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap(), &[1, 1, 2]);
        let r = c(Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap(), &[1, 2, 1]);
        assert!(colored_isomorphic(&p, &q));
        assert!(!colored_isomorphic(&p, &r));
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for n in 1..20 {
            assert!(random_tree(n, &mut rng).is_tree());
        }
    }
}
