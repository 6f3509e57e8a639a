//! Explicit two-colorings and closed-form class verdicts for the standard
//! families, trees, and paths extended by leaves.
//!
//! Each classifier returns a [`ClassReport`] whose witnesses are built
//! directly from the structure of the graph; no search is involved.

use std::collections::VecDeque;

use crate::balance::{Class, ClassReport};
use crate::error::{input, Error, Result};
use crate::graph::{opposite, ColoredGraph, Coloring, Graph, MultipartiteSpec, BLUE, RED};

fn two(colors: Vec<usize>) -> Coloring {
    Coloring::new(colors, 2).expect("red and blue are in range")
}

/// Fills NBC and CNBC from the PB entry, which coincide with PB when every
/// degree is even, respectively odd.
fn derive_exact_classes(degrees: &[usize], report: &mut ClassReport) {
    let pb = report.witness(Class::Pb).cloned();
    if degrees.iter().all(|d| d % 2 == 0) {
        report.set(Class::Nbc, pb.clone());
    }
    if degrees.iter().all(|d| d % 2 == 1) {
        report.set(Class::Cnbc, pb);
    }
}

/// `start` at positions `1, 4, 5, 8, 9, ...` (1-indexed) and the other
/// color elsewhere.
pub fn double_alternating(len: usize, start: usize) -> Vec<usize> {
    (1..=len)
        .map(|i| if i % 4 <= 1 { start } else { opposite(start) })
        .collect()
}

pub fn classify_path(n: usize) -> Result<ClassReport> {
    if n == 0 {
        return input("path needs at least one vertex");
    }
    let alternating = two((0..n).map(|i| if i % 2 == 0 { RED } else { BLUE }).collect());
    let double = two(double_alternating(n, RED));
    let mut r = ClassReport::new();
    r.set(Class::Csb, Some(alternating.clone()));
    r.set(Class::Sbv, Some(alternating));
    r.set(Class::Osb, Some(double.clone()));
    if n % 2 == 0 || n == 1 {
        r.set(Class::Pb, Some(double));
    }
    let degrees: Vec<usize> = (0..n).map(|i| usize::from(i > 0) + usize::from(i + 1 < n)).collect();
    derive_exact_classes(&degrees, &mut r);
    Ok(r)
}

pub fn classify_cycle(n: usize) -> Result<ClassReport> {
    if n < 3 {
        return input("cycle needs at least three vertices");
    }
    let alternating = two((0..n).map(|i| if i % 2 == 0 { RED } else { BLUE }).collect());
    let mut r = ClassReport::new();
    r.set(Class::Csb, Some(alternating.clone()));
    r.set(Class::Sbv, Some(alternating));
    if n % 4 == 0 {
        let pairs = two((0..n).map(|i| if i % 4 < 2 { RED } else { BLUE }).collect());
        r.set(Class::Osb, Some(pairs.clone()));
        r.set(Class::Pb, Some(pairs));
    }
    derive_exact_classes(&vec![2; n], &mut r);
    Ok(r)
}

/// Wheel with rim `0..n` and hub `n`.
pub fn classify_wheel(n: usize) -> Result<ClassReport> {
    if n < 4 {
        return input("wheel classification needs a rim of at least four vertices");
    }
    // rim position j = index + 1
    let mut colors: Vec<usize> = (1..=n).map(|j| if j % 4 == 1 || j % 4 == 2 { RED } else { BLUE }).collect();
    let mut r = ClassReport::new();
    if n % 4 == 2 {
        colors[n - 4] = BLUE;
        colors[n - 1] = BLUE;
        colors[n - 3] = RED;
        colors[n - 2] = RED;
        colors.push(BLUE);
        let c = two(colors);
        if n == 6 {
            r.set(Class::Csb, Some(c.clone()));
        }
        r.set(Class::Sbv, Some(c));
    } else {
        colors.push(BLUE);
        let c = two(colors);
        r.set(Class::Osb, Some(c.clone()));
        r.set(Class::Sbv, Some(c));
    }
    Ok(r)
}

pub fn classify_complete(n: usize) -> Result<ClassReport> {
    if n == 0 {
        return input("complete graph needs at least one vertex");
    }
    let split = |red: usize| two((0..n).map(|i| if i < red { RED } else { BLUE }).collect());
    let mut r = ClassReport::new();
    if n == 1 {
        for class in [Class::Nbc, Class::Osb, Class::Csb, Class::Sbv, Class::Pb] {
            r.set(class, Some(split(1)));
        }
    } else if n % 2 == 0 {
        let c = split(n / 2);
        for class in [Class::Cnbc, Class::Osb, Class::Csb, Class::Sbv, Class::Pb] {
            r.set(class, Some(c.clone()));
        }
    } else {
        let c = split(n.div_ceil(2));
        r.set(Class::Csb, Some(c.clone()));
        r.set(Class::Sbv, Some(c));
    }
    Ok(r)
}

/// Per-part red counts turned into a coloring; reds come first in a part.
fn part_coloring(spec: &MultipartiteSpec, reds: &[usize]) -> Coloring {
    let mut colors = Vec::with_capacity(spec.n());
    for (&size, &red) in spec.parts().iter().zip(reds) {
        colors.extend((0..size).map(|i| if i < red { RED } else { BLUE }));
    }
    two(colors)
}

/// Even parts split evenly; odd parts alternate between one extra red and
/// one extra blue, in input order.
fn paired_reds(spec: &MultipartiteSpec) -> Vec<usize> {
    let mut odd_seen = 0;
    spec.parts()
        .iter()
        .map(|&p| {
            if p % 2 == 0 {
                p / 2
            } else {
                odd_seen += 1;
                if odd_seen % 2 == 1 {
                    p / 2 + 1
                } else {
                    p / 2
                }
            }
        })
        .collect()
}

fn osb_multipartite(spec: &MultipartiteSpec) -> Option<Coloring> {
    (spec.n() % 2 == 0 || spec.odd_parts() == 1).then(|| part_coloring(spec, &paired_reds(spec)))
}

fn sbv_multipartite(spec: &MultipartiteSpec) -> Option<Coloring> {
    if spec.n() % 2 == 0 {
        return Some(part_coloring(spec, &paired_reds(spec)));
    }
    let (m1, h) = (spec.m1(), spec.h());
    if m1 + 1 < h {
        return None;
    }
    // h - 1 blue singletons, the rest split evenly; with no large odd part
    // the singletons lean red.
    let mut blue_singletons = if h == 0 { m1 / 2 } else { h - 1 + (m1 + 1 - h) / 2 };
    let reds = spec
        .parts()
        .iter()
        .map(|&p| match p {
            1 if blue_singletons > 0 => {
                blue_singletons -= 1;
                0
            }
            1 => 1,
            p if p % 2 == 0 => p / 2,
            p => p / 2 + 1,
        })
        .collect::<Vec<_>>();
    Some(part_coloring(spec, &reds))
}

fn csb_multipartite(spec: &MultipartiteSpec) -> Option<Coloring> {
    let parts = spec.parts();
    let n = spec.n();
    if parts.len() == 1 || parts.iter().all(|&p| p == 1) {
        // Edgeless graphs and complete graphs: `ceil(n/2)` reds in order.
        let mut left = n.div_ceil(2);
        let reds = parts
            .iter()
            .map(|&p| {
                let r = p.min(left);
                left -= r;
                r
            })
            .collect::<Vec<_>>();
        return Some(part_coloring(spec, &reds));
    }
    let (m1, m2, h) = (spec.m1(), spec.m2(), spec.h());
    if n % 2 == 0 {
        if parts.iter().any(|&p| p % 2 == 1 && p > 1) {
            return None;
        }
        let mut red_singletons = m1 / 2;
        let reds = parts
            .iter()
            .map(|&p| match p {
                1 if red_singletons > 0 => {
                    red_singletons -= 1;
                    1
                }
                1 => 0,
                p => p / 2,
            })
            .collect::<Vec<_>>();
        return Some(part_coloring(spec, &reds));
    }
    if parts.iter().any(|&p| p % 2 == 0 && p != 2) || m1 + 1 < h + 2 * m2 {
        return None;
    }
    let mut red_singletons = if h == 0 {
        (m1 + 1 - 2 * m2) / 2
    } else {
        (m1 + 1 - h - 2 * m2) / 2
    };
    let reds = parts
        .iter()
        .map(|&p| match p {
            1 if red_singletons > 0 => {
                red_singletons -= 1;
                1
            }
            1 => 0,
            2 => 2,
            p => p / 2 + 1,
        })
        .collect::<Vec<_>>();
    Some(part_coloring(spec, &reds))
}

fn pb_multipartite(spec: &MultipartiteSpec) -> Option<Coloring> {
    let parts = spec.parts();
    if parts.len() == 1 {
        // No edges: every degree is 0 and every open neighborhood is empty.
        return Some(part_coloring(spec, &[parts[0]]));
    }
    if spec.n() % 2 == 1 || parts.iter().any(|&p| p % 2 == 1 && p > 1) {
        return None;
    }
    let mut red_singletons = spec.m1() / 2;
    let reds = parts
        .iter()
        .map(|&p| match p {
            1 if red_singletons > 0 => {
                red_singletons -= 1;
                1
            }
            1 => 0,
            p => p / 2,
        })
        .collect::<Vec<_>>();
    Some(part_coloring(spec, &reds))
}

/// Verdicts for OSB, CSB, SBV and PB, with NBC and CNBC read off PB and
/// the degree parities.
pub fn classify_complete_multipartite(spec: &MultipartiteSpec) -> ClassReport {
    let mut r = ClassReport::new();
    r.set(Class::Osb, osb_multipartite(spec));
    r.set(Class::Csb, csb_multipartite(spec));
    r.set(Class::Sbv, sbv_multipartite(spec));
    r.set(Class::Pb, pb_multipartite(spec));
    let n = spec.n();
    let degrees: Vec<usize> = spec.parts().iter().map(|&p| n - p).collect();
    derive_exact_classes(&degrees, &mut r);
    r
}

/// An OSB coloring of a tree, grown outward from vertex 0 in BFS order.
/// Each new vertex takes blue when its parent already sees at least as many
/// reds as blues, red otherwise.
pub fn tree_osb_coloring(t: &Graph) -> Result<Coloring> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let mut color = vec![0; n];
    // seen[v] = (red, blue) among colored neighbors of v
    let mut seen = vec![(0usize, 0usize); n];
    color[0] = RED;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &v in t.neighbors(x) {
            if color[v] != 0 {
                continue;
            }
            let (r, b) = seen[x];
            color[v] = if r >= b { BLUE } else { RED };
            for &u in t.neighbors(v) {
                if color[u] != 0 {
                    let e = &mut seen[u];
                    if color[v] == RED { e.0 += 1 } else { e.1 += 1 }
                    let f = &mut seen[v];
                    if color[u] == RED { f.0 += 1 } else { f.1 += 1 }
                }
            }
            queue.push_back(v);
        }
    }
    Coloring::new(color, 2)
}

/// Result of hanging leaves on a 2-colored path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathExtension {
    /// Path vertices keep their indices; leaves follow, grouped by host in
    /// path order.
    pub result: ColoredGraph,
    /// Added leaves that share their host's color. They occur exactly at
    /// interior path vertices whose two path neighbors agree with each other
    /// but not with the vertex itself; no leaf coloring can balance such a
    /// vertex and its leaves at once.
    pub unbalanced: Vec<usize>,
}

/// Path vertices in order, starting from the lowest-indexed endpoint.
fn path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 || !g.is_tree() || (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&u| u != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Hangs leaves on every path vertex so that each path vertex is exactly
/// balanced at its closed neighborhood.
///
/// An endpoint sharing its neighbor's color gets two leaves of the other
/// color; a single vertex gets one. An interior vertex gets three opposite
/// leaves when it agrees with both neighbors, one opposite leaf when the
/// neighbors disagree, and one leaf of its own color when both neighbors
/// carry the other color. The whole caterpillar is balanced at every closed
/// neighborhood exactly when the last case never occurs.
pub fn extend_path_to_cnbc(p: &ColoredGraph) -> Result<PathExtension> {
    if p.k() != 2 {
        return input("path extension needs a 2-coloring");
    }
    let order = path_order(p.graph()).map_or_else(|| input("the input graph is not a path"), Ok)?;
    let n = order.len();
    let c = |i: usize| p.color(order[i]);
    let mut edges = p.graph().edges();
    let mut colors = p.coloring().colors().to_vec();
    let mut unbalanced = Vec::new();
    let mut add = |host: usize, color: usize, count: usize, bad: bool, unbalanced: &mut Vec<usize>| {
        for _ in 0..count {
            let leaf = colors.len();
            colors.push(color);
            edges.push((host, leaf));
            if bad {
                unbalanced.push(leaf);
            }
        }
    };
    for i in 0..n {
        let v = order[i];
        let own = c(i);
        if n == 1 {
            add(v, opposite(own), 1, false, &mut unbalanced);
        } else if i == 0 || i == n - 1 {
            let nb = if i == 0 { c(1) } else { c(n - 2) };
            if nb == own {
                add(v, opposite(own), 2, false, &mut unbalanced);
            }
        } else {
            let (a, b) = (c(i - 1), c(i + 1));
            if a == own && b == own {
                add(v, opposite(own), 3, false, &mut unbalanced);
            } else if a != b {
                add(v, opposite(own), 1, false, &mut unbalanced);
            } else {
                add(v, own, 1, true, &mut unbalanced);
            }
        }
    }
    let graph = Graph::from_edges(colors.len(), &edges)?;
    let result = ColoredGraph::new(graph, Coloring::new(colors, 2)?)?;
    Ok(PathExtension { result, unbalanced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::imbalance;
    use crate::graph::{complete_bipartite, path};

    fn verdicts(r: &ClassReport) -> Vec<&'static str> {
        Class::ALL.into_iter().filter(|&c| r.contains(c)).map(Class::name).collect()
    }

    #[test]
    fn path_patterns() {
        let r = classify_path(6).unwrap();
        assert_eq!(r.witness(Class::Pb).unwrap().colors(), &[1, 2, 2, 1, 1, 2]);
        let r = classify_path(5).unwrap();
        assert_eq!(verdicts(&r), ["OSB", "CSB", "SBV"]);
        let r = classify_path(1).unwrap();
        assert_eq!(verdicts(&r), ["NBC", "OSB", "CSB", "SBV", "PB"]);
        assert!(classify_path(2).unwrap().contains(Class::Cnbc));
    }

    #[test]
    fn cycles_and_wheels() {
        assert!(classify_cycle(8).unwrap().contains(Class::Osb));
        let r = classify_cycle(6).unwrap();
        assert!(!r.contains(Class::Osb) && r.contains(Class::Csb));
        assert_eq!(classify_cycle(4).unwrap().witness(Class::Nbc).unwrap().colors(), &[1, 1, 2, 2]);
        assert_eq!(verdicts(&classify_wheel(7).unwrap()), ["OSB", "SBV"]);
        assert_eq!(verdicts(&classify_wheel(10).unwrap()), ["SBV"]);
        assert_eq!(verdicts(&classify_wheel(6).unwrap()), ["CSB", "SBV"]);
        assert!(classify_wheel(3).is_err());
    }

    #[test]
    fn complete_graphs() {
        assert!(classify_complete(6).unwrap().contains(Class::Cnbc));
        assert_eq!(verdicts(&classify_complete(5).unwrap()), ["CSB", "SBV"]);
    }

    #[test]
    fn multipartite_examples() {
        let k333 = classify_complete_multipartite(&MultipartiteSpec::new(vec![3, 3, 3]).unwrap());
        assert!(verdicts(&k333).is_empty());
        let r = classify_complete_multipartite(&MultipartiteSpec::new(vec![2, 4]).unwrap());
        assert!(r.contains(Class::Pb));
        let r = classify_complete_multipartite(&MultipartiteSpec::new(vec![1, 1, 1, 3, 2]).unwrap());
        assert!(!r.contains(Class::Csb));
    }

    #[test]
    fn witnesses_validate() {
        for n in 1..12 {
            let g = path(n).unwrap();
            assert!(classify_path(n).unwrap().verify(&g).unwrap());
        }
        for (a, b) in [(1, 1), (2, 3), (3, 3), (4, 2)] {
            let spec = MultipartiteSpec::new(vec![a, b]).unwrap();
            let g = complete_bipartite(a, b).unwrap();
            let r = classify_complete_multipartite(&spec);
            assert!(r.contains(Class::Osb));
            assert!(r.verify(&g).unwrap());
        }
    }

    #[test]
    fn star_tree() {
        let g = complete_bipartite(1, 4).unwrap();
        let c = tree_osb_coloring(&g).unwrap();
        let cg = ColoredGraph::new(g, c).unwrap();
        assert!(imbalance(&cg).max_open() <= 1);
        assert!(tree_osb_coloring(&crate::graph::cycle(4).unwrap()).is_err());
    }

    fn colored_path(colors: &[usize]) -> ColoredGraph {
        ColoredGraph::new(path(colors.len()).unwrap(), Coloring::new(colors.to_vec(), 2).unwrap()).unwrap()
    }

    #[test]
    fn extension_cases() {
        let e = extend_path_to_cnbc(&colored_path(&[1, 1])).unwrap();
        assert_eq!(e.result.n(), 6);
        assert!(e.unbalanced.is_empty());
        assert_eq!(imbalance(&e.result).max_closed(), 0);

        let e = extend_path_to_cnbc(&colored_path(&[1, 2])).unwrap();
        assert_eq!(e.result, colored_path(&[1, 2]));

        let e = extend_path_to_cnbc(&colored_path(&[1, 2, 1])).unwrap();
        assert_eq!(e.result.n(), 4);
        assert_eq!(e.result.color(3), 2);
        assert_eq!(e.unbalanced, vec![3]);
        let rep = imbalance(&e.result);
        assert!((0..3).all(|v| rep.closed[v] == 0));
        assert_eq!(rep.closed[3], 2);
    }
}
