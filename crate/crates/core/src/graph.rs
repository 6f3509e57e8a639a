//! Simple undirected graphs, vertex colorings and the named families.
//!
//! Vertices are `0..n`. Colors are `1..=k`; color 1 is red and color 2 is
//! blue whenever a two-color reading is needed.

use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

pub const RED: usize = 1;
pub const BLUE: usize = 2;

/// Returns the other color of a two-coloring.
pub fn opposite(c: usize) -> usize {
    if c == RED {
        BLUE
    } else {
        RED
    }
}

/// Undirected simple graph stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return input(format!("duplicate edge at vertex {v}"));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency lists, normalizing their order.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        for (v, list) in adj.iter().enumerate() {
            for &u in list {
                if u >= n {
                    return input(format!("neighbor {u} of vertex {v} is out of range"));
                }
                if u == v {
                    return input(format!("self-loop at vertex {v}"));
                }
                if adj[u].binary_search(&v).is_err() {
                    return input(format!("adjacency is not symmetric between {u} and {v}"));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Sorted neighbors of `v`. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.adj.is_empty() {
            return input("the graph has no vertices");
        }
        if v >= self.n() {
            return input(format!("vertex {v} is outside 0..{}", self.n()));
        }
        Ok(())
    }

    /// N(v).
    pub fn open_neighborhood(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// N[v] in ascending order.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let list = &self.adj[v];
        let at = list.partition_point(|&u| u < v);
        let mut out = Vec::with_capacity(list.len() + 1);
        out.extend_from_slice(&list[..at]);
        out.push(v);
        out.extend_from_slice(&list[at..]);
        Ok(out)
    }

    pub fn max_degree(&self) -> Result<usize> {
        if self.adj.is_empty() {
            return input("maximum degree of a graph with no vertices");
        }
        Ok(self.adj.iter().map(Vec::len).max().unwrap_or(0))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            if let Err(at) = list.binary_search(&b) {
                list.insert(at, b);
            }
        }
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            if let Ok(at) = list.binary_search(&b) {
                list.remove(at);
            }
        }
    }

    /// Subgraph induced by `keep` (ascending original indices); vertex `i` of
    /// the result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + shift).collect()),
        );
        Graph { adj }
    }
}

/// A total assignment of colors `1..=k` to the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return input("palette size must be at least 1");
        }
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return input(format!("vertex {v} has color {c} outside 1..={k}"));
        }
        Ok(Coloring { colors, k })
    }

    /// Every vertex gets color 1.
    pub fn monochromatic(n: usize, k: usize) -> Self {
        Coloring {
            colors: vec![1; n],
            k: k.max(1),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Vertices of color `c` in ascending order.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }

    /// Applies a palette permutation given as `perm[c - 1] = new color`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Coloring> {
        let mut seen = vec![false; self.k];
        if perm.len() != self.k {
            return input("permutation length must equal the palette size");
        }
        for &c in perm {
            if c == 0 || c > self.k || std::mem::replace(&mut seen[c - 1], true) {
                return input("not a permutation of the palette");
            }
        }
        Ok(Coloring {
            colors: self.colors.iter().map(|&c| perm[c - 1]).collect(),
            k: self.k,
        })
    }

    pub fn restricted(&self, keep: &[usize]) -> Coloring {
        Coloring {
            colors: keep.iter().map(|&v| self.colors[v]).collect(),
            k: self.k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    coloring: Coloring,
}

impl ColoredGraph {
    pub fn new(graph: Graph, coloring: Coloring) -> Result<Self> {
        if graph.n() != coloring.len() {
            return input(format!(
                "coloring has {} entries for a graph on {} vertices",
                coloring.len(),
                graph.n()
            ));
        }
        Ok(ColoredGraph { graph, coloring })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.coloring.k()
    }

    pub fn color(&self, v: usize) -> usize {
        self.coloring.color(v)
    }

    pub fn into_parts(self) -> (Graph, Coloring) {
        (self.graph, self.coloring)
    }

    /// Colored subgraph induced by `keep` (ascending original indices).
    pub fn induced(&self, keep: &[usize]) -> ColoredGraph {
        ColoredGraph {
            graph: self.graph.induced(keep),
            coloring: self.coloring.restricted(keep),
        }
    }
}

/// Part sizes of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return input("a complete multipartite graph needs at least one part");
        }
        if parts.contains(&0) {
            return input("part sizes must be positive");
        }
        Ok(MultipartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of singleton parts.
    pub fn m1(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Number of parts of size two.
    pub fn m2(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 2).count()
    }

    /// Number of odd parts of size at least three.
    pub fn h(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1 && p >= 3).count()
    }

    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Vertex ranges of each part, in input order.
    pub fn part_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    pub fn graph(&self) -> Graph {
        let ranges = self.part_ranges();
        let n = self.n();
        let mut part_of = vec![0; n];
        for (i, r) in ranges.iter().enumerate() {
            for v in r.clone() {
                part_of[v] = i;
            }
        }
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| part_of[u] != part_of[v]).collect())
            .collect();
        Graph { adj }
    }
}

/// The named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// Rim size; the hub is the last vertex.
    Wheel(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(MultipartiteSpec),
    Petersen,
    /// `Larson { k, lambda }`: points `X` first, then the `lambda`-subsets of
    /// `X` in lexicographic order.
    Larson { k: usize, lambda: usize },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Wheel(n) => wheel(*n),
            Family::Complete(n) => complete(*n),
            Family::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            Family::CompleteMultipartite(spec) => Ok(spec.graph()),
            Family::Petersen => Ok(petersen()),
            Family::Larson { k, lambda } => larson(*k, *lambda),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            Family::CompleteMultipartite(spec) => {
                let parts: Vec<String> = spec.parts().iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Family::Petersen => write!(f, "petersen"),
            Family::Larson { k, lambda } => write!(f, "larson:{k},{lambda}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses shorthands such as `wheel:7`, `bipartite:3,4`,
    /// `multipartite:3,3,3`, `larson:2,2` and `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, args),
            None => (s, ""),
        };
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Input(format!("bad family parameter `{t}`")))
                })
                .collect::<Result<_>>()?
        };
        let one = |nums: &[usize]| match nums {
            [a] => Ok(*a),
            _ => input(format!("family `{name}` takes one parameter")),
        };
        let two = |nums: &[usize]| match nums {
            [a, b] => Ok((*a, *b)),
            _ => input(format!("family `{name}` takes two parameters")),
        };
        match name {
            "path" => Ok(Family::Path(one(&nums)?)),
            "cycle" => Ok(Family::Cycle(one(&nums)?)),
            "wheel" => Ok(Family::Wheel(one(&nums)?)),
            "complete" => Ok(Family::Complete(one(&nums)?)),
            "bipartite" | "complete-bipartite" => {
                let (a, b) = two(&nums)?;
                Ok(Family::CompleteBipartite(a, b))
            }
            "multipartite" | "complete-multipartite" => Ok(Family::CompleteMultipartite(
                MultipartiteSpec::new(nums)?,
            )),
            "petersen" if nums.is_empty() => Ok(Family::Petersen),
            "larson" => {
                let (k, lambda) = two(&nums)?;
                Ok(Family::Larson { k, lambda })
            }
            _ => input(format!("unknown family `{s}`")),
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("path needs at least one vertex");
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input("cycle needs at least three vertices");
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Wheel with rim `0..n` in cyclic order and hub `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return input("wheel needs a rim of at least three vertices");
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::from_edges(n + 1, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("complete graph needs at least one vertex");
    }
    Ok(MultipartiteSpec::new(vec![1; n])?.graph())
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Ok(MultipartiteSpec::new(vec![a, b])?.graph())
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram
/// `5+i -- 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are valid")
}

/// Bipartite incidence graph between `X = {1..(lambda-1)k+1}` and all
/// `lambda`-subsets of `X`.
pub fn larson(k: usize, lambda: usize) -> Result<Graph> {
    if k < 2 {
        return input("larson construction needs k >= 2");
    }
    if lambda == 0 {
        return input("larson construction needs lambda >= 1");
    }
    let x = (lambda - 1) * k + 1;
    if lambda > x {
        return input("lambda exceeds the point set size");
    }
    let mut subsets = Vec::new();
    let mut current = Vec::with_capacity(lambda);
    fn rec(start: usize, x: usize, lambda: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == lambda {
            out.push(cur.clone());
            return;
        }
        for p in start..x {
            cur.push(p);
            rec(p + 1, x, lambda, cur, out);
            cur.pop();
        }
    }
    rec(0, x, lambda, &mut current, &mut subsets);
    let mut edges = Vec::new();
    for (i, s) in subsets.iter().enumerate() {
        edges.extend(s.iter().map(|&p| (p, x + i)));
    }
    Graph::from_edges(x + subsets.len(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighborhoods() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.open_neighborhood(1).unwrap(), &[0, 2]);
        let k4 = complete(4).unwrap();
        assert_eq!(k4.open_neighborhood(2).unwrap(), &[0, 1, 3]);
        assert_eq!(k4.closed_neighborhood(2).unwrap(), vec![0, 1, 2, 3]);
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.closed_neighborhood(0).unwrap(), vec![0, 1, 3]);
        let iso = Graph::empty(1);
        assert_eq!(iso.closed_neighborhood(0).unwrap(), vec![0]);
        assert!(p3.open_neighborhood(3).is_err());
        assert!(Graph::empty(0).open_neighborhood(0).is_err());
    }

    #[test]
    fn family_degrees() {
        let w = wheel(5).unwrap();
        assert_eq!(w.n(), 6);
        assert_eq!(w.degree(5), 5);
        assert!((0..5).all(|v| w.degree(v) == 3));
        assert_eq!(wheel(7).unwrap().max_degree().unwrap(), 7);
        assert_eq!(path(4).unwrap().max_degree().unwrap(), 2);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        let k333 = MultipartiteSpec::new(vec![3, 3, 3]).unwrap().graph();
        assert!((0..9).all(|v| k333.degree(v) == 6));
        let kab = complete_bipartite(2, 5).unwrap();
        assert!((0..2).all(|v| kab.degree(v) == 5));
        assert!((2..7).all(|v| kab.degree(v) == 2));
        assert!(Graph::empty(0).max_degree().is_err());
    }

    #[test]
    fn larson_shape() {
        let g = larson(2, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert!((3..6).all(|v| g.degree(v) == 2));
        assert_eq!(g.neighbors(3), &[0, 1]);
        assert_eq!(g.neighbors(5), &[1, 2]);
        let g = larson(3, 2).unwrap();
        assert_eq!(g.n(), 4 + 6);
        assert!(larson(1, 2).is_err());
        assert!(larson(2, 0).is_err());
    }

    #[test]
    fn bad_parameters() {
        assert!(cycle(2).is_err());
        assert!(wheel(2).is_err());
        assert!(path(0).is_err());
        assert!(MultipartiteSpec::new(vec![2, 0]).is_err());
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Coloring::new(vec![1, 3], 2).is_err());
        assert!(Coloring::new(vec![0], 2).is_err());
    }

    #[test]
    fn family_shorthand() {
        assert_eq!("wheel:7".parse::<Family>().unwrap(), Family::Wheel(7));
        assert_eq!(
            "bipartite:3,4".parse::<Family>().unwrap(),
            Family::CompleteBipartite(3, 4)
        );
        let f: Family = "multipartite:3,3,3".parse().unwrap();
        assert_eq!(f.to_string(), "multipartite:3,3,3");
        assert_eq!(f.build().unwrap().n(), 9);
        assert!("wheel".parse::<Family>().is_err());
        assert!("cube:3".parse::<Family>().is_err());
    }

    #[test]
    fn multipartite_counts() {
        let s = MultipartiteSpec::new(vec![1, 1, 1, 3, 2]).unwrap();
        assert_eq!((s.n(), s.m1(), s.m2(), s.h()), (8, 3, 1, 1));
    }
}
