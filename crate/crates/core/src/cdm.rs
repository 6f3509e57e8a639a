//! Color degree matrices: computation, comparison, realizability and
//! realization.

use std::cmp::Reverse;

use crate::error::{input, Error, Result, Violation};
use crate::graph::{ColoredGraph, Coloring, Graph};

/// An `n x (k+1)` matrix whose row `i` holds the number of neighbors of
/// vertex `i` in each color class, followed by the color of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorDegreeMatrix {
    k: usize,
    rows: Vec<Vec<usize>>,
}

impl ColorDegreeMatrix {
    /// Checks the shape only; color identifiers are not range-checked here
    /// because an out-of-range identifier is a realizability verdict.
    pub fn new(k: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if k == 0 {
            return input("palette size must be at least 1");
        }
        if rows.is_empty() {
            return input("matrix has no rows");
        }
        if let Some(i) = rows.iter().position(|r| r.len() != k + 1) {
            return input(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                rows[i].len(),
                k + 1
            ));
        }
        Ok(ColorDegreeMatrix { k, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of neighbors of `v` with color `c`.
    pub fn entry(&self, v: usize, c: usize) -> usize {
        self.rows[v][c - 1]
    }

    pub fn color(&self, v: usize) -> usize {
        self.rows[v][self.k]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v][..self.k].iter().sum()
    }

    /// Matrix of the same graph after recoloring by `perm[c - 1]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let k = self.k;
        let mut seen = vec![false; k];
        if perm.len() != k
            || perm
                .iter()
                .any(|&c| c == 0 || c > k || std::mem::replace(&mut seen[c - 1], true))
        {
            return input("not a permutation of the palette");
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0; k + 1];
                for c in 1..=k {
                    out[perm[c - 1] - 1] = r[c - 1];
                }
                let id = r[k];
                out[k] = if (1..=k).contains(&id) { perm[id - 1] } else { id };
                out
            })
            .collect();
        Ok(ColorDegreeMatrix { k, rows })
    }
}

pub fn compute_cdm(cg: &ColoredGraph) -> ColorDegreeMatrix {
    let k = cg.k();
    let rows = (0..cg.n())
        .map(|v| {
            let mut row = vec![0; k + 1];
            for &u in cg.graph().neighbors(v) {
                row[cg.color(u) - 1] += 1;
            }
            row[k] = cg.color(v);
            row
        })
        .collect();
    ColorDegreeMatrix { k, rows }
}

/// Entrywise equality under the given vertex orders.
pub fn cdm_equal(a: &ColorDegreeMatrix, b: &ColorDegreeMatrix) -> bool {
    a == b
}

/// Equality of the rows as multisets, ignoring vertex order.
pub fn cdm_equal_rows_multiset(a: &ColorDegreeMatrix, b: &ColorDegreeMatrix) -> bool {
    if a.k != b.k || a.n() != b.n() {
        return false;
    }
    let mut ra = a.rows.clone();
    let mut rb = b.rows.clone();
    ra.sort();
    rb.sort();
    ra == rb
}

/// Erdős–Gallai test.
pub fn is_graphic(seq: &[usize]) -> bool {
    let mut d = seq.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let n = d.len();
    let mut left = 0;
    for r in 1..=n {
        left += d[r - 1];
        let right: usize = r * (r - 1) + d[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        if left > right {
            return false;
        }
    }
    true
}

/// Gale–Ryser test for a bipartite graph with left degrees `a` and right
/// degrees `b`.
pub fn is_bigraphic(a: &[usize], b: &[usize]) -> bool {
    if a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return false;
    }
    let mut a = a.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let mut left = 0;
    for r in 1..=a.len() {
        left += a[r - 1];
        let right: usize = b.iter().map(|&y| y.min(r)).sum();
        if left > right {
            return false;
        }
    }
    true
}

fn classes(m: &ColorDegreeMatrix) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); m.k];
    for v in 0..m.n() {
        out[m.color(v) - 1].push(v);
    }
    out
}

/// Finds the first violated realizability condition, scanning identifiers,
/// then every within-class block, then every cross pair `i < j`.
pub fn first_violation(m: &ColorDegreeMatrix) -> Option<Violation> {
    for v in 0..m.n() {
        let c = m.color(v);
        if c == 0 || c > m.k {
            return Some(Violation::ColorOutOfRange { row: v, color: c });
        }
    }
    let classes = classes(m);
    for c in 1..=m.k {
        let seq: Vec<usize> = classes[c - 1].iter().map(|&v| m.entry(v, c)).collect();
        if !is_graphic(&seq) {
            return Some(Violation::NotGraphic { color: c });
        }
    }
    for i in 1..=m.k {
        for j in i + 1..=m.k {
            let a: Vec<usize> = classes[i - 1].iter().map(|&v| m.entry(v, j)).collect();
            let b: Vec<usize> = classes[j - 1].iter().map(|&v| m.entry(v, i)).collect();
            if !is_bigraphic(&a, &b) {
                return Some(Violation::NotBigraphic { first: i, second: j });
            }
        }
    }
    None
}

pub fn is_realizable(m: &ColorDegreeMatrix) -> bool {
    first_violation(m).is_none()
}

/// Havel–Hakimi on `vertices` with target degrees `deg`; ties go to the
/// smaller vertex index.
fn havel_hakimi(vertices: &[usize], deg: &[usize], edges: &mut Vec<(usize, usize)>) -> bool {
    let mut rem: Vec<(usize, usize)> = vertices.iter().copied().zip(deg.iter().copied()).collect();
    loop {
        rem.sort_by_key(|&(v, d)| (Reverse(d), v));
        let (v, d) = rem[0];
        if d == 0 {
            return true;
        }
        if d >= rem.len() {
            return false;
        }
        rem[0].1 = 0;
        for slot in rem.iter_mut().skip(1).take(d) {
            if slot.1 == 0 {
                return false;
            }
            slot.1 -= 1;
            edges.push((v, slot.0));
        }
    }
}

/// Bipartite realization: each left vertex, taken by decreasing degree,
/// joins the right vertices of largest remaining degree.
fn bipartite_realize(
    left: &[usize],
    a: &[usize],
    right: &[usize],
    b: &[usize],
    edges: &mut Vec<(usize, usize)>,
) -> bool {
    let mut order: Vec<(usize, usize)> = left.iter().copied().zip(a.iter().copied()).collect();
    order.sort_by_key(|&(v, d)| (Reverse(d), v));
    let mut rem: Vec<(usize, usize)> = right.iter().copied().zip(b.iter().copied()).collect();
    for (u, d) in order {
        rem.sort_by_key(|&(v, r)| (Reverse(r), v));
        if d > rem.len() {
            return false;
        }
        for slot in rem.iter_mut().take(d) {
            if slot.1 == 0 {
                return false;
            }
            slot.1 -= 1;
            edges.push((u, slot.0));
        }
    }
    rem.iter().all(|&(_, r)| r == 0)
}

/// Builds a colored graph with the given matrix: within-class blocks first,
/// then cross pairs in lexicographic color order.
pub fn realize(m: &ColorDegreeMatrix) -> Result<ColoredGraph> {
    if let Some(v) = first_violation(m) {
        return Err(Error::NotRealizable(v));
    }
    let classes = classes(m);
    let mut edges = Vec::new();
    for c in 1..=m.k {
        let vs = &classes[c - 1];
        let deg: Vec<usize> = vs.iter().map(|&v| m.entry(v, c)).collect();
        if !vs.is_empty() && !havel_hakimi(vs, &deg, &mut edges) {
            return Err(Error::NotRealizable(Violation::NotGraphic { color: c }));
        }
    }
    for i in 1..=m.k {
        for j in i + 1..=m.k {
            let (l, r) = (&classes[i - 1], &classes[j - 1]);
            let a: Vec<usize> = l.iter().map(|&v| m.entry(v, j)).collect();
            let b: Vec<usize> = r.iter().map(|&v| m.entry(v, i)).collect();
            if !bipartite_realize(l, &a, r, &b, &mut edges) {
                return Err(Error::NotRealizable(Violation::NotBigraphic { first: i, second: j }));
            }
        }
    }
    let graph = Graph::from_edges(m.n(), &edges)?;
    let coloring = Coloring::new((0..m.n()).map(|v| m.color(v)).collect(), m.k)?;
    ColoredGraph::new(graph, coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cg(n: usize, edges: &[(usize, usize)], colors: &[usize], k: usize) -> ColoredGraph {
        ColoredGraph::new(
            Graph::from_edges(n, edges).unwrap(),
            Coloring::new(colors.to_vec(), k).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn graphic_sequences() {
        assert!(is_graphic(&[]));
        assert!(is_graphic(&[1, 1]));
        assert!(is_graphic(&[0, 1, 1]));
        assert!(!is_graphic(&[2, 0]));
        assert!(!is_graphic(&[1]));
        assert!(is_graphic(&[3, 3, 3, 3]));
        assert!(!is_graphic(&[3, 3, 1, 1]));
        assert!(is_bigraphic(&[2, 1, 1], &[2, 2]));
        assert!(!is_bigraphic(&[3], &[1, 1]));
        assert!(is_bigraphic(&[], &[]));
    }

    #[test]
    fn edgeless_matrix() {
        let g = cg(3, &[], &[1, 2, 2], 2);
        let m = compute_cdm(&g);
        assert_eq!(m.rows(), &[vec![0, 0, 1], vec![0, 0, 2], vec![0, 0, 2]]);
        assert!(is_realizable(&m));
        assert_eq!(realize(&m).unwrap().graph().edge_count(), 0);
    }

    #[test]
    fn violations_are_reported_in_order() {
        let m = ColorDegreeMatrix::new(2, vec![vec![0, 0, 3]]).unwrap();
        assert_eq!(
            first_violation(&m),
            Some(Violation::ColorOutOfRange { row: 0, color: 3 })
        );
        let m = ColorDegreeMatrix::new(1, vec![vec![2, 1], vec![0, 1]]).unwrap();
        assert_eq!(first_violation(&m), Some(Violation::NotGraphic { color: 1 }));
        let m = ColorDegreeMatrix::new(2, vec![vec![0, 2, 1], vec![0, 0, 2]]).unwrap();
        assert_eq!(
            first_violation(&m),
            Some(Violation::NotBigraphic { first: 1, second: 2 })
        );
        assert!(matches!(realize(&m), Err(Error::NotRealizable(_))));
        assert!(ColorDegreeMatrix::new(2, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn empty_color_class_is_accepted() {
        let m = ColorDegreeMatrix::new(3, vec![vec![1, 0, 0, 1], vec![1, 0, 0, 1]]).unwrap();
        let r = realize(&m).unwrap();
        assert_eq!(compute_cdm(&r), m);
    }

    #[test]
    fn palette_permutation() {
        let g = cg(4, &[(0, 1), (1, 2), (2, 3)], &[1, 2, 2, 3], 3);
        let perm = [3, 1, 2];
        let recolored = ColoredGraph::new(
            g.graph().clone(),
            g.coloring().permuted(&perm).unwrap(),
        )
        .unwrap();
        assert_eq!(
            compute_cdm(&g).permuted(&perm).unwrap(),
            compute_cdm(&recolored)
        );
    }

    #[test]
    fn multiset_comparison_is_weaker() {
        let a = cg(3, &[(0, 1)], &[1, 1, 1], 1);
        let b = cg(3, &[(1, 2)], &[1, 1, 1], 1);
        assert!(!cdm_equal(&compute_cdm(&a), &compute_cdm(&b)));
        assert!(cdm_equal_rows_multiset(&compute_cdm(&a), &compute_cdm(&b)));
    }
}
