//! Red-blue removal: repeatedly delete a red and a blue vertex with the
//! same open neighborhood.

use crate::balance::{is_balanced, BalanceKind};
use crate::error::{input, Result};
use crate::graph::{ColoredGraph, Graph, BLUE, RED};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    /// `(red, blue)` pairs in removal order, as vertices of the input.
    pub removed: Vec<(usize, usize)>,
    /// The reduced graph.
    pub result: ColoredGraph,
    /// `kept[i]` is the input vertex that became vertex `i` of `result`.
    pub kept: Vec<usize>,
}

fn same_live_neighborhood(g: &Graph, alive: &[bool], x: usize, y: usize) -> bool {
    let live = |v: usize| g.neighbors(v).iter().copied().filter(|&u| alive[u]);
    live(x).eq(live(y))
}

/// All removable `(red, blue)` pairs in lexicographic order.
fn eligible(cg: &ColoredGraph, alive: &[bool]) -> Vec<(usize, usize)> {
    let n = cg.n();
    let mut out = Vec::new();
    for x in (0..n).filter(|&x| alive[x] && cg.color(x) == RED) {
        for y in (0..n).filter(|&y| alive[y] && cg.color(y) == BLUE) {
            if same_live_neighborhood(cg.graph(), alive, x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Reduces with the lexicographically least removable pair at every step.
pub fn red_blue_reduce(cg: &ColoredGraph) -> Result<ReductionTrace> {
    red_blue_reduce_by(cg, |_| 0)
}

/// Reduces using `choose` to pick an index into the current list of
/// removable pairs (given in lexicographic order).
pub fn red_blue_reduce_by(cg: &ColoredGraph, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> Result<ReductionTrace> {
    if cg.k() != 2 {
        return input("red-blue removal needs a 2-coloring");
    }
    let n = cg.n();
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    loop {
        let pairs = eligible(cg, &alive);
        if pairs.is_empty() {
            break;
        }
        let (x, y) = pairs[choose(&pairs).min(pairs.len() - 1)];
        alive[x] = false;
        alive[y] = false;
        removed.push((x, y));
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Ok(ReductionTrace {
        removed,
        result: cg.induced(&kept),
        kept,
    })
}

/// Parts of a complete multipartite graph, each in ascending order and
/// listed by smallest member, or `None` when the graph is not complete
/// multipartite.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match parts.iter_mut().find(|p| g.neighbors(p[0]) == g.neighbors(v)) {
            Some(p) => p.push(v),
            None => parts.push(vec![v]),
        }
    }
    (0..n)
        .all(|v| g.degree(v) + parts.iter().find(|p| p.contains(&v)).map_or(0, Vec::len) == n)
        .then_some(parts)
}

/// Outcome of checking the structural facts about red-blue reduction of a
/// 2-colored complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionObservations {
    /// Every surviving part is monochromatic.
    pub parts_monochromatic: bool,
    /// Every odd part survives with odd size.
    pub odd_parts_stay_odd: bool,
    /// Every even part survives with even size or disappears.
    pub even_parts_stay_even: bool,
    /// Each of SBV, OSB, CSB and PB held by the input coloring still holds
    /// for the reduced coloring.
    pub status_inherited: bool,
}

impl ReductionObservations {
    pub fn all(&self) -> bool {
        self.parts_monochromatic && self.odd_parts_stay_odd && self.even_parts_stay_even && self.status_inherited
    }
}

pub fn check_reduction_observations(cg: &ColoredGraph) -> Result<ReductionObservations> {
    if cg.k() != 2 {
        return input("red-blue removal needs a 2-coloring");
    }
    let parts = multipartite_parts(cg.graph())
        .map_or_else(|| input("the graph is not complete multipartite"), Ok)?;
    let trace = red_blue_reduce(cg)?;
    let mut alive = vec![false; cg.n()];
    for &v in &trace.kept {
        alive[v] = true;
    }
    let mut mono = true;
    let mut odd = true;
    let mut even = true;
    for p in &parts {
        let left: Vec<usize> = p.iter().copied().filter(|&v| alive[v]).collect();
        mono &= left.windows(2).all(|w| cg.color(w[0]) == cg.color(w[1]));
        if p.len() % 2 == 1 {
            odd &= left.len() % 2 == 1;
        } else {
            even &= left.len() % 2 == 0;
        }
    }
    let mut inherited = true;
    for (lambda, kind) in [
        (1, BalanceKind::Local),
        (1, BalanceKind::Open),
        (1, BalanceKind::Closed),
        (0, BalanceKind::Parity),
    ] {
        if is_balanced(cg, lambda, kind)? {
            inherited &= is_balanced(&trace.result, lambda, kind)?;
        }
    }
    Ok(ReductionObservations {
        parts_monochromatic: mono,
        odd_parts_stay_odd: odd,
        even_parts_stay_even: even,
        status_inherited: inherited,
    })
}
