//! Color 2-switches and switch sequences between graphs with equal color
//! degree matrices.

use std::fmt;

use crate::cdm::{cdm_equal, compute_cdm};
use crate::error::{input, Error, Result, SwitchViolation};
use crate::graph::{ColoredGraph, Graph};

/// Removes edges `ux`, `wy` and adds `uy`, `wx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSwitch {
    pub u: usize,
    pub x: usize,
    pub w: usize,
    pub y: usize,
}

impl TwoSwitch {
    pub fn new(u: usize, x: usize, w: usize, y: usize) -> Self {
        TwoSwitch { u, x, w, y }
    }

    /// The switch undoing this one.
    pub fn inverse(self) -> Self {
        TwoSwitch::new(self.u, self.y, self.w, self.x)
    }
}

impl fmt::Display for TwoSwitch {
    /// Vertices are shown 1-indexed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {} {})", self.u + 1, self.x + 1, self.w + 1, self.y + 1)
    }
}

pub fn check_switch(cg: &ColoredGraph, s: TwoSwitch) -> std::result::Result<(), SwitchViolation> {
    let TwoSwitch { u, x, w, y } = s;
    let n = cg.n();
    let g = cg.graph();
    if [u, x, w, y].iter().any(|&v| v >= n) {
        return Err(SwitchViolation::VertexOutOfRange);
    }
    if u == x || u == w || u == y || x == w || x == y || w == y {
        return Err(SwitchViolation::NotDistinct);
    }
    if cg.color(u) != cg.color(w) {
        return Err(SwitchViolation::ColorMismatchUw);
    }
    if cg.color(x) != cg.color(y) {
        return Err(SwitchViolation::ColorMismatchXy);
    }
    if !g.has_edge(u, x) {
        return Err(SwitchViolation::MissingEdgeUx);
    }
    if !g.has_edge(w, y) {
        return Err(SwitchViolation::MissingEdgeWy);
    }
    if g.has_edge(u, y) {
        return Err(SwitchViolation::PresentEdgeUy);
    }
    if g.has_edge(w, x) {
        return Err(SwitchViolation::PresentEdgeWx);
    }
    Ok(())
}

pub fn is_applicable(cg: &ColoredGraph, s: TwoSwitch) -> bool {
    check_switch(cg, s).is_ok()
}

fn exchange(g: &mut Graph, s: TwoSwitch) {
    g.delete_edge(s.u, s.x);
    g.delete_edge(s.w, s.y);
    g.insert_edge(s.u, s.y);
    g.insert_edge(s.w, s.x);
}

pub fn apply_switch(cg: &ColoredGraph, s: TwoSwitch) -> Result<ColoredGraph> {
    check_switch(cg, s).map_err(|reason| Error::InapplicableSwitch { switch: s, reason })?;
    let (mut g, coloring) = cg.clone().into_parts();
    exchange(&mut g, s);
    ColoredGraph::new(g, coloring)
}

/// Applies the steps in order, failing at the first inapplicable one.
pub fn apply_sequence(cg: &ColoredGraph, steps: &[TwoSwitch]) -> Result<ColoredGraph> {
    let mut cur = cg.clone();
    for &s in steps {
        cur = apply_switch(&cur, s)?;
    }
    Ok(cur)
}

/// Every applicable switch with `u < w`, which picks one representative of
/// each pair `(u,x,w,y)`, `(w,y,u,x)`. Ordered by `(u, x, w, y)`.
pub fn enumerate_applicable_switches(cg: &ColoredGraph) -> Vec<TwoSwitch> {
    let g = cg.graph();
    let n = cg.n();
    let mut out = Vec::new();
    for u in 0..n {
        for &x in g.neighbors(u) {
            for w in u + 1..n {
                if w == x || cg.color(w) != cg.color(u) {
                    continue;
                }
                for &y in g.neighbors(w) {
                    let s = TwoSwitch::new(u, x, w, y);
                    if is_applicable(cg, s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// Working state of one side of the construction.
struct Side {
    g: Graph,
    steps: Vec<TwoSwitch>,
}

impl Side {
    fn switch(&mut self, s: TwoSwitch) {
        exchange(&mut self.g, s);
        self.steps.push(s);
    }
}

/// Number of alive neighbors of `v` with color `c`.
fn alive_color_degree(g: &Graph, colors: &[usize], alive: &[bool], v: usize, c: usize) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&u| alive[u] && colors[u] == c)
        .count()
}

/// Moves every alive neighbor of `v` into the target set, one color at a
/// time, using switches through pivot-colored vertices.
fn canonicalize(side: &mut Side, colors: &[usize], alive: &[bool], v: usize, targets: &[(usize, Vec<usize>)]) {
    for (c, target) in targets {
        loop {
            let nbrs: Vec<usize> = side
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| alive[u] && colors[u] == *c)
                .collect();
            let x = target.iter().copied().filter(|t| !nbrs.contains(t)).min();
            let Some(x) = x else { break };
            let z = nbrs
                .iter()
                .copied()
                .find(|u| !target.contains(u))
                .expect("target and neighborhood have equal size");
            let p = colors[v];
            let y = side
                .g
                .neighbors(x)
                .iter()
                .copied()
                .find(|&y| {
                    alive[y] && y != v && y != z && colors[y] == p && !side.g.has_edge(y, z)
                })
                .expect("a pivot vertex exists when the target is ordered by pivot degree");
            side.switch(TwoSwitch::new(v, z, y, x));
        }
    }
}

/// A sequence of color 2-switches taking `g` to `h`.
///
/// Both graphs must share the vertex coloring and the color degree matrix.
/// At each round a pivot vertex `v` of the smallest live color `p` is chosen
/// with the most live `p`-neighbors, its neighborhood in both graphs is
/// moved onto the same target set, and `v` is retired. The switches done on
/// `h` are then replayed inverted and in reverse.
pub fn find_switch_sequence(g: &ColoredGraph, h: &ColoredGraph) -> Result<Vec<TwoSwitch>> {
    if g.n() != h.n() {
        return input("graphs have different vertex counts");
    }
    if g.coloring() != h.coloring() {
        return input("graphs carry different colorings");
    }
    if !cdm_equal(&compute_cdm(g), &compute_cdm(h)) {
        return Err(Error::NotCoRealizable);
    }
    let n = g.n();
    let k = g.k();
    let colors = g.coloring().colors().to_vec();
    let mut alive = vec![true; n];
    let mut sg = Side { g: g.graph().clone(), steps: Vec::new() };
    let mut sh = Side { g: h.graph().clone(), steps: Vec::new() };
    for _ in 0..n {
        let p = (1..=k)
            .find(|&c| (0..n).any(|v| alive[v] && colors[v] == c))
            .expect("some vertex is alive");
        let pdeg = |u: usize| alive_color_degree(&sg.g, &colors, &alive, u, p);
        let v = (0..n)
            .filter(|&u| alive[u] && colors[u] == p)
            .max_by_key(|&u| (pdeg(u), std::cmp::Reverse(u)))
            .expect("pivot color is nonempty");
        let mut targets = Vec::new();
        for c in (1..=k).filter(|&c| c != p).chain(std::iter::once(p)) {
            let want = alive_color_degree(&sg.g, &colors, &alive, v, c);
            let mut cand: Vec<usize> = (0..n)
                .filter(|&u| alive[u] && u != v && colors[u] == c)
                .collect();
            cand.sort_by_key(|&u| (std::cmp::Reverse(pdeg(u)), u));
            cand.truncate(want);
            targets.push((c, cand));
        }
        canonicalize(&mut sg, &colors, &alive, v, &targets);
        canonicalize(&mut sh, &colors, &alive, v, &targets);
        alive[v] = false;
    }
    debug_assert_eq!(sg.g, sh.g);
    let mut steps = sg.steps;
    steps.extend(sh.steps.into_iter().rev().map(TwoSwitch::inverse));
    Ok(steps)
}
