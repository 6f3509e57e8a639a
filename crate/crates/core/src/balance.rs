//! Neighborhood balance of colorings, class membership, and an exact
//! backtracking solver for the open, closed and local balance numbers.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{input, Error, Result};
use crate::graph::{ColoredGraph, Coloring, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BalanceKind {
    /// Every open neighborhood.
    Open,
    /// Every closed neighborhood.
    Closed,
    /// Open or closed, chosen per vertex.
    Local,
    /// Two colors; open neighborhoods of even-degree vertices and closed
    /// neighborhoods of odd-degree vertices are exactly balanced.
    Parity,
}

impl BalanceKind {
    pub const ALL: [BalanceKind; 4] = [
        BalanceKind::Open,
        BalanceKind::Closed,
        BalanceKind::Local,
        BalanceKind::Parity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BalanceKind::Open => "open",
            BalanceKind::Closed => "closed",
            BalanceKind::Local => "local",
            BalanceKind::Parity => "parity",
        }
    }

    fn check_palette(self, k: usize) -> Result<()> {
        if k == 0 {
            return input("palette size must be at least 1");
        }
        if self == BalanceKind::Parity && k != 2 {
            return input(format!("parity balance needs exactly 2 colors, got {k}"));
        }
        Ok(())
    }
}

impl fmt::Display for BalanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BalanceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(BalanceKind::Open),
            "closed" => Ok(BalanceKind::Closed),
            "local" => Ok(BalanceKind::Local),
            "parity" => Ok(BalanceKind::Parity),
            _ => input(format!("unknown balance kind `{s}`")),
        }
    }
}

/// Per-vertex spread (largest minus smallest color count) over the open and
/// closed neighborhoods, taken over the whole palette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImbalanceReport {
    pub open: Vec<usize>,
    pub closed: Vec<usize>,
}

impl ImbalanceReport {
    pub fn max_open(&self) -> usize {
        self.open.iter().copied().max().unwrap_or(0)
    }

    pub fn max_closed(&self) -> usize {
        self.closed.iter().copied().max().unwrap_or(0)
    }

    /// Largest per-vertex value of `min(open, closed)`.
    pub fn max_local(&self) -> usize {
        self.open
            .iter()
            .zip(&self.closed)
            .map(|(&a, &b)| a.min(b))
            .max()
            .unwrap_or(0)
    }
}

fn spread(counts: &[usize]) -> usize {
    let max = counts.iter().copied().max().unwrap_or(0);
    let min = counts.iter().copied().min().unwrap_or(0);
    max - min
}

pub fn imbalance(cg: &ColoredGraph) -> ImbalanceReport {
    let k = cg.k();
    let mut open = Vec::with_capacity(cg.n());
    let mut closed = Vec::with_capacity(cg.n());
    let mut counts = vec![0; k];
    for v in 0..cg.n() {
        counts.iter_mut().for_each(|c| *c = 0);
        for &u in cg.graph().neighbors(v) {
            counts[cg.color(u) - 1] += 1;
        }
        open.push(spread(&counts));
        counts[cg.color(v) - 1] += 1;
        closed.push(spread(&counts));
    }
    ImbalanceReport { open, closed }
}

/// Whether the coloring is `lambda`-balanced in the sense of `kind`.
/// `lambda` is ignored for [`BalanceKind::Parity`].
pub fn is_balanced(cg: &ColoredGraph, lambda: usize, kind: BalanceKind) -> Result<bool> {
    kind.check_palette(cg.k())?;
    let rep = imbalance(cg);
    let g = cg.graph();
    Ok((0..cg.n()).all(|v| match kind {
        BalanceKind::Open => rep.open[v] <= lambda,
        BalanceKind::Closed => rep.closed[v] <= lambda,
        BalanceKind::Local => rep.open[v] <= lambda || rep.closed[v] <= lambda,
        BalanceKind::Parity => {
            if g.degree(v) % 2 == 0 {
                rep.open[v] == 0
            } else {
                rep.closed[v] == 0
            }
        }
    }))
}

/// Convenience wrapper over [`is_balanced`] for a bare coloring.
pub fn coloring_is_balanced(g: &Graph, c: &Coloring, lambda: usize, kind: BalanceKind) -> Result<bool> {
    let cg = ColoredGraph::new(g.clone(), c.clone())?;
    is_balanced(&cg, lambda, kind)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Split the search tree across rayon workers.
    pub parallel: bool,
    /// Largest vertex count [`beta_with`] accepts; `None` disables the guard.
    pub size_limit: Option<usize>,
}

pub const DEFAULT_SIZE_LIMIT: usize = 24;

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            parallel: false,
            size_limit: Some(DEFAULT_SIZE_LIMIT),
        }
    }
}

/// Whether counts `c` plus `r` more members can end with spread at most
/// `lambda`. The final minimum may as well be the least level `lo` that
/// keeps every count reachable and the total coverable; it then only
/// remains to lift everything below `lo`.
fn completable(c: &[u32], r: u32, lambda: u32) -> bool {
    let k = c.len() as i64;
    let sum: i64 = c.iter().map(|&x| x as i64).sum();
    let max = c.iter().copied().max().unwrap_or(0) as i64;
    let total = sum + r as i64;
    let lo = (max - lambda as i64).max((total + k - 1) / k - lambda as i64);
    let need: i64 = c.iter().map(|&x| (lo - x as i64).max(0)).sum();
    need <= r as i64
}

/// Smallest-last degeneracy order, reversed so the most constrained core is
/// decided first.
fn decision_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        out.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    out.reverse();
    out
}

#[derive(Clone)]
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    lambda: u32,
    kind: BalanceKind,
    order: &'a [usize],
    color: Vec<usize>,
    /// `cnt[v * k + c - 1]`: colored neighbors of `v` with color `c`.
    cnt: Vec<u32>,
    /// Uncolored neighbors of `v`.
    rem: Vec<u32>,
    scratch: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, lambda: usize, kind: BalanceKind, order: &'a [usize]) -> Self {
        let n = g.n();
        Search {
            g,
            k,
            lambda: lambda as u32,
            kind,
            order,
            color: vec![0; n],
            cnt: vec![0; n * k],
            rem: g.degrees().into_iter().map(|d| d as u32).collect(),
            scratch: vec![0; k],
        }
    }

    fn open_ok(&self, v: usize, lambda: u32) -> bool {
        completable(&self.cnt[v * self.k..(v + 1) * self.k], self.rem[v], lambda)
    }

    fn closed_ok(&mut self, v: usize, lambda: u32) -> bool {
        self.scratch
            .copy_from_slice(&self.cnt[v * self.k..(v + 1) * self.k]);
        let mut r = self.rem[v];
        match self.color[v] {
            0 => r += 1,
            c => self.scratch[c - 1] += 1,
        }
        completable(&self.scratch, r, lambda)
    }

    fn vertex_ok(&mut self, v: usize) -> bool {
        match self.kind {
            BalanceKind::Open => self.open_ok(v, self.lambda),
            BalanceKind::Closed => self.closed_ok(v, self.lambda),
            BalanceKind::Local => self.open_ok(v, self.lambda) || self.closed_ok(v, self.lambda),
            BalanceKind::Parity => {
                if self.g.degree(v) % 2 == 0 {
                    self.open_ok(v, 0)
                } else {
                    self.closed_ok(v, 0)
                }
            }
        }
    }

    fn assign(&mut self, u: usize, c: usize) -> bool {
        self.color[u] = c;
        for &w in self.g.neighbors(u) {
            self.cnt[w * self.k + c - 1] += 1;
            self.rem[w] -= 1;
        }
        if !self.vertex_ok(u) {
            return false;
        }
        for i in 0..self.g.degree(u) {
            let w = self.g.neighbors(u)[i];
            if !self.vertex_ok(w) {
                return false;
            }
        }
        true
    }

    fn unassign(&mut self, u: usize) {
        let c = self.color[u];
        for &w in self.g.neighbors(u) {
            self.cnt[w * self.k + c - 1] -= 1;
            self.rem[w] += 1;
        }
        self.color[u] = 0;
    }

    /// Colors `order[depth..]`; on success the full coloring is left in place.
    fn dfs(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for c in 1..=self.k.min(used + 1) {
            let ok = self.assign(u, c);
            if ok && self.dfs(depth + 1, used.max(c)) {
                return true;
            }
            self.unassign(u);
        }
        false
    }

    /// All surviving assignments of the first `depth` decision vertices, in
    /// search order.
    fn prefixes(&mut self, depth: usize, at: usize, used: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == depth {
            out.push(cur.clone());
            return;
        }
        let u = self.order[at];
        for c in 1..=self.k.min(used + 1) {
            if self.assign(u, c) {
                cur.push(c);
                self.prefixes(depth, at + 1, used.max(c), cur, out);
                cur.pop();
            }
            self.unassign(u);
        }
    }

    fn witness(&self) -> Coloring {
        Coloring::new(self.color.clone(), self.k).expect("search assigns colors in range")
    }
}

/// First balanced coloring in search order, or `None` when the search space
/// is exhausted.
pub fn exists_coloring(g: &Graph, k: usize, lambda: usize, kind: BalanceKind) -> Result<Option<Coloring>> {
    exists_coloring_with(g, k, lambda, kind, false)
}

pub fn exists_coloring_with(
    g: &Graph,
    k: usize,
    lambda: usize,
    kind: BalanceKind,
    parallel: bool,
) -> Result<Option<Coloring>> {
    kind.check_palette(k)?;
    let order = decision_order(g);
    let mut search = Search::new(g, k, lambda, kind, &order);
    if !parallel || rayon::current_num_threads() < 2 || order.len() < 4 {
        return Ok(search.dfs(0, 0).then(|| search.witness()));
    }
    let wanted = 8 * rayon::current_num_threads();
    let mut depth = 1;
    let mut prefixes = Vec::new();
    while depth < order.len() {
        prefixes.clear();
        search.prefixes(depth, 0, 0, &mut Vec::new(), &mut prefixes);
        if prefixes.len() >= wanted || prefixes.is_empty() {
            break;
        }
        depth += 1;
    }
    let base = search;
    let found = prefixes.par_iter().find_map_first(|prefix| {
        let mut s = base.clone();
        let mut used = 0;
        for (i, &c) in prefix.iter().enumerate() {
            let ok = s.assign(order[i], c);
            debug_assert!(ok);
            used = used.max(c);
        }
        s.dfs(prefix.len(), used).then(|| s.witness())
    });
    Ok(found)
}

/// A certified balance number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceCertificate {
    pub verdict: usize,
    pub kind: BalanceKind,
    /// A coloring balanced at `verdict`.
    pub witness: Coloring,
    /// No coloring is balanced at `verdict - 1`; always set when
    /// `verdict > 0`, either by search or by the parity bound.
    pub exhausted: bool,
}

/// Sound lower bound on the balance number from degree parities (two
/// colors, every degree of one parity).
pub fn lower_bound(g: &Graph, k: usize, kind: BalanceKind) -> Result<usize> {
    if k < 2 {
        return input("balance numbers need at least 2 colors");
    }
    if kind == BalanceKind::Parity {
        return input("parity balance has no balance number");
    }
    if k != 2 || g.n() == 0 {
        return Ok(0);
    }
    Ok(match (common_parity(g), kind) {
        (Some(0), BalanceKind::Closed) | (Some(1), BalanceKind::Open) => 1,
        _ => 0,
    })
}

/// `Some(p)` when every degree is congruent to `p` mod 2.
fn common_parity(g: &Graph) -> Option<usize> {
    let mut it = g.degrees().into_iter().map(|d| d % 2);
    let first = it.next()?;
    it.all(|p| p == first).then_some(first)
}

pub fn beta(g: &Graph, k: usize, kind: BalanceKind) -> Result<BalanceCertificate> {
    beta_with(g, k, kind, &SolverOptions::default())
}

/// Least `lambda` admitting a balanced coloring, searched upwards from
/// [`lower_bound`] in steps of 2 when degree parity rules out every other
/// value.
pub fn beta_with(g: &Graph, k: usize, kind: BalanceKind, opts: &SolverOptions) -> Result<BalanceCertificate> {
    let start = lower_bound(g, k, kind)?;
    let delta = g.max_degree()?;
    if let Some(limit) = opts.size_limit {
        if g.n() > limit {
            return Err(Error::TooLarge { n: g.n(), limit });
        }
    }
    let step = if k == 2 && kind != BalanceKind::Local && common_parity(g).is_some() {
        2
    } else {
        1
    };
    // Any coloring is (delta)-balanced at open and (delta+1)-balanced at
    // closed neighborhoods.
    let cap = match kind {
        BalanceKind::Closed => delta + 1,
        _ => delta,
    };
    let mut lambda = start;
    loop {
        if let Some(witness) = exists_coloring_with(g, k, lambda, kind, opts.parallel)? {
            return Ok(BalanceCertificate {
                verdict: lambda,
                kind,
                witness,
                exhausted: lambda > 0,
            });
        }
        lambda += step;
        assert!(lambda <= cap, "no coloring found below the trivial bound");
    }
}

/// The six two-color classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Nbc,
    Cnbc,
    Osb,
    Csb,
    Sbv,
    Pb,
}

impl Class {
    pub const ALL: [Class; 6] = [Class::Nbc, Class::Cnbc, Class::Osb, Class::Csb, Class::Sbv, Class::Pb];

    /// The `(lambda, kind)` pair defining the class.
    pub fn condition(self) -> (usize, BalanceKind) {
        match self {
            Class::Nbc => (0, BalanceKind::Open),
            Class::Cnbc => (0, BalanceKind::Closed),
            Class::Osb => (1, BalanceKind::Open),
            Class::Csb => (1, BalanceKind::Closed),
            Class::Sbv => (1, BalanceKind::Local),
            Class::Pb => (0, BalanceKind::Parity),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Class::Nbc => "NBC",
            Class::Cnbc => "CNBC",
            Class::Osb => "OSB",
            Class::Csb => "CSB",
            Class::Sbv => "SBV",
            Class::Pb => "PB",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    /// Whether `c` is a coloring of `g` witnessing this class.
    pub fn accepts(self, g: &Graph, c: &Coloring) -> Result<bool> {
        if c.k() != 2 {
            return Ok(false);
        }
        let (lambda, kind) = self.condition();
        coloring_is_balanced(g, c, lambda, kind)
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Class::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .map_or_else(|| input(format!("unknown class `{s}`")), Ok)
    }
}

/// Membership in each class, with a witness coloring for every member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassReport {
    witnesses: [Option<Coloring>; 6],
}

impl ClassReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, class: Class, witness: Option<Coloring>) {
        self.witnesses[class.index()] = witness;
    }

    pub fn contains(&self, class: Class) -> bool {
        self.witnesses[class.index()].is_some()
    }

    pub fn witness(&self, class: Class) -> Option<&Coloring> {
        self.witnesses[class.index()].as_ref()
    }

    pub fn verdicts(&self) -> [bool; 6] {
        Class::ALL.map(|c| self.contains(c))
    }

    /// Checks every stored witness against its class on `g`.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        for class in Class::ALL {
            if let Some(w) = self.witness(class) {
                if !class.accepts(g, w)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Exhaustive membership test for all six classes.
pub fn class_membership(g: &Graph) -> Result<ClassReport> {
    let mut report = ClassReport::new();
    for class in Class::ALL {
        let (lambda, kind) = class.condition();
        report.set(class, exists_coloring(g, 2, lambda, kind)?);
    }
    Ok(report)
}
