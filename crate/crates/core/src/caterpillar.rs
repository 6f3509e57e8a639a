//! Caterpillars given by spine weights: PB and CSB decisions with witness
//! colorings, and the counts of CSB-colored caterpillars by spine length.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use twofloat::TwoFloat;

use crate::error::{input, Error, Result};
use crate::families::double_alternating;
use crate::graph::{opposite, Coloring, Graph, BLUE};

/// Spine `0..n` and the number of leaves hanging off each spine vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    weights: Vec<usize>,
}

impl CaterpillarSpec {
    /// The spine is a longest path, so both endpoints carry weight 0.
    pub fn new(weights: Vec<usize>) -> Result<Self> {
        if weights.len() < 2 {
            return input("spine needs at least two vertices");
        }
        if weights[0] != 0 || weights[weights.len() - 1] != 0 {
            return input("spine endpoints must have weight 0");
        }
        Ok(CaterpillarSpec { weights })
    }

    pub fn spine_len(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len() + self.weights.iter().sum::<usize>()
    }

    /// Extends a spine coloring by giving every leaf the color opposite its
    /// host, which any closed 1-balanced coloring must do.
    pub fn extend_coloring(&self, spine: &[usize]) -> Coloring {
        let mut colors = spine.to_vec();
        for (i, &w) in self.weights.iter().enumerate() {
            colors.extend(std::iter::repeat(opposite(spine[i])).take(w));
        }
        Coloring::new(colors, 2).expect("red and blue are in range")
    }

    /// Maximal runs of spine positions with weight outside `heavy`, as
    /// `start..end` ranges, in order; consecutive runs are separated by
    /// exactly one heavy vertex.
    fn segments(&self, heavy: impl Fn(usize) -> bool) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, &w) in self.weights.iter().enumerate() {
            if heavy(w) {
                out.push(start..i);
                start = i + 1;
            }
        }
        out.push(start..self.weights.len());
        out
    }
}

/// Spine first, then the leaves grouped by host in spine order.
pub fn caterpillar_graph(spec: &CaterpillarSpec) -> Graph {
    let n = spec.spine_len();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let mut next = n;
    for (i, &w) in spec.weights.iter().enumerate() {
        for _ in 0..w {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(next, &edges).expect("caterpillar edges are valid")
}

/// PB coloring when one exists: every weight at most 3 and every run
/// between weight-2/3 vertices of even length. Runs are colored
/// left to right, double alternating from the color of the preceding heavy
/// vertex, which itself copies its left neighbor.
pub fn pb_caterpillar(spec: &CaterpillarSpec) -> Option<Coloring> {
    if spec.weights.iter().any(|&w| w > 3) {
        return None;
    }
    let segs = spec.segments(|w| w == 2 || w == 3);
    if segs.iter().any(|s| s.len() % 2 == 1) {
        return None;
    }
    let mut spine = Vec::with_capacity(spec.spine_len());
    for (i, seg) in segs.iter().enumerate() {
        let start = spine.last().copied().unwrap_or(BLUE);
        if i > 0 {
            spine.push(start);
        }
        spine.extend(double_alternating(seg.len(), start));
    }
    Some(spec.extend_coloring(&spine))
}

/// Which of the three run conditions a CSB coloring uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RunCase {
    Even,
    /// 1-indexed odd position with weight 2.
    HeavyOdd(usize),
    /// 1-indexed even position with weight 0.
    LightEven(usize),
}

fn csb_case(weights: &[usize]) -> Option<RunCase> {
    if weights.len() % 2 == 0 {
        return Some(RunCase::Even);
    }
    let at = |pred: &dyn Fn(usize, usize) -> bool| {
        weights
            .iter()
            .enumerate()
            .map(|(i, &w)| (i + 1, w))
            .find(|&(l, w)| pred(l, w))
            .map(|(l, _)| l)
    };
    if let Some(l) = at(&|l, w| l % 2 == 1 && w == 2) {
        return Some(RunCase::HeavyOdd(l));
    }
    at(&|l, w| l % 2 == 0 && w == 0).map(RunCase::LightEven)
}

/// Colors one run whose first vertex gets `start`.
fn color_run(len: usize, start: usize, case: RunCase) -> Vec<usize> {
    match case {
        RunCase::Even => double_alternating(len, start),
        RunCase::HeavyOdd(l) => {
            let mut out = double_alternating(l - 1, start);
            let c = out.last().copied().unwrap_or(start);
            out.push(c);
            if l < len {
                out.extend(double_alternating(len - l, c));
            }
            out
        }
        RunCase::LightEven(l) => {
            let mut out = double_alternating(l - 1, start);
            let c = opposite(*out.last().expect("even position has a predecessor"));
            out.extend(double_alternating(len - l + 1, c));
            out
        }
    }
}

/// CSB coloring when one exists: every weight at most 4 and every run
/// between weight-3/4 vertices either has even length, holds a weight-2
/// vertex at an odd position, or a weight-0 vertex at an even position.
pub fn csb_caterpillar(spec: &CaterpillarSpec) -> Option<Coloring> {
    if spec.weights.iter().any(|&w| w > 4) {
        return None;
    }
    let segs = spec.segments(|w| w == 3 || w == 4);
    let cases: Vec<RunCase> = segs
        .iter()
        .map(|s| csb_case(&spec.weights[s.clone()]))
        .collect::<Option<_>>()?;
    let mut spine = Vec::with_capacity(spec.spine_len());
    for (i, (seg, &case)) in segs.iter().zip(&cases).enumerate() {
        let start = spine.last().copied().unwrap_or(BLUE);
        if i > 0 {
            spine.push(start);
        }
        spine.extend(color_run(seg.len(), start, case));
    }
    Some(spec.extend_coloring(&spine))
}

pub fn is_pb_caterpillar(spec: &CaterpillarSpec) -> bool {
    pb_caterpillar(spec).is_some()
}

pub fn is_csb_caterpillar(spec: &CaterpillarSpec) -> bool {
    csb_caterpillar(spec).is_some()
}

/// `A(n)` and `B(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountPair {
    pub a: BigUint,
    pub b: BigUint,
}

pub fn count_recurrence(n: usize) -> Result<CountPair> {
    if n < 2 {
        return input("counts start at spine length 2");
    }
    if n == 2 {
        return Ok(CountPair { a: BigUint::one(), b: BigUint::zero() });
    }
    let three = BigUint::from(3u32);
    let (mut a, mut b) = (BigUint::one(), three.clone());
    for _ in 4..=n {
        let next_a = &a + &three * &b;
        let next_b = &three * (&a + &b);
        a = next_a;
        b = next_b;
    }
    Ok(CountPair { a, b })
}

/// Every `A(n)`, `B(n)` for `2 <= n <= to`.
pub fn count_table(to: usize) -> Result<Vec<(usize, CountPair)>> {
    (2..=to).map(|n| Ok((n, count_recurrence(n)?))).collect()
}

type Mat = [[BigUint; 2]; 2];

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `[[1,3],[3,3]]^(n-3)` applied to `(A(3), B(3)) = (1, 3)`.
pub fn count_matrix(n: usize) -> Result<CountPair> {
    if n < 3 {
        return input("matrix form starts at spine length 3");
    }
    let u = |v: u32| BigUint::from(v);
    let mut acc: Mat = [[u(1), u(0)], [u(0), u(1)]];
    let mut base: Mat = [[u(1), u(3)], [u(3), u(3)]];
    let mut e = n - 3;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        e >>= 1;
    }
    let a = &acc[0][0] + &acc[0][1] * u(3);
    let b = &acc[1][0] + &acc[1][1] * u(3);
    Ok(CountPair { a, b })
}

pub const CLOSED_FORM_MAX: usize = 30;

/// `A(n)` from the explicit formula in powers of `2 -+ sqrt(10)`, evaluated
/// in double-double arithmetic. The formula is scaled by 120 so that only
/// exact operations and the square root are needed.
pub fn count_closed_form(n: usize) -> Result<u128> {
    if !(3..=CLOSED_FORM_MAX).contains(&n) {
        return input(format!("closed form is supported for 3 <= n <= {CLOSED_FORM_MAX}"));
    }
    let f = TwoFloat::from;
    let s = f(10.0).sqrt();
    let e = (n + 1) as i32;
    let scaled = (f(-25.0) - f(8.0) * s) * (f(2.0) - s).powi(e) + (f(-25.0) + f(8.0) * s) * (f(2.0) + s).powi(e);
    let rounded = scaled.round();
    let off = f64::from(scaled - rounded).abs();
    let int = rounded.hi() as i128 + rounded.lo() as i128;
    if off > 0.25 || int < 0 || int % 120 != 0 {
        return Err(Error::Precision { n, value: f64::from(scaled) / 120.0 });
    }
    Ok((int / 120) as u128)
}

/// Whether spine vertex `i` is 1-balanced at its closed neighborhood, the
/// leaves being opposite their host.
fn spine_vertex_ok(colors: &[usize], weights: &[usize], i: usize) -> bool {
    let own = colors[i];
    let mut same = 1i64;
    let mut other = weights[i] as i64;
    for j in [i.wrapping_sub(1), i + 1] {
        if let Some(&c) = colors.get(j) {
            if c == own {
                same += 1;
            } else {
                other += 1;
            }
        }
    }
    (same - other).abs() <= 1
}

/// Counts `(weights, spine coloring)` pairs with internal weights in
/// `0..=max_weight`, the leftmost spine vertex fixed, and `check` accepting
/// the spine coloring.
fn enumerate(n: usize, max_weight: usize, check: impl Fn(&[usize], &[usize]) -> bool + Sync) -> u64 {
    let internal = n.saturating_sub(2) as u32;
    let base = (max_weight + 1) as u64;
    let total = base.pow(internal);
    (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut weights = vec![0; n];
            for w in weights.iter_mut().take(n - 1).skip(1) {
                *w = (code % base) as usize;
                code /= base;
            }
            let mut count = 0;
            let mut colors = vec![BLUE; n];
            for mask in 0..1u64 << (n - 1) {
                for (i, c) in colors.iter_mut().enumerate().skip(1) {
                    *c = if mask >> (i - 1) & 1 == 1 { opposite(BLUE) } else { BLUE };
                }
                if check(&colors, &weights) {
                    count += 1;
                }
            }
            count
        })
        .sum()
}

/// Brute-force `A(n)`: CSB-colored caterpillars with spine `n`.
pub fn enumerate_csb_count(n: usize, max_weight: usize) -> Result<u64> {
    if n < 2 {
        return input("counts start at spine length 2");
    }
    Ok(enumerate(n, max_weight, |colors, weights| {
        (0..n).all(|i| spine_vertex_ok(colors, weights, i))
    }))
}

/// Brute-force `B(n)`: the first two spine vertices share a color and every
/// closed neighborhood but the leftmost one is 1-balanced.
pub fn enumerate_b_count(n: usize, max_weight: usize) -> Result<u64> {
    if n < 2 {
        return input("counts start at spine length 2");
    }
    Ok(enumerate(n, max_weight, |colors, weights| {
        colors[1] == colors[0] && (1..n).all(|i| spine_vertex_ok(colors, weights, i))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{coloring_is_balanced, BalanceKind};

    fn spec(w: &[usize]) -> CaterpillarSpec {
        CaterpillarSpec::new(w.to_vec()).unwrap()
    }

    #[test]
    fn shapes() {
        let g = caterpillar_graph(&spec(&[0, 0, 0, 0]));
        assert_eq!(g, crate::graph::path(4).unwrap());
        let g = caterpillar_graph(&spec(&[0, 2, 0]));
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.n(), 5);
        assert!(CaterpillarSpec::new(vec![1, 0]).is_err());
        assert!(CaterpillarSpec::new(vec![0]).is_err());
    }

    #[test]
    fn small_verdicts() {
        assert!(is_pb_caterpillar(&spec(&[0; 6])));
        assert!(!is_pb_caterpillar(&spec(&[0; 5])));
        assert!(!is_pb_caterpillar(&spec(&[0, 4, 0])));
        assert!(!is_csb_caterpillar(&spec(&[0, 1, 0])));
        assert!(is_csb_caterpillar(&spec(&[0, 0, 0])));
    }

    #[test]
    fn witnesses_validate() {
        for w in [&[0, 2, 0, 0, 3, 0, 0][..], &[0, 0, 0], &[0, 2, 3, 1, 0, 0, 0, 0], &[0, 4, 0, 2, 0]] {
            let s = spec(w);
            let g = caterpillar_graph(&s);
            if let Some(c) = pb_caterpillar(&s) {
                assert!(coloring_is_balanced(&g, &c, 0, BalanceKind::Parity).unwrap(), "{w:?}");
            }
            if let Some(c) = csb_caterpillar(&s) {
                assert!(coloring_is_balanced(&g, &c, 1, BalanceKind::Closed).unwrap(), "{w:?}");
            }
        }
    }

    #[test]
    fn counts() {
        let a: Vec<u64> = (2..=10)
            .map(|n| u64::try_from(count_recurrence(n).unwrap().a).unwrap())
            .collect();
        assert_eq!(a, [1, 1, 10, 46, 244, 1252, 6472, 33400, 172432]);
        assert_eq!(count_matrix(3).unwrap(), count_recurrence(3).unwrap());
        assert_eq!(count_matrix(4).unwrap().b, BigUint::from(12u32));
        assert_eq!(count_closed_form(5).unwrap(), 46);
        assert_eq!(count_closed_form(3).unwrap(), 1);
        assert!(count_closed_form(2).is_err());
        assert!(count_closed_form(31).is_err());
        assert!(count_recurrence(1).is_err());
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(enumerate_csb_count(2, 5).unwrap(), 1);
        assert_eq!(enumerate_csb_count(4, 5).unwrap(), 10);
        assert_eq!(enumerate_b_count(2, 5).unwrap(), 0);
        assert_eq!(enumerate_b_count(3, 5).unwrap(), 3);
    }
}
