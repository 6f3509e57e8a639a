//! Hand-transcribed example graphs, 1-indexed as drawn.
#![allow(dead_code)]

use balcolor::graph::{Coloring, ColoredGraph, Graph};

pub const R: usize = 1;
pub const B: usize = 2;
pub const G: usize = 3;

pub fn colored(n: usize, edges: &[(usize, usize)], colors: &[usize], k: usize) -> ColoredGraph {
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    ColoredGraph::new(
        Graph::from_edges(n, &edges).unwrap(),
        Coloring::new(colors.to_vec(), k).unwrap(),
    )
    .unwrap()
}

pub fn five_g(k: usize) -> ColoredGraph {
    colored(5, &[(4, 5), (2, 3), (1, 5), (1, 2), (3, 4), (2, 5)], &[B, R, B, B, R], k)
}

pub fn five_h(k: usize) -> ColoredGraph {
    colored(5, &[(4, 5), (2, 4), (1, 5), (1, 2), (3, 5), (2, 3)], &[B, R, B, B, R], k)
}

pub fn five_g_prime(k: usize) -> ColoredGraph {
    colored(5, &[(1, 5), (4, 5), (1, 2), (2, 3), (2, 5), (3, 4)], &[B, R, R, B, B], k)
}

pub fn five_h_prime(k: usize) -> ColoredGraph {
    colored(5, &[(1, 5), (4, 5), (1, 2), (2, 3), (3, 5), (2, 4)], &[B, R, R, B, B], k)
}

/// Prism over a 5-cycle.
pub fn prism_decagon() -> ColoredGraph {
    let mut e = Vec::new();
    for i in 1..=5 {
        e.push((i, i % 5 + 1));
        e.push((i + 5, i % 5 + 6));
        e.push((i, i + 5));
    }
    colored(10, &e, &[R, R, B, B, R, B, B, R, R, B], 2)
}

/// Disjoint union of K_4 and a triangular prism.
pub fn k4_plus_prism() -> ColoredGraph {
    let mut e = vec![(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (3, 6), (2, 5)];
    for u in 7..=10 {
        for v in u + 1..=10 {
            e.push((u, v));
        }
    }
    colored(10, &e, &[R, R, R, B, B, B, R, R, B, B], 2)
}

fn twelve(chords: &[(usize, usize)]) -> ColoredGraph {
    let mut e: Vec<_> = (1..=12).map(|i| (i, i % 12 + 1)).collect();
    e.extend_from_slice(chords);
    colored(12, &e, &[G, G, R, B, B, R, G, G, R, B, B, R], 3)
}

pub fn twelve_g() -> ColoredGraph {
    twelve(&[(1, 11), (2, 4), (3, 12), (5, 7), (6, 9), (8, 10)])
}

pub fn twelve_g_prime() -> ColoredGraph {
    twelve(&[(1, 10), (2, 5), (3, 9), (4, 7), (6, 12), (8, 11)])
}

pub fn colored_petersen() -> ColoredGraph {
    ColoredGraph::new(
        balcolor::graph::petersen(),
        Coloring::new(vec![G, B, R, G, R, B, G, G, B, R], 3).unwrap(),
    )
    .unwrap()
}

fn eight(extra: &[(usize, usize)], colors: &[usize]) -> ColoredGraph {
    let mut e: Vec<_> = (1..=8).map(|i| (i, i % 8 + 1)).collect();
    e.extend_from_slice(extra);
    colored(8, &e, colors, 2)
}

pub fn eight_g() -> ColoredGraph {
    eight(&[(2, 4), (6, 8), (2, 8), (4, 6)], &[B, B, R, B, B, R, B, R])
}

pub fn eight_g_prime() -> ColoredGraph {
    eight(&[(2, 4), (6, 8), (2, 6), (4, 8)], &[B, B, R, B, B, R, B, R])
}

pub const EIGHT_G_PRIME_BEST: [usize; 8] = [B, R, R, B, B, R, R, B];

/// Weights along the 20-vertex spine.
pub const CATERPILLAR_WEIGHTS: [usize; 20] = [0, 2, 1, 1, 0, 0, 3, 1, 0, 2, 2, 0, 3, 0, 2, 1, 0, 0, 1, 0];

/// 0-indexed blue spine vertices; the rest of the spine is red.
pub const CATERPILLAR_BLUE_SPINE: [usize; 10] = [0, 3, 4, 8, 9, 10, 14, 15, 17, 18];
