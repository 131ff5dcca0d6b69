#![allow(dead_code)]

use graphprod::{GraphProduct, GroupElement, LabeledGraph, Order, Syllable};
use rand::seq::SliceRandom;
use rand::Rng;

pub const INF: Order = Order::Infinite;

pub fn fin(n: u64) -> Order {
    Order::Finite(n)
}

pub fn group(vertices: &[(&str, Order)], edges: &[(&str, &str)]) -> GraphProduct {
    GraphProduct::new(LabeledGraph::new(vertices, edges).unwrap())
}

/// The 4-vertex graph whose only nontrivial symmetry exchanges `a` and `b`.
pub fn flip_graph() -> GraphProduct {
    group(
        &[("a", INF), ("b", INF), ("c", INF), ("d", INF)],
        &[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")],
    )
}

pub fn path3_mixed() -> GraphProduct {
    group(&[("a", fin(2)), ("b", fin(4)), ("c", INF)], &[("a", "b"), ("b", "c")])
}

pub fn cycle5() -> GraphProduct {
    group(
        &[("a", INF), ("b", INF), ("c", INF), ("d", INF), ("e", INF)],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
    )
}

const LABELS: [Order; 10] = [
    Order::Finite(2),
    Order::Finite(3),
    Order::Finite(4),
    Order::Finite(5),
    Order::Finite(8),
    Order::Finite(9),
    Order::Infinite,
    Order::Infinite,
    Order::Infinite,
    Order::Infinite,
];

/// A graph on `2..=max` vertices with random edges and labels.
pub fn random_graph<R: Rng>(rng: &mut R, max: usize, infinite_only: bool) -> GraphProduct {
    let n = rng.gen_range(2..=max);
    let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let vertices: Vec<(String, Order)> = names
        .iter()
        .map(|name| {
            let order = if infinite_only { INF } else { *LABELS.choose(rng).unwrap() };
            (name.clone(), order)
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.45) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    GraphProduct::new(LabeledGraph::new(&vertices, &edges).unwrap())
}

/// A random unreduced word of `len` syllables with small exponents.
pub fn random_word<R: Rng>(rng: &mut R, group: &GraphProduct, len: usize) -> Vec<Syllable> {
    let n = group.graph().len();
    (0..len)
        .map(|_| {
            let mut e = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                e = -e;
            }
            Syllable::new(rng.gen_range(0..n), e)
        })
        .collect()
}

pub fn random_element<R: Rng>(rng: &mut R, group: &GraphProduct, len: usize) -> GroupElement {
    group.normalize(&random_word(rng, group, len))
}

/// A word equal to 1 in the group, built from one defining relation.
pub fn random_relator<R: Rng>(rng: &mut R, group: &GraphProduct) -> Vec<Syllable> {
    let graph = group.graph();
    let edges = graph.edges();
    let v = rng.gen_range(0..graph.len());
    match rng.gen_range(0..3) {
        0 if !edges.is_empty() => {
            let (x, y) = edges[rng.gen_range(0..edges.len())];
            vec![Syllable::new(x, 1), Syllable::new(y, 1), Syllable::new(x, -1), Syllable::new(y, -1)]
        }
        1 => match graph.order(v) {
            Order::Finite(o) => vec![Syllable::new(v, 1); o as usize],
            Order::Infinite => vec![Syllable::new(v, 2), Syllable::new(v, -2)],
        },
        _ => {
            let e = rng.gen_range(1..=3);
            vec![Syllable::new(v, e), Syllable::new(v, -e)]
        }
    }
}
