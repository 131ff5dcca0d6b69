//! Type II Whitehead automorphisms `(A, a)` and the check that every
//! element of the standard generating set is a Whitehead automorphism.

use std::collections::HashMap;

use serde::Serialize;

use crate::automorphisms::VertexMap;
use crate::error::{Error, Result};
use crate::labeled_graph::{Order, Vertex, VertexSet};
use crate::words::{GraphProduct, GroupElement};

use super::{generating_set, whitehead_type_i, Generator, GeneratorDescriptor};

/// `s^{±1}` for an infinite-order vertex or `v^q`, `0 < q < o(v)`, otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhiteheadLetter {
    pub vertex: Vertex,
    pub exponent: i64,
}

impl WhiteheadLetter {
    pub fn new(vertex: Vertex, exponent: i64) -> Self {
        WhiteheadLetter { vertex, exponent }
    }
}

/// How `(A, a)` moves a vertex `x ≠ ζ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    Fix,
    Conjugate,
    /// `x ↦ a^m x`
    Left(i64),
    /// `x ↦ x a^{-m}`
    Right(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "via", rename_all = "snake_case")]
pub enum WhiteheadWitness {
    TypeI { descriptor: GeneratorDescriptor },
    TypeII {
        #[serde(rename = "A")]
        set: Vec<String>,
        a: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageRow {
    pub generator: Vec<GeneratorDescriptor>,
    pub witness: Option<WhiteheadWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiteheadCoverage {
    pub rows: Vec<CoverageRow>,
}

impl WhiteheadCoverage {
    pub fn all_covered(&self) -> bool {
        self.rows.iter().all(|r| r.witness.is_some())
    }
}

fn render_letter(group: &GraphProduct, x: WhiteheadLetter) -> String {
    group.render(&group.vertex_power(x.vertex, x.exponent))
}

fn is_letter(group: &GraphProduct, x: WhiteheadLetter) -> bool {
    if x.vertex >= group.graph().len() {
        return false;
    }
    match group.graph().order(x.vertex) {
        Order::Infinite => x.exponent == 1 || x.exponent == -1,
        Order::Finite(o) => x.exponent > 0 && (x.exponent as u64) < o,
    }
}

/// Least `m ≥ 1` with `a^m ≠ 1` and `o(a^m) | o(x)`.
fn power_for(group: &GraphProduct, a: &GroupElement, x: Vertex) -> Option<i64> {
    let target = group.graph().order(x);
    let bound = match group.order_of(a) {
        Order::Finite(o) => o as i64,
        Order::Infinite => 2,
    };
    (1..bound).find(|&m| {
        let am = group.power(a, m);
        !am.is_identity() && group.order_of(&am).divides(target)
    })
}

/// The automorphism `(A, a)` when the sufficient conditions for
/// well-definedness hold, `None` otherwise.
pub fn whitehead_type_ii(group: &GraphProduct, set: &[WhiteheadLetter], a: WhiteheadLetter) -> Result<Option<Generator>> {
    let graph = group.graph();
    if let Some(bad) = set.iter().chain([&a]).find(|x| !is_letter(group, **x)) {
        return Err(Error::MalformedWhitehead(format!("{bad:?} is not a letter")));
    }
    if !set.contains(&a) {
        return Err(Error::MalformedWhitehead("a must belong to A".into()));
    }
    let zeta = a.vertex;
    if set.iter().any(|x| x.vertex == zeta && *x != a) {
        return Err(Error::MalformedWhitehead("A may contain no other power of the vertex of a".into()));
    }
    let ae = group.vertex_power(zeta, a.exponent);
    let zeta_star = graph.star(zeta);

    let mut moves = vec![Move::Fix; graph.len()];
    for x in graph.vertices().filter(|&x| x != zeta) {
        let xinv = match graph.order(x) {
            Order::Infinite => -1,
            Order::Finite(o) => o as i64 - 1,
        };
        if set.iter().any(|l| l.vertex == x && l.exponent != 1 && l.exponent != xinv) {
            return Err(Error::MalformedWhitehead("only x and x^-1 may appear for a vertex x".into()));
        }
        let has_in = set.contains(&WhiteheadLetter::new(x, 1));
        let has_inv = set.contains(&WhiteheadLetter::new(x, xinv));
        let self_inverse = graph.order(x) == Order::Finite(2);
        let m = || power_for(group, &ae, x);
        let mv = match (has_in, has_inv) {
            (false, false) => Move::Fix,
            (true, true) if !graph.adjacent(x, zeta) => Move::Conjugate,
            (true, true) if !self_inverse => Move::Fix,
            (true, _) => match m() {
                Some(m) => Move::Left(m),
                None => return Ok(None),
            },
            (false, true) => match m() {
                Some(m) => Move::Right(m),
                None => return Ok(None),
            },
        };
        moves[x] = mv;
    }

    let conjugated: VertexSet = graph.vertices().filter(|&x| moves[x] == Move::Conjugate).collect();
    for component in graph.components(graph.all().difference(zeta_star)) {
        let hit = component.intersection(conjugated);
        if !hit.is_empty() && hit != component {
            return Ok(None);
        }
    }
    for x in graph.vertices() {
        if let Move::Left(m) | Move::Right(m) = moves[x] {
            if !graph.link(x).is_subset(zeta_star) {
                return Ok(None);
            }
            if graph.order(x).is_finite()
                && !(graph.star(x).is_subset(zeta_star) && group.order_of(&group.power(&ae, m)).divides(graph.order(x)))
            {
                return Ok(None);
            }
        }
    }

    let build = |by: &GroupElement| {
        let mut images = group.identity_map().images;
        for x in graph.vertices() {
            let gx = group.generator(x);
            images[x] = match moves[x] {
                Move::Fix => gx,
                Move::Conjugate => group.conjugate(&gx, by),
                Move::Left(m) => group.multiply(&group.power(by, m), &gx),
                Move::Right(m) => group.multiply(&gx, &group.power(by, -m)),
            };
        }
        VertexMap { images }
    };
    let forward = build(&ae);
    let inverse = build(&group.invert(&ae));
    let auto = group.automorphism(forward, inverse).map_err(|e| {
        Error::Internal(format!("Whitehead pair passed the sufficient conditions but is not an automorphism: {e}"))
    })?;
    let mut letters: Vec<WhiteheadLetter> = set.to_vec();
    letters.sort();
    let descriptor = GeneratorDescriptor::Whitehead {
        set: letters.iter().map(|&x| render_letter(group, x)).collect(),
        a: render_letter(group, a),
    };
    Ok(Some(Generator::new(descriptor, auto)))
}

/// All letters of `L`.
fn all_letters(group: &GraphProduct) -> Vec<WhiteheadLetter> {
    let graph = group.graph();
    graph
        .vertices()
        .flat_map(|v| match graph.order(v) {
            Order::Infinite => vec![WhiteheadLetter::new(v, 1), WhiteheadLetter::new(v, -1)],
            Order::Finite(o) => (1..o as i64).map(|q| WhiteheadLetter::new(v, q)).collect(),
        })
        .collect()
}

/// Every accepted `(A, a)` where each vertex other than that of `a`
/// contributes a subset of `{x, x⁻¹}` to `A`.
pub fn enumerate_type_ii(group: &GraphProduct) -> Result<Vec<Generator>> {
    let graph = group.graph();
    let mut out = Vec::new();
    for a in all_letters(group) {
        let choices: Vec<Vec<Vec<WhiteheadLetter>>> = graph
            .vertices()
            .filter(|&x| x != a.vertex)
            .map(|x| {
                let pair = match graph.order(x) {
                    Order::Infinite => vec![WhiteheadLetter::new(x, 1), WhiteheadLetter::new(x, -1)],
                    Order::Finite(2) => vec![WhiteheadLetter::new(x, 1)],
                    Order::Finite(o) => vec![WhiteheadLetter::new(x, 1), WhiteheadLetter::new(x, o as i64 - 1)],
                };
                (0..1u32 << pair.len())
                    .map(|mask| pair.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &l)| l).collect())
                    .collect()
            })
            .collect();
        let mut sets: Vec<Vec<WhiteheadLetter>> = vec![vec![a]];
        for options in &choices {
            sets = sets
                .iter()
                .flat_map(|s| options.iter().map(move |o| s.iter().chain(o).copied().collect()))
                .collect();
        }
        for set in sets {
            if let Some(g) = whitehead_type_ii(group, &set, a)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// For each element of `𝒢`, a type I or type II Whitehead automorphism with
/// the same vertex images.
pub fn check_generators_in_whitehead(group: &GraphProduct) -> Result<WhiteheadCoverage> {
    let mut known: HashMap<VertexMap, WhiteheadWitness> = HashMap::new();
    for g in whitehead_type_i(group) {
        known.entry(g.automorphism.forward).or_insert(WhiteheadWitness::TypeI { descriptor: g.descriptors[0].clone() });
    }
    for g in enumerate_type_ii(group)? {
        if let GeneratorDescriptor::Whitehead { set, a } = &g.descriptors[0] {
            known
                .entry(g.automorphism.forward)
                .or_insert(WhiteheadWitness::TypeII { set: set.clone(), a: a.clone() });
        }
    }
    let rows = generating_set(group)
        .into_iter()
        .map(|g| CoverageRow { witness: known.get(&g.automorphism.forward).cloned(), generator: g.descriptors })
        .collect();
    Ok(WhiteheadCoverage { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{partial_conjugations, transvection};
    use crate::labeled_graph::LabeledGraph;

    const INF: Order = Order::Infinite;

    fn group(vertices: &[(&str, Order)], edges: &[(&str, &str)]) -> GraphProduct {
        GraphProduct::new(LabeledGraph::new(vertices, edges).unwrap())
    }

    #[test]
    fn degenerate_pair_is_identity() {
        let g = group(&[("a", INF), ("b", INF)], &[]);
        let a = WhiteheadLetter::new(0, 1);
        let w = whitehead_type_ii(&g, &[a], a).unwrap().unwrap();
        assert!(g.equal(&w.automorphism, &g.identity_automorphism()));
    }

    #[test]
    fn malformed_input() {
        let g = group(&[("a", INF), ("b", Order::Finite(3))], &[]);
        let a = WhiteheadLetter::new(0, 1);
        assert!(whitehead_type_ii(&g, &[a, WhiteheadLetter::new(1, 3)], a).is_err());
        assert!(whitehead_type_ii(&g, &[WhiteheadLetter::new(1, 1)], a).is_err());
        assert!(whitehead_type_ii(&g, &[a, WhiteheadLetter::new(0, -1)], a).is_err());
    }

    #[test]
    fn partial_conjugation_as_pair() {
        let g = group(
            &[("a", INF), ("b", INF), ("c", INF), ("d", INF)],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        );
        let a = WhiteheadLetter::new(0, 1);
        let set = [a, WhiteheadLetter::new(2, 1), WhiteheadLetter::new(2, -1)];
        let w = whitehead_type_ii(&g, &set, a).unwrap().unwrap();
        let sigma = partial_conjugations(&g).into_iter().find(|s| s.automorphism.forward.images[2] != g.generator(2)).unwrap();
        assert!(g.equal(&w.automorphism, &sigma.automorphism));
    }

    #[test]
    fn transvection_as_pair() {
        let g = group(&[("x", INF), ("y", INF)], &[]);
        let a = WhiteheadLetter::new(1, -1);
        let w = whitehead_type_ii(&g, &[a, WhiteheadLetter::new(0, -1)], a).unwrap().unwrap();
        let (_, tau) = transvection(&g, 0, 1).unwrap().unwrap();
        assert!(g.equal(&w.automorphism, &tau));
    }

    #[test]
    fn accepted_pairs_are_automorphisms() {
        let graphs = [
            group(&[("a", Order::Finite(2)), ("b", Order::Finite(4)), ("c", INF)], &[("a", "b"), ("b", "c")]),
            group(&[("a", INF), ("b", Order::Finite(3)), ("c", INF)], &[("a", "b")]),
            group(&[("a", Order::Finite(4)), ("b", Order::Finite(2)), ("c", Order::Finite(8))], &[("a", "b"), ("a", "c")]),
        ];
        for g in &graphs {
            for w in enumerate_type_ii(g).unwrap() {
                assert!(g.is_well_defined(&w.automorphism.forward).is_ok());
            }
        }
    }

    #[test]
    fn coverage_on_small_graphs() {
        let single = group(&[("v", INF)], &[]);
        assert!(check_generators_in_whitehead(&single).unwrap().all_covered());
        let path = group(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b"), ("b", "c")]);
        assert!(check_generators_in_whitehead(&path).unwrap().all_covered());
    }
}
