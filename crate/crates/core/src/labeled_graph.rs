//! Labeled graphs `(Γ, o)`: vertices carry a cyclic order that is a prime
//! power or infinite, edges are undirected and simple.
//!
//! Vertices are indexed `0..n` in declaration order and that order is the
//! total order used everywhere a deterministic choice is needed. Vertex sets
//! are bitmasks, which caps graphs at 64 vertices.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Order of a cyclic factor, or of a group element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    /// `self | other`, where every order divides `∞`.
    pub fn divides(self, other: Order) -> bool {
        match (self, other) {
            (_, Order::Infinite) => true,
            (Order::Infinite, Order::Finite(_)) => false,
            (Order::Finite(a), Order::Finite(b)) => b % a == 0,
        }
    }

    pub fn lcm(self, other: Order) -> Order {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a / gcd(a, b) * b),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `Some((p, k))` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > n {
        return Some((n, 1));
    }
    let (mut m, mut k) = (n, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// A set of vertices of one graph, stored as a bitmask.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The labeled graph `(Γ, o)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    names: Vec<String>,
    orders: Vec<Order>,
    adjacency: Vec<VertexSet>,
    index: HashMap<String, Vertex>,
}

impl LabeledGraph {
    /// Builds and validates a graph. The first violated invariant is returned.
    pub fn new<S: AsRef<str>>(vertices: &[(S, Order)], edges: &[(S, S)]) -> Result<Self> {
        let file = GraphFile {
            vertices: vertices
                .iter()
                .map(|(name, order)| VertexEntry { name: name.as_ref().to_owned(), order: *order })
                .collect(),
            edges: edges.iter().map(|(a, b)| [a.as_ref().to_owned(), b.as_ref().to_owned()]).collect(),
        };
        Self::from_file(&file)
    }

    pub fn from_file(file: &GraphFile) -> Result<Self> {
        match validate(file) {
            Ok(()) => {}
            Err(mut errors) => return Err(errors.remove(0)),
        }
        let names: Vec<String> = file.vertices.iter().map(|v| v.name.clone()).collect();
        let orders = file.vertices.iter().map(|v| v.order).collect();
        let index: HashMap<String, Vertex> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let mut adjacency = vec![VertexSet::EMPTY; names.len()];
        for [a, b] in &file.edges {
            let (a, b) = (index[a], index[b]);
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(LabeledGraph { names, orders, adjacency, index })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: (0..self.len())
                .map(|v| VertexEntry { name: self.names[v].clone(), order: self.orders[v] })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| [self.names[a].clone(), self.names[b].clone()])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph serialization cannot fail")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.len()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn order(&self, v: Vertex) -> Order {
        self.orders[v]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex(n.as_ref())).collect()
    }

    pub fn names_of(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Vertex groups at `u` and `v` commute: equal or adjacent vertices.
    pub fn commute(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.adjacency[u].contains(v)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in self.vertices() {
            for b in self.adjacency[a].iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn link(&self, v: Vertex) -> VertexSet {
        self.adjacency[v]
    }

    pub fn star(&self, v: Vertex) -> VertexSet {
        self.adjacency[v].with(v)
    }

    /// `lk Σ`, the intersection of links; the whole vertex set for `Σ = ∅`.
    pub fn link_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(self.all(), |acc, s| acc.intersection(self.link(s)))
    }

    /// `Σ*`, the intersection of stars; the whole vertex set for `Σ = ∅`.
    pub fn star_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(self.all(), |acc, s| acc.intersection(self.star(s)))
    }

    pub fn complement(&self) -> LabeledGraph {
        let all = self.all();
        let adjacency =
            (0..self.len()).map(|v| all.difference(self.adjacency[v]).without(v)).collect();
        LabeledGraph { adjacency, ..self.clone() }
    }

    /// `⟨X⟩_Γ`, re-indexed in the original vertex order.
    pub fn induced_subgraph(&self, set: VertexSet) -> LabeledGraph {
        let kept: Vec<Vertex> = set.iter().filter(|&v| v < self.len()).collect();
        let mut position = vec![usize::MAX; self.len()];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = kept
            .iter()
            .map(|&v| self.adjacency[v].intersection(set).iter().map(|u| position[u]).collect())
            .collect();
        let names: Vec<String> = kept.iter().map(|&v| self.names[v].clone()).collect();
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        LabeledGraph { names, orders: kept.iter().map(|&v| self.orders[v]).collect(), adjacency, index }
    }

    /// Connected components of `⟨set⟩_Γ`, each listed in order of its least vertex.
    pub fn components(&self, set: VertexSet) -> Vec<VertexSet> {
        self.components_with(set, |u| self.adjacency[u])
    }

    /// Connected components of `⟨set⟩` in the complement graph `Γᶜ`.
    pub fn complement_components(&self, set: VertexSet) -> Vec<VertexSet> {
        let all = self.all();
        self.components_with(set, |u| all.difference(self.adjacency[u]).without(u))
    }

    fn components_with(&self, set: VertexSet, neighbours: impl Fn(Vertex) -> VertexSet) -> Vec<VertexSet> {
        let mut remaining = set;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut component = VertexSet::singleton(start);
            let mut frontier = component;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for u in frontier.iter() {
                    next = next.union(neighbours(u));
                }
                frontier = next.intersection(set).difference(component);
                component = component.union(frontier);
            }
            remaining = remaining.difference(component);
            out.push(component);
        }
        out
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adjacency[v]))
    }

    /// Components of `Γ ∖ v*`.
    pub fn components_minus_star(&self, v: Vertex) -> Vec<VertexSet> {
        self.components(self.all().difference(self.star(v)))
    }

    /// `x ≤ y`: `lk x ⊆ y*`.
    pub fn dominates(&self, x: Vertex, y: Vertex) -> bool {
        self.link(x).is_subset(self.star(y))
    }

    /// `x ≤_s y`: `x* ⊆ y*`.
    pub fn dominates_strongly(&self, x: Vertex, y: Vertex) -> bool {
        self.star(x).is_subset(self.star(y))
    }

    /// `[x]`, the class of `x` under `x ≤ y ∧ y ≤ x`.
    pub fn equivalence_class(&self, x: Vertex) -> VertexSet {
        self.vertices().filter(|&y| self.dominates(x, y) && self.dominates(y, x)).collect()
    }

    /// `[x]_s`, the class of `x` under mutual strong domination.
    pub fn strong_class(&self, x: Vertex) -> VertexSet {
        self.vertices()
            .filter(|&y| self.dominates_strongly(x, y) && self.dominates_strongly(y, x))
            .collect()
    }

    /// `Γ_v = {x : v ≤ x}`.
    pub fn gamma_v(&self, v: Vertex) -> VertexSet {
        self.vertices().filter(|&x| self.dominates(v, x)).collect()
    }

    /// `Ω_v = Γ_v ∖ lk v`.
    pub fn omega_v(&self, v: Vertex) -> VertexSet {
        self.gamma_v(v).difference(self.link(v))
    }

    /// Maximal cliques, each sorted, the list sorted lexicographically.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(VertexSet::EMPTY, self.all(), VertexSet::EMPTY, &mut out);
        let mut sorted: Vec<Vec<Vertex>> = out.iter().map(|c| c.iter().collect()).collect();
        sorted.sort();
        sorted.into_iter().map(|c| c.into_iter().collect()).collect()
    }

    fn bron_kerbosch(&self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(self.link(u)).len()).unwrap();
        for v in p.difference(self.link(pivot)).iter() {
            let nv = self.link(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// `Γ ∗ Δ`: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &LabeledGraph) -> Result<LabeledGraph> {
        if let Some(clash) = other.names.iter().find(|n| self.index.contains_key(*n)) {
            return Err(Error::JoinNotDisjoint(clash.clone()));
        }
        let mut file = self.to_file();
        let theirs = other.to_file();
        file.vertices.extend(theirs.vertices);
        file.edges.extend(theirs.edges);
        for a in &self.names {
            for b in &other.names {
                file.edges.push([a.clone(), b.clone()]);
            }
        }
        LabeledGraph::from_file(&file)
    }

    /// All label-preserving graph automorphisms, identity first, in
    /// lexicographic order of the image tuple.
    pub fn labeled_automorphisms(&self) -> Vec<GraphAutomorphism> {
        let n = self.len();
        let signature: Vec<(Order, usize, Vec<(Order, usize)>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<(Order, usize)> =
                    self.link(v).iter().map(|u| (self.orders[u], self.degree(u))).collect();
                nbrs.sort();
                (self.orders[v], self.degree(v), nbrs)
            })
            .collect();
        let mut out = Vec::new();
        let mut mapping = Vec::with_capacity(n);
        self.extend_automorphism(&signature, &mut mapping, VertexSet::EMPTY, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        signature: &[(Order, usize, Vec<(Order, usize)>)],
        mapping: &mut Vec<Vertex>,
        used: VertexSet,
        out: &mut Vec<GraphAutomorphism>,
    ) {
        let v = mapping.len();
        if v == self.len() {
            out.push(GraphAutomorphism { mapping: mapping.clone() });
            return;
        }
        for image in self.vertices() {
            if used.contains(image) || signature[image] != signature[v] {
                continue;
            }
            let consistent = (0..v).all(|u| self.adjacent(u, v) == self.adjacent(mapping[u], image));
            if consistent {
                mapping.push(image);
                self.extend_automorphism(signature, mapping, used.with(image), out);
                mapping.pop();
            }
        }
    }
}

/// Every violated invariant of a graph description.
pub fn validate(file: &GraphFile) -> std::result::Result<(), Vec<Error>> {
    let mut errors = Vec::new();
    if file.vertices.len() > 64 {
        errors.push(Error::TooManyVertices(file.vertices.len()));
    }
    let mut seen = HashMap::new();
    for entry in &file.vertices {
        if seen.insert(entry.name.as_str(), ()).is_some() {
            errors.push(Error::DuplicateVertex(entry.name.clone()));
        }
        if let Order::Finite(n) = entry.order {
            if prime_power(n).is_none() {
                errors.push(Error::NotPrimePower(n, entry.name.clone()));
            }
        }
    }
    let mut edges = HashMap::new();
    for [a, b] in &file.edges {
        for end in [a, b] {
            if !seen.contains_key(end.as_str()) {
                errors.push(Error::UnknownVertex(end.clone()));
            }
        }
        if a == b {
            errors.push(Error::SelfLoop(a.clone()));
            continue;
        }
        let key = if a < b { (a, b) } else { (b, a) };
        if edges.insert(key, ()).is_some() {
            errors.push(Error::DuplicateEdge(a.clone(), b.clone()));
        }
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

/// A labeled graph automorphism, stored as the image of each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphAutomorphism {
    pub mapping: Vec<Vertex>,
}

impl GraphAutomorphism {
    pub fn identity(n: usize) -> Self {
        GraphAutomorphism { mapping: (0..n).collect() }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.mapping[v]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism { mapping: other.mapping.iter().map(|&v| self.mapping[v]).collect() }
    }

    pub fn inverse(&self) -> GraphAutomorphism {
        let mut mapping = vec![0; self.mapping.len()];
        for (v, &image) in self.mapping.iter().enumerate() {
            mapping[image] = v;
        }
        GraphAutomorphism { mapping }
    }

    pub fn preserves(&self, graph: &LabeledGraph) -> bool {
        graph.vertices().all(|v| graph.order(v) == graph.order(self.apply(v)))
            && graph.vertices().all(|u| {
                graph.vertices().all(|v| graph.adjacent(u, v) == graph.adjacent(self.apply(u), self.apply(v)))
            })
    }
}

/// On-disk graph description:
/// `{"vertices":[{"name":"a","order":4},{"name":"b","order":"inf"}],"edges":[["a","b"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub name: String,
    #[serde(with = "order_json")]
    pub order: Order,
}

mod order_json {
    use super::Order;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(u64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(order: &Order, s: S) -> Result<S::Ok, S::Error> {
        match order {
            Order::Finite(n) => s.serialize_u64(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Order, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Order::Finite(n)),
            Raw::Text(t) if t == "inf" => Ok(Order::Infinite),
            Raw::Text(t) => Err(D::Error::custom(format!("order must be an integer or \"inf\", got {t:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: Order = Order::Infinite;

    fn path3() -> LabeledGraph {
        LabeledGraph::new(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn set(g: &LabeledGraph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    #[test]
    fn validation_reports_each_problem() {
        let tri = LabeledGraph::new(
            &[("a", Order::Finite(2)), ("b", Order::Finite(2)), ("c", Order::Finite(2))],
            &[("a", "b"), ("b", "c"), ("a", "c")],
        );
        assert!(tri.is_ok());
        let six = LabeledGraph::new(&[("a", Order::Finite(6))], &[]);
        assert_eq!(six.unwrap_err(), Error::NotPrimePower(6, "a".into()));
        let looped = LabeledGraph::new(&[("a", INF)], &[("a", "a")]);
        assert_eq!(looped.unwrap_err(), Error::SelfLoop("a".into()));
        let dup = LabeledGraph::new(&[("a", INF), ("a", INF)], &[]);
        assert_eq!(dup.unwrap_err(), Error::DuplicateVertex("a".into()));
        let file = GraphFile {
            vertices: vec![
                VertexEntry { name: "a".into(), order: Order::Finite(12) },
                VertexEntry { name: "b".into(), order: Order::Finite(1) },
            ],
            edges: vec![["a".into(), "a".into()], ["a".into(), "z".into()]],
        };
        assert_eq!(validate(&file).unwrap_err().len(), 4);
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..=32).filter(|&n| prime_power(n).is_some()).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
    }

    #[test]
    fn links_and_stars() {
        let g = path3();
        let (a, b) = (g.vertex("a").unwrap(), g.vertex("b").unwrap());
        assert_eq!(g.link(b), set(&g, &["a", "c"]));
        assert_eq!(g.link(a), set(&g, &["b"]));
        assert_eq!(g.star(b), set(&g, &["a", "b", "c"]));
        assert_eq!(g.star(a), set(&g, &["a", "b"]));
        let d = LabeledGraph::new(&[("d", INF)], &[]).unwrap();
        assert_eq!(d.link(0), VertexSet::EMPTY);
        assert_eq!(d.star(0), VertexSet::singleton(0));
        assert!(g.vertex("z").is_err());
    }

    #[test]
    fn set_links() {
        let tri = LabeledGraph::new(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        assert_eq!(tri.link_of_set(set(&tri, &["a", "b"])), set(&tri, &["c"]));
        let g = path3();
        assert_eq!(g.link_of_set(set(&g, &["a", "c"])), set(&g, &["b"]));
        assert_eq!(g.link_of_set(set(&g, &["b"])), g.link(1));
        assert_eq!(g.link_of_set(VertexSet::EMPTY), g.all());
        assert_eq!(g.star_of_set(VertexSet::EMPTY), g.all());
        assert_eq!(g.star_of_set(set(&g, &["a", "c"])), set(&g, &["b"]));
    }

    #[test]
    fn complement_and_induced() {
        let tri = LabeledGraph::new(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        assert!(tri.complement().edges().is_empty());
        assert_eq!(tri.complement().complement(), tri);
        let square = LabeledGraph::new(
            &[("a", INF), ("b", INF), ("c", INF), ("d", INF)],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let ac = square.induced_subgraph(set(&square, &["a", "c"]));
        assert_eq!(ac.len(), 2);
        assert!(ac.edges().is_empty());
        assert_eq!(square.induced_subgraph(square.all()), square);
        assert!(square.induced_subgraph(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn components_after_removing_star() {
        let names = ["a", "b", "c", "d", "e"];
        let verts: Vec<(&str, Order)> = names.iter().map(|n| (*n, INF)).collect();
        let p5 = LabeledGraph::new(&verts, &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")]).unwrap();
        let c = p5.vertex("c").unwrap();
        assert_eq!(p5.components_minus_star(c), vec![set(&p5, &["a"]), set(&p5, &["e"])]);
        let g = path3();
        assert!(g.components_minus_star(1).is_empty());
        let square = LabeledGraph::new(
            &[("a", INF), ("b", INF), ("c", INF), ("d", INF)],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        assert_eq!(square.components_minus_star(0), vec![set(&square, &["c"])]);
    }

    #[test]
    fn domination() {
        let g = path3();
        let (a, b, c) = (0, 1, 2);
        assert!(g.dominates(a, b));
        assert!(!g.dominates(b, a));
        assert!(g.dominates_strongly(a, b));
        assert!(!g.dominates_strongly(a, c));
        assert!(g.dominates_strongly(a, a));
        let iso = LabeledGraph::new(&[("x", INF), ("y", INF)], &[("x", "y")]).unwrap();
        let lone = LabeledGraph::new(&[("x", INF), ("y", INF)], &[]).unwrap();
        assert!(lone.dominates(0, 1));
        assert!(iso.dominates(0, 1));
    }

    #[test]
    fn classes() {
        let discrete = LabeledGraph::new(&[("a", INF), ("b", INF)], &[]).unwrap();
        assert_eq!(discrete.equivalence_class(0), discrete.all());
        let g = path3();
        assert_eq!(g.equivalence_class(0), set(&g, &["a", "c"]));
        assert_eq!(g.strong_class(0), set(&g, &["a"]));
        let k3 = LabeledGraph::new(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        assert_eq!(k3.strong_class(1), k3.all());
    }

    #[test]
    fn gamma_and_omega() {
        let g = path3();
        assert_eq!(g.gamma_v(0), g.all());
        assert_eq!(g.omega_v(0), set(&g, &["a", "c"]));
        let star = LabeledGraph::new(
            &[("v", INF), ("l1", INF), ("l2", INF), ("l3", INF)],
            &[("v", "l1"), ("v", "l2"), ("v", "l3")],
        )
        .unwrap();
        assert!(star.gamma_v(1).contains(0));
    }

    #[test]
    fn automorphisms_of_small_graphs() {
        let flip = LabeledGraph::new(
            &[("a", INF), ("b", INF), ("c", INF), ("d", INF)],
            &[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")],
        )
        .unwrap();
        let autos = flip.labeled_automorphisms();
        assert_eq!(autos.len(), 2);
        assert!(autos[0].is_identity());
        assert_eq!(autos[1].mapping, vec![1, 0, 2, 3]);

        let labels = LabeledGraph::new(
            &[("a", Order::Finite(2)), ("b", INF), ("c", Order::Finite(3))],
            &[("a", "b"), ("b", "c")],
        )
        .unwrap();
        assert_eq!(labels.labeled_automorphisms().len(), 1);

        let discrete = LabeledGraph::new(&[("a", INF), ("b", INF)], &[]).unwrap();
        assert_eq!(discrete.labeled_automorphisms().len(), 2);
    }

    #[test]
    fn cliques() {
        let k3 = LabeledGraph::new(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b"), ("b", "c"), ("a", "c")])
            .unwrap();
        assert_eq!(k3.maximal_cliques(), vec![k3.all()]);
        let g = path3();
        assert_eq!(g.maximal_cliques(), vec![set(&g, &["a", "b"]), set(&g, &["b", "c"])]);
        let discrete = LabeledGraph::new(&[("a", INF), ("b", INF)], &[]).unwrap();
        assert_eq!(discrete.maximal_cliques(), vec![VertexSet::singleton(0), VertexSet::singleton(1)]);
    }

    #[test]
    fn joins() {
        let x = LabeledGraph::new(&[("x", INF)], &[]).unwrap();
        let y = LabeledGraph::new(&[("y", INF)], &[]).unwrap();
        assert_eq!(x.join(&y).unwrap().edges(), vec![(0, 1)]);
        let d1 = LabeledGraph::new(&[("a", INF), ("c", INF)], &[]).unwrap();
        let d2 = LabeledGraph::new(&[("b", INF), ("d", INF)], &[]).unwrap();
        let square = d1.join(&d2).unwrap();
        // a, c, b, d: every vertex has degree 2 and the complement is a perfect matching
        assert!(square.vertices().all(|v| square.degree(v) == 2));
        assert_eq!(square.complement().edges(), vec![(0, 1), (2, 3)]);
        let empty = LabeledGraph::new::<&str>(&[], &[]).unwrap();
        assert_eq!(d1.join(&empty).unwrap(), d1);
        assert!(d1.join(&d1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":[{"name":"a","order":4},{"name":"b","order":"inf"}],"edges":[["a","b"]]}"#;
        let g = LabeledGraph::from_json(text).unwrap();
        assert_eq!(g.order(0), Order::Finite(4));
        assert_eq!(g.order(1), INF);
        assert_eq!(g.to_json(), text);
        assert!(LabeledGraph::from_json(r#"{"vertices":[{"name":"a","order":"big"}],"edges":[]}"#).is_err());
    }
}
