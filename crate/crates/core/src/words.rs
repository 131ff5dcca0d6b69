//! Element arithmetic in the graph product `G = W(Γ, o)`.
//!
//! Elements are stored as syllable sequences `v₁^{e₁} ⋯ v_p^{e_p}` in the
//! canonical reduced form: no two syllables of one vertex can be shuffled
//! together, and among all shuffles by commuting syllables the vertex
//! sequence is lexicographically least for the graph's vertex order.
//! Exponents of finite-order vertices live in `[1, o(v) − 1]`.
//!
//! Length is word length over the letters `v^{±1}`, so a finite-order
//! syllable `v^e` has length `min(e, o(v) − e)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::labeled_graph::{gcd, LabeledGraph, Order, Vertex, VertexSet};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: Vertex,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(vertex: Vertex, exponent: i64) -> Self {
        Syllable { vertex, exponent }
    }
}

/// An element of `W(Γ, o)` in canonical form. Only meaningful together with
/// the [`GraphProduct`] that produced it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    syllables: Vec<Syllable>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::default()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }
}

/// A generator letter `v` or `v⁻¹`. For `o(v) = 2` only `v` is used.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: Vertex,
    pub inverse: bool,
}

impl Letter {
    pub fn new(vertex: Vertex, inverse: bool) -> Self {
        Letter { vertex, inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// The five ways conjugation by one letter can act on an element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionType {
    /// `u = x⁻¹ u' x` reduced; the result is `u'`.
    Cancel = 0,
    /// `x` commutes with every vertex of `supp u`.
    Commute = 1,
    /// `u = x⁻¹ u'` reduced; the result `u' x⁻¹` is a cyclic permutation.
    MoveFirst = 2,
    /// `u = u' x` reduced; the result `x u'` is a cyclic permutation.
    MoveLast = 3,
    /// Nothing cancels: the result is `x u x⁻¹`.
    Extend = 4,
}

impl ReductionType {
    pub fn index(self) -> u8 {
        self as u8
    }
}

/// `w = w4·w3·w2·w1` where every letter of `w_k` acts on `u` by a type-`k`
/// reduction when the letters are applied right to left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationDecomposition {
    pub w4: GroupElement,
    pub w3: GroupElement,
    pub w2: GroupElement,
    pub w1: GroupElement,
    /// Letters in the order they are applied (`x₁` first) with their types.
    pub steps: Vec<(Letter, ReductionType)>,
}

/// The group `W(Γ, o)` together with its element arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphProduct {
    graph: LabeledGraph,
}

impl From<LabeledGraph> for GraphProduct {
    fn from(graph: LabeledGraph) -> Self {
        GraphProduct { graph }
    }
}

impl GraphProduct {
    pub fn new(graph: LabeledGraph) -> Self {
        GraphProduct { graph }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity()
    }

    /// Reduces an exponent into its canonical range; `0` means trivial.
    pub fn reduce_exponent(&self, v: Vertex, e: i64) -> i64 {
        match self.graph.order(v) {
            Order::Finite(n) => e.rem_euclid(n as i64),
            Order::Infinite => e,
        }
    }

    pub fn syllable_length(&self, v: Vertex, e: i64) -> u64 {
        match self.graph.order(v) {
            Order::Finite(n) => {
                let r = e.rem_euclid(n as i64) as u64;
                r.min(n - r)
            }
            Order::Infinite => e.unsigned_abs(),
        }
    }

    pub fn vertex_power(&self, v: Vertex, e: i64) -> GroupElement {
        self.normalize(&[Syllable::new(v, e)])
    }

    pub fn generator(&self, v: Vertex) -> GroupElement {
        self.vertex_power(v, 1)
    }

    pub fn letter(&self, x: Letter) -> GroupElement {
        self.vertex_power(x.vertex, x.sign())
    }

    pub fn inverse_letter(&self, x: Letter) -> Letter {
        if self.graph.order(x.vertex) == Order::Finite(2) {
            x
        } else {
            Letter::new(x.vertex, !x.inverse)
        }
    }

    /// All letters `v^{±1}`, with a single letter for vertices of order 2.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for v in self.graph.vertices() {
            out.push(Letter::new(v, false));
            if self.graph.order(v) != Order::Finite(2) {
                out.push(Letter::new(v, true));
            }
        }
        out
    }

    /// Parses whitespace-separated tokens `name` or `name^k` without reducing.
    /// A lone `1` denotes the identity.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Syllable>> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            let (name, exponent) = match token.split_once('^') {
                Some((name, exp)) => {
                    let e: i64 = exp.parse().map_err(|_| Error::MalformedToken(token.to_owned()))?;
                    (name, e)
                }
                None => (token, 1),
            };
            if name.is_empty() {
                return Err(Error::MalformedToken(token.to_owned()));
            }
            if name == "1" && exponent == 1 && self.graph.vertex("1").is_err() {
                continue;
            }
            if exponent == 0 {
                return Err(Error::ZeroExponent(token.to_owned()));
            }
            out.push(Syllable::new(self.graph.vertex(name)?, exponent));
        }
        Ok(out)
    }

    pub fn parse(&self, text: &str) -> Result<GroupElement> {
        Ok(self.normalize(&self.parse_word(text)?))
    }

    /// Renders an element in the word syntax accepted by [`Self::parse`].
    pub fn render(&self, g: &GroupElement) -> String {
        if g.is_identity() {
            return "1".to_owned();
        }
        let parts: Vec<String> = g
            .syllables
            .iter()
            .map(|s| {
                let name = self.graph.name(s.vertex);
                if s.exponent == 1 {
                    name.to_owned()
                } else {
                    format!("{name}^{}", s.exponent)
                }
            })
            .collect();
        parts.join(" ")
    }

    pub fn display<'a>(&'a self, g: &'a GroupElement) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a GraphProduct, &'a GroupElement);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        Shown(self, g)
    }

    /// Appends `v^e` to a reduced syllable sequence, keeping it reduced.
    fn push_syllable(&self, word: &mut Vec<Syllable>, v: Vertex, e: i64) {
        let e = self.reduce_exponent(v, e);
        if e == 0 {
            return;
        }
        for i in (0..word.len()).rev() {
            let w = word[i].vertex;
            if w == v {
                let merged = self.reduce_exponent(v, word[i].exponent + e);
                if merged == 0 {
                    word.remove(i);
                } else {
                    word[i].exponent = merged;
                }
                return;
            }
            if !self.graph.adjacent(w, v) {
                break;
            }
        }
        word.push(Syllable::new(v, e));
    }

    /// Lexicographically least shuffle of a reduced sequence.
    fn canonicalize(&self, mut reduced: Vec<Syllable>) -> GroupElement {
        let mut out = Vec::with_capacity(reduced.len());
        while !reduced.is_empty() {
            let mut seen = VertexSet::EMPTY;
            let mut best: Option<usize> = None;
            for (i, s) in reduced.iter().enumerate() {
                if seen.is_subset(self.graph.link(s.vertex))
                    && best.map_or(true, |b| s.vertex < reduced[b].vertex)
                {
                    best = Some(i);
                }
                seen.insert(s.vertex);
            }
            out.push(reduced.remove(best.expect("a reduced word always has a first syllable")));
        }
        GroupElement { syllables: out }
    }

    /// The canonical reduced representative of a raw syllable list.
    pub fn normalize(&self, raw: &[Syllable]) -> GroupElement {
        let mut word = Vec::with_capacity(raw.len());
        for s in raw {
            self.push_syllable(&mut word, s.vertex, s.exponent);
        }
        self.canonicalize(word)
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let mut word = g.syllables.clone();
        for s in &h.syllables {
            self.push_syllable(&mut word, s.vertex, s.exponent);
        }
        self.canonicalize(word)
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        let mut word = Vec::new();
        for f in factors {
            for s in &f.syllables {
                self.push_syllable(&mut word, s.vertex, s.exponent);
            }
        }
        self.canonicalize(word)
    }

    pub fn invert(&self, g: &GroupElement) -> GroupElement {
        let word = g
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable::new(s.vertex, self.reduce_exponent(s.vertex, -s.exponent)))
            .collect();
        self.canonicalize(word)
    }

    pub fn power(&self, g: &GroupElement, n: i64) -> GroupElement {
        let mut base = if n < 0 { self.invert(g) } else { g.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = GroupElement::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `w g w⁻¹`.
    pub fn conjugate(&self, g: &GroupElement, by: &GroupElement) -> GroupElement {
        self.product([by, g, &self.invert(by)])
    }

    pub fn commutator(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.product([g, h, &self.invert(g), &self.invert(h)])
    }

    pub fn commutes(&self, g: &GroupElement, h: &GroupElement) -> bool {
        self.multiply(g, h) == self.multiply(h, g)
    }

    pub fn length(&self, g: &GroupElement) -> u64 {
        g.syllables.iter().map(|s| self.syllable_length(s.vertex, s.exponent)).sum()
    }

    pub fn support(&self, g: &GroupElement) -> VertexSet {
        g.syllables.iter().map(|s| s.vertex).collect()
    }

    /// Positions of syllables that can be shuffled to the front.
    fn front_positions(&self, g: &GroupElement) -> Vec<usize> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for (i, s) in g.syllables.iter().enumerate() {
            if seen.is_subset(self.graph.link(s.vertex)) {
                out.push(i);
            }
            seen.insert(s.vertex);
        }
        out
    }

    /// Positions of syllables that can be shuffled to the end.
    fn end_positions(&self, g: &GroupElement) -> Vec<usize> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for (i, s) in g.syllables.iter().enumerate().rev() {
            if seen.is_subset(self.graph.link(s.vertex)) {
                out.push(i);
            }
            seen.insert(s.vertex);
        }
        out.reverse();
        out
    }

    fn shortens(&self, v: Vertex, e: i64, step: i64) -> bool {
        self.syllable_length(v, e - step) < self.syllable_length(v, e)
    }

    /// Letters `x` with `|x⁻¹ g| = |g| − 1`.
    pub fn first_letters(&self, g: &GroupElement) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in self.front_positions(g) {
            let s = g.syllables[i];
            for x in [Letter::new(s.vertex, false), Letter::new(s.vertex, true)] {
                if self.inverse_letter(x) == x && x.inverse {
                    continue;
                }
                if self.shortens(s.vertex, s.exponent, x.sign()) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Letters `x` with `|g x⁻¹| = |g| − 1`.
    pub fn last_letters(&self, g: &GroupElement) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in self.end_positions(g) {
            let s = g.syllables[i];
            for x in [Letter::new(s.vertex, false), Letter::new(s.vertex, true)] {
                if self.inverse_letter(x) == x && x.inverse {
                    continue;
                }
                if self.shortens(s.vertex, s.exponent, x.sign()) {
                    out.push(x);
                }
            }
        }
        out
    }

    pub fn is_first_letter(&self, g: &GroupElement, x: Letter) -> bool {
        let rest = self.multiply(&self.letter(self.inverse_letter(x)), g);
        self.length(&rest) + 1 == self.length(g)
    }

    pub fn is_last_letter(&self, g: &GroupElement, x: Letter) -> bool {
        let rest = self.multiply(g, &self.letter(self.inverse_letter(x)));
        self.length(&rest) + 1 == self.length(g)
    }

    /// A vertex whose front and end syllables differ and merge into something
    /// shorter when cycled together, with the two exponents.
    fn cyclic_defect(&self, g: &GroupElement) -> Option<(Vertex, i64, i64)> {
        let fronts = self.front_positions(g);
        let ends = self.end_positions(g);
        for &i in &fronts {
            let v = g.syllables[i].vertex;
            for &j in &ends {
                if j == i || g.syllables[j].vertex != v {
                    continue;
                }
                let (e, f) = (g.syllables[i].exponent, g.syllables[j].exponent);
                if self.syllable_length(v, e + f) < self.syllable_length(v, e) + self.syllable_length(v, f) {
                    return Some((v, e, f));
                }
            }
        }
        None
    }

    fn cyclic_defect_at(&self, g: &GroupElement, v: Vertex) -> bool {
        let fronts = self.front_positions(g);
        let ends = self.end_positions(g);
        fronts.iter().any(|&i| {
            g.syllables[i].vertex == v
                && ends.iter().any(|&j| {
                    j != i && g.syllables[j].vertex == v && {
                        let (e, f) = (g.syllables[i].exponent, g.syllables[j].exponent);
                        self.syllable_length(v, e + f) < self.syllable_length(v, e) + self.syllable_length(v, f)
                    }
                })
        })
    }

    /// No vertex has distinct front and end syllables that shorten when
    /// merged through a cyclic permutation.
    pub fn is_cyclically_reduced(&self, g: &GroupElement) -> bool {
        self.cyclic_defect(g).is_none()
    }

    /// Splits `g = w u w⁻¹` with `u` cyclically reduced. Each step conjugates
    /// by the power of one vertex that gives the shortest `u`, preferring the
    /// shortest conjugator on ties.
    pub fn cyclically_reduce(&self, g: &GroupElement) -> (GroupElement, GroupElement) {
        let mut w = GroupElement::identity();
        let mut u = g.clone();
        while let Some((v, e, f)) = self.cyclic_defect(&u) {
            let candidates: Vec<i64> = match self.graph.order(v) {
                Order::Finite(n) => (1..n as i64).collect(),
                Order::Infinite => {
                    let span = e.abs() + f.abs();
                    (-span..=span).filter(|&k| k != 0).collect()
                }
            };
            let mut best: Option<((u64, u64, i64), GroupElement, i64)> = None;
            for k in candidates {
                let shifted = self.product([&self.vertex_power(v, -k), &u, &self.vertex_power(v, k)]);
                if self.cyclic_defect_at(&shifted, v) {
                    continue;
                }
                let key = (self.length(&shifted), self.syllable_length(v, k), k.abs() * 2 + (k < 0) as i64);
                if best.as_ref().map_or(true, |(b, _, _)| key < *b) {
                    best = Some((key, shifted, k));
                }
            }
            let (_, shifted, k) = best.expect("conjugating by the front syllable always removes the defect");
            w = self.multiply(&w, &self.vertex_power(v, k));
            u = shifted;
        }
        (w, u)
    }

    /// `csupp g`, the support of the cyclically reduced part.
    pub fn cyclic_support(&self, g: &GroupElement) -> VertexSet {
        self.support(&self.cyclically_reduce(g).1)
    }

    /// Finite exactly when the cyclically reduced part lives on a clique of
    /// finite-order vertices; then the order of that abelian element.
    pub fn order_of(&self, g: &GroupElement) -> Order {
        let (_, u) = self.cyclically_reduce(g);
        let supp = self.support(&u);
        if !self.graph.is_clique(supp) {
            return Order::Infinite;
        }
        u.syllables.iter().fold(Order::Finite(1), |acc, s| match self.graph.order(s.vertex) {
            Order::Finite(n) => acc.lcm(Order::Finite(n / gcd(n, s.exponent.rem_euclid(n as i64) as u64))),
            Order::Infinite => Order::Infinite,
        })
    }

    /// Classifies `u ↦ x u x⁻¹` and returns the normalized result.
    pub fn reduction_type(&self, u: &GroupElement, x: Letter) -> (ReductionType, GroupElement) {
        if self.support(u).iter().all(|s| self.graph.commute(s, x.vertex)) {
            return (ReductionType::Commute, u.clone());
        }
        let xe = self.letter(x);
        let result = self.conjugate(u, &xe);
        let (before, after) = (self.length(u), self.length(&result));
        let kind = if after + 2 == before {
            ReductionType::Cancel
        } else if after == before && self.is_first_letter(u, self.inverse_letter(x)) {
            ReductionType::MoveFirst
        } else if after == before && self.is_last_letter(u, x) {
            ReductionType::MoveLast
        } else {
            ReductionType::Extend
        };
        (kind, result)
    }

    /// Splits a conjugator `w` against a cyclically reduced `u` so that the
    /// reductions appear in the order 1, 2, 3, 4. Letters are peeled off the
    /// right end of `w`; among all admissible orders the one postponing the
    /// fewest letters to `w4` is returned.
    pub fn conjugation_decomposition(&self, u: &GroupElement, w: &GroupElement) -> Result<ConjugationDecomposition> {
        if !self.is_cyclically_reduced(u) {
            return Err(Error::NotCyclicallyReduced);
        }
        let mut memo = HashMap::new();
        let steps = self.peel(w, u, 1, &mut memo);
        let mut parts: [Vec<GroupElement>; 3] = Default::default();
        let mut rest = w.clone();
        for &(x, kind) in &steps {
            parts[kind.index() as usize - 1].push(self.letter(x));
            rest = self.multiply(&rest, &self.letter(self.inverse_letter(x)));
        }
        let assemble = |letters: &Vec<GroupElement>| self.product(letters.iter().rev());
        let (w1, w2, w3) = (assemble(&parts[0]), assemble(&parts[1]), assemble(&parts[2]));
        let mut all_steps = steps;
        // every remaining letter extends
        let mut tail = rest.clone();
        while let Some(&x) = self.last_letters(&tail).first() {
            all_steps.push((x, ReductionType::Extend));
            tail = self.multiply(&tail, &self.letter(self.inverse_letter(x)));
        }
        let decomposition = ConjugationDecomposition { w4: rest, w3, w2, w1, steps: all_steps };
        let rebuilt = self.product([&decomposition.w4, &decomposition.w3, &decomposition.w2, &decomposition.w1]);
        let total: u64 = [&decomposition.w4, &decomposition.w3, &decomposition.w2, &decomposition.w1]
            .iter()
            .map(|p| self.length(p))
            .sum();
        if rebuilt != *w || total != self.length(w) {
            return Err(Error::Internal("conjugation decomposition does not rebuild w".into()));
        }
        Ok(decomposition)
    }

    fn peel(
        &self,
        w: &GroupElement,
        u: &GroupElement,
        phase: u8,
        memo: &mut HashMap<(GroupElement, GroupElement, u8), Vec<(Letter, ReductionType)>>,
    ) -> Vec<(Letter, ReductionType)> {
        let key = (w.clone(), u.clone(), phase);
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut best: Vec<(Letter, ReductionType)> = Vec::new();
        for x in self.last_letters(w) {
            let (kind, next) = self.reduction_type(u, x);
            let t = kind.index();
            if !(phase..=3).contains(&t) {
                continue;
            }
            let rest = self.multiply(w, &self.letter(self.inverse_letter(x)));
            let tail = self.peel(&rest, &next, t, memo);
            if tail.len() + 1 > best.len() {
                best = std::iter::once((x, kind)).chain(tail).collect();
            }
        }
        memo.insert(key, best.clone());
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: Order = Order::Infinite;

    fn group(vertices: &[(&str, Order)], edges: &[(&str, &str)]) -> GraphProduct {
        GraphProduct::new(LabeledGraph::new(vertices, edges).unwrap())
    }

    fn free(names: &[&str]) -> GraphProduct {
        let v: Vec<(&str, Order)> = names.iter().map(|n| (*n, INF)).collect();
        group(&v, &[])
    }

    #[test]
    fn parsing() {
        let g = free(&["a", "b", "c"]);
        assert_eq!(
            g.parse_word("a b^-1 c^3").unwrap(),
            vec![Syllable::new(0, 1), Syllable::new(1, -1), Syllable::new(2, 3)]
        );
        assert!(g.parse_word("").unwrap().is_empty());
        assert_eq!(g.parse_word("a^0"), Err(Error::ZeroExponent("a^0".into())));
        assert_eq!(g.parse_word("z"), Err(Error::UnknownVertex("z".into())));
        assert_eq!(g.parse_word("a^x"), Err(Error::MalformedToken("a^x".into())));
        assert!(g.parse("1").unwrap().is_identity());
    }

    #[test]
    fn normalize_examples() {
        let g = group(&[("a", Order::Finite(2)), ("b", Order::Finite(3))], &[]);
        assert_eq!(g.render(&g.parse("a^2 b^4").unwrap()), "b");
        let g = group(&[("a", INF), ("b", INF)], &[("a", "b")]);
        assert_eq!(g.render(&g.parse("b a").unwrap()), "a b");
        let g = free(&["a", "b"]);
        assert_eq!(g.render(&g.parse("a b b^-1 a").unwrap()), "a^2");
    }

    #[test]
    fn canonical_form_is_least_shuffle() {
        // a–c adjacent, b free: "c b a" cannot move a past b
        let g = group(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "c")]);
        assert_eq!(g.render(&g.parse("c b a").unwrap()), "c b a");
        assert_eq!(g.render(&g.parse("b c a").unwrap()), "b a c");
        assert_eq!(g.parse("c a b").unwrap(), g.parse("a c b").unwrap());
    }

    #[test]
    fn group_operations() {
        let g = free(&["a", "b"]);
        let x = g.parse("a b a^-1 b^2").unwrap();
        assert!(g.multiply(&x, &g.invert(&x)).is_identity());
        assert_eq!(g.render(&g.invert(&g.parse("a b").unwrap())), "b^-1 a^-1");
        let z3 = group(&[("a", Order::Finite(3))], &[]);
        assert_eq!(z3.render(&z3.power(&z3.generator(0), 5)), "a^2");
        assert!(z3.power(&z3.generator(0), -3).is_identity());
    }

    #[test]
    fn length_and_support() {
        let g = free(&["a", "b"]);
        assert_eq!(g.length(&g.parse("a^2 b^-1").unwrap()), 3);
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.support(&g.parse("a b a^-1").unwrap()), g.graph().all());
        let z5 = group(&[("v", Order::Finite(5))], &[]);
        assert_eq!(z5.length(&z5.parse("v^4").unwrap()), 1);
        assert_eq!(z5.length(&z5.parse("v^3").unwrap()), 2);
    }

    #[test]
    fn cyclic_reduction() {
        let g = free(&["a", "b", "c"]);
        assert!(g.is_cyclically_reduced(&g.parse("b").unwrap()));
        assert!(!g.is_cyclically_reduced(&g.parse("a b a^-1").unwrap()));
        assert!(g.is_cyclically_reduced(&g.parse("a b").unwrap()));
        let (w, u) = g.cyclically_reduce(&g.parse("a b a^-1").unwrap());
        assert_eq!((g.render(&w), g.render(&u)), ("a".into(), "b".into()));
        let (w, u) = g.cyclically_reduce(&g.parse("a b c b^-1 a^-1").unwrap());
        assert_eq!((g.render(&w), g.render(&u)), ("a b".into(), "c".into()));
        let x = g.parse("a^2 b a^-1").unwrap();
        let (w, u) = g.cyclically_reduce(&x);
        assert_eq!((g.render(&w), g.render(&u)), ("a".into(), "a b".into()));
        // same-sign ends do not shorten, so this is already cyclically reduced
        assert!(g.is_cyclically_reduced(&g.parse("a^2 b a").unwrap()));
    }

    #[test]
    fn cyclic_reduction_with_torsion() {
        let g = group(&[("a", Order::Finite(5)), ("b", Order::Finite(2))], &[]);
        let x = g.parse("a^2 b a^2").unwrap();
        assert!(!g.is_cyclically_reduced(&x));
        let (w, u) = g.cyclically_reduce(&x);
        assert_eq!(g.conjugate(&u, &w), x);
        assert_eq!(g.length(&u), 2);
        let g4 = group(&[("a", Order::Finite(4)), ("b", INF)], &[]);
        assert!(g4.is_cyclically_reduced(&g4.parse("a b a").unwrap()));
    }

    #[test]
    fn cyclic_support() {
        let g = free(&["a", "b"]);
        assert_eq!(g.cyclic_support(&g.parse("a b a^-1").unwrap()), VertexSet::singleton(1));
        let x = g.parse("a b").unwrap();
        assert_eq!(g.cyclic_support(&x), g.support(&x));
        assert!(g.cyclic_support(&g.identity()).is_empty());
    }

    #[test]
    fn orders() {
        let g = group(&[("a", Order::Finite(2)), ("b", Order::Finite(3))], &[("a", "b")]);
        assert_eq!(g.order_of(&g.parse("a b").unwrap()), Order::Finite(6));
        assert_eq!(g.order_of(&g.identity()), Order::Finite(1));
        let h = group(&[("a", Order::Finite(2)), ("b", Order::Finite(3))], &[]);
        assert_eq!(h.order_of(&h.parse("a b").unwrap()), INF);
        assert_eq!(h.order_of(&h.parse("a b a").unwrap()), Order::Finite(3));
    }

    #[test]
    fn commuting() {
        let g = group(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b")]);
        assert!(g.commutes(&g.generator(0), &g.generator(1)));
        assert!(!g.commutes(&g.generator(0), &g.generator(2)));
        let x = g.parse("a c b").unwrap();
        assert!(g.commutes(&x, &g.power(&x, 2)));
    }

    #[test]
    fn reduction_types() {
        let g = group(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "b")]);
        let b = g.generator(1);
        assert_eq!(g.reduction_type(&b, Letter::new(0, false)), (ReductionType::Commute, b.clone()));
        let (kind, result) = g.reduction_type(&b, Letter::new(2, false));
        assert_eq!(kind, ReductionType::Extend);
        assert_eq!(g.render(&result), "c b c^-1");

        let f = free(&["a", "b"]);
        let ab = f.parse("a b").unwrap();
        // a⁻¹·(a b)·a moves the first letter to the end
        let (kind, result) = f.reduction_type(&ab, Letter::new(0, true));
        assert_eq!(kind, ReductionType::MoveFirst);
        assert_eq!(f.render(&result), "b a");
        // b·(a b)·b⁻¹ moves the last letter to the front
        let (kind, result) = f.reduction_type(&ab, Letter::new(1, false));
        assert_eq!(kind, ReductionType::MoveLast);
        assert_eq!(f.render(&result), "b a");
        let aba = f.parse("a b a^-1").unwrap();
        let (kind, result) = f.reduction_type(&aba, Letter::new(0, true));
        assert_eq!(kind, ReductionType::Cancel);
        assert_eq!(result, f.generator(1));
    }

    #[test]
    fn decomposition_examples() {
        let g = group(&[("a", INF), ("b", INF), ("c", INF)], &[("a", "c"), ("b", "c")]);
        let ab = g.parse("a b").unwrap();
        let c2 = g.parse("c^2").unwrap();
        let d = g.conjugation_decomposition(&ab, &c2).unwrap();
        assert_eq!(d.w1, c2);
        assert!(d.w2.is_identity() && d.w3.is_identity() && d.w4.is_identity());

        let d = g.conjugation_decomposition(&ab, &g.identity()).unwrap();
        assert!(d.w1.is_identity() && d.w4.is_identity());

        let a_inv = g.parse("a^-1").unwrap();
        let d = g.conjugation_decomposition(&ab, &a_inv).unwrap();
        assert_eq!(d.w2, a_inv);
        let d = g.conjugation_decomposition(&ab, &g.generator(1)).unwrap();
        assert_eq!(d.w3, g.generator(1));
        let d = g.conjugation_decomposition(&ab, &g.generator(0)).unwrap();
        assert_eq!(d.w4, g.generator(0));

        assert_eq!(
            g.conjugation_decomposition(&g.parse("a b a^-1").unwrap(), &ab),
            Err(Error::NotCyclicallyReduced)
        );
    }
}
