//! Roots, basic forms and centralizers.
//!
//! A cyclically reduced `u` with support `S` splits along the connected
//! components `S₁, …, Sₙ` of `⟨S⟩` in the complement graph into commuting
//! pieces `pᵢ`. Each piece is a power `uᵢ^{mᵢ}` of its root and
//! `C(u) = ⟨u₁⟩ × ⋯ × ⟨uₙ⟩ × ⟨lk S⟩`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::labeled_graph::{gcd, LabeledGraph, Order, Vertex, VertexSet};
use crate::words::{GraphProduct, GroupElement, Letter};

/// `g = root^exponent`. `unique` is false when several roots realize the
/// maximal exponent; the least canonical form is returned then.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub root: GroupElement,
    pub exponent: u64,
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicFactor {
    pub root: GroupElement,
    pub exponent: u64,
    /// One connected component of `⟨supp u⟩ᶜ`.
    pub support: VertexSet,
}

/// `u = u₁^{m₁} ⋯ uₙ^{mₙ}`, factors ordered by the least vertex of their support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicForm {
    pub factors: Vec<BasicFactor>,
    /// `lk Σ` for `Σ = supp u`.
    pub link_part: VertexSet,
}

/// `C(g) = w (⟨u₁⟩ × ⋯ × ⟨uₙ⟩ × ⟨lk Σ⟩) w⁻¹` for `g = w u w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerPresentation {
    pub conjugator: GroupElement,
    /// The conjugated roots `w uᵢ w⁻¹`.
    pub cyclic_factors: Vec<GroupElement>,
    pub link_vertices: VertexSet,
    /// Set for the identity, whose centralizer is all of `G`.
    pub whole_group: bool,
}

impl CentralizerPresentation {
    /// Generators of the centralizer as group elements.
    pub fn generators(&self, group: &GraphProduct) -> Vec<GroupElement> {
        let mut out = self.cyclic_factors.clone();
        out.extend(self.link_vertices.iter().map(|z| group.conjugate(&group.generator(z), &self.conjugator)));
        out
    }
}

/// The labeled graph `K(u) = Λ ∗ lk Σ` whose graph product is `C(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerGraph {
    pub graph: LabeledGraph,
    /// Vertices `x₁ … xₙ` of `Λ`, one per basic-form factor.
    pub fresh: Vec<Vertex>,
    /// `(vertex of K, vertex of Γ)` for the copy of `lk Σ`.
    pub link: Vec<(Vertex, Vertex)>,
}

impl GraphProduct {
    /// All `h` of length `len` with `|h⁻¹ g| = |g| − len`.
    pub fn geodesic_prefixes(&self, g: &GroupElement, len: u64) -> Vec<GroupElement> {
        let mut level: BTreeSet<(GroupElement, GroupElement)> = BTreeSet::new();
        level.insert((GroupElement::identity(), g.clone()));
        for _ in 0..len {
            let mut next = BTreeSet::new();
            for (prefix, rest) in &level {
                for x in self.first_letters(rest) {
                    let step = self.letter(x);
                    let inv = self.letter(self.inverse_letter(x));
                    next.insert((self.multiply(prefix, &step), self.multiply(&inv, rest)));
                }
            }
            level = next;
        }
        level.into_iter().map(|(p, _)| p).collect()
    }

    /// Root of a cyclically reduced element of infinite order whose support
    /// is connected in the complement graph.
    fn connected_root(&self, p: &GroupElement) -> (GroupElement, u64) {
        let len = self.length(p);
        for m in (2..=len).rev() {
            if len % m != 0 {
                continue;
            }
            if let Some(r) = self.geodesic_prefixes(p, len / m).into_iter().find(|r| self.power(r, m as i64) == *p) {
                return (r, m);
            }
        }
        (p.clone(), 1)
    }

    /// `v^e = (v^k)^n` with `v^k` generating `⟨v⟩` and `n < o(v)` maximal.
    fn vertex_root(&self, e: i64, order: u64) -> (i64, u64, bool) {
        let o = order as i64;
        for n in (1..o).rev() {
            let ks: Vec<i64> = (1..o).filter(|&k| gcd(k as u64, order) == 1 && (k * n - e).rem_euclid(o) == 0).collect();
            if let Some(&k) = ks.first() {
                return (k, n as u64, ks.len() == 1);
            }
        }
        (e, 1, true)
    }

    /// `g = rⁿ` with `n` maximal; for finite `o(g)`, `n` is maximal in `[1, o(g))`.
    pub fn root(&self, g: &GroupElement) -> Result<Root> {
        if g.is_identity() {
            return Err(Error::IdentityRoot);
        }
        let (w, u) = self.cyclically_reduce(g);
        let root = match self.order_of(&u) {
            Order::Infinite => self.infinite_root(&u)?,
            Order::Finite(o) => self.finite_root(&u, o),
        };
        Ok(Root { root: self.conjugate(&root.root, &w), ..root })
    }

    fn infinite_root(&self, u: &GroupElement) -> Result<Root> {
        let form = self.basic_form(u)?;
        let mut bound = 0;
        for f in &form.factors {
            if self.order_of(&f.root) == Order::Infinite {
                bound = gcd(bound, f.exponent);
            }
        }
        for n in (1..=bound).rev() {
            if bound % n != 0 {
                continue;
            }
            let mut parts = Vec::new();
            let mut unique = true;
            let mut feasible = true;
            for f in &form.factors {
                match self.order_of(&f.root) {
                    Order::Infinite => parts.push(self.power(&f.root, (f.exponent / n) as i64)),
                    Order::Finite(o) => {
                        let ks: Vec<u64> = (0..o).filter(|k| (k * n) % o == f.exponent % o).collect();
                        match ks.first() {
                            Some(&k) => {
                                unique &= ks.len() == 1;
                                parts.push(self.power(&f.root, k as i64));
                            }
                            None => feasible = false,
                        }
                    }
                }
            }
            if feasible {
                return Ok(Root { root: self.product(parts.iter()), exponent: n, unique });
            }
        }
        Err(Error::Internal("no root exponent found for an infinite-order element".into()))
    }

    fn finite_root(&self, u: &GroupElement, order: u64) -> Root {
        let supp: Vec<Vertex> = self.support(u).iter().collect();
        let mut candidates = vec![GroupElement::identity()];
        for &v in &supp {
            let o = self.graph().order(v).finite().expect("finite-order support has finite labels");
            candidates = candidates
                .iter()
                .flat_map(|c| (0..o as i64).map(move |e| (c.clone(), e)))
                .map(|(c, e)| self.multiply(&c, &self.vertex_power(v, e)))
                .collect();
        }
        candidates.sort();
        for n in (1..order).rev() {
            let roots: Vec<&GroupElement> = candidates.iter().filter(|r| self.power(r, n as i64) == *u).collect();
            if let Some(first) = roots.first() {
                return Root { root: (*first).clone(), exponent: n, unique: roots.len() == 1 };
            }
        }
        Root { root: u.clone(), exponent: 1, unique: true }
    }

    /// Splits a cyclically reduced `u ≠ 1` along the components of
    /// `⟨supp u⟩ᶜ`. Finite-order pieces are single vertices `v^e` and get a
    /// generator of `⟨v⟩` as their root.
    pub fn basic_form(&self, u: &GroupElement) -> Result<BasicForm> {
        if u.is_identity() {
            return Err(Error::IdentityBasicForm);
        }
        if !self.is_cyclically_reduced(u) {
            return Err(Error::NotCyclicallyReduced);
        }
        let supp = self.support(u);
        let mut factors = Vec::new();
        for component in self.graph().complement_components(supp) {
            let piece = GroupElement::from_filtered(self, u, component);
            let factor = match (component.len(), self.graph().order(component.first().unwrap())) {
                (1, Order::Finite(o)) => {
                    let v = component.first().unwrap();
                    let e = piece.syllables()[0].exponent;
                    let (k, n, _) = self.vertex_root(e, o);
                    BasicFactor { root: self.vertex_power(v, k), exponent: n, support: component }
                }
                _ => {
                    let (root, m) = self.connected_root(&piece);
                    BasicFactor { root, exponent: m, support: component }
                }
            };
            factors.push(factor);
        }
        let rebuilt = self.product(
            factors.iter().map(|f| self.power(&f.root, f.exponent as i64)).collect::<Vec<_>>().iter(),
        );
        if rebuilt != *u {
            return Err(Error::Internal("basic form does not multiply back to u".into()));
        }
        Ok(BasicForm { factors, link_part: self.graph().link_of_set(supp) })
    }

    pub fn centralizer(&self, g: &GroupElement) -> Result<CentralizerPresentation> {
        if g.is_identity() {
            return Ok(CentralizerPresentation {
                conjugator: GroupElement::identity(),
                cyclic_factors: Vec::new(),
                link_vertices: self.graph().all(),
                whole_group: true,
            });
        }
        let (w, u) = self.cyclically_reduce(g);
        let form = self.basic_form(&u)?;
        let presentation = CentralizerPresentation {
            cyclic_factors: form.factors.iter().map(|f| self.conjugate(&f.root, &w)).collect(),
            conjugator: w,
            link_vertices: form.link_part,
            whole_group: false,
        };
        if let Some(bad) = presentation.generators(self).iter().find(|h| !self.commutes(h, g)) {
            return Err(Error::Internal(format!("centralizer generator {} does not commute", self.render(bad))));
        }
        Ok(presentation)
    }

    pub fn centralizer_graph(&self, u: &GroupElement) -> Result<CentralizerGraph> {
        let form = self.basic_form(u)?;
        let graph = self.graph();
        let mut used: BTreeSet<String> = graph.vertices().map(|v| graph.name(v).to_owned()).collect();
        let mut vertices = Vec::new();
        for (i, f) in form.factors.iter().enumerate() {
            let order = self.order_of(&f.root);
            if order.is_finite() && f.support.len() != 1 {
                return Err(Error::Internal("finite-order root with more than one vertex".into()));
            }
            let mut name = format!("x{}", i + 1);
            while used.contains(&name) {
                name.push('\'');
            }
            used.insert(name.clone());
            vertices.push((name, order));
        }
        let fresh_names: Vec<String> = vertices.iter().map(|(n, _)| n.clone()).collect();
        let mut edges = Vec::new();
        for (i, a) in fresh_names.iter().enumerate() {
            for b in &fresh_names[i + 1..] {
                edges.push((a.clone(), b.clone()));
            }
        }
        let lambda = LabeledGraph::new(&vertices, &edges)?;
        let k = lambda.join(&graph.induced_subgraph(form.link_part))?;
        let link = form.link_part.iter().enumerate().map(|(i, v)| (fresh_names.len() + i, v)).collect();
        Ok(CentralizerGraph { graph: k, fresh: (0..fresh_names.len()).collect(), link })
    }

    /// `rk g`, the number of vertices of `K(u)` for the cyclically reduced
    /// part `u`; `|V|` for the identity.
    pub fn rank(&self, g: &GroupElement) -> Result<usize> {
        if g.is_identity() {
            return Ok(self.graph().len());
        }
        let (_, u) = self.cyclically_reduce(g);
        let form = self.basic_form(&u)?;
        Ok(form.factors.len() + form.link_part.len())
    }

    /// Every `(x, x⁻¹)` pair of letters, used to spell powers in output.
    pub fn letter_pairs(&self) -> Vec<(Letter, Letter)> {
        self.letters().into_iter().map(|x| (x, self.inverse_letter(x))).collect()
    }
}

impl GroupElement {
    /// The subsequence of syllables on `set`. Only a group element when the
    /// syllables on `set` commute with the others, as for components of the
    /// complement graph.
    fn from_filtered(group: &GraphProduct, g: &GroupElement, set: VertexSet) -> GroupElement {
        let raw: Vec<_> = g.syllables().iter().copied().filter(|s| set.contains(s.vertex)).collect();
        group.normalize(&raw)
    }
}
