//! Endomorphisms given by vertex images, automorphisms with explicit
//! inverses, and the support-based predicates used to classify them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::GeneratorDescriptor;
use crate::labeled_graph::{GraphAutomorphism, Order, VertexSet};
use crate::words::{GraphProduct, GroupElement};

/// The image of every vertex, indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap {
    pub images: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellDefinedFailure {
    NotCommuting { x: String, y: String },
    OrderMismatch { vertex: String, expected: Order, found: Order },
}

impl fmt::Display for WellDefinedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WellDefinedFailure::NotCommuting { x, y } => {
                write!(f, "images of adjacent vertices `{x}` and `{y}` do not commute")
            }
            WellDefinedFailure::OrderMismatch { vertex, expected, found } => {
                write!(f, "image of `{vertex}` has order {found}, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub forward: VertexMap,
    pub inverse: VertexMap,
    /// Generators this automorphism was built from, outermost first.
    pub trace: Vec<GeneratorDescriptor>,
}

/// A step of a decomposition: generator `index`, or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub index: usize,
    pub inverse: bool,
}

/// `{"images": {"a": "a b^2"}, "inverse": {"a": "a b^-2"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismFile {
    pub images: BTreeMap<String, String>,
    pub inverse: BTreeMap<String, String>,
}

impl GraphProduct {
    pub fn identity_map(&self) -> VertexMap {
        VertexMap { images: self.graph().vertices().map(|v| self.generator(v)).collect() }
    }

    /// Extends `m` multiplicatively to the word `g`.
    pub fn map_element(&self, m: &VertexMap, g: &GroupElement) -> GroupElement {
        let parts: Vec<GroupElement> =
            g.syllables().iter().map(|s| self.power(&m.images[s.vertex], s.exponent)).collect();
        self.product(parts.iter())
    }

    /// `m ∘ n` on vertex images.
    pub fn compose_maps(&self, m: &VertexMap, n: &VertexMap) -> VertexMap {
        VertexMap { images: n.images.iter().map(|g| self.map_element(m, g)).collect() }
    }

    pub fn is_well_defined(&self, m: &VertexMap) -> std::result::Result<(), WellDefinedFailure> {
        let graph = self.graph();
        for (x, y) in graph.edges() {
            if !self.commutes(&m.images[x], &m.images[y]) {
                return Err(WellDefinedFailure::NotCommuting { x: graph.name(x).into(), y: graph.name(y).into() });
            }
        }
        for v in graph.vertices() {
            let found = self.order_of(&m.images[v]);
            if found != graph.order(v) {
                return Err(WellDefinedFailure::OrderMismatch {
                    vertex: graph.name(v).into(),
                    expected: graph.order(v),
                    found,
                });
            }
        }
        Ok(())
    }

    /// Checks both maps and that they are mutually inverse.
    pub fn automorphism(&self, forward: VertexMap, inverse: VertexMap) -> Result<Automorphism> {
        self.is_well_defined(&forward).map_err(Error::NotWellDefined)?;
        self.is_well_defined(&inverse).map_err(Error::NotWellDefined)?;
        let id = self.identity_map();
        if self.compose_maps(&forward, &inverse) != id || self.compose_maps(&inverse, &forward) != id {
            return Err(Error::NotInverse);
        }
        Ok(Automorphism { forward, inverse, trace: Vec::new() })
    }

    pub fn identity_automorphism(&self) -> Automorphism {
        Automorphism { forward: self.identity_map(), inverse: self.identity_map(), trace: Vec::new() }
    }

    pub fn apply(&self, auto: &Automorphism, g: &GroupElement) -> GroupElement {
        self.map_element(&auto.forward, g)
    }

    /// `f ∘ g`.
    pub fn compose(&self, f: &Automorphism, g: &Automorphism) -> Automorphism {
        Automorphism {
            forward: self.compose_maps(&f.forward, &g.forward),
            inverse: self.compose_maps(&g.inverse, &f.inverse),
            trace: f.trace.iter().chain(&g.trace).cloned().collect(),
        }
    }

    pub fn inverse(&self, auto: &Automorphism) -> Automorphism {
        Automorphism { forward: auto.inverse.clone(), inverse: auto.forward.clone(), trace: Vec::new() }
    }

    pub fn equal(&self, f: &Automorphism, g: &Automorphism) -> bool {
        f.forward == g.forward
    }

    /// Inner automorphism `g ↦ w g w⁻¹`.
    pub fn inner(&self, w: &GroupElement) -> Automorphism {
        let winv = self.invert(w);
        let by = |c: &GroupElement| VertexMap {
            images: self.graph().vertices().map(|v| self.conjugate(&self.generator(v), c)).collect(),
        };
        Automorphism { forward: by(w), inverse: by(&winv), trace: Vec::new() }
    }

    /// Vertices sent to a conjugate of themselves.
    pub fn conjugating_set(&self, auto: &Automorphism) -> VertexSet {
        self.graph()
            .vertices()
            .filter(|&v| self.cyclically_reduce(&auto.forward.images[v]).1 == self.generator(v))
            .collect()
    }

    /// Whether `csupp θ(v)` is connected in the complement graph.
    fn complement_connected(&self, set: VertexSet) -> bool {
        self.graph().complement_components(set).len() == 1
    }

    /// Vertices `v` with `v ∈ csupp θ(v)` and `⟨csupp θ(v)⟩ᶜ` connected.
    pub fn simple_set(&self, auto: &Automorphism) -> VertexSet {
        self.graph()
            .vertices()
            .filter(|&v| {
                let cs = self.cyclic_support(&auto.forward.images[v]);
                cs.contains(v) && self.complement_connected(cs)
            })
            .collect()
    }

    /// Every `csupp θ(v)` is complement-connected and inside `Γ_v`.
    pub fn is_quasi_simple(&self, auto: &Automorphism) -> bool {
        self.graph().vertices().all(|v| {
            let cs = self.cyclic_support(&auto.forward.images[v]);
            self.complement_connected(cs) && cs.is_subset(self.graph().gamma_v(v))
        })
    }

    /// A labeled graph automorphism `γ` with `γ(v) ∈ csupp θ(v)` for all `v`.
    pub fn induced_graph_automorphism(&self, auto: &Automorphism) -> Result<GraphAutomorphism> {
        let csupps: Vec<VertexSet> =
            auto.forward.images.iter().map(|g| self.cyclic_support(g)).collect();
        self.graph()
            .labeled_automorphisms()
            .into_iter()
            .find(|gamma| self.graph().vertices().all(|v| csupps[v].contains(gamma.apply(v))))
            .ok_or_else(|| Error::Internal("no labeled graph automorphism fits the cyclic supports".into()))
    }

    /// Bidirectional breadth-first search for `target = g_{s₁} ∘ ⋯ ∘ g_{s_k}`
    /// with `k ≤ max_depth`, where each step is a generator or its inverse.
    pub fn decompose_over_generators(
        &self,
        target: &Automorphism,
        gens: &[Automorphism],
        max_depth: usize,
    ) -> Option<Vec<Step>> {
        let id = self.identity_map();
        if target.forward == id {
            return Some(Vec::new());
        }
        let steps: Vec<(Step, &VertexMap, &VertexMap)> = gens
            .iter()
            .enumerate()
            .flat_map(|(index, g)| {
                [
                    (Step { index, inverse: false }, &g.forward, &g.inverse),
                    (Step { index, inverse: true }, &g.inverse, &g.forward),
                ]
            })
            .collect();

        // forward nodes: A = compose(word); backward nodes: C = target ∘ compose(word)⁻¹
        let mut seen_front: HashMap<VertexMap, Vec<Step>> = HashMap::from([(id.clone(), Vec::new())]);
        let mut seen_back: HashMap<VertexMap, Vec<Step>> = HashMap::from([(target.forward.clone(), Vec::new())]);
        let mut front = vec![id];
        let mut back = vec![target.forward.clone()];
        let (mut depth_front, mut depth_back) = (0, 0);

        while depth_front + depth_back < max_depth {
            let expand_front = front.len() <= back.len();
            let (layer, seen, other) = if expand_front {
                (&mut front, &mut seen_front, &seen_back)
            } else {
                (&mut back, &mut seen_back, &seen_front)
            };
            let mut next = Vec::new();
            for node in layer.iter() {
                let word = seen[node].clone();
                for &(step, fwd, inv) in &steps {
                    let (image, new_word) = if expand_front {
                        let mut w = word.clone();
                        w.push(step);
                        (self.compose_maps(node, fwd), w)
                    } else {
                        let mut w = vec![step];
                        w.extend(&word);
                        (self.compose_maps(node, inv), w)
                    };
                    if seen.contains_key(&image) {
                        continue;
                    }
                    if let Some(rest) = other.get(&image) {
                        let full = if expand_front {
                            new_word.iter().chain(rest).copied().collect()
                        } else {
                            rest.iter().chain(&new_word).copied().collect()
                        };
                        return Some(full);
                    }
                    seen.insert(image.clone(), new_word);
                    next.push(image);
                }
            }
            if next.is_empty() {
                return None;
            }
            *layer = next;
            if expand_front {
                depth_front += 1;
            } else {
                depth_back += 1;
            }
        }
        None
    }

    /// Composes the generators along `word`.
    pub fn evaluate_word(&self, word: &[Step], gens: &[Automorphism]) -> Automorphism {
        word.iter().fold(self.identity_automorphism(), |acc, s| {
            let g = if s.inverse { self.inverse(&gens[s.index]) } else { gens[s.index].clone() };
            self.compose(&acc, &g)
        })
    }

    pub fn automorphism_to_file(&self, auto: &Automorphism) -> AutomorphismFile {
        let names = |m: &VertexMap| {
            self.graph().vertices().map(|v| (self.graph().name(v).to_owned(), self.render(&m.images[v]))).collect()
        };
        AutomorphismFile { images: names(&auto.forward), inverse: names(&auto.inverse) }
    }

    /// Reads both vertex maps without checking them.
    pub fn vertex_maps_from_file(&self, file: &AutomorphismFile) -> Result<(VertexMap, VertexMap)> {
        let read = |table: &BTreeMap<String, String>| -> Result<VertexMap> {
            for name in table.keys() {
                self.graph().vertex(name)?;
            }
            let images = self
                .graph()
                .vertices()
                .map(|v| {
                    let name = self.graph().name(v);
                    let text = table.get(name).ok_or_else(|| Error::MissingImage(name.to_owned()))?;
                    self.parse(text)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(VertexMap { images })
        };
        Ok((read(&file.images)?, read(&file.inverse)?))
    }

    pub fn automorphism_from_file(&self, file: &AutomorphismFile) -> Result<Automorphism> {
        let (forward, inverse) = self.vertex_maps_from_file(file)?;
        self.automorphism(forward, inverse)
    }

    pub fn automorphism_from_json(&self, text: &str) -> Result<Automorphism> {
        self.automorphism_from_file(&serde_json::from_str(text)?)
    }

    pub fn automorphism_to_json(&self, auto: &Automorphism) -> String {
        serde_json::to_string(&self.automorphism_to_file(auto)).expect("automorphism serializes")
    }
}
