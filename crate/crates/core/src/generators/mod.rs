//! The generator families of `Aut G`: labeled graph automorphisms, factor
//! automorphisms, transvections and partial conjugations, and the sets
//! assembled from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::automorphisms::{Automorphism, VertexMap};
use crate::error::{Error, Result};
use crate::labeled_graph::{gcd, GraphAutomorphism, Order, Vertex};
use crate::words::{GraphProduct, GroupElement};

mod whitehead;

pub use whitehead::{check_generators_in_whitehead, whitehead_type_ii, WhiteheadCoverage, WhiteheadLetter, WhiteheadWitness};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorDescriptor {
    GraphAutomorphism { mapping: BTreeMap<String, String> },
    Factor { v: String, m: i64 },
    Transvection { x: String, y: String, q: u64 },
    PartialConjugation { v: String, component: Vec<String>, component_index: usize },
    Inner { w: String },
    Whitehead {
        #[serde(rename = "A")]
        set: Vec<String>,
        a: String,
    },
}

/// An automorphism together with every descriptor that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub descriptors: Vec<GeneratorDescriptor>,
    pub automorphism: Automorphism,
}

impl Generator {
    fn new(descriptor: GeneratorDescriptor, mut automorphism: Automorphism) -> Self {
        automorphism.trace = vec![descriptor.clone()];
        Generator { descriptors: vec![descriptor], automorphism }
    }
}

/// Replaces the image of `x` in the identity map.
fn moving_one(group: &GraphProduct, x: Vertex, image: GroupElement) -> VertexMap {
    let mut m = group.identity_map();
    m.images[x] = image;
    m
}

fn unit_inverse(m: u64, o: u64) -> u64 {
    (1..o).find(|k| (k * m) % o == 1).expect("m is a unit")
}

pub fn factor_automorphisms(group: &GraphProduct) -> Vec<Generator> {
    let graph = group.graph();
    let mut out = Vec::new();
    for v in graph.vertices() {
        let exponents: Vec<(i64, i64)> = match graph.order(v) {
            Order::Infinite => vec![(-1, -1)],
            Order::Finite(o) => (2..o)
                .filter(|&m| gcd(m, o) == 1)
                .map(|m| (m as i64, unit_inverse(m, o) as i64))
                .collect(),
        };
        for (m, inv) in exponents {
            let auto = group
                .automorphism(moving_one(group, v, group.vertex_power(v, m)), moving_one(group, v, group.vertex_power(v, inv)))
                .expect("factor automorphisms are well defined");
            out.push(Generator::new(GeneratorDescriptor::Factor { v: graph.name(v).into(), m }, auto));
        }
    }
    out
}

/// `x ↦ x y^q` for the least `q ≥ 1` giving a well-defined map, if any.
pub fn transvection(group: &GraphProduct, x: Vertex, y: Vertex) -> Result<Option<(u64, Automorphism)>> {
    if x == y {
        return Err(Error::SameVertex);
    }
    let gx = group.generator(x);
    let candidates = match group.graph().order(y) {
        Order::Finite(o) => 1..o,
        Order::Infinite => 1..2,
    };
    for q in candidates {
        let forward = moving_one(group, x, group.multiply(&gx, &group.vertex_power(y, q as i64)));
        if group.is_well_defined(&forward).is_err() {
            continue;
        }
        let inverse = moving_one(group, x, group.multiply(&gx, &group.vertex_power(y, -(q as i64))));
        return group.automorphism(forward, inverse).map(|a| Some((q, a)));
    }
    Ok(None)
}

fn transvections(group: &GraphProduct) -> Vec<Generator> {
    let graph = group.graph();
    let mut out = Vec::new();
    for x in graph.vertices() {
        for y in graph.vertices().filter(|&y| y != x) {
            if let Some((q, auto)) = transvection(group, x, y).expect("distinct vertices") {
                let d = GeneratorDescriptor::Transvection { x: graph.name(x).into(), y: graph.name(y).into(), q };
                out.push(Generator::new(d, auto));
            }
        }
    }
    out
}

/// `σ_{K,v}` for every `v` and every component `K` of `Γ ∖ v*`.
pub fn partial_conjugations(group: &GraphProduct) -> Vec<Generator> {
    let graph = group.graph();
    let mut out = Vec::new();
    for v in graph.vertices() {
        let gv = group.generator(v);
        let gv_inv = group.invert(&gv);
        for (index, component) in graph.components_minus_star(v).into_iter().enumerate() {
            let by = |c: &GroupElement| {
                let mut m = group.identity_map();
                for z in component.iter() {
                    m.images[z] = group.conjugate(&group.generator(z), c);
                }
                m
            };
            let auto = group.automorphism(by(&gv), by(&gv_inv)).expect("partial conjugations are well defined");
            let d = GeneratorDescriptor::PartialConjugation {
                v: graph.name(v).into(),
                component: graph.names_of(component),
                component_index: index,
            };
            out.push(Generator::new(d, auto));
        }
    }
    out
}

pub fn graph_automorphism_lift(group: &GraphProduct, gamma: &GraphAutomorphism) -> Generator {
    let graph = group.graph();
    let lift = |g: &GraphAutomorphism| VertexMap { images: graph.vertices().map(|v| group.generator(g.apply(v))).collect() };
    let auto = group.automorphism(lift(gamma), lift(&gamma.inverse())).expect("labeled graph automorphisms lift");
    let mapping = graph.vertices().map(|v| (graph.name(v).to_owned(), graph.name(gamma.apply(v)).to_owned())).collect();
    Generator::new(GeneratorDescriptor::GraphAutomorphism { mapping }, auto)
}

pub fn inner(group: &GraphProduct, w: &GroupElement) -> Generator {
    Generator::new(GeneratorDescriptor::Inner { w: group.render(w) }, group.inner(w))
}

fn graph_automorphism_lifts(group: &GraphProduct) -> Vec<Generator> {
    group
        .graph()
        .labeled_automorphisms()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| graph_automorphism_lift(group, g))
        .collect()
}

/// Merges generators with equal vertex images and drops the identity.
fn deduplicate(group: &GraphProduct, gens: Vec<Generator>) -> Vec<Generator> {
    let id = group.identity_map();
    let mut out: Vec<Generator> = Vec::new();
    let mut index: HashMap<VertexMap, usize> = HashMap::new();
    for g in gens {
        if g.automorphism.forward == id {
            continue;
        }
        match index.get(&g.automorphism.forward) {
            Some(&i) => out[i].descriptors.extend(g.descriptors),
            None => {
                index.insert(g.automorphism.forward.clone(), out.len());
                out.push(g);
            }
        }
    }
    out
}

/// `𝒢`: graph automorphisms, factor automorphisms, transvections and
/// partial conjugations, in that order.
pub fn generating_set(group: &GraphProduct) -> Vec<Generator> {
    let mut all = graph_automorphism_lifts(group);
    all.extend(factor_automorphisms(group));
    all.extend(transvections(group));
    all.extend(partial_conjugations(group));
    deduplicate(group, all)
}

fn restrict(gens: Vec<Generator>, keep: impl Fn(&GeneratorDescriptor) -> bool) -> Vec<Generator> {
    gens.into_iter()
        .filter_map(|mut g| {
            g.descriptors.retain(&keep);
            (!g.descriptors.is_empty()).then_some(g)
        })
        .collect()
}

fn is_star_transvection(group: &GraphProduct, d: &GeneratorDescriptor) -> bool {
    match d {
        GeneratorDescriptor::Transvection { x, y, .. } => {
            let graph = group.graph();
            graph.adjacent(graph.vertex(x).unwrap(), graph.vertex(y).unwrap())
        }
        _ => true,
    }
}

/// `𝒢*`: `𝒢` with only the transvections `τ_{x,y}` for adjacent `x, y`.
pub fn star_generating_set(group: &GraphProduct) -> Vec<Generator> {
    restrict(generating_set(group), |d| is_star_transvection(group, d))
}

/// `𝒢¹`: `𝒢*` without partial conjugations.
pub fn subgroup_one_set(group: &GraphProduct) -> Vec<Generator> {
    restrict(star_generating_set(group), |d| !matches!(d, GeneratorDescriptor::PartialConjugation { .. }))
}

/// `Ω₁`: lifts of labeled graph automorphisms and factor automorphisms.
pub fn whitehead_type_i(group: &GraphProduct) -> Vec<Generator> {
    let mut all = graph_automorphism_lifts(group);
    all.extend(factor_automorphisms(group));
    all
}

impl fmt::Display for GeneratorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorDescriptor::GraphAutomorphism { mapping } => {
                let moved: Vec<String> =
                    mapping.iter().filter(|(a, b)| a != b).map(|(a, b)| format!("{a}->{b}")).collect();
                write!(f, "gamma({})", moved.join(", "))
            }
            GeneratorDescriptor::Factor { v, m } => write!(f, "phi({v}, {m})"),
            GeneratorDescriptor::Transvection { x, y, q } => write!(f, "tau({x}, {y}, {q})"),
            GeneratorDescriptor::PartialConjugation { v, component, .. } => {
                write!(f, "sigma({{{}}}, {v})", component.join(", "))
            }
            GeneratorDescriptor::Inner { w } => write!(f, "inner({w})"),
            GeneratorDescriptor::Whitehead { set, a } => write!(f, "({{{}}}, {a})", set.join(", ")),
        }
    }
}

/// Rebuilds the automorphism a descriptor names.
pub fn generator_from_descriptor(group: &GraphProduct, d: &GeneratorDescriptor) -> Result<Generator> {
    let graph = group.graph();
    match d {
        GeneratorDescriptor::GraphAutomorphism { mapping } => {
            let images = graph
                .vertices()
                .map(|v| {
                    let name = graph.name(v);
                    graph.vertex(mapping.get(name).ok_or_else(|| Error::MissingImage(name.to_owned()))?)
                })
                .collect::<Result<Vec<_>>>()?;
            let gamma = GraphAutomorphism { mapping: images };
            let mut seen = gamma.mapping.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != graph.len() || !gamma.preserves(graph) {
                return Err(Error::NotInverse);
            }
            Ok(graph_automorphism_lift(group, &gamma))
        }
        GeneratorDescriptor::Factor { v, m } => {
            let x = graph.vertex(v)?;
            let inv = match graph.order(x) {
                Order::Infinite if *m == -1 || *m == 1 => *m,
                Order::Finite(o) if gcd(m.rem_euclid(o as i64) as u64, o) == 1 => {
                    unit_inverse(m.rem_euclid(o as i64) as u64, o) as i64
                }
                _ => return Err(Error::NotInverse),
            };
            let auto =
                group.automorphism(moving_one(group, x, group.vertex_power(x, *m)), moving_one(group, x, group.vertex_power(x, inv)))?;
            Ok(Generator::new(d.clone(), auto))
        }
        GeneratorDescriptor::Transvection { x, y, q } => {
            let (x, y) = (graph.vertex(x)?, graph.vertex(y)?);
            if x == y {
                return Err(Error::SameVertex);
            }
            let gx = group.generator(x);
            let forward = moving_one(group, x, group.multiply(&gx, &group.vertex_power(y, *q as i64)));
            let inverse = moving_one(group, x, group.multiply(&gx, &group.vertex_power(y, -(*q as i64))));
            Ok(Generator::new(d.clone(), group.automorphism(forward, inverse)?))
        }
        GeneratorDescriptor::PartialConjugation { v, component, .. } => {
            let x = graph.vertex(v)?;
            let set = graph.vertex_set(component)?;
            partial_conjugations(group)
                .into_iter()
                .find(|g| {
                    g.descriptors.iter().any(|e| {
                        matches!(e, GeneratorDescriptor::PartialConjugation { v: w, component: c, .. }
                            if graph.vertex(w).ok() == Some(x) && graph.vertex_set(c).ok() == Some(set))
                    })
                })
                .ok_or_else(|| Error::Internal(format!("{{{}}} is not a component of the complement of the star of {v}", component.join(", "))))
        }
        GeneratorDescriptor::Inner { w } => Ok(inner(group, &group.parse(w)?)),
        GeneratorDescriptor::Whitehead { set, a } => {
            let letter = |text: &String| -> Result<WhiteheadLetter> {
                let g = group.parse(text)?;
                match g.syllables() {
                    [s] => Ok(WhiteheadLetter::new(s.vertex, s.exponent)),
                    _ => Err(Error::MalformedWhitehead(format!("`{text}` is not a letter"))),
                }
            };
            let letters = set.iter().map(letter).collect::<Result<Vec<_>>>()?;
            whitehead_type_ii(group, &letters, letter(a)?)?
                .ok_or_else(|| Error::MalformedWhitehead("the pair fails the well-definedness conditions".into()))
        }
    }
}
