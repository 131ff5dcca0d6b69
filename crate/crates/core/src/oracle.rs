//! Brute-force reference computations for small graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::automorphisms::{Automorphism, VertexMap};
use crate::error::{Error, Result};
use crate::labeled_graph::Order;
use crate::words::{GraphProduct, GroupElement};

pub const DEFAULT_CLOSURE_BOUND: usize = 1_000_000;

/// Elements within word distance `radius` of the identity, with distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub radius: u64,
    pub distance: BTreeMap<GroupElement, u64>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.distance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distance.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.distance.contains_key(g)
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.distance.keys()
    }
}

/// Breadth-first search multiplying on the right by `v^{±1}`.
pub fn enumerate_ball(group: &GraphProduct, radius: u64) -> Ball {
    let letters: Vec<GroupElement> = group.letters().into_iter().map(|x| group.letter(x)).collect();
    let mut distance = BTreeMap::from([(GroupElement::identity(), 0)]);
    let mut layer = vec![GroupElement::identity()];
    for r in 1..=radius {
        let mut next = Vec::new();
        for g in &layer {
            for x in &letters {
                let h = group.multiply(g, x);
                if !distance.contains_key(&h) {
                    distance.insert(h.clone(), r);
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    Ball { radius, distance }
}

/// Multiplication table of a finite group; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    pub elements: Vec<GroupElement>,
    pub table: Vec<Vec<usize>>,
    index: HashMap<GroupElement, usize>,
}

impl FiniteGroupTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }
}

/// The abelian group of a complete graph with finite labels.
pub fn enumerate_finite_group(group: &GraphProduct) -> Result<FiniteGroupTable> {
    let graph = group.graph();
    if !graph.is_clique(graph.all()) || graph.vertices().any(|v| !graph.order(v).is_finite()) {
        return Err(Error::InfiniteGroup);
    }
    let mut elements = vec![GroupElement::identity()];
    for v in graph.vertices() {
        let o = graph.order(v).finite().unwrap() as i64;
        elements = elements
            .iter()
            .flat_map(|g| (0..o).map(move |e| (g.clone(), e)))
            .map(|(g, e)| group.multiply(&g, &group.vertex_power(v, e)))
            .collect();
    }
    let index: HashMap<GroupElement, usize> = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let table = elements
        .iter()
        .map(|g| elements.iter().map(|h| index[&group.multiply(g, h)]).collect())
        .collect();
    Ok(FiniteGroupTable { elements, table, index })
}

pub fn brute_centralizer(group: &GraphProduct, g: &GroupElement, radius: u64) -> BTreeSet<GroupElement> {
    enumerate_ball(group, radius).elements().filter(|h| group.commutes(h, g)).cloned().collect()
}

/// Every vertex map that extends to a bijective endomorphism of a finite `G`.
pub fn brute_automorphism_group(group: &GraphProduct) -> Result<Vec<VertexMap>> {
    let table = enumerate_finite_group(group)?;
    let graph = group.graph();
    let orders: Vec<u64> = table.elements.iter().map(|g| group.order_of(g).finite().unwrap()).collect();
    let candidates: Vec<Vec<usize>> = graph
        .vertices()
        .map(|v| {
            let o = graph.order(v).finite().unwrap();
            (0..table.len()).filter(|&i| orders[i] == o).collect()
        })
        .collect();

    // the element `∏ v^{e_v}` sits at the mixed-radix index of (e_v)
    let radices: Vec<usize> = graph.vertices().map(|v| graph.order(v).finite().unwrap() as usize).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; radices.len()];
    loop {
        let images: Vec<usize> = choice.iter().enumerate().map(|(v, &c)| candidates[v][c]).collect();
        let mut hit = vec![false; table.len()];
        let mut values = vec![0usize];
        for (v, &img) in images.iter().enumerate() {
            let mut powers = vec![0usize];
            for _ in 1..radices[v] {
                powers.push(table.mul(*powers.last().unwrap(), img));
            }
            values = values.iter().flat_map(|&x| powers.iter().map(move |&p| (x, p))).map(|(x, p)| table.mul(x, p)).collect();
        }
        let mut injective = true;
        for &x in &values {
            if std::mem::replace(&mut hit[x], true) {
                injective = false;
                break;
            }
        }
        if injective {
            out.push(VertexMap { images: images.iter().map(|&i| table.elements[i].clone()).collect() });
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// The monoid generated by `autos`, which is the group they generate when
/// that group is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub elements: HashSet<VertexMap>,
    /// False when `bound` was reached before a fixpoint.
    pub complete: bool,
}

pub fn closure(group: &GraphProduct, autos: &[Automorphism], bound: usize) -> Closure {
    let id = group.identity_map();
    let mut elements = HashSet::from([id.clone()]);
    let mut layer = vec![id];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for m in &layer {
            for a in autos {
                let image = group.compose_maps(m, &a.forward);
                if elements.contains(&image) {
                    continue;
                }
                if elements.len() >= bound {
                    return Closure { elements, complete: false };
                }
                elements.insert(image.clone());
                next.push(image);
            }
        }
        layer = next;
    }
    Closure { elements, complete: true }
}

/// Sizes of the spheres of a free product of cyclic groups, counted from
/// syllable lengths alone.
pub fn free_product_sphere_sizes(orders: &[Order], radius: u64) -> Vec<u64> {
    let r = radius as usize;
    // syllables[f][k]: nontrivial elements of factor f of length k
    let syllables: Vec<Vec<u64>> = orders
        .iter()
        .map(|o| {
            let mut counts = vec![0; r + 1];
            match o {
                Order::Infinite => counts.iter_mut().skip(1).for_each(|c| *c = 2),
                Order::Finite(n) => {
                    for e in 1..*n {
                        let len = e.min(n - e) as usize;
                        if len <= r {
                            counts[len] += 1;
                        }
                    }
                }
            }
            counts
        })
        .collect();
    // ending[n][f]: reduced words of length n whose last syllable lies in factor f
    let mut ending = vec![vec![0u64; orders.len()]; r + 1];
    let mut spheres = vec![1u64];
    for n in 1..=r {
        for f in 0..orders.len() {
            let mut total = 0;
            for k in 1..=n {
                let before: u64 = if k == n { 1 } else { (0..orders.len()).filter(|&h| h != f).map(|h| ending[n - k][h]).sum() };
                total += syllables[f][k] * before;
            }
            ending[n][f] = total;
        }
        spheres.push(ending[n].iter().sum());
    }
    spheres
}
