//! Concrete realizations of Coxeter groups and a brute-force conjugacy oracle.
//!
//! Type A paths act on points by adjacent transpositions, type B paths by
//! signed permutations (encoded as permutations of `2n` points), and any
//! graph by the geometric reflection representation with bilinear form
//! `B(a_s, a_t) = -cos(pi / m(s, t))`. The oracle enumerates the whole group
//! by closure, so it only terminates for small finite groups.

use std::collections::HashMap;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Label, Vertex};
use crate::words::CoxeterWord;

/// Tolerance for matrix identities.
pub const MATRIX_TOLERANCE: f64 = 1e-9;

/// Matrix entries are keyed on this grid when enumerating a group.
const GRID: f64 = 1e6;

/// Braid orders for infinite labels are checked up to this power.
const INFINITE_ORDER_PROBE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationKind {
    /// Adjacent transpositions; type A paths only.
    Permutation,
    /// Signed permutations; type B paths only.
    SignedPermutation,
    /// Geometric reflection representation; any graph.
    Matrix,
}

impl RepresentationKind {
    /// The most concrete kind that fits `g`.
    pub fn auto(g: &CoxeterGraph) -> RepresentationKind {
        if type_a_order(g).is_some() {
            RepresentationKind::Permutation
        } else if type_b_order(g).is_some() {
            RepresentationKind::SignedPermutation
        } else {
            RepresentationKind::Matrix
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupElement {
    /// `p[i]` is the image of point `i`.
    Perm(Vec<u32>),
    Matrix(DMatrix<f64>),
}

/// Hashable stand-in for a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum ElementKey {
    Perm(Vec<u32>),
    Grid(Vec<i64>),
}

impl GroupElement {
    fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm((0..p.len() as u32).collect()),
            GroupElement::Matrix(m) => GroupElement::Matrix(DMatrix::identity(m.nrows(), m.ncols())),
        }
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Perm(p), GroupElement::Perm(q)) => {
                GroupElement::Perm(q.iter().map(|&x| p[x as usize]).collect())
            }
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a * b),
            _ => panic!("cannot compose a permutation with a matrix"),
        }
    }

    /// Equality, within `tol` for matrices.
    pub fn approx_eq(&self, other: &GroupElement, tol: f64) -> bool {
        match (self, other) {
            (GroupElement::Perm(p), GroupElement::Perm(q)) => p == q,
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
                a.shape() == b.shape() && a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= tol)
            }
            _ => false,
        }
    }

    fn key(&self) -> ElementKey {
        match self {
            GroupElement::Perm(p) => ElementKey::Perm(p.clone()),
            GroupElement::Matrix(m) => {
                ElementKey::Grid(m.iter().map(|x| (x * GRID).round() as i64).collect())
            }
        }
    }

    /// Smallest `k` in `1..=max` with `self^k = 1`.
    fn order(&self, max: usize, tol: f64) -> Option<usize> {
        let identity = self.identity_like();
        let mut power = self.clone();
        for k in 1..=max {
            if power.approx_eq(&identity, tol) {
                return Some(k);
            }
            power = power.compose(self);
        }
        None
    }
}

/// Generator images for a Coxeter graph.
#[derive(Debug, Clone)]
pub struct GroupRepresentation {
    pub kind: RepresentationKind,
    pub generator_images: Vec<GroupElement>,
    /// Only meaningful for the matrix kind.
    pub tolerance: f64,
    labels: Vec<Vec<Label>>,
}

/// Vertices of a type A path from its lower endpoint, if `g` is one.
fn type_a_order(g: &CoxeterGraph) -> Option<Vec<Vertex>> {
    let order = path_order(g)?;
    g.edges()
        .iter()
        .all(|e| e.label == Label::Finite(3))
        .then_some(order)
}

/// Vertices of a type B path, starting at the end of its label-4 edge.
fn type_b_order(g: &CoxeterGraph) -> Option<Vec<Vertex>> {
    let order = path_order(g)?;
    if order.len() < 2 {
        return None;
    }
    let label_at = |i: usize| g.label(order[i], order[i + 1]);
    let n = order.len();
    let fours: Vec<usize> = (0..n - 1).filter(|&i| label_at(i) == Label::Finite(4)).collect();
    let rest_three = (0..n - 1)
        .filter(|i| !fours.contains(i))
        .all(|i| label_at(i) == Label::Finite(3));
    match fours.as_slice() {
        [0] if rest_three => Some(order),
        [i] if *i == n - 2 && rest_three => Some(order.into_iter().rev().collect()),
        _ => None,
    }
}

/// Vertices along a path graph, starting from the lower-order endpoint.
fn path_order(g: &CoxeterGraph) -> Option<Vec<Vertex>> {
    if !g.is_tree() || g.vertices().any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = g.vertices().find(|&v| g.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&(next, _)) = g.neighbours(cur).iter().find(|&&(w, _)| Some(w) != prev) {
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    Some(order)
}

fn transposition(points: usize, pairs: &[(usize, usize)]) -> GroupElement {
    let mut p: Vec<u32> = (0..points as u32).collect();
    for &(a, b) in pairs {
        p.swap(a, b);
    }
    GroupElement::Perm(p)
}

/// Builds generator images of the requested kind.
pub fn build_representation(g: &CoxeterGraph, kind: RepresentationKind) -> Result<GroupRepresentation> {
    let n = g.num_vertices();
    let mut images = vec![None; n];
    match kind {
        RepresentationKind::Permutation => {
            let order = type_a_order(g).ok_or_else(|| {
                Error::RepresentationMismatch("permutation kind needs a path with all labels 3".into())
            })?;
            for (i, &v) in order.iter().enumerate() {
                images[v] = Some(transposition(n + 1, &[(i, i + 1)]));
            }
        }
        RepresentationKind::SignedPermutation => {
            let order = type_b_order(g).ok_or_else(|| {
                Error::RepresentationMismatch(
                    "signed-permutation kind needs a path with one terminal label 4 and all others 3"
                        .into(),
                )
            })?;
            // point i is +(i+1), point n+i is -(i+1)
            images[order[0]] = Some(transposition(2 * n, &[(0, n)]));
            for (k, &v) in order.iter().enumerate().skip(1) {
                images[v] = Some(transposition(2 * n, &[(k - 1, k), (n + k - 1, n + k)]));
            }
        }
        RepresentationKind::Matrix => {
            let form = bilinear_form(g);
            for s in 0..n {
                // sigma_s(a_t) = a_t - 2 B(a_t, a_s) a_s
                let mut m = DMatrix::<f64>::identity(n, n);
                for t in 0..n {
                    m[(s, t)] -= 2.0 * form[(t, s)];
                }
                images[s] = Some(GroupElement::Matrix(m));
            }
        }
    }
    let labels = g
        .vertices()
        .map(|a| g.vertices().map(|b| g.label(a, b)).collect())
        .collect();
    Ok(GroupRepresentation {
        kind,
        generator_images: images.into_iter().map(|i| i.expect("every generator has an image")).collect(),
        tolerance: if kind == RepresentationKind::Matrix { MATRIX_TOLERANCE } else { 0.0 },
        labels,
    })
}

/// `B(a_s, a_t) = -cos(pi / m)`, with `-1` for infinite labels.
pub fn bilinear_form(g: &CoxeterGraph) -> DMatrix<f64> {
    let n = g.num_vertices();
    DMatrix::from_fn(n, n, |s, t| match g.label(s, t) {
        Label::Finite(m) => -(std::f64::consts::PI / f64::from(m)).cos(),
        Label::Infinity => -1.0,
    })
}

impl GroupRepresentation {
    pub fn rank(&self) -> usize {
        self.generator_images.len()
    }

    /// Checks that generators are involutions and products of pairs have the
    /// prescribed orders.
    pub fn validate(&self) -> Result<()> {
        let tol = self.tolerance;
        for (s, img) in self.generator_images.iter().enumerate() {
            if img.order(2, tol) != Some(2) {
                return Err(Error::InvalidRepresentation(format!(
                    "generator {s} is not an involution"
                )));
            }
        }
        for s in 0..self.rank() {
            for t in s + 1..self.rank() {
                let product = self.generator_images[s].compose(&self.generator_images[t]);
                let ok = match self.labels[s][t] {
                    Label::Finite(m) => product.order(m as usize, tol) == Some(m as usize),
                    Label::Infinity => product.order(INFINITE_ORDER_PROBE, tol).is_none(),
                };
                if !ok {
                    return Err(Error::InvalidRepresentation(format!(
                        "product of generators {s} and {t} does not have order {}",
                        self.labels[s][t]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of a word: the product of its letters' images, left to right.
    pub fn image(&self, letters: &[Vertex]) -> GroupElement {
        let identity = self.generator_images[0].identity_like();
        letters
            .iter()
            .fold(identity, |acc, &v| acc.compose(&self.generator_images[v]))
    }
}

/// All elements of a finite represented group.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    representation: GroupRepresentation,
    elements: Vec<GroupElement>,
}

impl FiniteGroup {
    /// Closes the generator images under multiplication. Fails once more
    /// than `budget` elements have been found.
    pub fn enumerate(representation: &GroupRepresentation, budget: usize) -> Result<FiniteGroup> {
        representation.validate()?;
        let identity = representation.generator_images[0].identity_like();
        let mut index: HashMap<ElementKey, usize> = HashMap::from([(identity.key(), 0)]);
        let mut elements = vec![identity];
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for generator in &representation.generator_images {
                let next = current.compose(generator);
                let key = next.key();
                if index.contains_key(&key) {
                    continue;
                }
                if elements.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                index.insert(key, elements.len());
                elements.push(next);
            }
        }
        Ok(FiniteGroup {
            representation: representation.clone(),
            elements,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Whether some group element `u` has `u * img(w1) * u^-1 = img(w2)`.
    pub fn are_conjugate(&self, w1: &CoxeterWord, w2: &CoxeterWord) -> Result<bool> {
        let rank = self.representation.rank();
        for w in [w1, w2] {
            if w.len() != rank {
                return Err(Error::RepresentationMismatch(format!(
                    "word of length {} for a representation of rank {rank}",
                    w.len()
                )));
            }
        }
        let a = self.representation.image(w1.letters());
        let b = self.representation.image(w2.letters());
        // u a u^-1 = b  <=>  u a = b u
        let tol = 1.0 / GRID;
        Ok(self
            .elements
            .iter()
            .any(|u| u.compose(&a).approx_eq(&b.compose(u), tol)))
    }
}

/// One-shot oracle: enumerates the group and searches for a conjugator.
pub fn oracle_are_conjugate(
    w1: &CoxeterWord,
    w2: &CoxeterWord,
    rep: &GroupRepresentation,
    budget: usize,
) -> Result<bool> {
    FiniteGroup::enumerate(rep, budget)?.are_conjugate(w1, w2)
}
