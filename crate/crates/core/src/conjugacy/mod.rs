//! Conjugacy of Coxeter elements.
//!
//! Two Coxeter elements are conjugate exactly when their words are related by
//! rotations and commutations, which on the orientation side means the two
//! acyclic orientations are connected by firing moves. The decision itself is
//! a signature comparison and never touches group elements; the
//! [`representation`] module holds the brute-force group oracle used to
//! cross-check it.

pub mod representation;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Vertex};
use crate::orientation::{
    enumerate_acyclic_orientations, reachable, shortest_firing_path, AcyclicOrientation,
    CirculationSignature, FiringRule,
};
use crate::words::{commutation_normal_form, rotate, word_from_orientation, CoxeterWord, Word};

pub use representation::{
    build_representation, oracle_are_conjugate, FiniteGroup, GroupElement, GroupRepresentation,
    RepresentationKind,
};

/// A Coxeter element: its least Coxeter word and its orientation.
#[derive(Debug, Clone)]
pub struct CoxeterElement<'g> {
    pub canonical_word: CoxeterWord,
    pub orientation: AcyclicOrientation<'g>,
}

impl PartialEq for CoxeterElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.orientation == other.orientation
    }
}

impl Eq for CoxeterElement<'_> {}

impl<'g> CoxeterElement<'g> {
    pub fn from_word(w: &CoxeterWord, g: &'g CoxeterGraph) -> Result<Self> {
        check_word(w, g)?;
        Ok(Self::from_orientation(w.orientation(g)))
    }

    pub fn from_orientation(orientation: AcyclicOrientation<'g>) -> Self {
        let canonical_word = word_from_orientation(&orientation);
        CoxeterElement {
            canonical_word,
            orientation,
        }
    }

    pub fn signature(&self) -> CirculationSignature {
        self.orientation.signature()
    }
}

fn check_word(w: &CoxeterWord, g: &CoxeterGraph) -> Result<()> {
    if w.len() == g.num_vertices() {
        Ok(())
    } else {
        Err(Error::NotCoxeterWord(format!(
            "{} letters for a graph with {} generators",
            w.len(),
            g.num_vertices()
        )))
    }
}

/// One Coxeter element per acyclic orientation of a connected graph.
pub fn coxeter_elements(g: &CoxeterGraph) -> Result<Vec<CoxeterElement<'_>>> {
    g.require_connected()?;
    Ok(enumerate_acyclic_orientations(g)
        .into_iter()
        .map(CoxeterElement::from_orientation)
        .collect())
}

/// Decides whether the Coxeter elements of `w1` and `w2` are conjugate.
pub fn are_conjugate(w1: &CoxeterWord, w2: &CoxeterWord, g: &CoxeterGraph) -> Result<bool> {
    check_word(w1, g)?;
    check_word(w2, g)?;
    g.require_connected()?;
    reachable(&w1.orientation(g), &w2.orientation(g))
}

/// A single move in a rotation-equivalence trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessStep {
    /// Move the first letter to the end.
    Rotate,
    /// Swap the commuting letters at positions `i` and `i + 1`.
    Commute(usize),
}

impl fmt::Display for WitnessStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessStep::Rotate => f.write_str("rotate"),
            WitnessStep::Commute(i) => write!(f, "commute {i}"),
        }
    }
}

/// A certificate that `w1` and `w2` are rotation equivalent, hence conjugate:
/// `conjugator * w1 * conjugator^-1 = w2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub conjugator: Word,
    pub trace: Vec<WitnessStep>,
}

impl ConjugacyWitness {
    pub fn rotations(&self) -> usize {
        self.trace.iter().filter(|s| **s == WitnessStep::Rotate).count()
    }

    /// Replays the trace from `w1`, checking every step and the conjugator.
    /// Returns the final word.
    pub fn replay(&self, w1: &CoxeterWord, g: &CoxeterGraph) -> Result<CoxeterWord> {
        check_word(w1, g)?;
        let mut current = w1.clone();
        let mut rotated = Vec::new();
        for (step, s) in self.trace.iter().enumerate() {
            current = match *s {
                WitnessStep::Rotate => {
                    rotated.push(current.first());
                    rotate(&current)
                }
                WitnessStep::Commute(i) => current.commute(g, i).map_err(|e| match e {
                    Error::IllegalStep { reason, .. } => Error::IllegalStep { step, reason },
                    other => other,
                })?,
            };
        }
        rotated.reverse();
        if rotated != self.conjugator.0 {
            return Err(Error::IllegalStep {
                step: self.trace.len(),
                reason: "conjugator does not match the rotated letters".into(),
            });
        }
        Ok(current)
    }

    /// Human-readable trace, one step per line with the word after it.
    pub fn describe(&self, w1: &CoxeterWord, g: &CoxeterGraph) -> Result<Vec<String>> {
        let mut lines = Vec::with_capacity(self.trace.len());
        let mut current = w1.clone();
        for s in &self.trace {
            let label = match *s {
                WitnessStep::Rotate => {
                    let first = g.name(current.first()).to_string();
                    current = rotate(&current);
                    format!("rotate {first}")
                }
                WitnessStep::Commute(i) => {
                    let (a, b) = (current.letters()[i], current.letters()[i + 1]);
                    current = current.commute(g, i)?;
                    format!("commute {} {}", g.name(a), g.name(b))
                }
            };
            lines.push(format!("{label:<20} {}", current.named(g)));
        }
        Ok(lines)
    }
}

/// Moves the letter at `from` left to position `to` by commutations.
fn bubble_left(
    g: &CoxeterGraph,
    word: &mut CoxeterWord,
    from: usize,
    to: usize,
    trace: &mut Vec<WitnessStep>,
) -> Result<()> {
    for i in (to..from).rev() {
        *word = word.commute(g, i)?;
        trace.push(WitnessStep::Commute(i));
    }
    Ok(())
}

fn position(word: &CoxeterWord, v: Vertex) -> usize {
    word.letters()
        .iter()
        .position(|&u| u == v)
        .expect("Coxeter word contains every generator")
}

/// Finds rotations and commutations taking `w1` to `w2`, following a shortest
/// source-firing path between their orientations.
pub fn conjugacy_witness(
    w1: &CoxeterWord,
    w2: &CoxeterWord,
    g: &CoxeterGraph,
    budget: usize,
) -> Result<ConjugacyWitness> {
    if !are_conjugate(w1, w2, g)? {
        return Err(Error::NotConjugate);
    }
    let start = w1.orientation(g);
    let target = w2.orientation(g);
    let path = shortest_firing_path(&start, &target, FiringRule::Source, budget)?
        .ok_or(Error::NotConjugate)?;

    let mut trace = Vec::new();
    let mut current = w1.clone();
    for &v in &path {
        // v is a source, so every letter before it commutes with it
        let p = position(&current, v);
        bubble_left(g, &mut current, p, 0, &mut trace)?;
        current = rotate(&current);
        trace.push(WitnessStep::Rotate);
    }
    // same orientation now: sort into w2 by commutations
    for (k, &v) in w2.letters().iter().enumerate() {
        let p = position(&current, v);
        bubble_left(g, &mut current, p, k, &mut trace)?;
    }
    debug_assert_eq!(&current, w2);

    let conjugator = Word(path.iter().rev().copied().collect());
    Ok(ConjugacyWitness { conjugator, trace })
}

/// A conjugacy class of Coxeter elements.
#[derive(Debug, Clone)]
pub struct ConjugacyClass<'g> {
    pub signature: CirculationSignature,
    pub elements: Vec<CoxeterElement<'g>>,
}

impl ConjugacyClass<'_> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The element with the lexicographically least canonical word.
    pub fn representative(&self) -> &CoxeterElement<'_> {
        self.elements
            .iter()
            .min_by(|a, b| a.canonical_word.cmp(&b.canonical_word))
            .expect("classes are non-empty")
    }

    /// `signature=<ints> size=<n> representative=<word>`.
    pub fn report_line(&self, g: &CoxeterGraph) -> String {
        format!(
            "signature={} size={} representative={}",
            self.signature,
            self.len(),
            self.representative().canonical_word.named(g)
        )
    }
}

/// Conjugacy classes of Coxeter elements, keyed and ordered by signature.
pub fn conjugacy_classes(g: &CoxeterGraph) -> Result<Vec<ConjugacyClass<'_>>> {
    let mut classes: BTreeMap<CirculationSignature, Vec<CoxeterElement<'_>>> = BTreeMap::new();
    for element in coxeter_elements(g)? {
        classes.entry(element.signature()).or_default().push(element);
    }
    Ok(classes
        .into_iter()
        .map(|(signature, elements)| ConjugacyClass {
            signature,
            elements,
        })
        .collect())
}

/// The class report, one line per class.
pub fn class_report(g: &CoxeterGraph) -> Result<Vec<String>> {
    Ok(conjugacy_classes(g)?
        .iter()
        .map(|c| c.report_line(g))
        .collect())
}

/// Least word of the commutation class of `w`.
pub fn canonical_word(w: &CoxeterWord, g: &CoxeterGraph) -> Result<CoxeterWord> {
    CoxeterWord::new(g, commutation_normal_form(&w.as_word(), g)?.0)
}
