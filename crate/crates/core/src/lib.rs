//! Conjugacy of Coxeter elements, decided through acyclic orientations of the
//! Coxeter graph.
//!
//! A Coxeter word orients every edge of the Coxeter graph from the letter that
//! comes first. Commutation classes of Coxeter words are exactly the acyclic
//! orientations, rotating a word fires a source, and two Coxeter elements are
//! conjugate exactly when their orientations are connected by firing moves.
//! Reachability is decided by comparing circulations around a fixed cycle
//! basis; exhaustive searches and a finite-group oracle are provided to
//! cross-check every answer on small graphs.

pub mod conjugacy;
pub mod error;
pub mod graph;
pub mod orientation;
pub mod words;

pub use conjugacy::{
    are_conjugate, build_representation, class_report, conjugacy_classes, conjugacy_witness,
    coxeter_elements, oracle_are_conjugate, ConjugacyClass, ConjugacyWitness, CoxeterElement,
    FiniteGroup, GroupRepresentation, RepresentationKind, WitnessStep,
};
pub use error::{Error, Result};
pub use graph::{
    families, parse_graph, CoxeterGraph, CycleBasis, Edge, Label, TrunkLimbDecomposition, Vertex,
};
pub use orientation::{
    enumerate_acyclic_orientations, reachability_classes, reachable, reachable_bfs, reachable_set,
    AcyclicOrientation, CirculationSignature, FiringRule, PartialOrientation, ReachabilityClass,
    DEFAULT_BUDGET,
};
pub use words::{
    commutation_equivalent, commutation_normal_form, has_intervening_neighbours,
    orientation_from_word, power, process_word, rotate, word_from_orientation, CoxeterWord,
    ProcessedWord, Word,
};
