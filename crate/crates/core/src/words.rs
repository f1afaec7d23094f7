//! Words over the generators of a Coxeter graph.
//!
//! The first-occurrence rule turns a word into an edge orientation: the edge
//! `s - t` points `s -> t` when `s` occurs first. Read right to left, a word
//! whose repeated letters are always separated by all their neighbours is an
//! initial orientation followed by a sequence of sink firings.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Vertex};
use crate::orientation::{least_linear_extension, AcyclicOrientation, PartialOrientation};

/// A word in the generators; repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Vertex>);

/// A word containing every generator exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterWord(Vec<Vertex>);

/// Formats a sequence of generators as space-separated names.
pub fn format_letters(g: &CoxeterGraph, letters: &[Vertex]) -> String {
    letters.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" ")
}

/// Display adapter pairing letters with generator names.
pub struct Named<'a> {
    graph: &'a CoxeterGraph,
    letters: &'a [Vertex],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(self.graph, self.letters))
    }
}

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }

    /// Parses whitespace-separated generator names.
    pub fn parse(g: &CoxeterGraph, text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|name| g.vertex(name))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn named<'a>(&'a self, g: &'a CoxeterGraph) -> Named<'a> {
        Named { graph: g, letters: &self.0 }
    }

    fn check(&self, g: &CoxeterGraph) -> Result<()> {
        match self.0.iter().find(|&&v| v >= g.num_vertices()) {
            Some(&v) => Err(Error::VertexOutOfRange(v)),
            None => Ok(()),
        }
    }
}

impl From<CoxeterWord> for Word {
    fn from(w: CoxeterWord) -> Self {
        Word(w.0)
    }
}

impl CoxeterWord {
    /// Validates that `letters` lists every generator of `g` exactly once.
    pub fn new(g: &CoxeterGraph, letters: Vec<Vertex>) -> Result<Self> {
        let mut seen = vec![false; g.num_vertices()];
        for &v in &letters {
            if v >= seen.len() {
                return Err(Error::VertexOutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotCoxeterWord(format!("{} occurs twice", g.name(v))));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::NotCoxeterWord(format!("{} is missing", g.name(v))));
        }
        Ok(CoxeterWord(letters))
    }

    pub fn parse(g: &CoxeterGraph, text: &str) -> Result<Self> {
        Self::new(g, Word::parse(g, text)?.0)
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn named<'a>(&'a self, g: &'a CoxeterGraph) -> Named<'a> {
        Named { graph: g, letters: &self.0 }
    }

    /// The acyclic orientation given by the first-occurrence rule.
    pub fn orientation<'g>(&self, g: &'g CoxeterGraph) -> AcyclicOrientation<'g> {
        AcyclicOrientation::from_linear_order(g, &self.0).expect("Coxeter word lists every vertex once")
    }

    /// Swaps positions `i` and `i + 1`; the letters must commute.
    pub fn commute(&self, g: &CoxeterGraph, i: usize) -> Result<Self> {
        if i + 1 >= self.0.len() {
            return Err(Error::IllegalStep {
                step: i,
                reason: format!("no letters at positions {i} and {}", i + 1),
            });
        }
        let (a, b) = (self.0[i], self.0[i + 1]);
        if !commutes(g, a, b) {
            return Err(Error::IllegalStep {
                step: i,
                reason: format!("{} and {} do not commute", g.name(a), g.name(b)),
            });
        }
        let mut letters = self.0.clone();
        letters.swap(i, i + 1);
        Ok(CoxeterWord(letters))
    }
}

/// Whether two distinct letters commute, i.e. are not joined by an edge.
pub fn commutes(g: &CoxeterGraph, a: Vertex, b: Vertex) -> bool {
    a != b && !g.is_adjacent(a, b)
}

/// Orients the edges between letters occurring in `w`; `s -> t` when the
/// first `s` precedes the first `t`.
pub fn orientation_from_word<'g>(w: &Word, g: &'g CoxeterGraph) -> Result<PartialOrientation<'g>> {
    w.check(g)?;
    let mut first = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in w.0.iter().enumerate() {
        if first[v] == usize::MAX {
            first[v] = i;
        }
    }
    let forward = g
        .edges()
        .iter()
        .map(|e| {
            (first[e.lo] != usize::MAX && first[e.hi] != usize::MAX).then(|| first[e.lo] < first[e.hi])
        })
        .collect();
    Ok(PartialOrientation::new(g, forward))
}

/// A Coxeter word for `o`: repeatedly emit the lowest-order source and
/// delete it. This is the least word of the element's commutation class.
pub fn word_from_orientation(o: &AcyclicOrientation<'_>) -> CoxeterWord {
    CoxeterWord(least_linear_extension(o))
}

/// Moves the first letter to the end.
pub fn rotate(w: &CoxeterWord) -> CoxeterWord {
    let mut letters = w.0.clone();
    if !letters.is_empty() {
        letters.rotate_left(1);
    }
    CoxeterWord(letters)
}

/// The lexicographically least word reachable from `w` by swapping adjacent
/// commuting letters.
///
/// Greedy: the next letter is the least one that has no earlier, still
/// unemitted letter it fails to commute with.
pub fn commutation_normal_form(w: &Word, g: &CoxeterGraph) -> Result<Word> {
    w.check(g)?;
    let mut remaining: Vec<Vertex> = w.0.clone();
    let mut out = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..remaining.len() {
            let letter = remaining[p];
            if best.is_some_and(|b| remaining[b] <= letter) {
                continue;
            }
            let blocked = remaining[..p]
                .iter()
                .any(|&earlier| !commutes(g, earlier, letter));
            if !blocked {
                best = Some(p);
            }
        }
        let p = best.expect("the first remaining letter is always eligible");
        out.push(remaining.remove(p));
    }
    Ok(Word(out))
}

/// Whether `w1` and `w2` are related by commutations of adjacent letters.
pub fn commutation_equivalent(w1: &Word, w2: &Word, g: &CoxeterGraph) -> Result<bool> {
    Ok(commutation_normal_form(w1, g)? == commutation_normal_form(w2, g)?)
}

/// Whether every two consecutive occurrences of a letter are separated by all
/// of its graph neighbours.
pub fn has_intervening_neighbours(w: &Word, g: &CoxeterGraph) -> Result<bool> {
    w.check(g)?;
    let mut last = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in w.0.iter().enumerate() {
        if last[v] != usize::MAX {
            let between = &w.0[last[v] + 1..i];
            if !g.neighbours(v).iter().all(|&(n, _)| between.contains(&n)) {
                return Ok(false);
            }
        }
        last[v] = i;
    }
    Ok(true)
}

/// A word read right to left: the orientation of its shortest suffix
/// containing every generator, then the sink firings contributed by the
/// remaining letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessedWord<'g> {
    pub initial: AcyclicOrientation<'g>,
    /// Fired vertices in firing order (the word's prefix read right to left).
    pub plays: Vec<Vertex>,
}

impl<'g> ProcessedWord<'g> {
    /// Applies the plays to the initial orientation.
    pub fn replay(&self) -> Result<AcyclicOrientation<'g>> {
        self.plays
            .iter()
            .try_fold(self.initial.clone(), |o, &v| o.fire_sink(v))
    }
}

/// Runs the right-to-left process on `w`.
pub fn process_word<'g>(w: &Word, g: &'g CoxeterGraph) -> Result<ProcessedWord<'g>> {
    w.check(g)?;
    g.require_connected()?;
    if !has_intervening_neighbours(w, g)? {
        return Err(Error::MissingInterveningNeighbours);
    }
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    let mut missing = n;
    let mut cut = None;
    for (i, &v) in w.0.iter().enumerate().rev() {
        if !std::mem::replace(&mut seen[v], true) {
            missing -= 1;
            if missing == 0 {
                cut = Some(i);
                break;
            }
        }
    }
    let Some(cut) = cut else {
        let v = seen.iter().position(|s| !s).expect("some letter is missing");
        return Err(Error::MissingLetter(g.name(v).to_string()));
    };

    let suffix = Word(w.0[cut..].to_vec());
    let initial = orientation_from_word(&suffix, g)?
        .to_total()
        .expect("suffix contains every generator");
    let plays: Vec<Vertex> = w.0[..cut].iter().rev().copied().collect();
    let processed = ProcessedWord { initial, plays };

    let replayed = processed
        .replay()
        .expect("intervening neighbours make every re-occurrence a sink firing");
    debug_assert_eq!(
        Some(replayed),
        orientation_from_word(w, g)?.to_total(),
        "replay must land on the word's own orientation"
    );
    Ok(processed)
}

/// `k` copies of `w` concatenated.
pub fn power(w: &CoxeterWord, k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(Word(w.0.repeat(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, parse_graph};
    use crate::orientation::enumerate_acyclic_orientations;
    use std::collections::{BTreeSet, HashSet, VecDeque};

    fn triangle() -> CoxeterGraph {
        parse_graph("a b 3\nb c 3\na c 3").unwrap()
    }

    fn word(g: &CoxeterGraph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    fn cword(g: &CoxeterGraph, s: &str) -> CoxeterWord {
        CoxeterWord::parse(g, s).unwrap()
    }

    /// Every word reachable by legal adjacent swaps, by exhaustive search.
    fn commutation_class(w: &Word, g: &CoxeterGraph) -> BTreeSet<Word> {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(cur) = queue.pop_front() {
            for i in 0..cur.len().saturating_sub(1) {
                if commutes(g, cur.0[i], cur.0[i + 1]) {
                    let mut next = cur.clone();
                    next.0.swap(i, i + 1);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn first_occurrence_rule() {
        let g = families::triangle_with_tail();
        let o = cword(&g, "s0 s1 s2 s3").orientation(&g);
        assert_eq!(o.to_text(), "s0>s1,s1>s2,s1>s3,s2>s3");

        let t = triangle();
        let p = orientation_from_word(&word(&t, "b c a"), &t).unwrap();
        assert_eq!(p.to_total().unwrap(), AcyclicOrientation::parse(&t, "b>a,b>c,c>a").unwrap());
        let p = orientation_from_word(&word(&t, "a b c a"), &t).unwrap();
        assert_eq!(p.to_total().unwrap(), AcyclicOrientation::parse(&t, "a>b,a>c,b>c").unwrap());

        // partial: only c-a is oriented by `ca`
        let p = orientation_from_word(&word(&t, "c a"), &t).unwrap();
        assert_eq!(p.to_text(), "c>a");
        assert!(orientation_from_word(&Word(vec![7]), &t).is_err());
    }

    #[test]
    fn words_from_orientations() {
        let g = families::triangle_with_tail();
        let o = AcyclicOrientation::parse(&g, "s0>s1,s1>s2,s1>s3,s2>s3").unwrap();
        assert_eq!(word_from_orientation(&o), cword(&g, "s0 s1 s2 s3"));

        let t = triangle();
        let o = AcyclicOrientation::parse(&t, "a>b,a>c,b>c").unwrap();
        assert_eq!(word_from_orientation(&o), cword(&t, "a b c"));

        for o in enumerate_acyclic_orientations(&g) {
            let w = word_from_orientation(&o);
            assert_eq!(w.orientation(&g), o);
            // it is the least member of its commutation class
            let class = commutation_class(&w.as_word(), &g);
            assert_eq!(class.iter().next().unwrap(), &w.as_word());
        }
    }

    #[test]
    fn rotation() {
        let g = families::triangle_with_tail();
        let w = cword(&g, "s0 s1 s2 s3");
        assert_eq!(rotate(&w), cword(&g, "s1 s2 s3 s0"));
        let mut r = w.clone();
        for _ in 0..4 {
            r = rotate(&r);
        }
        assert_eq!(r, w);
        assert_eq!(
            rotate(&w).orientation(&g),
            w.orientation(&g).fire_source(w.first()).unwrap()
        );
    }

    #[test]
    fn normal_form_examples() {
        let g = families::triangle_with_tail();
        let a = commutation_normal_form(&word(&g, "s1 s2 s0 s3"), &g).unwrap();
        let b = commutation_normal_form(&word(&g, "s1 s2 s3 s0"), &g).unwrap();
        assert_eq!(a, b);
        assert!(commutation_equivalent(&word(&g, "s1 s2 s3 s0"), &word(&g, "s1 s2 s0 s3"), &g).unwrap());
        assert!(!commutation_equivalent(&word(&g, "s0 s1"), &word(&g, "s1 s0"), &g).unwrap());
        let w = word(&g, "s3 s0 s2 s0");
        assert!(commutation_equivalent(&w, &w, &g).unwrap());

        let edgeless = CoxeterGraph::new(["a", "b", "c"], []).unwrap();
        assert_eq!(
            commutation_normal_form(&word(&edgeless, "c a b a c"), &edgeless).unwrap(),
            word(&edgeless, "a a b c c")
        );

        let k4 = families::complete(4);
        let w = word(&k4, "s3 s1 s0 s2 s1");
        assert_eq!(commutation_normal_form(&w, &k4).unwrap(), w);
    }

    #[test]
    fn normal_form_matches_exhaustive_minimum() {
        let g = families::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let words = ["s4 s3 s2 s1 s0", "s3 s3 s0 s4 s0 s2", "s2 s4 s0 s3 s1 s4", "s4 s4 s3 s0 s0 s3"];
        for text in words {
            let w = word(&g, text);
            let class = commutation_class(&w, &g);
            let nf = commutation_normal_form(&w, &g).unwrap();
            assert_eq!(&nf, class.iter().next().unwrap(), "{text}");
            for other in &class {
                assert_eq!(commutation_normal_form(other, &g).unwrap(), nf);
            }
        }
    }

    #[test]
    fn intervening_neighbours() {
        let t = triangle();
        assert!(has_intervening_neighbours(&word(&t, "a b c a b c"), &t).unwrap());
        assert!(!has_intervening_neighbours(&word(&t, "a b a"), &t).unwrap());
        assert!(has_intervening_neighbours(&word(&t, "c a b"), &t).unwrap());
        // adjacent repeats are never separated
        assert!(!has_intervening_neighbours(&word(&t, "a a b c"), &t).unwrap());

        let g = families::triangle_with_tail();
        let sq = power(&cword(&g, "s0 s1 s2 s3"), 2).unwrap();
        assert_eq!(sq.len(), 8);
        assert!(has_intervening_neighbours(&sq, &g).unwrap());
    }

    #[test]
    fn powers() {
        let g = parse_graph("a b 3").unwrap();
        let w = cword(&g, "a b");
        assert_eq!(power(&w, 3).unwrap(), word(&g, "a b a b a b"));
        assert!(has_intervening_neighbours(&power(&w, 3).unwrap(), &g).unwrap());
        assert_eq!(power(&w, 1).unwrap(), w.as_word());
        assert_eq!(power(&w, 0).unwrap_err(), Error::ZeroPower);
    }

    #[test]
    fn right_to_left_process() {
        let t = triangle();
        let p = process_word(&word(&t, "a b c a"), &t).unwrap();
        assert_eq!(p.initial, AcyclicOrientation::parse(&t, "b>a,b>c,c>a").unwrap());
        assert_eq!(p.plays, vec![0]);
        assert_eq!(p.replay().unwrap(), AcyclicOrientation::parse(&t, "a>b,a>c,b>c").unwrap());

        let p = process_word(&word(&t, "a b c a b c"), &t).unwrap();
        assert_eq!(p.initial, AcyclicOrientation::parse(&t, "a>b,a>c,b>c").unwrap());
        assert_eq!(p.plays, vec![2, 1, 0]);
        assert_eq!(p.replay().unwrap(), p.initial);

        let g = families::triangle_with_tail();
        let w = cword(&g, "s2 s0 s3 s1");
        let p = process_word(&w.as_word(), &g).unwrap();
        assert!(p.plays.is_empty());
        assert_eq!(p.initial, w.orientation(&g));
    }

    #[test]
    fn process_rejects_bad_words() {
        let t = triangle();
        assert_eq!(
            process_word(&word(&t, "a b a"), &t).unwrap_err(),
            Error::MissingInterveningNeighbours
        );
        assert_eq!(
            process_word(&word(&t, "a b"), &t).unwrap_err(),
            Error::MissingLetter("c".into())
        );
        let g = families::from_edges(3, &[(0, 1)]);
        assert!(matches!(
            process_word(&word(&g, "s0 s1 s2"), &g),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn process_powers_fire_each_vertex() {
        let g = families::triangle_with_tail();
        for o in enumerate_acyclic_orientations(&g) {
            let c = word_from_orientation(&o);
            for k in 1..=3 {
                let p = process_word(&power(&c, k).unwrap(), &g).unwrap();
                assert_eq!(p.initial, o);
                assert_eq!(p.plays.len(), 4 * (k - 1));
                for v in g.vertices() {
                    assert_eq!(p.plays.iter().filter(|&&u| u == v).count(), k - 1);
                }
                // each full sweep restores the orientation
                let mut state = p.initial.clone();
                for sweep in p.plays.chunks(4) {
                    for &v in sweep {
                        state = state.fire_sink(v).unwrap();
                    }
                    assert_eq!(state, o);
                }
            }
        }
    }

    #[test]
    fn coxeter_word_validation() {
        let t = triangle();
        assert!(CoxeterWord::parse(&t, "a b").is_err());
        assert!(CoxeterWord::parse(&t, "a b a").is_err());
        assert!(CoxeterWord::parse(&t, "a b d").is_err());
        let w = cword(&t, "c a b");
        assert_eq!(w.named(&t).to_string(), "c a b");
        assert!(w.commute(&t, 0).is_err());
        let g = families::triangle_with_tail();
        let w = cword(&g, "s1 s2 s3 s0");
        assert_eq!(w.commute(&g, 2).unwrap(), cword(&g, "s1 s2 s0 s3"));
        assert!(w.commute(&g, 3).is_err());
    }

    #[test]
    fn bijection_on_small_graph() {
        let g = families::cycle(4);
        let mut classes: HashSet<Word> = HashSet::new();
        let mut perm: Vec<Vertex> = g.vertices().collect();
        let mut orientations = HashSet::new();
        permutations(&mut perm, 0, &mut |p| {
            let w = CoxeterWord::new(&g, p.to_vec()).unwrap();
            classes.insert(commutation_normal_form(&w.as_word(), &g).unwrap());
            orientations.insert(w.orientation(&g));
        });
        assert_eq!(classes.len(), 14);
        assert_eq!(orientations.len(), 14);
    }

    fn permutations(items: &mut Vec<Vertex>, k: usize, f: &mut impl FnMut(&[Vertex])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permutations(items, k + 1, f);
            items.swap(k, i);
        }
    }
}
