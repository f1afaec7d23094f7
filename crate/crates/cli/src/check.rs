//! Invariant suite run by `coxfire check`.

use std::collections::HashSet;
use std::fmt;

use coxfire::{
    are_conjugate, build_representation, conjugacy_classes, conjugacy_witness,
    enumerate_acyclic_orientations, power, process_word, reachable_set, word_from_orientation,
    AcyclicOrientation, CoxeterGraph, Error, FiniteGroup, RepresentationKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    /// Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "[{tag}] {} -- {}", self.name, self.detail)
    }
}

fn outcome(name: &'static str, failure: Option<String>, ok_detail: String) -> CheckResult {
    match failure {
        None => CheckResult { name, status: Status::Pass, detail: ok_detail },
        Some(detail) => CheckResult { name, status: Status::Fail, detail },
    }
}

fn skip(name: &'static str, detail: String) -> CheckResult {
    CheckResult { name, status: Status::Skip, detail }
}

/// Cap on group enumeration inside the suite; infinite groups hit it quickly.
const GROUP_BUDGET: usize = 100_000;

pub fn run_all(g: &CoxeterGraph, budget: usize) -> Vec<CheckResult> {
    let all = enumerate_acyclic_orientations(g);
    vec![
        firing_invariance(&all),
        signature_matches_search(&all, budget),
        word_bijection(&all),
        process_replay(g, &all),
        witness_replay(g, budget),
        group_oracle(g, budget.min(GROUP_BUDGET)),
    ]
}

fn firing_invariance(all: &[AcyclicOrientation<'_>]) -> CheckResult {
    let mut moves = 0usize;
    let mut failure = None;
    'outer: for o in all {
        let sig = o.signature();
        for v in o.sinks() {
            moves += 1;
            let fired = o.fire_sink(v).expect("sink");
            if fired.signature() != sig {
                failure = Some(format!("firing sink {} of {o} changed the signature", o.graph().name(v)));
                break 'outer;
            }
        }
    }
    outcome("firing-invariance", failure, format!("{moves} sink firings over {} orientations", all.len()))
}

fn signature_matches_search(
    all: &[AcyclicOrientation<'_>],
    budget: usize,
) -> CheckResult {
    const NAME: &str = "signature-vs-search";
    let mut seen: HashSet<&AcyclicOrientation<'_>> = HashSet::new();
    let mut classes = 0usize;
    for o in all {
        if seen.contains(o) {
            continue;
        }
        let closure = match reachable_set(o, budget) {
            Ok(c) => c,
            Err(Error::BudgetExceeded(b)) => return skip(NAME, format!("search exceeded {b} states")),
            Err(e) => return outcome(NAME, Some(e.to_string()), String::new()),
        };
        let sig = o.signature();
        let closure: HashSet<_> = closure.into_iter().collect();
        for p in all {
            if closure.contains(p) != (p.signature() == sig) {
                return outcome(
                    NAME,
                    Some(format!("{o} and {p}: search and signature disagree")),
                    String::new(),
                );
            }
            if closure.contains(p) {
                seen.insert(p);
            }
        }
        classes += 1;
    }
    outcome(NAME, None, format!("{classes} firing classes, all separated by signature"))
}

fn word_bijection(all: &[AcyclicOrientation<'_>]) -> CheckResult {
    let failure = all.iter().find_map(|o| {
        let back = word_from_orientation(o).orientation(o.graph());
        (back != *o).then(|| format!("{o} does not survive the word round trip"))
    });
    outcome("word-round-trip", failure, format!("{} orientations", all.len()))
}

fn process_replay(g: &CoxeterGraph, all: &[AcyclicOrientation<'_>]) -> CheckResult {
    let mut failure = None;
    for o in all {
        let c = word_from_orientation(o);
        let w = power(&c, 2).expect("nonzero power");
        match process_word(&w, g).and_then(|p| p.replay()) {
            Ok(end) if end.signature() == o.signature() => {}
            Ok(end) => {
                failure = Some(format!("square of {} ends at {end} with a new signature", c.named(g)));
                break;
            }
            Err(e) => {
                failure = Some(format!("square of {}: {e}", c.named(g)));
                break;
            }
        }
    }
    outcome("process-replay", failure, format!("{} squared Coxeter words", all.len()))
}

fn witness_replay(g: &CoxeterGraph, budget: usize) -> CheckResult {
    const NAME: &str = "witness-replay";
    let classes = match conjugacy_classes(g) {
        Ok(c) => c,
        Err(e) => return outcome(NAME, Some(e.to_string()), String::new()),
    };
    let mut checked = 0usize;
    for class in &classes {
        let rep = &class.representative().canonical_word;
        for e in &class.elements {
            let target = &e.canonical_word;
            let result = conjugacy_witness(rep, target, g, budget)
                .and_then(|w| w.replay(rep, g))
                .map(|end| end == *target);
            match result {
                Ok(true) => checked += 1,
                Ok(false) => {
                    return outcome(NAME, Some(format!("witness to {} ends elsewhere", target.named(g))), String::new())
                }
                Err(Error::BudgetExceeded(b)) => return skip(NAME, format!("search exceeded {b} states")),
                Err(err) => return outcome(NAME, Some(err.to_string()), String::new()),
            }
        }
    }
    outcome(NAME, None, format!("{checked} witnesses replayed"))
}

fn group_oracle(g: &CoxeterGraph, budget: usize) -> CheckResult {
    const NAME: &str = "group-oracle";
    let rep = match build_representation(g, RepresentationKind::auto(g)) {
        Ok(r) => r,
        Err(e) => return skip(NAME, e.to_string()),
    };
    let group = match FiniteGroup::enumerate(&rep, budget) {
        Ok(group) => group,
        Err(Error::BudgetExceeded(b)) => return skip(NAME, format!("group larger than {b} elements or infinite")),
        Err(e) => return skip(NAME, e.to_string()),
    };
    let classes = match conjugacy_classes(g) {
        Ok(c) => c,
        Err(e) => return outcome(NAME, Some(e.to_string()), String::new()),
    };
    let words: Vec<_> = classes
        .iter()
        .flat_map(|c| c.elements.iter().map(|e| e.canonical_word.clone()))
        .collect();
    let mut pairs = 0usize;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i..] {
            let fast = are_conjugate(a, b, g);
            let slow = group.are_conjugate(a, b);
            match (fast, slow) {
                (Ok(x), Ok(y)) if x == y => pairs += 1,
                (fast, slow) => {
                    return outcome(
                        NAME,
                        Some(format!("{} vs {}: signature {fast:?}, group {slow:?}", a.named(g), b.named(g))),
                        String::new(),
                    )
                }
            }
        }
    }
    outcome(NAME, None, format!("{pairs} pairs agree in a group of order {}", group.order()))
}
