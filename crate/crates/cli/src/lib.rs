//! The `coxfire` command line.
//!
//! Exit codes: 0 on success (or a YES answer), 1 when a question was decided
//! NO or a check failed, 2 when the input could not be used.

mod check;

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use coxfire::{
    are_conjugate, build_representation, conjugacy_classes, conjugacy_witness,
    enumerate_acyclic_orientations, orientation_from_word, parse_graph, AcyclicOrientation,
    CoxeterGraph, CoxeterWord, Error, FiniteGroup, RepresentationKind, Word, DEFAULT_BUDGET,
};

#[derive(Parser, Debug)]
#[command(name = "coxfire", version, about = "Conjugacy of Coxeter elements via acyclic orientations")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Emit Graphviz DOT instead of text.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Emit stable line-oriented output only.
    #[arg(long, global = true)]
    pub machine: bool,
    /// State cap for exhaustive searches and group enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Group realization used by `oracle`.
    #[arg(long, global = true, value_enum, default_value_t = KindArg::Auto)]
    pub kind: KindArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the conjugacy classes of Coxeter elements.
    Classes { graph: PathBuf },
    /// Decide whether two Coxeter words give conjugate elements.
    Conjugate { graph: PathBuf, word1: String, word2: String },
    /// Print rotations and commutations taking one Coxeter word to another.
    Witness { graph: PathBuf, word1: String, word2: String },
    /// Orient the graph by the first-occurrence rule of a word.
    Orient { graph: PathBuf, word: String },
    /// Fire a sink or source of an orientation (`a>b,b>c,...`).
    Fire { graph: PathBuf, orientation: String, vertex: String },
    /// Print a firing sequence from a sink that fires every vertex once.
    Playback { graph: PathBuf, orientation: String, vertex: String },
    /// List every acyclic orientation with its signature and Coxeter word.
    Enumerate { graph: PathBuf },
    /// Decide conjugacy by brute force in a concrete finite group.
    Oracle { graph: PathBuf, word1: String, word2: String },
    /// Run the invariant suite on a graph.
    Check { graph: PathBuf },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    Auto,
    Permutation,
    Signed,
    Matrix,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn decided(yes: bool, stdout: String) -> Self {
        Outcome { code: if yes { 0 } else { 1 }, stdout, stderr: String::new() }
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(config) => config,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&config) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

fn load_graph(path: &PathBuf) -> anyhow::Result<CoxeterGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn require_connected(g: &CoxeterGraph, what: &str) -> anyhow::Result<()> {
    if let Err(Error::Disconnected { components }) = g.require_connected() {
        bail!(
            "graph is disconnected ({components} components); {what} is defined per connected \
             component, so split the graph file and run each component separately"
        );
    }
    Ok(())
}

fn coxeter_word(g: &CoxeterGraph, text: &str) -> anyhow::Result<CoxeterWord> {
    CoxeterWord::parse(g, text).with_context(|| format!("bad Coxeter word {text:?}"))
}

fn execute(config: &CliConfig) -> anyhow::Result<Outcome> {
    match &config.command {
        Command::Classes { graph } => {
            let g = load_graph(graph)?;
            require_connected(&g, "the class list")?;
            let classes = conjugacy_classes(&g)?;
            let mut out = String::new();
            if !config.machine {
                let total: usize = classes.iter().map(|c| c.len()).sum();
                writeln!(
                    out,
                    "{total} Coxeter elements in {} conjugacy classes ({} generators, {} edges, {} fundamental cycles)",
                    classes.len(),
                    g.num_vertices(),
                    g.num_edges(),
                    g.cycle_basis().len()
                )?;
            }
            for class in &classes {
                writeln!(out, "{}", class.report_line(&g))?;
            }
            Ok(Outcome::ok(out))
        }
        Command::Conjugate { graph, word1, word2 } => {
            let g = load_graph(graph)?;
            require_connected(&g, "conjugacy")?;
            let (w1, w2) = (coxeter_word(&g, word1)?, coxeter_word(&g, word2)?);
            let yes = are_conjugate(&w1, &w2, &g)?;
            let mut out = String::from(if yes { "YES\n" } else { "NO\n" });
            if !config.machine {
                let (s1, s2) = (w1.orientation(&g).signature(), w2.orientation(&g).signature());
                writeln!(out, "signatures: [{s1}] [{s2}]")?;
                if yes {
                    match conjugacy_witness(&w1, &w2, &g, config.budget) {
                        Ok(witness) => write_witness(&mut out, &witness, &w1, &g)?,
                        Err(Error::BudgetExceeded(b)) => {
                            writeln!(out, "witness: search exceeded {b} states")?
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            Ok(Outcome::decided(yes, out))
        }
        Command::Witness { graph, word1, word2 } => {
            let g = load_graph(graph)?;
            require_connected(&g, "conjugacy")?;
            let (w1, w2) = (coxeter_word(&g, word1)?, coxeter_word(&g, word2)?);
            match conjugacy_witness(&w1, &w2, &g, config.budget) {
                Ok(witness) => {
                    let mut out = String::new();
                    write_witness(&mut out, &witness, &w1, &g)?;
                    Ok(Outcome::ok(out))
                }
                Err(Error::NotConjugate) => Ok(Outcome::decided(false, "NO\n".into())),
                Err(e) => Err(e.into()),
            }
        }
        Command::Orient { graph, word } => {
            let g = load_graph(graph)?;
            let w = Word::parse(&g, word)?;
            let o = orientation_from_word(&w, &g)?;
            Ok(Outcome::ok(if config.dot { o.to_dot() } else { format!("{}\n", o.to_text()) }))
        }
        Command::Fire { graph, orientation, vertex } => {
            let g = load_graph(graph)?;
            let o = AcyclicOrientation::parse(&g, orientation)?;
            let v = g.vertex(vertex)?;
            let fired = if o.is_sink(v) {
                o.fire_sink(v)?
            } else if o.is_source(v) {
                o.fire_source(v)?
            } else {
                bail!("{vertex} is neither a sink nor a source");
            };
            Ok(Outcome::ok(if config.dot {
                fired.to_dot()
            } else {
                format!("{}\n", fired.to_text())
            }))
        }
        Command::Playback { graph, orientation, vertex } => {
            let g = load_graph(graph)?;
            let o = AcyclicOrientation::parse(&g, orientation)?;
            let seq = o.playback_sequence(g.vertex(vertex)?)?;
            Ok(Outcome::ok(format!("{}\n", coxfire::words::format_letters(&g, &seq))))
        }
        Command::Enumerate { graph } => {
            let g = load_graph(graph)?;
            let all = enumerate_acyclic_orientations(&g);
            let mut out = String::new();
            if !config.machine {
                writeln!(out, "{} acyclic orientations", all.len())?;
            }
            for o in &all {
                writeln!(
                    out,
                    "{} signature={} word={}",
                    o.to_text(),
                    o.signature(),
                    coxfire::word_from_orientation(o).named(&g)
                )?;
            }
            Ok(Outcome::ok(out))
        }
        Command::Oracle { graph, word1, word2 } => {
            let g = load_graph(graph)?;
            let (w1, w2) = (coxeter_word(&g, word1)?, coxeter_word(&g, word2)?);
            let kind = match config.kind {
                KindArg::Auto => RepresentationKind::auto(&g),
                KindArg::Permutation => RepresentationKind::Permutation,
                KindArg::Signed => RepresentationKind::SignedPermutation,
                KindArg::Matrix => RepresentationKind::Matrix,
            };
            let rep = build_representation(&g, kind)?;
            let group = FiniteGroup::enumerate(&rep, config.budget).map_err(|e| match e {
                Error::BudgetExceeded(b) => anyhow!(
                    "group enumeration exceeded {b} elements (group too large or infinite); undecided"
                ),
                other => other.into(),
            })?;
            let yes = group.are_conjugate(&w1, &w2)?;
            let mut out = String::from(if yes { "YES\n" } else { "NO\n" });
            if !config.machine {
                writeln!(out, "group: {kind:?} realization, order {}", group.order())?;
            }
            Ok(Outcome::decided(yes, out))
        }
        Command::Check { graph } => {
            let g = load_graph(graph)?;
            require_connected(&g, "the invariant suite")?;
            let results = check::run_all(&g, config.budget);
            let mut out = String::new();
            let mut all_ok = true;
            for r in &results {
                all_ok &= r.passed();
                writeln!(out, "{r}")?;
            }
            Ok(Outcome::decided(all_ok, out))
        }
    }
}

fn write_witness(
    out: &mut String,
    witness: &coxfire::ConjugacyWitness,
    w1: &CoxeterWord,
    g: &CoxeterGraph,
) -> anyhow::Result<()> {
    writeln!(out, "conjugator: {}", witness.conjugator.named(g))?;
    writeln!(out, "start                {}", w1.named(g))?;
    for line in witness.describe(w1, g)? {
        writeln!(out, "{line}")?;
    }
    Ok(())
}
