//! The `vsl` command line, as a function from arguments to an exit code so
//! it can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vsl_core::evaluator::state_table;
use vsl_core::laurent::TermRecord;
use vsl_core::moves::{all_insertions, builtin_fixture_pairs, MoveName};
use vsl_core::random::{random_diagrams, RandomParams};
use vsl_core::{evaluate, fixtures, Diagram};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "vsl",
    version,
    about = "Bracket, R polynomial and splitting of virtual singular links"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for `eval` and `states`.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Seed for the random diagrams used by `check`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Refuse diagrams with more states than this.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    pub max_states: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the bracket, R, phi, psi and the number of components.
    Eval { path: PathBuf },
    /// Print one row per state: a, b, alpha, beta, loops, parity, contribution.
    States { path: PathBuf },
    /// Run the invariance battery for every move, or for one move.
    Check {
        #[arg(default_value = "all")]
        scope: String,
    },
    /// List the built-in diagrams, print one, or write them all to a directory.
    Examples {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        write: Option<PathBuf>,
    },
    /// Parse and validate a diagram file.
    Validate { path: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<i32> {
    match &cli.command {
        Command::Eval { path } => eval(cli, &load(path, cli.max_states)?, out),
        Command::States { path } => states(cli, &load(path, cli.max_states)?, out),
        Command::Check { scope } => check(cli, scope, out),
        Command::Examples { name, write } => examples(name.as_deref(), write.as_deref(), out),
        Command::Validate { path } => {
            let d = read(path)?;
            let counts = d.counts();
            writeln!(
                out,
                "ok: {} crossings (c={} s={} v={}), {} components",
                d.crossings().len(),
                counts.classical,
                counts.singular,
                counts.virtual_,
                d.link_components()
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn read(path: &Path) -> Result<Diagram> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Diagram::parse(&text).with_context(|| format!("invalid diagram {}", path.display()))
}

fn load(path: &Path, max_states: u64) -> Result<Diagram> {
    let d = read(path)?;
    let n = d.resolvable().len();
    if n >= 64 || 1u64 << n > max_states {
        bail!("{} has 2^{n} states, over the budget of {max_states}", path.display());
    }
    Ok(d)
}

fn eval<W: Write>(cli: &Cli, d: &Diagram, out: &mut W) -> Result<i32> {
    let result = evaluate(d);
    match cli.output {
        Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&result.document())?)?,
        Output::Text => {
            let c = result.counts;
            writeln!(
                out,
                "crossings: c={} s={} v={} writhe={}",
                c.classical, c.singular, c.virtual_, c.writhe
            )?;
            writeln!(out, "k: {}", result.k)?;
            writeln!(out, "states: {}", result.state_count)?;
            writeln!(out, "bracket: {}", result.bracket)?;
            writeln!(out, "R: {}", result.r_poly)?;
            writeln!(out, "phi: {}", result.phi)?;
            writeln!(out, "psi: {}", result.psi)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct StateLine {
    mask: u64,
    a: i64,
    b: i64,
    alpha: u32,
    beta: u32,
    loops: u32,
    parity: i8,
    contribution: Vec<TermRecord>,
}

fn states<W: Write>(cli: &Cli, d: &Diagram, out: &mut W) -> Result<i32> {
    let rows = state_table(d);
    let width = d.resolvable().len().max(1);
    match cli.output {
        Output::Json => {
            let lines: Vec<StateLine> = rows
                .iter()
                .map(|r| StateLine {
                    mask: r.state.mask(),
                    a: r.stats.a,
                    b: r.stats.b,
                    alpha: r.stats.alpha,
                    beta: r.stats.beta,
                    loops: r.stats.n_components,
                    parity: r.stats.parity.sign(),
                    contribution: r.contribution.records(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&lines)?)?;
        }
        Output::Text => {
            let ids: Vec<String> = d
                .resolvable()
                .iter()
                .map(|&ci| d.crossings()[ci].id.to_string())
                .collect();
            writeln!(
                out,
                "# bit i of the mask = i-th of crossings [{}] disoriented",
                ids.join(", ")
            )?;
            writeln!(
                out,
                "{:>w$}  a  b  alpha  beta  loops   i  contribution",
                "mask",
                w = width.max(4)
            )?;
            for r in &rows {
                let s = r.stats;
                writeln!(
                    out,
                    "{:>w$}  {:>1}  {:>1}  {:>5}  {:>4}  {:>5}  {:>2}  {}",
                    format!("{:0n$b}", r.state.mask(), n = width),
                    s.a,
                    s.b,
                    s.alpha,
                    s.beta,
                    s.n_components,
                    s.parity.sign(),
                    r.contribution,
                    w = width.max(4)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

fn same_invariants(before: &Diagram, after: &Diagram) -> bool {
    let (x, y) = (evaluate(before), evaluate(after));
    x.bracket == y.bracket && x.r_poly == y.r_poly && x.phi == y.phi && x.psi == y.psi
}

fn check<W: Write>(cli: &Cli, scope: &str, out: &mut W) -> Result<i32> {
    let wanted: Vec<MoveName> = if scope.eq_ignore_ascii_case("all") {
        MoveName::ALL.to_vec()
    } else {
        vec![scope.parse()?]
    };
    let mut tallies: Vec<(MoveName, Tally)> = wanted.iter().map(|&m| (m, Tally::default())).collect();
    let mut record = |name: MoveName, label: String, ok: bool| {
        if let Some((_, t)) = tallies.iter_mut().find(|(m, _)| *m == name) {
            t.cases += 1;
            if !ok {
                t.failures.push(label);
            }
        }
    };

    for pair in builtin_fixture_pairs() {
        if wanted.contains(&pair.name) {
            record(
                pair.name,
                pair.label.clone(),
                same_invariants(&pair.before, &pair.after),
            );
        }
    }
    let small = RandomParams {
        max_resolvable: 4,
        max_virtual: 3,
        max_strands: 3,
    };
    let mut bases: Vec<(String, Diagram)> = fixtures::all().into_iter().map(|(n, d)| (n.to_owned(), d)).collect();
    for (i, d) in random_diagrams(cli.seed, 8, small).into_iter().enumerate() {
        bases.push((format!("random {}#{i}", cli.seed), d));
    }
    for (name, d) in &bases {
        for ins in all_insertions(d) {
            if wanted.contains(&ins.name) {
                record(
                    ins.name,
                    format!("{name} at {}", ins.site),
                    same_invariants(d, &ins.after),
                );
            }
        }
    }

    let mut code = EXIT_OK;
    for (name, t) in &tallies {
        let verdict = if t.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {name:<4} {} cases", t.cases)?;
        for f in &t.failures {
            writeln!(out, "    {f}")?;
        }
        if !t.failures.is_empty() {
            code = EXIT_CHECK_FAILED;
        }
    }
    Ok(code)
}

/// Built-in diagrams offered as example files.
pub const EXAMPLE_NAMES: [&str; 8] = [
    "unknot",
    "positive-kink",
    "negative-kink",
    "virtual-kink",
    "hopf",
    "trefoil",
    "singular-hopf",
    "example1",
];

fn example_text(name: &str) -> Option<String> {
    if name == "example1" {
        return Some(fixtures::EXAMPLE1_TEXT.to_owned());
    }
    EXAMPLE_NAMES
        .contains(&name)
        .then(|| fixtures::by_name(name))
        .flatten()
        .map(|d| d.serialize())
}

fn examples<W: Write>(name: Option<&str>, dir: Option<&Path>, out: &mut W) -> Result<i32> {
    if let Some(name) = name {
        let Some(text) = example_text(name) else {
            bail!("no example named {name:?}; try `vsl examples`");
        };
        write!(out, "{text}")?;
        return Ok(EXIT_OK);
    }
    if let Some(dir) = dir {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for name in EXAMPLE_NAMES {
            let path = dir.join(format!("{name}.vsl"));
            fs::write(&path, example_text(name).expect("listed example exists"))
                .with_context(|| format!("cannot write {}", path.display()))?;
            writeln!(out, "{}", path.display())?;
        }
        return Ok(EXIT_OK);
    }
    for name in EXAMPLE_NAMES {
        writeln!(out, "{name}")?;
    }
    Ok(EXIT_OK)
}
