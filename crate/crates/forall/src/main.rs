use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use forall::{dump_stages, read_aut, to_dot, write_aut};
use forall_core::automata::{lasso_membership, trim};
use forall_core::logic::{decide_automaton, Compiler};
use forall_core::oracle::{
    brute_force_universal_membership, languages_equal_on_lassos, LassoComparison,
};
use forall_core::{
    parse, universal_quantify_with_artifacts, Buchi, BuchiAutomaton, CompileOptions, LassoWord,
    QuantPipelineArtifacts, Verdict,
};

/// Satisfiability of first-order formulas over (ℕ, <, +c) with monadic
/// predicates, by Büchi automata.
#[derive(Parser)]
#[command(name = "forall", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a formula; exit 0 if satisfiable, 1 if not, 2 on error.
    Decide(DecideArgs),
    /// Universally quantify a first-order variable of an `.aut` automaton.
    Quantify {
        automaton: PathBuf,
        variable: String,
        /// Output file (standard output if absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write every intermediate automaton and a manifest to this directory.
        #[arg(long, value_name = "DIR")]
        dump_stages: Option<PathBuf>,
    },
    /// Compare two automata, or an automaton's universal quantification
    /// against the brute-force oracle, on all short lassos.
    OracleCheck {
        automaton: PathBuf,
        other: Option<PathBuf>,
        /// Check `∀var` against the oracle instead of comparing two files.
        #[arg(long, conflicts_with = "other", required_unless_present = "other")]
        var: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_u: usize,
        #[arg(long, default_value_t = 3)]
        max_v: usize,
    },
    /// Convert an `.aut` automaton to Graphviz.
    ExportDot {
        automaton: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true)))]
struct DecideArgs {
    /// Formula text.
    #[arg(group = "source")]
    formula: Option<String>,
    /// Read the formula from a `.fol` file.
    #[arg(short, long, group = "source")]
    file: Option<PathBuf>,
    /// Write the final automaton as DOT.
    #[arg(long, value_name = "FILE")]
    emit_dot: Option<PathBuf>,
    /// Write the final automaton in `.aut` format.
    #[arg(long, value_name = "FILE")]
    emit_aut: Option<PathBuf>,
    /// Write the stages of every universal quantifier under this directory.
    #[arg(long, value_name = "DIR")]
    dump_stages: Option<PathBuf>,
    /// Print state and transition counts per compiled subformula.
    #[arg(long)]
    stats: bool,
    /// Largest constant accepted in `y = x + c`.
    #[arg(long, default_value_t = CompileOptions::default().max_offset)]
    max_offset: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Decide(args) => decide(args),
        Command::Quantify {
            automaton,
            variable,
            output,
            dump_stages: dir,
        } => {
            let a = load(&automaton)?;
            let arts = universal_quantify_with_artifacts(&a, &variable)
                .with_context(|| format!("quantifying `{variable}`"))?;
            if let Some(dir) = dir {
                dump(&arts, &dir)?;
            }
            emit(output.as_deref(), &write_aut(&arts.result))?;
            Ok(0)
        }
        Command::OracleCheck {
            automaton,
            other,
            var,
            max_u,
            max_v,
        } => {
            let a = load(&automaton)?;
            match (other, var) {
                (Some(other), _) => compare(&a, &load(&other)?, max_u, max_v),
                (None, Some(var)) => check_universal(&a, &var, max_u, max_v),
                (None, None) => bail!("give a second automaton or --var"),
            }
        }
        Command::ExportDot { automaton, output } => {
            let a = load(&automaton)?;
            let title = automaton
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("automaton");
            emit(output.as_deref(), &to_dot(&a, title))?;
            Ok(0)
        }
    }
}

fn load(path: &Path) -> Result<BuchiAutomaton> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_aut::<Buchi>(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dump(arts: &QuantPipelineArtifacts, dir: &Path) -> Result<String> {
    dump_stages(arts, dir).with_context(|| format!("writing stages to {}", dir.display()))
}

fn decide(args: DecideArgs) -> Result<u8> {
    let text = match (&args.formula, &args.file) {
        (Some(f), _) => f.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        (None, None) => bail!("no formula given"),
    };
    let formula = parse(&text)?;
    let options = CompileOptions {
        max_offset: args.max_offset,
    };
    let mut compiler =
        Compiler::new(options).keep_artifacts(args.dump_stages.is_some() || args.stats);
    let automaton = trim(&compiler.compile(&formula)?);
    let verdict = decide_automaton(&automaton)?;

    let mut report = String::new();
    match &verdict {
        Verdict::Sat(witness) => {
            writeln!(report, "SAT")?;
            write!(report, "{witness}")?;
        }
        Verdict::Unsat => writeln!(report, "UNSAT")?,
    }
    if args.stats {
        for step in &compiler.steps {
            writeln!(
                report,
                "step {}: {} states, {} transitions",
                step.what, step.states, step.transitions
            )?;
        }
        for q in &compiler.quantifications {
            let source = q.normalized.num_states();
            let possible = if source < 128 {
                ((1u128 << source) - 1).to_string()
            } else {
                format!("2^{source} - 1")
            };
            writeln!(
                report,
                "subsets {}: {} reached, {} live, of {} possible",
                q.variable,
                q.subset.automaton.num_states(),
                q.trimmed_subset.automaton.num_states(),
                possible
            )?;
        }
        writeln!(
            report,
            "final: {} states, {} transitions",
            automaton.num_states(),
            automaton.num_transitions()
        )?;
    }
    print!("{report}");

    if let Some(dir) = &args.dump_stages {
        fs::create_dir_all(dir)?;
        let mut index = String::new();
        for (j, q) in compiler.quantifications.iter().enumerate() {
            let sub = format!("{:02}-forall-{}", j + 1, q.variable);
            dump(q, &dir.join(&sub))?;
            writeln!(index, "{sub}/manifest.txt\tstages of forall {}", q.variable)?;
        }
        fs::write(dir.join("formula.aut"), write_aut(&automaton))?;
        writeln!(index, "formula.aut\tautomaton of the whole formula")?;
        fs::write(dir.join("manifest.txt"), index)?;
    }
    if let Some(path) = &args.emit_aut {
        emit(Some(path), &write_aut(&automaton))?;
    }
    if let Some(path) = &args.emit_dot {
        emit(Some(path), &to_dot(&automaton, text.trim()))?;
    }
    Ok(if verdict.is_sat() { 0 } else { 1 })
}

fn compare(a: &BuchiAutomaton, b: &BuchiAutomaton, max_u: usize, max_v: usize) -> Result<u8> {
    match languages_equal_on_lassos(a, b, max_u, max_v)? {
        LassoComparison::Equal => {
            println!("EQUAL on all lassos with |u| <= {max_u}, |v| <= {max_v}");
            Ok(0)
        }
        LassoComparison::Counterexample(w) => {
            let first = lasso_membership(a, &w)?;
            println!(
                "DIFFERENT on {w}: first {}, second {}",
                verb(first),
                verb(!first)
            );
            Ok(1)
        }
    }
}

fn check_universal(a: &BuchiAutomaton, var: &str, max_u: usize, max_v: usize) -> Result<u8> {
    let all = universal_quantify_with_artifacts(a, var)?.result;
    for w in LassoWord::enumerate(all.width(), max_u, max_v) {
        let got = lasso_membership(&all, &w)?;
        let expected = brute_force_universal_membership(a, var, &w)?;
        if got != expected {
            println!(
                "DISAGREE on {w}: quantified automaton {}, oracle {}",
                verb(got),
                verb(expected)
            );
            return Ok(1);
        }
    }
    println!("AGREE on all lassos with |u| <= {max_u}, |v| <= {max_v}");
    Ok(0)
}

fn verb(accepts: bool) -> &'static str {
    if accepts {
        "accepts"
    } else {
        "rejects"
    }
}
