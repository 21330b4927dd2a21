//! `qsh` — exact quasishuffle bialgebra calculator and axiom checker.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::process::ExitCode;
use std::rc::Rc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qsh_core::error::{Error, Result};
use qsh_core::expr::parse_word_lincomb;
use qsh_core::graph::{
    chromatic_deletion_contraction, chromatic_polynomial, graph_coproduct, graph_delta,
    graph_from_json, phi1_graph, DecoratedGraph, GraphHost, DEFAULT_VERTEX_BOUND,
};
use qsh_core::harness::{run_axiom_suite, run_graph_suite, RunConfig};
use qsh_core::host::WordHost;
use qsh_core::lincomb::LinComb;
use qsh_core::morphism::{
    action_sweep, hoffman_theta_inv_lc, hoffman_theta_lc, phi_mu_scaling_lc, upsilon_to_poly,
    Character, MorphismEval,
};
use qsh_core::quasishuffle::{
    antipode_lc, coaction_word, deconcatenate, delta_word, eps_delta_word, quasishuffle_lc,
    shuffle_lc, QShContext,
};
use qsh_core::scalar;
use qsh_core::vspec::VSpec;

#[derive(Parser)]
#[command(
    name = "qsh",
    version,
    about = "exact-arithmetic quasishuffle bialgebra calculator",
    after_help = "Word expressions use the text syntax `3/2*[a,b] + [c] - [a]`.\n\
                  Specs are presets (trivial-k, nat-semigroup, z2-mult, free-comm)\n\
                  or JSON files with explicit structure constants."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Base bialgebra: preset name or JSON file.
    #[arg(long, global = true, default_value = "free-comm")]
    spec: String,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Line)]
    format: Format,

    /// Shorthand for `--format pretty`.
    #[arg(long, global = true)]
    pretty: bool,

    /// Seed for the randomized samples of `check`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum word length used by `check`.
    #[arg(long, global = true, default_value_t = 4)]
    max_len: usize,

    /// Maximum vertex count used by `check` and `graph check`.
    #[arg(long, global = true, default_value_t = 4)]
    max_vertices: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Line,
    Pretty,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum HostKind {
    Words,
    Graphs,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quasishuffle product of two word expressions.
    Prod { a: String, b: String },
    /// Shuffle product of two word expressions.
    Shuffle { a: String, b: String },
    /// Deconcatenation coproduct.
    Decat { expr: String },
    /// Contraction-extraction coproduct.
    Delta { expr: String },
    /// Counit of the contraction-extraction coproduct.
    Eps { expr: String },
    /// Coaction into the unitary extension of the base.
    Rho { expr: String },
    /// Antipode of the quasishuffle Hopf algebra.
    Antipode { expr: String },
    /// Universal morphism into the quasishuffle bialgebra.
    Phi(PhiArgs),
    /// Hoffman isomorphism (or its inverse).
    Hoffman {
        #[arg(long)]
        inverse: bool,
        expr: String,
    },
    /// Scale a word expression by mu^length.
    Scale {
        #[arg(long)]
        mu: String,
        expr: String,
    },
    /// Polynomial image of a word expression.
    Upsilon { expr: String },
    /// Act on a morphism by a character.
    Act(ActArgs),
    /// Decorated-graph operations.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Run the axiom-verification suite.
    Check,
}

#[derive(Args)]
struct PhiArgs {
    #[arg(long, value_enum, default_value_t = HostKind::Words)]
    host: HostKind,
    /// `eps_delta` or a JSON file mapping canonical terms to rationals.
    #[arg(long, default_value = "eps_delta")]
    character: String,
    /// Word expression (words host) or graph JSON file (graphs host).
    expr: String,
}

#[derive(Args)]
struct ActArgs {
    /// Base morphism; only `phi1` is built in.
    #[arg(long, default_value = "phi1")]
    morphism: String,
    /// JSON file mapping canonical terms to rationals.
    #[arg(long)]
    character: String,
    #[arg(long, value_enum, default_value_t = HostKind::Words)]
    host: HostKind,
    /// Word expression (words host) or graph JSON file (graphs host).
    expr: String,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Contraction-extraction coproduct of a graph.
    Delta { file: String },
    /// Bipartition coproduct of a graph.
    Coprod { file: String },
    /// Word image under the coloration morphism.
    Phi1 { file: String },
    /// Chromatic polynomial through the coloration morphism.
    Chrom { file: String },
    /// Chromatic polynomial by deletion-contraction (oracle).
    ChromOracle { file: String },
    /// Run the decorated-graph law suite.
    Check,
}

fn emit_lincomb<T: Ord + Display + Clone>(lc: &LinComb<T>, format: Format) {
    match format {
        Format::Line => println!("{lc}"),
        Format::Pretty => {
            if lc.is_zero() {
                println!("0");
                return;
            }
            for (i, (t, c)) in lc.iter().enumerate() {
                let sign = if c < &scalar::zero() {
                    "-"
                } else if i == 0 {
                    ""
                } else {
                    "+"
                };
                let mag = if c < &scalar::zero() {
                    -c.clone()
                } else {
                    c.clone()
                };
                if mag == scalar::one() {
                    println!("{sign}{t}");
                } else {
                    println!("{sign}{mag}*{t}");
                }
            }
        }
        Format::Json => {
            let terms: Vec<serde_json::Value> = lc
                .iter()
                .map(|(t, c)| serde_json::json!({"coeff": c.to_string(), "term": t.to_string()}))
                .collect();
            println!("{}", serde_json::json!({ "terms": terms }));
        }
    }
}

fn emit_scalar(s: &scalar::Scalar, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::json!({"value": s.to_string()})),
        _ => println!("{s}"),
    }
}

fn emit_poly(p: &qsh_core::poly::Polynomial, format: Format) {
    match format {
        Format::Json => {
            let coeffs: Vec<String> = (0..=p.degree().unwrap_or(0))
                .map(|k| p.coeff(k).to_string())
                .collect();
            println!(
                "{}",
                serde_json::json!({"poly": p.to_string(), "coeffs_ascending": coeffs})
            );
        }
        _ => println!("{p}"),
    }
}

fn char_table_from_file(path: &str) -> Result<BTreeMap<String, scalar::Scalar>> {
    let text = std::fs::read_to_string(path)?;
    let raw: BTreeMap<String, String> = serde_json::from_str(&text)?;
    let mut table = BTreeMap::new();
    for (k, v) in raw {
        table.insert(k, scalar::parse(&v)?);
    }
    Ok(table)
}

fn word_character(host: &Rc<WordHost>, source: &str) -> Result<Character<WordHost>> {
    match source {
        "eps_delta" => Ok(Character::eps_delta(host)),
        path => Character::from_table(host, format!("file:{path}"), char_table_from_file(path)?),
    }
}

fn graph_character(host: &Rc<GraphHost>, source: &str) -> Result<Character<GraphHost>> {
    match source {
        "eps_delta" => Ok(Character::eps_delta(host)),
        path => Character::from_table(host, format!("file:{path}"), char_table_from_file(path)?),
    }
}

fn load_graph_lc(path: &str, spec: &VSpec) -> Result<LinComb<DecoratedGraph>> {
    let text = std::fs::read_to_string(path)?;
    graph_from_json(&text, spec, DEFAULT_VERTEX_BOUND)
}

fn run(cli: Cli) -> Result<bool> {
    let format = if cli.pretty {
        Format::Pretty
    } else {
        cli.format
    };
    let spec = VSpec::load(&cli.spec)?;
    let ctx = QShContext::new(spec.clone());
    let parse = |s: &str| parse_word_lincomb(s, ctx.spec());

    match cli.cmd {
        Cmd::Prod { a, b } => {
            emit_lincomb(&quasishuffle_lc(&parse(&a)?, &parse(&b)?, &ctx)?, format);
        }
        Cmd::Shuffle { a, b } => {
            emit_lincomb(&shuffle_lc(&parse(&a)?, &parse(&b)?), format);
        }
        Cmd::Decat { expr } => {
            let lc = parse(&expr)?.try_map_terms(|w| Ok(deconcatenate(w)))?;
            emit_lincomb(&lc, format);
        }
        Cmd::Delta { expr } => {
            let lc = parse(&expr)?.try_map_terms(|w| delta_word(w, &ctx))?;
            emit_lincomb(&lc, format);
        }
        Cmd::Eps { expr } => {
            let s = parse(&expr)?.try_fold_scalar(|w| eps_delta_word(w, &ctx))?;
            emit_scalar(&s, format);
        }
        Cmd::Rho { expr } => {
            let lc = parse(&expr)?.try_map_terms(|w| coaction_word(w, &ctx))?;
            emit_lincomb(&lc, format);
        }
        Cmd::Antipode { expr } => {
            emit_lincomb(&antipode_lc(&parse(&expr)?, &ctx)?, format);
        }
        Cmd::Phi(args) => match args.host {
            HostKind::Words => {
                let host = Rc::new(WordHost::new(ctx.clone()));
                let lambda = word_character(&host, &args.character)?;
                let phi = MorphismEval::universal(&host, ctx.clone(), &lambda);
                emit_lincomb(&phi.eval_lc(&parse(&args.expr)?)?, format);
            }
            HostKind::Graphs => {
                let host = Rc::new(GraphHost::new(ctx.clone(), DEFAULT_VERTEX_BOUND));
                let lambda = graph_character(&host, &args.character)?;
                let phi = MorphismEval::universal(&host, ctx.clone(), &lambda);
                let graphs = load_graph_lc(&args.expr, ctx.spec())?;
                emit_lincomb(&phi.eval_lc(&graphs)?, format);
            }
        },
        Cmd::Hoffman { inverse, expr } => {
            let lc = parse(&expr)?;
            let out = if inverse {
                hoffman_theta_inv_lc(&lc, &ctx)?
            } else {
                hoffman_theta_lc(&lc, &ctx)?
            };
            emit_lincomb(&out, format);
        }
        Cmd::Scale { mu, expr } => {
            let mu = scalar::parse(&mu)?;
            emit_lincomb(&phi_mu_scaling_lc(&parse(&expr)?, &mu), format);
        }
        Cmd::Upsilon { expr } => {
            emit_poly(&upsilon_to_poly(&parse(&expr)?, ctx.spec())?, format);
        }
        Cmd::Act(args) => {
            if args.morphism != "phi1" {
                return Err(Error::InvalidInput(format!(
                    "unknown morphism `{}` (only `phi1` is built in)",
                    args.morphism
                )));
            }
            match args.host {
                HostKind::Words => {
                    let host = Rc::new(WordHost::new(ctx.clone()));
                    let lambda = word_character(&host, &args.character)?;
                    let phi = MorphismEval::phi1(&host, ctx.clone());
                    let acted = action_sweep(&phi, &lambda)?;
                    emit_lincomb(&acted.eval_lc(&parse(&args.expr)?)?, format);
                }
                HostKind::Graphs => {
                    let host = Rc::new(GraphHost::new(ctx.clone(), DEFAULT_VERTEX_BOUND));
                    let lambda = graph_character(&host, &args.character)?;
                    let phi = MorphismEval::phi1(&host, ctx.clone());
                    let acted = action_sweep(&phi, &lambda)?;
                    let graphs = load_graph_lc(&args.expr, ctx.spec())?;
                    emit_lincomb(&acted.eval_lc(&graphs)?, format);
                }
            }
        }
        Cmd::Graph { cmd } => match cmd {
            GraphCmd::Delta { file } => {
                let lc = load_graph_lc(&file, ctx.spec())?
                    .try_map_terms(|g| graph_delta(g, &ctx, DEFAULT_VERTEX_BOUND))?;
                emit_lincomb(&lc, format);
            }
            GraphCmd::Coprod { file } => {
                let lc = load_graph_lc(&file, ctx.spec())?
                    .try_map_terms(|g| graph_coproduct(g, DEFAULT_VERTEX_BOUND))?;
                emit_lincomb(&lc, format);
            }
            GraphCmd::Phi1 { file } => {
                let lc = load_graph_lc(&file, ctx.spec())?
                    .try_map_terms(|g| phi1_graph(g, &ctx, DEFAULT_VERTEX_BOUND))?;
                emit_lincomb(&lc, format);
            }
            GraphCmd::Chrom { file } => {
                let mut acc = qsh_core::poly::Polynomial::zero();
                for (g, c) in load_graph_lc(&file, ctx.spec())?.iter() {
                    acc = &acc + &chromatic_polynomial(g, &ctx, DEFAULT_VERTEX_BOUND)?.scale(c);
                }
                emit_poly(&acc, format);
            }
            GraphCmd::ChromOracle { file } => {
                let mut acc = qsh_core::poly::Polynomial::zero();
                for (g, c) in load_graph_lc(&file, ctx.spec())?.iter() {
                    acc = &acc + &chromatic_deletion_contraction(g, DEFAULT_VERTEX_BOUND)?.scale(c);
                }
                emit_poly(&acc, format);
            }
            GraphCmd::Check => {
                let cfg = RunConfig {
                    seed: cli.seed,
                    max_word_len: cli.max_len,
                    max_vertices: cli.max_vertices,
                    trilinear_max_vertices: cli.max_vertices.min(3),
                    ..RunConfig::new(spec)
                };
                let report = run_graph_suite(&cfg)?;
                if format == Format::Json {
                    println!("{}", report.render_json());
                } else {
                    print!("{}", report.render_text());
                }
                return Ok(report.all_pass());
            }
        },
        Cmd::Check => {
            let cfg = RunConfig {
                seed: cli.seed,
                max_word_len: cli.max_len,
                max_vertices: cli.max_vertices,
                trilinear_max_vertices: cli.max_vertices.min(3),
                ..RunConfig::new(spec)
            };
            let report = run_axiom_suite(&cfg)?;
            if format == Format::Json {
                println!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            return Ok(report.all_pass());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
