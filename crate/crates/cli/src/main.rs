//! `deligne`: command-line front end. Every subcommand prints exact values
//! in text, JSON or TSV; domain errors exit with status 1, usage errors with 2.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use deligne::frob::WitnessBounds;
use deligne::repst::Engine;

use output::{render_error, Format, Out};

#[derive(Parser, Debug)]
#[command(name = "deligne", version, about = "Exact computations in Rep(S_t)")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "DELIGNE_FORMAT",
        default_value = "text"
    )]
    format: Format,
    /// Highest rank the stabilization loop may reach.
    #[arg(long, global = true, env = "DELIGNE_CAP", default_value_t = 30,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Largest degree tried by the functor witness search.
    #[arg(
        long,
        global = true,
        env = "DELIGNE_WITNESS_DEGREE",
        default_value_t = 6
    )]
    witness_degree: usize,
    /// Largest coefficient tried by the functor witness search.
    #[arg(long, global = true, env = "DELIGNE_WITNESS_COEFF", default_value_t = 3,
          value_parser = clap::value_parser!(u64).range(1..))]
    witness_coeff: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension polynomial of a simple object or a multiset of simples.
    Dim(DimArgs),
    /// Decomposition of the tensor power [m].
    Power(PowerArgs),
    /// Decomposition of A ⊗ B.
    Tensor(TensorArgs),
    /// Restriction to Rep(S_{t-k}) ⊠ Rep(S_k).
    Restrict(RestrictArgs),
    /// Induction from Rep(S_{t-j}) ⊠ Rep(H).
    Induce(InduceArgs),
    /// Composition of two set-partition diagrams.
    DiagramCompose(ComposeArgs),
    /// Gram matrix of the trace pairing on FP_n(t).
    Gram(GramArgs),
    /// Build a simple Lie (super)algebra from classification data.
    LieBuild(LieBuildArgs),
    /// Enumerate classification data within bounds.
    LieEnum(LieEnumArgs),
    /// The Witt algebra W(1,(1)) over F_p.
    Witt(WittArgs),
    /// Dimension of a Cartan-type Lie algebra.
    CartanDim(CartanArgs),
    /// Whether a tensor functor Rep(S_t) → Rep(S_t') exists.
    FrobExists(FrobExistsArgs),
    /// Commutative algebras in Rep(S_t) of a given dimension.
    FrobEnum(FrobEnumArgs),
    /// C(t,i)·C(t,j) in the binomial basis.
    BinomExpand(BinomArgs),
    /// Invariant simplicity of Fun_G(S_N, Mat_m).
    OracleSimple(OracleSimpleArgs),
    /// Trace-form Gram matrix of the coset algebra of S_{N-j} × H.
    OracleGram(OracleGramArgs),
    /// Run the acceptance suite and print a pass/fail table.
    Selftest(SelftestArgs),
    /// Grouped aliases: `repst dim`, `repst power`, ...
    #[command(subcommand)]
    Repst(RepstCommand),
    /// Grouped aliases: `diagrams compose`, `diagrams gram`.
    #[command(subcommand)]
    Diagrams(DiagramsCommand),
    /// Grouped aliases: `lie build`, `lie enum`, `lie witt`, `lie cartan-dim`.
    #[command(subcommand)]
    Lie(LieCommand),
    /// Grouped aliases: `frob exists`, `frob enum`, `frob expand`.
    #[command(subcommand)]
    Frob(FrobCommand),
    /// Grouped aliases: `oracle simple`, `oracle gram`.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
enum RepstCommand {
    Dim(DimArgs),
    Power(PowerArgs),
    Tensor(TensorArgs),
    Restrict(RestrictArgs),
    Induce(InduceArgs),
}

#[derive(Subcommand, Debug)]
enum DiagramsCommand {
    Compose(ComposeArgs),
    Gram(GramArgs),
}

#[derive(Subcommand, Debug)]
enum LieCommand {
    Build(LieBuildArgs),
    Enum(LieEnumArgs),
    Witt(WittArgs),
    CartanDim(CartanArgs),
}

#[derive(Subcommand, Debug)]
enum FrobCommand {
    Exists(FrobExistsArgs),
    Enum(FrobEnumArgs),
    Expand(BinomArgs),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    Simple(OracleSimpleArgs),
    Gram(OracleGramArgs),
}

#[derive(Args, Debug)]
struct DimArgs {
    /// "[2,1]" or "{[]:2,[1]:1}".
    object: String,
}

#[derive(Args, Debug)]
struct PowerArgs {
    m: usize,
}

#[derive(Args, Debug)]
struct TensorArgs {
    a: String,
    b: String,
}

#[derive(Args, Debug)]
struct RestrictArgs {
    object: String,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

#[derive(Args, Debug)]
struct InduceArgs {
    #[arg(long)]
    j: usize,
    /// Generators such as "(1 2)", or a name: S2, A3, C3, 1.
    #[arg(long = "H")]
    h: String,
    /// Object of Rep(S_{t-j}).
    #[arg(long, default_value = "[]")]
    inner: String,
    /// Rational character of H on every multiplicity space (0 = trivial).
    #[arg(long, default_value_t = 0)]
    label: usize,
}

#[derive(Args, Debug)]
struct ComposeArgs {
    /// Upper diagram as JSON, e.g. {"n":2,"m":2,"blocks":[[1,-1],[2,-2]]}.
    upper: String,
    /// Lower diagram, applied first.
    lower: String,
}

#[derive(Args, Debug)]
struct GramArgs {
    n: usize,
}

#[derive(Args, Debug)]
struct LieBuildArgs {
    #[arg(long, default_value_t = 0)]
    j: usize,
    #[arg(long = "H", default_value = "1")]
    h: String,
    /// gl, sl, psl, so, sp, sl-super, psl-super, osp, p, q or G2..E8.
    #[arg(long)]
    kind: String,
    #[arg(long = "V", default_value = "[]")]
    v: String,
    #[arg(long = "W")]
    w: Option<String>,
    #[arg(long)]
    t0: Option<String>,
    /// H-structure on V, e.g. "[1]:1;[2]:0,0".
    #[arg(long)]
    action: Option<String>,
    #[arg(long)]
    action_w: Option<String>,
}

#[derive(Args, Debug)]
struct LieEnumArgs {
    #[arg(long, env = "DELIGNE_JMAX", default_value_t = 1)]
    jmax: usize,
    #[arg(long, env = "DELIGNE_INNER_SIZE", default_value_t = 1)]
    size: usize,
    /// Comma-separated kinds, "exceptional" or "all".
    #[arg(long, default_value = "all")]
    kinds: String,
}

#[derive(Args, Debug)]
struct WittArgs {
    #[arg(long, default_value_t = 5)]
    p: u64,
    /// antisymmetry, jacobi, ideal or all.
    #[arg(long, default_value = "all")]
    check: String,
}

#[derive(Args, Debug)]
struct CartanArgs {
    /// W, S, H or K.
    kind: String,
    /// m, then n_1 .. n_m, then p.
    #[arg(required = true, num_args = 3..)]
    numbers: Vec<usize>,
}

#[derive(Args, Debug)]
struct FrobExistsArgs {
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    #[arg(long, allow_hyphen_values = true)]
    to: String,
}

#[derive(Args, Debug)]
struct FrobEnumArgs {
    /// Target parameter t.
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    /// Required dimension.
    #[arg(long, allow_hyphen_values = true)]
    dim: String,
    #[arg(long, env = "DELIGNE_JMAX", default_value_t = 2)]
    jmax: usize,
    #[arg(long, default_value_t = deligne::frob::DEFAULT_MAX_SUMMANDS)]
    max_summands: usize,
}

#[derive(Args, Debug)]
struct BinomArgs {
    i: usize,
    j: usize,
}

#[derive(Args, Debug)]
#[allow(non_snake_case)]
struct OracleSimpleArgs {
    #[arg(long = "N")]
    n: usize,
    /// Generators of G, e.g. "(1 2),(1 2 3)".
    #[arg(long = "G", default_value = "1")]
    g: String,
    #[arg(long, default_value_t = 1)]
    m: usize,
}

#[derive(Args, Debug)]
struct OracleGramArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long, default_value_t = 0)]
    j: usize,
    /// Subgroup of S_j; defaults to S_j.
    #[arg(long = "H")]
    h: Option<String>,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Seed for the randomized reciprocity instances.
    #[arg(long, env = "DELIGNE_SEED", default_value_t = deligne::acceptance::DEFAULT_SEED)]
    seed: u64,
}

impl From<RepstCommand> for Command {
    fn from(c: RepstCommand) -> Self {
        match c {
            RepstCommand::Dim(a) => Command::Dim(a),
            RepstCommand::Power(a) => Command::Power(a),
            RepstCommand::Tensor(a) => Command::Tensor(a),
            RepstCommand::Restrict(a) => Command::Restrict(a),
            RepstCommand::Induce(a) => Command::Induce(a),
        }
    }
}

impl From<DiagramsCommand> for Command {
    fn from(c: DiagramsCommand) -> Self {
        match c {
            DiagramsCommand::Compose(a) => Command::DiagramCompose(a),
            DiagramsCommand::Gram(a) => Command::Gram(a),
        }
    }
}

impl From<LieCommand> for Command {
    fn from(c: LieCommand) -> Self {
        match c {
            LieCommand::Build(a) => Command::LieBuild(a),
            LieCommand::Enum(a) => Command::LieEnum(a),
            LieCommand::Witt(a) => Command::Witt(a),
            LieCommand::CartanDim(a) => Command::CartanDim(a),
        }
    }
}

impl From<FrobCommand> for Command {
    fn from(c: FrobCommand) -> Self {
        match c {
            FrobCommand::Exists(a) => Command::FrobExists(a),
            FrobCommand::Enum(a) => Command::FrobEnum(a),
            FrobCommand::Expand(a) => Command::BinomExpand(a),
        }
    }
}

impl From<OracleCommand> for Command {
    fn from(c: OracleCommand) -> Self {
        match c {
            OracleCommand::Simple(a) => Command::OracleSimple(a),
            OracleCommand::Gram(a) => Command::OracleGram(a),
        }
    }
}

/// Runs one command; `Ok(false)` means it ran but reported a failure.
fn run(command: Command, config: &Config) -> deligne::Result<(Out, bool)> {
    let engine = Engine {
        cap: config.cap as usize,
        ..Engine::default()
    };
    let bounds = WitnessBounds {
        max_degree: config.witness_degree,
        max_coeff: config.witness_coeff,
    };
    let out = match command {
        Command::Repst(c) => return run(c.into(), config),
        Command::Diagrams(c) => return run(c.into(), config),
        Command::Lie(c) => return run(c.into(), config),
        Command::Frob(c) => return run(c.into(), config),
        Command::Oracle(c) => return run(c.into(), config),
        Command::Selftest(a) => return Ok(commands::selftest(a.seed)),
        Command::Dim(a) => commands::dim(&a.object)?,
        Command::Power(a) => commands::power(&engine, a.m)?,
        Command::Tensor(a) => commands::tensor(&engine, &a.a, &a.b)?,
        Command::Restrict(a) => commands::restrict(&engine, &a.object, a.k)?,
        Command::Induce(a) => commands::induce(&engine, a.j, &a.h, &a.inner, a.label)?,
        Command::DiagramCompose(a) => commands::diagram_compose(&a.upper, &a.lower)?,
        Command::Gram(a) => commands::gram(a.n)?,
        Command::LieBuild(a) => commands::lie_build(
            &engine,
            commands::LieBuild {
                j: a.j,
                h: &a.h,
                kind: &a.kind,
                v: &a.v,
                w: a.w.as_deref(),
                t0: a.t0.as_deref(),
                action: a.action.as_deref(),
                action_w: a.action_w.as_deref(),
            },
        )?,
        Command::LieEnum(a) => commands::lie_enum(&engine, a.jmax, a.size, &a.kinds)?,
        Command::Witt(a) => commands::witt(a.p, &a.check)?,
        Command::CartanDim(a) => commands::cartan(&a.kind, &a.numbers)?,
        Command::FrobExists(a) => commands::frob_exists(&a.from, &a.to, bounds)?,
        Command::FrobEnum(a) => commands::frob_enum(&a.t, &a.dim, a.jmax, a.max_summands)?,
        Command::BinomExpand(a) => commands::binom_expand(a.i, a.j)?,
        Command::OracleSimple(a) => commands::oracle_simple(a.n, &a.g, a.m)?,
        Command::OracleGram(a) => commands::oracle_gram(a.n, a.j, a.h.as_deref())?,
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    let format = cli.config.format;
    let mut stdout = std::io::stdout().lock();
    match run(cli.command, &cli.config) {
        Ok((out, ok)) => {
            let _ = stdout.write_all(out.render(format).as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let msg = render_error(&e, format);
            if format == Format::Json {
                let _ = stdout.write_all(msg.as_bytes());
            } else {
                let _ = std::io::stderr().write_all(msg.as_bytes());
            }
            ExitCode::from(1)
        }
    }
}
