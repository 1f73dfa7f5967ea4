//! Batch front end for the exact angle-system machinery: parse problem
//! files, decide them, and print certificates as text or JSON.

mod parse;
mod run;

use clap::{Args, Parser, Subcommand, ValueEnum};
use run::{Command, DecideOpts, Engine, Epsilon, Outcome};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Parser)]
#[command(
    name = "dihedra",
    version,
    about = "Exact feasibility of prescribed angle systems on triangulated \
             surfaces and ideal triangulations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Flow,
    Lp,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Flow => Engine::Flow,
            EngineArg::Lp => Engine::Lp,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Args, Clone)]
struct Common {
    /// Problem files (`surface 2` or `manifold 3` format)
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value_t = EmitArg::Text, global = true)]
    emit: EmitArg,
    /// Worker threads across input files
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
}

#[derive(Args, Clone)]
struct DecideArgs {
    #[command(flatten)]
    common: Common,
    /// Decision engine; defaults to flow for dihedral data, lp for
    /// cone/boundary prescriptions
    #[arg(long, value_enum)]
    engine: Option<EngineArg>,
    /// Strictness margin for the flow engine: `auto` (1 over the common
    /// denominator times the edge count), or a rational; `0/1` asks for a
    /// nonnegative solution instead of a strictly positive one
    #[arg(long, default_value = "auto")]
    epsilon: String,
    /// Drop the Delaunay cap (interior dihedral sums <= 1) in cone mode
    #[arg(long)]
    no_delaunay: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide the prescribed angle system
    Check(DecideArgs),
    /// Decide by exhaustive excess enumeration (exponential; small inputs)
    CheckOracle(Common),
    /// Decide by maximum flow (dihedral prescriptions only)
    Flow(DecideArgs),
    /// Decide by the exact margin-maximizing simplex
    Lp(DecideArgs),
    /// Decide, then lay the faces out in the plane
    Realize(DecideArgs),
    /// Decide, then report per-edge shear coordinates
    Shear(DecideArgs),
    /// Cone every face at a new vertex and test positively curved
    /// realizability of the result
    Stellate(Common),
    /// Look for a strict solution of the dihedral-angle equations of an
    /// ideal triangulation
    M3Check(Common),
    /// Analyze the vertex-linking normal surface as an obstruction
    M3Normal(Common),
    /// Print the canonical class indices and incidence tables
    Describe(Common),
}

fn parse_epsilon(s: &str) -> Result<Epsilon, String> {
    if s == "auto" {
        return Ok(Epsilon::Auto);
    }
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: i64 = p
        .parse()
        .map_err(|_| format!("--epsilon expects `auto` or a rational `p/q`, got `{s}`"))?;
    let q: i64 = q
        .parse()
        .map_err(|_| format!("--epsilon expects `auto` or a rational `p/q`, got `{s}`"))?;
    if q == 0 {
        return Err("--epsilon: zero denominator".into());
    }
    Ok(Epsilon::Fixed(dihedra::scalar::rational(p, q)))
}

fn decide_opts(args: &DecideArgs, forced: Option<Engine>) -> Result<DecideOpts, String> {
    Ok(DecideOpts {
        engine: forced.or(args.engine.map(Engine::from)),
        epsilon: parse_epsilon(&args.epsilon)?,
        delaunay_cap: !args.no_delaunay,
    })
}

fn split(cmd: &Cmd) -> Result<(Command, &Common), String> {
    Ok(match cmd {
        Cmd::Check(a) => (Command::Check(decide_opts(a, None)?), &a.common),
        Cmd::CheckOracle(c) => (
            Command::Check(DecideOpts {
                engine: Some(Engine::Oracle),
                ..DecideOpts::default()
            }),
            c,
        ),
        Cmd::Flow(a) => (Command::Check(decide_opts(a, Some(Engine::Flow))?), &a.common),
        Cmd::Lp(a) => (Command::Check(decide_opts(a, Some(Engine::Lp))?), &a.common),
        Cmd::Realize(a) => (Command::Realize(decide_opts(a, None)?), &a.common),
        Cmd::Shear(a) => (Command::Shear(decide_opts(a, None)?), &a.common),
        Cmd::Stellate(c) => (Command::Stellate, c),
        Cmd::M3Check(c) => (Command::M3Check, c),
        Cmd::M3Normal(c) => (Command::M3Normal, c),
        Cmd::Describe(c) => (Command::Describe, c),
    })
}

fn run_file(cmd: &Command, path: &PathBuf) -> Outcome {
    let file = path.display().to_string();
    match std::fs::read_to_string(path) {
        Ok(source) => run::run_one(cmd, &file, &source),
        Err(e) => Outcome {
            code: 2,
            json: serde_json::json!({
                "command": serde_json::Value::Null,
                "file": file,
                "error": { "kind": "io", "message": e.to_string() },
            }),
            text: format!("error: {file}: {e}\n"),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    let (command, common) = match split(&cli.cmd) {
        Ok(x) => x,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };

    let files = &common.files;
    let mut results: Vec<Option<Outcome>> = Vec::new();
    results.resize_with(files.len(), || None);
    let jobs = common.jobs.max(1).min(files.len().max(1));
    if jobs <= 1 {
        for (i, path) in files.iter().enumerate() {
            results[i] = Some(run_file(&command, path));
        }
    } else {
        let next = AtomicUsize::new(0);
        let slots = Mutex::new(&mut results);
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= files.len() {
                        break;
                    }
                    let out = run_file(&command, &files[i]);
                    slots.lock().unwrap()[i] = Some(out);
                });
            }
        });
    }

    let mut exit = 0;
    let many = files.len() > 1;
    for (i, out) in results.into_iter().enumerate() {
        let out = out.expect("every file index was claimed by a worker");
        exit = exit.max(out.code);
        match common.emit {
            EmitArg::Json => println!("{}", serde_json::to_string(&out.json).unwrap()),
            EmitArg::Text => {
                if many {
                    println!("== {} ==", files[i].display());
                }
                if out.code == 2 {
                    eprint!("{}", out.text);
                } else {
                    print!("{}", out.text);
                }
            }
        }
    }
    std::process::exit(exit);
}
