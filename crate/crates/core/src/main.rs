//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure or invalid input,
//! 2 certificate emitted, 3 budget exceeded, 4 usage error.

use clap::{Parser, Subcommand};
use dicolor::bench::{bench_suite, Suite};
use dicolor::coloring::{
    check_certificate, color_2col_10, color_3col_sqrt, color_3col_via_graph,
    color_kcol_recursive, CertCheck, DefaultGraphColorer, KcolFailure,
};
use dicolor::decomposition::greedy_transitive_partition;
use dicolor::formats::{parse, serialize, Instance};
use dicolor::generators;
use dicolor::light::{
    color_light_2col_5, color_light_8, heavy_arc_report, is_light, LightColorError,
    NonTwoColorCertificate,
};
use dicolor::oracle;
use dicolor::reductions;
use dicolor::tournament::{color_components, Coloring, Tournament};
use dicolor::vset::VertexSet;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_CERT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "dicolor",
    about = "Tournament coloring toolkit: generators, coloring algorithms, exact oracles, and hardness constructions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance file
    Generate {
        /// random | kcol | paley | circulant | light
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Number of planted color classes (kcol)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated residue set (circulant)
        #[arg(long)]
        residues: Option<String>,
        /// Rejection attempts (light)
        #[arg(long, default_value_t = 200)]
        attempts: usize,
        /// Also write the planted coloring here (kcol)
        #[arg(long)]
        planted_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color a tournament file; writes a coloring, or a certificate (exit 2)
    Color {
        #[arg(long = "in")]
        input: PathBuf,
        /// auto | two10 | light8 | light2col5 | sqrt3 | reduce3 | reck
        #[arg(long, default_value = "auto")]
        alg: String,
        /// Target class count (reck)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring (or a certificate) against a tournament
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Exact dichromatic number by exhaustive search
    Chi {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Structural summary of a tournament
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run a hardness construction
    Reduce {
        /// h3-basic | h3-gap | s-chain | delta | tower | backedge | graph-tower | ramsey
        #[arg(long)]
        kind: String,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Second and third tournaments (delta)
        #[arg(long)]
        in2: Option<PathBuf>,
        #[arg(long)]
        in3: Option<PathBuf>,
        /// Graph input (backedge, graph-tower, ramsey)
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Chain index (s-chain)
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        block_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Decode a coloring of the gap tournament back to the hypergraph
        #[arg(long)]
        decode: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Batch runs with CSV output (honors the THREADS variable)
    Bench {
        /// two-col | light | three-col
        #[arg(long)]
        suite: String,
        /// Comma-separated sizes, e.g. 20,50,100
        #[arg(long, default_value = "50")]
        n_list: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful exits
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| invalid(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_tournament(path: &PathBuf) -> Result<Tournament, Failure> {
    match parse(&read_file(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))? {
        Instance::Tournament(t) => Ok(t),
        other => Err(invalid(format!(
            "{}: expected a tournament file, found kind {:?}",
            path.display(),
            other.kind()
        ))),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Generate {
            kind,
            n,
            k,
            seed,
            residues,
            attempts,
            planted_out,
            out,
        } => generate(&kind, n, k, seed, residues, attempts, planted_out, out),
        Command::Color { input, alg, k, out } => color(&input, &alg, k, out),
        Command::Verify {
            input,
            coloring,
            cert,
        } => verify(&input, coloring, cert),
        Command::Chi { input, budget } => {
            let t = load_tournament(&input)?;
            match oracle::exact_chromatic(&t, budget) {
                oracle::Search::Found(r) => {
                    println!("{}", r.chi);
                    Ok(EXIT_OK)
                }
                oracle::Search::Budget => Err(Failure {
                    code: EXIT_BUDGET,
                    message: format!("budget of {budget} nodes exceeded"),
                }),
                oracle::Search::Exhausted => unreachable!("some k always works"),
            }
        }
        Command::Analyze { input } => {
            let t = load_tournament(&input)?;
            let n = t.n();
            println!("n: {n}");
            println!("arcs: {}", n * n.saturating_sub(1) / 2);
            println!("sccs: {}", t.scc_decomposition().len());
            let report = heavy_arc_report(&t);
            println!("light: {}", report.heavy_arcs.is_empty());
            println!("heavy_arcs: {}", report.heavy_arcs.len());
            println!("transitive: {}", t.is_transitive());
            Ok(EXIT_OK)
        }
        Command::Reduce {
            kind,
            input,
            in2,
            in3,
            graph,
            i,
            k,
            l,
            cap,
            block_size,
            seed,
            decode,
            out,
        } => reduce(ReduceArgs {
            kind,
            input,
            in2,
            in3,
            graph,
            i,
            k,
            l,
            cap,
            block_size,
            seed,
            decode,
            out,
        }),
        Command::Bench {
            suite,
            n_list,
            count,
            seed,
            out,
        } => {
            let suite = Suite::from_name(&suite).map_err(|e| usage(e.to_string()))?;
            let ns: Vec<usize> = n_list
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| usage(format!("bad --n-list {n_list:?}")))?;
            let min_n = match suite {
                Suite::TwoCol => 2,
                Suite::Light => 1,
                Suite::ThreeCol => 3,
            };
            if ns.is_empty() || ns.iter().any(|&n| n < min_n) {
                return Err(usage(format!(
                    "suite {} needs sizes of at least {min_n}",
                    suite.name()
                )));
            }
            let threads = std::env::var("THREADS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
                .unwrap_or(1);
            let csv = bench_suite(suite, &ns, count, seed, threads);
            write_output(&out, &csv)?;
            Ok(EXIT_OK)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: &str,
    n: usize,
    k: Option<usize>,
    seed: u64,
    residues: Option<String>,
    attempts: usize,
    planted_out: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let t = match kind {
        "random" => generators::random_tournament(n, seed),
        "kcol" => {
            let k = k.ok_or_else(|| usage("--kind kcol requires --k"))?;
            let (t, planted) =
                generators::planted_k_colorable(n, k, seed).map_err(|e| invalid(e.to_string()))?;
            if let Some(path) = planted_out {
                std::fs::write(path, serialize(&Instance::Coloring(planted)))
                    .map_err(|e| invalid(e.to_string()))?;
            }
            t
        }
        "paley" => generators::paley(n).map_err(|e| invalid(e.to_string()))?,
        "circulant" => {
            let spec = residues.ok_or_else(|| usage("--kind circulant requires --residues"))?;
            let rs: Vec<usize> = spec
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| usage(format!("bad --residues {spec:?}")))?;
            generators::circulant(n, &VertexSet::from_members(n, rs))
                .map_err(|e| invalid(e.to_string()))?
        }
        "light" => {
            generators::light_sampler(n, seed, attempts).map_err(|e| invalid(e.to_string()))?
        }
        other => return Err(usage(format!("unknown generator kind {other:?}"))),
    };
    write_output(&out, &serialize(&Instance::Tournament(t)))?;
    Ok(EXIT_OK)
}

/// Greedy fallback: one color per peeled transitive set, per component.
fn greedy_fallback(t: &Tournament) -> Coloring {
    color_components(t, |tc, _| -> Result<Coloring, std::convert::Infallible> {
        let classes = greedy_transitive_partition(tc, &VertexSet::full(tc.n()));
        let mut colors = vec![0u32; tc.n()];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                colors[v] = i as u32;
            }
        }
        Ok(Coloring::new(colors))
    })
    .expect("infallible")
}

fn emit_cert(out: &Option<PathBuf>, cert: &NonTwoColorCertificate) -> Result<u8, Failure> {
    write_output(out, &serialize(&Instance::Certificate(cert.clone())))?;
    eprintln!("not 2-colorable: certificate emitted");
    Ok(EXIT_CERT)
}

fn color(
    input: &PathBuf,
    alg: &str,
    k: Option<usize>,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let t = load_tournament(input)?;
    let coloring = match alg {
        "two10" => match color_2col_10(&t) {
            Ok(c) => c,
            Err(cert) => return emit_cert(&out, &cert),
        },
        "light2col5" => match color_light_2col_5(&t) {
            Ok(c) => c,
            Err(LightColorError::NotLight(h)) => {
                return Err(invalid(format!(
                    "input is not light: arc {}->{} is heavy",
                    h.arc.0, h.arc.1
                )))
            }
            Err(LightColorError::NotTwoColorable(cert)) => return emit_cert(&out, &cert),
        },
        "light8" => match color_light_8(&t) {
            Ok(c) => c,
            Err(h) => {
                return Err(invalid(format!(
                    "input is not light: arc {}->{} is heavy",
                    h.arc.0, h.arc.1
                )))
            }
        },
        "sqrt3" => match color_3col_sqrt(&t) {
            Ok(c) => c,
            Err(failure) => match failure.certificates.first() {
                Some((_, cert)) => return emit_cert(&out, cert),
                None => return Err(invalid("sqrt coloring made no progress")),
            },
        },
        "reduce3" => match color_3col_via_graph(&t, &DefaultGraphColorer) {
            Ok(r) => r.coloring,
            Err(e) => return Err(invalid(format!("not 3-colorable: {e}"))),
        },
        "reck" => {
            let k = k.ok_or_else(|| usage("--alg reck requires --k"))?;
            if k < 2 {
                return Err(usage("--k must be at least 2"));
            }
            match color_kcol_recursive(&t, k, &DefaultGraphColorer) {
                Ok(r) => r.coloring,
                Err(KcolFailure::Base(cert)) => return emit_cert(&out, &cert),
                Err(e) => return Err(invalid(format!("not {k}-colorable: {e}"))),
            }
        }
        "auto" => {
            if t.is_transitive() {
                Coloring::uniform(t.n(), 0)
            } else if is_light(&t).is_ok() {
                color_light_8(&t).expect("checked light")
            } else {
                match color_2col_10(&t) {
                    Ok(c) => c,
                    Err(_) => match color_3col_sqrt(&t) {
                        Ok(c) => c,
                        Err(_) => greedy_fallback(&t),
                    },
                }
            }
        }
        other => return Err(usage(format!("unknown algorithm {other:?}"))),
    };
    debug_assert_eq!(t.verify_coloring(&coloring), Ok(()));
    eprintln!("colors: {}", coloring.palette_size());
    write_output(&out, &serialize(&Instance::Coloring(coloring)))?;
    Ok(EXIT_OK)
}

fn verify(
    input: &PathBuf,
    coloring: Option<PathBuf>,
    cert: Option<PathBuf>,
) -> Result<u8, Failure> {
    let t = load_tournament(input)?;
    match (coloring, cert) {
        (Some(cpath), None) => {
            let c = match parse(&read_file(&cpath)?)
                .map_err(|e| invalid(format!("{}: {e}", cpath.display())))?
            {
                Instance::Coloring(c) => c,
                other => {
                    return Err(invalid(format!(
                        "{}: expected a coloring file, found {:?}",
                        cpath.display(),
                        other.kind()
                    )))
                }
            };
            match t.verify_coloring(&c) {
                Ok(()) => {
                    println!("valid");
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    println!("invalid: {e}");
                    Ok(EXIT_INVALID)
                }
            }
        }
        (None, Some(cpath)) => {
            let cert = match parse(&read_file(&cpath)?)
                .map_err(|e| invalid(format!("{}: {e}", cpath.display())))?
            {
                Instance::Certificate(c) => c,
                other => {
                    return Err(invalid(format!(
                        "{}: expected a certificate file, found {:?}",
                        cpath.display(),
                        other.kind()
                    )))
                }
            };
            match check_certificate(&t, &cert) {
                CertCheck::Valid => {
                    println!("valid");
                    Ok(EXIT_OK)
                }
                CertCheck::Invalid(reason) => {
                    println!("invalid: {reason}");
                    Ok(EXIT_INVALID)
                }
            }
        }
        _ => Err(usage("verify needs exactly one of --coloring or --cert")),
    }
}

struct ReduceArgs {
    kind: String,
    input: Option<PathBuf>,
    in2: Option<PathBuf>,
    in3: Option<PathBuf>,
    graph: Option<PathBuf>,
    i: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    cap: usize,
    block_size: usize,
    seed: u64,
    decode: Option<PathBuf>,
    out: Option<PathBuf>,
}

fn load_h3(path: &Option<PathBuf>) -> Result<dicolor::Hypergraph3, Failure> {
    let path = path
        .as_ref()
        .ok_or_else(|| usage("this kind requires --in <h3 file>"))?;
    match parse(&read_file(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))? {
        Instance::Hypergraph(h) => Ok(h),
        other => Err(invalid(format!(
            "{}: expected an h3 file, found {:?}",
            path.display(),
            other.kind()
        ))),
    }
}

fn load_graph(path: &Option<PathBuf>) -> Result<dicolor::Graph, Failure> {
    let path = path
        .as_ref()
        .ok_or_else(|| usage("this kind requires --graph <graph file>"))?;
    match parse(&read_file(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))? {
        Instance::Graph(g) => Ok(g),
        other => Err(invalid(format!(
            "{}: expected a graph file, found {:?}",
            path.display(),
            other.kind()
        ))),
    }
}

fn reduce(args: ReduceArgs) -> Result<u8, Failure> {
    let tournament = match args.kind.as_str() {
        "h3-basic" => reductions::hyper_to_tournament_basic(&load_h3(&args.input)?).tournament,
        "h3-gap" => {
            let h = load_h3(&args.input)?;
            let art = reductions::hyper_to_tournament_gap(&h);
            if let Some(cpath) = &args.decode {
                let c = match parse(&read_file(cpath)?)
                    .map_err(|e| invalid(format!("{}: {e}", cpath.display())))?
                {
                    Instance::Coloring(c) => c,
                    other => {
                        return Err(invalid(format!(
                            "{}: expected a coloring file, found {:?}",
                            cpath.display(),
                            other.kind()
                        )))
                    }
                };
                let decoded = reductions::decode_gap_coloring(&h, &art, &c)
                    .map_err(|e| invalid(e.to_string()))?;
                let line: Vec<String> = decoded.iter().map(|c| c.to_string()).collect();
                println!("{}", line.join(" "));
                return Ok(EXIT_OK);
            }
            art.tournament
        }
        "s-chain" => {
            let i = args.i.ok_or_else(|| usage("s-chain requires --i"))?;
            if !(1..=14).contains(&i) {
                return Err(usage("--i must be in 1..=14"));
            }
            reductions::s_chain(i)
        }
        "delta" => {
            let t1 = load_tournament(
                args.input
                    .as_ref()
                    .ok_or_else(|| usage("delta requires --in"))?,
            )?;
            let t2 = load_tournament(
                args.in2.as_ref().ok_or_else(|| usage("delta requires --in2"))?,
            )?;
            let t3 = load_tournament(
                args.in3.as_ref().ok_or_else(|| usage("delta requires --in3"))?,
            )?;
            dicolor::tournament::delta_compose(&t1, &t2, &t3)
        }
        "tower" => {
            let h = load_h3(&args.input)?;
            let k = args.k.ok_or_else(|| usage("tower requires --k"))?;
            let hcol = oracle::hypergraph_2colorable(&h, oracle::DEFAULT_BUDGET).found();
            let (t, planted) = reductions::hardness_tower(&h, k, hcol.as_deref())
                .map_err(|e| invalid(e.to_string()))?;
            if let Some(p) = planted {
                eprintln!("planted coloring uses {} colors", p.palette_size());
            }
            t
        }
        "backedge" => {
            let g = load_graph(&args.graph)?;
            let t = load_tournament(
                args.input
                    .as_ref()
                    .ok_or_else(|| usage("backedge requires --in"))?,
            )?;
            reductions::backedge_step(&g, &t).map_err(|e| invalid(e.to_string()))?
        }
        "graph-tower" => {
            let g = load_graph(&args.graph)?;
            let k = args.k.ok_or_else(|| usage("graph-tower requires --k"))?;
            let l = args.l.ok_or_else(|| usage("graph-tower requires --l"))?;
            reductions::graph_tower(&g, k, l, args.cap).map_err(|e| invalid(e.to_string()))?
        }
        "ramsey" => {
            let g = load_graph(&args.graph)?;
            let source = reductions::SeededBipartiteSource { seed: args.seed };
            reductions::ramsey_blowup(&g, args.block_size, &source)
                .map_err(|e| invalid(e.to_string()))?
        }
        other => return Err(usage(format!("unknown reduction kind {other:?}"))),
    };
    write_output(&args.out, &serialize(&Instance::Tournament(tournament)))?;
    Ok(EXIT_OK)
}
