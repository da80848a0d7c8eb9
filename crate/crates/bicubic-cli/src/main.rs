use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use bicubic::bijection::{phi, phi_inverse, verify};
use bicubic::dyck::{enumerate_decorated, parse_decorated, write_decorated};
use bicubic::labeling::label_edges;
use bicubic::planarmap::{parse_map, write_map, RootedMap};
use bicubic::primitives::{construct_asymmetric, generate_catalog, PrimitiveCatalog};
use bicubic::series::{f_sequence, g_sequence};
use bicubic::surgery::{decompose, glue};
use bicubic::Execution;

/// Worker count for the parallel paths.
const THREADS_VAR: &str = "BICUBIC_THREADS";
/// Catalogs beyond this size take noticeably longer.
const DEFAULT_CEILING: usize = 24;

#[derive(Parser)]
#[command(name = "bicubic", version, about = "Rooted bicubic planar maps and their Dyck path encoding")]
struct Cli {
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print `edge label` pairs; edges are named by their smaller dart.
    Label { map: PathBuf },
    /// Glue map N into the edge of M with the given label.
    Glue { m: PathBuf, label: usize, n: PathBuf },
    /// Split a non-primitive map at its first two-edge cut.
    Decompose { map: PathBuf },
    /// Decorated Dyck path of a map.
    Encode { map: PathBuf },
    /// Map of a decorated Dyck path.
    Decode { path: PathBuf },
    /// All decorated paths of semilength 3n.
    Paths {
        #[arg(long)]
        n: usize,
        /// Print only the number of paths.
        #[arg(long)]
        count_only: bool,
    },
    /// Generate all primitives up to a vertex count.
    Primitives {
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        max_vertices: usize,
        /// Write index.txt and per-size map files here instead of printing the index.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of distinct rootings of a map.
    Rootings { map: PathBuf },
    /// A primitive on 2n vertices with 6n rootings.
    Asymmetric {
        #[arg(long)]
        n: usize,
    },
    /// Counting sequences, one term per line.
    Seq {
        which: Which,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Bell)]
        method: Method,
    },
    /// Check both bijection round trips and the count at size 2n.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    F,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bell,
    Catalog,
}

enum Outcome {
    Done(String),
    /// Printed like `Done`, but exits with status 2.
    CheckFailed(String),
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_map(path: &Path) -> Result<RootedMap> {
    parse_map(&read_input(path)?).with_context(|| format!("{}", path.display()))
}

fn catalog(max_vertices: usize, exec: Execution) -> PrimitiveCatalog {
    if max_vertices > DEFAULT_CEILING {
        eprintln!("warning: generating primitives up to {max_vertices} vertices; this may take a long time and a lot of memory");
    }
    generate_catalog(max_vertices.max(2), exec)
}

/// Largest `P<v>.` handle size mentioned in a path file.
fn handle_ceiling(text: &str) -> usize {
    text.split_whitespace()
        .filter_map(|t| t.strip_prefix('P')?.split_once('.')?.0.parse::<usize>().ok())
        .max()
        .unwrap_or(2)
}

fn run(cli: Cli) -> Result<Outcome> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let mut out = String::new();
    match cli.command {
        Command::Label { map } => {
            let m = load_map(&map)?;
            let labels = label_edges(&m);
            for (i, &e) in labels.edges_in_order().iter().enumerate() {
                writeln!(out, "{} {}", 2 * e + 1, i + 1)?;
            }
        }
        Command::Glue { m, label, n } => {
            let g = glue(&load_map(&m)?, label, &load_map(&n)?)?;
            out.push_str(&write_map(&g));
        }
        Command::Decompose { map } => {
            let d = decompose(&load_map(&map)?)?;
            writeln!(out, "label {}", d.distinguished_label)?;
            out.push_str(&write_map(&d.m1));
            out.push_str(&write_map(&d.m2));
        }
        Command::Encode { map } => {
            let m = load_map(&map)?;
            let cat = catalog(m.num_vertices().min(DEFAULT_CEILING), exec);
            let p = phi_inverse(&m, Some(&cat))?;
            out.push_str(&write_decorated(&p, Some(&cat)));
        }
        Command::Decode { path } => {
            let text = read_input(&path)?;
            let cat = catalog(handle_ceiling(&text), exec);
            let p = parse_decorated(&text, &cat).with_context(|| format!("{}", path.display()))?;
            out.push_str(&write_map(&phi(&p)));
        }
        Command::Paths { n, count_only } => {
            let cat = catalog(2 * n, exec);
            let paths = enumerate_decorated(n, &cat)?;
            if count_only {
                writeln!(out, "{}", paths.len())?;
            } else {
                for p in &paths {
                    out.push_str(&write_decorated(p, Some(&cat)));
                    out.push('\n');
                }
            }
        }
        Command::Primitives { max_vertices, out: dir } => {
            if max_vertices < 2 || max_vertices % 2 == 1 {
                bail!("--max-vertices must be an even number >= 2, got {max_vertices}");
            }
            let cat = catalog(max_vertices, exec);
            match dir {
                Some(dir) => cat.write_dir(&dir).with_context(|| format!("cannot write {}", dir.display()))?,
                None => out.push_str(&cat.index_text()),
            }
        }
        Command::Rootings { map } => {
            writeln!(out, "{}", load_map(&map)?.count_rootings())?;
        }
        Command::Asymmetric { n } => {
            let m = construct_asymmetric(n).map_err(|e| anyhow!(e))?;
            out.push_str(&write_map(&m));
        }
        Command::Seq { which, n, method } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let terms: Vec<String> = match (which, method) {
                (Which::F, Method::Bell) => f_sequence(n as u32).iter().map(|x| x.to_string()).collect(),
                (Which::G, Method::Bell) => g_sequence(n as u32).iter().map(|x| x.to_string()).collect(),
                (Which::G, Method::Catalog) => {
                    let cat = catalog(2 * n, exec);
                    (1..=n).map(|k| cat.rooting_sum(2 * k).to_string()).collect()
                }
                (Which::F, Method::Catalog) => {
                    let cat = catalog(2 * n, exec);
                    let mut terms = Vec::new();
                    for k in 1..=n {
                        terms.push(enumerate_decorated(k, &cat)?.len().to_string());
                    }
                    terms
                }
            };
            for t in terms {
                writeln!(out, "{t}")?;
            }
        }
        Command::Verify { n } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let cat = catalog(2 * n, exec);
            let r = verify(n, &cat, exec)?;
            let status = |failures: usize| if failures == 0 { "ok" } else { "FAILED" };
            writeln!(out, "n {}", r.n)?;
            writeln!(out, "paths {}", r.paths)?;
            writeln!(out, "distinct_maps {}", r.distinct_maps)?;
            writeln!(out, "expected {}", r.expected)?;
            writeln!(out, "path_round_trip {} ({} failures)", status(r.path_round_trip_failures), r.path_round_trip_failures)?;
            writeln!(out, "map_round_trip {} ({} failures)", status(r.map_round_trip_failures), r.map_round_trip_failures)?;
            writeln!(out, "invalid_maps {}", r.invalid_maps)?;
            writeln!(out, "result {}", if r.ok() { "ok" } else { "FAILED" })?;
            if !r.ok() {
                return Ok(Outcome::CheckFailed(out));
            }
        }
    }
    Ok(Outcome::Done(out))
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .with_context(|| format!("{THREADS_VAR} must be a positive integer, got {value:?}"))?;
    if threads == 0 {
        bail!("{THREADS_VAR} must be a positive integer, got 0");
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(Outcome::Done(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::CheckFailed(text)) => {
            print!("{text}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
