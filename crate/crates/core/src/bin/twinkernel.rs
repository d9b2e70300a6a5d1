//! Command-line front end. Exit status: 0 success, 1 runtime or input error,
//! 2 usage error, 10 trivial no-instance from `kernelize`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use twinkernel::compose::{
    self, check_blocking_gadget, generate_tsd_instance, list_to_plain, TriangleSplitInstance,
};
use twinkernel::graph::{min_twin_cover, twin_decomposition};
use twinkernel::io::{self, StatsReport, EXIT_TRIVIAL_NO, TRIVIAL_NO_MARKER};
use twinkernel::kernel::{kernel_size_bound, kernelize};
use twinkernel::oracle::find_h_coloring;
use twinkernel::{Error, Guards, Result};

#[derive(Parser)]
#[command(name = "twinkernel", version, about = "Twin-cover kernels for H-coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a graph to an equivalent kernel.
    Kernelize {
        #[arg(long)]
        graph: PathBuf,
        /// K3..K9, C5, C7, petersen, or a graph file.
        #[arg(long)]
        pattern: String,
        /// Kernel output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON statistics file.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Decide H-colorability exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: String,
        /// Print the coloring as `<vertex> <color>` lines (both 1-based).
        #[arg(long)]
        witness: bool,
    },
    /// Print the twin classes, one per line.
    Twins {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Compose 2-3-coloring instances into one 3-coloring instance.
    Compose {
        /// Directory of `.tsd` files or a comma-separated list of files.
        #[arg(long)]
        inputs: String,
        #[arg(long)]
        out: PathBuf,
        /// JSON layout file.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Generate a random 2-3-coloring instance.
    Gen23 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check every blocking gadget with `m` ports against its contract.
    VerifyGadget {
        #[arg(long)]
        m: usize,
    },
    /// Print the kernel vertex bound for twin-cover size `k`.
    Bound {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pattern: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let guards = Guards::from_env();
    match command {
        Command::Kernelize {
            graph,
            pattern,
            out,
            stats,
        } => {
            let g = io::read_graph(&graph)?;
            let h = io::resolve_pattern(&pattern)?;
            let result = kernelize(&g, &h);
            if let Some(path) = stats {
                let cover = min_twin_cover(&g, &guards).ok().map(|c| c.len());
                io::write_json(&path, &StatsReport::new(&g, &h, &result, cover))?;
            }
            match result.graph() {
                Some(kernel) => write_or_print(out.as_deref(), &io::emit_graph(kernel))?,
                None => {
                    println!("{TRIVIAL_NO_MARKER}");
                    if let Some(path) = out {
                        std::fs::write(path, format!("{TRIVIAL_NO_MARKER}\n"))?;
                    }
                    return Ok(ExitCode::from(EXIT_TRIVIAL_NO as u8));
                }
            }
        }
        Command::Solve {
            graph,
            pattern,
            witness,
        } => {
            let g = io::read_graph(&graph)?;
            let h = io::resolve_pattern(&pattern)?;
            match find_h_coloring(&g, &h, &guards)? {
                Some(f) => {
                    println!("COLORABLE");
                    if witness {
                        for (v, c) in f.map {
                            println!("{} {}", v + 1, c + 1);
                        }
                    }
                }
                None => println!("NOT COLORABLE"),
            }
        }
        Command::Twins { graph } => {
            let g = io::read_graph(&graph)?;
            for class in twin_decomposition(&g).classes() {
                let ids: Vec<String> = class.iter().map(|v| (v + 1).to_string()).collect();
                println!("{}", ids.join(" "));
            }
        }
        Command::Compose {
            inputs,
            out,
            manifest,
        } => {
            let instances = read_inputs(&inputs)?;
            let (inst, mut layout) = compose::compose(&instances)?;
            let (plain, palette) = list_to_plain(&inst);
            layout.palette = Some(palette);
            let mut labels = inst.labels().clone();
            for (i, &c) in palette.iter().enumerate() {
                labels.insert(c, format!("C{}", i + 1));
            }
            std::fs::write(&out, io::emit_labeled_graph(&plain, &labels))?;
            if let Some(path) = manifest {
                io::write_json(&path, &layout)?;
            }
            println!(
                "composed {} inputs into {} vertices, {} edges",
                instances.len(),
                plain.vertex_count(),
                plain.edge_count()
            );
        }
        Command::Gen23 {
            m,
            n,
            density,
            seed,
            out,
        } => {
            if m == 0 || n == 0 {
                return Err(Error::InvalidInput("m and n must be positive".into()));
            }
            let inst = generate_tsd_instance(m, n, density, seed);
            std::fs::write(out, io::emit_tsd(&inst))?;
        }
        Command::VerifyGadget { m } => {
            if m == 0 {
                return Err(Error::InvalidInput("m must be positive".into()));
            }
            let gadget_guards = Guards {
                list_coloring: guards.list_coloring.max(6 * m + 2),
                ..guards
            };
            let (mut passed, mut total) = (0, 0);
            for code in 0..3usize.pow(m as u32) {
                let target: Vec<u8> = (0..m)
                    .map(|i| (code / 3usize.pow(i as u32) % 3) as u8 + 1)
                    .collect();
                let (p, t) = check_blocking_gadget(&target, &gadget_guards)?;
                let shown: Vec<String> = target.iter().map(u8::to_string).collect();
                println!("target ({}): {p}/{t}", shown.join(","));
                passed += p;
                total += t;
            }
            let status = if passed == total { "OK" } else { "FAIL" };
            println!("{status} {passed}/{total}");
            if passed != total {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Bound { k, pattern } => {
            let h = io::resolve_pattern(&pattern)?;
            let bound = kernel_size_bound(k, &h);
            if bound.saturated {
                println!("overflow (exceeds {})", u128::MAX);
            } else {
                println!("{}", bound.value);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read_inputs(spec: &str) -> Result<Vec<TriangleSplitInstance>> {
    let dir = Path::new(spec);
    let paths: Vec<PathBuf> = if dir.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
            .map(|e| e.map(|e| e.path()))
            .collect::<std::io::Result<_>>()?;
        files.retain(|p| p.extension().is_some_and(|e| e == "tsd"));
        files.sort();
        files
    } else {
        spec.split(',').map(PathBuf::from).collect()
    };
    if paths.is_empty() {
        return Err(Error::InvalidInput(format!("no .tsd inputs found in {spec}")));
    }
    paths
        .iter()
        .map(|p| io::parse_tsd(&std::fs::read_to_string(p)?))
        .collect()
}
