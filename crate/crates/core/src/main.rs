use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zdigraph::autsearch::{SearchOptions, DEFAULT_NODE_BUDGET};
use zdigraph::commands::{self, Descriptor, Preset};
use zdigraph::{Error, Result};

#[derive(Parser)]
#[command(
    name = "zdigraph",
    version,
    about = "Build level-coordinate digraphs and verify their arc-transitivity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a digraph and print it as JSON or DOT.
    Build {
        #[command(flatten)]
        source: Source,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        /// Draw antiparallel arc pairs as one double-headed edge in DOT.
        #[arg(long, requires = "dot")]
        collapse_antiparallel: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a preset or an orbit profile and compare with the expected verdict.
    Verify {
        preset: Option<PresetName>,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k_max: Option<usize>,
        /// Expected sharp k when verifying a descriptor.
        #[arg(long)]
        expect_sharp: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ball sizes of the infinite digraph over the two-way infinite theta cycle.
    Growth {
        #[arg(short)]
        k: usize,
        #[arg(short = 'n')]
        n_max: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV rows `n,b` (the default).
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Theta,
    Complete,
    Loops,
    Cycle,
    Cdc,
    Cdhc,
    ZQuotient,
    ZWindow,
    ShiftRegister,
    Praeger,
    DiestelLeader,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresetName {
    SharpTheta,
    SharpComplete,
    Praeger,
    ThetaIso,
    TfDihedral,
    StableComplete,
}

#[derive(Args)]
struct Source {
    #[arg(long)]
    family: Option<Family>,
    /// JSON descriptor file, or `-` for standard input.
    #[arg(long, conflicts_with = "family")]
    descriptor: Option<PathBuf>,
    /// Base digraph such as `theta:3` or `complete:3`.
    #[arg(long)]
    delta: Option<Descriptor>,
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(short = 'd')]
    d: Option<usize>,
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(short = 'q')]
    q: Option<usize>,
    #[arg(short = 'r')]
    r: Option<usize>,
    #[arg(short = 'v')]
    v: Option<usize>,
    #[arg(short = 'm')]
    m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<i64>,
    /// Out-valency of the out-tree factor.
    #[arg(long)]
    p: Option<usize>,
    /// In-valency of the in-tree factor.
    #[arg(long)]
    in_valency: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
}

fn need<T: Copy>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidParameter(format!("missing {flag}")))
}

impl Source {
    fn delta(&self) -> Result<Box<Descriptor>> {
        Ok(Box::new(self.delta.clone().ok_or_else(|| {
            Error::InvalidParameter("missing --delta".into())
        })?))
    }

    fn descriptor(&self) -> Result<Option<Descriptor>> {
        if let Some(path) = &self.descriptor {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(path)
            }
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            return commands::parse_descriptor(&text).map(Some);
        }
        let Some(family) = self.family else {
            return Ok(None);
        };
        Ok(Some(match family {
            Family::Theta => Descriptor::Theta {
                n: need(self.n, "-n")?,
            },
            Family::Complete => Descriptor::Complete {
                d: need(self.d, "-d")?,
            },
            Family::Loops => Descriptor::Loops {
                v: need(self.v, "-v")?,
            },
            Family::Cycle => Descriptor::Cycle {
                n: need(self.n, "-n")?,
            },
            Family::Cdc => Descriptor::Cdc {
                delta: self.delta()?,
            },
            Family::Cdhc => Descriptor::Cdhc {
                delta: self.delta()?,
            },
            Family::ZQuotient => Descriptor::ZQuotient {
                delta: self.delta()?,
                k: need(self.k, "-k")?,
                q: need(self.q, "-q")?,
            },
            Family::ZWindow => Descriptor::ZWindow {
                delta: self.delta()?,
                k: need(self.k, "-k")?,
                lo: need(self.lo, "--lo")?,
                hi: need(self.hi, "--hi")?,
            },
            Family::ShiftRegister => Descriptor::ShiftRegister {
                delta: self.delta()?,
                k: need(self.k, "-k")?,
                q: need(self.q, "-q")?,
            },
            Family::Praeger => Descriptor::Praeger {
                r: need(self.r, "-r")?,
                v: need(self.v, "-v")?,
                m: need(self.m, "-m")?,
            },
            Family::DiestelLeader => Descriptor::DiestelLeader {
                p: need(self.p, "--p")?,
                q: need(self.in_valency, "--in-valency")?,
                depth: need(self.depth, "--depth")?,
            },
        }))
    }

    fn preset(&self, name: PresetName) -> Result<Preset> {
        Ok(match name {
            PresetName::SharpTheta => Preset::SharpTheta {
                n: need(self.n, "-n")?,
                k: need(self.k, "-k")?,
                q: need(self.q, "-q")?,
            },
            PresetName::SharpComplete => Preset::SharpComplete {
                d: need(self.d, "-d")?,
                k: need(self.k, "-k")?,
                q: need(self.q, "-q")?,
            },
            PresetName::Praeger => Preset::Praeger {
                r: need(self.r, "-r")?,
                v: need(self.v, "-v")?,
                m: need(self.m, "-m")?,
            },
            PresetName::ThetaIso => Preset::ThetaIso {
                delta: *self.delta()?,
                k: need(self.k, "-k")?,
                q: need(self.q, "-q")?,
            },
            PresetName::TfDihedral => Preset::TfDihedral {
                n: need(self.n, "-n")?,
            },
            PresetName::StableComplete => Preset::StableComplete {
                d: need(self.d, "-d")?,
            },
        })
    }
}

fn emit(out: Option<&PathBuf>, mut content: String) -> Result<()> {
    if !content.ends_with('\n') {
        content.push('\n');
    }
    match out {
        Some(path) => {
            let path = commands::resolve_out_path(path);
            commands::write_atomic(&path, &content)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build {
            source,
            dot,
            collapse_antiparallel,
            out,
        } => {
            let descriptor = source
                .descriptor()?
                .ok_or_else(|| Error::InvalidParameter("give --family or --descriptor".into()))?;
            let built = descriptor.build()?;
            let text = if dot {
                built.to_dot(collapse_antiparallel)
            } else {
                serde_json::to_string(&built.to_json())?
            };
            emit(out.as_ref(), text)?;
            Ok(commands::EXIT_OK)
        }
        Command::Verify {
            preset,
            source,
            k_max,
            expect_sharp,
            budget,
            json,
            out,
        } => {
            let options = SearchOptions {
                node_budget: budget,
            };
            let report = match preset {
                Some(name) => source.preset(name)?.run(options)?,
                None => {
                    let descriptor = source.descriptor()?.ok_or_else(|| {
                        Error::InvalidParameter("give a preset, --family or --descriptor".into())
                    })?;
                    let k_max = k_max.unwrap_or(expect_sharp.map_or(2, |k| k + 1));
                    commands::verify_descriptor(&descriptor, k_max, expect_sharp, options)?
                }
            };
            let text = if json {
                serde_json::to_string_pretty(&report)?
            } else {
                report.to_string()
            };
            emit(out.as_ref(), text)?;
            Ok(report.exit_code())
        }
        Command::Growth {
            k,
            n_max,
            json,
            csv: _,
            out,
        } => {
            let growth = commands::growth_output(k, n_max)?;
            let text = if json {
                serde_json::to_string(&growth)?
            } else {
                growth.sequence.to_csv()
            };
            emit(out.as_ref(), text)?;
            Ok(commands::EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            commands::exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
