use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idealis::commands::{self, CharacterInput};
use idealis::{classify_all, exit_code, load_json, thread_cap, with_ring, AnyRing};
use idealis_core::report::{render_text, Bounds};
use idealis_core::{Error, Result};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "idealis", version, about = "Ideal-theoretic invariants of integral domains behind ax+b-semigroup C*-algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Search the constructible ideals for a failure of independence.
    Independence {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 24)]
        bound: u64,
        /// Write the witness, if any, to this file.
        #[arg(long)]
        emit_witness: Option<PathBuf>,
        /// Sampled pairs for the semigroup cover check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Divisorial ideal arithmetic.
    Krull {
        #[command(subcommand)]
        cmd: KrullCmd,
    },
    /// Finite truncations of the spectrum.
    Spectrum {
        #[command(subcommand)]
        cmd: SpectrumCmd,
    },
    /// Witness for the pure-infiniteness criterion.
    Pi {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        /// `[[[b, a], [b', a']], ...]`
        #[arg(long, default_value = "[]")]
        pairs: String,
        #[arg(long, default_value_t = 4096)]
        search_limit: usize,
    },
    /// Structure report for one or more rings.
    Report {
        #[arg(long, required = true)]
        ring: Vec<String>,
        #[arg(long)]
        bound: Option<u64>,
        /// Comma-separated prime labels restricting the prime window.
        #[arg(long, value_delimiter = ',')]
        window: Option<Vec<String>>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum KrullCmd {
    /// Factor a divisorial ideal (or a principal one from --elem) into height-one primes.
    Factor {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        elem: Option<String>,
    },
    /// Element with prescribed valuations, `[["(2)", 1], ["(3)", -2]]`.
    Approx {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        prescription: String,
        #[arg(long, default_value_t = 64)]
        bound: u64,
    },
    Classgroup {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 24)]
        bound: u64,
    },
    Primes {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 24)]
        bound: u64,
        #[arg(long, default_value_t = 3)]
        max_power: u32,
    },
    Ktheory {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 24)]
        bound: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(clap::Args)]
struct CharArgs {
    /// `{"(2)": 2, ...}`
    #[arg(long)]
    level: String,
    #[arg(long)]
    residue: String,
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    component: Option<String>,
}

#[derive(Subcommand)]
enum SpectrumCmd {
    /// All characters at a level.
    Level {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        level: String,
        #[arg(long, default_value_t = 64)]
        bound: u64,
    },
    Project {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        chi: CharArgs,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 64)]
        bound: u64,
    },
    /// Action of `(c^-1 x, c^-1 w)`.
    Act {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        chi: CharArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 64)]
        bound: u64,
    },
    /// Decreasing chain separating group elements from the identity.
    Chain {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 8)]
        group_size: usize,
        #[arg(long, value_delimiter = ',', default_value = "")]
        s: Vec<String>,
        #[arg(long, default_value_t = 30)]
        window_bound: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn ring(arg: &str) -> Result<AnyRing> {
    AnyRing::from_json(&load_json(arg)?)
}

fn emit(v: &Value) {
    print_stdout(&(serde_json::to_string_pretty(v).expect("serializable") + "\n"));
}

// a closed pipe downstream is not an error
fn print_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn char_input<'a>(vals: &'a [Value; 3], component: &'a Option<Value>) -> CharacterInput<'a> {
    CharacterInput { level: &vals[0], residue: &vals[1], ideal: &vals[2], component: component.as_ref() }
}

fn load_char(c: &CharArgs) -> Result<([Value; 3], Option<Value>)> {
    let vals = [load_json(&c.level)?, load_json(&c.residue)?, load_json(&c.ideal)?];
    Ok((vals, c.component.as_deref().map(load_json).transpose()?))
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print_stdout(text);
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Independence { ring: rs, bound, emit_witness, samples } => {
            let (v, w) = with_ring!(&ring(&rs)?, r => commands::independence(r, bound, samples))?;
            if let (Some(path), Some(w)) = (emit_witness, w) {
                let text = serde_json::to_string_pretty(&w).expect("serializable") + "\n";
                write_out(&Some(path), &text)?;
            }
            emit(&v);
        }
        Cmd::Krull { cmd } => {
            let v = match cmd {
                KrullCmd::Factor { ring: rs, ideal, elem } => {
                    let ideal = ideal.as_deref().map(load_json).transpose()?;
                    let elem = elem.as_deref().map(load_json).transpose()?;
                    with_ring!(&ring(&rs)?, r => commands::factor(r, ideal.as_ref(), elem.as_ref()))?
                }
                KrullCmd::Approx { ring: rs, prescription, bound } => {
                    let p = load_json(&prescription)?;
                    with_ring!(&ring(&rs)?, r => commands::approx(r, &p, bound))?
                }
                KrullCmd::Classgroup { ring: rs, bound } => with_ring!(&ring(&rs)?, r => commands::classgroup(r, bound))?,
                KrullCmd::Primes { ring: rs, bound, max_power } => {
                    with_ring!(&ring(&rs)?, r => commands::primes(r, bound, max_power))?
                }
                KrullCmd::Ktheory { ring: rs, bound, samples } => {
                    with_ring!(&ring(&rs)?, r => commands::ktheory(r, bound, samples))?
                }
            };
            emit(&v);
        }
        Cmd::Spectrum { cmd } => {
            let v = match cmd {
                SpectrumCmd::Level { ring: rs, level, bound } => {
                    let level = load_json(&level)?;
                    with_ring!(&ring(&rs)?, r => {
                        let m = commands::parse_level(r, &level, bound)?;
                        commands::spectrum_level(r, &m)
                    })?
                }
                SpectrumCmd::Project { ring: rs, chi, to, bound } => {
                    let (vals, comp) = load_char(&chi)?;
                    let to = load_json(&to)?;
                    with_ring!(&ring(&rs)?, r => commands::spectrum_project(r, &char_input(&vals, &comp), &to, bound))?
                }
                SpectrumCmd::Act { ring: rs, chi, x, w, c, bound } => {
                    let (vals, comp) = load_char(&chi)?;
                    let g = [load_json(&x)?, load_json(&w)?, load_json(&c)?];
                    with_ring!(&ring(&rs)?, r => commands::spectrum_act(r, &char_input(&vals, &comp), [&g[0], &g[1], &g[2]], bound))?
                }
                SpectrumCmd::Chain { ring: rs, group_size, s, window_bound } => {
                    let s: Vec<String> = s.into_iter().filter(|k| !k.is_empty()).collect();
                    with_ring!(&ring(&rs)?, r => commands::spectrum_chain(r, group_size, &s, window_bound))?
                }
            };
            emit(&v);
        }
        Cmd::Pi { ring: rs, ideal, pairs, search_limit } => {
            let (ideal, pairs) = (load_json(&ideal)?, load_json(&pairs)?);
            emit(&with_ring!(&ring(&rs)?, r => commands::pi(r, &ideal, &pairs, search_limit))?);
        }
        Cmd::Report { ring: rs, bound, window, samples, format, out } => {
            let rings = rs.iter().map(|s| ring(s)).collect::<Result<Vec<_>>>()?;
            let mut bounds = Bounds { window, ..Bounds::default() };
            if let Some(b) = bound {
                bounds.norm = b;
            }
            if let Some(s) = samples {
                bounds.samples = s;
            }
            let reports = classify_all(&rings, &bounds, thread_cap()).into_iter().collect::<Result<Vec<_>>>()?;
            let text = match format {
                Format::Json => {
                    let v = if reports.len() == 1 {
                        serde_json::to_value(&reports[0])
                    } else {
                        serde_json::to_value(&reports)
                    }
                    .expect("serializable");
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                Format::Text => reports.iter().map(render_text).collect::<Vec<_>>().join("\n"),
            };
            write_out(&out, &text)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // usage errors get 64 so that 2 stays reserved for unsupported rings
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("idealis: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
