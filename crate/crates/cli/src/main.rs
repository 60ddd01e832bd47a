//! Command-line front end: every arithmetic operation grows a real tile
//! assembly and reads the answer off the tiles; documents describing tile
//! sets, seeds, and growth traces can be exported, validated, and drawn.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use tilecalc_core::builders::{adder_row, build_pi_tileset, seed_row, TaskSeed, TaskSetup};
use tilecalc_core::engine::replay;
use tilecalc_core::render::{render_ascii, render_svg};
use tilecalc_core::tasks::{divide_decimal_marked, sqrt_assembly_marked};
use tilecalc_core::tilefile::{export_xgrow, parse as parse_document, serialize, serialize_trace};
use tilecalc_core::{
    compute_pi, rational_expand, set_step_cap, validate_determinism, Assembly, FixedPointBinary,
    TaskRun,
};

#[derive(Parser)]
#[command(
    name = "tilecalc",
    version,
    about = "Compute by growing tile assemblies",
    long_about = "Computes division, square roots, rational binary expansions, and pi by \
                  growing two-dimensional tile assemblies at temperature 2 and reading the \
                  answers off the tiles. Numbers are written in decimal (23.5) or binary \
                  (0b10111.1)."
)]
struct Cli {
    /// Cap the attachment steps of any single assembly run.
    #[arg(long, global = true, env = "TILECALC_MAX_STEPS", value_name = "N")]
    max_steps: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Divide A by B, the quotient carried to a fixed number of fraction bits.
    Divide {
        a: String,
        b: String,
        /// Fraction bits of the quotient.
        #[arg(long, default_value_t = 4)]
        frac_bits: usize,
        /// Place the binary-point marker tile next to the result column.
        #[arg(long)]
        dot: bool,
        /// Write the full growth record (tiles + seed + steps) to this path.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Square root of V, one result digit per assembly level.
    Sqrt {
        v: String,
        /// Fraction bits of the root.
        #[arg(long, default_value_t = 1)]
        frac_bits: usize,
        /// Place the binary-point marker tile next to the result column.
        #[arg(long)]
        dot: bool,
        /// Write the full growth record (tiles + seed + steps) to this path.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Binary expansion of the proper fraction P/Q, with period detection.
    Rational {
        p: String,
        q: String,
        /// Number of expansion bits to produce.
        #[arg(long, default_value_t = 8)]
        max_bits: usize,
        /// Write the full growth record (tiles + seed + steps) to this path.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Partial sum of the alternating odd-reciprocal series for pi.
    Pi {
        /// Series terms to assemble (one division each).
        #[arg(long, default_value_t = 50)]
        terms: usize,
        /// Fraction bits carried per term (at least 2).
        #[arg(long, default_value_t = 16)]
        frac_bits: usize,
        /// Write the full growth record (tiles + seed + steps) to this path.
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Write one task's tile set and demo seed as a document.
    Tiles {
        /// Which tile system to export.
        #[arg(value_enum)]
        task: TaskName,
        /// Destination path.
        #[arg(long, value_name = "PATH")]
        export: PathBuf,
        /// Use the grid-simulator export layout instead of the canonical format.
        #[arg(long)]
        xgrow: bool,
        /// Operand width for `insert` (number of bits).
        #[arg(long, default_value_t = 6, value_name = "N")]
        bits: usize,
        /// Fraction bits for `divide`, `sqrt`, and `pi`.
        #[arg(long, default_value_t = 4, value_name = "F")]
        frac_bits: usize,
        /// Expansion bits for `rational`.
        #[arg(long, default_value_t = 8, value_name = "M")]
        max_bits: usize,
    },
    /// Check that a document parses, is deterministic, and replays cleanly.
    Validate {
        file: PathBuf,
    },
    /// Draw the assembly recorded in a document (seed plus any steps).
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        /// Write to a file instead of standard output.
        #[arg(long, short, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TaskName {
    Compare,
    Shift,
    Subshift,
    Insert,
    Divide,
    Sqrt,
    Rational,
    Adder,
    Pi,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

fn parse_number(text: &str, what: &str) -> Result<FixedPointBinary> {
    FixedPointBinary::parse(text).with_context(|| format!("{what} `{text}`"))
}

fn parse_integer(text: &str, what: &str) -> Result<BigUint> {
    text.parse()
        .ok()
        .with_context(|| format!("{what} `{text}` must be a decimal integer"))
}

fn write_trace(path: &Path, run: &TaskRun) -> Result<()> {
    let doc = serialize_trace(&run.tileset, run.assembly.seed(), run.assembly.trace())?;
    fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn emit(value: &FixedPointBinary, run: &TaskRun, trace: Option<&Path>) -> Result<()> {
    println!(
        "{}b ({}) steps={}",
        value.to_binary_string(),
        value.to_decimal_string(),
        run.steps()
    );
    if let Some(path) = trace {
        write_trace(path, run)?;
    }
    Ok(())
}

/// Demo inputs for `tiles`: small, readable, and covering every tile family
/// of the exported system.
fn demo_setup(task: TaskName, bits: usize, frac_bits: usize, max_bits: usize) -> Result<TaskSetup> {
    let seed = match task {
        TaskName::Compare => TaskSeed::Compare {
            a: vec![1, 0, 1, 1, 1],
            b: vec![1, 1, 0, 0, 0],
        },
        TaskName::Shift => TaskSeed::Shift {
            a: vec![1, 0, 1, 1, 1],
        },
        TaskName::Subshift => TaskSeed::SubShift {
            a: vec![1, 0, 1, 1, 1],
            b: vec![0, 1, 1, 0, 0],
        },
        TaskName::Insert => {
            if bits < 2 {
                bail!("--bits must be at least 2");
            }
            let q: Vec<u8> = (0..bits).map(|i| (i % 2 == 0) as u8).collect();
            TaskSeed::Insert {
                q,
                i: bits - 1,
                c: 1,
            }
        }
        TaskName::Divide => TaskSeed::Division {
            // 23.5 / 6 on the common scale of one fraction bit: 47 / 12.
            a: BigUint::from(47u32),
            b: BigUint::from(12u32),
            frac: frac_bits,
            dot: false,
        },
        TaskName::Sqrt => TaskSeed::Sqrt {
            // 42.25 at one input fraction bit pair: 169 / 4.
            m: BigUint::from(169u32),
            frac: 1,
            dot: false,
        },
        TaskName::Rational => TaskSeed::Rational {
            p: BigUint::from(1u32),
            q: BigUint::from(3u32),
            max_bits,
        },
        TaskName::Adder => {
            return Ok(adder_row(&[0, 1, 0, 1], &[0, 0, 1, 1], false)?);
        }
        TaskName::Pi => {
            if frac_bits < 2 {
                bail!("--frac-bits must be at least 2 for pi");
            }
            let tileset = build_pi_tileset(frac_bits);
            // The pi set is a union over every stage; it has no single demo
            // seed, so export the tile set alone.
            return Ok(TaskSetup {
                tileset,
                seed: tilecalc_core::SeedConfiguration::new(),
                width: 0,
                levels: 0,
                int_bits: 0,
            });
        }
    };
    Ok(seed_row(&seed)?)
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    set_step_cap(cli.max_steps);
    match cli.command {
        Command::Divide {
            a,
            b,
            frac_bits,
            dot,
            trace,
        } => {
            let a = parse_number(&a, "dividend")?;
            let b = parse_number(&b, "divisor")?;
            let (value, run) = divide_decimal_marked(&a, &b, frac_bits, dot)?;
            emit(&value, &run, trace.as_deref())?;
        }
        Command::Sqrt {
            v,
            frac_bits,
            dot,
            trace,
        } => {
            let v = parse_number(&v, "radicand")?;
            let (value, run) = sqrt_assembly_marked(&v, frac_bits, dot)?;
            emit(&value, &run, trace.as_deref())?;
        }
        Command::Rational {
            p,
            q,
            max_bits,
            trace,
        } => {
            let p = parse_integer(&p, "numerator")?;
            let q = parse_integer(&q, "denominator")?;
            let (expansion, run) = rational_expand(&p, &q, max_bits)?;
            let digits: String = expansion.digits.iter().map(|d| (d + b'0') as char).collect();
            let tail = if expansion.terminated {
                "terminates".to_string()
            } else {
                match expansion.period {
                    Some((0, len)) => format!("period={len}"),
                    Some((start, len)) => format!("period={len} start={start}"),
                    None => format!("period undetected within {max_bits} bits"),
                }
            };
            println!("0.{digits}b {tail} steps={}", run.steps());
            if let Some(path) = trace {
                write_trace(&path, &run)?;
            }
        }
        Command::Pi {
            terms,
            frac_bits,
            trace,
        } => {
            let (value, run) = compute_pi(terms, frac_bits)?;
            emit(&value, &run, trace.as_deref())?;
        }
        Command::Tiles {
            task,
            export,
            xgrow,
            bits,
            frac_bits,
            max_bits,
        } => {
            let setup = demo_setup(task, bits, frac_bits, max_bits)?;
            let doc = if xgrow {
                export_xgrow(&setup.tileset)?
            } else if setup.seed.is_empty() {
                serialize(&setup.tileset, None)?
            } else {
                serialize(&setup.tileset, Some(&setup.seed))?
            };
            fs::write(&export, doc).with_context(|| format!("writing {}", export.display()))?;
            println!("wrote {}: {} tiles", export.display(), setup.tileset.len());
        }
        Command::Validate { file } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let doc = parse_document(&text)?;
            let report = validate_determinism(&doc.tileset);
            if !report.is_empty() {
                println!("{report}");
                let conflicts =
                    report.south_west.len() + report.south_east.len() + report.solo.len();
                bail!("tile set failed determinism validation ({conflicts} conflicts)");
            }
            if !doc.trace.is_empty() {
                let seed = doc
                    .seed
                    .as_ref()
                    .context("document has steps but no seed to replay them from")?;
                replay(seed, &doc.trace, &doc.tileset).context("replaying recorded steps")?;
            }
            println!(
                "ok: {} tiles, {} steps, deterministic",
                doc.tileset.len(),
                doc.trace.len()
            );
        }
        Command::Render {
            file,
            format,
            output,
        } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let doc = parse_document(&text)?;
            let seed = doc
                .seed
                .as_ref()
                .context("document has no seed placements to draw")?;
            let assembly = if doc.trace.is_empty() {
                Assembly::new_from_seed(seed, &doc.tileset)?
            } else {
                replay(seed, &doc.trace, &doc.tileset).context("replaying recorded steps")?
            };
            let drawn = match format {
                RenderFormat::Ascii => render_ascii(&assembly, &doc.tileset),
                RenderFormat::Svg => render_svg(&assembly, &doc.tileset),
            };
            match output {
                Some(path) => {
                    fs::write(&path, drawn)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!("wrote {}", path.display());
                }
                None => print!("{drawn}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("tilecalc: {err:#}");
            ExitCode::FAILURE
        }
    }
}
