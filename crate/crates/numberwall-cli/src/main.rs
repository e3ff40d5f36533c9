//! Command-line driver for the numberwall library: sequence printing, wall
//! computation and dumps, PPM rendering, window statistics, deficiency
//! search, zero-location checks, tiling verification and power-freeness
//! scans.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error. Every run
//! prints a reproducibility line (version and a digest of the invocation)
//! to stderr; data outputs go to files or stdout and are byte-deterministic
//! for a fixed invocation. Relative `--out` paths resolve against
//! `NUMBERWALL_OUT_DIR` when that variable is set.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use numberwall::algebra::Domain;
use numberwall::analysis::{
    chi_square_test, deficiency, expected_window_density, search_max_depth, window_census,
    zero_density_estimate, zero_location_check, Region, SearchError, SearchLimits,
};
use numberwall::render::{palette_for, render_wall, PaletteMode};
use numberwall::seqgen::{parse_d0lec, power_free_check, SequenceSpec};
use numberwall::tiling;
use numberwall::wall::{dump_wall, parse_wall, wall_frame, Wall, WallInput, WallMode};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "numberwall",
    version,
    about = "Exact number walls of integer and modular sequences",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Built-in sequence: thue-morse, u, v, rook, knight, pagoda, rueppel,
    /// zigzag, thue-rook, nosquare6, nosquare4, libran
    #[arg(long, group = "source")]
    builtin: Option<String>,
    /// Explicit periodic word, e.g. 111010 (single-digit symbols)
    #[arg(long, group = "source")]
    period: Option<String>,
    /// D0LEC definition file
    #[arg(long, group = "source", value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Raw digit file: ASCII digits, whitespace ignored, # comments
    #[arg(long, group = "source", value_name = "FILE")]
    digits: Option<PathBuf>,
    /// Prime modulus for the wall domain
    #[arg(long = "mod", value_name = "P")]
    modulus: Option<u64>,
    /// Work over the integers instead of a prime field
    #[arg(long, conflicts_with = "modulus")]
    integers: bool,
    /// Seed for the libran generator
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args, Clone)]
struct WallArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Compute over a finite segment of this many terms
    #[arg(long, value_name = "LEN")]
    segment: Option<usize>,
    /// First sequence index of the segment
    #[arg(long, default_value_t = 0, value_name = "N", allow_negative_numbers = true)]
    start: i64,
    /// Number of wall rows to compute (rows 0..=M)
    #[arg(long, default_value_t = 32, value_name = "M")]
    rows: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print sequence terms
    Seq {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        start: i64,
        #[arg(long, default_value_t = 32)]
        count: usize,
    },
    /// Compute a wall and write its dump
    Wall {
        #[command(flatten)]
        wall: WallArgs,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a wall as a binary PPM image
    Render {
        #[command(flatten)]
        wall: WallArgs,
        #[arg(long, default_value = "grey", value_parser = ["grey", "rainbow"])]
        palette: String,
        #[arg(long, default_value_t = 1)]
        scale: u32,
        /// Quarter-turn presentation: the sequence runs down the left edge
        #[arg(long)]
        rotate: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Window census and chi-square randomness test
    Census {
        #[command(flatten)]
        wall: WallArgs,
        #[arg(long, allow_negative_numbers = true)]
        row0: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        row1: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        col0: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        col1: Option<i64>,
    },
    /// Depth to which a wall avoids windows of size d
    Deficiency {
        #[command(flatten)]
        wall: WallArgs,
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Exhaustive search for the deepest periodic word of deficiency d
    Search {
        #[arg(long = "mod", default_value_t = 2)]
        modulus: u64,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        max_period: usize,
        #[arg(long, default_value_t = 2_000_000)]
        max_candidates: u64,
    },
    /// Zero-location law and zero density of the ternary Pagoda wall
    Zerocheck {
        /// Rows to check (0..=M)
        #[arg(long, default_value_t = 255)]
        rows: i64,
    },
    /// Tiling subcommands
    Tiling {
        #[command(subcommand)]
        cmd: TilingCommand,
    },
    /// Scan a sequence prefix for squares or cubes
    Powerfree {
        #[command(flatten)]
        source: SourceArgs,
        /// 2 = squares, 3 = cubes
        #[arg(long, default_value_t = 2)]
        power: usize,
        /// Report only repeated words longer than this bound
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Inflate, paint and compare against the computed wall
    Verify {
        #[arg(long, default_value_t = 64)]
        radius: i64,
    },
    /// Exact asymptotic zero density from the substitution matrix
    Density,
    /// Closure, symmetry and isolated-zero audits
    Audit,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    print_repro_line(&argv);
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_repro_line(argv: &[String]) {
    let mut hasher = Sha256::new();
    for a in &argv[1..] {
        hasher.update(a.as_bytes());
        hasher.update([0x1f]);
    }
    let digest = hex::encode(&hasher.finalize()[..6]);
    eprintln!("# numberwall {} config={digest}", env!("CARGO_PKG_VERSION"));
}

/// Relative output paths resolve against NUMBERWALL_OUT_DIR when set.
fn resolve_out(path: PathBuf) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("NUMBERWALL_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path
}

fn domain_of(source: &SourceArgs) -> Result<Option<Domain>> {
    if source.integers {
        Ok(Some(Domain::Integers))
    } else if let Some(p) = source.modulus {
        Ok(Some(Domain::prime_field(p)?))
    } else {
        Ok(None)
    }
}

fn parse_digit_word(word: &str) -> Result<Vec<i64>> {
    word.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as i64)
                .ok_or_else(|| anyhow!("{c:?} is not a digit"))
        })
        .collect()
}

fn parse_digit_file(path: &PathBuf) -> Result<Vec<i64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for c in line.chars() {
            if c.is_whitespace() {
                continue;
            }
            out.push(
                c.to_digit(10)
                    .map(|d| d as i64)
                    .ok_or_else(|| anyhow!("{c:?} is not a digit"))?,
            );
        }
    }
    if out.is_empty() {
        bail!("{path:?} contains no digits");
    }
    Ok(out)
}

fn resolve_sequence(source: &SourceArgs) -> Result<SequenceSpec> {
    let domain = domain_of(source)?;
    if let Some(name) = &source.builtin {
        return Ok(SequenceSpec::builtin(name, domain, source.seed)?);
    }
    if let Some(word) = &source.period {
        let digits = parse_digit_word(word)?;
        let domain = domain.unwrap_or(Domain::Integers);
        return Ok(SequenceSpec::periodic(digits, domain)?);
    }
    if let Some(path) = &source.spec {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
        let spec = parse_d0lec(&text)?;
        return Ok(SequenceSpec::D0lec(spec));
    }
    if let Some(path) = &source.digits {
        let digits = parse_digit_file(path)?;
        let domain = domain.unwrap_or(Domain::Integers);
        return Ok(SequenceSpec::segment(digits, domain)?);
    }
    bail!("one sequence source is required: --builtin, --period, --spec or --digits");
}

/// Wall domain: an explicit --mod/--integers overrides the sequence's own.
fn wall_domain(source: &SourceArgs, spec: &SequenceSpec) -> Result<Domain> {
    Ok(domain_of(source)?.unwrap_or_else(|| spec.domain()))
}

fn build_wall(args: &WallArgs) -> Result<Wall> {
    let spec = resolve_sequence(&args.source)?;
    let domain = wall_domain(&args.source, &spec)?;
    let input = match (&spec, args.segment) {
        (SequenceSpec::PeriodicWord { digits, .. }, None) => WallInput::periodic(domain, digits)?,
        (_, segment) => {
            let len = match (&spec, segment) {
                (_, Some(len)) => len,
                (SequenceSpec::FiniteSegment { digits, .. }, None) => digits.len(),
                _ => bail!("--segment LEN is required for this source"),
            };
            let digits = spec.raw_digits(args.start, len)?;
            WallInput::from_values(
                WallMode::Segment {
                    start: args.start,
                    len,
                },
                digits.iter().map(|&d| domain.from_i64(d)).collect(),
            )?
        }
    };
    Ok(wall_frame(&input, args.rows)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Seq {
            source,
            start,
            count,
        } => {
            let spec = resolve_sequence(&source)?;
            let terms = spec.terms(start, count)?;
            let line: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            println!("{}", line.join(" "));
            Ok(ExitCode::SUCCESS)
        }

        Command::Wall { wall, out } => {
            let w = build_wall(&wall)?;
            let text = dump_wall(&w);
            // dumps parse back to the identical grid
            debug_assert!(parse_wall(&text).map(|p| p.same_grid(&w)).unwrap_or(false));
            match out.map(resolve_out) {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {path:?}"))?
                }
                None => print!("{text}"),
            }
            eprintln!(
                "# wall: domain {} rows -2..={} windows {} terminal {:?}",
                w.domain(),
                w.max_row(),
                w.windows().len(),
                w.terminal_zero_from()
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Render {
            wall,
            palette,
            scale,
            rotate,
            out,
        } => {
            let w = build_wall(&wall)?;
            let mode = if palette == "rainbow" {
                PaletteMode::Rainbow
            } else {
                PaletteMode::Grey
            };
            let image = render_wall(&w, &palette_for(&w, mode), scale, rotate);
            let out = resolve_out(out);
            fs::write(&out, image).with_context(|| format!("writing {out:?}"))?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Census {
            wall,
            row0,
            row1,
            col0,
            col1,
        } => {
            let w = build_wall(&wall)?;
            let (def_c0, def_c1) = match w.mode() {
                WallMode::Periodic { period } => (0, period as i64 - 1),
                WallMode::Segment { start, len } => (start, start + len as i64 - 1),
            };
            let region = Region::new(
                (row0.unwrap_or(0), row1.unwrap_or(w.max_row())),
                (col0.unwrap_or(def_c0), col1.unwrap_or(def_c1)),
            );
            let census = window_census(&w, region);
            println!("cells {}", census.total_entries);
            if let Some(r) = census.terminal_zero_rows {
                println!("terminal-zero-rows from {r}");
            }
            for (size, count) in &census.counts {
                let expected = match w.domain() {
                    Domain::PrimeField(p) => expected_window_density(p, *size as u32)
                        .to_f64()
                        .map(|d| d * census.total_entries as f64),
                    Domain::Integers => None,
                };
                match expected {
                    Some(e) => println!("size {size}: {count} (expected {e:.1})"),
                    None => println!("size {size}: {count}"),
                }
            }
            if let Domain::PrimeField(p) = w.domain() {
                match chi_square_test(&census, p) {
                    Ok(c) => println!(
                        "chi-square {:.2} df {} threshold {:.2} -> {}",
                        c.statistic,
                        c.degrees_of_freedom,
                        c.threshold,
                        if c.pass { "pass" } else { "fail" }
                    ),
                    Err(e) => println!("chi-square unavailable: {e}"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Deficiency { wall, d } => {
            let w = build_wall(&wall)?;
            let report = deficiency(&w, d);
            print!("depth={}", report.depth);
            if let Some(r) = report.order {
                print!(" r={r}");
            }
            if let Some(t) = report.period {
                print!(" t={t}");
            }
            println!();
            Ok(ExitCode::SUCCESS)
        }

        Command::Search {
            modulus,
            d,
            max_period,
            max_candidates,
        } => {
            let limits = SearchLimits {
                max_period,
                max_candidates,
            };
            let outcome = match search_max_depth(modulus, d, limits) {
                Ok(o) => o,
                Err(SearchError::EffortExhausted(o)) => {
                    eprintln!("# budget exhausted after {} candidates", o.visited);
                    o
                }
                Err(e) => return Err(e.into()),
            };
            let word: Vec<String> = outcome.word.iter().map(|d| d.to_string()).collect();
            println!(
                "word=[{}] depth={} visited={} exhaustive={}",
                word.join(""),
                outcome.report.depth,
                outcome.visited,
                outcome.exhaustive
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Zerocheck { rows } => {
            let radius = rows + 2;
            let wall = tiling::pagoda_wall_for_radius(radius.max(8));
            let violations = zero_location_check(&wall);
            let region = Region::new((0, rows), (-radius / 2, radius / 2));
            let density = zero_density_estimate(&wall, region);
            println!(
                "zero-location violations through row {rows}: {}",
                violations.len()
            );
            println!(
                "zero density on the central band: {density} ~ {:.4}",
                density.to_f64().unwrap_or(f64::NAN)
            );
            if violations.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                for v in violations.iter().take(10) {
                    println!("  violation at ({}, {})", v.m, v.n);
                }
                Ok(ExitCode::from(1))
            }
        }

        Command::Tiling { cmd } => run_tiling(cmd),

        Command::Powerfree {
            source,
            power,
            max_len,
            count,
        } => {
            let spec = resolve_sequence(&source)?;
            let digits = spec.raw_digits(0, count)?;
            let report = power_free_check(&digits, power, max_len);
            println!(
                "{} occurrences of {}-powers in {} terms",
                report.total, report.power, count
            );
            for occ in report.occurrences.iter().take(10) {
                println!("  position {} period {}", occ.position, occ.period);
            }
            Ok(if report.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_tiling(cmd: TilingCommand) -> Result<ExitCode> {
    match cmd {
        TilingCommand::Verify { radius } => {
            let report = tiling::verify_tiling(radius)?;
            println!(
                "seed {:?}; {} levels; {} cells checked; {} mismatches",
                report.seed,
                report.levels,
                report.cells_checked,
                report.mismatches.len()
            );
            Ok(if report.mismatches.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        TilingCommand::Density => {
            let d = tiling::markov_zero_density(tiling::pagoda_tiles())?;
            println!("asymptotic zero density = {d}");
            Ok(ExitCode::SUCCESS)
        }
        TilingCommand::Audit => {
            let tiles = tiling::pagoda_tiles();
            let refs = tiles.closure_audit()?;
            tiles.symmetry_audit()?;
            let audit = tiling::isolated_zero_audit()?;
            println!("closure: {refs} gene references resolve");
            println!("symmetry: all declared symmetries fix their tiles");
            println!(
                "isolated zeros: boundary tiles {:?}; painted violations {}",
                audit.flagged_tiles,
                audit.painted_violations.len()
            );
            let ok = audit.flagged_tiles == vec![1, 2] && audit.painted_violations.is_empty();
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
