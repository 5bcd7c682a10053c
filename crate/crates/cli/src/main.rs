//! Command-line front door: construct, verify, enumerate, and emit spectrum
//! plot data and interval tables for flat maximal antichains.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use flatmac::antichain::check_maximal_flat;
use flatmac::cascade::{squashed_is_maximal, squashed_size};
use flatmac::counting::binomial;
use flatmac::document::AntichainDocument;
use flatmac::error::Error;
use flatmac::oracle::{enumerate_flat_spectrum, enumerate_tgraph_spectrum};
use flatmac::planner::{
    construct_in_level, construct_main, constructive_sizes, replay, table_interval,
};

#[derive(Parser)]
#[command(name = "flatmac", version, about = "flat maximal antichain toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Constructive,
    Exhaustive,
}

#[derive(Subcommand)]
enum Command {
    /// Build a maximal flat antichain of an exact size.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        size: u64,
        /// Force a specific lower level instead of the automatic choice.
        #[arg(long)]
        level: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reserved; constructions are deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-verify a stored antichain document.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Achievable sizes for one level pair.
    Spectrum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        level: u32,
        #[arg(long, value_enum, default_value = "constructive")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the graph sweep against the level sweep (tiny n).
    TgraphSpectrum {
        #[arg(long)]
        n: u32,
    },
    /// Reference interval tables.
    Table {
        #[arg(long)]
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV plot data: squashed sizes (dots) and constructed sizes (segments).
    Plot {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit codes: 1 = target size not constructible, 2 = invalid arguments,
/// 3 = verification failure.
fn exit_for(err: &Error) -> u8 {
    match err {
        Error::OutOfTheoremRange { .. }
        | Error::OutOfLevelRange { .. }
        | Error::OutOfLargeRange { .. }
        | Error::OutOfSmallRange { .. }
        | Error::OutOfBaseInterval { .. }
        | Error::OutOfTopRow { .. } => 1,
        Error::VerificationFailed(_) => 3,
        _ => 2,
    }
}

fn emit(path: &Option<PathBuf>, payload: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, payload),
        None => {
            std::io::stdout().write_all(payload.as_bytes())?;
            Ok(())
        }
    }
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Construct { n, size, level, format, out, seed: _ } => {
            let (antichain, trace) = match level {
                Some(l) => construct_in_level(n, l, size),
                None => construct_main(n, size),
            }
            .map_err(|e| {
                let code = exit_for(&e);
                let mut msg = e.to_string();
                if code == 1 {
                    match flatmac::characterize::is_flat_mac_size(n, size) {
                        Ok(true) => msg.push_str(
                            "; the size is realized by some flat maximal antichain \
                             outside the constructive scope",
                        ),
                        Ok(false) => msg.push_str(
                            "; no flat maximal antichain of this size exists",
                        ),
                        Err(_) => {}
                    }
                }
                (code, msg)
            })?;
            let report = check_maximal_flat(&antichain);
            if !report.is_maximal || report.size != size {
                return Err((3, format!("internal verification failure: {report:?}")));
            }
            let doc = AntichainDocument::from_antichain(&antichain, Some(&trace));
            let payload = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&doc)
                        .map_err(|e| (3, e.to_string()))?;
                    s.push('\n');
                    s
                }
                Format::Text => doc.to_text(),
                Format::Csv => return Err((2, "construct emits json or text".into())),
            };
            emit(&out, &payload).map_err(|e| (3, e.to_string()))?;
            Ok(())
        }
        Command::Verify { input } => {
            let raw = std::fs::read_to_string(&input).map_err(|e| (2, e.to_string()))?;
            let doc: AntichainDocument = if raw.trim_start().starts_with('{') {
                serde_json::from_str(&raw).map_err(|e| (2, e.to_string()))?
            } else {
                AntichainDocument::from_text(&raw).map_err(|e| (2, e.to_string()))?
            };
            let antichain = doc.to_antichain().map_err(|e| (3, e.to_string()))?;
            let report = check_maximal_flat(&antichain);
            if !report.is_antichain {
                return Err((3, "not an antichain".into()));
            }
            if !report.is_maximal {
                return Err((
                    3,
                    format!("not maximal; addable witness {:?}", report.witness.unwrap()),
                ));
            }
            if let Some(trace) = &doc.trace {
                let replayed = replay(trace).map_err(|e| (3, e.to_string()))?;
                if replayed != antichain {
                    return Err((3, "trace replay differs from listed sets".into()));
                }
            }
            println!(
                "verified: maximal flat antichain, n={} levels=[{},{}] size={}",
                doc.n, doc.levels[0], doc.levels[1], report.size
            );
            Ok(())
        }
        Command::Spectrum { n, level, mode, format, out } => {
            let (sizes, explored) = match mode {
                Mode::Constructive => (
                    constructive_sizes(n, level)
                        .map_err(|e| (exit_for(&e), e.to_string()))?,
                    None,
                ),
                Mode::Exhaustive => {
                    let s = enumerate_flat_spectrum(n, level)
                        .map_err(|e| (exit_for(&e), e.to_string()))?;
                    (s.sizes, Some(s.count_explored))
                }
            };
            let payload = match format {
                Format::Json => {
                    let mode_name = match mode {
                        Mode::Constructive => "constructive",
                        Mode::Exhaustive => "exhaustive",
                    };
                    let mut v = serde_json::json!({
                        "n": n,
                        "level": level,
                        "mode": mode_name,
                        "sizes": sizes,
                    });
                    if let Some(states) = explored {
                        v["explored"] = serde_json::json!(states);
                    }
                    format!("{v}\n")
                }
                Format::Text | Format::Csv => {
                    let mut s = String::new();
                    for m in &sizes {
                        s.push_str(&m.to_string());
                        s.push('\n');
                    }
                    s
                }
            };
            emit(&out, &payload).map_err(|e| (3, e.to_string()))?;
            Ok(())
        }
        Command::TgraphSpectrum { n } => {
            let s = enumerate_tgraph_spectrum(n).map_err(|e| (exit_for(&e), e.to_string()))?;
            let v = serde_json::json!({
                "n": n,
                "sizes": s.sizes,
                "explored": s.count_explored,
            });
            println!("{v}");
            Ok(())
        }
        Command::Table { id, out } => {
            if id != "prop-large-flat" {
                return Err((2, format!("unknown table id {id:?}")));
            }
            let mut payload = String::from("n S(n,2) S(n,3) S(n,4)\n");
            for n in 8..=14u32 {
                payload.push_str(&n.to_string());
                for l in [2u32, 3, 4] {
                    match table_interval(n, l) {
                        Ok(iv) => payload.push_str(&format!(" [{},{}]", iv.lo, iv.hi)),
                        Err(_) => payload.push_str(" --"),
                    }
                }
                payload.push('\n');
            }
            emit(&out, &payload).map_err(|e| (3, e.to_string()))?;
            Ok(())
        }
        Command::Plot { n, level, out } => {
            let mut payload = String::from("t,size,kind\n");
            for t in 0..=binomial(n, level + 1) {
                if squashed_is_maximal(n, level, t).map_err(|e| (2, e.to_string()))? {
                    let m = squashed_size(n, level, t).map_err(|e| (2, e.to_string()))?;
                    payload.push_str(&format!("{t},{m},squashed\n"));
                }
            }
            let sizes =
                constructive_sizes(n, level).map_err(|e| (exit_for(&e), e.to_string()))?;
            for m in sizes {
                let (a, _) =
                    construct_in_level(n, level, m).map_err(|e| (3, e.to_string()))?;
                payload.push_str(&format!("{},{m},constructed\n", a.upper().len()));
            }
            emit(&out, &payload).map_err(|e| (3, e.to_string()))?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
