//! Thin command-line front end over the groupchain library.
//!
//! Exit codes: 0 success/certified, 2 parse error, 3 internal invariant
//! breach, 4 unsupported input, 5 certificate has uncertified steps,
//! 6 certificate refuted.

use clap::{Parser, Subcommand, ValueEnum};
use groupchain::{
    chain_difference, chain_ratio, check_cd_bound, check_cr_bound, check_simple_cd_bound,
    check_ss_cd_bound, depth, length, max_length_chain, min_chain, parse, tables,
    ChainCertificate, ChainVerdict, Characteristic, CheckReport, Error, Family, GroupDescriptor,
    MaxSubDb, SimpleType,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::process::ExitCode;

const SCHEMA: &str = "groupchain/v1";

const EXIT_PARSE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;
const EXIT_UNCERTIFIED: u8 = 5;
const EXIT_REFUTED: u8 = 6;

#[derive(Parser)]
#[command(name = "groupchain", version, about = "Length/depth invariants and unrefinable-chain certificates for connected algebraic groups")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute dim, length, depth, chain difference and chain ratio.
    Invariants {
        /// Group descriptor, e.g. "E8" or "U6 A2 A1 T1".
        expr: String,
        /// Characteristic: 0 or a prime.
        #[arg(long = "char")]
        characteristic: u64,
    },
    /// Reproduce a depth table from the engine.
    Table {
        #[arg(value_enum)]
        name: TableName,
    },
    /// Emit a longest or shortest-known unrefinable chain certificate.
    Chain {
        expr: String,
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(long, conflicts_with = "shortest")]
        longest: bool,
        #[arg(long)]
        shortest: bool,
        /// Write the certificate to this file instead of stdout.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
    },
    /// Verify a chain certificate file.
    Verify { path: std::path::PathBuf },
    /// Run a bound sweep and report Holds/Inconclusive/Violated counts.
    Sweep {
        #[arg(value_enum)]
        bound: BoundName,
        /// Largest rank of simple types included.
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
        /// Characteristics to sweep (0 means characteristic zero).
        #[arg(long, value_delimiter = ',', default_values_t = vec![0u64, 2, 3, 5, 7, 11, 13, 17, 19, 23])]
        chars: Vec<u64>,
        /// Randomized sample count (length-half-dim sweep).
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// RNG seed for randomized sweeps.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    DepthLowrank,
    DepthExceptional,
    DepthChar0,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundName {
    CdBound,
    SimpleCd,
    SsCd,
    Cr,
    LengthHalfDim,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify(&e))
        }
    }
}

fn classify(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownType { .. }
        | Error::RankTooLarge(_)
        | Error::BadCharacteristic(_) => EXIT_PARSE,
        Error::NotCurated(..) | Error::Incomplete(..) | Error::TrivialGroup(_) => EXIT_UNSUPPORTED,
        Error::Structural { .. } => EXIT_PARSE,
        Error::Domain(msg) if msg.starts_with("internal invariant breach") => EXIT_INTERNAL,
        Error::Domain(_) | Error::Io(_) => EXIT_UNSUPPORTED,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Invariants {
            expr,
            characteristic,
        } => cmd_invariants(expr, *characteristic, cli.json),
        Command::Table { name } => cmd_table(*name, cli.json),
        Command::Chain {
            expr,
            characteristic,
            longest,
            shortest,
            output,
        } => cmd_chain(expr, *characteristic, *longest, *shortest, output.as_deref(), cli.json),
        Command::Verify { path } => cmd_verify(path, cli.json),
        Command::Sweep {
            bound,
            max_rank,
            chars,
            samples,
            seed,
        } => cmd_sweep(*bound, *max_rank, chars, *samples, *seed, cli.json),
    }
}

fn cmd_invariants(expr: &str, ch: u64, as_json: bool) -> Result<ExitCode, Error> {
    let g = parse(expr)?;
    let c = Characteristic::new(ch)?;
    let l = length(&g);
    let d = depth(&g, c)?;
    let cd = if g.is_trivial() {
        None
    } else {
        Some(chain_difference(&g, c)?)
    };
    let cr = if g.is_trivial() {
        None
    } else {
        Some(chain_ratio(&g, c)?)
    };
    if as_json {
        let out = json!({
            "schema": SCHEMA,
            "descriptor": g.render(),
            "characteristic": ch,
            "dim": g.dim(),
            "length": l,
            "depth": { "lower": d.lower, "upper": d.upper, "exact": d.is_exact() },
            "chain_difference": cd.map(|i| json!({ "lower": i.lo, "upper": i.hi })),
            "chain_ratio": cr.map(|r| json!({
                "lower": [r.lo.numer(), r.lo.denom()],
                "upper": [r.hi.numer(), r.hi.denom()],
            })),
        });
        println!("{out}");
    } else {
        println!("group: {}", g.render());
        println!("characteristic: {c}");
        println!("dim = {}", g.dim());
        println!("l = {l}");
        if d.is_exact() {
            println!("depth = {}", d.lower);
        } else {
            println!("depth in [{}, {}]", d.lower, d.upper);
        }
        if let Some(i) = cd {
            if i.lo == i.hi {
                println!("cd = {}", i.lo);
            } else {
                println!("cd in [{}, {}]", i.lo, i.hi);
            }
        }
        if let Some(r) = cr {
            if r.lo == r.hi {
                println!("cr = {}", r.lo);
            } else {
                println!("cr in [{}, {}]", r.lo, r.hi);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(name: TableName, as_json: bool) -> Result<ExitCode, Error> {
    let db = MaxSubDb::builtin();
    // Cross-check every cell against the independent search wherever the
    // database is complete; an inconsistency is an internal breach.
    let crosscheck = |cells: &[(u64, SimpleType, u64)]| -> Result<(), Error> {
        for &(p, t, v) in cells {
            if let Ok(found) = db.depth_bruteforce(t, Characteristic::Prime(p)) {
                if found != v {
                    return Err(Error::Domain(format!(
                        "internal invariant breach: search gives {found} for {t} at p={p}, table says {v}"
                    )));
                }
            }
        }
        Ok(())
    };
    match name {
        TableName::DepthLowrank | TableName::DepthExceptional => {
            let cells = match name {
                TableName::DepthLowrank => tables::lowrank_table_cells(),
                _ => tables::exceptional_table_cells(),
            };
            crosscheck(&cells)?;
            if as_json {
                let rows: Vec<_> = cells
                    .iter()
                    .map(|(p, t, v)| json!({ "p": p, "type": t.to_string(), "depth": v }))
                    .collect();
                println!("{}", json!({ "schema": SCHEMA, "cells": rows }));
            } else {
                let mut current_p = 0;
                for (p, t, v) in cells {
                    if p != current_p {
                        if current_p != 0 {
                            println!();
                        }
                        print!("p={p}:");
                        current_p = p;
                    }
                    print!("  {t}:{v}");
                }
                println!();
            }
        }
        TableName::DepthChar0 => {
            // The characteristic-zero case list, shown on representatives.
            let mut rows: Vec<(String, u64)> = Vec::new();
            let reps: &[(&str, Family, u32)] = &[
                ("A1", Family::A, 1),
                ("A2", Family::A, 2),
                ("A3", Family::A, 3),
                ("A6", Family::A, 6),
                ("B2", Family::B, 2),
                ("B3", Family::B, 3),
                ("B4", Family::B, 4),
                ("C3", Family::C, 3),
                ("D4", Family::D, 4),
                ("D9", Family::D, 9),
                ("G2", Family::G, 2),
                ("F4", Family::F, 4),
                ("E6", Family::E, 6),
                ("E7", Family::E, 7),
                ("E8", Family::E, 8),
            ];
            for &(name, f, r) in reps {
                let t = SimpleType::new(f, r).unwrap();
                rows.push((name.to_string(), tables::depth_char0(t)));
            }
            if as_json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(n, v)| json!({ "type": n, "depth": v }))
                    .collect();
                println!("{}", json!({ "schema": SCHEMA, "char0": items }));
            } else {
                for (n, v) in rows {
                    println!("{n}: {v}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_chain(
    expr: &str,
    ch: u64,
    longest: bool,
    shortest: bool,
    output: Option<&std::path::Path>,
    as_json: bool,
) -> Result<ExitCode, Error> {
    if longest == shortest {
        return Err(Error::Domain(
            "pass exactly one of --longest / --shortest".into(),
        ));
    }
    let g = parse(expr)?;
    if g.is_trivial() {
        return Err(Error::TrivialGroup("chain"));
    }
    let c = Characteristic::new(ch)?;
    let (cert, optimal) = if longest {
        (max_length_chain(&g, c)?, true)
    } else {
        let d = depth(&g, c)?;
        (min_chain(&g, c)?, d.is_exact())
    };
    let text = cert.serialize();
    if let Some(path) = output {
        std::fs::write(path, &text).map_err(|e| Error::Io(e.to_string()))?;
    }
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "length": cert.length_of(),
                "known_optimal": optimal,
                "certificate": text,
            })
        );
    } else {
        println!(
            "length {} ({})",
            cert.length_of(),
            if longest {
                "maximal"
            } else if optimal {
                "known-optimal"
            } else {
                "upper bound"
            }
        );
        if output.is_none() {
            print!("{text}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(path: &std::path::Path, as_json: bool) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
    let cert = ChainCertificate::parse(&text)?;
    let report = cert.verify(MaxSubDb::builtin());
    let (word, code) = match &report.verdict {
        ChainVerdict::Verified => ("certified", ExitCode::SUCCESS),
        ChainVerdict::Unverifiable { .. } => ("uncertifiable", ExitCode::from(EXIT_UNCERTIFIED)),
        ChainVerdict::Refuted { .. } => ("refuted", ExitCode::from(EXIT_REFUTED)),
    };
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "verdict": word,
                "detail": serde_json::to_value(&report.verdict).unwrap(),
                "steps": cert.length_of(),
            })
        );
    } else {
        match &report.verdict {
            ChainVerdict::Verified => {
                println!("certified: all {} steps maximal", cert.length_of())
            }
            ChainVerdict::Unverifiable { uncertified } => {
                println!("uncertifiable: no witness for steps {uncertified:?}")
            }
            ChainVerdict::Refuted {
                index,
                intermediate,
            } => println!(
                "refuted: step {index} is refinable through {}",
                intermediate.render()
            ),
        }
    }
    Ok(code)
}

fn all_simple_types(max_rank: u32) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = SimpleType::new(f, r) {
                out.push(t);
            }
        }
    }
    out
}

struct SweepTally {
    holds: u64,
    inconclusive: u64,
    violated: Vec<String>,
}

impl SweepTally {
    fn new() -> SweepTally {
        SweepTally {
            holds: 0,
            inconclusive: 0,
            violated: Vec::new(),
        }
    }

    fn add(&mut self, label: String, report: CheckReport) {
        match report {
            CheckReport::Holds => self.holds += 1,
            CheckReport::Inconclusive { .. } => self.inconclusive += 1,
            CheckReport::Violated { detail } => self.violated.push(format!("{label}: {detail}")),
        }
    }
}

fn cmd_sweep(
    bound: BoundName,
    max_rank: u32,
    chars: &[u64],
    samples: u64,
    seed: u64,
    as_json: bool,
) -> Result<ExitCode, Error> {
    let chars: Vec<Characteristic> = chars
        .iter()
        .map(|&n| Characteristic::new(n))
        .collect::<Result<_, _>>()?;
    let mut tally = SweepTally::new();
    match bound {
        BoundName::CdBound => {
            for t in all_simple_types(max_rank) {
                for &c in &chars {
                    let g = GroupDescriptor::simple(t);
                    tally.add(format!("{t}@{c}"), check_cd_bound(&g, c)?);
                }
            }
        }
        BoundName::SimpleCd => {
            for t in all_simple_types(max_rank) {
                for &c in &chars {
                    tally.add(format!("{t}@{c}"), check_simple_cd_bound(t, c)?);
                }
            }
        }
        BoundName::SsCd => {
            for t in all_simple_types(max_rank.min(2)) {
                for k in 2..=6 {
                    for &c in &chars {
                        tally.add(format!("{t}^{k}@{c}"), check_ss_cd_bound(t, k, c)?);
                    }
                }
            }
        }
        BoundName::Cr => {
            for t in all_simple_types(max_rank) {
                tally.add(format!("{t}@0"), check_cr_bound(t, Characteristic::Zero)?);
            }
        }
        BoundName::LengthHalfDim => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..samples {
                let g = random_descriptor(&mut rng);
                let ok_len = g.is_trivial() || 2 * length(&g) > g.dim();
                let all_a1 = g.factors().iter().all(|t| t.rank() == 1);
                let ok_eq = groupchain::length_equals_dim(&g) == all_a1;
                let report = if ok_len && ok_eq {
                    CheckReport::Holds
                } else {
                    CheckReport::Violated {
                        detail: format!("sample {i}: {}", g.render()),
                    }
                };
                tally.add(format!("sample{i}"), report);
            }
        }
    }
    let ok = tally.violated.is_empty();
    if as_json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "holds": tally.holds,
                "inconclusive": tally.inconclusive,
                "violated": tally.violated,
            })
        );
    } else {
        println!(
            "holds: {}  inconclusive: {}  violated: {}",
            tally.holds,
            tally.inconclusive,
            tally.violated.len()
        );
        for v in &tally.violated {
            println!("VIOLATED {v}");
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INTERNAL)
    })
}

fn random_descriptor(rng: &mut ChaCha8Rng) -> GroupDescriptor {
    let u = rng.gen_range(0..=50);
    let z = rng.gen_range(0..=50);
    let nf = rng.gen_range(0..=6);
    let mut factors = Vec::new();
    for _ in 0..nf {
        loop {
            let f = match rng.gen_range(0..7) {
                0 => Family::A,
                1 => Family::B,
                2 => Family::C,
                3 => Family::D,
                4 => Family::E,
                5 => Family::F,
                _ => Family::G,
            };
            let r = rng.gen_range(1..=12);
            if let Ok(t) = SimpleType::new(f, r) {
                factors.push(t);
                break;
            }
        }
    }
    GroupDescriptor::new(u, z, factors)
}
