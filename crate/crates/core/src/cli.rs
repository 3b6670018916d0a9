//! The `bmsa` command line: `decode`, `demo` and `roundtrip`.
//!
//! Exit codes: 0 success, 1 input error, 2 undecodable, 3 internal failure
//! (invariant violation, demo mismatch, oracle disagreement or a silent
//! miscorrection).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bmsa::{render_trace, StepRecord};
use crate::codes::{inject_error, AbelianCode, DecodeOutcome};
use crate::demo::{run_demo, Demo};
use crate::fixtures;
use crate::inference::{resolve, Resolution, ResolveOptions};
use crate::io::{read_json, CodeSpecFile, DecodeInput};
use crate::lattice::{ip, IndexPair, MonomialOrder};
use crate::locator::ErrorEstimate;
use crate::syndrome::SyndromeTable;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_UNDECODABLE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "bmsa", version, about = "Locator decoding of bivariate abelian codes with missing syndromes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decode a received word or a syndrome table.
    Decode(DecodeArgs),
    /// Replay a worked example and check it against its expected values.
    Demo(DemoArgs),
    /// Encode, corrupt and decode random words.
    Roundtrip(RoundtripArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Graded,
    /// Lex first, then graded.
    Auto,
}

#[derive(Debug, Clone, Args)]
pub struct DecodeFlags {
    #[arg(long, value_enum, default_value_t = OrderArg::Auto)]
    pub order: OrderArg,
    /// Use only the first order, falling back straight to the families.
    #[arg(long)]
    pub no_order_switch: bool,
    /// Also mark this cell of S(t) as unknown (relative to tau).
    #[arg(long, value_parser = parse_cell, value_name = "I,J")]
    pub mask: Option<IndexPair>,
    /// Cross-check against the brute-force decoder.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    /// Code spec (JSON).
    pub code: PathBuf,
    /// Word file `{"terms": ...}` or table file `{"tau": ..., "cells": ...}`.
    pub input: PathBuf,
    #[command(flatten)]
    pub flags: DecodeFlags,
    /// Write the step trace as JSON lines.
    #[arg(long, value_name = "PATH")]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(value_parser = parse_demo)]
    pub example: Demo,
    /// Write the step trace here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    /// Code spec (JSON); defaults to the built-in 15x15 example code.
    pub code: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Error weight; random in 0..=t when absent.
    #[arg(long)]
    pub weight: Option<usize>,
    #[command(flatten)]
    pub flags: DecodeFlags,
}

fn parse_cell(s: &str) -> Result<IndexPair, String> {
    let (a, b) = s.split_once(',').ok_or("expected I,J")?;
    let p = |x: &str| x.trim().parse::<i32>().map_err(|e| e.to_string());
    Ok(ip(p(a)?, p(b)?))
}

fn parse_demo(s: &str) -> Result<Demo, String> {
    s.parse()
}

impl DecodeFlags {
    pub fn options(&self) -> ResolveOptions {
        let orders = match self.order {
            OrderArg::Lex => vec![MonomialOrder::Lex],
            OrderArg::Graded => vec![MonomialOrder::Graded],
            OrderArg::Auto => vec![MonomialOrder::Lex, MonomialOrder::Graded],
        };
        let order_switch = !self.no_order_switch;
        ResolveOptions { orders, order_switch, exhaustive_fallback: order_switch }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Decode(a) => cmd_decode(a),
        Command::Demo(a) => cmd_demo(a),
        Command::Roundtrip(a) => cmd_roundtrip(a),
    }
}

fn write_trace(path: &Path, trace: &[StepRecord]) -> Result<(), String> {
    fs::write(path, render_trace(trace)).map_err(|e| format!("{}: {e}", path.display()))
}

fn render_error(e: &ErrorEstimate) -> String {
    let p = e.to_poly();
    if p.is_zero() {
        "0".into()
    } else {
        p.render(MonomialOrder::Lex)
    }
}

fn report_resolution(out: &mut String, r: &Resolution) {
    let _ = writeln!(out, "order = {}, route = {:?}", r.order, r.route);
    for o in &r.condition_warnings {
        let _ = writeln!(out, "warning: the {o} condition fails on this table");
    }
    for d in &r.diagnostics {
        let _ = writeln!(
            out,
            "diagnostic: {} blocked at {} ({:?}){}{}{}",
            d.order,
            d.blocked_at,
            d.class,
            d.exception.map(|t| format!(", exception {t}")).unwrap_or_default(),
            if d.candidates.is_empty() {
                String::new()
            } else {
                format!(", candidates {}", d.candidates.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            },
            if d.note.is_empty() { String::new() } else { format!(", {}", d.note) },
        );
    }
    for rec in &r.family_ledger {
        let params: Vec<String> = rec.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        let _ = writeln!(out, "candidate {}: {}", params.join(", "), rec.verdict);
    }
    let basis: Vec<String> = r.basis.iter().map(|p| p.render(r.order)).collect();
    let _ = writeln!(out, "basis = {{{}}}", basis.join(", "));
}

fn load_code(path: &Path) -> Result<AbelianCode, String> {
    read_json::<CodeSpecFile>(path).and_then(|s| s.build()).map_err(|e| e.to_string())
}

pub fn cmd_decode(args: &DecodeArgs) -> Outcome {
    let code = match load_code(&args.code) {
        Ok(c) => c,
        Err(e) => return Outcome::input_error(e),
    };
    let input: DecodeInput = match read_json(&args.input) {
        Ok(i) => i,
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = String::new();
    let opts = args.flags.options();
    let (table, received) = match input {
        DecodeInput::Word(w) => {
            let word = match w.to_poly(&code.field) {
                Ok(p) => p,
                Err(e) => return Outcome::input_error(e),
            };
            let choice = match code.choose_tau() {
                Ok(c) => c,
                Err(e) => return Outcome::input_error(e),
            };
            let _ = writeln!(
                out,
                "tau = {}, missing = [{}]",
                choice.tau,
                choice.missing.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
            );
            if !choice.alternatives.is_empty() {
                let _ = writeln!(out, "other offsets: {}", choice.alternatives.len());
            }
            (code.syndrome_table(&word, choice.tau), Some(word))
        }
        DecodeInput::Table(t) => match t.to_table(&code.field) {
            Ok(table) => (table, None),
            Err(e) => return Outcome::input_error(e),
        },
    };
    let table = match args.flags.mask {
        Some(n) => table.masked(n),
        None => table,
    };
    let result = resolve(&table, code.t, &code.alpha, &code.field, &opts);
    let mut status = EXIT_OK;
    match &result {
        Ok(r) => {
            report_resolution(&mut out, r);
            let _ = writeln!(out, "e = {}", render_error(&r.error));
            if let Some(word) = &received {
                let corrected = word.add(&r.error.to_poly(), &code.field);
                let _ = writeln!(out, "corrected = {}", render_error(&ErrorEstimate::from_poly(&corrected)));
            }
            if let Some(path) = &args.trace {
                if let Err(e) = write_trace(path, &r.trace) {
                    return Outcome::input_error(e);
                }
            }
        }
        Err(e) => {
            let _ = writeln!(out, "undecodable: {e}");
            status = EXIT_UNDECODABLE;
        }
    }
    #[cfg(feature = "slow")]
    if args.flags.oracle {
        match &received {
            Some(word) => {
                let mine = result.as_ref().ok().map(|r| r.error.clone());
                match crate::oracle::brute_decode(&code, word) {
                    Ok(e) => {
                        let agree = mine.as_ref() == Some(&e);
                        let _ = writeln!(
                            out,
                            "oracle: e = {} ({})",
                            render_error(&e),
                            if agree { "agrees" } else { "DISAGREES" }
                        );
                        if !agree {
                            status = EXIT_INTERNAL;
                        }
                    }
                    Err(e) => {
                        let _ = writeln!(out, "oracle: {e}");
                        if mine.is_some() {
                            status = EXIT_INTERNAL;
                        }
                    }
                }
            }
            None => {
                let _ = writeln!(out, "oracle: needs a word, not a table");
            }
        }
    }
    #[cfg(not(feature = "slow"))]
    if args.flags.oracle {
        return Outcome::input_error("built without the `slow` feature; --oracle is unavailable");
    }
    Outcome { code: status, stdout: out, stderr: String::new() }
}

pub fn cmd_demo(args: &DemoArgs) -> Outcome {
    let report = run_demo(args.example);
    let mut out = String::new();
    for l in &report.lines {
        out.push_str(l);
        out.push('\n');
    }
    match &args.trace {
        Some(path) => {
            if let Err(e) = write_trace(path, &report.trace) {
                return Outcome::input_error(e);
            }
        }
        None => out.push_str(&render_trace(&report.trace)),
    }
    if report.passed() {
        Outcome { code: EXIT_OK, stdout: out, stderr: String::new() }
    } else {
        let stderr = report.mismatches.iter().map(|m| format!("golden mismatch: {m}\n")).collect();
        Outcome { code: EXIT_INTERNAL, stdout: out, stderr }
    }
}

/// Tallies of a randomized run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundtripStats {
    pub trials: usize,
    pub corrected: usize,
    pub undecodable: usize,
    /// Decoded to a different error than the one injected.
    pub miscorrected: usize,
    pub routes: BTreeMap<String, usize>,
    pub exceptions: BTreeMap<String, usize>,
    pub oracle_checked: usize,
    pub oracle_agreed: usize,
}

/// Seeded encode, inject and decode loop.
pub fn roundtrip(
    code: &AbelianCode,
    trials: usize,
    seed: u64,
    weight: Option<usize>,
    mask: Option<IndexPair>,
    opts: &ResolveOptions,
    oracle: bool,
) -> Result<RoundtripStats, String> {
    let tau = code.choose_tau().map_err(|e| e.to_string())?.tau;
    let basis = code.codeword_basis().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = RoundtripStats { trials, ..Default::default() };
    for _ in 0..trials {
        let word = code.random_codeword(&basis, &mut rng);
        let w = weight.unwrap_or_else(|| rng.gen_range(0..=code.t as usize));
        let (received, truth) = inject_error(&word, w, &code.field, &mut rng);
        let outcome = match mask {
            None => code.decode(&received, tau, opts),
            Some(n) => decode_masked(code, &received, tau, n, opts),
        };
        match &outcome {
            DecodeOutcome::Corrected { error, resolution, .. } => {
                *stats.routes.entry(format!("{:?}", resolution.route).to_lowercase()).or_default() += 1;
                for d in &resolution.diagnostics {
                    if let Some(t) = d.exception {
                        *stats.exceptions.entry(t.to_string()).or_default() += 1;
                    }
                }
                if *error == truth {
                    stats.corrected += 1;
                } else {
                    stats.miscorrected += 1;
                }
            }
            DecodeOutcome::Undecodable(_) => stats.undecodable += 1,
        }
        if oracle {
            #[cfg(feature = "slow")]
            {
                stats.oracle_checked += 1;
                let brute = crate::oracle::brute_decode(code, &received).ok();
                if brute.as_ref() == outcome.error() {
                    stats.oracle_agreed += 1;
                }
            }
            #[cfg(not(feature = "slow"))]
            return Err("built without the `slow` feature; --oracle is unavailable".into());
        }
    }
    Ok(stats)
}

fn decode_masked(
    code: &AbelianCode,
    received: &crate::poly::BiPoly,
    tau: IndexPair,
    mask: IndexPair,
    opts: &ResolveOptions,
) -> DecodeOutcome {
    let table: SyndromeTable = code.syndrome_table(received, tau).masked(mask);
    match resolve(&table, code.t, &code.alpha, &code.field, opts) {
        Ok(r) => DecodeOutcome::Corrected {
            codeword: received.add(&r.error.to_poly(), &code.field),
            error: r.error.clone(),
            resolution: Box::new(r),
        },
        Err(e) => DecodeOutcome::Undecodable(e.to_string()),
    }
}

pub fn cmd_roundtrip(args: &RoundtripArgs) -> Outcome {
    let code = match &args.code {
        Some(p) => match load_code(p) {
            Ok(c) => c,
            Err(e) => return Outcome::input_error(e),
        },
        None => fixtures::example1_code(),
    };
    let opts = args.flags.options();
    let stats = match roundtrip(&code, args.trials, args.seed, args.weight, args.flags.mask, &opts, args.flags.oracle) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "trials {}, corrected {}, undecodable {}, miscorrected {}",
        stats.trials, stats.corrected, stats.undecodable, stats.miscorrected
    );
    for (k, v) in &stats.routes {
        let _ = writeln!(out, "route {k}: {v}");
    }
    for (k, v) in &stats.exceptions {
        let _ = writeln!(out, "exception {k}: {v}");
    }
    if args.flags.oracle {
        let _ = writeln!(out, "oracle agreement {}/{}", stats.oracle_agreed, stats.oracle_checked);
    }
    let within = args.weight.is_none_or(|w| w <= code.t as usize);
    let code_ = if stats.miscorrected > 0 || stats.oracle_agreed < stats.oracle_checked {
        EXIT_INTERNAL
    } else if within && stats.undecodable > 0 {
        EXIT_UNDECODABLE
    } else {
        EXIT_OK
    };
    Outcome { code: code_, stdout: out, stderr: String::new() }
}
