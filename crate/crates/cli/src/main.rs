//! `orbitlab`: classify highest weight modules from the command line.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};
use orbitlab::verify::{run_scan, verify_all, CheckKind, ScanConfig, ScanReport, DEFAULT_SEED, MAX_RANK_ENV};
use orbitlab::{
    build_lambda, classify, datum_from_lambda, gk_dimension, unitarity, ClassificationReport, Error, GroupSpec,
    HighestWeightDatum, Rational, WeightSeq,
};
use serde::Deserialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "orbitlab", version, about = "Associated and annihilator varieties of unitary highest weight modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full classification report.
    Classify(WeightArgs),
    /// Print the GK dimension.
    Gkdim(WeightArgs),
    /// Print whether the module is unitary.
    Unitary(WeightArgs),
    /// Run the grid checks for one group.
    Scan(ScanArgs),
    /// Run every check on every family up to the rank cap.
    Verify(VerifyArgs),
    /// Read one JSON request per line from stdin.
    Batch,
}

#[derive(Args)]
struct WeightArgs {
    /// Group words: `su P Q`, `sp N`, `so_star N`, `so_odd N`, `so_even N`, `e6`, `e7`.
    #[arg(required = true, num_args = 1..)]
    group: Vec<String>,
    /// Raw weight `λ`, comma separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["lambda0", "z"], required_unless_present = "lambda0")]
    lambda: Option<String>,
    /// Normalized `λ₀`, comma separated.
    #[arg(long, allow_hyphen_values = true, requires = "z")]
    lambda0: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "lambda0")]
    z: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(required = true, num_args = 1..)]
    group: Vec<String>,
    /// Bound on the free entries of `λ₀`.
    #[arg(long, default_value_t = 8)]
    max_entry: i64,
    /// Checks to run; repeatable. Defaults to the grid checks.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Comma separated `z` values replacing the default grid.
    #[arg(long, allow_hyphen_values = true)]
    z_grid: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, env = MAX_RANK_ENV, default_value_t = 6)]
    max_rank: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, env = MAX_RANK_ENV, default_value_t = 6)]
    max_rank: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Verb {
    Classify,
    Gkdim,
    Unitary,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Request {
    #[serde(default = "default_verb")]
    verb: Verb,
    group: GroupSpec,
    lambda: Option<WeightSeq>,
    lambda0: Option<WeightSeq>,
    z: Option<Rational>,
}

fn default_verb() -> Verb {
    Verb::Classify
}

fn exit_code(e: &Error) -> u8 {
    if e.is_parse() {
        2
    } else {
        1
    }
}

fn parse_group(words: &[String]) -> Result<GroupSpec, Error> {
    words.join(" ").parse()
}

fn datum(g: GroupSpec, lambda: Option<WeightSeq>, lambda0: Option<WeightSeq>, z: Option<Rational>) -> Result<HighestWeightDatum, Error> {
    match (lambda, lambda0, z) {
        (Some(l), None, None) => datum_from_lambda(g, &l),
        (None, Some(l0), Some(z)) => build_lambda(g, &l0, z),
        _ => Err(Error::Parse("give either lambda, or both lambda0 and z".into())),
    }
}

fn weight_datum(a: &WeightArgs) -> Result<(GroupSpec, HighestWeightDatum), Error> {
    let g = parse_group(&a.group)?;
    let lambda = a.lambda.as_deref().map(str::parse).transpose()?;
    let lambda0 = a.lambda0.as_deref().map(str::parse).transpose()?;
    let z = a.z.as_deref().map(str::parse).transpose()?;
    Ok((g, datum(g, lambda, lambda0, z)?))
}

fn report_text(r: &ClassificationReport) -> String {
    let mut s = format!("group       {}\n", r.group);
    if let Some(l) = &r.lambda {
        s += &format!("lambda      {l}\n");
    }
    s += &format!("lambda0     {}\nz           {}\nk           {}\n", r.lambda0, r.z, r.k);
    s += &format!("orbit       {}\n", r.orbit);
    if let Some(p) = &r.pipeline_orbit {
        s += &format!("pipeline    {p}\n");
    }
    s += &format!("gk_dim      {}\nunitary     {}\nconsistent  {}\n", r.gk_dim, r.unitary, r.consistent);
    for n in &r.notes {
        s += &format!("note: {n}\n");
    }
    s
}

fn answer(verb: Verb, g: GroupSpec, d: &HighestWeightDatum, as_json: bool) -> Result<String, Error> {
    Ok(match verb {
        Verb::Classify => {
            let r = classify(g, d)?;
            if as_json {
                serde_json::to_string(&r).expect("report serializes")
            } else {
                report_text(&r)
            }
        }
        Verb::Gkdim => {
            let v = gk_dimension(g, d)?;
            if as_json {
                json!(v).to_string()
            } else {
                format!("{v}\n")
            }
        }
        Verb::Unitary => {
            let (_, u) = unitarity(g, d)?;
            if as_json {
                json!(u).to_string()
            } else {
                format!("{u}\n")
            }
        }
    })
}

fn print_line(s: &str) {
    let mut out = io::stdout().lock();
    let _ = if s.ends_with('\n') { write!(out, "{s}") } else { writeln!(out, "{s}") };
}

fn print_scan(rep: &ScanReport, as_json: bool) {
    let group = rep.group.map(|g| g.spec_string());
    if as_json {
        let header = json!({
            "group": group,
            "seed": rep.seed,
            "inputs": rep.inputs,
            "hard_failures": rep.hard_failures(),
            "known_boundary": rep.known_boundary(),
        });
        print_line(&header.to_string());
        for d in &rep.discrepancies {
            print_line(&serde_json::to_string(d).expect("discrepancy serializes"));
        }
        return;
    }
    let name = rep.group.map(|g| g.to_string()).unwrap_or_else(|| "all families".into());
    print_line(&format!(
        "{name}: seed {}, {} inputs, {} hard failures, {} known boundary",
        rep.seed,
        rep.inputs,
        rep.hard_failures(),
        rep.known_boundary()
    ));
    for d in &rep.discrepancies {
        let sev = if d.is_hard() { "hard_failure" } else { "known_boundary" };
        print_line(&format!("{sev} {} {}: expected {}, actual {}", d.check, d.input, d.expected, d.actual));
    }
}

fn scan(a: &ScanArgs) -> Result<ScanReport, Error> {
    let g = parse_group(&a.group)?;
    if !g.is_exceptional() && g.lie_rank() > a.max_rank {
        return Err(Error::ParameterRange(format!("{g} has rank {} above the cap {}", g.lie_rank(), a.max_rank)));
    }
    let mut cfg = ScanConfig::new(g);
    cfg.max_abs_entry = a.max_entry;
    cfg.seed = a.seed;
    if !a.checks.is_empty() {
        cfg.checks = a.checks.iter().map(|c| c.parse::<CheckKind>()).collect::<Result<_, _>>()?;
    }
    if let Some(zs) = &a.z_grid {
        cfg.z_grid = Some(zs.parse::<WeightSeq>()?.entries().to_vec());
    }
    Ok(run_scan(&cfg))
}

/// Handles one batch line, returning the output line and an exit code.
fn batch_line(line: &str) -> (String, u8) {
    let req: Request = match serde_json::from_str(line) {
        Ok(r) => r,
        Err(e) => return (json!({"error": e.to_string(), "kind": "parse"}).to_string(), 2),
    };
    let res = datum(req.group, req.lambda, req.lambda0, req.z).and_then(|d| answer(req.verb, req.group, &d, true));
    match res {
        Ok(s) => (s, 0),
        Err(e) => {
            let kind = if e.is_parse() { "parse" } else { "domain" };
            (json!({"error": e.to_string(), "kind": kind}).to_string(), exit_code(&e))
        }
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    if e.is_parse() {
        eprintln!("{}", Cli::command().render_usage());
    }
    ExitCode::from(exit_code(e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(a) => run_weight(Verb::Classify, &a),
        Command::Gkdim(a) => run_weight(Verb::Gkdim, &a),
        Command::Unitary(a) => run_weight(Verb::Unitary, &a),
        Command::Scan(a) => match scan(&a) {
            Ok(rep) => {
                print_scan(&rep, a.json);
                ExitCode::from(u8::from(rep.hard_failures() > 0))
            }
            Err(e) => fail(&e),
        },
        Command::Verify(a) => {
            let rep = verify_all(a.max_rank, a.seed);
            print_scan(&rep, a.json);
            ExitCode::from(u8::from(rep.hard_failures() > 0))
        }
        Command::Batch => {
            let mut worst = 0;
            for line in io::stdin().lock().lines() {
                let line = match line {
                    Ok(l) => l,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                };
                if line.trim().is_empty() {
                    continue;
                }
                let (out, code) = batch_line(&line);
                print_line(&out);
                worst = worst.max(code);
            }
            ExitCode::from(worst)
        }
    }
}

fn run_weight(verb: Verb, a: &WeightArgs) -> ExitCode {
    match weight_datum(a).and_then(|(g, d)| answer(verb, g, &d, a.json)) {
        Ok(s) => {
            print_line(&s);
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}
