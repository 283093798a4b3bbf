//! Command-line surface for the rstirling library: exact evaluation of
//! the combinatorial quantities, triangle export, polynomial-family
//! printing, and identity verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use rstirling::bell::{complete_bell, p_number};
use rstirling::exact::Rational;
use rstirling::poly::Poly;
use rstirling::registry::{Profile, Registry, VerificationReport};
use rstirling::special::{
    bernoulli_number, bernoulli_poly, higher_bernoulli, hyper_sum, hyperharmonic_poly,
    hyperharmonic_poly_shifted, power_sum_poly, q_poly, r_bar_poly, r_poly,
};
use rstirling::stirling::{
    harmonic, hyperharmonic, r_stirling1, stirling1, stirling2, triangle_delimited,
    triangle_json, HarmonicSpec, TriangleFamily,
};

#[derive(Parser)]
#[command(
    name = "rstirling",
    version,
    about = "Exact r-Stirling numbers, hyperharmonic and Bell polynomials, Bernoulli numbers, \
             hyper-sums, and a verified catalogue of the identities connecting them"
)]
struct Cli {
    /// Output format for data payloads.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print run metadata (timing) to stderr.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a named quantity at the given indices, exactly.
    ///
    /// Quantities and their keys: r-stirling (n,k,r); stirling1 (n,k);
    /// stirling2 (n,k); harmonic (j,k,r); hyperharmonic (n,r);
    /// bernoulli (k); higher-bernoulli (k,i); p-number (i,j,r);
    /// hyper-sum (k,m,n); complete-bell (n,args=x1,x2,...).
    Eval {
        /// Quantity name.
        quantity: String,
        /// key=value index arguments.
        #[arg(value_name = "KEY=VALUE")]
        args: Vec<String>,
    },
    /// Print a triangle of stirling1, stirling2 or r-stirling1 numbers.
    Table {
        /// Triangle family: stirling1, stirling2 or r-stirling1.
        family: String,
        /// nmax=N (required) and r=R (r-stirling1 shift, default 0).
        #[arg(value_name = "KEY=VALUE")]
        args: Vec<String>,
    },
    /// Print a member of a named polynomial family.
    ///
    /// family=R|R-bar|q (needs m,i), hyperharmonic|hyperharmonic-shifted
    /// (needs j), bernoulli|power-sum (needs k).
    Poly {
        #[arg(value_name = "KEY=VALUE")]
        args: Vec<String>,
    },
    /// Verify one identity (or "all") by exhaustive exact sweep.
    Verify {
        /// Identity id, or "all" for the whole catalogue.
        id: String,
        /// Built-in profile (smoke, desk, deep) or a config-file path.
        #[arg(long, default_value = "desk")]
        profile: String,
    },
    /// List the registered identity ids.
    ListIdentities,
    /// Show the whole catalogue: id, statement, parameters, comparison.
    Audit,
}

enum CmdError {
    Usage(String),
    VerificationFailed,
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let verbose = cli.verbose;
    let result = run(cli);
    if verbose {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::VerificationFailed) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Eval { quantity, args } => cmd_eval(&quantity, &args, cli.format),
        Command::Table { family, args } => cmd_table(&family, &args, cli.format),
        Command::Poly { args } => cmd_poly(&args, cli.format),
        Command::Verify { id, profile } => cmd_verify(&id, &profile, cli.format),
        Command::ListIdentities => cmd_list(cli.format),
        Command::Audit => cmd_audit(cli.format),
    }
}

/// Splits `key=value` arguments into a map, rejecting duplicates.
fn parse_kv(args: &[String]) -> Result<BTreeMap<String, String>, CmdError> {
    let mut map = BTreeMap::new();
    for a in args {
        let (k, v) = a
            .split_once('=')
            .ok_or_else(|| usage(format!("expected key=value argument, got `{a}`")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(usage(format!("duplicate argument key `{k}`")));
        }
    }
    Ok(map)
}

fn take_index(map: &mut BTreeMap<String, String>, key: &str) -> Result<usize, CmdError> {
    let raw = map
        .remove(key)
        .ok_or_else(|| usage(format!("missing required argument {key}=<nonnegative integer>")))?;
    raw.parse()
        .map_err(|_| usage(format!("argument {key} must be a nonnegative integer, got `{raw}`")))
}

fn take_index_or(
    map: &mut BTreeMap<String, String>,
    key: &str,
    default: usize,
) -> Result<usize, CmdError> {
    match map.remove(key) {
        None => Ok(default),
        Some(raw) => raw.parse().map_err(|_| {
            usage(format!("argument {key} must be a nonnegative integer, got `{raw}`"))
        }),
    }
}

fn ensure_consumed(map: &BTreeMap<String, String>) -> Result<(), CmdError> {
    if map.is_empty() {
        Ok(())
    } else {
        let keys: Vec<&str> = map.keys().map(String::as_str).collect();
        Err(usage(format!("unknown argument(s): {}", keys.join(", "))))
    }
}

fn print_value(
    quantity: &str,
    args_desc: &[(String, String)],
    value: &str,
    format: Format,
) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let args: serde_json::Map<String, serde_json::Value> = args_desc
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                .collect();
            let payload = serde_json::json!({
                "quantity": quantity,
                "args": args,
                "value": value,
            });
            println!("{payload}");
        }
        Format::Csv => {
            let args: Vec<String> = args_desc.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("{quantity},{},{value}", args.join(" "));
        }
    }
}

fn cmd_eval(quantity: &str, raw: &[String], format: Format) -> Result<(), CmdError> {
    let mut map = parse_kv(raw)?;
    let mut desc: Vec<(String, String)> = Vec::new();
    let idx = |map: &mut BTreeMap<String, String>,
                   desc: &mut Vec<(String, String)>,
                   key: &str|
     -> Result<usize, CmdError> {
        let v = take_index(map, key)?;
        desc.push((key.to_string(), v.to_string()));
        Ok(v)
    };

    let value: String = match quantity {
        "r-stirling" => {
            let n = idx(&mut map, &mut desc, "n")?;
            let k = idx(&mut map, &mut desc, "k")?;
            let r = idx(&mut map, &mut desc, "r")?;
            ensure_consumed(&map)?;
            r_stirling1(n, k, r).to_string()
        }
        "stirling1" => {
            let n = idx(&mut map, &mut desc, "n")?;
            let k = idx(&mut map, &mut desc, "k")?;
            ensure_consumed(&map)?;
            stirling1(n, k).to_string()
        }
        "stirling2" => {
            let n = idx(&mut map, &mut desc, "n")?;
            let k = idx(&mut map, &mut desc, "k")?;
            ensure_consumed(&map)?;
            stirling2(n, k).to_string()
        }
        "harmonic" => {
            let j = idx(&mut map, &mut desc, "j")?;
            let k = idx(&mut map, &mut desc, "k")?;
            let r = idx(&mut map, &mut desc, "r")?;
            ensure_consumed(&map)?;
            if k < 1 {
                return Err(usage("harmonic requires k >= 1"));
            }
            harmonic(&HarmonicSpec { j, k, r }).to_string()
        }
        "hyperharmonic" => {
            let n = idx(&mut map, &mut desc, "n")?;
            let r = idx(&mut map, &mut desc, "r")?;
            ensure_consumed(&map)?;
            hyperharmonic(n, r).to_string()
        }
        "bernoulli" => {
            let k = idx(&mut map, &mut desc, "k")?;
            ensure_consumed(&map)?;
            bernoulli_number(k).to_string()
        }
        "higher-bernoulli" => {
            let k = idx(&mut map, &mut desc, "k")?;
            let i = idx(&mut map, &mut desc, "i")?;
            ensure_consumed(&map)?;
            if i < 1 {
                return Err(usage("higher-bernoulli requires order i >= 1"));
            }
            higher_bernoulli(k, i).to_string()
        }
        "p-number" => {
            let i = idx(&mut map, &mut desc, "i")?;
            let j = idx(&mut map, &mut desc, "j")?;
            let r = idx(&mut map, &mut desc, "r")?;
            ensure_consumed(&map)?;
            p_number(i, j, r).to_string()
        }
        "hyper-sum" => {
            let k = idx(&mut map, &mut desc, "k")?;
            let m = idx(&mut map, &mut desc, "m")?;
            let n = idx(&mut map, &mut desc, "n")?;
            ensure_consumed(&map)?;
            hyper_sum(k, m, n).to_string()
        }
        "complete-bell" => {
            let n = idx(&mut map, &mut desc, "n")?;
            let raw_args = map
                .remove("args")
                .ok_or_else(|| usage("missing required argument args=<x1,x2,...>"))?;
            ensure_consumed(&map)?;
            let values: Result<Vec<Rational>, _> = raw_args
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| Rational::from_str(s.trim()))
                .collect();
            let values = values
                .map_err(|_| usage(format!("args must be rationals, got `{raw_args}`")))?;
            if values.len() < n {
                return Err(usage(format!(
                    "complete-bell requires at least n={n} argument values, got {}",
                    values.len()
                )));
            }
            desc.push(("args".to_string(), raw_args.clone()));
            complete_bell(n, &values).to_string()
        }
        other => {
            return Err(usage(format!(
                "unknown quantity `{other}` (expected one of: r-stirling, stirling1, stirling2, \
                 harmonic, hyperharmonic, bernoulli, higher-bernoulli, p-number, hyper-sum, \
                 complete-bell)"
            )))
        }
    };

    print_value(quantity, &desc, &value, format);
    Ok(())
}

fn cmd_table(family: &str, raw: &[String], format: Format) -> Result<(), CmdError> {
    let family = TriangleFamily::parse(family).ok_or_else(|| {
        usage(format!(
            "unknown table family `{family}` (expected stirling1, stirling2 or r-stirling1)"
        ))
    })?;
    let mut map = parse_kv(raw)?;
    let nmax = take_index(&mut map, "nmax")?;
    let r = take_index_or(&mut map, "r", 0)?;
    ensure_consumed(&map)?;

    match format {
        Format::Text => print!("{}", triangle_delimited(family, r, nmax, '\t')),
        Format::Csv => print!("{}", triangle_delimited(family, r, nmax, ',')),
        Format::Json => println!("{}", triangle_json(family, r, nmax)),
    }
    Ok(())
}

fn cmd_poly(raw: &[String], format: Format) -> Result<(), CmdError> {
    let mut map = parse_kv(raw)?;
    let family = map
        .remove("family")
        .ok_or_else(|| usage("missing required argument family=<name>"))?;

    let (poly, indices): (Poly, Vec<(String, String)>) = match family.as_str() {
        "R" | "R-bar" | "q" => {
            let m = take_index(&mut map, "m")?;
            let i = take_index(&mut map, "i")?;
            ensure_consumed(&map)?;
            if i > m {
                return Err(usage(format!("family {family} requires i <= m")));
            }
            let p = match family.as_str() {
                "R" => r_poly(m, i),
                "R-bar" => r_bar_poly(m, i),
                _ => q_poly(m, i),
            };
            (p, vec![("m".into(), m.to_string()), ("i".into(), i.to_string())])
        }
        "hyperharmonic" | "hyperharmonic-shifted" => {
            let j = take_index(&mut map, "j")?;
            ensure_consumed(&map)?;
            let p = if family == "hyperharmonic" {
                hyperharmonic_poly(j)
            } else {
                hyperharmonic_poly_shifted(j)
            };
            (p, vec![("j".into(), j.to_string())])
        }
        "bernoulli" | "power-sum" => {
            let k = take_index(&mut map, "k")?;
            ensure_consumed(&map)?;
            let p = if family == "bernoulli" {
                bernoulli_poly(k)
            } else {
                power_sum_poly(k)
            };
            (p, vec![("k".into(), k.to_string())])
        }
        other => {
            return Err(usage(format!(
                "unknown polynomial family `{other}` (expected R, R-bar, q, hyperharmonic, \
                 hyperharmonic-shifted, bernoulli or power-sum)"
            )))
        }
    };

    match format {
        Format::Text => println!("{poly}"),
        Format::Csv => println!("{}", poly.coeff_strings().join(",")),
        Format::Json => {
            let indices: serde_json::Map<String, serde_json::Value> = indices
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                .collect();
            let payload = serde_json::json!({
                "family": family,
                "indices": indices,
                "coefficients": poly.coeff_strings(),
            });
            println!("{payload}");
        }
    }
    Ok(())
}

fn load_profile(spec: &str) -> Result<Profile, CmdError> {
    if let Some(profile) = Profile::builtin(spec) {
        return Ok(profile);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| usage(format!("cannot read profile `{spec}`: {e}")))?;
    Profile::parse(&text).map_err(|e| usage(format!("bad profile config `{spec}`: {e}")))
}

fn emit_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Text => {
            for report in reports {
                println!("{}", report.render_text());
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(reports).unwrap());
        }
        Format::Csv => {
            for report in reports {
                let status = if report.passed { "pass" } else { "fail" };
                println!(
                    "{},{},{},{}",
                    report.id,
                    status,
                    report.cases,
                    report.failures.len()
                );
            }
        }
    }
}

fn cmd_verify(id: &str, profile_spec: &str, format: Format) -> Result<(), CmdError> {
    let profile = load_profile(profile_spec)?;
    let registry = Registry::register_all();
    let reports = if id == "all" {
        registry.verify_suite(&profile)
    } else {
        vec![registry
            .verify(id, &profile)
            .map_err(|e| usage(e.to_string()))?]
    };
    emit_reports(&reports, format);
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(CmdError::VerificationFailed)
    }
}

fn cmd_list(format: Format) -> Result<(), CmdError> {
    let registry = Registry::register_all();
    match format {
        Format::Text | Format::Csv => {
            for id in registry.ids() {
                println!("{id}");
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = registry
                .ids()
                .into_iter()
                .map(|id| {
                    let record = registry.get(id).unwrap();
                    serde_json::json!({ "id": id, "statement": record.statement })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).unwrap());
        }
    }
    Ok(())
}

fn cmd_audit(format: Format) -> Result<(), CmdError> {
    let registry = Registry::register_all();
    let audit = registry.audit();
    match format {
        Format::Text => {
            for entry in &audit {
                println!(
                    "{} [{}] ({})\n    {}",
                    entry.id,
                    entry.comparison,
                    entry.parameters.join(", "),
                    entry.statement
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&audit).unwrap()),
        Format::Csv => {
            for entry in &audit {
                println!(
                    "{},{},{}",
                    entry.id,
                    entry.comparison,
                    entry.parameters.join(" ")
                );
            }
        }
    }
    Ok(())
}
