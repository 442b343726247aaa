//! Command-line front end. Every subcommand is a thin wrapper around one
//! library operation and prints a single JSON document (`table` can emit
//! CSV instead). Exact integers and rationals are encoded as decimal
//! strings ("931", "931/4181"), certified enclosures as outward-rounded
//! "[lo, hi]" strings; nothing exact is ever converted through floating
//! point, the `*_decimal` fields are convenience copies only.
//!
//! Exit codes: 0 success, 2 usage error, 1 domain error (the library
//! error name is printed on standard error).

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use eqparts::asymptotics::{self, DEFAULT_PRECISION_BITS};
use eqparts::enumerate::{
    decreasing_parts_count_with, equal_parts_count, equal_parts_count_with,
    equal_parts_probability, equal_parts_probability_with, parts_distribution_with,
    EnumerateOptions,
};
use eqparts::interval::{rational_to_f64, Interval};
use eqparts::llt;
use eqparts::oracles;
use eqparts::partset::parse_tuple_spec;
use eqparts::sampler::{monte_carlo_pi_with, SamplerState, RNG_ALGORITHM};
use eqparts::{parse_part_spec, Error, PartSet};

/// Decimal digits used when printing interval endpoints.
const INTERVAL_DIGITS: usize = 17;

#[derive(Parser)]
#[command(
    name = "eqparts",
    version,
    about = "Exact counts, probabilities and certified asymptotics for tuples of \
             restricted integer compositions with equal numbers of parts"
)]
struct Cli {
    /// Output format; csv is accepted by the table subcommand only
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TupleArgs {
    /// Part sets, semicolon separated, e.g. "{1,2};N" or "{1,2^3};2N"
    #[arg(long)]
    parts: String,
    /// Replicates a single --parts set this many times
    #[arg(long, visible_alias = "m")]
    tuple_size: Option<u32>,
}

#[derive(Args)]
struct CapArgs {
    /// Largest accepted n (capacity guard)
    #[arg(long, default_value_t = 10_000)]
    n_max_cap: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse part sets and echo their canonical forms and basic facts
    Describe {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Accept part 0 (only meaningful for count)
        #[arg(long)]
        allow_zero_parts: bool,
    },
    /// d_n: tuples of compositions of n sharing their number of parts
    Count {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        n: u64,
        /// Accept part 0 (the shared length is capped by the other coordinates)
        #[arg(long)]
        allow_zero_parts: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// pi_n: probability that independent compositions share a length
    Prob {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Exact distribution of the number of parts of one composition
    Dist {
        /// A single part set
        #[arg(long)]
        parts: String,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Tuples whose part counts strictly decrease along the coordinates
    Decreasing {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Certified asymptotics: rho, variance constant, tuple constant C_m
    Asym {
        /// A single part set
        #[arg(long)]
        parts: String,
        /// Tuple size behind the constant C_m
        #[arg(long, visible_alias = "tuple-size", default_value_t = 2)]
        m: u32,
        #[arg(long)]
        precision_bits: Option<u64>,
        /// Also evaluate the asymptotic pi_n and P_n at this n
        #[arg(long)]
        n: Option<u64>,
    },
    /// Gaussian local-limit diagnostics for the number of parts
    Llt {
        /// A single part set
        #[arg(long)]
        parts: String,
        #[arg(long)]
        n: u64,
    },
    /// Draw weight-proportional compositions with a seeded generator
    Sample {
        /// A single part set
        #[arg(long)]
        parts: String,
        #[arg(long)]
        n: u64,
        /// Number of compositions to draw
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Monte Carlo estimate of pi_n with its binomial standard error
    Mc {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Cross-check the engine against the closed-form oracles
    Verify,
    /// Convergence table of exact versus asymptotic pi_n
    Table {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Largest n in the table
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 10)]
        n_min: u64,
        #[arg(long, default_value_t = 10)]
        step: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Domain(err)
    }
}

#[derive(Serialize)]
struct CommandResult {
    command: &'static str,
    inputs: Value,
    outputs: Value,
    elapsed_ms: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(err)) => {
            eprintln!("error [{}]: {}", err.name(), err);
            ExitCode::from(1)
        }
    }
}

fn rat(value: &BigRational) -> String {
    value.to_string()
}

fn bracket(value: &Interval) -> String {
    value.to_bracket_string(INTERVAL_DIGITS)
}

fn canonical(tuple: &[PartSet]) -> String {
    tuple
        .iter()
        .map(|set| set.spec().to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn resolve_tuple(args: &TupleArgs, allow_zero: bool) -> Result<Vec<PartSet>, Failure> {
    let tuple = parse_tuple_spec(&args.parts, allow_zero)?;
    match args.tuple_size {
        None => Ok(tuple),
        Some(0) => Err(Failure::Usage("--tuple-size must be at least 1".into())),
        Some(m) if tuple.len() == 1 => Ok(vec![tuple[0].clone(); m as usize]),
        Some(m) if tuple.len() == m as usize => Ok(tuple),
        Some(m) => Err(Failure::Usage(format!(
            "--tuple-size {m} conflicts with the {} coordinates in --parts",
            tuple.len()
        ))),
    }
}

fn single_set(text: &str) -> Result<PartSet, Failure> {
    Ok(parse_part_spec(text)?)
}

fn options(cap: &CapArgs, allow_zero_parts: bool) -> EnumerateOptions {
    EnumerateOptions {
        n_max_cap: cap.n_max_cap,
        allow_zero_parts,
    }
}

fn emit(command: &'static str, inputs: Value, outputs: Value, started: Instant) {
    let result = CommandResult {
        command,
        inputs,
        outputs,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    if cli.format == Format::Csv && !matches!(cli.command, Cmd::Table { .. }) {
        return Err(Failure::Usage(
            "--format csv is only available for the table subcommand".into(),
        ));
    }
    match cli.command {
        Cmd::Describe {
            tuple,
            allow_zero_parts,
        } => {
            let sets = resolve_tuple(&tuple, allow_zero_parts)?;
            let coordinates: Vec<Value> = sets
                .iter()
                .map(|set| {
                    json!({
                        "spec": set.spec().to_string(),
                        "is_finite": set.is_finite(),
                        "has_zero_part": set.has_zero_part(),
                        "support_gcd": set.support_gcd(),
                        "max_part": set.max_part(),
                    })
                })
                .collect();
            emit(
                "describe",
                json!({ "parts": canonical(&sets), "tuple_size": sets.len() }),
                json!({ "coordinates": coordinates }),
                started,
            );
        }
        Cmd::Count {
            tuple,
            n,
            allow_zero_parts,
            cap,
        } => {
            let sets = resolve_tuple(&tuple, allow_zero_parts)?;
            let opts = options(&cap, allow_zero_parts);
            let result = equal_parts_count_with(&sets, n, &opts)?;
            emit(
                "count",
                json!({
                    "parts": canonical(&sets),
                    "n": n,
                    "tuple_size": sets.len(),
                    "n_max_cap": cap.n_max_cap,
                }),
                json!({ "d_n": rat(&result.d_n) }),
                started,
            );
        }
        Cmd::Prob { tuple, n, cap } => {
            let sets = resolve_tuple(&tuple, false)?;
            let opts = options(&cap, false);
            let result = equal_parts_probability_with(&sets, n, &opts)?;
            let pi_n = result.pi_n.expect("probability requested");
            emit(
                "prob",
                json!({
                    "parts": canonical(&sets),
                    "n": n,
                    "tuple_size": sets.len(),
                    "n_max_cap": cap.n_max_cap,
                }),
                json!({
                    "d_n": rat(&result.d_n),
                    "pi_n": rat(&pi_n),
                    "pi_n_decimal": rational_to_f64(&pi_n),
                }),
                started,
            );
        }
        Cmd::Dist { parts, n, cap } => {
            let set = single_set(&parts)?;
            let opts = options(&cap, false);
            let dist = parts_distribution_with(&set, n, &opts)?;
            let pmf: Value = dist
                .pmf
                .iter()
                .map(|(k, p)| (k.to_string(), Value::String(rat(p))))
                .collect::<serde_json::Map<_, _>>()
                .into();
            emit(
                "dist",
                json!({
                    "parts": set.spec().to_string(),
                    "n": n,
                    "n_max_cap": cap.n_max_cap,
                }),
                json!({
                    "pmf": pmf,
                    "mean": rat(&dist.mean),
                    "mean_decimal": rational_to_f64(&dist.mean),
                    "variance": rat(&dist.variance),
                    "variance_decimal": rational_to_f64(&dist.variance),
                }),
                started,
            );
        }
        Cmd::Decreasing { tuple, n, cap } => {
            let sets = resolve_tuple(&tuple, false)?;
            let opts = options(&cap, false);
            let count = decreasing_parts_count_with(&sets, n, &opts)?;
            emit(
                "decreasing",
                json!({
                    "parts": canonical(&sets),
                    "n": n,
                    "tuple_size": sets.len(),
                    "n_max_cap": cap.n_max_cap,
                }),
                json!({ "count": rat(&count) }),
                started,
            );
        }
        Cmd::Asym {
            parts,
            m,
            precision_bits,
            n,
        } => {
            let set = single_set(&parts)?;
            let precision = precision_bits.unwrap_or(DEFAULT_PRECISION_BITS);
            let profile = asymptotics::profile(&set, precision)?;
            let mut outputs = json!({
                "rho": bracket(&profile.rho),
                "mean_coeff": bracket(&profile.mean_coeff),
                "variance_coefficient_k": bracket(&profile.k),
                "pn_prefactor": bracket(&profile.pn_prefactor),
            });
            if m >= 2 {
                let constant = asymptotics::constant_cm(&set, m, precision)?;
                outputs["c_m"] = Value::String(bracket(&constant.c_m));
                outputs["exponent"] = Value::String(rat(&constant.exponent));
                if let Some(n) = n {
                    let pi = asymptotics::pi_asymptotic(&set, m, n)?;
                    outputs["pi_n_asymptotic"] = Value::String(bracket(&pi));
                }
            }
            if let Some(n) = n {
                let pn = asymptotics::pn_asymptotic(&set, n)?;
                outputs["pn_asymptotic"] = Value::String(bracket(&pn));
            }
            emit(
                "asym",
                json!({
                    "parts": set.spec().to_string(),
                    "m": m,
                    "precision_bits": precision,
                    "n": n,
                }),
                outputs,
                started,
            );
        }
        Cmd::Llt { parts, n } => {
            let set = single_set(&parts)?;
            let report = llt::llt_deviation(&set, n)?;
            emit(
                "llt",
                json!({ "parts": set.spec().to_string(), "n": n }),
                json!({
                    "mu_n": rat(&report.mu_n),
                    "mu_n_decimal": rational_to_f64(&report.mu_n),
                    "sigma_n": bracket(&report.sigma_n),
                    "deviation": bracket(&report.deviation),
                    "pairing_gap": bracket(&report.pairing_gap),
                    "degenerate": report.degenerate,
                }),
                started,
            );
        }
        Cmd::Sample {
            parts,
            n,
            trials,
            seed,
            cap,
        } => {
            let set = single_set(&parts)?;
            let opts = options(&cap, false);
            let mut state = SamplerState::new_with(&set, n, seed, &opts)?;
            let compositions: Vec<Vec<u64>> =
                (0..trials).map(|_| state.sample_composition()).collect();
            let part_counts: Vec<usize> = compositions.iter().map(Vec::len).collect();
            emit(
                "sample",
                json!({
                    "parts": set.spec().to_string(),
                    "n": n,
                    "trials": trials,
                    "seed": seed,
                    "rng": RNG_ALGORITHM,
                    "n_max_cap": cap.n_max_cap,
                }),
                json!({ "compositions": compositions, "part_counts": part_counts }),
                started,
            );
        }
        Cmd::Mc {
            tuple,
            n,
            trials,
            seed,
            cap,
        } => {
            let sets = resolve_tuple(&tuple, false)?;
            let opts = options(&cap, false);
            let (estimate, standard_error) = monte_carlo_pi_with(&sets, n, trials, seed, &opts)?;
            emit(
                "mc",
                json!({
                    "parts": canonical(&sets),
                    "n": n,
                    "tuple_size": sets.len(),
                    "trials": trials,
                    "seed": seed,
                    "rng": RNG_ALGORITHM,
                    "n_max_cap": cap.n_max_cap,
                }),
                json!({ "estimate": estimate, "standard_error": standard_error }),
                started,
            );
        }
        Cmd::Verify => {
            let checks = run_verify_battery();
            let all_pass = checks.iter().all(|c| c.pass);
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "check": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            emit(
                "verify",
                json!({}),
                json!({ "checks": rows, "all_pass": all_pass }),
                started,
            );
            if !all_pass {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Table {
            tuple,
            n,
            n_min,
            step,
            cap,
        } => {
            let sets = resolve_tuple(&tuple, false)?;
            if sets.len() < 2 {
                return Err(Failure::Usage(
                    "table needs a tuple of at least 2 identical sets".into(),
                ));
            }
            let first = sets[0].spec().to_string();
            if sets.iter().any(|s| s.spec().to_string() != first) {
                return Err(Failure::Usage(
                    "table compares against the identical-coordinate asymptotic; \
                     all --parts coordinates must be equal"
                        .into(),
                ));
            }
            if n_min == 0 || step == 0 || n_min > n {
                return Err(Failure::Usage(
                    "table needs 1 <= n-min <= n and a positive step".into(),
                ));
            }
            let opts = options(&cap, false);
            let m = sets.len() as u32;
            let mut rows = Vec::new();
            let mut at = n_min;
            while at <= n {
                let exact = equal_parts_probability_with(&sets, at, &opts)?
                    .pi_n
                    .expect("probability requested");
                let asym = asymptotics::pi_asymptotic(&sets[0], m, at)?;
                let exact_decimal = rational_to_f64(&exact);
                let asym_decimal = asym.to_f64();
                rows.push((at, exact_decimal, asym_decimal, exact_decimal / asym_decimal));
                at += step;
            }
            if cli.format == Format::Csv {
                println!("n,pi_exact,pi_asymptotic,ratio");
                for (at, exact, asym, ratio) in rows {
                    println!("{at},{exact},{asym},{ratio}");
                }
            } else {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|(at, exact, asym, ratio)| {
                        json!({
                            "n": at,
                            "pi_exact": exact,
                            "pi_asymptotic": asym,
                            "ratio": ratio,
                        })
                    })
                    .collect();
                emit(
                    "table",
                    json!({
                        "parts": canonical(&sets),
                        "tuple_size": m,
                        "n": n,
                        "n_min": n_min,
                        "step": step,
                        "n_max_cap": cap.n_max_cap,
                    }),
                    json!({ "rows": rows }),
                    started,
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, outcome: Result<String, String>) -> Check {
    match outcome {
        Ok(detail) => Check {
            name,
            pass: true,
            detail,
        },
        Err(detail) => Check {
            name,
            pass: false,
            detail,
        },
    }
}

/// The oracle battery behind `verify`: every closed form the crate knows,
/// cross-checked against the dynamic programming engine on short ranges.
fn run_verify_battery() -> Vec<Check> {
    use num_traits::One;

    let one_two = parse_part_spec("{1,2}").unwrap();
    let all = parse_part_spec("N").unwrap();
    let as_rational =
        |value: &num_bigint::BigUint| BigRational::from_integer(value.clone().into());

    let mut checks = Vec::new();

    checks.push(check("fibonacci_totals", {
        let mut bad = None;
        for n in 0..=60u64 {
            let d_n = equal_parts_count(std::slice::from_ref(&one_two), n)
                .unwrap()
                .d_n;
            let fib = oracles::golden_ratio_power(n as u32 + 1).0;
            if d_n != as_rational(&fib) {
                bad = Some(n);
                break;
            }
        }
        match bad {
            None => Ok("P_n({1,2}) follows the Fibonacci recurrence for n <= 60".into()),
            Some(n) => Err(format!("mismatch at n = {n}")),
        }
    }));

    checks.push(check("binomial_power_sum_dp", {
        let mut bad = None;
        'outer: for m in 2..=3u32 {
            let tuple = vec![one_two.clone(); m as usize];
            for n in (0..=90u64).step_by(9) {
                let d_n = equal_parts_count(&tuple, n).unwrap().d_n;
                if d_n != as_rational(&oracles::binomial_power_sum(n, m)) {
                    bad = Some((m, n));
                    break 'outer;
                }
            }
        }
        match bad {
            None => Ok("D_n({1,2}^m) equals the binomial power sum for m <= 3".into()),
            Some((m, n)) => Err(format!("mismatch at m = {m}, n = {n}")),
        }
    }));

    checks.push(check("franel_dp", {
        let mut bad = None;
        'outer: for d in 1..=2u64 {
            let set = parse_part_spec(&format!("{d}N")).unwrap();
            let tuple = vec![set; 2];
            for j in (1..=40u64).step_by(5) {
                let d_n = equal_parts_count(&tuple, d * j).unwrap().d_n;
                if d_n != as_rational(&oracles::franel(j - 1, 2)) {
                    bad = Some((d, j));
                    break 'outer;
                }
            }
        }
        match bad {
            None => Ok("pair diagonals over dN match the Franel-type sums".into()),
            Some((d, j)) => Err(format!("mismatch at d = {d}, j = {j}")),
        }
    }));

    checks.push(check("motzkin_dp", {
        let tuple = vec![one_two.clone(), all.clone()];
        let mut bad = None;
        for n in 1..=60u64 {
            let d_n = equal_parts_count(&tuple, n).unwrap().d_n;
            if d_n != as_rational(&oracles::motzkin_directed_animals(n - 1)) {
                bad = Some(n);
                break;
            }
        }
        match bad {
            None => Ok("({1,2};N) diagonal matches the directed-animal formula".into()),
            Some(n) => Err(format!("mismatch at n = {n}")),
        }
    }));

    checks.push(check("two_part_weighted_dp", {
        let set = parse_part_spec("{1^2,2}").unwrap();
        let tuple = vec![set; 2];
        let alpha = BigRational::from_integer(4.into());
        let beta = BigRational::one();
        let mut bad = None;
        for n in 0..=50u64 {
            let d_n = equal_parts_count(&tuple, n).unwrap().d_n;
            if d_n != oracles::two_part_weighted(n, 2, 1, 2, &alpha, &beta) {
                bad = Some(n);
                break;
            }
        }
        match bad {
            None => Ok("weighted two-part diagonal matches its closed sum".into()),
            Some(n) => Err(format!("mismatch at n = {n}")),
        }
    }));

    checks.push(check("golden_ratio_hanna", {
        let sqrt5 = Interval::from_int(5).sqrt(128);
        let mut worst: f64 = 0.0;
        for m in 1..=3u32 {
            let tuple = vec![one_two.clone(); m as usize];
            let num = equal_parts_count(&tuple, 301).unwrap().d_n;
            let den = equal_parts_count(&tuple, 300).unwrap().d_n;
            let ratio = rational_to_f64(&(num / den));
            let (f, l) = oracles::golden_ratio_power(m);
            let target = (rational_to_f64(&as_rational(&f)) * sqrt5.to_f64()
                + rational_to_f64(&as_rational(&l)))
                / 2.0;
            worst = worst.max((ratio - target).abs() / target);
        }
        if worst <= 0.02 {
            Ok(format!(
                "D ratio tracks the golden-ratio powers, worst relative error {worst:.2e}"
            ))
        } else {
            Err(format!("relative error {worst:.2e} exceeds 2%"))
        }
    }));

    checks.push(check("central_binomial_prob", {
        let tuple = vec![all.clone(); 2];
        let mut bad = None;
        for n in 1..=40u64 {
            let pi_n = equal_parts_probability(&tuple, n).unwrap().pi_n.unwrap();
            let expected = BigRational::new(
                oracles::binomial(2 * n - 2, n - 1).into(),
                num_bigint::BigInt::from(4).pow(n as u32 - 1),
            );
            if pi_n != expected {
                bad = Some(n);
                break;
            }
        }
        match bad {
            None => Ok("pi_n(N;N) equals the central binomial closed form".into()),
            Some(n) => Err(format!("mismatch at n = {n}")),
        }
    }));

    checks.push(check("constant_closed_forms", {
        let mut failures = Vec::new();
        for m in 2..=4u32 {
            let c = asymptotics::constant_cm(&all, m, 128).unwrap().c_m;
            let target = (&Interval::from_int(2).powi(m - 1)
                / &Interval::from_int(m as i64))
                .sqrt(128);
            if c.hi() < target.lo() || target.hi() < c.lo() {
                failures.push(format!("N m={m}"));
            }
        }
        let c2 = asymptotics::constant_cm(&one_two, 2, 128).unwrap().c_m;
        let sqrt5 = Interval::from_int(5).sqrt(192);
        let five_34 = (&Interval::from_int(5) * &sqrt5).sqrt(192);
        let target = &five_34 / &Interval::from_int(2);
        if c2.hi() < target.lo() || target.hi() < c2.lo() {
            failures.push("{1,2} m=2".into());
        }
        if failures.is_empty() {
            Ok("C_m encloses the closed-form constants".into())
        } else {
            Err(format!("disjoint enclosures: {}", failures.join(", ")))
        }
    }));

    checks.push(check("llt_gap_trend", {
        let near = llt::pairing_gap(&all, 50).unwrap();
        let far = llt::pairing_gap(&all, 200).unwrap();
        if far.hi() < near.lo() {
            Ok(format!(
                "pairing gap shrinks: {} at n=50, {} at n=200",
                bracket(&near),
                bracket(&far)
            ))
        } else {
            Err("pairing gap failed to shrink between n=50 and n=200".into())
        }
    }));

    checks.push(check("mc_vs_exact", {
        let tuple = vec![one_two.clone(); 2];
        let exact = rational_to_f64(&equal_parts_probability(&tuple, 30).unwrap().pi_n.unwrap());
        let (estimate, se) =
            monte_carlo_pi_with(&tuple, 30, 20_000, 7, &EnumerateOptions::default()).unwrap();
        if (estimate - exact).abs() <= 4.0 * se {
            Ok(format!(
                "seeded estimate {estimate:.5} within 4 standard errors of {exact:.5}"
            ))
        } else {
            Err(format!(
                "estimate {estimate:.5} vs exact {exact:.5} exceeds 4 x {se:.5}"
            ))
        }
    }));

    checks
}
