//! Subcommand implementations.

use aztec_gaps::asym::constants::{
    bars_prefactor, defect_prefactor, glaisher, p_prefactor, slit_opposite_prefactor,
    slit_same_prefactor,
};
use aztec_gaps::asym::laws::{casimir_ratio, p_n_asym, slit_limit, SlitOrientation};
use aztec_gaps::asym::logspace::{ln_p_slit, ln_q_product};
use aztec_gaps::asym::probe::{convergence_probe, ConvergenceRecord};
use aztec_gaps::equilibrium::{displacement_likelihood, find_equilibrium, BarSystem};
use aztec_gaps::forms::count::{corr_exact, count_exact, CountError};
use aztec_gaps::lattice::DefectConfig;
use aztec_gaps::verify::{asymptotics_suite, identities_suite, oracle_suite, Check};
use clap::Args;
use std::process::ExitCode;

fn parse_i64_list(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad integer '{t}': {e}")))
        .collect()
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("bad number '{t}': {e}")))
        .collect()
}

/// `start:stop:step` grids.
fn parse_grid(s: &str) -> Result<Vec<u64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{s}' must be start:stop:step"));
    }
    let nums: Vec<u64> = parts
        .iter()
        .map(|t| t.parse::<u64>().map_err(|e| format!("bad grid number '{t}': {e}")))
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step == 0 || start > stop {
        return Err(format!("grid '{s}' is empty"));
    }
    Ok((start..=stop).step_by(step as usize).collect())
}

#[derive(Args)]
pub struct CountArgs {
    /// Half-height n (the graph is AR_{2n,2n+k−l}).
    #[arg(long)]
    n: Option<u32>,
    /// Hole labels, comma separated.
    #[arg(long, default_value = "")]
    holes: String,
    /// Separation labels, comma separated.
    #[arg(long, default_value = "")]
    seps: String,
    /// Optional consistency check: expected width − 2n (= k − l).
    #[arg(long)]
    width_extra: Option<i64>,
    /// Read the configuration from a JSON file {"n":…,"holes":[…],"seps":[…]}.
    #[arg(long, conflicts_with_all = ["n", "holes", "seps"])]
    config: Option<std::path::PathBuf>,
}

fn load_config(args_n: Option<u32>, holes: &str, seps: &str, path: &Option<std::path::PathBuf>) -> Result<DefectConfig, String> {
    if let Some(p) = path {
        let text = std::fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))?;
        let cfg: DefectConfig =
            serde_json::from_str(&text).map_err(|e| format!("parsing {}: {e}", p.display()))?;
        cfg.validate().map_err(|e| e.to_string())?;
        return Ok(cfg);
    }
    let n = args_n.ok_or("--n is required (or use --config)")?;
    let cfg = DefectConfig::new(n, parse_i64_list(holes)?, parse_i64_list(seps)?)
        .map_err(|e| e.to_string())?;
    Ok(cfg)
}

pub fn run_count(args: CountArgs) -> Result<ExitCode, String> {
    let cfg = load_config(args.n, &args.holes, &args.seps, &args.config)?;
    if let Some(extra) = args.width_extra {
        let actual = cfg.k() as i64 - cfg.l() as i64;
        if extra != actual {
            return Err(format!("--width-extra {extra} but k−l = {actual}"));
        }
    }
    match count_exact(&cfg) {
        Ok((count, path)) => {
            println!("{}", count.value);
            println!("path: {path}");
            Ok(ExitCode::SUCCESS)
        }
        Err(CountError::Unsupported(msg)) => {
            eprintln!("unsupported: {msg}");
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args)]
pub struct CorrArgs {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value = "")]
    holes: String,
    #[arg(long, default_value = "")]
    seps: String,
    #[arg(long, conflicts_with_all = ["n", "holes", "seps"])]
    config: Option<std::path::PathBuf>,
}

pub fn run_corr(args: CorrArgs) -> Result<ExitCode, String> {
    let cfg = load_config(args.n, &args.holes, &args.seps, &args.config)?;
    match corr_exact(&cfg) {
        Ok((corr, path)) => {
            println!("{corr}");
            println!("float: {:.15e}", corr.to_f64());
            println!("path: {path}");
            Ok(ExitCode::SUCCESS)
        }
        Err(CountError::Unsupported(msg)) => {
            eprintln!("unsupported: {msg}");
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite name: oracle | identities | asymptotics.
    suite: String,
    /// Largest half-size swept by the oracle suite (AD_2..AD_{2max_n}).
    #[arg(long, default_value_t = 3)]
    max_n: u32,
}

fn print_checks(checks: &[Check]) -> bool {
    let mut all = true;
    for c in checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        println!("{status}  {:<28} {}", c.name, c.detail);
        all &= c.passed;
    }
    all
}

pub fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let checks = match args.suite.as_str() {
        "oracle" => oracle_suite(args.max_n),
        "identities" => identities_suite(),
        "asymptotics" => asymptotics_suite(),
        other => return Err(format!("unknown suite '{other}' (oracle|identities|asymptotics)")),
    };
    let ok = print_checks(&checks);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Args)]
pub struct SweepArgs {
    /// Law to sweep: casimir | slit-limit | p-asym.
    law: String,
    /// Casimir slit-length ratio parameters.
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value_t = 1.0)]
    delta: f64,
    /// Size grid start:stop:step (n for casimir/p-asym).
    #[arg(long)]
    n: Option<String>,
    /// Separation grid start:stop:step (d for slit-limit).
    #[arg(long)]
    d: Option<String>,
    /// Output file (defaults to stdout).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

pub fn run_sweep(args: SweepArgs) -> Result<ExitCode, String> {
    let record: ConvergenceRecord = match args.law.as_str() {
        "casimir" => {
            let grid = parse_grid(args.n.as_deref().ok_or("casimir sweep needs --n")?)?;
            let (alpha, beta, delta) = (args.alpha, args.beta, args.delta);
            let target = casimir_ratio(alpha, beta, delta, SlitOrientation::HoleFirst)
                .map_err(|e| e.to_string())?
                .value
                .ln();
            convergence_probe(
                "casimir",
                &grid,
                |n| {
                    let a = (alpha * n as f64).round() as u64;
                    let b = (beta * n as f64).round() as u64;
                    let d = (delta * n as f64).round() as u64;
                    Ok(aztec_gaps::asym::laws::ln_casimir_exact(a, b, d))
                },
                |_| Ok(target),
            )
            .map_err(|e| e.to_string())?
        }
        "slit-limit" => {
            let grid = parse_grid(args.d.as_deref().ok_or("slit-limit sweep needs --d")?)?;
            convergence_probe(
                "slit-limit",
                &grid,
                |d| Ok(ln_p_slit(d)),
                |d| Ok(slit_limit(d, SlitOrientation::HoleFirst).value.ln()),
            )
            .map_err(|e| e.to_string())?
        }
        "p-asym" => {
            let grid = parse_grid(args.n.as_deref().ok_or("p-asym sweep needs --n")?)?;
            convergence_probe(
                "p-asym",
                &grid,
                |n| Ok(ln_p_slit(n)),
                |n| Ok(p_n_asym(n).value.ln()),
            )
            .map_err(|e| e.to_string())?
        }
        "boundary" => {
            let grid = parse_grid(args.n.as_deref().ok_or("boundary sweep needs --n")?)?;
            let alpha = args.alpha;
            convergence_probe(
                "boundary",
                &grid,
                |n| {
                    // exact Q² boundary value at the α-scaled site
                    let s = ((alpha * n as f64) / 2.0).round() as u64;
                    Ok(2.0 * ln_q_product(s, 2 * n as i64 + 3))
                },
                |n| {
                    let s = ((alpha * n as f64) / 2.0).round() as u64;
                    let site = 2 * s as i64 + 1;
                    let width = 2 * n as i64 + 1;
                    let a = site as f64 / n as f64;
                    let mut v = defect_prefactor().ln() - 0.25 * (n as f64).ln();
                    v -= ((site - 1) as f64 + 0.5) * 0.5 * (a / 2.0).ln();
                    v -= ((width - site) as f64 + 0.5) * 0.5 * (1.0 - a / 2.0).ln();
                    Ok(v)
                },
            )
            .map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown law '{other}' (casimir|slit-limit|p-asym|boundary)")),
    };
    let csv = record.to_csv();
    match &args.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| e.to_string())?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Args)]
pub struct EquilibriumArgs {
    /// Bar-length fractions γ_i, comma separated.
    #[arg(long)]
    gammas: String,
    /// Optional displacement of the equilibrium gaps, comma separated.
    #[arg(long)]
    displace: Option<String>,
    /// Scale for the displacement log-likelihood report.
    #[arg(long, default_value_t = 40)]
    n: u64,
}

pub fn run_equilibrium(args: EquilibriumArgs) -> Result<ExitCode, String> {
    let gammas = parse_f64_list(&args.gammas)?;
    let report = match find_equilibrium(&gammas) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("non-convergence: {e}");
            return Ok(ExitCode::from(3));
        }
    };
    let mut json = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    if let Some(d) = &args.displace {
        let delta = parse_f64_list(d)?;
        if delta.len() != report.alphas.len() {
            return Err("displacement length must match the gap count".into());
        }
        let displaced: Vec<f64> =
            report.alphas.iter().zip(&delta).map(|(a, d)| a + d).collect();
        let sys0 = BarSystem::new(report.gammas.clone(), report.alphas.clone())
            .map_err(|e| e.to_string())?;
        let sys = BarSystem::new(report.gammas.clone(), displaced)
            .map_err(|e| e.to_string())?;
        let (lambda, loglik) = displacement_likelihood(&sys, &sys0, args.n);
        json["displacement"] = serde_json::json!({
            "lambda": lambda,
            "n": args.n,
            "log_likelihood": loglik,
        });
    }
    println!("{}", serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?);
    Ok(ExitCode::SUCCESS)
}

pub fn run_constants() -> Result<ExitCode, String> {
    let g = glaisher();
    println!("glaisher_kinkelin_A = {}", g.digits);
    println!("A_f64 = {:.16}", g.value);
    println!("p_prefactor            (2^(1/12) e^(1/4) A^-3) = {:.12}", p_prefactor());
    println!("slit_same_prefactor    (2^(1/3)  e^(1/4) A^-3) = {:.12}", slit_same_prefactor());
    println!(
        "slit_opposite_prefactor (pi^(1/2) e^(1/4) 2^(-1/6) A^-3) = {:.12}",
        slit_opposite_prefactor()
    );
    println!("defect_prefactor       (e^(1/4) 2^(-5/12) A^-3) = {:.12}", defect_prefactor());
    println!("bars_prefactor         (e^(1/3) A^-4) = {:.12}", bars_prefactor());
    Ok(ExitCode::SUCCESS)
}
