//! Implementations of the five subcommands.

use std::path::PathBuf;

use eiscensus_core as core;
use eiscensus_core::{CensusTally, FactorSieve};
use serde_json::json;

use crate::report::{
    constants_csv_line, render, report_csv_line, table_csv_line, ConstantsRow, ReportRow,
    TableRow, CONSTANTS_HEADER, REPORT_HEADER, TABLE_HEADER,
};
use crate::{CliError, Format, Mode};

/// Settings resolved with precedence flag > environment > default.
pub struct Config {
    pub prime_bound: u64,
    pub workers: u32,
    pub budget: u128,
}

impl Config {
    pub fn resolve(
        prime_bound: Option<u64>,
        workers: Option<u32>,
        budget: Option<u128>,
    ) -> Result<Self, CliError> {
        Ok(Self {
            prime_bound: resolve("EISCENSUS_PRIME_BOUND", prime_bound, core::DEFAULT_PRIME_BOUND)?,
            workers: resolve("EISCENSUS_WORKERS", workers, default_workers())?,
            budget: resolve("EISCENSUS_BUDGET", budget, core::DEFAULT_BUDGET)?,
        })
    }
}

fn default_workers() -> u32 {
    std::thread::available_parallelism()
        .map(|n| n.get() as u32)
        .unwrap_or(1)
}

fn resolve<T: std::str::FromStr>(env: &str, flag: Option<T>, default: T) -> Result<T, CliError> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(env) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid value in {env}: {raw:?}"))),
        Err(_) => Ok(default),
    }
}

fn core_err(e: core::Error) -> CliError {
    match e {
        core::Error::BudgetExceeded { .. }
        | core::Error::SpaceTooLarge { .. }
        | core::Error::LimitTooLarge(_) => CliError::Resource(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn build_sieve(limit: u64) -> Result<FactorSieve, CliError> {
    FactorSieve::new(limit.max(2)).map_err(core_err)
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

pub fn cmd_constants(
    d: u32,
    prime_bound: Option<u64>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let config = Config::resolve(prime_bound, None, None)?;
    let sieve = build_sieve(config.prime_bound)?;
    let constants = core::density_constants(d, config.prime_bound, &sieve).map_err(core_err)?;
    let meta = json!({
        "command": "constants",
        "d": d,
        "prime_bound": config.prime_bound,
    });
    let rows = [ConstantsRow::from(&constants)];
    emit(&out, &render(format, meta, CONSTANTS_HEADER, &rows, constants_csv_line))
}

/// Runs the engines requested by `mode`; in `both` the tallies must agree
/// field-for-field or the command fails with a structured diff.
fn run_census_engines(
    d: u32,
    height: u64,
    mode: Mode,
    config: &Config,
    sieve: &FactorSieve,
) -> Result<CensusTally, CliError> {
    match mode {
        Mode::Brute => {
            core::enumerate_census_with_budget(d, height, sieve, config.workers, config.budget)
                .map_err(core_err)
        }
        Mode::Exact => core::exact_set_counts(d, height, sieve).map_err(core_err),
        Mode::Both => {
            let brute =
                core::enumerate_census_with_budget(d, height, sieve, config.workers, config.budget)
                    .map_err(core_err)?;
            let exact = core::exact_set_counts(d, height, sieve).map_err(core_err)?;
            let diff = diff_tallies(&brute, &exact);
            if !diff.is_empty() {
                return Err(CliError::Mismatch(format!(
                    "engine mismatch at d={d}, H={height}:\n{}",
                    diff.join("\n")
                )));
            }
            Ok(exact)
        }
    }
}

pub fn diff_tallies(brute: &CensusTally, exact: &CensusTally) -> Vec<String> {
    brute
        .named_counts()
        .iter()
        .zip(exact.named_counts())
        .filter(|(b, e)| b.1 != e.1)
        .map(|(b, e)| format!("  field {}: brute={} exact={}", b.0, b.1, e.1))
        .collect()
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_census(
    d: u32,
    height: u64,
    mode: Mode,
    prime_bound: Option<u64>,
    workers: Option<u32>,
    budget: Option<u128>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let config = Config::resolve(prime_bound, workers, budget)?;
    let sieve = build_sieve(height.max(config.prime_bound))?;
    let constants = core::density_constants(d, config.prime_bound, &sieve).map_err(core_err)?;
    let tally = run_census_engines(d, height, mode, &config, &sieve)?;
    let meta = json!({
        "command": "census",
        "d": d,
        "height": height,
        "mode": mode.as_str(),
        "prime_bound": config.prime_bound,
        "workers": config.workers,
        "budget": config.budget,
    });
    let rows = [ReportRow::new(&tally, &constants)];
    emit(&out, &render(format, meta, REPORT_HEADER, &rows, report_csv_line))
}

pub fn cmd_convergence(
    d: u32,
    heights: Vec<u64>,
    prime_bound: Option<u64>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    if heights.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "heights must be strictly ascending".to_string(),
        ));
    }
    let config = Config::resolve(prime_bound, None, None)?;
    let max_height = *heights.last().expect("heights is nonempty");
    let sieve = build_sieve(max_height.max(config.prime_bound))?;
    let constants = core::density_constants(d, config.prime_bound, &sieve).map_err(core_err)?;

    let mut rows = Vec::with_capacity(heights.len());
    for &h in &heights {
        let tally = core::exact_set_counts(d, h, &sieve).map_err(core_err)?;
        rows.push(ReportRow::new(&tally, &constants));
    }
    print_convergence_summary(d, &config, &rows);

    let meta = json!({
        "command": "convergence",
        "d": d,
        "heights": heights,
        "prime_bound": config.prime_bound,
    });
    emit(&out, &render(format, meta, REPORT_HEADER, &rows, report_csv_line))
}

/// Compares the two empirical complement accountings against the closed
/// form, flags the closer one, and prints per-height deviations. Reporting
/// only: nothing here asserts which accounting the theorem tracks.
fn print_convergence_summary(d: u32, config: &Config, rows: &[ReportRow]) {
    let Some(last) = rows.last() else { return };
    eprintln!(
        "convergence summary: d={d}, prime_bound={}, H_max={}",
        config.prime_bound, last.h
    );
    eprintln!(
        "  closed form      theta_star/theta          = {}",
        last.ratio_theoretical
    );
    let (Some(prose), Some(alt)) = (last.ratio_empirical, last.ratio_alternative()) else {
        eprintln!("  no Eisenstein polynomials at H_max; ratios are null");
        return;
    };
    let dev_prose = (prose - last.ratio_theoretical).abs();
    let dev_alt = (alt - last.ratio_theoretical).abs();
    eprintln!(
        "  prose accounting  count_star/count_E        = {prose}  |dev| = {dev_prose:.3e}"
    );
    eprintln!(
        "  mobius accounting (count_E-count_A-count_B)/count_E = {alt}  |dev| = {dev_alt:.3e}"
    );
    let closer = if dev_alt < dev_prose {
        "mobius accounting ((count_E-count_A-count_B)/count_E)"
    } else {
        "prose accounting (count_star/count_E)"
    };
    eprintln!("  closer to the closed form: {closer}");
    for row in rows {
        eprintln!(
            "  H={}: |empirical_E_density - theta| = {:.3e}",
            row.h,
            (row.empirical_e_density - row.theta).abs()
        );
    }
}

pub fn cmd_table(
    d_list: Vec<u32>,
    prime_bound: Option<u64>,
    check_monotone: bool,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let config = Config::resolve(prime_bound, None, None)?;
    let mut degrees = d_list;
    degrees.sort_unstable();

    let mut rows = Vec::with_capacity(degrees.len());
    if !degrees.is_empty() {
        let sieve = build_sieve(config.prime_bound)?;
        for &d in &degrees {
            let c = core::density_constants(d, config.prime_bound, &sieve).map_err(core_err)?;
            rows.push(TableRow {
                d,
                theta: c.theta,
                theta_star: c.theta_star,
                ratio: c.ratio,
            });
        }
    }
    if check_monotone {
        for pair in rows.windows(2) {
            if pair[0].d < pair[1].d && pair[0].ratio >= pair[1].ratio {
                return Err(CliError::Mismatch(format!(
                    "ratio not strictly increasing: d={} gives {} but d={} gives {}",
                    pair[0].d, pair[0].ratio, pair[1].d, pair[1].ratio
                )));
            }
        }
    }
    let meta = json!({
        "command": "table",
        "d_list": degrees,
        "prime_bound": config.prime_bound,
    });
    emit(&out, &render(format, meta, TABLE_HEADER, &rows, table_csv_line))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_validate(
    d: u32,
    max_height: u64,
    prime_bound: Option<u64>,
    workers: Option<u32>,
    budget: Option<u128>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let config = Config::resolve(prime_bound, workers, budget)?;
    let sieve = build_sieve(max_height.max(config.prime_bound))?;
    let constants = core::density_constants(d, config.prime_bound, &sieve).map_err(core_err)?;

    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for h in 1..=max_height {
        let brute =
            core::enumerate_census_with_budget(d, h, &sieve, config.workers, config.budget)
                .map_err(core_err)?;
        let exact = core::exact_set_counts(d, h, &sieve).map_err(core_err)?;
        for line in diff_tallies(&brute, &exact) {
            mismatches.push(format!("H={h}:{line}"));
        }
        rows.push(ReportRow::new(&exact, &constants));
    }

    let meta = json!({
        "command": "validate",
        "d": d,
        "max_height": max_height,
        "prime_bound": config.prime_bound,
        "workers": config.workers,
        "budget": config.budget,
    });
    emit(&out, &render(format, meta, REPORT_HEADER, &rows, report_csv_line))?;
    if mismatches.is_empty() {
        eprintln!("validate: engines agree for d={d}, H=1..={max_height}");
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "engine mismatch at d={d}:\n{}",
            mismatches.join("\n")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tally(count_e: u128, count_star: u128) -> CensusTally {
        CensusTally {
            degree: 3,
            height: 2,
            total: 125,
            count_e,
            count_e1_prose: 0,
            count_e2_prose: 0,
            count_star,
            count_a: 0,
            count_b: 0,
        }
    }

    #[test]
    fn diff_lists_only_differing_fields() {
        let a = tally(18, 18);
        assert!(diff_tallies(&a, &a).is_empty());
        let b = tally(18, 17);
        let diff = diff_tallies(&a, &b);
        assert_eq!(diff.len(), 1);
        assert!(diff[0].contains("count_star"));
        assert!(diff[0].contains("brute=18"));
        assert!(diff[0].contains("exact=17"));
    }

    #[test]
    fn config_precedence_flag_over_env() {
        // sequential: env vars are process-global
        std::env::set_var("EISCENSUS_BUDGET", "123");
        let c = Config::resolve(None, None, Some(999)).unwrap();
        assert_eq!(c.budget, 999);
        let c = Config::resolve(None, None, None).unwrap();
        assert_eq!(c.budget, 123);
        std::env::set_var("EISCENSUS_BUDGET", "not-a-number");
        assert!(Config::resolve(None, None, None).is_err());
        std::env::remove_var("EISCENSUS_BUDGET");
        let c = Config::resolve(None, None, None).unwrap();
        assert_eq!(c.budget, core::DEFAULT_BUDGET);
    }
}
