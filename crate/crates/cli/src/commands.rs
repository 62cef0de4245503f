use std::io::Write;

use lisword_core::det::DetAlgorithm;
use lisword_core::gessel::{
    count_via_gessel, count_via_gessel_r2, count_via_gessel_tr_eliminated, gessel_r1_series,
    gessel_row, poissonized_partial_sum, prob_lis_le, total_words,
};
use lisword_core::oracles::{count_via_brute_capped, count_via_rsk, DEFAULT_BRUTE_CAP};
use lisword_core::rational::{factorial, from_biguint};
use lisword_core::{CountResult, Error as CoreError, Rational};
use num_bigint::BigUint;
use num_traits::Signed;
use rayon::prelude::*;

use crate::args::{CountArgs, Format, MethodArg, ProbArgs, TableArgs, ValidateArgs};
use crate::config::{Config, DEFAULT_DIGITS, DEFAULT_VALIDATE_CAP};
use crate::decimal::{exp_approx, parse_rational, render};
use crate::error::CliError;
use crate::table::{Table, TableRequest, TableRow};
use crate::Outcome;

fn check_dr(d: usize, r: usize) -> Result<(), CliError> {
    if d == 0 || r == 0 {
        return Err(CliError::Usage("--d and --r must be at least 1".into()));
    }
    Ok(())
}

/// Every applicable method for one instance. Brute force is left out when
/// it would exceed `cap`; the returned string explains the omission.
fn all_methods(
    d: usize,
    r: usize,
    n: usize,
    cap: u64,
) -> Result<(Vec<CountResult>, Option<String>), CliError> {
    let mut results = vec![
        count_via_gessel(d, r, n)?,
        count_via_gessel_tr_eliminated(d, r, n)?,
    ];
    if r == 2 {
        results.push(count_via_gessel_r2(d, n)?);
    }
    results.push(count_via_rsk(d, r, n)?);
    let mut skipped = None;
    match count_via_brute_capped(d, r, n, cap) {
        Ok(res) => results.push(res),
        Err(err @ CoreError::CapExceeded { .. }) => skipped = Some(format!("brute skipped: {err}")),
        Err(err) => return Err(err.into()),
    }
    Ok((results, skipped))
}

fn agree(results: &[CountResult]) -> bool {
    results.windows(2).all(|w| w[0].value == w[1].value)
}

pub fn cmd_count(
    args: &CountArgs,
    config: &Config,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    check_dr(args.d, args.r)?;
    let method = args.method.or(config.method).unwrap_or(MethodArg::Gessel);
    let cap = args.cap.or(config.cap).unwrap_or(DEFAULT_BRUTE_CAP);
    let (d, r, n) = (args.d, args.r, args.n);
    match method {
        MethodArg::Gessel => writeln!(out, "{}", count_via_gessel(d, r, n)?)?,
        MethodArg::Rsk => writeln!(out, "{}", count_via_rsk(d, r, n)?)?,
        MethodArg::Brute => writeln!(out, "{}", count_via_brute_capped(d, r, n, cap)?)?,
        MethodArg::All => {
            let (results, skipped) = all_methods(d, r, n, cap)?;
            for res in &results {
                writeln!(out, "{res}")?;
            }
            if let Some(note) = skipped {
                writeln!(out, "{note}")?;
            }
            if agree(&results) {
                writeln!(out, "MATCH")?;
            } else {
                writeln!(out, "MISMATCH")?;
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Success)
}

/// Values for `n = 1..=n_max` of one table row, plus whether every
/// cross-check agreed.
fn table_row(
    d: usize,
    r: usize,
    n_max: usize,
    method: MethodArg,
    cap: u64,
) -> Result<(TableRow, bool), CliError> {
    let mut consistent = true;
    let values: Vec<BigUint> = match method {
        MethodArg::Gessel => gessel_row(d, r, n_max, DetAlgorithm::Auto)?
            .into_iter()
            .skip(1)
            .map(|c| c.value)
            .collect(),
        MethodArg::Rsk => (1..=n_max)
            .map(|n| count_via_rsk(d, r, n).map(|c| c.value))
            .collect::<Result<_, _>>()?,
        MethodArg::Brute => (1..=n_max)
            .map(|n| count_via_brute_capped(d, r, n, cap).map(|c| c.value))
            .collect::<Result<_, _>>()?,
        MethodArg::All => {
            let row = gessel_row(d, r, n_max, DetAlgorithm::Auto)?;
            let mut values = Vec::with_capacity(n_max);
            for (n, gessel) in row.iter().enumerate().skip(1) {
                let (mut results, _) = all_methods(d, r, n, cap)?;
                results.push(gessel.clone());
                consistent &= agree(&results);
                values.push(gessel.value.clone());
            }
            values
        }
    };
    Ok((TableRow { d, values }, consistent))
}

pub fn build_table(req: &TableRequest, cap: u64) -> Result<(Table, bool), CliError> {
    req.validate()?;
    let rows: Vec<(TableRow, bool)> = req
        .d_values
        .par_iter()
        .map(|&d| table_row(d, req.r, req.n_max, req.method, cap))
        .collect::<Result<_, _>>()?;
    let consistent = rows.iter().all(|(_, ok)| *ok);
    let table = Table {
        r: req.r,
        method: req.method.as_str().to_string(),
        rows: rows.into_iter().map(|(row, _)| row).collect(),
    };
    Ok((table, consistent))
}

pub fn cmd_table(
    args: &TableArgs,
    config: &Config,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let req = TableRequest {
        r: args.r,
        d_values: args.d_list.clone(),
        n_max: args.n_max,
        method: args.method.or(config.method).unwrap_or(MethodArg::Gessel),
        format: args.format.or(config.format).unwrap_or(Format::Markdown),
    };
    let cap = args.cap.or(config.cap).unwrap_or(DEFAULT_BRUTE_CAP);
    let (table, consistent) = build_table(&req, cap)?;
    out.write_all(table.render(req.format)?.as_bytes())?;
    if !consistent {
        eprintln!("MISMATCH: methods disagree on at least one entry");
        return Ok(Outcome::Mismatch);
    }
    Ok(Outcome::Success)
}

pub fn cmd_prob(
    args: &ProbArgs,
    config: &Config,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    check_dr(args.d, args.r)?;
    let digits = args.digits.or(config.digits).unwrap_or(DEFAULT_DIGITS);
    if args.n.is_none() && args.poisson.is_none() {
        return Err(CliError::Usage("prob needs --n, --poisson, or both".into()));
    }
    let theta = args.poisson.as_deref().map(parse_rational).transpose()?;
    if theta.as_ref().is_some_and(Signed::is_negative) {
        return Err(CliError::Usage("--poisson must be nonnegative".into()));
    }

    if let Some(n) = args.n {
        let p = prob_lis_le(args.d, args.r, n)?;
        writeln!(
            out,
            "Prob(L <= {}) for r={}, n={}: {} ~ {}",
            args.d,
            args.r,
            n,
            p,
            render(&p, digits)
        )?;
    }
    if let Some(theta) = theta {
        let partial = poissonized_partial_sum(args.d, args.r, &theta, args.terms)?;
        let weighted: Rational = &partial / exp_approx(&theta, digits);
        writeln!(
            out,
            "Poissonized partial sum for theta={}, n<={}: {}",
            theta, args.terms, partial
        )?;
        writeln!(
            out,
            "e^-theta * partial sum ~ {}",
            render(&weighted, digits)
        )?;
    }
    Ok(Outcome::Success)
}

/// One sweep instance: its report line and whether everything agreed.
fn validate_instance(d: usize, r: usize, n: usize, cap: u64) -> Result<(String, bool), CliError> {
    let (results, _) = all_methods(d, r, n, cap)?;
    let mut line = format!("d={d} r={r} n={n}");
    for res in &results {
        line.push_str(&format!(" {}={}", res.method, res.value));
    }
    let mut ok = agree(&results);
    if r == 1 {
        let series = gessel_r1_series(d, n);
        let scaled = &series[n] * from_biguint(&(factorial(n) * factorial(n)));
        line.push_str(&format!(" bessel={scaled}"));
        ok &= scaled == from_biguint(&results[0].value);
    }
    line.push_str(if ok { " MATCH" } else { " MISMATCH" });
    Ok((line, ok))
}

pub fn cmd_validate(
    args: &ValidateArgs,
    config: &Config,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let cap = args.cap.or(config.cap).unwrap_or(DEFAULT_VALIDATE_CAP);
    let cap_big = BigUint::from(cap);
    let mut instances = Vec::new();
    for r in 1..=args.r_max {
        let mut n = 0;
        while total_words(r, n) <= cap_big {
            for d in 1..=args.d_max {
                instances.push((d, r, n));
            }
            n += 1;
        }
    }
    instances.sort_by_key(|&(d, r, n)| (r, d, n));
    let reports: Vec<(String, bool)> = instances
        .par_iter()
        .map(|&(d, r, n)| validate_instance(d, r, n, cap))
        .collect::<Result<_, _>>()?;
    let mismatches = reports.iter().filter(|(_, ok)| !ok).count();
    for (line, _) in &reports {
        writeln!(out, "{line}")?;
    }
    writeln!(
        out,
        "summary: {} instances, {} mismatches",
        reports.len(),
        mismatches
    )?;
    Ok(if mismatches == 0 {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}
