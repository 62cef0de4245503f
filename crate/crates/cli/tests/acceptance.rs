//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any gating criterion fails.

use std::time::{Duration, Instant};

use lisword::args::{Format, MethodArg};
use lisword::commands::build_table;
use lisword::table::{Table, TableRequest};
use lisword_core::det::DetAlgorithm;
use lisword_core::gessel::{
    count_via_gessel, count_via_gessel_r2, count_via_gessel_tr_eliminated, gessel_r1_series,
    gessel_row, total_words,
};
use lisword_core::oracles::{count_via_brute_capped, count_via_rsk};
use lisword_core::polyring::{gaussian_pairing, monomial_norm, ExponentVector, TPoly};
use lisword_core::rational::{factorial, from_biguint, int, rat, Rational};
use lisword_core::symfunc::{
    complete_homogeneous, cycle_index, f_lambda, kostka_g, kostka_ssyt_oracle, partitions_of, schur,
};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Rows d = 1..=4 of a known table, columns n = 1.. as given.
fn check_table(r: usize, expected: &[&[u64]]) -> Check {
    let n_max = expected[0].len();
    let req = TableRequest {
        r,
        d_values: vec![1, 2, 3, 4],
        n_max,
        method: MethodArg::Gessel,
        format: Format::Json,
    };
    let (table, _) = build_table(&req, 0).map_err(|e| e.to_string())?;
    let round_trip = Table::from_json(&table.to_json().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(round_trip == table, || {
        "JSON round trip changed the table".into()
    })?;
    for (row, want) in table.rows.iter().zip(expected) {
        let want: Vec<BigUint> = want.iter().map(|&v| BigUint::from(v)).collect();
        ensure(row.values == want, || {
            format!("row d={}: got {:?}, want {:?}", row.d, row.values, want)
        })?;
    }
    Ok(format!("{} rows x {} columns exact", expected.len(), n_max))
}

fn criterion_1() -> Check {
    check_table(
        2,
        &[
            &[1, 1, 1, 1, 1, 1],
            &[1, 6, 43, 352, 3114, 29004],
            &[1, 6, 90, 1879, 47024, 1331664],
            &[1, 6, 90, 2520, 102011, 5176504],
        ],
    )
}

fn criterion_2() -> Check {
    check_table(
        3,
        &[
            &[1, 1, 1, 1],
            &[1, 20, 374, 8124],
            &[1, 20, 1680, 173891],
            &[1, 20, 1680, 369600],
        ],
    )
}

fn criterion_3() -> Check {
    check_table(
        4,
        &[&[1, 1, 1], &[1, 70, 3199], &[1, 70, 34650], &[1, 70, 34650]],
    )
}

/// (d, r, n) with d in 1..=4, r in 1..=4, rn <= 10 and at most 10^6 words.
fn oracle_instances() -> Vec<(usize, usize, usize)> {
    let cap = BigUint::from(1_000_000u32);
    let mut out = Vec::new();
    for r in 1..=4 {
        for n in 0..=10 / r {
            if total_words(r, n) > cap {
                continue;
            }
            for d in 1..=4 {
                out.push((d, r, n));
            }
        }
    }
    out
}

fn criterion_4() -> Check {
    let instances = oracle_instances();
    for &(d, r, n) in &instances {
        let g = count_via_gessel(d, r, n).map_err(|e| e.to_string())?.value;
        let k = count_via_rsk(d, r, n).map_err(|e| e.to_string())?.value;
        let b = count_via_brute_capped(d, r, n, 1_000_000)
            .map_err(|e| e.to_string())?
            .value;
        ensure(g == k && k == b, || {
            format!("d={d} r={r} n={n}: gessel={g} rsk={k} brute={b}")
        })?;
    }
    Ok(format!(
        "{} instances, gessel = rsk = brute",
        instances.len()
    ))
}

fn criterion_5() -> Check {
    let mut checked = 0;
    for d in 1..=4 {
        let series = gessel_r1_series(d, 8);
        for (n, coeff) in series.iter().enumerate() {
            let bessel = coeff * from_biguint(&(factorial(n) * factorial(n)));
            let gessel = from_biguint(&count_via_gessel(d, 1, n).map_err(|e| e.to_string())?.value);
            let squares: BigUint = partitions_of(n, d).iter().map(|l| f_lambda(l).pow(2)).sum();
            ensure(bessel == gessel && gessel == from_biguint(&squares), || {
                format!("d={d} n={n}: bessel={bessel} gessel={gessel} squares={squares}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} values agree three ways"))
}

fn criterion_6() -> Check {
    let instances = oracle_instances();
    for &(d, r, n) in &instances {
        let full = count_via_gessel(d, r, n).map_err(|e| e.to_string())?.value;
        let reduced = count_via_gessel_tr_eliminated(d, r, n)
            .map_err(|e| e.to_string())?
            .value;
        ensure(full == reduced, || {
            format!("d={d} r={r} n={n}: {full} vs {reduced}")
        })?;
    }
    Ok(format!("{} instances agree", instances.len()))
}

fn criterion_7() -> Check {
    for d in 1..=4 {
        for n in 0..=5 {
            let full = count_via_gessel(d, 2, n).map_err(|e| e.to_string())?.value;
            let quad = count_via_gessel_r2(d, n).map_err(|e| e.to_string())?.value;
            ensure(full == quad, || format!("d={d} n={n}: {full} vs {quad}"))?;
        }
    }
    Ok("d <= 4, n <= 5 agree".into())
}

fn criterion_8() -> Check {
    // cycle index identity
    for r in 1..=6 {
        let images: Vec<TPoly> = (1..=r)
            .map(|j| TPoly::variable(r, j).scale(&rat(1, j as i64)))
            .collect();
        let rescaled = complete_homogeneous(r as i64, r)
            .substitute(&images)
            .map_err(|e| e.to_string())?;
        ensure(cycle_index(r) == rescaled, || format!("cycle index r={r}"))?;
    }

    // pairing orthogonality
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let exps = prop::collection::vec(0u32..5, 4).prop_map(ExponentVector::new);
    runner
        .run(&(exps.clone(), exps), |(k, l)| {
            let value = gaussian_pairing(
                &TPoly::monomial(k.clone(), int(1)),
                &TPoly::monomial(l.clone(), int(1)),
            )
            .unwrap();
            let want = if k == l {
                from_biguint(&monomial_norm(&k))
            } else {
                Rational::zero()
            };
            prop_assert_eq!(value, want);
            Ok(())
        })
        .map_err(|e| format!("pairing orthogonality: {e}"))?;

    // Schur weighted homogeneity
    for weight in 0..=6 {
        for lambda in partitions_of(weight, weight) {
            let r = weight.max(1);
            let s = schur(&lambda, r);
            for a in [2i64, 3] {
                let images: Vec<TPoly> = (1..=r)
                    .map(|j| TPoly::variable(r, j).scale(&int(a.pow(j as u32))))
                    .collect();
                let scaled = s.substitute(&images).map_err(|e| e.to_string())?;
                ensure(scaled == s.scale(&int(a.pow(weight as u32))), || {
                    format!("scaling {lambda} a={a}")
                })?;
            }
        }
    }

    // hook length vs |lambda|! s_lambda(1, 0, ...)
    for weight in 0..=10 {
        for lambda in partitions_of(weight, weight) {
            let r = weight.max(1);
            let mut point = vec![Rational::zero(); r];
            point[0] = int(1);
            let eval = schur(&lambda, r)
                .evaluate(&point)
                .map_err(|e| e.to_string())?
                * from_biguint(&factorial(weight));
            ensure(eval == from_biguint(&f_lambda(&lambda)), || {
                format!("f_lambda {lambda}")
            })?;
        }
    }

    // Kostka vs tableau oracle, and the total-count identity
    for r in 1..=8 {
        for n in 0..=8 / r {
            let mut total = BigUint::zero();
            for lambda in partitions_of(r * n, r * n) {
                let k = kostka_g(&lambda, r, n).map_err(|e| e.to_string())?;
                ensure(k == kostka_ssyt_oracle(&lambda, &vec![r; n]), || {
                    format!("kostka {lambda} r={r}")
                })?;
                total += f_lambda(&lambda) * k;
            }
            ensure(total == total_words(r, n), || {
                format!("total count r={r} n={n}")
            })?;
        }
    }

    // truncation stability, d-monotonicity with saturation
    for r in 1..=3 {
        let n_max = 8 / r;
        let rows: Vec<_> = (1..=r * n_max + 1)
            .map(|d| gessel_row(d, r, n_max, DetAlgorithm::Auto).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        for d in 1..=3 {
            let shorter =
                gessel_row(d, r, n_max - 1, DetAlgorithm::Auto).map_err(|e| e.to_string())?;
            for n in 0..n_max {
                ensure(shorter[n].value == rows[d - 1][n].value, || {
                    format!("truncation d={d} r={r} n={n}")
                })?;
            }
        }
        for n in 0..=n_max {
            for d in 1..rows.len() {
                let (lo, hi) = (&rows[d - 1][n].value, &rows[d][n].value);
                ensure(lo <= hi, || format!("monotone d={d} r={r} n={n}"))?;
                if d >= r * n {
                    ensure(lo == hi && *lo == total_words(r, n), || {
                        format!("saturation d={d} r={r} n={n}")
                    })?;
                }
            }
        }
    }
    Ok("all properties hold".into())
}

fn stretch_r2_n10() -> Check {
    let row = gessel_row(4, 2, 10, DetAlgorithm::Auto).map_err(|e| e.to_string())?;
    let want: BigUint = "117857270562568".parse().unwrap();
    ensure(row[10].value == want, || {
        format!("A_{{5,2}}(10) = {}", row[10].value)
    })?;
    Ok("A_{5,2}(10) = 117857270562568".into())
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    gating: bool,
    run: fn() -> Check,
}

fn main() {
    let minutes = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion {
            name: "1 r=2 table (d<=4, n<=6)",
            limit: minutes(5),
            gating: true,
            run: criterion_1,
        },
        Criterion {
            name: "2 r=3 table (d<=4, n<=4)",
            limit: minutes(5),
            gating: true,
            run: criterion_2,
        },
        Criterion {
            name: "3 r=4 table (d<=4, n<=3)",
            limit: minutes(10),
            gating: true,
            run: criterion_3,
        },
        Criterion {
            name: "4 three-way oracle agreement",
            limit: minutes(15),
            gating: true,
            run: criterion_4,
        },
        Criterion {
            name: "5 r=1 Bessel reduction",
            limit: minutes(1),
            gating: true,
            run: criterion_5,
        },
        Criterion {
            name: "6 t_r elimination equivalence",
            limit: minutes(15),
            gating: true,
            run: criterion_6,
        },
        Criterion {
            name: "7 r=2 quadrature equivalence",
            limit: minutes(5),
            gating: true,
            run: criterion_7,
        },
        Criterion {
            name: "8 property suite",
            limit: minutes(1),
            gating: true,
            run: criterion_8,
        },
        Criterion {
            name: "stretch r=2 table n=10",
            limit: minutes(5),
            gating: false,
            run: stretch_r2_n10,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed > c.limit => Err(format!("took {elapsed:.1?}, limit {:?}", c.limit)),
            Ok(detail) => Ok(detail.clone()),
            Err(e) => Err(e.clone()),
        };
        let tag = if c.gating { "" } else { " (non-gating)" };
        match verdict {
            Ok(detail) => println!("[PASS] criterion {}{tag}: {detail} [{elapsed:.2?}]", c.name),
            Err(why) => {
                println!("[FAIL] criterion {}{tag}: {why} [{elapsed:.2?}]", c.name);
                if c.gating {
                    failed += 1;
                }
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
