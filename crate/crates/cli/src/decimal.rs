//! Parsing rationals and rendering them as decimals. Only display goes
//! through here; every computation upstream stays exact.

use lisword_core::Rational;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::CliError;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("malformed rational {text:?}, expected p/q"));
    let (p, q) = match text.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn pow10(k: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k)
}

/// Renders `value` with `digits` significant digits, rounding half away
/// from zero. Small and large magnitudes switch to scientific notation.
pub fn render(value: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return "0".to_string();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let magnitude = value.abs();

    // exponent e with 10^e <= |x| < 10^{e+1}
    let numer_len = magnitude.numer().to_string().len() as i64;
    let denom_len = magnitude.denom().to_string().len() as i64;
    let mut exponent = numer_len - denom_len;
    let ten_pow = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(pow10(e as usize))
        } else {
            Rational::new(BigInt::one(), pow10((-e) as usize))
        }
    };
    while magnitude < ten_pow(exponent) {
        exponent -= 1;
    }
    while magnitude >= ten_pow(exponent + 1) {
        exponent += 1;
    }

    let shift = digits as i64 - 1 - exponent;
    let scaled = &magnitude * ten_pow(shift);
    let (quotient, remainder) = scaled.numer().div_rem(scaled.denom());
    let mut mantissa = quotient;
    if remainder * 2u32 >= *scaled.denom() {
        mantissa += 1u32;
    }
    if mantissa == pow10(digits) {
        mantissa /= 10u32;
        exponent += 1;
    }
    debug_assert_eq!(mantissa.sign(), Sign::Plus);
    let text = mantissa.to_string();

    let body = if (0..digits as i64).contains(&exponent) {
        let split = exponent as usize + 1;
        let (int_part, frac_part) = text.split_at(split);
        if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        }
    } else if (-6..0).contains(&exponent) {
        format!("0.{}{}", "0".repeat((-exponent - 1) as usize), text)
    } else {
        let (lead, rest) = text.split_at(1);
        if rest.is_empty() {
            format!("{lead}e{exponent}")
        } else {
            format!("{lead}.{rest}e{exponent}")
        }
    };
    format!("{sign}{body}")
}

/// Rational approximation of `e^theta` for `theta >= 0` with relative error
/// below `10^-(digits + 10)`.
pub fn exp_approx(theta: &Rational, digits: usize) -> Rational {
    let tolerance = Rational::new(BigInt::one(), pow10(digits + 10));
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = term * theta / Rational::from_integer(k.into());
        sum += &term;
        // once k > 2 theta the tail is at most twice the current term
        let past_peak = Rational::from_integer(k.into()) > theta * Rational::from_integer(2.into());
        if past_peak && &term * Rational::from_integer(2.into()) < &sum * &tolerance {
            return sum;
        }
    }
}
