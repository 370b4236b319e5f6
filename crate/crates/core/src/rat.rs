//! Exact rational scalars: parsing, printing, and best bounded-denominator
//! approximation via continued fractions.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_u64(p: u64, q: u64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p/q", an integer, or a plain decimal such as "0.2319" (read
/// exactly, never through floating point).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let sign = if int_part.trim_start().starts_with('-') { -1 } else { 1 };
        let i: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part
                .parse()
                .map_err(|_| Error::Parse(format!("bad decimal `{s}`")))?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal `{s}`")));
        }
        let f: BigInt = frac_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal `{s}`")))?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let abs = Rat::new(i.abs() * &scale + f, scale);
        return Ok(if sign < 0 { -abs } else { abs });
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    Ok(Rat::from_integer(n))
}

/// Truncated decimal expansion with `digits` places, for display next to the
/// exact value.
pub fn decimal_string(x: &Rat, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let int = a.numer() / a.denom();
    let mut rem = a.numer() - &int * a.denom();
    let mut frac = String::new();
    for _ in 0..digits {
        if rem.is_zero() {
            break;
        }
        rem *= 10;
        let d = &rem / a.denom();
        frac.push(char::from(b'0' + d.to_u8().unwrap_or(9)));
        rem -= d * a.denom();
    }
    let mut out = String::new();
    if neg && !(int.is_zero() && frac.chars().all(|c| c == '0')) {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if !frac.is_empty() {
        out.push('.');
        out.push_str(&frac);
    }
    out
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Best rational approximation with denominator at most `max_den`, by the
/// continued fraction of the exact value of `x` (an f64 is itself a rational,
/// so this whole computation is exact). Semiconvergents are considered, so the
/// result truly minimizes |x - p/q| over q <= max_den.
pub fn best_rational_approx(x: f64, max_den: u64) -> Result<Rat> {
    if !x.is_finite() {
        return Err(Error::Parse(format!("cannot round non-finite value {x}")));
    }
    let exact = Rat::from_float(x).ok_or_else(|| Error::Parse("non-finite float".into()))?;
    Ok(best_rational_approx_exact(&exact, max_den))
}

/// Same as `best_rational_approx` but starting from an exact rational.
pub fn best_rational_approx_exact(x: &Rat, max_den: u64) -> Rat {
    let max_den = BigInt::from(max_den.max(1));
    if x.denom() <= &max_den {
        return x.clone();
    }
    // Continued fraction on |x|; track convergents p/q.
    let neg = x.is_negative();
    let mut num = x.numer().abs();
    let mut den = x.denom().clone();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (&num / &den, BigInt::one());
    let mut rem = &num - &p1 * &den;
    let mut best: Option<Rat> = None;
    let target = Rat::new(num.clone(), den.clone());
    let consider = |p: &BigInt, q: &BigInt, best: &mut Option<Rat>| {
        if q.is_zero() || q > &max_den {
            return;
        }
        let cand = Rat::new(p.clone(), q.clone());
        let better = match best {
            None => true,
            Some(b) => (&cand - &target).abs() < (b.clone() - &target).abs(),
        };
        if better {
            *best = Some(cand);
        }
    };
    consider(&p1, &q1, &mut best);
    while !rem.is_zero() {
        num = den;
        den = rem;
        let a = &num / &den;
        rem = &num - &a * &den;
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > max_den {
            // Best semiconvergent: largest t with q0 + t*q1 <= max_den.
            let t = (&max_den - &q0) / &q1;
            if t > BigInt::zero() {
                let ps = &p0 + &t * &p1;
                let qs = &q0 + &t * &q1;
                consider(&ps, &qs, &mut best);
            }
            break;
        }
        consider(&p2, &q2, &mut best);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    let b = best.unwrap_or_else(|| Rat::zero());
    if neg {
        -b
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rat("-2/6").unwrap(), rat(-1, 3));
        assert_eq!(parse_rat("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rat("0.2319").unwrap(), rat(2319, 10000));
        assert_eq!(parse_rat("-0.25").unwrap(), rat(-1, 4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal_string(&rat(1, 4), 6), "0.25");
        assert_eq!(decimal_string(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal_string(&rat(-3, 2), 4), "-1.5");
        assert_eq!(decimal_string(&rat(0, 1), 4), "0");
    }

    #[test]
    fn rounding_examples() {
        assert_eq!(best_rational_approx(1.0 / 3.0, 10).unwrap(), rat(1, 3));
        assert_eq!(best_rational_approx(0.3333333333, 10).unwrap(), rat(1, 3));
        assert_eq!(best_rational_approx(0.0000001, 10).unwrap(), rat(0, 1));
        assert_eq!(best_rational_approx(-2.0 / 3.0, 100).unwrap(), rat(-2, 3));
        assert_eq!(best_rational_approx(0.25, 100).unwrap(), rat(1, 4));
    }

    #[test]
    fn rounding_is_optimal_brute_force() {
        // Against exhaustive search over all denominators <= 40.
        let samples = [0.1234, 0.718281828, 0.5772, 3.14159265, 0.9999, 0.431];
        for &x in &samples {
            let got = best_rational_approx(x, 40).unwrap();
            let exact = Rat::from_float(x).unwrap();
            let mut best: Option<Rat> = None;
            for q in 1..=40i64 {
                let p = (x * q as f64).round() as i64;
                for dp in -1..=1 {
                    let cand = rat(p + dp, q);
                    let better = match &best {
                        None => true,
                        Some(b) => (&cand - &exact).abs() < (b - &exact).abs(),
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
            let best = best.unwrap();
            assert_eq!(
                (&got - &exact).abs(),
                (&best - &exact).abs(),
                "x={x} got {got} brute {best}"
            );
        }
    }
}
