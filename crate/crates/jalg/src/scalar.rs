//! Exact scalars: arbitrary-precision rationals in canonical form.
//!
//! Everything the engine decides (identities, lattices, annihilators,
//! classification) is decided over `Rat`. Floating point appears only in
//! [`crate::floatmode`], for spectral splits with irrational roots.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Canonical exact rational: reduced fraction with positive denominator.
/// `Display` prints `p/q`, or just `p` when the denominator is one, which is
/// exactly the wire format used by the structure-constant files.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn half() -> Rat {
    ratio(1, 2)
}

/// Parse the `p/q` wire form. Accepts a bare integer as well.
pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.trim().parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Lossy conversion for the float lane.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Exact when the parts fit in i64, which covers every scalar the float
    // lane actually sees; fall back to string parsing otherwise.
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let digits = 30usize;
            let scale = BigInt::from(10u32).pow(digits as u32);
            let scaled = num * &scale / den;
            let sign = if scaled.is_negative() { -1.0 } else { 1.0 };
            let mag: f64 = scaled.abs().to_string().parse().unwrap_or(f64::INFINITY);
            sign * mag / 10f64.powi(digits as i32)
        }
    }
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn canonical_form() {
        assert_eq!(parse_rat("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("3/-6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(rat_to_f64(&ratio(1, 2)), 0.5);
        assert!((rat_to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
