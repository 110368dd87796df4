use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` reduced.  Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `"p"` for integers, otherwise `"p/q"` with `q > 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parse a canonical rational literal.
///
/// Only the exact strings produced by [`format_rational`] are accepted, so
/// `"2/4"`, `"+1"`, `"1/1"`, `"-0"` and `" 3"` are all rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::NonCanonicalRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    let r = Rational::new(num, den);
    if r.to_string() != s {
        return Err(bad());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("17").unwrap(), int(17));
    }

    #[test]
    fn rejects_non_canonical() {
        for s in ["2/4", "+1", "1/1", "-0", " 3", "3/-2", "1/0", "", "a", "0/5", "1.5"] {
            assert!(parse_rational(s).is_err(), "{s:?} accepted");
        }
    }
}
