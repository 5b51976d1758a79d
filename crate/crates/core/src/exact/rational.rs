use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d`. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |msg: &str| Error::Syntax {
        pos: 0,
        msg: format!("{msg} in rational `{text}`"),
    };
    if s.is_empty() {
        return Err(bad("empty input"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list such as `-4/5,1/5,1/5`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

pub fn is_positive_integer(q: &Rational) -> bool {
    q.is_integer() && q.is_positive()
}

/// Representative of `q` modulo 1 in `[0, 1)`.
pub fn frac_part(q: &Rational) -> Rational {
    let (n, d) = (q.numer(), q.denom());
    Rational::new(n.mod_floor(d), d.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -4/5 ").unwrap(), rat(-4, 5));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational("2/4").unwrap().to_string(), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            parse_rational_list("-4/5,1/5, 1/5").unwrap(),
            vec![rat(-4, 5), rat(1, 5), rat(1, 5)]
        );
    }

    #[test]
    fn fractional_parts() {
        assert_eq!(frac_part(&rat(-4, 5)), rat(1, 5));
        assert_eq!(frac_part(&rat(7, 5)), rat(2, 5));
        assert_eq!(frac_part(&rat(3, 1)), rat(0, 1));
        assert!(is_positive_integer(&rat(1, 1)));
        assert!(!is_positive_integer(&rat(0, 1)));
        assert!(!is_positive_integer(&rat(-1, 1)));
        assert!(!is_positive_integer(&rat(3, 2)));
    }
}
