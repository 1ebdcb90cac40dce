//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate runs over `Rat`, an arbitrary
//! precision rational. The canonical text form is `p/q` with `q > 0` and
//! `gcd(|p|, q) = 1`; integers print without the `/q` part.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Rat = BigRational;

/// Error from [`parse_rat`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidRational {
    pub text: String,
}

impl fmt::Display for InvalidRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.text)
    }
}

impl std::error::Error for InvalidRational {}

/// Parse `p` or `p/q` into a reduced rational with positive denominator.
///
/// Accepts non-canonical input (`"4/6"`, `"1/-2"`) and normalizes it.
pub fn parse_rat(text: &str) -> Result<Rat, InvalidRational> {
    let err = || InvalidRational {
        text: text.to_owned(),
    };
    let s = text.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(num_s.trim()).map_err(|_| err())?;
    let denom = BigInt::from_str(den_s.trim()).map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(numer, denom))
}

/// Canonical `p/q` form (`Display` of `BigRational` already reduces and
/// drops a unit denominator).
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// Shorthand for an integer rational, mostly used in tests and the corpus.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rat("4/6").unwrap(), parse_rat("2/3").unwrap());
        assert_eq!(rat_to_string(&parse_rat("1/-2").unwrap()), "-1/2");
        assert_eq!(rat_to_string(&parse_rat("-7").unwrap()), "-7");
        assert_eq!(rat_to_string(&parse_rat("0/5").unwrap()), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/2").is_err());
        assert!(parse_rat("1.5").is_err());
    }
}
