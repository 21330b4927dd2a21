//! Exact rational scalars. No floating point anywhere in the kernel.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, positive denominator.
/// `BigRational` maintains both invariants on construction.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// Parses `"3/2"`, `"-1"`, `"7"`. Fraction strings use decimal integers.
pub fn parse(s: &str) -> Result<Scalar> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| Error::InvalidInput(format!("bad rational `{s}`: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3/2", "-1/2", "7", "-7", "0"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse("4/6").unwrap().to_string(), "2/3");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(4), int(24));
    }
}
