//! Arbitrary-precision rational numbers.
//!
//! `Rat` is `num_rational::BigRational`, which already maintains the
//! canonical form we need: reduced fraction, positive denominator, zero
//! stored as 0/1.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer square root test.
fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Does `r` have a rational square root?
pub fn is_square_rational(r: &Rat) -> bool {
    rat_sqrt(r).is_some()
}

/// Exact rational square root, if one exists.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_zero() {
        return Some(Rat::zero());
    }
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

/// Canonical `a` or `a/b` rendering, matching the shared text grammar.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_detection() {
        assert!(is_square_rational(&rat(4, 9)));
        assert!(!is_square_rational(&rat(-4, 1)));
        assert!(!is_square_rational(&rat(2, 1)));
        assert!(is_square_rational(&Rat::zero()));
        assert_eq!(rat_sqrt(&rat(49, 64)), Some(rat(7, 8)));
    }

    #[test]
    fn canonical_form() {
        let r = Rat::new(BigInt::from(2), BigInt::from(-4));
        assert_eq!(rat_to_string(&r), "-1/2");
    }
}
