//! Exact rational scalars and the small combinatorial helpers used
//! throughout the crate.

use num::BigInt;
use num::One;

/// Arbitrary-precision rational number, always stored reduced (gcd 1,
/// positive denominator, zero as 0/1).
pub type Rational = num::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational; `d` must be nonzero.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient C(n, k) as a rational.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return rat(0);
    }
    Rational::from_integer(num::integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// n! as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// (-1)^n.
pub fn neg_one_pow(n: u64) -> Rational {
    if n.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}
