//! Scalar abstraction shared by the exact (rational) and floating-point code paths.

use num_traits::{Num, Signed};
use std::fmt::{Debug, Display};

/// Number types our linear algebra and flow routines run over.
///
/// Satisfied by `BigRational` (exact decisions) and by `f32`/`f64`
/// (geometric realization). Comparisons must be total on the values
/// actually produced; NaN is the caller's bug.
pub trait Scalar: Num + Signed + PartialOrd + Clone + Debug + Display {}

impl<T: Num + Signed + PartialOrd + Clone + Debug + Display> Scalar for T {}

/// The scalar representing a nonnegative count, via binary expansion.
pub fn from_count<S: Scalar>(n: usize) -> S {
    let mut result = S::zero();
    let mut bit = S::one();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            result = result + bit.clone();
        }
        n >>= 1;
        bit = bit.clone() + bit;
    }
    result
}

/// Slack under which a numeric feasibility verdict treats a residual as
/// zero: exactly zero for exact scalars, a few orders of magnitude above
/// pivoting roundoff for the machine floats. Exact arithmetic must never
/// be loosened and float arithmetic must never be trusted to the last bit,
/// so the cutoff is a property of the scalar type.
pub fn verdict_slack<S: Scalar + 'static>() -> S {
    use std::any::TypeId;
    let t = TypeId::of::<S>();
    if t == TypeId::of::<f64>() {
        S::one() / from_count(1 << 36)
    } else if t == TypeId::of::<f32>() {
        S::one() / from_count(1 << 18)
    } else {
        S::zero()
    }
}

/// Shorthand for an exact fraction; panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> crate::Rational {
    crate::Rational::new(num.into(), den.into())
}

/// Least common multiple of the denominators of the given values.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a crate::Rational>>(
    values: I,
) -> num_bigint::BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(num_bigint::BigInt::from(1), |acc, v| acc.lcm(v.denom()))
}
