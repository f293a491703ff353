use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with rational scalars, used as the coefficient type of
/// symmetric functions and operator-calculus elements.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(c: &BigRational) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn scaled(&self, c: &BigRational) -> Self {
        self.times(&Self::from_rational(c))
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    /// Numerator and denominator in canonical string form.
    fn num_den_strings(&self) -> (String, String);
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(c: &BigRational) -> Self {
        c.clone()
    }
    fn num_den_strings(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

/// Implements the std operator traits (owned and by-reference) for a type that
/// already implements [`Ring`].
macro_rules! impl_ring_ops {
    ($t:ty) => {
        impl std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::plus(self, rhs)
            }
        }
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::algebra::Ring::plus(&self, &rhs)
            }
        }
        impl std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::minus(self, rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::algebra::Ring::minus(&self, &rhs)
            }
        }
        impl std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::times(self, rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::algebra::Ring::times(&self, &rhs)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::negated(self)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::negated(&self)
            }
        }
    };
}

pub(crate) use impl_ring_ops;

/// Formats a rational number for use as a coefficient in a polynomial string.
pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Appends a term `c*mono` to a polynomial string, handling signs and unit
/// coefficients. `mono` is empty for the constant term.
pub(crate) fn push_term(out: &mut String, c: &BigRational, mono: &str) {
    let negative = c < &<BigRational as Zero>::zero();
    let abs = if negative { -c.clone() } else { c.clone() };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push(if negative { '-' } else { '+' });
    }
    if mono.is_empty() {
        out.push_str(&fmt_rational(&abs));
    } else if abs.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&fmt_rational(&abs));
        out.push('*');
        out.push_str(mono);
    }
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
