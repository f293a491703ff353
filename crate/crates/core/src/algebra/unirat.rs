//! Univariate rational functions in lowest terms.

use std::fmt;

use num_rational::BigRational;

use super::ring::{impl_ring_ops, Ring};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic; equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniRat {
    num: UniPoly,
    den: UniPoly,
}

impl UniRat {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(UniPoly::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading().unwrap().clone();
        if lc != BigRational::one() {
            let inv = lc.recip();
            num = num.scaled(&inv);
            den = den.scaled(&inv);
        }
        UniRat { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        UniRat {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// `x^k` for any integer `k`.
    pub fn power_of_var(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(UniPoly::monomial(k as usize, BigRational::one()))
        } else {
            UniRat {
                num: UniPoly::one(),
                den: UniPoly::monomial((-k) as usize, BigRational::one()),
            }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<UniPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.times(&base);
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole {
                den: self.den.to_string(),
                point: x.to_string(),
            });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Substitutes `x -> 1/x`.
    pub fn invert_variable(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        let r = Self::reduce(self.num.reversed(), self.den.reversed());
        r.times(&Self::power_of_var(dd - dn))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.fmt_var(var)
        } else {
            format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
        }
    }
}

impl Ring for UniRat {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let a = self.den.exact_div(&g).unwrap();
        let b = other.den.exact_div(&g).unwrap();
        Self::reduce(&(&self.num * &b) + &(&other.num * &a), &a * &other.den)
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = other.den.exact_div(&g1).unwrap();
        let n2 = other.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().unwrap().recip();
        UniRat {
            num: num.scaled(&lc),
            den: den.scaled(&lc),
        }
    }
    fn negated(&self) -> Self {
        UniRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_rational(c: &BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c.clone()))
    }
    fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniRat {
            num: self.num.scaled(c),
            den: self.den.clone(),
        }
    }
    fn num_den_strings(&self) -> (String, String) {
        (self.num.to_string(), self.den.to_string())
    }
}

impl_ring_ops!(UniRat);

impl From<UniPoly> for UniRat {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for UniRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("q"))
    }
}

impl fmt::Debug for UniRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniRat({self})")
    }
}
