//! Rational functions in `q` and `t`.
//!
//! Values are kept unreduced apart from opportunistic cancellation: shared
//! monomial factors, constant normalization, and whole-polynomial divisibility
//! between numerator and denominator. Equality is decided by
//! cross-multiplication, so correctness never depends on how much was
//! cancelled.

use std::fmt;

use num_rational::BigRational;

use serde::Serialize;

use super::bipoly::BiPoly;
use super::ring::{impl_ring_ops, Ring};
use super::unirat::UniRat;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

/// Serialized form `{"num": "...", "den": "..."}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumDen {
    pub num: String,
    pub den: String,
}

impl RatFunc {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(BiPoly::zero());
        }
        let (na, nb) = num.monomial_content();
        let (da, db) = den.monomial_content();
        let (a, b) = (na.min(da), nb.min(db));
        let (mut num, mut den) = if a > 0 || b > 0 {
            (num.div_monomial(a, b), den.div_monomial(a, b))
        } else {
            (num, den)
        };
        if let Some(c) = den.constant_value() {
            return Self::from_poly(num.scaled(&c.recip()));
        }
        if let Some(quot) = num.exact_div(&den) {
            return Self::from_poly(quot);
        }
        if let Some(quot) = den.exact_div(&num) {
            let lc = quot.leading().unwrap().1.recip();
            return RatFunc {
                num: BiPoly::constant(lc.clone()),
                den: quot.scaled(&lc),
            };
        }
        let lc = den.leading().unwrap().1.recip();
        if lc != BigRational::one() {
            num = num.scaled(&lc);
            den = den.scaled(&lc);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    /// `q^a t^b` for integer exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let num = BiPoly::qt(a.max(0) as u32, b.max(0) as u32);
        let den = BiPoly::qt((-a).max(0) as u32, (-b).max(0) as u32);
        RatFunc { num, den }
    }

    pub fn q() -> Self {
        Self::from_poly(BiPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(BiPoly::t())
    }

    /// Embeds a univariate rational function as a function of `q`.
    pub fn from_q_rat(f: &UniRat) -> Self {
        Self::normalize(BiPoly::from_q_poly(f.num()), BiPoly::from_q_poly(f.den()))
    }

    /// Embeds a univariate rational function as a function of `t`.
    pub fn from_t_rat(f: &UniRat) -> Self {
        Self::normalize(BiPoly::from_t_poly(f.num()), BiPoly::from_t_poly(f.den()))
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(Error::Pole {
                den: self.den.canonical(),
                point: format!("(q,t)=({q},{t})"),
            });
        }
        Ok(self.num.eval(q, t) / d)
    }

    /// Substitutes `q = q0`, giving a reduced rational function of `t`.
    pub fn eval_q(&self, q0: &BigRational) -> Result<UniRat> {
        UniRat::new(self.num.eval_q(q0), self.den.eval_q(q0)).map_err(|_| Error::Pole {
            den: self.den.canonical(),
            point: format!("q={q0}"),
        })
    }

    /// Substitutes `t = t0`, giving a reduced rational function of `q`.
    pub fn eval_t(&self, t0: &BigRational) -> Result<UniRat> {
        UniRat::new(self.num.eval_t(t0), self.den.eval_t(t0)).map_err(|_| Error::Pole {
            den: self.den.canonical(),
            point: format!("t={t0}"),
        })
    }

    /// Rational function of `q` alone, when `t` does not occur.
    pub fn as_q_rat(&self) -> Option<UniRat> {
        let n = self.num.as_q_poly()?;
        let d = self.den.as_q_poly()?;
        UniRat::new(n, d).ok()
    }

    pub fn swap_qt(&self) -> Self {
        RatFunc {
            num: self.num.swap_qt(),
            den: self.den.swap_qt(),
        }
    }

    pub fn to_num_den(&self) -> NumDen {
        NumDen {
            num: self.num.canonical(),
            den: self.den.canonical(),
        }
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(&self.num + &other.num, self.den.clone());
        }
        if let Some(k) = other.den.exact_div(&self.den) {
            return Self::normalize(&(&self.num * &k) + &other.num, other.den.clone());
        }
        if let Some(k) = self.den.exact_div(&other.den) {
            return Self::normalize(&self.num + &(&other.num * &k), self.den.clone());
        }
        Self::normalize(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (mut a, mut b) = (self.num.clone(), self.den.clone());
        let (mut c, mut d) = (other.num.clone(), other.den.clone());
        if !d.is_constant() {
            if let Some(k) = a.exact_div(&d) {
                a = k;
                d = BiPoly::one();
            }
        }
        if !b.is_constant() {
            if let Some(k) = c.exact_div(&b) {
                c = k;
                b = BiPoly::one();
            }
        }
        if !c.is_constant() {
            if let Some(k) = b.exact_div(&c) {
                b = k;
                c = BiPoly::one();
            }
        }
        if !a.is_constant() {
            if let Some(k) = d.exact_div(&a) {
                d = k;
                a = BiPoly::one();
            }
        }
        Self::normalize(&a * &c, &b * &d)
    }
    fn negated(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_rational(c: &BigRational) -> Self {
        Self::from_poly(BiPoly::constant(c.clone()))
    }
    fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scaled(c),
            den: self.den.clone(),
        }
    }
    fn num_den_strings(&self) -> (String, String) {
        (self.num.canonical(), self.den.canonical())
    }
}

impl_ring_ops!(RatFunc);

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<BiPoly> for RatFunc {
    fn from(p: BiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::rat;

    fn q_minus_t() -> BiPoly {
        &BiPoly::q() - &BiPoly::t()
    }

    #[test]
    fn inverse_pair() {
        let a = RatFunc::from_poly(q_minus_t());
        let b = RatFunc::new(BiPoly::one(), q_minus_t()).unwrap();
        assert_eq!(&a * &b, RatFunc::one());
        assert!((&a * &b).is_polynomial());
    }

    #[test]
    fn common_denominator() {
        let a = RatFunc::new(&BiPoly::one() - &BiPoly::t(), q_minus_t()).unwrap();
        let b = RatFunc::new(&BiPoly::q() - &BiPoly::one(), q_minus_t()).unwrap();
        let s = &a + &b;
        assert_eq!(s, RatFunc::one());
        assert_eq!(s.den(), &BiPoly::one());
    }

    #[test]
    fn cross_multiplication_equality() {
        let one_minus_q2 = &BiPoly::one() - &BiPoly::qt(2, 0);
        let one_minus_q = &BiPoly::one() - &BiPoly::q();
        let f = RatFunc {
            num: one_minus_q2,
            den: one_minus_q,
        };
        let g = RatFunc::from_poly(&BiPoly::one() + &BiPoly::q());
        assert_eq!(f, g);
    }

    #[test]
    fn eval_and_poles() {
        let f = RatFunc::new(&BiPoly::one() - &BiPoly::t(), q_minus_t()).unwrap();
        assert_eq!(
            f.eval(&rat(2), &rat(0)).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(RatFunc::one().eval(&rat(5), &rat(7)).unwrap(), rat(1));
        let pole = RatFunc::new(BiPoly::one(), q_minus_t()).unwrap();
        match pole.eval(&rat(3), &rat(3)) {
            Err(Error::Pole { den, .. }) => assert_eq!(den, "q-t"),
            other => panic!("expected pole, got {other:?}"),
        }
        // (q-t)/(q-t) cancels on construction, so the 0/0 point is harmless.
        let unit = RatFunc::new(q_minus_t(), q_minus_t()).unwrap();
        assert_eq!(unit.eval(&rat(3), &rat(3)).unwrap(), rat(1));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RatFunc::one().div(&RatFunc::zero()).unwrap_err(),
            Error::DivisionByZero
        );
        assert!(RatFunc::new(BiPoly::one(), BiPoly::zero()).is_err());
    }

    #[test]
    fn monomial_negative_exponents() {
        let f = RatFunc::monomial(-2, 1);
        assert_eq!(
            f.eval(&rat(2), &rat(3)).unwrap(),
            BigRational::new(3.into(), 4.into())
        );
        assert_eq!(&f * &RatFunc::monomial(2, -1), RatFunc::one());
    }
}
