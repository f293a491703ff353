//! Products of binomials `q^a t^b - q^c t^d`, kept in factored form.
//!
//! Every such binomial is a monomial times a product of irreducible factors
//! `Φ_d(q^a t^b)` or the homogenized `Y^{φ(d)} Φ_d(X/Y)` with `X = q^a`,
//! `Y = t^b`, where `Φ_d` is the `d`-th cyclotomic polynomial and
//! `gcd(a, b) = 1`. Products and quotients then only add exponents, and sums
//! are taken over the least common denominator of the irreducible factors.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_rational::BigRational;

use super::bipoly::BiPoly;
use super::ratfunc::RatFunc;
use super::ring::{rat, Ring};
use super::unipoly::UniPoly;
use super::unirat::UniRat;
use crate::error::{Error, Result};

/// An irreducible factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Irreducible {
    /// `Φ_d(q^a t^b)`, `gcd(a, b) = 1`.
    Mono { d: u32, a: u32, b: u32 },
    /// `t^{bφ(d)} Φ_d(q^a / t^b)`, `a, b >= 1` coprime.
    Diff { d: u32, a: u32, b: u32 },
}

/// `c · q^α t^β · Π f^k`, or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factored {
    coeff: BigRational,
    mono: (i64, i64),
    factors: BTreeMap<Irreducible, i32>,
}

fn cyclotomic(d: u32) -> UniPoly {
    static CACHE: OnceLock<Mutex<HashMap<u32, UniPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = &UniPoly::monomial(d as usize, rat(1)) - &UniPoly::one();
    for k in (1..d).filter(|k| d.is_multiple_of(*k)) {
        p = p.exact_div(&cyclotomic(k)).expect("cyclotomic divisor");
    }
    cache.lock().unwrap().insert(d, p.clone());
    p
}

fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| k.gcd(&d) == 1).count() as u32
}

impl Irreducible {
    pub fn poly(&self) -> BiPoly {
        match *self {
            Irreducible::Mono { d, a, b } => BiPoly::from_terms(
                cyclotomic(d)
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| ((a * k as u32, b * k as u32), c.clone())),
            ),
            Irreducible::Diff { d, a, b } => {
                let phi = euler_phi(d);
                BiPoly::from_terms(
                    cyclotomic(d)
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| ((a * k as u32, b * (phi - k as u32)), c.clone())),
                )
            }
        }
    }

    /// Value at `q = q0` as a polynomial in `t`.
    fn eval_q(&self, q0: &BigRational) -> UniPoly {
        self.poly().eval_q(q0)
    }
}

impl Factored {
    pub fn one() -> Self {
        Factored {
            coeff: rat(1),
            mono: (0, 0),
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Factored {
            coeff: rat(0),
            mono: (0, 0),
            factors: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Factored {
            coeff: c,
            ..Self::one()
        }
    }

    /// `q^a t^b` for integer exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        Factored {
            mono: (a, b),
            ..Self::one()
        }
    }

    /// `q^{a1} t^{b1} - q^{a2} t^{b2}`.
    pub fn binomial(m1: (u32, u32), m2: (u32, u32)) -> Self {
        if m1 == m2 {
            return Self::zero();
        }
        let (da, db) = (m1.0 as i64 - m2.0 as i64, m1.1 as i64 - m2.1 as i64);
        // Reduce to sign · monomial · (Z^g - 1) or sign · monomial · (X^g - Y^g).
        let (sign, mono, da, db) = if da >= 0 && db >= 0 {
            (1, m2, da, db)
        } else if da <= 0 && db <= 0 {
            (-1, m1, -da, -db)
        } else if da > 0 {
            (1, (m2.0, m1.1), da, db)
        } else {
            (-1, (m1.0, m2.1), -da, -db)
        };
        let mut out = Factored {
            coeff: rat(sign),
            mono: (mono.0 as i64, mono.1 as i64),
            factors: BTreeMap::new(),
        };
        let g = (da.unsigned_abs() as u32).gcd(&(db.unsigned_abs() as u32));
        let (a, b) = (da.unsigned_abs() as u32 / g, db.unsigned_abs() as u32 / g);
        for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
            let f = if db >= 0 {
                Irreducible::Mono { d, a, b }
            } else {
                Irreducible::Diff { d, a, b }
            };
            out.factors.insert(f, 1);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn factors(&self) -> &BTreeMap<Irreducible, i32> {
        &self.factors
    }

    pub fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut factors = self.factors.clone();
        for (f, k) in &other.factors {
            let e = factors.entry(*f).or_insert(0);
            *e += k;
            if *e == 0 {
                factors.remove(f);
            }
        }
        Factored {
            coeff: &self.coeff * &other.coeff,
            mono: (self.mono.0 + other.mono.0, self.mono.1 + other.mono.1),
            factors,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Factored {
            coeff: self.coeff.recip(),
            mono: (-self.mono.0, -self.mono.1),
            factors: self.factors.iter().map(|(f, k)| (*f, -k)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inv()?))
    }

    /// Expanded numerator and denominator.
    pub fn to_ratfunc(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let mut num = BiPoly::constant(self.coeff.clone());
        let mut den = BiPoly::one();
        for (f, &k) in &self.factors {
            let p = f.poly().pow(k.unsigned_abs());
            if k > 0 {
                num = num.times(&p);
            } else {
                den = den.times(&p);
            }
        }
        let (a, b) = self.mono;
        num = num.mul_monomial(a.max(0) as u32, b.max(0) as u32);
        den = den.mul_monomial((-a).max(0) as u32, (-b).max(0) as u32);
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// Specialization `q = q0` as a reduced rational function of `t`.
    pub fn eval_q(&self, q0: &BigRational) -> Result<UniRat> {
        if self.is_zero() {
            return Ok(UniRat::zero());
        }
        let mut num = UniPoly::constant(self.coeff.clone());
        let mut den = UniPoly::one();
        for (f, &k) in &self.factors {
            let p = f.eval_q(q0).pow(k.unsigned_abs());
            if k > 0 {
                num = num.times(&p);
            } else {
                den = den.times(&p);
            }
        }
        let qa = pow_int(q0, self.mono.0)?;
        let tb = UniRat::power_of_var(self.mono.1);
        let base = UniRat::new(num.scaled(&qa), den)?;
        Ok(base.times(&tb))
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        self.eval_q(q0)?.eval(t0)
    }
}

fn pow_int(x: &BigRational, k: i64) -> Result<BigRational> {
    if k < 0 && x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = rat(1);
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    Ok(if k < 0 { acc.recip() } else { acc })
}

/// `Σ_k terms[k]` over the least common denominator, with every irreducible
/// factor of the denominator cancelled as far as the numerator allows.
pub fn sum_factored(terms: &[Factored]) -> RatFunc {
    let terms: Vec<&Factored> = terms.iter().filter(|f| !f.is_zero()).collect();
    if terms.is_empty() {
        return RatFunc::zero();
    }
    let mut lcd: BTreeMap<Irreducible, u32> = BTreeMap::new();
    for t in &terms {
        for (f, &k) in &t.factors {
            if k < 0 {
                let e = lcd.entry(*f).or_insert(0);
                *e = (*e).max(k.unsigned_abs());
            }
        }
    }
    let min_a = terms.iter().map(|t| t.mono.0).min().unwrap();
    let min_b = terms.iter().map(|t| t.mono.1).min().unwrap();
    let polys: BTreeMap<Irreducible, BiPoly> = terms
        .iter()
        .flat_map(|t| t.factors.keys())
        .map(|f| (*f, f.poly()))
        .collect();

    let mut num = BiPoly::zero();
    for t in &terms {
        let mut p = BiPoly::monomial(
            (t.mono.0 - min_a) as u32,
            (t.mono.1 - min_b) as u32,
            t.coeff.clone(),
        );
        let mut exps: BTreeMap<Irreducible, i64> =
            lcd.iter().map(|(f, &k)| (*f, k as i64)).collect();
        for (f, &k) in &t.factors {
            *exps.entry(*f).or_insert(0) += k as i64;
        }
        for (f, k) in exps {
            debug_assert!(k >= 0);
            if k > 0 {
                p = p.times(&polys[&f].pow(k as u32));
            }
        }
        num = num.plus(&p);
    }
    if num.is_zero() {
        return RatFunc::zero();
    }
    let mut den = BiPoly::one();
    for (f, mut k) in lcd {
        let p = &polys[&f];
        while k > 0 {
            match num.exact_div(p) {
                Some(quot) => {
                    num = quot;
                    k -= 1;
                }
                None => break,
            }
        }
        den = den.times(&p.pow(k));
    }
    num = num.mul_monomial(min_a.max(0) as u32, min_b.max(0) as u32);
    den = den.mul_monomial((-min_a).max(0) as u32, (-min_b).max(0) as u32);
    RatFunc::new(num, den).expect("nonzero denominator")
}
