//! Sparse polynomials in `q` and `t` over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::ring::{impl_ring_ops, push_term, Ring};
use super::unipoly::UniPoly;

/// Map from `(deg_q, deg_t)` to a nonzero coefficient.
///
/// Keys are ordered lexicographically with `q` dominant, which is also the
/// monomial order used by [`BiPoly::exact_div`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn monomial(dq: u32, dt: u32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dq, dt), c);
        }
        BiPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    /// `q^a t^b`.
    pub fn qt(a: u32, b: u32) -> Self {
        Self::monomial(a, b, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in iter {
            p.add_term(k, c);
        }
        p
    }

    /// Embeds a polynomial in `q`.
    pub fn from_q_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((k as u32, 0), c.clone())),
        )
    }

    /// Embeds a polynomial in `t`.
    pub fn from_t_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        )
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, dq: u32, dt: u32) -> BigRational {
        self.terms
            .get(&(dq, dt))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.coeff(0, 0))
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn involves_t(&self) -> bool {
        self.terms.keys().any(|k| k.1 > 0)
    }

    pub fn involves_q(&self) -> bool {
        self.terms.keys().any(|k| k.0 > 0)
    }

    /// Leading term in the `q`-dominant lexicographic order.
    pub fn leading(&self) -> Option<(&(u32, u32), &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Largest monomial `q^a t^b` dividing every term.
    pub fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (a, b)
    }

    /// Divides by `q^a t^b`; every term must be divisible.
    pub fn div_monomial(&self, a: u32, b: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i - a, j - b), c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        self.eval_q(q).eval(t)
    }

    /// Substitutes `q = q0`, leaving a polynomial in `t`.
    pub fn eval_q(&self, q0: &BigRational) -> UniPoly {
        let mut coeffs = vec![BigRational::zero(); self.degree_t() as usize + 1];
        let powers = powers(q0, self.degree_q());
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize] += c * &powers[i as usize];
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitutes `t = t0`, leaving a polynomial in `q`.
    pub fn eval_t(&self, t0: &BigRational) -> UniPoly {
        self.swap_qt().eval_q(t0)
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Polynomial in `q` if `t` does not occur.
    pub fn as_q_poly(&self) -> Option<UniPoly> {
        if self.involves_t() {
            return None;
        }
        Some(self.eval_q_free())
    }

    fn eval_q_free(&self) -> UniPoly {
        let mut coeffs = vec![BigRational::zero(); self.degree_q() as usize + 1];
        for (&(i, _), c) in &self.terms {
            coeffs[i as usize] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (&(dq, dt), dc) = divisor.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (a, b) = self.monomial_content();
            if a < dq || b < dt {
                return None;
            }
            let inv = dc.recip();
            return Some(BiPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(&(i, j), c)| ((i - dq, j - dt), c * &inv))
                    .collect(),
            });
        }
        let max_t = self.degree_t();
        if self.degree_q() < divisor.degree_q() || max_t < divisor.degree_t() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(rq, rt), rc)) = rem.leading() {
            // The remainder stays a multiple of the divisor while the division
            // is exact, so its t-degree can never exceed that of `self`.
            if rq < dq || rt < dt || rt > max_t {
                return None;
            }
            let c = rc / dc;
            let (sq, st) = (rq - dq, rt - dt);
            for (&(i, j), dcoef) in &divisor.terms {
                rem.add_term((i + sq, j + st), -(&c * dcoef));
            }
            quot.add_term((sq, st), c);
        }
        Some(quot)
    }

    /// Canonical string: terms by descending `q` degree, then descending `t`
    /// degree.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut mono = String::new();
            match i {
                0 => {}
                1 => mono.push('q'),
                _ => mono.push_str(&format!("q^{i}")),
            }
            if j > 0 {
                if !mono.is_empty() {
                    mono.push('*');
                }
                if j == 1 {
                    mono.push('t');
                } else {
                    mono.push_str(&format!("t^{j}"));
                }
            }
            push_term(&mut out, c, &mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn powers(x: &BigRational, max: u32) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = BigRational::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc *= x;
    }
    out
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
    fn from_rational(c: &BigRational) -> Self {
        Self::constant(c.clone())
    }
    fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }
    fn num_den_strings(&self) -> (String, String) {
        (self.canonical(), "1".to_string())
    }
}

impl_ring_ops!(BiPoly);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
