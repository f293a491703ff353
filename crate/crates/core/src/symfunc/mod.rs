//! Degree-truncated symmetric functions with coefficients in a [`Ring`].
//!
//! Every conversion and every plethystic substitution routes through the
//! power-sum basis, where the substitutions used here are diagonal.

mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Ring;
use crate::error::Result;
use crate::partitions::Partition;

pub use tables::MAX_DEGREE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// monomial
    M,
    /// elementary
    E,
    /// complete homogeneous
    H,
    /// power sum
    P,
    /// Schur
    S,
}

impl Basis {
    pub fn symbol(&self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `Σ_λ c_λ b_λ` over partitions with `|λ| <= degree_cap`, in basis `b`.
/// Zero coefficients are never stored.
#[derive(Clone)]
pub struct SymFunc<C: Ring> {
    basis: Basis,
    degree_cap: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> SymFunc<C> {
    /// # Panics
    /// If `degree_cap` exceeds [`MAX_DEGREE`].
    pub fn zero(basis: Basis, degree_cap: usize) -> Self {
        assert!(
            degree_cap <= MAX_DEGREE,
            "degree cap {degree_cap} > {MAX_DEGREE}"
        );
        SymFunc {
            basis,
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis, degree_cap: usize) -> Self {
        Self::basis_element(basis, Partition::empty(), degree_cap)
    }

    /// The single basis element `b_λ` (zero if `|λ|` exceeds the cap).
    pub fn basis_element(basis: Basis, lambda: Partition, degree_cap: usize) -> Self {
        Self::from_terms(basis, degree_cap, [(lambda, C::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(
        basis: Basis,
        degree_cap: usize,
        terms: I,
    ) -> Self {
        let mut f = Self::zero(basis, degree_cap);
        for (l, c) in terms {
            f.add_term(l, &c);
        }
        f
    }

    /// Same terms under a new cap; terms above the new cap are dropped.
    pub fn with_degree_cap(&self, degree_cap: usize) -> Self {
        Self::from_terms(self.basis, degree_cap, self.terms.clone())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every stored term has degree exactly `d`.
    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|l| l.size() == d)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &C) {
        if lambda.size() > self.degree_cap || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get().plus(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        SymFunc::from_terms(
            self.basis,
            self.degree_cap,
            self.terms.iter().map(|(l, c)| (l.clone(), f(c))),
        )
    }

    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymFunc<D>> {
        let mut out = SymFunc::zero(self.basis, self.degree_cap);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|a| a.times(c))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.map_coeffs(|a| a.scaled(c))
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|a| a.negated())
    }

    /// Sum; the result is expressed in `self`'s basis.
    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        out.degree_cap = self.degree_cap.min(other.degree_cap);
        out.terms.retain(|l, _| l.size() <= out.degree_cap);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Re-expresses the same element in `target`.
    pub fn to_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let in_p = self.to_p();
        if target == Basis::P {
            return in_p;
        }
        let mut out = Self::zero(target, self.degree_cap);
        for (l, c) in &in_p.terms {
            let t = tables::tables(l.size());
            let row = &t.p_in(target).unwrap()[t.index[l]];
            for (j, s) in row {
                out.add_term(t.partitions[*j].clone(), &c.scaled(s));
            }
        }
        out
    }

    fn to_p(&self) -> Self {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut out = Self::zero(Basis::P, self.degree_cap);
        for (l, c) in &self.terms {
            let t = tables::tables(l.size());
            let row = &t.to_p(self.basis).unwrap()[t.index[l]];
            for (j, s) in row {
                out.add_term(t.partitions[*j].clone(), &c.scaled(s));
            }
        }
        out
    }

    /// Product truncated at the shared degree cap, in `self`'s basis.
    ///
    /// # Panics
    /// If the degree caps differ.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree_cap, other.degree_cap, "degree caps differ");
        let a = self.to_p();
        let b = other.to_p();
        let mut out = Self::zero(Basis::P, self.degree_cap);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                if la.size() + lb.size() <= self.degree_cap {
                    out.add_term(la.union(lb), &ca.times(cb));
                }
            }
        }
        out.to_basis(self.basis)
    }

    /// Plethystic substitution acting diagonally on power sums:
    /// `p_k -> c(k) p_k`.
    ///
    /// `c(k) = q^k - 1` realizes `X -> (q-1)X`, `c(k) = 1/(1-q^k)` realizes
    /// `X -> X/(1-q)` and `c(k) = -1` realizes `X -> -X`.
    pub fn plethysm_scale(&self, c: impl Fn(usize) -> Result<C>) -> Result<Self> {
        let in_p = self.to_p();
        let mut cache: Vec<Option<C>> = vec![None; self.degree_cap + 1];
        let mut out = Self::zero(Basis::P, self.degree_cap);
        for (l, coeff) in &in_p.terms {
            let mut v = coeff.clone();
            for &k in l.parts() {
                if cache[k].is_none() {
                    cache[k] = Some(c(k)?);
                }
                v = v.times(cache[k].as_ref().unwrap());
            }
            out.add_term(l.clone(), &v);
        }
        Ok(out.to_basis(self.basis))
    }

    /// `F[-1]`: every power sum evaluates to -1.
    pub fn eval_at_minus_one(&self) -> C {
        let in_p = self.to_p();
        in_p.terms.iter().fold(C::zero(), |acc, (l, c)| {
            if l.len() % 2 == 0 {
                acc.plus(c)
            } else {
                acc.minus(c)
            }
        })
    }

    /// The involution `p_k -> (-1)^{k-1} p_k`.
    pub fn omega(&self) -> Self {
        self.plethysm_scale(|k| {
            Ok(if k % 2 == 1 {
                C::one()
            } else {
                C::one().negated()
            })
        })
        .expect("sign twist has no poles")
    }

    /// Keeps only the homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        let mut out = self.clone();
        out.terms.retain(|l, _| l.size() == d);
        out
    }

    /// JSON document `{"basis", "degree", "terms": [{"partition", "coeff": {"num", "den"}}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let (num, den) = c.num_den_strings();
                json!({"partition": l, "coeff": {"num": num, "den": den}})
            })
            .collect();
        json!({
            "basis": self.basis.symbol(),
            "degree": self.degree_cap,
            "terms": terms,
        })
    }
}

impl<C: Ring> PartialEq for SymFunc<C> {
    /// Equality of the underlying elements, regardless of basis.
    fn eq(&self, other: &Self) -> bool {
        let cap = self.degree_cap.min(other.degree_cap);
        let other = other.to_basis(self.basis);
        let a = self.terms.iter().filter(|(l, _)| l.size() <= cap);
        let b = other.terms.iter().filter(|(l, _)| l.size() <= cap);
        a.eq(b)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){}{l}", self.basis)?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}; cap {}]{{", self.basis, self.degree_cap)?;
        for (l, c) in &self.terms {
            write!(f, " {l}: {c:?};")?;
        }
        f.write_str(" }")
    }
}
