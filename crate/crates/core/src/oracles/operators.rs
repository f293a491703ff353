//! The operators `d_+`, `d_-` and `T_i` on `V_k = Λ[X] ⊗ Q[y_1, ..., y_k]`.
//!
//! Elements are stored as `Σ c(q) y^a p_ρ[X]`. The power-sum basis makes the
//! plethystic shifts `X -> X ± (q-1) y` diagonal:
//! `p_m[X + (q-1)y] = p_m[X] + (q^m - 1) y^m`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{rational, BigRational, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::interval::{Hessenberg, Step};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc, MAX_DEGREE};

/// `Σ c(q) y^a p_ρ[X]` with `a` of length `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct VkElement {
    k: usize,
    terms: BTreeMap<(Vec<u32>, Partition), UniPoly>,
}

impl VkElement {
    pub fn zero(k: usize) -> Self {
        VkElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1 ∈ V_0`.
    pub fn one() -> Self {
        let mut out = Self::zero(0);
        out.add_term(Vec::new(), Partition::empty(), &UniPoly::one());
        out
    }

    /// The monomial `c · y^a p_ρ`.
    pub fn monomial(exponents: Vec<u32>, rho: Partition, c: UniPoly) -> Self {
        let mut out = Self::zero(exponents.len());
        out.add_term(exponents, rho, &c);
        out
    }

    /// A symmetric function (any basis) placed in `V_k`.
    pub fn from_symfunc(f: &SymFunc<UniPoly>, k: usize) -> Self {
        let mut out = Self::zero(k);
        for (rho, c) in f.to_basis(Basis::P).terms() {
            out.add_term(vec![0; k], rho.clone(), c);
        }
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<u32>, Partition), UniPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|a| + |ρ|` over stored terms.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|(a, rho)| a.iter().sum::<u32>() as usize + rho.size())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, rho: Partition, c: &UniPoly) {
        assert_eq!(exponents.len(), self.k, "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((exponents, rho)) {
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

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for ((a, rho), c) in &other.terms {
            out.add_term(a.clone(), rho.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &UniPoly) -> Self {
        let mut out = Self::zero(self.k);
        for ((a, rho), d) in &self.terms {
            out.add_term(a.clone(), rho.clone(), &d.times(c));
        }
        out
    }

    /// The element of `V_0` as a symmetric function in the power-sum basis.
    pub fn to_symfunc(&self, degree_cap: usize) -> Result<SymFunc<UniPoly>> {
        if self.k != 0 {
            return Err(Error::OperatorIndex {
                index: 0,
                vars: self.k,
            });
        }
        let degree = self.degree();
        if degree > degree_cap.min(MAX_DEGREE) {
            return Err(Error::DegreeTooLarge {
                degree,
                max: degree_cap.min(MAX_DEGREE),
            });
        }
        Ok(SymFunc::from_terms(
            Basis::P,
            degree_cap,
            self.terms
                .iter()
                .map(|((_, rho), c)| (rho.clone(), c.clone())),
        ))
    }

    /// `p_m -> p_m + sign (q^m - 1) y_j^m` for the last variable `y_j`.
    fn shift_last(&self, sign: i64) -> Self {
        let mut out = Self::zero(self.k);
        for ((a, rho), c) in &self.terms {
            // expand Π_{m ∈ ρ} (p_m + sign (q^m - 1) y^m)
            let mut partial: Vec<(Vec<usize>, u32, UniPoly)> = vec![(Vec::new(), 0, c.clone())];
            for &m in rho.parts() {
                let factor = qm_minus_one(m).scaled(&rational(sign));
                let mut next = Vec::with_capacity(partial.len() * 2);
                for (kept, ye, coeff) in partial {
                    let mut with_p = kept.clone();
                    with_p.push(m);
                    next.push((with_p, ye, coeff.clone()));
                    next.push((kept, ye + m as u32, coeff.times(&factor)));
                }
                partial = next;
            }
            for (kept, ye, coeff) in partial {
                let mut exps = a.clone();
                *exps.last_mut().expect("at least one y variable") += ye;
                out.add_term(exps, Partition::from_unsorted(kept), &coeff);
            }
        }
        out
    }
}

fn qm_minus_one(m: usize) -> UniPoly {
    &UniPoly::monomial(m, rational(1)) - &UniPoly::one()
}

/// Polynomial in `u = y_i`, `v = y_{i+1}`: `(deg_u, deg_v) -> c(q)`.
type UvPoly = BTreeMap<(u32, u32), UniPoly>;

fn uv_add(p: &mut UvPoly, key: (u32, u32), c: UniPoly) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(key).or_insert_with(UniPoly::zero);
    *e = e.plus(&c);
    if e.is_zero() {
        p.remove(&key);
    }
}

/// `T(u^a v^b) = ((q-1) u · u^a v^b + (v - q u) u^b v^a) / (v - u)`.
fn hecke_monomial(a: u32, b: u32, index: usize) -> Result<UvPoly> {
    let q = UniPoly::x();
    let mut num = UvPoly::new();
    uv_add(&mut num, (a + 1, b), &q - &UniPoly::one());
    uv_add(&mut num, (b, a + 1), UniPoly::one());
    uv_add(&mut num, (b + 1, a), q.negated());
    divide_by_v_minus_u(&num, index)
}

/// Synthetic division by `v - u` in the variable `v`, asserting a zero
/// remainder.
fn divide_by_v_minus_u(num: &UvPoly, index: usize) -> Result<UvPoly> {
    // coefficients n_j(u) of v^j
    let mut by_v: BTreeMap<u32, BTreeMap<u32, UniPoly>> = BTreeMap::new();
    for (&(du, dv), c) in num {
        by_v.entry(dv).or_default().insert(du, c.clone());
    }
    let Some(&top) = by_v.keys().next_back() else {
        return Ok(UvPoly::new());
    };
    let mut quot = UvPoly::new();
    // running Q_j(u), starting from Q_{top-1} = n_top
    let mut carry: BTreeMap<u32, UniPoly> = BTreeMap::new();
    for j in (0..=top).rev() {
        // Q_{j-1} = n_j + u Q_j (with Q_top = 0)
        let mut next: BTreeMap<u32, UniPoly> = by_v.get(&j).cloned().unwrap_or_default();
        for (du, c) in &carry {
            let e = next.entry(du + 1).or_insert_with(UniPoly::zero);
            *e = e.plus(c);
        }
        next.retain(|_, c| !c.is_zero());
        if j == 0 {
            if !next.is_empty() {
                return Err(Error::NonzeroRemainder {
                    index,
                    next: index + 1,
                });
            }
        } else {
            for (du, c) in &next {
                uv_add(&mut quot, (*du, j - 1), c.clone());
            }
        }
        carry = next;
    }
    Ok(quot)
}

/// `T_i F` for `1 <= i < k`.
pub fn hecke_t(i: usize, f: &VkElement) -> Result<VkElement> {
    if i == 0 || i >= f.k {
        return Err(Error::OperatorIndex {
            index: i,
            vars: f.k,
        });
    }
    let mut cache: HashMap<(u32, u32), UvPoly> = HashMap::new();
    let mut out = VkElement::zero(f.k);
    for ((a, rho), c) in &f.terms {
        let key = (a[i - 1], a[i]);
        if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(key) {
            e.insert(hecke_monomial(key.0, key.1, i)?);
        }
        for (&(du, dv), d) in &cache[&key] {
            let mut exps = a.clone();
            exps[i - 1] = du;
            exps[i] = dv;
            out.add_term(exps, rho.clone(), &c.times(d));
        }
    }
    Ok(out)
}

/// `d_+ F = T_1 ⋯ T_k F[X + (q-1) y_{k+1}]`, applying `T_k` first.
pub fn d_plus(f: &VkElement) -> Result<VkElement> {
    apply_d_plus(f, None)
}

fn apply_d_plus(f: &VkElement, mut report: Option<&mut OperatorReport>) -> Result<VkElement> {
    let mut lifted = VkElement::zero(f.k + 1);
    for ((a, rho), c) in &f.terms {
        let mut exps = a.clone();
        exps.push(0);
        lifted.add_term(exps, rho.clone(), c);
    }
    let mut g = lifted.shift_last(1);
    for i in (1..=f.k).rev() {
        let next = hecke_t(i, &g)?;
        if let Some(r) = report.as_deref_mut() {
            check_quadratic(i, &g, &next)?;
            r.quadratic_checks += 1;
            r.hecke_applications += 1;
        }
        g = next;
    }
    Ok(g)
}

/// `(T_i - 1)(T_i + q) G = 0`, given `tg = T_i G`.
fn check_quadratic(i: usize, g: &VkElement, tg: &VkElement) -> Result<()> {
    let q = UniPoly::x();
    let lhs = hecke_t(i, tg)?;
    let rhs = tg.scale(&(&UniPoly::one() - &q)).add(&g.scale(&q));
    if lhs != rhs {
        return Err(Error::RelationFailed(format!(
            "(T_{i} - 1)(T_{i} + q) != 0 on an element of V_{}",
            g.k
        )));
    }
    Ok(())
}

/// `e_m = Σ_{ρ ⊢ m} (-1)^{m - ℓ(ρ)} p_ρ / z_ρ`.
fn e_in_p(m: usize) -> Vec<(Partition, BigRational)> {
    partitions_of(m)
        .into_iter()
        .map(|rho| {
            let sign: i64 = if (m - rho.len()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let c = BigRational::new(sign.into(), rho.z().into());
            (rho, c)
        })
        .collect()
}

/// `d_- F = -Σ_{m>=1} (-1)^m e_m[X] · [y_k^{m-1}] F[X - (q-1) y_k]`.
pub fn d_minus(f: &VkElement) -> Result<VkElement> {
    if f.k == 0 {
        return Err(Error::OperatorIndex { index: 0, vars: 0 });
    }
    let g = f.shift_last(-1);
    let mut out = VkElement::zero(f.k - 1);
    let mut e_cache: HashMap<usize, Vec<(Partition, BigRational)>> = HashMap::new();
    for ((a, rho), c) in &g.terms {
        let m = a[f.k - 1] as usize + 1;
        let degree = a.iter().sum::<u32>() as usize + rho.size() + 1;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        let sign = if m.is_multiple_of(2) { -1 } else { 1 };
        let exps = a[..f.k - 1].to_vec();
        let e_m = e_cache.entry(m).or_insert_with(|| e_in_p(m));
        for (sigma, d) in e_m.iter() {
            let mut parts = rho.parts().to_vec();
            parts.extend_from_slice(sigma.parts());
            out.add_term(
                exps.clone(),
                Partition::from_unsorted(parts),
                &c.scaled(&(d * rational(sign))),
            );
        }
    }
    Ok(out)
}

/// Counters from [`f_via_operators_checked`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct OperatorReport {
    pub hecke_applications: usize,
    pub quadratic_checks: usize,
}

/// `F_e`: reading the Dyck word of `e` left to right, apply `d_+` for each
/// West step and `d_-` for each South step, starting from `1 ∈ V_0`.
pub fn f_via_operators(e: &Hessenberg) -> Result<SymFunc<UniPoly>> {
    run_word(e, None)
}

/// [`f_via_operators`], additionally verifying the quadratic relation at
/// every application of `T_i`.
pub fn f_via_operators_checked(e: &Hessenberg) -> Result<(SymFunc<UniPoly>, OperatorReport)> {
    let mut report = OperatorReport::default();
    let f = run_word(e, Some(&mut report))?;
    Ok((f, report))
}

fn run_word(e: &Hessenberg, mut report: Option<&mut OperatorReport>) -> Result<SymFunc<UniPoly>> {
    let mut f = VkElement::one();
    for step in e.to_dyck().steps() {
        f = match step {
            Step::West => apply_d_plus(&f, report.as_deref_mut())?,
            Step::South => d_minus(&f)?,
        };
    }
    f.to_symfunc(e.n())
}

/// `χ = (q-1)^{-n} F[(q-1)X]` in the monomial basis.
pub fn chi_from_f(f: &SymFunc<UniPoly>, n: usize) -> Result<SymFunc<UniPoly>> {
    let scaled = f.plethysm_scale(|k| Ok(qm_minus_one(k)))?;
    let den = UniPoly::from_ints(&[-1, 1]).pow(n as u32);
    scaled.to_basis(Basis::M).try_map_coeffs(|c| {
        c.exact_div(&den).ok_or_else(|| Error::NotPolynomial {
            partition: "χ".into(),
            value: format!("({c})/(q-1)^{n}"),
        })
    })
}
