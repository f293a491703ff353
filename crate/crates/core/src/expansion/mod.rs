//! Coefficients of `χ_e` in the modified Macdonald, elementary and
//! Hall-Littlewood bases, all indexed by strip tableaux.
//!
//! For a cell `x` addable to `λ` and a strip `w = (w_1, ..., w_k)` of cells of
//! `λ`,
//!
//! ```text
//! A_x^{λ,w} = Π_{c ∈ row(x)} (q^a - t^{l+1}) / (q^{a+1} - t^{l+1})
//!           · Π_{c ∈ col(x)} (q^{a+1} - t^l) / (q^{a+1} - t^{l+1})
//!           · Π_i (x - t w_i) / (x - q t w_i)
//! ```
//!
//! with cells read as monomials `q^col t^row`, and
//! `C_{e,μ} = q^{C(n,2) - |e|} Σ_{T ∈ SYT^e_μ} Π_i A^{sh(T_{<i}), w(T_{≺i})}_{T(i)}`.

mod colorings;
mod t_one;
mod t_zero;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{sum_factored, BigRational, Factored, RatFunc, Ring, UniRat};
use crate::error::{Error, Result};
use crate::interval::Hessenberg;
use crate::macdonald::arm_leg_factored;
use crate::partitions::{partitions_of, Cell, Partition};
use crate::tableaux::{enumerate_syt, StripTableau};

pub use colorings::{admissible_colorings, coloring_of, Coloring};
pub use t_one::{
    a_cell_q1, a_tableau_q1, e_expansion, e_expansion_q1, hat_a_cell, hat_a_coeff, is_palindromic,
    EExpansion, HatACoeff, Q1Breakdown, SegmentData,
};
pub use t_zero::{
    a_cell_t0, a_tableau_t0, hl_coeff, hl_expansion, hl_summands, hl_via_cells, HlExpansion,
};

/// `A_x^{λ,w}` in factored form.
pub fn a_cell_factored(lambda: &Partition, w: &[Cell], x: Cell) -> Result<Factored> {
    if !lambda.is_addable(x) {
        return Err(Error::NotAddable {
            col: x.col,
            row: x.row,
            partition: lambda.to_string(),
        });
    }
    let mut acc = arm_leg_factored(lambda, x)?;
    let xm = (x.col as u32, x.row as u32);
    for c in w {
        let tw = (c.col as u32, c.row as u32 + 1);
        let qtw = (c.col as u32 + 1, c.row as u32 + 1);
        let num = Factored::binomial(xm, tw);
        if num.is_zero() {
            return Ok(Factored::zero());
        }
        acc = acc.times(&num).div(&Factored::binomial(xm, qtw))?;
    }
    Ok(acc)
}

/// `A_x^{λ,w}(q,t)`.
pub fn a_cell(lambda: &Partition, w: &[Cell], x: Cell) -> Result<RatFunc> {
    Ok(a_cell_factored(lambda, w, x)?.to_ratfunc())
}

/// `A_T^e` in factored form.
pub fn a_tableau_factored(t: &StripTableau, e: &Hessenberg) -> Result<Factored> {
    let mut acc = Factored::one();
    for i in 1..=t.n() {
        let f = a_cell_factored(&t.shape_before(i), &t.strip_sequence(e, i), t.cell(i))?;
        acc = acc.times(&f);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `A_T^e(q,t) = Π_i A^{sh(T_{<i}), w(T_{≺i})}_{T(i)}`.
pub fn a_tableau(t: &StripTableau, e: &Hessenberg) -> Result<RatFunc> {
    Ok(a_tableau_factored(t, e)?.to_ratfunc())
}

/// `C(n,2) - |e|`, the exponent of the normalizing power of `q`.
pub(crate) fn base_exponent(e: &Hessenberg) -> i64 {
    let n = e.n() as i64;
    n * (n - 1) / 2 - e.e_sum() as i64
}

fn check_size(e: &Hessenberg, mu: &Partition) -> Result<()> {
    if mu.size() != e.n() {
        return Err(Error::SizeMismatch {
            expected: e.n(),
            got: mu.size(),
        });
    }
    Ok(())
}

/// `C_{e,μ}(q,t)`, the coefficient of `H̃_μ[X;q,t]` in `F_e`.
pub fn macdonald_coeff(e: &Hessenberg, mu: &Partition) -> Result<RatFunc> {
    check_size(e, mu)?;
    let shift = Factored::monomial(base_exponent(e), 0);
    let terms = enumerate_syt(e, mu)?
        .iter()
        .map(|t| Ok(a_tableau_factored(t, e)?.times(&shift)))
        .collect::<Result<Vec<_>>>()?;
    Ok(sum_factored(&terms))
}

/// `C_{e,μ}(q0,t)` as a reduced rational function of `t`.
pub fn macdonald_coeff_at_q(e: &Hessenberg, mu: &Partition, q0: &BigRational) -> Result<UniRat> {
    check_size(e, mu)?;
    let mut acc = UniRat::zero();
    for t in enumerate_syt(e, mu)? {
        acc = acc.plus(&a_tableau_factored(&t, e)?.eval_q(q0)?);
    }
    let scale = q0_power(q0, base_exponent(e))?;
    Ok(acc.scaled(&scale))
}

pub(crate) fn q0_power(q0: &BigRational, k: i64) -> Result<BigRational> {
    if q0.is_zero() && k < 0 {
        return Err(Error::DivisionByZero);
    }
    let mut acc = BigRational::from_integer(1.into());
    for _ in 0..k.unsigned_abs() {
        acc *= q0;
    }
    Ok(if k < 0 { acc.recip() } else { acc })
}

/// One `μ` of the Macdonald expansion with its tableau-level summands.
#[derive(Debug, Clone)]
pub struct MacdonaldTerm {
    pub coeff: RatFunc,
    /// `(T, q^{C(n,2)-|e|} A_T^e)` for every `T ∈ SYT^e_μ`.
    pub breakdown: Vec<(StripTableau, RatFunc)>,
}

/// `F_e = Σ_μ C_{e,μ} H̃_μ`; partitions with no tableaux are omitted.
pub fn macdonald_expansion(e: &Hessenberg) -> Result<BTreeMap<Partition, MacdonaldTerm>> {
    let shift = Factored::monomial(base_exponent(e), 0);
    let rows = partitions_of(e.n())
        .into_par_iter()
        .map(|mu| {
            let tableaux = enumerate_syt(e, &mu)?;
            if tableaux.is_empty() {
                return Ok(None);
            }
            let terms = tableaux
                .iter()
                .map(|t| Ok(a_tableau_factored(t, e)?.times(&shift)))
                .collect::<Result<Vec<_>>>()?;
            let coeff = sum_factored(&terms);
            let breakdown = tableaux
                .into_iter()
                .zip(&terms)
                .map(|(t, f)| (t, f.to_ratfunc()))
                .collect();
            Ok(Some((mu, MacdonaldTerm { coeff, breakdown })))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests;
