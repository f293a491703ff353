//! The specialization `t = 0` and the expansion of `χ_e` in the functions
//! `Q_{λ'}[X;q^{-1}]`.

use std::collections::BTreeMap;

use crate::algebra::{q_int, rational, Ring, UniPoly, UniRat};
use crate::error::{Error, Result};
use crate::interval::Hessenberg;
use crate::macdonald::hall_littlewood_q_inverted;
use crate::partitions::{partitions_of, Cell, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{enumerate_syt, StripTableau};

fn q_minus_one() -> UniPoly {
    UniPoly::from_ints(&[-1, 1])
}

/// `q^k - 1` for `k >= 0`.
fn qk_minus_one(k: usize) -> UniPoly {
    &UniPoly::monomial(k, rational(1)) - &UniPoly::one()
}

/// `A_x^{λ,w}(q,0)`.
///
/// With `x = (r, s)`: `q^{-r}` in the bottom row, otherwise
/// `q^{-r-m} (q^d - 1)/q^d · Π_{w_i in row s-1} (q^{r_i-r} - 1)/(q^{r_i-r+1} - 1)`
/// where `m` counts strip cells at least two rows below `x` and `d` is the
/// length difference between the row below `x` and the row of `x`.
pub fn a_cell_t0(lambda: &Partition, w: &[Cell], x: Cell) -> Result<UniRat> {
    if !lambda.is_addable(x) {
        return Err(Error::NotAddable {
            col: x.col,
            row: x.row,
            partition: lambda.to_string(),
        });
    }
    let (r, s) = (x.col, x.row);
    if s == 0 {
        return Ok(UniRat::power_of_var(-(r as i64)));
    }
    let m = w.iter().filter(|c| c.row + 2 <= s).count();
    let d = lambda.row_len(s - 1) - lambda.row_len(s);
    let mut acc = UniRat::new(qk_minus_one(d), UniPoly::one())?
        .times(&UniRat::power_of_var(-((r + m + d) as i64)));
    for c in w.iter().filter(|c| c.row + 1 == s) {
        acc = acc.times(&UniRat::new(
            qk_minus_one(c.col - r),
            qk_minus_one(c.col - r + 1),
        )?);
    }
    Ok(acc)
}

/// `A_T^e(q,0)` as a product of [`a_cell_t0`] factors.
pub fn a_tableau_t0(t: &StripTableau, e: &Hessenberg) -> Result<UniRat> {
    let mut acc = UniRat::one();
    for i in 1..=t.n() {
        acc = acc.times(&a_cell_t0(
            &t.shape_before(i),
            &t.strip_sequence(e, i),
            t.cell(i),
        )?);
    }
    Ok(acc)
}

/// Weight of one tableau in [`hl_coeff`], before the common prefactor.
fn hl_weight(t: &StripTableau, e: &Hessenberg) -> Result<UniRat> {
    let mut acc = UniRat::one();
    for i in 1..=t.n() {
        let x = t.cell(i);
        if x.row == 0 {
            continue;
        }
        let st = t.stats_hl(e, i)?;
        let bracket = match st.l {
            None => q_int(st.d),
            Some(l) => q_int(l - x.col),
        };
        acc = acc
            .times(&UniRat::from_poly(bracket))
            .times(&UniRat::power_of_var(-((st.m + st.d) as i64)));
    }
    Ok(acc)
}

/// Coefficient of `Q_{λ'}[X;q^{-1}]` in `χ_e`:
/// `q^{C(n+1,2) - |e|} / (q-1)^{λ_1} Σ_{T ∈ SYT^e_λ} Π_{i ∉ row 0} q^{-m-d} [·]_q`.
pub fn hl_coeff(e: &Hessenberg, lambda: &Partition) -> Result<UniRat> {
    Ok(hl_summands(e, lambda)?
        .iter()
        .fold(UniRat::zero(), |acc, (_, c)| acc.plus(c)))
}

/// The summands of [`hl_coeff`], one per tableau, prefactor included.
pub fn hl_summands(e: &Hessenberg, lambda: &Partition) -> Result<Vec<(StripTableau, UniRat)>> {
    let n = e.n() as i64;
    let prefactor = UniRat::new(UniPoly::one(), q_minus_one().pow(lambda.row_len(0) as u32))?
        .times(&UniRat::power_of_var(n * (n + 1) / 2 - e.e_sum() as i64));
    enumerate_syt(e, lambda)?
        .into_iter()
        .map(|t| {
            let w = hl_weight(&t, e)?.times(&prefactor);
            Ok((t, w))
        })
        .collect()
}

/// The same coefficient assembled from [`a_tableau_t0`] and the relation
/// `H̃_λ[(q-1)X;q,0] = q^{n + n(λ')} Q_{λ'}[X;q^{-1}]`.
pub fn hl_via_cells(e: &Hessenberg, lambda: &Partition) -> Result<UniRat> {
    let n = e.n() as i64;
    let mut sum = UniRat::zero();
    for t in enumerate_syt(e, lambda)? {
        sum = sum.plus(&a_tableau_t0(&t, e)?);
    }
    let exponent = n * (n - 1) / 2 - e.e_sum() as i64 + n + lambda.conjugate().n_stat() as i64;
    let prefactor = UniRat::new(UniPoly::one(), q_minus_one().pow(n as u32))?
        .times(&UniRat::power_of_var(exponent));
    Ok(sum.times(&prefactor))
}

/// `χ_e = Σ_λ c_λ Q_{λ'}[X;q^{-1}]`, keyed by `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct HlExpansion {
    pub coeffs: BTreeMap<Partition, UniRat>,
    pub breakdown: BTreeMap<Partition, Vec<(StripTableau, UniRat)>>,
}

impl HlExpansion {
    /// `Σ_λ c_λ Q_{λ'}[X;q^{-1}]` in the monomial basis.
    pub fn to_symfunc(&self, n: usize) -> SymFunc<UniRat> {
        self.coeffs
            .iter()
            .fold(SymFunc::zero(Basis::M, n), |acc, (lambda, c)| {
                acc.add(&hall_littlewood_q_inverted(&lambda.conjugate()).scale(c))
            })
    }
}

pub fn hl_expansion(e: &Hessenberg) -> Result<HlExpansion> {
    let mut coeffs = BTreeMap::new();
    let mut breakdown = BTreeMap::new();
    for lambda in partitions_of(e.n()) {
        let summands = hl_summands(e, &lambda)?;
        let c = summands
            .iter()
            .fold(UniRat::zero(), |acc, (_, c)| acc.plus(c));
        if !c.is_zero() {
            coeffs.insert(lambda.clone(), c);
            breakdown.insert(lambda, summands);
        }
    }
    Ok(HlExpansion { coeffs, breakdown })
}
