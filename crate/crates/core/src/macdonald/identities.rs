//! Structural identities satisfied by `H̃_μ`, used as correctness checks.
//!
//! Each check compares exact symbolic values and, where points are supplied,
//! also compares the specializations at those points.

use crate::algebra::{pochhammer_qq, rational, BigRational, RatFunc, Ring, UniPoly, UniRat};
use crate::error::Result;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

use super::{hall_littlewood_q_inverted, htilde, htilde_at_minus_one, pieri_d};

fn to_ratfunc(f: &SymFunc<crate::algebra::BiPoly>) -> SymFunc<RatFunc> {
    f.map_coeffs(|c| RatFunc::from_poly(c.clone()))
}

/// `e_1 H̃_λ = Σ_{x addable} d_{λ,x} H̃_{λ+x}`.
pub fn check_pieri(lambda: &Partition) -> Result<bool> {
    let n = lambda.size() + 1;
    let e1 = SymFunc::<RatFunc>::basis_element(Basis::E, Partition::new(vec![1])?, n);
    let lhs = e1.mul(&to_ratfunc(&htilde(lambda)).with_degree_cap(n));
    let mut rhs = SymFunc::zero(Basis::M, n);
    for x in lambda.addable_cells() {
        let d = pieri_d(lambda, x)?;
        rhs = rhs.add(&to_ratfunc(&htilde(&lambda.add_cell(x)?)).scale(&d));
    }
    Ok(lhs == rhs)
}

/// `H̃_μ[X;q,1] = (q;q)_μ h_μ[X/(1-q)]`, symbolically in `q` and at each of `qs`.
pub fn check_t_one(mu: &Partition, qs: &[BigRational]) -> Result<bool> {
    let n = mu.size();
    let lhs = htilde(mu).map_coeffs(|c| UniRat::from_poly(c.eval_t(&rational(1))));
    let h = SymFunc::<UniRat>::basis_element(Basis::H, mu.clone(), n);
    let rhs = h
        .plethysm_scale(|k| {
            let den = &UniPoly::one() - &UniPoly::monomial(k, rational(1));
            UniRat::new(UniPoly::one(), den)
        })?
        .scale(&UniRat::from_poly(pochhammer_qq(mu)))
        .to_basis(Basis::M);
    if lhs != rhs {
        return Ok(false);
    }
    agree_at_points(&lhs, &rhs, qs)
}

/// `H̃_μ[-1] = (-1)^{|μ|} Π_{(i,j)∈μ} q^i t^j`.
pub fn check_minus_one(mu: &Partition) -> bool {
    let got = RatFunc::from_poly(htilde(mu).eval_at_minus_one());
    got == htilde_at_minus_one(mu)
}

/// `H̃_μ[X;t,q] = H̃_{μ'}[X;q,t]`.
pub fn check_conjugation(mu: &Partition) -> bool {
    htilde(mu).map_coeffs(|c| c.swap_qt()) == htilde(&mu.conjugate())
}

/// `H̃_λ[(q-1)X;q,0] = q^{|λ'|+n(λ')} Q_{λ'}[X;q^{-1}]`, symbolically in `q`
/// and at each of `qs`.
pub fn check_bridge(lambda: &Partition, qs: &[BigRational]) -> Result<bool> {
    let conj = lambda.conjugate();
    let at_t0 = htilde(lambda).map_coeffs(|c| UniRat::from_poly(c.eval_t(&rational(0))));
    let lhs = at_t0.plethysm_scale(|k| {
        Ok(UniRat::from_poly(
            &UniPoly::monomial(k, rational(1)) - &UniPoly::one(),
        ))
    })?;
    let shift = UniRat::power_of_var((conj.size() + conj.n_stat()) as i64);
    let rhs = hall_littlewood_q_inverted(&conj).scale(&shift);
    if lhs != rhs {
        return Ok(false);
    }
    agree_at_points(&lhs, &rhs, qs)
}

fn agree_at_points(a: &SymFunc<UniRat>, b: &SymFunc<UniRat>, qs: &[BigRational]) -> Result<bool> {
    for q0 in qs {
        let ea = a.try_map_coeffs(|c| c.eval(q0))?;
        let eb = b.try_map_coeffs(|c| c.eval(q0))?;
        if ea != eb {
            return Ok(false);
        }
    }
    Ok(true)
}
