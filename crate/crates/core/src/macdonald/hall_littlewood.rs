//! Hall-Littlewood functions by symmetrization in finitely many variables.
//!
//! `P_λ(x_1..x_N; t) = v_λ(t)^{-1} Σ_{w ∈ S_N} w(x^λ Π_{i<j} (x_i - t x_j)/(x_i - x_j))`
//! with `N = |λ|`. The sum equals the antisymmetrization of
//! `x^λ Π_{i<j} (x_i - t x_j)` divided by the Vandermonde determinant, which is
//! straightened term by term into Schur functions. This route shares nothing
//! with the Macdonald filling formula.

use std::collections::HashMap;

use crate::algebra::{rational, Ring, UniPoly, UniRat};
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

/// `P_λ[X;t]` in the monomial basis; coefficients are polynomials in `t`.
pub fn hall_littlewood_p(lambda: &Partition) -> SymFunc<UniRat> {
    let n = lambda.size();
    if n == 0 {
        return SymFunc::one(Basis::M, 0);
    }
    let vars = n;
    // x^λ padded with zeros
    let mut poly: HashMap<Vec<u8>, UniPoly> = HashMap::new();
    let start: Vec<u8> = (0..vars).map(|i| lambda.row_len(i) as u8).collect();
    poly.insert(start, UniPoly::one());
    let minus_t = UniPoly::monomial(1, rational(-1));
    for i in 0..vars {
        for j in i + 1..vars {
            let mut next: HashMap<Vec<u8>, UniPoly> = HashMap::with_capacity(poly.len() * 2);
            for (alpha, c) in poly {
                let mut a = alpha.clone();
                a[i] += 1;
                let e = next.entry(a).or_insert_with(UniPoly::zero);
                *e = e.plus(&c);
                let mut b = alpha;
                b[j] += 1;
                let e = next.entry(b).or_insert_with(UniPoly::zero);
                *e = e.plus(&c.times(&minus_t));
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
    }

    let mut schur: HashMap<Partition, UniPoly> = HashMap::new();
    for (alpha, c) in poly {
        if let Some((shape, sign)) = straighten(&alpha) {
            let e = schur.entry(shape).or_insert_with(UniPoly::zero);
            *e = if sign > 0 { e.plus(&c) } else { e.minus(&c) };
        }
    }

    let v = normalizer(lambda, vars);
    let s = SymFunc::from_terms(
        Basis::S,
        n,
        schur.into_iter().map(|(shape, c)| {
            let coeff = UniRat::new(c, v.clone()).expect("nonzero normalizer");
            (shape, coeff)
        }),
    );
    s.to_basis(Basis::M)
}

/// `Q_λ[X;t] = b_λ(t) P_λ[X;t]` with `b_λ(t) = Π_i φ_{m_i(λ)}(t)`.
pub fn hall_littlewood_q(lambda: &Partition) -> SymFunc<UniRat> {
    let b = lambda
        .multiplicities()
        .iter()
        .fold(UniPoly::one(), |acc, &m| acc.times(&phi(m)));
    hall_littlewood_p(lambda).scale(&UniRat::from_poly(b))
}

/// `Q_λ[X;q^{-1}]` as a function of `q`.
pub fn hall_littlewood_q_inverted(lambda: &Partition) -> SymFunc<UniRat> {
    hall_littlewood_q(lambda).map_coeffs(UniRat::invert_variable)
}

/// `φ_m(t) = (1-t)(1-t^2)...(1-t^m)`.
fn phi(m: usize) -> UniPoly {
    crate::algebra::q_pochhammer(m)
}

/// `v_λ(t) = Π_{i>=0} v_{m_i}(t)`, `v_m(t) = φ_m(t)/(1-t)^m`, with `m_0 = N - ℓ(λ)`.
fn normalizer(lambda: &Partition, vars: usize) -> UniPoly {
    let mut mults = lambda.multiplicities();
    mults.push(vars - lambda.len());
    mults.iter().fold(UniPoly::one(), |acc, &m| {
        let num = phi(m);
        let den = UniPoly::from_ints(&[1, -1]).pow(m as u32);
        acc.times(&num.exact_div(&den).expect("(1-t)^m divides φ_m"))
    })
}

/// `a_α / a_δ = ± s_{sort(α) - δ}`, or `None` when α has a repeated entry.
fn straighten(alpha: &[u8]) -> Option<(Partition, i64)> {
    let n = alpha.len();
    let mut v: Vec<u8> = alpha.to_vec();
    // insertion sort into decreasing order, tracking transpositions
    let mut sign = 1;
    for i in 1..n {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts = v
        .iter()
        .enumerate()
        .map(|(i, &b)| b as usize - (n - 1 - i))
        .collect();
    Some((Partition::from_unsorted(parts), sign))
}
