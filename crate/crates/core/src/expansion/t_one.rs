//! The specialization `t = 1`: closed forms for `A_x^{λ,w}(q,1)`, the
//! elementary expansion and its rescaled (hat-A) form.
//!
//! `H̃_μ[X;q,1] = (q;q)_μ h_μ[X/(1-q)]`, so the coefficient of `e_λ` in `χ_e`
//! is `C_{e,λ}(q,1) Π_i [λ_i]_q!`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{q_fact, q_int, rational, BigRational, Ring, UniPoly, UniRat};
use crate::error::{Error, Result};
use crate::interval::Hessenberg;
use crate::partitions::{partitions_of, Cell, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{enumerate_syt_bar, StripTableau};

/// The maximal runs of consecutive columns in a strip, relative to the cell
/// `x` being added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentData {
    /// Leftmost column of each run, increasing.
    pub w_left: Vec<usize>,
    /// Rightmost column of each run, increasing.
    pub w_right: Vec<usize>,
    /// Number of runs left of `x`, when the last of them ends at `col(x) - 1`
    /// (always `Some(0)` for `col(x) = 0`); `None` otherwise.
    pub split: Option<usize>,
    /// Number of columns left of `x` not covered by the strip.
    pub b: usize,
}

impl SegmentData {
    pub fn new(w: &[Cell], x: Cell) -> Self {
        let mut cols: Vec<usize> = w.iter().map(|c| c.col).collect();
        cols.sort_unstable();
        let mut w_left: Vec<usize> = Vec::new();
        let mut w_right: Vec<usize> = Vec::new();
        for c in cols {
            match w_right.last_mut() {
                Some(r) if *r + 1 == c => *r = c,
                _ => {
                    w_left.push(c);
                    w_right.push(c);
                }
            }
        }
        let r = x.col;
        let split = if r == 0 {
            Some(0)
        } else {
            w_right.iter().position(|&wr| wr + 1 == r).map(|k| k + 1)
        };
        let b = split.map_or(0, |j| {
            (0..j)
                .map(|i| {
                    let prev = if i == 0 { -1 } else { w_right[i - 1] as i64 };
                    (w_left[i] as i64 - prev - 1) as usize
                })
                .sum()
        });
        SegmentData {
            w_left,
            w_right,
            split,
            b,
        }
    }

    /// The product of q-integer ratios common to both closed forms.
    fn ratio(&self, r: usize, j: usize) -> UniRat {
        let mut num = UniPoly::one();
        let mut den = UniPoly::one();
        for i in 0..self.w_left.len() {
            if i < j {
                let prev = if i == 0 {
                    -1
                } else {
                    self.w_right[i - 1] as i64
                };
                num = num.times(&q_int(r - self.w_left[i]));
                den = den.times(&q_int((r as i64 - prev - 1) as usize));
            } else {
                num = num.times(&q_int(self.w_left[i] - r));
                den = den.times(&q_int(self.w_right[i] + 1 - r));
            }
        }
        UniRat::new(num, den).expect("q-integers of positive arguments")
    }
}

fn check_addable(lambda: &Partition, x: Cell) -> Result<()> {
    if !lambda.is_addable(x) {
        return Err(Error::NotAddable {
            col: x.col,
            row: x.row,
            partition: lambda.to_string(),
        });
    }
    Ok(())
}

/// `A_x^{λ,w}(q,1)` from the segment closed form.
pub fn a_cell_q1(lambda: &Partition, w: &[Cell], x: Cell) -> Result<UniRat> {
    check_addable(lambda, x)?;
    let seg = SegmentData::new(w, x);
    let Some(j) = seg.split else {
        return Ok(UniRat::zero());
    };
    let shift = UniRat::power_of_var(seg.b as i64 - x.col as i64);
    Ok(seg.ratio(x.col, j).times(&shift))
}

/// `q^{col(x)} A_x^{λ,w}(q,1)`.
pub fn hat_a_cell(lambda: &Partition, w: &[Cell], x: Cell) -> Result<UniRat> {
    check_addable(lambda, x)?;
    let seg = SegmentData::new(w, x);
    let Some(j) = seg.split else {
        return Ok(UniRat::zero());
    };
    Ok(seg
        .ratio(x.col, j)
        .times(&UniRat::power_of_var(seg.b as i64)))
}

fn tableau_product(
    t: &StripTableau,
    e: &Hessenberg,
    cell: fn(&Partition, &[Cell], Cell) -> Result<UniRat>,
) -> Result<UniRat> {
    let mut acc = UniRat::one();
    for i in 1..=t.n() {
        acc = acc.times(&cell(
            &t.shape_before(i),
            &t.strip_sequence(e, i),
            t.cell(i),
        )?);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `A_T^e(q,1)` as a product of [`a_cell_q1`] factors.
pub fn a_tableau_q1(t: &StripTableau, e: &Hessenberg) -> Result<UniRat> {
    tableau_product(t, e, a_cell_q1)
}

/// `Π_i hat_a_cell`, the hat-A weight of a tableau.
pub fn hat_a_tableau(t: &StripTableau, e: &Hessenberg) -> Result<UniRat> {
    tableau_product(t, e, hat_a_cell)
}

/// Coefficients of `χ_e` in the elementary basis, with the per-tableau
/// summands that produce them.
#[derive(Debug, Clone, PartialEq)]
pub struct EExpansion {
    pub coeffs: BTreeMap<Partition, UniPoly>,
    pub breakdown: BTreeMap<Partition, Vec<(StripTableau, UniRat)>>,
}

impl EExpansion {
    pub fn to_symfunc(&self, degree_cap: usize) -> SymFunc<UniPoly> {
        SymFunc::from_terms(
            Basis::E,
            degree_cap,
            self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())),
        )
    }
}

fn as_poly(lambda: &Partition, f: UniRat) -> Result<UniPoly> {
    f.as_polynomial().ok_or_else(|| Error::NotPolynomial {
        partition: lambda.to_string(),
        value: f.to_string(),
    })
}

/// Summand of one tableau in the elementary coefficient, before the common
/// prefactor.
fn edge_product(t: &StripTableau, e: &Hessenberg) -> UniRat {
    let c = t.columns();
    let mut acc = UniRat::one();
    for (i, j) in e.edges() {
        let (ci, cj) = (c[i - 1], c[j - 1]);
        if cj == ci + 1 {
            continue;
        }
        let qp = |k: usize| UniPoly::monomial(k, rational(1));
        let f = UniRat::new(&qp(cj) - &qp(ci), &qp(cj) - &qp(ci + 1)).expect("c_j != c_i + 1");
        acc = acc.times(&f);
    }
    acc
}

/// Coefficient of `e_λ` in `χ_e` via the column product over edges.
pub fn e_expansion(e: &Hessenberg) -> Result<EExpansion> {
    let n = e.n() as i64;
    let base = n * (n - 1) / 2 - n - e.e_sum() as i64;
    let rows = partitions_of(e.n())
        .into_par_iter()
        .map(|lambda| {
            let tableaux = enumerate_syt_bar(e, &lambda)?;
            if tableaux.is_empty() {
                return Ok(None);
            }
            let prefactor = lambda.parts().iter().fold(
                UniRat::power_of_var(base + lambda.len() as i64),
                |acc, &p| acc.times(&UniRat::from_poly(q_int(p))),
            );
            let summands: Vec<(StripTableau, UniRat)> = tableaux
                .into_iter()
                .map(|t| {
                    let s = edge_product(&t, e).times(&prefactor);
                    (t, s)
                })
                .collect();
            let total = summands
                .iter()
                .fold(UniRat::zero(), |acc, (_, s)| acc.plus(s));
            let poly = as_poly(&lambda, total)?;
            Ok(Some((lambda, poly, summands)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = EExpansion {
        coeffs: BTreeMap::new(),
        breakdown: BTreeMap::new(),
    };
    for (lambda, poly, summands) in rows.into_iter().flatten() {
        if !poly.is_zero() {
            out.coeffs.insert(lambda.clone(), poly);
        }
        out.breakdown.insert(lambda, summands);
    }
    Ok(out)
}

/// Positive rational summands of the `q = 1` elementary coefficient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Q1Breakdown {
    #[serde(serialize_with = "ser_rationals")]
    pub summands: Vec<BigRational>,
    #[serde(serialize_with = "ser_rational")]
    pub total: BigRational,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_rationals<S: serde::Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

/// `λ_1⋯λ_ℓ Π_{i≺j, c_j ≠ c_i + 1} |c_j - c_i| / |c_j - c_i - 1|` per tableau.
pub fn e_expansion_q1(e: &Hessenberg) -> Result<BTreeMap<Partition, Q1Breakdown>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(e.n()) {
        let tableaux = enumerate_syt_bar(e, &lambda)?;
        if tableaux.is_empty() {
            continue;
        }
        let scale = BigRational::from_integer(lambda.parts().iter().product::<usize>().into());
        let summands: Vec<BigRational> = tableaux
            .iter()
            .map(|t| {
                let c = t.columns();
                e.edges().into_iter().fold(scale.clone(), |acc, (i, j)| {
                    let d = c[j - 1] as i64 - c[i - 1] as i64;
                    if d == 1 {
                        acc
                    } else {
                        acc * BigRational::new(d.abs().into(), (d - 1).abs().into())
                    }
                })
            })
            .collect();
        let total = summands.iter().fold(rational(0), |a, b| a + b);
        out.insert(lambda, Q1Breakdown { summands, total });
    }
    Ok(out)
}

/// The elementary coefficient in hat-A form, with the per-tableau weights.
#[derive(Debug, Clone, PartialEq)]
pub struct HatACoeff {
    pub coeff: UniPoly,
    /// `(T, Π_i hat_a_cell)` for every `T` in SYT-bar.
    pub hat_a: Vec<(StripTableau, UniRat)>,
}

/// `q^{Σ_{i<j} λ_i λ_j - |e|} Π_i [λ_i]_q! Σ_T hatA_T`.
pub fn hat_a_coeff(e: &Hessenberg, lambda: &Partition) -> Result<HatACoeff> {
    let hat_a = enumerate_syt_bar(e, lambda)?
        .into_iter()
        .map(|t| {
            let w = hat_a_tableau(&t, e)?;
            Ok((t, w))
        })
        .collect::<Result<Vec<_>>>()?;
    let parts = lambda.parts();
    let cross: usize = (0..parts.len())
        .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
        .map(|(i, j)| parts[i] * parts[j])
        .sum();
    let prefactor = parts.iter().fold(
        UniRat::power_of_var(cross as i64 - e.e_sum() as i64),
        |acc, &p| acc.times(&UniRat::from_poly(q_fact(p))),
    );
    let total = hat_a.iter().fold(UniRat::zero(), |acc, (_, w)| acc.plus(w));
    let coeff = as_poly(lambda, total.times(&prefactor))?;
    Ok(HatACoeff { coeff, hat_a })
}

/// `q^{edges} c(1/q) = c(q)`: the coefficient list of `c`, padded to degree
/// `edges`, reads the same backwards.
pub fn is_palindromic(c: &UniPoly, edges: usize) -> bool {
    if c.degree().is_some_and(|d| d > edges) {
        return false;
    }
    let flipped = UniPoly::from_coeffs((0..=edges).map(|k| c.coeff(edges - k)).collect());
    &flipped == c
}
