//! `χ_e[X;q] = Σ_κ q^{asc(κ)} x^κ` over proper colorings.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::algebra::{rational, UniPoly};
use crate::error::{Error, Result};
use crate::interval::Hessenberg;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

/// `χ_e` in the monomial basis by enumerating all `num_vars^n` colorings.
///
/// The coefficient of `m_λ` is read off as the coefficient of `x^λ`, so only
/// colorings whose content vector is weakly decreasing are tallied.
pub fn chromatic_brute(e: &Hessenberg, num_vars: usize) -> Result<SymFunc<UniPoly>> {
    let n = e.n();
    if num_vars < n {
        return Err(Error::TooFewVariables {
            vars: num_vars,
            needed: n,
        });
    }
    let edges = e.edges();
    let total = (num_vars as u64).pow(n as u32);
    let tally = (0..total)
        .into_par_iter()
        .fold(HashMap::<(Vec<usize>, usize), u64>::new, |mut acc, code| {
            let mut kappa = vec![0usize; n];
            let mut c = code;
            for k in kappa.iter_mut() {
                *k = (c % num_vars as u64) as usize;
                c /= num_vars as u64;
            }
            let mut asc = 0;
            for &(i, j) in &edges {
                let (a, b) = (kappa[i - 1], kappa[j - 1]);
                if a == b {
                    return acc;
                }
                if a < b {
                    asc += 1;
                }
            }
            let mut content = vec![0usize; num_vars];
            for &k in &kappa {
                content[k] += 1;
            }
            if content.windows(2).all(|w| w[0] >= w[1]) {
                content.retain(|&x| x > 0);
                *acc.entry((content, asc)).or_insert(0) += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut coeffs: BTreeMap<Partition, Vec<i64>> = BTreeMap::new();
    for ((content, asc), count) in tally {
        let v = coeffs
            .entry(Partition::new(content).expect("sorted content"))
            .or_default();
        if v.len() <= asc {
            v.resize(asc + 1, 0);
        }
        v[asc] += count as i64;
    }
    Ok(SymFunc::from_terms(
        Basis::M,
        n,
        coeffs.into_iter().map(|(l, c)| {
            (
                l,
                UniPoly::from_coeffs(c.into_iter().map(rational).collect()),
            )
        }),
    ))
}

/// [`chromatic_brute`] with `n` colors.
pub fn chromatic_symmetric(e: &Hessenberg) -> Result<SymFunc<UniPoly>> {
    chromatic_brute(e, e.n())
}
