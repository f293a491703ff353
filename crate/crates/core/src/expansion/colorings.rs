//! Admissible proper colorings, the `q = 1` shadow of SYT-bar.
//!
//! A coloring `κ` is admissible when it is proper and every vertex `i` with
//! `κ(i) > 1` has a neighbor `j < i` with `κ(j) = κ(i) - 1`. Tableaux in
//! SYT-bar correspond to admissible colorings via `κ(i) = col(i) + 1`.

use serde::Serialize;

use crate::algebra::{rational, BigRational};
use crate::error::{Error, Result};
use crate::interval::Hessenberg;
use crate::partitions::Partition;
use crate::tableaux::StripTableau;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    /// `colors[i - 1] = κ(i)`, colors starting at 1.
    pub colors: Vec<usize>,
    /// `Π_{i≺j, κ(j) ≠ κ(i)+1} |κ(j) - κ(i)| / |κ(j) - κ(i) - 1|`.
    #[serde(serialize_with = "ser_weight")]
    pub weight: BigRational,
}

fn ser_weight<S: serde::Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// The coloring `κ_T(i) = col(i) + 1`.
pub fn coloring_of(t: &StripTableau) -> Vec<usize> {
    t.columns().into_iter().map(|c| c + 1).collect()
}

/// Admissible colorings with `λ'_k` vertices of color `k`, in lexicographic
/// order of the color vector.
pub fn admissible_colorings(e: &Hessenberg, lambda_conj: &Partition) -> Result<Vec<Coloring>> {
    if lambda_conj.size() != e.n() {
        return Err(Error::SizeMismatch {
            expected: e.n(),
            got: lambda_conj.size(),
        });
    }
    let mut remaining = lambda_conj.parts().to_vec();
    let mut colors = Vec::with_capacity(e.n());
    let mut out = Vec::new();
    search(e, &mut remaining, &mut colors, &mut out);
    Ok(out)
}

fn search(
    e: &Hessenberg,
    remaining: &mut [usize],
    colors: &mut Vec<usize>,
    out: &mut Vec<Coloring>,
) {
    let i = colors.len() + 1;
    if i > e.n() {
        out.push(Coloring {
            colors: colors.clone(),
            weight: weight(e, colors),
        });
        return;
    }
    for k in 1..=remaining.len() {
        if remaining[k - 1] == 0 {
            continue;
        }
        let mut proper = true;
        let mut supported = k == 1;
        for j in e.predecessors(i) {
            let kj = colors[j - 1];
            proper &= kj != k;
            supported |= kj + 1 == k;
        }
        if !proper || !supported {
            continue;
        }
        remaining[k - 1] -= 1;
        colors.push(k);
        search(e, remaining, colors, out);
        colors.pop();
        remaining[k - 1] += 1;
    }
}

fn weight(e: &Hessenberg, colors: &[usize]) -> BigRational {
    e.edges().into_iter().fold(rational(1), |acc, (i, j)| {
        let d = colors[j - 1] as i64 - colors[i - 1] as i64;
        if d == 1 {
            acc
        } else {
            acc * BigRational::new(d.abs().into(), (d - 1).abs().into())
        }
    })
}
