//! Transition matrices between each basis and the power sums, per degree.
//!
//! Tables are built once per degree on first use and never change afterwards.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::partitions::{partitions_of, Partition};

/// Largest degree for which tables can be built.
pub const MAX_DEGREE: usize = 12;

/// Sparse row-major matrix indexed by partition positions.
pub(crate) type SparseMatrix = Vec<Vec<(usize, BigRational)>>;

pub(crate) struct DegreeTables {
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `B_λ = Σ_μ to_p[λ][μ] p_μ` for B in (m, e, h, s).
    to_p: [SparseMatrix; 4],
    /// `p_λ = Σ_μ from_p[λ][μ] B_μ`.
    from_p: [SparseMatrix; 4],
}

static TABLES: [OnceLock<DegreeTables>; MAX_DEGREE + 1] =
    [const { OnceLock::new() }; MAX_DEGREE + 1];

pub(crate) fn tables(degree: usize) -> &'static DegreeTables {
    assert!(
        degree <= MAX_DEGREE,
        "symmetric function degree {degree} exceeds {MAX_DEGREE}"
    );
    TABLES[degree].get_or_init(|| DegreeTables::build(degree))
}

fn slot(basis: Basis) -> Option<usize> {
    match basis {
        Basis::M => Some(0),
        Basis::E => Some(1),
        Basis::H => Some(2),
        Basis::S => Some(3),
        Basis::P => None,
    }
}

impl DegreeTables {
    /// Row of `B_λ` in the power-sum basis; `None` means the basis is `p`.
    pub fn to_p(&self, basis: Basis) -> Option<&SparseMatrix> {
        slot(basis).map(|s| &self.to_p[s])
    }

    /// Rows of the power sums expanded in `basis`.
    pub fn p_in(&self, basis: Basis) -> Option<&SparseMatrix> {
        slot(basis).map(|s| &self.from_p[s])
    }

    fn build(d: usize) -> Self {
        let partitions = partitions_of(d);
        let index: HashMap<_, _> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = partitions.len();

        // p in terms of m, then invert.
        let p_to_m: Vec<Vec<BigRational>> = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| BigRational::from_integer(power_sum_monomial_coeff(lam, mu).into()))
                    .collect()
            })
            .collect();
        let m_to_p = invert(&p_to_m);

        let dense_row = |v: &BTreeMap<Partition, BigRational>| -> Vec<BigRational> {
            let mut row = vec![BigRational::zero(); n];
            for (p, c) in v {
                row[index[p]] = c.clone();
            }
            row
        };
        let e_to_p: Vec<Vec<BigRational>> = partitions
            .iter()
            .map(|l| dense_row(&product_in_p(l, single_e_in_p)))
            .collect();
        let h_to_p: Vec<Vec<BigRational>> = partitions
            .iter()
            .map(|l| dense_row(&product_in_p(l, single_h_in_p)))
            .collect();
        let s_to_p: Vec<Vec<BigRational>> = partitions
            .iter()
            .map(|l| {
                let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
                for (nu, sign) in jacobi_trudi(l) {
                    for (rho, c) in product_in_p(&nu, single_h_in_p) {
                        *acc.entry(rho).or_insert_with(BigRational::zero) +=
                            c * BigRational::from_integer(sign.into());
                    }
                }
                dense_row(&acc)
            })
            .collect();

        let to_dense = [m_to_p, e_to_p, h_to_p, s_to_p];
        let from_dense = to_dense.clone().map(|m| invert(&m));
        DegreeTables {
            partitions,
            index,
            to_p: to_dense.map(|m| sparse(&m)),
            from_p: from_dense.map(|m| sparse(&m)),
        }
    }
}

fn sparse(m: &[Vec<BigRational>]) -> SparseMatrix {
    m.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect()
        })
        .collect()
}

/// Coefficient of `m_μ` in `p_λ`: the number of ways to distribute the parts
/// of λ into the rows of μ so that each row sum matches.
fn power_sum_monomial_coeff(lam: &Partition, mu: &Partition) -> u64 {
    fn rec(parts: &[usize], remaining: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return remaining.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for j in 0..remaining.len() {
            if remaining[j] >= first {
                remaining[j] -= first;
                total += rec(rest, remaining);
                remaining[j] += first;
            }
        }
        total
    }
    rec(lam.parts(), &mut mu.parts().to_vec())
}

fn single_e_in_p(n: usize) -> BTreeMap<Partition, BigRational> {
    partitions_of(n)
        .into_iter()
        .map(|rho| {
            let sign = if (n - rho.len()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let c = BigRational::new(sign.into(), rho.z().into());
            (rho, c)
        })
        .collect()
}

fn single_h_in_p(n: usize) -> BTreeMap<Partition, BigRational> {
    partitions_of(n)
        .into_iter()
        .map(|rho| {
            let c = BigRational::new(1.into(), rho.z().into());
            (rho, c)
        })
        .collect()
}

/// Expands `Π_i f(λ_i)` in the power sums, where `f(k)` is given in p.
fn product_in_p(
    lam: &Partition,
    f: fn(usize) -> BTreeMap<Partition, BigRational>,
) -> BTreeMap<Partition, BigRational> {
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    acc.insert(Partition::empty(), BigRational::one());
    for &k in lam.parts() {
        let factor = f(k);
        let mut next = BTreeMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &factor {
                *next.entry(a.union(b)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc = next;
    }
    acc
}

/// `s_λ = det(h_{λ_i - i + j})` expanded over permutations, collected as
/// signed multisets of h-indices.
fn jacobi_trudi(lam: &Partition) -> BTreeMap<Partition, i64> {
    let l = lam.len();
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..l).collect();
    permutations(&mut perm, 0, &mut |p: &[usize], sign: i64| {
        let mut parts = Vec::with_capacity(l);
        for (i, &j) in p.iter().enumerate() {
            let idx = lam.parts()[i] as i64 - i as i64 + j as i64;
            if idx < 0 {
                return;
            }
            parts.push(idx as usize);
        }
        *out.entry(Partition::from_unsorted(parts)).or_insert(0) += sign;
    });
    out.retain(|_, c| *c != 0);
    out
}

/// Heap-free recursive permutation generator tracking the sign.
fn permutations(v: &mut [usize], k: usize, f: &mut impl FnMut(&[usize], i64)) {
    fn go(v: &mut [usize], k: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
        if k == v.len() {
            f(v, sign);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, if i == k { sign } else { -sign }, f);
            v.swap(k, i);
        }
    }
    go(v, k, 1, f)
}

/// Gauss-Jordan inverse of an invertible square matrix.
fn invert(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = &f * &a[col][j];
                a[r][j] -= x;
                let y = &f * &inv[col][j];
                inv[r][j] -= y;
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn power_sums_in_monomials() {
        // p_1^2 = m_2 + 2 m_11
        assert_eq!(power_sum_monomial_coeff(&p(&[1, 1]), &p(&[2])), 1);
        assert_eq!(power_sum_monomial_coeff(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(power_sum_monomial_coeff(&p(&[2]), &p(&[1, 1])), 0);
    }

    #[test]
    fn jacobi_trudi_small() {
        // s_11 = h_1^2 - h_2
        let jt = jacobi_trudi(&p(&[1, 1]));
        assert_eq!(jt.get(&p(&[1, 1])), Some(&1));
        assert_eq!(jt.get(&p(&[2])), Some(&-1));
    }
}
