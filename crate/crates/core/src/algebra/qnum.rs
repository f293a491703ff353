//! q-integers, q-factorials and q-Pochhammer symbols.

use super::ring::{rat, Ring};
use super::unipoly::UniPoly;
use crate::partitions::Partition;

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: usize) -> UniPoly {
    UniPoly::from_coeffs(vec![rat(1); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_fact(n: usize) -> UniPoly {
    (1..=n).fold(UniPoly::one(), |acc, k| &acc * &q_int(k))
}

/// `(q;q)_r = (1-q)(1-q^2)...(1-q^r)`.
pub fn q_pochhammer(r: usize) -> UniPoly {
    (1..=r).fold(UniPoly::one(), |acc, k| {
        &acc * &(&UniPoly::one() - &UniPoly::monomial(k, rat(1)))
    })
}

/// `(q;q)_mu = prod_i (q;q)_{mu_i}`.
pub fn pochhammer_qq(mu: &Partition) -> UniPoly {
    mu.parts()
        .iter()
        .fold(UniPoly::one(), |acc, &p| &acc * &q_pochhammer(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_int(0), UniPoly::zero());
        assert_eq!(q_int(3), UniPoly::from_ints(&[1, 1, 1]));
        assert_eq!(
            q_fact(3),
            &UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[1, 1, 1])
        );
        assert_eq!(q_fact(0), UniPoly::one());
        let expected = &(&UniPoly::from_ints(&[1, -1]) * &UniPoly::from_ints(&[1, 0, -1]))
            * &UniPoly::from_ints(&[1, -1]);
        assert_eq!(
            pochhammer_qq(&Partition::new(vec![2, 1]).unwrap()),
            expected
        );
    }

    /// `(1-q)^{-n} (q;q)_lambda = prod_i [lambda_i]_q!`; the sign-free form
    /// follows from `(1-q^k) = (1-q)[k]_q`.
    #[test]
    fn pochhammer_factorial_identity() {
        for lambda in crate::partitions::partitions_up_to(7) {
            let n = lambda.size();
            let lhs = pochhammer_qq(&lambda);
            let rhs = &UniPoly::from_ints(&[1, -1]).pow(n as u32)
                * &lambda
                    .parts()
                    .iter()
                    .fold(UniPoly::one(), |acc, &p| &acc * &q_fact(p));
            assert_eq!(lhs, rhs, "{lambda}");
            // Signed variant with (q-1)^n.
            let signed = &UniPoly::from_ints(&[-1, 1]).pow(n as u32)
                * &lambda
                    .parts()
                    .iter()
                    .fold(UniPoly::one(), |acc, &p| &acc * &q_fact(p));
            let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(lhs, signed.scaled(&sign), "{lambda}");
        }
    }
}
