//! Deterministic sample points for identity testing.
//!
//! A polynomial identity in `q` of degree at most `d` that holds at `d + 1`
//! distinct points holds identically. All coordinates handed out here are
//! distinct primes, so monomial differences such as `q^a - t^b` never vanish
//! at a sample point.

use num_rational::BigRational;

/// Seed used when none is configured.
pub const DEFAULT_SEED: u64 = 17;

/// Source of distinct prime coordinates, offset by a seed.
#[derive(Debug, Clone)]
pub struct SamplePoints {
    seed: u64,
}

impl SamplePoints {
    pub fn new(seed: u64) -> Self {
        SamplePoints { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `count` distinct primes, starting at an offset derived from the seed.
    pub fn primes(&self, count: usize) -> Vec<u64> {
        let skip = (self.seed % 97) as usize;
        primes().skip(skip).take(count).collect()
    }

    /// A grid with `nq` values of `q` and `nt` values of `t`; all `nq + nt`
    /// coordinates are distinct primes.
    pub fn grid(&self, nq: usize, nt: usize) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut qs = Vec::with_capacity(nq);
        let mut ts = Vec::with_capacity(nt);
        for (i, p) in self.primes(nq + nt).into_iter().enumerate() {
            let p = BigRational::from_integer(p.into());
            if qs.len() < nq && (ts.len() >= nt || i % 2 == 0) {
                qs.push(p);
            } else {
                ts.push(p);
            }
        }
        (qs, ts)
    }
}

impl Default for SamplePoints {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn grid_coordinates_are_distinct_primes() {
        for (nq, nt) in [(3, 3), (5, 2), (2, 6), (1, 0)] {
            let (qs, ts) = SamplePoints::new(3).grid(nq, nt);
            assert_eq!(qs.len(), nq);
            assert_eq!(ts.len(), nt);
            let all: BTreeSet<_> = qs.iter().chain(&ts).cloned().collect();
            assert_eq!(all.len(), nq + nt);
        }
    }

    #[test]
    fn seeds_shift_the_list() {
        assert_eq!(SamplePoints::new(0).primes(3), vec![2, 3, 5]);
        assert_eq!(SamplePoints::new(1).primes(2), vec![3, 5]);
    }
}
