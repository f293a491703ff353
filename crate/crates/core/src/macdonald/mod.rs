//! Modified Macdonald polynomials `H̃_μ[X;q,t]`, Pieri coefficients and
//! Hall-Littlewood functions.
//!
//! `H̃_μ` is built from the combinatorial formula
//! `H̃_μ = Σ_σ q^{inv(σ)} t^{maj(σ)} x^σ` over all fillings `σ` of the French
//! diagram of `μ`. The coefficient of `m_ν` is the sum over fillings with
//! content `ν`.

mod hall_littlewood;
mod identities;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{rational, BiPoly, Factored, RatFunc};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Cell, Partition};
use crate::symfunc::{Basis, SymFunc};

pub use hall_littlewood::{hall_littlewood_p, hall_littlewood_q, hall_littlewood_q_inverted};
pub use identities::{check_bridge, check_conjugation, check_minus_one, check_pieri, check_t_one};

/// Memoized `H̃_μ` in the monomial basis.
///
/// Reads take a shared lock; a miss computes outside the lock and inserts
/// under the write lock, so concurrent misses on the same key may duplicate
/// work but always store identical values.
#[derive(Default)]
pub struct MacdonaldCache {
    entries: RwLock<HashMap<Partition, Arc<SymFunc<BiPoly>>>>,
}

impl MacdonaldCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache.
    pub fn global() -> &'static MacdonaldCache {
        static GLOBAL: OnceLock<MacdonaldCache> = OnceLock::new();
        GLOBAL.get_or_init(MacdonaldCache::new)
    }

    pub fn get(&self, mu: &Partition) -> Arc<SymFunc<BiPoly>> {
        if let Some(f) = self.entries.read().unwrap().get(mu) {
            return Arc::clone(f);
        }
        let f = Arc::new(htilde_uncached(mu));
        let mut w = self.entries.write().unwrap();
        Arc::clone(w.entry(mu.clone()).or_insert(f))
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `H̃_μ[X;q,t]` in the monomial basis with degree cap `|μ|`.
pub fn htilde(mu: &Partition) -> SymFunc<BiPoly> {
    (*MacdonaldCache::global().get(mu)).clone()
}

fn htilde_uncached(mu: &Partition) -> SymFunc<BiPoly> {
    let n = mu.size();
    let shape = FillingShape::new(mu);
    let terms = partitions_of(n)
        .into_iter()
        .map(|nu| {
            let c = shape.weight_sum(&nu);
            (nu, c)
        })
        .collect::<Vec<_>>();
    SymFunc::from_terms(Basis::M, n, terms)
}

/// Precomputed geometry of a diagram for the inv/maj statistics.
struct FillingShape {
    /// Cells in reading order: top row first, left to right.
    cells: Vec<Cell>,
    /// Position in `cells` of the cell directly below, if any.
    below: Vec<Option<usize>>,
    legs: Vec<u32>,
    arms: Vec<u32>,
    /// Attacking pairs `(a, b)` with `a` before `b` in reading order.
    attacking: Vec<(usize, usize)>,
}

impl FillingShape {
    fn new(mu: &Partition) -> Self {
        let mut cells = Vec::new();
        for row in (0..mu.len()).rev() {
            for col in 0..mu.row_len(row) {
                cells.push(Cell::new(col, row));
            }
        }
        let pos: HashMap<Cell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let below = cells
            .iter()
            .map(|c| (c.row > 0).then(|| pos[&Cell::new(c.col, c.row - 1)]))
            .collect();
        let legs = cells.iter().map(|&c| mu.leg(c).unwrap() as u32).collect();
        let arms = cells.iter().map(|&c| mu.arm(c).unwrap() as u32).collect();
        let mut attacking = Vec::new();
        for (a, u) in cells.iter().enumerate() {
            for (b, v) in cells.iter().enumerate().skip(a + 1) {
                let same_row = u.row == v.row;
                // u is read first, so it lies in the upper row here.
                let consecutive = u.row == v.row + 1 && u.col > v.col;
                if same_row || consecutive {
                    attacking.push((a, b));
                }
            }
        }
        FillingShape {
            cells,
            below,
            legs,
            arms,
            attacking,
        }
    }

    /// `Σ q^{inv} t^{maj}` over fillings with content `nu`.
    fn weight_sum(&self, nu: &Partition) -> BiPoly {
        let mut counts: Vec<usize> = nu.parts().to_vec();
        let mut filling = vec![0usize; self.cells.len()];
        let mut hist: HashMap<(u32, u32), i64> = HashMap::new();
        self.fill(0, &mut counts, &mut filling, &mut hist);
        BiPoly::from_terms(hist.into_iter().map(|(k, c)| (k, rational(c))))
    }

    fn fill(
        &self,
        k: usize,
        counts: &mut [usize],
        filling: &mut [usize],
        hist: &mut HashMap<(u32, u32), i64>,
    ) {
        if k == self.cells.len() {
            *hist.entry(self.stats(filling)).or_insert(0) += 1;
            return;
        }
        for v in 0..counts.len() {
            if counts[v] == 0 {
                continue;
            }
            counts[v] -= 1;
            filling[k] = v;
            self.fill(k + 1, counts, filling, hist);
            counts[v] += 1;
        }
    }

    fn stats(&self, filling: &[usize]) -> (u32, u32) {
        let mut maj = 0;
        let mut arm_des = 0;
        for (k, b) in self.below.iter().enumerate() {
            if let Some(b) = b {
                if filling[k] > filling[*b] {
                    maj += self.legs[k] + 1;
                    arm_des += self.arms[k];
                }
            }
        }
        let inversions = self
            .attacking
            .iter()
            .filter(|&&(a, b)| filling[a] > filling[b])
            .count() as u32;
        (inversions - arm_des, maj)
    }
}

/// Pieri coefficient `d_{λ,x}`: the coefficient of `H̃_{λ+x}` in `e_1 H̃_λ`.
pub fn pieri_d(lambda: &Partition, x: Cell) -> Result<RatFunc> {
    if !lambda.is_addable(x) {
        return Err(Error::NotAddable {
            col: x.col,
            row: x.row,
            partition: lambda.to_string(),
        });
    }
    arm_leg_factors(lambda, x)
}

/// The row and column products shared by `d_{λ,x}` and `A_x^{λ,w}`.
pub(crate) fn arm_leg_factors(lambda: &Partition, x: Cell) -> Result<RatFunc> {
    Ok(arm_leg_factored(lambda, x)?.to_ratfunc())
}

/// [`arm_leg_factors`] in factored form.
pub(crate) fn arm_leg_factored(lambda: &Partition, x: Cell) -> Result<Factored> {
    let mut acc = Factored::one();
    let diff = |a: usize, b: usize| Factored::binomial((a as u32, 0), (0, b as u32));
    for col in 0..x.col {
        let c = Cell::new(col, x.row);
        let (a, l) = (lambda.arm(c)?, lambda.leg(c)?);
        acc = acc.times(&diff(a, l + 1)).div(&diff(a + 1, l + 1))?;
    }
    for row in 0..x.row {
        let c = Cell::new(x.col, row);
        let (a, l) = (lambda.arm(c)?, lambda.leg(c)?);
        acc = acc.times(&diff(a + 1, l)).div(&diff(a + 1, l + 1))?;
    }
    Ok(acc)
}

/// `H̃_μ[-1] = (-1)^{|μ|} Π_{(i,j)∈μ} q^i t^j`.
pub fn htilde_at_minus_one(mu: &Partition) -> RatFunc {
    let (a, b) = mu.cells().fold((0u32, 0u32), |(a, b), c| {
        (a + c.col as u32, b + c.row as u32)
    });
    let sign = if mu.size().is_multiple_of(2) { 1 } else { -1 };
    RatFunc::from_poly(BiPoly::monomial(a, b, rational(sign)))
}

#[cfg(test)]
mod tests;
