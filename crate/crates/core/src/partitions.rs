//! Integer partitions in French convention.
//!
//! Cells are 0-indexed `(col, row)` pairs with row 0 at the bottom, and a cell
//! `(i, j)` doubles as the monomial `q^i t^j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::BiPoly;
use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts. Serializes as a plain list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Box of a Young diagram: column `col`, row `row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    /// The monomial `q^col t^row`.
    pub fn monomial(&self) -> BiPoly {
        BiPoly::qt(self.col as u32, self.row as u32)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// `q^i t^j` for the cell `(i, j)`.
pub fn cell_monomial(c: Cell) -> BiPoly {
    c.monomial()
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `j` (0-indexed), zero above the diagram.
    pub fn row_len(&self, j: usize) -> usize {
        self.0.get(j).copied().unwrap_or(0)
    }

    /// Height of column `i`.
    pub fn col_len(&self, i: usize) -> usize {
        self.0.iter().take_while(|&&p| p > i).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col < self.row_len(c.row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_len(0);
        Partition((0..width).map(|i| self.col_len(i)).collect())
    }

    fn check_cell(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellNotInPartition {
                col: c.col,
                row: c.row,
                partition: self.to_string(),
            })
        }
    }

    /// Cells strictly to the right of `c` in its row.
    pub fn arm(&self, c: Cell) -> Result<usize> {
        self.check_cell(c)?;
        Ok(self.row_len(c.row) - c.col - 1)
    }

    /// Cells strictly above `c` in its column.
    pub fn leg(&self, c: Cell) -> Result<usize> {
        self.check_cell(c)?;
        Ok(self.col_len(c.col) - c.row - 1)
    }

    /// Cells whose addition yields a partition, bottom row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..=self.len() {
            let r = self.row_len(j);
            if j == 0 || self.row_len(j - 1) > r {
                out.push(Cell::new(r, j));
            }
        }
        out
    }

    pub fn is_addable(&self, c: Cell) -> bool {
        c.col == self.row_len(c.row) && (c.row == 0 || self.row_len(c.row - 1) > c.col)
    }

    pub fn add_cell(&self, c: Cell) -> Result<Partition> {
        if !self.is_addable(c) {
            return Err(Error::NotAddable {
                col: c.col,
                row: c.row,
                partition: self.to_string(),
            });
        }
        let mut parts = self.0.clone();
        if c.row == parts.len() {
            parts.push(1);
        } else {
            parts[c.row] += 1;
        }
        Ok(Partition(parts))
    }

    /// All cells, bottom row first and left to right within a row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| Cell::new(i, j)))
    }

    /// `n(λ) = Σ_i (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Multiplicity of each part size `1..=max part`; index `k-1` holds `m_k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.row_len(0)];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// `z_λ = Π_k k^{m_k} m_k!`.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let k = (i + 1) as u128;
                k.pow(m as u32) * (1..=m as u128).product::<u128>()
            })
            .product()
    }

    pub fn contains_partition(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Partition with the parts of both.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// True iff `outer / inner` has at most one cell in each column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> Result<bool> {
    if !outer.contains_partition(inner) {
        return Err(Error::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    // Equivalent to interlacing: outer_{j+1} <= inner_j.
    Ok((0..outer.len()).all(|j| outer.row_len(j + 1) <= inner.row_len(j)))
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size `0..=n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 3, 1]).conjugate(), p(&[3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn arm_and_leg() {
        let l = p(&[3, 3, 1]);
        assert_eq!(l.arm(Cell::new(0, 0)).unwrap(), 2);
        assert_eq!(l.leg(Cell::new(0, 0)).unwrap(), 2);
        assert_eq!(l.arm(Cell::new(2, 1)).unwrap(), 0);
        assert_eq!(l.leg(Cell::new(2, 1)).unwrap(), 0);
        assert_eq!(p(&[1]).arm(Cell::new(0, 0)).unwrap(), 0);
        assert!(matches!(
            l.arm(Cell::new(1, 2)),
            Err(Error::CellNotInPartition { .. })
        ));
    }

    #[test]
    fn addable() {
        assert_eq!(Partition::empty().addable_cells(), vec![Cell::new(0, 0)]);
        assert_eq!(
            p(&[2, 1]).addable_cells(),
            vec![Cell::new(2, 0), Cell::new(1, 1), Cell::new(0, 2)]
        );
        assert_eq!(
            p(&[1]).addable_cells(),
            vec![Cell::new(1, 0), Cell::new(0, 1)]
        );
        assert!(p(&[1]).add_cell(Cell::new(1, 1)).is_err());
    }

    #[test]
    fn n_stat_and_monomials() {
        assert_eq!(p(&[3, 3, 1]).n_stat(), 5);
        assert_eq!(Partition::empty().n_stat(), 0);
        assert_eq!(cell_monomial(Cell::new(2, 1)), BiPoly::qt(2, 1));
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&p(&[1]), &p(&[2, 1])).unwrap());
        assert!(is_horizontal_strip(&p(&[1]), &p(&[1, 1])).unwrap());
        assert!(!is_horizontal_strip(&p(&[1]), &p(&[2, 2])).unwrap());
        assert!(is_horizontal_strip(&p(&[2]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<_> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn invariants_up_to_eight() {
        for l in partitions_up_to(8) {
            let c = l.conjugate();
            assert_eq!(c.conjugate(), l);
            assert_eq!(c.size(), l.size());
            assert_eq!(l.n_stat(), l.cells().map(|c| c.row).sum::<usize>());
            for cell in l.cells() {
                let dual = Cell::new(cell.row, cell.col);
                assert_eq!(l.arm(cell).unwrap(), c.leg(dual).unwrap());
            }
            let distinct = l.multiplicities().iter().filter(|&&m| m > 0).count();
            assert_eq!(l.addable_cells().len(), distinct + 1);
        }
    }

    proptest! {
        #[test]
        fn serde_round_trip(parts in proptest::collection::vec(1usize..6, 0..6)) {
            let l = Partition::from_unsorted(parts);
            let json = serde_json::to_string(&l).unwrap();
            let back: Partition = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, l);
        }
    }
}
