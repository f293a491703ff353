//! Standard tableaux whose `⪯`-intervals are horizontal strips.
//!
//! For a Hessenberg function `e`, `SYT^e_λ` is the set of standard tableaux of
//! shape `λ` in which the labels `{j : e(i) < j <= i}` occupy distinct columns
//! for every `i`. The subset satisfying condition (∗) (each label outside
//! column 0 has a `≺`-predecessor in the column to its left) is called
//! SYT-bar here and indexes the nonzero terms at `t = 1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Hessenberg;
use crate::partitions::{Cell, Partition};

/// A standard tableau stored as the cell of each label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripTableau {
    /// `cells[i - 1]` holds label `i`.
    cells: Vec<Cell>,
    shape: Partition,
}

/// Statistics of a label `i` outside the bottom row, relative to
/// `sh = sh(T_{<i})` and the cells of `T_{≺i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HlStats {
    /// Entries of `T_{≺i}` at least two rows below `i`.
    pub m: usize,
    /// `sh` row length directly below `i` minus the length of `i`'s row.
    pub d: usize,
    /// Leftmost column of `T_{≺i}` in the row directly below `i`.
    pub l: Option<usize>,
}

impl StripTableau {
    /// Builds a tableau from the cells of labels `1..=n`, checking only that
    /// the labels fill a partition in a standard way.
    pub fn from_cells(cells: Vec<Cell>) -> Result<Self> {
        let mut shape = Partition::empty();
        for &c in &cells {
            shape = shape.add_cell(c)?;
        }
        Ok(StripTableau { cells, shape })
    }

    /// Builds a tableau from rows listed bottom row first.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut cells = vec![None; n];
        for (row, labels) in rows.iter().enumerate() {
            for (col, &label) in labels.iter().enumerate() {
                let slot = label
                    .checked_sub(1)
                    .and_then(|k| cells.get_mut(k))
                    .ok_or_else(|| Error::Parse(format!("label {label} out of range 1..={n}")))?;
                if slot.is_some() {
                    return Err(Error::Parse(format!("label {label} repeated")));
                }
                *slot = Some(Cell::new(col, row));
            }
        }
        Self::from_cells(cells.into_iter().map(Option::unwrap).collect())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// Cell of label `i` (1-indexed).
    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i - 1]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Rows of labels, bottom row first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&l| vec![0; l]).collect();
        for (k, c) in self.cells.iter().enumerate() {
            rows[c.row][c.col] = k + 1;
        }
        rows
    }

    /// `c_i(T)`, the column of each label, indexed by `i - 1`.
    pub fn columns(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.col).collect()
    }

    /// `sh(T_{<i})`.
    pub fn shape_before(&self, i: usize) -> Partition {
        let mut counts = Vec::new();
        for c in &self.cells[..i - 1] {
            if counts.len() <= c.row {
                counts.resize(c.row + 1, 0);
            }
            counts[c.row] += 1;
        }
        Partition::from_unsorted(counts)
    }

    /// `w(T_{≺i})`: cells of the labels `j ≺ i`, largest label first.
    pub fn strip_sequence(&self, e: &Hessenberg, i: usize) -> Vec<Cell> {
        e.predecessors(i).rev().map(|j| self.cell(j)).collect()
    }

    /// True when `T_{⪯i}` occupies distinct columns for every `i`.
    pub fn is_strip_tableau(&self, e: &Hessenberg) -> bool {
        (1..=self.n()).all(|i| {
            let c = self.cell(i).col;
            e.predecessors(i).all(|j| self.cell(j).col != c)
        })
    }

    /// Condition (∗).
    pub fn satisfies_star(&self, e: &Hessenberg) -> bool {
        (1..=self.n()).all(|i| {
            let c = self.cell(i).col;
            c == 0 || e.predecessors(i).any(|j| self.cell(j).col + 1 == c)
        })
    }

    /// Entries of `T_{≺i}` at least two rows below label `i`.
    pub fn hl_m(&self, e: &Hessenberg, i: usize) -> usize {
        let r = self.cell(i).row;
        e.predecessors(i)
            .filter(|&j| self.cell(j).row + 2 <= r)
            .count()
    }

    /// `(m, d, L)` for a label outside the bottom row.
    pub fn stats_hl(&self, e: &Hessenberg, i: usize) -> Result<HlStats> {
        let x = self.cell(i);
        if x.row == 0 {
            return Err(Error::BottomRow { label: i });
        }
        let sh = self.shape_before(i);
        let d = sh.row_len(x.row - 1) - sh.row_len(x.row);
        let l = e
            .predecessors(i)
            .map(|j| self.cell(j))
            .filter(|c| c.row + 1 == x.row)
            .map(|c| c.col)
            .min();
        Ok(HlStats {
            m: self.hl_m(e, i),
            d,
            l,
        })
    }

    /// JSON form: shape and rows, bottom row first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "shape": self.shape, "rows": self.rows() })
    }
}

impl fmt::Display for StripTableau {
    /// Rows top to bottom, as drawn in French convention.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        for (k, row) in rows.iter().enumerate().rev() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", line.join(" "))?;
            if k > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// `SYT^e_λ` in lexicographic order of the label-cell sequence.
pub fn enumerate_syt(e: &Hessenberg, lambda: &Partition) -> Result<Vec<StripTableau>> {
    let n = e.n();
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: lambda.size(),
        });
    }
    let mut out = Vec::new();
    let mut cells = Vec::with_capacity(n);
    search(e, lambda, &Partition::empty(), &mut cells, &mut out);
    Ok(out)
}

/// The (∗)-filtered subset of [`enumerate_syt`].
pub fn enumerate_syt_bar(e: &Hessenberg, lambda: &Partition) -> Result<Vec<StripTableau>> {
    Ok(enumerate_syt(e, lambda)?
        .into_iter()
        .filter(|t| t.satisfies_star(e))
        .collect())
}

fn search(
    e: &Hessenberg,
    lambda: &Partition,
    shape: &Partition,
    cells: &mut Vec<Cell>,
    out: &mut Vec<StripTableau>,
) {
    let i = cells.len() + 1;
    if i > e.n() {
        out.push(StripTableau {
            cells: cells.clone(),
            shape: shape.clone(),
        });
        return;
    }
    let mut candidates = shape.addable_cells();
    candidates.sort();
    for x in candidates {
        if !lambda.contains(x) {
            continue;
        }
        if e.predecessors(i).any(|j| cells[j - 1].col == x.col) {
            continue;
        }
        let next = shape.add_cell(x).expect("addable");
        cells.push(x);
        search(e, lambda, &next, cells, out);
        cells.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn h(v: &[usize]) -> Hessenberg {
        Hessenberg::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn example() -> (Hessenberg, StripTableau) {
        let t = StripTableau::from_rows(&[vec![1, 3, 4], vec![2, 6, 7], vec![5]]).unwrap();
        (h(&[0, 1, 1, 2, 2, 3, 4]), t)
    }

    #[test]
    fn worked_example() {
        let (e, t) = example();
        assert!(t.is_strip_tableau(&e));
        assert!(t.satisfies_star(&e));
        assert!(enumerate_syt(&e, &p(&[3, 3, 1])).unwrap().contains(&t));
        assert_eq!(t.columns(), vec![0, 0, 1, 2, 0, 1, 2]);
        assert_eq!(
            t.strip_sequence(&e, 5),
            vec![Cell::new(2, 0), Cell::new(1, 0)]
        );
        assert!(t.strip_sequence(&e, 1).is_empty());
        assert_eq!(t.hl_m(&e, 5), 2);
        assert_eq!(
            t.stats_hl(&e, 2).unwrap(),
            HlStats {
                m: 0,
                d: 1,
                l: None
            }
        );
        assert!(matches!(
            t.stats_hl(&e, 1),
            Err(Error::BottomRow { label: 1 })
        ));
        assert_eq!(t.rows(), vec![vec![1, 3, 4], vec![2, 6, 7], vec![5]]);
        assert_eq!(t.to_string(), "5\n2 6 7\n1 3 4");
    }

    #[test]
    fn syt_bar_counts_for_worked_example() {
        let (e, _) = example();
        for (shape, count) in [(p(&[3, 3, 1]), 1), (p(&[4, 2, 1]), 3), (p(&[5, 1, 1]), 4)] {
            assert_eq!(
                enumerate_syt_bar(&e, &shape).unwrap().len(),
                count,
                "{shape}"
            );
        }
    }

    #[test]
    fn two_vertex_cases() {
        assert!(enumerate_syt(&h(&[0, 0]), &p(&[1, 1])).unwrap().is_empty());
        let one = enumerate_syt(&h(&[0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), vec![vec![1], vec![2]]);

        let row = StripTableau::from_rows(&[vec![1, 2]]).unwrap();
        assert!(!row.satisfies_star(&h(&[0, 1])));
        assert!(row.satisfies_star(&h(&[0, 0])));
        assert_eq!(row.strip_sequence(&h(&[0, 0]), 2), vec![Cell::new(0, 0)]);
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            enumerate_syt(&h(&[0, 0]), &p(&[2, 1])),
            Err(Error::SizeMismatch {
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    fn column_shapes() {
        let e = h(&[0, 1, 2, 3]);
        let t = StripTableau::from_rows(&[vec![1], vec![2], vec![3], vec![4]]).unwrap();
        assert_eq!(t.columns(), vec![0; 4]);
        let all = enumerate_syt(&e, &p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(all, vec![t]);
    }

    #[test]
    fn complete_graph_only_single_row() {
        for n in 1..=6 {
            let e = h(&vec![0; n]);
            for l in partitions_of(n) {
                let count = enumerate_syt(&e, &l).unwrap().len();
                assert_eq!(count, usize::from(l.len() == 1), "{l}");
            }
            let row = enumerate_syt(&e, &p(&[n])).unwrap();
            assert_eq!(row[0].columns(), (0..n).collect::<Vec<_>>());
        }
    }

    /// Discrete graph: every standard tableau qualifies.
    #[test]
    fn discrete_graph_gives_all_standard_tableaux() {
        let e = h(&[0, 1, 2, 3, 4]);
        // f^λ for n = 5
        let expected = [1, 4, 5, 6, 5, 4, 1];
        for (l, f) in partitions_of(5).iter().zip(expected) {
            assert_eq!(enumerate_syt(&e, l).unwrap().len(), f, "{l}");
        }
    }

    #[test]
    fn ordering_is_lexicographic() {
        for e in Hessenberg::enumerate(5) {
            for l in partitions_of(5) {
                let ts = enumerate_syt(&e, &l).unwrap();
                assert!(ts.windows(2).all(|w| w[0].cells < w[1].cells));
            }
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n);
                out.push(q);
            }
        }
        out
    }

    /// Fillings with `≪`-increasing columns, distinct-column strips and (∗)
    /// are automatically standard, and they are exactly SYT-bar.
    #[test]
    fn star_characterization() {
        for n in 1..=6 {
            let perms = permutations(n);
            for e in Hessenberg::enumerate(n) {
                for l in partitions_of(n) {
                    let shape_cells: Vec<Cell> = l.cells().collect();
                    let mut found = Vec::new();
                    for perm in &perms {
                        let mut cells = vec![Cell::new(0, 0); n];
                        for (k, &label) in perm.iter().enumerate() {
                            cells[label - 1] = shape_cells[k];
                        }
                        let at = |c: Cell| cells.iter().position(|&d| d == c).unwrap() + 1;
                        let columns_ll = shape_cells
                            .iter()
                            .filter(|c| c.row > 0)
                            .all(|&c| e.ll(at(Cell::new(c.col, c.row - 1)), at(c)));
                        if !columns_ll {
                            continue;
                        }
                        let t = StripTableau {
                            cells: cells.clone(),
                            shape: l.clone(),
                        };
                        if !t.is_strip_tableau(&e) || !t.satisfies_star(&e) {
                            continue;
                        }
                        assert!(
                            StripTableau::from_cells(cells).is_ok(),
                            "non-standard filling for e={e:?}"
                        );
                        found.push(t);
                    }
                    found.sort();
                    assert_eq!(found, enumerate_syt_bar(&e, &l).unwrap());
                }
            }
        }
    }
}
