//! Reverse Hessenberg functions, Dyck paths and unit interval graphs.
//!
//! Vertices are 1-indexed. `e(j)` is the number of earlier vertices *not*
//! adjacent to `j`, so `i ≺ j` (an edge with `i < j`) iff `e(j) < i < j`, and
//! the unit interval order is `i ≪ j` iff `i <= e(j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly increasing `e: [n] -> {0..n-1}` with `e(i) < i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Hessenberg(Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    West,
    South,
}

/// Word in West/South steps from `(n,n)` to `(0,0)` staying weakly above the
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckWord(Vec<Step>);

impl Hessenberg {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidHessenberg("empty function".into()));
        }
        for (k, &v) in values.iter().enumerate() {
            let i = k + 1;
            if v >= i {
                return Err(Error::InvalidHessenberg(format!(
                    "e({i}) = {v} violates e(i) < i"
                )));
            }
            if k > 0 && values[k - 1] > v {
                return Err(Error::InvalidHessenberg(format!(
                    "not weakly increasing: e({}) = {} > e({i}) = {v}",
                    i - 1,
                    values[k - 1]
                )));
            }
        }
        Ok(Hessenberg(values))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `e(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `|e| = Σ_i e(i)`.
    pub fn e_sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `i ≺ j`: `e(j) < i < j`.
    pub fn prec(&self, i: usize, j: usize) -> bool {
        i < j && self.get(j) < i
    }

    /// `i ≪ j`: `i <= e(j)`.
    pub fn ll(&self, i: usize, j: usize) -> bool {
        (1..=self.n()).contains(&j) && i >= 1 && i <= self.get(j)
    }

    /// Edges `(i, j)`, `i < j`, of the unit interval graph, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|j| (self.get(j) + 1..j).map(move |i| (i, j)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        (1..=self.n()).map(|j| j - 1 - self.get(j)).sum()
    }

    /// `{i : i ≺ j}` in increasing order.
    pub fn predecessors(&self, j: usize) -> std::ops::Range<usize> {
        self.get(j) + 1..j
    }

    pub fn to_dyck(&self) -> DyckWord {
        let n = self.n();
        let mut steps = Vec::with_capacity(2 * n);
        let mut souths = 0;
        for &v in &self.0 {
            while souths < v {
                steps.push(Step::South);
                souths += 1;
            }
            steps.push(Step::West);
        }
        steps.extend(std::iter::repeat_n(Step::South, n - souths));
        DyckWord(steps)
    }

    pub fn from_dyck(d: &DyckWord) -> Hessenberg {
        let mut souths = 0;
        let mut values = Vec::new();
        for s in &d.0 {
            match s {
                Step::West => values.push(souths),
                Step::South => souths += 1,
            }
        }
        Hessenberg(values)
    }

    /// All reverse Hessenberg functions of length `n`, in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<Hessenberg> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Hessenberg>) {
            if i > n {
                out.push(Hessenberg(cur.clone()));
                return;
            }
            let lo = cur.last().copied().unwrap_or(0);
            for v in lo..i {
                cur.push(v);
                rec(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(1, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Hessenberg {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Hessenberg::new(v)
    }
}

impl From<Hessenberg> for Vec<usize> {
    fn from(h: Hessenberg) -> Self {
        h.0
    }
}

impl FromStr for Hessenberg {
    type Err = Error;

    /// Comma-separated values, e.g. `0,1,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|v| {
                v.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidHessenberg(format!("not a nonnegative integer: {v:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Hessenberg::new(values)
    }
}

impl fmt::Display for Hessenberg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Hessenberg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hessenberg{self}")
    }
}

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (k, s) in steps.iter().enumerate() {
            height += match s {
                Step::West => 1,
                Step::South => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyck(format!(
                    "more South than West steps after {} steps",
                    k + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyck(
                "unequal numbers of West and South steps".into(),
            ));
        }
        if steps.is_empty() {
            return Err(Error::InvalidDyck("empty word".into()));
        }
        Ok(DyckWord(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    /// Lattice path from `(n,n)` to `(0,0)` drawn in an `n x n` grid, with the
    /// diagonal marked by `\`.
    pub fn render_ascii(&self) -> String {
        let n = self.n();
        let mut grid = vec![vec![' '; 2 * n + 1]; n + 1];
        for (r, row) in grid.iter_mut().enumerate() {
            // row r corresponds to y = n - r
            let x = n - r;
            row[2 * x] = '\\';
        }
        let (mut x, mut y) = (n, n);
        grid[n - y][2 * x] = '*';
        for s in &self.0 {
            match s {
                Step::West => {
                    grid[n - y][2 * x - 1] = '_';
                    x -= 1;
                }
                Step::South => {
                    y -= 1;
                }
            }
            grid[n - y][2 * x] = '*';
        }
        grid.into_iter()
            .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    /// Letters `W` and `S`.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'W' => Ok(Step::West),
                'S' => Ok(Step::South),
                other => Err(Error::InvalidDyck(format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(steps)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::West => "W",
                Step::South => "S",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[usize]) -> Hessenberg {
        Hessenberg::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dyck_conversions() {
        let d: DyckWord = "WSWWSWWSWSWSSS".parse().unwrap();
        assert_eq!(Hessenberg::from_dyck(&d), h(&[0, 1, 1, 2, 2, 3, 4]));
        assert_eq!(
            h(&[0, 1, 1, 2, 2, 3, 4]).to_dyck().to_string(),
            "WSWWSWWSWSWSSS"
        );
        assert_eq!(Hessenberg::from_dyck(&"WS".parse().unwrap()), h(&[0]));
        assert_eq!(Hessenberg::from_dyck(&"WWSS".parse().unwrap()), h(&[0, 0]));
        assert_eq!(h(&[0]).to_dyck().to_string(), "WS");
        assert_eq!(h(&[0, 0]).to_dyck().to_string(), "WWSS");
    }

    #[test]
    fn invalid_inputs() {
        assert!("WSS W".parse::<DyckWord>().is_err());
        assert!("SW".parse::<DyckWord>().is_err());
        assert!("WWS".parse::<DyckWord>().is_err());
        let err = "0,1,0".parse::<Hessenberg>().unwrap_err();
        assert!(err.to_string().contains("weakly increasing"), "{err}");
        let err = "0,2".parse::<Hessenberg>().unwrap_err();
        assert!(err.to_string().contains("e(i) < i"), "{err}");
        assert!("1".parse::<Hessenberg>().is_err());
    }

    #[test]
    fn edges_and_orders() {
        let e = h(&[0, 1, 1, 2, 2, 3, 4]);
        assert_eq!(
            e.edges(),
            vec![
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (5, 6),
                (5, 7),
                (6, 7)
            ]
        );
        assert_eq!(e.num_edges(), 8);
        assert_eq!(e.e_sum(), 13);
        assert!(h(&[0, 0]).prec(1, 2));
        assert!(!h(&[0, 1]).prec(1, 2));
        assert!(h(&[0, 1]).ll(1, 2));
    }

    #[test]
    fn enumeration() {
        let three: Vec<Vec<usize>> = Hessenberg::enumerate(3)
            .into_iter()
            .map(Into::into)
            .collect();
        assert_eq!(
            three,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
        let counts: Vec<_> = (1..=7).map(|n| Hessenberg::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn round_trips_and_edge_counts() {
        for n in 1..=7 {
            for e in Hessenberg::enumerate(n) {
                let d = e.to_dyck();
                assert_eq!(Hessenberg::from_dyck(&d), e);
                assert_eq!(d.to_string().parse::<DyckWord>().unwrap(), d);
                assert_eq!(e.edges().len(), e.num_edges());
            }
        }
    }

    #[test]
    fn unit_interval_order_is_strict_partial_order() {
        for n in 1..=6 {
            for e in Hessenberg::enumerate(n) {
                for i in 1..=n {
                    assert!(!e.ll(i, i));
                    for j in 1..=n {
                        for k in 1..=n {
                            if e.ll(i, j) && e.ll(j, k) {
                                assert!(e.ll(i, k), "{e}: {i} {j} {k}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn prec_is_not_transitive() {
        let counterexample = Hessenberg::enumerate(4).into_iter().any(|e| {
            (1..=4).any(|i| {
                (1..=4).any(|j| (1..=4).any(|k| e.prec(i, j) && e.prec(j, k) && !e.prec(i, k)))
            })
        });
        assert!(counterexample);
    }

    #[test]
    fn ascii_rendering() {
        let art = h(&[0, 0]).to_dyck().render_ascii();
        assert_eq!(art.lines().count(), 3);
        assert!(art.contains('*'));
    }
}
