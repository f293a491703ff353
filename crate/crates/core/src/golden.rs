//! Reference data for the seven-vertex example `e = (0,1,1,2,2,3,4)`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::algebra::UniPoly;
use crate::interval::Hessenberg;
use crate::partitions::Partition;

const GOLDEN_N7: &str = include_str!("../data/golden_n7.json");

#[derive(Deserialize)]
struct Raw {
    hessenberg: Hessenberg,
    monomial: Vec<RawTerm>,
    elementary: Vec<RawTerm>,
}

#[derive(Deserialize)]
struct RawTerm {
    partition: Partition,
    coeffs: Vec<i64>,
}

/// Expected `m`- and `e`-coefficients of `χ_e`.
#[derive(Debug, Clone)]
pub struct Golden {
    pub hessenberg: Hessenberg,
    pub monomial: BTreeMap<Partition, UniPoly>,
    pub elementary: BTreeMap<Partition, UniPoly>,
}

fn collect(terms: Vec<RawTerm>) -> BTreeMap<Partition, UniPoly> {
    terms
        .into_iter()
        .map(|t| (t.partition, UniPoly::from_ints(&t.coeffs)))
        .collect()
}

pub fn golden_n7() -> Golden {
    let raw: Raw = serde_json::from_str(GOLDEN_N7).expect("embedded golden data parses");
    Golden {
        hessenberg: raw.hessenberg,
        monomial: collect(raw.monomial),
        elementary: collect(raw.elementary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads() {
        let g = golden_n7();
        assert_eq!(g.hessenberg.values(), &[0, 1, 1, 2, 2, 3, 4]);
        assert_eq!(g.monomial.len(), 10);
        assert_eq!(g.elementary.len(), 6);
        for (l, _) in g.monomial.iter().chain(&g.elementary) {
            assert_eq!(l.size(), 7);
        }
    }
}
