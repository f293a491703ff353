use super::*;
use crate::algebra::{q_fact, q_int, rational, SamplePoints, UniPoly, DEFAULT_SEED};
use crate::golden::golden_n7;
use crate::tableaux::enumerate_syt_bar;

fn h(v: &[usize]) -> Hessenberg {
    Hessenberg::new(v.to_vec()).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn qpoly(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

fn qrat(num: UniPoly, den: UniPoly) -> UniRat {
    UniRat::new(num, den).unwrap()
}

fn all_hessenberg(max_n: usize) -> Vec<Hessenberg> {
    (1..=max_n).flat_map(Hessenberg::enumerate).collect()
}

#[test]
fn a_cell_examples() {
    let c = Cell::new;
    assert_eq!(
        a_cell(&Partition::empty(), &[], c(0, 0)).unwrap(),
        RatFunc::one()
    );
    assert!(a_cell(&p(&[1]), &[c(0, 0)], c(0, 1)).unwrap().is_zero());
    assert_eq!(
        a_cell(&p(&[1]), &[c(0, 0)], c(1, 0)).unwrap(),
        RatFunc::monomial(-1, 0)
    );
    assert!(matches!(
        a_cell(&p(&[1]), &[], c(1, 1)),
        Err(Error::NotAddable { .. })
    ));
}

#[test]
fn a_tableau_examples() {
    let one = StripTableau::from_rows(&[vec![1]]).unwrap();
    assert_eq!(a_tableau(&one, &h(&[0])).unwrap(), RatFunc::one());
    let row = StripTableau::from_rows(&[vec![1, 2]]).unwrap();
    assert_eq!(
        a_tableau(&row, &h(&[0, 0])).unwrap(),
        RatFunc::monomial(-1, 0)
    );
}

#[test]
fn macdonald_coeff_examples() {
    assert_eq!(macdonald_coeff(&h(&[0]), &p(&[1])).unwrap(), RatFunc::one());
    assert_eq!(
        macdonald_coeff(&h(&[0, 0]), &p(&[2])).unwrap(),
        RatFunc::one()
    );
    assert!(macdonald_coeff(&h(&[0, 0]), &p(&[1, 1])).unwrap().is_zero());
    assert!(matches!(
        macdonald_coeff(&h(&[0, 0]), &p(&[3])),
        Err(Error::SizeMismatch { .. })
    ));
}

#[test]
fn macdonald_expansion_breakdown_sums() {
    let e = h(&[0, 1, 1, 2]);
    for (mu, term) in macdonald_expansion(&e).unwrap() {
        let sum = term
            .breakdown
            .iter()
            .fold(RatFunc::zero(), |acc, (_, f)| acc.plus(f));
        assert_eq!(sum, term.coeff, "{mu}");
        assert_eq!(macdonald_coeff(&e, &mu).unwrap(), term.coeff);
    }
}

#[test]
fn coeff_at_q_matches_symbolic() {
    let (qs, ts) = SamplePoints::new(DEFAULT_SEED).grid(2, 2);
    for e in all_hessenberg(4) {
        for mu in partitions_of(e.n()) {
            let full = macdonald_coeff(&e, &mu).unwrap();
            for q0 in &qs {
                let at_q = macdonald_coeff_at_q(&e, &mu, q0).unwrap();
                for t0 in &ts {
                    assert_eq!(at_q.eval(t0).unwrap(), full.eval(q0, t0).unwrap());
                }
            }
        }
    }
}

#[test]
fn segment_data() {
    let c = Cell::new;
    let seg = SegmentData::new(&[c(5, 0), c(1, 1), c(2, 1), c(4, 0)], c(4, 2));
    assert_eq!(seg.w_left, vec![1, 4]);
    assert_eq!(seg.w_right, vec![2, 5]);
    assert_eq!(seg.split, None);
    let seg = SegmentData::new(&[c(1, 0), c(2, 0), c(5, 0)], c(3, 1));
    assert_eq!(seg.split, Some(1));
    assert_eq!(seg.b, 1);
    let seg = SegmentData::new(&[c(1, 0), c(3, 0)], c(0, 1));
    assert_eq!(seg.split, Some(0));
    assert_eq!(seg.b, 0);
}

#[test]
fn a_cell_q1_examples() {
    let c = Cell::new;
    assert_eq!(
        a_cell_q1(&p(&[3]), &[c(2, 0), c(1, 0)], c(0, 1)).unwrap(),
        qrat(q_int(1), q_int(3))
    );
    assert_eq!(
        a_cell_q1(&p(&[2]), &[c(1, 0)], c(2, 0)).unwrap(),
        qrat(qpoly(&[1]), qpoly(&[0, 1, 1]))
    );
    assert!(a_cell_q1(&p(&[2]), &[c(0, 0)], c(2, 0)).unwrap().is_zero());
}

/// The generic weight at `q = q0`, reduced in `t`, agrees with both closed
/// forms at `t = 1` and `t = 0`.
#[test]
fn closed_forms_match_generic_weight() {
    let (qs, _) = SamplePoints::new(DEFAULT_SEED).grid(2, 0);
    for e in all_hessenberg(5) {
        for mu in partitions_of(e.n()) {
            for t in crate::tableaux::enumerate_syt(&e, &mu).unwrap() {
                for i in 1..=t.n() {
                    let (lam, w, x) = (t.shape_before(i), t.strip_sequence(&e, i), t.cell(i));
                    let generic = a_cell_factored(&lam, &w, x).unwrap();
                    let q1 = a_cell_q1(&lam, &w, x).unwrap();
                    let t0 = a_cell_t0(&lam, &w, x).unwrap();
                    for q0 in &qs {
                        let in_t = generic.eval_q(q0).unwrap();
                        assert_eq!(in_t.eval(&rational(1)).unwrap(), q1.eval(q0).unwrap());
                        assert_eq!(in_t.eval(&rational(0)).unwrap(), t0.eval(q0).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn heart_simplifies() {
    // Product over strip cells in the row below x telescopes.
    for e in all_hessenberg(5) {
        for mu in partitions_of(e.n()) {
            for t in crate::tableaux::enumerate_syt(&e, &mu).unwrap() {
                for i in 1..=t.n() {
                    let x = t.cell(i);
                    if x.row == 0 {
                        continue;
                    }
                    let lam = t.shape_before(i);
                    let w = t.strip_sequence(&e, i);
                    let Some(wl) = w.iter().filter(|c| c.row + 1 == x.row).map(|c| c.col).min()
                    else {
                        continue;
                    };
                    let below = lam.row_len(x.row - 1);
                    let heart: UniRat = w
                        .iter()
                        .filter(|c| c.row + 1 == x.row)
                        .map(|c| {
                            let k = c.col - x.col;
                            qrat(
                                &UniPoly::monomial(k, rational(1)) - &UniPoly::one(),
                                &UniPoly::monomial(k + 1, rational(1)) - &UniPoly::one(),
                            )
                        })
                        .fold(UniRat::one(), |a, b| a.times(&b));
                    if wl == x.col {
                        assert!(heart.is_zero());
                        continue;
                    }
                    let simplified = qrat(
                        &UniPoly::monomial(wl - x.col, rational(1)) - &UniPoly::one(),
                        &UniPoly::monomial(below - x.col, rational(1)) - &UniPoly::one(),
                    );
                    assert_eq!(heart, simplified);
                }
            }
        }
    }
}

#[test]
fn a_cell_t0_examples() {
    let c = Cell::new;
    assert_eq!(
        a_cell_t0(&Partition::empty(), &[], c(0, 0)).unwrap(),
        UniRat::one()
    );
    assert_eq!(
        a_cell_t0(&p(&[1]), &[c(0, 0)], c(1, 0)).unwrap(),
        UniRat::power_of_var(-1)
    );
    assert!(a_cell_t0(&p(&[1]), &[c(0, 0)], c(0, 1)).unwrap().is_zero());
}

/// `A_T^e(q,1) ≠ 0` exactly on SYT-bar.
#[test]
fn nonvanishing_support() {
    for e in all_hessenberg(5) {
        for mu in partitions_of(e.n()) {
            for t in crate::tableaux::enumerate_syt(&e, &mu).unwrap() {
                let v = a_tableau_q1(&t, &e).unwrap();
                assert_eq!(!v.is_zero(), t.satisfies_star(&e), "{e:?} {t}");
            }
        }
    }
}

#[test]
fn e_expansion_small() {
    let ex = e_expansion(&h(&[0, 0])).unwrap();
    assert_eq!(ex.coeffs.len(), 1);
    assert_eq!(ex.coeffs[&p(&[2])], qpoly(&[1, 1]));
    let ex = e_expansion(&h(&[0, 1])).unwrap();
    assert_eq!(ex.coeffs.len(), 1);
    assert_eq!(ex.coeffs[&p(&[1, 1])], qpoly(&[1]));
    let ex = e_expansion(&h(&[0])).unwrap();
    assert_eq!(ex.coeffs[&p(&[1])], qpoly(&[1]));
}

#[test]
fn e_expansion_seven_vertices() {
    let g = golden_n7();
    let ex = e_expansion(&g.hessenberg).unwrap();
    assert_eq!(ex.coeffs, g.elementary);
    for (lambda, summands) in &ex.breakdown {
        let sum = summands.iter().fold(UniRat::zero(), |a, (_, s)| a.plus(s));
        let expected = ex.coeffs.get(lambda).cloned().unwrap_or_else(UniPoly::zero);
        assert_eq!(sum, UniRat::from_poly(expected));
    }
    // The three summands for e_{4,2,1}.
    let qi = |k| UniRat::from_poly(q_int(k));
    let q = |k| UniRat::power_of_var(k);
    let mut expected = vec![
        q(2).times(&qi(4)).times(&qi(2)),
        q(3).times(&qi(4)).times(&qi(2)).div(&qi(3)).unwrap(),
        q(3).times(&qi(2).pow(4).unwrap()).div(&qi(3)).unwrap(),
    ];
    let mut got: Vec<UniRat> = ex.breakdown[&p(&[4, 2, 1])]
        .iter()
        .map(|(_, s)| s.clone())
        .collect();
    let key = |f: &UniRat| f.to_string();
    expected.sort_by_key(key);
    got.sort_by_key(key);
    assert_eq!(got, expected);
    assert_eq!(ex.breakdown[&p(&[5, 1, 1])].len(), 4);
}

#[test]
fn e_expansion_q1_seven_vertices() {
    let e = golden_n7().hessenberg;
    let q1 = e_expansion_q1(&e).unwrap();
    let b = &q1[&p(&[4, 2, 1])];
    let mut summands = b.summands.clone();
    summands.sort();
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    assert_eq!(summands, vec![r(8, 3), r(16, 3), r(8, 1)]);
    assert_eq!(b.total, rational(16));
}

#[test]
fn q1_totals_match_e_expansion() {
    for e in all_hessenberg(5) {
        let ex = e_expansion(&e).unwrap();
        let q1 = e_expansion_q1(&e).unwrap();
        for (lambda, c) in &ex.coeffs {
            assert_eq!(q1[lambda].total, c.eval(&rational(1)), "{e:?} {lambda}");
        }
        assert_eq!(q1.len(), ex.breakdown.len());
    }
    assert_eq!(
        e_expansion_q1(&h(&[0, 0])).unwrap()[&p(&[2])].total,
        rational(2)
    );
    assert_eq!(
        e_expansion_q1(&h(&[0])).unwrap()[&p(&[1])].total,
        rational(1)
    );
}

#[test]
fn three_t_one_routes_agree() {
    for e in all_hessenberg(5) {
        let ex = e_expansion(&e).unwrap();
        let base = base_exponent(&e);
        for lambda in partitions_of(e.n()) {
            let expected = ex
                .coeffs
                .get(&lambda)
                .cloned()
                .unwrap_or_else(UniPoly::zero);
            assert_eq!(
                hat_a_coeff(&e, &lambda).unwrap().coeff,
                expected,
                "{e:?} {lambda}"
            );
            let sum = enumerate_syt_bar(&e, &lambda)
                .unwrap()
                .iter()
                .fold(UniRat::zero(), |acc, t| {
                    acc.plus(&a_tableau_q1(t, &e).unwrap())
                });
            let via_cells = lambda
                .parts()
                .iter()
                .fold(sum.times(&UniRat::power_of_var(base)), |acc, &k| {
                    acc.times(&UniRat::from_poly(q_fact(k)))
                });
            assert_eq!(via_cells, UniRat::from_poly(expected));
        }
    }
}

#[test]
fn hat_a_coeff_small() {
    assert_eq!(
        hat_a_coeff(&h(&[0, 0]), &p(&[2])).unwrap().coeff,
        qpoly(&[1, 1])
    );
    assert_eq!(hat_a_coeff(&h(&[0]), &p(&[1])).unwrap().coeff, qpoly(&[1]));
}

#[test]
fn palindromic() {
    for e in all_hessenberg(5) {
        for (lambda, c) in e_expansion(&e).unwrap().coeffs {
            assert!(is_palindromic(&c, e.num_edges()), "{e:?} {lambda}");
        }
    }
    assert!(!is_palindromic(&qpoly(&[1, 2]), 1));
}

#[test]
fn coloring_examples() {
    let k = admissible_colorings(&h(&[0, 0]), &p(&[1, 1])).unwrap();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0].colors, vec![1, 2]);
    assert_eq!(k[0].weight, rational(1));
    let k = admissible_colorings(&h(&[0]), &p(&[1])).unwrap();
    assert_eq!(k[0].colors, vec![1]);
    let e = golden_n7().hessenberg;
    let k = admissible_colorings(&e, &p(&[4, 2, 1]).conjugate()).unwrap();
    assert_eq!(k.len(), 3);
    let total = k.iter().fold(rational(0), |a, c| a + &c.weight);
    assert_eq!(total, rational(2));
    assert!(matches!(
        admissible_colorings(&e, &p(&[2])),
        Err(Error::SizeMismatch { .. })
    ));
}

#[test]
fn colorings_biject_with_syt_bar() {
    for e in all_hessenberg(5) {
        let q1 = e_expansion_q1(&e).unwrap();
        for lambda in partitions_of(e.n()) {
            let from_colorings = admissible_colorings(&e, &lambda.conjugate()).unwrap();
            let mut from_tableaux: Vec<Vec<usize>> = enumerate_syt_bar(&e, &lambda)
                .unwrap()
                .iter()
                .map(coloring_of)
                .collect();
            from_tableaux.sort();
            let colors: Vec<Vec<usize>> = from_colorings.iter().map(|c| c.colors.clone()).collect();
            assert_eq!(colors, from_tableaux, "{e:?} {lambda}");
            let scale = BigRational::from_integer(lambda.parts().iter().product::<usize>().into());
            let total = from_colorings
                .iter()
                .fold(rational(0), |a, c| a + &c.weight * &scale);
            let expected = q1.get(&lambda).map_or(rational(0), |b| b.total.clone());
            assert_eq!(total, expected);
        }
    }
}

#[test]
fn hl_small() {
    let c = hl_coeff(&h(&[0]), &p(&[1])).unwrap();
    assert_eq!(c, qrat(qpoly(&[0, 1]), qpoly(&[-1, 1])));
}

#[test]
fn hl_routes_agree() {
    for e in all_hessenberg(5) {
        for lambda in partitions_of(e.n()) {
            assert_eq!(
                hl_coeff(&e, &lambda).unwrap(),
                hl_via_cells(&e, &lambda).unwrap(),
                "{e:?} {lambda}"
            );
        }
    }
}
