use proptest::prelude::*;

use super::*;
use crate::algebra::{rational, Ring, UniPoly};
use crate::error::Error;
use crate::interval::Hessenberg;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

fn h(v: &[usize]) -> Hessenberg {
    Hessenberg::new(v.to_vec()).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn qpoly(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

fn y(exps: &[u32], c: UniPoly) -> VkElement {
    VkElement::monomial(exps.to_vec(), Partition::empty(), c)
}

#[test]
fn brute_small() {
    let chi = chromatic_brute(&h(&[0, 0]), 2).unwrap();
    assert_eq!(chi.coeff(&p(&[1, 1])), qpoly(&[1, 1]));
    assert!(chi.coeff(&p(&[2])).is_zero());
    let chi = chromatic_brute(&h(&[0, 1]), 2).unwrap();
    assert_eq!(chi.coeff(&p(&[2])), qpoly(&[1]));
    assert_eq!(chi.coeff(&p(&[1, 1])), qpoly(&[2]));
    assert!(matches!(
        chromatic_brute(&h(&[0, 0, 0]), 2),
        Err(Error::TooFewVariables { vars: 2, needed: 3 })
    ));
}

#[test]
fn brute_extra_variables_do_not_change_coefficients() {
    let e = h(&[0, 0, 1, 2]);
    assert_eq!(
        chromatic_brute(&e, 4).unwrap(),
        chromatic_brute(&e, 5).unwrap()
    );
}

#[test]
fn asc_bound() {
    for n in 1..=5 {
        for e in Hessenberg::enumerate(n) {
            let chi = chromatic_symmetric(&e).unwrap();
            for c in chi.terms().values() {
                assert!(c.degree().unwrap() <= e.num_edges());
            }
            // At q = 1 the coefficient of m_{1^n} counts all proper colorings
            // with distinct colors: n!.
            let ones = Partition::new(vec![1; n]).unwrap();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(chi.coeff(&ones).eval(&rational(1)), rational(fact));
        }
    }
}

#[test]
fn hecke_examples() {
    let one = y(&[0, 0], UniPoly::one());
    assert_eq!(hecke_t(1, &one).unwrap(), one);
    let y1 = y(&[1, 0], UniPoly::one());
    let expected = y(&[0, 1], UniPoly::one()).add(&y(&[1, 0], qpoly(&[1, -1])));
    assert_eq!(hecke_t(1, &y1).unwrap(), expected);
    let y2 = y(&[0, 1], UniPoly::one());
    assert_eq!(hecke_t(1, &y2).unwrap(), y(&[1, 0], UniPoly::x()));
    assert!(matches!(
        hecke_t(2, &y2),
        Err(Error::OperatorIndex { index: 2, vars: 2 })
    ));
}

/// `T_i` fixes `1` and sends `y_2 - q y_1` to `-q (y_2 - q y_1)`, so its
/// eigenvalues are `1` and `-q`.
#[test]
fn hecke_eigenvalues() {
    let one = y(&[0, 0], UniPoly::one());
    assert_eq!(hecke_t(1, &one).unwrap(), one);
    let diff = y(&[0, 1], UniPoly::one()).add(&y(&[1, 0], qpoly(&[0, -1])));
    assert_eq!(hecke_t(1, &diff).unwrap(), diff.scale(&qpoly(&[0, -1])));
}

#[test]
fn d_plus_examples() {
    assert_eq!(d_plus(&VkElement::one()).unwrap(), y(&[0], UniPoly::one()));
    let e1 = SymFunc::<UniPoly>::basis_element(Basis::E, p(&[1]), 1);
    let got = d_plus(&VkElement::from_symfunc(&e1, 0)).unwrap();
    let expected = VkElement::from_symfunc(&e1, 1).add(&y(&[1], qpoly(&[-1, 1])));
    assert_eq!(got, expected);
}

#[test]
fn d_minus_examples() {
    let e1 = SymFunc::<UniPoly>::basis_element(Basis::E, p(&[1]), 2);
    let e2 = SymFunc::<UniPoly>::basis_element(Basis::E, p(&[2]), 2);
    assert_eq!(
        d_minus(&y(&[0], UniPoly::one())).unwrap(),
        VkElement::from_symfunc(&e1, 0)
    );
    assert_eq!(
        d_minus(&y(&[1], UniPoly::one())).unwrap(),
        VkElement::from_symfunc(&e2, 0).scale(&qpoly(&[-1]))
    );
    let composed = d_minus(&d_plus(&VkElement::one()).unwrap()).unwrap();
    assert_eq!(composed, VkElement::from_symfunc(&e1, 0));
    assert!(matches!(
        d_minus(&VkElement::one()),
        Err(Error::OperatorIndex { .. })
    ));
}

#[test]
fn operator_examples() {
    let f = f_via_operators(&h(&[0])).unwrap();
    let e1 = SymFunc::<UniPoly>::basis_element(Basis::E, p(&[1]), 1);
    assert_eq!(f, e1);
    assert_eq!(chi_from_f(&f, 1).unwrap(), e1);
    let chi = chi_from_f(&f_via_operators(&h(&[0, 0])).unwrap(), 2).unwrap();
    let e2 = SymFunc::<UniPoly>::basis_element(Basis::E, p(&[2]), 2).scale(&qpoly(&[1, 1]));
    assert_eq!(chi, e2);
}

#[test]
fn operators_match_colorings() {
    for n in 1..=5 {
        for e in Hessenberg::enumerate(n) {
            let f = f_via_operators(&e).unwrap();
            assert!(f.is_homogeneous_of_degree(n));
            let chi = chi_from_f(&f, n).unwrap();
            assert_eq!(chi, chromatic_symmetric(&e).unwrap(), "{e:?}");
        }
    }
}

#[test]
fn checked_run_counts_relations() {
    let (f, report) = f_via_operators_checked(&h(&[0, 1, 1, 2])).unwrap();
    assert_eq!(f, f_via_operators(&h(&[0, 1, 1, 2])).unwrap());
    assert!(report.quadratic_checks > 0);
    assert_eq!(report.quadratic_checks, report.hecke_applications);
}

fn arb_element(k: usize, max_deg: u32) -> impl Strategy<Value = VkElement> {
    let term = (
        proptest::collection::vec(0..=max_deg, k),
        prop_oneof![Just(vec![]), Just(vec![1]), Just(vec![2]), Just(vec![1, 1])],
        proptest::collection::vec(-3i64..=3, 1..3),
    );
    proptest::collection::vec(term, 1..5).prop_map(move |terms| {
        let mut f = VkElement::zero(k);
        for (a, rho, c) in terms {
            f.add_term(a, Partition::new(rho).unwrap(), &UniPoly::from_ints(&c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quadratic_relation(f in arb_element(3, 3), i in 1usize..3) {
        let q = UniPoly::x();
        let tf = hecke_t(i, &f).unwrap();
        let ttf = hecke_t(i, &tf).unwrap();
        let rhs = tf.scale(&(&UniPoly::one() - &q)).add(&f.scale(&q));
        prop_assert_eq!(ttf, rhs);
    }

    #[test]
    fn braid_relation(f in arb_element(3, 2)) {
        let a = hecke_t(1, &hecke_t(2, &hecke_t(1, &f).unwrap()).unwrap()).unwrap();
        let b = hecke_t(2, &hecke_t(1, &hecke_t(2, &f).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn operators_preserve_homogeneity(f in arb_element(2, 2)) {
        let g = d_plus(&f).unwrap();
        prop_assert_eq!(g.k(), 3);
        let h = d_minus(&f).unwrap();
        prop_assert_eq!(h.k(), 1);
        for (a, rho) in g.terms().keys() {
            prop_assert!(a.iter().sum::<u32>() as usize + rho.size() <= f.degree());
        }
    }
}
