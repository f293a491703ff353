use super::*;
use crate::algebra::Ring;
use crate::algebra::{SamplePoints, UniPoly, UniRat, DEFAULT_SEED};
use crate::partitions::partitions_up_to;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|&(k, c)| (k, rational(c))))
}

fn nonempty_up_to(n: usize) -> Vec<Partition> {
    partitions_up_to(n)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect()
}

#[test]
fn small_htilde() {
    let h1 = htilde(&p(&[1]));
    assert_eq!(h1.coeff(&p(&[1])), BiPoly::one());

    let h2 = htilde(&p(&[2]));
    assert_eq!(h2.coeff(&p(&[2])), BiPoly::one());
    assert_eq!(h2.coeff(&p(&[1, 1])), bp(&[((0, 0), 1), ((1, 0), 1)]));

    let h11 = htilde(&p(&[1, 1]));
    assert_eq!(h11.coeff(&p(&[2])), BiPoly::one());
    assert_eq!(h11.coeff(&p(&[1, 1])), bp(&[((0, 0), 1), ((0, 1), 1)]));
}

#[test]
fn htilde_21_in_schur_basis() {
    let s = htilde(&p(&[2, 1])).to_basis(Basis::S);
    assert_eq!(s.coeff(&p(&[3])), BiPoly::one());
    assert_eq!(s.coeff(&p(&[2, 1])), bp(&[((1, 0), 1), ((0, 1), 1)]));
    assert_eq!(s.coeff(&p(&[1, 1, 1])), bp(&[((1, 1), 1)]));
}

#[test]
fn htilde_has_unit_coefficient_on_top_schur() {
    for mu in nonempty_up_to(5) {
        let s = htilde(&mu).to_basis(Basis::S);
        assert_eq!(s.coeff(&p(&[mu.size()])), BiPoly::one(), "{mu}");
    }
}

#[test]
fn cache_is_shared() {
    let cache = MacdonaldCache::new();
    assert!(cache.is_empty());
    let a = cache.get(&p(&[2, 1]));
    let b = cache.get(&p(&[2, 1]));
    assert!(Arc::ptr_eq(&a, &b));
    assert_eq!(cache.len(), 1);
}

#[test]
fn pieri_examples() {
    let t = RatFunc::t;
    let q = RatFunc::q;
    assert_eq!(
        pieri_d(&Partition::empty(), Cell::new(0, 0)).unwrap(),
        RatFunc::one()
    );
    let d10 = pieri_d(&p(&[1]), Cell::new(1, 0)).unwrap();
    assert_eq!(d10, (RatFunc::one() - t()).div(&(q() - t())).unwrap());
    let d01 = pieri_d(&p(&[1]), Cell::new(0, 1)).unwrap();
    assert_eq!(d01, (q() - RatFunc::one()).div(&(q() - t())).unwrap());
    assert!(matches!(
        pieri_d(&p(&[1]), Cell::new(1, 1)),
        Err(Error::NotAddable { .. })
    ));
}

#[test]
fn pieri_rule() {
    for l in partitions_up_to(5) {
        assert!(check_pieri(&l).unwrap(), "{l}");
    }
}

#[test]
fn t_equals_one() {
    let (qs, _) = SamplePoints::new(DEFAULT_SEED).grid(3, 0);
    for mu in nonempty_up_to(5) {
        assert!(check_t_one(&mu, &qs).unwrap(), "{mu}");
    }
}

#[test]
fn minus_one() {
    assert_eq!(
        htilde_at_minus_one(&p(&[1])),
        RatFunc::from_poly(bp(&[((0, 0), -1)]))
    );
    assert_eq!(
        htilde_at_minus_one(&p(&[2, 1])),
        RatFunc::from_poly(bp(&[((1, 1), -1)]))
    );
    assert_eq!(htilde_at_minus_one(&p(&[2])), RatFunc::q());
    for mu in nonempty_up_to(6) {
        assert!(check_minus_one(&mu), "{mu}");
    }
}

#[test]
fn conjugation_symmetry() {
    for mu in nonempty_up_to(5) {
        assert!(check_conjugation(&mu), "{mu}");
    }
}

#[test]
fn bridge_to_hall_littlewood() {
    let (qs, _) = SamplePoints::new(DEFAULT_SEED).grid(3, 0);
    for l in nonempty_up_to(5) {
        assert!(check_bridge(&l, &qs).unwrap(), "{l}");
    }
}

#[test]
fn bridge_detects_wrong_power() {
    // q^{n(λ')} alone is off by q^{|λ|}
    let l = p(&[2, 1]);
    let conj = l.conjugate();
    let at_t0 = htilde(&l).map_coeffs(|c| UniRat::from_poly(c.eval_t(&rational(0))));
    let lhs = at_t0
        .plethysm_scale(|k| {
            Ok(UniRat::from_poly(
                &UniPoly::monomial(k, rational(1)) - &UniPoly::one(),
            ))
        })
        .unwrap();
    let wrong =
        hall_littlewood_q_inverted(&conj).scale(&UniRat::power_of_var(conj.n_stat() as i64));
    assert_ne!(lhs, wrong);
}
