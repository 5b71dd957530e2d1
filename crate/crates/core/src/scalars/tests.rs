use super::*;
use crate::cartan::RootDatum;
use crate::poly::upoly::rat;
use crate::poly::{MPoly, Mono, RatFunc};
use num::BigRational;
use proptest::prelude::*;

fn integer_binom(a: i64, k: u32) -> BigRational {
    // independent oracle: Pascal recursion on integers for a >= 0, sign rule otherwise
    if a >= 0 {
        let mut row = vec![BigRational::from_integer(1.into())];
        for _ in 0..a {
            let mut nxt = vec![rat(1)];
            for w in row.windows(2) {
                nxt.push(&w[0] + &w[1]);
            }
            nxt.push(rat(1));
            row = nxt;
        }
        row.get(k as usize).cloned().unwrap_or_else(|| rat(0))
    } else {
        // binom(-m, k) = (-1)^k binom(m+k-1, k)
        let v = integer_binom(-a + k as i64 - 1, k);
        if k % 2 == 0 { v } else { -v }
    }
}

#[test]
fn param_binom_small() {
    assert!(KmScalar::binom(&[1], 0, 0).is_one());
    let b2 = KmScalar::binom(&[1], 0, 2);
    let expect = (&MPoly::var(0).pow(2) - &MPoly::var(0)).scale(&BigRational::new(1.into(), 2.into()));
    assert_eq!(b2.0, expect);
}

#[test]
fn param_binom_phi_matches_integer_binomial() {
    for l in -5..8i64 {
        for k in 0..6u32 {
            let v = KmScalar::binom(&[1, 0], 0, k).phi(&[l, 3]);
            assert_eq!(v, integer_binom(l, k), "l={l} k={k}");
        }
    }
}

#[test]
fn qbinom_symbolic_substitution() {
    let s = QScalar::qbinom(&[1], 0, 1, 1);
    assert_eq!(s.phi(&[3]), RatFunc::qint(3, 1));
    let three = &(&RatFunc::q_pow(2) + &RatFunc::one()) + &RatFunc::q_pow(-2);
    assert_eq!(s.phi(&[3]), three);
}

#[test]
fn qbinom_symbolic_matches_integer_family() {
    for d in 1..3i64 {
        for a in -3..6i64 {
            for n in -2..3i64 {
                for k in 0..4u32 {
                    let s = QScalar::qbinom(&[1, 0], n, k, d).phi(&[a, 0]);
                    assert_eq!(s, RatFunc::qbinom(a + n, k, d));
                    assert_eq!(s.eval_at_one().unwrap(), integer_binom(a + n, k));
                }
            }
        }
    }
}

#[test]
fn phi_on_default_model() {
    let d = RootDatum::named("A2").unwrap();
    let l1 = d.fundamental(0).clone();
    let s = KmScalar::linear(&d.coroot_from_simple(&[1, 2]), 0);
    assert_eq!(s.phi(&l1), rat(1));
    let q = QScalar::qpow(&d.coroot_from_simple(&[1, 1]), 0);
    assert_eq!(q.phi(&l1), RatFunc::q());
    assert_eq!(KmScalar::one().phi(&l1), rat(1));
}

#[test]
fn render_km() {
    let names = vec!["b1".to_string(), "b2".to_string()];
    let s = KmScalar(&MPoly::from_i64(1) - &MPoly::var(0));
    assert_eq!(s.render(&names), "-b1 + 1");
    let t = KmScalar(MPoly::term(BigRational::new(3.into(), 2.into()), Mono::new(vec![2, 1])));
    assert_eq!(t.render(&names), "3/2*b1^2*b2");
}

#[test]
fn render_q() {
    let names = vec!["b1".to_string()];
    let s = QScalar::qnum(&[1], 0, 1);
    assert_eq!(s.render(&names), "(q)/(q^2 - 1)*q^{b1} - (q)/(q^2 - 1)*q^{-b1}");
}

fn km_strategy() -> impl Strategy<Value = KmScalar> {
    prop::collection::vec(((-3i64..4), (0u32..3), (0u32..3)), 0..5).prop_map(|ts| {
        let mut p = MPoly::zero();
        for (c, e0, e1) in ts {
            p.add_term(Mono::new(vec![e0, e1]), rat(c));
        }
        KmScalar(p)
    })
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    ((-3i64..4), (-2i64..3), (0usize..3)).prop_map(|(c, e, f)| {
        let base = &RatFunc::from_i64(c) * &RatFunc::q_pow(e);
        let den = RatFunc::qint(f as i64 + 1, 1);
        &base * &den.inv()
    })
}

fn q_strategy() -> impl Strategy<Value = QScalar> {
    prop::collection::vec((ratfunc_strategy(), (-2i64..3), (-2i64..3)), 0..4).prop_map(|ts| {
        let mut s = QScalar::zero();
        for (c, g0, g1) in ts {
            s.add_term(vec![g0, g1], c);
        }
        s
    })
}

fn weight_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_ring_hom_km(a in km_strategy(), b in km_strategy(), l in weight_strategy()) {
        prop_assert_eq!((a.clone() * &b).phi(&l), a.phi(&l) * b.phi(&l));
        prop_assert_eq!((a.clone() + &b).phi(&l), a.phi(&l) + b.phi(&l));
    }

    #[test]
    fn phi_is_ring_hom_q(a in q_strategy(), b in q_strategy(), l in weight_strategy()) {
        prop_assert_eq!((a.clone() * &b).phi(&l), a.phi(&l) * b.phi(&l));
        prop_assert_eq!((a.clone() + &b).phi(&l), a.phi(&l) + b.phi(&l));
    }

    #[test]
    fn tau_shift_composes_additively(a in km_strategy(), b in q_strategy(), u in weight_strategy(), v in weight_strategy()) {
        let uv: Vec<i64> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
        let (su, sv, suv) = (SymbolMap::tau_shift(&u), SymbolMap::tau_shift(&v), SymbolMap::tau_shift(&uv));
        prop_assert_eq!(a.substitute(&su).substitute(&sv), a.substitute(&suv));
        prop_assert_eq!(b.substitute(&su).substitute(&sv), b.substitute(&suv));
        prop_assert_eq!((a.clone() * &a).substitute(&su), a.substitute(&su) * a.substitute(&su));
    }

    #[test]
    fn weyl_action_compatible_with_phi(a in km_strategy(), b in q_strategy(), l in weight_strategy(), w in prop::collection::vec(0usize..2, 0..5)) {
        let d = RootDatum::named("B2").unwrap();
        let m = weyl_symbol_map(&d, &w);
        let wl = d.act_weight(&w, &l);
        prop_assert_eq!(a.substitute(&m).phi(&wl), a.phi(&l));
        prop_assert_eq!(b.substitute(&m).phi(&wl), b.phi(&l));
    }

    #[test]
    fn zero_test_by_evaluation_grid(a in km_strategy()) {
        // a polynomial of degree <= 4 in two symbols vanishes iff it vanishes on a 5x5 grid
        let mut all_zero = true;
        for x in 0..5 { for y in 0..5 { if !a.phi(&[x, y]).eq(&rat(0)) { all_zero = false; } } }
        prop_assert_eq!(all_zero, a.is_zero());
    }
}
