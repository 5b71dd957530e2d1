use super::*;
use crate::cartan::{RootDatum, WeightVec};
use crate::classical::okamoto_seq;
use crate::ncalg::{ConstCommutator, QCommutator, WeylRealization};
use crate::poly::RatFunc;
use crate::scalars::KmScalar;
use crate::verma::graded_basis;
use crate::weylaction::ActionContext;
use proptest::prelude::*;

fn datum(name: &str) -> RootDatum {
    RootDatum::named(name).unwrap()
}

fn test_weights(d: &RootDatum) -> Vec<WeightVec> {
    let mut w: Vec<WeightVec> = (0..d.n()).map(|i| d.fundamental(i).clone()).collect();
    w.push(d.rho());
    w
}

fn tau_round_trip<R: Realization>(ctx: &ActionContext<R>, max_len: usize) -> usize {
    let d = ctx.datum().clone();
    let mut seen = 0;
    for len in 0..=max_len {
        for w in d.reduced_words(len) {
            for mu in test_weights(&d) {
                let t = ctx.tau_function(&w, &mu).unwrap();
                let s = ctx.render_tau(&t);
                let back = parse_tau(ctx.realization(), &s).unwrap_or_else(|e| panic!("{s}: {e}"));
                assert_eq!(back, t, "{s}");
                seen += 1;
            }
        }
    }
    seen
}

#[test]
fn grammar_precedence() {
    let e = parse_expr("-2 f1^-1 f2 + 3/4*b1").unwrap();
    let lhs = Expr::Neg(Box::new(Expr::Mul(
        Box::new(Expr::Mul(Box::new(Expr::Num(2.into())), Box::new(Expr::Pow(Box::new(Expr::Ident("f1".into())), -1)))),
        Box::new(Expr::Ident("f2".into())),
    )));
    let rhs = Expr::Mul(Box::new(Expr::Div(Box::new(Expr::Num(3.into())), Box::new(Expr::Num(4.into())))), Box::new(Expr::Ident("b1".into())));
    assert_eq!(e, Expr::Add(Box::new(lhs), Box::new(rhs)));
    assert!(parse_expr("").is_err());
    assert!(parse_expr("f1 +").is_err());
    assert!(parse_expr("(f1").is_err());
    assert!(parse_expr("f1 $ f2").is_err());
    assert!(parse_expr("f1^x").is_err());
}

#[test]
fn noncommutative_order_is_kept() {
    let r = ConstCommutator::standard(datum("A2"));
    let a = parse_elem(&r, "f1 f2").unwrap();
    let b = parse_elem(&r, "f2 f1").unwrap();
    // f1 f2 − f2 f1 = c_12 with c_12 = 1
    assert_eq!(r.add(&a, &r.scale(&-KmScalar::one(), &b)), r.one());
    assert!(parse_elem(&r, "f1/f2").is_err());
    assert!(parse_elem(&r, "f1/b1").is_err());
    assert!(parse_elem(&r, "f9").is_err());
    assert!(parse_elem(&r, "q").is_err());
}

#[test]
fn q_scalars_parse() {
    let r = QCommutator::standard(datum("A2"));
    let a = parse_elem(&r, "(2*q^3 - q)/(q^2) q^{b1 - 2*b2 + 1} f1").unwrap();
    let s = r.render(&a);
    assert_eq!(parse_elem(&r, &s).unwrap(), a);
    assert!(parse_elem(&r, "b1").is_err());
    assert!(parse_elem(&r, "q^{b1*b2}").is_err());
}

#[test]
fn km_tau_functions_round_trip() {
    for name in ["A2", "B2"] {
        let ctx = ActionContext::new(ConstCommutator::standard(datum(name))).unwrap();
        assert!(tau_round_trip(&ctx, 4) > 0);
    }
    let ctx = ActionContext::new(ConstCommutator::standard(datum("A3"))).unwrap();
    let t = ctx.tau_function(&[0, 1, 2, 0, 1, 0], datum("A3").fundamental(0)).unwrap();
    assert_eq!(parse_tau(ctx.realization(), &ctx.render_tau(&t)).unwrap(), t);
}

#[test]
fn q_tau_functions_round_trip() {
    for name in ["A2", "B2"] {
        let ctx = ActionContext::new(QCommutator::standard(datum(name))).unwrap();
        assert!(tau_round_trip(&ctx, 3) > 0);
    }
}

#[test]
fn weyl_tau_functions_round_trip() {
    let ctx = ActionContext::new(WeylRealization::preset("A2").unwrap()).unwrap();
    assert!(tau_round_trip(&ctx, 3) > 0);
}

#[test]
fn classical_taus_round_trip() {
    for name in ["A2", "B2", "A3"] {
        let c = ClassicalContext::standard(datum(name));
        let d = c.datum().clone();
        for len in 0..=3 {
            for w in d.reduced_words(len) {
                for mu in test_weights(&d) {
                    let t = c.classical_tau(&w, &mu).unwrap();
                    let s = c.render_tau(&t);
                    assert_eq!(parse_classical_tau(&c, &s).unwrap(), t, "{s}");
                }
            }
        }
    }
    let c = ClassicalContext::standard(datum("A2"));
    let a = parse_poisson(&c, "(f1 + b2)/(f1 f2)").unwrap();
    assert_eq!(parse_poisson(&c, &c.render(&a)).unwrap(), a);
    assert!(parse_poisson(&c, "1/(f1 - f1)").is_err());
}

#[test]
fn okamoto_round_trip() {
    for q in okamoto_seq(6).unwrap().polys {
        assert_eq!(parse_upoly("x", &q.render("x")).unwrap(), q);
    }
    assert_eq!(parse_rational("-3/4").unwrap(), BigRational::new((-3).into(), 4.into()));
    assert!(parse_rational("x").is_err());
}

#[test]
fn verma_quotients_round_trip() {
    let d = datum("A2");
    let k = graded_basis::<BigRational>(&d, 16).unwrap();
    let q = graded_basis::<RatFunc>(&d, 16).unwrap();
    let rho = d.rho();
    for w in [vec![0, 1], vec![0, 1, 0]] {
        let p = k.singular_divisibility(&w, &rho, &rho).unwrap().1.quotient.unwrap();
        assert_eq!(parse_word::<BigRational>(d.labels(), &p.render(d.labels())).unwrap(), p);
        let p = q.singular_divisibility(&w, &rho, &rho).unwrap().1.quotient.unwrap();
        let s = p.render(d.labels());
        assert_eq!(parse_word::<RatFunc>(d.labels(), &s).unwrap(), p, "{s}");
    }
    assert!(parse_word::<BigRational>(d.labels(), "q f1").is_err());
}

#[test]
fn big_integers_survive() {
    let n = "123456789012345678901234567890";
    let p = parse_upoly("x", n).unwrap();
    assert_eq!(p.render("x"), n);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_poisson_elements_round_trip(
        terms in proptest::collection::vec((-5i64..6, proptest::collection::vec(0u32..3, 4)), 1..5),
        den in proptest::collection::vec((1i64..4, proptest::collection::vec(0u32..2, 4)), 1..3),
    ) {
        use crate::poly::{MPoly, Mono};
        let c = ClassicalContext::standard(datum("A2"));
        let build = |ts: &[(i64, Vec<u32>)]| {
            let mut p = MPoly::zero();
            for (a, e) in ts {
                p.add_term(Mono::new(e.clone()), crate::poly::upoly::rat(*a));
            }
            PoissonElement::from_poly(p)
        };
        let (a, b) = (build(&terms), build(&den));
        prop_assume!(!b.is_zero());
        let x = a.mul(&b.inv().unwrap());
        let s = c.render(&x);
        prop_assert_eq!(parse_poisson(&c, &s).unwrap(), x);
    }

    #[test]
    fn random_upolys_round_trip(cs in proptest::collection::vec(-50i64..50, 0..8)) {
        let p = UPoly::from_i64_coeffs(&cs);
        prop_assert_eq!(parse_upoly("q", &p.render("q")).unwrap(), p);
    }
}

#[test]
fn affine_lattice_taus_round_trip() {
    let h = crate::hirota::affine_setup(3, None).unwrap();
    let c = h.action();
    for k in 0..6 {
        for i in 0..3 {
            let t = c.apply_simple(i, &c.apply_simple((i + 1) % 3, &h.tau_var(k)).unwrap()).unwrap();
            let s = c.render_tau(&t);
            assert_eq!(parse_tau(c.realization(), &s).unwrap(), t, "{s}");
        }
    }
}
