use super::*;
use crate::ncalg::{ConstCommutator, QCommutator};
use crate::poly::upoly::rat;
use proptest::prelude::*;

type Q = BigRational;
type QF = RatFunc;

fn datum(name: &str) -> RootDatum {
    RootDatum::named(name).unwrap()
}

fn km(name: &str, cap: usize) -> SerreQuotient<Q> {
    graded_basis(&datum(name), cap).unwrap()
}

fn qq(name: &str, cap: usize) -> SerreQuotient<QF> {
    graded_basis(&datum(name), cap).unwrap()
}

fn fund(d: &RootDatum, c: &[i64]) -> WeightVec {
    d.weight_from_fundamental(c)
}

#[test]
fn a2_dimensions() {
    for_both(|dim| {
        assert_eq!(dim(&[1, 1]), 2);
        assert_eq!(dim(&[2, 1]), 2);
        assert_eq!(dim(&[1, 2]), 2);
        assert_eq!(dim(&[2, 2]), 3);
    });
    let a1 = km("A1", 10);
    for k in 0..10 {
        assert_eq!(a1.basis_dim(&[k]).unwrap(), 1);
    }
}

fn for_both(f: impl Fn(&dyn Fn(&[i64]) -> usize)) {
    let k = km("A2", 8);
    f(&|md| k.basis_dim(md).unwrap());
    let q = qq("A2", 8);
    f(&|md| q.basis_dim(md).unwrap());
}

#[test]
fn a2_relator_row_reduces_to_one_relation() {
    assert_eq!(dense_ideal_rank::<Q>(&datum("A2"), &[2, 1]).unwrap(), 1);
    assert_eq!(dense_ideal_rank::<Q>(&datum("A2"), &[1, 1]).unwrap(), 0);
    assert_eq!(free_dim(&[2, 1]), 3);
    assert_eq!(free_dim(&[3, 2, 1]), 60);
}

/// Kostant partition function of `a α_1 + b α_2` in A2: `min(a, b) + 1`.
#[test]
fn a2_matches_partition_function() {
    let k = km("A2", 12);
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(k.basis_dim(&[a, b]).unwrap() as i64, a.min(b) + 1, "{a},{b}");
        }
    }
}

fn dense_agrees<F: Field>(name: &str, maxtotal: i64) {
    let d = datum(name);
    let q: SerreQuotient<F> = graded_basis(&d, maxtotal as usize).unwrap();
    let n = d.n();
    let mut md = vec![0i64; n];
    loop {
        let total: i64 = md.iter().sum();
        if total <= maxtotal {
            let dense = dense_ideal_rank::<F>(&d, &md).unwrap();
            assert_eq!(q.ideal_dim(&md).unwrap(), dense, "{name} {md:?}");
            assert_eq!(free_dim(&md), dense + q.basis_dim(&md).unwrap());
        }
        let mut k = 0;
        while k < n {
            md[k] += 1;
            if md[k] <= maxtotal {
                break;
            }
            md[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
}

#[test]
fn groebner_dimensions_match_dense_row_reduction() {
    dense_agrees::<Q>("A2", 7);
    dense_agrees::<Q>("B2", 7);
    dense_agrees::<Q>("G2", 7);
    dense_agrees::<Q>("A3", 5);
    dense_agrees::<QF>("A2", 6);
    dense_agrees::<QF>("B2", 6);
    dense_agrees::<QF>("G2", 6);
}

#[test]
fn reduce_annihilates_ideal_and_is_idempotent() {
    let d = datum("B2");
    let q: SerreQuotient<QF> = graded_basis(&d, 8).unwrap();
    for s in all_relators::<QF>(&d) {
        for u in [vec![], vec![0], vec![1, 0]] {
            for v in [vec![], vec![1], vec![0, 0]] {
                let p = GradedWord::word(&u).mul(&s).mul(&GradedWord::word(&v));
                assert!(q.reduce(&p).unwrap().is_zero());
            }
        }
    }
    for w in all_words(&[3, 2]) {
        let r = q.reduce(&GradedWord::monomial(w, QF::one())).unwrap();
        assert_eq!(q.reduce(&r).unwrap(), r);
        assert!(r.terms().all(|(w, _)| q.is_normal(w)));
    }
}

#[test]
fn cap_guard() {
    std::env::remove_var(MAXDEG_ENV);
    assert!(matches!(graded_basis::<Q>(&datum("A2"), DEFAULT_MAXDEG + 1), Err(Error::Cap(_))));
    let q = km("A2", 4);
    assert!(matches!(q.reduce(&GradedWord::word(&[0, 0, 1, 1, 0])), Err(Error::Cap(_))));
}

#[test]
fn singular_word_examples() {
    let d = datum("A2");
    let lam = fund(&d, &[2, 3]);
    assert_eq!(F_w_lambda(&d, &[0], &lam).unwrap(), vec![(0, 3)]);
    assert_eq!(F_w_lambda(&d, &[1], &lam).unwrap(), vec![(1, 4)]);
    // s_2 s_1 at λ = 0: f_2^2 f_1
    assert_eq!(F_w_lambda(&d, &[0, 1], &fund(&d, &[0, 0])).unwrap(), vec![(1, 2), (0, 1)]);
    assert_eq!(render_powers(&[(1, 2), (0, 1)], d.labels()), "f2^2 f1");
    assert!(F_w_lambda(&d, &[], &lam).unwrap().is_empty());
    assert!(matches!(F_w_lambda(&d, &[0, 0], &lam), Err(Error::Precondition(_))));
    assert!(matches!(F_w_lambda(&d, &[0], &fund(&d, &[-1, 0])), Err(Error::Precondition(_))));
}

#[test]
fn reduced_expression_independence_of_singular_word() {
    let d = datum("A2");
    let rho = d.rho();
    let k = km("A2", 12);
    let q = qq("A2", 12);
    let a = GradedWord::from_powers(&F_w_lambda(&d, &[0, 1, 0], &rho).unwrap());
    let b = GradedWord::from_powers(&F_w_lambda(&d, &[1, 0, 1], &rho).unwrap());
    assert_ne!(a, b);
    assert_eq!(k.reduce(&a).unwrap(), k.reduce(&b).unwrap());
    let (aq, bq) = (a.try_map(|c| Some(QF::from_rational(c.clone()))).unwrap(), b.try_map(|c| Some(QF::from_rational(c.clone()))).unwrap());
    assert_eq!(q.reduce(&aq).unwrap(), q.reduce(&bq).unwrap());
}

#[test]
fn e_action_examples() {
    let d = datum("A2");
    let k = km("A2", 10);
    let lam = fund(&d, &[3, 1]);
    for i in 0..2 {
        assert!(k.e_action(i, &VermaVector::highest(&lam)).unwrap().vec.is_zero());
        let v = VermaVector { lambda: lam.clone(), vec: GradedWord::word(&[i]) };
        let e = k.e_action(i, &v).unwrap();
        assert_eq!(e.vec, GradedWord::one().scale(&rat(d.pair(d.coroot(i), &lam))));
        let f = GradedWord::from_powers(&F_w_lambda(&d, &[i], &lam).unwrap());
        let v = VermaVector { lambda: lam.clone(), vec: f };
        assert!(k.is_singular(&v).unwrap());
    }
    // e_1 f_1^2 v_λ = (2⟨α∨_1,λ⟩ − 2) f_1 v_λ
    let v = VermaVector { lambda: lam.clone(), vec: GradedWord::word(&[0, 0]) };
    assert_eq!(k.e_action(0, &v).unwrap().vec, GradedWord::word(&[0]).scale(&rat(4)));
    // q case: [3]_q + [1]_q
    let q = qq("A2", 10);
    let v = VermaVector { lambda: lam.clone(), vec: GradedWord::word(&[0, 0]) };
    let e = q.e_action(0, &v).unwrap();
    assert_eq!(e.vec, GradedWord::word(&[0]).scale(&(QF::qint(3, 1) + QF::qint(1, 1))));
}

#[test]
fn e_action_in_b2_uses_symmetrizer() {
    let d = datum("B2");
    let q = qq("B2", 10);
    for i in 0..2 {
        let lam = fund(&d, &[2, 2]);
        let v = VermaVector { lambda: lam.clone(), vec: GradedWord::word(&[i]) };
        let e = q.e_action(i, &v).unwrap();
        assert_eq!(e.vec, GradedWord::one().scale(&QF::qint(2, d.d(i))));
    }
}

#[test]
fn singular_vectors_and_division_small_cases() {
    let d = datum("A2");
    let k = km("A2", 16);
    let rho = d.rho();
    // w = e
    let div = k.divide_right(&GradedWord::one(), &GradedWord::one()).unwrap();
    assert_eq!(div.quotient, Some(GradedWord::one()));
    // w = s_i: f_i^{⟨α∨_i,μ⟩}
    let (lam, mu) = (fund(&d, &[1, 2]), fund(&d, &[2, 0]));
    let (checks, div) = k.singular_divisibility(&[0], &lam, &mu).unwrap();
    assert!(checks.iter().all(|c| c.status.is_pass()));
    assert_eq!(div.quotient, Some(GradedWord::word(&[0, 0])));
    assert_eq!(div.nullity, 0);
    // s_2 s_1 at λ = μ = ρ
    let (checks, div) = k.singular_divisibility(&[0, 1], &rho, &rho).unwrap();
    assert!(checks.iter().all(|c| c.status.is_pass()), "{checks:?}");
    let p = div.quotient.unwrap();
    let big = GradedWord::from_powers(&F_w_lambda(&d, &[0, 1], &fund(&d, &[2, 2])).unwrap());
    let small = GradedWord::from_powers(&F_w_lambda(&d, &[0, 1], &rho).unwrap());
    assert_eq!(k.reduce(&p.mul(&small)).unwrap(), k.reduce(&big).unwrap());
}

#[test]
fn division_reports_absence() {
    let k = km("A2", 8);
    // f_1 f_2 is not a right multiple of f_1
    let div = k.divide_right(&GradedWord::word(&[0, 1]), &GradedWord::word(&[0])).unwrap();
    assert_eq!(div.quotient, None);
    assert!(matches!(
        k.divide_right(&GradedWord::word(&[0]), &GradedWord::word(&[1])),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn divisibility_grid_a2_b2_both_cases() {
    for name in ["A2", "B2"] {
        let d = datum(name);
        let k = km(name, 24);
        let q = qq(name, 24);
        let mut weights = vec![vec![0; d.lattice_rank()]];
        for i in 0..d.n() {
            weights.push(d.fundamental(i).clone());
        }
        weights.push(d.rho());
        for len in 0..=3 {
            for w in d.reduced_words(len) {
                for lam in &weights {
                    for mu in &weights {
                        let (c1, _) = k.singular_divisibility(&w, lam, mu).unwrap();
                        let (c2, _) = q.singular_divisibility(&w, lam, mu).unwrap();
                        for c in c1.iter().chain(&c2) {
                            assert!(c.status.is_pass(), "{name} {w:?} {lam:?} {mu:?} {c:?}");
                        }
                        let c = q1_consistency(&q, &k, &w, lam, mu).unwrap();
                        assert!(c.status.is_pass(), "{name} {w:?} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn crosscheck_examples() {
    let d = datum("A2");
    let ctx = ActionContext::new(ConstCommutator::standard(d.clone())).unwrap();
    let k = km("A2", 16);
    let zero = vec![0; d.lattice_rank()];
    for (w, lam, mu) in [(vec![0], zero.clone(), d.rho()), (vec![0, 1], zero.clone(), zero.clone()), (vec![0, 1, 0], d.rho(), fund(&d, &[1, 0]))] {
        let checks = sigma_phi_crosscheck(&ctx, &k, &w, &lam, &mu).unwrap();
        assert_eq!(checks.len(), 4);
        for c in &checks {
            assert!(c.status.is_pass(), "{w:?} {c:?}");
        }
    }
    // s_2 s_1 at λ = 0: both sides are f_2^2 f_1
    assert_eq!(sigma_phi_factors(&d, &[0, 1], &zero), vec![(1, 2), (0, 1)]);
    let qctx = ActionContext::new(QCommutator::standard(datum("B2"))).unwrap();
    let q = qq("B2", 16);
    let d = datum("B2");
    for w in [vec![0, 1], vec![1, 0, 1]] {
        let checks = sigma_phi_crosscheck(&qctx, &q, &w, &d.rho(), &fund(&d, &[0, 1])).unwrap();
        for c in &checks {
            assert!(c.status.is_pass(), "{w:?} {c:?}");
        }
    }
}

#[test]
fn render_forms() {
    let d = datum("A2");
    let mut p: GradedWord<Q> = GradedWord::word(&[0, 0, 1]);
    p.add_term(vec![1, 0], rat(-2));
    p.add_term(vec![], rat(3));
    assert_eq!(p.render(d.labels()), "3 + f1^2 f2 - 2 f2 f1");
    assert_eq!(GradedWord::<Q>::zero().render(d.labels()), "0");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sigma_is_an_involutive_antihomomorphism(
        a in proptest::collection::vec(0usize..3, 0..6),
        b in proptest::collection::vec(0usize..3, 0..6),
        c in -4i64..5,
    ) {
        let mut x: GradedWord<Q> = GradedWord::word(&a);
        x.add_term(b.iter().map(|&i| i as u8).collect(), rat(c));
        let y: GradedWord<Q> = GradedWord::word(&b);
        prop_assert_eq!(x.sigma().sigma(), x.clone());
        prop_assert_eq!(x.mul(&y).sigma(), y.sigma().mul(&x.sigma()));
    }

    #[test]
    fn reduction_is_a_projection_compatible_with_products(
        a in proptest::collection::vec(0usize..3, 0..5),
        b in proptest::collection::vec(0usize..3, 0..5),
    ) {
        let q = qq_a3();
        let (x, y) = (GradedWord::<QF>::word(&a), GradedWord::<QF>::word(&b));
        let rx = q.reduce(&x).unwrap();
        prop_assert_eq!(q.reduce(&rx).unwrap(), rx.clone());
        let ry = q.reduce(&y).unwrap();
        prop_assert_eq!(q.reduce(&rx.mul(&ry)).unwrap(), q.reduce(&x.mul(&y)).unwrap());
    }

    #[test]
    fn e_action_lowers_degree_by_one_root(
        a in proptest::collection::vec(0usize..3, 1..6),
        i in 0usize..3,
        l in proptest::collection::vec(0i64..3, 3),
    ) {
        let d = datum("A3");
        let q = qq_a3();
        let lam = d.weight_from_fundamental(&l);
        let v = VermaVector { lambda: lam, vec: q.reduce(&GradedWord::word(&a)).unwrap() };
        let e = q.e_action(i, &v).unwrap();
        if !e.vec.is_zero() {
            let mut want = v.vec.multidegree(3).unwrap();
            want[i] -= 1;
            prop_assert_eq!(e.vec.multidegree(3).unwrap(), want);
        }
    }
}

fn qq_a3() -> &'static SerreQuotient<QF> {
    static Q: std::sync::OnceLock<SerreQuotient<QF>> = std::sync::OnceLock::new();
    Q.get_or_init(|| qq("A3", 10))
}
