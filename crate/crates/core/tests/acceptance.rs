//! Acceptance run: one line per criterion.
//!
//! Criteria 1 and 5 compare against published values that contain errors (the f1 coefficient
//! of X6, and three commutativity claims). They are checked as stated and print FAIL. The
//! process exits nonzero when any verdict differs from the expected one below.

use num::BigRational;
use qtau::cartan::{RootDatum, WeightVec};
use qtau::classical::okamoto_seq;
use qtau::hirota::affine_setup;
use qtau::ncalg::{ConstCommutator, QCommutator, Realization, WeylRealization};
use qtau::poly::{RatFunc, UPoly};
use qtau::report::{Check, Status};
use qtau::scalars::weyl_symbol_map;
use qtau::text::parse_elem;
use qtau::verma::{graded_basis, maxdeg_limit, q1_consistency, sigma_phi_crosscheck, SerreQuotient};
use qtau::weylaction::{verma_identity_check, xd_closed_sum, ActionContext};
use std::time::{Duration, Instant};

type Res = Result<Verdict, String>;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

/// Criteria expected to fail, with the reason shown on the line.
const EXPECTED_FAIL: [usize; 2] = [1, 5];

fn datum(name: &str) -> RootDatum {
    RootDatum::named(name).unwrap()
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

/// Tally of a batch of checks; informational checks are left out.
#[derive(Default)]
struct Tally {
    pass: usize,
    unsupported: usize,
    failed: Vec<String>,
}

impl Tally {
    fn add(&mut self, c: &Check) {
        if c.informational {
            return;
        }
        match &c.status {
            Status::Pass => self.pass += 1,
            Status::Unsupported { .. } => self.unsupported += 1,
            Status::Fail { witness } => self.failed.push(format!("{}: {witness}", c.name)),
        }
    }

    fn add_all(&mut self, cs: &[Check]) {
        for c in cs {
            self.add(c);
        }
    }

    fn verdict(&self, what: &str) -> Verdict {
        let mut d = format!("{} {what}", self.pass);
        if self.unsupported > 0 {
            d.push_str(&format!(", {} outside the supported region", self.unsupported));
        }
        if let Some(first) = self.failed.first() {
            d.push_str(&format!(", {} fail; first: {}", self.failed.len(), clip(first)));
        }
        Verdict::new(self.failed.is_empty() && self.pass > 0, d)
    }
}

fn clip(s: &str) -> String {
    if s.chars().count() > 160 {
        format!("{}...", s.chars().take(160).collect::<String>())
    } else {
        s.to_string()
    }
}

fn coroot_text(d: &RootDatum, v: &[i64]) -> String {
    let terms: Vec<String> = d.coroot_names().iter().zip(v).filter(|(_, &c)| c != 0).map(|(n, &c)| if c == 1 { n.clone() } else { format!("{c}*{n}") }).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        format!("({})", terms.join(" + "))
    }
}

fn criterion_1() -> Res {
    let d = datum("A3");
    let r = ConstCommutator::standard(d.clone());
    let ctx = ActionContext::new(r).map_err(e)?;
    let word = [0, 1, 2, 0, 1, 0];
    let b = d.word_coroots(&word);
    let beta = |k: usize| b[k - 1].clone();
    let comb = |terms: &[(i64, usize)]| -> String {
        let mut v = vec![0; d.lattice_rank()];
        for &(c, k) in terms {
            for (x, y) in v.iter_mut().zip(beta(k)) {
                *x += c * y;
            }
        }
        coroot_text(&d, &v)
    };
    let stated = [
        "f1".to_string(),
        format!("f1 f2 + {}", comb(&[(1, 2)])),
        format!("f1 f2 f3 + {} f1 + {} f3", comb(&[(1, 3)]), comb(&[(1, 2)])),
        format!("f1 f2 f3 + {} f1 + {} f3", comb(&[(1, 3)]), comb(&[(1, 2), (-1, 4)])),
        format!("f1 f2 f3 + {} f1 + {} f3", comb(&[(1, 3), (-1, 5)]), comb(&[(1, 2), (-1, 4), (1, 5)])),
        format!("f1 f2 f3 + {} f1 + {} f3", comb(&[(1, 6)]), comb(&[(1, 3), (-1, 6)])),
    ];
    let mu = d.fundamental(0).clone();
    let mut bad = Vec::new();
    for k in 2..=6 {
        let w = &word[..k];
        let x = parse_elem(ctx.realization(), &stated[k - 1]).map_err(e)?;
        let expect = ctx.realization().substitute(&x, &weyl_symbol_map(&d, w));
        let t = ctx.tau_function(w, &mu).map_err(e)?;
        if t.prefactor != expect || t.nu != d.act_weight(w, &mu) {
            let back = ctx.realization().substitute(&t.prefactor, &weyl_symbol_map(&d, &w.iter().rev().copied().collect::<Vec<_>>()));
            bad.push(format!("X{k}: stated {} vs computed {}", stated[k - 1], ctx.realization().render(&back)));
        }
    }
    Ok(if bad.is_empty() {
        Verdict::new(true, "X2..X6 match")
    } else {
        Verdict::new(false, format!("{} of X2..X6 differ; {}", bad.len(), bad.join("; ")))
    })
}

fn identities_in<R: Realization>(r: &R, t: &mut Tally) -> Result<(), String> {
    for b in -3..=3 {
        for g in -3..=3 {
            t.add(&verma_identity_check(r, 0, 1, b, g).map_err(e)?);
        }
    }
    Ok(())
}

fn criterion_2() -> Res {
    let mut t = Tally::default();
    for name in ["A1xA1", "A2", "B2", "G2"] {
        identities_in(&ConstCommutator::standard(datum(name)), &mut t)?;
        identities_in(&QCommutator::standard(datum(name)), &mut t)?;
    }
    let w = WeylRealization::preset("A2").map_err(e)?;
    identities_in(&w, &mut t)?;
    for a in 0..=3 {
        for b in 0..=3 {
            let lhs = w
                .product(&[w.generator_power(0, a).map_err(e)?, w.generator_power(1, a + b).map_err(e)?, w.generator_power(0, b).map_err(e)?])
                .map_err(e)?;
            let rhs = xd_closed_sum(a, b);
            let st = Status::from_eq(lhs == rhs, || format!("{} vs {}", w.render(&lhs), w.render(&rhs)));
            t.add(&Check::new(format!("x-d closed sum ({a},{b})"), st));
        }
    }
    Ok(t.verdict("identity checks pass"))
}

fn criterion_3() -> Res {
    let mut t = Tally::default();
    for name in ["A1xA1", "A2", "B2", "G2"] {
        let c = ActionContext::new(ConstCommutator::standard(datum(name))).map_err(e)?;
        t.add_all(&c.verify_braid(0, 1).map_err(e)?);
        let q = ActionContext::new(QCommutator::standard(datum(name))).map_err(e)?;
        t.add_all(&q.verify_braid(0, 1).map_err(e)?);
    }
    Ok(t.verdict("relation checks pass"))
}

fn weights(d: &RootDatum) -> Vec<WeightVec> {
    let mut v: Vec<WeightVec> = (0..d.n()).map(|i| d.fundamental(i).clone()).collect();
    v.push(d.rho());
    v
}

fn regular_in<R: Realization>(ctx: &ActionContext<R>, t: &mut Tally) -> Result<(), String> {
    let d = ctx.datum().clone();
    for len in 0..=5 {
        for w in d.reduced_words(len) {
            for mu in weights(&d) {
                let name = format!("{} w={} mu={}", ctx.realization().tag(), d.render_word(&w), d.render_weight_coords(&mu));
                let st = match ctx.tau_function(&w, &mu) {
                    Ok(tau) => match ctx.regularity_check(&tau) {
                        None => Status::Pass,
                        Some(witness) => Status::Fail { witness },
                    },
                    Err(err) => Status::Fail { witness: err.to_string() },
                };
                t.add(&Check::new(name, st));
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Res {
    let mut t = Tally::default();
    for name in ["A2", "A3", "B2"] {
        regular_in(&ActionContext::new(ConstCommutator::standard(datum(name))).map_err(e)?, &mut t)?;
        regular_in(&ActionContext::new(QCommutator::standard(datum(name))).map_err(e)?, &mut t)?;
    }
    Ok(t.verdict("tau functions regular"))
}

fn criterion_5() -> Res {
    let mut t = Tally::default();
    let mut failing = std::collections::BTreeSet::new();
    for n in [3usize, 4] {
        let h = affine_setup(n, None).map_err(e)?;
        let mut e1 = vec![0; n];
        e1[0] = 1;
        let mut e12 = e1.clone();
        e12[1] = 1;
        for k in 1..=n as i64 {
            let lemma = h.check_qhme_lemma(k).map_err(e)?;
            for c in &lemma {
                if matches!(c.status, Status::Fail { .. }) {
                    failing.insert(c.name.clone());
                }
            }
            t.add_all(&lemma);
            for m in [vec![0; n], e1.clone(), e12.clone()] {
                t.add_all(&h.check_qhme_translated(k, &m).map_err(e)?);
            }
        }
    }
    let mut v = t.verdict("checks pass");
    if !failing.is_empty() {
        v.detail = format!("{}; failing claims: {}", v.detail, failing.into_iter().collect::<Vec<_>>().join(" | "));
    }
    Ok(v)
}

/// λ, μ ∈ {0, Λ_i, ρ} and reduced w with ℓ(w) ≤ 3.
fn grid(d: &RootDatum) -> Vec<(Vec<usize>, WeightVec, WeightVec)> {
    let mut ws = vec![vec![0; d.lattice_rank()]];
    ws.extend(weights(d));
    let mut out = Vec::new();
    for len in 0..=3 {
        for w in d.reduced_words(len) {
            for l in &ws {
                for m in &ws {
                    out.push((w.clone(), l.clone(), m.clone()));
                }
            }
        }
    }
    out
}

struct Quotients {
    name: &'static str,
    km: SerreQuotient<BigRational>,
    q: SerreQuotient<RatFunc>,
}

fn quotients() -> Result<Vec<Quotients>, String> {
    let cap = maxdeg_limit();
    ["A2", "B2", "A3"]
        .into_iter()
        .map(|name| {
            let d = datum(name);
            Ok(Quotients { name, km: graded_basis(&d, cap).map_err(e)?, q: graded_basis(&d, cap).map_err(e)? })
        })
        .collect()
}

fn criterion_6(qs: &[Quotients]) -> Res {
    let mut t = Tally::default();
    for q in qs {
        for (w, l, m) in grid(q.km.datum()) {
            t.add_all(&q.km.singular_divisibility(&w, &l, &m).map_err(e)?.0);
            t.add_all(&q.q.singular_divisibility(&w, &l, &m).map_err(e)?.0);
        }
    }
    Ok(t.verdict("singularity and division checks pass"))
}

fn criterion_7(qs: &[Quotients]) -> Res {
    let mut t = Tally::default();
    for q in qs {
        let d = datum(q.name);
        let cc = ActionContext::new(ConstCommutator::standard(d.clone())).map_err(e)?;
        let qc = ActionContext::new(QCommutator::standard(d.clone())).map_err(e)?;
        for (w, l, m) in grid(&d) {
            t.add_all(&sigma_phi_crosscheck(&cc, &q.km, &w, &l, &m).map_err(e)?);
            t.add_all(&sigma_phi_crosscheck(&qc, &q.q, &w, &l, &m).map_err(e)?);
        }
    }
    Ok(t.verdict("cross-checks pass"))
}

fn criterion_8() -> Res {
    let s = okamoto_seq(8).map_err(e)?;
    let p = &s.polys;
    let mut bad = Vec::new();
    if p[0] != UPoly::one() || p[1] != UPoly::one() {
        bad.push("Q0, Q1 != 1".to_string());
    }
    if p[2] != UPoly::from_i64_coeffs(&[1, 0, 1]) {
        bad.push(format!("Q2 = {}", p[2].render("x")));
    }
    for (m, q) in p.iter().enumerate().skip(1) {
        if q.degree() != Some(m * (m - 1)) {
            bad.push(format!("deg Q{m} = {:?}", q.degree()));
        }
    }
    Ok(Verdict::new(bad.is_empty(), if bad.is_empty() { "Q0..Q8 polynomial, Q2 = x^2 + 1".into() } else { bad.join("; ") }))
}

fn independence_in<R: Realization>(ctx: &ActionContext<R>, t: &mut Tally) -> Result<(), String> {
    let d = ctx.datum().clone();
    for group in d.elements_up_to(4) {
        for w2 in &group[1..] {
            for mu in weights(&d) {
                t.add(&ctx.reduced_word_independence(&group[0], w2, &mu).map_err(e)?);
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Res {
    let mut t = Tally::default();
    independence_in(&ActionContext::new(ConstCommutator::standard(datum("A3"))).map_err(e)?, &mut t)?;
    independence_in(&ActionContext::new(QCommutator::standard(datum("A3"))).map_err(e)?, &mut t)?;
    Ok(t.verdict("word pairs agree"))
}

fn criterion_10(qs: &[Quotients]) -> Res {
    let mut t = Tally::default();
    for q in qs {
        for (w, l, m) in grid(q.km.datum()) {
            t.add(&q1_consistency(&q.q, &q.km, &w, &l, &m).map_err(e)?);
        }
    }
    Ok(t.verdict("limits agree"))
}

fn main() {
    let titles = [
        "A3 tau-function reproduction",
        "rank-2 Verma identities",
        "braid relations",
        "regularity instances",
        "quantum q-Hirota-Miwa",
        "singular-vector divisibility",
        "sigma-phi cross-check",
        "Okamoto polynomials",
        "reduced-word independence",
        "q to 1 consistency",
    ];
    let budgets = [1, 30, 60, 300, 120, 600, 0, 1, 0, 0].map(Duration::from_secs);
    let start = Instant::now();
    let qs = quotients();
    let basis_time = start.elapsed();
    let mut unexpected = 0;
    for (k, title) in titles.iter().enumerate() {
        let n = k + 1;
        let t0 = Instant::now();
        let res = match (&qs, n) {
            (Err(err), 6 | 7 | 10) => Err(err.clone()),
            (_, 1) => criterion_1(),
            (_, 2) => criterion_2(),
            (_, 3) => criterion_3(),
            (_, 4) => criterion_4(),
            (_, 5) => criterion_5(),
            (Ok(q), 6) => criterion_6(q),
            (Ok(q), 7) => criterion_7(q),
            (_, 8) => criterion_8(),
            (_, 9) => criterion_9(),
            (Ok(q), 10) => criterion_10(q),
            _ => unreachable!(),
        };
        let mut dt = t0.elapsed();
        if n == 6 {
            dt += basis_time;
        }
        let mut v = res.unwrap_or_else(|err| Verdict::new(false, format!("error: {err}")));
        if !budgets[k].is_zero() && dt > budgets[k] {
            v = Verdict::new(false, format!("{}; over the {}s budget", v.detail, budgets[k].as_secs()));
        }
        let expected = !EXPECTED_FAIL.contains(&n);
        if v.pass != expected {
            unexpected += 1;
        }
        let tag = match (v.pass, expected) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (expected)",
        };
        println!("criterion {n:>2} {title:<30} {tag} [{:.2}s] {}", dt.as_secs_f64(), v.detail);
    }
    println!("total {:.1}s, {unexpected} unexpected verdicts", start.elapsed().as_secs_f64());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
