//! Subcommand bodies.

use crate::args::*;
use crate::report::{input, CliError, Outcome};
use qtau::cartan::{GcmFile, RootDatum, WeightVec};
use qtau::classical::{okamoto_seq, ClassicalContext};
use qtau::error::Error;
use qtau::hirota::affine_setup;
use qtau::ncalg::{ConstCommutator, QCommutator, Realization, WeylRealization};
use qtau::poly::{Field, RatFunc};
use qtau::report::{Check, Status};
use qtau::scalars::ParamScalar;
use qtau::text;
use qtau::verma::{graded_basis, maxdeg_limit, q1_consistency, sigma_phi_crosscheck, SerreQuotient};
use qtau::weylaction::{braid_order, verma_identity_check, xd_closed_sum, ActionContext};
use num::BigRational;
use serde_json::json;

type Res<T> = Result<T, CliError>;

enum Real {
    Cc(ConstCommutator),
    Qc(QCommutator),
    Weyl(WeylRealization),
    Classical(ClassicalContext),
}

/// Runs `$body` with `$ctx: ActionContext<_>` for the noncommutative realizations and
/// `$cbody` with `$cl: ClassicalContext` for the commutative one.
macro_rules! dispatch {
    ($real:expr, |$ctx:ident| $body:expr, |$cl:ident| $cbody:expr) => {
        match $real {
            Real::Cc(r) => {
                let $ctx = ActionContext::new(r)?;
                $body
            }
            Real::Qc(r) => {
                let $ctx = ActionContext::new(r)?;
                $body
            }
            Real::Weyl(r) => {
                let $ctx = ActionContext::new(r)?;
                $body
            }
            Real::Classical($cl) => $cbody,
        }
    };
}

pub fn load_datum(g: &GcmArg) -> Res<RootDatum> {
    let spec = g.gcm.as_deref().ok_or_else(|| input("--gcm is required"))?;
    let path = std::path::Path::new(spec);
    if path.exists() {
        let s = std::fs::read_to_string(path).map_err(|e| input(format!("{spec}: {e}")))?;
        let f: GcmFile = serde_json::from_str(&s).map_err(|e| input(format!("{spec}: {e}")))?;
        return Ok(RootDatum::from_file(&f)?);
    }
    if spec.ends_with(".json") {
        return Err(input(format!("{spec}: no such file")));
    }
    Ok(RootDatum::named(spec)?)
}

fn parse_matrix(s: &str) -> Res<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|e| input(format!("bad commutator entry {t:?}: {e}"))))
                .collect()
        })
        .collect()
}

fn realization(r: &RealArgs) -> Res<Real> {
    if let Some(name) = r.realization.strip_prefix("weyl:") {
        if r.gcm.gcm.is_some() {
            return Err(input("weyl presets carry their own matrix; drop --gcm"));
        }
        return Ok(Real::Weyl(WeylRealization::preset(name)?));
    }
    let d = load_datum(&r.gcm)?;
    let c = r.commutators.as_deref().map(parse_matrix).transpose()?;
    Ok(match (r.realization.as_str(), c) {
        ("cc", None) => Real::Cc(ConstCommutator::standard(d)),
        ("cc", Some(c)) => Real::Cc(ConstCommutator::new(d, c)?),
        ("qc", None) => Real::Qc(QCommutator::standard(d)),
        ("qc", Some(c)) => Real::Qc(QCommutator::new(d, c)?),
        ("classical", None) => Real::Classical(ClassicalContext::standard(d)),
        ("classical", Some(c)) => Real::Classical(ClassicalContext::new(d, c)?),
        (other, _) => return Err(input(format!("unknown realization {other:?} (cc, qc, classical, weyl:<preset>)"))),
    })
}

fn parse_pair(d: &RootDatum, s: &str) -> Res<(usize, usize)> {
    match d.parse_word(s)?.as_slice() {
        [i, j] => Ok((*i, *j)),
        _ => Err(input(format!("a pair needs two labels, got {s:?}"))),
    }
}

/// Λ_i and ρ, or the single weight given.
fn test_weights(d: &RootDatum, w: Option<&str>) -> Res<Vec<WeightVec>> {
    if let Some(s) = w {
        return Ok(vec![d.parse_weight(s)?]);
    }
    let mut v: Vec<WeightVec> = (0..d.n()).map(|i| d.fundamental(i).clone()).collect();
    v.push(d.rho());
    Ok(v)
}

/// Turns an unsupported-localization error into an `Unsupported` check.
fn guarded(name: impl Into<String>, r: Result<Check, Error>) -> Res<Check> {
    match r {
        Ok(c) => Ok(c),
        Err(e) if e.is_unsupported() => Ok(Check::new(name, Status::Unsupported { reason: e.to_string() })),
        Err(e) => Err(e.into()),
    }
}

fn all_pairs(d: &RootDatum) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            if braid_order(d.a(i, j), d.a(j, i)).is_some() {
                v.push((i, j));
            }
        }
    }
    v
}

pub fn gcm_validate(g: &GcmArg, out: &mut Outcome) -> Res<()> {
    let d = load_datum(g)?;
    out.artifact("labels", json!(d.labels()));
    out.artifact("cartan", json!(d.cartan()));
    out.artifact("symmetrizer", json!(d.symmetrizer()));
    out.check(Check::new("generalized Cartan matrix axioms", Status::Pass));
    out.check(Check::new("symmetrizable", Status::Pass));
    Ok(())
}

fn tau_compute_action<R: Realization>(ctx: &ActionContext<R>, w: &[usize], mu: &[i64], out: &mut Outcome) -> Res<()> {
    let d = ctx.datum();
    let t = match ctx.tau_function(w, mu) {
        Ok(t) => t,
        Err(e) if e.is_unsupported() => {
            out.check(Check::new("tau function", Status::Unsupported { reason: e.to_string() }));
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let s = ctx.render_tau(&t);
    out.artifact("tau", s.clone());
    out.artifact("weight", d.render_weight_coords(&t.nu));
    if let Ok(chain) = ctx.phi_psi_chain(w, mu) {
        for (k, e) in chain.iter().enumerate() {
            out.artifact(format!("X{}", k + 1), ctx.realization().render(e));
        }
    }
    let back = text::parse_tau(ctx.realization(), &s)?;
    out.check(Check::new("printed tau reparses", Status::from_eq(back == t, || s.clone())));
    Ok(())
}

pub fn tau_compute(a: &TauComputeArgs, out: &mut Outcome) -> Res<()> {
    let real = realization(&a.real)?;
    dispatch!(
        real,
        |ctx| {
            let d = ctx.datum().clone();
            let (w, mu) = (d.parse_word(&a.word)?, d.parse_weight(&a.weight)?);
            tau_compute_action(&ctx, &w, &mu, out)
        },
        |c| {
            let d = c.datum().clone();
            let (w, mu) = (d.parse_word(&a.word)?, d.parse_weight(&a.weight)?);
            let t = c.classical_tau(&w, &mu)?;
            let s = c.render_tau(&t);
            out.artifact("tau", s.clone());
            out.artifact("weight", d.render_weight_coords(&t.nu));
            let back = text::parse_classical_tau(&c, &s)?;
            out.check(Check::new("printed tau reparses", Status::from_eq(back == t, || s.clone())));
            Ok(())
        }
    )
}

fn instances(d: &RootDatum, word: Option<&str>, weight: Option<&str>, max_len: usize) -> Res<Vec<(Vec<usize>, WeightVec)>> {
    let words = match word {
        Some(s) => vec![d.parse_word(s)?],
        None => (0..=max_len).flat_map(|l| d.reduced_words(l)).collect(),
    };
    let weights = test_weights(d, weight)?;
    Ok(words.iter().flat_map(|w| weights.iter().map(move |m| (w.clone(), m.clone()))).collect())
}

pub fn tau_check_regular(a: &CheckRegularArgs, out: &mut Outcome) -> Res<()> {
    let real = realization(&a.real)?;
    dispatch!(
        real,
        |ctx| {
            let d = ctx.datum().clone();
            for (w, mu) in instances(&d, a.word.as_deref(), a.weight.as_deref(), a.max_len)? {
                let name = format!("regular tau w={} mu={}", d.render_word(&w), d.render_weight_coords(&mu));
                let chk = ctx.tau_function(&w, &mu).map(|t| {
                    let st = match ctx.regularity_check(&t) {
                        None => Status::Pass,
                        Some(witness) => Status::Fail { witness },
                    };
                    Check::new(name.clone(), st)
                });
                out.check(guarded(name, chk)?);
            }
            Ok(())
        },
        |c| {
            let d = c.datum().clone();
            for (w, mu) in instances(&d, a.word.as_deref(), a.weight.as_deref(), a.max_len)? {
                out.check(c.polynomial_check(&w, &mu)?);
            }
            Ok(())
        }
    )
}

pub fn verify_braid(a: &BraidArgs, out: &mut Outcome) -> Res<()> {
    let real = realization(&a.real)?;
    dispatch!(
        real,
        |ctx| {
            let d = ctx.datum().clone();
            let pairs = match &a.pair {
                Some(s) => vec![parse_pair(&d, s)?],
                None => all_pairs(&d),
            };
            for (i, j) in pairs {
                for c in ctx.verify_braid(i, j)? {
                    out.check(c);
                }
            }
            Ok(())
        },
        |c| {
            let d = c.datum().clone();
            let pairs = match &a.pair {
                Some(s) => vec![parse_pair(&d, s)?],
                None => all_pairs(&d),
            };
            for (i, j) in pairs {
                for ch in c.verify_braid(i, j)? {
                    out.check(ch);
                }
            }
            Ok(())
        }
    )
}

fn verma_identity_action<R: Realization>(r: &R, a: &VermaIdentityArgs, out: &mut Outcome) -> Res<()> {
    let d = r.datum().clone();
    let pairs = match &a.pair {
        Some(s) => vec![parse_pair(&d, s)?],
        None => (0..d.n()).flat_map(|i| (i + 1..d.n()).map(move |j| (i, j))).collect(),
    };
    for (i, j) in pairs {
        for b in -a.bound..=a.bound {
            for g in -a.bound..=a.bound {
                out.check(verma_identity_check(r, i, j, b, g)?);
            }
        }
    }
    Ok(())
}

/// With `f1 = x`, `f2 = d`: `f1^a f2^(a+b) f1^b` against its closed sum.
fn xd_closed_sums(r: &WeylRealization, bound: i64, out: &mut Outcome) -> Res<()> {
    for x in 0..=bound {
        for y in 0..=bound {
            let lhs = r.product(&[r.generator_power(0, x)?, r.generator_power(1, x + y)?, r.generator_power(0, y)?])?;
            let rhs = xd_closed_sum(x, y);
            let name = format!("x-d closed sum ({x},{y})");
            out.check(Check::new(name, Status::from_eq(lhs == rhs, || format!("{} vs {}", r.render(&lhs), r.render(&rhs)))));
        }
    }
    Ok(())
}

pub fn verify_verma_identity(a: &VermaIdentityArgs, out: &mut Outcome) -> Res<()> {
    match realization(&a.real)? {
        Real::Cc(r) => verma_identity_action(&r, a, out),
        Real::Qc(r) => verma_identity_action(&r, a, out),
        Real::Weyl(r) => {
            verma_identity_action(&r, a, out)?;
            if r.tag() == "weyl:A2" {
                xd_closed_sums(&r, a.bound, out)?;
            }
            Ok(())
        }
        Real::Classical(_) => Err(input("verma identities need a noncommutative realization")),
    }
}

fn prefixed(mut c: Check, p: &str) -> Check {
    c.name = format!("{p}{}", c.name);
    c
}

fn default_shifts(n: usize) -> Vec<Vec<i64>> {
    let mut e1 = vec![0; n];
    e1[0] = 1;
    let mut e12 = e1.clone();
    if n > 1 {
        e12[1] = 1;
    }
    vec![vec![0; n], e1, e12]
}

pub fn verify_hirota(a: &HirotaArgs, out: &mut Outcome) -> Res<()> {
    let h = affine_setup(a.n, None)?;
    let ks: Vec<i64> = match a.k {
        Some(k) => vec![k],
        None => (1..=a.n as i64).collect(),
    };
    let shifts = if a.shift.is_empty() {
        default_shifts(a.n)
    } else {
        a.shift
            .iter()
            .map(|s| s.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| input(format!("bad shift {s:?}: {e}")))).collect())
            .collect::<Res<Vec<Vec<i64>>>>()?
    };
    for &k in &ks {
        for c in h.check_qhme_lemma(k)? {
            out.check(prefixed(c, &format!("k={k} ")));
        }
    }
    for m in &shifts {
        for &k in &ks {
            let tag = m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            for c in h.check_qhme_translated(k, m)? {
                out.check(prefixed(c, &format!("k={k} m=({tag}) ")));
            }
        }
    }
    Ok(())
}

pub fn verify_reduced_word(a: &ReducedWordArgs, out: &mut Outcome) -> Res<()> {
    let real = realization(&a.real)?;
    dispatch!(
        real,
        |ctx| {
            let d = ctx.datum().clone();
            let weights = test_weights(&d, a.weight.as_deref())?;
            for group in d.elements_up_to(a.max_len) {
                for w2 in &group[1..] {
                    for mu in &weights {
                        let name = format!("{} ~ {} at {}", d.render_word(&group[0]), d.render_word(w2), d.render_weight_coords(mu));
                        out.check(guarded(name, ctx.reduced_word_independence(&group[0], w2, mu))?);
                    }
                }
            }
            Ok(())
        },
        |c| {
            let d = c.datum().clone();
            let weights = test_weights(&d, a.weight.as_deref())?;
            for group in d.elements_up_to(a.max_len) {
                for w2 in &group[1..] {
                    for mu in &weights {
                        let (t1, t2) = (c.classical_tau(&group[0], mu)?, c.classical_tau(w2, mu)?);
                        let name = format!("{} ~ {} at {}", d.render_word(&group[0]), d.render_word(w2), d.render_weight_coords(mu));
                        out.check(Check::new(name, Status::from_eq(t1 == t2, || format!("{} vs {}", c.render_tau(&t1), c.render_tau(&t2)))));
                    }
                }
            }
            Ok(())
        }
    )
}

fn divide_in<F: Field>(q: &SerreQuotient<F>, a: &DivideArgs, out: &mut Outcome) -> Res<()> {
    let d = q.datum().clone();
    let labels = d.labels();
    let div = match (&a.big, &a.small, &a.word) {
        (Some(big), Some(small), None) => {
            let big = text::parse_word::<F>(labels, big)?;
            let small = text::parse_word::<F>(labels, small)?;
            q.divide_right(&big, &small)?
        }
        (None, None, Some(w)) => {
            let w = d.parse_word(w)?;
            let (lambda, mu) = (d.parse_weight(&a.lambda)?, d.parse_weight(&a.mu)?);
            let (checks, div) = q.singular_divisibility(&w, &lambda, &mu)?;
            for c in checks {
                out.check(c);
            }
            div
        }
        _ => return Err(input("give either --word (with --lambda, --mu) or both --big and --small")),
    };
    out.artifact("degree", json!(div.degree));
    out.artifact("basis_dim", json!(div.basis_dim));
    out.artifact("nullity", json!(div.nullity));
    match &div.quotient {
        Some(p) => {
            let s = p.render(labels);
            out.artifact("quotient", s.clone());
            let back = text::parse_word::<F>(labels, &s)?;
            out.check(Check::new("printed quotient reparses", Status::from_eq(&back == p, || s.clone())));
        }
        None => out.artifact("quotient", serde_json::Value::Null),
    }
    Ok(())
}

pub fn verma_divide(a: &DivideArgs, out: &mut Outcome) -> Res<()> {
    let d = load_datum(&a.gcm)?;
    let cap = maxdeg_limit();
    match a.case {
        CaseArg::Km => divide_in(&graded_basis::<BigRational>(&d, cap)?, a, out),
        CaseArg::Q => divide_in(&graded_basis::<RatFunc>(&d, cap)?, a, out),
    }
}

fn crosscheck_in<R: Realization>(ctx: &ActionContext<R>, a: &CrosscheckArgs, out: &mut Outcome) -> Res<()> {
    let d = ctx.datum().clone();
    let w = d.parse_word(&a.word)?;
    let (lambda, mu) = (d.parse_weight(&a.lambda)?, d.parse_weight(&a.mu)?);
    let q = graded_basis::<<R::Scalar as ParamScalar>::Value>(&d, maxdeg_limit())?;
    for c in sigma_phi_crosscheck(ctx, &q, &w, &lambda, &mu)? {
        out.check(c);
    }
    Ok(())
}

pub fn verma_crosscheck(a: &CrosscheckArgs, out: &mut Outcome) -> Res<()> {
    match realization(&a.real)? {
        Real::Cc(r) => crosscheck_in(&ActionContext::new(r)?, a, out),
        Real::Qc(r) => {
            let d = r.datum().clone();
            crosscheck_in(&ActionContext::new(r)?, a, out)?;
            let w = d.parse_word(&a.word)?;
            let (lambda, mu) = (d.parse_weight(&a.lambda)?, d.parse_weight(&a.mu)?);
            let cap = maxdeg_limit();
            let (qq, qk) = (graded_basis::<RatFunc>(&d, cap)?, graded_basis::<BigRational>(&d, cap)?);
            out.check(q1_consistency(&qq, &qk, &w, &lambda, &mu)?);
            Ok(())
        }
        _ => Err(input("crosscheck needs the cc or qc realization")),
    }
}

pub fn okamoto(a: &OkamotoArgs, out: &mut Outcome) -> Res<()> {
    let s = okamoto_seq(a.m)?;
    for (m, q) in s.polys.iter().enumerate() {
        out.artifact(format!("Q{m}"), q.render("x"));
    }
    for m in 2..=a.m {
        out.check(Check::new(format!("Q{m} is a polynomial"), Status::Pass));
    }
    Ok(())
}
