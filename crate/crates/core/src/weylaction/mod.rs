//! The birational Weyl group action on parameters, dependent variables and τ-monomials.
//!
//! A [`TauExpr`] is `P·τ^ν` with the prefactor to the left. Moving an element across
//! `τ^ν` shifts parameter symbols by `β ↦ β + ⟨β, ν⟩`, so products stay in this form.

use crate::cartan::{RootDatum, WeightVec};
use crate::error::{Error, Result};
use crate::ncalg::{phi_lambda_elem, serre_check, AlgebraError, Realization};
use crate::report::{Check, Status};
use crate::scalars::{weyl_symbol_map, ParamScalar, SymbolMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauExpr<E> {
    pub prefactor: E,
    pub nu: WeightVec,
}

/// Realization plus the checks that make the action well defined.
pub struct ActionContext<R: Realization> {
    r: R,
}

/// Number of factors in the braid relation for `(a_ij, a_ji)`, `None` outside the finite list.
pub fn braid_order(aij: i64, aji: i64) -> Option<usize> {
    match (aij.min(aji), aij.max(aji)) {
        (0, 0) => Some(2),
        (-1, -1) => Some(3),
        (-2, -1) => Some(4),
        (-3, -1) => Some(6),
        _ => None,
    }
}

/// Top-level `+`/`-` outside parentheses.
fn has_several_terms(s: &str) -> bool {
    let mut depth = 0i32;
    let b = s.as_bytes();
    for (k, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && k > 0 && b[k - 1] == b' ' => return true,
            _ => {}
        }
    }
    false
}

impl<R: Realization> ActionContext<R> {
    /// Fails unless every Serre relation holds in the realization.
    pub fn new(r: R) -> Result<Self> {
        let bad: Vec<String> =
            serre_check(&r)?.into_iter().filter(|p| !p.pass).map(|p| format!("({},{})", p.i, p.j)).collect();
        if !bad.is_empty() {
            return Err(Error::Precondition(format!("Serre relations fail for pairs {}", bad.join(" "))));
        }
        Ok(ActionContext { r })
    }

    pub fn realization(&self) -> &R {
        &self.r
    }

    pub fn datum(&self) -> &RootDatum {
        self.r.datum()
    }

    pub fn tau(&self, p: R::Elem, nu: WeightVec) -> TauExpr<R::Elem> {
        TauExpr { prefactor: p, nu }
    }

    /// `τ^ν` with prefactor one.
    pub fn tau_mono(&self, nu: &[i64]) -> TauExpr<R::Elem> {
        self.tau(self.r.one(), nu.to_vec())
    }

    /// `a·τ^0`.
    pub fn elem(&self, a: R::Elem) -> TauExpr<R::Elem> {
        self.tau(a, vec![0; self.datum().lattice_rank()])
    }

    /// `(Pτ^ν)(P'τ^ν') = P·P'(β+⟨β,ν⟩)·τ^{ν+ν'}`.
    pub fn tau_mul(&self, a: &TauExpr<R::Elem>, b: &TauExpr<R::Elem>) -> Result<TauExpr<R::Elem>> {
        let shifted = self.r.substitute(&b.prefactor, &SymbolMap::tau_shift(&a.nu));
        let p = self.r.multiply(&a.prefactor, &shifted)?;
        let nu = a.nu.iter().zip(&b.nu).map(|(x, y)| x + y).collect();
        Ok(self.tau(p, nu))
    }

    /// Sum of two expressions with the same τ-exponent.
    pub fn tau_add(&self, a: &TauExpr<R::Elem>, b: &TauExpr<R::Elem>) -> Result<TauExpr<R::Elem>> {
        if a.nu != b.nu {
            return Err(Error::Precondition("sum of τ-expressions with different exponents".into()));
        }
        Ok(self.tau(self.r.add(&a.prefactor, &b.prefactor), a.nu.clone()))
    }

    /// `c·(P τ^ν)` with the scalar on the left.
    pub fn tau_scale(&self, c: &R::Scalar, t: &TauExpr<R::Elem>) -> TauExpr<R::Elem> {
        self.tau(self.r.scale(c, &t.prefactor), t.nu.clone())
    }

    /// `ŝ_i = Ad(f_i^{α∨_i}) ∘ s̃_i` on the dependent-variable algebra.
    pub fn hat_s(&self, i: usize, a: &R::Elem) -> Result<R::Elem> {
        let d = self.datum();
        let moved = self.r.substitute(a, &weyl_symbol_map(d, &[i]));
        Ok(self.r.conj_by_power(i, d.coroot(i), 0, &moved)?)
    }

    /// `s_i(P·τ^ν) = ŝ_i(P)·f_i^{⟨α∨_i,ν⟩}·τ^{s_i(ν)}`.
    pub fn apply_simple(&self, i: usize, t: &TauExpr<R::Elem>) -> Result<TauExpr<R::Elem>> {
        let d = self.datum();
        let p = self.hat_s(i, &t.prefactor)?;
        let k = d.pair(d.coroot(i), &t.nu);
        let p = if k == 0 { p } else { self.r.multiply(&p, &self.r.generator_power(i, k)?)? };
        Ok(self.tau(p, d.reflect_weight(i, &t.nu)))
    }

    /// Applies `w[0]` first.
    pub fn apply_word(&self, w: &[usize], t: &TauExpr<R::Elem>) -> Result<TauExpr<R::Elem>> {
        let mut cur = t.clone();
        for &i in w {
            cur = self.apply_simple(i, &cur)?;
        }
        Ok(cur)
    }

    fn check_tau_input(&self, w: &[usize], mu: &[i64]) -> Result<()> {
        let d = self.datum();
        d.check_word(w)?;
        if !d.is_reduced(w) {
            return Err(Error::Precondition(format!("word {} is not reduced", d.render_word(w))));
        }
        if !d.is_dominant(mu) {
            return Err(Error::Precondition(format!("weight {} is not dominant", d.render_weight_coords(mu))));
        }
        Ok(())
    }

    /// `τ_{(w(μ))} = w(τ^μ)` for a reduced word and dominant `μ`.
    pub fn tau_function(&self, w: &[usize], mu: &[i64]) -> Result<TauExpr<R::Elem>> {
        self.check_tau_input(w, mu)?;
        self.apply_word(w, &self.tau_mono(mu))
    }

    /// `τ_{(ν)}` for `ν` in the Tits cone, via `ν = w(μ)` with `μ` dominant.
    pub fn tau_at(&self, nu: &[i64], cap: usize) -> Result<TauExpr<R::Elem>> {
        let (w, mu) = self.datum().dominant_decompose(nu, cap)?;
        self.tau_function(&w, &mu)
    }

    /// `E_0 = 1`, `E_k = Ad(f_{i_k}^{−β_k})(E_{k−1})·f_{i_k}^{⟨β_k,μ⟩}`; returns `E_1, …, E_n`.
    pub fn phi_psi_chain(&self, w: &[usize], mu: &[i64]) -> Result<Vec<R::Elem>> {
        self.check_tau_input(w, mu)?;
        let d = self.datum();
        let mut e = self.r.one();
        let mut out = Vec::with_capacity(w.len());
        for (&i, beta) in w.iter().zip(d.word_coroots(w)) {
            let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
            e = self.r.conj_by_power(i, &neg, 0, &e)?;
            let m = d.pair(&beta, mu);
            if m != 0 {
                e = self.r.multiply(&e, &self.r.generator_power(i, m)?)?;
            }
            out.push(e.clone());
        }
        Ok(out)
    }

    /// `w̃(E_n)·τ^{w(μ)}`.
    pub fn phi_psi_tau(&self, w: &[usize], mu: &[i64]) -> Result<TauExpr<R::Elem>> {
        let chain = self.phi_psi_chain(w, mu)?;
        let d = self.datum();
        let e = chain.last().cloned().unwrap_or_else(|| self.r.one());
        Ok(self.tau(self.r.substitute(&e, &weyl_symbol_map(d, w)), d.act_weight(w, mu)))
    }

    /// `X_k = f^{−b_k} X_{k−1} f^{b_k+m_k}` with `b_k = ⟨β_k,λ⟩`, `m_k = ⟨β_k,μ⟩`: the image of
    /// `E_n` under `φ_λ` computed with integer powers only.
    pub fn integer_chain(&self, w: &[usize], mu: &[i64], lambda: &[i64]) -> Result<R::Elem> {
        let d = self.datum();
        let mut x = self.r.one();
        for (&i, beta) in w.iter().zip(d.word_coroots(w)) {
            let b = d.pair(&beta, lambda);
            let m = d.pair(&beta, mu);
            x = self.r.product(&[self.r.generator_power(i, -b)?, x, self.r.generator_power(i, b + m)?])?;
        }
        Ok(x)
    }

    /// Compares `φ_λ(E_n)` with the integer chain; `Unsupported` when the chain leaves the
    /// supported localization region.
    pub fn phi_compatibility(&self, w: &[usize], mu: &[i64], lambda: &[i64]) -> Result<Status> {
        let chain = self.phi_psi_chain(w, mu)?;
        let e = chain.last().cloned().unwrap_or_else(|| self.r.one());
        let lhs = phi_lambda_elem(&self.r, &e, lambda);
        match self.integer_chain(w, mu, lambda) {
            Ok(rhs) => Ok(Status::from_eq(lhs == rhs, || {
                format!("{} vs {}", self.r.render(&lhs), self.r.render(&rhs))
            })),
            Err(e) if e.is_unsupported() => Ok(Status::Unsupported { reason: e.to_string() }),
            Err(e) => Err(e),
        }
    }

    /// `None` if the prefactor is regular, else an offending term.
    pub fn regularity_check(&self, t: &TauExpr<R::Elem>) -> Option<String> {
        self.r.irregular_term(&t.prefactor)
    }

    /// `<prefactor> * tau[<Λ-coordinates>]`.
    pub fn render_tau(&self, t: &TauExpr<R::Elem>) -> String {
        let p = self.r.render(&t.prefactor);
        let p = if has_several_terms(&p) { format!("({p})") } else { p };
        format!("{p} * tau[{}]", self.datum().render_weight_coords(&t.nu))
    }

    /// Test elements for the braid check: parameter symbols, `f_k·τ^0` and `τ_k`.
    fn braid_test_set(&self) -> Vec<(String, TauExpr<R::Elem>)> {
        let d = self.datum();
        let mut out = Vec::new();
        for b in 0..d.lattice_rank() {
            out.push((
                format!("param {}", d.coroot_names()[b]),
                self.elem(self.r.scalar(R::Scalar::basis_symbol(b))),
            ));
        }
        for k in 0..d.n() {
            out.push((format!("f{}", d.labels()[k]), self.elem(self.r.generator(k))));
        }
        for k in 0..d.n() {
            out.push((format!("tau{}", d.labels()[k]), self.tau_mono(d.fundamental(k))));
        }
        out
    }

    /// Whether `u` and `v` act identically on `t`. Falls back to `t·τ^{Nρ}` and `τ^{Nρ}`
    /// when the direct evaluation needs an unsupported localization.
    fn words_agree_on(&self, u: &[usize], v: &[usize], t: &TauExpr<R::Elem>, n0: i64) -> Result<Status> {
        let direct = self.apply_word(u, t).and_then(|a| Ok((a, self.apply_word(v, t)?)));
        let mut last = match direct {
            Ok((a, b)) => {
                return Ok(Status::from_eq(a == b, || format!("{} vs {}", self.render_tau(&a), self.render_tau(&b))))
            }
            Err(e) if e.is_unsupported() => e.to_string(),
            Err(e) => return Err(e),
        };
        let rho = self.datum().rho();
        for n in n0..n0 + 6 {
            let big: Vec<i64> = rho.iter().map(|x| n * x).collect();
            let tn = self.tau_mono(&big);
            let both = || -> Result<Status> {
                let t2 = self.tau_mul(t, &tn)?;
                let (a, b) = (self.apply_word(u, &t2)?, self.apply_word(v, &t2)?);
                if a != b {
                    return Ok(Status::Fail {
                        witness: format!("{} vs {}", self.render_tau(&a), self.render_tau(&b)),
                    });
                }
                let (a, b) = (self.apply_word(u, &tn)?, self.apply_word(v, &tn)?);
                Ok(Status::from_eq(a == b, || format!("{} vs {}", self.render_tau(&a), self.render_tau(&b))))
            };
            match both() {
                Ok(s) => return Ok(s),
                Err(e) if e.is_unsupported() => last = e.to_string(),
                Err(e) => return Err(e),
            }
        }
        Ok(Status::Unsupported { reason: last })
    }

    /// Braid relation for `(i, j)` and `ŝ_i² = ŝ_j² = id` on the braid test set.
    pub fn verify_braid(&self, i: usize, j: usize) -> Result<Vec<Check>> {
        let d = self.datum();
        d.check_word(&[i, j])?;
        let (aij, aji) = (d.a(i, j), d.a(j, i));
        let m = match braid_order(aij, aji) {
            Some(m) if i != j => m,
            _ => {
                return Err(Error::Precondition(format!(
                    "unsupported pair: (a_ij, a_ji) = ({aij}, {aji}) has no braid relation in the list"
                )))
            }
        };
        let u: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
        let v: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
        let n0 = (-aij).max(-aji).max(1);
        let (li, lj) = (&d.labels()[i], &d.labels()[j]);
        let mut out = Vec::new();
        for (name, t) in self.braid_test_set() {
            let s = self.words_agree_on(&u, &v, &t, n0)?;
            out.push(Check::new(format!("braid {}={} on {name}", d.render_word(&u), d.render_word(&v)), s));
            for (k, l) in [(i, li), (j, lj)] {
                let s = self.words_agree_on(&[k, k], &[], &t, n0)?;
                out.push(Check::new(format!("s{l}^2=id on {name}"), s));
            }
        }
        Ok(out)
    }

    /// Both reduced words must give the same element of W; compares their τ-functions.
    pub fn reduced_word_independence(&self, w1: &[usize], w2: &[usize], mu: &[i64]) -> Result<Check> {
        let d = self.datum();
        for w in [w1, w2] {
            d.check_word(w)?;
            if !d.is_reduced(w) {
                return Err(Error::Precondition(format!("word {} is not reduced", d.render_word(w))));
            }
        }
        if !d.same_element(w1, w2) {
            return Err(Error::Precondition(format!(
                "words {} and {} are different elements of W",
                d.render_word(w1),
                d.render_word(w2)
            )));
        }
        let a = self.tau_function(w1, mu)?;
        let b = self.tau_function(w2, mu)?;
        let s = Status::from_eq(a == b, || format!("{} vs {}", self.render_tau(&a), self.render_tau(&b)));
        Ok(Check::new(format!("{} vs {}", d.render_word(w1), d.render_word(w2)), s)
            .with_detail(self.render_tau(&a)))
    }
}

/// `(generator index, exponent)` factors of the two sides of the Verma identity for the pair,
/// with `β, γ` specialized to integers. The pair is oriented so that `a_ij ≥ a_ji`.
pub fn verma_sides(d: &RootDatum, i: usize, j: usize, b: i64, g: i64) -> Result<(Vec<(usize, i64)>, Vec<(usize, i64)>)> {
    let (aij, aji) = (d.a(i, j), d.a(j, i));
    let (i, j) = if aij < aji { (j, i) } else { (i, j) };
    let s = match braid_order(aij, aji) {
        Some(_) if i == j => None,
        Some(2) => Some((vec![(i, b), (j, g)], vec![(j, g), (i, b)])),
        Some(3) => Some((vec![(i, b), (j, b + g), (i, g)], vec![(j, g), (i, b + g), (j, b)])),
        Some(4) => Some((
            vec![(i, b), (j, 2 * b + g), (i, b + g), (j, g)],
            vec![(j, g), (i, b + g), (j, 2 * b + g), (i, b)],
        )),
        Some(6) => Some((
            vec![(i, b), (j, 3 * b + g), (i, 2 * b + g), (j, 3 * b + 2 * g), (i, b + g), (j, g)],
            vec![(j, g), (i, b + g), (j, 3 * b + 2 * g), (i, 2 * b + g), (j, 3 * b + g), (i, b)],
        )),
        _ => None,
    };
    s.ok_or_else(|| Error::Precondition(format!("unsupported pair: (a_ij, a_ji) = ({aij}, {aji})")))
}

/// Product of integer powers, left to right and on failure right to left.
fn power_product<R: Realization>(r: &R, fs: &[(usize, i64)]) -> Result<R::Elem> {
    let pows: Vec<R::Elem> = fs.iter().map(|&(i, e)| r.generator_power(i, e)).collect::<std::result::Result<_, _>>()?;
    match r.product(&pows) {
        Ok(x) => Ok(x),
        Err(AlgebraError::UnsupportedLocalization(_)) => {
            let mut acc = r.one();
            for p in pows.iter().rev() {
                acc = r.multiply(p, &acc)?;
            }
            Ok(acc)
        }
        Err(e) => Err(e.into()),
    }
}

/// Verma identity for the pair at integer `β = b`, `γ = g`.
pub fn verma_identity_check<R: Realization>(r: &R, i: usize, j: usize, b: i64, g: i64) -> Result<Check> {
    let d = r.datum();
    let (lhs, rhs) = verma_sides(d, i, j, b, g)?;
    let name = format!("verma {}{} ({b},{g})", d.labels()[i], d.labels()[j]);
    let both = power_product(r, &lhs).and_then(|x| Ok((x, power_product(r, &rhs)?)));
    Ok(match both {
        Ok((x, y)) => Check::new(name, Status::from_eq(x == y, || format!("{} vs {}", r.render(&x), r.render(&y))))
            .with_detail(r.render(&x)),
        Err(e) if e.is_unsupported() => Check::new(name, Status::Unsupported { reason: e.to_string() }),
        Err(e) => return Err(e),
    })
}

/// `Σ_k k!·C(a+b,k)·C(b,k)·x^{a+b−k} ∂^{a+b−k}` in the Weyl algebra, `a, b ≥ 0`.
pub fn xd_closed_sum(a: i64, b: i64) -> crate::ncalg::WeylElem {
    use crate::ncalg::{WeylElem, XRat};
    use crate::poly::upoly::rat;
    use crate::poly::UPoly;
    use crate::scalars::KmScalar;
    let binom = |n: i64, k: i64| (0..k).fold(rat(1), |acc, t| acc * rat(n - t) / rat(t + 1));
    let mut out = WeylElem::zero();
    for k in 0..=b {
        let fact = (1..=k).fold(rat(1), |acc, t| acc * rat(t));
        let c = fact * binom(a + b, k) * binom(b, k);
        let mut num = vec![KmScalar::zero(); (a + b - k) as usize + 1];
        num[(a + b - k) as usize] = KmScalar::rational(c);
        out.add_term(a + b - k, XRat::new(num, UPoly::one()));
    }
    out
}

#[cfg(test)]
mod tests;
