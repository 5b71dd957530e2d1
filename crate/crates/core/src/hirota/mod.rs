//! Affine type A_{n−1}^(1) with the ε-lattice, the extended Weyl group with the diagram
//! rotation π, translations `T_k`, and the q-Hirota-Miwa identities.
//!
//! Coroot basis: `δ∨, ε∨_1, …, ε∨_n` (index 0 is `δ∨`). Weight basis: `Λ_0, ε_1, …, ε_n`.
//! Indices `k ∈ ℤ` are reduced with `ε∨_{k+n} = ε∨_k − δ∨`, `ε_{k+n} = ε_k`,
//! `ϖ_{k+n} = ϖ_k + ϖ_n`.

use crate::cartan::{unit, CorootVec, RootDatum, WeightVec};
use crate::error::{Error, Result};
use crate::ncalg::{LaurentElem, QCommutator, Realization};
use crate::report::{Check, Status};
use crate::scalars::{ParamScalar, QScalar, SymbolMap};
use crate::weylaction::{ActionContext, TauExpr};

type Elem = LaurentElem<QScalar>;
type Tau = TauExpr<Elem>;

/// Cap on the dominant-decomposition walk for shifted weights.
pub const DECOMPOSE_CAP: usize = 400;

#[derive(Clone, Debug)]
pub struct AffineALattice {
    n: usize,
    datum: RootDatum,
}

fn split(k: i64, n: usize) -> (usize, i64) {
    let n = n as i64;
    let r = k.rem_euclid(n);
    (r as usize, (k - r) / n)
}

impl AffineALattice {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("the lattice model needs n >= 3, got {n}")));
        }
        let r = n + 1;
        let labels: Vec<String> = (0..n).map(|k| k.to_string()).collect();
        let a: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else if (i + 1) % n == j || (j + 1) % n == i {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let coroot_names = std::iter::once("dv".to_string()).chain((1..=n).map(|k| format!("ev{k}"))).collect();
        let weight_names = std::iter::once("L0".to_string()).chain((1..=n).map(|k| format!("e{k}"))).collect();
        let partial = AffineALattice { n, datum: RootDatum::named("A1").unwrap() };
        let coroots = (0..n).map(|k| partial.alpha_v(k as i64)).collect();
        let roots = (0..n as i64).map(|k| partial.alpha(k)).collect();
        let fundamentals = (0..n as i64).map(|k| partial.lambda(k)).collect();
        let datum =
            RootDatum::with_lattices(labels, a, vec![1; n], coroot_names, weight_names, coroots, roots, fundamentals)?;
        debug_assert_eq!(datum.lattice_rank(), r);
        Ok(AffineALattice { n, datum })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn index(&self, k: i64) -> usize {
        split(k, self.n).0
    }

    pub fn delta_v(&self) -> CorootVec {
        unit(self.n + 1, 0)
    }

    /// `ε∨_k` with `ε∨_{k+n} = ε∨_k − δ∨`.
    pub fn eps_v(&self, k: i64) -> CorootVec {
        let (r, q) = split(k - 1, self.n);
        let mut v = unit(self.n + 1, r + 1);
        v[0] -= q;
        v
    }

    /// `ε_k` with `ε_{k+n} = ε_k`.
    pub fn eps(&self, k: i64) -> WeightVec {
        unit(self.n + 1, split(k - 1, self.n).0 + 1)
    }

    /// `α∨_k = ε∨_k − ε∨_{k+1}`.
    pub fn alpha_v(&self, k: i64) -> CorootVec {
        sub(&self.eps_v(k), &self.eps_v(k + 1))
    }

    /// `α_k = ε_k − ε_{k+1}`.
    pub fn alpha(&self, k: i64) -> WeightVec {
        sub(&self.eps(k), &self.eps(k + 1))
    }

    /// `ϖ_k = ε_1 + ⋯ + ε_k`, `ϖ_{k+n} = ϖ_k + ϖ_n`.
    pub fn varpi(&self, k: i64) -> WeightVec {
        let (r, q) = split(k, self.n);
        let mut v = vec![0; self.n + 1];
        for (j, x) in v.iter_mut().enumerate().skip(1) {
            *x = q + i64::from(j <= r);
        }
        v
    }

    /// `Λ_k = Λ_0 + ϖ_k`.
    pub fn lambda(&self, k: i64) -> WeightVec {
        let mut v = self.varpi(k);
        v[0] += 1;
        v
    }

    /// `ε`-combination `Σ m_k ε_k` from `m_1, …, m_n`.
    pub fn shift_weight(&self, m: &[i64]) -> WeightVec {
        let mut v = vec![0; self.n + 1];
        v[1..].copy_from_slice(m);
        v
    }

    /// `π^r` on weights: `Λ_0 ↦ Λ_0 + ε_1`, `ε_k ↦ ε_{k+1}`.
    pub fn pi_weight(&self, r: i64, lambda: &[i64]) -> WeightVec {
        let mut v = lambda.to_vec();
        let step = if r >= 0 { 1 } else { -1 };
        for _ in 0..r.abs() {
            let mut out = vec![0; self.n + 1];
            out[0] = v[0];
            for k in 1..=self.n as i64 {
                let c = v[k as usize];
                add(&mut out, &self.eps(k + step), c);
            }
            if step > 0 {
                add(&mut out, &self.eps(1), v[0]);
            } else {
                add(&mut out, &self.eps(0), -v[0]);
            }
            v = out;
        }
        v
    }

    /// `π^r` on coroots: `δ∨ ↦ δ∨`, `ε∨_k ↦ ε∨_{k+1}`.
    pub fn pi_coroot(&self, r: i64, beta: &[i64]) -> CorootVec {
        let mut out = vec![0; self.n + 1];
        out[0] = beta[0];
        for k in 1..=self.n as i64 {
            add(&mut out, &self.eps_v(k + r), beta[k as usize]);
        }
        out
    }

    /// `T_k` for `k ∈ ℤ` (period `n`).
    pub fn translation(&self, k: i64) -> ExtendedWeylElement {
        // T_k = s_{k−1}⋯s_1 π s_{n−1}⋯s_k = π s_{k−2}⋯s_0 s_{n−1}⋯s_k
        let k = split(k - 1, self.n).0 + 1;
        let word: Vec<usize> = (k..self.n).chain(0..k.saturating_sub(1)).collect();
        ExtendedWeylElement { word, r: 1 }
    }

    /// `T^m = Π T_k^{m_k}`.
    pub fn translation_by(&self, m: &[i64]) -> ExtendedWeylElement {
        let mut g = ExtendedWeylElement::identity();
        for (k, &mk) in m.iter().enumerate() {
            let t = self.translation(k as i64 + 1);
            let t = if mk < 0 { t.inverse(self.n) } else { t };
            for _ in 0..mk.abs() {
                g = g.compose(&t, self.n);
            }
        }
        g
    }

    pub fn act_weight(&self, g: &ExtendedWeylElement, lambda: &[i64]) -> WeightVec {
        self.pi_weight(g.r, &self.datum.act_weight(&g.word, lambda))
    }

    pub fn act_coroot(&self, g: &ExtendedWeylElement, beta: &[i64]) -> CorootVec {
        self.pi_coroot(g.r, &self.datum.act_coroot(&g.word, beta))
    }

    /// Equality as lattice maps, tested on both bases.
    pub fn same_map(&self, g: &ExtendedWeylElement, h: &ExtendedWeylElement) -> bool {
        (0..=self.n).all(|b| {
            let e = unit(self.n + 1, b);
            self.act_weight(g, &e) == self.act_weight(h, &e) && self.act_coroot(g, &e) == self.act_coroot(h, &e)
        })
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(acc: &mut [i64], v: &[i64], k: i64) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += k * b;
    }
}

/// `π^r ∘ w` in `W ⋊ ⟨π⟩`, the word in application order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedWeylElement {
    pub word: Vec<usize>,
    pub r: i64,
}

impl ExtendedWeylElement {
    pub fn identity() -> Self {
        ExtendedWeylElement { word: Vec::new(), r: 0 }
    }

    pub fn simple(i: usize) -> Self {
        ExtendedWeylElement { word: vec![i], r: 0 }
    }

    pub fn pi(r: i64) -> Self {
        ExtendedWeylElement { word: Vec::new(), r }
    }

    /// `self ∘ other`, using `π^{−r} s_j π^r = s_{j−r}`.
    pub fn compose(&self, other: &Self, n: usize) -> Self {
        let mut word = other.word.clone();
        word.extend(self.word.iter().map(|&j| split(j as i64 - other.r, n).0));
        ExtendedWeylElement { word, r: self.r + other.r }
    }

    pub fn inverse(&self, n: usize) -> Self {
        let word = self.word.iter().rev().map(|&j| split(j as i64 + self.r, n).0).collect();
        ExtendedWeylElement { word, r: -self.r }
    }
}

/// q-case action context on the affine lattice together with the rotation.
pub struct HirotaContext {
    lat: AffineALattice,
    ctx: ActionContext<QCommutator>,
}

/// `c_{k,k+1} = 1`, `c_{k+1,k} = −1` cyclically.
pub fn cyclic_commutators(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for k in 0..n {
        c[k][(k + 1) % n] = 1;
        c[(k + 1) % n][k] = -1;
    }
    c
}

/// Builds the context; `c` defaults to [`cyclic_commutators`] and must satisfy
/// `c_{i+1,j+1} = c_ij`.
pub fn affine_setup(n: usize, c: Option<Vec<Vec<i64>>>) -> Result<HirotaContext> {
    let lat = AffineALattice::new(n)?;
    let c = c.unwrap_or_else(|| cyclic_commutators(n));
    if c.len() != n || c.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("commutator matrix has the wrong shape".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if c[(i + 1) % n][(j + 1) % n] != c[i][j] {
                return Err(Error::Precondition(format!(
                    "realization is not rotation-equivariant: c_{}{} != c_{i}{j}",
                    (i + 1) % n,
                    (j + 1) % n
                )));
            }
        }
    }
    let r = QCommutator::new(lat.datum.clone(), c)?;
    Ok(HirotaContext { lat, ctx: ActionContext::new(r)? })
}

fn eq_status(ctx: &ActionContext<QCommutator>, a: &Tau, b: &Tau) -> Status {
    Status::from_eq(a == b, || format!("{} vs {}", ctx.render_tau(a), ctx.render_tau(b)))
}

impl HirotaContext {
    pub fn lattice(&self) -> &AffineALattice {
        &self.lat
    }

    pub fn action(&self) -> &ActionContext<QCommutator> {
        &self.ctx
    }

    /// `τ_k = τ^{Λ_k}`, `k ∈ ℤ`.
    pub fn tau_var(&self, k: i64) -> Tau {
        self.ctx.tau_mono(&self.lat.lambda(k))
    }

    fn s(&self, k: i64, t: &Tau) -> Result<Tau> {
        self.ctx.apply_simple(self.lat.index(k), t)
    }

    fn qnum(&self, beta: &[i64]) -> QScalar {
        QScalar::qnum(beta, 0, 1)
    }

    fn scalar(&self, c: QScalar) -> Tau {
        self.ctx.elem(self.ctx.realization().scalar(c))
    }

    fn commutes(&self, a: &Tau, b: &Tau) -> Result<bool> {
        Ok(self.ctx.tau_mul(a, b)? == self.ctx.tau_mul(b, a)?)
    }

    /// `π^r` on an expression: `f_k ↦ f_{k+r}`, parameters and exponent by the lattice map.
    pub fn pi_apply(&self, r: i64, t: &Tau) -> Tau {
        let rk = self.lat.n + 1;
        let images = (0..rk).map(|b| self.lat.pi_coroot(r, &unit(rk, b))).collect();
        let m = SymbolMap::linear(images);
        let q = self.ctx.realization();
        let mut p = q.zero();
        for (e, c) in t.prefactor.terms() {
            // the rotated factors are no longer in normal order
            let mut acc = q.scalar(c.substitute(&m));
            for (k, &x) in e.iter().enumerate() {
                if x != 0 {
                    let g = q.generator_power(self.lat.index(k as i64 + r), x).expect("q-commuting powers");
                    acc = q.multiply(&acc, &g).expect("q-commuting products");
                }
            }
            p = q.add(&p, &acc);
        }
        self.ctx.tau(p, self.lat.pi_weight(r, &t.nu))
    }

    /// Extended Weyl group element acting on an expression.
    pub fn apply_extended(&self, g: &ExtendedWeylElement, t: &Tau) -> Result<Tau> {
        Ok(self.pi_apply(g.r, &self.ctx.apply_word(&g.word, t)?))
    }

    /// The three products of the lemma for index `k`, before the scalar brackets.
    fn lemma_terms(&self, k: i64) -> Result<[Tau; 3]> {
        let c = &self.ctx;
        let (tk, tk1) = (self.tau_var(k), self.tau_var(k + 1));
        let x = self.s(k, &self.s(k + 1, &tk1)?)?;
        let y = self.s(k + 1, &self.s(k, &tk)?)?;
        let a = self.s(k, &tk)?;
        let b = self.s(k + 1, &tk1)?;
        Ok([c.tau_mul(&tk, &x)?, c.tau_mul(&y, &tk1)?, c.tau_mul(&a, &b)?])
    }

    /// The lemma for index `k`, the proof's closed forms, the commutativity facts and
    /// π-transport to `k + 1`.
    pub fn check_qhme_lemma(&self, k: i64) -> Result<Vec<Check>> {
        let c = &self.ctx;
        let r = c.realization();
        let lat = &self.lat;
        let mut out = Vec::new();
        let (tk, tk1) = (self.tau_var(k), self.tau_var(k + 1));
        let (ik, ik1) = (lat.index(k), lat.index(k + 1));
        let a = self.s(k, &tk)?;
        let b = self.s(k + 1, &tk1)?;
        let x = self.s(k, &self.s(k + 1, &tk1)?)?;
        let y = self.s(k + 1, &self.s(k, &tk)?)?;
        let (avk, avk1) = (lat.alpha_v(k), lat.alpha_v(k + 1));
        let sum_v: Vec<i64> = avk.iter().zip(&avk1).map(|(p, q)| p + q).collect();
        let (qk, qk1, qs) = (self.qnum(&avk), self.qnum(&avk1), self.qnum(&sum_v));

        // s_k(τ_k) = f_k τ_{k−1}τ_{k+1}/τ_k
        let mut nu = lat.lambda(k - 1);
        add(&mut nu, &lat.lambda(k + 1), 1);
        add(&mut nu, &lat.lambda(k), -1);
        let expect = c.tau(r.generator(ik), nu);
        out.push(Check::new(format!("s{k}(tau{k}) closed form"), eq_status(c, &a, &expect)));

        // s_k s_{k+1}(τ_{k+1}) = ([1−α∨_k] f_{k+1}f_k + [α∨_k] f_k f_{k+1}) τ_{k−1}τ_{k+2}/τ_k
        let two = |u: usize, v: usize| r.multiply(&r.generator(u), &r.generator(v));
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let mut nu = lat.lambda(k - 1);
        add(&mut nu, &lat.lambda(k + 2), 1);
        let mut nu_x = nu.clone();
        add(&mut nu_x, &lat.lambda(k), -1);
        let px = r.add(
            &r.scale(&QScalar::qnum(&neg(&avk), 1, 1), &two(ik1, ik)?),
            &r.scale(&qk, &two(ik, ik1)?),
        );
        out.push(Check::new(format!("s{k}s{}(tau{}) closed form", k + 1, k + 1), eq_status(c, &x, &c.tau(px, nu_x))));
        let mut nu_y = nu.clone();
        add(&mut nu_y, &lat.lambda(k + 1), -1);
        let py = r.add(
            &r.scale(&QScalar::qnum(&neg(&avk1), 1, 1), &two(ik, ik1)?),
            &r.scale(&qk1, &two(ik1, ik)?),
        );
        out.push(Check::new(format!("s{}s{k}(tau{k}) closed form", k + 1), eq_status(c, &y, &c.tau(py, nu_y))));

        let [t1, t2, t3] = self.lemma_terms(k)?;
        let lhs = c.tau_add(&c.tau_scale(&qk1, &t1), &c.tau_scale(&qk, &t2))?;
        let rhs = c.tau_scale(&qs, &t3);
        out.push(Check::new(format!("lemma k={k}"), eq_status(c, &lhs, &rhs)).with_detail(c.render_tau(&lhs)));

        let fact = |name: String, ok: bool| Check::new(name, Status::from_eq(ok, || "relation does not hold".into()));
        let sk1 = self.scalar(qk1.clone());
        let sk = self.scalar(qk.clone());
        let ss = self.scalar(qs);
        out.push(fact("tau_k and s_k s_k+1(tau_k+1) do not commute".into(), !self.commutes(&tk, &x)?));
        out.push(fact(
            "tau_k, s_k s_k+1(tau_k+1) commute with [a_k+1]".into(),
            self.commutes(&tk, &sk1)? && self.commutes(&x, &sk1)?,
        ));
        out.push(fact("s_k+1 s_k(tau_k) and tau_k+1 do not commute".into(), !self.commutes(&y, &tk1)?));
        out.push(fact(
            "s_k+1 s_k(tau_k), tau_k+1 commute with [a_k]".into(),
            self.commutes(&y, &sk)? && self.commutes(&tk1, &sk)?,
        ));
        let (ab, ba) = (c.tau_mul(&a, &b)?, c.tau_mul(&b, &a)?);
        out.push(Check::new(
            "s_k(tau_k) and s_k+1(tau_k+1) commute",
            Status::from_eq(ab == ba, || format!("{} vs {}", c.render_tau(&ab), c.render_tau(&ba))),
        ));
        for (name, t) in [("s_k(tau_k)", &a), ("s_k+1(tau_k+1)", &b)] {
            let ok = !self.commutes(t, &ss)?;
            out.push(Check::new(
                format!("{name} does not commute with [a_k+a_k+1]"),
                Status::from_eq(ok, || format!("{} commutes with {}", c.render_tau(t), c.render_tau(&ss))),
            ));
        }
        out.push(fact("s_k(tau_k) s_k+1(tau_k+1) commutes with [a_k+a_k+1]".into(), self.commutes(&t3, &ss)?));

        // τ_{k+n} = τ_k τ^{ϖ_n}, and τ^{ϖ_n} is central for the parameters
        let n = lat.n as i64;
        let wn = c.tau_mono(&lat.varpi(n));
        out.push(fact(
            "tau_k+n = tau_k tau^varpi_n".into(),
            self.tau_var(k + n) == c.tau_mul(&tk, &wn)?,
        ));
        let mut central = true;
        for j in 0..n {
            let qa = self.scalar(QScalar::qpow(&lat.alpha_v(j), 0));
            central &= self.commutes(&wn, &qa)?;
        }
        out.push(fact("tau^varpi_n commutes with q^a_j".into(), central));

        let next = self.lemma_terms(k + 1)?;
        let [u1, u2, u3] = [t1, t2, t3].map(|t| self.pi_apply(1, &t));
        out.push(fact(
            format!("pi transports lemma k={k} to k={}", k + 1),
            u1 == next[0] && u2 == next[1] && u3 == next[2],
        ));
        Ok(out)
    }

    /// `τ_{k−1}(m + x) = τ_{(Λ_{k−1} + m + x)}`.
    pub fn shifted_tau(&self, k: i64, m: &[i64], extra: &[i64]) -> Result<Tau> {
        let mut nu = self.lat.lambda(k - 1);
        add(&mut nu, &self.lat.shift_weight(m), 1);
        for &e in extra {
            add(&mut nu, &self.lat.eps(e), 1);
        }
        self.ctx.tau_at(&nu, DECOMPOSE_CAP)
    }

    /// `α∨_k(m) = α∨_k + (m_{k+1} − m_k)δ∨`.
    pub fn alpha_v_m(&self, k: i64, m: &[i64]) -> CorootVec {
        let mk = |j: i64| m[self.lat.index(j - 1)];
        let mut v = self.lat.alpha_v(k);
        v[0] += mk(k + 1) - mk(k);
        v
    }

    /// `ε∨_k(m) = ε∨_k − m_k δ∨`.
    pub fn eps_v_m(&self, k: i64, m: &[i64]) -> CorootVec {
        let mut v = self.lat.eps_v(k);
        v[0] -= m[self.lat.index(k - 1)];
        v
    }

    /// The lemma translated by `T^m` (normative), and the cyclic form with its middle
    /// bracket `[ε∨_k(m) − ε∨_k(m)]` evaluated as printed (informational).
    pub fn check_qhme_translated(&self, k: i64, m: &[i64]) -> Result<Vec<Check>> {
        let n = self.lat.n;
        if m.len() != n {
            return Err(Error::Precondition(format!("shift vector needs {n} entries")));
        }
        let c = &self.ctx;
        let t = |extra: &[i64]| self.shifted_tau(k, m, extra);
        let p1 = c.tau_mul(&t(&[k])?, &t(&[k + 1, k + 2])?)?;
        let p2 = c.tau_mul(&t(&[k + 2])?, &t(&[k, k + 1])?)?;
        let p3 = c.tau_mul(&t(&[k + 1])?, &t(&[k, k + 2])?)?;
        let (ak, ak1) = (self.alpha_v_m(k, m), self.alpha_v_m(k + 1, m));
        let sum: Vec<i64> = ak.iter().zip(&ak1).map(|(x, y)| x + y).collect();
        let lhs = c.tau_add(&c.tau_scale(&self.qnum(&ak1), &p1), &c.tau_scale(&self.qnum(&ak), &p2))?;
        let rhs = c.tau_scale(&self.qnum(&sum), &p3);
        let ms = m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut out =
            vec![Check::new(format!("translated lemma k={k} m=({ms})"), eq_status(c, &lhs, &rhs))
                .with_detail(c.render_tau(&lhs))];

        let e = |j: i64| self.eps_v_m(j, m);
        let br = |x: CorootVec, y: CorootVec| self.qnum(&sub(&x, &y));
        let terms = [
            c.tau_scale(&br(e(k + 1), e(k + 2)), &p1),
            c.tau_scale(&br(e(k), e(k)), &p2),
            c.tau_scale(&br(e(k + 2), e(k)), &p3),
        ];
        let total = c.tau_add(&c.tau_add(&terms[0], &terms[1])?, &terms[2])?;
        let zero = c.realization().is_zero(&total.prefactor);
        out.push(
            Check::new(
                format!("cyclic form as printed k={k} m=({ms})"),
                Status::from_eq(zero, || format!("middle bracket is zero; residual {}", c.render_tau(&total))),
            )
            .informational(),
        );
        Ok(out)
    }
}
