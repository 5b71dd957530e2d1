//! Classical limit for constant Poisson brackets `{f_i, f_j} = c_ij` and the Okamoto
//! polynomials.
//!
//! Everything here is commutative: elements are reduced fractions of polynomials in the
//! dependent variables `f_i` (variables `0..n`) and the coroot symbols (variables `n..n+r`).
//! The action is built directly from the classical formulas, so it serves as an oracle
//! that is independent of the quantum engine.

use crate::cartan::{RootDatum, WeightVec};
use crate::error::{Error, Result};
use crate::ncalg::{ConstCommutator, LaurentElem};
use crate::poly::upoly::rat;
use crate::poly::{MPoly, Mono, UPoly};
use crate::report::{Check, Status};
use crate::scalars::{weyl_symbol_map, KmScalar};
use crate::weylaction::braid_order;
use num::BigRational;

/// Reduced fraction `num/den` with `den` monic in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonElement {
    num: MPoly,
    den: MPoly,
}

impl PoissonElement {
    pub fn zero() -> Self {
        PoissonElement { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> Self {
        PoissonElement { num: p, den: MPoly::one() }
    }

    pub fn constant(a: BigRational) -> Self {
        Self::from_poly(MPoly::constant(a))
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = MPoly::gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let (_, lc) = den.lead().expect("nonzero denominator");
        let s = lc.recip();
        PoissonElement { num: num.scale(&s), den: den.scale(&s) }
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::reduced(&self.num + &o.num, self.den.clone());
        }
        Self::reduced(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn neg(&self) -> Self {
        PoissonElement { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::reduced(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Precondition("inverse of zero".into()));
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(PoissonElement { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn scale(&self, a: &BigRational) -> Self {
        Self::reduced(self.num.scale(a), self.den.clone())
    }

    /// `∂/∂x_v` by the quotient rule.
    pub fn derivative(&self, v: usize) -> Self {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::reduced(n, &self.den * &self.den)
    }

    /// Simultaneous substitution `x_k ↦ images[k]`; later variables are kept.
    pub fn substitute(&self, images: &[PoissonElement]) -> Self {
        let (a, b) = substitute_poly(&self.num, images);
        let (c, d) = substitute_poly(&self.den, images);
        Self::reduced(&a * &d, &b * &c)
    }

    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        let n = self.num.render_with(names);
        if self.den.is_one() {
            return n;
        }
        let n = if self.num.len() > 1 { format!("({n})") } else { n };
        let d = self.den.render_with(names);
        let d = if self.den.len() > 1 || d.contains('*') { format!("({d})") } else { d };
        format!("{n}/{d}")
    }
}

/// `p(images)` as an unreduced fraction over the product of the image denominators.
fn substitute_poly(p: &MPoly, images: &[PoissonElement]) -> (MPoly, MPoly) {
    let nv = images.len();
    let top: Vec<u32> = (0..nv).map(|k| p.degree_in(k)).collect();
    let mut den = MPoly::one();
    for (k, img) in images.iter().enumerate() {
        if top[k] > 0 && !img.den.is_one() {
            den = &den * &img.den.pow(top[k]);
        }
    }
    let mut num = MPoly::zero();
    for (m, c) in p.terms() {
        let mut acc = MPoly::constant(c.clone());
        let ex = m.exps();
        let mut keep = vec![0u32; ex.len()];
        for k in 0..nv.max(ex.len()) {
            let e = ex.get(k).copied().unwrap_or(0);
            if k >= nv {
                keep[k] = e;
                continue;
            }
            if e > 0 {
                acc = &acc * &images[k].num.pow(e);
            }
            if top[k] > e && !images[k].den.is_one() {
                acc = &acc * &images[k].den.pow(top[k] - e);
            }
        }
        let keep = Mono::new(keep);
        if !keep.is_one() {
            acc = acc.mul_mono(&keep);
        }
        num = &num + &acc;
    }
    (num, den)
}

/// `φ·τ^ν` with a classical cocycle `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTau {
    pub cocycle: PoissonElement,
    pub nu: WeightVec,
}

/// Constant bracket data and the variable layout.
#[derive(Clone, Debug)]
pub struct ClassicalContext {
    datum: RootDatum,
    c: Vec<Vec<i64>>,
}

impl ClassicalContext {
    /// Same bracket matrix as the constant-commutator realization.
    pub fn from_realization(r: &ConstCommutator) -> Self {
        use crate::ncalg::Realization;
        ClassicalContext { datum: r.datum().clone(), c: r.matrix().to_vec() }
    }

    pub fn new(datum: RootDatum, c: Vec<Vec<i64>>) -> Result<Self> {
        Ok(Self::from_realization(&ConstCommutator::new(datum, c)?))
    }

    pub fn standard(datum: RootDatum) -> Self {
        Self::from_realization(&ConstCommutator::standard(datum))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    fn n(&self) -> usize {
        self.datum.n()
    }

    fn r(&self) -> usize {
        self.datum.lattice_rank()
    }

    pub fn f(&self, i: usize) -> PoissonElement {
        PoissonElement::from_poly(MPoly::var(i))
    }

    /// The coroot basis symbol `b`.
    pub fn symbol(&self, b: usize) -> PoissonElement {
        PoissonElement::from_poly(MPoly::var(self.n() + b))
    }

    /// The parameter `β` as a linear form in the symbols.
    pub fn parameter(&self, beta: &[i64]) -> PoissonElement {
        let mut p = MPoly::zero();
        for (b, &x) in beta.iter().enumerate() {
            if x != 0 {
                p.add_term(Mono::var(self.n() + b), rat(x));
            }
        }
        PoissonElement::from_poly(p)
    }

    pub fn tau_mono(&self, nu: &[i64]) -> ClassicalTau {
        ClassicalTau { cocycle: PoissonElement::one(), nu: nu.to_vec() }
    }

    pub fn var_name(&self, k: usize) -> String {
        let n = self.n();
        if k < n {
            format!("f{}", self.datum.labels()[k])
        } else {
            self.datum.coroot_names()[k - n].clone()
        }
    }

    pub fn render(&self, a: &PoissonElement) -> String {
        a.render(&|k| self.var_name(k))
    }

    pub fn render_tau(&self, t: &ClassicalTau) -> String {
        let w = self.datum.render_weight_coords(&t.nu);
        let p = self.render(&t.cocycle);
        let p = if t.cocycle.is_polynomial() && t.cocycle.numer().len() > 1 { format!("({p})") } else { p };
        format!("{p} * tau[{w}]")
    }

    /// `{a, b} = Σ c_ij ∂_i a ∂_j b`.
    pub fn bracket(&self, a: &PoissonElement, b: &PoissonElement) -> PoissonElement {
        let mut acc = PoissonElement::zero();
        for i in 0..self.n() {
            let da = a.derivative(i);
            if da.is_zero() {
                continue;
            }
            for j in 0..self.n() {
                if self.c[i][j] != 0 {
                    let t = da.mul(&b.derivative(j)).scale(&rat(self.c[i][j]));
                    acc = acc.add(&t);
                }
            }
        }
        acc
    }

    /// `s_i(f_j) = Σ_{k=0}^{−a_ij} (α∨_i)^k/k! · ad^k(f_i)(f_j) · f_i^{−k}`.
    pub fn simple_image(&self, i: usize, j: usize) -> PoissonElement {
        let d = &self.datum;
        let fi = self.f(i);
        let alpha = self.parameter(d.coroot(i));
        let top = if i == j { 0 } else { -d.a(i, j) };
        let mut ad = self.f(j);
        let mut out = ad.clone();
        let mut fact = BigRational::from_integer(1.into());
        for k in 1..=top {
            ad = self.bracket(&fi, &ad);
            if ad.is_zero() {
                break;
            }
            fact *= rat(k);
            let term = alpha.pow(k).expect("nonnegative").mul(&ad).mul(&fi.pow(-k).expect("f_i is nonzero"));
            out = out.add(&term.scale(&fact.recip()));
        }
        out
    }

    /// Images of all variables under `s_i`.
    fn images(&self, i: usize) -> Vec<PoissonElement> {
        let m = weyl_symbol_map(&self.datum, &[i]);
        let mut out: Vec<PoissonElement> = (0..self.n()).map(|j| self.simple_image(i, j)).collect();
        for b in 0..self.r() {
            out.push(self.parameter(&m.lin[b]));
        }
        out
    }

    pub fn classical_apply(&self, i: usize, a: &PoissonElement) -> Result<PoissonElement> {
        self.datum.check_word(&[i])?;
        Ok(a.substitute(&self.images(i)))
    }

    /// `s_i(φ τ^ν) = s_i(φ)·f_i^{⟨α∨_i,ν⟩}·τ^{s_i(ν)}`.
    pub fn apply_tau(&self, i: usize, t: &ClassicalTau) -> Result<ClassicalTau> {
        let d = &self.datum;
        let k = d.pair(d.coroot(i), &t.nu);
        let phi = self.classical_apply(i, &t.cocycle)?.mul(&self.f(i).pow(k)?);
        Ok(ClassicalTau { cocycle: phi, nu: d.reflect_weight(i, &t.nu) })
    }

    /// Applies `w[0]` first.
    pub fn apply_word(&self, w: &[usize], t: &ClassicalTau) -> Result<ClassicalTau> {
        let mut cur = t.clone();
        for &i in w {
            cur = self.apply_tau(i, &cur)?;
        }
        Ok(cur)
    }

    pub fn apply_word_elem(&self, w: &[usize], a: &PoissonElement) -> Result<PoissonElement> {
        let mut cur = a.clone();
        for &i in w {
            cur = self.classical_apply(i, &cur)?;
        }
        Ok(cur)
    }

    /// `τ_{(w(μ))} = w(τ^μ)` for a reduced word and dominant `μ`.
    pub fn classical_tau(&self, w: &[usize], mu: &[i64]) -> Result<ClassicalTau> {
        let d = &self.datum;
        d.check_word(w)?;
        if !d.is_reduced(w) {
            return Err(Error::Precondition(format!("word {} is not reduced", d.render_word(w))));
        }
        if mu.len() != d.lattice_rank() || !d.is_dominant(mu) {
            return Err(Error::Precondition(format!("weight {mu:?} is not dominant")));
        }
        self.apply_word(w, &self.tau_mono(mu))
    }

    /// The cocycle of `τ_{(w(μ))}` has denominator one.
    pub fn polynomial_check(&self, w: &[usize], mu: &[i64]) -> Result<Check> {
        let t = self.classical_tau(w, mu)?;
        let s = Status::from_eq(t.cocycle.is_polynomial(), || self.render(&t.cocycle));
        Ok(Check::new(format!("classical cocycle of {} is polynomial", self.datum.render_word(w)), s)
            .with_detail(self.render_tau(&t)))
    }

    /// Commutative image of an ordered element: `c·f_1^{e_1}⋯f_n^{e_n} ↦` the same product
    /// of commuting variables. This is the reading of ordered monomials, not an algebra map.
    pub fn commutative_image(&self, a: &LaurentElem<KmScalar>) -> PoissonElement {
        let n = self.n();
        let shift: Vec<MPoly> = (0..self.r()).map(|b| MPoly::var(n + b)).collect();
        let mut num = MPoly::zero();
        let mut den_exp = vec![0u32; n];
        for (e, _) in a.terms() {
            for (k, &x) in e.iter().enumerate() {
                if x < 0 {
                    den_exp[k] = den_exp[k].max(x.unsigned_abs() as u32);
                }
            }
        }
        for (e, c) in a.terms() {
            let exps: Vec<u32> = e.iter().zip(&den_exp).map(|(&x, &s)| (x + s as i64) as u32).collect();
            num = &num + &c.poly().substitute(&shift).mul_mono(&Mono::new(exps));
        }
        PoissonElement::reduced(num, MPoly::term(rat(1), Mono::new(den_exp)))
    }

    /// Braid relation for `(i, j)` and `s_i² = s_j² = id` on every `f_k`, every coroot
    /// symbol and every `τ^{Λ_k}`.
    pub fn verify_braid(&self, i: usize, j: usize) -> Result<Vec<Check>> {
        let d = &self.datum;
        d.check_word(&[i, j])?;
        let m = match braid_order(d.a(i, j), d.a(j, i)) {
            Some(m) if i != j => m,
            _ => return Err(Error::Precondition(format!("pair ({i},{j}) has no braid relation in the list"))),
        };
        let u: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
        let v: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
        let words: [(String, Vec<usize>, Vec<usize>); 3] = [
            (format!("braid {}={}", d.render_word(&u), d.render_word(&v)), u, v),
            (format!("s{}^2=id", d.labels()[i]), vec![i, i], vec![]),
            (format!("s{}^2=id", d.labels()[j]), vec![j, j], vec![]),
        ];
        let mut out = Vec::new();
        for (name, a, b) in &words {
            for k in 0..self.n() + self.r() {
                let x = PoissonElement::from_poly(MPoly::var(k));
                let (l, r) = (self.apply_word_elem(a, &x)?, self.apply_word_elem(b, &x)?);
                let s = Status::from_eq(l == r, || format!("{} vs {}", self.render(&l), self.render(&r)));
                out.push(Check::new(format!("classical {name} on {}", self.var_name(k)), s));
            }
            for k in 0..self.n() {
                let t = self.tau_mono(d.fundamental(k));
                let (l, r) = (self.apply_word(a, &t)?, self.apply_word(b, &t)?);
                let s = Status::from_eq(l == r, || format!("{} vs {}", self.render_tau(&l), self.render_tau(&r)));
                out.push(Check::new(format!("classical {name} on tau{}", d.labels()[k]), s));
            }
        }
        Ok(out)
    }
}

/// `Q_0, Q_1, …, Q_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkamotoSeq {
    pub polys: Vec<UPoly>,
}

/// `Q_0 = Q_1 = 1`, `Q_{m+1} = (Q_m''Q_m − (Q_m')² + (x²+2m−1)Q_m²)/Q_{m−1}`; each step must
/// divide exactly.
pub fn okamoto_seq(m_max: usize) -> Result<OkamotoSeq> {
    if m_max < 1 {
        return Err(Error::Precondition("okamoto needs m >= 1".into()));
    }
    let mut polys = vec![UPoly::one(), UPoly::one()];
    for m in 1..m_max {
        let q = &polys[m];
        let d1 = q.derivative();
        let d2 = d1.derivative();
        let x2 = UPoly::from_i64_coeffs(&[2 * m as i64 - 1, 0, 1]);
        let top = &(&(&d2 * q) - &(&d1 * &d1)) + &(&x2 * &(q * q));
        let (quo, rem) = top.div_rem(&polys[m - 1]);
        if !rem.is_zero() {
            return Err(Error::Falsified(format!("Q_{} leaves remainder {}", m + 1, rem.render("x"))));
        }
        polys.push(quo);
    }
    Ok(OkamotoSeq { polys })
}
