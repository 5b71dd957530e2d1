//! Sparse multivariate polynomials over the rationals, graded-lex ordered, with exact
//! division and a recursive gcd.

use super::upoly::{owned_ops, rat};
use num::{BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn new(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Mono(e)
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Mono(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let n = self.0.len().max(o.0.len());
        Mono::new((0..n).map(|k| self.exp(k) + o.exp(k)).collect())
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().enumerate().all(|(k, &e)| e <= o.exp(k))
    }

    pub fn div(&self, o: &Mono) -> Mono {
        Mono::new((0..self.0.len()).map(|k| self.exp(k) - o.exp(k)).collect())
    }

    fn with_exp(&self, i: usize, e: u32) -> Mono {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        v[i] = e;
        Mono::new(v)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for k in 0..n {
                match self.exp(k).cmp(&o.exp(k)) {
                    Ordering::Equal => continue,
                    c => return c,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    t: BTreeMap<Mono, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { t: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(a: BigRational) -> Self {
        Self::term(a, Mono::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(i: usize) -> Self {
        Self::term(BigRational::one(), Mono::var(i))
    }

    pub fn term(a: BigRational, m: Mono) -> Self {
        let mut t = BTreeMap::new();
        if !a.is_zero() {
            t.insert(m, a);
        }
        MPoly { t }
    }

    /// Linear form `c + Σ a_k x_k`.
    pub fn linear(coeffs: &[i64], c: i64) -> Self {
        let mut p = Self::from_i64(c);
        for (k, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                p.add_term(Mono::var(k), rat(a));
            }
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, a: BigRational) {
        if a.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.t.entry(m) {
            Entry::Vacant(v) => {
                v.insert(a);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &a;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRational)> {
        self.t.iter()
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.t.len() == 1 && self.t.get(&Mono::one()).is_some_and(|a| a.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.t.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> BigRational {
        self.t.get(&Mono::one()).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn lead(&self) -> Option<(&Mono, &BigRational)> {
        self.t.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.t.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn nvars(&self) -> usize {
        self.t.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.nvars().checked_sub(1)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.t.keys().any(|m| m.exp(v) > 0)
    }

    pub fn scale(&self, a: &BigRational) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        MPoly { t: self.t.iter().map(|(m, c)| (m.clone(), c * a)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        MPoly { t: self.t.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace variable `k` by `images[k]`; variables past the slice stay as they are.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        let mut cache: Vec<Vec<MPoly>> = vec![vec![MPoly::one()]; images.len()];
        for (m, c) in &self.t {
            let mut acc = MPoly::constant(c.clone());
            let mut keep = vec![0u32; m.0.len()];
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if k < images.len() {
                    let pw = &mut cache[k];
                    while pw.len() <= e as usize {
                        let nxt = &pw[pw.len() - 1] * &images[k];
                        pw.push(nxt);
                    }
                    acc = &acc * &pw[e as usize];
                } else {
                    keep[k] = e;
                }
            }
            let keep = Mono::new(keep);
            if !keep.is_one() {
                acc = acc.mul_mono(&keep);
            }
            out = &out + &acc;
        }
        out
    }

    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.t {
            let mut v = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v *= num::pow(values[k].clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn derivative(&self, v: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.t {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * rat(e as i64));
            }
        }
        out
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.t.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Coefficients as a polynomial in `x_v`, lowest power first.
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.t {
            let e = m.exp(v) as usize;
            out[e].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    fn from_coeffs_in(v: usize, cs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in cs.iter().enumerate() {
            for (m, a) in &c.t {
                out.add_term(m.with_exp(v, e as u32), a.clone());
            }
        }
        out
    }

    /// Exact quotient in graded-lex division, `None` if not divisible.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (lm, lc) = d.lead().expect("division by zero polynomial");
        let (lm, lc) = (lm.clone(), lc.clone());
        if d.len() == 1 {
            let mut q = MPoly::zero();
            for (m, c) in &self.t {
                if !lm.divides(m) {
                    return None;
                }
                q.add_term(m.div(&lm), c / &lc);
            }
            return Some(q);
        }
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((m, c)) = r.lead() {
            if !lm.divides(m) {
                return None;
            }
            let t = MPoly::term(c / &lc, m.div(&lm));
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Leading coefficient normalised to one.
    pub fn monic(&self) -> MPoly {
        match self.lead() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let s = c.recip();
                self.scale(&s)
            }
        }
    }

    /// Greatest common divisor, normalised monic; `gcd(0,0) = 0`.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return MPoly::one();
        }
        // monomial fast path
        if a.len() == 1 || b.len() == 1 {
            let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
            let sm = single.lead().unwrap().0.clone();
            let n = sm.0.len();
            let mut g = sm.0.clone();
            for m in other.t.keys() {
                for (k, gk) in g.iter_mut().enumerate().take(n) {
                    *gk = (*gk).min(m.exp(k));
                }
            }
            return MPoly::term(BigRational::one(), Mono::new(g));
        }
        let v = a.max_var().max(b.max_var()).unwrap();
        if !a.uses_var(v) {
            return Self::gcd(a, &Self::content_in(b, v));
        }
        if !b.uses_var(v) {
            return Self::gcd(&Self::content_in(a, v), b);
        }
        let ca = Self::content_in(a, v);
        let cb = Self::content_in(b, v);
        let c = Self::gcd(&ca, &cb);
        let mut p = Self::from_coeffs_in(v, &a.coeffs_in(v)).div_exact(&ca).unwrap().coeffs_in(v);
        let mut r = b.div_exact(&cb).unwrap().coeffs_in(v);
        if p.len() < r.len() {
            std::mem::swap(&mut p, &mut r);
        }
        while !r.is_empty() {
            let rem = Self::prem(&p, &r);
            p = r;
            r = if rem.is_empty() {
                rem
            } else {
                let poly = Self::from_coeffs_in(v, &rem);
                let ct = Self::content_in(&poly, v);
                poly.div_exact(&ct).unwrap().coeffs_in(v)
            };
        }
        let g = Self::from_coeffs_in(v, &p);
        (&g * &c).monic()
    }

    fn content_in(a: &MPoly, v: usize) -> MPoly {
        let mut g = MPoly::zero();
        for c in a.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = Self::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Pseudo-remainder of coefficient vectors in the main variable.
    fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
        let mut r: Vec<MPoly> = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for c in r.iter_mut() {
                *c = &*c * lb;
            }
            for (k, bk) in b.iter().enumerate() {
                let t = &lr * bk;
                r[k + shift] = &r[k + shift] - &t;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        r
    }

    /// Render with the given variable names, highest graded-lex term first.
    pub fn render_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.t.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_mono(m, name);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn render_mono(m: &Mono, name: &dyn Fn(usize) -> String) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(name(k)),
            _ => parts.push(format!("{}^{e}", name(k))),
        }
    }
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&|k| format!("x{k}")))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let (big, small) = if self.t.len() >= o.t.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (m, c) in &small.t {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.t {
            r.add_term(m.clone(), -c);
        }
        r
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { t: self.t.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        if self.is_zero() || o.is_zero() {
            return r;
        }
        for (m1, c1) in &self.t {
            for (m2, c2) in &o.t {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }
}

owned_ops!(MPoly);
