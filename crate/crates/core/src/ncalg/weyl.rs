//! The Weyl algebra `C[x, ∂]` with rational functions of `x` on the left.

use super::commutator::gbinom;
use super::laurent::{join_term, render_term};
use super::{AlgebraError, Realization, Result};
use crate::cartan::{named_gcm, RootDatum};
use crate::poly::{Mono, MPoly, UPoly};
use crate::scalars::{KmScalar, ParamScalar};
use num::{BigRational, One, Zero};
use std::collections::BTreeMap;

/// `N(x)/D(x)` with `N` having parameter-polynomial coefficients and `D ∈ Q[x]` monic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XRat {
    num: Vec<KmScalar>,
    den: UPoly,
}

impl XRat {
    pub fn zero() -> Self {
        XRat { num: Vec::new(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Self::scalar(KmScalar::one())
    }

    pub fn scalar(c: KmScalar) -> Self {
        Self::new(vec![c], UPoly::one())
    }

    pub fn x() -> Self {
        Self::new(vec![KmScalar::zero(), KmScalar::one()], UPoly::one())
    }

    pub fn from_upoly(p: &UPoly) -> Self {
        let num = p.coeffs().iter().map(|c| KmScalar::rational(c.clone())).collect();
        Self::new(num, UPoly::one())
    }

    pub fn inverse_of(p: &UPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(AlgebraError::Invalid("inverse of zero".into()));
        }
        Ok(Self::new(vec![KmScalar::one()], p.clone()))
    }

    /// Reduce `num/den` to lowest terms.
    pub fn new(mut num: Vec<KmScalar>, den: UPoly) -> Self {
        while num.last().is_some_and(|c| c.is_zero()) {
            num.pop();
        }
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_constant() {
            let s = KmScalar::rational(den.lead().recip());
            return XRat { num: num.into_iter().map(|c| c * &s).collect(), den: UPoly::one() };
        }
        let mut slices = Self::slices(&num);
        let mut g = den.clone();
        for s in slices.values() {
            if g.is_constant() {
                break;
            }
            g = UPoly::gcd(&g, s);
        }
        let mut den = den;
        if !g.is_constant() {
            den = den.div_exact(&g).unwrap();
            for s in slices.values_mut() {
                *s = s.div_exact(&g).unwrap();
            }
        }
        let l = den.lead().recip();
        den = den.scale(&l);
        for s in slices.values_mut() {
            *s = s.scale(&l);
        }
        if !g.is_constant() || !l.is_one() {
            num = Self::from_slices(&slices);
        }
        XRat { num, den }
    }

    fn slices(num: &[KmScalar]) -> BTreeMap<Mono, UPoly> {
        let mut out: BTreeMap<Mono, Vec<BigRational>> = BTreeMap::new();
        for (m, c) in num.iter().enumerate() {
            for (mono, a) in c.poly().terms() {
                let v = out.entry(mono.clone()).or_insert_with(|| vec![BigRational::zero(); num.len()]);
                v[m] = a.clone();
            }
        }
        out.into_iter().map(|(k, v)| (k, UPoly::from_coeffs(v))).collect()
    }

    fn from_slices(s: &BTreeMap<Mono, UPoly>) -> Vec<KmScalar> {
        let len = s.values().filter_map(|p| p.degree()).max().map_or(0, |d| d + 1);
        let mut num = vec![MPoly::zero(); len];
        for (mono, p) in s {
            for (m, a) in p.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    num[m].add_term(mono.clone(), a.clone());
                }
            }
        }
        num.into_iter().map(KmScalar).collect()
    }

    pub fn numer(&self) -> &[KmScalar] {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Degree in `x` of a polynomial.
    pub fn x_degree(&self) -> usize {
        self.num.len().saturating_sub(1)
    }

    pub fn as_scalar(&self) -> Option<KmScalar> {
        match self.num.len() {
            0 => Some(KmScalar::zero()),
            1 if self.den.is_one() => Some(self.num[0].clone()),
            _ => None,
        }
    }

    fn num_mul_upoly(n: &[KmScalar], p: &UPoly) -> Vec<KmScalar> {
        let q: Vec<KmScalar> = p.coeffs().iter().map(|c| KmScalar::rational(c.clone())).collect();
        Self::conv(n, &q)
    }

    fn conv(a: &[KmScalar], b: &[KmScalar]) -> Vec<KmScalar> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![KmScalar::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].clone() + x.clone() * y;
                }
            }
        }
        out
    }

    fn num_add(a: &[KmScalar], b: &[KmScalar]) -> Vec<KmScalar> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|k| match (a.get(k), b.get(k)) {
                (Some(x), Some(y)) => x.clone() + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = Self::num_add(&self.num, &o.num);
            if self.den.is_one() {
                let mut r = XRat { num: n, den: UPoly::one() };
                while r.num.last().is_some_and(|c| c.is_zero()) {
                    r.num.pop();
                }
                return r;
            }
            return Self::new(n, self.den.clone());
        }
        let n = Self::num_add(&Self::num_mul_upoly(&self.num, &o.den), &Self::num_mul_upoly(&o.num, &self.den));
        Self::new(n, &self.den * &o.den)
    }

    pub fn neg(&self) -> Self {
        XRat { num: self.num.iter().map(|c| -c.clone()).collect(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let n = Self::conv(&self.num, &o.num);
        if self.den.is_one() && o.den.is_one() {
            return XRat { num: n, den: UPoly::one() };
        }
        Self::new(n, &self.den * &o.den)
    }

    pub fn scale(&self, c: &KmScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.iter().map(|a| a.clone() * c).collect(), self.den.clone())
    }

    pub fn map_scalars(&self, f: &dyn Fn(&KmScalar) -> KmScalar) -> Self {
        Self::new(self.num.iter().map(f).collect(), self.den.clone())
    }

    fn num_derivative(n: &[KmScalar]) -> Vec<KmScalar> {
        n.iter().enumerate().skip(1).map(|(m, c)| c.clone() * KmScalar::from_i64(m as i64)).collect()
    }

    pub fn derivative(&self) -> Self {
        let dn = Self::num_derivative(&self.num);
        if self.den.is_one() {
            return Self::new(dn, UPoly::one());
        }
        let a = Self::num_mul_upoly(&dn, &self.den);
        let b = Self::num_mul_upoly(&self.num, &self.den.derivative());
        let n = Self::num_add(&a, &b.into_iter().map(|c| -c).collect::<Vec<_>>());
        Self::new(n, &self.den * &self.den)
    }

    /// Text form of a polynomial in `x` with parameter coefficients.
    fn render_num(num: &[KmScalar], names: &[String]) -> String {
        let mut out = String::new();
        for (m, c) in num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = x_mono(m);
            join_term(&mut out, &render_term(c, &mono, names));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        let n = Self::render_num(&self.num, names);
        if self.den.is_one() {
            n
        } else {
            format!("({n})/({})", self.den.render("x"))
        }
    }
}

fn x_mono(m: usize) -> String {
    match m {
        0 => "1".into(),
        1 => "x".into(),
        _ => format!("x^{m}"),
    }
}

fn d_mono(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "d".into(),
        _ => format!("d^{k}"),
    }
}

/// `Σ_k r_k(x) ∂^k`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeylElem {
    terms: BTreeMap<i64, XRat>,
}

impl WeylElem {
    pub fn zero() -> Self {
        WeylElem { terms: BTreeMap::new() }
    }

    pub fn term(r: XRat, k: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(k, r);
        e
    }

    pub fn scalar(c: KmScalar) -> Self {
        Self::term(XRat::scalar(c), 0)
    }

    pub fn x_pow(m: i64) -> Self {
        if m >= 0 {
            Self::term(XRat::from_upoly(&UPoly::monomial(BigRational::one(), m as usize)), 0)
        } else {
            Self::term(XRat::inverse_of(&UPoly::monomial(BigRational::one(), (-m) as usize)).unwrap(), 0)
        }
    }

    pub fn d_pow(k: i64) -> Self {
        Self::term(XRat::one(), k)
    }

    pub fn add_term(&mut self, k: i64, r: XRat) {
        if r.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(r);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&r);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &XRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        WeylElem { terms: self.terms.iter().map(|(k, r)| (*k, r.neg())).collect() }
    }

    pub fn scale(&self, c: &KmScalar) -> Self {
        let mut r = Self::zero();
        for (k, a) in &self.terms {
            r.add_term(*k, a.scale(c));
        }
        r
    }

    pub fn map_scalars(&self, f: &dyn Fn(&KmScalar) -> KmScalar) -> Self {
        let mut r = Self::zero();
        for (k, a) in &self.terms {
            r.add_term(*k, a.map_scalars(f));
        }
        r
    }

    /// `∂^k · s`, moving `∂^k` to the right.
    fn d_times(k: i64, s: &XRat) -> Result<Vec<(XRat, i64)>> {
        if k == 0 {
            return Ok(vec![(s.clone(), 0)]);
        }
        if k < 0 && !s.is_polynomial() {
            return Err(AlgebraError::UnsupportedLocalization(format!(
                "d^{k} past a non-polynomial coefficient is an infinite series"
            )));
        }
        let jmax = if k > 0 { k } else { s.x_degree() as i64 };
        let mut out = Vec::new();
        let mut der = s.clone();
        for j in 0..=jmax {
            if j > 0 {
                der = der.derivative();
            }
            if der.is_zero() {
                break;
            }
            let b = gbinom(k, j);
            out.push((der.scale(&KmScalar::rational(b)), k - j));
        }
        Ok(out)
    }

    pub fn multiply(&self, o: &Self) -> Result<Self> {
        let mut r = Self::zero();
        for (&k, a) in &self.terms {
            for (&l, b) in &o.terms {
                for (s, j) in Self::d_times(k, b)? {
                    r.add_term(j + l, a.mul(&s));
                }
            }
        }
        Ok(r)
    }

    pub fn irregular_term(&self, names: &[String]) -> Option<String> {
        self.terms
            .iter()
            .find(|(k, r)| **k < 0 || !r.is_polynomial())
            .map(|(k, r)| Self::term(r.clone(), *k).render(names))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut pieces: Vec<((i64, i64), String)> = Vec::new();
        for (&k, r) in &self.terms {
            let dm = d_mono(k);
            if r.is_polynomial() {
                for (m, c) in r.numer().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mono = match (m, dm.is_empty()) {
                        (0, true) => "1".to_string(),
                        (0, false) => dm.clone(),
                        (_, true) => x_mono(m),
                        (_, false) => format!("{} {dm}", x_mono(m)),
                    };
                    pieces.push(((m as i64 + k, k), render_term(c, &mono, names)));
                }
            } else {
                let deg = r.numer().len() as i64 - 1 - r.denom().degree().unwrap_or(0) as i64;
                let s = if dm.is_empty() { r.render(names) } else { format!("{} {dm}", r.render(names)) };
                pieces.push(((deg + k, k), s));
            }
        }
        pieces.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out = String::new();
        for (_, t) in pieces {
            join_term(&mut out, &t);
        }
        out
    }
}

/// Image of a generator in `C[x, ∂]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylGen {
    /// A polynomial `p(x)`.
    Poly(UPoly),
    /// `∂ + g(x)`.
    DPlus(UPoly),
}

impl WeylGen {
    pub fn elem(&self) -> WeylElem {
        match self {
            WeylGen::Poly(p) => WeylElem::term(XRat::from_upoly(p), 0),
            WeylGen::DPlus(g) => {
                let mut e = WeylElem::d_pow(1);
                e.add_term(0, XRat::from_upoly(g));
                e
            }
        }
    }

    pub fn render(&self) -> String {
        let e = self.elem();
        e.render(&[])
    }
}

#[derive(Clone, Debug)]
pub struct WeylRealization {
    datum: RootDatum,
    name: String,
    gens: Vec<WeylGen>,
}

fn lin(a: i64) -> UPoly {
    UPoly::from_i64_coeffs(&[-a, 1])
}

impl WeylRealization {
    pub fn new(name: &str, datum: RootDatum, gens: Vec<WeylGen>) -> Result<Self> {
        if gens.len() != datum.n() {
            return Err(AlgebraError::Invalid("one image per generator is required".into()));
        }
        Ok(WeylRealization { datum, name: name.to_string(), gens })
    }

    /// Preset names accepted by [`WeylRealization::preset`].
    pub const PRESETS: [&'static str; 10] =
        ["A2", "D4(1)", "B3(1)", "A3(1)", "G2(1)", "A2(1)", "D5(2)", "C2(1)", "A2(2)", "A1(1)"];

    /// Standard assignments; the free constants are fixed to small distinct integers.
    pub fn preset(name: &str) -> Result<Self> {
        let x = UPoly::x();
        let d0 = || WeylGen::DPlus(UPoly::zero());
        let lbl = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let (labels, a, gens): (Vec<String>, Vec<Vec<i64>>, Vec<WeylGen>) = match name {
            "A2" => {
                let (l, a) = named_gcm("A2").unwrap();
                (l, a, vec![WeylGen::Poly(x.clone()), d0()])
            }
            "D4(1)" => (
                lbl(&["0", "1", "2", "3", "4"]),
                vec![
                    vec![2, 0, -1, 0, 0],
                    vec![0, 2, -1, 0, 0],
                    vec![-1, -1, 2, -1, -1],
                    vec![0, 0, -1, 2, 0],
                    vec![0, 0, -1, 0, 2],
                ],
                vec![WeylGen::Poly(lin(1)), WeylGen::Poly(lin(2)), d0(), WeylGen::Poly(lin(3)), WeylGen::Poly(lin(4))],
            ),
            "B3(1)" => (
                lbl(&["0", "1", "2", "3"]),
                vec![vec![2, -1, 0, 0], vec![-2, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
                vec![WeylGen::Poly(lin(2).pow(2)), d0(), WeylGen::Poly(x.clone()), WeylGen::Poly(lin(1))],
            ),
            "A3(1)" => (
                lbl(&["0", "1", "2", "3"]),
                vec![vec![2, 0, -1, -1], vec![0, 2, -1, -1], vec![-1, -1, 2, 0], vec![-1, -1, 0, 2]],
                vec![
                    WeylGen::DPlus(UPoly::from_i64(-2)),
                    d0(),
                    WeylGen::Poly(x.clone()),
                    WeylGen::Poly(lin(1)),
                ],
            ),
            "G2(1)" => (
                lbl(&["0", "1", "2"]),
                vec![vec![2, -1, 0], vec![-3, 2, -1], vec![0, -1, 2]],
                vec![WeylGen::Poly(lin(1).pow(3)), d0(), WeylGen::Poly(x.clone())],
            ),
            "A2(1)" => (
                lbl(&["0", "1", "2"]),
                vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
                vec![WeylGen::DPlus(x.clone()), d0(), WeylGen::Poly(x.clone())],
            ),
            "D5(2)" => (
                lbl(&["0", "1", "2"]),
                vec![vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]],
                vec![WeylGen::Poly(lin(1).pow(2)), d0(), WeylGen::Poly(x.pow(2))],
            ),
            "C2(1)" => (
                lbl(&["0", "1", "2"]),
                vec![vec![2, 0, -2], vec![0, 2, -2], vec![-1, -1, 2]],
                vec![WeylGen::DPlus(UPoly::from_i64(-1)), d0(), WeylGen::Poly(x.pow(2))],
            ),
            "A2(2)" => (
                lbl(&["0", "1"]),
                vec![vec![2, -1], vec![-4, 2]],
                vec![WeylGen::Poly(x.pow(4)), d0()],
            ),
            "A1(1)" => (
                lbl(&["0", "1"]),
                vec![vec![2, -2], vec![-2, 2]],
                vec![WeylGen::DPlus(x.pow(2)), d0()],
            ),
            _ => return Err(AlgebraError::Invalid(format!("unknown Weyl-algebra preset {name}"))),
        };
        let datum = RootDatum::from_gcm(labels, a, None).map_err(|e| AlgebraError::Invalid(e.to_string()))?;
        Self::new(name, datum, gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gens(&self) -> &[WeylGen] {
        &self.gens
    }

    /// `f_i^{γ} · a · f_i^{−γ}` for `f_i = p(x)`: `∂ ↦ ∂ − γ p'/p`.
    fn conj_poly(&self, p: &UPoly, gamma: &KmScalar, a: &WeylElem) -> Result<WeylElem> {
        let shift = XRat::from_upoly(&p.derivative()).mul(&XRat::inverse_of(p)?).scale(&(-gamma.clone()));
        let mut dimg = WeylElem::d_pow(1);
        dimg.add_term(0, shift);
        let mut powers: Vec<WeylElem> = vec![WeylElem::scalar(KmScalar::one())];
        let mut out = WeylElem::zero();
        for (&k, r) in &a.terms {
            if k < 0 {
                return Err(AlgebraError::UnsupportedLocalization(
                    "conjugating a negative power of d by a fractional power of x".into(),
                ));
            }
            while powers.len() <= k as usize {
                let next = powers.last().unwrap().multiply(&dimg)?;
                powers.push(next);
            }
            out = out.add(&WeylElem::term(r.clone(), 0).multiply(&powers[k as usize])?);
        }
        Ok(out)
    }

    /// `∂^{β+n} · a · ∂^{−(β+n)}` for polynomial coefficients.
    fn conj_d(&self, beta: &[i64], n: i64, a: &WeylElem) -> Result<WeylElem> {
        let mut out = WeylElem::zero();
        for (&k, r) in &a.terms {
            if !r.is_polynomial() {
                return Err(AlgebraError::UnsupportedLocalization(
                    "conjugating a rational coefficient by a fractional power of d".into(),
                ));
            }
            let mut der = r.clone();
            let mut j = 0u32;
            while !der.is_zero() {
                out.add_term(k - j as i64, der.scale(&KmScalar::binom(beta, n, j)));
                der = der.derivative();
                j += 1;
            }
        }
        Ok(out)
    }
}

impl Realization for WeylRealization {
    type Scalar = KmScalar;
    type Elem = WeylElem;

    fn datum(&self) -> &RootDatum {
        &self.datum
    }
    fn tag(&self) -> String {
        format!("weyl:{}", self.name)
    }
    fn zero(&self) -> WeylElem {
        WeylElem::zero()
    }
    fn scalar(&self, c: KmScalar) -> WeylElem {
        WeylElem::scalar(c)
    }
    fn generator_power(&self, i: usize, n: i64) -> Result<WeylElem> {
        match &self.gens[i] {
            WeylGen::Poly(p) => {
                if n >= 0 {
                    Ok(WeylElem::term(XRat::from_upoly(&p.pow(n as u32)), 0))
                } else {
                    Ok(WeylElem::term(XRat::inverse_of(&p.pow((-n) as u32))?, 0))
                }
            }
            WeylGen::DPlus(g) if g.is_zero() => Ok(WeylElem::d_pow(n)),
            WeylGen::DPlus(_) => {
                if n < 0 {
                    return Err(AlgebraError::UnsupportedLocalization(format!(
                        "inverse of f{} = {} is not representable",
                        self.datum.labels()[i],
                        self.gens[i].render()
                    )));
                }
                let g = self.gens[i].elem();
                let mut acc = WeylElem::scalar(KmScalar::one());
                for _ in 0..n {
                    acc = acc.multiply(&g)?;
                }
                Ok(acc)
            }
        }
    }
    fn add(&self, a: &WeylElem, b: &WeylElem) -> WeylElem {
        a.add(b)
    }
    fn scale(&self, c: &KmScalar, a: &WeylElem) -> WeylElem {
        a.scale(c)
    }
    fn multiply(&self, a: &WeylElem, b: &WeylElem) -> Result<WeylElem> {
        a.multiply(b)
    }
    fn map_scalars(&self, a: &WeylElem, f: &dyn Fn(&KmScalar) -> KmScalar) -> WeylElem {
        a.map_scalars(f)
    }
    fn is_zero(&self, a: &WeylElem) -> bool {
        a.is_zero()
    }
    fn conj_by_power(&self, i: usize, beta: &[i64], n: i64, a: &WeylElem) -> Result<WeylElem> {
        if n == 0 && beta.iter().all(|&x| x == 0) {
            return Ok(a.clone());
        }
        match &self.gens[i] {
            WeylGen::Poly(p) => self.conj_poly(p, &KmScalar::linear(beta, n), a),
            WeylGen::DPlus(g) if g.is_zero() => self.conj_d(beta, n, a),
            WeylGen::DPlus(_) => {
                if a.terms.len() <= 1 && a.terms.get(&0).is_none_or(|r| r.as_scalar().is_some()) {
                    return Ok(a.clone());
                }
                Err(AlgebraError::UnsupportedLocalization(format!(
                    "fractional powers of f{} = {} are not representable",
                    self.datum.labels()[i],
                    self.gens[i].render()
                )))
            }
        }
    }
    fn ad_once(&self, i: usize, a: &WeylElem) -> Result<WeylElem> {
        let f = self.generator(i);
        Ok(self.sub(&f.multiply(a)?, &a.multiply(&f)?))
    }
    fn irregular_term(&self, a: &WeylElem) -> Option<String> {
        a.irregular_term(self.datum.coroot_names())
    }
    fn render(&self, a: &WeylElem) -> String {
        a.render(self.datum.coroot_names())
    }
    fn as_scalar(&self, a: &WeylElem) -> Option<KmScalar> {
        match a.terms.len() {
            0 => Some(KmScalar::zero()),
            1 => a.terms.get(&0).and_then(|r| r.as_scalar()),
            _ => None,
        }
    }
    fn named_element(&self, name: &str) -> Option<WeylElem> {
        match name {
            "x" => Some(WeylElem::x_pow(1)),
            "d" => Some(WeylElem::d_pow(1)),
            _ => None,
        }
    }
    fn inverse(&self, a: &WeylElem) -> Option<WeylElem> {
        let mut it = a.terms.iter();
        let (&k, r) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        if k != 0 {
            return (r == &XRat::one()).then(|| WeylElem::d_pow(-k));
        }
        let coeffs: Option<Vec<BigRational>> = r.numer().iter().map(|c| c.as_value()).collect();
        let num = UPoly::from_coeffs(coeffs?);
        let inv = XRat::inverse_of(&num).ok()?.mul(&XRat::from_upoly(r.denom()));
        Some(WeylElem::term(inv, 0))
    }
}
