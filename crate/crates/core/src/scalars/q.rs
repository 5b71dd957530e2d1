use super::{Case, ParamScalar, SymbolMap};
use crate::poly::RatFunc;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

fn trim(mut g: Vec<i64>) -> Vec<i64> {
    while g.last() == Some(&0) {
        g.pop();
    }
    g
}

/// Finite sum `Σ_γ c_γ(q) q^γ` over `γ ∈ Q∨` (coordinates in the coroot basis).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QScalar {
    t: BTreeMap<Vec<i64>, RatFunc>,
}

impl QScalar {
    pub fn from_ratfunc(c: RatFunc) -> Self {
        Self::term(c, Vec::new())
    }

    /// `c · q^γ`.
    pub fn term(c: RatFunc, gamma: Vec<i64>) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(trim(gamma), c);
        }
        QScalar { t }
    }

    /// `q^{γ} q^{n}`.
    pub fn qpow(gamma: &[i64], n: i64) -> Self {
        Self::term(RatFunc::q_pow(n), gamma.to_vec())
    }

    /// `[β + m]_{q^d} = (q^{d m} q^{d β} − q^{−d m} q^{−d β}) / (q^d − q^{−d})`.
    pub fn qnum(beta: &[i64], m: i64, d: i64) -> Self {
        let den = (&RatFunc::q_pow(d) - &RatFunc::q_pow(-d)).inv();
        let pos: Vec<i64> = beta.iter().map(|x| d * x).collect();
        let neg: Vec<i64> = beta.iter().map(|x| -d * x).collect();
        let mut r = Self::term(&RatFunc::q_pow(d * m) * &den, pos);
        r.add_term(neg, -(&RatFunc::q_pow(-d * m) * &den));
        r
    }

    /// `[β+n choose k]_{q^d}`.
    pub fn qbinom(beta: &[i64], n: i64, k: u32, d: i64) -> Self {
        let mut acc = Self::one();
        for j in 0..k as i64 {
            acc = &acc * &Self::qnum(beta, n - j, d);
        }
        acc.scale(&RatFunc::qfactorial(k, d).inv())
    }

    pub fn add_term(&mut self, gamma: Vec<i64>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.t.entry(trim(gamma)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QScalar { t: self.t.iter().map(|(g, a)| (g.clone(), a * c)).collect() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &RatFunc)> {
        self.t.iter()
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// Exact `q → 1` limit of a parameter-free scalar.
    pub fn limit_at_one(&self) -> Option<num::BigRational> {
        self.as_value().and_then(|r| r.eval_at_one())
    }

    fn render_gamma(gamma: &[i64], names: &[String]) -> String {
        let mut out = String::new();
        for (b, &g) in gamma.iter().enumerate() {
            if g == 0 {
                continue;
            }
            let name = names.get(b).cloned().unwrap_or_else(|| format!("x{b}"));
            let mag = g.abs();
            if out.is_empty() {
                if g < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if g < 0 { " - " } else { " + " });
            }
            if mag == 1 {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        out
    }
}

impl ParamScalar for QScalar {
    type Value = RatFunc;
    const CASE: Case = Case::Q;

    fn zero() -> Self {
        QScalar { t: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::from_ratfunc(RatFunc::one())
    }
    fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    fn is_one(&self) -> bool {
        self.t.len() == 1 && self.t.get(&Vec::new()).is_some_and(|c| c.is_one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_ratfunc(RatFunc::from_i64(n))
    }
    fn from_value(v: &RatFunc) -> Self {
        Self::from_ratfunc(v.clone())
    }
    fn basis_symbol(b: usize) -> Self {
        Self::qpow(&crate::cartan::unit(b + 1, b), 0)
    }
    fn as_value(&self) -> Option<RatFunc> {
        match self.t.len() {
            0 => Some(RatFunc::zero()),
            1 => self.t.get(&Vec::new()).cloned(),
            _ => None,
        }
    }
    fn substitute(&self, m: &SymbolMap) -> Self {
        if m.is_identity() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (g, c) in &self.t {
            let (img, k) = m.apply_linear(g);
            let c = if k == 0 { c.clone() } else { c * &RatFunc::q_pow(k) };
            out.add_term(img, c);
        }
        out
    }
    fn conj_coefficient(d: i64, a: i64, k: u32, beta: &[i64], n: i64) -> Self {
        let e = d * (k as i64 + a);
        let g: Vec<i64> = beta.iter().map(|x| e * x).collect();
        let lead = Self::qpow(&g, e * (n - k as i64));
        &lead * &Self::qbinom(beta, n, k, d)
    }
    fn ad_twist(d: i64, p: i64) -> Self {
        Self::from_ratfunc(RatFunc::q_pow(d * p))
    }
    fn symbol_power(gamma: &[i64]) -> Option<Self> {
        Some(Self::qpow(gamma, 0))
    }
    fn render(&self, names: &[String]) -> String {
        if self.t.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (g, c) in self.t.iter().rev() {
            let s = if g.is_empty() {
                c.render()
            } else {
                let qg = format!("q^{{{}}}", Self::render_gamma(g, names));
                let (sign, c) = if c.leading_negative() { ("-", -c) } else { ("", c.clone()) };
                if c.is_one() {
                    format!("{sign}{qg}")
                } else if c.is_product_safe() {
                    format!("{sign}{}*{qg}", c.render())
                } else {
                    format!("{sign}({})*{qg}", c.render())
                }
            };
            parts.push(s);
        }
        let mut out = String::new();
        for s in parts {
            if out.is_empty() {
                out = s;
            } else if let Some(rest) = s.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&s);
            }
        }
        out
    }
    fn is_atomic(&self) -> bool {
        match self.t.len() {
            0 => true,
            1 => {
                let (g, c) = self.t.iter().next().unwrap();
                c.is_product_safe() || !g.is_empty()
            }
            _ => false,
        }
    }
}

impl<'a> Add<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn add(self, o: &QScalar) -> QScalar {
        let (big, small) = if self.t.len() >= o.t.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (g, c) in &small.t {
            r.add_term(g.clone(), c.clone());
        }
        r
    }
}
impl<'a> Sub<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn sub(self, o: &QScalar) -> QScalar {
        let mut r = self.clone();
        for (g, c) in &o.t {
            r.add_term(g.clone(), -c);
        }
        r
    }
}
impl<'a> Mul<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn mul(self, o: &QScalar) -> QScalar {
        let mut r = QScalar::zero();
        for (g1, c1) in &self.t {
            for (g2, c2) in &o.t {
                let n = g1.len().max(g2.len());
                let g: Vec<i64> =
                    (0..n).map(|k| g1.get(k).copied().unwrap_or(0) + g2.get(k).copied().unwrap_or(0)).collect();
                r.add_term(g, c1 * c2);
            }
        }
        r
    }
}
impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { t: self.t.into_iter().map(|(g, c)| (g, -c)).collect() }
    }
}
crate::poly::upoly::owned_ops!(QScalar);
