//! Elements `Σ c_e f_1^{e_1} ⋯ f_n^{e_n}` with ordered monomials and integer exponents.

use super::{AlgebraError, Result};
use crate::cartan::RootDatum;
use crate::scalars::ParamScalar;
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentElem<S> {
    pub(crate) terms: BTreeMap<Vec<i64>, S>,
}

impl<S: ParamScalar> LaurentElem<S> {
    pub fn zero() -> Self {
        LaurentElem { terms: BTreeMap::new() }
    }

    pub fn monomial(c: S, e: Vec<i64>) -> Self {
        let mut r = Self::zero();
        r.add_term(e, c);
        r
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: S) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[i64]) -> Option<&S> {
        self.terms.get(e)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (e, c) in &small.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut r = Self::zero();
        for (e, a) in &self.terms {
            r.add_term(e.clone(), c.clone() * a);
        }
        r
    }

    pub fn map_scalars(&self, f: &dyn Fn(&S) -> S) -> Self {
        let mut r = Self::zero();
        for (e, a) in &self.terms {
            r.add_term(e.clone(), f(a));
        }
        r
    }

    pub fn irregular_term(&self, d: &RootDatum) -> Option<String> {
        self.terms
            .keys()
            .find(|e| e.iter().any(|&x| x < 0))
            .map(|e| render_monomial(d, e))
    }

    pub fn as_scalar(&self, n: usize) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.iter().all(|&x| x == 0) && e.len() == n).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Product of two elements given the product of two monomials.
    pub fn multiply_with(
        &self,
        o: &Self,
        mono: &dyn Fn(&[i64], &[i64]) -> Result<Vec<(S, Vec<i64>)>>,
    ) -> Result<Self> {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let c = c1.clone() * c2;
                for (k, e) in mono(e1, e2)? {
                    r.add_term(e, c.clone() * &k);
                }
            }
        }
        Ok(r)
    }

    pub fn render(&self, d: &RootDatum) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = d.coroot_names();
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for e in keys {
            let c = &self.terms[e];
            let mono = render_monomial(d, e);
            let t = render_term(c, &mono, names);
            join_term(&mut out, &t);
        }
        out
    }
}

pub(crate) fn render_term<S: ParamScalar>(c: &S, mono: &str, names: &[String]) -> String {
    if mono == "1" {
        return c.render(names);
    }
    if c.is_one() {
        return mono.to_string();
    }
    if (-c.clone()).is_one() {
        return format!("-{mono}");
    }
    if c.is_atomic() {
        format!("{} {mono}", c.render(names))
    } else {
        format!("({}) {mono}", c.render(names))
    }
}

pub(crate) fn join_term(out: &mut String, t: &str) {
    if out.is_empty() {
        out.push_str(t);
    } else if let Some(rest) = t.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(rest);
    } else {
        out.push_str(" + ");
        out.push_str(t);
    }
}

pub fn render_monomial(d: &RootDatum, e: &[i64]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(k, &x)| {
            let g = format!("f{}", d.labels()[k]);
            if x == 1 {
                g
            } else {
                format!("{g}^{x}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Homomorphic extension of generator images to a Laurent element.
/// `images[l]` is the image of `f_l`; `f_l` with `images[l] = None` is fixed.
pub(crate) fn substitute_generators<S: ParamScalar>(
    a: &LaurentElem<S>,
    n: usize,
    images: &[Option<LaurentElem<S>>],
    multiply: &dyn Fn(&LaurentElem<S>, &LaurentElem<S>) -> Result<LaurentElem<S>>,
    gen_power: &dyn Fn(usize, i64) -> LaurentElem<S>,
) -> Result<LaurentElem<S>> {
    let mut cache: HashMap<(usize, i64), LaurentElem<S>> = HashMap::new();
    let mut out = LaurentElem::zero();
    for (e, c) in &a.terms {
        let mut acc = LaurentElem::monomial(c.clone(), vec![0; n]);
        for (l, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let factor = match &images[l] {
                None => gen_power(l, x),
                Some(img) => {
                    if x < 0 {
                        return Err(AlgebraError::UnsupportedLocalization(format!(
                            "conjugate of a negative power of generator {l} is not a finite sum"
                        )));
                    }
                    if let Some(p) = cache.get(&(l, x)) {
                        p.clone()
                    } else {
                        let mut p = img.clone();
                        for _ in 1..x {
                            p = multiply(&p, img)?;
                        }
                        cache.insert((l, x), p.clone());
                        p
                    }
                }
            };
            acc = multiply(&acc, &factor)?;
        }
        out = out.add(&acc);
    }
    Ok(out)
}
