//! `U(n₋)` and `U_q(n₋)` as the free algebra on `{f_i}` modulo the (q-)Serre ideal, Verma
//! modules over them, the singular words `F_{w,λ}` and right division between them.
//!
//! The quotient is computed with a degree-truncated noncommutative Gröbner basis in the
//! deg-lex order (letters ordered by index). Normal words up to the degree cap form a
//! basis of each graded piece; [`dense_ideal_rank`] is the plain spanning-set oracle.

use crate::cartan::{RootDatum, WeightVec};
use crate::error::{Error, Result};
use crate::ncalg::{phi_lambda_elem, Realization};
use crate::poly::linalg::rank;
use crate::poly::{Field, RatFunc};
use crate::report::{Check, Status};
use crate::scalars::ParamScalar;
use crate::weylaction::ActionContext;
use num::BigRational;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// Letters left to right.
pub type Word = Vec<u8>;

/// Default bound on the total degree of a quotient.
pub const DEFAULT_MAXDEG: usize = 24;
/// Overrides [`DEFAULT_MAXDEG`] as the largest accepted degree cap.
pub const MAXDEG_ENV: &str = "QTAU_VERMA_MAXDEG";

pub fn maxdeg_limit() -> usize {
    std::env::var(MAXDEG_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAXDEG)
}

/// Linear combination of words in the `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedWord<F: Field> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for GradedWord<F> {
    fn default() -> Self {
        GradedWord { terms: BTreeMap::new() }
    }
}

impl<F: Field> GradedWord<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), F::one())
    }

    pub fn monomial(w: Word, c: F) -> Self {
        let mut g = Self::zero();
        g.add_term(w, c);
        g
    }

    pub fn word(w: &[usize]) -> Self {
        Self::monomial(w.iter().map(|&i| i as u8).collect(), F::one())
    }

    /// `f_{i1}^{n1} f_{i2}^{n2} ⋯`, factors left to right.
    pub fn from_powers(p: &[(usize, u32)]) -> Self {
        let w: Vec<usize> = p.iter().flat_map(|&(i, n)| std::iter::repeat_n(i, n as usize)).collect();
        Self::word(&w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &F, o: &Self) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), c.clone() * x);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(&F::one(), o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(&-F::one(), o);
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero();
        r.add_scaled(c, self);
        r
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                r.add_term(w, a.clone() * b);
            }
        }
        r
    }

    /// The anti-involution fixing each `f_i`: reverses every word.
    pub fn sigma(&self) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(w.iter().rev().copied().collect(), c.clone());
        }
        r
    }

    /// Multidegree in simple-root coordinates; `None` if zero or inhomogeneous.
    pub fn multidegree(&self, n: usize) -> Option<Vec<i64>> {
        let mut out: Option<Vec<i64>> = None;
        for w in self.terms.keys() {
            let d = word_degree(w, n);
            match &out {
                None => out = Some(d),
                Some(o) if *o != d => return None,
                _ => {}
            }
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Coefficientwise map; `None` if any image is undefined.
    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<GradedWord<G>> {
        let mut r = GradedWord::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c)?);
        }
        Some(r)
    }

    /// `c f1^2 f2 + …`, generators named `f<label>`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let ws = render_word(w, labels);
            let t = if w.is_empty() {
                c.render()
            } else if c.is_one() {
                ws
            } else if (-c.clone()).is_one() {
                format!("-{ws}")
            } else if c.is_atomic() {
                format!("{} {ws}", c.render())
            } else {
                format!("({}) {ws}", c.render())
            };
            if k == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

pub fn word_degree(w: &[u8], n: usize) -> Vec<i64> {
    let mut d = vec![0; n];
    for &x in w {
        d[x as usize] += 1;
    }
    d
}

/// `f1^2 f2`, or `1` for the empty word.
pub fn render_word(w: &[u8], labels: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut k = 0;
    while k < w.len() {
        let mut e = k;
        while e < w.len() && w[e] == w[k] {
            e += 1;
        }
        let name = format!("f{}", labels[w[k] as usize]);
        parts.push(if e - k == 1 { name } else { format!("{name}^{}", e - k) });
        k = e;
    }
    parts.join(" ")
}

/// Renders left-to-right power factors `f_i^n`.
pub fn render_powers(p: &[(usize, u32)], labels: &[String]) -> String {
    let w: Word = p.iter().flat_map(|&(i, n)| std::iter::repeat_n(i as u8, n as usize)).collect();
    render_word(&w, labels)
}

/// `Σ_k (−1)^k f_i^{(1−a_ij−k)} f_j f_i^{(k)}` with divided powers in `q_i = q^{d_i}`.
pub fn serre_relator<F: Field>(d: &RootDatum, i: usize, j: usize) -> GradedWord<F> {
    let m = (1 - d.a(i, j)) as u32;
    let di = d.d(i);
    let mut r = GradedWord::zero();
    for k in 0..=m {
        let mut w = vec![i as u8; (m - k) as usize];
        w.push(j as u8);
        w.extend(std::iter::repeat_n(i as u8, k as usize));
        let c = (F::qfactorial(m - k, di) * F::qfactorial(k, di)).inv();
        r.add_term(w, if k % 2 == 0 { c } else { -c });
    }
    r
}

fn all_relators<F: Field>(d: &RootDatum) -> Vec<GradedWord<F>> {
    let mut out = Vec::new();
    for i in 0..d.n() {
        for j in 0..d.n() {
            if i != j {
                out.push(serre_relator(d, i, j));
            }
        }
    }
    out
}

fn check_rank(d: &RootDatum) -> Result<()> {
    if d.n() > u8::MAX as usize {
        return Err(Error::Precondition("rank too large for the word encoding".into()));
    }
    Ok(())
}

/// Rewriting rules `lead → tail` with tails smaller in the deg-lex order.
#[derive(Clone, Debug)]
struct Rules<F: Field> {
    map: HashMap<Word, GradedWord<F>>,
    lens: Vec<usize>,
}

impl<F: Field> Rules<F> {
    fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        for s in 0..w.len() {
            for &l in &self.lens {
                if s + l <= w.len() && self.map.contains_key(&w[s..s + l]) {
                    return Some((s, l));
                }
            }
        }
        None
    }

    fn suffix(&self, w: &[u8]) -> Option<usize> {
        self.lens.iter().copied().find(|&l| l <= w.len() && self.map.contains_key(&w[w.len() - l..]))
    }

    /// Full reduction without memoization, used during completion.
    fn reduce(&self, p: &GradedWord<F>) -> GradedWord<F> {
        let mut p = p.clone();
        loop {
            let hit = p.terms.iter().rev().find_map(|(w, _)| self.find(w).map(|h| (w.clone(), h)));
            let Some((w, (s, l))) = hit else {
                return p;
            };
            let c = p.terms.remove(&w).expect("term present");
            for (t, tc) in &self.map[&w[s..s + l]].terms {
                let mut nw = w[..s].to_vec();
                nw.extend_from_slice(t);
                nw.extend_from_slice(&w[s + l..]);
                p.add_term(nw, c.clone() * tc);
            }
        }
    }

    fn insert(&mut self, lead: Word, tail: GradedWord<F>) {
        let l = lead.len();
        self.map.insert(lead, tail);
        if !self.lens.contains(&l) {
            self.lens.push(l);
            self.lens.sort_unstable();
        }
    }
}

/// The (q-)Serre quotient up to a total-degree cap.
#[derive(Debug)]
pub struct SerreQuotient<F: Field> {
    datum: RootDatum,
    maxdeg: usize,
    rules: Rules<F>,
    cache: Mutex<HashMap<Word, GradedWord<F>>>,
}

/// Builds the quotient of the free algebra on `{f_i}` by the Serre relators (Kac-Moody
/// case, `F` = rationals) or q-Serre relators (`F` = rational functions of `q`), exact in
/// every total degree `≤ maxdeg`.
pub fn graded_basis<F: Field>(datum: &RootDatum, maxdeg: usize) -> Result<SerreQuotient<F>> {
    SerreQuotient::new(datum, maxdeg)
}

impl<F: Field> SerreQuotient<F> {
    pub fn new(datum: &RootDatum, maxdeg: usize) -> Result<Self> {
        check_rank(datum)?;
        let limit = maxdeg_limit();
        if maxdeg > limit {
            return Err(Error::Cap(format!("degree cap {maxdeg} exceeds {limit} (set {MAXDEG_ENV})")));
        }
        let mut rules = Rules { map: HashMap::new(), lens: Vec::new() };
        let mut pending: BTreeMap<usize, Vec<GradedWord<F>>> = BTreeMap::new();
        for r in all_relators::<F>(datum) {
            let deg = r.max_len();
            if deg <= maxdeg {
                pending.entry(deg).or_default().push(r);
            }
        }
        // S-polynomials only raise the degree, so processing by degree keeps every piece
        // below the cap exact.
        while let Some((_, polys)) = pending.pop_first() {
            for p in polys {
                let r = rules.reduce(&p);
                let Some((lead, lc)) = r.terms.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) else {
                    continue;
                };
                let inv = lc.inv();
                let mut tail = GradedWord::zero();
                for (w, c) in &r.terms {
                    if *w != lead {
                        tail.add_term(w.clone(), -(c.clone() * &inv));
                    }
                }
                let mut others: Vec<(Word, GradedWord<F>)> =
                    rules.map.iter().map(|(w, t)| (w.clone(), t.clone())).collect();
                others.push((lead.clone(), tail.clone()));
                for (ow, ot) in &others {
                    for (l1, t1, l2, t2) in [(&lead, &tail, ow, ot), (ow, ot, &lead, &tail)] {
                        for s in overlaps(l1, l2, maxdeg, t1, t2) {
                            pending.entry(s.0).or_default().push(s.1);
                        }
                    }
                }
                rules.insert(lead, tail);
            }
        }
        Ok(SerreQuotient { datum: datum.clone(), maxdeg, rules, cache: Mutex::new(HashMap::new()) })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    /// Leading words of the rewriting rules, sorted.
    pub fn leading_words(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.rules.map.keys().cloned().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    fn guard(&self, len: usize) -> Result<()> {
        if len > self.maxdeg {
            return Err(Error::Cap(format!("degree {len} exceeds the quotient cap {}", self.maxdeg)));
        }
        Ok(())
    }

    fn nf_word(&self, w: &[u8]) -> GradedWord<F> {
        if w.len() <= 1 {
            return GradedWord::monomial(w.to_vec(), F::one());
        }
        if let Some(v) = self.cache.lock().expect("cache lock").get(w) {
            return v.clone();
        }
        let (x, p) = w.split_last().expect("nonempty");
        let mut out = GradedWord::zero();
        for (u, c) in &self.nf_word(p).terms {
            let mut ux = u.clone();
            ux.push(*x);
            match self.rules.suffix(&ux) {
                None => out.add_term(ux, c.clone()),
                Some(l) => {
                    let a = &ux[..ux.len() - l];
                    for (t, tc) in &self.rules.map[&ux[ux.len() - l..]].terms {
                        let mut at = a.to_vec();
                        at.extend_from_slice(t);
                        out.add_scaled(&(c.clone() * tc), &self.nf_word(&at));
                    }
                }
            }
        }
        self.cache.lock().expect("cache lock").insert(w.to_vec(), out.clone());
        out
    }

    /// Normal form: the projection onto the span of normal words.
    pub fn reduce(&self, p: &GradedWord<F>) -> Result<GradedWord<F>> {
        self.guard(p.max_len())?;
        let mut out = GradedWord::zero();
        for (w, c) in &p.terms {
            out.add_scaled(c, &self.nf_word(w));
        }
        Ok(out)
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.rules.find(w).is_none()
    }

    /// Normal words of the given multidegree, in increasing order.
    pub fn normal_words(&self, md: &[i64]) -> Result<Vec<Word>> {
        let total: i64 = md.iter().sum();
        if md.len() != self.datum.n() || md.iter().any(|&x| x < 0) {
            return Err(Error::Precondition(format!("bad multidegree {md:?}")));
        }
        self.guard(total as usize)?;
        let mut out = Vec::new();
        let mut left = md.to_vec();
        let mut w = Vec::new();
        self.extend_normal(&mut w, &mut left, &mut out);
        Ok(out)
    }

    fn extend_normal(&self, w: &mut Word, left: &mut [i64], out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(w.clone());
            return;
        }
        for x in 0..left.len() {
            if left[x] == 0 {
                continue;
            }
            w.push(x as u8);
            if self.rules.suffix(w).is_none() {
                left[x] -= 1;
                self.extend_normal(w, left, out);
                left[x] += 1;
            }
            w.pop();
        }
    }

    pub fn basis_dim(&self, md: &[i64]) -> Result<usize> {
        Ok(self.normal_words(md)?.len())
    }

    /// Dimension of the ideal in this degree: free dimension minus basis dimension.
    pub fn ideal_dim(&self, md: &[i64]) -> Result<usize> {
        Ok(free_dim(md) - self.basis_dim(md)?)
    }

    /// `e_i` on `F·v_λ`: `e_i f_j = f_j e_i + δ_ij H`, `H = ⟨α∨_i,·⟩` or `[⟨α∨_i,·⟩]_{q_i}`.
    pub fn e_action(&self, i: usize, v: &VermaVector<F>) -> Result<VermaVector<F>> {
        let d = &self.datum;
        if i >= d.n() {
            return Err(Error::Precondition(format!("no generator {i}")));
        }
        let base = d.pair(d.coroot(i), &v.lambda);
        let mut out = GradedWord::zero();
        for (w, c) in &v.vec.terms {
            // ⟨α∨_i, weight of the suffix after position p⟩
            let mut h = base;
            for p in (0..w.len()).rev() {
                if w[p] as usize == i {
                    let mut nw = w[..p].to_vec();
                    nw.extend_from_slice(&w[p + 1..]);
                    out.add_term(nw, c.clone() * &F::qint(h, d.d(i)));
                }
                h -= d.a(i, w[p] as usize);
            }
        }
        Ok(VermaVector { lambda: v.lambda.clone(), vec: self.reduce(&out)? })
    }

    /// Whether every `e_i` kills the vector.
    pub fn is_singular(&self, v: &VermaVector<F>) -> Result<bool> {
        for i in 0..self.datum.n() {
            if !self.e_action(i, v)?.vec.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Solves `big ≡ P·small` with `P` of degree `deg(big) − deg(small)`.
    pub fn divide_right(&self, big: &GradedWord<F>, small: &GradedWord<F>) -> Result<Division<F>> {
        let n = self.datum.n();
        let (Some(db), Some(ds)) = (big.multidegree(n), small.multidegree(n)) else {
            return Err(Error::Precondition("division needs nonzero homogeneous operands".into()));
        };
        let dd: Vec<i64> = db.iter().zip(&ds).map(|(a, b)| a - b).collect();
        if dd.iter().any(|&x| x < 0) {
            return Err(Error::Precondition(format!("degree difference {dd:?} is not in Q+")));
        }
        let nb = self.reduce(big)?;
        let ns = self.reduce(small)?;
        if ns.is_zero() {
            return Err(Error::Precondition("divisor vanishes in the quotient".into()));
        }
        let basis = self.normal_words(&dd)?;
        let target = self.normal_words(&db)?;
        let index: HashMap<&Word, usize> = target.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let column = |p: &GradedWord<F>| {
            let mut c = vec![F::zero(); target.len()];
            for (w, x) in &p.terms {
                c[index[w]] = x.clone();
            }
            c
        };
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            cols.push(column(&self.reduce(&GradedWord::monomial(b.clone(), F::one()).mul(&ns))?));
        }
        let rhs = column(&nb);
        let sol = F::solve(&cols, &rhs);
        let nullity = sol.nullity;
        let quotient = sol.x.map(|x| {
            let mut p = GradedWord::zero();
            for (b, c) in basis.iter().zip(x) {
                p.add_term(b.clone(), c);
            }
            p
        });
        Ok(Division { quotient, nullity, basis_dim: basis.len(), degree: dd })
    }

    /// `F_{w,λ+μ}·v_{λ+μ}` and `F_{w,λ}·v_λ` are singular, and `F_{w,λ+μ} ∈ U₋·F_{w,λ}`.
    pub fn singular_divisibility(&self, w: &[usize], lambda: &[i64], mu: &[i64]) -> Result<(Vec<Check>, Division<F>)> {
        let d = &self.datum;
        let lm: WeightVec = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
        let small = F_w_lambda(d, w, lambda)?;
        let big = F_w_lambda(d, w, &lm)?;
        let labels = d.labels();
        let mut out = Vec::new();
        for (name, f, wt) in [("F(w,lambda) v_lambda", &small, lambda), ("F(w,lambda+mu) v_lambda+mu", &big, &lm[..])] {
            let v = VermaVector { lambda: wt.to_vec(), vec: GradedWord::from_powers(f) };
            let mut bad = None;
            for i in 0..d.n() {
                let e = self.e_action(i, &v)?;
                if !e.vec.is_zero() {
                    bad = Some(format!("e{} gives {}", labels[i], e.vec.render(labels)));
                    break;
                }
            }
            let status = match bad {
                None => Status::Pass,
                Some(witness) => Status::Fail { witness },
            };
            out.push(Check::new(format!("{name} is singular"), status).with_detail(render_powers(f, labels)));
        }
        let div = self.divide_right(&GradedWord::from_powers(&big), &GradedWord::from_powers(&small))?;
        let status = match &div.quotient {
            Some(_) => Status::Pass,
            None => Status::Fail { witness: "no right quotient in this degree".into() },
        };
        let detail = div.quotient.as_ref().map(|p| p.render(labels)).unwrap_or_default();
        out.push(Check::new("F(w,lambda+mu) in U- F(w,lambda)", status).with_detail(detail));
        Ok((out, div))
    }
}

/// Number of words with the given multidegree.
pub fn free_dim(md: &[i64]) -> usize {
    let mut acc: u128 = 1;
    let mut total: u128 = 0;
    for &k in md {
        for j in 1..=k as u128 {
            total += 1;
            acc = acc * total / j;
        }
    }
    acc as usize
}

/// All `(|S|+|C|, S-polynomial)` from overlaps `L1 = A·B`, `L2 = B·C` with `B` nonempty.
fn overlaps<F: Field>(
    l1: &[u8],
    l2: &[u8],
    maxdeg: usize,
    t1: &GradedWord<F>,
    t2: &GradedWord<F>,
) -> Vec<(usize, GradedWord<F>)> {
    let mut out = Vec::new();
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] != l2[..k] {
            continue;
        }
        let deg = l1.len() + l2.len() - k;
        if deg > maxdeg {
            continue;
        }
        let a = GradedWord::monomial(l1[..l1.len() - k].to_vec(), F::one());
        let c = GradedWord::monomial(l2[k..].to_vec(), F::one());
        // (L1 − t1)·C − A·(L2 − t2)
        out.push((deg, a.mul(t2).sub(&t1.mul(&c))));
    }
    out
}

/// Rank of the span of all `u·S·v` in one multidegree, computed densely.
pub fn dense_ideal_rank<F: Field>(datum: &RootDatum, md: &[i64]) -> Result<usize> {
    check_rank(datum)?;
    let n = datum.n();
    let words = all_words(md);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut rows = Vec::new();
    for s in all_relators::<F>(datum) {
        let ds = s.multidegree(n).expect("homogeneous relator");
        let rest: Vec<i64> = md.iter().zip(&ds).map(|(a, b)| a - b).collect();
        if rest.iter().any(|&x| x < 0) {
            continue;
        }
        for uv in all_words(&rest) {
            for cut in 0..=uv.len() {
                let u = GradedWord::monomial(uv[..cut].to_vec(), F::one());
                let v = GradedWord::monomial(uv[cut..].to_vec(), F::one());
                let p = u.mul(&s).mul(&v);
                let mut row = vec![F::zero(); words.len()];
                for (w, c) in p.terms() {
                    row[index[w]] = c.clone();
                }
                rows.push(row);
            }
        }
    }
    Ok(rank(rows, words.len()))
}

/// Every word of the given multidegree.
pub fn all_words(md: &[i64]) -> Vec<Word> {
    fn go(w: &mut Word, left: &mut [i64], out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(w.clone());
            return;
        }
        for x in 0..left.len() {
            if left[x] > 0 {
                left[x] -= 1;
                w.push(x as u8);
                go(w, left, out);
                w.pop();
                left[x] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut md.to_vec(), &mut out);
    out
}

/// `F·v_λ` in the Verma module `M(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaVector<F: Field> {
    pub lambda: WeightVec,
    pub vec: GradedWord<F>,
}

impl<F: Field> VermaVector<F> {
    pub fn highest(lambda: &[i64]) -> Self {
        VermaVector { lambda: lambda.to_vec(), vec: GradedWord::one() }
    }

    /// `λ − deg F`, if homogeneous.
    pub fn weight(&self, d: &RootDatum) -> Option<WeightVec> {
        let md = self.vec.multidegree(d.n())?;
        let mut w = self.lambda.clone();
        for (i, &k) in md.iter().enumerate() {
            for (x, r) in w.iter_mut().zip(d.root(i)) {
                *x -= k * r;
            }
        }
        Some(w)
    }
}

/// Outcome of [`SerreQuotient::divide_right`]; `quotient` is the solution with all free
/// coordinates zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division<F: Field> {
    pub quotient: Option<GradedWord<F>>,
    /// Dimension of the solution space of the homogeneous system.
    pub nullity: usize,
    pub basis_dim: usize,
    pub degree: Vec<i64>,
}

/// `F_{w,λ} = f_{j_m}^{N_m} ⋯ f_{j_1}^{N_1}` with `N_k = ⟨α∨_{j_k}, s_{j_{k−1}}⋯s_{j_1}∘λ⟩ + 1`,
/// for `w` in application order `[j_1, …, j_m]`; factors returned left to right.
#[allow(non_snake_case)]
pub fn F_w_lambda(d: &RootDatum, w: &[usize], lambda: &[i64]) -> Result<Vec<(usize, u32)>> {
    d.check_word(w)?;
    if lambda.len() != d.lattice_rank() {
        return Err(Error::Precondition("weight has the wrong rank".into()));
    }
    if !d.is_reduced(w) {
        return Err(Error::Precondition(format!("word {} is not reduced", d.render_word(w))));
    }
    if !d.is_dominant(lambda) {
        return Err(Error::Precondition("weight is not dominant".into()));
    }
    let mut out = Vec::with_capacity(w.len());
    for (k, &j) in w.iter().enumerate() {
        let n = d.pair(d.coroot(j), &d.shifted_act(&w[..k], lambda)) + 1;
        if n < 0 {
            return Err(Error::Precondition(format!("negative exponent at position {}", k + 1)));
        }
        out.push((j, n as u32));
    }
    out.reverse();
    Ok(out)
}

/// `σ(φ_{λ+ρ}(Φ_n))` as left-to-right factors: `Φ_n = f_{i_1}^{β_1} ⋯ f_{i_n}^{β_n}`.
pub fn sigma_phi_factors(d: &RootDatum, w: &[usize], lambda: &[i64]) -> Vec<(usize, i64)> {
    let mut lr = lambda.to_vec();
    for (x, r) in lr.iter_mut().zip(d.rho()) {
        *x += r;
    }
    let mut out: Vec<(usize, i64)> = w.iter().zip(d.word_coroots(w)).map(|(&i, b)| (i, d.pair(&b, &lr))).collect();
    out.reverse();
    out
}

fn image<R: Realization>(r: &R, p: &GradedWord<<R::Scalar as ParamScalar>::Value>) -> Result<R::Elem> {
    let mut acc = r.zero();
    for (w, c) in p.terms() {
        let mut t = r.scalar(R::Scalar::from_value(c));
        let mut k = 0;
        while k < w.len() {
            let mut e = k;
            while e < w.len() && w[e] == w[k] {
                e += 1;
            }
            t = r.multiply(&t, &r.generator_power(w[k] as usize, (e - k) as i64)?)?;
            k = e;
        }
        acc = r.add(&acc, &t);
    }
    Ok(acc)
}

fn power_image<R: Realization>(r: &R, p: &[(usize, i64)]) -> Result<R::Elem> {
    let mut acc = r.one();
    for &(i, n) in p {
        acc = r.multiply(&acc, &r.generator_power(i, n)?)?;
    }
    Ok(acc)
}

fn unsupported_or<T>(res: Result<T>, name: &str, out: &mut Vec<Check>) -> Result<Option<T>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_unsupported() => {
            out.push(Check::new(name, Status::Unsupported { reason: e.to_string() }));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Relates the τ-function chain `E_n = Φ_n^{−1}Ψ_n` to the singular words:
/// `σ(φ_{λ+ρ}(Φ_n)) = F_{w,λ}`, `σ(φ_{λ+ρ}(Ψ_n)) = F_{w,λ+μ}`, and in the realization
/// `φ_{λ+ρ}(Φ_n)·φ_{λ+ρ}(E_n) = φ_{λ+ρ}(Ψ_n)` and `φ_{λ+ρ}(E_n) = σ(P)` for the right
/// quotient `F_{w,λ+μ} = P·F_{w,λ}`.
pub fn sigma_phi_crosscheck<R: Realization>(
    ctx: &ActionContext<R>,
    quotient: &SerreQuotient<<R::Scalar as ParamScalar>::Value>,
    w: &[usize],
    lambda: &[i64],
    mu: &[i64],
) -> Result<Vec<Check>> {
    let d = ctx.datum();
    if d.cartan() != quotient.datum().cartan() {
        return Err(Error::Precondition("realization and quotient use different matrices".into()));
    }
    let r = ctx.realization();
    let labels = d.labels();
    let lm: WeightVec = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
    let small = F_w_lambda(d, w, lambda)?;
    let big = F_w_lambda(d, w, &lm)?;
    let phi = sigma_phi_factors(d, w, lambda);
    let psi = sigma_phi_factors(d, w, &lm);
    let as_i64 = |f: &[(usize, u32)]| f.iter().map(|&(i, n)| (i, n as i64)).collect::<Vec<_>>();
    let mut out = Vec::new();
    let render_i = |p: &[(usize, i64)]| {
        p.iter().map(|&(i, n)| format!("f{}^{n}", labels[i])).collect::<Vec<_>>().join(" ")
    };
    for (name, lhs, rhs) in [("sigma phi(Phi_n) = F(w,lambda)", &phi, &small), ("sigma phi(Psi_n) = F(w,lambda+mu)", &psi, &big)] {
        let rhs = as_i64(rhs);
        out.push(Check::new(
            name,
            Status::from_eq(*lhs == rhs, || format!("{} vs {}", render_i(lhs), render_i(&rhs))),
        ));
    }

    let mut lr = lambda.to_vec();
    for (x, y) in lr.iter_mut().zip(d.rho()) {
        *x += y;
    }
    let Some(chain) = unsupported_or(ctx.phi_psi_chain(w, mu), "phi_lambda+rho(E_n) in realization", &mut out)? else {
        return Ok(out);
    };
    let e = chain.last().cloned().unwrap_or_else(|| r.one());
    let e = phi_lambda_elem(r, &e, &lr);
    let phi_rev: Vec<(usize, i64)> = phi.iter().rev().copied().collect();
    let psi_rev: Vec<(usize, i64)> = psi.iter().rev().copied().collect();
    let (a, b) = (power_image(r, &phi_rev)?, power_image(r, &psi_rev)?);
    let lhs = r.multiply(&a, &e)?;
    out.push(Check::new(
        "phi(Phi_n) phi(E_n) = phi(Psi_n) in realization",
        Status::from_eq(lhs == b, || format!("{} vs {}", r.render(&lhs), r.render(&b))),
    ));

    let div = quotient.divide_right(&GradedWord::from_powers(&big), &GradedWord::from_powers(&small))?;
    let status = match &div.quotient {
        None => Status::Fail { witness: "no right quotient".into() },
        Some(p) => {
            let sp = image(r, &p.sigma())?;
            Status::from_eq(sp == e, || format!("{} vs {}", r.render(&sp), r.render(&e)))
        }
    };
    out.push(Check::new("phi(E_n) = sigma(P) in realization", status).with_detail(r.render(&e)));
    Ok(out)
}

/// Coefficientwise `q → 1`; `None` if some coefficient has a pole there.
pub fn limit_q1(p: &GradedWord<RatFunc>) -> Option<GradedWord<BigRational>> {
    p.try_map(|c| c.eval_at_one())
}

/// The q-case right quotient specializes at `q = 1` to the Kac-Moody one, and both
/// solution spaces have the same dimension.
pub fn q1_consistency(
    qq: &SerreQuotient<RatFunc>,
    qk: &SerreQuotient<BigRational>,
    w: &[usize],
    lambda: &[i64],
    mu: &[i64],
) -> Result<Check> {
    let d = qk.datum();
    let lm: WeightVec = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
    let small = F_w_lambda(d, w, lambda)?;
    let big = F_w_lambda(d, w, &lm)?;
    let dq = qq.divide_right(&GradedWord::from_powers(&big), &GradedWord::from_powers(&small))?;
    let dk = qk.divide_right(&GradedWord::from_powers(&big), &GradedWord::from_powers(&small))?;
    let labels = d.labels();
    let status = match (&dq.quotient, &dk.quotient) {
        (Some(pq), Some(pk)) => match limit_q1(pq) {
            None => Status::Fail { witness: "q-quotient has a pole at q = 1".into() },
            Some(l) => {
                let l = qk.reduce(&l)?;
                Status::from_eq(l == *pk && dq.nullity == dk.nullity, || {
                    format!("{} vs {}", l.render(labels), pk.render(labels))
                })
            }
        },
        (None, None) => Status::from_eq(dq.nullity == dk.nullity, || "solution spaces differ".into()),
        _ => Status::Fail { witness: "quotient exists in only one case".into() },
    };
    Ok(Check::new("q -> 1 limit of the right quotient", status))
}

#[cfg(test)]
mod tests;
