//! Generalized Cartan matrices, coroot and weight lattices, and Weyl group words.
//!
//! Words are stored in application order: `[i1, i2, ..., in]` denotes
//! `w = s_in ... s_i2 s_i1`, so `s_i1` acts first.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("not a generalized Cartan matrix: {0}")]
    NotAGcm(String),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("symmetrizer hint rejected: {0}")]
    BadSymmetrizer(String),
    #[error("lattice model violation: {0}")]
    ModelViolation(String),
    #[error("unknown index {0}")]
    UnknownIndex(String),
    #[error("dominant decomposition undecided after {0} reflections")]
    CapExhausted(usize),
    #[error("word is not reduced")]
    NotReduced,
    #[error("weight is not dominant")]
    NotDominant,
    #[error("{0}")]
    Input(String),
}

pub type WeylWord = Vec<usize>;

/// Integer vector over the coroot basis.
pub type CorootVec = Vec<i64>;
/// Integer vector over the weight basis (dual to the coroot basis).
pub type WeightVec = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    labels: Vec<String>,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    coroot_names: Vec<String>,
    weight_names: Vec<String>,
    coroots: Vec<CorootVec>,
    roots: Vec<WeightVec>,
    fundamentals: Vec<WeightVec>,
}

/// GCM file contents.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GcmFile {
    pub labels: Vec<String>,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizer: Option<Vec<i64>>,
}

fn gcd(a: i64, b: i64) -> i64 {
    num::integer::gcd(a, b)
}

fn lcm(a: i64, b: i64) -> i64 {
    num::integer::lcm(a, b)
}

/// Check the GCM axioms.
pub fn check_gcm(a: &[Vec<i64>]) -> Result<(), CartanError> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(CartanError::NotAGcm(format!("row {i} has length {}", row.len())));
        }
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return Err(CartanError::NotAGcm(format!("a[{i}][{i}] = {} != 2", a[i][i])));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return Err(CartanError::NotAGcm(format!("a[{i}][{j}] = {} > 0", a[i][j])));
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return Err(CartanError::NotAGcm(format!(
                    "a[{i}][{j}] = {} but a[{j}][{i}] = {}",
                    a[i][j], a[j][i]
                )));
            }
        }
    }
    Ok(())
}

/// Componentwise-minimal positive symmetrizer (gcd one on each indecomposable block).
pub fn minimal_symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>, CartanError> {
    let n = a.len();
    // rational d as (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut block = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (pi, qi) = d[i].unwrap();
            for j in 0..n {
                if j == i || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (mut pj, mut qj) = (pi * a[i][j], qi * a[j][i]);
                if qj < 0 {
                    pj = -pj;
                    qj = -qj;
                }
                let g = gcd(pj, qj);
                let (pj, qj) = (pj / g, qj / g);
                match d[j] {
                    None => {
                        d[j] = Some((pj, qj));
                        block.push(j);
                        stack.push(j);
                    }
                    Some((p, q)) => {
                        if p * qj != pj * q {
                            return Err(CartanError::NotSymmetrizable);
                        }
                    }
                }
            }
        }
        let l = block.iter().fold(1, |acc, &k| lcm(acc, d[k].unwrap().1));
        let ints: Vec<i64> = block.iter().map(|&k| d[k].unwrap().0 * (l / d[k].unwrap().1)).collect();
        let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
        for (&k, &v) in block.iter().zip(&ints) {
            d[k] = Some((v / g, 1));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().0).collect())
}

fn integer_rank(rows: &[Vec<i64>]) -> usize {
    use num::{BigRational, Zero};
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| crate::poly::upoly::rat(x)).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..ncols {
                    let v = &m[rank][k] * &f;
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl RootDatum {
    /// Validate a GCM and build the default lattice model.
    pub fn from_gcm(
        labels: Vec<String>,
        a: Vec<Vec<i64>>,
        d_hint: Option<Vec<i64>>,
    ) -> Result<Self, CartanError> {
        check_gcm(&a)?;
        let n = a.len();
        if labels.len() != n {
            return Err(CartanError::NotAGcm(format!("{} labels for rank {n}", labels.len())));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(CartanError::Input(format!("duplicate label {l}")));
            }
        }
        let minimal = minimal_symmetrizer(&a)?;
        let d = match d_hint {
            None => minimal,
            Some(h) => {
                if h.len() != n || h.iter().any(|&x| x <= 0) {
                    return Err(CartanError::BadSymmetrizer("need one positive entry per index".into()));
                }
                for i in 0..n {
                    for j in 0..n {
                        if h[i] * a[i][j] != h[j] * a[j][i] {
                            return Err(CartanError::BadSymmetrizer(format!(
                                "d_{i} a_{i}{j} != d_{j} a_{j}{i}"
                            )));
                        }
                    }
                }
                h
            }
        };
        let coroots = (0..n).map(|i| unit(n, i)).collect();
        let fundamentals = (0..n).map(|i| unit(n, i)).collect();
        let roots: Vec<WeightVec> = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
        for i in 0..n {
            for j in 0..i {
                if roots[i] == roots[j] {
                    return Err(CartanError::ModelViolation(format!(
                        "simple roots {} and {} coincide",
                        labels[j], labels[i]
                    )));
                }
            }
        }
        let coroot_names = labels.iter().map(|l| format!("b{l}")).collect();
        let weight_names = labels.iter().map(|l| format!("L{l}")).collect();
        Ok(RootDatum { labels, a, d, coroot_names, weight_names, coroots, roots, fundamentals })
    }

    pub fn from_file(f: &GcmFile) -> Result<Self, CartanError> {
        Self::from_gcm(f.labels.clone(), f.cartan.clone(), f.symmetrizer.clone())
    }

    /// Datum with explicitly given lattices; validates the pairing axioms.
    #[allow(clippy::too_many_arguments)]
    pub fn with_lattices(
        labels: Vec<String>,
        a: Vec<Vec<i64>>,
        d: Vec<i64>,
        coroot_names: Vec<String>,
        weight_names: Vec<String>,
        coroots: Vec<CorootVec>,
        roots: Vec<WeightVec>,
        fundamentals: Vec<WeightVec>,
    ) -> Result<Self, CartanError> {
        check_gcm(&a)?;
        let n = a.len();
        let r = coroot_names.len();
        if weight_names.len() != r {
            return Err(CartanError::ModelViolation("coroot and weight bases differ in rank".into()));
        }
        let dt = RootDatum { labels, a, d, coroot_names, weight_names, coroots, roots, fundamentals };
        for i in 0..n {
            if dt.coroots[i].len() != r || dt.roots[i].len() != r || dt.fundamentals[i].len() != r {
                return Err(CartanError::ModelViolation("vector length mismatch".into()));
            }
            for j in 0..n {
                if dt.pair(&dt.coroots[i], &dt.roots[j]) != dt.a[i][j] {
                    return Err(CartanError::ModelViolation(format!("<a∨_{i}, a_{j}> != a_{i}{j}")));
                }
                let delta = i64::from(i == j);
                if dt.pair(&dt.coroots[i], &dt.fundamentals[j]) != delta {
                    return Err(CartanError::ModelViolation(format!("<a∨_{i}, L_{j}> != δ")));
                }
                if dt.d[i] * dt.a[i][j] != dt.d[j] * dt.a[j][i] {
                    return Err(CartanError::BadSymmetrizer(format!("index pair {i},{j}")));
                }
                if i != j && dt.roots[i] == dt.roots[j] {
                    return Err(CartanError::ModelViolation("simple roots coincide".into()));
                }
            }
        }
        if integer_rank(&dt.coroots) != n {
            return Err(CartanError::ModelViolation("simple coroots are dependent".into()));
        }
        Ok(dt)
    }

    /// Finite and small affine types by name: `A1`..`A5`, `B2`, `B3`, `C3`, `D4`, `G2`, `A1xA1`, `A1^(1)`.
    pub fn named(name: &str) -> Result<Self, CartanError> {
        let (labels, a) = named_gcm(name)?;
        Self::from_gcm(labels, a, None)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Rank of the coroot (and weight) lattice.
    pub fn lattice_rank(&self) -> usize {
        self.coroot_names.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn coroot_names(&self) -> &[String] {
        &self.coroot_names
    }

    pub fn weight_names(&self) -> &[String] {
        &self.weight_names
    }

    pub fn coroot(&self, i: usize) -> &CorootVec {
        &self.coroots[i]
    }

    pub fn root(&self, i: usize) -> &WeightVec {
        &self.roots[i]
    }

    pub fn fundamental(&self, i: usize) -> &WeightVec {
        &self.fundamentals[i]
    }

    pub fn rho(&self) -> WeightVec {
        let mut r = vec![0; self.lattice_rank()];
        for l in &self.fundamentals {
            add_into(&mut r, l, 1);
        }
        r
    }

    pub fn index_of(&self, label: &str) -> Result<usize, CartanError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CartanError::UnknownIndex(label.to_string()))
    }

    pub fn parse_word(&self, s: &str) -> Result<WeylWord, CartanError> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Vec::new());
        }
        s.split(',').map(|t| self.index_of(t.trim())).collect()
    }

    pub fn render_word(&self, w: &[usize]) -> String {
        w.iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>().join(",")
    }

    pub fn check_word(&self, w: &[usize]) -> Result<(), CartanError> {
        match w.iter().find(|&&i| i >= self.n()) {
            Some(i) => Err(CartanError::UnknownIndex(i.to_string())),
            None => Ok(()),
        }
    }

    pub fn pair(&self, beta: &[i64], lambda: &[i64]) -> i64 {
        beta.iter().zip(lambda).map(|(x, y)| x * y).sum()
    }

    /// Weight from coordinates in the fundamental weights (`Σ c_i Λ_i`).
    pub fn weight_from_fundamental(&self, c: &[i64]) -> WeightVec {
        let mut r = vec![0; self.lattice_rank()];
        for (i, &x) in c.iter().enumerate() {
            add_into(&mut r, &self.fundamentals[i], x);
        }
        r
    }

    /// Coordinates `⟨α∨_i, λ⟩` (the Λ-coordinates modulo the part invisible to simple coroots).
    pub fn fundamental_coords(&self, lambda: &[i64]) -> Vec<i64> {
        (0..self.n()).map(|i| self.pair(&self.coroots[i], lambda)).collect()
    }

    /// Whether `λ` is an integer combination of the `Λ_i` (true for the default model).
    pub fn in_fundamental_span(&self, lambda: &[i64]) -> bool {
        self.weight_from_fundamental(&self.fundamental_coords(lambda)) == lambda
    }

    pub fn coroot_from_simple(&self, c: &[i64]) -> CorootVec {
        let mut r = vec![0; self.lattice_rank()];
        for (i, &x) in c.iter().enumerate() {
            add_into(&mut r, &self.coroots[i], x);
        }
        r
    }

    pub fn weight_from_roots(&self, c: &[i64]) -> WeightVec {
        let mut r = vec![0; self.lattice_rank()];
        for (i, &x) in c.iter().enumerate() {
            add_into(&mut r, &self.roots[i], x);
        }
        r
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        self.fundamental_coords(lambda).iter().all(|&x| x >= 0)
    }

    /// `s_i(β) = β − ⟨β, α_i⟩ α∨_i`.
    pub fn reflect_coroot(&self, i: usize, beta: &[i64]) -> CorootVec {
        let p = self.pair(beta, &self.roots[i]);
        let mut r = beta.to_vec();
        add_into(&mut r, &self.coroots[i], -p);
        r
    }

    /// `s_i(λ) = λ − ⟨α∨_i, λ⟩ α_i`.
    pub fn reflect_weight(&self, i: usize, lambda: &[i64]) -> WeightVec {
        let p = self.pair(&self.coroots[i], lambda);
        let mut r = lambda.to_vec();
        add_into(&mut r, &self.roots[i], -p);
        r
    }

    /// Reflection on root-lattice coordinates `Σ c_j α_j`.
    pub fn reflect_root_coords(&self, i: usize, c: &[i64]) -> Vec<i64> {
        let p: i64 = (0..self.n()).map(|j| c[j] * self.a[i][j]).sum();
        let mut r = c.to_vec();
        r[i] -= p;
        r
    }

    pub fn act_coroot(&self, w: &[usize], beta: &[i64]) -> CorootVec {
        w.iter().fold(beta.to_vec(), |b, &i| self.reflect_coroot(i, &b))
    }

    pub fn act_weight(&self, w: &[usize], lambda: &[i64]) -> WeightVec {
        w.iter().fold(lambda.to_vec(), |l, &i| self.reflect_weight(i, &l))
    }

    pub fn act_root_coords(&self, w: &[usize], c: &[i64]) -> Vec<i64> {
        w.iter().fold(c.to_vec(), |v, &i| self.reflect_root_coords(i, &v))
    }

    /// `w∘λ = w(λ+ρ) − ρ`.
    pub fn shifted_act(&self, w: &[usize], lambda: &[i64]) -> WeightVec {
        let rho = self.rho();
        let mut l = lambda.to_vec();
        add_into(&mut l, &rho, 1);
        let mut r = self.act_weight(w, &l);
        add_into(&mut r, &rho, -1);
        r
    }

    /// `β_k = s_{i1} ⋯ s_{i(k−1)}(α∨_{ik})` for each position of the word.
    pub fn word_coroots(&self, w: &[usize]) -> Vec<CorootVec> {
        (0..w.len())
            .map(|k| {
                let mut b = self.coroots[w[k]].clone();
                for &i in w[..k].iter().rev() {
                    b = self.reflect_coroot(i, &b);
                }
                b
            })
            .collect()
    }

    /// Whether the word is reduced.
    pub fn is_reduced(&self, w: &[usize]) -> bool {
        for k in 0..w.len() {
            let mut c = vec![0; self.n()];
            c[w[k]] = 1;
            for &i in w[..k].iter().rev() {
                c = self.reflect_root_coords(i, &c);
            }
            if c.iter().any(|&x| x < 0) {
                return false;
            }
        }
        true
    }

    /// Length of the element represented by the word.
    pub fn length(&self, w: &[usize]) -> usize {
        let n = self.n();
        // columns of the matrix of w on the root lattice
        let mut cols: Vec<Vec<i64>> = (0..n).map(|j| self.act_root_coords(w, &unit(n, j))).collect();
        let mut len = 0;
        loop {
            let Some(i) = (0..n).find(|&i| cols[i].iter().any(|&x| x < 0)) else { return len };
            // w ← w s_i: new column j is w(s_i α_j) = w(α_j) − a_ij w(α_i)
            let wi = cols[i].clone();
            for j in 0..n {
                let f = self.a[i][j];
                if f != 0 {
                    for (x, y) in cols[j].iter_mut().zip(&wi) {
                        *x -= f * y;
                    }
                }
            }
            len += 1;
        }
    }

    /// Reflect at the lowest index with negative pairing until dominant.
    /// Returns `(w, μ)` with `ν = w(μ)`, the word in application order.
    pub fn dominant_decompose(&self, nu: &[i64], cap: usize) -> Result<(WeylWord, WeightVec), CartanError> {
        let mut v = nu.to_vec();
        let mut path = Vec::new();
        loop {
            let neg = (0..self.n()).find(|&i| self.pair(&self.coroots[i], &v) < 0);
            match neg {
                None => {
                    path.reverse();
                    return Ok((path, v));
                }
                Some(i) => {
                    if path.len() >= cap {
                        return Err(CartanError::CapExhausted(cap));
                    }
                    v = self.reflect_weight(i, &v);
                    path.push(i);
                }
            }
        }
    }

    /// All reduced words of length exactly `len`.
    pub fn reduced_words(&self, len: usize) -> Vec<WeylWord> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_reduced(&mut cur, len, &mut out);
        out
    }

    fn extend_reduced(&self, cur: &mut WeylWord, len: usize, out: &mut Vec<WeylWord>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..self.n() {
            cur.push(i);
            if self.is_reduced(cur) {
                self.extend_reduced(cur, len, out);
            }
            cur.pop();
        }
    }

    /// One reduced word per Weyl group element of length at most `max_len`,
    /// grouped by the element's action on `ρ`-regular test vectors.
    pub fn elements_up_to(&self, max_len: usize) -> Vec<Vec<WeylWord>> {
        let mut groups: BTreeMap<Vec<i64>, Vec<WeylWord>> = BTreeMap::new();
        let mut order: Vec<Vec<i64>> = Vec::new();
        for len in 0..=max_len {
            for w in self.reduced_words(len) {
                let key = self.element_key(&w);
                if !groups.contains_key(&key) {
                    order.push(key.clone());
                }
                groups.entry(key).or_default().push(w);
            }
        }
        order.into_iter().map(|k| groups.remove(&k).unwrap()).collect()
    }

    /// Fingerprint of the element: its matrix on the root lattice and on `ρ`.
    pub fn element_key(&self, w: &[usize]) -> Vec<i64> {
        let n = self.n();
        let mut key = Vec::new();
        for j in 0..n {
            key.extend(self.act_root_coords(w, &unit(n, j)));
        }
        key.extend(self.act_weight(w, &self.rho()));
        for j in 0..self.lattice_rank() {
            key.extend(self.act_weight(w, &unit(self.lattice_rank(), j)));
        }
        key
    }

    pub fn same_element(&self, u: &[usize], v: &[usize]) -> bool {
        self.element_key(u) == self.element_key(v)
    }

    /// Weight as a JSON-style map from basis name to coordinate.
    pub fn weight_map(&self, lambda: &[i64]) -> BTreeMap<String, i64> {
        self.weight_names.iter().cloned().zip(lambda.iter().copied()).filter(|(_, v)| *v != 0).collect()
    }

    /// Parse `L1`, `rho`, `0`, a Λ-coordinate list `1,0,2`, or `L1+2*L3`-style sums.
    pub fn parse_weight(&self, s: &str) -> Result<WeightVec, CartanError> {
        let s = s.trim();
        if s == "0" {
            return Ok(vec![0; self.lattice_rank()]);
        }
        if s == "rho" {
            return Ok(self.rho());
        }
        if s.contains(',') || s.chars().all(|c| c.is_ascii_digit() || c == '-') {
            let c: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
            let c = c.map_err(|e| CartanError::Input(format!("bad weight {s}: {e}")))?;
            if c.len() != self.n() {
                return Err(CartanError::Input(format!("weight {s} needs {} coordinates", self.n())));
            }
            return Ok(self.weight_from_fundamental(&c));
        }
        let mut r = vec![0; self.lattice_rank()];
        for part in s.split('+') {
            let part = part.trim();
            let (k, name) = match part.split_once('*') {
                Some((k, n)) => (
                    k.trim().parse::<i64>().map_err(|e| CartanError::Input(format!("bad weight {s}: {e}")))?,
                    n.trim(),
                ),
                None => (1, part),
            };
            let v = if let Some(lbl) = name.strip_prefix('L').filter(|l| self.labels.iter().any(|x| x == l)) {
                self.fundamentals[self.index_of(lbl)?].clone()
            } else if let Some(p) = self.weight_names.iter().position(|x| x == name) {
                unit(self.lattice_rank(), p)
            } else if name == "rho" {
                self.rho()
            } else {
                return Err(CartanError::Input(format!("unknown weight {name}")));
            };
            add_into(&mut r, &v, k);
        }
        Ok(r)
    }

    /// Render a weight as `L1 + 2*L3`-style text when it lies in the span of the Λ_i,
    /// otherwise over the weight basis.
    pub fn render_weight_coords(&self, lambda: &[i64]) -> String {
        if self.in_fundamental_span(lambda) {
            self.fundamental_coords(lambda).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        } else {
            let parts: Vec<String> = self
                .weight_names
                .iter()
                .zip(lambda)
                .filter(|(_, &v)| v != 0)
                .map(|(n, v)| format!("{v}*{n}"))
                .collect();
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join("+")
            }
        }
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub(crate) fn add_into(acc: &mut [i64], v: &[i64], k: i64) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += k * b;
    }
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

/// Labels and matrix for a named Cartan type. Labels are `1..n` (finite) or `0..n-1` (affine).
pub fn named_gcm(name: &str) -> Result<(Vec<String>, Vec<Vec<i64>>), CartanError> {
    let labels = |n: usize, from: usize| (from..from + n).map(|k| k.to_string()).collect::<Vec<_>>();
    let out = match name {
        "A1xA1" => (labels(2, 1), vec![vec![2, 0], vec![0, 2]]),
        "B2" => (labels(2, 1), vec![vec![2, -1], vec![-2, 2]]),
        "C2" => (labels(2, 1), vec![vec![2, -2], vec![-1, 2]]),
        "G2" => (labels(2, 1), vec![vec![2, -1], vec![-3, 2]]),
        "B3" => (labels(3, 1), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]),
        "C3" => (labels(3, 1), vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]),
        "D4" => (
            labels(4, 1),
            vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
        ),
        "A1^(1)" => (labels(2, 0), vec![vec![2, -2], vec![-2, 2]]),
        _ => {
            if let Some(rest) = name.strip_prefix('A') {
                if let Some(nn) = rest.strip_suffix("^(1)") {
                    let n: usize = nn.parse().map_err(|_| CartanError::Input(format!("unknown type {name}")))?;
                    let m = n + 1;
                    let mut a = vec![vec![0; m]; m];
                    for i in 0..m {
                        a[i][i] = 2;
                        a[i][(i + 1) % m] -= 1;
                        a[(i + 1) % m][i] -= 1;
                    }
                    if m == 2 {
                        a = vec![vec![2, -2], vec![-2, 2]];
                    }
                    return Ok((labels(m, 0), a));
                }
                let n: usize = rest.parse().map_err(|_| CartanError::Input(format!("unknown type {name}")))?;
                if n == 0 {
                    return Err(CartanError::Input("A0 is empty".into()));
                }
                return Ok((labels(n, 1), chain(n)));
            }
            return Err(CartanError::Input(format!("unknown type {name}")));
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(n: usize) -> Vec<String> {
        (1..=n).map(|k| k.to_string()).collect()
    }

    #[test]
    fn symmetrizers() {
        let d = RootDatum::from_gcm(lbl(2), vec![vec![2, -1], vec![-1, 2]], None).unwrap();
        assert_eq!(d.symmetrizer(), &[1, 1]);
        let d = RootDatum::from_gcm(lbl(2), vec![vec![2, -1], vec![-2, 2]], None).unwrap();
        assert_eq!(d.symmetrizer(), &[2, 1]);
        let e = RootDatum::from_gcm(lbl(2), vec![vec![2, -1], vec![0, 2]], None).unwrap_err();
        assert!(matches!(e, CartanError::NotAGcm(_)));
    }

    #[test]
    fn non_symmetrizable_cycle() {
        let a = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(minimal_symmetrizer(&a), Err(CartanError::NotSymmetrizable));
    }

    #[test]
    fn reduced_words_a2() {
        let d = RootDatum::named("A2").unwrap();
        assert!(!d.is_reduced(&[0, 0]));
        assert!(d.is_reduced(&[0, 1, 0]));
        assert!(!d.is_reduced(&[0, 1, 0, 1]));
        assert_eq!(d.length(&[0, 1, 0, 1]), 2);
        let a11 = RootDatum::named("A1^(1)").unwrap();
        assert!(a11.is_reduced(&[0, 1, 0, 1]));
    }

    #[test]
    fn dominant_decompose_examples() {
        let d = RootDatum::named("A2").unwrap();
        let l1 = d.fundamental(0).clone();
        assert_eq!(d.dominant_decompose(&l1, 10).unwrap(), (vec![], l1.clone()));
        let nu = d.reflect_weight(0, &l1);
        assert_eq!(d.dominant_decompose(&nu, 10).unwrap(), (vec![0], l1));
        let a = RootDatum::named("A1^(1)").unwrap();
        assert_eq!(a.root(0), &vec![2, -2]);
        let e = a.dominant_decompose(&[-1, -1], 50).unwrap_err();
        assert_eq!(e, CartanError::CapExhausted(50));
    }

    #[test]
    fn shifted_action_a2() {
        let d = RootDatum::named("A2").unwrap();
        let zero = vec![0, 0];
        let r = d.shifted_act(&[0], &zero);
        let mut neg_a1 = d.root(0).clone();
        neg_a1.iter_mut().for_each(|x| *x = -*x);
        assert_eq!(r, neg_a1);
    }
}
