use super::laurent::{substitute_generators, LaurentElem};
use super::{conj_generator_image, AlgebraError, Realization, Result};
use crate::cartan::RootDatum;
use crate::poly::upoly::rat;
use crate::scalars::KmScalar;
use num::{BigRational, One, Zero};
use std::collections::BTreeMap;

/// Generators with central commutators `[f_i, f_j] = c_ij`.
#[derive(Clone, Debug)]
pub struct ConstCommutator {
    datum: RootDatum,
    c: Vec<Vec<i64>>,
}

/// Generalized binomial `n(n−1)⋯(n−k+1)/k!` for any integer `n`.
pub(crate) fn gbinom(n: i64, k: i64) -> BigRational {
    let mut r = BigRational::one();
    for t in 0..k {
        r = r * rat(n - t) / rat(t + 1);
    }
    r
}

fn factorial(k: i64) -> BigRational {
    (1..=k).fold(BigRational::one(), |acc, t| acc * rat(t))
}

/// Check `c_ij = ε_ij d_i a_ij` with `ε_ij = ±1` exactly when `a_ij ≠ 0`, `c_ji = −c_ij`.
pub(crate) fn check_commutator_matrix(d: &RootDatum, c: &[Vec<i64>]) -> Result<()> {
    let n = d.n();
    if c.len() != n || c.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::Invalid("commutator matrix has the wrong shape".into()));
    }
    for i in 0..n {
        if c[i][i] != 0 {
            return Err(AlgebraError::Invalid(format!("c_{i}{i} must vanish")));
        }
        for j in 0..n {
            if c[j][i] != -c[i][j] {
                return Err(AlgebraError::Invalid(format!("c_{j}{i} != -c_{i}{j}")));
            }
            if i != j {
                let x = d.d(i) * d.a(i, j);
                let ok = if x == 0 { c[i][j] == 0 } else { c[i][j] == x || c[i][j] == -x };
                if !ok {
                    return Err(AlgebraError::Invalid(format!(
                        "c_{i}{j} = {} is not ±d_i a_ij = ±{x}",
                        c[i][j]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The default sign choice `c_ij = −d_i a_ij` for `i < j`.
pub(crate) fn standard_matrix(d: &RootDatum) -> Vec<Vec<i64>> {
    let n = d.n();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            c[i][j] = -d.d(i) * d.a(i, j);
            c[j][i] = -c[i][j];
        }
    }
    c
}

impl ConstCommutator {
    pub fn new(datum: RootDatum, c: Vec<Vec<i64>>) -> Result<Self> {
        check_commutator_matrix(&datum, &c)?;
        Ok(ConstCommutator { datum, c })
    }

    /// `[f_i, f_j] = −d_i a_ij` for `i < j`.
    pub fn standard(datum: RootDatum) -> Self {
        let c = standard_matrix(&datum);
        ConstCommutator { datum, c }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    fn right_mul_gen(&self, m: &[i64], j: usize, e: i64) -> Result<Vec<(BigRational, Vec<i64>)>> {
        let n = m.len();
        let mut states: Vec<(BigRational, Vec<i64>, i64)> = vec![(BigRational::one(), m.to_vec(), e)];
        for l in (j + 1..n).rev() {
            let c = self.c[j][l];
            let mut next = Vec::with_capacity(states.len());
            for (coef, exps, ecur) in states {
                let ml = exps[l];
                if c == 0 || ml == 0 || ecur == 0 {
                    next.push((coef, exps, ecur));
                    continue;
                }
                if ml < 0 && ecur < 0 {
                    return Err(AlgebraError::UnsupportedLocalization(format!(
                        "reordering f{}^{ml} past f{}^{ecur} is an infinite series",
                        self.datum.labels()[l],
                        self.datum.labels()[j]
                    )));
                }
                let kmax = if ml >= 0 && ecur >= 0 { ml.min(ecur) } else if ml >= 0 { ml } else { ecur };
                let mc = rat(-c);
                let mut pw = BigRational::one();
                for k in 0..=kmax {
                    if k > 0 {
                        pw *= &mc;
                    }
                    let w = &coef * factorial(k) * gbinom(ml, k) * gbinom(ecur, k) * &pw;
                    if w.is_zero() {
                        continue;
                    }
                    let mut ex = exps.clone();
                    ex[l] = ml - k;
                    next.push((w, ex, ecur - k));
                }
            }
            states = next;
        }
        Ok(states
            .into_iter()
            .map(|(c, mut ex, ecur)| {
                ex[j] += ecur;
                (c, ex)
            })
            .collect())
    }

    /// Product of two normal-ordered monomials.
    pub fn mono_mul(&self, a: &[i64], b: &[i64]) -> Result<Vec<(KmScalar, Vec<i64>)>> {
        let mut cur: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        cur.insert(a.to_vec(), BigRational::one());
        for (j, &e) in b.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut next: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
            for (m, c) in cur {
                for (w, ex) in self.right_mul_gen(&m, j, e)? {
                    let v = next.entry(ex).or_insert_with(BigRational::zero);
                    *v += &c * w;
                }
            }
            next.retain(|_, v| !v.is_zero());
            cur = next;
        }
        Ok(cur.into_iter().map(|(e, c)| (KmScalar::rational(c), e)).collect())
    }
}

impl Realization for ConstCommutator {
    type Scalar = KmScalar;
    type Elem = LaurentElem<KmScalar>;

    fn datum(&self) -> &RootDatum {
        &self.datum
    }
    fn tag(&self) -> String {
        "cc".into()
    }
    fn zero(&self) -> Self::Elem {
        LaurentElem::zero()
    }
    fn scalar(&self, c: KmScalar) -> Self::Elem {
        LaurentElem::monomial(c, vec![0; self.datum.n()])
    }
    fn generator_power(&self, i: usize, n: i64) -> Result<Self::Elem> {
        let mut e = vec![0; self.datum.n()];
        e[i] = n;
        Ok(LaurentElem::monomial(KmScalar::one_(), e))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn scale(&self, c: &KmScalar, a: &Self::Elem) -> Self::Elem {
        a.scale(c)
    }
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        a.multiply_with(b, &|x, y| self.mono_mul(x, y))
    }
    fn map_scalars(&self, a: &Self::Elem, f: &dyn Fn(&KmScalar) -> KmScalar) -> Self::Elem {
        a.map_scalars(f)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn conj_by_power(&self, i: usize, beta: &[i64], n: i64, a: &Self::Elem) -> Result<Self::Elem> {
        if n == 0 && beta.iter().all(|&x| x == 0) {
            return Ok(a.clone());
        }
        let nn = self.datum.n();
        let mut images = Vec::with_capacity(nn);
        for l in 0..nn {
            images.push(if l == i || self.datum.a(i, l) == 0 {
                None
            } else {
                Some(conj_generator_image(self, i, l, beta, n)?)
            });
        }
        substitute_generators(a, nn, &images, &|x, y| self.multiply(x, y), &|l, e| {
            self.generator_power(l, e).unwrap()
        })
    }
    fn ad_once(&self, i: usize, a: &Self::Elem) -> Result<Self::Elem> {
        let f = self.generator(i);
        let left = self.multiply(&f, a)?;
        let right = self.multiply(a, &f)?;
        Ok(self.sub(&left, &right))
    }
    fn irregular_term(&self, a: &Self::Elem) -> Option<String> {
        a.irregular_term(&self.datum)
    }
    fn render(&self, a: &Self::Elem) -> String {
        a.render(&self.datum)
    }
    fn as_scalar(&self, a: &Self::Elem) -> Option<KmScalar> {
        a.as_scalar(self.datum.n())
    }
}

impl KmScalar {
    pub(crate) fn one_() -> Self {
        <KmScalar as crate::scalars::ParamScalar>::one()
    }
}
