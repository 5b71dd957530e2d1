use super::commutator::{check_commutator_matrix, standard_matrix};
use super::laurent::{substitute_generators, LaurentElem};
use super::{conj_generator_image, Realization, Result};
use crate::cartan::RootDatum;
use crate::poly::RatFunc;
use crate::scalars::{ParamScalar, QScalar};

/// q-commuting generators: `f_j f_i = q^{c_ij} f_i f_j`.
#[derive(Clone, Debug)]
pub struct QCommutator {
    datum: RootDatum,
    c: Vec<Vec<i64>>,
}

impl QCommutator {
    pub fn new(datum: RootDatum, c: Vec<Vec<i64>>) -> Result<Self> {
        check_commutator_matrix(&datum, &c)?;
        Ok(QCommutator { datum, c })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(datum: RootDatum, c: Vec<Vec<i64>>) -> Self {
        QCommutator { datum, c }
    }

    /// `c_ij = −d_i a_ij` for `i < j`.
    pub fn standard(datum: RootDatum) -> Self {
        let c = standard_matrix(&datum);
        QCommutator { datum, c }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    /// Exponent `σ(a, b)` in `f^a f^b = q^σ f^{a+b}`.
    pub fn sigma(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (l, &bl) in b.iter().enumerate() {
            if bl == 0 {
                continue;
            }
            for (k, &ak) in a.iter().enumerate().skip(l + 1) {
                s += self.c[l][k] * ak * bl;
            }
        }
        s
    }

    /// `Σ_l e_l a_il`, the pairing of `α∨_i` with minus the weight of `f^e`.
    fn weight_pairing(&self, i: usize, e: &[i64]) -> i64 {
        e.iter().enumerate().map(|(l, &x)| x * self.datum.a(i, l)).sum()
    }
}

impl Realization for QCommutator {
    type Scalar = QScalar;
    type Elem = LaurentElem<QScalar>;

    fn datum(&self) -> &RootDatum {
        &self.datum
    }
    fn tag(&self) -> String {
        "qc".into()
    }
    fn zero(&self) -> Self::Elem {
        LaurentElem::zero()
    }
    fn scalar(&self, c: QScalar) -> Self::Elem {
        LaurentElem::monomial(c, vec![0; self.datum.n()])
    }
    fn generator_power(&self, i: usize, n: i64) -> Result<Self::Elem> {
        let mut e = vec![0; self.datum.n()];
        e[i] = n;
        Ok(LaurentElem::monomial(QScalar::one(), e))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn scale(&self, c: &QScalar, a: &Self::Elem) -> Self::Elem {
        a.scale(c)
    }
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        a.multiply_with(b, &|x, y| {
            let e: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            Ok(vec![(QScalar::from_ratfunc(RatFunc::q_pow(self.sigma(x, y))), e)])
        })
    }
    fn map_scalars(&self, a: &Self::Elem, f: &dyn Fn(&QScalar) -> QScalar) -> Self::Elem {
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
    /// Termwise `f_i a − q_i^{⟨α∨_i, ν⟩} a f_i` on each weight component.
    fn ad_once(&self, i: usize, a: &Self::Elem) -> Result<Self::Elem> {
        let f = self.generator(i);
        let mut out = self.zero();
        for (e, c) in a.terms() {
            let t = LaurentElem::monomial(c.clone(), e.clone());
            let p = self.weight_pairing(i, e);
            let left = self.multiply(&f, &t)?;
            let right = self.multiply(&t, &f)?;
            let tw = QScalar::ad_twist(self.datum.d(i), p);
            out = self.add(&out, &self.sub(&left, &self.scale(&tw, &right)));
        }
        Ok(out)
    }
    fn irregular_term(&self, a: &Self::Elem) -> Option<String> {
        a.irregular_term(&self.datum)
    }
    fn render(&self, a: &Self::Elem) -> String {
        a.render(&self.datum)
    }
    fn as_scalar(&self, a: &Self::Elem) -> Option<QScalar> {
        a.as_scalar(self.datum.n())
    }
}
