//! Concrete realizations of the dependent-variable algebra and their normal forms.
//!
//! Three realizations are provided: generators with central commutators
//! ([`ConstCommutator`], Kac-Moody case), q-commuting generators ([`QCommutator`]),
//! and the Weyl algebra in `x` and `∂` ([`WeylRealization`], Kac-Moody case).
//! Localization is partial: a product that would need an infinite series raises
//! [`AlgebraError::UnsupportedLocalization`].

mod commutator;
mod laurent;
mod qcommutator;
mod weyl;

pub use commutator::ConstCommutator;
pub use laurent::LaurentElem;
pub use qcommutator::QCommutator;
pub use weyl::{WeylElem, WeylGen, WeylRealization, XRat};

use crate::cartan::RootDatum;
use crate::scalars::{ParamScalar, SymbolMap};
use std::fmt::Debug;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported localization: {0}")]
    UnsupportedLocalization(String),
    #[error("target is not weight-homogeneous")]
    NotHomogeneous,
    #[error("invalid realization: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

pub trait Realization: Send + Sync {
    type Scalar: ParamScalar;
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn datum(&self) -> &RootDatum;
    /// Short tag used in reports (`cc`, `qc`, `weyl:<name>`).
    fn tag(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn scalar(&self, c: Self::Scalar) -> Self::Elem;
    fn one(&self) -> Self::Elem {
        self.scalar(Self::Scalar::one())
    }
    /// `f_i^n`.
    fn generator_power(&self, i: usize, n: i64) -> Result<Self::Elem>;
    fn generator(&self, i: usize) -> Self::Elem {
        self.generator_power(i, 1).expect("generators exist")
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiply by a central scalar.
    fn scale(&self, c: &Self::Scalar, a: &Self::Elem) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn map_scalars(&self, a: &Self::Elem, f: &dyn Fn(&Self::Scalar) -> Self::Scalar) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `f_i^{β+n} · a · f_i^{−(β+n)}` with `β` given in coroot coordinates.
    fn conj_by_power(&self, i: usize, beta: &[i64], n: i64, a: &Self::Elem) -> Result<Self::Elem>;
    /// `(ad f_i)(a)`.
    fn ad_once(&self, i: usize, a: &Self::Elem) -> Result<Self::Elem>;
    /// `None` when `a` lies in the polynomial part, else a witness term.
    fn irregular_term(&self, a: &Self::Elem) -> Option<String>;
    fn render(&self, a: &Self::Elem) -> String;
    /// Image of `a` if it is a scalar multiple of one.
    fn as_scalar(&self, a: &Self::Elem) -> Option<Self::Scalar>;
    /// Elements printed under a name other than `f<label>` or a scalar.
    fn named_element(&self, _name: &str) -> Option<Self::Elem> {
        None
    }
    /// Two-sided inverse of `a` when it exists in the algebra, scalars aside.
    fn inverse(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(&(-Self::Scalar::one()), b))
    }

    fn substitute(&self, a: &Self::Elem, m: &SymbolMap) -> Self::Elem {
        self.map_scalars(a, &|c| c.substitute(m))
    }

    /// `(ad f_i)^k(a)`.
    fn ad_pow(&self, i: usize, k: u32, a: &Self::Elem) -> Result<Self::Elem> {
        let mut r = a.clone();
        for _ in 0..k {
            if self.is_zero(&r) {
                break;
            }
            r = self.ad_once(i, &r)?;
        }
        Ok(r)
    }

    fn product(&self, factors: &[Self::Elem]) -> Result<Self::Elem> {
        let mut acc = self.one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    fn power(&self, a: &Self::Elem, n: u32) -> Result<Self::Elem> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }
}

/// `φ_λ` applied coefficientwise.
pub fn phi_lambda_elem<R: Realization>(r: &R, a: &R::Elem, lambda: &[i64]) -> R::Elem {
    r.map_scalars(a, &|c| R::Scalar::from_value(&c.phi(lambda)))
}

/// Result of checking `(ad f_i)^{1−a_ij}(f_j) = 0` for one ordered pair.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SerrePair {
    pub i: String,
    pub j: String,
    pub pass: bool,
    pub detail: String,
}

pub fn serre_check<R: Realization>(r: &R) -> Result<Vec<SerrePair>> {
    let d = r.datum();
    let mut out = Vec::new();
    for i in 0..d.n() {
        for j in 0..d.n() {
            if i == j {
                continue;
            }
            let k = (1 - d.a(i, j)) as u32;
            let v = r.ad_pow(i, k, &r.generator(j))?;
            let pass = r.is_zero(&v);
            out.push(SerrePair {
                i: d.labels()[i].clone(),
                j: d.labels()[j].clone(),
                pass,
                detail: if pass { String::new() } else { r.render(&v) },
            });
        }
    }
    Ok(out)
}

/// `Ad(f_i^{β+n})(f_j) = Σ_k c_k (ad f_i)^k(f_j) f_i^{−k}`, `k ≤ −a_ij`.
pub fn conj_generator_image<R: Realization>(r: &R, i: usize, j: usize, beta: &[i64], n: i64) -> Result<R::Elem> {
    let d = r.datum();
    if i == j {
        return Ok(r.generator(j));
    }
    let a = d.a(i, j);
    let mut acc = r.zero();
    let mut ad = r.generator(j);
    for k in 0..=(-a) as u32 {
        if k > 0 {
            ad = r.ad_once(i, &ad)?;
        }
        if r.is_zero(&ad) {
            break;
        }
        let c = R::Scalar::conj_coefficient(d.d(i), a, k, beta, n);
        let t = r.multiply(&ad, &r.generator_power(i, -(k as i64))?)?;
        acc = r.add(&acc, &r.scale(&c, &t));
    }
    Ok(acc)
}
