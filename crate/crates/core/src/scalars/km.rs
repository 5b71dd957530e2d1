use super::{Case, ParamScalar, SymbolMap};
use crate::poly::upoly::rat;
use crate::poly::MPoly;
use num::{BigRational, One, Signed};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial over the rationals in the coroot basis symbols.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct KmScalar(pub MPoly);

impl KmScalar {
    /// The linear form `β + n`.
    pub fn linear(beta: &[i64], n: i64) -> Self {
        KmScalar(MPoly::linear(beta, n))
    }

    pub fn symbol(b: usize) -> Self {
        KmScalar(MPoly::var(b))
    }

    pub fn rational(a: BigRational) -> Self {
        KmScalar(MPoly::constant(a))
    }

    /// `binom(β+n, k) = (β+n)(β+n−1)⋯(β+n−k+1)/k!`.
    pub fn binom(beta: &[i64], n: i64, k: u32) -> Self {
        let mut acc = MPoly::one();
        let mut fact = BigRational::one();
        for j in 0..k as i64 {
            acc = &acc * &MPoly::linear(beta, n - j);
            fact *= rat(j + 1);
        }
        KmScalar(acc.scale(&fact.recip()))
    }

    pub fn poly(&self) -> &MPoly {
        &self.0
    }
}

impl ParamScalar for KmScalar {
    type Value = BigRational;
    const CASE: Case = Case::Km;

    fn zero() -> Self {
        KmScalar(MPoly::zero())
    }
    fn one() -> Self {
        KmScalar(MPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn from_i64(n: i64) -> Self {
        KmScalar(MPoly::from_i64(n))
    }
    fn from_value(v: &BigRational) -> Self {
        KmScalar(MPoly::constant(v.clone()))
    }
    fn basis_symbol(b: usize) -> Self {
        Self::symbol(b)
    }
    fn as_value(&self) -> Option<BigRational> {
        self.0.as_constant()
    }
    fn substitute(&self, m: &SymbolMap) -> Self {
        if self.0.is_constant() || m.is_identity() {
            return self.clone();
        }
        let images: Vec<MPoly> = m.lin.iter().zip(&m.shift).map(|(l, &s)| MPoly::linear(l, s)).collect();
        KmScalar(self.0.substitute(&images))
    }
    fn conj_coefficient(_d: i64, _a: i64, k: u32, beta: &[i64], n: i64) -> Self {
        Self::binom(beta, n, k)
    }
    fn ad_twist(_d: i64, _p: i64) -> Self {
        Self::one()
    }
    fn render(&self, names: &[String]) -> String {
        self.0.render_with(&|k| names.get(k).cloned().unwrap_or_else(|| format!("x{k}")))
    }
    fn is_atomic(&self) -> bool {
        self.0.len() <= 1
    }
}

impl KmScalar {
    /// Leading sign of the rendering (used when joining terms).
    pub fn leading_negative(&self) -> bool {
        self.0.lead().is_some_and(|(_, c)| c.is_negative())
    }
}

impl<'a> Add<&'a KmScalar> for &'a KmScalar {
    type Output = KmScalar;
    fn add(self, o: &KmScalar) -> KmScalar {
        KmScalar(&self.0 + &o.0)
    }
}
impl<'a> Sub<&'a KmScalar> for &'a KmScalar {
    type Output = KmScalar;
    fn sub(self, o: &KmScalar) -> KmScalar {
        KmScalar(&self.0 - &o.0)
    }
}
impl<'a> Mul<&'a KmScalar> for &'a KmScalar {
    type Output = KmScalar;
    fn mul(self, o: &KmScalar) -> KmScalar {
        KmScalar(&self.0 * &o.0)
    }
}
impl Neg for KmScalar {
    type Output = KmScalar;
    fn neg(self) -> KmScalar {
        KmScalar(-self.0)
    }
}
crate::poly::upoly::owned_ops!(KmScalar);
