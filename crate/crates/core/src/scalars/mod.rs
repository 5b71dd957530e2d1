//! Parameter-variable scalars for the two cases.
//!
//! A scalar involves the central parameters `β ∈ Q∨`. In the Kac-Moody case it is a
//! polynomial in the coroot basis symbols; in the q case it is a finite sum
//! `Σ c_γ(q) q^γ`. Both support affine substitutions of the symbols, which covers the
//! τ-shift, the Weyl group action on parameters and the evaluation `φ_λ`.

mod km;
mod q;

pub use km::KmScalar;
pub use q::QScalar;

use crate::poly::Field;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Which family of formulas a scalar type uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Case {
    Km,
    Q,
}

/// Affine map on coroot symbols: symbol `b ↦ Σ_c lin[b][c]·x_c + shift[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolMap {
    pub lin: Vec<Vec<i64>>,
    pub shift: Vec<i64>,
}

impl SymbolMap {
    pub fn identity(r: usize) -> Self {
        SymbolMap { lin: (0..r).map(|b| crate::cartan::unit(r, b)).collect(), shift: vec![0; r] }
    }

    /// `β ↦ β + ⟨β, ν⟩`.
    pub fn tau_shift(nu: &[i64]) -> Self {
        let mut m = Self::identity(nu.len());
        m.shift = nu.to_vec();
        m
    }

    /// `β ↦ ⟨β, λ⟩`.
    pub fn evaluation(lambda: &[i64]) -> Self {
        let r = lambda.len();
        SymbolMap { lin: vec![vec![0; r]; r], shift: lambda.to_vec() }
    }

    /// Linear map given by the images of the basis symbols.
    pub fn linear(images: Vec<Vec<i64>>) -> Self {
        let r = images.len();
        SymbolMap { lin: images, shift: vec![0; r] }
    }

    pub fn is_identity(&self) -> bool {
        self.shift.iter().all(|&x| x == 0)
            && self.lin.iter().enumerate().all(|(b, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(b == c)))
    }

    /// Image of a linear form `Σ γ_b x_b` (ignoring shifts) and the constant picked up.
    pub fn apply_linear(&self, gamma: &[i64]) -> (Vec<i64>, i64) {
        let r = self.shift.len();
        let mut out = vec![0; r];
        let mut c = 0;
        for (b, &g) in gamma.iter().enumerate() {
            if g == 0 {
                continue;
            }
            for (o, &l) in out.iter_mut().zip(&self.lin[b]) {
                *o += g * l;
            }
            c += g * self.shift[b];
        }
        (out, c)
    }
}

pub trait ParamScalar:
    Sized
    + Clone
    + PartialEq
    + Eq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    /// Field of values after substituting all parameters.
    type Value: Field;
    const CASE: Case;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    fn from_value(v: &Self::Value) -> Self;
    /// The coroot basis symbol `b` (`β` in the KM case, `q^β` in the q case).
    fn basis_symbol(b: usize) -> Self;
    /// `q^γ` for `γ` in coroot coordinates, in the case that has it.
    fn symbol_power(_gamma: &[i64]) -> Option<Self> {
        None
    }
    /// The value if the scalar does not involve parameters.
    fn as_value(&self) -> Option<Self::Value>;
    fn substitute(&self, m: &SymbolMap) -> Self;
    /// `φ_λ`.
    fn phi(&self, lambda: &[i64]) -> Self::Value {
        self.substitute(&SymbolMap::evaluation(lambda))
            .as_value()
            .expect("evaluation leaves no symbols")
    }
    /// Coefficient of `(ad f_i)^k(f_j) f_i^{-k}` in `Ad(f_i^{β+n})(f_j)`.
    fn conj_coefficient(d_i: i64, a_ij: i64, k: u32, beta: &[i64], n: i64) -> Self;
    /// Scalar in `(ad f_i)(a) = f_i a − twist·a f_i`, `p = ⟨α∨_i, ν⟩` for `a` of weight `−ν`.
    fn ad_twist(d_i: i64, p: i64) -> Self;
    fn render(&self, names: &[String]) -> String;
    /// Whether `render` produces a single signed product (no top-level `+`/`-`).
    fn is_atomic(&self) -> bool;
}

#[cfg(test)]
mod tests;

/// `w̃` on parameter symbols: `γ ↦ w(γ)`.
pub fn weyl_symbol_map(datum: &crate::cartan::RootDatum, w: &[usize]) -> SymbolMap {
    let r = datum.lattice_rank();
    SymbolMap::linear((0..r).map(|b| datum.act_coroot(w, &crate::cartan::unit(r, b))).collect())
}
