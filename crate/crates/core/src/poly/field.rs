//! Coefficient fields for the free-algebra computations: rationals (Kac-Moody case)
//! and rational functions of `q` (quantum case).

use super::ratfunc::RatFunc;
use super::upoly::rat;
use num::{BigRational, One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub trait Field:
    Sized
    + Clone
    + PartialEq
    + Eq
    + Debug
    + Display
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
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    /// `[n]_{q^d}` in the quantum case, `n` in the classical case.
    fn qint(n: i64, d: i64) -> Self;
    fn render(&self) -> String;
    /// Whether the rendering can go unparenthesized in a product.
    fn is_atomic(&self) -> bool;

    /// The variable `q`, if the field has one.
    fn q_var() -> Option<Self> {
        None
    }

    /// Solves `Σ_k x_k cols[k] = b`; see [`super::linalg::solve`].
    fn solve(cols: &[Vec<Self>], b: &[Self]) -> super::linalg::Solution<Self> {
        super::linalg::solve(cols, b)
    }

    fn qfactorial(n: u32, d: i64) -> Self {
        let mut acc = Self::one();
        for k in 1..=n as i64 {
            acc = acc * Self::qint(k, d);
        }
        acc
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        rat(n)
    }
    fn qint(n: i64, _d: i64) -> Self {
        rat(n)
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_atomic(&self) -> bool {
        true
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn inv(&self) -> Self {
        RatFunc::inv(self)
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_i64(n)
    }
    fn qint(n: i64, d: i64) -> Self {
        RatFunc::qint(n, d)
    }
    fn solve(cols: &[Vec<Self>], b: &[Self]) -> super::linalg::Solution<Self> {
        super::modular::solve_modular(cols, b)
    }
    fn q_var() -> Option<Self> {
        Some(RatFunc::q())
    }
    fn render(&self) -> String {
        RatFunc::render(self)
    }
    fn is_atomic(&self) -> bool {
        self.is_single_term()
    }
}
