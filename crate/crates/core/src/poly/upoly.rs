//! Dense univariate polynomials over the rationals.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients stored low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    c: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(a: BigRational) -> Self {
        Self::from_coeffs(vec![a])
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// `a * x^n`
    pub fn monomial(a: BigRational, n: usize) -> Self {
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = a;
        Self::from_coeffs(c)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|a| a.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_i64_coeffs(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&a| rat(a)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.c.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, a: &BigRational) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        UPoly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); n];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        if x.is_integer() && self.c.iter().all(|a| a.is_integer()) {
            // integer Horner avoids a gcd per step
            let xi = x.to_integer();
            let mut acc = BigInt::zero();
            for a in self.c.iter().rev() {
                acc = acc * &xi + a.numer();
            }
            return BigRational::from_integer(acc);
        }
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let inv = d.lead().recip();
        let mut r = self.c.clone();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if t.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                let v = &r[k + j] - &t * dj;
                r[k + j] = v;
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `x` as a factor.
    pub fn low_order(&self) -> usize {
        self.c.iter().take_while(|a| a.is_zero()).count()
    }

    /// Divides by `x^n`; the low `n` coefficients must vanish.
    pub fn unshift(&self, n: usize) -> Self {
        debug_assert!(self.low_order() >= n || self.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        UPoly { c: self.c[n..].to_vec() }
    }

    /// `Some(n)` if this is exactly `x^n`.
    pub fn monomial_degree(&self) -> Option<usize> {
        let n = self.c.len().checked_sub(1)?;
        (self.c[n].is_one() && self.c[..n].iter().all(|a| a.is_zero())).then_some(n)
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    /// Total order used only for canonical sorting: by degree, then coefficients from the top.
    pub fn canonical_cmp(&self, other: &UPoly) -> Ordering {
        self.c.len().cmp(&other.c.len()).then_with(|| {
            for (a, b) in self.c.iter().rev().zip(other.c.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            c.push(match (self.c.get(k), o.c.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(c)
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        self + &(-o)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(c)
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl<'a> std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                &self + o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                &self - o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                &self * o
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(UPoly);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let a = UPoly::from_i64_coeffs(&[-1, 1]); // x - 1
        let b = UPoly::from_i64_coeffs(&[2, 1]); // x + 2
        let c = UPoly::from_i64_coeffs(&[1, 0, 1]); // x^2 + 1
        let g = UPoly::gcd(&(&a * &b), &(&a * &c));
        assert_eq!(g, a);
    }

    #[test]
    fn division_roundtrip() {
        let n = UPoly::from_i64_coeffs(&[3, 0, -2, 5, 1]);
        let d = UPoly::from_i64_coeffs(&[1, 7, 2]);
        let (q, r) = n.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, n);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn render_signs() {
        let p = UPoly::from_i64_coeffs(&[1, -2, 1]);
        assert_eq!(p.render("q"), "q^2 - 2*q + 1");
        assert_eq!(UPoly::zero().render("q"), "0");
    }
}
