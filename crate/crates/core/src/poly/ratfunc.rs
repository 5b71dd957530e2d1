//! Rational functions of the single variable `q` over the rationals.

use super::upoly::{owned_ops, rat, UPoly};
use num::{BigRational, One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced fraction `num / den` with monic `den`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(UPoly::from_i64(n))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self::from_poly(UPoly::constant(a))
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc { num: p, den: UPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(UPoly::x())
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(n: i64) -> Self {
        if n >= 0 {
            Self::from_poly(UPoly::monomial(BigRational::one(), n as usize))
        } else {
            RatFunc { num: UPoly::one(), den: UPoly::monomial(BigRational::one(), (-n) as usize) }
        }
    }

    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let s = den.lead().recip();
            return RatFunc { num: num.scale(&s), den: UPoly::one() };
        }
        if let Some(k) = den.monomial_degree() {
            return Self::over_power(num, k);
        }
        let g = UPoly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let l = d.lead();
        if !l.is_one() {
            let s = l.recip();
            n = n.scale(&s);
            d = d.scale(&s);
        }
        RatFunc { num: n, den: d }
    }

    /// `num / q^k` reduced; the common case of Laurent polynomials.
    fn over_power(num: UPoly, k: usize) -> Self {
        let c = num.low_order().min(k);
        RatFunc { num: num.unshift(c), den: UPoly::monomial(BigRational::one(), k - c) }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value if this is a rational number.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let e = n.unsigned_abs() as u32;
        RatFunc { num: base.num.pow(e), den: base.den.pow(e) }
    }

    /// Value at `q = 1`, `None` on a pole.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let one = BigRational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(&one) / d)
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
    pub fn qint(n: i64, d: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let num = &Self::q_pow(d * n) - &Self::q_pow(-d * n);
        let den = &Self::q_pow(d) - &Self::q_pow(-d);
        &num * &den.inv()
    }

    /// `[n]_{q^d}!` for `n >= 0`.
    pub fn qfactorial(n: u32, d: i64) -> Self {
        let mut acc = Self::one();
        for k in 1..=n as i64 {
            acc = &acc * &Self::qint(k, d);
        }
        acc
    }

    /// Integer q-binomial `[a choose k]_{q^d}` for integer `a`, `k >= 0`.
    pub fn qbinom(a: i64, k: u32, d: i64) -> Self {
        let mut acc = Self::one();
        for j in 0..k as i64 {
            acc = &acc * &Self::qint(a - j, d);
        }
        &acc * &Self::qfactorial(k, d).inv()
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render("q")
        } else {
            format!("({})/({})", self.num.render("q"), self.den.render("q"))
        }
    }

    /// Whether the rendering is a single signed term (safe to print without parentheses).
    pub fn is_single_term(&self) -> bool {
        self.den.is_one() && self.num.coeffs().iter().filter(|a| !a.is_zero()).count() <= 1
    }

    /// Whether the rendering can be a left factor of a product without parentheses.
    pub fn is_product_safe(&self) -> bool {
        self.num.coeffs().iter().filter(|a| !a.is_zero()).count() <= 1
    }

    pub fn leading_negative(&self) -> bool {
        use num::Signed;
        self.num.lead().is_negative()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &o.num);
            }
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        if let (Some(a), Some(b)) = (self.den.monomial_degree(), o.den.monomial_degree()) {
            let k = a.max(b);
            let num = &self.num.shift(k - a) + &o.num.shift(k - b);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc::over_power(num, k);
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        if let (Some(a), Some(b)) = (self.den.monomial_degree(), o.den.monomial_degree()) {
            return RatFunc::over_power(&self.num * &o.num, a + b);
        }
        // cross-cancel before multiplying
        let g1 = UPoly::gcd(&self.num, &o.den);
        let g2 = UPoly::gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let l = den.lead();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let s = l.recip();
            RatFunc { num: num.scale(&s), den: den.scale(&s) }
        }
    }
}

owned_ops!(RatFunc);

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_poly(UPoly::constant(rat(n)))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_two() {
        let two = RatFunc::qint(2, 1);
        assert_eq!(two, &RatFunc::q() + &RatFunc::q_pow(-1));
    }

    #[test]
    fn qint_three() {
        let expect = &(&RatFunc::q_pow(2) + &RatFunc::one()) + &RatFunc::q_pow(-2);
        assert_eq!(RatFunc::qint(3, 1), expect);
    }

    #[test]
    fn qbinom_limit_is_binomial() {
        for a in -4..7i64 {
            for k in 0..5u32 {
                let v = RatFunc::qbinom(a, k, 2).eval_at_one().unwrap();
                let mut b = BigRational::one();
                for j in 0..k as i64 {
                    b = b * rat(a - j) / rat(j + 1);
                }
                assert_eq!(v, b, "a={a} k={k}");
            }
        }
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let r = RatFunc::new(UPoly::from_i64_coeffs(&[2]), UPoly::from_i64_coeffs(&[0, 4]));
        assert!(r.denom().lead().is_one());
        assert_eq!(r.render(), "(1/2)/(q)");
    }
}
