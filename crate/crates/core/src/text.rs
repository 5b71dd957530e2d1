//! Text grammar shared by every printed expression, and parsers back into values.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := power (["*" | "/"] power)*        juxtaposition multiplies, order is kept
//! power  := atom ["^" exp]
//! exp    := ["-"] int | "(" ["-"] int ")" | "{" expr "}"
//! atom   := int | ident | "(" expr ")"
//! tau    := expr "*" "tau[" weight "]"
//! ```
//!
//! Identifiers are `f<label>` (generators), `b<label>` (coroot symbols), `q`, and the
//! variable of a univariate polynomial. `q^{…}` takes a linear form in the symbols plus
//! an integer. Division is by scalars in noncommutative targets.

use crate::cartan::RootDatum;
use crate::classical::{ClassicalContext, ClassicalTau, PoissonElement};
use crate::error::{Error, Result};
use crate::ncalg::Realization;
use crate::poly::{Field, UPoly};
use crate::scalars::{Case, ParamScalar};
use crate::verma::GradedWord;
use crate::weylaction::TauExpr;
use num::{BigInt, BigRational, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < cs.len() {
        let c = cs[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let st = k;
            while k < cs.len() && cs[k].is_ascii_digit() {
                k += 1;
            }
            let t: String = cs[st..k].iter().collect();
            out.push(Tok::Num(t.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let st = k;
            while k < cs.len() && (cs[k].is_ascii_alphanumeric() || cs[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(cs[st..k].iter().collect()));
        } else if "+-*/^(){}".contains(c) {
            out.push(Tok::Sym(c));
            k += 1;
        } else {
            return Err(Error::Precondition(format!("unexpected character '{c}' in {s:?}")));
        }
    }
    Ok(out)
}

/// Parsed expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `base^{expr}`.
    PowExpr(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(format!("expected '{c}' at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = if self.eat('-') { Expr::Neg(Box::new(self.term()?)) } else { self.term()? };
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Sym('(')))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.power()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.power()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.power()?));
            } else if self.starts_atom() {
                e = Expr::Mul(Box::new(e), Box::new(self.power()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let v = n.to_i64().ok_or_else(|| err("exponent out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(err(format!("expected an integer exponent at token {}", self.pos))),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        if self.eat('{') {
            let e = self.expr()?;
            self.expect('}')?;
            return Ok(Expr::PowExpr(Box::new(base), Box::new(e)));
        }
        let n = if self.eat('(') {
            let n = self.int()?;
            self.expect(')')?;
            n
        } else {
            self.int()?
        };
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            t => Err(err(format!("unexpected {t:?} at token {}", self.pos))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    if p.toks.is_empty() {
        return Err(err("empty expression"));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(format!("trailing input at token {} in {s:?}", p.pos)));
    }
    Ok(e)
}

/// Interpretation of an [`Expr`] in some algebra.
trait Eval {
    type V: Clone;
    fn num(&self, n: &BigInt) -> Result<Self::V>;
    fn ident(&self, s: &str) -> Result<Self::V>;
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V>;
    fn neg(&self, a: Self::V) -> Result<Self::V>;
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V>;
    fn div(&self, a: Self::V, b: Self::V) -> Result<Self::V>;
    fn one(&self) -> Self::V;

    fn pow(&self, base: &Expr, n: i64) -> Result<Self::V> {
        let b = self.eval(base)?;
        let mut acc = self.one();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(acc, b.clone())?;
        }
        if n < 0 {
            acc = self.div(self.one(), acc)?;
        }
        Ok(acc)
    }

    fn pow_expr(&self, _base: &Expr, _e: &Expr) -> Result<Self::V> {
        Err(err("symbolic exponents are not available here"))
    }

    fn eval(&self, e: &Expr) -> Result<Self::V> {
        match e {
            Expr::Num(n) => self.num(n),
            Expr::Ident(s) => self.ident(s),
            Expr::Neg(a) => self.neg(self.eval(a)?),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?),
            Expr::Sub(a, b) => {
                let nb = self.neg(self.eval(b)?)?;
                self.add(self.eval(a)?, nb)
            }
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?),
            Expr::Div(a, b) => self.div(self.eval(a)?, self.eval(b)?),
            Expr::Pow(a, n) => self.pow(a, *n),
            Expr::PowExpr(a, x) => self.pow_expr(a, x),
        }
    }
}

fn field_from_big<F: Field>(n: &BigInt) -> F {
    if let Some(v) = n.to_i64() {
        return F::from_i64(v);
    }
    let base = F::from_i64(1_000_000_000);
    let (_, digits) = n.to_radix_be(1_000_000_000);
    let mut acc = F::zero();
    for d in digits {
        acc = acc * &base + F::from_i64(d as i64);
    }
    acc
}

fn label_index(d: &RootDatum, s: &str, prefix: char) -> Option<usize> {
    let rest = s.strip_prefix(prefix)?;
    d.labels().iter().position(|l| l == rest)
}

fn symbol_index(d: &RootDatum, s: &str) -> Option<usize> {
    d.coroot_names().iter().position(|l| l == s)
}

/// Linear form `Σ γ_b b + n` inside `q^{…}`.
struct LinearEval<'a> {
    d: &'a RootDatum,
}

impl Eval for LinearEval<'_> {
    type V = (Vec<i64>, i64);
    fn num(&self, n: &BigInt) -> Result<Self::V> {
        Ok((vec![0; self.d.lattice_rank()], n.to_i64().ok_or_else(|| err("integer out of range"))?))
    }
    fn ident(&self, s: &str) -> Result<Self::V> {
        let b = symbol_index(self.d, s).ok_or_else(|| err(format!("unknown symbol {s}")))?;
        let mut g = vec![0; self.d.lattice_rank()];
        g[b] = 1;
        Ok((g, 0))
    }
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok((a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect(), a.1 + b.1))
    }
    fn neg(&self, a: Self::V) -> Result<Self::V> {
        Ok((a.0.iter().map(|x| -x).collect(), -a.1))
    }
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        let (k, v) = if a.0.iter().all(|&x| x == 0) {
            (a.1, b)
        } else if b.0.iter().all(|&x| x == 0) {
            (b.1, a)
        } else {
            return Err(err("exponent is not linear"));
        };
        Ok((v.0.iter().map(|x| k * x).collect(), k * v.1))
    }
    fn div(&self, _a: Self::V, _b: Self::V) -> Result<Self::V> {
        Err(err("division inside an exponent"))
    }
    fn one(&self) -> Self::V {
        (vec![0; self.d.lattice_rank()], 1)
    }
}

/// Elements of a realization.
struct ElemEval<'a, R: Realization> {
    r: &'a R,
}

impl<R: Realization> ElemEval<'_, R> {
    fn inverse(&self, a: &R::Elem) -> Result<R::Elem> {
        match self.r.inverse(a) {
            Some(x) => Ok(x),
            None => Ok(self.r.scalar(self.scalar_inverse(a)?)),
        }
    }

    fn scalar_inverse(&self, a: &R::Elem) -> Result<R::Scalar> {
        let s = self.r.as_scalar(a).ok_or_else(|| err("division by a non-scalar"))?;
        let v = s.as_value().ok_or_else(|| err("division by a parameter-dependent scalar"))?;
        if Field::is_zero(&v) {
            return Err(err("division by zero"));
        }
        Ok(R::Scalar::from_value(&v.inv()))
    }

    fn q(&self) -> Result<R::Scalar> {
        <R::Scalar as ParamScalar>::Value::q_var()
            .map(|v| R::Scalar::from_value(&v))
            .ok_or_else(|| err("q is not available in this realization"))
    }
}

impl<R: Realization> Eval for ElemEval<'_, R> {
    type V = R::Elem;
    fn num(&self, n: &BigInt) -> Result<Self::V> {
        Ok(self.r.scalar(R::Scalar::from_value(&field_from_big(n))))
    }
    fn ident(&self, s: &str) -> Result<Self::V> {
        let d = self.r.datum();
        if let Some(i) = label_index(d, s, 'f') {
            return Ok(self.r.generator(i));
        }
        if let Some(e) = self.r.named_element(s) {
            return Ok(e);
        }
        if s == "q" {
            return Ok(self.r.scalar(self.q()?));
        }
        match symbol_index(d, s) {
            Some(b) if R::Scalar::CASE == Case::Km => Ok(self.r.scalar(R::Scalar::basis_symbol(b))),
            Some(_) => Err(err(format!("symbol {s} appears only in exponents of q here"))),
            None => Err(err(format!("unknown identifier {s}"))),
        }
    }
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(self.r.add(&a, &b))
    }
    fn neg(&self, a: Self::V) -> Result<Self::V> {
        Ok(self.r.scale(&(-R::Scalar::one()), &a))
    }
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(self.r.multiply(&a, &b)?)
    }
    fn div(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(self.r.multiply(&a, &self.inverse(&b)?)?)
    }
    fn one(&self) -> Self::V {
        self.r.one()
    }
    fn pow(&self, base: &Expr, n: i64) -> Result<Self::V> {
        if let Expr::Ident(s) = base {
            if let Some(i) = label_index(self.r.datum(), s, 'f') {
                return Ok(self.r.generator_power(i, n)?);
            }
        }
        let b = self.eval(base)?;
        let mut acc = self.one();
        for _ in 0..n.unsigned_abs() {
            acc = self.r.multiply(&acc, &b)?;
        }
        if n < 0 {
            acc = self.inverse(&acc)?;
        }
        Ok(acc)
    }
    fn pow_expr(&self, base: &Expr, e: &Expr) -> Result<Self::V> {
        if base != &Expr::Ident("q".into()) {
            return Err(err("only q takes a symbolic exponent"));
        }
        let (gamma, k) = LinearEval { d: self.r.datum() }.eval(e)?;
        let s = R::Scalar::symbol_power(&gamma).ok_or_else(|| err("q^{..} is not available in this realization"))?;
        let q = self.q()?;
        let mut qk = R::Scalar::one();
        for _ in 0..k.unsigned_abs() {
            qk = qk * &q;
        }
        let qk = if k < 0 { R::Scalar::from_value(&qk.as_value().expect("parameter free").inv()) } else { qk };
        Ok(self.r.scalar(s * &qk))
    }
}

/// An element of the realization from its printed form.
pub fn parse_elem<R: Realization>(r: &R, s: &str) -> Result<R::Elem> {
    ElemEval { r }.eval(&parse_expr(s)?)
}

/// Split `P * tau[w]` into `P` and `w`.
fn split_tau(s: &str) -> Result<(&str, &str)> {
    let k = s.rfind("tau[").ok_or_else(|| err("missing tau[...]"))?;
    let inner = s[k + 4..].trim_end().strip_suffix(']').ok_or_else(|| err("unclosed tau["))?;
    let head = s[..k].trim_end();
    let head = head.strip_suffix('*').ok_or_else(|| err("expected '*' before tau["))?.trim();
    Ok((head, inner))
}

/// A τ-expression printed by `render_tau`.
pub fn parse_tau<R: Realization>(r: &R, s: &str) -> Result<TauExpr<R::Elem>> {
    let (head, w) = split_tau(s)?;
    Ok(TauExpr { prefactor: parse_elem(r, head)?, nu: r.datum().parse_weight(w)? })
}

struct PoissonEval<'a> {
    c: &'a ClassicalContext,
}

impl Eval for PoissonEval<'_> {
    type V = PoissonElement;
    fn num(&self, n: &BigInt) -> Result<Self::V> {
        Ok(PoissonElement::constant(BigRational::from_integer(n.clone())))
    }
    fn ident(&self, s: &str) -> Result<Self::V> {
        let d = self.c.datum();
        if let Some(i) = label_index(d, s, 'f') {
            return Ok(self.c.f(i));
        }
        symbol_index(d, s).map(|b| self.c.symbol(b)).ok_or_else(|| err(format!("unknown identifier {s}")))
    }
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(a.add(&b))
    }
    fn neg(&self, a: Self::V) -> Result<Self::V> {
        Ok(a.neg())
    }
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(a.mul(&b))
    }
    fn div(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(a.mul(&b.inv()?))
    }
    fn one(&self) -> Self::V {
        PoissonElement::one()
    }
}

pub fn parse_poisson(c: &ClassicalContext, s: &str) -> Result<PoissonElement> {
    PoissonEval { c }.eval(&parse_expr(s)?)
}

pub fn parse_classical_tau(c: &ClassicalContext, s: &str) -> Result<ClassicalTau> {
    let (head, w) = split_tau(s)?;
    Ok(ClassicalTau { cocycle: parse_poisson(c, head)?, nu: c.datum().parse_weight(w)? })
}

struct UPolyEval<'a> {
    var: &'a str,
}

impl Eval for UPolyEval<'_> {
    type V = UPoly;
    fn num(&self, n: &BigInt) -> Result<Self::V> {
        Ok(UPoly::constant(BigRational::from_integer(n.clone())))
    }
    fn ident(&self, s: &str) -> Result<Self::V> {
        if s == self.var {
            Ok(UPoly::x())
        } else {
            Err(err(format!("unknown identifier {s}")))
        }
    }
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(&a + &b)
    }
    fn neg(&self, a: Self::V) -> Result<Self::V> {
        Ok(-a)
    }
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(&a * &b)
    }
    fn div(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        match b.is_constant() && !b.is_zero() {
            true => Ok(a.scale(&b.lead().recip())),
            false => Err(err("division by a non-constant polynomial")),
        }
    }
    fn one(&self) -> Self::V {
        UPoly::one()
    }
}

pub fn parse_upoly(var: &str, s: &str) -> Result<UPoly> {
    UPolyEval { var }.eval(&parse_expr(s)?)
}

struct WordEval<'a, F> {
    labels: &'a [String],
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> WordEval<'_, F> {
    fn scalar(&self, a: &GradedWord<F>) -> Result<F> {
        match a.terms().collect::<Vec<_>>().as_slice() {
            [] => Ok(F::zero()),
            [(w, c)] if w.is_empty() => Ok((*c).clone()),
            _ => Err(err("division by a non-scalar")),
        }
    }
}

impl<F: Field> Eval for WordEval<'_, F> {
    type V = GradedWord<F>;
    fn num(&self, n: &BigInt) -> Result<Self::V> {
        Ok(GradedWord::one().scale(&field_from_big(n)))
    }
    fn ident(&self, s: &str) -> Result<Self::V> {
        if let Some(i) = s.strip_prefix('f').and_then(|l| self.labels.iter().position(|x| x == l)) {
            return Ok(GradedWord::word(&[i]));
        }
        match (s, F::q_var()) {
            ("q", Some(q)) => Ok(GradedWord::one().scale(&q)),
            _ => Err(err(format!("unknown identifier {s}"))),
        }
    }
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(a.add(&b))
    }
    fn neg(&self, a: Self::V) -> Result<Self::V> {
        Ok(a.scale(&(-F::one())))
    }
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        Ok(a.mul(&b))
    }
    fn div(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        let c = self.scalar(&b)?;
        if Field::is_zero(&c) {
            return Err(err("division by zero"));
        }
        Ok(a.scale(&c.inv()))
    }
    fn one(&self) -> Self::V {
        GradedWord::one()
    }
}

/// A free-algebra element printed by `GradedWord::render`.
pub fn parse_word<F: Field>(labels: &[String], s: &str) -> Result<GradedWord<F>> {
    WordEval { labels, _f: std::marker::PhantomData }.eval(&parse_expr(s)?)
}

/// A rational number such as `-3/4`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let p = parse_upoly("x", s)?;
    match p.degree() {
        None => Ok(<BigRational as Zero>::zero()),
        Some(0) => Ok(p.lead()),
        _ => Err(err(format!("{s} is not a number"))),
    }
}

#[cfg(test)]
mod tests;
