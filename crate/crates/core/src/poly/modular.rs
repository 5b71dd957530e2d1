//! Linear systems over `ℚ(q)` solved by specialization: `q` is evaluated at points of
//! `𝔽_p` for word-sized primes `p`, the unknowns are rebuilt there by Thiele interpolation,
//! lifted to `ℚ(q)` by Chinese remaindering and rational reconstruction, and accepted only
//! after an exact check.

use super::linalg::Solution;
use super::{RatFunc, UPoly};
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

/// Samples tried per prime before giving up on it.
const MAX_SAMPLES: u64 = 2000;
/// Matches in a row required before a reconstruction is trusted.
const STABLE_HITS: usize = 3;
/// Primes tried before falling back to exact elimination.
const MAX_PRIMES: usize = 24;
/// Rank-deficient samples in a row taken as a genuine kernel.
const DEFICIENT_RUN: usize = 8;

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for b in BASES {
        let mut x = powm(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, descending.
fn primes() -> impl Iterator<Item = u64> {
    (0..).map(|k| (1u64 << 62) - 1 - 2 * k).filter(|&n| is_prime(n))
}

fn rat_mod(r: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = r.numer().mod_floor(&pb).to_u64()?;
    Some(mulm(n, invm(d, p), p))
}

/// A rational function with coefficients reduced mod `p`.
struct ModRat {
    num: Vec<u64>,
    den: Vec<u64>,
}

impl ModRat {
    fn new(f: &RatFunc, p: u64) -> Option<Self> {
        let red = |u: &UPoly| u.coeffs().iter().map(|c| rat_mod(c, p)).collect::<Option<Vec<u64>>>();
        let den = red(f.denom())?;
        if den.iter().all(|&c| c == 0) {
            return None;
        }
        Some(ModRat { num: red(f.numer())?, den })
    }

    fn eval(&self, x: u64, p: u64) -> Option<u64> {
        let d = horner(&self.den, x, p);
        (d != 0).then(|| mulm(horner(&self.num, x, p), invm(d, p), p))
    }
}

fn horner(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| addm(mulm(acc, x, p), a, p))
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (0..a.len().max(b.len()))
        .map(|k| addm(*a.get(k).unwrap_or(&0), *b.get(k).unwrap_or(&0), p))
        .collect();
    trim(&mut v);
    v
}

fn poly_scale(a: &[u64], s: u64, p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|&c| mulm(c, s, p)).collect();
    trim(&mut v);
    v
}

/// `(q − x)·a`.
fn poly_mul_linear(a: &[u64], x: u64, p: u64) -> Vec<u64> {
    let mut v = vec![0; a.len() + 1];
    for (k, &c) in a.iter().enumerate() {
        v[k + 1] = addm(v[k + 1], c, p);
        v[k] = subm(v[k], mulm(c, x, p), p);
    }
    trim(&mut v);
    v
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let inv = invm(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let c = mulm(*r.last().unwrap(), inv, p);
        let off = r.len() - b.len();
        for (k, &bk) in b.iter().enumerate() {
            r[off + k] = subm(r[off + k], mulm(c, bk, p), p);
        }
        trim(&mut r);
    }
    r
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let inv = invm(*b.last().unwrap(), p);
    let mut q = vec![0; a.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let c = mulm(*r.last().unwrap(), inv, p);
        let off = r.len() - b.len();
        q[off] = c;
        for (k, &bk) in b.iter().enumerate() {
            r[off + k] = subm(r[off + k], mulm(c, bk, p), p);
        }
        trim(&mut r);
    }
    q
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

#[derive(Default)]
struct Thiele {
    xs: Vec<u64>,
    a: Vec<u64>,
    hits: usize,
}

impl Thiele {
    fn eval(&self, x: u64, p: u64) -> Option<u64> {
        let mut v = *self.a.last()?;
        for j in (0..self.a.len() - 1).rev() {
            if v == 0 {
                return None;
            }
            v = addm(self.a[j], mulm(subm(x, self.xs[j], p), invm(v, p), p), p);
        }
        Some(v)
    }

    fn push(&mut self, x: u64, y: u64, p: u64) {
        if self.eval(x, p) == Some(y) {
            self.hits += 1;
            return;
        }
        self.hits = 0;
        let mut v = y;
        for (&xj, &aj) in self.xs.iter().zip(&self.a) {
            let d = subm(v, aj, p);
            if d == 0 {
                return;
            }
            v = mulm(subm(x, xj, p), invm(d, p), p);
        }
        self.xs.push(x);
        self.a.push(v);
    }

    /// Reduced `(num, den)` with monic `den`.
    fn fraction(&self, p: u64) -> Option<(Vec<u64>, Vec<u64>)> {
        let Some(&last) = self.a.last() else {
            return Some((vec![], vec![1]));
        };
        let (mut n, mut d) = (vec![last], vec![1]);
        trim(&mut n);
        for j in (0..self.a.len() - 1).rev() {
            let nn = poly_add(&poly_scale(&n, self.a[j], p), &poly_mul_linear(&d, self.xs[j], p), p);
            d = n;
            n = nn;
        }
        if d.is_empty() {
            return None;
        }
        if n.is_empty() {
            return Some((vec![], vec![1]));
        }
        let g = poly_gcd(&n, &d, p);
        let (n, d) = (poly_div_exact(&n, &g, p), poly_div_exact(&d, &g, p));
        let s = invm(*d.last().unwrap(), p);
        Some((poly_scale(&n, s, p), poly_scale(&d, s, p)))
    }
}

enum Specialized {
    /// Rank of `A` is full and `A x = b` has no solution.
    Inconsistent,
    RankDeficient,
    Solved(Vec<u64>),
}

fn solve_mod(cols: &[Vec<u64>], b: &[u64], p: u64) -> Specialized {
    let n = cols.len();
    let mut rows: Vec<Vec<u64>> = (0..b.len())
        .map(|r| cols.iter().map(|c| c[r]).chain([b[r]]).collect())
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..=n {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = invm(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        let pr = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pr) {
                    *x = subm(*x, mulm(f, y, p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let rank_a = pivots.iter().filter(|&&c| c < n).count();
    if rank_a < n {
        return Specialized::RankDeficient;
    }
    if pivots.contains(&n) {
        return Specialized::Inconsistent;
    }
    Specialized::Solved((0..n).map(|k| rows[k][n]).collect())
}

/// Images of every unknown mod one prime, or why the prime gave none.
enum PrimeResult {
    Images(Vec<(Vec<u64>, Vec<u64>)>),
    Inconsistent,
    Kernel,
    Skip,
}

fn run_prime(cols: &[Vec<RatFunc>], b: &[RatFunc], p: u64) -> PrimeResult {
    let red = |v: &[RatFunc]| v.iter().map(|f| ModRat::new(f, p)).collect::<Option<Vec<_>>>();
    let Some(mc) = cols.iter().map(|c| red(c)).collect::<Option<Vec<_>>>() else {
        return PrimeResult::Skip;
    };
    let Some(mb) = red(b) else {
        return PrimeResult::Skip;
    };
    let mut th: Vec<Thiele> = (0..cols.len()).map(|_| Thiele::default()).collect();
    let mut deficient = 0;
    'points: for x in 2..MAX_SAMPLES {
        let mut ce = Vec::with_capacity(mc.len());
        for col in &mc {
            let mut v = Vec::with_capacity(col.len());
            for e in col {
                match e.eval(x, p) {
                    Some(y) => v.push(y),
                    None => continue 'points,
                }
            }
            ce.push(v);
        }
        let mut be = Vec::with_capacity(mb.len());
        for e in &mb {
            match e.eval(x, p) {
                Some(y) => be.push(y),
                None => continue 'points,
            }
        }
        match solve_mod(&ce, &be, p) {
            // specialization cannot raise the rank, so this holds over ℚ(q)
            Specialized::Inconsistent => return PrimeResult::Inconsistent,
            Specialized::RankDeficient => {
                deficient += 1;
                if deficient >= DEFICIENT_RUN {
                    return PrimeResult::Kernel;
                }
            }
            Specialized::Solved(xs) => {
                deficient = 0;
                for (t, y) in th.iter_mut().zip(xs) {
                    t.push(x, y, p);
                }
                if th.iter().all(|t| t.hits >= STABLE_HITS) {
                    return match th.iter().map(|t| t.fraction(p)).collect() {
                        Some(v) => PrimeResult::Images(v),
                        None => PrimeResult::Skip,
                    };
                }
            }
        }
    }
    PrimeResult::Skip
}

/// `r/s ≡ a (mod m)` with `|r|, |s| ≤ √(m/2)`.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Coefficient images accumulated over several primes.
struct Lift {
    modulus: BigInt,
    /// Per unknown: numerator then denominator coefficients.
    residues: Vec<(Vec<BigInt>, Vec<BigInt>)>,
}

impl Lift {
    fn shape(&self) -> Vec<(usize, usize)> {
        self.residues.iter().map(|(n, d)| (n.len(), d.len())).collect()
    }

    fn absorb(&mut self, img: &[(Vec<u64>, Vec<u64>)], p: u64) {
        let pb = BigInt::from(p);
        let minv = BigInt::from(invm((&self.modulus % &pb).to_u64().unwrap(), p));
        let crt = |a: &mut BigInt, b: u64| {
            let t = ((BigInt::from(b) - &*a) * &minv).mod_floor(&pb);
            *a += &self.modulus * t;
        };
        for ((n, d), (ni, di)) in self.residues.iter_mut().zip(img) {
            n.iter_mut().zip(ni).for_each(|(a, &b)| crt(a, b));
            d.iter_mut().zip(di).for_each(|(a, &b)| crt(a, b));
        }
        self.modulus *= pb;
    }

    fn reconstruct(&self) -> Option<Vec<RatFunc>> {
        let poly = |v: &[BigInt]| {
            v.iter().map(|a| rational_reconstruct(a, &self.modulus)).collect::<Option<Vec<_>>>().map(UPoly::from_coeffs)
        };
        self.residues.iter().map(|(n, d)| Some((poly(n)?, poly(d)?))).map(|nd| {
            let (n, d) = nd?;
            if d.is_zero() {
                return None;
            }
            Some(if n.is_zero() { RatFunc::zero() } else { RatFunc::new(n, d) })
        }).collect()
    }
}

fn size(shape: &[(usize, usize)]) -> usize {
    shape.iter().map(|(a, b)| a + b).sum()
}

/// Exact `Σ_k x_k cols[k] = b`, clearing denominators of `x` first so that products
/// stay on the Laurent fast paths whenever the inputs are Laurent.
fn satisfies(cols: &[Vec<RatFunc>], b: &[RatFunc], x: &[RatFunc]) -> bool {
    let mut den = UPoly::one();
    for xk in x {
        if !xk.denom().is_one() {
            let g = UPoly::gcd(&den, xk.denom());
            den = &den * &xk.denom().div_exact(&g).unwrap();
        }
    }
    let nums: Vec<RatFunc> = x.iter().map(|xk| {
        RatFunc::from_poly(xk.numer() * &den.div_exact(xk.denom()).unwrap())
    }).collect();
    let dd = RatFunc::from_poly(den);
    (0..b.len()).all(|r| {
        let mut acc = RatFunc::zero();
        for (col, xk) in cols.iter().zip(&nums) {
            if !xk.is_zero() && !col[r].is_zero() {
                acc = &acc + &(&col[r] * xk);
            }
        }
        acc == &b[r] * &dd
    })
}

/// `A x = b` over `ℚ(q)`; exact elimination is the fallback when specialization is
/// inconclusive.
pub fn solve_modular(cols: &[Vec<RatFunc>], b: &[RatFunc]) -> Solution<RatFunc> {
    if cols.is_empty() || b.is_empty() {
        return super::linalg::solve(cols, b);
    }
    let mut lift: Option<Lift> = None;
    let mut last: Option<Vec<RatFunc>> = None;
    for p in primes().take(MAX_PRIMES) {
        let img = match run_prime(cols, b, p) {
            PrimeResult::Images(v) => v,
            PrimeResult::Inconsistent => return Solution { x: None, nullity: 0 },
            PrimeResult::Kernel => break,
            PrimeResult::Skip => continue,
        };
        let shape: Vec<(usize, usize)> = img.iter().map(|(n, d)| (n.len(), d.len())).collect();
        match &mut lift {
            Some(l) if l.shape() == shape => l.absorb(&img, p),
            // unlucky primes lose degree; keep the larger shape
            Some(l) if size(&shape) < size(&l.shape()) => continue,
            _ => {
                let to_big = |v: &[u64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
                lift = Some(Lift {
                    modulus: BigInt::from(p),
                    residues: img.iter().map(|(n, d)| (to_big(n), to_big(d))).collect(),
                });
                last = None;
                continue;
            }
        }
        let Some(cand) = lift.as_ref().unwrap().reconstruct() else {
            continue;
        };
        // a candidate already refuted is not retried until more primes change it
        if last.as_ref() != Some(&cand) && satisfies(cols, b, &cand) {
            return Solution { x: Some(cand), nullity: 0 };
        }
        last = Some(cand);
    }
    super::linalg::solve(cols, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps[0], 4611686018427387847);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(!is_prime(4611686018427387903));
        assert!(is_prime(2305843009213693951));
    }

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(1_000_000_007u64);
        for (r, s) in [(3i64, 7i64), (-5, 11), (0, 1), (12, 1)] {
            let a = (BigInt::from(r) * BigInt::from(invm(s.rem_euclid(1_000_000_007) as u64, 1_000_000_007))).mod_floor(&m);
            assert_eq!(rational_reconstruct(&a, &m), Some(BigRational::new(r.into(), s.into())));
        }
    }
}
