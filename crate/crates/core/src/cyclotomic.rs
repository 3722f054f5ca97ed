//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! A [`CycNum`] is a polynomial in a primitive N-th root of unity, reduced
//! modulo the N-th cyclotomic polynomial, with arbitrary-precision rational
//! coefficients. The representative modulo Phi_N is canonical, so two values
//! at the same conductor are equal iff their coefficient vectors are equal;
//! values at different conductors are compared after lifting both to the
//! least common multiple.
//!
//! Multiplication works on integer numerators over a shared denominator and
//! consults a per-conductor reduction table (powers zeta^k for k >= phi(N)
//! rewritten in the power basis), cached globally behind a spin lock.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

/// Errors raised by cyclotomic field arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycError {
    /// Attempt to divide by zero or invert zero.
    DivisionByZero,
    /// Galois automorphism exponent is not coprime to the conductor.
    NotCoprime { k: i64, conductor: u32 },
    /// Conductor lift target is not a multiple of the source conductor.
    NotAMultiple { from: u32, to: u32 },
}

impl fmt::Display for CycError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycError::DivisionByZero => write!(f, "division by zero in Q(zeta_N)"),
            CycError::NotCoprime { k, conductor } => {
                write!(f, "exponent {k} is not coprime to conductor {conductor}")
            }
            CycError::NotAMultiple { from, to } => {
                write!(f, "cannot lift conductor {from} to non-multiple {to}")
            }
        }
    }
}

impl core::error::Error for CycError {}

/// Euler totient by trial factorization.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u32 {
    let l = (a as u64 / a.gcd(&b) as u64) * b as u64;
    u32::try_from(l).expect("conductor lcm overflow")
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------
// Integer polynomials: just enough for cyclotomic polynomial construction.
// ---------------------------------------------------------------------------

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// division must leave no remainder (both hold for cyclotomic factors).
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] -= &c * dj;
                }
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// The N-th cyclotomic polynomial Phi_N, constant coefficient first.
///
/// Computed by exact division of x^N - 1 by the product of Phi_d over the
/// proper divisors d of N.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut memo: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for d in divisors(n) {
        let poly = if d == 1 {
            vec![-BigInt::one(), BigInt::one()]
        } else {
            // x^d - 1
            let mut num = vec![BigInt::zero(); d as usize + 1];
            num[0] = -BigInt::one();
            num[d as usize] = BigInt::one();
            let mut den = vec![BigInt::one()];
            for e in divisors(d) {
                if e < d {
                    den = int_poly_mul(&den, &memo[&e]);
                }
            }
            int_poly_exact_div(&num, &den)
        };
        memo.insert(d, poly);
    }
    memo.remove(&n).expect("n >= 1")
}

// ---------------------------------------------------------------------------
// Per-conductor reduction data.
// ---------------------------------------------------------------------------

/// Rewrite rules for powers of zeta_N beyond the power basis.
struct Reducer {
    conductor: u32,
    phi: usize,
    /// rows[k - phi] expresses zeta^k (phi <= k < N) in the power basis;
    /// entries are integers because Phi_N is monic with integer coefficients.
    rows: Vec<Vec<BigInt>>,
}

static REDUCERS: spin::Mutex<BTreeMap<u32, Arc<Reducer>>> = spin::Mutex::new(BTreeMap::new());

impl Reducer {
    fn get(n: u32) -> Arc<Reducer> {
        assert!(n >= 1, "conductor must be positive");
        let mut cache = REDUCERS.lock();
        cache.entry(n).or_insert_with(|| Arc::new(Reducer::build(n))).clone()
    }

    fn build(n: u32) -> Reducer {
        let phi = euler_phi(n) as usize;
        let phi_poly = cyclotomic_polynomial(n);
        debug_assert_eq!(phi_poly.len(), phi + 1);
        let count = n as usize - phi;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(count);
        if count > 0 {
            // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
            let first: Vec<BigInt> = phi_poly[..phi].iter().map(|c| -c).collect();
            rows.push(first);
            for _ in 1..count {
                let prev = rows.last().unwrap();
                let mut shifted = vec![BigInt::zero(); phi];
                let top = prev[phi - 1].clone();
                for i in 1..phi {
                    shifted[i] = prev[i - 1].clone();
                }
                if !top.is_zero() {
                    for (i, r) in rows[0].iter().enumerate() {
                        shifted[i] += &top * r;
                    }
                }
                rows.push(shifted);
            }
        }
        Reducer { conductor: n, phi, rows }
    }

    /// Reduce an integer coefficient vector indexed by zeta exponent (any
    /// length) to the canonical power basis of length phi(N).
    fn reduce_int(&self, raw: &[BigInt]) -> Vec<BigInt> {
        let n = self.conductor as usize;
        let mut folded = vec![BigInt::zero(); n];
        for (e, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                folded[e % n] += c;
            }
        }
        let mut out: Vec<BigInt> = folded[..self.phi].to_vec();
        for k in self.phi..n {
            let c = &folded[k];
            if c.is_zero() {
                continue;
            }
            for (i, r) in self.rows[k - self.phi].iter().enumerate() {
                if !r.is_zero() {
                    out[i] += c * r;
                }
            }
        }
        out
    }
}

/// Split rational coefficients into integer numerators over one denominator.
fn denom_split(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

fn denom_join(nums: Vec<BigInt>, den: &BigInt) -> Vec<BigRational> {
    nums.into_iter().map(|n| BigRational::new(n, den.clone())).collect()
}

// ---------------------------------------------------------------------------
// Rational polynomials: just enough for the extended Euclid inverse.
// ---------------------------------------------------------------------------

fn rp_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn rp_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    rp_trim(out)
}

fn rp_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    rp_trim(out)
}

/// Quotient and remainder of rational polynomials; `b` must be nonzero.
fn rp_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (Vec::new(), rp_trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        if rem[k + db].is_zero() {
            continue;
        }
        let c = &rem[k + db] / lead;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let t = &c * bj;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    (rp_trim(quot), rp_trim(rem))
}

// ---------------------------------------------------------------------------
// CycNum
// ---------------------------------------------------------------------------

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// `coeffs` has length phi(N) and represents a polynomial in zeta_N reduced
/// modulo Phi_N; the representative is canonical, and arithmetic between
/// different conductors lifts both operands to the least common multiple.
#[derive(Clone)]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum(N={}; {:?})", self.conductor, self.coeffs)
    }
}

impl CycNum {
    /// Zero at conductor 1.
    pub fn zero() -> CycNum {
        CycNum { conductor: 1, coeffs: vec![BigRational::zero()] }
    }

    /// One at conductor 1.
    pub fn one() -> CycNum {
        CycNum { conductor: 1, coeffs: vec![BigRational::one()] }
    }

    pub fn from_integer(v: i64) -> CycNum {
        CycNum::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: BigRational) -> CycNum {
        CycNum { conductor: 1, coeffs: vec![r] }
    }

    /// Exact rational p/q.
    pub fn from_ratio(p: i64, q: i64) -> CycNum {
        assert!(q != 0, "zero denominator");
        CycNum::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The canonical representative of zeta_N^k at conductor N.
    pub fn root_of_unity(n: u32, k: i64) -> CycNum {
        assert!(n >= 1, "conductor must be positive");
        let red = Reducer::get(n);
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        let ints = red.reduce_int(&raw);
        CycNum { conductor: n, coeffs: denom_join(ints, &BigInt::one()) }
    }

    /// Build from explicit power-basis coefficients (length must be phi(N)).
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> CycNum {
        assert!(n >= 1, "conductor must be positive");
        assert_eq!(
            coeffs.len(),
            euler_phi(n) as usize,
            "coefficient vector must have length phi(N)"
        );
        CycNum { conductor: n, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it is one. The canonical
    /// representative of a rational has zero coefficients beyond the constant
    /// term at every conductor, so this is a plain coefficient check.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lift to a conductor that is a multiple of the current one.
    pub fn lift_to(&self, n: u32) -> Result<CycNum, CycError> {
        if n == self.conductor {
            return Ok(self.clone());
        }
        if n % self.conductor != 0 {
            return Err(CycError::NotAMultiple { from: self.conductor, to: n });
        }
        let red = Reducer::get(n);
        let step = (n / self.conductor) as usize;
        let (nums, den) = denom_split(&self.coeffs);
        let mut raw = vec![BigInt::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in nums.into_iter().enumerate() {
            raw[i * step] = c;
        }
        let ints = red.reduce_int(&raw);
        Ok(CycNum { conductor: n, coeffs: denom_join(ints, &den) })
    }

    fn lifted_pair(&self, other: &CycNum) -> (u32, Vec<BigRational>, Vec<BigRational>) {
        let n = lcm_u32(self.conductor, other.conductor);
        let a = if n == self.conductor {
            self.coeffs.clone()
        } else {
            self.lift_to(n).expect("lcm is a multiple").coeffs
        };
        let b = if n == other.conductor {
            other.coeffs.clone()
        } else {
            other.lift_to(n).expect("lcm is a multiple").coeffs
        };
        (n, a, b)
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let (n, mut a, b) = self.lifted_pair(other);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        CycNum { conductor: n, coeffs: a }
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        let (n, mut a, b) = self.lifted_pair(other);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x -= y;
        }
        CycNum { conductor: n, coeffs: a }
    }

    pub fn neg(&self) -> CycNum {
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Multiply by a rational scalar without changing the conductor.
    pub fn scale(&self, r: &BigRational) -> CycNum {
        if r.is_zero() {
            let phi = self.coeffs.len();
            return CycNum { conductor: self.conductor, coeffs: vec![BigRational::zero(); phi] };
        }
        CycNum { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        let n = lcm_u32(self.conductor, other.conductor);
        // scalar fast paths keep the full convolution off the common cases
        if let Some(r) = self.as_rational() {
            return other.scale(&r).lift_to(n).expect("lcm is a multiple");
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r).lift_to(n).expect("lcm is a multiple");
        }
        let (n, a, b) = self.lifted_pair(other);
        let red = Reducer::get(n);
        let (na, da) = denom_split(&a);
        let (nb, db) = denom_split(&b);
        let mut conv = vec![BigInt::zero(); na.len() + nb.len() - 1];
        for (i, ai) in na.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in nb.iter().enumerate() {
                if !bj.is_zero() {
                    conv[i + j] += ai * bj;
                }
            }
        }
        let ints = red.reduce_int(&conv);
        CycNum { conductor: n, coeffs: denom_join(ints, &(da * db)) }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo
    /// Phi_N (which is irreducible, so any nonzero element is invertible).
    pub fn inverse(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let phi = self.coeffs.len();
        let phi_poly: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut r0 = phi_poly;
        let mut t0: Vec<BigRational> = Vec::new();
        let mut r1 = rp_trim(self.coeffs.clone());
        let mut t1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = rp_divrem(&r0, &r1);
            let t = rp_sub(&t0, &rp_mul(&q, &t1));
            r0 = r1;
            t0 = t1;
            r1 = r;
            t1 = t;
        }
        debug_assert!(!r1.is_empty(), "gcd with irreducible Phi_N must be a unit");
        let c = &r1[0];
        let mut coeffs: Vec<BigRational> = t1.into_iter().map(|t| t / c).collect();
        debug_assert!(coeffs.len() <= phi);
        coeffs.resize(phi, BigRational::zero());
        Ok(CycNum { conductor: self.conductor, coeffs })
    }

    /// Exact field division; errors iff `other` is zero.
    pub fn div(&self, other: &CycNum) -> Result<CycNum, CycError> {
        if let Some(r) = other.as_rational() {
            if r.is_zero() {
                return Err(CycError::DivisionByZero);
            }
            let n = lcm_u32(self.conductor, other.conductor);
            return Ok(self.scale(&r.recip()).lift_to(n).expect("lcm is a multiple"));
        }
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power; negative exponents invert (zero base errors).
    pub fn pow(&self, e: i64) -> Result<CycNum, CycError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = CycNum::one().lift_to(self.conductor).expect("1 divides all");
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Apply the field automorphism zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
    pub fn galois_map(&self, k: i64) -> Result<CycNum, CycError> {
        let n = self.conductor;
        let kk = k.rem_euclid(n as i64);
        if gcd_i64(if kk == 0 { n as i64 } else { kk }, n as i64) != 1 {
            return Err(CycError::NotCoprime { k, conductor: n });
        }
        let red = Reducer::get(n);
        let (nums, den) = denom_split(&self.coeffs);
        let mut raw = vec![BigInt::zero(); n as usize];
        for (i, c) in nums.into_iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * kk as u64 % n as u64) as usize;
                raw[e] += c;
            }
        }
        let ints = red.reduce_int(&raw);
        Ok(CycNum { conductor: n, coeffs: denom_join(ints, &den) })
    }

    /// Complex conjugation, as the field automorphism zeta_N -> zeta_N^(N-1).
    pub fn conj(&self) -> CycNum {
        let n = self.conductor;
        self.galois_map(n as i64 - 1).expect("N-1 is coprime to N")
    }

    /// Rewrite at a divisor conductor when the value lies in the subfield.
    pub fn express_in(&self, d: u32) -> Option<CycNum> {
        if d == self.conductor {
            return Some(self.clone());
        }
        if self.conductor % d != 0 {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(CycNum::from_rational(r).lift_to(d).expect("1 divides all"));
        }
        let phi_d = euler_phi(d) as usize;
        let phi_n = self.coeffs.len();
        // columns: zeta_d^j lifted to the ambient conductor
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            let col = CycNum::root_of_unity(d, j as i64)
                .lift_to(self.conductor)
                .expect("d divides the conductor");
            cols.push(col.coeffs);
        }
        let sol = solve_columns(&cols, &self.coeffs, phi_n)?;
        Some(CycNum { conductor: d, coeffs: sol })
    }

    /// The canonical representative at the minimal conductor containing the
    /// value. Arithmetic never descends automatically; this is used for
    /// display and for cross-conductor canonical forms.
    pub fn try_descend(&self) -> CycNum {
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            if let Some(c) = self.express_in(d) {
                return c;
            }
        }
        self.clone()
    }
}

/// Solve sum_j x_j cols[j] = target over the rationals (unique solution or
/// none; the columns used here are always linearly independent).
fn solve_columns(
    cols: &[Vec<BigRational>],
    target: &[BigRational],
    rows: usize,
) -> Option<Vec<BigRational>> {
    let ncols = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            return None; // columns independent, so every column must pivot
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r][c..].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // consistency: remaining rows must have zero RHS
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    Some((0..ncols).map(|c| m[pivot_rows[c]][ncols].clone()).collect())
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.lifted_pair(other);
        a == b
    }
}

impl Eq for CycNum {}

impl core::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}

impl core::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}

impl core::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}

impl core::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    /// Renders at the minimal conductor, e.g. `1/2 + 1/2*z4` or `-z8^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.try_descend();
        if v.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in v.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if k == 0 {
                fmt_rational(&abs, f)?;
            } else {
                if !abs.is_one() {
                    fmt_rational(&abs, f)?;
                    write!(f, "*")?;
                }
                write!(f, "z{}", v.conductor)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ------------------------------------------------------------------
    // Independent polynomial oracle: naive rational-coefficient long
    // division and multiplication, sharing no code with the implementation.
    // ------------------------------------------------------------------

    fn orc_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn orc_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut rem: Vec<f64> = num.iter().map(|&x| x as f64).collect();
        let d: Vec<f64> = den.iter().map(|&x| x as f64).collect();
        let dn = den.len() - 1;
        assert!(num.len() > dn);
        let mut quot = vec![0f64; num.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dn] / d[dn];
            quot[k] = c;
            for j in 0..=dn {
                rem[k + j] -= c * d[j];
            }
        }
        let q: Vec<i64> = quot.iter().map(|&x| x.round() as i64).collect();
        let r: Vec<i64> = rem.iter().map(|&x| x.round() as i64).collect();
        (q, r)
    }

    fn as_i64(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn cyclotomic_polynomial_base_cases() {
        assert_eq!(as_i64(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
    }

    #[test]
    fn cyclotomic_polynomial_12_against_division_oracle() {
        // divide x^12 - 1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 with the oracle
        let mut den = vec![1i64];
        for d in [1u32, 2, 3, 4, 6] {
            den = orc_mul(&den, &as_i64(&cyclotomic_polynomial(d)));
        }
        let mut num = vec![0i64; 13];
        num[0] = -1;
        num[12] = 1;
        let (q, r) = orc_divmod(&num, &den);
        assert!(r.iter().all(|&c| c == 0));
        assert_eq!(as_i64(&cyclotomic_polynomial(12)), q);
        assert_eq!(q, vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_values() {
        for (n, phi) in [(1, 1), (2, 1), (3, 2), (4, 2), (5, 4), (8, 4), (12, 4), (20, 8), (24, 8), (120, 32)] {
            assert_eq!(euler_phi(n), phi, "phi({n})");
        }
    }

    #[test]
    fn root_of_unity_squares_to_minus_one() {
        let i = CycNum::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), CycNum::root_of_unity(4, 2));
        assert_eq!(i.mul(&i), CycNum::from_integer(-1));
    }

    #[test]
    fn fifth_roots_sum_to_zero() {
        let mut s = CycNum::zero();
        for k in 0..5 {
            s = s.add(&CycNum::root_of_unity(5, k));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = CycNum::root_of_unity(8, 1).add(&CycNum::root_of_unity(8, 7));
        assert_eq!(s.mul(&s), CycNum::from_integer(2));
    }

    #[test]
    fn cube_roots_multiply_to_one() {
        let a = CycNum::root_of_unity(3, 1);
        let b = CycNum::root_of_unity(3, 2);
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn inverse_contract() {
        let b = CycNum::one().sub(&CycNum::root_of_unity(5, 1));
        let inv = CycNum::one().div(&b).unwrap();
        assert!(inv.mul(&b).is_one());
    }

    #[test]
    fn division_by_zero_detected() {
        let z = CycNum::zero().lift_to(12).unwrap();
        assert_eq!(CycNum::one().div(&z), Err(CycError::DivisionByZero));
        assert_eq!(z.inverse(), Err(CycError::DivisionByZero));
    }

    /// Gauss sum for 5: zeta - zeta^2 - zeta^3 + zeta^4 is a square root of 5.
    fn gauss_sqrt5() -> CycNum {
        CycNum::root_of_unity(5, 1)
            .sub(&CycNum::root_of_unity(5, 2))
            .sub(&CycNum::root_of_unity(5, 3))
            .add(&CycNum::root_of_unity(5, 4))
    }

    #[test]
    fn gauss_sum_square_is_five_via_oracle() {
        // independent oracle: expand the square as an integer polynomial in
        // zeta, then reduce modulo Phi_5 by oracle long division
        let g = vec![0i64, 1, -1, -1, 1];
        let sq = orc_mul(&g, &g);
        let (_, r) = orc_divmod(&sq, &as_i64(&cyclotomic_polynomial(5)));
        let mut lifted = vec![0i64; 4];
        for (e, c) in r.iter().enumerate() {
            if *c != 0 {
                lifted[e] += c;
            }
        }
        assert_eq!(lifted, vec![5, 0, 0, 0]);
        assert_eq!(gauss_sqrt5().mul(&gauss_sqrt5()), CycNum::from_integer(5));
    }

    #[test]
    fn conj_examples() {
        let i = CycNum::root_of_unity(4, 1);
        assert_eq!(i.conj(), i.neg());
        let r = CycNum::from_ratio(3, 7);
        assert_eq!(r.conj(), r);
        let real = CycNum::root_of_unity(5, 1).add(&CycNum::root_of_unity(5, 4));
        assert_eq!(real.conj(), real);
    }

    #[test]
    fn galois_map_examples() {
        let z5 = CycNum::root_of_unity(5, 1);
        assert_eq!(z5.galois_map(2).unwrap(), CycNum::root_of_unity(5, 2));
        assert_eq!(gauss_sqrt5().galois_map(2).unwrap(), gauss_sqrt5().neg());
        let i = CycNum::root_of_unity(4, 1);
        assert_eq!(i.galois_map(3).unwrap(), i.conj());
        assert_eq!(
            z5.galois_map(5).unwrap_err(),
            CycError::NotCoprime { k: 5, conductor: 5 }
        );
    }

    #[test]
    fn lift_is_faithful() {
        let a = CycNum::root_of_unity(4, 1).add(&CycNum::from_ratio(1, 2));
        let lifted = a.lift_to(12).unwrap();
        assert_eq!(lifted.conductor(), 12);
        assert_eq!(lifted, a);
        assert_eq!(lifted.lift_to(24).unwrap(), a.lift_to(24).unwrap());
    }

    #[test]
    fn descend_finds_minimal_conductor() {
        let z8sq = CycNum::root_of_unity(8, 2);
        let d = z8sq.try_descend();
        assert_eq!(d.conductor(), 4);
        assert_eq!(d, CycNum::root_of_unity(4, 1));
        let r = CycNum::from_ratio(7, 3).lift_to(24).unwrap();
        assert_eq!(r.try_descend().conductor(), 1);
        // zeta_6 lives at conductor 3 canonically: zeta_6 = -zeta_3^2
        assert_eq!(CycNum::root_of_unity(6, 1).try_descend().conductor(), 3);
    }

    fn sample_values(conductor: u32) -> Vec<CycNum> {
        let phi = euler_phi(conductor) as usize;
        let mut out = Vec::new();
        let mut seed = 0x9e3779b97f4a7c15u64 ^ (conductor as u64);
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..4 {
            let coeffs: Vec<BigRational> = (0..phi)
                .map(|_| BigRational::new(BigInt::from(next()), BigInt::from(1 + next().abs())))
                .collect();
            out.push(CycNum::from_coeffs(conductor, coeffs));
        }
        out
    }

    #[test]
    fn field_axioms_on_samples() {
        for n in [1u32, 3, 4, 5, 8, 12] {
            let vals = sample_values(n);
            for a in &vals {
                for b in &vals {
                    for c in &vals {
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                    }
                    assert_eq!(a.mul(b), b.mul(a));
                }
                if !a.is_zero() {
                    assert!(a.mul(&a.inverse().unwrap()).is_one());
                }
                // conjugation is an involutive ring homomorphism
                assert_eq!(a.conj().conj(), *a);
                for b in &vals {
                    assert_eq!(a.mul(b).conj(), a.conj().mul(&b.conj()));
                    assert_eq!(a.add(b).conj(), a.conj().add(&b.conj()));
                }
                // a * conj(a) is real (fixed by conjugation)
                let norm = a.mul(&a.conj());
                assert_eq!(norm.conj(), norm);
            }
        }
    }

    #[test]
    fn galois_maps_compose() {
        for n in [5u32, 8, 12] {
            for a in sample_values(n) {
                for k1 in 1..n as i64 {
                    if gcd_i64(k1, n as i64) != 1 {
                        continue;
                    }
                    for k2 in 1..n as i64 {
                        if gcd_i64(k2, n as i64) != 1 {
                            continue;
                        }
                        let lhs = a.galois_map(k2).unwrap().galois_map(k1).unwrap();
                        let rhs = a.galois_map(k1 * k2 % n as i64).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_conductor_arithmetic_lands_at_lcm() {
        let a = CycNum::root_of_unity(3, 1);
        let b = CycNum::root_of_unity(4, 1);
        let p = a.mul(&b);
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, CycNum::root_of_unity(12, 7)); // zeta_3 zeta_4 = zeta_12^{4+3}
    }

    #[test]
    fn display_round_trippable_forms() {
        use alloc::format;
        assert_eq!(format!("{}", CycNum::from_ratio(-3, 7)), "-3/7");
        assert_eq!(format!("{}", CycNum::root_of_unity(8, 1)), "z8");
        let half = CycNum::from_ratio(1, 2);
        let v = half.add(&half.mul(&CycNum::root_of_unity(4, 1)));
        assert_eq!(format!("{}", v), "1/2 + 1/2*z4");
        assert_eq!(format!("{}", CycNum::zero()), "0");
    }
}
