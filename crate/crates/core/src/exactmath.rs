//! Exact integer and rational kernels: gcd, modular inverses, the sawtooth
//! function, Dedekind sums and Hirzebruch-Jung continued fractions.
//!
//! Nothing in here touches floating point. Rationals are `BigRational`, which
//! keeps every value in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Greatest common divisor, always nonnegative; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    num_integer::gcd(a.unsigned_abs(), b.unsigned_abs())
}

/// The inverse of `a` modulo `m`, normalized into `[1, m - 1]`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::InvalidArgs(format!(
            "modulus {m} must be at least 2"
        )));
    }
    let ext = i128::from(a).extended_gcd(&i128::from(m));
    if ext.gcd != 1 {
        return Err(Error::NotInvertible { a, m });
    }
    let x = ext.x.mod_floor(&i128::from(m));
    Ok(x as i64)
}

/// `<x>`: zero on integers, otherwise `x - floor(x) - 1/2`.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    x - x.floor() - ratio(1, 2)
}

/// The classical Dedekind sum `s(h, k)` summed term by term.
///
/// Any nonzero `h` is accepted and reduced modulo `k`. Each sawtooth value
/// `<r/k>` with `0 < r < k` equals `(2r - k) / 2k`, so the whole sum is
/// accumulated over the integers and divided by `4k^2` once at the end.
pub fn dedekind_naive(h: i64, k: i64) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidArgs(format!(
            "Dedekind sum needs k >= 1, got {k}"
        )));
    }
    let k128 = i128::from(k);
    let h = i128::from(h).mod_floor(&k128);
    let mut acc = BigInt::zero();
    for i in 1..k128 {
        let r = (h * i) % k128;
        if r == 0 {
            continue;
        }
        acc += BigInt::from((2 * i - k128) * (2 * r - k128));
    }
    Ok(Rational::new(acc, BigInt::from(4 * k128 * k128)))
}

/// Euclidean remainder chain `r0 = k, r1 = h, ..., r_{n+1} = 1`.
pub fn euclid_remainders(h: i64, k: i64) -> Result<Vec<i64>> {
    if !(0 < h && h < k) {
        return Err(Error::InvalidArgs(format!(
            "need 0 < h < k, got h = {h}, k = {k}"
        )));
    }
    if gcd(h, k) != 1 {
        return Err(Error::InvalidArgs(format!("gcd({h}, {k}) != 1")));
    }
    let mut chain = vec![k, h];
    while *chain.last().unwrap() != 1 {
        let n = chain.len();
        chain.push(chain[n - 2] % chain[n - 1]);
    }
    Ok(chain)
}

/// Dedekind sum via the alternating sum over the Euclidean remainder chain.
///
/// Restricted to `0 < h < k` with `gcd(h, k) = 1`.
pub fn dedekind_euclid(h: i64, k: i64) -> Result<Rational> {
    let r = euclid_remainders(h, k)?;
    // r = (r_0, ..., r_{n+1})
    let n = r.len() - 2;
    let mut sum = Rational::zero();
    for j in 1..=n + 1 {
        let (rj, rp) = (BigInt::from(r[j]), BigInt::from(r[j - 1]));
        let term = Rational::new(BigInt::one() + &rj * &rj + &rp * &rp, rj * rp);
        if j % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let tail = if n % 2 == 0 {
        ratio(1, 4)
    } else {
        Rational::zero()
    };
    Ok(sum / int(12) - tail)
}

/// Hirzebruch-Jung expansion `a/b = k1 - 1/(k2 - 1/(...))` with all `kj >= 2`.
pub fn hj_expansion(a: i64, b: i64) -> Result<Vec<i64>> {
    if !(a > b && b >= 1) {
        return Err(Error::InvalidArgs(format!("need a > b >= 1, got {a}/{b}")));
    }
    if gcd(a, b) != 1 {
        return Err(Error::InvalidArgs(format!(
            "{a}/{b} is not in lowest terms"
        )));
    }
    let (mut a, mut b) = (a, b);
    let mut out = Vec::new();
    while b != 0 {
        let k = Integer::div_ceil(&a, &b);
        out.push(k);
        (a, b) = (b, k * b - a);
    }
    Ok(out)
}

/// Evaluates a Hirzebruch-Jung continued fraction back to a rational.
pub fn eval_hj(ks: &[i64]) -> Result<Rational> {
    let (last, rest) = ks.split_last().ok_or(Error::EmptyList)?;
    if let Some(bad) = ks.iter().find(|&&k| k < 2) {
        return Err(Error::InvalidArgs(format!("entry {bad} is below 2")));
    }
    let mut x = int(*last);
    for &k in rest.iter().rev() {
        x = int(k) - x.recip();
    }
    Ok(x)
}

/// True if `n >= 2` is a power of a single prime.
pub fn is_prime_power(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Exact integer value of a rational, if it has one.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    let n = x.to_integer();
    if n.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    i64::try_from(n).ok()
}
