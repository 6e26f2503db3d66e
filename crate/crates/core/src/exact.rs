//! Exact rational scalars and binomial-coefficient kernels.
//!
//! [`Rat`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Binomial coefficients with a rational upper index are
//! defined through the falling factorial `r(r-1)...(r-k+1)/k!`, which is exact
//! and agrees with the integer definition whenever `r` is a nonnegative integer.

use std::borrow::Cow;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rat = BigRational;

/// Number of factorials precomputed by the shared table.
pub const DEFAULT_FACTORIAL_CAP: usize = 256;

/// `p/q` as a [`Rat`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a [`Rat`].
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// `(-1)^k` for any integer `k`.
pub fn sign(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Returns the value as an `i64` when `r` is an integer that fits.
pub fn as_integer(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// `base^exp` for any integer exponent; `0^0 = 1`, and a negative power of zero is an error.
pub fn pow(base: &Rat, exp: i64) -> Result<Rat> {
    if exp == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::DivisionByZero(format!("0^{exp}")));
        }
        return Ok(Rat::zero());
    }
    let mag = pow_u(base, exp.unsigned_abs());
    Ok(if exp < 0 { mag.recip() } else { mag })
}

fn pow_u(base: &Rat, mut e: u64) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rat {
    let p = BigInt::one() << e.unsigned_abs();
    if e < 0 {
        Rat::new(BigInt::one(), p)
    } else {
        Rat::from_integer(p)
    }
}

/// Read-only table of `0!, 1!, ..., cap!`.
///
/// Lookups past the cap are computed on demand and not stored, so a shared
/// table never needs interior mutability.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<BigInt>,
}

impl FactorialTable {
    pub fn new(cap: usize) -> Self {
        let mut table = Vec::with_capacity(cap + 1);
        let mut acc = BigInt::one();
        table.push(acc.clone());
        for i in 1..=cap {
            acc *= i;
            table.push(acc.clone());
        }
        FactorialTable { table }
    }

    pub fn cap(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, n: usize) -> Cow<'_, BigInt> {
        if let Some(v) = self.table.get(n) {
            return Cow::Borrowed(v);
        }
        let mut acc = self.table.last().cloned().unwrap_or_else(BigInt::one);
        for i in self.table.len()..=n {
            acc *= i;
        }
        Cow::Owned(acc)
    }
}

fn factorials() -> &'static FactorialTable {
    static TABLE: OnceLock<FactorialTable> = OnceLock::new();
    TABLE.get_or_init(|| FactorialTable::new(DEFAULT_FACTORIAL_CAP))
}

/// `n!` from the shared table.
pub fn factorial(n: usize) -> BigInt {
    factorials().get(n).into_owned()
}

/// `C(n, k)` for a nonnegative integer `n`; zero when `k < 0` or `k > n`.
pub fn choose(n: usize, k: i64) -> Rat {
    if k < 0 || k as u64 > n as u64 {
        return Rat::zero();
    }
    let k = k as usize;
    let t = factorials();
    let num = t.get(n);
    let den = t.get(k).into_owned() * t.get(n - k).as_ref();
    Rat::from_integer(num.as_ref().div_floor(&den))
}

/// Binomial coefficient for integers with `n >= 0`; zero outside `0 <= k <= n`.
pub fn binom_int(n: i64, k: i64) -> Result<Rat> {
    if n < 0 {
        return Err(Error::NegativeUpperIndex(n));
    }
    Ok(choose(n as usize, k))
}

/// Generalized binomial coefficient `C(r, k)` for rational `r` and integer `k`.
///
/// Zero for `k < 0`. Negative integer `r` uses `C(r, k) = (-1)^k C(k - r - 1, k)`.
pub fn binom_rat(r: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    if let Some(n) = as_integer(r) {
        if n >= 0 {
            return choose(n as usize, k);
        }
        let top = (k - n - 1) as usize;
        return sign(k) * choose(top, k);
    }
    let mut num = Rat::one();
    let mut term = r.clone();
    for _ in 0..k {
        num *= &term;
        term -= Rat::one();
    }
    num / Rat::from_integer(factorial(k as usize))
}

/// `C(r, k)^{-1}`; fails when the coefficient vanishes.
pub fn inv_binom(r: &Rat, k: i64) -> Result<Rat> {
    let b = binom_rat(r, k);
    if b.is_zero() {
        return Err(Error::ZeroBinomial {
            r: r.to_string(),
            k,
        });
    }
    Ok(b.recip())
}

/// `C(n, k)^{-1}` for integer arguments.
pub fn inv_choose(n: i64, k: i64) -> Result<Rat> {
    inv_binom(&int(n), k)
}

/// Kronecker delta as a rational.
pub fn kron_delta(i: i64, j: i64) -> Rat {
    if i == j {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// `1/x`, reporting `what` on division by zero.
pub fn recip(x: &Rat, what: &str) -> Result<Rat> {
    if x.is_zero() {
        Err(Error::DivisionByZero(what.to_string()))
    } else {
        Ok(x.recip())
    }
}

/// Sums `f(k)` over `ks`, stopping at the first error.
pub fn try_sum<I, F>(ks: I, mut f: F) -> Result<Rat>
where
    I: IntoIterator<Item = i64>,
    F: FnMut(i64) -> Result<Rat>,
{
    let mut acc = Rat::zero();
    for k in ks {
        acc += f(k)?;
    }
    Ok(acc)
}

/// `C(n, k)` for signed integers; a negative `n` takes the generalized value.
pub fn c(n: i64, k: i64) -> Rat {
    if n < 0 {
        return binom_rat(&int(n), k);
    }
    choose(n as usize, k)
}

/// True when `r` is an integer `<= -1`.
pub fn is_negative_integer(r: &Rat) -> bool {
    r.is_integer() && r.is_negative()
}

/// True when `r` is an integer `>= 0`.
pub fn is_nonnegative_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_int_examples() {
        assert_eq!(binom_int(5, 2).unwrap(), int(10));
        assert_eq!(binom_int(3, 5).unwrap(), int(0));
        assert_eq!(binom_int(0, 0).unwrap(), int(1));
        assert_eq!(binom_int(4, -1).unwrap(), int(0));
        assert_eq!(binom_int(-1, 0), Err(Error::NegativeUpperIndex(-1)));
    }

    // Falling-factorial oracle written out by hand.
    fn falling_oracle(r: &Rat, k: i64) -> Rat {
        let mut acc = Rat::one();
        for i in 0..k {
            acc *= r - int(i);
            acc /= int(i + 1);
        }
        acc
    }

    #[test]
    fn binom_rat_examples() {
        assert_eq!(binom_rat(&rat(-1, 2), 2), rat(3, 8));
        assert_eq!(falling_oracle(&rat(-1, 2), 2), rat(3, 8));
        // (-1)^2 C(4,2) / 2^4
        assert_eq!(binom_rat(&rat(-1, 2), 2), choose(4, 2) / int(16));
        assert_eq!(binom_rat(&rat(3, 2), 2), rat(3, 8));
        assert_eq!(binom_rat(&int(7), 0), int(1));
        assert_eq!(binom_rat(&int(7), -2), int(0));
    }

    #[test]
    fn half_integer_central_binomials() {
        for k in 0..12 {
            let c = choose(2 * k as usize, k) * pow2(-2 * k);
            assert_eq!(binom_rat(&rat(-1, 2), k), sign(k) * c.clone());
            assert_eq!(binom_rat(&(int(k) - rat(1, 2)), k), c);
        }
    }

    #[test]
    fn negative_integer_upper_matches_falling_factorial() {
        for n in -6..0 {
            for k in 0..8 {
                assert_eq!(binom_rat(&int(n), k), falling_oracle(&int(n), k));
            }
        }
    }

    #[test]
    fn inv_binom_examples() {
        assert_eq!(inv_binom(&int(4), 2).unwrap(), rat(1, 6));
        assert!(matches!(
            inv_binom(&int(2), 3),
            Err(Error::ZeroBinomial { k: 3, .. })
        ));
        assert_eq!(inv_binom(&rat(-1, 2), 1).unwrap(), int(-2));
    }

    #[test]
    fn kron_delta_examples() {
        assert_eq!(kron_delta(0, 0), int(1));
        assert_eq!(kron_delta(1, 2), int(0));
        assert_eq!(kron_delta(-3, -3), int(1));
    }

    #[test]
    fn pascal_and_symmetry() {
        for n in 1..=64i64 {
            for k in 1..=n {
                let lhs = binom_int(n, k).unwrap();
                let rhs = binom_int(n - 1, k - 1).unwrap() + binom_int(n - 1, k).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(lhs, binom_int(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn factorial_past_cap() {
        let small = FactorialTable::new(5);
        assert_eq!(small.cap(), 5);
        assert_eq!(*small.get(8), BigInt::from(40320));
        assert_eq!(factorial(300), FactorialTable::new(300).get(300).into_owned());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rat("-5/7").unwrap(), rat(-5, 7));
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("3").unwrap(), int(3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(rat(-3, 8).to_string(), "-3/8");
        assert_eq!(rat(10, 1).to_string(), "10");
        assert_eq!(rat(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn pow_edges() {
        assert_eq!(pow(&int(0), 0).unwrap(), int(1));
        assert!(pow(&int(0), -1).is_err());
        assert_eq!(pow(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert_eq!(pow2(-3), rat(1, 8));
    }
}
