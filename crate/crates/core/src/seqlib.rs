//! Exact generators for the special sequences: Fibonacci, Lucas and gibonacci
//! numbers (all integer indices), Bernoulli numbers and polynomials, Catalan
//! numbers, and harmonic / odd harmonic numbers.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{choose, int, Rat};

/// Finite prefix `values[0..=N]` of a rational sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seq {
    values: Vec<Rat>,
    label: String,
}

impl Seq {
    /// Panics if `values` is empty; every sequence carries its 0th term.
    pub fn new(label: impl Into<String>, values: Vec<Rat>) -> Self {
        assert!(!values.is_empty(), "a sequence prefix needs index 0");
        Seq {
            values,
            label: label.into(),
        }
    }

    /// Tabulates `f(0), ..., f(len - 1)`.
    pub fn from_fn(label: impl Into<String>, len: usize, f: impl FnMut(usize) -> Rat) -> Self {
        Seq::new(label, (0..len.max(1)).map(f).collect())
    }

    pub fn try_from_fn(
        label: impl Into<String>,
        len: usize,
        f: impl FnMut(usize) -> Result<Rat>,
    ) -> Result<Self> {
        let values = (0..len.max(1)).map(f).collect::<Result<Vec<_>>>()?;
        Ok(Seq::new(label, values))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest valid index.
    pub fn last_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rat> {
        self.values
    }

    /// Term `k`; negative or past-the-end indices are an error.
    pub fn get(&self, k: i64) -> Result<&Rat> {
        if k < 0 || k as usize >= self.values.len() {
            return Err(Error::IndexOutOfRange {
                label: self.label.clone(),
                index: k,
                max: self.last_index() as i64,
            });
        }
        Ok(&self.values[k as usize])
    }

    pub fn neg(&self) -> Seq {
        Seq::new(
            format!("-{}", self.label),
            self.values.iter().map(|v| -v).collect(),
        )
    }
}

impl std::ops::Index<usize> for Seq {
    type Output = Rat;

    fn index(&self, k: usize) -> &Rat {
        &self.values[k]
    }
}

/// Grow-only prefix cache shared across threads.
struct PrefixMemo {
    values: RwLock<Vec<Rat>>,
    next: fn(&[Rat]) -> Rat,
}

impl PrefixMemo {
    const fn new(next: fn(&[Rat]) -> Rat) -> Self {
        PrefixMemo {
            values: RwLock::new(Vec::new()),
            next,
        }
    }

    fn get(&self, n: usize) -> Rat {
        if let Some(v) = self.values.read().expect("memo poisoned").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("memo poisoned");
        while values.len() <= n {
            let v = (self.next)(&values);
            values.push(v);
        }
        values[n].clone()
    }
}

fn fib_pair(n: u64) -> (BigInt, BigInt) {
    // (F_n, F_{n+1})
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    (a, b)
}

/// `F_n` for every integer `n`, with `F_{-n} = (-1)^{n-1} F_n`.
pub fn fibonacci(n: i64) -> Rat {
    let (f, _) = fib_pair(n.unsigned_abs());
    let f = Rat::from_integer(f);
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// `L_n` for every integer `n`, with `L_{-n} = (-1)^n L_n`.
pub fn lucas(n: i64) -> Rat {
    let m = n.unsigned_abs();
    let (f, f1) = fib_pair(m);
    // L_m = 2 F_{m+1} - F_m
    let l = Rat::from_integer(BigInt::from(2) * f1 - f);
    if n < 0 && m % 2 == 1 {
        -l
    } else {
        l
    }
}

/// Gibonacci number with seeds `G_0 = g0`, `G_1 = g1`, for every integer `n`.
pub fn gibonacci(g0: &Rat, g1: &Rat, n: i64) -> Rat {
    if n >= 0 {
        let (mut a, mut b) = (g0.clone(), g1.clone());
        for _ in 0..n {
            let c = &a + &b;
            a = std::mem::replace(&mut b, c);
        }
        a
    } else {
        // walk down: G_{j-1} = G_{j+1} - G_j
        let (mut hi, mut lo) = (g1.clone(), g0.clone());
        for _ in 0..n.unsigned_abs() {
            let below = &hi - &lo;
            hi = std::mem::replace(&mut lo, below);
        }
        lo
    }
}

fn next_bernoulli(prev: &[Rat]) -> Rat {
    let n = prev.len();
    if n == 0 {
        return Rat::one();
    }
    // sum_{k<n} C(n+1,k) B_k = -(n+1) B_n
    let s: Rat = prev
        .iter()
        .enumerate()
        .map(|(k, b)| choose(n + 1, k as i64) * b)
        .sum();
    -s / int(n as i64 + 1)
}

static BERNOULLI: PrefixMemo = PrefixMemo::new(next_bernoulli);

/// Bernoulli number `B_n` (with `B_1 = -1/2`).
pub fn bernoulli_number(n: usize) -> Rat {
    BERNOULLI.get(n)
}

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: usize, x: &Rat) -> Rat {
    // Horner in x over the coefficients C(n,k) B_k of x^{n-k}.
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc = acc * x + choose(n, k as i64) * bernoulli_number(k);
    }
    acc
}

/// Catalan number `C(2n, n)/(n+1)`.
pub fn catalan(n: usize) -> Rat {
    choose(2 * n, n as i64) / int(n as i64 + 1)
}

fn next_harmonic(prev: &[Rat]) -> Rat {
    match prev.last() {
        None => Rat::zero(),
        Some(h) => h + Rat::new(BigInt::one(), BigInt::from(prev.len())),
    }
}

fn next_odd_harmonic(prev: &[Rat]) -> Rat {
    match prev.last() {
        None => Rat::zero(),
        Some(o) => o + Rat::new(BigInt::one(), BigInt::from(2 * prev.len() - 1)),
    }
}

static HARMONIC: PrefixMemo = PrefixMemo::new(next_harmonic);
static ODD_HARMONIC: PrefixMemo = PrefixMemo::new(next_odd_harmonic);

/// `H_n = 1 + 1/2 + ... + 1/n`, `H_0 = 0`.
pub fn harmonic(n: usize) -> Rat {
    HARMONIC.get(n)
}

/// `H_n` for a signed index; negative arguments are rejected.
pub fn harmonic_at(n: i64) -> Result<Rat> {
    if n < 0 {
        return Err(Error::param("H", format!("harmonic number at negative index {n}")));
    }
    Ok(harmonic(n as usize))
}

/// `O_n = 1 + 1/3 + ... + 1/(2n-1)`, `O_0 = 0`.
pub fn odd_harmonic(n: usize) -> Rat {
    ODD_HARMONIC.get(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), int(0));
        assert_eq!(fibonacci(1), int(1));
        assert_eq!(fibonacci(6), int(8));
        assert_eq!(fibonacci(-4), int(-3));
        assert_eq!(fibonacci(-1), int(1));
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas(0), int(2));
        assert_eq!(lucas(1), int(1));
        assert_eq!(lucas(5), int(11));
        assert_eq!(lucas(-3), int(-4));
        assert_eq!(lucas(-1), int(-1));
    }

    #[test]
    fn gibonacci_values() {
        assert_eq!(gibonacci(&int(0), &int(1), 7), int(13));
        assert_eq!(gibonacci(&int(2), &int(1), 4), int(7));
        // seeds (1, 1) give F_{n+1}
        assert_eq!(gibonacci(&int(1), &int(1), -1), int(0));
        assert_eq!(gibonacci(&int(1), &int(1), -2), int(1));
    }

    #[test]
    fn recurrences_on_signed_range() {
        for n in -30..=64 {
            assert_eq!(fibonacci(n), fibonacci(n - 1) + fibonacci(n - 2));
            assert_eq!(lucas(n), lucas(n - 1) + lucas(n - 2));
            let (g0, g1) = (rat(3, 7), int(-2));
            assert_eq!(
                gibonacci(&g0, &g1, n),
                gibonacci(&g0, &g1, n - 1) + gibonacci(&g0, &g1, n - 2)
            );
        }
        for n in -32..=64 {
            assert_eq!(gibonacci(&int(0), &int(1), n), fibonacci(n));
            assert_eq!(gibonacci(&int(2), &int(1), n), lucas(n));
        }
    }

    #[test]
    fn bernoulli_values() {
        let expected = [
            int(1),
            rat(-1, 2),
            rat(1, 6),
            int(0),
            rat(-1, 30),
            int(0),
            rat(1, 42),
            int(0),
        ];
        for (n, b) in expected.iter().enumerate() {
            assert_eq!(&bernoulli_number(n), b);
        }
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        for n in (3..=40).step_by(2) {
            assert_eq!(bernoulli_number(n), int(0));
        }
    }

    #[test]
    fn bernoulli_poly_values() {
        assert_eq!(bernoulli_poly(2, &rat(1, 2)), rat(-1, 12));
        assert_eq!(bernoulli_poly(1, &int(0)), rat(-1, 2));
        assert_eq!(bernoulli_poly(3, &int(1)), int(0));
        // B_3(x) = x^3 - 3x^2/2 + x/2
        let x = rat(2, 5);
        let direct = &x * &x * &x - rat(3, 2) * &x * &x + rat(1, 2) * &x;
        assert_eq!(bernoulli_poly(3, &x), direct);
    }

    #[test]
    fn bernoulli_poly_shift_recurrence() {
        let xs = [int(0), int(1), int(-1), rat(1, 2), rat(-3, 7)];
        for n in 0..=12 {
            for x in &xs {
                let rhs: Rat = (0..=n)
                    .map(|k| choose(n, k as i64) * bernoulli_poly(k, x))
                    .sum();
                assert_eq!(bernoulli_poly(n, &(x + int(1))), rhs);
            }
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(5), int(42));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(odd_harmonic(0), int(0));
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(odd_harmonic(2), rat(4, 3));
        for n in 1..=64usize {
            assert_eq!(harmonic(n) - harmonic(n - 1), rat(1, n as i64));
            assert_eq!(odd_harmonic(n) - odd_harmonic(n - 1), rat(1, 2 * n as i64 - 1));
        }
        assert!(harmonic_at(-1).is_err());
    }

    #[test]
    fn seq_access() {
        let s = Seq::from_fn("F", 5, |k| fibonacci(k as i64));
        assert_eq!(s.get(4).unwrap(), &int(3));
        assert!(matches!(s.get(5), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(s.get(-1), Err(Error::IndexOutOfRange { .. })));
    }
}
