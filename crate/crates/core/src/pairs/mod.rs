//! Binomial-transform pairs.
//!
//! A pair of the first kind satisfies `right(n) = sum_k (-1)^k C(n,k) left(k)`,
//! an involution, so the relation also holds with the roles swapped. A pair of
//! the second kind satisfies `right(n) = sum_k C(n,k) left(k)`, with inverse
//! `left(n) = sum_k (-1)^(n-k) C(n,k) right(k)`.
//!
//! Pairs hold their two sequences as generators (index to value), so closed
//! forms are evaluated on demand at any index. Finite tabulated pairs carry a
//! `limit` past which access fails.

mod catalog;
mod construct;
mod transform;

use std::fmt;
use std::sync::{Arc, Mutex};

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{sign, try_sum, c, Rat};
use crate::params::Params;
use crate::seqlib::Seq;

pub use catalog::{catalog, catalog_pair, catalog_pair_with_depth, CatalogEntry};
pub use construct::{
    convert_kind, partial_sum_pairs, s_m_pair, shift_pair, times_k_pair, PartialSum,
};
pub use transform::{
    bt_first, bt_second, bt_second_inverse, classify, involution_check, Classification,
};

/// Depth to which constructed pairs are checked against their defining relation.
pub const DEFAULT_CHECK_DEPTH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    First,
    Second,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::First => "first",
            Kind::Second => "second",
        })
    }
}

/// A sequence generator.
pub type Term = Arc<dyn Fn(usize) -> Result<Rat> + Send + Sync>;

#[derive(Clone)]
pub struct Pair {
    kind: Kind,
    label: String,
    params: Params,
    left: Term,
    right: Term,
    limit: Option<usize>,
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pair")
            .field("kind", &self.kind)
            .field("label", &self.label)
            .field("params", &self.params)
            .field("limit", &self.limit)
            .finish()
    }
}

impl Pair {
    pub fn new<L, R>(kind: Kind, label: impl Into<String>, left: L, right: R) -> Self
    where
        L: Fn(usize) -> Result<Rat> + Send + Sync + 'static,
        R: Fn(usize) -> Result<Rat> + Send + Sync + 'static,
    {
        Pair {
            kind,
            label: label.into(),
            params: Params::new(),
            left: Arc::new(left),
            right: Arc::new(right),
            limit: None,
        }
    }

    /// Tabulated pair whose left sequence is `seq` and whose right sequence is
    /// its transform of the given kind.
    pub fn from_left(kind: Kind, seq: &Seq) -> Self {
        let right = match kind {
            Kind::First => bt_first(seq),
            Kind::Second => bt_second(seq),
        };
        Pair::tabulated(kind, seq.label(), seq.clone(), right)
    }

    /// Tabulated pair on a pseudorandom left sequence of `len` terms with
    /// numerators in `-20..=20` and denominators in `1..=9`.
    pub fn random<R: Rng + ?Sized>(kind: Kind, label: impl Into<String>, len: usize, rng: &mut R) -> Self {
        let seq = random_seq(label, len, rng);
        Pair::from_left(kind, &seq)
    }

    /// Pair from two explicit prefixes of equal length. Not validated.
    pub fn tabulated(kind: Kind, label: impl Into<String>, left: Seq, right: Seq) -> Self {
        let limit = left.last_index().min(right.last_index());
        let left = Arc::new(left);
        let right = Arc::new(right);
        Pair::new(
            kind,
            label,
            move |k| left.get(k as i64).cloned(),
            move |k| right.get(k as i64).cloned(),
        )
        .with_limit(Some(limit))
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = match (self.limit, limit) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn with_params(mut self, params: Params) -> Self {
        self.params = params;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Largest index at which both sequences are defined, if finite.
    pub fn limit(&self) -> Option<usize> {
        self.limit
    }

    fn check_index(&self, k: i64, side: &str) -> Result<usize> {
        let max = self.limit.map(|l| l as i64).unwrap_or(i64::MAX);
        if k < 0 || k > max {
            return Err(Error::IndexOutOfRange {
                label: format!("{}.{side}", self.label),
                index: k,
                max,
            });
        }
        Ok(k as usize)
    }

    /// Original sequence at `k` (`s_k`).
    pub fn left(&self, k: i64) -> Result<Rat> {
        let k = self.check_index(k, "left")?;
        (self.left)(k)
    }

    /// Transformed sequence at `k` (`sigma_k`).
    pub fn right(&self, k: i64) -> Result<Rat> {
        let k = self.check_index(k, "right")?;
        (self.right)(k)
    }

    pub fn left_term(&self) -> Term {
        self.bounded(self.left.clone(), "left")
    }

    pub fn right_term(&self) -> Term {
        self.bounded(self.right.clone(), "right")
    }

    fn bounded(&self, term: Term, side: &'static str) -> Term {
        match self.limit {
            None => term,
            Some(limit) => {
                let label = format!("{}.{side}", self.label);
                Arc::new(move |k| {
                    if k > limit {
                        return Err(Error::IndexOutOfRange {
                            label: label.clone(),
                            index: k as i64,
                            max: limit as i64,
                        });
                    }
                    term(k)
                })
            }
        }
    }

    pub fn left_seq(&self, len: usize) -> Result<Seq> {
        Seq::try_from_fn(format!("{}.left", self.label), len, |k| self.left(k as i64))
    }

    pub fn right_seq(&self, len: usize) -> Result<Seq> {
        Seq::try_from_fn(format!("{}.right", self.label), len, |k| self.right(k as i64))
    }

    pub fn expect_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch {
                expected: kind,
                found: self.kind,
            });
        }
        Ok(())
    }

    /// Transform of `left` at `n`, computed by direct summation.
    pub fn transform_of_left(&self, n: usize) -> Result<Rat> {
        let n = n as i64;
        match self.kind {
            Kind::First => try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * self.left(k)?)),
            Kind::Second => try_sum(0..=n, |k| Ok(c(n, k) * self.left(k)?)),
        }
    }

    /// Checks the defining relation for every `n <= depth` (clipped to the limit).
    pub fn validate(&self, depth: usize) -> Result<()> {
        let depth = self.limit.map_or(depth, |l| l.min(depth));
        for n in 0..=depth {
            let expected = self.transform_of_left(n)?;
            let got = self.right(n as i64)?;
            if expected != got {
                return Err(Error::Validation {
                    label: self.label.clone(),
                    n,
                    expected: expected.to_string(),
                    got: got.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Same pair with both generators cached.
    pub fn memoized(self) -> Self {
        Pair {
            left: memoize(self.left),
            right: memoize(self.right),
            ..self
        }
    }
}

pub fn random_seq<R: Rng + ?Sized>(label: impl Into<String>, len: usize, rng: &mut R) -> Seq {
    Seq::from_fn(label, len, |_| {
        Rat::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=9).into())
    })
}

/// Wraps a generator with a thread-safe cache. The lock is not held while the
/// inner generator runs, so generators may recurse through other cached terms.
pub fn memoize(term: Term) -> Term {
    let cache: Arc<Mutex<Vec<Option<Rat>>>> = Arc::new(Mutex::new(Vec::new()));
    Arc::new(move |k| {
        if let Some(Some(v)) = cache.lock().expect("cache poisoned").get(k) {
            return Ok(v.clone());
        }
        let v = term(k)?;
        let mut slots = cache.lock().expect("cache poisoned");
        if slots.len() <= k {
            slots.resize(k + 1, None);
        }
        slots[k] = Some(v.clone());
        Ok(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::seqlib::fibonacci;

    #[test]
    fn tabulated_pair_limits() {
        let s = Seq::from_fn("F", 6, |k| fibonacci(k as i64));
        let p = Pair::from_left(Kind::First, &s);
        assert_eq!(p.limit(), Some(5));
        assert_eq!(p.right(4).unwrap(), int(-3));
        assert!(p.right(6).is_err());
        assert!(p.left(-1).is_err());
        p.validate(10).unwrap();
    }

    #[test]
    fn validation_reports_first_failure() {
        let p = Pair::new(Kind::Second, "bad", |_| Ok(int(1)), |n| Ok(int(n as i64 + 1)));
        match p.validate(5) {
            // 2^n and n + 1 agree at n = 0, 1
            Err(Error::Validation { n, .. }) => assert_eq!(n, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn memoized_matches_plain() {
        let p = Pair::new(
            Kind::First,
            "F",
            |k| Ok(fibonacci(k as i64)),
            |k| Ok(-fibonacci(k as i64)),
        )
        .memoized();
        for k in (0..10).rev() {
            assert_eq!(p.right(k).unwrap(), -fibonacci(k));
        }
        p.validate(10).unwrap();
    }
}
