//! New pairs from old: kind conversion, index shifts, multiplication by
//! powers of `k`, and the partial-sum family.

use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;

use super::{memoize, Kind, Pair, Term, DEFAULT_CHECK_DEPTH};
use crate::error::{Error, Result};
use crate::exact::{choose, int, pow, sign, try_sum, Rat};

fn k(n: usize) -> i64 {
    n as i64
}

/// Rewrites a pair as the equivalent pair of the other kind:
/// `s_k <-> (-1)^k s_k`, with the transformed sequence unchanged.
pub fn convert_kind(p: &Pair) -> Pair {
    let kind = match p.kind() {
        Kind::First => Kind::Second,
        Kind::Second => Kind::First,
    };
    let left = p.left_term();
    let right = p.right_term();
    Pair::new(
        kind,
        format!("convert({})", p.label()),
        move |i| Ok(sign(k(i)) * left(i)?),
        move |n| right(n),
    )
    .with_limit(p.limit())
    .with_params(p.params().clone())
}

/// `(s_{k+m}, sum_q (-1)^q C(m,q) sigma_{k+q})`.
pub fn shift_pair(p: &Pair, m: usize) -> Result<Pair> {
    p.expect_kind(Kind::First)?;
    if m == 0 {
        return Ok(p.clone());
    }
    let left = p.left_term();
    let right = p.right_term();
    let limit = match p.limit() {
        Some(l) if l < m => {
            return Err(Error::TooShort {
                needed: m + 1,
                len: l + 1,
            })
        }
        l => l.map(|l| l - m),
    };
    let out = Pair::new(
        Kind::First,
        format!("shift{m}({})", p.label()),
        move |i| left(i + m),
        move |n| try_sum(0..=k(m), |q| Ok(sign(q) * choose(m, q) * right(n + q as usize)?)),
    )
    .with_limit(limit)
    .with_params(p.params().clone());
    out.validate(DEFAULT_CHECK_DEPTH)?;
    Ok(out)
}

/// `(k t_k, n (tau_n - tau_{n-1}))`, the right side being 0 at `n = 0`.
pub fn times_k_pair(p: &Pair) -> Result<Pair> {
    s_m_pair(p, 1)
}

/// `(k^m s_k, S_m(n))` with `S_0 = sigma` and `S_m(k) = k (S_{m-1}(k) - S_{m-1}(k-1))`.
pub fn s_m_pair(p: &Pair, m: u32) -> Result<Pair> {
    p.expect_kind(Kind::First)?;
    if m == 0 {
        return Ok(p.clone());
    }
    let mut s: Term = memoize(p.right_term());
    for _ in 0..m {
        let prev = s.clone();
        s = memoize(Arc::new(move |n| {
            if n == 0 {
                return Ok(Rat::zero());
            }
            Ok(int(k(n)) * (prev(n)? - prev(n - 1)?))
        }));
    }
    let left = p.left_term();
    let out = Pair::new(
        Kind::First,
        format!("k^{m}({})", p.label()),
        move |i| Ok(pow(&int(k(i)), i64::from(m))? * left(i)?),
        move |n| s(n),
    )
    .with_limit(p.limit())
    .with_params(p.params().clone());
    out.validate(DEFAULT_CHECK_DEPTH)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartialSum {
    /// `(-sum_{j=1}^k tau_{j-1}, (1 - d_{k0}) t_{k-1+d_{k0}})`
    A,
    /// `(sum_{j=1}^{k-1+d_{k0}} t_{j-1}, sum_{j=1}^{k-1+d_{k0}} tau_{j-1})`
    B,
    /// `(sum_{j<=k} t_j, sum_{j<=k} tau_j)`, both over `(k+1)(k+2)`
    C,
    /// `(sum_{j<=k} tau_j / (k+1), t_k / (k+1))`
    D,
    /// `(-sum_{j=1}^k tau_{j-1} / (k+1), sum_{j=1}^k t_{j-1} / (k+1))`
    E,
    /// `(sum_{j<=k} t_j/(j+1) / (k+1), sum_{j<=k} tau_j / (k+1)^2)`
    F,
}

impl PartialSum {
    pub const ALL: [PartialSum; 6] = [
        PartialSum::A,
        PartialSum::B,
        PartialSum::C,
        PartialSum::D,
        PartialSum::E,
        PartialSum::F,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PartialSum::A => "a",
            PartialSum::B => "b",
            PartialSum::C => "c",
            PartialSum::D => "d",
            PartialSum::E => "e",
            PartialSum::F => "f",
        }
    }
}

impl FromStr for PartialSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartialSum::ALL
            .into_iter()
            .find(|w| w.as_str() == s)
            .ok_or_else(|| Error::UnknownSelector(s.to_string()))
    }
}

/// Prefix sums `sum_{j=lo}^{hi} f(j)` with `hi < lo` empty.
fn span(f: &Term, lo: i64, hi: i64) -> Result<Rat> {
    try_sum(lo..=hi, |j| f(j as usize))
}

pub fn partial_sum_pairs(p: &Pair, which: PartialSum) -> Result<Pair> {
    p.expect_kind(Kind::First)?;
    let t = p.left_term();
    let tau = p.right_term();
    let (left, right): (Term, Term) = match which {
        PartialSum::A => (
            Arc::new(move |i| Ok(-span(&tau, 0, k(i) - 1)?)),
            Arc::new(move |n| if n == 0 { Ok(Rat::zero()) } else { t(n - 1) }),
        ),
        PartialSum::B => (
            // k - 1 + d_{k0} upper limit on j, i.e. indices 0..=k-2 (none at k <= 1)
            Arc::new(move |i| span(&t, 0, k(i) - 2)),
            Arc::new(move |n| span(&tau, 0, k(n) - 2)),
        ),
        PartialSum::C => (
            Arc::new(move |i| Ok(span(&t, 0, k(i))? / int((k(i) + 1) * (k(i) + 2)))),
            Arc::new(move |n| Ok(span(&tau, 0, k(n))? / int((k(n) + 1) * (k(n) + 2)))),
        ),
        PartialSum::D => (
            Arc::new(move |i| Ok(span(&tau, 0, k(i))? / int(k(i) + 1))),
            Arc::new(move |n| Ok(t(n)? / int(k(n) + 1))),
        ),
        PartialSum::E => (
            Arc::new(move |i| Ok(-span(&tau, 0, k(i) - 1)? / int(k(i) + 1))),
            Arc::new(move |n| Ok(span(&t, 0, k(n) - 1)? / int(k(n) + 1))),
        ),
        PartialSum::F => {
            let scaled: Term = Arc::new(move |j| Ok(t(j)? / int(k(j) + 1)));
            (
                Arc::new(move |i| Ok(span(&scaled, 0, k(i))? / int(k(i) + 1))),
                Arc::new(move |n| Ok(span(&tau, 0, k(n))? / int((k(n) + 1) * (k(n) + 1)))),
            )
        }
    };
    let (left, right) = (memoize(left), memoize(right));
    let out = Pair::new(
        Kind::First,
        format!("partial_{}({})", which.as_str(), p.label()),
        move |i| left(i),
        move |n| right(n),
    )
    .with_limit(p.limit())
    .with_params(p.params().clone());
    out.validate(DEFAULT_CHECK_DEPTH)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::params::Params;
    use crate::pairs::{catalog_pair, classify, Classification};
    use crate::seqlib::{bernoulli_number, fibonacci, lucas};

    fn named(name: &str) -> Pair {
        catalog_pair(name, &Params::new()).unwrap()
    }

    fn power(x: Rat) -> Pair {
        catalog_pair("power", &Params::new().with_rat("x", x)).unwrap()
    }

    #[test]
    fn convert_round_trip() {
        for p in [named("fibonacci"), named("bernoulli"), named("lucas")] {
            let q = convert_kind(&p);
            assert_ne!(q.kind(), p.kind());
            q.validate(10).unwrap();
            let back = convert_kind(&q);
            for i in 0..=10 {
                assert_eq!(back.left(i).unwrap(), p.left(i).unwrap());
                assert_eq!(back.right(i).unwrap(), p.right(i).unwrap());
            }
        }
        let f2 = convert_kind(&named("fibonacci"));
        assert_eq!(f2.left(3).unwrap(), -fibonacci(3));
        assert_eq!(f2.right(3).unwrap(), -fibonacci(3));
    }

    #[test]
    fn shift_examples() {
        let f = named("fibonacci");
        let same = shift_pair(&f, 0).unwrap();
        assert_eq!(same.right(5).unwrap(), f.right(5).unwrap());

        let x = rat(1, 3);
        let s = shift_pair(&power(x.clone()), 1).unwrap();
        for n in 0..=6 {
            let y = Rat::from_integer(1.into()) - &x;
            assert_eq!(s.right(n).unwrap(), &x * pow(&y, n).unwrap());
        }
        assert!(shift_pair(&named("bernoulli"), 1).is_err());
    }

    #[test]
    fn times_k_on_bernoulli() {
        let p = times_k_pair(&named("bernoulli_first")).unwrap();
        // with t_k = (-1)^k B_k the alternating weights cancel: sum_k C(n,k) k B_k = right(n)
        let direct = |n: i64| -> Rat {
            (0..=n)
                .map(|j| choose(n as usize, j) * int(j) * bernoulli_number(j as usize))
                .sum()
        };
        assert_eq!(direct(1), rat(-1, 2));
        assert_eq!(direct(4), rat(-2, 15));
        assert_eq!(direct(3), rat(-1, 2));
        for n in 0..=10 {
            assert_eq!(p.right(n).unwrap(), direct(n));
        }
    }

    #[test]
    fn s_m_matches_direct_summation() {
        let p = s_m_pair(&power(rat(1, 5)), 2).unwrap();
        p.validate(8).unwrap();
        let l = s_m_pair(&named("lucas"), 3).unwrap();
        for n in 0..=8i64 {
            let direct: Rat = (0..=n)
                .map(|j| sign(j) * choose(n as usize, j) * int(j * j * j) * lucas(j))
                .sum();
            assert_eq!(l.right(n).unwrap(), direct);
        }
        let t = times_k_pair(&named("lucas")).unwrap();
        let s1 = s_m_pair(&named("lucas"), 1).unwrap();
        for n in 0..=8 {
            assert_eq!(t.right(n).unwrap(), s1.right(n).unwrap());
        }
    }

    #[test]
    fn partial_sums_all_validate() {
        for base in [named("lucas"), named("fibonacci"), power(rat(1, 2)), named("neg_recip")] {
            for w in PartialSum::ALL {
                partial_sum_pairs(&base, w)
                    .unwrap()
                    .validate(10)
                    .unwrap_or_else(|e| panic!("{w:?}: {e}"));
            }
        }
        assert!(matches!("z".parse::<PartialSum>(), Err(Error::UnknownSelector(_))));
    }

    #[test]
    fn partial_sum_lucas_instances() {
        let l = named("lucas");
        let a = partial_sum_pairs(&l, PartialSum::A).unwrap();
        for k in 1..=8 {
            assert_eq!(a.left(k).unwrap(), int(1) - lucas(k + 1));
            assert_eq!(a.right(k).unwrap(), lucas(k - 1));
        }
        let c = partial_sum_pairs(&l, PartialSum::C).unwrap();
        let seq = c.left_seq(12).unwrap();
        for k in 0..12i64 {
            assert_eq!(seq[k as usize], (lucas(k + 2) - int(1)) / int((k + 1) * (k + 2)));
        }
        assert_eq!(classify(&seq).unwrap(), Classification::Invariant);
        let b = partial_sum_pairs(&l, PartialSum::B).unwrap();
        assert_eq!(classify(&b.left_seq(12).unwrap()).unwrap(), Classification::Invariant);
        let e = partial_sum_pairs(&l, PartialSum::E).unwrap();
        assert_eq!(
            classify(&e.right_seq(12).unwrap()).unwrap(),
            Classification::InverseInvariant
        );
    }
}
