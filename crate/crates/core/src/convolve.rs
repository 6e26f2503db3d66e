//! Both sides of the convolution and symmetry theorems, evaluated exactly.
//!
//! Checkers never decide equality themselves; they return a [`SideReport`]
//! so callers can show the discrepancy.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{c, choose, pow2, sign, try_sum, Rat};
use crate::pairs::{s_m_pair, Kind, Pair};
use crate::params::Params;
use crate::seqlib::Seq;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideReport {
    pub lhs: Rat,
    pub rhs: Rat,
    pub params: Params,
}

impl SideReport {
    pub fn new(lhs: Rat, rhs: Rat, params: Params) -> Self {
        SideReport { lhs, rhs, params }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for SideReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { "==" } else { "!=" };
        write!(f, "[{}] {} {rel} {}", self.params, self.lhs, self.rhs)
    }
}

fn i(n: usize) -> i64 {
    n as i64
}

fn check_len(a: &Seq, b: &Seq, n: usize) -> Result<()> {
    for s in [a, b] {
        if n > s.last_index() {
            return Err(Error::IndexOutOfRange {
                label: s.label().to_string(),
                index: i(n),
                max: i(s.last_index()),
            });
        }
    }
    Ok(())
}

/// `sum_k (-1)^k C(n,k) a_k b_{n-k}`.
pub fn conv_alt(a: &Seq, b: &Seq, n: usize) -> Result<Rat> {
    check_len(a, b, n)?;
    Ok((0..=n)
        .map(|k| sign(i(k)) * choose(n, i(k)) * &a[k] * &b[n - k])
        .sum())
}

/// `sum_k C(n,k) a_k b_{n-k}`.
pub fn conv_plain(a: &Seq, b: &Seq, n: usize) -> Result<Rat> {
    check_len(a, b, n)?;
    Ok((0..=n).map(|k| choose(n, i(k)) * &a[k] * &b[n - k]).sum())
}

fn two(p: &Pair, q: &Pair, kp: Kind, kq: Kind) -> Result<()> {
    p.expect_kind(kp)?;
    q.expect_kind(kq)
}

fn base(n: usize) -> Params {
    Params::new().with_int("n", i(n))
}

/// `sum (-1)^{n-k} C(n,k) s_k t_{n-k}` against `sum (-1)^k C(n,k) sigma_k tau_{n-k}`.
pub fn check_main1(p: &Pair, q: &Pair, n: usize) -> Result<SideReport> {
    two(p, q, Kind::First, Kind::First)?;
    let n = i(n);
    let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * p.left(k)? * q.left(n - k)?))?;
    let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.right(k)? * q.right(n - k)?))?;
    Ok(SideReport::new(lhs, rhs, base(n as usize)))
}

/// Same-shaped alternating convolutions of both second-kind pairs.
pub fn check_main2(p: &Pair, q: &Pair, n: usize) -> Result<SideReport> {
    two(p, q, Kind::Second, Kind::Second)?;
    let n = i(n);
    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.left(k)? * q.left(n - k)?))?;
    let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.right(k)? * q.right(n - k)?))?;
    Ok(SideReport::new(lhs, rhs, base(n as usize)))
}

/// `sum C(n,k) s_k tau_{n-k}` against `sum C(n,k) sigma_k t_{n-k}` (second kind).
pub fn check_swap(p: &Pair, q: &Pair, n: usize) -> Result<SideReport> {
    two(p, q, Kind::Second, Kind::Second)?;
    let n = i(n);
    let lhs = try_sum(0..=n, |k| Ok(c(n, k) * p.left(k)? * q.right(n - k)?))?;
    let rhs = try_sum(0..=n, |k| Ok(c(n, k) * p.right(k)? * q.left(n - k)?))?;
    Ok(SideReport::new(lhs, rhs, base(n as usize)))
}

/// `sum C(n,k) s_k t_{n-k}` against `sum (-1)^k C(n,k) sigma_k tau_{n-k}`,
/// with `p` of the first kind and `q` of the second.
pub fn check_mixed(p: &Pair, q: &Pair, n: usize) -> Result<SideReport> {
    two(p, q, Kind::First, Kind::Second)?;
    let n = i(n);
    let lhs = try_sum(0..=n, |k| Ok(c(n, k) * p.left(k)? * q.left(n - k)?))?;
    let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.right(k)? * q.right(n - k)?))?;
    Ok(SideReport::new(lhs, rhs, base(n as usize)))
}

fn mn(m: usize, n: usize) -> Params {
    Params::new().with_int("m", i(m)).with_int("n", i(n))
}

/// `sum_k^n (-1)^k C(n,k) s_{k+m}` against `sum_k^m (-1)^k C(m,k) sigma_{k+n}`.
pub fn check_symmetry_first(p: &Pair, m: usize, n: usize) -> Result<SideReport> {
    p.expect_kind(Kind::First)?;
    let (m, n) = (i(m), i(n));
    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.left(k + m)?))?;
    let rhs = try_sum(0..=m, |k| Ok(sign(k) * c(m, k) * p.right(k + n)?))?;
    Ok(SideReport::new(lhs, rhs, mn(m as usize, n as usize)))
}

/// `sum_k^n C(n,k) s_{k+m}` against `sum_k^m (-1)^{k+m} C(m,k) sigma_{k+n}`.
pub fn check_symmetry_second(p: &Pair, m: usize, n: usize) -> Result<SideReport> {
    p.expect_kind(Kind::Second)?;
    let (m, n) = (i(m), i(n));
    let lhs = try_sum(0..=n, |k| Ok(c(n, k) * p.left(k + m)?))?;
    let rhs = try_sum(0..=m, |k| Ok(sign(k + m) * c(m, k) * p.right(k + n)?))?;
    Ok(SideReport::new(lhs, rhs, mn(m as usize, n as usize)))
}

/// `sum_{q=0}^{r} (-1)^q C(r,q) f(at + q)`: the r-th forward difference, signed.
fn diff(f: impl Fn(i64) -> Result<Rat>, r: i64, at: i64) -> Result<Rat> {
    try_sum(0..=r, |q| Ok(sign(q) * c(r, q) * f(at + q)?))
}

/// The two double sums of the shifted generalization, with `s` shifted by `m`
/// and `t` shifted by `r`.
pub fn check_gen1(p: &Pair, q: &Pair, m: usize, r: usize, n: usize) -> Result<SideReport> {
    two(p, q, Kind::First, Kind::First)?;
    let (m, r, n) = (i(m), i(r), i(n));
    let lhs = try_sum(0..=n, |k| {
        Ok(sign(k) * c(n, k) * p.left(n - k + m)? * diff(|j| q.right(j), r, k)?)
    })?;
    let rhs = try_sum(0..=n, |k| {
        Ok(sign(k) * c(n, k) * q.left(n - k + r)? * diff(|j| p.right(j), m, k)?)
    })?;
    let params = Params::new()
        .with_int("m", m)
        .with_int("r", r)
        .with_int("n", n);
    Ok(SideReport::new(lhs, rhs, params))
}

/// The five-index generalization.
pub fn check_gen2(
    p: &Pair,
    q: &Pair,
    m: usize,
    n: usize,
    r: usize,
    u: usize,
    v: usize,
) -> Result<SideReport> {
    two(p, q, Kind::First, Kind::First)?;
    let (m, n, r, u, v) = (i(m), i(n), i(r), i(u), i(v));
    let a = |x: i64| diff(|j| p.left(j + m), r, x);
    let alpha = |x: i64| diff(|j| p.right(j + r), m, x);
    let b = |x: i64| diff(|j| q.left(j + v), u, x);
    let beta = |x: i64| diff(|j| q.right(j + u), v, x);
    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * a(n - k)? * b(k)?))?;
    let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * alpha(k)? * beta(n - k)?))?;
    let params = Params::new()
        .with_int("m", m)
        .with_int("n", n)
        .with_int("r", r)
        .with_int("u", u)
        .with_int("v", v);
    Ok(SideReport::new(lhs, rhs, params))
}

/// `sum_k (-1)^k C(n,k) sum_p (-1)^p C(r,p) s_{k+p+m}` against
/// `sum_k^m (-1)^k C(m,k) sigma_{n+k+r}`.
pub fn check_nested_shift(p: &Pair, m: usize, r: usize, n: usize) -> Result<SideReport> {
    p.expect_kind(Kind::First)?;
    let (m, r, n) = (i(m), i(r), i(n));
    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * diff(|j| p.left(j + m), r, k)?))?;
    let rhs = try_sum(0..=m, |k| Ok(sign(k) * c(m, k) * p.right(n + k + r)?))?;
    let params = Params::new()
        .with_int("m", m)
        .with_int("r", r)
        .with_int("n", n);
    Ok(SideReport::new(lhs, rhs, params))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extension {
    /// `sum (-1)^k C(n-j,k) 2^{n-k} s_k = 2^j sum C(n-j,k) sigma_k`, `j <= n`.
    PowerTwo { j: usize },
    /// `sum (-1)^{n-k} C(n,k) C(n-k,j) 2^k s_k = sum (-1)^{j-k} C(n,k) C(n-k,j) 2^k sigma_k`.
    DoubleBinom { j: usize },
    /// Second kind: `sum C(n,k) 2^{-k} s_k tau_{n-k} = sum C(n,k) 2^{-k} t_{n-k} sum_j C(k,j) sigma_j`.
    HalfWeight,
    /// `sum_{k>=1} (-1)^{n-k-1} C(n,k) s_{k-1} t_{n-k} = sum_{k>=1} (-1)^k C(n,k) tau_{n-k} sum_{j=1}^k sigma_{j-1}`.
    Shifted,
    /// `sum (-1)^{n-k} C(n,k) k^m s_k t_{n-k} = sum (-1)^k C(n,k) S_m(k) tau_{n-k}`.
    KPower { m: u32 },
}

impl Extension {
    pub fn name(&self) -> &'static str {
        match self {
            Extension::PowerTwo { .. } => "power_two",
            Extension::DoubleBinom { .. } => "double_binom",
            Extension::HalfWeight => "half_weight",
            Extension::Shifted => "shifted",
            Extension::KPower { .. } => "k_power",
        }
    }

    /// True for the variants that take a second pair.
    pub fn needs_partner(&self) -> bool {
        matches!(
            self,
            Extension::HalfWeight | Extension::Shifted | Extension::KPower { .. }
        )
    }
}

/// The extension identities. `q` is required for the two-pair variants and
/// ignored otherwise.
pub fn check_extension(ext: Extension, p: &Pair, q: Option<&Pair>, n: usize) -> Result<SideReport> {
    let partner = || q.ok_or_else(|| Error::Guard(format!("{} needs a second pair", ext.name())));
    let nn = i(n);
    let mut params = Params::new().with_label("variant", ext.name());
    let (lhs, rhs) = match ext {
        Extension::PowerTwo { j } => {
            p.expect_kind(Kind::First)?;
            if j > n {
                return Err(Error::Guard(format!("j = {j} exceeds n = {n}")));
            }
            let j = i(j);
            params = params.with_int("j", j);
            let top = nn - j;
            (
                try_sum(0..=nn, |k| Ok(sign(k) * c(top, k) * pow2(nn - k) * p.left(k)?))?,
                pow2(j) * try_sum(0..=nn, |k| Ok(c(top, k) * p.right(k)?))?,
            )
        }
        Extension::DoubleBinom { j } => {
            p.expect_kind(Kind::First)?;
            let j = i(j);
            params = params.with_int("j", j);
            let w = |k: i64| c(nn, k) * c(nn - k, j) * pow2(k);
            (
                try_sum(0..=nn, |k| Ok(sign(nn - k) * w(k) * p.left(k)?))?,
                try_sum(0..=nn, |k| Ok(sign(j - k) * w(k) * p.right(k)?))?,
            )
        }
        Extension::HalfWeight => {
            let q = partner()?;
            two(p, q, Kind::Second, Kind::Second)?;
            let inner = |k: i64| try_sum(0..=k, |j| Ok(c(k, j) * p.right(j)?));
            (
                try_sum(0..=nn, |k| Ok(c(nn, k) * pow2(-k) * p.left(k)? * q.right(nn - k)?))?,
                try_sum(0..=nn, |k| Ok(c(nn, k) * pow2(-k) * q.left(nn - k)? * inner(k)?))?,
            )
        }
        Extension::Shifted => {
            let q = partner()?;
            two(p, q, Kind::First, Kind::First)?;
            let inner = |k: i64| try_sum(1..=k, |j| p.right(j - 1));
            (
                try_sum(1..=nn, |k| Ok(sign(nn - k - 1) * c(nn, k) * p.left(k - 1)? * q.left(nn - k)?))?,
                try_sum(1..=nn, |k| Ok(sign(k) * c(nn, k) * q.right(nn - k)? * inner(k)?))?,
            )
        }
        Extension::KPower { m } => {
            let q = partner()?;
            two(p, q, Kind::First, Kind::First)?;
            params = params.with_int("m", i64::from(m));
            let sm = s_m_pair(p, m)?;
            (
                try_sum(0..=nn, |k| Ok(sign(nn - k) * c(nn, k) * sm.left(k)? * q.left(nn - k)?))?,
                try_sum(0..=nn, |k| Ok(sign(k) * c(nn, k) * sm.right(k)? * q.right(nn - k)?))?,
            )
        }
    };
    Ok(SideReport::new(lhs, rhs, params.with_int("n", nn)))
}

/// `sum (-1)^k C(n,k) s_k s_{n-k}` against the same with `sigma`.
pub fn check_self_conv(p: &Pair, n: usize) -> Result<SideReport> {
    p.expect_kind(Kind::First)?;
    let n = i(n);
    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.left(k)? * p.left(n - k)?))?;
    let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * p.right(k)? * p.right(n - k)?))?;
    Ok(SideReport::new(lhs, rhs, base(n as usize)))
}

/// `sum_k (-1)^k C(n,k)^3`.
pub fn dixon_sum(n: usize) -> Rat {
    (0..=n)
        .map(|k| {
            let b = choose(n, i(k));
            sign(i(k)) * &b * &b * b
        })
        .sum()
}

/// Closed form of [`dixon_sum`]: `(-1)^{n/2} C(n, n/2) C(3n/2, n)` for even
/// `n`, zero for odd.
pub fn dixon_closed(n: usize) -> Rat {
    if n % 2 == 1 {
        return Rat::default();
    }
    let h = n / 2;
    sign(i(h)) * choose(n, i(h)) * choose(3 * h, i(n))
}
