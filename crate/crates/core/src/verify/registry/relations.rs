//! Relations between transforms and pair constructions.

use num_traits::Zero;

use crate::exact::{binom_rat, c, int, pow2, sign, try_sum, Rat};
use crate::pairs::{partial_sum_pairs, s_m_pair, PartialSum};
use crate::params::Params;
use crate::seqlib::{fibonacci, lucas};

use super::super::{Ctx, IdentityCheck, Part};
use super::{b, grid, n_of, ns, ns_pos, one};

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "ps67scn",
            "sum_(k<=n) tau_k = sum C(n+1,k+1) t_k, second kind; and sum (1+x)^k = sum C(n+1,k+1) x^k",
            |nmax| {
                let random = ns(nmax).labels("form", &["pair"]);
                let power = ns(nmax).labels("form", &["power"]).rats("x", &grid());
                [random.done(), power.done()].concat()
            },
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                if p.label("form")? == "pair" {
                    let t = ctx.second(0);
                    let lhs = try_sum(0..=n, |k| t.right(k))?;
                    let rhs = try_sum(0..=n, |k| Ok(c(n + 1, k + 1) * t.left(k)?))?;
                    one(lhs, rhs)
                } else {
                    let x = p.rat("x")?;
                    let x1 = &x + int(1);
                    let lhs = try_sum(0..=n, |k| crate::exact::pow(&x1, k))?;
                    let rhs = try_sum(0..=n, |k| Ok(c(n + 1, k + 1) * crate::exact::pow(&x, k)?))?;
                    one(lhs, rhs)
                }
            },
        )
        .randomized(),
        IdentityCheck::new(
            "oy8uhm0",
            "sum_(k=1)^n tau_(k-1) = sum_(k=1)^n C(n,k) t_(k-1), second kind",
            |nmax| ns(nmax).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let t = ctx.second(0);
                let lhs = try_sum(1..=n, |k| t.right(k - 1))?;
                let rhs = try_sum(1..=n, |k| Ok(c(n, k) * t.left(k - 1)?))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "xc556tq",
            "sum_(k=1)^n tau_(k-1) = sum_(k=1)^n (-1)^(k-1) C(n,k) t_(k-1), first kind",
            |nmax| ns(nmax).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let t = ctx.first(0);
                let lhs = try_sum(1..=n, |k| t.right(k - 1))?;
                let rhs = try_sum(1..=n, |k| Ok(sign(k - 1) * c(n, k) * t.left(k - 1)?))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "hq03eji_pairs",
            "(-sum_(j=1)^k tau_(j-1), t_(k-1)) is a first-kind pair; Lucas (L_(k+1)-1, -L_(k-1)) and Fibonacci (F_(k+1)-1, F_(k-1)) instances",
            |nmax| ns(nmax).labels("form", &["pair", "lucas", "fibonacci"]).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let tail = |n: i64, f: &dyn Fn(i64) -> Rat| if n == 0 { Rat::zero() } else { f(n - 1) };
                let (lhs, rhs) = match p.label("form")? {
                    "pair" => {
                        let t = ctx.first(0);
                        let a = |k: i64| -> crate::error::Result<Rat> { Ok(-try_sum(1..=k, |j| t.right(j - 1))?) };
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * a(k)?))?;
                        let rhs = if n == 0 { Rat::zero() } else { t.left(n - 1)? };
                        (lhs, rhs)
                    }
                    "lucas" => {
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * (lucas(k + 1) - int(1))))?;
                        (lhs, tail(n, &|i| -lucas(i)))
                    }
                    _ => {
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * (fibonacci(k + 1) - int(1))))?;
                        (lhs, tail(n, &fibonacci))
                    }
                };
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "qpev64c",
            "sum_(k=1)^n (-1)^k C(n,k) sum_(j=1)^(k-1) t_(j-1) = sum_(k=1)^(n-1) tau_(k-1), n >= 1",
            |nmax| ns_pos(nmax).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let t = ctx.first(0);
                let lhs = try_sum(1..=n, |k| Ok(sign(k) * c(n, k) * try_sum(1..k, |j| t.left(j - 1))?))?;
                let rhs = try_sum(1..n, |k| t.right(k - 1))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "abwtmhn_lucas",
            "(sum_(j<=k) t_j, sum_(j<=k) tau_j) over (k+1)(k+2) is a first-kind pair; (L_(k+2)-1)/((k+1)(k+2)) is invariant",
            |nmax| ns(nmax).labels("form", &["pair", "lucas"]).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let w = |k: i64| int((k + 1) * (k + 2));
                if p.label("form")? == "pair" {
                    let t = ctx.first(0);
                    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * try_sum(0..=k, |j| t.left(j))? / w(k)))?;
                    one(lhs, try_sum(0..=n, |j| t.right(j))? / w(n))
                } else {
                    let u = |k: i64| (lucas(k + 2) - int(1)) / w(k);
                    let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * u(k)))?;
                    one(lhs, u(n))
                }
            },
        )
        .randomized(),
        IdentityCheck::new(
            "pop9ybt",
            "sum C(n,k) sigma_k = sum C(n,k) 2^(n-k) s_k, second kind",
            |nmax| ns(nmax).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let s = ctx.second(0);
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * s.right(k)?))?;
                let rhs = try_sum(0..=n, |k| Ok(c(n, k) * pow2(n - k) * s.left(k)?))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "binom_xz_2k",
            "sum C(n,k) C(k+x,k+z) = sum C(n,k) C(x,k+z) 2^(n-k)",
            |nmax| ns(nmax).rats("x", &grid()).int_range("z", -1..=3).done(),
            |_, p: &Params| {
                let (n, x, z) = (n_of(p)?, p.rat("x")?, p.int("z")?);
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * binom_rat(&(&x + int(k)), k + z)))?;
                let rhs = try_sum(0..=n, |k| Ok(c(n, k) * binom_rat(&x, k + z) * pow2(n - k)))?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "s4jiizc",
            "sum (-1)^(n-k) C(n-j,k-j) t_(n-k) = tau_(n-j), j <= n",
            |nmax| ns(nmax).ints_with("j", |p| (0..=p.int("n").unwrap_or(0)).collect()).done(),
            |ctx: &Ctx, p: &Params| {
                let (n, j) = (n_of(p)?, p.int("j")?);
                let t = ctx.first(0);
                let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n - j, k - j) * t.left(n - k)?))?;
                one(lhs, t.right(n - j)?)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "gnvsdip",
            "sum (-1)^k C(n,k) k t_k = n (tau_n - tau_(n-1)), n >= 1",
            |nmax| ns_pos(nmax).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let t = ctx.first(0);
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * int(k) * t.left(k)?))?;
                one(lhs, int(n) * (t.right(n)? - t.right(n - 1)?))
            },
        )
        .randomized(),
        IdentityCheck::new(
            "k_bernoulli",
            "sum C(n,k) k B_k = (-1)^n n (B_n + B_(n-1)) = n B_n (even n != 2), -n B_(n-1) (n > 1 odd), -1/2 (n = 1)",
            // the cased form drops B_(n-1), which is nonzero at n = 2 (B_1)
            |nmax| {
                ns(nmax)
                    .labels("form", &["general", "cased"])
                    .keep(|p| !(p.label("form").unwrap() == "cased" && p.int("n").unwrap() == 2))
                    .done()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * int(k) * b(k)))?;
                let rhs = if n == 0 {
                    Rat::zero()
                } else if p.label("form")? == "general" {
                    sign(n) * int(n) * (b(n) + b(n - 1))
                } else if n % 2 == 0 {
                    int(n) * b(n)
                } else if n > 1 {
                    -int(n) * b(n - 1)
                } else {
                    crate::exact::rat(-1, 2)
                };
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "l9mldgr_m2_m3",
            "sum (-1)^k C(n,k) k^m s_k = S_m(n), S_0 = sigma, S_m(k) = k (S_(m-1)(k) - S_(m-1)(k-1)); explicit m = 2 and m = 3 forms",
            |nmax| {
                let explicit = ns(nmax).labels("form", &["m2", "m3"]);
                let general = ns(nmax).labels("form", &["general"]).int_range("m", 0..=4);
                [explicit.done(), general.done()].concat()
            },
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let s = ctx.first(0);
                // differences that carry a zero coefficient are skipped, so
                // small n never touches sigma at negative indices
                let d = |c: Rat, i: i64| -> crate::error::Result<Rat> {
                    if c.is_zero() {
                        Ok(c)
                    } else {
                        Ok(c * (s.right(i)? - s.right(i - 1)?))
                    }
                };
                let moment = |m: u32| try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * int(k).pow(m as i32) * s.left(k)?));
                match p.label("form")? {
                    "m2" => {
                        let rhs = d(int(n * n), n)? - d(int(n * (n - 1)), n - 1)?;
                        one(moment(2)?, rhs)
                    }
                    "m3" => {
                        let rhs = d(int(n * n * n), n)? - d(int(n * (n - 1) * (2 * n - 1)), n - 1)?
                            + d(int(n * (n - 1) * (n - 2)), n - 2)?;
                        one(moment(3)?, rhs)
                    }
                    _ => {
                        let m = p.count("m")? as u32;
                        one(moment(m)?, s_m_pair(&s, m)?.right(n)?)
                    }
                }
            },
        )
        .randomized(),
        IdentityCheck::new(
            "partial_sum_family",
            "the six partial-sum constructions of a first-kind pair are again first-kind pairs",
            |nmax| {
                let names: Vec<&str> = PartialSum::ALL.iter().map(|w| w.as_str()).collect();
                ns(nmax).labels("which", &names).done()
            },
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let which: PartialSum = p.label("which")?.parse()?;
                let pair = partial_sum_pairs(&ctx.first(0), which)?;
                Ok(vec![Part::new(pair.transform_of_left(n as usize)?, pair.right(n)?)])
            },
        )
        .randomized(),
    ]
}
