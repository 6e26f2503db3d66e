//! Polynomial identities, checked coefficientwise, and the identities
//! obtained from them by substituting a transform pair.

use crate::error::Result;
use crate::exact::{c, int, inv_choose, sign, try_sum, Rat};
use crate::pairs::Pair;
use crate::params::Params;
use crate::polyring::{
    check_chen_direct, named_poly_grid, named_poly_sides, poly_sides_first, poly_sides_second,
    transfer_identity, PolyIdentityForm, NAMED_POLYS,
};

use super::super::{Ctx, Grid, IdentityCheck, Part};
use super::{coeff_parts, n_of, ns, one};

fn trials(nmax: usize) -> Vec<Params> {
    ns(nmax).int_range("trial", 0..=2).done()
}

/// `m, n, s` small, `n` up to `nmax`.
fn mns(nmax: usize) -> Grid {
    ns(nmax).int_range("m", 0..=3).int_range("s", 0..=3)
}

/// Chen's main result and its first-kind conversion; `s = 0` leaves the
/// boundary sum empty.
fn chen_main(p: &Params, t: &Pair, second: bool) -> Result<Vec<Part>> {
    let (m, n, s) = (p.int("m")?, n_of(p)?, p.int("s")?);
    let boundary = |k: i64| -> Result<Rat> {
        Ok(int(s) / int(m + n + s - k) * c(s - 1, k) * inv_choose(m + n + s - k - 1, n)? * t.right(k)?)
    };
    if second {
        let lhs = try_sum(0..=m, |k| Ok(c(m, k) * inv_choose(n + k + s, s)? * t.left(n + k + s)?))?;
        let main = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * inv_choose(m + k + s, s)? * t.right(m + k + s)?))?;
        let tail = try_sum(0..s, |k| Ok(sign(n + s - k) * boundary(k)?))?;
        one(lhs, main + tail)
    } else {
        let lhs = try_sum(0..=m, |k| Ok(sign(k) * c(m, k) * inv_choose(n + k + s, s)? * t.left(n + k + s)?))?;
        let main = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * inv_choose(m + k + s, s)? * t.right(m + k + s)?))?;
        let tail = try_sum(0..s, |k| Ok(sign(k) * boundary(k)?))?;
        one(lhs, sign(s) * main + tail)
    }
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    let mut v = vec![
        IdentityCheck::new(
            "poly_first",
            "sum C(n,k) s_(n-k) y^k = sum (-1)^(n-k) C(n,k) sigma_(n-k) (1+y)^k, coefficientwise",
            trials,
            |ctx: &Ctx, p: &Params| {
                let (l, r) = poly_sides_first(&ctx.first(p.count("trial")? as u64), p.count("n")?)?;
                Ok(coeff_parts(&l, &r))
            },
        )
        .randomized(),
        IdentityCheck::new(
            "poly_second",
            "sum (-1)^k C(n,k) s_(n-k) y^k = sum (-1)^k C(n,k) sigma_(n-k) (1+y)^k, coefficientwise",
            trials,
            |ctx: &Ctx, p: &Params| {
                let (l, r) = poly_sides_second(&ctx.second(p.count("trial")? as u64), p.count("n")?)?;
                Ok(coeff_parts(&l, &r))
            },
        )
        .randomized(),
        IdentityCheck::new(
            "sun_lemma",
            "sum_k^n (-1)^(k-r) C(n,k) C(k+m,r) t^(k+m-r) = sum_k^m (-1)^k C(m,k) C(k+n,r) (1-t)^(n+k-r), coefficientwise",
            |nmax| {
                let top = nmax.min(5) as i64;
                Grid::unit()
                    .int_range("m", 0..=top)
                    .int_range("n", 0..=top)
                    .ints_with("r", |p| (0..=p.int("m").unwrap().min(p.int("n").unwrap())).collect())
                    .done()
            },
            |_, p: &Params| {
                let form = PolyIdentityForm::sun_lemma(p.count("m")?, p.count("n")?, p.count("r")?)?;
                let (l, r) = form.sides();
                Ok(coeff_parts(&l, &r))
            },
        ),
        IdentityCheck::new(
            "chen_transfer",
            "sum_k^n (-1)^(k-r) C(n,k) C(k+m,r) s_(k+m-r) = sum_k^m (-1)^k C(m,k) C(k+n,r) sigma_(n+k-r), via the lemma and directly; second-kind transfer",
            |nmax| {
                let top = nmax.min(4) as i64;
                Grid::unit()
                    .labels("form", &["transfer", "direct", "second"])
                    .int_range("m", 0..=top)
                    .int_range("n", 0..=top)
                    .ints_with("r", |p| (0..=p.int("m").unwrap().min(p.int("n").unwrap()).min(3)).collect())
                    .done()
            },
            |ctx: &Ctx, p: &Params| {
                let (m, n, r) = (p.count("m")?, p.count("n")?, p.count("r")?);
                let report = match p.label("form")? {
                    "transfer" => transfer_identity(&PolyIdentityForm::sun_lemma(m, n, r)?, &ctx.first(0))?,
                    "direct" => check_chen_direct(&ctx.first(0), m, n, r)?,
                    _ => transfer_identity(&PolyIdentityForm::sun_lemma(m, n, r)?, &ctx.second(0))?,
                };
                Ok(vec![report.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "chen_main_second",
            "sum_k^m C(m,k) t_(n+k+s)/C(n+k+s,s) = sum_k^n (-1)^(n-k) C(n,k) tau_(m+k+s)/C(m+k+s,s) + sum_(k<s) (-1)^(n+s-k) s/(m+n+s-k) C(s-1,k) tau_k / C(m+n+s-k-1,n), second kind",
            |nmax| mns(nmax).done(),
            |ctx: &Ctx, p: &Params| chen_main(p, &ctx.second(0), true),
        )
        .randomized(),
        IdentityCheck::new(
            "chen_main_first",
            "sum_k^m (-1)^k C(m,k) t_(n+k+s)/C(n+k+s,s) = (-1)^s sum_k^n (-1)^k C(n,k) tau_(m+k+s)/C(m+k+s,s) + sum_(k<s) (-1)^k s/(m+n+s-k) C(s-1,k) tau_k / C(m+n+s-k-1,n), first kind",
            |nmax| mns(nmax).done(),
            |ctx: &Ctx, p: &Params| chen_main(p, &ctx.first(0), false),
        )
        .randomized(),
        IdentityCheck::new(
            "chen_thm32_both",
            "sum_k^m C(m,k) C(n+k,s) t_(n+k-s) = sum_k^n (-1)^(n-k) C(n,k) C(m+k,s) tau_(m+k-s) (second kind) and its first-kind form, s <= min(m,n)",
            |nmax| {
                ns(nmax)
                    .labels("kind", &["second", "first"])
                    .int_range("m", 0..=3)
                    .ints_with("s", |p| (0..=p.int("m").unwrap().min(p.int("n").unwrap())).collect())
                    .done()
            },
            |ctx: &Ctx, p: &Params| {
                let (m, n, s) = (p.int("m")?, n_of(p)?, p.int("s")?);
                if p.label("kind")? == "second" {
                    let t = ctx.second(0);
                    let lhs = try_sum(0..=m, |k| Ok(c(m, k) * c(n + k, s) * t.left(n + k - s)?))?;
                    let rhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * c(m + k, s) * t.right(m + k - s)?))?;
                    one(lhs, rhs)
                } else {
                    let t = ctx.first(0);
                    let lhs = try_sum(0..=m, |k| Ok(sign(s - k) * c(m, k) * c(n + k, s) * t.left(n + k - s)?))?;
                    let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * c(m + k, s) * t.right(m + k - s)?))?;
                    one(lhs, rhs)
                }
            },
        )
        .randomized(),
        IdentityCheck::new(
            "gq_thm3_both",
            "sum_k^s C(s,k) t_k / (C(m+n+s-k,m) (m+n+s+1-k)) = sum_k^s C(s,k) (-1)^(s-k) tau_k / (C(m+n+s-k,n) (m+n+s+1-k)) (second kind) and its first-kind form",
            |nmax| {
                Grid::unit()
                    .labels("kind", &["second", "first"])
                    .int_range("m", 0..=3)
                    .int_range("n", 0..=3)
                    .int_range("s", 0..=nmax as i64)
                    .done()
            },
            |ctx: &Ctx, p: &Params| {
                let (m, n, s) = (p.int("m")?, n_of(p)?, p.int("s")?);
                let second = p.label("kind")? == "second";
                let t = if second { ctx.second(0) } else { ctx.first(0) };
                let d = |k: i64| int(m + n + s + 1 - k);
                let lhs = try_sum(0..=s, |k| {
                    let w = if second { Rat::from(int(1)) } else { sign(k) };
                    Ok(w * c(s, k) * inv_choose(m + n + s - k, m)? * t.left(k)? / d(k))
                })?;
                let rhs = try_sum(0..=s, |k| {
                    Ok(c(s, k) * inv_choose(m + n + s - k, n)? * sign(s - k) * t.right(k)? / d(k))
                })?;
                one(lhs, rhs)
            },
        )
        .randomized(),
    ];
    v.extend(NAMED_POLYS.iter().map(|&name| {
        IdentityCheck::new(
            format!("poly_{name}"),
            format!("the `{name}` polynomial identity in t, coefficientwise"),
            move |nmax| named_poly_grid(name, nmax).unwrap_or_default(),
            move |_, p: &Params| {
                let (l, r) = named_poly_sides(name, p)?;
                Ok(coeff_parts(&l, &r))
            },
        )
    }));
    v
}
