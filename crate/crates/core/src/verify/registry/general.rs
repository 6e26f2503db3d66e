//! The main theorems on random pairs and on every catalog pair.

use num_traits::Zero;

use crate::convolve::{
    check_extension, check_gen1, check_gen2, check_main1, check_main2, check_mixed,
    check_nested_shift, check_self_conv, check_swap, check_symmetry_first, check_symmetry_second,
    Extension,
};
use crate::exact::{c, int, pow2, sign, try_sum, Rat};
use crate::pairs::{catalog, catalog_pair, Kind, Pair};
use crate::params::Params;

use super::super::{Ctx, Grid, IdentityCheck, Part};
use super::{n_of, ns, one};

fn trials(nmax: usize) -> Vec<Params> {
    ns(nmax).int_range("trial", 0..=2).done()
}

fn slot(p: &Params) -> crate::error::Result<u64> {
    Ok(p.count("trial")? as u64 * 2)
}

fn un(p: &Params, name: &str) -> crate::error::Result<usize> {
    p.count(name)
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    let mut v = vec![
        IdentityCheck::new(
            "main1_random",
            "sum (-1)^(n-k) C(n,k) s_k t_(n-k) = sum (-1)^k C(n,k) sigma_k tau_(n-k), first-kind pairs",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                Ok(vec![check_main1(&ctx.first(s), &ctx.first(s + 1), un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "main2_random",
            "sum (-1)^k C(n,k) s_k t_(n-k) = sum (-1)^k C(n,k) sigma_k tau_(n-k), second-kind pairs",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                Ok(vec![check_main2(&ctx.second(s), &ctx.second(s + 1), un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "swap_second",
            "sum C(n,k) s_k tau_(n-k) = sum C(n,k) sigma_k t_(n-k), second-kind pairs",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                Ok(vec![check_swap(&ctx.second(s), &ctx.second(s + 1), un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "mixed",
            "sum C(n,k) s_k t_(n-k) = sum (-1)^k C(n,k) sigma_k tau_(n-k), first-kind s, second-kind t",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                Ok(vec![check_mixed(&ctx.first(s), &ctx.second(s + 1), un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "mixed_dual",
            "sum C(n,k) sigma_k t_(n-k) = sum (-1)^k C(n,k) s_k tau_(n-k), first-kind s, second-kind t",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                let (f, q) = (ctx.first(s), ctx.second(s + 1));
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * f.right(k)? * q.left(n - k)?))?;
                let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * f.left(k)? * q.right(n - k)?))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "main1_dual",
            "sum (-1)^(n-k) C(n,k) sigma_k t_(n-k) = sum (-1)^k C(n,k) s_k tau_(n-k)",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                let (f, g) = (ctx.first(s), ctx.first(s + 1));
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * f.right(k)? * g.left(n - k)?))?;
                let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * f.left(k)? * g.right(n - k)?))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "self_conv_second",
            "sum (-1)^k C(n,k) s_k s_(n-k) = sum (-1)^k C(n,k) sigma_k sigma_(n-k), second kind",
            trials,
            |ctx: &Ctx, p: &Params| {
                let q = ctx.second(slot(p)?);
                Ok(vec![check_main2(&q, &q, un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "self_conv_pt7l41w",
            "sum (-1)^k C(n,k) s_k s_(n-k) = sum (-1)^k C(n,k) sigma_k sigma_(n-k), both 0 for odd n",
            trials,
            |ctx: &Ctx, p: &Params| {
                let n = un(p, "n")?;
                let r = check_self_conv(&ctx.first(slot(p)?), n)?;
                let mut parts = vec![Part::tagged(
                    Params::new().with_label("part", "sides"),
                    r.lhs.clone(),
                    r.rhs.clone(),
                )];
                if n % 2 == 1 {
                    let zero = Params::new().with_label("part", "odd_zero");
                    parts.push(Part::tagged(zero.clone(), r.lhs, Rat::zero()));
                    parts.push(Part::tagged(zero.with_label("side", "rhs"), r.rhs, Rat::zero()));
                }
                Ok(parts)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "symmetry_first",
            "sum_k^n (-1)^k C(n,k) s_(k+m) = sum_k^m (-1)^k C(m,k) sigma_(k+n)",
            |nmax| ns(nmax).int_range("m", 0..=4).done(),
            |ctx: &Ctx, p: &Params| {
                Ok(vec![check_symmetry_first(&ctx.first(0), un(p, "m")?, un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "symmetry_second",
            "sum_k^n C(n,k) s_(k+m) = sum_k^m (-1)^(k+m) C(m,k) sigma_(k+n)",
            |nmax| ns(nmax).int_range("m", 0..=4).done(),
            |ctx: &Ctx, p: &Params| {
                Ok(vec![check_symmetry_second(&ctx.second(0), un(p, "m")?, un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "gen1",
            "shifted convolution: s shifted by m against r-th differences of tau, and symmetrically",
            |nmax| ns(nmax).int_range("m", 0..=3).int_range("r", 0..=3).done(),
            |ctx: &Ctx, p: &Params| {
                let r = check_gen1(&ctx.first(0), &ctx.first(1), un(p, "m")?, un(p, "r")?, un(p, "n")?)?;
                Ok(vec![r.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "gen2",
            "five-index double-difference convolution of two first-kind pairs",
            |nmax| {
                ns(nmax)
                    .int_range("m", 0..=2)
                    .int_range("r", 0..=2)
                    .int_range("u", 0..=2)
                    .int_range("v", 0..=2)
                    .done()
            },
            |ctx: &Ctx, p: &Params| {
                let r = check_gen2(
                    &ctx.first(0),
                    &ctx.first(1),
                    un(p, "m")?,
                    un(p, "n")?,
                    un(p, "r")?,
                    un(p, "u")?,
                    un(p, "v")?,
                )?;
                Ok(vec![r.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "nested_shift",
            "sum_k (-1)^k C(n,k) sum_p (-1)^p C(r,p) s_(k+p+m) = sum_k^m (-1)^k C(m,k) sigma_(n+k+r)",
            |nmax| ns(nmax).int_range("m", 0..=3).int_range("r", 0..=3).done(),
            |ctx: &Ctx, p: &Params| {
                let r = check_nested_shift(&ctx.first(0), un(p, "m")?, un(p, "r")?, un(p, "n")?)?;
                Ok(vec![r.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "ext_b0c9iwa",
            "sum (-1)^k C(n-j,k) 2^(n-k) s_k = 2^j sum C(n-j,k) sigma_k, j <= n",
            |nmax| ns(nmax).ints_with("j", |p| (0..=p.int("n").unwrap_or(0)).collect()).done(),
            |ctx: &Ctx, p: &Params| {
                let ext = Extension::PowerTwo { j: un(p, "j")? };
                Ok(vec![check_extension(ext, &ctx.first(0), None, un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "ext_ajkcgco",
            "sum (-1)^(n-k) C(n,k) C(n-k,j) 2^k s_k = sum (-1)^(j-k) C(n,k) C(n-k,j) 2^k sigma_k",
            |nmax| ns(nmax).int_range("j", 0..=nmax as i64).done(),
            |ctx: &Ctx, p: &Params| {
                let ext = Extension::DoubleBinom { j: un(p, "j")? };
                Ok(vec![check_extension(ext, &ctx.first(0), None, un(p, "n")?)?.into()])
            },
        )
        .randomized(),
        parity_check("ext_ajkcgco_invariant", &["lucas", "k_fib", "central_binom"], 1),
        parity_check("ext_ajkcgco_inverse", &["fibonacci", "harmonic_over_succ"], 0),
        IdentityCheck::new(
            "ext_2negk",
            "sum C(n,k) 2^-k s_k tau_(n-k) = sum C(n,k) 2^-k t_(n-k) sum_j C(k,j) sigma_j, second kind",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                let r = check_extension(Extension::HalfWeight, &ctx.second(s), Some(&ctx.second(s + 1)), un(p, "n")?)?;
                Ok(vec![r.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "ext_shifted",
            "sum_(k>=1) (-1)^(n-k-1) C(n,k) s_(k-1) t_(n-k) = sum_(k>=1) (-1)^k C(n,k) tau_(n-k) sum_(j<=k) sigma_(j-1)",
            trials,
            |ctx: &Ctx, p: &Params| {
                let s = slot(p)?;
                let r = check_extension(Extension::Shifted, &ctx.first(s), Some(&ctx.first(s + 1)), un(p, "n")?)?;
                Ok(vec![r.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "ext_km",
            "sum (-1)^(n-k) C(n,k) k^m s_k t_(n-k) = sum (-1)^k C(n,k) S_m(k) tau_(n-k)",
            |nmax| ns(nmax).int_range("m", 0..=3).done(),
            |ctx: &Ctx, p: &Params| {
                let ext = Extension::KPower { m: un(p, "m")? as u32 };
                let r = check_extension(ext, &ctx.first(0), Some(&ctx.first(1)), un(p, "n")?)?;
                Ok(vec![r.into()])
            },
        )
        .randomized(),
        IdentityCheck::new(
            "ext_km_special",
            "m = 1 form with k(sigma_k - sigma_(k-1)), and its s_k = -1/k, sigma_k = H_k value",
            |nmax| ns(nmax).labels("form", &["linear", "neg_recip"]).done(),
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let (s, t) = (ctx.first(0), ctx.first(1));
                if p.label("form")? == "linear" {
                    let lhs = try_sum(1..=n, |k| {
                        Ok(sign(n - k) * c(n, k) * int(k) * s.left(k)? * t.left(n - k)?)
                    })?;
                    let rhs = try_sum(1..=n, |k| {
                        let d = s.right(k)? - s.right(k - 1)?;
                        Ok(sign(k) * c(n, k) * int(k) * d * t.right(n - k)?)
                    })?;
                    one(lhs, rhs)
                } else {
                    let lhs = try_sum(1..=n, |k| Ok(sign(n - k - 1) * c(n, k) * t.left(n - k)?))?;
                    let rhs = try_sum(1..=n, |k| Ok(sign(k) * c(n, k) * t.right(n - k)?))?;
                    one(lhs, rhs)
                }
            },
        )
        .randomized(),
    ];
    v.extend(catalog_checks());
    v
}

/// `sum (-1)^k C(n,k) C(n-k,j) 2^k s_k = 0` for classified sequences; `odd`
/// is the required parity of `n + j`.
fn parity_check(id: &'static str, names: &'static [&'static str], odd: i64) -> IdentityCheck {
    let anchor = if odd == 1 {
        "sum (-1)^k C(n,k) C(n-k,j) 2^k s_k = 0 for invariant s, n and j of different parity"
    } else {
        "sum (-1)^k C(n,k) C(n-k,j) 2^k s_k = 0 for inverse invariant s, n and j of the same parity"
    };
    IdentityCheck::new(
        id,
        anchor,
        move |nmax| {
            Grid::unit()
                .labels("seq", names)
                .int_range("n", 0..=nmax as i64)
                .ints_with("j", |p| (0..=p.int("n").unwrap_or(0)).collect())
                .keep(move |p| (p.int("n").unwrap_or(0) + p.int("j").unwrap_or(0)).rem_euclid(2) == odd)
                .done()
        },
        |_, p: &Params| {
            let s = catalog_pair(p.label("seq")?, &Params::new())?;
            let (n, j) = (n_of(p)?, p.int("j")?);
            let lhs = try_sum(0..=n, |k| {
                Ok(sign(k) * c(n, k) * c(n - k, j) * pow2(k) * s.left(k)?)
            })?;
            one(lhs, Rat::zero())
        },
    )
}

/// One main-theorem check per catalog entry, against a random partner.
fn catalog_checks() -> Vec<IdentityCheck> {
    catalog()
        .iter()
        .map(|entry| {
            let name = entry.name;
            let kind = entry.kind;
            let (id, anchor) = match kind {
                Kind::First => (format!("main1_catalog_{name}"), format!("first-kind convolution theorem with the `{name}` pair")),
                Kind::Second => (format!("main2_catalog_{name}"), format!("second-kind convolution theorem with the `{name}` pair")),
            };
            IdentityCheck::new(
                id,
                anchor,
                move |nmax| {
                    let points = catalog()
                        .iter()
                        .find(|e| e.name == name)
                        .map(|e| e.grid())
                        .unwrap_or_default();
                    Grid::unit().product(&points).int_range("n", 0..=nmax as i64).done()
                },
                move |ctx: &Ctx, p: &Params| {
                    let pair = catalog_pair(name, p)?;
                    let n = un(p, "n")?;
                    let r = match kind {
                        Kind::First => check_main1(&pair, &ctx.first(0), n)?,
                        Kind::Second => check_main2(&pair, &ctx.second(0), n)?,
                    };
                    Ok(vec![r.into()])
                },
            )
            .randomized()
            .guarded(move |p| within_limit(name, p))
        })
        .collect()
}

fn within_limit(name: &str, p: &Params) -> bool {
    let n = p.int("n").unwrap_or(0);
    match catalog_pair(name, p).map(|pair: Pair| pair.limit()) {
        Ok(Some(limit)) => n <= limit as i64,
        Ok(None) => true,
        Err(_) => false,
    }
}
