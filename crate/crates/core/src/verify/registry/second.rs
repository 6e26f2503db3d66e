//! Worked second-kind and mixed identities.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::{binom_rat, c, int, inv_binom, inv_choose, pow, pow2, rat, sign, try_sum, Rat};
use crate::params::Params;
use crate::seqlib::{bernoulli_poly, fibonacci, lucas, odd_harmonic};

use super::super::{Ctx, IdentityCheck};
use super::{b, grid, h, n_of, nonzero_grid, ns, one};

fn bp(n: i64, x: &Rat) -> Rat {
    bernoulli_poly(n as usize, x)
}

fn o(k: i64) -> Rat {
    odd_harmonic(k as usize)
}

/// `m = n + p + d` for each offset `d`.
fn integer_ms(offsets: &'static [i64]) -> impl Fn(&Params) -> Vec<i64> {
    move |p| {
        let base = p.int("n").unwrap_or(0) + p.int_or("p", 0).unwrap_or(0);
        offsets.iter().map(|d| base + d).collect()
    }
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "bernoulli_poly_shift_conv",
            "sum (-1)^k C(n,k) y^k B_(n-k)(x) t_k = sum (-1)^k C(n,k) y^k B_(n-k)(x+y) tau_k, with the Bernoulli-polynomial partner and its w-shift and y = x special cases",
            |nmax| {
                let random = ns(nmax).labels("form", &["bf4tiok"]).rats("x", &grid()).rats("y", &grid());
                let small = [int(0), rat(1, 2), rat(-5, 7)];
                let bw = ns(nmax)
                    .labels("form", &["bw"])
                    .rats("x", &small)
                    .rats("y", &[int(1), rat(-1, 2), int(3)])
                    .rats("z", &small)
                    .rats("w", &[int(-1), rat(1, 2)]);
                let shift = ns(nmax).labels("form", &["shift"]).rats("x", &grid()).rats("z", &small).rats("w", &grid());
                let zc = ns(nmax).labels("form", &["zc4ufo6"]).rats("y", &grid()).rats("w", &nonzero_grid());
                [random.done(), bw.done(), shift.done(), zc.done()].concat()
            },
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                match p.label("form")? {
                    "bf4tiok" => {
                        let (x, y) = (p.rat("x")?, p.rat("y")?);
                        let t = ctx.second(0);
                        let xy = &x + &y;
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&y, k)? * bp(n - k, &x) * t.left(k)?))?;
                        let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&y, k)? * bp(n - k, &xy) * t.right(k)?))?;
                        one(lhs, rhs)
                    }
                    "bw" => {
                        let (x, y, z, w) = (p.rat("x")?, p.rat("y")?, p.rat("z")?, p.rat("w")?);
                        let q = &y / &w;
                        let (xy, zw) = (&x + &y, &z + &w);
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&q, k)? * bp(n - k, &x) * bp(k, &z)))?;
                        let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&q, k)? * bp(n - k, &xy) * bp(k, &zw)))?;
                        one(lhs, rhs)
                    }
                    "shift" => {
                        let (x, z, w) = (p.rat("x")?, p.rat("z")?, p.rat("w")?);
                        let (xw, zw) = (&x + &w, &z + &w);
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * bp(n - k, &x) * bp(k, &z)))?;
                        let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * bp(n - k, &xw) * bp(k, &zw)))?;
                        one(lhs, rhs)
                    }
                    _ => {
                        let (y, w) = (p.rat("y")?, p.rat("w")?);
                        let q = &y / &w;
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&q, k)? * bp(n - k, &y) * bp(k, &w)))?;
                        let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&q, k)? * b(n - k) * b(k)))?;
                        one(lhs, rhs)
                    }
                }
            },
        )
        .randomized(),
        IdentityCheck::new(
            "zc4ufo6_prop",
            "sum (-1)^k C(n,k) (y/w)^k B_(n-k)(y) B_k(w) = (ny/(2w)) (1 - (y/w)^(n-2)) B_(n-1) for odd n",
            |nmax| ns(nmax).rats("y", &nonzero_grid()).rats("w", &nonzero_grid()).done(),
            |_, p: &Params| {
                let (n, y, w) = (n_of(p)?, p.rat("y")?, p.rat("w")?);
                let q = &y / &w;
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * pow(&q, k)? * bp(n - k, &y) * bp(k, &w)))?;
                let rhs = int(n) * &y / (int(2) * &w) * (Rat::one() - pow(&q, n - 2)?) * b(n - 1);
                one(lhs, rhs)
            },
        )
        .guarded(|p| p.int("n").unwrap() % 2 == 1),
        IdentityCheck::new(
            "zc3ejk3",
            "sum (-1)^(n-k) C(n,k) C(x,k) B_(n-k) = sum C(n,k) C(x+k,k) B_(n-k)",
            |nmax| ns(nmax).rats("x", &grid()).done(),
            |_, p: &Params| {
                let (n, x) = (n_of(p)?, p.rat("x")?);
                let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * binom_rat(&x, k) * b(n - k)))?;
                let rhs = try_sum(0..=n, |k| Ok(c(n, k) * binom_rat(&(&x + int(k)), k) * b(n - k)))?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "numg9mq",
            "sum (-1)^(n-k) C(n,k) C(x,k) (H_x - H_(x-k)) B_(n-k) = sum C(n,k) C(x+k,k) (H_(x+k) - H_x) B_(n-k), integer x >= n",
            |nmax| ns(nmax).ints_with("x", integer_ms(&[0, 1, 3])).done(),
            |_, p: &Params| {
                let (n, x) = (n_of(p)?, p.int("x")?);
                let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * c(x, k) * (h(x)? - h(x - k)?) * b(n - k)))?;
                let rhs = try_sum(0..=n, |k| Ok(c(n, k) * c(x + k, k) * (h(x + k)? - h(x)?) * b(n - k)))?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "s8xzyeq",
            "sum C(n,k) C(2k,k) 4^-k O_k B_(n-k) = 0 for even n",
            |nmax| ns(nmax).keep(|p| p.int("n").unwrap() % 2 == 0).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * c(2 * k, k) * pow2(-2 * k) * o(k) * b(n - k)))?;
                one(lhs, Rat::zero())
            },
        ),
        IdentityCheck::new(
            "binom_x_self",
            "sum (-1)^k C(n,k) C(x,k) C(x,n-k) = sum (-1)^k C(n,k) C(x+k,k) C(x+n-k,n-k)",
            |nmax| ns(nmax).rats("x", &grid()).done(),
            |_, p: &Params| {
                let (n, x) = (n_of(p)?, p.rat("x")?);
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * binom_rat(&x, k) * binom_rat(&x, n - k)))?;
                let rhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * c(n, k) * binom_rat(&(&x + int(k)), k) * binom_rat(&(&x + int(n - k)), n - k))
                })?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "harm_binom_self",
            "sum (-1)^k C(n,k) C(m,k) C(m,n-k) H_k H_(n-k) = sum (-1)^k C(n,k) C(k+m,m) C(n-k+m,m) (H_m+H_k-H_(k+m)) (H_m+H_(n-k)-H_(n-k+m))",
            |nmax| ns(nmax).int_range("m", 0..=3).done(),
            |_, p: &Params| {
                let (n, m) = (n_of(p)?, p.int("m")?);
                let g = |k: i64| -> Result<Rat> { Ok(c(k + m, m) * (h(m)? + h(k)? - h(k + m)?)) };
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * c(m, k) * c(m, n - k) * h(k)? * h(n - k)?))?;
                let rhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * g(k)? * g(n - k)?))?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "zrnqrxn",
            "sum C(n,k) C(m,k) C(x+n-k,n-k) H_k = sum C(n,k) C(x,n-k) C(k+m,m) (H_m+H_k-H_(k+m))",
            |nmax| ns(nmax).int_range("m", 0..=3).rats("x", &grid()).done(),
            |_, p: &Params| {
                let (n, m, x) = (n_of(p)?, p.int("m")?, p.rat("x")?);
                let lhs = try_sum(0..=n, |k| {
                    Ok(c(n, k) * c(m, k) * binom_rat(&(&x + int(n - k)), n - k) * h(k)?)
                })?;
                let rhs = try_sum(0..=n, |k| {
                    Ok(c(n, k) * binom_rat(&x, n - k) * c(k + m, m) * (h(m)? + h(k)? - h(k + m)?))
                })?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "trif_swap",
            "sum C(n,k) tau_k / C(m,p+n-k) = sum C(n,k) (m+1)/(m-n+k+1) t_k / C(m-n+k,p)",
            |nmax| {
                let ints = ns(nmax).int_range("p", 0..=2).ints_with("mi", integer_ms(&[0, 2]));
                let ints: Vec<Params> = ints
                    .done()
                    .into_iter()
                    .map(|q| {
                        let m = q.int("mi").unwrap();
                        let base = Params::new().with_int("n", q.int("n").unwrap()).with_int("p", q.int("p").unwrap());
                        base.with_int("m", m)
                    })
                    .collect();
                let rats = ns(nmax).int_range("p", 0..=2).rats("m", &[rat(-1, 2), rat(1, 2), rat(-5, 7)]);
                [ints, rats.done()].concat()
            },
            |ctx: &Ctx, p: &Params| {
                let (n, m, pp) = (n_of(p)?, p.rat("m")?, p.int("p")?);
                let t = ctx.second(0);
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * inv_binom(&m, pp + n - k)? * t.right(k)?))?;
                let rhs = try_sum(0..=n, |k| {
                    let mk = &m - int(n - k);
                    Ok(c(n, k) * (&m + int(1)) / (&mk + int(1)) * inv_binom(&mk, pp)? * t.left(k)?)
                })?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "evuuti7",
            "sum C(n,k) (H_(m-k) - H_m)/C(m,k) = -n/(m-n+1)^2, integer m >= n",
            |nmax| ns(nmax).ints_with("m", integer_ms(&[0, 1, 3])).done(),
            |_, p: &Params| {
                let (n, m) = (n_of(p)?, p.int("m")?);
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * inv_choose(m, k)? * (h(m - k)? - h(m)?)))?;
                let d = m - n + 1;
                one(lhs, int(-n) / int(d * d))
            },
        ),
        IdentityCheck::new(
            "harm_partial_wellknown",
            "sum C(n,k) H_(m-k)/C(m,k) = (m+1)/(m-n+1) H_m - n/(m-n+1)^2, and sum_(k<=n) H_k = (n+1) H_n - n",
            |nmax| {
                let general = ns(nmax).labels("form", &["general"]).ints_with("m", integer_ms(&[0, 1, 3]));
                [general.done(), ns(nmax).labels("form", &["sum"]).done()].concat()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                if p.label("form")? == "general" {
                    let m = p.int("m")?;
                    let lhs = try_sum(0..=n, |k| Ok(c(n, k) * inv_choose(m, k)? * h(m - k)?))?;
                    let d = m - n + 1;
                    one(lhs, int(m + 1) / int(d) * h(m)? - int(n) / int(d * d))
                } else {
                    let lhs = try_sum(0..=n, h)?;
                    one(lhs, int(n + 1) * h(n)? - int(n))
                }
            },
        ),
        IdentityCheck::new(
            "okprop",
            "sum (-1)^k C(n,k) 4^k O_k / C(2k,k) = -2n/(2n-1)^2",
            |nmax| ns(nmax).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * inv_choose(2 * k, k)? * pow2(2 * k) * o(k)))?;
                let d = 2 * n - 1;
                one(lhs, int(-2 * n) / int(d * d))
            },
        ),
        IdentityCheck::new(
            "v4unj46",
            "sum C(n,k) (H_(m-p-n+k) - H_(p+n-k)) tau_k / C(m,p+n-k) = sum C(n,k) (m+1)/(m-n+k+1) (H_(m-p-n+k) - H_p) t_k / C(m-n+k,p), integer m >= n + p",
            |nmax| ns(nmax).int_range("p", 0..=2).ints_with("m", integer_ms(&[0, 1, 3])).done(),
            |ctx: &Ctx, p: &Params| {
                let (n, m, pp) = (n_of(p)?, p.int("m")?, p.int("p")?);
                let t = ctx.second(0);
                let lhs = try_sum(0..=n, |k| {
                    Ok(c(n, k) * inv_choose(m, pp + n - k)? * (h(m - pp - n + k)? - h(pp + n - k)?) * t.right(k)?)
                })?;
                let rhs = try_sum(0..=n, |k| {
                    let mk = m - n + k;
                    Ok(c(n, k) * inv_choose(mk, pp)? * int(m + 1) / int(mk + 1) * (h(mk - pp)? - h(pp)?) * t.left(k)?)
                })?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "h_partial_prop",
            "sum C(n+1,k+1) H_k t_k = sum (H_k - H_(n-k)) tau_k, second kind; Bernoulli and power cases",
            |nmax| {
                let fixed = ns(nmax).labels("form", &["general", "bernoulli"]);
                let power = ns(nmax).labels("form", &["power"]).rats("x", &grid());
                [fixed.done(), power.done()].concat()
            },
            |ctx: &Ctx, p: &Params| {
                let n = n_of(p)?;
                let (s, sigma): (Box<dyn Fn(i64) -> Result<Rat>>, Box<dyn Fn(i64) -> Result<Rat>>) = match p.label("form")? {
                    "general" => {
                        let t = ctx.second(0);
                        let u = t.clone();
                        (Box::new(move |k| t.left(k)), Box::new(move |k| u.right(k)))
                    }
                    "bernoulli" => (Box::new(|k| Ok(b(k))), Box::new(|k| Ok(sign(k) * b(k)))),
                    _ => {
                        let x = p.rat("x")?;
                        let x1 = &x + int(1);
                        (Box::new(move |k| pow(&x, k)), Box::new(move |k| pow(&x1, k)))
                    }
                };
                let lhs = try_sum(0..=n, |k| Ok(c(n + 1, k + 1) * h(k)? * s(k)?))?;
                let rhs = try_sum(0..=n, |k| Ok((h(k)? - h(n - k)?) * sigma(k)?))?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "fib_bernoulli_even",
            "sum C(n,k) F_k B_(n-k) = 0 for even n",
            |nmax| ns(nmax).keep(|p| p.int("n").unwrap() % 2 == 0).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                one(try_sum(0..=n, |k| Ok(c(n, k) * fibonacci(k) * b(n - k)))?, Rat::zero())
            },
        ),
        IdentityCheck::new(
            "lucas_bernoulli_odd",
            "sum C(n,k) L_k B_(n-k) = 0 for odd n",
            |nmax| ns(nmax).keep(|p| p.int("n").unwrap() % 2 == 1).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                one(try_sum(0..=n, |k| Ok(c(n, k) * lucas(k) * b(n - k)))?, Rat::zero())
            },
        ),
        IdentityCheck::new(
            "jy2d3um",
            "sum C(n,k) H_(k+m) t_(n-k) = H_m tau_n - sum_(k>=1) (-1)^k C(n,k) tau_(n-k) / (k C(k+m,m)), second kind",
            |nmax| ns(nmax).int_range("m", 0..=3).done(),
            |ctx: &Ctx, p: &Params| {
                let (n, m) = (n_of(p)?, p.int("m")?);
                let t = ctx.second(0);
                let lhs = try_sum(0..=n, |k| Ok(c(n, k) * h(k + m)? * t.left(n - k)?))?;
                let tail = try_sum(1..=n, |k| Ok(sign(k) * c(n, k) * inv_choose(k + m, m)? / int(k) * t.right(n - k)?))?;
                one(lhs, h(m)? * t.right(n)? - tail)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "t7tu7xu_special",
            "sum C(n,k) H_k t^k and sum C(n,k) O_k t^k in powers of t and 1+t, with their t = 1 values",
            |nmax| {
                let sums = ns(nmax).labels("form", &["h_sum", "o_sum"]);
                let at = ns(nmax)
                    .labels("form", &["h_at", "o_at"])
                    .rats("t", &[int(1), int(-1), rat(1, 2), rat(-2, 3), int(3)]);
                [sums.done(), at.done()].concat()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                let odd_w = |k: i64| -> Result<Rat> { Ok(pow2(2 * k - 1) * inv_choose(2 * k, k)?) };
                match p.label("form")? {
                    "h_sum" => {
                        let lhs = try_sum(0..=n, |k| Ok(c(n, k) * h(k)?))?;
                        let rhs = try_sum(1..=n, |k| Ok(sign(k - 1) * pow2(n - k) * c(n, k) / int(k)))?;
                        one(lhs, rhs)
                    }
                    "o_sum" => {
                        let lhs = try_sum(0..=n, |k| Ok(c(n, k) * o(k)))?;
                        let rhs = try_sum(1..=n, |k| {
                            Ok(sign(k - 1) * pow2(n + k - 1) * c(n, k) * inv_choose(2 * k, k)? / int(k))
                        })?;
                        one(lhs, rhs)
                    }
                    form => {
                        let t = p.rat("t")?;
                        let t1 = &t + int(1);
                        let harmonic = form == "h_at";
                        let lhs = try_sum(0..=n, |k| {
                            let v = if harmonic { h(k)? } else { o(k) };
                            Ok(c(n, k) * v * pow(&t, k)?)
                        })?;
                        let rhs = try_sum(1..=n, |k| {
                            let w = if harmonic { Rat::one() } else { odd_w(k)? };
                            Ok(sign(k - 1) * c(n, k) * w / int(k) * pow(&t, k)? * pow(&t1, n - k)?)
                        })?;
                        one(lhs, rhs)
                    }
                }
            },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_offsets_follow_n_and_p() {
        let f = integer_ms(&[0, 2]);
        assert_eq!(f(&Params::new().with_int("n", 3).with_int("p", 1)), vec![4, 6]);
        assert_eq!(f(&Params::new().with_int("n", 2)), vec![2, 4]);
    }
}
