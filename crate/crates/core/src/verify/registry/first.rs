//! Worked first-kind identities: concrete pairs fed through the convolution
//! theorem and its corollaries.

use num_traits::Zero;

use crate::convolve::{dixon_closed, dixon_sum};
use crate::error::Result;
use crate::exact::{binom_rat, c, int, inv_binom, inv_choose, pow2, rat, sign, try_sum, Rat};
use crate::pairs::catalog_pair;
use crate::params::Params;
use crate::seqlib::{catalan, fibonacci, gibonacci, lucas, odd_harmonic};

use super::super::{Ctx, Grid, IdentityCheck};
use super::{binom_nonvanishing, grid, h, n_of, nonzero_grid, ns, ns_pos, one};

fn cat(k: i64) -> Rat {
    catalan(k as usize)
}

/// `C(n, n/2) * rest` for even `n`, else 0.
fn even_only(n: i64, f: impl FnOnce(i64) -> Rat) -> Rat {
    if n % 2 == 0 {
        f(n / 2)
    } else {
        Rat::zero()
    }
}

fn forms(g: Grid, names: &[&str]) -> Grid {
    g.labels("form", names)
}

pub(super) fn checks() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "binom_upper_conv",
            "sum (-1)^(n-k) C(n,k) C(y-k,x) t_(n-k) = sum (-1)^k C(n,k) C(y-k,x-k) tau_(n-k)",
            |nmax| Grid::unit().int_range("x", 0..=3).rats("y", &grid()).int_range("n", 0..=nmax as i64).done(),
            |ctx: &Ctx, p: &Params| {
                let (n, x, y) = (n_of(p)?, p.int("x")?, p.rat("y")?);
                let t = ctx.first(0);
                let lhs = try_sum(0..=n, |k| {
                    Ok(sign(n - k) * c(n, k) * binom_rat(&(&y - int(k)), x) * t.left(n - k)?)
                })?;
                let rhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * c(n, k) * binom_rat(&(&y - int(k)), x - k) * t.right(n - k)?)
                })?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "harmonic_frac_conv",
            "sum (-1)^(n-k) C(n,k) m H_(k+m)/(k+m) t_(n-k) = sum (-1)^k C(n,k) (H_(k+m) - H_k)/C(k+m,m) tau_(n-k)",
            |nmax| ns(nmax).int_range("m", 1..=3).done(),
            |ctx: &Ctx, p: &Params| {
                let (n, m) = (n_of(p)?, p.int("m")?);
                let t = ctx.first(0);
                let lhs = try_sum(0..=n, |k| {
                    Ok(sign(n - k) * c(n, k) * int(m) * h(k + m)? / int(k + m) * t.left(n - k)?)
                })?;
                let rhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * c(n, k) * inv_choose(k + m, m)? * (h(k + m)? - h(k)?) * t.right(n - k)?)
                })?;
                one(lhs, rhs)
            },
        )
        .randomized(),
        IdentityCheck::new(
            "gibonacci_harmonic",
            "sum (-1)^(n-k) C(n,k) m H_(k+m)/(k+m) L_t^k G_(t(n-k)+r) = (-1)^r sum (-1)^k C(n,k) (H_(k+m)-H_k)/C(k+m,m) L_t^k (G_0 L_(t(n-k)-r) - G_(t(n-k)-r)); Fibonacci and m = 1 cases",
            |nmax| {
                let general = forms(ns(nmax), &["general"])
                    .int_range("m", 1..=2)
                    .rats("g0", &[int(0), int(2), rat(1, 2)])
                    .rats("g1", &[int(1), int(-3)])
                    .ints("t", &[1, 2, -3])
                    .ints("r", &[0, 1, -2]);
                let fib = forms(ns(nmax), &["fibonacci"]).int_range("m", 1..=3);
                let special = forms(ns(nmax), &["special"]);
                [general.done(), fib.done(), special.done()].concat()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                let hk = |k: i64, m: i64| -> Result<Rat> { Ok(inv_choose(k + m, m)? * (h(k + m)? - h(k)?)) };
                match p.label("form")? {
                    "general" => {
                        let (m, g0, g1, t, r) = (p.int("m")?, p.rat("g0")?, p.rat("g1")?, p.int("t")?, p.int("r")?);
                        let g = |i: i64| gibonacci(&g0, &g1, i);
                        let lt = lucas(t);
                        let lpow = |k: i64| -> Rat {
                            (0..k).fold(int(1), |acc, _| acc * &lt)
                        };
                        let lhs = try_sum(0..=n, |k| {
                            Ok(sign(n - k) * c(n, k) * int(m) * h(k + m)? / int(k + m) * lpow(k) * g(t * (n - k) + r))
                        })?;
                        let rhs = try_sum(0..=n, |k| {
                            let inner = &g0 * lucas(t * (n - k) - r) - g(t * (n - k) - r);
                            Ok(sign(k) * c(n, k) * hk(k, m)? * lpow(k) * inner)
                        })?;
                        one(lhs, sign(r) * rhs)
                    }
                    "fibonacci" => {
                        let m = p.int("m")?;
                        let lhs = try_sum(0..=n, |k| {
                            Ok(sign(n - k) * c(n, k) * int(m) / int(k + m) * h(k + m)? * fibonacci(n - k))
                        })?;
                        let rhs = try_sum(0..=n, |k| Ok(sign(k - 1) * c(n, k) * hk(k, m)? * fibonacci(n - k)))?;
                        one(lhs, rhs)
                    }
                    _ => {
                        let lhs = try_sum(0..=n, |k| {
                            Ok(sign(n - k) * c(n, k) * h(k + 1)? * fibonacci(n - k) / int(k + 1))
                        })?;
                        let rhs = try_sum(0..=n, |k| {
                            Ok(sign(k - 1) * c(n, k) * fibonacci(n - k) / int((k + 1) * (k + 1)))
                        })?;
                        one(lhs, rhs)
                    }
                }
            },
        ),
        IdentityCheck::new(
            "binom_ratio_conv",
            "sum (-1)^(n-k) C(n,k) C(y-k,x) C(u,n-k)/C(v,n-k) = sum (-1)^k C(n,k) C(y-k,x-k) C(v-u,n-k)/C(v,n-k); v = n and transform special cases",
            |nmax| {
                let general = forms(ns(nmax), &["general"])
                    .int_range("x", 0..=2)
                    .rats("y", &grid())
                    .rats("u", &grid())
                    .rats("v", &grid())
                    .keep(|p| binom_nonvanishing(&p.rat("v").unwrap(), p.int("n").unwrap() + 1));
                let v_eq_n = forms(ns(nmax), &["v_eq_n"]).int_range("x", 0..=3).rats("y", &grid()).rats("u", &grid());
                let special = forms(ns(nmax), &["special"]).int_range("x", 0..=3).rats("y", &grid());
                [general.done(), v_eq_n.done(), special.done()].concat()
            },
            |_, p: &Params| {
                let (n, x, y) = (n_of(p)?, p.int("x")?, p.rat("y")?);
                let s = |k: i64| binom_rat(&(&y - int(k)), x);
                let sigma = |k: i64| binom_rat(&(&y - int(k)), x - k);
                match p.label("form")? {
                    "general" => {
                        let (u, v) = (p.rat("u")?, p.rat("v")?);
                        let lhs = try_sum(0..=n, |k| {
                            Ok(sign(n - k) * c(n, k) * s(k) * binom_rat(&u, n - k) * inv_binom(&v, n - k)?)
                        })?;
                        let rhs = try_sum(0..=n, |k| {
                            Ok(sign(k) * c(n, k) * sigma(k) * binom_rat(&(&v - &u), n - k) * inv_binom(&v, n - k)?)
                        })?;
                        one(lhs, rhs)
                    }
                    "v_eq_n" => {
                        let u = p.rat("u")?;
                        let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * s(k) * binom_rat(&u, n - k)))?;
                        let rhs = try_sum(0..=n, |k| Ok(sign(k) * sigma(k) * binom_rat(&(int(n) - &u), n - k)))?;
                        one(lhs, rhs)
                    }
                    _ => {
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * sigma(k)))?;
                        one(lhs, binom_rat(&(&y - int(n)), x))
                    }
                }
            },
        ),
        IdentityCheck::new(
            "harm_odd_conv",
            "sum (-1)^(n-k) C(n,k) H_(k+m) O_(n-k) = -(H_m/n) 4^n/(2 C(2n,n)) + sum_(k=1)^(n-1) (-1)^k C(n,k) 2^(2(n-k)-1)/(k(n-k) C(k+m,m) C(2(n-k),n-k)); m = 0 case",
            |nmax| {
                let general = forms(ns_pos(nmax), &["general"]).int_range("m", 0..=3);
                [general.done(), forms(ns(nmax), &["m_zero"]).done()].concat()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                let m = p.int_or("m", 0)?;
                let o = |k: i64| odd_harmonic(k as usize);
                let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * h(k + m)? * o(n - k)))?;
                let tail = try_sum(1..n, |k| {
                    Ok(sign(k) * c(n, k) * pow2(2 * (n - k) - 1) / int(k * (n - k))
                        * inv_choose(k + m, m)?
                        * inv_choose(2 * (n - k), n - k)?)
                })?;
                let rhs = if p.label("form")? == "general" {
                    -h(m)? / int(n) * inv_choose(2 * n, n)? * pow2(2 * n - 1) + tail
                } else {
                    tail
                };
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "catalan_mikic",
            "sum (-1)^k C(n,k) C_k C_(n-k) = C_(n/2) C(n,n/2) for even n, 0 for odd n",
            |nmax| ns(nmax).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * cat(k) * cat(n - k)))?;
                one(lhs, even_only(n, |h| cat(h) * c(n, h)))
            },
        ),
        IdentityCheck::new(
            "catalan_floor",
            "sum (-1)^k C(n,k) C(k,floor(k/2)) C(n-k,floor((n-k)/2)) = (-1)^n sum (-1)^k C(n,k) C_k C_(n-k) = C_(n/2) C(n,n/2) or 0",
            |nmax| forms(ns(nmax), &["ubq9lia", "closed"]).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * c(n, k) * c(k, k / 2) * c(n - k, (n - k) / 2))
                })?;
                let rhs = if p.label("form")? == "ubq9lia" {
                    sign(n) * try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * cat(k) * cat(n - k)))?
                } else {
                    even_only(n, |h| cat(h) * c(n, h))
                };
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "harm_sq_conv",
            "sum (-1)^k C(n,k) m^2 H_(k+m) H_(n-k+m)/((k+m)(n-k+m)) = sum (-1)^k C(n,k) (H_(k+m)-H_k)(H_(n-k+m)-H_(n-k))/(C(k+m,k) C(n-k+m,n-k)); m = 1 case",
            |nmax| {
                let general = forms(ns(nmax), &["general"]).int_range("m", 1..=3);
                [general.done(), forms(ns(nmax), &["special"]).done()].concat()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                if p.label("form")? == "general" {
                    let m = p.int("m")?;
                    let lhs = try_sum(0..=n, |k| {
                        Ok(sign(k) * c(n, k) * int(m * m) * h(k + m)? * h(n - k + m)? / int((k + m) * (n - k + m)))
                    })?;
                    let rhs = try_sum(0..=n, |k| {
                        Ok(sign(k) * c(n, k)
                            * inv_choose(k + m, k)?
                            * inv_choose(n - k + m, n - k)?
                            * (h(k + m)? - h(k)?)
                            * (h(n - k + m)? - h(n - k)?))
                    })?;
                    one(lhs, rhs)
                } else {
                    let lhs = try_sum(0..=n, |k| {
                        Ok(sign(k) * c(n, k) * h(k + 1)? * h(n - k + 1)? / int((k + 1) * (n - k + 1)))
                    })?;
                    let rhs = try_sum(0..=n, |k| {
                        let d = (k + 1) * (n - k + 1);
                        Ok(sign(k) * c(n, k) / int(d * d))
                    })?;
                    one(lhs, rhs)
                }
            },
        ),
        IdentityCheck::new(
            "hiez2vp",
            "sum (-1)^k C(n,k)^3/(C(y,k) C(y,n-k)) = sum (-1)^k C(n,k) C(y-n,k) C(y-n,n-k)/(C(y,k) C(y,n-k))",
            |nmax| ns(nmax).rats("y", &grid()).done(),
            |_, p: &Params| {
                let (n, y) = (n_of(p)?, p.rat("y")?);
                let yn = &y - int(n);
                let den = |k: i64| -> Result<Rat> { Ok(inv_binom(&y, k)? * inv_binom(&y, n - k)?) };
                let lhs = try_sum(0..=n, |k| {
                    let b = c(n, k);
                    Ok(sign(k) * &b * &b * &b * den(k)?)
                })?;
                let rhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * c(n, k) * binom_rat(&yn, k) * binom_rat(&yn, n - k) * den(k)?)
                })?;
                one(lhs, rhs)
            },
        )
        .guarded(|p| binom_nonvanishing(&p.rat("y").unwrap(), p.int("n").unwrap() + 1)),
        IdentityCheck::new(
            "u00e6qz",
            "sum (-1)^k C(x,k) C(x,n-k)/C(n,k) = sum (-1)^k C(n-x,k) C(n-x,n-k)/C(n,k)",
            |nmax| ns(nmax).rats("x", &grid()).done(),
            |_, p: &Params| {
                let (n, x) = (n_of(p)?, p.rat("x")?);
                let nx = int(n) - &x;
                let lhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * binom_rat(&x, k) * binom_rat(&x, n - k) * inv_choose(n, k)?)
                })?;
                let rhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * binom_rat(&nx, k) * binom_rat(&nx, n - k) * inv_choose(n, k)?)
                })?;
                one(lhs, rhs)
            },
        ),
        IdentityCheck::new(
            "dixon",
            "sum (-1)^k C(n,k)^3 = (-1)^(n/2) C(n,n/2) C(3n/2,n) for even n, 0 for odd n",
            |nmax| ns(nmax).done(),
            |_, p: &Params| {
                let n = p.count("n")?;
                one(dixon_sum(n), dixon_closed(n))
            },
        ),
        IdentityCheck::new(
            "dixon_dual",
            "sum (-1)^(n-k) C(n,k) C(n+k,k) C(2n-k,n-k) = (-1)^(n/2) C(n,n/2) C(3n/2,n) for even n, 0 for odd n",
            |nmax| ns(nmax).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * c(n, k) * c(n + k, k) * c(2 * n - k, n - k)))?;
                one(lhs, dixon_closed(n as usize))
            },
        ),
        IdentityCheck::new(
            "sury_corollary",
            "sum (-1)^k C(n,k)/((n-k+1)(k+1)) = (1+(-1)^n)/((n+1)(n+2)), with sum (-1)^k/C(n,k) = (1+(-1)^n)(n+1)/(n+2) and its x = -1 form",
            |nmax| forms(ns(nmax), &["sury", "reciprocal", "x_minus_one"]).done(),
            |_, p: &Params| {
                let n = n_of(p)?;
                let parity = int(1) + sign(n);
                match p.label("form")? {
                    "sury" => {
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * inv_choose(n, k)?))?;
                        one(lhs, parity * int(n + 1) / int(n + 2))
                    }
                    "reciprocal" => {
                        let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) / int((n - k + 1) * (k + 1))))?;
                        one(lhs, parity / int((n + 1) * (n + 2)))
                    }
                    _ => {
                        let lhs = try_sum(0..=n, |k| Ok(sign(n - k) * inv_choose(n, k)?))?;
                        let rhs = try_sum(0..=n, |k| {
                            Ok(sign(k) * c(n, k) * int((n + 1) * (n + 1)) / int((n - k + 1) * (k + 1)))
                        })?;
                        one(lhs, rhs)
                    }
                }
            },
        ),
        IdentityCheck::new(
            "rgyk46r_parity",
            "sum (-1)^k C(n,k) s_k t_(n-k) = 0 for odd n when s, t are both invariant or both inverse invariant, for even n otherwise",
            |nmax| {
                Grid::unit()
                    .labels("s", &CLASSIFIED)
                    .labels("t", &CLASSIFIED)
                    .int_range("n", 0..=nmax as i64)
                    .keep(|p| {
                        let same = is_invariant(p.label("s").unwrap()) == is_invariant(p.label("t").unwrap());
                        (p.int("n").unwrap() % 2 == 1) == same
                    })
                    .done()
            },
            |_, p: &Params| {
                let n = n_of(p)?;
                let s = classified_pair(p.label("s")?)?;
                let t = classified_pair(p.label("t")?)?;
                let lhs = try_sum(0..=n, |k| Ok(sign(k) * c(n, k) * s.left(k)? * t.left(n - k)?))?;
                one(lhs, Rat::zero())
            },
        ),
        IdentityCheck::new(
            "lucas_x2_odd",
            "sum (-1)^k C(n,k) C(x/2,k)/C(x,k) L_(n-k) = 0 for odd n, x nonzero, C(x,k) nonzero",
            |nmax| ns(nmax).rats("x", &nonzero_grid()).done(),
            |_, p: &Params| {
                let (n, x) = (n_of(p)?, p.rat("x")?);
                let half = &x / int(2);
                let lhs = try_sum(0..=n, |k| {
                    Ok(sign(k) * c(n, k) * binom_rat(&half, k) * inv_binom(&x, k)? * lucas(n - k))
                })?;
                one(lhs, Rat::zero())
            },
        )
        .guarded(|p| p.int("n").unwrap() % 2 == 1 && binom_nonvanishing(&p.rat("x").unwrap(), p.int("n").unwrap() + 1)),
    ]
}

const CLASSIFIED: [&str; 6] = ["lucas", "k_fib", "central_binom", "half_ratio", "fibonacci", "harmonic_over_succ"];

fn is_invariant(name: &str) -> bool {
    !matches!(name, "fibonacci" | "harmonic_over_succ")
}

fn classified_pair(name: &str) -> Result<crate::pairs::Pair> {
    let params = if name == "half_ratio" {
        Params::new().with_rat("x", rat(-5, 7))
    } else {
        Params::new()
    };
    catalog_pair(name, &params)
}
