//! Closed-form transform pairs, addressable by stable name.
//!
//! Every constructor checks its parameter domain and then validates the pair
//! against direct summation, so a mistyped closed form fails at construction.

use num_traits::{One, Zero};

use super::{Kind, Pair, DEFAULT_CHECK_DEPTH};
use crate::error::{Error, Result};
use crate::exact::{
    as_integer, binom_rat, choose, int, inv_binom, kron_delta, pow, pow2,
    rat, recip, sign, Rat,
};
use crate::params::{rational_grid, Params};
use crate::seqlib::{
    bernoulli_number, bernoulli_poly, catalan, fibonacci, gibonacci, harmonic, lucas, odd_harmonic,
};

pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: Kind,
    /// One-line description of the pair, `left -> right`.
    pub summary: &'static str,
    build: fn(&Params) -> Result<Pair>,
    grid: fn() -> Vec<Params>,
}

impl CatalogEntry {
    /// Unvalidated construction.
    pub fn build(&self, params: &Params) -> Result<Pair> {
        Ok((self.build)(params)?
            .with_label(format!("{}({params})", self.name))
            .with_params(params.clone()))
    }

    /// Parameter points swept by default.
    pub fn grid(&self) -> Vec<Params> {
        (self.grid)()
    }
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish()
    }
}

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn catalog_pair(name: &str, params: &Params) -> Result<Pair> {
    catalog_pair_with_depth(name, params, DEFAULT_CHECK_DEPTH)
}

pub fn catalog_pair_with_depth(name: &str, params: &Params, depth: usize) -> Result<Pair> {
    let entry = CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownPair(name.to_string()))?;
    let pair = entry.build(params)?;
    pair.validate(depth)?;
    Ok(pair)
}

fn none() -> Vec<Params> {
    vec![Params::new()]
}

fn ints(name: &'static str, range: std::ops::RangeInclusive<i64>) -> Vec<Params> {
    range.map(|v| Params::new().with_int(name, v)).collect()
}

fn rats(name: &'static str) -> Vec<Params> {
    rational_grid()
        .into_iter()
        .map(|v| Params::new().with_rat(name, v))
        .collect()
}

fn k(n: usize) -> i64 {
    n as i64
}

// ---- first kind ----

fn binom_upper(p: &Params) -> Result<Pair> {
    let x = p.int("x")?;
    if x < 0 {
        return Err(Error::param("x", "must be a nonnegative integer"));
    }
    let y = p.rat("y")?;
    let y2 = y.clone();
    // C(y-n, y-x) rewritten with the integer lower index x-n.
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(binom_rat(&(&y - int(k(i))), x)),
        move |n| Ok(binom_rat(&(&y2 - int(k(n))), x - k(n))),
    ))
}

fn binom_upper_grid() -> Vec<Params> {
    (0..=3)
        .flat_map(|x| {
            rational_grid()
                .into_iter()
                .map(move |y| Params::new().with_int("x", x).with_rat("y", y))
        })
        .collect()
}

fn harmonic_shift_frac(p: &Params) -> Result<Pair> {
    let m = p.int("m")?;
    if m < 1 {
        return Err(Error::param("m", "must be a positive integer"));
    }
    let mu = m as usize;
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(harmonic(i + mu) / int(k(i) + m)),
        move |n| Ok((harmonic(n + mu) - harmonic(n)) / int(m) * inv_binom(&int(k(n) + m), k(n))?),
    ))
}

fn gibonacci_ratio(p: &Params) -> Result<Pair> {
    let g0 = p.rat_or("g0", int(0))?;
    let g1 = p.rat_or("g1", int(1))?;
    let t = p.int_or("t", 1)?;
    let r = p.int_or("r", 0)?;
    if t == 0 {
        return Err(Error::param("t", "must be nonzero"));
    }
    let lt = lucas(t);
    let (a0, a1, al) = (g0.clone(), g1.clone(), lt.clone());
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(gibonacci(&a0, &a1, t * k(i) + r) / pow(&al, k(i))?),
        move |n| {
            let j = t * k(n) - r;
            Ok(sign(r) * (&g0 * lucas(j) - gibonacci(&g0, &g1, j)) / pow(&lt, k(n))?)
        },
    ))
}

fn gibonacci_grid() -> Vec<Params> {
    let seeds = [(int(0), int(1)), (int(2), int(1)), (rat(1, 2), int(-3))];
    let mut out = Vec::new();
    for (g0, g1) in seeds {
        for t in [1, 2, -3] {
            for r in [0, 1, -2] {
                out.push(
                    Params::new()
                        .with_rat("g0", g0.clone())
                        .with_rat("g1", g1.clone())
                        .with_int("t", t)
                        .with_int("r", r),
                );
            }
        }
    }
    out
}

fn binom_ratio(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    let y = p.rat("y")?;
    // C(y, k) vanishes past k = y for a nonnegative integer y.
    let limit = as_integer(&y).filter(|v| *v >= 0).map(|v| v as usize);
    let (x2, y2) = (x.clone(), y.clone());
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(binom_rat(&x, k(i)) * inv_binom(&y, k(i))?),
        move |n| Ok(binom_rat(&(&y2 - &x2), k(n)) * inv_binom(&y2, k(n))?),
    )
    .with_limit(limit))
}

fn xy_grid() -> Vec<Params> {
    rational_grid()
        .into_iter()
        .flat_map(|x| {
            rational_grid()
                .into_iter()
                .map(move |y| Params::new().with_rat("x", x.clone()).with_rat("y", y))
        })
        .collect()
}

fn harmonic_plus_m(p: &Params) -> Result<Pair> {
    let m = p.int("m")?;
    if m < 0 {
        return Err(Error::param("m", "must be a nonnegative integer"));
    }
    let mu = m as usize;
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(harmonic(i + mu)),
        move |n| {
            let d = kron_delta(k(n), 0);
            let num = &d * (Rat::one() + harmonic(mu)) - Rat::one();
            Ok(num / (int(k(n)) + d) * inv_binom(&int(k(n) + m), m)?)
        },
    ))
}

fn odd_harmonic_pair(_: &Params) -> Result<Pair> {
    Ok(Pair::new(
        Kind::First,
        "",
        |i| Ok(odd_harmonic(i)),
        |n| {
            if n == 0 {
                return Ok(Rat::zero());
            }
            Ok(-pow2(2 * k(n) - 1) / int(k(n)) * inv_binom(&int(2 * k(n)), k(n))?)
        },
    ))
}

fn central_floor(_: &Params) -> Result<Pair> {
    Ok(Pair::new(
        Kind::First,
        "",
        |i| Ok(pow2(-k(i)) * choose(i, k(i / 2))),
        |n| Ok(pow2(-k(n)) * catalan(n)),
    ))
}

fn delta_binom(p: &Params) -> Result<Pair> {
    let j = p.int("j")?;
    if j < 0 {
        return Err(Error::param("j", "must be a nonnegative integer"));
    }
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(choose(i, j)),
        move |n| Ok(sign(j) * kron_delta(k(n), j)),
    ))
}

fn power(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    let y = Rat::one() - &x;
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| pow(&x, k(i)),
        move |n| pow(&y, k(n)),
    ))
}

fn binom_2k_j(p: &Params) -> Result<Pair> {
    let j = p.count("j")? as i64;
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(pow2(-k(i)) * choose(i, j)),
        move |n| Ok(sign(j) * pow2(-k(n)) * choose(n, j)),
    ))
}

fn binom_2k_j_up(p: &Params) -> Result<Pair> {
    let j = p.count("j")? as i64;
    Ok(Pair::new(
        Kind::First,
        "",
        move |i| Ok(choose(i, j) * pow2(k(i))),
        move |n| Ok(sign(k(n)) * choose(n, j) * pow2(j)),
    ))
}

fn fibonacci_pair(_: &Params) -> Result<Pair> {
    Ok(Pair::new(
        Kind::First,
        "",
        |i| Ok(fibonacci(k(i))),
        |n| Ok(-fibonacci(k(n))),
    ))
}

fn lucas_pair(_: &Params) -> Result<Pair> {
    Ok(Pair::new(Kind::First, "", |i| Ok(lucas(k(i))), |n| Ok(lucas(k(n)))))
}

fn k_fib(_: &Params) -> Result<Pair> {
    let f = |i: usize| Ok(int(k(i)) * fibonacci(k(i) - 1));
    Ok(Pair::new(Kind::First, "", f, f))
}

fn central_binom(_: &Params) -> Result<Pair> {
    let f = |i: usize| Ok(choose(2 * i, k(i)) * pow2(-2 * k(i)));
    Ok(Pair::new(Kind::First, "", f, f))
}

fn harmonic_over_succ(_: &Params) -> Result<Pair> {
    Ok(Pair::new(
        Kind::First,
        "",
        |i| Ok(harmonic(i) / int(k(i) + 1)),
        |n| Ok(-harmonic(n) / int(k(n) + 1)),
    ))
}

fn half_ratio(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    if x.is_zero() || as_integer(&x).is_some_and(|v| v > 0) {
        return Err(Error::param("x", "must be nonzero and not a positive integer"));
    }
    let half = &x / int(2);
    let f = move |i: usize| Ok(binom_rat(&half, k(i)) * inv_binom(&x, k(i))?);
    Ok(Pair::new(Kind::First, "", f.clone(), f))
}

fn half_ratio_grid() -> Vec<Params> {
    [rat(1, 2), int(-1), rat(-1, 2), rat(-5, 7), rat(7, 3)]
        .into_iter()
        .map(|x| Params::new().with_rat("x", x))
        .collect()
}

fn neg_recip(_: &Params) -> Result<Pair> {
    Ok(Pair::new(
        Kind::First,
        "",
        |i| {
            if i == 0 {
                Ok(Rat::zero())
            } else {
                Ok(-rat(1, k(i)))
            }
        },
        |n| Ok(harmonic(n)),
    ))
}

fn bernoulli_first(_: &Params) -> Result<Pair> {
    let f = |i: usize| Ok(sign(k(i)) * bernoulli_number(i));
    Ok(Pair::new(Kind::First, "", f, f))
}

// ---- second kind ----

fn bernoulli(_: &Params) -> Result<Pair> {
    Ok(Pair::new(
        Kind::Second,
        "",
        |i| Ok(bernoulli_number(i)),
        |n| Ok(sign(k(n)) * bernoulli_number(n)),
    ))
}

fn bernoulli_poly_shift(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    let y = p.rat("y")?;
    let yi = recip(&y, "bernoulli_poly_shift: y = 0")?;
    let xy = &x + &y;
    let yi2 = yi.clone();
    Ok(Pair::new(
        Kind::Second,
        "",
        move |i| Ok(bernoulli_poly(i, &x) * pow(&yi, k(i))?),
        move |n| Ok(bernoulli_poly(n, &xy) * pow(&yi2, k(n))?),
    ))
}

fn bernoulli_poly_shift_grid() -> Vec<Params> {
    rational_grid()
        .into_iter()
        .flat_map(|x| {
            rational_grid()
                .into_iter()
                .filter(|y| !y.is_zero())
                .map(move |y| Params::new().with_rat("x", x.clone()).with_rat("y", y))
        })
        .collect()
}

fn binom_x(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    let x2 = x.clone();
    Ok(Pair::new(
        Kind::Second,
        "",
        move |i| Ok(binom_rat(&x, k(i))),
        move |n| Ok(binom_rat(&(&x2 + int(k(n))), k(n))),
    ))
}

fn binom_xz(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    let z = p.int("z")?;
    let x2 = x.clone();
    Ok(Pair::new(
        Kind::Second,
        "",
        move |i| Ok(binom_rat(&x, k(i) + z)),
        move |n| Ok(binom_rat(&(&x2 + int(k(n))), k(n) + z)),
    ))
}

fn binom_xz_grid() -> Vec<Params> {
    rational_grid()
        .into_iter()
        .flat_map(|x| (-1..=3).map(move |z| Params::new().with_rat("x", x.clone()).with_int("z", z)))
        .collect()
}

fn harmonic_binom_m(p: &Params) -> Result<Pair> {
    let m = p.int("m")?;
    if m < 0 {
        return Err(Error::param("m", "must be a nonnegative integer"));
    }
    let mu = m as usize;
    Ok(Pair::new(
        Kind::Second,
        "",
        move |i| Ok(choose(mu, k(i)) * harmonic(i)),
        move |n| Ok(choose(n + mu, m) * (harmonic(mu) + harmonic(n) - harmonic(n + mu))),
    ))
}

fn inv_binom_trif(p: &Params) -> Result<Pair> {
    let m = p.rat("m")?;
    let pp = p.int("p")?;
    if pp < 0 {
        return Err(Error::param("p", "must be a nonnegative integer"));
    }
    // m - n - p must stay off the negative integers.
    let limit = match as_integer(&m) {
        Some(mi) if mi < pp => {
            return Err(Error::param("m", format!("integer m = {mi} must be at least p = {pp}")))
        }
        Some(mi) => Some((mi - pp) as usize),
        None => None,
    };
    let m2 = m.clone();
    Ok(Pair::new(
        Kind::Second,
        "",
        move |i| inv_binom(&m, pp + k(i)),
        move |n| {
            let mn = &m2 - int(k(n));
            Ok((&m2 + Rat::one()) * recip(&(&mn + Rat::one()), "m - n + 1")? * inv_binom(&mn, pp)?)
        },
    )
    .with_limit(limit))
}

fn inv_binom_trif_grid() -> Vec<Params> {
    let ms = [int(4), int(7), rat(1, 2), rat(-1, 2), rat(-5, 7), rat(10, 3)];
    ms.into_iter()
        .flat_map(|m| {
            (0..=2).filter_map(move |p| {
                if as_integer(&m).is_some_and(|mi| mi < p) {
                    None
                } else {
                    Some(Params::new().with_rat("m", m.clone()).with_int("p", p))
                }
            })
        })
        .collect()
}

fn power2(p: &Params) -> Result<Pair> {
    let x = p.rat("x")?;
    let y = Rat::one() + &x;
    Ok(Pair::new(
        Kind::Second,
        "",
        move |i| pow(&x, k(i)),
        move |n| pow(&y, k(n)),
    ))
}

static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "binom_upper",
        kind: Kind::First,
        summary: "C(y-k, x) -> C(y-n, y-x)",
        build: binom_upper,
        grid: binom_upper_grid,
    },
    CatalogEntry {
        name: "harmonic_shift_frac",
        kind: Kind::First,
        summary: "H_{k+m}/(k+m) -> (H_{n+m} - H_n)/m / C(n+m, n)",
        build: harmonic_shift_frac,
        grid: || ints("m", 1..=3),
    },
    CatalogEntry {
        name: "gibonacci_ratio",
        kind: Kind::First,
        summary: "G_{tk+r}/L_t^k -> (-1)^r (G_0 L_{tn-r} - G_{tn-r})/L_t^n",
        build: gibonacci_ratio,
        grid: gibonacci_grid,
    },
    CatalogEntry {
        name: "binom_ratio",
        kind: Kind::First,
        summary: "C(x,k)/C(y,k) -> C(y-x,n)/C(y,n)",
        build: binom_ratio,
        grid: xy_grid,
    },
    CatalogEntry {
        name: "harmonic_plus_m",
        kind: Kind::First,
        summary: "H_{k+m} -> (d_{n0}(1+H_m) - 1)/(n + d_{n0}) / C(n+m, m)",
        build: harmonic_plus_m,
        grid: || ints("m", 0..=3),
    },
    CatalogEntry {
        name: "odd_harmonic",
        kind: Kind::First,
        summary: "O_k -> -(1-d_{n0}) 2^{2n-1} / ((n+d_{n0}) C(2n,n))",
        build: odd_harmonic_pair,
        grid: none,
    },
    CatalogEntry {
        name: "central_floor",
        kind: Kind::First,
        summary: "2^{-k} C(k, floor(k/2)) -> 2^{-n} C_n",
        build: central_floor,
        grid: none,
    },
    CatalogEntry {
        name: "delta_binom",
        kind: Kind::First,
        summary: "C(k, j) -> (-1)^j d_{nj}",
        build: delta_binom,
        grid: || ints("j", 0..=3),
    },
    CatalogEntry {
        name: "power",
        kind: Kind::First,
        summary: "x^k -> (1-x)^n",
        build: power,
        grid: || rats("x"),
    },
    CatalogEntry {
        name: "binom_2k_j",
        kind: Kind::First,
        summary: "2^{-k} C(k, j) -> (-1)^j 2^{-n} C(n, j)",
        build: binom_2k_j,
        grid: || ints("j", 0..=3),
    },
    CatalogEntry {
        name: "binom_2k_j_up",
        kind: Kind::First,
        summary: "2^k C(k, j) -> (-1)^n 2^j C(n, j)",
        build: binom_2k_j_up,
        grid: || ints("j", 0..=3),
    },
    CatalogEntry {
        name: "fibonacci",
        kind: Kind::First,
        summary: "F_k -> -F_n",
        build: fibonacci_pair,
        grid: none,
    },
    CatalogEntry {
        name: "lucas",
        kind: Kind::First,
        summary: "L_k -> L_n",
        build: lucas_pair,
        grid: none,
    },
    CatalogEntry {
        name: "k_fib",
        kind: Kind::First,
        summary: "k F_{k-1} -> n F_{n-1}",
        build: k_fib,
        grid: none,
    },
    CatalogEntry {
        name: "central_binom",
        kind: Kind::First,
        summary: "C(2k,k)/4^k -> C(2n,n)/4^n",
        build: central_binom,
        grid: none,
    },
    CatalogEntry {
        name: "harmonic_over_succ",
        kind: Kind::First,
        summary: "H_k/(k+1) -> -H_n/(n+1)",
        build: harmonic_over_succ,
        grid: none,
    },
    CatalogEntry {
        name: "half_ratio",
        kind: Kind::First,
        summary: "C(x/2,k)/C(x,k) -> C(x/2,n)/C(x,n)",
        build: half_ratio,
        grid: half_ratio_grid,
    },
    CatalogEntry {
        name: "neg_recip",
        kind: Kind::First,
        summary: "-1/k (0 at k=0) -> H_n",
        build: neg_recip,
        grid: none,
    },
    CatalogEntry {
        name: "bernoulli_first",
        kind: Kind::First,
        summary: "(-1)^k B_k -> (-1)^n B_n",
        build: bernoulli_first,
        grid: none,
    },
    CatalogEntry {
        name: "bernoulli",
        kind: Kind::Second,
        summary: "B_k -> (-1)^n B_n",
        build: bernoulli,
        grid: none,
    },
    CatalogEntry {
        name: "bernoulli_poly_shift",
        kind: Kind::Second,
        summary: "B_k(x)/y^k -> B_n(x+y)/y^n",
        build: bernoulli_poly_shift,
        grid: bernoulli_poly_shift_grid,
    },
    CatalogEntry {
        name: "binom_x",
        kind: Kind::Second,
        summary: "C(x,k) -> C(n+x,n)",
        build: binom_x,
        grid: || rats("x"),
    },
    CatalogEntry {
        name: "binom_xz",
        kind: Kind::Second,
        summary: "C(x,k+z) -> C(n+x,n+z)",
        build: binom_xz,
        grid: binom_xz_grid,
    },
    CatalogEntry {
        name: "harmonic_binom_m",
        kind: Kind::Second,
        summary: "C(m,k) H_k -> C(n+m,m)(H_m + H_n - H_{m+n})",
        build: harmonic_binom_m,
        grid: || ints("m", 0..=3),
    },
    CatalogEntry {
        name: "inv_binom_trif",
        kind: Kind::Second,
        summary: "1/C(m,p+k) -> (m+1)/((m-n+1) C(m-n,p))",
        build: inv_binom_trif,
        grid: inv_binom_trif_grid,
    },
    CatalogEntry {
        name: "power2",
        kind: Kind::Second,
        summary: "x^k -> (1+x)^n",
        build: power2,
        grid: || rats("x"),
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates_on_its_grid() {
        for e in catalog() {
            for p in e.grid() {
                catalog_pair_with_depth(e.name, &p, 10)
                    .unwrap_or_else(|err| panic!("{}({p}): {err}", e.name));
            }
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = catalog().iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), catalog().len());
    }

    #[test]
    fn spec_examples() {
        let p = catalog_pair("odd_harmonic", &Params::new()).unwrap();
        assert_eq!(p.left(3).unwrap(), rat(23, 15));
        assert_eq!(p.right(3).unwrap(), rat(-8, 15));
        assert_eq!(p.transform_of_left(3).unwrap(), rat(-8, 15));

        let p = catalog_pair("power", &Params::new().with_int("x", 2)).unwrap();
        assert_eq!(p.right(4).unwrap(), int(1));

        let p = catalog_pair("binom_x", &Params::new().with_rat("x", rat(7, 2))).unwrap();
        assert_eq!(p.right(2).unwrap(), rat(99, 8));
    }

    #[test]
    fn binom_upper_integer_y() {
        // y = 3, x = 1: C(3-k, 1) has transform zero past n = 1.
        let p = catalog_pair(
            "binom_upper",
            &Params::new().with_int("x", 1).with_int("y", 3),
        )
        .unwrap();
        assert_eq!(p.right(4).unwrap(), int(0));
        assert_eq!(p.right(1).unwrap(), int(1));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(catalog_pair("nope", &Params::new()), Err(Error::UnknownPair(_))));
        let bad = |name: &str, p: Params| assert!(catalog_pair(name, &p).is_err(), "{name}");
        bad("harmonic_shift_frac", Params::new().with_int("m", 0));
        bad("harmonic_plus_m", Params::new().with_int("m", -1));
        bad("gibonacci_ratio", Params::new().with_int("t", 0));
        bad("bernoulli_poly_shift", Params::new().with_int("x", 1).with_int("y", 0));
        bad("inv_binom_trif", Params::new().with_int("m", 1).with_int("p", 2));
        bad("half_ratio", Params::new().with_int("x", 4));
        bad("delta_binom", Params::new().with_int("j", -1));
    }

    #[test]
    fn limits_follow_guards() {
        let p = catalog_pair("binom_ratio", &Params::new().with_rat("x", rat(1, 2)).with_int("y", 3))
            .unwrap();
        assert_eq!(p.limit(), Some(3));
        let p = catalog_pair("inv_binom_trif", &Params::new().with_int("m", 7).with_int("p", 2))
            .unwrap();
        assert_eq!(p.limit(), Some(5));
        assert!(p.right(6).is_err());
    }
}
