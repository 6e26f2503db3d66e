//! Dense univariate polynomials over the rationals, and the polynomial
//! identities whose coefficients carry binomial-transform pairs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::convolve::SideReport;
use crate::error::{Error, Result};
use crate::exact::{binom_rat, c, int, inv_choose, pow2, sign, try_sum, Rat};
use crate::pairs::{Kind, Pair};
use crate::params::{rational_grid, Params};
use crate::seqlib::{bernoulli_poly, harmonic, odd_harmonic};

/// Coefficients indexed by degree; never has a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(v: Rat) -> Self {
        Poly::from_coeffs(vec![v])
    }

    /// `coeff * t^degree`.
    pub fn monomial(coeff: Rat, degree: usize) -> Self {
        let mut v = vec![Rat::zero(); degree + 1];
        v[degree] = coeff;
        Poly::from_coeffs(v)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    /// `a + b t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Poly::from_coeffs(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^d`, zero past the degree.
    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::constant(Rat::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, a| acc * x + a)
    }

    /// `p(a + b t)`.
    pub fn shift_compose(&self, a: &Rat, b: &Rat) -> Poly {
        let inner = Poly::linear(a.clone(), b.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, k| &(&acc * &inner) + &Poly::constant(k.clone()))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})t")?,
                _ => write!(f, "({a})t^{d}")?,
            }
        }
        Ok(())
    }
}

/// `sum_k coeff t^exp` as a polynomial.
fn from_terms(terms: &[(Rat, usize)], base: &Poly) -> Poly {
    terms
        .iter()
        .fold(Poly::zero(), |acc, (coeff, e)| &acc + &base.pow(*e as u32).scale(coeff))
}

/// `sum f(k) t^{p(k)} = sum g(k) (1-t)^{q(k)}`, stored as the `(f, p)` and
/// `(g, q)` term lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyIdentityForm {
    left_terms: Vec<(Rat, usize)>,
    right_terms: Vec<(Rat, usize)>,
}

impl PolyIdentityForm {
    /// Fails unless the two sides agree as polynomials.
    pub fn new(left_terms: Vec<(Rat, usize)>, right_terms: Vec<(Rat, usize)>) -> Result<Self> {
        let form = PolyIdentityForm {
            left_terms,
            right_terms,
        };
        let (l, r) = form.sides();
        if l != r {
            return Err(Error::Guard(format!("not a polynomial identity: {l} != {r}")));
        }
        Ok(form)
    }

    pub fn left_terms(&self) -> &[(Rat, usize)] {
        &self.left_terms
    }

    pub fn right_terms(&self) -> &[(Rat, usize)] {
        &self.right_terms
    }

    /// Both sides expanded in `t`.
    pub fn sides(&self) -> (Poly, Poly) {
        let one_minus_t = Poly::linear(Rat::one(), -Rat::one());
        (
            from_terms(&self.left_terms, &Poly::t()),
            from_terms(&self.right_terms, &one_minus_t),
        )
    }

    /// `t^n = sum_k (-1)^k C(n,k) (1-t)^k`.
    pub fn binomial_row(n: usize) -> Self {
        let n = n as i64;
        PolyIdentityForm {
            left_terms: vec![(Rat::one(), n as usize)],
            right_terms: (0..=n).map(|k| (sign(k) * c(n, k), k as usize)).collect(),
        }
    }

    /// The three-index lemma
    /// `sum_k^n (-1)^{k-r} C(n,k) C(k+m,r) t^{k+m-r} = sum_k^m (-1)^k C(m,k) C(k+n,r) (1-t)^{n+k-r}`.
    ///
    /// Rejected when some exponent would be negative, i.e. `r > min(m, n)`.
    pub fn sun_lemma(m: usize, n: usize, r: usize) -> Result<Self> {
        if r > m.min(n) {
            return Err(Error::NegativeExponent {
                exponent: m.min(n) as i64 - r as i64,
                context: format!("three-index lemma at (m, n, r) = ({m}, {n}, {r})"),
            });
        }
        let (mi, ni, ri) = (m as i64, n as i64, r as i64);
        let left = (0..=ni)
            .map(|k| (sign(k - ri) * c(ni, k) * c(k + mi, ri), (k + mi - ri) as usize))
            .collect();
        let right = (0..=mi)
            .map(|k| (sign(k) * c(mi, k) * c(k + ni, ri), (ni + k - ri) as usize))
            .collect();
        Ok(PolyIdentityForm {
            left_terms: left,
            right_terms: right,
        })
    }
}

/// Replaces `t^p` by `s_p` and `(1-t)^q` by `sigma_q`. For a second-kind pair
/// the left terms pick up `(-1)^p`.
pub fn transfer_identity(form: &PolyIdentityForm, p: &Pair) -> Result<SideReport> {
    let second = p.kind() == Kind::Second;
    let mut lhs = Rat::zero();
    for (f, e) in &form.left_terms {
        let e = *e as i64;
        let w = if second { sign(e) } else { Rat::one() };
        lhs += w * f * p.left(e)?;
    }
    let mut rhs = Rat::zero();
    for (g, e) in &form.right_terms {
        rhs += g * p.right(*e as i64)?;
    }
    Ok(SideReport::new(lhs, rhs, Params::new().with_label("pair", p.label())))
}

/// Both sides of the first-kind pair polynomial in `y`:
/// `sum C(n,k) s_{n-k} y^k` and `sum (-1)^{n-k} C(n,k) sigma_{n-k} (1+y)^k`.
pub fn poly_sides_first(p: &Pair, n: usize) -> Result<(Poly, Poly)> {
    p.expect_kind(Kind::First)?;
    pair_poly_sides(p, n, |n, k| (c(n, k), sign(n - k) * c(n, k)))
}

/// Second kind: `sum (-1)^k C(n,k) s_{n-k} y^k` and
/// `sum (-1)^k C(n,k) sigma_{n-k} (1+y)^k`.
pub fn poly_sides_second(p: &Pair, n: usize) -> Result<(Poly, Poly)> {
    p.expect_kind(Kind::Second)?;
    pair_poly_sides(p, n, |n, k| (sign(k) * c(n, k), sign(k) * c(n, k)))
}

fn pair_poly_sides(p: &Pair, n: usize, w: impl Fn(i64, i64) -> (Rat, Rat)) -> Result<(Poly, Poly)> {
    let n = n as i64;
    let one_plus = Poly::linear(Rat::one(), Rat::one());
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let (a, b) = w(n, k);
        lhs = &lhs + &Poly::monomial(a * p.left(n - k)?, k as usize);
        rhs = &rhs + &one_plus.pow(k as u32).scale(&(b * p.right(n - k)?));
    }
    Ok((lhs, rhs))
}

pub fn check_poly_first(p: &Pair, n: usize) -> Result<bool> {
    let (l, r) = poly_sides_first(p, n)?;
    Ok(l == r)
}

pub fn check_poly_second(p: &Pair, n: usize) -> Result<bool> {
    let (l, r) = poly_sides_second(p, n)?;
    Ok(l == r)
}

pub fn check_sun_lemma(m: usize, n: usize, r: usize) -> Result<bool> {
    let (l, r) = PolyIdentityForm::sun_lemma(m, n, r)?.sides();
    Ok(l == r)
}

/// The lemma with `t^j -> s_j`, `(1-t)^j -> sigma_j`, written out directly
/// rather than through [`transfer_identity`].
pub fn check_chen_direct(p: &Pair, m: usize, n: usize, r: usize) -> Result<SideReport> {
    p.expect_kind(Kind::First)?;
    PolyIdentityForm::sun_lemma(m, n, r)?;
    let (mi, ni, ri) = (m as i64, n as i64, r as i64);
    let lhs = try_sum(0..=ni, |k| {
        Ok(sign(k - ri) * c(ni, k) * c(k + mi, ri) * p.left(k + mi - ri)?)
    })?;
    let rhs = try_sum(0..=mi, |k| {
        Ok(sign(k) * c(mi, k) * c(k + ni, ri) * p.right(ni + k - ri)?)
    })?;
    let params = Params::new()
        .with_int("m", mi)
        .with_int("n", ni)
        .with_int("r", ri);
    Ok(SideReport::new(lhs, rhs, params))
}

/// Identifiers accepted by [`named_poly_sides`].
pub const NAMED_POLYS: [&str; 7] = [
    "harmonic_poly",
    "odd_harmonic_poly",
    "bernoulli_poly_identity",
    "binom_poly",
    "jy2d3um_poly",
    "partial_sum_poly",
    "ps67scn_poly",
];

/// Parameter grid for a named identity at `n = 0..=nmax`.
pub fn named_poly_grid(id: &str, nmax: usize) -> Result<Vec<Params>> {
    let ns = 0..=nmax as i64;
    let out: Vec<Params> = match id {
        "harmonic_poly" | "jy2d3um_poly" => ns
            .flat_map(|n| (0..=3).map(move |m| Params::new().with_int("m", m).with_int("n", n)))
            .collect(),
        "odd_harmonic_poly" | "partial_sum_poly" | "ps67scn_poly" => {
            ns.map(|n| Params::new().with_int("n", n)).collect()
        }
        "bernoulli_poly_identity" => ns
            .flat_map(|n| {
                rational_grid().into_iter().flat_map(move |x| {
                    rational_grid().into_iter().map(move |y| {
                        Params::new()
                            .with_rat("x", x.clone())
                            .with_rat("y", y)
                            .with_int("n", n)
                    })
                })
            })
            .collect(),
        "binom_poly" => ns
            .flat_map(|n| {
                (0..=3).flat_map(move |x| {
                    rational_grid().into_iter().map(move |y| {
                        Params::new().with_int("x", x).with_rat("y", y).with_int("n", n)
                    })
                })
            })
            .collect(),
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    Ok(out)
}

/// Both sides, in `t`, of a named polynomial identity.
pub fn named_poly_sides(id: &str, params: &Params) -> Result<(Poly, Poly)> {
    let n = params.int("n")?;
    if n < 0 {
        return Err(Error::param("n", "must be nonnegative"));
    }
    let nu = n as usize;
    let t = Poly::t();
    let one_plus = Poly::linear(Rat::one(), Rat::one());
    let one_minus = Poly::linear(Rat::one(), -Rat::one());
    let mono = |coeff: Rat, d: i64| Poly::monomial(coeff, d as usize);
    let sum = |terms: Vec<Poly>| terms.iter().fold(Poly::zero(), |a, b| &a + b);
    let nonneg = |name: &str| -> Result<i64> {
        let v = params.int(name)?;
        if v < 0 {
            return Err(Error::param(name, "must be a nonnegative integer"));
        }
        Ok(v)
    };
    // t^k (1+t)^{n-k}
    let mixed = |k: i64| &t.pow(k as u32) * &one_plus.pow((n - k) as u32);
    let sides = match id {
        "harmonic_poly" => {
            let m = nonneg("m")?;
            let mu = m as usize;
            let lhs = sum((0..=n).map(|k| mono(c(n, k) * harmonic(k as usize + mu), k)).collect());
            let mut rhs = one_plus.pow(nu as u32).scale(&harmonic(mu));
            for k in 1..=n {
                let w = sign(k - 1) * c(n, k) * inv_choose(k + m, m)? / int(k);
                rhs = &rhs + &mixed(k).scale(&w);
            }
            (lhs, rhs)
        }
        "odd_harmonic_poly" => {
            let lhs = sum((0..=n).map(|k| mono(c(n, k) * odd_harmonic(k as usize), k)).collect());
            let mut rhs = Poly::zero();
            for k in 1..=n {
                let w = sign(k - 1) * c(n, k) * pow2(2 * k - 1) * inv_choose(2 * k, k)? / int(k);
                rhs = &rhs + &mixed(k).scale(&w);
            }
            (lhs, rhs)
        }
        "bernoulli_poly_identity" => {
            let x = params.rat("x")?;
            let y = params.rat("y")?;
            let xy = &x + &y;
            let mut lhs = Poly::zero();
            let mut rhs = Poly::zero();
            let mut yk = Rat::one();
            for k in 0..=n {
                let w = sign(k) * c(n, k) * &yk;
                lhs = &lhs + &mono(&w * bernoulli_poly(nu - k as usize, &x), k);
                rhs = &rhs + &one_plus.pow(k as u32).scale(&(&w * bernoulli_poly(nu - k as usize, &xy)));
                yk *= &y;
            }
            (lhs, rhs)
        }
        "binom_poly" => {
            let x = nonneg("x")?;
            let y = params.rat("y")?;
            // C(y+k, y+n-x) with the integer lower index x-n+k
            let lhs = sum((0..=n).map(|k| mono(sign(k) * c(n, k) * binom_rat(&(&y + int(k)), x), k)).collect());
            let rhs = sum(
                (0..=n)
                    .map(|k| {
                        let w = sign(n - k) * c(n, k) * binom_rat(&(&y + int(k)), x - n + k);
                        one_minus.pow(k as u32).scale(&w)
                    })
                    .collect(),
            );
            (lhs, rhs)
        }
        "jy2d3um_poly" => {
            let m = nonneg("m")?;
            let mu = m as usize;
            let lhs = sum((0..=n).map(|k| mono(c(n, k) * harmonic(k as usize + mu), n - k)).collect());
            let mut rhs = one_plus.pow(nu as u32).scale(&harmonic(mu));
            for k in 1..=n {
                let w = -(sign(k) * c(n, k) * inv_choose(k + m, m)? / int(k));
                rhs = &rhs + &one_plus.pow((n - k) as u32).scale(&w);
            }
            (lhs, rhs)
        }
        "partial_sum_poly" => {
            let lhs = sum((0..=n).map(|k| mono(c(n + 1, k + 1) * harmonic(k as usize), k)).collect());
            let rhs = sum(
                (0..=n)
                    .map(|k| one_plus.pow(k as u32).scale(&(harmonic(k as usize) - harmonic((n - k) as usize))))
                    .collect(),
            );
            (lhs, rhs)
        }
        "ps67scn_poly" => {
            let lhs = sum((0..=n).map(|k| one_plus.pow(k as u32)).collect());
            let rhs = sum((0..=n).map(|k| mono(c(n + 1, k + 1), k)).collect());
            (lhs, rhs)
        }
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    Ok(sides)
}

pub fn check_named_poly(id: &str, params: &Params) -> Result<bool> {
    let (l, r) = named_poly_sides(id, params)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::pairs::{catalog_pair, convert_kind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[i64]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&a| int(a)).collect())
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&Poly::t() * &Poly::t(), p(&[0, 0, 1]));
        assert_eq!(p(&[1, -2, 1]).eval(&int(1)), int(0));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), Poly::zero());
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[3, 0, 2, 0]).degree(), Some(2));
        assert_eq!(p(&[1, 2]).scale(&rat(1, 2)), Poly::linear(rat(1, 2), int(1)));
        assert_eq!(p(&[1, -1, 2]).to_string(), "1 + (-1)t + (2)t^2");
    }

    #[test]
    fn affine_composition() {
        assert_eq!(p(&[0, 0, 1]).shift_compose(&int(1), &int(-1)), p(&[1, -2, 1]));
        assert_eq!(p(&[1, 1]).shift_compose(&int(0), &int(1)), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).shift_compose(&int(1), &int(1)), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn pair_polynomials() {
        let f = catalog_pair("fibonacci", &Params::new()).unwrap();
        let b = catalog_pair("bernoulli", &Params::new()).unwrap();
        assert!(check_poly_first(&f, 0).unwrap());
        assert!(check_poly_first(&f, 5).unwrap());
        assert!(check_poly_second(&b, 6).unwrap());
        assert!(check_poly_second(&f, 2).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let q = Pair::random(Kind::First, "q", 10, &mut rng);
            let qs = Pair::random(Kind::Second, "qs", 10, &mut rng);
            for n in 0..=8 {
                assert!(check_poly_first(&q, n).unwrap());
                assert!(check_poly_second(&qs, n).unwrap());
            }
        }
    }

    #[test]
    fn lemma_and_transfer() {
        assert!(check_sun_lemma(0, 0, 0).unwrap());
        assert!(check_sun_lemma(2, 3, 1).unwrap());
        assert!(matches!(check_sun_lemma(0, 2, 3), Err(Error::NegativeExponent { .. })));
        for m in 0..=5 {
            for n in 0..=5 {
                for r in 0..=m.min(n) {
                    assert!(check_sun_lemma(m, n, r).unwrap(), "({m},{n},{r})");
                }
            }
        }
        let l = catalog_pair("lucas", &Params::new()).unwrap();
        let form = PolyIdentityForm::sun_lemma(2, 3, 1).unwrap();
        let via = transfer_identity(&form, &l).unwrap();
        let direct = check_chen_direct(&l, 2, 3, 1).unwrap();
        assert!(via.holds());
        assert_eq!((via.lhs, via.rhs), (direct.lhs, direct.rhs));

        let x = rat(2, 5);
        let pw = catalog_pair("power", &Params::new().with_rat("x", x.clone())).unwrap();
        let row = transfer_identity(&PolyIdentityForm::binomial_row(4), &pw).unwrap();
        assert_eq!(row.lhs, x.pow(4));
        assert!(row.holds());

        let b = convert_kind(&catalog_pair("bernoulli", &Params::new()).unwrap());
        let r = transfer_identity(&PolyIdentityForm::sun_lemma(1, 2, 0).unwrap(), &b).unwrap();
        assert!(r.holds());
        let bs = catalog_pair("bernoulli", &Params::new()).unwrap();
        let r = transfer_identity(&PolyIdentityForm::sun_lemma(3, 2, 2).unwrap(), &bs).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn form_validation() {
        assert!(PolyIdentityForm::new(vec![(int(1), 1)], vec![(int(1), 0), (int(-1), 1)]).is_ok());
        assert!(PolyIdentityForm::new(vec![(int(1), 1)], vec![(int(1), 1)]).is_err());
    }

    #[test]
    fn named_identities() {
        let (l, r) = named_poly_sides("harmonic_poly", &Params::new().with_int("m", 0).with_int("n", 2)).unwrap();
        assert_eq!(l, Poly::from_coeffs(vec![int(0), int(2), rat(3, 2)]));
        assert_eq!(l, r);
        assert!(check_named_poly("ps67scn_poly", &Params::new().with_int("n", 3)).unwrap());
        assert!(check_named_poly("nope", &Params::new().with_int("n", 3)).is_err());
        for id in NAMED_POLYS {
            for params in named_poly_grid(id, 6).unwrap() {
                let (l, r) = named_poly_sides(id, &params).unwrap();
                assert_eq!(l, r, "{id} {params}");
                for t in [int(0), int(1), int(-1), rat(1, 2), rat(-2, 3)] {
                    assert_eq!(l.eval(&t), r.eval(&t));
                }
            }
        }
    }

    #[test]
    fn harmonic_poly_at_one() {
        // t = 1: sum C(n,k) H_k = sum (-1)^{k-1} 2^{n-k} C(n,k) / k
        let n = 4;
        let (l, _) = named_poly_sides("harmonic_poly", &Params::new().with_int("m", 0).with_int("n", n)).unwrap();
        let direct: Rat = (1..=n).map(|k| sign(k - 1) * pow2(n - k) * c(n, k) / int(k)).sum();
        assert_eq!(l.eval(&int(1)), direct);
    }
}
