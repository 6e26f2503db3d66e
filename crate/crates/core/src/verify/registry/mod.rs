//! The registered identities, grouped by the kind of statement they make.

mod first;
mod general;
mod poly;
mod relations;
mod second;

use crate::error::Result;
use crate::exact::{as_integer, int, Rat};
use crate::params::{rational_grid, Params};
use crate::polyring::Poly;
use crate::seqlib::{bernoulli_number, harmonic_at};

use super::{Grid, IdentityCheck, Part};

pub(super) fn all() -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    out.extend(general::checks());
    out.extend(first::checks());
    out.extend(second::checks());
    out.extend(relations::checks());
    out.extend(poly::checks());
    out
}

/// `n = 0..=nmax`.
fn ns(nmax: usize) -> Grid {
    Grid::unit().int_range("n", 0..=nmax as i64)
}

/// `n = 1..=nmax`, for identities stated for positive `n` only.
fn ns_pos(nmax: usize) -> Grid {
    Grid::unit().int_range("n", 1..=nmax as i64)
}

fn n_of(p: &Params) -> Result<i64> {
    p.int("n")
}

fn grid() -> Vec<Rat> {
    rational_grid()
}

fn nonzero_grid() -> Vec<Rat> {
    rational_grid().into_iter().filter(|r| *r != int(0)).collect()
}

fn h(i: i64) -> Result<Rat> {
    harmonic_at(i)
}

fn b(i: i64) -> Rat {
    bernoulli_number(i as usize)
}

fn one(lhs: Rat, rhs: Rat) -> Result<Vec<Part>> {
    Ok(vec![Part::new(lhs, rhs)])
}

/// True unless `r` is an integer in `0..n`, i.e. `C(r, k) != 0` for all `k <= n`.
fn binom_nonvanishing(r: &Rat, n: i64) -> bool {
    !matches!(as_integer(r), Some(v) if (0..n).contains(&v))
}

/// One part per coefficient, tagged with its degree.
fn coeff_parts(l: &Poly, r: &Poly) -> Vec<Part> {
    let top = l.coeffs().len().max(r.coeffs().len()).max(1);
    (0..top)
        .map(|d| Part::tagged(Params::new().with_int("deg", d as i64), l.coeff(d), r.coeff(d)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{registry, run, summarize};

    #[test]
    fn every_identity_passes_at_small_nmax() {
        let reports = run(&[], 6, 0).unwrap();
        let failing: Vec<_> = reports.iter().filter(|r| !r.pass).take(10).collect();
        assert!(failing.is_empty(), "{failing:#?}");
        let ids: Vec<_> = summarize(&reports).into_iter().map(|(id, _, _)| id).collect();
        assert_eq!(ids.len(), registry().len(), "every id runs at least once");
    }
}
