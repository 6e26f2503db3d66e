use std::ops::RangeInclusive;

use crate::exact::Rat;
use crate::params::Params;

/// Cartesian-product builder for parameter domains. Later axes may depend on
/// the values already chosen.
#[derive(Debug, Clone)]
pub struct Grid(Vec<Params>);

impl Grid {
    /// The single empty point.
    pub fn unit() -> Self {
        Grid(vec![Params::new()])
    }

    pub fn ints_with(self, name: &str, values: impl Fn(&Params) -> Vec<i64>) -> Self {
        Grid(
            self.0
                .into_iter()
                .flat_map(|p| {
                    values(&p)
                        .into_iter()
                        .map(move |v| p.clone().with_int(name, v))
                        .collect::<Vec<_>>()
                })
                .collect(),
        )
    }

    pub fn int_range(self, name: &str, range: RangeInclusive<i64>) -> Self {
        self.ints_with(name, |_| range.clone().collect())
    }

    pub fn ints(self, name: &str, values: &[i64]) -> Self {
        self.ints_with(name, |_| values.to_vec())
    }

    pub fn rats(self, name: &str, values: &[Rat]) -> Self {
        Grid(
            self.0
                .into_iter()
                .flat_map(|p| values.iter().map(move |v| p.clone().with_rat(name, v.clone())))
                .collect(),
        )
    }

    pub fn labels(self, name: &str, values: &[&str]) -> Self {
        Grid(
            self.0
                .into_iter()
                .flat_map(|p| values.iter().map(move |v| p.clone().with_label(name, *v)))
                .collect(),
        )
    }

    /// Appends every point of `points` to every current point.
    pub fn product(self, points: &[Params]) -> Self {
        Grid(
            self.0
                .into_iter()
                .flat_map(|p| points.iter().map(move |q| p.merged(q)))
                .collect(),
        )
    }

    pub fn keep(self, f: impl Fn(&Params) -> bool) -> Self {
        Grid(self.0.into_iter().filter(|p| f(p)).collect())
    }

    pub fn done(self) -> Vec<Params> {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn dependent_axes() {
        let g = Grid::unit()
            .int_range("n", 0..=2)
            .ints_with("j", |p| (0..=p.int("n").unwrap()).collect())
            .done();
        assert_eq!(g.len(), 6);
        assert_eq!(g[5].to_string(), "n=2,j=2");
        let g = Grid::unit().rats("x", &[int(1), int(2)]).labels("s", &["a"]).keep(|p| p.int("x").unwrap() > 1);
        assert_eq!(g.done()[0].to_string(), "x=2,s=a");
    }
}
