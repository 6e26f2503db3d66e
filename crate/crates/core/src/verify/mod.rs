//! Registry of parameterized identities and the sweep runner behind
//! `btconv verify`.
//!
//! Each [`IdentityCheck`] owns a parameter domain (a function of `nmax`), a
//! guard that drops instances outside the identity's stated range, and an
//! evaluator producing one or more exact `(lhs, rhs)` parts per domain point.
//! Polynomial identities produce one part per coefficient.

mod config;
mod grid;
mod registry;

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::convolve::SideReport;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::pairs::{Kind, Pair};
use crate::params::Params;

pub use config::RunConfig;
pub use grid::Grid;

/// Extra terms generated past `nmax` for random pairs, enough for every
/// shifted index the registry uses.
pub const RANDOM_PAIR_SLACK: usize = 16;

/// Evaluation context shared by every instance of a run.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub nmax: usize,
    pub seed: u64,
}

impl Ctx {
    pub fn new(nmax: usize, seed: u64) -> Self {
        Ctx { nmax, seed }
    }

    /// Random tabulated pair; `slot` selects an independent ChaCha stream so
    /// the same slot always yields the same pair for a given seed.
    pub fn random(&self, kind: Kind, slot: u64) -> Pair {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(slot * 2 + u64::from(kind == Kind::Second));
        Pair::random(kind, format!("random{slot}"), self.nmax + RANDOM_PAIR_SLACK, &mut rng)
    }

    pub fn first(&self, slot: u64) -> Pair {
        self.random(Kind::First, slot)
    }

    pub fn second(&self, slot: u64) -> Pair {
        self.random(Kind::Second, slot)
    }
}

/// One compared quantity; `extra` distinguishes several parts of one
/// domain point (e.g. the coefficient degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub extra: Params,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl Part {
    pub fn new(lhs: Rat, rhs: Rat) -> Self {
        Part {
            extra: Params::new(),
            lhs,
            rhs,
        }
    }

    pub fn tagged(extra: Params, lhs: Rat, rhs: Rat) -> Self {
        Part { extra, lhs, rhs }
    }
}

impl From<SideReport> for Part {
    fn from(r: SideReport) -> Self {
        Part::new(r.lhs, r.rhs)
    }
}

type DomainFn = Box<dyn Fn(usize) -> Vec<Params> + Send + Sync>;
type GuardFn = Box<dyn Fn(&Params) -> bool + Send + Sync>;
type EvalFn = Box<dyn Fn(&Ctx, &Params) -> Result<Vec<Part>> + Send + Sync>;

pub struct IdentityCheck {
    id: String,
    anchor: String,
    randomized: bool,
    domain: DomainFn,
    guard: GuardFn,
    eval: EvalFn,
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("randomized", &self.randomized)
            .finish()
    }
}

impl IdentityCheck {
    pub fn new<D, E>(id: impl Into<String>, anchor: impl Into<String>, domain: D, eval: E) -> Self
    where
        D: Fn(usize) -> Vec<Params> + Send + Sync + 'static,
        E: Fn(&Ctx, &Params) -> Result<Vec<Part>> + Send + Sync + 'static,
    {
        IdentityCheck {
            id: id.into(),
            anchor: anchor.into(),
            randomized: false,
            domain: Box::new(domain),
            guard: Box::new(|_| true),
            eval: Box::new(eval),
        }
    }

    /// Marks the check as drawing random pairs, so reports carry the seed.
    pub fn randomized(mut self) -> Self {
        self.randomized = true;
        self
    }

    pub fn guarded(mut self, guard: impl Fn(&Params) -> bool + Send + Sync + 'static) -> Self {
        self.guard = Box::new(guard);
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// What the identity states, in plain text.
    pub fn anchor(&self) -> &str {
        &self.anchor
    }

    pub fn is_randomized(&self) -> bool {
        self.randomized
    }

    /// Domain points that pass the guard.
    pub fn domain(&self, nmax: usize) -> Vec<Params> {
        (self.domain)(nmax)
            .into_iter()
            .filter(|p| (self.guard)(p))
            .collect()
    }

    pub fn evaluate(&self, ctx: &Ctx, params: &Params) -> Result<Vec<Part>> {
        (self.eval)(ctx, params)
    }
}

/// Validated, id-sorted collection of checks.
#[derive(Debug)]
pub struct Registry {
    checks: Vec<IdentityCheck>,
}

impl Registry {
    /// Rejects duplicate ids.
    pub fn from_checks(mut checks: Vec<IdentityCheck>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &checks {
            if !seen.insert(c.id.clone()) {
                return Err(Error::DuplicateIdentity(c.id.clone()));
            }
        }
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(Registry { checks })
    }

    pub fn checks(&self) -> &[IdentityCheck] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Resolves a selection; an empty list or one containing `all` selects
    /// everything. Unknown ids are an error.
    pub fn select(&self, ids: &[String]) -> Result<Vec<&IdentityCheck>> {
        if ids.is_empty() || ids.iter().any(|i| i == "all") {
            return Ok(self.checks.iter().collect());
        }
        let mut wanted: Vec<&str> = ids.iter().map(String::as_str).collect();
        wanted.sort_unstable();
        wanted.dedup();
        wanted
            .into_iter()
            .map(|id| self.get(id).ok_or_else(|| Error::UnknownIdentity(id.to_string())))
            .collect()
    }

    /// Sweeps the selected checks. Instances run in parallel; the result is
    /// ordered by id, then by domain order.
    pub fn run(&self, ids: &[String], nmax: usize, seed: u64) -> Result<Vec<Report>> {
        let ctx = Ctx::new(nmax, seed);
        let tasks: Vec<(&IdentityCheck, Params)> = self
            .select(ids)?
            .into_iter()
            .flat_map(|c| c.domain(nmax).into_iter().map(move |p| (c, p)))
            .collect();
        let reports: Vec<Vec<Report>> = tasks
            .par_iter()
            .map(|(check, params)| run_instance(check, &ctx, params))
            .collect();
        Ok(reports.into_iter().flatten().collect())
    }
}

fn run_instance(check: &IdentityCheck, ctx: &Ctx, params: &Params) -> Vec<Report> {
    let start = Instant::now();
    let outcome = check.evaluate(ctx, params);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let seed = check.randomized.then_some(ctx.seed);
    match outcome {
        Ok(parts) => {
            let share = ms / parts.len().max(1) as f64;
            parts
                .into_iter()
                .map(|part| Report {
                    id: check.id.clone(),
                    params: params.merged(&part.extra),
                    pass: part.lhs == part.rhs,
                    lhs: part.lhs.to_string(),
                    rhs: part.rhs.to_string(),
                    seed,
                    duration_ms: share,
                    error: None,
                })
                .collect()
        }
        Err(e) => vec![Report {
            id: check.id.clone(),
            params: params.clone(),
            lhs: String::new(),
            rhs: String::new(),
            pass: false,
            seed,
            duration_ms: ms,
            error: Some(e.to_string()),
        }],
    }
}

/// The full registry, built once.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        Registry::from_checks(registry::all()).expect("registry ids are unique")
    })
}

/// Sweeps `ids` (or everything) over the shared registry.
pub fn run(ids: &[String], nmax: usize, seed: u64) -> Result<Vec<Report>> {
    registry().run(ids, nmax, seed)
}

/// One compared instance. `pass` is exact equality of `lhs` and `rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub id: String,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub seed: Option<u64>,
    pub duration_ms: f64,
    /// Set when evaluation failed outright; such reports never pass.
    pub error: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "params": Value::Object(self.params.to_json()),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.pass,
            "seed": self.seed,
            "duration_ms": self.duration_ms,
        });
        if let Some(e) = &self.error {
            v["error"] = Value::from(e.clone());
        }
        v
    }

    pub fn to_jsonl(&self) -> String {
        self.to_json().to_string()
    }
}

/// Per-identity pass/fail counts, in report order.
pub fn summarize(reports: &[Report]) -> Vec<(String, usize, usize)> {
    let mut out: Vec<(String, usize, usize)> = Vec::new();
    for r in reports {
        match out.last_mut() {
            Some((id, pass, fail)) if *id == r.id => {
                if r.pass {
                    *pass += 1
                } else {
                    *fail += 1
                }
            }
            _ => out.push((r.id.clone(), usize::from(r.pass), usize::from(!r.pass))),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn toy(id: &str) -> IdentityCheck {
        IdentityCheck::new(
            id,
            "n = n",
            |nmax| Grid::unit().int_range("n", 0..=nmax as i64).done(),
            |_, p| Ok(vec![Part::new(int(p.int("n")?), int(p.int("n")?))]),
        )
    }

    #[test]
    fn duplicates_rejected() {
        let err = Registry::from_checks(vec![toy("a"), toy("a")]).unwrap_err();
        assert_eq!(err, Error::DuplicateIdentity("a".into()));
    }

    #[test]
    fn selection_and_order() {
        let reg = Registry::from_checks(vec![toy("b"), toy("a")]).unwrap();
        let ids: Vec<_> = reg.checks().iter().map(|c| c.id()).collect();
        assert_eq!(ids, ["a", "b"]);
        assert_eq!(reg.select(&["all".into()]).unwrap().len(), 2);
        assert!(matches!(reg.select(&["zzz".into()]), Err(Error::UnknownIdentity(_))));
        let reports = reg.run(&["b".into(), "a".into()], 3, 0).unwrap();
        assert_eq!(reports.len(), 8);
        assert_eq!(reports[0].id, "a");
        assert_eq!(reports[4].id, "b");
        assert!(reports.iter().all(|r| r.pass && r.seed.is_none()));
        assert_eq!(summarize(&reports), vec![("a".into(), 4, 0), ("b".into(), 4, 0)]);
    }

    #[test]
    fn failures_are_reported_not_raised() {
        let bad = IdentityCheck::new("bad", "", |_| vec![Params::new()], |_, _| {
            Err(Error::Guard("nope".into()))
        });
        let reg = Registry::from_checks(vec![bad]).unwrap();
        let r = &reg.run(&[], 0, 0).unwrap()[0];
        assert!(!r.pass);
        assert!(r.to_jsonl().contains("\"error\":\"guard violated: nope\""));
    }

    #[test]
    fn random_pairs_are_seed_stable() {
        let a = Ctx::new(4, 9).first(3);
        let b = Ctx::new(4, 9).first(3);
        let c = Ctx::new(4, 10).first(3);
        assert_eq!(a.left_seq(20).unwrap(), b.left_seq(20).unwrap());
        assert_ne!(a.left_seq(20).unwrap(), c.left_seq(20).unwrap());
        assert_ne!(a.left_seq(20).unwrap(), Ctx::new(4, 9).second(3).left_seq(20).unwrap());
    }

    #[test]
    fn jsonl_shape() {
        let r = Report {
            id: "x".into(),
            params: Params::new().with_int("n", 2),
            lhs: "1/2".into(),
            rhs: "1/2".into(),
            pass: true,
            seed: Some(0),
            duration_ms: 0.5,
            error: None,
        };
        assert_eq!(
            r.to_jsonl(),
            r#"{"id":"x","params":{"n":2},"lhs":"1/2","rhs":"1/2","pass":true,"seed":0,"duration_ms":0.5}"#
        );
    }
}
