//! End-to-end acceptance run: nine criteria, each exact and time-boxed.
//! Prints one PASS/FAIL line per criterion and fails if any does.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use btconv::convolve::{
    check_extension, check_gen1, check_gen2, check_main1, check_main2, check_mixed,
    check_nested_shift, check_swap, Extension, SideReport,
};
use btconv::exact::{int, rat, Rat};
use btconv::pairs::{bt_first, classify, random_seq, Classification, Kind, Pair};
use btconv::polyring::{
    check_named_poly, check_poly_first, check_poly_second, check_sun_lemma, named_poly_grid,
    NAMED_POLYS,
};
use btconv::seqlib::{bernoulli_number, fibonacci, lucas, Seq};
use btconv::verify::{self, Report};
use btconv::Error;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn all_pass(reports: &[Report]) -> Outcome {
    match reports.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(format!("{} failed at {}: {} != {}", r.id, r.params, r.lhs, r.rhs)),
    }
}

fn side(r: SideReport, what: &str) -> Outcome {
    ensure(r.holds(), || format!("{what}: {r}"))
}

fn n_of(r: &Report) -> i64 {
    r.params.int("n").unwrap()
}

fn c1_bernoulli() -> Outcome {
    let expected = [rat(1, 1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30), int(0), rat(1, 42), int(0)];
    let got: Vec<Rat> = (0..8).map(bernoulli_number).collect();
    ensure(got == expected, || format!("got {got:?}"))
}

fn c2_dixon() -> Outcome {
    let reports = verify::run(&["dixon".into()], 12, 0).map_err(|e| e.to_string())?;
    ensure(reports.len() == 13, || format!("{} reports", reports.len()))?;
    all_pass(&reports)?;
    ensure(reports[2].lhs == "-6" && reports[4].lhs == "90", || {
        format!("n=2 -> {}, n=4 -> {}", reports[2].lhs, reports[4].lhs)
    })
}

fn c3_catalan() -> Outcome {
    let ids = ["catalan_mikic".to_string(), "catalan_floor".to_string()];
    let reports = verify::run(&ids, 14, 0).map_err(|e| e.to_string())?;
    all_pass(&reports)?;
    let odd_nonzero = reports.iter().find(|r| n_of(r) % 2 == 1 && (r.lhs != "0" || r.rhs != "0"));
    ensure(odd_nonzero.is_none(), || format!("odd n not zero: {odd_nonzero:?}"))
}

fn c4_fib_lucas_bernoulli() -> Outcome {
    let fib = verify::run(&["fib_bernoulli_even".into()], 20, 0).map_err(|e| e.to_string())?;
    let luc = verify::run(&["lucas_bernoulli_odd".into()], 19, 0).map_err(|e| e.to_string())?;
    ensure(fib.len() == 11 && luc.len() == 10, || format!("{} and {} instances", fib.len(), luc.len()))?;
    all_pass(&fib)?;
    all_pass(&luc)?;
    ensure(fib.iter().chain(&luc).all(|r| r.lhs == "0"), || "nonzero sum".into())
}

fn c5_involution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..200 {
        let s = random_seq(format!("r{i}"), 12, &mut rng);
        ensure(bt_first(&bt_first(&s)).values() == s.values(), || format!("sequence {i}: {s:?}"))?;
    }
    Ok(())
}

fn c6_theorems() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let len = 24;
    for trial in 0..50 {
        let p = Pair::random(Kind::First, "p", len, &mut rng);
        let q = Pair::random(Kind::First, "q", len, &mut rng);
        let sp = Pair::random(Kind::Second, "sp", len, &mut rng);
        let sq = Pair::random(Kind::Second, "sq", len, &mut rng);
        let err = |e: Error| format!("trial {trial}: {e}");
        for n in 0..=8 {
            let tag = |what: &str| format!("trial {trial}, n={n}, {what}");
            side(check_main1(&p, &q, n).map_err(err)?, &tag("main1"))?;
            side(check_main2(&sp, &sq, n).map_err(err)?, &tag("main2"))?;
            side(check_swap(&sp, &sq, n).map_err(err)?, &tag("swap"))?;
            side(check_mixed(&p, &sq, n).map_err(err)?, &tag("mixed"))?;
            for m in 0..=3 {
                for r in 0..=3 {
                    side(check_gen1(&p, &q, m, r, n).map_err(err)?, &tag(&format!("gen1 m={m} r={r}")))?;
                    side(check_nested_shift(&p, m, r, n).map_err(err)?, &tag(&format!("nested m={m} r={r}")))?;
                }
            }
            for m in 0..=2 {
                for r in 0..=2 {
                    for u in 0..=2 {
                        for v in 0..=2 {
                            let rep = check_gen2(&p, &q, m, n, r, u, v).map_err(err)?;
                            side(rep, &tag(&format!("gen2 m={m} r={r} u={u} v={v}")))?;
                        }
                    }
                }
            }
            for j in 0..=n {
                side(check_extension(Extension::PowerTwo { j }, &p, None, n).map_err(err)?, &tag("power-two"))?;
                side(check_extension(Extension::DoubleBinom { j }, &p, None, n).map_err(err)?, &tag("double-binom"))?;
            }
            side(check_extension(Extension::HalfWeight, &sp, Some(&sq), n).map_err(err)?, &tag("half-weight"))?;
            side(check_extension(Extension::Shifted, &p, Some(&q), n).map_err(err)?, &tag("shifted"))?;
            for m in 0..=3 {
                side(check_extension(Extension::KPower { m }, &p, Some(&q), n).map_err(err)?, &tag("k-power"))?;
            }
        }
    }
    Ok(())
}

fn c7_full_registry() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_btconv"))
        .args(["verify", "--identity", "all", "--nmax", "10", "--seed", "0"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let failed = text.lines().filter(|l| l.contains("\"pass\":false")).count();
    ensure(out.status.code() == Some(0) && failed == 0, || {
        format!("exit {:?}, {failed} failing reports", out.status.code())
    })?;
    ensure(text.lines().count() > 0, || "no reports".into())
}

fn c8_polynomials() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..50 {
        let p = Pair::random(Kind::First, "p", 10, &mut rng);
        let q = Pair::random(Kind::Second, "q", 10, &mut rng);
        for n in 0..=8 {
            let first = check_poly_first(&p, n).map_err(|e| e.to_string())?;
            let second = check_poly_second(&q, n).map_err(|e| e.to_string())?;
            ensure(first && second, || format!("trial {trial}, n={n}"))?;
        }
    }
    for m in 0..=5 {
        for n in 0..=5 {
            for r in 0..=10 {
                match check_sun_lemma(m, n, r) {
                    Ok(ok) => ensure(ok && r <= m.min(n), || format!("lemma at ({m},{n},{r})"))?,
                    Err(Error::NegativeExponent { .. }) if r > m.min(n) => {}
                    Err(e) => return Err(format!("lemma at ({m},{n},{r}): {e}")),
                }
            }
        }
    }
    for id in NAMED_POLYS {
        for params in named_poly_grid(id, 8).map_err(|e| e.to_string())? {
            let ok = check_named_poly(id, &params).map_err(|e| format!("{id} {params}: {e}"))?;
            ensure(ok, || format!("{id} at {params}"))?;
        }
    }
    Ok(())
}

fn c9_classification() -> Outcome {
    let seq = |label: &str, f: &dyn Fn(i64) -> Rat| Seq::from_fn(label, 16, |k| f(k as i64));
    let cases = [
        (seq("L", &lucas), Classification::Invariant),
        (seq("F", &fibonacci), Classification::InverseInvariant),
        (seq("kF", &|k| int(k) * fibonacci(k - 1)), Classification::Invariant),
        (
            seq("c", &|k| btconv::exact::c(2 * k, k) / btconv::exact::pow2(2 * k)),
            Classification::Invariant,
        ),
    ];
    for (s, want) in cases {
        let got = classify(&s).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{}: {got:?}, expected {want:?}", s.label()))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("1 Bernoulli values", c1_bernoulli, Duration::from_millis(1)),
        ("2 Dixon", c2_dixon, Duration::from_millis(10)),
        ("3 Mikic/Catalan", c3_catalan, Duration::from_millis(50)),
        ("4 Fibonacci/Lucas-Bernoulli vanishing", c4_fib_lucas_bernoulli, Duration::from_millis(20)),
        ("5 involution", c5_involution, Duration::from_secs(1)),
        ("6 theorem suite on random pairs", c6_theorems, Duration::from_secs(30)),
        ("7 full registry", c7_full_registry, Duration::from_secs(300)),
        ("8 polynomial suite", c8_polynomials, Duration::from_secs(30)),
        ("9 classification", c9_classification, Duration::from_millis(10)),
    ];
    let mut failures = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(()) if took <= limit => Ok(()),
            Ok(()) => Err(format!("too slow: {took:?} > {limit:?}")),
            Err(e) => Err(e),
        };
        match &verdict {
            Ok(()) => println!("PASS {name} ({took:.2?}, limit {limit:?})"),
            Err(e) => {
                println!("FAIL {name} ({took:.2?}, limit {limit:?}): {e}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
