//! Structural invariants, checked on generated inputs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use btconv::convolve::{check_main1, check_main2, check_mixed, check_swap};
use btconv::exact::rat;
use btconv::pairs::{bt_first, bt_second, bt_second_inverse, Kind, Pair};
use btconv::polyring::{poly_sides_first, poly_sides_second};
use btconv::seqlib::Seq;
use btconv::verify;

fn seq_strategy(max_len: usize) -> impl Strategy<Value = Seq> {
    prop::collection::vec((-50i64..50, 1i64..12), 1..max_len)
        .prop_map(|v| Seq::new("s", v.into_iter().map(|(a, b)| rat(a, b)).collect()))
}

fn pairs(seed: u64) -> (Pair, Pair, Pair, Pair) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (
        Pair::random(Kind::First, "p", 12, &mut rng),
        Pair::random(Kind::First, "q", 12, &mut rng),
        Pair::random(Kind::Second, "sp", 12, &mut rng),
        Pair::random(Kind::Second, "sq", 12, &mut rng),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn first_kind_is_an_involution(s in seq_strategy(14)) {
        let back = bt_first(&bt_first(&s));
        prop_assert_eq!(back.values(), s.values());
    }

    #[test]
    fn second_kind_inverse_round_trips(s in seq_strategy(14)) {
        let there_and_back = bt_second_inverse(&bt_second(&s));
        let back_and_there = bt_second(&bt_second_inverse(&s));
        prop_assert_eq!(there_and_back.values(), s.values());
        prop_assert_eq!(back_and_there.values(), s.values());
    }

    #[test]
    fn main_theorems_hold_on_random_pairs(seed in any::<u64>(), n in 0usize..=8) {
        let (p, q, sp, sq) = pairs(seed);
        prop_assert!(check_main1(&p, &q, n).unwrap().holds());
        prop_assert!(check_main2(&sp, &sq, n).unwrap().holds());
        prop_assert!(check_swap(&sp, &sq, n).unwrap().holds());
        prop_assert!(check_mixed(&p, &sq, n).unwrap().holds());
    }

    #[test]
    fn coefficientwise_implies_pointwise(seed in any::<u64>(), n in 0usize..=8) {
        let (p, _, sp, _) = pairs(seed);
        let points = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(-2, 3)];
        for (l, r) in [poly_sides_first(&p, n).unwrap(), poly_sides_second(&sp, n).unwrap()] {
            prop_assert_eq!(l.coeffs(), r.coeffs());
            for t in &points {
                prop_assert_eq!(l.eval(t), r.eval(t));
            }
        }
    }
}

fn strip_durations(reports: &mut [verify::Report]) {
    for r in reports {
        r.duration_ms = 0.0;
    }
}

#[test]
fn runs_are_deterministic() {
    let ids: Vec<String> = ["main1_random", "gen2", "poly_first", "chen_transfer"].map(String::from).into();
    let mut a = verify::run(&ids, 6, 42).unwrap();
    let mut b = verify::run(&ids, 6, 42).unwrap();
    strip_durations(&mut a);
    strip_durations(&mut b);
    let text = |rs: &[verify::Report]| rs.iter().map(|r| r.to_jsonl()).collect::<Vec<_>>().join("\n");
    assert_eq!(text(&a), text(&b));
}

#[test]
fn seed_changes_random_instances_only() {
    let ids = vec!["main1_random".to_string(), "dixon".to_string()];
    let a = verify::run(&ids, 4, 1).unwrap();
    let b = verify::run(&ids, 4, 2).unwrap();
    let lhs = |rs: &[verify::Report], id: &str| -> Vec<String> {
        rs.iter().filter(|r| r.id == id).map(|r| r.lhs.clone()).collect()
    };
    assert_eq!(lhs(&a, "dixon"), lhs(&b, "dixon"));
    assert_ne!(lhs(&a, "main1_random"), lhs(&b, "main1_random"));
}

#[test]
fn registry_is_large_and_every_domain_is_populated() {
    let reg = verify::registry();
    assert!(reg.len() >= 55, "only {} identities", reg.len());
    for check in reg.checks() {
        assert!(!check.domain(10).is_empty(), "{} has no instances at nmax 10", check.id());
        assert!(!check.anchor().is_empty());
    }
}

#[test]
fn dixon_at_eight_gives_nine_reports() {
    let reports = verify::run(&["dixon".to_string()], 8, 0).unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r.pass));
}

#[test]
fn catalan_mikic_value_at_two() {
    let reports = verify::run(&["catalan_mikic".to_string()], 2, 0).unwrap();
    let at_two = reports.iter().find(|r| r.params.int("n").unwrap() == 2).unwrap();
    assert_eq!(at_two.lhs, "2");
    assert!(at_two.pass);
}

#[test]
fn unknown_identity_is_an_error() {
    assert!(verify::run(&["no_such_identity".to_string()], 4, 0).is_err());
}

