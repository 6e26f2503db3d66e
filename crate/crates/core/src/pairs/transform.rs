use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{choose, sign};
use crate::seqlib::Seq;

/// `sigma_n = sum_k (-1)^k C(n,k) s_k` for every `n` in the prefix.
pub fn bt_first(s: &Seq) -> Seq {
    Seq::from_fn(format!("bt1({})", s.label()), s.len(), |n| {
        (0..=n)
            .map(|k| sign(k as i64) * choose(n, k as i64) * &s[k])
            .sum()
    })
}

/// `sigma_n = sum_k C(n,k) s_k`.
pub fn bt_second(s: &Seq) -> Seq {
    Seq::from_fn(format!("bt2({})", s.label()), s.len(), |n| {
        (0..=n).map(|k| choose(n, k as i64) * &s[k]).sum()
    })
}

/// Inverse of [`bt_second`]: `s_n = sum_k (-1)^(n-k) C(n,k) sigma_k`.
pub fn bt_second_inverse(sigma: &Seq) -> Seq {
    Seq::from_fn(format!("bt2inv({})", sigma.label()), sigma.len(), |n| {
        (0..=n)
            .map(|k| sign((n - k) as i64) * choose(n, k as i64) * &sigma[k])
            .sum()
    })
}

pub fn involution_check(s: &Seq) -> bool {
    bt_first(&bt_first(s)).values() == s.values()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Invariant,
    InverseInvariant,
    Neither,
}

/// Whether `s` is fixed (or negated) by the first-kind transform on its whole
/// prefix. The all-zero sequence is reported as invariant.
pub fn classify(s: &Seq) -> Result<Classification> {
    if s.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            len: s.len(),
        });
    }
    let t = bt_first(s);
    Ok(if t.values() == s.values() {
        Classification::Invariant
    } else if t.values().iter().zip(s.values()).all(|(a, b)| (a + b).is_zero()) {
        Classification::InverseInvariant
    } else {
        Classification::Neither
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::seqlib::{bernoulli_number, catalan, fibonacci, harmonic, lucas};

    fn ints(label: &str, v: &[i64]) -> Seq {
        Seq::new(label, v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(bt_first(&ints("1", &[1, 1, 1, 1])), ints("", &[1, 0, 0, 0]).with_label("bt1(1)"));
        let f = Seq::from_fn("F", 5, |k| fibonacci(k as i64));
        assert_eq!(bt_first(&f).values(), f.neg().values());
        let l = Seq::from_fn("L", 5, |k| lucas(k as i64));
        assert_eq!(bt_first(&l).values(), ints("", &[2, 1, 3, 4, 7]).values());
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(bt_second(&ints("d", &[1, 0, 0, 0])).values(), ints("", &[1, 1, 1, 1]).values());
        assert_eq!(bt_second(&ints("1", &[1, 1, 1, 1])).values(), ints("", &[1, 2, 4, 8]).values());
        let b = Seq::from_fn("B", 4, bernoulli_number);
        assert_eq!(
            bt_second(&b).values(),
            &[int(1), rat(1, 2), rat(1, 6), int(0)]
        );
        assert_eq!(bt_second_inverse(&bt_second(&b)).values(), b.values());
    }

    #[test]
    fn involution_on_special_prefixes() {
        assert!(involution_check(&Seq::from_fn("H", 6, harmonic)));
        assert!(involution_check(&Seq::from_fn("C", 9, catalan)));
    }

    #[test]
    fn classification() {
        let l = Seq::from_fn("L", 16, |k| lucas(k as i64));
        let f = Seq::from_fn("F", 16, |k| fibonacci(k as i64));
        let h = Seq::from_fn("H", 16, harmonic);
        assert_eq!(classify(&l).unwrap(), Classification::Invariant);
        assert_eq!(classify(&f).unwrap(), Classification::InverseInvariant);
        assert_eq!(classify(&h).unwrap(), Classification::Neither);
        assert!(classify(&ints("x", &[1])).is_err());
    }
}
