mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{premise_sextuple, rng};
use spherics::ratio::{
    all_rearrangements, commute_check, compound, rearrange_prop10, CompoundedRatio, ExactRatio, RatioError, Sextuple,
    Symbol,
};

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-10_000i64..=-1, 1i64..=10_000]
}

proptest! {
    #[test]
    fn every_rearrangement_holds(seed in any::<u64>()) {
        let s = premise_sextuple(&mut rng(seed), 40);
        let all = all_rearrangements(&s).unwrap();
        prop_assert_eq!(all.len(), 9);
        for r in &all {
            prop_assert!(r.holds(), "{}", r);
            // Cross-multiplied: X·Q·S = Y·P·R.
            let [(p, q), (r2, s2)] = r.factors;
            prop_assert_eq!(
                s.get(r.numerator) * s.get(q) * s.get(s2),
                s.get(r.denominator) * s.get(p) * s.get(r2)
            );
        }
    }

    #[test]
    fn chain_rule(k in nonzero(), l in nonzero(), m in nonzero()) {
        let kl = ExactRatio::new(k, l).unwrap();
        let lm = ExactRatio::new(l, m).unwrap();
        prop_assert_eq!(compound(&kl, &lm), ExactRatio::new(k, m).unwrap());
    }

    #[test]
    fn compound_matches_integer_product(a in nonzero(), b in nonzero(), c in nonzero(), d in nonzero()) {
        let v = compound(&ExactRatio::new(a, b).unwrap(), &ExactRatio::new(c, d).unwrap());
        // v = (a·c)/(b·d) exactly, compared by cross multiplication in i128.
        let (n, m) = (v.numerator().clone(), v.denominator().clone());
        prop_assert_eq!(n * BigInt::from(b as i128 * d as i128), m * BigInt::from(a as i128 * c as i128));
    }

    #[test]
    fn commuting_antecedents(a in nonzero(), b in nonzero(), c in nonzero(), d in nonzero()) {
        let [a, b, c, d] = [a, b, c, d].map(BigInt::from);
        prop_assert!(commute_check(&a, &b, &c, &d).unwrap());
    }

    #[test]
    fn broken_premise_is_rejected(seed in any::<u64>(), bump in 1i64..100) {
        let mut s = premise_sextuple(&mut rng(seed), 40);
        s.a += bump;
        prop_assert_eq!(all_rearrangements(&s).unwrap_err(), RatioError::PremiseViolated);
    }
}

#[test]
fn target_classes() {
    let s = Sextuple { a: 6.into(), b: 1.into(), c: 2.into(), d: 3.into(), e: 1.into(), f: 1.into() };
    let r = rearrange_prop10(&s, Symbol::A, Symbol::C).unwrap();
    assert_eq!(r.factors, [(Symbol::B, Symbol::E), (Symbol::D, Symbol::F)]);
    assert_eq!(r.lhs, ExactRatio::new(3, 1).unwrap());
    for (x, y) in [(Symbol::B, Symbol::C), (Symbol::A, Symbol::E), (Symbol::C, Symbol::D)] {
        assert!(matches!(rearrange_prop10(&s, x, y), Err(RatioError::InvalidTarget { .. })));
    }
}

#[test]
fn compounded_ratio_of_many_factors() {
    let f: Vec<ExactRatio> = (1..=5).map(|k| ExactRatio::new(k, k + 1).unwrap()).collect();
    assert_eq!(CompoundedRatio::new(f).unwrap().value(), ExactRatio::new(1, 6).unwrap());
}
