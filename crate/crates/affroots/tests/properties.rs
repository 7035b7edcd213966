use affroots::lattice::{form, reflect};
use affroots::realization::{super_bracket, Gq, Model};
use affroots::rootsys::{class_of, contains, enumerate, parity};
use affroots::shadow::{
    check_axioms, extremal_set, oracle_extremal_set, pattern_of, random_model, synth_labeling,
    PatternCase, SynthKind,
};
use affroots::{AlgebraType, Family, RootClass, RootVec, Window};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebra() -> impl Strategy<Value = AlgebraType> {
    (0..4usize, 1..=2usize, 1..=2usize).prop_filter_map("valid type", |(f, k, l)| {
        AlgebraType::new(Family::ALL[f], k, l).ok()
    })
}

fn full(c: PatternCase) -> bool {
    matches!(c, PatternCase::AllLn | PatternCase::AllIn)
}

fn kind() -> impl Strategy<Value = SynthKind> {
    prop_oneof![
        Just(SynthKind::AllUp),
        Just(SynthKind::AllDown),
        Just(SynthKind::MixedTight)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn roots_are_symmetric(ty in algebra(), n in 0..6i64) {
        let view = enumerate(&ty, Window::new(n));
        for x in view.roots() {
            prop_assert!(view.find(&-x).is_some(), "{x}");
            prop_assert!(contains(&ty, x));
            prop_assert_eq!(view.find(x).unwrap().class, class_of(x));
        }
    }

    #[test]
    fn delta_shift_preserves_membership(ty in algebra(), i in 0..200usize) {
        let view = enumerate(&ty, Window::new(4));
        let x = &view.entries[i % view.len()].root;
        let p = parity(&ty, x).unwrap();
        let period = affroots::rootsys::min_period(&ty);
        let y = x.shifted(period * 2);
        prop_assert!(contains(&ty, &y));
        prop_assert_eq!(parity(&ty, &y).unwrap(), p);
    }

    #[test]
    fn reflections_are_involutions(ty in algebra(), a in 0..500usize, b in 0..500usize) {
        let view = enumerate(&ty, Window::new(3));
        let real = view.real();
        let alpha = &real[a % real.len()];
        let lam = &view.entries[b % view.len()].root;
        let r = reflect(lam, alpha).unwrap();
        prop_assert!(contains(&ty, &r), "r_{alpha}({lam}) = {r}");
        prop_assert_eq!(form(&r, &r), form(lam, lam));
        prop_assert_eq!(&reflect(&r, alpha).unwrap(), lam);
    }

    #[test]
    fn synthetic_labelings_satisfy_axioms(ty in algebra(), seed in 0..10_000u64, kind in kind()) {
        let l = synth_labeling(&ty, seed, kind);
        let w = Window::new(3);
        let rep = check_axioms(&l, w);
        prop_assert!(rep.passed(), "{:?}", rep.violations.first());
        prop_assert_eq!(l.roundtrip_witness(w), None);
    }

    #[test]
    fn negation_is_an_involution(ty in algebra(), seed in 0..10_000u64, kind in kind()) {
        let l = synth_labeling(&ty, seed, kind);
        let back = l.negated().negated();
        prop_assert_eq!(back.patterns(), l.patterns());
        let w = Window::new(3);
        for g in l.patterns().keys().take(4) {
            let s = l.string_labels(g, w);
            let t = l.negated().string_labels(&-g, w);
            prop_assert_eq!(s.len(), t.len());
            prop_assert_eq!(full(pattern_of(&s)), full(pattern_of(&t)));
        }
    }

    #[test]
    fn extremal_set_matches_definition(seed in 0..1_000_000u64) {
        let m = random_model(seed);
        prop_assert_eq!(extremal_set(&m).unwrap(), oracle_extremal_set(&m));
    }
}

fn model_case() -> impl Strategy<Value = (AlgebraType, u64, bool, bool)> {
    (0..4usize, any::<u64>(), any::<bool>(), any::<bool>()).prop_map(|(f, s, a, b)| {
        let fam = Family::ALL[f];
        let ty = AlgebraType::new(fam, 1, 1)
            .or_else(|_| AlgebraType::new(fam, 2, 1))
            .unwrap();
        (ty, s, a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn bracket_is_supersymmetric((ty, seed, ox, oy) in model_case()) {
        let m = Model::new(&ty).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = m.random_element(&mut rng, ox);
        let y = m.random_element(&mut rng, oy);
        let xy = super_bracket(&x, &y).unwrap();
        let yx = super_bracket(&y, &x).unwrap();
        let sign = if ox && oy { Gq::one() } else { -Gq::one() };
        prop_assert_eq!(xy.clone(), yx.scale(&sign));
        prop_assert!(m.contains(&xy));
    }

    #[test]
    fn sigma_respects_brackets((ty, seed, ox, oy) in model_case()) {
        let m = Model::new(&ty).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = m.random_element(&mut rng, ox);
        let y = m.random_element(&mut rng, oy);
        let lhs = m.sigma(&super_bracket(&x, &y).unwrap()).unwrap();
        let rhs = super_bracket(&m.sigma(&x).unwrap(), &m.sigma(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn classes_partition_the_window() {
    let ty = AlgebraType::new(Family::AEvenOdd, 1, 1).unwrap();
    let view = enumerate(&ty, Window::new(2));
    let count = |c: RootClass| view.with_class(c).len();
    let total = count(RootClass::Real)
        + count(RootClass::Imaginary)
        + count(RootClass::Nonsingular)
        + count(RootClass::Zero);
    assert_eq!(total, view.len());
    assert!(view.find(&RootVec::zero(1, 1)).is_some());
}
