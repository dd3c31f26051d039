use proptest::prelude::*;
use skein_core::poly2::lpoly2;
use skein_core::{torus_poly, BraidWord, LPoly2, Ring, SkeinOracle};

fn word() -> impl Strategy<Value = BraidWord> {
    (2u16..=5).prop_flat_map(|n| {
        let letter = (1..n as i16, prop::bool::ANY).prop_map(|(g, s)| if s { g } else { -g });
        prop::collection::vec(letter, 0..=10)
            .prop_map(move |l| BraidWord::from_signed(n, &l).unwrap())
    })
}

fn knot_word() -> impl Strategy<Value = BraidWord> {
    word().prop_filter("closure is a knot", |w| w.closure_components() == 1)
}

fn rotate(w: &BraidWord, k: usize) -> BraidWord {
    let mut l = w.signed();
    l.rotate_left(k);
    BraidWord::from_signed(w.strands(), &l).unwrap()
}

#[test]
fn agrees_with_torus_recursion() {
    let mut oracle = SkeinOracle::new();
    for n in -9i16..=9 {
        let l = vec![n.signum(); n.unsigned_abs() as usize];
        let w = BraidWord::from_signed(2, &l).unwrap();
        assert_eq!(
            oracle.homfly_of_closure(&w).unwrap(),
            torus_poly(n as i64),
            "n={n}"
        );
    }
}

#[test]
fn multiplicative_on_split_generators() {
    let mut oracle = SkeinOracle::new();
    for a in [-7i16, -5, -3, -1, 1, 3, 5, 7] {
        for b in [-7i16, -5, -3, -1, 1, 3, 5, 7] {
            let mut l = vec![a.signum(); a.unsigned_abs() as usize];
            l.extend(vec![2 * b.signum(); b.unsigned_abs() as usize]);
            let w = BraidWord::from_signed(3, &l).unwrap();
            let expected = &torus_poly(a as i64) * &torus_poly(b as i64);
            assert_eq!(
                oracle.homfly_of_closure(&w).unwrap(),
                expected,
                "a={a} b={b}"
            );
        }
    }
}

#[test]
fn known_knots() {
    let mut oracle = SkeinOracle::new();
    let fig8 = BraidWord::parse(3, "s1 s2^-1 s1 s2^-1").unwrap();
    assert_eq!(
        oracle.homfly_of_closure(&fig8).unwrap(),
        lpoly2(&[(-2, 0, 1), (0, 0, -1), (0, 2, -1), (2, 0, 1)])
    );
    // trefoil as a 3-braid equals the 2-braid version
    let t = BraidWord::parse(3, "s1^3 s2").unwrap();
    assert_eq!(oracle.homfly_of_closure(&t).unwrap(), torus_poly(3));
    // unlink of three components
    let u = BraidWord::empty(3);
    assert_eq!(
        oracle.homfly_of_closure(&u).unwrap(),
        LPoly2::delta().pow(2)
    );
}

#[test]
fn homfly_of_torus_3_4_is_a_knot_polynomial() {
    let w = BraidWord::parse(3, "s1 s2 s1 s2 s1 s2 s1 s2").unwrap();
    let p = SkeinOracle::new().homfly_of_closure(&w).unwrap();
    assert!(p.is_knot_shaped());
    assert!(p.subst_z_delta().unwrap().is_one());
    assert_eq!(
        p.mirror_a(),
        SkeinOracle::new()
            .homfly_of_closure(
                &BraidWord::parse(3, "s1^-1 s2^-1 s1^-1 s2^-1 s1^-1 s2^-1 s1^-1 s2^-1").unwrap()
            )
            .unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn knot_normalization(w in word()) {
        let p = SkeinOracle::new().homfly_of_closure(&w).unwrap();
        if w.closure_components() == 1 {
            prop_assert!(!p.has_negative_z());
            prop_assert!(p.terms().all(|(e, _)| e.a % 2 == 0));
            prop_assert!(p.subst_z_delta().unwrap().is_one());
            let (divisible, _) = (&p - &LPoly2::one(Ring::Integers)).div_by_annihilator().unwrap();
            prop_assert!(divisible);
        }
    }

    #[test]
    fn knot_differences_divisible(w in knot_word(), v in knot_word()) {
        let mut oracle = SkeinOracle::new();
        let d = &oracle.homfly_of_closure(&w).unwrap() - &oracle.homfly_of_closure(&v).unwrap();
        let (divisible, q) = d.div_by_annihilator().unwrap();
        prop_assert!(divisible);
        prop_assert_eq!(&q.unwrap() * &LPoly2::annihilator(), d);
    }

    #[test]
    fn markov_stabilization(w in word(), positive in prop::bool::ANY) {
        let mut oracle = SkeinOracle::new();
        let base = oracle.homfly_of_closure(&w).unwrap();
        prop_assert_eq!(oracle.homfly_of_closure(&w.stabilize(positive)).unwrap(), base);
    }

    #[test]
    fn conjugation_invariance(w in word()) {
        let mut oracle = SkeinOracle::new();
        let base = oracle.homfly_of_closure(&w).unwrap();
        for k in 1..w.len() {
            prop_assert_eq!(oracle.homfly_of_closure(&rotate(&w, k)).unwrap(), base.clone());
        }
    }
}
