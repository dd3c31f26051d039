use skein_core::fib::fib_divisibility_check;
use skein_core::knot::normalize_shift;
use skein_core::ring::is_prime;
use skein_core::{
    trivial_knot, trivializing_exponent, KnotExpr, KnotTable, LPoly1, Ring, SkeinOracle,
};

fn table_exprs(table: &KnotTable) -> Vec<KnotExpr> {
    table
        .records()
        .map(|r| KnotExpr::named(r.name.clone()))
        .collect()
}

#[test]
fn homomorphism_over_table_pairs() {
    let table = KnotTable::bundled();
    let mut exprs = table_exprs(&table);
    exprs.push(KnotExpr::torus(7).unwrap());
    exprs.push(KnotExpr::torus(-3).unwrap());
    for e1 in &exprs {
        for e2 in &exprs {
            let joined = e1.connect(e2).eval_mod(2, 1, &table).unwrap();
            let product = &e1.eval_mod(2, 1, &table).unwrap() * &e2.eval_mod(2, 1, &table).unwrap();
            assert_eq!(joined, product, "{e1} # {e2}");
        }
    }
}

#[test]
fn mirror_commutes_with_evaluation() {
    let table = KnotTable::bundled();
    for e in table_exprs(&table) {
        let e = e.connect(&KnotExpr::torus(5).unwrap());
        assert_eq!(
            e.mirror().eval_mod(2, 1, &table).unwrap(),
            e.eval_mod(2, 1, &table).unwrap().mirror()
        );
    }
    let empty = KnotTable::default();
    for p in [3u64, 5, 7] {
        for n in [3i64, -5, 9] {
            let e = KnotExpr::torus(n).unwrap();
            assert_eq!(
                e.mirror().eval_mod(p, 1, &empty).unwrap(),
                e.eval_mod(p, 1, &empty).unwrap().mirror()
            );
        }
    }
}

#[test]
fn trivializing_contract() {
    let empty = KnotTable::default();
    for p in (2..=13).filter(|&p| is_prime(p)) {
        for eval in 0..=6 {
            let e = trivial_knot(p, eval).unwrap();
            assert!(
                e.eval_mod(p, eval, &empty).unwrap().is_one(),
                "p={p} N={eval}"
            );
            let m = trivializing_exponent(p, eval).unwrap() as i64;
            assert_eq!(
                e,
                KnotExpr::torus(m + 1)
                    .unwrap()
                    .connect(&KnotExpr::torus(-m - 1).unwrap())
            );
        }
    }
}

#[test]
fn fwm_consistency() {
    for rec in KnotTable::bundled().records() {
        let span = rec.poly.degree_stats().unwrap().span;
        assert!(span + 2 <= 2 * u64::from(rec.braid_index), "{}", rec.name);
    }
}

#[test]
fn fibonacci_divisibility() {
    for p in (2..=200).filter(|&p| is_prime(p)) {
        fib_divisibility_check(p).unwrap();
    }
}

#[test]
fn shift_normalization_lands_in_window() {
    for m in [3u64, 4, 10] {
        for min in -40i64..40 {
            let q = LPoly1::from_exponents(Ring::Mod(2), &[min, min + 4]);
            let lo = normalize_shift(&q, m)
                .unwrap()
                .shifted
                .min_degree()
                .unwrap();
            assert!((0..2 * m as i64).contains(&lo), "m={m} min={min}");
        }
    }
}

#[test]
fn shift_addend_realizes_the_shift() {
    // 3 is the period mod 2 at z = 1
    for min in -40i64..40 {
        let q = LPoly1::from_exponents(Ring::Mod(2), &[min, min + 4]);
        let s = normalize_shift(&q, 3).unwrap();
        let value = match s.addend() {
            Some(add) => add.eval_mod(2, 1, &KnotTable::default()).unwrap(),
            None => LPoly1::one(Ring::Mod(2)),
        };
        assert_eq!(&q * &value, s.shifted, "min={min}");
    }
}

#[test]
fn oracle_cross_check_on_torus_sums() {
    let empty = KnotTable::default();
    let mut oracle = SkeinOracle::new();
    let sums: &[&[i64]] = &[
        &[3],
        &[-5],
        &[3, 3],
        &[3, -3],
        &[5, -7],
        &[-3, 9],
        &[3, 5, -5],
        &[1, 7, -3],
        &[7, 7],
    ];
    for &ns in sums {
        let e = KnotExpr::from_factors(
            ns.iter()
                .map(|&n| skein_core::Factor::torus(n).unwrap())
                .collect(),
        );
        let word = e.braid_word().unwrap();
        assert!(word.len() <= 14);
        let exact = oracle.homfly_of_closure(&word).unwrap();
        for p in [2u64, 3, 5] {
            for eval in 1..p as i64 {
                assert_eq!(
                    exact.eval_z(eval, Some(p)).unwrap(),
                    e.eval_mod(p, eval, &empty).unwrap(),
                    "{e} p={p} N={eval}"
                );
            }
        }
    }
}
