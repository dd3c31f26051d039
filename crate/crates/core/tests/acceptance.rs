//! The eight acceptance criteria, each with its time limit. Prints one
//! PASS/FAIL line per criterion and fails if any criterion fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use skein_core::classify::{
    corollary_check, enumerate_candidates, match_realizations, reference_realizations,
    RealizationIndex,
};
use skein_core::fib::{fib_divisibility_check, FibCache};
use skein_core::ring::is_prime;
use skein_core::torus::closed_form_z0;
use skein_core::{
    torus_period, torus_poly, trivial_knot, BraidWord, DegreeWindow, KnotTable, LPoly1, LPoly2,
    Ring, SearchConfig, SkeinOracle,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn period_reproduction() -> Check {
    let m = torus_period(2, 1).map_err(|e| e.to_string())?;
    ensure(m == 3, || format!("m = {m}"))?;
    Ok("m = 3".into())
}

fn trivializing_knots() -> Check {
    let empty = KnotTable::default();
    let mut count = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for n in 0..=6 {
            let e = trivial_knot(p, n).map_err(|e| e.to_string())?;
            let v = e.eval_mod(p, n, &empty).map_err(|e| e.to_string())?;
            ensure(v.is_one(), || format!("p={p} N={n}: {e} gives {v}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs evaluate to 1"))
}

fn closed_form_at_z_zero() -> Check {
    for p in [2u64, 3, 5, 7] {
        let v = closed_form_z0(p + 1)
            .reduce_mod(p)
            .map_err(|e| e.to_string())?;
        let want = LPoly1::monomial(Ring::Mod(p), 2 * p as i64, 1);
        ensure(v == want, || format!("p={p}: {v}"))?;
        let exact = torus_poly(2 * p as i64 + 1)
            .eval_z(0, Some(p))
            .map_err(|e| e.to_string())?;
        ensure(exact == want, || format!("p={p}: recursion gives {exact}"))?;
    }
    Ok("P(T(2,2p+1))(a,0) = a^2p mod p for p <= 7".into())
}

fn closed_form_at_z_one() -> Check {
    let mut fib = FibCache::new();
    for k in 0..=30i64 {
        let v = torus_poly(2 * k + 1)
            .eval_z(1, None)
            .map_err(|e| e.to_string())?;
        let (lo, hi) = (v.coeff_int(2 * k), v.coeff_int(2 * k + 2));
        let (f1, f0) = (
            fib.get(2 * k as usize + 2).clone(),
            fib.get(2 * k as usize).clone(),
        );
        ensure(lo == f1 && -hi.clone() == f0 && v.len() <= 2, || {
            format!("k={k}: {v}")
        })?;
    }
    let mut primes = 0;
    for p in (2..=200).filter(|&p| is_prime(p)) {
        fib_divisibility_check(p).map_err(|e| e.to_string())?;
        primes += 1;
    }
    Ok(format!(
        "k <= 30 match Fibonacci; divisibility holds for {primes} primes"
    ))
}

fn oracle_equivalence() -> Check {
    let mut oracle = SkeinOracle::new();
    for n in -9i16..=9 {
        let w = BraidWord::from_signed(2, &vec![n.signum(); n.unsigned_abs() as usize])
            .map_err(|e| e.to_string())?;
        let p = oracle.homfly_of_closure(&w).map_err(|e| e.to_string())?;
        ensure(p == torus_poly(n as i64), || format!("n={n}: {p}"))?;
    }
    let w = BraidWord::parse(3, "s1^3 s2^-3").map_err(|e| e.to_string())?;
    let p = oracle.homfly_of_closure(&w).map_err(|e| e.to_string())?;
    ensure(p == &torus_poly(3) * &torus_poly(-3), || {
        format!("s1^3 s2^-3: {p}")
    })?;
    Ok("19 torus links and T(2,3)#T(2,-3)".into())
}

fn enumeration() -> Check {
    let table = KnotTable::bundled();
    let index =
        RealizationIndex::build(&table, &SearchConfig::default()).map_err(|e| e.to_string())?;
    for (lo, hi) in [(-4, 6), (-2, 8)] {
        let w = DegreeWindow::new(lo, hi).map_err(|e| e.to_string())?;
        let cands = enumerate_candidates(w);
        ensure(cands.len() == 16, || {
            format!("{w}: {} candidates", cands.len())
        })?;
        let report = match_realizations(w, &cands, &table, &index).map_err(|e| e.to_string())?;
        ensure(report.realized_count == 16, || {
            format!("{w}: {} realized", report.realized_count)
        })?;
        let mut ours: HashMap<LPoly1, usize> = HashMap::new();
        for e in &report.entries {
            *ours.entry(e.polynomial.clone()).or_default() += 1;
        }
        let mut theirs: HashMap<LPoly1, usize> = HashMap::new();
        for (_, p) in reference_realizations(w).ok_or("no reference table")? {
            *theirs.entry(p).or_default() += 1;
        }
        ensure(ours == theirs, || {
            format!("{w}: polynomial multiset differs from the reference")
        })?;
    }
    Ok("16 + 16 candidates, all realized, multisets equal".into())
}

fn corollary() -> Check {
    let table = KnotTable::bundled();
    let index =
        RealizationIndex::build(&table, &SearchConfig::default()).map_err(|e| e.to_string())?;
    let report = |lo, hi| {
        let w = DegreeWindow::new(lo, hi).map_err(|e| e.to_string())?;
        match_realizations(w, &enumerate_candidates(w), &table, &index).map_err(|e| e.to_string())
    };
    let (low, mid) = (report(-4, 6)?, report(-2, 8)?);
    let out = corollary_check(&low, &mid, &table, &index).map_err(|e| e.to_string())?;
    ensure(out.t == 7, || format!("T = {}", out.t))?;
    for e in &out.shifted.entries {
        let expr = e
            .realization
            .as_ref()
            .ok_or("unrealized [0,10] candidate")?;
        let v = expr.eval_mod(2, 1, &table).map_err(|e| e.to_string())?;
        ensure(v == e.polynomial, || format!("{expr} gives {v}"))?;
    }
    Ok("T = 7".into())
}

fn random_words(count: usize, knots_only: bool) -> Vec<BraidWord> {
    let strategy = (2u16..=5).prop_flat_map(|n| {
        let letter = (1..n as i16, proptest::bool::ANY).prop_map(|(g, s)| if s { g } else { -g });
        proptest::collection::vec(letter, 0..=10)
            .prop_map(move |l| BraidWord::from_signed(n, &l).expect("letters in range"))
    });
    let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[42; 32]);
    let mut runner = TestRunner::new_with_rng(Config::default(), rng);
    let mut out = Vec::new();
    while out.len() < count {
        let w = strategy.new_tree(&mut runner).expect("strategy").current();
        if !knots_only || w.closure_components() == 1 {
            out.push(w);
        }
    }
    out
}

fn property_suites() -> Check {
    let mut oracle = SkeinOracle::new();
    let one = LPoly2::one(Ring::Integers);
    let knots = random_words(60, true);
    let mut values = Vec::new();
    for w in &knots {
        let p = oracle
            .homfly_of_closure(w)
            .map_err(|e| format!("{w}: {e}"))?;
        let s = p.subst_z_delta().map_err(|e| format!("{w}: {e}"))?;
        ensure(s.is_one(), || format!("{w}: P(a, a^-1 - a) = {s}"))?;
        let (ok, _) = (&p - &one)
            .div_by_annihilator()
            .map_err(|e| e.to_string())?;
        ensure(ok, || format!("{w}: P - 1 not divisible"))?;
        values.push(p);
    }
    for pair in values.windows(2) {
        let (ok, _) = (&pair[0] - &pair[1])
            .div_by_annihilator()
            .map_err(|e| e.to_string())?;
        ensure(ok, || "difference of knot polynomials not divisible".into())?;
    }
    let words = random_words(60, false);
    for w in &words {
        let base = oracle
            .homfly_of_closure(w)
            .map_err(|e| format!("{w}: {e}"))?;
        for positive in [true, false] {
            let s = oracle
                .homfly_of_closure(&w.stabilize(positive))
                .map_err(|e| e.to_string())?;
            ensure(s == base, || {
                format!("{w}: stabilization changes the value")
            })?;
        }
        let mut l = w.signed();
        for _ in 1..l.len() {
            l.rotate_left(1);
            let r = BraidWord::from_signed(w.strands(), &l).map_err(|e| e.to_string())?;
            let v = oracle.homfly_of_closure(&r).map_err(|e| e.to_string())?;
            ensure(v == base, || format!("{w}: rotation {r} changes the value"))?;
        }
    }
    for rec in KnotTable::bundled().records() {
        rec.validate()?;
    }
    Ok(format!(
        "{} knots, {} words, dataset consistent",
        knots.len(),
        words.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 period reproduction",
            period_reproduction,
            Duration::from_millis(1),
        ),
        (
            "2 trivializing knots",
            trivializing_knots,
            Duration::from_secs(5),
        ),
        ("3 closed form at z=0", closed_form_at_z_zero, Duration::MAX),
        (
            "4 closed form at z=1",
            closed_form_at_z_one,
            Duration::from_secs(1),
        ),
        (
            "5 oracle equivalence",
            oracle_equivalence,
            Duration::from_secs(10),
        ),
        ("6 window enumeration", enumeration, Duration::from_secs(30)),
        ("7 corollary", corollary, Duration::MAX),
        (
            "8 property suites",
            property_suites,
            Duration::from_secs(60),
        ),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(detail) if took > limit => Err(format!("{detail}, but took {took:?} > {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS  {name:<24} {took:>12.3?}  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<24} {took:>12.3?}  {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
