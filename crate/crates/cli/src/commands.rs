use std::fmt::Write as _;
use std::path::Path;

use skein_core::classify::{
    corollary_check, enumerate_candidates, match_realizations, RealizationIndex,
};
use skein_core::fib::{fib_divisibility_check, legendre5, FibCache};
use skein_core::torus::torus_eval_mod;
use skein_core::{
    torus_period, torus_poly, trivial_knot, trivializing_exponent, BraidWord, DegreeWindow, Error,
    KnotTable, SearchConfig, SkeinOracle,
};

pub const USAGE: u8 = 1;
pub const DOMAIN: u8 = 2;
pub const INCOMPLETE: u8 = 3;
pub const INVARIANT: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Partial output printed before the error.
    pub stdout: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            stdout: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::IrreducibleWord(_) | Error::ClassSizeExceeded(_) => INCOMPLETE,
            Error::InvariantViolation { .. } | Error::UnrealizedCandidate(_) => INVARIANT,
            Error::Syntax(_) | Error::InvalidBraid(_) | Error::InvalidWindow(_) => USAGE,
            _ => DOMAIN,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn load_table(data: Option<&Path>) -> Result<KnotTable, Failure> {
    match data {
        None => Ok(KnotTable::bundled()),
        Some(path) => KnotTable::load(path).map_err(|e| match e {
            Error::Io(_) => Failure::from(e),
            // a malformed data file is a dataset failure, not a usage error
            other => Failure::new(INVARIANT, other.to_string()),
        }),
    }
}

pub fn trivial_knot_cmd(prime: u64, eval: i64) -> Outcome {
    let expr = trivial_knot(prime, eval)?;
    let m = trivializing_exponent(prime, eval)?;
    let word = expr.braid_word()?;
    let value = expr.eval_mod(prime, eval, &KnotTable::default())?;
    let mut out = String::new();
    writeln!(out, "knot: {expr}").unwrap();
    writeln!(out, "braid: {} on {} strands", word, word.strands()).unwrap();
    writeln!(out, "M = {m}").unwrap();
    writeln!(out, "P(a,{eval}) = {value} (mod {prime})").unwrap();
    if value.is_one() {
        writeln!(out, "verified: P \u{2261} 1 (mod {prime})").unwrap();
        Ok(out)
    } else {
        Err(Failure {
            code: INVARIANT,
            message: format!("{expr} does not trivialize"),
            stdout: out,
        })
    }
}

pub fn period(prime: u64, eval: i64) -> Outcome {
    if eval.rem_euclid(prime.max(1) as i64) == 0 && skein_core::ring::is_prime(prime) {
        return Err(Failure::new(
            DOMAIN,
            format!(
                "{prime} divides {eval}: the recurrence has no period here; \
                 use `knotdb trivial-knot --prime {prime} --eval {eval}`"
            ),
        ));
    }
    let m = torus_period(prime, eval)?;
    Ok(format!("m = {m}\n"))
}

pub fn torus(n: i64, eval: Option<i64>, modulus: Option<u64>) -> Outcome {
    let p = torus_poly(n);
    let text = match (eval, modulus) {
        (None, _) => p.to_string(),
        (Some(z), None) => p.eval_z(z, None)?.to_string(),
        (Some(z), Some(m)) => torus_eval_mod(n, m, z)?.to_string(),
    };
    Ok(format!("{text}\n"))
}

pub fn homfly(strands: u16, word: &str) -> Outcome {
    let w = BraidWord::parse(strands, word)?;
    let p = SkeinOracle::new().homfly_of_closure(&w)?;
    Ok(format!("{p}\n"))
}

pub fn classify(window: &str, data: Option<&Path>, json: bool, max_factors: usize) -> Outcome {
    let window: DegreeWindow = window.parse()?;
    let table = load_table(data)?;
    let config = SearchConfig {
        max_factors,
        ..SearchConfig::default()
    };
    let index = RealizationIndex::build(&table, &config)?;
    let report = match_realizations(window, &enumerate_candidates(window), &table, &index)?;
    Ok(if json {
        format!("{}\n", report.to_json())
    } else {
        report.to_string()
    })
}

pub fn corollary(data: Option<&Path>) -> Outcome {
    let table = load_table(data)?;
    let index = RealizationIndex::build(&table, &SearchConfig::default())?;
    let report = |lo, hi| -> Result<_, Failure> {
        let w = DegreeWindow::new(lo, hi)?;
        Ok(match_realizations(
            w,
            &enumerate_candidates(w),
            &table,
            &index,
        )?)
    };
    let low = report(-4, 6)?;
    let mid = report(-2, 8)?;
    let outcome = corollary_check(&low, &mid, &table, &index)?;
    let mut out = String::new();
    writeln!(
        out,
        "reference windows: braid index <= {}",
        outcome.reference_max
    )
    .unwrap();
    write!(out, "{}", outcome.shifted).unwrap();
    writeln!(
        out,
        "every P(a,1) mod 2 of span <= 10 is realized with braid index <= {}",
        outcome.t
    )
    .unwrap();
    Ok(out)
}

pub fn verify_table(data: Option<&Path>) -> Outcome {
    let table = load_table(data)?;
    let mut out = String::new();
    for rec in table.records() {
        let span = rec.poly.degree_stats()?.span;
        writeln!(
            out,
            "ok  {:<8} b={} span={:<2} {}",
            rec.name, rec.braid_index, span, rec.poly
        )
        .unwrap();
    }
    let index = RealizationIndex::build(&table, &SearchConfig::default())?;
    for (lo, hi) in [(-4, 6), (-2, 8)] {
        let w = DegreeWindow::new(lo, hi)?;
        let report = match_realizations(w, &enumerate_candidates(w), &table, &index)?;
        let mismatched = report
            .entries
            .iter()
            .filter(|e| e.matches_reference == Some(false))
            .count();
        writeln!(
            out,
            "window {w}: {}/{} realized, {mismatched} differ from reference",
            report.realized_count, report.candidate_count
        )
        .unwrap();
        if !report.is_fully_realized() {
            return Err(Failure {
                code: INVARIANT,
                message: format!(
                    "window {w} has {} unrealized candidates",
                    report.unrealized_count
                ),
                stdout: out,
            });
        }
    }
    writeln!(out, "{} records valid", table.len()).unwrap();
    Ok(out)
}

pub fn fib_check(max_prime: u64) -> Outcome {
    let mut cache = FibCache::new();
    let mut out = String::from("p\t(p/5)\tindex\tF_index mod p\n");
    for p in (2..=max_prime).filter(|&p| skein_core::ring::is_prime(p)) {
        let n = fib_divisibility_check(p)?;
        let residue = cache.get_mod(n as usize, p);
        writeln!(out, "{p}\t{}\t{n}\t{residue}", legendre5(p)?).unwrap();
    }
    Ok(out)
}
