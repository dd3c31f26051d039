//! Classification of `P(a,1) mod 2` in a degree window.
//!
//! Candidates are the F₂-polynomials supported on the even exponents of the
//! window with `P − 1` divisible by `a⁻² + 1 + a²`. Each candidate is
//! matched against connected sums of table knots and their mirrors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::{Factor, KnotExpr};
use crate::poly::LPoly1;
use crate::ring::Ring;
use crate::table::{mod2_annihilator, KnotTable};

const F2: Ring = Ring::Mod(2);

/// Even degree range `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo % 2 != 0 || hi % 2 != 0 {
            return Err(Error::InvalidWindow(format!("[{lo},{hi}] has an odd end")));
        }
        if hi < lo {
            return Err(Error::InvalidWindow(format!("[{lo},{hi}] is empty")));
        }
        if hi - lo > 40 {
            return Err(Error::InvalidWindow(format!(
                "[{lo},{hi}] is too wide to enumerate"
            )));
        }
        Ok(DegreeWindow { lo, hi })
    }

    pub fn span(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn slots(&self) -> usize {
        (self.span() / 2 + 1) as usize
    }

    pub fn contains(&self, p: &LPoly1) -> bool {
        p.exponents().all(|e| e >= self.lo && e <= self.hi)
    }
}

impl fmt::Display for DegreeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl FromStr for DegreeWindow {
    type Err = Error;

    /// `LO..HI`, e.g. `-4..6`.
    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| Error::InvalidWindow(format!("expected LO..HI, got `{s}`")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidWindow(format!("bad bound `{x}`")))
        };
        DegreeWindow::new(parse(lo)?, parse(hi)?)
    }
}

/// Candidate polynomials of a window, ordered by coefficient bitmask with
/// bit `i` standing for `a^{lo + 2i}`.
pub fn enumerate_candidates(w: DegreeWindow) -> Vec<LPoly1> {
    let d = mod2_annihilator();
    let one = LPoly1::one(F2);
    (0u64..1 << w.slots())
        .map(|mask| {
            let exps: Vec<i64> = (0..w.slots())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| w.lo + 2 * i as i64)
                .collect();
            LPoly1::from_exponents(F2, &exps)
        })
        .filter(|p| {
            (p - &one)
                .is_divisible_by(&d)
                .expect("nonzero divisor over a field")
        })
        .collect()
}

/// Bounds for the realization search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Maximal number of summands in a realizing connected sum.
    pub max_factors: usize,
    /// Extra torus summands `T(2,n)` offered alongside the table knots.
    pub torus_factors: Vec<i64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_factors: 3,
            torus_factors: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
struct Realization {
    expr: KnotExpr,
    bound: u32,
    name: String,
}

impl Realization {
    fn rank(&self) -> (usize, u32, &str) {
        (self.expr.factors().len(), self.bound, &self.name)
    }
}

/// Polynomial → preferred realizing expression, over all connected sums of
/// at most `max_factors` summands. Preference: fewer summands, smaller
/// braid-index bound, then name.
pub struct RealizationIndex {
    best: HashMap<LPoly1, Realization>,
}

impl RealizationIndex {
    pub fn build(table: &KnotTable, config: &SearchConfig) -> Result<Self> {
        let mut pool: Vec<(Factor, LPoly1)> = Vec::new();
        for rec in table.records() {
            let f = Factor::named(rec.name.clone());
            for g in [f.clone(), f.mirror()] {
                let v = KnotExpr::from_factors(vec![g.clone()]).eval_mod(2, 1, table)?;
                pool.push((g, v));
            }
        }
        for &n in &config.torus_factors {
            let f = Factor::torus(n)?;
            let v = KnotExpr::from_factors(vec![f.clone()]).eval_mod(2, 1, table)?;
            pool.push((f, v));
        }
        let mut index = RealizationIndex {
            best: HashMap::new(),
        };
        let mut chosen = Vec::new();
        index.extend(
            table,
            &pool,
            0,
            &mut chosen,
            LPoly1::one(F2),
            config.max_factors,
        )?;
        Ok(index)
    }

    fn extend(
        &mut self,
        table: &KnotTable,
        pool: &[(Factor, LPoly1)],
        start: usize,
        chosen: &mut Vec<Factor>,
        value: LPoly1,
        budget: usize,
    ) -> Result<()> {
        let expr = KnotExpr::from_factors(chosen.clone());
        let r = Realization {
            bound: expr.braid_index_bound(table)?,
            name: expr.to_string(),
            expr,
        };
        match self.best.get(&value) {
            Some(old) if old.rank() <= r.rank() => {}
            _ => {
                self.best.insert(value.clone(), r);
            }
        }
        if budget == 0 {
            return Ok(());
        }
        for i in start..pool.len() {
            chosen.push(pool[i].0.clone());
            let next = &value * &pool[i].1;
            self.extend(table, pool, i, chosen, next, budget - 1)?;
            chosen.pop();
        }
        Ok(())
    }

    pub fn lookup(&self, p: &LPoly1) -> Option<(&KnotExpr, u32)> {
        self.best.get(p).map(|r| (&r.expr, r.bound))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    #[serde(serialize_with = "ser_display")]
    pub polynomial: LPoly1,
    #[serde(serialize_with = "ser_opt_display")]
    pub realization: Option<KnotExpr>,
    pub braid_index_bound: Option<u32>,
    /// The representative listed in the reference table, when there is one.
    pub reference: Option<String>,
    pub matches_reference: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub window: DegreeWindow,
    pub candidate_count: usize,
    pub realized_count: usize,
    pub unrealized_count: usize,
    pub max_braid_index_bound: Option<u32>,
    pub entries: Vec<ReportEntry>,
}

fn ser_display<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_opt_display<T: fmt::Display, S: serde::Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

impl ClassificationReport {
    pub fn is_fully_realized(&self) -> bool {
        self.unrealized_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "window {}: {} candidates, {} realized, {} unrealized",
            self.window, self.candidate_count, self.realized_count, self.unrealized_count
        )?;
        let width = self
            .entries
            .iter()
            .map(|e| e.polynomial.to_string().len())
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            let poly = e.polynomial.to_string();
            let real = e
                .realization
                .as_ref()
                .map_or("-".to_string(), |x| x.to_string());
            let bound = e
                .braid_index_bound
                .map_or("-".to_string(), |b| b.to_string());
            write!(f, "  {poly:<width$}  {real:<16} b<={bound}")?;
            if let (Some(r), Some(ok)) = (&e.reference, e.matches_reference) {
                write!(f, "  ref {r}{}", if ok { "" } else { " (differs)" })?;
            }
            writeln!(f)?;
        }
        if let Some(b) = self.max_braid_index_bound {
            writeln!(f, "max braid index bound: {b}")?;
        }
        Ok(())
    }
}

/// Reference realizations for the windows `[-4,6]` and `[-2,8]`, as
/// `(expression, polynomial)`.
pub const REFERENCE_REALIZATIONS: &[(i64, &[(&str, &str)])] = &[
    (
        -4,
        &[
            ("O", "1"),
            ("3_1", "a^2 + a^4"),
            ("3_1*", "a^-4 + a^-2"),
            ("4_1", "a^-2 + a^2"),
            ("5_1", "a^6"),
            ("6_1", "a^-2 + 1 + a^4"),
            ("6_1*", "a^-4 + 1 + a^2"),
            ("8_3", "a^-4 + a^-2 + 1 + a^2 + a^4"),
            ("10_3", "a^-4 + a^-2 + a^2 + a^4 + a^6"),
            ("11a103", "a^-4 + a^2 + a^6"),
            ("11n101", "a^-2 + a^4 + a^6"),
            ("3_1#4_1", "1 + a^2 + a^4 + a^6"),
            ("3_1#6_1*", "a^-2 + 1 + a^2 + a^6"),
            ("3_1#11n101*", "a^-4 + 1 + a^4 + a^6"),
            ("4_1#4_1", "a^-4 + a^4"),
            ("4_1#6_1", "a^-4 + a^-2 + 1 + a^6"),
        ],
    ),
    (
        -2,
        &[
            ("O", "1"),
            ("3_1", "a^2 + a^4"),
            ("4_1", "a^-2 + a^2"),
            ("5_1", "a^6"),
            ("6_1", "a^-2 + 1 + a^4"),
            ("7_4", "a^2 + a^6 + a^8"),
            ("10_1", "a^-2 + 1 + a^2 + a^4 + a^8"),
            ("11a121", "a^-2 + a^2 + a^4 + a^6 + a^8"),
            ("11n101", "a^-2 + a^4 + a^6"),
            ("11n139", "1 + a^2 + a^8"),
            ("3_1#3_1", "a^4 + a^8"),
            ("3_1#4_1", "1 + a^2 + a^4 + a^6"),
            ("3_1#6_1", "1 + a^4 + a^6 + a^8"),
            ("3_1#6_1*", "a^-2 + 1 + a^2 + a^6"),
            ("3_1#8_3", "a^-2 + a^8"),
            ("3_1#4_1#4_1", "a^-2 + 1 + a^6 + a^8"),
        ],
    ),
];

/// Reference entries for a window as parsed `(expression, polynomial)` pairs.
pub fn reference_realizations(w: DegreeWindow) -> Option<Vec<(KnotExpr, LPoly1)>> {
    if w.span() != 10 {
        return None;
    }
    REFERENCE_REALIZATIONS
        .iter()
        .find(|(lo, _)| *lo == w.lo)
        .map(|(_, rows)| {
            rows.iter()
                .map(|(e, p)| {
                    (
                        e.parse().expect("reference expression parses"),
                        LPoly1::parse(p, F2).expect("reference polynomial parses"),
                    )
                })
                .collect()
        })
}

/// Matches candidates against the realization index; every match is
/// re-evaluated before it is reported.
pub fn match_realizations(
    window: DegreeWindow,
    candidates: &[LPoly1],
    table: &KnotTable,
    index: &RealizationIndex,
) -> Result<ClassificationReport> {
    let reference = reference_realizations(window);
    let mut entries = Vec::with_capacity(candidates.len());
    for cand in candidates {
        let found = index.lookup(cand);
        if let Some((expr, _)) = found {
            let value = expr.eval_mod(2, 1, table)?;
            assert_eq!(
                &value, cand,
                "realization {expr} does not evaluate to {cand}"
            );
        }
        let reference_expr = reference
            .as_ref()
            .and_then(|rows| rows.iter().find(|(_, p)| p == cand))
            .map(|(e, _)| e.clone());
        entries.push(ReportEntry {
            polynomial: cand.clone(),
            realization: found.map(|(e, _)| e.clone()),
            braid_index_bound: found.map(|(_, b)| b),
            matches_reference: reference_expr
                .as_ref()
                .map(|r| found.is_some_and(|(e, _)| e == r)),
            reference: reference_expr.map(|e| e.to_string()),
        });
    }
    let realized_count = entries.iter().filter(|e| e.realization.is_some()).count();
    Ok(ClassificationReport {
        window,
        candidate_count: candidates.len(),
        realized_count,
        unrealized_count: candidates.len() - realized_count,
        max_braid_index_bound: entries.iter().filter_map(|e| e.braid_index_bound).max(),
        entries,
    })
}

/// Enumerates and matches a window in one go.
pub fn classify_window(
    window: DegreeWindow,
    table: &KnotTable,
    config: &SearchConfig,
) -> Result<ClassificationReport> {
    let index = RealizationIndex::build(table, config)?;
    match_realizations(window, &enumerate_candidates(window), table, &index)
}

/// Same pipeline on arbitrary windows; counts are exploratory.
pub fn question1_probe(
    window: DegreeWindow,
    table: &KnotTable,
    config: &SearchConfig,
) -> Result<ClassificationReport> {
    classify_window(window, table, config)
}

#[derive(Debug, Clone)]
pub struct CorollaryOutcome {
    /// Braid-index bound covering every polynomial of span ≤ 10.
    pub t: u32,
    /// Largest bound among the two reference windows.
    pub reference_max: u32,
    /// Realizations of the window `[0,10]`.
    pub shifted: ClassificationReport,
}

/// Derives the braid-index bound for all `P(a,1) mod 2` of span ≤ 10.
///
/// Both reports must be fully realized. The window `[0,10]` must equal
/// `a⁶ · mirror([-4,6])`; each of its candidates is realized either
/// directly or as `K* # T(2,7)` for the `[-4,6]` realization `K`.
pub fn corollary_check(
    low: &ClassificationReport,
    mid: &ClassificationReport,
    table: &KnotTable,
    index: &RealizationIndex,
) -> Result<CorollaryOutcome> {
    assert_eq!(
        (low.window.lo, low.window.hi),
        (-4, 6),
        "first report must cover [-4,6]"
    );
    assert_eq!(
        (mid.window.lo, mid.window.hi),
        (-2, 8),
        "second report must cover [-2,8]"
    );
    let mut reference_max = 0;
    for report in [low, mid] {
        for e in &report.entries {
            match e.braid_index_bound {
                Some(b) => reference_max = reference_max.max(b),
                None => return Err(Error::UnrealizedCandidate(e.polynomial.to_string())),
            }
        }
    }
    let t = reference_max + 1;

    let top = DegreeWindow::new(0, 10)?;
    let top_cands = enumerate_candidates(top);
    let mut from_low: Vec<LPoly1> = low
        .entries
        .iter()
        .map(|e| e.polynomial.mirror().shift(6))
        .collect();
    let mut sorted_top = top_cands.clone();
    sort_polys(&mut from_low);
    sort_polys(&mut sorted_top);
    assert_eq!(
        from_low, sorted_top,
        "[0,10] is not the shifted mirror of [-4,6]"
    );

    let direct = match_realizations(top, &top_cands, table, index)?;
    let shift = KnotExpr::torus(7)?;
    let mut entries = Vec::with_capacity(direct.entries.len());
    for e in direct.entries {
        let source = low
            .entries
            .iter()
            .find(|l| l.polynomial.mirror().shift(6) == e.polynomial)
            .expect("checked above");
        let base = source.realization.as_ref().expect("realized above");
        let shifted = base.mirror().connect(&shift);
        let value = shifted.eval_mod(2, 1, table)?;
        assert_eq!(
            value, e.polynomial,
            "{shifted} does not evaluate to {}",
            e.polynomial
        );
        let shifted_bound = shifted.braid_index_bound(table)?;
        let entry = match (e.realization, e.braid_index_bound) {
            (Some(r), Some(b)) if b <= shifted_bound => ReportEntry {
                realization: Some(r),
                braid_index_bound: Some(b),
                ..e
            },
            _ => ReportEntry {
                realization: Some(shifted),
                braid_index_bound: Some(shifted_bound),
                ..e
            },
        };
        assert!(entry.braid_index_bound.unwrap() <= t);
        entries.push(entry);
    }
    let shifted = ClassificationReport {
        window: top,
        candidate_count: entries.len(),
        realized_count: entries.len(),
        unrealized_count: 0,
        max_braid_index_bound: entries.iter().filter_map(|e| e.braid_index_bound).max(),
        entries,
    };
    Ok(CorollaryOutcome {
        t,
        reference_max,
        shifted,
    })
}

fn sort_polys(v: &mut [LPoly1]) {
    v.sort_by_key(|p| p.exponents().collect::<Vec<_>>());
}
