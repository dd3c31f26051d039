//! The knot table: named knots with braid index and `P(a,1) mod 2`.

use std::path::Path;
use std::sync::OnceLock;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::LPoly1;
use crate::ring::Ring;

const BUNDLED_CSV: &str = include_str!("../data/knots.csv");

/// `a⁻² + 1 + a²`, the image of `z² − (a⁻¹ − a)²` at `z = 1` mod 2.
pub fn mod2_annihilator() -> LPoly1 {
    LPoly1::from_exponents(Ring::Mod(2), &[-2, 0, 2])
}

/// Parses a polynomial in the canonical text form over F₂.
pub fn parse_poly_text(s: &str) -> Result<LPoly1> {
    LPoly1::parse(s, Ring::Mod(2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub braid_index: u32,
    /// `P(a, 1) mod 2`.
    pub poly: LPoly1,
    pub source: String,
}

impl KnotRecord {
    /// Checks parity, the divisibility of `P − 1` and the
    /// Franks–Williams–Morton bound `span ≤ 2b − 2`.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.poly.ring() != Ring::Mod(2) {
            return Err(format!("{}: polynomial is not over F2", self.name));
        }
        if !self.poly.all_even() {
            return Err(format!("{}: odd power of a in {}", self.name, self.poly));
        }
        let minus_one = &self.poly - &LPoly1::one(Ring::Mod(2));
        let divisible = minus_one
            .is_divisible_by(&mod2_annihilator())
            .map_err(|e| e.to_string())?;
        if !divisible {
            return Err(format!(
                "{}: P - 1 is not divisible by a^-2 + 1 + a^2",
                self.name
            ));
        }
        let span = self.poly.degree_stats().map_err(|e| e.to_string())?.span;
        let bound = 2 * u64::from(self.braid_index);
        if self.braid_index == 0 || span + 2 > bound {
            return Err(format!(
                "{}: span {span} exceeds 2*{}-2",
                self.name, self.braid_index
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize, Serialize)]
struct Row {
    name: String,
    braid_index: u32,
    poly: String,
    source: String,
}

/// Validated records keyed by name, in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnotTable {
    records: IndexMap<String, KnotRecord>,
}

impl KnotTable {
    /// The twelve prime knots needed for the span-10 windows.
    pub fn bundled() -> KnotTable {
        static BUNDLED: OnceLock<KnotTable> = OnceLock::new();
        BUNDLED
            .get_or_init(|| KnotTable::from_csv_str(BUNDLED_CSV).expect("bundled table is valid"))
            .clone()
    }

    pub fn bundled_csv() -> &'static str {
        BUNDLED_CSV
    }

    pub fn load(path: impl AsRef<Path>) -> Result<KnotTable> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_csv_str(&text)
    }

    /// Parses and validates CSV with header `name,braid_index,poly,source`.
    ///
    /// Row numbers in errors are line numbers of the file.
    pub fn from_csv_str(text: &str) -> Result<KnotTable> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let headers = reader
            .headers()
            .map_err(|e| Error::Syntax(e.to_string()))?
            .clone();
        if headers != vec!["name", "braid_index", "poly", "source"] {
            return Err(Error::Syntax(format!("unexpected header {headers:?}")));
        }
        let mut records = IndexMap::new();
        for result in reader.records() {
            let raw = result.map_err(|e| Error::Syntax(e.to_string()))?;
            let line = raw.position().map_or(0, |p| p.line() as usize);
            let row: Row = raw
                .deserialize(Some(&headers))
                .map_err(|e| Error::Syntax(format!("row {line}: {e}")))?;
            let poly = parse_poly_text(&row.poly)
                .map_err(|e| Error::Syntax(format!("row {line}: {e}")))?;
            let rec = KnotRecord {
                name: row.name,
                braid_index: row.braid_index,
                poly,
                source: row.source,
            };
            rec.validate()
                .map_err(|reason| Error::InvariantViolation { row: line, reason })?;
            if records.contains_key(&rec.name) {
                return Err(Error::InvariantViolation {
                    row: line,
                    reason: format!("duplicate name {}", rec.name),
                });
            }
            records.insert(rec.name.clone(), rec);
        }
        Ok(KnotTable { records })
    }

    pub fn to_csv_string(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        w.write_record(["name", "braid_index", "poly", "source"])
            .expect("in-memory write");
        for rec in self.records.values() {
            w.serialize(Row {
                name: rec.name.clone(),
                braid_index: rec.braid_index,
                poly: rec.poly.to_string(),
                source: rec.source.clone(),
            })
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.get(name)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &KnotRecord> {
        self.records.values()
    }
}
