//! Regeneration of the reference tables and comparison with the embedded
//! fixture values.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::Rat;
use crate::partitions::{enumerate_partitions, eps2};
use crate::stats::{average_e, density, partition_contribution, twisted_averages, value_set, Route};

/// The fixture file, embedded at build time.
pub const FIXTURE_CSV: &str = include_str!("../fixtures/tables.csv");

/// Identifiers of the reproducible tables.
pub const TABLE_IDS: [u8; 6] = [1, 2, 3, 4, 5, 6];

/// A table cell: an exact rational (integers included) or a sorted set of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableValue {
    Number(Rat),
    Set(Vec<i64>),
}

impl fmt::Display for TableValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableValue::Number(r) => write!(f, "{r}"),
            TableValue::Set(vs) => {
                let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
        }
    }
}

impl FromStr for TableValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut vs = inner
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Fixture(format!("bad set element in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            vs.sort_unstable();
            vs.dedup();
            Ok(TableValue::Set(vs))
        } else {
            Ok(TableValue::Number(t.parse()?))
        }
    }
}

impl Serialize for TableValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TableValue::Number(r) if r.is_integer() => {
                match num_traits::ToPrimitive::to_i64(r.numer()) {
                    Some(n) => serializer.serialize_i64(n),
                    None => serializer.collect_str(r),
                }
            }
            TableValue::Number(r) => serializer.collect_str(r),
            TableValue::Set(vs) => vs.serialize(serializer),
        }
    }
}

impl From<Rat> for TableValue {
    fn from(r: Rat) -> Self {
        TableValue::Number(r)
    }
}

impl From<i64> for TableValue {
    fn from(n: i64) -> Self {
        TableValue::Number(Rat::from(n))
    }
}

/// One cell of a table, addressed by row and column keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table_id: u8,
    pub row_key: String,
    pub col_key: String,
    pub value: TableValue,
}

impl TableRow {
    fn new(table_id: u8, row: impl ToString, col: impl ToString, value: impl Into<TableValue>) -> Self {
        TableRow {
            table_id,
            row_key: row.to_string(),
            col_key: col.to_string(),
            value: value.into(),
        }
    }
}

/// Parses fixture CSV text (`#` starts a comment line).
pub fn parse_fixtures(text: &str) -> Result<Vec<TableRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::Fixture(e.to_string()))?
        .clone();
    let expected = ["table_id", "row_key", "col_key", "value"];
    if header.iter().ne(expected) {
        return Err(Error::Fixture(format!("unexpected header {header:?}")));
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec.map_err(|e| Error::Fixture(e.to_string()))?;
            let table_id = rec[0]
                .trim()
                .parse()
                .map_err(|_| Error::Fixture(format!("bad table id {:?}", &rec[0])))?;
            Ok(TableRow {
                table_id,
                row_key: rec[1].trim().to_string(),
                col_key: rec[2].trim().to_string(),
                value: rec[3].parse()?,
            })
        })
        .collect()
}

/// The embedded reference rows of one table.
pub fn fixture_rows(id: u8) -> Result<Vec<TableRow>> {
    Ok(parse_fixtures(FIXTURE_CSV)?
        .into_iter()
        .filter(|r| r.table_id == id)
        .collect())
}

/// The default range of `k` covered by each table.
pub fn default_kmax(id: u8) -> Result<u64> {
    match id {
        1 => Ok(30),
        2 | 6 => Ok(20),
        3 => Ok(4),
        4 => Ok(16),
        5 => Ok(53),
        _ => Err(Error::InvalidArgument(format!("no table {id}"))),
    }
}

/// Recomputes a table for `k <= kmax` (Table 3 is always the breakdown of `e_4`).
pub fn compute_table(id: u8, kmax: Option<u64>) -> Result<Vec<TableRow>> {
    let kmax = kmax.unwrap_or(default_kmax(id)?);
    let ks: Vec<u64> = (1..=kmax).collect();
    let per_k = |f: &(dyn Fn(u64) -> Result<Vec<TableRow>> + Sync)| -> Result<Vec<TableRow>> {
        let chunks: Vec<Vec<TableRow>> = ks.par_iter().map(|&k| f(k)).collect::<Result<_>>()?;
        Ok(chunks.into_iter().flatten().collect())
    };
    match id {
        1 => per_k(&|k| Ok(vec![TableRow::new(1, k, "A", value_set(k)?.a as i64)])),
        2 => per_k(&|k| Ok(vec![TableRow::new(2, k, "e", average_e(k, Route::Divisor)?)])),
        3 => {
            let mut rows = Vec::new();
            let mut total = Rat::zero();
            for sig in enumerate_partitions(4, false) {
                let key = sig.to_string();
                let c = partition_contribution(&sig);
                total += &c;
                let cols: [(&str, TableValue); 7] = [
                    ("n_k1", i64::from(sig.top_multiplicity()).into()),
                    ("L", (sig.lcm as i64).into()),
                    ("G", (sig.gcd as i64).into()),
                    ("t", (sig.t as i64).into()),
                    ("s", (sig.s as i64).into()),
                    ("eps2", eps2(&sig).into()),
                    ("contribution", c.into()),
                ];
                for (col, v) in cols {
                    rows.push(TableRow::new(3, &key, col, v));
                }
            }
            rows.push(TableRow::new(3, "total", "e", total));
            Ok(rows)
        }
        4 => per_k(&|k| {
            let d = density(k)?;
            Ok([-2i64, -1, 1, 2]
                .into_iter()
                .map(|v| TableRow::new(4, k, v, d.get(v)))
                .collect())
        }),
        5 => per_k(&|k| {
            if k % 2 == 0 {
                return Ok(Vec::new());
            }
            let diff = value_set(k)?.diff;
            Ok(if diff.is_empty() {
                Vec::new()
            } else {
                vec![TableRow::new(5, k, "diff", TableValue::Set(diff))]
            })
        }),
        6 => per_k(&|k| {
            let r = twisted_averages(k)?;
            Ok(vec![TableRow::new(6, k, "f", r.f), TableRow::new(6, k, "g", r.g)])
        }),
        _ => Err(Error::InvalidArgument(format!("no table {id}"))),
    }
}

/// Result of comparing a recomputed table with its fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub table_id: u8,
    pub rows_checked: usize,
    /// `(row, column, expected, computed)`; a missing side is `None`.
    pub mismatches: Vec<(String, String, Option<String>, Option<String>)>,
}

impl TableComparison {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.rows_checked > 0
    }
}

/// Recomputes a table over its default range and compares it cell by cell
/// with the fixture, reporting missing and extra cells as mismatches.
pub fn compare_table(id: u8) -> Result<TableComparison> {
    let key = |r: &TableRow| (r.row_key.clone(), r.col_key.clone());
    let expected: BTreeMap<_, _> = fixture_rows(id)?.into_iter().map(|r| (key(&r), r.value)).collect();
    let computed: BTreeMap<_, _> = compute_table(id, None)?
        .into_iter()
        .map(|r| (key(&r), r.value))
        .collect();
    let mut mismatches = Vec::new();
    for k in expected.keys().chain(computed.keys().filter(|k| !expected.contains_key(*k))) {
        let (e, c) = (expected.get(k), computed.get(k));
        if e != c {
            mismatches.push((
                k.0.clone(),
                k.1.clone(),
                e.map(|v| v.to_string()),
                c.map(|v| v.to_string()),
            ));
        }
    }
    Ok(TableComparison {
        table_id: id,
        rows_checked: expected.len(),
        mismatches,
    })
}
