//! Tables of `A_{d+1,r}(n)` with rows `d` and columns `n = 1..=n_max`, and
//! their CSV, JSON and Markdown renderings.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::args::{Format, MethodArg};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRequest {
    pub r: usize,
    pub d_values: Vec<usize>,
    pub n_max: usize,
    pub method: MethodArg,
    pub format: Format,
}

impl TableRequest {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.r == 0 {
            return Err(CliError::Usage("--r must be at least 1".into()));
        }
        if self.n_max == 0 {
            return Err(CliError::Usage("--n-max must be at least 1".into()));
        }
        if self.d_values.is_empty() || self.d_values.contains(&0) {
            return Err(CliError::Usage(
                "--d-list needs at least one value, each at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub d: usize,
    /// Values for `n = 1..=n_max`.
    pub values: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub r: usize,
    pub method: String,
    pub rows: Vec<TableRow>,
}

/// JSON shape; integers travel as decimal strings because they outgrow 64
/// bits.
#[derive(Debug, Serialize, Deserialize)]
struct JsonTable {
    r: usize,
    rows: Vec<JsonRow>,
    method: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRow {
    d: usize,
    values: Vec<String>,
}

impl Table {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        Ok(match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json()?,
            Format::Markdown => self.to_markdown(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,n,value,method\n");
        for row in &self.rows {
            for (i, value) in row.values.iter().enumerate() {
                let _ = writeln!(out, "{},{},{},{}", row.d, i + 1, value, self.method);
            }
        }
        out
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let json = JsonTable {
            r: self.r,
            rows: self
                .rows
                .iter()
                .map(|row| JsonRow {
                    d: row.d,
                    values: row.values.iter().map(BigUint::to_string).collect(),
                })
                .collect(),
            method: self.method.clone(),
        };
        let mut text = serde_json::to_string_pretty(&json)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let json: JsonTable = serde_json::from_str(text)?;
        let rows = json
            .rows
            .into_iter()
            .map(|row| {
                let values = row
                    .values
                    .iter()
                    .map(|v| {
                        v.parse::<BigUint>()
                            .map_err(|_| CliError::Usage(format!("bad integer {v:?}")))
                    })
                    .collect::<Result<_, _>>()?;
                Ok(TableRow { d: row.d, values })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(Table {
            r: json.r,
            method: json.method,
            rows,
        })
    }

    /// Layout of the published tables: one row per `d`, one column per `n`.
    pub fn to_markdown(&self) -> String {
        let width = self.rows.iter().map(|r| r.values.len()).max().unwrap_or(0);
        let mut out = format!("A_{{d+1,{}}}(n), method {}\n\n", self.r, self.method);
        out.push_str("| d\\n |");
        for n in 1..=width {
            let _ = write!(out, " {n} |");
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(width));
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "| {} |", row.d);
            for value in &row.values {
                let _ = write!(out, " {value} |");
            }
            out.push('\n');
        }
        out
    }
}
