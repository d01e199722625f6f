//! Table records and their three renderings.

use std::fmt::Write as _;

use qappell::{format_scalar, Poly, QContext, Scalar};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Item {
    Coeffs { n: usize, coeffs: Vec<String> },
    Value { n: usize, value: String },
}

impl Item {
    pub fn n(&self) -> usize {
        match self {
            Item::Coeffs { n, .. } | Item::Value { n, .. } => *n,
        }
    }
}

/// One table. Field order here is the key order in the JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub q: String,
    pub family: String,
    pub order: i64,
    pub items: Vec<Item>,
}

impl OutputRecord {
    pub fn from_values(ctx: &QContext, family: &str, order: i64, values: &[Scalar]) -> Self {
        let items = values
            .iter()
            .enumerate()
            .map(|(n, v)| Item::Value {
                n,
                value: format_scalar(v),
            })
            .collect();
        Self::with_items(ctx, family, order, items)
    }

    pub fn from_polys(ctx: &QContext, family: &str, order: i64, polys: &[Poly]) -> Self {
        let items = polys
            .iter()
            .enumerate()
            .map(|(n, p)| Item::Coeffs {
                n,
                coeffs: p.coeffs().iter().map(format_scalar).collect(),
            })
            .collect();
        Self::with_items(ctx, family, order, items)
    }

    fn with_items(ctx: &QContext, family: &str, order: i64, items: Vec<Item>) -> Self {
        Self {
            q: format_scalar(ctx.q()),
            family: family.to_string(),
            order,
            items,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Latex => self.to_latex(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("record serializes");
        text.push('\n');
        text
    }

    /// Long format: `n,value` for numbers, `n,k,coeff` for polynomials.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let write = |w: &mut csv::Writer<Vec<u8>>, row: &[&str]| {
            w.write_record(row).expect("in-memory csv write");
        };
        if self.is_numbers() {
            write(&mut writer, &["n", "value"]);
        } else {
            write(&mut writer, &["n", "k", "coeff"]);
        }
        for item in &self.items {
            match item {
                Item::Value { n, value } => write(&mut writer, &[&n.to_string(), value]),
                Item::Coeffs { n, coeffs } => {
                    for (k, c) in coeffs.iter().enumerate() {
                        write(&mut writer, &[&n.to_string(), &k.to_string(), c]);
                    }
                }
            }
        }
        String::from_utf8(writer.into_inner().expect("flush csv")).expect("csv is utf-8")
    }

    /// A single `tabular` with each value wrapped in `$...$`.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "% family = {}, order = {}, q = {}",
            self.family, self.order, self.q
        )
        .unwrap();
        if self.is_numbers() {
            out.push_str("\\begin{tabular}{rl}\n$n$ & value \\\\\n\\hline\n");
        } else {
            out.push_str("\\begin{tabular}{rrl}\n$n$ & $k$ & coefficient of $x^k$ \\\\\n\\hline\n");
        }
        for item in &self.items {
            match item {
                Item::Value { n, value } => writeln!(out, "{n} & ${value}$ \\\\").unwrap(),
                Item::Coeffs { n, coeffs } => {
                    for (k, c) in coeffs.iter().enumerate() {
                        writeln!(out, "{n} & {k} & ${c}$ \\\\").unwrap();
                    }
                }
            }
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    fn is_numbers(&self) -> bool {
        matches!(self.items.first(), Some(Item::Value { .. }))
    }
}
