//! Dimension tables: the structured output of `dims` and `series`.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Series,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Series => "series",
            Method::Oracle => "oracle",
        }
    }
}

/// One dimension. A row without a multidegree aggregates every multidegree
/// of its total degree and group element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Row {
    pub multidegree: Option<Vec<u32>>,
    pub total_degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_element: Option<Vec<u32>>,
    #[serde(serialize_with = "serialize_dim", deserialize_with = "deserialize_dim")]
    pub dim: BigUint,
    pub method: Method,
}

impl Row {
    fn sort_key(&self) -> (u32, &Option<Vec<u32>>, &Option<Vec<u32>>) {
        (self.total_degree, &self.multidegree, &self.group_element)
    }
}

fn serialize_dim<S: Serializer>(dim: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&dim.to_string())
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

fn deserialize_dim<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let n = serde_json::Number::deserialize(d)?;
    BigUint::from_str(&n.to_string())
        .map_err(|_| serde::de::Error::custom(format!("dimension {n} is not a nonnegative integer")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Metadata {
    pub spec_digest: String,
    pub truncation: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub tool_version: String,
}

impl Metadata {
    pub fn new(spec_digest: String, truncation: u32, prime: Option<u64>) -> Self {
        Metadata { spec_digest, truncation, prime, tool_version: env!("CARGO_PKG_VERSION").to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimensionTable {
    pub metadata: Metadata,
    pub rows: Vec<Row>,
}

impl DimensionTable {
    /// Rows end up sorted by total degree, then multidegree, aggregate rows
    /// first.
    pub fn new(metadata: Metadata, mut rows: Vec<Row>) -> Self {
        rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        DimensionTable { metadata, rows }
    }

    pub fn is_sorted(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let table: DimensionTable =
            serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid dimension table: {e}")))?;
        if !table.is_sorted() {
            return Err(CliError::Usage("dimension table rows are not sorted".into()));
        }
        Ok(table)
    }

    /// Flat projection, one line per row. Tuples are rendered as
    /// space-separated residues and missing fields as empty cells.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["totalDegree", "multidegree", "groupElement", "dim", "method"]).expect("in-memory write");
        let join = |v: &Option<Vec<u32>>| {
            v.as_ref().map(|v| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).unwrap_or_default()
        };
        for row in &self.rows {
            w.write_record([
                row.total_degree.to_string(),
                join(&row.multidegree),
                join(&row.group_element),
                row.dim.to_string(),
                row.method.as_str().to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }
}
