//! JSON grading spec files.
//!
//! ```json
//! {"group": {"moduli": [2, 2], "negatives": [[0, 1], [1, 0]]},
//!  "generators": [{"label": [0, 0], "count": 1}, {"label": [1, 1], "count": 2}],
//!  "maxDegree": 12}
//! ```
//!
//! Without a group block every label is `"even"` or `"odd"`.

use std::fs;
use std::path::Path;

use colorwitt::series::DEFAULT_MAX_DEGREE;
use colorwitt::{FiniteAbelianGroup, GeneratorClass, GradingSpec, GroupElement, Parity};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupBlock>,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default = "default_max_degree")]
    pub max_degree: u32,
}

fn default_max_degree() -> u32 {
    DEFAULT_MAX_DEGREE
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub moduli: Vec<u32>,
    #[serde(default)]
    pub negatives: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub label: Label,
    pub count: u32,
}

/// Either a parity name or a group element. Parsed through `Value` because
/// untagged enums do not mix with arbitrary-precision numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "serde_json::Value", into = "serde_json::Value")]
pub enum Label {
    Parity(Parity),
    Element(Vec<u32>),
}

impl TryFrom<serde_json::Value> for Label {
    type Error = String;

    fn try_from(value: serde_json::Value) -> Result<Self, String> {
        match value {
            serde_json::Value::String(s) => match s.as_str() {
                "even" => Ok(Label::Parity(Parity::Even)),
                "odd" => Ok(Label::Parity(Parity::Odd)),
                other => Err(format!("unknown parity label {other:?}, expected \"even\" or \"odd\"")),
            },
            serde_json::Value::Array(items) => items
                .iter()
                .map(|v| v.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| format!("bad residue {v}")))
                .collect::<Result<Vec<_>, _>>()
                .map(Label::Element),
            other => Err(format!("label must be \"even\", \"odd\" or an array of residues, got {other}")),
        }
    }
}

impl From<Label> for serde_json::Value {
    fn from(label: Label) -> Self {
        match label {
            Label::Parity(Parity::Even) => "even".into(),
            Label::Parity(Parity::Odd) => "odd".into(),
            Label::Element(residues) => residues.into(),
        }
    }
}

impl SpecFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid spec file: {e}")))
    }

    /// Validated grading spec, optionally with a different truncation.
    pub fn grading_spec(&self, max_degree: Option<u32>) -> Result<GradingSpec, CliError> {
        let max_degree = max_degree.unwrap_or(self.max_degree);
        let spec = match &self.group {
            None => {
                let classes = self
                    .generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| match g.label {
                        Label::Parity(Parity::Even) => Ok(GeneratorClass::even(g.count)),
                        Label::Parity(Parity::Odd) => Ok(GeneratorClass::odd(g.count)),
                        Label::Element(_) => {
                            Err(CliError::Usage(format!("generator {i}: group element label but no group block")))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                GradingSpec::new(classes, max_degree)?
            }
            Some(block) => {
                let group = FiniteAbelianGroup::new(
                    block.moduli.clone(),
                    block.negatives.iter().cloned().map(GroupElement::new),
                )?;
                let classes = self
                    .generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| match &g.label {
                        Label::Element(residues) => {
                            let label = GroupElement::new(residues.clone());
                            group.check(&label)?;
                            Ok(GeneratorClass { multiplicity: g.count, parity: group.parity(&label), label: Some(label) })
                        }
                        Label::Parity(_) => Err(CliError::Usage(format!(
                            "generator {i}: a group is given, so the label must be a group element"
                        ))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                GradingSpec::with_group(group, classes, max_degree)?
            }
        };
        Ok(spec)
    }

    /// Hex SHA-256 of the canonical JSON rendering.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("spec serializes");
        hex::encode(Sha256::digest(&canonical))
    }
}
