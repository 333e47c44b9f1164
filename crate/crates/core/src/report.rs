//! Property ledgers and run manifests.
//!
//! A property is either asserted (a failure is a bug or a broken input) or
//! merely reported (an inequality that is only promised asymptotically).
//! Reported properties that fail are recorded as `REPORTED`, never `FAILED`.

use crate::rational::{self, Q};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    CertifiedExact,
    Reported,
    Failed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Le,
    Lt,
    Ge,
    Gt,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Eq => "==",
            Rel::Le => "<=",
            Rel::Lt => "<",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }

    pub fn holds<T: PartialOrd>(self, a: &T, b: &T) -> bool {
        match self {
            Rel::Eq => a == b,
            Rel::Le => a <= b,
            Rel::Lt => a < b,
            Rel::Ge => a >= b,
            Rel::Gt => a > b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Property {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Property {
    /// A yes/no check that must hold.
    pub fn check(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            status: if holds {
                Status::CertifiedExact
            } else {
                Status::Failed
            },
            lhs: None,
            relation: None,
            rhs: None,
            note: None,
        }
    }

    /// `lhs rel rhs` in exact arithmetic. When `asserted` is false, a
    /// violation is only reported.
    pub fn compare(name: impl Into<String>, lhs: &Q, rel: Rel, rhs: &Q, asserted: bool) -> Self {
        let holds = rel.holds(lhs, rhs);
        Self {
            name: name.into(),
            status: match (holds, asserted) {
                (true, _) => Status::CertifiedExact,
                (false, true) => Status::Failed,
                (false, false) => Status::Reported,
            },
            lhs: Some(rational::fmt(lhs)),
            relation: Some(rel.symbol().into()),
            rhs: Some(rational::fmt(rhs)),
            note: None,
        }
    }

    /// Integer comparison (degrees, sizes).
    pub fn compare_int(name: impl Into<String>, lhs: i64, rel: Rel, rhs: i64, asserted: bool) -> Self {
        Self::compare(name, &rational::int(lhs), rel, &rational::int(rhs), asserted)
    }

    /// A comparison decided elsewhere whose sides are not plain rationals.
    pub fn decided(
        name: impl Into<String>,
        holds: bool,
        asserted: bool,
        lhs: String,
        rel: Rel,
        rhs: String,
    ) -> Self {
        Self {
            name: name.into(),
            status: match (holds, asserted) {
                (true, _) => Status::CertifiedExact,
                (false, true) => Status::Failed,
                (false, false) => Status::Reported,
            },
            lhs: Some(lhs),
            relation: Some(rel.symbol().into()),
            rhs: Some(rhs),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn ok(&self) -> bool {
        self.status == Status::CertifiedExact
    }
}

/// Ordered list of properties with unique names.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ledger(pub Vec<Property>);

impl Ledger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, p: Property) {
        debug_assert!(
            self.0.iter().all(|q| q.name != p.name),
            "duplicate property {}",
            p.name
        );
        self.0.push(p);
    }

    pub fn extend(&mut self, other: Ledger) {
        for p in other.0 {
            self.push(p);
        }
    }

    pub fn get(&self, name: &str) -> Option<&Property> {
        self.0.iter().find(|p| p.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Property> {
        self.0.iter()
    }

    pub fn all_certified(&self) -> bool {
        self.0.iter().all(Property::ok)
    }

    pub fn worst(&self) -> Status {
        self.0
            .iter()
            .map(|p| p.status)
            .max()
            .unwrap_or(Status::CertifiedExact)
    }

    /// 0 when everything is certified, 2 with reported gaps, 1 on failure.
    pub fn exit_code(&self) -> i32 {
        match self.worst() {
            Status::CertifiedExact => 0,
            Status::Reported => 2,
            Status::Failed => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of_file(path: &Path) -> std::io::Result<Self> {
        let bytes = std::fs::read(path)?;
        Ok(Self {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub params: BTreeMap<String, String>,
    pub properties: Ledger,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub outputs: BTreeMap<String, serde_json::Value>,
    pub wall_time_seconds: f64,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: Vec::new(),
            params: BTreeMap::new(),
            properties: Ledger::new(),
            outputs: BTreeMap::new(),
            wall_time_seconds: 0.0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) {
        self.outputs.insert(
            key.to_string(),
            serde_json::to_value(value).expect("outputs serialize"),
        );
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    /// Writes via a temporary file and rename.
    pub fn write_atomic(&self, path: &Path) -> std::io::Result<()> {
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, self.to_json())?;
        std::fs::rename(tmp, path)
    }
}
