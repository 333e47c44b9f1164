//! JSON function files.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"n": 2, "domain": "all", "table": {"00": 1, "10": -1, "01": -1, "11": -1}}
//! {"kind": "or", "params": {"n": 2}}
//! ```
//!
//! Table files may omit points to describe an explicit partial domain, or
//! give `{"max_weight": k}` as the domain.

use super::cube::{self, Point};
use super::dnf::{fstar, Dnf, Literal};
use super::function::{BooleanFunction, Domain};
use super::gates::{block_compose, make_basic, surjectivity, Gate};
use super::FnError;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DomainSpec {
    Named(String),
    MaxWeight { max_weight: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainSpec>,
    pub table: BTreeMap<String, i8>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructuredFile {
    pub kind: String,
    #[serde(default)]
    pub params: Value,
}

fn param_usize(params: &Value, key: &str) -> Result<usize, FnError> {
    params
        .get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| FnError::Malformed(format!("missing integer parameter `{key}`")))
}

fn parse_dnf(params: &Value) -> Result<Dnf, FnError> {
    let n = param_usize(params, "n")?;
    let clauses: Vec<Vec<Literal>> = match params.get("clauses") {
        Some(c) => serde_json::from_value::<Vec<Vec<i64>>>(c.clone())
            .map(|cs| {
                // Signed 1-based variable indices, DIMACS style.
                cs.into_iter()
                    .map(|c| {
                        c.into_iter()
                            .map(|l| Literal {
                                var: l.unsigned_abs() as usize - 1,
                                negated: l < 0,
                            })
                            .collect()
                    })
                    .collect()
            })
            .map_err(|e| FnError::Malformed(format!("clauses: {e}")))?,
        None => return Err(FnError::Malformed("missing `clauses`".into())),
    };
    if clauses.iter().flatten().any(|l| l.var >= n) {
        return Err(FnError::Malformed("clause literal out of range".into()));
    }
    Dnf::new(n, clauses)
}

/// Builds a function from a structured description.
pub fn from_structured(spec: &StructuredFile) -> Result<BooleanFunction, FnError> {
    let p = &spec.params;
    let gate = |g| make_basic(g, param_usize(p, "n")?);
    match spec.kind.to_ascii_lowercase().as_str() {
        "or" => gate(Gate::Or),
        "and" => gate(Gate::And),
        "maj" => gate(Gate::Maj),
        "parity" => gate(Gate::Parity),
        "const" => {
            let v = p.get("value").and_then(Value::as_i64).unwrap_or(1);
            make_basic(Gate::Const(v as i8), param_usize(p, "n")?)
        }
        "compose" => {
            let parse = |key: &str| -> Result<BooleanFunction, FnError> {
                let inner = p
                    .get(key)
                    .ok_or_else(|| FnError::Malformed(format!("missing `{key}`")))?;
                from_value(inner.clone())
            };
            block_compose(&parse("outer")?, &parse("inner")?)
        }
        "surj" => surjectivity(param_usize(p, "N")?, param_usize(p, "R")?),
        "dnf" => parse_dnf(p)?.to_function(),
        "fstar" => fstar(&parse_dnf(p)?),
        other => Err(FnError::Malformed(format!("unknown function kind `{other}`"))),
    }
}

/// Builds a function from a table file.
pub fn from_table_file(file: &TableFile) -> Result<BooleanFunction, FnError> {
    let mut table = BTreeMap::new();
    for (bits, &v) in &file.table {
        let (x, len) = cube::from_bitstring(bits)?;
        if len != file.n {
            return Err(FnError::Malformed(format!(
                "bitstring `{bits}` has length {len}, expected {}",
                file.n
            )));
        }
        table.insert(x, v);
    }
    let f = BooleanFunction::from_table(file.n, &table)?;
    match &file.domain {
        None => Ok(f),
        Some(DomainSpec::Named(s)) if s == "all" => {
            if f.is_total() {
                Ok(f)
            } else {
                Err(FnError::Malformed("domain \"all\" but table is partial".into()))
            }
        }
        Some(DomainSpec::Named(s)) => Err(FnError::Malformed(format!("unknown domain `{s}`"))),
        Some(DomainSpec::MaxWeight { max_weight }) => {
            let expected = cube::points_up_to_weight(file.n, *max_weight);
            if expected != f.points() {
                return Err(FnError::Malformed(format!(
                    "table does not cover exactly the weight <= {max_weight} points"
                )));
            }
            let tagged: BTreeMap<Point, i8> = f.iter().collect();
            BooleanFunction::from_fn(file.n, Domain::MaxWeight(*max_weight), f.structure(), |x| {
                tagged[&x]
            })
        }
    }
}

pub fn from_value(v: Value) -> Result<BooleanFunction, FnError> {
    if v.get("kind").is_some() {
        let spec: StructuredFile =
            serde_json::from_value(v).map_err(|e| FnError::Malformed(e.to_string()))?;
        from_structured(&spec)
    } else {
        let file: TableFile =
            serde_json::from_value(v).map_err(|e| FnError::Malformed(e.to_string()))?;
        from_table_file(&file)
    }
}

pub fn from_json(text: &str) -> Result<BooleanFunction, FnError> {
    let v: Value = serde_json::from_str(text).map_err(|e| FnError::Malformed(e.to_string()))?;
    from_value(v)
}

/// The DNF inside a `{"kind": "dnf"}` or `{"kind": "fstar"}` file.
pub fn dnf_from_json(text: &str) -> Result<Dnf, FnError> {
    let spec: StructuredFile =
        serde_json::from_str(text).map_err(|e| FnError::Malformed(e.to_string()))?;
    match spec.kind.to_ascii_lowercase().as_str() {
        "dnf" | "fstar" => parse_dnf(&spec.params),
        other => Err(FnError::Malformed(format!("expected a dnf file, found kind `{other}`"))),
    }
}

/// Table-form export.
pub fn to_table_file(f: &BooleanFunction) -> TableFile {
    let domain = match f.domain() {
        Domain::All => Some(DomainSpec::Named("all".into())),
        Domain::MaxWeight(k) => Some(DomainSpec::MaxWeight { max_weight: *k }),
        Domain::Explicit => None,
    };
    TableFile {
        n: f.arity(),
        domain,
        table: f
            .iter()
            .map(|(x, v)| (cube::to_bitstring(x, f.arity()), v))
            .collect(),
    }
}

pub fn to_json(f: &BooleanFunction) -> String {
    serde_json::to_string_pretty(&to_table_file(f)).expect("table serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_round_trip() {
        let f = make_basic(Gate::Or, 3).unwrap();
        let back = from_json(&to_json(&f)).unwrap();
        assert_eq!(back.iter().collect::<Vec<_>>(), f.iter().collect::<Vec<_>>());
        let p = f.restrict_max_weight(1);
        let back = from_json(&to_json(&p)).unwrap();
        assert_eq!(back.domain(), &Domain::MaxWeight(1));
        assert_eq!(back.len(), 4);
    }

    #[test]
    fn bit_convention() {
        let f = from_json(r#"{"n":1,"domain":"all","table":{"0":1,"1":-1}}"#).unwrap();
        assert_eq!(f.eval(1), -1);
        assert!(from_json(r#"{"n":2,"domain":"all","table":{"0":1}}"#).is_err());
        assert!(from_json(r#"{"n":1,"table":{"0":2}}"#).is_err());
    }

    #[test]
    fn structured_kinds() {
        let f = from_json(r#"{"kind":"compose","params":{"outer":{"kind":"and","params":{"n":2}},"inner":{"kind":"or","params":{"n":2}}}}"#).unwrap();
        assert_eq!(f.arity(), 4);
        let d = from_json(r#"{"kind":"dnf","params":{"n":3,"clauses":[[1,-2],[3]]}}"#).unwrap();
        assert_eq!(d.eval(0b001), -1);
        assert_eq!(d.eval(0b011), 1);
        let s = from_json(r#"{"kind":"fstar","params":{"n":1,"clauses":[[1]]}}"#).unwrap();
        assert_eq!(s.arity(), 2);
        assert!(from_json(r#"{"kind":"nope"}"#).is_err());
    }
}
