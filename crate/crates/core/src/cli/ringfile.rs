//! TOML ring definitions.
//!
//! ```toml
//! [field]
//! p = 2
//! params = ["t1", "t2"]
//!
//! [variables]
//! x0 = 1
//! x1 = 1
//! x2 = 1
//!
//! [relations]
//! f = "x0^2 - t1 x1^2 - t2 x2^2"
//!
//! [bound]
//! f = "x0"
//!
//! [assumptions]
//! isolated_singularity = true
//! normal = true
//! ```

use indexmap::IndexMap;
use serde::Deserialize;
use toml::Spanned;

use super::parser::{line_col, parse_poly, Scope};
use crate::error::{Error, Result};
use crate::rings::{make_ring, Assumptions, RelationSpec, Ring, RingSpec};
use crate::scalars::FieldDescriptor;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    field: FieldSection,
    variables: IndexMap<String, Degree>,
    #[serde(default)]
    relations: IndexMap<String, Spanned<String>>,
    #[serde(default)]
    bound: IndexMap<String, String>,
    #[serde(default)]
    assumptions: AssumptionSection,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    p: u32,
    #[serde(default)]
    params: Vec<String>,
    #[serde(default)]
    root_depth: u8,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Degree {
    Scalar(i64),
    Vector(Vec<i64>),
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct AssumptionSection {
    #[serde(default)]
    isolated_singularity: bool,
    #[serde(default)]
    normal: bool,
}

pub fn load_ring_file(path: &std::path::Path) -> Result<Ring> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_ring_file(&text)
}

pub fn parse_ring_file(text: &str) -> Result<Ring> {
    let file: RingFile = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
        Error::Parse { line, column, message: e.message().to_string() }
    })?;
    let field = FieldDescriptor::new(file.field.p, file.field.params, file.field.root_depth)?;
    let variables: Vec<(String, Vec<i64>)> = file
        .variables
        .into_iter()
        .map(|(name, d)| {
            let d = match d {
                Degree::Scalar(k) => vec![k],
                Degree::Vector(v) => v,
            };
            (name, d)
        })
        .collect();
    let names: Vec<String> = variables.iter().map(|(n, _)| n.clone()).collect();
    for name in file.bound.keys() {
        if !file.relations.contains_key(name) {
            return Err(Error::Invalid(format!("[bound] names unknown relation `{name}`")));
        }
    }
    let scope = Scope { field: &field, vars: &names };
    let mut relations = Vec::new();
    for (name, src) in &file.relations {
        // Offsets inside a basic string are relative to its opening quote.
        let base = src.span().start + 1;
        let poly = parse_poly(src.get_ref(), &scope).map_err(|e| e.located(text, base))?;
        let bound = match file.bound.get(name) {
            Some(v) => Some(names.iter().position(|n| n == v).ok_or_else(|| Error::UnknownVariable(v.clone()))?),
            None => None,
        };
        relations.push(RelationSpec { poly, bound });
    }
    make_ring(RingSpec {
        field,
        variables,
        relations,
        assumptions: Assumptions {
            isolated_singularity_asserted: file.assumptions.isolated_singularity,
            normal_asserted: file.assumptions.normal,
        },
    })
}
