//! Resolving command-line inputs: `catalog:<name>` tokens and JSON files.

use std::str::FromStr;

use congruence_core::burnside::GroupKind;
use congruence_core::cup::TrilinearFormZd;
use congruence_core::link::DbcReference;
use congruence_core::surgery::{catalog, CatalogEntry, CatalogName, SurgeryPresentation};
use congruence_core::zmod::IntMatrix;
use serde::de::DeserializeOwned;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::formats::{BraidJson, FormJson, MatrixJson, PdJson, PresentationJson};
use crate::{KitError, Result};

#[derive(Clone, Debug)]
pub enum Input {
    Surgery { presentation: SurgeryPresentation, group: Option<GroupKind> },
    DoubleBranchedCover { reference: DbcReference, group: Option<GroupKind> },
    Form(TrilinearFormZd),
    Matrix(IntMatrix),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Surgery { .. } => "surgery presentation",
            Self::DoubleBranchedCover { .. } => "double branched cover",
            Self::Form(_) => "trilinear form",
            Self::Matrix(_) => "presentation matrix",
        }
    }

    pub fn group(&self) -> Option<&GroupKind> {
        match self {
            Self::Surgery { group, .. } | Self::DoubleBranchedCover { group, .. } => group.as_ref(),
            Self::Form(_) | Self::Matrix(_) => None,
        }
    }
}

/// An input together with how it was named.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub token: String,
    pub label: String,
    /// SHA-256 of the file contents, or of the token for catalog entries.
    pub sha256: String,
    pub input: Input,
}

pub const CATALOG_PREFIX: &str = "catalog:";

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Resolves a `catalog:<name>` token or a path to a JSON file.
pub fn resolve(token: &str) -> Result<Resolved> {
    if let Some(name) = token.strip_prefix(CATALOG_PREFIX) {
        let name = CatalogName::from_str(name)?;
        let group = name.fundamental_group();
        let input = match catalog(&name)? {
            CatalogEntry::Surgery(presentation) => Input::Surgery { presentation, group },
            CatalogEntry::DoubleBranchedCover(reference) => Input::DoubleBranchedCover { reference, group },
        };
        return Ok(Resolved { token: token.to_string(), label: name.to_string(), sha256: sha256_hex(token.as_bytes()), input });
    }
    let text = std::fs::read_to_string(token).map_err(|err| KitError::Io { path: token.into(), err })?;
    let input = parse_input(&text, token)?;
    Ok(Resolved { token: token.to_string(), label: token.to_string(), sha256: sha256_hex(text.as_bytes()), input })
}

/// Parses a JSON document, telling the formats apart by their keys.
pub fn parse_input(text: &str, source_name: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(|e| KitError::Parse {
        source_name: source_name.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let has = |key: &str| value.get(key).is_some();
    if has("coeffs") {
        let p: PresentationJson = typed(value.clone(), source_name)?;
        let group = p.group.clone().map(GroupKind::from);
        Ok(Input::Surgery { presentation: p.to_presentation()?, group })
    } else if has("crossings") {
        let pd: PdJson = typed(value.clone(), source_name)?;
        let label = pd.label.clone().unwrap_or_else(|| source_name.to_string());
        Ok(Input::DoubleBranchedCover { reference: DbcReference::diagram(pd.to_diagram()?, &label), group: None })
    } else if has("strands") {
        let b: BraidJson = typed(value.clone(), source_name)?;
        let label = b.label.clone().unwrap_or_else(|| source_name.to_string());
        Ok(Input::DoubleBranchedCover { reference: DbcReference::braid_closure(b.to_braid()?, &label), group: None })
    } else if has("entries") {
        let f: FormJson = typed(value, source_name)?;
        Ok(Input::Form(f.to_form()?))
    } else if has("matrix") {
        let m: MatrixJson = typed(value, source_name)?;
        Ok(Input::Matrix(m.to_matrix()?))
    } else {
        Err(KitError::Format {
            source_name: source_name.to_string(),
            message: "unrecognised input: expected one of the keys coeffs, crossings, strands, entries, matrix"
                .to_string(),
        })
    }
}

fn typed<T: DeserializeOwned>(value: Value, source_name: &str) -> Result<T> {
    serde_json::from_value(value)
        .map_err(|e| KitError::Format { source_name: source_name.to_string(), message: e.to_string() })
}
