//! Sign files: `{"type": "Ha1"|"H41"|"Trivial", "overrides": [{"key": ..., "sign": ±1}]}`.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use rank2km::{CartanData, SignAssignment};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignFile {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub overrides: Vec<Override>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Override {
    pub key: String,
    pub sign: i8,
}

pub fn parse(cd: &CartanData, text: &str) -> Result<SignAssignment> {
    let file: SignFile = serde_json::from_str(text).context("malformed sign file")?;
    let expected = SignAssignment::all_plus(cd).model().as_str();
    if file.kind != expected {
        bail!("sign file has type {:?} but {cd} needs {expected:?}", file.kind);
    }
    Ok(SignAssignment::from_overrides(cd, file.overrides.iter().map(|o| (o.key.as_str(), o.sign)))?)
}

/// All `+1` when no file is given.
pub fn load(cd: &CartanData, path: Option<&Path>) -> Result<SignAssignment> {
    match path {
        None => Ok(SignAssignment::all_plus(cd)),
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            parse(cd, &text).with_context(|| format!("in {}", p.display()))
        }
    }
}
