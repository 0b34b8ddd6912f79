//! Reading shapes and tableaux from inline JSON or files.

use std::fs;

use diamond_cone::extraction::TrivialPair;
use diamond_cone::taquin::SkewTableau;
use diamond_cone::{HookShape, HookTableau, Signature};
use serde::Deserialize;
use serde_json::Value;

use crate::Failure;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawShape {
    m: Option<usize>,
    n: Option<usize>,
    a: Vec<usize>,
    a_prime: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTableau {
    shape: RawShape,
    plus: Vec<Vec<u8>>,
    minus: Vec<Vec<u8>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSkew {
    outer: RawShape,
    inner: TrivialPair,
    plus: Vec<Vec<Option<u8>>>,
    minus: Vec<Vec<Option<u8>>>,
}

/// Signature defaults from `--m` / `--n`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SigFlags {
    pub m: Option<usize>,
    pub n: Option<usize>,
}

/// The flag text itself when it looks like JSON, otherwise the contents of the named file.
fn load(flag: &str, text: &str) -> Result<Value, Failure> {
    let trimmed = text.trim_start();
    let body = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        text.to_string()
    } else {
        fs::read_to_string(text)
            .map_err(|e| Failure::Usage(format!("{flag}: cannot read {text}: {e}")))?
    };
    serde_json::from_str(&body).map_err(|e| Failure::Usage(format!("{flag}: invalid JSON: {e}")))
}

fn parse<T: for<'de> Deserialize<'de>>(flag: &str, v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Usage(format!("{flag}: {e}")))
}

fn build_shape(flag: &str, raw: RawShape, sig: SigFlags) -> Result<HookShape, Failure> {
    let m = raw
        .m
        .or(sig.m)
        .ok_or_else(|| Failure::Usage(format!("{flag}: m is missing (pass --m)")))?;
    let n = raw
        .n
        .or(sig.n)
        .ok_or_else(|| Failure::Usage(format!("{flag}: n is missing (pass --n)")))?;
    Ok(HookShape::new(Signature::new(m, n)?, raw.a, raw.a_prime)?)
}

pub fn shape(flag: &str, text: &str, sig: SigFlags) -> Result<HookShape, Failure> {
    build_shape(flag, parse(flag, load(flag, text)?)?, sig)
}

/// A filling of a hook shape; semistandardness is not required.
pub fn tableau(flag: &str, text: &str, sig: SigFlags) -> Result<HookTableau, Failure> {
    let raw: RawTableau = parse(flag, load(flag, text)?)?;
    let shape = build_shape(flag, raw.shape, sig)?;
    Ok(HookTableau::new(shape, raw.plus, raw.minus)?)
}

/// Either a skew tableau (with an "outer" key) or a straight tableau.
pub enum SlideInput {
    Skew(SkewTableau),
    Straight(HookTableau),
}

pub fn slide_input(flag: &str, text: &str, sig: SigFlags) -> Result<SlideInput, Failure> {
    let v = load(flag, text)?;
    if v.get("outer").is_some() {
        let raw: RawSkew = parse(flag, v)?;
        let outer = build_shape(flag, raw.outer, sig)?;
        Ok(SlideInput::Skew(SkewTableau::new(
            outer, raw.inner, raw.plus, raw.minus,
        )?))
    } else {
        let raw: RawTableau = parse(flag, v)?;
        let shape = build_shape(flag, raw.shape, sig)?;
        Ok(SlideInput::Straight(HookTableau::new(
            shape, raw.plus, raw.minus,
        )?))
    }
}
