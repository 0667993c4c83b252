//! Textual continued-fraction specs.
//!
//! A spec gives level templates for the partial numerators (i >= 1) and
//! denominators (i >= 0) as expressions in x, y, named parameters, and the
//! level index `i`, with per-level overrides for the irregular fractions
//! printed in the source material. Defaults to the stabilize depth policy.
//!
//! ```toml
//! name = "gladkovskii"
//! numerator = "i*x"
//! denominator = "1-2*i*x"
//! denominator_overrides = { "0" = "1" }
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use riordan_core::contfrac::{CfSpec, DepthPolicy};
use riordan_core::Rational;
use serde::Deserialize;

use crate::expr::{eval, parse, Expr};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CfDef {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    /// Template for the partial numerators a_i (i >= 1).
    pub numerator: String,
    /// Template for the partial denominators b_i (i >= 0).
    pub denominator: String,
    #[serde(default)]
    pub numerator_overrides: BTreeMap<String, String>,
    #[serde(default)]
    pub denominator_overrides: BTreeMap<String, String>,
    /// "stabilize" (default) or a fixed integer depth.
    #[serde(default)]
    pub depth: Option<DepthDef>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum DepthDef {
    Fixed(usize),
    Named(String),
}

struct Levels {
    template: Expr,
    overrides: BTreeMap<usize, Expr>,
    params: BTreeMap<String, Rational>,
}

impl Levels {
    fn at(&self, i: usize, order: usize) -> riordan_core::XSeries<riordan_core::YPoly> {
        let expr = self.overrides.get(&i).unwrap_or(&self.template);
        let mut params = self.params.clone();
        params.insert("i".to_string(), Rational::from(i as i64));
        eval(expr, &params, order).expect("cf templates validated at build time")
    }
}

fn build_levels(
    template: &str,
    overrides: &BTreeMap<String, String>,
    params: &BTreeMap<String, Rational>,
    what: &str,
) -> Result<Levels> {
    let template = parse(template).with_context(|| format!("parsing {what} template"))?;
    let mut parsed = BTreeMap::new();
    for (level, src) in overrides {
        let i: usize = level
            .parse()
            .with_context(|| format!("{what} override level {level:?}"))?;
        parsed.insert(
            i,
            parse(src).with_context(|| format!("parsing {what} override {level}"))?,
        );
    }
    let levels = Levels {
        template,
        overrides: parsed,
        params: params.clone(),
    };
    // validate a few levels so bad templates fail before evaluation
    for i in 0..=2usize {
        let expr = levels.overrides.get(&i).unwrap_or(&levels.template);
        let mut p = levels.params.clone();
        p.insert("i".to_string(), Rational::from(i as i64));
        eval(expr, &p, 2).with_context(|| format!("evaluating {what} at level {i}"))?;
    }
    Ok(levels)
}

pub fn build_cf(def: &CfDef) -> Result<CfSpec> {
    let mut params = BTreeMap::new();
    for (name, value) in &def.params {
        if name == "i" || name == "x" || name == "y" {
            bail!("parameter name {name:?} is reserved");
        }
        params.insert(
            name.clone(),
            Rational::from_str(value)
                .map_err(|e| anyhow::anyhow!("parameter {name} = {value:?}: {e}"))?,
        );
    }
    let numerators = build_levels(&def.numerator, &def.numerator_overrides, &params, "numerator")?;
    let denominators = build_levels(
        &def.denominator,
        &def.denominator_overrides,
        &params,
        "denominator",
    )?;
    let depth = match &def.depth {
        None => DepthPolicy::Stabilize,
        Some(DepthDef::Fixed(d)) => DepthPolicy::Fixed(*d),
        Some(DepthDef::Named(s)) if s == "stabilize" => DepthPolicy::Stabilize,
        Some(DepthDef::Named(s)) => bail!("unknown depth policy {s:?}"),
    };
    Ok(CfSpec::new(
        move |i, order| numerators.at(i, order),
        move |i, order| denominators.at(i, order),
        depth,
    ))
}

pub fn load_cf_file(path: &std::path::Path) -> Result<(CfDef, CfSpec)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let def: CfDef =
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let spec = build_cf(&def)?;
    Ok((def, spec))
}
