//! Surface description files: flat `key=value` lines.
//!
//! ```text
//! # a K3 surface
//! name=k3
//! betti=1,0,22,0,1
//! euler=24
//! hodge=0:0:1,2:0:1,1:1:20,0:2:1,2:2:1
//! ```
//!
//! `betti_c` defaults to `betti`, `euler` is checked against the alternating
//! sum when given, and `hodge` is optional. The pairing is the standard one.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::surface::{preset, HodgeNumbers, SurfaceError, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected key=value, found {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: key {key:?} given twice")]
    Duplicate { line: usize, key: String },
    #[error("field {field:?}: {message}")]
    Field {
        field: &'static str,
        message: String,
    },
    #[error("field \"betti\" is required")]
    MissingBetti,
    #[error("field \"euler\": given {given}, Betti numbers give {computed}")]
    EulerMismatch { given: i64, computed: i64 },
    #[error("{0}")]
    Surface(#[from] SurfaceError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceConfig {
    pub name: String,
    pub betti: [u32; 5],
    pub betti_c: Option<[u32; 5]>,
    pub euler: Option<i64>,
    pub hodge: Option<HodgeNumbers>,
}

fn parse_five(field: &'static str, value: &str) -> Result<[u32; 5], ConfigError> {
    let bad = |message: String| ConfigError::Field { field, message };
    let nums = value
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| bad(format!("{:?} is not a nonnegative integer", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    nums.try_into()
        .map_err(|v: Vec<u32>| bad(format!("expected 5 entries, found {}", v.len())))
}

fn parse_hodge(value: &str) -> Result<HodgeNumbers, ConfigError> {
    let bad = |message: String| ConfigError::Field {
        field: "hodge",
        message,
    };
    let mut out = BTreeMap::new();
    for entry in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let nums = entry
            .split(':')
            .map(|s| s.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad(format!("{entry:?} is not p:q:h")))?;
        let [p, q, h] = nums[..] else {
            return Err(bad(format!("{entry:?} is not p:q:h")));
        };
        if out.insert((p, q), h).is_some() {
            return Err(bad(format!("({p}, {q}) given twice")));
        }
    }
    Ok(out)
}

impl SurfaceConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut seen = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(ConfigError::Syntax {
                    line,
                    text: content.to_string(),
                });
            };
            let key = key.trim();
            if !["name", "betti", "betti_c", "euler", "hodge"].contains(&key) {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                });
            }
            if seen
                .insert(key.to_string(), value.trim().to_string())
                .is_some()
            {
                return Err(ConfigError::Duplicate {
                    line,
                    key: key.to_string(),
                });
            }
        }
        let betti = parse_five("betti", seen.get("betti").ok_or(ConfigError::MissingBetti)?)?;
        let betti_c = seen
            .get("betti_c")
            .map(|v| parse_five("betti_c", v))
            .transpose()?;
        let euler = seen
            .get("euler")
            .map(|v| {
                v.parse::<i64>().map_err(|_| ConfigError::Field {
                    field: "euler",
                    message: format!("{v:?} is not an integer"),
                })
            })
            .transpose()?;
        let hodge = seen.get("hodge").map(|v| parse_hodge(v)).transpose()?;
        Ok(SurfaceConfig {
            name: seen
                .get("name")
                .cloned()
                .unwrap_or_else(|| "custom".to_string()),
            betti,
            betti_c,
            euler,
            hodge,
        })
    }

    pub fn into_model(self) -> Result<SurfaceModel, ConfigError> {
        let computed: i64 = self
            .betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if let Some(given) = self.euler {
            if given != computed {
                return Err(ConfigError::EulerMismatch { given, computed });
            }
        }
        let betti_c = self.betti_c.unwrap_or(self.betti);
        Ok(SurfaceModel::with_standard_pairing(
            self.name, self.betti, betti_c, self.hodge,
        )?)
    }
}

/// A preset name, or else the path of a configuration file.
pub fn load_surface(spec: &str) -> Result<SurfaceModel, String> {
    if let Ok(model) = preset(spec) {
        return Ok(model);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| {
        format!("--surface: {spec:?} is neither a preset nor a readable file ({e})")
    })?;
    SurfaceConfig::parse(&text)
        .and_then(SurfaceConfig::into_model)
        .map_err(|e| format!("--surface {spec}: {e}"))
}
