use std::collections::BTreeMap;

use serde::Serialize;

use crate::inputs::Loaded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Kuperberg,
    Tv,
    Homcount,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub role: &'static str,
    pub source: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of<T>(role: &'static str, l: &Loaded<T>) -> Self {
        InputDigest {
            role,
            source: l.source.clone(),
            sha256: l.sha256.clone(),
        }
    }
}

/// One computed invariant. Contains no timings, so re-runs are byte-identical.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub manifold: String,
    pub inputs: Vec<InputDigest>,
    pub kind: InvariantKind,
    pub object: String,
    pub field: String,
    pub value: String,
    pub cost: BTreeMap<&'static str, u64>,
    pub toolchain: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub group: String,
    pub h1_diagram: String,
    pub h1_triangulation: String,
    pub kuperberg: InvariantReport,
    pub tv: InvariantReport,
    /// `|G| * TV`, compared against the Kuperberg value.
    pub scaled_tv: String,
    pub pass: bool,
    pub toolchain: String,
}

pub fn toolchain() -> String {
    format!(
        "kuptv {} ({})",
        env!("CARGO_PKG_VERSION"),
        env!("KUPTV_RUSTC_VERSION")
    )
}

pub fn saturate(x: u128) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}
