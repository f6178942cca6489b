use std::path::Path;

use serde::Deserialize;

/// Keys accepted in a `--config` file; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub rank: Option<usize>,
    #[serde(rename = "box")]
    pub box_: Option<String>,
    pub length_bound: Option<usize>,
    pub primes: Option<Vec<u64>>,
    pub jobs: Option<usize>,
    pub pretty: Option<bool>,
    pub timing: Option<bool>,
    pub emit_alcove_svg: Option<String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}
