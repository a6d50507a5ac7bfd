//! Continued fraction scheme files:
//!
//! ```toml
//! name = "cn-skeleton"
//! leading = "one-over"
//! alpha = "2*n-1"
//! beta = "n^2*m"
//! ```

use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

use snakelab::cfrac::{CfScheme, Leading};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeFile {
    name: String,
    #[serde(default = "default_leading")]
    leading: Leading,
    alpha: String,
    beta: String,
}

fn default_leading() -> Leading {
    Leading::UOver
}

pub fn parse(text: &str) -> Result<CfScheme> {
    let f: SchemeFile = toml::from_str(text)?;
    Ok(CfScheme::new(&f.name, f.leading, &f.alpha, &f.beta)?)
}

pub fn load(path: &Path) -> Result<CfScheme> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("scheme file {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use snakelab::WPoly;

    #[test]
    fn parses_streams() {
        let s = parse("name = \"x\"\nleading = \"one-over\"\nalpha = \"2*n-1\"\nbeta = \"n^2*m\"\n").unwrap();
        assert_eq!(s.leading, Leading::OneOver);
        assert_eq!(s.beta.at(2), WPoly::from_ints(&[0, 4]));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse("name = \"x\"\nalpha = \"2*n-\"\nbeta = \"1\"\n").is_err());
        assert!(parse("name = \"x\"\nalpha = \"1\"\n").is_err());
        assert!(parse("name = \"x\"\nalpha = \"1\"\nbeta = \"1\"\nextra = 1\n").is_err());
        assert!(parse("name = \"x\"\nleading = \"sideways\"\nalpha = \"1\"\nbeta = \"1\"\n").is_err());
    }
}
