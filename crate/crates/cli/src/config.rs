//! Optional TOML defaults for experiment flags.
//!
//! Keys use the flag names (`trials = 500`, `target-degree = 4.3`). Config
//! entries are spliced in front of the user's own arguments and the parser
//! lets later occurrences win, so explicit flags always take precedence and
//! config values go through exactly the same validation.

use std::ffi::OsString;
use std::path::Path;

use toml::Value;

const SUBCOMMANDS: [&str; 5] = ["demo", "depletion", "compare", "repair", "criticality"];

/// Finds `--config <path>` or `--config=<path>` in `args`.
pub fn config_path(args: &[OsString]) -> Option<OsString> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().cloned();
        }
        if let Some(rest) = s.strip_prefix("--config=") {
            return Some(rest.into());
        }
    }
    None
}

/// Turns a TOML table into flag arguments.
pub fn config_args(text: &str, source: &Path) -> Result<Vec<OsString>, String> {
    let table: toml::Table = text
        .parse()
        .map_err(|e| format!("{}: {e}", source.display()))?;
    let mut out = Vec::new();
    for (key, value) in &table {
        let key = key.replace('_', "-");
        if key == "config" {
            return Err(format!(
                "{}: a config file cannot name another config",
                source.display()
            ));
        }
        let flag = OsString::from(format!("--{key}"));
        match value {
            Value::Boolean(true) => out.push(flag),
            Value::Boolean(false) => {}
            Value::String(s) => out.extend([flag, s.into()]),
            Value::Integer(i) => out.extend([flag, i.to_string().into()]),
            Value::Float(f) => out.extend([flag, f.to_string().into()]),
            Value::Array(items) => {
                let parts: Result<Vec<String>, String> = items
                    .iter()
                    .map(|v| match v {
                        Value::String(s) => Ok(s.clone()),
                        Value::Integer(i) => Ok(i.to_string()),
                        other => Err(format!(
                            "{}: unsupported list item {other}",
                            source.display()
                        )),
                    })
                    .collect();
                out.extend([flag, parts?.join(",").into()]);
            }
            other => {
                return Err(format!(
                    "{}: unsupported value for {key}: {other}",
                    source.display()
                ))
            }
        }
    }
    Ok(out)
}

/// Inserts `extra` right after the subcommand name.
pub fn splice(args: Vec<OsString>, extra: Vec<OsString>) -> Vec<OsString> {
    let at = args
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()))
        .map_or(args.len(), |i| i + 1);
    let mut out = args[..at].to_vec();
    out.extend(extra);
    out.extend_from_slice(&args[at..]);
    out
}
