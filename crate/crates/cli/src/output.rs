//! Config echo and file plumbing shared by every command.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use serde_json::{json, Value};

use crate::{Cli, CliError};

/// Everything that determines a run's output, echoed into each artifact.
pub struct Stamp {
    args: Vec<String>,
    seed: u64,
    max_complex: usize,
    max_eig: usize,
}

impl Stamp {
    pub fn new(cli: &Cli) -> Self {
        Stamp {
            args: std::env::args().skip(1).collect(),
            seed: cli.seed,
            max_complex: cli.max_complex,
            max_eig: cli.max_eig,
        }
    }

    pub fn json(&self) -> Value {
        json!({
            "tool": concat!("baryspec ", env!("CARGO_PKG_VERSION")),
            "args": self.args,
            "seed": self.seed,
            "max_complex": self.max_complex,
            "max_eig": self.max_eig,
        })
    }

    /// `#` comment lines for CSV and edge-list output.
    pub fn comment_lines(&self) -> String {
        format!(
            "# baryspec {}\n# args: {}\n# seed={} max_complex={} max_eig={}\n",
            env!("CARGO_PKG_VERSION"),
            self.args.join(" "),
            self.seed,
            self.max_complex,
            self.max_eig
        )
    }

    /// Adds a `config` key to a JSON object.
    pub fn stamp_json(&self, mut v: Value) -> Value {
        if let Value::Object(map) = &mut v {
            map.insert("config".into(), self.json());
        }
        v
    }

    /// Inserts a `<metadata>` element after the opening `<svg ...>` tag.
    pub fn stamp_svg(&self, svg: &str) -> String {
        let text = self.json().to_string();
        let escaped = text
            .replace('&', "&amp;")
            .replace('<', "&lt;")
            .replace('>', "&gt;");
        match svg.find('\n') {
            Some(pos) => format!("{}\n<metadata>{escaped}</metadata>{}", &svg[..pos], &svg[pos..]),
            None => svg.to_string(),
        }
    }
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

/// Single-line JSON, used for graph files.
pub fn to_compact(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

/// Writes to `path`, or stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => io::stdout()
            .write_all(content.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}
