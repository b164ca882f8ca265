//! Knot catalogs: the built-in torus knots plus user files.
//!
//! A catalog file is a JSON array of `{"name": ..., "seifert_matrix": [[...]]}`.

use std::fmt;
use std::path::{Path, PathBuf};

use ltsig_core::{from_matrix, torus_knot, KnotSpec};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

const BUILTIN_TORUS: [(u32, u32); 5] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)];

/// Names accepted in place of a catalog name.
const ALIASES: [(&str, &str); 1] = [("trefoil", "T(2,3)")];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin,
    File(PathBuf),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Builtin => f.write_str("builtin"),
            Source::File(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub knot: KnotSpec,
    pub source: Source,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        self.knot.name()
    }

    pub fn seifert_matrix(&self) -> Vec<Vec<i64>> {
        self.knot.matrix().rows()
    }
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    name: String,
    seifert_matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        let mut entries = vec![CatalogEntry {
            knot: KnotSpec::unknot(),
            source: Source::Builtin,
        }];
        for (p, q) in BUILTIN_TORUS {
            entries.push(CatalogEntry {
                knot: torus_knot(p, q).expect("built-in parameters are coprime"),
                source: Source::Builtin,
            });
        }
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Adds entries, rejecting names already present.
    pub fn extend(&mut self, more: Vec<CatalogEntry>) -> Result<(), CliError> {
        for entry in more {
            if self.entries.iter().any(|e| e.name() == entry.name()) {
                return Err(CliError::DuplicateName(entry.name().to_string()));
            }
            self.entries.push(entry);
        }
        Ok(())
    }

    /// Looks a knot up by name, then by alias.
    pub fn get(&self, name: &str) -> Result<&KnotSpec, CliError> {
        let find = |n: &str| self.entries.iter().find(|e| e.name() == n).map(|e| &e.knot);
        find(name)
            .or_else(|| {
                ALIASES
                    .iter()
                    .find(|(alias, _)| *alias == name)
                    .and_then(|(_, target)| find(target))
            })
            .ok_or_else(|| CliError::UnknownKnot(name.to_string()))
    }

    /// The catalog in file format, one entry per line.
    pub fn to_json(&self) -> String {
        let lines: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let raw = RawEntry {
                    name: e.name().to_string(),
                    seifert_matrix: e.seifert_matrix(),
                };
                format!("  {}", serde_json::to_string(&raw).expect("plain data serializes"))
            })
            .collect();
        if lines.is_empty() {
            "[]\n".to_string()
        } else {
            format!("[\n{}\n]\n", lines.join(",\n"))
        }
    }
}

/// Parses and validates catalog text without merging it into the built-ins.
pub fn parse_catalog(text: &str, source: &Source) -> Result<Vec<CatalogEntry>, CliError> {
    let raw: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: source.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut out: Vec<CatalogEntry> = Vec::with_capacity(raw.len());
    for entry in raw {
        let knot = from_matrix(&entry.name, entry.seifert_matrix).map_err(|e| CliError::Validation {
            name: entry.name.clone(),
            reason: e.to_string(),
        })?;
        if out.iter().any(|e| e.name() == knot.name()) {
            return Err(CliError::DuplicateName(entry.name));
        }
        out.push(CatalogEntry {
            knot,
            source: source.clone(),
        });
    }
    Ok(out)
}

/// Built-ins plus the validated entries of the file at `path`.
pub fn load_catalog(path: &Path) -> Result<Catalog, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let entries = parse_catalog(&text, &Source::File(path.to_path_buf()))?;
    let mut catalog = Catalog::builtin();
    catalog.extend(entries)?;
    Ok(catalog)
}
