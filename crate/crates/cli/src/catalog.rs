//! On-disk catalog: a directory of canonical relation documents plus a
//! manifest of `name<TAB>file<TAB>scheme-digest` lines.

use std::fs;
use std::path::{Path, PathBuf};

use neutro_core::query::{is_identifier, Catalog};
use neutro_core::relation::{NeutrosophicRelation, Scheme};
use sha2::{Digest, Sha256};

use crate::document::{load_relation, save_relation, scheme_line};
use crate::error::CliError;

pub const DEFAULT_DIR: &str = ".neutro";
const MANIFEST: &str = "manifest.tsv";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub name: String,
    /// Relative to the catalog directory.
    pub file: String,
    pub digest: String,
}

/// SHA-256 of the scheme's header line, hex encoded.
pub fn scheme_digest(scheme: &Scheme) -> String {
    Sha256::digest(scheme_line(scheme).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug)]
pub struct CatalogDir {
    dir: PathBuf,
    entries: Vec<ManifestEntry>,
}

impl CatalogDir {
    /// Opens `dir`; a missing directory is an empty catalog.
    pub fn open(dir: &Path) -> Result<Self, CliError> {
        let manifest = dir.join(MANIFEST);
        let entries = match fs::read_to_string(&manifest) {
            Ok(text) => parse_manifest(&text).map_err(|e| e.in_file(&manifest))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
            Err(e) => return Err(CliError::io(&manifest, e)),
        };
        Ok(CatalogDir {
            dir: dir.to_path_buf(),
            entries,
        })
    }

    pub fn entries(&self) -> &[ManifestEntry] {
        &self.entries
    }

    /// Loads one relation and checks it against its recorded digest.
    pub fn load(&self, name: &str) -> Result<NeutrosophicRelation, CliError> {
        let entry = self
            .entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| CliError::from(neutro_core::Error::UnknownRelation(name.to_string())))?;
        let path = self.dir.join(&entry.file);
        let r = load_relation(&path)?;
        if scheme_digest(r.scheme()) != entry.digest {
            return Err(CliError::Catalog(format!(
                "{}: scheme does not match the manifest digest for `{name}`",
                path.display()
            )));
        }
        Ok(r)
    }

    /// Every relation, keyed by name.
    pub fn load_all(&self) -> Result<Catalog, CliError> {
        self.entries
            .iter()
            .map(|e| Ok((e.name.clone(), self.load(&e.name)?)))
            .collect()
    }

    /// Stores `r` under `name`, replacing any previous relation of that name.
    pub fn insert(&mut self, name: &str, r: &NeutrosophicRelation) -> Result<(), CliError> {
        if !is_identifier(name) {
            return Err(CliError::Usage(format!(
                "`{name}` is not a valid relation name (letters, digits, `_`, `-`; not a keyword)"
            )));
        }
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let file = format!("{name}.nrel");
        save_relation(r, &self.dir.join(&file))?;
        let entry = ManifestEntry {
            name: name.to_string(),
            file,
            digest: scheme_digest(r.scheme()),
        };
        match self.entries.iter_mut().find(|e| e.name == name) {
            Some(slot) => *slot = entry,
            None => self.entries.push(entry),
        }
        self.entries.sort_by(|a, b| a.name.cmp(&b.name));
        let manifest = self.dir.join(MANIFEST);
        fs::write(&manifest, render_manifest(&self.entries)).map_err(|e| CliError::io(&manifest, e))
    }
}

fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>, CliError> {
    let mut entries: Vec<ManifestEntry> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [name, file, digest] = fields[..] else {
            return Err(CliError::Parse {
                line: i + 1,
                message: "expected name, file and digest separated by tabs".into(),
            });
        };
        if entries.iter().any(|e| e.name == name) {
            return Err(CliError::Parse {
                line: i + 1,
                message: format!("duplicate relation name `{name}`"),
            });
        }
        entries.push(ManifestEntry {
            name: name.to_string(),
            file: file.to_string(),
            digest: digest.to_string(),
        });
    }
    Ok(entries)
}

fn render_manifest(entries: &[ManifestEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{}\t{}\t{}\n", e.name, e.file, e.digest))
        .collect()
}
