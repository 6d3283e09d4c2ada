//! Executable checks of the identities relating links, truncated
//! subdivisions, nerves and rank selection, plus a seeded prospector.
//!
//! Every check returns [`CheckResult`]s. A failing result carries a witness in
//! the facet-list JSON accepted by the CLI, so it can be replayed with
//! `srx verify witness.json --check NAME --field P`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::SimplicialComplex;
use crate::homology::FieldSpec;

mod checks;
pub mod fixtures;
pub mod prospect;

pub use checks::{
    check_euler_identities, check_gorenstein_truncation, check_independent_removal,
    check_rank_selection, check_serre_truncation, check_subdivision, run_check, truncation_table,
    CHECK_NAMES, REMOVAL_SEED,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub detail: String,
    /// Informational findings that are not failures.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub elapsed_us: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Facet-list JSON naming the complex, field and check to replay.
pub fn witness_json(c: &SimplicialComplex, field: FieldSpec, check: &str, detail: &str) -> Value {
    json!({
        "facets": c.canonical_facets(),
        "field": field.characteristic(),
        "check": check,
        "detail": detail,
    })
}

/// Collects results for one complex, timing each from the previous record.
pub(crate) struct Recorder<'a> {
    c: &'a SimplicialComplex,
    field: FieldSpec,
    family: &'static str,
    started: Instant,
    out: Vec<CheckResult>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn new(c: &'a SimplicialComplex, field: FieldSpec, family: &'static str) -> Self {
        Recorder {
            c,
            field,
            family,
            started: Instant::now(),
            out: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, status: Status, detail: String, notes: Vec<String>) {
        let check = format!("{}/{name}", self.family);
        let witness = (status == Status::Fail).then(|| witness_json(self.c, self.field, self.family, &detail));
        self.out.push(CheckResult {
            check,
            status,
            detail,
            notes,
            witness,
            elapsed_us: self.started.elapsed().as_micros() as u64,
        });
        self.started = Instant::now();
    }

    /// Pass if `failures` is empty, otherwise fail with the first one.
    pub(crate) fn verdict(&mut self, name: &str, tested: usize, failures: Vec<String>) {
        self.verdict_with_notes(name, tested, failures, Vec::new());
    }

    pub(crate) fn verdict_with_notes(&mut self, name: &str, tested: usize, failures: Vec<String>, notes: Vec<String>) {
        match failures.first() {
            None => self.push(name, Status::Pass, format!("{tested} checked"), notes),
            Some(first) => {
                let detail = format!("{} of {tested} cases fail; first: {first}", failures.len());
                self.push(name, Status::Fail, detail, notes)
            }
        }
    }

    pub(crate) fn inapplicable(&mut self, name: &str, why: impl Into<String>) {
        self.push(name, Status::Inapplicable, why.into(), Vec::new());
    }

    pub(crate) fn finish(self) -> Vec<CheckResult> {
        self.out
    }
}

/// Writes the witness of every failing result to `dir` as `NNN-check.json`.
pub fn write_witnesses(dir: &Path, results: &[CheckResult]) -> std::io::Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for (k, r) in results.iter().enumerate() {
        if let Some(w) = &r.witness {
            std::fs::create_dir_all(dir)?;
            let name = format!("{k:03}-{}.json", r.check.replace('/', "-"));
            let path = dir.join(name);
            std::fs::write(&path, serde_json::to_string_pretty(w).expect("json value") + "\n")?;
            written.push(path);
        }
    }
    Ok(written)
}
