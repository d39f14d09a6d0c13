use std::path::Path;

use serde::{Deserialize, Serialize};
use unram_core::extension::CommutatorForm;
use unram_core::fflinalg::{Modulus, WedgeCoords};

use crate::error::{CliError, CliResult};

/// A commutator form on disk: `{"l": .., "n": .., "r": .., "lambda": [[..], ..]}`
/// with `lambda` rows in wedge lex order `(1,2), (1,3), ..., (n-1,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub l: u32,
    pub n: usize,
    pub r: usize,
    pub lambda: Vec<Vec<u32>>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let p: ProblemFile = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("line {} column {}: {e}", e.line(), e.column())))?;
        p.validate()?;
        Ok(p)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
        ProblemFile::parse(&text).map_err(|e| match e {
            CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Canonical serialization: compact JSON in field order, newline-terminated.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn save(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, self.to_canonical_string()).map_err(|e| CliError::io(path.display().to_string(), e))
    }

    pub fn validate(&self) -> CliResult<()> {
        Modulus::new(self.l).map_err(|e| CliError::Input(format!("field \"l\": {e}")))?;
        if self.n < 2 {
            return Err(CliError::Input(format!(
                "field \"n\": n >= 2 required, found {}",
                self.n
            )));
        }
        if self.lambda.len() != self.r {
            return Err(CliError::Input(format!(
                "field \"lambda\": expected r = {} rows, found {}",
                self.r,
                self.lambda.len()
            )));
        }
        let m = WedgeCoords::new(self.n).dim();
        for (i, row) in self.lambda.iter().enumerate() {
            if row.len() != m {
                return Err(CliError::Input(format!(
                    "field \"lambda[{i}]\": expected n(n-1)/2 = {m} entries, found {}",
                    row.len()
                )));
            }
            if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| v >= self.l) {
                return Err(CliError::Input(format!(
                    "field \"lambda[{i}][{j}]\": entry {v} not in [0, {})",
                    self.l
                )));
            }
        }
        self.to_form().map(|_| ())
    }

    pub fn to_form(&self) -> CliResult<CommutatorForm> {
        let modulus = Modulus::new(self.l).map_err(|e| CliError::Input(format!("field \"l\": {e}")))?;
        CommutatorForm::from_rows(modulus, self.n, &self.lambda)
            .map_err(|e| CliError::Input(format!("field \"lambda\": {e}")))
    }

    pub fn from_form(form: &CommutatorForm) -> Self {
        ProblemFile {
            l: form.modulus().ell(),
            n: form.n(),
            r: form.r(),
            lambda: form.lambda().to_rows(),
        }
    }
}
