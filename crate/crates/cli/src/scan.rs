//! Exhaustive census of commutator forms up to basis change, persisted as
//! line-delimited JSON so that an interrupted run can be resumed.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use unram_core::cohomology::unramified_quotient;
use unram_core::extension::orbit::{GeneratorKind, OrbitClass};
use unram_core::extension::{delta_pairs, fan, kernel_orbits, CommutatorForm, ORBIT_MAX_N};
use unram_core::fflinalg::{enumerate_subspaces, subspace_count, Caps, Modulus, Subspace, WedgeCoords};

use crate::error::{CliError, CliResult};

pub const TOOL: &str = "unram";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DedupKind {
    /// One record per `GL(n)`-orbit.
    GlOrbit,
    /// One record per orbit of the monomial subgroup; several records may
    /// share a `GL(n)`-orbit.
    MonomialOrbit,
}

impl DedupKind {
    pub fn for_rank(n: usize) -> Self {
        if n <= ORBIT_MAX_N {
            DedupKind::GlOrbit
        } else {
            DedupKind::MonomialOrbit
        }
    }

    fn generators(self) -> GeneratorKind {
        match self {
            DedupKind::GlOrbit => GeneratorKind::Full,
            DedupKind::MonomialOrbit => GeneratorKind::Monomial,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub l: u32,
    pub n: usize,
    pub r: usize,
    pub tool: String,
    pub version: String,
    pub dedup: DedupKind,
}

/// One orbit of kernels `K ⊆ wedge^2(F_l^n)` of codimension `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanRecord {
    /// Canonical basis of the lexicographically least kernel in the orbit.
    pub canonical_kernel: Vec<Vec<u32>>,
    /// Canonical basis of the annihilator of the kernel.
    pub lambda: Vec<Vec<u32>>,
    pub orbit_size: usize,
    pub fan_size: usize,
    pub delta_pair_count: usize,
    pub quotient_dim: usize,
    pub provenance: Provenance,
}

impl ScanRecord {
    pub fn to_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn form(&self) -> CliResult<CommutatorForm> {
        let modulus = Modulus::new(self.provenance.l).map_err(|e| CliError::Input(e.to_string()))?;
        CommutatorForm::from_rows(modulus, self.provenance.n, &self.lambda)
            .map_err(|e| CliError::Input(format!("record lambda: {e}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanParams {
    pub l: u32,
    pub n: usize,
    pub r: usize,
    pub caps: Caps,
}

impl ScanParams {
    pub fn provenance(&self) -> Provenance {
        Provenance {
            l: self.l,
            n: self.n,
            r: self.r,
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            dedup: DedupKind::for_rank(self.n),
        }
    }

    fn modulus(&self) -> CliResult<Modulus> {
        Modulus::new(self.l).map_err(|e| CliError::Input(format!("--l: {e}")))
    }

    /// Warning printed for scans whose records are not one per `GL`-orbit.
    pub fn warning(&self) -> Option<String> {
        (DedupKind::for_rank(self.n) == DedupKind::MonomialOrbit).then(|| {
            format!(
                "warning: n = {} > {ORBIT_MAX_N}: deduplicating by the monomial subgroup only; \
                 several records may describe the same GL-orbit",
                self.n
            )
        })
    }

    fn check(&self) -> CliResult<usize> {
        self.modulus()?;
        if self.n < 2 {
            return Err(CliError::Input(format!("--n: n >= 2 required, found {}", self.n)));
        }
        if self.n > self.caps.max_n {
            return Err(CliError::Cap(format!(
                "n = {} exceeds --cap-n {}",
                self.n, self.caps.max_n
            )));
        }
        let m = WedgeCoords::new(self.n).dim();
        if self.r > m {
            return Err(CliError::Input(format!(
                "--r: r <= n(n-1)/2 = {m} required, found {}",
                self.r
            )));
        }
        let count = subspace_count(m, self.l, Some(m - self.r));
        if count > self.caps.max_count {
            return Err(CliError::Cap(format!(
                "{count} kernels of codimension {} in F_{}^{m} exceed the cap of {}",
                self.r, self.l, self.caps.max_count
            )));
        }
        Ok(m)
    }
}

/// All kernels of codimension `r`, split into orbits and sorted by canonical
/// representative.
pub fn scan_orbits(params: &ScanParams) -> CliResult<Vec<OrbitClass>> {
    let m = params.check()?;
    let modulus = params.modulus()?;
    let field = modulus.field();
    let kernels = enumerate_subspaces(field, m, Some(m - params.r), &params.caps.with_ambient(m))
        .map_err(|e| CliError::core("enumerating kernels", e))?;
    let ex = kernel_orbits(
        modulus,
        params.n,
        DedupKind::for_rank(params.n).generators(),
        &params.caps,
    );
    ex.partition(kernels).map_err(|e| CliError::core("orbit partition", e))
}

pub fn record_for(params: &ScanParams, class: &OrbitClass) -> CliResult<ScanRecord> {
    let modulus = params.modulus()?;
    let form = CommutatorForm::from_kernel(modulus, params.n, &class.canonical)
        .map_err(|e| CliError::core("building form", e))?;
    let caps = &params.caps;
    let fan_size = fan(&form, false, caps).map_err(|e| CliError::core("fan", e))?.len();
    let delta_pair_count = delta_pairs(&form, false, caps)
        .map_err(|e| CliError::core("delta-pairs", e))?
        .len();
    let quotient_dim = unramified_quotient(&form, caps)
        .map_err(|e| CliError::core("unramified quotient", e))?
        .quotient_dim;
    Ok(ScanRecord {
        canonical_kernel: class.canonical.basis_vecs(),
        lambda: form.lambda().to_rows(),
        orbit_size: class.size,
        fan_size,
        delta_pair_count,
        quotient_dim,
        provenance: params.provenance(),
    })
}

/// Reads complete records, ignoring a trailing partial line.
pub fn read_records(path: &Path) -> CliResult<Vec<ScanRecord>> {
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| CliError::io(path.display().to_string(), e))?;
    let complete = match text.rfind('\n') {
        Some(i) => &text[..=i],
        None => "",
    };
    complete
        .lines()
        .enumerate()
        .map(|(i, line)| {
            serde_json::from_str(line).map_err(|e| CliError::Input(format!("{}: line {}: {e}", path.display(), i + 1)))
        })
        .collect()
}

/// Cuts the file after its last newline, dropping a partially written record.
fn truncate_partial(path: &Path) -> CliResult<u64> {
    let io = |e| CliError::io(path.display().to_string(), e);
    let bytes = std::fs::read(path).map_err(io)?;
    let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1) as u64;
    if keep != bytes.len() as u64 {
        OpenOptions::new()
            .write(true)
            .open(path)
            .and_then(|f| f.set_len(keep))
            .map_err(io)?;
    }
    Ok(keep)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub l: u32,
    pub n: usize,
    pub r: usize,
    pub dedup: DedupKind,
    pub orbits: usize,
    pub kernels: usize,
    pub written: usize,
    pub skipped: usize,
    /// Records with `quotient_dim > 0`, in file order.
    pub highlighted: Vec<ScanRecord>,
}

/// Writes one record per orbit to `out` in canonical order. With `resume`,
/// records already present are kept and skipped; otherwise `out` is
/// replaced.
pub fn run_scan(params: &ScanParams, out: &Path, resume: bool) -> CliResult<ScanSummary> {
    let provenance = params.provenance();
    let io = |e| CliError::io(out.display().to_string(), e);

    let mut existing = Vec::new();
    if resume && out.exists() {
        truncate_partial(out)?;
        existing = read_records(out)?;
        if let Some(bad) = existing.iter().find(|rec| rec.provenance != provenance) {
            return Err(CliError::Input(format!(
                "{}: existing record has provenance {:?}, expected {:?}",
                out.display(),
                bad.provenance,
                provenance
            )));
        }
    }
    let done: HashSet<Vec<Vec<u32>>> = existing.iter().map(|rec| rec.canonical_kernel.clone()).collect();

    let classes = scan_orbits(params)?;
    let mut file = if resume {
        OpenOptions::new().create(true).append(true).open(out).map_err(io)?
    } else {
        File::create(out).map_err(io)?
    };

    let mut highlighted: Vec<ScanRecord> = Vec::new();
    let mut written = 0;
    let mut skipped = 0;
    for class in &classes {
        let key = class.canonical.basis_vecs();
        if done.contains(&key) {
            skipped += 1;
            if let Some(rec) = existing.iter().find(|rec| rec.canonical_kernel == key) {
                if rec.quotient_dim > 0 {
                    highlighted.push(rec.clone());
                }
            }
            continue;
        }
        let rec = record_for(params, class)?;
        file.write_all(rec.to_line().as_bytes()).map_err(io)?;
        file.flush().map_err(io)?;
        written += 1;
        if rec.quotient_dim > 0 {
            highlighted.push(rec);
        }
    }
    Ok(ScanSummary {
        l: params.l,
        n: params.n,
        r: params.r,
        dedup: provenance.dedup,
        orbits: classes.len(),
        kernels: classes.iter().map(|c| c.size).sum(),
        written,
        skipped,
        highlighted,
    })
}

/// The kernel of a record as a subspace, for re-verification.
pub fn record_kernel(rec: &ScanRecord) -> CliResult<Subspace> {
    let modulus = Modulus::new(rec.provenance.l).map_err(|e| CliError::Input(e.to_string()))?;
    let m = WedgeCoords::new(rec.provenance.n).dim();
    Ok(Subspace::span(modulus.field(), m, &rec.canonical_kernel))
}
