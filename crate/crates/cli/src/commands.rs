//! Command implementations. Each returns the human-readable text, a JSON
//! value with a stable schema, and an exit code.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use unram_core::cohomology::unramified_quotient;
use unram_core::extension::{delta_pairs, fan, isoclinic_eq, reduce_radical, CommutatorForm, IsoclinismMode};
use unram_core::fflinalg::{Caps, Modulus, Subspace, WedgeCoords};
use unram_core::oracle::{agreement_sweep, derived_form, isoclinic_variant, Cocycle, Disagreement};
use unram_core::projmodel::verify_action_claims;
use unram_core::random::{random_form, random_symmetric};

use crate::error::{CliError, CliResult, EXIT_OK, EXIT_VIOLATION};
use crate::problem::ProblemFile;
use crate::scan::{run_scan, ScanParams};

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub caps: Caps,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            caps: Caps::default(),
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub warnings: Vec<String>,
    pub exit: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            warnings: Vec::new(),
            exit: EXIT_OK,
        }
    }
}

fn load_form(p: &ProblemFile, s: &Settings) -> CliResult<CommutatorForm> {
    if p.n > s.caps.max_n {
        return Err(CliError::Cap(format!("n = {} exceeds --cap-n {}", p.n, s.caps.max_n)));
    }
    p.to_form()
}

fn rows(sub: &Subspace) -> Value {
    json!(sub.basis_vecs())
}

pub fn cmd_fan(p: &ProblemFile, complete: bool, s: &Settings) -> CliResult<Report> {
    let form = load_form(p, s)?;
    let sigma = fan(&form, complete, &s.caps).map_err(|e| CliError::core("fan", e))?;
    let name = if complete { "Σ̄" } else { "Σ" };
    let mut text = String::new();
    if sigma.is_empty() {
        writeln!(text, "{name} = ∅ (0 subgroups)").unwrap();
    } else {
        writeln!(text, "{name}: {} subgroups", sigma.len()).unwrap();
        for sub in sigma.iter() {
            writeln!(text, "  dim {}: {sub}", sub.dim()).unwrap();
        }
    }
    let json = json!({
        "command": "fan",
        "complete": complete,
        "count": sigma.len(),
        "subgroups": sigma.iter().map(rows).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

pub fn cmd_delta_pairs(p: &ProblemFile, include_trivial: bool, s: &Settings) -> CliResult<Report> {
    let form = load_form(p, s)?;
    let pairs = delta_pairs(&form, include_trivial, &s.caps).map_err(|e| CliError::core("delta-pairs", e))?;
    let mut text = format!("{} maximal delta-pairs (I, D)\n", pairs.len());
    for pair in &pairs {
        writeln!(text, "  I = {}  D = {}", pair.i, pair.d).unwrap();
    }
    let json = json!({
        "command": "delta-pairs",
        "include_trivial": include_trivial,
        "count": pairs.len(),
        "pairs": pairs.iter().map(|pr| json!({"I": rows(&pr.i), "D": rows(&pr.d)})).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

pub fn cmd_unramified(p: &ProblemFile, s: &Settings) -> CliResult<Report> {
    let form = load_form(p, s)?;
    let rep = unramified_quotient(&form, &s.caps).map_err(|e| CliError::core("unramified quotient", e))?;
    let mut text = format!(
        "r2_sigma dim {}, r2_min dim {}, quotient {}\n",
        rep.r2_sigma.dim(),
        rep.r2_min.dim(),
        rep.quotient_dim
    );
    for c in &rep.quotient_basis {
        writeln!(text, "  representative: {c}").unwrap();
    }
    let json = json!({
        "command": "unramified",
        "r2_sigma": rows(&rep.r2_sigma),
        "r2_min": rows(&rep.r2_min),
        "quotient_dim": rep.quotient_dim,
        "quotient_basis": rep.quotient_basis.iter().map(|c| json!(c.coords())).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

pub fn cmd_isoclinic(a: &ProblemFile, b: &ProblemFile, orbit: bool, s: &Settings) -> CliResult<Report> {
    let fa = load_form(a, s)?;
    let fb = load_form(b, s)?;
    let mode = if orbit {
        IsoclinismMode::GlOrbit
    } else {
        IsoclinismMode::Fixed
    };
    let res = isoclinic_eq(&fa, &fb, mode, &s.caps).map_err(|e| CliError::core("isoclinism", e))?;
    let mode_name = if orbit { "gl_orbit" } else { "fixed" };
    let mut text = format!(
        "isoclinic ({mode_name}): {}\n",
        if res.equivalent { "yes" } else { "no" }
    );
    if let Some(g) = &res.witness {
        writeln!(text, "witness g with wedge^2(g)(ker lambda_a) = ker lambda_b:\n{g}").unwrap();
    }
    let json = json!({
        "command": "isoclinic",
        "mode": mode_name,
        "equivalent": res.equivalent,
        "witness": res.witness.as_ref().map(|g| g.to_rows()),
    });
    Ok(Report::ok(text, json))
}

pub fn cmd_reduce(p: &ProblemFile, s: &Settings) -> CliResult<Report> {
    let form = load_form(p, s)?;
    let red = reduce_radical(&form).map_err(|e| CliError::core("radical reduction", e))?;
    let reduced = ProblemFile::from_form(&red.reduced);
    let mut text = format!(
        "radical dim {}: {}\nreduced form (n = {}, r = {}):\n{}",
        red.radical.dim(),
        red.radical,
        reduced.n,
        reduced.r,
        reduced.to_canonical_string()
    );
    writeln!(text, "witness (old -> new coordinates):\n{}", red.witness).unwrap();
    let json = json!({
        "command": "reduce",
        "radical": rows(&red.radical),
        "reduced": reduced,
        "witness": red.witness.to_rows(),
    });
    Ok(Report::ok(text, json))
}

fn describe(d: &Disagreement) -> String {
    match d {
        Disagreement::Liftable {
            sigma,
            criterion,
            oracle,
        } => {
            format!("sigma = {sigma}: is_liftable {criterion}, preimage abelian {oracle}")
        }
        Disagreement::Pair {
            i,
            d,
            criterion,
            oracle,
        } => {
            format!("I = {i}, D = {d}: delta-pair {criterion}, preimages commute {oracle}")
        }
    }
}

/// Random forms with random symmetric cocycle perturbations; for each, the
/// linear-algebra answers are compared with group computations over every
/// subspace and every nested pair.
pub fn cmd_oracle_verify(l: u32, n: usize, samples: usize, s: &Settings) -> CliResult<Report> {
    let modulus = Modulus::new(l).map_err(|e| CliError::Input(format!("--l: {e}")))?;
    if n < 2 {
        return Err(CliError::Input(format!("--n: n >= 2 required, found {n}")));
    }
    if n > s.caps.max_n {
        return Err(CliError::Cap(format!("n = {n} exceeds --cap-n {}", s.caps.max_n)));
    }
    let m = WedgeCoords::new(n).dim();
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut subspaces_per_form = 0;
    let mut pairs = 0;
    let mut first_failure: Option<(Vec<Vec<u32>>, String)> = None;
    let mut failures = 0usize;
    for _ in 0..samples {
        let r = rng.gen_range(1..=m);
        let form = random_form(&mut rng, modulus, n, r);
        let pert = random_symmetric(&mut rng, modulus.field(), n, r);
        let cocycle = isoclinic_variant(&Cocycle::new(form.clone()), &pert).expect("symmetric perturbation");
        let report = agreement_sweep(&cocycle, &s.caps).map_err(|e| CliError::core("oracle sweep", e))?;
        subspaces_per_form = report.subspaces;
        pairs += report.pairs;
        let derived = derived_form(&cocycle).map_err(|e| CliError::core("derived form", e))?;
        let mut problems: Vec<String> = report.disagreements.iter().map(describe).collect();
        if derived.kernel() != form.kernel() {
            problems.push("commutators of the group do not reproduce lambda".to_string());
        }
        failures += problems.len();
        if first_failure.is_none() {
            if let Some(p) = problems.into_iter().next() {
                first_failure = Some((form.lambda().to_rows(), p));
            }
        }
    }
    let mut text = String::new();
    match &first_failure {
        None => writeln!(
            text,
            "{samples} forms × {subspaces_per_form} subspaces ({pairs} nested pairs): all agree"
        )
        .unwrap(),
        Some((lambda, what)) => writeln!(
            text,
            "{failures} disagreements over {samples} forms; first in lambda = {lambda:?}: {what}"
        )
        .unwrap(),
    }
    let json = json!({
        "command": "oracle-verify",
        "l": l,
        "n": n,
        "seed": s.seed,
        "forms": samples,
        "subspaces_per_form": subspaces_per_form,
        "pairs": pairs,
        "disagreements": failures,
        "first_counterexample": first_failure.as_ref().map(|(lambda, what)| json!({"lambda": lambda, "detail": what})),
    });
    Ok(Report {
        text,
        json,
        warnings: Vec::new(),
        exit: if failures == 0 { EXIT_OK } else { EXIT_VIOLATION },
    })
}

pub fn cmd_projcheck(p: &ProblemFile, q: Option<u32>, s: &Settings) -> CliResult<Report> {
    let form = load_form(p, s)?;
    let rep = verify_action_claims(&form, q, &s.caps).map_err(|e| CliError::core("projective model", e))?;
    let mut text = format!(
        "F_{} (zeta = {}), {} factor(s) of dimension {}\n",
        rep.q, rep.zeta, rep.factors, rep.factor_dim
    );
    for (k, (name, outcome)) in rep.claims().iter().enumerate() {
        let status = if outcome.holds { "pass" } else { "FAIL" };
        writeln!(text, "claim {}: {name}: {status} ({} checked)", k + 1, outcome.checked).unwrap();
        if let Some(f) = &outcome.failure {
            writeln!(text, "  first failure: {f}").unwrap();
        }
    }
    writeln!(text, "fixed loci ({} subgroups):", rep.table.len()).unwrap();
    for row in &rep.table {
        writeln!(
            text,
            "  {}: liftable {}, fixed locus {}, {} components",
            row.sigma,
            row.liftable,
            if row.nonempty { "nonempty" } else { "empty" },
            row.components
        )
        .unwrap();
    }
    let exit = if rep.all_hold() { EXIT_OK } else { EXIT_VIOLATION };
    let json = json!({
        "command": "projcheck",
        "q": rep.q,
        "zeta": rep.zeta,
        "factors": rep.factors,
        "factor_dim": rep.factor_dim,
        "claims": rep.claims().iter().map(|(name, c)| json!({"claim": name, "holds": c.holds, "checked": c.checked, "failure": c.failure})).collect::<Vec<_>>(),
        "table": rep.table.iter().map(|row| json!({"sigma": rows(&row.sigma), "liftable": row.liftable, "nonempty": row.nonempty, "components": row.components})).collect::<Vec<_>>(),
        "all_hold": rep.all_hold(),
    });
    Ok(Report {
        text,
        json,
        warnings: Vec::new(),
        exit,
    })
}

pub fn cmd_scan(params: &ScanParams, out: &Path, resume: bool) -> CliResult<Report> {
    let summary = run_scan(params, out, resume)?;
    let mut text = format!(
        "(l={}, n={}, r={}): {} kernels in {} orbits ({:?}); {} written, {} already present\n",
        summary.l,
        summary.n,
        summary.r,
        summary.kernels,
        summary.orbits,
        summary.dedup,
        summary.written,
        summary.skipped
    );
    if summary.highlighted.is_empty() {
        writeln!(text, "no orbit with quotient_dim > 0").unwrap();
    }
    for rec in &summary.highlighted {
        writeln!(
            text,
            "** quotient_dim {} for lambda = {:?} (fan {}, delta-pairs {})",
            rec.quotient_dim, rec.lambda, rec.fan_size, rec.delta_pair_count
        )
        .unwrap();
    }
    let json = json!({
        "command": "scan",
        "out": out.display().to_string(),
        "summary": summary,
    });
    Ok(Report {
        text,
        json,
        warnings: params.warning().into_iter().collect(),
        exit: EXIT_OK,
    })
}
