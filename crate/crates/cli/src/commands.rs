//! The six subcommands. Every command is deterministic given its flags and
//! seed; verdict-carrying commands exit 1 on any exact-equality failure and
//! support a `--self-test` mutation canary that must be caught.

use serde_json::json;

use sfock_core::dual_pairs::{self, PairSpec};
use sfock_core::fock::{self, FockState, Observable};
use sfock_core::hw_reps::{self, HWeight};
use sfock_core::orbit_rings::{self, DimMethod, GradedTable};
use sfock_core::poly::Poly;
use sfock_core::Scalar;

use crate::cache::MaybeCache;
use crate::report::{core_failure, Failure, Format, Table};

pub struct Ctx {
    pub seed: u64,
    pub height: u32,
    pub format: Format,
    pub self_test: bool,
    pub cache: MaybeCache,
}

pub fn parse_pair(text: &str) -> Result<PairSpec, Failure> {
    text.parse::<PairSpec>()
        .map_err(|e| Failure::Usage(e.to_string()))
}

/// `dim F_{degree}^H` for the pair with its `s`-parameter set to the given
/// stratum; the stratum-0 group has a zero-dimensional `W`, so only the
/// constants survive.
fn invariant_dim_cell(
    ctx: &mut Ctx,
    spec: &PairSpec,
    s_prime: usize,
    degree: u32,
) -> Result<u64, Failure> {
    if s_prime == 0 {
        return Ok(u64::from(degree == 0));
    }
    let spec_s = spec.with_s(s_prime).map_err(core_failure)?;
    ctx.cache
        .get_or_compute(
            "invariant-dim",
            &spec_s.to_string(),
            &format!("degree={degree}"),
            || dual_pairs::invariant_dim(&spec_s, degree).map(|d| d as u64),
        )
        .map_err(core_failure)
}

fn graded_dim_cell(
    ctx: &mut Ctx,
    spec: &PairSpec,
    s_prime: usize,
    k: u32,
) -> Result<u64, Failure> {
    let (seed, height) = (ctx.seed, ctx.height);
    ctx.cache
        .get_or_compute(
            "graded-dim-cross-checked",
            &spec.to_string(),
            &format!("stratum={s_prime},k={k},seed={seed},height={height}"),
            || orbit_rings::graded_dim_cross_checked(spec, s_prime, k, seed, height),
        )
        .map_err(core_failure)
}

fn rep_count_cell(
    ctx: &mut Ctx,
    spec: &PairSpec,
    s_prime: usize,
    k: u32,
) -> Result<u64, Failure> {
    ctx.cache
        .get_or_compute(
            "stratum-rep-count",
            &spec.to_string(),
            &format!("stratum={s_prime},k={k}"),
            || hw_reps::stratum_rep_count(spec, s_prime, k),
        )
        .map_err(core_failure)
}

fn kernel_rep_cell(
    ctx: &mut Ctx,
    spec: &PairSpec,
    s_prime: usize,
    k: u32,
) -> Result<u64, Failure> {
    ctx.cache
        .get_or_compute(
            "kernel-rep-count",
            &spec.to_string(),
            &format!("stratum={s_prime},k={k}"),
            || hw_reps::kernel_rep_count(spec, s_prime, k),
        )
        .map_err(core_failure)
}

/// The off-by-one canary shared by the verdict commands: the comparison
/// logic has to notice a perturbed cell.
fn self_test_canary(rows_pass: impl Fn(&[(u64, u64)]) -> bool) -> Result<String, Failure> {
    let healthy = vec![(1u64, 1u64), (3, 3), (5, 5)];
    let mut mutated = healthy.clone();
    mutated[2].1 += 1;
    if !rows_pass(&healthy) {
        return Err(Failure::Math(
            "self-test: comparison rejected equal dimensions".into(),
        ));
    }
    if rows_pass(&mutated) {
        return Err(Failure::Math(
            "self-test: injected off-by-one was not detected".into(),
        ));
    }
    Ok("self-test: injected off-by-one detected: ok".into())
}

// ---------------------------------------------------------------------------
// dirac
// ---------------------------------------------------------------------------

pub fn cmd_dirac(
    ctx: &mut Ctx,
    vars: usize,
    max_degree: u32,
    pairs: usize,
) -> Result<(), Failure> {
    if vars < 1 {
        return Err(Failure::Usage("--vars must be at least 1".into()));
    }
    let failures = fock::dirac_suite(vars, max_degree, pairs, ctx.seed, ctx.height, false)
        .map_err(core_failure)?;
    let passed = failures.is_empty();
    let mut canary_line = None;
    if ctx.self_test {
        let mutated = fock::dirac_suite(vars, max_degree, pairs, ctx.seed, ctx.height, true)
            .map_err(core_failure)?;
        if mutated.is_empty() {
            return Err(Failure::Math(
                "self-test: sign-flipped bracket was not detected".into(),
            ));
        }
        canary_line = Some(format!(
            "self-test: sign-flipped bracket produced {} nonzero defects: ok",
            mutated.len()
        ));
    }
    match ctx.format {
        Format::Json => {
            let doc = json!({
                "vars": vars,
                "max_state_degree": max_degree,
                "pairs": pairs,
                "seed": ctx.seed,
                "failures": failures
                    .iter()
                    .map(|f| json!({
                        "f": f.f.poly().to_text(),
                        "g": f.g.poly().to_text(),
                        "state": f.state.to_string(),
                        "defect": f.defect.to_string(),
                    }))
                    .collect::<Vec<_>>(),
                "self_test": canary_line,
                "pass": passed,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv => {
            let mut t = Table::new(&["vars", "max_state_degree", "pairs", "failures", "verdict"]);
            t.push(vec![
                vars.to_string(),
                max_degree.to_string(),
                pairs.to_string(),
                failures.len().to_string(),
                verdict(passed).into(),
            ]);
            print!("{}", t.render_csv());
        }
        Format::Pretty => {
            println!(
                "Dirac condition: {pairs} random quantizable pairs on {vars} coordinate(s), \
                 monomial states of degree <= {max_degree}"
            );
            for f in &failures {
                println!(
                    "  nonzero defect: f = {}, g = {}, state = {}, defect = {}",
                    f.f.poly(),
                    f.g.poly(),
                    f.state,
                    f.defect
                );
            }
            if let Some(line) = &canary_line {
                println!("{line}");
            }
            println!("RESULT: {}", verdict(passed));
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Math(format!(
            "{} nonzero Dirac defects",
            failures.len()
        )))
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

// ---------------------------------------------------------------------------
// commute
// ---------------------------------------------------------------------------

pub fn cmd_commute(ctx: &mut Ctx, spec: &PairSpec, max_degree: u32) -> Result<(), Failure> {
    let r = spec.real_rank();
    let mut rows = Vec::new();
    let mut all_pass = true;
    for s_prime in 0..=r {
        for k in 0..=max_degree {
            let inv = invariant_dim_cell(ctx, spec, s_prime, 2 * k)?;
            let graded = graded_dim_cell(ctx, spec, s_prime, k)?;
            let reps = rep_count_cell(ctx, spec, s_prime, k)?;
            let ok = inv == graded && graded == reps;
            all_pass &= ok;
            rows.push((s_prime, k, inv, graded, reps, ok));
        }
    }
    // odd-degree invariants must vanish
    let mut odd_ok = true;
    for s_prime in 0..=r {
        for k in 1..=max_degree {
            odd_ok &= invariant_dim_cell(ctx, spec, s_prime, 2 * k - 1)? == 0;
        }
    }
    all_pass &= odd_ok;

    let canary = if ctx.self_test {
        Some(self_test_canary(|cells| cells.iter().all(|&(a, b)| a == b))?)
    } else {
        None
    };

    match ctx.format {
        Format::Json => {
            let doc = json!({
                "pair": spec.to_string(),
                "rows": rows.iter().map(|&(s, k, inv, graded, reps, ok)| json!({
                    "stratum": s,
                    "degree": k,
                    "invariant_dim": inv,
                    "graded_dim": graded,
                    "rep_count": reps,
                    "pass": ok,
                })).collect::<Vec<_>>(),
                "odd_invariants_vanish": odd_ok,
                "self_test": canary,
                "pass": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv | Format::Pretty => {
            let mut t = Table::new(&[
                "stratum",
                "degree",
                "invariant_dim",
                "graded_dim",
                "rep_count",
                "verdict",
            ]);
            for &(s, k, inv, graded, reps, ok) in &rows {
                t.push(vec![
                    s.to_string(),
                    k.to_string(),
                    inv.to_string(),
                    graded.to_string(),
                    reps.to_string(),
                    verdict(ok).into(),
                ]);
            }
            if ctx.format == Format::Csv {
                print!("{}", t.render_csv());
            } else {
                println!("pair {spec}");
                println!("{}", dual_pairs::w_model(spec).describe());
                print!("{}", t.render_pretty());
                println!("odd-degree invariants vanish: {}", verdict(odd_ok));
                if let Some(line) = &canary {
                    println!("{line}");
                }
                println!("RESULT: {}", verdict(all_pass));
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Math("dimension triple equality failed".into()))
    }
}

// ---------------------------------------------------------------------------
// chain
// ---------------------------------------------------------------------------

pub fn cmd_chain(ctx: &mut Ctx, spec: &PairSpec, max_degree: u32) -> Result<(), Failure> {
    let r = spec.real_rank();
    let mut cells = Vec::new();
    for s_prime in 0..=r {
        for k in 0..=max_degree {
            let dim = graded_dim_cell(ctx, spec, s_prime, k)?;
            cells.push((s_prime, k, dim, DimMethod::IdealRank));
        }
    }
    let table = GradedTable::from_cells(spec, cells.iter().copied());
    table.check_consistency().map_err(core_failure)?;

    let mut kernel_rows = Vec::new();
    let mut all_pass = true;
    for s_prime in 1..=r {
        for k in 0..=max_degree {
            let upper = table.get(s_prime, k).unwrap();
            let lower = table.get(s_prime - 1, k).unwrap();
            let kernel = upper - lower;
            let reps = kernel_rep_cell(ctx, spec, s_prime, k)?;
            let ok = kernel == reps;
            all_pass &= ok;
            kernel_rows.push((s_prime, k, kernel, reps, ok));
        }
    }
    // degree-1 pieces are constant across strata >= 1
    let mut degree_one_ok = true;
    if max_degree >= 1 {
        for s_prime in 1..=r {
            degree_one_ok &= table.get(s_prime, 1) == Some(spec.p_dim() as u64);
        }
    }
    all_pass &= degree_one_ok;

    let canary = if ctx.self_test {
        Some(self_test_canary(|cells| cells.iter().all(|&(a, b)| a == b))?)
    } else {
        None
    };

    match ctx.format {
        Format::Json => {
            let mut doc = table.to_json();
            doc["kernels"] = json!(kernel_rows
                .iter()
                .map(|&(s, k, kernel, reps, ok)| json!({
                    "stratum": s,
                    "degree": k,
                    "restriction_kernel_dim": kernel,
                    "kernel_rep_count": reps,
                    "pass": ok,
                }))
                .collect::<Vec<_>>());
            doc["degree_one_constant"] = json!(degree_one_ok);
            doc["self_test"] = json!(canary);
            doc["pass"] = json!(all_pass);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv => {
            print!("{}", table.to_csv());
        }
        Format::Pretty => {
            println!("pair {spec}, strata 0..={r}");
            let mut t = Table::new(&["stratum", "degree", "dim", "method"]);
            for (s, k, dim, method) in table.iter() {
                t.push(vec![
                    s.to_string(),
                    k.to_string(),
                    dim.to_string(),
                    method.tag().into(),
                ]);
            }
            print!("{}", t.render_pretty());
            let mut kt = Table::new(&[
                "stratum",
                "degree",
                "restriction_kernel_dim",
                "kernel_rep_count",
                "verdict",
            ]);
            for &(s, k, kernel, reps, ok) in &kernel_rows {
                kt.push(vec![
                    s.to_string(),
                    k.to_string(),
                    kernel.to_string(),
                    reps.to_string(),
                    verdict(ok).into(),
                ]);
            }
            print!("{}", kt.render_pretty());
            println!("degree-1 dims constant across strata >= 1: {}", verdict(degree_one_ok));
            if let Some(line) = &canary {
                println!("{line}");
            }
            println!("RESULT: {}", verdict(all_pass));
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Math("costratified chain check failed".into()))
    }
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

pub fn cmd_spectrum(
    ctx: &mut Ctx,
    spec: &PairSpec,
    stratum: Option<usize>,
    max_degree: u32,
    states: &[String],
) -> Result<(), Failure> {
    let r = spec.real_rank();
    let s_prime = stratum.unwrap_or_else(|| spec.s_param());
    if s_prime > r {
        return Err(Failure::Usage(format!(
            "stratum {s_prime} out of range 0..={r}"
        )));
    }
    // reduced side: eigenvalue 2k with the graded dimension as multiplicity;
    // unreduced side restricted to invariants: dim F_j^H at eigenvalue j
    let mut rows = Vec::new();
    let mut all_pass = true;
    for j in 0..=2 * max_degree {
        let unreduced = invariant_dim_cell(ctx, spec, s_prime, j)?;
        let reduced = if j % 2 == 0 {
            graded_dim_cell(ctx, spec, s_prime, j / 2)?
        } else {
            0
        };
        let ok = unreduced == reduced;
        all_pass &= ok;
        rows.push((j, unreduced, reduced, ok));
    }

    // optional states: apply the energy operator and report eigenvalues
    let mut state_reports = Vec::new();
    for text in states {
        let phi = Poly::parse_text(spec.m(), text)
            .map_err(|e| Failure::Usage(format!("--state `{text}`: {e}")))?;
        let state = FockState::new(phi)
            .map_err(|e| Failure::Usage(format!("--state `{text}`: {e}")))?;
        let image = fock::quantize(&Observable::energy(spec.m()), &state)
            .map_err(core_failure)?;
        let degree = state.degree();
        let eigen = image == state.scale(&Scalar::from_int(degree as i64));
        state_reports.push((text.clone(), image.to_string(), eigen.then_some(degree)));
    }

    let canary = if ctx.self_test {
        Some(self_test_canary(|cells| cells.iter().all(|&(a, b)| a == b))?)
    } else {
        None
    };

    match ctx.format {
        Format::Json => {
            // invariant eigenstates per eigenvalue, as weight-polynomial
            // text forms
            let eigenstates = |j: u32| -> Result<Vec<String>, Failure> {
                if s_prime == 0 {
                    return Ok(if j == 0 { vec!["1".into()] } else { Vec::new() });
                }
                let spec_s = spec.with_s(s_prime).map_err(core_failure)?;
                Ok(dual_pairs::invariant_basis(&spec_s, j)
                    .map_err(core_failure)?
                    .iter()
                    .map(|p| p.to_text())
                    .collect())
            };
            let mut row_docs = Vec::new();
            for &(j, unreduced, reduced, ok) in &rows {
                row_docs.push(json!({
                    "eigenvalue": j,
                    "invariant_multiplicity": unreduced,
                    "reduced_multiplicity": reduced,
                    "eigenstates": eigenstates(j)?,
                    "pass": ok,
                }));
            }
            let doc = json!({
                "pair": spec.to_string(),
                "stratum": s_prime,
                "rows": row_docs,
                "states": state_reports.iter().map(|(input, image, eigen)| json!({
                    "state": input,
                    "energy_image": image,
                    "eigenvalue": eigen,
                })).collect::<Vec<_>>(),
                "self_test": canary,
                "pass": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv | Format::Pretty => {
            let mut t = Table::new(&[
                "eigenvalue",
                "invariant_multiplicity",
                "reduced_multiplicity",
                "verdict",
            ]);
            for &(j, unreduced, reduced, ok) in &rows {
                t.push(vec![
                    j.to_string(),
                    unreduced.to_string(),
                    reduced.to_string(),
                    verdict(ok).into(),
                ]);
            }
            if ctx.format == Format::Csv {
                print!("{}", t.render_csv());
            } else {
                println!("pair {spec}, stratum {s_prime}");
                print!("{}", t.render_pretty());
                for (input, image, eigen) in &state_reports {
                    match eigen {
                        Some(k) => println!("state {input}: energy eigenstate, eigenvalue {k}"),
                        None => println!("state {input}: not an eigenstate; image = {image}"),
                    }
                }
                if let Some(line) = &canary {
                    println!("{line}");
                }
                println!("RESULT: {}", verdict(all_pass));
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Math(
            "reduced and invariant spectra disagree".into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

pub fn cmd_invariants(ctx: &mut Ctx, spec: &PairSpec, max_degree: u32) -> Result<(), Failure> {
    let mut per_degree = Vec::new();
    for k in 0..=max_degree {
        let basis = dual_pairs::invariant_basis(spec, k).map_err(core_failure)?;
        let texts: Vec<String> = basis.iter().map(|p| p.to_text()).collect();
        per_degree.push((k, texts));
    }
    match ctx.format {
        Format::Json => {
            let doc = json!({
                "pair": spec.to_string(),
                "degrees": per_degree.iter().map(|(k, texts)| json!({
                    "degree": k,
                    "dim": texts.len(),
                    "basis": texts,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv => {
            let mut t = Table::new(&["degree", "dim", "poly"]);
            for (k, texts) in &per_degree {
                for p in texts {
                    t.push(vec![k.to_string(), texts.len().to_string(), p.clone()]);
                }
            }
            print!("{}", t.render_csv());
        }
        Format::Pretty => {
            println!("pair {spec}");
            println!("{}", dual_pairs::w_model(spec).describe());
            for (k, texts) in &per_degree {
                println!("degree {k}: dim {}", texts.len());
                for p in texts {
                    println!("  {p}");
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// reps
// ---------------------------------------------------------------------------

fn weight_text(w: &HWeight) -> String {
    let fmt = |v: &[u64]| {
        format!(
            "({})",
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    };
    match w {
        HWeight::Single(v) => fmt(v),
        HWeight::Pair(a, b) => format!("{}x{}", fmt(a), fmt(b)),
    }
}

pub fn cmd_reps(
    ctx: &mut Ctx,
    spec: &PairSpec,
    stratum: Option<usize>,
    max_degree: u32,
) -> Result<(), Failure> {
    let r = spec.real_rank();
    let strata: Vec<usize> = match stratum {
        Some(s) if s > r => {
            return Err(Failure::Usage(format!("stratum {s} out of range 0..={r}")))
        }
        Some(s) => vec![s],
        None => (1..=r).collect(),
    };
    let mut rows = Vec::new();
    for &s_prime in &strata {
        if s_prime == 0 {
            continue;
        }
        for k in 0..=max_degree {
            for d in hw_reps::enumerate_delta(s_prime, k) {
                let w = hw_reps::delta_weight(spec, &d).map_err(core_failure)?;
                let dim = hw_reps::hweight_dim(spec, &w).map_err(core_failure)?;
                let monomial = d
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| {
                        if a == 1 {
                            format!("d{}", i + 1)
                        } else {
                            format!("d{}^{a}", i + 1)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*");
                let monomial = if monomial.is_empty() {
                    "1".to_string()
                } else {
                    monomial
                };
                rows.push((s_prime, k, monomial, d.0.clone(), weight_text(&w), dim));
            }
        }
    }
    match ctx.format {
        Format::Json => {
            let doc = rows
                .iter()
                .map(|(s, k, monomial, exps, weight, dim)| {
                    json!({
                        "case": spec.case().tag(),
                        "params": spec.params_string(),
                        "stratum": s,
                        "degree": k,
                        "monomial": monomial,
                        "exponents": exps,
                        "weight": weight,
                        "dim": dim.to_string().parse::<u64>().ok(),
                    })
                })
                .collect::<Vec<_>>();
            println!("{}", serde_json::to_string_pretty(&json!(doc)).unwrap());
        }
        Format::Csv | Format::Pretty => {
            let mut t = Table::new(&[
                "case", "params", "stratum", "degree", "monomial", "weight", "dim",
            ]);
            for (s, k, monomial, _, weight, dim) in &rows {
                t.push(vec![
                    spec.case().tag().into(),
                    spec.params_string(),
                    s.to_string(),
                    k.to_string(),
                    monomial.clone(),
                    weight.clone(),
                    dim.to_string(),
                ]);
            }
            if ctx.format == Format::Csv {
                print!("{}", t.render_csv());
            } else {
                println!("pair {spec}");
                print!("{}", t.render_pretty());
            }
        }
    }
    Ok(())
}
