//! Command-line surface for the exact singularity-spectrum computations.
//!
//! One job per invocation; deterministic text and JSON output. Exit codes:
//! 0 on success, 2 on input errors (parse failures, non-isolated or
//! degenerate input where forbidden), 3 on internal invariant violations.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;

use hodgespec::error::Error;
use hodgespec::groebner::Ideal;
use hodgespec::hodge_wh::{JumpingSpectrum, WhContext};
use hodgespec::milnor::{milnor_number, tjurina_number};
use hodgespec::newton::{newton_boundary, nondegeneracy_check, question_checks, NdContext};
use hodgespec::poly::{infer_weights, is_weighted_homogeneous, Polynomial, WeightSystem};
use hodgespec::rat::{parse_rat, Rat};
use hodgespec::series::spectrum_formula;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hodgespec",
    about = "Exact Hodge spectra, Hodge ideals, and jumping-ideal spectra of isolated hypersurface singularities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form spectrum of a weighted homogeneous germ
    Spectrum(Job),
    /// Milnor and Tjurina numbers
    Milnor(Job),
    /// One Hodge ideal I_k(alpha Z)
    HodgeIdeal(Job),
    /// Jumping-ideal spectrum (tau or mu variant)
    Jumping(Job),
    /// Verify that the three spectrum routes agree
    Verify(Job),
    /// Newton boundary facets and compact faces
    Newton(Job),
    /// Per-face non-degeneracy report
    NondegCheck(Job),
    /// Empirical checks of the spectrum-mass and monotonicity questions
    Questions(Job),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Milnor(_) => "milnor",
            Command::HodgeIdeal(_) => "hodge-ideal",
            Command::Jumping(_) => "jumping",
            Command::Verify(_) => "verify",
            Command::Newton(_) => "newton",
            Command::NondegCheck(_) => "nondeg-check",
            Command::Questions(_) => "questions",
        }
    }

    fn job(&self) -> &Job {
        match self {
            Command::Spectrum(j)
            | Command::Milnor(j)
            | Command::HodgeIdeal(j)
            | Command::Jumping(j)
            | Command::Verify(j)
            | Command::Newton(j)
            | Command::NondegCheck(j)
            | Command::Questions(j) => j,
        }
    }
}

#[derive(Args)]
struct Job {
    /// Polynomial, e.g. "x^5 + x^2*y^2 + y^5"
    #[arg(short = 'f', long = "poly")]
    poly: String,

    /// Comma-separated variable names (default: canonical x,y,z,w found
    /// in the polynomial)
    #[arg(long = "vars", value_delimiter = ',')]
    vars: Option<Vec<String>>,

    /// Comma-separated weights p/q (omitted: inferred, falling back to
    /// the Newton pipeline)
    #[arg(short = 'w', long = "weights", value_delimiter = ',')]
    weights: Option<Vec<String>>,

    /// Hodge-ideal index k
    #[arg(short = 'k', default_value_t = 0)]
    k: u32,

    /// Hodge-ideal parameter alpha in (0, 1]
    #[arg(long)]
    alpha: Option<String>,

    /// Jumping-ideal variant
    #[arg(long, value_enum, default_value_t = Variant::Tau)]
    variant: Variant,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Emit the candidate grid with its colengths
    #[arg(long)]
    grid_report: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Tau,
    Mu,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Pipeline {
    Wh(WeightSystem),
    Newton,
}

impl Pipeline {
    fn name(&self) -> &'static str {
        match self {
            Pipeline::Wh(_) => "wh",
            Pipeline::Newton => "newton",
        }
    }
}

struct Output {
    text: Vec<String>,
    result: serde_json::Value,
    checks: Vec<serde_json::Value>,
}

fn check(name: &str, status: &str, detail: String) -> serde_json::Value {
    json!({"name": name, "status": status, "detail": detail})
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvariantViolation(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Canonical variable list: names found in the text, restricted to
/// x, y, z, w in that order.
fn detect_variables(poly: &str) -> Result<Vec<String>, Error> {
    let canonical = ["x", "y", "z", "w"];
    let mut found: Vec<String> = Vec::new();
    let bytes = poly.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = std::str::from_utf8(&bytes[start..i])
                .expect("ascii")
                .to_string();
            if !canonical.contains(&name.as_str()) {
                return Err(Error::UnknownVariable(format!(
                    "{name} (pass --vars for non-canonical names)"
                )));
            }
            if !found.contains(&name) {
                found.push(name);
            }
        } else {
            i += 1;
        }
    }
    if found.is_empty() {
        return Err(Error::ConstantPolynomial);
    }
    found.sort_by_key(|n| canonical.iter().position(|c| c == n).expect("canonical"));
    Ok(found)
}

fn parse_rat_arg(text: &str, what: &str) -> Result<Rat, Error> {
    parse_rat(text).ok_or_else(|| Error::Syntax {
        position: 0,
        message: format!("invalid rational for {what}: `{text}`"),
    })
}

fn run(command: &Command) -> Result<ExitCode, Error> {
    let job = command.job();
    let variables = match &job.vars {
        Some(v) => v.clone(),
        None => detect_variables(&job.poly)?,
    };
    let f = hodgespec::parse_polynomial(&job.poly, &variables)?;

    let pipeline = match &job.weights {
        Some(ws) => {
            if ws.len() != variables.len() {
                return Err(Error::DimensionMismatch {
                    expected: variables.len(),
                    got: ws.len(),
                });
            }
            let weights = ws
                .iter()
                .map(|w| parse_rat_arg(w, "weight"))
                .collect::<Result<Vec<_>, _>>()?;
            Pipeline::Wh(WeightSystem::new(weights)?)
        }
        None => match infer_weights(&f)? {
            Some(w) => Pipeline::Wh(w),
            None => Pipeline::Newton,
        },
    };

    let alpha = match &job.alpha {
        Some(a) => parse_rat_arg(a, "alpha")?,
        None => Rat::one(),
    };

    let output = match command {
        Command::Spectrum(_) => cmd_spectrum(&f, &pipeline)?,
        Command::Milnor(_) => cmd_milnor(&f)?,
        Command::HodgeIdeal(_) => cmd_hodge_ideal(&f, &pipeline, job.k, &alpha)?,
        Command::Jumping(_) => cmd_jumping(&f, &pipeline, job.variant, job.grid_report)?,
        Command::Verify(_) => cmd_verify(&f, &pipeline, job.grid_report)?,
        Command::Newton(_) => cmd_newton(&f, &variables)?,
        Command::NondegCheck(_) => cmd_nondeg(&f, &variables)?,
        Command::Questions(_) => cmd_questions(&f)?,
    };

    match job.format {
        Format::Text => {
            // Name the chosen pipeline when it was decided by routing.
            if job.weights.is_none() && routing_matters(command) {
                println!("pipeline: {}", pipeline.name());
            }
            for line in &output.text {
                println!("{line}");
            }
        }
        Format::Json => {
            let mut input = json!({
                "poly": job.poly,
                "vars": variables,
            });
            if let Pipeline::Wh(w) = &pipeline {
                input["weights"] = json!(w
                    .weights()
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>());
            }
            if matches!(command, Command::HodgeIdeal(_)) {
                input["k"] = json!(job.k);
                input["alpha"] = json!(alpha.to_string());
            }
            if matches!(command, Command::Jumping(_)) {
                input["variant"] = json!(match job.variant {
                    Variant::Tau => "tau",
                    Variant::Mu => "mu",
                });
            }
            let envelope = json!({
                "command": command.name(),
                "input": input,
                "pipeline": pipeline.name(),
                "result": output.result,
                "checks": output.checks,
            });
            println!("{}", serde_json::to_string_pretty(&envelope).expect("json"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn routing_matters(command: &Command) -> bool {
    matches!(
        command,
        Command::Spectrum(_)
            | Command::HodgeIdeal(_)
            | Command::Jumping(_)
            | Command::Verify(_)
            | Command::Milnor(_)
    )
}

fn require_wh<'a>(f: &Polynomial, pipeline: &'a Pipeline) -> Result<&'a WeightSystem, Error> {
    match pipeline {
        Pipeline::Wh(w) => {
            if !is_weighted_homogeneous(f, w)? {
                return Err(Error::NotWeightedHomogeneous);
            }
            Ok(w)
        }
        Pipeline::Newton => Err(Error::RequiresWeightedHomogeneous),
    }
}

fn cmd_spectrum(f: &Polynomial, pipeline: &Pipeline) -> Result<Output, Error> {
    let w = require_wh(f, pipeline)?;
    let sp = spectrum_formula(w)?;
    Ok(Output {
        text: vec![sp.to_string()],
        result: json!({"spectrum": sp.to_json(), "mass": sp.eval_at_one()}),
        checks: vec![],
    })
}

fn cmd_milnor(f: &Polynomial) -> Result<Output, Error> {
    let mu = milnor_number(f)?;
    let tau = tjurina_number(f)?;
    let checks = vec![check(
        "isolated-singularity",
        "pass",
        format!("local colength of the Jacobian ideal is {mu}"),
    )];
    Ok(Output {
        text: vec![format!("mu = {mu}"), format!("tau = {tau}")],
        result: json!({"mu": mu, "tau": tau}),
        checks,
    })
}

fn format_ideal(ideal: &Ideal) -> String {
    let gens: Vec<String> = ideal
        .reduced_basis()
        .iter()
        .map(|g| g.to_string())
        .collect();
    format!("< {} >", gens.join(", "))
}

fn cmd_hodge_ideal(
    f: &Polynomial,
    pipeline: &Pipeline,
    k: u32,
    alpha: &Rat,
) -> Result<Output, Error> {
    let ideal = match pipeline {
        Pipeline::Wh(w) => {
            if !is_weighted_homogeneous(f, w)? {
                return Err(Error::NotWeightedHomogeneous);
            }
            let ctx = WhContext::new(f.clone(), w.clone())?;
            ctx.hodge_ideal(k, alpha)?.ideal
        }
        Pipeline::Newton => {
            let ctx = NdContext::new(f.clone())?;
            ctx.hodge_ideal(k, alpha)?
        }
    };
    let basis: Vec<String> = ideal
        .reduced_basis()
        .iter()
        .map(|g| g.to_string())
        .collect();
    Ok(Output {
        text: vec![format!("I_{k}(({alpha})Z) = {}", format_ideal(&ideal))],
        result: json!({"k": k, "alpha": alpha.to_string(), "basis": basis}),
        checks: vec![],
    })
}

fn grid_lines(sp: &JumpingSpectrum) -> Vec<String> {
    sp.colengths
        .iter()
        .map(|(beta, c)| format!("beta = {beta}: colength {c}"))
        .collect()
}

fn grid_json(sp: &JumpingSpectrum) -> serde_json::Value {
    serde_json::Value::Array(
        sp.colengths
            .iter()
            .map(|(beta, c)| json!({"beta": beta.to_string(), "colength": c}))
            .collect(),
    )
}

fn cmd_jumping(
    f: &Polynomial,
    pipeline: &Pipeline,
    variant: Variant,
    grid_report: bool,
) -> Result<Output, Error> {
    let mut checks = Vec::new();
    let (spectrum, grid): (JumpingSpectrum, Option<JumpingSpectrum>) = match pipeline {
        Pipeline::Wh(w) => {
            if !is_weighted_homogeneous(f, w)? {
                return Err(Error::NotWeightedHomogeneous);
            }
            let ctx = WhContext::new(f.clone(), w.clone())?;
            let sp = ctx.sp_tau()?;
            checks.push(check(
                "recursion-oracle-agreement",
                "pass",
                "both jumping-ideal routes agree at every candidate".into(),
            ));
            checks.push(check(
                "variant-equivalence",
                "info",
                "tau and mu jumping ideals coincide for weighted homogeneous germs".into(),
            ));
            (sp, None)
        }
        Pipeline::Newton => {
            let ctx = NdContext::new(f.clone())?;
            let sweep = ctx.sp_tau_mu()?;
            checks.push(check(
                "tau-identity-agreement",
                "pass",
                "recursion and filtration routes agree at every grid point".into(),
            ));
            checks.push(check(
                "mu-monotone",
                if sweep.mu_violations.is_empty() {
                    "pass"
                } else {
                    "fail"
                },
                format!("{} violations", sweep.mu_violations.len()),
            ));
            checks.push(check(
                "stabilized",
                if sweep.stabilized { "pass" } else { "fail" },
                "J^tau settles to <f, df> past the last candidate".into(),
            ));
            let sp = match variant {
                Variant::Tau => sweep.sp_tau,
                Variant::Mu => sweep.sp_mu,
            };
            (sp, None)
        }
    };
    let _ = grid;
    let mut text = vec![spectrum.sp.to_string()];
    if grid_report {
        text.extend(grid_lines(&spectrum));
    }
    let mut result = json!({
        "spectrum": spectrum.sp.to_json(),
        "mass": spectrum.sp.eval_at_one(),
    });
    if grid_report {
        result["grid"] = grid_json(&spectrum);
    }
    Ok(Output {
        text,
        result,
        checks,
    })
}

fn cmd_verify(f: &Polynomial, pipeline: &Pipeline, detail: bool) -> Result<Output, Error> {
    let w = require_wh(f, pipeline)?;
    let ctx = WhContext::new(f.clone(), w.clone())?;
    let report = ctx.verify_main_theorem()?;
    let mass = report.spectrum.eval_at_one();
    let line = if report.pass {
        format!("PASS: Sp_f == P_f == Sp_tau (mass {mass})")
    } else {
        format!(
            "FAIL: Sp_f = {}, P_f = {}, Sp_tau = {}",
            report.spectrum, report.hp_basis, report.sp_tau.sp
        )
    };
    let mut text = vec![line];
    if detail && !report.boundary_candidates.is_empty() {
        let flagged: Vec<String> = report
            .boundary_candidates
            .iter()
            .map(|b| b.to_string())
            .collect();
        text.push(format!(
            "boundary candidates (non-strict filtration level hit exactly): {}",
            flagged.join(", ")
        ));
    }
    let checks = vec![
        check(
            "spectrum-equals-hilbert-poincare",
            if report.spectrum == report.hp_basis {
                "pass"
            } else {
                "fail"
            },
            String::new(),
        ),
        check(
            "spectrum-equals-sp-tau",
            if report.spectrum == report.sp_tau.sp {
                "pass"
            } else {
                "fail"
            },
            String::new(),
        ),
        check(
            "mass-equals-milnor-number",
            if mass == report.mu as i64 {
                "pass"
            } else {
                "fail"
            },
            format!("mass {mass}, mu {}", report.mu),
        ),
    ];
    Ok(Output {
        text,
        result: json!({
            "pass": report.pass,
            "spectrum": report.spectrum.to_json(),
            "hilbert_poincare": report.hp_basis.to_json(),
            "sp_tau": report.sp_tau.sp.to_json(),
            "mu": report.mu,
            "tau": report.tau,
            "boundary_candidates": report
                .boundary_candidates
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>(),
        }),
        checks,
    })
}

fn format_exponent(m: &hodgespec::Exponent, variables: &[String]) -> String {
    let factors: Vec<String> =
        m.0.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    variables[i].clone()
                } else {
                    format!("{}^{}", variables[i], a)
                }
            })
            .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn cmd_newton(f: &Polynomial, variables: &[String]) -> Result<Output, Error> {
    let boundary = newton_boundary(f)?;
    let mut text = vec![format!("convenient: {}", boundary.convenient)];
    for (i, facet) in boundary.facets.iter().enumerate() {
        let coeffs: Vec<String> = facet.coeffs.iter().map(|c| c.to_string()).collect();
        text.push(format!("facet {i}: ({})", coeffs.join(", ")));
    }
    for face in &boundary.faces {
        let pts: Vec<String> = face
            .support
            .iter()
            .map(|m| format_exponent(m, variables))
            .collect();
        let facet_list: Vec<String> = face.facets.iter().map(|i| i.to_string()).collect();
        text.push(format!(
            "face dim {}: {{{}}} on facets [{}]",
            face.dim,
            pts.join(", "),
            facet_list.join(", ")
        ));
    }
    let result = json!({
        "convenient": boundary.convenient,
        "facets": boundary
            .facets
            .iter()
            .map(|l| json!(l.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
        "faces": boundary
            .faces
            .iter()
            .map(|face| {
                json!({
                    "dim": face.dim,
                    "support": face
                        .support
                        .iter()
                        .map(|m| format_exponent(m, variables))
                        .collect::<Vec<_>>(),
                    "facets": face.facets,
                })
            })
            .collect::<Vec<_>>(),
    });
    Ok(Output {
        text,
        result,
        checks: vec![],
    })
}

fn cmd_nondeg(f: &Polynomial, variables: &[String]) -> Result<Output, Error> {
    let report = nondegeneracy_check(f)?;
    let mut text = Vec::new();
    let mut faces_json = Vec::new();
    let mut checks = Vec::new();
    for face_report in &report.faces {
        let pts: Vec<String> = face_report
            .face
            .support
            .iter()
            .map(|m| format_exponent(m, variables))
            .collect();
        let verdict = if face_report.nondegenerate {
            "nondegenerate"
        } else {
            "degenerate"
        };
        text.push(format!(
            "face {{{}}}: f_sigma = {} -> {}",
            pts.join(", "),
            face_report.face_polynomial,
            verdict
        ));
        faces_json.push(json!({
            "support": pts,
            "f_sigma": face_report.face_polynomial.to_string(),
            "nondegenerate": face_report.nondegenerate,
        }));
        checks.push(check(
            "face-nondegenerate",
            if face_report.nondegenerate {
                "pass"
            } else {
                "fail"
            },
            format!("face {{{}}}", pts.join(", ")),
        ));
    }
    text.push(format!(
        "verdict: {}",
        if report.nondegenerate {
            "nondegenerate"
        } else {
            "degenerate"
        }
    ));
    Ok(Output {
        text,
        result: json!({
            "nondegenerate": report.nondegenerate,
            "faces": faces_json,
        }),
        checks,
    })
}

fn cmd_questions(f: &Polynomial) -> Result<Output, Error> {
    let ctx = NdContext::new(f.clone())?;
    let report = question_checks(&ctx)?;
    let yn = |b: bool| if b { "pass" } else { "fail" };
    let text = vec![
        format!(
            "Sp^tau(1) = {} vs tau = {}: {}",
            report.sp_tau_mass,
            report.tau,
            yn(report.tau_mass_matches)
        ),
        format!(
            "Sp^mu(1) = {} vs mu = {}: {}",
            report.sp_mu_mass,
            report.mu,
            yn(report.mu_mass_matches)
        ),
        format!("J^mu monotone on grid: {}", yn(report.mu_monotone)),
        format!(
            "J^tau stabilizes to <f, df>: {}",
            yn(report.sweep.stabilized)
        ),
    ];
    let checks = vec![
        check(
            "sp-tau-mass-equals-tjurina",
            yn(report.tau_mass_matches),
            format!("{} vs {}", report.sp_tau_mass, report.tau),
        ),
        check(
            "sp-mu-mass-equals-milnor",
            yn(report.mu_mass_matches),
            format!("{} vs {}", report.sp_mu_mass, report.mu),
        ),
        check("mu-monotone", yn(report.mu_monotone), String::new()),
        check("stabilized", yn(report.sweep.stabilized), String::new()),
    ];
    Ok(Output {
        text,
        result: json!({
            "sp_tau": report.sweep.sp_tau.sp.to_json(),
            "sp_mu": report.sweep.sp_mu.sp.to_json(),
            "mu": report.mu,
            "tau": report.tau,
            "mu_monotone": report.mu_monotone,
            "stabilized": report.sweep.stabilized,
            "refinement_requests": report
                .sweep
                .refinement_requests
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>(),
        }),
        checks,
    })
}
