//! Acceptance criteria 1–13, one line each. Runs without the test harness so
//! the lines are always shown.

use std::process::ExitCode;
use std::time::Instant;

use bethe_core::experiments::{run, ExperimentConfig, Report};
use bethe_core::Result;

fn cfg() -> ExperimentConfig {
    ExperimentConfig::default()
}

fn with_matrix(m: &str) -> ExperimentConfig {
    ExperimentConfig { matrix: Some(m.into()), ..cfg() }
}

fn with_family(f: &str) -> ExperimentConfig {
    ExperimentConfig { family: Some(f.into()), ..cfg() }
}

/// Runs every `(experiment, config)` pair; all checks of all reports must pass.
fn all(runs: &[(&str, ExperimentConfig)]) -> Result<(bool, String)> {
    let mut ok = true;
    let mut failed = Vec::new();
    for (name, c) in runs {
        let r: Report = run(name, c)?;
        for check in r.checks.iter().filter(|c| !c.passed) {
            failed.push(format!("{name}: {}", check.name));
        }
        ok &= r.passed();
    }
    let detail = if failed.is_empty() { format!("runs={}", runs.len()) } else { failed.join("; ") };
    Ok((ok, detail))
}

type Criterion = (u32, &'static str, Box<dyn Fn() -> Result<(bool, String)>>);

fn criteria() -> Vec<Criterion> {
    vec![
        (1, "defining relations and associativity", Box::new(|| all(&[("relations", cfg())]))),
        (2, "trace and quantum-minor forms of tau_k agree", Box::new(|| all(&[("tau-oracle", cfg())]))),
        (
            3,
            "B(diag(1,2,3)) commutes, qdet central for n <= 3",
            Box::new(|| {
                all(&[
                    ("commute", cfg()),
                    ("commute", ExperimentConfig { degree: Some(3), ..with_matrix("1,2") }),
                    ("commute", ExperimentConfig { degree: Some(3), ..with_matrix("1") }),
                ])
            }),
        ),
        (4, "omega(B(diag(1,2))) = B(diag(1,1/2))", Box::new(|| all(&[("omega-dual", cfg())]))),
        (
            5,
            "limits of B(diag(1,t)) and B(diag(1,2,t))",
            Box::new(|| all(&[("result2-1", with_family("1,t")), ("result2-1", with_family("1,2,t"))])),
        ),
        (
            6,
            "limits of B(C0 + t C1) with degenerate C0",
            Box::new(|| all(&[("result2-2", with_family("1+t,1+2t")), ("result2-2", with_family("1+t,1+2t,2"))])),
        ),
        (7, "depth-2 curve: iterated = nested = prediction", Box::new(|| all(&[("result1-curve", cfg())]))),
        (
            8,
            "shift of argument, Gaudin quadratics, Shuvalov limit",
            Box::new(|| all(&[("gaudin", with_matrix("1,2")), ("gaudin", cfg()), ("shuvalov", cfg())])),
        ),
        (9, "Poincare series of F(diag(1,1,2)) and F^(diag(1,2,0))", Box::new(|| all(&[("poincare", cfg())]))),
        (10, "eta_1(B(diag(1,2))) inside F^(diag(1,2,0))", Box::new(|| all(&[("incl", cfg())]))),
        (11, "Gelfand-Tsetlin inside the caterpillar limit", Box::new(|| all(&[("gt-caterpillar", cfg())]))),
        (12, "centralizer dimensions equal subalgebra dimensions", Box::new(|| all(&[("maximality", cfg())]))),
        (
            13,
            "strata counts 1;3 and 1;10;15",
            Box::new(|| {
                all(&[
                    ("strata", ExperimentConfig { n: Some(2), ..cfg() }),
                    ("strata", ExperimentConfig { n: Some(3), ..cfg() }),
                ])
            }),
        ),
    ]
}

fn main() -> ExitCode {
    let mut failures = 0;
    for (id, title, check) in criteria() {
        let start = Instant::now();
        let (ok, detail) = match check() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {id:>2} {}: {title} ({detail}, {:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
