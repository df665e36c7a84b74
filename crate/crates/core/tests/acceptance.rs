//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints its own line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qaffine::fock::{Deformation, LatticeConfig, OrderingScheme};
use qaffine::verify::{NegativeControls, RelationReport, Status, Workspace};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn run(cfg: &LatticeConfig, suite: &str) -> Vec<RelationReport> {
    Workspace::new(cfg).and_then(|w| w.run_suite(suite)).unwrap_or_else(|e| panic!("{suite}: {e}"))
}

fn with(reports: &[RelationReport], id: &str) -> Vec<RelationReport> {
    reports.iter().filter(|r| r.id == id).cloned().collect()
}

/// Every report with one of `ids` must pass, and each id must be exercised at
/// least once. Returns the largest residual seen.
fn all_pass(reports: &[RelationReport], ids: &[&str], tol: f64) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for id in ids {
        let rs = with(reports, id);
        if !rs.iter().any(|r| r.status == Status::Pass) {
            return Err(format!("{id}: no passing instance"));
        }
        for r in &rs {
            match r.status {
                Status::Fail => return Err(format!("{id} [{}] residual {:.2e}", r.params_string(), r.residual)),
                Status::Pass if r.residual > tol => {
                    return Err(format!("{id} [{}] residual {:.2e} above {tol:.0e}", r.params_string(), r.residual))
                }
                Status::Pass => worst = worst.max(r.residual),
                Status::NotApplicable => {}
            }
        }
    }
    Ok(worst)
}

fn oscillators() -> Outcome {
    let cfg = LatticeConfig::new(2, 1, 2).with_q(Deformation::phase(0.3));
    let t = Instant::now();
    let reports = run(&cfg, "oscillators");
    let took = t.elapsed();
    let ids = [
        "car",
        "car-nilpotent",
        "ccr",
        "ccr-lowering",
        "fermion-boson-commute",
        "eq49a",
        "eq49b",
        "eq49c",
        "eq49d",
        "eq49e",
        "eq50-number",
        "eq50-raised",
    ];
    let worst = all_pass(&reports, &ids, 1e-10)?;
    if took >= Duration::from_secs(5) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("{} relations, worst residual {worst:.1e}, {took:.2?}", reports.len()))
}

fn braiding() -> Outcome {
    let ids = ["eq42", "eq42-mirror", "eq43", "eq43-mirror", "eq44", "eq45", "eq46", "eq47", "eq53", "eq53-mirror", "eq54"];
    let mut worst = 0.0f64;
    for q in [Deformation::phase(0.1), Deformation::phase(0.3), Deformation::real(1.3)] {
        let reports = run(&LatticeConfig::new(2, 1, 2).with_q(q), "braiding");
        worst = worst.max(all_pass(&reports, &ids, 1e-10).map_err(|e| format!("{q:?}: {e}"))?);
    }
    Ok(format!("nu 0.1, nu 0.3, q 1.3; worst residual {worst:.1e}"))
}

fn quantum() -> Outcome {
    let t = Instant::now();
    let mut worst = 0.0f64;
    for (m, n) in [(2, 1), (2, 2)] {
        let reports = run(&LatticeConfig::new(m, n, 2), "quantum");
        worst = worst.max(all_pass(&reports, &["eq7a", "eq7b", "eq7c", "eq7d"], 1e-10).map_err(|e| format!("({m},{n}): {e}"))?);
    }
    let took = t.elapsed();
    if took >= Duration::from_secs(120) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("(2,1) and (2,2), worst residual {worst:.1e}, {took:.2?}"))
}

fn serre() -> Outcome {
    let reports = run(&LatticeConfig::new(2, 2, 2), "serre");
    let worst = all_pass(&reports, &["eq8", "eq9-alphaM"], 1e-10)?;
    let mut seen = Vec::new();
    for id in ["eq9-alpha0-cyclic", "eq9-alpha0-skip"] {
        let rs = with(&reports, id);
        if rs.is_empty() {
            return Err(format!("{id} not reported"));
        }
        let fails = rs.iter().filter(|r| r.status == Status::Fail).count();
        seen.push(format!("{id} {}/{} pass", rs.len() - fails, rs.len()));
    }
    Ok(format!("worst residual {worst:.1e}; {}", seen.join(", ")))
}

fn central_charge() -> Outcome {
    let cases = [
        (LatticeConfig::new(2, 1, 2), 1.0),
        (LatticeConfig::new(2, 1, 2).with_ordering(OrderingScheme::Empty), 0.0),
        (LatticeConfig::new(2, 1, 2).with_lines(2), 2.0),
        (LatticeConfig::new(2, 1, 2).with_line_orderings(vec![OrderingScheme::Sea, OrderingScheme::Empty]), 1.0),
    ];
    let mut got = Vec::new();
    for (cfg, gamma) in cases {
        let reports = run(&cfg, "central-charge");
        all_pass(&reports, &["central-charge", "central-charge-boundary"], 1e-12)?;
        let stated: f64 = with(&reports, "central-charge")[0].param("gamma").unwrap().parse().unwrap();
        if stated != gamma {
            return Err(format!("expected gamma {gamma}, checked {stated}"));
        }
        got.push(format!("{gamma}"));
    }
    Ok(format!("bulk eigenvalues sea/empty/2 sea/sea+empty = {}", got.join("/")))
}

fn coproduct() -> Outcome {
    let mut controls = 0;
    let mut worst = 0.0f64;
    for (m, n) in [(2, 1), (2, 2)] {
        let reports = run(&LatticeConfig::new(m, n, 2), "coproduct");
        worst = worst.max(all_pass(&reports, &["eq57", "coproduct-split"], 1e-10)?);
        for r in with(&reports, "eq57-wrong-q-alpha") {
            match r.status {
                Status::Fail => return Err(format!("wrong q_alpha not detected [{}]", r.params_string())),
                Status::Pass => controls += 1,
                Status::NotApplicable => {}
            }
        }
    }
    if controls == 0 {
        return Err("no applicable q_alpha control".into());
    }
    Ok(format!("worst residual {worst:.1e}; {controls} q_alpha controls broken as expected"))
}

fn classical_limit() -> Outcome {
    let mut worst = 0.0f64;
    for (m, n) in [(2, 1), (2, 2)] {
        let cfg = LatticeConfig::new(m, n, 2);
        let reports = run(&cfg, "classical-limit");
        all_pass(&reports, &["classical-coincide", "classical-eq7c-rhs"], 1e-12)?;
        all_pass(&reports, &["classical-slope"], 0.1)?;
        let und = run(&cfg, "undeformed");
        let mut ids = vec!["eq2a", "eq2b", "eq2c", "eq2d", "eq3"];
        if n >= 2 {
            ids.push("eq4-alphaM");
        }
        worst = worst.max(all_pass(&und, &ids, 1e-10)?);
        if und.iter().any(|r| r.status == Status::Fail) {
            return Err("undeformed suite has failures".into());
        }
    }
    Ok(format!("q=1 sets coincide; undeformed relations worst residual {worst:.1e}"))
}

fn cartan_weyl() -> Outcome {
    let small = run(&LatticeConfig::new(2, 1, 2), "cartan-weyl");
    all_pass(&small, &["eq1b", "eq6-correspondence"], 1e-10)?;
    let cfg = LatticeConfig::new(2, 1, 4);
    let reports = run(&cfg, "cartan-weyl");
    all_pass(&reports, &["eq1b", "eq1a-anomaly"], 1e-10)?;
    all_pass(&reports, &["eq1a-linear"], 1e-8)?;
    let scalars: Vec<String> = with(&reports, "eq1a-linear")
        .iter()
        .map(|r| format!("a={} s1={} s2={}", r.param("a").unwrap(), r.param("s1").unwrap(), r.param("s2").unwrap()))
        .collect();
    Ok(format!("(1b) passes at S=2 and S=4; {}", scalars.join(", ")))
}

fn negative_controls() -> Outcome {
    let cfg = LatticeConfig::new(2, 1, 2);
    let mut out = Vec::new();
    for name in ["drop-affine-delta", "flip-disorder-sign", "flip-q-alpha"] {
        let ws = Workspace::with_controls(&cfg, NegativeControls::parse(name).unwrap()).map_err(|e| e.to_string())?;
        let reports = ws.run_all().map_err(|e| e.to_string())?;
        let fails = reports.iter().filter(|r| r.status == Status::Fail).count();
        if fails == 0 {
            return Err(format!("{name} left every suite passing"));
        }
        out.push(format!("{name}: {fails} failures"));
    }
    Ok(out.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oscillator suite", oscillators),
        ("braiding suite", braiding),
        ("quantum suite", quantum),
        ("Serre suites", serre),
        ("central charge", central_charge),
        ("coproduct", coproduct),
        ("classical limit", classical_limit),
        ("Cartan-Weyl spot checks", cartan_weyl),
        ("negative-control sensitivity", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
