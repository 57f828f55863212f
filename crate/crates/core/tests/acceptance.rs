//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Exact criteria compare with zero; timing budgets are wall-clock
//! on the test profile.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilhecke::certificate::{
    cert_main, cert_verify, combination_value, disprove_by_projection, oracle_membership, OracleOutcome,
    ProjectionVerdict,
};
use nilhecke::coxeter::{preset, CoxeterGroup};
use nilhecke::descent::DescentAlgebra;
use nilhecke::equivariant::bundled_fixtures;
use nilhecke::nilhecke::NilHecke;
use nilhecke::poly::{Monomial, Polynomial};
use nilhecke::selftest::{self, SelftestConfig, DEFAULT_SEED};

const POSITIVITY_TOLERANCE: f64 = 1e-9;
const KEY_IDENTITY_BUDGET: Duration = Duration::from_secs(5);
const CERTIFICATE_BUDGET: Duration = Duration::from_secs(30);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const FIXTURE_BUDGET: Duration = Duration::from_secs(5);
const ANTISYMMETRIZER_DEGREE: u32 = 6;

const IDENTITY_PRESETS: [&str; 10] = ["A1xA1", "A2", "B2", "B2_sym", "G2", "G2_sym", "I2_5", "A3", "B3", "H3"];
const CERT_PRESETS: [&str; 7] = ["A1xA1", "A2", "B2", "B2_sym", "I2_5", "G2", "G2_sym"];

type Verdict = Result<String, String>;

fn pairs(g: &CoxeterGroup) -> Vec<(usize, usize)> {
    (0..g.rank())
        .flat_map(|k| (k + 1..g.rank()).map(move |l| (k, l)))
        .collect()
}

fn within(t: Instant, budget: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    if e <= budget {
        Ok(e)
    } else {
        Err(format!("took {e:.2?}, budget {budget:?}"))
    }
}

fn groups(names: &[&str]) -> Vec<CoxeterGroup> {
    names.iter().map(|n| preset(n).expect("preset")).collect()
}

fn criterion_1_2(groups: &[CoxeterGroup]) -> (Verdict, Verdict) {
    let t = Instant::now();
    let mut count = 0;
    let mut residual_fail = None;
    let mut shape_fail = None;
    for g in groups {
        let alg = DescentAlgebra::new(g);
        for (k, l) in pairs(g) {
            count += 1;
            let name = format!("{} ({},{})", g.label().unwrap_or("?"), k + 1, l + 1);
            match alg.key_identity_check(k, l) {
                Ok(r) => {
                    if !r.residual.is_zero() {
                        residual_fail.get_or_insert(format!("{name}: nonzero residual"));
                    }
                    if !r.lower_order_vanishes() {
                        shape_fail.get_or_insert(format!("{name}: lower-order term nonzero"));
                    }
                    if !r.leading_coefficients_match() {
                        shape_fail.get_or_insert(format!("{name}: leading coefficients differ from +-Delta"));
                    }
                }
                Err(e) => {
                    residual_fail.get_or_insert(format!("{name}: {e}"));
                }
            }
        }
    }
    let time = within(t, KEY_IDENTITY_BUDGET);
    let first = match (residual_fail, time) {
        (Some(f), _) => Err(f),
        (None, Err(e)) => Err(e),
        (None, Ok(e)) => Ok(format!("{count} pairs, residual 0, {e:.2?}")),
    };
    let second = match shape_fail {
        Some(f) => Err(f),
        None => Ok(format!("{count} pairs, lower-order terms 0, leading coefficients +-Delta")),
    };
    (first, second)
}

fn criterion_3(groups: &[CoxeterGroup]) -> Verdict {
    let mut count = 0;
    for g in groups {
        for (k, l) in pairs(g) {
            let name = format!("{} ({},{})", g.label().unwrap_or("?"), k + 1, l + 1);
            let data = g.rank2_root_data(k, l).map_err(|e| format!("{name}: {e}"))?;
            let a: BTreeSet<&Polynomial> = data.sequence_k.iter().collect();
            let b: BTreeSet<&Polynomial> = data.sequence_l.iter().collect();
            if a != b || a.len() != data.m as usize {
                return Err(format!("{name}: sequences differ as sets"));
            }
            let one = Polynomial::one(g.field(), g.rank());
            let pk = data.sequence_k.iter().fold(one.clone(), |acc, r| &acc * r);
            let pl = data.sequence_l.iter().fold(one, |acc, r| &acc * r);
            if pk != data.delta || pl != data.delta {
                return Err(format!("{name}: product differs from Delta"));
            }
            // independent of the library's own soft check
            for r in data.sequence_k.iter().chain(&data.sequence_l) {
                for (mono, c) in r.terms() {
                    let on_pair = mono.0.iter().enumerate().all(|(v, &e)| e == 0 || v == k || v == l);
                    if !on_pair || c.to_f64() < -POSITIVITY_TOLERANCE {
                        return Err(format!("{name}: root {r} is not a positive combination"));
                    }
                }
            }
            if !g.positivity_soft_check(&data) {
                return Err(format!("{name}: library positivity check failed"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs, set-equal sequences, products = Delta, positivity at {POSITIVITY_TOLERANCE:e}"))
}

fn criterion_4() -> Verdict {
    let t = Instant::now();
    let mut ms = BTreeSet::new();
    let mut terms = 0;
    for g in groups(&CERT_PRESETS) {
        let alg = DescentAlgebra::new(&g);
        let name = g.label().unwrap_or("?").to_string();
        let cert = cert_main(&g, 0, 1).map_err(|e| format!("{name}: {e}"))?;
        let report = cert_verify(&alg, &cert).map_err(|e| format!("{name}: {e}"))?;
        if !report.ok || !report.residual.is_zero() {
            return Err(format!("{name}: residual nonzero"));
        }
        if cert.target != alg.demazure_braid_element(0, 1).map_err(|e| e.to_string())? {
            return Err(format!("{name}: certificate target is not B^D"));
        }
        ms.insert(g.m(0, 1));
        terms += cert.term_count();
    }
    if ms != BTreeSet::from([2, 3, 4, 5, 6]) {
        return Err(format!("m values covered: {ms:?}"));
    }
    let e = within(t, CERTIFICATE_BUDGET)?;
    Ok(format!("m = 2..6 over {} presets, {terms} terms, residual 0, {e:.2?}", CERT_PRESETS.len()))
}

fn criterion_5() -> Verdict {
    let t = Instant::now();
    let mut notes = Vec::new();
    for name in ["A1xA1", "A2"] {
        let g = preset(name).map_err(|e| e.to_string())?;
        let alg = DescentAlgebra::new(&g);
        let m = g.m(0, 1);
        let cap = m + 2;
        let target = alg.demazure_braid_element(0, 1).map_err(|e| e.to_string())?;
        match oracle_membership(&alg, &target, cap as usize, cap).map_err(|e| format!("{name}: {e}"))? {
            OracleOutcome::Member { combination } => {
                let value = combination_value(&alg, &combination).map_err(|e| e.to_string())?;
                if value != target {
                    return Err(format!("{name}: oracle combination does not sum to B^D"));
                }
                notes.push(format!("{name}: {} terms at L=d={cap}", combination.len()));
            }
            OracleOutcome::NotFoundWithinCaps { .. } => {
                return Err(format!("{name}: B^D not found at L=d={cap}"));
            }
        }
        for i in 0..g.rank() {
            match disprove_by_projection(&alg, &alg.letter(i)).map_err(|e| e.to_string())? {
                ProjectionVerdict::NotInIdeal { .. } => {}
                ProjectionVerdict::Inconclusive => {
                    return Err(format!("{name}: G{} not disproved", i + 1));
                }
            }
        }
    }
    let e = within(t, ORACLE_BUDGET)?;
    Ok(format!("{}; single letters not in ideal; {e:.2?}", notes.join(", ")))
}

fn criterion_6(groups: &[CoxeterGroup]) -> Verdict {
    let mut checked = 0;
    for g in groups {
        let h = NilHecke::new(g);
        let monomials: Vec<Polynomial> = (0..=ANTISYMMETRIZER_DEGREE)
            .flat_map(|d| Monomial::of_degree(g.rank(), d))
            .map(|mono| Polynomial::from_terms(g.field(), g.rank(), [(mono, g.field().one())]))
            .collect();
        for (k, l) in pairs(g) {
            let name = format!("{} ({},{})", g.label().unwrap_or("?"), k + 1, l + 1);
            let data = g.rank2_root_data(k, l).map_err(|e| e.to_string())?;
            let w0 = h.word(&CoxeterGroup::alternating(k, l, data.m as usize));
            let two_m = Polynomial::from_int(g.field(), g.rank(), 2 * data.m as i64);
            if h.act(&w0, &data.delta) != two_m {
                return Err(format!("{name}: D_w0(Delta) = {}", h.act(&w0, &data.delta)));
            }
            for f in &monomials {
                let a = h.antisymmetrizer_over_delta(k, l, f).map_err(|e| format!("{name}: {e}"))?;
                if a != h.act(&w0, f) {
                    return Err(format!("{name}: antisymmetrizer differs from D_w0 on {f}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("D_w0(Delta) = 2m on all pairs, antisymmetrizer = D_w0 on {checked} monomial cases up to degree {ANTISYMMETRIZER_DEGREE}"))
}

fn criterion_7() -> Verdict {
    let cfg = SelftestConfig::default();
    let required = [
        "demazure_square_zero",
        "twisted_leibniz",
        "demazure_braid",
        "embed_homomorphism",
        "braid_images_vanish",
        "strategy_independence",
    ];
    let report = selftest::run(&cfg)?;
    if let Some(f) = report.failures().next() {
        return Err(format!(
            "{} on {}: {}",
            f.property,
            f.group,
            f.failure.as_deref().unwrap_or("failed")
        ));
    }
    for name in required {
        if report.subset(&[name]).count() == 0 {
            return Err(format!("property {name} did not run"));
        }
    }
    let cases: usize = report.results.iter().map(|r| r.cases).sum();
    Ok(format!(
        "{} property runs, {cases} cases, seed {DEFAULT_SEED}, degree {} exhaustive + {} random",
        report.results.len(),
        cfg.degree_cap,
        cfg.random_cases
    ))
}

fn criterion_8() -> Verdict {
    let t = Instant::now();
    let fixtures = bundled_fixtures().map_err(|e| e.to_string())?;
    let mut descending = 0;
    let mut sign_witness = None;
    for fx in &fixtures {
        let g = fx.build_group().map_err(|e| e.to_string())?;
        let module = fx.module(&g).map_err(|e| format!("{}: {e}", fx.name))?;
        let results: Vec<_> = (0..g.rank()).map(|i| module.descent_check(i)).collect();
        if fx.name == "a1_sign" {
            sign_witness = results[0].as_ref().err().map(|f| f.remainder.to_string());
        }
        if results.iter().all(|r| r.is_ok()) {
            let ops: Vec<_> = results.into_iter().map(|r| r.unwrap()).collect();
            for (k, l) in pairs(&g) {
                let report = module.braid_check(&ops[k], &ops[l]);
                if !report.is_zero() {
                    return Err(format!("{}: braid difference for ({},{})", fx.name, k + 1, l + 1));
                }
            }
            descending += 1;
        }
    }
    if sign_witness.as_deref() != Some("2") {
        return Err(format!("sign module witness: {sign_witness:?}"));
    }
    let e = within(t, FIXTURE_BUDGET)?;
    Ok(format!(
        "{descending}/{} fixtures descend with zero braid differences, sign module remainder 2, {e:.2?}",
        fixtures.len()
    ))
}

fn main() -> ExitCode {
    let identity_groups = groups(&IDENTITY_PRESETS);
    let (c1, c2) = criterion_1_2(&identity_groups);
    let verdicts = [
        ("1 key identity", c1),
        ("2 lower-order terms and leading coefficients", c2),
        ("3 root sequences", criterion_3(&identity_groups)),
        ("4 main certificates", criterion_4()),
        ("5 oracle agreement", criterion_5()),
        ("6 D_w0 and antisymmetrizer", criterion_6(&identity_groups)),
        ("7 property suites", criterion_7()),
        ("8 descent fixtures", criterion_8()),
    ];
    let mut failed = 0;
    for (name, v) in &verdicts {
        match v {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", verdicts.len() - failed, verdicts.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
