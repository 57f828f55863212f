//! Batch verification verbs behind the `nilhecke` binary.
//!
//! Every verb produces a JSON report and an exit status: 0 when the check
//! holds, 1 on a mathematical failure (the report carries the residual),
//! 2 on a usage error (bad flags, unreadable files).

use std::path::PathBuf;

use serde::Serialize;

use crate::certificate::{
    cert_main, cert_verify, combination_value, disprove_by_projection, oracle_membership,
    CertError, OracleOutcome, ProjectionVerdict,
};
use crate::coxeter::{preset, CoxeterGroup};
use crate::descent::{DescentAlgebra, DescentError, FormalExpression};
use crate::equivariant::{bundled_fixtures, ModuleFixture};
use crate::json::{
    certificate_from_json, certificate_to_json, descent_to_json, to_pretty, CertificateRepr,
    GroupConfig, WordTermRepr,
};
use crate::selftest::{self, SelftestConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq)]
pub enum GroupSource {
    Preset(String),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verb {
    KeyIdentity,
    Certify,
    CheckCert(PathBuf),
    Oracle,
    DemoDescent,
    Selftest,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub verb: Verb,
    pub group: Option<GroupSource>,
    /// 1-based generator indices.
    pub pair: Option<(usize, usize)>,
    pub word_cap: Option<usize>,
    pub degree_cap: Option<u32>,
    pub out: Option<PathBuf>,
    /// Oracle target as an s-expression; defaults to `B^D` of the pair.
    pub target: Option<String>,
    /// Extra module fixture files for `demo-descent`.
    pub modules: Vec<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(verb: Verb) -> Self {
        RunConfig {
            verb,
            group: None,
            pair: None,
            word_cap: None,
            degree_cap: None,
            out: None,
            target: None,
            modules: Vec::new(),
            seed: selftest::DEFAULT_SEED,
        }
    }
}

/// Exit status plus the text to print (report JSON, or a usage message).
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn report<T: Serialize>(ok: bool, report: &T) -> Self {
        RunOutcome {
            exit: if ok { EXIT_OK } else { EXIT_FAILED },
            stdout: to_pretty(report),
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        RunOutcome {
            exit: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn load_group(src: &Option<GroupSource>) -> Result<CoxeterGroup, Usage> {
    match src {
        None => Err(Usage("a group is required: pass --preset NAME or --group FILE".into())),
        Some(GroupSource::Preset(name)) => Ok(preset(name)?),
        Some(GroupSource::File(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(GroupConfig::from_json_str(&text)?.build()?)
        }
    }
}

fn zero_based_pair(g: &CoxeterGroup, pair: (usize, usize)) -> Result<(usize, usize), Usage> {
    let (k, l) = pair;
    if k == 0 || l == 0 || k > g.rank() || l > g.rank() || k == l {
        return Err(Usage(format!(
            "--pair {k},{l} is not a pair of distinct generators in 1..={}",
            g.rank()
        )));
    }
    Ok((k - 1, l - 1))
}

fn all_pairs(g: &CoxeterGroup) -> Vec<(usize, usize)> {
    (0..g.rank())
        .flat_map(|k| (k + 1..g.rank()).map(move |l| (k, l)))
        .collect()
}

fn selected_pairs(g: &CoxeterGroup, pair: Option<(usize, usize)>) -> Result<Vec<(usize, usize)>, Usage> {
    match pair {
        Some(p) => Ok(vec![zero_based_pair(g, p)?]),
        None => Ok(all_pairs(g)),
    }
}

fn single_pair(g: &CoxeterGroup, pair: Option<(usize, usize)>) -> Result<(usize, usize), Usage> {
    match pair {
        Some(p) => zero_based_pair(g, p),
        None if g.rank() >= 2 => Ok((0, 1)),
        None => Err(Usage("the group has no pair of generators".into())),
    }
}

/// Runs one verb.
pub fn run(cfg: &RunConfig) -> RunOutcome {
    let result = match &cfg.verb {
        Verb::KeyIdentity => key_identity(cfg),
        Verb::Certify => certify(cfg),
        Verb::CheckCert(path) => check_cert(path),
        Verb::Oracle => oracle(cfg),
        Verb::DemoDescent => demo_descent(cfg),
        Verb::Selftest => run_selftest(cfg),
    };
    result.unwrap_or_else(|Usage(msg)| RunOutcome::usage(msg))
}

#[derive(Serialize)]
struct WordCoeff {
    word: String,
    coeff: String,
}

#[derive(Serialize)]
pub struct PairIdentityReport {
    pair: [usize; 2],
    m: u32,
    holds: bool,
    delta: String,
    leading: [WordCoeff; 2],
    lower_order: Vec<WordCoeff>,
    lower_order_vanishes: bool,
    leading_coefficients_match: bool,
    sequence_k: Vec<String>,
    sequence_l: Vec<String>,
    sequences_set_equal: bool,
    root_product: String,
    positivity_soft_check: bool,
    residual: Vec<WordTermRepr>,
}

#[derive(Serialize)]
pub struct KeyIdentityReport {
    verb: &'static str,
    group: GroupConfig,
    holds: bool,
    pairs: Vec<PairIdentityReport>,
}

impl KeyIdentityReport {
    pub fn holds(&self) -> bool {
        self.holds
    }
}

/// Key identity, lower-order terms, leading coefficients and root data for
/// the given pairs (0-based).
pub fn key_identity_report(
    g: &CoxeterGroup,
    pairs: &[(usize, usize)],
) -> Result<KeyIdentityReport, DescentError> {
    let alg = DescentAlgebra::new(g);
    let mut out = Vec::new();
    for &(k, l) in pairs {
        let data = g.rank2_root_data(k, l)?;
        let m = g.m(k, l);
        let sign = g.field().from_int(if m.is_multiple_of(2) { 1 } else { -1 });
        // recompute rather than use the checked path so a violation is reported, not raised
        let b = alg.coxeter_braid_element(k, l)?;
        let bd = alg.demazure_braid_element(k, l)?;
        let residual = b.sub(&bd.scale_left(&data.delta.scale(&sign)));
        let report = match alg.key_identity_check(k, l) {
            Ok(r) => Some(r),
            Err(DescentError::IdentityViolation { .. }) => None,
            Err(e) => return Err(e),
        };
        let text = |seq: &[crate::poly::Polynomial]| seq.iter().map(|r| r.to_string()).collect::<Vec<_>>();
        let set_equal = {
            let mut a = data.sequence_k.clone();
            let mut c = data.sequence_l.clone();
            a.sort();
            c.sort();
            let mut dedup = a.clone();
            dedup.dedup();
            a == c && dedup.len() == a.len()
        };
        let coeff_of = |w: &crate::descent::GWord| {
            b.coeff(w).map(|f| f.to_string()).unwrap_or_else(|| "0".into())
        };
        let wk = crate::descent::GWord::alternating(k, l, m as usize);
        let wl = crate::descent::GWord::alternating(l, k, m as usize);
        out.push(PairIdentityReport {
            pair: [k + 1, l + 1],
            m,
            holds: report.as_ref().is_some_and(|r| r.holds()) && set_equal,
            delta: data.delta.to_string(),
            leading: [
                WordCoeff {
                    word: wk.to_string(),
                    coeff: coeff_of(&wk),
                },
                WordCoeff {
                    word: wl.to_string(),
                    coeff: coeff_of(&wl),
                },
            ],
            lower_order: crate::descent::GWord::all_up_to(&[k, l], m as usize - 1)
                .iter()
                .map(|w| WordCoeff {
                    word: if w.is_empty() { "1".into() } else { w.to_string() },
                    coeff: coeff_of(w),
                })
                .collect(),
            lower_order_vanishes: report.as_ref().is_some_and(|r| r.lower_order_vanishes()),
            leading_coefficients_match: report.as_ref().is_some_and(|r| r.leading_coefficients_match()),
            sequence_k: text(&data.sequence_k),
            sequence_l: text(&data.sequence_l),
            sequences_set_equal: set_equal,
            root_product: data
                .sequence_k
                .iter()
                .fold(crate::poly::Polynomial::one(g.field(), g.rank()), |acc, r| &acc * r)
                .to_string(),
            positivity_soft_check: g.positivity_soft_check(&data),
            residual: descent_to_json(&residual),
        });
    }
    Ok(KeyIdentityReport {
        verb: "key-identity",
        group: GroupConfig::from_group(g),
        holds: out.iter().all(|p| p.holds && p.positivity_soft_check),
        pairs: out,
    })
}

fn key_identity(cfg: &RunConfig) -> Result<RunOutcome, Usage> {
    let g = load_group(&cfg.group)?;
    let pairs = selected_pairs(&g, cfg.pair)?;
    let report = key_identity_report(&g, &pairs)?;
    Ok(RunOutcome::report(report.holds, &report))
}

#[derive(Serialize)]
struct CertifyReport {
    verb: &'static str,
    group: GroupConfig,
    pair: [usize; 2],
    verified: bool,
    terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<Vec<WordTermRepr>>,
}

fn certify(cfg: &RunConfig) -> Result<RunOutcome, Usage> {
    let g = load_group(&cfg.group)?;
    let (k, l) = single_pair(&g, cfg.pair)?;
    let mut report = CertifyReport {
        verb: "certify",
        group: GroupConfig::from_group(&g),
        pair: [k + 1, l + 1],
        verified: false,
        terms: 0,
        out: None,
        certificate: None,
        error: None,
        residual: None,
    };
    match cert_main(&g, k, l) {
        Ok(cert) => {
            let repr = certificate_to_json(&g, &cert);
            report.verified = true;
            report.terms = cert.terms.len();
            match &cfg.out {
                Some(path) => {
                    std::fs::write(path, to_pretty(&repr))
                        .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
                    report.out = Some(path.display().to_string());
                }
                None => report.certificate = Some(repr),
            }
        }
        Err(CertError::InternalProof { context, residual }) => {
            report.error = Some(context);
            report.residual = Some(descent_to_json(&residual));
        }
        Err(e) => return Err(Usage(e.to_string())),
    }
    Ok(RunOutcome::report(report.verified, &report))
}

#[derive(Serialize)]
struct CheckReport {
    verb: &'static str,
    file: String,
    pair: [usize; 2],
    terms: usize,
    ok: bool,
    residual: Vec<WordTermRepr>,
}

fn check_cert(path: &PathBuf) -> Result<RunOutcome, Usage> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    let repr: CertificateRepr = serde_json::from_str(&text)?;
    let (g, cert) = certificate_from_json(&repr)?;
    let alg = DescentAlgebra::new(&g);
    let verdict = cert_verify(&alg, &cert)?;
    let report = CheckReport {
        verb: "check-cert",
        file: path.display().to_string(),
        pair: repr.pair,
        terms: cert.terms.len(),
        ok: verdict.ok,
        residual: descent_to_json(&verdict.residual),
    };
    Ok(RunOutcome::report(report.ok, &report))
}

#[derive(Serialize)]
struct LetterDisproof {
    letter: String,
    not_in_ideal: bool,
}

#[derive(Serialize)]
struct OracleReport {
    verb: &'static str,
    group: GroupConfig,
    pair: [usize; 2],
    target: String,
    word_cap: usize,
    degree_cap: u32,
    member: bool,
    combination_terms: usize,
    combination_rechecked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    spanning: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    single_letters: Vec<LetterDisproof>,
}

fn oracle(cfg: &RunConfig) -> Result<RunOutcome, Usage> {
    let g = load_group(&cfg.group)?;
    let (k, l) = single_pair(&g, cfg.pair)?;
    let alg = DescentAlgebra::new(&g);
    let m = g.m(k, l) as usize;
    let word_cap = cfg.word_cap.unwrap_or(m + 2);
    let degree_cap = cfg.degree_cap.unwrap_or(m as u32 + 2);
    if word_cap == 0 || degree_cap == 0 {
        return Err(Usage("caps must be positive".into()));
    }
    let (target, label) = match &cfg.target {
        Some(text) => (alg.normal_form(&FormalExpression::parse(&g, text)?), text.clone()),
        None => (alg.demazure_braid_element(k, l)?, format!("B^D({}, {})", k + 1, l + 1)),
    };
    let outcome = match oracle_membership(&alg, &target, word_cap, degree_cap) {
        Ok(o) => o,
        Err(CertError::Inhomogeneous) => return Err(Usage("the oracle target must be homogeneous".into())),
        Err(e) => return Err(Usage(e.to_string())),
    };
    let mut single_letters = Vec::new();
    for i in [k, l] {
        let verdict = disprove_by_projection(&alg, &alg.letter(i)).map_err(|e| Usage(e.to_string()))?;
        single_letters.push(LetterDisproof {
            letter: format!("G{}", i + 1),
            not_in_ideal: matches!(verdict, ProjectionVerdict::NotInIdeal { .. }),
        });
    }
    let mut report = OracleReport {
        verb: "oracle",
        group: GroupConfig::from_group(&g),
        pair: [k + 1, l + 1],
        target: label,
        word_cap,
        degree_cap,
        member: outcome.is_member(),
        combination_terms: 0,
        combination_rechecked: false,
        spanning: None,
        rank: None,
        single_letters,
    };
    match &outcome {
        OracleOutcome::Member { combination } => {
            report.combination_terms = combination.len();
            report.combination_rechecked =
                combination_value(&alg, combination).map_err(|e| Usage(e.to_string()))? == target;
        }
        OracleOutcome::NotFoundWithinCaps { spanning, rank } => {
            report.spanning = Some(*spanning);
            report.rank = Some(*rank);
        }
    }
    let ok = report.member
        && report.combination_rechecked
        && report.single_letters.iter().all(|d| d.not_in_ideal);
    Ok(RunOutcome::report(ok, &report))
}

#[derive(Serialize)]
pub struct GeneratorDescent {
    generator: usize,
    descends: bool,
    expected: bool,
    /// `G_i` on generators, row-major, when descent holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    g_operator: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    remainder: Option<String>,
}

#[derive(Serialize)]
pub struct BraidEntry {
    pair: [usize; 2],
    zero: bool,
    differences: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct FixtureReport {
    name: String,
    group: GroupConfig,
    degrees: Vec<i64>,
    descent: Vec<GeneratorDescent>,
    descends_everywhere: bool,
    braid: Vec<BraidEntry>,
    ok: bool,
}

/// Descent tests and, where all of them pass, braid reports for one fixture.
/// `ok` means the outcomes match the fixture's expectations and every braid
/// report is zero.
pub fn fixture_report(fx: &ModuleFixture) -> Result<FixtureReport, String> {
    let g = fx.build_group().map_err(|e| e.to_string())?;
    let module = fx.module(&g).map_err(|e| e.to_string())?;
    if fx.expect_descent.len() != g.rank() {
        return Err(format!("{}: expect_descent needs {} entries", fx.name, g.rank()));
    }
    let mut descent = Vec::new();
    let mut ops = Vec::new();
    for i in 0..g.rank() {
        let r = module.descent_check(i);
        descent.push(GeneratorDescent {
            generator: i + 1,
            descends: r.is_ok(),
            expected: fx.expect_descent[i],
            g_operator: r.as_ref().ok().map(|op| op.matrix.to_strings()),
            witness: r.as_ref().err().map(|f| f.to_string()),
            remainder: r.as_ref().err().map(|f| f.remainder.to_string()),
        });
        if let Ok(op) = r {
            ops.push(op);
        }
    }
    let everywhere = ops.len() == g.rank();
    let mut braid = Vec::new();
    if everywhere {
        for (k, l) in all_pairs(&g) {
            let rep = module.braid_check(&ops[k], &ops[l]);
            braid.push(BraidEntry {
                pair: [k + 1, l + 1],
                zero: rep.is_zero(),
                differences: rep
                    .differences
                    .iter()
                    .map(|v| v.iter().map(|f| f.to_string()).collect())
                    .collect(),
            });
        }
    }
    let ok = descent.iter().all(|d| d.descends == d.expected) && braid.iter().all(|b| b.zero);
    Ok(FixtureReport {
        name: fx.name.clone(),
        group: fx.group.clone(),
        degrees: fx.degrees.clone(),
        descent,
        descends_everywhere: everywhere,
        braid,
        ok,
    })
}

#[derive(Serialize)]
struct DemoReport {
    verb: &'static str,
    ok: bool,
    fixtures: Vec<FixtureReport>,
}

fn demo_descent(cfg: &RunConfig) -> Result<RunOutcome, Usage> {
    let mut fixtures = bundled_fixtures()?;
    for path in &cfg.modules {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
        fixtures.push(ModuleFixture::parse(&text)?);
    }
    let reports = fixtures
        .iter()
        .map(fixture_report)
        .collect::<Result<Vec<_>, _>>()
        .map_err(Usage)?;
    let report = DemoReport {
        verb: "demo-descent",
        ok: reports.iter().all(|r| r.ok),
        fixtures: reports,
    };
    Ok(RunOutcome::report(report.ok, &report))
}

fn run_selftest(cfg: &RunConfig) -> Result<RunOutcome, Usage> {
    let mut st = SelftestConfig {
        seed: cfg.seed,
        ..Default::default()
    };
    if let Some(d) = cfg.degree_cap {
        st.degree_cap = d;
    }
    match &cfg.group {
        Some(GroupSource::Preset(name)) => {
            preset(name)?;
            st.groups = vec![name.clone()];
        }
        Some(GroupSource::File(_)) => {
            return Err(Usage("selftest runs on presets; use --preset".into()));
        }
        None => {}
    }
    let report = selftest::run(&st).map_err(Usage)?;
    Ok(RunOutcome::report(report.passed, &report))
}
