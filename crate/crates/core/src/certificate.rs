//! Membership certificates for the two-sided ideal generated by the Coxeter
//! braid relations `B_kl` inside the descent algebra.
//!
//! A certificate is a list of terms `q * p * left * B_kl * right` whose sum
//! is the target. The generator follows an induction on words `Xi` in the
//! Demazure operators:
//!
//! * `Xi(Delta) * A_s^n` is in the ideal for every `n >= 1`, where `A_s^n`
//!   is the alternating word of length `m + n` starting with `s`
//!   ([`CertificateGenerator::lemma3`]);
//! * taking `Xi` to be the longest dihedral word gives `Xi(Delta) = 2m`, so
//!   the alternating words of length `m + 1` are in the ideal
//!   ([`CertificateGenerator::alternating_overlong`]);
//! * the same induction applied to `Xi(Delta) * B^D_kl` then puts `B^D_kl`
//!   itself in the ideal ([`CertificateGenerator::main`]).
//!
//! Every public constructor verifies its output by full expansion before
//! returning it. [`oracle_membership`] is an independent brute-force check by
//! exact linear algebra over a graded truncation of the ideal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::coxeter::CoxeterGroup;
use crate::descent::{DescentAlgebra, DescentElement, DescentError, GWord};
use crate::nilhecke::HeckeElement;
use crate::poly::{act, demazure_word, Monomial, Polynomial};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertError {
    #[error(transparent)]
    Descent(#[from] DescentError),
    #[error("internal proof error: {context}; residual {residual}")]
    InternalProof {
        context: String,
        residual: DescentElement,
    },
    #[error("letter {0} is not one of the pair's generators")]
    BadStart(usize),
    #[error("oracle target must be homogeneous")]
    Inhomogeneous,
    #[error("ideal generator B({0}, {1}) does not vanish in the nil Hecke algebra")]
    GeneratorDoesNotVanish(usize, usize),
    #[error("caps must be positive")]
    BadCaps,
}

/// Which construction step produced a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Lemma3,
    A1,
    MainStep,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Lemma3 => "lemma3",
            Provenance::A1 => "A1",
            Provenance::MainStep => "main-step",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lemma3" => Some(Provenance::Lemma3),
            "A1" => Some(Provenance::A1),
            "main-step" => Some(Provenance::MainStep),
            _ => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `q * p * left * B_gen * right`
#[derive(Clone, Debug, PartialEq)]
pub struct CertTerm {
    pub q: Scalar,
    pub p: Polynomial,
    pub left: DescentElement,
    pub gen: (usize, usize),
    pub right: DescentElement,
    pub from: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub pair: (usize, usize),
    pub target: DescentElement,
    pub terms: Vec<CertTerm>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub ok: bool,
    pub residual: DescentElement,
}

impl Certificate {
    pub fn empty(pair: (usize, usize)) -> Self {
        Certificate {
            pair,
            target: DescentElement::zero(),
            terms: Vec::new(),
        }
    }

    /// Number of terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// Expands a single term.
pub fn expand_term(alg: &DescentAlgebra<'_>, term: &CertTerm) -> Result<DescentElement, CertError> {
    let b = alg.coxeter_braid_element(term.gen.0, term.gen.1)?;
    let left = term.left.scale_left(&term.p).scale(&term.q);
    Ok(alg.mul(&alg.mul(&left, &b), &term.right))
}

/// Expands every term, sums, and compares with the target. Only malformed
/// generator pairs are errors; a wrong certificate is reported through
/// `ok = false` and the residual `sum - target`.
pub fn cert_verify(alg: &DescentAlgebra<'_>, cert: &Certificate) -> Result<VerifyReport, CertError> {
    let expansions: Vec<DescentElement> = cert
        .terms
        .par_iter()
        .map(|t| expand_term(alg, t))
        .collect::<Result<_, _>>()?;
    let total = expansions
        .iter()
        .fold(DescentElement::zero(), |acc, x| acc.add(x));
    let residual = total.sub(&cert.target);
    Ok(VerifyReport {
        ok: residual.is_zero(),
        residual,
    })
}

type Terms = Vec<CertTerm>;

/// Builds certificates for one rank-two pair.
pub struct CertificateGenerator<'g> {
    alg: DescentAlgebra<'g>,
    k: usize,
    l: usize,
    m: usize,
    delta: Polynomial,
    memo: HashMap<(Vec<usize>, usize, usize), Terms>,
}

impl<'g> CertificateGenerator<'g> {
    pub fn new(group: &'g CoxeterGroup, k: usize, l: usize) -> Result<Self, CertError> {
        let alg = DescentAlgebra::new(group);
        // validates the pair as a side effect
        alg.demazure_braid_element(k, l)?;
        let data = group
            .rank2_root_data(k, l)
            .map_err(DescentError::from)?;
        Ok(CertificateGenerator {
            alg,
            k,
            l,
            m: group.m(k, l) as usize,
            delta: data.delta,
            memo: HashMap::new(),
        })
    }

    pub fn delta(&self) -> &Polynomial {
        &self.delta
    }

    fn group(&self) -> &'g CoxeterGroup {
        self.alg.group()
    }

    fn other(&self, a: usize) -> usize {
        if a == self.k {
            self.l
        } else {
            self.k
        }
    }

    fn check_start(&self, start: usize) -> Result<(), CertError> {
        if start == self.k || start == self.l {
            Ok(())
        } else {
            Err(CertError::BadStart(start + 1))
        }
    }

    /// The longest dihedral word `D_k D_l D_k ...` of length `m`.
    pub fn longest_dword(&self) -> Vec<usize> {
        CoxeterGroup::alternating(self.k, self.l, self.m)
    }

    /// `G_start G_other ...` of the given length.
    pub fn alt_word(&self, start: usize, len: usize) -> GWord {
        GWord::alternating(start, self.other(start), len)
    }

    fn xi_of_delta(&self, xi: &[usize]) -> Polynomial {
        demazure_word(self.group(), xi, &self.delta)
    }

    fn one_poly(&self) -> Polynomial {
        Polynomial::one(self.group().field(), self.group().rank())
    }

    fn left_mul(&self, x: &DescentElement, terms: &[CertTerm]) -> Terms {
        terms
            .iter()
            .map(|t| CertTerm {
                left: self.alg.mul(x, &t.left.scale_left(&t.p)),
                p: self.one_poly(),
                ..t.clone()
            })
            .collect()
    }

    fn scale_poly(&self, f: &Polynomial, terms: &[CertTerm]) -> Terms {
        terms
            .iter()
            .map(|t| CertTerm {
                p: f * &t.p,
                ..t.clone()
            })
            .collect()
    }

    fn scale(&self, s: &Scalar, terms: &[CertTerm]) -> Terms {
        terms
            .iter()
            .map(|t| CertTerm {
                q: &t.q * s,
                ..t.clone()
            })
            .collect()
    }

    fn retag(&self, from: Provenance, terms: &[CertTerm]) -> Terms {
        terms
            .iter()
            .map(|t| CertTerm {
                from,
                ..t.clone()
            })
            .collect()
    }

    /// Merges terms sharing `(from, gen, right)` into one term whose left
    /// factor absorbs `q` and `p`; drops terms that vanish; sorts.
    fn canonicalize(&self, terms: Terms) -> Terms {
        let mut groups: BTreeMap<(Provenance, (usize, usize), DescentElement), Vec<CertTerm>> =
            BTreeMap::new();
        for t in terms {
            groups
                .entry((t.from, t.gen, t.right.clone()))
                .or_default()
                .push(t);
        }
        let field = self.group().field();
        let mut out = Vec::new();
        for ((from, gen, right), mut ts) in groups {
            if ts.len() == 1 {
                let t = ts.pop().unwrap();
                if !t.q.is_zero() && !t.p.is_zero() && !t.left.is_zero() && !t.right.is_zero() {
                    out.push(t);
                }
                continue;
            }
            let left = ts.iter().fold(DescentElement::zero(), |acc, t| {
                acc.add(&t.left.scale_left(&t.p).scale(&t.q))
            });
            if left.is_zero() || right.is_zero() {
                continue;
            }
            out.push(CertTerm {
                q: field.one(),
                p: self.one_poly(),
                left,
                gen,
                right,
                from,
            });
        }
        out
    }

    fn base_lemma3(&self, n: usize, start: usize) -> Result<Terms, CertError> {
        let b = self.alg.coxeter_braid_element(self.k, self.l)?;
        let target = self
            .alg
            .word(self.alt_word(start, self.m + n))
            .scale_left(&self.delta);
        // exactly one of the two alternating right factors of length n
        // survives against the leading words of B_kl
        for first in [self.k, self.l] {
            let right = self.alg.word(self.alt_word(first, n));
            let bw = self.alg.mul(&b, &right);
            for sign in [1, -1] {
                let q = self.group().field().from_int(sign);
                if bw.scale(&q) == target {
                    return Ok(vec![CertTerm {
                        q,
                        p: self.one_poly(),
                        left: self.alg.one(),
                        gen: (self.k, self.l),
                        right,
                        from: Provenance::Lemma3,
                    }]);
                }
            }
        }
        Err(CertError::InternalProof {
            context: format!("no right factor of length {n} isolates the target"),
            residual: target,
        })
    }

    fn lemma3_terms(&mut self, xi: &[usize], n: usize, start: usize) -> Result<Terms, CertError> {
        let key = (xi.to_vec(), n, start);
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let terms = match xi.split_first() {
            None => self.base_lemma3(n, start)?,
            Some((&a, rest)) => {
                let g_a = self.alg.letter(a);
                if a == start {
                    // G_a * Xi'(Delta) A_a^n = Xi(Delta) A_a^n, since G_a A_a^n = 0
                    let inner = self.lemma3_terms(rest, n, start)?;
                    self.left_mul(&g_a, &inner)
                } else {
                    // Xi(Delta) A_b^n = G_a [Xi'(Delta) A_b^n] - Xi'(Delta) A_a^{n+1}
                    //                   + a_a G_a [Xi'(Delta) A_a^{n+1}]
                    let same = self.lemma3_terms(rest, n, start)?;
                    let longer = self.lemma3_terms(rest, n + 1, a)?;
                    let minus_one = self.group().field().from_int(-1);
                    let mut out = self.left_mul(&g_a, &same);
                    out.extend(self.scale(&minus_one, &longer));
                    let shifted = self.left_mul(&g_a, &longer);
                    out.extend(self.scale_poly(&self.group().simple_root(a), &shifted));
                    out
                }
            }
        };
        let terms = self.canonicalize(terms);
        self.memo.insert(key, terms.clone());
        Ok(terms)
    }

    fn finish(&self, context: &str, target: DescentElement, terms: Terms) -> Result<Certificate, CertError> {
        let cert = Certificate {
            pair: (self.k, self.l),
            target,
            terms,
        };
        let report = cert_verify(&self.alg, &cert)?;
        if !report.ok {
            return Err(CertError::InternalProof {
                context: context.to_string(),
                residual: report.residual,
            });
        }
        Ok(cert)
    }

    /// Certificate for `Xi(Delta) * A_start^n`.
    pub fn lemma3(&mut self, xi: &[usize], n: usize, start: usize) -> Result<Certificate, CertError> {
        self.check_start(start)?;
        for &a in xi {
            self.check_start(a)?;
        }
        if n == 0 {
            return Err(CertError::BadCaps);
        }
        let terms = self.lemma3_terms(xi, n, start)?;
        let target = self
            .alg
            .word(self.alt_word(start, self.m + n))
            .scale_left(&self.xi_of_delta(xi));
        self.finish("lemma3", target, terms)
    }

    /// `D_{w0}(Delta)`, checked to equal the dihedral order `2m`.
    fn dihedral_order_scalar(&self) -> Result<Scalar, CertError> {
        let value = self.xi_of_delta(&self.longest_dword());
        let order = self.group().dihedral_subgroup(self.k, self.l).len() as i64;
        let expected = self.group().field().from_int(order);
        match value.as_constant() {
            Some(c) if c == expected => Ok(c),
            _ => Err(CertError::InternalProof {
                context: format!("D_w0(Delta) = {value}, expected {order}"),
                residual: DescentElement::zero(),
            }),
        }
    }

    fn overlong_terms(&mut self, start: usize) -> Result<Terms, CertError> {
        let order = self.dihedral_order_scalar()?;
        let inv = order.inv().expect("dihedral order is nonzero");
        let xi = self.longest_dword();
        let terms = self.lemma3_terms(&xi, 1, start)?;
        let scaled = self.scale(&inv, &terms);
        Ok(self.retag(Provenance::A1, &scaled))
    }

    /// Certificate for the alternating word of length `m + 1` starting with `start`.
    pub fn alternating_overlong(&mut self, start: usize) -> Result<Certificate, CertError> {
        self.check_start(start)?;
        let terms = self.overlong_terms(start)?;
        let target = self.alg.word(self.alt_word(start, self.m + 1));
        self.finish("A1", target, terms)
    }

    /// Certificate for `B^D_kl`.
    pub fn main(&mut self) -> Result<Certificate, CertError> {
        let field = self.group().field().clone();
        let bd = self.alg.demazure_braid_element(self.k, self.l)?;
        let sign_m = field.from_int(if self.m.is_multiple_of(2) { 1 } else { -1 });
        // C(empty) = (-1)^m B_kl = Delta * B^D
        let mut current: Terms = vec![CertTerm {
            q: sign_m,
            p: self.one_poly(),
            left: self.alg.one(),
            gen: (self.k, self.l),
            right: self.alg.one(),
            from: Provenance::MainStep,
        }];
        let xi = self.longest_dword();
        let mut overlong: HashMap<usize, Terms> = HashMap::new();
        for j in (0..xi.len()).rev() {
            let a = xi[j];
            let rest = &xi[j + 1..];
            // G_a B^D = sigma * (alternating word of length m+1 starting with a)
            let g_bd = self.alg.mul(&self.alg.letter(a), &bd);
            let long = self.alg.word(self.alt_word(a, self.m + 1));
            let sigma = if g_bd == long {
                field.one()
            } else if g_bd == long.neg() {
                field.from_int(-1)
            } else {
                return Err(CertError::InternalProof {
                    context: "G_a B^D is not a signed alternating word".into(),
                    residual: g_bd,
                });
            };
            if let std::collections::hash_map::Entry::Vacant(e) = overlong.entry(a) {
                let t = self.overlong_terms(a)?;
                e.insert(t);
            }
            // Xi(Delta) B^D = G_a [Xi'(Delta) B^D] - sigma s_a(Xi'(Delta)) A_a^1
            let coeff = act(self.group(), self.group().generator(a), &self.xi_of_delta(rest));
            let mut next = self.left_mul(&self.alg.letter(a), &current);
            let correction = self.scale_poly(&coeff, &overlong[&a]);
            next.extend(self.scale(&-&sigma, &correction));
            current = self.canonicalize(next);
        }
        let order = self.dihedral_order_scalar()?;
        let terms = self.scale(&order.inv().unwrap(), &current);
        self.finish("main", bd, terms)
    }
}

/// `B^D_kl` is in the ideal; verified certificate.
pub fn cert_main(group: &CoxeterGroup, k: usize, l: usize) -> Result<Certificate, CertError> {
    CertificateGenerator::new(group, k, l)?.main()
}

/// Alternating word of length `m_kl + 1` starting with `start`.
pub fn cert_a1(group: &CoxeterGroup, k: usize, l: usize, start: usize) -> Result<Certificate, CertError> {
    CertificateGenerator::new(group, k, l)?.alternating_overlong(start)
}

pub fn cert_lemma3(
    group: &CoxeterGroup,
    k: usize,
    l: usize,
    xi: &[usize],
    n: usize,
    start: usize,
) -> Result<Certificate, CertError> {
    CertificateGenerator::new(group, k, l)?.lemma3(xi, n, start)
}

/// One spanning element `mu * u * B_gen * v` of the truncated ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningElement {
    pub monomial: Monomial,
    pub left: GWord,
    pub gen: (usize, usize),
    pub right: GWord,
}

#[derive(Clone, Debug, PartialEq)]
pub enum OracleOutcome {
    Member {
        combination: Vec<(Scalar, SpanningElement)>,
    },
    /// The target is outside the span at these caps. Not a disproof.
    NotFoundWithinCaps { spanning: usize, rank: usize },
}

impl OracleOutcome {
    pub fn is_member(&self) -> bool {
        matches!(self, OracleOutcome::Member { .. })
    }
}

/// Value of a spanning element.
pub fn spanning_value(alg: &DescentAlgebra<'_>, s: &SpanningElement) -> Result<DescentElement, CertError> {
    let g = alg.group();
    let mu = Polynomial::from_terms(g.field(), g.rank(), [(s.monomial.clone(), g.field().one())]);
    let b = alg.coxeter_braid_element(s.gen.0, s.gen.1)?;
    let left = DescentElement::monomial(s.left.clone(), mu);
    Ok(alg.mul(&alg.mul(&left, &b), &alg.word(s.right.clone())))
}

type Key = (GWord, Monomial);
type SparseVec = BTreeMap<Key, Scalar>;

fn to_sparse(x: &DescentElement) -> SparseVec {
    let mut out = SparseVec::new();
    for (w, f) in x.terms() {
        for (m, c) in f.terms() {
            out.insert((w.clone(), m.clone()), c.clone());
        }
    }
    out
}

fn axpy(v: &mut SparseVec, c: &Scalar, b: &SparseVec) {
    for (k, x) in b {
        let delta = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y -= &delta;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), -delta);
            }
        }
    }
}

fn combo_axpy(v: &mut BTreeMap<usize, Scalar>, c: &Scalar, b: &BTreeMap<usize, Scalar>) {
    for (k, x) in b {
        let delta = c * x;
        let entry = v.entry(*k).or_insert_with(|| delta.field().zero());
        *entry -= &delta;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

/// Incremental echelon basis; each vector is normalized to 1 at its largest key.
struct Echelon {
    rows: BTreeMap<Key, (SparseVec, BTreeMap<usize, Scalar>)>,
}

impl Echelon {
    /// Reduces `v` (with combination `combo`) against the basis; returns the
    /// remainder and its combination.
    fn reduce(
        &self,
        mut v: SparseVec,
        mut combo: BTreeMap<usize, Scalar>,
    ) -> (SparseVec, BTreeMap<usize, Scalar>) {
        loop {
            let Some((key, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                return (v, combo);
            };
            let Some((row, row_combo)) = self.rows.get(&key) else {
                return (v, combo);
            };
            axpy(&mut v, &c, row);
            combo_axpy(&mut combo, &c, row_combo);
        }
    }

    fn insert(&mut self, v: SparseVec, combo: BTreeMap<usize, Scalar>) {
        let (key, lead) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let inv = lead.inv().expect("pivot is nonzero");
        let v = v.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        let combo = combo.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        self.rows.insert(key, (v, combo));
    }
}

/// Brute-force membership of a homogeneous `target` in the ideal, over the
/// span of `mu * u * B_ij * v` with `|u|, |v| <= word_cap` and
/// `deg mu <= degree_cap`, restricted to the target's degree.
///
/// Right polynomial factors are unnecessary: `s_i f = s_i(f) s_i` in the
/// descent algebra, so `B_ij f = w0(f) B_ij` with `w0` the dihedral
/// longest element.
pub fn oracle_membership(
    alg: &DescentAlgebra<'_>,
    target: &DescentElement,
    word_cap: usize,
    degree_cap: u32,
) -> Result<OracleOutcome, CertError> {
    if word_cap == 0 || degree_cap == 0 {
        return Err(CertError::BadCaps);
    }
    if target.is_zero() {
        return Ok(OracleOutcome::Member {
            combination: Vec::new(),
        });
    }
    let degree = target.degree().ok_or(CertError::Inhomogeneous)?;
    let g = alg.group();
    let letters: Vec<usize> = (0..g.rank()).collect();
    let words = GWord::all_up_to(&letters, word_cap);
    let mut spanning = Vec::new();
    for i in 0..g.rank() {
        for j in i + 1..g.rank() {
            for u in &words {
                for v in &words {
                    let d = degree + u.len() as i64 + v.len() as i64;
                    if d < 0 || d > degree_cap as i64 {
                        continue;
                    }
                    for mono in Monomial::of_degree(g.rank(), d as u32) {
                        spanning.push(SpanningElement {
                            monomial: mono,
                            left: u.clone(),
                            gen: (i, j),
                            right: v.clone(),
                        });
                    }
                }
            }
        }
    }
    let columns: Vec<SparseVec> = spanning
        .par_iter()
        .map(|s| spanning_value(alg, s).map(|x| to_sparse(&x)))
        .collect::<Result<_, _>>()?;

    let mut basis = Echelon {
        rows: BTreeMap::new(),
    };
    for (idx, col) in columns.into_iter().enumerate() {
        let combo = BTreeMap::from([(idx, g.field().one())]);
        let (rem, rem_combo) = basis.reduce(col, combo);
        if !rem.is_empty() {
            basis.insert(rem, rem_combo);
        }
    }
    // target - sum c_j col_j = remainder; combination is the negated tracking
    let (rem, combo) = basis.reduce(to_sparse(target), BTreeMap::new());
    if !rem.is_empty() {
        return Ok(OracleOutcome::NotFoundWithinCaps {
            spanning: spanning.len(),
            rank: basis.rows.len(),
        });
    }
    let combination = combo
        .into_iter()
        .map(|(idx, c)| (-c, spanning[idx].clone()))
        .collect();
    Ok(OracleOutcome::Member { combination })
}

/// Value of an oracle combination, for independent re-checking.
pub fn combination_value(
    alg: &DescentAlgebra<'_>,
    combination: &[(Scalar, SpanningElement)],
) -> Result<DescentElement, CertError> {
    combination.iter().try_fold(DescentElement::zero(), |acc, (c, s)| {
        Ok(acc.add(&spanning_value(alg, s)?.scale(c)))
    })
}

/// Outcome of the projection test.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjectionVerdict {
    /// The target has a nonzero image in the nil Hecke algebra while every
    /// ideal generator maps to zero, so the target is not in the ideal.
    NotInIdeal { projection: HeckeElement },
    Inconclusive,
}

/// Proves non-membership by projecting to the nil Hecke algebra.
pub fn disprove_by_projection(
    alg: &DescentAlgebra<'_>,
    target: &DescentElement,
) -> Result<ProjectionVerdict, CertError> {
    let g = alg.group();
    for i in 0..g.rank() {
        for j in i + 1..g.rank() {
            let b = alg.coxeter_braid_element(i, j)?;
            if !alg.project_to_hecke(&b).is_zero() {
                return Err(CertError::GeneratorDoesNotVanish(i + 1, j + 1));
            }
        }
    }
    let projection = alg.project_to_hecke(target);
    if projection.is_zero() {
        Ok(ProjectionVerdict::Inconclusive)
    } else {
        Ok(ProjectionVerdict::NotInIdeal { projection })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::preset;

    #[test]
    fn orthogonal_base_case() {
        let g = preset("A1xA1").unwrap();
        let cert = cert_lemma3(&g, 0, 1, &[], 1, 0).unwrap();
        assert_eq!(cert.terms.len(), 1);
        let t = &cert.terms[0];
        assert_eq!(t.right, DescentAlgebra::new(&g).letter(0));
        let d = &g.simple_root(0) * &g.simple_root(1);
        let alg = DescentAlgebra::new(&g);
        assert_eq!(cert.target, alg.word(GWord::alternating(0, 1, 3)).scale_left(&d));
    }

    #[test]
    fn main_certificates_verify() {
        for name in ["A1xA1", "A2", "B2"] {
            let g = preset(name).unwrap();
            let cert = cert_main(&g, 0, 1).unwrap();
            let alg = DescentAlgebra::new(&g);
            assert!(cert_verify(&alg, &cert).unwrap().ok, "{name}");
        }
    }

    #[test]
    fn corrupted_certificate_fails() {
        let g = preset("A2").unwrap();
        let alg = DescentAlgebra::new(&g);
        let mut cert = cert_main(&g, 0, 1).unwrap();
        cert.terms[0].q = &cert.terms[0].q * &g.field().from_int(2);
        let r = cert_verify(&alg, &cert).unwrap();
        assert!(!r.ok);
        assert!(!r.residual.is_zero());
    }

    #[test]
    fn empty_certificate_of_zero() {
        let g = preset("A2").unwrap();
        let alg = DescentAlgebra::new(&g);
        assert!(cert_verify(&alg, &Certificate::empty((0, 1))).unwrap().ok);
    }

    #[test]
    fn bad_start_rejected() {
        let g = preset("A3").unwrap();
        assert!(matches!(cert_a1(&g, 0, 1, 2), Err(CertError::BadStart(3))));
    }

    #[test]
    fn oracle_on_zero_and_letter() {
        let g = preset("A1xA1").unwrap();
        let alg = DescentAlgebra::new(&g);
        assert!(oracle_membership(&alg, &DescentElement::zero(), 2, 2)
            .unwrap()
            .is_member());
        let letter = alg.letter(0);
        assert!(!oracle_membership(&alg, &letter, 3, 3).unwrap().is_member());
        assert!(matches!(
            disprove_by_projection(&alg, &letter).unwrap(),
            ProjectionVerdict::NotInIdeal { .. }
        ));
    }
}
