//! The Demazure descent algebra: polynomials and symbols `G_i` subject only
//! to `G_i^2 = 0` and `G_i f = D_i(f) + s_i(f) G_i`.
//!
//! As a left module over the polynomials it is free on the words in the
//! `G_i` without double letters. [`DescentAlgebra::mul`] computes products
//! directly in that basis; [`rewrite`] is a separate small-step rewriting
//! engine over flat products, used to cross-check normal forms under
//! different redex strategies.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterGroup};
use crate::nilhecke::{HeckeElement, NilHecke};
use crate::poly::{act, demazure, PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DescentError {
    #[error("word {0:?} has a double letter")]
    DoubleLetter(Vec<usize>),
    #[error("generator index {0} out of range")]
    BadGenerator(usize),
    #[error("identity violation for pair ({k}, {l}): nonzero coefficients on {words:?}")]
    IdentityViolation {
        k: usize,
        l: usize,
        words: Vec<String>,
        residual: DescentElement,
    },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("expression parse error: {0}")]
    Parse(String),
}

/// A word in the `G_i` with no two equal adjacent letters (zero-based).
/// Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GWord(Vec<usize>);

impl GWord {
    pub fn empty() -> Self {
        GWord(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Result<Self, DescentError> {
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(DescentError::DoubleLetter(letters));
        }
        Ok(GWord(letters))
    }

    pub fn letter(i: usize) -> Self {
        GWord(vec![i])
    }

    /// `start, other, start, ...` of length `len`.
    pub fn alternating(start: usize, other: usize, len: usize) -> Self {
        GWord(CoxeterGroup::alternating(start, other, len))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation; `None` when a double letter forms at the junction.
    pub fn concat(&self, other: &GWord) -> Option<GWord> {
        if let (Some(a), Some(b)) = (self.0.last(), other.0.first()) {
            if a == b {
                return None;
            }
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Some(GWord(v))
    }

    /// All double-letter-free words over `letters` of length at most `max_len`.
    pub fn all_up_to(letters: &[usize], max_len: usize) -> Vec<GWord> {
        let mut out = vec![GWord::empty()];
        let mut frontier = vec![GWord::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for &i in letters {
                    if w.0.last() != Some(&i) {
                        let mut v = w.0.clone();
                        v.push(i);
                        next.push(GWord(v));
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl Ord for GWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let s: Vec<String> = self.0.iter().map(|i| format!("G{}", i + 1)).collect();
        f.write_str(&s.join("*"))
    }
}

/// `sum_w f_w w` over double-letter-free words, left coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct DescentElement {
    terms: BTreeMap<GWord, Polynomial>,
}

impl DescentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: GWord, f: Polynomial) -> Self {
        let mut out = Self::zero();
        out.add_term(word, &f);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GWord, &Polynomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &GWord) -> Option<&Polynomial> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: GWord, f: &Polynomial) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(g) => {
                *g = &*g + f;
                if g.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, f.clone());
            }
        }
    }

    pub fn add(&self, other: &DescentElement) -> DescentElement {
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(w.clone(), f);
        }
        out
    }

    pub fn sub(&self, other: &DescentElement) -> DescentElement {
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(w.clone(), &-f);
        }
        out
    }

    pub fn neg(&self) -> DescentElement {
        DescentElement {
            terms: self.terms.iter().map(|(w, f)| (w.clone(), -f)).collect(),
        }
    }

    pub fn scale_left(&self, f: &Polynomial) -> DescentElement {
        let mut out = Self::zero();
        for (w, g) in &self.terms {
            out.add_term(w.clone(), &(f * g));
        }
        out
    }

    pub fn scale(&self, s: &crate::scalar::Scalar) -> DescentElement {
        let mut out = Self::zero();
        for (w, g) in &self.terms {
            out.add_term(w.clone(), &g.scale(s));
        }
        out
    }

    /// `deg f_w - len(w)` when it is the same for every term.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self
            .terms
            .iter()
            .map(|(w, f)| f.homogeneous_degree().map(|d| d as i64 - w.len() as i64));
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }
}

impl fmt::Display for DescentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*{w}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Input language for the rewriting engine.
#[derive(Clone, Debug, PartialEq)]
pub enum FormalExpression {
    Poly(Polynomial),
    G(usize),
    Sum(Vec<FormalExpression>),
    Product(Vec<FormalExpression>),
    Neg(Box<FormalExpression>),
}

impl FormalExpression {
    /// `1 - a_i G_i`
    pub fn reflection(group: &CoxeterGroup, i: usize) -> Self {
        let one = Polynomial::one(group.field(), group.rank());
        FormalExpression::Sum(vec![
            FormalExpression::Poly(one),
            FormalExpression::Neg(Box::new(FormalExpression::Product(vec![
                FormalExpression::Poly(group.simple_root(i)),
                FormalExpression::G(i),
            ]))),
        ])
    }

    /// Parses an s-expression such as `(* (- 1 (* a1 G1)) "a1 + a2" G2)`.
    ///
    /// Atoms: `G<i>`, `s<i>` (shorthand for `1 - a_i G_i`), bare polynomial
    /// tokens like `a1`, `2`, `1/2`, `c`, or a double-quoted polynomial.
    pub fn parse(group: &CoxeterGroup, input: &str) -> Result<Self, DescentError> {
        let tokens = tokenize(input)?;
        let mut pos = 0;
        let e = parse_sexpr(group, &tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(DescentError::Parse("trailing tokens".into()));
        }
        Ok(e)
    }
}

fn tokenize(input: &str) -> Result<Vec<String>, DescentError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' => {
                out.push(ch.to_string());
                chars.next();
            }
            '"' => {
                chars.next();
                let mut s = String::from("\"");
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some(c) => s.push(c),
                        None => return Err(DescentError::Parse("unterminated string".into())),
                    }
                }
                out.push(s);
            }
            _ => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    s.push(c);
                    chars.next();
                }
                out.push(s);
            }
        }
    }
    Ok(out)
}

fn parse_sexpr(
    group: &CoxeterGroup,
    tokens: &[String],
    pos: &mut usize,
) -> Result<FormalExpression, DescentError> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| DescentError::Parse("unexpected end of input".into()))?;
    *pos += 1;
    if tok == "(" {
        let op = tokens
            .get(*pos)
            .ok_or_else(|| DescentError::Parse("missing operator".into()))?
            .clone();
        *pos += 1;
        let mut args = Vec::new();
        while tokens.get(*pos).map(String::as_str) != Some(")") {
            if *pos >= tokens.len() {
                return Err(DescentError::Parse("missing `)`".into()));
            }
            args.push(parse_sexpr(group, tokens, pos)?);
        }
        *pos += 1;
        return match (op.as_str(), args.len()) {
            ("+", _) => Ok(FormalExpression::Sum(args)),
            ("*", _) => Ok(FormalExpression::Product(args)),
            ("-", 1) => Ok(FormalExpression::Neg(Box::new(args.pop().unwrap()))),
            ("-", n) if n >= 2 => {
                let mut it = args.into_iter();
                let first = it.next().unwrap();
                let mut parts = vec![first];
                parts.extend(it.map(|a| FormalExpression::Neg(Box::new(a))));
                Ok(FormalExpression::Sum(parts))
            }
            _ => Err(DescentError::Parse(format!("bad operator `{op}`"))),
        };
    }
    if tok == ")" {
        return Err(DescentError::Parse("unexpected `)`".into()));
    }
    let gen_index = |rest: &str| -> Result<usize, DescentError> {
        let i: usize = rest
            .parse()
            .map_err(|_| DescentError::Parse(format!("bad generator `{tok}`")))?;
        if i == 0 || i > group.rank() {
            return Err(DescentError::BadGenerator(i));
        }
        Ok(i - 1)
    };
    if let Some(rest) = tok.strip_prefix('G') {
        return Ok(FormalExpression::G(gen_index(rest)?));
    }
    if let Some(rest) = tok.strip_prefix('s') {
        return Ok(FormalExpression::reflection(group, gen_index(rest)?));
    }
    let text = tok.strip_prefix('"').unwrap_or(tok);
    Ok(FormalExpression::Poly(Polynomial::parse(
        group.field(),
        group.rank(),
        text,
    )?))
}

/// Which redex the rewriting engine contracts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

#[derive(Clone, Debug)]
enum Atom {
    Poly(Polynomial),
    G(usize),
}

fn flatten(e: &FormalExpression, group: &CoxeterGroup) -> Vec<Vec<Atom>> {
    match e {
        FormalExpression::Poly(f) => vec![vec![Atom::Poly(f.clone())]],
        FormalExpression::G(i) => vec![vec![Atom::G(*i)]],
        FormalExpression::Sum(xs) => xs.iter().flat_map(|x| flatten(x, group)).collect(),
        FormalExpression::Product(xs) => {
            let mut acc: Vec<Vec<Atom>> = vec![vec![]];
            for x in xs {
                let parts = flatten(x, group);
                acc = acc
                    .iter()
                    .flat_map(|a| {
                        parts.iter().map(move |p| {
                            let mut v = a.clone();
                            v.extend(p.iter().cloned());
                            v
                        })
                    })
                    .collect();
            }
            acc
        }
        FormalExpression::Neg(x) => {
            let minus = Polynomial::from_int(group.field(), group.rank(), -1);
            flatten(x, group)
                .into_iter()
                .map(|mut v| {
                    v.insert(0, Atom::Poly(minus.clone()));
                    v
                })
                .collect()
        }
    }
}

enum Redex {
    ZeroPoly,
    Merge(usize),
    Double,
    Commute(usize),
}

fn redex_at(seq: &[Atom], p: usize) -> Option<Redex> {
    match (&seq[p], seq.get(p + 1)) {
        (Atom::Poly(f), _) if f.is_zero() => Some(Redex::ZeroPoly),
        (Atom::Poly(_), Some(Atom::Poly(_))) => Some(Redex::Merge(p)),
        (Atom::G(i), Some(Atom::G(j))) if i == j => Some(Redex::Double),
        (Atom::G(_), Some(Atom::Poly(_))) => Some(Redex::Commute(p)),
        _ => None,
    }
}

/// Normal form by small-step rewriting with the given redex strategy.
///
/// Rules: `f g -> fg`, `G_i G_i -> 0`, `G_i f -> D_i(f) + s_i(f) G_i`.
/// Every step shortens a product or moves a polynomial strictly left, so
/// the process terminates.
pub fn rewrite(group: &CoxeterGroup, e: &FormalExpression, strategy: Strategy) -> DescentElement {
    let mut work = flatten(e, group);
    let mut out = DescentElement::zero();
    while let Some(seq) = work.pop() {
        let found = match strategy {
            Strategy::LeftmostFirst => (0..seq.len()).find_map(|p| redex_at(&seq, p)),
            Strategy::RightmostFirst => (0..seq.len()).rev().find_map(|p| redex_at(&seq, p)),
        };
        match found {
            None => {
                let (coeff, rest) = match seq.first() {
                    Some(Atom::Poly(f)) => (f.clone(), &seq[1..]),
                    _ => (Polynomial::one(group.field(), group.rank()), &seq[..]),
                };
                let letters = rest
                    .iter()
                    .map(|a| match a {
                        Atom::G(i) => *i,
                        Atom::Poly(_) => unreachable!("normal sequences have one leading polynomial"),
                    })
                    .collect();
                out.add_term(GWord(letters), &coeff);
            }
            Some(Redex::ZeroPoly) | Some(Redex::Double) => {}
            Some(Redex::Merge(p)) => {
                let (Atom::Poly(f), Atom::Poly(g)) = (&seq[p], &seq[p + 1]) else {
                    unreachable!()
                };
                let mut next = seq[..p].to_vec();
                next.push(Atom::Poly(f * g));
                next.extend_from_slice(&seq[p + 2..]);
                work.push(next);
            }
            Some(Redex::Commute(p)) => {
                let (Atom::G(i), Atom::Poly(f)) = (&seq[p], &seq[p + 1]) else {
                    unreachable!()
                };
                let mut first = seq[..p].to_vec();
                first.push(Atom::Poly(demazure(group, *i, f)));
                first.extend_from_slice(&seq[p + 2..]);
                let mut second = seq[..p].to_vec();
                second.push(Atom::Poly(act(group, group.generator(*i), f)));
                second.push(Atom::G(*i));
                second.extend_from_slice(&seq[p + 2..]);
                work.push(first);
                work.push(second);
            }
        }
    }
    out
}

/// Leading-coefficient and lower-order data for one rank-two pair.
#[derive(Clone, Debug)]
pub struct KeyIdentityReport {
    pub k: usize,
    pub l: usize,
    pub m: u32,
    pub delta: Polynomial,
    /// Coefficient of `G_k G_l G_k ...` (length m) in `B_kl`.
    pub leading_k: Polynomial,
    /// Coefficient of `G_l G_k G_l ...` (length m) in `B_kl`.
    pub leading_l: Polynomial,
    /// `a_k * s_k(a_l) * s_k s_l(a_k) * ...`
    pub root_product_k: Polynomial,
    /// `a_l * s_l(a_k) * s_l s_k(a_l) * ...`
    pub root_product_l: Polynomial,
    /// Every two-letter word shorter than `m` with its coefficient in `B_kl`.
    pub lower_order: Vec<(GWord, Polynomial)>,
    pub residual: DescentElement,
}

impl KeyIdentityReport {
    pub fn lower_order_vanishes(&self) -> bool {
        self.lower_order.iter().all(|(_, f)| f.is_zero())
    }

    /// The two leading coefficients agree up to the sign of the difference,
    /// and both equal `(-1)^m Delta`.
    pub fn leading_coefficients_match(&self) -> bool {
        let sign = if self.m.is_multiple_of(2) { 1 } else { -1 };
        let field = self.delta.field();
        let signed = self.delta.scale(&field.from_int(sign));
        self.root_product_k == self.root_product_l
            && self.root_product_k == self.delta
            && self.leading_k == signed
            && self.leading_l == -&signed
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero() && self.lower_order_vanishes() && self.leading_coefficients_match()
    }
}

/// Operations of the descent algebra attached to a group.
#[derive(Clone, Copy, Debug)]
pub struct DescentAlgebra<'g> {
    group: &'g CoxeterGroup,
}

impl<'g> DescentAlgebra<'g> {
    pub fn new(group: &'g CoxeterGroup) -> Self {
        DescentAlgebra { group }
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    fn poly_one(&self) -> Polynomial {
        Polynomial::one(self.group.field(), self.group.rank())
    }

    pub fn one(&self) -> DescentElement {
        DescentElement::monomial(GWord::empty(), self.poly_one())
    }

    pub fn from_poly(&self, f: &Polynomial) -> DescentElement {
        DescentElement::monomial(GWord::empty(), f.clone())
    }

    pub fn word(&self, w: GWord) -> DescentElement {
        DescentElement::monomial(w, self.poly_one())
    }

    pub fn letter(&self, i: usize) -> DescentElement {
        self.word(GWord::letter(i))
    }

    /// `1 - a_i G_i`
    pub fn reflection(&self, i: usize) -> DescentElement {
        self.one()
            .sub(&self.letter(i).scale_left(&self.group.simple_root(i)))
    }

    /// `w * f` rewritten as `sum f'_u u`. The subwords `u` of `w` arise from
    /// pushing `f` leftward one letter at a time.
    pub fn push_left(&self, w: &GWord, f: &Polynomial) -> DescentElement {
        let mut acc = DescentElement::monomial(GWord::empty(), f.clone());
        for &i in w.0.iter().rev() {
            let mut next = DescentElement::zero();
            for (u, g) in &acc.terms {
                // G_i * g * u = D_i(g) u + s_i(g) G_i u
                next.add_term(u.clone(), &demazure(self.group, i, g));
                if let Some(iu) = GWord::letter(i).concat(u) {
                    next.add_term(iu, &act(self.group, self.group.generator(i), g));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn mul(&self, a: &DescentElement, b: &DescentElement) -> DescentElement {
        let mut out = DescentElement::zero();
        for (u, f) in &a.terms {
            for (v, g) in &b.terms {
                for (u2, h) in &self.push_left(u, g).terms {
                    if let Some(w) = u2.concat(v) {
                        out.add_term(w, &(f * h));
                    }
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[DescentElement]) -> DescentElement {
        factors
            .iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// Evaluates an expression with [`DescentAlgebra::mul`].
    pub fn evaluate(&self, e: &FormalExpression) -> DescentElement {
        match e {
            FormalExpression::Poly(f) => self.from_poly(f),
            FormalExpression::G(i) => self.letter(*i),
            FormalExpression::Sum(xs) => xs
                .iter()
                .fold(DescentElement::zero(), |acc, x| acc.add(&self.evaluate(x))),
            FormalExpression::Product(xs) => xs
                .iter()
                .fold(self.one(), |acc, x| self.mul(&acc, &self.evaluate(x))),
            FormalExpression::Neg(x) => self.evaluate(x).neg(),
        }
    }

    /// Normal form by right-to-left rewriting.
    pub fn normal_form(&self, e: &FormalExpression) -> DescentElement {
        rewrite(self.group, e, Strategy::RightmostFirst)
    }

    /// The quotient map sending `G_i` to `D_i`.
    pub fn project_to_hecke(&self, a: &DescentElement) -> HeckeElement {
        let h = NilHecke::new(self.group);
        let mut out = HeckeElement::zero();
        for (w, f) in &a.terms {
            let dw = h.word(&w.0);
            out = out.add(&dw.scale_left(f));
        }
        out
    }

    fn check_pair(&self, k: usize, l: usize) -> Result<u32, DescentError> {
        let n = self.group.rank();
        if k >= n {
            return Err(DescentError::BadGenerator(k + 1));
        }
        if l >= n {
            return Err(DescentError::BadGenerator(l + 1));
        }
        if k == l {
            return Err(DescentError::DoubleLetter(vec![k, l]));
        }
        Ok(self.group.m(k, l))
    }

    /// `B_kl`: difference of the alternating length-`m` products of
    /// `1 - a_k G_k` and `1 - a_l G_l`.
    pub fn coxeter_braid_element(&self, k: usize, l: usize) -> Result<DescentElement, DescentError> {
        let m = self.check_pair(k, l)? as usize;
        let alt = |a: usize, b: usize| {
            let factors: Vec<DescentElement> = CoxeterGroup::alternating(a, b, m)
                .into_iter()
                .map(|i| self.reflection(i))
                .collect();
            self.product(&factors)
        };
        Ok(alt(k, l).sub(&alt(l, k)))
    }

    /// `B^D_kl = G_k G_l G_k ... - G_l G_k G_l ...` (length `m` each).
    pub fn demazure_braid_element(
        &self,
        k: usize,
        l: usize,
    ) -> Result<DescentElement, DescentError> {
        let m = self.check_pair(k, l)? as usize;
        Ok(self
            .word(GWord::alternating(k, l, m))
            .sub(&self.word(GWord::alternating(l, k, m))))
    }

    /// Checks `B_kl = (-1)^m Delta_kl B^D_kl` exactly.
    pub fn key_identity_check(&self, k: usize, l: usize) -> Result<KeyIdentityReport, DescentError> {
        let m = self.check_pair(k, l)?;
        let data = self.group.rank2_root_data(k, l)?;
        let b = self.coxeter_braid_element(k, l)?;
        let bd = self.demazure_braid_element(k, l)?;
        let sign = self.group.field().from_int(if m % 2 == 0 { 1 } else { -1 });
        let residual = b.sub(&bd.scale_left(&data.delta.scale(&sign)));

        let zero = Polynomial::zero(self.group.field(), self.group.rank());
        let coeff = |w: &GWord| b.coeff(w).cloned().unwrap_or_else(|| zero.clone());
        let lower_order = GWord::all_up_to(&[k, l], m as usize - 1)
            .into_iter()
            .map(|w| {
                let c = coeff(&w);
                (w, c)
            })
            .collect();
        let product =
            |seq: &[Polynomial]| seq.iter().fold(self.poly_one(), |acc, r| &acc * r);
        let report = KeyIdentityReport {
            k,
            l,
            m,
            leading_k: coeff(&GWord::alternating(k, l, m as usize)),
            leading_l: coeff(&GWord::alternating(l, k, m as usize)),
            root_product_k: product(&data.sequence_k),
            root_product_l: product(&data.sequence_l),
            delta: data.delta,
            lower_order,
            residual,
        };
        if !report.residual.is_zero() {
            return Err(DescentError::IdentityViolation {
                k,
                l,
                words: report.residual.terms().map(|(w, _)| w.to_string()).collect(),
                residual: report.residual,
            });
        }
        Ok(report)
    }
}
