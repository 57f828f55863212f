//! Sparse multivariate polynomials in the simple-root coordinates `a1..an`.
//!
//! This is the coordinate ring of the reflection representation. The group
//! acts by linear substitution (see [`act`]) and the Demazure operators are
//! `D_i(f) = (f - s_i f) / a_i`, computed with an exact division that never
//! leaves the polynomial ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::coxeter::{CoxeterGroup, ElementId};
use crate::scalar::{parse_rational, Field, Rational, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("rank mismatch: {0} vs {1} variables")]
    RankMismatch(usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("divisor `{0}` is not a nonzero linear form")]
    NotLinear(String),
    #[error("not divisible: remainder `{remainder}`")]
    NotDivisible { remainder: Polynomial },
    #[error("parse error in `{input}`: {msg}")]
    Parse { input: String, msg: String },
}

/// Exponent vector, ordered by total degree and then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials in `nvars` variables of total degree exactly `d`.
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if cur.len() + 1 == nvars {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(nvars, left - e, cur, out);
                cur.pop();
            }
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(nvars, d, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        Polynomial {
            nvars,
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn from_int(field: &Field, nvars: usize, n: i64) -> Self {
        Self::constant(field, nvars, field.from_int(n))
    }

    /// The coordinate `a_{i+1}` (zero-based index `i`).
    pub fn var(field: &Field, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        let mut p = Self::zero(field, nvars);
        p.terms.insert(Monomial::var(nvars, i), field.one());
        p
    }

    /// The linear form `sum_j coeffs[j] * a_{j+1}`.
    pub fn linear(field: &Field, coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(n, j), c.clone());
            }
        }
        p
    }

    pub fn from_terms(
        field: &Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// The constant coefficient, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Degree in which each `a_i` counts 1; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::RankMismatch(self.nvars, other.nvars));
        }
        if self.field != other.field {
            return Err(ScalarError::FieldMismatch(
                self.field.label().into(),
                other.field.label().into(),
            )
            .into());
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(&self.field, self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.field, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism sending `a_{j+1}` to `images[j]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target_vars = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&self.field, target_vars), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&self.field, target_vars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&self.field, target_vars, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                t = &t * &powers[j][e as usize];
            }
            for (m2, c2) in t.terms {
                out.add_term(m2, &c2);
            }
        }
        out
    }

    /// Returns `q` with `q * divisor == self`, for a nonzero linear form
    /// `divisor`. Divides in the variable carrying the divisor's largest
    /// coefficient (by the numeric embedding); the remainder is free of that
    /// variable, so it vanishes exactly when the division is exact.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(divisor)?;
        if divisor.is_zero() || divisor.total_degree() != Some(1) {
            return Err(PolyError::NotLinear(divisor.to_string()));
        }
        let (pivot, lead) = divisor
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| (m.0.iter().position(|&e| e == 1).unwrap(), c))
            .fold(None::<(usize, &Scalar)>, |best, (v, c)| match best {
                Some((_, bc)) if bc.to_f64().abs() >= c.to_f64().abs() => best,
                _ => Some((v, c)),
            })
            .unwrap();
        let lead_inv = lead.inv()?;

        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.field, self.nvars);
        loop {
            // highest power of the pivot variable still present
            let next = rem
                .terms
                .iter()
                .filter(|(m, _)| m.0[pivot] > 0)
                .max_by_key(|(m, _)| m.0[pivot])
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = next else { break };
            let mut qm = m.0.clone();
            qm[pivot] -= 1;
            let qm = Monomial(qm);
            let qc = &c * &lead_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), &-(&qc * dc));
            }
            quot.add_term(qm, &qc);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(PolyError::NotDivisible { remainder: rem })
        }
    }

    /// Numeric evaluation under the field's real embedding.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                c.to_f64()
                    * m.0
                        .iter()
                        .zip(point)
                        .map(|(&e, x)| x.powi(e as i32))
                        .product::<f64>()
            })
            .sum()
    }

    /// Parses the canonical text form, e.g. `2*a1^2*a2 + (c-1)*a2`.
    pub fn parse(field: &Field, nvars: usize, input: &str) -> Result<Polynomial, PolyError> {
        let mut p = Parser {
            field,
            nvars,
            input,
            chars: input.char_indices().peekable(),
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.chars.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

/// Parses a scalar written either as a rational `n/d` or as an expression in `c`.
pub fn parse_scalar(field: &Field, input: &str) -> Result<Scalar, PolyError> {
    if let Ok(r) = parse_rational(input) {
        return Ok(field.from_rational(r));
    }
    let p = Polynomial::parse(field, 0, input)?;
    Ok(p.as_constant().expect("no variables in scope"))
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms && self.field == other.field
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$imp(rhs).expect("polynomial operands are incompatible")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, try_add);
forward_poly_binop!(Sub, sub, try_sub);
forward_poly_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-self.field.one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn monomial_text(m: &Monomial) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, &e)| {
            if e == 1 {
                format!("a{}", j + 1)
            } else {
                format!("a{}^{}", j + 1, e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, mag) = match c.as_rational() {
                Some(r) => (r < &Rational::zero(), c.field().from_rational(r.abs_val())),
                None if c.is_atomic() && c.to_string().starts_with('-') => (true, -c),
                None => (false, c.clone()),
            };
            let mono = monomial_text(m);
            let coef = if mag.is_atomic() || mag.as_rational().is_some() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => coef,
                (false, true) => mono,
                (false, false) => format!("{coef}*{mono}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

trait AbsVal {
    fn abs_val(&self) -> Self;
}

impl AbsVal for Rational {
    fn abs_val(&self) -> Self {
        if self < &Rational::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

struct Parser<'a> {
    field: &'a Field,
    nvars: usize,
    input: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Parser<'_> {
    fn err(&mut self, msg: &str) -> PolyError {
        let at = self.chars.peek().map_or(self.input.len(), |(i, _)| *i);
        PolyError::Parse {
            input: self.input.to_string(),
            msg: format!("{msg} at offset {at}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, ch)| ch.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|(_, ch)| *ch)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, ch)) = self.chars.peek() {
            if ch.is_ascii_digit() {
                s.push(ch);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.chars.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.chars.next();
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.chars.next();
                    let d = self.unary()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| self.err("division by a non-constant"))?;
                    acc = acc.scale(&c.inv()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some('-') => {
                self.chars.next();
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.chars.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            self.skip_ws();
            let e = self.digits();
            let e: u32 = e.parse().map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.chars.next();
                Ok(e)
            }
            Some(ch) if ch.is_ascii_digit() => {
                let n: num_bigint::BigInt = self.digits().parse().unwrap();
                Ok(Polynomial::constant(
                    self.field,
                    self.nvars,
                    self.field.from_rational(Rational::from_integer(n)),
                ))
            }
            Some('a') => {
                self.chars.next();
                let idx: usize = self
                    .digits()
                    .parse()
                    .map_err(|_| self.err("expected variable index"))?;
                if idx == 0 || idx > self.nvars {
                    return Err(self.err(&format!("variable a{idx} out of range")));
                }
                Ok(Polynomial::var(self.field, self.nvars, idx - 1))
            }
            Some('c') => {
                self.chars.next();
                Ok(Polynomial::constant(
                    self.field,
                    self.nvars,
                    self.field.generator(),
                ))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// `act(w, f)`: substitute each `a_j` by `w(a_j)`.
pub fn act(group: &CoxeterGroup, w: ElementId, f: &Polynomial) -> Polynomial {
    if w == group.identity() {
        return f.clone();
    }
    f.substitute(&group.root_images(w))
}

/// The Demazure operator `D_i(f) = (f - s_i f) / a_i`.
pub fn demazure(group: &CoxeterGroup, i: usize, f: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    let diff = f - &act(group, group.generator(i), f);
    diff.divide_exact(&group.simple_root(i))
        .expect("f - s_i(f) is always divisible by a_i")
}

/// Composite `D_{w_1} D_{w_2} ... D_{w_r}` applied to `f` (rightmost letter first).
pub fn demazure_word(group: &CoxeterGroup, word: &[usize], f: &Polynomial) -> Polynomial {
    word.iter()
        .rev()
        .fold(f.clone(), |acc, &i| demazure(group, i, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&q(), 2, s).unwrap()
    }

    #[test]
    fn ring_ops() {
        let a1 = p("a1");
        assert_eq!(&a1 * &a1, p("a1^2"));
        assert!((p("a1+a2") - p("a1+a2")).is_zero());
        assert_eq!(
            p("a1") * p("a1+a2") * p("a2"),
            p("a1^2*a2 + a1*a2^2")
        );
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("a1^2").divide_exact(&p("a1")).unwrap(), p("a1"));
        match p("a1+a2").divide_exact(&p("a1")) {
            Err(PolyError::NotDivisible { remainder }) => assert_eq!(remainder, p("a2")),
            other => panic!("unexpected {other:?}"),
        }
        let f = p("(a1+2*a2)*(a1-a2)^2");
        assert_eq!(f.divide_exact(&p("a1-a2")).unwrap(), p("(a1+2*a2)*(a1-a2)"));
        assert!(f.divide_exact(&p("a1^2")).is_err());
        assert!(f.divide_exact(&p("0")).is_err());
    }

    #[test]
    fn text_round_trip() {
        let k = Field::two_cos_pi_over(5).unwrap();
        let f = Polynomial::parse(&k, 2, "2*a1^2*a2 + (c-1)*a2 - c*a1 - 1/2").unwrap();
        assert_eq!(f.to_string(), "2*a1^2*a2 - c*a1 + (c-1)*a2 - 1/2");
        assert_eq!(Polynomial::parse(&k, 2, &f.to_string()).unwrap(), f);
        assert_eq!(p("-a1 + 3").to_string(), "-a1 + 3");
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        assert!(Polynomial::parse(&q(), 2, "a3").is_err());
        assert!(Polynomial::parse(&q(), 2, "a1 +").is_err());
        assert!(Polynomial::parse(&q(), 2, "a1 / a2").is_err());
        assert!(Polynomial::parse(&q(), 2, "(a1").is_err());
    }

    #[test]
    fn grading() {
        assert_eq!(p("a1^2*a2 - a2^3").homogeneous_degree(), Some(3));
        assert_eq!(p("a1^2 + a2").homogeneous_degree(), None);
        assert!(p("0").is_homogeneous());
        assert_eq!(Monomial::of_degree(3, 2).len(), 6);
    }
}
