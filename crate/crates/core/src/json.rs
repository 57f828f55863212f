//! JSON representations of groups, algebra elements and certificates.
//!
//! Generator indices and words are 1-based on the wire, matching `a1`, `G1`
//! in the text forms. Polynomials are written as a list of
//! `{"exp": [..], "coeff": ".."}` terms in graded-lex order; a text
//! polynomial such as `"2*a1^2 - c*a2"` is accepted on input as well.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{CertTerm, Certificate, Provenance};
use crate::coxeter::{default_field, preset, CoxeterError, CoxeterGroup};
use crate::descent::{DescentElement, DescentError, GWord};
use crate::nilhecke::HeckeElement;
use crate::poly::{parse_scalar, Monomial, PolyError, Polynomial};
use crate::scalar::{parse_rational, Field, Rational, Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid value: {0}")]
    Invalid(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Descent(#[from] DescentError),
}

fn invalid(msg: impl Into<String>) -> JsonError {
    JsonError::Invalid(msg.into())
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum RationalRepr {
    Int(i64),
    Text(String),
}

impl RationalRepr {
    pub fn to_rational(&self) -> Result<Rational, JsonError> {
        match self {
            RationalRepr::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalRepr::Text(s) => Ok(parse_rational(s)?),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        RationalRepr::Text(r.to_string())
    }
}

/// A field element: an integer, text (`"1/2"`, `"c-1"`) or power-basis coordinates.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Text(String),
    Coords(Vec<RationalRepr>),
}

pub fn scalar_to_json(s: &Scalar) -> ScalarRepr {
    ScalarRepr::Text(s.to_string())
}

pub fn scalar_from_json(field: &Field, r: &ScalarRepr) -> Result<Scalar, JsonError> {
    match r {
        ScalarRepr::Int(n) => Ok(field.from_int(*n)),
        ScalarRepr::Text(s) => Ok(parse_scalar(field, s)?),
        ScalarRepr::Coords(cs) => {
            let coords = cs
                .iter()
                .map(RationalRepr::to_rational)
                .collect::<Result<_, _>>()?;
            Ok(field.from_coords(coords)?)
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TermRepr {
    pub exp: Vec<u32>,
    pub coeff: ScalarRepr,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum PolyRepr {
    Text(String),
    Terms(Vec<TermRepr>),
}

pub fn poly_to_json(f: &Polynomial) -> PolyRepr {
    PolyRepr::Terms(
        f.terms()
            .map(|(m, c)| TermRepr {
                exp: m.0.clone(),
                coeff: scalar_to_json(c),
            })
            .collect(),
    )
}

pub fn poly_from_json(field: &Field, nvars: usize, r: &PolyRepr) -> Result<Polynomial, JsonError> {
    match r {
        PolyRepr::Text(s) => Ok(Polynomial::parse(field, nvars, s)?),
        PolyRepr::Terms(ts) => {
            let mut terms = Vec::with_capacity(ts.len());
            for t in ts {
                if t.exp.len() != nvars {
                    return Err(invalid(format!(
                        "exponent vector {:?} does not have {nvars} entries",
                        t.exp
                    )));
                }
                terms.push((Monomial(t.exp.clone()), scalar_from_json(field, &t.coeff)?));
            }
            Ok(Polynomial::from_terms(field, nvars, terms))
        }
    }
}

/// A field: preset name, minimal polynomial (constant term first), or both
/// with the real embedding of the generator.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum FieldRepr {
    Name(String),
    MinPoly(Vec<RationalRepr>),
    Full {
        min_poly: Vec<RationalRepr>,
        #[serde(skip_serializing_if = "Option::is_none")]
        root: Option<f64>,
    },
}

impl FieldRepr {
    pub fn from_field(f: &Field) -> Self {
        if f.is_rational() {
            return FieldRepr::Name("Q".into());
        }
        for name in ["sqrt2", "golden", "sqrt3"] {
            if Field::preset(name).is_ok_and(|p| p == *f) {
                return FieldRepr::Name(name.into());
            }
        }
        FieldRepr::Full {
            min_poly: f.min_poly().iter().map(RationalRepr::from_rational).collect(),
            root: Some(f.root_approx()),
        }
    }

    pub fn to_field(&self) -> Result<Field, JsonError> {
        let coeffs = |cs: &[RationalRepr]| -> Result<Vec<Rational>, JsonError> {
            cs.iter().map(RationalRepr::to_rational).collect()
        };
        Ok(match self {
            FieldRepr::Name(n) => Field::preset(n)?,
            FieldRepr::MinPoly(cs) => Field::new(coeffs(cs)?)?,
            FieldRepr::Full { min_poly, root } => match root {
                Some(r) => Field::with_root(coeffs(min_poly)?, *r, None)?,
                None => Field::new(coeffs(min_poly)?)?,
            },
        })
    }
}

/// `{"preset": ..}` or `{"coxeter_matrix": .., "cartan"?: .., "field"?: ..}`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Default)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coxeter_matrix: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<ScalarRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldRepr>,
}

impl GroupConfig {
    pub fn preset(name: &str) -> Self {
        GroupConfig {
            preset: Some(name.into()),
            ..Default::default()
        }
    }

    /// Presets are written by name, anything else in full.
    pub fn from_group(g: &CoxeterGroup) -> Self {
        if let Some(label) = g.label() {
            if preset(label).is_ok_and(|p| p.cartan() == g.cartan() && p.field() == g.field()) {
                return GroupConfig::preset(label);
            }
        }
        GroupConfig {
            preset: None,
            coxeter_matrix: Some(g.coxeter_matrix().to_vec()),
            cartan: Some(
                g.cartan()
                    .iter()
                    .map(|row| row.iter().map(scalar_to_json).collect())
                    .collect(),
            ),
            field: Some(FieldRepr::from_field(g.field())),
        }
    }

    pub fn build(&self) -> Result<CoxeterGroup, JsonError> {
        match (&self.preset, &self.coxeter_matrix) {
            (Some(name), None) if self.cartan.is_none() && self.field.is_none() => Ok(preset(name)?),
            (Some(_), _) => Err(invalid("a preset cannot be combined with explicit group data")),
            (None, None) => Err(invalid("group config needs `preset` or `coxeter_matrix`")),
            (None, Some(cox)) => {
                let field = match &self.field {
                    Some(f) => f.to_field()?,
                    None => default_field(cox)?,
                };
                let cartan = match &self.cartan {
                    Some(rows) => Some(
                        rows.iter()
                            .map(|row| {
                                row.iter()
                                    .map(|s| scalar_from_json(&field, s))
                                    .collect::<Result<Vec<_>, _>>()
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                    None => None,
                };
                Ok(CoxeterGroup::new(cox.clone(), cartan, Some(field))?)
            }
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self, JsonError> {
        Ok(serde_json::from_str(s)?)
    }
}

fn word_to_json(letters: &[usize]) -> Vec<usize> {
    letters.iter().map(|i| i + 1).collect()
}

fn word_from_json(g: &CoxeterGroup, letters: &[usize]) -> Result<Vec<usize>, JsonError> {
    letters
        .iter()
        .map(|&i| {
            if i == 0 || i > g.rank() {
                Err(invalid(format!("generator index {i} out of range 1..={}", g.rank())))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct WordTermRepr {
    pub word: Vec<usize>,
    pub coeff: PolyRepr,
}

pub fn hecke_to_json(g: &CoxeterGroup, x: &HeckeElement) -> Vec<WordTermRepr> {
    x.terms()
        .map(|(w, f)| WordTermRepr {
            word: word_to_json(g.word(w)),
            coeff: poly_to_json(f),
        })
        .collect()
}

/// Words must be reduced; any reduced word of the element is accepted.
pub fn hecke_from_json(g: &CoxeterGroup, terms: &[WordTermRepr]) -> Result<HeckeElement, JsonError> {
    let mut out = HeckeElement::zero();
    for t in terms {
        let word = word_from_json(g, &t.word)?;
        if !g.is_reduced(&word) {
            return Err(invalid(format!("word {:?} is not reduced", t.word)));
        }
        out.add_term(g.from_word(&word), &poly_from_json(g.field(), g.rank(), &t.coeff)?);
    }
    Ok(out)
}

pub fn descent_to_json(x: &DescentElement) -> Vec<WordTermRepr> {
    x.terms()
        .map(|(w, f)| WordTermRepr {
            word: word_to_json(w.letters()),
            coeff: poly_to_json(f),
        })
        .collect()
}

pub fn descent_from_json(g: &CoxeterGroup, terms: &[WordTermRepr]) -> Result<DescentElement, JsonError> {
    let mut out = DescentElement::zero();
    for t in terms {
        let word = GWord::new(word_from_json(g, &t.word)?)?;
        out.add_term(word, &poly_from_json(g.field(), g.rank(), &t.coeff)?);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CertTermRepr {
    pub q: ScalarRepr,
    pub p: PolyRepr,
    pub left: Vec<WordTermRepr>,
    pub gen: [usize; 2],
    pub right: Vec<WordTermRepr>,
    pub from: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CertificateRepr {
    pub group: GroupConfig,
    pub pair: [usize; 2],
    pub target: Vec<WordTermRepr>,
    pub terms: Vec<CertTermRepr>,
}

fn pair_from_json(g: &CoxeterGroup, p: [usize; 2]) -> Result<(usize, usize), JsonError> {
    let w = word_from_json(g, &p)?;
    if w[0] == w[1] {
        return Err(invalid(format!("pair {p:?} repeats a generator")));
    }
    Ok((w[0], w[1]))
}

pub fn certificate_to_json(g: &CoxeterGroup, c: &Certificate) -> CertificateRepr {
    CertificateRepr {
        group: GroupConfig::from_group(g),
        pair: [c.pair.0 + 1, c.pair.1 + 1],
        target: descent_to_json(&c.target),
        terms: c
            .terms
            .iter()
            .map(|t| CertTermRepr {
                q: scalar_to_json(&t.q),
                p: poly_to_json(&t.p),
                left: descent_to_json(&t.left),
                gen: [t.gen.0 + 1, t.gen.1 + 1],
                right: descent_to_json(&t.right),
                from: t.from.as_str().into(),
            })
            .collect(),
    }
}

/// Rebuilds the group named in the file and the certificate over it.
pub fn certificate_from_json(r: &CertificateRepr) -> Result<(CoxeterGroup, Certificate), JsonError> {
    let g = r.group.build()?;
    let field = g.field().clone();
    let mut terms = Vec::with_capacity(r.terms.len());
    for t in &r.terms {
        terms.push(CertTerm {
            q: scalar_from_json(&field, &t.q)?,
            p: poly_from_json(&field, g.rank(), &t.p)?,
            left: descent_from_json(&g, &t.left)?,
            gen: pair_from_json(&g, t.gen)?,
            right: descent_from_json(&g, &t.right)?,
            from: Provenance::parse(&t.from)
                .ok_or_else(|| invalid(format!("unknown provenance `{}`", t.from)))?,
        });
    }
    let cert = Certificate {
        pair: pair_from_json(&g, r.pair)?,
        target: descent_from_json(&g, &r.target)?,
        terms,
    };
    Ok((g, cert))
}

/// Pretty JSON with a trailing newline; output is deterministic because
/// every collection above is emitted in canonical order.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
