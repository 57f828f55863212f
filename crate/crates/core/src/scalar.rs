//! Exact coefficient fields: the rationals and simple algebraic extensions
//! `Q[x]/(p)` given by a monic minimal polynomial.
//!
//! Non-crystallographic Cartan entries such as `-2cos(pi/5)` live in a
//! degree-two extension; every other shipped group lives over `Q` or over
//! `Q(sqrt 2)` / `Q(sqrt 3)` when the symmetric Cartan matrix is requested.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: `{0}` vs `{1}`")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("minimal polynomial `{0}` is reducible (inversion hit a nontrivial gcd)")]
    ReducibleMinimalPolynomial(String),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

struct FieldData {
    /// Coefficients of the minimal polynomial, constant term first; monic.
    min_poly: Vec<Rational>,
    /// Designated real embedding of the generator (NaN when none was found).
    root: f64,
    label: String,
}

/// A coefficient field `Q[c]/(p(c))`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl Field {
    /// Builds a field from a monic minimal polynomial (constant term first).
    ///
    /// Irreducibility is not checked here; a reducible `p` is reported the
    /// first time an inversion hits a zero divisor.
    pub fn new(min_poly: Vec<Rational>) -> Result<Field, ScalarError> {
        let root = largest_real_root(&min_poly);
        Self::with_root(min_poly, root, None)
    }

    pub fn with_root(
        min_poly: Vec<Rational>,
        root: f64,
        label: Option<String>,
    ) -> Result<Field, ScalarError> {
        if min_poly.len() < 2 {
            return Err(ScalarError::InvalidField(
                "minimal polynomial must have degree at least 1".into(),
            ));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(ScalarError::InvalidField(format!(
                "minimal polynomial `{}` is not monic",
                upoly_to_string(&min_poly, "x")
            )));
        }
        let label = label.unwrap_or_else(|| {
            if min_poly.len() == 2 {
                "Q".to_string()
            } else {
                format!("Q[c]/({})", upoly_to_string(&min_poly, "c"))
            }
        });
        Ok(Field(Arc::new(FieldData {
            min_poly,
            root,
            label,
        })))
    }

    pub fn rationals() -> Field {
        Self::with_root(vec![rat(0), rat(1)], 0.0, Some("Q".into())).unwrap()
    }

    /// The field generated by `2cos(pi/m)` for `m` in `2..=6`.
    pub fn two_cos_pi_over(m: u32) -> Result<Field, ScalarError> {
        let root = 2.0 * (std::f64::consts::PI / m as f64).cos();
        let (poly, label) = match m {
            2 => (vec![rat(0), rat(1)], "Q"),
            3 => (vec![rat(-1), rat(1)], "Q"),
            4 => (vec![rat(-2), rat(0), rat(1)], "Q(sqrt2)"),
            5 => (vec![rat(-1), rat(-1), rat(1)], "Q(c), c^2=c+1"),
            6 => (vec![rat(-3), rat(0), rat(1)], "Q(sqrt3)"),
            _ => {
                return Err(ScalarError::InvalidField(format!(
                    "no preset field for 2cos(pi/{m})"
                )))
            }
        };
        Self::with_root(poly, root, Some(label.into()))
    }

    /// Looks up a named preset: `Q`, `sqrt2`, `sqrt3`, `golden`.
    pub fn preset(name: &str) -> Result<Field, ScalarError> {
        match name {
            "Q" | "rationals" => Ok(Self::rationals()),
            "sqrt2" => Self::two_cos_pi_over(4),
            "golden" | "Q5" => Self::two_cos_pi_over(5),
            "sqrt3" => Self::two_cos_pi_over(6),
            other => Err(ScalarError::InvalidField(format!(
                "unknown field preset `{other}`"
            ))),
        }
    }

    pub fn degree(&self) -> usize {
        self.0.min_poly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.0.min_poly
    }

    pub fn root_approx(&self) -> f64 {
        self.0.root
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(rat(n))
    }

    pub fn from_rational(&self, r: Rational) -> Scalar {
        let mut s = self.zero();
        s.coords[0] = r;
        s
    }

    /// The generator `c`. In a degree-one field this is the rational root of `p`.
    pub fn generator(&self) -> Scalar {
        if self.degree() == 1 {
            return self.from_rational(-self.0.min_poly[0].clone());
        }
        let mut s = self.zero();
        s.coords[1] = Rational::one();
        s
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<Scalar, ScalarError> {
        if coords.len() != self.degree() {
            return Err(ScalarError::Parse(format!(
                "expected {} coordinates, found {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(Scalar {
            field: self.clone(),
            coords,
        })
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        // every degree-one field is Q
        if self.degree() == 1 && other.degree() == 1 {
            return true;
        }
        self.0.min_poly == other.0.min_poly
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.label())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An element of a [`Field`], stored as its coordinates in the power basis
/// `1, c, ..., c^{d-1}`.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    coords: Vec<Rational>,
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// Returns the value when the scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(
                self.field.label().into(),
                other.field.label().into(),
            ))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        let d = self.field.degree();
        if d == 1 {
            return Ok(Scalar {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        let product = upoly_mul(&self.coords, &other.coords);
        Ok(Scalar {
            field: self.field.clone(),
            coords: reduce_mod(product, self.field.min_poly()),
        })
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `p`.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        let p = self.field.min_poly().to_vec();
        let (g, s) = ext_gcd_left(trim(self.coords.clone()), p.clone());
        if g.len() != 1 {
            return Err(ScalarError::ReducibleMinimalPolynomial(upoly_to_string(
                &p, "x",
            )));
        }
        let g0 = g[0].recip();
        let mut coords: Vec<Rational> = reduce_mod(s, &p).iter().map(|a| a * &g0).collect();
        coords.resize(self.field.degree(), Rational::zero());
        Ok(Scalar {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value under the designated real embedding. Diagnostic only.
    pub fn to_f64(&self) -> f64 {
        let c = self.field.root_approx();
        let mut acc = 0.0;
        let mut power = 1.0;
        for a in &self.coords {
            acc += a.to_f64().unwrap_or(f64::NAN) * power;
            power *= c;
        }
        acc
    }

    /// Whether the value prints as a single token (no `+`/`-` inside).
    pub fn is_atomic(&self) -> bool {
        let nonzero = self.coords.iter().filter(|a| !a.is_zero()).count();
        nonzero <= 1
            && (self.coords[0].is_zero() || self.coords[0].is_integer())
            && self.coords[1..]
                .iter()
                .all(|a| a.is_zero() || a.abs().is_one())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field == other.field
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        f.write_str(&upoly_to_string(&self.coords, "c"))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs).expect("scalar operands from different fields")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        assert!(self.field == rhs.field, "scalar operands from different fields");
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        assert!(self.field == rhs.field, "scalar operands from different fields");
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a -= b;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// --- univariate helpers over Q, coefficient vectors constant term first ---

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        v.push(Rational::zero());
    }
    v
}

fn is_zero_poly(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn upoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn upoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect()
}

/// Division with remainder; `b` must be nonzero.
fn upoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !is_zero_poly(&r) {
        let dr = r.len() - 1;
        let t = &r[dr] / &lead;
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            r[i + shift] -= &t * bi;
        }
        q[shift] = t;
        r.pop();
        r = trim(r);
        if dr == 0 {
            break;
        }
    }
    (trim(q), trim(r))
}

/// Reduces `a` modulo the monic `p`, returning exactly `deg p` coordinates.
fn reduce_mod(mut a: Vec<Rational>, p: &[Rational]) -> Vec<Rational> {
    let d = p.len() - 1;
    while a.len() > d {
        let top = a.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = a.len() - d;
        for (i, pi) in p[..d].iter().enumerate() {
            a[i + shift] -= &top * pi;
        }
    }
    a.resize(d, Rational::zero());
    a
}

/// Returns `(g, s)` with `s*a = g (mod b)` and `g = gcd(a, b)` up to a unit.
fn ext_gcd_left(a: Vec<Rational>, b: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (trim(a), trim(b));
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = upoly_divrem(&r0, &r1);
        let s2 = trim(upoly_sub(&s0, &upoly_mul(&q, &s1)));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

fn upoly_to_string(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (i, a) in coeffs.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let mag = a.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { "-" } else { "+" });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Largest real root of a rational polynomial, located by a sign scan inside
/// the Cauchy bound and refined by bisection. NaN when there is none.
fn largest_real_root(p: &[Rational]) -> f64 {
    if p.len() < 2 {
        return f64::NAN;
    }
    let coeffs: Vec<f64> = p.iter().map(|a| a.to_f64().unwrap_or(0.0)).collect();
    let lead = *coeffs.last().unwrap();
    if lead == 0.0 {
        return f64::NAN;
    }
    let bound = 1.0
        + coeffs[..coeffs.len() - 1]
            .iter()
            .map(|a| (a / lead).abs())
            .fold(0.0, f64::max);
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, a| acc * x + a);
    let steps = 20_000;
    let h = 2.0 * bound / steps as f64;
    let mut hi = bound;
    let mut f_hi = eval(hi);
    for s in 1..=steps {
        let lo = bound - h * s as f64;
        let f_lo = eval(lo);
        if f_lo == 0.0 {
            return lo;
        }
        if f_lo.signum() != f_hi.signum() {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if eval(mid).signum() == eval(a).signum() {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        hi = lo;
        f_hi = f_lo;
    }
    f64::NAN
}
