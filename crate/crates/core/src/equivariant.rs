//! Free graded modules over the polynomial ring with a semilinear action of
//! the simple reflections, and the descent test along each `s_i`.
//!
//! A module has generators `e_a` and for each `i` a matrix `S_i` with
//! `s_i(f e_a) = s_i(f) * sum_b S_i[b][a] e_b`. Elements are coefficient
//! vectors, so `s_i(x) = S_i * s_i(x)` with `s_i` applied entrywise on the
//! right.
//!
//! Descent along `s_i` means `(1 - s_i)(x)` is divisible by `a_i` for every
//! `x`. On a free module it is enough to test the generators, because
//! `(1 - s_i)(f e) = (f - s_i f) e + s_i(f) (1 - s_i)(e)`. When it holds,
//! `G_i(x) = ((1 - s_i) x) / a_i` satisfies `G_i(f e) = D_i(f) e + s_i(f) G_i(e)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::CoxeterGroup;
use crate::json::{poly_from_json, GroupConfig, JsonError, PolyRepr};
use crate::poly::{act, demazure, PolyError, Polynomial};

#[derive(Debug, Error)]
pub enum EquivariantError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not an action: {relation} fails on generator e{generator}")]
    NotAnAction { relation: String, generator: usize },
    #[error("entry S{i}[{row}][{col}] = {entry} has the wrong degree")]
    NotGraded {
        i: usize,
        row: usize,
        col: usize,
        entry: Polynomial,
    },
    #[error(transparent)]
    Json(#[from] JsonError),
}

/// Square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self, EquivariantError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(EquivariantError::Shape("matrix is not square".into()));
        }
        Ok(PolyMatrix { rows })
    }

    pub fn identity(g: &CoxeterGroup, n: usize) -> Self {
        let zero = Polynomial::zero(g.field(), g.rank());
        let one = Polynomial::one(g.field(), g.rank());
        let rows = (0..n)
            .map(|r| (0..n).map(|c| if r == c { one.clone() } else { zero.clone() }).collect())
            .collect();
        PolyMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        self.rows.iter().map(|r| r[c].clone()).collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let n = self.size();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (1..n).fold(&self.rows[r][0] * &other.rows[0][c], |acc, k| {
                            &acc + &(&self.rows[r][k] * &other.rows[k][c])
                        })
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { rows }
    }

    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .skip(1)
                    .fold(&row[0] * &v[0], |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn act(&self, g: &CoxeterGroup, i: usize) -> PolyMatrix {
        let s = g.generator(i);
        PolyMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|f| act(g, s, f)).collect())
                .collect(),
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|f| f.to_string()).collect())
            .collect()
    }
}

fn act_vec(g: &CoxeterGroup, i: usize, v: &[Polynomial]) -> Vec<Polynomial> {
    v.iter().map(|f| act(g, g.generator(i), f)).collect()
}

/// A validated equivariant module.
#[derive(Clone, Debug)]
pub struct EquivariantModule<'g> {
    group: &'g CoxeterGroup,
    degrees: Vec<i64>,
    actions: Vec<PolyMatrix>,
}

/// `G_i` on the generators: column `a` is `G_i(e_a)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GOperator {
    pub i: usize,
    pub matrix: PolyMatrix,
}

/// `(1 - s_i)(e_generator)` has a component not divisible by `a_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct DescentFailure {
    pub i: usize,
    pub generator: usize,
    pub component: usize,
    pub remainder: Polynomial,
}

impl fmt::Display for DescentFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(1 - s{})(e{}) has component {} with remainder {} mod a{}",
            self.i + 1,
            self.generator + 1,
            self.component + 1,
            self.remainder,
            self.i + 1
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidReport {
    pub k: usize,
    pub l: usize,
    /// `differences[a]` is the difference of the two composites on `e_a`.
    pub differences: Vec<Vec<Polynomial>>,
}

impl BraidReport {
    pub fn is_zero(&self) -> bool {
        self.differences.iter().flatten().all(Polynomial::is_zero)
    }
}

impl<'g> EquivariantModule<'g> {
    /// Validates shape, grading, the involution `S_i * s_i(S_i) = 1` and the
    /// braid relation `(s_i s_j)^{m_ij} = 1` on generators.
    pub fn new(
        group: &'g CoxeterGroup,
        degrees: Vec<i64>,
        actions: Vec<PolyMatrix>,
    ) -> Result<Self, EquivariantError> {
        let n = degrees.len();
        if actions.len() != group.rank() {
            return Err(EquivariantError::Shape(format!(
                "expected {} action matrices, found {}",
                group.rank(),
                actions.len()
            )));
        }
        for (i, s) in actions.iter().enumerate() {
            if s.size() != n {
                return Err(EquivariantError::Shape(format!(
                    "S{} is {}x{}, expected {n}x{n}",
                    i + 1,
                    s.size(),
                    s.size()
                )));
            }
            for (r, row) in s.rows.iter().enumerate() {
                for (c, f) in row.iter().enumerate() {
                    if f.nvars() != group.rank() || *f.field() != *group.field() {
                        return Err(EquivariantError::Shape(format!(
                            "S{}[{}][{}] is over the wrong ring",
                            i + 1,
                            r + 1,
                            c + 1
                        )));
                    }
                    let want = degrees[c] - degrees[r];
                    let ok = f.is_zero()
                        || f.homogeneous_degree().is_some_and(|d| d as i64 == want);
                    if !ok {
                        return Err(EquivariantError::NotGraded {
                            i: i + 1,
                            row: r + 1,
                            col: c + 1,
                            entry: f.clone(),
                        });
                    }
                }
            }
        }
        let module = EquivariantModule {
            group,
            degrees,
            actions,
        };
        for i in 0..group.rank() {
            for a in 0..n {
                let e = module.basis_vector(a);
                if module.reflect(i, &module.reflect(i, &e)) != e {
                    return Err(EquivariantError::NotAnAction {
                        relation: format!("s{0}^2 = 1", i + 1),
                        generator: a + 1,
                    });
                }
            }
        }
        for i in 0..group.rank() {
            for j in i + 1..group.rank() {
                let m = group.m(i, j) as usize;
                let word = CoxeterGroup::alternating(i, j, 2 * m);
                for a in 0..n {
                    let e = module.basis_vector(a);
                    let image = word.iter().rev().fold(e.clone(), |x, &s| module.reflect(s, &x));
                    if image != e {
                        return Err(EquivariantError::NotAnAction {
                            relation: format!("(s{} s{})^{m} = 1", i + 1, j + 1),
                            generator: a + 1,
                        });
                    }
                }
            }
        }
        Ok(module)
    }

    /// The trivial module on generators of the given degrees.
    pub fn trivial(group: &'g CoxeterGroup, degrees: Vec<i64>) -> Result<Self, EquivariantError> {
        let n = degrees.len();
        let actions = vec![PolyMatrix::identity(group, n); group.rank()];
        Self::new(group, degrees, actions)
    }

    /// The trivial module rewritten in the basis `e'_a = sum_b P[b][a] e_b`
    /// for an upper unitriangular `P`: `S_i = P^{-1} s_i(P)`.
    pub fn unitriangular_twist(
        group: &'g CoxeterGroup,
        degrees: Vec<i64>,
        p: &PolyMatrix,
    ) -> Result<Self, EquivariantError> {
        let n = p.size();
        for r in 0..n {
            for c in 0..=r {
                let want_one = r == c;
                let f = p.get(r, c);
                let ok = if want_one { f.as_constant().is_some_and(|s| s.is_one()) } else { f.is_zero() };
                if !ok {
                    return Err(EquivariantError::Shape("P must be upper unitriangular".into()));
                }
            }
        }
        let inv = unitriangular_inverse(group, p);
        let actions = (0..group.rank()).map(|i| inv.mul(&p.act(group, i))).collect();
        Self::new(group, degrees, actions)
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn action(&self, i: usize) -> &PolyMatrix {
        &self.actions[i]
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Polynomial> {
        let g = self.group;
        (0..self.rank())
            .map(|b| {
                if a == b {
                    Polynomial::one(g.field(), g.rank())
                } else {
                    Polynomial::zero(g.field(), g.rank())
                }
            })
            .collect()
    }

    /// `s_i(x)`
    pub fn reflect(&self, i: usize, x: &[Polynomial]) -> Vec<Polynomial> {
        self.actions[i].apply(&act_vec(self.group, i, x))
    }

    /// `(1 - s_i)(x)`
    pub fn one_minus(&self, i: usize, x: &[Polynomial]) -> Vec<Polynomial> {
        x.iter().zip(self.reflect(i, x)).map(|(a, b)| a - &b).collect()
    }

    /// Divides `(1 - s_i)(x)` by `a_i` componentwise: the quotient, or the
    /// first non-divisible component and its remainder.
    pub fn divide_one_minus(
        &self,
        i: usize,
        x: &[Polynomial],
    ) -> Result<Vec<Polynomial>, (usize, Polynomial)> {
        let root = self.group.simple_root(i);
        self.one_minus(i, x)
            .iter()
            .enumerate()
            .map(|(b, f)| match f.divide_exact(&root) {
                Ok(q) => Ok(q),
                Err(PolyError::NotDivisible { remainder }) => Err((b, remainder)),
                Err(e) => panic!("division by a simple root: {e}"),
            })
            .collect()
    }

    /// Generator-level descent test along `s_i`.
    pub fn descent_check(&self, i: usize) -> Result<GOperator, DescentFailure> {
        let mut columns = Vec::with_capacity(self.rank());
        for a in 0..self.rank() {
            match self.divide_one_minus(i, &self.basis_vector(a)) {
                Ok(q) => columns.push(q),
                Err((component, remainder)) => {
                    return Err(DescentFailure {
                        i,
                        generator: a,
                        component,
                        remainder,
                    })
                }
            }
        }
        let n = self.rank();
        let rows = (0..n).map(|r| (0..n).map(|c| columns[c][r].clone()).collect()).collect();
        Ok(GOperator {
            i,
            matrix: PolyMatrix { rows },
        })
    }

    /// `G(x) = D_i(x) + G * s_i(x)`, the twisted Leibniz extension.
    pub fn apply_g(&self, op: &GOperator, x: &[Polynomial]) -> Vec<Polynomial> {
        let twisted = op.matrix.apply(&act_vec(self.group, op.i, x));
        x.iter()
            .zip(twisted)
            .map(|(f, t)| &demazure(self.group, op.i, f) + &t)
            .collect()
    }

    /// Compares the alternating composites `G_k G_l G_k ...` and
    /// `G_l G_k G_l ...` of length `m_kl` on every generator.
    pub fn braid_check(&self, gk: &GOperator, gl: &GOperator) -> BraidReport {
        let m = self.group.m(gk.i, gl.i) as usize;
        let compose = |first: &GOperator, second: &GOperator, x: Vec<Polynomial>| {
            // rightmost operator applied first
            (0..m).rev().fold(x, |acc, pos| {
                let op = if pos % 2 == 0 { first } else { second };
                self.apply_g(op, &acc)
            })
        };
        let differences = (0..self.rank())
            .map(|a| {
                let e = self.basis_vector(a);
                let left = compose(gk, gl, e.clone());
                let right = compose(gl, gk, e);
                left.iter().zip(&right).map(|(x, y)| x - y).collect()
            })
            .collect();
        BraidReport {
            k: gk.i,
            l: gl.i,
            differences,
        }
    }
}

/// Inverse of an upper unitriangular matrix by back substitution.
fn unitriangular_inverse(g: &CoxeterGroup, p: &PolyMatrix) -> PolyMatrix {
    let n = p.size();
    let mut inv = PolyMatrix::identity(g, n);
    for c in 0..n {
        for r in (0..c).rev() {
            // (P * inv)[r][c] = 0 for r < c
            let mut acc = Polynomial::zero(g.field(), g.rank());
            for k in r + 1..=c {
                acc = &acc + &(p.get(r, k) * inv.get(k, c));
            }
            inv.rows[r][c] = -acc;
        }
    }
    inv
}

/// On-disk form of a module.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModuleFixture {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub group: GroupConfig,
    pub degrees: Vec<i64>,
    /// `actions[i][row][col]`
    pub actions: Vec<Vec<Vec<PolyRepr>>>,
    /// Expected outcome of the descent test per generator.
    pub expect_descent: Vec<bool>,
}

impl ModuleFixture {
    pub fn parse(text: &str) -> Result<Self, EquivariantError> {
        serde_json::from_str(text).map_err(|e| EquivariantError::Json(e.into()))
    }

    pub fn build_group(&self) -> Result<CoxeterGroup, EquivariantError> {
        Ok(self.group.build()?)
    }

    pub fn module<'g>(&self, group: &'g CoxeterGroup) -> Result<EquivariantModule<'g>, EquivariantError> {
        let mut actions = Vec::with_capacity(self.actions.len());
        for m in &self.actions {
            let rows = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|f| poly_from_json(group.field(), group.rank(), f))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            actions.push(PolyMatrix::new(rows)?);
        }
        EquivariantModule::new(group, self.degrees.clone(), actions)
    }

    pub fn from_module(
        name: &str,
        description: &str,
        group: GroupConfig,
        module: &EquivariantModule<'_>,
        expect_descent: Vec<bool>,
    ) -> Self {
        ModuleFixture {
            name: name.into(),
            description: description.into(),
            group,
            degrees: module.degrees.clone(),
            actions: module
                .actions
                .iter()
                .map(|m| {
                    m.to_strings()
                        .into_iter()
                        .map(|r| r.into_iter().map(PolyRepr::Text).collect())
                        .collect()
                })
                .collect(),
            expect_descent,
        }
    }
}

/// Fixtures shipped with the crate, as `(file name, contents)`.
pub const BUNDLED_FIXTURES: &[(&str, &str)] = &[
    ("a1_trivial.json", include_str!("../fixtures/a1_trivial.json")),
    ("a1_sign.json", include_str!("../fixtures/a1_sign.json")),
    ("a1_twisted.json", include_str!("../fixtures/a1_twisted.json")),
    ("a1xa1_mixed.json", include_str!("../fixtures/a1xa1_mixed.json")),
    ("a2_trivial.json", include_str!("../fixtures/a2_trivial.json")),
    ("a2_twisted.json", include_str!("../fixtures/a2_twisted.json")),
    ("b2_twisted.json", include_str!("../fixtures/b2_twisted.json")),
    ("i2_5_twisted.json", include_str!("../fixtures/i2_5_twisted.json")),
    ("g2_sym_twisted.json", include_str!("../fixtures/g2_sym_twisted.json")),
    ("a3_twisted.json", include_str!("../fixtures/a3_twisted.json")),
    ("h3_twisted.json", include_str!("../fixtures/h3_twisted.json")),
];

pub fn bundled_fixtures() -> Result<Vec<ModuleFixture>, EquivariantError> {
    BUNDLED_FIXTURES.iter().map(|(_, text)| ModuleFixture::parse(text)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::preset;

    fn poly(g: &CoxeterGroup, s: &str) -> Polynomial {
        Polynomial::parse(g.field(), g.rank(), s).unwrap()
    }

    fn matrix(g: &CoxeterGroup, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::new(rows.iter().map(|r| r.iter().map(|s| poly(g, s)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_one_examples() {
        let g = preset("A1").unwrap();
        let trivial = EquivariantModule::trivial(&g, vec![0]).unwrap();
        let op = trivial.descent_check(0).unwrap();
        assert!(op.matrix.get(0, 0).is_zero());

        let sign = EquivariantModule::new(&g, vec![0], vec![matrix(&g, &[&["-1"]])]).unwrap();
        let fail = sign.descent_check(0).unwrap_err();
        assert_eq!(fail.generator, 0);
        assert_eq!(fail.remainder, poly(&g, "2"));
    }

    #[test]
    fn rejects_non_actions() {
        let g = preset("A1").unwrap();
        let bad = EquivariantModule::new(&g, vec![0], vec![matrix(&g, &[&["2"]])]);
        assert!(matches!(bad, Err(EquivariantError::NotAnAction { .. })));
        let g = preset("A2").unwrap();
        // s1 acts by -1, s2 trivially: (s1 s2)^3 = -1
        let bad = EquivariantModule::new(&g, vec![0], vec![matrix(&g, &[&["-1"]]), matrix(&g, &[&["1"]])]);
        assert!(matches!(bad, Err(EquivariantError::NotAnAction { relation, .. }) if relation.contains("^3")));
        let ungraded = EquivariantModule::new(
            &g,
            vec![0, 0],
            vec![matrix(&g, &[&["1", "a1"], &["0", "1"]]); 2],
        );
        assert!(matches!(ungraded, Err(EquivariantError::NotGraded { .. })));
    }

    #[test]
    fn twist_descends_and_braids() {
        let g = preset("A2").unwrap();
        let p = matrix(&g, &[&["1", "a1*a2", "a2^3"], &["0", "1", "a1"], &["0", "0", "1"]]);
        let m = EquivariantModule::unitriangular_twist(&g, vec![0, 2, 3], &p).unwrap();
        let g1 = m.descent_check(0).unwrap();
        let g2 = m.descent_check(1).unwrap();
        assert!(m.braid_check(&g1, &g2).is_zero());
        for a in 0..3 {
            let e = m.basis_vector(a);
            assert!(m.apply_g(&g1, &m.apply_g(&g1, &e)).iter().all(Polynomial::is_zero));
        }
        // the twist is visible: S_1 is not the identity
        assert_ne!(*m.action(0), PolyMatrix::identity(&g, 3));
    }

    #[test]
    fn bundled_fixtures_match_expectations() {
        for fx in bundled_fixtures().unwrap() {
            let g = fx.build_group().unwrap();
            let m = fx.module(&g).unwrap();
            for (i, &want) in fx.expect_descent.iter().enumerate() {
                assert_eq!(m.descent_check(i).is_ok(), want, "{} s{}", fx.name, i + 1);
            }
        }
    }
}
