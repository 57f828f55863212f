//! Finite Coxeter groups in their geometric representation.
//!
//! Elements are exact matrices acting on the simple-root coordinates, with
//! `s_i(a_j) = a_j - A[i][j] * a_i` for the Cartan matrix `A`. The element
//! table is built once by breadth-first closure under right multiplication
//! and then only read.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar, ScalarError};

pub const DEFAULT_ENUMERATION_CAP: usize = 14_400;

const POSITIVITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoxeterError {
    #[error("malformed Coxeter matrix: {0}")]
    Malformed(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("m({i},{j}) = {m}: no preset field for 2cos(pi/{m}); supply a Cartan matrix and field")]
    UnsupportedOrder { i: usize, j: usize, m: u32 },
    #[error("group has more than {0} elements (not finite under the enumeration cap)")]
    NotFiniteUnderCap(usize),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("identity violation: {0}")]
    IdentityViolation(String),
}

/// Index into a group's element table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ElementId(pub u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Square matrix over a [`Field`], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn identity(field: &Field, n: usize) -> Self {
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        Matrix { n, entries }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.n + c]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let field = self.entries[0].field();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = field.zero();
                for k in 0..n {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a * other.get(k, c));
                }
                entries.push(acc);
            }
        }
        Matrix { n, entries }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// One entry of the element table.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: Matrix,
    /// Lexicographically least reduced word (zero-based generator indices).
    pub word: Vec<usize>,
    pub length: usize,
}

/// Positive-root data of the rank-two subsystem spanned by `a_k, a_l`.
#[derive(Clone, Debug)]
pub struct Rank2RootData {
    pub k: usize,
    pub l: usize,
    pub m: u32,
    /// `a_k, s_k(a_l), s_k s_l(a_k), ...`
    pub sequence_k: Vec<Polynomial>,
    /// `a_l, s_l(a_k), s_l s_k(a_l), ...`
    pub sequence_l: Vec<Polynomial>,
    /// Product of the positive roots.
    pub delta: Polynomial,
}

pub struct CoxeterGroup {
    rank: usize,
    coxeter: Vec<Vec<u32>>,
    cartan: Vec<Vec<Scalar>>,
    field: Field,
    label: Option<String>,
    elements: Vec<GroupElement>,
    index: HashMap<Matrix, ElementId>,
    right_mul: Vec<Vec<ElementId>>,
    left_mul: Vec<Vec<ElementId>>,
    root_images: Vec<Vec<Polynomial>>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGroup")
            .field("label", &self.label)
            .field("coxeter", &self.coxeter)
            .field("field", &self.field)
            .field("order", &self.elements.len())
            .finish()
    }
}

/// `4cos^2(pi/m)` in `field`, when the preset table knows it.
fn four_cos_sq(field: &Field, m: u32) -> Option<Scalar> {
    match m {
        2 => Some(field.zero()),
        3 => Some(field.one()),
        4 => Some(field.from_int(2)),
        6 => Some(field.from_int(3)),
        // 4cos^2(pi/5) = c^2 = c + 1 with c = 2cos(pi/5)
        5 if *field == Field::two_cos_pi_over(5).ok()? => Some(&field.generator() + &field.one()),
        _ => None,
    }
}

/// `-2cos(pi/m)` in `field`, or `None` when it does not live there.
fn default_cartan_entry(field: &Field, m: u32) -> Option<Scalar> {
    match m {
        2 => Some(field.zero()),
        3 => Some(field.from_int(-1)),
        4..=6 if *field == Field::two_cos_pi_over(m).ok()? => Some(-field.generator()),
        _ => None,
    }
}

/// The field a Coxeter matrix gets when none is configured: `Q` when every
/// order is at most 3, otherwise `Q(2cos(pi/m))` for the single larger `m`.
pub fn default_field(coxeter: &[Vec<u32>]) -> Result<Field, CoxeterError> {
    let n = coxeter.len();
    let mut needed: BTreeSet<u32> = BTreeSet::new();
    for (i, row) in coxeter.iter().enumerate() {
        for j in 0..n {
            let m = row.get(j).copied().unwrap_or(2);
            if i != j && m > 3 {
                if m > 6 {
                    return Err(CoxeterError::UnsupportedOrder {
                        i: i + 1,
                        j: j + 1,
                        m,
                    });
                }
                needed.insert(m);
            }
        }
    }
    match needed.len() {
        0 => Ok(Field::rationals()),
        1 => Ok(Field::two_cos_pi_over(*needed.iter().next().unwrap())?),
        _ => {
            let m = *needed.iter().last().unwrap();
            Err(CoxeterError::UnsupportedOrder { i: 0, j: 0, m })
        }
    }
}

impl CoxeterGroup {
    /// Validates the data and enumerates the group under the default cap.
    pub fn new(
        coxeter: Vec<Vec<u32>>,
        cartan: Option<Vec<Vec<Scalar>>>,
        field: Option<Field>,
    ) -> Result<Self, CoxeterError> {
        Self::with_cap(coxeter, cartan, field, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(
        coxeter: Vec<Vec<u32>>,
        cartan: Option<Vec<Vec<Scalar>>>,
        field: Option<Field>,
        cap: usize,
    ) -> Result<Self, CoxeterError> {
        let n = coxeter.len();
        if n == 0 {
            return Err(CoxeterError::Malformed("empty matrix".into()));
        }
        for (i, row) in coxeter.iter().enumerate() {
            if row.len() != n {
                return Err(CoxeterError::Malformed(format!("row {} has wrong length", i + 1)));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(CoxeterError::Malformed("diagonal entries must be 1".into()));
                }
                if i != j && (m < 2 || m != coxeter[j][i]) {
                    return Err(CoxeterError::Malformed(format!(
                        "m({},{}) must be symmetric and at least 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let field = match (field, &cartan) {
            (Some(f), _) => f,
            (None, Some(rows)) => rows
                .iter()
                .flatten()
                .next()
                .map(|s| s.field().clone())
                .ok_or_else(|| CoxeterError::InvalidCartan("empty Cartan matrix".into()))?,
            (None, None) => default_field(&coxeter)?,
        };

        let cartan = match cartan {
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CoxeterError::InvalidCartan("shape does not match".into()));
                }
                if rows.iter().flatten().any(|s| *s.field() != field) {
                    return Err(CoxeterError::InvalidCartan(
                        "entries outside the configured field".into(),
                    ));
                }
                rows
            }
            None => {
                let mut rows = vec![vec![field.zero(); n]; n];
                for i in 0..n {
                    for j in 0..n {
                        rows[i][j] = if i == j {
                            field.from_int(2)
                        } else {
                            default_cartan_entry(&field, coxeter[i][j]).ok_or(
                                CoxeterError::UnsupportedOrder {
                                    i: i + 1,
                                    j: j + 1,
                                    m: coxeter[i][j],
                                },
                            )?
                        };
                    }
                }
                rows
            }
        };

        for i in 0..n {
            if cartan[i][i] != field.from_int(2) {
                return Err(CoxeterError::InvalidCartan(format!(
                    "A({0},{0}) must be 2",
                    i + 1
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = coxeter[i][j];
                let want = four_cos_sq(&field, m).ok_or(CoxeterError::UnsupportedOrder {
                    i: i + 1,
                    j: j + 1,
                    m,
                })?;
                let got = &cartan[i][j] * &cartan[j][i];
                if got != want {
                    return Err(CoxeterError::InvalidCartan(format!(
                        "A({i1},{j1})*A({j1},{i1}) = {got}, expected 4cos^2(pi/{m}) = {want}",
                        i1 = i + 1,
                        j1 = j + 1
                    )));
                }
                if (m == 2) != cartan[i][j].is_zero() {
                    return Err(CoxeterError::InvalidCartan(format!(
                        "A({},{}) must vanish exactly when m = 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let mut group = CoxeterGroup {
            rank: n,
            coxeter,
            cartan,
            field,
            label: None,
            elements: Vec::new(),
            index: HashMap::new(),
            right_mul: Vec::new(),
            left_mul: Vec::new(),
            root_images: Vec::new(),
        };
        group.enumerate_table(cap)?;
        Ok(group)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Matrix of `s_i`: column `j` holds the coordinates of `s_i(a_j)`.
    pub fn reflection_matrix(&self, i: usize) -> Matrix {
        let n = self.rank;
        let mut m = Matrix::identity(&self.field, n);
        for j in 0..n {
            let e = &m.entries[i * n + j] - &self.cartan[i][j];
            m.entries[i * n + j] = e;
        }
        m
    }

    fn enumerate_table(&mut self, cap: usize) -> Result<(), CoxeterError> {
        let n = self.rank;
        let gens: Vec<Matrix> = (0..n).map(|i| self.reflection_matrix(i)).collect();
        let id = Matrix::identity(&self.field, n);
        self.index.insert(id.clone(), ElementId(0));
        self.elements.push(GroupElement {
            matrix: id,
            word: vec![],
            length: 0,
        });
        let mut right_mul: Vec<Vec<Option<ElementId>>> = vec![vec![None; n]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let prod = self.elements[x].matrix.mul(g);
                let mut cand = self.elements[x].word.clone();
                cand.push(i);
                let len = self.elements[x].length + 1;
                let y = match self.index.get(&prod) {
                    Some(&y) => {
                        let e = &mut self.elements[y.index()];
                        if e.length == len && cand < e.word {
                            e.word = cand;
                        }
                        y
                    }
                    None => {
                        if self.elements.len() >= cap {
                            return Err(CoxeterError::NotFiniteUnderCap(cap));
                        }
                        let y = ElementId(self.elements.len() as u32);
                        self.index.insert(prod.clone(), y);
                        self.elements.push(GroupElement {
                            matrix: prod,
                            word: cand,
                            length: len,
                        });
                        right_mul.push(vec![None; n]);
                        queue.push_back(y.index());
                        y
                    }
                };
                right_mul[x][i] = Some(y);
            }
        }
        self.right_mul = right_mul
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap).collect())
            .collect();
        self.left_mul = self
            .elements
            .iter()
            .map(|e| {
                gens.iter()
                    .map(|g| self.index[&g.mul(&e.matrix)])
                    .collect()
            })
            .collect();
        self.root_images = self
            .elements
            .iter()
            .map(|e| {
                (0..n)
                    .map(|j| {
                        let col: Vec<Scalar> = (0..n).map(|r| e.matrix.get(r, j).clone()).collect();
                        Polynomial::linear(&self.field, &col)
                    })
                    .collect()
            })
            .collect();
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.coxeter[i][j]
    }

    pub fn cartan(&self) -> &[Vec<Scalar>] {
        &self.cartan
    }

    /// `<a_i^vee, a_j>`.
    pub fn pairing(&self, i: usize, j: usize) -> &Scalar {
        &self.cartan[i][j]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn generator(&self, i: usize) -> ElementId {
        self.right_mul[0][i]
    }

    pub fn element(&self, w: ElementId) -> &GroupElement {
        &self.elements[w.index()]
    }

    pub fn elements(&self) -> impl Iterator<Item = (ElementId, &GroupElement)> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, e)| (ElementId(i as u32), e))
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.elements[w.index()].length
    }

    pub fn word(&self, w: ElementId) -> &[usize] {
        &self.elements[w.index()].word
    }

    pub fn lookup(&self, m: &Matrix) -> Option<ElementId> {
        self.index.get(m).copied()
    }

    /// `w * s_i`
    pub fn mul_gen_right(&self, w: ElementId, i: usize) -> ElementId {
        self.right_mul[w.index()][i]
    }

    /// `s_i * w`
    pub fn mul_gen_left(&self, i: usize, w: ElementId) -> ElementId {
        self.left_mul[w.index()][i]
    }

    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.word(y)
            .iter()
            .fold(x, |acc, &i| self.mul_gen_right(acc, i))
    }

    pub fn from_word(&self, word: &[usize]) -> ElementId {
        word.iter()
            .fold(self.identity(), |acc, &i| self.mul_gen_right(acc, i))
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        let mut word = self.word(w).to_vec();
        word.reverse();
        self.from_word(&word)
    }

    /// `(-1)^length(w)`
    pub fn sign(&self, w: ElementId) -> Scalar {
        if self.length(w).is_multiple_of(2) {
            self.field.one()
        } else {
            self.field.from_int(-1)
        }
    }

    pub fn longest_element(&self) -> ElementId {
        self.elements()
            .max_by_key(|(_, e)| e.length)
            .map(|(id, _)| id)
            .unwrap()
    }

    /// Every reduced word of `w`, sorted.
    pub fn reduced_words(&self, w: ElementId) -> Vec<Vec<usize>> {
        if self.length(w) == 0 {
            return vec![vec![]];
        }
        let mut out = BTreeSet::new();
        for i in 0..self.rank {
            let v = self.mul_gen_right(w, i);
            if self.length(v) < self.length(w) {
                for mut word in self.reduced_words(v) {
                    word.push(i);
                    out.insert(word);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.length(self.from_word(word)) == word.len()
    }

    pub fn simple_root(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.field, self.rank, i)
    }

    /// Images `w(a_1), ..., w(a_n)` as linear forms.
    pub fn root_images(&self, w: ElementId) -> Vec<Polynomial> {
        self.root_images[w.index()].clone()
    }

    /// Image of a linear form under `w`.
    pub fn act_linear(&self, w: ElementId, v: &Polynomial) -> Polynomial {
        v.substitute(&self.root_images[w.index()])
    }

    /// Elements of the parabolic subgroup generated by `s_k, s_l`.
    pub fn dihedral_subgroup(&self, k: usize, l: usize) -> Vec<ElementId> {
        let mut seen = BTreeSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for i in [k, l] {
                let y = self.mul_gen_right(x, i);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Alternating word `start, other, start, ...` of the given length.
    pub fn alternating(start: usize, other: usize, len: usize) -> Vec<usize> {
        (0..len)
            .map(|j| if j % 2 == 0 { start } else { other })
            .collect()
    }

    /// Longest element of the parabolic subgroup `<s_k, s_l>`.
    pub fn dihedral_longest(&self, k: usize, l: usize) -> ElementId {
        self.from_word(&Self::alternating(k, l, self.m(k, l) as usize))
    }

    /// The two alternating root sequences of the pair `(k, l)` and their
    /// common product. Fails loudly if the sequences disagree as sets or
    /// have different products.
    pub fn rank2_root_data(&self, k: usize, l: usize) -> Result<Rank2RootData, CoxeterError> {
        if k == l || k >= self.rank || l >= self.rank {
            return Err(CoxeterError::Malformed(format!(
                "pair ({}, {}) is not a pair of distinct generators",
                k + 1,
                l + 1
            )));
        }
        let m = self.m(k, l);
        let seq = |a: usize, b: usize| -> Vec<Polynomial> {
            (0..m as usize)
                .map(|j| {
                    let w = self.from_word(&Self::alternating(a, b, j));
                    let root = if j % 2 == 0 { a } else { b };
                    self.act_linear(w, &self.simple_root(root))
                })
                .collect()
        };
        let sequence_k = seq(k, l);
        let sequence_l = seq(l, k);
        let set_k: BTreeSet<&Polynomial> = sequence_k.iter().collect();
        let set_l: BTreeSet<&Polynomial> = sequence_l.iter().collect();
        if set_k.len() != m as usize || set_l.len() != m as usize {
            return Err(CoxeterError::IdentityViolation(format!(
                "root sequence for ({}, {}) repeats a root",
                k + 1,
                l + 1
            )));
        }
        if set_k != set_l {
            return Err(CoxeterError::IdentityViolation(format!(
                "root sequences for ({}, {}) differ as sets",
                k + 1,
                l + 1
            )));
        }
        let one = Polynomial::one(&self.field, self.rank);
        let delta = sequence_k.iter().fold(one.clone(), |acc, r| &acc * r);
        let delta_l = sequence_l.iter().fold(one, |acc, r| &acc * r);
        if delta != delta_l {
            return Err(CoxeterError::IdentityViolation(format!(
                "root products for ({}, {}) differ",
                k + 1,
                l + 1
            )));
        }
        Ok(Rank2RootData {
            k,
            l,
            m,
            sequence_k,
            sequence_l,
            delta,
        })
    }

    /// Numeric check that every root in the sequences is a nonnegative
    /// combination of `a_k, a_l`. Diagnostic only.
    pub fn positivity_soft_check(&self, data: &Rank2RootData) -> bool {
        data.sequence_k.iter().chain(&data.sequence_l).all(|r| {
            r.terms().all(|(mono, c)| {
                let v = mono.0.iter().position(|&e| e == 1);
                matches!(v, Some(v) if v == data.k || v == data.l)
                    && c.to_f64() > -POSITIVITY_TOLERANCE
            })
        })
    }
}

/// Enumerates `group` under an explicit cap, returning every element.
pub fn enumerate(group: &CoxeterGroup, cap: usize) -> Result<Vec<GroupElement>, CoxeterError> {
    if cap == 0 {
        return Err(CoxeterError::Malformed("cap must be positive".into()));
    }
    let fresh = CoxeterGroup::with_cap(
        group.coxeter.clone(),
        Some(group.cartan.clone()),
        Some(group.field.clone()),
        cap,
    )?;
    Ok(fresh.elements)
}

fn ints(field: &Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
        .collect()
}

pub const PRESETS: &[&str] = &[
    "A1", "A1xA1", "A2", "B2", "B2_sym", "G2", "G2_sym", "I2_5", "A3", "B3", "H3",
];

/// Shipped groups. `B2`, `G2` and `B3` use integral (crystallographic)
/// Cartan matrices; the `_sym` variants use the symmetric `-2cos(pi/m)` one.
pub fn preset(name: &str) -> Result<CoxeterGroup, CoxeterError> {
    let q = Field::rationals();
    let group = match name {
        "A1" => CoxeterGroup::new(vec![vec![1]], None, None)?,
        "A1xA1" => CoxeterGroup::new(vec![vec![1, 2], vec![2, 1]], None, None)?,
        "A2" => CoxeterGroup::new(vec![vec![1, 3], vec![3, 1]], None, None)?,
        "B2" => CoxeterGroup::new(
            vec![vec![1, 4], vec![4, 1]],
            Some(ints(&q, &[&[2, -1], &[-2, 2]])),
            Some(q),
        )?,
        "B2_sym" => CoxeterGroup::new(vec![vec![1, 4], vec![4, 1]], None, None)?,
        "G2" => CoxeterGroup::new(
            vec![vec![1, 6], vec![6, 1]],
            Some(ints(&q, &[&[2, -1], &[-3, 2]])),
            Some(q),
        )?,
        "G2_sym" => CoxeterGroup::new(vec![vec![1, 6], vec![6, 1]], None, None)?,
        "I2_5" => CoxeterGroup::new(vec![vec![1, 5], vec![5, 1]], None, None)?,
        "A3" => CoxeterGroup::new(
            vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]],
            None,
            None,
        )?,
        "B3" => CoxeterGroup::new(
            vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]],
            Some(ints(&q, &[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]])),
            Some(q),
        )?,
        "H3" => CoxeterGroup::new(
            vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]],
            None,
            None,
        )?,
        other => return Err(CoxeterError::UnknownPreset(other.to_string())),
    };
    Ok(group.with_label(name))
}
