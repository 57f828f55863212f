//! The nil Hecke algebra with polynomial coefficients: elements are finite
//! sums `sum_w f_w D_w` with the coefficients written on the left.
//!
//! Multiplication commutes polynomials leftward with
//! `D_i f = D_i(f) + s_i(f) D_i` and contracts `D_i D_w` to `D_{s_i w}` when
//! the length goes up, to zero otherwise.

use std::collections::{BTreeMap, HashMap};

use crate::coxeter::{CoxeterError, CoxeterGroup, ElementId};
use crate::poly::{act, demazure, demazure_word, PolyError, Polynomial};

/// `sum_w f_w D_w`, no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<ElementId, Polynomial>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &Polynomial)> {
        self.terms.iter().map(|(w, f)| (*w, f))
    }

    pub fn coeff(&self, w: ElementId) -> Option<&Polynomial> {
        self.terms.get(&w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: ElementId, f: &Polynomial) {
        if f.is_zero() {
            return;
        }
        let next = match self.terms.get(&w) {
            Some(g) => g + f,
            None => f.clone(),
        };
        if next.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, next);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(*w, f);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(*w, &-f);
        }
        out
    }

    /// Left multiplication by a polynomial.
    pub fn scale_left(&self, f: &Polynomial) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, g) in &self.terms {
            out.add_term(*w, &(f * g));
        }
        out
    }
}

/// Operations of the nil Hecke algebra attached to a group.
#[derive(Clone, Copy, Debug)]
pub struct NilHecke<'g> {
    group: &'g CoxeterGroup,
}

impl<'g> NilHecke<'g> {
    pub fn new(group: &'g CoxeterGroup) -> Self {
        NilHecke { group }
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.group
    }

    pub fn one(&self) -> HeckeElement {
        self.from_poly(&Polynomial::one(self.group.field(), self.group.rank()))
    }

    pub fn from_poly(&self, f: &Polynomial) -> HeckeElement {
        let mut out = HeckeElement::zero();
        out.add_term(self.group.identity(), f);
        out
    }

    /// The basis element `D_w`.
    pub fn basis(&self, w: ElementId) -> HeckeElement {
        let mut out = HeckeElement::zero();
        out.add_term(w, &Polynomial::one(self.group.field(), self.group.rank()));
        out
    }

    pub fn gen(&self, i: usize) -> HeckeElement {
        self.basis(self.group.generator(i))
    }

    /// `D_i * D_w`
    fn contract(&self, i: usize, w: ElementId) -> Option<ElementId> {
        let v = self.group.mul_gen_left(i, w);
        (self.group.length(v) > self.group.length(w)).then_some(v)
    }

    /// `D_i * x`
    pub fn left_mul_gen(&self, i: usize, x: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, h) in &x.terms {
            out.add_term(*w, &demazure(self.group, i, h));
            if let Some(v) = self.contract(i, *w) {
                out.add_term(v, &act(self.group, self.group.generator(i), h));
            }
        }
        out
    }

    /// `sum_v f_v (D_v b)`, with `D_v b` built letter by letter and shared
    /// between elements whose canonical words end the same way.
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut memo: HashMap<ElementId, HeckeElement> = HashMap::new();
        let mut out = HeckeElement::zero();
        for (v, f) in &a.terms {
            let dv_b = self.basis_times(*v, b, &mut memo);
            out = out.add(&dv_b.scale_left(f));
        }
        out
    }

    fn basis_times(
        &self,
        v: ElementId,
        b: &HeckeElement,
        memo: &mut HashMap<ElementId, HeckeElement>,
    ) -> HeckeElement {
        if let Some(x) = memo.get(&v) {
            return x.clone();
        }
        let x = match self.group.word(v).split_first() {
            None => b.clone(),
            Some((&i, rest)) => {
                let tail = self.group.from_word(rest);
                let inner = self.basis_times(tail, b, memo);
                self.left_mul_gen(i, &inner)
            }
        };
        memo.insert(v, x.clone());
        x
    }

    /// Product of `D_{i_1} ... D_{i_r}` for an arbitrary word.
    pub fn word(&self, word: &[usize]) -> HeckeElement {
        word.iter()
            .rev()
            .fold(self.one(), |acc, &i| self.left_mul_gen(i, &acc))
    }

    /// `sum_w f_w * D_w(f)`, with `D_w` applied along its canonical word.
    pub fn act(&self, a: &HeckeElement, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.group.field(), self.group.rank());
        for (w, coeff) in &a.terms {
            let dw = demazure_word(self.group, self.group.word(*w), f);
            out = &out + &(coeff * &dw);
        }
        out
    }

    /// `1 - a_i D_i`, the image of `s_i`.
    pub fn embed_gen(&self, i: usize) -> HeckeElement {
        self.one()
            .sub(&self.gen(i).scale_left(&self.group.simple_root(i)))
    }

    /// Product of `1 - a_i D_i` along `word`.
    pub fn embed_word(&self, word: &[usize]) -> HeckeElement {
        word.iter().rev().fold(self.one(), |acc, &i| {
            let d = self.left_mul_gen(i, &acc);
            acc.sub(&d.scale_left(&self.group.simple_root(i)))
        })
    }

    pub fn embed_group(&self, w: ElementId) -> HeckeElement {
        self.embed_word(self.group.word(w))
    }

    /// Graded degree `deg f_w - length(w)` when constant across terms.
    pub fn degree(&self, a: &HeckeElement) -> Option<i64> {
        let mut degs = a.terms.iter().map(|(w, f)| {
            f.homogeneous_degree()
                .map(|d| d as i64 - self.group.length(*w) as i64)
        });
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    /// `Delta_kl^{-1} * sum_{g in <s_k, s_l>} sign(g) g(f)`, by exact division
    /// through each positive root of the pair.
    pub fn antisymmetrizer_over_delta(
        &self,
        k: usize,
        l: usize,
        f: &Polynomial,
    ) -> Result<Polynomial, CoxeterError> {
        let g = self.group;
        let data = g.rank2_root_data(k, l)?;
        let mut sum = Polynomial::zero(g.field(), g.rank());
        for w in g.dihedral_subgroup(k, l) {
            sum = &sum + &act(g, w, f).scale(&g.sign(w));
        }
        let mut quotient = sum;
        for root in &data.sequence_k {
            quotient = quotient.divide_exact(root).map_err(|e| match e {
                PolyError::NotDivisible { remainder } => CoxeterError::IdentityViolation(format!(
                    "antisymmetrization not divisible by {root}: remainder {remainder}"
                )),
                other => CoxeterError::IdentityViolation(other.to_string()),
            })?;
        }
        Ok(quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::preset;

    #[test]
    fn nil_relations() {
        let g = preset("A2").unwrap();
        let h = NilHecke::new(&g);
        assert!(h.mul(&h.gen(0), &h.gen(0)).is_zero());
        let s10 = g.from_word(&[1, 0]);
        let w0 = g.longest_element();
        assert_eq!(h.mul(&h.gen(0), &h.basis(s10)), h.basis(w0));
        assert_eq!(h.word(&[0, 1, 0]), h.word(&[1, 0, 1]));
        assert!(h.word(&[0, 1, 0, 1]).is_zero());
    }

    #[test]
    fn commutation_with_root() {
        let g = preset("A2").unwrap();
        let h = NilHecke::new(&g);
        let a0 = g.simple_root(0);
        let prod = h.mul(&h.gen(0), &h.from_poly(&a0));
        let f = g.field();
        assert_eq!(
            prod.coeff(g.identity()),
            Some(&Polynomial::from_int(f, 2, 2))
        );
        assert_eq!(prod.coeff(g.generator(0)), Some(&-&a0));
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn action_examples() {
        let g = preset("A2").unwrap();
        let h = NilHecke::new(&g);
        let a0 = g.simple_root(0);
        assert_eq!(
            h.act(&h.gen(0), &a0),
            Polynomial::from_int(g.field(), 2, 2)
        );
        let x = Polynomial::parse(g.field(), 2, "a1^2 + a2").unwrap();
        let c = Polynomial::parse(g.field(), 2, "3*a2").unwrap();
        assert_eq!(h.act(&h.from_poly(&c), &x), &c * &x);
        let delta = g.rank2_root_data(0, 1).unwrap().delta;
        assert_eq!(
            h.act(&h.basis(g.longest_element()), &delta),
            Polynomial::from_int(g.field(), 2, 6)
        );
    }

    #[test]
    fn embedding_examples() {
        let g = preset("A2").unwrap();
        let h = NilHecke::new(&g);
        let s0 = h.embed_group(g.generator(0));
        assert_eq!(s0.coeff(g.identity()), Some(&Polynomial::one(g.field(), 2)));
        assert_eq!(s0.coeff(g.generator(0)), Some(&-g.simple_root(0)));
        assert_eq!(h.embed_group(g.identity()), h.one());
        assert_eq!(h.embed_word(&[0, 1, 0]), h.embed_word(&[1, 0, 1]));
    }

    #[test]
    fn antisymmetrizer_examples() {
        let g = preset("A2").unwrap();
        let h = NilHecke::new(&g);
        let delta = g.rank2_root_data(0, 1).unwrap().delta;
        let six = Polynomial::from_int(g.field(), 2, 6);
        assert_eq!(h.antisymmetrizer_over_delta(0, 1, &delta).unwrap(), six);
        let one = Polynomial::one(g.field(), 2);
        assert!(h.antisymmetrizer_over_delta(0, 1, &one).unwrap().is_zero());
    }
}
