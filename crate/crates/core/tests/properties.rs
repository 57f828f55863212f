//! Randomized algebraic laws, with inputs drawn by proptest rather than the
//! in-crate sampler.

use std::sync::OnceLock;

use nilhecke::coxeter::{preset, CoxeterGroup};
use nilhecke::descent::{rewrite, DescentAlgebra, DescentElement, FormalExpression, GWord, Strategy as Order};
use nilhecke::nilhecke::{HeckeElement, NilHecke};
use nilhecke::poly::{act, demazure, demazure_word, Monomial, Polynomial};
use nilhecke::scalar::{ratio, Field, Scalar};
use proptest::prelude::*;

const NAMES: [&str; 6] = ["A2", "B2", "B2_sym", "I2_5", "G2_sym", "A3"];

fn groups() -> &'static Vec<CoxeterGroup> {
    static G: OnceLock<Vec<CoxeterGroup>> = OnceLock::new();
    G.get_or_init(|| NAMES.iter().map(|n| preset(n).unwrap()).collect())
}

/// Raw polynomial data: (exponents, numerator, denominator, c-coefficient).
type RawPoly = Vec<(Vec<u32>, i64, i64, i64)>;

fn raw_poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (
            prop::collection::vec(0..=max_exp, 3),
            -6i64..=6,
            1i64..=3,
            -2i64..=2,
        ),
        0..=max_terms,
    )
}

fn build(g: &CoxeterGroup, raw: &RawPoly) -> Polynomial {
    let f = g.field();
    let terms = raw.iter().map(|(e, n, d, c)| {
        let mut s = f.from_rational(ratio(*n, *d));
        if f.degree() > 1 {
            s = &s + &(&f.generator() * &f.from_int(*c));
        }
        (Monomial(e[..g.rank()].to_vec()), s)
    });
    Polynomial::from_terms(f, g.rank(), terms)
}

fn gword(g: &CoxeterGroup, raw: &[usize]) -> GWord {
    let mut letters: Vec<usize> = Vec::new();
    for &x in raw {
        let i = x % g.rank();
        if letters.last() != Some(&i) {
            letters.push(i);
        }
    }
    GWord::new(letters).unwrap()
}

fn descent(g: &CoxeterGroup, raw: &[(Vec<usize>, RawPoly)]) -> DescentElement {
    let mut out = DescentElement::zero();
    for (w, p) in raw {
        out.add_term(gword(g, w), &build(g, p));
    }
    out
}

fn hecke(g: &CoxeterGroup, raw: &[(Vec<usize>, RawPoly)]) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (w, p) in raw {
        let letters: Vec<usize> = w.iter().map(|x| x % g.rank()).collect();
        out.add_term(g.from_word(&letters), &build(g, p));
    }
    out
}

fn raw_element() -> impl Strategy<Value = Vec<(Vec<usize>, RawPoly)>> {
    prop::collection::vec((prop::collection::vec(0usize..3, 0..4), raw_poly(2, 2)), 0..3)
}

/// A random expression tree over `G_i`, `s_i` and polynomials.
#[derive(Clone, Debug)]
enum RawExpr {
    Poly(RawPoly),
    G(usize),
    S(usize),
    Sum(Vec<RawExpr>),
    Product(Vec<RawExpr>),
    Neg(Box<RawExpr>),
}

fn raw_expr() -> impl Strategy<Value = RawExpr> {
    let leaf = prop_oneof![
        raw_poly(2, 2).prop_map(RawExpr::Poly),
        (0usize..3).prop_map(RawExpr::G),
        (0usize..3).prop_map(RawExpr::S),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(RawExpr::Sum),
            prop::collection::vec(inner.clone(), 1..4).prop_map(RawExpr::Product),
            inner.prop_map(|e| RawExpr::Neg(Box::new(e))),
        ]
    })
}

fn expr(g: &CoxeterGroup, r: &RawExpr) -> FormalExpression {
    match r {
        RawExpr::Poly(p) => FormalExpression::Poly(build(g, p)),
        RawExpr::G(i) => FormalExpression::G(i % g.rank()),
        RawExpr::S(i) => FormalExpression::reflection(g, i % g.rank()),
        RawExpr::Sum(xs) => FormalExpression::Sum(xs.iter().map(|x| expr(g, x)).collect()),
        RawExpr::Product(xs) => FormalExpression::Product(xs.iter().map(|x| expr(g, x)).collect()),
        RawExpr::Neg(x) => FormalExpression::Neg(Box::new(expr(g, x))),
    }
}

fn scalar(f: &Field, (n, d, c): (i64, i64, i64)) -> Scalar {
    let s = f.from_rational(ratio(n, d));
    if f.degree() > 1 {
        &s + &(&f.generator() * &f.from_int(c))
    } else {
        s
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn demazure_squares_to_zero(gi in 0..NAMES.len(), i in 0usize..3, p in raw_poly(5, 4)) {
        let g = &groups()[gi];
        let i = i % g.rank();
        let f = build(g, &p);
        prop_assert!(demazure(g, i, &demazure(g, i, &f)).is_zero());
    }

    #[test]
    fn twisted_leibniz(gi in 0..NAMES.len(), i in 0usize..3, p in raw_poly(4, 3), q in raw_poly(4, 3)) {
        let g = &groups()[gi];
        let i = i % g.rank();
        let (f, h) = (build(g, &p), build(g, &q));
        let lhs = demazure(g, i, &(&f * &h));
        let rhs = &(&demazure(g, i, &f) * &h) + &(&act(g, g.generator(i), &f) * &demazure(g, i, &h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_braid_relations(gi in 0..NAMES.len(), p in raw_poly(4, 4)) {
        let g = &groups()[gi];
        let f = build(g, &p);
        for k in 0..g.rank() {
            for l in k + 1..g.rank() {
                let m = g.m(k, l) as usize;
                prop_assert_eq!(
                    demazure_word(g, &CoxeterGroup::alternating(k, l, m), &f),
                    demazure_word(g, &CoxeterGroup::alternating(l, k, m), &f)
                );
            }
        }
    }

    #[test]
    fn act_is_a_group_action(gi in 0..NAMES.len(), x in 0usize..1000, y in 0usize..1000, p in raw_poly(4, 3)) {
        let g = &groups()[gi];
        let ids: Vec<_> = g.elements().map(|(w, _)| w).collect();
        let (u, v) = (ids[x % ids.len()], ids[y % ids.len()]);
        let f = build(g, &p);
        prop_assert_eq!(act(g, u, &act(g, v, &f)), act(g, g.mul(u, v), &f));
    }

    #[test]
    fn hecke_product_is_associative(gi in 0..NAMES.len(), a in raw_element(), b in raw_element(), c in raw_element()) {
        let g = &groups()[gi];
        let h = NilHecke::new(g);
        let (a, b, c) = (hecke(g, &a), hecke(g, &b), hecke(g, &c));
        prop_assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
    }

    #[test]
    fn hecke_acts_on_polynomials(gi in 0..NAMES.len(), a in raw_element(), b in raw_element(), p in raw_poly(4, 4)) {
        let g = &groups()[gi];
        let h = NilHecke::new(g);
        let (a, b, f) = (hecke(g, &a), hecke(g, &b), build(g, &p));
        prop_assert_eq!(h.act(&h.mul(&a, &b), &f), h.act(&a, &h.act(&b, &f)));
    }

    #[test]
    fn rewriting_is_strategy_independent(gi in 0..NAMES.len(), r in raw_expr()) {
        let g = &groups()[gi];
        let e = expr(g, &r);
        let left = rewrite(g, &e, Order::LeftmostFirst);
        let right = rewrite(g, &e, Order::RightmostFirst);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, DescentAlgebra::new(g).evaluate(&e));
    }

    #[test]
    fn projection_is_multiplicative(gi in 0..NAMES.len(), a in raw_element(), b in raw_element()) {
        let g = &groups()[gi];
        let alg = DescentAlgebra::new(g);
        let h = NilHecke::new(g);
        let (a, b) = (descent(g, &a), descent(g, &b));
        prop_assert_eq!(
            alg.project_to_hecke(&alg.mul(&a, &b)),
            h.mul(&alg.project_to_hecke(&a), &alg.project_to_hecke(&b))
        );
    }

    #[test]
    fn descent_product_is_associative(gi in 0..NAMES.len(), a in raw_element(), b in raw_element(), c in raw_element()) {
        let g = &groups()[gi];
        let alg = DescentAlgebra::new(g);
        let (a, b, c) = (descent(g, &a), descent(g, &b), descent(g, &c));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }

    #[test]
    fn field_axioms(fi in 0usize..4, a in (-9i64..=9, 1i64..=4, -3i64..=3), b in (-9i64..=9, 1i64..=4, -3i64..=3), c in (-9i64..=9, 1i64..=4, -3i64..=3)) {
        let f = [Field::rationals(), Field::preset("sqrt2").unwrap(), Field::preset("golden").unwrap(), Field::preset("sqrt3").unwrap()][fi].clone();
        let (a, b, c) = (scalar(&f, a), scalar(&f, b), scalar(&f, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert!(((&a * &b).to_f64() - a.to_f64() * b.to_f64()).abs() < 1e-9);
    }

    #[test]
    fn polynomial_text_round_trip(gi in 0..NAMES.len(), p in raw_poly(6, 4)) {
        let g = &groups()[gi];
        let f = build(g, &p);
        prop_assert_eq!(Polynomial::parse(g.field(), g.rank(), &f.to_string()).unwrap(), f);
    }
}
