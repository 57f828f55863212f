//! Derived quantities checked against independent computations: float root
//! systems, closed-form Poincare polynomials, and the rewriting engine as a
//! second evaluator for certificates.

use nilhecke::certificate::{cert_a1, cert_lemma3, cert_main, Certificate, CertificateGenerator};
use nilhecke::coxeter::{preset, CoxeterGroup, PRESETS};
use nilhecke::descent::{rewrite, DescentAlgebra, DescentElement, FormalExpression, GWord, Strategy};
use nilhecke::nilhecke::NilHecke;
use nilhecke::poly::{act, Polynomial};

const RANK2: [&str; 7] = ["A1xA1", "A2", "B2", "B2_sym", "I2_5", "G2", "G2_sym"];

fn cartan_f64(g: &CoxeterGroup) -> Vec<Vec<f64>> {
    g.cartan()
        .iter()
        .map(|row| row.iter().map(|s| s.to_f64()).collect())
        .collect()
}

fn reflect(a: &[Vec<f64>], i: usize, v: &[f64]) -> Vec<f64> {
    let c: f64 = v.iter().enumerate().map(|(j, x)| x * a[i][j]).sum();
    let mut out = v.to_vec();
    out[i] -= c;
    out
}

/// Orbit of the simple roots `a_k, a_l` under `s_k, s_l`, keeping the
/// positive half.
fn float_positive_roots(g: &CoxeterGroup, k: usize, l: usize) -> Vec<Vec<f64>> {
    let a = cartan_f64(g);
    let n = g.rank();
    let unit = |i: usize| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect::<Vec<f64>>();
    let same = |x: &[f64], y: &[f64]| x.iter().zip(y).all(|(p, q)| (p - q).abs() < 1e-9);
    let mut roots: Vec<Vec<f64>> = vec![unit(k), unit(l)];
    let mut frontier = roots.clone();
    while let Some(v) = frontier.pop() {
        for i in [k, l] {
            let w = reflect(&a, i, &v);
            if !roots.iter().any(|r| same(r, &w)) {
                roots.push(w.clone());
                frontier.push(w);
            }
        }
    }
    roots.into_iter().filter(|r| r.iter().all(|x| *x > -1e-9)).collect()
}

fn points(n: usize) -> Vec<Vec<f64>> {
    (0..5)
        .map(|t| (0..n).map(|j| 0.37 + 0.61 * t as f64 - 0.29 * j as f64 + 0.05 * (t * j) as f64).collect())
        .collect()
}

#[test]
fn group_orders_and_length_distributions() {
    // Poincare polynomial prod_i [d_i]_q from the degrees of basic invariants
    let degrees: &[(&str, &[u32])] = &[
        ("A1", &[2]),
        ("A1xA1", &[2, 2]),
        ("A2", &[2, 3]),
        ("B2", &[2, 4]),
        ("B2_sym", &[2, 4]),
        ("I2_5", &[2, 5]),
        ("G2", &[2, 6]),
        ("G2_sym", &[2, 6]),
        ("A3", &[2, 3, 4]),
        ("B3", &[2, 4, 6]),
        ("H3", &[2, 6, 10]),
    ];
    assert_eq!(degrees.len(), PRESETS.len());
    for (name, ds) in degrees {
        let mut poincare = vec![1u64];
        for d in *ds {
            let mut next = vec![0u64; poincare.len() + *d as usize - 1];
            for (i, c) in poincare.iter().enumerate() {
                for j in 0..*d as usize {
                    next[i + j] += c;
                }
            }
            poincare = next;
        }
        let g = preset(name).unwrap();
        let mut by_length = vec![0u64; poincare.len()];
        for (w, _) in g.elements() {
            by_length[g.length(w)] += 1;
        }
        assert_eq!(by_length, poincare, "{name}");
        assert_eq!(g.order() as u64, poincare.iter().sum::<u64>(), "{name}");
    }
}

#[test]
fn lengths_count_inversions() {
    for name in ["A2", "B2", "I2_5", "A3", "B3", "H3"] {
        let g = preset(name).unwrap();
        let a = cartan_f64(&g);
        let n = g.rank();
        // close the simple roots under all reflections, keeping positive ones
        let mut all: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        let mut frontier = all.clone();
        while let Some(v) = frontier.pop() {
            for i in 0..n {
                let w = reflect(&a, i, &v);
                if w.iter().all(|x| *x > -1e-9)
                    && !all.iter().any(|r| r.iter().zip(&w).all(|(p, q)| (p - q).abs() < 1e-9))
                {
                    all.push(w.clone());
                    frontier.push(w);
                }
            }
        }
        for (w, el) in g.elements() {
            let inversions = all
                .iter()
                .filter(|r| {
                    let mut v = r.to_vec();
                    for &i in el.word.iter().rev() {
                        v = reflect(&a, i, &v);
                    }
                    v.iter().any(|x| *x < -1e-9)
                })
                .count();
            assert_eq!(inversions, g.length(w), "{name} {:?}", el.word);
        }
        let longest = g.length(g.longest_element());
        assert_eq!(all.len(), longest, "{name}");
    }
}

#[test]
fn delta_is_the_product_of_float_positive_roots() {
    for name in RANK2.iter().chain(&["A3", "B3", "H3"]) {
        let g = preset(name).unwrap();
        for k in 0..g.rank() {
            for l in k + 1..g.rank() {
                let data = g.rank2_root_data(k, l).unwrap();
                let roots = float_positive_roots(&g, k, l);
                assert_eq!(roots.len(), data.m as usize, "{name} ({k},{l})");
                for p in points(g.rank()) {
                    let expect: f64 = roots
                        .iter()
                        .map(|r| r.iter().zip(&p).map(|(x, y)| x * y).sum::<f64>())
                        .product();
                    let got = data.delta.eval_f64(&p);
                    assert!((got - expect).abs() <= 1e-9 * expect.abs().max(1.0), "{name}: {got} vs {expect}");
                }
            }
        }
    }
}

#[test]
fn a2_delta_closed_form() {
    let g = preset("A2").unwrap();
    let data = g.rank2_root_data(0, 1).unwrap();
    let expect = Polynomial::parse(g.field(), 2, "a1*a2*(a1 + a2)").unwrap();
    assert_eq!(data.delta, expect);
}

#[test]
fn key_identity_through_the_rewriting_engine() {
    for name in RANK2.iter().chain(&["A3", "B3"]) {
        let g = preset(name).unwrap();
        for k in 0..g.rank() {
            for l in k + 1..g.rank() {
                let m = g.m(k, l) as usize;
                let alt = |a: usize, b: usize| {
                    FormalExpression::Product(
                        CoxeterGroup::alternating(a, b, m)
                            .into_iter()
                            .map(|i| FormalExpression::reflection(&g, i))
                            .collect(),
                    )
                };
                let b = FormalExpression::Sum(vec![alt(k, l), FormalExpression::Neg(Box::new(alt(l, k)))]);
                let lhs = rewrite(&g, &b, Strategy::LeftmostFirst);
                let delta = g.rank2_root_data(k, l).unwrap().delta;
                let signed = if m.is_multiple_of(2) { delta } else { -&delta };
                let mut rhs = DescentElement::zero();
                rhs.add_term(GWord::alternating(k, l, m), &signed);
                rhs.add_term(GWord::alternating(l, k, m), &-&signed);
                assert_eq!(lhs, rhs, "{name} ({k},{l})");
            }
        }
    }
}

/// Re-evaluates a certificate with the rewriting engine instead of the
/// algebra's product.
fn rewrite_certificate(g: &CoxeterGroup, cert: &Certificate) -> DescentElement {
    let to_expr = |x: &DescentElement| {
        FormalExpression::Sum(
            x.terms()
                .map(|(w, f)| {
                    let mut factors = vec![FormalExpression::Poly(f.clone())];
                    factors.extend(w.letters().iter().map(|&i| FormalExpression::G(i)));
                    FormalExpression::Product(factors)
                })
                .collect(),
        )
    };
    let mut braid = std::collections::HashMap::new();
    let mut terms = Vec::new();
    for t in &cert.terms {
        let (i, j) = t.gen;
        let b = braid.entry(t.gen).or_insert_with(|| {
            let m = g.m(i, j) as usize;
            let alt = |a: usize, b: usize| {
                FormalExpression::Product(
                    CoxeterGroup::alternating(a, b, m)
                        .into_iter()
                        .map(|x| FormalExpression::reflection(g, x))
                        .collect(),
                )
            };
            let e = FormalExpression::Sum(vec![alt(i, j), FormalExpression::Neg(Box::new(alt(j, i)))]);
            to_expr(&rewrite(g, &e, Strategy::LeftmostFirst))
        });
        let q = Polynomial::constant(g.field(), g.rank(), t.q.clone());
        terms.push(FormalExpression::Product(vec![
            FormalExpression::Poly(&q * &t.p),
            to_expr(&t.left),
            b.clone(),
            to_expr(&t.right),
        ]));
    }
    rewrite(g, &FormalExpression::Sum(terms), Strategy::RightmostFirst)
}

#[test]
fn certificates_re_evaluate_independently() {
    for name in RANK2 {
        let g = preset(name).unwrap();
        let alg = DescentAlgebra::new(&g);
        let cert = cert_main(&g, 0, 1).unwrap();
        assert_eq!(rewrite_certificate(&g, &cert), cert.target, "{name}");
        assert_eq!(cert.target, alg.demazure_braid_element(0, 1).unwrap());
    }
}

#[test]
fn lemma_and_a1_certificates_re_evaluate() {
    for name in ["A2", "B2", "I2_5"] {
        let g = preset(name).unwrap();
        let gen = CertificateGenerator::new(&g, 0, 1).unwrap();
        let xi = gen.longest_dword();
        for start in [0, 1] {
            let a1 = cert_a1(&g, 0, 1, start).unwrap();
            assert_eq!(rewrite_certificate(&g, &a1), a1.target, "{name} A1 {start}");
            for n in 1..=2 {
                let c = cert_lemma3(&g, 0, 1, &xi, n, start).unwrap();
                assert_eq!(rewrite_certificate(&g, &c), c.target, "{name} n={n} start={start}");
            }
        }
    }
}

#[test]
fn certificate_terms_are_homogeneous_of_target_degree() {
    for name in RANK2 {
        let g = preset(name).unwrap();
        let m = g.m(0, 1) as i64;
        let alg = DescentAlgebra::new(&g);
        let cert = cert_main(&g, 0, 1).unwrap();
        assert_eq!(cert.target.degree(), Some(-m));
        for t in &cert.terms {
            let x = nilhecke::certificate::expand_term(&alg, t).unwrap();
            assert!(x.is_zero() || x.degree() == Some(-m), "{name}: {:?}", x.degree());
        }
    }
}

#[test]
fn d_w0_of_delta_is_twice_m() {
    for name in RANK2.iter().chain(&["A3", "B3", "H3"]) {
        let g = preset(name).unwrap();
        let h = NilHecke::new(&g);
        for k in 0..g.rank() {
            for l in k + 1..g.rank() {
                let data = g.rank2_root_data(k, l).unwrap();
                let dihedral = g.dihedral_subgroup(k, l);
                assert_eq!(dihedral.len(), 2 * data.m as usize);
                // g(Delta) = sign(g) Delta, so the antisymmetrizer of Delta is 2m Delta
                for &w in &dihedral {
                    assert_eq!(act(&g, w, &data.delta), data.delta.scale(&g.sign(w)));
                }
                let two_m = Polynomial::from_int(g.field(), g.rank(), 2 * data.m as i64);
                let word = CoxeterGroup::alternating(k, l, data.m as usize);
                assert_eq!(h.act(&h.word(&word), &data.delta), two_m, "{name}");
            }
        }
    }
}
