//! Randomised and exhaustive checks of the structural invariants.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::{all_bundles, simplicial_fixtures, two_crossed_inputs, Oracle};
use hocalg::cli::bundle::Structure;
use hocalg::exactalg::matrix::{add_vec, sub_vec};
use hocalg::exactalg::{kernel, semidirect, Field, FinAlgebra, LinMap, Subspace, Vector};
use hocalg::functors::lambda_functor;
use hocalg::pairings::{c_pairing_raw, gen_p};
use hocalg::structures::{PreCrossedModule, QuadraticModule};

/// Every algebra appearing in a catalog fixture, up to dimension 10.
fn algebras() -> &'static [(String, FinAlgebra)] {
    static CELL: OnceLock<Vec<(String, FinAlgebra)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for (name, b) in all_bundles() {
            let list: Vec<&FinAlgebra> = match &b.structure {
                Structure::Algebra(a) => vec![a],
                Structure::Simplicial(e) => e.levels().iter().collect(),
                Structure::PreCrossed(p) | Structure::Crossed(p) => vec![&p.c, &p.r],
                Structure::TwoCrossed(t) => vec![&t.c2, &t.c1, &t.c0],
                Structure::Square(s) => vec![&s.l, &s.m, &s.n, &s.r],
                Structure::Quadratic(q) => vec![&q.l, &q.m, &q.n],
            };
            for (k, a) in list.into_iter().enumerate() {
                if a.dim() > 0 && a.dim() <= 10 {
                    out.push((format!("{name}#{k}"), a.clone()));
                }
            }
        }
        out
    })
}

fn pre_crossed_modules() -> &'static [(String, PreCrossedModule)] {
    static CELL: OnceLock<Vec<(String, PreCrossedModule)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for (name, b) in all_bundles() {
            if let Structure::PreCrossed(p) | Structure::Crossed(p) = &b.structure {
                out.push((name.clone(), p.clone()));
            }
        }
        for (name, t) in two_crossed_inputs() {
            out.push((format!("bottom({name})"), t.bottom()));
        }
        out
    })
}

fn quadratic_modules() -> &'static [(String, QuadraticModule)] {
    static CELL: OnceLock<Vec<(String, QuadraticModule)>> = OnceLock::new();
    CELL.get_or_init(|| two_crossed_inputs().iter().map(|(n, t)| (format!("lambda({n})"), lambda_functor(t).unwrap().0)).collect())
}

fn vec_of(field: Field, coeffs: &[i64], dim: usize) -> Vector {
    (0..dim).map(|i| field.int(coeffs.get(i).copied().unwrap_or(0))).collect()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 10)
}

/// An invertible matrix: identity plus random entries just above the
/// diagonal, then a cyclic shift of the columns. Kept sparse so the
/// transformed structure constants stay small.
fn invertible(field: Field, n: usize, entries: &[i64], shift: usize) -> LinMap {
    let mut m = LinMap::identity(field, n);
    for j in 1..n {
        m.set(j - 1, j, field.int(entries[j % entries.len()]));
    }
    let perm = LinMap::from_fn(field, n, n, |j| {
        let mut v = vec![field.zero(); n];
        v[(j + shift) % n] = field.one();
        v
    });
    m.compose(&perm)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn subspace_bases_are_canonical(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs(), c in coeffs(), k in -3i64..=3) {
        let (_, alg) = &algebras()[pick.index(algebras().len())];
        let f = alg.field();
        let d = alg.dim();
        let (u, v, w) = (vec_of(f, &a, d), vec_of(f, &b, d), vec_of(f, &c, d));
        // Same span, different spanning lists.
        let mix: Vector = u.iter().zip(&v).map(|(x, y)| x.clone() + y.clone() * f.int(k)).collect();
        let s1 = Subspace::span(f, d, vec![u.clone(), v.clone(), w.clone()]);
        let s2 = Subspace::span(f, d, vec![w, mix, v.clone(), u.clone(), add_vec(&u, &v)]);
        prop_assert_eq!(s1.basis(), s2.basis());
        prop_assert_eq!(&s1, &s2);
    }

    #[test]
    fn ideal_closure_is_idempotent_and_matches_the_oracle(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs()) {
        let (name, alg) = &algebras()[pick.index(algebras().len())];
        let f = alg.field();
        let gens = vec![vec_of(f, &a, alg.dim()), vec_of(f, &b, alg.dim())];
        let i = alg.ideal_closure(gens.clone());
        prop_assert!(alg.is_ideal(&i));
        prop_assert!(common::is_ideal_brute(alg, &i));
        let again = alg.ideal_closure(i.basis().to_vec());
        prop_assert_eq!(&again, &i);
        prop_assert_eq!(i.dim(), Oracle::of(f).ideal_dim(alg, &gens, &[]), "{}", name);
    }

    #[test]
    fn quotient_kernel_is_the_ideal(pick in any::<prop::sample::Index>(), a in coeffs()) {
        let (_, alg) = &algebras()[pick.index(algebras().len())];
        let f = alg.field();
        let i = alg.ideal_closure(vec![vec_of(f, &a, alg.dim())]);
        let q = alg.quotient(&i, "q").unwrap();
        prop_assert_eq!(kernel(&q.proj), i);
        prop_assert!(q.proj.compose(&q.lift).is_identity());
        // The quotient product is the product of representatives.
        for x in 0..q.algebra.dim() {
            for y in 0..q.algebra.dim() {
                let lhs = q.algebra.basis_product(x, y).clone();
                let rhs = q.proj.apply(&alg.mul(&q.lift.column(x), &q.lift.column(y)));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn product_span_is_symmetric(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let (_, alg) = &algebras()[pick.index(algebras().len())];
        let f = alg.field();
        let d = alg.dim();
        let u = Subspace::span(f, d, vec![vec_of(f, &a, d), vec_of(f, &b, d)]);
        let v = Subspace::span(f, d, vec![vec_of(f, &c, d)]);
        prop_assert_eq!(alg.product_span(&u, &v), alg.product_span(&v, &u));
    }

    #[test]
    fn pairings_are_bilinear(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let fx = simplicial_fixtures();
        let e = fx.iter().find(|(n, _)| n == "dk/Q").unwrap().1;
        let f = e.field();
        let pairs = gen_p(3);
        let p = &pairs[pick.index(pairs.len())];
        let nx = e.moore_space(3 - p.alpha.len());
        let ny = e.moore_space(3 - p.beta.len());
        let comb = |s: &Subspace, k: &[i64]| -> Vector {
            s.basis().iter().enumerate().fold(vec![f.zero(); s.ambient_dim()], |acc, (i, v)| {
                let scaled: Vector = v.iter().map(|x| x.clone() * f.int(k[i % k.len()])).collect();
                add_vec(&acc, &scaled)
            })
        };
        let (x, x2, y) = (comb(&nx, &a), comb(&nx, &b), comb(&ny, &c));
        let lhs = c_pairing_raw(e, &p.alpha, &p.beta, &add_vec(&x, &x2), &y);
        let rhs = add_vec(&c_pairing_raw(e, &p.alpha, &p.beta, &x, &y), &c_pairing_raw(e, &p.alpha, &p.beta, &x2, &y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn peiffer_elements_are_bilinear(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let (_, p) = &pre_crossed_modules()[pick.index(pre_crossed_modules().len())];
        let f = p.c.field();
        let d = p.c.dim();
        let (x, x2, y) = (vec_of(f, &a, d), vec_of(f, &b, d), vec_of(f, &c, d));
        prop_assert_eq!(p.peiffer(&add_vec(&x, &x2), &y), add_vec(&p.peiffer(&x, &y), &p.peiffer(&x2, &y)));
        prop_assert_eq!(p.peiffer(&y, &add_vec(&x, &x2)), add_vec(&p.peiffer(&y, &x), &p.peiffer(&y, &x2)));
    }

    #[test]
    fn omega_antisymmetry_at_the_level_of_delta(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs()) {
        let qs = quadratic_modules();
        let (name, q) = &qs[pick.index(qs.len())];
        let f = q.m.field();
        let d = q.m.dim();
        let (x, y) = (vec_of(f, &a, d), vec_of(f, &b, d));
        let (cx, cy) = (q.proj_c.apply(&x), q.proj_c.apply(&y));
        let lhs = q.delta.apply(&sub_vec(&q.omega.apply(&cx, &cy), &q.omega.apply(&cy, &cx)));
        let xy = sub_vec(&q.m.mul(&x, &y), &q.m.mul(&y, &x));
        let rhs = add_vec(&xy, &sub_vec(&q.act_m.act(&q.boundary.apply(&x), &y), &q.act_m.act(&q.boundary.apply(&y), &x)));
        prop_assert_eq!(lhs, rhs, "{}", name);
    }

    #[test]
    fn semidirect_product_restricts_to_the_factors(pick in any::<prop::sample::Index>(), a in coeffs(), b in coeffs()) {
        let squares = common::square_inputs();
        let (_, s) = &squares[pick.index(squares.len())];
        let f = s.m.field();
        let sd = semidirect(&s.m, &s.n, &s.n_on_m());
        let (dm, dn) = (s.m.dim(), s.n.dim());
        let pad_m = |v: Vector| -> Vector { v.into_iter().chain((0..dn).map(|_| f.zero())).collect() };
        let pad_n = |v: Vector| -> Vector { (0..dm).map(|_| f.zero()).chain(v).collect() };
        let (m1, m2) = (vec_of(f, &a, dm), vec_of(f, &b, dm));
        let (n1, n2) = (vec_of(f, &a, dn), vec_of(f, &b, dn));
        prop_assert_eq!(sd.mul(&pad_m(m1.clone()), &pad_m(m2.clone())), pad_m(s.m.mul(&m1, &m2)));
        prop_assert_eq!(sd.mul(&pad_n(n1.clone()), &pad_n(n2.clone())), pad_n(s.n.mul(&n1, &n2)));
    }

    #[test]
    fn canonical_scalars(num in -50i64..50, den in 1i64..30, k in 1i64..9) {
        let f = Field::Rational;
        let a = f.parse(&format!("{num}/{den}")).unwrap();
        let b = f.parse(&format!("{}/{}", num * k, den * k)).unwrap();
        let c = f.parse(&format!("{}/{}", -num * k, -den * k)).unwrap();
        prop_assert_eq!(a.render(), b.render());
        prop_assert_eq!(a.render(), c.render());
        prop_assert!(!a.render().contains("/-"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn simplicial_homotopy_ignores_the_basis(pick in any::<prop::sample::Index>(), entries in prop::collection::vec(-2i64..=2, 1..12), shift in 0usize..5) {
        let fx = simplicial_fixtures();
        let (name, e) = &fx[pick.index(fx.len())];
        let ps: Vec<LinMap> = e.levels().iter().map(|a| invertible(e.field(), a.dim(), &entries, shift % a.dim().max(1))).collect();
        let g = e.change_basis(&ps).unwrap();
        // Revalidating the 27-dimensional rational level costs too much per case.
        if e.levels().iter().all(|a| a.dim() <= 16) {
            prop_assert!(g.validate().is_valid(), "{}", name);
        }
        prop_assert_eq!(g.homotopy().unwrap(), e.homotopy().unwrap(), "{}", name);
        prop_assert_eq!(g.moore().unwrap().dims(), e.moore().unwrap().dims());
    }
}

#[test]
fn square_ideal_is_generated_by_squares() {
    for (name, a) in algebras() {
        if a.field().characteristic() == 2 {
            continue;
        }
        let mut gens = Vec::new();
        for i in 0..a.dim() {
            gens.push(a.mul(&a.unit(i), &a.unit(i)));
            for j in 0..i {
                let s = add_vec(&a.unit(i), &a.unit(j));
                gens.push(a.mul(&s, &s));
            }
        }
        assert_eq!(a.ideal_closure(gens), a.square(), "{name}");
    }
}

#[test]
fn triple_peiffer_elements_are_peiffer_elements() {
    for (name, p) in pre_crossed_modules() {
        assert!(p.p3().is_subspace_of(&p.p2()), "{name}");
    }
}

#[test]
fn top_boundary_of_the_lifting_lands_in_p2() {
    for (name, t) in two_crossed_inputs() {
        assert!(t.d1.compose(&t.d2).is_zero(), "{name}");
        let img = t.lifting_image().image(&t.d2);
        assert!(img.is_subspace_of(&t.bottom().p2()), "{name}");
    }
}

#[test]
fn constant_simplicial_homotopy_is_in_degree_zero() {
    for (name, e) in simplicial_fixtures().iter().filter(|(n, _)| n.starts_with("const/")) {
        let pi = e.homotopy().unwrap();
        assert_eq!(pi.dim(0), Some(e.level(0).dim()), "{name}");
        for n in 1..e.truncation() {
            assert_eq!(pi.dim(n), Some(0), "{name}");
        }
    }
}

#[test]
fn moore_spaces_sit_in_every_face_kernel_intersection() {
    for (name, e) in simplicial_fixtures() {
        for n in 1..=e.truncation() {
            let ne = e.moore_space(n);
            let all: Vec<usize> = (0..n).collect();
            assert_eq!(ne, e.kernel_k(n, &all), "{name}");
            for i in 0..n {
                assert!(ne.is_subspace_of(&e.kernel_k(n, &[i])), "{name}");
            }
        }
    }
}

#[test]
fn nerve_moore_complex_has_length_one() {
    for (name, e) in simplicial_fixtures().iter().filter(|(n, _)| n.starts_with("nerve/")) {
        let dims = e.moore().unwrap().dims();
        assert!(dims[2..].iter().all(|&d| d == 0), "{name}: {dims:?}");
    }
}
